//! Root data, Weyl groups, Coxeter elements, and Frobenius twists.
//!
//! A root datum here is a character lattice X with a fixed basis, the set
//! of roots and coroots as integer vectors, and the X x Y pairing. Weyl
//! elements act both as unimodular matrices on X and as permutations of
//! the root list; the permutation is the cheap representation for group
//! closure, the matrix is what torus point counts consume.
//!
//! Simple roots are numbered in Bourbaki order throughout, so Coxeter
//! elements (the product s_1 s_2 ... s_r, rightmost applied first) are
//! reproducible bit for bit.

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootDataError {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("group too large: |W| exceeds cap {0}")]
    GroupTooLarge(usize),
    #[error("matrix does not permute the root set")]
    NotRootPermutation,
    #[error("invalid root datum: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsogenyFlavor {
    Adjoint,
    SimplyConnected,
    /// GL_n-style: X is the full character lattice of the diagonal torus.
    GlStyle,
}

/// Lie type label. `A(n)` is A_{n-1} realized in GL_n coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieType {
    A(usize),
    B(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl LieType {
    pub fn parse(s: &str) -> Option<LieType> {
        let s = s.trim();
        match s.to_ascii_uppercase().as_str() {
            "G2" => Some(LieType::G2),
            "F4" => Some(LieType::F4),
            "E6" => Some(LieType::E6),
            "E7" => Some(LieType::E7),
            "E8" => Some(LieType::E8),
            t => {
                if let Some(n) = t.strip_prefix("GL") {
                    return n.parse().ok().map(LieType::A);
                }
                if let Some(n) = t.strip_prefix('A') {
                    // A<k> means A_k, i.e. GL_{k+1} coordinates
                    return n.parse::<usize>().ok().map(|k| LieType::A(k + 1));
                }
                if let Some(n) = t.strip_prefix('B') {
                    return n.parse().ok().map(LieType::B);
                }
                None
            }
        }
    }

    /// Coxeter number.
    pub fn coxeter_number(&self) -> usize {
        match self {
            LieType::A(n) => *n,
            LieType::B(n) => 2 * n,
            LieType::G2 => 6,
            LieType::F4 => 12,
            LieType::E6 => 12,
            LieType::E7 => 18,
            LieType::E8 => 30,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        fn fact(n: u64) -> u64 {
            (1..=n).product()
        }
        match self {
            LieType::A(n) => fact(*n as u64),
            LieType::B(n) => fact(*n as u64) << n,
            LieType::G2 => 12,
            LieType::F4 => 1152,
            LieType::E6 => 51840,
            LieType::E7 => 2_903_040,
            LieType::E8 => 696_729_600,
        }
    }

    pub fn root_count(&self) -> usize {
        match self {
            LieType::A(n) => n * (n - 1),
            LieType::B(n) => 2 * n * n,
            LieType::G2 => 12,
            LieType::F4 => 48,
            LieType::E6 => 72,
            LieType::E7 => 126,
            LieType::E8 => 240,
        }
    }

    fn rank(&self) -> usize {
        match self {
            LieType::A(n) => *n,
            LieType::B(n) => *n,
            LieType::G2 => 2,
            LieType::F4 => 4,
            LieType::E6 => 6,
            LieType::E7 => 7,
            LieType::E8 => 8,
        }
    }

    /// Rank of the derived group (one less than the GL rank for type A).
    pub fn semisimple_rank(&self) -> usize {
        match self {
            LieType::A(n) => n - 1,
            t => t.rank(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            LieType::A(n) => format!("GL{n}"),
            LieType::B(n) => format!("B{n}"),
            LieType::G2 => "G2".into(),
            LieType::F4 => "F4".into(),
            LieType::E6 => "E6".into(),
            LieType::E7 => "E7".into(),
            LieType::E8 => "E8".into(),
        }
    }
}

/// Cartan matrix in the convention C[i][j] = <alpha_j, alpha_i^vee>, so
/// the simple reflection acts by s_i(x) = x - (C x)_i alpha_i.
fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let simply_laced = |rank: usize, edges: &[(usize, usize)]| -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; rank]; rank];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in edges {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        }
        c
    };
    match t {
        LieType::A(n) => {
            let r = n - 1;
            simply_laced(r, &(1..r).map(|i| (i, i + 1)).collect::<Vec<_>>())
        }
        LieType::B(n) => {
            let mut c = simply_laced(n, &(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>());
            // alpha_n is short: <alpha_{n-1}, alpha_n^vee> = -2
            c[n - 1][n - 2] = -2;
            c[n - 2][n - 1] = -1;
            c
        }
        LieType::G2 => vec![vec![2, -3], vec![-1, 2]],
        LieType::F4 => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        LieType::E6 => simply_laced(6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]),
        LieType::E7 => simply_laced(7, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]),
        LieType::E8 => simply_laced(8, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]),
    }
}

/// A root datum: lattices, roots, coroots, pairing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootDatum {
    pub lie_type: LieType,
    pub flavor: IsogenyFlavor,
    pub rank: usize,
    /// Roots as vectors in the X basis.
    pub roots: Vec<Vec<i64>>,
    /// Coroot of roots[i], as a vector in the Y basis.
    pub coroots: Vec<Vec<i64>>,
    /// pairing[i][j] = <e_i^X, e_j^Y>.
    pub pairing: Vec<Vec<i64>>,
    /// Indices into `roots` of the simple roots, Bourbaki order.
    pub simple: Vec<usize>,
}

impl RootDatum {
    pub fn label(&self) -> String {
        self.lie_type.label()
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.pairing[i][j] * y[j];
            }
        }
        s
    }

    fn root_index(&self) -> HashMap<&[i64], usize> {
        self.roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.as_slice(), i))
            .collect()
    }

    /// The permutation of root indices induced by a lattice automorphism.
    pub fn matrix_root_permutation(&self, m: &[Vec<i64>]) -> Result<Vec<u32>, RootDataError> {
        let idx = self.root_index();
        let mut perm = Vec::with_capacity(self.roots.len());
        for r in &self.roots {
            let img = apply(m, r);
            match idx.get(img.as_slice()) {
                Some(&j) => perm.push(j as u32),
                None => return Err(RootDataError::NotRootPermutation),
            }
        }
        Ok(perm)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let alpha = &self.roots[self.simple[i]];
        let alpha_v = &self.coroots[self.simple[i]];
        let n = self.rank;
        // s(e_j) = e_j - <e_j, alpha^vee> alpha; row-major matrix
        let mut matrix = vec![vec![0i64; n]; n];
        for j in 0..n {
            let mut e = vec![0i64; n];
            e[j] = 1;
            let c = self.pair(&e, alpha_v);
            for (r, row) in matrix.iter_mut().enumerate() {
                row[j] = i64::from(r == j) - c * alpha[r];
            }
        }
        let perm = self
            .matrix_root_permutation(&matrix)
            .expect("simple reflection permutes roots");
        WeylElement {
            matrix,
            perm,
            word_len: Some(1),
        }
    }

    pub fn identity_weyl(&self) -> WeylElement {
        let n = self.rank;
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement {
            matrix,
            perm: (0..self.roots.len() as u32).collect(),
            word_len: Some(0),
        }
    }

    /// Product of the simple reflections in ascending Bourbaki order:
    /// s_1 s_2 ... s_r, with s_r applied first.
    pub fn coxeter_element(&self) -> WeylElement {
        let mut w = self.identity_weyl();
        for i in 0..self.simple.len() {
            w = w.compose(&self.simple_reflection(i));
        }
        w.word_len = Some(self.simple.len() as u32);
        w
    }

    /// Verify the structural invariants of the datum. Used by tests and by
    /// catalog deserialization.
    pub fn validate(&self) -> Result<(), RootDataError> {
        if self.roots.len() != self.coroots.len() {
            return Err(RootDataError::Invalid("roots/coroots length".into()));
        }
        for (r, c) in self.roots.iter().zip(&self.coroots) {
            if self.pair(r, c) != 2 {
                return Err(RootDataError::Invalid(format!(
                    "<alpha, alpha^vee> != 2 for {r:?}"
                )));
            }
        }
        if self.roots.len() != self.lie_type.root_count() {
            return Err(RootDataError::Invalid(format!(
                "expected {} roots, found {}",
                self.lie_type.root_count(),
                self.roots.len()
            )));
        }
        // every simple reflection must permute the root set
        for i in 0..self.simple.len() {
            let s = self.simple_reflection(i);
            self.matrix_root_permutation(&s.matrix)?;
        }
        Ok(())
    }
}

pub fn apply(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
}

/// An element of the Weyl group (or any lattice automorphism that
/// permutes the roots).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    /// Action on X, row major.
    pub matrix: Vec<Vec<i64>>,
    /// Image of each root index under the action.
    pub perm: Vec<u32>,
    pub word_len: Option<u32>,
}

impl WeylElement {
    /// self after other: (self.compose(other))(x) = self(other(x)).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let matrix = mat_mul(&self.matrix, &other.matrix);
        let perm = other.perm.iter().map(|&i| self.perm[i as usize]).collect();
        WeylElement {
            matrix,
            perm,
            word_len: match (self.word_len, other.word_len) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        }
    }

    pub fn order(&self) -> u32 {
        let mut m = self.matrix.clone();
        let mut k = 1;
        while !is_identity(&m) {
            m = mat_mul(&m, &self.matrix);
            k += 1;
            assert!(k < 10_000, "element order runaway");
        }
        k
    }
}

/// A Frobenius twist: w sigma with sigma a diagram automorphism
/// (identity for the split groups in the catalog).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Twist {
    pub tau: Vec<Vec<i64>>,
    /// Root permutation induced by tau.
    pub perm: Vec<u32>,
    pub order: u32,
    pub label: String,
}

impl Twist {
    pub fn from_weyl(w: &WeylElement, label: &str) -> Twist {
        Twist {
            tau: w.matrix.clone(),
            perm: w.perm.clone(),
            order: w.order(),
            label: label.to_string(),
        }
    }

    pub fn with_automorphism(
        d: &RootDatum,
        w: &WeylElement,
        sigma: &[Vec<i64>],
        label: &str,
    ) -> Result<Twist, RootDataError> {
        let tau = mat_mul(&w.matrix, sigma);
        let perm = d.matrix_root_permutation(&tau)?;
        let order = WeylElement {
            matrix: tau.clone(),
            perm: perm.clone(),
            word_len: None,
        }
        .order();
        Ok(Twist {
            tau,
            perm,
            order,
            label: label.to_string(),
        })
    }

    pub fn split(d: &RootDatum) -> Twist {
        Twist::from_weyl(&d.identity_weyl(), "split")
    }

    pub fn coxeter(d: &RootDatum) -> Twist {
        Twist::from_weyl(&d.coxeter_element(), "coxeter")
    }
}

/// Build a root datum from the catalog.
///
/// Supported: `A(n)` in GL_n coordinates (GlStyle), `A(2)` simply
/// connected (the SL_2 weight lattice), `B(n)` and the exceptional types
/// as adjoint data with X the root lattice in the simple-root basis.
pub fn build_root_datum(t: LieType, flavor: IsogenyFlavor) -> Result<RootDatum, RootDataError> {
    match (t, flavor) {
        (LieType::A(n), IsogenyFlavor::GlStyle) => {
            if n < 2 {
                return Err(RootDataError::UnsupportedType(format!("GL{n}")));
            }
            let mut roots = Vec::new();
            let mut coroots = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let mut v = vec![0i64; n];
                        v[i] = 1;
                        v[j] = -1;
                        roots.push(v.clone());
                        coroots.push(v);
                    }
                }
            }
            let pairing = (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect();
            let simple = (0..n - 1)
                .map(|i| {
                    roots
                        .iter()
                        .position(|r| {
                            r.iter().enumerate().all(|(k, &v)| {
                                v == if k == i {
                                    1
                                } else if k == i + 1 {
                                    -1
                                } else {
                                    0
                                }
                            })
                        })
                        .unwrap()
                })
                .collect();
            let d = RootDatum {
                lie_type: t,
                flavor,
                rank: n,
                roots,
                coroots,
                pairing,
                simple,
            };
            d.validate()?;
            Ok(d)
        }
        (LieType::A(2), IsogenyFlavor::SimplyConnected) => {
            // SL_2: X = Z omega, alpha = 2 omega, alpha^vee the basis of Y.
            let d = RootDatum {
                lie_type: t,
                flavor,
                rank: 1,
                roots: vec![vec![-2], vec![2]],
                coroots: vec![vec![-1], vec![1]],
                pairing: vec![vec![1]],
                simple: vec![1],
            };
            // rank/root-count invariants differ from GL coordinates here,
            // so only the pairing invariant is checked.
            for (r, c) in d.roots.iter().zip(&d.coroots) {
                assert_eq!(d.pair(r, c), 2);
            }
            Ok(d)
        }
        (LieType::B(n), IsogenyFlavor::Adjoint) => {
            if n < 2 {
                return Err(RootDataError::UnsupportedType(format!("B{n}")));
            }
            Ok(adjoint_from_cartan(t))
        }
        (
            LieType::G2 | LieType::F4 | LieType::E6 | LieType::E7 | LieType::E8,
            IsogenyFlavor::Adjoint,
        ) => Ok(adjoint_from_cartan(t)),
        _ => Err(RootDataError::UnsupportedType(format!("{t:?} {flavor:?}"))),
    }
}

/// Adjoint datum: X = root lattice in the simple-root basis, Y its dual,
/// pairing the identity matrix, coroot i = row i of the Cartan matrix.
/// Roots and coroots generated by closing the simple ones under the
/// simple reflections.
fn adjoint_from_cartan(t: LieType) -> RootDatum {
    let c = cartan_matrix(t);
    let rank = t.rank();
    // pairs (root in alpha-basis, coroot in fundamental-coweight basis)
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for (i, c_row) in c.iter().enumerate() {
        let mut alpha = vec![0i64; rank];
        alpha[i] = 1;
        if seen.insert(alpha.clone()) {
            queue.push((alpha, c_row.clone()));
        }
    }
    let mut k = 0;
    while k < queue.len() {
        let (x, xv) = queue[k].clone();
        k += 1;
        for i in 0..rank {
            // s_i(x) = x - (C x)_i alpha_i ;  s_i(xv) = xv - xv_i alpha_i^vee
            let cx_i: i64 = (0..rank).map(|j| c[i][j] * x[j]).sum();
            let mut nx = x.clone();
            nx[i] -= cx_i;
            let mut nxv = xv.clone();
            let coef = xv[i];
            for j in 0..rank {
                nxv[j] -= coef * c[i][j];
            }
            if seen.insert(nx.clone()) {
                queue.push((nx, nxv));
            }
        }
    }
    queue.sort();
    let (roots, coroots): (Vec<_>, Vec<_>) = queue.into_iter().unzip();
    let simple = (0..rank)
        .map(|i| {
            roots
                .iter()
                .position(|r: &Vec<i64>| {
                    r.iter().enumerate().all(|(k, &v)| v == i64::from(k == i))
                })
                .unwrap()
        })
        .collect();
    let pairing = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    RootDatum {
        lie_type: t,
        flavor: IsogenyFlavor::Adjoint,
        rank,
        roots,
        coroots,
        pairing,
        simple,
    }
}

/// Enumerate the Weyl group as permutations of the root list via
/// breadth-first closure of the simple reflections. Errors out past `cap`.
pub fn enumerate_weyl(d: &RootDatum, cap: usize) -> Result<Vec<Vec<u32>>, RootDataError> {
    if d.lie_type.weyl_order() > cap as u64 && d.flavor != IsogenyFlavor::SimplyConnected {
        return Err(RootDataError::GroupTooLarge(cap));
    }
    let gens: Vec<Vec<u32>> = (0..d.simple.len())
        .map(|i| d.simple_reflection(i).perm)
        .collect();
    let id: Vec<u32> = (0..d.roots.len() as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    let mut all = Vec::new();
    while let Some(p) = frontier.pop() {
        all.push(p.clone());
        if all.len() > cap {
            return Err(RootDataError::GroupTooLarge(cap));
        }
        for g in &gens {
            let q: Vec<u32> = p.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    Ok(all)
}

/// Order of the twisted centralizer {x in W : x tau x^{-1} = tau},
/// computed by full enumeration of W.
pub fn twisted_centralizer_order(
    d: &RootDatum,
    twist: &Twist,
    cap: usize,
) -> Result<u64, RootDataError> {
    let elements = enumerate_weyl(d, cap)?;
    let tau = &twist.perm;
    let count = elements
        .iter()
        .filter(|x| {
            // x tau == tau x as permutations
            (0..tau.len()).all(|i| x[tau[i] as usize] == tau[x[i] as usize])
        })
        .count();
    Ok(count as u64)
}

/// Orbits of the twist on the root set, each sorted, in order of least
/// element.
pub fn root_orbits(d: &RootDatum, twist: &Twist) -> Vec<Vec<usize>> {
    let n = d.roots.len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = twist.perm[i] as usize;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Weyl element from a word in the simple reflections, for conjugation
/// tests.
pub fn weyl_from_word(d: &RootDatum, word: &[usize]) -> WeylElement {
    let mut w = d.identity_weyl();
    for &i in word {
        w = w.compose(&d.simple_reflection(i % d.simple.len()));
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(t: LieType) -> RootDatum {
        let flavor = match t {
            LieType::A(_) => IsogenyFlavor::GlStyle,
            _ => IsogenyFlavor::Adjoint,
        };
        build_root_datum(t, flavor).unwrap()
    }

    #[test]
    fn g2_has_rank_2_and_12_roots() {
        let d = datum(LieType::G2);
        assert_eq!(d.rank, 2);
        assert_eq!(d.roots.len(), 12);
        d.validate().unwrap();
    }

    #[test]
    fn e8_has_rank_8_and_240_roots() {
        let d = datum(LieType::E8);
        assert_eq!(d.rank, 8);
        assert_eq!(d.roots.len(), 240);
        d.validate().unwrap();
    }

    #[test]
    fn gl2_roots_are_plus_minus_e1_minus_e2() {
        let d = datum(LieType::A(2));
        assert_eq!(d.rank, 2);
        let mut roots = d.roots.clone();
        roots.sort();
        assert_eq!(roots, vec![vec![-1, 1], vec![1, -1]]);
    }

    #[test]
    fn all_catalog_data_validate() {
        for t in [
            LieType::A(2),
            LieType::A(3),
            LieType::A(4),
            LieType::B(2),
            LieType::B(3),
            LieType::G2,
            LieType::F4,
            LieType::E6,
            LieType::E7,
            LieType::E8,
        ] {
            datum(t).validate().unwrap();
        }
        build_root_datum(LieType::A(2), IsogenyFlavor::SimplyConnected).unwrap();
    }

    #[test]
    fn coxeter_orders_match_coxeter_numbers() {
        for t in [
            LieType::A(2),
            LieType::A(3),
            LieType::A(5),
            LieType::B(2),
            LieType::B(3),
            LieType::G2,
            LieType::F4,
            LieType::E6,
            LieType::E7,
            LieType::E8,
        ] {
            let d = datum(t);
            let c = d.coxeter_element();
            assert_eq!(
                c.order() as usize,
                t.coxeter_number(),
                "coxeter order mismatch for {t:?}"
            );
        }
    }

    #[test]
    fn sl2_coxeter_is_minus_one_on_the_weight_lattice() {
        let d = build_root_datum(LieType::A(2), IsogenyFlavor::SimplyConnected).unwrap();
        let c = d.coxeter_element();
        assert_eq!(c.matrix, vec![vec![-1]]);
        assert_eq!(c.order(), 2);
    }

    #[test]
    fn gln_coxeter_is_an_n_cycle() {
        for n in [2usize, 3, 4, 5] {
            let d = datum(LieType::A(n));
            let c = d.coxeter_element();
            assert_eq!(c.order() as usize, n);
            // a permutation matrix: every column has exactly one nonzero, a 1
            for j in 0..n {
                let col: Vec<i64> = (0..n).map(|i| c.matrix[i][j]).collect();
                assert_eq!(col.iter().filter(|&&v| v == 1).count(), 1);
                assert_eq!(col.iter().filter(|&&v| v != 0).count(), 1);
            }
        }
    }

    #[test]
    fn weyl_enumeration_counts() {
        for (t, expected) in [
            (LieType::A(3), 6u64),
            (LieType::A(4), 24),
            (LieType::B(2), 8),
            (LieType::B(3), 48),
            (LieType::G2, 12),
            (LieType::F4, 1152),
        ] {
            let d = datum(t);
            let w = enumerate_weyl(&d, 3_000_000).unwrap();
            assert_eq!(w.len() as u64, expected, "{t:?}");
        }
    }

    #[test]
    fn e8_enumeration_is_refused() {
        let d = datum(LieType::E8);
        assert!(matches!(
            enumerate_weyl(&d, 3_000_000),
            Err(RootDataError::GroupTooLarge(_))
        ));
    }

    #[test]
    fn split_twisted_centralizer_is_whole_weyl_group() {
        for t in [LieType::A(3), LieType::B(2), LieType::G2, LieType::F4] {
            let d = datum(t);
            let split = Twist::split(&d);
            assert_eq!(
                twisted_centralizer_order(&d, &split, 3_000_000).unwrap(),
                t.weyl_order()
            );
        }
    }

    #[test]
    fn split_a2_coxeter_twisted_centralizer_is_3() {
        let d = datum(LieType::A(3));
        let cox = Twist::coxeter(&d);
        assert_eq!(twisted_centralizer_order(&d, &cox, 3_000_000).unwrap(), 3);
    }

    #[test]
    fn coxeter_twisted_centralizer_has_order_h() {
        for t in [
            LieType::A(3),
            LieType::B(2),
            LieType::B(3),
            LieType::G2,
            LieType::F4,
            LieType::E6,
        ] {
            let d = datum(t);
            let cox = Twist::coxeter(&d);
            assert_eq!(
                twisted_centralizer_order(&d, &cox, 3_000_000).unwrap() as usize,
                t.coxeter_number(),
                "{t:?}"
            );
        }
    }

    #[test]
    fn split_a2_root_orbits_are_singletons() {
        let d = datum(LieType::A(3));
        let orbits = root_orbits(&d, &Twist::split(&d));
        assert_eq!(orbits.len(), 6);
        assert!(orbits.iter().all(|o| o.len() == 1));
    }

    #[test]
    fn coxeter_orbit_shape_is_rank_times_h() {
        for t in [
            LieType::A(3),
            LieType::B(2),
            LieType::B(3),
            LieType::G2,
            LieType::F4,
            LieType::E6,
            LieType::E7,
            LieType::E8,
        ] {
            let d = datum(t);
            let orbits = root_orbits(&d, &Twist::coxeter(&d));
            assert_eq!(
                orbits.len(),
                t.semisimple_rank(),
                "{t:?}: orbit count = semisimple rank"
            );
            let h = t.coxeter_number();
            assert!(
                orbits.iter().all(|o| o.len() == h),
                "{t:?}: every orbit has size h"
            );
        }
    }

    #[test]
    fn matrix_action_matches_stored_permutation() {
        let d = datum(LieType::G2);
        let c = d.coxeter_element();
        for (i, r) in d.roots.iter().enumerate() {
            assert_eq!(apply(&c.matrix, r), d.roots[c.perm[i] as usize]);
        }
    }

    #[test]
    fn catalog_json_roundtrip() {
        let d = datum(LieType::F4);
        let json = serde_json::to_string(&d).unwrap();
        let back: RootDatum = serde_json::from_str(&json).unwrap();
        back.validate().unwrap();
        assert_eq!(back.roots, d.roots);
        assert_eq!(back.coroots, d.coroots);
    }

    #[test]
    fn type_parsing() {
        assert_eq!(LieType::parse("G2"), Some(LieType::G2));
        assert_eq!(LieType::parse("gl3"), Some(LieType::A(3)));
        assert_eq!(LieType::parse("A2"), Some(LieType::A(3)));
        assert_eq!(LieType::parse("B2"), Some(LieType::B(2)));
        assert_eq!(LieType::parse("Z9"), None);
    }
}
