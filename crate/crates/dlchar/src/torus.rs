//! Rational maximal tori: exact point counts and regular semisimple
//! element counts.
//!
//! A rational torus is a root datum plus a Frobenius twist tau = w sigma;
//! its F_q-points form the finite abelian group X / (q tau - 1) X, of
//! order |det(q tau - 1)|. An element is regular semisimple iff no root
//! evaluates to 1 on it, so the non-regular locus is the union of the
//! kernels of the tau-orbits of roots and is counted by
//! inclusion-exclusion over orbit subsets. Each kernel count is the order
//! of a cokernel over the quotient lattice with its torsion kept, so the
//! counts stay exact even when the orbit span is not saturated.

use crate::lattice::{cokernel, cokernel_with_projection, smith_normal_form, Cokernel, IntMatrix};
use crate::par;
use crate::primes::prime_power_decompose;
use crate::rootdata::{build_root_datum, IsogenyFlavor, LieType, RootDatum, Twist};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("q = {0} is not a prime power >= 2")]
    BadQ(u64),
    #[error("root subset is not stable under the twist")]
    SubsetNotStable,
    #[error("too many twist orbits for inclusion-exclusion: {0} > 20")]
    TooManyOrbits(usize),
    #[error("torus order exceeds enumeration cap {0}")]
    TooLarge(u64),
}

/// A rational maximal torus of a catalog group.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RationalTorus {
    pub datum: RootDatum,
    pub twist: Twist,
    pub label: String,
}

/// CLI-facing count record for one (torus, q).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TorusCountRecord {
    pub lie_type: String,
    pub flavor: String,
    pub twist_label: String,
    pub q: u64,
    pub order: String,
    pub nonregular: String,
    pub regular: String,
}

impl RationalTorus {
    pub fn new(datum: RootDatum, twist: Twist) -> Self {
        let label = format!("{}-{}", datum.label(), twist.label);
        RationalTorus { datum, twist, label }
    }

    /// The matrix q*tau - 1 on X.
    fn frobenius_minus_one(&self, q: u64) -> IntMatrix {
        let n = self.datum.rank;
        let q = BigInt::from(q);
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = &q * BigInt::from(self.twist.tau[i][j])
                    - if i == j { BigInt::one() } else { BigInt::zero() };
            }
        }
        m
    }

    /// |S(F_q)| = |det(q tau - 1)|.
    pub fn order(&self, q: u64) -> Result<BigInt, TorusError> {
        check_q(q)?;
        Ok(self
            .frobenius_minus_one(q)
            .determinant()
            .expect("square by construction")
            .abs())
    }

    /// Split rank: the rank of the tau-fixed sublattice of X.
    pub fn split_rank(&self) -> usize {
        let n = self.datum.rank;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.twist.tau[i][j] - i64::from(i == j))
                    .collect()
            })
            .collect();
        let snf = smith_normal_form(&IntMatrix::from_rows(&rows));
        n - snf.rank()
    }

    /// Number of points killed by every root in `subset` (indices into
    /// the root list). The subset must be a union of tau-orbits.
    ///
    /// The count is the order of the cokernel of q tau - 1 acting on
    /// X / <subset>, computed as coker([q tau - 1 | B]) where B has the
    /// subset roots as columns. Torsion of X / <subset> prime to the
    /// characteristic contributes its fixed points; p-primary torsion
    /// contributes nothing, and the cokernel accounts for that exactly
    /// because q tau vanishes on it, leaving the invertible map -1.
    pub fn kernel_count(&self, q: u64, subset: &[usize]) -> Result<BigInt, TorusError> {
        check_q(q)?;
        if subset.is_empty() {
            return self.order(q);
        }
        let mut in_subset = vec![false; self.datum.roots.len()];
        for &i in subset {
            in_subset[i] = true;
        }
        if subset
            .iter()
            .any(|&i| !in_subset[self.twist.perm[i] as usize])
        {
            return Err(TorusError::SubsetNotStable);
        }

        let n = self.datum.rank;
        // coker([q tau - 1 | B])
        let f = self.frobenius_minus_one(q);
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row: Vec<BigInt> = (0..n).map(|j| f[(i, j)].clone()).collect();
            row.extend(subset.iter().map(|&r| BigInt::from(self.datum.roots[r][i])));
            rows.push(row);
        }
        match cokernel(&IntMatrix::from_bigint_rows(rows)) {
            Cokernel::Finite(g) => Ok(g.order().clone()),
            Cokernel::Infinite { .. } => {
                unreachable!("q tau - 1 is injective for q >= 2, so the cokernel is finite")
            }
        }
    }

    /// Count of points on which some root vanishes, by inclusion-exclusion
    /// over the nonempty sets of tau-orbits of roots.
    pub fn count_nonregular(&self, q: u64) -> Result<BigInt, TorusError> {
        check_q(q)?;
        let orbits = crate::rootdata::root_orbits(&self.datum, &self.twist);
        let m = orbits.len();
        if m > 20 {
            return Err(TorusError::TooManyOrbits(m));
        }
        let masks: Vec<u32> = (1u32..(1 << m)).collect();
        let terms = par::map_collect(masks, |mask| self.ie_term(q, &orbits, mask));
        let mut total = BigInt::zero();
        for t in terms {
            total += t?;
        }
        Ok(total)
    }

    /// Sequential variant of `count_nonregular` for benchmarking.
    pub fn count_nonregular_seq(&self, q: u64) -> Result<BigInt, TorusError> {
        check_q(q)?;
        let orbits = crate::rootdata::root_orbits(&self.datum, &self.twist);
        let m = orbits.len();
        if m > 20 {
            return Err(TorusError::TooManyOrbits(m));
        }
        let mut total = BigInt::zero();
        for mask in 1u32..(1 << m) {
            total += self.ie_term(q, &orbits, mask)?;
        }
        Ok(total)
    }

    fn ie_term(&self, q: u64, orbits: &[Vec<usize>], mask: u32) -> Result<BigInt, TorusError> {
        let mut subset = Vec::new();
        for (i, orbit) in orbits.iter().enumerate() {
            if mask & (1 << i) != 0 {
                subset.extend_from_slice(orbit);
            }
        }
        let count = self.kernel_count(q, &subset)?;
        Ok(if mask.count_ones() % 2 == 1 {
            count
        } else {
            -count
        })
    }

    pub fn count_regular(&self, q: u64) -> Result<BigInt, TorusError> {
        Ok(self.order(q)? - self.count_nonregular(q)?)
    }

    /// Independent oracle: enumerate the points of S(F_q) and test every
    /// root directly.
    ///
    /// Points are parametrized through the invariant-factor decomposition
    /// of X / (q tau - 1) X: a point is a tuple of discrete logs in the
    /// cyclic pieces (each piece a subgroup of a finite-field unit group),
    /// and a root alpha takes the value 1 on it iff the pairing of the
    /// tuple with the class of alpha vanishes. This is a plain point sweep
    /// with per-root tests; it shares nothing with the
    /// inclusion-exclusion path beyond the normal-form routine.
    pub fn count_regular_by_enumeration(&self, q: u64, cap: u64) -> Result<BigInt, TorusError> {
        check_q(q)?;
        let order = self.order(q)?;
        if order > BigInt::from(cap) {
            return Err(TorusError::TooLarge(cap));
        }
        let pres = cokernel_with_projection(&self.frobenius_minus_one(q));
        let moduli: Vec<i128> = pres
            .moduli
            .iter()
            .map(|d| d.to_i128().expect("moduli fit i128 under cap"))
            .collect();
        let k = moduli.len();
        let lcm = moduli.iter().fold(1i128, |a, &b| a.lcm(&b));
        // class of each root in the cokernel coordinates, scaled to the
        // common denominator
        let root_classes: Vec<Vec<i128>> = self
            .datum
            .roots
            .iter()
            .map(|alpha| {
                (0..k)
                    .map(|c| {
                        let dot: BigInt = pres.projection_rows[c]
                            .iter()
                            .zip(alpha)
                            .map(|(u, &a)| u * BigInt::from(a))
                            .sum();
                        let m = BigInt::from(moduli[c]);
                        let red = ((&dot % &m) + &m) % &m;
                        red.to_i128().unwrap() * (lcm / moduli[c])
                    })
                    .collect()
            })
            .collect();
        let mut regular = BigInt::zero();
        let mut point = vec![0i128; k];
        loop {
            let is_regular = root_classes.iter().all(|alpha| {
                let mut s = 0i128;
                for (t, a) in point.iter().zip(alpha) {
                    s = (s + t * a) % lcm;
                }
                s != 0
            });
            if is_regular {
                regular += 1;
            }
            // mixed-radix increment
            let mut c = 0;
            loop {
                if c == k {
                    return Ok(regular);
                }
                point[c] += 1;
                if point[c] < moduli[c] {
                    break;
                }
                point[c] = 0;
                c += 1;
            }
        }
    }

    pub fn count_record(&self, q: u64) -> Result<TorusCountRecord, TorusError> {
        let order = self.order(q)?;
        let nonregular = self.count_nonregular(q)?;
        let regular = &order - &nonregular;
        Ok(TorusCountRecord {
            lie_type: self.datum.label(),
            flavor: format!("{:?}", self.datum.flavor),
            twist_label: self.twist.label.clone(),
            q,
            order: order.to_string(),
            nonregular: nonregular.to_string(),
            regular: regular.to_string(),
        })
    }
}

fn check_q(q: u64) -> Result<(u64, u32), TorusError> {
    prime_power_decompose(q).ok_or(TorusError::BadQ(q))
}

/// Catalog entry types for the CLI.
pub fn catalog_types() -> Vec<(LieType, IsogenyFlavor)> {
    vec![
        (LieType::A(2), IsogenyFlavor::GlStyle),
        (LieType::A(3), IsogenyFlavor::GlStyle),
        (LieType::A(4), IsogenyFlavor::GlStyle),
        (LieType::B(2), IsogenyFlavor::Adjoint),
        (LieType::B(3), IsogenyFlavor::Adjoint),
        (LieType::G2, IsogenyFlavor::Adjoint),
        (LieType::F4, IsogenyFlavor::Adjoint),
        (LieType::E6, IsogenyFlavor::Adjoint),
        (LieType::E7, IsogenyFlavor::Adjoint),
        (LieType::E8, IsogenyFlavor::Adjoint),
    ]
}

/// Build a catalog torus. Split twists are only offered where the orbit
/// count stays within the inclusion-exclusion bound.
pub fn catalog_torus(t: LieType, flavor: IsogenyFlavor, twist: &str) -> Option<RationalTorus> {
    let datum = build_root_datum(t, flavor).ok()?;
    let twist = match twist {
        "split" if datum.roots.len() <= 20 => Twist::split(&datum),
        "coxeter" => Twist::coxeter(&datum),
        _ => return None,
    };
    Some(RationalTorus::new(datum, twist))
}

/// All catalog tori whose non-regular counts are computable.
pub fn full_catalog() -> Vec<RationalTorus> {
    let mut out = Vec::new();
    for (t, flavor) in catalog_types() {
        for twist in ["split", "coxeter"] {
            if let Some(torus) = catalog_torus(t, flavor, twist) {
                out.push(torus);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::weyl_from_word;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn torus(t: LieType, twist: &str) -> RationalTorus {
        let flavor = match t {
            LieType::A(_) => IsogenyFlavor::GlStyle,
            _ => IsogenyFlavor::Adjoint,
        };
        catalog_torus(t, flavor, twist).unwrap()
    }

    #[test]
    fn split_rank_two_torus_order() {
        let t = torus(LieType::A(2), "split");
        assert_eq!(t.order(5).unwrap(), BigInt::from(16));
    }

    #[test]
    fn g2_coxeter_order_q4_is_13() {
        let t = torus(LieType::G2, "coxeter");
        assert_eq!(t.order(4).unwrap(), BigInt::from(13));
    }

    #[test]
    fn e6_coxeter_order_q2_is_91() {
        let t = torus(LieType::E6, "coxeter");
        // (q^4 - q^2 + 1)(q^2 + q + 1) at q = 2
        assert_eq!(t.order(2).unwrap(), BigInt::from(13 * 7));
    }

    #[test]
    fn empty_subset_kernel_is_whole_torus() {
        let t = torus(LieType::G2, "coxeter");
        assert_eq!(t.kernel_count(7, &[]).unwrap(), t.order(7).unwrap());
    }

    #[test]
    fn sl2_style_kernel_count_is_gcd_2_q_minus_1() {
        // X = Z omega, alpha = 2 omega, split: solutions of t^2 = 1 in F_q
        let datum = build_root_datum(LieType::A(2), IsogenyFlavor::SimplyConnected).unwrap();
        let split = Twist::split(&datum);
        let t = RationalTorus::new(datum, split);
        let all: Vec<usize> = vec![0, 1];
        assert_eq!(t.kernel_count(7, &all).unwrap(), BigInt::from(2));
        // characteristic 2: X/<2 omega> is pure 2-torsion, which has no
        // points, so only t = 1 remains
        assert_eq!(t.kernel_count(8, &all).unwrap(), BigInt::one());
        assert_eq!(t.kernel_count(9, &all).unwrap(), BigInt::from(2));
    }

    #[test]
    fn g2_long_orbit_kernel_in_characteristic_3() {
        // X/<long orbit> = Z/3; at q = 3^k the 3-torsion contributes
        // nothing and the kernel is just the identity
        let t = torus(LieType::G2, "coxeter");
        let orbits = crate::rootdata::root_orbits(&t.datum, &t.twist);
        let counts: Vec<BigInt> = orbits
            .iter()
            .map(|o| t.kernel_count(3, o).unwrap())
            .collect();
        assert!(counts.iter().all(|c| c == &BigInt::one()));
        assert_eq!(t.count_nonregular(3).unwrap(), BigInt::one());
    }

    #[test]
    fn non_stable_subset_is_rejected() {
        let t = torus(LieType::G2, "coxeter");
        // a single root is not a union of coxeter orbits
        assert_eq!(t.kernel_count(5, &[0]), Err(TorusError::SubsetNotStable));
    }

    #[test]
    fn g2_long_root_orbit_kernel_has_3_torsion_contribution() {
        // the long-root orbit spans an index-3 sublattice; at
        // q = -1 mod 3 the kernel count picks up the Z/3 factor
        let t = torus(LieType::G2, "coxeter");
        let orbits = crate::rootdata::root_orbits(&t.datum, &t.twist);
        assert_eq!(orbits.len(), 2);
        for q in [5u64, 11] {
            let counts: Vec<BigInt> = orbits
                .iter()
                .map(|o| t.kernel_count(q, o).unwrap())
                .collect();
            assert!(
                counts.iter().any(|c| (c % BigInt::from(3)).is_zero()),
                "q={q}: one orbit kernel must be divisible by 3, got {counts:?}"
            );
        }
    }

    #[test]
    fn f4_coxeter_nonregular_is_1() {
        let t = torus(LieType::F4, "coxeter");
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            assert_eq!(t.count_nonregular(q).unwrap(), BigInt::one(), "q={q}");
        }
    }

    #[test]
    fn e7_coxeter_nonregular_congruence_split() {
        let t = torus(LieType::E7, "coxeter");
        // q = 5 = -1 mod 3: 3(q+1); q = 7 != -1 mod 3: q+1
        assert_eq!(t.count_nonregular(5).unwrap(), BigInt::from(18));
        assert_eq!(t.count_nonregular(7).unwrap(), BigInt::from(8));
    }

    #[test]
    fn g2_coxeter_enumeration_q5() {
        let t = torus(LieType::G2, "coxeter");
        // order 21 = q^2 - q + 1, three non-regular points at q = -1 mod 3
        assert_eq!(t.order(5).unwrap(), BigInt::from(21));
        assert_eq!(
            t.count_regular_by_enumeration(5, 1_000_000).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(t.count_regular(5).unwrap(), BigInt::from(18));
    }

    #[test]
    fn gl2_nonsplit_enumeration_q3() {
        let t = torus(LieType::A(2), "coxeter");
        assert_eq!(t.order(3).unwrap(), BigInt::from(8));
        assert_eq!(
            t.count_regular_by_enumeration(3, 1_000_000).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(t.count_nonregular(3).unwrap(), BigInt::from(2));
    }

    #[test]
    fn b2_coxeter_is_norm_one_torus_of_order_q_squared_plus_1() {
        let t = torus(LieType::B(2), "coxeter");
        assert_eq!(t.order(3).unwrap(), BigInt::from(10));
        let reg_enum = t.count_regular_by_enumeration(3, 1_000_000).unwrap();
        assert_eq!(reg_enum, t.count_regular(3).unwrap());
    }

    #[test]
    fn split_rank_bookkeeping() {
        assert_eq!(torus(LieType::A(2), "split").split_rank(), 2);
        assert_eq!(torus(LieType::A(2), "coxeter").split_rank(), 1);
        assert_eq!(torus(LieType::G2, "coxeter").split_rank(), 0);
        assert_eq!(torus(LieType::B(2), "coxeter").split_rank(), 0);
    }

    #[test]
    fn regular_plus_nonregular_is_order_small_sweep() {
        for t in [
            torus(LieType::A(2), "split"),
            torus(LieType::A(2), "coxeter"),
            torus(LieType::A(3), "coxeter"),
            torus(LieType::B(2), "coxeter"),
            torus(LieType::G2, "split"),
            torus(LieType::G2, "coxeter"),
        ] {
            for q in [2u64, 3, 4, 5, 9] {
                let order = t.order(q).unwrap();
                let nr = t.count_nonregular(q).unwrap();
                let r = t.count_regular(q).unwrap();
                assert_eq!(&r + &nr, order, "{} q={q}", t.label);
            }
        }
    }

    #[test]
    fn enumeration_agrees_with_inclusion_exclusion_where_it_applies() {
        for t in [
            torus(LieType::A(2), "split"),
            torus(LieType::A(2), "coxeter"),
            torus(LieType::A(3), "coxeter"),
            torus(LieType::B(2), "coxeter"),
            torus(LieType::B(3), "coxeter"),
            torus(LieType::G2, "coxeter"),
            torus(LieType::F4, "coxeter"),
        ] {
            for q in [2u64, 3, 4, 5] {
                if t.order(q).unwrap() > BigInt::from(200_000u64) {
                    continue;
                }
                let by_enum = t.count_regular_by_enumeration(q, 200_000).unwrap();
                assert_eq!(by_enum, t.count_regular(q).unwrap(), "{} q={q}", t.label);
            }
        }
    }

    #[test]
    fn nonregular_count_is_twist_conjugation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for t in [
            torus(LieType::A(3), "coxeter"),
            torus(LieType::B(2), "coxeter"),
            torus(LieType::G2, "coxeter"),
        ] {
            let base = t.count_nonregular(7).unwrap();
            for _ in 0..50 {
                let word: Vec<usize> = (0..12).map(|_| rng.gen_range(0..8)).collect();
                let x = weyl_from_word(&t.datum, &word);
                let x_inv = {
                    let mut inv = t.datum.identity_weyl();
                    for _ in 0..x.order() - 1 {
                        inv = inv.compose(&x);
                    }
                    inv
                };
                let conj = crate::rootdata::mat_mul(
                    &x.matrix,
                    &crate::rootdata::mat_mul(&t.twist.tau, &x_inv.matrix),
                );
                let perm = t.datum.matrix_root_permutation(&conj).unwrap();
                let twisted = RationalTorus::new(
                    t.datum.clone(),
                    Twist {
                        tau: conj,
                        perm,
                        order: t.twist.order,
                        label: "conj".into(),
                    },
                );
                assert_eq!(twisted.count_nonregular(7).unwrap(), base, "{}", t.label);
            }
        }
    }

    #[test]
    fn too_large_enumeration_is_refused() {
        let t = torus(LieType::E8, "coxeter");
        assert!(matches!(
            t.count_regular_by_enumeration(7, 1000),
            Err(TorusError::TooLarge(1000))
        ));
    }

    #[test]
    fn bad_q_rejected() {
        let t = torus(LieType::G2, "coxeter");
        assert_eq!(t.order(6), Err(TorusError::BadQ(6)));
        assert_eq!(t.order(1), Err(TorusError::BadQ(1)));
    }

    #[test]
    fn count_record_roundtrip() {
        let t = torus(LieType::G2, "coxeter");
        let rec = t.count_record(5).unwrap();
        assert_eq!(rec.order, "21");
        assert_eq!(rec.nonregular, "3");
        assert_eq!(rec.regular, "18");
        let json = serde_json::to_string(&rec).unwrap();
        let back: TorusCountRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }
}
