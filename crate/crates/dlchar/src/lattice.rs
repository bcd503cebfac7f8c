//! Exact integer linear algebra: Smith normal form and cokernels.
//!
//! Every torus point count in this crate reduces to the order of the
//! cokernel of an integer matrix, so this module is the arithmetic core.
//! All entries are arbitrary-precision; intermediate growth during
//! elimination is unbounded in theory and torus orders reach q^8, so no
//! machine-word shortcut is taken.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("invalid shape: {0}")]
    BadShape(String),
}

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix must be nonempty");
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LatticeError> {
        if !self.is_square() {
            return Err(LatticeError::NotSquare);
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[idx(k, k)].is_zero() {
                let pivot_row = (k + 1..n).find(|&i| !a[idx(i, k)].is_zero());
                match pivot_row {
                    Some(i) => {
                        for j in 0..n {
                            a.swap(idx(k, j), idx(i, j));
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = num / &prev;
                }
                a[idx(i, k)] = BigInt::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let det = a[idx(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = q * &self[(k, c)];
            self[(i, c)] -= t;
        }
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let t = q * &self[(r, k)];
            self[(r, j)] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self[(i, c)].clone();
            self[(i, c)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of Smith normal form: `u * m * v = d` with `u`, `v` unimodular
/// and `d` diagonal with a divisibility chain d1 | d2 | ...
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries, in chain order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form by row/column gcd elimination.
///
/// Pivots are chosen as the minimal nonzero entry of the remaining
/// submatrix to limit coefficient growth. After a pivot clears its row and
/// column, any remaining entry not divisible by the pivot is folded in via
/// a row addition, which forces the divisibility chain directly.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let steps = m.rows().min(m.cols());

    for t in 0..steps {
        'pivot: loop {
            // minimal nonzero entry of a[t.., t..]
            let mut best: Option<(usize, usize)> = None;
            for i in t..a.rows() {
                for j in t..a.cols() {
                    if !a[(i, j)].is_zero()
                        && best
                            .map(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match best {
                Some(p) => p,
                None => return finish(a, u, v),
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // clear column t
            let mut dirty = false;
            for i in t + 1..a.rows() {
                if !a[(i, t)].is_zero() {
                    let q = div_round(&a[(i, t)], &a[(t, t)]);
                    a.row_sub(i, t, &q);
                    u.row_sub(i, t, &q);
                    if !a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            // clear row t
            for j in t + 1..a.cols() {
                if !a[(t, j)].is_zero() {
                    let q = div_round(&a[(t, j)], &a[(t, t)]);
                    a.col_sub(j, t, &q);
                    v.col_sub(j, t, &q);
                    if !a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // pivot must divide the rest of the submatrix
            for i in t + 1..a.rows() {
                for j in t + 1..a.cols() {
                    if !(&a[(i, j)] % &a[(t, t)]).is_zero() {
                        a.row_sub(t, i, &BigInt::from(-1));
                        u.row_sub(t, i, &BigInt::from(-1));
                        continue 'pivot;
                    }
                }
            }
            if a[(t, t)].is_negative() {
                a.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    finish(a, u, v)
}

fn finish(a: IntMatrix, u: IntMatrix, v: IntMatrix) -> SmithNormalForm {
    SmithNormalForm { d: a, u, v }
}

/// Quotient rounded to nearest, so remainders satisfy |r| <= |b|/2.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) ^ (b.is_negative()) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// Finite abelian group given by its elementary divisor chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    divisors: Vec<BigInt>,
    order: BigInt,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            divisors: vec![],
            order: BigInt::one(),
        }
    }

    /// Build from a divisor chain; entries of 1 are dropped.
    pub fn from_divisors(divs: Vec<BigInt>) -> Result<Self, LatticeError> {
        let divisors: Vec<BigInt> = divs.into_iter().filter(|d| !d.is_one()).collect();
        for d in &divisors {
            if *d < BigInt::from(2) {
                return Err(LatticeError::BadShape(format!("divisor {d} < 2")));
            }
        }
        for w in divisors.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(LatticeError::BadShape(format!(
                    "chain violated: {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        let order = divisors.iter().product();
        Ok(FiniteAbelianGroup { divisors, order })
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }
}

/// Cokernel of an integer matrix viewed as a map Z^cols -> Z^rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cokernel {
    Finite(FiniteAbelianGroup),
    /// Positive free rank; the torsion part is still reported.
    Infinite {
        free_rank: usize,
        torsion: FiniteAbelianGroup,
    },
}

impl Cokernel {
    pub fn finite(&self) -> Option<&FiniteAbelianGroup> {
        match self {
            Cokernel::Finite(g) => Some(g),
            Cokernel::Infinite { .. } => None,
        }
    }
}

pub fn cokernel(m: &IntMatrix) -> Cokernel {
    cokernel_from_snf(&smith_normal_form(m), m.rows())
}

fn cokernel_from_snf(snf: &SmithNormalForm, rows: usize) -> Cokernel {
    let factors = snf.invariant_factors();
    let free_rank = rows - factors.len();
    let torsion = FiniteAbelianGroup::from_divisors(factors)
        .expect("SNF invariant factors always form a chain");
    if free_rank == 0 {
        Cokernel::Finite(torsion)
    } else {
        Cokernel::Infinite { free_rank, torsion }
    }
}

/// Cokernel plus explicit coordinates: the projection Z^rows -> coker is
/// x -> (row_i(U) . x mod d_i) over the nontrivial divisors d_i (plus free
/// coordinates for zero rows). Used to enumerate torus points.
#[derive(Debug, Clone)]
pub struct CokernelPresentation {
    pub coker: Cokernel,
    /// Moduli of the torsion coordinates (the divisors > 1, chain order).
    pub moduli: Vec<BigInt>,
    /// One row of U per torsion coordinate.
    pub projection_rows: Vec<Vec<BigInt>>,
}

pub fn cokernel_with_projection(m: &IntMatrix) -> CokernelPresentation {
    let snf = smith_normal_form(m);
    let coker = cokernel_from_snf(&snf, m.rows());
    let n = m.rows().min(m.cols());
    let mut moduli = Vec::new();
    let mut projection_rows = Vec::new();
    for i in 0..n {
        let d = &snf.d[(i, i)];
        if d.is_zero() {
            break;
        }
        if !d.is_one() {
            moduli.push(d.clone());
            projection_rows.push((0..m.rows()).map(|j| snf.u[(i, j)].clone()).collect());
        }
    }
    CokernelPresentation {
        coker,
        moduli,
        projection_rows,
    }
}
