//! Exact integer lattice linear algebra.
//!
//! Matrices are row oriented: each row is a lattice vector. Everything is done
//! with [`BigInt`] so no overflow can occur.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An integer vector in `M` or `N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[k] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    /// Gcd of the coordinates, zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// The primitive vector on the same ray; the zero vector maps to itself.
    pub fn primitive(&self) -> LatticeVector {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        LatticeVector(self.0.iter().map(|a| a / &g).collect())
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a LatticeVector>>(dim: usize, vs: I) -> LatticeVector {
        let mut acc = Self::zero(dim);
        for v in vs {
            for (a, b) in acc.0.iter_mut().zip(&v.0) {
                *a += b;
            }
        }
        acc
    }
}

impl Index<usize> for LatticeVector {
    type Output = BigInt;
    fn index(&self, k: usize) -> &BigInt {
        &self.0[k]
    }
}

impl From<Vec<BigInt>> for LatticeVector {
    fn from(v: Vec<BigInt>) -> Self {
        LatticeVector(v)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// A dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors, all of length `cols`.
    pub fn from_rows(cols: usize, rows: &[LatticeVector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.dim(), cols, "row length mismatch");
            data.extend(r.coords().iter().cloned());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        let rows: Vec<LatticeVector> = rows.iter().map(|r| LatticeVector::from_i64(r)).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> LatticeVector {
        LatticeVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<LatticeVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut p = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    p.data[idx] += a * other.get(k, j);
                }
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= k * row[src]
    fn sub_row(&mut self, target: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            self.data[target * self.cols + j] -= v;
        }
    }

    /// col[target] -= k * col[src]
    fn sub_col(&mut self, target: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            self.data[i * self.cols + target] -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = -&self.data[idx];
        }
    }
}

/// Result of a Smith normal form computation: `left * A * right` is diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Invariant factors `d_1 | d_2 | ...`, `min(rows, cols)` entries, zeros last.
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

fn min_abs_in_column(h: &IntMatrix, c: usize, from: usize) -> Option<usize> {
    (from..h.rows())
        .filter(|&i| !h.get(i, c).is_zero())
        .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()))
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and `U*A = H`.
///
/// Pivots are positive and entries above a pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..a.cols() {
        if r == m {
            break;
        }
        let mut found = false;
        while let Some(p) = min_abs_in_column(&h, c, r) {
            found = true;
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                h.sub_row(i, r, &q);
                u.sub_row(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.sub_row(i, r, &q);
            u.sub_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form by elementary operations with the smallest nonzero pivot.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let steps = m.min(n);
    'outer: for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..m {
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let p = d.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    d.sub_row(t, i, &minus_one);
                    u.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let diag = (0..steps).map(|t| d.get(t, t).clone()).collect();
    SnfResult { diag, left: u, right: v }
}

/// Rank over the rationals of the row set.
pub fn lattice_rank(a: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(a);
    (0..h.rows()).filter(|&i| !h.row(i).is_zero()).count()
}

/// Index of the row lattice of `a` inside the saturation of its rational span.
pub fn lattice_index(a: &IntMatrix) -> BigInt {
    smith_normal_form(a)
        .diag
        .into_iter()
        .filter(|d| !d.is_zero())
        .fold(BigInt::one(), |acc, d| acc * d)
}

/// Whether independent rows extend to a basis of `Z^cols`.
pub fn is_part_of_basis(a: &IntMatrix) -> Result<bool> {
    let snf = smith_normal_form(a);
    if snf.rank() < a.rows() {
        return Err(Error::DependentRows);
    }
    Ok(snf.diag.iter().all(One::is_one))
}

/// Lattice basis of the integer vectors `x` with `⟨row, x⟩ = 0` for every row.
pub fn integer_kernel(a: &IntMatrix) -> Vec<LatticeVector> {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let mut basis: Vec<LatticeVector> = (r..a.cols()).map(|j| snf.right.column(j)).collect();
    canonical_basis(a.cols(), &mut basis);
    basis
}

/// Lattice basis of `span_Q(rows) ∩ Z^cols`.
pub fn saturated_basis(a: &IntMatrix) -> Vec<LatticeVector> {
    let perp = integer_kernel(a);
    integer_kernel(&IntMatrix::from_rows(a.cols(), &perp))
}

/// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
pub fn row_lattice_basis(a: &IntMatrix) -> Vec<LatticeVector> {
    let (h, _) = hermite_normal_form(a);
    h.row_vectors().into_iter().filter(|r| !r.is_zero()).collect()
}

fn canonical_basis(cols: usize, basis: &mut Vec<LatticeVector>) {
    if basis.is_empty() {
        return;
    }
    *basis = row_lattice_basis(&IntMatrix::from_rows(cols, basis));
}

/// For rows `B` forming a basis of a saturated sublattice, an integer matrix
/// `C` (cols × rows) with `B*C = I`. Then `x*C` gives the coordinates of any
/// `x` in the row lattice.
pub fn left_inverse(b: &IntMatrix) -> Result<IntMatrix> {
    let snf = smith_normal_form(b);
    if snf.rank() < b.rows() {
        return Err(Error::DependentRows);
    }
    if !snf.diag.iter().all(One::is_one) {
        return Err(Error::Internal("basis of a non-saturated lattice".into()));
    }
    let k = b.rows();
    let mut vk = IntMatrix::zeros(b.cols(), k);
    for i in 0..b.cols() {
        for j in 0..k {
            vk.set(i, j, snf.right.get(i, j).clone());
        }
    }
    Ok(vk.mul(&snf.left))
}

/// Coordinates of `x` with respect to the rows of a saturated basis, given its left inverse.
pub fn coordinates(x: &LatticeVector, inverse: &IntMatrix) -> LatticeVector {
    let row = IntMatrix::from_rows(x.dim(), core::slice::from_ref(x));
    row.mul(inverse).row(0)
}

/// Coefficients `y` with `y * basis = x`, for `basis` in row echelon form
/// (as returned by [`row_lattice_basis`]); `None` if `x` is not in the row lattice.
pub fn solve_in_basis(basis: &[LatticeVector], x: &LatticeVector) -> Option<LatticeVector> {
    let mut rest = x.clone();
    let mut y = Vec::with_capacity(basis.len());
    for b in basis {
        let p = (0..b.dim()).find(|&j| !b[j].is_zero())?;
        let (q, r) = rest[p].div_rem(&b[p]);
        if !r.is_zero() {
            return None;
        }
        rest = rest.sub(&b.scale(&q));
        y.push(q);
    }
    rest.is_zero().then(|| LatticeVector::new(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(cols, rows)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn is_hermite(h: &IntMatrix) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            let row = h.row(i);
            match (0..h.cols()).find(|&j| !row[j].is_zero()) {
                None => seen_zero = true,
                Some(p) => {
                    if seen_zero || last_pivot.is_some_and(|q| p <= q) || !row[p].is_positive() {
                        return false;
                    }
                    for k in 0..i {
                        let x = h.get(k, p);
                        if x.is_negative() || x >= &row[p] {
                            return false;
                        }
                    }
                    last_pivot = Some(p);
                }
            }
        }
        true
    }

    fn check_snf(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        let d = s.left.mul(a).mul(&s.right);
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let want = if i == j { s.diag[i].clone() } else { BigInt::zero() };
                assert_eq!(d.get(i, j), &want);
            }
        }
        assert!(s.left.det().abs().is_one());
        assert!(s.right.det().abs().is_one());
        for w in s.diag.windows(2) {
            assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
            assert!(!w[0].is_negative());
        }
        s
    }

    #[test]
    fn hnf_identity() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(2));
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_preserves_determinant() {
        let a = m(2, &[&[2, 4], &[6, 8]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(h.det().abs(), big(8));
        assert!(is_hermite(&h));
    }

    #[test]
    fn hnf_single_axis() {
        let (h, u) = hermite_normal_form(&m(2, &[&[0, 2], &[0, 3]]));
        assert_eq!(h, m(2, &[&[0, 1], &[0, 0]]));
        assert!(u.det().abs().is_one());
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_snf(&m(2, &[&[2, 0], &[0, 3]])).diag, vec![big(1), big(6)]);
        assert_eq!(check_snf(&IntMatrix::identity(2)).diag, vec![big(1), big(1)]);
        assert_eq!(check_snf(&m(2, &[&[2, 4], &[6, 8]])).diag, vec![big(2), big(4)]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(lattice_rank(&m(2, &[&[0, 2], &[0, 3]])), 1);
        assert_eq!(lattice_rank(&IntMatrix::zeros(0, 2)), 0);
        assert_eq!(lattice_rank(&m(2, &[&[0, 2], &[5, 0]])), 2);
    }

    #[test]
    fn index_examples() {
        assert_eq!(lattice_index(&m(2, &[&[0, 2]])), big(2));
        assert_eq!(lattice_index(&m(2, &[&[0, 2], &[0, 3]])), big(1));
        assert_eq!(lattice_index(&m(2, &[&[0, 2], &[5, 0]])), big(10));
        assert_eq!(lattice_index(&IntMatrix::zeros(0, 3)), big(1));
    }

    #[test]
    fn basis_extension_examples() {
        assert_eq!(is_part_of_basis(&m(2, &[&[1, 0], &[1, 1]])), Ok(true));
        assert_eq!(is_part_of_basis(&m(2, &[&[0, 2]])), Ok(false));
        assert_eq!(is_part_of_basis(&m(2, &[&[1, 1], &[1, 2]])), Ok(true));
        assert_eq!(is_part_of_basis(&m(2, &[&[1, 1], &[2, 2]])), Err(Error::DependentRows));
    }

    #[test]
    fn kernel_and_saturation() {
        let k = integer_kernel(&m(3, &[&[1, 2, 3]]));
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v.dot(&LatticeVector::from_i64(&[1, 2, 3])).is_zero());
        }
        let s = saturated_basis(&m(2, &[&[2, 4]]));
        assert_eq!(s, vec![LatticeVector::from_i64(&[1, 2])]);
        assert_eq!(saturated_basis(&m(2, &[&[2, 0], &[0, 3]])).len(), 2);
    }

    #[test]
    fn left_inverse_gives_coordinates() {
        let b = m(3, &[&[1, 2, 0], &[0, 1, 1]]);
        let c = left_inverse(&b).unwrap();
        assert_eq!(b.mul(&c), IntMatrix::identity(2));
        let x = LatticeVector::from_i64(&[3, 4, -2]);
        assert_eq!(coordinates(&x, &c), LatticeVector::from_i64(&[3, -2]));
        assert!(left_inverse(&m(2, &[&[2, 0]])).is_err());
    }

    #[test]
    fn basis_coordinates() {
        let b = row_lattice_basis(&m(2, &[&[0, 2], &[0, 3]]));
        assert_eq!(b, vec![LatticeVector::from_i64(&[0, 1])]);
        let b = row_lattice_basis(&m(3, &[&[2, 0, 1], &[0, 4, 2]]));
        let x = LatticeVector::from_i64(&[6, -4, 1]);
        let y = solve_in_basis(&b, &x).unwrap();
        assert_eq!(IntMatrix::from_rows(2, &[y]).mul(&IntMatrix::from_rows(3, &b)).row(0), x);
        assert_eq!(solve_in_basis(&b, &LatticeVector::from_i64(&[1, 0, 0])), None);
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(LatticeVector::from_i64(&[4, -6]).primitive(), LatticeVector::from_i64(&[2, -3]));
        assert_eq!(LatticeVector::zero(2).primitive(), LatticeVector::zero(2));
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..4, 1usize..4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..10, r * c).prop_map(move |v| {
                let rows: Vec<LatticeVector> = v.chunks(c).map(LatticeVector::from_i64).collect();
                IntMatrix::from_rows(c, &rows)
            })
        })
    }

    proptest! {
        #[test]
        fn snf_reconstructs(a in small_matrix()) {
            check_snf(&a);
        }

        #[test]
        fn hnf_is_canonical(a in small_matrix()) {
            let (h, u) = hermite_normal_form(&a);
            prop_assert_eq!(u.mul(&a), h.clone());
            prop_assert!(u.det().abs().is_one());
            prop_assert!(is_hermite(&h));
        }

        #[test]
        fn index_invariant_under_row_operations(a in small_matrix(), k in -3i64..4, perm in 0usize..6) {
            let idx = lattice_index(&a);
            let mut rows = a.row_vectors();
            if rows.len() > 1 {
                let add = rows[1].scale(&BigInt::from(k));
                rows[0] = rows[0].add(&add);
                let r = perm % rows.len();
                rows.rotate_left(r);
            }
            prop_assert_eq!(lattice_index(&IntMatrix::from_rows(a.cols(), &rows)), idx);
        }

        #[test]
        fn index_of_square_is_det(v in proptest::collection::vec(-9i64..10, 4)) {
            let a = m(2, &[&v[0..2], &v[2..4]]);
            let det = a.det();
            prop_assume!(!det.is_zero());
            prop_assert_eq!(lattice_index(&a), det.abs());
        }
    }
}
