//! Exact integer and rational linear algebra: Hermite normal form,
//! fraction-free determinants, lattice quotient enumeration, and integer
//! span membership.  Everything is arbitrary precision; no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert!(rows > 0 && cols > 0 && data.len() == rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix::new(r, c, data)
    }

    pub fn from_cols(cols: &[Vec<BigInt>]) -> Self {
        let c = cols.len();
        let r = cols[0].len();
        let mut data = vec![BigInt::zero(); r * c];
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r);
            for (i, x) in col.iter().enumerate() {
                data[i * c + j] = x.clone();
            }
        }
        IntMatrix::new(r, c, data)
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        IntMatrix::new(n, n, data)
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = vec![BigInt::zero(); self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.at(i, j).clone();
            }
        }
        IntMatrix::new(self.cols, self.rows, data)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut data = vec![BigInt::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * other.at(k, j);
                }
            }
        }
        IntMatrix::new(self.rows, other.cols, data)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect(),
        )
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert!(rows > 0 && cols > 0 && data.len() == rows * cols);
        RatMatrix { rows, cols, data }
    }

    pub fn from_cols(cols: &[Vec<BigRational>]) -> Self {
        let c = cols.len();
        let r = cols[0].len();
        let mut data = vec![BigRational::zero(); r * c];
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                data[i * c + j] = x.clone();
            }
        }
        RatMatrix::new(r, c, data)
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigRational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigRational::one();
        }
        RatMatrix::new(n, n, data)
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut data = vec![BigRational::zero(); self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.at(i, j).clone();
            }
        }
        RatMatrix::new(self.cols, self.rows, data)
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut data = vec![BigRational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * other.at(k, j);
                }
            }
        }
        RatMatrix::new(self.rows, other.cols, data)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }
}

/// Row Hermite normal form: returns `(h, u)` with `h = u * m`, `u` unimodular,
/// pivots positive and entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let (rows, cols) = (m.rows, m.cols);
    let mut pivot_row = 0;
    for c in 0..cols {
        if pivot_row == rows {
            break;
        }
        // eliminate below pivot_row in column c with unimodular row pairs
        for i in pivot_row + 1..rows {
            if h.at(i, c).is_zero() {
                continue;
            }
            if h.at(pivot_row, c).is_zero() {
                swap_rows(&mut h, pivot_row, i);
                swap_rows(&mut u, pivot_row, i);
                // track sign by negating one row to keep u unimodular of det +-1; not needed
                continue;
            }
            let a = h.at(pivot_row, c).clone();
            let b = h.at(i, c).clone();
            let ext = a.extended_gcd(&b);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let p = &a / &g;
            let q = &b / &g;
            // [ s  t ] [row_p]   unimodular since s*p + t*q = 1
            // [-q  p ] [row_i]
            combine_rows(&mut h, pivot_row, i, &s, &t, &(-&q), &p);
            combine_rows(&mut u, pivot_row, i, &s, &t, &(-&q), &p);
        }
        if h.at(pivot_row, c).is_zero() {
            continue;
        }
        if h.at(pivot_row, c).is_negative() {
            negate_row(&mut h, pivot_row);
            negate_row(&mut u, pivot_row);
        }
        let pv = h.at(pivot_row, c).clone();
        for i in 0..pivot_row {
            let q = h.at(i, c).div_floor(&pv);
            if !q.is_zero() {
                row_sub_mul(&mut h, i, pivot_row, &q);
                row_sub_mul(&mut u, i, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for j in 0..m.cols {
        let x = m.at(a, j).clone();
        let y = m.at(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols {
        let v = -m.at(r, j).clone();
        m.set(r, j, v);
    }
}

fn row_sub_mul(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for j in 0..m.cols {
        let v = m.at(dst, j) - q * m.at(src, j);
        m.set(dst, j, v);
    }
}

fn combine_rows(m: &mut IntMatrix, r1: usize, r2: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
    for j in 0..m.cols {
        let x = m.at(r1, j).clone();
        let y = m.at(r2, j).clone();
        m.set(r1, j, a * &x + b * &y);
        m.set(r2, j, c * &x + d * &y);
    }
}

/// Fraction-free Bareiss determinant of a square integer matrix.
pub fn det_int(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !a[i][k].is_zero());
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Exact inverse and determinant of a square rational matrix.
pub fn inv_det(m: &RatMatrix) -> Result<(RatMatrix, BigRational)> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = RatMatrix::identity(n);
    let mut det = BigRational::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a.at(i, k).is_zero());
        let p = match pivot {
            Some(p) => p,
            None => return Err(Error::SingularMatrix),
        };
        if p != k {
            for j in 0..n {
                let (x, y) = (a.at(k, j).clone(), a.at(p, j).clone());
                a.set(k, j, y);
                a.set(p, j, x);
                let (x, y) = (inv.at(k, j).clone(), inv.at(p, j).clone());
                inv.set(k, j, y);
                inv.set(p, j, x);
            }
            det = -det;
        }
        let pv = a.at(k, k).clone();
        det *= &pv;
        for j in 0..n {
            let v = a.at(k, j) / &pv;
            a.set(k, j, v);
            let v = inv.at(k, j) / &pv;
            inv.set(k, j, v);
        }
        for i in 0..n {
            if i == k || a.at(i, k).is_zero() {
                continue;
            }
            let f = a.at(i, k).clone();
            for j in 0..n {
                let v = a.at(i, j) - &f * a.at(k, j);
                a.set(i, j, v);
                let v = inv.at(i, j) - &f * inv.at(k, j);
                inv.set(i, j, v);
            }
        }
    }
    Ok((inv, det))
}

/// Determinant of a square rational matrix (0 when singular).
pub fn det_rat(m: &RatMatrix) -> BigRational {
    match inv_det(m) {
        Ok((_, d)) => d,
        Err(_) => BigRational::zero(),
    }
}

/// Canonical representatives of the finite quotient `Z^n / sigma Z^n`.
#[derive(Debug, Clone)]
pub struct LatticeQuotient {
    pub sigma: IntMatrix,
    /// Row HNF of `sigma^t`; its rows are a triangular basis of the column
    /// lattice of `sigma`.
    pub basis: IntMatrix,
    pub reps: Vec<Vec<BigInt>>,
}

impl LatticeQuotient {
    /// Reduce an integer vector to its canonical representative.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        let n = self.sigma.rows;
        let mut v = x.to_vec();
        for j in 0..n {
            let d = self.basis.at(j, j);
            let q = v[j].div_floor(d);
            if !q.is_zero() {
                for t in j..n {
                    v[t] -= &q * self.basis.at(j, t);
                }
            }
        }
        v
    }
}

/// Enumerate representatives of `Z^n / sigma Z^n` through the HNF diagonal box.
pub fn quotient_reps(sigma: &IntMatrix) -> Result<LatticeQuotient> {
    assert_eq!(sigma.rows, sigma.cols);
    let n = sigma.rows;
    if det_int(sigma).is_zero() {
        return Err(Error::SingularMatrix);
    }
    let (h, _) = hnf(&sigma.transpose());
    // full rank: h is upper triangular with positive diagonal
    let mut reps = Vec::new();
    let mut cur = vec![BigInt::zero(); n];
    enumerate_box(&h, 0, &mut cur, &mut reps);
    Ok(LatticeQuotient {
        sigma: sigma.clone(),
        basis: h,
        reps,
    })
}

fn enumerate_box(h: &IntMatrix, j: usize, cur: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    let n = h.rows;
    if j == n {
        out.push(cur.clone());
        return;
    }
    let d = h.at(j, j).clone();
    let mut v = BigInt::zero();
    while v < d {
        cur[j] = v.clone();
        enumerate_box(h, j + 1, cur, out);
        v += 1;
    }
    cur[j] = BigInt::zero();
}

/// Is `v` an integer linear combination of `gens`?  Returns the witness
/// coefficients when it is.
pub fn integer_span_witness(v: &[BigInt], gens: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    if gens.is_empty() {
        return if v.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let cols = v.len();
    let g = IntMatrix::new(
        gens.len(),
        cols,
        gens.iter().flat_map(|r| r.iter().cloned()).collect(),
    );
    let (h, u) = hnf(&g);
    // express v in the rows of h front-to-back via pivot columns
    let mut residue = v.to_vec();
    let mut y = vec![BigInt::zero(); gens.len()];
    for r in 0..h.rows {
        let pivot_col = (0..cols).find(|&c| !h.at(r, c).is_zero());
        let c = match pivot_col {
            Some(c) => c,
            None => break,
        };
        let (q, rem) = residue[c].div_rem(h.at(r, c));
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for t in 0..cols {
                residue[t] -= &q * h.at(r, t);
            }
        }
        y[r] = q;
    }
    if !residue.iter().all(Zero::is_zero) {
        return None;
    }
    // x = y * u
    let x = (0..gens.len())
        .map(|j| (0..gens.len()).map(|r| &y[r] * u.at(r, j)).sum())
        .collect();
    Some(x)
}

pub fn in_integer_span(v: &[BigInt], gens: &[Vec<BigInt>]) -> bool {
    integer_span_witness(v, gens).is_some()
}

/// Basis (as rows) of the left integer kernel `{ x : x * a = 0 }`.
pub fn left_integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (h, u) = hnf(a);
    let mut out = Vec::new();
    for r in 0..h.rows {
        if h.row(r).iter().all(Zero::is_zero) {
            out.push(u.row(r).to_vec());
        }
    }
    out
}

/// Solve `a * x = b` exactly for a matrix with independent columns.
/// Returns `None` when `b` is outside the column span.
pub fn solve_columns(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows, b.len());
    let (rows, cols) = (a.rows, a.cols);
    if cols == 0 {
        return if b.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // Gaussian elimination on the augmented matrix
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..cols).map(|j| a.at(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| !m[i][c].is_zero());
        let p = match p {
            Some(p) => p,
            None => continue,
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for t in c..=cols {
            m[r][t] = &m[r][t] / &pv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for t in c..=cols {
                    m[i][t] = &m[i][t] - &f * &m[r][t];
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if pivots.len() < cols {
        // columns were not independent; treat as unsolvable here
        return None;
    }
    // consistency: rows below rank must have zero rhs
    for row in m.iter().skip(pivots.len()) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (idx, &c) in pivots.iter().enumerate() {
        x[c] = m[idx][cols].clone();
    }
    Some(x)
}

/// Unimodular matrix whose first column is the given primitive vector.
pub fn unimodular_completion(v: &[BigInt]) -> Result<IntMatrix> {
    let n = v.len();
    let col = IntMatrix::new(n, 1, v.to_vec());
    let (h, u) = hnf(&col);
    // h = u * v must be e_1 for a primitive vector
    if !(h.at(0, 0).is_one() && (1..n).all(|i| h.at(i, 0).is_zero())) {
        return Err(Error::Invalid(format!(
            "vector {:?} is not primitive",
            v
        )));
    }
    let (uinv, d) = inv_det(&u.to_rational())?;
    debug_assert!(d.abs().is_one());
    let mut out = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let e = uinv.at(i, j);
            debug_assert!(e.is_integer());
            out.set(i, j, e.to_integer());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hnf_already_triangular() {
        let m = IntMatrix::from_i64(&[vec![2, 1], vec![0, 3]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_permutation() {
        let m = IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, m);
    }

    #[test]
    fn hnf_preserves_det() {
        let m = IntMatrix::from_i64(&[vec![4, 6], vec![2, 2]]);
        let (h, u) = hnf(&m);
        assert_eq!(det_int(&h).abs(), bi(4));
        assert_eq!(det_int(&u).abs(), bi(1));
        assert_eq!(u.mul(&m), h);
    }

    #[test]
    fn quotient_diag() {
        let q = quotient_reps(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(q.reps.len(), 6);
    }

    #[test]
    fn quotient_sheared() {
        let q = quotient_reps(&IntMatrix::from_i64(&[vec![1, 1], vec![0, 2]])).unwrap();
        assert_eq!(q.reps.len(), 2);
        // brute force over the box [0,2)^2: every point congruent to exactly one rep
        let inv = inv_det(&q.sigma.to_rational()).unwrap().0;
        for x in 0..2i64 {
            for y in 0..2i64 {
                let v = vec![BigRational::from(bi(x)), BigRational::from(bi(y))];
                let c = inv.mul_vec(&v);
                let matches = q
                    .reps
                    .iter()
                    .filter(|r| {
                        let rv: Vec<BigRational> =
                            r.iter().map(|t| BigRational::from(t.clone())).collect();
                        let d = inv.mul_vec(&rv);
                        c.iter().zip(&d).all(|(a, b)| (a - b).is_integer())
                    })
                    .count();
                assert_eq!(matches, 1);
            }
        }
    }

    #[test]
    fn quotient_identity() {
        let q = quotient_reps(&IntMatrix::identity(3)).unwrap();
        assert_eq!(q.reps, vec![vec![bi(0), bi(0), bi(0)]]);
    }

    #[test]
    fn quotient_singular_rejected() {
        let r = quotient_reps(&IntMatrix::from_i64(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(r.unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn inv_det_examples() {
        let (inv, d) = inv_det(&RatMatrix::identity(3)).unwrap();
        assert_eq!(inv, RatMatrix::identity(3));
        assert!(d.is_one());

        let m = IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]).to_rational();
        let (inv, d) = inv_det(&m).unwrap();
        assert_eq!(d, BigRational::from(bi(6)));
        assert_eq!(inv.at(0, 0), &BigRational::new(bi(1), bi(2)));
        assert_eq!(inv.at(1, 1), &BigRational::new(bi(1), bi(3)));

        let m = IntMatrix::from_i64(&[vec![1, 1], vec![1, 2]]).to_rational();
        let (inv, d) = inv_det(&m).unwrap();
        assert!(d.is_one());
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(inv.at(0, 0), &BigRational::from(bi(2)));
        assert_eq!(inv.at(0, 1), &BigRational::from(bi(-1)));
    }

    #[test]
    fn span_examples() {
        assert!(in_integer_span(&[bi(2), bi(4)], &[vec![bi(1), bi(2)]]));
        assert!(!in_integer_span(&[bi(1), bi(0)], &[vec![bi(0), bi(1)]]));
        assert!(!in_integer_span(
            &[bi(1), bi(1)],
            &[vec![bi(2), bi(0)], vec![bi(0), bi(2)]]
        ));
        let w = integer_span_witness(&[bi(3), bi(7)], &[vec![bi(1), bi(2)], vec![bi(0), bi(1)]])
            .unwrap();
        assert_eq!(w, vec![bi(3), bi(1)]);
    }

    #[test]
    fn bareiss_matches_rational_det() {
        let m = IntMatrix::from_i64(&[vec![3, -1, 2], vec![0, 4, 1], vec![5, 2, 2]]);
        assert_eq!(det_int(&m), det_rat(&m.to_rational()).to_integer());
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = IntMatrix::from_i64(&[vec![1], vec![2], vec![3]]);
        let k = left_integer_kernel(&a);
        assert_eq!(k.len(), 2);
        for row in &k {
            let s: BigInt = row[0].clone() + 2 * &row[1] + 3 * &row[2];
            assert!(s.is_zero());
        }
    }

    #[test]
    fn completion_roundtrip() {
        let u = unimodular_completion(&[bi(4), bi(-1)]).unwrap();
        assert_eq!(u.col(0), vec![bi(4), bi(-1)]);
        assert_eq!(det_int(&u).abs(), bi(1));
        assert!(unimodular_completion(&[bi(2), bi(4)]).is_err());
    }
}
