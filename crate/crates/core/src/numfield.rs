//! Exact arithmetic in a totally real number field: ordered real embeddings
//! with Sturm-isolated roots, exact signs, trace-dual bases, the regular
//! representation, quadratic fundamental units, and regulator signs.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{det_int, det_rat, inv_det, integer_span_witness, IntMatrix, RatMatrix};
use crate::interval::{interval_det, ln_interval, RatInterval};
use crate::poly::{certify_irreducible_totally_real, isolate_real_roots, refine_root, RatPoly};

/// Element of the field, stored as power-basis coordinates in the generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    pub coords: Vec<BigRational>,
}

impl FieldElem {
    pub fn new(coords: Vec<BigRational>) -> Self {
        FieldElem { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        FieldElem::new(
            coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        FieldElem::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        FieldElem::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &BigRational) -> FieldElem {
        FieldElem::new(self.coords.iter().map(|a| a * c).collect())
    }

    fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }
}

struct FieldInner {
    minpoly: RatPoly,
    degree: usize,
    /// theta^(n+k) reduced to the power basis, k = 0..n-2
    high_powers: Vec<Vec<BigRational>>,
    /// isolating intervals of the real roots, ascending; refined in place
    roots: RwLock<Vec<RatInterval>>,
}

/// A totally real field Q(theta) with embeddings ordered by ascending root.
#[derive(Clone)]
pub struct TotallyRealField {
    inner: Arc<FieldInner>,
}

impl std::fmt::Debug for TotallyRealField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TotallyRealField(deg {})", self.degree())
    }
}

impl PartialEq for TotallyRealField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.minpoly == other.inner.minpoly
    }
}

impl TotallyRealField {
    /// Build the field from a monic integer polynomial, irreducible over Q
    /// with all roots real.
    pub fn new(minpoly: RatPoly) -> Result<Self> {
        let n = minpoly.degree();
        if n < 2 {
            return Err(Error::Invalid("minimal polynomial must have degree >= 2".into()));
        }
        if !minpoly.coeffs.last().unwrap().is_one() {
            return Err(Error::Invalid("minimal polynomial must be monic".into()));
        }
        if minpoly.coeffs.iter().any(|c| !c.is_integer()) {
            return Err(Error::Invalid("minimal polynomial must have integer coefficients".into()));
        }
        let g = minpoly.gcd(&minpoly.derivative());
        if g.degree() > 0 {
            return Err(Error::Invalid("minimal polynomial is not squarefree".into()));
        }
        let roots = isolate_real_roots(&minpoly);
        if roots.len() != n {
            return Err(Error::Invalid(format!(
                "field is not totally real: {} of {} roots are real",
                roots.len(),
                n
            )));
        }
        certify_irreducible_totally_real(&minpoly)
            .map_err(|e| Error::Invalid(format!("irreducibility check failed: {}", e)))?;
        // reduce theta^(n..2n-2) mod minpoly
        let mut high_powers = Vec::with_capacity(n.saturating_sub(1));
        let mut cur: Vec<BigRational> = (0..n)
            .map(|i| -minpoly.coeffs[i].clone())
            .collect(); // theta^n
        high_powers.push(cur.clone());
        for _ in 1..n - 1 {
            // multiply by theta
            let top = cur[n - 1].clone();
            let mut next = vec![BigRational::zero(); n];
            for i in (1..n).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..n {
                next[i] += &top * -&minpoly.coeffs[i];
            }
            cur = next;
            high_powers.push(cur.clone());
        }
        Ok(TotallyRealField {
            inner: Arc::new(FieldInner {
                minpoly,
                degree: n,
                high_powers,
                roots: RwLock::new(roots),
            }),
        })
    }

    pub fn from_minpoly_i64(coeffs: &[i64]) -> Result<Self> {
        TotallyRealField::new(RatPoly::from_int(coeffs))
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn minpoly(&self) -> &RatPoly {
        &self.inner.minpoly
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::new(vec![BigRational::zero(); self.degree()])
    }

    pub fn one(&self) -> FieldElem {
        let mut c = vec![BigRational::zero(); self.degree()];
        c[0] = BigRational::one();
        FieldElem::new(c)
    }

    pub fn theta(&self) -> FieldElem {
        let mut c = vec![BigRational::zero(); self.degree()];
        c[1] = BigRational::one();
        FieldElem::new(c)
    }

    pub fn integer(&self, k: i64) -> FieldElem {
        let mut c = vec![BigRational::zero(); self.degree()];
        c[0] = BigRational::from(BigInt::from(k));
        FieldElem::new(c)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let n = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut out = prod[..n].to_vec();
        for k in 0..n - 1 {
            let c = &prod[n + k];
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                out[i] += c * &self.inner.high_powers[k][i];
            }
        }
        FieldElem::new(out)
    }

    pub fn pow(&self, a: &FieldElem, k: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let m = self.mul_matrix(a);
        let (minv, _) = inv_det(&m)?;
        Ok(FieldElem::new(minv.col(0)))
    }

    /// Matrix of multiplication by `a` in the power basis (column j = a * theta^j).
    pub fn mul_matrix(&self, a: &FieldElem) -> RatMatrix {
        let n = self.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = a.clone();
        cols.push(cur.coords.clone());
        for _ in 1..n {
            cur = self.mul(&cur, &self.theta());
            cols.push(cur.coords.clone());
        }
        RatMatrix::from_cols(&cols)
    }

    pub fn trace(&self, a: &FieldElem) -> BigRational {
        let m = self.mul_matrix(a);
        (0..self.degree()).map(|i| m.at(i, i).clone()).sum()
    }

    pub fn norm(&self, a: &FieldElem) -> BigRational {
        det_rat(&self.mul_matrix(a))
    }

    fn refine_root_to(&self, j: usize, target: &BigRational) {
        let mut roots = self.inner.roots.write().unwrap();
        while roots[j].width() > *target {
            roots[j] = refine_root(&self.inner.minpoly, &roots[j]);
        }
    }

    pub fn root_interval(&self, j: usize) -> RatInterval {
        self.inner.roots.read().unwrap()[j].clone()
    }

    /// Exact sign of the j-th real embedding of `a` (embeddings 0-based,
    /// ordered by ascending root).
    pub fn sign_at(&self, a: &FieldElem, j: usize) -> i8 {
        if a.is_zero() {
            return 0;
        }
        let p = a.as_poly();
        loop {
            let iv = self.root_interval(j);
            if let Some(s) = p.eval_interval(&iv).sign() {
                // a nonzero element cannot vanish at any embedding
                debug_assert!(s != 0);
                return s;
            }
            let half = iv.width() / BigRational::from(BigInt::from(2));
            self.refine_root_to(j, &half);
        }
    }

    /// Interval enclosure of J_j(a) with width at most `target`.
    pub fn embed_interval(&self, a: &FieldElem, j: usize, target: &BigRational) -> RatInterval {
        let p = a.as_poly();
        loop {
            let iv = self.root_interval(j);
            let out = p.eval_interval(&iv);
            if out.width() <= *target {
                return out;
            }
            let half = iv.width() / BigRational::from(BigInt::from(2));
            self.refine_root_to(j, &half);
        }
    }

    pub fn is_totally_positive(&self, a: &FieldElem) -> bool {
        (0..self.degree()).all(|j| self.sign_at(a, j) > 0)
    }

    /// Dual basis under the trace pairing: Tr(w_i * out_j) = delta_ij.
    pub fn trace_dual_basis(&self, w: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let n = self.degree();
        assert_eq!(w.len(), n);
        let mut gram = RatMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                gram.set(i, j, self.trace(&self.mul(&w[i], &w[j])));
            }
        }
        let (ginv, _) = inv_det(&gram)?;
        let out = (0..n)
            .map(|j| {
                let mut acc = self.zero();
                for i in 0..n {
                    acc = acc.add(&w[i].scale(ginv.at(i, j)));
                }
                acc
            })
            .collect();
        Ok(out)
    }

    /// Regular representation on the basis `w`: column j holds the
    /// `w`-coordinates of `w_j * u`, so det = norm(u).
    pub fn rho_w(&self, u: &FieldElem, w: &[FieldElem]) -> Result<RatMatrix> {
        let n = self.degree();
        assert_eq!(w.len(), n);
        let wmat = RatMatrix::from_cols(&w.iter().map(|e| e.coords.clone()).collect::<Vec<_>>());
        let (winv, _) = inv_det(&wmat)?;
        let cols: Vec<Vec<BigRational>> = w
            .iter()
            .map(|wj| winv.mul_vec(&self.mul(wj, u).coords))
            .collect();
        Ok(RatMatrix::from_cols(&cols))
    }

    /// Coordinates of `x` in the basis `w`.
    pub fn coords_in_basis(&self, x: &FieldElem, w: &[FieldElem]) -> Result<Vec<BigRational>> {
        let wmat = RatMatrix::from_cols(&w.iter().map(|e| e.coords.clone()).collect::<Vec<_>>());
        let (winv, _) = inv_det(&wmat)?;
        Ok(winv.mul_vec(&x.coords))
    }

    /// Exact sign of det(J_i(w_j))_{i,j} by interval refinement; the
    /// determinant is nonzero whenever `w` is a field basis.
    pub fn embedding_det_sign(&self, w: &[FieldElem]) -> Result<i8> {
        let n = self.degree();
        assert_eq!(w.len(), n);
        let mut bits = 16u32;
        loop {
            let target = BigRational::new(BigInt::one(), BigInt::from(2).pow(bits));
            let m: Vec<Vec<RatInterval>> = (0..n)
                .map(|i| w.iter().map(|e| self.embed_interval(e, i, &target)).collect())
                .collect();
            if let Some(s) = interval_det(&m).sign() {
                if s != 0 {
                    return Ok(s);
                }
            }
            bits *= 2;
            if bits > 1 << 20 {
                return Err(Error::PrecisionCap(bits));
            }
        }
    }

    /// Totally positive fundamental unit of Z[theta] for a real quadratic
    /// field, via the continued fraction of the larger root.
    pub fn fundamental_unit_totally_positive(&self) -> Result<FieldElem> {
        if self.degree() != 2 {
            return Err(Error::Invalid("fundamental unit search requires a quadratic field".into()));
        }
        // minpoly x^2 + c1 x + c0; theta+theta' = -c1, theta*theta' = c0
        let c1 = self.inner.minpoly.coeffs[1].to_integer();
        let c0 = self.inner.minpoly.coeffs[0].to_integer();
        let d: BigInt = &c1 * &c1 - BigInt::from(4) * &c0;
        assert!(d.is_positive());
        let sq = d.sqrt();
        // PQa continued fraction of (p0 + sqrt(d)) / q0
        let mut pp: BigInt = -&c1;
        let mut qq: BigInt = BigInt::from(2);
        let (mut pm1, mut pm2) = (BigInt::one(), BigInt::zero());
        let (mut qm1, mut qm2) = (BigInt::zero(), BigInt::one());
        for step in 0..100_000 {
            let num = &pp + &sq;
            let a = if qq.is_positive() {
                num.div_floor(&qq)
            } else {
                (&num + BigInt::one()).div_floor(&qq)
            };
            let p = &a * &pm1 + &pm2;
            let q = &a * &qm1 + &qm2;
            // N(p - q*theta) = p^2 + c1 p q + c0 q^2
            let nrm = &p * &p + &c1 * &p * &q + &c0 * &q * &q;
            if step > 0 && nrm.clone().abs().is_one() {
                let u = FieldElem::new(vec![
                    BigRational::from(p.clone()),
                    BigRational::from(-q.clone()),
                ]);
                return Ok(self.normalize_unit(u));
            }
            pm2 = pm1;
            pm1 = p;
            qm2 = qm1;
            qm1 = q;
            pp = &a * &qq - &pp;
            qq = (&d - &pp * &pp) / &qq;
        }
        Err(Error::SearchExhausted(100_000))
    }

    fn normalize_unit(&self, u: FieldElem) -> FieldElem {
        let n = self.degree();
        let uinv = self.inv(&u).expect("unit is invertible");
        let candidates = [u.clone(), u.neg(), uinv.clone(), uinv.neg()];
        let one = self.one();
        let big = candidates
            .iter()
            .find(|c| {
                self.sign_at(c, n - 1) > 0 && self.sign_at(&c.sub(&one), n - 1) > 0
            })
            .expect("one of ±u^{±1} exceeds 1 at the last embedding")
            .clone();
        if self.is_totally_positive(&big) {
            big
        } else {
            self.mul(&big, &big)
        }
    }
}

/// Independent totally positive units (n-1 of them for a degree-n field).
#[derive(Debug, Clone)]
pub struct UnitSystem {
    pub field: TotallyRealField,
    pub units: Vec<FieldElem>,
}

impl UnitSystem {
    pub fn new(field: TotallyRealField, units: Vec<FieldElem>) -> Result<Self> {
        if units.len() + 1 != field.degree() {
            return Err(Error::Invalid(format!(
                "expected {} units for a degree-{} field, got {}",
                field.degree() - 1,
                field.degree(),
                units.len()
            )));
        }
        for u in &units {
            if !field.is_totally_positive(u) {
                return Err(Error::Invalid("unit is not totally positive".into()));
            }
        }
        Ok(UnitSystem { field, units })
    }
}

/// Replace each unit by its least power congruent to 1 modulo the ideal
/// lattice `f` (columns = power-basis coordinates of a Z-basis).
pub fn units_congruent_one(units: &UnitSystem, f: &IntMatrix) -> Result<UnitSystem> {
    let field = &units.field;
    let bound = det_int(f).abs();
    let gens: Vec<Vec<BigInt>> = (0..f.cols).map(|j| f.col(j)).collect();
    let mut out = Vec::with_capacity(units.units.len());
    for eps in &units.units {
        let mut pw = eps.clone();
        let mut m = BigInt::one();
        loop {
            let diff = pw.sub(&field.one());
            if diff.coords.iter().all(|c| c.is_integer()) {
                let v: Vec<BigInt> = diff.coords.iter().map(|c| c.to_integer()).collect();
                if integer_span_witness(&v, &gens).is_some() {
                    out.push(pw.clone());
                    break;
                }
            }
            m += 1;
            if m > bound {
                return Err(Error::SearchExhausted(usize::try_from(&bound).unwrap_or(usize::MAX)));
            }
            pw = field.mul(&pw, eps);
        }
    }
    UnitSystem::new(field.clone(), out)
}

/// Sign of det(log J_{proj[j]}(eps_i))_{i,j}, by adaptive interval refinement
/// up to `cap_bits` (default 4096 when `None`).
pub fn regulator_sign(units: &UnitSystem, proj: &[usize], cap_bits: Option<u32>) -> Result<i8> {
    let field = &units.field;
    let k = units.units.len();
    assert_eq!(proj.len(), k);
    let cap = cap_bits.unwrap_or(4096);
    let mut bits = 32u32;
    loop {
        let target = BigRational::new(BigInt::one(), BigInt::from(2).pow(bits));
        let m: Vec<Vec<RatInterval>> = units
            .units
            .iter()
            .map(|eps| {
                proj.iter()
                    .map(|&j| {
                        let iv = field.embed_interval(eps, j, &target);
                        ln_interval(&iv, bits)
                    })
                    .collect()
            })
            .collect();
        if let Some(s) = interval_det(&m).sign() {
            if s != 0 {
                return Ok(s);
            }
        }
        if bits >= cap {
            return Err(Error::PrecisionCap(cap));
        }
        bits = (bits * 2).min(cap);
    }
}

/// A real vector given as the image of field elements under one embedding;
/// signs of pairings with rational vectors are exactly decidable.
#[derive(Debug, Clone)]
pub struct EmbeddedVector {
    pub field: TotallyRealField,
    pub embedding: usize,
    pub elems: Vec<FieldElem>,
}

impl EmbeddedVector {
    pub fn new(field: TotallyRealField, embedding: usize, elems: Vec<FieldElem>) -> Self {
        EmbeddedVector { field, embedding, elems }
    }

    /// Exact sign of <x, self> for a rational vector x.
    pub fn sign_dot(&self, x: &[BigRational]) -> i8 {
        assert_eq!(x.len(), self.elems.len());
        let mut acc = self.field.zero();
        for (xi, e) in x.iter().zip(&self.elems) {
            acc = acc.add(&e.scale(xi));
        }
        self.field.sign_at(&acc, self.embedding)
    }

    /// Scale the i-th component by an exact rational (used by pi_ell).
    pub fn scale_component(&self, i: usize, c: &BigRational) -> EmbeddedVector {
        let mut elems = self.elems.clone();
        elems[i] = elems[i].scale(c);
        EmbeddedVector::new(self.field.clone(), self.embedding, elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> TotallyRealField {
        TotallyRealField::from_minpoly_i64(&[-1, -1, 1]).unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn trace_norm_basics() {
        let f = golden();
        let th = f.theta();
        assert_eq!(f.trace(&th), rat(1, 1));
        assert_eq!(f.norm(&th), rat(-1, 1));
        // theta^2 = theta + 1
        assert_eq!(f.mul(&th, &th), FieldElem::from_i64(&[1, 1]));
        // norm(4 - theta) = 11, the resultant of x^2-x-1 and 4-x
        let e = FieldElem::from_i64(&[4, -1]);
        assert_eq!(f.norm(&e), rat(11, 1));
    }

    #[test]
    fn signs_of_theta() {
        let f = golden();
        let th = f.theta();
        assert_eq!(f.sign_at(&th, 0), -1);
        assert_eq!(f.sign_at(&th, 1), 1);
        assert_eq!(f.sign_at(&f.zero(), 0), 0);
    }

    #[test]
    fn dual_basis_golden() {
        let f = golden();
        let w = vec![f.one(), f.theta()];
        let dual = f.trace_dual_basis(&w).unwrap();
        // w* = ((3-theta)/5, (2theta-1)/5)
        assert_eq!(dual[0], FieldElem::new(vec![rat(3, 5), rat(-1, 5)]));
        assert_eq!(dual[1], FieldElem::new(vec![rat(-1, 5), rat(2, 5)]));
        assert_eq!(f.trace(&f.mul(&w[0], &dual[0])), rat(1, 1));
        // v-vector (Tr w*_1, Tr w*_2) = (1, 0)
        assert_eq!(f.trace(&dual[0]), rat(1, 1));
        assert_eq!(f.trace(&dual[1]), rat(0, 1));
    }

    #[test]
    fn rho_w_examples() {
        let f = golden();
        let w = vec![f.one(), f.theta()];
        let u = FieldElem::from_i64(&[1, 1]);
        let m = f.rho_w(&u, &w).unwrap();
        assert_eq!(m.at(0, 0), &rat(1, 1));
        assert_eq!(m.at(0, 1), &rat(1, 1));
        assert_eq!(m.at(1, 0), &rat(1, 1));
        assert_eq!(m.at(1, 1), &rat(2, 1));
        assert_eq!(f.rho_w(&f.one(), &w).unwrap(), RatMatrix::identity(2));
        assert_eq!(det_rat(&m), f.norm(&u));
    }

    #[test]
    fn fundamental_units() {
        let f = golden();
        let u = f.fundamental_unit_totally_positive().unwrap();
        assert_eq!(u, FieldElem::from_i64(&[1, 1])); // theta + 1

        let f3 = TotallyRealField::from_minpoly_i64(&[-3, 0, 1]).unwrap();
        let u3 = f3.fundamental_unit_totally_positive().unwrap();
        assert_eq!(u3, FieldElem::from_i64(&[2, 1])); // 2 + sqrt(3)
        assert_eq!(f3.norm(&u3).abs(), rat(1, 1));
    }

    #[test]
    fn units_congruent_one_example() {
        let f = golden();
        let eps = FieldElem::from_i64(&[1, 1]);
        let us = UnitSystem::new(f.clone(), vec![eps]).unwrap();
        // ideal (2 theta - 1): lattice basis (2theta-1, theta(2theta-1) = theta+2)
        let ideal = IntMatrix::from_i64(&[vec![-1, 2], vec![2, 1]]);
        let fixed = units_congruent_one(&us, &ideal).unwrap();
        assert_eq!(fixed.units[0], FieldElem::from_i64(&[2, 3])); // (theta+1)^2 = 3theta+2
        // trivial modulus leaves units unchanged
        let triv = units_congruent_one(&us, &IntMatrix::identity(2)).unwrap();
        assert_eq!(triv.units[0], FieldElem::from_i64(&[1, 1]));
        // idempotence
        let again = units_congruent_one(&fixed, &ideal).unwrap();
        assert_eq!(again.units, fixed.units);
    }

    #[test]
    fn regulator_sign_golden() {
        let f = golden();
        let us = UnitSystem::new(f, vec![FieldElem::from_i64(&[1, 1])]).unwrap();
        // J_1(theta+1) ~ 0.382 < 1 so the log is negative
        assert_eq!(regulator_sign(&us, &[0], None).unwrap(), -1);
        assert_eq!(regulator_sign(&us, &[1], None).unwrap(), 1);
    }

    #[test]
    fn embedding_det_sign_golden() {
        let f = golden();
        let w = vec![f.one(), f.theta()];
        // det [[1, J1 theta], [1, J2 theta]] = sqrt(5) > 0
        assert_eq!(f.embedding_det_sign(&w).unwrap(), 1);
        let w2 = vec![f.theta(), f.one()];
        assert_eq!(f.embedding_det_sign(&w2).unwrap(), -1);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = golden();
        let a = FieldElem::new(vec![rat(3, 2), rat(-5, 7)]);
        let ainv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &ainv), f.one());
    }

    #[test]
    fn embedded_vector_signs() {
        let f = golden();
        let dual = f.trace_dual_basis(&[f.one(), f.theta()]).unwrap();
        let q = EmbeddedVector::new(f.clone(), 1, dual);
        // <e_1, Q> = J_2((3-theta)/5) = (3-1.618)/5 > 0
        assert_eq!(q.sign_dot(&[rat(1, 1), rat(0, 1)]), 1);
        // <(1,1), Q> = J_2((2+theta)/5) > 0
        assert_eq!(q.sign_dot(&[rat(1, 1), rat(1, 1)]), 1);
        // Q itself is irrational in each coordinate: no rational vector pairs to 0
        assert_ne!(q.sign_dot(&[rat(-2, 1), rat(1, 1)]), 0);
    }
}
