//! Rational open simplicial cones, the perturbation operator c_Q with its
//! face weights, cocycle defects, parallelepiped lattice-point enumeration,
//! and signed fundamental domains for unit group actions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    det_rat, hnf, integer_span_witness, inv_det, left_integer_kernel, quotient_reps,
    solve_columns, IntMatrix, RatMatrix,
};
use crate::numfield::{regulator_sign, EmbeddedVector, FieldElem, TotallyRealField, UnitSystem};

/// Open simplicial cone spanned by linearly independent primitive integer
/// columns, canonically sorted.  Zero generators means the cone `{0}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    pub ambient: usize,
    pub gens: Vec<Vec<BigInt>>,
}

impl Cone {
    pub fn new(ambient: usize, gens: Vec<Vec<BigInt>>) -> Result<Self> {
        let mut normd: Vec<Vec<BigInt>> = gens
            .into_iter()
            .map(|g| {
                assert_eq!(g.len(), ambient);
                primitive_part(&g)
            })
            .collect();
        normd.sort();
        if !normd.is_empty() {
            let m = IntMatrix::from_cols(&normd);
            let (h, _) = hnf(&m.transpose());
            let rank = (0..h.rows)
                .filter(|&r| !(0..h.cols).all(|c| h.at(r, c).is_zero()))
                .count();
            if rank != normd.len() {
                return Err(Error::Invalid("cone generators are linearly dependent".into()));
            }
        }
        Ok(Cone { ambient, gens: normd })
    }

    pub fn origin(ambient: usize) -> Self {
        Cone { ambient, gens: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    /// Exact membership of a rational point in the open cone.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        if self.gens.is_empty() {
            return x.iter().all(Zero::is_zero);
        }
        let m = RatMatrix::from_cols(
            &self
                .gens
                .iter()
                .map(|g| g.iter().map(|t| BigRational::from(t.clone())).collect())
                .collect::<Vec<_>>(),
        );
        match solve_columns(&m, x) {
            Some(lambda) => lambda.iter().all(|l| l.is_positive()),
            None => false,
        }
    }
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Formal integer combination of cones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConeCombo {
    pub terms: BTreeMap<Cone, BigInt>,
}

impl ConeCombo {
    pub fn new() -> Self {
        ConeCombo { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, cone: Cone, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(cone).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            // remove the zero entry to keep the representation canonical
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&mut self, other: &ConeCombo) {
        for (c, k) in &other.terms {
            self.add_term(c.clone(), k.clone());
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pointwise evaluation of the combination's characteristic function.
    pub fn eval_at(&self, x: &[BigRational]) -> BigInt {
        let mut acc = BigInt::zero();
        for (c, k) in &self.terms {
            if c.contains(x) {
                acc += k;
            }
        }
        acc
    }
}

/// Auxiliary perturbation direction: either an exact rational vector or the
/// image of field elements under a real embedding.
#[derive(Debug, Clone)]
pub enum PerturbationVector {
    Rational(Vec<BigRational>),
    Embedded(EmbeddedVector),
}

impl PerturbationVector {
    pub fn dim(&self) -> usize {
        match self {
            PerturbationVector::Rational(v) => v.len(),
            PerturbationVector::Embedded(e) => e.elems.len(),
        }
    }

    /// Exact sign of the pairing with a rational vector.
    pub fn sign_dot(&self, x: &[BigRational]) -> i8 {
        match self {
            PerturbationVector::Rational(q) => {
                let s: BigRational = q.iter().zip(x).map(|(a, b)| a * b).sum();
                if s.is_zero() {
                    0
                } else if s.is_positive() {
                    1
                } else {
                    -1
                }
            }
            PerturbationVector::Embedded(e) => e.sign_dot(x),
        }
    }

    /// Scale one component by a positive rational (the pi_ell action).
    pub fn scale_component(&self, i: usize, c: &BigRational) -> PerturbationVector {
        match self {
            PerturbationVector::Rational(q) => {
                let mut v = q.clone();
                v[i] = &v[i] * c;
                PerturbationVector::Rational(v)
            }
            PerturbationVector::Embedded(e) => {
                PerturbationVector::Embedded(e.scale_component(i, c))
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> PerturbationVector {
        match self {
            PerturbationVector::Rational(q) => {
                PerturbationVector::Rational(q.iter().map(|t| t * c).collect())
            }
            PerturbationVector::Embedded(e) => {
                let mut out = e.clone();
                for el in &mut out.elems {
                    *el = el.scale(c);
                }
                PerturbationVector::Embedded(out)
            }
        }
    }
}

/// Face inclusion data of the perturbed cone: the exact signs of
/// (Q sigma^{-t})_i determine every face weight.
#[derive(Debug, Clone)]
pub struct FaceWeights {
    pub sigma: RatMatrix,
    pub sigma_inv: RatMatrix,
    /// sign of (sigma^{-1} Q)_i for each i
    pub signs: Vec<i8>,
}

impl FaceWeights {
    /// weight(C_I) = prod_{i not in I} (1 + sign_i)/2.
    pub fn weight(&self, face: &[usize]) -> u8 {
        let n = self.signs.len();
        for i in 0..n {
            if !face.contains(&i) && self.signs[i] < 0 {
                return 0;
            }
        }
        1
    }

    /// All subsets with weight 1 (the supersets of the negative-sign set).
    pub fn included_faces(&self) -> Vec<Vec<usize>> {
        let n = self.signs.len();
        let required: Vec<usize> = (0..n).filter(|&i| self.signs[i] < 0).collect();
        let free: Vec<usize> = (0..n).filter(|&i| self.signs[i] > 0).collect();
        let mut out = Vec::new();
        for mask in 0..(1u32 << free.len()) {
            let mut face = required.clone();
            for (b, &i) in free.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    face.push(i);
                }
            }
            face.sort_unstable();
            out.push(face);
        }
        out
    }

    /// The full weight map over all subsets.
    pub fn weights_map(&self) -> BTreeMap<Vec<usize>, u8> {
        let n = self.signs.len();
        let mut out = BTreeMap::new();
        for mask in 0..(1u32 << n) {
            let face: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let w = self.weight(&face);
            out.insert(face, w);
        }
        out
    }
}

/// Face weights of the cone with columns `sigma` under perturbation by `q`.
pub fn face_weights(sigma: &RatMatrix, q: &PerturbationVector) -> Result<FaceWeights> {
    assert_eq!(sigma.rows, sigma.cols);
    let (sigma_inv, _) = inv_det(sigma)?;
    let n = sigma.rows;
    let mut signs = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<BigRational> = (0..n).map(|j| sigma_inv.at(i, j).clone()).collect();
        let s = q.sign_dot(&row);
        if s == 0 {
            return Err(Error::DegenerateQ(i));
        }
        signs.push(s);
    }
    Ok(FaceWeights { sigma: sigma.clone(), sigma_inv, signs })
}

/// The perturbed characteristic function c_Q at a rational point: 1 iff all
/// sigma-coordinates of `w` are nonnegative and each vanishing coordinate has
/// positive Q-coordinate.
pub fn cq_eval(sigma: &RatMatrix, q: &PerturbationVector, w: &[BigRational]) -> Result<u8> {
    let fw = face_weights(sigma, q)?;
    Ok(cq_eval_with_weights(&fw, w))
}

/// c_Q evaluation reusing precomputed face weights.
pub fn cq_eval_with_weights(fw: &FaceWeights, w: &[BigRational]) -> u8 {
    let lambda = fw.sigma_inv.mul_vec(w);
    for (i, l) in lambda.iter().enumerate() {
        if l.is_negative() {
            return 0;
        }
        if l.is_zero() && fw.signs[i] < 0 {
            return 0;
        }
    }
    1
}

/// Expand c_Q (or its negative, via `coeff`) into a combination of open faces.
pub fn cq_combo(sigma_cols: &[Vec<BigInt>], q: &PerturbationVector, coeff: BigInt) -> Result<ConeCombo> {
    let n = sigma_cols[0].len();
    let rat_cols: Vec<Vec<BigRational>> = sigma_cols
        .iter()
        .map(|c| c.iter().map(|t| BigRational::from(t.clone())).collect())
        .collect();
    let sigma = RatMatrix::from_cols(&rat_cols);
    let fw = face_weights(&sigma, q)?;
    let mut combo = ConeCombo::new();
    for face in fw.included_faces() {
        let gens: Vec<Vec<BigInt>> = face.iter().map(|&i| sigma_cols[i].clone()).collect();
        combo.add_term(Cone::new(n, gens)?, coeff.clone());
    }
    Ok(combo)
}

/// The Shintani cochain value on a tuple of first columns: sign of the
/// determinant times the perturbed cone, as a face combination; zero when the
/// columns are dependent.
pub fn phi_sh_combo(first_cols: &[Vec<BigInt>], q: &PerturbationVector) -> Result<ConeCombo> {
    let n = first_cols[0].len();
    assert_eq!(first_cols.len(), n);
    let rat = RatMatrix::from_cols(
        &first_cols
            .iter()
            .map(|c| c.iter().map(|t| BigRational::from(t.clone())).collect())
            .collect::<Vec<_>>(),
    );
    let det = det_rat(&rat);
    if det.is_zero() {
        return Ok(ConeCombo::new());
    }
    let sgn = if det.is_positive() { BigInt::one() } else { -BigInt::one() };
    cq_combo(first_cols, q, sgn)
}

/// Alternating sum of oriented c_Q terms over the (n+1)-tuple with one vector
/// dropped each time, as a face combination (the cocycle defect).
pub fn cocycle_defect(vectors: &[Vec<BigInt>], q: &PerturbationVector) -> Result<ConeCombo> {
    let n = vectors[0].len();
    assert_eq!(vectors.len(), n + 1);
    let mut combo = ConeCombo::new();
    for i in 0..=n {
        let subset: Vec<Vec<BigInt>> = vectors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let rat = RatMatrix::from_cols(
            &subset
                .iter()
                .map(|c| c.iter().map(|t| BigRational::from(t.clone())).collect())
                .collect::<Vec<_>>(),
        );
        let det = det_rat(&rat);
        if det.is_zero() {
            continue;
        }
        let mut orient = if det.is_positive() { BigInt::one() } else { -BigInt::one() };
        if i % 2 == 1 {
            orient = -orient;
        }
        combo.add(&cq_combo(&subset, q, orient)?);
    }
    Ok(combo)
}

/// All points of the shifted lattice `v + Z^n` inside the half-open
/// parallelepiped of the columns indexed by `face` (coordinates in (0, 1]).
pub fn parallelepiped_points(
    sigma_cols: &[Vec<BigInt>],
    face: &[usize],
    v: &[BigRational],
) -> Vec<Vec<BigRational>> {
    let n = v.len();
    if face.is_empty() {
        return if v.iter().all(|c| c.is_integer()) {
            vec![vec![BigRational::zero(); n]]
        } else {
            Vec::new()
        };
    }
    let cols: Vec<Vec<BigInt>> = face.iter().map(|&i| sigma_cols[i].clone()).collect();
    let r = cols.len();
    let m = IntMatrix::from_cols(&cols);
    let rat_cols: Vec<Vec<BigRational>> = cols
        .iter()
        .map(|c| c.iter().map(|t| BigRational::from(t.clone())).collect())
        .collect();
    let mrat = RatMatrix::from_cols(&rat_cols);

    // affine lattice {m : v + m in span(cols)}: constraints A (v + m) = 0
    // where the rows of A span the integer orthogonal complement.
    let a_rows = left_integer_kernel(&m);
    let particular: Vec<BigRational>;
    let kernel_cols: Vec<Vec<BigInt>>;
    if a_rows.is_empty() {
        particular = vec![BigRational::zero(); n];
        kernel_cols = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
    } else {
        let b: Vec<BigRational> = a_rows
            .iter()
            .map(|row| -row.iter().zip(v).map(|(a, x)| BigRational::from(a.clone()) * x).sum::<BigRational>())
            .collect();
        if b.iter().any(|x| !x.is_integer()) {
            return Vec::new();
        }
        let bint: Vec<BigInt> = b.iter().map(|x| x.to_integer()).collect();
        // solve A m = b over Z: b as an integer combination of the columns of A
        let a_cols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| a_rows.iter().map(|row| row[j].clone()).collect())
            .collect();
        let m0 = match integer_span_witness(&bint, &a_cols) {
            Some(m0) => m0,
            None => return Vec::new(),
        };
        particular = m0.iter().map(|t| BigRational::from(t.clone())).collect();
        let amat = IntMatrix::new(
            a_rows.len(),
            n,
            a_rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        );
        kernel_cols = left_integer_kernel(&amat.transpose());
    }
    debug_assert_eq!(kernel_cols.len(), r);

    // coordinates of the affine lattice in the cone basis
    let base: Vec<BigRational> = v.iter().zip(&particular).map(|(a, b)| a + b).collect();
    let x0 = solve_columns(&mrat, &base).expect("base point lies in the span");
    let kc: Vec<Vec<BigRational>> = kernel_cols
        .iter()
        .map(|k| {
            let kr: Vec<BigRational> = k.iter().map(|t| BigRational::from(t.clone())).collect();
            solve_columns(&mrat, &kr).expect("kernel vector lies in the span")
        })
        .collect();
    let c = RatMatrix::from_cols(&kc);
    let (cinv, _) = inv_det(&c).expect("kernel basis is independent");
    // cinv is an integer matrix because Z^r is a sublattice of the coordinate lattice
    let mut mint = IntMatrix::identity(r);
    for i in 0..r {
        for j in 0..r {
            let e = cinv.at(i, j);
            debug_assert!(e.is_integer());
            mint.set(i, j, e.to_integer());
        }
    }
    let reps = quotient_reps(&mint).expect("kernel index matrix is nonsingular");
    let mut out = Vec::new();
    for y in &reps.reps {
        let yr: Vec<BigRational> = y.iter().map(|t| BigRational::from(t.clone())).collect();
        let lam = c.mul_vec(&yr);
        // shift each cone coordinate into (0, 1]
        let shifted: Vec<BigRational> = x0
            .iter()
            .zip(&lam)
            .map(|(a, b)| {
                let t = a + b;
                let fr = &t - t.floor();
                if fr.is_zero() {
                    BigRational::one()
                } else {
                    fr
                }
            })
            .collect();
        out.push(mrat.mul_vec(&shifted));
    }
    out.sort();
    out
}

/// The face decomposition of the perturbed cone intersected with `v + Z^n`:
/// emits one translated sub-lattice origin per (class, included face) pair.
pub fn cq_decomposition(
    sigma: &IntMatrix,
    q: &PerturbationVector,
    v: &[BigRational],
) -> Result<Vec<(Vec<BigRational>, Vec<usize>)>> {
    let n = sigma.rows;
    let rat = sigma.to_rational();
    let fw = face_weights(&rat, q)?;
    let quot = quotient_reps(sigma)?;
    let mut out = Vec::new();
    for x in &quot.reps {
        let shifted: Vec<BigRational> = v
            .iter()
            .zip(x)
            .map(|(a, b)| a + BigRational::from(b.clone()))
            .collect();
        let s = fw.sigma_inv.mul_vec(&shifted);
        let j_set: Vec<usize> = (0..n).filter(|&i| s[i].is_integer()).collect();
        let j_bar: Vec<usize> = (0..n).filter(|i| !j_set.contains(i)).collect();
        // faces I with J-bar ⊆ I, I = J-bar ∪ S for S ⊆ J
        for mask in 0..(1u32 << j_set.len()) {
            let mut face = j_bar.clone();
            for (b, &i) in j_set.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    face.push(i);
                }
            }
            face.sort_unstable();
            if fw.weight(&face) == 0 {
                continue;
            }
            let coords: Vec<BigRational> = (0..n)
                .map(|i| {
                    if j_set.contains(&i) {
                        if face.contains(&i) {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    } else {
                        let fr = &s[i] - s[i].floor();
                        fr
                    }
                })
                .collect();
            let point = rat.mul_vec(&coords);
            out.push((point, face));
        }
    }
    Ok(out)
}

/// One signed cone of a fundamental domain, with its face-inclusion data.
#[derive(Debug, Clone)]
pub struct DomainPiece {
    pub coeff: i8,
    pub cone: Cone,
    pub weights: FaceWeights,
}

/// Signed fundamental domain for the action of totally positive units on the
/// positive orthant, written in the coordinates of the basis `w`.
#[derive(Debug, Clone)]
pub struct SignedDomain {
    pub field: TotallyRealField,
    pub basis: Vec<FieldElem>,
    pub perturbation: PerturbationVector,
    pub pieces: Vec<DomainPiece>,
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    fn heap(k: usize, idx: &mut Vec<usize>, sign: &mut i8, out: &mut Vec<(Vec<usize>, i8)>) {
        if k <= 1 {
            out.push((idx.clone(), *sign));
            return;
        }
        for i in 0..k {
            heap(k - 1, idx, sign, out);
            if k % 2 == 0 {
                idx.swap(i, k - 1);
            } else {
                idx.swap(0, k - 1);
            }
            *sign = -*sign;
        }
    }
    let mut sign = 1i8;
    heap(k, &mut idx, &mut sign, &mut out);
    out
}

/// Construct the signed fundamental domain attached to an ordered system of
/// totally positive independent units and a field basis `w`.
pub fn signed_fundamental_domain(
    units: &UnitSystem,
    w: &[FieldElem],
) -> Result<SignedDomain> {
    let field = &units.field;
    let n = field.degree();
    assert_eq!(w.len(), n);
    let w_u = regulator_sign(units, &(0..n - 1).collect::<Vec<_>>(), None)?;
    let det_jw = field.embedding_det_sign(w)?;
    let dual = field.trace_dual_basis(w)?;
    let q = PerturbationVector::Embedded(EmbeddedVector::new(field.clone(), n - 1, dual));
    let mut pieces = Vec::new();
    for (perm, psign) in permutations(n - 1) {
        // v_{i,sigma} = eps_{sigma(1)} ... eps_{sigma(i-1)}
        let mut vs = Vec::with_capacity(n);
        let mut cur = field.one();
        vs.push(cur.clone());
        for i in 0..n - 1 {
            cur = field.mul(&cur, &units.units[perm[i]]);
            vs.push(cur.clone());
        }
        let coord_cols: Vec<Vec<BigRational>> = vs
            .iter()
            .map(|u| field.coords_in_basis(u, w))
            .collect::<Result<Vec<_>>>()?;
        let cmat = RatMatrix::from_cols(&coord_cols);
        let det = det_rat(&cmat);
        if det.is_zero() {
            return Err(Error::Invalid("degenerate unit tuple: units are dependent".into()));
        }
        let det_sign = if det.is_positive() { 1i8 } else { -1i8 };
        let mut coeff = w_u * psign * det_sign * det_jw;
        if (n - 1) % 2 == 1 {
            coeff = -coeff;
        }
        // scale columns to primitive integer generators (positive scaling only)
        let int_cols: Vec<Vec<BigInt>> = coord_cols
            .iter()
            .map(|c| {
                let mut lcm = BigInt::one();
                for t in c {
                    lcm = lcm.lcm(t.denom());
                }
                let ints: Vec<BigInt> = c.iter().map(|t| (t * BigRational::from(lcm.clone())).to_integer()).collect();
                primitive_part(&ints)
            })
            .collect();
        let cone = Cone::new(n, int_cols.clone())?;
        let sig = RatMatrix::from_cols(
            &int_cols
                .iter()
                .map(|c| c.iter().map(|t| BigRational::from(t.clone())).collect())
                .collect::<Vec<_>>(),
        );
        let weights = face_weights(&sig, &q)?;
        pieces.push(DomainPiece { coeff, cone, weights });
    }
    Ok(SignedDomain {
        field: field.clone(),
        basis: w.to_vec(),
        perturbation: q,
        pieces,
    })
}

impl SignedDomain {
    /// Signed characteristic value of the whole domain at basis coordinates x.
    pub fn eval_at(&self, x: &[BigRational]) -> BigInt {
        let mut acc = BigInt::zero();
        for p in &self.pieces {
            let v = cq_eval_with_weights(&p.weights, x);
            if v == 1 {
                acc += BigInt::from(p.coeff);
            }
        }
        acc
    }

    /// Orbit sum over the unit group of the signed characteristic function at
    /// the point J(xi), computed over growing exponent windows until the
    /// window boundary is inert and the total stabilizes.
    pub fn orbit_sum(&self, units: &UnitSystem, xi: &FieldElem) -> Result<BigInt> {
        let field = &self.field;
        let rank = units.units.len();
        let mut prev_total: Option<BigInt> = None;
        for window in 2..=12i64 {
            let mut total = BigInt::zero();
            let mut boundary_hit = false;
            let mut exps = vec![-window; rank];
            loop {
                let on_boundary = exps.iter().any(|e| e.abs() == window);
                // u = prod eps_i^{e_i}
                let mut u = field.one();
                for (i, &e) in exps.iter().enumerate() {
                    let p = field.pow(&units.units[i], e.unsigned_abs());
                    let p = if e < 0 { field.inv(&p)? } else { p };
                    u = field.mul(&u, &p);
                }
                let ux = field.mul(&u, xi);
                let coords = field.coords_in_basis(&ux, &self.basis)?;
                let val = self.eval_at(&coords);
                if !val.is_zero() && on_boundary {
                    boundary_hit = true;
                }
                total += val;
                // advance the exponent counter
                let mut i = 0;
                loop {
                    if i == rank {
                        break;
                    }
                    exps[i] += 1;
                    if exps[i] <= window {
                        break;
                    }
                    exps[i] = -window;
                    i += 1;
                }
                if i == rank {
                    break;
                }
            }
            if !boundary_hit {
                if prev_total.as_ref() == Some(&total) {
                    return Ok(total);
                }
                prev_total = Some(total);
            } else {
                prev_total = None;
            }
        }
        Err(Error::SearchExhausted(12))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn rv(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn qrat(v: &[i64]) -> PerturbationVector {
        PerturbationVector::Rational(rv(v))
    }

    #[test]
    fn cq_eval_examples() {
        let id = RatMatrix::identity(2);
        assert_eq!(cq_eval(&id, &qrat(&[1, 1]), &rv(&[0, 0])).unwrap(), 1);
        assert_eq!(cq_eval(&id, &qrat(&[1, -1]), &rv(&[0, 0])).unwrap(), 0);
        assert_eq!(cq_eval(&id, &qrat(&[1, -1]), &rv(&[0, 5])).unwrap(), 1);
        // degenerate Q for this sigma
        assert!(matches!(
            cq_eval(&id, &qrat(&[0, 1]), &rv(&[1, 1])),
            Err(Error::DegenerateQ(0))
        ));
    }

    #[test]
    fn cq_limit_definition() {
        // c_Q(w) = 1_C(w + eps Q) for small eps, rational data
        let id = RatMatrix::identity(2);
        let cols = vec![iv(&[1, 0]), iv(&[0, 1])];
        let cone = Cone::new(2, cols).unwrap();
        let q = [rat(1, 1), rat(-1, 1)];
        for w in [rv(&[0, 0]), rv(&[0, 5]), rv(&[3, 0]), rv(&[2, 1]), rv(&[-1, 2])] {
            let direct = cq_eval(&id, &qrat(&[1, -1]), &w).unwrap();
            let mut k = 4u32;
            let (mut last, mut cur);
            loop {
                let eps1 = BigRational::new(BigInt::one(), BigInt::from(2).pow(k));
                let eps2 = BigRational::new(BigInt::one(), BigInt::from(2).pow(k + 1));
                let shift = |e: &BigRational| -> Vec<BigRational> {
                    w.iter().zip(&q).map(|(a, b)| a + b * e).collect()
                };
                last = cone.contains(&shift(&eps1));
                cur = cone.contains(&shift(&eps2));
                if last == cur {
                    break;
                }
                k += 1;
                assert!(k < 40);
            }
            assert_eq!(direct == 1, cur);
        }
    }

    #[test]
    fn face_weights_example() {
        let id = RatMatrix::identity(2);
        let fw = face_weights(&id, &qrat(&[1, -1])).unwrap();
        assert_eq!(fw.weight(&[0, 1]), 1);
        assert_eq!(fw.weight(&[1]), 1);
        assert_eq!(fw.weight(&[0]), 0);
        assert_eq!(fw.weight(&[]), 0);
        // all-positive Q includes every face
        let fw2 = face_weights(&id, &qrat(&[2, 3])).unwrap();
        assert!(fw2.weights_map().values().all(|&w| w == 1));
    }

    #[test]
    fn weights_match_pointwise_cq() {
        // consistency: c_Q(w) = sum_I weight(I) 1_{C_I}(w) on sample points
        let cols = vec![iv(&[2, 1]), iv(&[-1, 1])];
        let sigma = RatMatrix::from_cols(&[rv(&[2, 1]), rv(&[-1, 1])]);
        let q = qrat(&[3, 1]);
        let fw = face_weights(&sigma, &q).unwrap();
        let pts = [
            rv(&[1, 1]),
            rv(&[2, 1]),
            rv(&[-1, 1]),
            rv(&[0, 0]),
            rv(&[4, 2]),
            rv(&[-2, 2]),
            rv(&[1, 0]),
        ];
        for w in &pts {
            let direct = cq_eval_with_weights(&fw, w);
            let mut total = 0u8;
            for face in fw.included_faces() {
                let gens: Vec<Vec<BigInt>> = face.iter().map(|&i| cols[i].clone()).collect();
                let c = Cone::new(2, gens).unwrap();
                if c.contains(w) {
                    total += 1;
                }
            }
            assert_eq!(direct, total);
        }
    }

    #[test]
    fn defect_vanishes_on_positive_orthant() {
        let vs = vec![iv(&[1, 0]), iv(&[1, 1]), iv(&[0, 1])];
        let combo = cocycle_defect(&vs, &qrat(&[2, 3])).unwrap();
        for p in [rv(&[2, 1]), rv(&[1, 1]), rv(&[5, 2]), rv(&[1, 3]), rv(&[7, 1])] {
            assert!(combo.eval_at(&p).is_zero());
        }
    }

    #[test]
    fn defect_zero_in_dim_one() {
        let vs = vec![iv(&[1]), iv(&[2])];
        let combo = cocycle_defect(&vs, &qrat(&[1])).unwrap();
        assert!(combo.is_empty());
    }

    #[test]
    fn parallelepiped_examples() {
        // diag(2,1), full face, v = 0 -> {(1,1),(2,1)}
        let cols = vec![iv(&[2, 0]), iv(&[0, 1])];
        let pts = parallelepiped_points(&cols, &[0, 1], &rv(&[0, 0]));
        assert_eq!(pts, vec![rv(&[1, 1]), rv(&[2, 1])]);
        // empty face
        assert_eq!(
            parallelepiped_points(&cols, &[], &rv(&[0, 0])),
            vec![rv(&[0, 0])]
        );
        assert!(parallelepiped_points(&cols, &[], &[rat(1, 2), rat(0, 1)]).is_empty());
        // identity, v = (1/2, 1/2)
        let id_cols = vec![iv(&[1, 0]), iv(&[0, 1])];
        let pts = parallelepiped_points(&id_cols, &[0, 1], &[rat(1, 2), rat(1, 2)]);
        assert_eq!(pts, vec![vec![rat(1, 2), rat(1, 2)]]);
        // one-dimensional face of a 2d cone
        let pts = parallelepiped_points(&id_cols, &[0], &rv(&[0, 0]));
        assert_eq!(pts, vec![rv(&[1, 0])]);
    }

    #[test]
    fn decomposition_identity_cone() {
        let sigma = IntMatrix::identity(2);
        let out = cq_decomposition(&sigma, &qrat(&[1, 1]), &rv(&[0, 0])).unwrap();
        assert_eq!(out.len(), 4);
        let mut faces: Vec<Vec<usize>> = out.iter().map(|(_, f)| f.clone()).collect();
        faces.sort();
        assert_eq!(faces, vec![vec![], vec![0], vec![0, 1], vec![1]]);
        for (pt, face) in &out {
            match face.as_slice() {
                [] => assert_eq!(pt, &rv(&[0, 0])),
                [0] => assert_eq!(pt, &rv(&[1, 0])),
                [1] => assert_eq!(pt, &rv(&[0, 1])),
                [0, 1] => assert_eq!(pt, &rv(&[1, 1])),
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn decomposition_counts_match_direct_membership() {
        // partition check on a box: counts of decomposition points inside
        // [-5,5]^2 equal direct c_Q membership counts
        let sigma = IntMatrix::from_i64(&[vec![2, -1], vec![1, 1]]);
        let q = qrat(&[3, 1]);
        let v = [rat(1, 3), rat(0, 1)];
        let decomp = cq_decomposition(&sigma, &q, &v).unwrap();
        let fw = face_weights(&sigma.to_rational(), &q).unwrap();
        let mut direct = 0usize;
        let mut from_decomp = 0usize;
        for x in -5..=5i64 {
            for y in -5..=5i64 {
                let p = [&v[0] + rat(x, 1), &v[1] + rat(y, 1)];
                if cq_eval_with_weights(&fw, &p) == 1 {
                    direct += 1;
                }
                // does p lie in one of the translated sub-lattices?
                for (a, face) in &decomp {
                    let diff: Vec<BigRational> = p.iter().zip(a).map(|(t, s)| t - s).collect();
                    let gens: Vec<Vec<BigRational>> =
                        face.iter().map(|&i| {
                            sigma.col(i).iter().map(|t| BigRational::from(t.clone())).collect()
                        }).collect();
                    if face.is_empty() {
                        if diff.iter().all(Zero::is_zero) {
                            from_decomp += 1;
                        }
                        continue;
                    }
                    let m = RatMatrix::from_cols(&gens);
                    if let Some(lambda) = solve_columns(&m, &diff) {
                        if lambda.iter().all(|l| !l.is_negative() && l.is_integer()) {
                            from_decomp += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(direct, from_decomp);
    }

    #[test]
    fn q_scaling_invariance() {
        let sigma = RatMatrix::from_cols(&[rv(&[2, 1]), rv(&[-1, 1])]);
        let q1 = qrat(&[3, 1]);
        let q2 = q1.scale(&rat(7, 3));
        let f1 = face_weights(&sigma, &q1).unwrap();
        let f2 = face_weights(&sigma, &q2).unwrap();
        assert_eq!(f1.signs, f2.signs);
    }
}
