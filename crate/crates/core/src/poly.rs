//! Dense univariate polynomials over the rationals: evaluation, Sturm
//! sequences, real root isolation, and irreducibility certification for
//! totally real integer polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::RatInterval;

/// Coefficients in ascending order; normalized so the leading one is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    pub coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        RatPoly { coeffs }
    }

    pub fn from_int(coeffs: &[i64]) -> Self {
        RatPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigint(coeffs: &[BigInt]) -> Self {
        RatPoly::new(coeffs.iter().map(|c| BigRational::from(c.clone())).collect())
    }

    pub fn zero() -> Self {
        RatPoly::new(vec![BigRational::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Enclosure of the image of an interval under this polynomial (Horner
    /// with interval arithmetic).
    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&RatInterval::point(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.degree() == 0 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        RatPoly::new(out)
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero());
        let mut rem = self.coeffs.clone();
        let d = divisor.degree();
        if self.degree() < d || self.is_zero() {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - d + 1];
        let lead = divisor.coeffs[d].clone();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / &lead;
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k + j] - &c * b;
                rem[k + j] = v;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.coeffs.last().unwrap().clone();
        RatPoly::new(a.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// Cauchy root bound: all real roots lie in `(-b, b)`.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.coeffs.last().unwrap();
        let mx = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| (c / lead).abs())
            .fold(BigRational::zero(), |a, b| if a > b { a } else { b });
        mx + BigRational::one()
    }
}

/// Sturm chain of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(f: &RatPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                continue;
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a <= b);
        self.variations(a) - self.variations(b)
    }
}

/// Disjoint isolating intervals with non-root rational endpoints, sorted
/// ascending, one interval per distinct real root of the squarefree `f`.
pub fn isolate_real_roots(f: &RatPoly) -> Vec<RatInterval> {
    let chain = SturmChain::new(f);
    let b = f.root_bound();
    let mut lo = -b.clone();
    let hi = b;
    // endpoints of the Cauchy bound are non-roots by construction
    let total = chain.count_roots(&lo, &hi);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), total)];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(RatInterval::new(a, b));
            continue;
        }
        let mut mid = (&a + &b) / BigRational::from(BigInt::from(2));
        // nudge the midpoint off a root if needed
        let quarter = (&b - &a) / BigRational::from(BigInt::from(4));
        let mut shift = quarter;
        while f.eval(&mid).is_zero() {
            shift /= BigRational::from(BigInt::from(2));
            mid += &shift;
        }
        let left = chain.count_roots(&a, &mid);
        stack.push((a, mid.clone(), left));
        stack.push((mid, b, count - left));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Halve an isolating interval for a root of `f`, keeping the root inside.
pub fn refine_root(f: &RatPoly, iv: &RatInterval) -> RatInterval {
    let mut mid = iv.midpoint();
    let mut shift = iv.width() / BigRational::from(BigInt::from(8));
    while f.eval(&mid).is_zero() {
        mid += &shift;
        shift /= BigRational::from(BigInt::from(2));
    }
    let sa = f.eval(&iv.lo).is_positive();
    let sm = f.eval(&mid).is_positive();
    if sa != sm {
        RatInterval::new(iv.lo.clone(), mid)
    } else {
        RatInterval::new(mid, iv.hi.clone())
    }
}

/// Certify irreducibility over Q of a monic squarefree integer polynomial all
/// of whose roots are real.  Tries every product of at most half the roots as
/// a candidate integer factor, using interval symmetric functions refined
/// until each coefficient traps at most one integer.
pub fn certify_irreducible_totally_real(f: &RatPoly) -> Result<()> {
    let n = f.degree();
    if n == 1 {
        return Ok(());
    }
    let mut roots = isolate_real_roots(f);
    if roots.len() != n {
        return Err(Error::Invalid(
            "polynomial does not have all roots real".into(),
        ));
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for size in 1..=n / 2 {
        for subset in subsets_of_size(n, size) {
            loop {
                // candidate factor prod_{i in subset} (x - r_i) with interval coeffs
                let mut poly = vec![RatInterval::point(BigRational::one())];
                for &i in &subset {
                    let r = &roots[i];
                    let mut next = vec![RatInterval::point(BigRational::zero()); poly.len() + 1];
                    for (d, c) in poly.iter().enumerate() {
                        next[d + 1] = next[d + 1].add(c);
                        next[d] = next[d].sub(&c.mul(r));
                    }
                    poly = next;
                }
                let mut candidate = Vec::with_capacity(poly.len());
                let mut needs_refine = false;
                let mut impossible = false;
                for c in &poly {
                    if c.width() >= half {
                        needs_refine = true;
                        break;
                    }
                    match c.unique_integer() {
                        Some(k) => candidate.push(BigRational::from(k)),
                        None => {
                            impossible = true;
                            break;
                        }
                    }
                }
                if impossible {
                    break;
                }
                if needs_refine {
                    for i in &subset {
                        roots[*i] = refine_root(f, &roots[*i]);
                    }
                    continue;
                }
                let g = RatPoly::new(candidate);
                let (_, rem) = f.div_rem(&g);
                if rem.is_zero() {
                    return Err(Error::Invalid(format!(
                        "polynomial is reducible: divisible by a degree-{} factor",
                        size
                    )));
                }
                break;
            }
        }
    }
    Ok(())
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_counts_roots() {
        // x^2 - x - 1: roots ~ -0.618, 1.618
        let f = RatPoly::from_int(&[-1, -1, 1]);
        let chain = SturmChain::new(&f);
        let m2 = BigRational::from(BigInt::from(-2));
        let z = BigRational::zero();
        let two = BigRational::from(BigInt::from(2));
        assert_eq!(chain.count_roots(&m2, &two), 2);
        assert_eq!(chain.count_roots(&m2, &z), 1);
    }

    #[test]
    fn isolation_sorted_disjoint() {
        let f = RatPoly::from_int(&[-1, -2, 1, 1]); // x^3+x^2-2x-1, three real roots
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn irreducibility() {
        assert!(certify_irreducible_totally_real(&RatPoly::from_int(&[-1, -1, 1])).is_ok());
        assert!(certify_irreducible_totally_real(&RatPoly::from_int(&[-1, 0, 1])).is_err());
        assert!(certify_irreducible_totally_real(&RatPoly::from_int(&[-1, -2, 1, 1])).is_ok());
        // x^4 - 10x^2 + 1 (minimal polynomial of sqrt2 + sqrt3): irreducible
        assert!(certify_irreducible_totally_real(&RatPoly::from_int(&[1, 0, -10, 0, 1])).is_ok());
        // (x^2-2)(x^2-3): reducible
        assert!(certify_irreducible_totally_real(&RatPoly::from_int(&[6, 0, -5, 0, 1])).is_err());
    }

    #[test]
    fn refine_halves() {
        let f = RatPoly::from_int(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        let mut iv = roots.last().unwrap().clone();
        for _ in 0..20 {
            iv = refine_root(&f, &iv);
        }
        // sqrt(2) = 1.414213562...
        let approx = BigRational::new(BigInt::from(1414213562i64), BigInt::from(1000000000i64));
        let approx_hi = BigRational::new(BigInt::from(1414213563i64), BigInt::from(1000000000i64));
        assert!(iv.lo < approx_hi && iv.hi > approx);
    }
}
