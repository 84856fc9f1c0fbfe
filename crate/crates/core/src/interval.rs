//! Closed rational intervals with outward-rounding-free exact arithmetic,
//! plus rational enclosures of the natural logarithm for regulator signs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign when decidable: +1, -1, or None when the interval straddles 0.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn recip(&self) -> RatInterval {
        assert!(!self.contains_zero());
        RatInterval::new(self.hi.recip(), self.lo.recip())
    }

    /// The unique integer inside, when exactly one exists.
    pub fn unique_integer(&self) -> Option<BigInt> {
        let lo = self.lo.ceil().to_integer();
        let hi = self.hi.floor().to_integer();
        if lo == hi {
            Some(lo)
        } else {
            None
        }
    }
}

/// Interval determinant by Laplace expansion (fine for the small sizes here).
pub fn interval_det(m: &[Vec<RatInterval>]) -> RatInterval {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = RatInterval::point(BigRational::zero());
    for j in 0..n {
        let minor: Vec<Vec<RatInterval>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&interval_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from(BigInt::from(2).pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), BigInt::from(2).pow((-e) as u32))
    }
}

/// Enclosure of atanh(t) for exact rational 0 <= t < 1 via the odd series,
/// with `terms` partial-sum terms and a geometric tail bound.
fn atanh_bounds(t: &BigRational, terms: usize) -> RatInterval {
    assert!(!t.is_negative() && t < &BigRational::one());
    let t2 = t * t;
    let mut sum = BigRational::zero();
    let mut pw = t.clone();
    for j in 0..terms {
        sum += &pw / BigRational::from(BigInt::from(2 * j as i64 + 1));
        pw *= &t2;
    }
    // tail <= t^{2K+1} / ((2K+1)(1-t^2))
    let tail = &pw / (BigRational::from(BigInt::from(2 * terms as i64 + 1))
        * (BigRational::one() - &t2));
    RatInterval::new(sum.clone(), sum + tail)
}

/// Rational enclosure of ln(x) for x > 0, with width shrinking in `bits`.
pub fn ln_bounds(x: &BigRational, bits: u32) -> RatInterval {
    assert!(x.is_positive());
    // range-reduce x = m * 2^e with m in [1, 2)
    let mut e: i64 = 0;
    let mut m = x.clone();
    let one = BigRational::one();
    let two = BigRational::from(BigInt::from(2));
    while m >= two {
        m /= &two;
        e += 1;
    }
    while m < one {
        m *= &two;
        e -= 1;
    }
    let terms = (bits as usize) / 3 + 4;
    // ln m = 2 atanh((m-1)/(m+1)), t in [0, 1/3)
    let t = (&m - &one) / (&m + &one);
    let lnm = atanh_bounds(&t, terms).scale(&two);
    // ln 2 = 2 atanh(1/3)
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let ln2 = atanh_bounds(&third, terms).scale(&two);
    let e_rat = BigRational::from(BigInt::from(e));
    lnm.add(&ln2.scale(&e_rat))
}

/// Enclosure of ln over a positive interval (monotone).
pub fn ln_interval(x: &RatInterval, bits: u32) -> RatInterval {
    assert!(x.lo.is_positive());
    let lo = ln_bounds(&x.lo, bits);
    let hi = ln_bounds(&x.hi, bits);
    RatInterval::new(lo.lo, hi.hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn ln_two_enclosure() {
        let iv = ln_bounds(&rat(2, 1), 64);
        // ln 2 = 0.693147180559945...
        assert!(iv.lo < rat(693147181, 1000000000));
        assert!(iv.hi > rat(693147180, 1000000000));
        assert!(iv.width() < pow2(-60));
    }

    #[test]
    fn ln_signs() {
        assert_eq!(ln_bounds(&rat(1, 2), 32).sign(), Some(-1));
        assert_eq!(ln_bounds(&rat(3, 2), 32).sign(), Some(1));
        let near_one = ln_bounds(&rat(1, 1), 32);
        assert!(near_one.lo.is_zero() || near_one.contains_zero());
    }

    #[test]
    fn det_excludes_zero() {
        let m = vec![
            vec![RatInterval::new(rat(99, 100), rat(101, 100)), RatInterval::point(rat(0, 1))],
            vec![RatInterval::point(rat(5, 1)), RatInterval::new(rat(199, 100), rat(201, 100))],
        ];
        let d = interval_det(&m);
        assert_eq!(d.sign(), Some(1));
    }
}
