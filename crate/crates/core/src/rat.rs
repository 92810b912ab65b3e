//! Helpers on `BigRational`: construction shorthands, exact root brackets,
//! perfect-power tests, outward-rounded interval arithmetic and decimal
//! rendering of algebraic ratios.
//!
//! `BigRational` (from `num-rational`) already guarantees lowest terms and a
//! positive denominator, so equality is structural; everything here builds on
//! that.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Shorthand for an integer rational.
pub fn rat_i(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders `r` as `p/q` in lowest terms, or just `p` when the denominator
/// is one. This is the canonical exact-value form used in JSON output.
pub fn render(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or a decimal-free signed integer string.
pub fn parse(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}

/// Floor of the n-th root of a nonnegative integer, by Newton bisection on
/// `BigUint`. `n >= 1`.
pub fn nth_root_floor(v: &BigUint, n: u32) -> BigUint {
    assert!(n >= 1);
    if v.is_zero() || v.is_one() || n == 1 {
        return v.clone();
    }
    let bits = v.bits();
    let mut hi = BigUint::one() << (bits / u64::from(n) + 1);
    let mut lo = BigUint::zero();
    // Invariant: lo^n <= v < hi^n.
    while &lo + 1u32 < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if mid.pow(n) <= *v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `(floor, ceil)` bracket of the n-th root of a nonnegative integer; the two
/// collapse exactly when `v` is a perfect n-th power.
pub fn nth_root_bracket(v: &BigUint, n: u32) -> (BigUint, BigUint) {
    let f = nth_root_floor(v, n);
    if f.pow(n) == *v {
        (f.clone(), f)
    } else {
        let c = &f + 1u32;
        (f, c)
    }
}

/// Exact square root of a nonnegative rational if it is a perfect square.
pub fn sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let pn = r.numer().magnitude();
    let pd = r.denom().magnitude();
    let sn = nth_root_floor(pn, 2);
    let sd = nth_root_floor(pd, 2);
    if &sn * &sn == *pn && &sd * &sd == *pd {
        Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

/// Rational enclosure `[lo, hi]` of `sqrt(r)` for `r >= 0`, with
/// `hi - lo <= 1/2^prec`.
pub fn sqrt_enclosure(r: &BigRational, prec: u32) -> (BigRational, BigRational) {
    assert!(!r.is_negative());
    if let Some(s) = sqrt_exact(r) {
        return (s.clone(), s);
    }
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^prec so the integer root carries
    // prec bits after the point.
    let p = r.numer().magnitude();
    let q = r.denom().magnitude();
    let scaled = p * q << (2 * u64::from(prec));
    let root = nth_root_floor(&scaled, 2);
    let denom = BigInt::from(q.clone()) << u64::from(prec);
    let lo = BigRational::new(BigInt::from(root.clone()), denom.clone());
    let hi = BigRational::new(BigInt::from(root + 1u32), denom);
    (lo, hi)
}

/// A closed rational interval used for outward-rounded box arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        Interval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        if c.is_negative() {
            Interval::new(&self.hi * c, &self.lo * c)
        } else {
            Interval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn shift(&self, c: &BigRational) -> Interval {
        Interval::new(&self.lo + c, &self.hi + c)
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> Interval {
        assert!(!self.contains_zero(), "reciprocal of interval through zero");
        Interval::new(
            BigRational::one() / self.hi.clone(),
            BigRational::one() / self.lo.clone(),
        )
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Renders `(num/den)^(1/n)` (nonnegative) as a decimal string with `sig`
/// significant digits, truncated toward zero. Exact for perfect powers of
/// ten-scaled inputs up to truncation; used for the explicitly approximate
/// ratio columns of reports.
pub fn root_decimal_str(num: &BigUint, den: &BigUint, n: u32, sig: usize) -> String {
    assert!(!den.is_zero());
    if num.is_zero() {
        return "0".to_string();
    }
    // Find the decimal exponent e with 10^e <= value < 10^(e+1) by comparing
    // num * 10^(-e*n) against den at integer scale, then emit sig digits.
    let ten = BigUint::from(10u32);
    let mut e: i64 = 0;
    // value >= 10^e  <=>  num >= den * 10^(e*n)   (for e >= 0)
    // value >= 10^-e <=>  num * 10^(e*n) >= den   (for e > 0)
    if num >= den {
        // value >= 1: grow e while value >= 10^(e+1)
        while *num >= den * ten.pow(((e + 1) * i64::from(n)) as u32) {
            e += 1;
        }
    } else {
        // value < 1: shrink e while value < 10^e
        while num * ten.pow(((-e) * i64::from(n)) as u32) < *den {
            e -= 1;
        }
    }
    // digits = floor(value * 10^(sig-1-e)), a sig-digit integer.
    let shift = sig as i64 - 1 - e;
    let (sn, sd) = if shift >= 0 {
        (num * ten.pow((shift * i64::from(n)) as u32), den.clone())
    } else {
        (num.clone(), den * ten.pow(((-shift) * i64::from(n)) as u32))
    };
    let digits = nth_root_floor(&(sn / sd), n).to_string();
    let digits = if digits.len() < sig {
        // Leading zeros lost to integer division; value had fewer integer digits.
        format!("{}{}", "0".repeat(sig - digits.len()), digits)
    } else {
        digits
    };
    // Place the decimal point after position e+1 relative to digits start.
    let point = e + 1;
    if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if (point as usize) >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        format!("{}.{}", &digits[..point as usize], &digits[point as usize..])
    }
}

/// Decimal string of a nonnegative rational with `sig` significant digits.
pub fn decimal_str(r: &BigRational, sig: usize) -> String {
    assert!(!r.is_negative());
    root_decimal_str(r.numer().magnitude(), r.denom().magnitude(), 1, sig)
}

/// `f64` value of a rational, for explicitly approximate diagnostics only.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_and_parses() {
        assert_eq!(render(&rat(3, 4)), "3/4");
        assert_eq!(render(&rat_i(-7)), "-7");
        assert_eq!(parse("3/4"), Some(rat(3, 4)));
        assert_eq!(parse("-6/8"), Some(rat(-3, 4)));
        assert_eq!(parse("5"), Some(rat_i(5)));
        assert_eq!(parse("1/0"), None);
    }

    #[test]
    fn nth_root_brackets() {
        let (lo, hi) = nth_root_bracket(&BigUint::from(34560u32), 3);
        assert_eq!(lo, BigUint::from(32u32));
        assert_eq!(hi, BigUint::from(33u32));
        let (lo, hi) = nth_root_bracket(&BigUint::from(27u32), 3);
        assert_eq!(lo, hi);
        assert_eq!(lo, BigUint::from(3u32));
        // 174960 = 2160 * 81; cube root sits between 55 and 56.
        let (lo, hi) = nth_root_bracket(&BigUint::from(174960u32), 3);
        assert_eq!((lo.to_string().as_str(), hi.to_string().as_str()), ("55", "56"));
    }

    #[test]
    fn sqrt_exact_and_enclosure() {
        assert_eq!(sqrt_exact(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        let (lo, hi) = sqrt_enclosure(&rat_i(2), 30);
        assert!(lo.clone() * lo.clone() < rat_i(2));
        assert!(hi.clone() * hi.clone() > rat_i(2));
        assert!(&hi - &lo <= rat(1, 1 << 30));
    }

    #[test]
    fn interval_arithmetic_bounds_products() {
        let a = Interval::new(rat_i(-2), rat_i(3));
        let b = Interval::new(rat_i(-1), rat_i(4));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat_i(-8));
        assert_eq!(p.hi, rat_i(12));
        assert!(p.contains_zero());
    }

    #[test]
    fn decimal_strings_truncate() {
        // cbrt(2) = 1.25992104989...
        assert_eq!(
            root_decimal_str(&BigUint::from(2u32), &BigUint::from(1u32), 3, 12),
            "1.25992104989"
        );
        assert_eq!(decimal_str(&rat(1, 8), 3), "0.125");
        assert_eq!(decimal_str(&rat_i(34500), 3), "34500");
        // 2^(2/3) via num=4 n=3.
        assert_eq!(
            root_decimal_str(&BigUint::from(4u32), &BigUint::from(1u32), 3, 6),
            "1.58740"
        );
    }
}
