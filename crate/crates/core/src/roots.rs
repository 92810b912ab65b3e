//! Real-root isolation and exact sign computation for univariate
//! polynomials, via Sturm sequences.
//!
//! Intervals follow the half-open Sturm convention: an [`IsolatingInterval`]
//! `(lo, hi]` contains exactly one real root of its (square-free) defining
//! polynomial. Sign-variation counts skip zeros, which keeps the count
//! correct even when a query point is itself a root of a chain element.

use crate::rat::{rat, Interval};
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Half-open interval `(lo, hi]` certified to contain exactly one real root
/// of the polynomial it was produced for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl IsolatingInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Closed-interval view for outward-rounded arithmetic.
    pub fn as_interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        self.lo < *v && *v <= self.hi
    }
}

/// Sturm chain of a square-free polynomial. Every element is scaled by a
/// positive rational only, which preserves all signs.
#[derive(Debug, Clone)]
struct SturmChain {
    chain: Vec<UniPoly>,
}

/// Positive-scalar primitive normalization: integer coefficients, original
/// sign kept. (UniPoly::primitive flips signs to make the lead positive,
/// which would corrupt a Sturm chain.)
fn reduce_positive(p: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let prim = p.primitive();
    if prim.leading().is_negative() == p.leading().is_negative() {
        prim
    } else {
        prim.neg()
    }
}

impl SturmChain {
    fn new(square_free: &UniPoly) -> Self {
        let mut chain = vec![reduce_positive(square_free)];
        let d = square_free.derivative();
        if !d.is_zero() {
            chain.push(reduce_positive(&d));
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].divmod(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(reduce_positive(&r.neg()));
            }
        }
        SturmChain { chain }
    }

    /// Sign variations at a point, zeros skipped.
    fn variations_at(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in `(a, b]`, `a < b`.
    fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Square-free defining polynomial plus the sorted isolating intervals of
/// all its real roots.
#[derive(Debug, Clone)]
pub struct RealRoots {
    pub poly: UniPoly,
    pub intervals: Vec<IsolatingInterval>,
}

/// Isolates every real root of `p` (errors on the zero polynomial). The
/// returned defining polynomial is the primitive square-free part of `p`,
/// which has the same real roots.
pub fn isolate_real_roots(p: &UniPoly) -> Result<RealRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free();
    if sf.is_constant() {
        return Ok(RealRoots {
            poly: sf,
            intervals: vec![],
        });
    }
    let chain = SturmChain::new(&sf);
    let m = sf.cauchy_bound();
    let lo = -m.clone();
    let mut intervals = Vec::new();
    let mut work = vec![(lo.clone(), m.clone())];
    while let Some((a, b)) = work.pop() {
        let n = chain.count_in(&a, &b);
        match n {
            0 => {}
            1 => intervals.push(IsolatingInterval { lo: a, hi: b }),
            _ => {
                let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
                work.push((a, mid.clone()));
                work.push((mid, b));
            }
        }
    }
    intervals.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(RealRoots {
        poly: sf,
        intervals,
    })
}

impl RealRoots {
    pub fn count(&self) -> usize {
        self.intervals.len()
    }

    /// Shrinks interval `idx` below `width` while keeping its single root.
    /// Uses sign bisection, valid because the defining polynomial is
    /// square-free (all roots simple).
    pub fn refine(&mut self, idx: usize, width: &BigRational) {
        let two = BigRational::from_integer(BigInt::from(2));
        loop {
            let iv = &self.intervals[idx];
            if iv.width() <= *width {
                return;
            }
            let (lo, hi) = (iv.lo.clone(), iv.hi.clone());
            let vh = self.poly.eval(&hi);
            if vh.is_zero() {
                // Root exactly at hi; slide lo up to it.
                let new_lo = (&hi - width / &two).max(lo);
                self.intervals[idx] = IsolatingInterval { lo: new_lo, hi };
                return;
            }
            let mid = (&lo + &hi) / &two;
            let vm = self.poly.eval(&mid);
            if vm.is_zero() {
                let new_lo = (&mid - width / &two).max(lo);
                self.intervals[idx] = IsolatingInterval { lo: new_lo, hi: mid };
                return;
            }
            if vm.is_positive() != vh.is_positive() {
                self.intervals[idx] = IsolatingInterval { lo: mid, hi };
            } else {
                self.intervals[idx] = IsolatingInterval { lo, hi: mid };
            }
        }
    }

    pub fn refine_all(&mut self, width: &BigRational) {
        for i in 0..self.intervals.len() {
            self.refine(i, width);
        }
    }

    /// Exact sign of `q` at root `idx`: zero iff the root is shared with
    /// `q`, otherwise decided by interval refinement.
    pub fn sign_at(&mut self, idx: usize, q: &UniPoly) -> i8 {
        if q.is_zero() {
            return 0;
        }
        let g = self.poly.gcd(q);
        if !g.is_constant() {
            let chain = SturmChain::new(&g);
            let iv = &self.intervals[idx];
            if chain.count_in(&iv.lo, &iv.hi) == 1 {
                return 0;
            }
        }
        let mut width = self.intervals[idx].width();
        loop {
            let range = q.eval_interval(&self.intervals[idx].as_interval());
            if !range.contains_zero() {
                return if range.lo.is_positive() { 1 } else { -1 };
            }
            width /= BigRational::from_integer(BigInt::from(4));
            self.refine(idx, &width);
        }
    }

    /// Exact order of root `idx` against a rational point.
    pub fn cmp_with_rational(&mut self, idx: usize, c: &BigRational) -> Ordering {
        if self.poly.eval(c).is_zero() && self.intervals[idx].contains(c) {
            return Ordering::Equal;
        }
        let mut width = self.intervals[idx].width();
        loop {
            let iv = &self.intervals[idx];
            if *c <= iv.lo {
                return Ordering::Greater;
            }
            if *c > iv.hi {
                return Ordering::Less;
            }
            width /= BigRational::from_integer(BigInt::from(4));
            self.refine(idx, &width);
        }
    }
}

/// Total number of distinct real roots of `p`.
pub fn count_real_roots(p: &UniPoly) -> Result<usize> {
    Ok(isolate_real_roots(p)?.count())
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn count_roots_open(p: &UniPoly, a: &BigRational, b: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Ok(0);
    }
    let sf = p.square_free();
    if sf.is_constant() {
        return Ok(0);
    }
    let chain = SturmChain::new(&sf);
    let mut n = chain.count_in(a, b);
    if sf.eval(b).is_zero() {
        n -= 1;
    }
    Ok(n)
}

/// Positive divisors of a nonzero integer, by trial division. Intended for
/// the small leading coefficients that arise after clearing denominators.
fn positive_divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero());
    let mut divs = Vec::new();
    let mut d = BigUint::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            divs.push(d.clone());
            let q = n / &d;
            if q != d {
                divs.push(q);
            }
        }
        d += 1u32;
    }
    divs.sort();
    divs
}

/// Integer roots of `p` lying in `[lo, hi]`, found by isolation plus
/// rounding: no factorization of any coefficient is needed.
pub fn integer_roots_in_range(p: &UniPoly, lo: &BigInt, hi: &BigInt) -> Result<Vec<BigInt>> {
    let mut roots = isolate_real_roots(p)?;
    let mut out = Vec::new();
    let half = rat(1, 2);
    for i in 0..roots.intervals.len() {
        roots.refine(i, &half);
        let iv = &roots.intervals[i];
        // The unique integer candidate in (lo, hi] after width <= 1/2.
        let cand = iv.hi.floor().to_integer();
        let cr = BigRational::from_integer(cand.clone());
        if iv.contains(&cr) && &cand >= lo && &cand <= hi && p.eval(&cr).is_zero() {
            out.push(cand);
        }
    }
    Ok(out)
}

/// All rational roots of `p` (distinct values), via the rational-root
/// theorem after clearing denominators: denominators divide the leading
/// coefficient; numerator candidates come from isolation-plus-rounding of
/// the denominator-rescaled polynomial rather than from factoring the
/// constant term.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<BigRational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(vec![]);
    }
    let mut sf = p.square_free();
    let mut found = BTreeSet::new();
    // Factor out t^v first: zero is a root iff the constant term vanishes.
    if sf.coeff(0).is_zero() {
        found.insert(BigRational::zero());
        let coeffs = sf.coeffs().to_vec();
        let v = coeffs.iter().position(|c| !c.is_zero()).unwrap();
        sf = UniPoly::new(coeffs[v..].to_vec());
    }
    if !sf.is_constant() {
        let deg = sf.degree().unwrap();
        let lead = sf.leading();
        let lead_int = lead.numer().magnitude().clone();
        let bound = sf.cauchy_bound();
        for q in positive_divisors(&lead_int) {
            // x = z/q is a root of sf iff z is an integer root of
            // r(z) = q^deg * sf(z/q), whose coefficients are a_i * q^(deg-i).
            let qb = BigInt::from(q.clone());
            let mut coeffs = Vec::with_capacity(deg + 1);
            let mut pow = BigRational::one();
            for i in (0..=deg).rev() {
                coeffs.resize(deg + 1, BigRational::zero());
                coeffs[i] = sf.coeff(i) * &pow;
                pow *= BigRational::from_integer(qb.clone());
            }
            let r = UniPoly::new(coeffs);
            let zbound = (bound.clone() * BigRational::from_integer(qb.clone()))
                .ceil()
                .to_integer();
            for z in integer_roots_in_range(&r, &(-zbound.clone()), &zbound)? {
                let cand = BigRational::new(z, qb.clone());
                if p.eval(&cand).is_zero() {
                    found.insert(cand);
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    /// Oracle: counts sign changes of `p` over a fine grid; a lower bound
    /// for the root count that is exact when the grid separates all roots.
    fn sign_change_oracle(p: &UniPoly, lo: i64, hi: i64, steps: i64) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for i in 0..=steps {
            let x = rat(lo * steps + i * (hi - lo), steps);
            let v = p.eval(&x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    #[test]
    fn no_real_roots_for_positive_quadratic() {
        let p = UniPoly::from_i64(&[1, 0, 1]);
        assert_eq!(count_real_roots(&p).unwrap(), 0);
    }

    #[test]
    fn isolates_sqrt2_to_width() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let mut rr = isolate_real_roots(&p).unwrap();
        assert_eq!(rr.count(), 2);
        let eps = rat(1, 1_000_000);
        rr.refine_all(&eps);
        // Positive root brackets sqrt(2): lo^2 < 2 < hi^2 with lo, hi > 0.
        let iv = &rr.intervals[1];
        assert!(iv.hi > rat_i(0));
        assert!(&iv.lo * &iv.lo < rat_i(2) || iv.lo <= rat_i(0));
        assert!(&iv.hi * &iv.hi > rat_i(2));
        assert!(iv.width() <= eps);
        // Negative root mirrors it.
        let neg = &rr.intervals[0];
        assert!(neg.hi < rat_i(0));
    }

    #[test]
    fn multiplicity_collapses() {
        // (t-1)^2 (t+3): two distinct real roots.
        let p = UniPoly::from_i64(&[-1, 1])
            .mul(&UniPoly::from_i64(&[-1, 1]))
            .mul(&UniPoly::from_i64(&[3, 1]));
        let rr = isolate_real_roots(&p).unwrap();
        assert_eq!(rr.count(), 2);
        assert!(rr.intervals[0].contains(&rat_i(-3)) || rr.intervals[0].hi >= rat_i(-3));
        assert_eq!(count_roots_open(&p, &rat_i(0), &rat_i(2)).unwrap(), 1);
        // Endpoint root is excluded from the open count.
        assert_eq!(count_roots_open(&p, &rat_i(-3), &rat_i(0)).unwrap(), 0);
    }

    #[test]
    fn counts_match_sign_change_oracle() {
        // Degree-5 with roots near -2, 1/3, 3: p = (t+2)(3t-1)(t-3)(t^2+1)
        let p = UniPoly::from_i64(&[2, 1])
            .mul(&UniPoly::from_i64(&[-1, 3]))
            .mul(&UniPoly::from_i64(&[-3, 1]))
            .mul(&UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(count_real_roots(&p).unwrap(), 3);
        assert_eq!(sign_change_oracle(&p, -5, 5, 1000), 3);
    }

    #[test]
    fn sign_at_root_exact_and_shared() {
        let p = UniPoly::from_i64(&[-2, 0, 1]); // roots +-sqrt(2)
        let mut rr = isolate_real_roots(&p).unwrap();
        // q = t^3: negative at -sqrt2, positive at +sqrt2.
        let q = UniPoly::from_i64(&[0, 0, 0, 1]);
        assert_eq!(rr.sign_at(0, &q), -1);
        assert_eq!(rr.sign_at(1, &q), 1);
        // Shared root: q = (t^2 - 2) * (t + 7) gives sign 0 at both.
        let shared = p.mul(&UniPoly::from_i64(&[7, 1]));
        assert_eq!(rr.sign_at(0, &shared), 0);
        assert_eq!(rr.sign_at(1, &shared), 0);
    }

    #[test]
    fn cmp_with_rational_orders_roots() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let mut rr = isolate_real_roots(&p).unwrap();
        assert_eq!(rr.cmp_with_rational(1, &rat_i(1)), Ordering::Greater);
        assert_eq!(rr.cmp_with_rational(1, &rat_i(2)), Ordering::Less);
        let q = UniPoly::from_i64(&[-1, 0, 1]);
        let mut qq = isolate_real_roots(&q).unwrap();
        assert_eq!(qq.cmp_with_rational(1, &rat_i(1)), Ordering::Equal);
    }

    #[test]
    fn rational_roots_planted() {
        // (2t - 1)(t + 3) = 2t^2 + 5t - 3
        let p = UniPoly::from_i64(&[-3, 5, 2]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat_i(-3), rat(1, 2)]);
        // Irrational roots are rejected.
        assert!(rational_roots(&UniPoly::from_i64(&[-2, 0, 1]))
            .unwrap()
            .is_empty());
        // Zero root plus a fractional one: t(3t - 2).
        let p = UniPoly::from_i64(&[0, -2, 3]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat_i(0), rat(2, 3)]);
    }

    #[test]
    fn integer_roots_without_factoring() {
        // (t - 1024)(t + 37)(t^2 + 1): constant term is large but never factored.
        let p = UniPoly::from_i64(&[-1024, 1])
            .mul(&UniPoly::from_i64(&[37, 1]))
            .mul(&UniPoly::from_i64(&[1, 0, 1]));
        let roots =
            integer_roots_in_range(&p, &BigInt::from(-100), &BigInt::from(2000)).unwrap();
        assert_eq!(roots, vec![BigInt::from(-37), BigInt::from(1024)]);
    }
}
