//! Isolation of the common real solutions of two coprime curves.
//!
//! Strategy: shear x -> x + s*y until both curves have constant leading
//! y-coefficient and every real x-fiber carries at most one common point
//! (detected through principal subresultant coefficients). In that
//! position each real root xi of the resultant determines a unique common
//! y = -c0(xi)/s1(xi) from the degree-one subresultant, so every solution
//! gets a rational bounding box. The candidate shear list is larger than
//! the number of bad shears, so exhaustion certifies a genuinely singular
//! configuration rather than bad luck.

use crate::bipoly::BiPoly;
use crate::gcd::gcd_bipoly;
use crate::rat::Interval;
use crate::resultant::{coeff_of_y, resultant_y, subresultants_y};
use crate::roots::{count_real_roots, isolate_real_roots};
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Closed rational box around one isolated common real solution.
#[derive(Debug, Clone)]
pub struct SolutionBox {
    pub x_lo: BigRational,
    pub x_hi: BigRational,
    pub y_lo: BigRational,
    pub y_hi: BigRational,
}

impl SolutionBox {
    pub fn x_interval(&self) -> Interval {
        Interval::new(self.x_lo.clone(), self.x_hi.clone())
    }

    pub fn y_interval(&self) -> Interval {
        Interval::new(self.y_lo.clone(), self.y_hi.clone())
    }

    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        self.x_lo <= *x && *x <= self.x_hi && self.y_lo <= *y && *y <= self.y_hi
    }

    pub fn disjoint(&self, other: &SolutionBox) -> bool {
        self.x_hi < other.x_lo
            || other.x_hi < self.x_lo
            || self.y_hi < other.y_lo
            || other.y_hi < self.y_lo
    }
}

fn pairwise_disjoint(boxes: &[SolutionBox]) -> bool {
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if !boxes[i].disjoint(&boxes[j]) {
                return false;
            }
        }
    }
    true
}

/// All isolated common real solutions of f = g = 0, as pairwise disjoint
/// boxes ordered by the sheared x-coordinate. Errors with
/// `SharedComponent` when the curves share a factor, and with
/// `UnresolvedSingularConfiguration` when some common point is singular
/// on both curves (no shear can split its fiber).
pub fn common_real_solutions(f: &BiPoly, g: &BiPoly) -> Result<Vec<SolutionBox>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::DegenerateInput(
            "cannot intersect with the zero polynomial".into(),
        ));
    }
    if f.is_constant() || g.is_constant() {
        return Ok(vec![]);
    }
    if !gcd_bipoly(f, g).is_constant() {
        return Err(Error::SharedComponent);
    }
    let m = f.total_degree().unwrap();
    let n = g.total_degree().unwrap();
    // More candidates than bad shears can exist: collisions of distinct
    // solution x-coordinates (< (mn)^2 / 2), vanishing top forms
    // (<= m + n), and per-point tangent directions (<= 2mn).
    let budget = 2 * (m as i64 * n as i64).pow(2) + 60;
    for k in 0..budget {
        let s = if k % 2 == 0 { k / 2 } else { -(k / 2) - 1 };
        let s = BigRational::from_integer(BigInt::from(s));
        let fs = f.shear_x(&s);
        let gs = g.shear_x(&s);
        // Good shear: y-degree equals total degree, which forces the
        // leading y-coefficient to be a nonzero constant.
        if fs.deg_y() != Some(m) || gs.deg_y() != Some(n) {
            continue;
        }
        if let Some(boxes) = solve_sheared(&fs, &gs, &s)? {
            return Ok(boxes);
        }
    }
    Err(Error::UnresolvedSingularConfiguration)
}

/// Solves a sheared system with constant leading y-coefficients. Returns
/// None when some real fiber still carries two or more common roots and a
/// fresh shear is needed.
fn solve_sheared(
    fs: &BiPoly,
    gs: &BiPoly,
    s: &BigRational,
) -> Result<Option<Vec<SolutionBox>>> {
    let r = resultant_y(fs, gs)?;
    assert!(!r.is_zero(), "coprime inputs must have nonzero resultant");
    let rstar = r.square_free();
    let my = fs.deg_y().unwrap();
    let ny = gs.deg_y().unwrap();
    let (u, c0, s1) = if my.min(ny) == 1 {
        // One input is linear in y: every fiber gcd has degree exactly
        // one, and the linear input itself provides the recovery pair.
        let lin = if my == 1 { fs } else { gs };
        let cs = lin.coeffs_y();
        (rstar, cs[0].clone(), cs[1].clone())
    } else {
        let subs = subresultants_y(fs, gs)?;
        let s1 = coeff_of_y(&subs[1], 1);
        let c0 = coeff_of_y(&subs[1], 0);
        // Fibers where s_1 also vanishes hold >= 2 common roots. A real
        // such fiber may hide a real solution, so it forces a retry;
        // complex ones cannot and are dropped.
        let t2 = rstar.gcd(&s1);
        let u = if t2.is_constant() {
            rstar
        } else {
            if count_real_roots(&t2)? > 0 {
                return Ok(None);
            }
            rstar.div_exact(&t2)
        };
        (u, c0, s1)
    };
    if u.is_constant() {
        return Ok(Some(vec![]));
    }
    let mut roots = isolate_real_roots(&u)?;
    let count = roots.count();
    if count == 0 {
        return Ok(Some(vec![]));
    }
    let num = c0.neg();
    let mut target = crate::rat::rat(1, 4);
    loop {
        roots.refine_all(&target);
        // Each surviving root has s1(xi) != 0, so the denominator
        // enclosure eventually excludes zero.
        for i in 0..count {
            let mut w = roots.intervals[i].width();
            while s1
                .eval_interval(&roots.intervals[i].as_interval())
                .contains_zero()
            {
                w /= BigRational::from_integer(BigInt::from(8));
                roots.refine(i, &w);
            }
        }
        let mut boxes = Vec::with_capacity(count);
        for i in 0..count {
            let xi = roots.intervals[i].as_interval();
            let den = s1.eval_interval(&xi);
            let y_enc = num.eval_interval(&xi).mul(&den.recip());
            // Undo the shear: original x = x' + s*y.
            let x_enc = xi.add(&y_enc.scale(s));
            boxes.push(SolutionBox {
                x_lo: x_enc.lo,
                x_hi: x_enc.hi,
                y_lo: y_enc.lo,
                y_hi: y_enc.hi,
            });
        }
        if pairwise_disjoint(&boxes) {
            return Ok(Some(boxes));
        }
        target /= BigRational::from_integer(BigInt::from(16));
    }
}

/// Convenience wrapper for systems where one side is univariate.
pub fn common_real_solutions_with_unipoly_x(
    f: &BiPoly,
    v: &UniPoly,
) -> Result<Vec<SolutionBox>> {
    common_real_solutions(f, &BiPoly::from_unipoly_x(v))
}
