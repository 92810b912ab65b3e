//! Degree-driven budgets for special points of plane curves, the
//! projective Hessian, and exact location of real inflection and critical
//! points.
//!
//! The budgets are Bezout-style upper bounds, never exact counts: the
//! located real points must respect them, not meet them.

use crate::bipoly::BiPoly;
use crate::bisolve::{common_real_solutions, SolutionBox};
use crate::gcd::gcd_bipoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Upper bounds on special-point counts for a square-free curve of
/// degree d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub degree: u32,
    /// 3d(d-2): flexes, via the degree of the Hessian intersection.
    pub inflection_max: u64,
    /// 2d(d-1): both first-derivative systems together.
    pub critical_max: u64,
    /// d(5d-8) = 3d(d-2) + 2d(d-1): cut points for the convex
    /// decomposition.
    pub cuts_max: u64,
    /// (d-1)(d-2)/2: singular points of an irreducible curve.
    pub singular_max: u64,
    /// (d-1)(d-2)/2 + 1: Harnack's bound on real components.
    pub components_max: u64,
}

pub fn special_point_budgets(d: u32) -> Result<Budgets> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d, 2));
    }
    let dd = d as u64;
    Ok(Budgets {
        degree: d,
        inflection_max: 3 * dd * (dd - 2),
        critical_max: 2 * dd * (dd - 1),
        cuts_max: dd * (5 * dd - 8),
        singular_max: (dd - 1) * (dd - 2) / 2,
        components_max: (dd - 1) * (dd - 2) / 2 + 1,
    })
}

/// Dehomogenized Hessian determinant of the degree-d homogenization of f.
///
/// The z-derivatives are eliminated through Euler's identity
/// x F_x + y F_y + z F_z = d F, so no trivariate arithmetic is needed:
///   F_z  = d f - x f_x - y f_y              (at z = 1)
///   F_xz = (d-1) f_x - x f_xx - y f_xy
///   F_yz = (d-1) f_y - x f_xy - y f_yy
///   F_zz = (d-1) F_z - x F_xz - y F_yz
pub fn hessian(f: &BiPoly) -> BiPoly {
    let d = f.total_degree().unwrap_or(0);
    let x = BiPoly::var_x();
    let y = BiPoly::var_y();
    let scale = |p: &BiPoly, k: u32| p.scale(&BigRational::from_integer(BigInt::from(k)));
    let fx = f.derivative_x();
    let fy = f.derivative_y();
    let fxx = fx.derivative_x();
    let fxy = fx.derivative_y();
    let fyy = fy.derivative_y();
    let fz = scale(f, d).sub(&x.mul(&fx)).sub(&y.mul(&fy));
    let fxz = scale(&fx, d.saturating_sub(1))
        .sub(&x.mul(&fxx))
        .sub(&y.mul(&fxy));
    let fyz = scale(&fy, d.saturating_sub(1))
        .sub(&x.mul(&fxy))
        .sub(&y.mul(&fyy));
    let fzz = scale(&fz, d.saturating_sub(1))
        .sub(&x.mul(&fxz))
        .sub(&y.mul(&fyz));
    // det of [[fxx, fxy, fxz], [fxy, fyy, fyz], [fxz, fyz, fzz]].
    let m1 = fyy.mul(&fzz).sub(&fyz.mul(&fyz));
    let m2 = fxy.mul(&fzz).sub(&fyz.mul(&fxz));
    let m3 = fxy.mul(&fyz).sub(&fyy.mul(&fxz));
    fxx.mul(&m1).sub(&fxy.mul(&m2)).add(&fxz.mul(&m3))
}

/// Sign numerator of y'' along a branch of f = 0:
/// y'' = -D / f_y^3 with D = f_xx f_y^2 - 2 f_xy f_x f_y + f_yy f_x^2.
pub fn convexity_numerator(f: &BiPoly) -> BiPoly {
    let fx = f.derivative_x();
    let fy = f.derivative_y();
    let fxx = fx.derivative_x();
    let fxy = fx.derivative_y();
    let fyy = fy.derivative_y();
    let two = BigRational::from_integer(BigInt::from(2));
    fxx.mul(&fy.mul(&fy))
        .sub(&fxy.mul(&fx).mul(&fy).scale(&two))
        .add(&fyy.mul(&fx.mul(&fx)))
}

/// Isolating boxes for the real special points of a square-free curve.
#[derive(Debug)]
pub struct SpecialPoints {
    pub budgets: Budgets,
    /// The Hessian vanished identically or shared a factor with f (every
    /// component of f is then a line, or the flex locus is not
    /// zero-dimensional); inflection boxes are not reported.
    pub hessian_degenerate: bool,
    /// Real solutions of f = H_f = 0.
    pub inflections: Vec<SolutionBox>,
    /// Real solutions of f = f_x = 0.
    pub critical_x: Vec<SolutionBox>,
    /// Real solutions of f = f_y = 0.
    pub critical_y: Vec<SolutionBox>,
}

pub fn inflection_and_critical_points(f: &BiPoly) -> Result<SpecialPoints> {
    let d = match f.total_degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(d) => d,
    };
    let budgets = special_point_budgets(d)?;
    let fx = f.derivative_x();
    let fy = f.derivative_y();
    if !gcd_bipoly(f, &fx).is_constant() || !gcd_bipoly(f, &fy).is_constant() {
        return Err(Error::NotCoprimeWithDerivative);
    }
    let h = hessian(f);
    let hessian_degenerate = h.is_zero() || !gcd_bipoly(f, &h).is_constant();
    let inflections = if hessian_degenerate {
        vec![]
    } else {
        common_real_solutions(f, &h)?
    };
    let critical_x = common_real_solutions(f, &fx)?;
    let critical_y = common_real_solutions(f, &fy)?;
    Ok(SpecialPoints {
        budgets,
        hessian_degenerate,
        inflections,
        critical_x,
        critical_y,
    })
}
