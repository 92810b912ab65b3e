//! Gaussian-rational arithmetic Q(i) and complex-linear substitution.
//!
//! [`complex_reduce`] rewrites a real polynomial evaluated along a complex
//! affine frame, f(alpha + x*beta, gamma + y*delta), as a pair of real
//! polynomials (re, im) in the real parameters x, y. Common real zeros of
//! the pair are exactly the parameter values where the frame point lies
//! on the complex curve f = 0.

use crate::bipoly::BiPoly;
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Element of Q(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn zero() -> Self {
        GaussRat::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_rational(BigRational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn neg(&self) -> Self {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

/// Bivariate polynomial with Gaussian-rational coefficients. Same
/// zero-free `BTreeMap` representation as [`BiPoly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CBiPoly {
    terms: BTreeMap<(u32, u32), GaussRat>,
}

impl CBiPoly {
    pub fn zero() -> Self {
        CBiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut p = CBiPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        CBiPoly::constant(GaussRat::one())
    }

    pub fn var_x() -> Self {
        let mut p = CBiPoly::zero();
        p.add_term(1, 0, GaussRat::one());
        p
    }

    pub fn var_y() -> Self {
        let mut p = CBiPoly::zero();
        p.add_term(0, 1, GaussRat::one());
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((i, j))
            .or_insert_with(GaussRat::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = CBiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = CBiPoly::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v.mul(c));
        }
        out
    }

    pub fn from_bipoly(f: &BiPoly) -> Self {
        let mut out = CBiPoly::zero();
        for (&(i, j), c) in f.terms() {
            out.add_term(i, j, GaussRat::from_rational(c.clone()));
        }
        out
    }

    pub fn re_part(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out = out.add(&BiPoly::monomial(i, j, c.re.clone()));
        }
        out
    }

    pub fn im_part(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out = out.add(&BiPoly::monomial(i, j, c.im.clone()));
        }
        out
    }

    pub fn eval(&self, x: &GaussRat, y: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t = t.mul(x);
            }
            for _ in 0..j {
                t = t.mul(y);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// General substitution with cached powers, mirroring
    /// `BiPoly::substitute`.
    pub fn substitute(&self, xs: &CBiPoly, ys: &CBiPoly) -> Self {
        let mut xpow: Vec<CBiPoly> = vec![CBiPoly::one()];
        let mut ypow: Vec<CBiPoly> = vec![CBiPoly::one()];
        let mut out = CBiPoly::zero();
        for (&(i, j), c) in &self.terms {
            while xpow.len() <= i as usize {
                let next = xpow.last().unwrap().mul(xs);
                xpow.push(next);
            }
            while ypow.len() <= j as usize {
                let next = ypow.last().unwrap().mul(ys);
                ypow.push(next);
            }
            out = out.add(&xpow[i as usize].mul(&ypow[j as usize]).scale(c));
        }
        out
    }
}

/// Splits f(alpha + x*beta, gamma + y*delta) into real and imaginary
/// parts, two real polynomials in (x, y). Errors when beta or delta is
/// zero (the frame would collapse a direction).
pub fn complex_reduce(
    f: &BiPoly,
    alpha: &GaussRat,
    beta: &GaussRat,
    gamma: &GaussRat,
    delta: &GaussRat,
) -> Result<(BiPoly, BiPoly)> {
    if beta.is_zero() || delta.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    let xs = CBiPoly::constant(alpha.clone()).add(&CBiPoly::var_x().scale(beta));
    let ys = CBiPoly::constant(gamma.clone()).add(&CBiPoly::var_y().scale(delta));
    let g = CBiPoly::from_bipoly(f).substitute(&xs, &ys);
    Ok((g.re_part(), g.im_part()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse_bipoly;
    use crate::rat::rat_i;

    #[test]
    fn gauss_mul_follows_i_squared() {
        let a = GaussRat::from_i64(1, 2);
        let b = GaussRat::from_i64(3, -1);
        // (1+2i)(3-i) = 3 - i + 6i - 2i^2 = 5 + 5i
        assert_eq!(a.mul(&b), GaussRat::from_i64(5, 5));
        assert_eq!(GaussRat::i().mul(&GaussRat::i()), GaussRat::from_i64(-1, 0));
        assert_eq!(a.mul(&a.conj()), GaussRat::from_i64(5, 0));
    }

    #[test]
    fn identity_frame_reproduces_f() {
        let f = parse_bipoly("y^2 - x^3 + x - 1").unwrap();
        let (re, im) = complex_reduce(
            &f,
            &GaussRat::zero(),
            &GaussRat::one(),
            &GaussRat::zero(),
            &GaussRat::one(),
        )
        .unwrap();
        assert_eq!(re, f);
        assert!(im.is_zero());
    }

    #[test]
    fn imaginary_x_axis_swaps_parts() {
        // f = x - y along x -> i*x: g = i*x - y, so re = -y, im = x.
        let f = parse_bipoly("x - y").unwrap();
        let (re, im) = complex_reduce(
            &f,
            &GaussRat::zero(),
            &GaussRat::i(),
            &GaussRat::zero(),
            &GaussRat::one(),
        )
        .unwrap();
        assert_eq!(re, parse_bipoly("-y").unwrap());
        assert_eq!(im, parse_bipoly("x").unwrap());
    }

    #[test]
    fn reduction_agrees_with_complex_evaluation() {
        let f = parse_bipoly("x^2*y - y^3 + 2*x - 7").unwrap();
        let alpha = GaussRat::from_i64(1, 1);
        let beta = GaussRat::from_i64(0, 2);
        let gamma = GaussRat::from_i64(-2, 0);
        let delta = GaussRat::from_i64(1, -1);
        let (re, im) = complex_reduce(&f, &alpha, &beta, &gamma, &delta).unwrap();
        let cf = CBiPoly::from_bipoly(&f);
        for (x, y) in [(0i64, 0i64), (1, 2), (-3, 5), (7, -4)] {
            let xr = GaussRat::from_i64(x, 0);
            let yr = GaussRat::from_i64(y, 0);
            let arg_x = alpha.add(&beta.mul(&xr));
            let arg_y = gamma.add(&delta.mul(&yr));
            let direct = cf.eval(&arg_x, &arg_y);
            assert_eq!(direct.re, re.eval(&rat_i(x), &rat_i(y)));
            assert_eq!(direct.im, im.eval(&rat_i(x), &rat_i(y)));
        }
    }

    #[test]
    fn degenerate_basis_rejected() {
        let f = parse_bipoly("x + y").unwrap();
        assert!(matches!(
            complex_reduce(
                &f,
                &GaussRat::zero(),
                &GaussRat::zero(),
                &GaussRat::zero(),
                &GaussRat::one()
            ),
            Err(Error::DegenerateBasis)
        ));
    }
}
