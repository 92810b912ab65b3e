//! Divisibility, contents, and greatest common divisors in Q[x, y].
//!
//! Bivariate gcds run a primitive polynomial remainder sequence over
//! (Q[x])[y]; contents are UniPoly gcds of the coefficient lists. All
//! results are exact.

use crate::bipoly::BiPoly;
use crate::roots::rational_roots;
use crate::unipoly::UniPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Content of f with respect to y: the (monic) gcd in Q[x] of the
/// y-coefficients. Collects every factor of f that is pure in x.
pub fn content_y(f: &BiPoly) -> UniPoly {
    let mut acc = UniPoly::zero();
    for c in f.coeffs_y() {
        acc = acc.gcd(&c);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

/// Content of f with respect to x, as a polynomial in y.
pub fn content_x(f: &BiPoly) -> UniPoly {
    content_y(&f.swap_xy())
}

/// Exact quotient f / g in Q[x, y], or None when g does not divide f.
/// Long division in (Q[x])[y]; every coefficient division must be exact.
pub fn try_div_exact(f: &BiPoly, g: &BiPoly) -> Option<BiPoly> {
    assert!(!g.is_zero(), "division by zero polynomial");
    if f.is_zero() {
        return Some(BiPoly::zero());
    }
    let dg = g.deg_y().unwrap() as usize;
    if dg == 0 {
        // Pure-x divisor: divide every y-coefficient.
        let gx = g.coeffs_y().pop().unwrap();
        let mut out = Vec::new();
        for c in f.coeffs_y() {
            let (q, r) = c.divmod(&gx);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        return Some(BiPoly::from_coeffs_y(out));
    }
    let lcg = g.lc_y();
    let mut rem = f.clone();
    let mut quot = BiPoly::zero();
    loop {
        let dr = match rem.deg_y() {
            None => return Some(quot),
            Some(d) => d as usize,
        };
        if rem.is_zero() {
            return Some(quot);
        }
        if dr < dg {
            return None;
        }
        let lr = rem.lc_y();
        let (qc, qr) = lr.divmod(&lcg);
        if !qr.is_zero() {
            return None;
        }
        let shift = (dr - dg) as u32;
        let qterm =
            BiPoly::from_unipoly_x(&qc).mul(&BiPoly::monomial(0, shift, BigRational::one()));
        quot = quot.add(&qterm);
        rem = rem.sub(&qterm.mul(g));
        if let Some(d) = rem.deg_y() {
            // Leading term cancelled exactly; degree must drop.
            debug_assert!((d as usize) < dr || rem.is_zero());
        }
    }
}

/// Scales f to integer-primitive coefficients with the lexicographically
/// leading term positive. The canonical representative of f up to nonzero
/// rational scaling.
pub fn normalize_primitive(f: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return BiPoly::zero();
    }
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for (_, c) in f.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
        numer_gcd = numer_gcd.gcd(c.numer());
    }
    let scale = BigRational::new(denom_lcm, numer_gcd);
    let mut out = f.scale(&scale);
    // Sign convention: coefficient of the y-major leading term positive,
    // so a line y - m*x - c keeps its solved-for-y shape.
    let lead_key = *out
        .terms()
        .max_by_key(|(&(i, j), _)| (j, i))
        .unwrap()
        .0;
    if out.coeff(lead_key.0, lead_key.1).is_negative() {
        out = out.neg();
    }
    out
}

/// Primitive part of f with respect to y: f divided by its y-content.
pub fn primitive_part_y(f: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return BiPoly::zero();
    }
    let c = content_y(f);
    try_div_exact(f, &BiPoly::from_unipoly_x(&c)).expect("content divides")
}

/// One sloppy pseudo-remainder step chain: returns r with deg_y r < deg_y b
/// and lc_y(b)^k * a = q*b + r for some k.
fn pseudo_rem_y(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.deg_y().unwrap() as usize;
    let lb = BiPoly::from_unipoly_x(&b.lc_y());
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.deg_y().unwrap() as usize;
        if dr < db {
            break;
        }
        let lr = BiPoly::from_unipoly_x(&r.lc_y());
        let shift = BiPoly::monomial(0, (dr - db) as u32, BigRational::one());
        r = r.mul(&lb).sub(&b.mul(&lr).mul(&shift));
    }
    r
}

/// Greatest common divisor in Q[x, y], canonically normalized via
/// [`normalize_primitive`]. gcd(f, 0) = f up to normalization.
pub fn gcd_bipoly(f: &BiPoly, g: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return normalize_primitive(g);
    }
    if g.is_zero() {
        return normalize_primitive(f);
    }
    let cf = content_y(f);
    let cg = content_y(g);
    let content = cf.gcd(&cg);
    let mut a = primitive_part_y(f);
    let mut b = primitive_part_y(g);
    if a.deg_y() < b.deg_y() {
        std::mem::swap(&mut a, &mut b);
    }
    // Primitive PRS: pseudo-remainders with contents stripped each step.
    while !b.is_zero() && b.deg_y().unwrap() > 0 {
        let r = pseudo_rem_y(&a, &b);
        a = b;
        b = if r.is_zero() {
            BiPoly::zero()
        } else {
            primitive_part_y(&r)
        };
    }
    let pp_gcd = if b.is_zero() {
        a
    } else {
        // Nonzero with y-degree 0 and y-primitive: a unit.
        BiPoly::one()
    };
    normalize_primitive(&pp_gcd.mul(&BiPoly::from_unipoly_x(&content)))
}

/// True when f has no repeated factor: gcd(f, f_x, f_y) is constant.
pub fn is_square_free(f: &BiPoly) -> bool {
    if f.is_zero() {
        return false;
    }
    if f.is_constant() {
        return true;
    }
    let g1 = gcd_bipoly(f, &f.derivative_x());
    let g2 = gcd_bipoly(&g1, &f.derivative_y());
    g2.is_constant()
}

/// Finds a linear factor with rational coefficients, if one exists:
/// vertical lines from the y-content, all other slopes from rational
/// roots of the top form. Lines at irrational positions or slopes are
/// outside the rational search space and are not reported.
pub fn rational_linear_factor(f: &BiPoly) -> Option<BiPoly> {
    if f.is_zero() || f.is_constant() {
        return None;
    }
    if f.total_degree() == Some(1) {
        return Some(normalize_primitive(f));
    }
    let cy = content_y(f);
    if !cy.is_constant() {
        if let Ok(roots) = rational_roots(&cy) {
            if let Some(r) = roots.first() {
                let line = BiPoly::var_x().sub(&BiPoly::constant(r.clone()));
                return Some(normalize_primitive(&line));
            }
        }
    }
    // Non-vertical candidates y = m*x + c: slope m must be a root of the
    // top form at x = 1.
    let slope_poly = f.top_form().section_at_x(&BigRational::one());
    let slopes = rational_roots(&slope_poly).ok()?;
    for m in slopes {
        // Substitute y -> m*x + c (c in the y slot); the factor exists at
        // intercept c0 iff every x-coefficient vanishes there.
        let sub = BiPoly::monomial(1, 0, m.clone()).add(&BiPoly::var_y());
        let h = f.substitute(&BiPoly::var_x(), &sub);
        let cx = content_x(&h);
        if cx.is_zero() || cx.is_constant() {
            continue;
        }
        let intercepts = rational_roots(&cx).ok()?;
        for c0 in intercepts {
            let line = BiPoly::var_y()
                .sub(&BiPoly::monomial(1, 0, m.clone()))
                .sub(&BiPoly::constant(c0.clone()));
            if try_div_exact(f, &line).is_some() {
                return Some(normalize_primitive(&line));
            }
        }
    }
    None
}
