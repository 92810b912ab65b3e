//! Resultants and subresultants of bivariate polynomials, computed exactly
//! from Sylvester-type matrices with polynomial entries.
//!
//! Elimination uses the Bareiss fraction-free scheme: every division is
//! exact in Q[x], which keeps intermediate entries polynomial instead of
//! rational-function sized.

use crate::bipoly::BiPoly;
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num_traits::One;

/// Exact determinant of a square matrix over Q[x] by fraction-free
/// Gaussian elimination with row pivoting.
pub fn det_bareiss(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    for row in &m {
        assert_eq!(row.len(), n);
    }
    let mut sign = 1i32;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let r = match pivot {
            None => return UniPoly::zero(),
            Some(r) => r,
        };
        if r != k {
            m.swap(r, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Sylvester matrix of f and g with respect to y; entries are polynomials
/// in x. Requires both y-degrees positive.
fn sylvester_y(f: &BiPoly, g: &BiPoly) -> Result<Vec<Vec<UniPoly>>> {
    let fm = f.deg_y().unwrap_or(0) as usize;
    let gn = g.deg_y().unwrap_or(0) as usize;
    if f.is_zero() || g.is_zero() || fm == 0 || gn == 0 {
        return Err(Error::DegenerateInput(
            "resultant requires both inputs nonconstant in the eliminated variable".into(),
        ));
    }
    let fc = f.coeffs_y();
    let gc = g.coeffs_y();
    let n = fm + gn;
    let mut m = vec![vec![UniPoly::zero(); n]; n];
    for i in 0..gn {
        for (k, c) in fc.iter().rev().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for i in 0..fm {
        for (k, c) in gc.iter().rev().enumerate() {
            m[gn + i][i + k] = c.clone();
        }
    }
    Ok(m)
}

/// Res_y(f, g) as a polynomial in x. Vanishes exactly at the x-coordinates
/// of common (complex) solutions, plus where both leading y-coefficients
/// do.
pub fn resultant_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly> {
    Ok(det_bareiss(sylvester_y(f, g)?))
}

/// Res_x(f, g) as a polynomial in y.
pub fn resultant_x(f: &BiPoly, g: &BiPoly) -> Result<UniPoly> {
    resultant_y(&f.swap_xy(), &g.swap_xy())
}

/// The determinantal subresultants S_0 .. S_{min(m,n)-1} of f and g with
/// respect to y. Each S_j has y-degree at most j; S_0 equals Res_y(f, g).
/// The coefficient of y^j in S_j is the principal subresultant
/// coefficient s_j.
///
/// Construction: the matrix for S_j has rows y^(n-j-1)f .. f and
/// y^(m-j-1)g .. g. Its first m+n-2j-1 columns hold the coefficients of
/// y^(m+n-j-1) down to y^(j+1); the final column holds the remaining tail
/// (degree <= j in y), and the determinant is expanded along it.
pub fn subresultants_y(f: &BiPoly, g: &BiPoly) -> Result<Vec<BiPoly>> {
    let m = f.deg_y().unwrap_or(0) as usize;
    let n = g.deg_y().unwrap_or(0) as usize;
    if f.is_zero() || g.is_zero() || m == 0 || n == 0 {
        return Err(Error::DegenerateInput(
            "subresultants require both inputs nonconstant in y".into(),
        ));
    }
    let fc = f.coeffs_y();
    let gc = g.coeffs_y();
    let mut out = Vec::new();
    for j in 0..m.min(n) {
        let size = m + n - 2 * j;
        // Row r of the table is y^shift * p written on basis
        // y^(m+n-j-1) .. y^(j+1) | tail. Coefficient of y^e in y^shift * p
        // is p_(e-shift).
        let row_of = |p: &[UniPoly], shift: usize| -> (Vec<UniPoly>, Vec<UniPoly>) {
            let top = m + n - j - 1;
            let mut head = Vec::with_capacity(size - 1);
            for col in 0..size - 1 {
                let e = top - col;
                head.push(coeff_at(p, e, shift));
            }
            let mut tail = Vec::with_capacity(j + 1);
            for e in (0..=j).rev() {
                tail.push(coeff_at(p, e, shift));
            }
            (head, tail)
        };
        let mut heads = Vec::with_capacity(size);
        let mut tails = Vec::with_capacity(size);
        for shift in (0..n - j).rev() {
            let (h, t) = row_of(&fc, shift);
            heads.push(h);
            tails.push(t);
        }
        for shift in (0..m - j).rev() {
            let (h, t) = row_of(&gc, shift);
            heads.push(h);
            tails.push(t);
        }
        // Laplace expansion along the final (tail) column.
        let mut s = BiPoly::zero();
        for r in 0..size {
            let tail_poly = {
                let mut t = BiPoly::zero();
                for (idx, c) in tails[r].iter().enumerate() {
                    let e = (j - idx) as u32;
                    t = t.add(&BiPoly::from_unipoly_x(c).mul(&BiPoly::monomial(0, e, num_rational::BigRational::one())));
                }
                t
            };
            if tail_poly.is_zero() {
                continue;
            }
            let minor: Vec<Vec<UniPoly>> = heads
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != r)
                .map(|(_, h)| h.clone())
                .collect();
            let cof = det_bareiss(minor);
            if cof.is_zero() {
                continue;
            }
            // Cofactor sign along the last column: (-1)^(r + size - 1).
            let signed = if (r + size - 1) % 2 == 0 {
                cof
            } else {
                cof.neg()
            };
            s = s.add(&tail_poly.mul(&BiPoly::from_unipoly_x(&signed)));
        }
        out.push(s);
    }
    Ok(out)
}

fn coeff_at(p: &[UniPoly], e: usize, shift: usize) -> UniPoly {
    if e >= shift && e - shift < p.len() {
        p[e - shift].clone()
    } else {
        UniPoly::zero()
    }
}

/// Coefficient of y^j in a subresultant, as a polynomial in x.
pub fn coeff_of_y(s: &BiPoly, j: u32) -> UniPoly {
    let cs = s.coeffs_y();
    cs.get(j as usize).cloned().unwrap_or_else(UniPoly::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse_bipoly;
    use crate::rat::rat_i;
    use num_traits::Zero;

    /// Oracle: Laplace expansion along the first row. Exponential, for
    /// small matrices only.
    fn det_naive(m: &[Vec<UniPoly>]) -> UniPoly {
        let n = m.len();
        if n == 0 {
            return UniPoly::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = UniPoly::zero();
        for (c, entry) in m[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<UniPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let cof = entry.mul(&det_naive(&minor));
            acc = if c % 2 == 0 {
                acc.add(&cof)
            } else {
                acc.sub(&cof)
            };
        }
        acc
    }

    #[test]
    fn bareiss_matches_naive_oracle() {
        let entries = |vals: &[&[i64]]| -> Vec<Vec<UniPoly>> {
            vals.iter().map(|r| r.iter().map(|&v| UniPoly::from_i64(&[v])).collect()).collect()
        };
        let m = entries(&[&[2, 3, 1], &[4, 7, 2], &[6, 18, 5]]);
        assert_eq!(det_bareiss(m.clone()), det_naive(&m));
        // Polynomial entries with a needed row swap.
        let t = UniPoly::from_i64(&[0, 1]);
        let m2 = vec![
            vec![UniPoly::zero(), t.clone(), UniPoly::one()],
            vec![t.clone(), UniPoly::from_i64(&[1, 1]), UniPoly::zero()],
            vec![UniPoly::one(), UniPoly::zero(), t.clone()],
        ];
        assert_eq!(det_bareiss(m2.clone()), det_naive(&m2));
        // Singular matrix.
        let m3 = entries(&[&[1, 2], &[2, 4]]);
        assert!(det_bareiss(m3).is_zero());
    }

    #[test]
    fn resultant_of_disjoint_circles() {
        // x^2+y^2-1 and x^2+y^2-4 share no solutions: resultant has no
        // real roots (it is a positive constant times a power).
        let f = parse_bipoly("x^2 + y^2 - 1").unwrap();
        let g = parse_bipoly("x^2 + y^2 - 4").unwrap();
        let r = resultant_y(&f, &g).unwrap();
        assert_eq!(r, UniPoly::from_i64(&[9]));
    }

    #[test]
    fn resultant_vanishes_at_common_x() {
        // Line y = x meets circle x^2+y^2=2 at x = 1 and x = -1.
        let f = parse_bipoly("y - x").unwrap();
        let g = parse_bipoly("x^2 + y^2 - 2").unwrap();
        let r = resultant_y(&f, &g).unwrap();
        assert!(r.eval(&rat_i(1)).is_zero() && r.eval(&rat_i(-1)).is_zero());
        assert_eq!(r, UniPoly::from_i64(&[-2, 0, 2]));
    }

    #[test]
    fn resultant_rejects_constant_inputs() {
        let f = parse_bipoly("x^2 - 1").unwrap(); // constant in y
        let g = parse_bipoly("y").unwrap();
        assert!(matches!(
            resultant_y(&f, &g),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn subresultant_zero_equals_resultant() {
        let f = parse_bipoly("y^3 - x*y + 1").unwrap();
        let g = parse_bipoly("y^2 + x^2 - 3").unwrap();
        let subs = subresultants_y(&f, &g).unwrap();
        let s0 = coeff_of_y(&subs[0], 0);
        assert_eq!(s0, resultant_y(&f, &g).unwrap());
        assert!(subs[0].deg_y().unwrap_or(0) == 0);
        assert!(subs[1].deg_y().unwrap_or(0) <= 1);
    }

    #[test]
    fn subresultant_one_recovers_shared_root() {
        // f and g share the factor (y - x); at any x = a the fiber gcd is
        // y - a, so S_1 must be proportional to (y - x) generically.
        let f = parse_bipoly("(y - x)*(y - 1)").unwrap();
        let g = parse_bipoly("(y - x)*(y + 2)").unwrap();
        let r = resultant_y(&f, &g).unwrap();
        assert!(r.is_zero());
        let subs = subresultants_y(&f, &g).unwrap();
        let s1 = coeff_of_y(&subs[1], 1);
        let c0 = coeff_of_y(&subs[1], 0);
        // Common y at x = a is -c0(a)/s1(a) = a.
        for a in [-3i64, 0, 2, 7] {
            let ar = rat_i(a);
            let denom = s1.eval(&ar);
            assert!(!denom.is_zero(), "s1 vanished at sample {}", a);
            assert_eq!(-c0.eval(&ar) / denom, ar);
        }
    }

    #[test]
    fn principal_coefficients_track_fiber_gcd_degree() {
        // f = (y^2 - x)(y - 1), g = (y^2 - x)(y + 1): fiber gcd has degree
        // 2 for generic x, so s_0 = s_1 = 0 while s_2 is nonzero.
        let f = parse_bipoly("(y^2 - x)*(y - 1)").unwrap();
        let g = parse_bipoly("(y^2 - x)*(y + 1)").unwrap();
        let subs = subresultants_y(&f, &g).unwrap();
        assert!(coeff_of_y(&subs[0], 0).is_zero());
        assert!(coeff_of_y(&subs[1], 1).is_zero());
        assert!(!coeff_of_y(&subs[2], 2).is_zero());
    }
}
