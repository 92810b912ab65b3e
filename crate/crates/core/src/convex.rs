//! Decomposition of a square-free curve inside a rational box into
//! maximal arcs of constant monotonicity and convexity.
//!
//! Cut abscissae are generated from exact resultants: vertical tangents
//! and singular points (Res_y(f, f_y)), horizontal-tangent changes
//! (Res_y of the curved part against its x-derivative), flexes (Res_y
//! against the Hessian of the curved part), leading-coefficient roots
//! (branches escaping to infinity), vertical-line components, and box
//! edge crossings. Between consecutive cuts every branch keeps the signs
//! of f_x, f_y and the convexity numerator, so one exact sample per
//! interval classifies each arc; Sturm counts certify that no generator
//! root lies inside any interval.
//!
//! Rational cut abscissae become exact arc endpoints. Irrational cuts are
//! enclosed by tight rational brackets and the bracket gap is excluded
//! from the reported arcs (and counted), since arcs carry rational
//! endpoints.

use crate::bipoly::BiPoly;
use crate::budgets::{convexity_numerator, hessian};
use crate::gcd::{gcd_bipoly, is_square_free, primitive_part_y, try_div_exact};
use crate::rat::Interval;
use crate::resultant::{resultant_x, resultant_y};
use crate::roots::{count_roots_open, isolate_real_roots, rational_roots};
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;

/// Bracket width target for irrational cut abscissae.
fn bracket_width() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1u64 << 16))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatRect {
    pub x_lo: BigRational,
    pub x_hi: BigRational,
    pub y_lo: BigRational,
    pub y_hi: BigRational,
}

impl RatRect {
    pub fn new(
        x_lo: BigRational,
        x_hi: BigRational,
        y_lo: BigRational,
        y_hi: BigRational,
    ) -> Result<Self> {
        if x_lo >= x_hi || y_lo >= y_hi {
            return Err(Error::DegenerateInput("empty box".into()));
        }
        Ok(RatRect { x_lo, x_hi, y_lo, y_hi })
    }

    pub fn from_i64(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Self {
        RatRect::new(
            crate::rat::rat_i(x_lo),
            crate::rat::rat_i(x_hi),
            crate::rat::rat_i(y_lo),
            crate::rat::rat_i(y_hi),
        )
        .expect("valid literal box")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcShape {
    /// Branch index (by increasing ordinate at the sample abscissa) of a
    /// piece that is the graph of a function of x.
    Graph { branch: usize },
    /// Piece of a vertical-line component.
    Vertical,
}

#[derive(Debug, Clone)]
pub struct ConvexArc {
    pub shape: ArcShape,
    pub x_lo: BigRational,
    pub x_hi: BigRational,
    /// Certified bounding range of the ordinates over the arc.
    pub y_lo: BigRational,
    pub y_hi: BigRational,
    /// Sign of dy/dx along the arc; 0 on flat (line) branches and
    /// vertical segments.
    pub monotone_sign: i8,
    /// Sign of d2y/dx2 along the arc; 0 where the branch is a line.
    pub convexity_sign: i8,
    /// Taxicab bound width + height of the arc's bounding box; a
    /// monotone arc's length never exceeds it.
    pub length_bound: BigRational,
}

#[derive(Debug)]
pub struct ConvexDecomposition {
    pub arcs: Vec<ConvexArc>,
    /// Cut abscissae strictly inside the box (rational and bracketed).
    pub cut_count: usize,
    /// Irrational cuts whose bracket gap is excluded from the arcs.
    pub gap_count: usize,
}

/// A cut location: exact rational, or a bracket certified to contain
/// exactly one (irrational) generator root.
#[derive(Debug, Clone)]
enum Cut {
    Exact(BigRational),
    Bracket(BigRational, BigRational),
}

impl Cut {
    fn left(&self) -> &BigRational {
        match self {
            Cut::Exact(v) => v,
            Cut::Bracket(l, _) => l,
        }
    }

    fn right(&self) -> &BigRational {
        match self {
            Cut::Exact(v) => v,
            Cut::Bracket(_, h) => h,
        }
    }
}

/// Roots of all generators in [lo, hi] (closed ends when `closed`, open
/// otherwise), as exact rationals or tight brackets. Brackets are refined
/// until narrower than the target width and free of every `avoid` value.
fn cut_points(
    gens: &[UniPoly],
    lo: &BigRational,
    hi: &BigRational,
    avoid: &[BigRational],
    closed: bool,
) -> Result<(Vec<Cut>, usize)> {
    let mut product = UniPoly::one();
    for g in gens {
        if !g.is_constant() {
            product = product.mul(g);
        }
    }
    if product.is_constant() {
        return Ok((vec![], 0));
    }
    let rationals = rational_roots(&product)?;
    let mut rr = isolate_real_roots(&product)?;
    let width = bracket_width();
    let mut cuts = Vec::new();
    let mut gaps = 0usize;
    for idx in 0..rr.count() {
        let exact = rationals
            .iter()
            .find(|r| rr.intervals[idx].contains(r))
            .cloned();
        let cut = match exact {
            Some(r) => Cut::Exact(r),
            None => {
                rr.refine(idx, &width);
                while avoid.iter().any(|v| rr.intervals[idx].contains(v)) {
                    let w = rr.intervals[idx].width()
                        / BigRational::from_integer(BigInt::from(2));
                    rr.refine(idx, &w);
                }
                gaps += 1;
                Cut::Bracket(rr.intervals[idx].lo.clone(), rr.intervals[idx].hi.clone())
            }
        };
        let keep = match &cut {
            Cut::Exact(r) => {
                if closed {
                    lo <= r && r <= hi
                } else {
                    lo < r && r < hi
                }
            }
            Cut::Bracket(l, h) => l >= lo && h <= hi,
        };
        if keep {
            cuts.push(cut);
        } else if matches!(cut, Cut::Bracket(..)) {
            gaps -= 1;
        }
    }
    cuts.sort_by(|a, b| a.left().cmp(b.left()));
    Ok((cuts, gaps))
}

/// Open intervals between consecutive boundary elements.
fn open_intervals(
    lo: &BigRational,
    hi: &BigRational,
    cuts: &[Cut],
) -> Vec<(BigRational, BigRational)> {
    let mut out = Vec::new();
    let mut prev = lo.clone();
    for cut in cuts {
        if prev < *cut.left() {
            out.push((prev.clone(), cut.left().clone()));
        }
        prev = cut.right().clone();
    }
    if prev < *hi {
        out.push((prev, hi.clone()));
    }
    out
}

/// Shrinks the box's y-range around the curve points over [a, b] by
/// certified-empty interval bisection; always a superset of the true
/// range of in-box branches.
fn branch_y_range(
    f_nv: &BiPoly,
    a: &BigRational,
    b: &BigRational,
    rect: &RatRect,
) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let xiv = Interval::new(a.clone(), b.clone());
    let mut lo = rect.y_lo.clone();
    let mut hi = rect.y_hi.clone();
    for _ in 0..12 {
        let mid = (&lo + &hi) / &two;
        if !f_nv
            .eval_box(&xiv, &Interval::new(mid.clone(), hi.clone()))
            .contains_zero()
        {
            hi = mid;
        } else {
            break;
        }
    }
    for _ in 0..12 {
        let mid = (&lo + &hi) / &two;
        if !f_nv
            .eval_box(&xiv, &Interval::new(lo.clone(), mid.clone()))
            .contains_zero()
        {
            lo = mid;
        } else {
            break;
        }
    }
    (lo, hi)
}

fn pure_x_part(p: &BiPoly) -> UniPoly {
    debug_assert_eq!(p.deg_y(), Some(0));
    p.coeffs_y().swap_remove(0)
}

pub fn convex_decomposition(f: &BiPoly, rect: &RatRect) -> Result<ConvexDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantCurve);
    }
    if !is_square_free(f) {
        return Err(Error::NotSquareFree);
    }
    let vertical = crate::gcd::content_y(f);
    let f_nv = primitive_part_y(f);
    let has_graph = !f_nv.is_constant();
    let fnx = f_nv.derivative_x();
    let fny = f_nv.derivative_y();
    let dnum = convexity_numerator(&f_nv);

    let mut gens: Vec<UniPoly> = Vec::new();
    if !vertical.is_constant() {
        gens.push(vertical.clone());
    }
    if has_graph {
        let lc = f_nv.lc_y();
        if !lc.is_constant() {
            gens.push(lc);
        }
        if f_nv.deg_y().is_some_and(|d| d >= 2) {
            let r = resultant_y(&f_nv, &fny)?;
            debug_assert!(!r.is_zero());
            if !r.is_constant() {
                gens.push(r);
            }
        }
        if !fnx.is_zero() {
            let wh = gcd_bipoly(&f_nv, &fnx);
            let gm = if wh.is_constant() {
                f_nv.clone()
            } else {
                try_div_exact(&f_nv, &wh).expect("gcd divides")
            };
            let gmx = gm.derivative_x();
            if !gmx.is_zero() {
                if gmx.deg_y() == Some(0) {
                    let p = pure_x_part(&gmx);
                    if !p.is_constant() {
                        gens.push(p);
                    }
                } else if gm.deg_y().is_some_and(|d| d >= 1) {
                    let r = resultant_y(&gm, &gmx)?;
                    if r.is_zero() {
                        return Err(Error::DegenerateInput(
                            "monotonicity locus shares a component with the curve".into(),
                        ));
                    }
                    if !r.is_constant() {
                        gens.push(r);
                    }
                }
            }
        }
        if f_nv.total_degree().is_some_and(|d| d >= 2) {
            let h = hessian(&f_nv);
            if !h.is_zero() {
                let wc = gcd_bipoly(&f_nv, &h);
                let gc = if wc.is_constant() {
                    f_nv.clone()
                } else {
                    try_div_exact(&f_nv, &wc).expect("gcd divides")
                };
                if gc.total_degree().is_some_and(|d| d >= 2) {
                    let hg = if wc.is_constant() { h } else { hessian(&gc) };
                    if !hg.is_zero() && !hg.is_constant() {
                        if hg.deg_y() == Some(0) {
                            let p = pure_x_part(&hg);
                            if !p.is_constant() {
                                gens.push(p);
                            }
                        } else if gc.deg_y().is_some_and(|d| d >= 1) {
                            let r = resultant_y(&gc, &hg)?;
                            if r.is_zero() {
                                return Err(Error::DegenerateInput(
                                    "flex locus shares a component with the curve".into(),
                                ));
                            }
                            if !r.is_constant() {
                                gens.push(r);
                            }
                        }
                    }
                }
            }
        }
        for y_edge in [&rect.y_lo, &rect.y_hi] {
            let s = f_nv.section_at_y(y_edge);
            if !s.is_zero() && !s.is_constant() {
                gens.push(s);
            }
        }
    }

    let x_avoid = [rect.x_lo.clone(), rect.x_hi.clone()];
    let (cuts, mut gap_count) = cut_points(&gens, &rect.x_lo, &rect.x_hi, &x_avoid, false)?;
    let cut_count = cuts.len();
    let mut arcs = Vec::new();

    if has_graph {
        let two = BigRational::from_integer(BigInt::from(2));
        for (a, b) in open_intervals(&rect.x_lo, &rect.x_hi, &cuts) {
            for g in &gens {
                if !g.is_constant() {
                    assert_eq!(
                        count_roots_open(g, &a, &b)?,
                        0,
                        "cut generator root inside an arc interval"
                    );
                }
            }
            let x0 = (&a + &b) / &two;
            let section = f_nv.section_at_x(&x0);
            if section.is_constant() {
                continue;
            }
            let mut rr = isolate_real_roots(&section)?;
            let fx_sec = fnx.section_at_x(&x0);
            let fy_sec = fny.section_at_x(&x0);
            let d_sec = dnum.section_at_x(&x0);
            let (range_lo, range_hi) = branch_y_range(&f_nv, &a, &b, rect);
            for idx in 0..rr.count() {
                if rr.cmp_with_rational(idx, &rect.y_lo) == Ordering::Less
                    || rr.cmp_with_rational(idx, &rect.y_hi) == Ordering::Greater
                {
                    continue;
                }
                let s_fx = rr.sign_at(idx, &fx_sec);
                let s_fy = rr.sign_at(idx, &fy_sec);
                let s_d = rr.sign_at(idx, &d_sec);
                debug_assert!(s_fy != 0, "critical point inside an arc interval");
                let length_bound = (&b - &a) + (&range_hi - &range_lo);
                arcs.push(ConvexArc {
                    shape: ArcShape::Graph { branch: idx },
                    x_lo: a.clone(),
                    x_hi: b.clone(),
                    y_lo: range_lo.clone(),
                    y_hi: range_hi.clone(),
                    monotone_sign: -s_fx * s_fy,
                    convexity_sign: -s_d * s_fy,
                    length_bound,
                });
            }
        }
    }

    if !vertical.is_constant() {
        let (positions, pos_gaps) =
            cut_points(&[vertical.clone()], &rect.x_lo, &rect.x_hi, &x_avoid, true)?;
        gap_count += pos_gaps;
        let mut ygens: Vec<UniPoly> = Vec::new();
        if has_graph {
            if f_nv.deg_x().is_some_and(|d| d >= 1) {
                let r = resultant_x(&BiPoly::from_unipoly_x(&vertical), &f_nv)?;
                debug_assert!(!r.is_zero());
                if !r.is_constant() {
                    ygens.push(r);
                }
            } else {
                // Pure-y remainder: crossings at its roots on every line.
                let s = f_nv.section_at_x(&BigRational::zero());
                if !s.is_constant() {
                    ygens.push(s);
                }
            }
        }
        let y_avoid = [rect.y_lo.clone(), rect.y_hi.clone()];
        let (ycuts, y_gaps) = cut_points(&ygens, &rect.y_lo, &rect.y_hi, &y_avoid, false)?;
        gap_count += y_gaps;
        for pos in &positions {
            for (ya, yb) in open_intervals(&rect.y_lo, &rect.y_hi, &ycuts) {
                for g in &ygens {
                    assert_eq!(
                        count_roots_open(g, &ya, &yb)?,
                        0,
                        "vertical cut root inside a segment"
                    );
                }
                let dx = pos.right() - pos.left();
                let length_bound = &dx + (&yb - &ya);
                arcs.push(ConvexArc {
                    shape: ArcShape::Vertical,
                    x_lo: pos.left().clone(),
                    x_hi: pos.right().clone(),
                    y_lo: ya,
                    y_hi: yb,
                    monotone_sign: 0,
                    convexity_sign: 0,
                    length_bound,
                });
            }
        }
    }

    Ok(ConvexDecomposition {
        arcs,
        cut_count,
        gap_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse_bipoly;
    use crate::rat::rat_i;

    fn p(src: &str) -> BiPoly {
        parse_bipoly(src).unwrap()
    }

    fn signs(dec: &ConvexDecomposition) -> Vec<(i8, i8)> {
        dec.arcs
            .iter()
            .map(|a| (a.monotone_sign, a.convexity_sign))
            .collect()
    }

    #[test]
    fn circle_splits_into_quadrants() {
        let dec = convex_decomposition(&p("x^2 + y^2 - 1"), &RatRect::from_i64(-2, 2, -2, 2))
            .unwrap();
        assert_eq!(dec.arcs.len(), 4);
        assert_eq!(dec.cut_count, 3); // x = -1, 0, 1
        assert_eq!(dec.gap_count, 0);
        // Intervals (-1,0) then (0,1), branches bottom-up.
        assert_eq!(signs(&dec), vec![(-1, 1), (1, -1), (1, 1), (-1, -1)]);
        for arc in &dec.arcs {
            assert!(matches!(arc.shape, ArcShape::Graph { .. }));
            assert!(arc.length_bound >= (&arc.x_hi - &arc.x_lo));
            // Certified range stays within the unit circle's bounds.
            assert!(arc.y_lo >= rat_i(-2) && arc.y_hi <= rat_i(2));
        }
    }

    #[test]
    fn parabola_splits_at_vertex() {
        let dec =
            convex_decomposition(&p("y - x^2"), &RatRect::from_i64(-1, 1, -1, 1)).unwrap();
        assert_eq!(dec.arcs.len(), 2);
        assert_eq!(dec.cut_count, 1); // x = 0
        assert_eq!(signs(&dec), vec![(-1, 1), (1, 1)]);
    }

    #[test]
    fn coordinate_cross_gives_four_half_axes() {
        let dec = convex_decomposition(&p("x*y"), &RatRect::from_i64(-2, 2, -2, 2)).unwrap();
        assert_eq!(dec.arcs.len(), 4);
        let graphs: Vec<_> = dec
            .arcs
            .iter()
            .filter(|a| matches!(a.shape, ArcShape::Graph { .. }))
            .collect();
        let verticals: Vec<_> = dec
            .arcs
            .iter()
            .filter(|a| a.shape == ArcShape::Vertical)
            .collect();
        assert_eq!(graphs.len(), 2);
        assert_eq!(verticals.len(), 2);
        for arc in &dec.arcs {
            assert_eq!((arc.monotone_sign, arc.convexity_sign), (0, 0));
        }
        // The horizontal half-axes are cut at the crossing x = 0.
        assert!(graphs.iter().any(|a| a.x_hi == rat_i(0)));
        assert!(graphs.iter().any(|a| a.x_lo == rat_i(0)));
        assert!(verticals.iter().any(|a| a.y_hi == rat_i(0)));
        assert!(verticals.iter().any(|a| a.y_lo == rat_i(0)));
    }

    #[test]
    fn repeated_factor_rejected() {
        assert!(matches!(
            convex_decomposition(&p("(y - x)^2"), &RatRect::from_i64(-1, 1, -1, 1)),
            Err(Error::NotSquareFree)
        ));
    }

    #[test]
    fn irrational_edge_crossing_leaves_a_gap() {
        // y = x^3 + x crosses the box edge y = 1 at an irrational x in
        // (0, 1); the piece beyond it lies outside the box.
        let f = p("y - x^3 - x");
        let dec = convex_decomposition(&f, &RatRect::from_i64(-1, 1, -1, 1)).unwrap();
        assert_eq!(dec.gap_count, 2); // crossings with both y-edges
        // The pieces beyond the edge crossings leave the box, so only the
        // two arcs around the flex at x = 0 remain.
        assert_eq!(dec.arcs.len(), 2);
        assert_eq!(signs(&dec), vec![(1, -1), (1, 1)]);
        // Flex cut at x = 0 plus the two bracketed edge crossings.
        assert_eq!(dec.cut_count, 3);
    }

    #[test]
    fn slanted_line_with_vertical_component() {
        // x*(y - x): a vertical line and a slanted line crossing at 0.
        let dec =
            convex_decomposition(&p("x*y - x^2"), &RatRect::from_i64(-2, 2, -2, 2)).unwrap();
        let graphs = dec
            .arcs
            .iter()
            .filter(|a| matches!(a.shape, ArcShape::Graph { .. }))
            .count();
        let verticals = dec
            .arcs
            .iter()
            .filter(|a| a.shape == ArcShape::Vertical)
            .count();
        assert_eq!(graphs, 2);
        assert_eq!(verticals, 2);
        for arc in dec.arcs.iter().filter(|a| matches!(a.shape, ArcShape::Graph { .. })) {
            assert_eq!((arc.monotone_sign, arc.convexity_sign), (1, 0));
        }
    }

    #[test]
    fn vertical_lines_only() {
        let dec =
            convex_decomposition(&p("x^2 - 1"), &RatRect::from_i64(-2, 2, -1, 1)).unwrap();
        assert_eq!(dec.arcs.len(), 2);
        assert!(dec.arcs.iter().all(|a| a.shape == ArcShape::Vertical));
        assert!(dec.arcs.iter().any(|a| a.x_lo == rat_i(-1)));
        assert!(dec.arcs.iter().any(|a| a.x_lo == rat_i(1)));
    }

    #[test]
    fn elliptic_curve_decomposition_is_sign_sound() {
        // Two components; checks arc signs against refined samples.
        let f = p("y^2 - x^3 + x");
        let dec = convex_decomposition(&f, &RatRect::from_i64(-2, 2, -2, 2)).unwrap();
        assert!(!dec.arcs.is_empty());
        sample_soundness(&f, &dec, 20);
    }

    #[test]
    fn circle_sample_soundness() {
        let f = p("x^2 + y^2 - 1");
        let dec =
            convex_decomposition(&f, &RatRect::from_i64(-2, 2, -2, 2)).unwrap();
        sample_soundness(&f, &dec, 100);
    }

    /// Refines each graph arc at `n` sample abscissae: ordinates must
    /// follow the monotonicity sign, and the chord over each consecutive
    /// sample pair must lie on the side the convexity sign claims.
    fn sample_soundness(f: &BiPoly, dec: &ConvexDecomposition, n: usize) {
        use num_bigint::BigInt;
        let f_nv = primitive_part_y(f);
        for arc in &dec.arcs {
            let branch = match &arc.shape {
                ArcShape::Vertical => continue,
                ArcShape::Graph { branch } => *branch,
            };
            let span = &arc.x_hi - &arc.x_lo;
            let step = &span / BigRational::from_integer(BigInt::from((n + 1) as i64));
            let eps = &span / BigRational::from_integer(BigInt::from(1_000_000i64));
            let mut values: Vec<Interval> = Vec::new();
            let mut xs: Vec<BigRational> = Vec::new();
            for i in 1..=n {
                let x = &arc.x_lo + &step * BigRational::from_integer(BigInt::from(i as i64));
                let section = f_nv.section_at_x(&x);
                let mut rr = isolate_real_roots(&section).unwrap();
                assert!(branch < rr.count(), "branch disappeared inside arc");
                rr.refine(branch, &eps);
                values.push(rr.intervals[branch].as_interval());
                xs.push(x);
            }
            for w in values.windows(2) {
                match arc.monotone_sign {
                    1 => assert!(w[0].hi < w[1].lo, "not increasing"),
                    -1 => assert!(w[0].lo > w[1].hi, "not decreasing"),
                    _ => {}
                }
            }
            if arc.convexity_sign != 0 {
                for i in 0..values.len().saturating_sub(2) {
                    // Chord midpoint over samples i, i+2 versus the branch
                    // at sample i+1 (samples are equally spaced).
                    let chord = values[i]
                        .add(&values[i + 2])
                        .scale(&crate::rat::rat(1, 2));
                    let mid = &values[i + 1];
                    if arc.convexity_sign == 1 {
                        assert!(mid.hi < chord.lo, "chord not above convex branch");
                    } else {
                        assert!(mid.lo > chord.hi, "chord not below concave branch");
                    }
                }
            }
        }
    }
}
