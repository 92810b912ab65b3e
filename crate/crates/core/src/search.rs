//! Exhaustive s.a.p. search on a curve over a finite set of candidate
//! x-progressions.
//!
//! For each candidate (a1, d1) the curve pins down at most deg_y rational
//! y-values per column (exact rational root finding of the y-section), so
//! the y-progression is inferred from the chosen values rather than
//! enumerated: a choice of one y per column is a s.a.p. iff the values are
//! distinct and, sorted, form an arithmetic progression.

use crate::bipoly::BiPoly;
use crate::grid::{Grid, Sap};
use crate::par::par_map;
use crate::roots::rational_roots;
use crate::weierstrass::WeierstrassCurve;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::RangeInclusive;

/// All reduced rationals p/q with |p| <= h, 1 <= q <= h, sorted.
pub fn rationals_of_height(h: u32) -> Vec<BigRational> {
    let mut out = std::collections::BTreeSet::new();
    for q in 1..=h as i64 {
        for p in -(h as i64)..=h as i64 {
            out.insert(BigRational::new(BigInt::from(p), BigInt::from(q)));
        }
    }
    out.into_iter().collect()
}

/// Search over all (a1, d1) with both coordinates of height <= h and
/// d1 nonzero. Candidates are visited in sorted order, lengths ascending,
/// and per-column value choices in lexicographic order, so the result
/// order is deterministic.
pub fn search_saps(
    curve: &WeierstrassCurve,
    height: u32,
    lengths: RangeInclusive<usize>,
) -> Result<Vec<Sap>> {
    if height == 0 {
        return Err(Error::EmptySearchSpace);
    }
    let values = rationals_of_height(height);
    let mut starts = Vec::new();
    for a1 in &values {
        for d1 in &values {
            if !d1.is_zero() {
                starts.push((a1.clone(), d1.clone()));
            }
        }
    }
    search_saps_at(&curve.defining_poly(), &starts, lengths)
}

/// Search restricted to explicit (a1, d1) candidates.
pub fn search_saps_at(
    f: &BiPoly,
    starts: &[(BigRational, BigRational)],
    lengths: RangeInclusive<usize>,
) -> Result<Vec<Sap>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if starts.is_empty() || lengths.is_empty() || *lengths.start() == 0 {
        return Err(Error::EmptySearchSpace);
    }
    let max_k = *lengths.end();
    let lengths_vec: Vec<usize> = lengths.collect();
    let per_start: Vec<Result<Vec<Sap>>> = par_map(starts.to_vec(), |(a1, d1)| {
        let mut found = Vec::new();
        // Column value sets, stopping at the first column with no
        // rational point: longer prefixes cannot host a s.a.p.
        let mut columns: Vec<Vec<BigRational>> = Vec::new();
        for i in 0..max_k {
            let xi = &a1 + &d1 * BigRational::from_integer(BigInt::from(i));
            let section = f.section_at_x(&xi);
            if section.is_zero() {
                return Err(Error::DegenerateInput(
                    "curve contains a whole grid column".into(),
                ));
            }
            if section.is_constant() {
                break;
            }
            let roots = rational_roots(&section)?;
            if roots.is_empty() {
                break;
            }
            columns.push(roots);
        }
        for &k in &lengths_vec {
            if k > columns.len() {
                break;
            }
            collect_saps(&a1, &d1, &columns[..k], &mut found);
        }
        Ok(found)
    });
    let mut out = Vec::new();
    for r in per_start {
        out.extend(r?);
    }
    Ok(out)
}

/// Enumerates one-value-per-column choices and keeps those whose values
/// are distinct and equally spaced. Length 1 uses y_step = 1 since no
/// spacing is inferable from a single value.
fn collect_saps(
    a1: &BigRational,
    d1: &BigRational,
    columns: &[Vec<BigRational>],
    out: &mut Vec<Sap>,
) {
    let k = columns.len();
    if k == 1 {
        for y in &columns[0] {
            out.push(Sap {
                grid: Grid {
                    x_start: a1.clone(),
                    x_step: d1.clone(),
                    y_start: y.clone(),
                    y_step: BigRational::one(),
                    len: 1,
                },
                sigma: vec![0],
            });
        }
        return;
    }
    let mut choice = vec![0usize; k];
    loop {
        let chosen: Vec<&BigRational> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| &columns[i][c])
            .collect();
        if let Some((y_start, y_step, sigma)) = progression_of(&chosen) {
            out.push(Sap {
                grid: Grid {
                    x_start: a1.clone(),
                    x_step: d1.clone(),
                    y_start,
                    y_step,
                    len: k,
                },
                sigma,
            });
        }
        // Odometer increment over the per-column index ranges.
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < columns[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// If the values are distinct and sorted into an arithmetic progression,
/// returns (start, positive step, permutation mapping column to row).
fn progression_of(chosen: &[&BigRational]) -> Option<(BigRational, BigRational, Vec<usize>)> {
    let mut sorted: Vec<&BigRational> = chosen.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let step = sorted[1] - sorted[0];
    debug_assert!(step.is_positive());
    for w in sorted.windows(2) {
        if w[1] - w[0] != step {
            return None;
        }
    }
    let sigma = chosen
        .iter()
        .map(|y| sorted.binary_search(y).expect("chosen value is present"))
        .collect();
    Some((sorted[0].clone(), step, sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::fit_curve_through_points;
    use crate::rat::{rat, rat_i};

    fn assert_valid(sap: &Sap, f: &BiPoly) {
        let mut seen = vec![false; sap.grid.len];
        for &j in &sap.sigma {
            assert!(!seen[j], "sigma not a bijection");
            seen[j] = true;
        }
        for (x, y) in sap.points() {
            assert!(f.eval(&x, &y).is_zero(), "point off curve");
        }
    }

    #[test]
    fn heights_enumerate_reduced_rationals() {
        let h2: Vec<String> = rationals_of_height(2).iter().map(|r| r.to_string()).collect();
        assert_eq!(h2, vec!["-2", "-1", "-1/2", "0", "1/2", "1", "2"]);
    }

    #[test]
    fn empty_spaces_rejected() {
        let c = WeierstrassCurve::from_i64(0, 0, 0, -1, 0);
        assert!(matches!(
            search_saps(&c, 0, 1..=2),
            Err(Error::EmptySearchSpace)
        ));
        assert!(matches!(
            search_saps(&c, 1, 3..=2),
            Err(Error::EmptySearchSpace)
        ));
        assert!(matches!(
            search_saps_at(&c.defining_poly(), &[], 1..=1),
            Err(Error::EmptySearchSpace)
        ));
    }

    #[test]
    fn repeated_y_value_is_not_a_progression() {
        // y^2 = x^3 - x has only y = 0 over x in {0, 1}, so no length-2
        // s.a.p. with distinct rows exists on that x-progression.
        let c = WeierstrassCurve::from_i64(0, 0, 0, -1, 0);
        let saps = search_saps_at(
            &c.defining_poly(),
            &[(rat_i(0), rat_i(1))],
            2..=2,
        )
        .unwrap();
        assert!(saps.is_empty());
    }

    #[test]
    fn length_one_saps_list_rational_points() {
        // x in {-1, 0, 1} all give y = 0 only; 3 abscissae x 2 step signs.
        let c = WeierstrassCurve::from_i64(0, 0, 0, -1, 0);
        let saps = search_saps(&c, 1, 1..=1).unwrap();
        assert_eq!(saps.len(), 6);
        let f = c.defining_poly();
        for sap in &saps {
            assert_eq!(sap.grid.len, 1);
            assert_eq!(sap.grid.y_step, rat_i(1));
            assert_valid(sap, &f);
        }
    }

    #[test]
    fn length_two_saps_on_curve_through_two_grid_points() {
        // y^2 = x^3 + x^2 - x passes through (0,0) and (1,1); each of the
        // four orientation choices of the 2x2 grid hosts exactly 2 saps.
        let c = WeierstrassCurve::from_i64(0, 0, 1, -1, 0);
        let f = c.defining_poly();
        let at = search_saps_at(&f, &[(rat_i(0), rat_i(1))], 2..=2).unwrap();
        assert_eq!(at.len(), 2);
        for sap in &at {
            assert_valid(sap, &f);
        }
        let all = search_saps(&c, 1, 2..=2).unwrap();
        assert_eq!(all.len(), 8);
        for sap in &all {
            assert_valid(sap, &f);
        }
    }

    #[test]
    fn planted_nine_point_sap_recovered() {
        let sigma = [2usize, 0, 3, 1, 4, 6, 8, 5, 7];
        let grid = Grid::from_i64(0, 1, 0, 1, 9);
        let pts: Vec<_> = sigma
            .iter()
            .enumerate()
            .map(|(i, &j)| (grid.x(i), grid.y(j)))
            .collect();
        let basis = fit_curve_through_points(&pts, 3).unwrap();
        assert!(!basis.is_empty());
        let f = &basis[0];
        let saps = search_saps_at(f, &[(rat_i(0), rat_i(1))], 9..=9).unwrap();
        let planted = Sap {
            grid: grid.clone(),
            sigma: sigma.to_vec(),
        };
        assert!(saps.contains(&planted));
        for sap in &saps {
            assert_valid(sap, f);
        }
    }

    #[test]
    fn rational_progressions_found() {
        // Chord fixture: translating y^2 = x^3 - x by (0, 1/2) meets the
        // curve in three x's with equal y; here instead search the curve
        // for the 3-term x-progression {-1, 0, 1} with y identically 0:
        // rejected (rows repeat), while half-integer steps find nothing.
        let c = WeierstrassCurve::from_i64(0, 0, 0, -1, 0);
        let saps = search_saps_at(
            &c.defining_poly(),
            &[(rat_i(-1), rat_i(1)), (rat(-1, 2), rat(1, 2))],
            3..=3,
        )
        .unwrap();
        assert!(saps.is_empty());
    }
}
