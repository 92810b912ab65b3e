//! Empirical scaling of grid-point counts against the k^(2/3) lattice
//! bound for curves without linear components.
//!
//! Counts are exact; the ratio columns and the fitted log-log slope are
//! explicitly approximate diagnostics (decimal strings and f64).

use crate::bipoly::BiPoly;
use crate::gcd::rational_linear_factor;
use crate::grid::{grid_points_on_curve, Grid};
use crate::par::par_map;
use crate::rat::root_decimal_str;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

pub const RATIO_SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingRow {
    pub k: usize,
    pub count: usize,
    /// count / k^(2/3), truncated decimal.
    pub ratio_two_thirds: String,
    /// count / k^(reference exponent), truncated decimal.
    pub ratio_reference: String,
}

#[derive(Debug, Clone)]
pub struct ScalingTable {
    pub reference_exponent: BigRational,
    pub rows: Vec<ScalingRow>,
    /// Least-squares slope of log count vs log k over rows with
    /// positive count; NaN when fewer than two such rows exist.
    pub slope: f64,
}

/// Runs grid enumeration for each k on the template grid (its length is
/// replaced by k) and tabulates counts against reference exponents.
/// Curves with a rational linear factor are rejected: a line meets the
/// grid in up to k points, so the sublinear bound does not apply.
pub fn scaling_experiment(
    f: &BiPoly,
    base: &Grid,
    ks: &[usize],
    reference_exponent: &BigRational,
) -> Result<ScalingTable> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(line) = rational_linear_factor(f) {
        return Err(Error::LinearFactorDetected(line.to_string()));
    }
    if ks.is_empty() {
        return Err(Error::EmptySearchSpace);
    }
    let two_thirds = BigRational::new(2.into(), 3.into());
    let counts: Vec<Result<usize>> = par_map(ks.to_vec(), |k| {
        let grid = Grid::new(
            base.x_start.clone(),
            base.x_step.clone(),
            base.y_start.clone(),
            base.y_step.clone(),
            k,
        )?;
        Ok(grid_points_on_curve(f, &grid)?.len())
    });
    let mut rows = Vec::with_capacity(ks.len());
    for (&k, count) in ks.iter().zip(counts.into_iter()) {
        let count = count?;
        rows.push(ScalingRow {
            k,
            count,
            ratio_two_thirds: power_ratio_str(count, k, &two_thirds),
            ratio_reference: power_ratio_str(count, k, reference_exponent),
        });
    }
    let pairs: Vec<(usize, usize)> = rows.iter().map(|r| (r.k, r.count)).collect();
    Ok(ScalingTable {
        reference_exponent: reference_exponent.clone(),
        rows,
        slope: log_log_slope(&pairs),
    })
}

/// count / k^(p/q) rendered as a truncated decimal: equals
/// (count^q / k^p)^(1/q), computed at integer scale.
pub fn power_ratio_str(count: usize, k: usize, exponent: &BigRational) -> String {
    assert!(k >= 1);
    let q = exponent
        .denom()
        .to_u32()
        .expect("reference exponent denominator fits u32");
    let p = exponent
        .numer()
        .magnitude()
        .to_u32()
        .expect("reference exponent numerator fits u32");
    let count_q = BigUint::from(count).pow(q);
    let k_p = BigUint::from(k).pow(p);
    let (num, den) = if exponent.is_negative() {
        (count_q * k_p, BigUint::from(1u32))
    } else {
        (count_q, k_p)
    };
    root_decimal_str(&num, &den, q, RATIO_SIGNIFICANT_DIGITS)
}

/// Least-squares slope of ln(count) against ln(k), ignoring zero counts.
pub fn log_log_slope(pairs: &[(usize, usize)]) -> f64 {
    let pts: Vec<(f64, f64)> = pairs
        .iter()
        .filter(|&&(_, c)| c > 0)
        .map(|&(k, c)| ((k as f64).ln(), (c as f64).ln()))
        .collect();
    if pts.len() < 2 {
        return f64::NAN;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse_bipoly;
    use crate::rat::rat;

    fn p(src: &str) -> BiPoly {
        parse_bipoly(src).unwrap()
    }

    #[test]
    fn parabola_counts_are_ceil_sqrt() {
        let f = p("y - x^2");
        let base = Grid::from_i64(0, 1, 0, 1, 1);
        let table =
            scaling_experiment(&f, &base, &[16, 64, 256, 1024], &rat(1, 2)).unwrap();
        let counts: Vec<usize> = table.rows.iter().map(|r| r.count).collect();
        assert_eq!(counts, vec![4, 8, 16, 32]);
        assert!((table.slope - 0.5).abs() < 1e-9);
        assert!(table.slope <= 2.0 / 3.0);
        // count / k^(1/2) = 1 exactly on this family.
        for row in &table.rows {
            assert_eq!(row.ratio_reference, "1.00000000000");
        }
        // 8 / 64^(2/3) = 1/2 exactly.
        assert_eq!(table.rows[1].ratio_two_thirds, "0.500000000000");
    }

    #[test]
    fn lines_are_rejected() {
        let base = Grid::from_i64(0, 1, 0, 1, 1);
        let err = scaling_experiment(&p("y - x"), &base, &[4], &rat(1, 2));
        assert!(matches!(err, Err(Error::LinearFactorDetected(_))));
        let err = scaling_experiment(&p("(y - x)*(y + x)"), &base, &[4], &rat(1, 2));
        assert!(matches!(err, Err(Error::LinearFactorDetected(_))));
    }

    #[test]
    fn circle_family_slope_stays_small() {
        // Lattice points on circles of radius r over the (2r+1)^2 grid:
        // counts oscillate, slope stays well under 2/3.
        let mut pairs = Vec::new();
        for r in [1i64, 2, 5, 25] {
            let f = p(&format!("x^2 + y^2 - {}", r * r));
            let grid = Grid::from_i64(-r, 1, -r, 1, (2 * r + 1) as usize);
            let count = grid_points_on_curve(&f, &grid).unwrap().len();
            let expected = match r {
                1 | 2 => 4,
                5 => 12,
                25 => 20,
                _ => unreachable!(),
            };
            assert_eq!(count, expected);
            pairs.push((grid.len, count));
        }
        let slope = log_log_slope(&pairs);
        assert!(slope < 2.0 / 3.0, "slope = {slope}");
    }

    #[test]
    fn slope_of_single_point_is_nan() {
        assert!(log_log_slope(&[(4, 2)]).is_nan());
        assert!(log_log_slope(&[(4, 0), (8, 0), (16, 1)]).is_nan());
    }
}
