//! Flag-token parsing. Malformed tokens are usage errors (exit status 2),
//! as opposed to domain errors coming out of the library (exit status 1).

use num_rational::BigRational;
use sapgrid_core::grid::Grid;
use sapgrid_core::rat;
use sapgrid_core::weierstrass::{TranslationVector, WeierstrassCurve};
use std::ops::RangeInclusive;

pub fn rational(token: &str) -> Result<BigRational, String> {
    rat::parse(token).ok_or_else(|| format!("expected a rational `p` or `p/q`, got `{token}`"))
}

fn rational_list(src: &str, expect: usize, what: &str) -> Result<Vec<BigRational>, String> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != expect {
        return Err(format!(
            "{what} takes {expect} comma-separated rationals, got {}",
            parts.len()
        ));
    }
    parts.iter().map(|p| rational(p)).collect()
}

/// `u,v`
pub fn translate(src: &str) -> Result<TranslationVector, String> {
    let v = rational_list(src, 2, "--translate")?;
    Ok(TranslationVector::new(v[0].clone(), v[1].clone()))
}

/// `a,b,c,d,e` for y^2 + a*x*y + b*y = x^3 + c*x^2 + d*x + e.
pub fn coeffs(src: &str) -> Result<WeierstrassCurve, String> {
    let v = rational_list(src, 5, "--coeffs")?;
    Ok(WeierstrassCurve::new(
        v[0].clone(),
        v[1].clone(),
        v[2].clone(),
        v[3].clone(),
        v[4].clone(),
    ))
}

/// `a1,d1,a2,d2,k`: starts and steps of both progressions plus length.
pub fn grid(src: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 5 {
        return Err(format!(
            "--grid takes a1,d1,a2,d2,k (4 rationals and a length), got {} tokens",
            parts.len()
        ));
    }
    let a1 = rational(parts[0])?;
    let d1 = rational(parts[1])?;
    let a2 = rational(parts[2])?;
    let d2 = rational(parts[3])?;
    let k: usize = parts[4]
        .trim()
        .parse()
        .map_err(|_| format!("grid length must be a positive integer, got `{}`", parts[4]))?;
    Grid::new(a1, d1, a2, d2, k).map_err(|e| e.to_string())
}

/// `x0,x1,y0,y1`
pub fn rect(src: &str) -> Result<(BigRational, BigRational, BigRational, BigRational), String> {
    let v = rational_list(src, 4, "--box")?;
    Ok((v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
}

/// `L1..L2` inclusive, or a single length `L`.
pub fn lengths(src: &str) -> Result<RangeInclusive<usize>, String> {
    let parse_one = |t: &str| -> Result<usize, String> {
        t.trim()
            .parse()
            .map_err(|_| format!("expected a length, got `{t}`"))
    };
    match src.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse_one(lo)?;
            let hi = parse_one(hi)?;
            if lo > hi {
                return Err(format!("--lengths range `{src}` is empty"));
            }
            Ok(lo..=hi)
        }
        None => {
            let k = parse_one(src)?;
            Ok(k..=k)
        }
    }
}

/// Comma-separated positive integers.
pub fn ks(src: &str) -> Result<Vec<usize>, String> {
    src.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("--ks entries must be positive integers, got `{t}`"))
        })
        .collect()
}

/// Comma-separated permutation images, e.g. `0,4,5,3,2,1`.
pub fn sigma(src: &str) -> Result<Vec<usize>, String> {
    src.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("--sigma entries must be nonnegative integers, got `{t}`"))
        })
        .collect()
}

/// CSV point file: one `x,y` rational pair per line; `#` starts a
/// comment; blank lines are skipped.
pub fn points_csv(text: &str) -> Result<Vec<(BigRational, BigRational)>, String> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.split_once('#') {
            Some((data, _)) => data,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (xs, ys) = line
            .split_once(',')
            .ok_or_else(|| format!("line {}: expected `x,y`", lineno + 1))?;
        let x = rational(xs).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let y = rational(ys).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        points.push((x, y));
    }
    if points.is_empty() {
        return Err("point file contains no points".into());
    }
    Ok(points)
}
