//! The k x k product grid of two arithmetic progressions, incidence
//! enumeration against a curve, verification of simultaneous progression
//! structures, and exact curve interpolation.
//!
//! A simultaneous arithmetic progression (s.a.p.) of length k consists of
//! the points (x_i, y_sigma(i)) for a permutation sigma: both coordinate
//! sequences are arithmetic progressions, and the points select one grid
//! row and one grid column each.

use crate::bipoly::BiPoly;
use crate::par::par_map;
use crate::roots::integer_roots_in_range;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Product grid {x_start + i*x_step} x {y_start + j*y_step}, i, j < len.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub x_start: BigRational,
    pub x_step: BigRational,
    pub y_start: BigRational,
    pub y_step: BigRational,
    pub len: usize,
}

impl Grid {
    pub fn new(
        x_start: BigRational,
        x_step: BigRational,
        y_start: BigRational,
        y_step: BigRational,
        len: usize,
    ) -> Result<Self> {
        if len == 0 {
            return Err(Error::DegenerateInput("grid length must be positive".into()));
        }
        if len > 1 && (x_step.is_zero() || y_step.is_zero()) {
            return Err(Error::DegenerateInput(
                "grid steps must be nonzero for length > 1".into(),
            ));
        }
        Ok(Grid {
            x_start,
            x_step,
            y_start,
            y_step,
            len,
        })
    }

    pub fn from_i64(x_start: i64, x_step: i64, y_start: i64, y_step: i64, len: usize) -> Self {
        Grid::new(
            crate::rat::rat_i(x_start),
            crate::rat::rat_i(x_step),
            crate::rat::rat_i(y_start),
            crate::rat::rat_i(y_step),
            len,
        )
        .expect("valid literal grid")
    }

    pub fn x(&self, i: usize) -> BigRational {
        &self.x_start + &self.x_step * BigRational::from_integer(BigInt::from(i))
    }

    pub fn y(&self, j: usize) -> BigRational {
        &self.y_start + &self.y_step * BigRational::from_integer(BigInt::from(j))
    }
}

/// Grid point (column, row) lying on a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridIncidence {
    pub col: usize,
    pub row: usize,
}

/// All grid points on the curve f = 0, columns ascending then rows
/// ascending. Each column reduces to integer root-finding of the
/// restricted univariate polynomial, so cost is k times a degree-bounded
/// isolation rather than k^2 evaluations.
pub fn grid_points_on_curve(f: &BiPoly, grid: &Grid) -> Result<Vec<GridIncidence>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let k = grid.len;
    let cols: Vec<usize> = (0..k).collect();
    let per_col: Vec<Result<Vec<usize>>> = par_map(cols, |i| {
        let xi = grid.x(i);
        let section = f.section_at_x(&xi);
        if section.is_zero() {
            // The whole vertical line x = x_i lies on the curve.
            return Ok((0..k).collect());
        }
        if section.is_constant() {
            return Ok(vec![]);
        }
        // Roots in row coordinates: y = y_start + t*y_step.
        let in_rows = section.compose_linear(&grid.y_start, &grid.y_step);
        if in_rows.is_constant() {
            // Possible only when y_step = 0 (len 1): direct check.
            if in_rows.is_zero() {
                return Ok((0..k).collect());
            }
            return Ok(vec![]);
        }
        let roots = integer_roots_in_range(
            &in_rows,
            &BigInt::zero(),
            &BigInt::from(k - 1),
        )?;
        Ok(roots
            .into_iter()
            .map(|t| usize::try_from(t).expect("root clamped to range"))
            .collect())
    });
    let mut out = Vec::new();
    for (i, rows) in per_col.into_iter().enumerate() {
        for row in rows? {
            out.push(GridIncidence { col: i, row });
        }
    }
    Ok(out)
}

/// A simultaneous arithmetic progression: point i is
/// (grid.x(i), grid.y(sigma[i])).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sap {
    pub grid: Grid,
    pub sigma: Vec<usize>,
}

impl Sap {
    pub fn points(&self) -> Vec<(BigRational, BigRational)> {
        self.sigma
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.grid.x(i), self.grid.y(j)))
            .collect()
    }
}

/// Searches the curve's grid incidences for a system of distinct
/// representatives: a permutation sigma with every (x_i, y_sigma(i)) on
/// the curve. Returns None when no such permutation exists.
///
/// Matching is Kuhn's augmenting-path algorithm over the bipartite
/// column-row graph; columns are processed in order and adjacency lists
/// are sorted, so the answer is deterministic.
pub fn verify_sap(f: &BiPoly, grid: &Grid) -> Result<Option<Sap>> {
    let k = grid.len;
    let incidences = grid_points_on_curve(f, grid)?;
    let mut adj: Vec<Vec<usize>> = vec![vec![]; k];
    for inc in &incidences {
        adj[inc.col].push(inc.row);
    }
    // Enumeration order already yields sorted rows per column.
    let mut row_owner: Vec<Option<usize>> = vec![None; k];
    fn try_assign(
        col: usize,
        adj: &[Vec<usize>],
        row_owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &row in &adj[col] {
            if visited[row] {
                continue;
            }
            visited[row] = true;
            if row_owner[row].is_none()
                || try_assign(row_owner[row].unwrap(), adj, row_owner, visited)
            {
                row_owner[row] = Some(col);
                return true;
            }
        }
        false
    }
    for col in 0..k {
        let mut visited = vec![false; k];
        if !try_assign(col, &adj, &mut row_owner, &mut visited) {
            return Ok(None);
        }
    }
    let mut sigma = vec![0usize; k];
    for (row, owner) in row_owner.iter().enumerate() {
        sigma[owner.expect("perfect matching")] = row;
    }
    Ok(Some(Sap {
        grid: grid.clone(),
        sigma,
    }))
}

/// Smallest degree d with d(d+3)/2 >= k: curves of this degree always
/// pass through any k points.
pub fn sap_degree(k: usize) -> u32 {
    let mut d: u32 = 1;
    while (d as usize) * (d as usize + 3) / 2 < k {
        d += 1;
    }
    d
}

/// Monomials of total degree <= d: total degree ascending, then x-power
/// ascending. The interpolation basis and its normalization order.
pub fn monomials_up_to(d: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for total in 0..=d {
        for xp in 0..=total {
            out.push((xp, total - xp));
        }
    }
    out
}

/// Basis of the space of degree-<=d curves vanishing on all points, from
/// the exact kernel of the evaluation matrix. At most d(d+3)/2 points are
/// accepted, which guarantees the kernel is nontrivial; when the point
/// count meets that bound and the system has full rank, the basis is a
/// single polynomial.
pub fn fit_curve_through_points(
    points: &[(BigRational, BigRational)],
    degree: u32,
) -> Result<Vec<BiPoly>> {
    fit_curve_through_points_with(points, degree, false)
}

/// As `fit_curve_through_points`, but with `allow_excess` the point-count
/// cap is waived and an overdetermined system may yield an empty basis.
pub fn fit_curve_through_points_with(
    points: &[(BigRational, BigRational)],
    degree: u32,
    allow_excess: bool,
) -> Result<Vec<BiPoly>> {
    if degree == 0 {
        return Err(Error::DegreeTooSmall(0, 1));
    }
    let max_points = (degree as usize) * (degree as usize + 3) / 2;
    if !allow_excess && points.len() > max_points {
        return Err(Error::TooManyPoints {
            got: points.len(),
            max: max_points,
        });
    }
    let basis = monomials_up_to(degree);
    let cols = basis.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(points.len());
    for (x, y) in points {
        let mut row = Vec::with_capacity(cols);
        for &(i, j) in &basis {
            let mut v = BigRational::one();
            for _ in 0..i {
                v *= x;
            }
            for _ in 0..j {
                v *= y;
            }
            row.push(v);
        }
        rows.push(row);
    }
    let vectors = kernel_basis(rows, cols);
    let mut out = Vec::with_capacity(vectors.len());
    for coeffs in vectors {
        let mut f = BiPoly::zero();
        for (&(i, j), c) in basis.iter().zip(coeffs.iter()) {
            f = f.add(&BiPoly::monomial(i, j, c.clone()));
        }
        out.push(normalize_in_basis_order(&f, &basis));
    }
    Ok(out)
}

/// Reduced row echelon form kernel basis: one vector per free column in
/// ascending order, unit value at its free column, pivot entries
/// back-substituted, other free columns zero.
fn kernel_basis(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivot_of_row: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let pr = (r..rows.len()).find(|&i| !rows[i][c].is_zero());
        let pr = match pr {
            None => continue,
            Some(pr) => pr,
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for cc in 0..cols {
                    let sub = &factor * &rows[r][cc];
                    rows[i][cc] -= sub;
                }
            }
        }
        pivot_of_row.push(c);
        r += 1;
    }
    let pivots: std::collections::BTreeSet<usize> = pivot_of_row.iter().cloned().collect();
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![BigRational::zero(); cols];
        x[free] = BigRational::one();
        for (row, &pc) in rows.iter().zip(pivot_of_row.iter()) {
            x[pc] = -row[free].clone();
        }
        out.push(x);
    }
    out
}

/// Primitive integer coefficients with the last basis monomial's
/// coefficient positive.
fn normalize_in_basis_order(f: &BiPoly, basis: &[(u32, u32)]) -> BiPoly {
    use num_integer::Integer;
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for (_, c) in f.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
        numer_gcd = numer_gcd.gcd(c.numer());
    }
    let mut out = f.scale(&BigRational::new(denom_lcm, numer_gcd));
    let lead = basis
        .iter()
        .rev()
        .find(|&&(i, j)| !out.coeff(i, j).is_zero())
        .expect("nonzero kernel vector");
    if out.coeff(lead.0, lead.1).is_negative() {
        out = out.neg();
    }
    out
}
