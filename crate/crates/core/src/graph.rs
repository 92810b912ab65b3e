//! Multigraph built from the k^2 translates of a Weierstrass curve
//! carrying a length-k simultaneous arithmetic progression.
//!
//! Vertices are the 2k x 2k grid positions reached by translating the
//! progression's grid, plus one vertex for the point at infinity.
//! Every grid vertex lying on a translate is enumerated up front and
//! consecutive on-curve vertices are joined along the curve, so no edge
//! can pass through a skipped on-curve vertex. The bounded oval of a
//! two-component curve is wired as a cycle; the unbounded component is
//! wired as a path entering and leaving through the infinity vertex.

use crate::grid::{Grid, Sap};
use crate::rat::rat_i;
use crate::weierstrass::{IntersectionPoints, TranslationVector, WeierstrassCurve};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Edge between vertex indices v1 <= v2, labeled with the translate
/// (p, q) that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub v1: usize,
    pub v2: usize,
    pub translate: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct TranslateGraph {
    pub k: usize,
    /// Progression points on the bounded oval (0 when one component).
    pub t: usize,
    /// The progression's grid; translated copies cover the vertex set.
    pub grid: Grid,
    pub edges: Vec<GraphEdge>,
}

impl TranslateGraph {
    /// 4k^2 grid vertices plus infinity.
    pub fn vertex_count(&self) -> usize {
        4 * self.k * self.k + 1
    }

    pub fn infinity_index(&self) -> usize {
        4 * self.k * self.k
    }

    /// Index of the grid vertex at translated coordinates
    /// (a, b), a, b in -(k-1)..=k.
    pub fn index_of(&self, a: i64, b: i64) -> usize {
        let k = self.k as i64;
        debug_assert!(-(k - 1) <= a && a <= k && -(k - 1) <= b && b <= k);
        ((a + k - 1) * 2 * k + (b + k - 1)) as usize
    }

    /// Grid coordinates of a vertex index; None for infinity.
    pub fn vertex_coords(&self, idx: usize) -> Option<(i64, i64)> {
        if idx >= 4 * self.k * self.k {
            return None;
        }
        let k = self.k as i64;
        let a = (idx / (2 * self.k)) as i64 - (k - 1);
        let b = (idx % (2 * self.k)) as i64 - (k - 1);
        Some((a, b))
    }

    /// Multiplicity per unordered vertex pair.
    pub fn multiplicities(&self) -> BTreeMap<(usize, usize), u64> {
        let mut m = BTreeMap::new();
        for edge in &self.edges {
            *m.entry((edge.v1, edge.v2)).or_insert(0u64) += 1;
        }
        m
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph translates {\n  node [shape=point];\n");
        let name = |idx: usize| match self.vertex_coords(idx) {
            Some((a, b)) => format!("\"g_{}_{}\"", a, b),
            None => "\"inf\"".to_string(),
        };
        for idx in 0..self.vertex_count() {
            let _ = writeln!(out, "  {};", name(idx));
        }
        for edge in &self.edges {
            let _ = writeln!(
                out,
                "  {} -- {} [label=\"{},{}\"];",
                name(edge.v1),
                name(edge.v2),
                edge.translate.0,
                edge.translate.1
            );
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub n: u64,
    pub e: u64,
    pub m_max: u64,
    /// Max multiplicity among edges incident to the infinity vertex.
    pub infinity_m_max: u64,
    /// 4 * C(k^2, 2): four intersections per translate pair.
    pub cr_upper: u64,
    /// Geometric crossing count when computed; see
    /// count_crossings_geometric.
    pub cr_geometric: Option<u64>,
    pub t: usize,
}

/// On-curve super-grid position, in original-curve grid coordinates:
/// translate (p, q) sees it at grid vertex (u - p, v - q).
struct Incidence {
    u: i64,
    v: i64,
    bounded: bool,
    /// Sign of 2y + ax + b at the point: branch membership.
    branch: i8,
    x: BigRational,
}

pub fn build_translate_graph(curve: &WeierstrassCurve, sap: &Sap) -> Result<TranslateGraph> {
    let k = sap.grid.len;
    if k < 2 || sap.sigma.len() != k {
        return Err(Error::DegenerateInput(
            "translate graph needs a progression of length >= 2".into(),
        ));
    }
    for (i, (x, y)) in sap.points().iter().enumerate() {
        if !curve.contains(x, y) {
            return Err(Error::SapNotOnCurve(i));
        }
    }
    let mut comps = curve.components()?;
    let t = sap
        .points()
        .iter()
        .filter(|(x, _)| comps.x_on_bounded_oval(x))
        .count();

    // All curve incidences on the (3k-1) x (3k-1) super-grid reached by
    // shifting any 2k x 2k vertex by any translate.
    let ki = k as i64;
    let mut incidences = Vec::new();
    for u in -(ki - 1)..=(2 * ki - 1) {
        let x = grid_x(&sap.grid, u);
        for v in -(ki - 1)..=(2 * ki - 1) {
            let y = grid_y(&sap.grid, v);
            if curve.contains(&x, &y) {
                incidences.push(Incidence {
                    u,
                    v,
                    bounded: comps.x_on_bounded_oval(&x),
                    branch: curve.branch_sign(&x, &y),
                    x: x.clone(),
                });
            }
        }
    }

    let graph_shell = TranslateGraph {
        k,
        t,
        grid: sap.grid.clone(),
        edges: Vec::new(),
    };
    let infinity = graph_shell.infinity_index();
    let mut edges = Vec::new();
    for p in 0..k {
        for q in 0..k {
            let mut oval: Vec<(usize, &BigRational, i8)> = Vec::new();
            let mut unbounded: Vec<(usize, &BigRational, i8)> = Vec::new();
            for inc in &incidences {
                let a = inc.u - p as i64;
                let b = inc.v - q as i64;
                if a < -(ki - 1) || a > ki || b < -(ki - 1) || b > ki {
                    continue;
                }
                let idx = graph_shell.index_of(a, b);
                if inc.bounded {
                    oval.push((idx, &inc.x, inc.branch));
                } else {
                    unbounded.push((idx, &inc.x, inc.branch));
                }
            }
            wire_oval(&oval, (p, q), &mut edges);
            wire_unbounded(&unbounded, (p, q), infinity, &mut edges);
        }
    }
    Ok(TranslateGraph { edges, ..graph_shell })
}

fn grid_x(grid: &Grid, u: i64) -> BigRational {
    &grid.x_start + &grid.x_step * BigRational::from_integer(BigInt::from(u))
}

fn grid_y(grid: &Grid, v: i64) -> BigRational {
    &grid.y_start + &grid.y_step * BigRational::from_integer(BigInt::from(v))
}

fn push_edge(edges: &mut Vec<GraphEdge>, a: usize, b: usize, translate: (usize, usize)) {
    let (v1, v2) = if a <= b { (a, b) } else { (b, a) };
    edges.push(GraphEdge { v1, v2, translate });
}

/// Cycle around the bounded oval: branch point at r1 (if a vertex sits
/// there), top branch left to right, branch point at r2, bottom branch
/// right to left, closing back. Fewer than two vertices add no edges.
fn wire_oval(
    points: &[(usize, &BigRational, i8)],
    translate: (usize, usize),
    edges: &mut Vec<GraphEdge>,
) {
    if points.len() < 2 {
        return;
    }
    let mut tops: Vec<_> = points.iter().filter(|p| p.2 > 0).collect();
    let mut bottoms: Vec<_> = points.iter().filter(|p| p.2 < 0).collect();
    tops.sort_by(|a, b| a.1.cmp(b.1));
    bottoms.sort_by(|a, b| b.1.cmp(a.1));
    // A branch point is at x = r1 iff no other oval vertex lies left of
    // it (oval abscissae fill [r1, r2]).
    let mut left_bp = Vec::new();
    let mut right_bp = Vec::new();
    for p in points.iter().filter(|p| p.2 == 0) {
        if points.iter().any(|o| o.1 < p.1) {
            right_bp.push(p);
        } else {
            left_bp.push(p);
        }
    }
    let cycle: Vec<usize> = left_bp
        .iter()
        .map(|p| p.0)
        .chain(tops.iter().map(|p| p.0))
        .chain(right_bp.iter().map(|p| p.0))
        .chain(bottoms.iter().map(|p| p.0))
        .collect();
    for w in cycle.windows(2) {
        push_edge(edges, w[0], w[1], translate);
    }
    push_edge(edges, *cycle.last().unwrap(), cycle[0], translate);
}

/// Path through the unbounded component: in from infinity along the
/// bottom branch (x descending), around the branch point at r3, out
/// along the top branch (x ascending) back to infinity.
fn wire_unbounded(
    points: &[(usize, &BigRational, i8)],
    translate: (usize, usize),
    infinity: usize,
    edges: &mut Vec<GraphEdge>,
) {
    if points.is_empty() {
        return;
    }
    let mut tops: Vec<_> = points.iter().filter(|p| p.2 > 0).collect();
    let mut bottoms: Vec<_> = points.iter().filter(|p| p.2 < 0).collect();
    tops.sort_by(|a, b| a.1.cmp(b.1));
    bottoms.sort_by(|a, b| b.1.cmp(a.1));
    let bps: Vec<_> = points.iter().filter(|p| p.2 == 0).collect();
    debug_assert!(bps.len() <= 1, "unbounded component has one branch point");
    let path: Vec<usize> = std::iter::once(infinity)
        .chain(bottoms.iter().map(|p| p.0))
        .chain(bps.iter().map(|p| p.0))
        .chain(tops.iter().map(|p| p.0))
        .chain(std::iter::once(infinity))
        .collect();
    for w in path.windows(2) {
        push_edge(edges, w[0], w[1], translate);
    }
}

pub fn graph_stats(g: &TranslateGraph) -> GraphStats {
    let mult = g.multiplicities();
    let infinity = g.infinity_index();
    let m_max = mult.values().copied().max().unwrap_or(0);
    let infinity_m_max = mult
        .iter()
        .filter(|((a, b), _)| *a == infinity || *b == infinity)
        .map(|(_, &m)| m)
        .max()
        .unwrap_or(0);
    let kk = (g.k * g.k) as u64;
    GraphStats {
        n: g.vertex_count() as u64,
        e: g.edges.len() as u64,
        m_max,
        infinity_m_max,
        cr_upper: 4 * kk * (kk - 1) / 2,
        cr_geometric: None,
        t: g.t,
    }
}

/// Intersection points of the curve with its translate by delta that
/// lie in the closed box, counted exactly.
pub fn translate_pair_crossings(
    curve: &WeierstrassCurve,
    delta: &TranslationVector,
    x1: &BigRational,
    x2: &BigRational,
    y1: &BigRational,
    y2: &BigRational,
) -> Result<u64> {
    let mut pts = curve.intersection_points(delta)?;
    let mut count = 0;
    for i in 0..pts.count() {
        if pts.point_in_closed_box(i, x1, x2, y1, y2) {
            count += 1;
        }
    }
    Ok(count)
}

/// Sums real intersection points over all unordered translate pairs,
/// restricted to the drawing region (the closed bounding box of the
/// 2k x 2k vertex grid). Pairs sharing a difference vector reuse one
/// exact intersection computation; each pair contributes at most 4.
pub fn count_crossings_geometric(curve: &WeierstrassCurve, g: &TranslateGraph) -> Result<u64> {
    let k = g.k as i64;
    let (bx1, bx2) = ordered(grid_x(&g.grid, -(k - 1)), grid_x(&g.grid, k));
    let (by1, by2) = ordered(grid_y(&g.grid, -(k - 1)), grid_y(&g.grid, k));
    let mut cache: BTreeMap<(i64, i64), IntersectionPoints> = BTreeMap::new();
    let translates: Vec<(i64, i64)> = (0..k)
        .flat_map(|p| (0..k).map(move |q| (p, q)))
        .collect();
    let mut total = 0u64;
    for (i, &(p, q)) in translates.iter().enumerate() {
        for &(p2, q2) in &translates[i + 1..] {
            let key = (p2 - p, q2 - q);
            if !cache.contains_key(&key) {
                let delta = TranslationVector::new(
                    &g.grid.x_step * rat_i(key.0),
                    &g.grid.y_step * rat_i(key.1),
                );
                cache.insert(key, curve.intersection_points(&delta)?);
            }
            let pts = cache.get_mut(&key).unwrap();
            // Translate (p, q) shows original-curve point W at
            // W - (p*d1, q*d2); W is drawn iff it lies in the box
            // shifted forward by that vector.
            let sx = &g.grid.x_step * rat_i(p);
            let sy = &g.grid.y_step * rat_i(q);
            for j in 0..pts.count() {
                if pts.point_in_closed_box(j, &(&bx1 + &sx), &(&bx2 + &sx), &(&by1 + &sy), &(&by2 + &sy))
                {
                    total += 1;
                }
            }
        }
    }
    Ok(total)
}

fn ordered(a: BigRational, b: BigRational) -> (BigRational, BigRational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
