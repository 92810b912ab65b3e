//! Weierstrass cubics y^2 + a*x*y + b*y = x^3 + c*x^2 + d*x + e and the
//! exact intersection theory of a curve with its own translates.
//!
//! Subtracting the equations of P and P + (u, v) eliminates the quadratic
//! y-terms and leaves the linear relation D*y = N(x) with D = 2v + a*u.
//! For D != 0 every intersection x-coordinate is a root of a quartic (or
//! cubic when u = 0) obtained by substituting y = N/D back in; for D = 0
//! the x-coordinates are the roots of the quadratic N itself and the two
//! candidate y-values per root are separated by the sign of the fiber
//! discriminant. Either way at most four real intersections exist, with
//! every count and comparison decided exactly.

use crate::bipoly::BiPoly;
use crate::rat::rat;
use crate::roots::{isolate_real_roots, RealRoots};
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Curve y^2 + a*x*y + b*y = x^3 + c*x^2 + d*x + e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
    pub e: BigRational,
}

/// Plane translation (dx, dy).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationVector {
    pub dx: BigRational,
    pub dy: BigRational,
}

impl TranslationVector {
    pub fn new(dx: BigRational, dy: BigRational) -> Self {
        TranslationVector { dx, dy }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }
}

impl WeierstrassCurve {
    pub fn new(
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
        e: BigRational,
    ) -> Self {
        WeierstrassCurve { a, b, c, d, e }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        WeierstrassCurve::new(
            crate::rat::rat_i(a),
            crate::rat::rat_i(b),
            crate::rat::rat_i(c),
            crate::rat::rat_i(d),
            crate::rat::rat_i(e),
        )
    }

    /// The discriminant; zero exactly when the curve is singular.
    pub fn discriminant(&self) -> BigRational {
        let b2 = &self.a * &self.a + rat(4, 1) * &self.c;
        let b4 = rat(2, 1) * &self.d + &self.a * &self.b;
        let b6 = &self.b * &self.b + rat(4, 1) * &self.e;
        let b8 = &self.a * &self.a * &self.e + rat(4, 1) * &self.c * &self.e
            - &self.a * &self.b * &self.d
            + &self.c * &self.b * &self.b
            - &self.d * &self.d;
        -(&b2 * &b2) * &b8 - rat(8, 1) * &b4 * &b4 * &b4 - rat(27, 1) * &b6 * &b6
            + rat(9, 1) * &b2 * &b4 * &b6
    }

    pub fn is_nonsingular(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// x^3 + c*x^2 + d*x + e.
    pub fn cubic_rhs(&self) -> UniPoly {
        UniPoly::new(vec![
            self.e.clone(),
            self.d.clone(),
            self.c.clone(),
            BigRational::one(),
        ])
    }

    /// Defining polynomial y^2 + a*x*y + b*y - x^3 - c*x^2 - d*x - e.
    pub fn defining_poly(&self) -> BiPoly {
        BiPoly::monomial(0, 2, BigRational::one())
            .add(&BiPoly::monomial(1, 1, self.a.clone()))
            .add(&BiPoly::monomial(0, 1, self.b.clone()))
            .add(&BiPoly::monomial(3, 0, -BigRational::one()))
            .add(&BiPoly::monomial(2, 0, -self.c.clone()))
            .add(&BiPoly::monomial(1, 0, -self.d.clone()))
            .add(&BiPoly::monomial(0, 0, -self.e.clone()))
    }

    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        let lhs = y * y + &self.a * x * y + &self.b * y;
        let rhs = self.cubic_rhs().eval(x);
        lhs == rhs
    }

    /// Completing the square in y turns the curve into w^2 = Q(x) with
    /// Q = x^3 + (c + a^2/4)x^2 + (d + ab/2)x + (e + b^2/4).
    pub fn completed_square_cubic(&self) -> UniPoly {
        UniPoly::new(vec![
            &self.e + &self.b * &self.b / rat(4, 1),
            &self.d + &self.a * &self.b / rat(2, 1),
            &self.c + &self.a * &self.a / rat(4, 1),
            BigRational::one(),
        ])
    }

    /// Sign of 2y + a*x + b: positive on the upper branch, negative on
    /// the lower, zero at branch points. Meaningful for on-curve points.
    pub fn branch_sign(&self, x: &BigRational, y: &BigRational) -> i8 {
        let v = rat(2, 1) * y + &self.a * x + &self.b;
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Real component structure, from the sign pattern of Q: three real
    /// roots give a bounded oval over [r1, r2] plus an unbounded branch
    /// over [r3, inf); one real root gives the unbounded branch only.
    pub fn components(&self) -> Result<ComponentStructure> {
        let q = self.completed_square_cubic();
        if !q.gcd(&q.derivative()).is_constant() {
            return Err(Error::DegenerateCurve);
        }
        let roots = isolate_real_roots(&q)?;
        let n = roots.count();
        debug_assert!(n == 1 || n == 3);
        Ok(ComponentStructure {
            cubic: q,
            two_components: n == 3,
            roots,
        })
    }

    /// Numerator N and denominator D of the translate relation
    /// D*y = N(x) for points P with both P and P + t on the curve.
    fn translate_relation(&self, t: &TranslationVector) -> (UniPoly, BigRational) {
        let (u, v) = (&t.dx, &t.dy);
        let d = rat(2, 1) * v + &self.a * u;
        let n0 = u * u * u + &self.c * u * u + &self.d * u
            - &self.a * u * v
            - &self.b * v
            - v * v;
        let n1 = rat(3, 1) * u * u + rat(2, 1) * &self.c * u - &self.a * v;
        let n2 = rat(3, 1) * u;
        (UniPoly::new(vec![n0, n1, n2]), d)
    }

    /// Exact handles on the intersection points of the curve with its
    /// translate by t.
    pub fn intersection_points(&self, t: &TranslationVector) -> Result<IntersectionPoints> {
        if t.is_zero() {
            return Err(Error::ZeroTranslation);
        }
        let (n, dd) = self.translate_relation(t);
        let cubic = self.cubic_rhs();
        let axb = UniPoly::new(vec![self.b.clone(), self.a.clone()]);
        if dd.is_zero() {
            // Then u != 0 and N has degree exactly 2: x-coordinates are
            // its roots, y-values come from the curve fiber.
            debug_assert!(!t.dx.is_zero());
            debug_assert_eq!(n.degree(), Some(2));
            let mut roots = isolate_real_roots(&n)?;
            // Fiber discriminant (a*x + b)^2 + 4*(x^3 + c*x^2 + d*x + e).
            let disc = axb.mul(&axb).add(&cubic.scale(&rat(4, 1)));
            let mut points = Vec::new();
            for i in 0..roots.count() {
                match roots.sign_at(i, &disc) {
                    1 => {
                        points.push((i, YKind::QuadLower));
                        points.push((i, YKind::QuadUpper));
                    }
                    0 => points.push((i, YKind::QuadDouble)),
                    _ => {}
                }
            }
            Ok(IntersectionPoints {
                curve: self.clone(),
                branch: BranchPoly::Quadratic(n.primitive()),
                numer: UniPoly::zero(),
                denom: BigRational::zero(),
                roots,
                points,
            })
        } else {
            // Substitute y = N/D into the curve, scaled by D^2.
            let d_sq = &dd * &dd;
            let f = n
                .mul(&n)
                .add(&axb.mul(&n).scale(&dd))
                .sub(&cubic.scale(&d_sq));
            debug_assert!(!f.is_zero());
            if t.dx.is_zero() {
                debug_assert_eq!(f.degree(), Some(3));
            } else {
                debug_assert_eq!(f.degree(), Some(4));
            }
            let roots = isolate_real_roots(&f)?;
            let points = (0..roots.count()).map(|i| (i, YKind::Ratio)).collect();
            Ok(IntersectionPoints {
                curve: self.clone(),
                branch: BranchPoly::Quartic(f),
                numer: n,
                denom: dd,
                roots,
                points,
            })
        }
    }

    /// Count-and-branch summary of the translate intersection.
    pub fn translate_intersections(&self, t: &TranslationVector) -> Result<IntersectionReport> {
        let pts = self.intersection_points(t)?;
        Ok(IntersectionReport {
            real_count: pts.count(),
            branch: pts.branch,
        })
    }
}

/// Translate intersection for an arbitrary plane curve: real isolating
/// boxes plus the Bezout budget (tightened to 4 for Weierstrass cubics).
#[derive(Debug)]
pub struct TranslateReport {
    pub real_points: Vec<crate::bisolve::SolutionBox>,
    pub real_count: usize,
    pub complex_count_bound: usize,
    /// The translate maps some component of the curve to itself; counts
    /// are then undefined and left empty.
    pub shares_component: bool,
}

/// Intersects f = 0 with its preimage under translation by t, i.e. the
/// common zeros of f(x, y) and f(x + u, y + v).
pub fn curve_translate_intersections(
    f: &BiPoly,
    t: &TranslationVector,
) -> Result<TranslateReport> {
    if t.is_zero() {
        return Err(Error::ZeroTranslation);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantCurve);
    }
    let d = f.total_degree().expect("nonconstant") as usize;
    let complex_count_bound = if as_weierstrass_cubic(f).is_some() {
        4
    } else {
        d * d
    };
    let g = f.translate(&t.dx, &t.dy);
    if !crate::gcd::gcd_bipoly(f, &g).is_constant() {
        return Ok(TranslateReport {
            real_points: vec![],
            real_count: 0,
            complex_count_bound,
            shares_component: true,
        });
    }
    let real_points = crate::bisolve::common_real_solutions(f, &g)?;
    Ok(TranslateReport {
        real_count: real_points.len(),
        real_points,
        complex_count_bound,
        shares_component: false,
    })
}

/// Recognizes scalar multiples of y^2 + a*x*y + b*y - x^3 - c*x^2 - d*x - e.
pub fn as_weierstrass_cubic(f: &BiPoly) -> Option<WeierstrassCurve> {
    let lead = f.coeff(0, 2);
    if lead.is_zero() || f.coeff(3, 0) != -lead.clone() {
        return None;
    }
    let allowed = [(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)];
    if f.terms().any(|(&ij, _)| !allowed.contains(&ij)) {
        return None;
    }
    Some(WeierstrassCurve {
        a: f.coeff(1, 1) / &lead,
        b: f.coeff(0, 1) / &lead,
        c: -(f.coeff(2, 0) / &lead),
        d: -(f.coeff(1, 0) / &lead),
        e: -(f.coeff(0, 0) / &lead),
    })
}

/// Branch polynomial governing the translate intersection.
#[derive(Debug, Clone)]
pub enum BranchPoly {
    /// D != 0: x-coordinates are real roots of this quartic (cubic when
    /// the translate is vertical).
    Quartic(UniPoly),
    /// D = 0: x-coordinates are real roots of this quadratic.
    Quadratic(UniPoly),
}

impl BranchPoly {
    pub fn poly(&self) -> &UniPoly {
        match self {
            BranchPoly::Quartic(p) | BranchPoly::Quadratic(p) => p,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IntersectionReport {
    pub branch: BranchPoly,
    pub real_count: usize,
}

/// Real component layout of a nonsingular curve.
#[derive(Debug, Clone)]
pub struct ComponentStructure {
    pub cubic: UniPoly,
    pub roots: RealRoots,
    pub two_components: bool,
}

impl ComponentStructure {
    /// For the x-coordinate of an on-curve point: true when the point
    /// lies on the bounded oval (x <= r2). With one component, false.
    pub fn x_on_bounded_oval(&mut self, x: &BigRational) -> bool {
        if !self.two_components {
            return false;
        }
        // On-curve x has Q(x) >= 0, so x <= r2 or x >= r3; comparing
        // against r2 alone decides.
        self.roots.cmp_with_rational(1, x) != Ordering::Less
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum YKind {
    /// y = N(x)/D.
    Ratio,
    /// Lower fiber root (minus branch of the quadratic formula).
    QuadLower,
    /// Upper fiber root.
    QuadUpper,
    /// Double fiber root y = -(a*x + b)/2.
    QuadDouble,
}

/// The intersection points of a curve and one of its translates, ordered
/// by x ascending (ties by y ascending). Coordinates are algebraic;
/// comparisons against rational bounds are exact.
#[derive(Debug, Clone)]
pub struct IntersectionPoints {
    curve: WeierstrassCurve,
    pub branch: BranchPoly,
    numer: UniPoly,
    denom: BigRational,
    roots: RealRoots,
    points: Vec<(usize, YKind)>,
}

impl IntersectionPoints {
    pub fn count(&self) -> usize {
        self.points.len()
    }

    /// Exact comparison of point i's x-coordinate with a rational.
    pub fn cmp_x(&mut self, i: usize, bound: &BigRational) -> Ordering {
        let (ridx, _) = self.points[i];
        self.roots.cmp_with_rational(ridx, bound)
    }

    /// Exact comparison of point i's y-coordinate with a rational.
    pub fn cmp_y(&mut self, i: usize, bound: &BigRational) -> Ordering {
        let (ridx, kind) = self.points[i];
        match kind {
            YKind::Ratio => {
                // sign(y - beta) = sign(N - beta*D at xi) * sign(D).
                let shifted = self.numer.sub(&UniPoly::constant(bound * &self.denom));
                let s = self.roots.sign_at(ridx, &shifted) as i32
                    * if self.denom.is_positive() { 1 } else { -1 };
                s.cmp(&0)
            }
            YKind::QuadDouble => {
                // y = -(a*xi + b)/2; sign(y - beta) = -sign(2*beta + a*xi + b).
                let sv = self.vertex_sign(ridx, bound);
                (-(sv as i32)).cmp(&0)
            }
            YKind::QuadUpper => {
                let sq = self.fiber_sign(ridx, bound);
                let sv = self.vertex_sign(ridx, bound);
                match (sq, sv) {
                    (-1, _) => Ordering::Greater,
                    (0, 1) => Ordering::Equal,
                    (0, -1) => Ordering::Greater,
                    (1, 1) => Ordering::Less,
                    (1, -1) => Ordering::Greater,
                    _ => unreachable!("vertex cannot be a fiber root when disc > 0"),
                }
            }
            YKind::QuadLower => {
                let sq = self.fiber_sign(ridx, bound);
                let sv = self.vertex_sign(ridx, bound);
                match (sq, sv) {
                    (-1, _) => Ordering::Less,
                    (0, -1) => Ordering::Equal,
                    (0, 1) => Ordering::Less,
                    (1, 1) => Ordering::Less,
                    (1, -1) => Ordering::Greater,
                    _ => unreachable!("vertex cannot be a fiber root when disc > 0"),
                }
            }
        }
    }

    /// Sign at root ridx of the curve fiber evaluated at y = beta:
    /// beta^2 + (a*x + b)*beta - (x^3 + c*x^2 + d*x + e).
    fn fiber_sign(&mut self, ridx: usize, beta: &BigRational) -> i8 {
        let c = &self.curve;
        let poly = UniPoly::new(vec![
            beta * beta + &c.b * beta - &c.e,
            &c.a * beta - &c.d,
            -c.c.clone(),
            -BigRational::one(),
        ]);
        self.roots.sign_at(ridx, &poly)
    }

    /// Sign at root ridx of 2*beta + a*x + b (beta minus the fiber
    /// vertex, up to a positive factor).
    fn vertex_sign(&mut self, ridx: usize, beta: &BigRational) -> i8 {
        let c = &self.curve;
        let poly = UniPoly::new(vec![rat(2, 1) * beta + &c.b, c.a.clone()]);
        self.roots.sign_at(ridx, &poly)
    }

    /// Exact membership of point i in the closed box
    /// [x1, x2] x [y1, y2].
    pub fn point_in_closed_box(
        &mut self,
        i: usize,
        x1: &BigRational,
        x2: &BigRational,
        y1: &BigRational,
        y2: &BigRational,
    ) -> bool {
        self.cmp_x(i, x1) != Ordering::Less
            && self.cmp_x(i, x2) != Ordering::Greater
            && self.cmp_y(i, y1) != Ordering::Less
            && self.cmp_y(i, y2) != Ordering::Greater
    }
}
