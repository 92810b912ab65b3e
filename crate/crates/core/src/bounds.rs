//! Exact evaluation of the crossing-number inequalities: the multigraph
//! crossing lower bound, geometric upper bounds, the induced cap on the
//! length of a simultaneous arithmetic progression on a Weierstrass
//! curve (k <= 4319), and the degree-dependent constants for general
//! curves. Every decision is made on cleared-denominator big integers;
//! cube roots and fractional powers appear only as integer brackets.

use crate::rat::{nth_root_bracket, render};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::collections::BTreeMap;

/// Uniform result record: exact inputs, the decision, and any derived
/// exact quantities, keyed for serialization.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub variant: String,
    pub inputs: BTreeMap<String, String>,
    /// Whether the crossing inequality's hypothesis e > 7.5mn holds;
    /// None for variants without an applicability question.
    pub applicability: Option<bool>,
    pub lower_bound: Option<BigRational>,
    pub upper_bound: Option<BigInt>,
    pub max_k: Option<u64>,
    pub constants: BTreeMap<String, String>,
}

impl BoundReport {
    fn new(variant: &str) -> Self {
        BoundReport {
            variant: variant.to_string(),
            inputs: BTreeMap::new(),
            applicability: None,
            lower_bound: None,
            upper_bound: None,
            max_k: None,
            constants: BTreeMap::new(),
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    fn constant(mut self, key: &str, value: impl ToString) -> Self {
        self.constants.insert(key.to_string(), value.to_string());
        self
    }
}

fn bi(v: u64) -> BigInt {
    BigInt::from(v)
}

/// cr(G) >= e^3 / (33.75 m n^2) for a multigraph with n vertices,
/// e edges, and at most m edges per vertex pair, valid when
/// e > 7.5 m n. Inapplicability is a report state, not an error.
pub fn crossing_lower_bound(n: u64, e: u64, m: u64) -> BoundReport {
    let mut report = BoundReport::new("crossing_lower")
        .input("n", n)
        .input("e", e)
        .input("m", m);
    // e > 7.5 m n, cleared to 2e > 15 m n.
    let applicable = bi(2) * bi(e) > bi(15) * bi(m) * bi(n);
    report.applicability = Some(applicable);
    if applicable {
        // 33.75 = 135/4 exactly.
        let num = bi(4) * bi(e).pow(3);
        let den = bi(135) * bi(m) * bi(n) * bi(n);
        report.lower_bound = Some(BigRational::new(num, den));
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveClass {
    Elliptic,
    General { degree: u32 },
}

/// Geometric crossing upper bound for the translate graph: pairwise
/// translate intersections plus, for general curves, per-translate
/// self-intersections.
pub fn crossing_upper_bound(k: u64, class: CurveClass) -> Result<BoundReport> {
    let pairs = bi(k) * bi(k) * (bi(k) * bi(k) - BigInt::one()) / bi(2);
    match class {
        CurveClass::Elliptic => {
            let mut report = BoundReport::new("crossing_upper_elliptic").input("k", k);
            report.upper_bound = Some(bi(4) * pairs);
            Ok(report)
        }
        CurveClass::General { degree } => {
            if degree < 2 {
                return Err(Error::DegreeTooSmall(degree, 2));
            }
            let d = bi(degree as u64);
            let bound = &d * &d * &pairs
                + bi(k) * bi(k) * (&d - BigInt::one()) * (&d - bi(2)) / bi(2);
            // Relaxed form d^2 k^4 / 2; the exact bound never exceeds it.
            let relaxed = BigRational::new(&d * &d * bi(k).pow(4), bi(2));
            debug_assert!(BigRational::from_integer(bound.clone()) <= relaxed);
            let mut report = BoundReport::new("crossing_upper_general")
                .input("k", k)
                .input("d", degree)
                .constant("relaxation_half_d2_k4", render(&relaxed));
            report.upper_bound = Some(bound);
            Ok(report)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveVariant {
    /// Edge count e = k^3 (the t = 1 case, the smaller of the two);
    /// the inequality chain's main line.
    T1,
    /// Edge count e = k^2 (k + 1) (t != 1).
    TNot1,
}

/// The crossing chain caps k: lower bound e^3/(135 n^2) with m = 4 and
/// n = 4k^2+1 must not exceed the geometric upper bound 2k^2(k^2-1).
/// Holds at k iff (cleared form, T1) k^9 <= 270 k^2 (k^2-1) (4k^2+1)^2.
fn chain_holds(k: u64, variant: SolveVariant) -> bool {
    let k = bi(k);
    let n = bi(4) * &k * &k + BigInt::one();
    let rhs = bi(270) * (&k * &k - BigInt::one()) * &n * &n;
    match variant {
        // k^9 <= 270 k^2 (k^2-1) n^2, both sides divided by k^2.
        SolveVariant::T1 => k.pow(7) <= rhs,
        // k^6 (k+1)^3 <= 270 k^2 (k^2-1) n^2, divided by k^2.
        SolveVariant::TNot1 => k.pow(4) * (&k + BigInt::one()).pow(3) <= rhs,
    }
}

/// Largest k for which the combined crossing inequalities still hold;
/// one past it is a certified violation. The T1 chain yields 4319.
pub fn solve_max_k_elliptic(variant: SolveVariant) -> BoundReport {
    let name = match variant {
        SolveVariant::T1 => "solve_max_k_elliptic_t1",
        SolveVariant::TNot1 => "solve_max_k_elliptic_tn1",
    };
    let mut k = 2u64;
    while chain_holds(k + 1, variant) {
        k += 1;
    }
    let (lhs_at, rhs_at) = chain_sides(k, variant);
    let (lhs_next, rhs_next) = chain_sides(k + 1, variant);
    debug_assert!(lhs_at <= rhs_at && lhs_next > rhs_next);
    let mut report = BoundReport::new(name)
        .constant("holds_lhs", lhs_at)
        .constant("holds_rhs", rhs_at)
        .constant("violates_lhs", lhs_next)
        .constant("violates_rhs", rhs_next)
        .constant("violated_at", k + 1);
    report.max_k = Some(k);
    report
}

fn chain_sides(k: u64, variant: SolveVariant) -> (BigInt, BigInt) {
    let kb = bi(k);
    let n = bi(4) * &kb * &kb + BigInt::one();
    let rhs = bi(270) * (&kb * &kb - BigInt::one()) * &n * &n;
    let lhs = match variant {
        SolveVariant::T1 => kb.pow(7),
        SolveVariant::TNot1 => kb.pow(4) * (&kb + BigInt::one()).pow(3),
    };
    (lhs, rhs)
}

/// Smallest k whose edge count clears the crossing inequality's
/// hypothesis e > 30n with n = 4k^2+1. Reports the computed threshold
/// next to the stated one (15 for t != 1, 16 for t = 1) without
/// asserting they agree.
pub fn applicability_threshold(variant: SolveVariant) -> BoundReport {
    let (name, stated) = match variant {
        SolveVariant::T1 => ("applicability_threshold_t1", 16u64),
        SolveVariant::TNot1 => ("applicability_threshold_tn1", 15u64),
    };
    let sides = |k: u64| -> (BigInt, BigInt) {
        let kb = bi(k);
        let e = match variant {
            SolveVariant::T1 => kb.pow(3),
            SolveVariant::TNot1 => &kb * &kb * (&kb + BigInt::one()),
        };
        let n = bi(4) * &kb * &kb + BigInt::one();
        (e, bi(30) * n)
    };
    let holds = |k: u64| -> bool {
        let (e, bound) = sides(k);
        e > bound
    };
    let mut k = 1u64;
    while !holds(k) {
        k += 1;
    }
    let (e_at, bound_at) = sides(k);
    let (e_below, bound_below) = sides(k - 1);
    debug_assert!(e_at > bound_at && e_below <= bound_below);
    let mut report = BoundReport::new(name)
        .constant("computed_min_k", k)
        .constant("stated_exceeds", stated)
        .constant("holds_e", e_at)
        .constant("holds_bound", bound_at)
        .constant("below_e", e_below)
        .constant("below_bound", bound_below);
    report.applicability = Some(true);
    report.max_k = Some(k);
    report
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConstantsMode {
    Irreducible,
    Reducible,
    /// Lattice-point bound c * N^(2/3) for a convex arc of length N;
    /// the constant c is caller-supplied.
    Jarnik { c: BigRational, n: u64 },
}

/// Degree-dependent constants for curves without linear factors:
/// C1 = 2160 (= 2^6 * 135/4), C = cbrt(C1 d^4) for irreducible curves,
/// 13 d^(7/3) for reducible ones, each certified by an integer cube
/// bracket around the exact cube.
pub fn general_constants(degree: u32, mode: ConstantsMode) -> Result<BoundReport> {
    if degree < 2 {
        return Err(Error::DegreeTooSmall(degree, 2));
    }
    let d = BigUint::from(degree);
    let c1 = BigUint::from(2160u32);
    match mode {
        ConstantsMode::Irreducible => {
            let cube = &c1 * d.pow(4);
            let (lo, hi) = cube_bracket(&cube);
            let mut report = BoundReport::new("general_constants_irreducible")
                .input("d", degree)
                .constant("C1", &c1)
                .constant("C_cubed", &cube)
                .constant("C_floor", &lo)
                .constant("C_ceil", &hi)
                // With K = k the chain gives k < C1 d^4 outright.
                .constant("k_bound_when_K_equals_k", &cube);
            report.upper_bound = Some(BigInt::from(cube));
            Ok(report)
        }
        ConstantsMode::Reducible => {
            let cube = BigUint::from(13u32).pow(3) * d.pow(7);
            let (lo, hi) = cube_bracket(&cube);
            let mut report = BoundReport::new("general_constants_reducible")
                .input("d", degree)
                .constant("C1", &c1)
                .constant("C_cubed", &cube)
                .constant("C_floor", &lo)
                .constant("C_ceil", &hi);
            report.upper_bound = Some(BigInt::from(cube));
            Ok(report)
        }
        ConstantsMode::Jarnik { c, n } => {
            if !c.is_positive() || n == 0 {
                return Err(Error::DegenerateInput(
                    "lattice bound needs c > 0 and N > 0".into(),
                ));
            }
            // floor/ceil of N^(2/3) via the cube bracket of N^2.
            let n2 = BigUint::from(n) * BigUint::from(n);
            let (lo, hi) = cube_bracket(&n2);
            let lo_bound = &c * BigRational::from_integer(BigInt::from(lo.clone()));
            let hi_bound = &c * BigRational::from_integer(BigInt::from(hi.clone()));
            let report = BoundReport::new("jarnik_lattice_bound")
                .input("c", render(&c))
                .input("N", n)
                .constant("n23_floor", &lo)
                .constant("n23_ceil", &hi)
                .constant("bound_lower", render(&lo_bound))
                .constant("bound_upper", render(&hi_bound));
            Ok(report)
        }
    }
}

fn cube_bracket(v: &BigUint) -> (BigUint, BigUint) {
    nth_root_bracket(v, 3)
}

/// Comparison of counts against a C * k^(2/3) budget without roots:
/// count^3 <= C^3 * k^2 in integers.
pub fn within_two_thirds_budget(count: u64, k: u64, c_ceil: u64) -> bool {
    bi(count).pow(3) <= bi(c_ceil).pow(3) * bi(k) * bi(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i;
    use num_traits::Zero;

    #[test]
    fn lower_bound_applicability_gate() {
        let r = crossing_lower_bound(100, 10, 1);
        assert_eq!(r.applicability, Some(false));
        assert!(r.lower_bound.is_none());
        // Boundary: e = 7.5 m n exactly is not enough.
        let r = crossing_lower_bound(2, 15, 1);
        assert_eq!(r.applicability, Some(false));
        let r = crossing_lower_bound(2, 16, 1);
        assert_eq!(r.applicability, Some(true));
    }

    #[test]
    fn lower_bound_exact_value_at_k200() {
        // n = 4k^2+1, e = k^3, m = 4 at k = 200.
        let k = 200u64;
        let n = 4 * k * k + 1;
        let e = k * k * k;
        let r = crossing_lower_bound(n, e, 4);
        assert_eq!(r.applicability, Some(true));
        let expect = BigRational::new(
            BigInt::from(4u32) * BigInt::from(e).pow(3),
            BigInt::from(135u32) * BigInt::from(4u32) * BigInt::from(n) * BigInt::from(n),
        );
        assert_eq!(r.lower_bound.unwrap(), expect);
    }

    #[test]
    fn lower_bound_m1_matches_simple_graph_form() {
        // With m = 1 the bound is e^3 / (33.75 n^2).
        let r = crossing_lower_bound(50, 1000, 1);
        let direct = BigRational::new(
            BigInt::from(1000u32).pow(3) * BigInt::from(4u32),
            BigInt::from(135u32) * BigInt::from(2500u32),
        );
        assert_eq!(r.lower_bound.unwrap(), direct);
    }

    #[test]
    fn lower_bound_monotonicity() {
        let base = crossing_lower_bound(100, 100_000, 2).lower_bound.unwrap();
        assert!(crossing_lower_bound(100, 100_001, 2).lower_bound.unwrap() > base);
        assert!(crossing_lower_bound(101, 100_000, 2).lower_bound.unwrap() < base);
        assert!(crossing_lower_bound(100, 100_000, 3).lower_bound.unwrap() < base);
    }

    #[test]
    fn upper_bound_elliptic() {
        let r = crossing_upper_bound(6, CurveClass::Elliptic).unwrap();
        assert_eq!(r.upper_bound.unwrap(), BigInt::from(2520u32));
        let r = crossing_upper_bound(1, CurveClass::Elliptic).unwrap();
        assert!(r.upper_bound.unwrap().is_zero());
    }

    #[test]
    fn upper_bound_general() {
        let r = crossing_upper_bound(10, CurveClass::General { degree: 3 }).unwrap();
        // 9 * C(100, 2) + 100 * 1 = 44550 + 100.
        assert_eq!(r.upper_bound.clone().unwrap(), BigInt::from(44650u32));
        // Closed form (k^2/2)(d^2 k^2 - 3d + 2).
        let closed = BigInt::from(100u32) * BigInt::from(9 * 100 - 9 + 2) / BigInt::from(2u32);
        assert_eq!(r.upper_bound.unwrap(), closed);
        assert!(matches!(
            crossing_upper_bound(5, CurveClass::General { degree: 1 }),
            Err(Error::DegreeTooSmall(1, 2))
        ));
    }

    #[test]
    fn max_k_is_4319() {
        let r = solve_max_k_elliptic(SolveVariant::T1);
        assert_eq!(r.max_k, Some(4319));
        // Independent certificate: the cleared inequality holds at 4319
        // and fails at 4320.
        let eval = |k: u64| -> (BigInt, BigInt) {
            let k = BigInt::from(k);
            let n = BigInt::from(4u32) * &k * &k + BigInt::one();
            (
                k.pow(9),
                BigInt::from(270u32) * &k * &k * (&k * &k - BigInt::one()) * &n * &n,
            )
        };
        let (l, r4319) = eval(4319);
        assert!(l <= r4319);
        let (l, r4320) = eval(4320);
        assert!(l > r4320);
        let (l, r100) = eval(100);
        assert!(l <= r100);
    }

    #[test]
    fn max_k_tn1_certificate() {
        let r = solve_max_k_elliptic(SolveVariant::TNot1);
        let k = r.max_k.unwrap();
        assert!(chain_holds(k, SolveVariant::TNot1));
        assert!(!chain_holds(k + 1, SolveVariant::TNot1));
        // The larger edge count tolerates slightly fewer k.
        assert!(k <= 4319);
        assert!(k > 4000);
    }

    #[test]
    fn applicability_thresholds_reported_not_reconciled() {
        let r = applicability_threshold(SolveVariant::TNot1);
        assert_eq!(r.constants["computed_min_k"], "120");
        assert_eq!(r.constants["stated_exceeds"], "15");
        // 120^2 * 121 vs 30 (4 * 120^2 + 1); one below, both flip.
        assert_eq!(r.constants["holds_e"], "1742400");
        assert_eq!(r.constants["holds_bound"], "1728030");
        assert_eq!(r.constants["below_e"], "1699320");
        assert_eq!(r.constants["below_bound"], "1699350");
        let r = applicability_threshold(SolveVariant::T1);
        assert_eq!(r.constants["computed_min_k"], "121");
        assert_eq!(r.constants["stated_exceeds"], "16");
        assert_eq!(r.constants["below_e"], "1728000");
        assert_eq!(r.constants["below_bound"], "1728030");
    }

    #[test]
    fn applicability_predicate_single_crossover() {
        for variant in [SolveVariant::T1, SolveVariant::TNot1] {
            let holds = |k: u64| {
                let kb = BigInt::from(k);
                let e = match variant {
                    SolveVariant::T1 => kb.pow(3),
                    SolveVariant::TNot1 => &kb * &kb * (&kb + BigInt::one()),
                };
                e > BigInt::from(30u32) * (BigInt::from(4u32) * BigInt::from(k) * BigInt::from(k) + BigInt::one())
            };
            let threshold = applicability_threshold(variant).max_k.unwrap();
            for k in 1..=200 {
                assert_eq!(holds(k), k >= threshold, "k = {}", k);
            }
        }
    }

    #[test]
    fn constants_irreducible_cubes() {
        let r = general_constants(3, ConstantsMode::Irreducible).unwrap();
        assert_eq!(r.constants["C1"], "2160");
        assert_eq!(r.constants["C_cubed"], "174960");
        assert_eq!(r.constants["C_floor"], "55");
        assert_eq!(r.constants["C_ceil"], "56");
        assert_eq!(r.constants["k_bound_when_K_equals_k"], "174960");
        let r = general_constants(2, ConstantsMode::Irreducible).unwrap();
        // 32^3 = 32768 <= 34560 < 35937 = 33^3.
        assert_eq!(r.constants["C_cubed"], "34560");
        assert_eq!(r.constants["C_floor"], "32");
        assert_eq!(r.constants["C_ceil"], "33");
    }

    #[test]
    fn constants_reducible_bracket_is_168_169() {
        let r = general_constants(3, ConstantsMode::Reducible).unwrap();
        // 13^3 * 3^7 = 4804839; 168^3 < 4804839 <= 169^3, so the
        // ceiling certifies that C = 169 suffices.
        assert_eq!(r.constants["C_cubed"], "4804839");
        assert_eq!(r.constants["C_floor"], "168");
        assert_eq!(r.constants["C_ceil"], "169");
        let cube = BigUint::from(4804839u64);
        assert!(BigUint::from(168u32).pow(3) < cube);
        assert!(cube <= BigUint::from(169u32).pow(3));
    }

    #[test]
    fn jarnik_bracket() {
        let r = general_constants(
            2,
            ConstantsMode::Jarnik {
                c: rat_i(1),
                n: 1000,
            },
        )
        .unwrap();
        // 1000^2 is the cube of 100 exactly.
        assert_eq!(r.constants["n23_floor"], "100");
        assert_eq!(r.constants["n23_ceil"], "100");
        let r = general_constants(2, ConstantsMode::Jarnik { c: rat_i(3), n: 10 }).unwrap();
        assert_eq!(r.constants["n23_floor"], "4");
        assert_eq!(r.constants["n23_ceil"], "5");
        assert_eq!(r.constants["bound_lower"], "12");
        assert_eq!(r.constants["bound_upper"], "15");
    }

    #[test]
    fn two_thirds_budget_comparison() {
        // 33^3 k^2 budget at k = 4096: counts up to 33 * 256 pass.
        assert!(within_two_thirds_budget(33 * 256, 4096, 33));
        assert!(!within_two_thirds_budget(33 * 256 + 1, 4096, 33));
    }
}
