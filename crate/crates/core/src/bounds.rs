//! The bound function `F(a, b, e, n, i)` and its specialisations.
//!
//! `F` is the coefficient of `binomial(n, i)` in `pi_i(D^i)`, written as the
//! product of three groupings:
//!
//! ```text
//!   a (a+1) ... (a+i-2)        (n+1) ... (n+a+b+e-1)           e!
//!   -------------------   *   -----------------------   *   -----------------------
//!   (b+1) ... (b+i-1)          (i+1) ... (i+a+b+e-1)        (n-i+1) ... (n-i+e)
//! ```
//!
//! The first grouping is empty when `i = 1` and the third when `e = 0`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::ShapeParams;
use crate::error::{Error, Result};
use crate::rat::Rat;

/// `prod_{k=lo}^{hi} k` as a rational; 1 when `lo > hi`.
fn rising(lo: i64, hi: i64) -> Rat {
    (lo..=hi).map(Rat::from).product()
}

pub fn f(a: i64, b: i64, e: i64, n: i64, i: i64) -> Result<Rat> {
    if a < 2 || b < 0 || e < 0 || n < 3 || i < 1 || i > n {
        return Err(Error::OutOfDomain(format!(
            "F({a},{b},{e},{n},{i}) needs a >= 2, b >= 0, e >= 0, n >= 3, 1 <= i <= n"
        )));
    }
    let first = rising(a, a + i - 2) / rising(b + 1, b + i - 1);
    let s = a + b + e - 1;
    let middle = rising(n + 1, n + s) / rising(i + 1, i + s);
    let third = rising(1, e) / rising(n - i + 1, n - i + e);
    Ok(first * middle * third)
}

pub fn f_params(p: &ShapeParams) -> Result<Rat> {
    f(p.a, p.b, p.e, p.n, p.i)
}

/// `G(b, e, i) = F(b+e+1, b, e, 2i-1, i)`, for `b + e >= 1` and `i >= 2`.
pub fn g(b: i64, e: i64, i: i64) -> Result<Rat> {
    if b < 0 || e < 0 || b + e < 1 || i < 2 {
        return Err(Error::OutOfDomain(format!(
            "G({b},{e},{i}) needs b, e >= 0, b + e >= 1, i >= 2"
        )));
    }
    f(b + e + 1, b, e, 2 * i - 1, i)
}

/// `G^1(e, n) = F(e+1, 0, e, n, 1)`, for `e >= 1` and `n >= 3`.
pub fn g1(e: i64, n: i64) -> Result<Rat> {
    if e < 1 || n < 3 {
        return Err(Error::OutOfDomain(format!("G1({e},{n}) needs e >= 1, n >= 3")));
    }
    f(e + 1, 0, e, n, 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    /// `F` is non-decreasing in `a`.
    Fa,
    /// `F` is non-decreasing in `n` when `n >= 2i - 1` and `b + e <= a - 1`.
    Fn,
    /// `F(a, 0, 0, n, i) >= 2`.
    Fbe0,
    /// `G` is non-decreasing in `i`.
    Gi,
    /// `G(b, e, 2) >= 2` when `b >= 2` or `e >= 2`.
    Gbe2,
    /// `G^1` is non-decreasing in `e`.
    G1e,
    /// `G^1(1, n) >= 2` exactly when `n^2 - 9n + 2 >= 0`.
    G1n9,
}

impl LemmaId {
    pub const ALL: [LemmaId; 7] = [
        LemmaId::Fa,
        LemmaId::Fn,
        LemmaId::Fbe0,
        LemmaId::Gi,
        LemmaId::Gbe2,
        LemmaId::G1e,
        LemmaId::G1n9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Fa => "Fa",
            LemmaId::Fn => "Fn",
            LemmaId::Fbe0 => "Fbe0",
            LemmaId::Gi => "Gi",
            LemmaId::Gbe2 => "Gbe2",
            LemmaId::G1e => "G1e",
            LemmaId::G1n9 => "G1n9",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::OutOfDomain(format!("unknown lemma {s:?}")))
    }
}

/// Inclusive parameter ranges for an exhaustive lemma check.
///
/// Points outside a lemma's own domain are skipped. With
/// `enforce_hypothesis` off, the extra hypotheses of `Fn` and `Gbe2` are
/// dropped, which turns the check into a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaGrid {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub e: (i64, i64),
    pub n: (i64, i64),
    pub i: (i64, i64),
    pub enforce_hypothesis: bool,
}

impl Default for LemmaGrid {
    fn default() -> Self {
        LemmaGrid {
            a: (2, 8),
            b: (0, 5),
            e: (0, 5),
            n: (3, 12),
            i: (1, 12),
            enforce_hypothesis: true,
        }
    }
}

impl LemmaGrid {
    /// The default grid, widened to `n in [3, 50]` for `G1n9`.
    pub fn default_for(lemma: LemmaId) -> Self {
        match lemma {
            LemmaId::G1n9 => LemmaGrid { n: (3, 50), ..Self::default() },
            _ => Self::default(),
        }
    }
}

fn span((lo, hi): (i64, i64)) -> std::ops::RangeInclusive<i64> {
    lo..=hi
}

/// A grid point where the claimed `lhs <= rhs` failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaViolation {
    pub params: Vec<(String, i64)>,
    pub lhs: Rat,
    pub rhs: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma_id: LemmaId,
    pub grid: LemmaGrid,
    pub checked: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

type Point = Vec<(&'static str, i64)>;

fn grid_points(lemma: LemmaId, g: &LemmaGrid) -> Vec<Point> {
    let mut pts = Vec::new();
    match lemma {
        LemmaId::Fa | LemmaId::Fn => {
            for a in span(g.a) {
                for b in span(g.b) {
                    for e in span(g.e) {
                        for n in span(g.n) {
                            for i in span(g.i) {
                                if a < 2 || b < 0 || e < 0 || n < 3 || i < 1 || i > n {
                                    continue;
                                }
                                if lemma == LemmaId::Fn
                                    && g.enforce_hypothesis
                                    && (n < 2 * i - 1 || b + e > a - 1)
                                {
                                    continue;
                                }
                                pts.push(vec![("a", a), ("b", b), ("e", e), ("n", n), ("i", i)]);
                            }
                        }
                    }
                }
            }
        }
        LemmaId::Fbe0 => {
            for a in span(g.a).filter(|&a| a >= 2) {
                for n in span(g.n).filter(|&n| n >= 3) {
                    for i in span(g.i).filter(|&i| i >= 1 && i <= n) {
                        pts.push(vec![("a", a), ("n", n), ("i", i)]);
                    }
                }
            }
        }
        LemmaId::Gi | LemmaId::Gbe2 => {
            for b in span(g.b).filter(|&b| b >= 0) {
                for e in span(g.e).filter(|&e| e >= 0 && b + e >= 1) {
                    if lemma == LemmaId::Gbe2 {
                        if !g.enforce_hypothesis || b >= 2 || e >= 2 {
                            pts.push(vec![("b", b), ("e", e)]);
                        }
                        continue;
                    }
                    for i in span(g.i).filter(|&i| i >= 2) {
                        pts.push(vec![("b", b), ("e", e), ("i", i)]);
                    }
                }
            }
        }
        LemmaId::G1e => {
            for e in span(g.e).filter(|&e| e >= 1) {
                for n in span(g.n).filter(|&n| n >= 3) {
                    pts.push(vec![("e", e), ("n", n)]);
                }
            }
        }
        LemmaId::G1n9 => {
            for n in span(g.n).filter(|&n| n >= 3) {
                pts.push(vec![("n", n)]);
            }
        }
    }
    pts
}

/// Evaluates one grid point; `Some((lhs, rhs))` when the claimed `lhs <= rhs` fails.
///
/// For `G1n9` below the threshold the claim is the strict `G^1(1, n) < 2`,
/// reported as `(G^1(1, n), 2)` when it fails.
fn violation(lemma: LemmaId, p: &Point) -> Option<(Rat, Rat)> {
    let v = |name: &str| p.iter().find(|(k, _)| *k == name).unwrap().1;
    let two = Rat::from(2);
    let ok = "grid points lie in the domain";
    let (lhs, rhs) = match lemma {
        LemmaId::Fa => {
            let (a, b, e, n, i) = (v("a"), v("b"), v("e"), v("n"), v("i"));
            (f(a, b, e, n, i).expect(ok), f(a + 1, b, e, n, i).expect(ok))
        }
        LemmaId::Fn => {
            let (a, b, e, n, i) = (v("a"), v("b"), v("e"), v("n"), v("i"));
            (f(a, b, e, n, i).expect(ok), f(a, b, e, n + 1, i).expect(ok))
        }
        LemmaId::Fbe0 => (two, f(v("a"), 0, 0, v("n"), v("i")).expect(ok)),
        LemmaId::Gi => {
            let (b, e, i) = (v("b"), v("e"), v("i"));
            (g(b, e, i).expect(ok), g(b, e, i + 1).expect(ok))
        }
        LemmaId::Gbe2 => (two, g(v("b"), v("e"), 2).expect(ok)),
        LemmaId::G1e => {
            let (e, n) = (v("e"), v("n"));
            (g1(e, n).expect(ok), g1(e + 1, n).expect(ok))
        }
        LemmaId::G1n9 => {
            let n = v("n");
            let value = g1(1, n).expect(ok);
            if n * n - 9 * n + 2 >= 0 {
                (two, value)
            } else {
                return (value >= two).then_some((value, two));
            }
        }
    };
    (lhs > rhs).then_some((lhs, rhs))
}

/// Exhaustive exact check of one lemma over the grid.
///
/// Points are evaluated in parallel but reported in lexicographic order.
pub fn check_lemma(lemma: LemmaId, grid: &LemmaGrid) -> LemmaReport {
    let points = grid_points(lemma, grid);
    let violations: Vec<LemmaViolation> = points
        .par_iter()
        .filter_map(|p| {
            violation(lemma, p).map(|(lhs, rhs)| LemmaViolation {
                params: p.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                lhs,
                rhs,
            })
        })
        .collect();
    LemmaReport {
        lemma_id: lemma,
        grid: *grid,
        checked: points.len(),
        violations,
    }
}

/// `(F(2,0,2,5,3), F(2,0,2,6,3))`: `F` drops from `n = 5` to `n = 6` once the
/// regularity bound is relaxed to `2a - 1`.
pub fn fn_sharpness() -> (Rat, Rat) {
    let at5 = f(2, 0, 2, 5, 3).expect("in domain");
    let at6 = f(2, 0, 2, 6, 3).expect("in domain");
    assert!(at5 > at6, "F(2,0,2,5,3) must exceed F(2,0,2,6,3)");
    (at5, at6)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputationEntry {
    /// Which numbered computation (1-4) the value belongs to.
    pub computation: u8,
    pub label: String,
    pub value: Rat,
    /// The rounded figure as printed, when one was printed.
    pub display: Option<String>,
    pub at_least_two: bool,
}

impl ComputationEntry {
    /// Whether `value` rounds (half away from zero, two places) to `display`.
    pub fn display_matches(&self) -> Option<bool> {
        let shown = Rat::from_decimal_str(self.display.as_deref()?).ok()?;
        Some(self.value.round_to(2) == shown)
    }

    pub fn decimal(&self) -> String {
        self.display
            .clone()
            .unwrap_or_else(|| self.value.to_decimal_string(2))
    }
}

/// Every value used by the four numbered direct computations.
pub fn computation_table() -> Vec<ComputationEntry> {
    let mut out = Vec::new();
    let mut push = |computation: u8, label: String, value: Rat, display: Option<&str>| {
        let at_least_two = value >= 2;
        out.push(ComputationEntry {
            computation,
            label,
            value,
            display: display.map(str::to_string),
            at_least_two,
        });
    };
    let ok = "table entries lie in the domain";
    for (b, e, i, shown) in [(1, 0, 3, "2.1"), (0, 1, 3, "2.1"), (1, 1, 3, "2.4")] {
        push(1, format!("G({b},{e},{i})"), g(b, e, i).expect(ok), Some(shown));
    }
    for (a, b, e, n, i, shown) in [
        (3, 1, 1, 4, 2, "2.33"),
        (2, 1, 0, 4, 2, "2.5"),
        (2, 0, 1, 7, 2, "2"),
    ] {
        push(2, format!("F({a},{b},{e},{n},{i})"), f(a, b, e, n, i).expect(ok), Some(shown));
    }
    push(3, "F(3,1,1,6,2)".into(), f(3, 1, 1, 6, 2).expect(ok), Some("4.2"));
    push(3, "G^1(2,6)".into(), g1(2, 6).expect(ok), Some("2"));
    for i in 1..=4 {
        for (b, e) in [(1, 0), (0, 1)] {
            push(4, format!("F(3,{b},{e},6,{i})"), f(3, b, e, 6, i).expect(ok), None);
        }
    }
    out
}
