//! Exhaustive desk-scale checks of the pure-diagram bounds.
//!
//! Degree sequences are walked through their shift vectors
//! `s_k = d_k - k`, which are non-decreasing. With `a = d_1` fixed the
//! hypothesis `reg(D) <= 2a - 2` is just the cap `s_n <= 2a - 2`, so the
//! search space for a given `(n, a)` is the set of non-decreasing words in
//! `[a - 1, 2a - 2]` starting with `a - 1`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{binomial, pi, pi_all, sum_pi, DegreeSequence};
use crate::error::{Error, Result};
use crate::rat::Rat;

/// Which search space to walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n_min: usize,
    pub n_max: usize,
    /// Smallest `d_1` considered; 2 under the standing hypothesis.
    pub a_min: i64,
    pub a_max: i64,
    /// Use `reg(D) <= 2 d_1 - 3` instead of `2 d_1 - 2`.
    pub strict: bool,
}

impl EnumSpec {
    pub fn new(n_min: usize, n_max: usize, a_max: i64) -> Result<Self> {
        let spec = EnumSpec { n_min, n_max, a_min: 2, a_max, strict: false };
        spec.validate()?;
        Ok(spec)
    }

    pub fn single(n: usize, a_max: i64) -> Result<Self> {
        Self::new(n, n, a_max)
    }

    /// Desk-scale default cap on `d_1`: 8 up to `n = 9`, 6 beyond.
    pub fn default_a_max(n: usize) -> i64 {
        if n <= 9 {
            8
        } else {
            6
        }
    }

    /// Allows `d_1 >= 1`, dropping the `d_1 >= 2` hypothesis. Used only for
    /// negative controls.
    pub fn relaxed(mut self, a_min: i64) -> Self {
        self.a_min = a_min;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min < 3 || self.n_min > self.n_max {
            return Err(Error::OutOfDomain(format!(
                "n range {}..={} must satisfy 3 <= n_min <= n_max",
                self.n_min, self.n_max
            )));
        }
        if self.a_min < 1 || self.a_max < self.a_min {
            return Err(Error::OutOfDomain(format!(
                "d_1 range {}..={} is empty or below 1",
                self.a_min, self.a_max
            )));
        }
        Ok(())
    }

    fn reg_cap(&self, a: i64) -> i64 {
        if self.strict {
            2 * a - 3
        } else {
            2 * a - 2
        }
    }

    /// `d_1 >= a_min` and `reg(D) <= 2 d_1 - 2` (or `- 3`).
    pub fn admits(&self, d: &DegreeSequence) -> bool {
        let a = d.first_syzygy_degree();
        (self.n_min..=self.n_max).contains(&d.n())
            && (self.a_min..=self.a_max).contains(&a)
            && d.regularity() <= self.reg_cap(a)
    }
}

/// Streams every admissible sequence once, ordered by `n` and then by shift vector.
pub fn enumerate(spec: &EnumSpec) -> Result<Enumeration> {
    spec.validate()?;
    Ok(Enumeration {
        spec: *spec,
        n: spec.n_min,
        a: spec.a_min,
        shifts: None,
    })
}

/// Iterator returned by [`enumerate`].
pub struct Enumeration {
    spec: EnumSpec,
    n: usize,
    a: i64,
    shifts: Option<Vec<i64>>,
}

impl Enumeration {
    /// First word for the current `(n, a)`, if the cap leaves room for one.
    fn start(&self) -> Option<Vec<i64>> {
        let lo = self.a - 1;
        (self.spec.reg_cap(self.a) >= lo).then(|| vec![lo; self.n])
    }

    /// Moves to the next `(n, a)` pair; false once past `n_max`.
    fn next_block(&mut self) -> bool {
        if self.a < self.spec.a_max {
            self.a += 1;
        } else {
            self.a = self.spec.a_min;
            self.n += 1;
        }
        self.n <= self.spec.n_max
    }

    fn advance(&self, s: &mut [i64]) -> bool {
        let cap = self.spec.reg_cap(self.a);
        // s[0] = a - 1 is pinned
        match (1..s.len()).rev().find(|&k| s[k] < cap) {
            Some(k) => {
                let v = s[k] + 1;
                s[k..].iter_mut().for_each(|x| *x = v);
                true
            }
            None => false,
        }
    }
}

impl Iterator for Enumeration {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        if self.n > self.spec.n_max {
            return None;
        }
        loop {
            let next = match self.shifts.take() {
                Some(mut s) => self.advance(&mut s).then_some(s),
                None => self.start(),
            };
            match next {
                Some(s) => {
                    let d = DegreeSequence::from_shifts(&s).expect("non-decreasing shifts");
                    self.shifts = Some(s);
                    return Some(d);
                }
                None => {
                    if !self.next_block() {
                        return None;
                    }
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremId {
    /// `sum_i pi_i(D) >= 2^n + 2^(n-1)`.
    TotalBound,
    /// `pi_i(D) >= 2 binomial(n, i)` for `1 <= i <= ceil(n/2)`.
    HalfDouble,
    /// `pi_i(D) >= binomial(n, i)` for `1 <= i <= n`.
    ErmanBound,
    /// The excluded families for `n in {6, 7, 8}`, checked against the total bound.
    SpecialCases,
}

/// One checked inequality `lhs >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub degrees: DegreeSequence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub lhs: Rat,
    pub rhs: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem_id: TheoremId,
    pub spec: EnumSpec,
    /// Sequences actually tested (enumerated minus excluded).
    pub checked: usize,
    /// Cases with `lhs < rhs`.
    pub violations: Vec<CaseRecord>,
    /// Cases where the bound is met with equality.
    pub equalities: Vec<CaseRecord>,
    pub excluded: Vec<DegreeSequence>,
}

impl VerifyReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `n in {6,7,8}` and `(d_1, reg) in {(2,2), (3,3)}`: the sequences the
/// doubled-binomial bound does not cover.
pub fn is_excluded(d: &DegreeSequence) -> bool {
    let (n, a, reg) = (d.n(), d.first_syzygy_degree(), d.regularity());
    (6..=8).contains(&n) && ((a == 2 && reg == 2) || (a == 3 && reg == 3))
}

pub fn total_bound_target(n: usize) -> Rat {
    Rat::from(3u64 << (n - 1))
}

enum Outcome {
    Checked { violations: Vec<CaseRecord>, equalities: Vec<CaseRecord> },
    Excluded(DegreeSequence),
}

fn run<F>(theorem_id: TheoremId, spec: &EnumSpec, exclude: bool, check: F) -> Result<VerifyReport>
where
    F: Fn(&DegreeSequence) -> Vec<CaseRecord> + Sync,
{
    let all: Vec<DegreeSequence> = enumerate(spec)?.collect();
    let outcomes: Vec<Outcome> = all
        .into_par_iter()
        .map(|d| {
            if exclude && is_excluded(&d) {
                return Outcome::Excluded(d);
            }
            let (violations, equalities) = check(&d)
                .into_iter()
                .filter(|c| c.lhs <= c.rhs)
                .partition(|c| c.lhs < c.rhs);
            Outcome::Checked { violations, equalities }
        })
        .collect();
    let mut report = VerifyReport {
        theorem_id,
        spec: *spec,
        checked: 0,
        violations: Vec::new(),
        equalities: Vec::new(),
        excluded: Vec::new(),
    };
    for o in outcomes {
        match o {
            Outcome::Checked { violations, equalities } => {
                report.checked += 1;
                report.violations.extend(violations);
                report.equalities.extend(equalities);
            }
            Outcome::Excluded(d) => report.excluded.push(d),
        }
    }
    Ok(report)
}

fn total_bound_case(d: &DegreeSequence) -> CaseRecord {
    CaseRecord {
        degrees: d.clone(),
        index: None,
        lhs: sum_pi(d),
        rhs: total_bound_target(d.n()),
    }
}

pub fn verify_total_bound(spec: &EnumSpec) -> Result<VerifyReport> {
    run(TheoremId::TotalBound, spec, false, |d| vec![total_bound_case(d)])
}

/// Cases `(D, i)` for `1 <= i <= ceil(n/2)` comparing `pi_i(D)` with `2 binomial(n, i)`.
pub fn half_double_cases(d: &DegreeSequence) -> Vec<CaseRecord> {
    let n = d.n();
    (1..=n.div_ceil(2))
        .map(|i| CaseRecord {
            degrees: d.clone(),
            index: Some(i),
            lhs: pi(d, i).expect("index in range"),
            rhs: Rat::from(binomial(n as u64, i as u64) * 2),
        })
        .collect()
}

pub fn verify_half_double(spec: &EnumSpec) -> Result<VerifyReport> {
    if spec.n_min < 6 {
        return Err(Error::OutOfDomain("the doubled bound is stated for n >= 6".into()));
    }
    run(TheoremId::HalfDouble, spec, true, half_double_cases)
}

/// `pi_i(D) >= binomial(n, i)` for `1 <= i <= n` (`i = 0` holds with equality by definition).
pub fn verify_erman_bound(spec: &EnumSpec) -> Result<VerifyReport> {
    run(TheoremId::ErmanBound, spec, false, |d| {
        let n = d.n() as u64;
        pi_all(d)
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(i, p)| CaseRecord {
                degrees: d.clone(),
                index: Some(i),
                lhs: p,
                rhs: Rat::from(binomial(n, i as u64)),
            })
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCasesReport {
    pub sequences: Vec<DegreeSequence>,
    /// `(n, d_1, count)` per family.
    pub buckets: Vec<(usize, i64, usize)>,
    /// The total bound checked on each excluded sequence.
    pub total_bound: VerifyReport,
    /// Observed `(D, i)` with `pi_i(D) < 2 binomial(n, i)`; informational only.
    pub half_double_failures: Vec<CaseRecord>,
}

/// Collects the excluded sequences for `n in {6, 7, 8}` and checks the total bound on each.
pub fn special_cases() -> SpecialCasesReport {
    let spec = EnumSpec { n_min: 6, n_max: 8, a_min: 2, a_max: 3, strict: false };
    let sequences: Vec<DegreeSequence> = enumerate(&spec)
        .expect("fixed spec is valid")
        .filter(is_excluded)
        .collect();
    let mut buckets = Vec::new();
    for n in 6..=8 {
        for a in 2..=3 {
            let count = sequences
                .iter()
                .filter(|d| d.n() == n && d.first_syzygy_degree() == a)
                .count();
            buckets.push((n, a, count));
        }
    }
    let mut total_bound = VerifyReport {
        theorem_id: TheoremId::SpecialCases,
        spec,
        checked: sequences.len(),
        violations: Vec::new(),
        equalities: Vec::new(),
        excluded: Vec::new(),
    };
    let mut half_double_failures = Vec::new();
    for d in &sequences {
        let case = total_bound_case(d);
        if case.lhs < case.rhs {
            total_bound.violations.push(case);
        } else if case.lhs == case.rhs {
            total_bound.equalities.push(case);
        }
        half_double_failures.extend(half_double_cases(d).into_iter().filter(|c| c.lhs < c.rhs));
    }
    SpecialCasesReport {
        sequences,
        buckets,
        total_bound,
        half_double_failures,
    }
}
