//! Degree sequences, pure diagrams and Betti diagrams.
//!
//! A degree sequence `0 = d_0 < d_1 < ... < d_n` determines a pure diagram
//! up to scale through the Herzog-Kühl equations
//!
//! ```text
//! pi_i(D) = (d_1 ... d_n) / prod_{j != i} |d_i - d_j|
//! ```
//!
//! Betti diagrams are keyed by `(i, j)` with `j` the internal degree. The
//! familiar row index `j - i` is only used when rendering.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// `binomial(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

/// A strictly increasing integer sequence starting at 0, of length at least 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    /// Validates and wraps `degrees`. Sequences that do not start at 0 are
    /// rejected, not shifted.
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(Error::InvalidDegreeSequence {
                index: degrees.len(),
                reason: "need at least two entries d_0 = 0 < d_1".into(),
            });
        }
        if degrees[0] != 0 {
            return Err(Error::InvalidDegreeSequence {
                index: 0,
                reason: format!("d_0 must be 0, got {}", degrees[0]),
            });
        }
        for (i, w) in degrees.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::InvalidDegreeSequence {
                    index: i + 1,
                    reason: format!("{} does not exceed previous entry {}", w[1], w[0]),
                });
            }
        }
        Ok(DegreeSequence(degrees))
    }

    /// Builds `{0, d_1, ..., d_n}` from the shift vector `(d_1 - 1, ..., d_n - n)`.
    pub fn from_shifts(shifts: &[i64]) -> Result<Self> {
        let mut degrees = Vec::with_capacity(shifts.len() + 1);
        degrees.push(0);
        degrees.extend(shifts.iter().enumerate().map(|(k, s)| s + k as i64 + 1));
        Self::new(degrees)
    }

    /// The linear sequence `{0, a, a+1, ..., a+n-1}`.
    pub fn linear(a: i64, n: usize) -> Result<Self> {
        let mut degrees = vec![0];
        degrees.extend((0..n as i64).map(|k| a + k));
        Self::new(degrees)
    }

    /// Homological length `n` (the sequence has `n + 1` entries).
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn d(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn first_syzygy_degree(&self) -> i64 {
        self.0[1]
    }

    /// `reg(D) = d_n - n`.
    pub fn regularity(&self) -> i64 {
        self.0[self.n()] - self.n() as i64
    }

    /// `(d_1 - 1, d_2 - 2, ..., d_n - n)`, non-decreasing for every valid sequence.
    pub fn shift_vector(&self) -> Vec<i64> {
        self.0[1..]
            .iter()
            .enumerate()
            .map(|(k, d)| d - k as i64 - 1)
            .collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.n() {
            Err(Error::IndexOutOfRange { index: i, max: self.n() })
        } else {
            Ok(())
        }
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `pi_i(D)` from the Herzog-Kühl equations.
///
/// Evaluated as the running product of `d_j / |d_j - d_i|` over `j >= 1,
/// j != i` (the `d_i` in the numerator cancels against `|d_i - d_0|`).
pub fn pi(d: &DegreeSequence, i: usize) -> Result<Rat> {
    d.check_index(i)?;
    if i == 0 {
        return Ok(Rat::one());
    }
    let di = d.d(i);
    let mut acc = Rat::one();
    for (j, &dj) in d.degrees().iter().enumerate().skip(1) {
        if j != i {
            acc *= Rat::new(dj, (dj - di).abs()).expect("distinct degrees");
        }
    }
    Ok(acc)
}

/// All of `pi_0(D), ..., pi_n(D)`.
pub fn pi_all(d: &DegreeSequence) -> Vec<Rat> {
    (0..=d.n()).map(|i| pi(d, i).expect("index in range")).collect()
}

pub fn regularity(d: &DegreeSequence) -> i64 {
    d.regularity()
}

/// `sum_{i=0}^n pi_i(D)`.
pub fn sum_pi(d: &DegreeSequence) -> Rat {
    pi_all(d).into_iter().sum()
}

/// Alternating moment `sum_i (-1)^i d_i^k pi_i(D)`; vanishes for `0 <= k < n`.
pub fn hk_moment(d: &DegreeSequence, k: u32) -> Rat {
    pi_all(d)
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let term = Rat::from(d.d(i)).pow(k) * p;
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// The modification `D^i`: early degrees packed onto the linear strand
/// starting at `a = d_1`, late degrees packed down against `d_n`, with `d_i`
/// left in place.
pub fn truncate(d: &DegreeSequence, i: usize) -> Result<DegreeSequence> {
    let n = d.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let a = d.first_syzygy_degree();
    let dn = d.d(n);
    let mut out = Vec::with_capacity(n + 1);
    out.push(0);
    out.extend((0..i as i64 - 1).map(|k| a + k));
    out.push(d.d(i));
    out.extend((0..(n - i) as i64).rev().map(|k| dn - k));
    DegreeSequence::new(out)
}

/// The five parameters `(a, b, e, n, i)` feeding the bound function `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeParams {
    /// First syzygy degree `d_1`.
    pub a: i64,
    /// Jump before position `i`: `d_i - a - i + 1`.
    pub b: i64,
    /// Jump after position `i`: `d_n - d_i - n + i`.
    pub e: i64,
    pub n: i64,
    pub i: i64,
}

impl ShapeParams {
    /// `R = a + b + e - 1`, the regularity of the sequence they came from.
    pub fn regularity(&self) -> i64 {
        self.a + self.b + self.e - 1
    }
}

pub fn shape_params(d: &DegreeSequence, i: usize) -> Result<ShapeParams> {
    let n = d.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let a = d.first_syzygy_degree();
    let (n, i, di, dn) = (n as i64, i as i64, d.d(i), d.d(n));
    Ok(ShapeParams {
        a,
        b: di - a - i + 1,
        e: dn - di - n + i,
        n,
        i,
    })
}

/// `lambda * B(D)`: entry `i` sits at homological index `i`, internal degree `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureDiagram {
    degree_sequence: DegreeSequence,
    multiplier: Rat,
    entries: Vec<Rat>,
}

impl PureDiagram {
    pub fn degree_sequence(&self) -> &DegreeSequence {
        &self.degree_sequence
    }

    pub fn multiplier(&self) -> &Rat {
        &self.multiplier
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    /// `(i, d_i, value)` triples.
    pub fn placements(&self) -> impl Iterator<Item = (usize, i64, &Rat)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, v)| (i, self.degree_sequence.d(i), v))
    }

    pub fn to_betti_diagram(&self) -> BettiDiagram {
        let mut b = BettiDiagram::new();
        for (i, j, v) in self.placements() {
            b.insert(i, j, v.clone()).expect("pure entries are positive");
        }
        b
    }
}

pub fn pure_diagram(d: &DegreeSequence, lambda: &Rat) -> Result<PureDiagram> {
    if !lambda.is_positive() {
        return Err(Error::OutOfDomain(format!("multiplier must be positive, got {lambda}")));
    }
    let entries = pi_all(d).into_iter().map(|p| p * lambda).collect();
    Ok(PureDiagram {
        degree_sequence: d.clone(),
        multiplier: lambda.clone(),
        entries,
    })
}

/// Sparse graded Betti table `(i, j) -> beta_{i,j} > 0`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BettiDiagram {
    entries: BTreeMap<(usize, i64), Rat>,
}

impl BettiDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets `beta_{i,j}`. Only strictly positive values may be stored.
    pub fn insert(&mut self, i: usize, j: i64, value: Rat) -> Result<()> {
        if !value.is_positive() {
            return Err(Error::InvalidDiagram(format!(
                "entry ({i},{j}) must be positive, got {value}"
            )));
        }
        self.entries.insert((i, j), value);
        Ok(())
    }

    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, Rat)>,
    {
        let mut b = Self::new();
        for (i, j, v) in entries {
            if b.entries.contains_key(&(i, j)) {
                return Err(Error::InvalidDiagram(format!("duplicate entry ({i},{j})")));
            }
            b.insert(i, j, v)?;
        }
        Ok(b)
    }

    pub fn get(&self, i: usize, j: i64) -> Option<&Rat> {
        self.entries.get(&(i, j))
    }

    pub fn remove(&mut self, i: usize, j: i64) -> Option<Rat> {
        self.entries.remove(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &Rat)> + '_ {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Internal degrees present in column `i`, ascending.
    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    pub fn max_column(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Total Betti number `beta_i = sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> Rat {
        self.column(i).map(|(_, v)| v).sum()
    }

    /// Largest row index `j - i` occurring.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }

    /// Adds `value` at `(i, j)`, dropping the entry if the result is exactly zero.
    pub(crate) fn add_at(&mut self, i: usize, j: i64, value: &Rat) {
        let slot = self.entries.entry((i, j)).or_insert_with(Rat::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Renders the table with column `i` and row `j - i`.
    pub fn render_rows(&self) -> String {
        if self.entries.is_empty() {
            return "(empty)\n".into();
        }
        let max_col = self.max_column().unwrap();
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap();
            let hi = self.regularity().unwrap();
            (lo..=hi).collect()
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=max_col).map(|i| i.to_string()));
        cells.push(header);
        for &r in &rows {
            let mut line = vec![format!("{r}:")];
            for i in 0..=max_col {
                line.push(match self.get(i, r + i as i64) {
                    Some(v) => v.to_string(),
                    None => "-".into(),
                });
            }
            cells.push(line);
        }
        let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        let mut out = String::new();
        for line in cells {
            let row: Vec<String> = line.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(row.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|((i, j), v)| (format!("({i},{j})"), v)))
            .finish()
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_malformed_sequences() {
        let err = DegreeSequence::new(vec![0, 2, 2, 5]).unwrap_err();
        assert!(matches!(err, Error::InvalidDegreeSequence { index: 2, .. }));
        let err = DegreeSequence::new(vec![1, 2, 3]).unwrap_err();
        assert!(matches!(err, Error::InvalidDegreeSequence { index: 0, .. }));
        assert!(DegreeSequence::new(vec![0]).is_err());
        assert!(DegreeSequence::new(vec![0, -1]).is_err());
    }

    #[test]
    fn pi_values_from_the_worked_example() {
        let d = ds(&[0, 2, 4, 5]);
        assert_eq!(pi(&d, 1).unwrap(), rat(10, 3));
        assert_eq!(pi(&d, 3).unwrap(), rat(8, 3));
        assert_eq!(pi(&d, 0).unwrap(), Rat::one());
        assert!(matches!(pi(&d, 4), Err(Error::IndexOutOfRange { index: 4, max: 3 })));
    }

    #[test]
    fn pure_diagram_entries() {
        let d = ds(&[0, 2, 4, 5]);
        let p = pure_diagram(&d, &Rat::from(3)).unwrap();
        let want: Vec<Rat> = [3, 10, 15, 8].into_iter().map(Rat::from).collect();
        assert_eq!(p.entries(), want.as_slice());
        let p = pure_diagram(&ds(&[0, 2, 3, 5]), &Rat::one()).unwrap();
        let want: Vec<Rat> = [1, 5, 5, 1].into_iter().map(Rat::from).collect();
        assert_eq!(p.entries(), want.as_slice());
        assert!(pure_diagram(&d, &Rat::zero()).is_err());
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&ds(&[0, 2, 3, 5])), 2);
        assert_eq!(regularity(&ds(&[0, 1, 2, 3, 4])), 0);
        assert_eq!(regularity(&ds(&[0, 3, 5, 6, 8, 10, 12, 15, 16, 19, 20])), 10);
    }

    #[test]
    fn sum_pi_examples() {
        assert_eq!(sum_pi(&ds(&[0, 1, 2, 3])), Rat::from(8));
        assert_eq!(sum_pi(&ds(&[0, 2, 3, 5])), Rat::from(12));
        assert_eq!(sum_pi(&ds(&[0, 2, 4, 5])), Rat::from(12));
    }

    #[test]
    fn truncation_examples() {
        let d = ds(&[0, 3, 5, 6, 8, 10, 12, 15, 16, 19, 20]);
        assert_eq!(truncate(&d, 5).unwrap(), ds(&[0, 3, 4, 5, 6, 10, 16, 17, 18, 19, 20]));
        let t = truncate(&d, 5).unwrap();
        assert_eq!(truncate(&t, 5).unwrap(), t);
        assert_eq!(truncate(&ds(&[0, 2, 3, 5]), 3).unwrap(), ds(&[0, 2, 3, 5]));
        assert!(truncate(&d, 0).is_err());
        assert!(truncate(&d, 11).is_err());
    }

    #[test]
    fn shape_params_examples() {
        let d = ds(&[0, 3, 5, 6, 8, 10, 12, 15, 16, 19, 20]);
        assert_eq!(
            shape_params(&d, 5).unwrap(),
            ShapeParams { a: 3, b: 3, e: 5, n: 10, i: 5 }
        );
        let p = shape_params(&ds(&[0, 2, 3, 4, 7, 8]), 3).unwrap();
        assert_eq!(p, ShapeParams { a: 2, b: 0, e: 2, n: 5, i: 3 });
        assert_eq!(p.regularity(), 3);
        let lin = DegreeSequence::linear(4, 7).unwrap();
        for i in 1..=7 {
            let p = shape_params(&lin, i).unwrap();
            assert_eq!((p.b, p.e), (0, 0));
        }
    }

    #[test]
    fn hk_moment_examples() {
        assert!(hk_moment(&ds(&[0, 2, 3, 5]), 0).is_zero());
        assert!(hk_moment(&ds(&[0, 2, 4, 5]), 1).is_zero());
        assert!(hk_moment(&ds(&[0, 1, 2, 3]), 2).is_zero());
        // k = n is not forced to vanish
        assert!(!hk_moment(&ds(&[0, 1, 2, 3]), 3).is_zero());
    }

    #[test]
    fn betti_diagram_rejects_nonpositive_and_duplicates() {
        let mut b = BettiDiagram::new();
        assert!(b.insert(0, 0, Rat::zero()).is_err());
        assert!(b.insert(0, 0, rat(-1, 2)).is_err());
        let dup = BettiDiagram::from_entries([(0, 0, Rat::one()), (0, 0, Rat::one())]);
        assert!(dup.is_err());
    }

    #[test]
    fn render_uses_row_convention() {
        let b = BettiDiagram::from_entries([
            (0, 0, Rat::one()),
            (1, 2, Rat::from(4)),
            (2, 3, Rat::from(2)),
            (2, 4, Rat::from(3)),
            (3, 5, Rat::from(2)),
        ])
        .unwrap();
        let text = b.render_rows();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        let words = |k: usize| lines[k].split_whitespace().collect::<Vec<_>>();
        assert_eq!(words(1), ["0:", "1", "-", "-", "-"]);
        assert_eq!(words(2), ["1:", "-", "4", "2", "-"]);
        assert_eq!(words(3), ["2:", "-", "-", "3", "2"]);
        assert_eq!(b.regularity(), Some(2));
        assert_eq!(b.total(2), Rat::from(5));
    }
}
