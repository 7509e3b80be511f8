//! Greedy Boij-Söderberg decomposition.
//!
//! Each step reads off the top degree sequence of the residual diagram (the
//! minimal degree in every leading nonempty column), removes as large a
//! multiple of its pure diagram as fits, and drops the entries that hit zero.
//! Every step deletes at least one entry, so the loop ends after at most
//! `len()` steps.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{pi_all, BettiDiagram, DegreeSequence};
use crate::error::Error;
use crate::rat::Rat;

/// `sum lambda_D B(D)`, in the order the greedy elimination produced the summands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// `beta_{0,0}` of the diagram that was decomposed.
    pub source_beta0: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub lambda: Rat,
    pub degrees: DegreeSequence,
}

impl Decomposition {
    pub fn lambda_sum(&self) -> Rat {
        self.summands.iter().map(|s| &s.lambda).sum()
    }

    /// Summands whose length `n + 1` falls outside `[codim + 1, max_len]`.
    pub fn codim_warnings(&self, codim: usize, max_len: usize) -> Vec<String> {
        self.summands
            .iter()
            .filter_map(|s| {
                let len = s.degrees.n() + 1;
                (len < codim + 1 || len > max_len).then(|| {
                    format!(
                        "summand {} has length {len}, outside [{}, {max_len}] for codim {codim}",
                        s.degrees,
                        codim + 1
                    )
                })
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecomposeErrorKind {
    /// The minimal degree of this column does not exceed that of the previous one.
    NotInCone { column: usize },
    /// No usable column 0 at the origin, or too few leading columns.
    InvalidDiagram,
}

/// A failed decomposition, with what was peeled off before the failure.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct DecomposeError {
    pub kind: DecomposeErrorKind,
    pub message: String,
    pub partial: Decomposition,
    pub residual: BettiDiagram,
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DecomposeErrorKind::NotInCone { column } => {
                write!(f, "diagram not in the Boij-Söderberg cone at column {column}: {}", self.message)
            }
            DecomposeErrorKind::InvalidDiagram => write!(f, "invalid diagram: {}", self.message),
        }
    }
}

/// Failure of a single top-sequence extraction, before partial results are attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSequenceError {
    pub kind: DecomposeErrorKind,
    pub message: String,
}

/// `d_i = min { j : (i, j) in B }` over the longest run of nonempty leading columns.
pub fn top_degree_sequence(b: &BettiDiagram) -> Result<DegreeSequence, TopSequenceError> {
    let invalid = |message: String| TopSequenceError {
        kind: DecomposeErrorKind::InvalidDiagram,
        message,
    };
    let first = b.column(0).next().map(|(j, _)| j);
    match first {
        Some(0) => {}
        Some(j) => return Err(invalid(format!("column 0 starts in degree {j}, expected (0,0)"))),
        None => return Err(invalid("column 0 is empty".into())),
    }
    let mut degrees = vec![0i64];
    let mut i = 1;
    while let Some((j, _)) = b.column(i).next() {
        let prev = *degrees.last().unwrap();
        if j <= prev {
            return Err(TopSequenceError {
                kind: DecomposeErrorKind::NotInCone { column: i },
                message: format!("min degree {j} of column {i} is not above {prev}"),
            });
        }
        degrees.push(j);
        i += 1;
    }
    DegreeSequence::new(degrees)
        .map_err(|e| invalid(format!("no pure summand fits: {e}")))
}

#[allow(clippy::result_large_err)]
pub fn greedy_decompose(b: &BettiDiagram) -> Result<Decomposition, DecomposeError> {
    let source_beta0 = b.get(0, 0).cloned().unwrap_or_else(Rat::zero);
    let mut residual = b.clone();
    let mut dec = Decomposition {
        summands: Vec::new(),
        source_beta0,
    };
    while !residual.is_empty() {
        let d = match top_degree_sequence(&residual) {
            Ok(d) => d,
            Err(e) => {
                return Err(DecomposeError {
                    kind: e.kind,
                    message: e.message,
                    partial: dec,
                    residual,
                })
            }
        };
        let pis = pi_all(&d);
        let lambda = pis
            .iter()
            .enumerate()
            .map(|(i, p)| residual.get(i, d.d(i)).expect("top entry present") / p)
            .min()
            .expect("sequence is nonempty");
        let before = residual.len();
        for (i, p) in pis.iter().enumerate() {
            residual.add_at(i, d.d(i), &-(&lambda * p));
        }
        debug_assert!(residual.len() < before);
        dec.summands.push(Summand { lambda, degrees: d });
    }
    Ok(dec)
}

/// `sum lambda B(D)`, placed at `(i, d_i)`.
pub fn recompose(dec: &Decomposition) -> BettiDiagram {
    let mut out = BettiDiagram::new();
    for s in &dec.summands {
        for (i, p) in pi_all(&s.degrees).into_iter().enumerate() {
            out.add_at(i, s.degrees.d(i), &(&s.lambda * &p));
        }
    }
    out
}

/// `Some((lambda, D))` when `b = lambda B(D)` for a single degree sequence.
pub fn is_pure(b: &BettiDiagram) -> Option<(Rat, DegreeSequence)> {
    let max_col = b.max_column()?;
    let mut degrees = Vec::with_capacity(max_col + 1);
    for i in 0..=max_col {
        let mut col = b.column(i);
        let (j, _) = col.next()?;
        if col.next().is_some() {
            return None;
        }
        degrees.push(j);
    }
    let d = DegreeSequence::new(degrees).ok()?;
    let lambda = b.get(0, 0)?.clone();
    let proportional = pi_all(&d)
        .iter()
        .enumerate()
        .all(|(i, p)| b.get(i, d.d(i)) == Some(&(&lambda * p)));
    proportional.then_some((lambda, d))
}

/// Length check against a known codimension; errors only on a nonsensical codim.
pub fn check_codim(dec: &Decomposition, source: &BettiDiagram, codim: usize) -> Result<Vec<String>, Error> {
    let max_len = source
        .max_column()
        .ok_or_else(|| Error::InvalidDiagram("empty diagram".into()))?
        + 1;
    if codim + 1 > max_len {
        return Err(Error::OutOfDomain(format!(
            "codim {codim} exceeds projective dimension {}",
            max_len - 1
        )));
    }
    Ok(dec.codim_warnings(codim, max_len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::pure_diagram;
    use crate::rat::rat;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    fn m_prime() -> BettiDiagram {
        BettiDiagram::from_entries([
            (0, 0, Rat::one()),
            (1, 2, Rat::from(4)),
            (2, 3, Rat::from(2)),
            (2, 4, Rat::from(3)),
            (3, 5, Rat::from(2)),
        ])
        .unwrap()
    }

    fn diagram_n() -> BettiDiagram {
        pure_diagram(&ds(&[0, 2, 4, 5]), &Rat::from(3)).unwrap().to_betti_diagram()
    }

    #[test]
    fn top_sequence() {
        assert_eq!(top_degree_sequence(&m_prime()).unwrap(), ds(&[0, 2, 3, 5]));
        assert_eq!(top_degree_sequence(&diagram_n()).unwrap(), ds(&[0, 2, 4, 5]));
        let bad = BettiDiagram::from_entries([
            (0, 0, Rat::one()),
            (1, 1, Rat::one()),
            (2, 1, Rat::one()),
        ])
        .unwrap();
        let err = top_degree_sequence(&bad).unwrap_err();
        assert_eq!(err.kind, DecomposeErrorKind::NotInCone { column: 2 });
        let shifted = BettiDiagram::from_entries([(0, 1, Rat::one()), (1, 2, Rat::one())]).unwrap();
        assert_eq!(
            top_degree_sequence(&shifted).unwrap_err().kind,
            DecomposeErrorKind::InvalidDiagram
        );
    }

    #[test]
    fn decomposes_m_prime() {
        let dec = greedy_decompose(&m_prime()).unwrap();
        assert_eq!(
            dec.summands,
            vec![
                Summand { lambda: rat(2, 5), degrees: ds(&[0, 2, 3, 5]) },
                Summand { lambda: rat(3, 5), degrees: ds(&[0, 2, 4, 5]) },
            ]
        );
        assert_eq!(dec.lambda_sum(), Rat::one());
        assert_eq!(dec.source_beta0, Rat::one());
        assert_eq!(recompose(&dec), m_prime());
    }

    #[test]
    fn pure_inputs_give_one_summand() {
        let dec = greedy_decompose(&diagram_n()).unwrap();
        assert_eq!(dec.summands, vec![Summand { lambda: Rat::from(3), degrees: ds(&[0, 2, 4, 5]) }]);
        let lin = pure_diagram(&ds(&[0, 1, 2, 3]), &Rat::from(7)).unwrap().to_betti_diagram();
        let dec = greedy_decompose(&lin).unwrap();
        assert_eq!(dec.summands.len(), 1);
        assert_eq!(dec.summands[0].lambda, Rat::from(7));
    }

    #[test]
    fn not_in_cone_reports_partial() {
        let bad = BettiDiagram::from_entries([
            (0, 0, Rat::one()),
            (1, 1, Rat::one()),
            (2, 1, Rat::one()),
        ])
        .unwrap();
        let err = greedy_decompose(&bad).unwrap_err();
        assert_eq!(err.kind, DecomposeErrorKind::NotInCone { column: 2 });
        assert!(err.partial.summands.is_empty());
        assert_eq!(err.residual, bad);

        // column 3 is unreachable once column 0 is used up
        let gap = BettiDiagram::from_entries([
            (0, 0, Rat::one()),
            (1, 1, Rat::one()),
            (3, 5, Rat::one()),
        ])
        .unwrap();
        let err = greedy_decompose(&gap).unwrap_err();
        assert_eq!(err.kind, DecomposeErrorKind::InvalidDiagram);
        assert_eq!(err.partial.summands.len(), 1);
        assert_eq!(err.residual.len(), 1);
    }

    #[test]
    fn recompose_examples() {
        assert!(recompose(&Decomposition::default()).is_empty());
        let dec = Decomposition {
            summands: vec![Summand { lambda: Rat::one(), degrees: ds(&[0, 2, 3, 5]) }],
            source_beta0: Rat::one(),
        };
        let want = BettiDiagram::from_entries([
            (0, 0, Rat::one()),
            (1, 2, Rat::from(5)),
            (2, 3, Rat::from(5)),
            (3, 5, Rat::one()),
        ])
        .unwrap();
        assert_eq!(recompose(&dec), want);
    }

    #[test]
    fn purity() {
        assert_eq!(is_pure(&diagram_n()), Some((Rat::from(3), ds(&[0, 2, 4, 5]))));
        assert_eq!(is_pure(&m_prime()), None);
        let off = BettiDiagram::from_entries([
            (0, 0, Rat::one()),
            (1, 2, Rat::from(5)),
            (2, 3, Rat::from(4)),
            (3, 5, Rat::one()),
        ])
        .unwrap();
        assert_eq!(is_pure(&off), None);
        assert_eq!(is_pure(&BettiDiagram::new()), None);
    }

    #[test]
    fn codim_warnings() {
        let dec = greedy_decompose(&m_prime()).unwrap();
        assert!(check_codim(&dec, &m_prime(), 3).unwrap().is_empty());
        assert!(check_codim(&dec, &m_prime(), 4).is_err());
        let short = Decomposition {
            summands: vec![Summand { lambda: Rat::one(), degrees: ds(&[0, 2, 3]) }],
            source_beta0: Rat::one(),
        };
        assert_eq!(short.codim_warnings(3, 4).len(), 1);
    }
}
