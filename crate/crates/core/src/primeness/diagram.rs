//! Machine check of the implication diagrams over a corpus.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::scalar::Scalar;
use crate::Membership;

use super::{classify, Classification, Notion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// Asserted on every ring.
    Implication,
    /// Asserted on commutative rings.
    CommutativeImplication,
    /// Evaluated on commutative rings and reported without assertion.
    ReportedCommutative,
    /// Evaluated on every ring and reported without assertion.
    Reported,
    /// A counterexample is looked for and reported.
    NonImplication,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeStatus {
    Holds,
    Violated,
    CounterexampleFound,
    NoCounterexample,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOutcome {
    pub edge: String,
    pub kind: EdgeKind,
    pub status: EdgeStatus,
    /// Corpus items the edge applied to.
    pub checked: usize,
    /// Corpus index of the first counterexample.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct DiagramReport<V: Scalar = Membership> {
    pub classifications: Vec<Classification<V>>,
    pub edges: Vec<EdgeOutcome>,
}

impl<V: Scalar> DiagramReport<V> {
    pub fn violations(&self) -> impl Iterator<Item = &EdgeOutcome> + '_ {
        self.edges.iter().filter(|e| e.status == EdgeStatus::Violated)
    }

    pub fn edge(&self, name: &str) -> Option<&EdgeOutcome> {
        self.edges.iter().find(|e| e.edge == name)
    }
}

use EdgeKind::*;
use Notion::*;

/// `(from, to, equivalence, kind)`.
const EDGES: &[(Notion, Notion, bool, EdgeKind)] = &[
    (D0, D0Prime, false, Implication),
    (D0Prime, D1, true, Implication),
    (D1, D1L, true, Implication),
    (D1, D1R, true, Implication),
    (D1, D2, false, Implication),
    (D4, D2, false, Implication),
    (D2, D3, false, Implication),
    (D4, CpCuts, true, Implication),
    (D2, PrimeNew, true, Implication),
    (PrimeNew, SemiprimeNew, false, Implication),
    (SD0Prime, SD1, true, Implication),
    (SD1, SD2, false, Implication),
    (SD4, CspCuts, true, Implication),
    (SD4, SD2, false, Implication),
    (SD2, SemiprimeNew, true, Implication),
    (D2, D4, false, CommutativeImplication),
    (D1, D4, false, CommutativeImplication),
    (PrimeNew, D4, false, CommutativeImplication),
    (SD1, SD4, false, CommutativeImplication),
    (SD2, SD4, false, CommutativeImplication),
    (SD4, SD1, false, CommutativeImplication),
    (D0Prime, D0, false, ReportedCommutative),
    (SD2, SD1, false, Reported),
    (D2, D1, false, NonImplication),
    (D3, D2, false, NonImplication),
    (D2, D4, false, NonImplication),
    (D0Prime, D0, false, NonImplication),
    (D4, D1, false, NonImplication),
    (D2, D0, false, NonImplication),
    (SD2, SD4, false, NonImplication),
    (SemiprimeNew, PrimeNew, false, NonImplication),
];

pub const WITNESS_RECHECK: &str = "witness recheck";
pub const PRIME_TWO_VALUED: &str = "PRIME_NEW => two-valued";

/// Classifies every corpus member and evaluates every diagram edge.
/// Violated edges are reported, not raised.
pub fn diagram_report<V: Scalar>(corpus: &[FuzzyIdeal<V>]) -> Result<DiagramReport<V>> {
    if corpus.is_empty() {
        return Err(Error::Precondition("the diagram check needs a nonempty corpus".into()));
    }
    let classifications: Vec<Classification<V>> = corpus.par_iter().map(classify).collect::<Result<_>>()?;
    let rechecks: Vec<bool> = corpus
        .par_iter()
        .zip(&classifications)
        .map(|(p, c)| -> Result<bool> {
            for (notion, v) in &c.verdicts {
                if let Some(w) = &v.witness {
                    if !w.recheck(*notion, p)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })
        .collect::<Result<_>>()?;

    let mut edges = Vec::new();
    for &(from, to, both, kind) in EDGES {
        let arrow = if both { "<=>" } else { "=>" };
        let scope = if matches!(kind, CommutativeImplication | ReportedCommutative) { " [commutative]" } else { "" };
        let edge = format!("{from} {arrow} {to}{scope}");
        let applies = |c: &Classification<V>| !matches!(kind, CommutativeImplication | ReportedCommutative) || c.commutative;
        let fails = |c: &Classification<V>| {
            let (a, b) = (c.holds(from), c.holds(to));
            if both {
                a != b
            } else {
                a && !b
            }
        };
        let checked = classifications.iter().filter(|c| applies(c)).count();
        let witness = classifications.iter().position(|c| applies(c) && fails(c));
        let status = match (kind, witness) {
            (NonImplication, Some(_)) => EdgeStatus::CounterexampleFound,
            (NonImplication, None) => EdgeStatus::NoCounterexample,
            (Reported | ReportedCommutative, Some(_)) => EdgeStatus::CounterexampleFound,
            (_, None) => EdgeStatus::Holds,
            (_, Some(_)) => EdgeStatus::Violated,
        };
        edges.push(EdgeOutcome { edge, kind, status, checked, witness });
    }

    let bad_recheck = rechecks.iter().position(|ok| !ok);
    edges.push(EdgeOutcome {
        edge: WITNESS_RECHECK.into(),
        kind: Implication,
        status: if bad_recheck.is_some() { EdgeStatus::Violated } else { EdgeStatus::Holds },
        checked: corpus.len(),
        witness: bad_recheck,
    });

    let finite: Vec<usize> = (0..corpus.len()).filter(|&i| corpus[i].ring().table().is_some()).collect();
    let bad_two_valued =
        finite.iter().copied().find(|&i| classifications[i].holds(PrimeNew) && corpus[i].num_levels() != 2);
    edges.push(EdgeOutcome {
        edge: PRIME_TWO_VALUED.into(),
        kind: Implication,
        status: if bad_two_valued.is_some() { EdgeStatus::Violated } else { EdgeStatus::Holds },
        checked: finite.len(),
        witness: bad_two_valued,
    });

    Ok(DiagramReport { classifications, edges })
}

/// [`diagram_report`], failing on the first violated edge.
pub fn diagram_check<V: Scalar>(corpus: &[FuzzyIdeal<V>]) -> Result<DiagramReport<V>> {
    let report = diagram_report(corpus)?;
    if let Some(e) = report.violations().next() {
        return Err(Error::CheckFailed(format!(
            "{} fails at corpus item {}",
            e.edge,
            e.witness.expect("violations carry an index")
        )));
    }
    Ok(report)
}
