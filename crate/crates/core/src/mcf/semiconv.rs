//! Semiconvergents `beta_i - j beta_1` of a JPA run and their indecomposability verdicts.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::record::{Algorithm, ExpansionRecord};
use crate::cubic::{AlgInt, OrderSpec, UnitFactor};
use crate::error::{Error, Result};
use crate::indecomposables::{is_decomposable, CatalogLabel, Decomposition, DecompositionWitness, IndecomposableCatalog};

/// Set of known indecomposables used before falling back to the exhaustive oracle.
#[derive(Debug, Clone, Copy)]
pub enum Reference<'a> {
    /// A closed-form family catalog.
    Catalog(&'a IndecomposableCatalog),
    /// Totally positive indecomposables found by a trace-bounded harvest.
    Harvest(&'a [AlgInt]),
    /// No reference set; every row goes to the oracle.
    None,
}

/// Indecomposability verdict of a row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// The row equals `representative * unit`.
    Associated {
        /// Catalog label of the representative, when it comes from a catalog.
        label: Option<CatalogLabel>,
        /// The indecomposable representative.
        representative: AlgInt,
        /// The unit quotient `row / representative`.
        unit: AlgInt,
        /// Exponents of the unit in the fundamental units.
        exponents: UnitFactor,
    },
    /// Indecomposable by exhaustive search, with no listed representative.
    Indecomposable,
    /// Decomposable, with an explicit witness.
    Decomposable(DecompositionWitness),
}

impl Verdict {
    /// True unless the row is decomposable.
    pub fn is_indecomposable(&self) -> bool {
        !matches!(self, Verdict::Decomposable(_))
    }
}

/// A semiconvergent `delta^{(k)}_{i,j} = beta_i^{(k)} - j beta_1^{(k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiconvergentRow {
    /// Step index.
    pub k: usize,
    /// Component index, `2` or `3`.
    pub i: usize,
    /// Multiple of the pivot subtracted.
    pub j: u64,
    /// The element.
    pub value: AlgInt,
    /// Its norm.
    #[serde(with = "crate::cubic::algint::bigint_serde")]
    pub norm: BigInt,
    /// Verdict, once classified.
    pub verdict: Option<Verdict>,
}

impl SemiconvergentRow {
    /// True for `j = 0`, i.e. for a convergent.
    pub fn is_convergent(&self) -> bool {
        self.j == 0
    }
}

/// All rows for steps `0..cycle_end()`, with `0 <= j <= floor(beta_i / beta_1) - 1`.
///
/// For a run that is not periodic every recorded step is used and the error
/// [`Error::NotPeriodic`] is returned together with nothing else, so that callers never
/// mistake a truncated row set for a complete one.
pub fn semiconvergents(order: &OrderSpec, rec: &ExpansionRecord) -> Result<Vec<SemiconvergentRow>> {
    if rec.algorithm != Algorithm::Jpa {
        return Err(Error::Parse("semiconvergents need a JPA record".into()));
    }
    if !rec.is_periodic() {
        return Err(Error::NotPeriodic);
    }
    Ok(semiconvergents_upto(order, rec, rec.cycle_end()))
}

/// Rows for steps `0..end` of any JPA record, periodic or not.
pub fn semiconvergents_upto(order: &OrderSpec, rec: &ExpansionRecord, end: usize) -> Vec<SemiconvergentRow> {
    let mut rows = Vec::new();
    for k in 0..end.min(rec.digits.len()) {
        let b = rec.state(k);
        for i in [2usize, 3] {
            let digit = &rec.digits[k][i - 2];
            let jmax = crate::cubic::order::to_i64(digit);
            for j in 0..jmax.max(0) {
                let value = &b[i - 1] - &b[0].scale(&BigInt::from(j));
                rows.push(SemiconvergentRow {
                    k,
                    i,
                    j: j as u64,
                    norm: order.norm(&value),
                    value,
                    verdict: None,
                });
            }
        }
    }
    rows
}

/// Decides one element: association with the reference set first, then the oracle.
pub fn classify_element(order: &OrderSpec, x: &AlgInt, reference: Reference<'_>) -> Result<Verdict> {
    let assoc = match reference {
        Reference::Catalog(cat) => cat.find_associate(order, x).map(|(l, u)| {
            let rep = cat.entries.iter().find(|e| e.label == l).map(|e| e.value.clone());
            (Some(l), rep.expect("label comes from the catalog"), u)
        }),
        Reference::Harvest(set) => {
            let n = order.norm(x).magnitude().clone();
            set.iter().find_map(|y| {
                if order.norm(y).magnitude() != &n {
                    return None;
                }
                order.is_associated(x, y).ok().map(|u| (None, y.clone(), u))
            })
        }
        Reference::None => None,
    };
    if let Some((label, representative, unit)) = assoc {
        let exponents = order.unit_decompose(&unit)?;
        return Ok(Verdict::Associated {
            label,
            representative,
            unit,
            exponents,
        });
    }
    let s = order.signature(x)?;
    Ok(match is_decomposable(order, x, s)? {
        Decomposition::Decomposable(w) => Verdict::Decomposable(w),
        Decomposition::Indecomposable => Verdict::Indecomposable,
    })
}

/// Fills in the verdict of every row.
pub fn classify_rows(order: &OrderSpec, rows: &mut [SemiconvergentRow], reference: Reference<'_>) -> Result<()> {
    order.units()?;
    for row in rows.iter_mut() {
        row.verdict = Some(classify_element(order, &row.value, reference)?);
    }
    Ok(())
}

/// Semiconvergents of a periodic JPA run with verdicts.
pub fn classify_semiconvergents(
    order: &OrderSpec,
    rec: &ExpansionRecord,
    reference: Reference<'_>,
) -> Result<Vec<SemiconvergentRow>> {
    order.units()?;
    let mut rows = semiconvergents(order, rec)?;
    classify_rows(order, &mut rows, reference)?;
    Ok(rows)
}

/// Whether all convergents and all proper semiconvergents are indecomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryFlags {
    /// No `j = 0` row is decomposable.
    pub conv: bool,
    /// No `j >= 1` row is decomposable.
    pub semiconv: bool,
}

/// Summary flags of classified rows.
pub fn summary_flags(rows: &[SemiconvergentRow]) -> SummaryFlags {
    let ok = |r: &SemiconvergentRow| r.verdict.as_ref().is_none_or(Verdict::is_indecomposable);
    SummaryFlags {
        conv: rows.iter().filter(|r| r.is_convergent()).all(ok),
        semiconv: rows.iter().filter(|r| !r.is_convergent()).all(ok),
    }
}

/// CSV header of the semiconvergent table.
pub const CSV_HEADER: [&str; 10] = ["k", "i", "j", "v1", "v2", "v3", "norm", "label", "unit_exponents", "verdict"];

/// One CSV record of a row; the label is rendered with the primary root's name.
pub fn csv_record(order: &OrderSpec, row: &SemiconvergentRow) -> [String; 10] {
    let var = order.label(order.primary());
    let (label, exps, verdict) = match &row.verdict {
        Some(Verdict::Associated {
            label,
            representative,
            exponents,
            ..
        }) => (
            label.map(|l| l.render(var)).unwrap_or_else(|| order.show(representative)),
            exponents.to_string(),
            "indecomposable".to_string(),
        ),
        Some(Verdict::Indecomposable) => (String::new(), String::new(), "indecomposable".to_string()),
        Some(Verdict::Decomposable(w)) => (
            String::new(),
            String::new(),
            format!("decomposable:{}|{}", order.show(&w.parts[0]), order.show(&w.parts[1])),
        ),
        None => (String::new(), String::new(), String::new()),
    };
    [
        row.k.to_string(),
        row.i.to_string(),
        row.j.to_string(),
        row.value.c[0].to_string(),
        row.value.c[1].to_string(),
        row.value.c[2].to_string(),
        row.norm.to_string(),
        label,
        exps,
        verdict,
    ]
}
