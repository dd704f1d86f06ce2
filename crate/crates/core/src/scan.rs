//! Batch scans of arbitrary totally real cubic orders.
//!
//! Each field is given by the coefficients of its defining polynomial and, optionally, a pair
//! of fundamental units. For every selected root the JPA expansion of `(1, |x|, x^2)` is run,
//! its semiconvergents are classified against the indecomposables of trace at most `T`
//! (falling back to the exhaustive oracle), and the preperiod, period and the two summary
//! flags are reported.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::cubic::{AlgInt, OrderSpec};
use crate::error::{Error, Result};
use crate::families::resolve_root;
use crate::indecomposables::harvest_indecomposables;
use crate::mcf::{abs_tau_vector, classify_semiconvergents, jpa_expand, summary_flags, Reference, Status};

/// Coefficients of `x^3 + p x^2 + q x + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    /// Coefficient of `x^2`.
    pub p: i64,
    /// Coefficient of `x`.
    pub q: i64,
    /// Constant coefficient.
    pub r: i64,
}

/// One input record of a scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldEntry {
    /// Defining polynomial.
    pub poly: Poly,
    /// Root to expand, as a label or an approximate value. When absent every root in
    /// `(0, 2)` is expanded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    /// Fundamental units as coordinate triples. When absent they are searched for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<[[i64; 3]; 2]>,
    /// Free-form annotation carried into the output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Result of scanning one root of one field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    /// Defining polynomial.
    pub poly: Poly,
    /// Approximate value of the expanded root.
    pub root: f64,
    /// Termination status of the expansion.
    pub status: Status,
    /// Preperiod, when periodic.
    pub l0: Option<usize>,
    /// Period, when periodic.
    pub l1: Option<usize>,
    /// Every convergent row is indecomposable.
    pub conv: Option<bool>,
    /// Every proper semiconvergent row is indecomposable.
    pub semiconv: Option<bool>,
    /// Number of classified rows.
    pub rows: usize,
    /// Annotation copied from the input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Tuning knobs of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    /// Trace bound `T` of the indecomposable harvest.
    pub trace_bound: i64,
    /// Iteration bound of the expansion.
    pub max_iter: usize,
    /// Embedding radius of the unit search used when an entry carries no units.
    pub unit_radius: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { trace_bound: 40, max_iter: crate::mcf::DEFAULT_MAX_ITER, unit_radius: 40.0 }
    }
}

/// Searches for a pair of independent units among the elements whose three embeddings are
/// bounded by `radius` in absolute value.
///
/// The returned pair generates every unit found in the box: starting from any independent
/// pair, a box unit outside the generated group is reduced modulo the pair and swapped in,
/// which at least halves the regulator of the pair. The final pair is Gauss reduced in the
/// logarithmic embedding, and it is a fundamental system whenever the box contains one.
pub fn find_unit_basis(order: &OrderSpec, radius: f64) -> Result<[AlgInt; 2]> {
    let log = |a: &AlgInt| [order.ln_abs(a, 0), order.ln_abs(a, 1)];
    let mut units: Vec<AlgInt> = Vec::new();
    enumerate_box(order, radius, |c| {
        let a = AlgInt::from_i64(c);
        if !a.is_rational() && order.is_unit(&a) {
            units.push(a);
        }
    })?;
    let indep = |a: &AlgInt, b: &AlgInt| det2(log(a), log(b)).abs() > 1e-6;
    let (i, j) = (0..units.len())
        .flat_map(|i| (i + 1..units.len()).map(move |j| (i, j)))
        .find(|&(i, j)| indep(&units[i], &units[j]))
        .ok_or_else(|| Error::InvalidUnits("no independent units in the search box".into()))?;
    let mut basis = [units[i].clone(), units[j].clone()];
    loop {
        let mut changed = false;
        for u in &units {
            let (s, t) = coords(log(u), log(&basis[0]), log(&basis[1]));
            let r = unit_product(order, u, &basis, -(s.round() as i64), -(t.round() as i64))?;
            if r.is_rational() {
                continue;
            }
            let (s, t) = coords(log(&r), log(&basis[0]), log(&basis[1]));
            if s.abs() > 1e-6 {
                basis[0] = r;
            } else if t.abs() > 1e-6 {
                basis[1] = r;
            } else {
                continue;
            }
            changed = true;
        }
        if !changed {
            break;
        }
    }
    gauss_reduce(order, &mut basis)?;
    Ok(basis)
}

fn det2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Real coordinates of `v` in the basis `(a, b)`.
fn coords(v: [f64; 2], a: [f64; 2], b: [f64; 2]) -> (f64, f64) {
    let d = det2(a, b);
    (det2(v, b) / d, det2(a, v) / d)
}

/// `u * b0^k * b1^l` for signed exponents.
fn unit_product(order: &OrderSpec, u: &AlgInt, basis: &[AlgInt; 2], k: i64, l: i64) -> Result<AlgInt> {
    let mut out = u.clone();
    for (b, e) in basis.iter().zip([k, l]) {
        let base = if e < 0 { order.unit_inverse(b)? } else { b.clone() };
        out = order.mul(&out, &order.pow(&base, e.unsigned_abs()));
    }
    Ok(out)
}

/// Lagrange-Gauss reduction of a unit pair in the logarithmic embedding.
fn gauss_reduce(order: &OrderSpec, basis: &mut [AlgInt; 2]) -> Result<()> {
    let log = |a: &AlgInt| [order.ln_abs(a, 0), order.ln_abs(a, 1)];
    let len = |v: [f64; 2]| v[0] * v[0] + v[1] * v[1];
    loop {
        if len(log(&basis[1])) < len(log(&basis[0])) {
            basis.swap(0, 1);
        }
        let (a, b) = (log(&basis[0]), log(&basis[1]));
        let m = ((a[0] * b[0] + a[1] * b[1]) / len(a)).round() as i64;
        if m == 0 {
            return Ok(());
        }
        basis[1] = unit_product(order, &basis[1], basis, -m, 0)?;
    }
}

fn enumerate_box(order: &OrderSpec, radius: f64, mut visit: impl FnMut([i64; 3])) -> Result<()> {
    crate::indecomposables::enumerate_box::<()>(order, [(-radius, radius); 3], None, |c| {
        visit(c);
        ControlFlow::Continue(())
    })?;
    Ok(())
}

/// Builds the order of an entry with its units attached.
pub fn entry_order(entry: &FieldEntry, opts: &ScanOptions) -> Result<OrderSpec> {
    let order = OrderSpec::new(entry.poly.p, entry.poly.q, entry.poly.r)?;
    let [u1, u2] = match entry.units {
        Some([a, b]) => [AlgInt::from_i64(a), AlgInt::from_i64(b)],
        None => find_unit_basis(&order, opts.unit_radius)?,
    };
    order.with_units(u1, u2)
}

/// Roots of an entry selected for expansion.
pub fn selected_roots(order: &OrderSpec, entry: &FieldEntry) -> Result<Vec<usize>> {
    match &entry.root {
        Some(name) => Ok(vec![resolve_root(order, name)?]),
        None => Ok((0..3)
            .filter(|&i| {
                let v = order.root_approx(i);
                v > 0.0 && v < 2.0
            })
            .collect()),
    }
}

/// Scans one root of an order that already carries units.
pub fn scan_root(order: &OrderSpec, root: usize, opts: &ScanOptions, harvest: &[AlgInt]) -> Result<ScanResult> {
    let order = order.with_primary(root);
    let (p, q, r) = order.coeffs();
    let rec = jpa_expand(&order, abs_tau_vector(&order, root), root, opts.max_iter)?;
    let mut out = ScanResult {
        poly: Poly { p, q, r },
        root: order.root_approx(root),
        status: rec.status,
        l0: rec.l0,
        l1: rec.l1,
        conv: None,
        semiconv: None,
        rows: 0,
        note: None,
    };
    if rec.is_periodic() {
        let rows = classify_semiconvergents(&order, &rec, Reference::Harvest(harvest))?;
        let flags = summary_flags(&rows);
        out.conv = Some(flags.conv);
        out.semiconv = Some(flags.semiconv);
        out.rows = rows.len();
    }
    Ok(out)
}

/// Scans every selected root of one entry.
pub fn scan_field(entry: &FieldEntry, opts: &ScanOptions) -> Result<Vec<ScanResult>> {
    let order = entry_order(entry, opts)?;
    let harvest = harvest_indecomposables(&order, opts.trace_bound)?;
    selected_roots(&order, entry)?
        .into_iter()
        .map(|root| {
            let mut res = scan_root(&order, root, opts, &harvest)?;
            res.note = entry.note.clone();
            Ok(res)
        })
        .collect()
}

/// Parses a JSON array of field entries.
pub fn parse_entries(json: &str) -> Result<Vec<FieldEntry>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_search_finds_a_fundamental_pair_for_the_discriminant_49_field() {
        let order = OrderSpec::new(-1, -2, 1).unwrap();
        let [u1, u2] = find_unit_basis(&order, 10.0).unwrap();
        assert!(order.is_unit(&u1) && order.is_unit(&u2));
        // The regulator of the field of discriminant 49 is about 0.5255.
        let l = |u: &AlgInt, i| order.ln_abs(u, i);
        let reg = (l(&u1, 0) * l(&u2, 1) - l(&u1, 1) * l(&u2, 0)).abs();
        assert!((reg - 0.5255).abs() < 1e-3, "{reg}");
    }

    #[test]
    fn entries_parse_with_optional_fields() {
        let e = parse_entries(r#"[{"poly":{"p":0,"q":-3,"r":1}},{"poly":{"p":0,"q":-3,"r":1},"root":"0.347","note":"n"}]"#)
            .unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[1].root.as_deref(), Some("0.347"));
    }
}
