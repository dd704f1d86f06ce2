//! Command implementations.

use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;

use mcf_core::cubic::FieldElem;
use mcf_core::families::{construct_spec, parse_triple, FamilyId, FamilySpec};
use mcf_core::indecomposables::{catalog, harvest_indecomposables, IndecomposableCatalog};
use mcf_core::mcf::semiconv::{csv_record, CSV_HEADER};
use mcf_core::mcf::{
    abs_tau_vector, brun_expand, classify_semiconvergents, ijpa_expand, jpa_expand, summary_flags, ExpansionRecord,
    Reference, States, Status,
};
use mcf_core::pythagoras::{ennola_gamma, report, PythagorasReport};
use mcf_core::scan::{parse_entries, scan_field, ScanOptions, ScanResult};
use mcf_core::{AlgInt, Error, OrderSpec};

use crate::{Algo, CatalogArgs, ClassifyArgs, Command, ExpandArgs, Format, OutputArgs, PythagorasArgs, ScanArgs};

/// Column order of `catalog --format csv`.
pub const CATALOG_HEADER: [&str; 9] = ["family", "a", "label", "v1", "v2", "v3", "norm", "trace", "signature"];
/// Column order of `scan --format csv`.
pub const SCAN_HEADER: [&str; 11] = ["p", "q", "r", "root", "status", "l0", "l1", "conv", "semiconv", "rows", "note"];
/// Column order of `expand --format csv`.
pub const EXPAND_HEADER: [&str; 5] = ["k", "state1", "state2", "state3", "digits"];
/// Column order of `pythagoras --format csv`.
pub const PYTHAGORAS_HEADER: [&str; 5] = ["family", "gamma", "min_squares", "squares", "forced_decomposition"];

/// Runs a command and returns its exit code.
pub fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Expand(a) => expand(a),
        Command::Classify(a) => classify(a),
        Command::Catalog(a) => cmd_catalog(a),
        Command::Pythagoras(a) => pythagoras(a),
        Command::Scan(a) => scan(a),
    }
}

/// Exit code of a failed command.
pub fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::MissingUnits) => 3,
        _ => 1,
    }
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Periodic | Status::Terminated => 0,
        Status::BoundExhausted => 2,
    }
}

fn sink(out: &OutputArgs) -> Result<Box<dyn Write>> {
    Ok(match &out.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json(out: &OutputArgs, value: &impl serde::Serialize) -> Result<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn write_csv<const N: usize>(out: &OutputArgs, header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink(out)?);
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

fn order_of(family: &str, root: Option<&str>) -> Result<OrderSpec> {
    let spec: FamilySpec = family.parse()?;
    Ok(construct_spec(&spec, root)?)
}

/// Parses `abs` or three `;`-separated coordinate triples.
fn parse_vector(order: &OrderSpec, s: &str) -> Result<[AlgInt; 3]> {
    if s.trim() == "abs" {
        return Ok(abs_tau_vector(order, order.primary()));
    }
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 3 {
        bail!(Error::Parse(format!("expected three ';'-separated triples in {s:?}")));
    }
    Ok([parse_triple(parts[0])?, parse_triple(parts[1])?, parse_triple(parts[2])?])
}

fn run_expansion(order: &OrderSpec, algo: Algo, beta: [AlgInt; 3], max_iter: usize) -> Result<ExpansionRecord> {
    let track = order.primary();
    Ok(match algo {
        Algo::Jpa => jpa_expand(order, beta, track, max_iter)?,
        Algo::Brun => brun_expand(order, beta, track, max_iter)?,
        Algo::Ijpa => {
            let [b1, b2, b3] = beta.map(FieldElem::from_int);
            let theta = [b2.div(&b1, order)?, b3.div(&b1, order)?];
            ijpa_expand(order, theta, track, max_iter)?
        }
    })
}

fn summary(rec: &ExpansionRecord) -> String {
    let show = |v: Option<usize>| v.map_or("-".to_string(), |n| n.to_string());
    format!("status={:?} l0={} l1={}", rec.status, show(rec.l0), show(rec.l1))
}

fn expand(a: ExpandArgs) -> Result<u8> {
    let order = order_of(&a.order.family, a.order.root.as_deref())?;
    let beta = parse_vector(&order, &a.vector)?;
    let rec = run_expansion(&order, a.algo, beta, a.max_iter)?;
    match a.out.format.unwrap_or(Format::Json) {
        Format::Json => write_json(&a.out, &rec)?,
        Format::Csv => {
            let var = order.label(order.primary());
            let states: Vec<[String; 3]> = match &rec.states {
                States::Integral(v) => v.iter().map(|s| s.each_ref().map(|e| e.display_with(var))).collect(),
                States::Rational(v) => v
                    .iter()
                    .map(|s| [s[0].display_with(var), s[1].display_with(var), String::new()])
                    .collect(),
            };
            let rows = states.into_iter().enumerate().map(|(k, [s1, s2, s3])| {
                let digits = rec.digits.get(k).map_or(String::new(), |d| {
                    d.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                });
                [k.to_string(), s1, s2, s3, digits]
            });
            write_csv(&a.out, EXPAND_HEADER, rows)?;
        }
    }
    eprintln!("{}", summary(&rec));
    Ok(status_code(rec.status))
}

fn family_catalog(order: &OrderSpec) -> Option<IndecomposableCatalog> {
    match order.family()? {
        FamilyId::Generic(..) => None,
        f => catalog(f).ok(),
    }
}

fn mark(flag: bool) -> &'static str {
    if flag {
        "✓"
    } else {
        "✗"
    }
}

fn classify(a: ClassifyArgs) -> Result<u8> {
    let order = order_of(&a.order.family, a.order.root.as_deref())?;
    if !order.has_units() {
        return Err(Error::MissingUnits.into());
    }
    let beta = parse_vector(&order, &a.vector)?;
    let rec = jpa_expand(&order, beta, order.primary(), a.max_iter)?;
    if !rec.is_periodic() {
        eprintln!("{}", summary(&rec));
        return match rec.status {
            Status::BoundExhausted => Ok(2),
            _ => Err(Error::NotPeriodic.into()),
        };
    }
    let cat = family_catalog(&order);
    let harvest;
    let reference = match &cat {
        Some(c) => Reference::Catalog(c),
        None => {
            harvest = harvest_indecomposables(&order, a.trace_bound)?;
            Reference::Harvest(&harvest)
        }
    };
    let rows = classify_semiconvergents(&order, &rec, reference)?;
    let flags = summary_flags(&rows);
    match a.out.format.unwrap_or(Format::Csv) {
        Format::Csv => write_csv(&a.out, CSV_HEADER, rows.iter().map(|r| csv_record(&order, r)))?,
        Format::Json => write_json(
            &a.out,
            &serde_json::json!({
                "order": order.to_json(),
                "l0": rec.l0,
                "l1": rec.l1,
                "conv": flags.conv,
                "semiconv": flags.semiconv,
                "rows": rows,
            }),
        )?,
    }
    eprintln!("{} conv={} semiconv={}", summary(&rec), mark(flags.conv), mark(flags.semiconv));
    Ok(0)
}

fn cmd_catalog(a: CatalogArgs) -> Result<u8> {
    let order = order_of(&a.order.family, a.order.root.as_deref())?;
    let family = order
        .family()
        .ok_or_else(|| Error::ParameterOutOfRange("the order has no family".into()))?;
    let cat = catalog(family)?;
    match a.out.format.unwrap_or(Format::Csv) {
        Format::Csv => write_csv(&a.out, CATALOG_HEADER, cat.csv_rows(&order)?)?,
        Format::Json => write_json(&a.out, &cat)?,
    }
    eprintln!("{} representatives", cat.len());
    Ok(0)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?)
}

fn pythagoras(a: PythagorasArgs) -> Result<u8> {
    let gamma = a.gamma.as_deref().map(parse_triple).transpose()?;
    let run_one = |family: &String| -> Result<PythagorasReport> {
        let order = order_of(family, None)?;
        let target = match (&gamma, order.family()) {
            (Some(g), _) => g.clone(),
            (None, Some(FamilyId::EnnolaI(a))) => ennola_gamma(a).0,
            _ => bail!(Error::Parse(format!("--gamma is required for {family}"))),
        };
        Ok(report(&order, &target, a.cap)?)
    };
    let reports: Vec<PythagorasReport> = pool(a.jobs)?.install(|| a.family.par_iter().map(run_one).collect::<Result<_>>())?;
    match a.out.format.unwrap_or(Format::Json) {
        Format::Json if reports.len() == 1 => write_json(&a.out, &reports[0])?,
        Format::Json => write_json(&a.out, &reports)?,
        Format::Csv => {
            let show = |v: &[AlgInt]| v.iter().map(|e| e.display_with("x")).collect::<Vec<_>>().join(" + ");
            let rows = a.family.iter().zip(&reports).map(|(f, r)| {
                [
                    f.clone(),
                    r.gamma.display_with("x"),
                    r.min_squares.to_string(),
                    r.squares.len().to_string(),
                    r.forced_decomposition.as_deref().map_or(String::new(), show),
                ]
            });
            write_csv(&a.out, PYTHAGORAS_HEADER, rows)?;
        }
    }
    Ok(0)
}

fn scan(a: ScanArgs) -> Result<u8> {
    let text = std::fs::read_to_string(&a.input).with_context(|| format!("cannot read {}", a.input.display()))?;
    let entries = parse_entries(&text)?;
    let opts = ScanOptions { trace_bound: a.trace_bound, max_iter: a.max_iter, ..ScanOptions::default() };
    let results: Vec<ScanResult> = pool(a.jobs)?.install(|| {
        entries
            .par_iter()
            .map(|e| scan_field(e, &opts))
            .collect::<mcf_core::Result<Vec<_>>>()
    })?
    .into_iter()
    .flatten()
    .collect();
    match a.out.format.unwrap_or(Format::Csv) {
        Format::Json => write_json(&a.out, &results)?,
        Format::Csv => {
            let opt = |v: Option<usize>| v.map_or(String::new(), |n| n.to_string());
            let flag = |v: Option<bool>| v.map_or(String::new(), |b| mark(b).to_string());
            let rows = results.iter().map(|r| {
                [
                    r.poly.p.to_string(),
                    r.poly.q.to_string(),
                    r.poly.r.to_string(),
                    format!("{:.3}", r.root),
                    format!("{:?}", r.status),
                    opt(r.l0),
                    opt(r.l1),
                    flag(r.conv),
                    flag(r.semiconv),
                    r.rows.to_string(),
                    r.note.clone().unwrap_or_default(),
                ]
            });
            write_csv(&a.out, SCAN_HEADER, rows)?;
        }
    }
    Ok(results.iter().map(|r| status_code(r.status)).max().unwrap_or(0))
}
