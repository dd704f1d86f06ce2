//! Constructors for the parametric families of cubic orders, with their root labels,
//! closed-form root bounds and fundamental units.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::cubic::{AlgInt, OrderSpec};
use crate::error::{Error, Result};

/// A family of cubic polynomials together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    /// `x^3 - a x^2 - (a+3) x - 1`, `a >= -1`.
    SimplestCubic(i64),
    /// `x^3 + (a-1) x^2 - a x - 1`, `a >= 3`.
    EnnolaI(i64),
    /// `x^3 - (a-1) x^2 - a x - 1`, `a >= 5`.
    EnnolaII(i64),
    /// `x^3 - (a+b) x^2 + ab x - 1`, `2 <= a <= b - 2`.
    ABFamily(i64, i64),
    /// An arbitrary monic cubic `x^3 + p x^2 + q x + r`.
    Generic(i64, i64, i64),
}

impl FamilyId {
    /// Coefficients `(p, q, r)` of the defining polynomial.
    pub fn coeffs(self) -> (i64, i64, i64) {
        match self {
            FamilyId::SimplestCubic(a) => (-a, -(a + 3), -1),
            FamilyId::EnnolaI(a) => (a - 1, -a, -1),
            FamilyId::EnnolaII(a) => (-(a - 1), -a, -1),
            FamilyId::ABFamily(a, b) => (-(a + b), a * b, -1),
            FamilyId::Generic(p, q, r) => (p, q, r),
        }
    }

    /// Checks the admissible parameter range.
    pub fn validate(self) -> Result<()> {
        let ok = match self {
            FamilyId::SimplestCubic(a) => a >= -1,
            FamilyId::EnnolaI(a) => a >= 3,
            FamilyId::EnnolaII(a) => a >= 5,
            FamilyId::ABFamily(a, b) => 2 <= a && a <= b - 2,
            FamilyId::Generic(..) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange(self.to_string()))
        }
    }

    /// Root labels and the ascending position of each label.
    pub fn labels(self) -> ([&'static str; 3], [usize; 3]) {
        match self {
            FamilyId::SimplestCubic(_) => (["rho", "rho'", "rho''"], [2, 0, 1]),
            FamilyId::EnnolaI(_) => (["rho", "rho'", "rho''"], [2, 1, 0]),
            FamilyId::EnnolaII(_) => (["psi", "psi'", "psi''"], [2, 0, 1]),
            FamilyId::ABFamily(..) | FamilyId::Generic(..) => (["r0", "r1", "r2"], [0, 1, 2]),
        }
    }

    /// The parameter `a`, when the family has one.
    pub fn a(self) -> Option<i64> {
        match self {
            FamilyId::SimplestCubic(a)
            | FamilyId::EnnolaI(a)
            | FamilyId::EnnolaII(a)
            | FamilyId::ABFamily(a, _) => Some(a),
            FamilyId::Generic(..) => None,
        }
    }

    /// Short family tag used in CSV output.
    pub fn tag(self) -> &'static str {
        match self {
            FamilyId::SimplestCubic(_) => "simplest",
            FamilyId::EnnolaI(_) => "ennola1",
            FamilyId::EnnolaII(_) => "ennola2",
            FamilyId::ABFamily(..) => "ab",
            FamilyId::Generic(..) => "generic",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::SimplestCubic(a) => write!(f, "simplest:a={a}"),
            FamilyId::EnnolaI(a) => write!(f, "ennola1:a={a}"),
            FamilyId::EnnolaII(a) => write!(f, "ennola2:a={a}"),
            FamilyId::ABFamily(a, b) => write!(f, "ab:a={a},b={b}"),
            FamilyId::Generic(p, q, r) => write!(f, "generic:p={p},q={q},r={r}"),
        }
    }
}

/// A parsed family specification: the family plus optional user-supplied units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    /// The family.
    pub family: FamilyId,
    /// Units given as `u1=v1/v2/v3` style triples, generic families only.
    pub units: Option<(AlgInt, AlgInt)>,
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `ennola1:a=5`, `ennola2:a=6`, `simplest:a=4`, `ab:a=2,b=4` or
    /// `generic:p=0,q=-3,r=1[,u1=(x,y,z),u2=(x,y,z)]`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let bad = |m: &str| Error::Parse(format!("family spec {s:?}: {m}"));
        let (tag, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let mut kv: Vec<(String, String)> = Vec::new();
        // Split on commas that are outside parentheses or brackets.
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in rest.chars() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if ch == ',' && depth == 0 {
                kv.push(split_kv(&cur).ok_or_else(|| bad("expected key=value"))?);
                cur.clear();
            } else {
                cur.push(ch);
            }
        }
        if !cur.trim().is_empty() {
            kv.push(split_kv(&cur).ok_or_else(|| bad("expected key=value"))?);
        }
        let get = |k: &str| -> Result<i64> {
            kv.iter()
                .find(|(key, _)| key == k)
                .ok_or_else(|| bad(&format!("missing {k}")))?
                .1
                .parse()
                .map_err(|_| bad(&format!("{k} is not an integer")))
        };
        let family = match tag.trim() {
            "simplest" => FamilyId::SimplestCubic(get("a")?),
            "ennola1" => FamilyId::EnnolaI(get("a")?),
            "ennola2" => FamilyId::EnnolaII(get("a")?),
            "ab" => FamilyId::ABFamily(get("a")?, get("b")?),
            "generic" => FamilyId::Generic(get("p")?, get("q")?, get("r")?),
            other => return Err(bad(&format!("unknown family {other:?}"))),
        };
        let unit = |k: &str| -> Result<Option<AlgInt>> {
            match kv.iter().find(|(key, _)| key == k) {
                None => Ok(None),
                Some((_, v)) => parse_triple(v).map(Some),
            }
        };
        let units = match (unit("u1")?, unit("u2")?) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => return Err(bad("both u1 and u2 are required")),
        };
        if units.is_some() && !matches!(family, FamilyId::Generic(..)) {
            return Err(bad("units may only be supplied for generic fields"));
        }
        Ok(FamilySpec { family, units })
    }
}

fn split_kv(s: &str) -> Option<(String, String)> {
    let (k, v) = s.split_once('=')?;
    Some((k.trim().to_string(), v.trim().to_string()))
}

/// Parses a coordinate triple such as `(1,-2,3)`, `[1,-2,3]` or `1/-2/3`.
pub fn parse_triple(s: &str) -> Result<AlgInt> {
    let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let parts: Vec<&str> = inner.split([',', '/', ' ']).filter(|t| !t.is_empty()).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected three coordinates in {s:?}")));
    }
    let mut c: [BigInt; 3] = Default::default();
    for (k, p) in parts.iter().enumerate() {
        c[k] = p
            .parse()
            .map_err(|_| Error::Parse(format!("invalid coordinate {p:?} in {s:?}")))?;
    }
    Ok(AlgInt { c })
}

/// Builds the order of a family with `x` denoting the first labelled root.
pub fn construct(f: FamilyId) -> Result<OrderSpec> {
    construct_at(f, 0)
}

/// Builds the order of a family with `x` denoting the root with label index `primary`.
///
/// Fundamental units are expressed in the chosen presentation: `(rho, rho')` for the simplest
/// cubic fields, `(x, x-1)` for Ennola I, `(g, g-1)` with `g = -(a-1) - (a-1)x + x^2` for
/// Ennola II (`g` generates the Ennola I order with parameter `a-2` inside it), and
/// `(x, x-a)` for the `ab` family. Generic orders carry no units.
pub fn construct_at(f: FamilyId, primary: usize) -> Result<OrderSpec> {
    f.validate()?;
    let (p, q, r) = f.coeffs();
    let (labels, map) = f.labels();
    let base = OrderSpec::new(p, q, r)?
        .with_labels(labels, map)
        .with_primary(primary)
        .with_family(f);
    let units = match f {
        FamilyId::SimplestCubic(_) => {
            Some((express_conjugate(&base, 0)?, express_conjugate(&base, 1)?))
        }
        FamilyId::EnnolaI(_) => Some((AlgInt::x(), AlgInt::from_i64([-1, 1, 0]))),
        FamilyId::EnnolaII(a) => {
            let g = AlgInt::from_i64([-(a - 1), -(a - 1), 1]);
            let g1 = &g - &AlgInt::one();
            Some((g, g1))
        }
        FamilyId::ABFamily(a, _) => Some((AlgInt::x(), AlgInt::from_i64([-a, 1, 0]))),
        FamilyId::Generic(..) => None,
    };
    match units {
        Some((u1, u2)) => base.with_units(u1, u2),
        None => Ok(base),
    }
}

/// Builds a family order from a parsed spec, selecting the tracking root by label.
pub fn construct_spec(spec: &FamilySpec, root: Option<&str>) -> Result<OrderSpec> {
    let probe = construct(spec.family)?;
    let primary = match root {
        None => 0,
        Some(name) => resolve_root(&probe, name)?,
    };
    let order = construct_at(spec.family, primary)?;
    match &spec.units {
        Some((u1, u2)) => order.with_units(u1.clone(), u2.clone()),
        None => Ok(order),
    }
}

/// Resolves a root by label or by an approximate numeric value such as `1.802`.
pub fn resolve_root(order: &OrderSpec, name: &str) -> Result<usize> {
    if let Ok(i) = order.label_index(name) {
        return Ok(i);
    }
    let v: f64 = name
        .parse()
        .map_err(|_| Error::UnknownLabel(name.to_string()))?;
    let (best, dist) = (0..3)
        .map(|i| (i, (order.root_approx(i) - v).abs()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("three roots");
    if dist > 0.01 {
        return Err(Error::UnknownLabel(name.to_string()));
    }
    Ok(best)
}

/// Expresses the conjugate root with label `target` as a polynomial in `x`.
///
/// The candidate is obtained by solving the Vandermonde system for the cyclic permutation of
/// the roots that sends the primary root to the target, rounding, and checking a small
/// neighbourhood; a candidate is accepted only if it is an exact root of the defining
/// polynomial whose primary embedding is the target root.
pub fn express_conjugate(order: &OrderSpec, target: usize) -> Result<AlgInt> {
    let p = order.primary();
    if target == p {
        return Ok(AlgInt::x());
    }
    let r: [f64; 3] = std::array::from_fn(|i| order.root_approx(i));
    // The unique 3-cycle with p -> target.
    let other = 3 - p - target;
    let mut image = [0usize; 3];
    image[p] = target;
    image[target] = other;
    image[other] = p;
    let m: [[f64; 3]; 3] = std::array::from_fn(|j| [1.0, r[j], r[j] * r[j]]);
    let rhs: [f64; 3] = std::array::from_fn(|j| r[image[j]]);
    let sol = solve3(m, rhs).ok_or_else(|| Error::NotGalois(order.label(target).to_string()))?;
    let base: [i64; 3] = sol.map(|v| v.round() as i64);
    let sep = (0..3)
        .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| (r[i] - r[j]).abs())
        .fold(f64::INFINITY, f64::min);
    for d0 in -1..=1 {
        for d1 in -1..=1 {
            for d2 in -1..=1 {
                let c = AlgInt::from_i64([base[0] + d0, base[1] + d1, base[2] + d2]);
                if !order.eval_min_poly(&c).is_zero() {
                    continue;
                }
                if (order.approx(&c, p) - r[target]).abs() < sep / 2.0 {
                    return Ok(c);
                }
            }
        }
    }
    Err(Error::NotGalois(order.label(target).to_string()))
}

/// Solves a 3x3 linear system by Gaussian elimination with partial pivoting.
fn solve3(mut m: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] -= f * m[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for i in (0..3).rev() {
        let s: f64 = (i + 1..3).map(|k| m[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / m[i][i];
    }
    Some(x)
}

/// Checks that every isolated root lies strictly inside its closed-form rational bounds.
///
/// Bounds are known for the simplest cubic fields (`a >= 7`), Ennola I (`a >= 3`) and
/// Ennola II (`a >= 5`).
pub fn root_bounds_check(f: FamilyId) -> Result<()> {
    let order = construct(f)?;
    for (label, lo, hi) in root_bounds(f)? {
        let name = order.label(label).to_string();
        if !root_above(&order, label, lo) || !root_below(&order, label, hi) {
            return Err(Error::BoundViolated(format!(
                "{name} = {} not in ({}/{}, {}/{})",
                order.root_approx(label),
                lo.0,
                lo.1,
                hi.0,
                hi.1
            )));
        }
    }
    Ok(())
}

type Frac = (i64, i64);

/// Rational bounds `(label, lower, upper)` for each root.
pub fn root_bounds(f: FamilyId) -> Result<Vec<(usize, Frac, Frac)>> {
    match f {
        FamilyId::SimplestCubic(a) if a >= 7 => Ok(vec![
            (0, (a + 1, 1), (a * a + a + 2, a)),
            (1, (-(a + 2), a + 1), (-(a + 3), a + 2)),
            (2, (-1, a + 2), (-1, a + 3)),
        ]),
        FamilyId::EnnolaI(a) if a >= 3 => Ok(vec![
            (0, (a + 4, a + 3), (a + 3, a + 2)),
            (1, (-1, a), (-1, a + 1)),
            (2, (-a * (a * a + a) + 1, a * a + a), (-a * a * a + 1, a * a)),
        ]),
        FamilyId::EnnolaII(a) if a >= 5 => Ok(vec![
            (0, (a * a * a * a + a - 1, a * a * a), (a * a * a * a * a + a * a - 1, a * a * a * a)),
            (1, (-(a - 1), a), (-(a - 2), a - 1)),
            (2, (-1, a - 2), (-1, a - 1)),
        ]),
        _ => Err(Error::ParameterOutOfRange(format!("no closed-form root bounds for {f}"))),
    }
}

/// True iff the root with label `i` is strictly greater than `n/d` (`d > 0`).
fn root_above(order: &OrderSpec, i: usize, (n, d): Frac) -> bool {
    let mut k = 32;
    loop {
        let cell = order.root_cell(i, k);
        let scaled = BigInt::from(n) << k;
        // Root lies in (cell, cell+1) / 2^k.
        if &cell * d >= scaled {
            return true;
        }
        if (&cell + 1) * d <= scaled {
            return false;
        }
        k *= 2;
    }
}

/// True iff the root with label `i` is strictly smaller than `n/d` (`d > 0`).
fn root_below(order: &OrderSpec, i: usize, (n, d): Frac) -> bool {
    let mut k = 32;
    loop {
        let cell = order.root_cell(i, k);
        let scaled = BigInt::from(n) << k;
        if (&cell + 1) * d <= scaled {
            return true;
        }
        if &cell * d >= scaled {
            return false;
        }
        k *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_of_families() {
        assert_eq!(FamilyId::EnnolaI(3).coeffs(), (2, -3, -1));
        assert_eq!(FamilyId::SimplestCubic(4).coeffs(), (-4, -7, -1));
        assert_eq!(FamilyId::ABFamily(2, 4).coeffs(), (-6, 8, -1));
        assert!(construct(FamilyId::EnnolaI(2)).is_err());
        assert!(construct(FamilyId::ABFamily(2, 3)).is_err());
    }

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "ennola1:a=5".parse().unwrap();
        assert_eq!(s.family, FamilyId::EnnolaI(5));
        let g: FamilySpec = "generic:p=0,q=-3,r=1,u1=(0,1,0),u2=(-1,1,0)".parse().unwrap();
        assert_eq!(g.family, FamilyId::Generic(0, -3, 1));
        assert_eq!(g.units.unwrap().1, AlgInt::from_i64([-1, 1, 0]));
        assert!("ennola1:b=5".parse::<FamilySpec>().is_err());
        assert!("simplest:a=4,u1=(1,0,0),u2=(1,0,0)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn simplest_conjugate_in_rho_prime_presentation() {
        for a in -1..12 {
            let o = construct_at(FamilyId::SimplestCubic(a), 1).unwrap();
            assert_eq!(express_conjugate(&o, 0).unwrap(), AlgInt::from_i64([-2, -(a + 1), 1]));
            assert_eq!(express_conjugate(&o, 1).unwrap(), AlgInt::x());
        }
    }

    #[test]
    fn cyclic_generic_field_is_galois() {
        let o = construct(FamilyId::Generic(0, -3, 1)).unwrap();
        for t in 0..3 {
            let c = express_conjugate(&o, t).unwrap();
            assert!(o.eval_min_poly(&c).is_zero());
        }
        let e = construct(FamilyId::EnnolaI(4)).unwrap();
        assert!(matches!(express_conjugate(&e, 1), Err(Error::NotGalois(_))));
    }

    #[test]
    fn family_units_are_independent_units() {
        let fams = [
            FamilyId::SimplestCubic(-1),
            FamilyId::SimplestCubic(5),
            FamilyId::EnnolaI(3),
            FamilyId::EnnolaII(5),
            FamilyId::EnnolaII(9),
            FamilyId::ABFamily(2, 5),
        ];
        for f in fams {
            for primary in 0..3 {
                let o = construct_at(f, primary).unwrap();
                let (u1, u2) = o.units().unwrap();
                assert!(o.is_unit(u1) && o.is_unit(u2), "{f}");
                for k in -8..=8i64 {
                    let p1 = o.unit_pow(u1, k).unwrap();
                    let p2 = o.unit_pow(u2, k).unwrap();
                    assert!(p1 != *u2 && p1 != -u2.clone(), "{f}");
                    assert!(p2 != *u1 && p2 != -u1.clone(), "{f}");
                }
            }
        }
    }

    #[test]
    fn root_bounds_small_cases() {
        root_bounds_check(FamilyId::EnnolaI(5)).unwrap();
        root_bounds_check(FamilyId::SimplestCubic(7)).unwrap();
        root_bounds_check(FamilyId::EnnolaII(5)).unwrap();
        assert!(root_bounds_check(FamilyId::SimplestCubic(3)).is_err());
    }
}
