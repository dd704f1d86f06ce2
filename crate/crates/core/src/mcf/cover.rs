//! Checks whether a coset `beta_3 u + <beta_1 u, beta_2 u>` of a JPA state contains a whole
//! family of indecomposables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::record::ExpansionRecord;
use crate::cubic::{AlgInt, OrderSpec, Sign, UnitFactor};
use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::indecomposables::catalog::{lambda, lambda_indices, lambda_tilde, lambda_tilde_indices};

/// Outcome of the cover check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverVerdict {
    /// Every element of the set lies in the coset.
    Covered,
    /// The lattice matches but some element lies outside the coset.
    NotCovered,
    /// The lattice spanned by the state does not equal the difference lattice of the set.
    HypothesisFails,
}

/// Full report of a cover check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    /// Verdict.
    pub verdict: CoverVerdict,
    /// Whether `<beta_1 u, beta_2 u>` equals the difference lattice of the set.
    pub lattice_matches: bool,
    /// Whether `|N(beta_3)| <= a^2 - 5a`.
    pub norm_bound_holds: bool,
    /// `N(beta_3)`.
    #[serde(with = "crate::cubic::algint::bigint_serde")]
    pub norm: BigInt,
    /// Number of set elements inside the coset.
    pub covered: usize,
    /// Size of the set.
    pub total: usize,
}

/// The lambda family of Ennola I or the lambda~ family of Ennola II, in the power basis.
pub fn family_set(family: FamilyId) -> Result<Vec<AlgInt>> {
    family.validate()?;
    match family {
        FamilyId::EnnolaI(a) => Ok(lambda_indices(a).into_iter().map(|(v, w)| lambda(a, v, w)).collect()),
        FamilyId::EnnolaII(a) => Ok(lambda_tilde_indices(a)
            .into_iter()
            .map(|(v, u)| lambda_tilde(a, v, u))
            .collect()),
        _ => Err(Error::ParameterOutOfRange(format!("no lambda family for {family}"))),
    }
}

/// Row-style Hermite normal form of the lattice generated by `rows`.
pub fn hnf(rows: &[[BigInt; 3]]) -> Vec<[BigInt; 3]> {
    let mut m: Vec<[BigInt; 3]> = rows.iter().filter(|r| r.iter().any(|v| !v.is_zero())).cloned().collect();
    let mut r = 0;
    for col in 0..3 {
        loop {
            let Some(piv) = (r..m.len())
                .filter(|&i| !m[i][col].is_zero())
                .min_by_key(|&i| m[i][col].abs())
            else {
                break;
            };
            m.swap(r, piv);
            let mut done = true;
            for i in r + 1..m.len() {
                if !m[i][col].is_zero() {
                    let q = m[i][col].div_floor(&m[r][col]);
                    let pr = m[r].clone();
                    for (c, p) in m[i].iter_mut().zip(&pr) {
                        *c -= &q * p;
                    }
                    done &= m[i][col].is_zero();
                }
            }
            if done {
                if m[r][col].is_negative() {
                    for c in m[r].iter_mut() {
                        *c = -c.clone();
                    }
                }
                let pr = m[r].clone();
                for i in 0..r {
                    let q = m[i][col].div_floor(&pr[col]);
                    for (c, p) in m[i].iter_mut().zip(&pr) {
                        *c -= &q * p;
                    }
                }
                r += 1;
                break;
            }
        }
        m.retain(|row| row.iter().any(|v| !v.is_zero()));
    }
    m.truncate(r);
    m
}

/// HNF of the difference lattice `<s - s_0 : s in set>`.
pub fn difference_lattice(set: &[AlgInt]) -> Vec<[BigInt; 3]> {
    let Some(first) = set.first() else { return Vec::new() };
    let diffs: Vec<[BigInt; 3]> = set.iter().map(|s| (s - first).c).collect();
    hnf(&diffs)
}

fn contains(basis: &[[BigInt; 3]], v: &AlgInt) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.c.clone());
    hnf(&rows) == basis
}

/// Tests `set ⊂ beta_3 u + <beta_1 u, beta_2 u>` at step `k`, together with the lattice and
/// norm hypotheses.
pub fn lattice_cover_check(order: &OrderSpec, rec: &ExpansionRecord, k: usize, set: &[AlgInt], u: &AlgInt) -> Result<CoverReport> {
    let a = order
        .family()
        .and_then(FamilyId::a)
        .ok_or_else(|| Error::ParameterOutOfRange("the cover check needs a family parameter".into()))?;
    let b = rec.state(k);
    let lat = hnf(&[order.mul(&b[0], u).c, order.mul(&b[1], u).c]);
    let lattice_matches = lat == difference_lattice(set);
    let norm = order.norm(&b[2]);
    let norm_bound_holds = norm.abs() <= BigInt::from(a * a - 5 * a);
    let shift = order.mul(&b[2], u);
    let covered = set.iter().filter(|s| contains(&lat, &(*s - &shift))).count();
    let verdict = if covered == set.len() {
        CoverVerdict::Covered
    } else if !lattice_matches {
        CoverVerdict::HypothesisFails
    } else {
        CoverVerdict::NotCovered
    };
    Ok(CoverReport {
        verdict,
        lattice_matches,
        norm_bound_holds,
        norm,
        covered,
        total: set.len(),
    })
}

/// Units `+-u1^k u2^l` with `|k|, |l| <= bound` for which `<beta_1 u, beta_2 u>` equals the
/// difference lattice of `set` at step `k`.
pub fn matching_units(order: &OrderSpec, rec: &ExpansionRecord, k: usize, set: &[AlgInt], bound: i64) -> Result<Vec<AlgInt>> {
    let target = difference_lattice(set);
    let b = rec.state(k);
    let mut out = Vec::new();
    for e1 in -bound..=bound {
        for e2 in -bound..=bound {
            for sign in [Sign::Pos, Sign::Neg] {
                let u = order.unit_compose(UnitFactor { sign, k: e1, l: e2 })?;
                if hnf(&[order.mul(&b[0], &u).c, order.mul(&b[1], &u).c]) == target {
                    out.push(u);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: [i64; 3]) -> [BigInt; 3] {
        v.map(BigInt::from)
    }

    #[test]
    fn hnf_of_equivalent_bases_agrees() {
        let a = hnf(&[row([2, 0, 1]), row([0, 3, 1])]);
        let b = hnf(&[row([2, 3, 2]), row([0, -3, -1]), row([4, 3, 3])]);
        let half = hnf(&[row([2, 3, 2]), row([-2, 3, 0]), row([4, 0, 2])]);
        assert_ne!(a, half);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert!(contains(&a, &AlgInt::from_i64([2, 3, 2])));
        assert!(!contains(&a, &AlgInt::from_i64([1, 0, 0])));
    }
}
