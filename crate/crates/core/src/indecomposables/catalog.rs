//! Closed-form catalogs of indecomposable representatives for the parametric families.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::cubic::{AlgInt, OrderSpec};
use crate::error::{Error, Result};
use crate::families::FamilyId;

/// Name of a catalog representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogLabel {
    /// The element `1`.
    One,
    /// The exceptional element `1 + x + x^2` of the simplest cubic fields.
    Exceptional,
    /// `theta_{v,W} = -v - (v(a+2)+1+W) x + (v+1) x^2`.
    Theta(i64, i64),
    /// `kappa_s = 1 + s x + x^2`.
    Kappa(i64),
    /// `lambda_{v,w} = -v - (a(v-1)+w) x + (a(v-1)+w+1) x^2`.
    Lambda(i64, i64),
    /// `mu_u = -1 - u x + (u+2) x^2`.
    Mu(i64),
    /// `kappa~_w = 1-w+aw + (1-w+aw) x - w x^2`.
    KappaTilde(i64),
    /// `lambda~_{v,u} = 1+v-u+au + (a-u+au) x - (u+1) x^2`.
    LambdaTilde(i64, i64),
    /// `mu~_z = z+2 + (z+4) x + x^2`.
    MuTilde(i64),
}

impl CatalogLabel {
    /// Renders the label; `primes` is appended to the symbol (e.g. `'` for the first conjugate).
    pub fn render(&self, var: &str) -> String {
        let primes: String = var.chars().filter(|&c| c == '\'').collect();
        match *self {
            CatalogLabel::One => "1".to_string(),
            CatalogLabel::Exceptional => format!("1+{var}+{var}^2"),
            CatalogLabel::Theta(v, w) => format!("theta{primes}_{{{v},{w}}}"),
            CatalogLabel::Kappa(s) => format!("kappa{primes}_{{{s}}}"),
            CatalogLabel::Lambda(v, w) => format!("lambda{primes}_{{{v},{w}}}"),
            CatalogLabel::Mu(u) => format!("mu{primes}_{{{u}}}"),
            CatalogLabel::KappaTilde(w) => format!("kappa~{primes}_{{{w}}}"),
            CatalogLabel::LambdaTilde(v, u) => format!("lambda~{primes}_{{{v},{u}}}"),
            CatalogLabel::MuTilde(z) => format!("mu~{primes}_{{{z}}}"),
        }
    }
}

impl fmt::Display for CatalogLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

/// One catalog representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// Family label with indices.
    pub label: CatalogLabel,
    /// Coordinates in the power basis of the presenting root.
    pub value: AlgInt,
}

/// Representatives of the indecomposable integers of a family order, up to units.
///
/// Coordinates are polynomials in the generator `x`, so the same catalog describes the
/// conjugate families (primed labels) when the order is presented by another root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndecomposableCatalog {
    /// Family and parameter.
    pub family: FamilyId,
    /// Representatives in a fixed order.
    pub entries: Vec<CatalogEntry>,
}

/// `theta_{v,W}` of the simplest cubic fields.
pub fn theta(a: i64, v: i64, w: i64) -> AlgInt {
    AlgInt::from_i64([-v, -(v * (a + 2) + 1 + w), v + 1])
}

/// `kappa_s` of Ennola I.
pub fn kappa(s: i64) -> AlgInt {
    AlgInt::from_i64([1, s, 1])
}

/// `lambda_{v,w}` of Ennola I.
pub fn lambda(a: i64, v: i64, w: i64) -> AlgInt {
    AlgInt::from_i64([-v, -(a * (v - 1) + w), a * (v - 1) + w + 1])
}

/// `mu_u` of Ennola I.
pub fn mu(u: i64) -> AlgInt {
    AlgInt::from_i64([-1, -u, u + 2])
}

/// `kappa~_w` of Ennola II.
pub fn kappa_tilde(a: i64, w: i64) -> AlgInt {
    let c = 1 - w + a * w;
    AlgInt::from_i64([c, c, -w])
}

/// `lambda~_{v,u}` of Ennola II.
pub fn lambda_tilde(a: i64, v: i64, u: i64) -> AlgInt {
    AlgInt::from_i64([1 + v - u + a * u, a - u + a * u, -(u + 1)])
}

/// `mu~_z` of Ennola II.
pub fn mu_tilde(z: i64) -> AlgInt {
    AlgInt::from_i64([z + 2, z + 4, 1])
}

/// Index pairs `(v, w)` of the Ennola I lambda family.
pub fn lambda_indices(a: i64) -> Vec<(i64, i64)> {
    (1..a)
        .flat_map(|v| (1.max(v - 1)..a).map(move |w| (v, w)))
        .collect()
}

/// Index pairs `(v, u)` of the Ennola II lambda~ family.
pub fn lambda_tilde_indices(a: i64) -> Vec<(i64, i64)> {
    (1..=a - 3)
        .flat_map(|v| (0..=v).map(move |u| (v, u)))
        .filter(|&vu| vu != (1, 0))
        .collect()
}

/// The catalog of a family with parameter `a` taken from the family id.
pub fn catalog(family: FamilyId) -> Result<IndecomposableCatalog> {
    family.validate()?;
    let mut entries = vec![CatalogEntry {
        label: CatalogLabel::One,
        value: AlgInt::one(),
    }];
    let mut push = |label, value| entries.push(CatalogEntry { label, value });
    match family {
        FamilyId::SimplestCubic(a) => {
            push(CatalogLabel::Exceptional, AlgInt::from_i64([1, 1, 1]));
            for v in 0..=a {
                for w in 0..=a - v {
                    push(CatalogLabel::Theta(v, w), theta(a, v, w));
                }
            }
        }
        FamilyId::EnnolaI(a) => {
            for s in 1..a {
                push(CatalogLabel::Kappa(s), kappa(s));
            }
            for (v, w) in lambda_indices(a) {
                push(CatalogLabel::Lambda(v, w), lambda(a, v, w));
            }
            for u in 0..=a - 2 {
                push(CatalogLabel::Mu(u), mu(u));
            }
        }
        FamilyId::EnnolaII(a) => {
            for w in 1..=a - 3 {
                push(CatalogLabel::KappaTilde(w), kappa_tilde(a, w));
            }
            for (v, u) in lambda_tilde_indices(a) {
                push(CatalogLabel::LambdaTilde(v, u), lambda_tilde(a, v, u));
            }
            for z in 0..=a - 4 {
                push(CatalogLabel::MuTilde(z), mu_tilde(z));
            }
        }
        FamilyId::ABFamily(..) | FamilyId::Generic(..) => {
            return Err(Error::ParameterOutOfRange(format!(
                "no closed-form catalog for {family}"
            )))
        }
    }
    Ok(IndecomposableCatalog { family, entries })
}

impl IndecomposableCatalog {
    /// Number of representatives.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True iff there are no representatives.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Finds a representative associated to `x`, returning its label and the unit `x / entry`.
    pub fn find_associate(&self, order: &OrderSpec, x: &AlgInt) -> Option<(CatalogLabel, AlgInt)> {
        let n = order.norm(x).magnitude().clone();
        self.entries.iter().find_map(|e| {
            if order.norm(&e.value).magnitude() != &n {
                return None;
            }
            order.is_associated(x, &e.value).ok().map(|u| (e.label, u))
        })
    }

    /// CSV rows `family,a,label,v1,v2,v3,norm,trace,signature` rendered in the order's presentation.
    pub fn csv_rows(&self, order: &OrderSpec) -> Result<Vec<[String; 9]>> {
        let var = order.label(order.primary());
        let a = self.family.a().map(|a| a.to_string()).unwrap_or_default();
        self.entries
            .iter()
            .map(|e| {
                Ok([
                    self.family.tag().to_string(),
                    a.clone(),
                    e.label.render(var),
                    e.value.c[0].to_string(),
                    e.value.c[1].to_string(),
                    e.value.c[2].to_string(),
                    order.norm(&e.value).to_string(),
                    order.trace(&e.value).to_string(),
                    order.signature(&e.value)?.to_string(),
                ])
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog(FamilyId::EnnolaI(4)).unwrap().len(), 15);
        assert_eq!(catalog(FamilyId::SimplestCubic(2)).unwrap().len(), 8);
        assert!(catalog(FamilyId::Generic(0, -3, 1)).is_err());
    }

    #[test]
    fn lambda_one_one() {
        assert_eq!(lambda(3, 1, 1), AlgInt::from_i64([-1, -1, 2]));
    }

    #[test]
    fn labels_render_with_primes() {
        assert_eq!(CatalogLabel::Theta(0, 0).render("rho'"), "theta'_{0,0}");
        assert_eq!(CatalogLabel::LambdaTilde(2, 1).render("psi''"), "lambda~''_{2,1}");
        assert_eq!(CatalogLabel::Exceptional.render("rho'"), "1+rho'+rho'^2");
    }
}
