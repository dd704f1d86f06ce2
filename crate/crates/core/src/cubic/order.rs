//! The order `Z[x]/(f)` of a totally real monic cubic, with exact ring arithmetic,
//! certified embedding signs and unit machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::algint::AlgInt;
use super::roots::RootSet;
use super::signature::{Sign, Signature};
use crate::error::{Error, Result};
use crate::families::FamilyId;

/// Default bound on unit exponents searched by [`OrderSpec::unit_decompose`].
pub const UNIT_EXPONENT_BOUND: i64 = 64;

/// Outcome of comparing two elements in every real embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TotalOrder {
    /// The elements are equal.
    Equal,
    /// The first element is smaller in every embedding.
    Less,
    /// The first element is larger in every embedding.
    Greater,
    /// The embeddings disagree on the order.
    Incomparable,
}

/// A unit written as `sign * u1^k * u2^l` in the fundamental units of the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitFactor {
    /// Sign in front of the power product.
    pub sign: Sign,
    /// Exponent of the first fundamental unit.
    pub k: i64,
    /// Exponent of the second fundamental unit.
    pub l: i64,
}

impl UnitFactor {
    /// The trivial factorization of `1`.
    pub const ONE: UnitFactor = UnitFactor {
        sign: Sign::Pos,
        k: 0,
        l: 0,
    };

    /// Product of two factorizations.
    pub fn times(self, o: UnitFactor) -> UnitFactor {
        UnitFactor {
            sign: self.sign * o.sign,
            k: self.k + o.k,
            l: self.l + o.l,
        }
    }

    /// Inverse factorization.
    pub fn inverse(self) -> UnitFactor {
        UnitFactor {
            sign: self.sign,
            k: -self.k,
            l: -self.l,
        }
    }
}

impl fmt::Display for UnitFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.sign, self.k, self.l)
    }
}

#[derive(Debug)]
struct Inner {
    pqr: [i64; 3],
    big: [BigInt; 3],
    roots: Arc<RootSet>,
    labels: [String; 3],
    label_to_sorted: [usize; 3],
    primary: usize,
    units: Option<(AlgInt, AlgInt)>,
    family: Option<FamilyId>,
}

/// A monic cubic order `Z[x]/(f)`, `f = x^3 + p x^2 + q x + r`, with three real roots.
///
/// Roots are labelled; every embedding index taken by the public API is a label index, so
/// signatures are reported in label order. The generator `x` denotes the root with label
/// `primary`, which is also the default tracking embedding of the expansion engines.
/// Cloning is cheap and clones share the root refinement cache.
#[derive(Clone)]
pub struct OrderSpec {
    inner: Arc<Inner>,
}

impl fmt::Debug for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.inner.pqr;
        write!(
            f,
            "OrderSpec(x^3{p:+}x^2{q:+}x{r:+}, x = {})",
            self.inner.labels[self.inner.primary]
        )
    }
}

/// Discriminant of `x^3 + p x^2 + q x + r`.
pub fn discriminant(p: i64, q: i64, r: i64) -> BigInt {
    let (p, q, r) = (BigInt::from(p), BigInt::from(q), BigInt::from(r));
    &p * &p * &q * &q - 4 * &q * &q * &q - 4 * &p * &p * &p * &r - 27 * &r * &r
        + 18 * &p * &q * &r
}

impl OrderSpec {
    /// Builds the order of `x^3 + p x^2 + q x + r` with ascending labels `r0 < r1 < r2`.
    ///
    /// Rejects polynomials that are not totally real or that have a rational root.
    pub fn new(p: i64, q: i64, r: i64) -> Result<OrderSpec> {
        let disc = discriminant(p, q, r);
        if !disc.is_positive() {
            return Err(Error::NotTotallyReal {
                p,
                q,
                r,
                disc: disc.to_string(),
            });
        }
        if let Some(root) = rational_root(p, q, r) {
            return Err(Error::Reducible {
                root: root.to_string(),
            });
        }
        let roots = Arc::new(RootSet::isolate(p, q, r));
        Ok(OrderSpec {
            inner: Arc::new(Inner {
                pqr: [p, q, r],
                big: [BigInt::from(p), BigInt::from(q), BigInt::from(r)],
                roots,
                labels: ["r0".into(), "r1".into(), "r2".into()],
                label_to_sorted: [0, 1, 2],
                primary: 0,
                units: None,
                family: None,
            }),
        })
    }

    fn edit(&self, f: impl FnOnce(&mut Inner)) -> OrderSpec {
        let i = &self.inner;
        let mut inner = Inner {
            pqr: i.pqr,
            big: i.big.clone(),
            roots: Arc::clone(&i.roots),
            labels: i.labels.clone(),
            label_to_sorted: i.label_to_sorted,
            primary: i.primary,
            units: i.units.clone(),
            family: i.family,
        };
        f(&mut inner);
        OrderSpec {
            inner: Arc::new(inner),
        }
    }

    /// Replaces the labels; `label_to_sorted[j]` is the ascending position of label `j`.
    pub fn with_labels(&self, labels: [&str; 3], label_to_sorted: [usize; 3]) -> OrderSpec {
        let mut seen = [false; 3];
        for &s in &label_to_sorted {
            assert!(s < 3 && !seen[s], "label map must be a permutation");
            seen[s] = true;
        }
        self.edit(|i| {
            i.labels = labels.map(String::from);
            i.label_to_sorted = label_to_sorted;
        })
    }

    /// Chooses which labelled root the generator `x` denotes.
    pub fn with_primary(&self, label: usize) -> OrderSpec {
        assert!(label < 3);
        self.edit(|i| i.primary = label)
    }

    /// Attaches fundamental units after checking that both are units and independent.
    pub fn with_units(&self, u1: AlgInt, u2: AlgInt) -> Result<OrderSpec> {
        for u in [&u1, &u2] {
            if !self.is_unit(u) {
                return Err(Error::InvalidUnits(format!("{u:?} has norm {}", self.norm(u))));
            }
        }
        let det = self.ln_abs(&u1, 0) * self.ln_abs(&u2, 1) - self.ln_abs(&u1, 1) * self.ln_abs(&u2, 0);
        if det.abs() < 1e-6 {
            return Err(Error::InvalidUnits("units are multiplicatively dependent".into()));
        }
        Ok(self.edit(|i| i.units = Some((u1, u2))))
    }

    /// Drops the fundamental units.
    pub fn without_units(&self) -> OrderSpec {
        self.edit(|i| i.units = None)
    }

    /// Records the family the order was constructed from.
    pub fn with_family(&self, family: FamilyId) -> OrderSpec {
        self.edit(|i| i.family = Some(family))
    }

    /// Coefficients `(p, q, r)`.
    pub fn coeffs(&self) -> (i64, i64, i64) {
        let [p, q, r] = self.inner.pqr;
        (p, q, r)
    }

    /// Discriminant of the defining polynomial.
    pub fn discriminant(&self) -> BigInt {
        let (p, q, r) = self.coeffs();
        discriminant(p, q, r)
    }

    /// Root labels in label order.
    pub fn labels(&self) -> [&str; 3] {
        let l = &self.inner.labels;
        [l[0].as_str(), l[1].as_str(), l[2].as_str()]
    }

    /// Label of embedding `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    /// Resolves a label name to its index.
    pub fn label_index(&self, name: &str) -> Result<usize> {
        self.inner
            .labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// Ascending position of the root with label `i`.
    pub fn sorted_index(&self, i: usize) -> usize {
        self.inner.label_to_sorted[i]
    }

    /// Label index of the root denoted by `x`.
    pub fn primary(&self) -> usize {
        self.inner.primary
    }

    /// Family the order was built from, if any.
    pub fn family(&self) -> Option<FamilyId> {
        self.inner.family
    }

    /// Fundamental units, if attached.
    pub fn units(&self) -> Result<(&AlgInt, &AlgInt)> {
        self.inner
            .units
            .as_ref()
            .map(|(a, b)| (a, b))
            .ok_or(Error::MissingUnits)
    }

    /// True iff fundamental units are attached.
    pub fn has_units(&self) -> bool {
        self.inner.units.is_some()
    }

    /// Map from embedding index to label index such that embedding `i` sends `x` to root `i`.
    ///
    /// Embedding `e` of the abstract order evaluates `x` at the root labelled `e`; this is
    /// the root used by every sign, floor and comparison query.
    fn root_of(&self, emb: usize) -> usize {
        self.inner.label_to_sorted[emb]
    }

    /// Approximate real value of the root with label `i`.
    pub fn root_approx(&self, i: usize) -> f64 {
        self.inner.roots.approx(self.root_of(i))
    }

    /// Left endpoint numerator of a dyadic enclosure of the root with label `i`.
    pub fn root_cell(&self, i: usize, k: u32) -> BigInt {
        self.inner.roots.cell(self.root_of(i), k)
    }

    // ----- ring arithmetic -------------------------------------------------------------

    /// Product in the order, reducing `x^3` and `x^4` by the minimal polynomial.
    pub fn mul(&self, a: &AlgInt, b: &AlgInt) -> AlgInt {
        let [p, q, r] = &self.inner.big;
        let (a, b) = (&a.c, &b.c);
        let c0 = &a[0] * &b[0];
        let c1 = &a[0] * &b[1] + &a[1] * &b[0];
        let c2 = &a[0] * &b[2] + &a[1] * &b[1] + &a[2] * &b[0];
        let c3 = &a[1] * &b[2] + &a[2] * &b[1];
        let c4 = &a[2] * &b[2];
        if c3.is_zero() && c4.is_zero() {
            return AlgInt { c: [c0, c1, c2] };
        }
        // x^3 = -p x^2 - q x - r and x^4 = (p^2 - q) x^2 + (pq - r) x + pr.
        AlgInt {
            c: [
                c0 - r * &c3 + p * r * &c4,
                c1 - q * &c3 + (p * q - r) * &c4,
                c2 - p * &c3 + (p * p - q) * &c4,
            ],
        }
    }

    /// Square of an element.
    pub fn square(&self, a: &AlgInt) -> AlgInt {
        self.mul(a, a)
    }

    /// `a * x`.
    pub fn mul_x(&self, a: &AlgInt) -> AlgInt {
        let [p, q, r] = &self.inner.big;
        AlgInt {
            c: [-r * &a.c[2], &a.c[0] - q * &a.c[2], &a.c[1] - p * &a.c[2]],
        }
    }

    /// Non-negative power.
    pub fn pow(&self, a: &AlgInt, mut e: u64) -> AlgInt {
        let mut base = a.clone();
        let mut acc = AlgInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Multiplication matrix: column `j` holds the coordinates of `a * x^j`.
    pub fn mul_matrix(&self, a: &AlgInt) -> [[BigInt; 3]; 3] {
        let c0 = a.clone();
        let c1 = self.mul_x(&c0);
        let c2 = self.mul_x(&c1);
        let cols = [c0, c1, c2];
        std::array::from_fn(|i| std::array::from_fn(|j| cols[j].c[i].clone()))
    }

    /// Norm: the product of the three embeddings, as the determinant of the multiplication matrix.
    pub fn norm(&self, a: &AlgInt) -> BigInt {
        det3(&self.mul_matrix(a))
    }

    /// Trace: the sum of the three embeddings.
    pub fn trace(&self, a: &AlgInt) -> BigInt {
        let [p, q, _] = &self.inner.big;
        3 * &a.c[0] - p * &a.c[1] + (p * p - 2 * q) * &a.c[2]
    }

    /// Element `b` with `a * b = N(a)`: the first column of the adjugate of the multiplication matrix.
    pub fn adjugate(&self, a: &AlgInt) -> AlgInt {
        let m = self.mul_matrix(a);
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        // adj[i][0] = cofactor of entry (0, i).
        AlgInt {
            c: [cof(1, 2, 1, 2), -cof(1, 2, 0, 2), cof(1, 2, 0, 1)],
        }
    }

    /// Exact quotient `a / b` inside the order.
    pub fn divide_exact(&self, a: &AlgInt, b: &AlgInt) -> Result<AlgInt> {
        if b.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if b.is_rational() {
            let d = &b.c[0];
            let mut out = AlgInt::zero();
            for k in 0..3 {
                let (qk, rk) = a.c[k].div_rem(d);
                if !rk.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.c[k] = qk;
            }
            return Ok(out);
        }
        let n = self.norm(b);
        let t = self.mul(a, &self.adjugate(b));
        let mut out = AlgInt::zero();
        for k in 0..3 {
            let (qk, rk) = t.c[k].div_rem(&n);
            if !rk.is_zero() {
                return Err(Error::NotDivisible);
            }
            out.c[k] = qk;
        }
        Ok(out)
    }

    /// True iff the norm is `1` or `-1`.
    pub fn is_unit(&self, a: &AlgInt) -> bool {
        self.norm(a).abs().is_one()
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self, u: &AlgInt) -> Result<AlgInt> {
        let n = self.norm(u);
        if !n.abs().is_one() {
            return Err(Error::NotAUnit);
        }
        Ok(self.adjugate(u).scale(&n))
    }

    /// Integer power of a unit; negative exponents use the inverse.
    pub fn unit_pow(&self, u: &AlgInt, e: i64) -> Result<AlgInt> {
        if e >= 0 {
            Ok(self.pow(u, e as u64))
        } else {
            Ok(self.pow(&self.unit_inverse(u)?, e.unsigned_abs()))
        }
    }

    /// Value of the defining polynomial at an order element.
    pub fn eval_min_poly(&self, c: &AlgInt) -> AlgInt {
        let [p, q, r] = &self.inner.big;
        let c2 = self.square(c);
        let c3 = self.mul(&c2, c);
        let mut out = c3 + c2.scale(p) + c.scale(q);
        out.c[0] += r;
        out
    }

    /// The derivative `f'(x) = 3x^2 + 2p x + q` as an order element.
    pub fn f_prime(&self) -> AlgInt {
        let [p, q, _] = &self.inner.big;
        AlgInt::new(q.clone(), 2 * p, 3)
    }

    // ----- embeddings ------------------------------------------------------------------

    /// Certified sign of embedding `i` of a nonzero element.
    pub fn embed_sign(&self, a: &AlgInt, i: usize) -> Result<Sign> {
        match self.inner.roots.sign(a, self.root_of(i)) {
            Ordering::Greater => Ok(Sign::Pos),
            Ordering::Less => Ok(Sign::Neg),
            Ordering::Equal => Err(Error::ZeroElement),
        }
    }

    /// Signature of a nonzero element in label order.
    pub fn signature(&self, a: &AlgInt) -> Result<Signature> {
        Ok(Signature([
            self.embed_sign(a, 0)?,
            self.embed_sign(a, 1)?,
            self.embed_sign(a, 2)?,
        ]))
    }

    /// Sign of embedding `i`, with `Equal` for zero.
    pub fn sign_at(&self, a: &AlgInt, i: usize) -> Ordering {
        self.inner.roots.sign(a, self.root_of(i))
    }

    /// Compares `a` and `b` in embedding `i`.
    pub fn cmp_at(&self, a: &AlgInt, b: &AlgInt, i: usize) -> Ordering {
        self.sign_at(&(a - b), i)
    }

    /// True iff every embedding is strictly positive.
    pub fn is_totally_positive(&self, a: &AlgInt) -> bool {
        (0..3).all(|i| self.sign_at(a, i) == Ordering::Greater)
    }

    /// Compares two elements in all embeddings.
    pub fn total_order_cmp(&self, a: &AlgInt, b: &AlgInt) -> TotalOrder {
        let d = b - a;
        if d.is_zero() {
            return TotalOrder::Equal;
        }
        let s: Vec<Ordering> = (0..3).map(|i| self.sign_at(&d, i)).collect();
        if s.iter().all(|&o| o == Ordering::Greater) {
            TotalOrder::Less
        } else if s.iter().all(|&o| o == Ordering::Less) {
            TotalOrder::Greater
        } else {
            TotalOrder::Incomparable
        }
    }

    /// True iff `b - a` is totally non-negative.
    pub fn totally_le(&self, a: &AlgInt, b: &AlgInt) -> bool {
        matches!(self.total_order_cmp(a, b), TotalOrder::Equal | TotalOrder::Less)
    }

    /// Floor of embedding `i` of `num / den` for a positive integer `den`.
    pub fn floor_div_at(&self, num: &AlgInt, den: &BigInt, i: usize) -> BigInt {
        self.inner.roots.floor_div(num, den, self.root_of(i))
    }

    /// Floor of embedding `i` of `num / den` for order elements.
    pub fn floor_ratio(&self, num: &AlgInt, den: &AlgInt, i: usize) -> Result<BigInt> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if den.is_rational() {
            let d = &den.c[0];
            let (n, d) = if d.is_negative() { (-num, -d) } else { (num.clone(), d.clone()) };
            return Ok(self.floor_div_at(&n, &d, i));
        }
        let n = self.norm(den);
        let t = self.mul(num, &self.adjugate(den));
        let (t, n) = if n.is_negative() { (-t, -n) } else { (t, n) };
        Ok(self.floor_div_at(&t, &n, i))
    }

    /// Approximate real value of embedding `i`.
    pub fn approx(&self, a: &AlgInt, i: usize) -> f64 {
        self.inner.roots.approx_value(a, self.root_of(i))
    }

    /// `ln |sigma_i(a)|` for a nonzero element.
    pub fn ln_abs(&self, a: &AlgInt, i: usize) -> f64 {
        self.inner.roots.ln_abs(a, self.root_of(i))
    }

    // ----- units -----------------------------------------------------------------------

    /// Returns the unit `e` with `a = e * b`, or [`Error::NotAssociated`].
    pub fn is_associated(&self, a: &AlgInt, b: &AlgInt) -> Result<AlgInt> {
        if b.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if a.is_zero() || self.norm(a).abs() != self.norm(b).abs() {
            return Err(Error::NotAssociated);
        }
        match self.divide_exact(a, b) {
            Ok(q) if self.is_unit(&q) => Ok(q),
            _ => Err(Error::NotAssociated),
        }
    }

    /// Writes a unit as `sign * u1^k * u2^l` with `|k|, |l|` at most [`UNIT_EXPONENT_BOUND`].
    pub fn unit_decompose(&self, e: &AlgInt) -> Result<UnitFactor> {
        self.unit_decompose_bounded(e, UNIT_EXPONENT_BOUND)
    }

    /// Writes a unit as `sign * u1^k * u2^l` with `|k|, |l| <= bound`.
    pub fn unit_decompose_bounded(&self, e: &AlgInt, bound: i64) -> Result<UnitFactor> {
        if !self.is_unit(e) {
            return Err(Error::NotAUnit);
        }
        let (u1, u2) = self.units()?;
        let l = |v: &AlgInt, i: usize| self.ln_abs(v, i);
        // Any two embeddings give a nonsingular system because the regulator is nonzero;
        // pick the best conditioned pair.
        let mut best = (0usize, 1usize, 0.0f64);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = l(u1, i) * l(u2, j) - l(u1, j) * l(u2, i);
            if det.abs() > best.2.abs() {
                best = (i, j, det);
            }
        }
        let (i, j, det) = best;
        let (ei, ej) = (l(e, i), l(e, j));
        let k0 = (ei * l(u2, j) - ej * l(u2, i)) / det;
        let l0 = (l(u1, i) * ej - l(u1, j) * ei) / det;
        if !k0.is_finite() || !l0.is_finite() {
            return Err(Error::DecompositionNotFound { bound });
        }
        let (kr, lr) = (k0.round() as i64, l0.round() as i64);
        let u1i = self.unit_inverse(u1)?;
        let u2i = self.unit_inverse(u2)?;
        for radius in 0..=2i64 {
            for dk in -radius..=radius {
                for dl in -radius..=radius {
                    if dk.abs().max(dl.abs()) != radius {
                        continue;
                    }
                    let (k, ll) = (kr + dk, lr + dl);
                    if k.abs() > bound || ll.abs() > bound {
                        continue;
                    }
                    let inv_k = if k >= 0 {
                        self.pow(&u1i, k as u64)
                    } else {
                        self.pow(u1, k.unsigned_abs())
                    };
                    let inv_l = if ll >= 0 {
                        self.pow(&u2i, ll as u64)
                    } else {
                        self.pow(u2, ll.unsigned_abs())
                    };
                    let rest = self.mul(&self.mul(e, &inv_k), &inv_l);
                    if rest == AlgInt::one() {
                        return Ok(UnitFactor { sign: Sign::Pos, k, l: ll });
                    }
                    if rest == -AlgInt::one() {
                        return Ok(UnitFactor { sign: Sign::Neg, k, l: ll });
                    }
                }
            }
        }
        Err(Error::DecompositionNotFound { bound })
    }

    /// Recomposes `sign * u1^k * u2^l`.
    pub fn unit_compose(&self, f: UnitFactor) -> Result<AlgInt> {
        let (u1, u2) = self.units()?;
        let v = self.mul(&self.unit_pow(u1, f.k)?, &self.unit_pow(u2, f.l)?);
        Ok(match f.sign {
            Sign::Pos => v,
            Sign::Neg => -v,
        })
    }

    /// Formats an element using the label of the primary root as variable name.
    pub fn show(&self, a: &AlgInt) -> String {
        a.display_with(self.label(self.primary()))
    }

    /// JSON description `{"p","q","r","labels"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let (p, q, r) = self.coeffs();
        serde_json::json!({
            "p": p, "q": q, "r": r,
            "labels": self.labels(),
            "primary": self.label(self.primary()),
        })
    }
}

/// Determinant of a 3x3 integer matrix.
pub fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// A rational root of the monic polynomial, which must be an integer dividing `r`.
fn rational_root(p: i64, q: i64, r: i64) -> Option<i64> {
    if r == 0 {
        return Some(0);
    }
    let f = |x: i128| x * x * x + p as i128 * x * x + q as i128 * x + r as i128;
    let m = r.unsigned_abs();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            for c in [d, m / d] {
                for s in [c as i128, -(c as i128)] {
                    if f(s) == 0 {
                        return Some(s as i64);
                    }
                }
            }
        }
        d += 1;
    }
    None
}

/// Converts a small big integer, panicking only on values far outside any search range.
#[allow(dead_code)]
pub(crate) fn to_i64(v: &BigInt) -> i64 {
    v.to_i64().expect("value exceeds i64 range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ennola1(a: i64) -> OrderSpec {
        OrderSpec::new(a - 1, -a, -1)
            .unwrap()
            .with_labels(["rho", "rho'", "rho''"], [2, 1, 0])
            .with_primary(0)
    }

    #[test]
    fn rejects_reducible_and_complex() {
        assert!(matches!(OrderSpec::new(0, 0, -8), Err(Error::NotTotallyReal { .. })));
        assert!(matches!(OrderSpec::new(0, -7, 6), Err(Error::Reducible { .. })));
    }

    #[test]
    fn mul_reduces_by_minimal_polynomial() {
        for a in 3..10 {
            let o = ennola1(a);
            let x = AlgInt::x();
            let x2 = o.square(&x);
            assert_eq!(o.mul(&x, &x2), AlgInt::from_i64([1, a, -(a - 1)]));
        }
    }

    #[test]
    fn trace_and_norm_examples() {
        for a in 3..12 {
            let o = ennola1(a);
            assert_eq!(o.trace(&AlgInt::one()), BigInt::from(3));
            assert_eq!(o.trace(&AlgInt::x()), BigInt::from(-(a - 1)));
            let gamma = AlgInt::from_i64([a * a - 3 * a + 11, -(a * a - 5 * a + 1), -(a - 5)]);
            assert_eq!(o.trace(&gamma), BigInt::from(2 * a * a - 4 * a + 37));
            assert_eq!(o.norm(&AlgInt::from_i64([-1, 0, 1])), BigInt::from(-(2 * a - 3)));
            for s in -5..6 {
                let want = 2 * a * a + 2 * a + 1 + (a * a - 3 * a - 2) * s - (2 * a - 1) * s * s + s * s * s;
                assert_eq!(o.norm(&AlgInt::from_i64([1, s, 1])), BigInt::from(want));
            }
        }
    }

    #[test]
    fn signatures_follow_label_order() {
        let o = ennola1(5);
        assert_eq!(o.signature(&AlgInt::one()).unwrap(), Signature::TOTALLY_POSITIVE);
        assert_eq!(o.signature(&AlgInt::x()).unwrap(), Signature::from_ints([1, -1, -1]));
        assert_eq!(
            o.signature(&AlgInt::from_i64([-1, 0, 1])).unwrap(),
            Signature::from_ints([1, -1, 1])
        );
        assert_eq!(o.signature(&AlgInt::zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn divide_exact_examples() {
        let o = ennola1(4);
        let x = AlgInt::x();
        assert_eq!(o.divide_exact(&x, &AlgInt::one()).unwrap(), x);
        // x is a unit, so 2/x stays in the order; a non-unit divisor exposes NotDivisible.
        let two_over_x = o.divide_exact(&AlgInt::int(2), &x).unwrap();
        assert_eq!(o.mul(&two_over_x, &x), AlgInt::int(2));
        assert_eq!(o.divide_exact(&AlgInt::int(2), &AlgInt::from_i64([-1, 0, 1])), Err(Error::NotDivisible));
        assert_eq!(o.divide_exact(&x, &AlgInt::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn unit_decompose_round_trip() {
        let a = 6;
        let o = ennola1(a);
        let x = AlgInt::x();
        let xm1 = AlgInt::from_i64([-1, 1, 0]);
        let o = o.with_units(x.clone(), xm1.clone()).unwrap();
        let e = o.mul(&o.square(&x), &xm1);
        assert_eq!(o.unit_decompose(&e).unwrap(), UnitFactor { sign: Sign::Pos, k: 2, l: 1 });
        assert_eq!(o.unit_decompose(&AlgInt::one()).unwrap(), UnitFactor::ONE);
        for (k, l) in [(-3, 5), (7, -2), (0, -6), (11, 9)] {
            let f = UnitFactor { sign: Sign::Neg, k, l };
            let u = o.unit_compose(f).unwrap();
            assert_eq!(o.unit_decompose(&u).unwrap(), f);
        }
        assert_eq!(o.unit_decompose(&AlgInt::int(2)), Err(Error::NotAUnit));
    }

    #[test]
    fn total_order_examples() {
        let o = ennola1(5);
        let gamma = AlgInt::from_i64([21, -1, 0]);
        assert_eq!(o.total_order_cmp(&gamma, &gamma), TotalOrder::Equal);
        assert!(o.totally_le(&AlgInt::one(), &gamma));
        assert_eq!(o.total_order_cmp(&AlgInt::x(), &AlgInt::zero()), TotalOrder::Incomparable);
    }
}
