//! Real root isolation and certified evaluation at the roots of a monic cubic.
//!
//! Every root is enclosed in a dyadic cell `(n/2^k, (n+1)/2^k)`. Cells are refined by exact
//! bisection on the sign of `f` and cached, so repeated queries only pay for new precision.
//! The polynomial is irreducible, hence no root is ever a dyadic rational and a nonzero
//! element never vanishes at a root: every sign query terminates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::sync::Mutex;

use super::algint::AlgInt;

/// Sign of `f(n / 2^k)` for `f = x^3 + p x^2 + q x + r`, scaled by `8^k`.
fn poly_sign(pqr: &[BigInt; 3], n: &BigInt, k: u32) -> Ordering {
    let n2 = n * n;
    let v = &n2 * n + ((&pqr[0] * &n2) << k) + ((&pqr[1] * n) << (2 * k)) + (&pqr[2] << (3 * k));
    v.sign_ordering()
}

trait SignOrd {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrd for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// A cached dyadic enclosure of one root.
#[derive(Debug, Clone)]
struct Cell {
    /// Binary level: the cell width is `2^-k`.
    k: u32,
    /// Left endpoint numerator.
    n: BigInt,
}

/// Isolating data for the three real roots, in ascending order.
#[derive(Debug)]
pub struct RootSet {
    pqr: [BigInt; 3],
    cells: [Mutex<Cell>; 3],
    approx: [f64; 3],
}

/// Interval bounds `[lo, hi] / 4^k` of an element evaluated at a root.
#[derive(Debug, Clone)]
pub struct Enclosure {
    /// Lower bound numerator.
    pub lo: BigInt,
    /// Upper bound numerator.
    pub hi: BigInt,
    /// The common denominator is `4^k`.
    pub k: u32,
}

impl RootSet {
    /// Isolates the three real roots of `x^3 + p x^2 + q x + r`.
    ///
    /// The caller guarantees a positive discriminant and irreducibility.
    pub fn isolate(p: i64, q: i64, r: i64) -> RootSet {
        let pqr = [BigInt::from(p), BigInt::from(q), BigInt::from(r)];
        // Separating points near the two critical points (-p -+ sqrt(p^2-3q)) / 3.
        let d = BigInt::from(p) * p - BigInt::from(3) * q;
        let mut k: u32 = 0;
        let (d1, d2) = loop {
            let s = (&d << (2 * k)).sqrt();
            let pk = BigInt::from(p) << k;
            let c1 = (-&pk - &s).div_floor(&BigInt::from(3));
            let c2 = (-&pk + &s).div_floor(&BigInt::from(3));
            let ok = c1 < c2
                && poly_sign(&pqr, &c1, k) == Ordering::Greater
                && poly_sign(&pqr, &c2, k) == Ordering::Less;
            if ok {
                break (c1, c2);
            }
            k += 1;
        };
        let bound = BigInt::from(1 + p.abs().max(q.abs()).max(r.abs())) << k;
        let brackets = [(-bound.clone(), d1.clone()), (d1, d2.clone()), (d2, bound)];
        let cells = brackets.map(|(lo, hi)| {
            let left_sign = poly_sign(&pqr, &lo, k);
            let (k2, n) = bisect_to_unit(&pqr, lo, hi, k, left_sign);
            Mutex::new(Cell { k: k2, n })
        });
        let mut set = RootSet {
            pqr,
            cells,
            approx: [0.0; 3],
        };
        for i in 0..3 {
            let n = set.cell(i, 64);
            set.approx[i] = ratio_to_f64(&n, 64) + ratio_to_f64(&BigInt::one(), 65);
        }
        set
    }

    /// Left endpoint numerator of the enclosure of root `i` at level `k`.
    pub fn cell(&self, i: usize, k: u32) -> BigInt {
        let mut c = self.cells[i].lock().expect("root cache poisoned");
        if c.k >= k {
            return c.n.clone() >> (c.k - k);
        }
        let left_sign = if i == 1 { Ordering::Greater } else { Ordering::Less };
        while c.k < k {
            let lo = &c.n << 1;
            let mid = &lo + 1;
            let level = c.k + 1;
            if poly_sign(&self.pqr, &mid, level) == left_sign {
                c.n = mid;
            } else {
                c.n = lo;
            }
            c.k = level;
        }
        c.n.clone()
    }

    /// Double-precision approximation of root `i` (sorted index).
    pub fn approx(&self, i: usize) -> f64 {
        self.approx[i]
    }

    /// Encloses `v1 + v2 t + v3 t^2` at root `i` with the root cell at level `k`.
    pub fn enclose(&self, v: &AlgInt, i: usize, k: u32) -> Enclosure {
        let n = self.cell(i, k);
        let n1: BigInt = &n + 1;
        let base = &v.c[0] << (2 * k);
        // Linear term v2 * 2^k * X over X in [n, n+1].
        let l0 = (&v.c[1] * &n) << k;
        let l1 = (&v.c[1] * &n1) << k;
        let (llo, lhi) = if l0 <= l1 { (l0, l1) } else { (l1, l0) };
        // Quadratic term v3 * X^2.
        let sq_lo = if n.is_negative() && n1.is_positive() {
            BigInt::zero()
        } else {
            (&n * &n).min(&n1 * &n1)
        };
        let sq_hi = (&n * &n).max(&n1 * &n1);
        let (qlo, qhi) = if v.c[2].is_negative() {
            (&v.c[2] * &sq_hi, &v.c[2] * &sq_lo)
        } else {
            (&v.c[2] * &sq_lo, &v.c[2] * &sq_hi)
        };
        Enclosure {
            lo: &base + llo + qlo,
            hi: base + lhi + qhi,
            k,
        }
    }

    /// Starting precision for an element: enough bits to resolve its coordinates.
    pub fn start_level(v: &AlgInt) -> u32 {
        let bits = v.c.iter().map(|c| c.bits()).max().unwrap_or(0) as u32;
        64.max(bits + 32)
    }

    /// Exact sign of a nonzero element at root `i`.
    pub fn sign(&self, v: &AlgInt, i: usize) -> Ordering {
        if v.is_zero() {
            return Ordering::Equal;
        }
        if v.is_rational() {
            return v.c[0].sign_ordering();
        }
        if let Some(s) = self.sign_f64(v, i) {
            return s;
        }
        let mut k = Self::start_level(v);
        loop {
            let e = self.enclose(v, i, k);
            if e.lo.is_positive() {
                return Ordering::Greater;
            }
            if e.hi.is_negative() {
                return Ordering::Less;
            }
            k *= 2;
        }
    }

    /// Sign from a floating-point evaluation with a rigorous error bound, if decisive.
    fn sign_f64(&self, v: &AlgInt, i: usize) -> Option<Ordering> {
        const LIM: f64 = (1u64 << 52) as f64;
        let a = v.c[0].to_f64()?;
        let b = v.c[1].to_f64()?;
        let c = v.c[2].to_f64()?;
        if a.abs() > LIM || b.abs() > LIM || c.abs() > LIM {
            return None;
        }
        let t = self.approx[i];
        // The stored root is within 2^-60 relative of the true root; the budget below covers
        // that perturbation plus the rounding of the Horner evaluation.
        let val = a + t * (b + t * c);
        let mag = a.abs() + t.abs() * (b.abs() + t.abs() * c.abs());
        let dt = (t.abs() + 1.0) * 1e-15;
        let deriv = b.abs() + 2.0 * (t.abs() + dt) * c.abs();
        let err = mag * 1e-14 + deriv * dt * 4.0;
        if val > err {
            Some(Ordering::Greater)
        } else if val < -err {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Floor of `num(root_i) / den` for a positive integer `den`.
    pub fn floor_div(&self, num: &AlgInt, den: &BigInt, i: usize) -> BigInt {
        debug_assert!(den.is_positive());
        if num.is_rational() {
            return num.c[0].div_floor(den);
        }
        let mut k = Self::start_level(num).max(den.bits() as u32 + 64);
        loop {
            let e = self.enclose(num, i, k);
            let d = den << (2 * k);
            let flo = e.lo.div_floor(&d);
            let fhi = e.hi.div_floor(&d);
            if flo == fhi {
                return flo;
            }
            k *= 2;
        }
    }

    /// Approximation of `num(root_i)` with about 50 correct leading bits.
    pub fn approx_value(&self, v: &AlgInt, i: usize) -> f64 {
        if v.is_zero() {
            return 0.0;
        }
        let mut k = Self::start_level(v);
        loop {
            let e = self.enclose(v, i, k);
            let width = &e.hi - &e.lo;
            let mag = e.lo.abs().min(e.hi.abs());
            if e.lo.signum() == e.hi.signum() && (width << 52) <= mag {
                let mid: BigInt = (&e.lo + &e.hi) >> 1;
                return ratio_to_f64(&mid, 2 * k);
            }
            k *= 2;
        }
    }

    /// Natural logarithm of `|num(root_i)|` for a nonzero element, accurate to about 1e-14.
    pub fn ln_abs(&self, v: &AlgInt, i: usize) -> f64 {
        let mut k = Self::start_level(v);
        loop {
            let e = self.enclose(v, i, k);
            let width = &e.hi - &e.lo;
            let mag = e.lo.abs().min(e.hi.abs());
            if e.lo.signum() == e.hi.signum() && (width << 52) <= mag {
                let mid: BigInt = (&e.lo + &e.hi) >> 1;
                let mid = mid.abs();
                return ln_bigint(&mid) - (2 * k) as f64 * std::f64::consts::LN_2;
            }
            k *= 2;
        }
    }
}

/// Bisects a bracketing interval at level `k` down to a cell of width `2^-k'`.
fn bisect_to_unit(
    pqr: &[BigInt; 3],
    mut lo: BigInt,
    mut hi: BigInt,
    mut k: u32,
    left_sign: Ordering,
) -> (u32, BigInt) {
    loop {
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            if poly_sign(pqr, &mid, k) == left_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if k >= 8 {
            return (k, lo);
        }
        lo <<= 1;
        hi <<= 1;
        k += 1;
    }
}

/// `n / 2^shift` as a double, without overflow for large values.
pub fn ratio_to_f64(n: &BigInt, shift: u32) -> f64 {
    let bits = n.bits() as i64;
    let drop = (bits - 60).max(0);
    let m = (n >> drop as usize).to_f64().unwrap_or(0.0);
    ldexp(m, drop - shift as i64)
}

/// `x * 2^e` computed in steps that avoid intermediate overflow.
fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 500 {
        x *= 2f64.powi(500);
        e -= 500;
    }
    while e < -500 {
        x *= 2f64.powi(-500);
        e += 500;
    }
    x * 2f64.powi(e as i32)
}

/// Natural logarithm of a positive big integer.
fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits() as i64;
    let drop = (bits - 60).max(0);
    let m = (n >> drop as usize).to_f64().unwrap_or(1.0);
    m.ln() + drop as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolates_roots_of_simplest_cubic() {
        // x^3 - x^2 - 2x + 1 has roots near -1.247, 0.445, 1.802.
        let rs = RootSet::isolate(-1, -2, 1);
        let want = [-1.246979603717467, 0.445041867912629, 1.801937735804838];
        for i in 0..3 {
            assert!((rs.approx(i) - want[i]).abs() < 1e-12, "root {i}: {}", rs.approx(i));
        }
    }

    #[test]
    fn refinement_keeps_enclosure_consistent() {
        let rs = RootSet::isolate(2, -3, -1);
        let coarse = rs.cell(2, 20);
        let fine = rs.cell(2, 200);
        assert_eq!(fine >> 180, coarse);
    }

    #[test]
    fn floor_div_of_root() {
        let rs = RootSet::isolate(-1, -2, 1);
        let x = AlgInt::x();
        assert_eq!(rs.floor_div(&x, &BigInt::one(), 2), BigInt::from(1));
        assert_eq!(rs.floor_div(&x, &BigInt::one(), 0), BigInt::from(-2));
        assert_eq!(rs.floor_div(&x.scale(&BigInt::from(10)), &BigInt::from(3), 1), BigInt::from(1));
    }

    #[test]
    fn ln_abs_matches_f64() {
        let rs = RootSet::isolate(-1, -2, 1);
        let v = AlgInt::from_i64([3, -1, 2]);
        let t = rs.approx(2);
        let direct = (3.0 - t + 2.0 * t * t).abs().ln();
        assert!((rs.ln_abs(&v, 2) - direct).abs() < 1e-12);
    }
}
