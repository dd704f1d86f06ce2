//! Lattice points of the two parallelepipeds spanned by `gamma` and totally positive units.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cubic::order::det3;
use crate::cubic::{AlgInt, OrderSpec};
use crate::error::{Error, Result};

/// Order elements lying in `D(g, g e1, g e2)` and in `D(g, g e1, g e1 / e2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parallelepipeds {
    /// Points of the first parallelepiped, lexicographically sorted.
    pub first: Vec<AlgInt>,
    /// Points of the second parallelepiped, lexicographically sorted.
    pub second: Vec<AlgInt>,
}

impl Parallelepipeds {
    /// Union of both point sets without duplicates, sorted.
    pub fn union(&self) -> Vec<AlgInt> {
        let mut all: Vec<AlgInt> = self.first.iter().chain(&self.second).cloned().collect();
        all.sort();
        all.dedup();
        all
    }
}

/// All order elements `t1 b1 + t2 b2 + t3 b3` with `0 <= ti <= 1`.
///
/// With `M` the coordinate matrix of the generators, a point `x` lies in the parallelepiped
/// iff every entry of `adj(M) x` lies between `0` and `det M` (inclusive, sign-adjusted).
pub fn parallelepiped_points(b: [&AlgInt; 3]) -> Result<Vec<AlgInt>> {
    let m: [[BigInt; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| b[j].c[i].clone()));
    let det = det3(&m);
    if det.is_zero() {
        return Err(Error::DegenerateBasis);
    }
    let adj = adjugate3(&m);
    let (sign, absdet) = if det.is_negative() { (-1, -det.clone()) } else { (1, det.clone()) };
    let lo: Vec<i64> = (0..3).map(|i| (0..3).map(|j| small(&m[i][j]).min(0)).sum()).collect();
    let hi: Vec<i64> = (0..3).map(|i| (0..3).map(|j| small(&m[i][j]).max(0)).sum()).collect();
    let mut out = Vec::new();
    for x0 in lo[0]..=hi[0] {
        for x1 in lo[1]..=hi[1] {
            for x2 in lo[2]..=hi[2] {
                let xs = [x0, x1, x2];
                let inside = (0..3).all(|i| {
                    let t: BigInt = (0..3).map(|j| &adj[i][j] * xs[j]).sum::<BigInt>() * sign;
                    !t.is_negative() && t <= absdet
                });
                if inside {
                    out.push(AlgInt::from_i64(xs));
                }
            }
        }
    }
    Ok(out)
}

fn small(v: &BigInt) -> i64 {
    crate::cubic::order::to_i64(v)
}

fn adjugate3(m: &[[BigInt; 3]; 3]) -> [[BigInt; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // adj[i][j] = cofactor of m[j][i].
            let (r0, r1) = others(j);
            let (c0, c1) = others(i);
            let minor = &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
    })
}

fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Lattice points of `D(g, g e1, g e2)` and `D(g, g e1, g e1 e2^-1)`.
pub fn parallelepiped_candidates(order: &OrderSpec, gamma: &AlgInt, e1: &AlgInt, e2: &AlgInt) -> Result<Parallelepipeds> {
    if gamma.is_zero() {
        return Err(Error::ZeroElement);
    }
    for e in [e1, e2] {
        if !order.is_unit(e) {
            return Err(Error::NotAUnit);
        }
        if !order.is_totally_positive(e) {
            return Err(Error::NotTotallyPositive);
        }
    }
    let g1 = order.mul(gamma, e1);
    let g2 = order.mul(gamma, e2);
    let g3 = order.mul(&g1, &order.unit_inverse(e2)?);
    let mut first = parallelepiped_points([gamma, &g1, &g2])?;
    let mut second = parallelepiped_points([gamma, &g1, &g3])?;
    first.sort();
    second.sort();
    Ok(Parallelepipeds { first, second })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_cube_has_eight_points() {
        let pts = parallelepiped_points([
            &AlgInt::from_i64([1, 0, 0]),
            &AlgInt::from_i64([0, 1, 0]),
            &AlgInt::from_i64([0, 0, 1]),
        ])
        .unwrap();
        assert_eq!(pts.len(), 8);
    }

    #[test]
    fn equal_generators_are_degenerate() {
        let one = AlgInt::one();
        assert_eq!(parallelepiped_points([&one, &one, &one]), Err(Error::DegenerateBasis));
    }
}
