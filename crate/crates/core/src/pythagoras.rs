//! Sums of squares: the squares totally below a target, minimal square decompositions, and
//! lower bounds for the Pythagoras number.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::cubic::{AlgInt, OrderSpec};
use crate::error::{Error, Result};
use crate::indecomposables::oracle::enumerate_box;

/// Default bound on the number of squares searched.
pub const DEFAULT_CAP: usize = 8;

/// All nonzero squares `w^2` with `w^2` totally at most `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSet {
    /// The target element.
    pub target: AlgInt,
    /// The squares, sorted by decreasing trace and then lexicographically.
    pub squares: Vec<AlgInt>,
    /// A square root of each square, in the same order.
    pub roots: Vec<AlgInt>,
}

/// Enumerates `w` with `|sigma_i(w)| <= sqrt(sigma_i(target))` and keeps those with
/// `w^2 <= target` in every embedding; `w` and `-w` give the same square.
pub fn squares_below(order: &OrderSpec, target: &AlgInt) -> Result<SquareSet> {
    if !order.is_totally_positive(target) {
        return Err(Error::NotTotallyPositive);
    }
    let boxes = std::array::from_fn(|i| {
        let r = order.approx(target, i).sqrt();
        (-r, r)
    });
    let mut found: HashMap<AlgInt, AlgInt> = HashMap::new();
    enumerate_box(order, boxes, None, |c| {
        let w = AlgInt::from_i64(c);
        if !w.is_zero() {
            let s = order.square(&w);
            if order.totally_le(&s, target) {
                found.entry(s).or_insert(w);
            }
        }
        ControlFlow::<()>::Continue(())
    })?;
    let mut pairs: Vec<(BigInt, AlgInt, AlgInt)> = found
        .into_iter()
        .map(|(s, w)| (order.trace(&s), s, w))
        .collect();
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    Ok(SquareSet {
        target: target.clone(),
        squares: pairs.iter().map(|p| p.1.clone()).collect(),
        roots: pairs.into_iter().map(|p| p.2).collect(),
    })
}

/// True iff the squares of `parts` sum to `target`.
pub fn verify_representation(order: &OrderSpec, target: &AlgInt, parts: &[AlgInt]) -> bool {
    let sum = parts.iter().fold(AlgInt::zero(), |acc, p| &acc + &order.square(p));
    &sum == target
}

/// Memoized search for the minimal number of squares from a fixed list summing to a remainder.
struct Search<'a> {
    order: &'a OrderSpec,
    squares: &'a [AlgInt],
    memo: HashMap<(AlgInt, usize), Option<usize>>,
}

impl Search<'_> {
    /// Minimal count of squares with index at least `idx` summing to `rem`.
    fn min_count(&mut self, rem: &AlgInt, idx: usize) -> Option<usize> {
        if rem.is_zero() {
            return Some(0);
        }
        if let Some(v) = self.memo.get(&(rem.clone(), idx)) {
            return *v;
        }
        let mut best: Option<usize> = None;
        for j in idx..self.squares.len() {
            let s = &self.squares[j];
            if !self.order.totally_le(s, rem) {
                continue;
            }
            let next = rem - s;
            if let Some(c) = self.min_count(&next, j) {
                if best.is_none_or(|b| c + 1 < b) {
                    best = Some(c + 1);
                }
            }
        }
        self.memo.insert((rem.clone(), idx), best);
        best
    }

    /// All multisets (as non-increasing index sequences) of exactly `budget` squares.
    fn all_of_size(&mut self, rem: &AlgInt, idx: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem.is_zero() {
            if budget == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if budget == 0 {
            return;
        }
        for j in idx..self.squares.len() {
            let s = &self.squares[j];
            if !self.order.totally_le(s, rem) {
                continue;
            }
            let next = rem - s;
            if self.min_count(&next, j).is_some_and(|c| c < budget) {
                cur.push(j);
                self.all_of_size(&next, j, budget - 1, cur, out);
                cur.pop();
            }
        }
    }
}

/// Minimal number of squares summing to `target`, if at most `cap`.
///
/// Squares are tried in decreasing trace order; a summand is admissible only when the
/// remainder stays totally nonnegative.
pub fn min_squares(order: &OrderSpec, target: &AlgInt, cap: usize) -> Result<usize> {
    let set = squares_below(order, target)?;
    min_squares_from(order, &set, cap)
}

/// [`min_squares`] over a precomputed square set.
pub fn min_squares_from(order: &OrderSpec, set: &SquareSet, cap: usize) -> Result<usize> {
    let mut search = Search {
        order,
        squares: &set.squares,
        memo: HashMap::new(),
    };
    match search.min_count(&set.target, 0) {
        None => Err(Error::NoRepresentation),
        Some(n) if n > cap => Err(Error::MoreThanCap { cap }),
        Some(n) => Ok(n),
    }
}

/// Every representation of `target` as a sum of the minimal number of squares, each given as
/// a list of squares in decreasing trace order.
pub fn minimal_representations(order: &OrderSpec, set: &SquareSet) -> Result<Vec<Vec<AlgInt>>> {
    let mut search = Search {
        order,
        squares: &set.squares,
        memo: HashMap::new(),
    };
    let n = search.min_count(&set.target, 0).ok_or(Error::NoRepresentation)?;
    let mut out = Vec::new();
    search.all_of_size(&set.target, 0, n, &mut Vec::new(), &mut out);
    Ok(out
        .into_iter()
        .map(|idx| idx.into_iter().map(|j| set.squares[j].clone()).collect())
        .collect())
}

/// The test element `a^2-3a+11 - (a^2-5a+1) x - (a-5) x^2` of Ennola I and its six-square
/// witness `(1, 1, 1, 2, 1+x, a-2-(a-1)x-x^2)`.
pub fn ennola_gamma(a: i64) -> (AlgInt, Vec<AlgInt>) {
    let gamma = AlgInt::from_i64([a * a - 3 * a + 11, -(a * a - 5 * a + 1), -(a - 5)]);
    let parts = vec![
        AlgInt::int(1),
        AlgInt::int(1),
        AlgInt::int(1),
        AlgInt::int(2),
        AlgInt::from_i64([1, 1, 0]),
        AlgInt::from_i64([a - 2, -(a - 1), -1]),
    ];
    (gamma, parts)
}

/// Lower bound for the Pythagoras number certified by `target`: the minimal number of squares
/// needed for it, after checking that `witness` represents it.
pub fn pythagoras_lower_bound(order: &OrderSpec, target: &AlgInt, witness: &[AlgInt], cap: usize) -> Result<usize> {
    if !verify_representation(order, target, witness) {
        return Err(Error::NoRepresentation);
    }
    min_squares(order, target, cap.max(witness.len()))
}

/// JSON report of the sums-of-squares pipeline for one target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PythagorasReport {
    /// Target element.
    pub gamma: AlgInt,
    /// Squares totally below the target.
    pub squares: Vec<AlgInt>,
    /// Minimal number of squares.
    pub min_squares: usize,
    /// The minimal representation when it is unique.
    pub forced_decomposition: Option<Vec<AlgInt>>,
}

/// Runs squares, minimal count and uniqueness analysis for one target.
pub fn report(order: &OrderSpec, target: &AlgInt, cap: usize) -> Result<PythagorasReport> {
    let set = squares_below(order, target)?;
    let n = min_squares_from(order, &set, cap)?;
    let reps = minimal_representations(order, &set)?;
    Ok(PythagorasReport {
        gamma: target.clone(),
        squares: set.squares.clone(),
        min_squares: n,
        forced_decomposition: (reps.len() == 1).then(|| reps[0].clone()),
    })
}
