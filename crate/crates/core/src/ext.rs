//! Dimensions of `Hom` and `Ext^1` between Verma modules `Delta_v`,
//! `Delta_w`, indexed by Weyl group elements.
//!
//! `Ext^1` is computed by descending recursion on `w`. For `v < w` and a right
//! descent `s` of `w`, the three cases are:
//!
//! * `vs < v`: `dim Ext^1(v, w) = dim Ext^1(vs, ws)`
//! * `vs > v`, `vs` not below `ws`: `dim Ext^1(v, w) = 1 + dim Ext^1(v, ws)`
//! * `vs > v`, `vs <= ws`: `dim Ext^1(v, w) = dim Ext^1(v, ws)`
//!
//! Note the third case is conditioned on `vs > v`, not `vs > w`: only the
//! former partitions the pairs, and it is the one consistent with the upward
//! identities checked in [`crate::verify`].

use rayon::prelude::*;

use crate::group::{GroupElement, WeylGroup};
use crate::memo::PairMemo;

pub type ExtMemo = PairMemo<u32>;

/// Which of the three cell-intersection cases a pair falls into for a chosen
/// right descent `s` of `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentCase {
    /// `vs < v`
    Descent,
    /// `vs > v` and `vs` is not below `ws`
    Split,
    /// `vs > v` and `vs <= ws`
    Stratified,
}

#[derive(Debug, Clone)]
pub struct DescentStep {
    pub case: DescentCase,
    pub vs: GroupElement,
    pub ws: GroupElement,
}

/// Classifies `(v, w)` against the descent `i` of `w`.
pub fn descent_step(g: &WeylGroup, v: &GroupElement, w: &GroupElement, i: usize) -> DescentStep {
    debug_assert!(g.right_descent(w, i));
    let vs = g.mult_simple_right(v, i);
    let ws = g.mult_simple_right(w, i);
    let case = if g.right_descent(v, i) {
        DescentCase::Descent
    } else if g.bruhat_leq(&vs, &ws) {
        DescentCase::Stratified
    } else {
        DescentCase::Split
    };
    DescentStep { case, vs, ws }
}

pub fn hom_dim(g: &WeylGroup, v: &GroupElement, w: &GroupElement) -> u32 {
    g.hom_dim(v, w)
}

pub fn ext1_dim(g: &WeylGroup, v: &GroupElement, w: &GroupElement, memo: &ExtMemo) -> u32 {
    if v == w || !g.bruhat_leq(v, w) {
        return 0;
    }
    if let Some(d) = memo.get(v, w) {
        return d;
    }
    let i = g.first_right_descent(w).expect("w above v has a descent");
    let d = ext1_step(g, v, w, i, memo);
    memo.insert(v, w, d)
}

/// Evaluates the recursion at the top level through the descent `i` instead
/// of the smallest one. Deeper levels use [`ext1_dim`].
///
/// Panics if `i` is not a right descent of `w`.
pub fn ext1_dim_via(
    g: &WeylGroup,
    v: &GroupElement,
    w: &GroupElement,
    i: usize,
    memo: &ExtMemo,
) -> u32 {
    assert!(g.right_descent(w, i), "s_{} is not a right descent", i + 1);
    if v == w || !g.bruhat_leq(v, w) {
        return 0;
    }
    ext1_step(g, v, w, i, memo)
}

fn ext1_step(g: &WeylGroup, v: &GroupElement, w: &GroupElement, i: usize, memo: &ExtMemo) -> u32 {
    let step = descent_step(g, v, w, i);
    match step.case {
        DescentCase::Descent => ext1_dim(g, &step.vs, &step.ws, memo),
        DescentCase::Split => 1 + ext1_dim(g, v, &step.ws, memo),
        DescentCase::Stratified => ext1_dim(g, v, &step.ws, memo),
    }
}

/// All pairs `v <= w` from `elements`, in row-major order of the slice.
pub fn comparable_pairs(
    g: &WeylGroup,
    elements: &[GroupElement],
) -> Vec<(GroupElement, GroupElement)> {
    elements
        .par_iter()
        .flat_map_iter(|v| {
            elements
                .iter()
                .filter(|w| g.bruhat_leq(v, w))
                .map(|w| (v.clone(), w.clone()))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `dim Ext^1(v, w)` for every comparable pair, rows ordered by `(l(v), v)`
/// and then `(l(w), w)`.
pub fn ext1_table(g: &WeylGroup, memo: &ExtMemo) -> Vec<(GroupElement, GroupElement, u32)> {
    let pairs = comparable_pairs(g, &g.enumerate());
    pairs
        .into_par_iter()
        .map(|(v, w)| {
            let d = ext1_dim(g, &v, &w, memo);
            (v, w, d)
        })
        .collect()
}
