//! R-polynomials as point counts of the cell intersections `C^v ∩ C_w` over
//! a field with `q` elements.
//!
//! With `s` a right descent of `w` and `v < w`:
//!
//! * `vs < v`: the intersection is isomorphic to `C^{vs} ∩ C_{ws}`
//! * `vs > v`, `vs` not below `ws`: it is `(C^v ∩ C_{ws}) × G_m`, giving
//!   `(q - 1) R_{v,ws}`
//! * `vs > v`, `vs <= ws`: a closed piece `(C^{vs} ∩ C_{ws}) × A^1` with open
//!   complement `(C^v ∩ C_{ws}) × G_m`, giving `q R_{vs,ws} + (q - 1) R_{v,ws}`

use rayon::prelude::*;

use crate::ext::{comparable_pairs, descent_step, DescentCase};
use crate::group::{GroupElement, WeylGroup};
use crate::memo::PairMemo;
use crate::poly::IntPolynomial;

pub type RMemo = PairMemo<IntPolynomial>;

pub fn r_polynomial(
    g: &WeylGroup,
    v: &GroupElement,
    w: &GroupElement,
    memo: &RMemo,
) -> IntPolynomial {
    if v == w {
        return IntPolynomial::one();
    }
    if !g.bruhat_leq(v, w) {
        return IntPolynomial::zero();
    }
    if let Some(r) = memo.get(v, w) {
        return r;
    }
    let i = g.first_right_descent(w).expect("w above v has a descent");
    let r = r_step(g, v, w, i, memo);
    memo.insert(v, w, r)
}

/// Same as [`r_polynomial`] but splitting along the descent `i` at the top
/// level. Panics if `i` is not a right descent of `w`.
pub fn r_polynomial_via(
    g: &WeylGroup,
    v: &GroupElement,
    w: &GroupElement,
    i: usize,
    memo: &RMemo,
) -> IntPolynomial {
    assert!(g.right_descent(w, i), "s_{} is not a right descent", i + 1);
    if v == w {
        return IntPolynomial::one();
    }
    if !g.bruhat_leq(v, w) {
        return IntPolynomial::zero();
    }
    r_step(g, v, w, i, memo)
}

fn r_step(
    g: &WeylGroup,
    v: &GroupElement,
    w: &GroupElement,
    i: usize,
    memo: &RMemo,
) -> IntPolynomial {
    let step = descent_step(g, v, w, i);
    match step.case {
        DescentCase::Descent => r_polynomial(g, &step.vs, &step.ws, memo),
        DescentCase::Split => &IntPolynomial::q_minus_one() * &r_polynomial(g, v, &step.ws, memo),
        DescentCase::Stratified => {
            let closed = &IntPolynomial::q() * &r_polynomial(g, &step.vs, &step.ws, memo);
            let open = &IntPolynomial::q_minus_one() * &r_polynomial(g, v, &step.ws, memo);
            &closed + &open
        }
    }
}

/// `R_{v,w}` for every comparable pair, in the same row order as
/// [`crate::ext::ext1_table`].
pub fn r_table(g: &WeylGroup, memo: &RMemo) -> Vec<(GroupElement, GroupElement, IntPolynomial)> {
    comparable_pairs(g, &g.enumerate())
        .into_par_iter()
        .map(|(v, w)| {
            let r = r_polynomial(g, &v, &w, memo);
            (v, w, r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        let g = WeylGroup::from_label("A2").unwrap();
        let memo = RMemo::new();
        for w in g.enumerate() {
            assert_eq!(r_polynomial(&g, &w, &w, &memo), IntPolynomial::one());
        }
        assert!(r_polynomial(&g, &g.generator(0), &g.generator(1), &memo).is_zero());
    }

    #[test]
    fn small_values() {
        let a1 = WeylGroup::from_label("A1").unwrap();
        let memo = RMemo::new();
        let r = r_polynomial(&a1, &a1.identity(), &a1.generator(0), &memo);
        assert_eq!(r.coeffs(), &[-1, 1]);

        let a2 = WeylGroup::from_label("A2").unwrap();
        let memo = RMemo::new();
        let e = a2.identity();
        let w0 = a2.longest_element();
        assert_eq!(r_polynomial(&a2, &e, &w0, &memo).coeffs(), &[-1, 2, -2, 1]);
        assert_eq!(r_polynomial_via(&a2, &e, &w0, 1, &memo).coeffs(), &[-1, 2, -2, 1]);
        let s1s2 = a2.parse_element("1 2").unwrap();
        assert_eq!(r_polynomial(&a2, &e, &s1s2, &memo).coeffs(), &[1, -2, 1]);
    }

    #[test]
    fn cache_off_agrees() {
        let g = WeylGroup::from_label("G2").unwrap();
        let memo = RMemo::new();
        let off = RMemo::disabled();
        for (v, w, r) in r_table(&g, &memo) {
            assert_eq!(r_polynomial(&g, &v, &w, &off), r);
        }
    }
}
