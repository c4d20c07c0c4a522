//! Engine results against brute-force computations that share none of its
//! recursion code.

use std::collections::{HashMap, HashSet};

use verma_core::ext::{ext1_dim, ExtMemo};
use verma_core::rpoly::{r_polynomial, RMemo};
use verma_core::{GroupElement, IntPolynomial, WeylGroup};

fn group(label: &str) -> WeylGroup {
    WeylGroup::from_label(label).unwrap()
}

/// All elements below `w`: products over every subword of one reduced word.
fn subword_ideal(g: &WeylGroup, w: &GroupElement) -> HashSet<GroupElement> {
    let word = g.to_reduced_word(w);
    let mut out = HashSet::new();
    for mask in 0u64..(1 << word.len()) {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        out.insert(g.from_word(&sub).unwrap());
    }
    out
}

#[test]
fn bruhat_matches_subwords() {
    for label in ["A3", "B2", "B3"] {
        let g = group(label);
        let all = g.enumerate();
        for w in &all {
            let below = subword_ideal(&g, w);
            for v in &all {
                assert_eq!(g.bruhat_leq(v, w), below.contains(v), "{label} {v} {w}");
            }
        }
    }
}

#[test]
fn bruhat_is_a_graded_partial_order() {
    for label in ["A3", "B2"] {
        let g = group(label);
        let all = g.enumerate();
        for x in &all {
            assert!(g.bruhat_leq(x, x));
            for y in &all {
                let xy = g.bruhat_leq(x, y);
                if xy && g.bruhat_leq(y, x) {
                    assert_eq!(x, y);
                }
                if xy && g.length(x) == g.length(y) {
                    assert_eq!(x, y);
                }
                if xy {
                    for z in all.iter().filter(|z| g.bruhat_leq(y, z)) {
                        assert!(g.bruhat_leq(x, z));
                    }
                }
            }
        }
    }
}

#[test]
fn inversion_length_is_word_length() {
    for label in ["A3", "B2"] {
        let g = group(label);
        // shortest words by breadth-first search over the Cayley graph
        let mut dist: HashMap<GroupElement, usize> = HashMap::from([(g.identity(), 0)]);
        let mut frontier = vec![g.identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..g.rank() {
                    let ws = g.mult_simple_right(w, i);
                    if !dist.contains_key(&ws) {
                        dist.insert(ws.clone(), dist[w] + 1);
                        next.push(ws);
                    }
                }
            }
            frontier = next;
        }
        for (w, d) in dist {
            assert_eq!(g.length(&w), d);
            assert_eq!(g.to_reduced_word(&w).len(), d);
        }
    }
}

#[test]
fn ext_symmetries_and_covers() {
    for label in ["A3", "B2", "B3"] {
        let g = group(label);
        let memo = ExtMemo::new();
        let all = g.enumerate();
        let w0 = g.longest_element();
        for v in &all {
            for w in &all {
                let d = ext1_dim(&g, v, w, &memo);
                let inv = ext1_dim(&g, &g.inverse(v), &g.inverse(w), &memo);
                assert_eq!(d, inv, "{label} inverse symmetry");
                let flipped = ext1_dim(&g, &g.multiply(&w0, w), &g.multiply(&w0, v), &memo);
                assert_eq!(d, flipped, "{label} w0 symmetry");
                if g.bruhat_leq(v, w) {
                    match g.length(w) - g.length(v) {
                        0 => assert_eq!(d, 0),
                        1 => assert_eq!(d, 1),
                        _ => {}
                    }
                }
            }
        }
    }
}

/// R-polynomials by recursion on left descents, with comparability decided
/// by subwords.
struct LeftRecursion<'a> {
    g: &'a WeylGroup,
    ideals: HashMap<GroupElement, HashSet<GroupElement>>,
    cache: HashMap<(GroupElement, GroupElement), IntPolynomial>,
}

impl LeftRecursion<'_> {
    fn r(&mut self, v: &GroupElement, w: &GroupElement) -> IntPolynomial {
        if !self.ideals[w].contains(v) {
            return IntPolynomial::zero();
        }
        if v == w {
            return IntPolynomial::one();
        }
        if let Some(r) = self.cache.get(&(v.clone(), w.clone())) {
            return r.clone();
        }
        let g = self.g;
        let i = (0..g.rank()).rev().find(|&i| g.left_descent(w, i)).unwrap();
        let sw = g.mult_simple_left(i, w);
        let sv = g.mult_simple_left(i, v);
        let r = if g.left_descent(v, i) {
            self.r(&sv, &sw)
        } else {
            let a = &IntPolynomial::q_minus_one() * &self.r(v, &sw);
            let b = &IntPolynomial::q() * &self.r(&sv, &sw);
            &a + &b
        };
        self.cache.insert((v.clone(), w.clone()), r.clone());
        r
    }
}

#[test]
fn r_polynomials_match_left_recursion() {
    for label in ["A3", "B3", "G2"] {
        let g = group(label);
        let all = g.enumerate();
        let mut oracle = LeftRecursion {
            g: &g,
            ideals: all.iter().map(|w| (w.clone(), subword_ideal(&g, w))).collect(),
            cache: HashMap::new(),
        };
        let memo = RMemo::new();
        for v in &all {
            for w in &all {
                assert_eq!(r_polynomial(&g, v, w, &memo), oracle.r(v, w), "{label}");
            }
        }
    }
}

/// Flags `L < P` in `F_p^3` in general position to both coordinate flags,
/// counted with subspaces as explicit vector sets.
fn generic_flag_count(p: u32) -> u64 {
    let vectors: Vec<[u32; 3]> = (0..p.pow(3))
        .map(|k| [k % p, k / p % p, k / (p * p)])
        .collect();
    let zero = [0, 0, 0];
    let span = |basis: &[[u32; 3]]| -> HashSet<[u32; 3]> {
        let mut out = HashSet::from([zero]);
        for b in basis {
            let current: Vec<_> = out.iter().copied().collect();
            for x in current {
                for c in 0..p {
                    out.insert([0, 1, 2].map(|i| (x[i] + c * b[i]) % p));
                }
            }
        }
        out
    };
    let e1 = [1, 0, 0];
    let e3 = [0, 0, 1];
    let e12 = span(&[[1, 0, 0], [0, 1, 0]]);
    let e23 = span(&[[0, 1, 0], [0, 0, 1]]);
    let mut flags = HashSet::new();
    for &x in &vectors {
        if x == zero {
            continue;
        }
        let line = span(&[x]);
        for &y in &vectors {
            if line.contains(&y) {
                continue;
            }
            let plane = span(&[x, y]);
            let generic = !e12.contains(&x)
                && !e23.contains(&x)
                && !plane.contains(&e1)
                && !plane.contains(&e3);
            if generic {
                let mut l: Vec<_> = line.iter().copied().collect();
                let mut pl: Vec<_> = plane.iter().copied().collect();
                l.sort();
                pl.sort();
                flags.insert((l, pl));
            }
        }
    }
    flags.len() as u64
}

#[test]
fn scratch_flag_counts_match_engine() {
    let g = group("A2");
    let e = g.identity();
    let w0 = g.longest_element();
    let r = r_polynomial(&g, &e, &w0, &RMemo::new());
    let counts: Vec<u64> = [2, 3, 5, 7].iter().map(|&p| generic_flag_count(p)).collect();
    // frozen from the vector-set enumeration above
    assert_eq!(counts, vec![3, 14, 84, 258]);
    for (p, c) in [2i64, 3, 5, 7].into_iter().zip(&counts) {
        assert_eq!(r.evaluate(p), *c as i64);
        let field = verma_core::PrimeField::new(p as u32).unwrap();
        assert_eq!(
            verma_core::count_richardson(&g, &e, &w0, field, 1_000_000).unwrap(),
            *c
        );
    }
}
