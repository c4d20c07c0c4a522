//! Type A: identification of the Weyl group of `A_{n-1}` with permutations
//! of `{1, .., n}`, with `s_i` acting as the transposition `(i i+1)`.
//!
//! Under this identification `w(alpha_i) = e_{w(i)} - e_{w(i+1)}`, so the
//! element can be read off the one-line notation directly.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupElement, WeylGroup};
use crate::roots::Coords;

/// One-line notation, stored 0-based: `images[k] = w(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::BadSyntax(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x] = k;
        }
        Permutation(inv)
    }

    /// `(self * other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { "," } else { "" };
        let s: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "p:{}", s.join(sep))
    }
}

impl WeylGroup {
    fn require_type_a(&self) -> Result<usize> {
        self.datum()
            .type_a_rank()
            .map(|r| r + 1)
            .ok_or_else(|| Error::TypeUnsupported(self.label().to_string()))
    }

    /// Index of the root `e_a - e_b` (0-based, `a != b`).
    fn transposition_root(&self, a: usize, b: usize) -> usize {
        let mut c = Coords::from_elem(0, self.rank());
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        for x in &mut c[lo..hi] {
            *x = sign;
        }
        self.roots().index_of(&c).expect("type A root")
    }

    pub fn from_permutation(&self, perm: &Permutation) -> Result<GroupElement> {
        let n = self.require_type_a()?;
        if perm.len() != n {
            return Err(Error::BadSyntax(format!(
                "{perm} has {} letters, expected {n}",
                perm.len()
            )));
        }
        let images: Vec<u16> = (0..n - 1)
            .map(|i| self.transposition_root(perm.apply(i), perm.apply(i + 1)) as u16)
            .collect();
        // bubble sort to the identity, then replay the swaps as generators
        let mut w = self.identity();
        let mut target = perm.clone();
        let mut swaps = Vec::new();
        while let Some(i) = (0..n - 1).find(|&i| target.0[i] > target.0[i + 1]) {
            target.0.swap(i, i + 1);
            swaps.push(i);
        }
        for &i in swaps.iter().rev() {
            w = self.mult_simple_right(&w, i);
        }
        debug_assert_eq!(w.images(), images.as_slice());
        Ok(w)
    }

    pub fn to_permutation(&self, w: &GroupElement) -> Result<Permutation> {
        let n = self.require_type_a()?;
        let mut p = Permutation::identity(n);
        for i in self.to_reduced_word(w) {
            // right multiplication by (i i+1) swaps positions i and i+1
            p.0.swap(i, i + 1);
        }
        Ok(p)
    }

    pub(crate) fn parse_permutation(&self, text: &str) -> Result<GroupElement> {
        let text = text.trim();
        let letters: Vec<usize> = if text.contains([',', ' ']) {
            text.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::BadSyntax(text.into())))
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::BadSyntax(text.into()))
                })
                .collect::<Result<_>>()?
        };
        if letters.contains(&0) {
            return Err(Error::BadSyntax(text.into()));
        }
        let perm = Permutation::new(letters.into_iter().map(|x| x - 1).collect())?;
        self.from_permutation(&perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_adjacent_transpositions() {
        let g = WeylGroup::from_label("A3").unwrap();
        for i in 0..3 {
            let mut images: Vec<usize> = (0..4).collect();
            images.swap(i, i + 1);
            let p = Permutation::new(images).unwrap();
            assert_eq!(g.from_permutation(&p).unwrap(), g.generator(i));
            assert_eq!(g.to_permutation(&g.generator(i)).unwrap(), p);
        }
    }

    #[test]
    fn homomorphism() {
        let g = WeylGroup::from_label("A3").unwrap();
        let all = g.enumerate();
        for x in &all {
            let px = g.to_permutation(x).unwrap();
            assert_eq!(&g.from_permutation(&px).unwrap(), x);
            for y in &all {
                let py = g.to_permutation(y).unwrap();
                assert_eq!(g.to_permutation(&g.multiply(x, y)).unwrap(), px.compose(&py));
            }
        }
    }

    #[test]
    fn permutation_syntax() {
        let g = WeylGroup::from_label("A3").unwrap();
        assert_eq!(g.parse_element("p:1234").unwrap(), g.identity());
        assert_eq!(g.parse_element("p:4321").unwrap(), g.longest_element());
        assert_eq!(g.parse_element("p:2,1,3,4").unwrap(), g.generator(0));
        assert!(g.parse_element("p:1224").is_err());
        assert!(g.parse_element("p:123").is_err());
        assert!(g.parse_element("p:0123").is_err());
        let b2 = WeylGroup::from_label("B2").unwrap();
        assert!(matches!(b2.parse_element("p:21"), Err(Error::TypeUnsupported(_))));
        assert_eq!(g.to_permutation(&g.longest_element()).unwrap().to_string(), "p:4321");
    }
}
