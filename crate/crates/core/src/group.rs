//! Weyl group elements, the group law, length, descents and Bruhat order.
//!
//! An element is stored as the tuple of root indices `w(alpha_1), ..,
//! w(alpha_r)`. Since the simple roots span, the tuple determines `w`, and it
//! doubles as the canonical key for hashing and ordering.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use smallvec::SmallVec;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::memo::PairMemo;
use crate::roots::{Coords, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    images: SmallVec<[u16; 8]>,
}

impl GroupElement {
    pub fn images(&self) -> &[u16] {
        &self.images
    }
}

/// A finite Weyl group, realised through its action on a root system.
///
/// The Bruhat memo is shared by every query on the group and may be used
/// from several threads at once.
#[derive(Debug)]
pub struct WeylGroup {
    roots: RootSystem,
    bruhat: PairMemo<bool>,
}

impl WeylGroup {
    pub fn new(roots: RootSystem) -> Self {
        WeylGroup {
            roots,
            bruhat: PairMemo::new(),
        }
    }

    pub fn from_datum(datum: CartanDatum) -> Result<Self> {
        Ok(Self::new(RootSystem::new(datum)?))
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::from_datum(CartanDatum::from_label(label)?)
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn datum(&self) -> &CartanDatum {
        self.roots.datum()
    }

    pub fn label(&self) -> &str {
        self.datum().label()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            images: (0..self.rank() as u16).collect(),
        }
    }

    /// The simple reflection `s_i` (0-based `i`).
    pub fn generator(&self, i: usize) -> GroupElement {
        self.mult_simple_left(i, &self.identity())
    }

    /// Coordinates of `w(root k)`.
    fn image_coords(&self, w: &GroupElement, k: usize) -> Coords {
        let mut out = Coords::from_elem(0, self.rank());
        for (j, &c) in self.roots.root(k).iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.roots.root(w.images[j] as usize)) {
                *o += c * x;
            }
        }
        out
    }

    /// Index of `w(root k)`.
    pub fn apply(&self, w: &GroupElement, k: usize) -> usize {
        let c = self.image_coords(w, k);
        self.roots
            .index_of(&c)
            .expect("image of a root under a group element is a root")
    }

    /// The permutation of root indices induced by `w`.
    pub fn root_permutation(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.roots.roots().len()).map(|k| self.apply(w, k)).collect()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &GroupElement) -> usize {
        (0..self.roots.positive_count())
            .filter(|&k| {
                let c = self.image_coords(w, k);
                c.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0)
            })
            .count()
    }

    /// `l(w s_i) < l(w)`, i.e. `w(alpha_i)` is negative.
    pub fn right_descent(&self, w: &GroupElement, i: usize) -> bool {
        !self.roots.is_positive(w.images[i] as usize)
    }

    /// `l(s_i w) < l(w)`, i.e. `w^{-1}(alpha_i)` is negative.
    pub fn left_descent(&self, w: &GroupElement, i: usize) -> bool {
        self.right_descent(&self.inverse(w), i)
    }

    pub fn first_right_descent(&self, w: &GroupElement) -> Option<usize> {
        (0..self.rank()).find(|&i| self.right_descent(w, i))
    }

    pub fn right_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.right_descent(w, i)).collect()
    }

    pub fn is_identity(&self, w: &GroupElement) -> bool {
        w.images.iter().enumerate().all(|(i, &k)| k as usize == i)
    }

    /// `w s_i`: `(w s_i)(alpha_j) = w(alpha_j) - a_ij w(alpha_i)`.
    pub fn mult_simple_right(&self, w: &GroupElement, i: usize) -> GroupElement {
        let wi = self.roots.root(w.images[i] as usize);
        let images = (0..self.rank())
            .map(|j| {
                if j == i {
                    return self.roots.negate(w.images[i] as usize) as u16;
                }
                let a = self.datum().entry(i, j);
                let wj = self.roots.root(w.images[j] as usize);
                if a == 0 {
                    return w.images[j];
                }
                let c: Coords = wj.iter().zip(wi).map(|(x, y)| x - a * y).collect();
                self.roots.index_of(&c).expect("reflected root") as u16
            })
            .collect();
        GroupElement { images }
    }

    /// `s_i w`.
    pub fn mult_simple_left(&self, i: usize, w: &GroupElement) -> GroupElement {
        GroupElement {
            images: w
                .images
                .iter()
                .map(|&k| self.roots.simple_action(i, k as usize) as u16)
                .collect(),
        }
    }

    pub fn multiply(&self, w: &GroupElement, v: &GroupElement) -> GroupElement {
        GroupElement {
            images: v
                .images
                .iter()
                .map(|&k| self.apply(w, k as usize) as u16)
                .collect(),
        }
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let perm = self.root_permutation(w);
        let mut images: SmallVec<[u16; 8]> = SmallVec::from_elem(0, self.rank());
        for (k, &image) in perm.iter().enumerate() {
            if image < self.rank() {
                images[image] = k as u16;
            }
        }
        GroupElement { images }
    }

    /// The element sending every positive root to a negative root, built by
    /// climbing through the smallest ascent.
    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        while let Some(i) = (0..self.rank()).find(|&i| !self.right_descent(&w, i)) {
            w = self.mult_simple_right(&w, i);
        }
        w
    }

    /// Every element exactly once, ordered by length and then canonical key.
    pub fn enumerate(&self) -> Vec<GroupElement> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        let e = self.identity();
        seen.insert(e.clone());
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let ws = self.mult_simple_right(&w, i);
                if seen.insert(ws.clone()) {
                    queue.push_back(ws);
                }
            }
        }
        let mut out: Vec<(usize, GroupElement)> =
            seen.into_iter().map(|w| (self.length(&w), w)).collect();
        out.sort();
        out.into_iter().map(|(_, w)| w).collect()
    }

    /// Product of 0-based generators, left to right. The word need not be
    /// reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &i in word {
            if i >= self.rank() {
                return Err(Error::BadIndex {
                    index: i + 1,
                    rank: self.rank(),
                });
            }
            w = self.mult_simple_right(&w, i);
        }
        Ok(w)
    }

    /// Lexicographically smallest reduced word (0-based), found by peeling
    /// off the smallest left descent each step.
    pub fn to_reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut u = self.inverse(w);
        let mut word = Vec::new();
        while let Some(i) = self.first_right_descent(&u) {
            word.push(i);
            u = self.mult_simple_right(&u, i);
        }
        word
    }

    /// Parses `e`, a 1-based generator word such as `1 2 1` or `1,2,1`, or
    /// for type A a one-line permutation such as `p:2314`.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(self.identity());
        }
        if let Some(perm) = text.strip_prefix("p:") {
            return self.parse_permutation(perm);
        }
        let mut word = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let index: usize = token
                .parse()
                .map_err(|_| Error::BadSyntax(text.to_string()))?;
            if index == 0 || index > self.rank() {
                return Err(Error::BadIndex {
                    index,
                    rank: self.rank(),
                });
            }
            word.push(index - 1);
        }
        self.from_word(&word)
    }

    /// Reduced word in the element syntax accepted by [`Self::parse_element`].
    pub fn format_element(&self, w: &GroupElement) -> String {
        format_word(&self.to_reduced_word(w))
    }

    /// Bruhat order by descent recursion: with `s` the smallest right descent
    /// of `w`, `v <= w` iff `vs <= ws` when `s` is also a descent of `v`, and
    /// iff `v <= ws` otherwise.
    pub fn bruhat_leq(&self, v: &GroupElement, w: &GroupElement) -> bool {
        if self.is_identity(v) {
            return true;
        }
        if v == w {
            return true;
        }
        if let Some(known) = self.bruhat.get(v, w) {
            return known;
        }
        let result = if self.length(v) >= self.length(w) {
            false
        } else {
            let i = self
                .first_right_descent(w)
                .expect("w has positive length");
            let ws = self.mult_simple_right(w, i);
            if self.right_descent(v, i) {
                self.bruhat_leq(&self.mult_simple_right(v, i), &ws)
            } else {
                self.bruhat_leq(v, &ws)
            }
        };
        self.bruhat.insert(v, w, result)
    }

    /// `1` if `v <= w`, else `0`.
    pub fn hom_dim(&self, v: &GroupElement, w: &GroupElement) -> u32 {
        u32::from(self.bruhat_leq(v, w))
    }
}

/// Renders a 0-based word as 1-based indices, `e` for the empty word.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images.as_slice())
    }
}
