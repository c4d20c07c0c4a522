//! Finite root systems generated from Cartan data.

use std::collections::{HashMap, VecDeque};

use smallvec::SmallVec;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};

/// Root coordinates in the simple-root basis.
pub type Coords = SmallVec<[i32; 8]>;

/// Roots of E8 plus slack.
pub const DEFAULT_ROOT_CAP: usize = 500;

/// All roots of a finite root system together with the simple reflections
/// acting on root indices.
///
/// Positive roots occupy indices `0..positive_count`, ordered by height and
/// then by descending coordinates, so simple root `i` has index `i`. The
/// negative of root `k` sits at `k + positive_count`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    roots: Vec<Coords>,
    positive_count: usize,
    simple_action: Vec<Vec<u16>>,
    index: HashMap<Coords, u16>,
}

impl RootSystem {
    pub fn new(datum: CartanDatum) -> Result<Self> {
        Self::with_cap(datum, DEFAULT_ROOT_CAP)
    }

    /// Closes the simple roots under the simple reflections, failing once
    /// more than `cap` roots have been found.
    pub fn with_cap(datum: CartanDatum, cap: usize) -> Result<Self> {
        let rank = datum.rank();
        let mut seen: HashMap<Coords, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut c = Coords::from_elem(0, rank);
            c[i] = 1;
            seen.insert(c.clone(), ());
            queue.push_back(c);
        }
        while let Some(root) = queue.pop_front() {
            for i in 0..rank {
                let image = reflect(&datum, i, &root).ok_or(Error::NonFiniteType { cap })?;
                if seen.contains_key(&image) {
                    continue;
                }
                let positive = image.iter().all(|&c| c >= 0);
                let negative = image.iter().all(|&c| c <= 0);
                if !positive && !negative {
                    return Err(Error::MalformedCartan(format!(
                        "reflection produced a root of mixed sign {:?}",
                        image.as_slice()
                    )));
                }
                seen.insert(image.clone(), ());
                if seen.len() > cap {
                    return Err(Error::NonFiniteType { cap });
                }
                queue.push_back(image);
            }
        }

        let mut positive: Vec<Coords> = seen
            .into_keys()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .collect();
        positive.sort_by(|a, b| {
            height(a)
                .cmp(&height(b))
                .then_with(|| b.as_slice().cmp(a.as_slice()))
        });
        let positive_count = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|c| c.iter().map(|x| -x).collect::<Coords>()));

        let index: HashMap<Coords, u16> = roots
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k as u16))
            .collect();
        let simple_action = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|r| index[&reflect(&datum, i, r).expect("closed root set")])
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            datum,
            roots,
            positive_count,
            simple_action,
            index,
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn roots(&self) -> &[Coords] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Coords {
        &self.roots[k]
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.positive_count
    }

    pub fn negate(&self, k: usize) -> usize {
        if k < self.positive_count {
            k + self.positive_count
        } else {
            k - self.positive_count
        }
    }

    /// Index of `s_i(root k)`.
    pub fn simple_action(&self, i: usize, k: usize) -> usize {
        self.simple_action[i][k] as usize
    }

    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).map(|&k| k as usize)
    }

    /// Weyl group order from the exponents, read off as the partition dual to
    /// the number of positive roots of each height.
    pub fn group_order(&self) -> u128 {
        let max_height = self.roots[..self.positive_count]
            .iter()
            .map(|c| height(c))
            .max()
            .unwrap_or(0);
        let mut per_height = vec![0usize; max_height as usize + 1];
        for c in &self.roots[..self.positive_count] {
            per_height[height(c) as usize] += 1;
        }
        // exponent m occurs (#height m) - (#height m+1) times
        let mut order: u128 = 1;
        for m in 1..=max_height as usize {
            let next = per_height.get(m + 1).copied().unwrap_or(0);
            for _ in 0..per_height[m] - next {
                order *= m as u128 + 1;
            }
        }
        order
    }
}

pub(crate) fn height(c: &[i32]) -> i32 {
    c.iter().sum()
}

/// `s_i(root)`, or `None` on coordinate overflow (only possible for
/// infinite type).
fn reflect(datum: &CartanDatum, i: usize, root: &[i32]) -> Option<Coords> {
    let mut pairing: i32 = 0;
    for (j, &c) in root.iter().enumerate() {
        pairing = pairing.checked_add(c.checked_mul(datum.entry(i, j))?)?;
    }
    let mut out: Coords = root.iter().copied().collect();
    out[i] = out[i].checked_sub(pairing)?;
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(label: &str) -> RootSystem {
        RootSystem::new(CartanDatum::from_label(label).unwrap()).unwrap()
    }

    #[test]
    fn classical_root_counts() {
        for (label, roots) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 12),
            ("B2", 8),
            ("B3", 18),
            ("C3", 18),
            ("D4", 24),
            ("G2", 12),
            ("F4", 48),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
            ("A1xA1", 4),
            ("A2xG2", 18),
        ] {
            let rs = system(label);
            assert_eq!(rs.roots().len(), roots, "{label}");
            assert_eq!(rs.positive_count() * 2, roots, "{label}");
        }
    }

    #[test]
    fn simple_roots_come_first() {
        let rs = system("B3");
        for i in 0..3 {
            let mut c = Coords::from_elem(0, 3);
            c[i] = 1;
            assert_eq!(rs.index_of(&c), Some(i));
            assert_eq!(rs.negate(i), i + rs.positive_count());
        }
    }

    #[test]
    fn positive_roots_are_nonnegative() {
        let rs = system("F4");
        for (k, c) in rs.roots().iter().enumerate() {
            assert_eq!(rs.is_positive(k), c.iter().all(|&x| x >= 0));
            let neg: Coords = c.iter().map(|x| -x).collect();
            assert_eq!(rs.index_of(&neg), Some(rs.negate(k)));
        }
    }

    #[test]
    fn simple_action_is_involution() {
        for label in ["A3", "B3", "G2", "D4"] {
            let rs = system(label);
            for i in 0..rs.rank() {
                assert_eq!(rs.simple_action(i, i), rs.negate(i));
                for k in 0..rs.roots().len() {
                    assert_eq!(rs.simple_action(i, rs.simple_action(i, k)), k);
                }
            }
        }
    }

    #[test]
    fn group_orders() {
        for (label, order) in [
            ("A1", 2u128),
            ("A4", 120),
            ("B3", 48),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
            ("E6", 51_840),
            ("E8", 696_729_600),
            ("A1xA1", 4),
        ] {
            assert_eq!(system(label).group_order(), order, "{label}");
        }
    }

    #[test]
    fn affine_input_is_rejected() {
        let affine = CartanDatum::new("A1~", vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(
            RootSystem::with_cap(affine, 50).unwrap_err(),
            Error::NonFiniteType { cap: 50 }
        );
        let hyperbolic = CartanDatum::new("H", vec![vec![2, -3], vec![-3, 2]]).unwrap();
        assert!(RootSystem::new(hyperbolic).is_err());
    }
}
