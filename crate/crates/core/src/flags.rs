//! Brute-force point counts for type A.
//!
//! Complete flags in `F_p^n` are enumerated one by one; for each flag the
//! relative positions to the standard and opposite coordinate flags decide
//! which cell intersection `C^v ∩ C_w` it lies in. Nothing here uses the
//! Bruhat order or the recursions, so the counts are an independent check on
//! the R-polynomials.
//!
//! Relative position follows the rank convention: `pos(F, G)` is the
//! permutation `u` with `dim(F_i ∩ G_j) = #{k <= i : u(k) <= j}`. For the
//! coordinate flag `E` and `F = uE` this gives `pos(E, F) = u^{-1}`, so
//!
//! * `C_w = { F : pos(E, F) = w^{-1} }` (the `B`-orbit of `wE`)
//! * `C^v = { F : pos(E', F) = v^{-1} w_0 }` (the `B^-`-orbit of `vE`), with
//!   `E' = w_0 E` the opposite flag.
//!
//! With these orientations `#(C^e ∩ C_s) = p - 1` and `#(C^v ∩ C_v) = 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::group::{GroupElement, WeylGroup};
use crate::perm::Permutation;
use crate::poly::IntPolynomial;

pub const DEFAULT_FLAG_BUDGET: u64 = 10_000_000;
pub const MAX_FLAG_DIMENSION: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p > u16::MAX as u32 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        // a^(p-2)
        let mut result = 1;
        let mut base = a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A subspace of `F_p^n` in reduced row echelon form, rows sorted by pivot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    rows: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace { rows: Vec::new() }
    }

    /// Span of arbitrary vectors.
    pub fn span(field: PrimeField, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut rows: Vec<Vec<u32>> = vectors.into_iter().collect();
        row_reduce(field, &mut rows);
        Subspace { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect()
    }

    pub fn intersection_dim(&self, other: &Subspace, field: PrimeField) -> usize {
        let mut rows: Vec<Vec<u32>> = self.rows.iter().chain(&other.rows).cloned().collect();
        row_reduce(field, &mut rows);
        self.dim() + other.dim() - rows.len()
    }
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
fn row_reduce(field: PrimeField, rows: &mut Vec<Vec<u32>>) {
    let Some(width) = rows.first().map(Vec::len) else {
        return;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col] == 0 {
                continue;
            }
            let factor = rows[r][col];
            let pivot = rows[rank].clone();
            for (x, &y) in rows[r].iter_mut().zip(&pivot) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
}

/// A complete flag `0 < F_1 < .. < F_{n-1} < F_p^n`; only the proper steps are
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagOverFq {
    n: usize,
    field: PrimeField,
    steps: Vec<Subspace>,
}

impl FlagOverFq {
    /// Builds the flag spanned by the leading columns of `basis`:
    /// `F_i = <basis[0], .., basis[i-1]>`.
    pub fn from_basis(field: PrimeField, basis: &[Vec<u32>]) -> Self {
        let n = basis.len();
        let steps = (1..n)
            .map(|i| Subspace::span(field, basis[..i].iter().cloned()))
            .collect();
        FlagOverFq { n, field, steps }
    }

    /// `F_i = <e_1, .., e_i>`
    pub fn standard(n: usize, field: PrimeField) -> Self {
        Self::from_basis(field, &unit_vectors(n))
    }

    /// `F_i = <e_n, .., e_{n-i+1}>`
    pub fn opposite(n: usize, field: PrimeField) -> Self {
        let mut basis = unit_vectors(n);
        basis.reverse();
        Self::from_basis(field, &basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    /// `dim(F_i ∩ G_j)` including the trivial steps `0` and `n`.
    fn meet_dim(&self, i: usize, other: &FlagOverFq, j: usize) -> usize {
        match (i, j) {
            (0, _) | (_, 0) => 0,
            (i, j) if i == self.n => j,
            (i, j) if j == self.n => i,
            _ => self.steps[i - 1].intersection_dim(&other.steps[j - 1], self.field),
        }
    }
}

fn unit_vectors(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect()
}

/// `prod_{k=1}^{n} (p^k - 1) / (p - 1)`, the number of complete flags.
pub fn flag_count(n: usize, field: PrimeField) -> u64 {
    let p = field.order() as u64;
    (1..=n as u32)
        .map(|k| (0..k).map(|e| p.pow(e)).sum::<u64>())
        .product()
}

fn check_dimension(n: usize) -> Result<()> {
    if (2..=MAX_FLAG_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionUnsupported(n))
    }
}

pub fn enumerate_flags(n: usize, field: PrimeField, budget: u64) -> Result<FlagIter> {
    check_dimension(n)?;
    let predicted = flag_count(n, field);
    if predicted > budget {
        return Err(Error::BudgetExceeded {
            n,
            p: field.order(),
            predicted,
            budget,
        });
    }
    Ok(FlagIter {
        n,
        field,
        chain: Vec::new(),
        cursors: vec![0; n - 1],
        done: false,
    })
}

/// Depth-first stream over all complete flags. Step `k + 1` extends step `k`
/// by a normalised vector supported off the pivot columns of step `k`, which
/// picks each line of the quotient exactly once.
#[derive(Debug, Clone)]
pub struct FlagIter {
    n: usize,
    field: PrimeField,
    chain: Vec<Subspace>,
    cursors: Vec<u64>,
    done: bool,
}

impl FlagIter {
    /// The `index`-th normalised vector (first nonzero entry 1) on `free`
    /// coordinates, or `None` past the end.
    fn candidate(&self, free: &[usize], index: u64) -> Option<Vec<u32>> {
        let p = self.field.order() as u64;
        let m = free.len();
        let mut index = index;
        for lead in 0..m {
            let tail = (m - lead - 1) as u32;
            let block = p.pow(tail);
            if index < block {
                let mut v = vec![0; self.n];
                v[free[lead]] = 1;
                for &col in &free[lead + 1..] {
                    v[col] = (index % p) as u32;
                    index /= p;
                }
                return Some(v);
            }
            index -= block;
        }
        None
    }
}

impl Iterator for FlagIter {
    type Item = FlagOverFq;

    fn next(&mut self) -> Option<FlagOverFq> {
        if self.done {
            return None;
        }
        loop {
            let level = self.chain.len();
            if level == self.n - 1 {
                let flag = FlagOverFq {
                    n: self.n,
                    field: self.field,
                    steps: self.chain.clone(),
                };
                self.chain.pop();
                return Some(flag);
            }
            let parent = self.chain.last().cloned().unwrap_or_else(Subspace::zero);
            let pivots = parent.pivots();
            let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
            match self.candidate(&free, self.cursors[level]) {
                Some(v) => {
                    self.cursors[level] += 1;
                    let step = Subspace::span(self.field, parent.rows.iter().cloned().chain([v]));
                    self.chain.push(step);
                    if level + 1 < self.n - 1 {
                        self.cursors[level + 1] = 0;
                    }
                }
                None => {
                    if level == 0 {
                        self.done = true;
                        return None;
                    }
                    self.chain.pop();
                }
            }
        }
    }
}

/// The permutation `u` with `dim(F_i ∩ G_j) = #{k <= i : u(k) <= j}`.
pub fn relative_permutation(f: &FlagOverFq, g: &FlagOverFq) -> Permutation {
    assert_eq!(f.n, g.n, "flags of different dimension");
    let n = f.n;
    let mut dims = vec![vec![0usize; n + 1]; n + 1];
    for (i, row) in dims.iter_mut().enumerate() {
        for (j, d) in row.iter_mut().enumerate() {
            *d = f.meet_dim(i, g, j);
        }
    }
    let images = (1..=n)
        .map(|i| {
            (1..=n)
                .find(|&j| dims[i][j] - dims[i - 1][j] == 1)
                .expect("rank jump exists")
                - 1
        })
        .collect();
    Permutation::new(images).expect("relative position is a permutation")
}

/// [`relative_permutation`] as an element of the type `A_{n-1}` group `g`.
pub fn relative_position(
    g: &WeylGroup,
    f: &FlagOverFq,
    other: &FlagOverFq,
) -> Result<GroupElement> {
    g.from_permutation(&relative_permutation(f, other))
}

fn type_a_dimension(g: &WeylGroup) -> Result<usize> {
    let n = g
        .datum()
        .type_a_rank()
        .map(|r| r + 1)
        .ok_or_else(|| Error::TypeUnsupported(g.label().to_string()))?;
    check_dimension(n)?;
    Ok(n)
}

/// Number of flags over `field` in `C^v ∩ C_w`.
pub fn count_richardson(
    g: &WeylGroup,
    v: &GroupElement,
    w: &GroupElement,
    field: PrimeField,
    budget: u64,
) -> Result<u64> {
    let n = type_a_dimension(g)?;
    let w0 = g.to_permutation(&g.longest_element())?;
    let target_std = g.to_permutation(w)?.inverse();
    let target_opp = g.to_permutation(v)?.inverse().compose(&w0);
    let std = FlagOverFq::standard(n, field);
    let opp = FlagOverFq::opposite(n, field);
    let mut count = 0;
    for flag in enumerate_flags(n, field, budget)? {
        if relative_permutation(&std, &flag) == target_std
            && relative_permutation(&opp, &flag) == target_opp
        {
            count += 1;
        }
    }
    Ok(count)
}

/// Point counts of every nonempty cell intersection, from a single pass over
/// the flags. Pairs absent from the map have count zero.
pub fn richardson_counts(
    g: &WeylGroup,
    field: PrimeField,
    budget: u64,
) -> Result<BTreeMap<(GroupElement, GroupElement), u64>> {
    let n = type_a_dimension(g)?;
    let w0 = g.to_permutation(&g.longest_element())?;
    let std = FlagOverFq::standard(n, field);
    let opp = FlagOverFq::opposite(n, field);
    let mut bins: BTreeMap<(Permutation, Permutation), u64> = BTreeMap::new();
    for flag in enumerate_flags(n, field, budget)? {
        let a = relative_permutation(&std, &flag);
        let b = relative_permutation(&opp, &flag);
        *bins.entry((a, b)).or_default() += 1;
    }
    let mut out = BTreeMap::new();
    for ((a, b), count) in bins {
        // a = w^{-1}, b = v^{-1} w0
        let w = g.from_permutation(&a.inverse())?;
        let v = g.from_permutation(&w0.compose(&b.inverse()))?;
        out.insert((v, w), count);
    }
    Ok(out)
}

/// The unique polynomial of degree at most `degree` through `points`, which
/// must have integer coefficients. Extra points beyond `degree + 1` are used
/// as consistency checks.
pub fn interpolate(points: &[(i64, i64)], degree: usize) -> Result<IntPolynomial> {
    let mut xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    xs.dedup();
    if xs.len() != points.len() || points.len() < degree + 1 {
        return Err(Error::InsufficientPoints {
            degree,
            needed: degree + 1,
            got: xs.len(),
        });
    }
    // Newton divided differences over the rationals
    let n = points.len();
    let mut table: Vec<Ratio<i128>> = points.iter().map(|p| Ratio::from(p.1 as i128)).collect();
    let mut newton = vec![table[0]];
    for level in 1..n {
        for k in 0..n - level {
            let dx = (points[k + level].0 - points[k].0) as i128;
            table[k] = (table[k + 1] - table[k]) / Ratio::from(dx);
        }
        newton.push(table[0]);
    }
    // expand sum c_k prod_{j<k} (q - x_j)
    let mut coeffs = vec![Ratio::from(0i128); n];
    let mut basis = vec![Ratio::from(1i128)];
    for (k, c) in newton.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += c * b;
        }
        let x = Ratio::from(points[k].0 as i128);
        let mut next = vec![Ratio::from(0i128); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * x;
        }
        basis = next;
    }
    let mut ints = Vec::with_capacity(n);
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::NotIntegral { degree });
        }
        let c = i64::try_from(c.to_integer()).map_err(|_| Error::NotIntegral { degree })?;
        ints.push(c);
    }
    let poly = IntPolynomial::new(ints);
    if poly.degree().is_some_and(|d| d > degree) {
        return Err(Error::NotIntegral { degree });
    }
    Ok(poly)
}

/// Recovers `R_{v,w}` from flag counts over the given fields.
pub fn interpolate_r(
    g: &WeylGroup,
    v: &GroupElement,
    w: &GroupElement,
    fields: &[PrimeField],
    budget: u64,
) -> Result<IntPolynomial> {
    let degree = g.length(w).saturating_sub(g.length(v));
    if fields.len() < degree + 1 {
        return Err(Error::InsufficientPoints {
            degree,
            needed: degree + 1,
            got: fields.len(),
        });
    }
    let points = fields
        .iter()
        .map(|&f| Ok((f.order() as i64, count_richardson(g, v, w, f, budget)? as i64)))
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points, degree)
}
