//! Amplitudes, lattice sites, coin vectors and the sparse walker-coin state.
//!
//! A [`WalkerCoinState`] is a finite superposition over basis kets
//! `|x, y, c>` where `(x, y)` is a site of the square lattice and `c` is a coin
//! index. Only nonzero amplitudes are stored; after `t` steps from the origin
//! the support fits in a `(2t + 1)²` box, so the infinite lattice never needs
//! truncating.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub use num_complex::Complex64 as Complex;

/// Deviation of the squared norm from 1 accepted by operations that require
/// normalized input.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// A lattice site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub x: i64,
    pub y: i64,
}

impl Position {
    pub const ORIGIN: Position = Position { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Position { x, y }
    }

    pub const fn offset(self, dx: i64, dy: i64) -> Self {
        Position {
            x: self.x + dx,
            y: self.y + dy,
        }
    }
}

impl From<(i64, i64)> for Position {
    fn from((x, y): (i64, i64)) -> Self {
        Position { x, y }
    }
}

/// A vector in the coin space, of dimension 2 or 4.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinVector {
    entries: Vec<Complex>,
}

impl CoinVector {
    pub fn new(entries: Vec<Complex>) -> Result<Self> {
        check_coin_dim(entries.len())?;
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidArgument("non-finite coin entry".into()));
        }
        Ok(CoinVector { entries })
    }

    /// Builds a coin vector from real entries.
    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&r| Complex::new(r, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn norm_squared(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &CoinVector) -> Complex {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Multiplies every entry by `factor`.
    pub fn scaled(&self, factor: Complex) -> CoinVector {
        CoinVector {
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        let n = self.norm_squared();
        if (n - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Unnormalized { norm_squared: n });
        }
        Ok(())
    }
}

pub(crate) fn check_coin_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 => Ok(()),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Key of a basis ket `|x, y, c>`.
pub type Ket = (Position, usize);

/// Sparse superposition over `|x, y, c>` kets.
///
/// Entries are kept in a `BTreeMap` ordered by `(x, y, c)`, so iteration order
/// (and therefore every floating-point reduction over the state) is
/// deterministic, and all coin components of one site are adjacent.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkerCoinState {
    coin_dim: usize,
    amplitudes: BTreeMap<Ket, Complex>,
    prune_threshold: f64,
}

impl WalkerCoinState {
    /// An empty state with the given coin dimension.
    pub fn empty(coin_dim: usize) -> Result<Self> {
        check_coin_dim(coin_dim)?;
        Ok(WalkerCoinState {
            coin_dim,
            amplitudes: BTreeMap::new(),
            prune_threshold: 0.0,
        })
    }

    /// `|site> ⊗ coin`.
    pub fn localized(site: Position, coin: &CoinVector) -> Self {
        let mut state = WalkerCoinState {
            coin_dim: coin.dim(),
            amplitudes: BTreeMap::new(),
            prune_threshold: 0.0,
        };
        for (c, &a) in coin.entries().iter().enumerate() {
            state.insert_raw((site, c), a);
        }
        state
    }

    /// Builds a state from explicit `(x, y, c, amplitude)` entries. Repeated
    /// kets are summed.
    pub fn from_entries<I>(coin_dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64, usize, Complex)>,
    {
        let mut state = Self::empty(coin_dim)?;
        for (x, y, c, a) in entries {
            if c >= coin_dim {
                return Err(Error::InvalidArgument(format!(
                    "coin index {c} out of range for dimension {coin_dim}"
                )));
            }
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::InvalidArgument("non-finite amplitude".into()));
            }
            state.add((Position::new(x, y), c), a);
        }
        Ok(state)
    }

    /// Sets the magnitude at or below which amplitudes are dropped. The default
    /// of 0 drops exact zeros only.
    pub fn with_prune_threshold(mut self, threshold: f64) -> Self {
        self.prune_threshold = threshold.max(0.0);
        let t = self.prune_threshold;
        self.amplitudes.retain(|_, a| a.norm() > t);
        self
    }

    pub fn prune_threshold(&self) -> f64 {
        self.prune_threshold
    }

    pub fn coin_dim(&self) -> usize {
        self.coin_dim
    }

    /// Number of stored (nonzero) amplitudes.
    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitude(&self, x: i64, y: i64, c: usize) -> Complex {
        self.amplitudes
            .get(&(Position::new(x, y), c))
            .copied()
            .unwrap_or_default()
    }

    /// Iterates over stored amplitudes in `(x, y, c)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Position, usize, Complex)> + '_ {
        self.amplitudes.iter().map(|(&(p, c), &a)| (p, c, a))
    }

    /// Iterates over occupied sites, yielding the full coin vector at each.
    pub fn sites(&self) -> impl Iterator<Item = (Position, Vec<Complex>)> + '_ {
        SiteIter {
            inner: self.amplitudes.iter().peekable(),
            coin_dim: self.coin_dim,
        }
    }

    /// `Σ |amplitude|²`.
    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn require_normalized(&self) -> Result<()> {
        let n = self.norm_squared();
        if (n - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Unnormalized { norm_squared: n });
        }
        Ok(())
    }

    pub(crate) fn require_dim(&self, expected: usize) -> Result<()> {
        if self.coin_dim != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.coin_dim,
            });
        }
        Ok(())
    }

    /// A new empty state sharing this state's coin dimension and prune setting.
    pub(crate) fn blank(&self) -> Self {
        WalkerCoinState {
            coin_dim: self.coin_dim,
            amplitudes: BTreeMap::new(),
            prune_threshold: self.prune_threshold,
        }
    }

    pub(crate) fn insert_raw(&mut self, ket: Ket, amplitude: Complex) {
        if amplitude.norm() > self.prune_threshold {
            self.amplitudes.insert(ket, amplitude);
        }
    }

    pub(crate) fn add(&mut self, ket: Ket, amplitude: Complex) {
        let entry = self.amplitudes.entry(ket).or_default();
        *entry += amplitude;
        if entry.norm() <= self.prune_threshold {
            self.amplitudes.remove(&ket);
        }
    }

    /// Moves every amplitude to a new ket. `remap` must be injective.
    pub(crate) fn remap_kets(&self, remap: impl Fn(Ket) -> Ket) -> Self {
        WalkerCoinState {
            coin_dim: self.coin_dim,
            amplitudes: self
                .amplitudes
                .iter()
                .map(|(&k, &a)| (remap(k), a))
                .collect(),
            prune_threshold: self.prune_threshold,
        }
    }
}

struct SiteIter<'a> {
    inner: std::iter::Peekable<std::collections::btree_map::Iter<'a, Ket, Complex>>,
    coin_dim: usize,
}

impl Iterator for SiteIter<'_> {
    type Item = (Position, Vec<Complex>);

    fn next(&mut self) -> Option<Self::Item> {
        let (&(site, c), &a) = self.inner.next()?;
        let mut coin = vec![Complex::default(); self.coin_dim];
        coin[c] = a;
        while let Some(&(&(p, c), &a)) = self.inner.peek() {
            if p != site {
                break;
            }
            coin[c] = a;
            self.inner.next();
        }
        Some((site, coin))
    }
}

/// `Σ |amplitude|²` of the state.
pub fn norm_squared(state: &WalkerCoinState) -> f64 {
    state.norm_squared()
}

/// Probability of finding the walker at each site, summed over the coin.
pub fn position_distribution(state: &WalkerCoinState) -> Result<BTreeMap<Position, f64>> {
    state.require_normalized()?;
    let mut dist = BTreeMap::new();
    for (p, _, a) in state.iter() {
        *dist.entry(p).or_insert(0.0) += a.norm_sqr();
    }
    Ok(dist)
}

/// Marginal distribution of the x coordinate.
pub fn marginal_x(state: &WalkerCoinState) -> Result<BTreeMap<i64, f64>> {
    let mut out = BTreeMap::new();
    for (p, prob) in position_distribution(state)? {
        *out.entry(p.x).or_insert(0.0) += prob;
    }
    Ok(out)
}

/// Marginal distribution of the y coordinate.
pub fn marginal_y(state: &WalkerCoinState) -> Result<BTreeMap<i64, f64>> {
    let mut out = BTreeMap::new();
    for (p, prob) in position_distribution(state)? {
        *out.entry(p.y).or_insert(0.0) += prob;
    }
    Ok(out)
}
