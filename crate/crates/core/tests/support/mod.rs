//! Test-only reference implementations, written independently of the sparse
//! library code.
#![allow(dead_code, clippy::needless_range_loop)]

use nalgebra::DMatrix;
use qwalk::{Complex, WalkKind, WalkerCoinState};

/// Dense `(2T+1) × (2T+1) × dim` amplitude tensor centred on the origin.
#[derive(Clone)]
pub struct DenseWalk {
    pub half: i64,
    pub dim: usize,
    pub data: Vec<Complex>,
}

impl DenseWalk {
    pub fn origin(half: i64, coin: &[Complex]) -> Self {
        let side = (2 * half + 1) as usize;
        let mut w = DenseWalk {
            half,
            dim: coin.len(),
            data: vec![Complex::new(0.0, 0.0); side * side * coin.len()],
        };
        for (c, &a) in coin.iter().enumerate() {
            *w.at_mut(0, 0, c) = a;
        }
        w
    }

    fn side(&self) -> usize {
        (2 * self.half + 1) as usize
    }

    fn idx(&self, x: i64, y: i64, c: usize) -> usize {
        let side = self.side();
        let i = (x + self.half) as usize;
        let j = (y + self.half) as usize;
        (i * side + j) * self.dim + c
    }

    pub fn at(&self, x: i64, y: i64, c: usize) -> Complex {
        self.data[self.idx(x, y, c)]
    }

    fn at_mut(&mut self, x: i64, y: i64, c: usize) -> &mut Complex {
        let k = self.idx(x, y, c);
        &mut self.data[k]
    }

    fn zeroed(&self) -> Self {
        DenseWalk {
            half: self.half,
            dim: self.dim,
            data: vec![Complex::new(0.0, 0.0); self.data.len()],
        }
    }

    fn coords(&self) -> impl Iterator<Item = (i64, i64)> {
        let h = self.half;
        (-h..=h).flat_map(move |x| (-h..=h).map(move |y| (x, y)))
    }

    /// Moves coin `c` amplitudes by `moves[c]`; anything pushed off the box must
    /// be zero.
    fn shift(&self, moves: &[(i64, i64)]) -> Self {
        let mut out = self.zeroed();
        for (x, y) in self.coords() {
            for c in 0..self.dim {
                let a = self.at(x, y, c);
                if a == Complex::new(0.0, 0.0) {
                    continue;
                }
                let (nx, ny) = (x + moves[c].0, y + moves[c].1);
                assert!(
                    nx.abs() <= self.half && ny.abs() <= self.half,
                    "walk left the box"
                );
                *out.at_mut(nx, ny, c) = a;
            }
        }
        out
    }

    fn coin(&self, m: &[Vec<f64>]) -> Self {
        let mut out = self.zeroed();
        for (x, y) in self.coords() {
            for r in 0..self.dim {
                let mut acc = Complex::new(0.0, 0.0);
                for c in 0..self.dim {
                    acc += self.at(x, y, c) * m[r][c];
                }
                *out.at_mut(x, y, r) = acc;
            }
        }
        out
    }

    pub fn step(&self, kind: WalkKind) -> Self {
        let h = 1.0 / 2f64.sqrt();
        match kind {
            WalkKind::Alternate => {
                let had = vec![vec![h, h], vec![h, -h]];
                self.coin(&had)
                    .shift(&[(-1, 0), (1, 0)])
                    .coin(&had)
                    .shift(&[(0, -1), (0, 1)])
            }
            WalkKind::Grover => {
                let g: Vec<Vec<f64>> = (0..4)
                    .map(|r| (0..4).map(|c| if r == c { -0.5 } else { 0.5 }).collect())
                    .collect();
                self.coin(&g).shift(&[(-1, -1), (-1, 1), (1, -1), (1, 1)])
            }
        }
    }

    pub fn evolve(kind: WalkKind, coin: &[Complex], t: usize) -> Self {
        let mut w = DenseWalk::origin(t.max(1) as i64, coin);
        for _ in 0..t {
            w = w.step(kind);
        }
        w
    }

    /// Largest amplitude difference against a sparse state, over the whole box
    /// and every stored sparse entry.
    pub fn max_deviation(&self, sparse: &WalkerCoinState) -> f64 {
        let mut worst = 0.0f64;
        for (x, y) in self.coords() {
            for c in 0..self.dim {
                worst = worst.max((self.at(x, y, c) - sparse.amplitude(x, y, c)).norm());
            }
        }
        for (p, _, _) in sparse.iter() {
            if p.x.abs() > self.half || p.y.abs() > self.half {
                return f64::INFINITY;
            }
        }
        worst
    }
}

/// Coin-traced walker density matrix over `sites`.
pub fn traced_density(state: &WalkerCoinState, sites: &[(i64, i64)]) -> DMatrix<Complex> {
    let n = sites.len();
    DMatrix::from_fn(n, n, |i, j| {
        (0..state.coin_dim())
            .map(|c| {
                state.amplitude(sites[i].0, sites[i].1, c)
                    * state.amplitude(sites[j].0, sites[j].1, c).conj()
            })
            .sum()
    })
}

/// Occupied sites of a state, sorted.
pub fn occupied_sites(state: &WalkerCoinState) -> Vec<(i64, i64)> {
    let mut v: Vec<_> = state.iter().map(|(p, _, _)| (p.x, p.y)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Random complex matrix with unit Frobenius norm from a small deterministic
/// generator.
pub fn random_normalized(rows: usize, cols: usize, seed: u64) -> DMatrix<Complex> {
    let mut s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = move || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let m = DMatrix::from_fn(rows, cols, |_, _| Complex::new(next(), next()));
    let n = m.norm();
    m.map(|z| z / n)
}
