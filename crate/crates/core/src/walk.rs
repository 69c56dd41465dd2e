//! Shift and coin operators and the two walk evolutions.
//!
//! The alternate walk uses a qubit coin and one time step is the sequence
//! Hadamard, shift along x, Hadamard, shift along y. The Grover walk uses a
//! four-level coin; one step is the Grover diffusion coin followed by a
//! diagonal shift.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use crate::error::{Error, Result};
use crate::state::{CoinVector, Complex, Position, WalkerCoinState};

/// Which of the two walks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkKind {
    /// Qubit coin, dimension 2.
    Alternate,
    /// Four-level coin.
    Grover,
}

impl WalkKind {
    pub const fn coin_dim(self) -> usize {
        match self {
            WalkKind::Alternate => 2,
            WalkKind::Grover => 4,
        }
    }
}

/// The Hadamard coin.
pub const HADAMARD: [[f64; 2]; 2] = [
    [FRAC_1_SQRT_2, FRAC_1_SQRT_2],
    [FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
];

/// The Grover diffusion coin `2|s><s| - I` with `|s>` the uniform vector.
pub const GROVER: [[f64; 4]; 4] = [
    [-0.5, 0.5, 0.5, 0.5],
    [0.5, -0.5, 0.5, 0.5],
    [0.5, 0.5, -0.5, 0.5],
    [0.5, 0.5, 0.5, -0.5],
];

/// Displacement of each Grover coin state: left-down, left-up, right-down,
/// right-up.
pub const GROVER_MOVES: [(i64, i64); 4] = [(-1, -1), (-1, 1), (1, -1), (1, 1)];

fn apply_coin<const D: usize>(
    state: &WalkerCoinState,
    matrix: &[[f64; D]; D],
) -> Result<WalkerCoinState> {
    state.require_dim(D)?;
    let mut out = state.blank();
    for (site, coin) in state.sites() {
        for (row, weights) in matrix.iter().enumerate() {
            let a: Complex = weights.iter().zip(&coin).map(|(&w, &z)| z * w).sum();
            out.insert_raw((site, row), a);
        }
    }
    Ok(out)
}

fn shift_by(
    state: &WalkerCoinState,
    coin_dim: usize,
    sign: i64,
    moves: impl Fn(usize) -> (i64, i64),
) -> Result<WalkerCoinState> {
    state.require_dim(coin_dim)?;
    Ok(state.remap_kets(|(p, c)| {
        let (dx, dy) = moves(c);
        (p.offset(sign * dx, sign * dy), c)
    }))
}

fn qubit_x(c: usize) -> (i64, i64) {
    if c == 0 {
        (-1, 0)
    } else {
        (1, 0)
    }
}

fn qubit_y(c: usize) -> (i64, i64) {
    if c == 0 {
        (0, -1)
    } else {
        (0, 1)
    }
}

/// Conditional shift along x: coin 0 moves left, coin 1 moves right.
pub fn shift_x(state: &WalkerCoinState) -> Result<WalkerCoinState> {
    shift_by(state, 2, 1, qubit_x)
}

/// Conditional shift along y: coin 0 moves down, coin 1 moves up.
pub fn shift_y(state: &WalkerCoinState) -> Result<WalkerCoinState> {
    shift_by(state, 2, 1, qubit_y)
}

/// Diagonal conditional shift of the Grover walk, see [`GROVER_MOVES`].
pub fn shift_grover(state: &WalkerCoinState) -> Result<WalkerCoinState> {
    shift_by(state, 4, 1, |c| GROVER_MOVES[c])
}

pub fn hadamard_coin(state: &WalkerCoinState) -> Result<WalkerCoinState> {
    apply_coin(state, &HADAMARD)
}

pub fn grover_coin(state: &WalkerCoinState) -> Result<WalkerCoinState> {
    apply_coin(state, &GROVER)
}

/// One full time step of the given walk.
pub fn step(kind: WalkKind, state: &WalkerCoinState) -> Result<WalkerCoinState> {
    match kind {
        WalkKind::Alternate => {
            let s = hadamard_coin(state)?;
            let s = shift_x(&s)?;
            let s = hadamard_coin(&s)?;
            shift_y(&s)
        }
        WalkKind::Grover => shift_grover(&grover_coin(state)?),
    }
}

/// Inverse of [`step`]. Both coins are self-inverse, so only the shifts are
/// reversed.
pub fn unstep(kind: WalkKind, state: &WalkerCoinState) -> Result<WalkerCoinState> {
    match kind {
        WalkKind::Alternate => {
            let s = shift_by(state, 2, -1, qubit_y)?;
            let s = hadamard_coin(&s)?;
            let s = shift_by(&s, 2, -1, qubit_x)?;
            hadamard_coin(&s)
        }
        WalkKind::Grover => grover_coin(&shift_by(state, 4, -1, |c| GROVER_MOVES[c])?),
    }
}

/// Runs `t` steps starting from `|0, 0> ⊗ initial_coin`.
pub fn evolve(kind: WalkKind, initial_coin: &CoinVector, t: usize) -> Result<WalkerCoinState> {
    if initial_coin.dim() != kind.coin_dim() {
        return Err(Error::DimensionMismatch {
            expected: kind.coin_dim(),
            found: initial_coin.dim(),
        });
    }
    initial_coin.require_normalized()?;
    let mut state = WalkerCoinState::localized(Position::ORIGIN, initial_coin);
    for _ in 0..t {
        state = step(kind, &state)?;
    }
    Ok(state)
}

/// `(|0> + e^{iα}|1>)/√2`. `alpha` is taken modulo 2π; `alpha = π/2` gives the
/// initial coin whose position distribution is symmetric in both axes.
pub fn alternate_initial(alpha: f64) -> CoinVector {
    let alpha = alpha.rem_euclid(TAU);
    let phase = Complex::from_polar(FRAC_1_SQRT_2, alpha);
    CoinVector::new(vec![Complex::new(FRAC_1_SQRT_2, 0.0), phase]).expect("two finite entries")
}

/// `(|0> - |1> - |2> + |3>)/2`, the non-localizing Grover initial coin.
pub fn grover_initial() -> CoinVector {
    CoinVector::from_real(&[0.5, -0.5, -0.5, 0.5]).expect("four finite entries")
}
