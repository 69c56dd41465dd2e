//! Projective coin measurements and the measurement-averaged spatial
//! entanglement.
//!
//! Measuring the coin in an orthonormal basis `{b_k}` leaves the walker in the
//! pure state `Σ_{x,y} <b_k|ψ(x, y)> |x, y>` (up to normalization) with
//! probability equal to that vector's squared norm. The induced entanglement
//! of a basis is the probability-weighted mean of the outcomes' spatial
//! entanglement.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::entanglement::{spatial_entanglement, PureWalkerState};
use crate::error::{Error, Result};
use crate::state::{check_coin_dim, CoinVector, Complex, WalkerCoinState};

/// Outcomes with probability below this get no post-measurement state and
/// contribute nothing to the average entanglement.
pub const P_FLOOR: f64 = 1e-14;

/// Orthonormality tolerance for [`CoinBasis::new`].
pub const ORTHONORMAL_TOLERANCE: f64 = 1e-10;

/// Angle slack allowed at the ends of the parameter ranges of [`qubit_basis`].
const ANGLE_SLACK: f64 = 1e-12;

/// An ordered orthonormal basis of the coin space.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinBasis {
    vectors: Vec<CoinVector>,
}

impl CoinBasis {
    /// Checks dimensions and orthonormality.
    pub fn new(vectors: Vec<CoinVector>) -> Result<Self> {
        let dim = vectors.len();
        check_coin_dim(dim)?;
        for v in &vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
        }
        let basis = CoinBasis { vectors };
        let defect = basis.orthonormality_defect();
        if defect > ORTHONORMAL_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "basis vectors are not orthonormal (Gram defect {defect:e})"
            )));
        }
        Ok(basis)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[CoinVector] {
        &self.vectors
    }

    /// Largest entry of `|G - I|` where `G` is the Gram matrix.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, u) in self.vectors.iter().enumerate() {
            for (j, v) in self.vectors.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((u.inner(v) - target).norm());
            }
        }
        worst
    }
}

fn basis_unchecked(rows: Vec<Vec<Complex>>) -> CoinBasis {
    CoinBasis {
        vectors: rows
            .into_iter()
            .map(|r| CoinVector::new(r).expect("valid coin vector"))
            .collect(),
    }
}

/// `{cosθ|0> + e^{iφ}sinθ|1>, sinθ|0> - e^{iφ}cosθ|1>}` for `θ ∈ [0, π/2]`,
/// `φ ∈ [0, π]`.
pub fn qubit_basis(theta: f64, phi: f64) -> Result<CoinBasis> {
    if !(-ANGLE_SLACK..=FRAC_PI_2 + ANGLE_SLACK).contains(&theta) {
        return Err(Error::OutOfRange {
            name: "theta",
            value: theta,
            range: "[0, pi/2]",
        });
    }
    if !(-ANGLE_SLACK..=PI + ANGLE_SLACK).contains(&phi) {
        return Err(Error::OutOfRange {
            name: "phi",
            value: phi,
            range: "[0, pi]",
        });
    }
    let (s, c) = theta.sin_cos();
    let phase = Complex::from_polar(1.0, phi);
    Ok(basis_unchecked(vec![
        vec![Complex::new(c, 0.0), phase * s],
        vec![Complex::new(s, 0.0), -phase * c],
    ]))
}

/// The standard basis of the coin space.
pub fn computational_basis(dim: usize) -> Result<CoinBasis> {
    check_coin_dim(dim)?;
    Ok(basis_unchecked(
        (0..dim)
            .map(|k| {
                (0..dim)
                    .map(|c| Complex::new(if c == k { 1.0 } else { 0.0 }, 0.0))
                    .collect()
            })
            .collect(),
    ))
}

fn bell_pair_basis(pairs: [(usize, usize); 2]) -> CoinBasis {
    let mut rows = Vec::with_capacity(4);
    for (a, b) in pairs {
        for sign in [1.0, -1.0] {
            let mut v = vec![Complex::default(); 4];
            v[a] = Complex::new(FRAC_1_SQRT_2, 0.0);
            v[b] = Complex::new(sign * FRAC_1_SQRT_2, 0.0);
            rows.push(v);
        }
    }
    basis_unchecked(rows)
}

/// `{(|0>±|3>)/√2, (|1>±|2>)/√2}`: the Grover-walk basis that maximizes the
/// induced entanglement.
pub fn grover_max_basis() -> CoinBasis {
    bell_pair_basis([(0, 3), (1, 2)])
}

/// `{(|0>±|1>)/√2, (|2>±|3>)/√2}`: a Grover-walk basis at the bottom of the
/// induced-entanglement range.
pub fn grover_min_basis() -> CoinBasis {
    bell_pair_basis([(0, 1), (2, 3)])
}

/// One result of a projective coin measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementOutcome {
    pub index: usize,
    pub probability: f64,
    /// Normalized walker state, `None` when `probability < P_FLOOR`.
    pub post_state: Option<PureWalkerState>,
}

/// Projects the coin onto each basis vector in turn.
pub fn measure_coin(state: &WalkerCoinState, basis: &CoinBasis) -> Result<Vec<MeasurementOutcome>> {
    state.require_dim(basis.dim())?;
    state.require_normalized()?;
    let mut projected: Vec<BTreeMap<_, Complex>> = vec![BTreeMap::new(); basis.dim()];
    for (site, coin) in state.sites() {
        for (k, b) in basis.vectors().iter().enumerate() {
            let a: Complex = b
                .entries()
                .iter()
                .zip(&coin)
                .map(|(bc, z)| bc.conj() * z)
                .sum();
            if a != Complex::default() {
                projected[k].insert(site, a);
            }
        }
    }
    Ok(projected
        .into_iter()
        .enumerate()
        .map(|(index, amplitudes)| {
            let probability: f64 = amplitudes.values().map(|a| a.norm_sqr()).sum();
            let post_state = (probability >= P_FLOOR).then(|| {
                let scale = 1.0 / probability.sqrt();
                PureWalkerState::new(
                    amplitudes
                        .into_iter()
                        .map(|(p, a)| (p, a * scale))
                        .collect(),
                )
            });
            MeasurementOutcome {
                index,
                probability,
                post_state,
            }
        })
        .collect())
}

/// `Σ_k p_k S(ρ_x^(k))` over the outcomes of measuring the coin in `basis`.
pub fn average_induced_entanglement(state: &WalkerCoinState, basis: &CoinBasis) -> Result<f64> {
    let mut terms = Vec::with_capacity(basis.dim());
    for outcome in measure_coin(state, basis)? {
        if let Some(post) = &outcome.post_state {
            terms.push(outcome.probability * spatial_entanglement(post)?);
        }
    }
    // Summed in sorted order so the result does not depend on basis ordering.
    terms.sort_by(f64::total_cmp);
    Ok(terms.into_iter().sum())
}
