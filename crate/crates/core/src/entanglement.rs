//! Schmidt analysis of pure walker states across the x|y bipartition.
//!
//! A pure walker state `Σ ψ[x, y] |x>|y>` is reshaped into its coefficient
//! matrix `ψ`. The squared singular values of `ψ` are the eigenvalues of both
//! reduced density matrices `ρ_x = ψψ†` and `ρ_y = ψᵀψ*`, and the spatial
//! entanglement is their von Neumann entropy in bits.
//!
//! The singular-value route is the one used for results. The reduced density
//! matrices and a separate Jacobi eigensolver are kept as a cross-check.

use std::collections::BTreeMap;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::jacobi;
use crate::state::{Complex, Position};

/// Spectrum values in `[-tolerance, 0)` are roundoff and clamp to zero.
pub const NEGATIVE_EIGENVALUE_TOLERANCE: f64 = 1e-12;

/// Maximum deviation of a spectrum's sum from 1 accepted by
/// [`von_neumann_entropy`].
pub const SPECTRUM_SUM_TOLERANCE: f64 = 1e-6;

const SVD_MAX_ITERATIONS: usize = 100_000;

/// A walker state with the coin removed.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PureWalkerState {
    amplitudes: BTreeMap<Position, Complex>,
}

impl PureWalkerState {
    pub fn new(amplitudes: BTreeMap<Position, Complex>) -> Self {
        PureWalkerState { amplitudes }
    }

    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, Complex)>,
    {
        let mut amplitudes = BTreeMap::new();
        for (x, y, a) in entries {
            *amplitudes.entry(Position::new(x, y)).or_default() += a;
        }
        PureWalkerState { amplitudes }
    }

    pub fn amplitudes(&self) -> &BTreeMap<Position, Complex> {
        &self.amplitudes
    }

    pub fn amplitude(&self, x: i64, y: i64) -> Complex {
        self.amplitudes
            .get(&Position::new(x, y))
            .copied()
            .unwrap_or_default()
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }
}

/// Dense `ψ[x, y]` over the occupied coordinates of a pure walker state.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatrix {
    pub x_values: Vec<i64>,
    pub y_values: Vec<i64>,
    pub entries: DMatrix<Complex>,
}

impl CoefficientMatrix {
    pub fn rows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn cols(&self) -> usize {
        self.entries.ncols()
    }

    /// Wraps a dense matrix, indexing rows and columns from 0.
    pub fn from_dense(entries: DMatrix<Complex>) -> Self {
        CoefficientMatrix {
            x_values: (0..entries.nrows() as i64).collect(),
            y_values: (0..entries.ncols() as i64).collect(),
            entries,
        }
    }
}

/// Squared Schmidt coefficients in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    values: Vec<f64>,
}

impl SchmidtSpectrum {
    /// Sorts the values descending, clamping roundoff negatives in
    /// `[-1e-12, 0)` to zero and values above 1 to 1. Anything more negative is
    /// a numerical error.
    pub fn from_values(mut values: Vec<f64>) -> Result<Self> {
        for v in values.iter_mut() {
            if !v.is_finite() {
                return Err(Error::Numerical("non-finite spectrum value".into()));
            }
            if *v < -NEGATIVE_EIGENVALUE_TOLERANCE {
                return Err(Error::Numerical(format!("negative eigenvalue {v:e}")));
            }
            *v = v.clamp(0.0, 1.0);
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(SchmidtSpectrum { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Reshapes a pure walker state into its coefficient matrix.
pub fn coefficient_matrix(state: &PureWalkerState) -> Result<CoefficientMatrix> {
    if state.is_empty() {
        return Err(Error::EmptyState);
    }
    let mut x_values: Vec<i64> = state.amplitudes.keys().map(|p| p.x).collect();
    let mut y_values: Vec<i64> = state.amplitudes.keys().map(|p| p.y).collect();
    x_values.sort_unstable();
    x_values.dedup();
    y_values.sort_unstable();
    y_values.dedup();
    let x_index: BTreeMap<i64, usize> = x_values.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let y_index: BTreeMap<i64, usize> = y_values.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    let mut entries = DMatrix::zeros(x_values.len(), y_values.len());
    for (p, &a) in &state.amplitudes {
        entries[(x_index[&p.x], y_index[&p.y])] = a;
    }
    Ok(CoefficientMatrix {
        x_values,
        y_values,
        entries,
    })
}

/// `ρ_x = ψψ†`, the state of the x coordinate with y traced out.
pub fn reduced_density_x(m: &CoefficientMatrix) -> DMatrix<Complex> {
    &m.entries * m.entries.adjoint()
}

/// `ρ_y = ψᵀψ*`, the state of the y coordinate with x traced out.
pub fn reduced_density_y(m: &CoefficientMatrix) -> DMatrix<Complex> {
    m.entries.transpose() * m.entries.map(|z| z.conj())
}

/// Squared singular values of `ψ`.
pub fn schmidt_spectrum(m: &CoefficientMatrix) -> Result<SchmidtSpectrum> {
    let svd = nalgebra::SVD::try_new(
        m.entries.clone(),
        false,
        false,
        f64::EPSILON,
        SVD_MAX_ITERATIONS,
    )
    .ok_or_else(|| Error::Numerical("SVD did not converge".into()))?;
    SchmidtSpectrum::from_values(svd.singular_values.iter().map(|s| s * s).collect())
}

/// Eigenvalues of a reduced density matrix, computed with the Jacobi solver.
pub fn density_spectrum(rho: &DMatrix<Complex>) -> Result<SchmidtSpectrum> {
    SchmidtSpectrum::from_values(jacobi::hermitian_eigenvalues(rho)?)
}

/// `-Σ p log₂ p`, with `0 log 0 = 0`.
pub fn von_neumann_entropy(spectrum: &SchmidtSpectrum) -> Result<f64> {
    let sum = spectrum.sum();
    if (sum - 1.0).abs() > SPECTRUM_SUM_TOLERANCE {
        return Err(Error::Numerical(format!("spectrum sums to {sum}, not 1")));
    }
    let s: f64 = spectrum
        .values
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum();
    Ok(s.max(0.0))
}

/// Entanglement between the x and y coordinates of a pure walker state, in
/// bits.
pub fn spatial_entanglement(state: &PureWalkerState) -> Result<f64> {
    von_neumann_entropy(&schmidt_spectrum(&coefficient_matrix(state)?)?)
}
