//! Experiment procedures built on the walk and measurement layers: time
//! sweeps, the θ–φ grid search over qubit bases, Haar-random Grover bases and
//! the side-by-side comparison of the two walks.
//!
//! Independent work items (grid points, random samples, time steps) are
//! evaluated in parallel with rayon. Results are always collected in a fixed
//! order and every random sample has its own generator, so output never
//! depends on scheduling.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use nalgebra::Matrix4;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measurement::{
    average_induced_entanglement, computational_basis, grover_max_basis, qubit_basis, CoinBasis,
};
use crate::state::{CoinVector, Complex, WalkerCoinState};
use crate::walk::{alternate_initial, evolve, grover_initial, step, WalkKind};

/// Uniform grid over `θ ∈ [0, π/2]` and `φ ∈ [0, π]`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub theta_points: usize,
    pub phi_points: usize,
}

impl Default for GridSpec {
    /// 51 × 51, which puts `θ = π/4` and `φ = π/2` exactly on the grid.
    fn default() -> Self {
        GridSpec {
            theta_points: 51,
            phi_points: 51,
        }
    }
}

impl GridSpec {
    pub fn new(theta_points: usize, phi_points: usize) -> Result<Self> {
        let grid = GridSpec {
            theta_points,
            phi_points,
        };
        grid.validate()?;
        Ok(grid)
    }

    fn validate(&self) -> Result<()> {
        if self.theta_points < 2 || self.phi_points < 2 {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least 2 points per axis, got {}x{}",
                self.theta_points, self.phi_points
            )));
        }
        Ok(())
    }

    // The fraction is formed first so that midpoints and endpoints come out
    // as exact multiples of π.
    pub fn theta(&self, i: usize) -> f64 {
        (i as f64 / (self.theta_points - 1) as f64) * FRAC_PI_2
    }

    pub fn phi(&self, j: usize) -> f64 {
        (j as f64 / (self.phi_points - 1) as f64) * PI
    }

    pub fn len(&self) -> usize {
        self.theta_points * self.phi_points
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub theta: f64,
    pub phi: f64,
    pub entropy: f64,
}

/// Induced entanglement over a θ–φ grid, rows ordered by θ then φ.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropySurface {
    pub t: usize,
    pub grid: GridSpec,
    pub rows: Vec<SurfacePoint>,
    pub argmax: SurfacePoint,
    pub argmin: SurfacePoint,
}

impl EntropySurface {
    /// Value at grid indices `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> SurfacePoint {
        self.rows[i * self.grid.phi_points + j]
    }
}

/// Induced entanglement after each of `t = 1..=t_max` steps.
pub fn sweep_time(
    kind: WalkKind,
    initial: &CoinVector,
    basis: &CoinBasis,
    t_max: usize,
) -> Result<Vec<(usize, f64)>> {
    if t_max < 1 {
        return Err(Error::InvalidArgument("t_max must be at least 1".into()));
    }
    let states = evolve_each(kind, initial, 1, t_max)?;
    states
        .par_iter()
        .map(|(t, s)| Ok((*t, average_induced_entanglement(s, basis)?)))
        .collect()
}

/// States after `t_min..=t_max` steps, stepping incrementally.
fn evolve_each(
    kind: WalkKind,
    initial: &CoinVector,
    t_min: usize,
    t_max: usize,
) -> Result<Vec<(usize, WalkerCoinState)>> {
    let mut state = evolve(kind, initial, t_min)?;
    let mut out = Vec::with_capacity(t_max + 1 - t_min);
    for t in t_min..=t_max {
        if t > t_min {
            state = step(kind, &state)?;
        }
        out.push((t, state.clone()));
    }
    Ok(out)
}

/// Evolves the alternate walk for `t` steps once and evaluates every qubit
/// basis on the grid. Ties in argmax and argmin go to the smallest θ, then the
/// smallest φ.
pub fn grid_search_qubit(t: usize, initial: &CoinVector, grid: GridSpec) -> Result<EntropySurface> {
    if t < 1 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    grid.validate()?;
    let state = evolve(WalkKind::Alternate, initial, t)?;
    let rows: Vec<SurfacePoint> = (0..grid.len())
        .into_par_iter()
        .map(|k| {
            let theta = grid.theta(k / grid.phi_points);
            let phi = grid.phi(k % grid.phi_points);
            let entropy = average_induced_entanglement(&state, &qubit_basis(theta, phi)?)?;
            Ok(SurfacePoint {
                theta,
                phi,
                entropy,
            })
        })
        .collect::<Result<_>>()?;
    let mut argmax = rows[0];
    let mut argmin = rows[0];
    for p in &rows[1..] {
        if p.entropy > argmax.entropy {
            argmax = *p;
        }
        if p.entropy < argmin.entropy {
            argmin = *p;
        }
    }
    Ok(EntropySurface {
        t,
        grid,
        rows,
        argmax,
        argmin,
    })
}

/// Columns of a Haar-distributed 4×4 unitary.
///
/// A matrix of independent standard complex Gaussians is QR-factorized and
/// each column of `Q` is multiplied by the phase of the matching diagonal
/// entry of `R`, which makes the factorization unique and the distribution of
/// `Q` invariant under left and right multiplication by unitaries.
pub fn haar_random_basis4<R: Rng + ?Sized>(rng: &mut R) -> CoinBasis {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let z = Matrix4::<Complex>::from_fn(|_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex::new(re * scale, im * scale)
    });
    let qr = z.qr();
    let q = qr.q();
    let r = qr.r();
    let vectors = (0..4)
        .map(|j| {
            let d = r[(j, j)];
            let phase = if d.norm() > 0.0 {
                d / d.norm()
            } else {
                Complex::new(1.0, 0.0)
            };
            CoinVector::new(q.column(j).iter().map(|&e| e * phase).collect())
                .expect("finite Gaussian sample")
        })
        .collect();
    CoinBasis::new(vectors).expect("QR factor is unitary")
}

/// Generator for one random sample, determined by `(seed, t, sample_index)`.
pub fn sample_rng(seed: u64, t: usize, sample_index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((t as u64) << 32) | (sample_index as u64 & 0xffff_ffff));
    rng
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSample {
    pub sample_index: usize,
    pub t: usize,
    pub entropy: f64,
}

/// Grover-walk induced entanglement over Haar-random bases, rows ordered by
/// `t` then sample index.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomBasisRun {
    pub seed: u64,
    pub samples: usize,
    pub rows: Vec<RandomSample>,
}

impl RandomBasisRun {
    pub fn at_time(&self, t: usize) -> impl Iterator<Item = &RandomSample> + '_ {
        self.rows.iter().filter(move |r| r.t == t)
    }
}

/// For each `t` in `t_min..=t_max`, evolves the Grover walk from its
/// non-localizing initial coin and measures in `samples` Haar-random bases.
pub fn random_basis_run(
    t_min: usize,
    t_max: usize,
    samples: usize,
    seed: u64,
) -> Result<RandomBasisRun> {
    if t_min > t_max {
        return Err(Error::InvalidArgument(format!(
            "t_min {t_min} exceeds t_max {t_max}"
        )));
    }
    if samples < 1 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let states = evolve_each(WalkKind::Grover, &grover_initial(), t_min, t_max)?;
    let work: Vec<(usize, usize)> = states
        .iter()
        .enumerate()
        .flat_map(|(k, _)| (0..samples).map(move |i| (k, i)))
        .collect();
    let rows = work
        .into_par_iter()
        .map(|(k, sample_index)| {
            let (t, state) = &states[k];
            let basis = haar_random_basis4(&mut sample_rng(seed, *t, sample_index));
            Ok(RandomSample {
                sample_index,
                t: *t,
                entropy: average_induced_entanglement(state, &basis)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(RandomBasisRun {
        seed,
        samples,
        rows,
    })
}

/// Basis pairing used by [`compare_walks`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareMode {
    /// Computational basis for both walks.
    Computational,
    /// `qubit_basis(π/4, π/2)` against [`grover_max_basis`].
    Optimal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkComparison {
    pub t: usize,
    pub alternate: f64,
    pub grover: f64,
    /// `alternate - grover`.
    pub difference: f64,
}

/// Induced entanglement of both walks, side by side, for `t = 1..=t_max`.
pub fn compare_walks(t_max: usize, mode: CompareMode) -> Result<Vec<WalkComparison>> {
    let (alt_basis, grover_basis) = match mode {
        CompareMode::Computational => (computational_basis(2)?, computational_basis(4)?),
        CompareMode::Optimal => (qubit_basis(FRAC_PI_4, FRAC_PI_2)?, grover_max_basis()),
    };
    let alt = sweep_time(
        WalkKind::Alternate,
        &alternate_initial(FRAC_PI_2),
        &alt_basis,
        t_max,
    )?;
    let grover = sweep_time(WalkKind::Grover, &grover_initial(), &grover_basis, t_max)?;
    Ok(alt
        .into_iter()
        .zip(grover)
        .map(|((t, a), (_, g))| WalkComparison {
            t,
            alternate: a,
            grover: g,
            difference: a - g,
        })
        .collect())
}
