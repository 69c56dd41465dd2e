mod support;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use nalgebra::DMatrix;
use proptest::prelude::*;
use qwalk::entanglement::{
    density_spectrum, reduced_density_x, reduced_density_y, schmidt_spectrum, spatial_entanglement,
    von_neumann_entropy, CoefficientMatrix,
};
use qwalk::explore::{haar_random_basis4, sample_rng};
use qwalk::measurement::{
    average_induced_entanglement, computational_basis, measure_coin, qubit_basis, CoinBasis,
};
use qwalk::state::{marginal_x, marginal_y, norm_squared, position_distribution};
use qwalk::walk::{alternate_initial, evolve, grover_initial, step, unstep, WalkKind};
use qwalk::{CoinVector, Complex};

use support::{random_normalized, DenseWalk};

fn coin_strategy(dim: usize) -> impl Strategy<Value = CoinVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim)
        .prop_filter("nonzero", |v| {
            v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3
        })
        .prop_map(|v| {
            let n = v.iter().map(|(a, b)| a * a + b * b).sum::<f64>().sqrt();
            CoinVector::new(
                v.into_iter()
                    .map(|(a, b)| Complex::new(a / n, b / n))
                    .collect(),
            )
            .unwrap()
        })
}

fn entropy(m: &CoefficientMatrix) -> f64 {
    von_neumann_entropy(&schmidt_spectrum(m).unwrap()).unwrap()
}

fn rotation(seed: u64, n: usize) -> DMatrix<Complex> {
    // Unitary from the QR factor of a random complex matrix.
    random_normalized(n, n, seed).qr().q()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn evolution_is_unitary(coin in coin_strategy(2), g in coin_strategy(4), t in 0usize..30) {
        let a = evolve(WalkKind::Alternate, &coin, t).unwrap();
        prop_assert!((norm_squared(&a) - 1.0).abs() < 1e-12);
        let b = evolve(WalkKind::Grover, &g, t).unwrap();
        prop_assert!((norm_squared(&b) - 1.0).abs() < 1e-12);
        let total: f64 = position_distribution(&b).unwrap().values().sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn step_is_reversible(coin in coin_strategy(4), t in 1usize..12) {
        let start = evolve(WalkKind::Grover, &coin, 0).unwrap();
        let mut s = start.clone();
        for _ in 0..t { s = step(WalkKind::Grover, &s).unwrap(); }
        for _ in 0..t { s = unstep(WalkKind::Grover, &s).unwrap(); }
        for (p, c, a) in start.iter() {
            prop_assert!((s.amplitude(p.x, p.y, c) - a).norm() < 1e-12);
        }
        prop_assert!((norm_squared(&s) - norm_squared(&start)).abs() < 1e-12);
    }

    #[test]
    fn sparse_matches_dense(coin in coin_strategy(2), g in coin_strategy(4), t in 0usize..=5) {
        let d = DenseWalk::evolve(WalkKind::Alternate, coin.entries(), t)
            .max_deviation(&evolve(WalkKind::Alternate, &coin, t).unwrap());
        prop_assert!(d <= 1e-13);
        let d = DenseWalk::evolve(WalkKind::Grover, g.entries(), t)
            .max_deviation(&evolve(WalkKind::Grover, &g, t).unwrap());
        prop_assert!(d <= 1e-13);
    }

    #[test]
    fn basis_phases_do_not_matter(theta in 0.0..FRAC_PI_2, phi in 0.0..PI, p0 in 0.0..TAU, p1 in 0.0..TAU, t in 1usize..8) {
        let s = evolve(WalkKind::Alternate, &alternate_initial(FRAC_PI_2), t).unwrap();
        let b = qubit_basis(theta, phi).unwrap();
        let rephased = CoinBasis::new(vec![
            b.vectors()[0].scaled(Complex::from_polar(1.0, p0)),
            b.vectors()[1].scaled(Complex::from_polar(1.0, p1)),
        ]).unwrap();
        let o1 = measure_coin(&s, &b).unwrap();
        let o2 = measure_coin(&s, &rephased).unwrap();
        for (a, c) in o1.iter().zip(&o2) {
            prop_assert!((a.probability - c.probability).abs() < 1e-12);
            if let (Some(x), Some(y)) = (&a.post_state, &c.post_state) {
                prop_assert!((spatial_entanglement(x).unwrap() - spatial_entanglement(y).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn probabilities_complete(i in 0usize..1000, t in 1usize..10) {
        let s = evolve(WalkKind::Grover, &grover_initial(), t).unwrap();
        let b = haar_random_basis4(&mut sample_rng(99, t, i));
        let total: f64 = measure_coin(&s, &b).unwrap().iter().map(|o| o.probability).sum();
        prop_assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn local_unitaries_preserve_entropy(rows in 1usize..12, cols in 1usize..12, seed in 1u64..10_000) {
        let m = random_normalized(rows, cols, seed);
        let e = entropy(&CoefficientMatrix::from_dense(m.clone()));
        let left = rotation(seed + 1, rows) * &m;
        let both = &left * rotation(seed + 2, cols);
        prop_assert!((entropy(&CoefficientMatrix::from_dense(both)) - e).abs() < 1e-9);
        prop_assert!(e >= 0.0 && e <= (rows.min(cols) as f64).log2() + 1e-12);
    }

    #[test]
    fn spectrum_routes_agree(rows in 1usize..=41, cols in 1usize..=41, seed in 1u64..10_000) {
        let m = CoefficientMatrix::from_dense(random_normalized(rows, cols, seed));
        let svd = schmidt_spectrum(&m).unwrap();
        let ex = density_spectrum(&reduced_density_x(&m)).unwrap();
        let ey = density_spectrum(&reduced_density_y(&m)).unwrap();
        for (k, &v) in svd.values().iter().enumerate() {
            prop_assert!((v - ex.values()[k]).abs() < 1e-9);
            prop_assert!((v - ey.values()[k]).abs() < 1e-9);
        }
        prop_assert!((svd.sum() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn symmetric_initial_coin_gives_symmetric_marginals() {
    let coin = alternate_initial(FRAC_PI_2);
    for t in 0..=20 {
        let s = evolve(WalkKind::Alternate, &coin, t).unwrap();
        for marginal in [marginal_x(&s).unwrap(), marginal_y(&s).unwrap()] {
            for (&x, &p) in &marginal {
                let mirror = marginal.get(&-x).copied().unwrap_or(0.0);
                assert!((p - mirror).abs() < 1e-10, "t={t} x={x}: {p} vs {mirror}");
            }
        }
    }
}

#[test]
fn first_step_distribution_is_uniform_on_corners() {
    let s = evolve(WalkKind::Alternate, &alternate_initial(FRAC_PI_2), 1).unwrap();
    let d = position_distribution(&s).unwrap();
    assert_eq!(d.len(), 4);
    for (p, prob) in d {
        assert_eq!((p.x.abs(), p.y.abs()), (1, 1));
        assert!((prob - 0.25).abs() < 1e-15);
    }
}

#[test]
fn haar_moments() {
    // For Haar U(4): E|U_ij|² = 1/4 and E|U_ij|⁴ = 2/(n(n+1)) = 1/10.
    let draws = 10_000;
    let mut second = [[0.0f64; 4]; 4];
    let mut fourth = 0.0;
    for i in 0..draws {
        let b = haar_random_basis4(&mut sample_rng(2024, 0, i));
        for (j, v) in b.vectors().iter().enumerate() {
            for (k, z) in v.entries().iter().enumerate() {
                second[j][k] += z.norm_sqr();
                fourth += z.norm_sqr().powi(2);
            }
        }
    }
    for row in second {
        for m in row {
            assert!(
                (m / draws as f64 - 0.25).abs() < 0.01,
                "second moment {}",
                m / draws as f64
            );
        }
    }
    assert!((fourth / (16 * draws) as f64 - 0.1).abs() < 0.005);
}

#[test]
fn alpha_family_shares_computational_entanglement() {
    let comp = computational_basis(2).unwrap();
    for t in 1..=10 {
        let values: Vec<f64> = [0.0, FRAC_PI_4, FRAC_PI_2, PI, 3.0 * FRAC_PI_2]
            .iter()
            .map(|&a| {
                average_induced_entanglement(
                    &evolve(WalkKind::Alternate, &alternate_initial(a), t).unwrap(),
                    &comp,
                )
                .unwrap()
            })
            .collect();
        for v in &values {
            assert!((v - values[0]).abs() < 1e-9);
        }
    }
}

#[test]
fn induced_entanglement_within_bounds() {
    let opt = qubit_basis(FRAC_PI_4, FRAC_PI_2).unwrap();
    for t in 1..=20 {
        let e = average_induced_entanglement(
            &evolve(WalkKind::Alternate, &alternate_initial(FRAC_PI_2), t).unwrap(),
            &opt,
        )
        .unwrap();
        assert!(e >= 0.0 && e <= ((2 * t + 1) as f64).log2());
    }
}
