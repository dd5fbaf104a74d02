use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subspace_bounds::geometry::fixtures::{generate_configuration, random_frame, Configuration};
use subspace_bounds::geometry::{distance_spectrum, Metric, SubspaceFrame};
use subspace_bounds::polymethod::lemma51::{ideal_membership_failures, selector_violations};
use subspace_bounds::polymethod::linalg::{exact_rank, random_rational_projection, upper_entries};
use subspace_bounds::polymethod::poly::monomials_up_to;
use subspace_bounds::polymethod::{
    chordal_eval_matrix, equiangular_eval_matrix, fs_eval_matrix, sampled_hilbert_rank, verify_prop31, Construction,
    VerifyOptions,
};

/// Diagonal closed forms and off-diagonal zeros of evaluation matrices.
const TOL_DIAG: f64 = 1e-8;

/// Exact rank of the monomial evaluation matrix at rational projections:
/// an independent, float-free value for the sampled rank.
fn exact_hilbert_rank(k: usize, n: usize, d: u32, seed: u64) -> usize {
    let basis = monomials_up_to(n * (n + 1) / 2, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<BigRational>> = (0..basis.len() + 8)
        .map(|_| {
            let point = upper_entries(&random_rational_projection(&mut rng, n, k));
            basis.iter().map(|m| m.eval(&point)).collect()
        })
        .collect();
    exact_rank(&rows)
}

#[test]
fn sampled_rank_matches_exact_oracle() {
    for (k, n, d) in [(1, 3, 1), (1, 4, 1), (2, 4, 1), (2, 5, 1), (1, 3, 2), (1, 2, 3), (2, 4, 2)] {
        let oracle = exact_hilbert_rank(k, n, d, 17);
        for seed in [1, 2, 3] {
            assert_eq!(sampled_hilbert_rank(k, n, d, None, seed).unwrap(), oracle, "(k,n,d)=({k},{n},{d})");
        }
    }
    assert_eq!(exact_hilbert_rank(1, 3, 2, 4), 15);
    // lines in the plane: the projection image is a circle, H(d) = 2d + 1
    for d in 1..=4 {
        assert_eq!(sampled_hilbert_rank(1, 2, d, None, 9).unwrap(), 2 * d as usize + 1);
    }
}

#[test]
fn lemma_polynomials_vanish_on_rational_projections() {
    for (n, d) in [(3, 2), (4, 2), (5, 2), (3, 3), (3, 4), (4, 3)] {
        for k in [2, 3] {
            assert_eq!(ideal_membership_failures(n, d, k, 50, 2024).unwrap(), 0, "n={n} d={d} k={k}");
        }
    }
}

#[test]
fn selector_matrices_isolate_family_members() {
    for n in [3, 4] {
        for d in [3, 4] {
            for k in [2, 3] {
                assert_eq!(selector_violations(n, d, k).unwrap(), 0, "n={n} d={d} k={k}");
            }
        }
    }
}

fn fixtures() -> Vec<(&'static str, Vec<SubspaceFrame>)> {
    let mut out = vec![
        ("axes3", generate_configuration(&Configuration::CoordinateAxes, 3).unwrap()),
        ("axes5", generate_configuration(&Configuration::CoordinateAxes, 5).unwrap()),
        ("simplex3", generate_configuration(&Configuration::SimplexLines, 3).unwrap()),
        ("simplex4", generate_configuration(&Configuration::SimplexLines, 4).unwrap()),
        ("icosahedron", generate_configuration(&Configuration::IcosahedronLines, 3).unwrap()),
    ];
    // coordinate planes of R^4: chordal distances 1 and √2
    let planes: Vec<SubspaceFrame> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        .iter()
        .map(|&(a, b)| {
            let mut m = nalgebra::DMatrix::<f64>::zeros(4, 2);
            m[(a, 0)] = 1.0;
            m[(b, 1)] = 1.0;
            SubspaceFrame::new(m).unwrap()
        })
        .collect();
    out.push(("planes4", planes));
    out
}

#[test]
fn evaluation_matrices_are_diagonal_with_closed_form_diagonals() {
    for (name, frames) in fixtures() {
        let k = frames[0].k() as f64;
        let spec = distance_spectrum(&frames, Metric::Chordal, 1e-9).unwrap();
        let m = chordal_eval_matrix(&frames, &spec).unwrap();
        let expected: f64 = spec.values.iter().map(|a| a * a).product();
        assert!(m.max_offdiag() <= TOL_DIAG, "{name}");
        assert!(m.diagonal().iter().all(|d| (d - expected).abs() <= TOL_DIAG), "{name}");

        let spec = distance_spectrum(&frames, Metric::FubiniStudy, 1e-9).unwrap();
        let m = fs_eval_matrix(&frames, &spec).unwrap();
        let expected: f64 = spec.values.iter().map(|a| 1.0 - a.cos().powi(2)).product();
        assert!(m.max_offdiag() <= TOL_DIAG, "{name}");
        assert!(m.diagonal().iter().all(|d| (d - expected).abs() <= TOL_DIAG), "{name}");

        let spec = distance_spectrum(&frames, Metric::Angle(1), 1e-9).unwrap();
        if spec.s == 1 {
            let alpha = spec.values[0];
            let m = equiangular_eval_matrix(&frames, alpha, 1).unwrap();
            let expected = alpha.sin().powi(2 * k as i32);
            assert!(m.max_offdiag() <= TOL_DIAG, "{name}");
            assert!(m.diagonal().iter().all(|d| (d - expected).abs() <= TOL_DIAG), "{name}");
        }
    }
}

#[test]
fn rank_never_exceeds_bound() {
    let opts = VerifyOptions::default();
    for (name, frames) in fixtures() {
        for c in [Construction::ChordalP, Construction::FsF] {
            let r = verify_prop31(&frames, c, &opts).unwrap();
            assert!(r.satisfied, "{name} {c:?}");
            assert_eq!(r.matrix_rank, frames.len(), "{name} {c:?}");
        }
    }
    let r = verify_prop31(&fixtures()[4].1, Construction::FsF, &opts).unwrap();
    assert_eq!((r.matrix_rank, r.bound), (6, BigInt::from(6)));
}

#[test]
fn corrupted_fixture_still_within_bound() {
    let mut frames = generate_configuration(&Configuration::IcosahedronLines, 3).unwrap();
    let v = frames[0].columns().column(0).clone_owned();
    let perturbed = [v[0] + 1e-3, v[1], v[2]];
    frames.push(SubspaceFrame::line(&perturbed).unwrap());
    let r = verify_prop31(&frames, Construction::FsF, &VerifyOptions::default()).unwrap();
    assert!(r.s > 1);
    assert!(r.satisfied);
    assert!(r.matrix_rank <= frames.len());
}

#[test]
fn random_configurations_within_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..5 {
        let frames: Vec<_> = (0..4).map(|_| random_frame(&mut rng, 3, 1).unwrap()).collect();
        let r = verify_prop31(&frames, Construction::FsF, &VerifyOptions::default()).unwrap();
        assert_eq!(r.s, 6);
        assert!(r.satisfied);
    }
}
