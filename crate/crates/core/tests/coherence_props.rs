use equicoh::analysis::equicoherence_residual;
use equicoh::coherence::{coherence, dephase, offdiag_identity_error, CoherenceMeasure, DensityMatrix};
use equicoh::designs::{build_hesse_sic, build_hoggar_sic, build_mub, build_qubit_sics, BlochVector};
use equicoh::numerics::{ComplexMatrix, UnitKet};
use equicoh::pauli::{pauli_matrix, PauliLabel};
use equicoh::Complex64;
use proptest::prelude::*;

fn ket(d: usize) -> impl Strategy<Value = UnitKet> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), d)
        .prop_filter("non-zero", |v| v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3))
        .prop_map(|v| UnitKet::normalized(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap())
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![Just(2usize), Just(3usize), Just(8usize)]
}

proptest! {
    #[test]
    fn dephased_states_have_no_coherence(k in dims().prop_flat_map(ket), m in 0usize..9) {
        let d = k.dim();
        let mub = build_mub(d).unwrap();
        let basis = &mub.bases()[m % mub.len()];
        let diag = dephase(&DensityMatrix::from_ket(&k), basis).unwrap();
        for measure in [CoherenceMeasure::SqOffDiag, CoherenceMeasure::L1, CoherenceMeasure::RelEntShannon] {
            prop_assert!(coherence(measure, &diag, basis).unwrap().value.abs() < 1e-10);
        }
    }

    #[test]
    fn off_diagonal_states_have_coherence(k in dims().prop_flat_map(ket)) {
        let d = k.dim();
        let computational: Vec<UnitKet> = (0..d).map(|i| UnitKet::basis(d, i)).collect();
        let rho = DensityMatrix::from_ket(&k);
        let offdiag = coherence(CoherenceMeasure::SqOffDiag, &rho, &computational).unwrap().value;
        prop_assume!(offdiag > 1e-6);
        for m in CoherenceMeasure::ALL {
            prop_assert!(coherence(m, &rho, &computational).unwrap().value > 0.0, "{:?}", m);
        }
    }

    #[test]
    fn basis_order_does_not_matter(k in dims().prop_flat_map(ket), shift in 1usize..8) {
        let d = k.dim();
        let mub = build_mub(d).unwrap();
        let basis = mub.bases()[1].clone();
        let mut shuffled = basis.clone();
        shuffled.rotate_left(shift % d);
        shuffled.reverse();
        let rho = DensityMatrix::from_ket(&k);
        for m in CoherenceMeasure::ALL {
            let a = coherence(m, &rho, &basis).unwrap().value;
            let b = coherence(m, &rho, &shuffled).unwrap().value;
            prop_assert!((a - b).abs() < 1e-12, "{:?}: {} vs {}", m, a, b);
        }
    }

    #[test]
    fn pauli_conjugation_is_covariant(k in ket(8), label in 0usize..64, m in 0usize..9) {
        let u = pauli_matrix(&PauliLabel::from_index(3, label).unwrap()).unwrap();
        let mub = build_mub(8).unwrap();
        let basis = &mub.bases()[m];
        let moved: Vec<UnitKet> = basis.iter().map(|b| b.transformed(&u).unwrap()).collect();
        let rho = DensityMatrix::from_ket(&k);
        let rho_u = DensityMatrix::from_ket(&k.transformed(&u).unwrap());
        for measure in CoherenceMeasure::ALL {
            let a = coherence(measure, &rho, basis).unwrap().value;
            let b = coherence(measure, &rho_u, &moved).unwrap().value;
            prop_assert!((a - b).abs() < 1e-10, "{:?}", measure);
        }
    }

    #[test]
    fn offdiag_identity_holds(k in dims().prop_flat_map(ket), m in 0usize..9) {
        let mub = build_mub(k.dim()).unwrap();
        let basis = &mub.bases()[m % mub.len()];
        prop_assert!(offdiag_identity_error(&DensityMatrix::from_ket(&k), basis).unwrap() <= 1e-12);
    }

    #[test]
    fn residual_symmetries(x in -1.0f64..1.0, y in -1.0f64..1.0, z in -1.0f64..1.0, perm in 0usize..6, signs in 0u8..8) {
        let v = [x, y, z];
        let p = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]][perm];
        let flip = |i: usize, a: f64| if signs >> i & 1 == 1 { -a } else { a };
        let w = BlochVector::new(flip(0, v[p[0]]), flip(1, v[p[1]]), flip(2, v[p[2]]));
        let r0 = equicoherence_residual(&BlochVector::new(x, y, z));
        prop_assert!((equicoherence_residual(&w) - r0).abs() <= 1e-15);
        prop_assert!(r0 >= 0.0);
    }
}

#[test]
fn mixed_state_is_incoherent_everywhere() {
    for d in [2, 3, 8] {
        let rho = DensityMatrix::maximally_mixed(d);
        for basis in build_mub(d).unwrap().bases() {
            for m in [CoherenceMeasure::SqOffDiag, CoherenceMeasure::L1, CoherenceMeasure::RelEntShannon] {
                assert!(coherence(m, &rho, basis).unwrap().value.abs() < 1e-12);
            }
        }
    }
}

#[test]
fn sic_coherence_sweeps() {
    let cases: Vec<(usize, Vec<UnitKet>, f64)> = vec![
        (2, {
            let (e, o) = build_qubit_sics().unwrap();
            e.kets().iter().chain(o.kets()).cloned().collect()
        }, 1e-12),
        (3, build_hesse_sic().unwrap().kets().to_vec(), 1e-10),
        (8, build_hoggar_sic().unwrap().kets().to_vec(), 1e-10),
    ];
    for (d, states, tol) in cases {
        let df = d as f64;
        let mub = build_mub(d).unwrap();
        for k in &states {
            let rho = DensityMatrix::from_ket(k);
            for basis in mub.bases() {
                let sq = coherence(CoherenceMeasure::SqOffDiag, &rho, basis).unwrap().value;
                let r2 = coherence(CoherenceMeasure::RelEntRenyi2, &rho, basis).unwrap().value;
                assert!((sq - (df - 1.0) / (df + 1.0)).abs() <= tol, "d={d}");
                assert!((r2 + (2.0 / (df + 1.0)).ln()).abs() <= 1e-10, "d={d}");
                if d == 3 {
                    let re = coherence(CoherenceMeasure::RelEntShannon, &rho, basis).unwrap().value;
                    assert!((re - std::f64::consts::LN_2).abs() <= 1e-10);
                }
            }
        }
    }
}

#[test]
fn renyi2_rejects_mixed_input() {
    let rho = DensityMatrix::new(ComplexMatrix::from_real_diagonal(&[0.5, 0.5])).unwrap();
    let mub = build_mub(2).unwrap();
    let basis = &mub.bases()[1];
    assert!(coherence(CoherenceMeasure::RelEntRenyi2, &rho, basis).is_err());
}
