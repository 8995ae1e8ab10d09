use equicoh::numerics::{
    hermitian_eigen, renyi2_entropy, shannon_entropy, ComplexMatrix, ProbabilityVector, UnitKet,
};
use equicoh::Complex64;
use proptest::prelude::*;

fn hermitian(d: usize, entries: &[(f64, f64)]) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d);
    let mut it = entries.iter().cycle();
    for i in 0..d {
        for j in i..d {
            let &(re, im) = it.next().unwrap();
            if i == j {
                m[(i, i)] = Complex64::new(re, 0.0);
            } else {
                m[(i, j)] = Complex64::new(re, im);
                m[(j, i)] = Complex64::new(re, -im);
            }
        }
    }
    m
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![Just(2usize), Just(3usize), Just(8usize)]
}

fn ket(d: usize) -> impl Strategy<Value = UnitKet> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), d)
        .prop_filter("non-zero", |v| v.iter().any(|(a, b)| a.abs() + b.abs() > 1e-3))
        .prop_map(|v| UnitKet::normalized(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn eigen_reconstructs(d in dims(), entries in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 36)) {
        let m = hermitian(d, &entries);
        let eig = hermitian_eigen(&m).unwrap();
        prop_assert!(eig.reconstruct().max_abs_diff(&m) <= 1e-9);
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(equicoh::numerics::orthonormality_deviation(&eig.vectors) <= 1e-10);
    }
}

proptest! {
    #[test]
    fn projector_spectrum(k in dims().prop_flat_map(ket)) {
        let eig = hermitian_eigen(&k.projector()).unwrap();
        let d = k.dim();
        prop_assert!((eig.values[d - 1] - 1.0).abs() < 1e-12);
        prop_assert!(eig.values[..d - 1].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn entropies_ignore_order(raw in prop::collection::vec(0.0f64..1.0, 2..9), rot in 0usize..8) {
        prop_assume!(raw.iter().sum::<f64>() > 1e-3);
        let total: f64 = raw.iter().sum();
        let p: Vec<f64> = raw.iter().map(|x| x / total).collect();
        let mut q = p.clone();
        let len = q.len();
        q.rotate_left(rot % len);
        q.reverse();
        let (p, q) = (ProbabilityVector::new(p).unwrap(), ProbabilityVector::new(q).unwrap());
        prop_assert_eq!(shannon_entropy(&p), shannon_entropy(&q));
        prop_assert!((renyi2_entropy(&p) - renyi2_entropy(&q)).abs() < 1e-14);
        prop_assert!(renyi2_entropy(&p) <= shannon_entropy(&p) + 1e-12);
        prop_assert!(shannon_entropy(&p) <= (len as f64).ln() + 1e-12);
    }

    #[test]
    fn canonical_phase_is_idempotent(k in dims().prop_flat_map(ket)) {
        let again = UnitKet::new(k.amps().to_vec()).unwrap();
        prop_assert_eq!(&again, &k);
        let lead = k.amps().iter().find(|a| a.norm() > 1e-10).unwrap();
        prop_assert!(lead.im == 0.0 && lead.re > 0.0);
    }
}
