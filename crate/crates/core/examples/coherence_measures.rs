//! The four coherence quantifiers on a few qubit and qutrit states.

use equicoh::coherence::{coherence, dephase, CoherenceMeasure, DensityMatrix};
use equicoh::designs::{bloch_to_ket, build_mub, hesse_fiducial, BlochVector};

fn main() -> equicoh::Result<()> {
    let qubit_mub = build_mub(2)?;
    let s = 1.0 / 3f64.sqrt();
    let states = [
        ("north pole", BlochVector::new(0.0, 0.0, 1.0)),
        ("+x", BlochVector::new(1.0, 0.0, 0.0)),
        ("cube vertex", BlochVector::new(s, s, s)),
    ];
    for (name, v) in states {
        let rho = DensityMatrix::from_ket(&bloch_to_ket(&v)?);
        println!("{name}:");
        for (label, basis) in ["Z", "X", "Y"].iter().zip(qubit_mub.bases()) {
            let values: Vec<String> = CoherenceMeasure::ALL
                .iter()
                .map(|&m| Ok(format!("{}={:.4}", m.as_str(), coherence(m, &rho, basis)?.value)))
                .collect::<equicoh::Result<_>>()?;
            println!("  {label}: {}", values.join(" "));
        }
    }

    let mub = build_mub(3)?;
    let rho = DensityMatrix::from_ket(&hesse_fiducial());
    let mixed = dephase(&rho, &mub.bases()[1])?;
    println!(
        "Hesse fiducial, basis 1: l1 {:.4} before dephasing, {:.1e} after",
        coherence(CoherenceMeasure::L1, &rho, &mub.bases()[1])?.value,
        coherence(CoherenceMeasure::L1, &mixed, &mub.bases()[1])?.value
    );
    Ok(())
}
