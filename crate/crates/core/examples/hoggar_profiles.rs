//! Hoggar SIC states against the nine d = 8 MUBs: two bases give the
//! profile (5/12, 1/12 x7) and seven give (1/3, 1/6 x4, 0 x3). Both have
//! sum of squares 2/9, so the Rényi-2 coherence is the same in every basis
//! even though the Shannon coherence is not.

use equicoh::analysis::{
    born_table, classify_hoggar_profiles, dephasing_degeneracy, pauli_overlap_table, ProfileClass,
};
use equicoh::coherence::{coh_relent, coh_renyi2, DensityMatrix};
use equicoh::designs::{build_hoggar_sic, build_mub};

fn main() -> equicoh::Result<()> {
    let sic = build_hoggar_sic()?;
    let mub = build_mub(8)?;

    let rho = DensityMatrix::from_ket(&sic.kets()[0]);
    let cls = classify_hoggar_profiles(&born_table(&rho, &mub)?, 1e-9)?;
    for (m, (row, label)) in cls.sorted_rows.iter().zip(&cls.labels).enumerate() {
        let tag = match label {
            ProfileClass::A => "A",
            ProfileClass::B => "B",
            ProfileClass::Other => "?",
        };
        let basis = &mub.bases()[m];
        println!(
            "basis {m} [{tag}] top={:.4} renyi2={:.6} shannon={:.6}",
            row[0],
            coh_renyi2(&rho, basis)?.value,
            coh_relent(&rho, basis)?.value
        );
    }

    let mut splits = std::collections::BTreeSet::new();
    for ket in sic.kets() {
        let t = born_table(&DensityMatrix::from_ket(ket), &mub)?;
        let c = classify_hoggar_profiles(&t, 1e-9)?.counts;
        splits.insert((c.a, c.b, c.other));
    }
    println!("(A, B, Other) splits over all 64 states: {splits:?}");

    let (groups, _) = dephasing_degeneracy(sic.kets(), &mub.bases()[0], 1e-10)?;
    println!("dephasing in basis 0: {} groups, sizes {:?}", groups.len(), groups.iter().map(Vec::len).collect::<Vec<_>>());

    let overlaps = pauli_overlap_table(&sic, 1e-10)?;
    let plus = overlaps.signs[0].iter().filter(|&&s| s > 0).count();
    println!(
        "<pi|D|pi> = ±1/3 for all 63 Paulis (max error {:.2e}); fiducial signs: {plus} plus, {} minus",
        overlaps.max_magnitude_error,
        63 - plus
    );
    Ok(())
}
