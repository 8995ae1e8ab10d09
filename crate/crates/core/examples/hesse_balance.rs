//! Every Hesse SIC state gives the probabilities (0, 1/2, 1/2), in some
//! order, in each of the four qutrit MUBs.

use equicoh::analysis::{born_table, min_uncertainty_profile, mub_balanced_check};
use equicoh::coherence::{coh_relent, DensityMatrix};
use equicoh::designs::{build_hesse_sic, build_mub};

fn main() -> equicoh::Result<()> {
    let sic = build_hesse_sic()?;
    let mub = build_mub(3)?;
    for (j, ket) in sic.kets().iter().enumerate() {
        let rho = DensityMatrix::from_ket(ket);
        let table = born_table(&rho, &mub)?;
        let rows: Vec<String> = table
            .sorted_rows()
            .iter()
            .map(|r| format!("({:.3}, {:.3}, {:.3})", r[0], r[1], r[2]))
            .collect();
        let relent = coh_relent(&rho, &mub.bases()[0])?.value;
        println!(
            "state {j}: {}  balanced={} min-uncertainty={} rel-ent={relent:.6}",
            rows.join(" "),
            mub_balanced_check(&table, 1e-10).passed,
            min_uncertainty_profile(&table, 1e-10).1.passed,
        );
    }
    Ok(())
}
