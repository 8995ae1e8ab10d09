//! The two qubit SICs are the tetrahedra inscribed in the cube with
//! vertices (±1, ±1, ±1)/√3, split by the parity of the sign pattern.

use equicoh::designs::{build_qubit_sics, check_sic_overlaps, BlochVector};

fn main() -> equicoh::Result<()> {
    let (even, odd) = build_qubit_sics()?;
    for set in [&even, &odd] {
        println!("{}:", set.provenance());
        for ket in set.kets() {
            let v = BlochVector::from_ket(ket)?;
            println!("  bloch = ({:+.6}, {:+.6}, {:+.6})", v.x, v.y, v.z);
        }
        let report = check_sic_overlaps(set, 1e-10);
        println!("  pairwise |<a|b>|^2 = 1/3, max error {:.2e}", report.max_abs_error);
    }
    Ok(())
}
