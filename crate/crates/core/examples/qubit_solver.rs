//! Search the Bloch sphere for states whose squared off-diagonal weight is
//! the same in the X, Y and Z bases. The answer is the eight cube vertices.

use equicoh::analysis::{equicoherence_residual, l1_profile, solve_qubit_equicoherent};
use equicoh::designs::{bloch_to_ket, has_even_sign_parity};

fn main() -> equicoh::Result<()> {
    let grid = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100_000);
    let solutions = solve_qubit_equicoherent(grid)?;
    println!("{grid} grid points -> {} solutions", solutions.len());
    for v in &solutions {
        let l1 = l1_profile(&bloch_to_ket(v)?)?;
        println!(
            "({:+.12}, {:+.12}, {:+.12}) {} residual={:.1e} l1=({:.6}, {:.6}, {:.6})",
            v.x,
            v.y,
            v.z,
            if has_even_sign_parity(v) { "even" } else { "odd " },
            equicoherence_residual(v),
            l1[0],
            l1[1],
            l1[2]
        );
    }
    Ok(())
}
