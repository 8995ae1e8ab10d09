//! Write a design to JSON and read it back.

use equicoh::designs::{build_mub, build_sic, DesignFile};

fn main() -> equicoh::Result<()> {
    let dir = std::env::temp_dir();

    let sic_path = dir.join("hesse.json");
    DesignFile::from_sic(&build_sic(3)?).write(&sic_path)?;
    let sic = DesignFile::read(&sic_path)?.to_sic()?;
    println!("{}: {} vectors from {}", sic.provenance(), sic.len(), sic_path.display());

    let mub = DesignFile::from_mub(&build_mub(8)?);
    let text = mub.to_json()?;
    println!("d=8 MUB file: {} bytes, seed {:?}", text.len(), mub.seed);
    println!("first amplitude: {:?}", mub.vectors[0][0]);
    let back = DesignFile::from_json(&text)?.to_mub()?;
    println!("round trip: {} bases of {}", back.len(), back.dim());
    Ok(())
}
