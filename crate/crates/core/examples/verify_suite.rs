//! Run the verification suite from code, optionally for one dimension.

use equicoh::suite::{all_passed, render, run_suite, OutputFormat, SuiteConfig};

fn main() -> equicoh::Result<()> {
    let config = SuiteConfig {
        dimension: std::env::args().nth(1).and_then(|a| a.parse().ok()),
        ..SuiteConfig::default()
    };
    let records = run_suite(&config)?;
    print!("{}", render(&records, OutputFormat::Text)?);
    if !all_passed(&records) {
        std::process::exit(1);
    }
    Ok(())
}
