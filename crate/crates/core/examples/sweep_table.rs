//! A small experiment matrix written as CSV.

use treedisc::cli::config::SweepConfig;
use treedisc::cli::{rows_to_csv, run_sweep};

fn main() -> treedisc::Result<()> {
    let cfg: SweepConfig = toml::from_str(
        r#"
pipeline = "maximize"
n = [8, 10, 12]
r = [2, 3]
tree = ["path", "random"]
seeds = 2
restarts = 10
"#,
    )
    .map_err(|e| treedisc::Error::InvalidParameters(e.to_string()))?;
    print!("{}", rows_to_csv(&run_sweep(&cfg, None, false)?)?);
    Ok(())
}
