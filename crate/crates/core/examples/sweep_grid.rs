//! A reproducible grid sweep written as CSV, read back, and re-encoded as JSON lines.

use romanoff::sweep::{read_csv, run_sweep, write_csv, write_json_lines, Suite, SweepConfig};

fn main() -> romanoff::Result<()> {
    let mut config = SweepConfig::default();
    config.apply_config_text("q=2,3\nn-max=4\ndeg-max=2\nworkers=4\n")?;
    let outcome = run_sweep(&config, Suite::All)?;
    eprintln!("{}", outcome.tally);

    let mut csv = Vec::new();
    write_csv(&outcome.rows, &mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv));

    let back = read_csv(&csv[..])?;
    assert_eq!(back, outcome.rows);
    let mut json = Vec::new();
    write_json_lines(&back, &mut json)?;
    eprintln!("{} rows, {} bytes as JSON lines", back.len(), json.len());
    Ok(())
}
