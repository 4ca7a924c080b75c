//! Runs every acceptance criterion and prints one line per criterion.
//!
//! Uses the full tier: every instance, including the slow ones, finishes in
//! seconds with the pruned search.

use rcx_cli::suite::{run_row, RowStatus, SuiteConfig, Tier, ROWS};

fn main() {
    let cfg = SuiteConfig::new(Tier::Full);
    let mut failed = Vec::new();
    println!("\nacceptance criteria ({} rows, full tier)", ROWS.len());
    for (id, _) in ROWS {
        let row = run_row(&cfg, id);
        println!("{}", row.summary());
        if row.status != RowStatus::Pass {
            for c in row.checks.iter().filter(|c| !c.ok) {
                println!(
                    "    {}: expected {} computed {}",
                    c.label, c.expected, c.computed
                );
            }
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed\n", ROWS.len());
    } else {
        println!("acceptance: failed criteria {failed:?}\n");
        std::process::exit(1);
    }
}
