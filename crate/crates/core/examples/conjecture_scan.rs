// Scanning a_{5,1}(n) >= a_{5,3}(n) >= a_{5,6}(n). The chain breaks.

use corehooks::stats::per_partition_compare;
use corehooks::{scan_conjecture_5core, PartFilter};

pub fn run() -> corehooks::Result<()> {
    for r in scan_conjecture_5core(300)? {
        println!("{}", r.csv_row());
        if let Some(w) = &r.witness {
            println!("  a 5-core of {} with more 3-hooks than 1-hooks: {w}", r.n);
        }
    }

    // Core by core the comparison breaks much earlier than the totals do.
    for n in 0..=60 {
        let rec = per_partition_compare(5, n, 1, 3, &PartFilter::none())?;
        if let Some(w) = &rec.witness {
            println!(
                "first 5-core with fewer 1-hooks than 3-hooks: {w} (totals {})",
                rec.csv_row()
            );
            break;
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
