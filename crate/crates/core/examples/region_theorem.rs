// Every hook of length kt has a t-hook somewhere in the rectangle of cells
// weakly below and to the right of it.

use corehooks::verify::region_witness;
use corehooks::{region_theorem_scan, Cell, Partition};

pub fn run() -> corehooks::Result<()> {
    let p = Partition::new(vec![6, 3, 2, 1])?;
    let cell = Cell::new(1, 1);
    println!("hook at {cell} of {p} is {}", p.hook_length(cell)?);
    for t in [1, 3, 9] {
        let w = region_witness(&p, cell, t)?;
        match w.witness_cell {
            Some(c) => println!("  t={t}: {t}-hook at {c}"),
            None => println!("  t={t}: none found"),
        }
    }

    let scan = region_theorem_scan(20, &[1, 2, 3, 4, 5])?;
    println!(
        "checked {} partitions and {} hooks, {} violations",
        scan.partitions_checked,
        scan.hooks_checked,
        scan.violations.len()
    );
    for s in scan.samples.iter().take(3) {
        println!(
            "  e.g. {} at {}: {}-hook at {:?}",
            s.partition, s.hook_cell, s.t, s.witness_cell
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
