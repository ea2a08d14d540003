// Hook lengths, hook profiles, conjugates and regions of a single partition.
//
// ```text
// cargo run --example hook_lengths
// ```

use corehooks::{Cell, Partition};

pub fn run() -> corehooks::Result<()> {
    let p: Partition = "[6,3,2,1]".parse()?;
    println!("partition {p} of {}", p.size());

    for (i, row) in p.hook_lengths().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|h| format!("{h:>2}")).collect();
        println!("  row {}: {}", i + 1, cells.join(" "));
    }

    let profile = p.hook_profile();
    for (k, count) in profile.iter() {
        println!("  {count} hook(s) of length {k}");
    }

    println!("conjugate {}", p.conjugate());
    for t in 2..=5 {
        println!("  {t}-core: {}", p.is_t_core(t)?);
    }

    let corner = Cell::new(1, 2);
    println!(
        "hook at {corner} is {}, its region has shape {}",
        p.hook_length(corner)?,
        p.region_shape(corner)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
