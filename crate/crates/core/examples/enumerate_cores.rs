// Listing t-cores, with and without forbidden part sizes.

use corehooks::{count_t_cores_up_to, t_cores_of, PartFilter};

pub fn run() -> corehooks::Result<()> {
    let cores = t_cores_of(10, 3, &PartFilter::none())?;
    let stats = cores.stats();
    println!(
        "3-cores of 10 ({} found, {} branches pruned):",
        stats.produced, stats.pruned_nodes
    );
    for p in cores {
        println!("  {p}");
    }

    // a_t(n) for n = 0..=20, one row per t
    for t in 2..=7 {
        let counts = count_t_cores_up_to(20, t, &PartFilter::none())?;
        println!("t={t}: {counts:?}");
    }

    let no_small = PartFilter::excluding([1, 2]);
    let restricted: Vec<String> = t_cores_of(24, 4, &no_small)?
        .map(|p| p.to_string())
        .collect();
    println!(
        "4-cores of 24 without parts 1 or 2: {}",
        restricted.join(" ")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
