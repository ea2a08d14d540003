// Structural conditions that every 3-core and every 4-core satisfies.

use corehooks::verify::conditions_necessity_check;
use corehooks::{check_3core_conditions, check_4core_conditions, Partition};

pub fn run() -> corehooks::Result<()> {
    for parts in [vec![4, 2], vec![3, 1, 1], vec![5, 3, 1, 1], vec![2, 2]] {
        let p = Partition::new(parts)?;
        let three = check_3core_conditions(&p);
        let four = check_4core_conditions(&p);
        println!(
            "{p}: 3-core={} failed {:?}; 4-core={} failed {:?}",
            p.is_t_core(3)?,
            three.failed_ids(),
            p.is_t_core(4)?,
            four.failed_ids()
        );
    }
    println!("{:?}", conditions_necessity_check(30)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
