// Counting hooks of a fixed length across all t-cores of n, and checking
// inequalities between those counts.

use corehooks::{
    a_tk, bias_table, chain_table, CountQuery, HookTable, PartFilter, Relation, Statement,
};

pub fn run() -> corehooks::Result<()> {
    println!("a_{{4,2}}(4) = {}", a_tk(&CountQuery::new(4, 2, 4))?);
    println!("a_{{4,3}}(3) = {}", a_tk(&CountQuery::new(4, 3, 3))?);

    // One sweep yields every k at once.
    let table = HookTable::build(3, 12, &PartFilter::none())?;
    for n in 0..=12 {
        let row: Vec<String> = table.nonzero(n).map(|(k, v)| format!("{k}:{v}")).collect();
        println!(
            "n={n:>2} cores={} hooks {}",
            table.core_count(n),
            row.join(" ")
        );
    }

    let rows = bias_table(
        3,
        &[1, 2, 4],
        &[Relation::Ge, Relation::Ge],
        0..=15,
        &PartFilter::none(),
    )?;
    for r in rows {
        println!("{}", r.csv_row());
    }

    let chain = Statement::FourCoreNoOneTwo
        .chain()
        .expect("statement has a chain");
    let holds = chain_table(&chain, 0..=200)?
        .iter()
        .all(|r| r.verdict != corehooks::Verdict::Fails);
    println!("{} on n <= 200: {holds}", Statement::FourCoreNoOneTwo);
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
