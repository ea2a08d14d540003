// The ternary form x² + 2y² + 2z², and why every triangular number from 3
// on is the size of at least two 4-cores.

use corehooks::quadform::{all_ternary_representations, triple_triangular_count};
use corehooks::{is_dickson_excluded, odd_representation, represent_ternary, verify_two_4cores};

pub fn run() -> corehooks::Result<()> {
    for n in [7, 28, 29, 53] {
        println!(
            "{n}: excluded={} first={:?} all={:?}",
            is_dickson_excluded(n),
            represent_ternary(n),
            all_ternary_representations(n)
        );
    }

    for h in 2..=8 {
        let rep = odd_representation(h)?;
        let n = h * (h + 1) / 2;
        println!(
            "h={h} T={n}: {}^2 + 2*{}^2 + 2*{}^2, (m,r,s)=({},{},{}), decompositions of T: {}",
            rep.x,
            rep.y,
            rep.z,
            rep.m,
            rep.r,
            rep.s,
            triple_triangular_count(n, u64::MAX)
        );
    }

    println!("{:?}", verify_two_4cores(200, 2000)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> corehooks::Result<()> {
    run()
}
