use corehooks::*;
use proptest::prelude::*;

/// Random partitions of size at most 25.
fn small_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=8, 0..=6).prop_filter_map("size <= 25", |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        (parts.iter().sum::<usize>() <= 25).then(|| Partition::new(parts).unwrap())
    })
}

fn cell_of(p: &Partition, pick: usize) -> Option<Cell> {
    let cells: Vec<Cell> = p.cells().collect();
    (!cells.is_empty()).then(|| cells[pick % cells.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hook_formula_counts_arm_and_leg(p in small_partition()) {
        for cell in p.cells() {
            let arm = p.parts()[cell.row - 1] - cell.col;
            let leg = p.parts()[cell.row..].iter().filter(|&&x| x >= cell.col).count();
            prop_assert_eq!(p.hook_length(cell).unwrap(), arm + leg + 1);
        }
    }

    #[test]
    fn conjugation_preserves_hooks(p in small_partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.hook_profile(), p.hook_profile());
        prop_assert_eq!(c.size(), p.size());
    }

    #[test]
    fn conjugation_keeps_cores_cores(p in small_partition(), t in 2usize..=7) {
        prop_assert_eq!(p.is_t_core(t).unwrap(), p.conjugate().is_t_core(t).unwrap());
    }

    #[test]
    fn region_hooks_are_local(p in small_partition(), pick in any::<usize>()) {
        if let Some(cell) = cell_of(&p, pick) {
            let shape = p.region_shape(cell).unwrap();
            for inner in shape.cells() {
                let outer = Cell::new(cell.row + inner.row - 1, cell.col + inner.col - 1);
                prop_assert_eq!(shape.hook_length(inner).unwrap(), p.hook_length(outer).unwrap());
            }
        }
    }

    #[test]
    fn region_of_multiple_hook_holds_t_hook(p in small_partition(), pick in any::<usize>(), t in 1usize..=7) {
        if let Some(cell) = cell_of(&p, pick) {
            let h = p.hook_length(cell).unwrap();
            if h % t == 0 {
                let w = verify::region_witness(&p, cell, t).unwrap();
                prop_assert!(w.witness_cell.is_some());
            }
        }
    }

    #[test]
    fn t_core_iff_no_t_hook(p in small_partition(), t in 2usize..=7) {
        let has_multiple = p.hook_lengths().concat().iter().any(|h| h % t == 0);
        prop_assert_eq!(p.is_t_core(t).unwrap(), !has_multiple);
        prop_assert_eq!(p.is_t_core(t).unwrap(), !p.has_exact_hook(t));
    }

    #[test]
    fn series_truncation_is_coherent(t in 2usize..=7, order in 0usize..80, cut in 0usize..80) {
        let cut = cut.min(order);
        let long = eta_quotient_tcore(t, order).unwrap();
        prop_assert_eq!(long.prefix(cut).unwrap(), eta_quotient_tcore(t, cut).unwrap());
    }

    #[test]
    fn core_sets_are_closed_under_conjugation(n in 0usize..=30, t in 2usize..=6) {
        let cores: Vec<Partition> = t_cores_of(n, t, &PartFilter::none()).unwrap().collect();
        for p in &cores {
            prop_assert!(cores.contains(&p.conjugate()));
        }
    }

    #[test]
    fn enumeration_is_deterministic(n in 0usize..=35, t in 2usize..=7) {
        let a: Vec<Partition> = t_cores_of(n, t, &PartFilter::none()).unwrap().collect();
        let b: Vec<Partition> = t_cores_of(n, t, &PartFilter::none()).unwrap().collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn five_mod_eight_forces_odd_triples(h in 0u64..35) {
        let n = quadform::OddRepresentation::target(h);
        prop_assume!(n <= 5000);
        prop_assert_eq!(n % 8, 5);
        for (x, y, z) in quadform::all_ternary_representations(n) {
            prop_assert!(x % 2 == 1 && y % 2 == 1 && z % 2 == 1, "{} = {}^2 + 2*{}^2 + 2*{}^2", n, x, y, z);
        }
    }

    #[test]
    fn any_five_mod_eight_forces_odd_triples(b in 0u64..625) {
        let n = 8 * b + 5;
        for (x, y, z) in quadform::all_ternary_representations(n) {
            prop_assert!(x % 2 == 1 && y % 2 == 1 && z % 2 == 1);
        }
    }

    #[test]
    fn text_form_round_trips(p in small_partition()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }
}
