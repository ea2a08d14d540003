macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run().expect(concat!($file, " should run"));
        }
    };
}

example!(hook_lengths, "hook_lengths.rs");
example!(enumerate_cores, "enumerate_cores.rs");
example!(bias_sweep, "bias_sweep.rs");
example!(generating_functions, "generating_functions.rs");
example!(region_theorem, "region_theorem.rs");
example!(quadratic_forms, "quadratic_forms.rs");
example!(conjecture_scan, "conjecture_scan.rs");
example!(core_conditions, "core_conditions.rs");
