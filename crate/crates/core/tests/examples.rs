macro_rules! example_test {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(halfint_segments, "halfint_segments.rs", halfint_segments_runs);
example_test!(lowest_weights, "lowest_weights.rs", lowest_weights_runs);
example_test!(trapa_tableaux, "trapa_tableaux.rs", trapa_tableaux_runs);
example_test!(realize_lowest_weight, "realize_lowest_weight.rs", realize_lowest_weight_runs);
example_test!(packet_members, "packet_members.rs", packet_members_runs);
example_test!(classify, "classify.rs", classify_runs);
example_test!(verify_sweep, "verify_sweep.rs", verify_sweep_runs);
