macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().expect(concat!(stringify!($name), " example should run"));
        }
    };
}

example!(compare_words);
example!(normal_forms);
example!(cantor_ordinals);
example!(fundamental_sequences);
example!(word_ordinal_correspondence);
example!(multiset_model);
example!(biorder_gadget);
example!(w3_definability);
example!(selftest_report);
example!(cli_in_process);
