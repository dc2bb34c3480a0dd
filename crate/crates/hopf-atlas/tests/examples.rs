// Every example runs to completion with its default arguments.

macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!("../examples/", $file));

            #[test]
            fn runs() {
                run_example();
            }
        }
    };
}

example!(verify_axioms, "verify_axioms.rs");
example!(invariants_table, "invariants_table.rs");
example!(duality, "duality.rs");
example!(iso_search, "iso_search.rs");
example!(sub_hopf, "sub_hopf.rs");
example!(coinvariants, "coinvariants.rs");
example!(prove_dimension, "prove_dimension.rs");
example!(status_table, "status_table.rs");
example!(acceptance_suite, "acceptance_suite.rs");
