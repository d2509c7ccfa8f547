//! Every runnable example must run to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(sumsets, "../examples/sumsets.rs");
example!(classify_labeling, "../examples/classify_labeling.rs");
example!(graph_operations, "../examples/graph_operations.rs");
example!(constructions, "../examples/constructions.rs");
example!(
    identical_biarithmetic,
    "../examples/identical_biarithmetic.rs"
);
example!(search, "../examples/search.rs");
example!(census, "../examples/census.rs");
example!(pipeline, "../examples/pipeline.rs");
