// Every example must run to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(structures);
example!(fuzzy_composition);
example!(classify);
example!(grid_battery);
example!(theorem_suite);
example!(enumerate_census);
example!(falsify);
