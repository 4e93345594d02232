// Sup-min composition and fuzzy ideal predicates.

use fuzzy_gamma::fixtures;
use fuzzy_gamma::fuzzy::{self, FuzzySubset};

fn main() {
    let lz2 = fixtures::lz2();
    let f = FuzzySubset::from_labels(&lz2, [("a", 0.5), ("b", 1.0)]).unwrap();
    let g = FuzzySubset::from_labels(&lz2, [("a", 0.25), ("b", 0.75)]).unwrap();
    let fg = fuzzy::compose(&lz2, &f, &g).unwrap();
    println!("LZ2: f∘g = {:?}", fg.values());
    let one = fuzzy::constant_one(&lz2);
    let chain = fuzzy::compose_chain(&lz2, &[&f, &one, &f]).unwrap();
    println!("LZ2: f∘1∘f = {:?}", chain.values());
    for (name, h) in [("f", &f), ("g", &g), ("f∘g", &fg)] {
        println!(
            "LZ2: {name}: right ideal {}, left ideal {}, bi-ideal {}, quasi-ideal {}",
            fuzzy::is_fuzzy_right_ideal(&lz2, h).unwrap(),
            fuzzy::is_fuzzy_left_ideal(&lz2, h).unwrap(),
            fuzzy::is_fuzzy_bi_ideal(&lz2, h).unwrap(),
            fuzzy::is_fuzzy_quasi_ideal(&lz2, h).unwrap(),
        );
    }

    // On NZ2 nothing factors above `a`, so every composite vanishes there.
    let nz2 = fixtures::nz2();
    let f = FuzzySubset::new(&nz2, vec![0.2, 0.7]).unwrap();
    let g = FuzzySubset::new(&nz2, vec![0.6, 0.9]).unwrap();
    println!(
        "NZ2: f∘g = {:?}",
        fuzzy::compose(&nz2, &f, &g).unwrap().values()
    );
    println!(
        "NZ2: f order reversing: {}",
        fuzzy::is_order_reversing(&nz2, &f).unwrap()
    );
    let r = fuzzy::generated_fuzzy_right_ideal(&nz2, &f).unwrap();
    println!("NZ2: right ideal generated by f = {:?}", r.values());

    // Subsets are bound to their structure.
    println!(
        "mixing structures: {}",
        fuzzy::compose(&lz2, &f, &g).unwrap_err()
    );
    println!(
        "out of range: {}",
        FuzzySubset::new(&nz2, vec![0.5, 1.5]).unwrap_err()
    );
}
