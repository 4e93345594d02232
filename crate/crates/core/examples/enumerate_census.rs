// Enumerating small po-Γ-semigroups and counting regularity classes.

use fuzzy_gamma::enumerate::{self, SearchSpec};
use fuzzy_gamma::fixtures;

fn main() {
    let tables: Vec<Vec<usize>> = enumerate::enumerate_tables(2, 1, None).unwrap().collect();
    println!("{} associative tables on 2 elements:", tables.len());
    for t in &tables {
        let orders = enumerate::enumerate_orders(2, 1, t, true);
        println!("  {t:?} with {} compatible orders", orders.len());
    }

    for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        let labeled = enumerate::census(&SearchSpec::new(n, m)).unwrap();
        let iso = enumerate::census(&SearchSpec::new(n, m).up_to_iso()).unwrap();
        println!(
            "n={n} m={m}: {} labeled, {} up to isomorphism, classes {:?}",
            labeled.total, iso.total, iso.classes
        );
    }

    let limited = enumerate::census(&SearchSpec::new(2, 2).with_limit(10)).unwrap();
    println!(
        "with a limit of 10: total {}, truncated {}",
        limited.total, limited.truncated
    );

    let lz2 = fixtures::lz2();
    println!("LZ2 canonical form {:?}", enumerate::canonical_form(&lz2));
    println!(
        "NZ2 canonical form {:?}",
        enumerate::canonical_form(&fixtures::nz2())
    );
    println!(
        "caps: {}",
        enumerate::enumerate_structures(&SearchSpec::new(4, 1))
            .err()
            .unwrap()
    );
}
