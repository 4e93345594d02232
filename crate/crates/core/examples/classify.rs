// Regularity classes decided three ways, with factorization witnesses.

use fuzzy_gamma::ideal::{self, RegularityClass};
use fuzzy_gamma::{classify, fixtures};

fn main() {
    for (name, s) in fixtures::all() {
        let report = classify(&s).expect("deciders agree");
        println!("{name} ({})", report.digest);
        for v in &report.classes {
            println!("  {:<14} {} {:?}", v.class.name(), v.holds, v.deciders);
            for w in &v.witnesses {
                assert!(w.verify(&s));
                println!("    {}", w.render(&s));
            }
            if let Some(a) = v.failing_element {
                println!("    fails at {}", s.element_label(a));
            }
        }
    }

    // Individual deciders are available too.
    let lz2 = fixtures::lz2();
    println!(
        "LZ2 regular: definitional {}, ideal criterion {:?}, fuzzy witness {}",
        ideal::decide_regular_def(&lz2),
        ideal::decide_ideal(&lz2, RegularityClass::Regular),
        ideal::decide_regular_fuzzy(&lz2)
    );
    let b = lz2.element_index("b").unwrap();
    println!(
        "R(b) = {:?}, L(b) = {:?}",
        ideal::principal_right_ideal(&lz2, b),
        ideal::principal_left_ideal(&lz2, b)
    );
    println!(
        "(f_b∘1∘f_b)(b) = {}",
        ideal::fuzzy_witness_value(&lz2, RegularityClass::Regular, b)
    );
}
