// Building and validating finite po-Γ-semigroups.

use fuzzy_gamma::format;
use fuzzy_gamma::structure::StructureError;
use fuzzy_gamma::{GammaStructure, Subset, ValidateOptions};

fn main() {
    // Two operations on {0, p, q}: `m` is the meet with p ∧ q = 0, `z` sends everything to 0.
    let elements = vec!["0".to_string(), "p".to_string(), "q".to_string()];
    let gammas = vec!["m".to_string(), "z".to_string()];
    let meet = |x: usize, y: usize| if x == y { x } else { 0 };
    let mut table = Vec::new();
    for x in 0..3 {
        table.extend((0..3).map(|y| meet(x, y)));
        table.extend([0, 0, 0]);
    }
    let s = GammaStructure::from_parts(
        elements,
        gammas,
        table,
        &[(0, 1), (0, 2)],
        ValidateOptions::default(),
    )
    .expect("valid structure");
    println!("{s}");
    assert!(s.is_associative());
    println!(
        "associative: {}, compatible: {}",
        s.is_associative(),
        s.is_compatible()
    );
    println!("digest: {}", s.digest());

    // A_a: pairs (y, z) with a <= y γ z for some γ
    for a in 0..s.size() {
        let pairs: Vec<String> = s
            .factorizations()
            .of(a)
            .iter()
            .map(|&(y, z)| format!("({},{})", s.element_label(y), s.element_label(z)))
            .collect();
        println!("A_{} = {{{}}}", s.element_label(a), pairs.join(" "));
    }

    let p = s.singleton(1);
    let m = s.full_subset();
    println!("p Γ M = {:?}", s.subset_product(&p, &m));
    println!("(p] = {:?}", s.downward_closure(&p));
    println!(
        "(p Γ M Γ p] = {:?}",
        s.downward_closure(&s.chain_product(&[&p, &m, &p]))
    );
    let union = Subset::from_indices(3, [1, 2]);
    println!("{{p, q}} has {} elements", union.len());

    // Validation failures carry enough detail to locate the problem.
    let cyclic = GammaStructure::from_indexed(
        2,
        1,
        vec![0, 0, 0, 0],
        &[(0, 1), (1, 0)],
        ValidateOptions::default(),
    );
    match cyclic {
        Err(StructureError::Antisymmetry(a, b)) => println!("rejected: {a} <= {b} <= {a}"),
        other => panic!("unexpected {other:?}"),
    }
    let group = GammaStructure::from_indexed(
        2,
        1,
        vec![0, 1, 1, 0],
        &[(0, 1)],
        ValidateOptions::default(),
    );
    println!("Z2 with e0 <= e1: {}", group.unwrap_err());
    let relaxed = GammaStructure::from_indexed(
        2,
        1,
        vec![0, 1, 1, 0],
        &[(0, 1)],
        ValidateOptions {
            require_compat: false,
        },
    )
    .unwrap();
    println!(
        "accepted without compatibility: compatible = {}",
        relaxed.is_compatible()
    );

    let json = format::structure_to_json(&s);
    let back = format::parse_structure(&json, ValidateOptions::default()).unwrap();
    assert_eq!(back.digest(), s.digest());
    println!("JSON round trip keeps the digest");
}
