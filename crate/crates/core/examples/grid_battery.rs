// Grid batteries of fuzzy subsets.

use fuzzy_gamma::battery::BatteryError;
use fuzzy_gamma::{enumerate_grid_battery, fixtures, GridBattery};

fn main() {
    let nz2 = fixtures::nz2();
    let battery = GridBattery::exhaustive(3);
    for f in enumerate_grid_battery(&nz2, &battery).unwrap() {
        print!("{:?} ", f.values());
    }
    println!();

    let n = nz2.size();
    let complete = GridBattery::exhaustive(GridBattery::complete_levels(n));
    println!(
        "{} levels give {} members and are complete for two-subset statements on {n} elements",
        complete.levels,
        complete.size(n).unwrap()
    );

    let mut capped = GridBattery::exhaustive(12);
    capped.cap = 100;
    match enumerate_grid_battery(&nz2, &capped) {
        Err(e @ BatteryError::CapExceeded { .. }) => println!("{e}"),
        _ => panic!("expected the cap to trip"),
    }

    // Sampled batteries are reproducible from their seed.
    let sampled = GridBattery::sampled(12, 5, 42);
    let a: Vec<_> = enumerate_grid_battery(&nz2, &sampled)
        .unwrap()
        .map(|f| f.into_values())
        .collect();
    let b: Vec<_> = enumerate_grid_battery(&nz2, &sampled)
        .unwrap()
        .map(|f| f.into_values())
        .collect();
    assert_eq!(a, b);
    println!("sampled: {a:?}");
    println!(
        "auto for n = 7: exhaustive = {}",
        GridBattery::auto(7, 16, 0).is_exhaustive()
    );
}
