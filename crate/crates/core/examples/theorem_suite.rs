// Running the theorem registry against structures.

use fuzzy_gamma::suite::{self, BatteryPlan, Claim, Suite, TheoremId, Witness};
use fuzzy_gamma::{fixtures, GridBattery};

fn main() {
    for (name, s) in fixtures::all() {
        let battery = BatteryPlan::default().for_structure(&s);
        let verdicts = suite::check_all(&s, &battery).unwrap();
        let refuted = verdicts.iter().filter(|v| v.is_refuted()).count();
        println!("{name}: {} statements, {refuted} refuted", verdicts.len());
    }

    // Equivalences exercise both directions. NZ2 is not regular, so the
    // check must exhibit a fuzzy counterexample to the universal side.
    let nz2 = fixtures::nz2();
    let suite = Suite::new(&nz2, &GridBattery::exhaustive(6)).unwrap();
    for id in [TheoremId::T13, TheoremId::T23, TheoremId::L8] {
        let v = suite.check(Claim::Theorem(id)).unwrap();
        println!("{id}: {} -- {:?} {}", id.statement(), v.outcome, v.note);
        if let Some(Witness::Fuzzy {
            f, g, violation, ..
        }) = &v.evidence
        {
            println!(
                "    evidence f = {f:?}, g = {g:?} at {:?}",
                violation.element
            );
        }
    }
    let lz2 = fixtures::lz2();
    let v = suite::check(
        &lz2,
        Claim::Theorem(TheoremId::T13),
        &GridBattery::exhaustive(6),
    )
    .unwrap();
    println!(
        "LZ2 T13: {:?} ({}), battery {} members",
        v.outcome, v.note, v.battery.members
    );
}
