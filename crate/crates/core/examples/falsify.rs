// Refuting weakened statements and replaying the witnesses.

use fuzzy_gamma::format::VerdictDocument;
use fuzzy_gamma::suite::{self, BatteryPlan, Claim, NegativeControl, SearchSpace, TheoremId};

fn main() {
    let space = SearchSpace {
        max_n: 2,
        max_m: 1,
        limit: None,
    };
    for control in NegativeControl::ALL {
        let (s, verdict) =
            suite::find_counterexample(Claim::Control(control), space, BatteryPlan::default())
                .unwrap()
                .expect("weakened statements fail on small structures");
        let witness = verdict.witness.as_ref().unwrap();
        assert!(witness.replay(&s));
        println!("{} refuted on\n{s}", control.as_str());
        println!(
            "{}",
            serde_json::to_string_pretty(&VerdictDocument::from_verdict(&s, &verdict)).unwrap()
        );
    }

    // The registry itself survives the same search.
    for id in [TheoremId::L8, TheoremId::C31, TheoremId::T23] {
        let found =
            suite::find_counterexample(Claim::Theorem(id), space, BatteryPlan::default()).unwrap();
        println!(
            "{id}: {}",
            if found.is_some() {
                "refuted"
            } else {
                "no refutation"
            }
        );
        assert!(found.is_none());
    }
}
