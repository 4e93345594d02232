//! Crisp ideals and the four regularity classes.
//!
//! Each class is decided by independent procedures that must agree:
//!
//! | class          | definitional            | ideal criterion               | fuzzy witness                |
//! |----------------|-------------------------|-------------------------------|------------------------------|
//! | regular        | `a ∈ (aΓMΓa]`           | `R(a) ∩ L(a) ⊆ (R(a)ΓL(a)]`   | `(f_a ∘ 1 ∘ f_a)(a) = 1`     |
//! | intra-regular  | `a ∈ (MΓaΓaΓM]`         | `R(a) ∩ L(a) ⊆ (L(a)ΓR(a)]`   | `(1 ∘ f_a² ∘ 1)(a) = 1`      |
//! | right regular  | `a ∈ (aΓaΓM]`           |                               | `(f_a² ∘ 1)(a) = 1`          |
//! | left regular   | `a ∈ (MΓaΓa]`           |                               | `(1 ∘ f_a²)(a) = 1`          |
//!
//! The ideal criteria and fuzzy witnesses presuppose an order compatible with
//! the operations; on structures validated without compatibility only the
//! definitional decider runs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::{self, FuzzySubset};
use crate::structure::{GammaStructure, Subset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("classification requires an associative structure")]
    NotAssociative,
    #[error("deciders disagree on {class}: {evidence}")]
    DeciderDisagreement {
        class: RegularityClass,
        evidence: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityClass {
    Regular,
    IntraRegular,
    RightRegular,
    LeftRegular,
}

impl RegularityClass {
    pub const ALL: [RegularityClass; 4] = [
        RegularityClass::Regular,
        RegularityClass::IntraRegular,
        RegularityClass::RightRegular,
        RegularityClass::LeftRegular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegularityClass::Regular => "regular",
            RegularityClass::IntraRegular => "intra_regular",
            RegularityClass::RightRegular => "right_regular",
            RegularityClass::LeftRegular => "left_regular",
        }
    }

    /// The shape of a witnessing factorization `a <= w1 γ1 w2 γ2 ...`.
    fn pattern(self) -> &'static [Slot] {
        use Slot::*;
        match self {
            RegularityClass::Regular => &[Target, Free, Target],
            RegularityClass::IntraRegular => &[Free, Target, Target, Free],
            RegularityClass::RightRegular => &[Target, Target, Free],
            RegularityClass::LeftRegular => &[Free, Target, Target],
        }
    }
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decider {
    Definitional,
    IdealCriterion,
    FuzzyWitness,
}

#[derive(Clone, Copy)]
enum Slot {
    Target,
    Free,
}

/// `A Γ M ⊆ A` and `A = (A]`.
pub fn is_right_ideal(s: &GammaStructure, a: &Subset) -> bool {
    s.subset_product(a, &s.full_subset()).is_subset_of(a) && s.downward_closure(a) == *a
}

/// `M Γ A ⊆ A` and `A = (A]`.
pub fn is_left_ideal(s: &GammaStructure, a: &Subset) -> bool {
    s.subset_product(&s.full_subset(), a).is_subset_of(a) && s.downward_closure(a) == *a
}

/// `R(a) = ({a} ∪ aΓM]`.
pub fn principal_right_ideal(s: &GammaStructure, a: usize) -> Subset {
    let single = s.singleton(a);
    s.downward_closure(&single.union(&s.subset_product(&single, &s.full_subset())))
}

/// `L(a) = ({a} ∪ MΓa]`.
pub fn principal_left_ideal(s: &GammaStructure, a: usize) -> Subset {
    let single = s.singleton(a);
    s.downward_closure(&single.union(&s.subset_product(&s.full_subset(), &single)))
}

/// Membership `a ∈ (chain]` for the class's defining product chain.
pub fn holds_definitionally_at(s: &GammaStructure, class: RegularityClass, a: usize) -> bool {
    let one = s.singleton(a);
    let all = s.full_subset();
    let chain: Vec<&Subset> = class
        .pattern()
        .iter()
        .map(|slot| match slot {
            Slot::Target => &one,
            Slot::Free => &all,
        })
        .collect();
    s.downward_closure(&s.chain_product(&chain)).contains(a)
}

/// Lemma-style inclusion `R(a) ∩ L(a) ⊆ (R(a)ΓL(a)]` (regular) or
/// `(L(a)ΓR(a)]` (intra-regular). `None` for the one-sided classes.
pub fn holds_by_ideal_criterion_at(
    s: &GammaStructure,
    class: RegularityClass,
    a: usize,
) -> Option<bool> {
    let r = principal_right_ideal(s, a);
    let l = principal_left_ideal(s, a);
    let product = match class {
        RegularityClass::Regular => s.subset_product(&r, &l),
        RegularityClass::IntraRegular => s.subset_product(&l, &r),
        _ => return None,
    };
    Some(
        r.intersection(&l)
            .is_subset_of(&s.downward_closure(&product)),
    )
}

/// Value at `a` of the class's composition shape applied to `f_a`.
pub fn fuzzy_witness_value(s: &GammaStructure, class: RegularityClass, a: usize) -> f64 {
    let fa = FuzzySubset::point_characteristic(s, a);
    let fa = fa.values();
    let ones = vec![1.0; s.size()];
    match class {
        RegularityClass::Regular => {
            let left = fuzzy::compose_values(s, fa, &ones);
            fuzzy::compose_at(s, &left, fa, a)
        }
        RegularityClass::IntraRegular => {
            let sq = fuzzy::compose_values(s, fa, fa);
            let left = fuzzy::compose_values(s, &ones, &sq);
            fuzzy::compose_at(s, &left, &ones, a)
        }
        RegularityClass::RightRegular => {
            let sq = fuzzy::compose_values(s, fa, fa);
            fuzzy::compose_at(s, &sq, &ones, a)
        }
        RegularityClass::LeftRegular => {
            let sq = fuzzy::compose_values(s, fa, fa);
            fuzzy::compose_at(s, &ones, &sq, a)
        }
    }
}

pub fn holds_by_fuzzy_witness_at(s: &GammaStructure, class: RegularityClass, a: usize) -> bool {
    fuzzy_witness_value(s, class, a) == 1.0
}

pub fn decide_def(s: &GammaStructure, class: RegularityClass) -> bool {
    (0..s.size()).all(|a| holds_definitionally_at(s, class, a))
}

pub fn decide_ideal(s: &GammaStructure, class: RegularityClass) -> Option<bool> {
    (0..s.size())
        .map(|a| holds_by_ideal_criterion_at(s, class, a))
        .try_fold(true, |acc, v| v.map(|v| acc && v))
}

pub fn decide_fuzzy(s: &GammaStructure, class: RegularityClass) -> bool {
    (0..s.size()).all(|a| holds_by_fuzzy_witness_at(s, class, a))
}

pub fn decide_regular_def(s: &GammaStructure) -> bool {
    decide_def(s, RegularityClass::Regular)
}

pub fn decide_intra_def(s: &GammaStructure) -> bool {
    decide_def(s, RegularityClass::IntraRegular)
}

pub fn decide_right_regular_def(s: &GammaStructure) -> bool {
    decide_def(s, RegularityClass::RightRegular)
}

pub fn decide_left_regular_def(s: &GammaStructure) -> bool {
    decide_def(s, RegularityClass::LeftRegular)
}

pub fn decide_regular_ideal(s: &GammaStructure) -> bool {
    decide_ideal(s, RegularityClass::Regular).unwrap_or(false)
}

pub fn decide_intra_ideal(s: &GammaStructure) -> bool {
    decide_ideal(s, RegularityClass::IntraRegular).unwrap_or(false)
}

pub fn decide_regular_fuzzy(s: &GammaStructure) -> bool {
    decide_fuzzy(s, RegularityClass::Regular)
}

pub fn decide_intra_fuzzy(s: &GammaStructure) -> bool {
    decide_fuzzy(s, RegularityClass::IntraRegular)
}

pub fn decide_right_regular_fuzzy(s: &GammaStructure) -> bool {
    decide_fuzzy(s, RegularityClass::RightRegular)
}

pub fn decide_left_regular_fuzzy(s: &GammaStructure) -> bool {
    decide_fuzzy(s, RegularityClass::LeftRegular)
}

/// A concrete `element <= ((w0 γ0 w1) γ1 w2) ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationWitness {
    pub element: usize,
    pub factors: Vec<usize>,
    pub gammas: Vec<usize>,
    pub product: usize,
}

impl FactorizationWitness {
    /// Recomputes the product and the order relation.
    pub fn verify(&self, s: &GammaStructure) -> bool {
        if self.factors.len() != self.gammas.len() + 1 {
            return false;
        }
        let product = self
            .gammas
            .iter()
            .zip(&self.factors[1..])
            .fold(self.factors[0], |acc, (&g, &w)| s.mul(acc, g, w));
        product == self.product && s.leq(self.element, product)
    }

    pub fn render(&self, s: &GammaStructure) -> String {
        let mut expr = s.element_label(self.factors[0]).to_string();
        for (i, (&g, &w)) in self.gammas.iter().zip(&self.factors[1..]).enumerate() {
            let next = format!("{} {} {}", expr, s.gamma_label(g), s.element_label(w));
            expr = if i + 1 < self.gammas.len() {
                format!("({next})")
            } else {
                next
            };
        }
        format!("{} <= {}", s.element_label(self.element), expr)
    }
}

/// Smallest factorization of `a` in the class's shape, ordering candidates
/// by free elements first and then Γ-indices, each lexicographically.
pub fn find_factorization(
    s: &GammaStructure,
    class: RegularityClass,
    a: usize,
) -> Option<FactorizationWitness> {
    let n = s.size();
    let m = s.gamma_count();
    let pattern = class.pattern();
    let free = pattern.iter().filter(|p| matches!(p, Slot::Free)).count();
    let ngammas = pattern.len() - 1;
    let mut free_vals = vec![0usize; free];
    loop {
        let mut it = free_vals.iter();
        let factors: Vec<usize> = pattern
            .iter()
            .map(|p| match p {
                Slot::Target => a,
                Slot::Free => *it.next().unwrap(),
            })
            .collect();
        let mut gammas = vec![0usize; ngammas];
        loop {
            let product = gammas
                .iter()
                .zip(&factors[1..])
                .fold(factors[0], |acc, (&g, &w)| s.mul(acc, g, w));
            if s.leq(a, product) {
                return Some(FactorizationWitness {
                    element: a,
                    factors,
                    gammas,
                    product,
                });
            }
            if !odometer(&mut gammas, m) {
                break;
            }
        }
        if !odometer(&mut free_vals, n) {
            return None;
        }
    }
}

/// Increments `digits` (last digit least significant); false on wrap-around.
fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassVerdict {
    pub class: RegularityClass,
    pub holds: bool,
    pub deciders: Vec<(Decider, bool)>,
    /// One factorization per element when the class holds.
    pub witnesses: Vec<FactorizationWitness>,
    /// Smallest element outside the class's defining set when it fails.
    pub failing_element: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub digest: String,
    pub classes: Vec<ClassVerdict>,
}

impl ClassificationReport {
    pub fn verdict(&self, class: RegularityClass) -> &ClassVerdict {
        self.classes
            .iter()
            .find(|c| c.class == class)
            .expect("every class is reported")
    }

    pub fn holds(&self, class: RegularityClass) -> bool {
        self.verdict(class).holds
    }
}

/// Runs every decider on one class and checks that they agree.
pub fn classify_class(
    s: &GammaStructure,
    class: RegularityClass,
) -> Result<ClassVerdict, ClassifyError> {
    if !s.is_associative() {
        return Err(ClassifyError::NotAssociative);
    }
    let n = s.size();
    let def: Vec<bool> = (0..n)
        .map(|a| holds_definitionally_at(s, class, a))
        .collect();
    let fuzzy: Vec<bool> = (0..n)
        .map(|a| holds_by_fuzzy_witness_at(s, class, a))
        .collect();
    let mut deciders = vec![(Decider::Definitional, def.iter().all(|&b| b))];
    let compatible = s.is_compatible();
    if compatible {
        if let Some(ideal) = decide_ideal(s, class) {
            deciders.push((Decider::IdealCriterion, ideal));
        }
        deciders.push((Decider::FuzzyWitness, fuzzy.iter().all(|&b| b)));
    }

    let holds = deciders[0].1;
    if let Some((d, v)) = deciders.iter().find(|(_, v)| *v != holds) {
        let evidence = format!(
            "definitional={holds}, {d:?}={v}; per-element definitional={def:?}, fuzzy={fuzzy:?}"
        );
        return Err(ClassifyError::DeciderDisagreement { class, evidence });
    }
    // pointwise agreement of the definitional and fuzzy routes
    if let Some(a) = (0..n).find(|&a| compatible && def[a] != fuzzy[a]) {
        return Err(ClassifyError::DeciderDisagreement {
            class,
            evidence: format!(
                "element {} is {} definitionally but fuzzy witness value is {}",
                s.element_label(a),
                def[a],
                fuzzy_witness_value(s, class, a)
            ),
        });
    }

    let mut witnesses = Vec::new();
    let mut failing_element = None;
    if holds {
        for a in 0..n {
            match find_factorization(s, class, a) {
                Some(w) => witnesses.push(w),
                None => {
                    return Err(ClassifyError::DeciderDisagreement {
                        class,
                        evidence: format!(
                            "no factorization found for {} although the class holds",
                            s.element_label(a)
                        ),
                    })
                }
            }
        }
    } else {
        failing_element = def.iter().position(|&b| !b);
        if let Some(a) = failing_element {
            if find_factorization(s, class, a).is_some() {
                return Err(ClassifyError::DeciderDisagreement {
                    class,
                    evidence: format!(
                        "factorization exists for {} although it fails definitionally",
                        s.element_label(a)
                    ),
                });
            }
        }
    }
    Ok(ClassVerdict {
        class,
        holds,
        deciders,
        witnesses,
        failing_element,
    })
}

/// Classifies `s` into the four regularity classes.
pub fn classify(s: &GammaStructure) -> Result<ClassificationReport, ClassifyError> {
    let classes = RegularityClass::ALL
        .iter()
        .map(|&c| classify_class(s, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClassificationReport {
        digest: s.digest(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn right_and_left_ideals() {
        let nz2 = fixtures::nz2();
        assert!(is_right_ideal(&nz2, &nz2.singleton(0)));
        assert!(!is_right_ideal(&nz2, &nz2.singleton(1)));
        for (_, s) in fixtures::all() {
            assert!(is_right_ideal(&s, &s.full_subset()));
            assert!(is_left_ideal(&s, &s.full_subset()));
        }
    }

    #[test]
    fn principal_ideals() {
        let nz2 = fixtures::nz2();
        assert_eq!(principal_right_ideal(&nz2, 1), nz2.full_subset());
        let lz2 = fixtures::lz2();
        assert_eq!(principal_right_ideal(&lz2, 0), lz2.singleton(0));
        assert_eq!(principal_left_ideal(&lz2, 0), lz2.full_subset());
        let t1 = fixtures::t1();
        assert_eq!(principal_right_ideal(&t1, 0), t1.singleton(0));
        assert_eq!(principal_left_ideal(&t1, 0), t1.singleton(0));
    }

    #[test]
    fn definitional_deciders() {
        for class in RegularityClass::ALL {
            assert!(decide_def(&fixtures::t1(), class));
            assert!(decide_def(&fixtures::lz2(), class));
            assert!(!decide_def(&fixtures::nz2(), class));
        }
    }

    #[test]
    fn ideal_criteria() {
        let nz2 = fixtures::nz2();
        assert!(!decide_regular_ideal(&nz2));
        assert!(!decide_intra_ideal(&nz2));
        for s in [fixtures::lz2(), fixtures::t1()] {
            assert!(decide_regular_ideal(&s));
            assert!(decide_intra_ideal(&s));
        }
        assert_eq!(decide_ideal(&nz2, RegularityClass::RightRegular), None);
    }

    #[test]
    fn fuzzy_deciders() {
        let nz2 = fixtures::nz2();
        assert_eq!(fuzzy_witness_value(&nz2, RegularityClass::Regular, 1), 0.0);
        assert!(!decide_regular_fuzzy(&nz2));
        for s in [fixtures::lz2(), fixtures::t1()] {
            assert!(decide_regular_fuzzy(&s));
            assert!(decide_intra_fuzzy(&s));
            assert!(decide_right_regular_fuzzy(&s));
            assert!(decide_left_regular_fuzzy(&s));
        }
    }

    #[test]
    fn classify_fixtures() {
        let t1 = classify(&fixtures::t1()).unwrap();
        assert!(RegularityClass::ALL.iter().all(|&c| t1.holds(c)));

        let lz2 = fixtures::lz2();
        let report = classify(&lz2).unwrap();
        let regular = report.verdict(RegularityClass::Regular);
        assert!(regular.holds);
        assert_eq!(regular.deciders.len(), 3);
        assert_eq!(regular.witnesses[0].render(&lz2), "a <= (a g a) g a");
        assert!(regular.witnesses.iter().all(|w| w.verify(&lz2)));

        let nz2 = fixtures::nz2();
        let report = classify(&nz2).unwrap();
        for class in RegularityClass::ALL {
            let v = report.verdict(class);
            assert!(!v.holds);
            assert_eq!(v.failing_element, Some(1));
        }
    }

    #[test]
    fn classify_requires_semigroup() {
        let s =
            GammaStructure::from_indexed(2, 1, vec![1, 0, 1, 1], &[], Default::default()).unwrap();
        assert_eq!(classify(&s), Err(ClassifyError::NotAssociative));
    }

    #[test]
    fn intra_regular_witness_shape() {
        let lz2 = fixtures::lz2();
        let w = find_factorization(&lz2, RegularityClass::IntraRegular, 1).unwrap();
        assert_eq!(w.factors.len(), 4);
        assert!(w.verify(&lz2));
        assert_eq!(w.render(&lz2), "b <= ((b g b) g b) g a");
    }
}
