//! Executable checks for the fuzzy-ideal results on finite po-Γ-semigroups.
//!
//! Every statement is compiled into a check against one structure and a
//! [`Battery`] of fuzzy subsets. Statements quantified over "every fuzzy
//! right ideal" (left, arbitrary) range over the battery members that pass
//! the corresponding definitional predicate. Implications decide their
//! hypothesis definitionally and report [`Outcome::HoldsVacuously`] when it
//! fails. Equivalences are checked in both directions: when the structure
//! is not in the class, the check must find a fuzzy counterexample to the
//! universal side, first among the characteristic functions used in the
//! converse proofs and then in the battery.
//!
//! Two readings differ from a literal transcription of the source text:
//! the converse of the intra-regularity criterion uses `f_{R(a)}`, `f_{L(a)}`
//! throughout, and the converse of the regularity criterion needs both
//! `y ∈ R(a)` and `z ∈ L(a)` for the witnessing pair.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::battery::{self, BatteryError, BatteryScope, GridBattery};
use crate::enumerate::{self, EnumerateError, SearchSpec};
use crate::fuzzy;
use crate::ideal::{self, RegularityClass};
use crate::structure::{GammaStructure, Subset};

/// Pair statements never scan more than this many `(f, g)` pairs; larger
/// pair spaces are thinned deterministically and flagged in the verdict.
pub const PAIR_CAP: usize = 10_000_000;

/// Characteristic functions of all subsets are added to the battery up to
/// this carrier size.
const MAX_SUBSET_CARRIER: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown theorem id `{0}`")]
    UnknownId(String),
    #[error(transparent)]
    Battery(#[from] BatteryError),
    #[error("{0} requires an associative structure")]
    RequiresSemigroup(Claim),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// Identifiers of the checked statements, in registry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    P4,
    P5,
    P6,
    L8,
    L9,
    L10,
    L11,
    L12,
    L15,
    L17,
    C18,
    C19,
    L20,
    L21,
    L22,
    T13,
    T16,
    T23,
    T24,
    T26,
    T28,
    P29,
    C30,
    C31,
    QI,
}

impl TheoremId {
    pub const ALL: [TheoremId; 25] = [
        TheoremId::P4,
        TheoremId::P5,
        TheoremId::P6,
        TheoremId::L8,
        TheoremId::L9,
        TheoremId::L10,
        TheoremId::L11,
        TheoremId::L12,
        TheoremId::L15,
        TheoremId::L17,
        TheoremId::C18,
        TheoremId::C19,
        TheoremId::L20,
        TheoremId::L21,
        TheoremId::L22,
        TheoremId::T13,
        TheoremId::T16,
        TheoremId::T23,
        TheoremId::T24,
        TheoremId::T26,
        TheoremId::T28,
        TheoremId::P29,
        TheoremId::C30,
        TheoremId::C31,
        TheoremId::QI,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::P4 => "P4",
            TheoremId::P5 => "P5",
            TheoremId::P6 => "P6",
            TheoremId::L8 => "L8",
            TheoremId::L9 => "L9",
            TheoremId::L10 => "L10",
            TheoremId::L11 => "L11",
            TheoremId::L12 => "L12",
            TheoremId::L15 => "L15",
            TheoremId::L17 => "L17",
            TheoremId::C18 => "C18",
            TheoremId::C19 => "C19",
            TheoremId::L20 => "L20",
            TheoremId::L21 => "L21",
            TheoremId::L22 => "L22",
            TheoremId::T13 => "T13",
            TheoremId::T16 => "T16",
            TheoremId::T23 => "T23",
            TheoremId::T24 => "T24",
            TheoremId::T26 => "T26",
            TheoremId::T28 => "T28",
            TheoremId::P29 => "P29",
            TheoremId::C30 => "C30",
            TheoremId::C31 => "C31",
            TheoremId::QI => "QI",
        }
    }

    /// The checked statement in symbols.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::P4 => "f is a fuzzy right ideal iff f∘1 ⪯ f and f is order reversing",
            TheoremId::P5 => "f is a fuzzy left ideal iff 1∘f ⪯ f and f is order reversing",
            TheoremId::P6 => "f is a fuzzy bi-ideal iff f∘1∘f ⪯ f and f is order reversing",
            TheoremId::L8 => "M regular ⇒ f∧g ⪯ f∘g for fuzzy right ideals f and all g",
            TheoremId::L9 => "M regular ⇒ f∧g ⪯ f∘g for all f and fuzzy left ideals g",
            TheoremId::L10 => "f∘g ⪯ f∧g for fuzzy right ideals f and fuzzy left ideals g",
            TheoremId::L11 => "A is a right (left) ideal iff f_A is a fuzzy right (left) ideal",
            TheoremId::L12 => "M regular iff R(a)∩L(a) ⊆ (R(a)ΓL(a)] for all a",
            TheoremId::L15 => "M intra-regular iff R(a)∩L(a) ⊆ (L(a)ΓR(a)] for all a",
            TheoremId::L17 => "(f∘g)(a) ≠ 0 iff f(x) ≠ 0 and g(y) ≠ 0 for some (x,y) ∈ A_a",
            TheoremId::C18 => "(f∘1)(a) ≠ 0 iff f(x) ≠ 0 for some (x,y) ∈ A_a",
            TheoremId::C19 => "(1∘g)(a) ≠ 0 iff g(y) ≠ 0 for some (x,y) ∈ A_a",
            TheoremId::L20 => "b ≤ aγa for some γ iff (f_a∘f_a)(b) ≠ 0",
            TheoremId::L21 => "f(a) ≤ (f∘f)(aγa) for all a and γ",
            TheoremId::L22 => "a ≤ xμaγaρy ⇒ f(a) ≤ (1∘f²∘1)(a)",
            TheoremId::T13 => {
                "M regular iff f∧g ⪯ f∘g (equivalently f∧g = f∘g) for fuzzy right ideals f and fuzzy left ideals g"
            }
            TheoremId::T16 => {
                "M intra-regular iff f∧g ⪯ g∘f for fuzzy right ideals f and fuzzy left ideals g"
            }
            TheoremId::T23 => "M regular iff f ⪯ f∘1∘f for all f",
            TheoremId::T24 => "M intra-regular iff f ⪯ 1∘f²∘1 for all f",
            TheoremId::T26 => "M right regular iff f ⪯ f²∘1 for all f",
            TheoremId::T28 => "M left regular iff f ⪯ 1∘f² for all f",
            TheoremId::P29 => "fuzzy right (left) ideals satisfy f∘1 ⪯ f (1∘f ⪯ f)",
            TheoremId::C30 => "fuzzy right and left ideals are subidempotent: f² ⪯ f",
            TheoremId::C31 => "M regular ⇒ fuzzy right and left ideals are idempotent: f² = f",
            TheoremId::QI => {
                "fuzzy right and left ideals are fuzzy quasi-ideals, and fuzzy quasi-ideals are fuzzy bi-ideals"
            }
        }
    }

    pub fn requires_semigroup(self) -> bool {
        use TheoremId::*;
        matches!(
            self,
            P6 | L8 | L9 | L12 | L15 | L22 | T13 | T16 | T23 | T24 | T26 | T28 | C31 | QI
        )
    }

    /// Statements whose proofs use compatibility of the order.
    pub fn requires_compat(self) -> bool {
        use TheoremId::*;
        matches!(
            self,
            P6 | L12 | L15 | T13 | T16 | T23 | T24 | T26 | T28 | C31 | QI
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| SuiteError::UnknownId(s.to_string()))
    }
}

/// Deliberately weakened statements with a hypothesis dropped. They are
/// false in general and exist to show the harness can refute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NegativeControl {
    /// `f∧g ⪯ f∘g` without regularity.
    L8Unconditional,
    /// `f² = f` for fuzzy ideals without regularity.
    C31Unconditional,
    /// `f ⪯ f∘1∘f` without regularity.
    T23Unconditional,
}

impl NegativeControl {
    pub const ALL: [NegativeControl; 3] = [
        NegativeControl::L8Unconditional,
        NegativeControl::C31Unconditional,
        NegativeControl::T23Unconditional,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NegativeControl::L8Unconditional => "L8-unconditional",
            NegativeControl::C31Unconditional => "C31-unconditional",
            NegativeControl::T23Unconditional => "T23-unconditional",
        }
    }
}

/// A registry statement or a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    Theorem(TheoremId),
    Control(NegativeControl),
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Theorem(id) => id.as_str(),
            Claim::Control(c) => c.as_str(),
        }
    }

    fn requires_semigroup(self) -> bool {
        match self {
            Claim::Theorem(id) => id.requires_semigroup(),
            Claim::Control(_) => true,
        }
    }

    fn requires_compat(self) -> bool {
        match self {
            Claim::Theorem(id) => id.requires_compat(),
            Claim::Control(_) => false,
        }
    }

    /// The fuzzy universal statements this claim quantifies over the battery.
    pub fn fuzzy_parts(self) -> Vec<(Property, Roles)> {
        use Property::*;
        use Role::*;
        let single = |p, r| (p, Roles::Single(r));
        let pair = |p, f, g| (p, Roles::Pair(f, g));
        match self {
            Claim::Theorem(id) => match id {
                TheoremId::P4 => vec![single(RightDefVsComposition, Any)],
                TheoremId::P5 => vec![single(LeftDefVsComposition, Any)],
                TheoremId::P6 => vec![single(BiDefVsComposition, Any)],
                TheoremId::L8 => vec![pair(MeetBelowCompose, RightIdeal, Any)],
                TheoremId::L9 => vec![pair(MeetBelowCompose, Any, LeftIdeal)],
                TheoremId::L10 => vec![pair(ComposeBelowMeet, RightIdeal, LeftIdeal)],
                TheoremId::L17 => vec![pair(NonzeroCompose, Any, Any)],
                TheoremId::C18 => vec![single(NonzeroRightOne, Any)],
                TheoremId::C19 => vec![single(NonzeroLeftOne, Any)],
                TheoremId::L21 => vec![single(SquareOnDiagonal, Any)],
                TheoremId::L22 => vec![single(IntraFactorizationBound, Any)],
                TheoremId::T13 => vec![
                    pair(MeetBelowCompose, RightIdeal, LeftIdeal),
                    pair(MeetEqualsCompose, RightIdeal, LeftIdeal),
                ],
                TheoremId::T16 => vec![pair(MeetBelowReversedCompose, RightIdeal, LeftIdeal)],
                TheoremId::T23 => vec![single(RegularShape, Any)],
                TheoremId::T24 => vec![single(IntraRegularShape, Any)],
                TheoremId::T26 => vec![single(RightRegularShape, Any)],
                TheoremId::T28 => vec![single(LeftRegularShape, Any)],
                TheoremId::P29 => vec![single(AbsorbsOne, EitherIdeal)],
                TheoremId::C30 => vec![single(Subidempotent, EitherIdeal)],
                TheoremId::C31 => vec![single(Idempotent, EitherIdeal)],
                TheoremId::QI => vec![single(QuasiIdealChain, Any)],
                TheoremId::L11 | TheoremId::L12 | TheoremId::L15 | TheoremId::L20 => vec![],
            },
            Claim::Control(c) => match c {
                NegativeControl::L8Unconditional => vec![pair(MeetBelowCompose, RightIdeal, Any)],
                NegativeControl::C31Unconditional => vec![single(Idempotent, EitherIdeal)],
                NegativeControl::T23Unconditional => vec![single(RegularShape, Any)],
            },
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(c) = NegativeControl::ALL
            .iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
        {
            return Ok(Claim::Control(*c));
        }
        s.parse().map(Claim::Theorem)
    }
}

/// Which battery members a fuzzy variable ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Any,
    RightIdeal,
    LeftIdeal,
    /// Fuzzy right ideals and fuzzy left ideals.
    EitherIdeal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Roles {
    Single(Role),
    Pair(Role, Role),
}

/// Pointwise statements about one or two fuzzy subsets. A property is
/// violated by `(f, g)` when the statement fails for that input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    RightDefVsComposition,
    LeftDefVsComposition,
    BiDefVsComposition,
    QuasiIdealChain,
    MeetBelowCompose,
    ComposeBelowMeet,
    MeetEqualsCompose,
    MeetBelowReversedCompose,
    RegularShape,
    IntraRegularShape,
    RightRegularShape,
    LeftRegularShape,
    NonzeroCompose,
    NonzeroRightOne,
    NonzeroLeftOne,
    SquareOnDiagonal,
    IntraFactorizationBound,
    AbsorbsOne,
    Subidempotent,
    Idempotent,
}

impl Property {
    pub fn is_pair(self) -> bool {
        use Property::*;
        matches!(
            self,
            MeetBelowCompose
                | ComposeBelowMeet
                | MeetEqualsCompose
                | MeetBelowReversedCompose
                | NonzeroCompose
        )
    }
}

/// Where a property failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Violation {
    pub element: Option<usize>,
    pub gamma: Option<usize>,
}

fn at(element: usize) -> Option<Violation> {
    Some(Violation {
        element: Some(element),
        gamma: None,
    })
}

fn first_above(lhs: &[f64], rhs: &[f64]) -> Option<Violation> {
    lhs.iter().zip(rhs).position(|(a, b)| a > b).and_then(at)
}

/// Elements `a` with `a <= x μ a γ a ρ y` for some `x, y, μ, γ, ρ`.
pub fn intra_factorization_elements(s: &GammaStructure) -> Vec<bool> {
    (0..s.size())
        .map(|a| ideal::find_factorization(s, RegularityClass::IntraRegular, a).is_some())
        .collect()
}

/// Evaluates `property` on `(f, g)`; `g` is ignored by single-subset
/// properties. `intra` is [`intra_factorization_elements`] for `s`.
pub fn property_violation(
    s: &GammaStructure,
    property: Property,
    f: &[f64],
    g: &[f64],
    intra: &[bool],
) -> Option<Violation> {
    use Property::*;
    let n = s.size();
    let ones = vec![1.0; n];
    let compose = |a: &[f64], b: &[f64]| fuzzy::compose_values(s, a, b);
    match property {
        RightDefVsComposition => (fuzzy::right_ideal_values(s, f)
            != fuzzy::right_ideal_by_composition(s, f))
        .then(Violation::default),
        LeftDefVsComposition => (fuzzy::left_ideal_values(s, f)
            != fuzzy::left_ideal_by_composition(s, f))
        .then(Violation::default),
        BiDefVsComposition => (fuzzy::bi_ideal_values(s, f)
            != fuzzy::bi_ideal_by_composition(s, f))
        .then(Violation::default),
        QuasiIdealChain => {
            let quasi = fuzzy::quasi_ideal_values(s, f);
            let ideal = fuzzy::right_ideal_values(s, f) || fuzzy::left_ideal_values(s, f);
            ((ideal && !quasi) || (quasi && !fuzzy::bi_ideal_values(s, f))).then(Violation::default)
        }
        MeetBelowCompose => first_above(&fuzzy::meet_values(f, g), &compose(f, g)),
        ComposeBelowMeet => first_above(&compose(f, g), &fuzzy::meet_values(f, g)),
        MeetEqualsCompose => {
            let fg = compose(f, g);
            fuzzy::meet_values(f, g)
                .iter()
                .zip(&fg)
                .position(|(a, b)| a != b)
                .and_then(at)
        }
        MeetBelowReversedCompose => first_above(&fuzzy::meet_values(f, g), &compose(g, f)),
        RegularShape => first_above(f, &compose(&compose(f, &ones), f)),
        IntraRegularShape => {
            let sq = compose(f, f);
            first_above(f, &compose(&compose(&ones, &sq), &ones))
        }
        RightRegularShape => first_above(f, &compose(&compose(f, f), &ones)),
        LeftRegularShape => first_above(f, &compose(&ones, &compose(f, f))),
        NonzeroCompose => nonzero_mismatch(s, &compose(f, g), f, g),
        NonzeroRightOne => nonzero_mismatch(s, &compose(f, &ones), f, &ones),
        NonzeroLeftOne => nonzero_mismatch(s, &compose(&ones, f), &ones, f),
        SquareOnDiagonal => {
            let sq = compose(f, f);
            for a in 0..n {
                for gamma in 0..s.gamma_count() {
                    if f[a] > sq[s.mul(a, gamma, a)] {
                        return Some(Violation {
                            element: Some(a),
                            gamma: Some(gamma),
                        });
                    }
                }
            }
            None
        }
        IntraFactorizationBound => {
            let sq = compose(f, f);
            let bound = compose(&compose(&ones, &sq), &ones);
            (0..n).find(|&a| intra[a] && f[a] > bound[a]).and_then(at)
        }
        AbsorbsOne => {
            if fuzzy::right_ideal_values(s, f) {
                if let Some(v) = first_above(&compose(f, &ones), f) {
                    return Some(v);
                }
            }
            if fuzzy::left_ideal_values(s, f) {
                return first_above(&compose(&ones, f), f);
            }
            None
        }
        Subidempotent => first_above(&compose(f, f), f),
        Idempotent => {
            let sq = compose(f, f);
            sq.iter().zip(f).position(|(a, b)| a != b).and_then(at)
        }
    }
}

/// `(f∘g)(a) ≠ 0` against a direct scan for `(x, y)` with `a <= x γ y`,
/// `f(x) ≠ 0` and `g(y) ≠ 0`.
fn nonzero_mismatch(s: &GammaStructure, fg: &[f64], f: &[f64], g: &[f64]) -> Option<Violation> {
    let n = s.size();
    (0..n)
        .find(|&a| {
            let direct = (0..n).any(|x| {
                f[x] != 0.0
                    && (0..n).any(|y| {
                        g[y] != 0.0 && (0..s.gamma_count()).any(|k| s.leq(a, s.mul(x, k, y)))
                    })
            });
            (fg[a] != 0.0) != direct
        })
        .and_then(at)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    HoldsVacuously,
    Refuted,
    Skipped,
}

/// Evidence for a refutation, or for the failing side of an equivalence.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// Fuzzy subsets violating `property` at `violation`.
    Fuzzy {
        property: Property,
        f: Vec<f64>,
        g: Option<Vec<f64>>,
        violation: Violation,
    },
    /// The class fails at `element`, yet no fuzzy counterexample exists
    /// among the converse-proof witnesses or the battery.
    HypothesisGap {
        class: RegularityClass,
        element: usize,
    },
    /// Definitional and ideal-criterion deciders disagree.
    DeciderMismatch {
        class: RegularityClass,
        definitional: bool,
        ideal_criterion: bool,
    },
    /// Crisp and fuzzy ideal status of `subset` differ.
    SubsetMismatch { subset: Subset, left: bool },
    /// `b <= a γ a` for some γ disagrees with `(f_a ∘ f_a)(b) ≠ 0`.
    ElementPair { a: usize, b: usize },
}

impl Witness {
    /// Re-evaluates the witness from scratch on `s`; true when it still
    /// demonstrates the violation it records.
    pub fn replay(&self, s: &GammaStructure) -> bool {
        match self {
            Witness::Fuzzy {
                property,
                f,
                g,
                violation,
            } => {
                let intra = intra_factorization_elements(s);
                let g = g.as_deref().unwrap_or(f);
                property_violation(s, *property, f, g, &intra) == Some(*violation)
            }
            Witness::HypothesisGap { class, element } => {
                !ideal::holds_definitionally_at(s, *class, *element)
                    && converse_witnesses(s, *class).iter().all(|(p, f, g)| {
                        let intra = intra_factorization_elements(s);
                        property_violation(s, *p, f, g.as_deref().unwrap_or(f), &intra).is_none()
                    })
            }
            Witness::DeciderMismatch {
                class,
                definitional,
                ideal_criterion,
            } => {
                ideal::decide_def(s, *class) == *definitional
                    && ideal::decide_ideal(s, *class) == Some(*ideal_criterion)
                    && definitional != ideal_criterion
            }
            Witness::SubsetMismatch { subset, left } => {
                let chi = fuzzy::FuzzySubset::characteristic(s, subset);
                if *left {
                    ideal::is_left_ideal(s, subset) != fuzzy::left_ideal_values(s, chi.values())
                } else {
                    ideal::is_right_ideal(s, subset) != fuzzy::right_ideal_values(s, chi.values())
                }
            }
            Witness::ElementPair { a, b } => l20_mismatch(s, *a, *b),
        }
    }
}

fn l20_mismatch(s: &GammaStructure, a: usize, b: usize) -> bool {
    let fa = fuzzy::FuzzySubset::point_characteristic(s, a);
    let crisp = (0..s.gamma_count()).any(|g| s.leq(b, s.mul(a, g, a)));
    let fuzzy_side = fuzzy::compose_at(s, fa.values(), fa.values(), b) != 0.0;
    crisp != fuzzy_side
}

/// The characteristic functions used by the converse proofs, tagged with the
/// property they are expected to violate when the class fails.
fn converse_witnesses(
    s: &GammaStructure,
    class: RegularityClass,
) -> Vec<(Property, Vec<f64>, Option<Vec<f64>>)> {
    let n = s.size();
    let chi = |set: &Subset| fuzzy::FuzzySubset::characteristic(s, set).into_values();
    match class {
        RegularityClass::Regular | RegularityClass::IntraRegular => {
            let property = if class == RegularityClass::Regular {
                Property::MeetBelowCompose
            } else {
                Property::MeetBelowReversedCompose
            };
            let mut out = Vec::new();
            for a in 0..n {
                let r = chi(&ideal::principal_right_ideal(s, a));
                let l = chi(&ideal::principal_left_ideal(s, a));
                out.push((property, r, Some(l)));
            }
            // shape criteria use f_a
            let shape = if class == RegularityClass::Regular {
                Property::RegularShape
            } else {
                Property::IntraRegularShape
            };
            for a in 0..n {
                out.push((shape, chi(&s.singleton(a)), None));
            }
            out
        }
        RegularityClass::RightRegular => (0..n)
            .map(|a| (Property::RightRegularShape, chi(&s.singleton(a)), None))
            .collect(),
        RegularityClass::LeftRegular => (0..n)
            .map(|a| (Property::LeftRegularShape, chi(&s.singleton(a)), None))
            .collect(),
    }
}

/// Summary of the battery a verdict was computed with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatteryReport {
    pub levels: usize,
    pub scope: BatteryScope,
    pub members: usize,
    pub right_ideals: usize,
    pub left_ideals: usize,
    /// Exhaustive with at least `2n + 2` levels.
    pub complete: bool,
    /// Some pair statement was evaluated on a thinned pair space.
    pub pairs_thinned: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremVerdict {
    pub claim: Claim,
    pub digest: String,
    pub outcome: Outcome,
    /// Present exactly when the outcome is `Refuted`.
    pub witness: Option<Witness>,
    /// For equivalences on structures outside the class: the fuzzy
    /// counterexample that the converse direction requires.
    pub evidence: Option<Witness>,
    pub note: String,
    pub battery: BatteryReport,
}

impl TheoremVerdict {
    pub fn is_refuted(&self) -> bool {
        self.outcome == Outcome::Refuted
    }
}

/// Battery members for one structure with their ideal roles.
pub struct Battery {
    config: GridBattery,
    n: usize,
    values: Vec<f64>,
    right: Vec<usize>,
    left: Vec<usize>,
    either: Vec<usize>,
    seed: u64,
}

impl Battery {
    /// Grid members, then characteristic functions of all subsets and, for
    /// sampled batteries on semigroups, the fuzzy right and left ideals
    /// generated by each sampled member. Duplicates are dropped.
    pub fn build(s: &GammaStructure, config: &GridBattery) -> Result<Self, BatteryError> {
        let n = s.size();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut values = Vec::new();
        let mut push = |v: &[f64], values: &mut Vec<f64>| {
            if seen.insert(v.iter().map(|x| x.to_bits()).collect()) {
                values.extend_from_slice(v);
            }
        };
        let grid: Vec<Vec<f64>> = battery::enumerate_grid_battery(s, config)?
            .map(|f| f.into_values())
            .collect();
        for v in &grid {
            push(v, &mut values);
        }
        if n <= MAX_SUBSET_CARRIER {
            for mask in 0..(1u64 << n) {
                let chi = fuzzy::FuzzySubset::characteristic(s, &Subset::from_mask(n, mask));
                push(chi.values(), &mut values);
            }
        }
        let seed = match config.scope {
            BatteryScope::Exhaustive => 0,
            BatteryScope::Sampled { seed, .. } => seed,
        };
        if !config.is_exhaustive() && s.is_associative() {
            let rights: Vec<Subset> = (0..n).map(|t| ideal::principal_right_ideal(s, t)).collect();
            let lefts: Vec<Subset> = (0..n).map(|t| ideal::principal_left_ideal(s, t)).collect();
            for v in &grid {
                push(&fuzzy::generated_values(&rights, v), &mut values);
                push(&fuzzy::generated_values(&lefts, v), &mut values);
            }
        }
        let count = values.len() / n;
        let flags: Vec<(bool, bool)> = (0..count)
            .into_par_iter()
            .map(|i| {
                let f = &values[i * n..(i + 1) * n];
                (
                    fuzzy::right_ideal_values(s, f),
                    fuzzy::left_ideal_values(s, f),
                )
            })
            .collect();
        let right = (0..count).filter(|&i| flags[i].0).collect();
        let left = (0..count).filter(|&i| flags[i].1).collect();
        let either = (0..count).filter(|&i| flags[i].0 || flags[i].1).collect();
        Ok(Battery {
            config: *config,
            n,
            values,
            right,
            left,
            either,
            seed,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len() / self.n
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn member(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    pub fn config(&self) -> &GridBattery {
        &self.config
    }

    fn role_members(&self, role: Role) -> Vec<usize> {
        match role {
            Role::Any => (0..self.len()).collect(),
            Role::RightIdeal => self.right.clone(),
            Role::LeftIdeal => self.left.clone(),
            Role::EitherIdeal => self.either.clone(),
        }
    }

    fn report(&self, pairs_thinned: bool) -> BatteryReport {
        BatteryReport {
            levels: self.config.levels,
            scope: self.config.scope,
            members: self.len(),
            right_ideals: self.right.len(),
            left_ideals: self.left.len(),
            complete: self.config.is_complete_for(self.n),
            pairs_thinned,
        }
    }

    /// Keeps crisp members, then a seeded selection, until the pair space
    /// fits under [`PAIR_CAP`].
    fn thin(&self, list: Vec<usize>, keep: usize) -> Vec<usize> {
        if list.len() <= keep {
            return list;
        }
        let (mut crisp, rest): (Vec<usize>, Vec<usize>) = list
            .into_iter()
            .partition(|&i| self.member(i).iter().all(|&v| v == 0.0 || v == 1.0));
        crisp.truncate(keep);
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x5eed);
        let mut rest = rest;
        while crisp.len() < keep && !rest.is_empty() {
            let j = rng.random_range(0..rest.len());
            crisp.push(rest.swap_remove(j));
        }
        crisp.sort_unstable();
        crisp
    }

    fn pair_lists(&self, f: Role, g: Role) -> (Vec<usize>, Vec<usize>, bool) {
        let mut fs = self.role_members(f);
        let mut gs = self.role_members(g);
        let mut thinned = false;
        while fs.len().saturating_mul(gs.len()) > PAIR_CAP {
            thinned = true;
            if fs.len() >= gs.len() {
                let keep = (PAIR_CAP / gs.len().max(1)).max(1);
                fs = self.thin(fs, keep);
            } else {
                let keep = (PAIR_CAP / fs.len().max(1)).max(1);
                gs = self.thin(gs, keep);
            }
        }
        (fs, gs, thinned)
    }

    /// First violation of `property` in battery order, and whether the pair
    /// space was thinned.
    pub fn find_violation(
        &self,
        s: &GammaStructure,
        property: Property,
        roles: Roles,
        intra: &[bool],
    ) -> (Option<Witness>, bool) {
        match roles {
            Roles::Single(role) => {
                let members = self.role_members(role);
                let hit = members.par_iter().find_map_first(|&i| {
                    let f = self.member(i);
                    property_violation(s, property, f, f, intra).map(|v| (i, v))
                });
                let witness = hit.map(|(i, v)| Witness::Fuzzy {
                    property,
                    f: self.member(i).to_vec(),
                    g: None,
                    violation: v,
                });
                (witness, false)
            }
            Roles::Pair(fr, gr) => {
                let (fs, gs, thinned) = self.pair_lists(fr, gr);
                let width = gs.len();
                let hit = (0..fs.len() * width).into_par_iter().find_map_first(|k| {
                    let (i, j) = (fs[k / width], gs[k % width]);
                    property_violation(s, property, self.member(i), self.member(j), intra)
                        .map(|v| (i, j, v))
                });
                let witness = hit.map(|(i, j, v)| Witness::Fuzzy {
                    property,
                    f: self.member(i).to_vec(),
                    g: Some(self.member(j).to_vec()),
                    violation: v,
                });
                (witness, thinned)
            }
        }
    }
}

/// Checks claims against one structure with a prebuilt battery.
pub struct Suite<'s> {
    s: &'s GammaStructure,
    battery: Battery,
    intra: Vec<bool>,
    digest: String,
}

impl<'s> Suite<'s> {
    pub fn new(s: &'s GammaStructure, config: &GridBattery) -> Result<Self, SuiteError> {
        Ok(Suite {
            s,
            battery: Battery::build(s, config)?,
            intra: intra_factorization_elements(s),
            digest: s.digest(),
        })
    }

    pub fn battery(&self) -> &Battery {
        &self.battery
    }

    fn verdict(
        &self,
        claim: Claim,
        outcome: Outcome,
        witness: Option<Witness>,
        evidence: Option<Witness>,
        note: impl Into<String>,
        thinned: bool,
    ) -> TheoremVerdict {
        TheoremVerdict {
            claim,
            digest: self.digest.clone(),
            outcome,
            witness,
            evidence,
            note: note.into(),
            battery: self.battery.report(thinned),
        }
    }

    /// Searches every fuzzy part of `parts` in order.
    fn search(&self, parts: &[(Property, Roles)]) -> (Option<Witness>, bool) {
        let mut thinned = false;
        for &(p, roles) in parts {
            let (w, t) = self.battery.find_violation(self.s, p, roles, &self.intra);
            thinned |= t;
            if w.is_some() {
                return (w, thinned);
            }
        }
        (None, thinned)
    }

    pub fn check(&self, claim: Claim) -> Result<TheoremVerdict, SuiteError> {
        let s = self.s;
        if claim.requires_semigroup() && !s.is_associative() {
            return Err(SuiteError::RequiresSemigroup(claim));
        }
        if claim.requires_compat() && !s.is_compatible() {
            return Ok(self.verdict(
                claim,
                Outcome::Skipped,
                None,
                None,
                "order is not compatible with the operations",
                false,
            ));
        }
        let parts = claim.fuzzy_parts();
        let id = match claim {
            Claim::Control(_) => return Ok(self.universal(claim, &parts)),
            Claim::Theorem(id) => id,
        };
        Ok(match id {
            TheoremId::P4
            | TheoremId::P5
            | TheoremId::P6
            | TheoremId::L10
            | TheoremId::L17
            | TheoremId::C18
            | TheoremId::C19
            | TheoremId::L21
            | TheoremId::P29
            | TheoremId::C30
            | TheoremId::QI => self.universal(claim, &parts),
            TheoremId::L8 | TheoremId::L9 | TheoremId::C31 => {
                if ideal::decide_def(s, RegularityClass::Regular) {
                    self.universal(claim, &parts)
                } else {
                    self.verdict(
                        claim,
                        Outcome::HoldsVacuously,
                        None,
                        None,
                        "structure is not regular",
                        false,
                    )
                }
            }
            TheoremId::L22 => {
                if self.intra.iter().any(|&b| b) {
                    self.universal(claim, &parts)
                } else {
                    self.verdict(
                        claim,
                        Outcome::HoldsVacuously,
                        None,
                        None,
                        "no element admits a factorization a <= xμaγaρy",
                        false,
                    )
                }
            }
            TheoremId::T13 => self.equivalence(claim, RegularityClass::Regular, &parts),
            TheoremId::T16 => self.equivalence(claim, RegularityClass::IntraRegular, &parts),
            TheoremId::T23 => self.equivalence(claim, RegularityClass::Regular, &parts),
            TheoremId::T24 => self.equivalence(claim, RegularityClass::IntraRegular, &parts),
            TheoremId::T26 => self.equivalence(claim, RegularityClass::RightRegular, &parts),
            TheoremId::T28 => self.equivalence(claim, RegularityClass::LeftRegular, &parts),
            TheoremId::L11 => self.check_l11(claim),
            TheoremId::L12 => self.decider_agreement(claim, RegularityClass::Regular),
            TheoremId::L15 => self.decider_agreement(claim, RegularityClass::IntraRegular),
            TheoremId::L20 => self.check_l20(claim),
        })
    }

    fn universal(&self, claim: Claim, parts: &[(Property, Roles)]) -> TheoremVerdict {
        let (w, thinned) = self.search(parts);
        match w {
            Some(w) => self.verdict(claim, Outcome::Refuted, Some(w), None, "", thinned),
            None => self.verdict(claim, Outcome::Holds, None, None, "", thinned),
        }
    }

    fn equivalence(
        &self,
        claim: Claim,
        class: RegularityClass,
        parts: &[(Property, Roles)],
    ) -> TheoremVerdict {
        let s = self.s;
        if ideal::decide_def(s, class) {
            let (w, thinned) = self.search(parts);
            return match w {
                Some(w) => self.verdict(claim, Outcome::Refuted, Some(w), None, "", thinned),
                None => self.verdict(
                    claim,
                    Outcome::Holds,
                    None,
                    None,
                    format!("structure is {class}; forward direction exercised"),
                    thinned,
                ),
            };
        }
        // Converse: the universal side must fail somewhere.
        let (main, roles) = parts[0];
        let proof = converse_witnesses(s, class)
            .into_iter()
            .filter(|(p, _, _)| *p == main)
            .find_map(|(p, f, g)| {
                let gv = g.as_deref().unwrap_or(&f);
                property_violation(s, p, &f, gv, &self.intra).map(|v| Witness::Fuzzy {
                    property: p,
                    f: f.clone(),
                    g: g.clone(),
                    violation: v,
                })
            });
        let note = format!("structure is not {class}; converse direction exercised");
        if let Some(e) = proof {
            return self.verdict(claim, Outcome::Holds, None, Some(e), note, false);
        }
        let (found, thinned) = self.battery.find_violation(s, main, roles, &self.intra);
        match found {
            Some(e) => self.verdict(claim, Outcome::Holds, None, Some(e), note, thinned),
            None => {
                let element = (0..s.size())
                    .find(|&a| !ideal::holds_definitionally_at(s, class, a))
                    .expect("class fails at some element");
                self.verdict(
                    claim,
                    Outcome::Refuted,
                    Some(Witness::HypothesisGap { class, element }),
                    None,
                    "no fuzzy counterexample for a structure outside the class",
                    thinned,
                )
            }
        }
    }

    fn decider_agreement(&self, claim: Claim, class: RegularityClass) -> TheoremVerdict {
        let definitional = ideal::decide_def(self.s, class);
        let ideal_criterion = ideal::decide_ideal(self.s, class).expect("two-sided class");
        if definitional == ideal_criterion {
            self.verdict(
                claim,
                Outcome::Holds,
                None,
                None,
                format!("both deciders report {class} = {definitional}"),
                false,
            )
        } else {
            self.verdict(
                claim,
                Outcome::Refuted,
                Some(Witness::DeciderMismatch {
                    class,
                    definitional,
                    ideal_criterion,
                }),
                None,
                "",
                false,
            )
        }
    }

    fn check_l11(&self, claim: Claim) -> TheoremVerdict {
        let s = self.s;
        let n = s.size();
        if n > MAX_SUBSET_CARRIER {
            return self.verdict(
                claim,
                Outcome::Skipped,
                None,
                None,
                format!("subset scan limited to {MAX_SUBSET_CARRIER} elements"),
                false,
            );
        }
        for mask in 0..(1u64 << n) {
            let subset = Subset::from_mask(n, mask);
            let chi = fuzzy::FuzzySubset::characteristic(s, &subset);
            for left in [false, true] {
                let (crisp, fz) = if left {
                    (
                        ideal::is_left_ideal(s, &subset),
                        fuzzy::left_ideal_values(s, chi.values()),
                    )
                } else {
                    (
                        ideal::is_right_ideal(s, &subset),
                        fuzzy::right_ideal_values(s, chi.values()),
                    )
                };
                if crisp != fz {
                    return self.verdict(
                        claim,
                        Outcome::Refuted,
                        Some(Witness::SubsetMismatch { subset, left }),
                        None,
                        "",
                        false,
                    );
                }
            }
        }
        self.verdict(
            claim,
            Outcome::Holds,
            None,
            None,
            "all subsets scanned",
            false,
        )
    }

    fn check_l20(&self, claim: Claim) -> TheoremVerdict {
        let n = self.s.size();
        for a in 0..n {
            for b in 0..n {
                if l20_mismatch(self.s, a, b) {
                    return self.verdict(
                        claim,
                        Outcome::Refuted,
                        Some(Witness::ElementPair { a, b }),
                        None,
                        "",
                        false,
                    );
                }
            }
        }
        self.verdict(
            claim,
            Outcome::Holds,
            None,
            None,
            "all element pairs scanned",
            false,
        )
    }

    /// Every registry statement, in registry order.
    pub fn check_all(&self) -> Result<Vec<TheoremVerdict>, SuiteError> {
        TheoremId::ALL
            .iter()
            .map(|&id| self.check(Claim::Theorem(id)))
            .collect()
    }
}

/// Checks one claim on `s` with a freshly built battery.
pub fn check(
    s: &GammaStructure,
    claim: Claim,
    battery: &GridBattery,
) -> Result<TheoremVerdict, SuiteError> {
    Suite::new(s, battery)?.check(claim)
}

/// Checks every registry statement on `s`.
pub fn check_all(
    s: &GammaStructure,
    battery: &GridBattery,
) -> Result<Vec<TheoremVerdict>, SuiteError> {
    if !s.is_associative() {
        return Err(SuiteError::RequiresSemigroup(Claim::Theorem(TheoremId::P6)));
    }
    Suite::new(s, battery)?.check_all()
}

/// How to pick a battery for each structure of a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BatteryPlan {
    /// Grid levels; `2n + 2` when unset.
    pub levels: Option<usize>,
    pub seed: u64,
}

impl BatteryPlan {
    pub fn with_levels(levels: usize) -> Self {
        BatteryPlan {
            levels: Some(levels),
            seed: 0,
        }
    }

    pub fn for_structure(&self, s: &GammaStructure) -> GridBattery {
        let n = s.size();
        let levels = self
            .levels
            .unwrap_or_else(|| GridBattery::complete_levels(n));
        GridBattery::auto(n, levels, self.seed)
    }
}

/// Bounds of a falsification search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpace {
    pub max_n: usize,
    pub max_m: usize,
    /// Structures examined per `(n, m)` at most.
    pub limit: Option<usize>,
}

/// Streams enumerated structures of increasing `(n, m)` through `check`
/// and returns the first refutation.
pub fn find_counterexample(
    claim: Claim,
    space: SearchSpace,
    plan: BatteryPlan,
) -> Result<Option<(GammaStructure, TheoremVerdict)>, SuiteError> {
    for n in 1..=space.max_n {
        for m in 1..=space.max_m {
            let spec = SearchSpec {
                n,
                m,
                limit: space.limit,
                up_to_iso: true,
                require_compat: true,
                allow_large: true,
            };
            let structures = enumerate::enumerate_structures(&spec)?;
            for s in structures {
                let verdict = check(&s, claim, &plan.for_structure(&s))?;
                if verdict.is_refuted() {
                    return Ok(Some((s, verdict)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn registry_is_complete_and_parses() {
        assert_eq!(TheoremId::ALL.len(), 25);
        let names: HashSet<&str> = TheoremId::ALL.iter().map(|id| id.as_str()).collect();
        assert_eq!(names.len(), 25);
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
            assert!(!id.statement().is_empty());
        }
        assert_eq!(
            "l8-unconditional".parse::<Claim>().unwrap(),
            Claim::Control(NegativeControl::L8Unconditional)
        );
        assert!(matches!(
            "T99".parse::<Claim>(),
            Err(SuiteError::UnknownId(_))
        ));
    }

    #[test]
    fn l10_holds_on_left_zero() {
        let s = fixtures::lz2();
        let v = check(
            &s,
            Claim::Theorem(TheoremId::L10),
            &GridBattery::exhaustive(6),
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        // the fuzzy left ideals of LZ2 are exactly the constants
        let b = Battery::build(&s, &GridBattery::exhaustive(6)).unwrap();
        for &i in &b.left {
            let f = b.member(i);
            assert_eq!(f[0], f[1]);
        }
        assert_eq!(b.left.len(), 6);
    }

    #[test]
    fn t13_converse_on_constant_law() {
        let s = fixtures::nz2();
        let v = check(
            &s,
            Claim::Theorem(TheoremId::T13),
            &GridBattery::exhaustive(6),
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        match v.evidence.unwrap() {
            Witness::Fuzzy {
                f, g, violation, ..
            } => {
                assert_eq!(f, vec![1.0, 1.0]);
                assert_eq!(g, Some(vec![1.0, 1.0]));
                assert_eq!(violation.element, Some(1));
            }
            other => panic!("unexpected evidence {other:?}"),
        }
    }

    #[test]
    fn t23_on_trivial() {
        let s = fixtures::t1();
        let v = check(
            &s,
            Claim::Theorem(TheoremId::T23),
            &GridBattery::exhaustive(4),
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        assert_eq!(v.battery.members, 4);
    }

    #[test]
    fn check_all_fixtures() {
        for (name, s) in fixtures::all() {
            let battery = BatteryPlan::default().for_structure(&s);
            let verdicts = check_all(&s, &battery).unwrap();
            assert_eq!(verdicts.len(), 25);
            for v in &verdicts {
                assert!(
                    !v.is_refuted(),
                    "{name}: {} refuted: {:?}",
                    v.claim,
                    v.witness
                );
            }
        }
        let nz2 = fixtures::nz2();
        let v = check(
            &nz2,
            Claim::Theorem(TheoremId::L8),
            &GridBattery::exhaustive(6),
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::HoldsVacuously);
    }

    #[test]
    fn negative_controls_refute_on_constant_law() {
        let s = fixtures::nz2();
        for c in NegativeControl::ALL {
            let v = check(&s, Claim::Control(c), &GridBattery::exhaustive(6)).unwrap();
            assert!(v.is_refuted(), "{c:?}");
            assert!(v.witness.as_ref().unwrap().replay(&s));
        }
    }

    #[test]
    fn gap_witness_replays_only_when_gap_exists() {
        let s = fixtures::nz2();
        // the converse witness f_a does violate, so no gap
        let w = Witness::HypothesisGap {
            class: RegularityClass::Regular,
            element: 1,
        };
        assert!(!w.replay(&s));
    }

    #[test]
    fn requires_semigroup() {
        let s =
            GammaStructure::from_indexed(2, 1, vec![1, 0, 1, 1], &[], Default::default()).unwrap();
        let err = check(
            &s,
            Claim::Theorem(TheoremId::T23),
            &GridBattery::exhaustive(3),
        );
        assert!(matches!(err, Err(SuiteError::RequiresSemigroup(_))));
        // groupoid statements still run
        let v = check(
            &s,
            Claim::Theorem(TheoremId::P4),
            &GridBattery::exhaustive(3),
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
    }
}
