//! Fuzzy subsets of a structure and the sup-min calculus on them.
//!
//! Membership degrees are `f64` values in `[0, 1]`. The calculus only ever
//! compares, takes minima and takes maxima, so no rounding enters any result:
//! every value of `f ∘ g` is one of the input values or `0`.
//!
//! Composition is `(f ∘ g)(a) = max { min(f(y), g(z)) | (y, z) ∈ A_a }`,
//! and `0` when `A_a` is empty. Chains such as `f ∘ 1 ∘ f` are evaluated
//! left to right.

use std::fmt;

use thiserror::Error;

use crate::ideal;
use crate::structure::{GammaStructure, Subset};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FuzzyError {
    #[error("membership value {value} at `{element}` is outside [0, 1]")]
    OutOfRange { element: String, value: f64 },
    #[error("expected {expected} membership values, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("fuzzy subsets belong to different structures")]
    MismatchedStructure,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("missing membership value for element `{0}`")]
    MissingElement(String),
    #[error("operation requires an associative structure")]
    NotAssociative,
}

/// A map `M → [0, 1]` bound to one structure.
#[derive(Clone, PartialEq)]
pub struct FuzzySubset {
    fingerprint: u64,
    values: Vec<f64>,
}

impl FuzzySubset {
    pub fn new(s: &GammaStructure, values: Vec<f64>) -> Result<Self, FuzzyError> {
        if values.len() != s.size() {
            return Err(FuzzyError::WrongLength {
                expected: s.size(),
                found: values.len(),
            });
        }
        for (i, &v) in values.iter().enumerate() {
            // NaN fails both comparisons
            if !(0.0..=1.0).contains(&v) {
                return Err(FuzzyError::OutOfRange {
                    element: s.element_label(i).to_string(),
                    value: v,
                });
            }
        }
        Ok(FuzzySubset {
            fingerprint: s.fingerprint(),
            values,
        })
    }

    /// Builds from `(label, value)` pairs; every element must appear once.
    pub fn from_labels<'a>(
        s: &GammaStructure,
        entries: impl IntoIterator<Item = (&'a str, f64)>,
    ) -> Result<Self, FuzzyError> {
        let mut values = vec![None; s.size()];
        for (label, v) in entries {
            let i = s
                .element_index(label)
                .ok_or_else(|| FuzzyError::UnknownElement(label.to_string()))?;
            values[i] = Some(v);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| FuzzyError::MissingElement(s.element_label(i).into())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(s, values)
    }

    pub(crate) fn from_raw(s: &GammaStructure, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), s.size());
        FuzzySubset {
            fingerprint: s.fingerprint(),
            values,
        }
    }

    pub fn zero(s: &GammaStructure) -> Self {
        Self::from_raw(s, vec![0.0; s.size()])
    }

    /// The fuzzy subset `1`, greatest in `⪯`.
    pub fn constant_one(s: &GammaStructure) -> Self {
        Self::from_raw(s, vec![1.0; s.size()])
    }

    /// `f_A`: 1 on `A`, 0 elsewhere.
    pub fn characteristic(s: &GammaStructure, a: &Subset) -> Self {
        Self::from_raw(
            s,
            (0..s.size())
                .map(|x| if a.contains(x) { 1.0 } else { 0.0 })
                .collect(),
        )
    }

    /// `f_a`.
    pub fn point_characteristic(s: &GammaStructure, a: usize) -> Self {
        Self::characteristic(s, &s.singleton(a))
    }

    #[inline]
    pub fn value(&self, a: usize) -> f64 {
        self.values[a]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn is_bound_to(&self, s: &GammaStructure) -> bool {
        self.fingerprint == s.fingerprint() && self.values.len() == s.size()
    }

    fn same_parent(&self, other: &FuzzySubset) -> Result<(), FuzzyError> {
        if self.fingerprint != other.fingerprint || self.values.len() != other.values.len() {
            Err(FuzzyError::MismatchedStructure)
        } else {
            Ok(())
        }
    }

    /// `f ∧ g`, pointwise minimum.
    pub fn meet(&self, other: &FuzzySubset) -> Result<FuzzySubset, FuzzyError> {
        self.same_parent(other)?;
        Ok(FuzzySubset {
            fingerprint: self.fingerprint,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.min(*b))
                .collect(),
        })
    }

    /// `f ⪯ g`.
    pub fn leq(&self, other: &FuzzySubset) -> Result<bool, FuzzyError> {
        self.same_parent(other)?;
        Ok(leq_values(&self.values, &other.values))
    }

    /// Elements with non-zero membership.
    pub fn support(&self) -> Subset {
        Subset::from_indices(
            self.values.len(),
            self.values
                .iter()
                .enumerate()
                .filter_map(|(i, &v)| (v != 0.0).then_some(i)),
        )
    }
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.values).finish()
    }
}

fn check_bound(s: &GammaStructure, f: &FuzzySubset) -> Result<(), FuzzyError> {
    if f.is_bound_to(s) {
        Ok(())
    } else {
        Err(FuzzyError::MismatchedStructure)
    }
}

/// `f ∘ g`.
pub fn compose(
    s: &GammaStructure,
    f: &FuzzySubset,
    g: &FuzzySubset,
) -> Result<FuzzySubset, FuzzyError> {
    check_bound(s, f)?;
    check_bound(s, g)?;
    Ok(FuzzySubset::from_raw(
        s,
        compose_values(s, &f.values, &g.values),
    ))
}

/// Left-to-right composition of two or more fuzzy subsets.
pub fn compose_chain(
    s: &GammaStructure,
    factors: &[&FuzzySubset],
) -> Result<FuzzySubset, FuzzyError> {
    for f in factors {
        check_bound(s, f)?;
    }
    let mut iter = factors.iter();
    let mut acc = match iter.next() {
        Some(f) => f.values.clone(),
        None => return Ok(FuzzySubset::constant_one(s)),
    };
    for f in iter {
        acc = compose_values(s, &acc, &f.values);
    }
    Ok(FuzzySubset::from_raw(s, acc))
}

pub fn meet(f: &FuzzySubset, g: &FuzzySubset) -> Result<FuzzySubset, FuzzyError> {
    f.meet(g)
}

pub fn leq(f: &FuzzySubset, g: &FuzzySubset) -> Result<bool, FuzzyError> {
    f.leq(g)
}

pub fn constant_one(s: &GammaStructure) -> FuzzySubset {
    FuzzySubset::constant_one(s)
}

pub fn characteristic(s: &GammaStructure, a: &Subset) -> FuzzySubset {
    FuzzySubset::characteristic(s, a)
}

pub fn point_characteristic(s: &GammaStructure, a: usize) -> FuzzySubset {
    FuzzySubset::point_characteristic(s, a)
}

/// `x <= y` implies `f(x) >= f(y)`.
pub fn is_order_reversing(s: &GammaStructure, f: &FuzzySubset) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    Ok(order_reversing_values(s, &f.values))
}

/// `f(x γ y) >= f(x)` for all `x, γ, y`, and order reversing.
pub fn is_fuzzy_right_ideal(s: &GammaStructure, f: &FuzzySubset) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    Ok(right_ideal_values(s, &f.values))
}

/// `f(x γ y) >= f(y)` for all `x, γ, y`, and order reversing.
pub fn is_fuzzy_left_ideal(s: &GammaStructure, f: &FuzzySubset) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    Ok(left_ideal_values(s, &f.values))
}

/// `f(x γ y μ z) >= min(f(x), f(z))` for all `x, y, z, γ, μ`, and order
/// reversing. Both Γ-indices range over all of Γ independently.
pub fn is_fuzzy_bi_ideal(s: &GammaStructure, f: &FuzzySubset) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    if !s.is_associative() {
        return Err(FuzzyError::NotAssociative);
    }
    Ok(bi_ideal_values(s, &f.values))
}

/// `(f ∘ 1) ∧ (1 ∘ f) ⪯ f`, and order reversing.
pub fn is_fuzzy_quasi_ideal(s: &GammaStructure, f: &FuzzySubset) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    Ok(quasi_ideal_values(s, &f.values))
}

/// `f ∘ 1 ⪯ f`, and order reversing.
pub fn is_fuzzy_right_ideal_via_composition(
    s: &GammaStructure,
    f: &FuzzySubset,
) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    Ok(right_ideal_by_composition(s, &f.values))
}

/// `1 ∘ f ⪯ f`, and order reversing.
pub fn is_fuzzy_left_ideal_via_composition(
    s: &GammaStructure,
    f: &FuzzySubset,
) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    Ok(left_ideal_by_composition(s, &f.values))
}

/// `f ∘ 1 ∘ f ⪯ f`, and order reversing.
pub fn is_fuzzy_bi_ideal_via_composition(
    s: &GammaStructure,
    f: &FuzzySubset,
) -> Result<bool, FuzzyError> {
    check_bound(s, f)?;
    if !s.is_associative() {
        return Err(FuzzyError::NotAssociative);
    }
    Ok(bi_ideal_by_composition(s, &f.values))
}

/// Least fuzzy right ideal above `f`: `r(x) = max { f(t) | x ∈ R(t) }`.
pub fn generated_fuzzy_right_ideal(
    s: &GammaStructure,
    f: &FuzzySubset,
) -> Result<FuzzySubset, FuzzyError> {
    check_bound(s, f)?;
    if !s.is_associative() {
        return Err(FuzzyError::NotAssociative);
    }
    let principals: Vec<Subset> = (0..s.size())
        .map(|t| ideal::principal_right_ideal(s, t))
        .collect();
    Ok(FuzzySubset::from_raw(
        s,
        generated_values(&principals, &f.values),
    ))
}

/// Least fuzzy left ideal above `f`: `l(x) = max { f(t) | x ∈ L(t) }`.
pub fn generated_fuzzy_left_ideal(
    s: &GammaStructure,
    f: &FuzzySubset,
) -> Result<FuzzySubset, FuzzyError> {
    check_bound(s, f)?;
    if !s.is_associative() {
        return Err(FuzzyError::NotAssociative);
    }
    let principals: Vec<Subset> = (0..s.size())
        .map(|t| ideal::principal_left_ideal(s, t))
        .collect();
    Ok(FuzzySubset::from_raw(
        s,
        generated_values(&principals, &f.values),
    ))
}

// Slice kernels. Callers guarantee every slice has length `s.size()`.

#[inline]
pub(crate) fn leq_values(f: &[f64], g: &[f64]) -> bool {
    f.iter().zip(g).all(|(a, b)| a <= b)
}

pub(crate) fn meet_values(f: &[f64], g: &[f64]) -> Vec<f64> {
    f.iter().zip(g).map(|(a, b)| a.min(*b)).collect()
}

#[inline]
pub(crate) fn compose_at(s: &GammaStructure, f: &[f64], g: &[f64], a: usize) -> f64 {
    s.factorizations()
        .of(a)
        .iter()
        .fold(0.0_f64, |acc, &(y, z)| acc.max(f[y].min(g[z])))
}

pub(crate) fn compose_values(s: &GammaStructure, f: &[f64], g: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; s.size()];
    compose_into(s, f, g, &mut out);
    out
}

pub(crate) fn compose_into(s: &GammaStructure, f: &[f64], g: &[f64], out: &mut [f64]) {
    let fact = s.factorizations();
    for (a, slot) in out.iter_mut().enumerate() {
        let mut best = 0.0_f64;
        for &(y, z) in fact.of(a) {
            let v = f[y].min(g[z]);
            if v > best {
                best = v;
            }
        }
        *slot = best;
    }
}

pub(crate) fn order_reversing_values(s: &GammaStructure, f: &[f64]) -> bool {
    let n = s.size();
    (0..n).all(|x| (0..n).all(|y| !s.leq(x, y) || f[x] >= f[y]))
}

pub(crate) fn right_ideal_values(s: &GammaStructure, f: &[f64]) -> bool {
    let n = s.size();
    order_reversing_values(s, f)
        && (0..n).all(|x| (0..s.gamma_count()).all(|g| (0..n).all(|y| f[s.mul(x, g, y)] >= f[x])))
}

pub(crate) fn left_ideal_values(s: &GammaStructure, f: &[f64]) -> bool {
    let n = s.size();
    order_reversing_values(s, f)
        && (0..n).all(|x| (0..s.gamma_count()).all(|g| (0..n).all(|y| f[s.mul(x, g, y)] >= f[y])))
}

pub(crate) fn bi_ideal_values(s: &GammaStructure, f: &[f64]) -> bool {
    let n = s.size();
    let m = s.gamma_count();
    if !order_reversing_values(s, f) {
        return false;
    }
    for x in 0..n {
        for g in 0..m {
            for y in 0..n {
                let xy = s.mul(x, g, y);
                for mu in 0..m {
                    for z in 0..n {
                        if f[s.mul(xy, mu, z)] < f[x].min(f[z]) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

pub(crate) fn quasi_ideal_values(s: &GammaStructure, f: &[f64]) -> bool {
    let ones = vec![1.0; s.size()];
    let fr = compose_values(s, f, &ones);
    let fl = compose_values(s, &ones, f);
    order_reversing_values(s, f) && leq_values(&meet_values(&fr, &fl), f)
}

pub(crate) fn right_ideal_by_composition(s: &GammaStructure, f: &[f64]) -> bool {
    let ones = vec![1.0; s.size()];
    order_reversing_values(s, f) && leq_values(&compose_values(s, f, &ones), f)
}

pub(crate) fn left_ideal_by_composition(s: &GammaStructure, f: &[f64]) -> bool {
    let ones = vec![1.0; s.size()];
    order_reversing_values(s, f) && leq_values(&compose_values(s, &ones, f), f)
}

pub(crate) fn bi_ideal_by_composition(s: &GammaStructure, f: &[f64]) -> bool {
    let ones = vec![1.0; s.size()];
    let f1 = compose_values(s, f, &ones);
    order_reversing_values(s, f) && leq_values(&compose_values(s, &f1, f), f)
}

pub(crate) fn generated_values(principals: &[Subset], f: &[f64]) -> Vec<f64> {
    let n = f.len();
    (0..n)
        .map(|x| {
            (0..n)
                .filter(|&t| principals[t].contains(x))
                .fold(0.0_f64, |acc, t| acc.max(f[t]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn fz(s: &GammaStructure, entries: &[(&str, f64)]) -> FuzzySubset {
        FuzzySubset::from_labels(s, entries.iter().copied()).unwrap()
    }

    /// Direct scan of `A_a` from its definition, independent of the cached
    /// factorization table.
    fn sup_min_oracle(s: &GammaStructure, f: &FuzzySubset, g: &FuzzySubset) -> Vec<f64> {
        let n = s.size();
        (0..n)
            .map(|a| {
                let mut best: Option<f64> = None;
                for y in 0..n {
                    for z in 0..n {
                        if (0..s.gamma_count()).any(|k| s.leq(a, s.mul(y, k, z))) {
                            let v = f.value(y).min(g.value(z));
                            best = Some(best.map_or(v, |b: f64| b.max(v)));
                        }
                    }
                }
                best.unwrap_or(0.0)
            })
            .collect()
    }

    #[test]
    fn compose_left_zero() {
        let s = fixtures::lz2();
        let f = fz(&s, &[("a", 0.5), ("b", 1.0)]);
        let g = fz(&s, &[("a", 0.25), ("b", 0.75)]);
        let fg = compose(&s, &f, &g).unwrap();
        assert_eq!(fg.values(), &[0.5, 0.75]);
        assert_eq!(fg.values(), sup_min_oracle(&s, &f, &g).as_slice());
    }

    #[test]
    fn compose_empty_factorization_is_zero() {
        let s = fixtures::nz2();
        let f = fz(&s, &[("z", 0.3), ("a", 1.0)]);
        let g = fz(&s, &[("z", 0.6), ("a", 0.9)]);
        let fg = compose(&s, &f, &g).unwrap();
        assert_eq!(fg.value(1), 0.0);
        assert_eq!(fg.values(), sup_min_oracle(&s, &f, &g).as_slice());
    }

    #[test]
    fn compose_single_pair() {
        let s = fixtures::t1();
        let fg = compose(&s, &fz(&s, &[("e", 0.3)]), &fz(&s, &[("e", 0.9)])).unwrap();
        assert_eq!(fg.values(), &[0.3]);
    }

    #[test]
    fn compose_rejects_foreign_subsets() {
        let lz2 = fixtures::lz2();
        let nz2 = fixtures::nz2();
        let f = FuzzySubset::zero(&lz2);
        let g = FuzzySubset::zero(&nz2);
        assert_eq!(compose(&lz2, &f, &g), Err(FuzzyError::MismatchedStructure));
        assert_eq!(f.meet(&g), Err(FuzzyError::MismatchedStructure));
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let s = fixtures::t1();
        assert!(matches!(
            FuzzySubset::new(&s, vec![1.5]),
            Err(FuzzyError::OutOfRange { .. })
        ));
        assert!(FuzzySubset::new(&s, vec![f64::NAN]).is_err());
        assert!(matches!(
            FuzzySubset::from_labels(&s, [("x", 0.5)]),
            Err(FuzzyError::UnknownElement(_))
        ));
    }

    #[test]
    fn meet_leq_one() {
        let s = fixtures::lz2();
        let f = fz(&s, &[("a", 0.5), ("b", 1.0)]);
        let g = fz(&s, &[("a", 0.25), ("b", 0.75)]);
        let m = f.meet(&g).unwrap();
        assert_eq!(m.values(), &[0.25, 0.75]);
        assert!(!f.leq(&g).unwrap());
        assert!(m.leq(&f).unwrap());
        assert!(f.leq(&constant_one(&s)).unwrap());
        assert_eq!(f.meet(&f).unwrap(), f);
    }

    #[test]
    fn characteristic_functions() {
        let nz2 = fixtures::nz2();
        assert_eq!(characteristic(&nz2, &nz2.full_subset()), constant_one(&nz2));
        let lz2 = fixtures::lz2();
        assert_eq!(point_characteristic(&lz2, 0).values(), &[1.0, 0.0]);
        assert_eq!(
            characteristic(&lz2, &Subset::empty(2)),
            FuzzySubset::zero(&lz2)
        );
    }

    #[test]
    fn order_reversing_examples() {
        let nz2 = fixtures::nz2();
        assert!(is_order_reversing(&nz2, &fz(&nz2, &[("z", 0.9), ("a", 0.4)])).unwrap());
        assert!(!is_order_reversing(&nz2, &fz(&nz2, &[("z", 0.1), ("a", 0.4)])).unwrap());
        let lz2 = fixtures::lz2();
        assert!(is_order_reversing(&lz2, &fz(&lz2, &[("a", 0.1), ("b", 0.4)])).unwrap());
    }

    #[test]
    fn ideal_predicates() {
        let lz2 = fixtures::lz2();
        let f = fz(&lz2, &[("a", 0.3), ("b", 0.9)]);
        assert!(is_fuzzy_right_ideal(&lz2, &f).unwrap());
        assert!(!is_fuzzy_left_ideal(&lz2, &f).unwrap());
        assert!(is_fuzzy_right_ideal_via_composition(&lz2, &f).unwrap());
        assert!(!is_fuzzy_left_ideal_via_composition(&lz2, &f).unwrap());

        let nz2 = fixtures::nz2();
        let f = fz(&nz2, &[("z", 1.0), ("a", 0.2)]);
        assert!(is_fuzzy_right_ideal(&nz2, &f).unwrap());
        let f = fz(&nz2, &[("z", 0.1), ("a", 0.4)]);
        assert!(!is_fuzzy_right_ideal_via_composition(&nz2, &f).unwrap());

        for (_, s) in fixtures::all() {
            let one = constant_one(&s);
            assert!(is_fuzzy_right_ideal(&s, &one).unwrap());
            assert!(is_fuzzy_left_ideal(&s, &one).unwrap());
            assert!(is_fuzzy_quasi_ideal(&s, &one).unwrap());
        }
        let t1 = fixtures::t1();
        let f = fz(&t1, &[("e", 0.42)]);
        assert!(is_fuzzy_right_ideal_via_composition(&t1, &f).unwrap());
        assert!(is_fuzzy_left_ideal_via_composition(&t1, &f).unwrap());
        assert!(is_fuzzy_bi_ideal_via_composition(&t1, &f).unwrap());
    }

    #[test]
    fn bi_ideal_examples() {
        let t1 = fixtures::t1();
        assert!(is_fuzzy_bi_ideal(&t1, &fz(&t1, &[("e", 0.7)])).unwrap());
        let lz2 = fixtures::lz2();
        assert!(is_fuzzy_bi_ideal(&lz2, &fz(&lz2, &[("a", 0.1), ("b", 0.8)])).unwrap());
        let nz2 = fixtures::nz2();
        assert!(!is_fuzzy_bi_ideal(&nz2, &fz(&nz2, &[("z", 0.4), ("a", 0.8)])).unwrap());
    }

    #[test]
    fn bi_ideal_requires_semigroup() {
        // e g e = f, e g f = e, f g e = f, f g f = f is not associative
        let s =
            GammaStructure::from_indexed(2, 1, vec![1, 0, 1, 1], &[], Default::default()).unwrap();
        let f = FuzzySubset::zero(&s);
        assert_eq!(is_fuzzy_bi_ideal(&s, &f), Err(FuzzyError::NotAssociative));
    }

    #[test]
    fn quasi_ideal_examples() {
        let lz2 = fixtures::lz2();
        let f = fz(&lz2, &[("a", 0.3), ("b", 0.9)]);
        let one = constant_one(&lz2);
        assert_eq!(compose(&lz2, &f, &one).unwrap().values(), &[0.3, 0.9]);
        assert_eq!(compose(&lz2, &one, &f).unwrap().values(), &[0.9, 0.9]);
        assert!(is_fuzzy_quasi_ideal(&lz2, &f).unwrap());

        let nz2 = fixtures::nz2();
        let f = fz(&nz2, &[("z", 0.0), ("a", 0.5)]);
        let one = constant_one(&nz2);
        assert_eq!(compose(&nz2, &f, &one).unwrap().value(0), 0.5);
        assert_eq!(compose(&nz2, &one, &f).unwrap().value(0), 0.5);
        assert!(!is_fuzzy_quasi_ideal(&nz2, &f).unwrap());
    }

    #[test]
    fn generated_right_ideals() {
        for (_, s) in fixtures::all() {
            let z = FuzzySubset::zero(&s);
            assert_eq!(generated_fuzzy_right_ideal(&s, &z).unwrap(), z);
        }
        let nz2 = fixtures::nz2();
        let r = generated_fuzzy_right_ideal(&nz2, &fz(&nz2, &[("z", 0.0), ("a", 0.7)])).unwrap();
        assert_eq!(r.values(), &[0.7, 0.7]);
        assert!(is_fuzzy_right_ideal(&nz2, &r).unwrap());
        let lz2 = fixtures::lz2();
        let f = fz(&lz2, &[("a", 0.2), ("b", 0.6)]);
        assert_eq!(generated_fuzzy_right_ideal(&lz2, &f).unwrap(), f);
    }

    #[test]
    fn chained_composition_is_left_to_right() {
        let s = fixtures::lz2();
        let f = fz(&s, &[("a", 0.5), ("b", 0.1)]);
        let one = constant_one(&s);
        let chained = compose_chain(&s, &[&f, &one, &f]).unwrap();
        let manual = compose(&s, &compose(&s, &f, &one).unwrap(), &f).unwrap();
        assert_eq!(chained, manual);
    }
}
