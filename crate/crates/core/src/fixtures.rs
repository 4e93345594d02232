//! Small named structures used in docs, examples and tests.

use crate::structure::{GammaStructure, ValidateOptions};

/// One element `e`, one operation, `e g e = e`.
pub fn t1() -> GammaStructure {
    GammaStructure::from_parts(
        vec!["e".into()],
        vec!["g".into()],
        vec![0],
        &[],
        ValidateOptions::default(),
    )
    .expect("T1 is a po-Γ-semigroup")
}

/// Left-zero law `x g y = x` on `{a, b}` with the discrete order.
pub fn lz2() -> GammaStructure {
    GammaStructure::from_parts(
        vec!["a".into(), "b".into()],
        vec!["g".into()],
        vec![0, 0, 1, 1],
        &[],
        ValidateOptions::default(),
    )
    .expect("LZ2 is a po-Γ-semigroup")
}

/// Constant law `x g y = z` on `{z, a}` ordered by `z <= a`.
pub fn nz2() -> GammaStructure {
    GammaStructure::from_parts(
        vec!["z".into(), "a".into()],
        vec!["g".into()],
        vec![0, 0, 0, 0],
        &[(0, 1)],
        ValidateOptions::default(),
    )
    .expect("NZ2 is a po-Γ-semigroup")
}

/// All named fixtures with their names.
pub fn all() -> Vec<(&'static str, GammaStructure)> {
    vec![("T1", t1()), ("LZ2", lz2()), ("NZ2", nz2())]
}
