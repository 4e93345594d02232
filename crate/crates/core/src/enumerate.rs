//! Exhaustive enumeration of small po-Γ-semigroups.
//!
//! Tables are filled depth-first, cell `(x, γ, y)` in row-major order with
//! values ascending, so associative tables come out in lexicographic order.
//! After each assignment every associativity instance that uses the new
//! cell and has all four products determined is checked. Each table is then
//! crossed with the partial orders compatible with it, ordered by their
//! row-major order matrix with the discrete order first.

use indexmap::IndexMap;
use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::{self, ClassifyError, RegularityClass};
use crate::structure::{find_compat_violation, GammaStructure, ValidateOptions};

/// Largest `(n, m)` enumerated without `allow_large`.
pub const DEFAULT_MAX_N: usize = 3;
pub const DEFAULT_MAX_M: usize = 2;
/// Never exceeded.
pub const HARD_MAX_N: usize = 4;
pub const HARD_MAX_M: usize = 3;

const UNSET: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("carrier and operation set must be non-empty (n = {n}, m = {m})")]
    Empty { n: usize, m: usize },
    #[error("(n = {n}, m = {m}) exceeds the cap (n <= {max_n}, m <= {max_m})")]
    CapExceeded {
        n: usize,
        m: usize,
        max_n: usize,
        max_m: usize,
    },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub n: usize,
    pub m: usize,
    /// Maximum number of structures emitted.
    pub limit: Option<usize>,
    pub up_to_iso: bool,
    pub require_compat: bool,
    /// Lifts the default caps up to the hard caps.
    pub allow_large: bool,
}

impl SearchSpec {
    pub fn new(n: usize, m: usize) -> Self {
        SearchSpec {
            n,
            m,
            limit: None,
            up_to_iso: false,
            require_compat: true,
            allow_large: false,
        }
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_iso = true;
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    fn check_caps(&self) -> Result<(), EnumerateError> {
        check_hard_caps(self.n, self.m)?;
        if !self.allow_large && (self.n > DEFAULT_MAX_N || self.m > DEFAULT_MAX_M) {
            return Err(EnumerateError::CapExceeded {
                n: self.n,
                m: self.m,
                max_n: DEFAULT_MAX_N,
                max_m: DEFAULT_MAX_M,
            });
        }
        Ok(())
    }
}

fn check_hard_caps(n: usize, m: usize) -> Result<(), EnumerateError> {
    if n == 0 || m == 0 {
        return Err(EnumerateError::Empty { n, m });
    }
    if n > HARD_MAX_N || m > HARD_MAX_M {
        return Err(EnumerateError::CapExceeded {
            n,
            m,
            max_n: HARD_MAX_N,
            max_m: HARD_MAX_M,
        });
    }
    Ok(())
}

/// Depth-first stream of associative tables; see [`enumerate_tables`].
pub struct TableStream {
    n: usize,
    m: usize,
    table: Vec<usize>,
    /// Next cell to fill; `None` once the search is exhausted.
    depth: Option<usize>,
    limit: Option<usize>,
    emitted: usize,
    truncated: bool,
    started: bool,
}

impl TableStream {
    /// True when the limit stopped the stream before the search finished.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn cells(&self) -> usize {
        self.n * self.m * self.n
    }

    /// Advances the search to the next complete associative table.
    fn advance(&mut self) -> bool {
        let cells = self.cells();
        let Some(mut depth) = self.depth else {
            return false;
        };
        if self.started {
            // resume after the last complete table
            depth = cells - 1;
        } else {
            self.started = true;
        }
        loop {
            // try the next value at `depth`
            let next = if self.table[depth] == UNSET {
                0
            } else {
                self.table[depth] + 1
            };
            if next >= self.n {
                self.table[depth] = UNSET;
                if depth == 0 {
                    self.depth = None;
                    return false;
                }
                depth -= 1;
                continue;
            }
            self.table[depth] = next;
            if !consistent(self.n, self.m, &self.table, depth) {
                continue;
            }
            if depth + 1 == cells {
                self.depth = Some(depth);
                return true;
            }
            depth += 1;
        }
    }
}

impl Iterator for TableStream {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.limit.is_some_and(|l| self.emitted >= l) {
            if !self.truncated && self.advance() {
                self.truncated = true;
            }
            self.depth = None;
            return None;
        }
        if self.advance() {
            self.emitted += 1;
            Some(self.table.clone())
        } else {
            None
        }
    }
}

/// Associativity instances that use cell `c` and are fully determined.
fn consistent(n: usize, m: usize, t: &[usize], c: usize) -> bool {
    let idx = |x: usize, g: usize, y: usize| (x * m + g) * n + y;
    let get = |x: usize, g: usize, y: usize| t[idx(x, g, y)];
    let (a, g, b) = (c / (m * n), (c / n) % m, c % n);
    let v = t[c];
    // c = x γ y
    for mu in 0..m {
        for z in 0..n {
            let left = get(v, mu, z);
            let q = get(b, mu, z);
            if left == UNSET || q == UNSET {
                continue;
            }
            let right = get(a, g, q);
            if right != UNSET && left != right {
                return false;
            }
        }
    }
    // c = y μ z
    for x in 0..n {
        for gamma in 0..m {
            let p = get(x, gamma, a);
            let right = get(x, gamma, v);
            if p == UNSET || right == UNSET {
                continue;
            }
            let left = get(p, g, b);
            if left != UNSET && left != right {
                return false;
            }
        }
    }
    // c = (x γ y) μ z with x γ y = a
    for x in 0..n {
        for gamma in 0..m {
            for y in 0..n {
                if get(x, gamma, y) != a {
                    continue;
                }
                let q = get(y, g, b);
                if q == UNSET {
                    continue;
                }
                let right = get(x, gamma, q);
                if right != UNSET && right != v {
                    return false;
                }
            }
        }
    }
    // c = x γ (y μ z) with y μ z = b
    for y in 0..n {
        for mu in 0..m {
            for z in 0..n {
                if get(y, mu, z) != b {
                    continue;
                }
                let p = get(a, g, y);
                if p == UNSET {
                    continue;
                }
                let left = get(p, mu, z);
                if left != UNSET && left != v {
                    return false;
                }
            }
        }
    }
    true
}

/// Streams every associative `n × m × n` table in lexicographic order.
/// Flat layout: `table[(x * m + γ) * n + y]`.
pub fn enumerate_tables(
    n: usize,
    m: usize,
    limit: Option<usize>,
) -> Result<TableStream, EnumerateError> {
    check_hard_caps(n, m)?;
    Ok(TableStream {
        n,
        m,
        table: vec![UNSET; n * m * n],
        depth: Some(0),
        limit,
        emitted: 0,
        truncated: false,
        started: false,
    })
}

/// Closed order matrices on `n` labeled elements, compatible with `table`
/// when `require_compat`. Ascending in row-major matrix order, so the
/// discrete order is first.
pub fn enumerate_orders(
    n: usize,
    m: usize,
    table: &[usize],
    require_compat: bool,
) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let p = pairs.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << p) {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> (p - 1 - k) & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        if !is_partial_order(n, &leq) {
            continue;
        }
        if require_compat && find_compat_violation(n, m, table, &leq).is_some() {
            continue;
        }
        out.push(leq);
    }
    out
}

fn is_partial_order(n: usize, leq: &[bool]) -> bool {
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i * n + j] && leq[j * n + i] {
                return false;
            }
            if leq[i * n + j] && (0..n).any(|k| leq[j * n + k] && !leq[i * n + k]) {
                return false;
            }
        }
    }
    true
}

/// `(table, order matrix)` of a structure, compared lexicographically.
pub type Encoding = (Vec<usize>, Vec<bool>);

pub fn encode(s: &GammaStructure) -> Encoding {
    (s.table().to_vec(), s.order_matrix().to_vec())
}

/// Encoding of `s` relabeled by `sigma` on elements and `tau` on operations:
/// `x γ y = z` becomes `σx τγ σy = σz`.
pub fn relabel(s: &GammaStructure, sigma: &[usize], tau: &[usize]) -> Encoding {
    let (n, m) = (s.size(), s.gamma_count());
    let mut table = vec![0; n * m * n];
    let mut leq = vec![false; n * n];
    for x in 0..n {
        for g in 0..m {
            for y in 0..n {
                table[(sigma[x] * m + tau[g]) * n + sigma[y]] = sigma[s.mul(x, g, y)];
            }
        }
        for y in 0..n {
            leq[sigma[x] * n + sigma[y]] = s.leq(x, y);
        }
    }
    (table, leq)
}

/// Least encoding over all `n!·m!` relabelings.
pub fn canonical_form(s: &GammaStructure) -> Encoding {
    let (n, m) = (s.size(), s.gamma_count());
    let taus: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    (0..n)
        .permutations(n)
        .flat_map(|sigma| {
            taus.iter()
                .map(move |tau| relabel(s, &sigma, tau))
                .collect::<Vec<_>>()
        })
        .min()
        .expect("at least one permutation")
}

pub fn is_canonical(s: &GammaStructure) -> bool {
    encode(s) == canonical_form(s)
}

fn build(
    n: usize,
    m: usize,
    table: Vec<usize>,
    leq: &[bool],
    require_compat: bool,
) -> GammaStructure {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && leq[i * n + j])
        .collect();
    GammaStructure::from_indexed(n, m, table, &pairs, ValidateOptions { require_compat })
        .expect("enumerated structures validate")
}

/// Stream of structures; see [`enumerate_structures`].
pub struct StructureStream {
    spec: SearchSpec,
    tables: TableStream,
    current: Option<(Vec<usize>, std::vec::IntoIter<Vec<bool>>)>,
    emitted: usize,
    truncated: bool,
    done: bool,
}

impl StructureStream {
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn next_candidate(&mut self) -> Option<GammaStructure> {
        let SearchSpec { n, m, .. } = self.spec;
        loop {
            if let Some((table, orders)) = &mut self.current {
                for leq in orders.by_ref() {
                    let s = build(n, m, table.clone(), &leq, self.spec.require_compat);
                    if !self.spec.up_to_iso || is_canonical(&s) {
                        return Some(s);
                    }
                }
            }
            let table = self.tables.next()?;
            let orders = enumerate_orders(n, m, &table, self.spec.require_compat);
            self.current = Some((table, orders.into_iter()));
        }
    }
}

impl Iterator for StructureStream {
    type Item = GammaStructure;

    fn next(&mut self) -> Option<GammaStructure> {
        if self.done {
            return None;
        }
        if self.spec.limit.is_some_and(|l| self.emitted >= l) {
            self.truncated = self.next_candidate().is_some();
            self.done = true;
            return None;
        }
        match self.next_candidate() {
            Some(s) => {
                self.emitted += 1;
                Some(s)
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

/// Tables crossed with their compatible orders, in table-then-order order,
/// optionally keeping only canonical representatives.
pub fn enumerate_structures(spec: &SearchSpec) -> Result<StructureStream, EnumerateError> {
    spec.check_caps()?;
    Ok(StructureStream {
        spec: *spec,
        tables: enumerate_tables(spec.n, spec.m, None)?,
        current: None,
        emitted: 0,
        truncated: false,
        done: false,
    })
}

/// Counts of an enumeration, total and per regularity class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub n: usize,
    pub m: usize,
    pub up_to_iso: bool,
    pub require_compat: bool,
    pub limit: Option<usize>,
    /// Associative tables contributing at least one emitted structure.
    pub tables: usize,
    pub total: usize,
    pub truncated: bool,
    pub classes: IndexMap<String, usize>,
}

/// Enumerates `spec` and classifies every structure. Classification runs
/// in parallel; counts do not depend on scheduling.
pub fn census(spec: &SearchSpec) -> Result<Census, EnumerateError> {
    let mut stream = enumerate_structures(spec)?;
    let structures: Vec<GammaStructure> = stream.by_ref().collect();
    let truncated = stream.truncated();
    let flags: Vec<[bool; 4]> = structures
        .par_iter()
        .map(|s| {
            let report = ideal::classify(s)?;
            Ok(RegularityClass::ALL.map(|c| report.holds(c)))
        })
        .collect::<Result<_, ClassifyError>>()?;
    let mut classes = IndexMap::new();
    for (k, class) in RegularityClass::ALL.iter().enumerate() {
        classes.insert(
            class.name().to_string(),
            flags.iter().filter(|f| f[k]).count(),
        );
    }
    let tables = structures.iter().map(|s| s.table()).dedup().count();
    Ok(Census {
        n: spec.n,
        m: spec.m,
        up_to_iso: spec.up_to_iso,
        require_compat: spec.require_compat,
        limit: spec.limit,
        tables,
        total: structures.len(),
        truncated,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structure::find_associativity_violation;

    fn naive_tables(n: usize, m: usize) -> Vec<Vec<usize>> {
        let cells = n * m * n;
        let total = n.pow(cells as u32);
        (0..total)
            .map(|mut k| {
                let mut t = vec![0; cells];
                for c in (0..cells).rev() {
                    t[c] = k % n;
                    k /= n;
                }
                t
            })
            .filter(|t| find_associativity_violation(n, m, t).is_none())
            .collect()
    }

    #[test]
    fn tables_match_naive_filter() {
        for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
            let fast: Vec<_> = enumerate_tables(n, m, None).unwrap().collect();
            assert_eq!(fast, naive_tables(n, m), "n={n} m={m}");
        }
        assert_eq!(enumerate_tables(2, 1, None).unwrap().count(), 8);
    }

    #[test]
    fn table_limit_sets_flag() {
        let mut s = enumerate_tables(2, 1, Some(3)).unwrap();
        assert_eq!(s.by_ref().count(), 3);
        assert!(s.truncated());
        let mut s = enumerate_tables(2, 1, Some(8)).unwrap();
        assert_eq!(s.by_ref().count(), 8);
        assert!(!s.truncated());
    }

    #[test]
    fn orders_on_fixtures() {
        assert_eq!(enumerate_orders(1, 1, &[0], true).len(), 1);
        let lz2 = fixtures::lz2();
        // left zero: x g y = x, every order is compatible
        assert_eq!(enumerate_orders(2, 1, lz2.table(), true).len(), 3);
        let nz2 = fixtures::nz2();
        let orders = enumerate_orders(2, 1, nz2.table(), true);
        assert_eq!(orders.len(), 3);
        assert_eq!(orders[0], vec![true, false, false, true]);
        // x g y = y on the left only is compatible in one argument
        assert_eq!(enumerate_orders(2, 1, &[0, 1, 0, 1], false).len(), 3);
        assert_eq!(enumerate_orders(3, 1, &[0; 9], false).len(), 19);
    }

    #[test]
    fn canonical_forms() {
        let t1 = fixtures::t1();
        assert_eq!(canonical_form(&t1), encode(&t1));
        let lz2 = fixtures::lz2();
        let swapped = GammaStructure::from_indexed(
            2,
            1,
            relabel(&lz2, &[1, 0], &[0]).0,
            &[],
            Default::default(),
        )
        .unwrap();
        assert_eq!(canonical_form(&lz2), canonical_form(&swapped));
        assert_ne!(canonical_form(&lz2), canonical_form(&fixtures::nz2()));
    }

    #[test]
    fn structure_counts_and_iso() {
        assert_eq!(
            enumerate_structures(&SearchSpec::new(1, 1))
                .unwrap()
                .count(),
            1
        );
        let labeled: Vec<_> = enumerate_structures(&SearchSpec::new(2, 1))
            .unwrap()
            .collect();
        let expected: usize = naive_tables(2, 1)
            .iter()
            .map(|t| enumerate_orders(2, 1, t, true).len())
            .sum();
        assert_eq!(labeled.len(), expected);
        let reps: Vec<_> = enumerate_structures(&SearchSpec::new(2, 1).up_to_iso())
            .unwrap()
            .map(|s| canonical_form(&s))
            .collect();
        assert!(reps.len() <= labeled.len());
        for s in &labeled {
            let hits = reps.iter().filter(|r| **r == canonical_form(s)).count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_structures(&SearchSpec::new(4, 1)),
            Err(EnumerateError::CapExceeded { .. })
        ));
        let mut big = SearchSpec::new(5, 1);
        big.allow_large = true;
        assert!(enumerate_structures(&big).is_err());
        assert!(matches!(
            enumerate_tables(0, 1, None),
            Err(EnumerateError::Empty { .. })
        ));
    }

    #[test]
    fn census_small() {
        let c = census(&SearchSpec::new(1, 1)).unwrap();
        assert_eq!(c.total, 1);
        assert!(c.classes.values().all(|&v| v == 1));
        let c = census(&SearchSpec::new(2, 2).with_limit(5)).unwrap();
        assert_eq!(c.total, 5);
        assert!(c.truncated);
    }
}
