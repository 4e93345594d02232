//! Finite batteries of grid-valued fuzzy subsets.
//!
//! A battery with `L` levels draws membership values from
//! `{0, 1/(L-1), ..., 1}`. Exhaustive batteries enumerate all `L^n` fuzzy
//! subsets in lexicographic order (element 0 most significant, levels
//! ascending), so the first item is all-zero and the last is all-one.
//!
//! With `L = 2n + 2` levels an exhaustive battery is complete for statements
//! built from `∘`, `∧`, `⪯` and pointwise comparisons of at most two fuzzy
//! subsets: any real-valued counterexample uses at most `2n` distinct values
//! and an order-preserving relabeling onto the grid (fixing 0 and 1) preserves
//! every min, max and comparison.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::FuzzySubset;
use crate::structure::GammaStructure;

/// Largest exhaustive battery enumerated without an explicit override.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Sample count used when the exhaustive battery would exceed the cap.
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BatteryError {
    #[error("a battery needs at least 2 levels, got {0}")]
    TooFewLevels(usize),
    #[error(
        "exhaustive battery has {size} members, above the cap of {cap}; use a sampled battery"
    )]
    CapExceeded { size: String, cap: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum BatteryScope {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBattery {
    pub levels: usize,
    pub scope: BatteryScope,
    pub cap: u64,
}

impl GridBattery {
    pub fn exhaustive(levels: usize) -> Self {
        GridBattery {
            levels,
            scope: BatteryScope::Exhaustive,
            cap: DEFAULT_CAP,
        }
    }

    pub fn sampled(levels: usize, count: usize, seed: u64) -> Self {
        GridBattery {
            levels,
            scope: BatteryScope::Sampled { count, seed },
            cap: DEFAULT_CAP,
        }
    }

    /// `2n + 2` levels, exhaustive when that fits under the cap.
    pub fn complete_levels(n: usize) -> usize {
        2 * n + 2
    }

    /// Exhaustive with `levels` when `levels^n` fits under the default cap,
    /// otherwise [`DEFAULT_SAMPLES`] seeded samples.
    pub fn auto(n: usize, levels: usize, seed: u64) -> Self {
        match exhaustive_size(n, levels) {
            Some(size) if size <= DEFAULT_CAP => Self::exhaustive(levels),
            _ => Self::sampled(levels, DEFAULT_SAMPLES, seed),
        }
    }

    pub fn level_value(&self, k: usize) -> f64 {
        k as f64 / (self.levels - 1) as f64
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self.scope, BatteryScope::Exhaustive)
    }

    /// Exhaustive and with at least `2n + 2` levels.
    pub fn is_complete_for(&self, n: usize) -> bool {
        self.is_exhaustive() && self.levels >= Self::complete_levels(n)
    }

    /// Number of grid members this battery yields on an `n`-element carrier.
    pub fn size(&self, n: usize) -> Option<u64> {
        match self.scope {
            BatteryScope::Exhaustive => exhaustive_size(n, self.levels),
            BatteryScope::Sampled { count, .. } => Some(count as u64),
        }
    }
}

fn exhaustive_size(n: usize, levels: usize) -> Option<u64> {
    (levels as u64).checked_pow(u32::try_from(n).ok()?)
}

/// Streams the battery's grid members for `s`.
pub fn enumerate_grid_battery(
    s: &GammaStructure,
    battery: &GridBattery,
) -> Result<GridStream, BatteryError> {
    if battery.levels < 2 {
        return Err(BatteryError::TooFewLevels(battery.levels));
    }
    let n = s.size();
    let values: Vec<f64> = (0..battery.levels)
        .map(|k| battery.level_value(k))
        .collect();
    let kind = match battery.scope {
        BatteryScope::Exhaustive => {
            match exhaustive_size(n, battery.levels) {
                Some(size) if size <= battery.cap => {}
                size => {
                    return Err(BatteryError::CapExceeded {
                        size: size
                            .map_or_else(|| format!("{}^{}", battery.levels, n), |v| v.to_string()),
                        cap: battery.cap,
                    })
                }
            }
            StreamKind::Exhaustive {
                digits: Some(vec![0; n]),
            }
        }
        BatteryScope::Sampled { count, seed } => StreamKind::Sampled {
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
            remaining: count,
        },
    };
    Ok(GridStream {
        structure: s.clone(),
        values,
        kind,
    })
}

enum StreamKind {
    Exhaustive {
        digits: Option<Vec<usize>>,
    },
    Sampled {
        rng: Box<ChaCha8Rng>,
        remaining: usize,
    },
}

/// Iterator over battery members; see [`enumerate_grid_battery`].
pub struct GridStream {
    structure: GammaStructure,
    values: Vec<f64>,
    kind: StreamKind,
}

impl GridStream {
    fn next_values(&mut self) -> Option<Vec<f64>> {
        let levels = self.values.len();
        match &mut self.kind {
            StreamKind::Exhaustive { digits } => {
                let current = digits.as_mut()?;
                let out = current.iter().map(|&d| self.values[d]).collect();
                // odometer with the last element least significant
                let mut i = current.len();
                loop {
                    if i == 0 {
                        *digits = None;
                        break;
                    }
                    i -= 1;
                    current[i] += 1;
                    if current[i] < levels {
                        break;
                    }
                    current[i] = 0;
                }
                Some(out)
            }
            StreamKind::Sampled { rng, remaining } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let n = self.structure.size();
                Some(
                    (0..n)
                        .map(|_| self.values[rng.random_range(0..levels)])
                        .collect(),
                )
            }
        }
    }
}

impl Iterator for GridStream {
    type Item = FuzzySubset;

    fn next(&mut self) -> Option<FuzzySubset> {
        let values = self.next_values()?;
        Some(FuzzySubset::from_raw(&self.structure, values))
    }
}
