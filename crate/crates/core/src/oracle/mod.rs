//! Brute-force evaluators that check the closed forms from an independent
//! direction: explicit mode series, direct image sums, cutoff-regulated mode
//! sums and finite differences.
//!
//! Nothing in here calls `position`, `scalar`, `maxwell` or `energy`.

mod cutoff;
mod green;
mod images;
mod quadrature;

pub use cutoff::cutoff_casimir_energy;
pub use green::{green_closed, green_closed_neumann, green_mode_partial_sums, green_mode_sum};
pub use images::image_sum_f;
pub use quadrature::{finite_difference_second_derivative, profile_energy_integral, EnergyIntegral};

use crate::error::{Error, Result};

/// Truncation controls for the explicit series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesBudget {
    max_images: usize,
    max_modes: usize,
    tail_order: u8,
}

pub const MIN_SERIES_BUDGET: usize = 1_000;

impl SeriesBudget {
    /// `max_images` caps `|j|` in image sums, `max_modes` caps `n` in mode
    /// series; `tail_order` is 0 (plain truncation) or 1 (integral tail).
    pub fn new(max_images: usize, max_modes: usize, tail_order: u8) -> Result<Self> {
        if max_images < MIN_SERIES_BUDGET || max_modes < MIN_SERIES_BUDGET {
            return Err(Error::InvalidParameter(format!(
                "series budgets must be at least {MIN_SERIES_BUDGET} (images {max_images}, modes {max_modes})"
            )));
        }
        if tail_order > 1 {
            return Err(Error::InvalidParameter(format!(
                "tail_order must be 0 or 1, got {tail_order}"
            )));
        }
        Ok(Self {
            max_images,
            max_modes,
            tail_order,
        })
    }

    pub fn max_images(&self) -> usize {
        self.max_images
    }

    pub fn max_modes(&self) -> usize {
        self.max_modes
    }

    pub fn tail_order(&self) -> u8 {
        self.tail_order
    }
}

impl Default for SeriesBudget {
    fn default() -> Self {
        Self {
            max_images: 1_000_000,
            max_modes: 10_000,
            tail_order: 1,
        }
    }
}

/// Regulator values and the divergent powers of `1/α` to fit away.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffSchedule {
    alphas: Vec<f64>,
    fit_powers: Vec<u32>,
}

impl CutoffSchedule {
    pub fn new(alphas: Vec<f64>, fit_powers: Vec<u32>) -> Result<Self> {
        if alphas.len() < 4 {
            return Err(Error::InvalidParameter(format!(
                "need at least 4 cutoff values, got {}",
                alphas.len()
            )));
        }
        if alphas.iter().any(|a| !(*a > 0.0 && a.is_finite())) {
            return Err(Error::InvalidParameter("cutoff values must be positive and finite".into()));
        }
        if alphas.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidParameter("cutoff values must be strictly decreasing".into()));
        }
        if fit_powers.is_empty() || fit_powers.contains(&0) || fit_powers.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidParameter(format!(
                "fit powers must be non-empty, strictly decreasing and ≥ 1, got {fit_powers:?}"
            )));
        }
        Ok(Self { alphas, fit_powers })
    }

    /// `n` geometrically spaced values from `from` down to `to`.
    pub fn geometric(from: f64, to: f64, n: usize, fit_powers: Vec<u32>) -> Result<Self> {
        if n < 2 || !(from > to && to > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "geometric schedule needs from > to > 0 and n ≥ 2 (from {from}, to {to}, n {n})"
            )));
        }
        let ratio = (to / from).powf(1.0 / (n - 1) as f64);
        let alphas = (0..n).map(|i| from * ratio.powi(i as i32)).collect();
        Self::new(alphas, fit_powers)
    }

    /// Sixteen values over one decade, `0.15 L` down to `0.015 L`, removing
    /// `α^{−D}, …, α^{−1}`.
    pub fn standard(dim: u32, gap: f64) -> Result<Self> {
        Self::geometric(0.15 * gap, 0.015 * gap, 16, (1..=dim).rev().collect())
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn fit_powers(&self) -> &[u32] {
        &self.fit_powers
    }

    /// Same schedule with every `α` multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.alphas.iter().map(|a| a * factor).collect(), self.fit_powers.clone())
    }
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn merge(&mut self, other: CompensatedSum) {
        self.add(other.sum);
        self.carry += other.carry;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}
