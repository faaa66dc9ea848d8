//! Numerical differentiation and integration of sampled profiles.

use crate::error::{Error, Result};
use crate::stress::{Profile, Region};

/// Five-point central stencil
/// `(−f(z+2h) + 16f(z+h) − 30f(z) + 16f(z−h) − f(z−2h)) / 12h²`.
pub fn finite_difference_second_derivative<F: Fn(f64) -> f64>(f: F, z: f64, h: f64) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter(format!("step must be positive, got {h}")));
    }
    let stencil = -f(z + 2.0 * h) + 16.0 * f(z + h) - 30.0 * f(z) + 16.0 * f(z - h) - f(z - 2.0 * h);
    Ok(stencil / (12.0 * h * h))
}

/// Energy per unit transverse area carried by a sampled profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyIntegral {
    pub interior: f64,
    pub exterior: f64,
    pub total: f64,
}

pub const MIN_INTERIOR_SAMPLES: usize = 256;
const SPACING_TOL: f64 = 1e-9;
const TAIL_SPREAD_TOL: f64 = 1e-9;

fn simpson(values: &[f64], h: f64) -> f64 {
    let intervals = values.len() - 1;
    let composite = |ys: &[f64]| -> f64 {
        let m = ys.len() - 1;
        if m == 0 {
            return 0.0;
        }
        let odd: f64 = ys[1..m].iter().step_by(2).sum();
        let even: f64 = ys[2..m].iter().step_by(2).sum();
        h / 3.0 * (ys[0] + 4.0 * odd + 2.0 * even + ys[m])
    };
    if intervals % 2 == 0 {
        return composite(values);
    }
    let split = intervals - 3;
    let tail = &values[split..];
    composite(&values[..=split]) + 3.0 * h / 8.0 * (tail[0] + 3.0 * tail[1] + 3.0 * tail[2] + tail[3])
}

fn lagrange(nodes: &[(f64, f64)], x: f64) -> f64 {
    nodes
        .iter()
        .enumerate()
        .map(|(i, &(xi, yi))| {
            let basis: f64 = nodes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &(xj, _))| (x - xj) / (xi - xj))
                .product();
            yi * basis
        })
        .sum()
}

/// `∫_a^b` of the cubic through `nodes`, exactly, by two-point Gauss–Legendre.
fn cubic_gap(nodes: &[(f64, f64)], a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let off = half / 3f64.sqrt();
    half * (lagrange(nodes, mid - off) + lagrange(nodes, mid + off))
}

/// Integrates `T_00` of a subtracted profile over the whole line.
///
/// The interior samples must be uniformly spaced; they are integrated with
/// composite Simpson (3/8 on the last panel for an odd interval count) and
/// the two end gaps up to the plates with the cubic through the nearest four
/// samples. Outside, the samples must follow `K (L/r)^D` with `r` the
/// distance to the far plate; `K` is read off the samples and the tail is
/// integrated exactly as `K L/(D − 1)` on each side.
pub fn profile_energy_integral(profile: &Profile) -> Result<EnergyIntegral> {
    let st = profile.spacetime();
    let gap = st.gap();
    let d = f64::from(st.dim());

    let inside: Vec<(f64, f64)> = profile.region(Region::Interior).map(|s| (s.z, s.tensor.t00)).collect();
    if inside.len() < MIN_INTERIOR_SAMPLES {
        return Err(Error::InsufficientSamples {
            need: MIN_INTERIOR_SAMPLES,
            got: inside.len(),
        });
    }
    let n = inside.len();
    let h = (inside[n - 1].0 - inside[0].0) / (n - 1) as f64;
    if let Some(w) = inside.windows(2).find(|w| ((w[1].0 - w[0].0) - h).abs() > SPACING_TOL * h) {
        return Err(Error::MalformedProfile(format!(
            "interior grid is not uniform near z = {} (step {} vs {h})",
            w[0].0,
            w[1].0 - w[0].0
        )));
    }
    let values: Vec<f64> = inside.iter().map(|p| p.1).collect();
    let interior = simpson(&values, h) + cubic_gap(&inside[..4], 0.0, inside[0].0) + cubic_gap(&inside[n - 4..], inside[n - 1].0, gap);

    let amplitude = |region: Region| -> Result<f64> {
        let ks: Vec<f64> = profile
            .region(region)
            .map(|s| {
                let far = if region == Region::LeftExterior { gap - s.z } else { s.z };
                s.tensor.t00 * (far / gap).powf(d)
            })
            .collect();
        if ks.is_empty() {
            return Err(Error::MalformedProfile(format!("no {} samples", region.name())));
        }
        let mean = ks.iter().sum::<f64>() / ks.len() as f64;
        let scale = ks.iter().fold(0.0f64, |m, k| m.max(k.abs()));
        if ks.iter().any(|k| (k - mean).abs() > TAIL_SPREAD_TOL * scale) {
            return Err(Error::MalformedProfile(format!(
                "{} samples do not follow a (L/r)^D tail",
                region.name()
            )));
        }
        Ok(mean)
    };
    let exterior = (amplitude(Region::LeftExterior)? + amplitude(Region::RightExterior)?) * gap / (d - 1.0);
    Ok(EnergyIntegral {
        interior,
        exterior,
        total: interior + exterior,
    })
}
