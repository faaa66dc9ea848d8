//! Direct image sum `Σ_j |j + x|^{−D}`.

use rayon::prelude::*;

use super::{CompensatedSum, SeriesBudget};
use crate::error::{domain, Result};

const CHUNK: usize = 1 << 14;

/// `Σ_{|j| ≤ J} |j + x|^{−D}` with `J = max_images`, plus (for
/// `tail_order = 1`) the midpoint integral estimate of the rest,
/// `[(J + ½ + x)^{1−D} + (J + ½ − x)^{1−D}]/(D − 1)`.
///
/// The index range is cut into fixed chunks that are summed in parallel and
/// combined in index order, so the result does not depend on the thread
/// count.
pub fn image_sum_f(dim: u32, x: f64, budget: &SeriesBudget) -> Result<f64> {
    if dim < 2 {
        return Err(domain("image_sum_f", format!("need D ≥ 2, got {dim}")));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(domain("image_sum_f", format!("need 0 < x < 1, got {x}")));
    }
    let power = -(dim as i32);
    let cap = budget.max_images();
    // j = 0 plus pairs (j, −j) for j = 1..=J.
    let chunks: Vec<CompensatedSum> = (0..cap.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK + 1;
            let end = ((c + 1) * CHUNK).min(cap);
            let mut acc = CompensatedSum::default();
            for j in start..=end {
                let j = j as f64;
                acc.add((j + x).powi(power));
                acc.add((j - x).powi(power));
            }
            acc
        })
        .collect();
    let mut total = CompensatedSum::default();
    total.add(x.powi(power));
    for c in chunks {
        total.merge(c);
    }
    if budget.tail_order() >= 1 {
        let d = f64::from(dim);
        let edge = cap as f64 + 0.5;
        total.add(((edge + x).powf(1.0 - d) + (edge - x).powf(1.0 - d)) / (d - 1.0));
    }
    Ok(total.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn four_dimensional_midpoint() {
        let b = SeriesBudget::new(100_000, 1_000, 1).unwrap();
        assert_relative_eq!(image_sum_f(4, 0.5, &b).unwrap(), PI.powi(4) / 3.0, max_relative = 1e-13);
    }

    #[test]
    fn tail_correction_helps() {
        let plain = SeriesBudget::new(1_000, 1_000, 0).unwrap();
        let tailed = SeriesBudget::new(1_000, 1_000, 1).unwrap();
        // 2 ζ_H(3, ½) = 14 ζ(3), mpmath
        let exact = 16.828_796_644_234_32;
        let e0 = (image_sum_f(3, 0.5, &plain).unwrap() - exact).abs();
        let e1 = (image_sum_f(3, 0.5, &tailed).unwrap() - exact).abs();
        assert!(e1 < 1e-3 * e0, "{e0} {e1}");
    }

    #[test]
    fn reflection_at_matched_truncation() {
        let b = SeriesBudget::new(1_000, 1_000, 0).unwrap();
        for &x in &[0.1, 0.3, 0.45] {
            assert_relative_eq!(
                image_sum_f(5, x, &b).unwrap(),
                image_sum_f(5, 1.0 - x, &b).unwrap(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn chunking_is_deterministic() {
        let b = SeriesBudget::new(200_000, 1_000, 1).unwrap();
        let a = image_sum_f(3, 0.37, &b).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let single = pool.install(|| image_sum_f(3, 0.37, &b).unwrap());
        assert_eq!(a.to_bits(), single.to_bits());
    }

    #[test]
    fn rejects_bad_arguments() {
        let b = SeriesBudget::default();
        assert!(image_sum_f(1, 0.5, &b).is_err());
        assert!(image_sum_f(4, 1.0, &b).is_err());
    }
}
