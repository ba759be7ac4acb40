//! Shared floating-point helpers.

use std::f64::consts::TAU;

/// Cosine arguments above this magnitude are range-reduced before
/// evaluation; below it, reduction would only add rounding error.
const REDUCE_ABOVE: f64 = 1e8;

/// Radicands and residuals more negative than this signal a bug rather
/// than floating-point dust.
pub(crate) const NEGATIVE_TOL: f64 = 1e-9;

/// cos^2(angle / 2), clamped to [0, 1].
pub(crate) fn cos_sq_half(angle: f64) -> f64 {
    let mut half = 0.5 * angle;
    if half.abs() > REDUCE_ABOVE {
        half %= TAU;
    }
    let c = half.cos();
    (c * c).clamp(0.0, 1.0)
}

/// sqrt of a quantity that is nonnegative up to rounding. `None` when the
/// radicand is more negative than [`NEGATIVE_TOL`].
pub(crate) fn sqrt_clamped(radicand: f64) -> Option<f64> {
    if radicand < -NEGATIVE_TOL {
        None
    } else {
        Some(radicand.max(0.0).sqrt())
    }
}

/// Binomial coefficient C(n, k).
pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Advance `idx` to the next l-combination of {0, .., n-1} in
/// lexicographic order. Returns false after the last combination.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let l = idx.len();
    let mut i = l;
    while i > 0 {
        i -= 1;
        if idx[i] < n - l + i {
            idx[i] += 1;
            for j in i + 1..l {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_sq_half_basics() {
        assert_eq!(cos_sq_half(0.0), 1.0);
        assert!((cos_sq_half(std::f64::consts::PI) - 0.0).abs() < 1e-30);
        assert!((cos_sq_half(std::f64::consts::PI / 2.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 5), 1);
        assert_eq!(binomial(4, 7), 0);
    }

    #[test]
    fn combinations_cover_all() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen, vec![
            vec![0, 1], vec![0, 2], vec![0, 3],
            vec![1, 2], vec![1, 3], vec![2, 3],
        ]);
    }
}
