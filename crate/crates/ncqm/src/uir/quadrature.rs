//! Gauss–Hermite quadrature.

use std::f64::consts::PI;

/// Nodes and weights for `∫ g(x) e^{−x²} dx ≈ Σ wᵢ g(xᵢ)`, by Newton iteration on the
/// orthonormal Hermite recurrence. Nodes are returned in increasing order.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "need at least one node");
    let pim4 = PI.powf(-0.25);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 3e-14 * z.abs().max(1.0) {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    x.reverse();
    w.reverse();
    (x, w)
}

/// Nodes with weights multiplied by `e^{xᵢ²}`, for `∫ g(x) dx ≈ Σ wᵢ g(xᵢ)`.
pub fn folded(n: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_hermite(n);
    let wf = x.iter().zip(&w).map(|(xi, wi)| wi * (xi * xi).exp()).collect();
    (x, wf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments() {
        let (x, w) = gauss_hermite(20);
        let m = |k: i32| x.iter().zip(&w).map(|(a, b)| b * a.powi(k)).sum::<f64>();
        assert!((m(0) - PI.sqrt()).abs() < 1e-13);
        assert!(m(1).abs() < 1e-13);
        assert!((m(2) - PI.sqrt() / 2.0).abs() < 1e-13);
        assert!((m(4) - 3.0 * PI.sqrt() / 4.0).abs() < 1e-12);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn odd_count_has_zero_node() {
        let (x, w) = gauss_hermite(5);
        assert!(x[2].abs() < 1e-15);
        assert!((w.iter().sum::<f64>() - PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn folded_integrates_gaussian() {
        let (x, w) = folded(64);
        let s: f64 = x.iter().zip(&w).map(|(a, b)| b * (-(a - 0.7) * (a - 0.7)).exp()).sum();
        assert!((s - PI.sqrt()).abs() < 1e-12);
    }
}
