//! Symbols acting on sampled functions, and the partial Fourier automorphism.

use super::{Alphabet, Mono, WeylPoly};
use crate::error::{Error, Result};
use crate::scalar::{Ring, C64};

/// Central-difference weights of the `n`-th derivative: offsets `(n/2 − k)·h`, weights `(−1)ᵏ C(n,k)/hⁿ`.
fn stencil(n: u32, h: f64) -> Vec<(f64, f64)> {
    let mut w = 1.0;
    (0..=n)
        .map(|k| {
            if k > 0 {
                w *= -((n - k + 1) as f64) / k as f64;
            }
            ((n as f64 / 2.0 - k as f64) * h, w / h.powi(n as i32))
        })
        .collect()
}

/// Evaluates the operator `a` on `f` at `point`, differentiating by central differences with step `h`.
///
/// `point` has one coordinate for the one-dimensional alphabet and two for the planar one.
pub fn apply_symbol(a: &WeylPoly<C64>, f: &dyn Fn(&[f64]) -> C64, point: &[f64], h: f64) -> Result<C64> {
    let dim = match a.alphabet() {
        Alphabet::Real1 => 1,
        Alphabet::Real2 => 2,
        Alphabet::Complex => {
            return Err(Error::AlphabetMismatch(
                Alphabet::Complex.to_string(),
                "a real alphabet".into(),
            ));
        }
    };
    if point.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: point.len(),
        });
    }
    let mut total = C64::new(0.0, 0.0);
    for (m, c) in a.terms() {
        let mut deriv = C64::new(0.0, 0.0);
        for (o1, w1) in stencil(m[2], h) {
            for (o2, w2) in stencil(m[3], h) {
                let mut x = point.to_vec();
                x[0] += o1;
                if dim == 2 {
                    x[1] += o2;
                }
                deriv += f(&x) * (w1 * w2);
            }
        }
        let pos = point[0].powi(m[0] as i32) * if dim == 2 { point[1].powi(m[1] as i32) } else { 1.0 };
        total += *c * deriv * pos;
    }
    Ok(total)
}

/// The algebra automorphism `xᵢ ↦ a·∂ᵢ`, `∂ᵢ ↦ b·xᵢ` on coordinate `i`, the symbol-level
/// image of a partial Fourier transform in that coordinate. Requires `a·b = −1`.
pub fn momentum_map<C: Ring>(p: &WeylPoly<C>, i: usize, a: &C, b: &C) -> Result<WeylPoly<C>> {
    if a.clone() * b.clone() != -C::one() {
        return Err(Error::Precondition("momentum map needs a*b = -1".into()));
    }
    let al = p.alphabet();
    let x_img = WeylPoly::d(al, i).scale(a);
    let d_img = WeylPoly::x(al, i).scale(b);
    let mut out = WeylPoly::zero(al);
    for (m, c) in p.terms() {
        let mut rest: Mono = *m;
        rest[i] = 0;
        rest[2 + i] = 0;
        let mut left = [0u32; 4];
        let mut right = [0u32; 4];
        for k in 0..2 {
            left[k] = rest[k];
            right[2 + k] = rest[2 + k];
        }
        let term = WeylPoly::monomial(al, left, c.clone())
            .mul(&x_img.pow(m[i]))?
            .mul(&d_img.pow(m[2 + i]))?
            .mul(&WeylPoly::monomial(al, right, C::one()))?;
        out = out.add(&term)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::scalar::CRat;
    use num::Complex;

    #[test]
    fn derivative_of_gaussian() {
        let f = |x: &[f64]| C64::new((-(x[0] * x[0] + x[1] * x[1]) / 2.0).exp(), 0.0);
        let d1 = WeylPoly::<C64>::d(Alphabet::Real2, 0);
        let v = apply_symbol(&d1, &f, &[1.0, 0.0], 1e-5).unwrap();
        assert!((v - C64::new(-(-0.5f64).exp(), 0.0)).norm() < 1e-8);
        let x1 = WeylPoly::<C64>::x(Alphabet::Real2, 0);
        let v = apply_symbol(&x1, &f, &[2.0, 3.0], 1e-5).unwrap();
        assert_eq!(v, f(&[2.0, 3.0]) * 2.0);
        let one = WeylPoly::<C64>::one(Alphabet::Real2);
        assert_eq!(apply_symbol(&one, &f, &[0.3, 0.1], 1e-5).unwrap(), f(&[0.3, 0.1]));
        assert!(apply_symbol(&one, &f, &[0.3], 1e-5).is_err());
    }

    #[test]
    fn second_derivative_stencil() {
        let f = |x: &[f64]| C64::new(x[0].sin(), 0.0);
        let d2 = WeylPoly::<C64>::d(Alphabet::Real1, 0).pow(2);
        let v = apply_symbol(&d2, &f, &[0.7], 1e-4).unwrap();
        assert!((v.re + 0.7f64.sin()).abs() < 1e-6);
    }

    #[test]
    fn momentum_map_preserves_brackets() {
        let al = Alphabet::Real2;
        let i: CRat = Complex::new(rat(0, 1), rat(1, 1));
        let a = i.clone() * Complex::new(rat(2, 1), rat(0, 1));
        let b = i * Complex::new(rat(1, 2), rat(0, 1));
        let x2 = WeylPoly::<CRat>::x(al, 1);
        let d2 = WeylPoly::<CRat>::d(al, 1);
        let mx = momentum_map(&x2, 1, &a, &b).unwrap();
        let md = momentum_map(&d2, 1, &a, &b).unwrap();
        assert_eq!(md.commutator(&mx).unwrap(), WeylPoly::one(al));
        let x1d2 = WeylPoly::<CRat>::monomial(al, [1, 1, 0, 1], Complex::new(rat(1, 1), rat(0, 1)));
        let m = momentum_map(&x1d2, 1, &a, &b).unwrap();
        // x1·(a∂2)·(b x2) = ab·x1(x2∂2 + 1)
        let ab = a.clone() * b.clone();
        let expect = WeylPoly::monomial(al, [1, 1, 0, 1], ab.clone())
            .add(&WeylPoly::monomial(al, [1, 0, 0, 0], ab))
            .unwrap();
        assert_eq!(m, expect);
        assert!(momentum_map(&x2, 1, &a, &a).is_err());
    }
}
