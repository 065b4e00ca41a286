//! The Lie algebra of G_NC.
//!
//! Basis `(X₁,…,X₇)`: `X₁, X₂` generate the `p₁, p₂` directions (named `Q₁, Q₂`),
//! `X₃, X₄` the `q₁, q₂` directions (named `P₁, P₂`), and `X₅, X₆, X₇` the central
//! directions `Θ, Φ, Ψ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{from_matrix, ExtensionParams, GroupElement};
use crate::matrix::Mat8;
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<R> {
    pub x: [R; 7],
}

/// Named basis vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    Q1,
    Q2,
    P1,
    P2,
    Theta,
    Phi,
    Psi,
}

impl Basis {
    pub const ALL: [Basis; 7] = [
        Basis::Q1,
        Basis::Q2,
        Basis::P1,
        Basis::P2,
        Basis::Theta,
        Basis::Phi,
        Basis::Psi,
    ];

    /// Zero-based coordinate index.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl<R: Real> AlgebraElement<R> {
    pub fn new(x: [R; 7]) -> Self {
        Self { x }
    }

    pub fn zero() -> Self {
        Self {
            x: std::array::from_fn(|_| R::zero()),
        }
    }

    pub fn basis(b: Basis) -> Self {
        let mut e = Self::zero();
        e.x[b.index()] = R::one();
        e
    }

    pub fn scale(&self, c: &R) -> Self {
        Self {
            x: self.x.clone().map(|v| c.clone() * v),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            x: std::array::from_fn(|i| self.x[i].clone() + o.x[i].clone()),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            x: self.x.clone().map(|v| -v),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "x": self.x.iter().map(Real::encode).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let xs = v["x"]
            .as_array()
            .ok_or_else(|| Error::Parse("expected {\"x\": [7 scalars]}".into()))?;
        if xs.len() != 7 {
            return Err(Error::DimensionMismatch {
                expected: 7,
                got: xs.len(),
            });
        }
        let mut out = Self::zero();
        for (slot, s) in out.x.iter_mut().zip(xs) {
            *slot = R::decode(s.as_str().ok_or_else(|| Error::Parse("scalars are strings".into()))?)?;
        }
        Ok(out)
    }
}

/// Lie bracket in coordinates; only the central components can be nonzero.
pub fn bracket<R: Real>(
    x: &AlgebraElement<R>,
    y: &AlgebraElement<R>,
    params: &ExtensionParams<R>,
) -> AlgebraElement<R> {
    let [x1, x2, x3, x4, ..] = x.x.clone();
    let [y1, y2, y3, y4, ..] = y.x.clone();
    let mut out = AlgebraElement::zero();
    out.x[4] = params.alpha.clone()
        * (x3.clone() * y1.clone() + x4.clone() * y2.clone() - x1.clone() * y3.clone() - x2.clone() * y4.clone());
    out.x[5] = params.beta.clone() * (x1 * y2 - x2 * y1);
    out.x[6] = params.gamma.clone() * (x3 * y4 - x4 * y3);
    out
}

/// The 8×8 strictly upper-triangular realization.
pub fn algebra_matrix<R: Real>(x: &AlgebraElement<R>, params: &ExtensionParams<R>) -> Mat8<R> {
    let h = R::half();
    let a = h.clone() * params.alpha.clone();
    let b = h.clone() * params.beta.clone();
    let c = h * params.gamma.clone();
    let [x1, x2, x3, x4, x5, x6, x7] = x.x.clone();
    let mut m = Mat8::zeros(8);
    m.put(1, 4, -(a.clone() * x1.clone()));
    m.put(1, 5, -(a.clone() * x2.clone()));
    m.put(1, 6, a.clone() * x3.clone());
    m.put(1, 7, a * x4.clone());
    m.put(1, 8, x5);
    m.put(2, 6, -(b.clone() * x2.clone()));
    m.put(2, 7, b * x1.clone());
    m.put(2, 8, x6);
    m.put(3, 4, -(c.clone() * x4.clone()));
    m.put(3, 5, c * x3.clone());
    m.put(3, 8, x7);
    m.put(4, 8, x3);
    m.put(5, 8, x4);
    m.put(6, 8, x1);
    m.put(7, 8, x2);
    m
}

/// Matrix exponential, summed until the nilpotent powers vanish, then read back as a group element.
pub fn exp<R: Real>(x: &AlgebraElement<R>, params: &ExtensionParams<R>) -> GroupElement<R> {
    let n = algebra_matrix(x, params);
    let mut sum = Mat8::identity(8);
    let mut term = Mat8::identity(8);
    let mut k = 0i64;
    loop {
        k += 1;
        term = (&term * &n).scale(&R::from_ratio(1, k));
        if term.is_zero() {
            break;
        }
        assert!(k < 8, "algebra matrix must be nilpotent");
        sum = &sum + &term;
    }
    from_matrix(&sum, params).expect("exponential of an algebra matrix lies in the group")
}

/// Power at which the algebra matrix first vanishes.
pub fn nilpotency_degree<R: Real>(x: &AlgebraElement<R>, params: &ExtensionParams<R>) -> usize {
    let n = algebra_matrix(x, params);
    let mut p = Mat8::identity(8);
    for k in 1..=8 {
        p = &p * &n;
        if p.is_zero() {
            return k;
        }
    }
    unreachable!("strictly upper-triangular 8×8 matrices are nilpotent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn b(v: Basis) -> AlgebraElement<Rational> {
        AlgebraElement::basis(v)
    }

    #[test]
    fn structure_constants() {
        let p = ExtensionParams::new(rat(2, 1), rat(3, 1), rat(5, 1)).unwrap();
        assert_eq!(
            bracket(&b(Basis::P1), &b(Basis::Q1), &p),
            b(Basis::Theta).scale(&rat(2, 1))
        );
        assert_eq!(
            bracket(&b(Basis::P2), &b(Basis::Q2), &p),
            b(Basis::Theta).scale(&rat(2, 1))
        );
        assert_eq!(
            bracket(&b(Basis::Q1), &b(Basis::Q2), &p),
            b(Basis::Phi).scale(&rat(3, 1))
        );
        assert_eq!(
            bracket(&b(Basis::P1), &b(Basis::P2), &p),
            b(Basis::Psi).scale(&rat(5, 1))
        );
        assert_eq!(bracket(&b(Basis::P1), &b(Basis::Q2), &p), AlgebraElement::zero());
        for z in [Basis::Theta, Basis::Phi, Basis::Psi] {
            for x in Basis::ALL {
                assert_eq!(bracket(&b(z), &b(x), &p), AlgebraElement::zero());
            }
        }
    }

    #[test]
    fn theta_matrix_entry() {
        let p = ExtensionParams::unit();
        let mut e = Mat8::zeros(8);
        e.put(1, 8, rat(1, 1));
        assert_eq!(algebra_matrix(&b(Basis::Theta), &p), e);
        assert!(algebra_matrix(&AlgebraElement::<Rational>::zero(), &p).is_zero());
    }

    #[test]
    fn exp_one_parameter_subgroups() {
        let p = ExtensionParams::unit();
        let t = rat(7, 3);
        assert_eq!(exp(&AlgebraElement::zero(), &p), GroupElement::identity());
        let g = exp(&b(Basis::Theta).scale(&t), &p);
        assert_eq!(g.theta, t);
        let g = exp(&b(Basis::Q1).scale(&t), &p);
        assert_eq!(g.p[0], t);
        let g = exp(&b(Basis::P2).scale(&t), &p);
        assert_eq!(g.q[1], t);
    }

    #[test]
    fn square_of_algebra_matrix_vanishes() {
        let p = ExtensionParams::new(rat(1, 2), rat(3, 1), rat(2, 7)).unwrap();
        let x = AlgebraElement::new([1, 2, 3, 4, 5, 6, 7].map(|v| rat(v, 1)));
        assert_eq!(nilpotency_degree(&x, &p), 2);
    }

    #[test]
    fn json_round_trip() {
        let x = AlgebraElement::new([1, 2, 3, 4, 5, 6, 7].map(|v| rat(v, 3)));
        assert_eq!(AlgebraElement::<Rational>::from_json(&x.to_json()).unwrap(), x);
    }
}
