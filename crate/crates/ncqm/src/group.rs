//! The group G_NC: the translation group of ℝ⁴ with three central extensions.
//!
//! Elements are written `(θ, φ, ψ, q, p)` with `q, p ∈ ℝ²`; the extension
//! constants `(α, β, γ)` are passed explicitly to every operation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Mat8;
use crate::scalar::{Rational, Real};

/// The three strictly positive extension constants.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionParams<R> {
    pub alpha: R,
    pub beta: R,
    pub gamma: R,
}

impl<R: Real> ExtensionParams<R> {
    pub fn new(alpha: R, beta: R, gamma: R) -> Result<Self> {
        if !(alpha > R::zero() && beta > R::zero() && gamma > R::zero()) {
            return Err(Error::InvalidParams("alpha, beta, gamma must be > 0".into()));
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// α = β = γ = 1.
    pub fn unit() -> Self {
        Self {
            alpha: R::one(),
            beta: R::one(),
            gamma: R::one(),
        }
    }

    pub fn to_f64(&self) -> ExtensionParams<f64> {
        ExtensionParams {
            alpha: self.alpha.to_f64(),
            beta: self.beta.to_f64(),
            gamma: self.gamma.to_f64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<R> {
    pub theta: R,
    pub phi: R,
    pub psi: R,
    pub q: [R; 2],
    pub p: [R; 2],
}

/// `⟨a, b⟩ = a₁b₁ + a₂b₂`.
pub fn dot<R: Real>(a: &[R; 2], b: &[R; 2]) -> R {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
}

/// `a ∧ b = a₁b₂ − a₂b₁`.
pub fn wedge<R: Real>(a: &[R; 2], b: &[R; 2]) -> R {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

impl<R: Real> GroupElement<R> {
    pub fn new(theta: R, phi: R, psi: R, q: [R; 2], p: [R; 2]) -> Self {
        Self { theta, phi, psi, q, p }
    }

    pub fn identity() -> Self {
        Self::new(
            R::zero(),
            R::zero(),
            R::zero(),
            [R::zero(), R::zero()],
            [R::zero(), R::zero()],
        )
    }

    /// Coordinates in the order `(θ, φ, ψ, q₁, q₂, p₁, p₂)`.
    pub fn coords(&self) -> [R; 7] {
        [
            self.theta.clone(),
            self.phi.clone(),
            self.psi.clone(),
            self.q[0].clone(),
            self.q[1].clone(),
            self.p[0].clone(),
            self.p[1].clone(),
        ]
    }

    pub fn from_coords(c: [R; 7]) -> Self {
        let [theta, phi, psi, q1, q2, p1, p2] = c;
        Self::new(theta, phi, psi, [q1, q2], [p1, p2])
    }

    pub fn to_f64(&self) -> GroupElement<f64> {
        GroupElement::from_coords(self.coords().map(|x| x.to_f64()))
    }
}

/// Group law.
pub fn compose<R: Real>(g1: &GroupElement<R>, g2: &GroupElement<R>, params: &ExtensionParams<R>) -> GroupElement<R> {
    let h = R::half();
    GroupElement {
        theta: g1.theta.clone()
            + g2.theta.clone()
            + h.clone() * params.alpha.clone() * (dot(&g1.q, &g2.p) - dot(&g1.p, &g2.q)),
        phi: g1.phi.clone() + g2.phi.clone() + h.clone() * params.beta.clone() * wedge(&g1.p, &g2.p),
        psi: g1.psi.clone() + g2.psi.clone() + h * params.gamma.clone() * wedge(&g1.q, &g2.q),
        q: [g1.q[0].clone() + g2.q[0].clone(), g1.q[1].clone() + g2.q[1].clone()],
        p: [g1.p[0].clone() + g2.p[0].clone(), g1.p[1].clone() + g2.p[1].clone()],
    }
}

/// The cocycle terms vanish for `(q, p)` against `(−q, −p)`, so the inverse is plain negation.
pub fn inverse<R: Real>(g: &GroupElement<R>, _params: &ExtensionParams<R>) -> GroupElement<R> {
    GroupElement::from_coords(g.coords().map(|x| -x))
}

/// The 8×8 unipotent upper-triangular realization.
pub fn to_matrix<R: Real>(g: &GroupElement<R>, params: &ExtensionParams<R>) -> Mat8<R> {
    let h = R::half();
    let a = h.clone() * params.alpha.clone();
    let b = h.clone() * params.beta.clone();
    let c = h * params.gamma.clone();
    let [q1, q2] = g.q.clone();
    let [p1, p2] = g.p.clone();
    let mut m = Mat8::identity(8);
    m.put(1, 4, -(a.clone() * p1.clone()));
    m.put(1, 5, -(a.clone() * p2.clone()));
    m.put(1, 6, a.clone() * q1.clone());
    m.put(1, 7, a * q2.clone());
    m.put(1, 8, g.theta.clone());
    m.put(2, 6, -(b.clone() * p2.clone()));
    m.put(2, 7, b * p1.clone());
    m.put(2, 8, g.phi.clone());
    m.put(3, 4, -(c.clone() * q2.clone()));
    m.put(3, 5, c * q1.clone());
    m.put(3, 8, g.psi.clone());
    m.put(4, 8, q1);
    m.put(5, 8, q2);
    m.put(6, 8, p1);
    m.put(7, 8, p2);
    m
}

/// Reads an element back from a matrix of the unipotent form, checking every entry.
pub fn from_matrix<R: Real>(m: &Mat8<R>, params: &ExtensionParams<R>) -> Result<GroupElement<R>> {
    let g = GroupElement::new(
        m.at(1, 8).clone(),
        m.at(2, 8).clone(),
        m.at(3, 8).clone(),
        [m.at(4, 8).clone(), m.at(5, 8).clone()],
        [m.at(6, 8).clone(), m.at(7, 8).clone()],
    );
    if &to_matrix(&g, params) != m {
        return Err(Error::Precondition(
            "matrix is not in the group's unipotent form".into(),
        ));
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct Repr {
    theta: String,
    phi: String,
    psi: String,
    q: [String; 2],
    p: [String; 2],
}

impl<R: Real> GroupElement<R> {
    pub fn to_json(&self) -> serde_json::Value {
        let r = Repr {
            theta: self.theta.encode(),
            phi: self.phi.encode(),
            psi: self.psi.encode(),
            q: self.q.clone().map(|x| x.encode()),
            p: self.p.clone().map(|x| x.encode()),
        };
        serde_json::to_value(r).expect("plain struct serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let r: Repr = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let d = |s: &String| R::decode(s);
        Ok(Self::new(
            d(&r.theta)?,
            d(&r.phi)?,
            d(&r.psi)?,
            [d(&r.q[0])?, d(&r.q[1])?],
            [d(&r.p[0])?, d(&r.p[1])?],
        ))
    }
}

/// An element of either scalar kind, for inputs whose kind is only known at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyElement {
    Exact(GroupElement<Rational>),
    Float(GroupElement<f64>),
}

impl AnyElement {
    /// Decodes JSON, inferring the kind; mixed kinds within one element are rejected.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        if let Ok(g) = GroupElement::<Rational>::from_json(v) {
            return Ok(Self::Exact(g));
        }
        match GroupElement::<f64>::from_json(v) {
            Ok(g) => Ok(Self::Float(g)),
            Err(Error::KindMismatch(_)) => Err(Error::KindMismatch(
                "element mixes rational and float coordinates".into(),
            )),
            Err(e) => Err(e),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Self::Exact(g) => g.to_json(),
            Self::Float(g) => g.to_json(),
        }
    }
}

/// Composition of run-time-kinded elements; both must share the kind of `params`.
pub fn compose_any(g1: &AnyElement, g2: &AnyElement, params: &ExtensionParams<Rational>) -> Result<AnyElement> {
    match (g1, g2) {
        (AnyElement::Exact(a), AnyElement::Exact(b)) => Ok(AnyElement::Exact(compose(a, b, params))),
        (AnyElement::Float(a), AnyElement::Float(b)) => Ok(AnyElement::Float(compose(a, b, &params.to_f64()))),
        _ => Err(Error::KindMismatch(
            "cannot compose a rational element with a float element".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn el(c: [i64; 7]) -> GroupElement<Rational> {
        GroupElement::from_coords(c.map(|x| rat(x, 1)))
    }

    #[test]
    fn identity_is_neutral() {
        let p = ExtensionParams::unit();
        let g = el([1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(compose(&GroupElement::identity(), &g, &p), g);
        assert_eq!(compose(&g, &GroupElement::identity(), &p), g);
    }

    #[test]
    fn unit_constants_example() {
        let p = ExtensionParams::unit();
        let a = el([0, 0, 0, 1, 0, 0, 0]);
        let b = el([0, 0, 0, 0, 0, 1, 0]);
        let c = compose(&a, &b, &p);
        assert_eq!(
            c,
            GroupElement::new(
                rat(1, 2),
                rat(0, 1),
                rat(0, 1),
                [rat(1, 1), rat(0, 1)],
                [rat(1, 1), rat(0, 1)]
            )
        );
        assert_eq!(to_matrix(&c, &p), &to_matrix(&a, &p) * &to_matrix(&b, &p));
    }

    #[test]
    fn inverse_of_translation() {
        let p = ExtensionParams::unit();
        let g = el([0, 0, 0, 1, 0, 0, 1]);
        let gi = inverse(&g, &p);
        assert_eq!(compose(&gi, &g, &p), GroupElement::identity());
        assert_eq!(inverse(&GroupElement::identity(), &p), GroupElement::identity());
    }

    #[test]
    fn theta_only_matrix() {
        let p = ExtensionParams::unit();
        let m = to_matrix(&el([3, 0, 0, 0, 0, 0, 0]), &p);
        let mut e = Mat8::identity(8);
        e.put(1, 8, rat(3, 1));
        assert_eq!(m, e);
        assert_eq!(to_matrix(&GroupElement::identity(), &p), Mat8::identity(8));
    }

    #[test]
    fn json_round_trip_and_kind_errors() {
        let g = el([1, -2, 3, 4, 5, 6, 7]);
        let v = g.to_json();
        assert_eq!(v["theta"], "1/1");
        assert_eq!(AnyElement::from_json(&v).unwrap(), AnyElement::Exact(g.clone()));
        let f = AnyElement::Float(g.to_f64());
        assert!(matches!(
            AnyElement::from_json(&f.to_json()).unwrap(),
            AnyElement::Float(_)
        ));
        let mut mixed = v.clone();
        mixed["phi"] = serde_json::json!("0.5");
        assert!(matches!(AnyElement::from_json(&mixed), Err(Error::KindMismatch(_))));
        let p = ExtensionParams::unit();
        assert!(matches!(
            compose_any(&AnyElement::Exact(g), &f, &p),
            Err(Error::KindMismatch(_))
        ));
    }

    #[test]
    fn rejects_nonpositive_params() {
        assert!(ExtensionParams::new(rat(1, 1), rat(0, 1), rat(1, 1)).is_err());
    }
}
