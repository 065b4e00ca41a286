//! Normal-ordered polynomials in the Weyl algebra.
//!
//! A monomial `[a, b, c, d]` stands for `x₁ᵃ x₂ᵇ ∂₁ᶜ ∂₂ᵈ`, with every position symbol to
//! the left of every derivative symbol and `[∂ᵢ, xⱼ] = δᵢⱼ`. The one-dimensional
//! alphabet uses slots 0 and 2 only; the complex alphabet reads the slots as
//! `z, z̄, ∂_z, ∂_z̄`.

pub mod generators;
pub mod numeric;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{CRat, Ring, C64};

pub use generators::{
    commutator_table, expected_table, gauge_generators, CaseLabel, CommutatorTable, GaugeCase, GaugeParams, Generators,
};
pub use numeric::{apply_symbol, momentum_map};

/// Variable set of a [`WeylPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    /// `x₁, x₂, ∂₁, ∂₂`.
    Real2,
    /// `x, ∂`.
    Real1,
    /// `z, z̄, ∂_z, ∂_z̄`.
    Complex,
}

impl Alphabet {
    fn names(self) -> [&'static str; 4] {
        match self {
            Alphabet::Real2 => ["x1", "x2", "∂1", "∂2"],
            Alphabet::Real1 => ["x", "", "∂", ""],
            Alphabet::Complex => ["z", "z̄", "∂z", "∂z̄"],
        }
    }

    fn admits(self, m: &Mono) -> bool {
        self != Alphabet::Real1 || (m[1] == 0 && m[3] == 0)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Exponents `[x₁, x₂, ∂₁, ∂₂]`.
pub type Mono = [u32; 4];

#[derive(Clone, Debug, PartialEq)]
pub struct WeylPoly<C> {
    alphabet: Alphabet,
    terms: BTreeMap<Mono, C>,
}

pub type ExactPoly = WeylPoly<CRat>;
pub type FloatPoly = WeylPoly<C64>;

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn falling(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64)
}

impl<C: Ring> WeylPoly<C> {
    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: Alphabet, c: C) -> Self {
        Self::monomial(alphabet, [0; 4], c)
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::constant(alphabet, C::one())
    }

    /// `c · m`.
    ///
    /// # Panics
    /// If `m` uses a slot the alphabet lacks.
    pub fn monomial(alphabet: Alphabet, m: Mono, c: C) -> Self {
        assert!(alphabet.admits(&m), "monomial {m:?} outside alphabet {alphabet}");
        let mut p = Self::zero(alphabet);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Position symbol of coordinate `i` (0 or 1).
    pub fn x(alphabet: Alphabet, i: usize) -> Self {
        let mut m = [0; 4];
        m[i] = 1;
        Self::monomial(alphabet, m, C::one())
    }

    /// Derivative symbol of coordinate `i` (0 or 1).
    pub fn d(alphabet: Alphabet, i: usize) -> Self {
        let mut m = [0; 4];
        m[2 + i] = 1;
        Self::monomial(alphabet, m, C::one())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar if this is a multiple of the identity.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    fn accumulate(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(C::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                self.alphabet.to_string(),
                other.alphabet.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.alphabet);
        for (m, v) in &self.terms {
            out.accumulate(*m, c.clone() * v.clone());
        }
        out
    }

    /// Product in the Weyl algebra.
    ///
    /// Uses `∂ᶜ xᵇ = Σₖ C(c,k) C(b,k) k! xᵇ⁻ᵏ ∂ᶜ⁻ᵏ` per coordinate.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.alphabet);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c0 = ca.clone() * cb.clone();
                for k1 in 0..=ma[2].min(mb[0]) {
                    let w1 = binom(ma[2], k1) * binom(mb[0], k1) * falling(k1, k1);
                    for k2 in 0..=ma[3].min(mb[1]) {
                        let w2 = binom(ma[3], k2) * binom(mb[1], k2) * falling(k2, k2);
                        let m = [
                            ma[0] + mb[0] - k1,
                            ma[1] + mb[1] - k2,
                            ma[2] + mb[2] - k1,
                            ma[3] + mb[3] - k2,
                        ];
                        out.accumulate(m, c0.clone() * C::from_int(w1 * w2));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.alphabet), |acc, _| acc.mul(self).expect("same alphabet"))
    }

    /// Applies the operator to a commutative polynomial in the position symbols,
    /// given as exponent pairs `[a, b] ↦ coefficient`.
    pub fn apply_to_poly(&self, p: &BTreeMap<[u32; 2], C>) -> BTreeMap<[u32; 2], C> {
        let mut out: BTreeMap<[u32; 2], C> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (e, v) in p {
                if e[0] < m[2] || e[1] < m[3] {
                    continue;
                }
                let w = falling(e[0], m[2]) * falling(e[1], m[3]);
                let key = [e[0] - m[2] + m[0], e[1] - m[3] + m[1]];
                let add = c.clone() * v.clone() * C::from_int(w);
                let slot = out.entry(key).or_insert_with(C::zero);
                *slot = slot.clone() + add;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> WeylPoly<D> {
        let mut out = WeylPoly::zero(self.alphabet);
        for (m, c) in &self.terms {
            out.accumulate(*m, f(c));
        }
        out
    }

    pub fn to_c64(&self) -> FloatPoly {
        self.map_coeffs(Ring::to_c64)
    }

    /// Largest coefficient-wise modulus of `self − other`.
    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        let d = self.sub(other)?;
        Ok(d.terms.values().map(|c| c.to_c64().norm()).fold(0.0, f64::max))
    }

    /// `[{"mono": [a,b,c,d], "re": …, "im": …}, …]`.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (re, im) = c.encode_parts();
                serde_json::json!({ "mono": m, "re": re, "im": im })
            })
            .collect();
        serde_json::Value::Array(items)
    }

    pub fn from_json(alphabet: Alphabet, v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Term {
            mono: Mono,
            re: String,
            im: String,
        }
        let items: Vec<Term> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(alphabet);
        for t in items {
            if !alphabet.admits(&t.mono) {
                return Err(Error::Parse(format!(
                    "monomial {:?} outside alphabet {alphabet}",
                    t.mono
                )));
            }
            out.accumulate(t.mono, C::decode_parts(&t.re, &t.im)?);
        }
        Ok(out)
    }

    /// Renders e.g. `x1 + (1/2i)∂2`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = self.alphabet.names();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut sym = String::new();
                for (k, &e) in m.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => sym.push_str(names[k]),
                        _ => sym.push_str(&format!("{}^{e}", names[k])),
                    }
                }
                let coef = c.render();
                match (sym.is_empty(), coef.as_str()) {
                    (true, _) => coef,
                    (false, "1") => sym,
                    (false, "-1") => format!("-{sym}"),
                    (false, "i" | "-i") => format!("{coef}{sym}"),
                    (false, _) if coef.contains(['+', 'i', '/']) || coef[1..].contains('-') => format!("({coef}){sym}"),
                    _ => format!("{coef}{sym}"),
                }
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<C: Ring> fmt::Display for WeylPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num::Complex;

    type P = ExactPoly;
    const A: Alphabet = Alphabet::Real2;

    fn c(re: i64, im: i64) -> CRat {
        Complex::new(rat(re, 1), rat(im, 1))
    }

    #[test]
    fn defining_relation() {
        let x1 = P::x(A, 0);
        let d1 = P::d(A, 0);
        let prod = d1.mul(&x1).unwrap();
        assert_eq!(prod, x1.mul(&d1).unwrap().add(&P::one(A)).unwrap());
        assert_eq!(x1.mul(&d1).unwrap(), P::monomial(A, [1, 0, 1, 0], c(1, 0)));
        assert_eq!(d1.commutator(&x1).unwrap(), P::one(A));
        assert!(x1.commutator(&P::x(A, 1)).unwrap().is_zero());
        assert!(P::d(A, 1).commutator(&x1).unwrap().is_zero());
    }

    #[test]
    fn higher_reordering() {
        // ∂²x² = x²∂² + 4x∂ + 2
        let d2 = P::d(A, 0).pow(2);
        let x2 = P::x(A, 0).pow(2);
        let expect = P::monomial(A, [2, 0, 2, 0], c(1, 0))
            .add(&P::monomial(A, [1, 0, 1, 0], c(4, 0)))
            .unwrap()
            .add(&P::constant(A, c(2, 0)))
            .unwrap();
        assert_eq!(d2.mul(&x2).unwrap(), expect);
    }

    #[test]
    fn alphabet_mixing_rejected() {
        let a = P::x(A, 0);
        let b = P::x(Alphabet::Real1, 0);
        assert!(matches!(a.mul(&b), Err(Error::AlphabetMismatch(..))));
    }

    #[test]
    fn apply_matches_product() {
        let op = P::d(A, 0).mul(&P::x(A, 0)).unwrap().add(&P::d(A, 1).pow(2)).unwrap();
        let mut f = BTreeMap::new();
        f.insert([2, 3], c(1, 0));
        let out = op.apply_to_poly(&f);
        // ∂₁(x₁·x₁²x₂³) + ∂₂²(x₁²x₂³) = 3x₁²x₂³ + 6x₁²x₂
        assert_eq!(out.get(&[2, 3]), Some(&c(3, 0)));
        assert_eq!(out.get(&[2, 1]), Some(&c(6, 0)));
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn json_and_pretty() {
        let half_i = Complex::new(rat(0, 1), rat(1, 2));
        let p = P::x(A, 0).add(&P::d(A, 1).scale(&half_i)).unwrap();
        assert_eq!(P::from_json(A, &p.to_json()).unwrap(), p);
        assert_eq!(p.pretty(), "(1/2i)∂2 + x1");
        assert_eq!(P::x(A, 0).neg().add(&P::x(A, 1)).unwrap().pretty(), "x2 - x1");
        assert_eq!(P::zero(A).pretty(), "0");
    }
}
