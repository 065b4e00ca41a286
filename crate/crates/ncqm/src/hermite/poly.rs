//! Commutative polynomials in `z, z̄` and exact square roots of rationals.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{CRat, Rational, Ring, C64};
use crate::weyl::{Alphabet, WeylPoly};

/// `Σ c_{mn} zᵐ z̄ⁿ`, keyed by `[m, n]`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<C> {
    terms: BTreeMap<[u32; 2], C>,
}

impl<C: Ring> BiPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c zᵐ z̄ⁿ`.
    pub fn monomial(m: u32, n: u32, c: C) -> Self {
        Self::from_terms([([m, n], c)])
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, C::one())
    }

    pub fn zbar() -> Self {
        Self::monomial(0, 1, C::one())
    }

    pub fn from_terms(items: impl IntoIterator<Item = ([u32; 2], C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in items {
            p.accumulate(e, c);
        }
        p
    }

    fn accumulate(&mut self, e: [u32; 2], c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 2], &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: u32, n: u32) -> C {
        self.terms.get(&[m, n]).cloned().unwrap_or_else(C::zero)
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

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1]).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, c.clone() * v.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.accumulate([a[0] + b[0], a[1] + b[1]], x.clone() * y.clone());
            }
        }
        out
    }

    /// Complex conjugate as a function of `z`: `zᵐ z̄ⁿ ↦ z̄ᵐ zⁿ`.
    pub fn conj(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| ([e[1], e[0]], c.conj())))
    }

    /// `∂/∂z`.
    pub fn dz(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e[0] > 0)
                .map(|(e, c)| ([e[0] - 1, e[1]], c.clone() * C::from_int(e[0] as i64))),
        )
    }

    /// `∂/∂z̄`.
    pub fn dzbar(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e[1] > 0)
                .map(|(e, c)| ([e[0], e[1] - 1], c.clone() * C::from_int(e[1] as i64))),
        )
    }

    /// Applies a complex-alphabet operator symbol.
    pub fn apply(&self, op: &WeylPoly<C>) -> Result<Self> {
        if op.alphabet() != Alphabet::Complex {
            return Err(Error::AlphabetMismatch(
                op.alphabet().to_string(),
                Alphabet::Complex.to_string(),
            ));
        }
        Ok(Self {
            terms: op.apply_to_poly(&self.terms),
        })
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> BiPoly<D> {
        BiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn to_c64(&self) -> BiPoly<C64> {
        self.map_coeffs(Ring::to_c64)
    }

    /// Largest coefficient-wise modulus of `self − other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.sub(other)
            .terms
            .values()
            .map(|c| c.to_c64().norm())
            .fold(0.0, f64::max)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_c64() * z.powu(e[0]) * z.conj().powu(e[1]))
            .sum()
    }

    /// The polynomial as a multiplication operator, for printing.
    pub fn to_weyl(&self) -> WeylPoly<C> {
        self.terms
            .iter()
            .fold(WeylPoly::zero(Alphabet::Complex), |acc, (e, c)| {
                acc.add(&WeylPoly::monomial(Alphabet::Complex, [e[0], e[1], 0, 0], c.clone()))
                    .expect("same alphabet")
            })
    }

    /// `[{"z": m, "zbar": n, "re": …, "im": …}, …]`.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let (re, im) = c.encode_parts();
                serde_json::json!({ "z": e[0], "zbar": e[1], "re": re, "im": im })
            })
            .collect();
        serde_json::Value::Array(items)
    }

    pub fn pretty(&self) -> String {
        self.to_weyl().pretty()
    }
}

impl<C: Ring> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Splits a positive integer into `s²·f` with `f` squarefree.
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        square *= num::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            free *= &p;
        }
        p += 1;
    }
    (square, free * rest)
}

/// `coeff · √root` with `root` a squarefree positive integer.
#[derive(Clone, Debug, PartialEq)]
pub struct Surd<C> {
    pub root: BigInt,
    pub coeff: C,
}

impl Surd<Rational> {
    /// `√r` for `r ≥ 0`.
    pub fn sqrt(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::Precondition("square root of a negative rational".into()));
        }
        if r.is_zero() {
            return Ok(Self {
                root: BigInt::one(),
                coeff: Rational::zero(),
            });
        }
        // √(n/d) = √(nd)/d
        let nd = r.numer() * r.denom();
        let (s, f) = square_split(&nd);
        Ok(Self {
            root: f,
            coeff: Rational::new(s, r.denom().clone()),
        })
    }

    pub fn to_f64(&self) -> f64 {
        use num::ToPrimitive;
        self.coeff.to_f64().unwrap_or(f64::NAN) * self.root.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl<C: Clone + Zero> Surd<C> {
    pub fn rational(c: C) -> Self {
        Self {
            root: BigInt::one(),
            coeff: c,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        if self.coeff.is_zero() {
            self.root = BigInt::one();
        }
        self
    }

    /// `(a√r)(b√s) = ab·t·√f` where `rs = t²f`.
    pub fn mul_with<D, E: Clone + Zero + std::ops::Mul<Output = E>>(
        &self,
        other: &Surd<D>,
        f: impl Fn(&C, &D) -> E,
        lift: impl Fn(BigInt) -> E,
    ) -> Surd<E> {
        let (s, free) = square_split(&(&self.root * &other.root));
        Surd {
            root: free,
            coeff: f(&self.coeff, &other.coeff) * lift(s),
        }
        .normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl Surd<CRat> {
    pub fn to_c64(&self) -> C64 {
        use num::ToPrimitive;
        self.coeff.to_c64() * self.root.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn is_one(&self) -> bool {
        self.root.is_one() && self.coeff.is_one()
    }
}

/// `√root · poly` in canonical form, so equal values compare equal structurally.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledPoly {
    pub root: BigInt,
    pub poly: BiPoly<CRat>,
}

impl ScaledPoly {
    pub fn new(scale: &Surd<Rational>, poly: &BiPoly<CRat>) -> Self {
        let c = CRat::new(scale.coeff.clone(), Rational::zero());
        let poly = poly.scale(&c);
        let root = if poly.is_zero() {
            BigInt::one()
        } else {
            scale.root.clone()
        };
        Self { root, poly }
    }

    pub fn to_c64(&self) -> BiPoly<C64> {
        use num::ToPrimitive;
        let s = self.root.to_f64().unwrap_or(f64::NAN).sqrt();
        self.poly.to_c64().scale(&C64::new(s, 0.0))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "sqrt": self.root.to_string(), "poly": self.poly.to_json() })
    }

    pub fn pretty(&self) -> String {
        if self.root.is_one() {
            self.poly.pretty()
        } else {
            format!("sqrt({})*({})", self.root, self.poly.pretty())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn c(n: i64, d: i64) -> CRat {
        CRat::new(rat(n, d), rat(0, 1))
    }

    #[test]
    fn arithmetic_and_derivatives() {
        let p = BiPoly::<CRat>::z().mul(&BiPoly::zbar()).sub(&BiPoly::one());
        assert_eq!(p.coeff(1, 1), c(1, 1));
        assert_eq!(p.coeff(0, 0), c(-1, 1));
        assert_eq!(p.dz(), BiPoly::zbar());
        assert_eq!(p.dzbar(), BiPoly::z());
        assert!(p.sub(&p).is_zero());
        let q = BiPoly::monomial(2, 1, CRat::new(rat(1, 2), rat(3, 1)));
        assert_eq!(q.conj(), BiPoly::monomial(1, 2, CRat::new(rat(1, 2), rat(-3, 1))));
    }

    #[test]
    fn weyl_application_matches_derivatives() {
        let p = BiPoly::monomial(3, 2, c(1, 1)).add(&BiPoly::monomial(1, 4, c(2, 3)));
        let dz = WeylPoly::<CRat>::d(Alphabet::Complex, 0);
        let dzb = WeylPoly::<CRat>::d(Alphabet::Complex, 1);
        assert_eq!(p.apply(&dz).unwrap(), p.dz());
        assert_eq!(p.apply(&dzb).unwrap(), p.dzbar());
        assert!(p.apply(&WeylPoly::d(Alphabet::Real2, 0)).is_err());
    }

    #[test]
    fn evaluation() {
        let p = BiPoly::<C64>::z().mul(&BiPoly::zbar());
        let z = C64::new(0.3, -1.2);
        assert!((p.eval(z) - C64::new(z.norm_sqr(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn surds_are_canonical() {
        let s = Surd::sqrt(&rat(8, 3)).unwrap();
        assert_eq!(s.root, BigInt::from(6));
        assert_eq!(s.coeff, rat(2, 3));
        assert!((s.to_f64() - (8.0f64 / 3.0).sqrt()).abs() < 1e-15);
        let four = Surd::sqrt(&rat(4, 1)).unwrap();
        assert_eq!((four.root.clone(), four.coeff.clone()), (BigInt::one(), rat(2, 1)));
        let p = s.mul_with(&s, |a, b| a * b, Rational::from_integer);
        assert_eq!((p.root, p.coeff), (BigInt::one(), rat(8, 3)));
        assert!(Surd::sqrt(&rat(-1, 1)).is_err());
    }

    #[test]
    fn square_split_small() {
        for n in 1..200i64 {
            let (s, f) = square_split(&BigInt::from(n));
            assert_eq!(&s * &s * &f, BigInt::from(n));
            let (_, ff) = square_split(&f);
            assert_eq!(ff, f);
        }
    }
}
