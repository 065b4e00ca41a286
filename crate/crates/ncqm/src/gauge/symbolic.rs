//! Laurent polynomials in `ħ, ϑ, 𝓑` and sixteen matrix indeterminates `mᵢⱼ`, with
//! complex-rational coefficients. Only `ħ` ever carries negative exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat, CRat, Rational, Ring, C64};

/// Number of indeterminates: `ħ, ϑ, 𝓑, m₁₁, …, m₄₄`.
pub const NVARS: usize = 19;

pub const HBAR: usize = 0;
pub const VARTHETA: usize = 1;
pub const BCAL: usize = 2;

/// Index of `mᵢⱼ` (zero-based `i, j`).
pub fn m_index(i: usize, j: usize) -> usize {
    3 + 4 * i + j
}

fn var_name(k: usize) -> String {
    match k {
        HBAR => "ħ".into(),
        VARTHETA => "ϑ".into(),
        BCAL => "𝓑".into(),
        _ => format!("m{}{}", (k - 3) / 4 + 1, (k - 3) % 4 + 1),
    }
}

type Exps = [i32; NVARS];

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Exps, CRat>,
}

impl SymPoly {
    pub fn constant(c: CRat) -> Self {
        let mut p = Self::default();
        p.push([0; NVARS], c);
        p
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(CRat::new(r, rat(0, 1)))
    }

    /// The indeterminate `k` raised to `power` (negative powers only for `ħ`).
    pub fn var_pow(k: usize, power: i32) -> Self {
        assert!(power >= 0 || k == HBAR, "only hbar may be inverted");
        let mut e = [0; NVARS];
        e[k] = power;
        let mut p = Self::default();
        p.push(e, CRat::one());
        p
    }

    pub fn var(k: usize) -> Self {
        Self::var_pow(k, 1)
    }

    fn push(&mut self, e: Exps, c: CRat) {
        let slot = self.terms.entry(e).or_insert_with(CRat::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &CRat) -> Self {
        let mut out = Self::default();
        for (e, v) in &self.terms {
            out.push(*e, v.clone() * c.clone());
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes rational values for every indeterminate.
    pub fn eval(&self, values: &[Rational; NVARS]) -> Result<CRat> {
        let mut total = CRat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if values[k].is_zero() && p < 0 {
                    return Err(Error::Singular);
                }
                let base = if p < 0 { values[k].recip() } else { values[k].clone() };
                let pw = num::pow(base, p.unsigned_abs() as usize);
                term *= CRat::new(pw, rat(0, 1));
            }
            total += term;
        }
        Ok(total)
    }

    /// Coefficient of the monomial in the matrix indeterminates given by `m_exps`,
    /// as a Laurent polynomial in `ħ, ϑ, 𝓑`.
    pub fn coefficient_of(&self, m_exps: &[i32; 16]) -> SymPoly {
        let mut out = Self::default();
        for (e, c) in &self.terms {
            if e[3..] == m_exps[..] {
                let mut k = [0; NVARS];
                k[..3].copy_from_slice(&e[..3]);
                out.push(k, c.clone());
            }
        }
        out
    }
}

impl Zero for SymPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SymPoly {
    fn one() -> Self {
        Self::constant(CRat::one())
    }
}

impl Add for SymPoly {
    type Output = SymPoly;

    fn add(mut self, rhs: Self) -> SymPoly {
        for (e, c) in rhs.terms {
            self.push(e, c);
        }
        self
    }
}

impl Sub for SymPoly {
    type Output = SymPoly;

    fn sub(self, rhs: Self) -> SymPoly {
        self + (-rhs)
    }
}

impl Neg for SymPoly {
    type Output = SymPoly;

    fn neg(self) -> SymPoly {
        SymPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for SymPoly {
    type Output = SymPoly;

    fn mul(self, rhs: Self) -> SymPoly {
        let mut out = SymPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exps = std::array::from_fn(|k| ea[k] + eb[k]);
                out.push(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut s = format!("({})", c.render());
                for (k, &p) in e.iter().enumerate() {
                    match p {
                        0 => {}
                        1 => s.push_str(&format!("·{}", var_name(k))),
                        _ => s.push_str(&format!("·{}^{}", var_name(k), p)),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Ring for SymPoly {
    fn imag_unit() -> Self {
        Self::constant(CRat::imag_unit())
    }

    fn from_int(n: i64) -> Self {
        Self::rational(rat(n, 1))
    }

    /// Conjugates coefficients; the indeterminates are real.
    fn conj(&self) -> Self {
        SymPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// Numeric value of a constant; NaN when indeterminates remain.
    fn to_c64(&self) -> C64 {
        match self.terms.len() {
            0 => C64::new(0.0, 0.0),
            1 => match self.terms.get(&[0; NVARS]) {
                Some(c) => c.to_c64(),
                None => C64::new(f64::NAN, f64::NAN),
            },
            _ => C64::new(f64::NAN, f64::NAN),
        }
    }

    fn encode_parts(&self) -> (String, String) {
        (self.to_string(), String::new())
    }

    fn decode_parts(_re: &str, _im: &str) -> Result<Self> {
        Err(Error::Parse("symbolic coefficients cannot be decoded".into()))
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_cancellation() {
        let h = SymPoly::var(HBAR);
        let hi = SymPoly::var_pow(HBAR, -1);
        assert_eq!(h.clone() * hi, SymPoly::one());
        let t = SymPoly::var(VARTHETA);
        let p = (t.clone() + h.clone()) * (t.clone() - h.clone());
        assert_eq!(p, t.clone() * t - h.clone() * h);
    }

    #[test]
    fn evaluation() {
        let mut v: [Rational; NVARS] = std::array::from_fn(|_| rat(0, 1));
        v[HBAR] = rat(2, 1);
        v[BCAL] = rat(3, 1);
        let p = SymPoly::var(BCAL) * SymPoly::var_pow(HBAR, -1) + SymPoly::var(m_index(3, 3));
        assert_eq!(p.eval(&v).unwrap(), CRat::new(rat(3, 2), rat(0, 1)));
        v[HBAR] = rat(0, 1);
        assert!(p.eval(&v).is_err());
    }

    #[test]
    fn coefficient_extraction() {
        let m = SymPoly::var(m_index(0, 0)) * SymPoly::var(m_index(1, 2));
        let p = m.clone() * SymPoly::var(VARTHETA) + m * SymPoly::var(HBAR) + SymPoly::var(BCAL);
        let mut e = [0; 16];
        e[0] = 1;
        e[6] = 1;
        assert_eq!(p.coefficient_of(&e), SymPoly::var(VARTHETA) + SymPoly::var(HBAR));
    }
}
