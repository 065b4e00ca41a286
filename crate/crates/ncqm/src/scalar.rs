//! Scalar kinds: exact rationals and doubles, plus the complex coefficient ring.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Complex, Num, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type C64 = Complex<f64>;
pub type CRat = Complex<Rational>;

/// Exact rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Float,
}

/// Real scalar field used for group, algebra and matrix arithmetic.
pub trait Real:
    Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = Self> + Signed + Send + Sync + 'static
{
    const KIND: ScalarKind;
    fn from_ratio(n: i64, d: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    /// Square root when it is representable in this kind.
    fn sqrt_opt(&self) -> Option<Self>;
    /// Lossless text form: `"p/q"` for rationals, shortest round-trip decimal for floats.
    fn encode(&self) -> String;
    fn decode(s: &str) -> Result<Self>;

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }
}

impl Real for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn from_ratio(n: i64, d: i64) -> Self {
        rat(n, d)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt_opt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(Rational::new(rn, rd))
        } else {
            None
        }
    }

    fn encode(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn decode(s: &str) -> Result<Self> {
        if !s.contains('/') {
            return Err(Error::KindMismatch(format!("expected \"p/q\" rational, got {s:?}")));
        }
        parse_rational(s)
    }
}

impl Real for f64 {
    const KIND: ScalarKind = ScalarKind::Float;

    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }

    fn from_rational(r: &Rational) -> Self {
        Real::to_f64(r)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sqrt_opt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn encode(&self) -> String {
        format!("{self:?}")
    }

    fn decode(s: &str) -> Result<Self> {
        if s.contains('/') {
            return Err(Error::KindMismatch(format!("expected decimal float, got {s:?}")));
        }
        s.trim().parse::<f64>().map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

/// Parses `"p/q"`, an integer, or a decimal (with optional exponent) into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{ip}{fp}0").parse().map_err(|_| bad())?;
    let scale = exp - fp.len() as i32 - 1;
    let ten = BigInt::from(10);
    let mut r = Rational::from_integer(digits);
    if scale >= 0 {
        r *= Rational::from_integer(num::pow(ten, scale as usize));
    } else {
        r /= Rational::from_integer(num::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -r } else { r })
}

/// Commutative ring of operator/polynomial coefficients containing the imaginary unit.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn imag_unit() -> Self;
    fn from_int(n: i64) -> Self;
    fn conj(&self) -> Self;
    fn to_c64(&self) -> C64;
    /// Lossless `(re, im)` text pair.
    fn encode_parts(&self) -> (String, String);
    fn decode_parts(re: &str, im: &str) -> Result<Self>;
    /// Human-readable form used by pretty printers.
    fn render(&self) -> String;
}

impl<R: Real> Ring for Complex<R> {
    fn imag_unit() -> Self {
        Complex::new(R::zero(), R::one())
    }

    fn from_int(n: i64) -> Self {
        Complex::new(R::from_ratio(n, 1), R::zero())
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn to_c64(&self) -> C64 {
        C64::new(self.re.to_f64(), self.im.to_f64())
    }

    fn encode_parts(&self) -> (String, String) {
        (self.re.encode(), self.im.encode())
    }

    fn decode_parts(re: &str, im: &str) -> Result<Self> {
        Ok(Complex::new(R::decode(re)?, R::decode(im)?))
    }

    fn render(&self) -> String {
        let re = (!self.re.is_zero()).then(|| render_real(&self.re));
        let im = (!self.im.is_zero()).then(|| match render_real(&self.im.abs()) {
            one if one == "1" => String::new(),
            v => v,
        });
        let sign = if self.im.is_negative() { "-" } else { "+" };
        match (re, im) {
            (None, None) => "0".into(),
            (Some(r), None) => r,
            (None, Some(i)) if sign == "-" => format!("-{i}i"),
            (None, Some(i)) => format!("{i}i"),
            (Some(r), Some(i)) => format!("{r}{sign}{i}i"),
        }
    }
}

fn render_real<R: Real>(x: &R) -> String {
    match R::KIND {
        ScalarKind::Rational => {
            let r = R::encode(x);
            r.strip_suffix("/1").map(str::to_owned).unwrap_or(r)
        }
        ScalarKind::Float => x.to_f64().to_string(),
    }
}

pub fn c_real<R: Real>(x: R) -> Complex<R> {
    Complex::new(x, R::zero())
}

pub fn c_imag<R: Real>(x: R) -> Complex<R> {
    Complex::new(R::zero(), x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("1e-6").unwrap(), rat(1, 1_000_000));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(4, -6);
        assert_eq!(r.encode(), "-2/3");
    }

    #[test]
    fn encode_round_trip() {
        let r = rat(-7, 3);
        assert_eq!(Rational::decode(&r.encode()).unwrap(), r);
        let f = 0.1_f64;
        assert_eq!(f64::decode(&f.encode()).unwrap(), f);
        assert!(f64::decode("1/2").is_err());
        assert!(Rational::decode("0.5").is_err());
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(rat(9, 4).sqrt_opt(), Some(rat(3, 2)));
        assert_eq!(rat(3, 4).sqrt_opt(), None);
        assert_eq!(rat(-1, 4).sqrt_opt(), None);
    }

    #[test]
    fn render_complex() {
        let c: CRat = Complex::new(rat(1, 2), rat(-3, 1));
        assert_eq!(c.render(), "1/2-3i");
        assert_eq!(CRat::imag_unit().render(), "i");
        assert_eq!((-CRat::imag_unit()).render(), "-i");
        assert_eq!(Complex::new(rat(2, 1), rat(1, 1)).render(), "2+i");
    }
}
