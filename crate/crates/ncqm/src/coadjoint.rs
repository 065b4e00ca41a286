//! The dual algebra, the coadjoint action and the classification of coadjoint orbits.
//!
//! A dual vector `F = (X₁,…,X₇)` pairs with an algebra element by `⟨F, X⟩ = Σ xᵢXᵢ`.
//! `X₅, X₆, X₇` are the polynomial invariants `(ρ, σ, τ)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::{ExtensionParams, GroupElement};
use crate::matrix::Mat8;
use crate::scalar::{Rational, Real};

#[derive(Clone, Debug, PartialEq)]
pub struct DualVector<R> {
    pub x: [R; 7],
}

impl<R: Real> DualVector<R> {
    pub fn new(x: [R; 7]) -> Self {
        Self { x }
    }

    pub fn zero() -> Self {
        Self {
            x: std::array::from_fn(|_| R::zero()),
        }
    }

    pub fn to_f64(&self) -> DualVector<f64> {
        DualVector {
            x: self.x.clone().map(|v| v.to_f64()),
        }
    }

    pub fn encode(&self) -> Vec<String> {
        self.x.iter().map(Real::encode).collect()
    }
}

/// `⟨F, X⟩ = Σ xᵢXᵢ`.
pub fn pairing<R: Real>(f: &DualVector<R>, x: &AlgebraElement<R>) -> R {
    f.x.iter()
        .zip(&x.x)
        .fold(R::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// Lower-triangular matrix of `F`: its last row is `(X₅, X₆, X₇, X₃, X₄, X₁, X₂, 0)`,
/// so that `tr(F·algebra_matrix(X)) = ⟨F, X⟩`.
pub fn dual_matrix<R: Real>(f: &DualVector<R>) -> Mat8<R> {
    let [x1, x2, x3, x4, x5, x6, x7] = f.x.clone();
    let mut m = Mat8::zeros(8);
    for (j, v) in [x5, x6, x7, x3, x4, x1, x2].into_iter().enumerate() {
        m.set(7, j, v);
    }
    m
}

/// Reads `F` back from the last row of an 8×8 matrix (entries outside that row are ignored).
pub fn dual_from_matrix<R: Real>(m: &Mat8<R>) -> DualVector<R> {
    let r = |j: usize| m.get(7, j).clone();
    DualVector::new([r(5), r(6), r(3), r(4), r(0), r(1), r(2)])
}

/// Coadjoint action `K(g)F`.
pub fn coadjoint_action<R: Real>(g: &GroupElement<R>, f: &DualVector<R>, params: &ExtensionParams<R>) -> DualVector<R> {
    let h = R::half();
    let a = h.clone() * params.alpha.clone();
    let b = h.clone() * params.beta.clone();
    let c = h * params.gamma.clone();
    let [x1, x2, x3, x4, x5, x6, x7] = f.x.clone();
    let [q1, q2] = g.q.clone();
    let [p1, p2] = g.p.clone();
    DualVector::new([
        x1 - a.clone() * q1.clone() * x5.clone() + b.clone() * p2.clone() * x6.clone(),
        x2 - a.clone() * q2.clone() * x5.clone() - b * p1.clone() * x6.clone(),
        x3 + a.clone() * p1 * x5.clone() + c.clone() * q2 * x7.clone(),
        x4 + a * p2 * x5.clone() - c * q1 * x7.clone(),
        x5,
        x6,
        x7,
    ])
}

/// `(ρ, σ, τ) = (X₅, X₆, X₇)`.
pub fn polynomial_invariants<R: Real>(f: &DualVector<R>) -> (R, R, R) {
    (f.x[4].clone(), f.x[5].clone(), f.x[6].clone())
}

/// `α²X₅² − γβX₆X₇`.
pub fn det_w<R: Real>(f: &DualVector<R>, params: &ExtensionParams<R>) -> R {
    let (rho, sigma, tau) = polynomial_invariants(f);
    params.alpha.clone() * params.alpha.clone() * rho.clone() * rho
        - params.gamma.clone() * params.beta.clone() * sigma * tau
}

/// `(κ, δ)` on the `det_w = 0` surface:
/// `κ = X₃ + αX₅X₂/(βX₆)`, `δ = X₄ − αX₅X₁/(βX₆)`.
pub fn rational_invariants<R: Real>(f: &DualVector<R>, params: &ExtensionParams<R>) -> Result<(R, R)> {
    let [x1, x2, x3, x4, x5, x6, _] = f.x.clone();
    if x6.is_zero() {
        return Err(Error::Precondition("X6 must be nonzero".into()));
    }
    if !det_w(f, params).is_zero() {
        return Err(Error::NotOnSurface);
    }
    let r = params.alpha.clone() * x5 / (params.beta.clone() * x6);
    Ok((x3 + r.clone() * x2, x4 - r * x1))
}

/// Solves `K(g)F = (0, 0, 0, 0, ρ, σ, τ)` for the translation part of `g`.
///
/// The system splits into two 2×2 blocks, each with determinant `−det_w/4`; a
/// solution is returned exactly when it is unique, i.e. when `det_w ≠ 0`.
pub fn solve_to_origin<R: Real>(f: &DualVector<R>, params: &ExtensionParams<R>) -> Option<GroupElement<R>> {
    let dw = det_w(f, params);
    if dw.is_zero() {
        return None;
    }
    let h = R::half();
    let [x1, x2, x3, x4, rho, sigma, tau] = f.x.clone();
    let ar = h.clone() * params.alpha.clone() * rho;
    let bs = h.clone() * params.beta.clone() * sigma;
    let gt = h * params.gamma.clone() * tau;
    let det = -(dw / R::from_ratio(4, 1));
    // −ar·q1 + bs·p2 = −X1, −gt·q1 + ar·p2 = −X4
    let (r1, r2) = (-x1, -x4);
    let q1 = (r1.clone() * ar.clone() - bs.clone() * r2.clone()) / det.clone();
    let p2 = (-(ar.clone()) * r2 + gt.clone() * r1) / det.clone();
    // −ar·q2 − bs·p1 = −X2, gt·q2 + ar·p1 = −X3
    let (s1, s2) = (-x2, -x3);
    let q2 = (s1.clone() * ar.clone() + bs * s2.clone()) / det.clone();
    let p1 = (-(ar * s2) - gt * s1) / det;
    Some(GroupElement::new(R::zero(), R::zero(), R::zero(), [q1, q2], [p1, p2]))
}

/// The nine coadjoint orbit families.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum OrbitClass<R> {
    Generic4D {
        rho: R,
        sigma: R,
        tau: R,
    },
    /// `σ = ρ/ζ`, `τ = ζα²ρ/(γβ)`.
    Surface2D {
        rho: R,
        zeta: R,
        kappa: R,
        delta: R,
    },
    #[serde(rename = "FourD_SigmaOnly")]
    FourDSigmaOnly {
        rho: R,
        sigma: R,
    },
    #[serde(rename = "FourD_TauOnly")]
    FourDTauOnly {
        rho: R,
        tau: R,
    },
    #[serde(rename = "FourD_RhoZero")]
    FourDRhoZero {
        sigma: R,
        tau: R,
    },
    #[serde(rename = "FourD_RhoOnly")]
    FourDRhoOnly {
        rho: R,
    },
    #[serde(rename = "TwoD_Tau")]
    TwoDTau {
        c1: R,
        c2: R,
        tau: R,
    },
    #[serde(rename = "TwoD_Sigma")]
    TwoDSigma {
        c3: R,
        c4: R,
        sigma: R,
    },
    Point0D {
        c1: R,
        c2: R,
        c3: R,
        c4: R,
    },
}

impl<R: Real> OrbitClass<R> {
    pub fn family(&self) -> &'static str {
        match self {
            Self::Generic4D { .. } => "Generic4D",
            Self::Surface2D { .. } => "Surface2D",
            Self::FourDSigmaOnly { .. } => "FourD_SigmaOnly",
            Self::FourDTauOnly { .. } => "FourD_TauOnly",
            Self::FourDRhoZero { .. } => "FourD_RhoZero",
            Self::FourDRhoOnly { .. } => "FourD_RhoOnly",
            Self::TwoDTau { .. } => "TwoD_Tau",
            Self::TwoDSigma { .. } => "TwoD_Sigma",
            Self::Point0D { .. } => "Point0D",
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Self::Point0D { .. } => 0,
            Self::Surface2D { .. } | Self::TwoDTau { .. } | Self::TwoDSigma { .. } => 2,
            _ => 4,
        }
    }

    /// Builds a class from its family name and its parameters in declaration order.
    pub fn from_parts(family: &str, v: &[R]) -> Result<Self> {
        let want = match family {
            "Generic4D" => 3,
            "Surface2D" | "Point0D" => 4,
            "FourD_SigmaOnly" | "FourD_TauOnly" | "FourD_RhoZero" => 2,
            "FourD_RhoOnly" => 1,
            "TwoD_Tau" | "TwoD_Sigma" => 3,
            _ => return Err(Error::Parse(format!("unknown orbit family {family:?}"))),
        };
        if v.len() != want {
            return Err(Error::DimensionMismatch {
                expected: want,
                got: v.len(),
            });
        }
        let c = |i: usize| v[i].clone();
        let class = match family {
            "Generic4D" => Self::Generic4D {
                rho: c(0),
                sigma: c(1),
                tau: c(2),
            },
            "Surface2D" => Self::Surface2D {
                rho: c(0),
                zeta: c(1),
                kappa: c(2),
                delta: c(3),
            },
            "FourD_SigmaOnly" => Self::FourDSigmaOnly { rho: c(0), sigma: c(1) },
            "FourD_TauOnly" => Self::FourDTauOnly { rho: c(0), tau: c(1) },
            "FourD_RhoZero" => Self::FourDRhoZero { sigma: c(0), tau: c(1) },
            "FourD_RhoOnly" => Self::FourDRhoOnly { rho: c(0) },
            "TwoD_Tau" => Self::TwoDTau {
                c1: c(0),
                c2: c(1),
                tau: c(2),
            },
            "TwoD_Sigma" => Self::TwoDSigma {
                c3: c(0),
                c4: c(1),
                sigma: c(2),
            },
            _ => Self::Point0D {
                c1: c(0),
                c2: c(1),
                c3: c(2),
                c4: c(3),
            },
        };
        if class
            .named_params()
            .iter()
            .zip(v)
            .any(|((name, _), x)| x.is_zero() && matches!(*name, "rho" | "sigma" | "tau" | "zeta"))
        {
            return Err(Error::InvalidParams(format!("{family} needs its invariants nonzero")));
        }
        Ok(class)
    }

    /// Named parameters in declaration order.
    pub fn named_params(&self) -> Vec<(&'static str, R)> {
        let c = |v: &R| v.clone();
        match self {
            Self::Generic4D { rho, sigma, tau } => vec![("rho", c(rho)), ("sigma", c(sigma)), ("tau", c(tau))],
            Self::Surface2D {
                rho,
                zeta,
                kappa,
                delta,
            } => {
                vec![
                    ("rho", c(rho)),
                    ("zeta", c(zeta)),
                    ("kappa", c(kappa)),
                    ("delta", c(delta)),
                ]
            }
            Self::FourDSigmaOnly { rho, sigma } => vec![("rho", c(rho)), ("sigma", c(sigma))],
            Self::FourDTauOnly { rho, tau } => vec![("rho", c(rho)), ("tau", c(tau))],
            Self::FourDRhoZero { sigma, tau } => vec![("sigma", c(sigma)), ("tau", c(tau))],
            Self::FourDRhoOnly { rho } => vec![("rho", c(rho))],
            Self::TwoDTau { c1, c2, tau } => vec![("c1", c(c1)), ("c2", c(c2)), ("tau", c(tau))],
            Self::TwoDSigma { c3, c4, sigma } => vec![("c3", c(c3)), ("c4", c(c4)), ("sigma", c(sigma))],
            Self::Point0D { c1, c2, c3, c4 } => vec![("c1", c(c1)), ("c2", c(c2)), ("c3", c(c3)), ("c4", c(c4))],
        }
    }

    /// `{"family", "params", "dimension", "representative"}`.
    pub fn to_json(&self, params: &ExtensionParams<R>) -> serde_json::Value {
        let ps: serde_json::Map<String, serde_json::Value> = self
            .named_params()
            .into_iter()
            .map(|(k, v)| (k.to_owned(), v.encode().into()))
            .collect();
        serde_json::json!({
            "family": self.family(),
            "params": ps,
            "dimension": self.dimension(),
            "representative": orbit_representative(self, params).encode(),
        })
    }
}

/// Classification with an explicit zero test.
fn classify_with<R: Real>(f: &DualVector<R>, params: &ExtensionParams<R>, zero: impl Fn(&R) -> bool) -> OrbitClass<R> {
    let [x1, x2, x3, x4, rho, sigma, tau] = f.x.clone();
    let (zr, zs, zt) = (zero(&rho), zero(&sigma), zero(&tau));
    match (zr, zs, zt) {
        (true, true, true) => OrbitClass::Point0D {
            c1: x1,
            c2: x2,
            c3: x3,
            c4: x4,
        },
        (true, true, false) => OrbitClass::TwoDTau { c1: x1, c2: x2, tau },
        (true, false, true) => OrbitClass::TwoDSigma { c3: x3, c4: x4, sigma },
        (true, false, false) => OrbitClass::FourDRhoZero { sigma, tau },
        (false, false, false) if zero(&det_w(f, params)) => {
            let r = params.alpha.clone() * rho.clone() / (params.beta.clone() * sigma.clone());
            OrbitClass::Surface2D {
                zeta: rho.clone() / sigma,
                rho,
                kappa: x3 + r.clone() * x2,
                delta: x4 - r * x1,
            }
        }
        (false, false, false) => OrbitClass::Generic4D { rho, sigma, tau },
        (false, false, true) => OrbitClass::FourDSigmaOnly { rho, sigma },
        (false, true, false) => OrbitClass::FourDTauOnly { rho, tau },
        (false, true, true) => OrbitClass::FourDRhoOnly { rho },
    }
}

/// Exact classification.
pub fn classify(f: &DualVector<Rational>, params: &ExtensionParams<Rational>) -> OrbitClass<Rational> {
    classify_with(f, params, num::Zero::is_zero)
}

/// Float classification: values with `|v| ≤ tol` count as zero.
pub fn classify_approx(f: &DualVector<f64>, params: &ExtensionParams<f64>, tol: f64) -> Result<OrbitClass<f64>> {
    if !(tol >= 0.0) {
        return Err(Error::InvalidParams("tolerance must be a nonnegative number".into()));
    }
    Ok(classify_with(f, params, |v| v.abs() <= tol))
}

/// A point through which the orbit passes.
///
/// The τ-only family passes through `(0, 0, 0, 0, ρ, 0, τ)`.
pub fn orbit_representative<R: Real>(c: &OrbitClass<R>, params: &ExtensionParams<R>) -> DualVector<R> {
    let z = R::zero;
    let v = |a: [R; 7]| DualVector::new(a);
    match c.clone() {
        OrbitClass::Generic4D { rho, sigma, tau } => v([z(), z(), z(), z(), rho, sigma, tau]),
        OrbitClass::Surface2D {
            rho,
            zeta,
            kappa,
            delta,
        } => {
            let sigma = rho.clone() / zeta.clone();
            let tau = zeta * params.alpha.clone() * params.alpha.clone() * rho.clone()
                / (params.gamma.clone() * params.beta.clone());
            v([z(), z(), kappa, delta, rho, sigma, tau])
        }
        OrbitClass::FourDSigmaOnly { rho, sigma } => v([z(), z(), z(), z(), rho, sigma, z()]),
        OrbitClass::FourDTauOnly { rho, tau } => v([z(), z(), z(), z(), rho, z(), tau]),
        OrbitClass::FourDRhoZero { sigma, tau } => v([z(), z(), z(), z(), z(), sigma, tau]),
        OrbitClass::FourDRhoOnly { rho } => v([z(), z(), z(), z(), rho, z(), z()]),
        OrbitClass::TwoDTau { c1, c2, tau } => v([c1, c2, z(), z(), z(), z(), tau]),
        OrbitClass::TwoDSigma { c3, c4, sigma } => v([z(), z(), c3, c4, z(), sigma, z()]),
        OrbitClass::Point0D { c1, c2, c3, c4 } => v([c1, c2, c3, c4, z(), z(), z()]),
    }
}

/// Point clouds in `(ρ, σ, τ)` space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceKind {
    /// The `det_w = 0` surface over a `(ρ, ζ)` grid.
    SRhoZeta,
    /// The plane `τ = K_g σ`, restricted to admissible `(ρ, σ)`.
    CoupledBoson,
    /// The two half-lines where both hold, over a `σ` grid.
    Intersection,
}

/// Uniform grid `lo, lo + h, …, hi` with `n` points (`n = 1` gives `lo`).
#[derive(Clone, Debug, PartialEq)]
pub struct GridAxis<R> {
    pub lo: R,
    pub hi: R,
    pub n: usize,
}

impl<R: Real> GridAxis<R> {
    pub fn points(&self) -> Vec<R> {
        match self.n {
            0 => vec![],
            1 => vec![self.lo.clone()],
            n => {
                let h = (self.hi.clone() - self.lo.clone()) / R::from_ratio(n as i64 - 1, 1);
                (0..n)
                    .map(|i| self.lo.clone() + h.clone() * R::from_ratio(i as i64, 1))
                    .collect()
            }
        }
    }
}

/// Samples the chosen surface in row-major grid order.
///
/// `axes.0` is the `ρ` axis (unused for `Intersection`); `axes.1` is `ζ` for
/// `SRhoZeta` and `σ` otherwise. `m_omega` is the oscillator product `MΩ`, which
/// fixes `K_g = β(MΩ)²/γ`.
pub fn surface_sample<R: Real>(
    which: SurfaceKind,
    axes: (&GridAxis<R>, &GridAxis<R>),
    params: &ExtensionParams<R>,
    m_omega: &R,
) -> Result<Vec<[R; 3]>> {
    if which != SurfaceKind::SRhoZeta && *m_omega <= R::zero() {
        return Err(Error::InvalidParams("M*Omega must be > 0".into()));
    }
    let (a, b, g) = (params.alpha.clone(), params.beta.clone(), params.gamma.clone());
    let kg = b.clone() * m_omega.clone() * m_omega.clone() / g.clone();
    let slope = b.clone() * m_omega.clone() / a.clone();
    let rows = axes.0.points();
    let cols = axes.1.points();
    let out = match which {
        SurfaceKind::SRhoZeta => rows
            .par_iter()
            .flat_map_iter(|rho| {
                cols.iter().filter(|z| !z.is_zero()).map(|zeta| {
                    let sigma = rho.clone() / zeta.clone();
                    let tau = zeta.clone() * a.clone() * a.clone() * rho.clone() / (g.clone() * b.clone());
                    [rho.clone(), sigma, tau]
                })
            })
            .collect(),
        SurfaceKind::CoupledBoson => rows
            .par_iter()
            .flat_map_iter(|rho| {
                cols.iter()
                    .filter(|sigma| {
                        (rho.clone() * (*sigma).clone()).is_negative() && *rho >= -(slope.clone() * (*sigma).clone())
                    })
                    .map(|sigma| [rho.clone(), sigma.clone(), kg.clone() * sigma.clone()])
            })
            .collect(),
        SurfaceKind::Intersection => cols
            .par_iter()
            .filter(|s| !s.is_zero())
            .map(|sigma| {
                [
                    -(slope.clone() * sigma.clone()),
                    sigma.clone(),
                    kg.clone() * sigma.clone(),
                ]
            })
            .collect(),
    };
    Ok(out)
}

/// CSV with header `rho,sigma,tau` and decimal values.
pub fn points_to_csv<R: Real>(points: &[[R; 3]]) -> String {
    let mut s = String::from("rho,sigma,tau\n");
    for [r, si, t] in points {
        s.push_str(&format!("{:?},{:?},{:?}\n", r.to_f64(), si.to_f64(), t.to_f64()));
    }
    s
}
