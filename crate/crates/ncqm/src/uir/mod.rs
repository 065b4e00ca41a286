//! Unitary irreducible representations of G_NC evaluated pointwise on test functions.
//!
//! Every representation has the form `(U(g)f)(x) = e^{iΦ(g,x)} f(S(g,x))` with a real
//! phase `Φ` and an affine shift `S`. Parts of the phase that do not depend on the
//! evaluation point are accumulated in the scalar kind of `g` and converted to `f64` once.

pub mod crosscheck;
pub mod master;
pub mod quadrature;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{inverse, ExtensionParams, GroupElement};
use crate::scalar::{Real, C64};

pub use master::{solve_master_2d, solve_master_4d, MasterSolution};

/// Representation families. Parameters are plain doubles; the point dimension is
/// 2 for the four-dimensional orbits and the symmetric gauge, 1 for the two-dimensional
/// orbits and 0 for the characters.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum UirLabel {
    Generic {
        rho: f64,
        sigma: f64,
        tau: f64,
    },
    GenericTilde {
        rho: f64,
        sigma: f64,
        tau: f64,
    },
    TauZero {
        rho: f64,
        sigma: f64,
    },
    SigmaZero {
        rho: f64,
        tau: f64,
    },
    RhoZero {
        sigma: f64,
        tau: f64,
    },
    RhoOnly {
        rho: f64,
    },
    TwoDTau {
        c1: f64,
        c2: f64,
        tau: f64,
    },
    TwoDSigma {
        c3: f64,
        c4: f64,
        sigma: f64,
    },
    /// Image of `TwoDSigma` under the one-dimensional flip.
    TwoDSigmaTilde {
        c3: f64,
        c4: f64,
        sigma: f64,
    },
    Surface {
        kappa: f64,
        delta: f64,
        rho: f64,
        zeta: f64,
    },
    ZeroDim {
        c1: f64,
        c2: f64,
        c3: f64,
        c4: f64,
    },
    Sym,
    /// `g ↦ U_sym(g)* = U_sym(g⁻¹)`; an anti-homomorphism.
    SymAdjoint,
}

/// The group coordinate varied by [`numeric_generator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coord {
    Theta,
    Phi,
    Psi,
    Q1,
    Q2,
    P1,
    P2,
}

impl Coord {
    pub const ALL: [Coord; 7] = [
        Coord::Theta,
        Coord::Phi,
        Coord::Psi,
        Coord::Q1,
        Coord::Q2,
        Coord::P1,
        Coord::P2,
    ];

    /// Index into [`GroupElement::coords`].
    pub fn index(self) -> usize {
        self as usize
    }
}

/// The reflection intertwining a family with its tilde form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flip {
    /// `(r₁, s₂) ↦ (r₁, −s₂)`.
    Flip2D,
    /// `s ↦ −s`.
    Flip1D,
}

impl Flip {
    pub fn dimension(self) -> usize {
        match self {
            Flip::Flip2D => 2,
            Flip::Flip1D => 1,
        }
    }

    pub fn apply(self, point: &[f64]) -> Result<Vec<f64>> {
        if point.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: point.len(),
            });
        }
        let mut y = point.to_vec();
        let last = y.len() - 1;
        y[last] = -y[last];
        Ok(y)
    }
}

impl UirLabel {
    pub const NAMES: [&'static str; 13] = [
        "generic",
        "generic-tilde",
        "tau-zero",
        "sigma-zero",
        "rho-zero",
        "rho-only",
        "two-d-tau",
        "two-d-sigma",
        "two-d-sigma-tilde",
        "surface",
        "zero-dim",
        "sym",
        "sym-adjoint",
    ];

    pub fn name(&self) -> &'static str {
        Self::NAMES[match self {
            Self::Generic { .. } => 0,
            Self::GenericTilde { .. } => 1,
            Self::TauZero { .. } => 2,
            Self::SigmaZero { .. } => 3,
            Self::RhoZero { .. } => 4,
            Self::RhoOnly { .. } => 5,
            Self::TwoDTau { .. } => 6,
            Self::TwoDSigma { .. } => 7,
            Self::TwoDSigmaTilde { .. } => 8,
            Self::Surface { .. } => 9,
            Self::ZeroDim { .. } => 10,
            Self::Sym => 11,
            Self::SymAdjoint => 12,
        }]
    }

    /// Builds a label from its name and its parameters in declaration order.
    pub fn from_parts(name: &str, v: &[f64]) -> Result<Self> {
        let need = |n: usize| -> Result<()> {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            Ok(())
        };
        let label = match name {
            "generic" => {
                need(3)?;
                Self::Generic {
                    rho: v[0],
                    sigma: v[1],
                    tau: v[2],
                }
            }
            "generic-tilde" => {
                need(3)?;
                Self::GenericTilde {
                    rho: v[0],
                    sigma: v[1],
                    tau: v[2],
                }
            }
            "tau-zero" => {
                need(2)?;
                Self::TauZero { rho: v[0], sigma: v[1] }
            }
            "sigma-zero" => {
                need(2)?;
                Self::SigmaZero { rho: v[0], tau: v[1] }
            }
            "rho-zero" => {
                need(2)?;
                Self::RhoZero { sigma: v[0], tau: v[1] }
            }
            "rho-only" => {
                need(1)?;
                Self::RhoOnly { rho: v[0] }
            }
            "two-d-tau" => {
                need(3)?;
                Self::TwoDTau {
                    c1: v[0],
                    c2: v[1],
                    tau: v[2],
                }
            }
            "two-d-sigma" => {
                need(3)?;
                Self::TwoDSigma {
                    c3: v[0],
                    c4: v[1],
                    sigma: v[2],
                }
            }
            "two-d-sigma-tilde" => {
                need(3)?;
                Self::TwoDSigmaTilde {
                    c3: v[0],
                    c4: v[1],
                    sigma: v[2],
                }
            }
            "surface" => {
                need(4)?;
                Self::Surface {
                    kappa: v[0],
                    delta: v[1],
                    rho: v[2],
                    zeta: v[3],
                }
            }
            "zero-dim" => {
                need(4)?;
                Self::ZeroDim {
                    c1: v[0],
                    c2: v[1],
                    c3: v[2],
                    c4: v[3],
                }
            }
            "sym" => {
                need(0)?;
                Self::Sym
            }
            "sym-adjoint" => {
                need(0)?;
                Self::SymAdjoint
            }
            _ => {
                return Err(Error::Parse(format!(
                    "unknown representation {name:?}; expected one of {:?}",
                    Self::NAMES
                )))
            }
        };
        Ok(label)
    }

    /// Dimension of the evaluation point.
    pub fn dimension(&self) -> usize {
        match self {
            Self::TwoDTau { .. } | Self::TwoDSigma { .. } | Self::TwoDSigmaTilde { .. } | Self::Surface { .. } => 1,
            Self::ZeroDim { .. } => 0,
            _ => 2,
        }
    }

    /// Whether `g ↦ U(g)` reverses products.
    pub fn is_anti(&self) -> bool {
        matches!(self, Self::SymAdjoint)
    }

    /// Checks the nonvanishing conditions of the family and, for the symmetric gauge, `α² > βγ`.
    pub fn validate<R: Real>(&self, params: &ExtensionParams<R>) -> Result<()> {
        let nz = |name: &str, v: f64| -> Result<()> {
            if v == 0.0 || !v.is_finite() {
                return Err(Error::InvalidParams(format!(
                    "{} needs {name} nonzero and finite",
                    self.name()
                )));
            }
            Ok(())
        };
        match *self {
            Self::Generic { rho, sigma, tau } | Self::GenericTilde { rho, sigma, tau } => {
                nz("rho", rho)?;
                nz("sigma", sigma)?;
                nz("tau", tau)
            }
            Self::TauZero { rho, sigma } => {
                nz("rho", rho)?;
                nz("sigma", sigma)
            }
            Self::SigmaZero { rho, tau } => {
                nz("rho", rho)?;
                nz("tau", tau)
            }
            Self::RhoZero { sigma, tau } => {
                nz("sigma", sigma)?;
                nz("tau", tau)
            }
            Self::RhoOnly { rho } => nz("rho", rho),
            Self::TwoDTau { tau, .. } => nz("tau", tau),
            Self::TwoDSigma { sigma, .. } | Self::TwoDSigmaTilde { sigma, .. } => nz("sigma", sigma),
            Self::Surface { rho, zeta, .. } => {
                nz("rho", rho)?;
                nz("zeta", zeta)
            }
            Self::ZeroDim { .. } => Ok(()),
            Self::Sym | Self::SymAdjoint => {
                let d = params.alpha.clone() * params.alpha.clone() - params.beta.clone() * params.gamma.clone();
                if d <= R::zero() {
                    return Err(Error::InvalidParams(
                        "symmetric gauge needs alpha^2 > beta*gamma".into(),
                    ));
                }
                Ok(())
            }
        }
    }
}

/// Phase `Φ(g, x)` and shifted argument `S(g, x)`.
pub fn phase_and_shift<R: Real>(
    label: &UirLabel,
    g: &GroupElement<R>,
    params: &ExtensionParams<R>,
    point: &[f64],
) -> Result<(f64, Vec<f64>)> {
    label.validate(params)?;
    if point.len() != label.dimension() {
        return Err(Error::DimensionMismatch {
            expected: label.dimension(),
            got: point.len(),
        });
    }
    if label.is_anti() {
        return phase_and_shift(&UirLabel::Sym, &inverse(g, params), params, point);
    }
    let h = R::half();
    let (al, be, ga) = (params.alpha.clone(), params.beta.clone(), params.gamma.clone());
    let [q1, q2] = g.q.clone();
    let [p1, p2] = g.p.clone();
    let f = |x: R| x.to_f64();
    let (alf, bef, gaf) = (f(al.clone()), f(be.clone()), f(ga.clone()));
    let (q1f, q2f, p1f, p2f) = (f(q1.clone()), f(q2.clone()), f(p1.clone()), f(p2.clone()));

    // Point-independent brackets shared by the four-dimensional families.
    let theta4 = || f(g.theta.clone() + h.clone() * al.clone() * (q1.clone() * p1.clone() - q2.clone() * p2.clone()));
    let phi4 = || f(g.phi.clone() - h.clone() * be.clone() * p1.clone() * p2.clone());
    let psi4 = || f(g.psi.clone() + h.clone() * ga.clone() * q1.clone() * q2.clone());

    let four = |rho: f64, sigma: f64, tau: f64, tilde: bool| {
        let (r1, s2) = (point[0], point[1]);
        let sgn = if tilde { -1.0 } else { 1.0 };
        let a = theta4() - sgn * alf * q2f * s2 + alf * p1f * r1;
        let b = phi4() - sgn * bef * p1f * s2;
        let c = psi4() + gaf * q2f * r1;
        (rho * a + sigma * b + tau * c, vec![r1 + q1f, s2 + sgn * p2f])
    };

    let out = match *label {
        UirLabel::Generic { rho, sigma, tau } => four(rho, sigma, tau, false),
        UirLabel::GenericTilde { rho, sigma, tau } => four(rho, sigma, tau, true),
        UirLabel::TauZero { rho, sigma } => four(rho, sigma, 0.0, false),
        UirLabel::SigmaZero { rho, tau } => four(rho, 0.0, tau, false),
        UirLabel::RhoZero { sigma, tau } => four(0.0, sigma, tau, false),
        UirLabel::RhoOnly { rho } => four(rho, 0.0, 0.0, false),
        UirLabel::TwoDTau { c1, c2, tau } => {
            let r = point[0];
            let c = f(g.psi.clone() - h.clone() * ga.clone() * q1.clone() * q2.clone()) - gaf * q1f * r;
            (c1 * p1f + c2 * p2f + tau * c, vec![r + q2f])
        }
        UirLabel::TwoDSigma { c3, c4, sigma } | UirLabel::TwoDSigmaTilde { c3, c4, sigma } => {
            let s = point[0];
            let sgn = if matches!(label, UirLabel::TwoDSigmaTilde { .. }) {
                -1.0
            } else {
                1.0
            };
            let b = phi4() - sgn * bef * p1f * s;
            (c3 * q1f + c4 * q2f + sigma * b, vec![s + sgn * p2f])
        }
        UirLabel::Surface {
            kappa,
            delta,
            rho,
            zeta,
        } => {
            let s = point[0];
            let a = f(g.theta.clone() - h.clone() * al.clone() * q1.clone() * p1.clone())
                - zeta * alf * alf * q1f * q2f / (2.0 * bef)
                - alf * q1f * s;
            let b = f(g.phi.clone() + h.clone() * be.clone() * p1.clone() * p2.clone())
                + zeta * alf * q2f * p2f / 2.0
                + bef * p2f * s;
            let c = f(al.clone() * al.clone() * g.psi.clone() / (ga.clone() * be.clone()));
            let phase = kappa * q1f + delta * q2f + rho * a + (rho / zeta) * b + zeta * rho * c;
            (phase, vec![s + p1f + zeta * alf * q2f / bef])
        }
        UirLabel::ZeroDim { c1, c2, c3, c4 } => (c1 * p1f + c2 * p2f + c3 * q1f + c4 * q2f, vec![]),
        UirLabel::Sym => {
            let (r1, r2) = (point[0], point[1]);
            let sq = (alf * alf - bef * gaf).sqrt();
            let central = f(g.theta.clone() + g.phi.clone() + g.psi.clone());
            let phase = central + alf * (p1f * r1 + p2f * r2) - alf * (alf - sq) / bef * (q1f * r2 - q2f * r1)
                + sq / 2.0 * (p1f * q1f + p2f * q2f);
            let k = (alf + sq) / (2.0 * alf);
            let m = bef / (2.0 * alf);
            (phase, vec![r1 - m * p2f + k * q1f, r2 + m * p1f + k * q2f])
        }
        UirLabel::SymAdjoint => unreachable!("handled above"),
    };
    Ok(out)
}

/// `(U(g)f)(point)`.
pub fn apply_uir<R: Real>(
    label: &UirLabel,
    g: &GroupElement<R>,
    params: &ExtensionParams<R>,
    f: &dyn Fn(&[f64]) -> C64,
    point: &[f64],
) -> Result<C64> {
    let (phase, y) = phase_and_shift(label, g, params, point)?;
    Ok(C64::from_polar(1.0, phase) * f(&y))
}

/// `(Tf)(point)`; `T` is an involution.
pub fn intertwine_t(kind: Flip, f: &dyn Fn(&[f64]) -> C64, point: &[f64]) -> Result<C64> {
    Ok(f(&kind.apply(point)?))
}

/// `(T⁻¹ U(g) T f)(point)`.
pub fn conjugate_by_t<R: Real>(
    kind: Flip,
    label: &UirLabel,
    g: &GroupElement<R>,
    params: &ExtensionParams<R>,
    f: &dyn Fn(&[f64]) -> C64,
    point: &[f64],
) -> Result<C64> {
    let tf = |y: &[f64]| f(&kind.apply(y).expect("flip preserves arity"));
    apply_uir(label, g, params, &tf, &kind.apply(point)?)
}

/// `−iC·d/dη (U(η)f)(point)` at `η = 0` along one group coordinate, by a central difference.
pub fn numeric_generator(
    label: &UirLabel,
    params: &ExtensionParams<f64>,
    direction: Coord,
    c: f64,
    f: &dyn Fn(&[f64]) -> C64,
    point: &[f64],
    step: f64,
) -> Result<C64> {
    let along = |eta: f64| {
        let mut x = [0.0; 7];
        x[direction.index()] = eta;
        GroupElement::from_coords(x)
    };
    let plus = apply_uir(label, &along(step), params, f, point)?;
    let minus = apply_uir(label, &along(-step), params, f, point)?;
    Ok(C64::new(0.0, -c) * (plus - minus) / (2.0 * step))
}

/// `‖f‖₂` over `ℝ^dim` (dim 1 or 2) by a tensor Gauss–Hermite rule with `nodes` points per axis.
pub fn norm_l2(f: &dyn Fn(&[f64]) -> C64, dim: usize, nodes: usize) -> Result<f64> {
    let (x, w) = quadrature::folded(nodes);
    let total = match dim {
        1 => x.iter().zip(&w).map(|(xi, wi)| wi * f(&[*xi]).norm_sqr()).sum::<f64>(),
        2 => x
            .iter()
            .zip(&w)
            .map(|(xi, wi)| {
                x.iter()
                    .zip(&w)
                    .map(|(yj, wj)| wi * wj * f(&[*xi, *yj]).norm_sqr())
                    .sum::<f64>()
            })
            .sum(),
        _ => {
            return Err(Error::Precondition(format!(
                "quadrature supports dimension 1 or 2, got {dim}"
            )))
        }
    };
    Ok(total.sqrt())
}

/// `e^{−|x−c|²/(2w²)} e^{i⟨k,x⟩}` in any dimension.
pub fn gaussian(center: Vec<f64>, width: f64, momentum: Vec<f64>) -> impl Fn(&[f64]) -> C64 + Send + Sync {
    move |x: &[f64]| {
        let mut r2 = 0.0;
        let mut kx = 0.0;
        for (i, xi) in x.iter().enumerate() {
            let d = xi - center.get(i).copied().unwrap_or(0.0);
            r2 += d * d;
            kx += momentum.get(i).copied().unwrap_or(0.0) * xi;
        }
        C64::from_polar((-r2 / (2.0 * width * width)).exp(), kx)
    }
}

/// One-dimensional Hermite function `Hₙ(x) e^{−x²/2}` (physicists' `Hₙ`), unnormalized.
pub fn hermite_gaussian(n: usize) -> impl Fn(&[f64]) -> C64 + Send + Sync {
    move |x: &[f64]| {
        let t = x[0];
        let (mut h0, mut h1) = (1.0, 2.0 * t);
        let hn = match n {
            0 => h0,
            _ => {
                for k in 1..n {
                    let h2 = 2.0 * t * h1 - 2.0 * k as f64 * h0;
                    h0 = h1;
                    h1 = h2;
                }
                h1
            }
        };
        C64::new(hn * (-t * t / 2.0).exp(), 0.0)
    }
}

/// One label per family with generic parameters.
pub fn sample_labels() -> Vec<UirLabel> {
    vec![
        UirLabel::Generic {
            rho: 1.1,
            sigma: -0.7,
            tau: 0.4,
        },
        UirLabel::GenericTilde {
            rho: 1.1,
            sigma: -0.7,
            tau: 0.4,
        },
        UirLabel::TauZero { rho: 0.8, sigma: 1.3 },
        UirLabel::SigmaZero { rho: -0.5, tau: 0.9 },
        UirLabel::RhoZero { sigma: 0.6, tau: -1.2 },
        UirLabel::RhoOnly { rho: 1.7 },
        UirLabel::TwoDTau {
            c1: 0.3,
            c2: -0.4,
            tau: 1.5,
        },
        UirLabel::TwoDSigma {
            c3: 0.2,
            c4: 0.9,
            sigma: -0.8,
        },
        UirLabel::TwoDSigmaTilde {
            c3: 0.2,
            c4: 0.9,
            sigma: -0.8,
        },
        UirLabel::Surface {
            kappa: 0.3,
            delta: -0.2,
            rho: 1.1,
            zeta: 0.8,
        },
        UirLabel::ZeroDim {
            c1: 0.1,
            c2: 0.2,
            c3: 0.3,
            c4: 0.4,
        },
        UirLabel::Sym,
        UirLabel::SymAdjoint,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::compose;
    use crate::scalar::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params() -> ExtensionParams<f64> {
        ExtensionParams::new(1.3, 0.7, 0.4).unwrap()
    }

    fn rand_el(rng: &mut ChaCha8Rng) -> GroupElement<f64> {
        GroupElement::from_coords(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
    }

    #[test]
    fn identity_acts_trivially() {
        let p = params();
        for l in sample_labels() {
            let f = gaussian(vec![0.2, -0.1], 1.0, vec![0.5, 0.3]);
            let x = vec![0.4, -0.3][..l.dimension()].to_vec();
            let v = apply_uir(&l, &GroupElement::identity(), &p, &f, &x).unwrap();
            assert!((v - f(&x)).norm() < 1e-15, "{}", l.name());
        }
    }

    #[test]
    fn theta_pi_on_generic() {
        let p = ExtensionParams::unit();
        let g = GroupElement::new(std::f64::consts::PI, 0.0, 0.0, [0.0; 2], [0.0; 2]);
        let f = gaussian(vec![0.0, 0.0], 1.0, vec![0.0, 0.0]);
        let v = apply_uir(
            &UirLabel::Generic {
                rho: 1.0,
                sigma: 1.0,
                tau: 1.0,
            },
            &g,
            &p,
            &f,
            &[0.3, 0.2],
        )
        .unwrap();
        assert!((v + f(&[0.3, 0.2])).norm() < 1e-15);
    }

    #[test]
    fn characters() {
        let p = ExtensionParams::unit();
        let g = GroupElement::new(0.0, 0.0, 0.0, [0.5, -1.0], [2.0, 0.25]);
        let l = UirLabel::ZeroDim {
            c1: 1.0,
            c2: 2.0,
            c3: 3.0,
            c4: 4.0,
        };
        let v = apply_uir(&l, &g, &p, &|_: &[f64]| C64::new(1.0, 0.0), &[]).unwrap();
        let expect = C64::from_polar(1.0, 2.0 + 0.5 + 1.5 - 4.0);
        assert!((v - expect).norm() < 1e-15);
    }

    #[test]
    fn homomorphism_every_family() {
        let p = params();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = gaussian(vec![0.1, 0.2], 0.9, vec![0.4, -0.6]);
        for l in sample_labels() {
            for _ in 0..20 {
                let (g1, g2) = (rand_el(&mut rng), rand_el(&mut rng));
                let x: Vec<f64> = (0..l.dimension()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let prod = if l.is_anti() {
                    compose(&g2, &g1, &p)
                } else {
                    compose(&g1, &g2, &p)
                };
                let lhs = apply_uir(&l, &prod, &p, &f, &x).unwrap();
                let inner = |y: &[f64]| apply_uir(&l, &g2, &p, &f, y).unwrap();
                let rhs = apply_uir(&l, &g1, &p, &inner, &x).unwrap();
                assert!((lhs - rhs).norm() < 1e-10, "{}", l.name());
            }
        }
    }

    #[test]
    fn exact_and_float_elements_agree() {
        let pe = ExtensionParams::new(rat(3, 2), rat(1, 2), rat(2, 3)).unwrap();
        let g = GroupElement::from_coords([1, -2, 3, 1, 2, -1, 1].map(|v| rat(v, 3)));
        let f = gaussian(vec![0.0, 0.0], 1.0, vec![0.0, 0.0]);
        for l in sample_labels() {
            let x = vec![0.4, -0.3][..l.dimension()].to_vec();
            let a = apply_uir(&l, &g, &pe, &f, &x).unwrap();
            let b = apply_uir(&l, &g.to_f64(), &pe.to_f64(), &f, &x).unwrap();
            assert!((a - b).norm() < 1e-13, "{}", l.name());
        }
    }

    #[test]
    fn flip_conjugation() {
        let p = params();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = gaussian(vec![0.3, -0.4], 1.1, vec![0.2, 0.7]);
        let pairs = [
            (
                Flip::Flip2D,
                UirLabel::Generic {
                    rho: 1.1,
                    sigma: -0.7,
                    tau: 0.4,
                },
                UirLabel::GenericTilde {
                    rho: 1.1,
                    sigma: -0.7,
                    tau: 0.4,
                },
            ),
            (
                Flip::Flip1D,
                UirLabel::TwoDSigma {
                    c3: 0.2,
                    c4: 0.9,
                    sigma: -0.8,
                },
                UirLabel::TwoDSigmaTilde {
                    c3: 0.2,
                    c4: 0.9,
                    sigma: -0.8,
                },
            ),
        ];
        for (kind, u, ut) in pairs {
            for _ in 0..50 {
                let g = rand_el(&mut rng);
                let x: Vec<f64> = (0..kind.dimension()).map(|_| rng.gen_range(-2.0..2.0)).collect();
                let lhs = conjugate_by_t(kind, &u, &g, &p, &f, &x).unwrap();
                let rhs = apply_uir(&ut, &g, &p, &f, &x).unwrap();
                assert!((lhs - rhs).norm() < 1e-12);
                let tt = intertwine_t(kind, &|y: &[f64]| intertwine_t(kind, &f, y).unwrap(), &x).unwrap();
                assert_eq!(tt, f(&x));
            }
        }
        assert!(intertwine_t(Flip::Flip1D, &f, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn unitarity_on_gaussians() {
        let p = params();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = gaussian(vec![0.2, -0.1], 1.0, vec![0.3, 0.1]);
        for l in sample_labels().into_iter().filter(|l| l.dimension() > 0) {
            let n0 = norm_l2(&f, l.dimension(), 64).unwrap();
            for _ in 0..5 {
                let g = rand_el(&mut rng);
                let uf = |x: &[f64]| apply_uir(&l, &g, &p, &f, x).unwrap();
                let n1 = norm_l2(&uf, l.dimension(), 64).unwrap();
                assert!((n1 / n0 - 1.0).abs() < 1e-8, "{}", l.name());
            }
        }
    }

    #[test]
    fn norm_of_unit_gaussian() {
        let c = std::f64::consts::PI.powf(-0.25);
        let f = move |x: &[f64]| C64::new(c * (-x[0] * x[0] / 2.0).exp(), 0.0);
        assert!((norm_l2(&f, 1, 64).unwrap() - 1.0).abs() < 1e-10);
        let g = move |x: &[f64]| f(x) * 2.0;
        assert!((norm_l2(&g, 1, 64).unwrap() - 2.0).abs() < 1e-12);
        let h2 = hermite_gaussian(2);
        let n = norm_l2(&h2, 1, 64).unwrap();
        assert!((n * n - 8.0 * std::f64::consts::PI.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn central_generator_is_scalar() {
        let p = ExtensionParams::new(2.0, 1.0, 1.0).unwrap();
        let rho = 1.5;
        let l = UirLabel::Generic {
            rho,
            sigma: 1.0,
            tau: 1.0,
        };
        let f = gaussian(vec![0.0, 0.0], 1.0, vec![0.0, 0.0]);
        let x = [0.3, -0.2];
        let v = numeric_generator(&l, &p, Coord::Theta, 1.0 / (rho * 2.0), &f, &x, 1e-4).unwrap();
        assert!((v - f(&x) * 0.5).norm() < 1e-8);
        let l = UirLabel::TwoDTau {
            c1: 0.0,
            c2: 0.0,
            tau: 2.0,
        };
        let v = numeric_generator(&l, &p, Coord::Phi, 1.0, &f, &[0.1], 1e-4).unwrap();
        assert_eq!(v, C64::new(0.0, 0.0));
    }

    #[test]
    fn label_validation() {
        let p = params();
        let f = gaussian(vec![0.0], 1.0, vec![0.0]);
        let bad = UirLabel::Generic {
            rho: 0.0,
            sigma: 1.0,
            tau: 1.0,
        };
        assert!(matches!(
            apply_uir(&bad, &GroupElement::identity(), &p, &f, &[0.0, 0.0]),
            Err(Error::InvalidParams(_))
        ));
        let l = UirLabel::RhoOnly { rho: 1.0 };
        assert!(matches!(
            apply_uir(&l, &GroupElement::identity(), &p, &f, &[0.0]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
        let q = ExtensionParams::<f64>::unit();
        assert!(UirLabel::Sym.validate(&q).is_err());
        assert_eq!(
            UirLabel::from_parts("surface", &[0.0, 0.0, 1.0, 2.0])
                .unwrap()
                .dimension(),
            1
        );
        assert!(UirLabel::from_parts("generic", &[1.0]).is_err());
        for name in UirLabel::NAMES {
            let n = match name {
                "sym" | "sym-adjoint" => 0,
                "rho-only" => 1,
                "tau-zero" | "sigma-zero" | "rho-zero" => 2,
                "generic" | "generic-tilde" | "two-d-tau" | "two-d-sigma" | "two-d-sigma-tilde" => 3,
                _ => 4,
            };
            assert_eq!(UirLabel::from_parts(name, &vec![1.0; n]).unwrap().name(), name);
        }
    }
}
