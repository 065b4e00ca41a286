//! Configuration-space realizations of the non-central generators `Q̂₁, Q̂₂, P̂₁, P̂₂`
//! and their commutator tables.

use super::{Alphabet, WeylPoly};
use crate::error::{Error, Result};
use crate::scalar::{Real, Ring};
use num::Complex;

/// `ħ`, `ϑ` and `𝓑` (the magnetic field is `B = 𝓑/ħ`).
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeParams<R> {
    pub hbar: R,
    pub vartheta: R,
    pub bcal: R,
}

impl<R: Real> GaugeParams<R> {
    pub fn new(hbar: R, vartheta: R, bcal: R) -> Result<Self> {
        if hbar <= R::zero() {
            return Err(Error::InvalidParams("hbar must be > 0".into()));
        }
        Ok(Self { hbar, vartheta, bcal })
    }

    /// `ħ² − 𝓑ϑ`.
    pub fn discriminant(&self) -> R {
        self.hbar.clone() * self.hbar.clone() - self.bcal.clone() * self.vartheta.clone()
    }

    /// `B = 𝓑/ħ`.
    pub fn magnetic_field(&self) -> R {
        self.bcal.clone() / self.hbar.clone()
    }

    /// `√(ħ² − 𝓑ϑ)` when it exists in this scalar kind. Zero at the degenerate point.
    pub fn sqrt_discriminant(&self) -> Result<R> {
        let d = self.discriminant();
        if d < R::zero() {
            return Err(Error::Degenerate("hbar^2 - Bcal*vartheta must be >= 0".into()));
        }
        d.sqrt_opt()
            .ok_or_else(|| Error::Inexact("sqrt(hbar^2 - Bcal*vartheta) is irrational; use floats".into()))
    }

    pub fn to_f64(&self) -> GaugeParams<f64> {
        GaugeParams {
            hbar: self.hbar.to_f64(),
            vartheta: self.vartheta.to_f64(),
            bcal: self.bcal.to_f64(),
        }
    }
}

/// Names of the realizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Landau,
    DegenerateSurface1D,
    ThetaOnly,
    LandauSystem,
    StandardQm,
    TwoNcPlanes,
    SingleNcPlaneMomentum,
    SingleNcPlanePosition,
    Trivial,
    SymmetricGauge,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 10] = [
        CaseLabel::Landau,
        CaseLabel::DegenerateSurface1D,
        CaseLabel::ThetaOnly,
        CaseLabel::LandauSystem,
        CaseLabel::StandardQm,
        CaseLabel::TwoNcPlanes,
        CaseLabel::SingleNcPlaneMomentum,
        CaseLabel::SingleNcPlanePosition,
        CaseLabel::Trivial,
        CaseLabel::SymmetricGauge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::Landau => "landau",
            CaseLabel::DegenerateSurface1D => "degenerate-1d",
            CaseLabel::ThetaOnly => "theta-only",
            CaseLabel::LandauSystem => "landau-system",
            CaseLabel::StandardQm => "standard-qm",
            CaseLabel::TwoNcPlanes => "two-nc-planes",
            CaseLabel::SingleNcPlaneMomentum => "nc-plane-momentum",
            CaseLabel::SingleNcPlanePosition => "nc-plane-position",
            CaseLabel::Trivial => "trivial",
            CaseLabel::SymmetricGauge => "symmetric",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown case {s:?}")))
    }

    pub fn alphabet(self) -> Alphabet {
        match self {
            CaseLabel::DegenerateSurface1D | CaseLabel::SingleNcPlaneMomentum | CaseLabel::SingleNcPlanePosition => {
                Alphabet::Real1
            }
            _ => Alphabet::Real2,
        }
    }
}

/// A realization together with the constants it needs.
#[derive(Clone, Debug, PartialEq)]
pub enum GaugeCase<R> {
    /// Vector potential `(0, B r₁)`.
    Landau(GaugeParams<R>),
    /// The `ħ² = 𝓑ϑ` surface, on `L²(ℝ)`, with the orbit labels `κ, δ`.
    DegenerateSurface1D {
        hbar: R,
        vartheta: R,
        kappa: R,
        delta: R,
    },
    /// No magnetic field; `𝓑` is ignored.
    ThetaOnly(GaugeParams<R>),
    /// Commuting positions; `ϑ` is ignored.
    LandauSystem(GaugeParams<R>),
    StandardQm {
        hbar: R,
    },
    /// `κ₁ = −σβ`, `κ₂ = −τγ`.
    TwoNcPlanes {
        kappa1: R,
        kappa2: R,
    },
    SingleNcPlaneMomentum {
        c1: R,
        c2: R,
        kappa2: R,
    },
    SingleNcPlanePosition {
        c3: R,
        c4: R,
        kappa1: R,
    },
    Trivial {
        c1: R,
        c2: R,
        c3: R,
        c4: R,
    },
    /// Vector potential `(−B r₂/2, B r₁/2)`; needs `ħ² − 𝓑ϑ ≥ 0` and `ϑ ≠ 0`.
    SymmetricGauge(GaugeParams<R>),
}

impl<R: Real> GaugeCase<R> {
    /// Assembles a case from `(ħ, ϑ, 𝓑)` and up to four extra constants, read in field order:
    /// `κ, δ` for the degenerate surface, `κ₁, κ₂` for two planes, `c₁, c₂, κ₂` and
    /// `c₃, c₄, κ₁` for the single planes, `c₁ … c₄` for the trivial case.
    pub fn build(label: CaseLabel, gp: GaugeParams<R>, extra: [R; 4]) -> Self {
        let [e0, e1, e2, e3] = extra;
        match label {
            CaseLabel::Landau => GaugeCase::Landau(gp),
            CaseLabel::DegenerateSurface1D => GaugeCase::DegenerateSurface1D {
                hbar: gp.hbar,
                vartheta: gp.vartheta,
                kappa: e0,
                delta: e1,
            },
            CaseLabel::ThetaOnly => GaugeCase::ThetaOnly(gp),
            CaseLabel::LandauSystem => GaugeCase::LandauSystem(gp),
            CaseLabel::StandardQm => GaugeCase::StandardQm { hbar: gp.hbar },
            CaseLabel::TwoNcPlanes => GaugeCase::TwoNcPlanes { kappa1: e0, kappa2: e1 },
            CaseLabel::SingleNcPlaneMomentum => GaugeCase::SingleNcPlaneMomentum {
                c1: e0,
                c2: e1,
                kappa2: e2,
            },
            CaseLabel::SingleNcPlanePosition => GaugeCase::SingleNcPlanePosition {
                c3: e0,
                c4: e1,
                kappa1: e2,
            },
            CaseLabel::Trivial => GaugeCase::Trivial {
                c1: e0,
                c2: e1,
                c3: e2,
                c4: e3,
            },
            CaseLabel::SymmetricGauge => GaugeCase::SymmetricGauge(gp),
        }
    }

    pub fn label(&self) -> CaseLabel {
        match self {
            GaugeCase::Landau(_) => CaseLabel::Landau,
            GaugeCase::DegenerateSurface1D { .. } => CaseLabel::DegenerateSurface1D,
            GaugeCase::ThetaOnly(_) => CaseLabel::ThetaOnly,
            GaugeCase::LandauSystem(_) => CaseLabel::LandauSystem,
            GaugeCase::StandardQm { .. } => CaseLabel::StandardQm,
            GaugeCase::TwoNcPlanes { .. } => CaseLabel::TwoNcPlanes,
            GaugeCase::SingleNcPlaneMomentum { .. } => CaseLabel::SingleNcPlaneMomentum,
            GaugeCase::SingleNcPlanePosition { .. } => CaseLabel::SingleNcPlanePosition,
            GaugeCase::Trivial { .. } => CaseLabel::Trivial,
            GaugeCase::SymmetricGauge(_) => CaseLabel::SymmetricGauge,
        }
    }
}

/// The four non-central generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators<C> {
    pub q1: WeylPoly<C>,
    pub q2: WeylPoly<C>,
    pub p1: WeylPoly<C>,
    pub p2: WeylPoly<C>,
}

impl<C: Ring> Generators<C> {
    /// In the order `(Q̂₁, P̂₂, Q̂₂, P̂₁)` used by the transformation matrices.
    pub fn ordered(&self) -> [&WeylPoly<C>; 4] {
        [&self.q1, &self.p2, &self.q2, &self.p1]
    }

    pub fn from_ordered([q1, p2, q2, p1]: [WeylPoly<C>; 4]) -> Self {
        Self { q1, q2, p1, p2 }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D + Copy) -> Generators<D> {
        Generators {
            q1: self.q1.map_coeffs(f),
            q2: self.q2.map_coeffs(f),
            p1: self.p1.map_coeffs(f),
            p2: self.p2.map_coeffs(f),
        }
    }

    /// Largest coefficient-wise difference over all four generators.
    pub fn max_diff(&self, other: &Self) -> Result<f64> {
        let pairs = [
            (&self.q1, &other.q1),
            (&self.q2, &other.q2),
            (&self.p1, &other.p1),
            (&self.p2, &other.p2),
        ];
        pairs.iter().try_fold(0.0f64, |m, (a, b)| Ok(m.max(a.max_diff(b)?)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "Q1": self.q1.to_json(), "Q2": self.q2.to_json(),
            "P1": self.p1.to_json(), "P2": self.p2.to_json(),
            "pretty": {
                "Q1": self.q1.pretty(), "Q2": self.q2.pretty(),
                "P1": self.p1.pretty(), "P2": self.p2.pretty(),
            },
        })
    }
}

fn re<R: Real>(x: R) -> Complex<R> {
    Complex::new(x, R::zero())
}

fn im<R: Real>(x: R) -> Complex<R> {
    Complex::new(R::zero(), x)
}

/// `Σ cₖ·termₖ` where each term is a position (`'x'`) or derivative (`'d'`) symbol or the identity (`'1'`).
fn lin<R: Real>(a: Alphabet, parts: &[(Complex<R>, char, usize)]) -> WeylPoly<Complex<R>> {
    parts.iter().fold(WeylPoly::zero(a), |acc, (c, kind, i)| {
        let sym = match kind {
            'x' => WeylPoly::x(a, *i),
            'd' => WeylPoly::d(a, *i),
            _ => WeylPoly::one(a),
        };
        acc.add(&sym.scale(c)).expect("same alphabet")
    })
}

/// The realization of `case` as Weyl-algebra symbols.
pub fn gauge_generators<R: Real>(case: &GaugeCase<R>) -> Result<Generators<Complex<R>>> {
    let one = || R::one();
    let a2 = Alphabet::Real2;
    let a1 = Alphabet::Real1;
    Ok(match case.clone() {
        GaugeCase::Landau(p) => {
            let b = p.magnetic_field();
            Generators {
                q1: lin(a2, &[(re(one()), 'x', 0), (im(p.vartheta), 'd', 1)]),
                q2: lin(a2, &[(re(one()), 'x', 1)]),
                p1: lin(a2, &[(im(-p.hbar.clone()), 'd', 0)]),
                p2: lin(a2, &[(re(-b), 'x', 0), (im(-p.hbar), 'd', 1)]),
            }
        }
        GaugeCase::DegenerateSurface1D {
            hbar,
            vartheta,
            kappa,
            delta,
        } => {
            if vartheta.is_zero() {
                return Err(Error::Degenerate("vartheta must be nonzero".into()));
            }
            Generators {
                q1: lin(a1, &[(re(-one()), 'x', 0)]),
                q2: lin(a1, &[(im(vartheta.clone()), 'd', 0)]),
                p1: lin(a1, &[(re(hbar.clone() * kappa), '1', 0), (im(hbar.clone()), 'd', 0)]),
                p2: lin(a1, &[(re(hbar.clone() * delta), '1', 0), (re(hbar / vartheta), 'x', 0)]),
            }
        }
        GaugeCase::ThetaOnly(p) => Generators {
            q1: lin(a2, &[(re(one()), 'x', 0), (im(p.vartheta), 'd', 1)]),
            q2: lin(a2, &[(re(one()), 'x', 1)]),
            p1: lin(a2, &[(im(-p.hbar.clone()), 'd', 0)]),
            p2: lin(a2, &[(im(-p.hbar), 'd', 1)]),
        },
        GaugeCase::LandauSystem(p) => {
            let b = p.magnetic_field();
            Generators {
                q1: lin(a2, &[(re(one()), 'x', 0)]),
                q2: lin(a2, &[(re(one()), 'x', 1)]),
                p1: lin(a2, &[(im(-p.hbar.clone()), 'd', 0)]),
                p2: lin(a2, &[(re(-b), 'x', 0), (im(-p.hbar), 'd', 1)]),
            }
        }
        GaugeCase::StandardQm { hbar } => Generators {
            q1: lin(a2, &[(re(one()), 'x', 0)]),
            q2: lin(a2, &[(re(one()), 'x', 1)]),
            p1: lin(a2, &[(im(-hbar.clone()), 'd', 0)]),
            p2: lin(a2, &[(im(-hbar), 'd', 1)]),
        },
        GaugeCase::TwoNcPlanes { kappa1, kappa2 } => Generators {
            q1: lin(a2, &[(im(kappa1), 'd', 1)]),
            q2: lin(a2, &[(re(one()), 'x', 1)]),
            p1: lin(a2, &[(im(-one()), 'd', 0)]),
            p2: lin(a2, &[(re(-kappa2), 'x', 0)]),
        },
        GaugeCase::SingleNcPlaneMomentum { c1, c2, kappa2 } => Generators {
            q1: lin(a1, &[(re(c1), '1', 0)]),
            q2: lin(a1, &[(re(c2), '1', 0)]),
            p1: lin(a1, &[(re(kappa2), 'x', 0)]),
            p2: lin(a1, &[(im(-one()), 'd', 0)]),
        },
        GaugeCase::SingleNcPlanePosition { c3, c4, kappa1 } => Generators {
            q1: lin(a1, &[(re(-kappa1), 'x', 0)]),
            q2: lin(a1, &[(im(one()), 'd', 0)]),
            p1: lin(a1, &[(re(c3), '1', 0)]),
            p2: lin(a1, &[(re(c4), '1', 0)]),
        },
        GaugeCase::Trivial { c1, c2, c3, c4 } => Generators {
            q1: lin(a2, &[(re(c1), '1', 0)]),
            q2: lin(a2, &[(re(c2), '1', 0)]),
            p1: lin(a2, &[(re(c3), '1', 0)]),
            p2: lin(a2, &[(re(c4), '1', 0)]),
        },
        GaugeCase::SymmetricGauge(p) => {
            if p.vartheta.is_zero() {
                return Err(Error::Degenerate("vartheta must be nonzero".into()));
            }
            let s = p.sqrt_discriminant()?;
            let (h, t) = (p.hbar.clone(), p.vartheta.clone());
            let half = R::half();
            Generators {
                q1: lin(a2, &[(re(one()), 'x', 0), (im(half.clone() * t.clone()), 'd', 1)]),
                q2: lin(a2, &[(re(one()), 'x', 1), (im(-(half.clone() * t.clone())), 'd', 0)]),
                p1: lin(
                    a2,
                    &[
                        (re((h.clone() - s.clone()) / t.clone()), 'x', 1),
                        (im(-(half.clone() * (h.clone() + s.clone()))), 'd', 0),
                    ],
                ),
                p2: lin(
                    a2,
                    &[
                        (re((s.clone() - h.clone()) / t), 'x', 0),
                        (im(-(half * (h + s))), 'd', 1),
                    ],
                ),
            }
        }
    })
}

/// `[Q̂₁,P̂₁], [Q̂₂,P̂₂], [Q̂₁,Q̂₂], [P̂₁,P̂₂], [Q̂₁,P̂₂], [Q̂₂,P̂₁]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorTable<C> {
    pub entries: [WeylPoly<C>; 6],
}

impl<C: Ring> CommutatorTable<C> {
    pub const NAMES: [&'static str; 6] = ["[Q1,P1]", "[Q2,P2]", "[Q1,Q2]", "[P1,P2]", "[Q1,P2]", "[Q2,P1]"];

    /// The six scalars when every entry is a multiple of the identity.
    pub fn scalars(&self) -> Option<[C; 6]> {
        let v: Vec<C> = self.entries.iter().map(WeylPoly::as_constant).collect::<Option<_>>()?;
        v.try_into().ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m: serde_json::Map<_, _> = Self::NAMES
            .iter()
            .zip(&self.entries)
            .map(|(n, e)| (n.to_string(), serde_json::Value::String(e.pretty())))
            .collect();
        serde_json::Value::Object(m)
    }
}

pub fn commutator_table<C: Ring>(g: &Generators<C>) -> Result<CommutatorTable<C>> {
    Ok(CommutatorTable {
        entries: [
            g.q1.commutator(&g.p1)?,
            g.q2.commutator(&g.p2)?,
            g.q1.commutator(&g.q2)?,
            g.p1.commutator(&g.p2)?,
            g.q1.commutator(&g.p2)?,
            g.q2.commutator(&g.p1)?,
        ],
    })
}

/// The tabulated commutators of `case`, as multiples of the identity.
pub fn expected_table<R: Real>(case: &GaugeCase<R>) -> [Complex<R>; 6] {
    let z = || Complex::new(R::zero(), R::zero());
    match case.clone() {
        GaugeCase::Landau(p) | GaugeCase::SymmetricGauge(p) => {
            [im(p.hbar.clone()), im(p.hbar), im(p.vartheta), im(p.bcal), z(), z()]
        }
        GaugeCase::DegenerateSurface1D { hbar, vartheta, .. } => [
            im(hbar.clone()),
            im(hbar.clone()),
            im(vartheta.clone()),
            im(hbar.clone() * hbar / vartheta),
            z(),
            z(),
        ],
        GaugeCase::ThetaOnly(p) => [im(p.hbar.clone()), im(p.hbar), im(p.vartheta), z(), z(), z()],
        GaugeCase::LandauSystem(p) => [im(p.hbar.clone()), im(p.hbar), z(), im(p.bcal), z(), z()],
        GaugeCase::StandardQm { hbar } => [im(hbar.clone()), im(hbar), z(), z(), z(), z()],
        GaugeCase::TwoNcPlanes { kappa1, kappa2 } => [z(), z(), im(kappa1), im(kappa2), z(), z()],
        GaugeCase::SingleNcPlaneMomentum { kappa2, .. } => [z(), z(), z(), im(kappa2), z(), z()],
        GaugeCase::SingleNcPlanePosition { kappa1, .. } => [z(), z(), im(kappa1), z(), z(), z()],
        GaugeCase::Trivial { .. } => [z(), z(), z(), z(), z(), z()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, CRat, Rational};

    fn gp(h: (i64, i64), t: (i64, i64), b: (i64, i64)) -> GaugeParams<Rational> {
        GaugeParams::new(rat(h.0, h.1), rat(t.0, t.1), rat(b.0, b.1)).unwrap()
    }

    fn all_cases() -> Vec<GaugeCase<Rational>> {
        let p = gp((2, 1), (1, 3), (-5, 2));
        vec![
            GaugeCase::Landau(p.clone()),
            GaugeCase::DegenerateSurface1D {
                hbar: rat(2, 1),
                vartheta: rat(-1, 3),
                kappa: rat(3, 1),
                delta: rat(1, 7),
            },
            GaugeCase::ThetaOnly(p.clone()),
            GaugeCase::LandauSystem(p.clone()),
            GaugeCase::StandardQm { hbar: rat(3, 2) },
            GaugeCase::TwoNcPlanes {
                kappa1: rat(2, 1),
                kappa2: rat(-3, 4),
            },
            GaugeCase::SingleNcPlaneMomentum {
                c1: rat(1, 1),
                c2: rat(-2, 1),
                kappa2: rat(5, 3),
            },
            GaugeCase::SingleNcPlanePosition {
                c3: rat(4, 1),
                c4: rat(0, 1),
                kappa1: rat(-7, 2),
            },
            GaugeCase::Trivial {
                c1: rat(1, 1),
                c2: rat(2, 1),
                c3: rat(3, 1),
                c4: rat(4, 1),
            },
            GaugeCase::SymmetricGauge(gp((1, 1), (3, 4), (1, 1))),
        ]
    }

    #[test]
    fn every_table_matches() {
        for case in all_cases() {
            let g = gauge_generators(&case).unwrap();
            let t = commutator_table(&g).unwrap();
            assert_eq!(t.scalars().unwrap(), expected_table(&case), "{:?}", case.label());
        }
    }

    #[test]
    fn landau_first_generator() {
        let g = gauge_generators(&GaugeCase::Landau(gp((1, 1), (1, 1), (1, 1)))).unwrap();
        let i: CRat = Complex::new(rat(0, 1), rat(1, 1));
        let expect = WeylPoly::x(Alphabet::Real2, 0)
            .add(&WeylPoly::d(Alphabet::Real2, 1).scale(&i))
            .unwrap();
        assert_eq!(g.q1, expect);
    }

    #[test]
    fn symmetric_gauge_needs_rational_root() {
        let p = gp((1, 1), (1, 2), (1, 2));
        assert!(matches!(
            gauge_generators(&GaugeCase::SymmetricGauge(p.clone())),
            Err(Error::Inexact(_))
        ));
        let g = gauge_generators(&GaugeCase::SymmetricGauge(p.to_f64())).unwrap();
        let t = commutator_table(&g).unwrap().scalars().unwrap();
        assert!((t[3].im - 0.5).abs() < 1e-15 && (t[2].im - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_landau_witness() {
        // ħ² = 𝓑ϑ: P̂₂ + (ħ/ϑ)Q̂₁ = 0
        let p = gp((2, 1), (3, 1), (4, 3));
        assert_eq!(p.discriminant(), rat(0, 1));
        let g = gauge_generators(&GaugeCase::Landau(p.clone())).unwrap();
        let c: CRat = Complex::new(p.hbar / p.vartheta, rat(0, 1));
        assert!(g.p2.add(&g.q1.scale(&c)).unwrap().is_zero());
    }

    #[test]
    fn alphabets_follow_labels() {
        for case in all_cases() {
            assert_eq!(gauge_generators(&case).unwrap().q1.alphabet(), case.label().alphabet());
        }
    }
}
