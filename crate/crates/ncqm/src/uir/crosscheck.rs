//! Numerical comparison of differentiated representations with the gauge generator symbols.
//!
//! Representations on `L²(ℝ², dr₁ds₂)` are compared with configuration-space symbols after
//! mapping the symbols through [`momentum_map`] in the second coordinate. The symmetric
//! gauge already acts on `L²(ℝ², dr₁dr₂)` and needs no map.

use serde::Serialize;

use super::{apply_uir, conjugate_by_t, Coord, Flip, UirLabel};
use crate::error::{Error, Result};
use crate::group::{ExtensionParams, GroupElement};
use crate::scalar::C64;
use crate::weyl::{apply_symbol, gauge_generators, momentum_map, CaseLabel, GaugeCase, GaugeParams, WeylPoly};

/// How a gauge case is obtained from a representation.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub label: UirLabel,
    pub params: ExtensionParams<f64>,
    pub flip: Option<Flip>,
    /// The constant `C` multiplying `−i d/dη`.
    pub c: f64,
    /// `(a, b)` of the momentum map on the second coordinate, if any.
    pub map: Option<(C64, C64)>,
}

/// One generator compared at one point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorCheck {
    pub generator: &'static str,
    pub numeric: [f64; 2],
    pub symbolic: [f64; 2],
    pub error: f64,
}

/// The representation reproducing `case` with `(ħ, ϑ, 𝓑)`, for the cases with a
/// two-dimensional configuration space that come from a four-dimensional orbit.
pub fn realization(case: CaseLabel, gp: &GaugeParams<f64>) -> Result<Realization> {
    let (h, t, b) = (gp.hbar, gp.vartheta, gp.bcal);
    let unit = ExtensionParams::<f64>::unit();
    let map = Some((C64::new(0.0, h), C64::new(0.0, 1.0 / h)));
    let rho = 1.0 / h;
    let sigma = -t / (h * h);
    let tau = -b / (h * h);
    let r = match case {
        CaseLabel::Landau => Realization {
            label: UirLabel::GenericTilde { rho, sigma, tau },
            params: unit,
            flip: None,
            c: h,
            map,
        },
        CaseLabel::ThetaOnly => Realization {
            label: UirLabel::TauZero { rho, sigma },
            params: unit,
            flip: Some(Flip::Flip2D),
            c: h,
            map,
        },
        CaseLabel::LandauSystem => Realization {
            label: UirLabel::SigmaZero { rho, tau },
            params: unit,
            flip: Some(Flip::Flip2D),
            c: h,
            map,
        },
        CaseLabel::StandardQm => Realization {
            label: UirLabel::RhoOnly { rho },
            params: unit,
            flip: Some(Flip::Flip2D),
            c: h,
            map,
        },
        CaseLabel::SymmetricGauge => {
            if t >= 0.0 || b >= 0.0 {
                return Err(Error::InvalidParams(
                    "the symmetric-gauge representation needs vartheta < 0 and Bcal < 0 so that beta, gamma > 0".into(),
                ));
            }
            let params = ExtensionParams::new(1.0 / h, -t / (h * h), -b / (h * h))?;
            Realization {
                label: UirLabel::Sym,
                params,
                flip: None,
                c: h,
                map: None,
            }
        }
        other => {
            return Err(Error::Precondition(format!(
                "no numerical realization for case {}",
                other.name()
            )));
        }
    };
    Ok(r)
}

fn gauge_case(case: CaseLabel, gp: &GaugeParams<f64>) -> GaugeCase<f64> {
    match case {
        CaseLabel::Landau => GaugeCase::Landau(gp.clone()),
        CaseLabel::ThetaOnly => GaugeCase::ThetaOnly(gp.clone()),
        CaseLabel::LandauSystem => GaugeCase::LandauSystem(gp.clone()),
        CaseLabel::StandardQm => GaugeCase::StandardQm { hbar: gp.hbar },
        _ => GaugeCase::SymmetricGauge(gp.clone()),
    }
}

/// `−iC d/dη (U(η)f)(point)` for a realization, including its flip.
pub fn differentiate(
    real: &Realization,
    direction: Coord,
    f: &dyn Fn(&[f64]) -> C64,
    point: &[f64],
    step: f64,
) -> Result<C64> {
    let eval = |eta: f64| {
        let mut x = [0.0; 7];
        x[direction.index()] = eta;
        let g = GroupElement::from_coords(x);
        match real.flip {
            Some(k) => conjugate_by_t(k, &real.label, &g, &real.params, f, point),
            None => apply_uir(&real.label, &g, &real.params, f, point),
        }
    };
    Ok(C64::new(0.0, -real.c) * (eval(step)? - eval(-step)?) / (2.0 * step))
}

/// Compares all four generators of `case` at `point`. `Q̂ᵢ` is the derivative along `pᵢ`
/// and `P̂ᵢ` the derivative along `qᵢ`.
pub fn generator_crosscheck(
    case: CaseLabel,
    gp: &GaugeParams<f64>,
    f: &dyn Fn(&[f64]) -> C64,
    point: &[f64],
    step: f64,
) -> Result<Vec<GeneratorCheck>> {
    let real = realization(case, gp)?;
    let gens = gauge_generators(&gauge_case(case, gp))?;
    let rows: [(&'static str, Coord, &WeylPoly<C64>); 4] = [
        ("Q1", Coord::P1, &gens.q1),
        ("Q2", Coord::P2, &gens.q2),
        ("P1", Coord::Q1, &gens.p1),
        ("P2", Coord::Q2, &gens.p2),
    ];
    rows.into_iter()
        .map(|(name, dir, sym)| {
            let sym = match real.map {
                Some((a, b)) => momentum_map(sym, 1, &a, &b)?,
                None => sym.clone(),
            };
            let numeric = differentiate(&real, dir, f, point, step)?;
            let symbolic = apply_symbol(&sym, f, point, step)?;
            Ok(GeneratorCheck {
                generator: name,
                numeric: [numeric.re, numeric.im],
                symbolic: [symbolic.re, symbolic.im],
                error: (numeric - symbolic).norm(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uir::gaussian;

    fn worst(case: CaseLabel, gp: &GaugeParams<f64>) -> f64 {
        let f = gaussian(vec![0.2, -0.3], 1.0, vec![0.4, 0.1]);
        let mut m = 0.0f64;
        for x in [[0.3, -0.2], [-0.7, 0.5], [1.1, 0.9]] {
            for c in generator_crosscheck(case, gp, &f, &x, 1e-4).unwrap() {
                m = m.max(c.error);
            }
        }
        m
    }

    #[test]
    fn landau_family() {
        let gp = GaugeParams::new(0.8, 0.5, 0.3).unwrap();
        for case in [
            CaseLabel::Landau,
            CaseLabel::ThetaOnly,
            CaseLabel::LandauSystem,
            CaseLabel::StandardQm,
        ] {
            assert!(worst(case, &gp) < 1e-6, "{}", case.name());
        }
    }

    #[test]
    fn symmetric_gauge() {
        let gp = GaugeParams::new(1.0, -0.5, -0.5).unwrap();
        assert!(worst(CaseLabel::SymmetricGauge, &gp) < 1e-6);
        let pos = GaugeParams::new(1.0, 0.5, 0.5).unwrap();
        assert!(realization(CaseLabel::SymmetricGauge, &pos).is_err());
    }

    #[test]
    fn unsupported_case() {
        let gp = GaugeParams::new(1.0, 0.5, 0.5).unwrap();
        assert!(realization(CaseLabel::TwoNcPlanes, &gp).is_err());
    }
}
