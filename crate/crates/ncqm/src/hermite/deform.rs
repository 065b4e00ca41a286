//! Mixing matrices, deformed ladder operators and deformed Hermite polynomials.

use std::f64::consts::{FRAC_PI_2, PI};

use num::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::poly::BiPoly;
use super::{annihilation, creation};
use crate::coadjoint::{classify, DualVector, OrbitClass};
use crate::error::{Error, Result};
use crate::group::ExtensionParams;
use crate::scalar::{Rational, Real, Ring, C64};
use crate::weyl::{gauge_generators, Alphabet, FloatPoly, GaugeCase, GaugeParams, WeylPoly};

const SLACK: f64 = 1e-12;

/// `ħ, ϑ, 𝓑` together with the oscillator mass `M` and frequency `Ω`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OscillatorParams<R> {
    pub hbar: R,
    pub vartheta: R,
    pub bcal: R,
    pub mass: R,
    pub omega: R,
}

impl<R: Real> OscillatorParams<R> {
    /// Needs `ħ, M, Ω > 0` and `ħ² − 𝓑ϑ ≥ 0`. The boundary value is admitted so the
    /// degenerate limit can be examined.
    pub fn new(hbar: R, vartheta: R, bcal: R, mass: R, omega: R) -> Result<Self> {
        if hbar <= R::zero() || mass <= R::zero() || omega <= R::zero() {
            return Err(Error::InvalidParams("hbar, M and Omega must be > 0".into()));
        }
        let p = Self {
            hbar,
            vartheta,
            bcal,
            mass,
            omega,
        };
        if p.discriminant() < R::zero() {
            return Err(Error::InvalidParams("hbar^2 - Bcal*vartheta must be >= 0".into()));
        }
        Ok(p)
    }

    /// Imposes `ϑ = 𝓑/(M²Ω²)`.
    pub fn constrained(hbar: R, vartheta: R, mass: R, omega: R) -> Result<Self> {
        let mo = mass.clone() * omega.clone();
        let bcal = vartheta.clone() * mo.clone() * mo;
        Self::new(hbar, vartheta, bcal, mass, omega)
    }

    pub fn m_omega(&self) -> R {
        self.mass.clone() * self.omega.clone()
    }

    pub fn discriminant(&self) -> R {
        self.hbar.clone() * self.hbar.clone() - self.bcal.clone() * self.vartheta.clone()
    }

    /// `ϑ − 𝓑/(M²Ω²)`, zero under the constraint.
    pub fn constraint_defect(&self) -> R {
        let mo = self.m_omega();
        self.vartheta.clone() - self.bcal.clone() / (mo.clone() * mo)
    }

    /// `ϑMΩ/ħ`.
    pub fn window(&self) -> R {
        self.vartheta.clone() * self.m_omega() / self.hbar.clone()
    }

    pub fn gauge(&self) -> GaugeParams<R> {
        GaugeParams {
            hbar: self.hbar.clone(),
            vartheta: self.vartheta.clone(),
            bcal: self.bcal.clone(),
        }
    }

    pub fn to_f64(&self) -> OscillatorParams<f64> {
        OscillatorParams {
            hbar: self.hbar.to_f64(),
            vartheta: self.vartheta.to_f64(),
            bcal: self.bcal.to_f64(),
            mass: self.mass.to_f64(),
            omega: self.omega.to_f64(),
        }
    }
}

impl OscillatorParams<f64> {
    /// `ν = (ħ + √(ħ² − 𝓑ϑ))/(2ħ)`.
    pub fn nu(&self) -> f64 {
        (self.hbar + self.discriminant().max(0.0).sqrt()) / (2.0 * self.hbar)
    }

    /// `mω = 2ħMΩ/(ħ + √(ħ² − 𝓑ϑ))`.
    pub fn osc_m_omega(&self) -> f64 {
        2.0 * self.hbar * self.m_omega() / (self.hbar + self.discriminant().max(0.0).sqrt())
    }
}

/// A `GL(2, ℂ)` mixing matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformMatrix {
    pub g: [[C64; 2]; 2],
}

impl DeformMatrix {
    pub fn new(g: [[C64; 2]; 2]) -> Result<Self> {
        let m = Self { g };
        if m.det().norm() < SLACK {
            return Err(Error::Singular);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        let (o, z) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        Self { g: [[o, z], [z, o]] }
    }

    pub fn det(&self) -> C64 {
        self.g[0][0] * self.g[1][1] - self.g[0][1] * self.g[1][0]
    }

    pub fn dagger(&self) -> Self {
        let g = &self.g;
        Self {
            g: [[g[0][0].conj(), g[1][0].conj()], [g[0][1].conj(), g[1][1].conj()]],
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.norm() < SLACK {
            return Err(Error::Singular);
        }
        let g = &self.g;
        Ok(Self {
            g: [[g[1][1] / d, -g[0][1] / d], [-g[1][0] / d, g[0][0] / d]],
        })
    }

    /// `(g†)⁻¹`, the matrix producing the dual family.
    pub fn dual(&self) -> Result<Self> {
        self.dagger().inverse()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut g = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.g[i][0] * other.g[0][j] + self.g[i][1] * other.g[1][j];
            }
        }
        Self { g }
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| (self.g[i][j] - other.g[i][j]).norm())
            .fold(0.0, f64::max)
    }

    /// Parses `sym:NU` or `polar:R,KAPPA,DELTA` (the latter needs `osc`).
    pub fn parse(spec: &str, osc: Option<&OscillatorParams<f64>>) -> Result<Self> {
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad matrix spec {spec:?}")))?;
        let nums: Vec<f64> = rest
            .split(',')
            .map(|s| crate::scalar::parse_rational(s.trim()).map(|r| r.to_f64()))
            .collect::<Result<_>>()?;
        match (kind, nums.as_slice()) {
            ("sym", [nu]) => deform_matrix_sym(*nu),
            ("polar", [r, k, d]) => {
                let osc = osc.ok_or_else(|| Error::Parse("polar matrices need oscillator parameters".into()))?;
                deform_matrix_polar(*r, *k, *d, osc)
            }
            ("identity", []) | ("id", []) => Ok(Self::identity()),
            _ => Err(Error::Parse(format!("bad matrix spec {spec:?}"))),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<[f64; 2]>> = self
            .g
            .iter()
            .map(|r| r.iter().map(|c| [c.re, c.im]).collect())
            .collect();
        serde_json::json!(rows)
    }
}

/// `[[√ν, i√(1−ν)], [−i√(1−ν), √ν]]` for `1/2 < ν ≤ 1`.
pub fn deform_matrix_sym(nu: f64) -> Result<DeformMatrix> {
    if !(nu > 0.5 && nu <= 1.0) {
        return Err(Error::OutOfBounds(format!("nu = {nu} outside (1/2, 1]")));
    }
    let (a, b) = (nu.sqrt(), (1.0 - nu).sqrt());
    DeformMatrix::new([
        [C64::new(a, 0.0), C64::new(0.0, b)],
        [C64::new(0.0, -b), C64::new(a, 0.0)],
    ])
}

/// Allowed interval `[r₋, r₊]` with `r±² = 1/2 ± √(1/4 − (ϑMΩ/ħ)²/4)`.
pub fn r_bounds(osc: &OscillatorParams<f64>) -> Result<(f64, f64)> {
    let x = osc.window();
    if !(x > 0.0 && x <= 1.0 + SLACK) {
        return Err(Error::OutOfBounds(format!(
            "vartheta*M*Omega/hbar = {x} outside (0, 1]"
        )));
    }
    let d = (0.25 - x * x / 4.0).max(0.0).sqrt();
    Ok(((0.5 - d).sqrt(), (0.5 + d).sqrt()))
}

/// `ε(r) = arcsin(ϑMΩ/(2ħ r√(1−r²)))`, principal branch.
pub fn epsilon(r: f64, osc: &OscillatorParams<f64>) -> Result<f64> {
    let (lo, hi) = r_bounds(osc)?;
    if r < lo - SLACK || r > hi + SLACK {
        return Err(Error::OutOfBounds(format!("r = {r} outside [{lo}, {hi}]")));
    }
    let x = osc.window();
    let arg = x / (2.0 * r * (1.0 - r * r).sqrt());
    if !(arg.abs() <= 1.0 + SLACK) {
        return Err(Error::OutOfBounds(format!("arcsin argument {arg} outside [-1, 1]")));
    }
    let eps = arg.clamp(-1.0, 1.0).asin();
    debug_assert!(eps >= x.clamp(-1.0, 1.0).asin() - 1e-9 && eps <= FRAC_PI_2 + 1e-12);
    Ok(eps)
}

/// `[[r e^{iκ}, √(1−r²) e^{i(κ+ε)}], [√(1−r²) e^{iδ}, −r e^{i(δ−ε)}]]` with `ε = ε(r)`.
pub fn deform_matrix_polar(r: f64, kappa: f64, delta: f64, osc: &OscillatorParams<f64>) -> Result<DeformMatrix> {
    let eps = epsilon(r, osc)?;
    let r = r.clamp(0.0, 1.0);
    let s = (1.0 - r * r).sqrt();
    DeformMatrix::new([
        [C64::from_polar(r, kappa), C64::from_polar(s, kappa + eps)],
        [C64::from_polar(s, delta), -C64::from_polar(r, delta - eps)],
    ])
}

/// Reproducible polar matrices with random constrained oscillators, `r`, `κ` and `δ`.
pub fn random_polar_matrices(seed: u64, count: usize) -> Vec<(OscillatorParams<f64>, DeformMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let hbar = rng.gen_range(0.5..2.0);
        let m = rng.gen_range(0.5..2.0);
        let om = rng.gen_range(0.5..2.0);
        let x: f64 = rng.gen_range(0.05..0.95);
        let osc = OscillatorParams::constrained(hbar, x * hbar / (m * om), m, om).expect("valid by construction");
        let (lo, hi) = r_bounds(&osc).expect("window inside (0, 1)");
        let r = rng.gen_range(lo..=hi);
        let (kappa, delta) = (rng.gen_range(0.0..2.0 * PI), rng.gen_range(0.0..2.0 * PI));
        if let Ok(g) = deform_matrix_polar(r, kappa, delta, &osc) {
            out.push((osc, g));
        }
    }
    out
}

/// Two annihilation and two creation symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct Ladder<C> {
    pub a: [WeylPoly<C>; 2],
    pub a_dag: [WeylPoly<C>; 2],
}

/// Constant commutators of a ladder.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderTable {
    /// `[aᵢ, aⱼ†]`.
    pub mixed: [[C64; 2]; 2],
    /// `[a₁, a₂]`.
    pub annihilators: C64,
    /// `[a₁†, a₂†]`.
    pub creators: C64,
}

fn cjson(c: &C64) -> serde_json::Value {
    serde_json::json!([c.re, c.im])
}

impl LadderTable {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mixed": self.mixed.iter().map(|r| r.iter().map(cjson).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "annihilators": cjson(&self.annihilators),
            "creators": cjson(&self.creators),
        })
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut m = (self.annihilators - other.annihilators)
            .norm()
            .max((self.creators - other.creators).norm());
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((self.mixed[i][j] - other.mixed[i][j]).norm());
            }
        }
        m
    }
}

impl<C: Ring> Ladder<C> {
    /// `a₁^{g†} = g₁₁a₁† + g₂₁a₂†`, `a₂^{g†} = g₁₂a₁† + g₂₂a₂†`, and their adjoints.
    pub fn mix(&self, g: &[[C; 2]; 2]) -> Result<Self> {
        let comb = |ops: &[WeylPoly<C>; 2], c0: C, c1: C| ops[0].scale(&c0).add(&ops[1].scale(&c1));
        Ok(Self {
            a_dag: [
                comb(&self.a_dag, g[0][0].clone(), g[1][0].clone())?,
                comb(&self.a_dag, g[0][1].clone(), g[1][1].clone())?,
            ],
            a: [
                comb(&self.a, g[0][0].conj(), g[1][0].conj())?,
                comb(&self.a, g[0][1].conj(), g[1][1].conj())?,
            ],
        })
    }

    /// The commutators, which must all be multiples of the identity.
    pub fn table(&self) -> Result<LadderTable> {
        let scalar = |p: WeylPoly<C>| {
            p.as_constant()
                .map(|c| c.to_c64())
                .ok_or_else(|| Error::Precondition(format!("commutator {} is not a scalar", p.pretty())))
        };
        let mut mixed = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, row) in mixed.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = scalar(self.a[i].commutator(&self.a_dag[j])?)?;
            }
        }
        Ok(LadderTable {
            mixed,
            annihilators: scalar(self.a[0].commutator(&self.a[1])?)?,
            creators: scalar(self.a_dag[0].commutator(&self.a_dag[1])?)?,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a1": self.a[0].pretty(), "a2": self.a[1].pretty(),
            "a1_dag": self.a_dag[0].pretty(), "a2_dag": self.a_dag[1].pretty(),
        })
    }
}

fn base_ladder() -> Ladder<C64> {
    Ladder {
        a: [annihilation(0), annihilation(1)],
        a_dag: [creation(0), creation(1)],
    }
}

/// The deformed ladder on the `z`-alphabet.
pub fn deformed_ladder(g: &DeformMatrix) -> Result<Ladder<C64>> {
    base_ladder().mix(&g.g)
}

/// `aᵢ† = √(mω/2ħ)(xᵢ − (ħ/mω)∂ᵢ)` and `aᵢ = √(mω/2ħ)(xᵢ + (ħ/mω)∂ᵢ)` on the plane.
pub fn standard_ladder(m_omega: f64, hbar: f64) -> Ladder<C64> {
    let c = C64::new((m_omega / (2.0 * hbar)).sqrt(), 0.0);
    let k = C64::new(hbar / m_omega, 0.0);
    let op = |i: usize, sign: f64| {
        let x = FloatPoly::x(Alphabet::Real2, i);
        let d = FloatPoly::d(Alphabet::Real2, i).scale(&(k * sign));
        x.add(&d).expect("same alphabet").scale(&c)
    };
    Ladder {
        a: [op(0, 1.0), op(1, 1.0)],
        a_dag: [op(0, -1.0), op(1, -1.0)],
    }
}

/// `Q̂ᵢ − (i/MΩ)P̂ᵢ` for the symmetric-gauge generators: the creation symbols up to the
/// common factor `√(MΩ/2ħ)`. Exact on rationals whenever `√(ħ² − 𝓑ϑ)` is.
pub fn nc_dagger_directions<R: Real>(osc: &OscillatorParams<R>) -> Result<[WeylPoly<Complex<R>>; 2]> {
    let gens = gauge_generators(&GaugeCase::SymmetricGauge(osc.gauge()))?;
    let c = Complex::new(R::zero(), -(R::one() / osc.m_omega()));
    Ok([gens.q1.add(&gens.p1.scale(&c))?, gens.q2.add(&gens.p2.scale(&c))?])
}

/// `a_i^{nc†} = √(MΩ/2ħ)(Q̂ᵢ − (i/MΩ)P̂ᵢ)` and the adjoints, from the symmetric gauge.
pub fn nc_ladder(osc: &OscillatorParams<f64>) -> Result<Ladder<C64>> {
    let gens = gauge_generators(&GaugeCase::SymmetricGauge(osc.gauge()))?;
    let n = C64::new((osc.m_omega() / (2.0 * osc.hbar)).sqrt(), 0.0);
    let i = C64::new(0.0, 1.0 / osc.m_omega());
    let op = |q: &FloatPoly, p: &FloatPoly, c: C64| q.add(&p.scale(&c)).map(|s| s.scale(&n));
    Ok(Ladder {
        a: [op(&gens.q1, &gens.p1, i)?, op(&gens.q2, &gens.p2, i)?],
        a_dag: [op(&gens.q1, &gens.p1, -i)?, op(&gens.q2, &gens.p2, -i)?],
    })
}

/// Commutators of the nc ladder predicted for arbitrary `(ħ, ϑ, 𝓑, M, Ω)`.
pub fn expected_nc_table(osc: &OscillatorParams<f64>) -> LadderTable {
    let mo = osc.m_omega();
    let plus = mo / (2.0 * osc.hbar) * (osc.vartheta + osc.bcal / (mo * mo));
    let minus = mo / (2.0 * osc.hbar) * (osc.vartheta - osc.bcal / (mo * mo));
    let one = C64::new(1.0, 0.0);
    LadderTable {
        mixed: [[one, C64::new(0.0, plus)], [C64::new(0.0, -plus), one]],
        annihilators: C64::new(0.0, minus),
        creators: C64::new(0.0, minus),
    }
}

/// `λ` with `a₂^{nc†} = λ·a₁^{nc†}`, when the two creation symbols are proportional.
pub fn nc_dagger_ratio(osc: &OscillatorParams<Rational>) -> Result<Option<Complex<Rational>>> {
    let [d1, d2] = nc_dagger_directions(osc)?;
    let Some((m, c1)) = d1.terms().next() else {
        return Ok(None);
    };
    let c2 = d2.coeff(m);
    let lambda = c2 * crate::scalar::CRat::new(c1.re.clone(), -c1.im.clone()) / c1.norm_sqr();
    Ok((d1.scale(&lambda) == d2).then_some(lambda))
}

fn raise(ladder: &Ladder<C64>, n: u32, k: u32) -> Result<BiPoly<C64>> {
    let norm = (1..=n).chain(1..=k).map(f64::from).product::<f64>().sqrt();
    let p = BiPoly::<C64>::one()
        .apply(&ladder.a_dag[1].pow(k))?
        .apply(&ladder.a_dag[0].pow(n))?;
    Ok(p.scale(&C64::new(1.0 / norm, 0.0)))
}

/// `(a₁^{g†})ⁿ (a₂^{g†})ᵏ 1/√(n!k!)`.
pub fn deformed_hermite(g: &DeformMatrix, n: u32, k: u32) -> Result<BiPoly<C64>> {
    DeformMatrix::new(g.g)?;
    raise(&deformed_ladder(g)?, n, k)
}

/// The same construction with `(g†)⁻¹`.
pub fn dual_deformed_hermite(g: &DeformMatrix, n: u32, k: u32) -> Result<BiPoly<C64>> {
    deformed_hermite(&g.dual()?, n, k)
}

/// `[a₁^g, a₂^g]` as a symbol.
pub fn annihilator_commutator(g: &DeformMatrix) -> Result<FloatPoly> {
    let l = deformed_ladder(g)?;
    l.a[0].commutator(&l.a[1])
}

/// Whether `[a₁^g, a₂^g]` vanishes, up to `tol` per coefficient.
pub fn check_admissible(g: &DeformMatrix, tol: f64) -> Result<bool> {
    let c = annihilator_commutator(g)?;
    let ok = c.terms().all(|(_, v)| v.norm() <= tol);
    Ok(ok)
}

/// `[aᵢ^g, aⱼ^{g†}]`, which equals `g†g`.
pub fn deformed_gram(g: &DeformMatrix) -> Result<[[C64; 2]; 2]> {
    Ok(deformed_ladder(g)?.table()?.mixed)
}

/// `[[1, iϑMΩ/ħ], [−iϑMΩ/ħ, 1]]`, the Gram matrix the nc ladder has under the constraint.
pub fn nc_gram_target(osc: &OscillatorParams<f64>) -> [[C64; 2]; 2] {
    let x = osc.window();
    [
        [C64::new(1.0, 0.0), C64::new(0.0, x)],
        [C64::new(0.0, -x), C64::new(1.0, 0.0)],
    ]
}

/// The plane `τ = K_g σ` and the admissible region.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeometryConstraints<R> {
    /// `K_g = βM²Ω²/γ`.
    pub k_g: R,
    /// `ζ_HO = −βMΩ/α`.
    pub zeta_ho: R,
    /// `βMΩ/α`.
    pub slope: R,
}

impl<R: Real> GeometryConstraints<R> {
    pub fn tau_of_sigma(&self, sigma: &R) -> R {
        self.k_g.clone() * sigma.clone()
    }

    /// `ρ ≥ −σβMΩ/α` with `ρ` and `σ` of opposite sign.
    pub fn admissible(&self, rho: &R, sigma: &R) -> bool {
        (rho.clone() * sigma.clone()).is_negative() && *rho >= -(self.slope.clone() * sigma.clone())
    }

    pub fn on_boundary(&self, rho: &R, sigma: &R) -> bool {
        !sigma.is_zero() && *rho == -(self.slope.clone() * sigma.clone())
    }

    /// `(0, 0, 0, 0, ρ, σ, K_g σ)`.
    pub fn representative(&self, rho: &R, sigma: &R) -> DualVector<R> {
        let z = R::zero;
        DualVector::new([z(), z(), z(), z(), rho.clone(), sigma.clone(), self.tau_of_sigma(sigma)])
    }
}

impl GeometryConstraints<Rational> {
    /// Classifies the representative at `(ρ, σ)`.
    pub fn classify_at(
        &self,
        rho: &Rational,
        sigma: &Rational,
        params: &ExtensionParams<Rational>,
    ) -> OrbitClass<Rational> {
        classify(&self.representative(rho, sigma), params)
    }
}

pub fn geometry_constraints<R: Real>(osc: &OscillatorParams<R>, params: &ExtensionParams<R>) -> GeometryConstraints<R> {
    let mo = osc.m_omega();
    let slope = params.beta.clone() * mo.clone() / params.alpha.clone();
    GeometryConstraints {
        k_g: params.beta.clone() * mo.clone() * mo / params.gamma.clone(),
        zeta_ho: -slope.clone(),
        slope,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{gauss_inner, hermite_ladder};
    use crate::scalar::rat;

    fn osc_nu(nu: f64) -> OscillatorParams<f64> {
        // ħ = 1, constrained, with 𝓑ϑ = 4ν(1 − ν)
        let x = 2.0 * (nu * (1.0 - nu)).sqrt();
        OscillatorParams::constrained(1.0, x, 1.0, 1.0).unwrap()
    }

    #[test]
    fn nu_example() {
        let osc = OscillatorParams::new(1.0, 0.75, 1.0, 1.0, 1.0).unwrap();
        assert!((osc.nu() - 0.75).abs() < 1e-15);
        let g = deform_matrix_sym(osc.nu()).unwrap();
        assert!((g.g[0][0].re - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((g.g[0][1].im - 0.5).abs() < 1e-15);
    }

    #[test]
    fn sym_bounds() {
        assert!(deform_matrix_sym(0.5).is_err());
        assert!(deform_matrix_sym(1.01).is_err());
        assert_eq!(deform_matrix_sym(1.0).unwrap(), DeformMatrix::identity());
        let osc = OscillatorParams::new(1.0, 1e-13, 1.0, 1.0, 1.0).unwrap();
        assert!(deform_matrix_sym(osc.nu()).unwrap().max_diff(&DeformMatrix::identity()) < 1e-6);
    }

    #[test]
    fn polar_contains_sym() {
        for nu in [0.55, 0.75, 0.9] {
            let osc = osc_nu(nu);
            let p = deform_matrix_polar(nu.sqrt(), 0.0, 1.5 * PI, &osc).unwrap();
            assert!((epsilon(nu.sqrt(), &osc).unwrap() - FRAC_PI_2).abs() < 1e-7);
            assert!(p.max_diff(&deform_matrix_sym(nu).unwrap()) < 1e-7, "{nu}");
        }
    }

    #[test]
    fn polar_window_edge() {
        let osc = OscillatorParams::new(1.0, 1.0, 0.0, 1.0, 1.0).unwrap();
        let (lo, hi) = r_bounds(&osc).unwrap();
        assert!((lo - 0.5f64.sqrt()).abs() < 1e-12 && (hi - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((epsilon(0.5f64.sqrt(), &osc).unwrap() - FRAC_PI_2).abs() < 1e-6);
        assert!(epsilon(0.9, &osc).is_err());
        let bad = OscillatorParams::new(1.0, 2.0, 0.0, 1.0, 1.0).unwrap();
        assert!(r_bounds(&bad).is_err());
    }

    #[test]
    fn epsilon_range() {
        for (osc, _) in random_polar_matrices(3, 20) {
            let (lo, hi) = r_bounds(&osc).unwrap();
            for t in [0.0, 0.3, 0.7, 1.0] {
                let e = epsilon(lo + t * (hi - lo), &osc).unwrap();
                assert!(e >= osc.window().asin() - 1e-9 && e <= FRAC_PI_2 + 1e-12);
            }
        }
    }

    #[test]
    fn gram_matches_target_for_polar() {
        for (osc, g) in random_polar_matrices(11, 10) {
            let gram = deformed_gram(&g).unwrap();
            let target = nc_gram_target(&osc);
            let gg = g.dagger().mul(&g);
            for i in 0..2 {
                for j in 0..2 {
                    assert!((gram[i][j] - target[i][j]).norm() < 1e-12);
                    assert!((gram[i][j] - gg.g[i][j]).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn identity_reduces_to_ladder_form() {
        for n in 0..=3 {
            for k in 0..=3 {
                let d = deformed_hermite(&DeformMatrix::identity(), n, k).unwrap();
                assert!(d.max_diff(&hermite_ladder(n, k).to_c64()) < 1e-14);
            }
        }
    }

    fn biorthogonality_error(g: &DeformMatrix, max: u32) -> f64 {
        let idx: Vec<(u32, u32)> = (0..=max).flat_map(|n| (0..=max).map(move |k| (n, k))).collect();
        let mut worst = 0.0f64;
        for &(n, k) in &idx {
            let d = dual_deformed_hermite(g, n, k).unwrap();
            for &(m, l) in &idx {
                let h = deformed_hermite(g, m, l).unwrap();
                let want = if (n, k) == (m, l) { 1.0 } else { 0.0 };
                worst = worst.max((gauss_inner(&d, &h) - C64::new(want, 0.0)).norm());
            }
        }
        worst
    }

    #[test]
    fn biorthogonality() {
        assert!(biorthogonality_error(&deform_matrix_sym(0.75).unwrap(), 3) < 1e-10);
        for (_, g) in random_polar_matrices(5, 4) {
            assert!(biorthogonality_error(&g, 3) < 1e-10);
        }
    }

    #[test]
    fn admissibility_of_shear() {
        let one = C64::new(1.0, 0.0);
        let z = C64::new(0.0, 0.0);
        let g = DeformMatrix::new([[one, one], [z, one]]).unwrap();
        let verdict = check_admissible(&g, 1e-12).unwrap();
        // oracle: (a₁^g a₂^g − a₂^g a₁^g) applied to monomials
        let l = deformed_ladder(&g).unwrap();
        let brute = (0..4).all(|m| {
            (0..4).all(|n| {
                let p = BiPoly::monomial(m, n, one);
                let ab = p.apply(&l.a[1]).and_then(|q| q.apply(&l.a[0])).unwrap();
                let ba = p.apply(&l.a[0]).and_then(|q| q.apply(&l.a[1])).unwrap();
                ab.max_diff(&ba) < 1e-12
            })
        });
        assert_eq!(verdict, brute);
        assert!(verdict);
        assert!(check_admissible(&DeformMatrix::identity(), 0.0).unwrap());
        assert!(DeformMatrix::new([[one, one], [one, one]]).is_err());
    }

    #[test]
    fn nc_ladder_commutators() {
        let osc = OscillatorParams::new(1.0, 0.3, 0.5, 1.2, 0.7).unwrap();
        let t = nc_ladder(&osc).unwrap().table().unwrap();
        assert!(t.max_diff(&expected_nc_table(&osc)) < 1e-12);
        let c = OscillatorParams::constrained(1.0, 0.4, 1.1, 0.9).unwrap();
        let t = nc_ladder(&c).unwrap().table().unwrap();
        assert!(t.annihilators.norm() < 1e-12);
        assert!((t.mixed[0][1] - C64::new(0.0, c.window())).norm() < 1e-12);
    }

    #[test]
    fn nc_ladder_is_sym_mixing() {
        for x in [0.2, 0.6, 0.95, 1.0] {
            let osc = OscillatorParams::constrained(1.3, x * 1.3 / (0.8 * 1.5), 0.8, 1.5).unwrap();
            let nc = nc_ladder(&osc).unwrap();
            let nu = osc.nu();
            let g = if nu > 0.5 {
                deform_matrix_sym(nu).unwrap()
            } else {
                let b = 0.5f64.sqrt();
                DeformMatrix {
                    g: [
                        [C64::new(b, 0.0), C64::new(0.0, b)],
                        [C64::new(0.0, -b), C64::new(b, 0.0)],
                    ],
                }
            };
            let mixed = standard_ladder(osc.osc_m_omega(), osc.hbar).mix(&g.g).unwrap();
            for i in 0..2 {
                assert!(nc.a_dag[i].max_diff(&mixed.a_dag[i]).unwrap() < 1e-12, "{x}");
                assert!(nc.a[i].max_diff(&mixed.a[i]).unwrap() < 1e-12, "{x}");
            }
        }
    }

    #[test]
    fn degenerate_daggers_proportional() {
        // ħ = 1, ϑ = 1/2, M = 1, Ω = 2: 𝓑 = 2 and ħ² = 𝓑ϑ
        let osc = OscillatorParams::constrained(rat(1, 1), rat(1, 2), rat(1, 1), rat(2, 1)).unwrap();
        assert_eq!(osc.discriminant(), rat(0, 1));
        let lambda = nc_dagger_ratio(&osc).unwrap().unwrap();
        assert_eq!(lambda, Complex::new(rat(0, 1), rat(1, 1)));
        let generic = OscillatorParams::constrained(rat(1, 1), rat(3, 10), rat(1, 1), rat(2, 1)).unwrap();
        assert_eq!(nc_dagger_ratio(&generic).unwrap(), None);
    }

    #[test]
    fn geometry() {
        let unit = ExtensionParams::<Rational>::unit();
        let osc = OscillatorParams::new(rat(1, 1), rat(0, 1), rat(0, 1), rat(1, 1), rat(1, 1)).unwrap();
        let geo = geometry_constraints(&osc, &unit);
        assert_eq!(geo.k_g, rat(1, 1));
        assert_eq!(geo.zeta_ho, rat(-1, 1));
        assert!(geo.on_boundary(&rat(1, 1), &rat(-1, 1)));
        assert!(geo.admissible(&rat(1, 1), &rat(-1, 1)));
        assert!(!geo.admissible(&rat(1, 1), &rat(1, 1)));
        match geo.classify_at(&rat(1, 1), &rat(-1, 1), &unit) {
            OrbitClass::Surface2D { zeta, .. } => assert_eq!(zeta, rat(-1, 1)),
            other => panic!("{other:?}"),
        }
    }
}
