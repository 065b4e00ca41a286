//! End-to-end checks, one per acceptance criterion, grouped into suites.

use num::{Complex, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coadjoint::{
    classify, coadjoint_action, det_w, dual_from_matrix, dual_matrix, orbit_representative, polynomial_invariants,
    rational_invariants, solve_to_origin, surface_sample, DualVector, GridAxis, OrbitClass, SurfaceKind,
};
use crate::error::{Error, Result};
use crate::gauge::{
    derive_q_from_commutators, form_error, induced_form, is_ncqm_preserving, landau_to_sym, preservation_error,
    random_preserving, tables_agree, to_sp4, transform_generators,
};
use crate::group::{compose, from_matrix, inverse, to_matrix, ExtensionParams, GroupElement};
use crate::hermite::deform::{annihilator_commutator, random_polar_matrices};
use crate::hermite::{
    deform_matrix_sym, deformed_hermite, dual_deformed_hermite, gauss_inner, gauss_inner_quadrature,
    gauss_inner_scaled, geometry_constraints, hermite_explicit, hermite_ladder, hermite_rodrigues, nc_dagger_ratio,
    BiPoly, DeformMatrix, OscillatorParams,
};
use crate::matrix::Matrix;
use crate::scalar::{rat, Rational, C64};
use crate::uir::crosscheck::generator_crosscheck;
use crate::uir::{
    apply_uir, conjugate_by_t, gaussian, norm_l2, sample_labels, solve_master_2d, solve_master_4d, Flip, UirLabel,
};
use crate::weyl::{commutator_table, expected_table, gauge_generators, CaseLabel, GaugeCase, GaugeParams};

/// Outcome of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub suite: Suite,
    pub pass: bool,
    pub details: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Group,
    Orbits,
    Gauges,
    Uir,
    Hermite,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["group", "orbits", "gauges", "uir", "hermite", "all"];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "group" => Suite::Group,
            "orbits" => Suite::Orbits,
            "gauges" => Suite::Gauges,
            "uir" => Suite::Uir,
            "hermite" => Suite::Hermite,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }
}

type Check = fn(&mut ChaCha8Rng) -> Result<(bool, Value)>;

/// `(id, name, suite, check)` for all twelve criteria.
pub const CRITERIA: [(usize, &str, Suite, Check); 12] = [
    (1, "group-law", Suite::Group, group_law),
    (2, "coadjoint-action", Suite::Orbits, coadjoint_fidelity),
    (3, "orbit-classification", Suite::Orbits, orbit_classification),
    (4, "master-equations", Suite::Uir, master_equations),
    (5, "commutator-tables", Suite::Gauges, commutator_tables),
    (6, "uir-properties", Suite::Uir, uir_properties),
    (7, "generator-crosscheck", Suite::Uir, generator_check),
    (8, "preserving-group", Suite::Gauges, preserving_group),
    (9, "gauge-transport", Suite::Gauges, gauge_transport),
    (10, "hermite", Suite::Hermite, hermite_suite),
    (11, "degenerate-witnesses", Suite::Gauges, degenerate_witnesses),
    (12, "geometry", Suite::Orbits, geometry),
];

/// Runs one criterion with its own stream derived from `seed`.
pub fn run_criterion(id: usize, seed: u64) -> Result<CriterionReport> {
    let (id, name, suite, check) = *CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::Parse(format!("no criterion {id}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(id as u64));
    let (pass, details) = match check(&mut rng) {
        Ok(r) => r,
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    Ok(CriterionReport {
        id,
        name,
        suite,
        pass,
        details,
    })
}

/// Runs every criterion of `suite` in parallel and reports them in id order.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CriterionReport> {
    let ids: Vec<usize> = CRITERIA
        .iter()
        .filter(|c| suite == Suite::All || c.2 == suite)
        .map(|c| c.0)
        .collect();
    ids.par_iter()
        .map(|&id| run_criterion(id, seed).expect("known id"))
        .collect()
}

fn r_any(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

fn r_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = r_any(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn r_pos(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(1..=9), rng.gen_range(1..=6))
}

fn r_params(rng: &mut ChaCha8Rng) -> ExtensionParams<Rational> {
    ExtensionParams::new(r_pos(rng), r_pos(rng), r_pos(rng)).expect("positive")
}

fn r_element(rng: &mut ChaCha8Rng) -> GroupElement<Rational> {
    GroupElement::from_coords(std::array::from_fn(|_| r_any(rng)))
}

fn r_dual(rng: &mut ChaCha8Rng) -> DualVector<Rational> {
    DualVector::new(std::array::from_fn(|_| r_any(rng)))
}

/// A point with `det_w = 0` and `X₆ ≠ 0`.
fn r_surface_dual(rng: &mut ChaCha8Rng, p: &ExtensionParams<Rational>) -> DualVector<Rational> {
    let (rho, zeta) = (r_nonzero(rng), r_nonzero(rng));
    let sigma = rho.clone() / zeta.clone();
    let tau = zeta * p.alpha.clone() * p.alpha.clone() * rho.clone() / (p.gamma.clone() * p.beta.clone());
    DualVector::new([r_any(rng), r_any(rng), r_any(rng), r_any(rng), rho, sigma, tau])
}

/// A random point whose invariants are zeroed at random, so every family occurs.
fn r_mixed_dual(rng: &mut ChaCha8Rng, p: &ExtensionParams<Rational>) -> DualVector<Rational> {
    if rng.gen_bool(0.3) {
        return r_surface_dual(rng, p);
    }
    let mut f = r_dual(rng);
    for i in 4..7 {
        if rng.gen_bool(0.35) {
            f.x[i] = Rational::zero();
        }
    }
    f
}

fn group_law(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let mut product_failures = 0;
    for _ in 0..1000 {
        let p = r_params(rng);
        let (g1, g2) = (r_element(rng), r_element(rng));
        let c = compose(&g1, &g2, &p);
        let prod = &to_matrix(&g1, &p) * &to_matrix(&g2, &p);
        if to_matrix(&c, &p) != prod || from_matrix(&prod, &p)? != c {
            product_failures += 1;
        }
    }
    let mut assoc_failures = 0;
    for _ in 0..500 {
        let p = r_params(rng);
        let (a, b, c) = (r_element(rng), r_element(rng), r_element(rng));
        if compose(&compose(&a, &b, &p), &c, &p) != compose(&a, &compose(&b, &c, &p), &p) {
            assoc_failures += 1;
        }
    }
    Ok((
        product_failures == 0 && assoc_failures == 0,
        json!({ "pairs": 1000, "product_failures": product_failures, "triples": 500, "associativity_failures": assoc_failures }),
    ))
}

fn coadjoint_fidelity(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let (mut conj_fail, mut inv_fail, mut rational_fail) = (0, 0, 0);
    for _ in 0..500 {
        let p = r_params(rng);
        let (g, f) = (r_element(rng), r_dual(rng));
        let k = coadjoint_action(&g, &f, &p);
        let m = &(&to_matrix(&g, &p) * &dual_matrix(&f)) * &to_matrix(&inverse(&g, &p), &p);
        if dual_from_matrix(&m) != k {
            conj_fail += 1;
        }
        if polynomial_invariants(&k) != polynomial_invariants(&f) {
            inv_fail += 1;
        }
        let s = r_surface_dual(rng, &p);
        if rational_invariants(&coadjoint_action(&g, &s, &p), &p)? != rational_invariants(&s, &p)? {
            rational_fail += 1;
        }
    }
    Ok((
        conj_fail + inv_fail + rational_fail == 0,
        json!({
            "samples": 500,
            "conjugation_failures": conj_fail,
            "polynomial_invariant_failures": inv_fail,
            "rational_invariant_failures": rational_fail,
        }),
    ))
}

fn r_orbit_class(rng: &mut ChaCha8Rng, family: usize, p: &ExtensionParams<Rational>) -> OrbitClass<Rational> {
    let mut nz = || r_nonzero(rng);
    match family {
        0 => loop {
            let (rho, sigma, tau) = (nz(), nz(), nz());
            let z = Rational::zero;
            let f = DualVector::new([z(), z(), z(), z(), rho.clone(), sigma.clone(), tau.clone()]);
            if !det_w(&f, p).is_zero() {
                return OrbitClass::Generic4D { rho, sigma, tau };
            }
        },
        1 => {
            let (rho, zeta, kappa, delta) = (nz(), nz(), r_any(rng), r_any(rng));
            OrbitClass::Surface2D {
                rho,
                zeta,
                kappa,
                delta,
            }
        }
        2 => OrbitClass::FourDSigmaOnly { rho: nz(), sigma: nz() },
        3 => OrbitClass::FourDTauOnly { rho: nz(), tau: nz() },
        4 => OrbitClass::FourDRhoZero { sigma: nz(), tau: nz() },
        5 => OrbitClass::FourDRhoOnly { rho: nz() },
        6 => OrbitClass::TwoDTau {
            c1: r_any(rng),
            c2: r_any(rng),
            tau: r_nonzero(rng),
        },
        7 => OrbitClass::TwoDSigma {
            c3: r_any(rng),
            c4: r_any(rng),
            sigma: r_nonzero(rng),
        },
        _ => OrbitClass::Point0D {
            c1: r_any(rng),
            c2: r_any(rng),
            c3: r_any(rng),
            c4: r_any(rng),
        },
    }
}

/// Columns of the affine map `(q₁, q₂, p₁, p₂) ↦ (K(g)F)₁…₄ − F₁…₄`.
fn translation_system(f: &DualVector<Rational>, p: &ExtensionParams<Rational>) -> Matrix<Rational> {
    let z = Rational::zero;
    let mut m = Matrix::zeros(4);
    for k in 0..4 {
        let mut c: [Rational; 7] = std::array::from_fn(|_| z());
        c[3 + k] = rat(1, 1);
        let kf = coadjoint_action(&GroupElement::from_coords(c), f, p);
        for i in 0..4 {
            m.set(i, k, kf.x[i].clone() - f.x[i].clone());
        }
    }
    m
}

fn orbit_classification(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let mut roundtrip_fail = Vec::new();
    for family in 0..9 {
        for _ in 0..20 {
            let p = r_params(rng);
            let c = r_orbit_class(rng, family, &p);
            if classify(&orbit_representative(&c, &p), &p) != c {
                roundtrip_fail.push(c.family());
            }
        }
    }
    let mut move_fail = 0;
    for _ in 0..500 {
        let p = r_params(rng);
        let f = r_mixed_dual(rng, &p);
        if classify(&coadjoint_action(&r_element(rng), &f, &p), &p) != classify(&f, &p) {
            move_fail += 1;
        }
    }
    let (mut solv_fail, mut solvable, mut singular) = (0, 0, 0);
    for _ in 0..500 {
        let p = r_params(rng);
        let f = if rng.gen_bool(0.5) {
            r_surface_dual(rng, &p)
        } else {
            r_dual(rng)
        };
        let dw = det_w(&f, &p);
        let unique = !translation_system(&f, &p).det().is_zero();
        let solved = solve_to_origin(&f, &p);
        let reaches = solved.as_ref().is_some_and(|g| {
            let k = coadjoint_action(g, &f, &p);
            k.x[..4].iter().all(Zero::is_zero) && k.x[4..] == f.x[4..]
        });
        if unique {
            solvable += 1
        } else {
            singular += 1
        }
        if unique != !dw.is_zero() || unique != reaches || solved.is_some() != unique {
            solv_fail += 1;
        }
    }
    let pass = roundtrip_fail.is_empty() && move_fail == 0 && solv_fail == 0 && solvable > 0 && singular > 0;
    Ok((
        pass,
        json!({
            "families": 9, "roundtrip_failures": roundtrip_fail,
            "orbit_moves": 500, "move_failures": move_fail,
            "solvability_samples": 500, "solvable": solvable, "singular": singular, "solvability_failures": solv_fail,
        }),
    ))
}

fn master_equations(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let mut failures = Vec::new();
    for _ in 0..200 {
        let p = r_params(rng);
        if let Err(e) = solve_master_4d(&r_element(rng), &r_any(rng), &r_any(rng), &p) {
            failures.push(format!("4d: {e}"));
        }
        if let Err(e) = solve_master_2d(&r_element(rng), &r_any(rng), &p) {
            failures.push(format!("2d: {e}"));
        }
    }
    Ok((
        failures.is_empty(),
        json!({ "samples_each": 200, "failures": failures }),
    ))
}

/// Random `(ħ, ϑ, 𝓑)` with `√(ħ² − 𝓑ϑ)` rational and positive, and `ϑ ≠ 0`.
fn r_gauge_rational_root(rng: &mut ChaCha8Rng) -> GaugeParams<Rational> {
    let hbar = r_pos(rng);
    let s = hbar.clone() * rat(rng.gen_range(1..=9), 10);
    let vartheta = r_nonzero(rng);
    let bcal = (hbar.clone() * hbar.clone() - s.clone() * s) / vartheta.clone();
    GaugeParams::new(hbar, vartheta, bcal).expect("hbar > 0")
}

fn commutator_tables(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let mut rows = Vec::new();
    let mut pass = true;
    for label in CaseLabel::ALL {
        for _ in 0..10 {
            let gp = r_gauge_rational_root(rng);
            let case = GaugeCase::build(label, gp, std::array::from_fn(|_| r_nonzero(rng)));
            let table = commutator_table(&gauge_generators(&case)?)?;
            let ok = table.scalars().is_some_and(|t| t == expected_table(&case));
            pass &= ok;
            if !ok {
                rows.push(json!({ "case": label.name(), "table": table.to_json() }));
            }
        }
    }
    Ok((
        pass,
        json!({ "cases": CaseLabel::ALL.len(), "samples_each": 10, "mismatches": rows }),
    ))
}

/// Worst homomorphism and unitarity defects of one representation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct UirCheck {
    pub trials: usize,
    pub homomorphism_error: f64,
    pub unitarity_error: f64,
}

impl UirCheck {
    pub fn max_error(&self) -> f64 {
        self.homomorphism_error.max(self.unitarity_error)
    }
}

/// `U(g₁g₂)f = U(g₁)U(g₂)f` at random points (reversed order for anti-homomorphisms)
/// and `‖U(g)f‖ = ‖f‖` by quadrature, for `trials` random elements.
pub fn uir_check(label: &UirLabel, params: &ExtensionParams<f64>, seed: u64, trials: usize) -> Result<UirCheck> {
    label.validate(params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let el = |rng: &mut ChaCha8Rng| GroupElement::from_coords(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
    let f = gaussian(vec![0.1, 0.2], 0.9, vec![0.4, -0.6]);
    let dim = label.dimension();
    let mut hom = 0.0f64;
    for _ in 0..trials {
        let (g1, g2) = (el(&mut rng), el(&mut rng));
        let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.5..1.5)).collect();
        let prod = if label.is_anti() {
            compose(&g2, &g1, params)
        } else {
            compose(&g1, &g2, params)
        };
        let lhs = apply_uir(label, &prod, params, &f, &x)?;
        let inner = |y: &[f64]| apply_uir(label, &g2, params, &f, y).unwrap_or(C64::new(f64::NAN, f64::NAN));
        let rhs = apply_uir(label, &g1, params, &inner, &x)?;
        hom = hom.max((lhs - rhs).norm());
    }
    let mut unit = 0.0f64;
    if dim > 0 {
        let n0 = norm_l2(&f, dim, 64)?;
        for _ in 0..trials.min(10) {
            let g = el(&mut rng);
            let uf = |x: &[f64]| apply_uir(label, &g, params, &f, x).unwrap_or(C64::new(f64::NAN, f64::NAN));
            unit = unit.max((norm_l2(&uf, dim, 64)? / n0 - 1.0).abs());
        }
    }
    Ok(UirCheck {
        trials,
        homomorphism_error: hom,
        unitarity_error: unit,
    })
}

fn uir_properties(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let p = ExtensionParams::new(1.3, 0.7, 0.4)?;
    let base: u64 = rng.gen();
    let labels = sample_labels();
    let checks: Vec<UirCheck> = labels
        .par_iter()
        .enumerate()
        .map(|(i, l)| uir_check(l, &p, base.wrapping_add(i as u64), 100))
        .collect::<Result<_>>()?;
    let mut pass = checks
        .iter()
        .all(|c| c.homomorphism_error <= 1e-10 && c.unitarity_error <= 1e-8);
    let reports: Vec<Value> = labels
        .iter()
        .zip(&checks)
        .map(|(l, c)| json!({ "label": l.name(), "homomorphism_error": c.homomorphism_error, "unitarity_error": c.unitarity_error }))
        .collect();
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
    let mut conj = 0.0f64;
    for (kind, u, ut) in &pairs {
        for _ in 0..100 {
            let g = GroupElement::from_coords(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
            let x: Vec<f64> = (0..kind.dimension()).map(|_| rng.gen_range(-2.0..2.0)).collect();
            conj = conj.max((conjugate_by_t(*kind, u, &g, &p, &f, &x)? - apply_uir(ut, &g, &p, &f, &x)?).norm());
        }
    }
    pass &= conj <= 1e-12;
    Ok((pass, json!({ "labels": reports, "flip_conjugation_error": conj })))
}

fn generator_check(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let f = gaussian(vec![0.2, -0.3], 1.0, vec![0.4, 0.1]);
    let points: Vec<[f64; 2]> = (0..4)
        .map(|_| [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
        .collect();
    let cases = [
        (CaseLabel::Landau, GaugeParams::new(0.8, 0.5, 0.3)?),
        (CaseLabel::ThetaOnly, GaugeParams::new(0.8, 0.5, 0.3)?),
        (CaseLabel::LandauSystem, GaugeParams::new(0.8, 0.5, 0.3)?),
        (CaseLabel::StandardQm, GaugeParams::new(1.1, 0.0, 0.0)?),
        (CaseLabel::SymmetricGauge, GaugeParams::new(1.0, -0.5, -0.5)?),
    ];
    let mut rows = Vec::new();
    let mut pass = true;
    for (case, gp) in cases {
        let mut worst = 0.0f64;
        for x in &points {
            for c in generator_crosscheck(case, &gp, &f, x, 1e-4)? {
                worst = worst.max(c.error);
            }
        }
        pass &= worst <= 1e-6;
        rows.push(json!({ "case": case.name(), "max_error": worst }));
    }
    Ok((pass, json!({ "step": 1e-4, "points": points.len(), "cases": rows })))
}

fn preserving_group(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let pf = GaugeParams::new(1.0, 0.5, 0.5)?;
    let explicit = preservation_error(&landau_to_sym(&pf)?, &pf)?;
    let pe = GaugeParams::new(rat(1, 1), rat(1, 2), rat(1, 3))?;
    let jf = induced_form(&pe.to_f64())?;
    let je = induced_form(&pe)?;
    let base: u64 = rng.gen();
    let (mut float_err, mut sp4_err, mut exact_fail) = (0.0f64, 0.0f64, 0);
    for i in 0..50 {
        let seed = base.wrapping_add(i);
        let m = random_preserving(&pe.to_f64(), seed)?;
        float_err = float_err.max(preservation_error(&m, &pe.to_f64())?);
        sp4_err = sp4_err.max(form_error(&to_sp4(&m, &pe.to_f64())?, &jf));
        let me = random_preserving(&pe, seed)?;
        if !is_ncqm_preserving(&me, &pe)? || !(&(&to_sp4(&me, &pe)? * &je) * &to_sp4(&me, &pe)?.transpose() == je) {
            exact_fail += 1;
        }
    }
    let derivation = derive_q_from_commutators()?;
    let pass = explicit <= 1e-12 && float_err <= 1e-10 && sp4_err <= 1e-10 && exact_fail == 0 && derivation.ok();
    Ok((
        pass,
        json!({
            "explicit_matrix_error": explicit,
            "samples": 50, "max_preservation_error": float_err, "max_sp4_error": sp4_err, "exact_failures": exact_fail,
            "derivation_ok": derivation.ok(),
        }),
    ))
}

fn gauge_transport(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let pf = GaugeParams::new(1.0, 0.5, 0.5)?;
    let landau = gauge_generators(&GaugeCase::Landau(pf.clone()))?;
    let sym = gauge_generators(&GaugeCase::SymmetricGauge(pf.clone()))?;
    let float_err = transform_generators(&landau_to_sym(&pf)?, &landau)?.max_diff(&sym)?;
    let pe = GaugeParams::new(rat(1, 1), rat(3, 4), rat(1, 1))?;
    let exact_ok = transform_generators(&landau_to_sym(&pe)?, &gauge_generators(&GaugeCase::Landau(pe.clone()))?)?
        == gauge_generators(&GaugeCase::SymmetricGauge(pe.clone()))?;
    let pr = GaugeParams::new(rat(1, 1), rat(1, 2), rat(1, 3))?;
    let lr = gauge_generators(&GaugeCase::Landau(pr.clone()))?;
    let base: u64 = rng.gen();
    let mut table_fail = 0;
    for i in 0..20 {
        let m = random_preserving(&pr, base.wrapping_add(i))?;
        if !tables_agree(&transform_generators(&m, &lr)?, &lr, 0.0)? {
            table_fail += 1;
        }
        let mf = random_preserving(&pr.to_f64(), base.wrapping_add(i))?;
        let lf = gauge_generators(&GaugeCase::Landau(pr.to_f64()))?;
        if !tables_agree(&transform_generators(&mf, &lf)?, &lf, 1e-10)? {
            table_fail += 1;
        }
    }
    let pass = float_err <= 1e-12 && exact_ok && table_fail == 0;
    Ok((
        pass,
        json!({ "landau_to_sym_error": float_err, "exact_transport": exact_ok, "members": 20, "table_failures": table_fail }),
    ))
}

fn biorthogonality_error(g: &DeformMatrix, max: u32) -> Result<f64> {
    let idx: Vec<(u32, u32)> = (0..=max).flat_map(|n| (0..=max).map(move |k| (n, k))).collect();
    let hs: Vec<BiPoly<C64>> = idx
        .iter()
        .map(|&(n, k)| deformed_hermite(g, n, k))
        .collect::<Result<_>>()?;
    let ds: Vec<BiPoly<C64>> = idx
        .iter()
        .map(|&(n, k)| dual_deformed_hermite(g, n, k))
        .collect::<Result<_>>()?;
    let mut worst = 0.0f64;
    for (i, d) in ds.iter().enumerate() {
        for (j, h) in hs.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((gauss_inner(d, h) - C64::new(want, 0.0)).norm());
        }
    }
    Ok(worst)
}

fn hermite_suite(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let mut construction_fail = Vec::new();
    for n in 0..=3 {
        for k in 0..=3 {
            let e = hermite_explicit(n, k);
            if hermite_rodrigues(n, k) != e || hermite_ladder(k, n) != e {
                construction_fail.push([n, k]);
            }
        }
    }
    let idx: Vec<(u32, u32)> = (0..=5).flat_map(|n| (0..=5).map(move |k| (n, k))).collect();
    let hs: Vec<_> = idx.iter().map(|&(n, k)| hermite_explicit(n, k)).collect();
    let mut ortho_fail = 0;
    for (i, a) in hs.iter().enumerate() {
        for (j, b) in hs.iter().enumerate() {
            let v = gauss_inner_scaled(a, b);
            if (i == j && !v.is_one()) || (i != j && !v.is_zero()) {
                ortho_fail += 1;
            }
        }
    }
    let m = BiPoly::<C64>::monomial(3, 3, C64::new(1.0, 0.0));
    let quad_err = (gauss_inner_quadrature(&BiPoly::one(), &m, 64) - gauss_inner(&BiPoly::one(), &m)).norm();
    let bi_sym = biorthogonality_error(&deform_matrix_sym(0.75)?, 3)?;
    let seed: u64 = rng.gen();
    let mut bi_polar = 0.0f64;
    for (_, g) in random_polar_matrices(seed, 10) {
        bi_polar = bi_polar.max(biorthogonality_error(&g, 3)?);
    }
    let mut comm = 0.0f64;
    for (_, g) in random_polar_matrices(seed.wrapping_add(1), 20) {
        comm = comm.max(
            annihilator_commutator(&g)?
                .terms()
                .map(|(_, c)| c.norm())
                .fold(0.0, f64::max),
        );
    }
    let degenerate = OscillatorParams::constrained(rat(1, 1), rat(1, 2), rat(1, 1), rat(2, 1))?;
    let ratio = nc_dagger_ratio(&degenerate)?;
    let ratio_ok = ratio == Some(Complex::new(rat(0, 1), rat(1, 1)));
    let pass = construction_fail.is_empty()
        && ortho_fail == 0
        && quad_err <= 1e-9
        && bi_sym <= 1e-10
        && bi_polar <= 1e-10
        && comm <= 1e-12
        && ratio_ok;
    Ok((
        pass,
        json!({
            "construction_failures": construction_fail,
            "orthonormality_failures": ortho_fail,
            "moment_vs_quadrature": quad_err,
            "biorthogonality_sym": bi_sym,
            "biorthogonality_polar": bi_polar,
            "annihilator_commutator": comm,
            "degenerate_ratio": ratio.map(|r| format!("{}+{}i", r.re, r.im)),
        }),
    ))
}

fn degenerate_witnesses(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let mut fails = Vec::new();
    let mut samples = vec![GaugeParams::new(rat(2, 1), rat(3, 1), rat(4, 3))?];
    for _ in 0..20 {
        let (h, t) = (r_pos(rng), r_nonzero(rng));
        samples.push(GaugeParams::new(h.clone(), t.clone(), h.clone() * h / t)?);
    }
    for p in &samples {
        debug_assert!(p.discriminant().is_zero());
        let c = Complex::new(p.hbar.clone() / p.vartheta.clone(), Rational::zero());
        let l = gauge_generators(&GaugeCase::Landau(p.clone()))?;
        let s = gauge_generators(&GaugeCase::SymmetricGauge(p.clone()))?;
        let witnesses = [
            ("landau P2+(hbar/vartheta)Q1", l.p2.add(&l.q1.scale(&c))?),
            ("symmetric P2+(hbar/vartheta)Q1", s.p2.add(&s.q1.scale(&c))?),
            ("symmetric P1-(hbar/vartheta)Q2", s.p1.sub(&s.q2.scale(&c))?),
        ];
        for (name, w) in witnesses {
            if !w.is_zero() {
                fails.push(json!({ "witness": name, "hbar": p.hbar.to_string(), "vartheta": p.vartheta.to_string() }));
            }
        }
    }
    Ok((fails.is_empty(), json!({ "samples": samples.len(), "failures": fails })))
}

fn geometry(rng: &mut ChaCha8Rng) -> Result<(bool, Value)> {
    let (mut det_fail, mut plane_fail, mut inter_fail, mut counts) = (0, 0, 0, [0usize; 3]);
    for _ in 0..5 {
        let p = r_params(rng);
        let mo = r_pos(rng);
        let osc = OscillatorParams::new(rat(1, 1), rat(0, 1), rat(0, 1), mo.clone(), rat(1, 1))?;
        let geo = geometry_constraints(&osc, &p);
        let rho = GridAxis {
            lo: rat(-3, 1),
            hi: rat(3, 1),
            n: 13,
        };
        let second = GridAxis {
            lo: rat(-2, 1),
            hi: rat(2, 1),
            n: 9,
        };
        let dual = |[r, s, t]: &[Rational; 3]| {
            let z = Rational::zero;
            DualVector::new([z(), z(), z(), z(), r.clone(), s.clone(), t.clone()])
        };
        let a = surface_sample(SurfaceKind::SRhoZeta, (&rho, &second), &p, &mo)?;
        det_fail += a.iter().filter(|x| !det_w(&dual(x), &p).is_zero()).count();
        let b = surface_sample(SurfaceKind::CoupledBoson, (&rho, &second), &p, &mo)?;
        plane_fail += b
            .iter()
            .filter(|[r, s, t]| *t != geo.tau_of_sigma(s) || !geo.admissible(r, s))
            .count();
        let c = surface_sample(SurfaceKind::Intersection, (&rho, &second), &p, &mo)?;
        inter_fail += c
            .iter()
            .filter(|x| !matches!(classify(&dual(x), &p), OrbitClass::Surface2D { zeta, .. } if zeta == geo.zeta_ho))
            .count();
        for (k, v) in [a.len(), b.len(), c.len()].into_iter().enumerate() {
            counts[k] += v;
        }
    }
    let pass = det_fail + plane_fail + inter_fail == 0 && counts.iter().all(|&c| c > 0);
    Ok((
        pass,
        json!({
            "s_rho_zeta": { "points": counts[0], "failures": det_fail },
            "coupled_boson": { "points": counts[1], "failures": plane_fail },
            "intersection": { "points": counts[2], "failures": inter_fail },
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_partition_criteria() {
        let total: usize = [Suite::Group, Suite::Orbits, Suite::Gauges, Suite::Uir, Suite::Hermite]
            .iter()
            .map(|s| CRITERIA.iter().filter(|c| c.2 == *s).count())
            .sum();
        assert_eq!(total, 12);
        assert_eq!(Suite::parse("hermite").unwrap().name(), "hermite");
        assert!(Suite::parse("nope").is_err());
        assert!(run_criterion(13, 0).is_err());
    }

    #[test]
    fn group_suite_is_deterministic() {
        let a = run_suite(Suite::Group, 4);
        let b = run_suite(Suite::Group, 4);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a[0].pass, "{}", a[0].details);
    }
}
