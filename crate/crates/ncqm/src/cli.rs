//! Command-line front end. Every run prints one JSON object with an `"ok"` field
//! (point clouds may go to a CSV file instead); exit code 0 iff ok, 1 on a numeric
//! failure and 2 on a usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::coadjoint::{
    classify, det_w, orbit_representative, points_to_csv, solve_to_origin, surface_sample, DualVector, GridAxis,
    OrbitClass, SurfaceKind,
};
use crate::error::{Error, Result};
use crate::gauge::{landau_to_sym, preservation_error, random_preserving, tables_agree, transform_generators};
use crate::group::{compose, to_matrix, ExtensionParams, GroupElement};
use crate::hermite::{
    deformed_hermite, dual_deformed_hermite, gauss_inner, hermite_nk, DeformMatrix, OscillatorParams,
};
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Rational, Real, ScalarKind, C64};
use crate::uir::{solve_master_2d, solve_master_4d, UirLabel};
use crate::verify::{run_suite, uir_check, Suite};
use crate::weyl::{commutator_table, expected_table, gauge_generators, CaseLabel, GaugeCase, GaugeParams};

#[derive(Debug, Parser)]
#[command(
    name = "ncqm",
    version,
    about = "Group, orbit, representation and gauge computations for G_NC"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two group elements given as `theta,phi,psi,q1,q2,p1,p2`.
    Compose {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long, default_value = "1,1,1")]
        abg: String,
    },
    /// Orbit family of a dual vector `X1..X7`.
    Classify {
        #[arg(long = "F")]
        f: String,
        #[arg(long, default_value = "1,1,1")]
        abg: String,
    },
    /// Canonical representative of an orbit given by family name and parameters.
    OrbitRep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: String,
        #[arg(long, default_value = "1,1,1")]
        abg: String,
    },
    /// Point cloud in `(rho, sigma, tau)` space.
    Surface {
        #[arg(long, value_parser = ["s-rho-zeta", "coupled-boson", "intersection"])]
        which: String,
        #[arg(long, default_value = "1,1,1")]
        abg: String,
        /// The product `M*Omega`.
        #[arg(long, default_value = "1")]
        m_omega: String,
        /// `lo,hi,n` for `rho`.
        #[arg(long, default_value = "-3,3,13")]
        rho: String,
        /// `lo,hi,n` for `zeta` (s-rho-zeta) or `sigma`.
        #[arg(long, default_value = "-2,2,9")]
        second: String,
        /// Write the points as CSV here instead of listing them.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Commutator table of one gauge realization.
    Commutators {
        #[arg(long)]
        case: String,
        #[arg(long, default_value = "1")]
        hbar: String,
        #[arg(long, default_value = "0")]
        vartheta: String,
        #[arg(long = "Bcal", default_value = "0")]
        bcal: String,
        /// Orbit labels of the realization (kappa, delta, c1..c4) in field order.
        #[arg(long, default_value = "")]
        extra: String,
    },
    /// Homomorphism and unitarity check of one representation family.
    UirCheck {
        #[arg(long)]
        label: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value = "1,1,1")]
        abg: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Solves the master equations for `g`; `--r` selects the two-dimensional section.
    MasterCheck {
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "1,1,1")]
        abg: String,
        #[arg(long, default_value = "0")]
        r1: String,
        #[arg(long, default_value = "0")]
        s2: String,
        #[arg(long)]
        r: Option<String>,
    },
    /// A member of the preserving group: Landau to symmetric, or random.
    GaugeMatrix {
        #[arg(long, default_value = "1")]
        hbar: String,
        #[arg(long, default_value = "1/2")]
        vartheta: String,
        #[arg(long = "Bcal", default_value = "1/2")]
        bcal: String,
        #[arg(long, conflicts_with = "random")]
        landau_to_sym: bool,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Applies a preserving matrix to the Landau generators.
    TransformGens {
        #[arg(long, default_value = "1")]
        hbar: String,
        #[arg(long, default_value = "1/2")]
        vartheta: String,
        #[arg(long = "Bcal", default_value = "1/2")]
        bcal: String,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Complex Hermite polynomial, optionally deformed by `sym:NU`, `polar:R,KAPPA,DELTA` or `id`.
    Hermite {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        g: Option<String>,
        #[command(flatten)]
        osc: OscArgs,
    },
    /// Gram matrix between dual and deformed Hermite polynomials with indices up to `--max`.
    Biorthogonality {
        #[arg(long)]
        max: u32,
        #[arg(long, default_value = "id")]
        g: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        osc: OscArgs,
    },
    /// Runs acceptance criteria.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Oscillator constants for polar deformations; `Bcal = vartheta (M Omega)^2`.
#[derive(Debug, clap::Args)]
pub struct OscArgs {
    #[arg(long, default_value = "1")]
    hbar: String,
    #[arg(long, default_value = "1/2")]
    vartheta: String,
    #[arg(long, default_value = "1")]
    mass: String,
    #[arg(long, default_value = "1")]
    omega: String,
}

impl OscArgs {
    fn build(&self) -> Result<OscillatorParams<f64>> {
        OscillatorParams::constrained(f(&self.hbar)?, f(&self.vartheta)?, f(&self.mass)?, f(&self.omega)?)
    }
}

fn q(s: &str) -> Result<Rational> {
    parse_rational(s)
}

fn f(s: &str) -> Result<f64> {
    Ok(parse_rational(s)?.to_f64())
}

fn list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(q).collect()
}

fn fixed<const N: usize>(s: &str, what: &str) -> Result<[Rational; N]> {
    let v = list(s)?;
    let got = v.len();
    v.try_into()
        .map_err(|_| Error::Parse(format!("{what} needs {N} comma-separated values, got {got}")))
}

fn abg(s: &str) -> Result<ExtensionParams<Rational>> {
    let [a, b, g] = fixed::<3>(s, "--abg")?;
    ExtensionParams::new(a, b, g)
}

fn element(s: &str, what: &str) -> Result<GroupElement<Rational>> {
    Ok(GroupElement::from_coords(fixed::<7>(s, what)?))
}

fn axis(s: &str, what: &str) -> Result<GridAxis<Rational>> {
    let [lo, hi, n] = fixed::<3>(s, what)?;
    let n = n
        .to_integer()
        .try_into()
        .map_err(|_| Error::Parse(format!("{what}: bad point count")))?;
    Ok(GridAxis { lo, hi, n })
}

fn matrix_json<R: Real>(m: &Matrix<R>) -> Value {
    json!(m
        .rows()
        .iter()
        .map(|r| r.iter().map(Real::encode).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn gauge_params<R: Real>(h: &str, t: &str, b: &str) -> Result<GaugeParams<R>> {
    let c = |s: &str| -> Result<R> {
        let r = q(s)?;
        R::decode(&r.encode()).or_else(|_| R::decode(&format!("{:?}", r.to_f64())))
    };
    GaugeParams::new(c(h)?, c(t)?, c(b)?)
}

/// Runs `go` on exact rationals and falls back to floats when a square root is irrational.
fn exact_or_float(go: impl Fn(bool) -> Result<Value>) -> Result<Value> {
    match go(true) {
        Err(Error::Inexact(_)) => go(false),
        r => r,
    }
}

fn commutators<R: Real>(label: CaseLabel, gp: GaugeParams<R>, extra: &[Rational]) -> Result<Value> {
    let mut e: [R; 4] = std::array::from_fn(|_| R::zero());
    for (slot, v) in e.iter_mut().zip(extra) {
        *slot = R::decode(&v.encode()).or_else(|_| R::decode(&format!("{:?}", v.to_f64())))?;
    }
    let case = GaugeCase::build(label, gp, e);
    let table = commutator_table(&gauge_generators(&case)?)?;
    let expected = expected_table(&case);
    let ok = match table.scalars() {
        Some(s) if R::KIND == ScalarKind::Rational => s == expected,
        Some(s) => s.iter().zip(&expected).all(|(a, b)| {
            (a.re.to_f64() - b.re.to_f64())
                .abs()
                .max((a.im.to_f64() - b.im.to_f64()).abs())
                <= 1e-12
        }),
        None => false,
    };
    let enc = |c: &num::Complex<R>| json!({ "re": c.re.encode(), "im": c.im.encode() });
    Ok(json!({
        "ok": ok,
        "case": label.name(),
        "exact": R::KIND == ScalarKind::Rational,
        "table": table.to_json(),
        "expected": expected.iter().map(enc).collect::<Vec<_>>(),
    }))
}

fn gauge_matrix<R: Real>(gp: GaugeParams<R>, random: bool, seed: u64) -> Result<Value> {
    let m = if random {
        random_preserving(&gp, seed)?
    } else {
        landau_to_sym(&gp)?
    };
    let err = preservation_error(&m, &gp)?;
    let preserves = if R::KIND == ScalarKind::Rational {
        err == 0.0
    } else {
        err <= 1e-10
    };
    Ok(json!({
        "ok": preserves,
        "preserves": preserves,
        "preservation_error": err,
        "exact": R::KIND == ScalarKind::Rational,
        "matrix": matrix_json(&m),
    }))
}

fn transform_gens<R: Real>(gp: GaugeParams<R>, random: bool, seed: u64) -> Result<Value> {
    let m = if random {
        random_preserving(&gp, seed)?
    } else {
        landau_to_sym(&gp)?
    };
    let exact = R::KIND == ScalarKind::Rational;
    let landau = gauge_generators(&GaugeCase::Landau(gp))?;
    let out = transform_generators(&m, &landau)?;
    let agree = tables_agree(&out, &landau, if exact { 0.0 } else { 1e-10 })?;
    Ok(json!({
        "ok": agree,
        "tables_agree": agree,
        "exact": exact,
        "matrix": matrix_json(&m),
        "generators": out.to_json(),
        "table": commutator_table(&out)?.to_json(),
    }))
}

fn execute(cmd: Command) -> Result<Value> {
    match cmd {
        Command::Compose { g1, g2, abg: p } => {
            let p = abg(&p)?;
            let (a, b) = (element(&g1, "--g1")?, element(&g2, "--g2")?);
            let c = compose(&a, &b, &p);
            let faithful = to_matrix(&c, &p) == &to_matrix(&a, &p) * &to_matrix(&b, &p);
            Ok(json!({ "ok": faithful, "result": c.to_json(), "matrix_product_agrees": faithful }))
        }
        Command::Classify { f: fv, abg: p } => {
            let p = abg(&p)?;
            let fv = DualVector::new(fixed::<7>(&fv, "--F")?);
            let mut v = classify(&fv, &p).to_json(&p);
            v["ok"] = json!(true);
            v["det_w"] = json!(det_w(&fv, &p).encode());
            v["to_origin"] = solve_to_origin(&fv, &p).map(|g| g.to_json()).unwrap_or(Value::Null);
            Ok(v)
        }
        Command::OrbitRep { family, params, abg: p } => {
            let p = abg(&p)?;
            let class = OrbitClass::from_parts(&family, &list(&params)?)?;
            let rep = orbit_representative(&class, &p);
            let round_trip = classify(&rep, &p) == class;
            let mut v = class.to_json(&p);
            v["ok"] = json!(round_trip);
            v["classifies_back"] = json!(round_trip);
            Ok(v)
        }
        Command::Surface {
            which,
            abg: p,
            m_omega,
            rho,
            second,
            out,
        } => {
            let p = abg(&p)?;
            let kind = match which.as_str() {
                "s-rho-zeta" => SurfaceKind::SRhoZeta,
                "coupled-boson" => SurfaceKind::CoupledBoson,
                _ => SurfaceKind::Intersection,
            };
            let (ra, sa) = (axis(&rho, "--rho")?, axis(&second, "--second")?);
            let pts = surface_sample(kind, (&ra, &sa), &p, &q(&m_omega)?)?;
            let z = Rational::default;
            let on_det_w = pts.iter().all(|[r, s, t]| {
                num::Zero::is_zero(&det_w(
                    &DualVector::new([z(), z(), z(), z(), r.clone(), s.clone(), t.clone()]),
                    &p,
                ))
            });
            let ok = kind == SurfaceKind::CoupledBoson || on_det_w;
            let mut v = json!({ "ok": ok, "which": which, "count": pts.len(), "det_w_zero": on_det_w });
            match out {
                Some(path) => {
                    std::fs::write(&path, points_to_csv(&pts))
                        .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
                    v["out"] = json!(path.display().to_string());
                }
                None => {
                    v["points"] = json!(pts.iter().map(|x| x.clone().map(|c| c.encode())).collect::<Vec<_>>());
                }
            }
            Ok(v)
        }
        Command::Commutators {
            case,
            hbar,
            vartheta,
            bcal,
            extra,
        } => {
            let label = CaseLabel::parse(&case)?;
            let extra = list(&extra)?;
            if extra.len() > 4 {
                return Err(Error::Parse("--extra takes at most four values".into()));
            }
            exact_or_float(|exact| {
                if exact {
                    commutators(label, gauge_params::<Rational>(&hbar, &vartheta, &bcal)?, &extra)
                } else {
                    commutators(label, gauge_params::<f64>(&hbar, &vartheta, &bcal)?, &extra)
                }
            })
        }
        Command::UirCheck {
            label,
            params,
            abg: p,
            trials,
            tol,
            seed,
        } => {
            let vals: Vec<f64> = list(&params)?.iter().map(Real::to_f64).collect();
            let label = UirLabel::from_parts(&label, &vals)?;
            let c = uir_check(&label, &abg(&p)?.to_f64(), seed, trials)?;
            let passes = c.max_error() <= tol;
            Ok(json!({
                "ok": passes, "passes": passes, "label": label.name(), "trials": c.trials, "max_error": c.max_error(),
                "homomorphism_error": c.homomorphism_error, "unitarity_error": c.unitarity_error, "tol": tol,
            }))
        }
        Command::MasterCheck { g, abg: p, r1, s2, r } => {
            let p = abg(&p)?;
            let g = element(&g, "--g")?;
            let (section, sol) = match r {
                Some(r) => ("2d", solve_master_2d(&g, &q(&r)?, &p)?),
                None => ("4d", solve_master_4d(&g, &q(&r1)?, &q(&s2)?, &p)?),
            };
            Ok(json!({ "ok": true, "section": section, "solution": sol.to_json() }))
        }
        Command::GaugeMatrix {
            hbar,
            vartheta,
            bcal,
            landau_to_sym: _,
            random,
            seed,
        } => exact_or_float(|exact| {
            if exact {
                gauge_matrix(gauge_params::<Rational>(&hbar, &vartheta, &bcal)?, random, seed)
            } else {
                gauge_matrix(gauge_params::<f64>(&hbar, &vartheta, &bcal)?, random, seed)
            }
        }),
        Command::TransformGens {
            hbar,
            vartheta,
            bcal,
            random,
            seed,
        } => exact_or_float(|exact| {
            if exact {
                transform_gens(gauge_params::<Rational>(&hbar, &vartheta, &bcal)?, random, seed)
            } else {
                transform_gens(gauge_params::<f64>(&hbar, &vartheta, &bcal)?, random, seed)
            }
        }),
        Command::Hermite { n, k, g, osc } => match g {
            None => {
                let h = hermite_nk(n, k);
                Ok(json!({ "ok": true, "n": n, "k": k, "exact": h.to_json(), "pretty": h.pretty() }))
            }
            Some(spec) => {
                let osc = osc.build()?;
                let g = DeformMatrix::parse(&spec, Some(&osc))?;
                let h = deformed_hermite(&g, n, k)?;
                let d = dual_deformed_hermite(&g, n, k)?;
                Ok(json!({
                    "ok": true, "n": n, "k": k, "g": g.to_json(),
                    "deformed": h.to_json(), "dual": d.to_json(), "pretty": h.pretty(),
                }))
            }
        },
        Command::Biorthogonality { max, g, tol, osc } => {
            let osc = osc.build()?;
            let g = DeformMatrix::parse(&g, Some(&osc))?;
            let idx: Vec<(u32, u32)> = (0..=max).flat_map(|n| (0..=max).map(move |k| (n, k))).collect();
            let hs = idx
                .iter()
                .map(|&(n, k)| deformed_hermite(&g, n, k))
                .collect::<Result<Vec<_>>>()?;
            let ds = idx
                .iter()
                .map(|&(n, k)| dual_deformed_hermite(&g, n, k))
                .collect::<Result<Vec<_>>>()?;
            let mut worst = 0.0f64;
            let gram: Vec<Vec<[f64; 2]>> = ds
                .iter()
                .enumerate()
                .map(|(i, d)| {
                    hs.iter()
                        .enumerate()
                        .map(|(j, h)| {
                            let v = gauss_inner(d, h);
                            worst = worst.max((v - C64::new(if i == j { 1.0 } else { 0.0 }, 0.0)).norm());
                            [v.re, v.im]
                        })
                        .collect()
                })
                .collect();
            Ok(json!({
                "ok": worst <= tol, "indices": idx, "g": g.to_json(), "gram": gram, "max_deviation": worst, "tol": tol,
            }))
        }
        Command::Verify { suite, seed } => {
            let reports = run_suite(Suite::parse(&suite)?, seed);
            let mut suites = serde_json::Map::new();
            for r in &reports {
                let e = suites
                    .entry(r.suite.name())
                    .or_insert_with(|| json!({ "passed": 0, "total": 0 }));
                e["total"] = json!(e["total"].as_u64().unwrap_or(0) + 1);
                e["passed"] = json!(e["passed"].as_u64().unwrap_or(0) + u64::from(r.pass));
            }
            Ok(json!({
                "ok": reports.iter().all(|r| r.pass),
                "suite": suite,
                "seed": seed,
                "suites": suites,
                "criteria": reports,
            }))
        }
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::DimensionMismatch { .. }
            | Error::KindMismatch(_)
            | Error::InvalidParams(_)
            | Error::OutOfBounds(_)
    )
}

/// Parses `args` (including the program name) and returns the exit code and the text to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match execute(cli.command) {
        Ok(mut v) => {
            let code = if v["ok"] == json!(true) { 0 } else { 1 };
            if code == 1 {
                let failed: Vec<String> = v
                    .as_object()
                    .into_iter()
                    .flatten()
                    .filter(|(k, x)| *k != "ok" && **x == json!(false))
                    .map(|(k, _)| k.clone())
                    .collect();
                v["failed"] = json!(failed);
            }
            (code, serde_json::to_string_pretty(&v).expect("json values serialize"))
        }
        Err(e) => {
            let code = if is_usage(&e) { 2 } else { 1 };
            let v = json!({ "ok": false, "error": e.to_string() });
            (code, serde_json::to_string_pretty(&v).expect("json values serialize"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let (code, out) = run(std::iter::once("ncqm").chain(args.iter().copied()));
        (code, serde_json::from_str(&out).unwrap_or(Value::Null))
    }

    #[test]
    fn classify_example() {
        let (code, v) = call(&["classify", "--F", "0,0,0,0,1,1,2", "--abg", "1,1,1"]);
        assert_eq!(code, 0);
        assert_eq!(v["family"], "Generic4D");
        assert_eq!(v["dimension"], 4);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["ncqm", "classify", "--bogus"]).0, 2);
        assert_eq!(call(&["classify", "--F", "1,2", "--abg", "1,1,1"]).0, 2);
        assert_eq!(call(&["commutators", "--case", "nope"]).0, 2);
    }

    #[test]
    fn numeric_failure_exits_one() {
        let (code, v) = call(&["gauge-matrix", "--hbar", "1", "--vartheta", "2", "--Bcal", "1/2"]);
        assert_eq!(code, 1);
        assert_eq!(v["ok"], false);
        assert!(v["error"].as_str().unwrap().contains("hbar^2"));
    }

    #[test]
    fn symmetric_table_falls_back_to_floats() {
        let (code, v) = call(&[
            "commutators",
            "--case",
            "symmetric",
            "--hbar",
            "1",
            "--vartheta",
            "1/2",
            "--Bcal",
            "1/2",
        ]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["exact"], false);
        let (code, v) = call(&[
            "commutators",
            "--case",
            "symmetric",
            "--hbar",
            "1",
            "--vartheta",
            "3/4",
            "--Bcal",
            "1",
        ]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["exact"], true);
    }

    #[test]
    fn output_is_deterministic() {
        let a = run(["ncqm", "gauge-matrix", "--random", "--seed", "5"]);
        let b = run(["ncqm", "gauge-matrix", "--random", "--seed", "5"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
}
