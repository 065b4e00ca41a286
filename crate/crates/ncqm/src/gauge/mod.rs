//! Linear transformations of `(Q̂₁, P̂₂, Q̂₂, P̂₁)` that preserve the noncommutative
//! commutation relations, i.e. real 4×4 matrices with `M𝕢Mᵀ = 𝕢`.
//!
//! The ordering `(Q̂₁, P̂₂, Q̂₂, P̂₁)` is used for every matrix in this module. In that
//! ordering the commutators of the Landau-gauge generators are `[vᵢ, vⱼ] = −iħ𝕢ᵢⱼ`.

pub mod symbolic;

use num::{Complex, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Mat4, Matrix};
use crate::scalar::{rat, CRat, Rational, Real, Ring};
use crate::weyl::{Alphabet, GaugeParams, Generators, WeylPoly};
use symbolic::{m_index, SymPoly, BCAL, HBAR, NVARS, VARTHETA};

/// Names of the ordered generators.
pub const ORDER: [&str; 4] = ["Q1", "P2", "Q2", "P1"];

fn nondegenerate<R: Real>(p: &GaugeParams<R>) -> Result<()> {
    if p.discriminant().is_zero() {
        return Err(Error::Degenerate("hbar^2 - Bcal*vartheta must be nonzero".into()));
    }
    Ok(())
}

/// `Q = [[−ϑ/ħ, −1], [1, 𝓑/ħ]]`.
pub fn q_block<R: Real>(p: &GaugeParams<R>) -> Result<Matrix<R>> {
    nondegenerate(p)?;
    Ok(Matrix::from_rows(vec![
        vec![-(p.vartheta.clone() / p.hbar.clone()), -R::one()],
        vec![R::one(), p.bcal.clone() / p.hbar.clone()],
    ]))
}

/// `𝕢 = [[0, Q], [−Qᵀ, 0]]`.
pub fn q_form<R: Real>(p: &GaugeParams<R>) -> Result<Mat4<R>> {
    let q = q_block(p)?;
    let mut out = Mat4::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            out.set(i, j + 2, q.get(i, j).clone());
            out.set(j + 2, i, -q.get(i, j).clone());
        }
    }
    Ok(out)
}

/// `M𝕢Mᵀ − 𝕢`.
pub fn preservation_defect<R: Real>(m: &Mat4<R>, p: &GaugeParams<R>) -> Result<Mat4<R>> {
    check_size(m)?;
    let q = q_form(p)?;
    Ok(&(&(m * &q) * &m.transpose()) - &q)
}

/// Exact membership test `M𝕢Mᵀ = 𝕢`. On floats this is bitwise equality; use
/// [`preservation_error`] with a tolerance instead.
pub fn is_ncqm_preserving<R: Real>(m: &Mat4<R>, p: &GaugeParams<R>) -> Result<bool> {
    Ok(preservation_defect(m, p)?.is_zero())
}

/// Largest entry of `|M𝕢Mᵀ − 𝕢|`.
pub fn preservation_error<R: Real>(m: &Mat4<R>, p: &GaugeParams<R>) -> Result<f64> {
    Ok(preservation_defect(m, p)?.max_abs())
}

fn check_size<T: crate::matrix::Entry>(m: &Matrix<T>) -> Result<()> {
    if m.size() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: m.size(),
        });
    }
    Ok(())
}

/// `𝒰`, the change of variables from the canonical operators to the Landau-gauge ones.
pub fn u_matrix<R: Real>(p: &GaugeParams<R>) -> Result<Mat4<R>> {
    nondegenerate(p)?;
    let (z, o) = (R::zero, R::one);
    Ok(Matrix::from_rows(vec![
        vec![-o(), p.vartheta.clone() / p.hbar.clone(), z(), z()],
        vec![p.bcal.clone() / p.hbar.clone(), -o(), z(), z()],
        vec![z(), z(), o(), z()],
        vec![z(), z(), z(), o()],
    ]))
}

/// `J = 𝒰⁻¹𝕢(𝒰⁻¹)ᵀ`.
pub fn induced_form<R: Real>(p: &GaugeParams<R>) -> Result<Mat4<R>> {
    let ui = u_matrix(p)?.inverse()?;
    Ok(&(&ui * &q_form(p)?) * &ui.transpose())
}

/// `𝒰⁻¹M𝒰`.
pub fn to_sp4<R: Real>(m: &Mat4<R>, p: &GaugeParams<R>) -> Result<Mat4<R>> {
    check_size(m)?;
    let u = u_matrix(p)?;
    Ok(&(&u.inverse()? * m) * &u)
}

/// Largest entry of `|SJSᵀ − J|`.
pub fn form_error<R: Real>(s: &Mat4<R>, j: &Mat4<R>) -> f64 {
    (&(&(s * j) * &s.transpose()) - j).max_abs()
}

/// The matrix taking the Landau-gauge generators to the symmetric-gauge ones. Needs
/// `ħ² − 𝓑ϑ > 0` and `ϑ ≠ 0`; on rationals the square root must be exact.
pub fn landau_to_sym<R: Real>(p: &GaugeParams<R>) -> Result<Mat4<R>> {
    if p.vartheta.is_zero() {
        return Err(Error::Degenerate("vartheta must be nonzero".into()));
    }
    if p.discriminant() <= R::zero() {
        return Err(Error::Degenerate("hbar^2 - Bcal*vartheta must be > 0".into()));
    }
    let s = p.sqrt_discriminant()?;
    let (h, t, b) = (p.hbar.clone(), p.vartheta.clone(), p.bcal.clone());
    let d = p.discriminant();
    let two = R::from_ratio(2, 1);
    let three = R::from_ratio(3, 1);
    let z = R::zero;
    Ok(Matrix::from_rows(vec![
        vec![
            R::one() + b.clone() * t.clone() / (two.clone() * d.clone()),
            t.clone() * h.clone() / (two.clone() * d.clone()),
            z(),
            z(),
        ],
        vec![
            b.clone() * (two.clone() * h.clone() * s.clone() - b * t.clone())
                / (two.clone() * d.clone() * (h.clone() + s.clone())),
            h.clone() * (three * s.clone() - h.clone()) / (two.clone() * d),
            z(),
            z(),
        ],
        vec![z(), z(), R::one(), t.clone() / (two.clone() * h.clone())],
        vec![z(), z(), (h.clone() - s.clone()) / t, (h.clone() + s) / (two * h)],
    ]))
}

/// `v′ = M v` with `v = (Q̂₁, P̂₂, Q̂₂, P̂₁)`.
pub fn transform_generators<R: Real>(m: &Mat4<R>, gens: &Generators<Complex<R>>) -> Result<Generators<Complex<R>>> {
    check_size(m)?;
    let v = gens.ordered();
    let al = v[0].alphabet();
    if al != Alphabet::Real2 {
        return Err(Error::AlphabetMismatch(al.to_string(), Alphabet::Real2.to_string()));
    }
    let mut out: Vec<WeylPoly<Complex<R>>> = Vec::with_capacity(4);
    for i in 0..4 {
        let mut acc = WeylPoly::zero(al);
        for (k, vk) in v.iter().enumerate() {
            acc = acc.add(&vk.scale(&Complex::new(m.get(i, k).clone(), R::zero())))?;
        }
        out.push(acc);
    }
    let arr: [WeylPoly<Complex<R>>; 4] = out.try_into().expect("four rows");
    Ok(Generators::from_ordered(arr))
}

/// A member `𝒰S𝒰⁻¹` of the preserving group, where `S` is a product of `J`-symplectic
/// transvections `I + c·(Jw)wᵀ` with small rational `c` and integer `w`. Exact on rationals.
pub fn random_preserving<R: Real>(p: &GaugeParams<R>, seed: u64) -> Result<Mat4<R>> {
    let j = induced_form(p)?;
    let u = u_matrix(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Mat4::<R>::identity(4);
    for _ in 0..6 {
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3i64..=3);
        }
        let w: Vec<R> = (0..4).map(|_| R::from_ratio(rng.gen_range(-1i64..=1), 1)).collect();
        let jw: Vec<R> = (0..4)
            .map(|a| (0..4).fold(R::zero(), |acc, b| acc + j.get(a, b).clone() * w[b].clone()))
            .collect();
        let mut t = Mat4::<R>::identity(4);
        let cr = R::from_ratio(c, 8);
        for a in 0..4 {
            for b in 0..4 {
                t.set(a, b, t.get(a, b).clone() + cr.clone() * jw[a].clone() * w[b].clone());
            }
        }
        s = &s * &t;
    }
    Ok(&(&u * &s) * &u.inverse()?)
}

/// Outcome of expanding the commutators of a generic transformation symbolically.
#[derive(Clone, Debug)]
pub struct Derivation {
    /// `𝕢` recovered from the Landau-gauge commutators, entries Laurent in `ħ`.
    pub q: Matrix<SymPoly>,
    /// `[v′ᵢ, v′ⱼ] − [vᵢ, vⱼ]` for `i < j`, as polynomials in the `mᵢⱼ`.
    pub constraints: Vec<(String, SymPoly)>,
    /// `𝕢` is antisymmetric with vanishing diagonal blocks.
    pub block_form: bool,
    /// Each constraint equals `−iħ(M𝕢Mᵀ − 𝕢)ᵢⱼ` for the generic `M`.
    pub matches_matrix_condition: bool,
    /// The recovered `Q` block equals `[[−ϑ/ħ, −1], [1, 𝓑/ħ]]` symbolically.
    pub matches_q_form: bool,
}

impl Derivation {
    pub fn ok(&self) -> bool {
        self.block_form && self.matches_matrix_condition && self.matches_q_form
    }

    /// Entry `(i, j)` of the recovered `Q` block (zero-based).
    pub fn q_entry(&self, i: usize, j: usize) -> &SymPoly {
        self.q.get(i, j + 2)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "Q": (0..2).map(|i| (0..2).map(|j| self.q_entry(i, j).to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "constraints": self.constraints.iter().map(|(n, c)| serde_json::json!({"name": n, "expr": c.to_string()})).collect::<Vec<_>>(),
            "block_form": self.block_form,
            "matches_matrix_condition": self.matches_matrix_condition,
            "matches_q_form": self.matches_q_form,
        })
    }
}

fn sym(c: CRat) -> SymPoly {
    SymPoly::constant(c)
}

fn landau_symbolic() -> [WeylPoly<SymPoly>; 4] {
    let a = Alphabet::Real2;
    let i = || sym(CRat::new(rat(0, 1), rat(1, 1)));
    let h = || SymPoly::var(HBAR);
    let q1 = WeylPoly::x(a, 0)
        .add(&WeylPoly::d(a, 1).scale(&(i() * SymPoly::var(VARTHETA))))
        .expect("same alphabet");
    let q2 = WeylPoly::x(a, 1);
    let p1 = WeylPoly::d(a, 0).scale(&(-(i() * h())));
    let p2 = WeylPoly::x(a, 0)
        .scale(&(-(SymPoly::var(BCAL) * SymPoly::var_pow(HBAR, -1))))
        .add(&WeylPoly::d(a, 1).scale(&(-(i() * h()))))
        .expect("same alphabet");
    [q1, p2, q2, p1]
}

fn constant_of(p: &WeylPoly<SymPoly>) -> Result<SymPoly> {
    p.as_constant()
        .ok_or_else(|| Error::Precondition("commutator is not a multiple of the identity".into()))
}

/// Expands all commutators of `v′ = Mv` for a matrix of indeterminates, using the Landau-gauge
/// symbols, and recovers `𝕢` from the base commutators.
pub fn derive_q_from_commutators() -> Result<Derivation> {
    let v = landau_symbolic();
    let a = Alphabet::Real2;
    let mvar = |i: usize, j: usize| SymPoly::var(m_index(i, j));
    let primed: Vec<WeylPoly<SymPoly>> = (0..4)
        .map(|i| {
            v.iter()
                .enumerate()
                .try_fold(WeylPoly::zero(a), |acc, (k, vk)| acc.add(&vk.scale(&mvar(i, k))))
        })
        .collect::<Result<_>>()?;

    let mut base = Matrix::<SymPoly>::zeros(4);
    let mut constraints = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            base.set(i, j, constant_of(&v[i].commutator(&v[j])?)?);
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let cp = constant_of(&primed[i].commutator(&primed[j])?)?;
            constraints.push((format!("[{}',{}']", ORDER[i], ORDER[j]), cp - base.get(i, j).clone()));
        }
    }

    // C = −iħ𝕢, so 𝕢 = (i/ħ)·C.
    let i_over_h = sym(CRat::new(rat(0, 1), rat(1, 1))) * SymPoly::var_pow(HBAR, -1);
    let q = base.map(|c| i_over_h.clone() * c.clone());

    let zero_blocks = (0..2).all(|i| (0..2).all(|j| q.get(i, j).is_zero() && q.get(i + 2, j + 2).is_zero()));
    let block_form = zero_blocks && q.transpose() == q.map(|x| -x.clone());

    let mut msym = Matrix::<SymPoly>::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            msym.set(i, j, mvar(i, j));
        }
    }
    let defect = &(&(&msym * &q) * &msym.transpose()) - &q;
    let minus_ih = sym(CRat::new(rat(0, 1), rat(-1, 1))) * SymPoly::var(HBAR);
    let mut k = 0;
    let mut matches_matrix_condition = true;
    for i in 0..4 {
        for j in i + 1..4 {
            matches_matrix_condition &= constraints[k].1 == minus_ih.clone() * defect.get(i, j).clone();
            k += 1;
        }
    }

    let hinv = || SymPoly::var_pow(HBAR, -1);
    let expected = [
        [-(SymPoly::var(VARTHETA) * hinv()), -SymPoly::one()],
        [SymPoly::one(), SymPoly::var(BCAL) * hinv()],
    ];
    let matches_q_form = (0..2).all(|i| (0..2).all(|j| q.get(i, j + 2) == &expected[i][j]));

    Ok(Derivation {
        q,
        constraints,
        block_form,
        matches_matrix_condition,
        matches_q_form,
    })
}

/// Evaluates the recovered `𝕢` at rational `(ħ, ϑ, 𝓑)`.
pub fn evaluate_derived_q(d: &Derivation, p: &GaugeParams<Rational>) -> Result<Mat4<Rational>> {
    let mut vals: [Rational; NVARS] = std::array::from_fn(|_| rat(0, 1));
    vals[HBAR] = p.hbar.clone();
    vals[VARTHETA] = p.vartheta.clone();
    vals[BCAL] = p.bcal.clone();
    let mut out = Mat4::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            let c = d.q.get(i, j).eval(&vals)?;
            if !c.im.is_zero() {
                return Err(Error::Precondition("recovered form has an imaginary entry".into()));
            }
            out.set(i, j, c.re);
        }
    }
    Ok(out)
}

/// Commutator tables agree within `tol` (exactly when `tol` is zero and coefficients are rational).
pub fn tables_agree<R: Real>(a: &Generators<Complex<R>>, b: &Generators<Complex<R>>, tol: f64) -> Result<bool> {
    let ta = crate::weyl::commutator_table(a)?;
    let tb = crate::weyl::commutator_table(b)?;
    for (x, y) in ta.entries.iter().zip(&tb.entries) {
        let d = x.sub(y)?;
        let worst = d.terms().map(|(_, c)| c.to_c64().norm()).fold(0.0, f64::max);
        if worst > tol || (tol == 0.0 && !d.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{gauge_generators, GaugeCase};

    fn gp(h: (i64, i64), t: (i64, i64), b: (i64, i64)) -> GaugeParams<Rational> {
        GaugeParams::new(rat(h.0, h.1), rat(t.0, t.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn commutative_limit_form() {
        let p = gp((1, 1), (0, 1), (0, 1));
        let q = q_block(&p).unwrap();
        assert_eq!(
            q,
            Matrix::from_rows(vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(1, 1), rat(0, 1)]])
        );
        let f = q_form(&p).unwrap();
        assert_eq!(f.transpose(), f.map(|x| -x.clone()));
    }

    #[test]
    fn det_of_q() {
        let p = gp((3, 2), (1, 3), (-2, 5));
        let want = p.discriminant() / (p.hbar.clone() * p.hbar.clone());
        assert_eq!(q_block(&p).unwrap().det(), want.clone());
        assert_eq!(q_form(&p).unwrap().det(), want.clone() * want);
        assert!(q_form(&gp((1, 1), (1, 1), (1, 1))).is_err());
    }

    #[test]
    fn membership() {
        let p = gp((1, 1), (1, 2), (1, 2));
        assert!(is_ncqm_preserving(&Mat4::identity(4), &p).unwrap());
        let mut m = Mat4::identity(4);
        m.set(0, 1, rat(1, 7));
        assert!(!is_ncqm_preserving(&m, &p).unwrap());
    }

    #[test]
    fn explicit_matrix_float() {
        let p = GaugeParams::new(1.0, 0.5, 0.5).unwrap();
        let m = landau_to_sym(&p).unwrap();
        assert!(preservation_error(&m, &p).unwrap() < 1e-12);
        let landau = gauge_generators(&GaugeCase::Landau(p.clone())).unwrap();
        let sym = gauge_generators(&GaugeCase::SymmetricGauge(p.clone())).unwrap();
        assert!(transform_generators(&m, &landau).unwrap().max_diff(&sym).unwrap() < 1e-12);
    }

    #[test]
    fn explicit_matrix_exact_when_root_is_rational() {
        let p = gp((1, 1), (3, 4), (1, 1));
        let m = landau_to_sym(&p).unwrap();
        assert!(is_ncqm_preserving(&m, &p).unwrap());
        let landau = gauge_generators(&GaugeCase::Landau(p.clone())).unwrap();
        let sym = gauge_generators(&GaugeCase::SymmetricGauge(p.clone())).unwrap();
        assert_eq!(transform_generators(&m, &landau).unwrap(), sym);
        assert!(matches!(
            landau_to_sym(&gp((1, 1), (1, 2), (1, 2))),
            Err(Error::Inexact(_))
        ));
    }

    #[test]
    fn small_vartheta_is_near_identity() {
        let p = GaugeParams::new(1.0, 1e-6, 0.0).unwrap();
        let m = landau_to_sym(&p).unwrap();
        let id = Mat4::<f64>::identity(4);
        let diff = &m - &id;
        assert!(diff.get(0, 1).abs() < 1e-6 && diff.get(2, 3).abs() < 1e-6);
        assert!(diff.get(0, 0).abs() < 1e-12 && diff.get(3, 2).abs() < 1e-12);
        assert!((m.get(1, 1) - 1.0).abs() < 1e-12 && (m.get(3, 3) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_members_exact() {
        let p = gp((1, 1), (1, 2), (1, 3));
        let j = induced_form(&p).unwrap();
        assert_eq!(j.transpose(), j.map(|x| -x.clone()));
        assert!(!j.det().is_zero());
        let a = random_preserving(&p, 1).unwrap();
        let b = random_preserving(&p, 2).unwrap();
        assert_eq!(a, random_preserving(&p, 1).unwrap());
        for m in [&a, &b, &(&a * &b), &a.inverse().unwrap()] {
            assert!(is_ncqm_preserving(m, &p).unwrap());
            assert_eq!(form_error(&to_sp4(m, &p).unwrap(), &j), 0.0);
        }
        assert_eq!(
            to_sp4(&(&a * &b), &p).unwrap(),
            &to_sp4(&a, &p).unwrap() * &to_sp4(&b, &p).unwrap()
        );
        assert_eq!(to_sp4(&Mat4::identity(4), &p).unwrap(), Mat4::identity(4));
    }

    #[test]
    fn transport_preserves_tables() {
        let p = gp((1, 1), (1, 2), (1, 3));
        let landau = gauge_generators(&GaugeCase::Landau(p.clone())).unwrap();
        for seed in 0..5 {
            let m = random_preserving(&p, seed).unwrap();
            assert!(tables_agree(&transform_generators(&m, &landau).unwrap(), &landau, 0.0).unwrap());
        }
        let mut bad = Mat4::identity(4);
        bad.set(2, 2, rat(2, 1));
        assert!(!tables_agree(&transform_generators(&bad, &landau).unwrap(), &landau, 0.0).unwrap());
    }

    #[test]
    fn derivation_reproduces_q() {
        let d = derive_q_from_commutators().unwrap();
        assert!(d.ok(), "{:?}", d.to_json());
        assert_eq!(d.constraints.len(), 6);
        assert_eq!(d.q_entry(0, 0), &-(SymPoly::var(VARTHETA) * SymPoly::var_pow(HBAR, -1)));
        assert_eq!(d.q_entry(1, 0), &SymPoly::one());
        for p in [gp((1, 1), (1, 2), (1, 3)), gp((5, 3), (-2, 7), (4, 1))] {
            assert_eq!(evaluate_derived_q(&d, &p).unwrap(), q_form(&p).unwrap());
        }
    }
}
