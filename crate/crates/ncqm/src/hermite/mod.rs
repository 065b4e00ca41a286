//! Complex Hermite polynomials on the Gaussian-weighted plane and their deformations.
//!
//! Three constructions of `H_{n,k}` are provided. The closed sum and the Rodrigues
//! form agree index for index. The ladder form `(a₁†)ⁿ(a₂†)ᵏ 1/√(n!k!)` with
//! `a₁† = z − ∂_z̄` produces `zⁿ` at `k = 0`, so it equals the closed sum with the
//! two indices exchanged. [`hermite_nk`] follows the closed sum.

pub mod deform;
pub mod poly;

use num::bigint::BigInt;
use num::{One, Zero};

pub use deform::{
    check_admissible, deform_matrix_polar, deform_matrix_sym, deformed_hermite, deformed_ladder, dual_deformed_hermite,
    epsilon, geometry_constraints, nc_dagger_directions, nc_dagger_ratio, nc_ladder, r_bounds, standard_ladder,
    DeformMatrix, GeometryConstraints, Ladder, OscillatorParams,
};
pub use poly::{BiPoly, ScaledPoly, Surd};

use crate::scalar::{CRat, Rational, Ring, C64};
use crate::uir::quadrature::gauss_hermite;
use crate::weyl::{Alphabet, ExactPoly, WeylPoly};

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn crat(r: Rational) -> CRat {
    CRat::new(r, Rational::zero())
}

/// `a₁ = ∂_z` (`i = 0`) or `a₂ = ∂_z̄` (`i = 1`).
pub fn annihilation<C: Ring>(i: usize) -> WeylPoly<C> {
    WeylPoly::d(Alphabet::Complex, i)
}

/// `a₁† = z − ∂_z̄` (`i = 0`) or `a₂† = z̄ − ∂_z` (`i = 1`).
pub fn creation<C: Ring>(i: usize) -> WeylPoly<C> {
    WeylPoly::x(Alphabet::Complex, i)
        .sub(&WeylPoly::d(Alphabet::Complex, 1 - i))
        .expect("same alphabet")
}

/// `√(n!k!) Σⱼ (−1)ʲ/j! · z̄ⁿ⁻ʲ/(n−j)! · zᵏ⁻ʲ/(k−j)!`.
pub fn hermite_explicit(n: u32, k: u32) -> ScaledPoly {
    let f = |m: u32| Rational::from_integer(factorial(m));
    let sum = BiPoly::from_terms((0..=n.min(k)).map(|j| {
        let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
        ([k - j, n - j], crat(sign / (f(j) * f(n - j) * f(k - j))))
    }));
    let scale = Surd::sqrt(&Rational::from_integer(factorial(n) * factorial(k))).expect("positive");
    ScaledPoly::new(&scale, &sum)
}

/// `(a₁†)ⁿ (a₂†)ᵏ 1 / √(n!k!)`.
pub fn hermite_ladder(n: u32, k: u32) -> ScaledPoly {
    let raised = BiPoly::<CRat>::one()
        .apply(&creation::<CRat>(1).pow(k))
        .and_then(|p| p.apply(&creation::<CRat>(0).pow(n)))
        .expect("complex alphabet");
    let scale = Surd::sqrt(&Rational::new(BigInt::one(), factorial(n) * factorial(k))).expect("positive");
    ScaledPoly::new(&scale, &raised)
}

/// `(−1)ⁿ⁺ᵏ/√(n!k!) · e^{|z|²} ∂_zⁿ ∂_z̄ᵏ e^{−|z|²}`, carried out on the polynomial prefactor.
pub fn hermite_rodrigues(n: u32, k: u32) -> ScaledPoly {
    let mut p = BiPoly::<CRat>::one();
    for _ in 0..k {
        p = p.dzbar().sub(&BiPoly::z().mul(&p));
    }
    for _ in 0..n {
        p = p.dz().sub(&BiPoly::zbar().mul(&p));
    }
    if (n + k) % 2 == 1 {
        p = p.neg();
    }
    let scale = Surd::sqrt(&Rational::new(BigInt::one(), factorial(n) * factorial(k))).expect("positive");
    ScaledPoly::new(&scale, &p)
}

/// `H_{n,k}(z, z̄)`, exact.
pub fn hermite_nk(n: u32, k: u32) -> ScaledPoly {
    hermite_explicit(n, k)
}

/// `⟨P, R⟩ = ∫ conj(P) R e^{−|z|²} dxdy/π` by the moment rule
/// `⟨zᵃz̄ᵇ, zᶜz̄ᵈ⟩ = (b+c)! δ_{b+c, a+d}`.
pub fn gauss_inner<C: Ring>(p: &BiPoly<C>, r: &BiPoly<C>) -> C {
    let mut total = C::zero();
    for (a, x) in p.terms() {
        for (c, y) in r.terms() {
            let (hol, anti) = (a[1] + c[0], a[0] + c[1]);
            if hol == anti {
                let f = (1..=hol as i64).fold(C::one(), |acc, i| acc * C::from_int(i));
                total = total + x.conj() * y.clone() * f;
            }
        }
    }
    total
}

/// Exact inner product of two scaled polynomials.
pub fn gauss_inner_scaled(p: &ScaledPoly, r: &ScaledPoly) -> Surd<CRat> {
    let a = Surd {
        root: p.root.clone(),
        coeff: CRat::one(),
    };
    let b = Surd {
        root: r.root.clone(),
        coeff: gauss_inner(&p.poly, &r.poly),
    };
    a.mul_with(&b, |x, y| x.clone() * y.clone(), |s| crat(Rational::from_integer(s)))
}

/// The same inner product by an `n × n` Cartesian Gauss–Hermite rule.
pub fn gauss_inner_quadrature(p: &BiPoly<C64>, r: &BiPoly<C64>, n: usize) -> C64 {
    let (x, w) = gauss_hermite(n);
    let mut total = C64::new(0.0, 0.0);
    for (xi, wi) in x.iter().zip(&w) {
        for (yj, wj) in x.iter().zip(&w) {
            let z = C64::new(*xi, *yj);
            total += p.eval(z).conj() * r.eval(z) * (wi * wj);
        }
    }
    total / std::f64::consts::PI
}

/// `[aᵢ, aⱼ†] = δᵢⱼ`, `[aᵢ, aⱼ] = [aᵢ†, aⱼ†] = 0` for the base ladder operators.
pub fn base_ccr_holds() -> bool {
    (0..2).all(|i| {
        (0..2).all(|j| {
            let a = annihilation::<CRat>(i);
            let expect = if i == j {
                ExactPoly::one(Alphabet::Complex)
            } else {
                ExactPoly::zero(Alphabet::Complex)
            };
            a.commutator(&creation(j)).ok() == Some(expect)
                && a.commutator(&annihilation(j)).map(|c| c.is_zero()).unwrap_or(false)
                && creation::<CRat>(i)
                    .commutator(&creation(j))
                    .map(|c| c.is_zero())
                    .unwrap_or(false)
        })
    })
}
