//! Factorizations `δ·g = h·δ'` through the polarizing subgroups and their sections.
//!
//! All matrices are written out entry by entry rather than obtained from
//! [`to_matrix`](crate::group::to_matrix), so the check is independent of it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{to_matrix, ExtensionParams, GroupElement};
use crate::matrix::Mat8;
use crate::scalar::Real;

/// The seven unknowns `A, …, G`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MasterSolution<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
    pub e: R,
    pub f: R,
    pub g: R,
}

impl<R: Real> MasterSolution<R> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "A": self.a.encode(), "B": self.b.encode(), "C": self.c.encode(), "D": self.d.encode(),
            "E": self.e.encode(), "F": self.f.encode(), "G": self.g.encode(),
        })
    }
}

fn halves<R: Real>(p: &ExtensionParams<R>) -> (R, R, R) {
    let h = R::half();
    (
        h.clone() * p.alpha.clone(),
        h.clone() * p.beta.clone(),
        h * p.gamma.clone(),
    )
}

/// Element `h(θ, φ, ψ, p₁, q₂)` of the abelian polarizing subgroup.
pub fn abelian_subgroup_matrix<R: Real>(
    theta: R,
    phi: R,
    psi: R,
    p1: R,
    q2: R,
    params: &ExtensionParams<R>,
) -> Mat8<R> {
    let (a, b, c) = halves(params);
    let mut m = Mat8::identity(8);
    m.put(1, 4, -(a.clone() * p1.clone()));
    m.put(1, 7, a * q2.clone());
    m.put(1, 8, theta);
    m.put(2, 7, b * p1.clone());
    m.put(2, 8, phi);
    m.put(3, 4, -(c * q2.clone()));
    m.put(3, 8, psi);
    m.put(5, 8, q2);
    m.put(6, 8, p1);
    m
}

/// Section `δ(r₁, s₂)` for the four-dimensional orbits.
pub fn section_4d<R: Real>(r1: R, s2: R, params: &ExtensionParams<R>) -> Mat8<R> {
    let (a, b, c) = halves(params);
    let mut m = Mat8::identity(8);
    m.put(1, 5, -(a.clone() * s2.clone()));
    m.put(1, 6, a * r1.clone());
    m.put(2, 6, -(b * s2.clone()));
    m.put(3, 5, c * r1.clone());
    m.put(4, 8, r1);
    m.put(7, 8, s2);
    m
}

/// Element `h(θ, φ, ψ, p₁, p₂, q₁)` of the non-abelian polarizing subgroup.
pub fn nonabelian_subgroup_matrix<R: Real>(
    [theta, phi, psi, p1, p2, q1]: [R; 6],
    params: &ExtensionParams<R>,
) -> Mat8<R> {
    let (a, b, c) = halves(params);
    let mut m = Mat8::identity(8);
    m.put(1, 4, -(a.clone() * p1.clone()));
    m.put(1, 5, -(a.clone() * p2.clone()));
    m.put(1, 6, a * q1.clone());
    m.put(1, 8, theta);
    m.put(2, 6, -(b.clone() * p2.clone()));
    m.put(2, 7, b * p1.clone());
    m.put(2, 8, phi);
    m.put(3, 5, c * q1.clone());
    m.put(3, 8, psi);
    m.put(4, 8, q1);
    m.put(6, 8, p1);
    m.put(7, 8, p2);
    m
}

/// Section `δ(r)` for the two-dimensional orbits.
pub fn section_2d<R: Real>(r: R, params: &ExtensionParams<R>) -> Mat8<R> {
    let (a, _, c) = halves(params);
    let mut m = Mat8::identity(8);
    m.put(1, 7, a * r.clone());
    m.put(3, 4, -(c * r.clone()));
    m.put(5, 8, r);
    m
}

/// Solves `δ(r₁, s₂)·g = h(C, D, E, A, B)·δ(G, F)` and checks it by exact multiplication.
pub fn solve_master_4d<R: Real>(
    g: &GroupElement<R>,
    r1: &R,
    s2: &R,
    params: &ExtensionParams<R>,
) -> Result<MasterSolution<R>> {
    let (al, be, ga) = (params.alpha.clone(), params.beta.clone(), params.gamma.clone());
    let h = R::half();
    let [q1, q2] = g.q.clone();
    let [p1, p2] = g.p.clone();
    let sol = MasterSolution {
        a: p1.clone(),
        b: q2.clone(),
        g: r1.clone() + q1.clone(),
        f: s2.clone() + p2.clone(),
        c: g.theta.clone() - al.clone() * q2.clone() * s2.clone()
            + al.clone() * p1.clone() * r1.clone()
            + h.clone() * al.clone() * q1.clone() * p1.clone()
            - h.clone() * al * q2.clone() * p2.clone(),
        d: g.phi.clone() - be.clone() * p1.clone() * s2.clone() - h.clone() * be * p1 * p2,
        e: g.psi.clone() + ga.clone() * q2.clone() * r1.clone() + h * ga * q1 * q2,
    };
    let lhs = &section_4d(r1.clone(), s2.clone(), params) * &to_matrix(g, params);
    let rhs = &abelian_subgroup_matrix(
        sol.c.clone(),
        sol.d.clone(),
        sol.e.clone(),
        sol.a.clone(),
        sol.b.clone(),
        params,
    ) * &section_4d(sol.g.clone(), sol.f.clone(), params);
    check(&lhs, &rhs)?;
    Ok(sol)
}

/// Solves `δ(r)·g = h(D, E, F, A, B, C)·δ(G)` and checks it by exact multiplication.
pub fn solve_master_2d<R: Real>(g: &GroupElement<R>, r: &R, params: &ExtensionParams<R>) -> Result<MasterSolution<R>> {
    let (al, ga) = (params.alpha.clone(), params.gamma.clone());
    let h = R::half();
    let [q1, q2] = g.q.clone();
    let [p1, p2] = g.p.clone();
    let sol = MasterSolution {
        a: p1,
        b: p2.clone(),
        c: q1.clone(),
        g: q2.clone() + r.clone(),
        d: g.theta.clone() + al.clone() * p2.clone() * r.clone() + h.clone() * al * p2 * q2.clone(),
        e: g.phi.clone(),
        f: g.psi.clone() - ga.clone() * q1.clone() * r.clone() - h * ga * q1 * q2,
    };
    let lhs = &section_2d(r.clone(), params) * &to_matrix(g, params);
    let hm = nonabelian_subgroup_matrix(
        [
            sol.d.clone(),
            sol.e.clone(),
            sol.f.clone(),
            sol.a.clone(),
            sol.b.clone(),
            sol.c.clone(),
        ],
        params,
    );
    let rhs = &hm * &section_2d(sol.g.clone(), params);
    check(&lhs, &rhs)?;
    Ok(sol)
}

fn check<R: Real>(lhs: &Mat8<R>, rhs: &Mat8<R>) -> Result<()> {
    if lhs == rhs {
        return Ok(());
    }
    let bad: Vec<String> = (1..=8)
        .flat_map(|i| (1..=8).map(move |j| (i, j)))
        .filter(|&(i, j)| lhs.at(i, j) != rhs.at(i, j))
        .map(|(i, j)| format!("({i},{j})"))
        .collect();
    Err(Error::FactorizationMismatch(format!(
        "entries differ at {}",
        bad.join(" ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn el(c: [i64; 7]) -> GroupElement<Rational> {
        GroupElement::from_coords(c.map(|x| rat(x, 1)))
    }

    #[test]
    fn four_dim_examples() {
        let p = ExtensionParams::new(rat(2, 1), rat(3, 1), rat(5, 1)).unwrap();
        let z = rat(0, 1);
        let s = solve_master_4d(&el([0, 0, 0, 1, 0, 0, 0]), &z, &z, &p).unwrap();
        assert_eq!(s.g, rat(1, 1));
        for v in [&s.a, &s.b, &s.c, &s.d, &s.e, &s.f] {
            assert_eq!(v, &z);
        }
        let s = solve_master_4d(&GroupElement::identity(), &rat(3, 1), &rat(-2, 1), &p).unwrap();
        assert_eq!((s.g, s.f, s.c), (rat(3, 1), rat(-2, 1), z));
        let s = solve_master_4d(&el([1, -2, 3, 4, -5, 6, 7]), &rat(1, 3), &rat(-7, 2), &p);
        assert!(s.is_ok());
    }

    #[test]
    fn two_dim_examples() {
        let p = ExtensionParams::new(rat(1, 2), rat(3, 1), rat(4, 7)).unwrap();
        let z = rat(0, 1);
        let s = solve_master_2d(&el([0, 0, 0, 0, 1, 0, 0]), &z, &p).unwrap();
        assert_eq!(s.g, rat(1, 1));
        assert_eq!((s.d, s.f), (z.clone(), z.clone()));
        let s = solve_master_2d(&GroupElement::identity(), &rat(5, 3), &p).unwrap();
        assert_eq!(s.g, rat(5, 3));
        assert!(solve_master_2d(&el([1, -2, 3, 4, -5, 6, 7]), &rat(-9, 4), &p).is_ok());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Mat8::<Rational>::identity(8);
        let mut b = a.clone();
        b.put(1, 8, rat(1, 1));
        assert!(matches!(check(&a, &b), Err(Error::FactorizationMismatch(m)) if m.contains("(1,8)")));
    }
}
