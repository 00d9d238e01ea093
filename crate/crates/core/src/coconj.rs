//! Coconjugation sets `{k : k h k⁻¹ = h'}` and the conjugacy test.
//!
//! For `h = t^λ h₀`, `h' = t^{λ'} h₀'` and `k = t^η u`, `k h k⁻¹ = h'` holds
//! exactly when `u h₀ u⁻¹ = h₀'` and `λ' − uλ = (Id − h₀')η`. The `u` for
//! which that integer system is solvable form the translation-compatible
//! part, and each contributes the coset `t^{η_u + (Fix(h₀') ∩ L)} u`.
//!
//! Spherical coconjugation is an exhaustive scan of `H₀`; a smarter
//! conjugacy test in `H₀` would slot in at [`spherical_coconj`].

use std::collections::BTreeSet;

use num_traits::One;

use crate::conjgeo::fix_lattice;
use crate::error::Result;
use crate::group::{Group, Isometry};
use crate::linalg::{solve_integer, vec_sub, IntVec, Sublattice};
use crate::oracle::Ball;

/// One coset `t^{eta + fix_lattice} u` of a coconjugation set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoconjBranch {
    pub u: usize,
    /// Particular solution, reduced modulo `fix_lattice`.
    pub eta: IntVec,
    pub fix_lattice: Sublattice,
}

impl CoconjBranch {
    pub fn representative(&self) -> Isometry {
        Isometry::new(self.eta.clone(), self.u)
    }

    pub fn contains(&self, k: &Isometry) -> bool {
        k.point == self.u && self.fix_lattice.contains(&vec_sub(&k.trans, &self.eta))
    }
}

/// Disjoint union of branches with pairwise distinct `u`, sorted by `u`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoconjDescription {
    pub branches: Vec<CoconjBranch>,
}

impl CoconjDescription {
    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn contains(&self, k: &Isometry) -> bool {
        self.branches.iter().any(|b| b.contains(k))
    }

    /// Some element of the set, if it is nonempty.
    pub fn representative(&self) -> Option<Isometry> {
        self.branches.first().map(CoconjBranch::representative)
    }

    /// Elements whose translation lies in the ball.
    pub fn members_in_ball(&self, ball: &Ball) -> BTreeSet<Isometry> {
        let mut out = BTreeSet::new();
        for b in &self.branches {
            let dim = b.eta.len();
            for v in ball.points(dim) {
                if b.fix_lattice.contains(&vec_sub(&v, &b.eta)) {
                    out.insert(Isometry::new(v, b.u));
                }
            }
        }
        out
    }
}

/// `{u ∈ H₀ : u h₀ u⁻¹ = h₀'}` by scanning `H₀`.
pub fn spherical_coconj(g: &Group, p: usize, p2: usize) -> Vec<usize> {
    let pts = g.points();
    (0..pts.order()).filter(|&u| pts.conj(u, p) == p2).collect()
}

/// An integer `η` with `(Id − h₀')η = λ' − uλ`, if one exists.
///
/// When `Fix(h₀') = 0` the matrix is invertible over the rationals and the
/// unique solution is checked for integrality directly.
fn particular_solution(g: &Group, u: usize, h: &Isometry, h2: &Isometry) -> Option<IntVec> {
    let a = g.fix_matrix(h2.point);
    let rhs = vec_sub(&h2.trans, &g.apply(u, &h.trans));
    if let Some(inv) = a.to_rat().inverse() {
        let rhs_q: Vec<_> = rhs.iter().cloned().map(num_rational::BigRational::from_integer).collect();
        let eta = inv.mul_vec(&rhs_q);
        return if eta.iter().all(|x| x.denom().is_one()) {
            Some(eta.into_iter().map(|x| x.to_integer()).collect())
        } else {
            None
        };
    }
    solve_integer(&a, &rhs).expect("dimensions agree")
}

/// `{u ∈ coconj_{H₀}(h₀, h₀') : λ' − uλ ∈ Mod(h₀')}`
pub fn translation_compatible_part(g: &Group, h: &Isometry, h2: &Isometry) -> Vec<usize> {
    spherical_coconj(g, h.point, h2.point).into_iter().filter(|&u| particular_solution(g, u, h, h2).is_some()).collect()
}

/// All `k` with `k h k⁻¹ = h'`.
pub fn coconjugation_set(g: &Group, h: &Isometry, h2: &Isometry) -> Result<CoconjDescription> {
    g.check(h)?;
    g.check(h2)?;
    // the spherical parts must be conjugate in H₀
    let candidates = spherical_coconj(g, h.point, h2.point);
    if candidates.is_empty() {
        return Ok(CoconjDescription::default());
    }
    // some candidate must admit an integral translation; each that does is a branch
    let fix = fix_lattice(g, h2.point);
    let branches = candidates
        .into_iter()
        .filter_map(|u| {
            let eta = particular_solution(g, u, h, h2)?;
            Some(CoconjBranch { u, eta: fix.reduce(&eta), fix_lattice: fix.clone() })
        })
        .collect();
    Ok(CoconjDescription { branches })
}

pub fn is_conjugate(g: &Group, h: &Isometry, h2: &Isometry) -> bool {
    !translation_compatible_part(g, h, h2).is_empty()
}

/// `Cent(h) = coconj(h, h)`; always contains the identity.
pub fn centralizer(g: &Group, h: &Isometry) -> Result<CoconjDescription> {
    coconjugation_set(g, h, h)
}

/// Applies `k` on the left to every element of a ball-restricted set.
pub fn left_translate(g: &Group, k: &Isometry, set: &BTreeSet<Isometry>) -> BTreeSet<Isometry> {
    set.iter().map(|c| g.multiply(k, c)).collect()
}
