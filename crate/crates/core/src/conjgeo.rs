//! Mod-sets, move- and fix-sets, filling, conjugacy classes and their
//! components.
//!
//! For `h = t^λ h₀` the mod-set is `Mod(h) = (h − Id)L = λ + (h₀ − Id)L`, and
//! the conjugacy class of `h` is
//!
//! ```text
//! [h] = ⋃_{u ∈ H₀} t^{u(λ + Mod(h₀))} u h₀ u⁻¹
//! ```
//!
//! Each term of that union is a component. Different `u` may give the same
//! component, so components are canonicalized and deduplicated by value.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::group::{Group, Isometry};
use crate::linalg::{integer_kernel, snf, AffineSublattice, RatMatrix, RatVec, Sublattice};
use crate::oracle::Ball;

/// `offset + span(basis)` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSet {
    pub offset: RatVec,
    pub basis: RatMatrix,
}

impl MoveSet {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// One translate-family `t^{coset} point` inside a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub point: usize,
    pub coset: AffineSublattice,
}

impl Component {
    pub fn contains(&self, h: &Isometry) -> bool {
        h.point == self.point && self.coset.contains(&h.trans)
    }

    /// Members whose translation lies in the ball.
    pub fn members_in_ball(&self, ball: &Ball, dim: usize) -> impl Iterator<Item = Isometry> + '_ {
        ball.points(dim).filter(|v| self.coset.contains(v)).map(|v| Isometry::new(v, self.point))
    }
}

/// The conjugacy class of `representative` as a finite union of components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDescription {
    pub representative: Isometry,
    /// Distinct, sorted by point index then canonical offset.
    pub components: Vec<Component>,
}

impl ClassDescription {
    pub fn contains(&self, h: &Isometry) -> bool {
        self.components.iter().any(|c| c.contains(h))
    }

    /// Class members whose translation lies in the ball.
    pub fn members_in_ball(&self, ball: &Ball) -> BTreeSet<Isometry> {
        let dim = self.representative.trans.len();
        self.components.iter().flat_map(|c| c.members_in_ball(ball, dim)).collect()
    }

    /// True when every component is a single element.
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|c| c.coset.lattice().is_zero())
    }
}

/// `Mod(h₀) = (h₀ − Id)L` for a point element.
pub fn mod_lattice(g: &Group, p: usize) -> Sublattice {
    Sublattice::span(&g.move_matrix(p))
}

/// `Mod(h) = λ + Mod(h₀)`
pub fn mod_set(g: &Group, h: &Isometry) -> AffineSublattice {
    AffineSublattice::new(h.trans.clone(), mod_lattice(g, h.point))
}

/// `Mov(h) = λ + Im(h₀ − Id)` with a rational basis of the linear part.
pub fn mov_set(g: &Group, h: &Isometry) -> MoveSet {
    MoveSet {
        offset: h.trans.iter().cloned().map(BigRational::from_integer).collect(),
        basis: g.move_matrix(h.point).to_rat().column_space_basis(),
    }
}

/// Rational basis of `Fix(h₀) = Ker(h₀ − Id)`.
pub fn fix_set(g: &Group, p: usize) -> RatMatrix {
    g.move_matrix(p).to_rat().kernel_basis()
}

/// `Fix(h₀) ∩ L`, always saturated.
pub fn fix_lattice(g: &Group, p: usize) -> Sublattice {
    integer_kernel(&g.move_matrix(p))
}

/// Whether `h` fills its move-set, `Mod(h) = Mov(h) ∩ L`.
///
/// Decided from `h₀` alone: the quotient `L / Mod(h₀)` must be torsion-free,
/// i.e. every nonzero Smith divisor of `h₀ − Id` is 1.
pub fn filling_check(g: &Group, h: &Isometry) -> bool {
    snf(&g.move_matrix(h.point)).divisors.iter().all(|d| d.is_zero() || d.is_one())
}

/// Second route for [`filling_check`]: compare `Mod(h₀)` with its saturation.
pub fn filling_by_saturation(g: &Group, h: &Isometry) -> bool {
    let m = mod_lattice(g, h.point);
    m.saturation() == m
}

/// `{u h₀ u⁻¹ : u ∈ H₀}` in increasing index order.
pub fn spherical_class(g: &Group, p: usize) -> Vec<usize> {
    let pts = g.points();
    (0..pts.order()).map(|u| pts.conj(u, p)).collect::<BTreeSet<_>>().into_iter().collect()
}

/// The component `u Base(h) u⁻¹ = t^{u(λ + Mod(h₀))} u h₀ u⁻¹`.
pub fn conjugate_component(g: &Group, h: &Isometry, u: usize) -> Component {
    let base = mod_set(g, h);
    Component { point: g.points().conj(u, h.point), coset: base.image(g.point_matrix(u)) }
}

pub fn conjugacy_class(g: &Group, h: &Isometry) -> ClassDescription {
    let components: BTreeSet<Component> = (0..g.order()).map(|u| conjugate_component(g, h, u)).collect();
    ClassDescription { representative: h.clone(), components: components.into_iter().collect() }
}

pub fn components(g: &Group, h: &Isometry) -> Vec<Component> {
    conjugacy_class(g, h).components
}

pub fn component_count(g: &Group, h: &Isometry) -> usize {
    components(g, h).len()
}

/// The `u ∈ H₀` with `u Base(h) u⁻¹ = Base(h)`: those centralizing `h₀` with
/// `(Id − u)λ ∈ Mod(h₀)`.
pub fn component_stabilizer(g: &Group, h: &Isometry) -> Vec<usize> {
    let pts = g.points();
    let modl = mod_lattice(g, h.point);
    (0..pts.order())
        .filter(|&u| pts.conj(u, h.point) == h.point)
        .filter(|&u| {
            let moved: Vec<BigInt> = g.fix_matrix(u).mul_vec(&h.trans);
            modl.contains(&moved)
        })
        .collect()
}
