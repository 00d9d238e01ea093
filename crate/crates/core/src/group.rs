//! Split groups `H = T ⋊ H₀` in lattice coordinates.
//!
//! The translation lattice is always `Z^n` in its own basis. Euclidean
//! geometry enters only through the Gram form of that basis, and every point
//! group element is an integer matrix preserving it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{vec_add, vec_neg, IntMatrix, IntVec, RatMatrix};

pub const DEFAULT_MAX_CLOSURE: usize = 20_000;

/// Input description of a split group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub dim: usize,
    pub gram: RatMatrix,
    pub generators: Vec<IntMatrix>,
    /// Either empty or one name per generator.
    pub generator_names: Vec<String>,
    pub max_closure: usize,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, gram: RatMatrix, generators: Vec<IntMatrix>) -> Self {
        GroupSpec {
            name: name.into(),
            dim: gram.rows(),
            gram,
            generators,
            generator_names: Vec::new(),
            max_closure: DEFAULT_MAX_CLOSURE,
        }
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.generator_names = names.into_iter().map(Into::into).collect();
        self
    }

    pub fn with_max_closure(mut self, budget: usize) -> Self {
        self.max_closure = budget;
        self
    }
}

/// A finite point group, closed and indexed. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct PointGroup {
    elements: Vec<IntMatrix>,
    mult_table: Vec<usize>,
    inverse_table: Vec<usize>,
}

impl PointGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn matrix(&self, p: usize) -> &IntMatrix {
        &self.elements[p]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult_table[a * self.elements.len() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse_table[a]
    }

    /// `u a u⁻¹`
    pub fn conj(&self, u: usize, a: usize) -> usize {
        self.mul(self.mul(u, a), self.inv(u))
    }
}

/// `t^trans · point`, with `point` indexing the closed point group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isometry {
    pub trans: IntVec,
    pub point: usize,
}

impl Isometry {
    pub fn new(trans: IntVec, point: usize) -> Self {
        Isometry { trans, point }
    }

    pub fn is_spherical(&self) -> bool {
        self.trans.iter().all(|x| x.sign() == num_bigint::Sign::NoSign)
    }
}

/// A validated group with its closed point group.
#[derive(Clone, Debug)]
pub struct Group {
    spec: GroupSpec,
    points: PointGroup,
    generator_index: Vec<usize>,
}

fn is_reserved_name(name: &str) -> bool {
    name == "t"
        || name == "id"
        || (name.len() > 1 && name.starts_with('g') && name[1..].bytes().all(|b| b.is_ascii_digit()))
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn validate(spec: &GroupSpec) -> Result<()> {
    let n = spec.dim;
    if n == 0 {
        return Err(Error::InvalidSpec("dimension must be positive".into()));
    }
    if spec.gram.rows() != n || spec.gram.cols() != n {
        return Err(Error::InvalidSpec(format!("gram form must be {n}x{n}")));
    }
    if !spec.gram.is_positive_definite() {
        return Err(Error::GramNotPositiveDefinite);
    }
    for (index, m) in spec.generators.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(Error::InvalidSpec(format!("generator {index} must be {n}x{n}")));
        }
        let mr = m.to_rat();
        if &(&mr.transpose() * &spec.gram) * &mr != spec.gram {
            return Err(Error::NotOrthogonal { index });
        }
        if !m.det().abs().is_one() {
            return Err(Error::NotUnimodular { index });
        }
    }
    let names = &spec.generator_names;
    if !names.is_empty() {
        if names.len() != spec.generators.len() {
            return Err(Error::InvalidSpec("generator_names must name every generator".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) || is_reserved_name(name) {
                return Err(Error::InvalidSpec(format!("invalid generator name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidSpec(format!("duplicate generator name {name:?}")));
            }
        }
    }
    if spec.max_closure == 0 {
        return Err(Error::InvalidSpec("max_closure must be positive".into()));
    }
    Ok(())
}

/// Validates `spec` and closes its generators into a point group.
///
/// Elements are listed breadth-first from the identity: each element, in
/// discovery order, is multiplied on the right by the generators in the
/// order given, and unseen products are appended.
pub fn validate_and_close(spec: &GroupSpec) -> Result<PointGroup> {
    validate(spec)?;
    let n = spec.dim;
    let mut elements = vec![IntMatrix::identity(n)];
    let mut index: HashMap<IntMatrix, usize> = HashMap::from([(IntMatrix::identity(n), 0)]);
    let mut next = 0;
    while next < elements.len() {
        for g in &spec.generators {
            let y = &elements[next] * g;
            if index.contains_key(&y) {
                continue;
            }
            if elements.len() >= spec.max_closure {
                return Err(Error::ClosureBudget { budget: spec.max_closure });
            }
            index.insert(y.clone(), elements.len());
            elements.push(y);
        }
        next += 1;
    }

    let order = elements.len();
    let mut mult_table = Vec::with_capacity(order * order);
    for a in &elements {
        for b in &elements {
            // closure under right multiplication by generators gives a finite group
            mult_table.push(index[&(a * b)]);
        }
    }
    let inverse_table = (0..order)
        .map(|a| (0..order).find(|&b| mult_table[a * order + b] == 0).expect("finite closure has inverses"))
        .collect();
    Ok(PointGroup { elements, mult_table, inverse_table })
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        let points = validate_and_close(&spec)?;
        let generator_index = spec
            .generators
            .iter()
            .map(|g| points.elements.iter().position(|e| e == g).expect("generator in closure"))
            .collect();
        Ok(Group { spec, points, generator_index })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn dim(&self) -> usize {
        self.spec.dim
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.spec.gram
    }

    pub fn points(&self) -> &PointGroup {
        &self.points
    }

    pub fn order(&self) -> usize {
        self.points.order()
    }

    pub fn point_matrix(&self, p: usize) -> &IntMatrix {
        self.points.matrix(p)
    }

    /// Point-group index of each generator.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_index
    }

    pub fn generator_names(&self) -> &[String] {
        &self.spec.generator_names
    }

    /// Index of the named generator, if any.
    pub fn generator_by_name(&self, name: &str) -> Option<usize> {
        let pos = self.spec.generator_names.iter().position(|n| n == name)?;
        Some(self.generator_index[pos])
    }

    /// Checks that `h` has this group's dimension and a valid point index.
    pub fn check(&self, h: &Isometry) -> Result<()> {
        if h.trans.len() != self.dim() || h.point >= self.order() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn identity(&self) -> Isometry {
        Isometry::new(vec![BigInt::from(0); self.dim()], 0)
    }

    pub fn translation(&self, v: IntVec) -> Isometry {
        assert_eq!(v.len(), self.dim());
        Isometry::new(v, 0)
    }

    pub fn spherical(&self, p: usize) -> Isometry {
        Isometry::new(vec![BigInt::from(0); self.dim()], p)
    }

    /// Action of a point-group element on a lattice vector.
    pub fn apply(&self, p: usize, v: &[BigInt]) -> IntVec {
        self.points.matrix(p).mul_vec(v)
    }

    /// `(λ, p)(μ, q) = (λ + Pμ, pq)`
    pub fn multiply(&self, a: &Isometry, b: &Isometry) -> Isometry {
        Isometry::new(vec_add(&a.trans, &self.apply(a.point, &b.trans)), self.points.mul(a.point, b.point))
    }

    /// `(λ, p)⁻¹ = (−P⁻¹λ, p⁻¹)`
    pub fn inverse(&self, a: &Isometry) -> Isometry {
        let pinv = self.points.inv(a.point);
        Isometry::new(vec_neg(&self.apply(pinv, &a.trans)), pinv)
    }

    /// `k h k⁻¹`
    pub fn conjugate(&self, k: &Isometry, h: &Isometry) -> Isometry {
        self.multiply(&self.multiply(k, h), &self.inverse(k))
    }

    /// The spherical part `h₀` of `h = t^λ h₀`.
    pub fn linearize(&self, h: &Isometry) -> Isometry {
        self.spherical(h.point)
    }

    /// `P − Id` for the point element `p`.
    pub fn move_matrix(&self, p: usize) -> IntMatrix {
        self.points.matrix(p) - &IntMatrix::identity(self.dim())
    }

    /// `Id − P` for the point element `p`.
    pub fn fix_matrix(&self, p: usize) -> IntMatrix {
        &IntMatrix::identity(self.dim()) - self.points.matrix(p)
    }
}
