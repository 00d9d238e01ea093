//! Sublattices of `Z^n` and their cosets, kept in canonical HNF form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::hnf::{column_echelon, hnf, pivot_rows};
use super::matrix::{is_zero_vec, vec_sub, IntMatrix, IntVec};
use super::snf::snf;
use crate::error::{Error, Result};

/// A sublattice of `Z^n` stored by its column HNF basis.
///
/// Since the basis is canonical, derived equality is lattice equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sublattice {
    ambient: usize,
    basis: IntMatrix,
}

impl Sublattice {
    /// The lattice spanned by the columns of `generators`.
    pub fn span(generators: &IntMatrix) -> Self {
        let (basis, _) = hnf(generators);
        Sublattice { ambient: generators.rows(), basis }
    }

    pub fn zero(n: usize) -> Self {
        Sublattice { ambient: n, basis: IntMatrix::zeros(n, 0) }
    }

    pub fn full(n: usize) -> Self {
        Sublattice { ambient: n, basis: IntMatrix::identity(n) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.cols() == 0
    }

    /// Canonical representative of `v` modulo the lattice.
    ///
    /// Walking the pivots top to bottom, the pivot coordinate is brought into
    /// `[0, pivot)`; later columns vanish above their pivot, so earlier
    /// coordinates are not disturbed.
    pub fn reduce(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(v.len(), self.ambient, "vector dimension mismatch");
        let mut w = v.to_vec();
        for (k, &r) in pivot_rows(&self.basis).iter().enumerate() {
            let q = w[r].div_floor(&self.basis[(r, k)]);
            if q.is_zero() {
                continue;
            }
            for (i, wi) in w.iter_mut().enumerate().skip(r) {
                *wi -= &q * &self.basis[(i, k)];
            }
        }
        w
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn is_sublattice_of(&self, other: &Sublattice) -> bool {
        self.ambient == other.ambient && self.basis.columns().iter().all(|c| other.contains(c))
    }

    /// Image under a linear map `m` (square, `n x n`).
    pub fn image(&self, m: &IntMatrix) -> Sublattice {
        Sublattice::span(&(m * &self.basis))
    }

    /// Smallest saturated sublattice containing `self`, i.e. `span_Q(self) ∩ Z^n`.
    ///
    /// Computed as the integer kernel of the integer kernel of the transposed
    /// basis: the first kernel spans the rational orthogonal complement.
    pub fn saturation(&self) -> Sublattice {
        if self.is_zero() {
            return self.clone();
        }
        let perp = integer_kernel(&self.basis.transpose());
        integer_kernel(&perp.basis.transpose())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }
}

impl fmt::Debug for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Span{:?}", self.basis.columns())
    }
}

/// A coset `offset + lattice` with the offset reduced modulo the lattice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSublattice {
    offset: IntVec,
    lattice: Sublattice,
}

impl AffineSublattice {
    pub fn new(offset: IntVec, lattice: Sublattice) -> Self {
        let offset = lattice.reduce(&offset);
        AffineSublattice { offset, lattice }
    }

    pub fn offset(&self) -> &IntVec {
        &self.offset
    }

    pub fn lattice(&self) -> &Sublattice {
        &self.lattice
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.lattice.contains(&vec_sub(v, &self.offset))
    }

    /// Image under the linear map `m`.
    pub fn image(&self, m: &IntMatrix) -> AffineSublattice {
        AffineSublattice::new(m.mul_vec(&self.offset), self.lattice.image(m))
    }

    pub fn translate(&self, v: &[BigInt]) -> AffineSublattice {
        AffineSublattice::new(super::matrix::vec_add(&self.offset, v), self.lattice.clone())
    }
}

impl fmt::Debug for AffineSublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}", self.offset, self.lattice)
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub fn coset_contains(c: &AffineSublattice, v: &[BigInt]) -> Result<bool> {
    check_dim(c.lattice.ambient, v.len())?;
    Ok(c.contains(v))
}

pub fn coset_equal(a: &AffineSublattice, b: &AffineSublattice) -> Result<bool> {
    check_dim(a.lattice.ambient, b.lattice.ambient)?;
    Ok(a == b)
}

pub fn sublattice_equal(a: &Sublattice, b: &Sublattice) -> Result<bool> {
    check_dim(a.ambient, b.ambient)?;
    Ok(a == b)
}

/// `{x in Z^cols : a x = 0}`, always saturated.
pub fn integer_kernel(a: &IntMatrix) -> Sublattice {
    let e = column_echelon(a, true);
    Sublattice::span(&e.transform.cols_from(e.rank))
}

/// Some integer `x` with `a x = b`, or `None` if there is none.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<IntVec>> {
    check_dim(a.rows(), b.len())?;
    let s = snf(a);
    let c = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        match s.divisors.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = ci.div_rem(d);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
            _ => {
                if !ci.is_zero() {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(s.v.mul_vec(&y)))
}

/// Saturation as a free function.
pub fn saturation(s: &Sublattice) -> Sublattice {
    s.saturation()
}
