//! Brute-force ground truth by scanning conjugators in a box.
//!
//! Nothing here uses mod-sets, normal forms or integer solving: conjugates
//! are produced with the group law alone, so the closed forms in
//! [`crate::conjgeo`] and [`crate::coconj`] can be checked against it.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::conjgeo::ClassDescription;
use crate::group::{Group, Isometry};
use crate::linalg::{inf_norm, IntVec};

/// The max-norm box `‖v‖∞ ≤ radius` in lattice coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ball {
    pub radius: u32,
}

impl Ball {
    pub fn new(radius: u32) -> Self {
        Ball { radius }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        inf_norm(v) <= BigInt::from(self.radius)
    }

    /// All lattice points of the box, in lexicographic order.
    pub fn points(&self, dim: usize) -> BoxPoints {
        let r = i64::from(self.radius);
        BoxPoints { r, cur: Some(vec![-r; dim]) }
    }
}

pub struct BoxPoints {
    r: i64,
    cur: Option<Vec<i64>>,
}

impl Iterator for BoxPoints {
    type Item = IntVec;

    fn next(&mut self) -> Option<IntVec> {
        let cur = self.cur.as_mut()?;
        let out = cur.iter().map(|&x| BigInt::from(x)).collect();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if cur[i] < self.r {
                cur[i] += 1;
                break;
            }
            cur[i] = -self.r;
        }
        Some(out)
    }
}

/// The group law on machine integers; entries met here are tiny.
struct SmallLaw<'a> {
    g: &'a Group,
    mats: Vec<Vec<i64>>,
}

type Small = (Vec<i64>, usize);

impl<'a> SmallLaw<'a> {
    fn new(g: &'a Group) -> Self {
        let mats = (0..g.order())
            .map(|p| g.point_matrix(p).entries().iter().map(|x| x.to_i64().expect("small point matrix")).collect())
            .collect();
        SmallLaw { g, mats }
    }

    fn apply(&self, p: usize, v: &[i64]) -> Vec<i64> {
        let n = v.len();
        let m = &self.mats[p];
        (0..n).map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum()).collect()
    }

    /// `(λ, p)(μ, q) = (λ + Pμ, pq)`
    fn mul(&self, a: &Small, b: &Small) -> Small {
        let pb = self.apply(a.1, &b.0);
        (a.0.iter().zip(&pb).map(|(x, y)| x + y).collect(), self.g.points().mul(a.1, b.1))
    }

    /// `(λ, p)⁻¹ = (−P⁻¹λ, p⁻¹)`
    fn inv(&self, a: &Small) -> Small {
        let pi = self.g.points().inv(a.1);
        (self.apply(pi, &a.0).into_iter().map(|x| -x).collect(), pi)
    }

    fn conjugate(&self, k: &Small, h: &Small) -> Small {
        self.mul(&self.mul(k, h), &self.inv(k))
    }
}

fn small(h: &Isometry) -> Small {
    (h.trans.iter().map(|x| x.to_i64().expect("small translation")).collect(), h.point)
}

fn big(h: Small) -> Isometry {
    Isometry::new(h.0.into_iter().map(BigInt::from).collect(), h.1)
}

/// Conjugators `t^η u` with `η` in the ball.
fn conjugators(g: &Group, ball: &Ball) -> Vec<Small> {
    let pts: Vec<Vec<i64>> = ball.points(g.dim()).map(|v| v.iter().map(|x| x.to_i64().unwrap()).collect()).collect();
    (0..g.order()).flat_map(|u| pts.iter().map(move |eta| (eta.clone(), u))).collect()
}

/// `{k h k⁻¹ : k = t^η u, ‖η‖∞ ≤ R}`
pub fn brute_class(g: &Group, h: &Isometry, ball: &Ball) -> BTreeSet<Isometry> {
    let law = SmallLaw::new(g);
    let h = small(h);
    let found: Vec<Small> = conjugators(g, ball).par_iter().map(|k| law.conjugate(k, &h)).collect();
    found.into_iter().map(big).collect()
}

/// `{k : k h k⁻¹ = h', ‖trans(k)‖∞ ≤ R}`
pub fn brute_coconj(g: &Group, h: &Isometry, h2: &Isometry, ball: &Ball) -> BTreeSet<Isometry> {
    let law = SmallLaw::new(g);
    let (h, h2) = (small(h), small(h2));
    let found: Vec<Small> = conjugators(g, ball).into_par_iter().filter(|k| law.conjugate(k, &h) == h2).collect();
    found.into_iter().map(big).collect()
}

/// Set comparison with witnesses for each discrepancy.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    /// In the closed form but not found by the oracle.
    pub only_closed_form: Vec<Isometry>,
    /// Found by the oracle but missing from the closed form.
    pub only_oracle: Vec<Isometry>,
    pub compared: usize,
}

impl Report {
    pub fn is_equal(&self) -> bool {
        self.only_closed_form.is_empty() && self.only_oracle.is_empty()
    }

    pub fn discrepancies(&self) -> usize {
        self.only_closed_form.len() + self.only_oracle.len()
    }
}

/// Compares a closed-form set, restricted to `ball` by translation, with an oracle set.
pub fn compare(closed_form: &BTreeSet<Isometry>, oracle: &BTreeSet<Isometry>, ball: &Ball) -> Report {
    let restricted: BTreeSet<&Isometry> = closed_form.iter().filter(|x| ball.contains(&x.trans)).collect();
    let oracle: BTreeSet<&Isometry> = oracle.iter().filter(|x| ball.contains(&x.trans)).collect();
    Report {
        only_closed_form: restricted.difference(&oracle).map(|x| (*x).clone()).collect(),
        only_oracle: oracle.difference(&restricted).map(|x| (*x).clone()).collect(),
        compared: restricted.union(&oracle).count(),
    }
}

/// Outcome of checking a class description against the oracle.
#[derive(Clone, Debug)]
pub struct ClassCheck {
    /// Members with translation in the window, closed form vs oracle.
    pub window: Report,
    /// Oracle conjugates with translation in twice the window that the description misses.
    pub unsound: Vec<Isometry>,
    /// Conjugator radius used for the oracle scan.
    pub reach: u32,
    /// Whether widening the conjugator box by two changed nothing inside the window.
    pub stable: bool,
}

impl ClassCheck {
    pub fn passed(&self) -> bool {
        self.window.is_equal() && self.unsound.is_empty() && self.stable
    }
}

/// Conjugator radius used to cover a translation window of radius `window`.
///
/// A conjugate `t^ξ u h₀ u⁻¹` arises from `η` with `(Id − u h₀ u⁻¹)η = ξ − uλ`.
/// The radius scales `window + max_u ‖uλ‖∞` by the largest `‖(Id − P)⁻¹‖∞`
/// over invertible `Id − P`. This is only a sizing rule; [`check_class`]
/// confirms coverage by widening the box.
pub fn default_reach(g: &Group, window: u32, h: &Isometry) -> u32 {
    let shift = (0..g.order()).map(|u| inf_norm(&g.apply(u, &h.trans))).max().unwrap_or_default();
    let scale = (0..g.order())
        .filter_map(|p| g.fix_matrix(p).to_rat().inverse())
        .map(|inv| {
            inv.to_rows().iter().map(|r| r.iter().map(|x| x.abs()).sum::<BigRational>()).max().unwrap_or_default()
        })
        .max()
        .unwrap_or_default()
        .max(BigRational::one());
    let bound = scale * BigRational::from_integer(shift + BigInt::from(window));
    bound.ceil().to_integer().to_u32().expect("small radius") + 1
}

/// Checks `desc` against conjugates of `h` from a conjugator box of radius
/// `reach`, comparing everything whose translation lies in `window`.
pub fn check_class(g: &Group, h: &Isometry, desc: &ClassDescription, window: &Ball, reach: u32) -> ClassCheck {
    let wide = Ball::new(reach + 2);
    let law = SmallLaw::new(g);
    let hs = small(h);
    let norm = |v: &[i64]| v.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as u32;
    // each conjugate with the smallest conjugator norm reaching it
    let found: HashMap<Small, u32> = conjugators(g, &wide)
        .par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Small, u32>, k| {
            let n = norm(&k.0);
            acc.entry(law.conjugate(k, &hs)).and_modify(|m| *m = (*m).min(n)).or_insert(n);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (x, n) in b {
                a.entry(x).and_modify(|m| *m = (*m).min(n)).or_insert(n);
            }
            a
        });
    let w = i64::from(window.radius);
    let within = |x: &Small, r: i64| x.0.iter().all(|c| c.abs() <= r);
    let unsound = found
        .keys()
        .filter(|x| within(x, 2 * w))
        .map(|x| big(x.clone()))
        .filter(|x| !desc.contains(x))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let at_reach: BTreeSet<Isometry> =
        found.iter().filter(|(x, &n)| n <= reach && within(x, w)).map(|(x, _)| big(x.clone())).collect();
    let at_wide = found.keys().filter(|x| within(x, w)).count();
    let report = compare(&desc.members_in_ball(window), &at_reach, window);
    ClassCheck { window: report, unsound, reach, stable: at_wide == at_reach.len() }
}
