//! Built-in groups: the 13 symmorphic wallpaper groups and a few affine
//! Coxeter groups.
//!
//! Wallpaper groups are written in a primitive lattice basis. Where the
//! lattice is not rigid the Gram form uses generic integer parameters so no
//! accidental extra symmetry appears. Coxeter groups act on the coroot
//! lattice, where the Weyl group matrices are integral.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group::{Group, GroupSpec};
use crate::linalg::{IntMatrix, RatMatrix};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub spec: GroupSpec,
    pub notes: &'static str,
    pub expected_order: usize,
}

const KEYS: [&str; 17] = [
    "p1",
    "p2",
    "pm",
    "cm",
    "pmm",
    "cmm",
    "p4",
    "p4m",
    "p3",
    "p3m1",
    "p31m",
    "p6",
    "p6m",
    "coxeter_A2",
    "coxeter_C2",
    "coxeter_G2",
    "coxeter_A3",
];

pub const WALLPAPER: [&str; 13] =
    ["p1", "p2", "pm", "cm", "pmm", "cmm", "p4", "p4m", "p3", "p3m1", "p31m", "p6", "p6m"];

pub const COXETER: [&str; 4] = ["coxeter_A2", "coxeter_C2", "coxeter_G2", "coxeter_A3"];

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn gram(rows: &[&[i64]]) -> RatMatrix {
    m(rows).to_rat()
}

const OBLIQUE: &[&[i64]] = &[&[3, 1], &[1, 2]];
const RECTANGULAR: &[&[i64]] = &[&[2, 0], &[0, 3]];
// basis (2,1), (2,-1)
const CENTERED: &[&[i64]] = &[&[5, 3], &[3, 5]];
const SQUARE: &[&[i64]] = &[&[1, 0], &[0, 1]];
// basis at 120 degrees
const HEXAGONAL: &[&[i64]] = &[&[2, -1], &[-1, 2]];

const HALF_TURN: &[&[i64]] = &[&[-1, 0], &[0, -1]];
const QUARTER_TURN: &[&[i64]] = &[&[0, -1], &[1, 0]];
const THIRD_TURN: &[&[i64]] = &[&[0, -1], &[1, -1]];
const SIXTH_TURN: &[&[i64]] = &[&[1, -1], &[1, 0]];
const SWAP: &[&[i64]] = &[&[0, 1], &[1, 0]];
const NEG_SWAP: &[&[i64]] = &[&[0, -1], &[-1, 0]];
const FLIP_Y: &[&[i64]] = &[&[1, 0], &[0, -1]];
const FLIP_X: &[&[i64]] = &[&[-1, 0], &[0, 1]];

fn wallpaper(key: &str, g: &[&[i64]], gens: &[(&str, &[&[i64]])]) -> GroupSpec {
    GroupSpec::new(key, gram(g), gens.iter().map(|(_, x)| m(x)).collect()).with_names(gens.iter().map(|(n, _)| *n))
}

/// Weyl group on the coroot lattice with the given coroot Gram form.
///
/// `s_i` sends `α_j^∨` to `α_j^∨ − (2 G_ij / G_ii) α_i^∨`.
fn coxeter(key: &str, coroot_gram: &[&[i64]]) -> GroupSpec {
    let g = gram(coroot_gram);
    let n = g.rows();
    let two = BigRational::from_integer(BigInt::from(2));
    let gens: Vec<IntMatrix> = (0..n)
        .map(|i| {
            let mut s = IntMatrix::identity(n);
            for j in 0..n {
                let c = &two * &g[(i, j)] / &g[(i, i)];
                assert!(c.is_integer(), "coroot gram must have integral Cartan entries");
                s[(i, j)] -= c.to_integer();
            }
            s
        })
        .collect();
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    GroupSpec::new(key, g, gens).with_names(names)
}

pub fn keys() -> &'static [&'static str] {
    &KEYS
}

pub fn list() -> Vec<&'static str> {
    KEYS.to_vec()
}

pub fn get(key: &str) -> Result<CatalogEntry> {
    let (key, spec, notes, expected_order) = match key {
        "p1" => ("p1", wallpaper("p1", OBLIQUE, &[]), "oblique lattice, trivial point group", 1),
        "p2" => ("p2", wallpaper("p2", OBLIQUE, &[("r", HALF_TURN)]), "oblique lattice, point group {±Id}", 2),
        "pm" => ("pm", wallpaper("pm", RECTANGULAR, &[("s1", FLIP_Y)]), "rectangular lattice, one mirror", 2),
        "cm" => ("cm", wallpaper("cm", CENTERED, &[("s1", SWAP)]), "centered rectangular, basis (2,1),(2,-1)", 2),
        "pmm" => (
            "pmm",
            wallpaper("pmm", RECTANGULAR, &[("s1", FLIP_Y), ("s2", FLIP_X)]),
            "rectangular lattice, two perpendicular mirrors",
            4,
        ),
        "cmm" => (
            "cmm",
            wallpaper("cmm", CENTERED, &[("s1", SWAP), ("s2", NEG_SWAP)]),
            "centered rectangular, basis (2,1),(2,-1); Klein four point group of commuting reflections",
            4,
        ),
        "p4" => ("p4", wallpaper("p4", SQUARE, &[("r", QUARTER_TURN)]), "square lattice, quarter turn", 4),
        "p4m" => (
            "p4m",
            wallpaper("p4m", SQUARE, &[("r", QUARTER_TURN), ("s", FLIP_Y)]),
            "square lattice, dihedral point group of order 8",
            8,
        ),
        "p3" => ("p3", wallpaper("p3", HEXAGONAL, &[("r", THIRD_TURN)]), "hexagonal lattice, third turn", 3),
        "p3m1" => (
            "p3m1",
            wallpaper("p3m1", HEXAGONAL, &[("r", THIRD_TURN), ("s", NEG_SWAP)]),
            "hexagonal lattice, mirrors perpendicular to lattice vectors",
            6,
        ),
        "p31m" => (
            "p31m",
            wallpaper("p31m", HEXAGONAL, &[("r", THIRD_TURN), ("s", SWAP)]),
            "hexagonal lattice, mirrors along lattice vectors",
            6,
        ),
        "p6" => ("p6", wallpaper("p6", HEXAGONAL, &[("r", SIXTH_TURN)]), "hexagonal lattice, sixth turn", 6),
        "p6m" => (
            "p6m",
            wallpaper("p6m", HEXAGONAL, &[("r", SIXTH_TURN), ("s", SWAP)]),
            "hexagonal lattice, dihedral point group of order 12",
            12,
        ),
        "coxeter_A2" => {
            ("coxeter_A2", coxeter("coxeter_A2", &[&[2, -1], &[-1, 2]]), "affine A2: W(A2) on the coroot lattice", 6)
        }
        "coxeter_C2" => (
            "coxeter_C2",
            coxeter("coxeter_C2", &[&[2, -2], &[-2, 4]]),
            "affine C2: W(B2) on the coroot lattice, long root first",
            8,
        ),
        "coxeter_G2" => (
            "coxeter_G2",
            coxeter("coxeter_G2", &[&[6, -3], &[-3, 2]]),
            "affine G2: W(G2) on the coroot lattice, gram scaled by 3",
            12,
        ),
        "coxeter_A3" => (
            "coxeter_A3",
            coxeter("coxeter_A3", &[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            "affine A3: W(A3) on the coroot lattice",
            24,
        ),
        other => return Err(Error::UnknownGroup(other.to_string())),
    };
    Ok(CatalogEntry { key, spec, notes, expected_order })
}

/// Looks up and closes a catalog group.
pub fn group(key: &str) -> Result<Group> {
    Group::new(get(key)?.spec)
}
