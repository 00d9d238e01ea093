mod common;

use isoconj::catalog;
use isoconj::linalg::{int_vec, vec_add, IntMatrix};
use isoconj::{Error, Group, GroupSpec, Isometry};
use num_traits::{One, Signed};

#[test]
fn point_matrices_preserve_the_gram_form() {
    for g in common::all_groups() {
        let gram = g.gram();
        for p in 0..g.order() {
            let m = g.point_matrix(p).to_rat();
            assert_eq!(&(&m.transpose() * gram) * &m, *gram, "{} element {p}", g.name());
            assert!(g.point_matrix(p).det().abs().is_one());
        }
        assert_eq!(g.point_matrix(0), &IntMatrix::identity(g.dim()));
    }
}

#[test]
fn point_tables_are_a_group() {
    for g in common::all_groups() {
        let pts = g.points();
        let n = pts.order();
        for a in 0..n {
            assert_eq!(pts.mul(a, pts.inv(a)), 0);
            assert_eq!(pts.mul(0, a), a);
            for b in 0..n {
                assert_eq!(pts.matrix(pts.mul(a, b)), &(pts.matrix(a) * pts.matrix(b)));
                for c in [0, n / 2, n - 1] {
                    assert_eq!(pts.mul(pts.mul(a, b), c), pts.mul(a, pts.mul(b, c)));
                }
            }
        }
    }
}

#[test]
fn isometry_group_axioms() {
    let mut rng = common::rng(7);
    for g in common::all_groups() {
        for _ in 0..30 {
            let a = common::random_element(&g, &mut rng, 3);
            let b = common::random_element(&g, &mut rng, 3);
            let c = common::random_element(&g, &mut rng, 3);
            assert_eq!(g.multiply(&g.multiply(&a, &b), &c), g.multiply(&a, &g.multiply(&b, &c)));
            assert_eq!(g.multiply(&a, &g.inverse(&a)), g.identity());
            assert_eq!(g.multiply(&g.inverse(&a), &a), g.identity());
            assert_eq!(g.multiply(&g.identity(), &a), a);
            // (λ, p)(μ, q) = (λ + Pμ, pq)
            let ab = g.multiply(&a, &b);
            assert_eq!(ab.trans, vec_add(&a.trans, &g.point_matrix(a.point).mul_vec(&b.trans)));
            assert_eq!(ab.point, g.points().mul(a.point, b.point));
            // t^λ h₀ decomposition
            let t = g.translation(a.trans.clone());
            assert_eq!(g.multiply(&t, &g.spherical(a.point)), a);
            assert_eq!(g.linearize(&a), g.spherical(a.point));
        }
    }
}

#[test]
fn conjugation_matches_the_xi_formula() {
    // k = t^η u, h = t^λ h₀  ⇒  k h k⁻¹ = t^{uλ + (Id − u h₀ u⁻¹)η} u h₀ u⁻¹
    let mut rng = common::rng(11);
    for g in common::all_groups() {
        for _ in 0..40 {
            let h = common::random_element(&g, &mut rng, 2);
            let k = common::random_element(&g, &mut rng, 3);
            let p2 = g.points().conj(k.point, h.point);
            let xi = vec_add(&g.apply(k.point, &h.trans), &g.fix_matrix(p2).mul_vec(&k.trans));
            assert_eq!(g.conjugate(&k, &h), Isometry::new(xi, p2));
        }
    }
}

#[test]
fn element_text_round_trips() {
    let mut rng = common::rng(3);
    for g in common::all_groups() {
        for _ in 0..25 {
            let h = common::random_element(&g, &mut rng, 5);
            let text = g.format_element(&h);
            assert_eq!(g.parse_element(&text).unwrap(), h, "{text}");
        }
        for (i, name) in g.generator_names().iter().enumerate() {
            let h = g.parse_element(name).unwrap();
            assert_eq!(h, g.spherical(g.generator_indices()[i]));
        }
    }
}

#[test]
fn parsed_products_use_the_group_law() {
    let g = catalog::group("cmm").unwrap();
    let a = g.parse_element("t[1,0]*s1*t[0,2]").unwrap();
    let b =
        g.multiply(&g.multiply(&g.translation(int_vec(&[1, 0])), &g.spherical(1)), &g.translation(int_vec(&[0, 2])));
    assert_eq!(a, b);
    assert_eq!(g.parse_element("g3").unwrap(), g.parse_element("s1 * s2").unwrap());
    assert!(matches!(g.parse_element("q"), Err(Error::UnknownGenerator(_))));
    assert!(matches!(g.parse_element("g4"), Err(Error::IndexOutOfRange { .. })));
    assert!(g.parse_element("t[1]").is_err());
    assert!(g.parse_element("t[1,0]*").is_err());
}

#[test]
fn specs_round_trip_through_json() {
    for key in catalog::keys() {
        let spec = catalog::get(key).unwrap().spec;
        let text = spec.to_json().to_string();
        let back = GroupSpec::from_json_str(&text).unwrap();
        let g1 = Group::new(spec).unwrap();
        let g2 = Group::new(back).unwrap();
        assert_eq!(g1.points().elements(), g2.points().elements(), "{key}");
        assert_eq!(g1.gram(), g2.gram());
        assert_eq!(g1.generator_names(), g2.generator_names());
    }
}

#[test]
fn invalid_specs_are_rejected() {
    let bad = [
        r#"{"name":"x","dim":2,"gram":[[1,0],[0,-1]],"generators":[]}"#,
        r#"{"name":"x","dim":2,"gram":[[1,0],[0,1]],"generators":[[[1,1],[0,1]]]}"#,
        r#"{"name":"x","dim":2,"gram":[[1,0],[0,1]],"generators":[[[2,0],[0,1]]]}"#,
        r#"{"name":"x","dim":2,"gram":[[1,0],[0,1]],"generators":[[[1,0,0],[0,1,0]]]}"#,
        r#"{"name":"x","dim":2,"gram":[[1.5,0],[0,1]],"generators":[]}"#,
        r#"{"name":"x","dim":2,"gram":[[1,0],[0,1]]"#,
    ];
    for text in bad {
        assert!(GroupSpec::from_json_str(text).and_then(Group::new).is_err(), "{text}");
    }
    let ok = r#"{"name":"x","dim":2,"gram":[["1/2",0],[0,"1/3"]],"generators":[[[-1,0],[0,1]]]}"#;
    assert_eq!(Group::new(GroupSpec::from_json_str(ok).unwrap()).unwrap().order(), 2);
}
