mod common;

use std::collections::BTreeSet;

use isoconj::coconj::{centralizer, coconjugation_set, is_conjugate, left_translate, translation_compatible_part};
use isoconj::conjgeo::{component_stabilizer, conjugacy_class, mov_set};
use isoconj::linalg::{inf_norm, vec_add, vec_sub};
use isoconj::oracle::{brute_class, brute_coconj, compare, Ball};
use isoconj::{catalog, Group, Isometry};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Pairs `(h, h')`, every other one conjugate by construction.
fn pairs(g: &Group, seed: u64, count: usize) -> Vec<(Isometry, Isometry)> {
    let mut rng = common::rng(seed);
    (0..count)
        .map(|i| {
            let h = common::random_element(g, &mut rng, 2);
            let h2 = if i % 2 == 0 {
                let k = common::random_element(g, &mut rng, 1);
                g.conjugate(&k, &h)
            } else {
                common::random_element(g, &mut rng, 2)
            };
            (h, h2)
        })
        .collect()
}

#[test]
fn emitted_elements_conjugate_h_to_h2() {
    for g in common::all_groups() {
        for (h, h2) in pairs(&g, 1, 16) {
            let d = coconjugation_set(&g, &h, &h2).unwrap();
            let us: Vec<usize> = d.branches.iter().map(|b| b.u).collect();
            assert!(us.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(us, translation_compatible_part(&g, &h, &h2));
            for b in &d.branches {
                let rhs = vec_sub(&h2.trans, &g.apply(b.u, &h.trans));
                assert_eq!(g.fix_matrix(h2.point).mul_vec(&b.eta), rhs);
                for f in common::box_points(b.fix_lattice.rank(), 2) {
                    let shift = b.fix_lattice.basis().mul_vec(&f);
                    let k = Isometry::new(vec_add(&b.eta, &shift), b.u);
                    assert_eq!(g.conjugate(&k, &h), h2);
                }
            }
        }
    }
}

#[test]
fn description_matches_oracle_in_the_ball() {
    let ball = Ball::new(3);
    for g in common::all_groups() {
        let count = if g.dim() == 3 { 6 } else { 24 };
        for (h, h2) in pairs(&g, 2, count) {
            let d = coconjugation_set(&g, &h, &h2).unwrap();
            let report = compare(&d.members_in_ball(&ball), &brute_coconj(&g, &h, &h2, &ball), &ball);
            assert!(report.is_equal(), "{} {} {}: {report:?}", g.name(), g.format_element(&h), g.format_element(&h2));
        }
    }
}

#[test]
fn conjugacy_test_agrees_with_class_membership() {
    let mut seen = [false; 2];
    for g in common::all_groups() {
        for (h, h2) in pairs(&g, 3, 30) {
            let yes = is_conjugate(&g, &h, &h2);
            seen[yes as usize] = true;
            assert_eq!(yes, conjugacy_class(&g, &h).contains(&h2));
            assert_eq!(yes, !coconjugation_set(&g, &h, &h2).unwrap().is_empty());
            assert_eq!(yes, is_conjugate(&g, &h2, &h));
            if !brute_coconj(&g, &h, &h2, &Ball::new(1)).is_empty() {
                assert!(yes);
            }
        }
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn coconjugation_is_a_coset_of_the_centralizer() {
    let ball = Ball::new(3);
    for g in common::planar_groups() {
        for (h, h2) in pairs(&g, 4, 20) {
            let d = coconjugation_set(&g, &h, &h2).unwrap();
            for b in &d.branches {
                let k = b.representative();
                let inv_norm = g.point_matrix(g.points().inv(k.point)).max_row_sum();
                let reach = inv_norm * (inf_norm(&k.trans) + ball.radius);
                let cent = centralizer(&g, &h).unwrap().members_in_ball(&Ball::new(reach.to_u32().unwrap()));
                let shifted: BTreeSet<_> = left_translate(&g, &k, &cent);
                let report = compare(&d.members_in_ball(&ball), &shifted, &ball);
                assert!(report.is_equal(), "{report:?}");
            }
        }
    }
}

#[test]
fn centralizer_points_are_the_component_stabilizer() {
    for g in common::all_groups() {
        for (h, _) in pairs(&g, 5, 10) {
            let c = centralizer(&g, &h).unwrap();
            assert!(c.contains(&g.identity()));
            let us: Vec<usize> = c.branches.iter().map(|b| b.u).collect();
            assert_eq!(us, component_stabilizer(&g, &h));
        }
    }
}

#[test]
fn fix_lattice_is_gram_orthogonal_to_the_move_space() {
    for g in common::all_groups() {
        for (h, h2) in pairs(&g, 6, 10) {
            for b in coconjugation_set(&g, &h, &h2).unwrap().branches {
                let mov = mov_set(&g, &g.spherical(h2.point)).basis;
                for v in b.fix_lattice.basis().columns() {
                    let v: Vec<BigRational> = v.into_iter().map(BigRational::from_integer).collect();
                    let gv = g.gram().mul_vec(&v);
                    for m in mov.columns() {
                        assert!(gv.iter().zip(&m).map(|(a, b)| a * b).sum::<BigRational>().is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_is_monotone_in_the_radius() {
    let mut rng = common::rng(8);
    for g in common::planar_groups() {
        let h = common::random_element(&g, &mut rng, 2);
        let h2 = g.conjugate(&common::random_element(&g, &mut rng, 2), &h);
        let mut prev_class = BTreeSet::new();
        let mut prev_coconj = BTreeSet::new();
        for r in 0..4 {
            let class = brute_class(&g, &h, &Ball::new(r));
            let co = brute_coconj(&g, &h, &h2, &Ball::new(r));
            assert!(prev_class.is_subset(&class));
            assert!(prev_coconj.is_subset(&co));
            // point part of every conjugate is a spherical conjugate of h₀
            assert!(class.iter().all(|x| (0..g.order()).any(|u| g.points().conj(u, h.point) == x.point)));
            prev_class = class;
            prev_coconj = co;
        }
        // the conjugator used to build h2 lies in the radius-3 box
        assert!(!prev_coconj.is_empty());
    }
}

#[test]
fn cmm_examples() {
    let g = catalog::group("cmm").unwrap();
    let h = g.parse_element("t[1,0]*s1").unwrap();
    let h2 = g.parse_element("t[0,1]*s1").unwrap();
    let ball = Ball::new(3);
    let d = coconjugation_set(&g, &h, &h2).unwrap();
    assert_eq!(d.members_in_ball(&ball), brute_coconj(&g, &h, &h2, &ball));
    let s1 = g.parse_element("s1").unwrap();
    let t_s1 = g.parse_element("t[1,0]*s1").unwrap();
    assert!(!is_conjugate(&g, &s1, &t_s1));
    assert!(!is_conjugate(&g, &s1, &g.parse_element("s2").unwrap()));
    for r in 0..4 {
        assert!(brute_coconj(&g, &s1, &t_s1, &Ball::new(r)).is_empty());
    }
}
