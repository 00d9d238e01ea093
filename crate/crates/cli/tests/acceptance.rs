//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use isoconj::catalog;
use isoconj::coconj::{centralizer, coconjugation_set, is_conjugate, left_translate, translation_compatible_part};
use isoconj::conjgeo::{
    component_count, component_stabilizer, conjugacy_class, filling_by_saturation, filling_check, mod_lattice, mod_set,
    mov_set, spherical_class,
};
use isoconj::linalg::{hnf, inf_norm, snf, solve_integer, IntMatrix, Sublattice};
use isoconj::oracle::{brute_coconj, check_class, compare, default_reach, Ball};
use isoconj::Group;
use isoconj_cli::sample;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

// pinned tolerances; every comparison is exact, zero discrepancies allowed
const CLASS_SAMPLES: usize = 20;
const CLASS_TRANSLATION_BOX: i64 = 2;
const ORACLE_RADIUS: u32 = 4;
const CLASS_TIME_LIMIT: Duration = Duration::from_secs(60);
const COCONJ_PAIRS: usize = 200;
const COSET_PAIRS: usize = 40;
const MATRICES: usize = 1000;
const MATRIX_ENTRY: i64 = 9;
const MATRIX_DIM: usize = 4;
const SOLVE_BOX: i64 = 2;
const LINALG_TIME_LIMIT: Duration = Duration::from_secs(30);

struct Outcome {
    passed: bool,
    detail: String,
}

fn all_groups() -> Vec<Group> {
    catalog::keys().iter().map(|k| catalog::group(k).unwrap()).collect()
}

fn planar_groups() -> Vec<Group> {
    all_groups().into_iter().filter(|g| g.dim() == 2).collect()
}

fn secs(d: Duration) -> String {
    format!("{:.1} s", d.as_secs_f64())
}

fn class_oracle() -> Outcome {
    let start = Instant::now();
    let window = Ball::new(ORACLE_RADIUS);
    let (mut checked, mut bad, mut compared) = (0, 0, 0);
    let groups = all_groups();
    for (i, g) in groups.iter().enumerate() {
        for h in sample::elements(g, 100 + i as u64, CLASS_SAMPLES, CLASS_TRANSLATION_BOX) {
            let check = check_class(g, &h, &conjugacy_class(g, &h), &window, default_reach(g, ORACLE_RADIUS, &h));
            checked += 1;
            compared += check.window.compared;
            bad += check.window.discrepancies() + check.unsound.len() + usize::from(!check.stable);
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        passed: bad == 0 && elapsed < CLASS_TIME_LIMIT && checked >= CLASS_SAMPLES * groups.len(),
        detail: format!(
            "{checked} elements over {} groups, {compared} members compared, {bad} discrepancies, {} (limit {})",
            groups.len(),
            secs(elapsed),
            secs(CLASS_TIME_LIMIT)
        ),
    }
}

fn coconj_oracle() -> Outcome {
    let ball = Ball::new(ORACLE_RADIUS);
    let (mut pairs, mut bad, mut conjugate) = (0, 0, 0);
    let groups = planar_groups();
    for (i, g) in groups.iter().enumerate() {
        for (h, h2) in sample::pairs(g, 200 + i as u64, COCONJ_PAIRS, CLASS_TRANSLATION_BOX) {
            let d = coconjugation_set(g, &h, &h2).unwrap();
            let report = compare(&d.members_in_ball(&ball), &brute_coconj(g, &h, &h2, &ball), &ball);
            let yes = is_conjugate(g, &h, &h2);
            pairs += 1;
            conjugate += usize::from(yes);
            bad += report.discrepancies();
            bad += usize::from(d.is_empty() != translation_compatible_part(g, &h, &h2).is_empty());
            bad += usize::from(yes == d.is_empty());
            bad += usize::from(yes != conjugacy_class(g, &h).contains(&h2));
        }
    }
    Outcome {
        passed: bad == 0 && pairs >= COCONJ_PAIRS * groups.len(),
        detail: format!(
            "{pairs} pairs over {} planar groups ({conjugate} conjugate), {bad} discrepancies",
            groups.len()
        ),
    }
}

fn cmm_facts() -> Outcome {
    let g = catalog::group("cmm").unwrap();
    let el = |s: &str| g.parse_element(s).unwrap();
    let mut failures = Vec::new();
    if !filling_check(&g, &el("s1")) || !filling_check(&g, &el("s2")) {
        failures.push("s1/s2 filling".to_string());
    }
    if filling_check(&g, &el("s1*s2")) {
        failures.push("s1s2 filling".to_string());
    }
    let two_l = Sublattice::span(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]));
    if mod_lattice(&g, el("s1*s2").point) != two_l {
        failures.push("Mod(s1s2)".to_string());
    }
    let mut translations = 0;
    for x in -3..=3i64 {
        for y in -3..=3i64 {
            let t = g.translation(vec![x.into(), y.into()]);
            let orbit: BTreeSet<_> = (0..g.order()).map(|u| g.apply(u, &t.trans)).collect();
            let class = conjugacy_class(&g, &t);
            let members = class.members_in_ball(&Ball::new(3));
            let ok = class.components.len() == orbit.len()
                && class.is_finite()
                && members.len() == orbit.len()
                && members.iter().all(|m| m.point == 0 && orbit.contains(&m.trans));
            if !ok {
                failures.push(format!("class of t[{x},{y}]"));
            }
            translations += 1;
        }
    }
    Outcome {
        passed: failures.is_empty(),
        detail: format!("filling and Mod facts plus {translations} translation classes, failures: {failures:?}"),
    }
}

fn component_laws() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for (i, g) in all_groups().iter().enumerate() {
        for h in sample::elements(g, 400 + i as u64, CLASS_SAMPLES, CLASS_TRANSLATION_BOX) {
            let n = component_count(g, &h);
            bad += usize::from(n < component_count(g, &g.linearize(&h)));
            bad += usize::from(g.order() != n * component_stabilizer(g, &h).len());
            checked += 1;
        }
        for p in 0..g.order() {
            bad += usize::from(component_count(g, &g.spherical(p)) != spherical_class(g, p).len());
            checked += 1;
        }
    }
    Outcome { passed: bad == 0, detail: format!("{checked} checks, {bad} violations") }
}

fn mod_set_laws() -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for (i, g) in all_groups().iter().enumerate() {
        for h in sample::elements(g, 500 + i as u64, CLASS_SAMPLES, CLASS_TRANSLATION_BOX) {
            let m = mod_set(g, &h);
            for u in 0..g.order() {
                let conj = g.conjugate(&g.spherical(u), &h);
                bad += usize::from(m.image(g.point_matrix(u)) != mod_set(g, &conj));
                checked += 1;
            }
            bad += usize::from(m != mod_set(g, &g.linearize(&h)).translate(&h.trans));
            let sat = m.lattice().saturation();
            bad += usize::from(!m.lattice().is_sublattice_of(&sat) || sat.rank() != mov_set(g, &h).dim());
            checked += 2;
        }
    }
    Outcome { passed: bad == 0, detail: format!("{checked} canonical-form comparisons, {bad} violations") }
}

fn coset_law() -> Outcome {
    let ball = Ball::new(ORACLE_RADIUS);
    let (mut checked, mut bad) = (0, 0);
    for (i, g) in planar_groups().iter().enumerate() {
        for (h, h2) in sample::pairs(g, 600 + i as u64, 2 * COSET_PAIRS, CLASS_TRANSLATION_BOX).into_iter().step_by(2) {
            let d = coconjugation_set(g, &h, &h2).unwrap();
            if d.is_empty() {
                bad += 1;
                continue;
            }
            let cent = centralizer(g, &h).unwrap();
            for b in &d.branches {
                let k = b.representative();
                // ‖γ‖ ≤ ‖U⁻¹‖(R + ‖η‖) for every k·t^γ v landing in the ball
                let reach =
                    g.point_matrix(g.points().inv(k.point)).max_row_sum() * (inf_norm(&k.trans) + ORACLE_RADIUS);
                let c = cent.members_in_ball(&Ball::new(reach.to_u32().unwrap()));
                let report = compare(&d.members_in_ball(&ball), &left_translate(g, &k, &c), &ball);
                bad += report.discrepancies();
                checked += 1;
            }
        }
    }
    Outcome { passed: bad == 0 && checked > 0, detail: format!("{checked} emitted k checked, {bad} discrepancies") }
}

fn filling_cross_check() -> Outcome {
    let (mut checked, mut bad, mut non_filling) = (0, 0, 0);
    for g in all_groups() {
        for p in 0..g.order() {
            let h = g.spherical(p);
            let a = filling_check(&g, &h);
            bad += usize::from(a != filling_by_saturation(&g, &h));
            non_filling += usize::from(!a);
            checked += 1;
        }
    }
    Outcome {
        passed: bad == 0,
        detail: format!("{checked} spherical elements ({non_filling} non-filling), {bad} disagreements"),
    }
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, sparse: bool) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if sparse && rng.gen_bool(0.6) { 0 } else { rng.gen_range(-MATRIX_ENTRY..=MATRIX_ENTRY) })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&data)
}

fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        match rng.gen_range(0..3) {
            0 if a != b => m.add_col_multiple(a, b, &BigInt::from(rng.gen_range(-3..=3))),
            1 => m.swap_cols(a, b),
            _ => m.negate_col(a),
        }
    }
    m
}

fn box_points(n: usize, r: i64) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (-r..=r).map(move |x| [v.clone(), vec![x.into()]].concat())).collect();
    }
    out
}

fn linalg_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = sample::rng(800);
    let mut bad = Vec::new();
    for i in 0..MATRICES {
        let (r, c) = (rng.gen_range(1..=MATRIX_DIM), rng.gen_range(1..=MATRIX_DIM));
        let a = random_matrix(&mut rng, r, c, i % 3 == 0);
        let s = snf(&a);
        let unimodular = |m: &IntMatrix| m.is_square() && m.det().abs().is_one();
        let chain =
            s.divisors.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) });
        if !unimodular(&s.u)
            || !unimodular(&s.v)
            || &(&s.u * &a) * &s.v != s.diagonal()
            || !chain
            || s.divisors.iter().any(Signed::is_negative)
        {
            bad.push(format!("snf {a}"));
        }
        let m = random_unimodular(&mut rng, c);
        if hnf(&a) != hnf(&(&a * &m)) {
            bad.push(format!("hnf {a}"));
        }
        let x0: Vec<BigInt> = sample::vector(&mut rng, c, SOLVE_BOX);
        let b = a.mul_vec(&x0);
        match solve_integer(&a, &b).unwrap() {
            Some(x) if a.mul_vec(&x) == b => {}
            _ => bad.push(format!("solve complete {a}")),
        }
        let b = sample::vector(&mut rng, r, MATRIX_ENTRY);
        match solve_integer(&a, &b).unwrap() {
            Some(x) if a.mul_vec(&x) != b => bad.push(format!("solve sound {a}")),
            None if box_points(c, SOLVE_BOX).iter().any(|x| a.mul_vec(x) == b) => bad.push(format!("solve missed {a}")),
            _ => {}
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        passed: bad.is_empty() && elapsed < LINALG_TIME_LIMIT,
        detail: format!(
            "{MATRICES} matrices up to {MATRIX_DIM}x{MATRIX_DIM}, entries in [-{MATRIX_ENTRY},{MATRIX_ENTRY}], {} failures {:?}, {} (limit {})",
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>(),
            secs(elapsed),
            secs(LINALG_TIME_LIMIT)
        ),
    }
}

fn cli_determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_isoconj");
    let dir = std::env::temp_dir().join(format!("isoconj-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("plot.svg");
    let svg_path = svg.to_str().unwrap().to_string();
    let one = |cmd: &str, e: &str| vec![cmd.to_string(), "--group".into(), "cmm".into(), "--element".into(), e.into()];
    let mut runs: Vec<Vec<String>> = vec![
        vec!["info".into()],
        vec!["info".into(), "--group".into(), "p6m".into(), "--json".into()],
        one("element", "s1*t[1,2]*s2"),
        one("modset", "t[1,0]*g3"),
        one("movset", "t[1,0]*s1"),
        one("fixset", "s1"),
        one("filling", "g3"),
        one("class", "t[1,0]*s1"),
        one("components", "t[1,0]*s1*s2"),
        one("stabilizer", "t[1,0]*g3"),
        one("centralizer", "t[2,1]*s1"),
        one("plot", "t[1,0]*s1"),
        ["coconj", "--group", "cmm", "--h", "t[1,0]*s1", "--h2", "t[0,1]*s1"].map(String::from).to_vec(),
        ["conjugate-p", "--group", "p4m", "--h", "t[1,0]*r", "--h2", "t[0,1]*r"].map(String::from).to_vec(),
        ["verify", "--group", "p3m1", "--samples", "5", "--seed", "3"].map(String::from).to_vec(),
        ["plot", "--group", "p6m", "--element", "t[1,0]*s", "--h2", "t[0,1]*s"].map(String::from).to_vec(),
        ["plot", "--group", "cmm", "--element", "g3", "--window", "-3,-2,3,2", "--out", &svg_path]
            .map(String::from)
            .to_vec(),
    ];
    let json_variants: Vec<Vec<String>> = runs
        .iter()
        .filter(|r| r[0] != "plot" && !r.contains(&"--json".to_string()) && r.len() > 1)
        .map(|r| [r.clone(), vec!["--json".into()]].concat())
        .collect();
    runs.extend(json_variants);

    let mut differing = Vec::new();
    let mut subcommands = BTreeSet::new();
    for args in &runs {
        let capture = || {
            let out = Command::new(exe).args(args).output().unwrap();
            let file = std::fs::read(&svg).unwrap_or_default();
            (out.status.code(), out.stdout, out.stderr, file)
        };
        let first = capture();
        let second = capture();
        if first != second || first.0 != Some(0) {
            differing.push(args.join(" "));
        }
        subcommands.insert(args[0].clone());
    }
    let _ = std::fs::remove_dir_all(&dir);
    Outcome {
        passed: differing.is_empty() && subcommands.len() == 14,
        detail: format!(
            "{} invocations over {} subcommands, {} differing or failing: {differing:?}",
            runs.len(),
            subcommands.len(),
            differing.len()
        ),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("closed-form classes equal the ball oracle", class_oracle),
        ("coconjugation sets equal the ball oracle", coconj_oracle),
        ("cmm reference facts", cmm_facts),
        ("component counting laws", component_laws),
        ("mod-set equivariance, shift and containment", mod_set_laws),
        ("coconjugation is a coset of the centralizer", coset_law),
        ("filling: Smith divisors agree with saturation", filling_cross_check),
        ("SNF/HNF/solver property suite", linalg_suite),
        ("CLI output is byte-identical across runs", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.passed);
        println!("criterion {} {}: {name} ({})", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
