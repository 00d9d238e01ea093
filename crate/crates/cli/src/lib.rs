//! Command-line front end for `isoconj`.
//!
//! [`run`] parses arguments, dispatches one subcommand and returns the exit
//! code: 0 on success, 1 on a domain error, 2 on a usage error.

pub mod render;
pub mod sample;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use isoconj::coconj::{centralizer, coconjugation_set, translation_compatible_part, CoconjDescription};
use isoconj::conjgeo::{
    component_count, component_stabilizer, conjugacy_class, filling_by_saturation, filling_check, fix_lattice, fix_set,
    mod_set, mov_set,
};
use isoconj::linalg::{snf, IntMatrix, RatMatrix, Sublattice};
use isoconj::oracle::{brute_coconj, check_class, compare, default_reach, Ball};
use isoconj::{catalog, Group, GroupSpec, Isometry};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use render::Window;

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "isoconj", version, about = "Conjugacy classes in split crystallographic groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Catalog key, e.g. cmm or coxeter_A2
    #[arg(long)]
    group: Option<String>,
    /// JSON group spec
    #[arg(long, value_name = "PATH")]
    group_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalSource {
    #[arg(long)]
    group: Option<String>,
    #[arg(long, value_name = "PATH")]
    group_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Output {
    /// Machine-readable output
    #[arg(long)]
    json: bool,
    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct One {
    #[command(flatten)]
    source: Source,
    /// Element, e.g. "t[1,0]*s1"
    #[arg(long)]
    element: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct Pair {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    h: String,
    #[arg(long)]
    h2: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a group, or list the catalog when no group is given
    Info {
        #[command(flatten)]
        source: OptionalSource,
        #[command(flatten)]
        output: Output,
    },
    /// Parse and normalize an element
    Element(One),
    /// Mod-set λ + (P − Id)L
    Modset(One),
    /// Move-set λ + Im(P − Id)
    Movset(One),
    /// Fix-space of the point part and its lattice
    Fixset(One),
    /// Whether the element fills its move-set
    Filling(One),
    /// Conjugacy class as a union of components
    Class(One),
    /// Component counts of the class and of its point part
    Components(One),
    /// Point elements fixing the base component
    Stabilizer(One),
    /// All k with k h k⁻¹ = h2
    Coconj(Pair),
    /// Centralizer of an element
    Centralizer(One),
    /// Decide whether two elements are conjugate
    #[command(name = "conjugate-p")]
    ConjugateP(Pair),
    /// Compare closed forms with brute-force enumeration on sampled elements
    Verify {
        #[command(flatten)]
        source: Source,
        /// Translation window and coconjugator ball radius
        #[arg(long, default_value_t = 4)]
        radius: u32,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// SVG picture of a class, or of a coconjugation set when --h2 is given
    Plot {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        element: String,
        #[arg(long)]
        h2: Option<String>,
        /// Lattice-coordinate rectangle x0,y0,x1,y1
        #[arg(long, default_value = "-4,-4,4,4", value_parser = parse_window, allow_hyphen_values = true)]
        window: Window,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn parse_window(s: &str) -> Result<Window, String> {
    let v: Vec<i64> =
        s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"))).collect::<Result<_, _>>()?;
    match v[..] {
        [x0, y0, x1, y1] => Ok(Window { x0, y0, x1, y1 }),
        _ => Err("expected four integers x0,y0,x1,y1".to_string()),
    }
}

type Failure = Box<dyn std::error::Error>;

fn load(group: &Option<String>, file: &Option<PathBuf>) -> Result<Group, Failure> {
    let spec = match (group, file) {
        (Some(key), _) => catalog::get(key)?.spec,
        (None, Some(path)) => GroupSpec::from_json_str(&std::fs::read_to_string(path)?)?,
        (None, None) => unreachable!("clap enforces a group source"),
    };
    Ok(Group::new(spec)?)
}

fn int(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn rat(x: &BigRational) -> Value {
    if x.is_integer() {
        int(&x.to_integer())
    } else {
        Value::String(x.to_string())
    }
}

fn vec_text<T: ToString>(v: &[T]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn int_rows(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

fn lattice_text(l: &Sublattice) -> String {
    let cols: Vec<String> = l.basis().columns().iter().map(|c| vec_text(c)).collect();
    format!("<{}>", cols.join(","))
}

fn lattice_json(l: &Sublattice) -> Value {
    Value::Array(l.basis().columns().iter().map(|c| ints(c)).collect())
}

fn rat_columns(m: &RatMatrix) -> Value {
    Value::Array(m.columns().iter().map(|c| Value::Array(c.iter().map(rat).collect())).collect())
}

fn elem_json(g: &Group, h: &Isometry) -> Value {
    json!({ "text": g.format_element(h), "translation": ints(&h.trans), "point": h.point })
}

fn branches(g: &Group, d: &CoconjDescription) -> (String, Value) {
    let mut text = String::new();
    for b in &d.branches {
        text += &format!(
            "u g{}  eta {}  fix {}  representative {}\n",
            b.u,
            vec_text(&b.eta),
            lattice_text(&b.fix_lattice),
            g.format_element(&b.representative())
        );
    }
    let json = d
        .branches
        .iter()
        .map(|b| {
            json!({
                "u": b.u,
                "eta": ints(&b.eta),
                "fix_lattice": lattice_json(&b.fix_lattice),
                "representative": g.format_element(&b.representative()),
            })
        })
        .collect();
    (text, Value::Array(json))
}

/// Text and JSON renderings of one command result.
struct Report {
    text: String,
    json: Value,
}

fn one(c: &One) -> Result<(Group, Isometry), Failure> {
    let g = load(&c.source.group, &c.source.group_file)?;
    let h = g.parse_element(&c.element)?;
    Ok((g, h))
}

fn pair(c: &Pair) -> Result<(Group, Isometry, Isometry), Failure> {
    let g = load(&c.source.group, &c.source.group_file)?;
    let h = g.parse_element(&c.h)?;
    let h2 = g.parse_element(&c.h2)?;
    Ok((g, h, h2))
}

fn info(source: &OptionalSource) -> Result<Report, Failure> {
    if source.group.is_none() && source.group_file.is_none() {
        let mut text = String::new();
        let mut list = Vec::new();
        for key in catalog::keys() {
            let e = catalog::get(key)?;
            text += &format!("{:<12} dim {}  order {:>2}  {}\n", key, e.spec.dim, e.expected_order, e.notes);
            list.push(json!({ "key": key, "dim": e.spec.dim, "order": e.expected_order, "notes": e.notes }));
        }
        return Ok(Report { text, json: json!({ "groups": list }) });
    }
    let g = load(&source.group, &source.group_file)?;
    let gram: Vec<Value> = g.gram().to_rows().iter().map(|r| Value::Array(r.iter().map(rat).collect())).collect();
    let gram_text: Vec<String> = g.gram().to_rows().iter().map(|r| vec_text(r)).collect();
    let mut text = format!(
        "group {}\ndimension {}\npoint group order {}\ngram [{}]\ngenerators\n",
        g.name(),
        g.dim(),
        g.order(),
        gram_text.join(",")
    );
    let mut gens = Vec::new();
    for (name, &idx) in g.generator_names().iter().zip(g.generator_indices()) {
        text += &format!("  {name} = g{idx} {}\n", g.point_matrix(idx));
        gens.push(json!({ "name": name, "point": idx }));
    }
    text += "points\n";
    let mut points = Vec::new();
    for p in 0..g.order() {
        text += &format!("  g{p} {}\n", g.point_matrix(p));
        points.push(int_rows(g.point_matrix(p)));
    }
    let json = json!({
        "group": g.name(),
        "dim": g.dim(),
        "order": g.order(),
        "gram": gram,
        "generators": gens,
        "points": points,
    });
    Ok(Report { text, json })
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    let report = match cmd {
        Command::Info { source, .. } => info(source)?,
        Command::Element(c) => {
            let (g, h) = one(c)?;
            let text = format!(
                "{}\ntranslation {}\npoint g{} {}\n",
                g.format_element(&h),
                vec_text(&h.trans),
                h.point,
                g.point_matrix(h.point)
            );
            let mut json = elem_json(&g, &h);
            json["matrix"] = int_rows(g.point_matrix(h.point));
            Report { text, json }
        }
        Command::Modset(c) => {
            let (g, h) = one(c)?;
            let m = mod_set(&g, &h);
            let mut text = format!("offset {}\nrank {}\n", vec_text(m.offset()), m.lattice().rank());
            for b in m.lattice().basis().columns() {
                text += &format!("basis {}\n", vec_text(&b));
            }
            let json = json!({
                "element": elem_json(&g, &h),
                "offset": ints(m.offset()),
                "basis": lattice_json(m.lattice()),
                "rank": m.lattice().rank(),
            });
            Report { text, json }
        }
        Command::Movset(c) => {
            let (g, h) = one(c)?;
            let m = mov_set(&g, &h);
            let mut text = format!("offset {}\ndim {}\n", vec_text(&m.offset), m.dim());
            for b in m.basis.columns() {
                text += &format!("basis {}\n", vec_text(&b));
            }
            let json = json!({
                "element": elem_json(&g, &h),
                "offset": Value::Array(m.offset.iter().map(rat).collect()),
                "basis": rat_columns(&m.basis),
                "dim": m.dim(),
            });
            Report { text, json }
        }
        Command::Fixset(c) => {
            let (g, h) = one(c)?;
            let basis = fix_set(&g, h.point);
            let lattice = fix_lattice(&g, h.point);
            let mut text = format!("point g{}\ndim {}\n", h.point, basis.cols());
            for b in basis.columns() {
                text += &format!("basis {}\n", vec_text(&b));
            }
            text += &format!("lattice {}\n", lattice_text(&lattice));
            let json = json!({
                "element": elem_json(&g, &h),
                "point": h.point,
                "basis": rat_columns(&basis),
                "lattice": lattice_json(&lattice),
                "dim": basis.cols(),
            });
            Report { text, json }
        }
        Command::Filling(c) => {
            let (g, h) = one(c)?;
            let fills = filling_check(&g, &h);
            if fills != filling_by_saturation(&g, &h) {
                return Err("filling tests disagree".into());
            }
            let divisors = snf(&g.move_matrix(h.point)).divisors;
            let json = json!({ "element": elem_json(&g, &h), "fills": fills, "smith_divisors": ints(&divisors) });
            Report { text: format!("{fills}\n"), json }
        }
        Command::Class(c) => {
            let (g, h) = one(c)?;
            let class = conjugacy_class(&g, &h);
            let mut text = format!("representative {}\ncomponents {}\n", g.format_element(&h), class.components.len());
            let mut comps = Vec::new();
            for comp in &class.components {
                let singleton = comp.coset.lattice().is_zero();
                text += &format!(
                    "  g{}  offset {}  lattice {}{}\n",
                    comp.point,
                    vec_text(comp.coset.offset()),
                    lattice_text(comp.coset.lattice()),
                    if singleton { "  singleton" } else { "" }
                );
                comps.push(json!({
                    "point": comp.point,
                    "offset": ints(comp.coset.offset()),
                    "lattice": lattice_json(comp.coset.lattice()),
                    "singleton": singleton,
                    "representative": g.format_element(&Isometry::new(comp.coset.offset().clone(), comp.point)),
                }));
            }
            let json = json!({
                "representative": elem_json(&g, &h),
                "components": comps,
                "finite": class.is_finite(),
            });
            Report { text, json }
        }
        Command::Components(c) => {
            let (g, h) = one(c)?;
            let n = component_count(&g, &h);
            let n0 = component_count(&g, &g.linearize(&h));
            let text = format!("components {n}\nlinear part components {n0}\n");
            let json = json!({ "element": elem_json(&g, &h), "components": n, "linear_part_components": n0 });
            Report { text, json }
        }
        Command::Stabilizer(c) => {
            let (g, h) = one(c)?;
            let s = component_stabilizer(&g, &h);
            let names: Vec<String> = s.iter().map(|u| format!("g{u}")).collect();
            let text = format!("{}\norder {}\nindex {}\n", names.join(" "), s.len(), g.order() / s.len());
            let json = json!({ "element": elem_json(&g, &h), "stabilizer": s, "index": g.order() / s.len() });
            Report { text, json }
        }
        Command::Coconj(c) => {
            let (g, h, h2) = pair(c)?;
            let d = coconjugation_set(&g, &h, &h2)?;
            let (mut text, bj) = branches(&g, &d);
            if d.is_empty() {
                text = "empty\n".to_string();
            }
            let json =
                json!({ "h": elem_json(&g, &h), "h2": elem_json(&g, &h2), "empty": d.is_empty(), "branches": bj });
            Report { text, json }
        }
        Command::Centralizer(c) => {
            let (g, h) = one(c)?;
            let d = centralizer(&g, &h)?;
            let (text, bj) = branches(&g, &d);
            Report { text, json: json!({ "element": elem_json(&g, &h), "branches": bj }) }
        }
        Command::ConjugateP(c) => {
            let (g, h, h2) = pair(c)?;
            let d = coconjugation_set(&g, &h, &h2)?;
            let compatible = translation_compatible_part(&g, &h, &h2);
            let (body, bj) = branches(&g, &d);
            let text = if d.is_empty() { "NOT CONJUGATE\n".to_string() } else { format!("CONJUGATE\n{body}") };
            let json = json!({
                "h": elem_json(&g, &h),
                "h2": elem_json(&g, &h2),
                "conjugate": !d.is_empty(),
                "translation_compatible": compatible,
                "branches": bj,
            });
            Report { text, json }
        }
        Command::Verify { source, radius, samples, seed, .. } => verify(source, *radius, *samples, *seed)?,
        Command::Plot { source, element, h2, window, .. } => {
            let g = load(&source.group, &source.group_file)?;
            let h = g.parse_element(element)?;
            let svg = match h2 {
                None => render::render_class(&g, &h, *window)?,
                Some(h2) => {
                    let h2 = g.parse_element(h2)?;
                    render::render_coconj(&g, &coconjugation_set(&g, &h, &h2)?, *window)?
                }
            };
            Report { text: svg, json: Value::Null }
        }
    };
    Ok(report)
}

fn verify(source: &Source, radius: u32, samples: usize, seed: u64) -> Result<Report, Failure> {
    let g = load(&source.group, &source.group_file)?;
    let ball = Ball::new(radius);
    let mut text = String::new();
    let mut classes = Vec::new();
    let mut passed = true;
    for h in sample::elements(&g, seed, samples, 2) {
        let check = check_class(&g, &h, &conjugacy_class(&g, &h), &ball, default_reach(&g, radius, &h));
        let ok = check.passed();
        passed &= ok;
        text += &format!(
            "class {} {} ({} compared, reach {})\n",
            g.format_element(&h),
            if ok { "ok" } else { "MISMATCH" },
            check.window.compared,
            check.reach
        );
        classes.push(json!({
            "element": g.format_element(&h),
            "passed": ok,
            "compared": check.window.compared,
            "discrepancies": check.window.discrepancies() + check.unsound.len(),
            "stable": check.stable,
        }));
    }
    let mut pairs = Vec::new();
    for (h, h2) in sample::pairs(&g, seed.wrapping_add(1), samples, 2) {
        let d = coconjugation_set(&g, &h, &h2)?;
        let report = compare(&d.members_in_ball(&ball), &brute_coconj(&g, &h, &h2, &ball), &ball);
        let ok = report.is_equal();
        passed &= ok;
        text += &format!(
            "coconj {} -> {} {} ({} compared)\n",
            g.format_element(&h),
            g.format_element(&h2),
            if ok { "ok" } else { "MISMATCH" },
            report.compared
        );
        pairs.push(json!({
            "h": g.format_element(&h),
            "h2": g.format_element(&h2),
            "passed": ok,
            "compared": report.compared,
            "discrepancies": report.discrepancies(),
        }));
    }
    text += &format!("{}\n", if passed { "all checks passed" } else { "verification FAILED" });
    let json = json!({
        "group": g.name(),
        "radius": radius,
        "seed": seed,
        "classes": classes,
        "pairs": pairs,
        "passed": passed,
    });
    if passed {
        Ok(Report { text, json })
    } else {
        Err(Box::new(VerifyFailed(text)))
    }
}

#[derive(Debug)]
struct VerifyFailed(String);

impl std::fmt::Display for VerifyFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}verification failed", self.0)
    }
}

impl std::error::Error for VerifyFailed {}

fn output_options(cmd: &Command) -> (bool, Option<&PathBuf>) {
    match cmd {
        Command::Info { output, .. } | Command::Verify { output, .. } => (output.json, output.out.as_ref()),
        Command::Element(c)
        | Command::Modset(c)
        | Command::Movset(c)
        | Command::Fixset(c)
        | Command::Filling(c)
        | Command::Class(c)
        | Command::Components(c)
        | Command::Stabilizer(c)
        | Command::Centralizer(c) => (c.output.json, c.output.out.as_ref()),
        Command::Coconj(c) | Command::ConjugateP(c) => (c.output.json, c.output.out.as_ref()),
        Command::Plot { out, .. } => (false, out.as_ref()),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Info { .. } => "info",
        Command::Element(_) => "element",
        Command::Modset(_) => "modset",
        Command::Movset(_) => "movset",
        Command::Fixset(_) => "fixset",
        Command::Filling(_) => "filling",
        Command::Class(_) => "class",
        Command::Components(_) => "components",
        Command::Stabilizer(_) => "stabilizer",
        Command::Coconj(_) => "coconj",
        Command::Centralizer(_) => "centralizer",
        Command::ConjugateP(_) => "conjugate-p",
        Command::Verify { .. } => "verify",
        Command::Plot { .. } => "plot",
    }
}

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let (as_json, path) = output_options(&cli.command);
    let report = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let body = if as_json {
        let mut j = match report.json {
            Value::Object(m) => m,
            other => {
                let mut m = serde_json::Map::new();
                m.insert("result".into(), other);
                m
            }
        };
        j.insert("schema".into(), json!(SCHEMA));
        j.insert("command".into(), json!(command_name(&cli.command)));
        format!("{}\n", serde_json::to_string_pretty(&Value::Object(j)).expect("serializable"))
    } else {
        report.text
    };
    let written = match path {
        Some(p) => std::fs::write(p, body.as_bytes()),
        None => out.write_all(body.as_bytes()),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
