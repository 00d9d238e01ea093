//! Static SVG pictures of planar classes, mod-sets and coconjugation sets.
//!
//! Geometry is decided exactly in lattice coordinates; floats only appear
//! when coordinates are embedded and written out.

use std::fmt::Write as _;

use isoconj::coconj::CoconjDescription;
use isoconj::conjgeo::{conjugacy_class, fix_set, mod_set, mov_set};
use isoconj::linalg::{RatMatrix, RatVec};
use isoconj::{Group, Isometry};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

const SCALE: f64 = 40.0;
const MARGIN: f64 = 20.0;
const PALETTE: [&str; 12] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
    "#393b79", "#637939",
];

#[derive(Debug)]
pub struct RenderError(pub String);

impl std::fmt::Display for RenderError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for RenderError {}

/// Closed rectangle `[x0, x1] × [y0, y1]` in lattice coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl Window {
    pub fn is_empty(&self) -> bool {
        self.x0 > self.x1 || self.y0 > self.y1
    }

    fn lattice_points(&self) -> Vec<Vec<BigInt>> {
        if self.is_empty() {
            return Vec::new();
        }
        (self.y0..=self.y1)
            .flat_map(|y| (self.x0..=self.x1).map(move |x| vec![BigInt::from(x), BigInt::from(y)]))
            .collect()
    }

    /// The part of `offset + s·dir` inside the window, as two endpoints.
    fn clip(&self, offset: &[BigRational], dir: &[BigRational]) -> Option<[RatVec; 2]> {
        if self.is_empty() {
            return None;
        }
        let lo = [self.x0, self.y0].map(|x| BigRational::from_integer(x.into()));
        let hi = [self.x1, self.y1].map(|x| BigRational::from_integer(x.into()));
        let mut s_min: Option<BigRational> = None;
        let mut s_max: Option<BigRational> = None;
        for i in 0..2 {
            if dir[i].is_zero() {
                if offset[i] < lo[i] || offset[i] > hi[i] {
                    return None;
                }
                continue;
            }
            let a = (&lo[i] - &offset[i]) / &dir[i];
            let b = (&hi[i] - &offset[i]) / &dir[i];
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            s_min = Some(s_min.map_or(a.clone(), |m| m.max(a)));
            s_max = Some(s_max.map_or(b.clone(), |m| m.min(b)));
        }
        let (s0, s1) = (s_min?, s_max?);
        if s0 > s1 {
            return None;
        }
        let at = |s: &BigRational| -> RatVec { (0..2).map(|i| &offset[i] + s * &dir[i]).collect() };
        Some([at(&s0), at(&s1)])
    }
}

/// Upper-triangular `E` with `EᵀE = G`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub e: [[f64; 2]; 2],
}

impl Embedding {
    pub fn from_gram(g: &RatMatrix) -> Self {
        let v = |i: usize, j: usize| g[(i, j)].to_f64().expect("finite gram entry");
        let a = v(0, 0).sqrt();
        let b = v(0, 1) / a;
        let c = (v(1, 1) - b * b).sqrt();
        Embedding { e: [[a, b], [0.0, c]] }
    }

    /// Largest entry of `|EᵀE − G|` relative to the largest `|G_ij|`.
    pub fn residual(&self, g: &RatMatrix) -> f64 {
        let e = &self.e;
        let mut worst: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let gij = g[(i, j)].to_f64().unwrap();
                let ete = e[0][i] * e[0][j] + e[1][i] * e[1][j];
                worst = worst.max((ete - gij).abs());
                scale = scale.max(gij.abs());
            }
        }
        worst / scale
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (self.e[0][0] * x + self.e[0][1] * y, self.e[1][0] * x + self.e[1][1] * y)
    }
}

#[derive(Clone, Debug)]
pub enum Shape {
    Dot(f64),
    Triangle(f64),
}

#[derive(Clone, Debug)]
pub enum Primitive {
    Point { at: [f64; 2], shape: Shape },
    Line { from: [f64; 2], to: [f64; 2] },
}

#[derive(Clone, Debug)]
pub struct Layer {
    pub id: String,
    pub color: String,
    pub title: Option<String>,
    pub items: Vec<Primitive>,
}

impl Layer {
    fn new(id: impl Into<String>, color: &str) -> Self {
        Layer { id: id.into(), color: color.to_string(), title: None, items: Vec::new() }
    }
}

#[derive(Clone, Debug)]
pub struct RenderScene {
    pub embedding: Embedding,
    pub window: Window,
    pub layers: Vec<Layer>,
}

fn to_f64(v: &[BigInt]) -> [f64; 2] {
    [v[0].to_f64().unwrap(), v[1].to_f64().unwrap()]
}

fn rat_f64(v: &[BigRational]) -> [f64; 2] {
    [v[0].to_f64().unwrap(), v[1].to_f64().unwrap()]
}

fn int_to_rat(v: &[BigInt]) -> RatVec {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

fn planar(g: &Group) -> Result<(), RenderError> {
    if g.dim() != 2 {
        return Err(RenderError(format!("plotting needs a planar group, {} has dimension {}", g.name(), g.dim())));
    }
    Ok(())
}

fn lattice_layer(window: &Window) -> Layer {
    let mut layer = Layer::new("lattice", "#bbbbbb");
    layer.items =
        window.lattice_points().iter().map(|v| Primitive::Point { at: to_f64(v), shape: Shape::Dot(1.5) }).collect();
    layer
}

/// Affine subspace through `offset`: a line if one-dimensional, a dot if a point.
fn subspace_layer(id: &str, color: &str, window: &Window, offset: &[BigRational], basis: &RatMatrix) -> Layer {
    let mut layer = Layer::new(id, color);
    match basis.cols() {
        0 => {
            let inside = !window.is_empty()
                && (0..2).all(|i| {
                    let lo = BigRational::from_integer([window.x0, window.y0][i].into());
                    let hi = BigRational::from_integer([window.x1, window.y1][i].into());
                    offset[i] >= lo && offset[i] <= hi
                });
            if inside {
                layer.items.push(Primitive::Point { at: rat_f64(offset), shape: Shape::Dot(3.0) });
            }
        }
        1 => {
            if let Some([a, b]) = window.clip(offset, &basis.column(0)) {
                layer.items.push(Primitive::Line { from: rat_f64(&a), to: rat_f64(&b) });
            }
        }
        // the whole plane: nothing useful to draw
        _ => {}
    }
    layer
}

/// Class of `h`: lattice, mod-set, move and fix lines, one color per component.
pub fn class_scene(g: &Group, h: &Isometry, window: Window) -> Result<RenderScene, RenderError> {
    planar(g)?;
    let mut layers = vec![lattice_layer(&window)];

    let m = mod_set(g, h);
    let mut mods = Layer::new("mod-set", "#555555");
    mods.title = Some(format!("Mod({})", g.format_element(h)));
    mods.items = window
        .lattice_points()
        .into_iter()
        .filter(|v| m.contains(v))
        .map(|v| Primitive::Point { at: to_f64(&v), shape: Shape::Dot(4.0) })
        .collect();
    layers.push(mods);

    let mov = mov_set(g, h);
    layers.push(subspace_layer("move", "#000000", &window, &mov.offset, &mov.basis));
    let zero = vec![BigRational::zero(), BigRational::zero()];
    layers.push(subspace_layer("fix", "#999999", &window, &zero, &fix_set(g, h.point)));

    for (i, c) in conjugacy_class(g, h).components.iter().enumerate() {
        let mut layer = Layer::new(format!("component-{i}"), PALETTE[i % PALETTE.len()]);
        layer.title = Some(format!(
            "g{} + {}",
            c.point,
            c.coset.offset().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        ));
        layer.items = window
            .lattice_points()
            .into_iter()
            .filter(|v| c.coset.contains(v))
            .map(|v| Primitive::Point { at: to_f64(&v), shape: Shape::Triangle(5.0) })
            .collect();
        layers.push(layer);
    }
    Ok(RenderScene { embedding: Embedding::from_gram(g.gram()), window, layers })
}

/// Translation parts of a coconjugation set, one color per branch.
pub fn coconj_scene(g: &Group, d: &CoconjDescription, window: Window) -> Result<RenderScene, RenderError> {
    planar(g)?;
    let mut layers = vec![lattice_layer(&window)];
    for (i, b) in d.branches.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut layer = Layer::new(format!("branch-{i}"), color);
        layer.title = Some(format!("u = g{}", b.u));
        layer.items = window
            .lattice_points()
            .into_iter()
            .filter(|v| b.contains(&Isometry::new(v.clone(), b.u)))
            .map(|v| Primitive::Point { at: to_f64(&v), shape: Shape::Triangle(5.0) })
            .collect();
        layers.push(layer);
        if b.fix_lattice.rank() == 1 {
            let dir = int_to_rat(&b.fix_lattice.basis().column(0));
            let mut line = subspace_layer(
                &format!("branch-{i}-line"),
                color,
                &window,
                &int_to_rat(&b.eta),
                &RatMatrix::from_columns(2, &[dir]),
            );
            line.title = None;
            layers.push(line);
        }
    }
    Ok(RenderScene { embedding: Embedding::from_gram(g.gram()), window, layers })
}

pub fn render_class(g: &Group, h: &Isometry, window: Window) -> Result<String, RenderError> {
    Ok(class_scene(g, h, window)?.to_svg())
}

pub fn render_coconj(g: &Group, d: &CoconjDescription, window: Window) -> Result<String, RenderError> {
    Ok(coconj_scene(g, d, window)?.to_svg())
}

/// Fixed-precision coordinate, without negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000".to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl RenderScene {
    pub fn to_svg(&self) -> String {
        let corners: Vec<(f64, f64)> = if self.window.is_empty() {
            vec![(0.0, 0.0)]
        } else {
            let w = &self.window;
            [(w.x0, w.y0), (w.x1, w.y0), (w.x0, w.y1), (w.x1, w.y1)]
                .iter()
                .map(|&(x, y)| self.embedding.map(x as f64, y as f64))
                .collect()
        };
        let fold =
            |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| corners.iter().map(pick).fold(init, f);
        let min_x = fold(f64::min, f64::INFINITY, |c| c.0);
        let max_x = fold(f64::max, f64::NEG_INFINITY, |c| c.0);
        let min_y = fold(f64::min, f64::INFINITY, |c| c.1);
        let max_y = fold(f64::max, f64::NEG_INFINITY, |c| c.1);
        let width = (max_x - min_x) * SCALE + 2.0 * MARGIN;
        let height = (max_y - min_y) * SCALE + 2.0 * MARGIN;
        // y grows downward in SVG
        let px = |p: [f64; 2]| -> (String, String) {
            let (x, y) = self.embedding.map(p[0], p[1]);
            (num((x - min_x) * SCALE + MARGIN), num((max_y - y) * SCALE + MARGIN))
        };

        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = num(width),
            h = num(height)
        );
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        for layer in &self.layers {
            let _ = writeln!(out, r#"<g id="{}" fill="{c}" stroke="{c}">"#, escape(&layer.id), c = layer.color);
            if let Some(t) = &layer.title {
                let _ = writeln!(out, "<title>{}</title>", escape(t));
            }
            for item in &layer.items {
                match item {
                    Primitive::Point { at, shape: Shape::Dot(r) } => {
                        let (x, y) = px(*at);
                        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{}" stroke="none"/>"#, num(*r));
                    }
                    Primitive::Point { at, shape: Shape::Triangle(r) } => {
                        let (x, y) = self.embedding.map(at[0], at[1]);
                        let cx = (x - min_x) * SCALE + MARGIN;
                        let cy = (max_y - y) * SCALE + MARGIN;
                        let pts = [(cx, cy - r), (cx - r * 0.866, cy + r * 0.5), (cx + r * 0.866, cy + r * 0.5)]
                            .iter()
                            .map(|(a, b)| format!("{},{}", num(*a), num(*b)))
                            .collect::<Vec<_>>()
                            .join(" ");
                        let _ = writeln!(out, r#"<polygon points="{pts}" stroke="none"/>"#);
                    }
                    Primitive::Line { from, to } => {
                        let (x1, y1) = px(*from);
                        let (x2, y2) = px(*to);
                        let _ = writeln!(
                            out,
                            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke-width="1.5" fill="none"/>"#
                        );
                    }
                }
            }
            let _ = writeln!(out, "</g>");
        }
        let _ = writeln!(out, "</svg>");
        out
    }
}
