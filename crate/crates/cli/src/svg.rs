//! SVG rendering of a two-variable power.
//!
//! Drawing coordinates are integers: one lattice unit is `24 * L` viewBox
//! units, where `L` clears every denominator of the scaled vertices. Exact
//! coordinates are repeated in `data-*` attributes as `p/q` strings.

use std::fmt::Write;

use monopow::rational::{common_denominator, format_short};
use monopow::{Algorithm, ExactRational, ExponentVector, PowerContext};
use num_bigint::BigInt;

use crate::error::CliError;
use crate::parse::ParsedIdeal;

const PIXELS_PER_UNIT: i64 = 40;

struct Frame {
    x0: i64,
    y1: i64,
    unit: BigInt,
}

impl Frame {
    fn x(&self, x: &ExactRational) -> String {
        ((x - ExactRational::from_integer(self.x0.into()))
            * ExactRational::from_integer(self.unit.clone()))
        .to_integer()
        .to_string()
    }

    fn y(&self, y: &ExactRational) -> String {
        ((ExactRational::from_integer(self.y1.into()) - y)
            * ExactRational::from_integer(self.unit.clone()))
        .to_integer()
        .to_string()
    }

    fn xi(&self, x: i64) -> String {
        self.x(&ExactRational::from_integer(x.into()))
    }

    fn yi(&self, y: i64) -> String {
        self.y(&ExactRational::from_integer(y.into()))
    }

    fn length(&self, n: i64) -> BigInt {
        &self.unit * BigInt::from(n)
    }
}

fn exact_pair(x: &ExactRational, y: &ExactRational) -> String {
    format!("{},{}", format_short(x), format_short(y))
}

fn lattice_pair(p: &ExponentVector) -> String {
    format!("{},{}", p[0], p[1])
}

/// The SVG document for `I^r` with `I` in two variables.
pub fn render(
    parsed: &ParsedIdeal,
    ctx: &PowerContext,
    r: &ExactRational,
    trace: bool,
) -> Result<String, CliError> {
    let bounds = ctx.hyperrectangle(r)?;
    let system = ctx.hrep().scale(r)?;
    let run = ctx.run(r, Algorithm::Staircase, trace)?;

    let (lx, ly) = (bounds.lower[0] as i64, bounds.lower[1] as i64);
    let (ux, uy) = (bounds.upper[0] as i64, bounds.upper[1] as i64);
    let (x0, x1, y0, y1) = (lx - 1, ux + 1, ly - 1, uy + 1);

    let mut vertices: Vec<(ExactRational, ExactRational)> = ctx
        .hrep()
        .vertices()
        .iter()
        .map(|v| {
            (
                r * ExactRational::from_integer(v[0].into()),
                r * ExactRational::from_integer(v[1].into()),
            )
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    let denominators: Vec<ExactRational> = vertices
        .iter()
        .flat_map(|(x, y)| [x.clone(), y.clone()])
        .collect();
    let frame = Frame {
        x0,
        y1,
        unit: common_denominator(&denominators) * BigInt::from(24),
    };
    let width = frame.length(x1 - x0);
    let height = frame.length(y1 - y0);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{}" height="{}" data-exponent="{}">"#,
        (x1 - x0) * PIXELS_PER_UNIT,
        (y1 - y0) * PIXELS_PER_UNIT,
        format_short(r)
    );
    let _ = writeln!(
        s,
        "<title>{} to the power {}</title>",
        crate::parse::format_ideal(&parsed.vars, ctx.ideal()),
        format_short(r)
    );
    let stroke = &frame.unit / BigInt::from(12);
    let _ = writeln!(
        s,
        "<style>.polyhedron{{fill:#88c0d0;fill-opacity:0.5;stroke:#5e81ac;stroke-width:{stroke}}} \
.hype{{fill:none;stroke:#d08770;stroke-width:{stroke}}} \
.minimal{{fill:#b48ead}} .interior{{fill:#ebcb8b}} .exterior{{fill:none;stroke:#2e3440;stroke-width:{stroke}}} \
.path{{fill:none;stroke:#a3be8c;stroke-width:{stroke}}}</style>"
    );

    // Boundary of r * NP(I), closed off along the top and right of the view.
    let top = ExactRational::from_integer(y1.into());
    let right = ExactRational::from_integer(x1.into());
    let mut outline: Vec<(ExactRational, ExactRational)> = Vec::new();
    outline.push((vertices[0].0.clone(), top.clone()));
    outline.extend(vertices.iter().cloned());
    outline.push((right.clone(), vertices[vertices.len() - 1].1.clone()));
    outline.push((right, top));
    let points: Vec<String> = outline
        .iter()
        .map(|(x, y)| format!("{},{}", frame.x(x), frame.y(y)))
        .collect();
    let exact: Vec<String> = vertices.iter().map(|(x, y)| exact_pair(x, y)).collect();
    let _ = writeln!(
        s,
        r#"<polygon class="polyhedron" points="{}" data-vertices="{}"/>"#,
        points.join(" "),
        exact.join(" ")
    );

    let _ = writeln!(
        s,
        r#"<rect class="hype" x="{}" y="{}" width="{}" height="{}" data-lower="{lx},{ly}" data-upper="{ux},{uy}"/>"#,
        frame.xi(lx),
        frame.yi(uy),
        frame.length(ux - lx),
        frame.length(uy - ly)
    );

    let radius = &frame.unit / BigInt::from(8);
    for x in lx..=ux {
        for y in ly..=uy {
            let p = ExponentVector::new(vec![x as u64, y as u64]);
            let class = if run.ideal.generators().contains(&p) {
                "minimal"
            } else if system.contains_lattice(&[x, y]) {
                "interior"
            } else {
                "exterior"
            };
            let _ = writeln!(
                s,
                r#"<circle class="{class}" cx="{}" cy="{}" r="{radius}" data-point="{}"/>"#,
                frame.xi(x),
                frame.yi(y),
                lattice_pair(&p)
            );
        }
    }

    if let Some(t) = &run.trace {
        let pts: Vec<&ExponentVector> = t.visited.iter().map(|v| &v.point).collect();
        let coords: Vec<String> = pts
            .iter()
            .map(|p| format!("{},{}", frame.xi(p[0] as i64), frame.yi(p[1] as i64)))
            .collect();
        let exact: Vec<String> = pts.iter().map(|p| lattice_pair(p)).collect();
        let _ = writeln!(
            s,
            r#"<polyline class="path" points="{}" data-points="{}"/>"#,
            coords.join(" "),
            exact.join(" ")
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
