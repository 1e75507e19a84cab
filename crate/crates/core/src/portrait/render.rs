use std::fmt::Write;

use super::phase::{PortraitData, Window};
use crate::critical::Kind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    Svg,
    Csv,
}

impl std::str::FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "csv" => Ok(RenderFormat::Csv),
            _ => Err(format!("unknown format `{s}` (expected svg or csv)")),
        }
    }
}

pub fn render(data: &PortraitData, format: RenderFormat) -> Vec<u8> {
    match format {
        RenderFormat::Svg => svg(data).into_bytes(),
        RenderFormat::Csv => csv(data).into_bytes(),
    }
}

fn csv(data: &PortraitData) -> String {
    let mut out = String::from("trajectory_id,t,x,y\n");
    for (id, tr) in data.trajectories.iter().enumerate() {
        for (t, x, y) in &tr.samples {
            writeln!(out, "{id},{t},{x},{y}").expect("string write");
        }
    }
    out
}

const SIZE: f64 = 800.0;

fn colour(kind: Kind) -> &'static str {
    match kind.node_stability() {
        Some(true) => "#1f77b4",
        Some(false) => "#d62728",
        None if kind.is_saddle() => "#2ca02c",
        None => "#7f7f7f",
    }
}

fn svg(data: &PortraitData) -> String {
    let Window { xmin, xmax, ymin, ymax } = data.window;
    let sx = |x: f64| (x - xmin) / (xmax - xmin) * SIZE;
    let sy = |y: f64| (ymax - y) / (ymax - ymin) * SIZE;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#);
    let _ = writeln!(w, r#"<rect width="800" height="800" fill="white"/>"#);
    if (xmin..=xmax).contains(&0.0) {
        let _ = writeln!(w, r#"<line class="axis" x1="{0:.3}" y1="0" x2="{0:.3}" y2="800" stroke="black" stroke-width="1"/>"#, sx(0.0));
    }
    if (ymin..=ymax).contains(&0.0) {
        let _ = writeln!(w, r#"<line class="axis" x1="0" y1="{0:.3}" x2="800" y2="{0:.3}" stroke="black" stroke-width="1"/>"#, sy(0.0));
    }
    for tr in &data.trajectories {
        if tr.samples.len() < 2 {
            continue;
        }
        let pts: Vec<String> = tr.samples.iter().map(|&(_, x, y)| format!("{:.3},{:.3}", sx(x), sy(y))).collect();
        let _ = writeln!(w, r##"<polyline class="trajectory" fill="none" stroke="#555" stroke-width="0.8" points="{}"/>"##, pts.join(" "));
        // arrowhead at the middle sample, pointing along increasing time
        let mid = tr.samples.len() / 2;
        let (a, b) = match tr.direction {
            super::Direction::Forward => (tr.samples[mid - 1], tr.samples[mid]),
            super::Direction::Backward => (tr.samples[mid], tr.samples[mid - 1]),
        };
        let (x0, y0, x1, y1) = (sx(a.1), sy(a.2), sx(b.1), sy(b.2));
        let len = (x1 - x0).hypot(y1 - y0);
        if len > 0.0 {
            let (ux, uy) = ((x1 - x0) / len, (y1 - y0) / len);
            let p = |along: f64, side: f64| format!("{:.3},{:.3}", x1 + ux * along - uy * side, y1 + uy * along + ux * side);
            let _ = writeln!(w, r##"<polygon class="arrow" fill="#555" points="{} {} {}"/>"##, p(0.0, 0.0), p(-6.0, 3.0), p(-6.0, -3.0));
        }
    }
    for cp in &data.critical_points {
        let _ = writeln!(
            w,
            r#"<circle class="critical-point" data-kind="{}" cx="{:.3}" cy="{:.3}" r="5" fill="{}"/>"#,
            cp.kind,
            sx(cp.x),
            sy(cp.y),
            colour(cp.kind)
        );
    }
    let legend = [("attracting node", "#1f77b4"), ("repelling node", "#d62728"), ("saddle", "#2ca02c"), ("other", "#7f7f7f")];
    let _ = writeln!(w, r#"<g class="legend" font-family="sans-serif" font-size="12">"#);
    for (i, (label, fill)) in legend.iter().enumerate() {
        let y = 20.0 + 18.0 * i as f64;
        let _ = writeln!(
            w,
            r#"<rect x="10" y="{:.3}" width="10" height="10" fill="{fill}"/><text x="26" y="{:.3}">{label}</text>"#,
            y - 9.0,
            y
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::super::{Direction, Termination, Trajectory};
    use super::*;
    use crate::portrait::PortraitPoint;

    #[test]
    fn empty_plot() {
        let svg = String::from_utf8(render(&PortraitData::empty(Window::default()), RenderFormat::Svg)).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("class=\"axis\"").count(), 2);
        assert_eq!(svg.matches("critical-point").count(), 0);
    }

    #[test]
    fn csv_rows() {
        let mut data = PortraitData::empty(Window::default());
        data.trajectories.push(Trajectory {
            samples: vec![(0.0, 1.0, 0.0), (0.5, 0.1, -0.25), (1.0, 1e-20, 3.0)],
            seed: (1.0, 0.0),
            direction: Direction::Forward,
            terminated: Termination::TimeLimit,
        });
        data.critical_points.push(PortraitPoint { x: 0.0, y: 0.0, kind: Kind::HyperbolicSaddle });
        let csv = String::from_utf8(render(&data, RenderFormat::Csv)).unwrap();
        assert_eq!(csv, "trajectory_id,t,x,y\n0,0,1,0\n0,0.5,0.1,-0.25\n0,1,0.00000000000000000001,3\n");
        let svg = render(&data, RenderFormat::Svg);
        assert_eq!(svg, render(&data, RenderFormat::Svg));
        let svg = String::from_utf8(svg).unwrap();
        assert_eq!(svg.matches("class=\"critical-point\"").count(), 1);
        assert_eq!(svg.matches("class=\"arrow\"").count(), 1);
        assert!("pdf".parse::<RenderFormat>().is_err());
    }
}
