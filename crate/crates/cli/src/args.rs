use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pz_core::algebra::{parse_rational, Rational};
use pz_core::portrait::{RenderFormat, Window};
use pz_core::PZParams;

#[derive(Debug, Parser)]
#[command(name = "pz", version, about = "Analysis of the Polyanin-Zaitsev family of planar Lienard systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Polynomial family of the parameter set, as JSON.
    Classify(ParamArgs),
    /// Every stage of the transformation chain, as JSON.
    Transform(ParamArgs),
    /// Finite critical points and, optionally, the points at infinity.
    Critical {
        #[command(flatten)]
        params: ParamArgs,
        /// Also analyse the Poincare compactification.
        #[arg(long)]
        infinity: bool,
        /// Series truncation order for degenerate points.
        #[arg(long, default_value_t = 8)]
        truncation: usize,
    },
    /// Phase portrait as SVG or CSV.
    Portrait {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        plot: PlotArgs,
    },
    /// Residual table of the transformation chain.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Largest admissible residual.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        /// Sample points per stage.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Complete analysis of x' = y, y' = 5/2 b y - 3/2 b^2 x - c x^2.
    ExamplePz {
        #[arg(short = 'b', allow_hyphen_values = true, value_parser = rational)]
        b: Rational,
        #[arg(short = 'c', allow_hyphen_values = true, value_parser = rational)]
        c: Rational,
        /// Also write a portrait to this path.
        #[arg(long)]
        portrait: Option<PathBuf>,
        #[arg(long, default_value_t = 64)]
        seeds: usize,
    },
}

/// The five parameters, each an integer or `p/q`.
#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(short = 'a', allow_hyphen_values = true, value_parser = rational)]
    pub a: Rational,
    #[arg(short = 'b', allow_hyphen_values = true, value_parser = rational)]
    pub b: Rational,
    #[arg(short = 'c', allow_hyphen_values = true, value_parser = rational)]
    pub c: Rational,
    #[arg(short = 'm', allow_hyphen_values = true, value_parser = rational)]
    pub m: Rational,
    #[arg(short = 'k', allow_hyphen_values = true, value_parser = rational)]
    pub k: Rational,
}

impl ParamArgs {
    pub fn params(&self) -> PZParams {
        PZParams::new(self.a.clone(), self.b.clone(), self.c.clone(), self.m.clone(), self.k.clone())
    }
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// `xmin,xmax,ymin,ymax`
    #[arg(long, allow_hyphen_values = true, value_parser = window, default_value = "-4,4,-4,4")]
    pub window: Window,
    /// Approximate number of grid seeds.
    #[arg(long, default_value_t = 64)]
    pub seeds: usize,
    #[arg(long, value_parser = format, default_value = "svg")]
    pub format: RenderFormat,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn format(s: &str) -> Result<RenderFormat, String> {
    s.parse()
}

fn window(s: &str) -> Result<Window, String> {
    let v: Vec<f64> = s.split(',').map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{p}`: {e}"))).collect::<Result<_, _>>()?;
    let [xmin, xmax, ymin, ymax] = v[..] else {
        return Err("expected four comma-separated numbers".into());
    };
    if !(xmin < xmax && ymin < ymax) || v.iter().any(|x| !x.is_finite()) {
        return Err("window needs xmin < xmax and ymin < ymax".into());
    }
    Ok(Window { xmin, xmax, ymin, ymax })
}
