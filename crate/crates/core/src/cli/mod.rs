//! The `monochar` command line.
//!
//! Exit codes: 0 when every check passes, 2 when a verification fails,
//! 1 for usage and input errors.

mod args;
mod config;
mod json;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde_json::{json, Value};

pub use args::{Cli, Command, CommonArgs, Which};
pub use config::{overlay, parse_config};
pub use json::{render, round_floats, round_sig, SIG_DIGITS};

use crate::characters::{character, holonomy, winding_number, EXACT_TOL};
use crate::error::{Error, Result};
use crate::fields::{flux, string_potential, MonopoleConfig, Pole, QuadratureSpec, TriangleMode};
use crate::simplicial::{latitude_loop, shell_mesh, sphere_mesh, write_off, IntChain, MeshScheme, SimplicialComplex};
use crate::verifier;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

/// Resolved run settings.
#[derive(Debug, Clone)]
pub struct Settings {
    pub g: Option<Vec<f64>>,
    pub scheme: MeshScheme,
    pub level: u32,
    pub seed: u64,
    pub out: Option<std::path::PathBuf>,
    pub tol: Option<f64>,
    pub quad: QuadratureSpec,
    pub samples: Option<usize>,
    pub r_inner: f64,
    pub r_outer: f64,
}

fn parse_g_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::Argument(format!("bad charge '{t}'")))
        })
        .collect()
}

fn parse_triangle_mode(s: &str) -> Result<TriangleMode> {
    match s.trim() {
        "exact" | "exact_solid_angle" => Ok(TriangleMode::ExactSolidAngle),
        other => match other.strip_prefix("numeric") {
            Some("") => Ok(TriangleMode::Numeric(crate::fields::DEFAULT_NUMERIC_ORDER)),
            Some(rest) => rest
                .trim_start_matches([':', '='])
                .parse()
                .map(TriangleMode::Numeric)
                .map_err(|_| Error::Argument(format!("bad triangle mode '{s}'"))),
            None => Err(Error::Argument(format!("bad triangle mode '{s}'"))),
        },
    }
}

impl Settings {
    pub fn resolve(flags: CommonArgs) -> Result<Self> {
        let merged = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                overlay(flags, parse_config(&text)?)
            }
            None => flags,
        };
        let quad = QuadratureSpec::new(
            merged.edge_rule_order.unwrap_or(crate::fields::DEFAULT_EDGE_ORDER),
            match &merged.triangle_mode {
                Some(m) => parse_triangle_mode(m)?,
                None => TriangleMode::ExactSolidAngle,
            },
        )?;
        Ok(Self {
            g: merged.g.as_deref().map(parse_g_list).transpose()?,
            scheme: merged.scheme.as_deref().unwrap_or("octahedron").parse()?,
            level: merged.level.unwrap_or(2),
            seed: merged.seed.unwrap_or(0),
            out: merged.out,
            tol: merged.tol,
            quad,
            samples: merged.samples,
            r_inner: merged.r_inner.unwrap_or(1.0),
            r_outer: merged.r_outer.unwrap_or(2.0),
        })
    }

    fn single_g(&self, default: f64) -> Result<f64> {
        match self.g.as_deref() {
            None => Ok(default),
            Some([g]) => Ok(*g),
            Some(_) => Err(Error::Argument("this subcommand takes a single --g".into())),
        }
    }

    fn sphere(&self) -> Result<SimplicialComplex<f64>> {
        sphere_mesh(self.scheme, self.level)
    }
}

/// Resolves a loop name on `complex`.
pub fn named_loop(complex: &SimplicialComplex<f64>, name: &str) -> Result<IntChain> {
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k.trim(), Some(a.trim())),
        None => (name.trim(), None),
    };
    let index = |a: Option<&str>| -> Result<usize> {
        a.and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Argument(format!("loop '{name}' needs an index")))
    };
    match kind {
        "equator" => latitude_loop(complex, 0.0),
        "zero" => Ok(IntChain::zero(1)),
        "latitude" => {
            let z = a_float(arg, name)?;
            latitude_loop(complex, z)
        }
        "triangle" => {
            let t = index(arg)?;
            if t >= complex.count(2) {
                return Err(Error::Argument(format!("triangle {t} out of range")));
            }
            complex.boundary(&IntChain::simplex(2, t))
        }
        "star" => {
            let v = index(arg)?;
            if v >= complex.count(0) {
                return Err(Error::Argument(format!("vertex {v} out of range")));
            }
            let star = IntChain::from_terms(
                2,
                complex
                    .simplices(2)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.vertices().contains(&v))
                    .map(|(i, _)| (i, 1)),
            );
            complex.boundary(&star)
        }
        _ => Err(Error::Argument(format!("unknown loop '{name}'"))),
    }
}

fn a_float(arg: Option<&str>, name: &str) -> Result<f64> {
    arg.and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Argument(format!("loop '{name}' needs a height")))
}

/// Output of one subcommand: text for stdout, the document for `--out`,
/// and whether its checks passed.
struct Outcome {
    preamble: Option<String>,
    body: String,
    pass: bool,
}

fn json_outcome(v: Value, pass: bool) -> Outcome {
    Outcome {
        preamble: None,
        body: render(v),
        pass,
    }
}

fn report_outcome(r: &verifier::Report) -> Outcome {
    json_outcome(r.to_value(), r.passed())
}

fn dispatch(command: &Command, s: &Settings) -> Result<Outcome> {
    match command {
        Command::Mesh { shell } => {
            if *shell {
                let k = shell_mesh::<f64>(s.scheme, s.level, s.r_inner, s.r_outer)?;
                let counts: Vec<usize> = (0..=3).map(|d| k.count(d)).collect();
                return Ok(json_outcome(
                    json!({
                        "label": k.label().to_string(),
                        "counts": counts,
                        "euler_characteristic": k.euler_characteristic(),
                        "boundary_components": k.boundary_components()?.len(),
                    }),
                    true,
                ));
            }
            let k = s.sphere()?;
            Ok(Outcome {
                preamble: None,
                body: write_off(&k)?,
                pass: true,
            })
        }
        Command::Flux => {
            let g = s.single_g(0.5)?;
            let k = s.sphere()?;
            let cfg = MonopoleConfig::new(g);
            let phi = flux(&cfg, &k, &k.fundamental_cycle()?)?;
            let expected = 4.0 * std::f64::consts::PI * g;
            let err = (phi - expected).abs();
            let tol = s.tol.unwrap_or(EXACT_TOL);
            let mut out = json_outcome(
                json!({
                    "g": g,
                    "mesh": k.label().to_string(),
                    "phi": phi,
                    "expected": "4*pi*g",
                    "expected_value": expected,
                    "error": err,
                    "pass": err < tol,
                }),
                err < tol,
            );
            out.preamble = Some(format!("{}\n", round_sig(phi)));
            Ok(out)
        }
        Command::Holonomy { pole, loop_name } => {
            let g = s.single_g(0.5)?;
            let pole: Pole = pole.parse()?;
            let k = s.sphere()?;
            let cycle = named_loop(&k, loop_name)?;
            let cfg = MonopoleConfig::new(g);
            let a = string_potential(&cfg, pole);
            let h = holonomy(&a, &k, &cycle, &s.quad)?;
            let winding = if cycle.is_zero() { 0.0 } else { winding_number(&k, &cycle)? };
            Ok(json_outcome(
                json!({
                    "g": g,
                    "string": pole.to_string(),
                    "loop": loop_name,
                    "holonomy": h.value(),
                    "winding": winding,
                    "quadrature": s.quad,
                }),
                true,
            ))
        }
        Command::Character { loops, allow_defective } => {
            let g = s.single_g(0.5)?;
            let k = s.sphere()?;
            let cfg = MonopoleConfig::new(g);
            let chi = character(&cfg, &k, s.tol.unwrap_or(EXACT_TOL), *allow_defective)?;
            let mut values = Vec::new();
            for name in loops.split(',').map(str::trim) {
                let cycle = named_loop(&k, name)?;
                values.push(json!({"loop": name, "value": chi.evaluate(&cycle)?.value()}));
            }
            Ok(json_outcome(
                json!({"character": chi.summary(), "defective": chi.is_defective(), "values": values}),
                true,
            ))
        }
        Command::Verify { which } => {
            let k = s.sphere()?;
            let report = match which {
                Which::Uct => verifier::uct_report(&k)?,
                Which::Sequence5 => {
                    let mut r1 = verifier::sequence5_report(&k, 1)?;
                    let r2 = verifier::sequence5_report(&k, 2)?;
                    let mut merged = verifier::Report::new("sequence5");
                    merged.field("k1", r1.to_value()).field("k2", r2.to_value());
                    merged.claims.append(&mut r1.claims);
                    merged.claims.extend(r2.claims);
                    merged
                }
                Which::R2 => verifier::r2_report(&k, s.single_g(1.0)?, s.tol.unwrap_or(EXACT_TOL))?,
                Which::Retract => {
                    let shell = shell_mesh::<f64>(s.scheme, s.level, s.r_inner, s.r_outer)?;
                    verifier::retract_report(&k, &shell)?
                }
                Which::Cech => {
                    let windings = match &s.g {
                        None => (-2..=2).collect(),
                        Some(gs) => gs
                            .iter()
                            .map(|g| {
                                let n = 2.0 * g;
                                if n.fract() != 0.0 {
                                    Err(Error::Argument(format!("2g must be an integer, got {n}")))
                                } else {
                                    Ok(n as i64)
                                }
                            })
                            .collect::<Result<Vec<i64>>>()?,
                    };
                    verifier::cech_report(&k, &windings)?
                }
                Which::Relation => verifier::relation_report(
                    &k,
                    s.single_g(0.5)?,
                    s.seed,
                    s.samples.unwrap_or(100),
                    s.tol.unwrap_or(EXACT_TOL),
                )?,
                Which::Strings => verifier::strings_report(&k, s.single_g(1.0)?, &s.quad)?,
            };
            Ok(report_outcome(&report))
        }
        Command::Scan => {
            let gs = s.g.clone().unwrap_or_else(|| vec![0.3, 0.5, 0.7, 1.0, 1.5]);
            let k = s.sphere()?;
            let table = verifier::quantization_scan(
                &k,
                &gs,
                s.seed,
                s.samples.unwrap_or(50),
                s.tol.unwrap_or(EXACT_TOL),
            )?;
            Ok(report_outcome(&table.report()))
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Quantization { .. } | Error::Integrality { .. } | Error::Cocycle { .. } => EXIT_FAIL,
        _ => EXIT_ERROR,
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, A, W, E>(argv: I, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let settings = match Settings::resolve(cli.common) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let outcome = match dispatch(&cli.command, &settings) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code_for(&e);
        }
    };
    if let Some(p) = &outcome.preamble {
        let _ = stdout.write_all(p.as_bytes());
    }
    let written = match &settings.out {
        Some(path) => std::fs::write(path, outcome.body.as_bytes()),
        None => stdout.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_ERROR;
    }
    if outcome.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
