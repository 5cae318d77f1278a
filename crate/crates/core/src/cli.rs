//! Command-line front end. Each subcommand reads exact JSON, calls the
//! library and prints one JSON document on stdout. Exit codes: 0 ok,
//! 2 rejected (a hypothesis fails), 1 error (bad input).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::huff::{emit_rds, generate_points, huff_search, HuffInstance};
use crate::io::{
    certificate_file, huff_point_json, parse_point_list, parse_set_file, quad_json, read_file,
    set_json, transform_json,
};
use crate::rds::{
    grid_search_rational_sets, invert_set, is_rational_set, normalize_set, GridSearch, Verdict,
};
use crate::surface::{
    build_surface, general_type_certificate, hypersurface_nd, hypersurface_vars, CertificateOutcome,
};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "distsurf", version, about = "Rational distance sets and distance surfaces")]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Check that all pairwise distances are rational.
    Verify { file: PathBuf },
    /// Move two anchor points to (0,0) and (1,0).
    Normalize {
        file: PathBuf,
        #[arg(long, value_parser = parse_anchors)]
        anchors: (usize, usize),
    },
    /// Invert the set about one of its points.
    Invert {
        file: PathBuf,
        #[arg(long)]
        center: usize,
        #[arg(long, value_parser = parse_exact)]
        radius: Rational,
    },
    /// Search Huff's x-axis points and optionally generate more.
    Huff {
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_exact, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        height: u32,
        #[arg(long)]
        generate: Option<usize>,
    },
    /// Build the distance surface of a point set.
    Surface {
        file: PathBuf,
        /// Write the canonical renderings to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the general-type certificate.
    Certify { file: PathBuf },
    /// Grid search for rational distance sets.
    Search {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        height: u32,
        #[arg(long)]
        size: usize,
    },
    /// Build the distance hypersurface of points in n-space.
    Hypersurface {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
}

fn parse_exact(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s)
}

fn parse_anchors(s: &str) -> std::result::Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or("expected i,j")?;
    let i = i.parse().map_err(|_| format!("bad index {i:?}"))?;
    let j = j.parse().map_err(|_| format!("bad index {j:?}"))?;
    Ok((i, j))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Rejected,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Rejected => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    #[serde(skip)]
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult { status: Status::Ok, payload, diagnostics: Vec::new() }
    }

    fn error(err: &Error) -> Self {
        CommandResult {
            status: Status::Error,
            payload: json!({ "error": err.to_string() }),
            diagnostics: vec![err.to_string()],
        }
    }

    /// The stdout document.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn load_verified(file: &Path) -> Result<crate::rds::RationalDistanceSet> {
    parse_set_file(file)?.verify()
}

/// Dispatches a parsed request.
pub fn run(request: &CommandRequest) -> CommandResult {
    match dispatch(&request.command) {
        Ok(r) => r,
        Err(e) => CommandResult::error(&e),
    }
}

fn dispatch(command: &Command) -> Result<CommandResult> {
    Ok(match command {
        Command::Verify { file } => {
            let set = parse_set_file(file)?;
            let counterexample = match is_rational_set(set.points())? {
                Verdict::Rational => Value::Null,
                Verdict::Counterexample { i, j, dist2 } => {
                    json!({ "i": i, "j": j, "dist2": quad_json(&dist2) })
                }
            };
            CommandResult::ok(json!({
                "size": set.len(),
                "k": set.k(),
                "rational": counterexample.is_null(),
                "counterexample": counterexample,
            }))
        }
        Command::Normalize { file, anchors: (i, j) } => {
            let set = load_verified(file)?;
            let (out, t) = normalize_set(&set, *i, *j)?;
            CommandResult::ok(json!({
                "set": to_value(&set_json(out.points(), out.k())),
                "transform": to_value(&transform_json(&t)),
            }))
        }
        Command::Invert { file, center, radius } => {
            let set = load_verified(file)?;
            let out = invert_set(&set, *center, radius)?;
            CommandResult::ok(json!({ "set": to_value(&set_json(out.points(), out.k())) }))
        }
        Command::Huff { a, b, height, generate } => huff(a, b, *height, *generate)?,
        Command::Surface { file, out } => {
            let set = parse_set_file(file)?;
            let s = build_surface(set.points())?;
            let xs = ["x"];
            let ys = ["y"];
            let rendering = format!("affine: {}\nprojective: {}\n", s.affine(), s.projective());
            if let Some(path) = out {
                std::fs::write(path, &rendering)
                    .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
            }
            CommandResult::ok(json!({
                "m": s.m(),
                "k": s.k(),
                "projective_degree": s.projective_degree(),
                "affine": s.affine().to_string(),
                "projective": s.projective().to_string(),
                "P": s.p().to_mpoly(&xs, 0).to_string(),
                "Q": s.q().to_mpoly(&ys, 0).to_string(),
            }))
        }
        Command::Certify { file } => {
            let bytes = read_file(file)?;
            let set = parse_set_file(file)?;
            match general_type_certificate(set.points())? {
                CertificateOutcome::Issued(c) => {
                    CommandResult::ok(to_value(&certificate_file(bytes.as_bytes(), &set, c)))
                }
                CertificateOutcome::Rejected(r) => CommandResult {
                    status: Status::Rejected,
                    payload: json!({ "reason": r.to_string(), "detail": r.detail() }),
                    diagnostics: vec![r.detail()],
                },
            }
        }
        Command::Search { k, height, size } => {
            let sets = grid_search_rational_sets(GridSearch {
                k: *k,
                height_bound: *height,
                target_size: *size,
            })?;
            let sets: Vec<Value> = sets.iter().map(|s| to_value(&set_json(s.points(), s.k()))).collect();
            CommandResult::ok(json!({ "count": sets.len(), "sets": sets }))
        }
        Command::Hypersurface { file, dim } => {
            let text = read_file(file)?;
            let points = parse_point_list(&text, &file.display().to_string(), *dim)?;
            let f = hypersurface_nd(&points)?;
            CommandResult::ok(json!({
                "dim": dim,
                "vars": hypersurface_vars(*dim),
                "degree": f.total_degree(),
                "polynomial": f.to_string(),
            }))
        }
    })
}

fn huff(a: &Rational, b: &Rational, height: u32, generate: Option<usize>) -> Result<CommandResult> {
    let inst = HuffInstance::new(a.clone(), b.clone())?;
    let found = huff_search(&inst, height)?;
    let mut payload = json!({
        "points": found.iter().map(huff_point_json).map(|p| to_value(&p)).collect::<Vec<_>>(),
    });
    let mut diagnostics = Vec::new();
    if let Some(n) = generate {
        match found.iter().find(|p| !p.is_degenerate()) {
            Some(seed) => {
                let g = generate_points(&inst, seed, n)?;
                let mut all = vec![seed.clone()];
                all.extend(g.points.iter().cloned());
                let rds = emit_rds(&inst, &all)?;
                payload["generation"] = json!({
                    "seed": to_value(&huff_point_json(seed)),
                    "points": g.points.iter().map(huff_point_json).map(|p| to_value(&p)).collect::<Vec<_>>(),
                    "multiples_computed": g.multiples_computed,
                    "torsion": g.torsion.as_ref().map(|t| json!({
                        "order": t.order,
                        "cycle": t.cycle.iter().map(crate::arith::format_rational).collect::<Vec<_>>(),
                    })),
                    "set": to_value(&set_json(rds.points(), rds.k())),
                });
            }
            None => {
                diagnostics.push("no non-degenerate seed within the height bound".to_string());
                payload["generation"] = Value::Null;
            }
        }
    }
    Ok(CommandResult { status: Status::Ok, payload, diagnostics })
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("RD_THREADS") else { return Ok(()) };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::parse("RD_THREADS", format!("expected a positive integer, got {v:?}")))?;
    // a pool that is already built (repeated calls in one process) is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Full CLI behavior for `args` (program name included). Returns the exit
/// code after writing to the given streams.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let result = match CommandRequest::try_parse_from(args) {
        Ok(req) => match configure_threads() {
            Ok(()) => run(&req),
            Err(e) => CommandResult::error(&e),
        },
        Err(e) if !e.use_stderr() => {
            // --help / --version
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let msg = e.to_string();
            CommandResult {
                status: Status::Error,
                payload: json!({ "error": msg.lines().next().unwrap_or("invalid arguments") }),
                diagnostics: vec![msg],
            }
        }
    };
    for d in &result.diagnostics {
        let _ = writeln!(stderr, "{}", d.trim_end());
    }
    let _ = stdout.write_all(result.render().as_bytes());
    result.status.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(std::iter::once("distsurf").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn unknown_flag_is_an_error() {
        let (code, out) = run_args(&["search", "--k", "1", "--height", "2", "--size", "3", "--bogus"]);
        assert_eq!(code, 1);
        assert!(out.contains("\"status\": \"error\""));
    }

    #[test]
    fn anchors_parse() {
        assert_eq!(parse_anchors("0,3"), Ok((0, 3)));
        assert!(parse_anchors("0;3").is_err());
    }

    #[test]
    fn huff_with_negative_parameter() {
        let (code, out) = run_args(&["huff", "--a", "-1", "--b", "2", "--height", "3"]);
        assert_eq!(code, 0, "{out}");
    }
}
