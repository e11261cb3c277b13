//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage, parse and I/O errors, 2 on domain
//! errors such as an exterior fiber or a zero weight.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::builtins;
use crate::certificate::{self, Certificate, CertificateVerdict};
use crate::floer::{self, disc_classes, energy_levels, BFieldWeights, LocalSystem};
use crate::mirror::{self, SolveOptions};
use crate::novikov::Coefficient;
use crate::polytope::{self, FiberPoint, Polytope};
use crate::rational::{
    gaussian, int, parse_gaussian, parse_rational_list, GaussianRational, Rational,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "toric-floer",
    version,
    about = "Floer cohomology certificates for toric torus fibers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a polytope and report smoothness and reflexivity.
    Validate(Source),
    /// List the vertices.
    Vertices(Source),
    /// The fiber where all disc areas coincide.
    Monotone(Source),
    /// Disc classes and their area exponents at a fiber.
    Areas(FiberArgs),
    /// Disc classes grouped by area.
    Levels(FiberArgs),
    /// The components of m_{1,2}.
    M12(EvalArgs),
    /// Whether Floer cohomology is non-vanishing.
    Verdict(EvalArgs),
    /// Search for B-field weights making m_{1,2} vanish.
    Certify(CertifyArgs),
    /// Certify every interior fiber on a rational grid.
    Scan(ScanArgs),
    /// Critical points of the superpotential (convergent version).
    Critical(CriticalArgs),
    /// List the builtin polytopes.
    Builtins(JsonFlag),
}

#[derive(Debug, Args)]
struct JsonFlag {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct Source {
    /// Builtin polytope name (see `builtins`).
    #[arg(
        long,
        conflicts_with = "polytope",
        required_unless_present = "polytope"
    )]
    builtin: Option<String>,
    /// Polytope JSON file.
    #[arg(long)]
    polytope: Option<PathBuf>,
    /// Builtin parameter, e.g. 1/8.
    #[arg(long, requires = "builtin", allow_hyphen_values = true)]
    param: Option<String>,
    #[command(flatten)]
    json: JsonFlag,
}

impl Source {
    fn load(&self) -> Result<Polytope> {
        match (&self.builtin, &self.polytope) {
            (Some(name), _) => builtins::lookup(name, self.param.as_deref()),
            (None, Some(path)) => polytope::load_polytope(path),
            (None, None) => Err(Error::InvalidArgument(
                "need --builtin or --polytope".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
struct FiberArgs {
    #[command(flatten)]
    source: Source,
    /// Fiber coordinates as exact rationals, e.g. 1/8,3/4. Defaults to the monotone fiber.
    #[arg(long, allow_hyphen_values = true)]
    fiber: Option<String>,
}

impl FiberArgs {
    fn resolve(&self) -> Result<(Polytope, FiberPoint)> {
        let p = self.source.load()?;
        let fiber = match &self.fiber {
            Some(text) => FiberPoint::parse(text)?,
            None => {
                polytope::monotone_fiber(&p)
                    .ok_or(Error::NoMonotoneFiber)?
                    .0
            }
        };
        Ok((p, fiber))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    /// Trivial weights, unitary holonomy.
    Standard,
    /// Certificate weights (or --weights), any nonzero holonomy.
    Bfield,
    /// Evaluate at T^(2π) = e^-1.
    Convergent,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    fiber: FiberArgs,
    /// Angle fractions of a full turn (1/3,1/3 means x_k = e^{2πi/3}), or
    /// `complex:` followed by Gaussian rationals (complex:2,1/2+i).
    #[arg(long, allow_hyphen_values = true)]
    holonomy: Option<String>,
    /// One Gaussian rational weight d_j per facet, e.g. 2,1,1,1.
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value = "standard")]
    mode: Mode,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[command(flatten)]
    fiber: FiberArgs,
    /// Re-verify a certificate JSON file instead of searching.
    #[arg(long)]
    verify: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[command(flatten)]
    source: Source,
    /// Grid denominator: fibers with coordinates in (1/N)Z.
    #[arg(long, default_value_t = 8)]
    grid: u32,
}

#[derive(Debug, Args)]
struct CriticalArgs {
    #[command(flatten)]
    source: Source,
    /// Number of Newton starts.
    #[arg(long)]
    starts: Option<usize>,
    /// Residual tolerance for accepted roots.
    #[arg(long)]
    tol: Option<f64>,
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_domain_error() {
                2
            } else {
                1
            }
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Validate(src) => {
            let p = src.load()?;
            let report = polytope::validate(&p);
            if src.json.json {
                return emit_json(out, &json!({ "polytope": p.name(), "report": report }));
            }
            writeln!(
                out,
                "{}: valid polytope, dim {}, {} facets",
                p.name(),
                p.dim(),
                p.num_facets()
            )?;
            let smooth = report
                .smooth
                .map_or("not checked".to_string(), |s| s.to_string());
            writeln!(out, "smooth: {smooth}")?;
            writeln!(out, "reflexive: {}", report.reflexive)?;
            for w in &report.warnings {
                writeln!(out, "warning: {w}")?;
            }
        }
        Command::Vertices(src) => {
            let p = src.load()?;
            let vertices: Vec<FiberPoint> = p.vertices().iter().cloned().map(FiberPoint).collect();
            if src.json.json {
                return emit_json(out, &json!({ "polytope": p.name(), "vertices": vertices }));
            }
            for v in vertices {
                writeln!(out, "{v}")?;
            }
        }
        Command::Monotone(src) => {
            let p = src.load()?;
            let (fiber, area) = polytope::monotone_fiber(&p).ok_or(Error::NoMonotoneFiber)?;
            if src.json.json {
                return emit_json(
                    out,
                    &json!({ "polytope": p.name(), "fiber": fiber, "area": area.to_string() }),
                );
            }
            writeln!(out, "monotone fiber {fiber}, area exponent {area}")?;
        }
        Command::Areas(args) => {
            let (p, fiber) = args.resolve()?;
            let discs = disc_classes(&p, &fiber)?;
            if args.source.json.json {
                return emit_json(out, &json!({ "polytope": p.name(), "discs": discs }));
            }
            writeln!(out, "fiber {fiber}")?;
            for c in discs.classes() {
                writeln!(
                    out,
                    "β{}  ∂ = {:?}  area 2π·{}",
                    c.facet + 1,
                    c.boundary,
                    c.area
                )?;
            }
        }
        Command::Levels(args) => {
            let (p, fiber) = args.resolve()?;
            let levels = energy_levels(&disc_classes(&p, &fiber)?);
            if args.source.json.json {
                return emit_json(
                    out,
                    &json!({ "polytope": p.name(), "fiber": fiber, "levels": levels }),
                );
            }
            writeln!(out, "fiber {fiber}")?;
            for level in levels.levels() {
                let facets: Vec<String> =
                    level.facets.iter().map(|j| format!("β{}", j + 1)).collect();
                writeln!(out, "area 2π·{}: {}", level.area, facets.join(", "))?;
            }
        }
        Command::M12(args) => evaluate(&args, false, out)?,
        Command::Verdict(args) => evaluate(&args, true, out)?,
        Command::Certify(args) => certify(&args, out)?,
        Command::Scan(args) => {
            let p = args.source.load()?;
            let certified = certificate::scan_fibers(&p, args.grid)?;
            let total = certificate::grid_points(&p, args.grid).len();
            if args.source.json.json {
                let fibers: Vec<&FiberPoint> = certified.iter().map(|c| &c.fiber).collect();
                return emit_json(
                    out,
                    &json!({
                        "polytope": p.name(),
                        "grid": args.grid,
                        "interior_points": total,
                        "certified": fibers,
                        "certificates": certified,
                    }),
                );
            }
            writeln!(
                out,
                "{} of {total} interior grid fibers certified",
                certified.len()
            )?;
            for c in &certified {
                let weights: Vec<String> = c
                    .weights
                    .iter()
                    .map(crate::rational::format_gaussian)
                    .collect();
                writeln!(out, "{}  d = ({})", c.fiber, weights.join(", "))?;
            }
        }
        Command::Critical(args) => {
            let p = args.source.load()?;
            let mut opts = SolveOptions::from_env()?;
            if let Some(s) = args.starts {
                if s == 0 {
                    return Err(Error::InvalidArgument("--starts must be positive".into()));
                }
                opts.starts = s;
            }
            if let Some(t) = args.tol {
                if !(t > 0.0 && t.is_finite()) {
                    return Err(Error::InvalidArgument("--tol must be positive".into()));
                }
                opts.residual_tol = t;
            }
            let sp = mirror::superpotential(&p);
            let equations = mirror::critical_equations(&sp);
            let solve = mirror::solve_critical(&sp, &opts)?;
            if args.source.json.json {
                return emit_json(
                    out,
                    &json!({
                        "polytope": p.name(),
                        "superpotential": sp.to_string(),
                        "equations": equations.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "seed": opts.seed,
                        "solve": solve,
                        "label": mirror::CONVERGENT_LABEL,
                    }),
                );
            }
            writeln!(out, "W = {sp}")?;
            for (i, e) in equations.iter().enumerate() {
                writeln!(out, "E{} = {e}", i + 1)?;
            }
            writeln!(
                out,
                "{} critical points ({} of {} starts converged)",
                solve.points.len(),
                solve.converged_starts,
                solve.starts
            )?;
            for pt in &solve.points {
                let logs: Vec<String> = pt
                    .log_z()
                    .iter()
                    .map(|w| format!("{:.6}{:+.6}i", w.re, w.im))
                    .collect();
                writeln!(
                    out,
                    "log z = ({})  residual {:.1e}  {}",
                    logs.join(", "),
                    pt.residual,
                    if pt.interior { "interior" } else { "exterior" }
                )?;
            }
            for w in &solve.warnings {
                writeln!(out, "warning: {w}")?;
            }
            writeln!(out, "note: {}", mirror::CONVERGENT_LABEL)?;
        }
        Command::Builtins(flag) => {
            let catalog = builtins::catalog();
            if flag.json {
                return emit_json(out, &catalog);
            }
            for entry in catalog {
                match entry.parameter {
                    Some(param) => writeln!(
                        out,
                        "{:<16}{}  [--param: {param}]",
                        entry.name, entry.description
                    )?,
                    None => writeln!(out, "{:<16}{}", entry.name, entry.description)?,
                }
            }
        }
    }
    Ok(())
}

fn certify(args: &CertifyArgs, out: &mut dyn Write) -> Result<()> {
    let json = args.fiber.source.json.json;
    if let Some(path) = &args.verify {
        let p = args.fiber.source.load()?;
        let cert: Certificate = serde_json::from_str(&std::fs::read_to_string(path)?)
            .map_err(|e| Error::Syntax(e.to_string()))?;
        let verdict = cert.verify(&p)?;
        if verdict != cert.verdict {
            return Err(Error::Inconsistent(format!(
                "certificate claims {:?} but the data supports {verdict:?}",
                cert.verdict
            )));
        }
        if json {
            return emit_json(out, &json!({ "fiber": cert.fiber, "verdict": verdict }));
        }
        writeln!(out, "verified: {verdict:?} at {}", cert.fiber)?;
        return Ok(());
    }
    let (p, fiber) = args.fiber.resolve()?;
    let cert = certificate::certify_fiber(&p, &fiber)?;
    if json {
        return emit_json(out, &cert);
    }
    writeln!(out, "{:?} at fiber {}", cert.verdict, cert.fiber)?;
    for level in &cert.levels {
        let coeffs: Vec<String> = level
            .coefficients
            .iter()
            .map(crate::rational::format_gaussian)
            .collect();
        let facets: Vec<String> = level.facets.iter().map(|j| format!("β{}", j + 1)).collect();
        writeln!(
            out,
            "area 2π·{}: {} with c = ({})",
            level.area,
            facets.join(", "),
            coeffs.join(", ")
        )?;
    }
    for level in &cert.failing_levels {
        writeln!(
            out,
            "no fully supported kernel vector at area 2π·{}",
            level.area
        )?;
    }
    if cert.verdict == CertificateVerdict::Certified {
        let weights: Vec<String> = cert
            .weights
            .iter()
            .map(crate::rational::format_gaussian)
            .collect();
        writeln!(out, "weights d = ({})", weights.join(", "))?;
    }
    for w in &cert.warnings {
        writeln!(out, "warning: {w}")?;
    }
    writeln!(out, "note: {}", cert.realizability_note)?;
    Ok(())
}

/// Holonomy as given on the command line.
enum Holonomy {
    Exact(Vec<GaussianRational>),
    Float(Vec<Rational>),
}

/// `e^{2πi a}` exactly when `4a` is an integer.
fn exact_turn(a: &Rational) -> Option<GaussianRational> {
    let quarter = a * int(4);
    if !quarter.is_integer() {
        return None;
    }
    let k = i64::try_from(quarter.to_integer() % 4 + 4).ok()?;
    let (one, zero) = (Rational::one(), Rational::zero());
    Some(match k % 4 {
        0 => gaussian(one, zero),
        1 => gaussian(zero, one),
        2 => gaussian(-one, zero),
        _ => gaussian(zero, -one),
    })
}

fn parse_holonomy(text: &str) -> Result<Holonomy> {
    if let Some(rest) = text.strip_prefix("complex:") {
        return Ok(Holonomy::Exact(
            rest.split(',').map(parse_gaussian).collect::<Result<_>>()?,
        ));
    }
    let turns = parse_rational_list(text)?;
    match turns.iter().map(exact_turn).collect::<Option<Vec<_>>>() {
        Some(exact) => Ok(Holonomy::Exact(exact)),
        None => Ok(Holonomy::Float(turns)),
    }
}

fn to_complex(z: &GaussianRational) -> Complex64 {
    z.to_complex()
}

fn evaluate(args: &EvalArgs, verdict_only: bool, out: &mut dyn Write) -> Result<()> {
    let (p, fiber) = args.fiber.resolve()?;
    let discs = disc_classes(&p, &fiber)?;
    let n = p.dim();
    let holonomy = match &args.holonomy {
        Some(text) => parse_holonomy(text)?,
        None => Holonomy::Exact(vec![GaussianRational::one(); n]),
    };
    let weights: Vec<GaussianRational> = match (args.mode, &args.weights) {
        (Mode::Standard, Some(_)) => {
            return Err(Error::InvalidArgument(
                "standard mode uses trivial weights; drop --weights or use --mode bfield".into(),
            ))
        }
        (Mode::Standard, None) => vec![GaussianRational::one(); p.num_facets()],
        (_, Some(text)) => text.split(',').map(parse_gaussian).collect::<Result<_>>()?,
        (Mode::Bfield, None) => {
            let cert = certificate::certify_fiber(&p, &fiber)?;
            if !cert.is_certified() {
                return Err(Error::InvalidArgument(format!(
                    "no B-field certificate at {fiber}; pass --weights"
                )));
            }
            cert.weights
        }
        (Mode::Convergent, None) => vec![GaussianRational::one(); p.num_facets()],
    };
    let json = args.fiber.source.json.json;
    let header = Header {
        polytope: p.name(),
        fiber: &fiber,
        mode: args.mode,
    };
    match holonomy {
        Holonomy::Exact(x) => {
            let local = local_system(x, args.mode)?;
            report(
                header,
                &discs,
                &local,
                &BFieldWeights::new(weights)?,
                verdict_only,
                json,
                out,
            )
        }
        Holonomy::Float(turns) => {
            if turns.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: turns.len(),
                });
            }
            let local = LocalSystem::from_turns(&turns);
            let weights = BFieldWeights::new(weights.iter().map(to_complex).collect())?;
            report(header, &discs, &local, &weights, verdict_only, json, out)
        }
    }
}

fn local_system(x: Vec<GaussianRational>, mode: Mode) -> Result<LocalSystem<GaussianRational>> {
    let unitary = x.iter().all(|z| (&z.re * &z.re + &z.im * &z.im).is_one());
    if mode == Mode::Standard || unitary {
        LocalSystem::unitary(x)
    } else {
        LocalSystem::non_unitary(x)
    }
}

struct Header<'a> {
    polytope: &'a str,
    fiber: &'a FiberPoint,
    mode: Mode,
}

fn report<C: Coefficient>(
    header: Header<'_>,
    discs: &floer::DiscClassSet,
    local: &LocalSystem<C>,
    weights: &BFieldWeights<C>,
    verdict_only: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let Header {
        polytope,
        fiber,
        mode,
    } = header;
    if mode == Mode::Convergent {
        let rep = mirror::convergent_verdict(discs, local, weights)?;
        if json {
            return emit_json(
                out,
                &json!({ "polytope": polytope, "fiber": fiber, "mode": mode, "exact": C::EXACT, "report": rep }),
            );
        }
        if !verdict_only {
            for (i, v) in rep.values.iter().enumerate() {
                writeln!(out, "m12[{}] = {:.12}{:+.12}i", i + 1, v.re, v.im)?;
            }
        }
        writeln!(out, "{:?}", rep.verdict)?;
        writeln!(out, "note: {}", rep.label)?;
        return Ok(());
    }
    let components = floer::m12(discs, local, weights)?;
    let verdict = floer::floer_verdict(&components);
    if json {
        let mut value = json!({
            "polytope": polytope,
            "fiber": fiber,
            "mode": mode,
            "exact": C::EXACT,
            "verdict": verdict,
        });
        if !verdict_only {
            value["m12"] = serde_json::to_value(&components)?;
        }
        return emit_json(out, &value);
    }
    if !verdict_only {
        for (i, m) in components.iter().enumerate() {
            writeln!(out, "m12[{}] = {m}", i + 1)?;
        }
    }
    writeln!(out, "{verdict:?}")?;
    Ok(())
}
