//! `singulens`: polyhedral invariants and bi-Lipschitz certificates for
//! polynomial germs and ideals, driven by a session file.
//!
//! ```text
//! singulens SESSION.sg VERB ARGS [FLAGS]
//! singulens SESSION.sg --batch COMMANDS.txt [FLAGS]
//! ```
//!
//! Verbs: `show`, `invar ord|loj0|lojJ|mult|colength|chain NAME`,
//! `newton NAME`, `closure NAME [--degree D]`, `nondeg NAME`, and
//! `certify ord-loj|closure|jac-closure|semihomog|mult|euler|polar-m1`.
//! Flags: `--json`, `--svg PATH`, `--assume-equivalent`, `--jacobian`,
//! `--degree D`, `--seed N` (the SINGULENS_SEED environment variable
//! overrides it), `--batch FILE`.

mod report;
mod session;
mod svg;

use report::Report;
use serde_json::{json, Value};
use session::{Binding, Session};
use singulens::arith::rat_display;
use singulens::certificate::{
    certify_closure_criterion, certify_euler, certify_jacobian_closure, certify_multiplicity,
    certify_polar_m1, obstruct_equivalence, semihomogeneous_certificate, Certificate, Verdict,
};
use singulens::germ::Germ;
use singulens::ideal::Ideal;
use singulens::invariants::{
    check_chain, colength_monomial, loj0, lojj, multiplicity_polyhedral, Provenance,
};
use singulens::polyhedron::{Polyhedron, ScaleValue};
use singulens::torus::Decision;
use singulens::Error;

const DEFAULT_SEED: u64 = 1;
const DEFAULT_CLOSURE_DEGREE: i64 = 12;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}

#[derive(Debug, Clone, Default)]
struct Flags {
    json: bool,
    svg: Option<String>,
    assume_equivalent: bool,
    jacobian: bool,
    degree: Option<i64>,
    seed: Option<u64>,
    batch: Option<String>,
}

impl Flags {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }
}

/// Split raw arguments into positional tokens and flags.
fn parse_args(args: &[String], flags: &mut Flags) -> Result<Vec<String>, String> {
    let mut positional = Vec::new();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--json" => flags.json = true,
            "--assume-equivalent" => flags.assume_equivalent = true,
            "--jacobian" => flags.jacobian = true,
            "--svg" => {
                let path = it.next().ok_or("--svg needs a file path")?;
                flags.svg = Some(path.clone());
            }
            "--degree" => {
                let raw = it.next().ok_or("--degree needs a value")?;
                let d: i64 = raw
                    .parse()
                    .map_err(|_| format!("--degree needs an integer, got {raw}"))?;
                if d < 0 {
                    return Err("--degree must be nonnegative".into());
                }
                flags.degree = Some(d);
            }
            "--seed" => {
                let raw = it.next().ok_or("--seed needs a value")?;
                let s: u64 = raw
                    .parse()
                    .map_err(|_| format!("--seed needs an unsigned integer, got {raw}"))?;
                flags.seed = Some(s);
            }
            "--batch" => {
                let path = it.next().ok_or("--batch needs a file path")?;
                flags.batch = Some(path.clone());
            }
            other if other.starts_with("--") => {
                return Err(format!("unknown flag {other}"));
            }
            _ => positional.push(arg.clone()),
        }
    }
    Ok(positional)
}

const USAGE: &str = "usage: singulens SESSION VERB ARGS [FLAGS]\n\
  verbs: show\n\
         invar ord|loj0|lojJ|mult|colength|chain NAME\n\
         newton NAME [--jacobian] [--svg PATH]\n\
         closure NAME [--degree D]\n\
         nondeg NAME\n\
         certify ord-loj|closure|mult NAME NAME [--assume-equivalent]\n\
         certify jac-closure|semihomog NAME\n\
         certify euler|polar-m1 NAME NAME [--assume-equivalent]\n\
  flags: --json --svg PATH --assume-equivalent --jacobian --degree D --seed N --batch FILE";

fn run(args: &[String]) -> i32 {
    let mut flags = Flags::default();
    let positional = match parse_args(args, &mut flags) {
        Ok(p) => p,
        Err(message) => return emit(&Report::usage("usage", message), flags.json),
    };
    if let Ok(raw) = std::env::var("SINGULENS_SEED") {
        match raw.parse::<u64>() {
            Ok(s) => flags.seed = Some(s),
            Err(_) => {
                let report = Report::usage(
                    "usage",
                    format!("SINGULENS_SEED must be an unsigned integer, got {raw}"),
                );
                return emit(&report, flags.json);
            }
        }
    }
    if positional.is_empty() {
        return emit(&Report::usage("usage", USAGE), flags.json);
    }

    let path = &positional[0];
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let report = Report::usage("usage", format!("cannot read {path}: {e}"));
            return emit(&report, flags.json);
        }
    };
    let session = match session::parse_session(&text) {
        Ok(s) => s,
        Err(failure) => {
            let report = match &failure {
                session::SessionFailure::Parse(_) => {
                    Report::usage("parse", failure.to_string())
                }
                session::SessionFailure::Library { error, .. } => {
                    let mut r = Report::from_error("parse", error);
                    r.payload = json!({ "error": failure.to_string() });
                    r
                }
            };
            return emit(&report, flags.json);
        }
    };

    if let Some(batch_path) = flags.batch.clone() {
        return run_batch(&session, &batch_path, &flags);
    }

    let tokens = &positional[1..];
    if tokens.is_empty() {
        return emit(&Report::usage("usage", USAGE), flags.json);
    }
    let report = execute(&session, tokens, &flags);
    emit(&report, flags.json)
}

fn emit(report: &Report, json: bool) -> i32 {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("serializable report")
        );
    } else {
        print!("{}", report.render_text());
    }
    report.exit_code
}

fn run_batch(session: &Session, path: &str, flags: &Flags) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let report = Report::usage("usage", format!("cannot read {path}: {e}"));
            return emit(&report, flags.json);
        }
    };
    let mut reports = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        let mut line_flags = flags.clone();
        line_flags.batch = None;
        let report = match parse_args(&words, &mut line_flags) {
            Ok(tokens) if !tokens.is_empty() => execute(session, &tokens, &line_flags),
            Ok(_) => Report::usage("usage", format!("batch line {}: empty command", idx + 1)),
            Err(message) => {
                Report::usage("usage", format!("batch line {}: {message}", idx + 1))
            }
        };
        reports.push(report);
    }
    let exit = reports.iter().map(|r| r.exit_code).max().unwrap_or(0);
    if flags.json {
        let all: Vec<Value> = reports.iter().map(Report::to_json).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&Value::Array(all)).expect("serializable reports")
        );
    } else {
        for (i, report) in reports.iter().enumerate() {
            if i > 0 {
                println!("--");
            }
            print!("{}", report.render_text());
        }
    }
    exit
}

// ---------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------

enum CmdError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Lib(e)
    }
}

enum Outcome {
    Plain(Value),
    Certificate(Certificate),
}

fn execute(session: &Session, tokens: &[String], flags: &Flags) -> Report {
    let command = tokens.join(" ");
    let result = dispatch(session, tokens, flags);
    match result {
        Ok(Outcome::Plain(payload)) => Report::ok(command, payload),
        Ok(Outcome::Certificate(cert)) => {
            let payload = cert.to_json();
            match cert.verdict() {
                Verdict::Refused => Report::refused(command, payload),
                _ => Report::ok(command, payload),
            }
        }
        Err(CmdError::Usage(message)) => Report::usage(command, message),
        Err(CmdError::Lib(error)) => Report::from_error(command, &error),
    }
}

fn dispatch(session: &Session, tokens: &[String], flags: &Flags) -> Result<Outcome, CmdError> {
    let verb = tokens[0].as_str();
    let rest = &tokens[1..];
    match verb {
        "show" => cmd_show(session, rest),
        "invar" => cmd_invar(session, rest, flags),
        "newton" => cmd_newton(session, rest, flags),
        "closure" => cmd_closure(session, rest, flags),
        "nondeg" => cmd_nondeg(session, rest, flags),
        "certify" => cmd_certify(session, rest, flags),
        other => Err(CmdError::Usage(format!(
            "unknown verb {other}; expected show, invar, newton, closure, nondeg, or certify"
        ))),
    }
}

/// Print the session back in normalized form along with its binding names.
fn cmd_show(session: &Session, rest: &[String]) -> Result<Outcome, CmdError> {
    if !rest.is_empty() {
        return Err(CmdError::Usage("show takes no arguments".into()));
    }
    let names: Vec<Value> = session
        .binding_names()
        .iter()
        .map(|n| Value::String(n.to_string()))
        .collect();
    let rings: Vec<Value> = session
        .rings()
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "semigroup": r.semigroup.as_ref().map(|(s, _)| s.clone()),
                "vars": r.vars,
            })
        })
        .collect();
    Ok(Outcome::Plain(json!({
        "bindings": names,
        "rings": rings,
        "session": session.render(),
    })))
}

fn one_name<'a>(rest: &'a [String], what: &str) -> Result<&'a str, CmdError> {
    match rest {
        [name] => Ok(name.as_str()),
        _ => Err(CmdError::Usage(format!("expected exactly one {what} name"))),
    }
}

fn two_names<'a>(rest: &'a [String], what: &str) -> Result<(&'a str, &'a str), CmdError> {
    match rest {
        [a, b] => Ok((a.as_str(), b.as_str())),
        _ => Err(CmdError::Usage(format!("expected exactly two {what} names"))),
    }
}

/// Look up a binding usable as an ideal; germs are taken as principal ideals.
fn lookup_ideal(session: &Session, name: &str) -> Result<Ideal, CmdError> {
    match session.get(name) {
        Some(Binding::Ideal { ideal, .. }) => Ok(ideal.clone()),
        Some(Binding::Germ { germ, .. }) => Ok(Ideal::principal(germ.clone())?),
        Some(Binding::Semigroup(_)) => Err(CmdError::Usage(format!(
            "{name} is a semigroup; this command needs a germ or ideal"
        ))),
        None => Err(CmdError::Usage(format!("unknown binding {name}"))),
    }
}

/// Look up a binding usable as a germ; principal ideals are unwrapped.
fn lookup_germ(session: &Session, name: &str) -> Result<Germ, CmdError> {
    match session.get(name) {
        Some(Binding::Germ { germ, .. }) => Ok(germ.clone()),
        Some(Binding::Ideal { ideal, .. }) => match ideal.generators() {
            [g] => Ok(g.clone()),
            _ => Err(CmdError::Usage(format!(
                "{name} has several generators; this command needs a single germ"
            ))),
        },
        Some(Binding::Semigroup(_)) => Err(CmdError::Usage(format!(
            "{name} is a semigroup; this command needs a germ"
        ))),
        None => Err(CmdError::Usage(format!("unknown binding {name}"))),
    }
}

fn scale_text(v: &ScaleValue) -> String {
    match v {
        ScaleValue::Finite(r) => rat_display(r),
        ScaleValue::Infinite => "infinite".to_string(),
    }
}

fn provenance_label(p: Provenance) -> &'static str {
    match p {
        Provenance::ExactPolyhedral => "exact-polyhedral",
        Provenance::Oracle => "oracle",
        Provenance::Refused => "refused",
    }
}

fn cmd_invar(session: &Session, rest: &[String], flags: &Flags) -> Result<Outcome, CmdError> {
    let (sub, rest) = rest
        .split_first()
        .ok_or_else(|| CmdError::Usage("invar needs a subcommand".into()))?;
    let seed = flags.seed();
    let payload = match sub.as_str() {
        "ord" => {
            let ideal = lookup_ideal(session, one_name(rest, "ideal")?)?;
            json!({ "ord": ideal.order()? })
        }
        "loj0" => {
            let ideal = lookup_ideal(session, one_name(rest, "ideal")?)?;
            match loj0(&ideal, seed)? {
                ScaleValue::Finite(r) => json!({ "loj0": rat_display(&r) }),
                ScaleValue::Infinite => return Err(Error::InfiniteColength.into()),
            }
        }
        "lojJ" => {
            let (a, b) = two_names(rest, "ideal")?;
            let i = lookup_ideal(session, a)?;
            let j = lookup_ideal(session, b)?;
            match lojj(&i, &j, seed)? {
                ScaleValue::Finite(r) => json!({ "lojJ": rat_display(&r) }),
                ScaleValue::Infinite => return Err(Error::InfiniteColength.into()),
            }
        }
        "mult" => {
            let ideal = lookup_ideal(session, one_name(rest, "ideal")?)?;
            json!({ "mult": multiplicity_polyhedral(&ideal, seed)? })
        }
        "colength" => {
            let ideal = lookup_ideal(session, one_name(rest, "ideal")?)?;
            json!({ "colength": colength_monomial(&ideal)? })
        }
        "chain" => {
            let ideal = lookup_ideal(session, one_name(rest, "ideal")?)?;
            let bundle = check_chain(&ideal, seed)?;
            json!({
                "chain_verified": bundle.chain_verified,
                "colength": bundle.colength,
                "loj0": bundle.loj0.as_ref().map(scale_text),
                "mult": bundle.mult,
                "ord": bundle.ord,
                "provenance": {
                    "colength": provenance_label(bundle.colength_provenance),
                    "loj0": provenance_label(bundle.loj0_provenance),
                    "mult": provenance_label(bundle.mult_provenance),
                    "ord": provenance_label(bundle.ord_provenance),
                },
            })
        }
        other => {
            return Err(CmdError::Usage(format!(
                "unknown invariant {other}; expected ord, loj0, lojJ, mult, colength, or chain"
            )))
        }
    };
    Ok(Outcome::Plain(payload))
}

fn polyhedron_json(p: &Polyhedron) -> Value {
    let vertices: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| Value::Array(v.iter().map(|c| Value::String(rat_display(c))).collect()))
        .collect();
    let facets: Vec<Value> = p
        .facets()
        .iter()
        .map(|f| json!({ "normal": f.normal, "offset": rat_display(&f.offset) }))
        .collect();
    json!({
        "dim": p.dim(),
        "facets": facets,
        "rays": p.rays(),
        "vertices": vertices,
    })
}

fn cmd_newton(session: &Session, rest: &[String], flags: &Flags) -> Result<Outcome, CmdError> {
    let name = one_name(rest, "germ or ideal")?;
    let ideal = if flags.jacobian {
        Ideal::jacobian(&lookup_germ(session, name)?)?
    } else {
        lookup_ideal(session, name)?
    };
    let p = ideal.newton_polyhedron()?;
    let mut payload = polyhedron_json(p);
    if let Some(path) = &flags.svg {
        let document = svg::newton_svg(p)?;
        std::fs::write(path, document)
            .map_err(|e| CmdError::Usage(format!("cannot write {path}: {e}")))?;
        payload["svg"] = Value::String(path.clone());
    }
    Ok(Outcome::Plain(payload))
}

fn cmd_closure(session: &Session, rest: &[String], flags: &Flags) -> Result<Outcome, CmdError> {
    let ideal = lookup_ideal(session, one_name(rest, "ideal")?)?;
    let degree = flags.degree.unwrap_or(DEFAULT_CLOSURE_DEGREE);
    let monomials = ideal.integral_closure_monomials(degree, false, flags.seed())?;
    let listed: Vec<Value> = monomials
        .iter()
        .map(|m| json!({ "exponent": m.exponent, "minimal": m.is_minimal }))
        .collect();
    Ok(Outcome::Plain(json!({
        "count": listed.len(),
        "degree": degree,
        "monomials": listed,
    })))
}

fn cmd_nondeg(session: &Session, rest: &[String], flags: &Flags) -> Result<Outcome, CmdError> {
    let ideal = lookup_ideal(session, one_name(rest, "ideal")?)?;
    let decision = ideal.is_nondegenerate(flags.seed())?;
    let method = match decision {
        Decision::Exact(_) => "exact",
        Decision::Heuristic(_) => "sampling",
    };
    Ok(Outcome::Plain(json!({
        "method": method,
        "nondegenerate": decision.value(),
    })))
}

fn cmd_certify(session: &Session, rest: &[String], flags: &Flags) -> Result<Outcome, CmdError> {
    let (op, rest) = rest
        .split_first()
        .ok_or_else(|| CmdError::Usage("certify needs an operation".into()))?;
    let seed = flags.seed();
    let assume = flags.assume_equivalent;
    match op.as_str() {
        "ord-loj" => {
            let (a, b) = two_names(rest, "ideal")?;
            let i = lookup_ideal(session, a)?;
            let j = lookup_ideal(session, b)?;
            let report = obstruct_equivalence(&i, &j, seed)?;
            Ok(Outcome::Plain(report.to_json()))
        }
        "closure" => {
            let (a, b) = two_names(rest, "ideal")?;
            let i = lookup_ideal(session, a)?;
            let j = lookup_ideal(session, b)?;
            Ok(Outcome::Certificate(certify_closure_criterion(
                &i, &j, assume, seed,
            )?))
        }
        "jac-closure" => {
            let f = lookup_germ(session, one_name(rest, "germ")?)?;
            Ok(Outcome::Certificate(certify_jacobian_closure(&f, seed)?))
        }
        "semihomog" => {
            let f = lookup_germ(session, one_name(rest, "germ")?)?;
            Ok(Outcome::Certificate(semihomogeneous_certificate(&f, seed)?))
        }
        "mult" => {
            let (a, b) = two_names(rest, "ideal")?;
            let i = lookup_ideal(session, a)?;
            let j = lookup_ideal(session, b)?;
            // The germs carry no dimension data; equality of dimensions is
            // recorded on the certificate as an assumption.
            Ok(Outcome::Certificate(certify_multiplicity(
                &i, &j, true, assume, seed,
            )?))
        }
        "euler" => {
            let (a, b) = two_names(rest, "germ")?;
            let f = lookup_germ(session, a)?;
            let g = lookup_germ(session, b)?;
            Ok(Outcome::Certificate(certify_euler(&f, &g, assume, seed)?))
        }
        "polar-m1" => {
            let (a, b) = two_names(rest, "germ")?;
            let f = lookup_germ(session, a)?;
            let g = lookup_germ(session, b)?;
            Ok(Outcome::Certificate(certify_polar_m1(&f, &g, assume, seed)?))
        }
        other => Err(CmdError::Usage(format!(
            "unknown certificate {other}; expected ord-loj, closure, jac-closure, \
             semihomog, mult, euler, or polar-m1"
        ))),
    }
}
