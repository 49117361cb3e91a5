//! Command-line front end.
//!
//! Data goes to the output stream, diagnostics to the error stream. Exit codes:
//! 0 success, 1 property false or search empty, 2 input or usage error,
//! 3 budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catcheck::{
    adjunction_report, check_algebra_morphism_form, check_faithful, check_gf_algebra,
    check_object_injectivity, naturality_sweep, probe_isotopy_vs_ss_iso, Functor, GfMode,
    ObjectFunctor,
};
use crate::enumerate::{
    catalog, count_latin_squares, enumerate_latin_squares, EnumerationConfig, DEFAULT_MAX_ORDER,
};
use crate::error::{Budget, Error, ErrorKind};
use crate::morphisms::{complete_homotopy, enumerate_homotopies, find_isomorphism, find_isotopy};
use crate::qcore::qgt::{self, RECORD_SEPARATOR};
use crate::qcore::{validate_latin, OpTable, ParastropheKind, Quasigroup, TwistedQuasigroup};
use crate::semisym::{
    delta_object, gamma_table, gamma_tagged, twisted_semisymmetrization, GammaVariant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "qss",
    version,
    about = "Finite quasigroup semisymmetrization toolkit"
)]
pub struct Command {
    /// Candidate budget for exhaustive searches.
    #[arg(long, global = true, env = "QSS_BUDGET")]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Check that each table is a Latin square.
    Validate(Inputs),
    /// Print the division tables or one parastrophe.
    Show {
        #[arg(long, value_parser = parse_kind)]
        parastrophe: Option<ParastropheKind>,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Emit a semisymmetrization as QGT.
    Semisymmetrize {
        #[arg(long, value_enum, default_value = "delta")]
        functor: FunctorArg,
        #[arg(long, value_parser = parse_variant)]
        variant: Option<GammaVariant>,
        /// Append the source quasigroup as a #tag block (gamma v12 only).
        #[arg(long)]
        tagged: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Run a property check on inputs, or sweep all small quasigroups.
    Check {
        #[arg(value_enum)]
        property: Property,
        /// Largest order swept when no inputs are given.
        #[arg(long, default_value_t = 2)]
        max_order: usize,
        /// Sample size for the large algebra equation at order >= 2.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Searches for maps between two quasigroups.
    Morph {
        #[arg(value_enum)]
        action: MorphAction,
        /// First component, as a line of images (complete-homotopy).
        #[arg(long)]
        f1: Option<String>,
        /// Second component, as a line of images (complete-homotopy).
        #[arg(long)]
        f2: Option<String>,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Stream all Latin squares of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Compare isotopy with isomorphism of semisymmetrizations.
    Probe {
        #[arg(value_enum)]
        which: ProbeKind,
        #[command(flatten)]
        inputs: Inputs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Inputs {
    /// QGT files, or '-' for standard input.
    #[arg(value_name = "INPUT")]
    pub paths: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctorArg {
    Delta,
    Gamma,
    Nabla23,
    Nabla31,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Ss,
    Twisted,
    Adjunction,
    Faithful,
    GfAlgebra,
    ObjectInjectivity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MorphAction {
    FindIso,
    FindIsotopy,
    EnumerateHomotopies,
    CompleteHomotopy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProbeKind {
    IsotopyVsSs,
}

fn parse_kind(s: &str) -> Result<ParastropheKind, String> {
    s.parse()
}

fn parse_variant(s: &str) -> Result<GammaVariant, String> {
    s.parse()
}

pub fn parse_args<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Command::try_parse_from(argv)
}

/// Failure of a verb, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Resource => EXIT_BUDGET,
            ErrorKind::Input | ErrorKind::Precondition => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type Outcome = Result<i32, Failure>;

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    budget: Budget,
}

/// A parsed input record with a display name.
struct Record {
    name: String,
    rows: Vec<Vec<usize>>,
}

impl Ctx<'_> {
    fn read_source(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text)?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
        }
    }

    fn records(&mut self, inputs: &Inputs, default_stdin: bool) -> Result<Vec<Record>, Failure> {
        let mut paths = inputs.paths.clone();
        if paths.is_empty() && default_stdin {
            paths.push("-".into());
        }
        let mut out = Vec::new();
        for path in paths {
            let text = self.read_source(&path)?;
            let label = if path == "-" {
                "stdin".to_string()
            } else {
                path.clone()
            };
            let records =
                qgt::parse_stream_rows(&text).map_err(|e| usage(format!("{label}: {e}")))?;
            let many = records.len() > 1;
            for (i, rows) in records.into_iter().enumerate() {
                let name = if many {
                    format!("{label}#{i}")
                } else {
                    label.clone()
                };
                out.push(Record { name, rows });
            }
        }
        Ok(out)
    }

    fn quasigroups(
        &mut self,
        inputs: &Inputs,
        default_stdin: bool,
    ) -> Result<Vec<(String, Quasigroup)>, Failure> {
        self.records(inputs, default_stdin)?
            .into_iter()
            .map(|r| {
                Quasigroup::from_mul_table(&r.rows)
                    .map(|q| (r.name.clone(), q))
                    .map_err(|e| usage(format!("{}: {e}", r.name)))
            })
            .collect()
    }

    fn pair(&mut self, inputs: &Inputs) -> Result<(Arc<Quasigroup>, Arc<Quasigroup>), Failure> {
        let qs = self.quasigroups(inputs, true)?;
        match <[(String, Quasigroup); 2]>::try_from(qs) {
            Ok([(_, q), (_, r)]) => Ok((Arc::new(q), Arc::new(r))),
            Err(qs) => Err(usage(format!(
                "expected exactly two quasigroups, found {}",
                qs.len()
            ))),
        }
    }

    fn report(&mut self, name: &str, args: &str, pass: bool, extra: &str) -> io::Result<bool> {
        let verdict = if pass { "PASS" } else { "FAIL" };
        let mut line = format!("CHECK {name} {args} {verdict}");
        if !extra.is_empty() {
            line.push(' ');
            line.push_str(extra);
        }
        writeln!(self.out, "{line}")?;
        Ok(pass)
    }
}

/// Parses `argv`, runs the verb and returns the process exit code.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cmd = match parse_args(argv) {
        Ok(cmd) => cmd,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return EXIT_INPUT;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
    };
    let mut ctx = Ctx {
        stdin,
        out: stdout,
        err: stderr,
        budget: cmd.budget.map_or(Budget::DEFAULT, Budget),
    };
    match execute(&cmd.verb, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.err, "qss: {}", f.message);
            f.code
        }
    }
}

fn execute(verb: &Verb, ctx: &mut Ctx<'_>) -> Outcome {
    match verb {
        Verb::Validate(inputs) => validate(ctx, inputs),
        Verb::Show {
            parastrophe,
            inputs,
        } => show(ctx, *parastrophe, inputs),
        Verb::Semisymmetrize {
            functor,
            variant,
            tagged,
            inputs,
        } => semisymmetrize(ctx, *functor, *variant, *tagged, inputs),
        Verb::Check {
            property,
            max_order,
            samples,
            seed,
            inputs,
        } => check(ctx, *property, *max_order, *samples, *seed, inputs),
        Verb::Morph {
            action,
            f1,
            f2,
            inputs,
        } => morph(ctx, *action, f1.as_deref(), f2.as_deref(), inputs),
        Verb::Enumerate {
            order,
            reduced,
            count_only,
            limit,
            max_order,
        } => {
            let cfg = EnumerationConfig::new(*order)
                .reduced(*reduced)
                .limit(*limit)
                .max_order(*max_order);
            enumerate(ctx, &cfg, *count_only)
        }
        Verb::Probe { which, inputs } => match which {
            ProbeKind::IsotopyVsSs => probe(ctx, inputs),
        },
    }
}

fn validate(ctx: &mut Ctx<'_>, inputs: &Inputs) -> Outcome {
    let records = ctx.records(inputs, true)?;
    let mut all = true;
    for r in records {
        let latin = validate_latin(&r.rows).map_err(|e| usage(format!("{}: {e}", r.name)))?;
        all &= ctx.report("validate", &r.name, latin, "")?;
    }
    Ok(if all { EXIT_OK } else { EXIT_FALSE })
}

fn show(ctx: &mut Ctx<'_>, kind: Option<ParastropheKind>, inputs: &Inputs) -> Outcome {
    let qs = ctx.quasigroups(inputs, true)?;
    let mut records = Vec::new();
    for (name, q) in &qs {
        match kind {
            Some(k) => records.push(format!(
                "# {name} {k}\n{}",
                qgt::write_quasigroup(&q.parastrophe(k))
            )),
            None => {
                for (label, table) in [
                    ("mul", q.mul_table()),
                    ("rdiv", q.rdiv_table()),
                    ("ldiv", q.ldiv_table()),
                ] {
                    records.push(format!("# {name} {label}\n{}", qgt::write_table(table)));
                }
            }
        }
    }
    write!(
        ctx.out,
        "{}",
        records.join(&format!("{RECORD_SEPARATOR}\n"))
    )?;
    Ok(EXIT_OK)
}

fn semisymmetrize(
    ctx: &mut Ctx<'_>,
    functor: FunctorArg,
    variant: Option<GammaVariant>,
    tagged: bool,
    inputs: &Inputs,
) -> Outcome {
    let chosen = match (functor, variant) {
        (FunctorArg::Delta, Some(_)) => return Err(usage("--variant applies to gamma only")),
        (FunctorArg::Delta, None) => None,
        (FunctorArg::Gamma, v) => Some(v.unwrap_or(GammaVariant::V12)),
        (FunctorArg::Nabla23, None | Some(GammaVariant::V23)) => Some(GammaVariant::V23),
        (FunctorArg::Nabla31, None) => Some(GammaVariant::V31Symmetric),
        (
            FunctorArg::Nabla31,
            Some(v @ (GammaVariant::V31Symmetric | GammaVariant::V31Verbatim)),
        ) => Some(v),
        (_, Some(v)) => return Err(usage(format!("--variant {v} conflicts with --functor"))),
    };
    if tagged && chosen != Some(GammaVariant::V12) {
        return Err(usage("--tagged applies to gamma v12 only"));
    }

    let qs = ctx.quasigroups(inputs, true)?;
    let mut records = Vec::new();
    let mut code = EXIT_OK;
    for (name, q) in &qs {
        let text = match chosen {
            None => qgt::write_quasigroup(&delta_object(q)),
            Some(_) if tagged => gamma_tagged(q).to_qgt(),
            Some(v) => {
                let table: OpTable = gamma_table(q, v);
                if !table.is_latin() {
                    writeln!(ctx.err, "qss: {name}: {v} table is not a Latin square")?;
                    code = EXIT_FALSE;
                }
                qgt::write_table(&table)
            }
        };
        records.push(text);
    }
    write!(
        ctx.out,
        "{}",
        records.join(&format!("{RECORD_SEPARATOR}\n"))
    )?;
    Ok(code)
}

fn objects(
    ctx: &mut Ctx<'_>,
    inputs: &Inputs,
    max_order: usize,
) -> Result<Vec<(String, Quasigroup)>, Failure> {
    if !inputs.paths.is_empty() {
        return ctx.quasigroups(inputs, false);
    }
    if max_order > DEFAULT_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: max_order,
            max: DEFAULT_MAX_ORDER,
        }
        .into());
    }
    let mut counters = vec![0usize; max_order + 1];
    Ok(catalog(max_order)?
        .into_iter()
        .map(|q| {
            let n = q.order();
            let name = format!("n{n}#{}", counters[n]);
            counters[n] += 1;
            (name, q)
        })
        .collect())
}

fn check(
    ctx: &mut Ctx<'_>,
    property: Property,
    max_order: usize,
    samples: u64,
    seed: u64,
    inputs: &Inputs,
) -> Outcome {
    let mut all = true;
    match property {
        Property::Ss => {
            for (name, q) in ctx.quasigroups(inputs, true)? {
                let r = q.semisymmetry_report();
                let flags = format!(
                    "ss1={} ss2={} rdiv={} ldiv={} divisions={}",
                    r.ss1, r.ss2, r.rdiv_is_opposite, r.ldiv_is_opposite, r.divisions_agree
                );
                all &= ctx.report("ss", &name, r.all(), &flags)?;
            }
        }
        Property::Twisted => {
            for (name, q) in ctx.quasigroups(inputs, true)? {
                let t = TwistedQuasigroup::from_quasigroup(&q);
                let r1 = t.cyclic_rotate();
                let r2 = r1.cyclic_rotate();
                let twisted = t.is_twisted() && r1.is_twisted() && r2.is_twisted();
                all &= ctx.report("twisted", &name, twisted, "")?;
                let nabla = twisted_semisymmetrization(&q);
                let [a, b, c] = nabla.tables();
                let ok = a == b && b == c && nabla.is_semisymmetric_twisted();
                all &= ctx.report("twisted-semisymmetrization", &name, ok, "")?;
            }
        }
        Property::Adjunction => {
            let objs = objects(ctx, inputs, max_order)?;
            for (name, q) in &objs {
                let r = adjunction_report(q);
                let extra = format!(
                    "semisymmetric={} unit_homomorphism={}",
                    r.semisymmetric, r.diagonal_homomorphism
                );
                all &= ctx.report("adjunction", name, r.holds(), &extra)?;
            }
            let arcs: Vec<_> = objs.iter().map(|(n, q)| (n, Arc::new(q.clone()))).collect();
            for (a, p) in &arcs {
                for (b, r) in &arcs {
                    let (unit, counit) = naturality_sweep(p, r, ctx.budget)?;
                    all &= ctx.report("naturality", &format!("{a} {b}"), unit && counit, "")?;
                }
            }
        }
        Property::Faithful => {
            let objs = objects(ctx, inputs, max_order)?;
            let arcs: Vec<_> = objs.iter().map(|(n, q)| (n, Arc::new(q.clone()))).collect();
            for (a, q) in &arcs {
                for (b, r) in &arcs {
                    for f in [Functor::Delta, Functor::Gamma] {
                        let ok = check_faithful(q, r, f, ctx.budget)?;
                        all &= ctx.report(
                            &format!("faithful-{}", f.name()),
                            &format!("{a} {b}"),
                            ok,
                            "",
                        )?;
                    }
                }
            }
        }
        Property::GfAlgebra => {
            for (name, q) in objects(ctx, inputs, max_order)? {
                let mode = if q.order() == 1 {
                    GfMode::Exhaustive
                } else {
                    GfMode::Sample {
                        points: samples,
                        seed,
                    }
                };
                let r = check_gf_algebra(&q, mode, ctx.budget)?;
                let extra = format!(
                    "unit_law={} main_law={} points={}",
                    r.unit_law, r.main_law, r.points_checked
                );
                all &= ctx.report("gf-algebra", &name, r.holds(), &extra)?;
                if q.order() <= crate::catcheck::ALGEBRA_MORPHISM_MAX_ORDER {
                    let m = check_algebra_morphism_form(&q, &q)?;
                    let extra = format!("maps={}", m.maps_found);
                    all &= ctx.report("algebra-morphism-form", &name, m.holds(), &extra)?;
                }
            }
        }
        Property::ObjectInjectivity => {
            let objs = objects(ctx, inputs, max_order)?;
            let names: Vec<&str> = objs.iter().map(|(n, _)| n.as_str()).collect();
            let qs: Vec<Quasigroup> = objs.iter().map(|(_, q)| q.clone()).collect();
            let show = |pairs: &[(usize, usize)]| {
                pairs
                    .iter()
                    .map(|&(i, j)| format!("{}={}", names[i], names[j]))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let delta = check_object_injectivity(&qs, ObjectFunctor::Delta);
            let extra = format!("witnesses={}", delta.witnesses.len());
            all &= ctx.report("object-injectivity", "delta", delta.is_injective(), &extra)?;
            let tagged = check_object_injectivity(&qs, ObjectFunctor::GammaTagged);
            all &= ctx.report(
                "object-injectivity",
                "gamma-tagged",
                tagged.is_injective(),
                &show(&tagged.collisions),
            )?;
            let untagged = check_object_injectivity(&qs, ObjectFunctor::GammaUntagged);
            writeln!(
                ctx.out,
                "# gamma-untagged collisions: {}",
                if untagged.collisions.is_empty() {
                    "none".to_string()
                } else {
                    show(&untagged.collisions)
                }
            )?;
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_FALSE })
}

fn map_arg(name: &str, value: Option<&str>) -> Result<Vec<usize>, Failure> {
    let text = value.ok_or_else(|| usage(format!("--{name} is required")))?;
    Ok(qgt::parse_map(text)?)
}

fn write_maps(out: &mut dyn Write, maps: [&[usize]; 3]) -> io::Result<()> {
    for m in maps {
        writeln!(out, "{}", qgt::write_map(m))?;
    }
    Ok(())
}

fn morph(
    ctx: &mut Ctx<'_>,
    action: MorphAction,
    f1: Option<&str>,
    f2: Option<&str>,
    inputs: &Inputs,
) -> Outcome {
    let (q, r) = ctx.pair(inputs)?;
    match action {
        MorphAction::FindIso => match find_isomorphism(q.as_ref(), r.as_ref()) {
            Some(map) => writeln!(ctx.out, "{}", qgt::write_map(&map))?,
            None => {
                writeln!(ctx.err, "qss: no isomorphism")?;
                return Ok(EXIT_FALSE);
            }
        },
        MorphAction::FindIsotopy => match find_isotopy(&q, &r, ctx.budget)? {
            Some(h) => write_maps(ctx.out, h.maps())?,
            None => {
                writeln!(ctx.err, "qss: no isotopy")?;
                return Ok(EXIT_FALSE);
            }
        },
        MorphAction::EnumerateHomotopies => {
            let all = enumerate_homotopies(&q, &r, ctx.budget)?;
            for (i, h) in all.iter().enumerate() {
                if i > 0 {
                    writeln!(ctx.out, "{RECORD_SEPARATOR}")?;
                }
                write_maps(ctx.out, h.maps())?;
            }
            writeln!(ctx.err, "qss: {} homotopies", all.len())?;
            if all.is_empty() {
                return Ok(EXIT_FALSE);
            }
        }
        MorphAction::CompleteHomotopy => {
            let (f1, f2) = (map_arg("f1", f1)?, map_arg("f2", f2)?);
            match complete_homotopy(&q, &r, &f1, &f2)? {
                Some([a, b, c]) => write_maps(ctx.out, [&a, &b, &c])?,
                None => {
                    writeln!(ctx.err, "qss: (f1, f2) does not extend to a homotopy")?;
                    return Ok(EXIT_FALSE);
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn enumerate(ctx: &mut Ctx<'_>, cfg: &EnumerationConfig, count_only: bool) -> Outcome {
    if count_only {
        writeln!(ctx.out, "{}", count_latin_squares(cfg)?)?;
        return Ok(EXIT_OK);
    }
    for (i, q) in enumerate_latin_squares(cfg)?.enumerate() {
        if i > 0 {
            writeln!(ctx.out, "{RECORD_SEPARATOR}")?;
        }
        write!(ctx.out, "{}", qgt::write_quasigroup(&q))?;
    }
    Ok(EXIT_OK)
}

fn probe(ctx: &mut Ctx<'_>, inputs: &Inputs) -> Outcome {
    let (q, r) = ctx.pair(inputs)?;
    match probe_isotopy_vs_ss_iso(&q, &r, ctx.budget) {
        Ok(report) => {
            writeln!(ctx.out, "PROBE isotopy-vs-ss {report}")?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(ctx.out, "PROBE isotopy-vs-ss {}", e.partial)?;
            Err(e.source.into())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("qss").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_examples() {
        let c = parse_args(["qss", "validate", "q.qgt"]).unwrap();
        assert!(matches!(c.verb, Verb::Validate(ref i) if i.paths == ["q.qgt"]));

        let c = parse_args([
            "qss",
            "semisymmetrize",
            "--functor",
            "gamma",
            "--variant",
            "v31-verbatim",
            "-",
        ])
        .unwrap();
        match c.verb {
            Verb::Semisymmetrize {
                functor,
                variant,
                inputs,
                ..
            } => {
                assert_eq!(functor, FunctorArg::Gamma);
                assert_eq!(variant, Some(GammaVariant::V31Verbatim));
                assert_eq!(inputs.paths, ["-"]);
            }
            other => panic!("unexpected {other:?}"),
        }

        let c = parse_args(["qss", "check", "adjunction", "--max-order", "3"]).unwrap();
        assert!(matches!(
            c.verb,
            Verb::Check {
                property: Property::Adjunction,
                max_order: 3,
                ..
            }
        ));
    }

    #[test]
    fn unknown_verb_and_flag_exit_2() {
        let (code, out, err) = run_with(&["frobnicate"], "");
        assert_eq!(code, EXIT_INPUT);
        assert!(out.is_empty());
        assert!(err.contains("Usage"));
        let (code, _, _) = run_with(&["validate", "--bogus"], "");
        assert_eq!(code, EXIT_INPUT);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_with(&["enumerate", "--help"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("--order"));
    }

    #[test]
    fn budget_flag_wins() {
        let c = parse_args(["qss", "--budget", "5", "enumerate", "--order", "2"]).unwrap();
        assert_eq!(c.budget, Some(5));
    }

    #[test]
    fn check_ss_from_stdin() {
        let (code, out, _) = run_with(&["check", "ss"], "3\n0 2 1\n2 1 0\n1 0 2\n");
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("CHECK ss stdin PASS"));
        let (code, out, _) = run_with(&["check", "ss", "-"], "3\n0 1 2\n1 2 0\n2 0 1\n");
        assert_eq!(code, EXIT_FALSE);
        assert!(out.contains("FAIL"));
    }

    #[test]
    fn validate_codes() {
        assert_eq!(run_with(&["validate"], "2\n0 1\n1 0\n").0, EXIT_OK);
        assert_eq!(run_with(&["validate"], "2\n0 0\n1 1\n").0, EXIT_FALSE);
        assert_eq!(run_with(&["validate"], "2\n0 1\n1\n").0, EXIT_INPUT);
        assert_eq!(
            run_with(&["validate", "/nonexistent/q.qgt"], "").0,
            EXIT_INPUT
        );
    }

    #[test]
    fn enumerate_count() {
        let (code, out, _) = run_with(&["enumerate", "--order", "4", "--count-only"], "");
        assert_eq!((code, out.as_str()), (EXIT_OK, "576\n"));
        let (code, _, _) = run_with(&["enumerate", "--order", "6", "--count-only"], "");
        assert_eq!(code, EXIT_BUDGET);
    }

    #[test]
    fn semisymmetrize_flag_conflicts() {
        let z2 = "2\n0 1\n1 0\n";
        assert_eq!(
            run_with(&["semisymmetrize", "--variant", "v12"], z2).0,
            EXIT_INPUT
        );
        assert_eq!(run_with(&["semisymmetrize", "--tagged"], z2).0, EXIT_INPUT);
        assert_eq!(
            run_with(
                &["semisymmetrize", "--functor", "nabla23", "--variant", "v12"],
                z2
            )
            .0,
            EXIT_INPUT
        );
        let (code, out, _) = run_with(&["semisymmetrize", "--functor", "gamma", "--tagged"], z2);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("#tag\n# 2\n# 0 1\n# 1 0\n"));
    }

    #[test]
    fn morph_needs_two_inputs() {
        let (code, _, err) = run_with(&["morph", "find-iso"], "1\n0\n");
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("exactly two"));
    }

    #[test]
    fn complete_homotopy_cli() {
        let two = "2\n0 1\n1 0\n---\n2\n0 1\n1 0\n";
        let (code, out, _) = run_with(
            &["morph", "complete-homotopy", "--f1", "1 0", "--f2", "0 1"],
            two,
        );
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1 0\n0 1\n1 0\n");
        let (code, _, _) = run_with(&["morph", "complete-homotopy", "--f1", "1 0"], two);
        assert_eq!(code, EXIT_INPUT);
    }
}
