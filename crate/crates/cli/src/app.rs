//! Argument definitions and command dispatch.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use suslin_core::check::Report;
use suslin_core::clifford::{self, GeneratorWord};
use suslin_core::epin::{self, EpinKind};
use suslin_core::spin::{self, SpinPair};
use suslin_core::suslin::{self, SuslinMatrix};
use suslin_core::{forms, Elem, Error, Ring, SuslinPair};

use crate::json::{mat_to_value, pair_to_value, read_mat, report_to_value};
use crate::suites::{run_suite, SampleRing, Suite, SuiteParams};
use crate::{CliError, EXIT_FAIL, EXIT_PASS};

#[derive(Parser, Debug)]
#[command(
    name = "suslin",
    version,
    about = "Suslin matrices, Clifford algebras and spin groups"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build or recognise Suslin matrices.
    #[command(subcommand)]
    Sus(SusCmd),
    /// The forms J and the involution *.
    #[command(subcommand)]
    Forms(FormsCmd),
    /// The matrix model of the Clifford algebra.
    #[command(subcommand)]
    Cl(ClCmd),
    /// Spin group membership and the twisted action.
    #[command(subcommand)]
    Spin(SpinCmd),
    /// Elementary spin groups and the vector representation.
    #[command(subcommand)]
    Epin(EpinCmd),
    /// Print a single constructed matrix as JSON.
    #[command(subcommand)]
    Emit(EmitCmd),
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum SusCmd {
    Gen(SusGenArgs),
    Extract {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum FormsCmd {
    #[command(name = "J")]
    J(JArgs),
    Star {
        #[arg(long)]
        n: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ClCmd {
    Phi(PhiArgs),
    Word {
        #[arg(long)]
        n: usize,
        /// Letters such as "e1 f2 e3".
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "1")]
        coeff: String,
        #[arg(long, default_value = "auto", value_parser = parse_ring_spec)]
        ring: RingSpec,
    },
}

#[derive(Subcommand, Debug)]
enum SpinCmd {
    Check(PairFiles),
    Act {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: PathBuf,
        #[arg(long = "S")]
        s: PathBuf,
    },
    D {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum EpinCmd {
    Gen(EpinGenArgs),
    Table1 {
        #[arg(long)]
        n: usize,
    },
    Pi(PairFiles),
    #[command(name = "verify-epin6")]
    VerifyEpin6,
}

#[derive(Subcommand, Debug)]
enum EmitCmd {
    Suslin(SusGenArgs),
    #[command(name = "J")]
    J(JArgs),
    Phi(PhiArgs),
    #[command(name = "epin-gen")]
    EpinGen(EpinGenArgs),
    Pi(PairFiles),
}

#[derive(Args, Debug)]
struct SusGenArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    v: String,
    #[arg(long)]
    w: String,
    #[arg(long, default_value = "auto", value_parser = parse_ring_spec)]
    ring: RingSpec,
}

#[derive(Args, Debug)]
struct PhiArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    v: String,
    #[arg(long)]
    w: String,
    #[arg(long, default_value = "auto", value_parser = parse_ring_spec)]
    ring: RingSpec,
}

#[derive(Args, Debug)]
struct JArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "int", value_parser = parse_ring_spec)]
    ring: RingSpec,
}

#[derive(Args, Debug)]
struct PairFiles {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    g1: PathBuf,
    #[arg(long)]
    g2: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Ee,
    Ff,
}

#[derive(Args, Debug)]
struct EpinGenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    j: usize,
    #[arg(long)]
    a: String,
    /// Conjugate by u = antidiag(I, I).
    #[arg(long)]
    primed: bool,
    #[arg(long, default_value = "auto", value_parser = parse_ring_spec)]
    ring: RingSpec,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// A single n or an inclusive range a..b.
    #[arg(long, value_parser = parse_n_range)]
    n: Option<(usize, usize)>,
    /// Ring for sampled checks: auto, int, mod:N or poly (symbolic only).
    #[arg(long, default_value = "auto", value_parser = parse_ring_spec)]
    ring: RingSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Include wall time in the report.
    #[arg(long)]
    timings: bool,
    /// Lift the default caps on n.
    #[arg(long)]
    no_cap: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Auto,
    Int,
    Mod(u64),
    Poly,
}

pub fn parse_ring_spec(s: &str) -> Result<RingSpec, String> {
    match s {
        "auto" => Ok(RingSpec::Auto),
        "int" => Ok(RingSpec::Int),
        "poly" => Ok(RingSpec::Poly),
        _ => {
            let m = s
                .strip_prefix("mod:")
                .ok_or_else(|| format!("expected auto, int, poly or mod:N, got {s:?}"))?;
            let m: u64 = m.parse().map_err(|e| format!("bad modulus {m:?}: {e}"))?;
            if m < 2 {
                return Err(format!("modulus must be at least 2, got {m}"));
            }
            Ok(RingSpec::Mod(m))
        }
    }
}

pub fn parse_n_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad n {t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => num(s).map(|n| (n, n)),
    }
}

/// Identifiers in `texts`, deduplicated, in natural order (`a2 < a10`).
pub fn identifiers<'a>(texts: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for text in texts {
        let mut chars = text.char_indices().peekable();
        while let Some((start, c)) = chars.next() {
            if !(c.is_ascii_alphabetic() || c == '_') {
                continue;
            }
            let mut end = start + c.len_utf8();
            while let Some(&(k, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = k + d.len_utf8();
                chars.next();
            }
            let name = &text[start..end];
            if name != "mod" && !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
    }
    names.sort_by(|a, b| natural_key(a).cmp(&natural_key(b)));
    names
}

fn natural_key(name: &str) -> (&str, u64, &str) {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (stem, digits) = name.split_at(split);
    (stem, digits.parse().unwrap_or(0), digits)
}

pub fn resolve_ring(spec: &RingSpec, texts: &[&str]) -> Result<Ring, CliError> {
    Ok(match spec {
        RingSpec::Int => Ring::Integer,
        RingSpec::Mod(m) => Ring::modular(*m)?,
        RingSpec::Poly => Ring::poly(identifiers(texts.iter().copied()))?,
        RingSpec::Auto => {
            let names = identifiers(texts.iter().copied());
            if names.is_empty() {
                Ring::Integer
            } else {
                Ring::poly(names)?
            }
        }
    })
}

fn parse_elem(ring: &Ring, text: &str, offset: usize) -> Result<Elem, CliError> {
    ring.parse(text).map_err(|e| match e {
        Error::Parse { pos, msg } => CliError::Core(Error::Parse { pos: pos + offset, msg }),
        other => other.into(),
    })
}

/// Comma-separated elements; parse errors report byte offsets into `text`.
pub fn parse_vector(ring: &Ring, text: &str) -> Result<Vec<Elem>, CliError> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(',') {
        out.push(parse_elem(ring, piece, start)?);
        start += piece.len() + 1;
    }
    Ok(out)
}

fn read_pair(ring: &RingSpec, m: usize, v: &str, w: &str) -> Result<SuslinPair, CliError> {
    let ring = resolve_ring(ring, &[v, w])?;
    let (v, w) = (parse_vector(&ring, v)?, parse_vector(&ring, w)?);
    if v.len() != m || w.len() != m {
        return Err(CliError::Usage(format!(
            "expected {m} entries in --v and --w, got {} and {}",
            v.len(),
            w.len()
        )));
    }
    Ok(SuslinPair::new(v, w)?)
}

fn print(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("JSON value serializes");
    writeln!(out, "{text}").map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

fn print_report(out: &mut dyn Write, report: &Report, seed: u64, ms: Option<u128>) -> Result<i32, CliError> {
    print(out, &report_to_value(report, seed, ms))?;
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn spin_pair(files: &PairFiles) -> Result<SpinPair, CliError> {
    Ok(SpinPair::new(files.n, read_mat(&files.g1)?, read_mat(&files.g2)?)?)
}

fn sus_gen(a: &SusGenArgs) -> Result<Value, CliError> {
    Ok(mat_to_value(&suslin::sus(&read_pair(&a.ring, a.m, &a.v, &a.w)?)))
}

fn forms_j(a: &JArgs) -> Result<Value, CliError> {
    Ok(mat_to_value(&forms::form_j(&resolve_ring(&a.ring, &[])?, a.n)))
}

fn cl_phi(a: &PhiArgs) -> Result<Value, CliError> {
    Ok(mat_to_value(clifford::phi(&read_pair(&a.ring, a.n, &a.v, &a.w)?).mat()))
}

fn epin_gen(a: &EpinGenArgs) -> Result<Value, CliError> {
    let ring = resolve_ring(&a.ring, &[&a.a])?;
    let x = parse_elem(&ring, &a.a, 0)?;
    let kind = match a.kind {
        KindArg::Ee => EpinKind::EE,
        KindArg::Ff => EpinKind::FF,
    };
    let g = if a.primed {
        epin::epin_gen_primed(kind, a.i, a.j, &x, a.n)?
    } else {
        epin::epin_gen(kind, a.i, a.j, &x, a.n)?
    };
    Ok(mat_to_value(g.mat()))
}

fn epin_pi(files: &PairFiles) -> Result<Value, CliError> {
    Ok(mat_to_value(epin::pi(&spin_pair(files)?)?.mat()))
}

pub fn dispatch(cli: Cli, seed_env: Option<&str>, out: &mut dyn Write) -> Result<i32, CliError> {
    let value = match cli.cmd {
        Cmd::Sus(SusCmd::Gen(a)) | Cmd::Emit(EmitCmd::Suslin(a)) => sus_gen(&a)?,
        Cmd::Sus(SusCmd::Extract { input }) => match suslin::extract(&read_mat(&input)?) {
            Some(p) => pair_to_value(&p),
            None => {
                print(out, &json!("not-suslin"))?;
                return Ok(EXIT_FAIL);
            }
        },
        Cmd::Forms(FormsCmd::J(a)) | Cmd::Emit(EmitCmd::J(a)) => forms_j(&a)?,
        Cmd::Forms(FormsCmd::Star { n, input }) => mat_to_value(&forms::star(&read_mat(&input)?, n)?),
        Cmd::Cl(ClCmd::Phi(a)) | Cmd::Emit(EmitCmd::Phi(a)) => cl_phi(&a)?,
        Cmd::Cl(ClCmd::Word { n, word, coeff, ring }) => {
            let ring = resolve_ring(&ring, &[&coeff])?;
            let c = parse_elem(&ring, &coeff, 0)?;
            mat_to_value(GeneratorWord::parse(&word, c)?.eval(n)?.mat())
        }
        Cmd::Spin(SpinCmd::Check(files)) => {
            let x = spin_pair(&files)?;
            let in_spin = spin::in_spin(&x);
            print(
                out,
                &json!({ "n": files.n, "in_u0": spin::in_u0(&x), "in_spin": in_spin }),
            )?;
            return Ok(if in_spin { EXIT_PASS } else { EXIT_FAIL });
        }
        Cmd::Spin(SpinCmd::Act { n, g, s }) => {
            let s = SuslinMatrix::from_mat(&read_mat(&s)?)
                .ok_or_else(|| CliError::Usage(String::from("--S is not a Suslin matrix")))?;
            mat_to_value(spin::spin_action(&read_mat(&g)?, &s, n)?.mat())
        }
        Cmd::Spin(SpinCmd::D { n, g }) => json!({ "d": spin::norm_d(&read_mat(&g)?, n)?.to_string() }),
        Cmd::Epin(EpinCmd::Gen(a)) | Cmd::Emit(EmitCmd::EpinGen(a)) => epin_gen(&a)?,
        Cmd::Epin(EpinCmd::Table1 { n }) => return print_report(out, &epin::table1_check(n)?, 0, None),
        Cmd::Epin(EpinCmd::Pi(files)) | Cmd::Emit(EmitCmd::Pi(files)) => epin_pi(&files)?,
        Cmd::Epin(EpinCmd::VerifyEpin6) => return print_report(out, &epin::epin6_equals_e4_check()?, 0, None),
        Cmd::Verify(a) => return verify(a, seed_env, out),
    };
    print(out, &value)?;
    Ok(EXIT_PASS)
}

fn verify(a: VerifyArgs, seed_env: Option<&str>, out: &mut dyn Write) -> Result<i32, CliError> {
    let seed = match seed_env {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|e| CliError::Usage(format!("bad SUSLIN_SEED {s:?}: {e}")))?,
        None => a.seed,
    };
    let ring = match a.ring {
        RingSpec::Auto => SampleRing::Auto,
        RingSpec::Int => SampleRing::Integer,
        RingSpec::Mod(m) => SampleRing::Modular(m),
        RingSpec::Poly => SampleRing::Poly,
    };
    let params = SuiteParams {
        n: a.n,
        ring,
        seed,
        samples: a.samples,
        no_cap: a.no_cap,
    };
    let start = Instant::now();
    let report = run_suite(a.suite, &params)?;
    let ms = a.timings.then(|| start.elapsed().as_millis());
    print_report(out, &report, seed, ms)
}
