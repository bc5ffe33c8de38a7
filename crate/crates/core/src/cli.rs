//! The `upq-packets` command line: argument parsing, dispatch, and JSON or
//! ASCII rendering. Exit codes: 0 ok, 2 bad input, 3 internal inconsistency
//! or a failed verification.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cohind::{range_class, InductionDescriptor, RangeClass, ThetaData};
use crate::error::Error;
use crate::halfint::HalfInt;
use crate::oracle::{sweep_verify, SweepConfig};
use crate::packets::{
    d_zero, lowest_weight_of_packet, member, packet, packet_case, packets_containing, AParameter,
    Invariants, PacketCase, PacketMember, Summand,
};
use crate::tableaux::NormalizeOutcome;
use crate::weights::{unitarity_class, GroupSignature, KWeight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "upq-packets", version, about = "A-packets and unitary lowest weight modules of U(p,q)")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputMode::Json, global = true)]
    pub output: OutputMode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Json,
    Ascii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Whether the packet of a parameter holds a unitary lowest weight module.
    ClassifyPsi {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Summands as JSON, e.g. '[{"t":0,"a":2}]'.
        #[arg(long)]
        psi: String,
    },
    /// Every good parameter whose packet holds the lowest weight module.
    ClassifyLambda {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// The lowest K-type as a JSON integer list, e.g. '[1,-1]'.
        #[arg(long)]
        lambda: String,
    },
    /// Every member of a packet with its sign character and invariants.
    Packet {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        psi: String,
    },
    /// Normalize an explicit induction and show its invariants.
    Tableau {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Blocks as JSON pairs, e.g. '[[1,0],[0,1]]'.
        #[arg(long)]
        blocks: String,
        /// One integer value per block, e.g. '[1,-1]'.
        #[arg(long)]
        values: String,
    },
    /// Compare the closed forms with the tableau oracle exhaustively.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Bound on `|λ_i|`.
        #[arg(long)]
        window: i64,
        /// Bound on the entries of infinitesimal characters.
        #[arg(long, default_value_t = 4)]
        char_window: i64,
    },
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::SignatureMismatch { .. } => "signature_mismatch",
        Error::NotUnitarizable(_) => "not_unitarizable",
        Error::OutsideHypotheses(_) => "outside_hypotheses",
        Error::RewriteUnavailable(_) => "rewrite_unavailable",
        Error::NotInPacket(_) => "not_in_packet",
        Error::IterationCap(_) => "iteration_cap",
        Error::Inconsistency(_) => "inconsistency",
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistency(_) | Error::IterationCap(_) => EXIT_INTERNAL,
        _ => EXIT_BAD_INPUT,
    }
}

fn error_outcome(kind: &str, message: String, code: i32) -> Outcome {
    let body = json!({ "error": { "kind": kind, "message": message } });
    Outcome {
        code,
        stdout: pretty(&body),
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output types serialize") + "\n"
}

fn parse_json<T: serde::de::DeserializeOwned>(flag: &str, text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("--{flag}: {e}")))
}

fn parse_psi(p: usize, q: usize, text: &str) -> Result<AParameter, Error> {
    let summands: Vec<Summand> = parse_json("psi", text)?;
    AParameter::new(GroupSignature::new(p, q)?, summands)
}

#[derive(Serialize)]
struct ClassifyPsi {
    psi: AParameter,
    contains: bool,
    lowest_k_type: Option<Vec<i64>>,
    case: Option<PacketCase>,
    d0: crate::packets::DZero,
    epsilon: Vec<i8>,
    tableaux: Option<Invariants>,
}

#[derive(Serialize)]
struct TableauView {
    descriptor: InductionDescriptor,
    range: RangeClass,
    outcome: NormalizeOutcome,
}

enum Rendered {
    Json(String),
    Ascii(String),
}

fn render<T: Serialize>(mode: OutputMode, value: &T, ascii: impl FnOnce() -> String) -> Rendered {
    match mode {
        OutputMode::Json => Rendered::Json(pretty(value)),
        OutputMode::Ascii => Rendered::Ascii(ascii()),
    }
}

fn ascii_invariants(inv: &Option<Invariants>) -> String {
    match inv {
        None => "zero\n".to_string(),
        Some(i) => format!("Ann:\n{}\nAS:\n{}\n", i.ann, i.as_tab),
    }
}

fn ascii_member(m: &PacketMember) -> String {
    format!(
        "d = {:?}, values = {:?}, epsilon = {:?}\n{}",
        m.d.blocks(),
        m.descriptor.values(),
        m.epsilon,
        ascii_invariants(&m.invariants)
    )
}

fn classify_psi(mode: OutputMode, p: usize, q: usize, text: &str) -> Result<(Rendered, i32), Error> {
    let psi = parse_psi(p, q, text)?;
    let lw = lowest_weight_of_packet(&psi)?;
    let dz = d_zero(&psi);
    let m = member(&psi, &dz.d0)?;
    let view = ClassifyPsi {
        contains: lw.is_some(),
        lowest_k_type: lw.as_ref().map(|w| w.lambda().to_vec()),
        case: packet_case(&psi),
        epsilon: m.epsilon.clone(),
        tableaux: m.invariants.clone(),
        d0: dz,
        psi: psi.clone(),
    };
    let out = render(mode, &view, || {
        let head = match &lw {
            Some(w) => format!("{psi}: contains the lowest weight module with lowest K-type {w}\n"),
            None => format!("{psi}: contains no unitary lowest weight module\n"),
        };
        format!(
            "{head}d0 = {:?}, epsilon = {:?}\n{}",
            view.d0.d0.blocks(),
            view.epsilon,
            ascii_invariants(&view.tableaux)
        )
    });
    Ok((out, EXIT_OK))
}

fn classify_lambda(mode: OutputMode, p: usize, q: usize, text: &str) -> Result<(Rendered, i32), Error> {
    let lam: Vec<i64> = parse_json("lambda", text)?;
    let w = KWeight::new(p, q, lam)?;
    if !unitarity_class(&w).is_unitarizable() {
        return Err(Error::NotUnitarizable(w.to_string()));
    }
    let found = packets_containing(&w)?;
    let out = render(mode, &found, || {
        found.iter().map(|psi| format!("{psi}\n")).collect()
    });
    Ok((out, EXIT_OK))
}

fn packet_cmd(mode: OutputMode, p: usize, q: usize, text: &str) -> Result<(Rendered, i32), Error> {
    let psi = parse_psi(p, q, text)?;
    let members = packet(&psi)?;
    let out = render(mode, &members, || members.iter().map(ascii_member).collect::<Vec<_>>().join("\n"));
    Ok((out, EXIT_OK))
}

fn tableau_cmd(
    mode: OutputMode,
    p: usize,
    q: usize,
    blocks: &str,
    values: &str,
) -> Result<(Rendered, i32), Error> {
    let blocks: Vec<(usize, usize)> = parse_json("blocks", blocks)?;
    let values: Vec<i64> = parse_json("values", values)?;
    let d = ThetaData::with_sig(GroupSignature::new(p, q)?, blocks)?;
    let descriptor = InductionDescriptor::new(d, values)?;
    let view = TableauView {
        range: range_class(&descriptor),
        outcome: descriptor.normalize()?,
        descriptor,
    };
    let out = render(mode, &view, || match &view.outcome {
        NormalizeOutcome::Zero => "zero\n".to_string(),
        NormalizeOutcome::NonZero { stack, ann, as_tab } => {
            format!("{}\nAnn:\n{ann}\nAS:\n{as_tab}\n", stack.render_ascii())
        }
    });
    Ok((out, EXIT_OK))
}

fn verify_cmd(mode: OutputMode, max_n: usize, window: i64, char_window: i64) -> Result<(Rendered, i32), Error> {
    let cfg = SweepConfig::new(max_n, window, HalfInt::from_int(char_window))?;
    let report = sweep_verify(&cfg);
    let code = if report.passed() && report.property_failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };
    let out = render(mode, &report, || {
        format!(
            "instances checked: {}\nmismatches: {}\nproperty failures: {}\n",
            report.instances_checked,
            report.mismatches.len(),
            report.property_failures.len()
        )
    });
    Ok((out, code))
}

/// Parse `args` (including the program name) and run the request.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                },
                _ => error_outcome("usage", e.to_string().trim_end().to_string(), EXIT_BAD_INPUT),
            };
        }
    };
    let mode = cli.output;
    let res = match &cli.command {
        Command::ClassifyPsi { p, q, psi } => classify_psi(mode, *p, *q, psi),
        Command::ClassifyLambda { p, q, lambda } => classify_lambda(mode, *p, *q, lambda),
        Command::Packet { p, q, psi } => packet_cmd(mode, *p, *q, psi),
        Command::Tableau { p, q, blocks, values } => tableau_cmd(mode, *p, *q, blocks, values),
        Command::Verify {
            max_n,
            window,
            char_window,
        } => verify_cmd(mode, *max_n, *window, *char_window),
    };
    match res {
        Ok((Rendered::Json(s) | Rendered::Ascii(s), code)) => Outcome { code, stdout: s },
        Err(e) => error_outcome(error_kind(&e), e.to_string(), exit_code(&e)),
    }
}
