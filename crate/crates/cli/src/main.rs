mod args;
mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use burkhardt::algebra::FieldDesc;
use burkhardt::suite::DEFAULT_QS;
use burkhardt::zeta::DEFAULT_SCAN_CAP;
use burkhardt::Error;

use commands::{CountKind, Report, Scope};

#[derive(Parser)]
#[command(name = "burkhardt", version, about = "Exact computations on the Burkhardt quartic")]
struct Cli {
    /// Only list failures and summaries.
    #[arg(long, global = true)]
    quiet: bool,
    /// JSON output (the only format).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites.
    Verify {
        #[arg(value_enum, default_value = "all")]
        scope: Scope,
        /// Field sizes for the zeta suite.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_QS)]
        qs: Vec<u64>,
        /// Largest q^n counted in the zeta suite.
        #[arg(long, default_value_t = 256)]
        max_order: u64,
    },
    /// Count points over GF(q^n).
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, group = "kind")]
        off_hessian: bool,
        #[arg(long, group = "kind")]
        nodes: bool,
        #[arg(long, group = "kind")]
        hessian_intersection: bool,
        /// Scan every point of P^4 instead of the stratified count.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
        cap: u128,
    },
    /// Zeta function over GF(q).
    Zeta {
        #[arg(long)]
        q: u64,
        /// The small resolution instead of B.
        #[arg(long)]
        desing: bool,
        /// Number of predicted counts to list.
        #[arg(long, default_value_t = 3)]
        terms: u32,
    },
    /// Evaluate phi at an affine point or psi at a point of B.
    Param {
        #[arg(long, group = "map")]
        phi: Option<String>,
        #[arg(long, group = "map")]
        psi: Option<String>,
        #[arg(long, default_value = "0")]
        field: String,
    },
    /// Genus-2 curve and level-3 certificates at a point.
    Curve {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "0")]
        field: String,
    },
    /// Cubic cover of a j-plane from a point.
    Cover {
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value = "0")]
        field: String,
        #[arg(long, default_value = "J1")]
        plane: String,
    },
    /// Off-Hessian points over GF(q) with curve summaries.
    Scan {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
        cap: u128,
    },
    /// Nodes of B over GF(q).
    Nodes {
        #[arg(long)]
        q: u64,
    },
}

fn with_field<T>(
    text: &str,
    q: impl FnOnce(&FieldDesc, &burkhardt::algebra::Rationals) -> T,
    f: impl FnOnce(&FieldDesc, &burkhardt::algebra::gf::FiniteField) -> T,
) -> burkhardt::Result<T> {
    let desc = args::parse_field(text)?;
    Ok(match &desc {
        FieldDesc::Rationals => q(&desc, &burkhardt::algebra::Rationals),
        FieldDesc::Finite(ff) => f(&desc, ff),
    })
}

fn run(cli: &Cli) -> burkhardt::Result<Report> {
    match &cli.command {
        Command::Verify { scope, qs, max_order } => {
            for &q in qs {
                args::parse_q(q)?;
            }
            commands::verify(*scope, qs, *max_order, cli.quiet)
        }
        Command::Count { q, n, off_hessian, nodes, hessian_intersection, brute, cap } => {
            let kind = if *off_hessian {
                CountKind::OffHessian
            } else if *nodes {
                CountKind::Nodes
            } else if *hessian_intersection {
                CountKind::HessianIntersection
            } else {
                CountKind::Burkhardt
            };
            args::parse_q(*q)?;
            commands::count(*q, *n, kind, *brute, *cap)
        }
        Command::Zeta { q, desing, terms } => {
            args::parse_q(*q)?;
            commands::zeta(*q, *desing, *terms)
        }
        Command::Param { phi, psi, field } => match (phi, psi) {
            (Some(t), _) => with_field(field, |_, r| commands::param_phi(r, t), |_, f| commands::param_phi(f, t))?,
            (_, Some(y)) => with_field(field, |_, r| commands::param_psi(r, y), |_, f| commands::param_psi(f, y))?,
            _ => Err(Error::Precondition("one of --phi, --psi is required".into())),
        },
        Command::Curve { alpha, field } => {
            with_field(field, |d, r| commands::curve(d, r, alpha), |d, f| commands::curve(d, f, alpha))?
        }
        Command::Cover { alpha, field, plane } => with_field(
            field,
            |_, r| commands::cover(r, alpha, plane),
            |_, f| commands::cover(f, alpha, plane),
        )?,
        Command::Scan { q, cap } => {
            args::parse_q(*q)?;
            commands::scan(*q, *cap, cli.quiet)
        }
        Command::Nodes { q } => {
            args::parse_q(*q)?;
            commands::nodes(*q, cli.quiet)
        }
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::NotPrime(_) | Error::InvalidField(_) | Error::ReducibleModulus(..) | Error::FieldTooLarge(_) => {
            "invalid_field"
        }
        Error::CharacteristicThree | Error::UnsupportedCharacteristic(..) => "unsupported_characteristic",
        Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::VariableMismatch(_) => "parse",
        Error::NotOnQuartic => "not_on_quartic",
        Error::OnHessian => "on_hessian",
        Error::BaseLocus => "base_locus",
        Error::Coordinate(_) => "coordinate",
        Error::Degenerate { .. } => "degenerate",
        Error::CapExceeded { .. } => "cap_exceeded",
        _ => "precondition",
    }
}

fn init_workers() {
    if let Some(n) = std::env::var("BURKHARDT_WORKERS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // A second initialization only fails if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn emit(v: &serde_json::Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    // A closed pipe is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_workers();
    match run(&cli) {
        Ok(report) => {
            emit(&report.value);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let mut err = json!({"error": {"kind": kind(&e), "message": e.to_string()}});
            if let Error::Degenerate { label, .. } = &e {
                err["error"]["label"] = json!(label);
            }
            emit(&err);
            ExitCode::from(2)
        }
    }
}
