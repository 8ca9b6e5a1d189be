//! `qtcat`: coefficient tables, identity checks and bijection conversions
//! for Dyck paths counted by area and rank.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
//! 3 size beyond a documented cap.

mod checks;
mod convert;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qtcat_core::polynomials::{
    dy_poly_enum, gamma_expand_plain, gamma_expand_refined, motzkin_poly, BiPoly, GammaExpansion,
    PolyTable,
};
use qtcat_core::{absolute_order, type_b, Error};

#[derive(Parser)]
#[command(
    name = "qtcat",
    version,
    about = "Dyck paths by area and rank: tables, checks and conversions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a coefficient matrix (rows: t-degree, columns: q-degree).
    ///
    /// Caps: dyck and motzkin n <= 14, sn n <= 9, ncb-rank n <= 7.
    Poly {
        kind: PolyKind,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand Dy(n; q, t) in t^j (1 + qt)^(n-1-2j), or Dy(n; 1, t) in
    /// t^j (1 + t)^(n-1-2j) with --plain.
    ///
    /// Cap: n <= 14.
    Gamma {
        n: usize,
        #[arg(long, conflicts_with = "refined")]
        plain: bool,
        #[arg(long)]
        refined: bool,
    },
    /// Verify an identity at size n; prints a JSON verdict and, on failure,
    /// the smallest offending object.
    ///
    /// Caps: recurrence, carlitz, cf, sbd n <= 14; corollary n <= 8;
    /// conjecture n <= 9; sbd-b n <= 6.
    Check { kind: CheckKind, n: usize },
    /// Show every representation of one object: a Dyck path (UUDD), a
    /// partition ({1,4}{2,3}, signed blocks for type B), a word (bre) or a
    /// permutation in one-line notation (4321).
    Convert { kind: ConvertKind, value: String },
    /// Check a binomial identity.
    Identity { kind: IdentityKind, n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Dyck,
    Motzkin,
    Sn,
    NcbRank,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
pub(crate) enum CheckKind {
    Recurrence,
    Carlitz,
    Cf,
    Corollary,
    Sbd,
    SbdB,
    Conjecture,
}

#[derive(Clone, Copy, ValueEnum)]
pub(crate) enum ConvertKind {
    Path,
    Partition,
    Suword,
    Perm,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityKind {
    CatalanB,
}

/// Outcome of a command that ran to completion.
pub(crate) enum Outcome {
    Success,
    CheckFailed,
}

fn poly(kind: PolyKind, n: usize) -> Result<BiPoly, Error> {
    match kind {
        PolyKind::Dyck => dy_poly_enum(n),
        PolyKind::Motzkin => motzkin_poly(n),
        PolyKind::Sn => absolute_order::sn_joint_poly(n),
        PolyKind::NcbRank => type_b::rank_gf_b(n).map(|p| BiPoly::from_t_poly(&p)),
    }
}

fn print_gamma(g: &GammaExpansion, var: &str) {
    println!("degree: {}", g.degree());
    for (j, c) in g.gammas().iter().enumerate() {
        println!("gamma_{j}: {}", c.format_in(var));
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Poly { kind, n, format } => {
            let table = PolyTable::new(n, &poly(kind, n)?)?;
            match format {
                Format::Json => println!("{}", table.to_json()),
                Format::Csv => print!("{}", table.to_csv()),
                Format::Text => print!("{}", table.to_text()),
            }
            Ok(Outcome::Success)
        }
        Command::Gamma { n, plain, .. } => {
            if plain {
                if n == 0 {
                    return Err(Error::Invalid("expansion needs n >= 1".into()));
                }
                let g = gamma_expand_plain(&dy_poly_enum(n)?.at_q_one(), n - 1)?;
                print_gamma(&g, "q");
            } else {
                print_gamma(&gamma_expand_refined(n)?, "q");
            }
            Ok(Outcome::Success)
        }
        Command::Check { kind, n } => checks::run(kind, n),
        Command::Convert { kind, value } => convert::run(kind, &value),
        Command::Identity {
            kind: IdentityKind::CatalanB,
            n,
        } => {
            let lhs = qtcat_core::polynomials::numbers::binomial(2 * n, n);
            let pass = type_b::catalan_b_identity(n);
            println!("binom({}, {n}) = {lhs}", 2 * n);
            println!(
                "sum_i binom({n}, i) binom({n} - i, i) 2^({n} - 2i): {}",
                if pass { "equal" } else { "different" }
            );
            Ok(if pass {
                Outcome::Success
            } else {
                Outcome::CheckFailed
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity { .. } => 3,
                Error::Consistency(_) => 1,
                Error::Invalid(_) | Error::Parse { .. } => 2,
            })
        }
    }
}
