//! Command line interface for the twisted-chains moduli engine.
//!
//! Every subcommand computes one report and prints it to stdout in the
//! requested format; diagnostics and timing go to stderr.  Reports carry
//! no timing data, so output is deterministic for a fixed input and
//! version.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 unverified
//! component under --strict.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use twisted_chains::chain::ChainLabel;
use twisted_chains::localization::series_report;
use twisted_chains::poly::{MotivicClass, PoincarePoly};
use twisted_chains::report::{
    dimension_report, oracle_report, sigma_report, stratum_report, BettiReport, ComponentsReport,
    DimensionReport, OracleReport, RationalRepr, SigmaReport, StratumReport,
};
use twisted_chains::splitting::SplittingType;

#[derive(Parser)]
#[command(
    name = "twisted-chains",
    version,
    about = "Exact moduli computations for twisted holomorphic chains on the projective line",
    allow_negative_numbers = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for the report on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Fail (exit 3) when any component class is unverified.
    #[arg(long, global = true)]
    strict: bool,

    /// Enumeration budget for the finite-field oracle.
    #[arg(long, global = true, value_name = "N")]
    oracle_budget: Option<u64>,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Poincare series of the rank-r, degree-d moduli with twist t.
    #[command(allow_negative_numbers = true)]
    Betti { rank: u32, degree: i64, twist: u32 },

    /// Per-labelling table of fixed components with classes and strata.
    #[command(allow_negative_numbers = true)]
    Components { rank: u32, degree: i64, twist: u32 },

    /// Closure geometry and class of one splitting stratum.
    Stratum {
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        twist: u32,
        /// Summand degrees of one rank > 1 node, e.g. "0,-1"; repeat the
        /// flag once per such node, in node order.
        #[arg(long = "splitting", required = true, allow_hyphen_values = true)]
        splittings: Vec<String>,
    },

    /// Expected moduli dimension of a labelling.
    Dimension {
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        twist: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        /// Explicit h0(End U_i) values, one per node.
        #[arg(long = "h0-end", value_delimiter = ',', allow_hyphen_values = true)]
        h0_end: Option<Vec<u64>>,
    },

    /// Stability parameters of an argyle labelling: sigma vector,
    /// determinant check, pullback line bundle degrees.
    Sigma {
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        twist: u32,
    },

    /// Exhaustive finite-field count of form tuples with a common zero,
    /// compared against the closed-form class.
    Oracle {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long)]
        q: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, twisted_chains::error::Error> {
    let start = Instant::now();
    let mut warnings: Vec<String> = Vec::new();
    let mut unverified = 0usize;
    let payload = match &cli.command {
        Command::Betti { rank, degree, twist } => {
            let run = series_report(*rank, *degree, *twist)?;
            let report = BettiReport::from_series(&run);
            warnings = report.warnings.clone();
            unverified = report.unverified_components;
            render(cli.format, &report, betti_text, betti_csv)
        }
        Command::Components { rank, degree, twist } => {
            let run = series_report(*rank, *degree, *twist)?;
            let report = ComponentsReport::from_series(&run);
            warnings = report.warnings.clone();
            unverified = report.components.iter().filter(|c| c.unverified).count();
            render(cli.format, &report, components_text, components_csv)
        }
        Command::Stratum { ranks, degrees, twist, splittings } => {
            let label = ChainLabel::on_line(ranks.clone(), degrees.clone(), *twist)?;
            let mut middle = Vec::with_capacity(splittings.len());
            for raw in splittings {
                middle.push(parse_splitting(raw)?);
            }
            let report = stratum_report(&label, &middle)?;
            warnings = report.warnings.clone();
            render(cli.format, &report, stratum_text, stratum_csv)
        }
        Command::Dimension { ranks, degrees, twist, genus, h0_end } => {
            let label = ChainLabel::new(ranks.clone(), degrees.clone(), *twist, *genus)?;
            let report = dimension_report(&label, h0_end.as_deref())?;
            render(cli.format, &report, dimension_text, dimension_csv)
        }
        Command::Sigma { ranks, degrees, twist } => {
            let label = ChainLabel::on_line(ranks.clone(), degrees.clone(), *twist)?;
            let report = sigma_report(&label)?;
            render(cli.format, &report, sigma_text, sigma_csv)
        }
        Command::Oracle { degrees, q } => {
            let report = oracle_report(degrees, *q, cli.oracle_budget)?;
            render(cli.format, &report, oracle_text, oracle_csv)
        }
    };

    match &cli.out {
        Some(path) => std::fs::write(path, &payload)
            .map_err(|e| twisted_chains::error::Error::InvalidInput(format!("{}: {e}", path.display())))?,
        None => print!("{payload}"),
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    eprintln!("# completed in {:.1?}", start.elapsed());
    if cli.strict && unverified > 0 {
        eprintln!("error: {unverified} unverified component(s) under --strict");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_splitting(raw: &str) -> Result<SplittingType, twisted_chains::error::Error> {
    let mut parts = Vec::new();
    for piece in raw.split(',') {
        let piece = piece.trim();
        let value: i64 = piece.parse().map_err(|_| {
            twisted_chains::error::Error::InvalidInput(format!(
                "--splitting expects comma-separated integers, got {raw:?}"
            ))
        })?;
        parts.push(value);
    }
    SplittingType::from_parts(&parts)
}

fn render<R: serde::Serialize>(
    format: Format,
    report: &R,
    text: impl Fn(&R) -> String,
    csv: impl Fn(&R) -> String,
) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(report),
        Format::Csv => csv(report),
    }
}

fn join<T: Display>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// Compact polynomial rendering: the display form with spaces removed.
fn compact_x(p: &PoincarePoly) -> String {
    p.to_string().replace(' ', "")
}

fn compact_q(c: &MotivicClass) -> String {
    c.to_string().replace(' ', "")
}

fn rational(r: &RationalRepr) -> String {
    if r.den == "1" {
        r.num.clone()
    } else {
        format!("{}/{}", r.num, r.den)
    }
}

fn rationals(rs: &[RationalRepr], sep: &str) -> String {
    rs.iter().map(rational).collect::<Vec<_>>().join(sep)
}

fn splitting_list(splittings: &[SplittingType]) -> String {
    splittings
        .iter()
        .map(|s| s.describe())
        .collect::<Vec<_>>()
        .join("|")
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv header");
    for row in rows {
        w.write_record(&row).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}

fn betti_text(r: &BettiReport) -> String {
    format!(
        "rank: {}\ndegree: {}\ntwist: {}\neuler_characteristic: {}\ncomponents: {}\nunverified_components: {}\nseries: {}\n",
        r.rank,
        r.degree,
        r.twist,
        r.euler_characteristic,
        r.component_count,
        r.unverified_components,
        compact_x(&r.series)
    )
}

fn betti_csv(r: &BettiReport) -> String {
    let rows = r
        .series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                r.rank.to_string(),
                r.degree.to_string(),
                r.twist.to_string(),
                i.to_string(),
                c.to_string(),
                r.euler_characteristic.clone(),
                r.component_count.to_string(),
                r.unverified_components.to_string(),
            ]
        })
        .collect();
    csv_rows(
        &[
            "rank",
            "degree",
            "twist",
            "exponent",
            "coefficient",
            "euler_characteristic",
            "component_count",
            "unverified_components",
        ],
        rows,
    )
}

fn components_text(r: &ComponentsReport) -> String {
    let mut out = format!("rank: {}\ndegree: {}\ntwist: {}\n", r.rank, r.degree, r.twist);
    for c in &r.components {
        out.push_str(&format!(
            "component: ranks=({}) degrees=({}) beta={} palindromic={} unverified={} class={}\n",
            join(&c.ranks, ","),
            join(&c.degrees, ","),
            c.beta,
            c.palindromic,
            c.unverified,
            compact_q(&c.class)
        ));
        for s in &c.strata {
            out.push_str(&format!(
                "  stratum: splittings={} geometry={} class={}\n",
                splitting_list(&s.splittings),
                s.geometry,
                compact_q(&s.class)
            ));
        }
    }
    out
}

fn components_csv(r: &ComponentsReport) -> String {
    let mut rows = Vec::new();
    for c in &r.components {
        let base = vec![
            r.rank.to_string(),
            r.degree.to_string(),
            r.twist.to_string(),
            join(&c.ranks, ";"),
            join(&c.degrees, ";"),
            c.beta.to_string(),
            join(c.class.coeffs(), ";"),
            c.palindromic.to_string(),
            c.unverified.to_string(),
        ];
        if c.strata.is_empty() {
            let mut row = base.clone();
            row.extend([String::new(), String::new(), String::new()]);
            rows.push(row);
        }
        for s in &c.strata {
            let mut row = base.clone();
            row.extend([
                splitting_list(&s.splittings),
                s.geometry.clone(),
                join(s.class.coeffs(), ";"),
            ]);
            rows.push(row);
        }
    }
    csv_rows(
        &[
            "rank",
            "degree",
            "twist",
            "ranks",
            "degrees",
            "beta",
            "class",
            "palindromic",
            "unverified",
            "splittings",
            "geometry",
            "stratum_class",
        ],
        rows,
    )
}

fn stratum_text(r: &StratumReport) -> String {
    format!(
        "ranks: {}\ndegrees: {}\ntwist: {}\nsplittings: {}\ngeometry: {}\nclass: {}\ngeometry_dimension: {}\nformula_dimension: {}\n",
        join(&r.ranks, ","),
        join(&r.degrees, ","),
        r.twist,
        splitting_list(&r.splittings),
        r.geometry,
        compact_q(&r.class),
        r.geometry_dimension,
        r.formula_dimension
    )
}

fn stratum_csv(r: &StratumReport) -> String {
    csv_rows(
        &[
            "ranks",
            "degrees",
            "twist",
            "splittings",
            "geometry",
            "class",
            "geometry_dimension",
            "formula_dimension",
        ],
        vec![vec![
            join(&r.ranks, ";"),
            join(&r.degrees, ";"),
            r.twist.to_string(),
            splitting_list(&r.splittings),
            r.geometry.clone(),
            join(r.class.coeffs(), ";"),
            r.geometry_dimension.to_string(),
            r.formula_dimension.to_string(),
        ]],
    )
}

fn dimension_text(r: &DimensionReport) -> String {
    format!(
        "ranks: {}\ndegrees: {}\ntwist: {}\ngenus: {}\nh0_end: {}\ndimension: {}\n",
        join(&r.ranks, ","),
        join(&r.degrees, ","),
        r.twist,
        r.genus,
        join(&r.h0_end, ","),
        r.dimension
    )
}

fn dimension_csv(r: &DimensionReport) -> String {
    csv_rows(
        &["ranks", "degrees", "twist", "genus", "h0_end", "dimension"],
        vec![vec![
            join(&r.ranks, ";"),
            join(&r.degrees, ";"),
            r.twist.to_string(),
            r.genus.to_string(),
            join(&r.h0_end, ";"),
            r.dimension.to_string(),
        ]],
    )
}

fn sigma_text(r: &SigmaReport) -> String {
    format!(
        "ranks: {}\ndegrees: {}\ntwist: {}\nshift: {}\ntuple_degree: {}\nsigma: {}\nalpha: {}\ndeterminant: {}\ndeterminant_closed_form: {}\npullback_degrees: {}\n",
        join(&r.ranks, ","),
        join(&r.degrees, ","),
        r.twist,
        r.shift,
        r.tuple_degree,
        rationals(&r.sigma, ", "),
        rationals(&r.alpha, ", "),
        rational(&r.determinant),
        rational(&r.determinant_closed_form),
        join(&r.pullback_degrees, ",")
    )
}

fn sigma_csv(r: &SigmaReport) -> String {
    csv_rows(
        &[
            "ranks",
            "degrees",
            "twist",
            "shift",
            "tuple_degree",
            "sigma",
            "alpha",
            "determinant",
            "determinant_closed_form",
            "pullback_degrees",
        ],
        vec![vec![
            join(&r.ranks, ";"),
            join(&r.degrees, ";"),
            r.twist.to_string(),
            r.shift.to_string(),
            r.tuple_degree.to_string(),
            rationals(&r.sigma, ";"),
            rationals(&r.alpha, ";"),
            rational(&r.determinant),
            rational(&r.determinant_closed_form),
            join(&r.pullback_degrees, ";"),
        ]],
    )
}

fn oracle_text(r: &OracleReport) -> String {
    format!(
        "degrees: {}\nq: {}\ncount: {}\npredicted: {}\nmatches: {}\n",
        join(&r.degrees, ","),
        r.modulus,
        r.count,
        r.predicted,
        r.matches
    )
}

fn oracle_csv(r: &OracleReport) -> String {
    csv_rows(
        &["degrees", "q", "count", "predicted", "matches"],
        vec![vec![
            join(&r.degrees, ";"),
            r.modulus.to_string(),
            r.count.clone(),
            r.predicted.clone(),
            r.matches.to_string(),
        ]],
    )
}
