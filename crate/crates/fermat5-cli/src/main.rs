//! Command line front end: certify a parameter, isolate the window endpoint,
//! sweep a height bound for distinct fields, and emit numeric point data.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use fermat5::params::{build_params, in_totally_real_range, r_polynomial};
use fermat5::points::{numeric_points, points_csv, points_svg};
use fermat5::rational::{parse_rational, rat_int};
use fermat5::realroots::{isolate_real_roots, refine, truncate_decimal};
use fermat5::search::{distinct_kernel_representatives, search_distinct_fields};
use fermat5::{Certificate, Rational};

const EXIT_USAGE: u8 = 1;
const EXIT_CHECK_FAILED: u8 = 2;

#[derive(Parser)]
#[command(
    name = "fermat5",
    version,
    about = "Exact certificates for totally real degree six points on x^5 + y^5 + z^5 = 0"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a certificate for one rational parameter
    Certify {
        /// Rational parameter, written like 5/2 or -3
        #[arg(long)]
        t: String,
        /// Isolate points to width 10^-N when the sextic is totally real
        #[arg(long, default_value_t = 6)]
        precision: u32,
        /// Also write the certificate JSON to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a decimal enclosure of the upper endpoint of the parameter window
    IsolateR {
        /// Number of decimal digits the enclosure pins down
        #[arg(long, default_value_t = 6)]
        digits: u32,
    },
    /// Certify every admissible parameter of bounded height
    Search {
        /// Enumerate t = p/q with 1 <= q <= N inside the parameter window
        #[arg(long)]
        height: u32,
        /// Isolate points to width 10^-N in each certificate
        #[arg(long, default_value_t = 6)]
        precision: u32,
        /// Directory that receives one certificate JSON per parameter
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit isolated point coordinates for a totally real parameter
    Points {
        /// Rational parameter inside the window, written like 5/2
        #[arg(long)]
        t: String,
        /// Isolate points to width 10^-N
        #[arg(long, default_value_t = 6)]
        precision: u32,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also write the output to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Cert,
    Csv,
    Svg,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn check(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_CHECK_FAILED,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let kind = err.kind();
            let _ = err.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Certify { t, precision, out } => cmd_certify(&t, precision, out.as_deref()),
        Command::IsolateR { digits } => cmd_isolate_r(digits),
        Command::Search {
            height,
            precision,
            out,
        } => cmd_search(height, precision, out.as_deref()),
        Command::Points {
            t,
            precision,
            format,
            out,
        } => cmd_points(&t, precision, format, out.as_deref()),
    }
}

/// Parses a parameter value and rejects the degenerate t = 2.
fn parse_t(raw: &str) -> Result<Rational, Failure> {
    let t = parse_rational(raw).map_err(|e| usage(format!("invalid parameter {raw:?}: {e}")))?;
    if t == rat_int(2) {
        return Err(usage(
            "t = 2 is excluded: the conic degenerates to a double line",
        ));
    }
    Ok(t)
}

fn pow10(digits: u32) -> Rational {
    let ten = rat_int(10);
    let mut scale = rat_int(1);
    for _ in 0..digits {
        scale = &scale * &ten;
    }
    scale
}

fn write_file(path: &std::path::Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_certify(t_raw: &str, precision: u32, out: Option<&std::path::Path>) -> Result<(), Failure> {
    let t = parse_t(t_raw)?;
    let cert = Certificate::build(&t, precision)
        .map_err(|e| check(format!("certificate construction failed: {e}")))?;
    let json = cert.to_json_string();
    if let Some(path) = out {
        write_file(path, &json)?;
    }
    print!("{json}");
    if cert.passes() {
        Ok(())
    } else {
        Err(check(format!("certificate checks failed for t = {t}")))
    }
}

fn cmd_isolate_r(digits: u32) -> Result<(), Failure> {
    if digits == 0 {
        return Err(usage("digits must be at least 1"));
    }
    let poly = r_polynomial();
    let intervals =
        isolate_real_roots(&poly).map_err(|e| check(format!("root isolation failed: {e}")))?;
    if intervals.len() != 1 {
        return Err(check(format!(
            "expected a single real root, found {}",
            intervals.len()
        )));
    }
    let mut interval = intervals.into_iter().next().expect("one interval");
    let scale = pow10(digits);
    let zero = rat_int(0);
    let one = rat_int(1);
    loop {
        if interval.lo() >= &zero {
            let lo_cell = (interval.lo() * &scale).floor();
            let hi_cell = (interval.hi() * &scale).floor();
            if lo_cell == hi_cell {
                let low = &lo_cell / &scale;
                let high = (&lo_cell + &one) / &scale;
                println!(
                    "[{}, {}]",
                    truncate_decimal(&low, digits),
                    truncate_decimal(&high, digits)
                );
                return Ok(());
            }
        }
        let half = interval.width() / rat_int(2);
        interval = refine(&interval, &half);
    }
}

fn cmd_search(height: u32, precision: u32, out: Option<&std::path::Path>) -> Result<(), Failure> {
    let hits = search_distinct_fields(height, precision)
        .map_err(|e| check(format!("search failed: {e}")))?;
    for hit in &hits {
        if !hit.certificate.passes() {
            return Err(check(format!("certificate checks failed for t = {}", hit.t)));
        }
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir)
            .map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
        for hit in &hits {
            let name = format!("cert_{}_{}.json", hit.t.numer(), hit.t.denom());
            write_file(&dir.join(name), &hit.certificate.to_json_string())?;
        }
    }
    let representatives = distinct_kernel_representatives(&hits);
    let representative_ts: Vec<Rational> = representatives.iter().map(|h| h.t.clone()).collect();
    for hit in &hits {
        let marker = if representative_ts.contains(&hit.t) {
            "  *"
        } else {
            ""
        };
        println!(
            "t = {}  kernel = {}{}",
            hit.t, hit.certificate.quad_kernel, marker
        );
    }
    println!(
        "{} admissible parameters, {} distinct kernels",
        hits.len(),
        representatives.len()
    );
    Ok(())
}

fn cmd_points(
    t_raw: &str,
    precision: u32,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let t = parse_t(t_raw)?;
    if format == Format::Cert {
        if !in_totally_real_range(&t) {
            return Err(check(format!(
                "t = {t} is outside the window where all six roots are real"
            )));
        }
        return cmd_certify(t_raw, precision, out);
    }
    let pd = build_params(&t).map_err(|e| check(format!("{e}")))?;
    let width = rat_int(1) / pow10(precision);
    let points = numeric_points(&pd, &width).map_err(|e| check(format!("{e}")))?;
    let text = match format {
        Format::Csv => points_csv(&t, &points),
        Format::Svg => points_svg(&pd, &points),
        Format::Cert => unreachable!(),
    };
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    print!("{text}");
    Ok(())
}
