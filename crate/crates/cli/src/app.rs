use std::io::Write;
use std::time::Instant;

use algdiag::composed_sum::composed_sum_xy;
use algdiag::diagonal::{algebraic_diagonal, diagonal_series, sloped_diagonal};
use algdiag::poly::BiPoly;
use algdiag::residues::algebraic_residues;
use algdiag::walks::{bridges_series, excursions_series, meanders_series, StepSet};
use algdiag::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::expr::{parse_poly, parse_ratfun};
use crate::output::{bipoly_json, bipoly_text, series_json, series_text};

#[derive(Parser, Debug)]
#[command(name = "algdiag", version, about = "Residues, composed sums and diagonals of rational functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Report wall-clock time per stage on standard error.
    #[arg(long)]
    timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Bridges,
    Excursions,
    Meanders,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polynomial R(x, z) canceling the residues in y of P/Q.
    Residues {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// Divisor of the denominator selecting the poles (default: all of it).
        #[arg(long, allow_hyphen_values = true)]
        qhat: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Polynomial canceling all sums of c roots in y of P(x, y).
    ComposedSum {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        c: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Polynomial Φ(t, D) canceling the diagonal of A/B.
    Diagonal {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Polynomial Φ(s, D) canceling the (p, q) sloped diagonal of A/B.
    SlopedDiagonal {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        slope: Vec<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// First coefficients of the diagonal by direct expansion.
    DiagSeries {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        terms: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Counting series of one-dimensional lattice walks.
    Walks {
        /// Comma-separated vertical steps, e.g. "-1,0,1".
        #[arg(long, allow_hyphen_values = true)]
        steps: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        terms: usize,
        #[command(flatten)]
        common: Common,
    },
}

struct Timer {
    enabled: bool,
    stages: Vec<(&'static str, f64)>,
    last: Instant,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer {
            enabled,
            stages: Vec::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        self.stages.push((stage, (now - self.last).as_secs_f64() * 1e3));
        self.last = now;
    }

    fn report(&self, err: &mut dyn Write) {
        if self.enabled {
            for (stage, ms) in &self.stages {
                let _ = writeln!(err, "{stage}: {ms:.3} ms");
            }
        }
    }
}

enum Rendered {
    Poly(BiPoly, &'static str, &'static str),
    Series(algdiag::series::TruncatedSeries<algdiag::ring::Rational>, &'static str),
    Integers(Vec<String>),
}

fn render(r: &Rendered, format: Format) -> String {
    match (r, format) {
        (Rendered::Poly(p, a, b), Format::Text) => bipoly_text(p, a, b),
        (Rendered::Poly(p, a, b), Format::Json) => bipoly_json(p, a, b).to_string(),
        (Rendered::Series(s, v), Format::Text) => series_text(s, v),
        (Rendered::Series(s, v), Format::Json) => series_json(s, v).to_string(),
        (Rendered::Integers(v), Format::Text) => v.join(", "),
        (Rendered::Integers(v), Format::Json) => {
            let parsed: Vec<Value> = v
                .iter()
                .map(|s| serde_json::from_str(s).expect("decimal integer"))
                .collect();
            Value::Array(parsed).to_string()
        }
    }
}

fn parse_steps(csv: &str) -> algdiag::Result<StepSet> {
    let steps = csv
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidStepSet(format!("not an integer step: '{}'", s.trim())))
        })
        .collect::<algdiag::Result<Vec<_>>>()?;
    StepSet::new(steps)
}

fn execute(command: &Command, timer: &mut Timer) -> algdiag::Result<Rendered> {
    match command {
        Command::Residues { input, qhat, .. } => {
            let (p, q) = parse_ratfun(input)?;
            let qhat = match qhat {
                Some(text) => parse_poly(text)?,
                None => q.clone(),
            };
            timer.lap("parse");
            let r = algebraic_residues(&p, &q, &qhat)?;
            timer.lap("residues");
            Ok(Rendered::Poly(r.poly, "x", "z"))
        }
        Command::ComposedSum { input, c, .. } => {
            let p = parse_poly(input)?;
            timer.lap("parse");
            let r = composed_sum_xy(&p, *c)?;
            timer.lap("composed sum");
            Ok(Rendered::Poly(r.poly, "x", "y"))
        }
        Command::Diagonal { input, .. } => {
            let (a, b) = parse_ratfun(input)?;
            timer.lap("parse");
            let d = algebraic_diagonal(&a, &b)?;
            timer.lap("diagonal");
            Ok(Rendered::Poly(d.phi, "t", "D"))
        }
        Command::SlopedDiagonal { input, slope, .. } => {
            let (a, b) = parse_ratfun(input)?;
            timer.lap("parse");
            let d = sloped_diagonal(&a, &b, slope[0], slope[1])?;
            timer.lap("sloped diagonal");
            Ok(Rendered::Poly(d.phi, "s", "D"))
        }
        Command::DiagSeries { input, terms, .. } => {
            let (a, b) = parse_ratfun(input)?;
            timer.lap("parse");
            let s = diagonal_series(&a, &b, *terms)?;
            timer.lap("expansion");
            Ok(Rendered::Series(s, "t"))
        }
        Command::Walks {
            steps, kind, terms, ..
        } => {
            let set = parse_steps(steps)?;
            timer.lap("parse");
            let s = match kind {
                Kind::Bridges => bridges_series(&set, *terms)?,
                Kind::Excursions => excursions_series(&set, *terms)?,
                Kind::Meanders => meanders_series(&set, *terms)?,
            };
            timer.lap("series");
            Ok(Rendered::Integers(
                s.coeffs().iter().map(|c| c.numer().to_string()).collect(),
            ))
        }
    }
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Residues { common, .. }
        | Command::ComposedSum { common, .. }
        | Command::Diagonal { common, .. }
        | Command::SlopedDiagonal { common, .. }
        | Command::DiagSeries { common, .. }
        | Command::Walks { common, .. } => common,
    }
}

/// Run the command line `args` (program name first); returns the exit code.
///
/// 0 on success, 1 on a domain error (message on `err`), 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let options = common(&cli.command);
    let mut timer = Timer::new(options.timing);
    let code = match execute(&cli.command, &mut timer) {
        Ok(rendered) => {
            let text = render(&rendered, options.format);
            timer.lap("format");
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            1
        }
    };
    timer.report(err);
    code
}
