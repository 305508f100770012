use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::Ratio;

use qshuffle::catalan::{catalan_element, cw_elevation, enumerate_catalan, profile, profile_to_word};
use qshuffle::format::render;
use qshuffle::pbw::independence_evidence;
use qshuffle::relations::{verify_all, SuiteConfig};
use qshuffle::report::Params;
use qshuffle::{Algebra, Element, Engine, Error, OutputFormat, Pbw, PbwKind, PbwLabel, Profile, Report, Suite, Word};

#[derive(Parser)]
#[command(name = "qshuffle", version, about = "Exact computation in the q-shuffle algebra on x, y")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
            Format::Latex => OutputFormat::Latex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    A0,
    A1,
    Delta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    All,
    Theorem,
    Serre,
    Catalan,
    Section3,
    Independence,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle product of two words.
    Expand {
        left: Word,
        right: Word,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Entries kept in the word-pair memo (0 disables it).
        #[arg(long)]
        memo_cap: Option<usize>,
    },
    /// Catalan words of halflength n, or the element C_n with --format json|latex.
    Catalan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        profiles: bool,
        #[arg(long)]
        coeffs: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Profile of a Catalan word, or the word of a profile.
    Profile {
        #[arg(required_unless_present = "to_word", conflicts_with = "to_word")]
        word: Option<Word>,
        #[arg(long, value_name = "PROFILE")]
        to_word: Option<Profile>,
    },
    /// Image of a PBW root vector.
    Pbw {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "recursive")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteName,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_ij: Option<usize>,
        /// Largest total degree for the independence suite.
        #[arg(long, default_value_t = 6)]
        degree: u32,
        #[arg(long, default_value = "2")]
        q0: Ratio<BigInt>,
        /// Write one JSON record per line to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Expand { left, right, format, memo_cap } => {
            let engine = match memo_cap {
                Some(cap) => Engine::with_memo_cap(cap),
                None => Engine::new(),
            };
            println!("{}", render(&engine.words(left, right), format.into()));
        }
        Command::Catalan { n, profiles, coeffs, format } => {
            if !matches!(format, Format::Text) {
                println!("{}", render(&catalan_element::<BigInt>(n), format.into()));
                return Ok(0);
            }
            for w in enumerate_catalan(n) {
                let mut line = w.to_string();
                if profiles {
                    line.push('\t');
                    line.push_str(&profile(w)?.to_string());
                }
                if coeffs {
                    line.push('\t');
                    line.push_str(&cw_elevation::<BigInt>(w)?.to_string());
                }
                println!("{line}");
            }
        }
        Command::Profile { word, to_word } => match (word, to_word) {
            (_, Some(p)) => println!("{}", profile_to_word(&p)?),
            (Some(w), None) => println!("{}", profile(w)?),
            (None, None) => unreachable!("clap requires one of the two"),
        },
        Command::Pbw { kind, n, method, format } => {
            let kind = match kind {
                Kind::A0 => PbwKind::Alpha0,
                Kind::A1 => PbwKind::Alpha1,
                Kind::Delta => PbwKind::Delta,
            };
            let label = PbwLabel::new(kind, n)?;
            let alg = Algebra::new();
            let pbw = Pbw::new(&alg);
            let image: Element = match method {
                Method::Recursive => (*pbw.recursive(label)?).clone(),
                Method::Closed => pbw.closed(label),
            };
            println!("{}", render(&image, format.into()));
        }
        Command::Verify { suite, max_n, max_ij, degree, q0, report } => {
            let results = run_suite(suite, max_n, max_ij, degree, &q0)?;
            for r in &results.records {
                println!("{r}");
            }
            if let Some(path) = report {
                fs::write(&path, results.to_json_lines())
                    .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
            }
            let failures = results.failures().count();
            let vacuous = if results.is_vacuous() { " (vacuous)" } else { "" };
            eprintln!("{} records, {} checks, {failures} failures{vacuous}", results.records.len(), results.checks());
            return Ok(results.exit_code() as u8);
        }
    }
    Ok(0)
}

fn run_suite(
    suite: SuiteName,
    max_n: Option<usize>,
    max_ij: Option<usize>,
    degree: u32,
    q0: &Ratio<BigInt>,
) -> Result<Suite, Error> {
    let defaults = SuiteConfig::default();
    let n = max_n.unwrap_or(defaults.max_n);
    let ij = max_ij.or(defaults.section3.map(|(i, _)| i)).unwrap_or(0);
    let config = match suite {
        SuiteName::All => SuiteConfig { max_n: n, aver: n, max_commutation: n, section3: Some((ij, ij)), ..defaults },
        SuiteName::Theorem => SuiteConfig::theorem(n),
        SuiteName::Serre => SuiteConfig { serre: true, ..SuiteConfig::empty() },
        SuiteName::Catalan => SuiteConfig {
            aver: n,
            max_commutation: n,
            profile_halflength: defaults.profile_halflength,
            qint_sums: defaults.qint_sums,
            balanced_len: defaults.balanced_len,
            catalan_support: defaults.catalan_support,
            ..SuiteConfig::empty()
        },
        SuiteName::Section3 => SuiteConfig { section3: Some((ij, ij)), ..SuiteConfig::empty() },
        SuiteName::Independence => {
            let alg = Algebra::new();
            let pbw = Pbw::new(&alg);
            let mut out = Suite::new();
            for d in 0..=degree {
                out.push(independence(&pbw, d, q0)?);
            }
            return Ok(out);
        }
    };
    verify_all(&config)
}

fn independence(pbw: &Pbw<'_>, degree: u32, q0: &Ratio<BigInt>) -> Result<Report, Error> {
    match independence_evidence(pbw, degree, q0) {
        Err(e @ Error::DegenerateEvaluation { .. }) => {
            let params = Params::new().with("degree", degree).with("q0", q0.to_string());
            Ok(Report::inconclusive("pbw_independence", params, e.to_string()))
        }
        other => other,
    }
}
