mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use blockmzv::blockpoly::{left_nested, lyndon_dim, p_gen, q_gen, reduce};
use blockmzv::blocks::{
    bl, block_decompose, block_degree, framed_block_degree, hoffman_count, pi_bl, pi_bl_inverse,
    Word,
};
use blockmzv::exactalg::{parse_monomial, PolyRecord};
use blockmzv::verify::{full_report, RelationReport, Suite};
use blockmzv::wordops::{infinitesimal_coaction, FormalII};
use blockmzv::{Error, QPoly, Rational};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use config::{CliConfig, OutputFormat};

/// Exact computations with block-graded motivic multiple zeta values.
#[derive(Parser, Debug)]
#[command(name = "blockmzv", version)]
struct Cli {
    /// Output format; `structured` prints JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Blocks, bl tuple and degrees of a word over {0,1}.
    Decompose { word: String },
    /// The monomial pi_bl of a word, or with --invert the word of a monomial.
    Pibl {
        /// A word, or a monomial such as x1^3*x2^2 with --invert.
        input: String,
        #[arg(long)]
        invert: bool,
    },
    /// The generator of odd weight 2k+1 >= 3.
    Generator {
        weight: usize,
        /// Print the reduced polynomial.
        #[arg(long, conflicts_with = "as_q")]
        reduced: bool,
        /// Print the two-variable sum form q.
        #[arg(long)]
        as_q: bool,
    },
    /// Left-nested Ihara bracket of generators given by their weights.
    Bracket {
        #[arg(num_args = 2.., required = true)]
        weights: Vec<usize>,
        #[arg(long)]
        reduced: bool,
    },
    /// The infinitesimal coaction D_{2r+1} of I(0; word; 1).
    Coaction {
        word: String,
        #[arg(long)]
        r: usize,
    },
    /// Lyndon dimensions and Hoffman counts up to a weight.
    Dims {
        #[arg(long)]
        max_weight: usize,
    },
    /// Run relation suites.
    Verify {
        /// Suite to run; repeat for several. Defaults to all.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long)]
        max_block_degree: Option<usize>,
        /// Flip the sign of coefficient INDEX of q for generator WEIGHT.
        #[arg(long, value_name = "WEIGHT:INDEX")]
        mutate: Option<String>,
    },
    /// Run the suites described by a flat TOML config file.
    Report {
        #[arg(long)]
        config: PathBuf,
    },
}

enum Failure {
    /// Bad input; exit code 2.
    Input(String),
    /// Some relation failed; exit code 1.
    Relations,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<(), Failure>;

/// `println!` that exits quietly once the reader closes the pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("cannot write to stdout: {e}");
        }
    }};
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn word(s: &str) -> Result<Word, Failure> {
    let w: Word = s.parse()?;
    if w.is_empty() {
        return Err(Error::EmptyWord.into());
    }
    Ok(w)
}

fn generator_index(weight: usize) -> Result<usize, Failure> {
    if weight < 3 || weight.is_multiple_of(2) {
        return Err(Failure::Input(format!(
            "generator weight {weight} must be odd and at least 3"
        )));
    }
    Ok((weight - 1) / 2)
}

struct Printer {
    format: OutputFormat,
    config: CliConfig,
}

impl Printer {
    fn emit(&self, text: impl FnOnce() -> String, result: impl Serialize) {
        match self.format {
            OutputFormat::Text => out!("{}", text()),
            OutputFormat::Structured => {
                let doc = json!({
                    "version": env!("CARGO_PKG_VERSION"),
                    "config": self.config,
                    "result": result,
                });
                out!("{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
            }
        }
    }

    fn reports(&self, reports: &[RelationReport]) -> Outcome {
        match self.format {
            OutputFormat::Text => {
                for r in reports {
                    let verdict = if r.passed() { "PASS" } else { "FAIL" };
                    out!(
                        "{verdict} {:<27} {} instances, {} failures",
                        r.relation_name, r.instances_checked, r.failure_count
                    );
                    for f in &r.failures {
                        match &f.defect {
                            Some(d) => {
                                let p: QPoly = d.to_poly().map_err(Failure::Input)?;
                                out!("    {}: {p}", f.input);
                            }
                            None => out!("    {}", f.input),
                        }
                    }
                    for n in &r.engine_notes {
                        out!("    note: {n}");
                    }
                }
            }
            OutputFormat::Structured => {
                let doc = json!({
                    "version": env!("CARGO_PKG_VERSION"),
                    "config": self.config,
                    "reports": reports,
                });
                out!("{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
            }
        }
        if reports.iter().all(RelationReport::passed) {
            Ok(())
        } else {
            Err(Failure::Relations)
        }
    }
}

fn poly_result(weight: usize, form: &str, p: &QPoly) -> Value {
    json!({ "weight": weight, "form": form, "polynomial": PolyRecord::from(p) })
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format.unwrap_or_default();
    let mut printer = Printer {
        format,
        config: CliConfig {
            output_format: format,
            ..CliConfig::default()
        },
    };
    match cli.command {
        Command::Decompose { word: s } => {
            let w = word(&s)?;
            let blocks = block_decompose(w.letters())?;
            let tuple = bl(w.letters())?;
            let degree = block_degree(w.letters())?;
            let framed = framed_block_degree(w.letters());
            let m = pi_bl::<Rational>(w.letters())?;
            printer.emit(
                || {
                    let names: Vec<String> = blocks.iter().map(Word::to_string).collect();
                    format!(
                        "{tuple}, block degree {degree}\nblocks: {}\nframed block degree: {framed}\nweight {}, depth {}\npi_bl: {m}",
                        names.join(" "),
                        w.weight(),
                        w.depth()
                    )
                },
                json!({
                    "word": w.to_string(),
                    "blocks": blocks.iter().map(Word::to_string).collect::<Vec<_>>(),
                    "bl": tuple.to_string(),
                    "block_degree": degree,
                    "framed_block_degree": framed,
                    "weight": w.weight(),
                    "depth": w.depth(),
                    "pi_bl": PolyRecord::from(&m),
                }),
            );
        }
        Command::Pibl { input, invert: false } => {
            let w = word(&input)?;
            let m = pi_bl::<Rational>(w.letters())?;
            printer.emit(|| m.to_string(), PolyRecord::from(&m));
        }
        Command::Pibl { input, invert: true } => {
            let exps = parse_monomial(&input)?;
            let w = pi_bl_inverse(&QPoly::monomial(exps, q(1)))?;
            printer.emit(|| w.to_string(), json!({ "word": w.to_string() }));
        }
        Command::Generator { weight, reduced, as_q } => {
            let k = generator_index(weight)?;
            let (form, p) = if as_q {
                ("q", q_gen::<Rational>(k)?)
            } else if reduced {
                ("reduced", reduce(&p_gen(k)?)?.poly().clone())
            } else {
                ("p", p_gen(k)?.into_poly())
            };
            printer.emit(|| p.to_string(), poly_result(weight, form, &p));
        }
        Command::Bracket { weights, reduced } => {
            let gens = weights
                .iter()
                .map(|&w| Ok(p_gen(generator_index(w)?)?))
                .collect::<Result<Vec<_>, Failure>>()?;
            let b = left_nested(&gens)?;
            let total = b.weight();
            let (form, p) = if reduced {
                ("reduced", reduce(&b)?.poly().clone())
            } else {
                ("bracket", b.into_poly())
            };
            printer.emit(|| p.to_string(), poly_result(total, form, &p));
        }
        Command::Coaction { word: s, r } => {
            let w = word(&s)?;
            let terms = infinitesimal_coaction::<Rational>(r, &FormalII::framed(&w))?;
            printer.emit(
                || {
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n")
                    }
                },
                terms
                    .iter()
                    .map(|t| {
                        json!({
                            "left": t.left,
                            "right": t.right,
                            "coefficient": t.coefficient.to_string(),
                        })
                    })
                    .collect::<Vec<_>>(),
            );
        }
        Command::Dims { max_weight } => {
            if max_weight > 100 {
                return Err(Failure::Input(format!(
                    "dims --max-weight {max_weight} exceeds the limit 100"
                )));
            }
            dims(&printer, max_weight);
        }
        Command::Verify {
            suites,
            max_weight,
            max_block_degree,
            mutate,
        } => {
            let c = &mut printer.config;
            if !suites.is_empty() {
                c.suites = suites
                    .iter()
                    .map(|s| s.parse::<Suite>())
                    .collect::<Result<_, _>>()?;
            }
            c.max_weight = max_weight.unwrap_or(c.max_weight);
            c.max_block_degree = max_block_degree.unwrap_or(c.max_block_degree);
            c.mutate = mutate;
            let reports = full_report(&printer.config.verify_config()?)?;
            printer.reports(&reports)?;
        }
        Command::Report { config } => {
            printer.config = CliConfig::load(&config)?;
            printer.format = cli.format.unwrap_or(printer.config.output_format);
            printer.config.output_format = printer.format;
            let reports = full_report(&printer.config.verify_config()?)?;
            printer.reports(&reports)?;
        }
    }
    Ok(())
}

fn dims(printer: &Printer, max_weight: usize) {
    let max_b = max_weight / 3;
    let lyndon: Vec<Value> = (1..=max_weight)
        .flat_map(|w| (1..=max_b).map(move |b| (w, b)))
        .map(|(w, b)| json!({ "weight": w, "block_degree": b, "dim": lyndon_dim(w, b) as u64 }))
        .collect();
    let hoffman: Vec<Value> = (0..=max_weight)
        .flat_map(|n| (0..=n / 3).map(move |m| (n, m)))
        .map(|(n, m)| json!({ "weight": n, "threes": m, "count": hoffman_count(n, m) as u64 }))
        .collect();
    printer.emit(
        || {
            let mut out = String::from("lyndon_dim (rows: weight, columns: block degree)\n");
            out += &format!("{:>6}", "w\\b");
            for b in 1..=max_b {
                out += &format!("{b:>6}");
            }
            for w in 1..=max_weight {
                out += &format!("\n{w:>6}");
                for b in 1..=max_b {
                    out += &format!("{:>6}", lyndon_dim(w, b));
                }
            }
            out += "\n\nhoffman_count (rows: weight, columns: number of threes)\n";
            out += &format!("{:>6}", "w\\m");
            for m in 0..=max_weight / 3 {
                out += &format!("{m:>8}");
            }
            for n in 0..=max_weight {
                out += &format!("\n{n:>6}");
                for m in 0..=n / 3 {
                    out += &format!("{:>8}", hoffman_count(n, m));
                }
            }
            out
        },
        json!({ "lyndon_dim": lyndon, "hoffman_count": hoffman }),
    );
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Relations) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
