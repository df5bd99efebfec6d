use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use schubert_mf::chow::{coefficient_capped, expand_monomial_capped, is_multiplicity_free_capped};
use schubert_mf::io::{
    big_to_number, one_based_indices, parse_index, parse_index_set, parse_multiplicities,
    ClassifyJson, CoeffJson, MaxDegreeJson, MfCheckJson, MultipathJson, SchubertVectorJson,
    SingleDivisorJson, SuiteReportJson, TraceJson, VerifyJson,
};
use schubert_mf::verify::{run_suite, Suite, VerifyOptions};
use schubert_mf::{
    classify, classify_checked, max_elements_from_env, max_multipath_total_length,
    max_single_divisor_power, single_divisor_classify, CoefficientMethod, Error, RootSystem,
    Verdict,
};

#[derive(Parser)]
#[command(name = "schubert-mf", version, about = "Multiplicity-free divisor monomials on simply-laced G/B")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Pieri,
    Sorting,
    Checked,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient of Z_w in D_1^{n_1}...D_r^{n_r}.
    Coeff {
        #[arg(short = 'r', long = "root-system")]
        root_system: String,
        /// Space-separated simple reflections, e.g. "1 2 1".
        #[arg(short, long, allow_hyphen_values = true)]
        word: String,
        /// Comma-separated multiplicities, e.g. 2,1.
        #[arg(short, long)]
        n: String,
        #[arg(long, value_enum, default_value_t = Method::Pieri)]
        method: Method,
    },
    /// Schubert expansion of a divisor monomial.
    Expand {
        #[arg(short = 'r', long = "root-system")]
        root_system: String,
        #[arg(short, long)]
        n: String,
    },
    /// Cluster criterion for C_{w,n} = 1.
    Classify {
        #[arg(short = 'r', long = "root-system")]
        root_system: String,
        #[arg(short, long, allow_hyphen_values = true)]
        word: String,
        #[arg(short, long)]
        n: String,
        /// Also recompute the coefficient by the Pieri rule.
        #[arg(long)]
        checked: bool,
    },
    /// Whether a divisor monomial is multiplicity-free.
    MfCheck {
        #[arg(short = 'r', long = "root-system")]
        root_system: String,
        #[arg(short, long)]
        n: String,
    },
    /// Maximal degree of a multiplicity-free monomial.
    MaxDegree {
        #[arg(short = 'r', long = "root-system")]
        root_system: String,
        /// Allowed divisors, comma-separated; all by default.
        #[arg(long)]
        involved: Option<String>,
    },
    /// Largest multiplicity-free power of one divisor.
    SingleDivisor {
        #[arg(short = 'r', long = "root-system")]
        root_system: String,
        #[arg(short, long)]
        i: String,
        /// Also decide D_i^{ℓ(w)} at this element.
        #[arg(short, long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Run a cross-check suite.
    Verify {
        #[arg(short = 'r', long = "root-system")]
        root_system: String,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Only elements up to this length are checked exhaustively.
        #[arg(long)]
        max_length: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnsupportedRootSystem(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: String,
    ok: bool,
}

impl Output {
    fn new(text: String, json: &impl Serialize) -> Self {
        Output {
            text,
            json: serde_json::to_string_pretty(json).expect("schemas serialize"),
            ok: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => &out.text,
                Format::Json => &out.json,
            };
            // a closed pipe on stdout is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    let cap = max_elements_from_env()?;
    match command {
        Command::Coeff {
            root_system,
            word,
            n,
            method,
        } => {
            let rs = RootSystem::parse(&root_system)?;
            let w = rs.parse_word(&word)?;
            let n = parse_multiplicities(&rs, &n)?;
            let method = match method {
                Method::Pieri => CoefficientMethod::Pieri,
                Method::Sorting => CoefficientMethod::SortingCount,
                Method::Checked => CoefficientMethod::Checked,
            };
            let c = coefficient_capped(&rs, &w, &n, method, cap)?;
            let json = CoeffJson {
                root_system: rs.cartan_type().to_string(),
                word: rs.format_word(&w),
                n,
                coeff: big_to_number(&c),
            };
            Ok(Output::new(c.to_string(), &json))
        }
        Command::Expand { root_system, n } => {
            let rs = RootSystem::parse(&root_system)?;
            let n = parse_multiplicities(&rs, &n)?;
            let v = expand_monomial_capped(&rs, &n, cap)?;
            let json = SchubertVectorJson::from_vector(&rs, &v);
            let mut text = format!("degree {}", v.degree());
            for term in &json.terms {
                text.push_str(&format!("\n{} Z[{}]", term.coeff, term.word));
            }
            Ok(Output::new(text, &json))
        }
        Command::Classify {
            root_system,
            word,
            n,
            checked,
        } => {
            let rs = RootSystem::parse(&root_system)?;
            let w = rs.parse_word(&word)?;
            let n = parse_multiplicities(&rs, &n)?;
            let result = if checked {
                classify_checked(&rs, &w, &n)?
            } else {
                classify(&rs, &w, &n)?
            };
            let (verdict, value) = match &result.verdict {
                Verdict::Unit => ("UNIT", big_to_number(&1u32.into())),
                Verdict::NonUnit(c) => ("NON_UNIT", big_to_number(c)),
            };
            let trace = result.trace.as_ref().map(TraceJson::from_trace);
            let mut text = match &result.verdict {
                Verdict::Unit => "UNIT".to_string(),
                Verdict::NonUnit(c) => format!("NON_UNIT {c}"),
            };
            for layer in trace.iter().flat_map(|t| &t.layers) {
                let roots: Vec<String> = layer
                    .roots
                    .iter()
                    .map(|r| format!("({})", join(r, ",")))
                    .collect();
                text.push_str(&format!(
                    "\nI = {{{}}}  k = {}  roots {}",
                    join(&layer.indices, ","),
                    join(&layer.k, ","),
                    roots.join(" ")
                ));
            }
            let json = ClassifyJson {
                root_system: rs.cartan_type().to_string(),
                word: rs.format_word(&w),
                n,
                verdict: verdict.into(),
                value,
                trace,
            };
            Ok(Output::new(text, &json))
        }
        Command::MfCheck { root_system, n } => {
            let rs = RootSystem::parse(&root_system)?;
            let n = parse_multiplicities(&rs, &n)?;
            let witness = is_multiplicity_free_capped(&rs, &n, cap)?.map(|w| rs.format_word(&w));
            let text = match &witness {
                Some(word) => format!("w = [{word}]"),
                None => "NONE".to_string(),
            };
            let json = MfCheckJson {
                root_system: rs.cartan_type().to_string(),
                n,
                multiplicity_free: witness.is_some(),
                witness,
            };
            Ok(Output::new(text, &json))
        }
        Command::MaxDegree {
            root_system,
            involved,
        } => {
            let rs = RootSystem::parse(&root_system)?;
            let allowed = match involved {
                Some(text) => parse_index_set(&rs, &text)?,
                None => rs.all_indices(),
            };
            let (total, mp) = max_multipath_total_length(&rs, allowed)?;
            let json = MaxDegreeJson {
                root_system: rs.cartan_type().to_string(),
                involved: one_based_indices(allowed),
                max_degree: total,
                multipath: MultipathJson::from_multipath(&mp),
            };
            let paths: Vec<String> = json.multipath.0.iter().map(|p| format!("[{}]", join(p, " "))).collect();
            Ok(Output::new(format!("{total}\nmultipath {}", paths.join(" ")), &json))
        }
        Command::SingleDivisor {
            root_system,
            i,
            word,
        } => {
            let rs = RootSystem::parse(&root_system)?;
            let index = parse_index(&rs, &i)?;
            let power = max_single_divisor_power(&rs, index)?;
            let mut text = power.to_string();
            let mut json = SingleDivisorJson {
                root_system: rs.cartan_type().to_string(),
                index: index + 1,
                max_power: power,
                word: None,
                multiplicity_free: None,
                sequence: None,
            };
            if let Some(word) = word {
                let w = rs.parse_word(&word)?;
                let seq = single_divisor_classify(&rs, &w, index)?;
                json.word = Some(rs.format_word(&w));
                json.multiplicity_free = Some(seq.is_some());
                match &seq {
                    Some(s) => {
                        let betas: Vec<String> = s.betas.iter().map(|b| b.to_string()).collect();
                        text.push_str(&format!("\nsequence {}", betas.join(" ")));
                        json.sequence = Some(s.betas.iter().map(|b| b.coeffs().to_vec()).collect());
                    }
                    None => text.push_str("\nNONE"),
                }
            }
            Ok(Output::new(text, &json))
        }
        Command::Verify {
            root_system,
            suite,
            samples,
            seed,
            max_length,
        } => {
            let rs = RootSystem::parse(&root_system)?;
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions {
                cap,
                max_length: max_length.unwrap_or(usize::MAX),
                samples,
                seed,
            };
            let reports = run_suite(&rs, suite, &opts)?;
            let ok = reports.iter().all(|r| r.passed());
            let text = reports
                .iter()
                .map(|r| {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    let mut line = format!("{status} {}: {} checked, {} failed", r.suite, r.checked, r.failures);
                    if let Some(f) = &r.first_failure {
                        line.push_str(&format!("\n  first failure: {f}"));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            let json = VerifyJson {
                root_system: rs.cartan_type().to_string(),
                reports: reports
                    .iter()
                    .map(|r| SuiteReportJson {
                        suite: r.suite.to_string(),
                        checked: r.checked,
                        failures: r.failures,
                        first_failure: r.first_failure.clone(),
                    })
                    .collect(),
            };
            let mut out = Output::new(text, &json);
            out.ok = ok;
            Ok(out)
        }
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}
