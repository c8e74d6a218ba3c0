//! Command-line front end for the eta-forge library.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
//! failure.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use eta_forge::eta::{eta_in, eta_via_star_in, theta_hat_in, theta_in};
use eta_forge::partition::parse_typed;
use eta_forge::pieri::{pieri_steps, strip_stats};
use eta_forge::raising::set_expansion_budget;
use eta_forge::symfunc::{schur_p_in, schur_q_in, schur_s_in};
use eta_forge::tableaux::{
    e_skew_in, enumerate_bitableaux, enumerate_standard, enumerate_typed_tableaux, eta_via_tableaux_in,
    TypedTableau,
};
use eta_forge::verify::{Suite, VerifyConfig};
use eta_forge::weyl::{
    grassmannian_element, iota, is_skew, minimal_rank, parse_word, schubert_ds, skew_element, stanley_e,
    tableau_to_word, word_to_tableau, SignedPermutation, Word,
};
use eta_forge::{Error, Partition, SparsePoly, Truncation, TypedPartition};

#[derive(Parser, Debug)]
#[command(
    name = "eta-forge",
    version,
    about = "Eta polynomials, typed tableaux and type D Stanley functions"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Number of x variables.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    m: u64,
    /// Number of y variables (defaults to k).
    #[arg(long, global = true)]
    ky: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on raising-operator and nilCoxeter work.
    #[arg(long, global = true, env = "ETA_FORGE_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eta polynomial H_λ(x; y) of a typed k-strict partition.
    Eta {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// k, when the partition string does not carry it.
        #[arg(long)]
        k: Option<u32>,
        /// Which route computes the polynomial.
        #[arg(long, value_enum, default_value_t = EtaMethod::Operator)]
        method: EtaMethod,
    },
    /// Theta polynomial Θ_λ, or Θ̂_λ with --hat.
    Theta {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// k.
        #[arg(long)]
        k: u32,
        /// Use R^λ instead of the full operator.
        #[arg(long)]
        hat: bool,
    },
    /// Schur Q-function (or P-function with --p) in the x variables.
    Schurq {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// Return P_λ = 2^{-ℓ(λ)} Q_λ.
        #[arg(long)]
        p: bool,
    },
    /// Schur s-function in the x variables, or in y with --y.
    Schurs {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// Use the y variables.
        #[arg(long)]
        y: bool,
    },
    /// Pieri rule: every μ with λ → μ, |μ| = |λ| + p, and its exponent M(λ, μ).
    Pieri {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// k.
        #[arg(long)]
        k: u32,
        /// Degree p of the special class.
        #[arg(long)]
        p: u32,
        /// Also check the rule as a polynomial identity.
        #[arg(long)]
        check: bool,
    },
    /// Statistics of the strip λ/μ.
    Strip {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// Inner partition.
        #[arg(long)]
        mu: String,
        /// k, when the partition strings do not carry it.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Typed k'-tableaux on λ/μ with entries at most --max-entry.
    Tableaux {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// Inner typed partition (default empty).
        #[arg(long)]
        mu: Option<String>,
        /// k, when the partition strings do not carry it.
        #[arg(long)]
        k: Option<u32>,
        /// Largest entry allowed.
        #[arg(long)]
        max_entry: usize,
    },
    /// Typed k'-bitableaux of shape λ (entries up to m, marked up to ky).
    Bitableaux {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// k, when the partition strings do not carry it.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Standard typed k'-tableaux on λ/μ.
    Standard {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// Inner typed partition (default empty).
        #[arg(long)]
        mu: Option<String>,
        /// k, when the partition strings do not carry it.
        #[arg(long)]
        k: Option<u32>,
    },
    /// The skew function E_{λ/μ}(x).
    Eskew {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// Inner typed partition (default empty).
        #[arg(long)]
        mu: Option<String>,
        /// k, when the partition strings do not carry it.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Type D Stanley symmetric function E_w(x).
    Stanley {
        /// Signed permutation, e.g. `3,-4,-2,1`.
        #[arg(long)]
        w: String,
    },
    /// Type D Schubert polynomial DS_w(x; y_1..y_n).
    Schubert {
        /// Signed permutation, e.g. `3,-4,-2,1`.
        #[arg(long)]
        w: String,
        /// Rank: w lives in W̃_{n+1}.
        #[arg(long)]
        n: Option<usize>,
    },
    /// The k-Grassmannian element w_λ.
    Grassmannian {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// k, when the partition strings do not carry it.
        #[arg(long)]
        k: Option<u32>,
        /// Rank: w_λ in W̃_{n+1} (default: the smallest that fits).
        #[arg(long)]
        n: Option<usize>,
    },
    /// All reduced words of w.
    Words {
        /// Signed permutation, e.g. `3,-4,-2,1`.
        #[arg(long)]
        w: String,
        /// Rank: w lives in W̃_{n+1}.
        #[arg(long)]
        n: Option<usize>,
    },
    /// A factorization w_λ = w · w_μ, if w is skew.
    SkewFind {
        /// Signed permutation, e.g. `3,-4,-2,1`.
        #[arg(long)]
        w: String,
        /// Rank: w lives in W̃_{n+1}.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Reduced words of w_λ w_μ⁻¹ and their standard tableaux.
    Bijection {
        /// Typed partition, e.g. `3,1:k=1:type=1` (plain parts for untyped commands).
        #[arg(long)]
        lambda: String,
        /// Inner typed partition (default empty).
        #[arg(long)]
        mu: Option<String>,
        /// k, when the partition strings do not carry it.
        #[arg(long)]
        k: Option<u32>,
        /// Convert a single word instead of listing all of them.
        #[arg(long)]
        word: Option<String>,
    },
    /// Interchange the letters 0 and 1 of a word.
    Iota {
        /// Word, e.g. `02120` or `0 2 1 2 0`.
        #[arg(long)]
        word: String,
    },
    /// Run a verification suite (or `all`).
    Verify {
        /// Suite name, or `all`.
        #[arg(value_parser = parse_suite_name)]
        suite: String,
        /// Largest |λ| swept.
        #[arg(long)]
        max_size: Option<u32>,
        /// Largest k swept.
        #[arg(long)]
        k: Option<u32>,
        /// Rank n for suites over W̃_{n+1} or P̃(k, n).
        #[arg(long)]
        n: Option<usize>,
        /// Largest p swept (pieri).
        #[arg(long)]
        p: Option<u32>,
        /// Largest ℓ(w) swept (coproduct, positivity).
        #[arg(long)]
        max_length: Option<u32>,
        /// Print every case, not only failures and the summary.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EtaMethod {
    Operator,
    Star,
    Tableaux,
}

enum Failure {
    Domain(Error),
    Verification(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Output {
    text: String,
    json: Value,
}

type CmdResult = Result<Output, Failure>;

fn poly_output(label: String, p: &SparsePoly) -> Output {
    Output { text: format!("{label} = {p}"), json: json!({ "label": label, "polynomial": p.to_json() }) }
}

fn typed(s: &str, k: Option<u32>) -> Result<TypedPartition, Error> {
    parse_typed(s, k)
}

fn inner_shape(mu: &Option<String>, lambda: &TypedPartition) -> Result<TypedPartition, Error> {
    match mu {
        None => Ok(TypedPartition::empty(lambda.k())),
        Some(s) => typed(s, Some(lambda.k())),
    }
}

fn permutation(s: &str, n: Option<usize>) -> Result<(SignedPermutation, usize), Error> {
    let w: SignedPermutation = s.parse()?;
    let n = n.unwrap_or(w.n()).max(w.n());
    Ok((w.embed(n), n))
}

fn ky_for(global: &Global, k: u32) -> usize {
    global.ky.unwrap_or(k as usize)
}

fn word_text(w: &[u8]) -> String {
    w.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn tableau_json(t: &TypedTableau) -> Value {
    serde_json::to_value(t.to_json()).expect("tableau serializes")
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

fn run(cli: &Cli) -> CmdResult {
    let g = &cli.global;
    let m = g.m as usize;
    match &cli.command {
        Command::Eta { lambda, k, method } => {
            let l = typed(lambda, *k)?;
            let ky = ky_for(g, l.k());
            let p = match method {
                EtaMethod::Operator => eta_in(&l, m, ky)?,
                EtaMethod::Star => eta_via_star_in(&l, m, ky)?,
                EtaMethod::Tableaux => eta_via_tableaux_in(&l, m, ky)?,
            };
            Ok(poly_output(format!("H[{l}]"), &p))
        }
        Command::Theta { lambda, k, hat } => {
            let l: Partition = lambda.parse()?;
            let ky = ky_for(g, *k);
            let (name, p) = if *hat {
                ("ThetaHat", theta_hat_in(&l, *k, m, ky)?)
            } else {
                ("Theta", theta_in(&l, *k, m, ky)?)
            };
            Ok(poly_output(format!("{name}[{l}; k={k}]"), &p))
        }
        Command::Schurq { lambda, p } => {
            let l: Partition = lambda.parse()?;
            let (name, poly) = if *p { ("P", schur_p_in(&l, m, 0)?) } else { ("Q", schur_q_in(&l, m, 0)?) };
            Ok(poly_output(format!("{name}[{l}]"), &poly))
        }
        Command::Schurs { lambda, y } => {
            let l: Partition = lambda.parse()?;
            let poly =
                if *y { schur_s_in(&l, 0, g.ky.unwrap_or(m), true) } else { schur_s_in(&l, m, 0, false) };
            Ok(poly_output(format!("s[{l}]"), &poly))
        }
        Command::Pieri { lambda, k, p, check } => {
            let l: Partition = lambda.parse()?;
            if let Some(w) = l.parts().windows(2).find(|w| w[0] == w[1] && w[0] > *k) {
                return Err(Error::NotKStrict(l.parts().to_vec(), w[0], *k).into());
            }
            let steps = pieri_steps(&l, *p, *k);
            let mut text: Vec<String> =
                steps.iter().map(|s| format!("{}  2^{}  N={}", s.target, s.exponent, s.n_comp)).collect();
            let rows: Vec<Value> = steps
                .iter()
                .map(|s| json!({ "mu": s.target.parts(), "exponent": s.exponent, "components": s.n_comp }))
                .collect();
            let mut holds = Value::Null;
            if *check {
                let ky = ky_for(g, *k);
                let product = eta_forge::eta::pieri_product(&l, *k, *p, m, ky)?;
                let mut sum = SparsePoly::zero(m, ky);
                for s in &steps {
                    sum += &theta_hat_in(&s.target, *k, m, ky)?.scale_pow2(s.exponent as i64);
                }
                let ok = product == sum;
                text.push(format!("polynomial identity: {}", if ok { "holds" } else { "FAILS" }));
                holds = Value::Bool(ok);
                if !ok {
                    return Err(Failure::Verification(Output {
                        text: text.join("\n"),
                        json: json!({ "lambda": l.parts(), "k": k, "p": p, "terms": rows, "holds": holds }),
                    }));
                }
            }
            Ok(Output {
                text: text.join("\n"),
                json: json!({ "lambda": l.parts(), "k": k, "p": p, "terms": rows, "holds": holds }),
            })
        }
        Command::Strip { lambda, mu, k } => {
            let l = typed(lambda, *k)?;
            let u = typed(mu, Some(l.k()))?;
            let stats = strip_stats(&l, &u)?;
            let text = format!(
                "{l} / {u}: m={} n_hat={} typed={} n={}",
                stats.m_stat,
                stats.n_hat,
                stats.is_typed_strip,
                stats.n_typed.map(|n| n.to_string()).unwrap_or_else(|| "-".into())
            );
            Ok(Output { text, json: serde_json::to_value(&stats).expect("stats serialize") })
        }
        Command::Tableaux { lambda, mu, k, max_entry } => {
            let l = typed(lambda, *k)?;
            let u = inner_shape(mu, &l)?;
            let ts = enumerate_typed_tableaux(&l, &u, *max_entry)?;
            Ok(tableau_list(ts))
        }
        Command::Standard { lambda, mu, k } => {
            let l = typed(lambda, *k)?;
            let u = inner_shape(mu, &l)?;
            Ok(tableau_list(enumerate_standard(&l, &u)?))
        }
        Command::Bitableaux { lambda, k } => {
            let l = typed(lambda, *k)?;
            let ky = ky_for(g, l.k());
            let bs = enumerate_bitableaux(&l, m, ky)?;
            let text = bs
                .iter()
                .enumerate()
                .map(|(i, b)| format!("#{} n={}\n{}", i + 1, b.n(), indent(&b.to_string())))
                .chain(std::iter::once(format!("{} bitableaux", bs.len())))
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({ "count": bs.len(), "bitableaux": bs.iter().map(|b| b.to_json()).collect::<Vec<_>>() });
            Ok(Output { text, json })
        }
        Command::Eskew { lambda, mu, k } => {
            let l = typed(lambda, *k)?;
            let u = inner_shape(mu, &l)?;
            Ok(poly_output(format!("E[{l} / {u}]"), &e_skew_in(&l, &u, m)?))
        }
        Command::Stanley { w } => {
            let (w, _) = permutation(w, None)?;
            Ok(poly_output(format!("E[{w}]"), &stanley_e(&w, &Truncation::new(m))?))
        }
        Command::Schubert { w, n } => {
            let (w, n) = permutation(w, *n)?;
            Ok(poly_output(format!("DS[{w}]"), &schubert_ds(&w, &Truncation::new(m), n)?))
        }
        Command::Grassmannian { lambda, k, n } => {
            let l = typed(lambda, *k)?;
            let n = n.unwrap_or_else(|| minimal_rank(&l));
            let w = grassmannian_element(&l, n)?;
            Ok(Output {
                text: format!("{w}"),
                json: json!({ "lambda": l.to_string(), "n": n, "w": w, "length": w.length() }),
            })
        }
        Command::Words { w, n } => {
            let (w, _) = permutation(w, *n)?;
            let words = w.reduced_words();
            let mut text: Vec<String> = words.iter().map(|x| word_text(x)).collect();
            text.push(format!("{} reduced words, length {}", words.len(), w.length()));
            Ok(Output {
                text: text.join("\n"),
                json: json!({ "w": w, "length": w.length(), "words": words }),
            })
        }
        Command::SkewFind { w, n } => {
            let (w, n) = permutation(w, *n)?;
            match is_skew(&w, n)? {
                Some(wit) => Ok(Output {
                    text: format!("skew: k={} lambda={} mu={}", wit.k, wit.lambda, wit.mu),
                    json: json!({ "w": w, "skew": true, "k": wit.k, "lambda": wit.lambda.to_string(), "mu": wit.mu.to_string() }),
                }),
                None => Ok(Output { text: "not skew".into(), json: json!({ "w": w, "skew": false }) }),
            }
        }
        Command::Bijection { lambda, mu, k, word } => {
            let l = typed(lambda, *k)?;
            let u = inner_shape(mu, &l)?;
            let words: Vec<Word> = match word {
                Some(s) => vec![parse_word(s)?],
                None => {
                    let n = minimal_rank(&l);
                    skew_element(&l, &u, n)?.reduced_words()
                }
            };
            let mut text = Vec::new();
            let mut rows = Vec::new();
            for x in &words {
                let t = word_to_tableau(x, &l, &u)?;
                debug_assert_eq!(tableau_to_word(&t)?, *x);
                text.push(format!("{}\n{}", word_text(x), indent(&t.to_string())));
                rows.push(json!({ "word": x, "tableau": tableau_json(&t) }));
            }
            Ok(Output { text: text.join("\n"), json: json!({ "pairs": rows }) })
        }
        Command::Iota { word } => {
            let x = parse_word(word)?;
            let y = iota(&x);
            Ok(Output { text: word_text(&y), json: json!({ "word": x, "iota": y }) })
        }
        Command::Verify { suite, max_size, k, n, p, max_length, verbose } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let mut text = Vec::new();
            let mut reports = Vec::new();
            let mut all_ok = true;
            for s in suites {
                let mut config: VerifyConfig = s.default_config();
                config.seed = g.seed;
                if let Some(v) = max_size {
                    config.max_size = *v;
                }
                if let Some(v) = k {
                    config.max_k = *v;
                }
                if let Some(v) = n {
                    config.n = *v;
                }
                if let Some(v) = p {
                    config.max_p = *v;
                }
                if let Some(v) = max_length {
                    config.max_length = *v;
                }
                let report = s.run(&config)?;
                all_ok &= report.passed();
                if *verbose {
                    text.push(report.to_string());
                } else {
                    for f in report.failures() {
                        text.push(format!("FAIL {}: {}", f.case, f.detail.as_deref().unwrap_or("")));
                    }
                    for note in &report.notes {
                        text.push(format!("note: {note}"));
                    }
                    text.push(report.summary());
                }
                reports.push(report);
            }
            let out = Output {
                text: text.join("\n"),
                json: serde_json::to_value(&reports).expect("reports serialize"),
            };
            if all_ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn tableau_list(ts: Vec<TypedTableau>) -> Output {
    let text = ts
        .iter()
        .enumerate()
        .map(|(i, t)| format!("#{} n={}\n{}", i + 1, t.n(), indent(&t.to_string())))
        .chain(std::iter::once(format!("{} tableaux", ts.len())))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({ "count": ts.len(), "tableaux": ts.iter().map(tableau_json).collect::<Vec<_>>() });
    Output { text, json }
}

#[derive(Serialize)]
struct ErrorJson {
    error: String,
}

fn parse_suite_name(s: &str) -> Result<String, String> {
    if s == "all" || s.parse::<Suite>().is_ok() {
        return Ok(s.to_string());
    }
    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
    Err(format!("expected `all` or one of: {}", names.join(", ")))
}

fn emit(global: &Global, out: &Output) -> Result<(), String> {
    let rendered_json = serde_json::to_string_pretty(&out.json).expect("json renders");
    let body = match global.format {
        Format::Text => &out.text,
        Format::Json => &rendered_json,
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let mut stdout = io::stdout().lock();
    if let Err(e) = writeln!(stdout, "{body}") {
        if e.kind() != io::ErrorKind::BrokenPipe {
            return Err(format!("cannot write output: {e}"));
        }
    }
    if let Some(path) = &global.out {
        fs::write(path, format!("{rendered_json}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    if let Some(b) = cli.global.budget {
        set_expansion_budget(b);
    }
    match run(&cli) {
        Ok(out) => match emit(&cli.global, &out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Domain(e)) => {
            match cli.global.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&ErrorJson { error: e.to_string() }).expect("json renders")
                ),
            }
            ExitCode::from(1)
        }
        Err(Failure::Verification(out)) => {
            let _ = emit(&cli.global, &out);
            ExitCode::from(3)
        }
    }
}
