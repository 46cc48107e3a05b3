//! `synalg`: command-line front end. Every command prints one JSON object.

mod input;
mod output;

use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use synalg::algebra::{condensation_check, syntactic_algebra};
use synalg::classify::{classify, indicator, is_birecurrent, is_cyclic, mcalister_check, strongly_cyclic_language};
use synalg::lang::write_dfa;
use synalg::monoid::{suschkevitch_idempotent, syntactic_monoid_capped};
use synalg::traces::{chain_verify, external_power, permutation_lemma_oracle, verify_trace_identity, ChainSpec};
use synalg::{is_completely_reducible, minimize, syntactic_rep, Config, Dfa, Error, Field};

use input::{letters_of, link_source, load, with_field, FieldName, Source};
use output::{envelope, AutomatonOutput, DfaJson, MonoidOutput};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN_COMMAND: u8 = 64;

#[derive(Parser)]
#[command(name = "synalg", version, about = "Syntactic algebras of rational languages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Field of scalars: Q, F2, F3, F5, F7, F11 or F13.
    #[arg(long, global = true, default_value = "Q")]
    field: FieldName,
    /// Length bound for word-by-word checks.
    #[arg(long, global = true, default_value_t = 8)]
    max_len: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random attempts per piece when decomposing.
    #[arg(long, global = true, default_value_t = 64)]
    trials: usize,
    /// Largest monoid that will be enumerated.
    #[arg(long, global = true, default_value_t = synalg::config::DEFAULT_MONOID_CAP)]
    monoid_cap: usize,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Language {
    /// Rational expression: letters, `+`, `*`, parentheses, `1`, `0`.
    #[arg(long)]
    regex: Option<String>,
    /// Automaton file.
    #[arg(long)]
    dfa: Option<String>,
}

#[derive(Args, Clone)]
struct Input {
    #[command(flatten)]
    language: Language,
    /// Alphabet, e.g. `ab`; defaults to the letters of the expression or file.
    #[arg(long)]
    alphabet: Option<String>,
}

impl Input {
    fn source(&self) -> Source {
        match (&self.language.regex, &self.language.dfa) {
            (Some(r), _) => Source::Regex(r.clone()),
            (_, Some(p)) => Source::DfaPath(p.clone()),
            (None, None) => unreachable!("clap requires one input"),
        }
    }

    fn load(&self) -> synalg::Result<Dfa> {
        load(&self.source(), self.alphabet.as_deref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dfa,
}

#[derive(Subcommand)]
enum Command {
    /// Compile to a deterministic automaton.
    Compile {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Minimal automaton.
    Minimize {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Syntactic monoid with Green classes.
    Monoid {
        #[command(flatten)]
        input: Input,
    },
    /// Complete reducibility of the characteristic series.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Recurrence, cyclicity and repetition flags.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Condensation criterion for an idempotent, by default a Suschkevitch one.
    Condense {
        #[command(flatten)]
        input: Input,
        /// Word whose image is the idempotent.
        #[arg(long)]
        idempotent: Option<String>,
    },
    /// Cyclically nonzero words of the automaton.
    StronglyCyclic {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Alternating trace identity on all words up to --max-len.
    TraceIdentity {
        #[command(flatten)]
        input: Input,
        /// Include the external powers.
        #[arg(long)]
        powers: bool,
    },
    /// Chain of differences of nested links against a target language.
    ChainVerify {
        #[command(flatten)]
        input: Input,
        /// A link: expression, or automaton file ending in `.dfa`. Repeat in
        /// decreasing order.
        #[arg(long = "link", required = true)]
        links: Vec<String>,
    },
    /// Character conditions for the indicator of the syntactic image.
    Mcalister {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive check of the permutation lemma.
    LemmaOracle {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

/// A report and whether the check it records came out positive.
struct Outcome {
    json: Value,
    text: Option<String>,
    ok: bool,
}

#[derive(Serialize)]
struct Checked<T: Serialize> {
    ok: bool,
    #[serde(flatten)]
    report: T,
}

fn json(command: &str, report: &impl Serialize) -> synalg::Result<Outcome> {
    let json = envelope(command, report).map_err(|e| Error::Io(e.to_string()))?;
    Ok(Outcome { json, text: None, ok: true })
}

fn checked(command: &str, ok: bool, report: impl Serialize) -> synalg::Result<Outcome> {
    Ok(Outcome { ok, ..json(command, &Checked { ok, report })? })
}

fn automaton(command: &str, d: &Dfa, format: Format) -> synalg::Result<Outcome> {
    let mut out = json(command, &AutomatonOutput { dfa: DfaJson::new(d), empty: d.initial().is_none() })?;
    if let Format::Dfa = format {
        out.text = Some(write_dfa(&d.to_file()));
    }
    Ok(out)
}

fn run(cli: &Cli) -> synalg::Result<Outcome> {
    let cfg = Config { monoid_cap: cli.monoid_cap, max_len: cli.max_len, seed: cli.seed, trials: cli.trials };
    match &cli.command {
        Command::Compile { input, format } => automaton("compile", &input.load()?, *format),
        Command::Minimize { input, format } => automaton("minimize", &minimize(&input.load()?), *format),
        Command::Monoid { input } => {
            let d = input.load()?;
            let sm = syntactic_monoid_capped(&d, cfg.monoid_cap)?;
            let bi = is_birecurrent(&sm.minimal)?;
            json("monoid", &MonoidOutput::new(&sm, bi))
        }
        Command::Analyze { input } => {
            let d = input.load()?;
            with_field!(cli.field, F => json("analyze", &is_completely_reducible::<F>(&d, &cfg)?))
        }
        Command::Classify { input } => json("classify", &classify(&input.load()?, &cfg)?),
        Command::Condense { input, idempotent } => {
            let d = minimize(&input.load()?);
            let word = match idempotent {
                Some(w) => d.alphabet().word(w)?,
                None => {
                    let (m, s) = suschkevitch_idempotent(&d)?;
                    m.word(s.e)
                }
            };
            let rendered = d.alphabet().render(&word);
            with_field!(cli.field, F => {
                let rep = syntactic_rep::<F>(&d)?.rep;
                let alg = syntactic_algebra(&rep);
                let r = condensation_check(&alg, &rep.mu_word(&word))?;
                #[derive(Serialize)]
                struct Condensed<R: Serialize> {
                    field: String,
                    idempotent_word: String,
                    #[serde(flatten)]
                    report: R,
                }
                let ok = r.conclusion;
                checked("condense", ok, Condensed { field: F::name(), idempotent_word: rendered, report: r })
            })
        }
        Command::StronglyCyclic { input, format } => {
            let s = minimize(&strongly_cyclic_language(&input.load()?, &cfg)?);
            let mut out = automaton("strongly-cyclic", &s, *format)?;
            if let Value::Object(m) = &mut out.json {
                m.insert("cyclic".into(), is_cyclic(&s)?.into());
            }
            Ok(out)
        }
        Command::TraceIdentity { input, powers } => {
            let d = input.load()?;
            let r = verify_trace_identity(&d, cli.max_len, &cfg)?;
            let ok = r.holds;
            let mut out = checked("trace-identity", ok, r)?;
            if *powers {
                let ps = (1..=d.state_count())
                    .map(|k| external_power(&d, k).map(|p| p.to_report()))
                    .collect::<synalg::Result<Vec<_>>>()?;
                if let Value::Object(m) = &mut out.json {
                    m.insert("powers".into(), serde_json::to_value(ps).map_err(|e| Error::Io(e.to_string()))?);
                }
            }
            Ok(out)
        }
        Command::ChainVerify { input, links } => {
            let sources: Vec<Source> = links.iter().map(|l| link_source(l)).collect();
            let mut al: Vec<char> = input.alphabet.as_deref().unwrap_or("").chars().collect();
            for s in sources.iter().chain([&input.source()]) {
                al.extend(letters_of(s)?);
            }
            al.sort_unstable();
            al.dedup();
            let al: String = al.into_iter().collect();
            let target = load(&input.source(), Some(&al))?;
            let links = sources
                .iter()
                .map(|s| load(s, Some(&al)))
                .collect::<synalg::Result<Vec<_>>>()?;
            let r = chain_verify(&ChainSpec::new(links)?, &target, cli.max_len, &cfg)?;
            let ok = r.holds();
            checked("chain-verify", ok, r)
        }
        Command::Mcalister { input } => {
            if cli.field != FieldName::Q {
                return Err(Error::WrongCharacteristic { expected: "0".into(), actual: field_char(cli.field) });
            }
            let sm = syntactic_monoid_capped(&input.load()?, cfg.monoid_cap)?;
            let r = mcalister_check::<synalg::Rational>(&sm.monoid, &indicator(&sm))?;
            let ok = r.holds();
            checked("mcalister", ok, r)
        }
        Command::LemmaOracle { max_size } => {
            let r = permutation_lemma_oracle(*max_size)?;
            let ok = r.holds;
            checked("lemma-oracle", ok, r)
        }
    }
}

fn field_char(f: FieldName) -> u64 {
    match f {
        FieldName::Q => 0,
        FieldName::Fp(p) => p,
    }
}

fn emit(cli: &Cli, out: &Outcome) -> std::io::Result<()> {
    let body = match &out.text {
        Some(t) => t.clone(),
        None => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
    };
    match &cli.output {
        Some(path) => fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand => EXIT_UNKNOWN_COMMAND,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(EXIT_INPUT);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_NEGATIVE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = if matches!(e, Error::HypothesisViolation(_)) { EXIT_NEGATIVE } else { EXIT_INPUT };
            ExitCode::from(code)
        }
    }
}
