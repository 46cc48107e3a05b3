use std::fmt;
use std::str::FromStr;

use synalg::lang::read_dfa;
use synalg::{compile, parse_regex, Alphabet, Dfa, Error, Result};

/// Source of the language under study.
#[derive(Clone, Debug)]
pub enum Source {
    Regex(String),
    DfaPath(String),
}

/// Loads the automaton, extending its alphabet to `alphabet` when given.
pub fn load(source: &Source, alphabet: Option<&str>) -> Result<Dfa> {
    let extra = alphabet.map(Alphabet::parse).transpose()?;
    match source {
        Source::Regex(text) => {
            let re = parse_regex(text, extra.as_ref())?;
            let al = match extra {
                Some(a) => a,
                None => {
                    let letters = re.letters();
                    if letters.is_empty() {
                        return Err(Error::InvalidAlphabet(
                            "the expression has no letters; pass --alphabet".into(),
                        ));
                    }
                    Alphabet::new(letters)?
                }
            };
            compile(&re, &al)
        }
        Source::DfaPath(path) => {
            let d = Dfa::from_file(&read_dfa(path)?)?;
            match extra {
                Some(a) => d.with_alphabet(&d.alphabet().union(&a)),
                None => Ok(d),
            }
        }
    }
}

/// Letters mentioned by a source: those of the expression, or the file's alphabet.
pub fn letters_of(source: &Source) -> Result<Vec<char>> {
    match source {
        Source::Regex(text) => Ok(parse_regex(text, None)?.letters()),
        Source::DfaPath(path) => Ok(read_dfa(path)?.alphabet.symbols().to_vec()),
    }
}

/// A chain link: a path ending in `.dfa` or an expression.
pub fn link_source(text: &str) -> Source {
    if text.ends_with(".dfa") {
        Source::DfaPath(text.to_string())
    } else {
        Source::Regex(text.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldName {
    Q,
    Fp(u64),
}

pub const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

impl FromStr for FieldName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "Q" || s == "q" {
            return Ok(FieldName::Q);
        }
        let p: u64 = s
            .strip_prefix(['F', 'f'])
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| format!("unknown field '{s}', expected Q or Fp such as F2"))?;
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(format!("{p} is not prime"));
        }
        if !PRIMES.contains(&p) {
            return Err(format!("F{p} is not built in; available: Q, {}", available()));
        }
        Ok(FieldName::Fp(p))
    }
}

fn available() -> String {
    PRIMES.iter().map(|p| format!("F{p}")).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for FieldName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldName::Q => write!(f, "Q"),
            FieldName::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// Runs `$body` with the type alias `$F` bound to the selected field.
macro_rules! with_field {
    ($name:expr, $F:ident => $body:expr) => {
        match $name {
            $crate::input::FieldName::Q => {
                type $F = synalg::Rational;
                $body
            }
            $crate::input::FieldName::Fp(2) => {
                type $F = synalg::Fp<2>;
                $body
            }
            $crate::input::FieldName::Fp(3) => {
                type $F = synalg::Fp<3>;
                $body
            }
            $crate::input::FieldName::Fp(5) => {
                type $F = synalg::Fp<5>;
                $body
            }
            $crate::input::FieldName::Fp(7) => {
                type $F = synalg::Fp<7>;
                $body
            }
            $crate::input::FieldName::Fp(11) => {
                type $F = synalg::Fp<11>;
                $body
            }
            $crate::input::FieldName::Fp(13) => {
                type $F = synalg::Fp<13>;
                $body
            }
            $crate::input::FieldName::Fp(p) => unreachable!("F{p} rejected by the parser"),
        }
    };
}
pub(crate) use with_field;
