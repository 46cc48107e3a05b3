use std::path::PathBuf;

use proptest::prelude::*;

use synalg::algebra::series_combine_cr;
use synalg::automata::fixtures::{bidelay, even, weakly};
use synalg::automata::{boolean_combine, minimize, BoolOp};
use synalg::classify::{is_cyclic, strongly_cyclic_language};
use synalg::lang::{read_dfa, DfaFile};
use synalg::{
    compile, completely_reducible_verdict, parse_regex, syntactic_monoid, syntactic_rep, Alphabet, Config, Dfa,
    Rational,
};

type Q = Rational;

fn data(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect()
}

fn dfa(x: &str) -> Dfa {
    compile(&parse_regex(x, None).unwrap(), &Alphabet::parse("ab").unwrap()).unwrap()
}

#[test]
fn data_files_match_fixtures() {
    for (name, fixture) in [("even.dfa", even()), ("weakly.dfa", weakly()), ("bidelay.dfa", bidelay())] {
        let d = Dfa::from_file(&read_dfa(data(name)).unwrap()).unwrap();
        assert_eq!(d, fixture, "{name}");
    }
}

#[test]
fn representation_dimension_is_bounded() {
    // a quotient of both the regular representation and the automaton representation
    for x in ["(ab)*", "(a+ba)*", "ab*", "(aa+b)*"] {
        let d = dfa(x);
        let m = syntactic_monoid(&d).unwrap();
        let r = syntactic_rep::<Q>(&d).unwrap();
        assert!(r.dim() <= m.monoid.len(), "{x}");
        assert!(r.dim() <= minimize(&d).state_count(), "{x}");
    }
}

#[test]
fn linear_combinations_of_reducible_series() {
    let one = Q::from_integer(1.into());
    let two = Q::from_integer(2.into());
    let x = dfa("(ab)*");
    let y = dfa("(a+ba)*");
    let z = strongly_cyclic_language(&even(), &Config::default()).unwrap();
    assert!(series_combine_cr(&[(one.clone(), &x), (two.clone(), &y)]).unwrap());
    assert!(series_combine_cr(&[(two, &x), (-one.clone(), &z), (one.clone(), &y)]).unwrap());
    // ab* is not reducible, and neither is any combination isolating it
    let bad = dfa("ab*");
    assert!(!series_combine_cr(&[(one, &bad)]).unwrap());
}

fn bifix_star() -> impl Strategy<Value = String> {
    prop::collection::vec("[ab]{1,4}", 1..=4)
        .prop_filter("bifix", |code| {
            code.iter().enumerate().all(|(i, u)| {
                code.iter().enumerate().all(|(j, v)| i == j || !(v.starts_with(u.as_str()) || v.ends_with(u.as_str())))
            })
        })
        .prop_map(|code| format!("({})*", code.join("+")))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn dfa_text_round_trip(x in bifix_star()) {
        let d = dfa(&x);
        let text = d.to_file().to_text();
        let back = DfaFile::parse(&text).unwrap();
        prop_assert_eq!(&back, &d.to_file());
        prop_assert_eq!(Dfa::from_file(&back).unwrap(), d);
    }

    #[test]
    fn bifix_stars_and_their_unions_with_empty_word(x in bifix_star()) {
        let d = dfa(&x);
        prop_assert!(completely_reducible_verdict::<Q>(&d).unwrap());
        let plus = boolean_combine(BoolOp::Difference, &d, Some(&dfa("1"))).unwrap();
        if minimize(&plus).initial().is_some() {
            prop_assert!(completely_reducible_verdict::<Q>(&plus).unwrap());
        }
    }

    #[test]
    fn sums_of_bifix_stars(x in bifix_star(), y in bifix_star(), c in -3i64..=3) {
        let (dx, dy) = (dfa(&x), dfa(&y));
        let one = Q::from_integer(1.into());
        prop_assert!(series_combine_cr(&[(one, &dx), (Q::from_integer(c.into()), &dy)]).unwrap());
    }

    #[test]
    fn strongly_cyclic_sets_are_cyclic_and_reducible(x in bifix_star()) {
        let s = strongly_cyclic_language(&minimize(&dfa(&x)), &Config::default()).unwrap();
        prop_assert!(is_cyclic(&s).unwrap());
        if minimize(&s).initial().is_some() {
            prop_assert!(completely_reducible_verdict::<Q>(&s).unwrap());
        }
    }
}
