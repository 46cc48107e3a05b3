use serde::Serialize;
use serde_json::{Map, Value};

use synalg::monoid::{green_relations, minimal_ideal, suschkevitch_idempotent, FiniteMonoid, SyntacticMonoid};
use synalg::Dfa;

pub const VERSION: u64 = 1;

/// The JSON object printed for a command: the report's fields plus
/// `version` and `command`. Keys come out sorted.
pub fn envelope(command: &str, report: &impl Serialize) -> serde_json::Result<Value> {
    let mut obj = match serde_json::to_value(report)? {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    obj.insert("version".into(), VERSION.into());
    obj.insert("command".into(), command.into());
    Ok(Value::Object(obj))
}

#[derive(Serialize)]
pub struct DfaJson {
    pub alphabet: String,
    pub states: usize,
    pub initial: Option<usize>,
    pub finals: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

impl DfaJson {
    pub fn new(d: &Dfa) -> Self {
        let al = d.alphabet();
        DfaJson {
            alphabet: al.symbols().iter().collect(),
            states: d.state_count(),
            initial: d.initial(),
            finals: d.final_states().collect(),
            transitions: d.transitions().map(|(p, a, q)| (p, al.symbol(a).to_string(), q)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct AutomatonOutput {
    pub dfa: DfaJson,
    pub empty: bool,
}

#[derive(Serialize)]
pub struct ElementJson {
    pub word: String,
    pub rank: usize,
    pub idempotent: bool,
    pub accepting: bool,
}

#[derive(Serialize)]
pub struct CellJson {
    pub elements: Vec<String>,
    pub group: bool,
}

#[derive(Serialize)]
pub struct IdealJson {
    pub rank: usize,
    pub cells: Vec<Vec<CellJson>>,
}

#[derive(Serialize)]
pub struct SuschkevitchJson {
    pub e: String,
    pub word: String,
    pub group: Vec<String>,
}

#[derive(Serialize)]
pub struct MonoidOutput {
    pub size: usize,
    pub states: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
    pub elements: Vec<ElementJson>,
    pub d_classes: usize,
    pub r_classes: usize,
    pub l_classes: usize,
    pub h_classes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_ideal: Option<IdealJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suschkevitch: Option<SuschkevitchJson>,
}

impl MonoidOutput {
    /// Elements, Green classes, and when available the minimal ideal and a
    /// Suschkevitch idempotent.
    pub fn new(sm: &SyntacticMonoid, birecurrent: bool) -> Self {
        let m: &FiniteMonoid = &sm.monoid;
        let green = green_relations(m);
        let ideal = minimal_ideal(m, &green).ok().map(|r| IdealJson {
            rank: r.rank,
            cells: r
                .cells
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| CellJson {
                            elements: c.elements.iter().map(|&x| m.render(x)).collect(),
                            group: c.group,
                        })
                        .collect()
                })
                .collect(),
        });
        let sus = if birecurrent { suschkevitch_idempotent(&sm.minimal).ok() } else { None };
        MonoidOutput {
            size: m.len(),
            states: sm.minimal.state_count(),
            zero: m.zero().map(|z| m.render(z)),
            elements: (0..m.len())
                .map(|x| ElementJson {
                    word: m.render(x),
                    rank: m.rank(x),
                    idempotent: green.idempotent[x],
                    accepting: sm.is_accepting(x),
                })
                .collect(),
            d_classes: green.d_count,
            r_classes: green.r_count,
            l_classes: green.l_count,
            h_classes: green.h_count,
            minimal_ideal: ideal,
            suschkevitch: sus.map(|(mm, s)| SuschkevitchJson {
                e: mm.render(s.e),
                word: mm.alphabet().render(&s.word),
                group: s.group.iter().map(|&g| mm.render(g)).collect(),
            }),
        }
    }
}
