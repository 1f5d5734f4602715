//! JSON and text renderings of library results.

use kunz_core::kunzcone::Face;
use kunz_core::nilsemigroup::{AperyVerdict, KunzNilsemigroup};
use kunz_core::Int;
use serde_json::{json, Value};

pub fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn nilsemigroup(n: &KunzNilsemigroup) -> Value {
    let trades: Vec<Value> = n.minimal_presentation().trades.iter().map(|(z, w)| json!([z, w])).collect();
    json!({
        "m": n.m(),
        "sums": n.tight_sums().iter().map(|&(a, b, c)| [a, b, c]).collect::<Vec<_>>(),
        "atoms": n.atoms(),
        "presentation": trades,
        "dim": n.dimension(),
    })
}

pub fn verdict(v: &AperyVerdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

pub fn face(f: &Face) -> Value {
    serde_json::to_value(f.record()).expect("faces serialize")
}

fn tuple(v: &[impl std::fmt::Display]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn verdict_text(v: &AperyVerdict) -> String {
    match v {
        AperyVerdict::Apery { witness } => format!("verdict: Apery\nwitness: {}\n", tuple(&witness.entries)),
        AperyVerdict::NotApery { certificate } => format!("verdict: NotApery\ncertificate: {}\n", tuple(certificate)),
    }
}

pub fn nilsemigroup_text(n: &KunzNilsemigroup) -> String {
    let sums: Vec<String> = n.tight_sums().iter().map(|(a, b, c)| format!("{a}+{b}={c}")).collect();
    let trades: Vec<String> = n.minimal_presentation().trades.iter().map(|(z, w)| format!("{} ~ {}", tuple(z), tuple(w))).collect();
    format!(
        "m: {}\ntight sums: {{{}}}\natoms: {}\npresentation: {{{}}}\ndim: {}\n",
        n.m(),
        sums.join(", "),
        tuple(n.atoms()),
        trades.join(", "),
        n.dimension()
    )
}

pub fn face_text(f: &Face) -> String {
    let eqs: Vec<String> = f.equality_set.iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
    format!("equalities: {{{}}}\ndim: {}\ndegenerate: {}\n", eqs.join(", "), f.dim, f.degenerate)
}
