//! JSON renderings of reports. Object keys come out sorted and every
//! membership value is a string such as `"4/5"`.

use serde_json::{json, Map, Value};

use super::format::format_fuzzy;
use super::parser::{parse_element_literal, parse_fuzzy_spec, parse_value};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::primeness::{Classification, DiagramReport, EdgeKind, EdgeOutcome, EdgeStatus, Witness};
use crate::radical::RadicalReport;
use crate::ring::{Element, Ring};
use crate::scalar::Scalar;
use crate::Membership;

fn lit(ring: &Ring, x: &Element) -> Value {
    Value::String(ring.display_element(x))
}

pub fn witness_json<V: Scalar>(ring: &Ring, w: &Witness<V>) -> Result<Value> {
    Ok(match w {
        Witness::Pair { x, y } => json!({"kind": "pair", "x": lit(ring, x), "y": lit(ring, y)}),
        Witness::Element { x } => json!({"kind": "element", "x": lit(ring, x)}),
        Witness::Cut { alpha, x, y } => {
            let mut m = Map::new();
            m.insert("kind".into(), "cut".into());
            m.insert("alpha".into(), alpha.to_string().into());
            m.insert("x".into(), lit(ring, x));
            if let Some(y) = y {
                m.insert("y".into(), lit(ring, y));
            }
            Value::Object(m)
        }
        Witness::Singletons { x, t, y, s } => json!({
            "kind": "singletons", "x": lit(ring, x), "t": t.to_string(), "y": lit(ring, y), "s": s.to_string()
        }),
        Witness::Singleton { x, t } => json!({"kind": "singleton", "x": lit(ring, x), "t": t.to_string()}),
        Witness::Ideal(i) => json!({"kind": "ideal", "ideal": format_fuzzy(i)?}),
    })
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Precondition(format!("malformed witness: {}", msg.into()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.get(key).and_then(Value::as_str).ok_or_else(|| bad(format!("missing string field `{key}`")))
}

fn elem(ring: &Ring, v: &Value, key: &str) -> Result<Element> {
    ring.element_from_literal(&parse_element_literal(field(v, key)?)?)
}

fn val(v: &Value, key: &str) -> Result<Membership> {
    Ok(parse_value(field(v, key)?)?)
}

/// Reads back a witness written by [`witness_json`].
pub fn witness_from_json(ring: &Ring, v: &Value) -> Result<Witness<Membership>> {
    Ok(match field(v, "kind")? {
        "pair" => Witness::Pair { x: elem(ring, v, "x")?, y: elem(ring, v, "y")? },
        "element" => Witness::Element { x: elem(ring, v, "x")? },
        "cut" => Witness::Cut {
            alpha: val(v, "alpha")?,
            x: elem(ring, v, "x")?,
            y: if v.get("y").is_some() { Some(elem(ring, v, "y")?) } else { None },
        },
        "singletons" => Witness::Singletons {
            x: elem(ring, v, "x")?,
            t: val(v, "t")?,
            y: elem(ring, v, "y")?,
            s: val(v, "s")?,
        },
        "singleton" => Witness::Singleton { x: elem(ring, v, "x")?, t: val(v, "t")? },
        "ideal" => Witness::Ideal(parse_fuzzy_spec(ring, field(v, "ideal")?)?),
        other => return Err(bad(format!("unknown kind `{other}`"))),
    })
}

fn status_name(s: EdgeStatus) -> &'static str {
    match s {
        EdgeStatus::Holds => "implied",
        EdgeStatus::Violated => "violated",
        EdgeStatus::CounterexampleFound => "counterexample",
        EdgeStatus::NoCounterexample => "none-found",
    }
}

fn kind_name(k: EdgeKind) -> &'static str {
    match k {
        EdgeKind::Implication => "asserted",
        EdgeKind::CommutativeImplication => "asserted-commutative",
        EdgeKind::ReportedCommutative => "reported-commutative",
        EdgeKind::Reported => "reported",
        EdgeKind::NonImplication => "non-implication",
    }
}

fn edges_json<V: Scalar>(edges: &[EdgeOutcome], corpus: &[FuzzyIdeal<V>]) -> Result<Value> {
    let mut out = Vec::with_capacity(edges.len());
    for e in edges {
        let witness = match e.witness {
            Some(i) => json!({"index": i, "fuzzy": format_fuzzy(&corpus[i])?}),
            None => Value::Null,
        };
        out.push(json!({
            "edge": e.edge,
            "kind": kind_name(e.kind),
            "status": status_name(e.status),
            "checked": e.checked,
            "witness": witness,
        }));
    }
    Ok(Value::Array(out))
}

/// The classification of one fuzzy ideal, with the diagram edges
/// evaluated at it.
pub fn classification_json<V: Scalar>(
    p: &FuzzyIdeal<V>,
    c: &Classification<V>,
    edges: &[EdgeOutcome],
) -> Result<Value> {
    let ring = p.ring();
    let mut notions = Map::new();
    let mut witnesses = Map::new();
    for (n, v) in &c.verdicts {
        notions.insert(n.name().into(), v.holds.into());
        if let Some(w) = &v.witness {
            witnesses.insert(n.name().into(), witness_json(ring, w)?);
        }
    }
    Ok(json!({
        "ring": ring.spec().to_string(),
        "fuzzy": format_fuzzy(p)?,
        "commutative": c.commutative,
        "notions": notions,
        "witnesses": witnesses,
        "diagram": edges_json(edges, std::slice::from_ref(p))?,
    }))
}

pub fn radical_json<V: Scalar>(r: &RadicalReport<V>, semiprime: bool) -> Result<Value> {
    let ring = r.input.ring();
    let trace: Vec<Value> = r
        .trace
        .iter()
        .map(|e| {
            json!({
                "x": lit(ring, &e.x),
                "levels": e.levels.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "sup": e.sup.to_string(),
            })
        })
        .collect();
    let mut witnesses = Vec::new();
    for (x, p) in &r.witnesses {
        witnesses.push(json!({"x": lit(ring, x), "prime": format_fuzzy(p)?}));
    }
    Ok(json!({
        "ring": ring.spec().to_string(),
        "fuzzy": format_fuzzy(&r.input)?,
        "frad": format_fuzzy(&r.frad)?,
        "fixed_point": r.frad == r.input,
        "semiprime": semiprime,
        "trace": trace,
        "witnesses": witnesses,
    }))
}

/// A diagram run over a corpus; `meta` describes how the corpus was made.
pub fn diagram_json<V: Scalar>(
    ring: &Ring,
    corpus: &[FuzzyIdeal<V>],
    report: &DiagramReport<V>,
    meta: Value,
) -> Result<Value> {
    let mut counts = Map::new();
    for n in crate::primeness::Notion::ALL {
        let k = report.classifications.iter().filter(|c| c.holds(n)).count();
        counts.insert(n.name().into(), k.into());
    }
    Ok(json!({
        "ring": ring.spec().to_string(),
        "commutative": ring.is_commutative(),
        "corpus": meta,
        "size": corpus.len(),
        "counts": counts,
        "diagram": edges_json(&report.edges, corpus)?,
    }))
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
