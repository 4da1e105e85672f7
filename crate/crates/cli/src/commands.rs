use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};

use rayon::prelude::*;
use serde_json::{json, Value};

use fuzzideal::corpus::{default_palette, exhaustive_corpus, random_corpus, sample_pairs, DEFAULT_CORPUS_CAP};
use fuzzideal::dsl::{
    classification_json, diagram_json, format_fuzzy, format_ideal, parse_fuzzy_spec, parse_ring_spec,
    parse_value_list, radical_json, to_json_string, witness_from_json,
};
use fuzzideal::ideal::{
    enumerate_ideals, is_completely_prime_ideal, is_completely_semiprime_ideal, is_prime_ideal, is_semiprime_ideal,
};
use fuzzideal::primeness::{
    charprime_equivalence_check, charsemi_equivalence_check, diagram_report, is_semiprime_new, EdgeStatus,
};
use fuzzideal::radical::{
    frad_intersection_check, radical_properties_check, radical_report, ring_radical_reading,
    semiprime_intersection_check,
};
use fuzzideal::{build_ring, classify, CrispIdeal, Error, Membership, Notion, RationalFuzzyIdeal, Ring, ValueGrid};

use crate::config::{Cli, Command, CorpusMode, Format, Options};

pub enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<fuzzideal::dsl::ParseError> for Failure {
    fn from(e: fuzzideal::dsl::ParseError) -> Self {
        Failure::Lib(e.into())
    }
}

type Outcome = Result<u8, Failure>;

/// Intersection pairs checked per semiprime ideal.
const INTERSECTION_PAIRS: usize = 1000;
/// Radical property pairs checked per corpus.
const PROPERTY_PAIRS: usize = 10_000;
const PROPERTY_SEED: u64 = 0;

pub fn run(cli: &Cli) -> Outcome {
    let o = &cli.opts;
    if let Some(j) = o.jobs {
        // fails only if a pool exists already, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match &cli.command {
        Command::Ideals => ideals(o, false),
        Command::Primes => ideals(o, true),
        Command::Classify { recheck: Some(path) } => recheck(o, &fs::read_to_string(path)?),
        Command::Classify { recheck: None } => classify_one(o),
        Command::Radical { experimental_ring_radical: true } => ring_radical(o),
        Command::Radical { experimental_ring_radical: false } => radical(o),
        Command::Diagram => diagram(o),
        Command::CheckCharprime => check_charprime(o),
        Command::CheckInter => check_inter(o),
        Command::CheckFrad => check_frad(o),
    }
}

fn ring(o: &Options) -> Result<Ring, Failure> {
    let text = o.ring.as_deref().ok_or_else(|| Error::InvalidSpec("--ring is required".into()))?;
    Ok(build_ring(&parse_ring_spec(text)?)?)
}

fn fuzzy(o: &Options, ring: &Ring) -> Result<RationalFuzzyIdeal, Failure> {
    let text = o.fuzzy.as_deref().ok_or_else(|| Error::InvalidSpec("--fuzzy is required".into()))?;
    Ok(parse_fuzzy_spec(ring, text)?)
}

fn bound(o: &Options, ring: &Ring) -> Option<u64> {
    ring.is_integers().then_some(o.bound)
}

fn cap(o: &Options) -> Result<usize, Failure> {
    if let Some(c) = o.cap {
        return Ok(c);
    }
    match std::env::var("FUZZIDEAL_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Lib(Error::InvalidSpec(format!("FUZZIDEAL_CAP must be a count, got `{v}`")))),
        Err(_) => Ok(DEFAULT_CORPUS_CAP),
    }
}

fn palette(o: &Options) -> Result<Vec<Membership>, Failure> {
    match &o.palette {
        Some(p) => Ok(parse_value_list(p)?),
        None => Ok(default_palette()),
    }
}

fn grid(o: &Options) -> Result<ValueGrid, Failure> {
    let mut base = default_palette();
    if let Some(g) = &o.grid {
        base.extend(parse_value_list(g)?);
    }
    Ok(ValueGrid::from_base(base)?)
}

/// The corpus, or the single `--fuzzy` ideal when no corpus mode is given.
fn items(o: &Options, ring: &Ring, default_corpus: bool) -> Result<(Vec<RationalFuzzyIdeal>, Value), Failure> {
    let mode = match (o.corpus, default_corpus || o.fuzzy.is_none()) {
        (Some(m), _) => m,
        (None, true) => CorpusMode::Exhaustive,
        (None, false) => return Ok((vec![fuzzy(o, ring)?], json!({"mode": "single"}))),
    };
    let pal = palette(o)?;
    let b = bound(o, ring);
    let values: Vec<String> = pal.iter().map(|v| v.to_string()).collect();
    match mode {
        CorpusMode::Exhaustive => {
            let corpus = exhaustive_corpus(ring, &pal, b, cap(o)?)?;
            Ok((corpus, json!({"mode": "exhaustive", "palette": values, "bound": b})))
        }
        CorpusMode::Random => {
            let seed = o.seed.ok_or_else(|| Error::InvalidSpec("--corpus random needs --seed".into()))?;
            let corpus = random_corpus(ring, &pal, b, seed, o.count)?;
            Ok((corpus, json!({"mode": "random", "palette": values, "bound": b, "seed": seed, "count": o.count})))
        }
    }
}

fn emit(o: &Options, text: &str) -> Result<(), Failure> {
    match &o.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json(o: &Options, v: &Value) -> Result<(), Failure> {
    emit(o, &to_json_string(v))
}

fn ideals(o: &Options, primes_only: bool) -> Outcome {
    let ring = ring(o)?;
    let all = enumerate_ideals(&ring, bound(o, &ring))?;
    let mut rows: Vec<(CrispIdeal, String, [Option<bool>; 4])> = Vec::new();
    for i in all {
        let flags = if i.is_whole(&ring) {
            [None; 4]
        } else {
            [
                Some(is_prime_ideal(&ring, &i)?),
                Some(is_completely_prime_ideal(&ring, &i)?),
                Some(is_semiprime_ideal(&ring, &i)?),
                Some(is_completely_semiprime_ideal(&ring, &i)?),
            ]
        };
        if primes_only && flags[0] != Some(true) {
            continue;
        }
        let name = format_ideal(&ring, &i, None)?;
        rows.push((i, name, flags));
    }
    match o.format {
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(i, name, f)| {
                    json!({
                        "ideal": name,
                        "size": i.size(),
                        "prime": f[0],
                        "completely_prime": f[1],
                        "semiprime": f[2],
                        "completely_semiprime": f[3],
                    })
                })
                .collect();
            emit_json(o, &json!({"ring": ring.spec().to_string(), "ideals": list}))?;
        }
        Format::Text => {
            let mut s = String::new();
            let flag = |b: Option<bool>, name: &str| match b {
                Some(true) => name.to_string(),
                Some(false) => format!("not {name}"),
                None => "whole ring".into(),
            };
            for (_, name, f) in &rows {
                let _ = writeln!(
                    s,
                    "{name}\t{}\t{}\t{}",
                    flag(f[0], "prime"),
                    flag(f[1], "completely prime"),
                    flag(f[2], "semiprime")
                );
            }
            emit(o, &s)?;
        }
        Format::Dot => {
            let mut s = String::from("digraph ideals {\n  rankdir=BT;\n");
            for (k, (_, name, f)) in rows.iter().enumerate() {
                let shape = if f[0] == Some(true) { "doublecircle" } else { "ellipse" };
                let _ = writeln!(s, "  n{k} [label=\"{name}\", shape={shape}];");
            }
            for (a, (ia, ..)) in rows.iter().enumerate() {
                for (b, (ib, ..)) in rows.iter().enumerate() {
                    let covers = ia.is_proper_subset(ib)
                        && !rows.iter().any(|(ic, ..)| ia.is_proper_subset(ic) && ic.is_proper_subset(ib));
                    if covers {
                        let _ = writeln!(s, "  n{a} -> n{b};");
                    }
                }
            }
            s.push_str("}\n");
            emit(o, &s)?;
        }
    }
    Ok(0)
}

fn classify_one(o: &Options) -> Outcome {
    let ring = ring(o)?;
    let p = fuzzy(o, &ring)?;
    let c = classify(&p)?;
    let report = diagram_report(std::slice::from_ref(&p))?;
    let violated = report.violations().next().map(|e| e.edge.clone());
    match o.format {
        Format::Text => {
            let mut s = format!("{}  over {}\n", format_fuzzy(&p)?, ring.spec());
            for (n, v) in &c.verdicts {
                let w = v.witness.as_ref().map(|w| w.describe(&ring)).unwrap_or_default();
                let _ = writeln!(s, "{:<14}{:<7}{w}", n.name(), v.holds);
            }
            emit(o, &s)?;
        }
        _ => emit_json(o, &classification_json(&p, &c, &report.edges)?)?,
    }
    if let Some(edge) = violated {
        eprintln!("error: {edge} fails");
        return Ok(6);
    }
    Ok(0)
}

/// Re-validates every witness in a saved classification report.
fn recheck(o: &Options, text: &str) -> Outcome {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidSpec(format!("report is not JSON: {e}")))?;
    let field = |k: &str| {
        v.get(k).and_then(Value::as_str).ok_or_else(|| Error::InvalidSpec(format!("report lacks `{k}`")))
    };
    let ring = build_ring(&parse_ring_spec(field("ring")?)?)?;
    let p = parse_fuzzy_spec(&ring, field("fuzzy")?)?;
    let mut results = serde_json::Map::new();
    let mut all = true;
    if let Some(ws) = v.get("witnesses").and_then(Value::as_object) {
        for (name, w) in ws {
            let notion = Notion::from_name(name)
                .ok_or_else(|| Error::InvalidSpec(format!("unknown notion `{name}`")))?;
            let ok = witness_from_json(&ring, w)?.recheck(notion, &p)?;
            all &= ok;
            results.insert(name.clone(), ok.into());
        }
    }
    emit_json(o, &json!({"ring": ring.spec().to_string(), "fuzzy": format_fuzzy(&p)?, "rechecked": results}))?;
    Ok(if all { 0 } else { 6 })
}

fn radical(o: &Options) -> Outcome {
    let ring = ring(o)?;
    let p = fuzzy(o, &ring)?;
    let r = radical_report(&p)?;
    let semiprime = is_semiprime_new(&p)?;
    match o.format {
        Format::Text => {
            let mut s = format!("FRad {} = {}\n", format_fuzzy(&p)?, format_fuzzy(&r.frad)?);
            for e in &r.trace {
                let _ = writeln!(s, "  {}\t{}", ring.display_element(&e.x), e.sup);
            }
            emit(o, &s)?;
        }
        _ => emit_json(o, &radical_json(&r, semiprime)?)?,
    }
    Ok(0)
}

fn ring_radical(o: &Options) -> Outcome {
    let ring = ring(o)?;
    let r = ring_radical_reading(&ring)?;
    emit_json(
        o,
        &json!({
            "ring": ring.spec().to_string(),
            "experimental": true,
            "support": format_ideal(&ring, &r.support, None)?,
            "quotient_size": r.quotient.size(),
            "quotient_radical_is_zero": r.quotient_radical_is_zero,
            "zero_types_equivalent": r.zero_types_equivalent,
        }),
    )?;
    Ok(0)
}

fn diagram(o: &Options) -> Outcome {
    let ring = ring(o)?;
    let (corpus, meta) = items(o, &ring, true)?;
    let report = diagram_report(&corpus)?;
    match o.format {
        Format::Json => emit_json(o, &diagram_json(&ring, &corpus, &report, meta)?)?,
        Format::Text => {
            let mut s = String::new();
            for e in &report.edges {
                let w = e.witness.map(|i| format_fuzzy(&corpus[i])).transpose()?.unwrap_or_default();
                let _ = writeln!(s, "{:<36}{:<20}{:>6}  {w}", e.edge, format!("{:?}", e.status), e.checked);
            }
            emit(o, &s)?;
        }
        Format::Dot => {
            let mut s = String::from("digraph notions {\n");
            for e in &report.edges {
                let Some((from, rest)) = e.edge.split_once(' ') else { continue };
                let Some((arrow, to)) = rest.split_once(' ') else { continue };
                let to = to.trim_end_matches(" [commutative]");
                let style = match e.status {
                    EdgeStatus::Holds => "solid",
                    EdgeStatus::CounterexampleFound => "dashed",
                    EdgeStatus::NoCounterexample => "dotted",
                    EdgeStatus::Violated => "bold",
                };
                let dir = if arrow == "<=>" { ", dir=both" } else { "" };
                let _ = writeln!(s, "  \"{from}\" -> \"{to}\" [style={style}{dir}];");
            }
            s.push_str("}\n");
            emit(o, &s)?;
        }
    }
    if let Some(e) = report.violations().next() {
        eprintln!("error: {} fails at corpus item {}", e.edge, e.witness.unwrap_or(0));
        return Ok(6);
    }
    Ok(0)
}

fn check_charprime(o: &Options) -> Outcome {
    let ring = ring(o)?;
    let (corpus, meta) = items(o, &ring, false)?;
    let reports = corpus
        .par_iter()
        .map(|p| Ok((charprime_equivalence_check(p)?, charsemi_equivalence_check(p)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let prime = reports.iter().filter(|(a, _)| a.pointwise).count();
    let semiprime = reports.iter().filter(|(_, b)| b.pointwise).count();
    emit_json(
        o,
        &json!({
            "ring": ring.spec().to_string(),
            "corpus": meta,
            "checked": corpus.len(),
            "prime": prime,
            "semiprime": semiprime,
            "agree": true,
        }),
    )?;
    Ok(0)
}

fn check_inter(o: &Options) -> Outcome {
    let ring = ring(o)?;
    let (corpus, meta) = items(o, &ring, false)?;
    let g = grid(o)?;
    let b = bound(o, &ring);
    let semiprime: Vec<&RationalFuzzyIdeal> =
        corpus.iter().filter_map(|p| is_semiprime_new(p).map(|s| s.then_some(p)).transpose()).collect::<Result<_, _>>()?;
    let reports = semiprime
        .par_iter()
        .map(|p| semiprime_intersection_check(p, &g, b, INTERSECTION_PAIRS))
        .collect::<Result<Vec<_>, Error>>()?;
    emit_json(
        o,
        &json!({
            "ring": ring.spec().to_string(),
            "corpus": meta,
            "checked": corpus.len(),
            "semiprime": semiprime.len(),
            "intersection_pairs": reports.iter().map(|r| r.pairs_checked).sum::<usize>(),
        }),
    )?;
    Ok(0)
}

fn check_frad(o: &Options) -> Outcome {
    let ring = ring(o)?;
    let (corpus, meta) = items(o, &ring, false)?;
    let g = grid(o)?;
    let b = bound(o, &ring);
    let reports = corpus
        .par_iter()
        .map(|p| frad_intersection_check(p, &g, b))
        .collect::<Result<Vec<_>, Error>>()?;
    let pairs = sample_pairs(corpus.len(), PROPERTY_PAIRS, PROPERTY_SEED);
    pairs
        .par_iter()
        .map(|&(i, j)| radical_properties_check(&corpus[i], &corpus[j]).map(|_| ()))
        .collect::<Result<Vec<_>, Error>>()?;
    emit_json(
        o,
        &json!({
            "ring": ring.spec().to_string(),
            "corpus": meta,
            "checked": corpus.len(),
            "property_pairs": pairs.len(),
            "witnesses_checked": reports.iter().map(|r| r.witnesses_checked).sum::<usize>(),
        }),
    )?;
    Ok(0)
}
