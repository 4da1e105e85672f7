//! End-to-end acceptance: one PASS/FAIL line per criterion, exact arithmetic throughout.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use fuzzideal::corpus::{default_palette, exhaustive_corpus, sample_pairs, DEFAULT_CORPUS_CAP};
use fuzzideal::dsl::{format_fuzzy, parse_fuzzy_spec, parse_fuzzy_syntax, parse_ring_spec, SourceSpan};
use fuzzideal::fuzzy::{compose, fuzzy_product, generate};
use fuzzideal::ideal::{
    completely_prime_violation, crisp_radical, enumerate_ideals, is_completely_prime_ideal, is_prime_ideal,
};
use fuzzideal::primeness::{
    charprime_equivalence_check, charsemi_equivalence_check, count_minimal_prime_classes, diagram_report, is_d2,
    is_d4, is_prime_new, is_semiprime_new, minimal_prime_below, EdgeStatus,
};
use fuzzideal::radical::{frad_intersection_check, radical_properties_check, semiprime_intersection_check};
use fuzzideal::{
    build_ring, classify, frad, CrispIdeal, Element, FuzzyIdeal, FuzzyPoint, FuzzySet, Notion, Ring,
    ValueGrid, Witness,
};

type Q = BigRational;
type F = FuzzyIdeal<Q>;
type Outcome = Result<String, String>;

const E21: usize = 2;
const E12: usize = 4;
/// Generator bound for the integer corpus.
const Z_BOUND: u64 = 12;
const PAIR_CAP: usize = 10_000;
const SEED: u64 = 7;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn idx(i: usize) -> Element {
    Element::Index(i)
}

fn ring(text: &str) -> Ring {
    build_ring(&parse_ring_spec(text).unwrap()).unwrap()
}

fn m2() -> Ring {
    ring("Mat(2,Zn(2))")
}

fn z(n: u32) -> CrispIdeal {
    CrispIdeal::integer(n)
}

fn evens() -> F {
    F::from_chain(&Ring::integers(), vec![(z(0), q(1, 1)), (z(2), q(4, 5)), (z(1), q(3, 5))]).unwrap()
}

fn fours() -> F {
    F::from_chain(&Ring::integers(), vec![(z(0), q(1, 1)), (z(4), q(4, 5)), (z(1), q(3, 5))]).unwrap()
}

fn chi0(r: &Ring) -> F {
    F::characteristic(r, CrispIdeal::zero(r)).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn lib<T>(r: fuzzideal::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn show(p: &F) -> String {
    format_fuzzy(p).unwrap_or_else(|_| format!("{p:?}"))
}

struct Corpus {
    name: &'static str,
    ring: Ring,
    bound: Option<u64>,
    items: Vec<F>,
}

impl Corpus {
    fn new(name: &'static str) -> Self {
        let ring = ring(name);
        let bound = ring.is_integers().then_some(Z_BOUND);
        let items = exhaustive_corpus(&ring, &default_palette(), bound, DEFAULT_CORPUS_CAP).unwrap();
        Corpus { name, ring, bound, items }
    }

    fn is_table(&self) -> bool {
        !self.ring.is_integers()
    }
}

/// The five finite rings of the characterization check, then the integers.
fn corpora() -> Vec<Corpus> {
    ["Zn(6)", "Zn(12)", "Mat(2,Zn(2))", "Tri(2,Zn(2))", "Prod(Zn(2),Zn(3))", "Z"].into_iter().map(Corpus::new).collect()
}

fn default_grid() -> ValueGrid<Q> {
    ValueGrid::from_base(default_palette()).unwrap()
}

fn criterion_1() -> Outcome {
    let r = m2();
    let zero = CrispIdeal::zero(&r);
    ensure(lib(is_prime_ideal(&r, &zero))?, || "{0} is not prime".into())?;
    ensure(!lib(is_completely_prime_ideal(&r, &zero))?, || "{0} is completely prime".into())?;
    let (x, y) = lib(completely_prime_violation(&r, &zero))?.ok_or("no violation reported")?;
    ensure(!zero.contains(&x) && !zero.contains(&y) && lib(r.mul(&x, &y))? == r.zero(), || {
        "reported pair is not a violation".into()
    })?;
    let e12 = idx(E12);
    ensure(lib(r.mul(&e12, &e12))? == r.zero() && !zero.contains(&e12), || "E12·E12 != 0".into())?;
    Ok(format!(
        "reported {}·{} = 0; E12·E12 = 0",
        r.display_element(&x),
        r.display_element(&y)
    ))
}

fn criterion_2() -> Outcome {
    let p = chi0(&m2());
    let c = lib(classify(&p))?;
    for (n, want) in [(Notion::PrimeNew, true), (Notion::D2, true), (Notion::D1, true), (Notion::D4, false)] {
        ensure(c.holds(n) == want, || format!("{n} should be {want}"))?;
    }
    Ok("PRIME_NEW = D2 = D1 = true, D4 = false".into())
}

fn criterion_3() -> Outcome {
    let r = m2();
    let p = lib(F::zero_type(&r, q(1, 2), q(0, 1)))?;
    let c = lib(classify(&p))?;
    ensure(c.holds(Notion::D2) && !c.holds(Notion::D1), || "expected D2 and not D1".into())?;
    let w = c.witness(Notion::D1).ok_or("D1 has no witness")?;
    ensure(lib(w.recheck(Notion::D1, &p))?, || "D1 witness does not recheck".into())?;
    Ok(format!("D2 true, D1 false ({})", w.describe(&r)))
}

fn criterion_4() -> Outcome {
    let (k, k4) = (evens(), fours());
    ensure(lib(is_d2(&k))? && !lib(classify(&k))?.holds(Notion::D1), || "three-valued ideal".into())?;
    let c4 = lib(classify(&k4))?;
    ensure(c4.holds(Notion::D3) && !c4.holds(Notion::D2), || "<4> variant".into())?;
    Ok("evens ideal D2 and not D1; <4> variant D3 and not D2".into())
}

fn criterion_5() -> Outcome {
    let r = m2();
    let x1 = lib(FuzzyPoint::new(idx(E12), q(1, 1)))?;
    let single = lib(FuzzySet::singleton(&r, &x1))?;
    let square = lib(compose(&single, &single))?;
    let chi = chi0(&r);
    ensure(square.values() == lib(chi.to_map())?.as_slice(), || "x1∘x1 is not χ_{0}".into())?;
    let gen = lib(F::generated_by_point(&r, &x1))?;
    ensure(gen == lib(F::constant(&r, q(1, 1)))?, || "<x1> is not χ_R".into())?;
    let c = lib(classify(&chi))?;
    ensure(!c.holds(Notion::D0) && c.holds(Notion::D1), || "expected D0 false and D1 true".into())?;
    let w = c.witness(Notion::D0).ok_or("D0 has no witness")?;
    ensure(lib(w.recheck(Notion::D0, &chi))?, || "reported D0 witness does not recheck".into())?;
    let e12 = Witness::Singletons { x: idx(E12), t: q(1, 1), y: idx(E12), s: q(1, 1) };
    ensure(lib(e12.recheck(Notion::D0, &chi))?, || "E12 witness does not recheck".into())?;
    let other = Witness::Singletons { x: idx(E21), t: q(1, 1), y: idx(E21), s: q(1, 1) };
    ensure(lib(other.recheck(Notion::D0, &chi))?, || "E21 witness does not recheck".into())?;
    Ok(format!("D0 false ({}), D1 true; E12 witness rechecks", w.describe(&r)))
}

fn criterion_6(all: &[Corpus]) -> Outcome {
    let mut checked = 0;
    for c in all.iter().filter(|c| c.is_table()) {
        let commutative = c.ring.is_commutative();
        for p in &c.items {
            for report in [lib(charprime_equivalence_check(p))?, lib(charsemi_equivalence_check(p))?] {
                ensure(report.agrees() && report.d4.is_some() == commutative, || {
                    format!("{}: {} gives {report:?}", c.name, show(p))
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals, prime and semiprime routes agree"))
}

fn criterion_7(all: &[Corpus]) -> Outcome {
    let mut checked = 0;
    for c in all {
        let report = lib(diagram_report(&c.items))?;
        for edge in ["D4 => D2", "D4 <=> CP_CUTS"] {
            let e = report.edge(edge).ok_or_else(|| format!("missing edge {edge}"))?;
            ensure(e.status == EdgeStatus::Holds, || format!("{}: {edge} is {:?}", c.name, e.status))?;
        }
        for p in &c.items {
            let d4 = lib(is_d4(p))?;
            ensure(!d4 || lib(is_d2(p))?, || format!("{}: D4 without D2 at {}", c.name, show(p)))?;
            let cuts = lib(fuzzideal::primeness::decide(Notion::CpCuts, p))?.is_none();
            ensure(d4 == cuts, || format!("{}: D4 != CP_CUTS at {}", c.name, show(p)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals, zero violations"))
}

fn criterion_8(all: &[Corpus]) -> Outcome {
    let grid = default_grid();
    let (mut semiprime, mut pairs) = (0, 0);
    for c in all {
        let mut primes = Vec::new();
        for p in &c.items {
            if lib(is_semiprime_new(p))? {
                lib(semiprime_intersection_check(p, &grid, c.bound, 200))
                    .map_err(|e| format!("{}: {}: {e}", c.name, show(p)))?;
                semiprime += 1;
            }
            if lib(is_prime_new(p))? {
                primes.push(p.clone());
            }
        }
        for (i, j) in sample_pairs(primes.len(), PAIR_CAP, SEED) {
            let meet = lib(F::intersect(&[primes[i].clone(), primes[j].clone()]))?;
            ensure(meet.is_constant() || lib(is_semiprime_new(&meet))?, || {
                format!("{}: {} ∩ {} is not semiprime", c.name, show(&primes[i]), show(&primes[j]))
            })?;
            pairs += 1;
        }
        if !primes.is_empty() {
            let meet = lib(F::intersect(&primes))?;
            ensure(meet.is_constant() || lib(is_semiprime_new(&meet))?, || {
                format!("{}: intersection of all primes is not semiprime", c.name)
            })?;
        }
    }
    Ok(format!("{semiprime} semiprime ideals, {pairs} prime pairs"))
}

fn criterion_9(all: &[Corpus]) -> Outcome {
    let grid = default_grid();
    let mut checked = 0;
    for c in all {
        for p in &c.items {
            let report = lib(frad_intersection_check(p, &grid, c.bound)).map_err(|e| format!("{}: {e}", c.name))?;
            let f = &report.frad;
            let (zero, one) = (c.ring.zero(), c.ring.one());
            ensure(lib(f.value(&zero))? == lib(p.value(&zero))? && lib(f.value(&one))? == lib(p.value(&one))?, || {
                format!("{}: endpoints differ for {}", c.name, show(p))
            })?;
            for t in p.image() {
                ensure(lib(f.cut(t))? == lib(crisp_radical(&c.ring, &lib(p.cut(t))?))?, || {
                    format!("{}: cut at {t} differs for {}", c.name, show(p))
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals, F3 = F2 = F1, endpoints and cuts exact"))
}

fn criterion_10(all: &[Corpus]) -> Outcome {
    let mut pairs = 0;
    for c in all {
        for (i, j) in sample_pairs(c.items.len(), PAIR_CAP, SEED) {
            lib(radical_properties_check(&c.items[i], &c.items[j])).map_err(|e| format!("{}: {e}", c.name))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn criterion_11() -> Outcome {
    let f = lib(frad(&fours()))?;
    ensure(f == evens() && f.levels() == evens().levels(), || format!("got {}", show(&f)))?;
    Ok(show(&f))
}

fn criterion_12(all: &[Corpus]) -> Outcome {
    let mut checked = 0;
    for c in all {
        let ideals = lib(enumerate_ideals(&c.ring, c.bound))?;
        let mut primes = Vec::new();
        for i in ideals.iter().filter(|i| !i.is_whole(&c.ring)) {
            if lib(is_prime_ideal(&c.ring, i))? {
                primes.push(i.clone());
            }
        }
        let minimal: Vec<&CrispIdeal> =
            primes.iter().filter(|p| !primes.iter().any(|o| o.is_proper_subset(p))).collect();
        for p in &c.items {
            if !lib(is_prime_new(p))? {
                continue;
            }
            let m = lib(minimal_prime_below(p))?;
            ensure(lib(is_prime_new(&m))? && lib(m.le(p))?, || format!("{}: bad output for {}", c.name, show(p)))?;
            let mut matched = false;
            for mp in &minimal {
                matched |= lib(m.value_equivalent(&lib(F::characteristic(&c.ring, (*mp).clone()))?))?;
            }
            ensure(matched, || format!("{}: {} matches no minimal prime", c.name, show(&m)))?;
            checked += 1;
        }
    }
    let classes = lib(count_minimal_prime_classes(&ring("Zn(6)")))?;
    ensure(classes == 2, || format!("Zn(6) has {classes} classes"))?;
    Ok(format!("{checked} prime ideals; Zn(6) has 2 classes"))
}

fn criterion_13(all: &[Corpus]) -> Outcome {
    let mut checked = 0;
    for c in all.iter().filter(|c| c.is_table()) {
        for p in &c.items {
            if lib(is_prime_new(p))? {
                ensure(p.image().count() == 2, || format!("{}: {} is not two-valued", c.name, show(p)))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} prime ideals, all two-valued"))
}

/// `sup` over finite sums of products `Σ aᵢbᵢ = z` of `min I(aᵢ) ∧ J(bᵢ)`,
/// by saturating single products under addition.
fn sum_of_products(r: &Ring, i: &F, j: &F) -> Vec<Q> {
    let t = r.table().unwrap();
    let n = t.size();
    let iv = i.to_map().unwrap();
    let jv = j.to_map().unwrap();
    let mut best = vec![q(0, 1); n];
    for a in 0..n {
        for b in 0..n {
            let m = iv[a].clone().min(jv[b].clone());
            let z = t.mul(a, b);
            if m > best[z] {
                best[z] = m;
            }
        }
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                let m = best[x].clone().min(best[y].clone());
                let s = t.add(x, y);
                if m > best[s] {
                    best[s] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            return best;
        }
    }
}

/// Every subset of a table ring closed under subtraction and two-sided
/// multiplication.
fn subset_ideals(r: &Ring) -> BTreeSet<Vec<usize>> {
    let t = r.table().unwrap();
    let n = t.size();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let has = |x: usize| mask >> x & 1 == 1;
        if !has(t.zero()) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
        let closed = members.iter().all(|&a| {
            members.iter().all(|&b| has(t.sub(a, b))) && (0..n).all(|x| has(t.mul(x, a)) && has(t.mul(a, x)))
        });
        if closed {
            out.insert(members);
        }
    }
    out
}

fn criterion_14() -> Outcome {
    let small = [
        "Zn(2)",
        "Zn(3)",
        "Zn(4)",
        "Zn(5)",
        "Zn(6)",
        "Zn(7)",
        "Zn(8)",
        "Prod(Zn(2),Zn(2))",
        "Prod(Zn(2),Zn(3))",
        "Prod(Zn(2),Zn(4))",
        "Prod(Zn(2),Zn(2),Zn(2))",
        "Tri(2,Zn(2))",
        "Quot(Zn(16),<8>)",
    ];
    let (mut products, mut rings) = (0, 0);
    for name in small {
        let r = ring(name);
        ensure(r.size().unwrap() <= 8, || format!("{name} is too large"))?;
        let got: BTreeSet<Vec<usize>> = lib(enumerate_ideals(&r, None))?
            .iter()
            .map(|i| i.as_set().unwrap().iter().collect())
            .collect();
        ensure(got == subset_ideals(&r), || format!("{name}: ideal lattice differs from the subset oracle"))?;
        let items = lib(exhaustive_corpus(&r, &default_palette(), None, DEFAULT_CORPUS_CAP))?;
        for (a, b) in sample_pairs(items.len(), 2_000, SEED) {
            let (i, j) = (&items[a], &items[b]);
            let prod = lib(fuzzy_product(i, j))?;
            let gen = lib(generate(&lib(compose(&lib(i.to_fuzzy_set())?, &lib(j.to_fuzzy_set())?))?))?;
            ensure(prod == gen, || format!("{name}: product != <∘>"))?;
            ensure(lib(prod.to_map())? == sum_of_products(&r, i, j), || {
                format!("{name}: product of {} and {} differs from sums of products", show(i), show(j))
            })?;
            products += 1;
        }
        rings += 1;
    }
    Ok(format!("{rings} rings, {products} products"))
}

fn criterion_15(all: &[Corpus]) -> Outcome {
    let mut round_trips = 0;
    for c in all {
        for p in &c.items {
            let text = lib(format_fuzzy(p))?;
            let back = lib(parse_fuzzy_spec(&c.ring, &text))?;
            ensure(back == *p && lib(format_fuzzy(&back))? == text, || format!("{}: {text} does not round-trip", c.name))?;
            round_trips += 1;
        }
        let spec = parse_ring_spec(&c.ring.spec().to_string()).map_err(|e| e.to_string())?;
        ensure(spec == *c.ring.spec(), || format!("{}: ring spec does not round-trip", c.name))?;
    }
    let ring_fixtures: &[(&str, usize, usize)] = &[
        ("Zn(0)", 3, 4),
        ("Zn(1)", 3, 4),
        ("Mat(0, Zn(2))", 4, 5),
        ("Foo(2)", 0, 3),
        ("Prod(Zn(2))", 10, 11),
        ("Zn(6", 4, 4),
        ("Zn(6))", 5, 6),
        ("", 0, 0),
        ("Zn(x)", 3, 4),
    ];
    for &(text, start, end) in ring_fixtures {
        let e = parse_ring_spec(text).err().ok_or_else(|| format!("`{text}` parsed"))?;
        ensure(e.span == SourceSpan::new(start, end), || format!("`{text}`: span {:?}", e.span))?;
    }
    let fuzzy_fixtures: &[(&str, usize, usize)] = &[("{1: <0> 0: <*>}", 8, 9), ("{1 <0>}", 3, 4), ("{}", 1, 2)];
    for &(text, start, end) in fuzzy_fixtures {
        let e = parse_fuzzy_syntax(text).err().ok_or_else(|| format!("`{text}` parsed"))?;
        ensure(e.span == SourceSpan::new(start, end), || format!("`{text}`: span {:?}", e.span))?;
    }
    Ok(format!(
        "{round_trips} round trips, {} error fixtures",
        ring_fixtures.len() + fuzzy_fixtures.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let all = corpora();
    let sizes: Vec<String> = all.iter().map(|c| format!("{} {}", c.name, c.items.len())).collect();
    println!("corpora: {}", sizes.join(", "));
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "prime but not completely prime zero ideal", Box::new(criterion_1)),
        (2, "χ_{0} on M2(F2) prime, not D4", Box::new(criterion_2)),
        (3, "zero-type 1/2, 0 is D2, not D1", Box::new(criterion_3)),
        (4, "integer examples", Box::new(criterion_4)),
        (5, "D0 and D1 split on χ_{0}", Box::new(criterion_5)),
        (6, "four-way characterization", Box::new(|| criterion_6(&all))),
        (7, "D4 => D2 and D4 <=> CP_CUTS", Box::new(|| criterion_7(&all))),
        (8, "semiprimes are intersections of primes", Box::new(|| criterion_8(&all))),
        (9, "radical as intersections; endpoints; cuts", Box::new(|| criterion_9(&all))),
        (10, "radical properties over pairs", Box::new(|| criterion_10(&all))),
        (11, "radical of the <4> variant", Box::new(criterion_11)),
        (12, "minimal primes", Box::new(|| criterion_12(&all))),
        (13, "primes on finite rings are two-valued", Box::new(|| criterion_13(&all))),
        (14, "product and ideal oracles", Box::new(criterion_14)),
        (15, "parser round trips and error spans", Box::new(|| criterion_15(&all))),
    ];
    let mut failed = Vec::new();
    for (n, name, check) in &criteria {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} [{:.2?}]", t.elapsed()),
            Err(why) => {
                println!("criterion {n:>2} FAIL  {name}: {why}");
                failed.push(*n);
            }
        }
    }
    println!("total {:.2?}", start.elapsed());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
