use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::corpus::{default_palette, exhaustive_corpus, DEFAULT_CORPUS_CAP};
use crate::grid::ValueGrid;
use crate::ideal::{ideal_generate, CrispIdeal};
use crate::ring::{build_ring, RingSpec};

type Q = BigRational;
type F = FuzzyIdeal<Q>;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn ring(spec: RingSpec) -> Ring {
    build_ring(&spec).unwrap()
}

fn m2() -> Ring {
    ring(RingSpec::mat(2, RingSpec::zn(2)))
}

const E21: usize = 2;
const E12: usize = 4;

fn idx(i: usize) -> Element {
    Element::Index(i)
}

fn gen(r: &Ring, g: usize) -> CrispIdeal {
    ideal_generate(r, &[idx(g)]).unwrap()
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

fn chi(r: &Ring, i: CrispIdeal) -> F {
    F::characteristic(r, i).unwrap()
}

fn chi0(r: &Ring) -> F {
    chi(r, CrispIdeal::zero(r))
}

fn assert_rechecks(p: &F) {
    let c = classify(p).unwrap();
    for (n, v) in &c.verdicts {
        assert_eq!(v.holds, v.witness.is_none(), "{n}");
        if let Some(w) = &v.witness {
            assert!(w.recheck(*n, p).unwrap(), "{n}: {}", w.describe(p.ring()));
        }
    }
}

#[test]
fn notion_names_round_trip() {
    for n in Notion::ALL {
        assert_eq!(Notion::from_name(n.name()), Some(n));
    }
    assert_eq!(Notion::from_name("D5"), None);
}

#[test]
fn zero_ideal_of_matrix_ring() {
    let r = m2();
    let p = chi0(&r);
    let c = classify(&p).unwrap();
    for n in [Notion::PrimeNew, Notion::D1, Notion::D1L, Notion::D1R, Notion::D0Prime, Notion::D2, Notion::D3] {
        assert!(c.holds(n), "{n}");
    }
    for n in [Notion::D4, Notion::D0, Notion::SD4, Notion::CpCuts] {
        assert!(!c.holds(n), "{n}");
    }
    assert!(c.holds(Notion::SD2) && c.holds(Notion::SemiprimeNew) && c.holds(Notion::SD1));
    assert!(!c.commutative);
    // E12 squared is zero while E12 lies outside {0}
    let w = Witness::Singletons { x: idx(E12), t: q(1, 1), y: idx(E12), s: q(1, 1) };
    assert!(w.recheck(Notion::D0, &p).unwrap());
    assert!(!w.recheck(Notion::D0Prime, &p).unwrap());
    assert!(Witness::Element { x: idx(E12) }.recheck(Notion::SD4, &p).unwrap());
    // squares are searched first, and E21 precedes E12 in canonical order
    assert_eq!(c.witness(Notion::D0), Some(&Witness::Singletons { x: idx(E21), t: q(1, 1), y: idx(E21), s: q(1, 1) }));
    assert_rechecks(&p);
}

#[test]
fn zero_type_half_on_matrix_ring() {
    let r = m2();
    let p = F::zero_type(&r, q(1, 2), q(0, 1)).unwrap();
    assert!(is_d2(&p).unwrap());
    assert!(!is_d1(&p).unwrap());
    assert!(!is_d0_prime(&p).unwrap());
    assert_rechecks(&p);
}

#[test]
fn integer_examples() {
    let k = evens();
    assert!(is_d2(&k).unwrap() && is_prime_new(&k).unwrap() && is_d4(&k).unwrap() && is_d3(&k).unwrap());
    assert!(!is_d1(&k).unwrap() && !is_d0(&k).unwrap() && !is_d0_prime(&k).unwrap());
    let k4 = fours();
    assert!(is_d3(&k4).unwrap());
    assert!(!is_d2(&k4).unwrap() && !is_prime_new(&k4).unwrap());
    assert!(!is_semiprime_new(&k4).unwrap() && !is_sd1(&k4).unwrap() && !is_sd0_prime(&k4).unwrap());
    let c = classify(&k4).unwrap();
    assert_eq!(c.witness(Notion::PrimeNew), Some(&Witness::Pair { x: Element::from(2), y: Element::from(2) }));
    assert_eq!(c.witness(Notion::SemiprimeNew), Some(&Witness::Element { x: Element::from(2) }));
    assert_rechecks(&k);
    assert_rechecks(&k4);
    let d1 = F::two_valued(&Ring::integers(), z(3), q(1, 1), q(1, 4)).unwrap();
    assert!(is_d1(&d1).unwrap() && is_d0(&d1).unwrap());
}

#[test]
fn residue_examples() {
    let z12 = ring(RingSpec::zn(12));
    let p4 = chi(&z12, gen(&z12, 4));
    assert!(!is_d3(&p4).unwrap());
    assert!(!is_semiprime_new(&p4).unwrap());
    let z6 = ring(RingSpec::zn(6));
    let p2 = chi(&z6, gen(&z6, 2));
    assert!(is_d4(&p2).unwrap() && is_d1(&p2).unwrap() && is_d0(&p2).unwrap());
    assert!(is_semiprime_new(&chi0(&z6)).unwrap());
    let z4 = ring(RingSpec::zn(4));
    assert!(!is_sd2(&chi0(&z4)).unwrap());
    assert!(!is_d0_prime(&F::zero_type(&z6, q(1, 2), q(0, 1)).unwrap()).unwrap());
}

#[test]
fn constant_ideals_are_rejected() {
    let c = F::constant(&m2(), q(1, 2)).unwrap();
    for n in Notion::ALL {
        assert!(matches!(decide(n, &c), Err(Error::ConstantIdeal)), "{n}");
    }
    assert!(matches!(classify(&c), Err(Error::ConstantIdeal)));
}

#[test]
fn d1_search_examples() {
    let z6 = ring(RingSpec::zn(6));
    let p = chi(&z6, gen(&z6, 2));
    let s = d1_falsify_search(&p, &ValueGrid::for_ideal(&p), 1_000_000).unwrap();
    assert!(s.witness.is_none() && !s.exhausted);
    let p = F::zero_type(&z6, q(1, 2), q(0, 1)).unwrap();
    let s = d1_falsify_search(&p, &ValueGrid::for_ideal(&p), 1_000_000).unwrap();
    let (i, j) = s.witness.expect("zero type with top 1/2 is not D1");
    assert!(crate::fuzzy::fuzzy_product(&i, &j).unwrap().le(&p).unwrap());
    assert!(!i.le(&p).unwrap() && !j.le(&p).unwrap());
    let m = chi0(&m2());
    let s = d1_falsify_search(&m, &ValueGrid::for_ideal(&m), 1_000_000).unwrap();
    assert!(s.witness.is_none());
    let s = d1_falsify_search(&m, &ValueGrid::for_ideal(&m), 3).unwrap();
    assert!(s.exhausted && s.examined == 3);
}

#[test]
fn charprime_examples() {
    let r = chaprime(&chi0(&m2()));
    assert!(r.pointwise && r.cuts && r.quotients && r.grid && r.d4.is_none());
    let z12 = ring(RingSpec::zn(12));
    let r = chaprime(&chi(&z12, gen(&z12, 4)));
    assert!(!r.pointwise && !r.cuts && !r.quotients && !r.grid && r.d4 == Some(false));
    let z6 = ring(RingSpec::zn(6));
    let r = chaprime(&chi(&z6, gen(&z6, 2)));
    assert!(r.pointwise && r.grid && r.d4 == Some(true));
    assert!(charprime_equivalence_check(&evens()).is_err());
}

fn chaprime(p: &F) -> CharacterizationReport {
    charprime_equivalence_check(p).unwrap()
}

#[test]
fn characterizations_agree_on_small_corpora() {
    for spec in [RingSpec::zn(4), RingSpec::zn(6), RingSpec::mat(2, RingSpec::zn(2)), RingSpec::tri(2, RingSpec::zn(2))] {
        let r = ring(spec);
        for p in exhaustive_corpus(&r, &default_palette::<Q>(), None, DEFAULT_CORPUS_CAP).unwrap() {
            charprime_equivalence_check(&p).unwrap();
            charsemi_equivalence_check(&p).unwrap();
        }
    }
}

#[test]
fn d3_literal_form_is_complete_primeness_of_the_top_cut() {
    for spec in [RingSpec::zn(12), RingSpec::mat(2, RingSpec::zn(2)), RingSpec::tri(2, RingSpec::zn(2))] {
        let r = ring(spec);
        for p in exhaustive_corpus(&r, &default_palette::<Q>(), None, DEFAULT_CORPUS_CAP).unwrap() {
            let cp = crate::ideal::is_completely_prime_ideal(&r, p.top_cut()).unwrap();
            assert_eq!(notions::d3_literal_holds(&p).unwrap(), cp);
        }
    }
}

#[test]
fn minimal_primes_and_bridges() {
    let k = evens();
    let m = minimal_prime_below(&k).unwrap();
    assert_eq!(m, F::two_valued(&Ring::integers(), z(0), q(1, 1), q(3, 5)).unwrap());
    let z6 = ring(RingSpec::zn(6));
    let p2 = chi(&z6, gen(&z6, 2));
    assert_eq!(minimal_prime_below(&p2).unwrap(), p2);
    let m0 = chi0(&m2());
    assert_eq!(minimal_prime_below(&m0).unwrap(), m0);
    assert!(minimal_prime_below(&fours()).is_err());
    assert_eq!(count_minimal_prime_classes(&z6).unwrap(), 2);
    assert_eq!(count_minimal_prime_classes(&m2()).unwrap(), 1);
    assert_eq!(count_minimal_prime_classes(&ring(RingSpec::zn(12))).unwrap(), 2);

    assert!(prime_ring_bridge(&m2()).unwrap().ring_level);
    assert!(!prime_ring_bridge(&z6).unwrap().ring_level);
    assert!(semiprime_ring_bridge(&z6).unwrap().ring_level);
    assert!(!semiprime_ring_bridge(&ring(RingSpec::zn(4))).unwrap().ring_level);
    assert!(prime_ring_bridge(&Ring::integers()).unwrap().zero_type_level);
}

#[test]
fn diagram_on_matrix_ring() {
    let r = m2();
    let corpus = exhaustive_corpus(&r, &default_palette::<Q>(), None, DEFAULT_CORPUS_CAP).unwrap();
    let report = diagram_check(&corpus).unwrap();
    let found = |e: &str| report.edge(e).unwrap().status == EdgeStatus::CounterexampleFound;
    assert!(found("D2 => D4"));
    assert!(found("D2 => D1"));
    assert!(found("D0' => D0"));
    assert_eq!(report.edge("SD2 => SD1").unwrap().status, EdgeStatus::Holds);
    assert_eq!(report.edge("D0' => D0 [commutative]").unwrap().checked, 0);
    assert_eq!(report.edge("D0' => D0").unwrap().kind, EdgeKind::NonImplication);
}

#[test]
fn diagram_over_integers_finds_d3_not_d2() {
    let z = Ring::integers();
    let corpus = exhaustive_corpus(&z, &default_palette::<Q>(), Some(12), DEFAULT_CORPUS_CAP).unwrap();
    let report = diagram_check(&corpus).unwrap();
    let e = report.edge("D3 => D2").unwrap();
    assert_eq!(e.status, EdgeStatus::CounterexampleFound);
    assert!(!report.classifications[e.witness.unwrap()].holds(Notion::D2));
}
