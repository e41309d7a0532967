//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every tolerance and population constant is pinned here.

use gt_core::enumerate::{
    canonicalize_pair, enumerate_strong_gts, enumerate_surjections, random_space, seeded_rng,
    EnumBounds, STRONG_GT_COUNTS,
};
use gt_core::mapping::{quotient_gt, ClassificationVector, GtMapping, MappingClass};
use gt_core::set::{SetFamily, SubSet};
use gt_core::space::{validate_gt, GtSpace};
use gt_core::subspace::induce_subspace;
use gt_core::verify::{
    check_operator_laws, check_subspace_laws, check_witness, mine_counterexample, run_suite,
    Conclusion, MineOutcome, MinePreset, TheoremId, TheoremStatus,
};
use rand::Rng;
use std::time::Instant;

/// Mapping-theorem population for |X|,|Y| ≤ 3, pinned from the first
/// independent brute-force run.
const MAPPING_POPULATION_3X3: usize = 13312;

fn space_from_bits(n: usize, members: &[u32]) -> GtSpace {
    let family = SetFamily::new(n, members.iter().map(|&b| SubSet::new(b, n)));
    validate_gt(n, family).unwrap()
}

fn report(criterion: &str, passed: bool) {
    println!(
        "acceptance {criterion}: {}",
        if passed { "pass" } else { "FAIL" }
    );
    assert!(passed, "acceptance {criterion} failed");
}

/// Criterion 1: the introduction's space {∅,{a,b},{b,c},X} validates as a
/// strong GT that is not a topology, in under a millisecond.
#[test]
fn criterion_1_intro_example() {
    let start = Instant::now();
    let family = SetFamily::new(3, [0b000u32, 0b011, 0b110, 0b111].map(|b| SubSet::new(b, 3)));
    let space = GtSpace::with_labels(vec!["a".into(), "b".into(), "c".into()], family).unwrap();
    let not_topology = !space.is_topology();
    let elapsed = start.elapsed();
    report(
        "1 (intro example)",
        not_topology && space.opens().len() == 4 && elapsed.as_micros() < 1000,
    );
}

/// Criterion 2: the subspace fixture μ={X,{x,y},{y,z},∅}, X′={x,y}:
/// I({y})=∅, I_{X′}({y})={y}, I(X′)={x,y}, and the strict inequality.
#[test]
fn criterion_2_subspace_fixture() {
    let space = space_from_bits(3, &[0b000, 0b011, 0b110, 0b111]);
    let carrier = SubSet::new(0b011, 3);
    let y = SubSet::new(0b010, 3);
    let emb = induce_subspace(&space, carrier).unwrap();
    let i_y = space.interior(y);
    let rel_i_y = emb.relative_interior(y).unwrap();
    let i_carrier = space.interior(carrier);
    let meet = rel_i_y.intersect(i_carrier);
    report(
        "2 (relative interior fixture)",
        i_y == SubSet::empty(3) && rel_i_y == y && i_carrier == carrier && meet == y && meet != i_y,
    );
}

/// Criterion 3: all ten operator laws hold exhaustively for every strong
/// GT-space at n ≤ 3 and for 10,000 seeded random spaces at n = 5, in
/// under 60 seconds.
#[test]
fn criterion_3_operator_laws() {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=3 {
        for space in enumerate_strong_gts(n).unwrap() {
            ok &= check_operator_laws(&space);
        }
    }
    let mut rng = seeded_rng(0xC3);
    let mut cases = 0usize;
    while cases < 10_000 {
        let space = random_space(5, &mut rng);
        let b = SubSet::new(rng.gen_range(0u32..32), 5);
        let bp = SubSet::new(b.bits() & rng.gen_range(0u32..32), 5);
        ok &= laws_at(&space, b, bp);
        cases += 1;
    }
    let elapsed = start.elapsed();
    report(
        "3 (operator laws)",
        ok && cases >= 10_000 && elapsed.as_secs() < 60,
    );
}

/// The ten operator laws at one (space, subset, sub-subset) case.
fn laws_at(space: &GtSpace, b: SubSet, bp: SubSet) -> bool {
    let n = space.len();
    let ib = space.interior(b);
    let cb = space.closure(b);
    let db = space.derived_set(b);
    ib.is_subset_of(b)
        && b.is_subset_of(cb)
        && space.interior(ib) == ib
        && space.closure(cb) == cb
        && space.interior(bp).is_subset_of(ib)
        && space.closure(bp).is_subset_of(cb)
        && space.derived_set(bp).is_subset_of(db)
        && (ib == b) == space.is_open(b)
        && (cb == b) == space.is_closed(b)
        && cb == space.interior(b.complement()).complement()
        && ib == space.closure(b.complement()).complement()
        && (0..n).all(|p| {
            cb.contains(p)
                == space.opens_at(p).iter().all(|u| !u.intersect(b).is_empty())
                && ib.contains(p)
                    == space.opens_at(p).iter().any(|u| u.is_subset_of(b))
        })
        && cb == b.union(db)
        && (0..n).all(|p| !space.derived_set(SubSet::singleton(p, n)).contains(p))
}

/// Criterion 4: every characterization vector is internally constant over
/// the full (|X|,|Y| ≤ 3) mapping population, whose size is pinned.
#[test]
fn criterion_4_equivalence_sweeps() {
    let start = Instant::now();
    let bounds = EnumBounds::exhaustive(3, 3);
    let ids = [
        TheoremId::P2_3,
        TheoremId::T3_1,
        TheoremId::T3_3,
        TheoremId::T3_5,
        TheoremId::T3_6,
    ];
    let report_out = run_suite(&bounds, &ids).unwrap();
    let ok = report_out.passed()
        && report_out.population.mappings == MAPPING_POPULATION_3X3
        && report_out
            .results
            .iter()
            .all(|r| r.status == TheoremStatus::Pass && r.checked == MAPPING_POPULATION_3X3);
    let elapsed = start.elapsed();
    report(
        "4 (equivalence sweeps)",
        ok && elapsed.as_secs() < 300,
    );
}

/// Criterion 5: the implication lattice, restriction continuity, heredity,
/// and the three continuous-mapping corollaries hold with zero exceptions
/// on the same population.
#[test]
fn criterion_5_implication_suite() {
    let bounds = EnumBounds::exhaustive(3, 3);
    let ids = [
        TheoremId::T3_9,
        TheoremId::P2_7,
        TheoremId::P2_10,
        TheoremId::C3_2,
        TheoremId::C3_4,
        TheoremId::C3_7,
    ];
    let report_out = run_suite(&bounds, &ids).unwrap();
    report(
        "5 (implication suite)",
        report_out.passed()
            && report_out
                .results
                .iter()
                .all(|r| r.status == TheoremStatus::Pass),
    );
}

/// Criterion 6: every strictness preset yields a verified witness within
/// its stated bounds, each witness passes the round-trip check and a
/// brute-force minimality re-search, all within two minutes.
#[test]
fn criterion_6_strictness_mining() {
    let start = Instant::now();
    let presets: [(MinePreset, usize, usize); 6] = [
        (MinePreset::OpenNotClosed, 3, 2),
        (MinePreset::ClosedNotOpen, 3, 2),
        (MinePreset::PseudoOpenNotOpen, 3, 2),
        (MinePreset::PseudoOpenNotClosed, 3, 2),
        (MinePreset::QuotientNotPseudoOpen, 4, 3),
        (MinePreset::QuotientNotHereditarilyQuotient, 4, 3),
    ];
    let mut ok = true;
    for (preset, max_dom, max_cod) in presets {
        let (premise, conclusion) = preset.target();
        let outcome =
            mine_counterexample(premise, conclusion, &EnumBounds::exhaustive(max_dom, max_cod))
                .unwrap();
        let MineOutcome::Witness(w) = outcome else {
            println!("  {}: exhausted (no witness)", preset.name());
            ok = false;
            continue;
        };
        let verified = check_witness(&w);
        let minimal = confirm_minimality(&w, premise, conclusion);
        if !verified || !minimal {
            println!("  {}: witness failed re-check", preset.name());
        }
        ok &= verified && minimal;
    }
    let elapsed = start.elapsed();
    report("6 (strictness mining)", ok && elapsed.as_secs() < 120);
}

/// Brute-force re-search at the witness's exact (|X|, |Y|): no hit has a
/// lexicographically smaller canonical form.
fn confirm_minimality(
    w: &gt_core::verify::Witness,
    premise: MappingClass,
    conclusion: Conclusion,
) -> bool {
    let nx = w.mapping.dom_points;
    let ny = w.mapping.cod_points;
    let mut best: Option<gt_core::CanonicalForm> = None;
    for dom in enumerate_strong_gts(nx).unwrap() {
        for cod in enumerate_strong_gts(ny).unwrap() {
            for table in enumerate_surjections(nx, ny).unwrap() {
                let f = GtMapping::new(dom.clone(), cod.clone(), table).unwrap();
                if f.has_class(premise) && !conclusion.holds_for(&f) {
                    let form = canonicalize_pair(&f);
                    if best.as_ref().is_none_or(|b| form < *b) {
                        best = Some(form);
                    }
                }
            }
        }
    }
    best.as_ref() == Some(&w.canonical)
}

/// Criterion 7: subspace laws hold exhaustively at n ≤ 3 over all carriers
/// and subsets, including the closed-trace characterization; the strict
/// inclusion instance of criterion 2 is recorded.
#[test]
fn criterion_7_subspace_suite() {
    let mut ok = true;
    for n in 1..=3 {
        for space in enumerate_strong_gts(n).unwrap() {
            ok &= check_subspace_laws(&space);
        }
    }
    // the strict-inclusion fixture must actually appear in the population
    let fixture = space_from_bits(3, &[0b000, 0b011, 0b110, 0b111]);
    let in_population = enumerate_strong_gts(3)
        .unwrap()
        .iter()
        .any(|s| s.opens() == fixture.opens());
    let emb = induce_subspace(&fixture, SubSet::new(0b011, 3)).unwrap();
    let strict = emb.relative_interior(SubSet::new(0b010, 3)).unwrap()
        != fixture.interior(SubSet::new(0b010, 3));
    report("7 (subspace suite)", ok && in_population && strict);
}

/// Criterion 8: for every (space, surjection) at |X| ≤ 3, the quotient GT
/// validates, the induced mapping is g-quotient, and no subset outside the
/// quotient family keeps the mapping g-continuous (finest-topology check).
#[test]
fn criterion_8_quotient_gt() {
    let mut ok = true;
    for n in 1..=3 {
        for dom in enumerate_strong_gts(n).unwrap() {
            for m in 1..=n {
                for table in enumerate_surjections(n, m).unwrap() {
                    let q = quotient_gt(&dom, &table, m).unwrap();
                    // construction validates internally; re-validate anyway
                    ok &= validate_gt(m, q.opens().clone()).is_ok();
                    let f = GtMapping::new(dom.clone(), q.clone(), table.clone()).unwrap();
                    ok &= f.is_g_quotient();
                    ok &= f.is_g_continuous();
                    // any strictly larger family must break continuity: every
                    // subset outside ν_q has a non-open preimage
                    for v in SubSet::all(m) {
                        if !q.is_open(v) {
                            ok &= !dom.is_open(f.preimage(v));
                        }
                    }
                }
            }
        }
    }
    report("8 (quotient construction)", ok);
}

/// Criterion 9: the criterion-4 sweep serializes byte-identically under
/// different parallelism levels.
#[test]
fn criterion_9_determinism() {
    let bounds = EnumBounds::exhaustive(3, 3);
    let ids = [
        TheoremId::P2_3,
        TheoremId::T3_1,
        TheoremId::T3_3,
        TheoremId::T3_5,
        TheoremId::T3_6,
    ];
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| run_suite(&bounds, &ids).unwrap());
    let parallel = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(|| run_suite(&bounds, &ids).unwrap());
    let a = serde_json::to_vec(&single).unwrap();
    let b = serde_json::to_vec(&parallel).unwrap();
    report("9 (determinism)", a == b);
}

/// Regression guard: the enumeration counts that size every population.
#[test]
fn pinned_population_constants() {
    for (i, &count) in STRONG_GT_COUNTS.iter().enumerate() {
        assert_eq!(enumerate_strong_gts(i + 1).unwrap().len(), count);
    }
    // population identity: Σ |GT(nx)|·|GT(ny)|·surj(nx,ny) over ny ≤ nx ≤ 3
    let mut total = 0;
    for nx in 1..=3usize {
        for ny in 1..=nx {
            total += enumerate_strong_gts(nx).unwrap().len()
                * enumerate_strong_gts(ny).unwrap().len()
                * enumerate_surjections(nx, ny).unwrap().len();
        }
    }
    assert_eq!(total, MAPPING_POPULATION_3X3);
}

/// The committed 4-point fixture separating quotient from pseudo-open, as
/// classified by the full vector.
#[test]
fn quotient_fixture_classification() {
    let dom = space_from_bits(4, &[0b0000, 0b0110, 0b1111]);
    let cod = space_from_bits(3, &[0b000, 0b111]);
    let f = GtMapping::new(dom, cod, vec![0, 1, 2, 2]).unwrap();
    let v = ClassificationVector::classify(&f);
    assert!(v.is_consistent());
    assert!(v.quotient[0]);
    assert!(!v.pseudo_open[0]);
    assert!(!v.open[0]);
    assert!(!v.closed[0]);
    assert!(!v.hereditarily_quotient);
}
