//! Exhaustive and seeded-random generation of strong GT-spaces and
//! surjections, plus canonical forms for deduplication up to relabeling.

use crate::mapping::GtMapping;
use crate::set::{SetFamily, SubSet};
use crate::space::{validate_gt, GtSpace};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest ground set for exhaustive space enumeration.
pub const SPACE_ENUM_CAP: usize = 5;
/// Largest ground set for full mapping-pair sweeps.
pub const PAIR_SWEEP_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("requested size {got} exceeds the enumeration cap {cap}")]
    BoundExceeded { got: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumMode {
    Exhaustive,
    Random { seed: u64, count: usize },
}

/// Bounds for sweeps and mining runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumBounds {
    pub max_dom_points: usize,
    pub max_cod_points: usize,
    pub mode: EnumMode,
    pub dedupe_iso: bool,
}

impl EnumBounds {
    pub fn exhaustive(max_dom_points: usize, max_cod_points: usize) -> Self {
        EnumBounds {
            max_dom_points,
            max_cod_points,
            mode: EnumMode::Exhaustive,
            dedupe_iso: false,
        }
    }

    pub fn check(&self) -> Result<(), EnumError> {
        if matches!(self.mode, EnumMode::Exhaustive) {
            if self.max_dom_points > PAIR_SWEEP_CAP {
                return Err(EnumError::BoundExceeded {
                    got: self.max_dom_points,
                    cap: PAIR_SWEEP_CAP,
                });
            }
            if self.max_cod_points > PAIR_SWEEP_CAP {
                return Err(EnumError::BoundExceeded {
                    got: self.max_cod_points,
                    cap: PAIR_SWEEP_CAP,
                });
            }
        }
        Ok(())
    }
}

/// All union-closed families on an `n`-set containing both ∅ and X, i.e.
/// exactly the strong generalized topologies, each emitted once in a fixed
/// order.
///
/// Membership of the nonempty proper subsets is decided in decreasing bit
/// pattern. A union of two subsets has a bit pattern at least as large as
/// either operand, so when a subset is admitted every union it forms with
/// already-admitted members has been decided already; branches violating
/// closure are pruned immediately.
pub fn enumerate_strong_gts(n: usize) -> Result<Vec<GtSpace>, EnumError> {
    if n == 0 || n > SPACE_ENUM_CAP {
        return Err(EnumError::BoundExceeded {
            got: n,
            cap: SPACE_ENUM_CAP,
        });
    }
    let full = SubSet::full(n).bits();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    // in_family[v] = true when subset pattern v has been admitted
    let mut in_family = vec![false; (full + 1) as usize];
    in_family[0] = true;
    in_family[full as usize] = true;
    enumerate_rec(n, full, full as i64 - 1, &mut chosen, &mut in_family, &mut out);
    Ok(out)
}

fn enumerate_rec(
    n: usize,
    full: u32,
    next: i64,
    chosen: &mut Vec<u32>,
    in_family: &mut [bool],
    out: &mut Vec<GtSpace>,
) {
    if next < 1 {
        emit(n, full, chosen, out);
        return;
    }
    let v = next as u32;
    // exclude v
    enumerate_rec(n, full, v as i64 - 1, chosen, in_family, out);
    // include v if every union with an admitted member is already admitted
    let closed = chosen.iter().all(|&t| in_family[(v | t) as usize]);
    if closed {
        chosen.push(v);
        in_family[v as usize] = true;
        enumerate_rec(n, full, v as i64 - 1, chosen, in_family, out);
        in_family[v as usize] = false;
        chosen.pop();
    }
}

fn emit(n: usize, full: u32, chosen: &[u32], out: &mut Vec<GtSpace>) {
    let family = SetFamily::new(
        n,
        chosen
            .iter()
            .copied()
            .chain([0, full])
            .map(|b| SubSet::new(b, n)),
    );
    let space = validate_gt(n, family).expect("pruned enumeration only emits valid families");
    out.push(space);
}

/// All surjective tables from an `n`-point domain onto an `m`-point
/// codomain, lexicographic order.
pub fn enumerate_surjections(n: usize, m: usize) -> Result<Vec<Vec<usize>>, EnumError> {
    if n > SPACE_ENUM_CAP {
        return Err(EnumError::BoundExceeded {
            got: n,
            cap: SPACE_ENUM_CAP,
        });
    }
    if m > n || m == 0 || n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut table = vec![0usize; n];
    loop {
        if (0..m).all(|y| table.contains(&y)) {
            out.push(table.clone());
        }
        // next table in lexicographic order, base m
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            table[i] += 1;
            if table[i] < m {
                break;
            }
            table[i] = 0;
        }
    }
}

/// Lexicographically least encoding over all relabelings. Two inputs have
/// equal canonical form iff one is a relabeling of the other.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(pub Vec<u32>);

/// Canonical form of a space: the least sorted member-pattern vector over
/// all point permutations, prefixed by the ground-set size.
pub fn canonicalize(space: &GtSpace) -> CanonicalForm {
    let n = space.len();
    let mut best: Option<Vec<u32>> = None;
    for perm in (0..n).permutations(n) {
        let enc = encode_family(space.opens(), &perm);
        if best.as_ref().is_none_or(|b| &enc < b) {
            best = Some(enc);
        }
    }
    let mut v = vec![n as u32];
    v.extend(best.unwrap_or_default());
    CanonicalForm(v)
}

fn encode_family(family: &SetFamily, perm: &[usize]) -> Vec<u32> {
    let mut enc: Vec<u32> = family
        .iter()
        .map(|s| {
            let mut bits = 0u32;
            for p in s.points() {
                bits |= 1 << perm[p];
            }
            bits
        })
        .collect();
    enc.sort_unstable();
    enc
}

/// Joint canonical form of a mapping over all (domain, codomain)
/// permutation pairs: sizes, then the two family encodings, then the
/// relabeled table.
pub fn canonicalize_pair(f: &GtMapping) -> CanonicalForm {
    let n = f.dom().len();
    let m = f.cod().len();
    let mut best: Option<Vec<u32>> = None;
    for dperm in (0..n).permutations(n) {
        // inverse: new index -> old index
        let mut dinv = vec![0usize; n];
        for (old, &new) in dperm.iter().enumerate() {
            dinv[new] = old;
        }
        let denc = encode_family(f.dom().opens(), &dperm);
        for cperm in (0..m).permutations(m) {
            let cenc = encode_family(f.cod().opens(), &cperm);
            let mut enc = Vec::with_capacity(2 + denc.len() + cenc.len() + n);
            enc.extend(denc.iter().copied());
            enc.extend(cenc.iter().copied());
            enc.extend(dinv.iter().map(|&old| cperm[f.table()[old]] as u32));
            if best.as_ref().is_none_or(|b| &enc < b) {
                best = Some(enc);
            }
        }
    }
    let mut v = vec![n as u32, m as u32];
    v.extend(best.unwrap_or_default());
    CanonicalForm(v)
}

/// A seeded random strong GT-space: draw a random subfamily, close it under
/// union to a fixed point, and adjoin ∅ and X. Always valid, reproducible
/// given the seed.
pub fn random_space(n: usize, rng: &mut impl Rng) -> GtSpace {
    assert!((1..=crate::set::MAX_POINTS).contains(&n));
    let full = SubSet::full(n).bits();
    let draw_count = rng.gen_range(0..=(n + 2));
    let mut members: Vec<u32> = vec![0, full];
    for _ in 0..draw_count {
        members.push(rng.gen_range(0..=full));
    }
    // close under pairwise union to a fixed point
    loop {
        let mut added = false;
        let snapshot = members.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let u = a | b;
                if !members.contains(&u) {
                    members.push(u);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let family = SetFamily::new(n, members.into_iter().map(|b| SubSet::new(b, n)));
    validate_gt(n, family).expect("union closure guarantees validity")
}

/// A seeded random surjection table from `n` points onto `m` points.
pub fn random_surjection(n: usize, m: usize, rng: &mut impl Rng) -> Vec<usize> {
    assert!(m >= 1 && m <= n);
    // hit every codomain point once, fill the rest uniformly, then shuffle
    let mut table: Vec<usize> = (0..m).collect();
    for _ in m..n {
        table.push(rng.gen_range(0..m));
    }
    table.shuffle(rng);
    table
}

/// A seeded random validated mapping between two fresh random spaces.
pub fn random_mapping(n: usize, m: usize, rng: &mut impl Rng) -> GtMapping {
    let dom = random_space(n, rng);
    let cod = random_space(m, rng);
    let table = random_surjection(n, m, rng);
    GtMapping::new(dom, cod, table).expect("random surjection is valid by construction")
}

/// Deterministic RNG for all randomized generation in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pinned regression counts of strong GT-spaces, confirmed by the
/// brute-force oracle in the test suite.
pub const STRONG_GT_COUNTS: [usize; 4] = [1, 4, 45, 2271];

#[allow(dead_code)]
fn relabel_for_tests(space: &GtSpace, perm: &[usize]) -> GtSpace {
    let n = space.len();
    let family = SetFamily::new(
        n,
        space.opens().iter().map(|s| {
            let mut bits = 0u32;
            for p in s.points() {
                bits |= 1 << perm[p];
            }
            SubSet::new(bits, n)
        }),
    );
    validate_gt(n, family).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: filter every subset-of-the-power-set candidate
    /// for union closure. Exponential in 2^n, usable for n ≤ 3.
    fn brute_force_strong_gts(n: usize) -> Vec<Vec<u32>> {
        let full = (1u32 << n) - 1;
        let inner: Vec<u32> = (1..full).collect();
        let mut out = Vec::new();
        for pick in 0u32..(1 << inner.len()) {
            let mut fam: Vec<u32> = vec![0, full];
            for (i, &s) in inner.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    fam.push(s);
                }
            }
            let closed = fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&(a | b))));
            if closed {
                fam.sort_unstable();
                out.push(fam);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force_oracle() {
        for n in 1..=3 {
            let oracle = brute_force_strong_gts(n);
            let mut got: Vec<Vec<u32>> = enumerate_strong_gts(n)
                .unwrap()
                .iter()
                .map(|s| s.opens().iter().map(|m| m.bits()).collect())
                .collect();
            got.sort();
            assert_eq!(got, oracle, "n = {n}");
        }
    }

    #[test]
    fn pinned_counts() {
        for (i, &count) in STRONG_GT_COUNTS.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_strong_gts(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn enumeration_has_no_duplicates_and_all_valid() {
        let spaces = enumerate_strong_gts(3).unwrap();
        let mut seen = std::collections::HashSet::new();
        for s in &spaces {
            let key: Vec<u32> = s.opens().iter().map(|m| m.bits()).collect();
            assert!(seen.insert(key), "duplicate family emitted");
            assert!(validate_gt(3, s.opens().clone()).is_ok());
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        assert!(matches!(
            enumerate_strong_gts(SPACE_ENUM_CAP + 1),
            Err(EnumError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(enumerate_surjections(2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_surjections(3, 1).unwrap().len(), 1);
        // inclusion–exclusion: 2^3 - 2 = 6
        assert_eq!(enumerate_surjections(3, 2).unwrap().len(), 6);
        assert_eq!(enumerate_surjections(4, 2).unwrap().len(), 14);
        assert!(enumerate_surjections(2, 3).unwrap().is_empty());
    }

    #[test]
    fn surjections_are_lexicographic_and_duplicate_free() {
        let tables = enumerate_surjections(3, 2).unwrap();
        let mut sorted = tables.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(tables, sorted);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let spaces = enumerate_strong_gts(3).unwrap();
        for s in &spaces {
            let base = canonicalize(s);
            for perm in (0..3).permutations(3) {
                let relabeled = relabel_for_tests(s, &perm);
                assert_eq!(canonicalize(&relabeled), base);
            }
        }
    }

    #[test]
    fn canonical_form_separates_non_isomorphic_spaces() {
        let a = validate_gt(
            2,
            SetFamily::new(2, [0b00u32, 0b01, 0b11].map(|b| SubSet::new(b, 2))),
        )
        .unwrap();
        let b = validate_gt(
            2,
            SetFamily::new(2, [0b00u32, 0b11].map(|b| SubSet::new(b, 2))),
        )
        .unwrap();
        assert_ne!(canonicalize(&a), canonicalize(&b));
    }

    #[test]
    fn canonical_pair_is_invariant_under_joint_relabeling() {
        let dom = validate_gt(
            3,
            SetFamily::new(3, [0b000u32, 0b011, 0b111].map(|b| SubSet::new(b, 3))),
        )
        .unwrap();
        let cod = validate_gt(
            2,
            SetFamily::new(2, [0b00u32, 0b11].map(|b| SubSet::new(b, 2))),
        )
        .unwrap();
        let f = GtMapping::new(dom.clone(), cod.clone(), vec![0, 1, 1]).unwrap();
        let base = canonicalize_pair(&f);
        // relabel the domain with a 3-cycle and adjust the table to match
        let relabeled_dom = relabel_for_tests(&dom, &[1, 2, 0]);
        // point old0->new1, old1->new2, old2->new0; table g[new] = f[old]
        let g = GtMapping::new(relabeled_dom, cod, vec![1, 0, 1]).unwrap();
        assert_eq!(canonicalize_pair(&g), base);
    }

    #[test]
    fn random_generation_is_reproducible_and_valid() {
        let mut r1 = seeded_rng(7);
        let mut r2 = seeded_rng(7);
        for _ in 0..50 {
            let a = random_space(4, &mut r1);
            let b = random_space(4, &mut r2);
            assert_eq!(a, b);
            assert!(validate_gt(4, a.opens().clone()).is_ok());
        }
        let mut r = seeded_rng(11);
        for _ in 0..50 {
            let f = random_mapping(4, 3, &mut r);
            assert_eq!(f.dom().len(), 4);
            assert_eq!(f.cod().len(), 3);
        }
    }
}
