//! Theorem registry, exhaustive verification sweeps, and the counterexample
//! miner that separates the mapping classes.
//!
//! Sweeps run over the full enumerated population (no sampling in
//! exhaustive mode) and report the first failing instance in enumeration
//! order, which is deterministic regardless of the parallel schedule.

use crate::enumerate::{
    canonicalize_pair, enumerate_strong_gts, enumerate_surjections, random_mapping,
    random_space, seeded_rng, CanonicalForm, EnumBounds, EnumError, EnumMode,
};
use crate::mapping::{GtMapping, MappingClass};
use crate::set::SubSet;
use crate::space::GtSpace;
use crate::subspace::induce_subspace;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("the implication {premise} ⟹ {conclusion} is provable; refusing to mine it")]
    ProvableImplication {
        premise: String,
        conclusion: String,
    },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("unknown mining preset {0:?}")]
    UnknownPreset(String),
}

/// Registry ids for every checkable statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    P2_1,
    P2_3,
    P2_4,
    P2_7,
    P2_10,
    T3_1,
    C3_2,
    T3_3,
    C3_4,
    T3_5,
    T3_6,
    C3_7,
    T3_9,
    R2_11,
    R3_8,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::P2_1,
        TheoremId::P2_3,
        TheoremId::P2_4,
        TheoremId::P2_7,
        TheoremId::P2_10,
        TheoremId::T3_1,
        TheoremId::C3_2,
        TheoremId::T3_3,
        TheoremId::C3_4,
        TheoremId::T3_5,
        TheoremId::T3_6,
        TheoremId::C3_7,
        TheoremId::T3_9,
        TheoremId::R2_11,
        TheoremId::R3_8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::P2_1 => "P2.1",
            TheoremId::P2_3 => "P2.3",
            TheoremId::P2_4 => "P2.4",
            TheoremId::P2_7 => "P2.7",
            TheoremId::P2_10 => "P2.10",
            TheoremId::T3_1 => "T3.1",
            TheoremId::C3_2 => "C3.2",
            TheoremId::C3_4 => "C3.4",
            TheoremId::T3_3 => "T3.3",
            TheoremId::T3_5 => "T3.5",
            TheoremId::T3_6 => "T3.6",
            TheoremId::C3_7 => "C3.7",
            TheoremId::T3_9 => "T3.9",
            TheoremId::R2_11 => "R2.11",
            TheoremId::R3_8 => "R3.8",
        }
    }

    pub fn parse(s: &str) -> Result<Self, VerifyError> {
        Self::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }

    pub fn kind(self) -> TheoremKind {
        match self {
            TheoremId::P2_1 | TheoremId::P2_4 => TheoremKind::OperatorLaw,
            TheoremId::P2_3
            | TheoremId::T3_1
            | TheoremId::T3_3
            | TheoremId::T3_5
            | TheoremId::T3_6
            | TheoremId::C3_2
            | TheoremId::C3_4
            | TheoremId::C3_7 => TheoremKind::Equivalence,
            TheoremId::P2_7 | TheoremId::P2_10 | TheoremId::T3_9 => TheoremKind::Implication,
            TheoremId::R2_11 | TheoremId::R3_8 => TheoremKind::Strictness,
        }
    }

    /// Operator-law and subspace statements are quantified over spaces;
    /// everything else over mappings.
    pub fn over_spaces(self) -> bool {
        matches!(self, TheoremId::P2_1 | TheoremId::P2_4)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremKind {
    OperatorLaw,
    Equivalence,
    Implication,
    Strictness,
}

// ---- per-instance evaluators ----

/// All ten operator laws on one space, quantified over every subset pair.
pub fn check_operator_laws(space: &GtSpace) -> bool {
    let n = space.len();
    for b in SubSet::all(n) {
        let ib = space.interior(b);
        let cb = space.closure(b);
        let db = space.derived_set(b);
        // (1) I(B) ⊆ B ⊆ C(B)
        if !ib.is_subset_of(b) || !b.is_subset_of(cb) {
            return false;
        }
        // (2) idempotence
        if space.interior(ib) != ib || space.closure(cb) != cb {
            return false;
        }
        // (3) monotonicity over all B' ⊆ B
        for bp in SubSet::all(n).filter(|bp| bp.is_subset_of(b)) {
            if !space.interior(bp).is_subset_of(ib)
                || !space.closure(bp).is_subset_of(cb)
                || !space.derived_set(bp).is_subset_of(db)
            {
                return false;
            }
        }
        // (4) I(B)=B ⟺ open ⟺ pointwise open
        let pointwise_open = b.points().all(|p| {
            space.opens_at(p).iter().any(|u| u.is_subset_of(b))
        });
        if (ib == b) != space.is_open(b) || space.is_open(b) != pointwise_open {
            return false;
        }
        // (5) C(B)=B ⟺ closed ⟺ pointwise separation
        let pointwise_closed = b.complement().points().all(|p| {
            space.opens_at(p).iter().any(|u| u.intersect(b).is_empty())
        });
        if (cb == b) != space.is_closed(b) || space.is_closed(b) != pointwise_closed {
            return false;
        }
        // (6) duality
        if cb != space.interior(b.complement()).complement()
            || ib != space.closure(b.complement()).complement()
        {
            return false;
        }
        // (7),(8) pointwise closure / interior membership
        for p in 0..n {
            let in_cb = space.opens_at(p).iter().all(|u| !u.intersect(b).is_empty());
            if cb.contains(p) != in_cb {
                return false;
            }
            let in_ib = space.opens_at(p).iter().any(|u| u.is_subset_of(b));
            if ib.contains(p) != in_ib {
                return false;
            }
        }
        // (9) C(B) = B ∪ d(B)
        if cb != b.union(db) {
            return false;
        }
    }
    // (10) x ∉ d({x})
    (0..n).all(|p| !space.derived_set(SubSet::singleton(p, n)).contains(p))
}

/// The subspace laws on one space: the relative-closure identity, the
/// relative-interior inclusion, and the closed-trace characterization, over
/// every carrier and every subset of it.
pub fn check_subspace_laws(space: &GtSpace) -> bool {
    let n = space.len();
    for carrier in SubSet::all(n) {
        let emb = match induce_subspace(space, carrier) {
            Ok(e) => e,
            Err(_) => return false,
        };
        for a in SubSet::all(n).filter(|a| a.is_subset_of(carrier)) {
            // C_{X'}(A) = C(A) ∩ X'
            let rel_c = match emb.relative_closure(a) {
                Ok(c) => c,
                Err(_) => return false,
            };
            if rel_c != space.closure(a).intersect(carrier) {
                return false;
            }
            // I(A) ⊆ I_{X'}(A) ∩ I(X')
            let rel_i = emb.relative_interior(a).unwrap();
            if !space
                .interior(a)
                .is_subset_of(rel_i.intersect(space.interior(carrier)))
            {
                return false;
            }
            // B μ'-closed ⟺ ∃ μ-closed F with B = F ∩ X'
            let child_closed = emb.child().is_closed(emb.to_child(a));
            let has_trace = space
                .closeds()
                .iter()
                .any(|f| f.intersect(carrier) == a);
            if child_closed != has_trace {
                return false;
            }
            match emb.closed_trace_witness(a) {
                Ok(Some(f)) => {
                    if !child_closed || !space.is_closed(f) || f.intersect(carrier) != a {
                        return false;
                    }
                }
                Ok(None) => {
                    if child_closed {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
    }
    true
}

fn all_eq(v: &[bool]) -> bool {
    v.iter().all(|&b| b == v[0])
}

/// Evaluate one mapping-level theorem on one mapping.
pub fn check_mapping_theorem(id: TheoremId, f: &GtMapping) -> bool {
    match id {
        TheoremId::P2_3 => all_eq(&f.continuity_conditions()),
        TheoremId::T3_1 => all_eq(&f.open_conditions()),
        TheoremId::T3_3 => all_eq(&f.closed_conditions()),
        TheoremId::T3_5 => all_eq(&f.quotient_conditions()),
        TheoremId::T3_6 => all_eq(&f.pseudo_open_conditions()),
        TheoremId::C3_2 => {
            if !f.is_g_continuous() {
                return true;
            }
            let y = f.cod();
            let identity = SubSet::all(y.len()).all(|b| {
                f.preimage(y.closure(b)) == f.dom().closure(f.preimage(b))
            });
            f.is_g_open() == identity
        }
        TheoremId::C3_4 => {
            if !f.is_g_continuous() {
                return true;
            }
            let x = f.dom();
            let identity = SubSet::all(x.len())
                .all(|a| f.cod().closure(f.image(a)) == f.image(x.closure(a)));
            f.is_g_closed() == identity
        }
        TheoremId::C3_7 => {
            if !f.is_g_continuous() {
                return true;
            }
            let y = f.cod();
            let identity = SubSet::all(y.len()).all(|b| {
                y.closure(b) == f.image(f.dom().closure(f.preimage(b)))
            });
            f.is_g_pseudo_open() == identity
        }
        TheoremId::T3_9 => {
            let open = f.is_g_open();
            let closed = f.is_g_closed();
            let pseudo = f.is_g_pseudo_open();
            let quotient = f.is_g_quotient();
            (!open || pseudo) && (!closed || pseudo) && (!pseudo || quotient)
        }
        TheoremId::P2_7 => {
            if !f.is_g_continuous() {
                return true;
            }
            SubSet::all(f.dom().len())
                .all(|carrier| f.restrict(carrier).mapping().is_g_continuous())
        }
        TheoremId::P2_10 => {
            for class in [
                MappingClass::Open,
                MappingClass::Closed,
                MappingClass::PseudoOpen,
            ] {
                if f.has_class(class) && !f.is_hereditarily(class) {
                    return false;
                }
            }
            // T3.6(1)⟺(2): hereditarily quotient exactly when pseudo-open
            f.is_hereditarily(MappingClass::Quotient) == f.is_g_pseudo_open()
        }
        TheoremId::P2_1 | TheoremId::P2_4 | TheoremId::R2_11 | TheoremId::R3_8 => {
            unreachable!("not a per-mapping theorem")
        }
    }
}

// ---- mining ----

/// What the conclusion of a mined implication ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Class(MappingClass),
    Hereditary(MappingClass),
}

impl Conclusion {
    pub fn name(self) -> String {
        match self {
            Conclusion::Class(c) => c.name().to_string(),
            Conclusion::Hereditary(c) => format!("hereditarily_{}", c.name()),
        }
    }

    pub fn holds_for(self, f: &GtMapping) -> bool {
        match self {
            Conclusion::Class(c) => f.has_class(c),
            Conclusion::Hereditary(c) => f.is_hereditarily(c),
        }
    }
}

fn class_implies(a: MappingClass, b: MappingClass) -> bool {
    use MappingClass::*;
    a == b
        || matches!(
            (a, b),
            (Open, PseudoOpen) | (Open, Quotient) | (Closed, PseudoOpen) | (Closed, Quotient)
                | (PseudoOpen, Quotient)
        )
}

/// True when the implication is a theorem of the registry and mining it
/// would never terminate with a witness.
pub fn is_provable_implication(premise: MappingClass, conclusion: Conclusion) -> bool {
    match conclusion {
        Conclusion::Class(c) => class_implies(premise, c),
        // open, closed, and pseudo-open are hereditary classes, so a
        // non-quotient premise that implies the class pointwise implies it
        // hereditarily; quotient-ness itself is not hereditary
        Conclusion::Hereditary(c) => {
            premise != MappingClass::Quotient && class_implies(premise, c)
        }
    }
}

/// The shipped strictness presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinePreset {
    OpenNotClosed,
    ClosedNotOpen,
    PseudoOpenNotOpen,
    PseudoOpenNotClosed,
    QuotientNotPseudoOpen,
    QuotientNotHereditarilyQuotient,
}

impl MinePreset {
    pub const ALL: [MinePreset; 6] = [
        MinePreset::OpenNotClosed,
        MinePreset::ClosedNotOpen,
        MinePreset::PseudoOpenNotOpen,
        MinePreset::PseudoOpenNotClosed,
        MinePreset::QuotientNotPseudoOpen,
        MinePreset::QuotientNotHereditarilyQuotient,
    ];

    pub fn target(self) -> (MappingClass, Conclusion) {
        use MappingClass::*;
        match self {
            MinePreset::OpenNotClosed => (Open, Conclusion::Class(Closed)),
            MinePreset::ClosedNotOpen => (Closed, Conclusion::Class(Open)),
            MinePreset::PseudoOpenNotOpen => (PseudoOpen, Conclusion::Class(Open)),
            MinePreset::PseudoOpenNotClosed => (PseudoOpen, Conclusion::Class(Closed)),
            MinePreset::QuotientNotPseudoOpen => (Quotient, Conclusion::Class(PseudoOpen)),
            MinePreset::QuotientNotHereditarilyQuotient => {
                (Quotient, Conclusion::Hereditary(Quotient))
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MinePreset::OpenNotClosed => "open-not-closed",
            MinePreset::ClosedNotOpen => "closed-not-open",
            MinePreset::PseudoOpenNotOpen => "pseudo-open-not-open",
            MinePreset::PseudoOpenNotClosed => "pseudo-open-not-closed",
            MinePreset::QuotientNotPseudoOpen => "quotient-not-pseudo-open",
            MinePreset::QuotientNotHereditarilyQuotient => "quotient-not-hereditarily-quotient",
        }
    }

    pub fn parse(s: &str) -> Result<Self, VerifyError> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| VerifyError::UnknownPreset(s.to_string()))
    }
}

/// A serializable mapping: both families as raw bit patterns plus the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMapping {
    pub dom_points: usize,
    pub cod_points: usize,
    pub dom_opens: Vec<u32>,
    pub cod_opens: Vec<u32>,
    pub table: Vec<usize>,
}

impl WitnessMapping {
    pub fn from_mapping(f: &GtMapping) -> Self {
        WitnessMapping {
            dom_points: f.dom().len(),
            cod_points: f.cod().len(),
            dom_opens: f.dom().opens().iter().map(|s| s.bits()).collect(),
            cod_opens: f.cod().opens().iter().map(|s| s.bits()).collect(),
            table: f.table().to_vec(),
        }
    }

    pub fn to_mapping(&self) -> Result<GtMapping, crate::mapping::MappingError> {
        let dom = crate::space::validate_gt(
            self.dom_points,
            crate::set::SetFamily::new(
                self.dom_points,
                self.dom_opens.iter().map(|&b| SubSet::new(b, self.dom_points)),
            ),
        )?;
        let cod = crate::space::validate_gt(
            self.cod_points,
            crate::set::SetFamily::new(
                self.cod_points,
                self.cod_opens.iter().map(|&b| SubSet::new(b, self.cod_points)),
            ),
        )?;
        GtMapping::new(dom, cod, self.table.clone())
    }
}

/// A mined separation: a mapping with the premise class but without the
/// conclusion, minimal by (|X|, |Y|, canonical encoding) within the
/// searched bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub premise: MappingClass,
    pub conclusion: Conclusion,
    pub mapping: WitnessMapping,
    pub canonical: CanonicalForm,
    /// Instances scanned in size levels strictly before the witness level.
    pub searched_before: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MineOutcome {
    Witness(Witness),
    /// No witness inside the bounds; the count is the population searched.
    Exhausted { searched: usize },
}

/// Searches size levels (|X|, |Y|) in lexicographic order and returns the
/// canonically least witness at the first level containing one.
pub fn mine_counterexample(
    premise: MappingClass,
    conclusion: Conclusion,
    bounds: &EnumBounds,
) -> Result<MineOutcome, VerifyError> {
    if is_provable_implication(premise, conclusion) {
        return Err(VerifyError::ProvableImplication {
            premise: premise.name().to_string(),
            conclusion: conclusion.name(),
        });
    }
    bounds.check()?;
    let mut searched = 0usize;
    for nx in 1..=bounds.max_dom_points {
        let dom_spaces = enumerate_strong_gts(nx)?;
        for ny in 1..=nx.min(bounds.max_cod_points) {
            let cod_spaces = enumerate_strong_gts(ny)?;
            let tables = enumerate_surjections(nx, ny)?;
            let level = dom_spaces.len() * cod_spaces.len() * tables.len();
            let best = dom_spaces
                .par_iter()
                .map(|dom| {
                    let mut local: Option<(CanonicalForm, WitnessMapping)> = None;
                    for cod in &cod_spaces {
                        for table in &tables {
                            let f = GtMapping::new(dom.clone(), cod.clone(), table.clone())
                                .expect("enumerated tables are surjective");
                            if f.has_class(premise) && !conclusion.holds_for(&f) {
                                let form = canonicalize_pair(&f);
                                if local.as_ref().is_none_or(|(b, _)| form < *b) {
                                    local = Some((form, WitnessMapping::from_mapping(&f)));
                                }
                            }
                        }
                    }
                    local
                })
                .reduce(
                    || None,
                    |a, b| match (a, b) {
                        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                        (x, None) => x,
                        (None, y) => y,
                    },
                );
            if let Some((canonical, mapping)) = best {
                return Ok(MineOutcome::Witness(Witness {
                    premise,
                    conclusion,
                    mapping,
                    canonical,
                    searched_before: searched,
                }));
            }
            searched += level;
        }
    }
    Ok(MineOutcome::Exhausted { searched })
}

/// Re-runs the definition-mode classifiers on a committed witness and
/// confirms the signature and canonical form.
pub fn check_witness(w: &Witness) -> bool {
    let Ok(f) = w.mapping.to_mapping() else {
        return false;
    };
    f.has_class(w.premise)
        && !w.conclusion.holds_for(&f)
        && canonicalize_pair(&f) == w.canonical
}

// ---- sweeps ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Population {
    pub spaces: usize,
    pub mappings: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    Pass,
    Fail,
    WitnessFound,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub id: TheoremId,
    pub kind: TheoremKind,
    pub status: TheoremStatus,
    pub checked: usize,
    /// Canonical form of the first failing instance, enumeration order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<CanonicalForm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub bounds: EnumBounds,
    pub population: Population,
    pub results: Vec<TheoremResult>,
    pub witnesses: Vec<Witness>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != TheoremStatus::Fail)
    }
}

/// Every mapping instance in the exhaustive population for the bounds:
/// ordered pairs of enumerated strong GT-spaces times all surjections.
pub fn mapping_population(bounds: &EnumBounds) -> Result<Vec<GtMapping>, EnumError> {
    let mut out = Vec::new();
    for nx in 1..=bounds.max_dom_points {
        let dom_spaces = enumerate_strong_gts(nx)?;
        for ny in 1..=nx.min(bounds.max_cod_points) {
            let cod_spaces = enumerate_strong_gts(ny)?;
            let tables = enumerate_surjections(nx, ny)?;
            for dom in &dom_spaces {
                for cod in &cod_spaces {
                    for table in &tables {
                        out.push(
                            GtMapping::new(dom.clone(), cod.clone(), table.clone())
                                .expect("enumerated tables are surjective"),
                        );
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every space instance in the exhaustive population for the bounds.
pub fn space_population(bounds: &EnumBounds) -> Result<Vec<GtSpace>, EnumError> {
    let mut out = Vec::new();
    for n in 1..=bounds.max_dom_points {
        out.extend(enumerate_strong_gts(n)?);
    }
    Ok(out)
}

/// Runs every selected theorem over the population for the bounds.
///
/// Operator-law and equivalence failures make the suite fail; strictness
/// results report witness-found or exhausted and never fail the suite
/// (bounds may simply be too small for a separation to appear).
pub fn run_suite(bounds: &EnumBounds, theorems: &[TheoremId]) -> Result<VerifyReport, VerifyError> {
    bounds.check()?;
    let (spaces, mappings) = match bounds.mode {
        EnumMode::Exhaustive => (space_population(bounds)?, mapping_population(bounds)?),
        EnumMode::Random { seed, count } => {
            let mut rng = seeded_rng(seed);
            let spaces: Vec<GtSpace> = (0..count)
                .map(|_| random_space(bounds.max_dom_points, &mut rng))
                .collect();
            let mappings: Vec<GtMapping> = (0..count)
                .map(|_| {
                    random_mapping(bounds.max_dom_points, bounds.max_cod_points, &mut rng)
                })
                .collect();
            (spaces, mappings)
        }
    };
    let mut results = Vec::new();
    let mut witnesses = Vec::new();
    for &id in theorems {
        let result = match id.kind() {
            TheoremKind::Strictness => {
                let (status, found) = run_strictness(id, bounds)?;
                witnesses.extend(found);
                TheoremResult {
                    id,
                    kind: id.kind(),
                    status,
                    checked: mappings.len(),
                    failure: None,
                }
            }
            _ if id.over_spaces() => {
                let check: fn(&GtSpace) -> bool = match id {
                    TheoremId::P2_1 => check_operator_laws,
                    TheoremId::P2_4 => check_subspace_laws,
                    _ => unreachable!(),
                };
                let first_failure = spaces
                    .par_iter()
                    .enumerate()
                    .filter(|(_, s)| !check(s))
                    .map(|(i, _)| i)
                    .min();
                TheoremResult {
                    id,
                    kind: id.kind(),
                    status: if first_failure.is_none() {
                        TheoremStatus::Pass
                    } else {
                        TheoremStatus::Fail
                    },
                    checked: spaces.len(),
                    failure: first_failure.map(|i| crate::enumerate::canonicalize(&spaces[i])),
                }
            }
            _ => {
                let first_failure = mappings
                    .par_iter()
                    .enumerate()
                    .filter(|(_, f)| !check_mapping_theorem(id, f))
                    .map(|(i, _)| i)
                    .min();
                TheoremResult {
                    id,
                    kind: id.kind(),
                    status: if first_failure.is_none() {
                        TheoremStatus::Pass
                    } else {
                        TheoremStatus::Fail
                    },
                    checked: mappings.len(),
                    failure: first_failure.map(|i| canonicalize_pair(&mappings[i])),
                }
            }
        };
        results.push(result);
    }
    Ok(VerifyReport {
        bounds: *bounds,
        population: Population {
            spaces: spaces.len(),
            mappings: mappings.len(),
        },
        results,
        witnesses,
    })
}

/// Strictness statements are established by mining. R2.11 needs the single
/// quotient / hereditarily-quotient separation; R3.8 needs all five class
/// separations.
fn run_strictness(
    id: TheoremId,
    bounds: &EnumBounds,
) -> Result<(TheoremStatus, Vec<Witness>), VerifyError> {
    let presets: &[MinePreset] = match id {
        TheoremId::R2_11 => &[MinePreset::QuotientNotHereditarilyQuotient],
        TheoremId::R3_8 => &[
            MinePreset::OpenNotClosed,
            MinePreset::ClosedNotOpen,
            MinePreset::PseudoOpenNotOpen,
            MinePreset::PseudoOpenNotClosed,
            MinePreset::QuotientNotPseudoOpen,
        ],
        _ => unreachable!(),
    };
    let mut witnesses = Vec::new();
    let mut all_found = true;
    for preset in presets {
        let (premise, conclusion) = preset.target();
        match mine_counterexample(premise, conclusion, bounds)? {
            MineOutcome::Witness(w) => witnesses.push(w),
            MineOutcome::Exhausted { .. } => all_found = false,
        }
    }
    let status = if all_found {
        TheoremStatus::WitnessFound
    } else {
        TheoremStatus::Exhausted
    };
    Ok((status, witnesses))
}
