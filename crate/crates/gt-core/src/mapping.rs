//! Surjections between GT-spaces, restriction, the five mapping-class
//! predicates, their characterization conditions, hereditary variants, and
//! the quotient generalized topology.
//!
//! Every mapping is surjective; non-surjective tables are rejected at
//! construction rather than silently corestricted.

use crate::set::{SetFamily, SubSet};
use crate::space::{GtSpace, GtError};
use crate::subspace::{induce_subspace, SubspaceEmbedding};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MappingError {
    #[error("codomain point {0} has empty preimage (mapping is not surjective)")]
    NotSurjective(usize),
    #[error("table entry {0} is out of codomain range")]
    OutOfRange(usize),
    #[error("table length {got} does not match domain size {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Space(#[from] GtError),
}

/// The four mapping classes of interest, plus continuity handled separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MappingClass {
    Open,
    Closed,
    PseudoOpen,
    Quotient,
}

impl MappingClass {
    pub const ALL: [MappingClass; 4] = [
        MappingClass::Open,
        MappingClass::Closed,
        MappingClass::PseudoOpen,
        MappingClass::Quotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MappingClass::Open => "open",
            MappingClass::Closed => "closed",
            MappingClass::PseudoOpen => "pseudo_open",
            MappingClass::Quotient => "quotient",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "open" => Some(MappingClass::Open),
            "closed" => Some(MappingClass::Closed),
            "pseudo_open" | "pseudo-open" => Some(MappingClass::PseudoOpen),
            "quotient" => Some(MappingClass::Quotient),
            _ => None,
        }
    }
}

/// A validated surjection between two GT-spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtMapping {
    dom: GtSpace,
    cod: GtSpace,
    table: Vec<usize>,
}

pub fn make_mapping(
    dom: GtSpace,
    cod: GtSpace,
    table: Vec<usize>,
) -> Result<GtMapping, MappingError> {
    GtMapping::new(dom, cod, table)
}

impl GtMapping {
    pub fn new(dom: GtSpace, cod: GtSpace, table: Vec<usize>) -> Result<Self, MappingError> {
        if table.len() != dom.len() {
            return Err(MappingError::LengthMismatch {
                expected: dom.len(),
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= cod.len()) {
            return Err(MappingError::OutOfRange(bad));
        }
        for y in 0..cod.len() {
            if !table.contains(&y) {
                return Err(MappingError::NotSurjective(y));
            }
        }
        Ok(GtMapping { dom, cod, table })
    }

    pub fn identity(space: &GtSpace) -> Self {
        GtMapping {
            dom: space.clone(),
            cod: space.clone(),
            table: (0..space.len()).collect(),
        }
    }

    pub fn dom(&self) -> &GtSpace {
        &self.dom
    }

    pub fn cod(&self) -> &GtSpace {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self, a: SubSet) -> SubSet {
        debug_assert_eq!(a.width(), self.dom.len());
        let mut bits = 0u32;
        for x in a.points() {
            bits |= 1 << self.table[x];
        }
        SubSet::new(bits, self.cod.len())
    }

    pub fn preimage(&self, b: SubSet) -> SubSet {
        debug_assert_eq!(b.width(), self.cod.len());
        let mut bits = 0u32;
        for (x, &y) in self.table.iter().enumerate() {
            if b.contains(y) {
                bits |= 1 << x;
            }
        }
        SubSet::new(bits, self.dom.len())
    }

    pub fn fiber(&self, y: usize) -> SubSet {
        self.preimage(SubSet::singleton(y, self.cod.len()))
    }

    /// Restriction of the mapping to a domain carrier: a surjection from the
    /// induced subspace on `carrier` onto the induced subspace on its image.
    pub fn restrict(&self, carrier: SubSet) -> RestrictedMapping {
        let dom_emb = induce_subspace(&self.dom, carrier)
            .expect("carrier width checked by caller");
        let img = self.image(carrier);
        let cod_emb = induce_subspace(&self.cod, img)
            .expect("image width always matches codomain");
        let table = dom_emb
            .child_to_parent()
            .iter()
            .map(|&px| {
                let py = self.table[px];
                cod_emb
                    .child_to_parent()
                    .iter()
                    .position(|&q| q == py)
                    .expect("image point present in codomain carrier")
            })
            .collect();
        let mapping = GtMapping::new(dom_emb.child().clone(), cod_emb.child().clone(), table)
            .expect("restriction is surjective onto its image by construction");
        RestrictedMapping {
            mapping,
            dom_emb,
            cod_emb,
        }
    }

    /// Restriction to the preimage of a codomain carrier, as used by the
    /// hereditary definitions: f|_{f⁻¹(Y′)} : f⁻¹(Y′) → Y′.
    pub fn restrict_over(&self, cod_carrier: SubSet) -> RestrictedMapping {
        self.restrict(self.preimage(cod_carrier))
    }

    // ---- continuity ----

    /// Definition: preimages of opens are open.
    pub fn is_g_continuous(&self) -> bool {
        self.cod
            .opens()
            .iter()
            .all(|v| self.dom.is_open(self.preimage(v)))
    }

    /// The six equivalent continuity conditions, evaluated independently.
    pub fn continuity_conditions(&self) -> [bool; 6] {
        let (x, y) = (&self.dom, &self.cod);
        let c1 = self.is_g_continuous();
        let c2 = y
            .closeds()
            .iter()
            .all(|f| x.is_closed(self.preimage(f)));
        let c3 = SubSet::all(x.len())
            .all(|a| self.image(x.closure(a)).is_subset_of(y.closure(self.image(a))));
        let c4 = SubSet::all(y.len())
            .all(|b| x.closure(self.preimage(b)).is_subset_of(self.preimage(y.closure(b))));
        let c5 = SubSet::all(y.len())
            .all(|b| self.preimage(y.interior(b)).is_subset_of(x.interior(self.preimage(b))));
        let c6 = (0..x.len()).all(|p| {
            y.opens_at(self.table[p]).iter().all(|v| {
                x.opens_at(p).iter().any(|u| self.image(u).is_subset_of(v))
            })
        });
        [c1, c2, c3, c4, c5, c6]
    }

    // ---- openness ----

    /// Definition: images of opens are open.
    pub fn is_g_open(&self) -> bool {
        self.dom
            .opens()
            .iter()
            .all(|u| self.cod.is_open(self.image(u)))
    }

    /// The four equivalent openness conditions.
    pub fn open_conditions(&self) -> [bool; 4] {
        let (x, y) = (&self.dom, &self.cod);
        let c1 = self.is_g_open();
        let c2 = SubSet::all(y.len())
            .all(|b| self.preimage(y.closure(b)).is_subset_of(x.closure(self.preimage(b))));
        let c3 = SubSet::all(x.len())
            .all(|a| self.image(x.interior(a)).is_subset_of(y.interior(self.image(a))));
        let c4 = (0..x.len()).all(|p| {
            x.opens_at(p).iter().all(|u| {
                let fu = self.image(u);
                y.opens_at(self.table[p]).iter().any(|v| v.is_subset_of(fu))
            })
        });
        [c1, c2, c3, c4]
    }

    // ---- closedness ----

    /// Definition: images of closed sets are closed.
    pub fn is_g_closed(&self) -> bool {
        self.dom
            .closeds()
            .iter()
            .all(|f| self.cod.is_closed(self.image(f)))
    }

    /// The four equivalent closedness conditions.
    pub fn closed_conditions(&self) -> [bool; 4] {
        let (x, y) = (&self.dom, &self.cod);
        let c1 = self.is_g_closed();
        let c2 = SubSet::all(x.len())
            .all(|a| y.closure(self.image(a)).is_subset_of(self.image(x.closure(a))));
        // (3): every saturated open cover of a preimage refines through an open V
        let c3 = SubSet::all(y.len()).all(|b| {
            x.opens().iter().all(|u| {
                if !self.preimage(b).is_subset_of(u) {
                    return true;
                }
                y.opens().iter().any(|v| {
                    b.is_subset_of(v) && self.preimage(v).is_subset_of(u)
                })
            })
        });
        // (4): the single-point instance of (3)
        let c4 = (0..y.len()).all(|q| {
            let fb = self.fiber(q);
            x.opens().iter().all(|u| {
                if !fb.is_subset_of(u) {
                    return true;
                }
                y.opens()
                    .iter()
                    .any(|v| v.contains(q) && self.preimage(v).is_subset_of(u))
            })
        });
        [c1, c2, c3, c4]
    }

    // ---- pseudo-openness ----

    /// Definition: whenever a fiber lies inside an open U, its point lies in
    /// the interior of f(U).
    pub fn is_g_pseudo_open(&self) -> bool {
        (0..self.cod.len()).all(|q| {
            let fb = self.fiber(q);
            self.dom.opens().iter().all(|u| {
                !fb.is_subset_of(u) || self.cod.interior(self.image(u)).contains(q)
            })
        })
    }

    /// The three equivalent pseudo-openness conditions: the definition,
    /// hereditary quotient-ness, and the closure identity.
    pub fn pseudo_open_conditions(&self) -> [bool; 3] {
        let y = &self.cod;
        let c1 = self.is_g_pseudo_open();
        let c2 = self.is_hereditarily(MappingClass::Quotient);
        let c3 = SubSet::all(y.len()).all(|b| {
            y.closure(b)
                .is_subset_of(self.image(self.dom.closure(self.preimage(b))))
        });
        [c1, c2, c3]
    }

    // ---- quotient-ness ----

    /// Definition: a codomain subset whose preimage is open is itself open.
    pub fn is_g_quotient(&self) -> bool {
        SubSet::all(self.cod.len())
            .all(|v| !self.dom.is_open(self.preimage(v)) || self.cod.is_open(v))
    }

    /// The two equivalent quotient conditions (open and closed forms).
    pub fn quotient_conditions(&self) -> [bool; 2] {
        let c1 = self.is_g_quotient();
        let c2 = SubSet::all(self.cod.len())
            .all(|f| !self.dom.is_closed(self.preimage(f)) || self.cod.is_closed(f));
        [c1, c2]
    }

    pub fn has_class(&self, class: MappingClass) -> bool {
        match class {
            MappingClass::Open => self.is_g_open(),
            MappingClass::Closed => self.is_g_closed(),
            MappingClass::PseudoOpen => self.is_g_pseudo_open(),
            MappingClass::Quotient => self.is_g_quotient(),
        }
    }

    /// True iff every restriction f|_{f⁻¹(Y′)} over Y′ ⊆ Y has the class.
    /// Y′ = ∅ is included (vacuously true) and Y′ = Y is the base predicate.
    pub fn is_hereditarily(&self, class: MappingClass) -> bool {
        SubSet::all(self.cod.len())
            .all(|yp| self.restrict_over(yp).mapping().has_class(class))
    }
}

/// A restriction together with the two subspace embeddings that produced it.
#[derive(Clone, Debug)]
pub struct RestrictedMapping {
    mapping: GtMapping,
    dom_emb: SubspaceEmbedding,
    cod_emb: SubspaceEmbedding,
}

impl RestrictedMapping {
    pub fn mapping(&self) -> &GtMapping {
        &self.mapping
    }

    pub fn dom_embedding(&self) -> &SubspaceEmbedding {
        &self.dom_emb
    }

    pub fn cod_embedding(&self) -> &SubspaceEmbedding {
        &self.cod_emb
    }
}

/// The finest generalized topology on the codomain making the table
/// g-continuous: ν_q = {V ⊆ Y : f⁻¹(V) ∈ μ}.
pub fn quotient_gt(
    dom: &GtSpace,
    table: &[usize],
    cod_size: usize,
) -> Result<GtSpace, MappingError> {
    if table.len() != dom.len() {
        return Err(MappingError::LengthMismatch {
            expected: dom.len(),
            got: table.len(),
        });
    }
    if let Some(&bad) = table.iter().find(|&&y| y >= cod_size) {
        return Err(MappingError::OutOfRange(bad));
    }
    for y in 0..cod_size {
        if !table.contains(&y) {
            return Err(MappingError::NotSurjective(y));
        }
    }
    let preimage = |v: SubSet| -> SubSet {
        let mut bits = 0u32;
        for (x, &y) in table.iter().enumerate() {
            if v.contains(y) {
                bits |= 1 << x;
            }
        }
        SubSet::new(bits, dom.len())
    };
    let family = SetFamily::new(
        cod_size,
        SubSet::all(cod_size).filter(|&v| dom.is_open(preimage(v))),
    );
    // union-closed because preimage distributes over union; strong because
    // the preimage of Y is X ∈ μ
    Ok(crate::space::validate_gt(cod_size, family)?)
}

/// Per-class outcome of every characterization condition plus hereditary
/// flags. Within each class the conditions are provably equivalent; a
/// disagreement signals an implementation bug, never a property of the
/// mapping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVector {
    pub continuity: [bool; 6],
    pub open: [bool; 4],
    pub closed: [bool; 4],
    pub pseudo_open: [bool; 3],
    pub quotient: [bool; 2],
    pub hereditarily_open: bool,
    pub hereditarily_closed: bool,
    pub hereditarily_pseudo_open: bool,
    pub hereditarily_quotient: bool,
}

impl ClassificationVector {
    pub fn classify(f: &GtMapping) -> Self {
        ClassificationVector {
            continuity: f.continuity_conditions(),
            open: f.open_conditions(),
            closed: f.closed_conditions(),
            pseudo_open: f.pseudo_open_conditions(),
            quotient: f.quotient_conditions(),
            hereditarily_open: f.is_hereditarily(MappingClass::Open),
            hereditarily_closed: f.is_hereditarily(MappingClass::Closed),
            hereditarily_pseudo_open: f.is_hereditarily(MappingClass::PseudoOpen),
            hereditarily_quotient: f.is_hereditarily(MappingClass::Quotient),
        }
    }

    /// True iff every condition group is internally constant.
    pub fn is_consistent(&self) -> bool {
        let same = |v: &[bool]| v.iter().all(|&b| b == v[0]);
        same(&self.continuity)
            && same(&self.open)
            && same(&self.closed)
            && same(&self.pseudo_open)
            && same(&self.quotient)
    }
}
