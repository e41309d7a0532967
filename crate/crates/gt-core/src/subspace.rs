//! Subspace induction μ′ = {U ∩ X′ : U ∈ μ} and the relative operators.
//!
//! Results are reported in parent coordinates; the embedding carries the
//! re-indexing map both ways so hereditary checks can compose embeddings
//! without label aliasing.

use crate::set::{SetFamily, SubSet};
use crate::space::GtSpace;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubspaceError {
    #[error("subset {0:?} is not contained in the carrier")]
    NotInCarrier(SubSet),
    #[error("carrier width {got} does not match parent size {expected}")]
    WidthMismatch { expected: usize, got: usize },
}

/// A subspace of a parent space on a carrier X′, with both coordinate maps.
#[derive(Clone, Debug)]
pub struct SubspaceEmbedding {
    parent: GtSpace,
    carrier: SubSet,
    child: GtSpace,
    /// child point index -> parent point index, ascending.
    child_to_parent: Vec<usize>,
}

/// Builds the trace topology {U ∩ X′ : U ∈ μ} on the carrier. The result is
/// always a valid strong GT-space: X′ = X ∩ X′ and ∅ are traces, and traces
/// of unions are unions of traces. An empty carrier yields the empty space
/// with opens {∅}.
pub fn induce_subspace(
    space: &GtSpace,
    carrier: SubSet,
) -> Result<SubspaceEmbedding, SubspaceError> {
    if carrier.width() != space.len() {
        return Err(SubspaceError::WidthMismatch {
            expected: space.len(),
            got: carrier.width(),
        });
    }
    let child_to_parent: Vec<usize> = carrier.points().collect();
    let m = child_to_parent.len();
    let to_child = |s: SubSet| -> SubSet {
        let mut bits = 0u32;
        for (ci, &pi) in child_to_parent.iter().enumerate() {
            if s.contains(pi) {
                bits |= 1 << ci;
            }
        }
        SubSet::new(bits, m)
    };
    let traces = SetFamily::new(
        m,
        space.opens().iter().map(|u| to_child(u.intersect(carrier))),
    );
    let labels = child_to_parent
        .iter()
        .map(|&pi| space.label(pi).to_string())
        .collect();
    let child = GtSpace::with_labels(labels, traces)
        .expect("trace family always satisfies the strong GT axioms");
    Ok(SubspaceEmbedding {
        parent: space.clone(),
        carrier,
        child,
        child_to_parent,
    })
}

impl SubspaceEmbedding {
    pub fn parent(&self) -> &GtSpace {
        &self.parent
    }

    pub fn carrier(&self) -> SubSet {
        self.carrier
    }

    pub fn child(&self) -> &GtSpace {
        &self.child
    }

    pub fn child_to_parent(&self) -> &[usize] {
        &self.child_to_parent
    }

    /// Re-express a parent-coordinate subset of the carrier in child
    /// coordinates.
    pub fn to_child(&self, s: SubSet) -> SubSet {
        let mut bits = 0u32;
        for (ci, &pi) in self.child_to_parent.iter().enumerate() {
            if s.contains(pi) {
                bits |= 1 << ci;
            }
        }
        SubSet::new(bits, self.child_to_parent.len())
    }

    /// Re-express a child-coordinate subset in parent coordinates.
    pub fn to_parent(&self, s: SubSet) -> SubSet {
        let mut bits = 0u32;
        for (ci, &pi) in self.child_to_parent.iter().enumerate() {
            if s.contains(ci) {
                bits |= 1 << pi;
            }
        }
        SubSet::new(bits, self.parent.len())
    }

    fn check_in_carrier(&self, a: SubSet) -> Result<(), SubspaceError> {
        if a.width() != self.parent.len() || !a.is_subset_of(self.carrier) {
            return Err(SubspaceError::NotInCarrier(a));
        }
        Ok(())
    }

    /// Closure of `a` in the subspace, parent coordinates. Always equals
    /// `closure(parent, a) ∩ carrier`.
    pub fn relative_closure(&self, a: SubSet) -> Result<SubSet, SubspaceError> {
        self.check_in_carrier(a)?;
        Ok(self.to_parent(self.child.closure(self.to_child(a))))
    }

    /// Interior of `a` in the subspace, parent coordinates.
    pub fn relative_interior(&self, a: SubSet) -> Result<SubSet, SubspaceError> {
        self.check_in_carrier(a)?;
        Ok(self.to_parent(self.child.interior(self.to_child(a))))
    }

    /// If `b` is closed in the subspace, returns a parent-closed F with
    /// `F ∩ carrier = b`; the canonical choice is the parent closure of `b`.
    pub fn closed_trace_witness(&self, b: SubSet) -> Result<Option<SubSet>, SubspaceError> {
        self.check_in_carrier(b)?;
        if !self.child.is_closed(self.to_child(b)) {
            return Ok(None);
        }
        let f = self.parent.closure(b);
        debug_assert!(self.parent.is_closed(f));
        debug_assert_eq!(f.intersect(self.carrier), b);
        Ok(Some(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::validate_gt;

    fn space_from_bits(n: usize, members: &[u32]) -> GtSpace {
        let family = SetFamily::new(n, members.iter().map(|&b| SubSet::new(b, n)));
        validate_gt(n, family).unwrap()
    }

    /// μ = {X, {x,y}, {y,z}, ∅} on {x,y,z}; x=bit0, y=bit1, z=bit2.
    fn remark_space() -> GtSpace {
        space_from_bits(3, &[0b000, 0b011, 0b110, 0b111])
    }

    #[test]
    fn trace_family_of_the_remark_fixture() {
        let emb = induce_subspace(&remark_space(), SubSet::new(0b011, 3)).unwrap();
        // μ′ = {∅, {y}, X′} in child coordinates (x=bit0, y=bit1)
        let bits: Vec<u32> = emb.child().opens().iter().map(|u| u.bits()).collect();
        assert_eq!(bits, vec![0b00, 0b10, 0b11]);
        assert_eq!(emb.child().labels(), ["p0", "p1"]);
    }

    #[test]
    fn full_carrier_reproduces_parent() {
        let s = remark_space();
        let emb = induce_subspace(&s, SubSet::full(3)).unwrap();
        assert_eq!(emb.child(), &s);
    }

    #[test]
    fn empty_carrier_gives_the_empty_space() {
        let emb = induce_subspace(&remark_space(), SubSet::empty(3)).unwrap();
        assert_eq!(emb.child().len(), 0);
        assert_eq!(emb.child().opens().len(), 1);
    }

    #[test]
    fn relative_interior_strict_inclusion_instance() {
        let s = remark_space();
        let carrier = SubSet::new(0b011, 3);
        let emb = induce_subspace(&s, carrier).unwrap();
        let y = SubSet::new(0b010, 3);
        // I({y}) = ∅ in the parent but {y} in the subspace
        assert_eq!(s.interior(y), SubSet::empty(3));
        let rel = emb.relative_interior(y).unwrap();
        assert_eq!(rel, y);
        // I_{X'}({y}) ∩ I(X') = {y} ≠ I({y})
        assert_eq!(rel.intersect(s.interior(carrier)), y);
    }

    #[test]
    fn relative_closure_matches_the_trace_law() {
        let s = remark_space();
        let carrier = SubSet::new(0b011, 3);
        let emb = induce_subspace(&s, carrier).unwrap();
        for a_bits in 0..4u32 {
            let a = emb.to_parent(SubSet::new(a_bits, 2));
            assert_eq!(
                emb.relative_closure(a).unwrap(),
                s.closure(a).intersect(carrier)
            );
        }
    }

    #[test]
    fn closed_trace_witness_examples() {
        let s = remark_space();
        let carrier = SubSet::new(0b011, 3);
        let emb = induce_subspace(&s, carrier).unwrap();
        // {x} is child-closed (child opens contain {y}∪... whose complement is {x});
        // the parent witness is {x} itself since {y,z} ∈ μ.
        let x = SubSet::new(0b001, 3);
        let f = emb.closed_trace_witness(x).unwrap().unwrap();
        assert!(s.is_closed(f));
        assert_eq!(f.intersect(carrier), x);
        // the carrier itself always has a witness
        assert!(emb.closed_trace_witness(carrier).unwrap().is_some());
        // {y} is child-open but not child-closed
        assert_eq!(emb.closed_trace_witness(SubSet::new(0b010, 3)).unwrap(), None);
    }

    #[test]
    fn not_in_carrier_is_rejected() {
        let emb = induce_subspace(&remark_space(), SubSet::new(0b011, 3)).unwrap();
        let err = emb.relative_closure(SubSet::new(0b100, 3)).unwrap_err();
        assert!(matches!(err, SubspaceError::NotInCarrier(_)));
    }
}
