//! Strong generalized topological spaces and the four fundamental operators.
//!
//! A generalized topology on a finite set is a family of subsets containing
//! the empty set and closed under unions; it is strong when the full ground
//! set is also a member. Strongness is mandatory here: every space produced
//! by this crate carries both the empty set and the ground set.

use crate::set::{SetFamily, SubSet, MAX_POINTS};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("the empty set is not a member of the family")]
    MissingEmpty,
    #[error("family is not union-closed: {0:?} ∪ {1:?} is missing")]
    NotUnionClosed(SubSet, SubSet),
    #[error("the full ground set is not a member (space is not strong)")]
    NotStrong,
    #[error("ground-set size {0} exceeds the supported maximum {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("family member width does not match ground-set size {0}")]
    WidthMismatch(usize),
    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A validated strong generalized topological space.
///
/// Immutable after construction; all operators are pure functions of the
/// stored family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GtSpace {
    n: usize,
    labels: Vec<String>,
    opens: SetFamily,
}

/// Checks the GT axioms plus strongness and returns the validated space.
///
/// Union closure is checked over all member pairs; on a finite family this
/// is equivalent to closure under arbitrary unions.
pub fn validate_gt(n: usize, family: SetFamily) -> Result<GtSpace, GtError> {
    GtSpace::with_labels(default_labels(n), family)
}

/// Default labels `p0, p1, ...` for spaces built without explicit names.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

impl GtSpace {
    pub fn with_labels(labels: Vec<String>, family: SetFamily) -> Result<Self, GtError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(GtError::TooManyPoints(n));
        }
        if family.width() != n {
            return Err(GtError::WidthMismatch(n));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(GtError::DuplicateLabel(l.clone()));
            }
        }
        if !family.contains(SubSet::empty(n)) {
            return Err(GtError::MissingEmpty);
        }
        if !family.contains(SubSet::full(n)) {
            return Err(GtError::NotStrong);
        }
        for u in family.iter() {
            for v in family.iter() {
                if !family.contains(u.union(v)) {
                    return Err(GtError::NotUnionClosed(u, v));
                }
            }
        }
        Ok(GtSpace {
            n,
            labels,
            opens: family,
        })
    }

    /// Replace the labels of an already-validated space.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self, GtError> {
        if labels.len() != self.n {
            return Err(GtError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        GtSpace::with_labels(labels, self.opens.clone())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn point_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn ground_set(&self) -> SubSet {
        SubSet::full(self.n)
    }

    /// True when the family is additionally closed under binary
    /// intersection, i.e. it is an honest topology on the ground set.
    pub fn is_topology(&self) -> bool {
        self.opens
            .iter()
            .all(|u| self.opens.iter().all(|v| self.opens.contains(u.intersect(v))))
    }

    /// μ_x: all opens containing `x`. Nonempty by strongness.
    pub fn opens_at(&self, x: usize) -> SetFamily {
        assert!(x < self.n);
        SetFamily::new(self.n, self.opens.iter().filter(|u| u.contains(x)))
    }

    /// N(x): the intersection of every open containing `x`.
    pub fn neighborhood_core(&self, x: usize) -> SubSet {
        self.opens_at(x).intersect_all()
    }

    /// I(B): the union of all opens contained in `b`.
    pub fn interior(&self, b: SubSet) -> SubSet {
        debug_assert_eq!(b.width(), self.n);
        self.opens
            .iter()
            .filter(|u| u.is_subset_of(b))
            .fold(SubSet::empty(self.n), SubSet::union)
    }

    /// C(B): the smallest closed superset of `b`, computed by duality as
    /// `X - I(X - B)`.
    pub fn closure(&self, b: SubSet) -> SubSet {
        self.interior(b.complement()).complement()
    }

    /// d(B): all cluster points of `b`, i.e. points whose every open
    /// neighborhood meets `b` minus the point itself.
    pub fn derived_set(&self, b: SubSet) -> SubSet {
        debug_assert_eq!(b.width(), self.n);
        let mut out = SubSet::empty(self.n);
        for x in 0..self.n {
            let punctured = b.remove(x);
            let cluster = self
                .opens
                .iter()
                .filter(|u| u.contains(x))
                .all(|u| !u.intersect(punctured).is_empty());
            if cluster {
                out = out.union(SubSet::singleton(x, self.n));
            }
        }
        out
    }

    pub fn is_open(&self, b: SubSet) -> bool {
        self.opens.contains(b)
    }

    pub fn is_closed(&self, b: SubSet) -> bool {
        self.opens.contains(b.complement())
    }

    /// The family of all closed sets, canonical order.
    pub fn closeds(&self) -> SetFamily {
        SetFamily::new(self.n, self.opens.iter().map(SubSet::complement))
    }

    /// Parse a subset from point labels.
    pub fn subset_from_labels<'a>(
        &self,
        labels: impl IntoIterator<Item = &'a str>,
    ) -> Result<SubSet, String> {
        let mut out = SubSet::empty(self.n);
        for l in labels {
            let p = self
                .point_by_label(l)
                .ok_or_else(|| format!("unknown point label {l:?}"))?;
            out = out.union(SubSet::singleton(p, self.n));
        }
        Ok(out)
    }

    /// Render a subset as its sorted label list.
    pub fn labels_of(&self, s: SubSet) -> Vec<String> {
        s.points().map(|p| self.labels[p].clone()).collect()
    }
}
