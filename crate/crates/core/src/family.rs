//! Families of subsets and the standard combinators over them.
//!
//! A [`SetFamily`] is either an explicit, canonically sorted list of
//! distinct subsets or a pure membership predicate. The combinators
//! [`upp`](SetFamily::upp), [`low`](SetFamily::low) and
//! [`opp`](SetFamily::opp) stay lazy because their results are typically
//! exponentially larger than their input; [`max_elems`](SetFamily::max_elems)
//! and [`min_elems`](SetFamily::min_elems) materialize, guarded by the
//! brute-force universe bound.

use std::fmt;
use std::sync::Arc;

use crate::enumerate;
use crate::ground::{Subset, Universe};
use crate::{Error, Result};

/// Largest universe the enumeration-backed operations will sweep by
/// default: 16 elements, i.e. 65,536 subsets.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 16;

type Predicate = Arc<dyn Fn(&Subset) -> bool + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Explicit(Vec<Subset>),
    Predicate(Predicate),
}

/// A family of subsets of one universe.
#[derive(Clone)]
pub struct SetFamily {
    universe: Universe,
    repr: Repr,
}

impl SetFamily {
    /// Explicit family from a list of member sets. Members are sorted into
    /// canonical (ascending bit-pattern) order and duplicates collapse.
    pub fn explicit(universe: &Universe, members: Vec<Subset>) -> Result<Self> {
        let mut members = members;
        for m in &members {
            if !m.universe().same_as(universe) {
                return Err(Error::UniverseMismatch {
                    left: universe.clone(),
                    right: m.universe().clone(),
                });
            }
        }
        members.sort();
        members.dedup();
        Ok(SetFamily {
            universe: universe.clone(),
            repr: Repr::Explicit(members),
        })
    }

    /// The family with no member sets.
    pub fn empty(universe: &Universe) -> Self {
        SetFamily {
            universe: universe.clone(),
            repr: Repr::Explicit(Vec::new()),
        }
    }

    /// Lazy family defined by a membership predicate.
    ///
    /// The predicate must be a pure function of the queried subset; under
    /// that contract every combinator is thread-safe.
    pub fn from_predicate<F>(universe: &Universe, predicate: F) -> Self
    where
        F: Fn(&Subset) -> bool + Send + Sync + 'static,
    {
        SetFamily {
            universe: universe.clone(),
            repr: Repr::Predicate(Arc::new(predicate)),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.repr, Repr::Explicit(_))
    }

    /// Member sets of an explicit family, in canonical order.
    pub fn members(&self) -> Option<&[Subset]> {
        match &self.repr {
            Repr::Explicit(members) => Some(members),
            Repr::Predicate(_) => None,
        }
    }

    /// Number of members of an explicit family.
    pub fn len(&self) -> Option<usize> {
        self.members().map(<[Subset]>::len)
    }

    pub fn is_empty(&self) -> Option<bool> {
        self.members().map(<[Subset]>::is_empty)
    }

    /// Membership test. Errors when `x` lives over a different universe.
    pub fn contains(&self, x: &Subset) -> Result<bool> {
        if !x.universe().same_as(&self.universe) {
            return Err(Error::UniverseMismatch {
                left: self.universe.clone(),
                right: x.universe().clone(),
            });
        }
        Ok(self.contains_unchecked(x))
    }

    fn contains_unchecked(&self, x: &Subset) -> bool {
        match &self.repr {
            Repr::Explicit(members) => members.binary_search(x).is_ok(),
            Repr::Predicate(p) => p(x),
        }
    }

    /// All sets that contain some member of the family. Lazy.
    pub fn upp(&self) -> SetFamily {
        let inner = self.clone();
        SetFamily::from_predicate(&self.universe, move |x| match &inner.repr {
            Repr::Explicit(members) => members.iter().any(|a| a.is_subset_raw(x)),
            Repr::Predicate(p) => x.subsets().any(|s| p(&s)),
        })
    }

    /// All sets contained in some member of the family. Lazy.
    pub fn low(&self) -> SetFamily {
        let inner = self.clone();
        SetFamily::from_predicate(&self.universe, move |x| match &inner.repr {
            Repr::Explicit(members) => members.iter().any(|a| x.is_subset_raw(a)),
            Repr::Predicate(p) => {
                // Supersets of x are x ∪ s for s ranging over subsets of x's
                // complement.
                x.complement()
                    .subsets()
                    .any(|s| p(&x.union(&s).expect("same universe")))
            }
        })
    }

    /// Complement family within the power set. Lazy.
    pub fn opp(&self) -> SetFamily {
        let inner = self.clone();
        SetFamily::from_predicate(&self.universe, move |x| !inner.contains_unchecked(x))
    }

    /// Inclusion-maximal members, as an explicit family.
    pub fn max_elems(&self) -> Result<SetFamily> {
        let explicit = self.materialize()?;
        let members = explicit.members().expect("materialized family");
        let maximal: Vec<Subset> = members
            .iter()
            .filter(|a| !members.iter().any(|b| *a != b && a.is_subset_raw(b)))
            .cloned()
            .collect();
        SetFamily::explicit(&self.universe, maximal)
    }

    /// Inclusion-minimal members, as an explicit family.
    pub fn min_elems(&self) -> Result<SetFamily> {
        let explicit = self.materialize()?;
        let members = explicit.members().expect("materialized family");
        let minimal: Vec<Subset> = members
            .iter()
            .filter(|a| !members.iter().any(|b| *a != b && b.is_subset_raw(a)))
            .cloned()
            .collect();
        SetFamily::explicit(&self.universe, minimal)
    }

    /// Explicit form of this family, enumerating the power set when the
    /// family is predicate-backed. Enforces [`DEFAULT_BRUTE_FORCE_BOUND`].
    pub fn materialize(&self) -> Result<SetFamily> {
        self.materialize_bounded(DEFAULT_BRUTE_FORCE_BOUND)
    }

    /// Like [`materialize`](Self::materialize) with a caller-chosen bound.
    pub fn materialize_bounded(&self, bound: usize) -> Result<SetFamily> {
        match &self.repr {
            Repr::Explicit(_) => Ok(self.clone()),
            Repr::Predicate(p) => {
                let size = self.universe.size();
                if size > bound {
                    return Err(Error::CapacityExceeded { size, bound });
                }
                let members: Vec<Subset> = enumerate::subsets(&self.universe)?
                    .filter(|x| p(x))
                    .collect();
                // Enumeration is already in canonical order with no
                // duplicates.
                Ok(SetFamily {
                    universe: self.universe.clone(),
                    repr: Repr::Explicit(members),
                })
            }
        }
    }

    /// Whether two families over the same universe answer membership
    /// identically, decided by materializing both.
    pub fn same_membership(&self, other: &SetFamily) -> Result<bool> {
        if !self.universe.same_as(&other.universe) {
            return Err(Error::UniverseMismatch {
                left: self.universe.clone(),
                right: other.universe.clone(),
            });
        }
        let a = self.materialize()?;
        let b = other.materialize()?;
        Ok(a.members() == b.members())
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Explicit(members) => f.debug_set().entries(members).finish(),
            Repr::Predicate(_) => write!(f, "<predicate family over {}>", self.universe),
        }
    }
}
