//! Generic matroid machinery, kept deliberately brute-force.
//!
//! This module is the trusted oracle for the counting formulas in
//! [`crate::pcm`]: every derivation here works by direct enumeration
//! against the defining property, with no shortcuts. Axiom checkers for
//! independence (I1–I3), base (B1–B2) and circuit (C1–C3) families report
//! the lexicographically first violating witness, and the witness can be
//! replayed against the law it breaks.

use std::fmt;

use crate::enumerate;
use crate::family::{SetFamily, DEFAULT_BRUTE_FORCE_BOUND};
use crate::ground::{Subset, Universe};
use crate::{Error, Result};

/// Tags for the matroid axioms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Law {
    I1,
    I2,
    I3,
    B1,
    B2,
    C1,
    C2,
    C3,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::I1 => "I1",
            Law::I2 => "I2",
            Law::I3 => "I3",
            Law::B1 => "B1",
            Law::B2 => "B2",
            Law::C1 => "C1",
            Law::C2 => "C2",
            Law::C3 => "C3",
        })
    }
}

/// A concrete counterexample to one axiom.
///
/// `sets` and `element` follow a per-law convention (see [`Law`] and the
/// checker that produced the violation); [`Violation::replay`] re-evaluates
/// the broken law on the witness.
#[derive(Clone, Debug)]
pub struct Violation {
    pub law: Law,
    pub sets: Vec<Subset>,
    pub element: Option<usize>,
}

impl Violation {
    /// Re-check that this witness really demonstrates a violation of its
    /// law in `family`. Used to audit checker output.
    pub fn replay(&self, family: &SetFamily) -> Result<bool> {
        let universe = family.universe().clone();
        let empty = universe.empty_set();
        match self.law {
            Law::I1 => Ok(!family.contains(&empty)?),
            Law::I2 => {
                let [member, sub] = two(&self.sets)?;
                Ok(family.contains(member)?
                    && sub.is_subset_of(member)?
                    && !family.contains(sub)?)
            }
            Law::I3 => {
                let [small, large] = two(&self.sets)?;
                if !(family.contains(small)? && family.contains(large)?)
                    || small.cardinality() >= large.cardinality()
                {
                    return Ok(false);
                }
                for u in large.difference(small)?.iter() {
                    if family.contains(&small.with_element(u))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Law::B1 => {
                let explicit = family.materialize()?;
                Ok(explicit.members().expect("materialized").is_empty())
            }
            Law::B2 => {
                let [b1, b2] = two(&self.sets)?;
                let x = self
                    .element
                    .ok_or(Error::MissingField { field: "element" })?;
                if !(family.contains(b1)? && family.contains(b2)?)
                    || !b1.contains(x)
                    || b2.contains(x)
                {
                    return Ok(false);
                }
                let swapped_base = b1.without_element(x);
                for y in b2.difference(b1)?.iter() {
                    if family.contains(&swapped_base.with_element(y))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Law::C1 => family.contains(&empty),
            Law::C2 => {
                let [container, contained] = two(&self.sets)?;
                Ok(family.contains(container)?
                    && family.contains(contained)?
                    && contained != container
                    && contained.is_subset_of(container)?)
            }
            Law::C3 => {
                let [c1, c2] = two(&self.sets)?;
                let u = self
                    .element
                    .ok_or(Error::MissingField { field: "element" })?;
                if !(family.contains(c1)? && family.contains(c2)?)
                    || c1 == c2
                    || !(c1.contains(u) && c2.contains(u))
                {
                    return Ok(false);
                }
                let room = c1.union(c2)?.without_element(u);
                let explicit = family.materialize()?;
                for member in explicit.members().expect("materialized") {
                    if member.is_subset_raw(&room) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

fn two(sets: &[Subset]) -> Result<[&Subset; 2]> {
    match sets {
        [a, b] => Ok([a, b]),
        _ => Err(Error::MissingField {
            field: "witness sets",
        }),
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.law {
            Law::I1 => write!(f, "(I1) the empty set is not a member"),
            Law::I2 => write!(
                f,
                "(I2) {} is a member but its subset {} is not",
                self.sets[0], self.sets[1]
            ),
            Law::I3 => write!(
                f,
                "(I3) I1 = {} and I2 = {}: no element of I2 − I1 extends I1 inside the family",
                self.sets[0], self.sets[1]
            ),
            Law::B1 => write!(f, "(B1) the family has no members"),
            Law::B2 => write!(
                f,
                "(B2) B1 = {}, B2 = {}, x = {}: no y in B2 − B1 makes (B1 − {{x}}) ∪ {{y}} a member",
                self.sets[0],
                self.sets[1],
                self.element.unwrap_or_default()
            ),
            Law::C1 => write!(f, "(C1) the empty set is a member"),
            Law::C2 => write!(
                f,
                "(C2) member {} is a proper subset of member {}",
                self.sets[1], self.sets[0]
            ),
            Law::C3 => write!(
                f,
                "(C3) C1 = {}, C2 = {}, u = {}: no member lies inside C1 ∪ C2 − {{u}}",
                self.sets[0],
                self.sets[1],
                self.element.unwrap_or_default()
            ),
        }
    }
}

/// Outcome of an axiom check: either all laws hold or the first violated
/// law together with its witness.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    violation: Option<Violation>,
}

impl AxiomReport {
    fn ok() -> Self {
        AxiomReport { violation: None }
    }

    fn violated(violation: Violation) -> Self {
        AxiomReport {
            violation: Some(violation),
        }
    }

    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violation.as_ref()
    }
}

fn checker_input(family: &SetFamily) -> Result<Vec<Subset>> {
    let size = family.universe().size();
    if size > DEFAULT_BRUTE_FORCE_BOUND {
        return Err(Error::CapacityExceeded {
            size,
            bound: DEFAULT_BRUTE_FORCE_BOUND,
        });
    }
    let explicit = family.materialize()?;
    Ok(explicit.members().expect("materialized").to_vec())
}

fn member_of(members: &[Subset], x: &Subset) -> bool {
    members.binary_search(x).is_ok()
}

/// Check (I1) the empty set is a member, (I2) downward closure, and (I3)
/// augmentation.
pub fn check_independence_axioms(family: &SetFamily) -> Result<AxiomReport> {
    let members = checker_input(family)?;
    let empty = family.universe().empty_set();
    if !member_of(&members, &empty) {
        return Ok(AxiomReport::violated(Violation {
            law: Law::I1,
            sets: Vec::new(),
            element: None,
        }));
    }
    for member in &members {
        for sub in member.subsets() {
            if !member_of(&members, &sub) {
                return Ok(AxiomReport::violated(Violation {
                    law: Law::I2,
                    sets: vec![member.clone(), sub],
                    element: None,
                }));
            }
        }
    }
    for small in &members {
        for large in &members {
            if small.cardinality() >= large.cardinality() {
                continue;
            }
            let augmentable = large
                .difference(small)?
                .iter()
                .any(|u| member_of(&members, &small.with_element(u)));
            if !augmentable {
                return Ok(AxiomReport::violated(Violation {
                    law: Law::I3,
                    sets: vec![small.clone(), large.clone()],
                    element: None,
                }));
            }
        }
    }
    Ok(AxiomReport::ok())
}

/// Check (B1) at least one member, and (B2) the exchange property.
pub fn check_base_axioms(family: &SetFamily) -> Result<AxiomReport> {
    let members = checker_input(family)?;
    if members.is_empty() {
        return Ok(AxiomReport::violated(Violation {
            law: Law::B1,
            sets: Vec::new(),
            element: None,
        }));
    }
    for b1 in &members {
        for b2 in &members {
            for x in b1.difference(b2)?.iter() {
                let swapped_base = b1.without_element(x);
                let exchangeable = b2
                    .difference(b1)?
                    .iter()
                    .any(|y| member_of(&members, &swapped_base.with_element(y)));
                if !exchangeable {
                    return Ok(AxiomReport::violated(Violation {
                        law: Law::B2,
                        sets: vec![b1.clone(), b2.clone()],
                        element: Some(x),
                    }));
                }
            }
        }
    }
    Ok(AxiomReport::ok())
}

/// Check (C1) the empty set is no member, (C2) members form an antichain,
/// and (C3) circuit elimination.
pub fn check_circuit_axioms(family: &SetFamily) -> Result<AxiomReport> {
    let members = checker_input(family)?;
    let empty = family.universe().empty_set();
    if member_of(&members, &empty) {
        return Ok(AxiomReport::violated(Violation {
            law: Law::C1,
            sets: Vec::new(),
            element: None,
        }));
    }
    for container in &members {
        for contained in &members {
            if contained != container && contained.is_subset_raw(container) {
                return Ok(AxiomReport::violated(Violation {
                    law: Law::C2,
                    sets: vec![container.clone(), contained.clone()],
                    element: None,
                }));
            }
        }
    }
    for c1 in &members {
        for c2 in &members {
            if c1 == c2 {
                continue;
            }
            for u in c1.intersection(c2)?.iter() {
                let room = c1.union(c2)?.without_element(u);
                let eliminable = members.iter().any(|c3| c3.is_subset_raw(&room));
                if !eliminable {
                    return Ok(AxiomReport::violated(Violation {
                        law: Law::C3,
                        sets: vec![c1.clone(), c2.clone()],
                        element: Some(u),
                    }));
                }
            }
        }
    }
    Ok(AxiomReport::ok())
}

/// A matroid given by its universe and explicit independent sets.
///
/// Equality is extensional over the independent family.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    universe: Universe,
    independents: Vec<Subset>,
}

impl Matroid {
    /// Build from an independence family, validating I1–I3.
    pub fn from_independents(family: &SetFamily) -> Result<Matroid> {
        let report = check_independence_axioms(family)?;
        if let Some(violation) = report.violation() {
            return Err(Error::AxiomsViolated(violation.clone()));
        }
        let explicit = family.materialize()?;
        Ok(Matroid {
            universe: family.universe().clone(),
            independents: explicit.members().expect("materialized").to_vec(),
        })
    }

    /// Build from a circuit family, validating C1–C3. The independent sets
    /// are exactly the subsets containing no circuit.
    pub fn from_circuits(family: &SetFamily) -> Result<Matroid> {
        let report = check_circuit_axioms(family)?;
        if let Some(violation) = report.violation() {
            return Err(Error::AxiomsViolated(violation.clone()));
        }
        Matroid::from_circuits_unchecked(family)
    }

    /// [`Matroid::from_circuits`] without the axiom check. Exists so fuzz
    /// tests can feed known-invalid families; everything else should use
    /// the checked constructor.
    pub fn from_circuits_unchecked(family: &SetFamily) -> Result<Matroid> {
        let circuits = checker_input(family)?;
        let universe = family.universe().clone();
        let independents = enumerate::subsets(&universe)?
            .filter(|x| !circuits.iter().any(|c| c.is_subset_raw(x)))
            .collect();
        Ok(Matroid {
            universe,
            independents,
        })
    }

    /// Build from an independence predicate by enumerating the power set,
    /// then validating the axioms.
    pub fn from_predicate<F>(universe: &Universe, is_independent: F) -> Result<Matroid>
    where
        F: Fn(&Subset) -> bool + Send + Sync + 'static,
    {
        let family = SetFamily::from_predicate(universe, is_independent);
        Matroid::from_independents(&family)
    }

    /// The free matroid: every subset independent.
    pub fn free(universe: &Universe) -> Result<Matroid> {
        Matroid::from_circuits(&SetFamily::empty(universe))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Independent sets in canonical order.
    pub fn independents(&self) -> &[Subset] {
        &self.independents
    }

    pub fn independent_family(&self) -> SetFamily {
        SetFamily::explicit(&self.universe, self.independents.clone())
            .expect("independents share the universe")
    }

    pub fn is_independent(&self, x: &Subset) -> Result<bool> {
        self.check_universe(x)?;
        Ok(self.independents.binary_search(x).is_ok())
    }

    /// Size of the largest independent subset of `x`, by scanning every
    /// independent set.
    pub fn rank(&self, x: &Subset) -> Result<usize> {
        self.check_universe(x)?;
        Ok(self
            .independents
            .iter()
            .filter(|i| i.is_subset_raw(x))
            .map(Subset::cardinality)
            .max()
            .unwrap_or(0))
    }

    pub fn rank_of_universe(&self) -> usize {
        self.independents
            .iter()
            .map(Subset::cardinality)
            .max()
            .unwrap_or(0)
    }

    /// Maximal independent sets.
    pub fn bases(&self) -> SetFamily {
        self.independent_family()
            .max_elems()
            .expect("explicit family")
    }

    /// Minimal dependent sets, found by enumerating the dependent part of
    /// the power set.
    pub fn circuits(&self) -> Result<SetFamily> {
        let size = self.universe.size();
        if size > DEFAULT_BRUTE_FORCE_BOUND {
            return Err(Error::CapacityExceeded {
                size,
                bound: DEFAULT_BRUTE_FORCE_BOUND,
            });
        }
        let dependents: Vec<Subset> = enumerate::subsets(&self.universe)?
            .filter(|x| self.independents.binary_search(x).is_err())
            .collect();
        let minimal: Vec<Subset> = dependents
            .iter()
            .filter(|d| !dependents.iter().any(|e| *d != e && e.is_subset_raw(d)))
            .cloned()
            .collect();
        SetFamily::explicit(&self.universe, minimal)
    }

    /// All elements whose addition leaves the rank of `x` unchanged.
    pub fn closure(&self, x: &Subset) -> Result<Subset> {
        self.check_universe(x)?;
        let base_rank = self.rank(x)?;
        let mut members = Vec::new();
        for u in 0..self.universe.size() {
            if x.contains(u) || self.rank(&x.with_element(u))? == base_rank {
                members.push(u);
            }
        }
        self.universe.subset(members)
    }

    pub fn is_closed(&self, x: &Subset) -> Result<bool> {
        Ok(self.closure(x)? == *x)
    }

    /// The dual matroid: its bases are the complements of this matroid's
    /// bases, and a set is independent in it when it avoids some base.
    pub fn dual(&self) -> Result<Matroid> {
        let size = self.universe.size();
        if size > DEFAULT_BRUTE_FORCE_BOUND {
            return Err(Error::CapacityExceeded {
                size,
                bound: DEFAULT_BRUTE_FORCE_BOUND,
            });
        }
        let bases = self.bases();
        let cobases: Vec<Subset> = bases
            .members()
            .expect("explicit family")
            .iter()
            .map(Subset::complement)
            .collect();
        let independents = enumerate::subsets(&self.universe)?
            .filter(|x| cobases.iter().any(|cb| x.is_subset_raw(cb)))
            .collect();
        Ok(Matroid {
            universe: self.universe.clone(),
            independents,
        })
    }

    fn check_universe(&self, x: &Subset) -> Result<()> {
        if x.universe().same_as(&self.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.universe.clone(),
                right: x.universe().clone(),
            })
        }
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("universe", &self.universe)
            .field("independents", &self.independents)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{self, DetRng};

    fn family(u: &Universe, sets: &[&[usize]]) -> SetFamily {
        let members = sets
            .iter()
            .map(|s| u.subset(s.iter().copied()).unwrap())
            .collect();
        SetFamily::explicit(u, members).unwrap()
    }

    #[test]
    fn independence_axiom_examples() {
        let u2 = Universe::new(2);
        let good = family(&u2, &[&[], &[0], &[1]]);
        assert!(check_independence_axioms(&good).unwrap().holds());

        let missing_empty = family(&u2, &[&[0]]);
        let report = check_independence_axioms(&missing_empty).unwrap();
        let violation = report.violation().unwrap();
        assert_eq!(violation.law, Law::I1);
        assert!(violation.replay(&missing_empty).unwrap());

        let u3 = Universe::new(3);
        let no_augment = family(&u3, &[&[], &[0], &[1], &[0, 1], &[2]]);
        let report = check_independence_axioms(&no_augment).unwrap();
        let violation = report.violation().unwrap();
        assert_eq!(violation.law, Law::I3);
        assert_eq!(violation.sets[0], u3.singleton(2));
        assert_eq!(violation.sets[1], u3.subset([0, 1]).unwrap());
        assert!(violation.replay(&no_augment).unwrap());
    }

    #[test]
    fn downward_closure_witness() {
        let u = Universe::new(2);
        let gap = family(&u, &[&[], &[0, 1]]);
        let report = check_independence_axioms(&gap).unwrap();
        let violation = report.violation().unwrap();
        assert_eq!(violation.law, Law::I2);
        assert_eq!(violation.sets[0], u.full_set());
        assert_eq!(violation.sets[1], u.singleton(0));
        assert!(violation.replay(&gap).unwrap());
    }

    #[test]
    fn base_axiom_examples() {
        let u2 = Universe::new(2);
        assert!(check_base_axioms(&family(&u2, &[&[0], &[1]]))
            .unwrap()
            .holds());

        let report = check_base_axioms(&SetFamily::empty(&u2)).unwrap();
        assert_eq!(report.violation().unwrap().law, Law::B1);

        let u3 = Universe::new(3);
        let uneven = family(&u3, &[&[0], &[1, 2]]);
        let report = check_base_axioms(&uneven).unwrap();
        let violation = report.violation().unwrap();
        assert_eq!(violation.law, Law::B2);
        assert!(violation.replay(&uneven).unwrap());
    }

    #[test]
    fn circuit_axiom_examples() {
        let u3 = Universe::new(3);
        let p = crate::rough::Partition::from_index_blocks(&u3, [vec![0, 1], vec![2]]).unwrap();
        let blocks = SetFamily::explicit(&u3, p.blocks().to_vec()).unwrap();
        assert!(check_circuit_axioms(&blocks).unwrap().holds());

        let with_empty = family(&u3, &[&[]]);
        let report = check_circuit_axioms(&with_empty).unwrap();
        let violation = report.violation().unwrap();
        assert_eq!(violation.law, Law::C1);
        assert!(violation.replay(&with_empty).unwrap());

        let nested = family(&u3, &[&[0], &[0, 1]]);
        let report = check_circuit_axioms(&nested).unwrap();
        assert_eq!(report.violation().unwrap().law, Law::C2);

        let no_elimination = family(&u3, &[&[0, 1], &[1, 2]]);
        let report = check_circuit_axioms(&no_elimination).unwrap();
        let violation = report.violation().unwrap();
        assert_eq!(violation.law, Law::C3);
        assert_eq!(violation.element, Some(1));
        assert!(violation.replay(&no_elimination).unwrap());
    }

    #[test]
    fn from_circuits_examples() {
        let u2 = Universe::new(2);
        let m = Matroid::from_circuits(&family(&u2, &[&[0, 1]])).unwrap();
        assert_eq!(
            m.independents(),
            &[u2.empty_set(), u2.singleton(0), u2.singleton(1)]
        );

        let free = Matroid::free(&u2).unwrap();
        assert_eq!(free.independents().len(), 4);

        let m = Matroid::from_circuits(&family(&u2, &[&[0]])).unwrap();
        assert_eq!(m.independents(), &[u2.empty_set(), u2.singleton(1)]);

        let err = Matroid::from_circuits(&family(&u2, &[&[]])).unwrap_err();
        assert!(matches!(err, Error::AxiomsViolated(v) if v.law == Law::C1));
    }

    #[test]
    fn rank_examples() {
        let u3 = Universe::new(3);
        let free = Matroid::free(&u3).unwrap();
        for x in enumerate::subsets(&u3).unwrap() {
            assert_eq!(free.rank(&x).unwrap(), x.cardinality());
        }

        let m = Matroid::from_circuits(&family(&u3, &[&[0, 1]])).unwrap();
        assert_eq!(m.rank(&u3.subset([0, 1]).unwrap()).unwrap(), 1);
        assert_eq!(m.rank(&u3.empty_set()).unwrap(), 0);

        // Independence is exactly "rank equals cardinality".
        for x in enumerate::subsets(&u3).unwrap() {
            assert_eq!(
                m.is_independent(&x).unwrap(),
                m.rank(&x).unwrap() == x.cardinality()
            );
        }
    }

    #[test]
    fn bases_and_circuits_examples() {
        let u2 = Universe::new(2);
        let m = Matroid::from_circuits(&family(&u2, &[&[0, 1]])).unwrap();
        assert_eq!(
            m.bases().members().unwrap(),
            &[u2.singleton(0), u2.singleton(1)]
        );
        assert_eq!(m.circuits().unwrap().members().unwrap(), &[u2.full_set()]);

        let free = Matroid::free(&u2).unwrap();
        assert_eq!(free.bases().members().unwrap(), &[u2.full_set()]);
        assert!(free.circuits().unwrap().members().unwrap().is_empty());

        let u1 = Universe::new(1);
        let trivial = Matroid::from_circuits(&family(&u1, &[&[0]])).unwrap();
        assert_eq!(trivial.bases().members().unwrap(), &[u1.empty_set()]);
        assert_eq!(
            trivial.circuits().unwrap().members().unwrap(),
            &[u1.full_set()]
        );
    }

    #[test]
    fn closure_examples() {
        let u2 = Universe::new(2);
        let free = Matroid::free(&u2).unwrap();
        assert_eq!(free.closure(&u2.singleton(0)).unwrap(), u2.singleton(0));

        let m = Matroid::from_circuits(&family(&u2, &[&[0, 1]])).unwrap();
        assert_eq!(m.closure(&u2.singleton(0)).unwrap(), u2.full_set());
        assert_eq!(m.closure(&u2.full_set()).unwrap(), u2.full_set());
        assert!(m.is_closed(&u2.full_set()).unwrap());
        assert!(!m.is_closed(&u2.singleton(0)).unwrap());
    }

    #[test]
    fn dual_examples() {
        let u2 = Universe::new(2);
        let free = Matroid::free(&u2).unwrap();
        let dual = free.dual().unwrap();
        assert_eq!(dual.bases().members().unwrap(), &[u2.empty_set()]);

        let m = Matroid::from_circuits(&family(&u2, &[&[0, 1]])).unwrap();
        let dual = m.dual().unwrap();
        assert_eq!(
            dual.bases().members().unwrap(),
            &[u2.singleton(0), u2.singleton(1)]
        );

        let u3 = Universe::new(3);
        let m = Matroid::from_circuits(&family(&u3, &[&[0, 1]])).unwrap();
        let dual = m.dual().unwrap();
        assert_eq!(
            dual.bases().members().unwrap(),
            &[u3.singleton(0), u3.singleton(1)]
        );
    }

    #[test]
    fn capacity_guard() {
        let big = Universe::new(20);
        let fam = SetFamily::empty(&big);
        assert!(matches!(
            check_circuit_axioms(&fam).unwrap_err(),
            Error::CapacityExceeded { .. }
        ));
        assert!(matches!(
            Matroid::from_circuits(&fam).unwrap_err(),
            Error::CapacityExceeded { .. }
        ));
    }

    #[test]
    fn circuits_round_trip_exhaustively_small() {
        // Every valid circuit family over at most 4 elements reproduces
        // itself through the induced matroid.
        for n in 0..=4usize {
            let u = Universe::new(n);
            enumerate::for_each_antichain(&u, |chosen| {
                let fam = SetFamily::explicit(&u, chosen.to_vec()).unwrap();
                if !check_circuit_axioms(&fam).unwrap().holds() {
                    return;
                }
                let m = Matroid::from_circuits_unchecked(&fam).unwrap();
                assert!(check_independence_axioms(&m.independent_family())
                    .unwrap()
                    .holds());
                let back = m.circuits().unwrap();
                assert_eq!(back.members(), fam.members());
            })
            .unwrap();
        }
    }

    fn random_valid_matroid(u: &Universe, rng: &mut DetRng) -> Matroid {
        let n = u.size();
        match rng.below(3) {
            0 => {
                // Uniform matroid: independent iff |X| ≤ k.
                let k = rng.below(n as u64 + 1) as usize;
                let family = SetFamily::from_predicate(u, move |x| x.cardinality() <= k);
                Matroid::from_independents(&family).unwrap()
            }
            1 => Matroid::free(u).unwrap(),
            _ => {
                let p = enumerate::random_partition(u, rng);
                let blocks = SetFamily::explicit(u, p.blocks().to_vec()).unwrap();
                Matroid::from_circuits(&blocks).unwrap()
            }
        }
    }

    #[test]
    fn rank_laws_on_random_matroids() {
        let mut rng = DetRng::new(0xD1CE);
        for n in 0..=6usize {
            let u = Universe::new(n);
            for _ in 0..6 {
                let m = random_valid_matroid(&u, &mut rng);
                let all: Vec<Subset> = enumerate::subsets(&u).unwrap().collect();
                let rank: Vec<usize> = all.iter().map(|x| m.rank(x).unwrap()).collect();
                let closure: Vec<Subset> = all.iter().map(|x| m.closure(x).unwrap()).collect();
                for (xm, x) in all.iter().enumerate() {
                    for e in 0..n {
                        let grown = rank[xm | (1 << e)];
                        assert!(rank[xm] <= grown && grown <= rank[xm] + 1);
                    }
                    for ym in 0..all.len() {
                        assert!(
                            rank[xm | ym] + rank[xm & ym] <= rank[xm] + rank[ym],
                            "submodularity failed for {x} and {}",
                            all[ym]
                        );
                        if xm & ym == xm {
                            assert!(
                                closure[xm].is_subset_of(&closure[ym]).unwrap(),
                                "closure not monotone for {x} and {}",
                                all[ym]
                            );
                        }
                    }
                    let cl = &closure[xm];
                    assert!(x.is_subset_of(cl).unwrap());
                    assert_eq!(&m.closure(cl).unwrap(), cl);
                    assert!(m.is_closed(cl).unwrap());
                }
                let bases = m.bases();
                let sizes: Vec<usize> = bases
                    .members()
                    .unwrap()
                    .iter()
                    .map(Subset::cardinality)
                    .collect();
                assert!(sizes.iter().all(|&s| s == m.rank_of_universe()));
                let dual_dual = m.dual().unwrap().dual().unwrap();
                assert_eq!(dual_dual, m);
            }
        }
    }
}
