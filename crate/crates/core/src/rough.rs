//! Partitions, equivalence relations, and the classical approximation
//! operators.
//!
//! A [`Partition`] and an [`EquivalenceRelation`] over the same universe
//! determine each other; both directions are provided and round-trip. The
//! lower approximation of a set is the union of blocks contained in it,
//! the upper approximation the union of blocks meeting it.

use std::collections::BTreeSet;
use std::fmt;

use crate::ground::{Subset, Universe};
use crate::{Error, Result};

/// Pairwise-disjoint nonempty blocks covering the universe.
///
/// Blocks are normalized to ascending order of their minimum element, so
/// two partitions with the same blocks compare equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Subset>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(universe: &Universe, blocks: Vec<Subset>) -> Result<Self> {
        let n = universe.size();
        let mut block_of = vec![usize::MAX; n];
        for (position, block) in blocks.iter().enumerate() {
            if !block.universe().same_as(universe) {
                return Err(Error::UniverseMismatch {
                    left: universe.clone(),
                    right: block.universe().clone(),
                });
            }
            if block.is_empty() {
                return Err(Error::EmptyBlock { position });
            }
            for element in block.iter() {
                if block_of[element] != usize::MAX {
                    return Err(Error::OverlappingBlocks { element });
                }
                block_of[element] = position;
            }
        }
        if let Some(element) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::UncoveredElement { element });
        }

        // Normalize: sort blocks by their minimum element, then rebuild the
        // element-to-block map.
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b.iter().next().expect("blocks are nonempty"));
        for (position, block) in blocks.iter().enumerate() {
            for element in block.iter() {
                block_of[element] = position;
            }
        }
        Ok(Partition {
            universe: universe.clone(),
            blocks,
            block_of,
        })
    }

    /// Convenience constructor from blocks given as index lists.
    pub fn from_index_blocks<I, J>(universe: &Universe, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let blocks = blocks
            .into_iter()
            .map(|b| universe.subset(b))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(universe, blocks)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `element`. Panics if out of range.
    pub fn block_index_of(&self, element: usize) -> usize {
        self.block_of[element]
    }

    /// The block containing `element`. Panics if out of range.
    pub fn block_of(&self, element: usize) -> &Subset {
        &self.blocks[self.block_of[element]]
    }

    /// The partition induced by an equivalence relation: its blocks are the
    /// equivalence classes.
    pub fn from_relation(relation: &EquivalenceRelation) -> Partition {
        relation.to_partition()
    }

    /// The equivalence relation whose classes are this partition's blocks.
    pub fn to_relation(&self) -> EquivalenceRelation {
        let mut pairs = BTreeSet::new();
        for block in &self.blocks {
            for x in block.iter() {
                for y in block.iter() {
                    pairs.insert((x, y));
                }
            }
        }
        EquivalenceRelation {
            universe: self.universe.clone(),
            pairs,
        }
    }

    /// Union of the blocks entirely contained in `x`.
    pub fn lower_approx(&self, x: &Subset) -> Result<Subset> {
        self.check_universe(x)?;
        let mut result = self.universe.empty_set();
        for block in &self.blocks {
            if block.is_subset_raw(x) {
                result = result.union(block)?;
            }
        }
        Ok(result)
    }

    /// Union of the blocks meeting `x`.
    pub fn upper_approx(&self, x: &Subset) -> Result<Subset> {
        self.check_universe(x)?;
        let mut result = self.universe.empty_set();
        for block in &self.blocks {
            if block.intersects_raw(x) {
                result = result.union(block)?;
            }
        }
        Ok(result)
    }

    pub(crate) fn check_universe(&self, x: &Subset) -> Result<()> {
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

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{block}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An equivalence relation stored as an explicit set of ordered pairs.
///
/// Construction validates reflexivity, symmetry and transitivity eagerly
/// and reports the first violated law with a concrete witness.
#[derive(Clone, PartialEq, Eq)]
pub struct EquivalenceRelation {
    universe: Universe,
    pairs: BTreeSet<(usize, usize)>,
}

impl EquivalenceRelation {
    pub fn new<I>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = universe.size();
        let mut set = BTreeSet::new();
        for (x, y) in pairs {
            for index in [x, y] {
                if index >= n {
                    return Err(Error::ElementOutOfRange { index, size: n });
                }
            }
            set.insert((x, y));
        }
        for element in 0..n {
            if !set.contains(&(element, element)) {
                return Err(Error::NotReflexive { element });
            }
        }
        for &(x, y) in &set {
            if !set.contains(&(y, x)) {
                return Err(Error::NotSymmetric { x, y });
            }
        }
        for &(x, y) in &set {
            for &(_, z) in set.range((y, 0)..=(y, usize::MAX)) {
                if !set.contains(&(x, z)) {
                    return Err(Error::NotTransitive { x, y, z });
                }
            }
        }
        Ok(EquivalenceRelation {
            universe: universe.clone(),
            pairs: set,
        })
    }

    /// The identity relation (every element related only to itself).
    pub fn identity(universe: &Universe) -> Self {
        EquivalenceRelation {
            universe: universe.clone(),
            pairs: (0..universe.size()).map(|x| (x, x)).collect(),
        }
    }

    pub fn from_partition(partition: &Partition) -> Self {
        partition.to_relation()
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn relates(&self, x: usize, y: usize) -> bool {
        self.pairs.contains(&(x, y))
    }

    /// The partition whose blocks are this relation's equivalence classes.
    pub fn to_partition(&self) -> Partition {
        let n = self.universe.size();
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let class: Vec<usize> = self
                .pairs
                .range((x, 0)..=(x, usize::MAX))
                .map(|&(_, y)| y)
                .collect();
            for &y in &class {
                seen[y] = true;
            }
            blocks.push(class);
        }
        Partition::from_index_blocks(&self.universe, blocks)
            .expect("equivalence classes form a partition")
    }
}

impl fmt::Debug for EquivalenceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EquivalenceRelation")
            .field("universe", &self.universe)
            .field("pairs", &self.pairs)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{self, DetRng};

    fn u3() -> Universe {
        Universe::new(3)
    }

    fn reflexive(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|x| (x, x)).collect()
    }

    #[test]
    fn relation_to_partition_examples() {
        let u = u3();
        let mut pairs = reflexive(3);
        pairs.extend([(0, 1), (1, 0)]);
        let r = EquivalenceRelation::new(&u, pairs).unwrap();
        let p = Partition::from_relation(&r);
        assert_eq!(
            p,
            Partition::from_index_blocks(&u, [vec![0, 1], vec![2]]).unwrap()
        );

        let identity = EquivalenceRelation::identity(&u);
        assert_eq!(
            identity.to_partition(),
            Partition::from_index_blocks(&u, [vec![0], vec![1], vec![2]]).unwrap()
        );

        let complete: Vec<(usize, usize)> =
            (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        let r = EquivalenceRelation::new(&u, complete).unwrap();
        assert_eq!(
            r.to_partition(),
            Partition::from_index_blocks(&u, [vec![0, 1, 2]]).unwrap()
        );
    }

    #[test]
    fn partition_to_relation_examples() {
        let u = u3();
        let p = Partition::from_index_blocks(&u, [vec![0, 1], vec![2]]).unwrap();
        let r = p.to_relation();
        let expected: BTreeSet<(usize, usize)> = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)]
            .into_iter()
            .collect();
        assert_eq!(r.pairs().collect::<BTreeSet<_>>(), expected);

        let u2 = Universe::new(2);
        let p = Partition::from_index_blocks(&u2, [vec![0], vec![1]]).unwrap();
        assert_eq!(p.to_relation(), EquivalenceRelation::identity(&u2));

        let p = Partition::from_index_blocks(&u3(), [vec![0, 1, 2]]).unwrap();
        assert_eq!(p.to_relation().pair_count(), 9);
    }

    #[test]
    fn relation_validation_witnesses() {
        let u = u3();
        let err = EquivalenceRelation::new(&u, [(0, 0), (1, 1)]).unwrap_err();
        assert!(matches!(err, Error::NotReflexive { element: 2 }));

        let mut pairs = reflexive(3);
        pairs.push((0, 1));
        let err = EquivalenceRelation::new(&u, pairs).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric { x: 0, y: 1 }));

        let mut pairs = reflexive(3);
        pairs.extend([(0, 1), (1, 0), (1, 2), (2, 1)]);
        let err = EquivalenceRelation::new(&u, pairs).unwrap_err();
        assert!(matches!(err, Error::NotTransitive { x: 0, y: 1, z: 2 }));

        let err = EquivalenceRelation::new(&u, [(0, 9)]).unwrap_err();
        assert!(matches!(err, Error::ElementOutOfRange { index: 9, .. }));
    }

    #[test]
    fn partition_validation_witnesses() {
        let u = u3();
        let err = Partition::from_index_blocks(&u, [vec![0, 1], vec![]]).unwrap_err();
        assert!(matches!(err, Error::EmptyBlock { position: 1 }));

        let err = Partition::from_index_blocks(&u, [vec![0, 1], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::OverlappingBlocks { element: 1 }));

        let err = Partition::from_index_blocks(&u, [vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::UncoveredElement { element: 2 }));
    }

    #[test]
    fn approximation_examples() {
        let u = u3();
        let p = Partition::from_index_blocks(&u, [vec![0, 1], vec![2]]).unwrap();
        let x01 = u.subset([0, 1]).unwrap();
        assert_eq!(p.lower_approx(&x01).unwrap(), x01);
        assert!(p.lower_approx(&u.singleton(0)).unwrap().is_empty());
        assert_eq!(p.upper_approx(&u.singleton(0)).unwrap(), x01);
        assert!(p.upper_approx(&u.empty_set()).unwrap().is_empty());

        let u4 = Universe::new(4);
        let q = Partition::from_index_blocks(&u4, [vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            q.lower_approx(&u4.subset([0, 1, 2]).unwrap()).unwrap(),
            u4.subset([0, 1]).unwrap()
        );
        assert_eq!(
            q.upper_approx(&u4.subset([0, 2]).unwrap()).unwrap(),
            u4.full_set()
        );
    }

    #[test]
    fn conversions_round_trip_exhaustively() {
        for n in 0..=5usize {
            let u = Universe::new(n);
            for p in enumerate::partitions(&u) {
                assert_eq!(Partition::from_relation(&p.to_relation()), p);
            }
        }
    }

    /// The operator laws on randomized partitions beyond the exhaustive
    /// range covered by the acceptance sweep.
    #[test]
    fn approximation_laws_randomized() {
        let mut rng = DetRng::new(0x0150);
        for n in 6..=10usize {
            let u = Universe::new(n);
            for _ in 0..30 {
                let p = enumerate::random_partition(&u, &mut rng);
                for _ in 0..40 {
                    let x = enumerate::random_subset(&u, &mut rng);
                    let y = enumerate::random_subset(&u, &mut rng);
                    let lo = p.lower_approx(&x).unwrap();
                    let hi = p.upper_approx(&x).unwrap();
                    assert!(lo.is_subset_of(&x).unwrap());
                    assert!(x.is_subset_of(&hi).unwrap());
                    assert_eq!(
                        p.lower_approx(&x.intersection(&y).unwrap()).unwrap(),
                        lo.intersection(&p.lower_approx(&y).unwrap()).unwrap()
                    );
                    assert_eq!(
                        p.upper_approx(&x.union(&y).unwrap()).unwrap(),
                        hi.union(&p.upper_approx(&y).unwrap()).unwrap()
                    );
                    assert_eq!(p.lower_approx(&x.complement()).unwrap(), hi.complement());
                    assert_eq!(p.upper_approx(&x.complement()).unwrap(), lo.complement());
                    assert_eq!(p.lower_approx(&lo.complement()).unwrap(), lo.complement());
                    assert_eq!(p.upper_approx(&hi.complement()).unwrap(), hi.complement());
                }
            }
        }
    }

    #[test]
    fn universe_mismatch_rejected() {
        let p = Partition::from_index_blocks(&u3(), [vec![0, 1, 2]]).unwrap();
        let other = Universe::new(4);
        assert!(matches!(
            p.lower_approx(&other.empty_set()).unwrap_err(),
            Error::UniverseMismatch { .. }
        ));
    }

    #[test]
    fn empty_universe_partition() {
        let u = Universe::new(0);
        let p = Partition::new(&u, Vec::new()).unwrap();
        assert_eq!(p.block_count(), 0);
        assert_eq!(p.lower_approx(&u.empty_set()).unwrap(), u.empty_set());
        assert_eq!(Partition::from_relation(&p.to_relation()), p);
    }
}
