//! Coverings and the lower/upper approximation numbers.
//!
//! Where the approximation operators of [`crate::rough`] return sets, the
//! approximation numbers return block counts: the lower number of `X`
//! counts the blocks contained in `X`, the upper number counts the blocks
//! meeting `X`. They are defined over coverings, of which partitions are a
//! special case.

use std::fmt;

use crate::ground::{Subset, Universe};
use crate::rough::Partition;
use crate::{Error, Result};

/// Distinct nonempty blocks whose union is the universe; overlap allowed.
///
/// The constructor collapses duplicate blocks — counting a block twice
/// would silently skew every number — and records whether it did.
#[derive(Clone, PartialEq, Eq)]
pub struct Covering {
    universe: Universe,
    blocks: Vec<Subset>,
    deduplicated: bool,
}

impl Covering {
    pub fn new(universe: &Universe, blocks: Vec<Subset>) -> Result<Self> {
        let mut covered = universe.empty_set();
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
            covered = covered.union(block)?;
        }
        if let Some(element) = covered.complement().iter().next() {
            return Err(Error::UncoveredElement { element });
        }
        let mut blocks = blocks;
        blocks.sort();
        let before = blocks.len();
        blocks.dedup();
        let deduplicated = blocks.len() != before;
        Ok(Covering {
            universe: universe.clone(),
            blocks,
            deduplicated,
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
        Covering::new(universe, blocks)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Blocks in canonical order, duplicates already collapsed.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Whether the constructor had to drop duplicate blocks.
    pub fn deduplicated(&self) -> bool {
        self.deduplicated
    }

    /// Number of blocks entirely contained in `x`.
    pub fn lower_number(&self, x: &Subset) -> Result<usize> {
        self.check_universe(x)?;
        Ok(self.blocks.iter().filter(|k| k.is_subset_raw(x)).count())
    }

    /// Number of blocks meeting `x`.
    pub fn upper_number(&self, x: &Subset) -> Result<usize> {
        self.check_universe(x)?;
        Ok(self.blocks.iter().filter(|k| k.intersects_raw(x)).count())
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

impl From<&Partition> for Covering {
    fn from(partition: &Partition) -> Self {
        Covering::new(partition.universe(), partition.blocks().to_vec())
            .expect("partition blocks form a covering")
    }
}

impl From<Partition> for Covering {
    fn from(partition: Partition) -> Self {
        Covering::from(&partition)
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.blocks).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{self, DetRng};

    #[test]
    fn lower_number_examples() {
        let u = Universe::new(3);
        let c = Covering::from_index_blocks(&u, [vec![0, 1], vec![1, 2], vec![2]]).unwrap();
        assert_eq!(c.lower_number(&u.subset([1, 2]).unwrap()).unwrap(), 2);
        assert_eq!(c.lower_number(&u.empty_set()).unwrap(), 0);
        assert_eq!(c.lower_number(&u.full_set()).unwrap(), c.block_count());
    }

    #[test]
    fn upper_number_examples() {
        let u = Universe::new(3);
        let c = Covering::from_index_blocks(&u, [vec![0, 1], vec![1, 2], vec![2]]).unwrap();
        assert_eq!(c.upper_number(&u.singleton(1)).unwrap(), 2);
        assert_eq!(c.upper_number(&u.empty_set()).unwrap(), 0);
        assert_eq!(c.upper_number(&u.full_set()).unwrap(), c.block_count());
    }

    #[test]
    fn duplicates_collapse_and_are_reported() {
        let u = Universe::new(2);
        let c = Covering::from_index_blocks(&u, [vec![0, 1], vec![0, 1], vec![0]]).unwrap();
        assert!(c.deduplicated());
        assert_eq!(c.block_count(), 2);
        let c = Covering::from_index_blocks(&u, [vec![0, 1], vec![0]]).unwrap();
        assert!(!c.deduplicated());
    }

    #[test]
    fn validation_witnesses() {
        let u = Universe::new(3);
        let err = Covering::from_index_blocks(&u, [vec![0, 1], vec![]]).unwrap_err();
        assert!(matches!(err, Error::EmptyBlock { position: 1 }));
        let err = Covering::from_index_blocks(&u, [vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::UncoveredElement { element: 2 }));
    }

    #[test]
    fn partition_converts_losslessly() {
        let u = Universe::new(4);
        let p = Partition::from_index_blocks(&u, [vec![0, 1], vec![2, 3]]).unwrap();
        let c = Covering::from(&p);
        assert_eq!(c.block_count(), p.block_count());
        assert!(!c.deduplicated());
        for x in enumerate::subsets(&u).unwrap() {
            let meeting = p
                .blocks()
                .iter()
                .filter(|b| !b.intersection(&x).unwrap().is_empty());
            assert_eq!(c.upper_number(&x).unwrap(), meeting.count());
        }
    }

    #[test]
    fn number_properties_randomized() {
        let mut rng = DetRng::new(0xA55);
        for n in 1..=8usize {
            let u = Universe::new(n);
            for _ in 0..25 {
                let c = enumerate::random_covering(&u, &mut rng);
                let size = c.block_count();
                for _ in 0..40 {
                    let x = enumerate::random_subset(&u, &mut rng);
                    let y = enumerate::random_subset(&u, &mut rng);
                    let fx = c.lower_number(&x).unwrap();
                    let fy = c.lower_number(&y).unwrap();
                    if x.is_subset_of(&y).unwrap() {
                        assert!(fx <= fy);
                    }
                    let f_union = c.lower_number(&x.union(&y).unwrap()).unwrap();
                    let f_inter = c.lower_number(&x.intersection(&y).unwrap()).unwrap();
                    assert!(fx + fy <= f_union + f_inter);
                    assert!(fx <= c.upper_number(&x).unwrap());
                    assert_eq!(fx + c.upper_number(&x.complement()).unwrap(), size);
                }
            }
        }
    }

    #[test]
    fn empty_universe_covering() {
        let u = Universe::new(0);
        let c = Covering::new(&u, Vec::new()).unwrap();
        assert_eq!(c.block_count(), 0);
        assert_eq!(c.lower_number(&u.empty_set()).unwrap(), 0);
        assert_eq!(c.upper_number(&u.empty_set()).unwrap(), 0);
    }
}
