//! Matroids induced by partitions, computed by per-block counting.
//!
//! A partition's blocks form a valid circuit family, so every partition
//! induces a matroid: [`PartitionCircuitMatroid`]. Its independence test,
//! rank, closure, circuits and dual all reduce to block intersection
//! counts, which is the whole point — none of the operations here ever
//! enumerates subsets. [`PartitionMatroid`] is the general capacity form
//! (at most `k_i` elements per block), closed under duality by
//! complementing the capacities.
//!
//! The [`crate::matroid`] oracle exists to prove these formulas: the
//! verification sweeps compare every operation here against enumeration.

use std::fmt;

use crate::family::SetFamily;
use crate::ground::{Subset, Universe};
use crate::rough::Partition;
use crate::{Error, Result};

/// The matroid whose circuit family is exactly the blocks of a partition.
///
/// Equivalently the partition matroid with capacities `|P_i| − 1`: a set
/// is independent precisely when it contains no whole block. Blocks of
/// size one make their element a loop (independent in no set).
#[derive(Clone, PartialEq, Eq)]
pub struct PartitionCircuitMatroid {
    partition: Partition,
}

impl PartitionCircuitMatroid {
    pub fn from_partition(partition: Partition) -> Self {
        PartitionCircuitMatroid { partition }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn universe(&self) -> &Universe {
        self.partition.universe()
    }

    /// The circuit family: the partition's blocks.
    pub fn circuits(&self) -> SetFamily {
        SetFamily::explicit(self.universe(), self.partition.blocks().to_vec())
            .expect("blocks share the universe")
    }

    /// The same matroid described by capacities `|P_i| − 1`.
    pub fn as_partition_matroid(&self) -> PartitionMatroid {
        let capacities = self
            .partition
            .blocks()
            .iter()
            .map(|b| b.cardinality() - 1)
            .collect();
        PartitionMatroid::new(self.partition.clone(), capacities).expect("one capacity per block")
    }

    /// True when no block is entirely contained in `x`.
    pub fn is_independent(&self, x: &Subset) -> Result<bool> {
        self.partition.check_universe(x)?;
        let counts = self.block_counts(x);
        Ok(self
            .partition
            .blocks()
            .iter()
            .zip(&counts)
            .all(|(block, &count)| count < block.cardinality()))
    }

    /// Rank of `x`: its cardinality minus the number of blocks inside it.
    pub fn rank(&self, x: &Subset) -> Result<usize> {
        self.partition.check_universe(x)?;
        let counts = self.block_counts(x);
        let full_blocks = self.count_full_blocks(&counts);
        Ok(x.cardinality() - full_blocks)
    }

    /// Closure of `x`: `x` plus every outside element whose block misses
    /// exactly that element.
    pub fn closure(&self, x: &Subset) -> Result<Subset> {
        self.partition.check_universe(x)?;
        let counts = self.block_counts(x);
        let members = (0..self.universe().size()).filter(|&e| {
            x.contains(e) || {
                let b = self.partition.block_index_of(e);
                counts[b] + 1 == self.partition.blocks()[b].cardinality()
            }
        });
        self.universe().subset(members)
    }

    /// True when no element outside `x` would complete a block, i.e. the
    /// closure adds nothing.
    pub fn is_closed(&self, x: &Subset) -> Result<bool> {
        self.partition.check_universe(x)?;
        let counts = self.block_counts(x);
        Ok(self
            .partition
            .blocks()
            .iter()
            .zip(&counts)
            .all(|(block, &count)| count + 1 != block.cardinality()))
    }

    /// Independence in the dual matroid: `x` is a partial transversal,
    /// meeting every block at most once; equivalently the number of blocks
    /// it meets equals its cardinality.
    pub fn dual_is_independent(&self, x: &Subset) -> Result<bool> {
        self.partition.check_universe(x)?;
        Ok(self.block_counts(x).iter().all(|&count| count <= 1))
    }

    /// Dual rank of `x`: the number of blocks meeting `x`.
    pub fn dual_rank(&self, x: &Subset) -> Result<usize> {
        self.partition.check_universe(x)?;
        Ok(self
            .block_counts(x)
            .iter()
            .filter(|&&count| count > 0)
            .count())
    }

    /// Closure in the dual matroid: the union of all blocks meeting `x`.
    pub fn dual_closure(&self, x: &Subset) -> Result<Subset> {
        self.partition.check_universe(x)?;
        let counts = self.block_counts(x);
        let members =
            (0..self.universe().size()).filter(|&e| counts[self.partition.block_index_of(e)] > 0);
        self.universe().subset(members)
    }

    fn block_counts(&self, x: &Subset) -> Vec<usize> {
        let mut counts = vec![0usize; self.partition.block_count()];
        for e in x.iter() {
            counts[self.partition.block_index_of(e)] += 1;
        }
        counts
    }

    fn count_full_blocks(&self, counts: &[usize]) -> usize {
        self.partition
            .blocks()
            .iter()
            .zip(counts)
            .filter(|(block, &count)| count == block.cardinality())
            .count()
    }
}

impl fmt::Debug for PartitionCircuitMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartitionCircuitMatroid({:?})", self.partition)
    }
}

/// A matroid whose independent sets meet block `P_i` in at most `k_i`
/// elements.
///
/// Capacities above a block's size never constrain anything but would make
/// the dual capacities negative, so the constructor clamps each capacity
/// to its block size and records that it did.
#[derive(Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    partition: Partition,
    capacities: Vec<usize>,
    clamped: bool,
}

impl PartitionMatroid {
    pub fn new(partition: Partition, capacities: Vec<usize>) -> Result<Self> {
        if capacities.len() != partition.block_count() {
            return Err(Error::CapacityCountMismatch {
                expected: partition.block_count(),
                found: capacities.len(),
            });
        }
        let mut clamped = false;
        let capacities = partition
            .blocks()
            .iter()
            .zip(capacities)
            .map(|(block, k)| {
                let size = block.cardinality();
                if k > size {
                    clamped = true;
                    size
                } else {
                    k
                }
            })
            .collect();
        Ok(PartitionMatroid {
            partition,
            capacities,
            clamped,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn universe(&self) -> &Universe {
        self.partition.universe()
    }

    /// Per-block capacities, after clamping.
    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }

    /// Whether construction clamped any capacity down to its block size.
    pub fn clamped(&self) -> bool {
        self.clamped
    }

    pub fn is_independent(&self, x: &Subset) -> Result<bool> {
        self.partition.check_universe(x)?;
        let mut counts = vec![0usize; self.partition.block_count()];
        for e in x.iter() {
            let b = self.partition.block_index_of(e);
            counts[b] += 1;
            if counts[b] > self.capacities[b] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The dual matroid: same partition, capacities `|P_i| − k_i`.
    pub fn dual(&self) -> PartitionMatroid {
        let capacities = self
            .partition
            .blocks()
            .iter()
            .zip(&self.capacities)
            .map(|(block, &k)| block.cardinality() - k)
            .collect();
        PartitionMatroid {
            partition: self.partition.clone(),
            capacities,
            clamped: false,
        }
    }

    /// Greedy maximum-weight independent set: visit elements by descending
    /// weight (ties broken by ascending index) and keep each one whose
    /// block still has spare capacity. For nonnegative weights the result
    /// attains the maximum total weight over all independent sets.
    pub fn greedy_max_weight_independent(&self, weights: &[f64]) -> Result<Subset> {
        let n = self.universe().size();
        if weights.len() != n {
            return Err(Error::WeightCountMismatch {
                expected: n,
                found: weights.len(),
            });
        }
        if let Some(index) = weights.iter().position(|w| !w.is_finite()) {
            return Err(Error::NonFiniteWeight { index });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            weights[b]
                .partial_cmp(&weights[a])
                .expect("weights are finite")
                .then(a.cmp(&b))
        });
        let mut used = vec![0usize; self.partition.block_count()];
        let mut kept = Vec::new();
        for e in order {
            let b = self.partition.block_index_of(e);
            if used[b] < self.capacities[b] {
                used[b] += 1;
                kept.push(e);
            }
        }
        self.universe().subset(kept)
    }
}

impl fmt::Debug for PartitionMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PartitionMatroid({:?}; {:?})",
            self.partition, self.capacities
        )
    }
}
