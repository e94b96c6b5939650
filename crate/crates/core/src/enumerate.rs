//! Exhaustive and randomized generators for small set systems.
//!
//! Everything here exists to drive the verification sweeps and tests:
//! power-set iteration, partition enumeration by restricted growth
//! strings, antichain enumeration, and seeded random instances. All
//! randomness comes from [`DetRng`], a fixed splitmix64 generator, so
//! sweep output is reproducible across runs and platforms.

use crate::approxnum::Covering;
use crate::family::SetFamily;
use crate::ground::{Subset, Universe};
use crate::rough::Partition;
use crate::{Error, Result};

/// Hard limit for single-word mask iteration.
const MASK_ITERATION_BOUND: usize = 62;

/// All subsets of the universe in ascending bit-pattern order.
///
/// Refuses universes too large to sweep with a single machine word.
pub fn subsets(universe: &Universe) -> Result<Subsets> {
    let size = universe.size();
    if size > MASK_ITERATION_BOUND {
        return Err(Error::CapacityExceeded {
            size,
            bound: MASK_ITERATION_BOUND,
        });
    }
    Ok(Subsets {
        universe: universe.clone(),
        next: 0,
        last: if size == 0 { 0 } else { (1u64 << size) - 1 },
        done: false,
    })
}

/// Iterator produced by [`subsets`].
#[derive(Debug)]
pub struct Subsets {
    universe: Universe,
    next: u64,
    last: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let item = Subset::from_mask_u64(&self.universe, self.next);
        if self.next == self.last {
            self.done = true;
        } else {
            self.next += 1;
        }
        Some(item)
    }
}

/// All partitions of the universe, enumerated by restricted growth
/// strings. The empty universe has exactly one partition with no blocks.
pub fn partitions(universe: &Universe) -> Partitions {
    let n = universe.size();
    Partitions {
        universe: universe.clone(),
        state: Some(vec![0; n]),
    }
}

/// Iterator produced by [`partitions`].
pub struct Partitions {
    universe: Universe,
    state: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let rgs = self.state.take()?;
        let item = partition_from_rgs(&self.universe, &rgs);
        self.state = next_rgs(rgs);
        Some(item)
    }
}

fn partition_from_rgs(universe: &Universe, rgs: &[usize]) -> Partition {
    let block_count = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
    for (element, &block) in rgs.iter().enumerate() {
        blocks[block].push(element);
    }
    Partition::from_index_blocks(universe, blocks).expect("growth string yields a partition")
}

fn next_rgs(mut rgs: Vec<usize>) -> Option<Vec<usize>> {
    let n = rgs.len();
    // rgs[i] may grow to at most max(rgs[..i]) + 1.
    for i in (1..n).rev() {
        let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
        if rgs[i] <= prefix_max {
            rgs[i] += 1;
            for v in rgs[i + 1..].iter_mut() {
                *v = 0;
            }
            return Some(rgs);
        }
    }
    None
}

/// Visit every antichain of nonempty subsets of the universe, including
/// the empty antichain. Members are passed in canonical order.
pub fn for_each_antichain<F>(universe: &Universe, mut visit: F) -> Result<()>
where
    F: FnMut(&[Subset]),
{
    let size = universe.size();
    if size > crate::family::DEFAULT_BRUTE_FORCE_BOUND {
        return Err(Error::CapacityExceeded {
            size,
            bound: crate::family::DEFAULT_BRUTE_FORCE_BOUND,
        });
    }
    let all: Vec<Subset> = subsets(universe)?.filter(|s| !s.is_empty()).collect();
    let mut chosen: Vec<Subset> = Vec::new();
    visit(&chosen);
    extend_antichain(&all, 0, &mut chosen, &mut visit);
    Ok(())
}

fn extend_antichain<F>(all: &[Subset], start: usize, chosen: &mut Vec<Subset>, visit: &mut F)
where
    F: FnMut(&[Subset]),
{
    for i in start..all.len() {
        let candidate = &all[i];
        let comparable = chosen
            .iter()
            .any(|c| c.is_subset_raw(candidate) || candidate.is_subset_raw(c));
        if !comparable {
            chosen.push(candidate.clone());
            visit(chosen);
            extend_antichain(all, i + 1, chosen, visit);
            chosen.pop();
        }
    }
}

/// Deterministic splitmix64 generator; seeded, portable, dependency-free.
pub struct DetRng {
    state: u64,
}

impl DetRng {
    pub fn new(seed: u64) -> Self {
        DetRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n`. `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0) is meaningless");
        ((u128::from(self.next_u64()) * u128::from(n)) >> 64) as u64
    }
}

/// Random subset of the universe.
pub fn random_subset(universe: &Universe, rng: &mut DetRng) -> Subset {
    let n = universe.size();
    assert!(n <= MASK_ITERATION_BOUND);
    if n == 0 {
        return universe.empty_set();
    }
    Subset::from_mask_u64(universe, rng.below(1u64 << n))
}

/// Random partition drawn from a uniformly random restricted growth string.
pub fn random_partition(universe: &Universe, rng: &mut DetRng) -> Partition {
    let n = universe.size();
    let mut rgs = vec![0usize; n];
    let mut max = 0usize;
    for slot in rgs.iter_mut().skip(1) {
        let v = rng.below(max as u64 + 2) as usize;
        *slot = v;
        max = max.max(v);
    }
    partition_from_rgs(universe, &rgs)
}

/// Random covering: a handful of random nonempty blocks, patched so their
/// union reaches every element.
pub fn random_covering(universe: &Universe, rng: &mut DetRng) -> Covering {
    let n = universe.size();
    if n == 0 {
        return Covering::new(universe, Vec::new()).expect("empty covering of empty universe");
    }
    assert!(n <= MASK_ITERATION_BOUND);
    let full = (1u64 << n) - 1;
    let block_count = 1 + rng.below(2 * n as u64) as usize;
    let mut masks: Vec<u64> = (0..block_count).map(|_| 1 + rng.below(full)).collect();
    let covered = masks.iter().fold(0u64, |acc, m| acc | m);
    for e in 0..n {
        if covered & (1 << e) == 0 {
            let patch = rng.below(block_count as u64) as usize;
            masks[patch] |= 1 << e;
        }
    }
    let blocks = masks
        .into_iter()
        .map(|m| Subset::from_mask_u64(universe, m))
        .collect();
    Covering::new(universe, blocks).expect("patched blocks cover the universe")
}

/// Random explicit family of at most `max_members` subsets. The empty set
/// may appear as a member.
pub fn random_family(universe: &Universe, rng: &mut DetRng, max_members: usize) -> SetFamily {
    let count = rng.below(max_members as u64 + 1) as usize;
    let members = (0..count).map(|_| random_subset(universe, rng)).collect();
    SetFamily::explicit(universe, members).expect("members share the universe")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_counts() {
        for n in 0..=6usize {
            let u = Universe::new(n);
            assert_eq!(subsets(&u).unwrap().count(), 1 << n);
        }
    }

    #[test]
    fn subset_enumeration_capacity() {
        let u = Universe::new(80);
        assert!(matches!(
            subsets(&u).unwrap_err(),
            Error::CapacityExceeded { .. }
        ));
    }

    #[test]
    fn partition_counts_match_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for (n, &expected) in bell.iter().enumerate() {
            let u = Universe::new(n);
            assert_eq!(partitions(&u).count(), expected, "Bell({n})");
        }
    }

    #[test]
    fn partitions_are_distinct_and_valid() {
        let u = Universe::new(4);
        let all: Vec<Partition> = partitions(&u).collect();
        for (i, p) in all.iter().enumerate() {
            for q in &all[..i] {
                assert_ne!(p, q);
            }
        }
    }

    #[test]
    fn antichain_counts_match_dedekind_numbers() {
        // Antichains of nonempty subsets: Dedekind(n) − 1.
        let expected = [1usize, 2, 5, 19, 167, 7580];
        for (n, &count) in expected.iter().enumerate() {
            let u = Universe::new(n);
            let mut seen = 0usize;
            for_each_antichain(&u, |_| seen += 1).unwrap();
            assert_eq!(seen, count, "antichains over {n} elements");
        }
    }

    #[test]
    fn det_rng_is_stable() {
        let mut rng = DetRng::new(7);
        let first: Vec<u64> = (0..4).map(|_| rng.next_u64()).collect();
        let mut again = DetRng::new(7);
        let second: Vec<u64> = (0..4).map(|_| again.next_u64()).collect();
        assert_eq!(first, second);
    }

    #[test]
    fn random_instances_are_valid() {
        let mut rng = DetRng::new(42);
        for n in 0..=8usize {
            let u = Universe::new(n);
            for _ in 0..20 {
                let p = random_partition(&u, &mut rng);
                let covered: usize = p.blocks().iter().map(Subset::cardinality).sum();
                assert_eq!(covered, n);
                let c = random_covering(&u, &mut rng);
                assert!(c.blocks().iter().all(|b| n == 0 || !b.is_empty()));
                let _ = random_family(&u, &mut rng, 6);
            }
        }
    }
}
