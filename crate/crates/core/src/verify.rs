//! Verification sweeps: every counting formula in [`crate::pcm`] and every
//! operator law is replayed against brute-force enumeration on small
//! universes.
//!
//! Each sweep runs a large number of individual checks and reports how
//! many ran, how many failed, and the first failure in human-readable
//! form. The CLI `verify` command and the acceptance test suite both drive
//! these functions, so the whole property catalogue is reproducible with
//! one command. Randomized parts use fixed seeds; output is deterministic.

use std::fmt;

use crate::approxnum::Covering;
use crate::enumerate::{self, DetRng};
use crate::family::SetFamily;
use crate::ground::{Subset, Universe};
use crate::matroid::{check_base_axioms, check_circuit_axioms, check_independence_axioms, Matroid};
use crate::pcm::{PartitionCircuitMatroid, PartitionMatroid};
use crate::rough::Partition;

/// Outcome of one sweep.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checks, {} failures",
            self.name, self.checks, self.failures
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, " (first: {first})")?;
        }
        Ok(())
    }
}

struct Sweep {
    name: &'static str,
    checks: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Sweep {
    fn new(name: &'static str) -> Self {
        Sweep {
            name,
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check<F: FnOnce() -> String>(&mut self, ok: bool, describe: F) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn finish(self) -> SweepReport {
        SweepReport {
            name: self.name,
            checks: self.checks,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

/// Sweep parameters. `exhaustive_max_n` scales the exhaustive
/// partition/subset sweeps; the sampled extras (random families, size-8
/// sampling, covering and greedy sizes) are fixed by the defaults below.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Largest universe swept exhaustively over all partitions and subsets.
    pub exhaustive_max_n: usize,
    /// Random non-partition families classified by the axiom checkers.
    pub random_families: usize,
    /// Universe size for the sampled formula-vs-oracle comparison.
    pub sampled_n: usize,
    /// Number of sampled (partition, subset) pairs at `sampled_n`.
    pub sampled_pairs: u64,
    /// Random coverings checked per universe size in 3..=6.
    pub coverings_per_size: usize,
    /// Random weighted instances per universe size in 4..=10.
    pub greedy_per_size: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            exhaustive_max_n: 5,
            random_families: 500,
            sampled_n: 8,
            sampled_pairs: 1000,
            coverings_per_size: 500,
            greedy_per_size: 100,
        }
    }
}

/// Run every sweep in order and collect the reports.
pub fn run_all(config: &SweepConfig) -> Vec<SweepReport> {
    vec![
        rough_law_sweep(config.exhaustive_max_n),
        circuit_axiom_sweep(config.exhaustive_max_n + 1, config.random_families),
        independence_agreement_sweep(config.exhaustive_max_n),
        formula_oracle_sweep(
            config.exhaustive_max_n,
            config.sampled_n,
            config.sampled_pairs,
        ),
        duality_sweep(config.exhaustive_max_n),
        approx_number_sweep(config.coverings_per_size),
        greedy_sweep(config.greedy_per_size),
    ]
}

fn all_subsets(universe: &Universe) -> Vec<Subset> {
    enumerate::subsets(universe)
        .expect("sweep universes stay small")
        .collect()
}

/// Laws (1L)–(4H) of the approximation operators, plus the
/// partition/relation round-trip, exhaustively for every partition of
/// every universe up to `max_n`.
pub fn rough_law_sweep(max_n: usize) -> SweepReport {
    let mut sweep = Sweep::new("rough-laws");
    for n in 0..=max_n {
        let universe = Universe::new(n);
        let all = all_subsets(&universe);
        for partition in enumerate::partitions(&universe) {
            let round_trip = Partition::from_relation(&partition.to_relation());
            sweep.check(round_trip == partition, || {
                format!("partition/relation round-trip changed {partition:?}")
            });

            let lower: Vec<Subset> = all
                .iter()
                .map(|x| partition.lower_approx(x).expect("same universe"))
                .collect();
            let upper: Vec<Subset> = all
                .iter()
                .map(|x| partition.upper_approx(x).expect("same universe"))
                .collect();
            let index = |x: &Subset| x.mask_u64() as usize;

            for (xm, x) in all.iter().enumerate() {
                let lo = &lower[xm];
                let hi = &upper[xm];
                sweep.check(lo.is_subset_raw(x), || {
                    format!("(1L) failed for {partition:?}, X = {x}")
                });
                sweep.check(x.is_subset_raw(hi), || {
                    format!("(1H) failed for {partition:?}, X = {x}")
                });
                let complement = x.complement();
                sweep.check(lower[index(&complement)] == hi.complement(), || {
                    format!("(3L) failed for {partition:?}, X = {x}")
                });
                sweep.check(upper[index(&complement)] == lo.complement(), || {
                    format!("(3H) failed for {partition:?}, X = {x}")
                });
                let lo_complement = lo.complement();
                sweep.check(lower[index(&lo_complement)] == lo_complement, || {
                    format!("(4L) failed for {partition:?}, X = {x}")
                });
                let hi_complement = hi.complement();
                sweep.check(upper[index(&hi_complement)] == hi_complement, || {
                    format!("(4H) failed for {partition:?}, X = {x}")
                });

                for (ym, y) in all.iter().enumerate() {
                    let meet = lower[xm & ym]
                        == lower[xm].intersection(&lower[ym]).expect("same universe");
                    sweep.check(meet, || {
                        format!("(2L) failed for {partition:?}, X = {x}, Y = {y}")
                    });
                    let join =
                        upper[xm | ym] == upper[xm].union(&upper[ym]).expect("same universe");
                    sweep.check(join, || {
                        format!("(2H) failed for {partition:?}, X = {x}, Y = {y}")
                    });
                }
            }
        }
    }
    sweep.finish()
}

/// Every partition's block family passes the circuit axioms, and the axiom
/// checkers' violation witnesses replay correctly on random families.
pub fn circuit_axiom_sweep(max_n: usize, random_families: usize) -> SweepReport {
    let mut sweep = Sweep::new("circuit-axioms");
    for n in 0..=max_n {
        let universe = Universe::new(n);
        for partition in enumerate::partitions(&universe) {
            let blocks = SetFamily::explicit(&universe, partition.blocks().to_vec())
                .expect("blocks share the universe");
            let report = check_circuit_axioms(&blocks).expect("within bound");
            sweep.check(report.holds(), || {
                format!(
                    "blocks of {partition:?} failed the circuit axioms: {}",
                    report.violation().expect("failed report carries a witness")
                )
            });
        }
    }

    let mut rng = DetRng::new(0xC1FC_0517);
    let mut classified = 0usize;
    while classified < random_families {
        let n = 1 + rng.below(6) as usize;
        let universe = Universe::new(n);
        let family = enumerate::random_family(&universe, &mut rng, 8);
        if is_partition_family(&family) {
            continue;
        }
        classified += 1;
        let reports = [
            check_independence_axioms(&family).expect("within bound"),
            check_base_axioms(&family).expect("within bound"),
            check_circuit_axioms(&family).expect("within bound"),
        ];
        for report in &reports {
            if let Some(violation) = report.violation() {
                let replays = violation.replay(&family).expect("same universe");
                sweep.check(replays, || {
                    format!("witness did not replay on {family:?}: {violation}")
                });
            } else {
                sweep.check(true, String::new);
            }
        }
        // A family passing the circuit axioms must induce a matroid whose
        // circuits are that same family.
        if reports[2].holds() {
            let matroid = Matroid::from_circuits_unchecked(&family).expect("within bound");
            let back = matroid.circuits().expect("within bound");
            sweep.check(back.members() == family.members(), || {
                format!("circuit round-trip changed {family:?}")
            });
        }
    }
    sweep.finish()
}

fn is_partition_family(family: &SetFamily) -> bool {
    let members = family.members().expect("random families are explicit");
    Partition::new(family.universe(), members.to_vec()).is_ok()
}

/// The four equivalent independence tests agree with each other and with
/// oracle membership, for every partition and subset up to `max_n`.
pub fn independence_agreement_sweep(max_n: usize) -> SweepReport {
    let mut sweep = Sweep::new("independence-characterizations");
    for n in 0..=max_n {
        let universe = Universe::new(n);
        let all = all_subsets(&universe);
        let full = universe.full_set();
        for partition in enumerate::partitions(&universe) {
            let matroid = PartitionCircuitMatroid::from_partition(partition.clone());
            let covering = Covering::from(&partition);
            let blocks = SetFamily::explicit(&universe, partition.blocks().to_vec())
                .expect("blocks share the universe");
            let oracle = Matroid::from_circuits(&blocks).expect("blocks are valid circuits");
            for x in &all {
                let by_blocks = matroid.is_independent(x).expect("same universe");
                let by_lower = partition.lower_approx(x).expect("same universe").is_empty();
                let by_number = covering.lower_number(x).expect("same universe") == 0;
                let by_upper = partition
                    .upper_approx(&x.complement())
                    .expect("same universe")
                    == full;
                let by_oracle = oracle.is_independent(x).expect("same universe");
                let agree = by_blocks == by_lower
                    && by_blocks == by_number
                    && by_blocks == by_upper
                    && by_blocks == by_oracle;
                sweep.check(agree, || {
                    format!(
                        "independence tests disagree for {partition:?}, X = {x}: \
                         blocks={by_blocks} lower={by_lower} number={by_number} \
                         upper={by_upper} oracle={by_oracle}"
                    )
                });
            }
        }
    }
    sweep.finish()
}

/// Every counting formula matches the enumeration oracle: exhaustively for
/// all partitions up to `max_n`, and on sampled (partition, subset) pairs
/// at `sampled_n`.
pub fn formula_oracle_sweep(max_n: usize, sampled_n: usize, sampled_pairs: u64) -> SweepReport {
    let mut sweep = Sweep::new("formula-vs-oracle");
    for n in 0..=max_n {
        let universe = Universe::new(n);
        let all = all_subsets(&universe);
        for partition in enumerate::partitions(&universe) {
            compare_against_oracle(&mut sweep, &partition, &all, true);
        }
    }

    let mut rng = DetRng::new(0xF0_0D5E);
    let universe = Universe::new(sampled_n);
    let mut pairs = 0u64;
    while pairs < sampled_pairs {
        let partition = enumerate::random_partition(&universe, &mut rng);
        let sample: Vec<Subset> = (0..10)
            .map(|_| enumerate::random_subset(&universe, &mut rng))
            .collect();
        pairs += sample.len() as u64;
        compare_against_oracle(&mut sweep, &partition, &sample, false);
    }
    sweep.finish()
}

fn compare_against_oracle(
    sweep: &mut Sweep,
    partition: &Partition,
    subsets: &[Subset],
    check_circuit_family: bool,
) {
    let universe = partition.universe();
    let matroid = PartitionCircuitMatroid::from_partition(partition.clone());
    let covering = Covering::from(partition);
    let blocks = SetFamily::explicit(universe, partition.blocks().to_vec())
        .expect("blocks share the universe");
    let oracle = Matroid::from_circuits(&blocks).expect("blocks are valid circuits");
    let dual_oracle = oracle.dual().expect("within bound");

    if check_circuit_family {
        // The circuit family is the minimal family with lower number one,
        // and both must equal the blocks.
        let ones: Vec<Subset> = enumerate::subsets(universe)
            .expect("within bound")
            .filter(|x| covering.lower_number(x).expect("same universe") == 1)
            .collect();
        let ones_family = SetFamily::explicit(universe, ones).expect("sets share the universe");
        let minimal = ones_family.min_elems().expect("explicit family");
        sweep.check(minimal.members() == blocks.members(), || {
            format!("minimal lower-number-one family differs from blocks of {partition:?}")
        });
        let direct = matroid.circuits();
        sweep.check(
            direct.members() == oracle.circuits().expect("within bound").members(),
            || format!("circuit families differ for {partition:?}"),
        );
    }

    for x in subsets {
        let rank = matroid.rank(x).expect("same universe");
        sweep.check(rank == oracle.rank(x).expect("same universe"), || {
            format!("rank formula differs from oracle for {partition:?}, X = {x}")
        });
        let closure = matroid.closure(x).expect("same universe");
        sweep.check(closure == oracle.closure(x).expect("same universe"), || {
            format!("closure formula differs from oracle for {partition:?}, X = {x}")
        });
        let closed = matroid.is_closed(x).expect("same universe");
        sweep.check(
            closed == oracle.is_closed(x).expect("same universe"),
            || format!("closed-set test differs from oracle for {partition:?}, X = {x}"),
        );
        let dual_independent = matroid.dual_is_independent(x).expect("same universe");
        sweep.check(
            dual_independent == dual_oracle.is_independent(x).expect("same universe"),
            || format!("dual independence differs from oracle for {partition:?}, X = {x}"),
        );
        let dual_rank = matroid.dual_rank(x).expect("same universe");
        sweep.check(
            dual_rank == dual_oracle.rank(x).expect("same universe"),
            || format!("dual rank differs from oracle for {partition:?}, X = {x}"),
        );
        let dual_closure = matroid.dual_closure(x).expect("same universe");
        sweep.check(
            dual_closure == dual_oracle.closure(x).expect("same universe"),
            || format!("dual closure differs from oracle for {partition:?}, X = {x}"),
        );
    }
}

/// Double duality and the dual-rank identity on every matroid induced by a
/// valid circuit family, plus capacity duality on every partition matroid,
/// all up to `max_n`.
pub fn duality_sweep(max_n: usize) -> SweepReport {
    let mut sweep = Sweep::new("duality");
    for n in 0..=max_n {
        let universe = Universe::new(n);
        let all = all_subsets(&universe);
        let full = universe.full_set();

        enumerate::for_each_antichain(&universe, |chosen| {
            let family =
                SetFamily::explicit(&universe, chosen.to_vec()).expect("sets share the universe");
            if !check_circuit_axioms(&family).expect("within bound").holds() {
                return;
            }
            let matroid = Matroid::from_circuits_unchecked(&family).expect("within bound");
            let dual = matroid.dual().expect("within bound");
            let double = dual.dual().expect("within bound");
            sweep.check(double == matroid, || {
                format!("dual(dual(M)) differs from M for circuits {family:?}")
            });
            let full_rank = matroid.rank(&full).expect("same universe");
            for x in &all {
                let complement_rank = matroid.rank(&x.complement()).expect("same universe");
                let identity = dual.rank(x).expect("same universe") + full_rank
                    == x.cardinality() + complement_rank;
                sweep.check(identity, || {
                    format!("dual-rank identity failed for circuits {family:?}, X = {x}")
                });
            }
        })
        .expect("within bound");

        // Capacity duality over every capacity vector of every partition.
        for partition in enumerate::partitions(&universe) {
            let sizes: Vec<usize> = partition.blocks().iter().map(Subset::cardinality).collect();
            for capacities in capacity_vectors(&sizes) {
                let matroid = PartitionMatroid::new(partition.clone(), capacities.clone())
                    .expect("one capacity per block");
                let dual = matroid.dual();
                let primal_oracle = oracle_of_partition_matroid(&matroid);
                let dual_from_capacities = oracle_of_partition_matroid(&dual);
                let dual_oracle = primal_oracle.dual().expect("within bound");
                sweep.check(dual_from_capacities == dual_oracle, || {
                    format!(
                        "capacity duality failed for {partition:?} with capacities {capacities:?}"
                    )
                });
                let complemented: Vec<Subset> = primal_oracle
                    .bases()
                    .members()
                    .expect("explicit family")
                    .iter()
                    .map(Subset::complement)
                    .collect();
                let complemented =
                    SetFamily::explicit(&universe, complemented).expect("sets share the universe");
                sweep.check(
                    dual_from_capacities.bases().members() == complemented.members(),
                    || {
                        format!(
                            "dual bases are not the complements for {partition:?} \
                             with capacities {capacities:?}"
                        )
                    },
                );
            }
        }
    }
    sweep.finish()
}

fn capacity_vectors(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut vectors = vec![Vec::new()];
    for &size in sizes {
        let mut grown = Vec::with_capacity(vectors.len() * (size + 1));
        for vector in &vectors {
            for k in 0..=size {
                let mut next = vector.clone();
                next.push(k);
                grown.push(next);
            }
        }
        vectors = grown;
    }
    vectors
}

fn oracle_of_partition_matroid(matroid: &PartitionMatroid) -> Matroid {
    let snapshot = matroid.clone();
    Matroid::from_predicate(matroid.universe(), move |x| {
        snapshot.is_independent(x).expect("same universe")
    })
    .expect("partition matroids satisfy the axioms")
}

/// The five approximation-number laws on random coverings, with the subset
/// pairs exhausted per covering, plus the partition specialization.
pub fn approx_number_sweep(coverings_per_size: usize) -> SweepReport {
    let mut sweep = Sweep::new("approximation-numbers");
    let mut rng = DetRng::new(0xAB_C0FF);
    for n in 3..=6usize {
        let universe = Universe::new(n);
        let all = all_subsets(&universe);
        let complement_of = |mask: usize| ((1usize << n) - 1) ^ mask;
        for _ in 0..coverings_per_size {
            let covering = enumerate::random_covering(&universe, &mut rng);
            let size = covering.block_count();
            let lower: Vec<usize> = all
                .iter()
                .map(|x| covering.lower_number(x).expect("same universe"))
                .collect();
            let upper: Vec<usize> = all
                .iter()
                .map(|x| covering.upper_number(x).expect("same universe"))
                .collect();

            sweep.check(lower[0] == 0, || {
                format!(
                    "lower number of the empty set is {} for {covering:?}",
                    lower[0]
                )
            });
            for (xm, x) in all.iter().enumerate() {
                sweep.check(lower[xm] <= upper[xm], || {
                    format!("lower exceeds upper for {covering:?}, X = {x}")
                });
                sweep.check(lower[xm] + upper[complement_of(xm)] == size, || {
                    format!("complement identity failed for {covering:?}, X = {x}")
                });
                for (ym, y) in all.iter().enumerate() {
                    if xm & ym == xm {
                        sweep.check(lower[xm] <= lower[ym], || {
                            format!("monotonicity failed for {covering:?}, X = {x}, Y = {y}")
                        });
                    }
                    sweep.check(
                        lower[xm] + lower[ym] <= lower[xm | ym] + lower[xm & ym],
                        || format!("supermodularity failed for {covering:?}, X = {x}, Y = {y}"),
                    );
                }
            }
        }

        // Partitions specialize: the upper number is additive over blocks.
        for _ in 0..coverings_per_size / 5 {
            let partition = enumerate::random_partition(&universe, &mut rng);
            let covering = Covering::from(&partition);
            for x in &all {
                let meeting = partition
                    .blocks()
                    .iter()
                    .filter(|b| b.intersects_raw(x))
                    .count();
                sweep.check(
                    covering.upper_number(x).expect("same universe") == meeting,
                    || format!("partition upper number not additive for {partition:?}, X = {x}"),
                );
            }
        }
    }
    sweep.finish()
}

/// Greedy selection attains the brute-force optimum on random weighted
/// partition matroids with nonnegative integer weights.
pub fn greedy_sweep(instances_per_size: usize) -> SweepReport {
    let mut sweep = Sweep::new("greedy-optimality");
    let mut rng = DetRng::new(0x6EED);
    for n in 4..=10usize {
        let universe = Universe::new(n);
        for _ in 0..instances_per_size {
            let partition = enumerate::random_partition(&universe, &mut rng);
            let capacities: Vec<usize> = partition
                .blocks()
                .iter()
                .map(|b| rng.below(b.cardinality() as u64 + 1) as usize)
                .collect();
            let weights: Vec<f64> = (0..n).map(|_| rng.below(101) as f64).collect();
            let matroid = PartitionMatroid::new(partition.clone(), capacities.clone())
                .expect("one capacity per block");
            let picked = matroid
                .greedy_max_weight_independent(&weights)
                .expect("weights are valid");
            sweep.check(
                matroid.is_independent(&picked).expect("same universe"),
                || format!("greedy picked a dependent set on {matroid:?}"),
            );
            let picked_weight: f64 = picked.iter().map(|e| weights[e]).sum();
            let mut best = 0.0f64;
            for x in enumerate::subsets(&universe).expect("within bound") {
                if matroid.is_independent(&x).expect("same universe") {
                    let w: f64 = x.iter().map(|e| weights[e]).sum();
                    best = best.max(w);
                }
            }
            sweep.check(picked_weight == best, || {
                format!(
                    "greedy weight {picked_weight} differs from optimum {best} on \
                     {matroid:?} with weights {weights:?}"
                )
            });
        }
    }
    sweep.finish()
}
