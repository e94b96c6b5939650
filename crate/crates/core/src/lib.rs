//! Partition matroids and their rough-set characterizations.
//!
//! The crate has three layers:
//!
//! * set machinery — [`ground`] (universes and subsets), [`family`] (set
//!   families with the `Upp`/`Low`/`Max`/`Min`/`Opp` combinators),
//!   [`rough`] (partitions, equivalence relations, lower/upper
//!   approximations) and [`approxnum`] (coverings and approximation
//!   numbers);
//! * [`matroid`] — a deliberately brute-force matroid oracle: axiom
//!   checkers for independence/base/circuit families and enumeration-based
//!   rank, closure, bases, circuits and duals;
//! * [`pcm`] — the matroid whose circuits are exactly the blocks of a
//!   partition, together with general capacity-constrained partition
//!   matroids, all computed by per-block counting formulas rather than
//!   subset enumeration. The [`verify`] sweeps prove the formulas against
//!   the oracle on every small instance.
//!
//! All values are immutable after construction and safe to share across
//! threads.
//!
//! ```
//! use pcmat::{Partition, PartitionCircuitMatroid, Universe};
//!
//! let universe = Universe::new(4);
//! let partition = Partition::from_index_blocks(&universe, [vec![0, 1], vec![2, 3]])?;
//! let matroid = PartitionCircuitMatroid::from_partition(partition);
//!
//! let x = universe.subset([0, 1, 2])?;
//! assert!(!matroid.is_independent(&x)?); // {0, 1} is a circuit inside x
//! assert_eq!(matroid.rank(&x)?, 2); // |x| minus the blocks inside x
//! assert_eq!(matroid.dual_rank(&x)?, 2); // blocks meeting x
//! # Ok::<(), pcmat::Error>(())
//! ```

pub mod approxnum;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod ground;
pub mod json;
pub mod matroid;
pub mod pcm;
pub mod rough;
pub mod verify;

pub use approxnum::Covering;
pub use error::Error;
pub use family::SetFamily;
pub use ground::{Subset, Universe};
pub use matroid::{AxiomReport, Law, Matroid, Violation};
pub use pcm::{PartitionCircuitMatroid, PartitionMatroid};
pub use rough::{EquivalenceRelation, Partition};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
