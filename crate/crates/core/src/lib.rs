//! Lattice paths on one side, order-preserving partial transformations of a
//! finite chain on the other, and the machinery that welds them together.
//!
//! A path runs from `(0,0)` to `(n,n)` over unit steps `H = (1,0)`,
//! `V = (0,1)`, `D = (1,1)`; a chain map sends a subset of `{0, .., n-1}`
//! order-preservingly into `{0, .., m-1}` with `m = n` or `n+1`. Reading a
//! path level by level — each `V` leaving level `y` contributes a domain
//! point, each `H` at level `y` an image value — matches the two families
//! exactly, and the natural path predicates line up with the natural map
//! predicates: subdiagonal ↔ decreasing, diagonal-free ↔ full,
//! final-step-not-horizontal ↔ image bounded by the chain.
//!
//! The crate is arranged in three layers:
//!
//! * objects and their translation — [`chainmap`], [`lattice`],
//!   [`bijection`];
//! * exact counting of every class and refinement with big integers —
//!   [`counting`] (large/small Schröder, Catalan, central Delannoy, the
//!   F/G/J refinements, idempotent counts);
//! * exhaustive generation and verification — [`enumeration`] streams
//!   whole classes at small sizes, [`harness`] confronts each formula,
//!   recurrence and transport law with that census and emits a
//!   machine-readable report.
//!
//! ```
//! use pathmaps::{bijection, ChainMap};
//!
//! let alpha = ChainMap::new(4, 4, vec![(1, 1), (3, 1)]).unwrap();
//! let path = bijection::map_to_path(&alpha);
//! assert_eq!(path.render(), "DHHVDV");
//! assert!(path.is_subdiagonal());
//! assert_eq!(bijection::path_to_map(&path), alpha.widen_codomain());
//! ```

#![forbid(unsafe_code)]

pub mod bijection;
pub mod chainmap;
pub mod counting;
pub mod enumeration;
pub mod harness;
pub mod lattice;

pub use chainmap::{ChainMap, ChainMapError, ClassId, MapStats};
pub use counting::{BigCount, FamilyId, Table};
pub use enumeration::{PathFilter, StatisticId};
pub use harness::{CheckStatus, Fixture, HarnessConfig, VerificationReport};
pub use lattice::{LatticePath, LevelProfile, PathError, PathStats, Step};
