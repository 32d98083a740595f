//! Exact computations with representations of symmetric groups: Specht
//! modules, induction, central stabilization and the central stability
//! complex.

pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod perm;
pub mod report;
pub mod specht;
pub mod stability;
pub mod symrep;
pub mod verify;

pub use combinatorics::{Partition, Tableau, Tabloid, WeakPartition};
pub use error::{Error, Result};
pub use linalg::{Field, FieldSpec, Matrix, PrimeField, Rationals};
pub use perm::Perm;
pub use stability::Seed;
pub use symrep::{EquivMap, SymRep, Twist};
