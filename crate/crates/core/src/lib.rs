//! Entringer and Arnold numbers, the families they count, and the
//! bijections between those families.

pub mod bijections;
pub mod cdindex;
pub mod error;
pub mod families;
pub mod perm;
pub mod tree;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use families::{count_family, enumerate_family, FamilyObject, FamilyTag};
pub use perm::{Permutation, SignedPermutation, Word};
pub use tree::{IncreasingTree, OneTwoTree, SignedIncreasingTree};
pub use triangles::{arnold_table, entringer_table, TriangleKind, TriangleTable};
