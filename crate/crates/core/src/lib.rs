pub mod algebra;
pub mod builtins;
pub mod cli;
pub mod error;
pub mod inventory;
pub mod linalg;
pub mod module;
pub mod perpcat;
pub mod report;
pub mod strings;
pub mod tauseq;
pub mod torsion;

pub use algebra::{parse_algebra, Algebra};
pub use error::{Error, Result};
pub use inventory::{build_inventory, Inventory};
pub use module::{Module, ModuleMap};
