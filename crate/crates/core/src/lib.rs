//! Promotion, evacuation and their relatives on Young tableaux and
//! cominuscule posets, with exact exhaustive homomesy verification.

pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod growth;
pub mod homomesy;
pub mod ktableaux;
pub mod multiset;
pub mod orbit;
pub mod paths;
pub mod posets;
pub mod rsk;
pub mod shape;
pub mod tableau;

pub use error::{Error, Result};
pub use shape::{Cell, Partition, SkewShape};
pub use tableau::{Tableau, TableauKind};
