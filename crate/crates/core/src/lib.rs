//! Orientations avoiding a finite set of forbidden oriented graphs.
//!
//! - [`search`]: does a graph admit an orientation with no member of `F`
//!   (induced, homomorphic, or component-wise overlapping), optionally acyclic?
//! - [`words`], [`automaton`], [`periods`]: oriented paths as words over
//!   `>`/`<`, the language avoiding a factor set, and its periods.
//! - [`spectrum`]: which cycles admit an `F`-free orientation, bridging to
//!   the language for long cycles.
//! - [`hom`], [`duality`]: homomorphisms, cores and bounded duality checks.
//! - [`holes`]: necessary conditions for classes defined by forbidden hole
//!   lengths.
//! - [`cli`]: the `orient-expr` command-line tool.

pub mod additivity;
pub mod automaton;
pub mod canon;
pub mod cli;
pub mod duality;
pub mod embed;
pub mod error;
pub mod forbidden;
pub mod format;
pub mod graph;
pub mod holes;
pub mod hom;
pub mod oracles;
pub mod orientations;
pub mod periods;
pub mod search;
pub mod spectrum;
pub mod words;

pub use error::{Error, Result};
pub use forbidden::{is_free, Containment, ForbiddenSet, SearchMode};
pub use graph::{Digraph, Graph, OrientedGraph};
pub use search::{admits_orientation, OrientationVerdict};
pub use words::{FactorSet, Letter, Word};
