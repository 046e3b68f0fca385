//! Concrete algebras: relation and path powerset models, the named example
//! structures, and the closed-form candidate domain maps.

mod builtin;
mod formula;
mod path;
mod powerset;
mod relation;

pub use builtin::{builtin, trivial_algebra, BUILTINS};
pub use formula::{dom_via_inf, dom_via_top};
pub use path::{path_algebra, Dag, Edge, PathModel, MAX_PATHS};
pub use relation::{rel_algebra, RelModel};
