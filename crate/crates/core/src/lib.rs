//! Combinatorial classification of character sheaves for the symmetric pairs
//! `(SL_n, S(GL_p × GL_q))`.
//!
//! * [`combinat`]: partitions, bipartitions, characters of cyclic groups.
//! * [`orbits`]: signed Young diagrams labelling nilpotent K-orbits.
//! * [`strata`]: dual strata supporting character sheaves.
//! * [`classify`]: orbital complexes, character-sheaf labels, the Fourier
//!   bijection between them, cuspidals and induction data.
//! * [`oracle`]: matrix representatives and exact linear algebra used to
//!   check the closed formulas independently.
//! * [`records`]: the JSON/CSV record schemas of the command-line tool.
//! * [`verify`]: the exhaustive consistency checks behind `charsheaf verify`.

pub mod classify;
pub mod combinat;
pub mod error;
pub mod oracle;
pub mod orbits;
pub mod records;
pub mod strata;
pub mod verify;

pub use error::{Error, Result};
