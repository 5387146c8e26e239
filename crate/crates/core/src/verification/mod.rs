//! Well-formedness checks, uniqueness comparisons, executable lemma checks
//! and brute-force oracles.

mod census;
mod equivalence;
mod lemmas;
mod oracle;
mod wellformed;

pub use census::{run_census, Census, Tally};
pub use equivalence::{equivalent, EquivalenceReport, Pairing, Side};
pub use lemmas::{lemma1_check, lemma2_check, PropertyCase, PropertyId};
pub use oracle::{oracle_factorization_forms, oracle_is_square_free, OracleForms};
pub use wellformed::{check_factorization_of, check_well_formed, Violation, WellFormedReport};
