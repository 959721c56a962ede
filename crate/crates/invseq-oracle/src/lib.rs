//! Brute-force reference enumeration.
//!
//! Everything here counts by exhaustive search. The enumerators are slow by
//! design and exist to pin down ground truth for the fast recurrences and
//! succession rules implemented elsewhere in the workspace. They stay exact
//! up to whatever size the search budget allows.

mod inv;
mod search;
mod words;

pub use inv::{count_inv_seqs, enumerate_inv_seqs, enumerate_inv_seqs_pruned};
pub use words::{
    check_binom_reduction, count_words, count_words_with_budget, BudgetError, WordSpec,
    DEFAULT_WORD_BUDGET,
};
