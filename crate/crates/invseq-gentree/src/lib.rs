//! Succession-rule engine.
//!
//! A succession rule assigns a label to every node of an infinite tree: an
//! axiom labels the root and a production maps each label to the multiset of
//! its children's labels. Counting nodes per label level by level turns the
//! rule into a linear recurrence whose level totals enumerate a combinatorial
//! class. The engine works with label counts only; no tree is materialized.
//!
//! Doubled rules let a node place children two levels down. The engine keeps
//! a sliding window of one pending level to absorb those contributions.

mod engine;
mod grow;
mod rules;

pub use engine::{run_rule, run_rule_levels, Label, LevelDistribution, Production, RuleError, SuccessionRule};
pub use grow::{grow_right_tree, GrowError};
pub use rules::{
    rule_000_100, rule_000_102, rule_101_102_201, rule_102_201, rule_102_210, rule_by_id,
    rule_cat, rule_factorial, RULE_IDS,
};
