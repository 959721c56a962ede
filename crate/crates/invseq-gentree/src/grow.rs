use invseq_core::{contains_using_last, PatternSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrowError {
    #[error("tree expansion exceeded the budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
}

/// Per-level node counts of the combinatorial generating tree growing on
/// the right for pattern-avoiding inversion sequences.
///
/// The root is the empty sequence; the children of σ are the sequences σ·i
/// for i ∈ [0,|σ|] that still avoid `patterns`. Avoidance is hereditary, so
/// checking only occurrences through the appended entry is exact. Level n
/// therefore counts the avoiders of size n; the result has length n_max+1.
/// `budget` caps the number of tree nodes visited.
pub fn grow_right_tree(
    patterns: &PatternSet,
    n_max: usize,
    budget: u64,
) -> Result<Vec<u64>, GrowError> {
    let mut counts = vec![0u64; n_max + 1];
    let mut visited: u64 = 0;
    let mut stack: Vec<u64> = Vec::with_capacity(n_max);
    visit(patterns, n_max, budget, &mut stack, &mut visited, &mut counts)?;
    Ok(counts)
}

fn visit(
    patterns: &PatternSet,
    n_max: usize,
    budget: u64,
    stack: &mut Vec<u64>,
    visited: &mut u64,
    counts: &mut [u64],
) -> Result<(), GrowError> {
    *visited += 1;
    if *visited > budget {
        return Err(GrowError::BudgetExceeded { budget });
    }
    counts[stack.len()] += 1;
    if stack.len() == n_max {
        return Ok(());
    }
    for i in 0..=stack.len() as u64 {
        stack.push(i);
        let admissible = !patterns.iter().any(|p| contains_using_last(stack, p));
        if admissible {
            visit(patterns, n_max, budget, stack, visited, counts)?;
        }
        stack.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn nondecreasing_sequences_grow_like_catalan() {
        assert_eq!(
            grow_right_tree(&set("10"), 4, 1_000_000),
            Ok(vec![1, 1, 2, 5, 14])
        );
    }

    #[test]
    fn unrestricted_tree_grows_like_factorial() {
        assert_eq!(
            grow_right_tree(&PatternSet::empty(), 5, 1_000_000),
            Ok(vec![1, 1, 2, 6, 24, 120])
        );
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            grow_right_tree(&PatternSet::empty(), 8, 100),
            Err(GrowError::BudgetExceeded { budget: 100 })
        );
    }
}
