use invseq_core::PatternSet;
use thiserror::Error;

use crate::search::{Bound, DfsIter};

/// A class of words to count: length `n` over the alphabet `{0, …, k-1}`,
/// optionally required to use every letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordSpec {
    pub n: usize,
    pub k: u64,
    pub surjective: bool,
}

/// Search-space ceiling for [`count_words`].
pub const DEFAULT_WORD_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BudgetError {
    #[error("search space holds {required} words, over the budget of {budget}")]
    Exceeded { required: u128, budget: u64 },
    #[error("search space size k^n does not fit in 128 bits")]
    Overflow,
}

/// Number of pattern-avoiding words in `spec`, refusing searches whose raw
/// space `k^n` exceeds [`DEFAULT_WORD_BUDGET`].
pub fn count_words(spec: &WordSpec, patterns: &PatternSet) -> Result<u64, BudgetError> {
    count_words_with_budget(spec, patterns, DEFAULT_WORD_BUDGET)
}

/// As [`count_words`] with an explicit budget. Classes that are empty for
/// structural reasons short-circuit before the budget check.
pub fn count_words_with_budget(
    spec: &WordSpec,
    patterns: &PatternSet,
    budget: u64,
) -> Result<u64, BudgetError> {
    if spec.surjective && spec.k > spec.n as u64 {
        return Ok(0);
    }
    if spec.n == 0 {
        // Only the empty word; it is surjective exactly onto the empty
        // alphabet, and the k > 0 surjective case returned above.
        return Ok(1);
    }
    if spec.k == 0 {
        return Ok(0);
    }
    let exp = u32::try_from(spec.n).map_err(|_| BudgetError::Overflow)?;
    let required = (spec.k as u128)
        .checked_pow(exp)
        .ok_or(BudgetError::Overflow)?;
    if required > budget as u128 {
        return Err(BudgetError::Exceeded { required, budget });
    }
    let words = DfsIter::new(spec.n, Bound::Fixed(spec.k), patterns, true);
    let count = if spec.surjective {
        words.filter(|w| distinct(w) == spec.k).count()
    } else {
        words.count()
    };
    Ok(count as u64)
}

fn distinct(word: &[u64]) -> u64 {
    let mut seen: Vec<bool> = Vec::new();
    let mut count = 0;
    for &v in word {
        let v = v as usize;
        if seen.len() <= v {
            seen.resize(v + 1, false);
        }
        if !seen[v] {
            seen[v] = true;
            count += 1;
        }
    }
    count
}

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut res: u128 = 1;
    for i in 1..=k.min(n - k) {
        res = res * (n - k.min(n - k) + i) as u128 / i as u128;
    }
    res
}

/// Checks that counts over a k-letter alphabet decompose through surjective
/// words: |W_{n,k}(P)| = sum over d of C(k,d) |surjective W_{n,d}(P)|.
pub fn check_binom_reduction(
    n: usize,
    k: u64,
    patterns: &PatternSet,
) -> Result<bool, BudgetError> {
    let lhs = count_words(
        &WordSpec {
            n,
            k,
            surjective: false,
        },
        patterns,
    )? as u128;
    let mut rhs: u128 = 0;
    for d in 0..=k {
        let onto = count_words(
            &WordSpec {
                n,
                k: d,
                surjective: true,
            },
            patterns,
        )? as u128;
        rhs += binom(k, d) * onto;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    fn spec(n: usize, k: u64, surjective: bool) -> WordSpec {
        WordSpec { n, k, surjective }
    }

    #[test]
    fn unrestricted_words_count_powers() {
        assert_eq!(count_words(&spec(2, 3, false), &PatternSet::empty()), Ok(9));
        assert_eq!(count_words(&spec(0, 5, false), &PatternSet::empty()), Ok(1));
        assert_eq!(count_words(&spec(3, 0, false), &PatternSet::empty()), Ok(0));
    }

    #[test]
    fn surjective_word_fixtures() {
        assert_eq!(count_words(&spec(3, 3, true), &set("120")), Ok(5));
        assert_eq!(count_words(&spec(4, 2, true), &set("010,110")), Ok(6));
        // Empty word is the one surjection onto the empty alphabet.
        assert_eq!(count_words(&spec(0, 0, true), &PatternSet::empty()), Ok(1));
        assert_eq!(count_words(&spec(0, 2, true), &PatternSet::empty()), Ok(0));
    }

    #[test]
    fn surjective_shortfall_skips_the_budget_check() {
        // 10^40 letters would overflow the budget; k > n settles it first.
        let s = spec(3, 10_000_000_000, true);
        assert_eq!(count_words(&s, &PatternSet::empty()), Ok(0));
    }

    #[test]
    fn budget_violations_are_reported() {
        assert_eq!(
            count_words(&spec(10, 10, false), &PatternSet::empty()),
            Err(BudgetError::Exceeded {
                required: 10_000_000_000,
                budget: DEFAULT_WORD_BUDGET
            })
        );
        assert_eq!(
            count_words(&spec(50, 1000, false), &PatternSet::empty()),
            Err(BudgetError::Overflow)
        );
        // A raised budget admits the same search.
        assert_eq!(
            count_words_with_budget(&spec(10, 2, false), &PatternSet::empty(), 500),
            Err(BudgetError::Exceeded {
                required: 1024,
                budget: 500
            })
        );
        assert_eq!(
            count_words_with_budget(&spec(10, 2, false), &PatternSet::empty(), 1024),
            Ok(1024)
        );
    }

    #[test]
    fn binomial_reduction_fixtures() {
        assert_eq!(check_binom_reduction(3, 4, &set("021")), Ok(true));
        assert_eq!(check_binom_reduction(0, 5, &set("000")), Ok(true));
        assert_eq!(check_binom_reduction(4, 3, &set("120,201")), Ok(true));
    }

    #[test]
    fn binom_helper_matches_pascal() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(6, 0), 1);
        assert_eq!(binom(4, 6), 0);
        for n in 1..20u64 {
            for k in 1..n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
            }
        }
    }
}
