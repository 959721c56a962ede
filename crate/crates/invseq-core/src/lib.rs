//! Integer sequences, classical patterns, and the statistics used to
//! classify pattern-avoiding inversion sequences.
//!
//! Sequences are plain `Vec<u64>` / `&[u64]` values. Positions are 1-based in
//! every statistic and in all documentation; storage is 0-based as usual.

mod pattern;
mod stats;

pub use pattern::{ParseError, Pattern, PatternSet};
pub use stats::{stats, Stats};

use std::collections::BTreeSet;

/// An integer sequence. Values are nonnegative; positions are 1-based in all
/// statistics.
pub type IntSeq = Vec<u64>;

/// Canonicalizes a nonempty sequence by replacing each term with its rank
/// among the distinct values, so `(3,5,4)` becomes `(0,2,1)` and `(7,7,7)`
/// becomes `(0,0,0)`. Canonicalization is idempotent.
///
/// # Panics
///
/// Panics on an empty sequence: patterns have length at least 1.
pub fn canonicalize(seq: &[u64]) -> Pattern {
    Pattern::new(seq)
}

/// Tests whether `seq` contains `pattern`, that is, whether some subsequence
/// of `seq` is order-isomorphic to the pattern.
///
/// ```
/// use invseq_core::{contains, Pattern};
/// assert!(contains(&[4, 3, 2, 5, 4], &Pattern::new(&[0, 2, 1])));
/// assert!(!contains(&[0, 0, 2, 3, 2, 0, 1, 5], &Pattern::new(&[1, 0, 1])));
/// ```
pub fn contains(seq: &[u64], pattern: &Pattern) -> bool {
    let rho = pattern.terms();
    if rho.len() > seq.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(rho.len());
    search(seq, rho, 0, seq.len(), &mut chosen)
}

/// Tests whether `seq` contains `pattern` by an occurrence whose final entry
/// is the final entry of `seq`. When every proper prefix of `seq` avoids the
/// pattern, this is equivalent to containment, which makes it the right check
/// for prefix-pruned enumeration.
pub fn contains_using_last(seq: &[u64], pattern: &Pattern) -> bool {
    let rho = pattern.terms();
    if rho.len() > seq.len() {
        return false;
    }
    let last = seq.len() - 1;
    let mut chosen = Vec::with_capacity(rho.len() - 1);
    search_pinned(seq, rho, 0, last, &mut chosen)
}

// Extends a partial occurrence one position at a time. `chosen` holds the
// indices already matched to rho[..chosen.len()]; candidates are drawn from
// [start, end).
fn search(seq: &[u64], rho: &[u64], start: usize, end: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == rho.len() {
        return true;
    }
    let needed = rho.len() - chosen.len();
    for i in start..end {
        if end - i < needed {
            return false;
        }
        if extends(seq, rho, chosen, i) {
            chosen.push(i);
            if search(seq, rho, i + 1, end, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

// Like `search`, but the last pattern position is pinned to index `last`.
fn search_pinned(seq: &[u64], rho: &[u64], start: usize, last: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == rho.len() - 1 {
        return extends(seq, rho, chosen, last);
    }
    let needed = rho.len() - 1 - chosen.len();
    for i in start..last {
        if last - i < needed {
            return false;
        }
        if extends(seq, rho, chosen, i) {
            chosen.push(i);
            if search_pinned(seq, rho, i + 1, last, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

// Order-isomorphism check for appending index i to the partial occurrence:
// the new entry must compare to every chosen entry exactly as the new pattern
// term compares to the corresponding pattern term.
fn extends(seq: &[u64], rho: &[u64], chosen: &[usize], i: usize) -> bool {
    let k = chosen.len();
    chosen.iter().enumerate().all(|(a, &j)| {
        (seq[j] < seq[i]) == (rho[a] < rho[k]) && (seq[j] > seq[i]) == (rho[a] > rho[k])
    })
}

/// Tests whether every entry satisfies `seq[i] < i + s` with positions
/// counted from 1. With `s = 0` this is the defining property of inversion
/// sequences.
pub fn is_shifted_inv_seq(seq: &[u64], s: u64) -> bool {
    seq.iter()
        .enumerate()
        .all(|(i, &v)| v < i as u64 + 1 + s)
}

/// The set of values `v` in `[0, max(alpha)]` such that appending
/// `max(alpha) + 1` and then `v` to `alpha` creates a pattern of `patterns`.
/// Returns the empty set for the empty sequence.
///
/// # Panics
///
/// Panics when `alpha` itself contains a pattern of `patterns`.
pub fn forbidden_values(alpha: &[u64], patterns: &PatternSet) -> BTreeSet<u64> {
    assert!(
        patterns.iter().all(|p| !contains(alpha, p)),
        "forbidden_values: the prefix must avoid the pattern set"
    );
    let mut out = BTreeSet::new();
    let m = match alpha.iter().max() {
        Some(&m) => m,
        None => return out,
    };
    let mut ext = Vec::with_capacity(alpha.len() + 2);
    ext.extend_from_slice(alpha);
    ext.push(m + 1);
    ext.push(0);
    for v in 0..=m {
        *ext.last_mut().unwrap() = v;
        if patterns.iter().any(|p| contains(&ext, p)) {
            out.insert(v);
        }
    }
    out
}
