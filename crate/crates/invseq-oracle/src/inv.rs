use invseq_core::PatternSet;

use crate::search::{Bound, DfsIter};

/// All sequences of length `n` with entry `i` (1-based) below `i + shift`
/// that avoid every pattern in `patterns`, in lexicographic order.
///
/// Avoidance is checked on complete sequences only, making this the
/// definitional enumerator. `shift = 0` gives ordinary inversion sequences.
pub fn enumerate_inv_seqs(
    n: usize,
    shift: u64,
    patterns: &PatternSet,
) -> impl Iterator<Item = Vec<u64>> {
    DfsIter::new(n, Bound::PositionShift(shift), patterns, false)
}

/// Same language as [`enumerate_inv_seqs`], but abandons a prefix as soon as
/// its last entry completes a pattern occurrence.
pub fn enumerate_inv_seqs_pruned(
    n: usize,
    shift: u64,
    patterns: &PatternSet,
) -> impl Iterator<Item = Vec<u64>> {
    DfsIter::new(n, Bound::PositionShift(shift), patterns, true)
}

/// Number of pattern-avoiding shifted inversion sequences of length `n`.
pub fn count_inv_seqs(n: usize, shift: u64, patterns: &PatternSet) -> u64 {
    enumerate_inv_seqs_pruned(n, shift, patterns).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn enumerates_all_length_three_inversion_sequences() {
        let all: Vec<Vec<u64>> = enumerate_inv_seqs(3, 0, &PatternSet::empty()).collect();
        let expected: Vec<Vec<u64>> = vec![
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 0, 2],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![0, 1, 2],
        ];
        assert_eq!(all, expected);
    }

    #[test]
    fn empty_length_yields_the_empty_sequence_once() {
        let all: Vec<Vec<u64>> = enumerate_inv_seqs(0, 0, &set("000")).collect();
        assert_eq!(all, vec![Vec::<u64>::new()]);
        assert_eq!(count_inv_seqs(0, 3, &set("010,110")), 1);
    }

    #[test]
    fn count_fixtures() {
        assert_eq!(count_inv_seqs(4, 0, &set("010")), 15);
        assert_eq!(count_inv_seqs(5, 0, &set("102,201")), 87);
    }

    #[test]
    fn shift_widens_the_value_range() {
        // Entries bounded by i + 1: first entry in {0,1}, second in {0,1,2}.
        assert_eq!(count_inv_seqs(2, 1, &PatternSet::empty()), 6);
        assert_eq!(count_inv_seqs(1, 4, &PatternSet::empty()), 5);
    }

    #[test]
    fn pruned_agrees_on_a_fixture() {
        let plain: Vec<Vec<u64>> = enumerate_inv_seqs(5, 0, &set("000,120")).collect();
        let pruned: Vec<Vec<u64>> = enumerate_inv_seqs_pruned(5, 0, &set("000,120")).collect();
        assert_eq!(plain, pruned);
        assert_eq!(plain.len(), 50);
    }
}
