use std::collections::BTreeSet;

/// Statistics of an integer sequence. Positions are 1-based. Conventions for
/// the empty sequence follow the limit values used throughout: `max = -1`,
/// `min = None` (read as plus infinity), `firstmax = lastmax = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    pub size: usize,
    /// Set of values.
    pub vals: BTreeSet<u64>,
    /// Number of distinct values, counting 0.
    pub dist: usize,
    pub min: Option<u64>,
    pub max: i64,
    /// Position of the first maximum, 0 for the empty sequence.
    pub firstmax: usize,
    /// Position of the last maximum, 0 for the empty sequence.
    pub lastmax: usize,
    /// Descent set: positions i in [1, n-1] with seq[i] > seq[i+1].
    pub des: BTreeSet<usize>,
    /// Largest value occurring at least twice, -1 when all values are
    /// distinct.
    pub rep: i64,
    /// Number of distinct values strictly greater than `rep`.
    pub top: usize,
}

pub fn stats(seq: &[u64]) -> Stats {
    let size = seq.len();
    let vals: BTreeSet<u64> = seq.iter().copied().collect();
    let dist = vals.len();
    let min = vals.first().copied();
    let max = vals.last().map_or(-1, |&m| m as i64);

    let mut firstmax = 0;
    let mut lastmax = 0;
    if let Some(&m) = vals.last() {
        firstmax = seq.iter().position(|&v| v == m).unwrap() + 1;
        lastmax = seq.iter().rposition(|&v| v == m).unwrap() + 1;
    }

    let des: BTreeSet<usize> = (1..size)
        .filter(|&i| seq[i - 1] > seq[i])
        .collect();

    let mut rep = -1;
    for &v in vals.iter().rev() {
        if seq.iter().filter(|&&x| x == v).count() >= 2 {
            rep = v as i64;
            break;
        }
    }
    let top = vals.iter().filter(|&&v| v as i64 > rep).count();

    Stats {
        size,
        vals,
        dist,
        min,
        max,
        firstmax,
        lastmax,
        des,
        rep,
        top,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sequence_conventions() {
        let s = stats(&[]);
        assert_eq!(s.size, 0);
        assert_eq!(s.max, -1);
        assert_eq!(s.min, None);
        assert_eq!(s.firstmax, 0);
        assert_eq!(s.lastmax, 0);
        assert_eq!(s.dist, 0);
        assert_eq!(s.rep, -1);
        assert_eq!(s.top, 0);
        assert!(s.des.is_empty());
    }

    #[test]
    fn descent_positions_are_one_based() {
        let s = stats(&[0, 1, 1, 3, 3, 1, 3, 2, 3]);
        assert_eq!(s.des, BTreeSet::from([5, 7]));
        assert_eq!(s.rep, 3);
        assert_eq!(s.top, 0);
    }

    #[test]
    fn max_statistics() {
        let s = stats(&[0, 0, 1, 3, 3, 3, 4, 6, 6]);
        assert_eq!(s.max, 6);
        assert_eq!(s.firstmax, 8);
        assert_eq!(s.lastmax, 9);
        assert_eq!(s.dist, 5);
        assert_eq!(s.min, Some(0));
        assert_eq!(s.rep, 6);
    }

    #[test]
    fn rep_and_top_with_distinct_tail() {
        // 1 repeats, 2 and 4 sit above it.
        let s = stats(&[1, 0, 1, 4, 2]);
        assert_eq!(s.rep, 1);
        assert_eq!(s.top, 2);
        // All distinct: rep is -1 and every value counts for top.
        let t = stats(&[2, 0, 3]);
        assert_eq!(t.rep, -1);
        assert_eq!(t.top, 3);
    }
}
