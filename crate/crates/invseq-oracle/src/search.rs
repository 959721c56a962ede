use invseq_core::{contains, contains_using_last, Pattern, PatternSet};

/// Exclusive upper bound for the value at a given 0-based position.
pub(crate) enum Bound {
    /// Position i (1-based) allows values below i + shift.
    PositionShift(u64),
    /// Every position allows values below the same constant.
    Fixed(u64),
}

impl Bound {
    fn at(&self, pos: usize) -> u64 {
        match *self {
            Bound::PositionShift(s) => pos as u64 + 1 + s,
            Bound::Fixed(k) => k,
        }
    }
}

/// Depth-first traversal of bounded integer words in lexicographic order.
///
/// With `prune` set, a node is abandoned as soon as its last entry completes
/// a pattern occurrence; otherwise every leaf is generated and filtered
/// against full containment. Both modes yield the same leaves in the same
/// order, since pattern containment is inherited by extensions.
pub(crate) struct DfsIter {
    n: usize,
    bound: Bound,
    patterns: Vec<Pattern>,
    prune: bool,
    stack: Vec<u64>,
    started: bool,
    done: bool,
}

impl DfsIter {
    pub(crate) fn new(n: usize, bound: Bound, patterns: &PatternSet, prune: bool) -> Self {
        let done = n > 0 && bound.at(0) == 0;
        DfsIter {
            n,
            bound,
            patterns: patterns.patterns().to_vec(),
            prune,
            stack: Vec::with_capacity(n),
            started: false,
            done,
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(last) = self.stack.last_mut() {
            *last += 1;
            if *last < self.bound.at(self.stack.len() - 1) {
                return true;
            }
            self.stack.pop();
        }
        self.done = true;
        false
    }

    fn top_completes_pattern(&self) -> bool {
        self.patterns.iter().any(|p| contains_using_last(&self.stack, p))
    }

    fn avoids_all(&self) -> bool {
        self.patterns.iter().all(|p| !contains(&self.stack, p))
    }
}

impl Iterator for DfsIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        loop {
            if self.done {
                return None;
            }
            if !self.started {
                self.started = true;
                if self.n == 0 {
                    self.done = true;
                    // The empty word contains no nonempty pattern.
                    return Some(Vec::new());
                }
                self.stack.push(0);
            } else if !self.advance() {
                return None;
            }
            // The top entry was just placed; descend by zeros until a leaf
            // or a dead node.
            loop {
                if self.prune && self.top_completes_pattern() {
                    break;
                }
                if self.stack.len() == self.n {
                    if self.prune || self.avoids_all() {
                        return Some(self.stack.clone());
                    }
                    break;
                }
                self.stack.push(0);
            }
        }
    }
}
