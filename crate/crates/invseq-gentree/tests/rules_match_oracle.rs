use std::collections::BTreeMap;

use invseq_core::{contains_using_last, PatternSet};
use invseq_gentree::{
    grow_right_tree, rule_000_100, rule_000_102, rule_101_102_201, rule_102_201, rule_102_210,
    run_rule, run_rule_levels, Label,
};
use invseq_oracle::{count_inv_seqs, enumerate_inv_seqs_pruned};
use num_bigint::BigInt;

fn set(s: &str) -> PatternSet {
    s.parse().unwrap()
}

#[test]
fn rule_totals_match_oracle_counts() {
    let cases = [
        (rule_000_100(), "000,100"),
        (rule_102_201(), "102,201"),
        (rule_000_102(), "000,102"),
        (rule_102_210(), "102,210"),
        (rule_101_102_201(), "101,102,201"),
    ];
    for (rule, key) in cases {
        let totals = run_rule(&rule, 9).unwrap();
        let patterns = set(key);
        for (n, total) in totals.iter().enumerate() {
            assert_eq!(
                total,
                &BigInt::from(count_inv_seqs(n, 0, &patterns)),
                "rule {} at level {n}",
                rule.id()
            );
        }
    }
}

// The label of σ in the 000,100 tree is (a,b): a values extend σ above its
// maximum, b extend it weakly below. Check the whole level histogram.
#[test]
fn labels_of_rule_000_100_partition_the_avoiders() {
    let patterns = set("000,100");
    let levels = run_rule_levels(&rule_000_100(), 8).unwrap();
    for (n, level) in levels.iter().enumerate() {
        let mut histogram: BTreeMap<Label, BigInt> = BTreeMap::new();
        for sigma in enumerate_inv_seqs_pruned(n, 0, &patterns) {
            let max = sigma.iter().max().map_or(-1, |&m| m as i64);
            let a = n as i64 - max;
            let mut b = 0i64;
            for i in 0..=max {
                let mut extended = sigma.clone();
                extended.push(i as u64);
                if !patterns.iter().any(|p| contains_using_last(&extended, p)) {
                    b += 1;
                }
            }
            *histogram.entry(Label::new("a", vec![a, b])).or_default() += 1;
        }
        assert_eq!(histogram, level.counts, "level {n}");
    }
}

// Rebuild each level of the doubled rule from the two previous ones by
// direct summation, independently of the engine's sliding window.
#[test]
fn doubled_rule_levels_satisfy_the_two_step_recurrence() {
    let rule = rule_000_102();
    let levels = run_rule_levels(&rule, 9).unwrap();
    for n in 1..levels.len() {
        let mut expected: BTreeMap<Label, BigInt> = BTreeMap::new();
        let mut absorb = |source: &BTreeMap<Label, BigInt>, jump: u8| {
            for (label, count) in source {
                for prod in rule.produce(label) {
                    if prod.jump == jump && prod.mult > 0 {
                        *expected.entry(prod.label).or_default() +=
                            count * BigInt::from(prod.mult);
                    }
                }
            }
        };
        absorb(&levels[n - 1].counts, 1);
        if n >= 2 {
            absorb(&levels[n - 2].counts, 2);
        }
        assert_eq!(expected, levels[n].counts, "level {n}");
    }
}

#[test]
fn brute_tree_growth_matches_the_abstract_rule() {
    let grown = grow_right_tree(&set("000,100"), 6, 10_000_000).unwrap();
    let ruled = run_rule(&rule_000_100(), 6).unwrap();
    let ruled: Vec<u64> = ruled.iter().map(|b| u64::try_from(b).unwrap()).collect();
    assert_eq!(grown, ruled);
}
