use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

/// A node label: a kind tag plus a tuple of integer parameters whose arity
/// is fixed per kind within a rule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub kind: &'static str,
    pub params: Vec<i64>,
}

impl Label {
    pub fn new(kind: &'static str, params: Vec<i64>) -> Self {
        Label { kind, params }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.kind)?;
        for p in &self.params {
            write!(f, ",{p}")?;
        }
        write!(f, ")")
    }
}

/// One production line: `mult` children labelled `label`, placed `jump`
/// levels below the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    pub label: Label,
    pub jump: u8,
    pub mult: u64,
}

impl Production {
    pub fn child(label: Label, mult: u64) -> Self {
        Production {
            label,
            jump: 1,
            mult,
        }
    }

    pub fn skip_child(label: Label, mult: u64) -> Self {
        Production {
            label,
            jump: 2,
            mult,
        }
    }
}

type Produce = Box<dyn Fn(&Label) -> Vec<Production>>;

/// Axiom, production, and counting policy of one succession rule.
///
/// `counted` selects the kinds whose node counts contribute to the level
/// totals; the others are carried through the recurrence but not reported.
pub struct SuccessionRule {
    id: &'static str,
    axiom: Label,
    arities: Vec<(&'static str, usize)>,
    doubled: bool,
    counted: fn(&str) -> bool,
    produce: Produce,
}

impl SuccessionRule {
    pub fn new(
        id: &'static str,
        axiom: Label,
        arities: Vec<(&'static str, usize)>,
        doubled: bool,
        counted: fn(&str) -> bool,
        produce: Produce,
    ) -> Self {
        SuccessionRule {
            id,
            axiom,
            arities,
            doubled,
            counted,
            produce,
        }
    }

    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn axiom(&self) -> &Label {
        &self.axiom
    }

    pub fn is_counted(&self, kind: &str) -> bool {
        (self.counted)(kind)
    }

    pub fn produce(&self, label: &Label) -> Vec<Production> {
        (self.produce)(label)
    }

    fn validate(&self, label: &Label) -> Result<(), RuleError> {
        match self.arities.iter().find(|(k, _)| *k == label.kind) {
            None => Err(RuleError::UnknownKind {
                rule: self.id,
                kind: label.kind,
            }),
            Some(&(_, arity)) if arity != label.params.len() => Err(RuleError::WrongArity {
                kind: label.kind,
                expected: arity,
                got: label.params.len(),
            }),
            Some(_) => Ok(()),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("rule {rule} produced a label of undeclared kind {kind}")]
    UnknownKind {
        rule: &'static str,
        kind: &'static str,
    },
    #[error("label kind {kind} carries {got} parameters, expected {expected}")]
    WrongArity {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("rule {rule} produced jump {jump}; only 1 is allowed here, 2 in doubled rules")]
    BadJump { rule: &'static str, jump: u8 },
}

/// Node counts per label at one level of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDistribution {
    pub level: usize,
    pub counts: BTreeMap<Label, BigInt>,
}

impl LevelDistribution {
    /// Number of nodes whose kind the rule reports.
    pub fn total(&self, rule: &SuccessionRule) -> BigInt {
        self.counts
            .iter()
            .filter(|(label, _)| rule.is_counted(label.kind))
            .map(|(_, count)| count)
            .sum()
    }

    /// Count of one label, zero when absent.
    pub fn count(&self, label: &Label) -> BigInt {
        self.counts.get(label).cloned().unwrap_or_default()
    }
}

/// Label-count distributions for levels `0..=n_max`.
pub fn run_rule_levels(
    rule: &SuccessionRule,
    n_max: usize,
) -> Result<Vec<LevelDistribution>, RuleError> {
    rule.validate(&rule.axiom)?;
    let mut levels: Vec<LevelDistribution> = Vec::with_capacity(n_max + 1);
    let mut root = BTreeMap::new();
    root.insert(rule.axiom.clone(), BigInt::from(1));
    levels.push(LevelDistribution {
        level: 0,
        counts: root,
    });
    // Contributions emitted two levels down while processing the previous
    // level; consumed when its target level is assembled.
    let mut carry: BTreeMap<Label, BigInt> = BTreeMap::new();
    for n in 0..n_max {
        let mut next = carry;
        carry = BTreeMap::new();
        for (label, count) in &levels[n].counts {
            for prod in rule.produce(label) {
                rule.validate(&prod.label)?;
                let target = match prod.jump {
                    1 => &mut next,
                    2 if rule.doubled => &mut carry,
                    jump => {
                        return Err(RuleError::BadJump {
                            rule: rule.id,
                            jump,
                        })
                    }
                };
                if prod.mult == 0 {
                    continue;
                }
                let add = count * BigInt::from(prod.mult);
                *target.entry(prod.label).or_default() += add;
            }
        }
        levels.push(LevelDistribution {
            level: n + 1,
            counts: next,
        });
    }
    Ok(levels)
}

/// Level totals for `0..=n_max`: term n counts the nodes of reported kinds
/// at level n.
pub fn run_rule(rule: &SuccessionRule, n_max: usize) -> Result<Vec<BigInt>, RuleError> {
    let levels = run_rule_levels(rule, n_max)?;
    Ok(levels.iter().map(|d| d.total(rule)).collect())
}
