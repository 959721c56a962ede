use crate::engine::{Label, Production, SuccessionRule};

fn all(_: &str) -> bool {
    true
}

fn lab(kind: &'static str, params: &[i64]) -> Label {
    Label::new(kind, params.to_vec())
}

/// Rule with axiom (0) and production (n) ⇝ (n+1)^{n+1}; level n holds n!
/// nodes.
pub fn rule_factorial() -> SuccessionRule {
    SuccessionRule::new(
        "omega.factorial",
        lab("n", &[0]),
        vec![("n", 1)],
        false,
        all,
        Box::new(|l| {
            let n = l.params[0];
            vec![Production::child(lab("n", &[n + 1]), (n + 1) as u64)]
        }),
    )
}

/// Rule with axiom (1) and production (k) ⇝ (i) for i ∈ [2, k+1]; level n
/// holds the n-th Catalan number of nodes.
pub fn rule_cat() -> SuccessionRule {
    SuccessionRule::new(
        "omega.cat",
        lab("k", &[1]),
        vec![("k", 1)],
        false,
        all,
        Box::new(|l| {
            let k = l.params[0];
            (2..=k + 1)
                .map(|i| Production::child(lab("k", &[i]), 1))
                .collect()
        }),
    )
}

/// Counts inversion sequences avoiding 000 and 100.
///
/// Labels (a,b) track how many values above the maximum (a) and weakly below
/// it (b) can extend the sequence. Axiom (1,0);
/// (a,b) ⇝ (a+1,b−1)^b and (a+1−j,b+j) for j ∈ [1,a].
pub fn rule_000_100() -> SuccessionRule {
    SuccessionRule::new(
        "omega.000_100",
        lab("a", &[1, 0]),
        vec![("a", 2)],
        false,
        all,
        Box::new(|l| {
            let (a, b) = (l.params[0], l.params[1]);
            let mut out = Vec::new();
            if b > 0 {
                out.push(Production::child(lab("a", &[a + 1, b - 1]), b as u64));
            }
            for j in 1..=a {
                out.push(Production::child(lab("a", &[a + 1 - j, b + j]), 1));
            }
            out
        }),
    )
}

/// Counts inversion sequences avoiding 102 and 201.
///
/// Kind a holds nondecreasing sequences by (size, max); kinds b1/b2/b3 hold
/// the stages through which the leftmost occurrence of 101 is committed,
/// by second-largest value; kind c holds sequences with a strictly smaller
/// last value. Kinds b1 and b2 stand for objects whose commitment is not
/// realized yet, so only a, b3 and c are reported.
pub fn rule_102_201() -> SuccessionRule {
    SuccessionRule::new(
        "omega.102_201",
        lab("a", &[0, 0]),
        vec![("a", 2), ("b1", 1), ("b2", 1), ("b3", 1), ("c", 1)],
        false,
        |kind| kind != "b1" && kind != "b2",
        Box::new(|l| {
            let mut out = Vec::new();
            match l.kind {
                "a" => {
                    let (n, m) = (l.params[0], l.params[1]);
                    for i in m..=n {
                        out.push(Production::child(lab("a", &[n + 1, i]), 1));
                    }
                    for i in m..=n - 1 {
                        out.push(Production::child(lab("b1", &[i]), (n - i) as u64));
                    }
                    for i in 0..=m - 1 {
                        out.push(Production::child(lab("c", &[i]), 1));
                    }
                }
                "b1" => {
                    let s = l.params[0];
                    out.push(Production::child(lab("b1", &[s]), 1));
                    out.push(Production::child(lab("b2", &[s]), 1));
                }
                "b2" => {
                    let s = l.params[0];
                    out.push(Production::child(lab("b2", &[s]), 1));
                    out.push(Production::child(lab("b3", &[s]), 1));
                }
                "b3" => {
                    let s = l.params[0];
                    out.push(Production::child(lab("b3", &[s]), 2));
                    for i in 0..=s - 1 {
                        out.push(Production::child(lab("c", &[i]), 1));
                    }
                }
                _ => {
                    let ell = l.params[0];
                    for i in 0..=ell {
                        out.push(Production::child(lab("c", &[i]), 1));
                    }
                }
            }
            out
        }),
    )
}

/// Counts inversion sequences avoiding 000 and 102 through a doubled rule:
/// a node may place children one or two levels down.
///
/// The single parameter is the number of sites where the next strictly
/// larger value can go. Axiom (1); for j ∈ [1,s]:
/// (s) ⇝¹ (j)^{s+1−j} and (s) ⇝² (j+1)^{s+1−j} (j)^{C(s+1−j,2)}.
pub fn rule_000_102() -> SuccessionRule {
    SuccessionRule::new(
        "omega.000_102",
        lab("s", &[1]),
        vec![("s", 1)],
        true,
        all,
        Box::new(|l| {
            let s = l.params[0];
            let mut out = Vec::new();
            for j in 1..=s {
                let r = (s + 1 - j) as u64;
                out.push(Production::child(lab("s", &[j]), r));
                out.push(Production::skip_child(lab("s", &[j + 1]), r));
                out.push(Production::skip_child(lab("s", &[j]), r * (r - 1) / 2));
            }
            out
        }),
    )
}

/// Counts inversion sequences avoiding 102 and 210.
///
/// Sequences grow by inserting entries in increasing order of value; the
/// parameter is a bounce statistic measured at the rightmost descent, and
/// the kind records how many descents the sequence has committed to
/// (a: none, b: one, c: at least two).
pub fn rule_102_210() -> SuccessionRule {
    SuccessionRule::new(
        "omega.102_210",
        lab("a", &[0]),
        vec![("a", 1), ("b1", 1), ("b2", 1), ("c1", 1), ("c2", 1)],
        false,
        all,
        Box::new(|l| {
            let k = l.params[0];
            let mut out = Vec::new();
            match l.kind {
                "a" => {
                    for i in 1..=k + 1 {
                        out.push(Production::child(lab("a", &[i]), 1));
                    }
                    for i in 1..=k - 1 {
                        out.push(Production::child(lab("b1", &[i]), (k - i) as u64));
                    }
                }
                "b1" => {
                    out.push(Production::child(lab("b1", &[k]), 1));
                    for i in 1..=k + 1 {
                        out.push(Production::child(lab("b2", &[i]), 1));
                    }
                    for i in 1..=k - 1 {
                        out.push(Production::child(lab("c1", &[i]), 1));
                    }
                }
                "b2" => {
                    for i in 1..=k + 1 {
                        out.push(Production::child(lab("b2", &[i]), 1));
                    }
                }
                "c1" => {
                    out.push(Production::child(lab("c1", &[k]), 1));
                    for i in 1..=k {
                        out.push(Production::child(lab("c2", &[i]), 1));
                    }
                }
                _ => {
                    for i in 1..=k {
                        out.push(Production::child(lab("c2", &[i]), 1));
                    }
                }
            }
            out
        }),
    )
}

/// Counts unimodal inversion sequences, the avoiders of 101, 102 and 201.
///
/// Kind a holds nondecreasing sequences by (size, max); kind c holds
/// sequences already decreasing after their maximum, by last value.
pub fn rule_101_102_201() -> SuccessionRule {
    SuccessionRule::new(
        "omega.101_102_201",
        lab("a", &[0, 0]),
        vec![("a", 2), ("c", 1)],
        false,
        all,
        Box::new(|l| {
            let mut out = Vec::new();
            match l.kind {
                "a" => {
                    let (n, m) = (l.params[0], l.params[1]);
                    for i in m..=n {
                        out.push(Production::child(lab("a", &[n + 1, i]), 1));
                    }
                    for i in 0..=m - 1 {
                        out.push(Production::child(lab("c", &[i]), 1));
                    }
                }
                _ => {
                    let ell = l.params[0];
                    for i in 0..=ell {
                        out.push(Production::child(lab("c", &[i]), 1));
                    }
                }
            }
            out
        }),
    )
}

/// Stable identifiers of the built-in rules, in presentation order.
pub const RULE_IDS: &[&str] = &[
    "omega.factorial",
    "omega.cat",
    "omega.000_100",
    "omega.102_201",
    "omega.000_102",
    "omega.102_210",
    "omega.101_102_201",
];

/// Looks up a built-in rule by its stable identifier.
pub fn rule_by_id(id: &str) -> Option<SuccessionRule> {
    match id {
        "omega.factorial" => Some(rule_factorial()),
        "omega.cat" => Some(rule_cat()),
        "omega.000_100" => Some(rule_000_100()),
        "omega.102_201" => Some(rule_102_201()),
        "omega.000_102" => Some(rule_000_102()),
        "omega.102_210" => Some(rule_102_210()),
        "omega.101_102_201" => Some(rule_101_102_201()),
        _ => None,
    }
}
