//! Small-graph enumeration, random generators and the exhaustive verifiers
//! behind `gpauto enumerate --check`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{all_partial_conjugations, aut_equal, compose, pc_zero, AutZeroElement};
use crate::graph::{LabeledGraph, OrderValue, VertexSet};
use crate::structure::{classify_pair, component_coincidence, sil_cover_check, vcd_out};

/// Largest `n` accepted by the exhaustive verifiers (2^21 labeled graphs).
pub const MAX_ENUMERATION_N: usize = 7;

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect()
}

/// Every labeled graph on `n` vertices with the given uniform order, in
/// edge-mask order.
pub fn all_graphs(n: usize, order: OrderValue) -> impl Iterator<Item = LabeledGraph> {
    let pairs = vertex_pairs(n);
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        LabeledGraph::uniform(n, order, &edges).expect("valid edge list")
    })
}

/// Connected labeled graphs on `n` vertices.
pub fn connected_graphs(n: usize, order: OrderValue) -> Vec<LabeledGraph> {
    let pairs = vertex_pairs(n);
    (0..1u64 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = LabeledGraph::uniform(n, order, &edges).expect("valid edge list");
            g.is_connected().then_some(g)
        })
        .collect()
}

/// All assignments of orders from `choices` to `n` vertices.
pub fn order_labelings(n: usize, choices: &[OrderValue]) -> Vec<Vec<OrderValue>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}

/// Uniform random labeled tree via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, order: OrderValue, rng: &mut R) -> LabeledGraph {
    assert!(n >= 1);
    if n <= 2 {
        let edges: Vec<_> = if n == 2 { vec![(1, 2)] } else { vec![] };
        return LabeledGraph::uniform(n, order, &edges).expect("valid tree");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let mut degree = vec![1usize; n + 1];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    LabeledGraph::uniform(n, order, &edges).expect("valid tree")
}

/// Erdős–Rényi graph with per-vertex orders drawn from `orders`.
pub fn random_graph<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    orders: &[OrderValue],
    rng: &mut R,
) -> LabeledGraph {
    let edges: Vec<_> = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    let labels = (0..n)
        .map(|_| *orders.choose(rng).expect("non-empty order list"))
        .collect();
    LabeledGraph::new(labels, &edges).expect("valid random graph")
}

/// Exhaustive properties checked over all connected graphs with all orders 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Predicted commutation from the thirteen cases matches brute force for
    /// every pair of partial conjugations; case 13 never occurs inside `P0`.
    Classification,
    /// No SIL iff every pair in `P0` commutes.
    Sil,
    /// For `χ_{iK} ∈ P0`: `1 ∉ K`, and `2 ∉ K` when `d(v1, vi) ≤ 1`.
    MinimalDomains,
    /// Without a SIL, distance-two pairs cover the graph.
    Cover,
    /// Common components of star complements agree with separated
    /// components of link intersections.
    Coincidence,
    /// For trees, `|V₁| − 2 = Σ max(0, |L_i| − 2)`.
    Vcd,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Classification,
        Check::Sil,
        Check::MinimalDomains,
        Check::Cover,
        Check::Coincidence,
        Check::Vcd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Classification => "classification",
            Check::Sil => "sil",
            Check::MinimalDomains => "minimal-domains",
            Check::Cover => "cover",
            Check::Coincidence => "coincidence",
            Check::Vcd => "vcd",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check `{s}`; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub max_n: usize,
    pub graphs: usize,
    /// Individual assertions evaluated (pairs, elements or vertex pairs).
    pub items: usize,
    /// Occurrences of each of the thirteen cases, index 0 unused.
    /// Only filled by the classification check.
    pub case_counts: Vec<usize>,
    /// Up to 20 failure descriptions; `failure_count` has the total.
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Default)]
struct Tally {
    graphs: usize,
    items: usize,
    cases: [usize; 14],
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    fn fail(&mut self, g: &LabeledGraph, what: String) {
        self.failure_count += 1;
        if self.failures.len() < 20 {
            self.failures.push(format!("{:?}: {what}", g.edges()));
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.items += other.items;
        for (a, b) in self.cases.iter_mut().zip(other.cases) {
            *a += b;
        }
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < 20 {
                self.failures.push(f);
            }
        }
        self
    }
}

fn commutes(g: &LabeledGraph, a: &AutZeroElement, b: &AutZeroElement) -> bool {
    aut_equal(g, &compose(g, a, b), &compose(g, b, a))
}

fn check_graph(check: Check, g: &LabeledGraph) -> Tally {
    let mut t = Tally {
        graphs: 1,
        ..Tally::default()
    };
    match check {
        Check::Classification => {
            let pcs = all_partial_conjugations(g);
            let p0 = pc_zero(g);
            let auts: Vec<_> = pcs.iter().map(|p| p.to_aut(g)).collect();
            for (x, a) in pcs.iter().enumerate() {
                for (y, b) in pcs.iter().enumerate() {
                    t.items += 1;
                    let case = classify_pair(g, a, b).expect("connected");
                    t.cases[case.case_number as usize] += 1;
                    let actual = commutes(g, &auts[x], &auts[y]);
                    if actual != case.predicted_commute {
                        t.fail(g, format!("{a} {b} case {} brute {actual}", case.case_number));
                    }
                    if case.case_number == 13 && p0.contains(a) && p0.contains(b) {
                        t.fail(g, format!("{a} {b} case 13 inside P0"));
                    }
                }
            }
        }
        Check::Sil => {
            let p0 = pc_zero(g);
            let auts: Vec<_> = p0.iter().map(|p| p.to_aut(g)).collect();
            let all_commute = (0..auts.len())
                .all(|x| (x + 1..auts.len()).all(|y| commutes(g, &auts[x], &auts[y])));
            t.items += 1;
            if g.find_sil().is_none() != all_commute {
                t.fail(g, format!("sil {:?} but all commute = {all_commute}", g.find_sil()));
            }
        }
        Check::MinimalDomains => {
            for pc in pc_zero(g) {
                t.items += 1;
                let near = g.distance(1, pc.operator).is_some_and(|d| d <= 1);
                if pc.domain.contains(1) || (near && pc.domain.contains(2)) {
                    t.fail(g, format!("{pc}"));
                }
            }
        }
        Check::Cover => {
            if g.find_sil().is_none() {
                for i in 1..=g.n() {
                    for j in i + 1..=g.n() {
                        if g.distance(i, j) == Some(2) {
                            t.items += 1;
                            if sil_cover_check(g, i, j) != Ok(true) {
                                t.fail(g, format!("cover fails for {i}, {j}"));
                            }
                        }
                    }
                }
            }
        }
        Check::Coincidence => {
            for i in 1..=g.n() {
                for j in i + 1..=g.n() {
                    if g.distance(i, j).is_some_and(|d| d < 2) {
                        continue;
                    }
                    let common = g.link_of(i).intersection(g.link_of(j));
                    let mut candidates: Vec<VertexSet> =
                        g.components_minus_star(i).expect("in range");
                    candidates.extend(g.components_minus_star(j).expect("in range"));
                    candidates.extend(g.components_of(&g.vertices().difference(&common)));
                    candidates.sort();
                    candidates.dedup();
                    for r in candidates {
                        t.items += 1;
                        // Disagreement panics inside; catch it as a failure.
                        let ok = std::panic::catch_unwind(|| component_coincidence(g, i, j, &r));
                        if ok.is_err() {
                            t.fail(g, format!("coincidence fails for {i}, {j}, {r}"));
                        }
                    }
                }
            }
        }
        Check::Vcd => {
            if g.is_tree() && g.n() >= 2 {
                t.items += 1;
                if !vcd_identity(g) {
                    t.fail(g, "leaf identity".to_string());
                }
            }
        }
    }
    t
}

/// `|V₁| − 2 = Σ max(0, |L_i| − 2)` computed from scratch, and agreeing
/// with [`vcd_out`].
pub fn vcd_identity(g: &LabeledGraph) -> bool {
    let leaves = (1..=g.n()).filter(|&i| g.valence(i) == 1).count();
    let sum: usize = (1..=g.n()).map(|i| g.valence(i).saturating_sub(2)).sum();
    leaves == sum + 2 && vcd_out(g) == Some(sum)
}

/// Runs `check` over every connected graph on `1..=max_n` vertices, all
/// orders 2, in parallel.
pub fn run_check(check: Check, max_n: usize) -> CheckSummary {
    assert!(
        max_n <= MAX_ENUMERATION_N,
        "enumeration is limited to {MAX_ENUMERATION_N} vertices"
    );
    let two = OrderValue::Finite(2);
    let tally = (1..=max_n)
        .flat_map(|n| connected_graphs(n, two))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|g| check_graph(check, g))
        .reduce(Tally::default, Tally::merge);
    CheckSummary {
        check,
        max_n,
        graphs: tally.graphs,
        items: tally.items,
        case_counts: if check == Check::Classification {
            tally.cases.to_vec()
        } else {
            Vec::new()
        },
        failures: tally.failures,
        failure_count: tally.failure_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connected_graph_counts() {
        // Labeled connected graphs: 1, 1, 4, 38, 728.
        let two = OrderValue::Finite(2);
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n, two).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert_eq!(all_graphs(4, two).count(), 64);
    }

    #[test]
    fn labelings() {
        let ch = [OrderValue::Finite(2), OrderValue::Finite(3)];
        let all = order_labelings(3, &ch);
        assert_eq!(all.len(), 8);
        assert_eq!(all[1], vec![ch[0], ch[0], ch[1]]);
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..15 {
            for _ in 0..20 {
                let t = random_tree(n, OrderValue::Finite(2), &mut rng);
                assert!(t.is_tree(), "{t}");
            }
        }
    }

    #[test]
    fn small_checks_pass() {
        for c in Check::ALL {
            let s = run_check(c, 4);
            assert!(s.passed(), "{c}: {:?}", s.failures);
        }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>(), Ok(c));
        }
        assert!("nope".parse::<Check>().is_err());
    }
}
