//! Structural analysis of `Out⁰W` and related graph criteria.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::aut::{
    all_partial_conjugations, aut_equal, evaluate, l_set, link_points, pc_zero, AutLetter,
    AutWord, PartialConjugation,
};
use crate::error::{Error, Result};
use crate::graph::{
    LabeledGraph, OrderValue, PredicateReport, SilWitness, TriState, VertexSet,
    DEFAULT_AUTOMORPHISM_BOUND,
};

/// One of the thirteen relative positions of two partial conjugations on a
/// connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PairCase {
    pub case_number: u8,
    pub predicted_commute: bool,
}

impl PairCase {
    pub fn new(case_number: u8) -> Self {
        Self {
            case_number,
            predicted_commute: matches!(case_number, 1 | 5 | 7 | 8 | 10 | 11 | 12),
        }
    }
}

pub fn classify_pair(
    g: &LabeledGraph,
    a: &PartialConjugation,
    b: &PartialConjugation,
) -> Result<PairCase> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (i, j) = (a.operator, b.operator);
    let (k, q) = (&a.domain, &b.domain);
    let d = g.distance(i, j).expect("connected");
    let vi_in_q = q.contains(i);
    let vj_in_k = k.contains(j);
    let disjoint = k.is_disjoint(q);
    let case = match (d, vi_in_q, vj_in_k) {
        (0 | 1, _, _) => 1,
        (2, true, true) => {
            if disjoint {
                2
            } else {
                3
            }
        }
        (2, true, false) if disjoint => 4,
        (2, true, false) if k.is_subset(q) => 5,
        (2, false, true) if disjoint => 6,
        (2, false, true) if q.is_subset(k) => 7,
        (2, false, false) if disjoint => 8,
        (2, false, false) if k == q => 9,
        (_, false, false) if d >= 3 && disjoint => 10,
        (_, true, false) if d >= 3 && k.is_subset(q) => 11,
        (_, false, true) if d >= 3 && q.is_subset(k) => 12,
        (_, true, true) if d >= 3 && k.union(q) == g.vertices() => 13,
        _ => unreachable!("thirteen cases are exhaustive: {a} {b} d={d}"),
    };
    Ok(PairCase::new(case))
}

/// Brute force: do the two automorphisms commute?
pub fn verify_pair_commutation(
    g: &LabeledGraph,
    a: &PartialConjugation,
    b: &PartialConjugation,
) -> bool {
    let ab = AutWord::from(vec![AutLetter::new(a.clone()), AutLetter::new(b.clone())]);
    let ba = AutWord::from(vec![AutLetter::new(b.clone()), AutLetter::new(a.clone())]);
    aut_equal(g, &evaluate(g, &ab), &evaluate(g, &ba))
}

/// How a non-commuting pair was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessRule {
    /// `(χ_{iR}, χ_{jR})` for the separating component `R`.
    SharedDomain,
    /// `(χ_{iK}, χ_{jQ})` with `K ∋ v_j`, `Q ∋ v_i`.
    OppositeComponents,
    /// The minimal-element rule named a pair outside `𝒫⁰`; the pair was
    /// found by scanning `𝒫⁰ × 𝒫⁰`.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonCommutingPair {
    pub first: PartialConjugation,
    pub second: PartialConjugation,
    pub rule: WitnessRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Out0Abelian {
    pub abelian: bool,
    /// Whether the analysis ran on the cone over a disconnected graph.
    pub coned: bool,
    pub witness: Option<NonCommutingPair>,
}

/// `Out⁰W` is abelian iff there is no separating intersection of links.
/// Otherwise a concrete non-commuting pair from `𝒫⁰` is produced.
pub fn out0_is_abelian(g: &LabeledGraph) -> Out0Abelian {
    let coned = !g.is_connected();
    let h = if coned {
        g.cone(OrderValue::Finite(2)).expect("2 is a prime power")
    } else {
        g.clone()
    };
    let Some(sil) = h.find_sil() else {
        return Out0Abelian {
            abelian: true,
            coned,
            witness: None,
        };
    };
    // The cone vertex has no partial conjugations and does not change the
    // components of the other stars, so the pair is valid for `g` too.
    Out0Abelian {
        abelian: false,
        coned,
        witness: Some(sil_witness_pair(&h, &sil)),
    }
}

fn sil_witness_pair(g: &LabeledGraph, sil: &SilWitness) -> NonCommutingPair {
    let SilWitness { i, j, r } = sil;
    let common = g.link_of(*i).intersection(g.link_of(*j));
    let least = VertexSet::min(&g.vertices().difference(&common)).expect("v_i lies outside");
    let component = |op: usize, v: usize| -> PartialConjugation {
        let dom = g
            .components_minus_star(op)
            .expect("index in range")
            .into_iter()
            .find(|c| c.contains(v))
            .expect("v lies outside the star");
        PartialConjugation {
            operator: op,
            domain: dom,
        }
    };
    let (first, second, rule) = if !r.contains(least) {
        let a = PartialConjugation {
            operator: *i,
            domain: r.clone(),
        };
        let b = PartialConjugation {
            operator: *j,
            domain: r.clone(),
        };
        (a, b, WitnessRule::SharedDomain)
    } else {
        (component(*i, *j), component(*j, *i), WitnessRule::OppositeComponents)
    };
    let p0 = pc_zero(g);
    if p0.contains(&first) && p0.contains(&second) {
        debug_assert!(!verify_pair_commutation(g, &first, &second));
        return NonCommutingPair {
            first,
            second,
            rule,
        };
    }
    for (x, a) in p0.iter().enumerate() {
        for b in &p0[x + 1..] {
            if !verify_pair_commutation(g, a, b) {
                return NonCommutingPair {
                    first: a.clone(),
                    second: b.clone(),
                    rule: WitnessRule::Search,
                };
            }
        }
    }
    unreachable!("a separating intersection of links yields a non-commuting pair in P0")
}

/// For finite orders: `Out W` is finite iff there is no SIL.
pub fn out_w_finite(g: &LabeledGraph) -> Option<bool> {
    g.all_finite().then(|| g.find_sil().is_none())
}

/// Checks that `r` being a common component of `Γ∖S_i` and `Γ∖S_j` agrees
/// with `r` being a component of `Γ∖(L_i∩L_j)` avoiding `v_i, v_j`.
pub fn component_coincidence(g: &LabeledGraph, i: usize, j: usize, r: &VertexSet) -> Result<bool> {
    g.check_index(i)?;
    g.check_index(j)?;
    if g.distance(i, j).is_some_and(|d| d < 2) {
        return Err(Error::DistancePrecondition { i, j });
    }
    let in_both = g.components_minus_star(i)?.contains(r) && g.components_minus_star(j)?.contains(r);
    let common = g.link_of(i).intersection(g.link_of(j));
    let separated = !r.contains(i)
        && !r.contains(j)
        && g.components_of(&g.vertices().difference(&common)).contains(r);
    assert_eq!(in_both, separated, "component coincidence fails for {i}, {j}, {r}");
    Ok(in_both)
}

/// Without a SIL, `Γ = K_j ∪ Q_i ∪ (L_i ∩ L_j)` for `d(v_i, v_j) = 2`.
pub fn sil_cover_check(g: &LabeledGraph, i: usize, j: usize) -> Result<bool> {
    g.check_index(i)?;
    g.check_index(j)?;
    if g.distance(i, j) != Some(2) {
        return Err(Error::DistancePrecondition { i, j });
    }
    if g.find_sil().is_some() {
        return Err(Error::SilPresent);
    }
    let containing = |op: usize, v: usize| {
        g.components_minus_star(op)
            .expect("index in range")
            .into_iter()
            .find(|c| c.contains(v))
            .expect("distance two puts v outside the star")
    };
    let cover = containing(i, j)
        .union(&containing(j, i))
        .union(&g.link_of(i).intersection(g.link_of(j)));
    Ok(cover == g.vertices())
}

/// Shape of `⟨ℒ_i⁰⟩` for a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexCase {
    IsomorphicToOutLink,
    /// `ℤ_{m(k₁)} × Out⁰W(L_i)` with `k₁ = min L_i`.
    CyclicFactorTimesOutLink { vertex: usize, order: OrderValue },
}

impl VertexCase {
    /// The isomorphism type of `⟨ℒ_i⁰⟩`, dropping trivial factors.
    /// `Out⁰W(L_i)` is trivial exactly when `|L_i| ≤ 2`.
    fn shape(self, i: usize, out_link_trivial: bool) -> String {
        let link = format!("Out0 W(L{i})");
        match (self, out_link_trivial) {
            (VertexCase::IsomorphicToOutLink, true) => "trivial".to_string(),
            (VertexCase::IsomorphicToOutLink, false) => link,
            (VertexCase::CyclicFactorTimesOutLink { vertex, .. }, true) => format!("Z_m({vertex})"),
            (VertexCase::CyclicFactorTimesOutLink { vertex, .. }, false) => {
                format!("Z_m({vertex}) x {link}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AbKind {
    /// All orders finite: `Ab` is a finite abelian group.
    Finite,
    /// All orders infinite: `Ab` is free abelian.
    FreeAbelian,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    /// `ℒ_i⁰` for each vertex; empty for leaves.
    pub l0_partition: BTreeMap<usize, Vec<PartialConjugation>>,
    pub per_vertex_case: BTreeMap<usize, VertexCase>,
    /// Isomorphism type of each `⟨ℒ_i⁰⟩`.
    pub shapes: BTreeMap<usize, String>,
    /// Orders of the cyclic factors of `Ab`, one per vertex with a cyclic
    /// case, in vertex order.
    pub ab_factor: Vec<OrderValue>,
    pub ab_kind: AbKind,
    /// Whether `v_1` is a leaf and indices increase with distance from it.
    pub bfs_indexed: bool,
}

pub fn tree_decomposition(g: &LabeledGraph) -> Result<TreeDecomposition> {
    if g.n() < 3 || !g.is_tree() {
        return Err(Error::NotATree);
    }
    let p0 = pc_zero(g);
    let mut l0_partition = BTreeMap::new();
    let mut per_vertex_case = BTreeMap::new();
    let mut shapes = BTreeMap::new();
    let mut ab_factor = Vec::new();
    let mut covered = 0;
    for i in 1..=g.n() {
        let l0: Vec<PartialConjugation> = l_set(g, i)?
            .into_iter()
            .filter(|pc| p0.contains(pc))
            .collect();
        covered += l0.len();
        let link = g.link_of(i).to_vec();
        let k1 = link[0];
        let least_outside = VertexSet::min(&g.vertices().difference(&g.star_of(k1)));
        let case = if link.len() == 1 || least_outside == Some(link[1]) {
            VertexCase::IsomorphicToOutLink
        } else {
            ab_factor.push(g.order(k1));
            VertexCase::CyclicFactorTimesOutLink {
                vertex: k1,
                order: g.order(k1),
            }
        };
        shapes.insert(i, case.shape(i, link.len() <= 2));
        l0_partition.insert(i, l0);
        per_vertex_case.insert(i, case);
    }
    // Each element of P0 has exactly one link point in a tree.
    assert_eq!(covered, p0.len(), "link points do not partition P0");
    let ab_kind = if g.all_finite() {
        AbKind::Finite
    } else if g.all_infinite() {
        AbKind::FreeAbelian
    } else {
        AbKind::Mixed
    };
    Ok(TreeDecomposition {
        l0_partition,
        per_vertex_case,
        shapes,
        ab_factor,
        ab_kind,
        bfs_indexed: bfs_indexed(g),
    })
}

fn bfs_indexed(g: &LabeledGraph) -> bool {
    if g.valence(1) != 1 {
        return false;
    }
    let d: Vec<usize> = (1..=g.n()).map(|v| g.distance(1, v).unwrap_or(usize::MAX)).collect();
    d.windows(2).all(|w| w[0] <= w[1])
}

/// `|V₁| − 2` for trees with finite orders, cross-checked against
/// `Σ max(0, |L_i| − 2)`.
pub fn vcd_out(g: &LabeledGraph) -> Option<usize> {
    if g.n() < 2 || !g.is_tree() || !g.all_finite() {
        return None;
    }
    let leaves = g.leaves().len();
    let sum: usize = (1..=g.n()).map(|i| g.valence(i).saturating_sub(2)).sum();
    assert_eq!(sum + 2, leaves, "leaf count identity fails");
    Some(leaves - 2)
}

/// For finite orders: `Aut W` is hyperbolic iff no SIL and every 4-circuit
/// has a chord.
pub fn aut_w_hyperbolic(g: &LabeledGraph) -> Option<bool> {
    g.all_finite()
        .then(|| g.find_sil().is_none() && g.four_cycle_chord_ok())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplittingVerdict {
    /// Right-angled Coxeter group meeting all three conditions.
    AllSplit,
    /// General orders meeting the conditions, with the star condition in its
    /// conjectured divisibility form.
    Conjectural,
    /// Some condition fails or could not be checked; the criterion is only
    /// sufficient, so nothing follows.
    Unknown,
}

impl fmt::Display for SplittingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplittingVerdict::AllSplit => "all extensions split",
            SplittingVerdict::Conjectural => "all extensions split (conjectural)",
            SplittingVerdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSplitting {
    pub racg: bool,
    /// `Γ ∖ S_i ≠ ∅` for every `i` (trivial center).
    pub condition1: bool,
    /// Every labeled-graph automorphism satisfies `f(Δ_i) = Δ_i`; absent when
    /// the graph exceeds the automorphism search bound.
    pub condition2: Option<bool>,
    /// `S_i ⊆ S_j ⇒ S_i = S_j`, restricted to pairs with `m(j) | m(i)` or
    /// `m(i) = ∞` (no restriction for right-angled Coxeter groups).
    pub condition3: bool,
    pub verdict: SplittingVerdict,
}

pub fn extension_splitting_check(g: &LabeledGraph) -> ExtensionSplitting {
    let n = g.n();
    let condition1 = (1..=n).all(|i| g.valence(i) + 1 < n);
    let deltas: Vec<VertexSet> = (1..=n).map(|i| g.delta_class(i).expect("in range")).collect();
    let condition2 = g.automorphisms(DEFAULT_AUTOMORPHISM_BOUND).ok().map(|auts| {
        auts.iter().all(|p| {
            deltas
                .iter()
                .all(|d| d.iter().map(|v| p[v - 1]).collect::<VertexSet>() == *d)
        })
    });
    let condition3 = (1..=n).all(|i| {
        (1..=n).all(|j| {
            let si = g.star_of(i);
            let sj = g.star_of(j);
            let applies = i != j && si.is_subset(&sj) && g.order(j).divides(&g.order(i));
            !applies || si == sj
        })
    });
    let racg = g.is_racg();
    let verdict = match (condition1, condition2, condition3) {
        (true, Some(true), true) if racg => SplittingVerdict::AllSplit,
        (true, Some(true), true) => SplittingVerdict::Conjectural,
        _ => SplittingVerdict::Unknown,
    };
    ExtensionSplitting {
        racg,
        condition1,
        condition2,
        condition3,
        verdict,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Remark82Report {
    /// `Γ ∖ Δ` is connected for every complete subgraph `Δ`.
    pub clique_complements_connected: bool,
    pub four_cycle_chord_ok: bool,
    /// Some separating `Λ` that is a clique, or a clique together with two
    /// non-adjacent vertices adjacent to all of it. This is a sufficient test
    /// for `W(Λ)` being virtually abelian.
    pub virtually_abelian_separator: Option<VertexSet>,
    pub no_sil: bool,
    pub all_hold: bool,
}

/// All complete subgraphs, including the empty one.
fn all_cliques(g: &LabeledGraph) -> BTreeSet<VertexSet> {
    let mut out = BTreeSet::new();
    for m in g.maximal_cliques() {
        let verts = m.to_vec();
        for mask in 0u64..(1 << verts.len()) {
            out.insert(
                verts
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    out
}

fn separates(g: &LabeledGraph, lambda: &VertexSet) -> bool {
    g.components_of(&g.vertices().difference(lambda)).len() >= 2
}

pub fn remark82_check(g: &LabeledGraph) -> Result<Remark82Report> {
    if !g.is_racg() {
        return Err(Error::NotRacg);
    }
    let cliques = all_cliques(g);
    let clique_complements_connected = cliques
        .iter()
        .all(|d| g.components_of(&g.vertices().difference(d)).len() <= 1);

    let mut candidates: BTreeSet<VertexSet> = cliques.clone();
    for a in 1..=g.n() {
        for b in a + 1..=g.n() {
            if g.adjacent(a, b) {
                continue;
            }
            let common = g.link_of(a).intersection(g.link_of(b));
            for c in cliques.iter().filter(|c| c.is_subset(&common)) {
                let mut lambda = c.clone();
                lambda.insert(a);
                lambda.insert(b);
                candidates.insert(lambda);
            }
        }
    }
    let virtually_abelian_separator = candidates.into_iter().find(|l| separates(g, l));

    let four = g.four_cycle_chord_ok();
    let no_sil = g.find_sil().is_none();
    let all_hold =
        clique_complements_connected && four && virtually_abelian_separator.is_some() && no_sil;
    Ok(Remark82Report {
        clique_complements_connected,
        four_cycle_chord_ok: four,
        virtually_abelian_separator,
        no_sil,
        all_hold,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralPartition {
    /// Non-empty parts `ℒ'_i`, by `i`.
    pub parts: Vec<(usize, Vec<PartialConjugation>)>,
    /// Elements of `𝒫⁰` with no link point.
    pub leftovers: Vec<PartialConjugation>,
}

/// Peels `𝒫⁰` by link point in index order.
pub fn general_partition(g: &LabeledGraph) -> Result<GeneralPartition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut remaining = pc_zero(g);
    let mut parts = Vec::new();
    for i in 1..=g.n() {
        let (part, rest): (Vec<_>, Vec<_>) = remaining
            .into_iter()
            .partition(|pc| link_points(g, pc).contains(i));
        remaining = rest;
        if !part.is_empty() {
            parts.push((i, part));
        }
    }
    Ok(GeneralPartition {
        parts,
        leftovers: remaining,
    })
}

/// Everything the analysis can say about one labeled graph. Fields whose
/// hypotheses fail are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub sil: Option<SilWitness>,
    pub out0_abelian: bool,
    pub out0_witness: Option<NonCommutingPair>,
    pub coned: bool,
    pub out_w_finite: Option<bool>,
    pub aut_w_hyperbolic: Option<bool>,
    pub vcd: Option<usize>,
    pub extension_splitting: ExtensionSplitting,
    pub aut_star_equals_aut: TriState,
    pub predicates: PredicateReport,
    pub tree: Option<TreeDecomposition>,
    pub pc_count: usize,
    pub pc0_count: usize,
}

pub fn structure_report(g: &LabeledGraph) -> StructureReport {
    let ab = out0_is_abelian(g);
    let predicates = g.predicates();
    StructureReport {
        sil: g.find_sil(),
        out0_abelian: ab.abelian,
        out0_witness: ab.witness,
        coned: ab.coned,
        out_w_finite: out_w_finite(g),
        aut_w_hyperbolic: aut_w_hyperbolic(g),
        vcd: vcd_out(g),
        extension_splitting: extension_splitting_check(g),
        aut_star_equals_aut: predicates.aut_star_equals_aut,
        predicates,
        tree: tree_decomposition(g).ok(),
        pc_count: all_partial_conjugations(g).len(),
        pc0_count: pc_zero(g).len(),
    }
}
