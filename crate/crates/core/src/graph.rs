//! Labeled graphs `(Γ, m)` and the graph-theoretic computations built on them.
//!
//! Vertices are indexed `1..=N`. The total order on indices matters: the
//! canonical generating set `P0` picks components by least vertex index.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default bound on the vertex count for [`LabeledGraph::automorphisms`].
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 12;

/// Order of a vertex generator: a prime power or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderValue {
    Finite(u64),
    Infinity,
}

impl OrderValue {
    /// Validates that `q` is `p^α` with `p` prime and `α ≥ 1`.
    pub fn finite(q: u64) -> Result<Self> {
        if is_prime_power(q) {
            Ok(OrderValue::Finite(q))
        } else {
            Err(Error::InvalidOrder(q))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, OrderValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self {
            OrderValue::Finite(q) => Some(*q),
            OrderValue::Infinity => None,
        }
    }

    /// `self` divides `other` as group orders (everything divides infinity).
    pub fn divides(&self, other: &OrderValue) -> bool {
        match (self, other) {
            (_, OrderValue::Infinity) => true,
            (OrderValue::Infinity, OrderValue::Finite(_)) => false,
            (OrderValue::Finite(a), OrderValue::Finite(b)) => b % a == 0,
        }
    }
}

impl fmt::Display for OrderValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderValue::Finite(q) => write!(f, "{q}"),
            OrderValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for OrderValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(OrderValue::Infinity);
        }
        let q: u64 = s.parse().map_err(|_| Error::Parse {
            line: 2,
            msg: format!("bad order `{s}`"),
        })?;
        OrderValue::finite(q)
    }
}

impl Serialize for OrderValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2u64;
    let mut rest = q;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            return rest == 1;
        }
        p += 1;
    }
    // `rest` is prime and no smaller factor divided q.
    true
}

/// A set of vertex indices, stored as a bitset and iterated in ascending order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        (1..=n).collect()
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, b) = (v / 64, v % 64);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.word(i) | other.word(i))
            .collect::<Vec<_>>();
        Self::from_words(words)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.words.len().min(other.words.len());
        Self::from_words((0..n).map(|i| self.words[i] & other.words[i]).collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::from_words(
            (0..self.words.len())
                .map(|i| self.words[i] & !other.word(i))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.words.len()).all(|i| self.words[i] & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let n = self.words.len().min(other.words.len());
        (0..n).all(|i| self.words[i] & other.words[i] == 0)
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn from_words(words: Vec<u64>) -> Self {
        let mut s = Self { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A separating intersection of links: `d(v_i, v_j) ≥ 2` and `r` is a
/// component of `Γ ∖ (L_i ∩ L_j)` containing neither vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SilWitness {
    pub i: usize,
    pub j: usize,
    pub r: VertexSet,
}

/// Three-valued answer for criteria that are only sufficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        })
    }
}

/// Graph-level predicates consumed by the structure analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub leaves: VertexSet,
    pub center_vertices: VertexSet,
    pub four_cycle_chord_ok: bool,
    pub girth_ge_5_and_min_valence_2: bool,
    pub link_containment_pairs: Vec<(usize, usize)>,
    pub star_containment_pairs: Vec<(usize, usize)>,
    /// Never `No`: the available criteria are sufficient conditions only.
    pub aut_star_equals_aut: TriState,
}

/// A finite simplicial graph with an order map on its vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    // adj[0] is unused so that adj[i] is the link of vertex i.
    adj: Vec<VertexSet>,
    orders: Vec<OrderValue>,
}

impl LabeledGraph {
    /// Builds a graph on vertices `1..=orders.len()`.
    pub fn new(orders: Vec<OrderValue>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = orders.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for o in &orders {
            if let OrderValue::Finite(q) = o {
                if !is_prime_power(*q) {
                    return Err(Error::InvalidOrder(*q));
                }
            }
        }
        let mut adj = vec![VertexSet::new(); n + 1];
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if adj[a].contains(b) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Self { n, adj, orders })
    }

    /// Same as [`LabeledGraph::new`] with every vertex of order `q`.
    pub fn uniform(n: usize, q: OrderValue, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(vec![q; n], edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn order(&self, i: usize) -> OrderValue {
        self.orders[i - 1]
    }

    pub fn orders(&self) -> &[OrderValue] {
        &self.orders
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn valence(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn all_finite(&self) -> bool {
        self.orders.iter().all(OrderValue::is_finite)
    }

    pub fn all_infinite(&self) -> bool {
        self.orders.iter().all(|o| !o.is_finite())
    }

    /// Right-angled Coxeter group: every order is 2.
    pub fn is_racg(&self) -> bool {
        self.orders.iter().all(|o| *o == OrderValue::Finite(2))
    }

    pub fn link(&self, i: usize) -> Result<VertexSet> {
        self.check_index(i)?;
        Ok(self.adj[i].clone())
    }

    pub fn star(&self, i: usize) -> Result<VertexSet> {
        self.check_index(i)?;
        Ok(self.star_of(i))
    }

    pub(crate) fn link_of(&self, i: usize) -> &VertexSet {
        &self.adj[i]
    }

    pub(crate) fn star_of(&self, i: usize) -> VertexSet {
        let mut s = self.adj[i].clone();
        s.insert(i);
        s
    }

    /// Connected components of the full subgraph on `set`, by least element.
    pub fn components_of(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if set.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Components of `Γ ∖ S_i`: the possible domains of partial conjugations
    /// with operating letter `v_i`.
    pub fn components_minus_star(&self, i: usize) -> Result<Vec<VertexSet>> {
        self.check_index(i)?;
        Ok(self.components_of(&self.vertices().difference(&self.star_of(i))))
    }

    pub fn is_connected(&self) -> bool {
        self.components_of(&self.vertices()).len() == 1
    }

    /// Edge-count distance, `None` across components.
    pub fn distance(&self, i: usize, j: usize) -> Option<usize> {
        if i == j {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n + 1];
        dist[i] = 0;
        let mut queue = VecDeque::from([i]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v].iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if w == j {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| set.difference(&self.star_of(v)).is_empty())
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges().len() + 1 == self.n
    }

    /// Vertices of valence one.
    pub fn leaves(&self) -> VertexSet {
        (1..=self.n).filter(|&i| self.valence(i) == 1).collect()
    }

    /// `{i | S_i = V}`: generators of the center of `W`.
    pub fn center_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&i| self.valence(i) + 1 == self.n).collect()
    }

    /// Every maximal clique exactly once, sorted.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(VertexSet::new(), self.vertices(), VertexSet::new(), &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        // Tomita pivot: the vertex of P ∪ X with the most neighbors in P.
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (self.adj[u].intersection(&p).len(), std::cmp::Reverse(u)))
            .expect("P is nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(&self.adj[pivot]).to_vec() {
            let mut r2 = r.clone();
            r2.insert(v);
            self.bron_kerbosch(
                r2,
                p.intersection(&self.adj[v]),
                x.intersection(&self.adj[v]),
                out,
            );
            p.remove(v);
            x.insert(v);
        }
    }

    /// The lexicographically least `(i, j, min r)` separating intersection of
    /// links, searched directly from the definition.
    pub fn find_sil(&self) -> Option<SilWitness> {
        let all = self.vertices();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.adjacent(i, j) {
                    continue;
                }
                let common = self.adj[i].intersection(&self.adj[j]);
                let found = self
                    .components_of(&all.difference(&common))
                    .into_iter()
                    .find(|r| !r.contains(i) && !r.contains(j));
                if let Some(r) = found {
                    return Some(SilWitness { i, j, r });
                }
            }
        }
        None
    }

    /// Adds a vertex adjacent to every existing vertex. The new vertex gets
    /// index `N + 1`, so minimal-index choices among the old vertices are
    /// unchanged.
    pub fn cone(&self, m0: OrderValue) -> Result<LabeledGraph> {
        if let OrderValue::Finite(q) = m0 {
            OrderValue::finite(q)?;
        }
        let mut orders = self.orders.clone();
        orders.push(m0);
        let c = self.n + 1;
        let mut edges = self.edges();
        edges.extend((1..=self.n).map(|i| (i, c)));
        LabeledGraph::new(orders, &edges)
    }

    /// `Δ_i = {j | S_j = S_i}`.
    pub fn delta_class(&self, i: usize) -> Result<VertexSet> {
        self.check_index(i)?;
        let si = self.star_of(i);
        let delta: VertexSet = (1..=self.n).filter(|&j| self.star_of(j) == si).collect();
        debug_assert!(self.is_clique(&delta));
        Ok(delta)
    }

    /// Every 4-circuit has a chord, i.e. common neighbors of any two
    /// non-adjacent vertices are pairwise adjacent.
    pub fn four_cycle_chord_ok(&self) -> bool {
        for a in 1..=self.n {
            for c in a + 1..=self.n {
                if self.adjacent(a, c) {
                    continue;
                }
                let common = self.adj[a].intersection(&self.adj[c]);
                if !self.is_clique(&common) {
                    return false;
                }
            }
        }
        true
    }

    /// No vertex of valence < 2 and no circuit of length 3 or 4.
    pub fn girth_ge_5_and_min_valence_2(&self) -> bool {
        if (1..=self.n).any(|i| self.valence(i) < 2) {
            return false;
        }
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                let common = self.adj[a].intersection(&self.adj[b]).len();
                // A triangle through an edge, or a 4-circuit through a
                // non-adjacent pair with two common neighbors.
                if (self.adjacent(a, b) && common > 0) || common >= 2 {
                    return false;
                }
            }
        }
        true
    }

    pub fn predicates(&self) -> PredicateReport {
        let mut link_pairs = Vec::new();
        let mut star_pairs = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i == j {
                    continue;
                }
                if !self.adjacent(i, j) && self.adj[i].is_subset(&self.adj[j]) {
                    link_pairs.push((i, j));
                }
                if self.star_of(i).is_subset(&self.star_of(j)) {
                    star_pairs.push((i, j));
                }
            }
        }
        let girth = self.girth_ge_5_and_min_valence_2();
        let aut_star = if self.all_finite()
            || (self.all_infinite() && (link_pairs.is_empty() || girth))
        {
            TriState::Yes
        } else {
            TriState::Unknown
        };
        PredicateReport {
            leaves: self.leaves(),
            center_vertices: self.center_vertices(),
            four_cycle_chord_ok: self.four_cycle_chord_ok(),
            girth_ge_5_and_min_valence_2: girth,
            link_containment_pairs: link_pairs,
            star_containment_pairs: star_pairs,
            aut_star_equals_aut: aut_star,
        }
    }

    /// All permutations of the vertices preserving adjacency and orders,
    /// found by backtracking. `perm[i - 1]` is the image of vertex `i`.
    pub fn automorphisms(&self, bound: usize) -> Result<Vec<Vec<usize>>> {
        if self.n > bound {
            return Err(Error::EnumerationBoundExceeded { n: self.n, bound });
        }
        let mut out = Vec::new();
        let mut image = vec![0usize; self.n + 1];
        let mut used = vec![false; self.n + 1];
        self.extend_automorphism(1, &mut image, &mut used, &mut out);
        out.sort();
        debug_assert!(is_closed_under_composition(&out));
        Ok(out)
    }

    fn extend_automorphism(
        &self,
        v: usize,
        image: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if v > self.n {
            out.push(image[1..].to_vec());
            return;
        }
        for t in 1..=self.n {
            if used[t] || self.order(t) != self.order(v) || self.valence(t) != self.valence(v) {
                continue;
            }
            let consistent =
                (1..v).all(|u| self.adjacent(u, v) == self.adjacent(image[u], t));
            if !consistent {
                continue;
            }
            image[v] = t;
            used[t] = true;
            self.extend_automorphism(v + 1, image, used, out);
            used[t] = false;
        }
    }

    /// The full subgraph on `set`, re-indexed `1..=|set|` in increasing order.
    /// The returned vector maps new index `k` to old index `map[k - 1]`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(LabeledGraph, Vec<usize>)> {
        let map = set.to_vec();
        let mut new_index = vec![0usize; self.n + 1];
        for (k, &v) in map.iter().enumerate() {
            self.check_index(v)?;
            new_index[v] = k + 1;
        }
        let orders = map.iter().map(|&v| self.order(v)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| set.contains(a) && set.contains(b))
            .map(|(a, b)| (new_index[a], new_index[b]))
            .collect();
        Ok((LabeledGraph::new(orders, &edges)?, map))
    }
}

pub(crate) fn is_closed_under_composition(perms: &[Vec<usize>]) -> bool {
    let set: std::collections::HashSet<&Vec<usize>> = perms.iter().collect();
    perms.iter().all(|p| {
        perms.iter().all(|q| {
            let pq: Vec<usize> = q.iter().map(|&x| p[x - 1]).collect();
            set.contains(&pq)
        })
    })
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string().replace('\n', "; "))
    }
}

/// The three-line text format:
///
/// ```text
/// vertices 3
/// orders 2 2 inf
/// edges 1-2 2-3
/// ```
impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.n)?;
        f.write_str("orders")?;
        for o in &self.orders {
            write!(f, " {o}")?;
        }
        f.write_str("\nedges")?;
        for (a, b) in self.edges() {
            write!(f, " {a}-{b}")?;
        }
        writeln!(f)
    }
}

impl FromStr for LabeledGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().collect();
        let trimmed = match lines.last() {
            Some(l) if l.trim().is_empty() && lines.len() == 4 => &lines[..3],
            _ => &lines[..],
        };
        if trimmed.len() != 3 {
            return Err(Error::Parse {
                line: trimmed.len().min(3) + 1,
                msg: format!("expected 3 lines, found {}", trimmed.len()),
            });
        }
        let field = |line: usize, key: &str| -> Result<Vec<&str>> {
            let mut toks = trimmed[line - 1].split_whitespace();
            match toks.next() {
                Some(k) if k == key => Ok(toks.collect()),
                _ => Err(Error::Parse {
                    line,
                    msg: format!("expected `{key}`"),
                }),
            }
        };

        let n_tok = field(1, "vertices")?;
        let n: usize = match n_tok.as_slice() {
            [t] => t.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad vertex count `{t}`"),
            })?,
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    msg: "expected a single vertex count".into(),
                })
            }
        };

        let orders = field(2, "orders")?
            .into_iter()
            .map(OrderValue::from_str)
            .collect::<Result<Vec<_>>>()?;
        if orders.len() != n {
            return Err(Error::Parse {
                line: 2,
                msg: format!("expected {n} orders, found {}", orders.len()),
            });
        }

        let mut edges = Vec::new();
        for tok in field(3, "edges")? {
            let bad = || Error::Parse {
                line: 3,
                msg: format!("bad edge `{tok}`"),
            };
            let (a, b) = tok.split_once('-').ok_or_else(bad)?;
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            edges.push((a, b));
        }
        LabeledGraph::new(orders, &edges)
    }
}
