//! Words and canonical normal forms in `W(Γ, m)`.
//!
//! A word is reduced when no two syllables of the same vertex can be brought
//! next to each other by shuffling commuting syllables. Among the reduced
//! words for an element, the canonical one places at each position the
//! smallest vertex whose syllable can be shuffled there.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, OrderValue, VertexSet};

/// A power `v^e` of one generator, `e ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(vertex: usize, exponent: i64) -> Self {
        Self { vertex, exponent }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "v{}", self.vertex)
        } else {
            write!(f, "v{}^{}", self.vertex, self.exponent)
        }
    }
}

impl FromStr for Syllable {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        let bad = || Error::BadWordToken(tok.to_string());
        let body = tok.strip_prefix('v').ok_or_else(bad)?;
        let (v, e) = match body.split_once('^') {
            Some((v, e)) => (v, e.parse::<i64>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let vertex: usize = v.parse().map_err(|_| bad())?;
        if e == 0 || !v.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(Syllable::new(vertex, e))
    }
}

/// A syllable sequence; consecutive syllables of one vertex are merged.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(v: usize) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: usize, e: i64) -> Self {
        Self::from_syllables([Syllable::new(v, e)])
    }

    /// Builds a word, merging adjacent equal-vertex syllables and dropping
    /// zero exponents.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(it: I) -> Self {
        let mut syllables: Vec<Syllable> = Vec::new();
        for s in it {
            if s.exponent == 0 {
                continue;
            }
            match syllables.last_mut() {
                Some(last) if last.vertex == s.vertex => {
                    last.exponent += s.exponent;
                    if last.exponent == 0 {
                        syllables.pop();
                    }
                }
                _ => syllables.push(s),
            }
        }
        Self { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Syllable count.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_syllables(self.syllables.iter().chain(&other.syllables).copied())
    }

    /// Formal inverse: reversed order, negated exponents.
    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.vertex, -s.exponent))
                .collect(),
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.syllables.iter().map(|s| s.vertex).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syl = s
            .split_whitespace()
            .map(Syllable::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_syllables(syl))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The canonical reduced word of a group element. Structural equality is
/// group equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct NormalForm(Word);

impl NormalForm {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl Deref for NormalForm {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl From<NormalForm> for Word {
    fn from(nf: NormalForm) -> Word {
        nf.0
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `original = conjugator · core · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicReduction {
    pub core: NormalForm,
    pub conjugator: NormalForm,
}

/// Canonical exponent: `1..q-1` for order `q`, `0` meaning the identity.
pub fn canonical_exponent(order: OrderValue, e: i64) -> i64 {
    match order {
        OrderValue::Finite(q) => e.rem_euclid(q as i64),
        OrderValue::Infinity => e,
    }
}

pub fn check_word(g: &LabeledGraph, w: &Word) -> Result<()> {
    w.syllables.iter().try_for_each(|s| g.check_index(s.vertex))
}

pub fn normal_form(g: &LabeledGraph, w: &Word) -> Result<NormalForm> {
    check_word(g, w)?;
    Ok(nf_unchecked(g, &w.syllables))
}

pub(crate) fn nf_unchecked(g: &LabeledGraph, syllables: &[Syllable]) -> NormalForm {
    let mut reduced: Vec<Syllable> = Vec::with_capacity(syllables.len());
    for s in syllables {
        push_reduced(g, &mut reduced, *s);
    }
    NormalForm(Word {
        syllables: canonical_order(g, reduced),
    })
}

/// Appends `s` to a reduced word, keeping it reduced. If a syllable of the
/// same vertex can be shuffled to the end, the two merge.
fn push_reduced(g: &LabeledGraph, reduced: &mut Vec<Syllable>, s: Syllable) {
    let order = g.order(s.vertex);
    let e = canonical_exponent(order, s.exponent);
    if e == 0 {
        return;
    }
    for k in (0..reduced.len()).rev() {
        let t = reduced[k];
        if t.vertex == s.vertex {
            let merged = canonical_exponent(order, t.exponent + e);
            if merged == 0 {
                reduced.remove(k);
            } else {
                reduced[k].exponent = merged;
            }
            return;
        }
        if !g.adjacent(t.vertex, s.vertex) {
            break;
        }
    }
    reduced.push(Syllable::new(s.vertex, e));
}

/// Rearranges a reduced word into its lexicographically least shuffle.
fn canonical_order(g: &LabeledGraph, mut rest: Vec<Syllable>) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        // A syllable can move to the front iff every earlier syllable
        // commutes with it.
        let mut before = VertexSet::new();
        let mut best: Option<usize> = None;
        for (k, s) in rest.iter().enumerate() {
            if before.is_subset(g.link_of(s.vertex))
                && best.is_none_or(|b| s.vertex < rest[b].vertex)
            {
                best = Some(k);
            }
            before.insert(s.vertex);
        }
        out.push(rest.remove(best.expect("first syllable is always movable")));
    }
    out
}

pub fn multiply(g: &LabeledGraph, a: &Word, b: &Word) -> Result<NormalForm> {
    check_word(g, a)?;
    check_word(g, b)?;
    Ok(mul_unchecked(g, a, b))
}

pub(crate) fn mul_unchecked(g: &LabeledGraph, a: &Word, b: &Word) -> NormalForm {
    let all: Vec<Syllable> = a.syllables.iter().chain(&b.syllables).copied().collect();
    nf_unchecked(g, &all)
}

/// Normal form of a product of several words.
pub(crate) fn product(g: &LabeledGraph, parts: &[&Word]) -> NormalForm {
    let all: Vec<Syllable> = parts
        .iter()
        .flat_map(|w| w.syllables.iter().copied())
        .collect();
    nf_unchecked(g, &all)
}

pub fn invert(g: &LabeledGraph, w: &Word) -> Result<NormalForm> {
    check_word(g, w)?;
    Ok(nf_unchecked(g, &w.inverse().syllables))
}

/// `u · w · u⁻¹` in normal form.
pub(crate) fn conjugate(g: &LabeledGraph, u: &Word, w: &Word) -> NormalForm {
    product(g, &[u, w, &u.inverse()])
}

pub fn support(g: &LabeledGraph, w: &Word) -> Result<VertexSet> {
    Ok(normal_form(g, w)?.vertices())
}

/// The retraction `W → W(Ω)` killing every generator outside `omega`.
pub fn project(g: &LabeledGraph, w: &Word, omega: &VertexSet) -> Result<NormalForm> {
    check_word(g, w)?;
    Ok(project_unchecked(g, w, omega))
}

pub(crate) fn project_unchecked(g: &LabeledGraph, w: &Word, omega: &VertexSet) -> NormalForm {
    let kept: Vec<Syllable> = w
        .syllables
        .iter()
        .filter(|s| omega.contains(s.vertex))
        .copied()
        .collect();
    nf_unchecked(g, &kept)
}

pub fn in_special_subgroup(g: &LabeledGraph, w: &Word, delta: &VertexSet) -> Result<bool> {
    Ok(support(g, w)?.is_subset(delta))
}

/// Support test against the star of `v_j`.
pub fn centralizes_vertex(g: &LabeledGraph, w: &Word, j: usize) -> Result<bool> {
    let star = g.star(j)?;
    Ok(support(g, w)?.is_subset(&star))
}

/// Commutator test `w v_j = v_j w`; kept as a differential check on
/// [`centralizes_vertex`].
pub fn centralizes_vertex_by_commutation(g: &LabeledGraph, w: &Word, j: usize) -> Result<bool> {
    g.check_index(j)?;
    let vj = Word::generator(j);
    Ok(multiply(g, w, &vj)? == multiply(g, &vj, w)?)
}

pub fn center_vertices(g: &LabeledGraph) -> VertexSet {
    g.center_vertices()
}

/// `W(Δ)` is finite iff `Δ` is a clique of finite-order vertices.
pub fn is_finite_special(g: &LabeledGraph, delta: &VertexSet) -> Result<bool> {
    for v in delta.iter() {
        g.check_index(v)?;
    }
    Ok(g.is_clique(delta) && delta.iter().all(|v| g.order(v).is_finite()))
}

/// Can syllable `k` be shuffled to the front?
pub(crate) fn front_movable(g: &LabeledGraph, syl: &[Syllable], k: usize) -> bool {
    let v = syl[k].vertex;
    syl[..k].iter().all(|s| g.adjacent(s.vertex, v))
}

/// Can syllable `k` be shuffled to the back?
pub(crate) fn back_movable(g: &LabeledGraph, syl: &[Syllable], k: usize) -> bool {
    let v = syl[k].vertex;
    syl[k + 1..].iter().all(|s| g.adjacent(s.vertex, v))
}

pub fn cyclically_reduce(g: &LabeledGraph, w: &Word) -> Result<CyclicReduction> {
    check_word(g, w)?;
    Ok(cyclic_unchecked(g, w))
}

pub(crate) fn cyclic_unchecked(g: &LabeledGraph, w: &Word) -> CyclicReduction {
    let mut core = nf_unchecked(g, &w.syllables);
    let mut conj: Vec<Syllable> = Vec::new();
    loop {
        let syl = core.syllables();
        let mut pick: Option<Syllable> = None;
        for (k, s) in syl.iter().enumerate() {
            if !front_movable(g, syl, k) || pick.is_some_and(|p| p.vertex < s.vertex) {
                continue;
            }
            let has_back = (k + 1..syl.len())
                .any(|l| syl[l].vertex == s.vertex && back_movable(g, syl, l));
            if has_back {
                pick = Some(*s);
            }
        }
        let Some(x) = pick else { break };
        // core = x^a · rest, and x^-a · core · x^a = rest · x^a is shorter.
        let xa = Word::power(x.vertex, x.exponent);
        core = product(g, &[&xa.inverse(), &core, &xa]);
        conj.push(x);
    }
    CyclicReduction {
        core,
        conjugator: nf_unchecked(g, &conj),
    }
}

/// Shortest element of the right coset `w · W(S)`: repeatedly delete
/// syllables in `S` that can be shuffled to the end.
pub(crate) fn strip_right(g: &LabeledGraph, w: &NormalForm, s: &VertexSet) -> NormalForm {
    let mut syl = w.syllables().to_vec();
    let mut k = syl.len();
    while k > 0 {
        k -= 1;
        if s.contains(syl[k].vertex) && back_movable(g, &syl, k) {
            syl.remove(k);
            k = syl.len();
        }
    }
    nf_unchecked(g, &syl)
}
