//! Automorphisms of `W(Γ, m)`.
//!
//! Conjugating automorphisms (`Aut⁰`) are stored as one conjugator per
//! vertex, `v_j ↦ w_j v_j w_j⁻¹`, with `w_j` the shortest representative of
//! its coset `w_j · W(S_j)`. General endomorphism candidates are stored as a
//! list of generator images.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet, DEFAULT_AUTOMORPHISM_BOUND};
use crate::word::{
    back_movable, check_word, conjugate, cyclic_unchecked, front_movable, nf_unchecked,
    product, project_unchecked, strip_right, NormalForm, Syllable, Word,
};

/// The partial conjugation `χ_{iK}`: `v_j ↦ v_i v_j v_i⁻¹` for `j ∈ K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialConjugation {
    pub operator: usize,
    pub domain: VertexSet,
}

impl PartialConjugation {
    /// Validates that `domain` is a component of `Γ ∖ S_operator`.
    pub fn new(g: &LabeledGraph, operator: usize, domain: VertexSet) -> Result<Self> {
        let comps = g.components_minus_star(operator)?;
        if !comps.contains(&domain) {
            return Err(Error::InvalidDomain {
                operator,
                domain: domain.to_string(),
            });
        }
        Ok(Self { operator, domain })
    }

    pub fn to_aut(&self, g: &LabeledGraph) -> AutZeroElement {
        evaluate(g, &AutWord::from(vec![AutLetter::new(self.clone())]))
    }
}

impl fmt::Display for PartialConjugation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}:", self.operator)?;
        for (k, v) in self.domain.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for PartialConjugation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A partial conjugation or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutLetter {
    pub pc: PartialConjugation,
    pub inverse: bool,
}

impl AutLetter {
    pub fn new(pc: PartialConjugation) -> Self {
        Self { pc, inverse: false }
    }

    pub fn inv(pc: PartialConjugation) -> Self {
        Self { pc, inverse: true }
    }

    pub fn inverted(&self) -> Self {
        Self {
            pc: self.pc.clone(),
            inverse: !self.inverse,
        }
    }

    /// Parses `x<i>:<k1,k2,...>` with an optional trailing `'`, validating
    /// the domain against `g`.
    pub fn parse(g: &LabeledGraph, tok: &str) -> Result<Self> {
        let bad = || Error::BadLetterToken(tok.to_string());
        let (body, inverse) = match tok.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (tok, false),
        };
        let (op, dom) = body
            .strip_prefix('x')
            .and_then(|b| b.split_once(':'))
            .ok_or_else(bad)?;
        let operator: usize = op.parse().map_err(|_| bad())?;
        let domain = dom
            .split(',')
            .map(|k| k.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<VertexSet>>()?;
        let pc = PartialConjugation::new(g, operator, domain)?;
        Ok(Self { pc, inverse })
    }
}

impl fmt::Display for AutLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.pc, if self.inverse { "'" } else { "" })
    }
}

/// A word in the partial conjugations and their inverses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AutWord {
    pub letters: Vec<AutLetter>,
}

impl AutWord {
    pub fn parse(g: &LabeledGraph, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| AutLetter::parse(g, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &AutWord) -> AutWord {
        AutWord {
            letters: self.letters.iter().chain(&other.letters).cloned().collect(),
        }
    }

    pub fn inverse(&self) -> AutWord {
        AutWord {
            letters: self.letters.iter().rev().map(AutLetter::inverted).collect(),
        }
    }
}

impl From<Vec<AutLetter>> for AutWord {
    fn from(letters: Vec<AutLetter>) -> Self {
        Self { letters }
    }
}

impl fmt::Display for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An element of `Aut⁰W`: `v_j ↦ w_j v_j w_j⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutZeroElement {
    conjugators: Vec<NormalForm>,
}

impl AutZeroElement {
    pub fn identity(g: &LabeledGraph) -> Self {
        Self {
            conjugators: vec![NormalForm::identity(); g.n()],
        }
    }

    /// Builds the map from conjugator data. The caller is responsible for
    /// the data defining an automorphism.
    pub fn from_conjugators(g: &LabeledGraph, ws: Vec<Word>) -> Result<Self> {
        if ws.len() != g.n() {
            return Err(Error::ImageCountMismatch {
                expected: g.n(),
                got: ws.len(),
            });
        }
        for w in &ws {
            check_word(g, w)?;
        }
        Ok(Self::canonical(g, ws.iter().map(|w| nf_unchecked(g, w.syllables())).collect()))
    }

    fn canonical(g: &LabeledGraph, conj: Vec<NormalForm>) -> Self {
        let conjugators = conj
            .into_iter()
            .enumerate()
            .map(|(k, c)| strip_right(g, &c, &g.star_of(k + 1)))
            .collect();
        Self { conjugators }
    }

    /// Canonical conjugator of `v_j`: shortest in its coset modulo `W(S_j)`.
    pub fn conjugator(&self, j: usize) -> &NormalForm {
        &self.conjugators[j - 1]
    }

    pub fn conjugators(&self) -> &[NormalForm] {
        &self.conjugators
    }

    /// `φ(v_j)`.
    pub fn image(&self, g: &LabeledGraph, j: usize) -> NormalForm {
        conjugate(g, self.conjugator(j), &Word::generator(j))
    }

    /// Canonical conjugators make the identity test structural.
    pub fn is_identity(&self) -> bool {
        self.conjugators.iter().all(NormalForm::is_identity)
    }

    pub fn to_image_map(&self, g: &LabeledGraph) -> GeneratorImageMap {
        GeneratorImageMap {
            images: (1..=g.n()).map(|j| self.image(g, j)).collect(),
        }
    }
}

impl fmt::Display for AutZeroElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.conjugators.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "v{}: [{}]", k + 1, c)?;
        }
        Ok(())
    }
}

impl Serialize for AutZeroElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.conjugators.iter())
    }
}

/// `φ(w)` for `φ ∈ Aut⁰W`.
pub fn apply(g: &LabeledGraph, phi: &AutZeroElement, w: &Word) -> Result<NormalForm> {
    check_word(g, w)?;
    Ok(apply_unchecked(g, phi, w))
}

fn apply_unchecked(g: &LabeledGraph, phi: &AutZeroElement, w: &Word) -> NormalForm {
    let mut all: Vec<Syllable> = Vec::new();
    for s in w.syllables() {
        let c = phi.conjugator(s.vertex);
        all.extend(c.syllables());
        all.push(*s);
        all.extend(c.inverse().syllables());
    }
    nf_unchecked(g, &all)
}

/// `φ ∘ θ`: apply `θ` first.
pub fn compose(g: &LabeledGraph, phi: &AutZeroElement, theta: &AutZeroElement) -> AutZeroElement {
    // φ(θ(v_j)) = φ(u_j) w_j v_j w_j⁻¹ φ(u_j)⁻¹.
    let conj = (1..=g.n())
        .map(|j| {
            let moved = apply_unchecked(g, phi, theta.conjugator(j));
            product(g, &[&moved, phi.conjugator(j)])
        })
        .collect();
    AutZeroElement::canonical(g, conj)
}

/// `l_1 ∘ l_2 ∘ ... ∘ l_k` for the letters of `w`.
pub fn evaluate(g: &LabeledGraph, w: &AutWord) -> AutZeroElement {
    let mut conj: Vec<NormalForm> = vec![NormalForm::identity(); g.n()];
    for letter in &w.letters {
        let i = letter.pc.operator;
        let e = if letter.inverse { -1 } else { 1 };
        // ψ ∘ χ moves v_j ∈ K to ψ(v_i^e) ψ(v_j), so its conjugator becomes
        // w_i v_i^e w_i⁻¹ w_j.
        let wi = conj[i - 1].clone();
        let lead = conjugate(g, &wi, &Word::power(i, e));
        for j in letter.pc.domain.iter() {
            conj[j - 1] = product(g, &[&lead, &conj[j - 1]]);
        }
        for (k, c) in conj.iter_mut().enumerate() {
            *c = strip_right(g, c, &g.star_of(k + 1));
        }
    }
    AutZeroElement { conjugators: conj }
}

pub fn aut_equal(g: &LabeledGraph, a: &AutZeroElement, b: &AutZeroElement) -> bool {
    (1..=g.n()).all(|j| a.image(g, j) == b.image(g, j))
}

/// `𝒫`, ordered by operator then least domain element.
pub fn all_partial_conjugations(g: &LabeledGraph) -> Vec<PartialConjugation> {
    (1..=g.n())
        .flat_map(|i| {
            g.components_minus_star(i)
                .expect("index in range")
                .into_iter()
                .map(move |k| PartialConjugation {
                    operator: i,
                    domain: k,
                })
        })
        .collect()
}

/// `𝒫⁰`: drops, for each operator, the component containing the least
/// vertex outside its star. Components come sorted by least element, so
/// that is always the first one.
pub fn pc_zero(g: &LabeledGraph) -> Vec<PartialConjugation> {
    (1..=g.n())
        .flat_map(|i| {
            g.components_minus_star(i)
                .expect("index in range")
                .into_iter()
                .skip(1)
                .map(move |k| PartialConjugation {
                    operator: i,
                    domain: k,
                })
        })
        .collect()
}

/// `v_i` is a link point of `χ_{jQ}` iff `v_j ∈ L_i` and `Q ∩ L_i ≠ ∅`.
pub fn link_points(g: &LabeledGraph, pc: &PartialConjugation) -> VertexSet {
    (1..=g.n())
        .filter(|&i| is_link_point(g, i, pc))
        .collect()
}

fn is_link_point(g: &LabeledGraph, i: usize, pc: &PartialConjugation) -> bool {
    let li = g.link_of(i);
    li.contains(pc.operator) && !pc.domain.is_disjoint(li)
}

/// `ℒ_i`.
pub fn l_set(g: &LabeledGraph, i: usize) -> Result<Vec<PartialConjugation>> {
    g.check_index(i)?;
    Ok(all_partial_conjugations(g)
        .into_iter()
        .filter(|pc| is_link_point(g, i, pc))
        .collect())
}

/// Keeps the letters whose operator lies in `omega`. Fails if the shortened
/// word spells a different automorphism, which happens exactly when the
/// original is not in `⟨𝒫_Ω⟩`.
pub fn restricted_rewrite(g: &LabeledGraph, w: &AutWord, omega: &VertexSet) -> Result<AutWord> {
    let kept = AutWord {
        letters: w
            .letters
            .iter()
            .filter(|l| omega.contains(l.pc.operator))
            .cloned()
            .collect(),
    };
    if aut_equal(g, &evaluate(g, &kept), &evaluate(g, w)) {
        Ok(kept)
    } else {
        Err(Error::RewriteMismatch)
    }
}

/// `φ_Ω`: every conjugator replaced by its projection to `W(Ω)`.
pub fn omega_retraction(g: &LabeledGraph, phi: &AutZeroElement, omega: &VertexSet) -> AutZeroElement {
    let conj = phi
        .conjugators
        .iter()
        .map(|c| project_unchecked(g, c, omega))
        .collect();
    AutZeroElement::canonical(g, conj)
}

/// An automorphism of the graph product on the full subgraph `L_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkRestriction {
    pub subgraph: LabeledGraph,
    /// `vertex_map[k - 1]` is the vertex of `Γ` that is vertex `k` of the
    /// subgraph.
    pub vertex_map: Vec<usize>,
    pub aut: AutZeroElement,
}

/// `ρ_i`: restricts an element of `⟨ℒ_i⟩` to `W(L_i)`.
pub fn restrict_to_link(g: &LabeledGraph, w: &AutWord, i: usize) -> Result<LinkRestriction> {
    g.check_index(i)?;
    for l in &w.letters {
        if !is_link_point(g, i, &l.pc) {
            return Err(Error::LetterOutsideLink {
                letter: l.pc.to_string(),
                link: i,
            });
        }
    }
    let link = g.link_of(i).clone();
    let (sub, map) = g.induced_subgraph(&link)?;
    let mut new_index = vec![0usize; g.n() + 1];
    for (k, &v) in map.iter().enumerate() {
        new_index[v] = k + 1;
    }
    let phi = evaluate(g, w);
    let conj = map
        .iter()
        .map(|&v| {
            let c = project_unchecked(g, phi.conjugator(v), &link);
            Word::from_syllables(
                c.syllables()
                    .iter()
                    .map(|s| Syllable::new(new_index[s.vertex], s.exponent)),
            )
        })
        .collect();
    let aut = AutZeroElement::from_conjugators(&sub, conj)?;
    Ok(LinkRestriction {
        subgraph: sub,
        vertex_map: map,
        aut,
    })
}

/// Decides whether `x ∈ W(A) · W(B)`; on success returns `α ∈ W(A)` and
/// `β ∈ W(B)` with `x = α β`. Syllables that can be moved to the front with
/// vertex in `A`, or to the back with vertex in `B`, are stripped until
/// neither applies.
pub(crate) fn double_coset_split(
    g: &LabeledGraph,
    x: &NormalForm,
    a: &VertexSet,
    b: &VertexSet,
) -> Option<(NormalForm, NormalForm)> {
    let mut syl = x.syllables().to_vec();
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    'outer: while !syl.is_empty() {
        for k in 0..syl.len() {
            if a.contains(syl[k].vertex) && front_movable(g, &syl, k) {
                alpha.push(syl.remove(k));
                continue 'outer;
            }
        }
        for k in (0..syl.len()).rev() {
            if b.contains(syl[k].vertex) && back_movable(g, &syl, k) {
                beta.insert(0, syl.remove(k));
                continue 'outer;
            }
        }
        return None;
    }
    Some((nf_unchecked(g, &alpha), nf_unchecked(g, &beta)))
}

/// A word `w` with `φ(v_j) = w v_j w⁻¹` for all `j`, if one exists.
///
/// The set of such `w` is the intersection of the cosets `w_j · W(S_j)`;
/// it is narrowed one vertex at a time. The witness is checked before it is
/// returned.
pub fn find_inner_witness(g: &LabeledGraph, phi: &AutZeroElement) -> Option<NormalForm> {
    let mut c = phi.conjugator(1).clone();
    let mut a = g.star_of(1);
    for j in 2..=g.n() {
        let h = phi.conjugator(j);
        let b = g.star_of(j);
        let x = product(g, &[&c.inverse(), h]);
        let (alpha, _) = double_coset_split(g, &x, &a, &b)?;
        c = product(g, &[&c, &alpha]);
        a = a.intersection(&b);
    }
    let witness = strip_right(g, &c, &a);
    let ok = (1..=g.n()).all(|j| conjugate(g, &witness, &Word::generator(j)) == phi.image(g, j));
    ok.then_some(witness)
}

/// A candidate endomorphism given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorImageMap {
    images: Vec<NormalForm>,
}

impl GeneratorImageMap {
    pub fn new(g: &LabeledGraph, images: Vec<Word>) -> Result<Self> {
        if images.len() != g.n() {
            return Err(Error::ImageCountMismatch {
                expected: g.n(),
                got: images.len(),
            });
        }
        for w in &images {
            check_word(g, w)?;
        }
        Ok(Self {
            images: images.iter().map(|w| nf_unchecked(g, w.syllables())).collect(),
        })
    }

    pub fn identity(g: &LabeledGraph) -> Self {
        Self {
            images: (1..=g.n()).map(|j| nf_unchecked(g, Word::generator(j).syllables())).collect(),
        }
    }

    /// Conjugation by `u`.
    pub fn inner(g: &LabeledGraph, u: &Word) -> Result<Self> {
        check_word(g, u)?;
        Ok(Self {
            images: (1..=g.n()).map(|j| conjugate(g, u, &Word::generator(j))).collect(),
        })
    }

    pub fn image(&self, j: usize) -> &NormalForm {
        &self.images[j - 1]
    }

    pub fn images(&self) -> &[NormalForm] {
        &self.images
    }

    /// The image of an arbitrary word.
    pub fn apply(&self, g: &LabeledGraph, w: &Word) -> Result<NormalForm> {
        check_word(g, w)?;
        let mut all: Vec<Syllable> = Vec::new();
        for s in w.syllables() {
            let img = self.image(s.vertex);
            let piece = if s.exponent > 0 { img.word().clone() } else { img.inverse() };
            for _ in 0..s.exponent.unsigned_abs() {
                all.extend(piece.syllables());
            }
        }
        Ok(nf_unchecked(g, &all))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, g: &LabeledGraph, other: &GeneratorImageMap) -> GeneratorImageMap {
        GeneratorImageMap {
            images: other
                .images
                .iter()
                .map(|w| self.apply(g, w).expect("images are valid words"))
                .collect(),
        }
    }
}

impl fmt::Display for GeneratorImageMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "v{} -> [{}]", k + 1, w)?;
        }
        Ok(())
    }
}

/// Simultaneously conjugates pairwise commuting elements into a clique
/// subgroup. Returns the conjugator `w` and the elements `w⁻¹ x w`.
fn conjugate_into_clique(
    g: &LabeledGraph,
    elems: &[NormalForm],
) -> Option<(NormalForm, Vec<NormalForm>)> {
    let mut w = NormalForm::identity();
    let mut xs: Vec<NormalForm> = elems.to_vec();
    // Everything lives in W(done) × W(ambient), `done` a clique and
    // `ambient` the vertices adjacent to all of `done`.
    let mut done = VertexSet::new();
    let mut ambient = g.vertices();
    loop {
        let next = xs
            .iter()
            .map(|x| project_unchecked(g, x, &ambient))
            .find(|y| !y.is_identity());
        let Some(y) = next else { break };
        let red = cyclic_unchecked(g, &y);
        let t = red.core.vertices();
        if !g.is_clique(&t) {
            return None;
        }
        let u = red.conjugator;
        xs = xs.iter().map(|x| conjugate(g, &u.inverse(), x)).collect();
        w = product(g, &[&w, &u]);
        done = done.union(&t);
        ambient = t
            .iter()
            .fold(ambient.difference(&t), |acc, v| acc.intersection(g.link_of(v)));
        let allowed = done.union(&ambient);
        if !xs.iter().all(|x| x.vertices().is_subset(&allowed)) {
            return None;
        }
    }
    Some((w, xs))
}

/// The Tits retraction `r: Aut*W → Aut¹W`, sending each generator to the
/// clique-supported representative of the conjugacy class of its image.
pub fn tits_retraction(g: &LabeledGraph, gamma: &GeneratorImageMap) -> Result<GeneratorImageMap> {
    let mut out: Vec<Option<NormalForm>> = vec![None; g.n()];
    for clique in g.maximal_cliques() {
        let verts = clique.to_vec();
        let imgs: Vec<NormalForm> = verts.iter().map(|&v| gamma.image(v).clone()).collect();
        let least = verts[0];
        let (_, cores) =
            conjugate_into_clique(g, &imgs).ok_or(Error::NotInAutStar { vertex: least })?;
        let support = cores.iter().fold(VertexSet::new(), |acc, c| acc.union(&c.vertices()));
        if !g.is_clique(&support) {
            return Err(Error::NotInAutStar { vertex: least });
        }
        for (v, core) in verts.into_iter().zip(cores) {
            out[v - 1] = Some(core);
        }
    }
    Ok(GeneratorImageMap {
        images: out
            .into_iter()
            .map(|o| o.expect("every vertex lies in a maximal clique"))
            .collect(),
    })
}

/// Generators of `Aut¹W` of the kinds used for right-angled Coxeter groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Aut1Generator {
    /// `perm[k - 1]` is the image of vertex `k`.
    GraphSymmetry(Vec<usize>),
    /// `v_i ↦ v_i v_j`, everything else fixed.
    Transvection { i: usize, j: usize },
}

impl Aut1Generator {
    pub fn to_image_map(&self, g: &LabeledGraph) -> GeneratorImageMap {
        let images = match self {
            Aut1Generator::GraphSymmetry(p) => p.iter().map(|&t| Word::generator(t)).collect(),
            Aut1Generator::Transvection { i, j } => (1..=g.n())
                .map(|k| {
                    if k == *i {
                        Word::from_syllables([Syllable::new(*i, 1), Syllable::new(*j, 1)])
                    } else {
                        Word::generator(k)
                    }
                })
                .collect(),
        };
        GeneratorImageMap::new(g, images).expect("generator images are valid")
    }
}

impl fmt::Display for Aut1Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Aut1Generator::GraphSymmetry(p) => {
                f.write_str("symmetry")?;
                for t in p {
                    write!(f, " {t}")?;
                }
                Ok(())
            }
            Aut1Generator::Transvection { i, j } => write!(f, "transvection v{i} -> v{i} v{j}"),
        }
    }
}

/// Whether the generators listed by [`aut1_generators`] are known to
/// generate `Aut¹W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Aut1Completeness {
    CompleteRacg,
    CandidateGeneral,
}

impl fmt::Display for Aut1Completeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Aut1Completeness::CompleteRacg => "complete (RACG)",
            Aut1Completeness::CandidateGeneral => "candidate (general)",
        })
    }
}

/// `v_i ↦ v_i v_j` preserves the relations iff `S_i ⊆ S_j` (so the two
/// commute) and `v_i v_j` has the order of `v_i`.
pub fn transvection_admissible(g: &LabeledGraph, i: usize, j: usize) -> bool {
    i != j
        && g.star_of(i).is_subset(&g.star_of(j))
        && g.order(j).divides(&g.order(i))
}

pub fn aut1_generators(g: &LabeledGraph) -> Result<(Vec<Aut1Generator>, Aut1Completeness)> {
    let mut gens: Vec<Aut1Generator> = g
        .automorphisms(DEFAULT_AUTOMORPHISM_BOUND)?
        .into_iter()
        .map(Aut1Generator::GraphSymmetry)
        .collect();
    for i in 1..=g.n() {
        for j in 1..=g.n() {
            if transvection_admissible(g, i, j) {
                gens.push(Aut1Generator::Transvection { i, j });
            }
        }
    }
    let status = if g.is_racg() {
        Aut1Completeness::CompleteRacg
    } else {
        Aut1Completeness::CandidateGeneral
    };
    Ok((gens, status))
}

impl FromStr for Aut1Completeness {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "complete (RACG)" => Ok(Self::CompleteRacg),
            "candidate (general)" => Ok(Self::CandidateGeneral),
            _ => Err(()),
        }
    }
}
