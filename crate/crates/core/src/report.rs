//! Line-oriented `key: value` reports.

use std::fmt::{self, Display};

use crate::aut::PartialConjugation;
use crate::graph::{LabeledGraph, OrderValue, SilWitness};
use crate::structure::{ExtensionSplitting, StructureReport, TreeDecomposition};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TextReport {
    lines: Vec<(String, String)>,
}

impl TextReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn line(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.lines.push((key.into(), value.to_string()));
        self
    }

    pub fn extend(&mut self, other: TextReport) -> &mut Self {
        self.lines.extend(other.lines);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl Display for TextReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            if v.is_empty() {
                writeln!(f, "{k}:")?;
            } else {
                writeln!(f, "{k}: {v}")?;
            }
        }
        Ok(())
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `yes`/`no`, or `undefined` when the hypotheses fail.
pub fn optional_bool(b: Option<bool>) -> &'static str {
    b.map_or("undefined", yes_no)
}

pub fn sil_text(s: &Option<SilWitness>) -> String {
    match s {
        None => "none".to_string(),
        Some(w) => format!("i={} j={} R={}", w.i, w.j, w.r),
    }
}

pub fn letters(pcs: &[PartialConjugation]) -> String {
    pcs.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn orders(os: &[OrderValue]) -> String {
    os.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn graph_info(g: &LabeledGraph) -> TextReport {
    let mut r = TextReport::new();
    let p = g.predicates();
    let cliques: Vec<String> = g.maximal_cliques().iter().map(|c| c.to_string()).collect();
    r.line("vertices", g.n())
        .line("orders", orders(g.orders()))
        .line("edges", g.edges().len())
        .line("connected", yes_no(g.is_connected()))
        .line("tree", yes_no(g.is_tree()))
        .line("maximal_cliques", cliques.join(" "))
        .line("leaves", &p.leaves)
        .line("center_vertices", &p.center_vertices)
        .line("four_cycle_chord_ok", yes_no(p.four_cycle_chord_ok))
        .line(
            "girth_ge_5_and_min_valence_2",
            yes_no(p.girth_ge_5_and_min_valence_2),
        )
        .line("aut_star_equals_aut", p.aut_star_equals_aut);
    r
}

pub fn tree_text(t: &TreeDecomposition) -> TextReport {
    let mut r = TextReport::new();
    for (i, l0) in &t.l0_partition {
        r.line(format!("L{i}_0"), letters(l0));
    }
    for (i, shape) in &t.shapes {
        r.line(format!("<L{i}_0>"), shape);
    }
    let ab: Vec<String> = t
        .per_vertex_case
        .values()
        .filter_map(|c| match c {
            crate::structure::VertexCase::CyclicFactorTimesOutLink { vertex, .. } => {
                Some(format!("Z_m({vertex})"))
            }
            _ => None,
        })
        .collect();
    r.line("ab", if ab.is_empty() { "trivial".to_string() } else { ab.join(" x ") })
        .line("ab_factor", orders(&t.ab_factor))
        .line(
            "ab_kind",
            serde_json::to_value(t.ab_kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default(),
        )
        .line("bfs_indexed", yes_no(t.bfs_indexed));
    r
}

pub fn splitting_text(e: &ExtensionSplitting) -> TextReport {
    let mut r = TextReport::new();
    r.line("extension_splitting", e.verdict)
        .line("extension_splitting.racg", yes_no(e.racg))
        .line("extension_splitting.condition1", yes_no(e.condition1))
        .line("extension_splitting.condition2", optional_bool(e.condition2))
        .line("extension_splitting.condition3", yes_no(e.condition3));
    r
}

pub fn structure_text(s: &StructureReport) -> TextReport {
    let mut r = TextReport::new();
    r.line("sil", sil_text(&s.sil))
        .line("out0_abelian", yes_no(s.out0_abelian))
        .line(
            "out0_witness",
            s.out0_witness
                .as_ref()
                .map_or("none".to_string(), |w| format!("{} {}", w.first, w.second)),
        )
        .line("coned", yes_no(s.coned))
        .line("out_w_finite", optional_bool(s.out_w_finite))
        .line("aut_w_hyperbolic", optional_bool(s.aut_w_hyperbolic))
        .line("vcd", s.vcd.map_or("undefined".to_string(), |v| v.to_string()))
        .line("aut_star_equals_aut", s.aut_star_equals_aut)
        .line("pc_count", s.pc_count)
        .line("pc0_count", s.pc0_count);
    r.extend(splitting_text(&s.extension_splitting));
    if let Some(t) = &s.tree {
        let mut tr = tree_text(t);
        tr.lines.iter_mut().for_each(|(k, _)| *k = format!("tree.{k}"));
        r.extend(tr);
    }
    r
}
