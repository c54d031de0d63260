//! The `gpauto` command-line front end.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! in-process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::aut::{
    all_partial_conjugations, evaluate, l_set, pc_zero, AutLetter, AutWord, PartialConjugation,
};
use crate::enumerate::{random_tree, run_check, vcd_identity, Check, MAX_ENUMERATION_N};
use crate::error::Error;
use crate::graph::{LabeledGraph, OrderValue};
use crate::report::{self, optional_bool, yes_no, TextReport};
use crate::structure::{
    aut_w_hyperbolic, classify_pair, extension_splitting_check, out0_is_abelian, out_w_finite,
    remark82_check, structure_report, tree_decomposition, vcd_out, verify_pair_commutation,
};
use crate::word::{cyclically_reduce, normal_form, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "gpauto",
    version,
    about = "Normal forms, partial conjugations and Out0 structure for graph products of cyclic groups"
)]
pub struct Cli {
    /// Graph file; otherwise the first positional argument.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest vertex count for `enumerate`.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graph summary and predicates.
    Info { args: Vec<String> },
    /// Normal form of a word.
    Reduce {
        /// Also print the cyclic reduction.
        #[arg(long)]
        cyclic: bool,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Apply a word in partial conjugations to the generators or to a word.
    Apply {
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// All partial conjugations.
    Pcs { args: Vec<String> },
    /// The canonical subset omitting the least component per operator.
    Pc0 { args: Vec<String> },
    /// Partial conjugations grouped by link point.
    Lsets {
        #[arg(long)]
        vertex: Option<usize>,
        args: Vec<String>,
    },
    /// Case number and commutation verdicts for two partial conjugations.
    Classify { args: Vec<String> },
    /// Separating intersection of links and a non-commuting witness.
    Sil { args: Vec<String> },
    /// Full structure report.
    Structure { args: Vec<String> },
    /// Tree decomposition of Out0.
    Tree { args: Vec<String> },
    /// Virtual cohomological dimension of Out, for trees with finite orders.
    Vcd { args: Vec<String> },
    /// Hyperbolicity of Aut and finiteness of Out.
    Hyperbolic { args: Vec<String> },
    /// Splitting criteria and, for right-angled Coxeter groups, the
    /// one-ended hyperbolic splitting conditions.
    Extensions { args: Vec<String> },
    /// Exhaustive checks over small connected graphs.
    Enumerate {
        /// A check name or `all`.
        #[arg(long, default_value = "all")]
        check: String,
    },
}

/// Exit status and captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(m)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {}::{}: {e}\n", e.module(), e.name()),
        },
        Err(Failure::Io(m)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
    }
}

/// Splits off the graph and returns it with the remaining positionals.
fn load(cli: &Cli, args: &[String]) -> std::result::Result<(LabeledGraph, Vec<String>), Failure> {
    let (path, rest) = match &cli.graph {
        Some(p) => (p.clone(), args.to_vec()),
        None => match args.split_first() {
            Some((p, rest)) => (PathBuf::from(p), rest.to_vec()),
            None => return Err(Failure::Usage("no graph file given".into())),
        },
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok((text.parse()?, rest))
}

fn at_most(rest: &[String], n: usize) -> std::result::Result<(), Failure> {
    if rest.len() > n {
        return Err(Failure::Usage(format!("unexpected argument `{}`", rest[n])));
    }
    Ok(())
}

fn emit(cli: &Cli, text: impl std::fmt::Display, value: Value) -> String {
    match cli.format {
        Format::Text => text.to_string(),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn lines(items: &[impl ToString]) -> String {
    items.iter().map(|x| format!("{}\n", x.to_string())).collect()
}

fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Info { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let value = json!({
                "vertices": g.n(),
                "orders": g.orders(),
                "edges": g.edges(),
                "connected": g.is_connected(),
                "tree": g.is_tree(),
                "maximal_cliques": g.maximal_cliques(),
                "predicates": g.predicates(),
                "sil": g.find_sil(),
            });
            let mut text = report::graph_info(&g);
            text.line("sil", report::sil_text(&g.find_sil()));
            Ok(emit(cli, text, value))
        }
        Command::Reduce { cyclic, args } => {
            let (g, rest) = load(cli, args)?;
            let w: Word = rest.join(" ").parse()?;
            let nf = normal_form(&g, &w)?;
            if *cyclic {
                let c = cyclically_reduce(&g, &w)?;
                let mut t = TextReport::new();
                t.line("normal_form", &*nf)
                    .line("core", &*c.core)
                    .line("conjugator", &*c.conjugator);
                let v = json!({
                    "normal_form": nf,
                    "core": c.core,
                    "conjugator": c.conjugator,
                });
                Ok(emit(cli, t, v))
            } else {
                Ok(emit(cli, format!("{}\n", nf), json!({ "normal_form": nf })))
            }
        }
        Command::Apply { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 2)?;
            let Some(aw) = rest.first() else {
                return Err(Failure::Usage("apply needs a partial conjugation word".into()));
            };
            let phi = evaluate(&g, &AutWord::parse(&g, aw)?);
            if let Some(ws) = rest.get(1) {
                let w: Word = ws.parse()?;
                let img = crate::aut::apply(&g, &phi, &w)?;
                Ok(emit(cli, format!("{}\n", img), json!({ "image": img })))
            } else {
                let mut t = TextReport::new();
                let mut images = Vec::new();
                for j in 1..=g.n() {
                    let img = phi.image(&g, j);
                    t.line(format!("v{j}"), &*img);
                    images.push(img);
                }
                Ok(emit(cli, t, json!({ "images": images })))
            }
        }
        Command::Pcs { args } | Command::Pc0 { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let pcs = if matches!(cli.command, Command::Pcs { .. }) {
                all_partial_conjugations(&g)
            } else {
                pc_zero(&g)
            };
            Ok(emit(cli, lines(&pcs), json!(pcs)))
        }
        Command::Lsets { vertex, args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let range: Vec<usize> = match vertex {
                Some(i) => {
                    g.check_index(*i)?;
                    vec![*i]
                }
                None => (1..=g.n()).collect(),
            };
            let mut t = TextReport::new();
            let mut map = serde_json::Map::new();
            for i in range {
                let l = l_set(&g, i)?;
                t.line(format!("L{i}"), report::letters(&l));
                map.insert(i.to_string(), json!(l));
            }
            Ok(emit(cli, t, Value::Object(map)))
        }
        Command::Classify { args } => {
            let (g, rest) = load(cli, args)?;
            if rest.len() != 2 {
                return Err(Failure::Usage("classify needs exactly two letters".into()));
            }
            let parse = |s: &str| -> std::result::Result<PartialConjugation, Failure> {
                let l = AutLetter::parse(&g, s)?;
                if l.inverse {
                    return Err(Failure::Usage(format!("`{s}`: give partial conjugations without `'`")));
                }
                Ok(l.pc)
            };
            let a = parse(&rest[0])?;
            let b = parse(&rest[1])?;
            let case = classify_pair(&g, &a, &b)?;
            let brute = verify_pair_commutation(&g, &a, &b);
            let mut t = TextReport::new();
            t.line("case", case.case_number)
                .line("predicted_commute", yes_no(case.predicted_commute))
                .line("brute_force_commute", yes_no(brute))
                .line("agree", yes_no(brute == case.predicted_commute));
            let v = json!({
                "case_number": case.case_number,
                "predicted_commute": case.predicted_commute,
                "brute_force_commute": brute,
            });
            Ok(emit(cli, t, v))
        }
        Command::Sil { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let sil = g.find_sil();
            let ab = out0_is_abelian(&g);
            let mut t = TextReport::new();
            t.line("sil", report::sil_text(&sil))
                .line("out0_abelian", yes_no(ab.abelian))
                .line(
                    "out0_witness",
                    ab.witness
                        .as_ref()
                        .map_or("none".to_string(), |w| format!("{} {}", w.first, w.second)),
                )
                .line("coned", yes_no(ab.coned));
            Ok(emit(cli, t, json!({ "sil": sil, "out0": ab })))
        }
        Command::Structure { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let r = structure_report(&g);
            Ok(emit(cli, report::structure_text(&r), json!(r)))
        }
        Command::Tree { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let t = tree_decomposition(&g)?;
            Ok(emit(cli, report::tree_text(&t), json!(t)))
        }
        Command::Vcd { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let v = vcd_out(&g);
            let text = format!("vcd: {}\n", v.map_or("undefined".to_string(), |v| v.to_string()));
            Ok(emit(cli, text, json!({ "vcd": v })))
        }
        Command::Hyperbolic { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let h = aut_w_hyperbolic(&g);
            let f = out_w_finite(&g);
            let mut t = TextReport::new();
            t.line("aut_w_hyperbolic", optional_bool(h))
                .line("out_w_finite", optional_bool(f))
                .line("sil", report::sil_text(&g.find_sil()))
                .line("four_cycle_chord_ok", yes_no(g.four_cycle_chord_ok()));
            let v = json!({
                "aut_w_hyperbolic": h,
                "out_w_finite": f,
                "sil": g.find_sil(),
                "four_cycle_chord_ok": g.four_cycle_chord_ok(),
            });
            Ok(emit(cli, t, v))
        }
        Command::Extensions { args } => {
            let (g, rest) = load(cli, args)?;
            at_most(&rest, 0)?;
            let e = extension_splitting_check(&g);
            let mut t = report::splitting_text(&e);
            let r82 = if g.is_racg() { Some(remark82_check(&g)?) } else { None };
            if let Some(r) = &r82 {
                t.line(
                    "one_ended_splitting.clique_complements_connected",
                    yes_no(r.clique_complements_connected),
                )
                .line("one_ended_splitting.four_cycle_chord_ok", yes_no(r.four_cycle_chord_ok))
                .line(
                    "one_ended_splitting.separator",
                    r.virtually_abelian_separator
                        .as_ref()
                        .map_or("none".to_string(), |s| s.to_string()),
                )
                .line("one_ended_splitting.no_sil", yes_no(r.no_sil))
                .line("one_ended_splitting.all_hold", yes_no(r.all_hold));
            }
            Ok(emit(cli, t, json!({ "extension_splitting": e, "one_ended_splitting": r82 })))
        }
        Command::Enumerate { check } => {
            let checks: Vec<Check> = if check == "all" {
                Check::ALL.to_vec()
            } else {
                vec![check.parse().map_err(Failure::Usage)?]
            };
            let max_n = cli.max_n.unwrap_or(5);
            if max_n == 0 || max_n > MAX_ENUMERATION_N {
                return Err(Failure::Usage(format!(
                    "--max-n must be between 1 and {MAX_ENUMERATION_N}"
                )));
            }
            let mut t = TextReport::new();
            let mut summaries = Vec::new();
            let mut ok = true;
            for c in checks {
                let s = run_check(c, max_n);
                ok &= s.passed();
                t.line(
                    c.name(),
                    format!(
                        "{} graphs, {} items, {} failures",
                        s.graphs, s.items, s.failure_count
                    ),
                );
                for f in &s.failures {
                    t.line(format!("{}.failure", c.name()), f);
                }
                summaries.push(s);
            }
            let mut random = Value::Null;
            if let Some(seed) = cli.seed {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut bad = 0usize;
                for k in 0..200 {
                    let n = 5 + k % 8;
                    if !vcd_identity(&random_tree(n, OrderValue::Finite(2), &mut rng)) {
                        bad += 1;
                    }
                }
                ok &= bad == 0;
                t.line("random_trees", format!("200 trees, seed {seed}, {bad} failures"));
                random = json!({ "seed": seed, "trees": 200, "failures": bad });
            }
            t.line("result", if ok { "pass" } else { "fail" });
            let out = emit(
                cli,
                t,
                json!({ "checks": summaries, "random_trees": random, "passed": ok }),
            );
            if ok {
                Ok(out)
            } else {
                Err(Failure::Io(format!("enumeration checks failed\n{out}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["gpauto"]).code, 2);
        assert_eq!(run(["gpauto", "bogus"]).code, 2);
        assert_eq!(run(["gpauto", "pcs"]).code, 2);
        assert_eq!(run(["gpauto", "enumerate", "--check", "nope"]).code, 2);
    }

    #[test]
    fn missing_file_is_domain_failure() {
        let o = run(["gpauto", "pcs", "/nonexistent/graph"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("cannot read"));
    }

    #[test]
    fn help_exits_0() {
        let o = run(["gpauto", "--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("enumerate"));
    }
}
