//! Command-line front end: read an instance, optionally kernelize, solve,
//! and report a JSON document.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::cores::{solve_diverse_vc, solve_diverse_vc_direct};
use crate::decomposition::{
    ensure_valid, find_vertex_cover, normalize, parse_td, pd_from_vertex_cover, RootedTreeDecomposition,
};
use crate::instances::{parse_instance, Graph, ProblemInstance, ProblemKind};
use crate::kernels::{diverse_kernel_transform, lossless_kernel, KernelOutcome, KernelReport};
use crate::{diversity, oracle, ElementId, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Tree-decomposition DP for vertex cover; kernel, then oracle, otherwise.
    Auto,
    /// The hand-written table DP (vertex cover only).
    Direct,
    /// The generic dynamic-core product (vertex cover only).
    Framework,
    /// Exhaustive search on small instances.
    Oracle,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "diversekit", version, about = "Find r diverse solutions of size at most k")]
pub struct RunConfig {
    /// vc, hs, plc or fast.
    #[arg(long)]
    pub problem: ProblemKind,
    /// Size bound on every solution.
    #[arg(long)]
    pub k: usize,
    /// Number of solutions.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Required total pairwise Hamming distance.
    #[arg(long, default_value_t = 0)]
    pub d: u64,
    /// Tree decomposition in PACE `.td` format (vertex cover only).
    #[arg(long)]
    pub td: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,
    /// Shrink the instance with the loss-less kernel first (always on for
    /// non-vc problems in auto mode).
    #[arg(long)]
    pub kernelize: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Write per-node table sizes as CSV to this file.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Instance file.
    pub input: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub mode: Mode,
    pub nodes: usize,
    pub width: usize,
    pub max_states: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub answer: &'static str,
    pub solutions: Vec<Vec<ElementId>>,
    pub diversity: u64,
    pub kernel: Option<KernelReport>,
    pub tables: Option<TableReport>,
}

impl Report {
    fn no(kernel: Option<KernelReport>, tables: Option<TableReport>) -> Self {
        Report { answer: "no", solutions: Vec::new(), diversity: 0, kernel, tables }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    /// 0 for yes, 1 for no, 2 for any error.
    pub exit_code: i32,
    /// JSON report, or empty on error.
    pub json: String,
    /// One-line human summary or error message.
    pub summary: String,
}

/// Runs the whole pipeline; never panics on bad input.
pub fn run(config: &RunConfig) -> RunOutput {
    match execute(config) {
        Ok(report) => {
            let exit_code = if report.answer == "yes" { 0 } else { 1 };
            let mut summary = format!("answer: {}", report.answer);
            if report.answer == "yes" {
                let _ = write!(summary, " ({} solutions, diversity {})", report.solutions.len(), report.diversity);
            }
            if let Some(kernel) = &report.kernel {
                let _ = write!(
                    summary,
                    "; kernel {} with {} forced and {} allowed",
                    kernel.verdict,
                    kernel.forced.len(),
                    kernel.allowed.len()
                );
            }
            let json = serde_json::to_string(&report).expect("report serializes");
            RunOutput { exit_code, json, summary }
        }
        Err(e) => RunOutput { exit_code: 2, json: String::new(), summary: format!("error: {e}") },
    }
}

fn check_config(config: &RunConfig) -> Result<()> {
    if config.r == 0 {
        return Err(Error::InvalidArgument("--r must be at least 1".into()));
    }
    if config.problem != ProblemKind::Vc {
        if matches!(config.mode, Mode::Direct | Mode::Framework) {
            return Err(Error::InvalidArgument(format!(
                "--mode {:?} needs a tree decomposition core, which exists only for vc; {} is solved by kernelization and the oracle",
                config.mode,
                config.problem
            )
            .to_lowercase()));
        }
        if config.td.is_some() {
            return Err(Error::InvalidArgument("--td is accepted only for vc".into()));
        }
    }
    Ok(())
}

fn execute(config: &RunConfig) -> Result<Report> {
    check_config(config)?;
    let text = std::fs::read_to_string(&config.input)?;
    let original = parse_instance(config.problem, &text)?;
    let td = match &config.td {
        Some(path) => Some(read_td(path, &original)?),
        None => None,
    };

    let kernelize = config.kernelize || (config.mode == Mode::Auto && config.problem != ProblemKind::Vc);
    let (working, budget, forced, kernel) = if kernelize {
        let outcome = lossless_kernel(&original, config.k)?;
        match &outcome {
            KernelOutcome::No(_) => return Ok(Report::no(Some(KernelReport::new(&original, &outcome, None)), None)),
            KernelOutcome::Reduced(kernel) => {
                let out = diverse_kernel_transform(&original, config.k, config.r, config.d, kernel)?;
                let report = KernelReport::new(&original, &outcome, Some(&out.instance));
                (out.instance, out.k_reduced, kernel.forced.clone(), Some(report))
            }
        }
    } else {
        (original.clone(), config.k, BTreeSet::new(), None)
    };

    let (found, tables) = match (&working, config.mode) {
        (_, Mode::Oracle) | (_, Mode::Auto) if working.kind() != ProblemKind::Vc || config.mode == Mode::Oracle => {
            let space = oracle::enumerate_solutions(&working, budget)?;
            (oracle::find_diverse(&space, config.r, config.d)?, None)
        }
        (ProblemInstance::VertexCover { graph, labels }, mode) => {
            solve_vc(config, graph, labels, td.as_ref(), budget, mode)?
        }
        _ => unreachable!("configuration checked"),
    };

    let Some(sets) = found else {
        return Ok(Report::no(kernel, tables));
    };
    let lifted: Vec<BTreeSet<ElementId>> =
        sets.into_iter().map(|s| s.into_iter().chain(forced.iter().copied()).collect()).collect();
    for s in &lifted {
        if s.len() > config.k || !original.is_solution(s) {
            return Err(Error::InvalidArgument(format!("internal check failed: {s:?} is not a solution")));
        }
    }
    let value = diversity::diversity(&lifted);
    Ok(Report {
        answer: "yes",
        solutions: lifted.iter().map(|s| s.iter().copied().collect()).collect(),
        diversity: value,
        kernel,
        tables,
    })
}

fn read_td(path: &PathBuf, original: &ProblemInstance) -> Result<RootedTreeDecomposition> {
    let ProblemInstance::VertexCover { graph, .. } = original else {
        return Err(Error::InvalidArgument("--td is accepted only for vc".into()));
    };
    let (td, n) = parse_td(&std::fs::read_to_string(path)?)?;
    if n != graph.n() {
        return Err(Error::InvalidArgument(format!("decomposition is for {n} vertices, graph has {}", graph.n())));
    }
    ensure_valid(graph, &td)?;
    Ok(td)
}

/// Keeps only the vertices whose labels survive, renumbered to local indices.
fn restrict(td: &RootedTreeDecomposition, labels: &[ElementId]) -> Result<RootedTreeDecomposition> {
    let bags = (0..td.len())
        .map(|t| td.bag(t).iter().filter_map(|v| labels.binary_search(v).ok()).collect())
        .collect();
    let parent = (0..td.len()).map(|t| td.parent(t)).collect();
    RootedTreeDecomposition::new(bags, parent)
}

type Solved = (Option<Vec<BTreeSet<ElementId>>>, Option<TableReport>);

fn solve_vc(
    config: &RunConfig,
    graph: &Graph,
    labels: &[ElementId],
    td: Option<&RootedTreeDecomposition>,
    budget: usize,
    mode: Mode,
) -> Result<Solved> {
    let td = match td {
        Some(td) => normalize(&restrict(td, labels)?)?,
        None => match find_vertex_cover(graph, budget) {
            Some(cover) => normalize(&pd_from_vertex_cover(graph, &cover)?)?,
            None => return Ok((None, None)),
        },
    };
    let to_ids = |sets: Vec<BTreeSet<usize>>| -> Vec<BTreeSet<ElementId>> {
        sets.into_iter().map(|s| s.into_iter().map(|v| labels[v]).collect()).collect()
    };
    let (found, csv, max_states) = if mode == Mode::Direct {
        let out = solve_diverse_vc_direct(graph, &td, budget, config.r, config.d)?;
        let max = out.max_tuples();
        (out.solutions.clone().map(to_ids), out.trace_csv(), max)
    } else {
        let out = solve_diverse_vc(graph, &td, budget, config.r, config.d, config.threads)?;
        let max = out.stats.iter().map(|s| s.states).max().unwrap_or(0);
        let mut csv = String::from("node,delta,states,tuples\n");
        for s in &out.stats {
            let _ = writeln!(csv, "{},{},{},{}", s.node, s.delta, s.states, s.tuples);
        }
        (out.solutions.map(to_ids), csv, max)
    };
    if let Some(path) = &config.trace {
        std::fs::write(path, csv)?;
    }
    let used = if mode == Mode::Direct { Mode::Direct } else { Mode::Framework };
    let tables = TableReport { mode: used, nodes: td.len(), width: td.width(), max_states };
    Ok((found, Some(tables)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn config(problem: ProblemKind, k: usize, r: usize, d: u64, text: &str) -> (RunConfig, tempfile::NamedTempFile) {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(text.as_bytes()).unwrap();
        let config = RunConfig {
            problem,
            k,
            r,
            d,
            td: None,
            mode: Mode::Auto,
            kernelize: false,
            threads: 1,
            trace: None,
            input: file.path().to_path_buf(),
        };
        (config, file)
    }

    #[test]
    fn single_edge_pair() {
        let (c, _f) = config(ProblemKind::Vc, 1, 2, 2, "p edge 2 1\ne 1 2\n");
        let out = run(&c);
        assert_eq!(out.exit_code, 0, "{}", out.summary);
        let report: serde_json::Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(report["answer"], "yes");
        assert_eq!(report["diversity"], 2);
        assert_eq!(report["solutions"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn single_edge_cannot_reach_three() {
        let (c, _f) = config(ProblemKind::Vc, 1, 2, 3, "p edge 2 1\ne 1 2\n");
        assert_eq!(run(&c).exit_code, 1);
    }

    #[test]
    fn cyclic_triangle_needs_a_deletion() {
        let (c, _f) = config(ProblemKind::Fast, 0, 1, 0, "p tour 3\na 1 2\na 2 3\na 3 1\n");
        assert_eq!(run(&c).exit_code, 1);
    }

    #[test]
    fn modes_agree() {
        let text = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
        for d in 0..6 {
            let answers: Vec<i32> = [Mode::Direct, Mode::Framework, Mode::Oracle]
                .into_iter()
                .map(|mode| {
                    let (mut c, _f) = config(ProblemKind::Vc, 2, 2, d, text);
                    c.mode = mode;
                    run(&c).exit_code
                })
                .collect();
            assert!(answers.iter().all(|&a| a == answers[0]), "{answers:?}");
        }
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut c, _f) = config(ProblemKind::Hs, 1, 1, 0, "p hs 2 1 2\nh 1 2\n");
        c.mode = Mode::Framework;
        assert_eq!(run(&c).exit_code, 2);
        let (c, _f) = config(ProblemKind::Vc, 1, 1, 0, "p edge 2 1\ne 1 1\n");
        assert_eq!(run(&c).exit_code, 2);
        let (c, _f) = config(ProblemKind::Vc, 1, 0, 0, "p edge 2 1\ne 1 2\n");
        assert_eq!(run(&c).exit_code, 2);
    }

    #[test]
    fn kernelized_star() {
        let (mut c, _f) = config(ProblemKind::Vc, 1, 2, 0, "p edge 6 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 1 6\n");
        c.kernelize = true;
        let out = run(&c);
        assert_eq!(out.exit_code, 0, "{}", out.summary);
        let report: serde_json::Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(report["kernel"]["forced"], serde_json::json!([0]));
        assert_eq!(report["solutions"], serde_json::json!([[0], [0]]));
        c.d = 1;
        assert_eq!(run(&c).exit_code, 1);
    }
}
