//! Command-line front end. [`run`] returns the exit code and the text to print.

use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{
    ex_formula, ex_singleton, extremal_count_singleton, pattern_of, resolve_pattern, ExValue, PatternId, Stat,
};
use crate::containment::contains_witness;
use crate::counting::{
    check_bounds, count_edge_type, enumerate_weight, h_order, h_weight, EdgeType, OrderMethod, Variant, WeightMethod,
};
use crate::dobinski::{format_ratio, verify_dobinski};
use crate::error::Error;
use crate::extremal::{ex_brute, extremal_witnesses, verify_table, CellOutcome, SearchBudget};
use crate::hypergraph::{format_hypergraph, OrderedHypergraph};
use crate::Count;

pub const THREADS_ENV: &str = "ORDHYPER_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "ordhyper",
    version,
    about = "Ordered hypergraph patterns, extremal functions and enumeration"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Does the host contain the pattern?
    Contains {
        pattern: String,
        host: String,
        /// Also print an embedding.
        #[arg(long)]
        witness: bool,
    },
    /// Extremal function of a pattern.
    Exfn {
        pattern: String,
        n: usize,
        #[arg(long, value_enum, default_value = "edges")]
        stat: StatArg,
        #[arg(long, value_enum, default_value = "formula")]
        method: ExMethod,
        /// List the extremal hypergraphs (brute force), or count them (singletons).
        #[arg(long)]
        witnesses: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Count hypergraphs by order or by weight.
    Count {
        #[arg(long, value_enum)]
        by: CountBy,
        #[arg(long, value_enum, default_value = "simple")]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: Option<CountMethod>,
    },
    /// Count hypergraphs of an edge type such as "1^2 4^1".
    EdgeType {
        lambda: String,
        #[arg(long, value_enum, default_value = "simple")]
        variant: VariantArg,
    },
    /// List every hypergraph of a weight up to isomorphism.
    Enumerate {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value = "simple")]
        variant: VariantArg,
    },
    /// Check the Dobinski-type identities.
    Dobinski {
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Node limit for brute-force search.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit in seconds for brute-force search.
    #[arg(long)]
    budget_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(self) -> Result<SearchBudget, Error> {
        let time_limit = match self.budget_seconds {
            Some(s) if !(s.is_finite() && s >= 0.0) => return Err(Error::Invalid(format!("bad time budget {s}"))),
            s => s.map(Duration::from_secs_f64),
        };
        Ok(SearchBudget {
            node_limit: self.budget_nodes,
            time_limit,
            ..SearchBudget::default()
        })
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StatArg {
    Edges,
    #[value(alias = "incidences")]
    Inc,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Self {
        match s {
            StatArg::Edges => Stat::Edges,
            StatArg::Inc => Stat::Incidences,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExMethod {
    Formula,
    Brute,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CountBy {
    Vertices,
    Weight,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CountMethod {
    Recurrence,
    Explicit,
    Convolution,
    PartitionSum,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    Simple,
    Multi,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Simple => Variant::Simple,
            VariantArg::Multi => Variant::Multi,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Suite {
    Table,
    Singleton,
    Counts,
    Dobinski,
    Bounds,
}

/// Outcome of a subcommand before rendering.
struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Self {
            code: 0,
            text: text.into(),
            json,
        }
    }

    fn value(v: impl ToString) -> Self {
        let s = v.to_string();
        Self::ok(s.clone(), json!({ "value": s }))
    }

    fn check(passed: bool, text: String, json: Value) -> Self {
        Self {
            code: if passed { 0 } else { 1 },
            text,
            json,
        }
    }
}

fn exit_class(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::EmptyEdge { .. }
        | Error::BadVertex { .. }
        | Error::InvalidPattern(_)
        | Error::InvalidEdgeType(_)
        | Error::Invalid(_) => 2,
        _ => 1,
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Simple => "simple",
        Variant::Multi => "multi",
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string().trim_end().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            let text = if cli.json { out.json.to_string() } else { out.text };
            (out.code, text)
        }
        Err(e) => {
            let text = if cli.json {
                json!({ "error": e.to_string() }).to_string()
            } else {
                format!("error: {e}")
            };
            (exit_class(&e), text)
        }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Contains { pattern, host, witness } => cmd_contains(&pattern, &host, witness),
        Command::Exfn {
            pattern,
            n,
            stat,
            method,
            witnesses,
            budget,
        } => cmd_exfn(&pattern, n, stat.into(), method, witnesses, budget.budget()?),
        Command::Count { by, variant, n, method } => cmd_count(by, variant.into(), n, method),
        Command::EdgeType { lambda, variant } => {
            let t: EdgeType = lambda.parse()?;
            Ok(Outcome::value(count_edge_type::<Count>(&t, variant.into())))
        }
        Command::Enumerate { weight, variant } => {
            let all = enumerate_weight(weight, variant.into())?;
            let lines: Vec<String> = all.iter().map(format_hypergraph).collect();
            Ok(Outcome::ok(
                lines.join("\n"),
                json!({ "count": all.len().to_string(), "hypergraphs": lines }),
            ))
        }
        Command::Dobinski { n_max } => cmd_dobinski(n_max),
        Command::Verify { suite, n_max, budget } => {
            let budget = budget.budget()?;
            match suite {
                Suite::Table => suite_table(n_max.unwrap_or(4), budget),
                Suite::Singleton => suite_singleton(n_max.unwrap_or(5), budget),
                Suite::Counts => suite_counts(n_max.unwrap_or(8)),
                Suite::Dobinski => cmd_dobinski(n_max.unwrap_or(9)),
                Suite::Bounds => suite_bounds(n_max.unwrap_or(12)),
            }
        }
    }
}

fn cmd_contains(pattern: &str, host: &str, witness: bool) -> Result<Outcome, Error> {
    let p = resolve_pattern(pattern)?;
    let h = resolve_pattern(host)?;
    let found = contains_witness(&p, &h);
    let mut text = found.is_some().to_string();
    let mut js = json!({ "value": found.is_some() });
    if let (true, Some(emb)) = (witness, &found) {
        let vm: Vec<String> = emb.vertex_map.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        text.push_str(&format!("\nvertices {}\nedges {:?}", vm.join(" "), emb.edge_assignment));
        js["vertex_map"] = json!(emb.vertex_map);
        js["edge_assignment"] = json!(emb.edge_assignment);
    }
    Ok(Outcome::ok(text, js))
}

fn catalog_id(pattern: &str, h: &OrderedHypergraph) -> Result<PatternId, Error> {
    pattern.parse::<PatternId>().or_else(|_| {
        PatternId::identify(h).ok_or_else(|| Error::InvalidPattern(format!("{pattern} is not in the catalog")))
    })
}

fn cmd_exfn(
    pattern: &str,
    n: usize,
    stat: Stat,
    method: ExMethod,
    witnesses: bool,
    budget: SearchBudget,
) -> Result<Outcome, Error> {
    let h = resolve_pattern(pattern)?;
    match method {
        ExMethod::Formula => {
            let id = catalog_id(pattern, &h)?;
            let value = ex_formula::<Count>(id, n, stat)?;
            let ExValue::Defined(v) = value else {
                return Ok(Outcome::ok("undefined", json!({ "value": null })));
            };
            if !witnesses {
                return Ok(Outcome::value(v));
            }
            let PatternId::Singleton(k) = id else {
                return Err(Error::Invalid(
                    "witness counts by formula exist only for S_k; use --method brute".into(),
                ));
            };
            let count: Count = extremal_count_singleton(k, n, stat)?;
            Ok(Outcome::ok(
                format!("{v}\nwitnesses {count}"),
                json!({ "value": v.to_string(), "witness_count": count.to_string() }),
            ))
        }
        ExMethod::Brute => {
            let result = if witnesses {
                extremal_witnesses(&h, n, stat, budget)
            } else {
                ex_brute(&h, n, stat, budget)
            };
            let report = match result {
                Ok(r) => r,
                Err(Error::Undefined) => return Ok(Outcome::ok("undefined", json!({ "value": null }))),
                Err(Error::BudgetExceeded { nodes, lower_bound }) => {
                    let lb = lower_bound.map(|b| b.to_string());
                    return Ok(Outcome {
                        code: 1,
                        text: format!(
                            "lower-bound {} (search stopped after {nodes} nodes)",
                            lb.as_deref().unwrap_or("none")
                        ),
                        json: json!({ "value": lb, "status": "lower-bound", "nodes": nodes.to_string() }),
                    });
                }
                Err(e) => return Err(e),
            };
            let mut text = report.value.to_string();
            let mut js = json!({ "value": report.value.to_string(), "nodes": report.nodes_explored.to_string() });
            if let (Some(count), Some(ws)) = (&report.witness_count, &report.witnesses) {
                let lines: Vec<String> = ws.iter().map(format_hypergraph).collect();
                text.push_str(&format!("\nwitnesses {count}"));
                for l in &lines {
                    text.push('\n');
                    text.push_str(l);
                }
                js["witness_count"] = json!(count.to_string());
                js["witnesses"] = json!(lines);
            }
            Ok(Outcome::ok(text, js))
        }
    }
}

fn cmd_count(by: CountBy, variant: Variant, n: usize, method: Option<CountMethod>) -> Result<Outcome, Error> {
    match by {
        CountBy::Vertices => {
            if variant == Variant::Multi {
                return Err(Error::Invalid(
                    "counting by vertices is defined for simple hypergraphs only".into(),
                ));
            }
            let m = match method {
                None | Some(CountMethod::Recurrence) => OrderMethod::Recurrence,
                Some(CountMethod::Explicit) => OrderMethod::Explicit,
                Some(CountMethod::Convolution) => OrderMethod::Convolution,
                Some(CountMethod::PartitionSum) => {
                    return Err(Error::Invalid("partition-sum counts by weight, not by vertices".into()))
                }
            };
            Ok(Outcome::value(h_order::<Count>(n, m)))
        }
        CountBy::Weight => {
            let m = match method {
                None | Some(CountMethod::Recurrence) => WeightMethod::Recurrence,
                Some(CountMethod::PartitionSum) => WeightMethod::PartitionSum,
                Some(other) => return Err(Error::Invalid(format!("{other:?} counts by vertices, not by weight"))),
            };
            Ok(Outcome::value(h_weight::<Count>(n, variant, m)))
        }
    }
}

fn cmd_dobinski(n_max: usize) -> Result<Outcome, Error> {
    let report = verify_dobinski::<Count>(n_max);
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "variant": variant_name(r.variant),
                "lhs": format_ratio(&r.lhs),
                "rhs": format_ratio(&r.rhs),
                "holds": r.holds(),
            })
        })
        .collect();
    let held = report.rows.iter().filter(|r| r.holds()).count();
    let text = format!("{report}{held}/{} identities hold", report.rows.len());
    Ok(Outcome::check(
        report.all_hold(),
        text,
        json!({ "passed": report.all_hold(), "rows": rows }),
    ))
}

fn suite_table(n_max: usize, budget: SearchBudget) -> Result<Outcome, Error> {
    let started = Instant::now();
    let mut text = String::new();
    let mut cells = Vec::new();
    let mut passed = true;
    for stat in [Stat::Edges, Stat::Incidences] {
        let report = verify_table(n_max, stat, budget);
        passed &= report.all_match();
        text.push_str(&format!(
            "{stat:?}: {}\n",
            report.to_string().lines().last().unwrap_or("")
        ));
        for c in report.mismatches().chain(report.skipped()) {
            text.push_str(&format!("  {} n={}: {:?}\n", c.id, c.n, c.outcome));
        }
        for c in &report.cells {
            let (status, value) = match &c.outcome {
                CellOutcome::Match(v) => ("match", v.to_string()),
                CellOutcome::Mismatch { brute, .. } => ("mismatch", brute.to_string()),
                CellOutcome::Skipped(why) => ("skipped", why.clone()),
            };
            cells.push(json!({
                "pattern": c.id.to_string(),
                "n": c.n,
                "stat": format!("{stat:?}").to_lowercase(),
                "status": status,
                "value": value,
            }));
        }
    }
    text.push_str(&format!("{:.1}s", started.elapsed().as_secs_f64()));
    Ok(Outcome::check(
        passed,
        text,
        json!({ "passed": passed, "cells": cells }),
    ))
}

fn suite_singleton(n_max: usize, budget: SearchBudget) -> Result<Outcome, Error> {
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut passed = true;
    for k in 2..=4 {
        let pattern = pattern_of(PatternId::Singleton(k))?;
        for stat in [Stat::Edges, Stat::Incidences] {
            for n in 1..=n_max {
                let want: Count = ex_singleton(k, n, stat)?;
                let counted = k >= 3;
                let got = if counted {
                    extremal_witnesses(&pattern, n, stat, budget)
                } else {
                    ex_brute(&pattern, n, stat, budget)
                };
                let (ok, detail) = match got {
                    Ok(r) => {
                        let mut ok = r.value == want;
                        let mut detail = format!("value {} (formula {want})", r.value);
                        if let Some(c) = r.witness_count {
                            let want_c: Count = extremal_count_singleton(k, n, stat)?;
                            ok &= c == want_c;
                            detail.push_str(&format!(", witnesses {c} (formula {want_c})"));
                        }
                        (ok, detail)
                    }
                    Err(e) => (false, e.to_string()),
                };
                passed &= ok;
                lines.push(format!(
                    "S{k} n={n} {stat:?}: {} {detail}",
                    if ok { "ok" } else { "FAIL" }
                ));
                rows.push(
                    json!({ "k": k, "n": n, "stat": format!("{stat:?}").to_lowercase(), "ok": ok, "detail": detail }),
                );
            }
        }
    }
    Ok(Outcome::check(
        passed,
        lines.join("\n"),
        json!({ "passed": passed, "rows": rows }),
    ))
}

fn suite_counts(n_max: usize) -> Result<Outcome, Error> {
    let mut lines = Vec::new();
    let mut passed = true;
    for n in 1..=n_max.min(10) {
        let r: Count = h_order(n, OrderMethod::Recurrence);
        let e: Count = h_order(n, OrderMethod::Explicit);
        let c: Count = h_order(n, OrderMethod::Convolution);
        let ok = r == e && e == c;
        passed &= ok;
        lines.push(format!("h_{n} = {r} {}", if ok { "ok" } else { "FAIL" }));
    }
    for variant in [Variant::Simple, Variant::Multi] {
        for n in 1..=n_max {
            let a: Count = h_weight(n, variant, WeightMethod::PartitionSum);
            let b: Count = h_weight(n, variant, WeightMethod::Recurrence);
            let mut ok = a == b;
            let mut note = String::new();
            if let Ok(all) = enumerate_weight(n, variant) {
                ok &= Count::from(all.len()) == a;
                note = format!(" enumerated {}", all.len());
            }
            passed &= ok;
            lines.push(format!(
                "{} weight {n} = {a}{note} {}",
                variant_name(variant),
                if ok { "ok" } else { "FAIL" }
            ));
        }
    }
    Ok(Outcome::check(
        passed,
        lines.join("\n"),
        json!({ "passed": passed, "lines": lines }),
    ))
}

fn suite_bounds(n_max: usize) -> Result<Outcome, Error> {
    let failing: Vec<usize> = (1..=n_max).filter(|&n| !check_bounds(n)).collect();
    let passed = failing.is_empty();
    let text = if passed {
        format!("bounds hold for n = 1..{n_max}")
    } else {
        format!("bounds fail for n = {failing:?}")
    };
    Ok(Outcome::check(
        passed,
        text,
        json!({ "passed": passed, "failing": failing }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (i32, String) {
        run(std::iter::once("ordhyper").chain(args.iter().copied()))
    }

    #[test]
    fn documented_examples() {
        assert_eq!(
            cli(&["exfn", "F30", "4", "--stat", "edges", "--method", "formula"]),
            (0, "8".into())
        );
        assert_eq!(
            cli(&["count", "--by", "weight", "--variant", "multi", "--n", "7"]),
            (0, "6087".into())
        );
        assert_eq!(cli(&["contains", "1|1", "1,2|2,3"]), (0, "true".into()));
        let (code, out) = cli(&["verify", "--suite", "dobinski", "--n-max", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("8/8 identities hold"), "{out}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(cli(&["frobnicate"]).0, 2);
        assert_eq!(cli(&["exfn", "F30", "4", "--bogus"]).0, 2);
        assert_eq!(cli(&["contains", "1||2", "1"]).0, 2);
        assert_eq!(cli(&["exfn", "F40", "4"]).0, 2);
        assert_eq!(
            cli(&["count", "--by", "vertices", "--variant", "multi", "--n", "3"]).0,
            2
        );
    }

    #[test]
    fn json_values_are_strings() {
        let (code, out) = cli(&["--json", "count", "--by", "vertices", "--n", "6"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], "9223372023970362989");
    }

    #[test]
    fn brute_force_and_budget() {
        assert_eq!(cli(&["exfn", "1,2|2,3", "4", "--method", "brute"]), (0, "8".into()));
        let (code, out) = cli(&["exfn", "F30", "5", "--method", "brute", "--budget-nodes", "5"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("lower-bound"), "{out}");
        let (code, out) = cli(&["exfn", "S3", "4", "--method", "brute", "--witnesses"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("2\nwitnesses 39"), "{out}");
        assert_eq!(cli(&["exfn", "F1", "3", "--method", "brute"]), (0, "undefined".into()));
    }

    #[test]
    fn edge_type_and_enumerate() {
        assert_eq!(cli(&["edge-type", "1^2 4^1"]).0, 0);
        assert_eq!(
            cli(&["enumerate", "--weight", "2", "--variant", "multi"]),
            (0, "1|1\n1|2\n1,2".into())
        );
    }
}
