//! `skewdg`: construct and analyze DG algebra over quotients of skew
//! polynomial rings. One command per invocation; reports print as text or
//! deterministic JSON.

mod spec;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use skewdg::{
    acyclic_closure, acyclic_closure_shuffled, betti_table, complexity, ext_presentation,
    homology_dimension, is_regular_sequence, k2_check, koszul_complex_of_ring,
    poincare_from_deviations, verify_presentation, ClosureResult, ColorDegree,
    Confidence, Error as CoreError, QuotientRing,
};

use spec::{parse_ring_spec, RingSpec};

#[derive(Parser)]
#[command(name = "skewdg", version, about = "DG algebra over skew polynomial ring quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check each relation for normality and report certificates
    CheckNormal(CommonArgs),
    /// Compute the degree-truncated Groebner basis of the relation ideal
    Groebner(CommonArgs),
    /// Hilbert series of the quotient up to the internal bound
    Hilbert(CommonArgs),
    /// Homology dimensions of the Koszul complex K^R(x) per bidegree
    KoszulHomology(CommonArgs),
    /// Build the acyclic closure: deviations, Betti numbers, minimality
    Closure(CommonArgs),
    /// Deviation table of the acyclic closure
    Deviations(CommonArgs),
    /// Poincare series from the deviations
    Poincare(CommonArgs),
    /// Betti table of the minimal free resolution
    Betti(CommonArgs),
    /// Generators and relations of Ext for a skew complete intersection
    ExtPresentation(CommonArgs),
    /// Verify the Ext presentation against Yoneda products
    VerifyExt(CommonArgs),
    /// Complexity of k over the quotient
    Complexity(CommonArgs),
    /// Check generation of Ext in cohomological degrees one and two
    K2(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Ring spec file
    spec: PathBuf,
    /// Override the homological bound from the spec
    #[arg(long)]
    hdeg: Option<u32>,
    /// Override the internal-degree bound from the spec
    #[arg(long)]
    deg: Option<u32>,
    /// Filter color-indexed rows, e.g. --color "[2,0]"
    #[arg(long)]
    color: Option<String>,
    /// Emit the report as JSON (default)
    #[arg(long)]
    json: bool,
    /// Emit the report as text
    #[arg(long, conflicts_with = "json")]
    text: bool,
    /// Seed for randomized representative choices in the closure
    #[arg(long)]
    seed: Option<u64>,
}

enum Outcome {
    Ok(Value),
    /// Computation ran; a verification failed.
    Failed(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::CheckNormal(a) => ("check-normal", a),
        Command::Groebner(a) => ("groebner", a),
        Command::Hilbert(a) => ("hilbert", a),
        Command::KoszulHomology(a) => ("koszul-homology", a),
        Command::Closure(a) => ("closure", a),
        Command::Deviations(a) => ("deviations", a),
        Command::Poincare(a) => ("poincare", a),
        Command::Betti(a) => ("betti", a),
        Command::ExtPresentation(a) => ("ext-presentation", a),
        Command::VerifyExt(a) => ("verify-ext", a),
        Command::Complexity(a) => ("complexity", a),
        Command::K2(a) => ("k2", a),
    };

    let started = Instant::now();
    let text = match std::fs::read_to_string(&args.spec) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.spec.display());
            return ExitCode::from(2);
        }
    };
    let lenient = name == "check-normal";
    let ring_spec = match parse_ring_spec(&text, !lenient) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let hdeg = args.hdeg.unwrap_or(ring_spec.hdeg);
    let ideg = args.deg.unwrap_or(ring_spec.ideg);
    let mut warnings: Vec<String> = Vec::new();
    if ideg < hdeg {
        warnings.push(format!(
            "internal bound {ideg} is below homological bound {hdeg}: variables may be missed"
        ));
    }

    let outcome = run(name, args, &ring_spec, hdeg, ideg);
    let elapsed_ms = started.elapsed().as_millis() as u64;
    match outcome {
        Ok(outcome) => {
            let (result, code) = match outcome {
                Outcome::Ok(v) => (v, ExitCode::SUCCESS),
                Outcome::Failed(v) => (v, ExitCode::from(1)),
            };
            let report = json!({
                "command": name,
                "bounds": {"hdeg": hdeg, "ideg": ideg},
                "result": result,
                "warnings": warnings,
                "elapsed_ms": elapsed_ms,
            });
            if args.text {
                print_text(name, &report);
            } else {
                println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
            }
            code
        }
        Err(e) => {
            let code = match &e {
                CoreError::MinimalityViolated(_)
                | CoreError::ExactnessViolated { .. }
                | CoreError::LiftInconsistent { .. } => 1,
                _ => 2,
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}

fn run(
    name: &str,
    args: &CommonArgs,
    ring_spec: &RingSpec,
    hdeg: u32,
    ideg: u32,
) -> skewdg::Result<Outcome> {
    match name {
        "check-normal" => check_normal(ring_spec),
        "groebner" => {
            let quotient = ring_spec.quotient(ideg)?;
            let basis: Vec<String> =
                quotient.groebner_basis().generators().iter().map(|g| g.to_string()).collect();
            Ok(Outcome::Ok(json!({"basis": basis, "complete_to": ideg})))
        }
        "hilbert" => {
            let quotient = ring_spec.quotient(ideg)?;
            let series = quotient.hilbert_series(ideg)?;
            Ok(Outcome::Ok(json!({"coefficients": series.coeffs()})))
        }
        "koszul-homology" => {
            let quotient = ring_spec.quotient(ideg)?;
            let kos = koszul_complex_of_ring(&quotient, hdeg, ideg)?;
            let mut rows = Vec::new();
            for n in 0..=hdeg {
                for d in 0..=ideg {
                    let dim = homology_dimension(&kos, n, d)?;
                    if dim > 0 {
                        rows.push(json!({"hdeg": n, "ideg": d, "dim": dim}));
                    }
                }
            }
            Ok(Outcome::Ok(json!({"dims": rows})))
        }
        "closure" => {
            let closure = build_closure(ring_spec, args, hdeg, ideg)?;
            let betti = betti_table(&closure);
            let betti_rows: Vec<Value> = betti
                .entries()
                .map(|((h, d), c)| json!({"hdeg": h, "ideg": d, "count": c}))
                .collect();
            let vars: Vec<Value> = closure
                .extension
                .variables()
                .iter()
                .map(|v| {
                    json!({
                        "index": v.index,
                        "hdeg": v.hom_degree,
                        "ideg": v.int_degree,
                        "color": v.color.to_string(),
                    })
                })
                .collect();
            Ok(Outcome::Ok(json!({
                "deviations": deviation_rows(&closure, &None)?,
                "betti": betti_rows,
                "minimal": true,
                "checked_entries": closure.minimality.checked_entries,
                "variables": vars,
            })))
        }
        "deviations" => {
            let filter = parse_color_filter(args)?;
            let closure = build_closure(ring_spec, args, hdeg, ideg)?;
            Ok(Outcome::Ok(Value::Array(deviation_rows(&closure, &filter)?)))
        }
        "poincare" => {
            let closure = build_closure(ring_spec, args, hdeg, ideg)?;
            let series = poincare_from_deviations(&closure.deviations, hdeg);
            Ok(Outcome::Ok(json!({"coefficients": series.coeffs()})))
        }
        "betti" => {
            let closure = build_closure(ring_spec, args, hdeg, ideg)?;
            let betti = betti_table(&closure);
            let rows: Vec<Value> = betti
                .entries()
                .map(|((h, d), c)| json!({"hdeg": h, "ideg": d, "count": c}))
                .collect();
            let sums: Vec<usize> = (0..=hdeg).map(|m| betti.row_sum(m)).collect();
            Ok(Outcome::Ok(json!({"table": rows, "row_sums": sums})))
        }
        "ext-presentation" => {
            let quotient = ring_spec.quotient(ideg)?;
            let pres = ext_presentation(&quotient)?;
            let gens: Vec<Value> = pres
                .generators
                .iter()
                .map(|g| {
                    json!({
                        "name": format!("theta_{}", g.index),
                        "cohdeg": g.cohom_degree,
                        "ideg": g.int_degree,
                        "color": g.color.to_string(),
                    })
                })
                .collect();
            let rels: Vec<String> = pres.relations.iter().map(|r| r.to_string()).collect();
            Ok(Outcome::Ok(json!({"generators": gens, "relations": rels})))
        }
        "verify-ext" => {
            let quotient = ring_spec.quotient(ideg)?;
            let report = verify_presentation(&quotient, hdeg, ideg)?;
            let dims: Vec<Value> = report
                .dimension_rows
                .iter()
                .map(|(m, b, u)| json!({"cohdeg": m, "betti": b, "pbw": u}))
                .collect();
            let value = json!({
                "dimensions_match": report.dimensions_match,
                "dimensions": dims,
                "relations_checked": report.relations_checked,
                "convention": report.convention.map(|c| c.to_string()),
                "all_relations_vanish": report.convention.is_some(),
                "failures": report.failures,
            });
            if report.passed() {
                Ok(Outcome::Ok(value))
            } else {
                Ok(Outcome::Failed(value))
            }
        }
        "complexity" => {
            let quotient = ring_spec.quotient(ideg)?;
            let ci = is_ci(&quotient, ideg)?;
            let closure = build_closure(ring_spec, args, hdeg, ideg)?;
            let betti = betti_table(&closure);
            let (value, confidence) = complexity(&betti, ci)?;
            let note = match confidence {
                Confidence::Exact => "exact (verified skew complete intersection)",
                Confidence::Estimate => "estimate (truncated)",
            };
            Ok(Outcome::Ok(json!({"complexity": value, "note": note})))
        }
        "k2" => {
            let closure = build_closure(ring_spec, args, hdeg, ideg)?;
            let report = k2_check(&closure, hdeg)?;
            let ranks: Vec<Value> = report
                .ranks
                .iter()
                .map(|(m, rank, dim)| json!({"cohdeg": m, "span_rank": rank, "ext_dim": dim}))
                .collect();
            let value = json!({"holds": report.holds, "verified_to": hdeg, "ranks": ranks});
            if report.holds {
                Ok(Outcome::Ok(value))
            } else {
                Ok(Outcome::Failed(value))
            }
        }
        _ => unreachable!("command list is closed"),
    }
}

fn check_normal(ring_spec: &RingSpec) -> skewdg::Result<Outcome> {
    let mut rows = Vec::new();
    let mut all_normal = true;
    for rel in &ring_spec.relations {
        let row = match rel.homogeneous_degree() {
            None => {
                all_normal = false;
                json!({
                    "relation": rel.to_string(),
                    "normal": false,
                    "reason": "not homogeneous in the internal grading",
                })
            }
            Some(_) => match rel.is_normal()? {
                Some(cert) => {
                    let betas: Vec<String> = cert.betas.iter().map(|b| b.to_string()).collect();
                    json!({
                        "relation": rel.to_string(),
                        "normal": true,
                        "color": cert.color.to_string(),
                        "betas": betas,
                    })
                }
                None => {
                    all_normal = false;
                    json!({
                        "relation": rel.to_string(),
                        "normal": false,
                        "reason": "support monomials have distinct chi-classes",
                    })
                }
            },
        };
        rows.push(row);
    }
    let value = json!({
        "relations": rows,
        "all_normal": all_normal,
        "canonical_spec": ring_spec.print(),
    });
    if all_normal {
        Ok(Outcome::Ok(value))
    } else {
        Ok(Outcome::Failed(value))
    }
}

fn build_closure(
    ring_spec: &RingSpec,
    args: &CommonArgs,
    hdeg: u32,
    ideg: u32,
) -> skewdg::Result<ClosureResult> {
    let quotient = ring_spec.quotient(ideg)?;
    match args.seed {
        None => acyclic_closure(&quotient, hdeg, ideg),
        Some(seed) => {
            use rand_chacha::rand_core::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            acyclic_closure_shuffled(&quotient, hdeg, ideg, &mut rng)
        }
    }
}

fn is_ci(quotient: &Arc<QuotientRing>, ideg: u32) -> skewdg::Result<Option<usize>> {
    if quotient.relations().is_empty() {
        return Ok(Some(0));
    }
    let degrees_ok = quotient.relations().iter().all(|f| f.homogeneous_degree().unwrap_or(0) >= 2);
    if degrees_ok && is_regular_sequence(quotient.ring(), quotient.relations(), ideg)? {
        Ok(Some(quotient.relations().len()))
    } else {
        Ok(None)
    }
}

fn deviation_rows(closure: &ClosureResult, filter: &Option<ColorDegree>) -> skewdg::Result<Vec<Value>> {
    let mut rows = Vec::new();
    for ((hom, color, int), count) in closure.deviations.entries() {
        if let Some(f) = filter {
            if f != color {
                continue;
            }
        }
        rows.push(json!({
            "hdeg": hom,
            "color": color.to_string(),
            "ideg": int,
            "count": count,
        }));
    }
    Ok(rows)
}

fn parse_color_filter(args: &CommonArgs) -> skewdg::Result<Option<ColorDegree>> {
    match &args.color {
        None => Ok(None),
        Some(text) => {
            let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
            let parts: Result<Vec<i64>, _> =
                inner.split(',').map(|p| p.trim().parse::<i64>()).collect();
            match parts {
                Ok(v) => Ok(Some(ColorDegree(v))),
                Err(_) => Err(CoreError::InvalidRing(format!("bad color filter {text}"))),
            }
        }
    }
}

fn print_text(name: &str, report: &Value) {
    println!("command: {name}");
    if let Some(bounds) = report.get("bounds") {
        println!("bounds: hdeg {} ideg {}", bounds["hdeg"], bounds["ideg"]);
    }
    if let Some(result) = report.get("result") {
        print_value(result, 0);
    }
    if let Some(Value::Array(warnings)) = report.get("warnings") {
        for w in warnings {
            println!("warning: {}", w.as_str().unwrap_or_default());
        }
    }
    if let Some(ms) = report.get("elapsed_ms") {
        println!("elapsed_ms: {ms}");
    }
}

fn print_value(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => print_object(map, indent),
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(map) => {
                        let line: Vec<String> =
                            map.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect();
                        println!("{pad}- {}", line.join(" "));
                    }
                    other => println!("{pad}- {}", compact(other)),
                }
            }
        }
        other => println!("{pad}{}", compact(other)),
    }
}

fn print_object(map: &Map<String, Value>, indent: usize) {
    let pad = "  ".repeat(indent);
    for (k, v) in map {
        match v {
            Value::Array(_) | Value::Object(_) => {
                println!("{pad}{k}:");
                print_value(v, indent + 1);
            }
            other => println!("{pad}{k}: {}", compact(other)),
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
