//! Command-line interface: parses JSON descriptors, dispatches to the
//! `cycleset` library, and emits one JSON (or text-rendered) document.
//!
//! Exit codes: 0 success, 1 semantic failure (a checked property is false),
//! 2 parse/input error, 3 size guard exceeded, 4 invalid action laws or
//! violated mode hypothesis.

mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cycleset::cohomology::{ext_vs_h2_report, BridgeError, CochainSetup, CohomologyError};
use cycleset::extension::{
    build_product_extension, check_central_cocycle, check_general, check_trivial_ideal,
    extensions_equivalent, extract_data, ClassifyError, EquivalenceError, ExtractError,
};
use cycleset::report::{CheckOutcome, Report};

use input::{
    expand_diamond, expand_yleft, ActionsDesc, CohomologyDesc, EquivalentDesc, ExtensionDesc,
    ExtractDesc, InputError, LcsDesc,
};

#[derive(Parser)]
#[command(name = "cycleset", about = "Exact toolkit for linear cycle sets: validation, \
extensions, equivalence, classification, and cohomology", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Path to the input JSON document (defaults to stdin).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output rendering of the result document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Guard: maximum carrier order for classification.
    #[arg(long, global = true, default_value_t = 64)]
    max_order: usize,
    /// Guard: maximum equivalence search space.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    max_search: u64,
    /// Guard: maximum basis tuples per cochain group.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_tuples: usize,
    /// Seed for randomized subcommands (reserved; current commands are
    /// deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    /// Full condition ledger for general ideals.
    General,
    /// Reduced ledger assuming the image of `beta` is central in `I`.
    Central,
    /// Reduced ledger assuming the ideal's dot is trivial.
    Socle,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a linear cycle set table.
    Validate,
    /// Run a condition ledger on extension data.
    Check {
        #[arg(long, value_enum, default_value_t = CheckMode::General)]
        mode: CheckMode,
    },
    /// Classify extensions of H by a trivial ideal and compare with H².
    Classify,
    /// Compute the invariant factors of a cohomology group.
    Cohomology {
        /// Cohomology degree (overrides the "degree" field of the input).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Verify the double- and total-complex identities.
    ComplexCheck {
        /// Largest source total degree r+s to verify.
        #[arg(long, default_value_t = 3)]
        maxdeg: usize,
    },
    /// Recover extension data from a cycle set with a given ideal, quotient
    /// and section.
    Extract,
    /// Decide equivalence of two extensions over the same ideal and quotient.
    Equivalent,
}

/// A finished run: the document to print and the process exit code.
struct Outcome {
    value: Value,
    code: u8,
}

fn ok(value: Value) -> Result<Outcome, Outcome> {
    Ok(Outcome { value, code: 0 })
}

fn fail(code: u8, value: Value) -> Result<Outcome, Outcome> {
    Err(Outcome { value, code })
}

fn err_doc(code: u8, message: String) -> Outcome {
    Outcome { value: json!({ "error": message }), code }
}

fn input_err(e: InputError) -> Outcome {
    err_doc(2, e.message())
}

fn outcome_json(o: &CheckOutcome) -> Value {
    json!({ "identity": o.identity, "pass": o.passed(), "witness": o.witness })
}

fn report_json(r: &Report) -> Value {
    json!({
        "passed": r.passed(),
        "outcomes": r.outcomes.iter().map(outcome_json).collect::<Vec<_>>(),
    })
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Outcome> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| err_doc(2, format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            use std::io::Read;
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| err_doc(2, format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Outcome> {
    serde_json::from_str(text).map_err(|e| err_doc(2, format!("invalid input JSON: {e}")))
}

fn cohomology_err(e: CohomologyError) -> Outcome {
    let code = match &e {
        CohomologyError::Shape | CohomologyError::NotNormalized => 2,
        CohomologyError::Guard { .. } | CohomologyError::CoefficientsTooLarge => 3,
        CohomologyError::NotAdditive { .. } | CohomologyError::NotPreserved { .. } => 4,
        CohomologyError::DegreeTooLow | CohomologyError::NotCocycle => 2,
    };
    err_doc(code, e.to_string())
}

fn classify_err(e: ClassifyError) -> Outcome {
    let code = match &e {
        ClassifyError::IdealNotTrivial | ClassifyError::Inadmissible(_) => 4,
        ClassifyError::OrderGuard { .. } | ClassifyError::SearchGuard { .. } => 3,
    };
    err_doc(code, e.to_string())
}

fn cmd_validate(cli: &Cli) -> Result<Outcome, Outcome> {
    let desc: LcsDesc = parse(&read_input(&cli.input)?)?;
    // Re-run table validation explicitly so axiom violations are reported
    // as a semantic failure (exit 1), not an input error.
    match desc.to_lcs() {
        Ok(lcs) => ok(json!({
            "valid": true,
            "size": lcs.size(),
            "trivial": lcs.is_trivial(),
        })),
        Err(InputError::InvalidLcs(e)) => {
            fail(1, json!({ "valid": false, "violation": e.to_string() }))
        }
        Err(e) => Err(input_err(e)),
    }
}

fn cmd_check(cli: &Cli, mode: CheckMode) -> Result<Outcome, Outcome> {
    let desc: ExtensionDesc = parse(&read_input(&cli.input)?)?;
    let data = desc.to_data().map_err(input_err)?;
    let (name, report) = match mode {
        CheckMode::General => ("general", check_general(&data)),
        CheckMode::Central => (
            "central",
            check_central_cocycle(&data).map_err(|o| {
                err_doc(4, format!("mode hypothesis violated: {o}"))
            })?,
        ),
        CheckMode::Socle => (
            "socle",
            check_trivial_ideal(&data).map_err(|o| {
                err_doc(4, format!("mode hypothesis violated: {o}"))
            })?,
        ),
    };
    let doc = json!({ "mode": name, "report": report_json(&report) });
    if report.passed() {
        ok(doc)
    } else {
        fail(1, doc)
    }
}

fn cmd_classify(cli: &Cli) -> Result<Outcome, Outcome> {
    let desc: ActionsDesc = parse(&read_input(&cli.input)?)?;
    let ideal = desc.ideal.to_lcs().map_err(input_err)?;
    let quotient = desc.quotient.to_lcs().map_err(input_err)?;
    let (ni, nh) = (ideal.size(), quotient.size());
    let diamond = expand_diamond(&desc.diamond, ni, nh).map_err(input_err)?;
    let yleft = expand_yleft(&desc.yleft, ni, nh).map_err(input_err)?;
    let report = ext_vs_h2_report(
        &ideal,
        &quotient,
        &diamond,
        &yleft,
        cli.max_order,
        cli.max_search,
        cli.max_tuples,
    )
    .map_err(|e| match e {
        BridgeError::Classify(e) => classify_err(e),
        BridgeError::Cohomology(e) => cohomology_err(e),
        BridgeError::NeedCoordinates => err_doc(2, e.to_string()),
    })?;
    let classes: Vec<Value> = report
        .classification
        .representatives
        .iter()
        .map(|&i| {
            let (beta, f) = &report.classification.cocycles[i];
            json!({ "beta": beta, "f": f })
        })
        .collect();
    let doc = json!({
        "class_count": report.class_count,
        "representatives": classes,
        "cocycle_count": report.classification.cocycles.len(),
        "h2_invariant_factors": report.h2_invariants,
        "h2_order": match u64::try_from(report.h2_order) {
            Ok(n) => json!(n),
            Err(_) => json!(report.h2_order.to_string()),
        },
        "counts_agree": report.counts_agree,
        "pairwise_agree": report.pairwise_agree,
        "pairs_checked": report.pairs_checked,
    });
    if report.counts_agree && report.pairwise_agree {
        ok(doc)
    } else {
        fail(1, doc)
    }
}

fn cochain_setup(cli: &Cli, desc: &CohomologyDesc) -> Result<CochainSetup, Outcome> {
    let quotient = desc.quotient.to_lcs().map_err(input_err)?;
    let coefficients = desc.coefficients.to_group().map_err(input_err)?;
    let ni = coefficients
        .order_usize()
        .ok_or_else(|| err_doc(3, "coefficient group too large".to_string()))?;
    let diamond = expand_diamond(&desc.diamond, ni, quotient.size()).map_err(input_err)?;
    let yleft = expand_yleft(&desc.yleft, ni, quotient.size()).map_err(input_err)?;
    CochainSetup::new(&quotient, &coefficients, &diamond, &yleft, cli.max_tuples)
        .map_err(cohomology_err)
}

fn cmd_cohomology(cli: &Cli, degree: Option<usize>) -> Result<Outcome, Outcome> {
    let desc: CohomologyDesc = parse(&read_input(&cli.input)?)?;
    let degree = degree.or(desc.degree).unwrap_or(2);
    let setup = cochain_setup(cli, &desc)?;
    // Preflight: the supplied actions must give a complex at all.
    let preflight = setup.verify_total_complex(degree).map_err(cohomology_err)?;
    if !preflight.passed() {
        return fail(
            4,
            json!({
                "error": "action tables violate the complex laws",
                "preflight": report_json(&preflight),
            }),
        );
    }
    let invariants = setup.cohomology(degree).map_err(cohomology_err)?;
    let order: u128 = invariants.iter().map(|&d| d as u128).product();
    let order_value = match u64::try_from(order) {
        Ok(n) => json!(n),
        Err(_) => json!(order.to_string()),
    };
    ok(json!({ "invariant_factors": invariants, "order": order_value }))
}

fn cmd_complex_check(cli: &Cli, maxdeg: usize) -> Result<Outcome, Outcome> {
    let desc: CohomologyDesc = parse(&read_input(&cli.input)?)?;
    let setup = cochain_setup(cli, &desc)?;
    let double = setup.verify_double_complex(maxdeg).map_err(cohomology_err)?;
    let total = setup.verify_total_complex(maxdeg).map_err(cohomology_err)?;
    let doc = json!({
        "maxdeg": maxdeg,
        "double_complex": report_json(&double),
        "total_complex": report_json(&total),
    });
    if double.passed() && total.passed() {
        ok(doc)
    } else {
        fail(4, doc)
    }
}

fn cmd_extract(cli: &Cli) -> Result<Outcome, Outcome> {
    let desc: ExtractDesc = parse(&read_input(&cli.input)?)?;
    let total = desc.total.to_lcs().map_err(input_err)?;
    let ideal = desc.ideal.to_lcs().map_err(input_err)?;
    let quotient = desc.quotient.to_lcs().map_err(input_err)?;
    let section = match &desc.section {
        Some(s) => s.clone(),
        // Default: the least preimage of each quotient element.
        None => (0..quotient.size())
            .map(|h| (0..total.size()).find(|&b| desc.pi.get(b) == Some(&h)).unwrap_or(0))
            .collect(),
    };
    match extract_data(&total, &ideal, &quotient, &desc.iota, &desc.pi, &section) {
        Ok(data) => {
            let report = check_general(&data);
            ok(json!({
                "beta": data.beta_table(),
                "f": data.f_table(),
                "diamond": data.diamond_table(),
                "yleft": data.yleft_table(),
                "report": report_json(&report),
            }))
        }
        Err(ExtractError::Shape) => Err(err_doc(2, "extract: map table shape".to_string())),
        Err(e) => fail(1, json!({ "error": format!("not an extension: {e}") })),
    }
}

fn cmd_equivalent(cli: &Cli) -> Result<Outcome, Outcome> {
    let desc: EquivalentDesc = parse(&read_input(&cli.input)?)?;
    let d1 = desc.first.to_data().map_err(input_err)?;
    let d2 = desc.second.to_data().map_err(input_err)?;
    let e1 = build_product_extension(&d1);
    let e2 = build_product_extension(&d2);
    match extensions_equivalent(&e1, &e2, cli.max_search) {
        Ok(Some(w)) => ok(json!({ "equivalent": true, "phi": w.phi })),
        Ok(None) => fail(1, json!({ "equivalent": false })),
        Err(EquivalenceError::Mismatch) => {
            Err(err_doc(2, "extensions have different ideals or quotients".to_string()))
        }
        Err(e @ EquivalenceError::Guard { .. }) => Err(err_doc(3, e.to_string())),
    }
}

/// Plain-text rendering of the same document structure.
fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_flat(val) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", flat(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", flat(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", flat(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && is_flat(i)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate => cmd_validate(&cli),
        Command::Check { mode } => cmd_check(&cli, *mode),
        Command::Classify => cmd_classify(&cli),
        Command::Cohomology { degree } => cmd_cohomology(&cli, *degree),
        Command::ComplexCheck { maxdeg } => cmd_complex_check(&cli, *maxdeg),
        Command::Extract => cmd_extract(&cli),
        Command::Equivalent => cmd_equivalent(&cli),
    };
    let outcome = match result {
        Ok(o) | Err(o) => o,
    };
    match cli.output {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.value).expect("serializable document")
            );
        }
        Format::Text => {
            let mut s = String::new();
            render_text(&outcome.value, 0, &mut s);
            print!("{s}");
        }
    }
    ExitCode::from(outcome.code)
}
