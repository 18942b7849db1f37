//! The `coend` command line tool. Exit code 0 when every requested check
//! passes, 1 when one fails, 2 on bad input.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bundle::{Bundle, BundleError};
use crate::classical::drinfeld_map_rank;
use crate::elements::ElementError;
use crate::internal::{factorizability_pairing, BraidedModules, InternalError};
use crate::linalg::{FieldKind, Matrix};
use crate::report::Report;
use crate::search::{predicate_report, search, Hit, Instance, Kind, SearchError, SearchSpec, Strategy};
use crate::theorems::{sample_modules, theorem_suite};

#[derive(Parser, Debug)]
#[command(name = "coend", version, about = "Exact checks and searches for coend elements of Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Also write the report as JSON.
    #[arg(long, global = true, value_name = "OUT_PATH")]
    pub json: Option<PathBuf>,
    /// Re-validate the bundle structures and every result.
    #[arg(long, global = true)]
    pub debug_revalidate: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate every structure in the bundle.
    Validate {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// Print the coend with its derived structure.
    Coend {
        #[arg(long)]
        bundle: PathBuf,
    },
    /// Check a named element or R-matrix.
    Check {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        element: String,
        /// Only this predicate, e.g. `pivotal` or `classical_ribbon`.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        r_matrix: Option<String>,
    },
    /// Find every element of a kind.
    Search {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Affine)]
        strategy: StrategyArg,
        #[arg(long)]
        r_matrix: Option<String>,
    },
    /// Run the correspondence theorems for an R-matrix.
    Theorems {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        r_matrix: Option<String>,
    },
    /// Decide factorizability of an R-matrix.
    Factorizable {
        #[arg(long)]
        bundle: PathBuf,
        #[arg(long)]
        r_matrix: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    /// Linear axioms first, then scan the affine solutions (prime fields).
    Affine,
    /// Scan the whole space (prime fields, small spaces).
    All,
    /// Check the elements named in the bundle.
    Candidates,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("{module}: {message}")]
    Domain { module: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }
}

impl From<BundleError> for CliError {
    fn from(e: BundleError) -> CliError {
        CliError::Input(e.to_string())
    }
}

impl From<ElementError> for CliError {
    fn from(e: ElementError) -> CliError {
        CliError::Domain { module: "ElementError", message: e.to_string() }
    }
}

impl From<InternalError> for CliError {
    fn from(e: InternalError) -> CliError {
        CliError::Domain { module: "InternalError", message: e.to_string() }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> CliError {
        match e {
            SearchError::UnknownKind(_)
            | SearchError::MissingRMatrix(_)
            | SearchError::InstanceMismatch { .. }
            | SearchError::NotPrimeField(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain { module: "SearchError", message: e.to_string() },
        }
    }
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_strings())
}

fn report_json(r: &Report) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn hits_json(hits: &[Hit]) -> Value {
    Value::Array(hits.iter().map(|h| json!({"element": matrix_json(&h.element), "report": report_json(&h.report)})).collect())
}

fn outcome_from_reports(command: &str, reports: Vec<Report>, extra: Value) -> Outcome {
    let passed = reports.iter().all(|r| r.passed());
    let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    let json = json!({
        "command": command,
        "passed": passed,
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
        "data": extra,
    });
    Outcome { passed, text, json }
}

fn choose_r(b: &Bundle, name: Option<&str>) -> Result<Option<(String, BraidedModules)>, CliError> {
    let name = match name {
        Some(n) => n.to_string(),
        None if b.r_matrices.len() == 1 => b.r_matrices.keys().next().unwrap().clone(),
        None => return Ok(None),
    };
    let r = b.r_matrix(&name)?.clone();
    Ok(Some((name, BraidedModules::new(&b.hopf, r)?)))
}

fn require_r(b: &Bundle, name: Option<&str>) -> Result<(String, BraidedModules), CliError> {
    choose_r(b, name)?.ok_or_else(|| CliError::Input("name an R-matrix with --r-matrix".into()))
}

fn parse_kind(s: &str) -> Result<Kind, CliError> {
    s.parse::<Kind>().map_err(CliError::from)
}

fn instance(b: &Bundle, kind: Kind, bm: Option<&BraidedModules>) -> Result<Instance, CliError> {
    if kind.is_classical() {
        let hopf = b.classical.clone().ok_or_else(|| CliError::Input("the bundle has no classical block".into()))?;
        Ok(Instance::Classical { hopf, r: b.classical_r.clone() })
    } else {
        Ok(Instance::Coend { hopf: b.hopf.clone(), braided: bm.cloned() })
    }
}

fn candidates(b: &Bundle, kind: Kind) -> Vec<Matrix> {
    if matches!(kind, Kind::RMatrix | Kind::ClassicalRMatrix) {
        b.r_matrices.values().cloned().collect()
    } else {
        b.elements.values().cloned().collect()
    }
}

fn is_prime_field(b: &Bundle) -> bool {
    matches!(b.field.kind(), FieldKind::Prime(_))
}

fn full_validation(b: &Bundle) -> Vec<Report> {
    let mut reps = vec![b.ambient.validate(), b.coend.validate(), b.hopf.validate()];
    for (name, m) in &b.modules {
        let mut r = b.hopf.module_report(m);
        r.subject = format!("module {name}");
        reps.push(r);
    }
    reps
}

fn cmd_validate(b: &Bundle) -> Result<Outcome, CliError> {
    let mut reps = full_validation(b);
    for (name, r) in &b.r_matrices {
        let mut rep = BraidedModules::new(&b.hopf, r.clone())?.validate_r();
        rep.subject = format!("R-matrix {name}");
        reps.push(rep);
    }
    if let Some(c) = &b.classical {
        reps.push(c.validate());
        if let Some(r) = &b.classical_r {
            reps.push(crate::classical::check_r(c, r));
        }
    }
    Ok(outcome_from_reports("validate", reps, Value::Null))
}

fn cmd_coend(b: &Bundle) -> Result<Outcome, CliError> {
    let c = &b.coend;
    let parts: [(&str, &Matrix); 9] = [
        ("m", &c.m),
        ("u", &c.u),
        ("delta", &c.delta),
        ("eps", &c.eps),
        ("s", &c.s),
        ("s_inv", &c.s_inv),
        ("omega", &c.omega),
        ("omega_bar", &c.omega_bar),
        ("omega_under", &c.omega_under),
    ];
    let rep = c.validate();
    let mut text = format!("coend of dimension {} over {}\n", c.dim(), b.field.describe());
    let mut data = serde_json::Map::new();
    for (name, m) in parts {
        text += &format!("{name} ({}x{}):\n{m}", m.rows(), m.cols());
        data.insert(name.into(), matrix_json(m));
    }
    let mut out = outcome_from_reports("coend", vec![rep], Value::Object(data));
    out.text = format!("{text}\n{}", out.text);
    Ok(out)
}

fn cmd_check(b: &Bundle, name: &str, kind: Option<&str>, r_name: Option<&str>) -> Result<Outcome, CliError> {
    let kind = kind.map(parse_kind).transpose()?;
    if let Some(r) = b.r_matrices.get(name) {
        if let Some(k) = kind.filter(|k| !matches!(k, Kind::RMatrix | Kind::ClassicalRMatrix)) {
            return Err(CliError::Input(format!("{name} is an R-matrix, not a candidate {k} element")));
        }
        if kind == Some(Kind::ClassicalRMatrix) {
            let c = b.classical.as_ref().ok_or_else(|| CliError::Input("the bundle has no classical block".into()))?;
            return Ok(outcome_from_reports("check", vec![crate::classical::check_r(c, r)], Value::Null));
        }
        let rep = BraidedModules::new(&b.hopf, r.clone())?.validate_r();
        return Ok(outcome_from_reports("check", vec![rep], Value::Null));
    }
    let a = b.element(name)?;
    let bm = choose_r(b, r_name)?;
    match kind {
        None => {
            let er = b.hopf.element_report(a, bm.as_ref().map(|(_, m)| m))?;
            let flags = json!({
                "central": er.central,
                "grouplike": er.grouplike,
                "twisted_grouplike": er.twisted_grouplike,
                "pivotal": er.pivotal,
                "balanced": er.balanced,
                "ribbon": er.ribbon,
            });
            let mut out = outcome_from_reports("check", vec![er.report.clone()], flags.clone());
            // a full report lists every predicate; it passes when the flags are coherent
            out.passed = er.consistent();
            out.text = format!("{flags}\n{}", out.text);
            Ok(out)
        }
        Some(k) => {
            let rep = predicate_report(k, &instance(b, k, bm.as_ref().map(|(_, m)| m))?, a)?;
            Ok(outcome_from_reports("check", vec![rep], Value::Null))
        }
    }
}

fn cmd_search(b: &Bundle, kind: &str, strategy: StrategyArg, r_name: Option<&str>) -> Result<Outcome, CliError> {
    let kind = parse_kind(kind)?;
    let bm = choose_r(b, r_name)?;
    let strategy = match strategy {
        StrategyArg::Affine => Strategy::AffineThenEnumerate,
        StrategyArg::All => Strategy::EnumerateAll,
        StrategyArg::Candidates => Strategy::VerifyCandidates(candidates(b, kind)),
    };
    let spec = SearchSpec { kind, instance: instance(b, kind, bm.as_ref().map(|(_, m)| m))?, strategy };
    let hits = search(&spec)?;
    let mut text = format!("{} {kind} element(s)\n", hits.len());
    for h in &hits {
        text += &format!("{}\n", h.element);
    }
    let json = json!({"command": "search", "kind": kind.name(), "passed": true, "hits": hits_json(&hits)});
    Ok(Outcome { passed: true, text, json })
}

fn found(b: &Bundle, kind: Kind, bm: &BraidedModules) -> Result<Vec<Matrix>, CliError> {
    let strategy = if is_prime_field(b) {
        Strategy::AffineThenEnumerate
    } else {
        Strategy::VerifyCandidates(candidates(b, kind))
    };
    let spec = SearchSpec { kind, instance: Instance::Coend { hopf: b.hopf.clone(), braided: Some(bm.clone()) }, strategy };
    Ok(search(&spec)?.into_iter().map(|h| h.element).collect())
}

fn cmd_theorems(b: &Bundle, r_name: Option<&str>) -> Result<Outcome, CliError> {
    let (name, bm) = require_r(b, r_name)?;
    let valid = bm.validate_r();
    if !valid.passed() {
        return Ok(outcome_from_reports("theorems", vec![valid], Value::Null));
    }
    let bal = found(b, Kind::Balanced, &bm)?;
    let piv = found(b, Kind::Pivotal, &bm)?;
    let mut modules = sample_modules(&b.hopf);
    modules.extend(b.modules.iter().map(|(_, m)| m.clone()));
    let complete = is_prime_field(b);
    let rep = theorem_suite(&bm, &bal, &piv, &modules, complete)?;
    let data = json!({
        "r_matrix": name,
        "complete": complete,
        "balanced": bal.iter().map(matrix_json).collect::<Vec<_>>(),
        "pivotal": piv.iter().map(matrix_json).collect::<Vec<_>>(),
    });
    let mut out = outcome_from_reports("theorems", vec![valid, rep], data);
    out.text = format!("R-matrix {name}: {} balanced, {} pivotal\n{}", bal.len(), piv.len(), out.text);
    Ok(out)
}

fn cmd_factorizable(b: &Bundle, r_name: Option<&str>) -> Result<Outcome, CliError> {
    let (name, bm) = require_r(b, r_name)?;
    let fz = factorizability_pairing(&bm)?;
    let mut text = format!("R-matrix {name}\nfactorizable: {} (pairing rank {} of {})\n", fz.nondegenerate, fz.rank, fz.dim);
    let mut data = json!({
        "r_matrix": name,
        "factorizable": fz.nondegenerate,
        "rank": fz.rank,
        "dim": fz.dim,
    });
    let mut passed = fz.nondegenerate;
    if let (Some(c), Some(r)) = (&b.classical, &b.classical_r) {
        let rank = drinfeld_map_rank(c, r);
        text += &format!("classical Drinfeld map rank {rank} of {}\n", c.dim);
        data["classical_rank"] = json!(rank);
        passed &= rank == c.dim;
    }
    let json = json!({"command": "factorizable", "passed": passed, "data": data});
    Ok(Outcome { passed, text, json })
}

fn bundle_path(cmd: &Command) -> &PathBuf {
    match cmd {
        Command::Validate { bundle }
        | Command::Coend { bundle }
        | Command::Check { bundle, .. }
        | Command::Search { bundle, .. }
        | Command::Theorems { bundle, .. }
        | Command::Factorizable { bundle, .. } => bundle,
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let b = Bundle::load(bundle_path(&cli.command))?;
    let mut pre = Vec::new();
    if cli.debug_revalidate {
        pre = full_validation(&b);
    }
    let mut out = match &cli.command {
        Command::Validate { .. } => cmd_validate(&b)?,
        Command::Coend { .. } => cmd_coend(&b)?,
        Command::Check { element, kind, r_matrix, .. } => cmd_check(&b, element, kind.as_deref(), r_matrix.as_deref())?,
        Command::Search { kind, strategy, r_matrix, .. } => cmd_search(&b, kind, *strategy, r_matrix.as_deref())?,
        Command::Theorems { r_matrix, .. } => cmd_theorems(&b, r_matrix.as_deref())?,
        Command::Factorizable { r_matrix, .. } => cmd_factorizable(&b, r_matrix.as_deref())?,
    };
    if cli.debug_revalidate {
        // the bundle re-parses to the same document and its structures validate
        let again = Bundle::parse(&b.to_json())?;
        let mut rep = Report::new("revalidation");
        rep.flag("round_trip", again.to_json() == b.to_json(), None);
        for r in pre {
            rep.flag(&r.subject, r.passed(), None);
        }
        out.passed &= rep.passed();
        out.text = format!("{}\n{rep}", out.text);
        out.json["revalidation"] = report_json(&rep);
    }
    Ok(out)
}

/// Parses arguments, runs, prints and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            if let Some(path) = &cli.json {
                let text = serde_json::to_string_pretty(&out.json).expect("json");
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("input error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            i32::from(!out.passed)
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
