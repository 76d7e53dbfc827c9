//! Command-line surface: exact Brieskorn contact invariants with JSON, CSV
//! and table output.
//!
//! Exit codes: 0 ok, 2 validation failure, 3 missing Betti data, 4 unknown
//! verify example, 5 unconverged algebra computation.

mod output;
mod verify;

use brieskorn_core::algebra::{
    compare_to_module, hilbert_function, monomial_quotient_dims, GradedPresentation,
};
use brieskorn_core::grading::GeneratorTable;
use brieskorn_core::module::PeriodicGradedDims;
use brieskorn_core::report::Provenance;
use brieskorn_core::{
    check_index_positivity, detect_vanishing_differential, detector_required_max_l,
    enumerate_strata, generator_table, homology_table, period_module, s_class, virtual_dimension,
    BettiResolver, BettiTable, Error as CoreError, ExponentTuple, IndexReport, StrataSet,
    Vanishing,
};
use clap::{Args, Parser, Subcommand};
use output::{dims_rows, fmt_i64_list, render, Format, Rendered};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable naming the default data directory; a `betti.json`
/// found there replaces the bundled Betti defaults.
const DATA_DIR_ENV: &str = "BRIESKORN_DATA_DIR";

#[derive(Parser)]
#[command(name = "brieskorn", version, about = "Exact invariants of Brieskorn contact manifolds with periodic Reeb flow")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct BettiArgs {
    /// User Betti table file(s); later files override earlier ones key-by-key.
    #[arg(long = "betti", value_name = "FILE")]
    betti: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Derived constants of an exponent tuple.
    Info {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<i64>,
    },
    /// Morse-Bott orbit strata up to a time bound.
    Strata {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<i64>,
        /// Largest time parameter L to enumerate.
        #[arg(long)]
        max_l: i64,
        #[command(flatten)]
        betti: BettiArgs,
    },
    /// Chain generators in a product-degree window.
    Generators {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<i64>,
        /// Degree window LO HI.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
        /// Bound enumeration by time instead of (or as well as) degree.
        #[arg(long)]
        max_l: Option<i64>,
        #[command(flatten)]
        betti: BettiArgs,
    },
    /// Laurent-module analysis: rank, periodic dimensions, homology.
    Module {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<i64>,
        /// Degree window LO HI for the dimension tables.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
        /// Also emit the non-negative-shift part.
        #[arg(long)]
        positive: bool,
        /// Run the vanishing detector and emit the homology table.
        #[arg(long)]
        homology: bool,
        /// Provenance note asserting the differential vanishes by an
        /// external computation.
        #[arg(long, value_name = "NOTE")]
        external_vanishing: Option<String>,
        #[command(flatten)]
        betti: BettiArgs,
    },
    /// Index-positivity classification over one Reeb period.
    CheckIndex {
        #[arg(required = true, num_args = 2..)]
        exponents: Vec<i64>,
        /// Assume a Liouville filling with vanishing first Chern class.
        #[arg(long)]
        filling: bool,
        #[command(flatten)]
        betti: BettiArgs,
    },
    /// Virtual dimension of a broken-curve moduli space.
    VirtualDim {
        /// Conley-Zehnder degrees at the positive punctures.
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',', allow_negative_numbers = true)]
        plus: Vec<i64>,
        /// Conley-Zehnder degrees at the negative punctures.
        #[arg(long, num_args = 0.., value_delimiter = ',', allow_negative_numbers = true)]
        minus: Vec<i64>,
        /// Conley-Zehnder degrees of the extra Reeb punctures.
        #[arg(long, num_args = 0.., value_delimiter = ',', allow_negative_numbers = true)]
        reeb: Vec<i64>,
        #[arg(long)]
        n: i64,
    },
    /// Hilbert functions of finitely presented GF(2)-algebras.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCmd,
    },
    /// Replay a bundled example check (or "all").
    Verify { name: String },
}

#[derive(Args)]
struct PresentationSource {
    /// Presentation JSON file.
    #[arg(long, value_name = "FILE")]
    presentation: Option<PathBuf>,
    /// Bundled presentation name.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Degree-windowed Hilbert function with the stabilization flag.
    Hilbert {
        #[command(flatten)]
        source: PresentationSource,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, required = true)]
        window: Vec<i64>,
        /// Word-length cap; the run also checks cap+1 for stabilization.
        #[arg(long, default_value_t = 8)]
        cap: u32,
    },
    /// Standard-monomial counts for single-monomial relation ideals.
    MonomialDims {
        #[command(flatten)]
        source: PresentationSource,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, required = true)]
        window: Vec<i64>,
    },
    /// Per-degree diff of a presentation against a module.
    Compare {
        #[command(flatten)]
        source: PresentationSource,
        /// Module side: exponent tuple whose period module is compared.
        #[arg(long, num_args = 2.., allow_negative_numbers = false)]
        exponents: Option<Vec<i64>>,
        /// Module side: explicit generator degrees (with --shift).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        module_degrees: Option<Vec<i64>>,
        /// Degree shift for --module-degrees.
        #[arg(long, allow_negative_numbers = true)]
        shift: Option<i64>,
        /// Compare against the non-negative-shift part.
        #[arg(long)]
        positive: bool,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, required = true)]
        window: Vec<i64>,
        #[arg(long, default_value_t = 8)]
        cap: u32,
        #[command(flatten)]
        betti: BettiArgs,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match &e {
            CoreError::MissingBetti { sub_tuple } => CliError {
                code: 3,
                message: format!("{e}\n{}", betti_stub(sub_tuple)),
            },
            CoreError::Unconverged { .. } => CliError {
                code: 5,
                message: e.to_string(),
            },
            _ => CliError {
                code: 2,
                message: e.to_string(),
            },
        }
    }
}

fn witness_lines(witnesses: &[(brieskorn_core::Generator, brieskorn_core::Generator)], limit: usize) -> String {
    witnesses
        .iter()
        .take(limit)
        .map(|(x, y)| {
            format!(
                "  (L={}, ind={}, deg={}) -> (L={}, ind={}, deg={})",
                x.stratum_l, x.morse_index, x.product_degree, y.stratum_l, y.morse_index, y.product_degree
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// A ready-to-fill user config snippet for a missing sub-tuple.
fn betti_stub(sub_tuple: &[i64]) -> String {
    let dim = 2 * sub_tuple.len() - 3;
    let placeholders: Vec<String> = (0..=dim).map(|i| format!("b{i}")).collect();
    format!(
        "add a user table with --betti FILE containing, for example:\n{{\n  \"{}\": [{}]\n}}\n({} nonnegative integers, palindromic, b0 >= 1)",
        fmt_i64_list(sub_tuple),
        placeholders.join(", "),
        dim + 1
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.format, cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn parse_tuple(exponents: &[i64]) -> Result<ExponentTuple, CliError> {
    Ok(ExponentTuple::new(exponents.to_vec())?)
}

fn build_resolver(args: &BettiArgs) -> Result<(BettiResolver, Vec<String>), CliError> {
    let mut resolver = BettiResolver::bundled();
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let path = PathBuf::from(dir).join("betti.json");
        if path.exists() {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                CliError::validation(format!("cannot read {}: {e}", path.display()))
            })?;
            resolver = resolver.with_defaults(BettiTable::from_json_str(&text)?);
        }
    }
    let mut names = Vec::new();
    for file in &args.betti {
        let text = std::fs::read_to_string(file)
            .map_err(|e| CliError::validation(format!("cannot read {}: {e}", file.display())))?;
        resolver.add_user_table(&BettiTable::from_json_str(&text)?);
        names.push(file.display().to_string());
    }
    Ok((resolver, names))
}

fn window_pair(window: &[i64]) -> Result<(i64, i64), CliError> {
    let (lo, hi) = (window[0], window[1]);
    if lo > hi {
        return Err(CliError::validation(format!(
            "window lower bound {lo} exceeds upper bound {hi}"
        )));
    }
    Ok((lo, hi))
}

fn load_presentation(
    source: &PresentationSource,
) -> Result<(GradedPresentation, String), CliError> {
    match (&source.presentation, &source.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::validation(format!("cannot read {}: {e}", path.display()))
            })?;
            Ok((
                GradedPresentation::from_json_str(&text)?,
                path.display().to_string(),
            ))
        }
        (None, Some(name)) => match brieskorn_core::data::bundled_presentation(name) {
            Some(p) => Ok((p, format!("builtin:{name}"))),
            None => Err(CliError::validation(format!(
                "unknown builtin presentation \"{name}\"; available: {}",
                brieskorn_core::data::bundled_presentation_names().join(", ")
            ))),
        },
        _ => Err(CliError::validation(
            "give exactly one of --presentation FILE or --builtin NAME",
        )),
    }
}

/// Enumerates strata, growing the bound until the request is covered.
fn enumerate_covering<T>(
    tuple: &ExponentTuple,
    resolver: &BettiResolver,
    start_max_l: i64,
    mut attempt: impl FnMut(&StrataSet) -> Result<T, CoreError>,
) -> Result<T, CoreError> {
    let mut max_l = start_max_l;
    loop {
        let set = enumerate_strata(tuple, max_l, resolver)?;
        match attempt(&set) {
            Err(CoreError::InsufficientCoverage { required, .. }) if required > max_l => {
                max_l = required;
            }
            other => return other,
        }
    }
}

fn run(format: Format, command: Cmd) -> Result<String, CliError> {
    match command {
        Cmd::Info { exponents } => cmd_info(format, &exponents),
        Cmd::Strata {
            exponents,
            max_l,
            betti,
        } => cmd_strata(format, &exponents, max_l, &betti),
        Cmd::Generators {
            exponents,
            window,
            max_l,
            betti,
        } => cmd_generators(format, &exponents, window.as_deref(), max_l, &betti),
        Cmd::Module {
            exponents,
            window,
            positive,
            homology,
            external_vanishing,
            betti,
        } => cmd_module(
            format,
            &exponents,
            window.as_deref(),
            positive,
            homology,
            external_vanishing.as_deref(),
            &betti,
        ),
        Cmd::CheckIndex {
            exponents,
            filling,
            betti,
        } => cmd_check_index(format, &exponents, filling, &betti),
        Cmd::VirtualDim { plus, minus, reeb, n } => cmd_virtual_dim(format, &plus, &minus, &reeb, n),
        Cmd::Algebra { command } => match command {
            AlgebraCmd::Hilbert {
                source,
                window,
                cap,
            } => cmd_algebra_hilbert(format, &source, &window, cap),
            AlgebraCmd::MonomialDims { source, window } => {
                cmd_algebra_monomial(format, &source, &window)
            }
            AlgebraCmd::Compare {
                source,
                exponents,
                module_degrees,
                shift,
                positive,
                window,
                cap,
                betti,
            } => cmd_algebra_compare(
                format,
                &source,
                exponents.as_deref(),
                module_degrees.as_deref(),
                shift,
                positive,
                &window,
                cap,
                &betti,
            ),
        },
        Cmd::Verify { name } => cmd_verify(format, &name),
    }
}

#[derive(Serialize)]
struct InfoReport {
    provenance: Provenance,
    exponents: Vec<i64>,
    n: i64,
    dim: i64,
    period_l: i64,
    maslov: i64,
    degree_shift: i64,
    shift_class: brieskorn_core::ShiftClass,
    principal_class_degree: i64,
}

fn cmd_info(format: Format, exponents: &[i64]) -> Result<String, CliError> {
    let tuple = parse_tuple(exponents)?;
    let mut provenance = Provenance::new("info");
    provenance.exponents = Some(exponents.to_vec());
    let report = InfoReport {
        provenance,
        exponents: exponents.to_vec(),
        n: tuple.n(),
        dim: tuple.dim(),
        period_l: tuple.period_l(),
        maslov: tuple.maslov(),
        degree_shift: tuple.degree_shift(),
        shift_class: tuple.shift_class(),
        principal_class_degree: s_class(&tuple).product_degree,
    };
    let body = Rendered::new().kv(vec![
        ("tuple", tuple.to_string()),
        ("n", report.n.to_string()),
        ("dim", report.dim.to_string()),
        ("period_l", report.period_l.to_string()),
        ("maslov", report.maslov.to_string()),
        ("degree_shift", report.degree_shift.to_string()),
        ("shift_class", format!("{:?}", report.shift_class)),
        (
            "principal_class_degree",
            report.principal_class_degree.to_string(),
        ),
    ]);
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct StrataReport {
    provenance: Provenance,
    strata: Vec<brieskorn_core::Stratum>,
}

fn cmd_strata(
    format: Format,
    exponents: &[i64],
    max_l: i64,
    betti: &BettiArgs,
) -> Result<String, CliError> {
    if max_l < 0 {
        return Err(CliError::validation("--max-l must be >= 0"));
    }
    let tuple = parse_tuple(exponents)?;
    let (resolver, betti_files) = build_resolver(betti)?;
    let set = enumerate_strata(&tuple, max_l, &resolver)?;
    let mut provenance = Provenance::new("strata");
    provenance.exponents = Some(exponents.to_vec());
    provenance.max_l = Some(max_l);
    provenance.betti_files = betti_files;
    let rows = set
        .strata
        .iter()
        .map(|s| {
            vec![
                s.l.to_string(),
                s.dim.to_string(),
                s.mu_rs.to_string(),
                fmt_i64_list(&s.sub_tuple),
                s.betti
                    .iter()
                    .map(|b| b.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
                format!("{:?}", s.betti_source),
            ]
        })
        .collect();
    let body = Rendered::new().table(
        &["l", "dim", "mu_rs", "sub_tuple", "betti", "source"],
        rows,
    );
    let report = StrataReport {
        provenance,
        strata: set.strata,
    };
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct GeneratorsReport {
    provenance: Provenance,
    max_l: i64,
    generators: Vec<brieskorn_core::Generator>,
}

fn cmd_generators(
    format: Format,
    exponents: &[i64],
    window: Option<&[i64]>,
    max_l: Option<i64>,
    betti: &BettiArgs,
) -> Result<String, CliError> {
    let tuple = parse_tuple(exponents)?;
    let (resolver, betti_files) = build_resolver(betti)?;
    let table = match (window, max_l) {
        (Some(w), None) => {
            let (lo, hi) = window_pair(w)?;
            enumerate_covering(&tuple, &resolver, tuple.period_l(), |set| {
                generator_table(set, lo, hi)
            })?
        }
        (window, Some(max_l)) => {
            if max_l < 0 {
                return Err(CliError::validation("--max-l must be >= 0"));
            }
            let set = enumerate_strata(&tuple, max_l, &resolver)?;
            let mut table = GeneratorTable::from_strata(&set);
            if let Some(w) = window {
                let (lo, hi) = window_pair(w)?;
                table
                    .generators
                    .retain(|g| lo <= g.product_degree && g.product_degree <= hi);
            }
            table
        }
        (None, None) => {
            return Err(CliError::validation(
                "give --window LO HI, --max-l N, or both",
            ))
        }
    };
    let mut provenance = Provenance::new("generators");
    provenance.exponents = Some(exponents.to_vec());
    provenance.window = window.map(|w| (w[0], w[1]));
    provenance.max_l = Some(table.max_l);
    provenance.betti_files = betti_files;
    let rows = table
        .generators
        .iter()
        .map(|g| {
            vec![
                g.stratum_l.to_string(),
                g.action.to_string(),
                g.morse_index.to_string(),
                g.product_degree.to_string(),
                g.cz_degree.to_string(),
            ]
        })
        .collect();
    let body = Rendered::new().table(
        &["l", "action", "morse_index", "product_degree", "cz_degree"],
        rows,
    );
    let report = GeneratorsReport {
        provenance,
        max_l: table.max_l,
        generators: table.generators,
    };
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct ModuleReport {
    provenance: Provenance,
    rank: usize,
    degree_shift: i64,
    mode: brieskorn_core::ModuleMode,
    period_degrees: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dims: Option<BTreeMap<i64, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    positive_dims: Option<BTreeMap<i64, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vanishing: Option<Vanishing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    homology: Option<brieskorn_core::HomologyTable>,
}

fn cmd_module(
    format: Format,
    exponents: &[i64],
    window: Option<&[i64]>,
    positive: bool,
    homology: bool,
    external_vanishing: Option<&str>,
    betti: &BettiArgs,
) -> Result<String, CliError> {
    let tuple = parse_tuple(exponents)?;
    let (resolver, betti_files) = build_resolver(betti)?;
    let m = period_module(&tuple, &resolver)?;
    let window = window.map(window_pair).transpose()?;
    if (positive || homology) && window.is_none() {
        return Err(CliError::validation(
            "--positive and --homology need --window LO HI",
        ));
    }
    let dims = window.map(|(lo, hi)| m.dims_in_window(lo, hi)).transpose()?;
    let positive_dims = if positive {
        let (lo, hi) = window.expect("checked above");
        Some(m.positive_part(lo, hi)?)
    } else {
        None
    };
    let (vanishing, witness_pairs, homology_out) = if homology {
        let required = detector_required_max_l(&tuple, &m);
        let set = enumerate_strata(&tuple, required, &resolver)?;
        let table = GeneratorTable::from_strata(&set);
        let status = detect_vanishing_differential(&tuple, &table, &resolver, external_vanishing)?;
        if status.vanishing == Vanishing::Unknown {
            return Err(CliError::validation(format!(
                "differential status is Unknown: {} degree/action-compatible pair(s), e.g.\n{}\nre-run with --external-vanishing NOTE if an external computation settles it",
                status.witnesses.len(),
                witness_lines(&status.witnesses, 5),
            )));
        }
        let (lo, hi) = window.expect("checked above");
        let h = homology_table(&m, &status, lo, hi)?;
        (
            Some(status.vanishing),
            Some(status.witnesses.len()),
            Some(h),
        )
    } else {
        (None, None, None)
    };

    let mut provenance = Provenance::new("module");
    provenance.exponents = Some(exponents.to_vec());
    provenance.window = window;
    provenance.betti_files = betti_files;
    provenance.external_vanishing = external_vanishing.map(|s| s.to_string());

    let mut body = Rendered::new().kv(vec![
        ("tuple", tuple.to_string()),
        ("rank", m.rank.to_string()),
        ("degree_shift", m.mu_p.to_string()),
        ("mode", format!("{:?}", m.mode)),
        ("period_degrees", fmt_i64_list(&m.period_degrees)),
    ]);
    if let Some(dims) = &dims {
        body = body.kv(vec![("dims", String::new())]);
        body = body.table(&["degree", "dim"], dims_rows(dims));
    }
    if let Some(pos) = &positive_dims {
        body = body.kv(vec![("positive_dims", String::new())]);
        body = body.table(&["degree", "dim"], dims_rows(pos));
    }
    if let Some(h) = &homology_out {
        body = body.kv(vec![
            ("vanishing", format!("{:?}", vanishing.as_ref().unwrap())),
            ("homology_provenance", h.provenance.clone()),
        ]);
        body = body.table(&["degree", "dim"], dims_rows(&h.dims));
    }
    let report = ModuleReport {
        provenance,
        rank: m.rank,
        degree_shift: m.mu_p,
        mode: m.mode,
        period_degrees: m.period_degrees.clone(),
        dims,
        positive_dims,
        vanishing,
        witness_pairs,
        homology: homology_out,
    };
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct CheckIndexReport {
    provenance: Provenance,
    #[serde(flatten)]
    report: IndexReport,
}

fn cmd_check_index(
    format: Format,
    exponents: &[i64],
    filling: bool,
    betti: &BettiArgs,
) -> Result<String, CliError> {
    let tuple = parse_tuple(exponents)?;
    let (resolver, betti_files) = build_resolver(betti)?;
    let set = enumerate_strata(&tuple, tuple.period_l(), &resolver)?;
    let report = check_index_positivity(&set, filling)?;
    let mut provenance = Provenance::new("check-index");
    provenance.exponents = Some(exponents.to_vec());
    provenance.betti_files = betti_files;
    provenance.note = Some(format!("filling_assumed={filling}"));
    let body = Rendered::new().kv(vec![
        ("tuple", tuple.to_string()),
        ("classification", format!("{:?}", report.classification)),
        (
            "min_cz_witness",
            format!(
                "L={} value={}",
                report.min_cz_witness.0, report.min_cz_witness.1
            ),
        ),
        ("theorem_case", format!("{:?}", report.theorem_case)),
        ("filling_assumed", report.filling_assumed.to_string()),
        ("convention", report.convention.to_string()),
    ]);
    let report = CheckIndexReport {
        provenance,
        report,
    };
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct VirtualDimReport {
    provenance: Provenance,
    plus: Vec<i64>,
    minus: Vec<i64>,
    reeb: Vec<i64>,
    n: i64,
    virtual_dimension: i64,
}

fn cmd_virtual_dim(
    format: Format,
    plus: &[i64],
    minus: &[i64],
    reeb: &[i64],
    n: i64,
) -> Result<String, CliError> {
    if n < 1 {
        return Err(CliError::validation("--n must be >= 1"));
    }
    let value = virtual_dimension(plus, minus, reeb, n);
    let mut provenance = Provenance::new("virtual-dim");
    provenance.note = Some(format!(
        "plus=[{}] minus=[{}] reeb=[{}] n={n}",
        fmt_i64_list(plus),
        fmt_i64_list(minus),
        fmt_i64_list(reeb)
    ));
    let body = Rendered::new().kv(vec![("virtual_dimension", value.to_string())]);
    let report = VirtualDimReport {
        provenance,
        plus: plus.to_vec(),
        minus: minus.to_vec(),
        reeb: reeb.to_vec(),
        n,
        virtual_dimension: value,
    };
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct HilbertReport {
    provenance: Provenance,
    result: brieskorn_core::algebra::HilbertResult,
}

fn cmd_algebra_hilbert(
    format: Format,
    source: &PresentationSource,
    window: &[i64],
    cap: u32,
) -> Result<String, CliError> {
    let (presentation, source_name) = load_presentation(source)?;
    let (lo, hi) = window_pair(window)?;
    let result = hilbert_function(&presentation, lo, hi, cap)?;
    let mut provenance = Provenance::new("algebra hilbert");
    provenance.window = Some((lo, hi));
    provenance.word_cap = Some(cap);
    provenance.presentation = Some(source_name);
    let mut body = Rendered::new().kv(vec![
        ("word_cap", result.word_cap.to_string()),
        ("converged", result.converged.to_string()),
        (
            "unstable_degrees",
            fmt_i64_list(&result.unstable_degrees),
        ),
    ]);
    body = body.table(&["degree", "dim"], dims_rows(&result.dims));
    let report = HilbertReport {
        provenance,
        result,
    };
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct MonomialDimsReport {
    provenance: Provenance,
    dims: BTreeMap<i64, usize>,
}

fn cmd_algebra_monomial(
    format: Format,
    source: &PresentationSource,
    window: &[i64],
) -> Result<String, CliError> {
    let (presentation, source_name) = load_presentation(source)?;
    let (lo, hi) = window_pair(window)?;
    let dims = monomial_quotient_dims(&presentation, lo, hi)?;
    let mut provenance = Provenance::new("algebra monomial-dims");
    provenance.window = Some((lo, hi));
    provenance.presentation = Some(source_name);
    let body = Rendered::new().table(&["degree", "dim"], dims_rows(&dims));
    let report = MonomialDimsReport { provenance, dims };
    Ok(render(format, &report, &body))
}

#[derive(Serialize)]
struct CompareReportOut {
    provenance: Provenance,
    consistent: bool,
    report: brieskorn_core::algebra::CompareReport,
}

#[allow(clippy::too_many_arguments)]
fn cmd_algebra_compare(
    format: Format,
    source: &PresentationSource,
    exponents: Option<&[i64]>,
    module_degrees: Option<&[i64]>,
    shift: Option<i64>,
    positive: bool,
    window: &[i64],
    cap: u32,
    betti: &BettiArgs,
) -> Result<String, CliError> {
    let (presentation, source_name) = load_presentation(source)?;
    let (lo, hi) = window_pair(window)?;
    let (module, betti_files, module_desc) = match (exponents, module_degrees) {
        (Some(exps), None) => {
            let tuple = parse_tuple(exps)?;
            let (resolver, files) = build_resolver(betti)?;
            (
                period_module(&tuple, &resolver)?,
                files,
                format!("period module of {tuple}"),
            )
        }
        (None, Some(degrees)) => {
            let shift = shift.ok_or_else(|| {
                CliError::validation("--module-degrees needs --shift")
            })?;
            (
                PeriodicGradedDims::from_parts(degrees.to_vec(), shift),
                vec![],
                format!("free module on degrees [{}], shift {shift}", fmt_i64_list(degrees)),
            )
        }
        _ => {
            return Err(CliError::validation(
                "give exactly one of --exponents or --module-degrees",
            ))
        }
    };
    let dims = if positive {
        module.positive_part(lo, hi)?
    } else {
        module.dims_in_window(lo, hi)?
    };
    let report = compare_to_module(&presentation, &dims, lo, hi, cap)?;
    let mut provenance = Provenance::new("algebra compare");
    provenance.exponents = exponents.map(|e| e.to_vec());
    provenance.window = Some((lo, hi));
    provenance.word_cap = Some(cap);
    provenance.presentation = Some(source_name);
    provenance.betti_files = betti_files;
    provenance.note = Some(format!("{module_desc}; positive={positive}"));
    let mut body = Rendered::new().kv(vec![
        ("consistent", report.is_consistent().to_string()),
        ("diff_count", report.diffs.len().to_string()),
    ]);
    if !report.diffs.is_empty() {
        body = body.table(
            &["degree", "module_dim", "algebra_dim"],
            report
                .diffs
                .iter()
                .map(|d| {
                    vec![
                        d.degree.to_string(),
                        d.module_dim.to_string(),
                        d.algebra_dim.to_string(),
                    ]
                })
                .collect(),
        );
    }
    let out = CompareReportOut {
        provenance,
        consistent: report.is_consistent(),
        report,
    };
    Ok(render(format, &out, &body))
}

#[derive(Serialize)]
struct VerifyReport {
    provenance: Provenance,
    #[serde(flatten)]
    summary: verify::VerifySummary,
}

fn cmd_verify(format: Format, name: &str) -> Result<String, CliError> {
    let Some(summary) = verify::run(name) else {
        return Err(CliError {
            code: 4,
            message: format!(
                "unknown example \"{name}\"; available: all, {}",
                verify::available_checks().join(", ")
            ),
        });
    };
    let mut provenance = Provenance::new("verify");
    provenance.note = Some(format!("example={name}"));
    let rows = summary
        .results
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                if r.passed { "pass" } else { "FAIL" }.to_string(),
                r.notes.join(" | "),
            ]
        })
        .collect();
    let body = Rendered::new()
        .table(&["check", "status", "notes"], rows)
        .kv(vec![("all_passed", summary.all_passed.to_string())]);
    let all_passed = summary.all_passed;
    let report = VerifyReport {
        provenance,
        summary,
    };
    let text = render(format, &report, &body);
    if all_passed {
        Ok(text)
    } else {
        // Report the full output, then fail the process.
        print!("{text}");
        Err(CliError {
            code: 1,
            message: "verification failed".into(),
        })
    }
}
