//! Command-line surface tying the library together.
//!
//! Subcommands: `evaluate`, `optimize`, `reduce`, `certify-kernel`, and
//! `reproduce`. Inputs are CSV or JSON point sets (see [`crate::io`]);
//! reports are emitted as JSON or CSV. `reproduce` regenerates the two
//! built-in benchmark fronts, verifies every golden value, and emits the
//! plot data behind them.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characterize::{certify_kernel, cauchy_linearity_check, default_probes, fit_beta_from_unit_value, AdditivityReport};
use crate::diversity::{diversity_gap_sum, diversity_matrix, SimilarityMatrix};
use crate::dp::{solve_with_stats, DpStats, Selection};
use crate::error::{Error, Result};
use crate::fronts::{generate_parabola_front, generate_zdt3_front};
use crate::instance::LineInstance;
use crate::io::{fmt_f64, read_rows};
use crate::kernel::Kernel;
use crate::line_optimal::{uniform_optimum, ContinuousOptimum};
use crate::reduce::{l1_distance, reduce, OrderedCurveSample, ScalarReduction};

/// Absolute tolerance of golden diversity and statistic comparisons; index
/// sets must match exactly. The published figures carry six decimals, so
/// their rounding stays below this.
pub const GOLDEN_ABSOLUTE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "spdiv",
    version,
    about = "Solow-Polasky diversity on ordered one-dimensional data",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate diversity of a point set by both computation paths.
    Evaluate(EvaluateArgs),
    /// Select the size-k subset maximizing diversity.
    Optimize(OptimizeArgs),
    /// Reduce an ordered front to its induced line coordinates.
    Reduce(ReduceArgs),
    /// Probe kernels for adjacent-gap additivity of the excess diversity.
    CertifyKernel(CertifyKernelArgs),
    /// Regenerate a built-in benchmark example and verify its golden values.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    /// Dense connected front on f2 = 1 - f1^2 (n=70, k=10).
    DenseFront,
    /// Disconnected ZDT3 front (n=100, k=20).
    Zdt3,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Input point set: CSV or JSON, one point per row.
    #[arg(long)]
    pub input: PathBuf,
    /// Exponential kernel scale.
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    /// Input point set: CSV or JSON, one point per row. Fronts are reduced
    /// to their induced line coordinates first.
    #[arg(long)]
    pub input: PathBuf,
    /// Number of points to select.
    #[arg(long)]
    pub k: usize,
    /// Exponential kernel scale.
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the selection here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// Input front: CSV or JSON, one point per row, in curve order.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the reduction here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyKernelArgs {
    /// Scale of the exponential kernel under certification.
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Which built-in example to regenerate.
    #[arg(long, value_enum)]
    pub example: ExampleName,
    /// Write the plot-data CSV here; without it the CSV follows the report
    /// on stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Dispatch a parsed command, writing primary output to `out` (or to the
/// command's `--output` path when given).
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Evaluate(args) => cmd_evaluate(&args, out),
        Command::Optimize(args) => cmd_optimize(&args, out),
        Command::Reduce(args) => cmd_reduce(&args, out),
        Command::CertifyKernel(args) => cmd_certify_kernel(&args, out),
        Command::Reproduce(args) => cmd_reproduce(&args, out),
    }
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
struct EvaluateReport {
    points: usize,
    beta: f64,
    value_gap_sum: f64,
    excess: f64,
    value_matrix: f64,
    absolute_difference: f64,
    coordinates: Vec<f64>,
    gaps: Vec<f64>,
    gap_contributions: Vec<f64>,
    collapsed_duplicates: Vec<usize>,
}

fn cmd_evaluate(args: &EvaluateArgs, out: &mut dyn Write) -> Result<()> {
    check_beta(args.beta)?;
    let kernel = Kernel::exponential(args.beta)?;
    let input = load_input(&args.input)?;

    let (instance, collapsed, matrix_value) = match &input {
        ParsedInput::Line(instance) => {
            let matrix = diversity_matrix(instance, &kernel)?;
            (instance.clone(), Vec::new(), matrix.value)
        }
        ParsedInput::Front { sample, reduction } => {
            // Matrix path on the kept objective points under the l1 metric;
            // the gap-sum path runs on the induced coordinates.
            let kept: Vec<&Vec<f64>> = reduction
                .kept_positions
                .iter()
                .map(|&p| &sample.points()[p])
                .collect();
            let z = SimilarityMatrix::from_distances(
                kept.len(),
                |i, j| l1_distance(kept[i], kept[j]),
                &kernel,
            )?;
            (
                reduction.instance.clone(),
                reduction.collapsed.clone(),
                z.diversity()?.value,
            )
        }
    };

    if !collapsed.is_empty() {
        eprintln!(
            "warning: collapsed {} zero-distance duplicate sample(s): {:?}",
            collapsed.len(),
            collapsed
        );
    }

    let by_gaps = diversity_gap_sum(&instance, args.beta);
    let gaps = instance.gaps();
    let report = EvaluateReport {
        points: instance.len(),
        beta: args.beta,
        value_gap_sum: by_gaps.value,
        excess: by_gaps.excess,
        value_matrix: matrix_value,
        absolute_difference: (by_gaps.value - matrix_value).abs(),
        coordinates: instance.coords().to_vec(),
        gaps: gaps.gaps().to_vec(),
        gap_contributions: gaps
            .gaps()
            .iter()
            .map(|&g| (args.beta * g / 2.0).tanh())
            .collect(),
        collapsed_duplicates: collapsed,
    };

    let rendered = match args.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut text = String::from("quantity,value\n");
            text.push_str(&format!("points,{}\n", report.points));
            text.push_str(&format!("beta,{}\n", fmt_f64(report.beta)));
            text.push_str(&format!("value_gap_sum,{}\n", fmt_f64(report.value_gap_sum)));
            text.push_str(&format!("value_matrix,{}\n", fmt_f64(report.value_matrix)));
            text.push_str(&format!(
                "absolute_difference,{}\n",
                fmt_f64(report.absolute_difference)
            ));
            for (i, (gap, contribution)) in report
                .gaps
                .iter()
                .zip(&report.gap_contributions)
                .enumerate()
            {
                text.push_str(&format!("gap_{},{}\n", i + 1, fmt_f64(*gap)));
                text.push_str(&format!("contribution_{},{}\n", i + 1, fmt_f64(*contribution)));
            }
            text
        }
    };
    emit(&args.output, out, &rendered)
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
struct OptimizeReport {
    n: usize,
    k: usize,
    beta: f64,
    /// 1-based indices into the evaluated line instance.
    indices: Vec<usize>,
    /// 1-based indices into the original input rows (differs from `indices`
    /// only when duplicates were collapsed during reduction).
    #[serde(skip_serializing_if = "Option::is_none")]
    original_indices: Option<Vec<usize>>,
    /// Induced line coordinates of the selected points.
    coordinates: Vec<f64>,
    /// Selected objective vectors, for front inputs.
    #[serde(skip_serializing_if = "Option::is_none")]
    objective_points: Option<Vec<Vec<f64>>>,
    diversity: f64,
    excess: f64,
    target_spacing: f64,
    gaps: Vec<f64>,
    max_gap_deviation: f64,
}

fn cmd_optimize(args: &OptimizeArgs, out: &mut dyn Write) -> Result<()> {
    check_beta(args.beta)?;
    let input = load_input(&args.input)?;
    let instance = match &input {
        ParsedInput::Line(instance) => instance.clone(),
        ParsedInput::Front { reduction, .. } => reduction.instance.clone(),
    };
    let (selection, _) = solve_with_stats(&instance, args.k, args.beta)?;

    let (original_indices, objective_points) = match &input {
        ParsedInput::Line(_) => (None, None),
        ParsedInput::Front { sample, reduction } => {
            let originals: Vec<usize> = selection
                .indices
                .iter()
                .map(|&i| reduction.index_map[i - 1])
                .collect();
            let objectives: Vec<Vec<f64>> = selection
                .indices
                .iter()
                .map(|&i| sample.points()[reduction.kept_positions[i - 1]].clone())
                .collect();
            (Some(originals), Some(objectives))
        }
    };

    let report = OptimizeReport {
        n: instance.len(),
        k: args.k,
        beta: args.beta,
        indices: selection.indices.clone(),
        original_indices,
        coordinates: selection.coords.clone(),
        objective_points: objective_points.clone(),
        diversity: selection.value.value,
        excess: selection.value.excess,
        target_spacing: selection.target_spacing,
        gaps: selection.gaps.gaps().to_vec(),
        max_gap_deviation: selection.max_gap_deviation,
    };

    let rendered = match args.format {
        Format::Json => to_json(&report)?,
        // CSV mode emits exactly the selected points so the output can be
        // fed back to `evaluate`; diagnostics go to stderr.
        Format::Csv => {
            eprintln!(
                "selected {} of {} points: indices {:?}, diversity {}, target spacing {}, max deviation {}",
                args.k,
                report.n,
                report.indices,
                fmt_f64(report.diversity),
                fmt_f64(report.target_spacing),
                fmt_f64(report.max_gap_deviation),
            );
            match &objective_points {
                Some(points) => render_points_csv(points),
                None => {
                    let rows: Vec<Vec<f64>> =
                        report.coordinates.iter().map(|&c| vec![c]).collect();
                    render_points_csv(&rows)
                }
            }
        }
    };
    emit(&args.output, out, &rendered)
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
struct ReduceReport {
    points: usize,
    kept: usize,
    length: f64,
    coordinates: Vec<f64>,
    index_map: Vec<usize>,
    collapsed: Vec<usize>,
}

fn cmd_reduce(args: &ReduceArgs, out: &mut dyn Write) -> Result<()> {
    let rows = read_rows(&args.input)?;
    let n = rows.len();
    let sample = OrderedCurveSample::new(rows)?;
    let reduction = reduce(&sample)?;
    let report = ReduceReport {
        points: n,
        kept: reduction.instance.len(),
        length: reduction.length,
        coordinates: reduction.instance.coords().to_vec(),
        index_map: reduction.index_map.clone(),
        collapsed: reduction.collapsed.clone(),
    };
    let rendered = match args.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let rows: Vec<Vec<f64>> = report.coordinates.iter().map(|&c| vec![c]).collect();
            render_points_csv(&rows)
        }
    };
    emit(&args.output, out, &rendered)
}

// ---------------------------------------------------------------------------
// certify-kernel
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
struct KernelReport {
    #[serde(flatten)]
    additivity: AdditivityReport,
    fitted_beta: f64,
    cauchy_max_deviation: f64,
}

#[derive(Debug, Serialize)]
struct CertifyReport {
    beta: f64,
    probe_count: usize,
    reports: Vec<KernelReport>,
}

fn cmd_certify_kernel(args: &CertifyKernelArgs, out: &mut dyn Write) -> Result<()> {
    check_beta(args.beta)?;
    let probes = default_probes();
    let kernels = [
        Kernel::exponential(args.beta)?,
        Kernel::gaussian(),
        Kernel::rational(),
        Kernel::truncated_linear(),
    ];
    let mut reports = Vec::with_capacity(kernels.len());
    for kernel in &kernels {
        reports.push(KernelReport {
            additivity: certify_kernel(kernel, &probes)?,
            fitted_beta: fit_beta_from_unit_value(kernel)?,
            cauchy_max_deviation: cauchy_linearity_check(kernel)?,
        });
    }
    let report = CertifyReport {
        beta: args.beta,
        probe_count: probes.len(),
        reports,
    };
    let rendered = match args.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut text =
                String::from("kernel,probes,max_residual,verdict,fitted_beta,cauchy_max_deviation\n");
            for r in &report.reports {
                text.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.additivity.kernel,
                    report.probe_count,
                    fmt_f64(r.additivity.max_residual),
                    match r.additivity.verdict {
                        crate::characterize::Verdict::ExponentialConsistent =>
                            "exponential_consistent",
                        crate::characterize::Verdict::Violates => "violates",
                    },
                    fmt_f64(r.fitted_beta),
                    fmt_f64(r.cauchy_max_deviation),
                ));
            }
            text
        }
    };
    emit(&args.output, out, &rendered)
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

/// Everything regenerated for one built-in example.
pub struct Reproduction {
    pub example: ExampleName,
    pub sample: OrderedCurveSample,
    pub reduction: ScalarReduction,
    pub selection: Selection,
    pub stats: DpStats,
    /// Continuous uniform-spacing reference on the instance's span.
    pub continuous: ContinuousOptimum,
}

struct Golden {
    name: &'static str,
    k: usize,
    indices: &'static [usize],
    diversity: f64,
    /// Exact f64 the target spacing must equal, when the span is exact.
    target_spacing_exact: Option<f64>,
    target_spacing: f64,
    gaps: Option<&'static [f64]>,
    max_gap_deviation: f64,
    states: u64,
    transitions: u64,
    continuous_reference: Option<f64>,
}

const DENSE_FRONT_GOLDEN: Golden = Golden {
    name: "dense-front",
    k: 10,
    indices: &[1, 14, 24, 32, 40, 47, 53, 59, 65, 70],
    diversity: 1.995878,
    target_spacing_exact: Some(2.0 / 9.0),
    target_spacing: 0.222222,
    gaps: Some(&[
        0.223903, 0.220542, 0.206679, 0.233564, 0.226423, 0.210460, 0.225583, 0.240706, 0.212140,
    ]),
    max_gap_deviation: 0.018484,
    states: 700,
    transitions: 21_735,
    continuous_reference: Some(1.995905),
};

const ZDT3_GOLDEN: Golden = Golden {
    name: "zdt3",
    k: 20,
    indices: &[
        1, 4, 10, 20, 23, 28, 32, 40, 41, 45, 50, 60, 61, 65, 70, 80, 81, 85, 90, 100,
    ],
    diversity: 2.310417,
    target_spacing_exact: None,
    target_spacing: 0.138169,
    gaps: None,
    max_gap_deviation: 0.032652,
    states: 2_000,
    transitions: 94_050,
    continuous_reference: None,
};

fn golden(example: ExampleName) -> &'static Golden {
    match example {
        ExampleName::DenseFront => &DENSE_FRONT_GOLDEN,
        ExampleName::Zdt3 => &ZDT3_GOLDEN,
    }
}

/// Regenerate one built-in example end to end: candidate front, reduction,
/// exact selection, work counters, and the continuous reference.
pub fn reproduce(example: ExampleName) -> Result<Reproduction> {
    let sample = match example {
        ExampleName::DenseFront => generate_parabola_front(70),
        ExampleName::Zdt3 => generate_zdt3_front(20),
    };
    let reduction = reduce(&sample)?;
    let k = golden(example).k;
    let (selection, stats) = solve_with_stats(&reduction.instance, k, 1.0)?;
    let span = reduction.instance.span();
    let continuous = uniform_optimum(k, 0.0, span, 1.0)?;
    Ok(Reproduction {
        example,
        sample,
        reduction,
        selection,
        stats,
        continuous,
    })
}

/// Compare a regenerated example against its golden values. Returns one
/// descriptive line per verified quantity, or the first mismatch.
pub fn verify_golden(r: &Reproduction) -> Result<Vec<String>> {
    let golden = golden(r.example);
    let mut lines = Vec::new();
    let mut ok = |line: String| lines.push(format!("ok  {line}"));

    if r.selection.indices != golden.indices {
        return Err(mismatch(
            "index set",
            format!("{:?}", golden.indices),
            format!("{:?}", r.selection.indices),
        ));
    }
    ok(format!("index set = {:?}", r.selection.indices));

    check_close("diversity", golden.diversity, r.selection.value.value)?;
    ok(format!(
        "diversity = {} (golden {} +- {:.0e})",
        fmt_f64(r.selection.value.value),
        golden.diversity,
        GOLDEN_ABSOLUTE_TOLERANCE
    ));

    if let Some(exact) = golden.target_spacing_exact {
        if r.selection.target_spacing != exact {
            return Err(mismatch(
                "target spacing (exact)",
                fmt_f64(exact),
                fmt_f64(r.selection.target_spacing),
            ));
        }
    }
    check_close("target spacing", golden.target_spacing, r.selection.target_spacing)?;
    ok(format!(
        "target spacing = {}",
        fmt_f64(r.selection.target_spacing)
    ));

    if let Some(golden_gaps) = golden.gaps {
        for (i, (&expected, &actual)) in golden_gaps
            .iter()
            .zip(r.selection.gaps.gaps())
            .enumerate()
        {
            check_close(&format!("gap {}", i + 1), expected, actual)?;
        }
        ok(format!(
            "realized gaps match the {} golden values",
            golden_gaps.len()
        ));
    }

    check_close(
        "max gap deviation",
        golden.max_gap_deviation,
        r.selection.max_gap_deviation,
    )?;
    ok(format!(
        "max gap deviation = {}",
        fmt_f64(r.selection.max_gap_deviation)
    ));

    let stats = DpStats {
        states: golden.states,
        transitions: golden.transitions,
    };
    if r.stats != stats {
        return Err(mismatch(
            "solver work counters",
            format!("{stats:?}"),
            format!("{:?}", r.stats),
        ));
    }
    ok(format!(
        "solver visited {} states and {} transitions",
        r.stats.states, r.stats.transitions
    ));

    if let Some(reference) = golden.continuous_reference {
        check_close("continuous reference", reference, r.continuous.value)?;
        let shortfall = r.continuous.value - r.selection.value.value;
        if shortfall <= 0.0 {
            return Err(mismatch(
                "discrete-vs-continuous shortfall",
                "a positive value".into(),
                fmt_f64(shortfall),
            ));
        }
        ok(format!(
            "continuous reference = {} (discrete optimum {} below it)",
            fmt_f64(r.continuous.value),
            fmt_f64(shortfall)
        ));
    }

    Ok(lines)
}

/// Plot data for one example: `f1,f2,selected` rows over all candidates.
pub fn plot_data_csv(r: &Reproduction) -> String {
    let selected_positions: Vec<usize> = r
        .selection
        .indices
        .iter()
        .map(|&i| r.reduction.kept_positions[i - 1])
        .collect();
    let mut text = String::from("f1,f2,selected\n");
    for (position, point) in r.sample.points().iter().enumerate() {
        let selected = selected_positions.contains(&position);
        text.push_str(&format!(
            "{},{},{}\n",
            fmt_f64(point[0]),
            fmt_f64(point[1]),
            u8::from(selected)
        ));
    }
    text
}

fn cmd_reproduce(args: &ReproduceArgs, out: &mut dyn Write) -> Result<()> {
    let reproduction = reproduce(args.example)?;
    let golden_name = golden(args.example).name;
    writeln!(
        out,
        "{}: n = {}, k = {}, beta = 1",
        golden_name,
        reproduction.reduction.instance.len(),
        golden(args.example).k
    )?;
    let lines = verify_golden(&reproduction)?;
    for line in &lines {
        writeln!(out, "{line}")?;
    }
    writeln!(out, "all golden values verified")?;

    let plot = plot_data_csv(&reproduction);
    match &args.output {
        Some(path) => {
            fs::write(path, plot)?;
            writeln!(out, "plot data written to {}", path.display())?;
        }
        None => {
            writeln!(out)?;
            out.write_all(plot.as_bytes())?;
        }
    }
    Ok(())
}

fn check_close(quantity: &str, expected: f64, actual: f64) -> Result<()> {
    if (expected - actual).abs() > GOLDEN_ABSOLUTE_TOLERANCE {
        return Err(mismatch(quantity, fmt_f64(expected), fmt_f64(actual)));
    }
    Ok(())
}

fn mismatch(quantity: &str, expected: String, actual: String) -> Error {
    Error::GoldenMismatch {
        quantity: quantity.to_string(),
        expected,
        actual,
    }
}

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

enum ParsedInput {
    Line(LineInstance),
    Front {
        sample: OrderedCurveSample,
        reduction: ScalarReduction,
    },
}

/// Load rows and classify: one column is a point set on the line (sorted
/// before use; duplicates fail loudly), several columns are an ordered
/// front that gets reduced.
fn load_input(path: &Path) -> Result<ParsedInput> {
    let rows = read_rows(path)?;
    if rows[0].len() == 1 {
        let mut coords: Vec<f64> = rows.into_iter().map(|row| row[0]).collect();
        coords.sort_by(|a, b| a.partial_cmp(b).expect("finite by parsing"));
        Ok(ParsedInput::Line(LineInstance::new(coords)?))
    } else {
        let sample = OrderedCurveSample::new(rows)?;
        let reduction = reduce(&sample)?;
        Ok(ParsedInput::Front { sample, reduction })
    }
}

fn render_points_csv(points: &[Vec<f64>]) -> String {
    let dims = points.first().map_or(0, Vec::len);
    let mut text = if dims == 1 {
        String::from("coordinate\n")
    } else {
        let header: Vec<String> = (1..=dims).map(|d| format!("f{d}")).collect();
        format!("{}\n", header.join(","))
    };
    for point in points {
        let cells: Vec<String> = point.iter().map(|&v| fmt_f64(v)).collect();
        text.push_str(&format!("{}\n", cells.join(",")));
    }
    text
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn emit(output: &Option<PathBuf>, out: &mut dyn Write, content: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, content)?,
        None => out.write_all(content.as_bytes())?,
    }
    Ok(())
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Argument(format!(
            "--beta must be a positive finite real, got {beta}"
        )));
    }
    Ok(())
}
