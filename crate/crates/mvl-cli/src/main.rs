//! `mvl` — command-line surface of the multi-valued logic workbench.
//!
//! Every published table and curve is reachable from one subcommand (the
//! per-command help names the table it reproduces), outputs are
//! byte-deterministic for a fixed argv and seed, and exit codes are 0 for
//! success, 1 for a failed verification, 2 for usage or runtime errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mvl::circuits::{
    self, gen_binary_full_adder, gen_binary_half_adder, gen_binary_mul1, gen_ripple_adder,
    gen_ternary_full_adder, gen_ternary_half_adder, gen_ternary_mul1, gen_wallace_multiplier,
    published_wallace_counts, style_gate_cost, BinaryFaVariant, BinaryHaVariant, CatalogGate,
    CellFamily, EquationSet, StyleName,
};
use mvl::costmodel::{
    comparison_report, radix_sweep, CompareOptions, ComparisonReport, CostModel, CostParams,
    Subject,
};
use mvl::digit::information_ratio;
use mvl::netlist::{CostMode, Netlist};
use mvl::verify::{
    errata_report, verify_exhaustive, verify_word_adder, verify_word_multiplier, Coverage,
    DigitOracle, Evidence, VerificationResult,
};

#[derive(Parser)]
#[command(
    name = "mvl",
    version,
    about = "Multi-valued logic workbench: ternary vs binary circuit costs, \
             gate-level verification and radix-economy curves",
    after_help = "\
Published tables and figures, by subcommand:
  hardware-complexity curves (radix 2..16)   curve --model hurst|refined
  inverter / Nand / D-flip-flop / SRAM       catalog [--gate inverter|nand2|dff|sram]
  quaternary inverter comparison             catalog --style quaternary
  ternary vs binary wire counts              compare --subject adder-word --bits 8|16|32|64
  half/full-adder and multiplier ratios      compare --subject ha|fa|mul1
  8x8-bit vs 5x5-trit multiplier totals      compare --subject multiplier-word
  half/full-adder and multiplier tables      build --circuit t-ha|t-fa|t-mul1 --emit table
  decoder/encoder structure                  build --circuit t-ha --emit json
  Wallace-tree block accounting              build --circuit wallace --radix 2|3 --width W
  printed-vs-recomputed divergences          errata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a radix-economy cost curve as CSV (the hardware-complexity
    /// figures for radixes 2 to 16 and their 2-to-4 zoom).
    Curve(CurveArgs),
    /// Print the design-style catalog with ratios and viability verdicts
    /// (the inverter, Nand, D-flip-flop and SRAM comparison tables plus the
    /// quaternary inverter row).
    Catalog(CatalogArgs),
    /// Generate a circuit and print its cost/depth summary, or the full
    /// netlist as versioned JSON with --emit json.
    Build(BuildArgs),
    /// Verify a circuit against its oracle; exits 1 on failure.
    Verify(VerifyArgs),
    /// Ternary-versus-binary comparison reports (the half-adder, full-adder
    /// and word-level multiplier tables).
    Compare(CompareArgs),
    /// Print the six-entry errata report of printed-versus-recomputed
    /// divergences.
    Errata(ErrataArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Hurst,
    Refined,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    /// First radix of the sweep.
    #[arg(long, default_value_t = 2.0)]
    from: f64,
    /// Last radix of the sweep (inclusive).
    #[arg(long, default_value_t = 16.0)]
    to: f64,
    #[arg(long, default_value_t = 0.1)]
    step: f64,
    /// Proportionality constant k.
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// ln N of the represented range.
    #[arg(long = "ln-n", default_value_t = 1.0)]
    ln_n: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    /// Restrict to one style.
    #[arg(long, value_enum)]
    style: Option<StyleArg>,
    /// Restrict to one gate.
    #[arg(long, value_enum)]
    gate: Option<GateArg>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StyleArg {
    Navi,
    Lin,
    Nepal,
    Quaternary,
}

impl StyleArg {
    fn name(self) -> StyleName {
        match self {
            StyleArg::Navi => StyleName::Navi,
            StyleArg::Lin => StyleName::Lin,
            StyleArg::Nepal => StyleName::Nepal,
            StyleArg::Quaternary => StyleName::Quaternary,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GateArg {
    Inverter,
    Nand2,
    Dff,
    Sram,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CircuitArg {
    #[value(name = "t-ha")]
    THa,
    #[value(name = "t-fa")]
    TFa,
    #[value(name = "t-mul1")]
    TMul1,
    #[value(name = "b-ha")]
    BHa,
    #[value(name = "b-fa")]
    BFa,
    #[value(name = "b-mul1")]
    BMul1,
    Ripple,
    Wallace,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Nand,
    Xor,
    Pass8t,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EqsArg {
    Printed,
    Corrected,
}

impl EqsArg {
    fn set(self) -> EquationSet {
        match self {
            EqsArg::Printed => EquationSet::Printed,
            EqsArg::Corrected => EquationSet::Corrected,
        }
    }
}

#[derive(Args)]
struct CircuitSelect {
    #[arg(long, value_enum)]
    circuit: CircuitArg,
    /// Radix for word-level circuits (ripple, wallace).
    #[arg(long)]
    radix: Option<u32>,
    /// Digit width for word-level circuits.
    #[arg(long)]
    width: Option<usize>,
    /// Binary cell implementation (b-ha: nand|xor; b-fa and binary words:
    /// nand|xor|pass8t).
    #[arg(long, value_enum, default_value = "nand")]
    variant: VariantArg,
    /// Ternary full-adder equation set.
    #[arg(long, value_enum, default_value = "corrected")]
    eqs: EqsArg,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    select: CircuitSelect,
    /// Emit the netlist document (json) or the exhaustive truth table
    /// (table) instead of the text summary.
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    Json,
    Table,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    select: CircuitSelect,
    /// Force exhaustive coverage (the default where it fits the cap).
    #[arg(long)]
    exhaustive: bool,
    /// Sampled coverage with this many cases.
    #[arg(long, conflicts_with = "exhaustive")]
    samples: Option<u64>,
    /// Seed for sampled coverage.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, value_enum)]
    subject: SubjectArg,
    /// Binary word width for the word-level subjects.
    #[arg(long)]
    bits: Option<u32>,
    /// Ternary word width; defaults to the published wire table for --bits.
    #[arg(long)]
    trits: Option<u32>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SubjectArg {
    Inverter,
    Nand,
    Ha,
    Fa,
    Mul1,
    Dff,
    Sram,
    #[value(name = "adder-word")]
    AdderWord,
    #[value(name = "multiplier-word")]
    MultiplierWord,
}

impl SubjectArg {
    fn subject(self) -> Subject {
        match self {
            SubjectArg::Inverter => Subject::Inverter,
            SubjectArg::Nand => Subject::Nand,
            SubjectArg::Ha => Subject::Ha,
            SubjectArg::Fa => Subject::Fa,
            SubjectArg::Mul1 => Subject::Mul1,
            SubjectArg::Dff => Subject::Dff,
            SubjectArg::Sram => Subject::Sram,
            SubjectArg::AdderWord => Subject::AdderWord,
            SubjectArg::MultiplierWord => Subject::MultiplierWord,
        }
    }
}

#[derive(Args)]
struct ErrataArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Curve(args) => {
            let text = curve_output(&args)?;
            emit(&text, args.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog(args) => {
            let text = catalog_output(&args)?;
            emit(&text, args.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Build(args) => {
            let text = build_output(&args)?;
            emit(&text, args.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let result = run_verification(&args)?;
            let text = to_json(&result)?;
            emit(&text, args.output.as_deref())?;
            Ok(if result.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Compare(args) => {
            let report = comparison_report(
                args.subject.subject(),
                &CompareOptions {
                    bits: args.bits,
                    trits: args.trits,
                },
            )?;
            let text = match args.format {
                FormatArg::Csv => comparison_csv(&report),
                FormatArg::Json => to_json(&report)?,
            };
            emit(&text, args.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Errata(args) => {
            let report = errata_report();
            let text = match args.format {
                FormatArg::Csv => errata_csv(&report),
                FormatArg::Json => to_json(&report)?,
            };
            emit(&text, args.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(text: &str, output: Option<&std::path::Path>) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

/// Fixed formatting for costs and ratios: four significant digits with a
/// '.' separator, so outputs are byte-stable.
fn fmt_sig(x: f64, significant: i32) -> String {
    if x == 0.0 {
        return format!("{:.*}", (significant - 1).max(0) as usize, 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (significant - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn fmt_radix(r: f64) -> String {
    if (r - r.round()).abs() < 1e-9 {
        format!("{}", r.round() as i64)
    } else {
        fmt_sig(r, 4)
    }
}

fn curve_output(args: &CurveArgs) -> Result<String> {
    if !args.step.is_finite() || args.step <= 0.0 {
        bail!("--step must be positive");
    }
    if args.to < args.from {
        bail!("--to must be >= --from");
    }
    let params = CostParams::new(args.k, args.ln_n)?;
    let model = match args.model {
        ModelArg::Hurst => CostModel::Hurst,
        ModelArg::Refined => CostModel::Refined,
    };
    let mut radices = Vec::new();
    let mut i = 0u64;
    loop {
        let r = args.from + args.step * i as f64;
        if r > args.to + args.step * 1e-9 {
            break;
        }
        radices.push(r);
        i += 1;
    }
    let points = radix_sweep(model, &radices, &params)?;
    match args.format {
        FormatArg::Csv => {
            let mut out = String::from("radix,cost\n");
            for p in &points {
                let _ = writeln!(out, "{},{}", fmt_radix(p.radix), fmt_sig(p.cost, 4));
            }
            Ok(out)
        }
        FormatArg::Json => to_json(&points),
    }
}

fn catalog_output(args: &CatalogArgs) -> Result<String> {
    #[derive(serde::Serialize)]
    struct CatalogRow {
        style: &'static str,
        gate: String,
        transistors: u64,
        binary_transistors: u64,
        ratio: f64,
        information_ratio: f64,
        verdict: &'static str,
        supplies: u32,
        static_current: bool,
        note: &'static str,
    }

    let wanted_gates: Vec<GateArg> = match args.gate {
        Some(g) => vec![g],
        None => vec![
            GateArg::Inverter,
            GateArg::Nand2,
            GateArg::Dff,
            GateArg::Sram,
        ],
    };
    let wanted_styles: Vec<StyleArg> = match args.style {
        Some(s) => vec![s],
        None => vec![
            StyleArg::Navi,
            StyleArg::Lin,
            StyleArg::Nepal,
            StyleArg::Quaternary,
        ],
    };

    let mut rows = Vec::new();
    for style_arg in wanted_styles {
        let name = style_arg.name();
        let entry = circuits::style(name);
        for gate_arg in &wanted_gates {
            let (gate, catalog_gate) = match gate_arg {
                GateArg::Inverter => ("inverter", CatalogGate::Inverter),
                GateArg::Nand2 => ("nand2", CatalogGate::NandN(2)),
                GateArg::Dff => ("dff", CatalogGate::Dff),
                GateArg::Sram => ("sram_cell", CatalogGate::SramCell),
            };
            // The published 2-input Nand row, not the formula (the navi
            // divergence between the two is an errata entry).
            let cost = if *gate_arg == GateArg::Nand2 {
                entry.nand2_published.map(|published| (published, false))
            } else {
                style_gate_cost(name, catalog_gate)
                    .ok()
                    .map(|c| (c.transistors, c.extrapolated))
            };
            let Some((transistors, extrapolated)) = cost else {
                continue;
            };
            let binary_transistors = match gate_arg {
                GateArg::Inverter if name == StyleName::Quaternary => 4,
                _ => style_gate_cost(StyleName::Binary, catalog_gate)?.transistors,
            };
            let info = if name == StyleName::Quaternary {
                information_ratio(4, 2)
            } else {
                information_ratio(3, 2)
            };
            let ratio = transistors as f64 / binary_transistors as f64;
            rows.push(CatalogRow {
                style: name.as_str(),
                gate: gate.to_string(),
                transistors,
                binary_transistors,
                ratio,
                information_ratio: info,
                verdict: if ratio <= info {
                    "ternary_viable"
                } else {
                    "not_viable"
                },
                supplies: entry.supplies,
                static_current: entry.static_current,
                note: if extrapolated {
                    "extrapolated (not in published table)"
                } else {
                    ""
                },
            });
        }
    }

    match args.format {
        FormatArg::Csv => {
            let mut out = String::from(
                "style,gate,transistors,binary_transistors,ratio,information_ratio,verdict,supplies,static_current,note\n",
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.style,
                    r.gate,
                    r.transistors,
                    r.binary_transistors,
                    fmt_sig(r.ratio, 4),
                    fmt_sig(r.information_ratio, 4),
                    r.verdict,
                    r.supplies,
                    r.static_current,
                    r.note
                );
            }
            Ok(out)
        }
        FormatArg::Json => to_json(&rows),
    }
}

enum BuiltCircuit {
    Plain(Netlist),
    Multiplier(Netlist, circuits::BlockCounts),
}

fn binary_fa_variant(variant: VariantArg) -> BinaryFaVariant {
    match variant {
        VariantArg::Nand => BinaryFaVariant::Nand,
        VariantArg::Xor => BinaryFaVariant::Xor,
        VariantArg::Pass8t => BinaryFaVariant::Pass8t,
    }
}

fn word_family(select: &CircuitSelect) -> Result<CellFamily> {
    let radix = select
        .radix
        .ok_or_else(|| anyhow!("--radix is required for word-level circuits"))?;
    match radix {
        2 => Ok(CellFamily::Binary {
            fa: binary_fa_variant(select.variant),
        }),
        3 => Ok(CellFamily::Ternary {
            eqs: select.eqs.set(),
        }),
        other => bail!("--radix must be 2 or 3, got {other}"),
    }
}

fn word_width(select: &CircuitSelect) -> Result<usize> {
    select
        .width
        .ok_or_else(|| anyhow!("--width is required for word-level circuits"))
}

fn build_circuit(select: &CircuitSelect) -> Result<BuiltCircuit> {
    Ok(match select.circuit {
        CircuitArg::THa => BuiltCircuit::Plain(gen_ternary_half_adder()),
        CircuitArg::TFa => BuiltCircuit::Plain(gen_ternary_full_adder(select.eqs.set())),
        CircuitArg::TMul1 => BuiltCircuit::Plain(gen_ternary_mul1()),
        CircuitArg::BHa => {
            let variant = match select.variant {
                VariantArg::Nand => BinaryHaVariant::Nand,
                VariantArg::Xor => BinaryHaVariant::Xor,
                VariantArg::Pass8t => bail!("b-ha variants are nand and xor"),
            };
            BuiltCircuit::Plain(gen_binary_half_adder(variant))
        }
        CircuitArg::BFa => {
            BuiltCircuit::Plain(gen_binary_full_adder(binary_fa_variant(select.variant)))
        }
        CircuitArg::BMul1 => BuiltCircuit::Plain(gen_binary_mul1()),
        CircuitArg::Ripple => {
            let family = word_family(select)?;
            BuiltCircuit::Plain(gen_ripple_adder(&family, word_width(select)?)?)
        }
        CircuitArg::Wallace => {
            let family = word_family(select)?;
            let (netlist, counts) = gen_wallace_multiplier(&family, word_width(select)?)?;
            BuiltCircuit::Multiplier(netlist, counts)
        }
    })
}

fn build_output(args: &BuildArgs) -> Result<String> {
    let built = build_circuit(&args.select)?;
    let netlist = match &built {
        BuiltCircuit::Plain(n) => n,
        BuiltCircuit::Multiplier(n, _) => n,
    };
    match args.emit {
        Some(EmitArg::Json) => return to_json(&netlist.to_document()),
        Some(EmitArg::Table) => {
            let table = netlist.exhaustive_table()?;
            let mut out = String::new();
            let name = |id: mvl::netlist::SignalId| netlist.signal(id).name.clone();
            let header: Vec<String> = netlist
                .inputs()
                .iter()
                .map(|&s| name(s))
                .chain(netlist.outputs().iter().map(|&s| name(s)))
                .collect();
            let _ = writeln!(out, "{}", header.join(","));
            for row in &table.rows {
                let cells: Vec<String> = row
                    .inputs
                    .iter()
                    .chain(row.outputs.iter())
                    .map(|v| v.to_string())
                    .collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
            return Ok(out);
        }
        None => {}
    }
    let mut out = String::new();
    let _ = writeln!(out, "circuit: {}", netlist.name());
    let _ = writeln!(out, "radix: {}", netlist.radix());
    let _ = writeln!(out, "inputs: {}", netlist.inputs().len());
    let _ = writeln!(out, "outputs: {}", netlist.outputs().len());
    let _ = writeln!(out, "gates: {}", netlist.gates().len());
    let _ = writeln!(
        out,
        "transistors (catalog): {}",
        netlist.transistor_count(CostMode::Catalog)
    );
    let _ = writeln!(
        out,
        "transistors (principled): {}",
        netlist.transistor_count(CostMode::Principled)
    );
    let _ = writeln!(out, "depth: {}", netlist.depth());
    if let BuiltCircuit::Multiplier(_, counts) = &built {
        let _ = writeln!(
            out,
            "blocks: {} mul1, tree {} FA + {} HA, cpa {} FA + {} HA, {} stages",
            counts.mul1,
            counts.tree_fa,
            counts.tree_ha,
            counts.cpa_fa,
            counts.cpa_ha,
            counts.stages
        );
        if let Some(p) = published_wallace_counts(netlist.radix(), word_width(&args.select)?) {
            let _ = writeln!(
                out,
                "published: tree {} FA + {} HA, with cpa {} FA + {} HA, {} stages",
                p.tree_fa, p.tree_ha, p.total_fa, p.total_ha, p.stages
            );
        }
    }
    Ok(out)
}

fn run_verification(args: &VerifyArgs) -> Result<VerificationResult> {
    let coverage = match args.samples {
        Some(count) => Coverage::Sampled {
            count,
            seed: args.seed,
        },
        None => Coverage::Exhaustive,
    };
    let select = &args.select;
    let result = match select.circuit {
        CircuitArg::Ripple => {
            verify_word_adder(&word_family(select)?, word_width(select)?, coverage)?
        }
        CircuitArg::Wallace => {
            verify_word_multiplier(&word_family(select)?, word_width(select)?, coverage)?
        }
        digit_circuit => {
            if args.samples.is_some() {
                bail!("single-digit circuits are verified exhaustively; drop --samples");
            }
            let (netlist, oracle) = match digit_circuit {
                CircuitArg::THa => (gen_ternary_half_adder(), DigitOracle::HalfAdder),
                CircuitArg::TFa => (
                    gen_ternary_full_adder(select.eqs.set()),
                    DigitOracle::FullAdder,
                ),
                CircuitArg::TMul1 => (gen_ternary_mul1(), DigitOracle::Mul1),
                CircuitArg::BHa => {
                    let variant = match select.variant {
                        VariantArg::Nand => BinaryHaVariant::Nand,
                        VariantArg::Xor => BinaryHaVariant::Xor,
                        VariantArg::Pass8t => bail!("b-ha variants are nand and xor"),
                    };
                    (gen_binary_half_adder(variant), DigitOracle::HalfAdder)
                }
                CircuitArg::BFa => (
                    gen_binary_full_adder(binary_fa_variant(select.variant)),
                    DigitOracle::FullAdder,
                ),
                CircuitArg::BMul1 => (gen_binary_mul1(), DigitOracle::Mul1),
                CircuitArg::Ripple | CircuitArg::Wallace => unreachable!(),
            };
            verify_exhaustive(&netlist, oracle)?
        }
    };
    Ok(result)
}

fn comparison_csv(report: &ComparisonReport) -> String {
    let mut out =
        String::from("label,ternary_count,binary_count,ratio,information_ratio,verdict\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.label,
            r.ternary_count,
            r.binary_count,
            fmt_sig(r.ratio, 4),
            fmt_sig(r.information_ratio, 4),
            r.verdict
        );
    }
    out
}

fn errata_csv(report: &[mvl::verify::ErrataEntry]) -> String {
    let mut out = String::from("id,location,printed_claim,computed_fact,evidence\n");
    for entry in report {
        let evidence = match &entry.evidence {
            Evidence::Verification(v) => format!(
                "verification {}: {} failures over {} cases",
                v.circuit_id, v.failures, v.checked
            ),
            Evidence::Numbers { printed, computed } => {
                format!("printed {printed} vs computed {computed}")
            }
        };
        let _ = writeln!(
            out,
            "{},{},\"{}\",\"{}\",\"{}\"",
            entry.id,
            entry.location,
            entry.printed_claim.replace('"', "'"),
            entry.computed_fact.replace('"', "'"),
            evidence.replace('"', "'")
        );
    }
    out
}
