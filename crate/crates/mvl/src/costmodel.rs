//! Radix-economy cost models and comparison reports.
//!
//! The classical cost function charges a number system `k * R * d` for
//! representing a range `N` with `d = ln N / ln R` digits of radix `R`; it
//! is minimized at `R = e`, the usual argument for ternary hardware. The
//! refined function multiplies in the `R - 1` threshold levels each digit
//! circuit must discriminate, which removes the interior minimum and makes
//! radix 2 optimal. Natural logarithms throughout; the base only rescales
//! `k`, so the published curve values are reproduced with `k = 1, ln N = 1`.

use serde::Serialize;
use thiserror::Error;

use crate::circuits::{self, CatalogGate, StyleName};
use crate::digit::{digits_for_bits, information_ratio, WidthPolicy};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CostError {
    #[error("radix {0} outside the model domain (must be > 1)")]
    RadixOutOfDomain(f64),
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("cost parameters must satisfy k > 0 and ln N > 0 (k = {k}, ln N = {ln_n})")]
    InvalidParams { k: f64, ln_n: f64 },
    #[error(transparent)]
    Catalog(#[from] circuits::CatalogError),
}

/// Parameters of the cost functions: the proportionality constant and the
/// represented range, kept as `ln N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostParams {
    pub k: f64,
    pub ln_n: f64,
}

impl CostParams {
    pub fn new(k: f64, ln_n: f64) -> Result<Self, CostError> {
        if !k.is_finite() || !ln_n.is_finite() || k <= 0.0 || ln_n <= 0.0 {
            return Err(CostError::InvalidParams { k, ln_n });
        }
        Ok(CostParams { k, ln_n })
    }

    /// Parameters for a concrete range `n > 1`.
    pub fn for_range(k: f64, n: f64) -> Result<Self, CostError> {
        Self::new(k, n.ln())
    }
}

impl Default for CostParams {
    fn default() -> Self {
        CostParams { k: 1.0, ln_n: 1.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CostModel {
    Hurst,
    Refined,
}

impl CostModel {
    pub fn cost(self, radix: f64, params: &CostParams) -> Result<f64, CostError> {
        match self {
            CostModel::Hurst => hurst_cost(radix, params),
            CostModel::Refined => refined_cost(radix, params),
        }
    }
}

/// `k * R * ln N / ln R` — digit capacity cost.
pub fn hurst_cost(radix: f64, params: &CostParams) -> Result<f64, CostError> {
    if !radix.is_finite() || radix <= 1.0 {
        return Err(CostError::RadixOutOfDomain(radix));
    }
    Ok(params.k * radix * params.ln_n / radix.ln())
}

/// `k * R * (R - 1) * ln N / ln R` — digit capacity weighted by threshold
/// levels.
pub fn refined_cost(radix: f64, params: &CostParams) -> Result<f64, CostError> {
    if !radix.is_finite() || radix <= 1.0 {
        return Err(CostError::RadixOutOfDomain(radix));
    }
    Ok(params.k * radix * (radix - 1.0) * params.ln_n / radix.ln())
}

/// Minimizes the model on `[lo, hi]` by golden-section search to an absolute
/// radix tolerance of 1e-6 and returns `(radix, cost)`. Boundary minimizers
/// are returned exactly.
pub fn optimal_radix(
    model: CostModel,
    lo: f64,
    hi: f64,
    params: &CostParams,
) -> Result<(f64, f64), CostError> {
    if !lo.is_finite() || !hi.is_finite() || lo <= 1.0 || hi <= lo {
        return Err(CostError::InvalidInterval { lo, hi });
    }
    let f = |r: f64| {
        model
            .cost(r, params)
            .expect("radix inside validated interval")
    };
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > 1e-6 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    let interior = 0.5 * (a + b);
    let mut best = (interior, f(interior));
    for boundary in [hi, lo] {
        let cost = f(boundary);
        if cost <= best.1 {
            best = (boundary, cost);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadixCurvePoint {
    pub radix: f64,
    pub cost: f64,
}

/// Pointwise model evaluation, preserving input order.
pub fn radix_sweep(
    model: CostModel,
    radices: &[f64],
    params: &CostParams,
) -> Result<Vec<RadixCurvePoint>, CostError> {
    radices
        .iter()
        .map(|&radix| {
            Ok(RadixCurvePoint {
                radix,
                cost: model.cost(radix, params)?,
            })
        })
        .collect()
}

/// Comparison subjects; word-level subjects take widths from
/// [`CompareOptions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    Inverter,
    Nand,
    Ha,
    Fa,
    Mul1,
    Dff,
    Sram,
    AdderWord,
    MultiplierWord,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CompareOptions {
    /// Binary word width; the trit width defaults to the published wire
    /// table for that width.
    pub bits: Option<u32>,
    pub trits: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonRow {
    pub label: String,
    pub ternary_count: u64,
    pub binary_count: u64,
    pub ratio: f64,
    pub information_ratio: f64,
    pub verdict: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub subject: Subject,
    pub rows: Vec<ComparisonRow>,
}

fn row(label: impl Into<String>, ternary: u64, binary: u64, info_ratio: f64) -> ComparisonRow {
    let ratio = ternary as f64 / binary as f64;
    ComparisonRow {
        label: label.into(),
        ternary_count: ternary,
        binary_count: binary,
        ratio,
        information_ratio: info_ratio,
        verdict: if ratio <= info_ratio {
            "ternary_viable"
        } else {
            "not_viable"
        },
    }
}

/// Assembles the published ternary-versus-binary comparison for a subject.
///
/// Ratios are judged against ln 3 / ln 2 (the quaternary inverter row uses
/// ln 4 / ln 2 = 2). The word-level multiplier subject reconstructs the
/// published 8x8-bit-versus-5x5-trit table from its unit costs and block
/// counts.
pub fn comparison_report(
    subject: Subject,
    options: &CompareOptions,
) -> Result<ComparisonReport, CostError> {
    let ir = information_ratio(3, 2);
    let styled = |gate: CatalogGate| -> Result<Vec<ComparisonRow>, CostError> {
        let binary = circuits::style_gate_cost(StyleName::Binary, gate)?.transistors;
        let mut rows = Vec::new();
        for name in [StyleName::Navi, StyleName::Lin, StyleName::Nepal] {
            match circuits::style_gate_cost(name, gate) {
                Ok(cost) => rows.push(row(name.as_str(), cost.transistors, binary, ir)),
                Err(circuits::CatalogError::NotCataloged { .. }) => {}
            }
        }
        Ok(rows)
    };

    let rows = match subject {
        Subject::Inverter => {
            let mut rows = styled(CatalogGate::Inverter)?;
            // One 4-valued inverter versus the two binary inverters that
            // carry the same two bits.
            rows.push(row(
                "quaternary",
                circuits::style(StyleName::Quaternary).inverter_cost,
                2 * circuits::style(StyleName::Binary).inverter_cost,
                information_ratio(4, 2),
            ));
            rows
        }
        Subject::Nand => {
            // Published table values, including the navi 16 that disagrees
            // with the style's own formula (see the errata report).
            let binary = 4;
            [StyleName::Navi, StyleName::Lin, StyleName::Nepal]
                .iter()
                .map(|&name| {
                    let published = circuits::style(name)
                        .nand2_published
                        .expect("ternary styles publish a 2-input value");
                    row(name.as_str(), published, binary, ir)
                })
                .collect()
        }
        Subject::Dff => styled(CatalogGate::Dff)?,
        Subject::Sram => {
            // The published SRAM table covers lin and nepal only.
            let binary =
                circuits::style_gate_cost(StyleName::Binary, CatalogGate::SramCell)?.transistors;
            [StyleName::Lin, StyleName::Nepal]
                .iter()
                .map(|&name| {
                    let cost =
                        circuits::style_gate_cost(name, CatalogGate::SramCell).expect("cataloged");
                    row(name.as_str(), cost.transistors, binary, ir)
                })
                .collect()
        }
        Subject::Ha => vec![row("vs-nand-ha", 66, 18, ir), row("vs-xor-ha", 66, 9, ir)],
        Subject::Fa => vec![
            row("vs-nand-fa", 124, 36, ir),
            row("vs-xor-fa", 124, 18, ir),
            row("vs-pass8t-fa", 124, 8, ir),
        ],
        Subject::Mul1 => vec![row("one-digit-multiplier", 38, 6, ir)],
        Subject::AdderWord => {
            let bits = options.bits.unwrap_or(64);
            let trits = options
                .trits
                .unwrap_or_else(|| digits_for_bits(bits, WidthPolicy::PublishedTable));
            vec![
                row("fa-unit", 124, 36, ir),
                row(
                    format!("{trits}-trit-vs-{bits}-bit"),
                    u64::from(trits) * 124,
                    u64::from(bits) * 36,
                    ir,
                ),
            ]
        }
        Subject::MultiplierWord => {
            let bits = options.bits.unwrap_or(8);
            let trits = options
                .trits
                .unwrap_or_else(|| digits_for_bits(bits, WidthPolicy::PublishedTable));
            if (bits, trits) == (8, 5) {
                // The published table: unit costs times published block
                // counts (binary 64/17/47, ternary 25/8/38).
                vec![
                    row("mul1-unit", 38, 6, ir),
                    row("ha-unit", 66, 18, ir),
                    row("fa-unit", 124, 36, ir),
                    row("mul1-blocks", 25 * 38, 64 * 6, ir),
                    row("ha-blocks", 8 * 66, 17 * 18, ir),
                    row("fa-blocks", 38 * 124, 47 * 36, ir),
                    row("total", 6190, 2382, ir),
                ]
            } else {
                // Off-table widths: compose from the generated schedulers.
                let t = circuits::wallace_accounting(
                    &circuits::CellFamily::Ternary {
                        eqs: circuits::EquationSet::Corrected,
                    },
                    trits as usize,
                )
                .map_err(|_| CostError::InvalidInterval {
                    lo: f64::from(trits),
                    hi: f64::from(bits),
                })?;
                let b = circuits::wallace_accounting(
                    &circuits::CellFamily::Binary {
                        fa: circuits::BinaryFaVariant::Nand,
                    },
                    bits as usize,
                )
                .map_err(|_| CostError::InvalidInterval {
                    lo: f64::from(trits),
                    hi: f64::from(bits),
                })?;
                vec![row(
                    format!("{trits}x{trits}-trit-vs-{bits}x{bits}-bit"),
                    t.counts
                        .transistor_total(&circuits::published_unit_costs(3)),
                    b.counts
                        .transistor_total(&circuits::published_unit_costs(2)),
                    ir,
                )]
            }
        }
    };
    Ok(ComparisonReport { subject, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: f64 = std::f64::consts::E;

    fn p() -> CostParams {
        CostParams::default()
    }

    // 2.718 below is the published curve value, not a stand-in for e.
    #[allow(clippy::approx_constant)]
    #[test]
    fn hurst_curve_published_values() {
        assert!((hurst_cost(2.0, &p()).unwrap() - 2.885).abs() < 1e-3);
        assert!((hurst_cost(E, &p()).unwrap() - 2.718).abs() < 1e-3);
        assert!((hurst_cost(4.0, &p()).unwrap() - 2.885).abs() < 1e-3);
        // Exact identity 2/ln 2 = 4/ln 4 to machine precision.
        let c2 = hurst_cost(2.0, &p()).unwrap();
        let c4 = hurst_cost(4.0, &p()).unwrap();
        assert!((c2 - c4).abs() <= 1e-15 * c2);
    }

    #[test]
    fn refined_curve_values() {
        assert!((refined_cost(2.0, &p()).unwrap() - 2.885).abs() < 1e-3);
        assert!((refined_cost(3.0, &p()).unwrap() - 5.46).abs() < 1e-2);
        assert!((refined_cost(16.0, &p()).unwrap() - 86.56).abs() < 5e-2);
        assert!(matches!(
            refined_cost(1.0, &p()),
            Err(CostError::RadixOutOfDomain(_))
        ));
    }

    #[test]
    fn refined_is_hurst_times_levels() {
        let mut r = 2.0;
        while r <= 16.0 {
            let h = hurst_cost(r, &p()).unwrap();
            let f = refined_cost(r, &p()).unwrap();
            assert!((f / h - (r - 1.0)).abs() < 1e-12, "r = {r}");
            r += 0.37;
        }
    }

    #[test]
    fn scale_equivariance_and_argmin_invariance() {
        let scaled = CostParams::new(3.5, 2.0).unwrap();
        for r in [2.0, 2.5, 3.0, 7.0] {
            let base = hurst_cost(r, &p()).unwrap();
            assert!((hurst_cost(r, &scaled).unwrap() - 3.5 * 2.0 * base).abs() < 1e-12);
        }
        let (r1, _) = optimal_radix(CostModel::Hurst, 2.0, 16.0, &p()).unwrap();
        let (r2, _) = optimal_radix(CostModel::Hurst, 2.0, 16.0, &scaled).unwrap();
        assert!((r1 - r2).abs() < 1e-6);
    }

    #[test]
    fn optimal_radix_results() {
        let (r, c) = optimal_radix(CostModel::Hurst, 2.0, 16.0, &p()).unwrap();
        assert!((r - E).abs() < 1e-4);
        assert!((c - E).abs() < 1e-6);
        // Monotone restriction: boundary minimizer, returned exactly.
        let (r, _) = optimal_radix(CostModel::Hurst, 3.0, 16.0, &p()).unwrap();
        assert_eq!(r, 3.0);
        let (r, _) = optimal_radix(CostModel::Refined, 2.0, 16.0, &p()).unwrap();
        assert_eq!(r, 2.0);
        assert!(matches!(
            optimal_radix(CostModel::Hurst, 2.0, 1.0, &p()),
            Err(CostError::InvalidInterval { .. })
        ));
    }

    #[test]
    fn sweep_and_relative_gap() {
        let points = radix_sweep(CostModel::Hurst, &[2.0, 3.0, 4.0], &p()).unwrap();
        assert!((points[0].cost - 2.885).abs() < 1e-3);
        assert!((points[1].cost - 2.731).abs() < 1e-3);
        assert!((points[2].cost - 2.885).abs() < 1e-3);
        let gap = (points[0].cost - points[1].cost) / points[1].cost;
        assert!((gap * 100.0 - 5.66).abs() < 0.05);
    }

    #[test]
    fn refined_strictly_increasing_on_grid() {
        let mut previous = refined_cost(2.0, &p()).unwrap();
        let mut step = 1;
        while step <= 1400 {
            let r = 2.0 + f64::from(step) * 0.01;
            let cost = refined_cost(r, &p()).unwrap();
            assert!(cost > previous, "not increasing at r = {r}");
            previous = cost;
            step += 1;
        }
    }

    #[test]
    fn comparison_verdicts_match_published_exceptions() {
        // The only viable rows across the whole catalog are the nepal
        // inverter, nand, dff and sram.
        let mut viable = Vec::new();
        for subject in [
            Subject::Inverter,
            Subject::Nand,
            Subject::Ha,
            Subject::Fa,
            Subject::Mul1,
            Subject::Dff,
            Subject::Sram,
        ] {
            let report = comparison_report(subject, &CompareOptions::default()).unwrap();
            for r in report.rows {
                if r.verdict == "ternary_viable" {
                    viable.push((subject, r.label.clone(), r.ratio));
                }
            }
        }
        assert_eq!(viable.len(), 4);
        for (subject, label, ratio) in &viable {
            assert_eq!(label, "nepal", "{subject:?}");
            assert!(*ratio <= 1.585);
        }
    }

    #[test]
    fn inverter_report_rows() {
        let report = comparison_report(Subject::Inverter, &CompareOptions::default()).unwrap();
        let ratios: Vec<f64> = report.rows.iter().map(|r| r.ratio).collect();
        assert_eq!(ratios, vec![4.0, 3.0, 1.5, 2.5]);
        let quaternary = report.rows.last().unwrap();
        assert_eq!(quaternary.ternary_count, 10);
        assert_eq!(quaternary.binary_count, 4);
        assert!((quaternary.information_ratio - 2.0).abs() < 1e-12);
        assert_eq!(quaternary.verdict, "not_viable");
    }

    #[test]
    fn multiplier_word_reconstructs_published_table() {
        let report =
            comparison_report(Subject::MultiplierWord, &CompareOptions::default()).unwrap();
        let total = report.rows.last().unwrap();
        assert_eq!(total.ternary_count, 6190);
        assert_eq!(total.binary_count, 2382);
        assert!((total.ratio - 2.60).abs() < 0.01);
        let by_label = |label: &str| {
            report
                .rows
                .iter()
                .find(|r| r.label == label)
                .unwrap_or_else(|| panic!("row {label}"))
        };
        assert_eq!(by_label("mul1-blocks").ternary_count, 950);
        assert_eq!(by_label("mul1-blocks").binary_count, 384);
        assert_eq!(by_label("ha-blocks").ternary_count, 528);
        assert_eq!(by_label("ha-blocks").binary_count, 306);
        assert_eq!(by_label("fa-blocks").ternary_count, 4712);
        assert_eq!(by_label("fa-blocks").binary_count, 1692);
    }
}
