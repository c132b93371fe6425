//! Wallace-tree multiplier generator.
//!
//! `width^2` one-digit multiplier blocks produce the partial products: for
//! each multiplier digit `j` a row of sum digits at columns `i + j` and (for
//! ternary cells) a row of binary-valued carries at columns `i + j + 1`.
//! The rows are then reduced in synchronous stages of classic Wallace row
//! grouping: rows are gathered into groups of three — for ternary, the two
//! oldest full-trit rows plus the oldest binary-valued row, so a ternary
//! full adder always receives its carry-in from the binary row — and within
//! a group each column maps three occupied cells to a full adder, two to a
//! half adder, one to a pass-through. Leftover rows carry to the next stage
//! unreduced. "Oldest" is creation order throughout, which makes the
//! schedule deterministic; for radix 2 every signal is binary-valued and the
//! procedure is exactly the classic 3:2 / 2:2 reduction. A ripple
//! carry-propagate adder folds the two residual rows into the product.
//!
//! Cells at columns `2*width` and above are provably zero (the product is
//! smaller than `radix^(2*width)`) and are dropped rather than summed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::circuits::CellFamily;
use crate::netlist::{Netlist, NetlistBuilder, NetlistError, SignalDomain, SignalId};

/// Block-level accounting of a generated multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockCounts {
    /// One-digit multiplier blocks (`width^2`).
    pub mul1: u64,
    /// Full/half adders inside the reduction tree.
    pub tree_fa: u64,
    pub tree_ha: u64,
    /// Full/half adders inside the final carry-propagate adder.
    pub cpa_fa: u64,
    pub cpa_ha: u64,
    /// Reduction stages (the CPA is not a stage).
    pub stages: u32,
}

impl BlockCounts {
    pub fn total_fa(&self) -> u64 {
        self.tree_fa + self.cpa_fa
    }

    pub fn total_ha(&self) -> u64 {
        self.tree_ha + self.cpa_ha
    }

    /// `mul1*c_mul1 + ha*c_ha + fa*c_fa` over tree plus CPA blocks.
    pub fn transistor_total(&self, unit: &UnitCosts) -> u64 {
        self.mul1 * unit.mul1 + self.total_ha() * unit.ha + self.total_fa() * unit.fa
    }
}

/// Per-block transistor costs used for word-level totals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnitCosts {
    pub mul1: u64,
    pub ha: u64,
    pub fa: u64,
}

/// The published per-block costs (catalog mode, Nand-style binary cells).
pub fn published_unit_costs(radix: u32) -> UnitCosts {
    match radix {
        2 => UnitCosts {
            mul1: 6,
            ha: 18,
            fa: 36,
        },
        3 => UnitCosts {
            mul1: 38,
            ha: 66,
            fa: 124,
        },
        _ => panic!("no published unit costs for radix {radix}"),
    }
}

/// Block counts read off the published Wallace-tree figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PublishedWallace {
    pub tree_fa: u64,
    pub tree_ha: u64,
    pub total_fa: u64,
    pub total_ha: u64,
    pub stages: u32,
}

/// Published figures exist for the 8x8 binary and 5x5 ternary multipliers.
pub fn published_wallace_counts(radix: u32, width: usize) -> Option<PublishedWallace> {
    match (radix, width) {
        (2, 8) => Some(PublishedWallace {
            tree_fa: 38,
            tree_ha: 15,
            total_fa: 47,
            total_ha: 17,
            stages: 4,
        }),
        (3, 5) => Some(PublishedWallace {
            tree_fa: 35,
            tree_ha: 7,
            total_fa: 38,
            total_ha: 8,
            stages: 5,
        }),
        _ => None,
    }
}

#[derive(Clone, Copy)]
struct Cell {
    sig: SignalId,
    binary: bool,
}

/// One partial-product row: column index to cell.
struct Row {
    cells: BTreeMap<usize, Cell>,
}

impl Row {
    fn is_binary(&self) -> bool {
        self.cells.values().all(|c| c.binary)
    }
}

pub fn gen_wallace_multiplier(
    family: &CellFamily,
    width: usize,
) -> Result<(Netlist, BlockCounts), NetlistError> {
    if width < 2 {
        return Err(NetlistError::BadWidth {
            width,
            reason: "multiplier needs at least two digits",
        });
    }
    let radix = family.radix();
    let digit_domain = if radix == 3 {
        SignalDomain::Trit
    } else {
        SignalDomain::BinaryRail
    };
    let mut b = NetlistBuilder::new(format!("wallace-r{radix}-w{width}-{}", family.tag()), radix);
    let a: Vec<_> = (0..width)
        .map(|i| b.input(&format!("a{i}"), digit_domain))
        .collect();
    let x: Vec<_> = (0..width)
        .map(|i| b.input(&format!("b{i}"), digit_domain))
        .collect();

    let mul1 = family.mul1();
    let ha = family.half_adder();
    let fa = family.full_adder();

    let is_binary = |b: &NetlistBuilder, sig: SignalId| -> bool {
        // Signals are binary-valued unless they live in the full trit domain.
        domain_of(b, sig) != SignalDomain::Trit
    };

    // Partial products, rows in creation order.
    let mut rows: Vec<Row> = Vec::new();
    let mut counts = BlockCounts {
        mul1: (width * width) as u64,
        tree_fa: 0,
        tree_ha: 0,
        cpa_fa: 0,
        cpa_ha: 0,
        stages: 0,
    };
    for (j, &xj) in x.iter().enumerate() {
        let mut sum_row = Row {
            cells: BTreeMap::new(),
        };
        let mut carry_row = Row {
            cells: BTreeMap::new(),
        };
        for (i, &ai) in a.iter().enumerate() {
            let outs = b.instantiate(&format!("m{i}_{j}"), &mul1, &[ai, xj])?;
            sum_row.cells.insert(
                i + j,
                Cell {
                    sig: outs[0],
                    binary: is_binary(&b, outs[0]),
                },
            );
            if family.mul1_has_carry() {
                carry_row.cells.insert(
                    i + j + 1,
                    Cell {
                        sig: outs[1],
                        binary: true,
                    },
                );
            }
        }
        rows.push(sum_row);
        if family.mul1_has_carry() {
            carry_row.cells.retain(|&col, _| col < 2 * width);
            rows.push(carry_row);
        }
    }

    while rows.len() > 2 {
        counts.stages += 1;
        rows = reduce_stage(&mut b, rows, &ha, &fa, radix, &mut counts, width)?;
    }

    let product = carry_propagate(&mut b, rows, &ha, &fa, &mut counts, width)?;
    for col in 0..2 * width {
        let cell = product
            .get(&col)
            .ok_or(NetlistError::ColumnGap { column: col })?;
        b.output(cell.sig);
    }
    let netlist = b.finish()?;
    Ok((netlist, counts))
}

fn domain_of(b: &NetlistBuilder, sig: SignalId) -> SignalDomain {
    b.peek_domain(sig)
}

/// One synchronous reduction stage over row groups.
fn reduce_stage(
    b: &mut NetlistBuilder,
    rows: Vec<Row>,
    ha: &Netlist,
    fa: &Netlist,
    radix: u32,
    counts: &mut BlockCounts,
    width: usize,
) -> Result<Vec<Row>, NetlistError> {
    let mut remaining: Vec<Option<Row>> = rows.into_iter().map(Some).collect();
    let mut groups: Vec<Vec<Row>> = Vec::new();
    loop {
        let trit: Vec<usize> = remaining
            .iter()
            .enumerate()
            .filter(|(_, r)| r.as_ref().is_some_and(|r| !r.is_binary()))
            .map(|(i, _)| i)
            .collect();
        let bin: Vec<usize> = remaining
            .iter()
            .enumerate()
            .filter(|(_, r)| r.as_ref().is_some_and(|r| r.is_binary()))
            .map(|(i, _)| i)
            .collect();
        let picks: Vec<usize> = if trit.len() >= 2 && !bin.is_empty() {
            vec![trit[0], trit[1], bin[0]]
        } else if trit.len() == 1 && bin.len() >= 2 {
            vec![trit[0], bin[0], bin[1]]
        } else if trit.is_empty() && bin.len() >= 3 {
            vec![bin[0], bin[1], bin[2]]
        } else if trit.len() >= 3 {
            // No binary rows to donate a carry-in: pair two trit rows with
            // half adders; their carry row is binary and unblocks the next
            // stage.
            vec![trit[0], trit[1]]
        } else {
            break;
        };
        let mut picked = Vec::with_capacity(picks.len());
        let mut sorted = picks.clone();
        sorted.sort_unstable();
        for idx in sorted {
            picked.push(remaining[idx].take().expect("row picked once"));
        }
        groups.push(picked);
    }

    let mut next = Vec::new();
    for group in groups {
        let (sums, carries) = reduce_group(b, &group, ha, fa, radix, counts, width)?;
        next.push(sums);
        if !carries.cells.is_empty() {
            next.push(carries);
        }
    }
    next.extend(remaining.into_iter().flatten());
    Ok(next)
}

fn reduce_group(
    b: &mut NetlistBuilder,
    group: &[Row],
    ha: &Netlist,
    fa: &Netlist,
    radix: u32,
    counts: &mut BlockCounts,
    width: usize,
) -> Result<(Row, Row), NetlistError> {
    let mut sums = Row {
        cells: BTreeMap::new(),
    };
    let mut carries = Row {
        cells: BTreeMap::new(),
    };
    let mut columns: Vec<usize> = group.iter().flat_map(|r| r.cells.keys().copied()).collect();
    columns.sort_unstable();
    columns.dedup();
    let sum_is_binary = radix == 2;
    for col in columns {
        let bits: Vec<Cell> = group
            .iter()
            .filter_map(|r| r.cells.get(&col).copied())
            .collect();
        match bits.len() {
            3 => {
                let (data, cin) = split_carry_in(&bits);
                let outs = b.instantiate(
                    &format!(
                        "t{}_c{col}_n{}",
                        counts.stages,
                        counts.tree_fa + counts.tree_ha
                    ),
                    fa,
                    &[data[0].sig, data[1].sig, cin.sig],
                )?;
                counts.tree_fa += 1;
                sums.cells.insert(
                    col,
                    Cell {
                        sig: outs[0],
                        binary: sum_is_binary,
                    },
                );
                if col + 1 < 2 * width {
                    carries.cells.insert(
                        col + 1,
                        Cell {
                            sig: outs[1],
                            binary: true,
                        },
                    );
                }
            }
            2 => {
                let outs = b.instantiate(
                    &format!(
                        "t{}_c{col}_n{}",
                        counts.stages,
                        counts.tree_fa + counts.tree_ha
                    ),
                    ha,
                    &[bits[0].sig, bits[1].sig],
                )?;
                counts.tree_ha += 1;
                sums.cells.insert(
                    col,
                    Cell {
                        sig: outs[0],
                        binary: sum_is_binary,
                    },
                );
                if col + 1 < 2 * width {
                    carries.cells.insert(
                        col + 1,
                        Cell {
                            sig: outs[1],
                            binary: true,
                        },
                    );
                }
            }
            1 => {
                sums.cells.insert(col, bits[0]);
            }
            n => unreachable!("group of three rows cannot stack {n} cells"),
        }
    }
    Ok((sums, carries))
}

/// Picks the carry-in for a full adder: the last binary-valued cell, so a
/// ternary adder never sees a full trit on its binary carry port.
fn split_carry_in(bits: &[Cell]) -> ([Cell; 2], Cell) {
    let cin_index = bits
        .iter()
        .rposition(|c| c.binary)
        .expect("grouping guarantees a binary-valued carry-in");
    let mut data = Vec::with_capacity(2);
    for (i, &cell) in bits.iter().enumerate() {
        if i != cin_index {
            data.push(cell);
        }
    }
    ([data[0], data[1]], bits[cin_index])
}

/// Ripple carry-propagate addition of the two residual rows.
fn carry_propagate(
    b: &mut NetlistBuilder,
    rows: Vec<Row>,
    ha: &Netlist,
    fa: &Netlist,
    counts: &mut BlockCounts,
    width: usize,
) -> Result<BTreeMap<usize, Cell>, NetlistError> {
    let mut product: BTreeMap<usize, Cell> = BTreeMap::new();
    let mut carry: Option<Cell> = None;
    for col in 0..2 * width {
        let mut bits: Vec<Cell> = rows
            .iter()
            .filter_map(|r| r.cells.get(&col).copied())
            .collect();
        if let Some(c) = carry.take() {
            bits.push(c);
        }
        match bits.len() {
            0 => continue,
            1 => {
                product.insert(col, bits[0]);
            }
            2 => {
                let outs =
                    b.instantiate(&format!("cpa_c{col}"), ha, &[bits[0].sig, bits[1].sig])?;
                counts.cpa_ha += 1;
                product.insert(
                    col,
                    Cell {
                        sig: outs[0],
                        binary: false,
                    },
                );
                carry = Some(Cell {
                    sig: outs[1],
                    binary: true,
                });
            }
            3 => {
                let (data, cin) = split_carry_in(&bits);
                let outs = b.instantiate(
                    &format!("cpa_c{col}"),
                    fa,
                    &[data[0].sig, data[1].sig, cin.sig],
                )?;
                counts.cpa_fa += 1;
                product.insert(
                    col,
                    Cell {
                        sig: outs[0],
                        binary: false,
                    },
                );
                carry = Some(Cell {
                    sig: outs[1],
                    binary: true,
                });
            }
            n => unreachable!("two residual rows cannot stack {n} cells"),
        }
    }
    // A carry out of column 2*width - 1 would be weight radix^(2*width),
    // beyond the maximum product; it is structurally zero and dropped.
    Ok(product)
}

/// Scheduler accounting next to the published targets, with every mismatch
/// spelled out (the generator's counts are reported, never adjusted to fit).
#[derive(Debug, Clone, Serialize)]
pub struct WallaceReport {
    pub radix: u32,
    pub width: usize,
    pub counts: BlockCounts,
    pub published: Option<PublishedWallace>,
    pub discrepancies: Vec<String>,
}

pub fn wallace_accounting(
    family: &CellFamily,
    width: usize,
) -> Result<WallaceReport, NetlistError> {
    let (_, counts) = gen_wallace_multiplier(family, width)?;
    let radix = family.radix();
    let published = published_wallace_counts(radix, width);
    let mut discrepancies = Vec::new();
    if let Some(p) = published {
        let checks = [
            ("tree FA", counts.tree_fa, p.tree_fa),
            ("tree HA", counts.tree_ha, p.tree_ha),
            ("tree+CPA FA", counts.total_fa(), p.total_fa),
            ("tree+CPA HA", counts.total_ha(), p.total_ha),
            ("stages", u64::from(counts.stages), u64::from(p.stages)),
        ];
        for (label, got, want) in checks {
            if got != want {
                discrepancies.push(format!(
                    "{label}: scheduler produced {got}, published figure reads {want}"
                ));
            }
        }
    }
    Ok(WallaceReport {
        radix,
        width,
        counts,
        published,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{BinaryFaVariant, EquationSet};
    use crate::digit::Word;
    use crate::netlist::CostMode;

    fn eval_mul(n: &Netlist, radix: u32, width: usize, x: u128, y: u128) -> u128 {
        let xw = Word::from_int(x, radix, width).unwrap();
        let yw = Word::from_int(y, radix, width).unwrap();
        let mut assignment: Vec<u8> = Vec::new();
        assignment.extend(xw.values().iter().map(|&v| v as u8));
        assignment.extend(yw.values().iter().map(|&v| v as u8));
        let out = n.evaluate(&assignment).unwrap();
        Word::from_values(
            &out.iter().map(|&v| u32::from(v)).collect::<Vec<_>>(),
            radix,
        )
        .unwrap()
        .to_u128()
        .unwrap()
    }

    #[test]
    fn binary_8x8_matches_published_accounting_exactly() {
        let family = CellFamily::Binary {
            fa: BinaryFaVariant::Nand,
        };
        let (netlist, counts) = gen_wallace_multiplier(&family, 8).unwrap();
        assert_eq!(counts.mul1, 64);
        assert_eq!(counts.tree_fa, 38);
        assert_eq!(counts.tree_ha, 15);
        assert_eq!(counts.total_fa(), 47);
        assert_eq!(counts.total_ha(), 17);
        assert_eq!(counts.stages, 4);
        let unit = published_unit_costs(2);
        assert_eq!(counts.transistor_total(&unit), 2382);
        // The generated netlist carries exactly those blocks.
        assert_eq!(netlist.transistor_count(CostMode::Catalog), 2382);
        let report = wallace_accounting(&family, 8).unwrap();
        assert!(report.discrepancies.is_empty());
    }

    #[test]
    fn ternary_5x5_accounting_reported_against_published() {
        let family = CellFamily::Ternary {
            eqs: EquationSet::Corrected,
        };
        let report = wallace_accounting(&family, 5).unwrap();
        assert_eq!(report.counts.mul1, 25);
        assert_eq!(report.counts.stages, 5);
        // Same total block count as the published figure; the schedule
        // trades one published FA for one HA. Reported, not hidden.
        assert_eq!(report.counts.total_fa() + report.counts.total_ha(), 38 + 8);
        let published = report.published.unwrap();
        assert_eq!(published.tree_fa, 35);
        assert_eq!(published.tree_ha, 7);
        for d in &report.discrepancies {
            assert!(d.contains("published"), "{d}");
        }
    }

    #[test]
    fn mul1_block_ratio_is_2_56() {
        // 8x8 bits needs 64 one-digit multipliers, 5x5 trits needs 25;
        // 64/25 = 2.56, close to the squared information ratio.
        let binary = CellFamily::Binary {
            fa: BinaryFaVariant::Nand,
        };
        let ternary = CellFamily::Ternary {
            eqs: EquationSet::Corrected,
        };
        let (_, b) = gen_wallace_multiplier(&binary, 8).unwrap();
        let (_, t) = gen_wallace_multiplier(&ternary, 5).unwrap();
        let ratio = b.mul1 as f64 / t.mul1 as f64;
        assert!((ratio - 2.56).abs() < 1e-12);
    }

    #[test]
    fn small_multipliers_are_exact() {
        let ternary = CellFamily::Ternary {
            eqs: EquationSet::Corrected,
        };
        let (n, _) = gen_wallace_multiplier(&ternary, 2).unwrap();
        for x in 0..9u128 {
            for y in 0..9u128 {
                assert_eq!(eval_mul(&n, 3, 2, x, y), x * y, "{x} * {y}");
            }
        }
        let binary = CellFamily::Binary {
            fa: BinaryFaVariant::Nand,
        };
        let (n, _) = gen_wallace_multiplier(&binary, 3).unwrap();
        for x in 0..8u128 {
            for y in 0..8u128 {
                assert_eq!(eval_mul(&n, 2, 3, x, y), x * y, "{x} * {y}");
            }
        }
    }

    #[test]
    fn five_trit_sample_product() {
        let ternary = CellFamily::Ternary {
            eqs: EquationSet::Corrected,
        };
        let (n, _) = gen_wallace_multiplier(&ternary, 5).unwrap();
        assert_eq!(eval_mul(&n, 3, 5, 242, 242), 58564);
    }

    #[test]
    fn width_one_is_rejected() {
        let family = CellFamily::Binary {
            fa: BinaryFaVariant::Nand,
        };
        assert!(matches!(
            gen_wallace_multiplier(&family, 1),
            Err(NetlistError::BadWidth { .. })
        ));
    }
}
