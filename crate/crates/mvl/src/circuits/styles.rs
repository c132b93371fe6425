//! Design-style catalog.
//!
//! Transistor counts for the three published CNTFET ternary implementation
//! styles, the standard binary baseline, and the quaternary inverter used in
//! the two-bits-per-wire comparison. Sequential elements are derived
//! formulas: a master-slave D flip-flop is four inverters plus four
//! transmission gates, a static RAM cell is a cross-coupled inverter pair
//! plus two access transistors.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("style `{style}` has no catalog entry for {gate}")]
    NotCataloged { style: &'static str, gate: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StyleName {
    /// Ternary style with an extra Vdd/2 power supply.
    Navi,
    /// Ternary style generating the middle level through a resistor divider
    /// (static current path).
    Lin,
    /// Three-transistor ternary inverter: extra supply plus an always-on
    /// transistor fighting the pull network.
    Nepal,
    /// Standard two-transistor-per-inverter binary CMOS.
    Binary,
    /// The 4-valued inverter used for the two-bit comparison.
    Quaternary,
}

impl StyleName {
    pub fn as_str(self) -> &'static str {
        match self {
            StyleName::Navi => "navi",
            StyleName::Lin => "lin",
            StyleName::Nepal => "nepal",
            StyleName::Binary => "binary",
            StyleName::Quaternary => "quaternary",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DesignStyle {
    pub name: StyleName,
    pub radix: u32,
    pub inverter_cost: u64,
    /// `(slope, intercept)`: an N-input Nand (or Nor, by duality) costs
    /// `slope * N + intercept`.
    pub nand_formula: Option<(u64, u64)>,
    /// Published 2-input Nand count. For `navi` the table value (16)
    /// disagrees with the style's own formula (6N = 12); both are kept.
    pub nand2_published: Option<u64>,
    pub supplies: u32,
    pub static_current: bool,
    pub notes: &'static str,
}

const CATALOG: [DesignStyle; 5] = [
    DesignStyle {
        name: StyleName::Navi,
        radix: 3,
        inverter_cost: 8,
        nand_formula: Some((6, 0)),
        nand2_published: Some(16),
        supplies: 2,
        static_current: false,
        notes: "middle level from an additional Vdd/2 supply",
    },
    DesignStyle {
        name: StyleName::Lin,
        radix: 3,
        inverter_cost: 6,
        nand_formula: Some((4, 2)),
        nand2_published: Some(10),
        supplies: 1,
        static_current: true,
        notes: "middle level from a resistor divider; dc current path",
    },
    DesignStyle {
        name: StyleName::Nepal,
        radix: 3,
        inverter_cost: 3,
        nand_formula: Some((2, 1)),
        nand2_published: Some(5),
        supplies: 2,
        static_current: true,
        notes: "3T inverter: extra supply and an always-on transistor",
    },
    DesignStyle {
        name: StyleName::Binary,
        radix: 2,
        inverter_cost: 2,
        nand_formula: Some((2, 0)),
        nand2_published: Some(4),
        supplies: 1,
        static_current: false,
        notes: "standard complementary binary gates",
    },
    DesignStyle {
        name: StyleName::Quaternary,
        radix: 4,
        inverter_cost: 10,
        nand_formula: None,
        nand2_published: None,
        supplies: 3,
        static_current: false,
        notes: "4-valued inverter; three voltage supplies",
    },
];

pub fn styles() -> &'static [DesignStyle; 5] {
    &CATALOG
}

pub fn style(name: StyleName) -> &'static DesignStyle {
    CATALOG
        .iter()
        .find(|s| s.name == name)
        .expect("catalog covers all styles")
}

/// A catalog-priced gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogGate {
    Inverter,
    NandN(u32),
    NorN(u32),
    Dff,
    SramCell,
}

impl std::fmt::Display for CatalogGate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogGate::Inverter => write!(f, "inverter"),
            CatalogGate::NandN(n) => write!(f, "nand{n}"),
            CatalogGate::NorN(n) => write!(f, "nor{n}"),
            CatalogGate::Dff => write!(f, "dff"),
            CatalogGate::SramCell => write!(f, "sram_cell"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GateCost {
    pub transistors: u64,
    /// Set when the value is derived from the style formulas but absent from
    /// the published tables (the navi SRAM cell).
    pub extrapolated: bool,
}

/// Transistor count of `gate` in `style`.
pub fn style_gate_cost(name: StyleName, gate: CatalogGate) -> Result<GateCost, CatalogError> {
    let style = style(name);
    let plain = |transistors| GateCost {
        transistors,
        extrapolated: false,
    };
    let missing = || CatalogError::NotCataloged {
        style: name.as_str(),
        gate: gate.to_string(),
    };
    match gate {
        CatalogGate::Inverter => Ok(plain(style.inverter_cost)),
        CatalogGate::NandN(n) | CatalogGate::NorN(n) => {
            let (slope, intercept) = style.nand_formula.ok_or_else(missing)?;
            Ok(plain(slope * u64::from(n) + intercept))
        }
        CatalogGate::Dff => {
            if name == StyleName::Quaternary {
                return Err(missing());
            }
            Ok(plain(4 * style.inverter_cost + 8))
        }
        CatalogGate::SramCell => {
            if name == StyleName::Quaternary {
                return Err(missing());
            }
            Ok(GateCost {
                transistors: 2 * style.inverter_cost + 2,
                extrapolated: name == StyleName::Navi,
            })
        }
    }
}
