//! Generators for the reference circuits and the design-style catalog.

mod cells;
mod ripple;
mod styles;
mod wallace;

pub use cells::{
    gen_binary_full_adder, gen_binary_half_adder, gen_binary_mul1, gen_ternary_full_adder,
    gen_ternary_half_adder, gen_ternary_mul1, BinaryFaVariant, BinaryHaVariant,
};
pub use ripple::gen_ripple_adder;
pub use styles::{
    style, style_gate_cost, styles, CatalogError, CatalogGate, DesignStyle, GateCost, StyleName,
};
pub use wallace::{
    gen_wallace_multiplier, published_unit_costs, published_wallace_counts, wallace_accounting,
    BlockCounts, PublishedWallace, UnitCosts, WallaceReport,
};

use crate::netlist::Netlist;

/// Which set of full-adder equations to instantiate.
///
/// `Printed` reproduces the published Sum11/Cm1 forms verbatim (and fails
/// oracle verification at three of the eighteen input rows); `Corrected`
/// replaces them with brute-force-validated equations and is the default
/// everywhere arithmetic has to be right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EquationSet {
    Printed,
    #[default]
    Corrected,
}

impl EquationSet {
    pub fn tag(self) -> &'static str {
        match self {
            EquationSet::Printed => "printed",
            EquationSet::Corrected => "corrected",
        }
    }
}

/// The cell library a word-level generator composes: ternary cells under one
/// equation set, or binary cells of one implementation variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellFamily {
    Ternary { eqs: EquationSet },
    Binary { fa: BinaryFaVariant },
}

impl CellFamily {
    pub fn radix(&self) -> u32 {
        match self {
            CellFamily::Ternary { .. } => 3,
            CellFamily::Binary { .. } => 2,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CellFamily::Ternary { eqs } => eqs.tag(),
            CellFamily::Binary { fa } => fa.tag(),
        }
    }

    pub fn full_adder(&self) -> Netlist {
        match self {
            CellFamily::Ternary { eqs } => gen_ternary_full_adder(*eqs),
            CellFamily::Binary { fa } => gen_binary_full_adder(*fa),
        }
    }

    pub fn half_adder(&self) -> Netlist {
        match self {
            CellFamily::Ternary { .. } => gen_ternary_half_adder(),
            // The pass-transistor family has no half-adder cell; the XOR
            // half adder is its natural companion.
            CellFamily::Binary {
                fa: BinaryFaVariant::Nand,
            } => gen_binary_half_adder(BinaryHaVariant::Nand),
            CellFamily::Binary { .. } => gen_binary_half_adder(BinaryHaVariant::Xor),
        }
    }

    pub fn mul1(&self) -> Netlist {
        match self {
            CellFamily::Ternary { .. } => gen_ternary_mul1(),
            CellFamily::Binary { .. } => gen_binary_mul1(),
        }
    }

    /// Whether the one-digit multiplier produces a carry output (the binary
    /// one is a bare AND gate and does not).
    pub fn mul1_has_carry(&self) -> bool {
        matches!(self, CellFamily::Ternary { .. })
    }
}
