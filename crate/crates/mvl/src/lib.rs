//! Multi-valued logic circuit workbench.
//!
//! The crate is organized around a small set of layers:
//!
//! * [`digit`] — radix-parametric digit algebra, little-endian words and the
//!   arithmetic oracles (half adder, full adder, one-digit multiplier) that
//!   every circuit is verified against.
//! * [`netlist`] — an acyclic gate-level IR with a deterministic evaluator,
//!   exhaustive truth-table extraction, transistor-count metrics and a
//!   gate-depth proxy for critical paths.
//! * [`circuits`] — generators for the ternary and binary reference circuits
//!   (adders, multipliers, Wallace trees) plus the design-style catalog of
//!   transistor-count formulas.
//! * [`costmodel`] — radix-economy cost curves, optimal-radix search and the
//!   ternary-versus-binary comparison reports.
//! * [`verify`] — oracle-based verification sweeps and the errata report that
//!   documents divergences between the published artifacts and brute force.

pub mod circuits;
pub mod costmodel;
pub mod digit;
pub mod netlist;
pub mod verify;
