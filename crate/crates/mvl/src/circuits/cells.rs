//! Single-digit circuit generators.
//!
//! The ternary cells follow the decode / binary-logic / encode scheme: each
//! trit input is threshold-decoded into four rails, static complex gates
//! compute active-low "digit equals 1" / "digit equals 2" indicators, and
//! encoders fold those back into a trit (sums) or a binary-valued trit
//! (carries). Complex-gate outputs are active-low, so the full adder's
//! multiplexers select among active-low branches directly and no extra
//! inverters are needed.

use crate::circuits::EquationSet;
use crate::netlist::{DecodedRails, Netlist, NetlistBuilder, SignalDomain};

/// Ternary half adder: two decoders, Sum1/Sum2/Cm complex gates, sum and
/// carry encoders. Catalog and principled cost are both 66.
pub fn gen_ternary_half_adder() -> Netlist {
    let mut b = NetlistBuilder::new("t-ha", 3);
    let a = b.input("a", SignalDomain::Trit);
    let bb = b.input("b", SignalDomain::Trit);
    let ra = b.decoder(a, "a");
    let rb = b.decoder(bb, "b");

    let sum1_bar = sum1_gate(&mut b, "sum1n", &ra, &rb);
    let sum2_bar = sum2_gate(&mut b, "sum2n", &ra, &rb);
    let cm = cm0_gate(&mut b, "cm", &ra, &rb);

    let sum = b.sum_encoder("s", sum1_bar, sum2_bar);
    let carry = b.carry_encoder("cout", cm);
    b.output(sum);
    b.output(carry);
    b.finish().expect("half adder is well formed")
}

/// Ternary full adder.
///
/// The half-adder core computes the cin=0 indicators; one extra complex gate
/// per output handles cin=1 (Sum21 reuses Sum10 because the two functions
/// coincide), and three multiplexers select by the carry-in. `eqs` picks the
/// published or the corrected Sum11/Cm1 equations; only the corrected
/// variant matches the full-adder truth table.
pub fn gen_ternary_full_adder(eqs: EquationSet) -> Netlist {
    let mut b = NetlistBuilder::new(format!("t-fa-{}", eqs.tag()), 3);
    let a = b.input("a", SignalDomain::Trit);
    let bb = b.input("b", SignalDomain::Trit);
    let cin = b.input("cin", SignalDomain::BinaryValuedTrit);
    let ra = b.decoder(a, "a");
    let rb = b.decoder(bb, "b");

    let sum10_bar = sum1_gate(&mut b, "sum10n", &ra, &rb);
    let sum20_bar = sum2_gate(&mut b, "sum20n", &ra, &rb);
    let cm0 = cm0_gate(&mut b, "cm0", &ra, &rb);

    let sum11_bar = match eqs {
        // Published: Sum11 = A0'.B0' + A1'.A0.B1 + A1.B1' + A1.B1'.B0
        // (the bare A1.B1' term also fires at (a,b) = (2,0)).
        EquationSet::Printed => b.complex_sop(
            "sum11n",
            &[
                &[ra.a0_bar, rb.a0_bar],
                &[ra.a1_bar, ra.a0, rb.a1],
                &[ra.a1, rb.a1_bar],
                &[ra.a1, rb.a1_bar, rb.a0],
            ],
            true,
        ),
        // Corrected: Sum11 = A0'.B0' + A1'.A0.B1 + A1.B1'.B0
        EquationSet::Corrected => b.complex_sop(
            "sum11n",
            &[
                &[ra.a0_bar, rb.a0_bar],
                &[ra.a1_bar, ra.a0, rb.a1],
                &[ra.a1, rb.a1_bar, rb.a0],
            ],
            true,
        ),
    };
    let cm1 = match eqs {
        // Published: Cm1 = A1 + B1 + A1'.A0 + B1'.B0 (asserts a carry on the
        // a + b = 1 rows).
        EquationSet::Printed => b.complex_sop(
            "cm1",
            &[&[ra.a1], &[rb.a1], &[ra.a1_bar, ra.a0], &[rb.a1_bar, rb.a0]],
            false,
        ),
        // Corrected: Cm1 = A1 + B1 + A0.B0.
        EquationSet::Corrected => {
            b.complex_sop("cm1", &[&[ra.a1], &[rb.a1], &[ra.a0, rb.a0]], false)
        }
    };

    // The multiplexers select on the inverted carry-in: select high means
    // cin = 0, so the cin = 0 branch rides the data1 port.
    let cin_bar = b.inverter(cin);
    let sum1_bar = b.mux2("sum1n", cin_bar, sum11_bar, sum10_bar);
    let sum2_bar = b.mux2("sum2n", cin_bar, sum10_bar, sum20_bar);
    let cm = b.mux2("cm", cin_bar, cm1, cm0);

    let sum = b.sum_encoder("s", sum1_bar, sum2_bar);
    let carry = b.carry_encoder("cout", cm);
    b.output(sum);
    b.output(carry);
    b.finish().expect("full adder is well formed")
}

/// One-trit multiplier.
///
/// The published accounting prices the decode stage at 4 transistors for
/// both inputs, inconsistent with the adder accounting (8 per decoder);
/// catalog mode keeps the published total (38) through cost overrides on the
/// decoder pair, principled mode reports 50. The carry path is the bare
/// two-literal product A1.B1 emitted directly as the binary-valued carry,
/// matching the 4 transistors the published total allots to it.
pub fn gen_ternary_mul1() -> Netlist {
    let mut b = NetlistBuilder::new("t-mul1", 3);
    let a = b.input("a", SignalDomain::Trit);
    let bb = b.input("b", SignalDomain::Trit);
    let ra = b.decoder_with_cost(a, "a", 2);
    let rb = b.decoder_with_cost(bb, "b", 2);

    // S1 = A1.B1 + B1'.B0.A1'.A0 ; S2 = A1.B1'.B0 + B1.A1'.A0
    let s1_bar = b.complex_sop(
        "s1n",
        &[&[ra.a1, rb.a1], &[rb.a1_bar, rb.a0, ra.a1_bar, ra.a0]],
        true,
    );
    let s2_bar = b.complex_sop(
        "s2n",
        &[&[ra.a1, rb.a1_bar, rb.a0], &[rb.a1, ra.a1_bar, ra.a0]],
        true,
    );
    let cout = b.complex_sop("cout", &[&[ra.a1, rb.a1]], false);

    let sum = b.sum_encoder("s", s1_bar, s2_bar);
    b.output(sum);
    b.output(cout);
    b.finish().expect("one-trit multiplier is well formed")
}

fn sum1_gate(
    b: &mut NetlistBuilder,
    name: &str,
    ra: &DecodedRails,
    rb: &DecodedRails,
) -> crate::netlist::SignalId {
    // Sum1 = A0'.B1'.B0 + A1'.A0.B0' + A1.B1
    b.complex_sop(
        name,
        &[
            &[ra.a0_bar, rb.a1_bar, rb.a0],
            &[ra.a1_bar, ra.a0, rb.a0_bar],
            &[ra.a1, rb.a1],
        ],
        true,
    )
}

fn sum2_gate(
    b: &mut NetlistBuilder,
    name: &str,
    ra: &DecodedRails,
    rb: &DecodedRails,
) -> crate::netlist::SignalId {
    // Sum2 = A0'.B1 + A1'.A0.B1'.B0 + A1.B0'
    b.complex_sop(
        name,
        &[
            &[ra.a0_bar, rb.a1],
            &[ra.a1_bar, ra.a0, rb.a1_bar, rb.a0],
            &[ra.a1, rb.a0_bar],
        ],
        true,
    )
}

fn cm0_gate(
    b: &mut NetlistBuilder,
    name: &str,
    ra: &DecodedRails,
    rb: &DecodedRails,
) -> crate::netlist::SignalId {
    // Cm = B1.A0 + A1.B0
    b.complex_sop(name, &[&[rb.a1, ra.a0], &[ra.a1, rb.a0]], false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryHaVariant {
    /// Four 2-input Nands plus an inverter (18 transistors).
    Nand,
    /// Pass-transistor XOR plus an AND gate (9 transistors).
    Xor,
}

impl BinaryHaVariant {
    pub fn tag(self) -> &'static str {
        match self {
            BinaryHaVariant::Nand => "nand",
            BinaryHaVariant::Xor => "xor",
        }
    }
}

pub fn gen_binary_half_adder(variant: BinaryHaVariant) -> Netlist {
    let mut b = NetlistBuilder::new(format!("b-ha-{}", variant.tag()), 2);
    let a = b.input("a", SignalDomain::BinaryRail);
    let x = b.input("b", SignalDomain::BinaryRail);
    let (sum, carry) = match variant {
        BinaryHaVariant::Nand => {
            let g1 = b.nand(&[a, x]);
            let g2 = b.nand(&[a, g1]);
            let g3 = b.nand(&[x, g1]);
            let sum = b.nand(&[g2, g3]);
            let carry = b.inverter(g1);
            (sum, carry)
        }
        BinaryHaVariant::Xor => {
            let sum = b.xor3t(a, x);
            let carry = b.and2(a, x);
            (sum, carry)
        }
    };
    b.output(sum);
    b.output(carry);
    b.finish().expect("binary half adder is well formed")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryFaVariant {
    /// Nine 2-input Nands (36 transistors, six-gate sum path).
    Nand,
    /// Two pass-transistor XORs and three Nands (18 transistors).
    Xor,
    /// Single pass-transistor cell (8 transistors).
    Pass8t,
}

impl BinaryFaVariant {
    pub fn tag(self) -> &'static str {
        match self {
            BinaryFaVariant::Nand => "nand",
            BinaryFaVariant::Xor => "xor",
            BinaryFaVariant::Pass8t => "pass8t",
        }
    }
}

pub fn gen_binary_full_adder(variant: BinaryFaVariant) -> Netlist {
    let mut b = NetlistBuilder::new(format!("b-fa-{}", variant.tag()), 2);
    let a = b.input("a", SignalDomain::BinaryRail);
    let x = b.input("b", SignalDomain::BinaryRail);
    let cin = b.input("cin", SignalDomain::BinaryRail);
    let (sum, carry) = match variant {
        BinaryFaVariant::Nand => {
            // Two cascaded 4-Nand XOR stages sharing g1/g5 with the carry:
            // cout = nand(nand(a,b), nand(a^b, cin)).
            let g1 = b.nand(&[a, x]);
            let g2 = b.nand(&[a, g1]);
            let g3 = b.nand(&[x, g1]);
            let g4 = b.nand(&[g2, g3]);
            let g5 = b.nand(&[g4, cin]);
            let g6 = b.nand(&[g4, g5]);
            let g7 = b.nand(&[cin, g5]);
            let sum = b.nand(&[g6, g7]);
            let carry = b.nand(&[g1, g5]);
            (sum, carry)
        }
        BinaryFaVariant::Xor => {
            let x1 = b.xor3t(a, x);
            let sum = b.xor3t(x1, cin);
            let n1 = b.nand(&[a, x]);
            let n2 = b.nand(&[x1, cin]);
            let carry = b.nand(&[n1, n2]);
            (sum, carry)
        }
        BinaryFaVariant::Pass8t => b.pass_full_adder(a, x, cin),
    };
    b.output(sum);
    b.output(carry);
    b.finish().expect("binary full adder is well formed")
}

/// Binary one-bit multiplier: a single AND gate (6 transistors, one output).
pub fn gen_binary_mul1() -> Netlist {
    let mut b = NetlistBuilder::new("b-mul1", 2);
    let a = b.input("a", SignalDomain::BinaryRail);
    let x = b.input("b", SignalDomain::BinaryRail);
    let p = b.and2(a, x);
    b.output(p);
    b.finish().expect("binary multiplier is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit::{fa_oracle, ha_oracle, mul1_oracle, Digit};
    use crate::netlist::CostMode;

    fn d(v: u8, r: u32) -> Digit {
        Digit::new(u32::from(v), r).unwrap()
    }

    #[test]
    fn ternary_half_adder_matches_oracle_and_costs() {
        let n = gen_ternary_half_adder();
        assert_eq!(n.transistor_count(CostMode::Catalog), 66);
        assert_eq!(n.transistor_count(CostMode::Principled), 66);
        let table = n.exhaustive_table().unwrap();
        assert_eq!(table.rows.len(), 9);
        for row in &table.rows {
            let (s, c) = ha_oracle(d(row.inputs[0], 3), d(row.inputs[1], 3)).unwrap();
            assert_eq!(row.outputs, vec![s.value() as u8, c.value() as u8]);
        }
    }

    #[test]
    fn ternary_full_adder_corrected_matches_oracle() {
        let n = gen_ternary_full_adder(EquationSet::Corrected);
        assert_eq!(n.transistor_count(CostMode::Catalog), 116);
        assert_eq!(n.transistor_count(CostMode::Principled), 116);
        let table = n.exhaustive_table().unwrap();
        assert_eq!(table.rows.len(), 18);
        for row in &table.rows {
            let (s, c) = fa_oracle(
                d(row.inputs[0], 3),
                d(row.inputs[1], 3),
                d(row.inputs[2], 3),
            )
            .unwrap();
            assert_eq!(
                row.outputs,
                vec![s.value() as u8, c.value() as u8],
                "inputs {:?}",
                row.inputs
            );
        }
    }

    #[test]
    fn ternary_full_adder_printed_costs_124_and_diverges() {
        let n = gen_ternary_full_adder(EquationSet::Printed);
        assert_eq!(n.transistor_count(CostMode::Catalog), 124);
        assert_eq!(n.transistor_count(CostMode::Principled), 124);
        let table = n.exhaustive_table().unwrap();
        let mut bad_sum = Vec::new();
        let mut bad_carry = Vec::new();
        for row in &table.rows {
            let (s, c) = fa_oracle(
                d(row.inputs[0], 3),
                d(row.inputs[1], 3),
                d(row.inputs[2], 3),
            )
            .unwrap();
            if row.outputs[0] != s.value() as u8 {
                bad_sum.push(row.inputs.clone());
            }
            if row.outputs[1] != c.value() as u8 {
                bad_carry.push(row.inputs.clone());
            }
        }
        assert_eq!(bad_sum, vec![vec![2, 0, 1]]);
        assert_eq!(bad_carry, vec![vec![0, 1, 1], vec![1, 0, 1]]);
    }

    #[test]
    fn ternary_mul1_matches_oracle_and_costs() {
        let n = gen_ternary_mul1();
        assert_eq!(n.transistor_count(CostMode::Catalog), 38);
        assert_eq!(n.transistor_count(CostMode::Principled), 50);
        let table = n.exhaustive_table().unwrap();
        assert_eq!(table.rows.len(), 9);
        for row in &table.rows {
            let (s, c) = mul1_oracle(d(row.inputs[0], 3), d(row.inputs[1], 3)).unwrap();
            assert_eq!(row.outputs, vec![s.value() as u8, c.value() as u8]);
        }
    }

    #[test]
    fn binary_half_adders() {
        let nand = gen_binary_half_adder(BinaryHaVariant::Nand);
        assert_eq!(nand.transistor_count(CostMode::Catalog), 18);
        let xor = gen_binary_half_adder(BinaryHaVariant::Xor);
        assert_eq!(xor.transistor_count(CostMode::Catalog), 9);
        for n in [nand, xor] {
            let table = n.exhaustive_table().unwrap();
            assert_eq!(table.rows.len(), 4);
            for row in &table.rows {
                let (s, c) = ha_oracle(d(row.inputs[0], 2), d(row.inputs[1], 2)).unwrap();
                assert_eq!(row.outputs, vec![s.value() as u8, c.value() as u8]);
            }
        }
    }

    #[test]
    fn binary_full_adders() {
        let nand = gen_binary_full_adder(BinaryFaVariant::Nand);
        assert_eq!(nand.transistor_count(CostMode::Catalog), 36);
        assert_eq!(nand.depth(), 6);
        let xor = gen_binary_full_adder(BinaryFaVariant::Xor);
        assert_eq!(xor.transistor_count(CostMode::Catalog), 18);
        let pass = gen_binary_full_adder(BinaryFaVariant::Pass8t);
        assert_eq!(pass.transistor_count(CostMode::Catalog), 8);
        assert_eq!(pass.depth(), 1);
        for n in [nand, xor, pass] {
            let table = n.exhaustive_table().unwrap();
            assert_eq!(table.rows.len(), 8);
            for row in &table.rows {
                let (s, c) = fa_oracle(
                    d(row.inputs[0], 2),
                    d(row.inputs[1], 2),
                    d(row.inputs[2], 2),
                )
                .unwrap();
                assert_eq!(row.outputs, vec![s.value() as u8, c.value() as u8]);
            }
        }
    }

    #[test]
    fn binary_mul1_is_an_and_gate() {
        let n = gen_binary_mul1();
        assert_eq!(n.transistor_count(CostMode::Catalog), 6);
        let table = n.exhaustive_table().unwrap();
        assert_eq!(table.rows.len(), 4);
        for row in &table.rows {
            assert_eq!(row.outputs, vec![row.inputs[0] & row.inputs[1]]);
        }
    }

    #[test]
    fn depth_proxy_values() {
        // The published six-Nand critical path for the binary cell; the
        // ternary path is decoder (2) + complex gate + mux + encoder = 5.
        assert_eq!(gen_binary_full_adder(BinaryFaVariant::Nand).depth(), 6);
        assert_eq!(gen_ternary_full_adder(EquationSet::Corrected).depth(), 5);
        assert_eq!(gen_ternary_half_adder().depth(), 4);
        assert_eq!(gen_binary_half_adder(BinaryHaVariant::Nand).depth(), 3);
    }
}
