//! Carry-propagate adder generator.

use crate::circuits::CellFamily;
use crate::netlist::{Netlist, NetlistBuilder, NetlistError, SignalDomain};

/// Ripple-carry adder: `width` full-adder blocks chained by binary-valued
/// carries, with an external carry-in on block 0.
///
/// Inputs are `a0..a{w-1}, b0..b{w-1}, cin` (least significant digit first);
/// outputs are the `width` sum digits followed by the carry out.
pub fn gen_ripple_adder(family: &CellFamily, width: usize) -> Result<Netlist, NetlistError> {
    if width == 0 {
        return Err(NetlistError::BadWidth {
            width,
            reason: "adder needs at least one digit",
        });
    }
    let radix = family.radix();
    let digit_domain = if radix == 3 {
        SignalDomain::Trit
    } else {
        SignalDomain::BinaryRail
    };
    let carry_domain = if radix == 3 {
        SignalDomain::BinaryValuedTrit
    } else {
        SignalDomain::BinaryRail
    };

    let mut b = NetlistBuilder::new(format!("ripple-r{radix}-w{width}-{}", family.tag()), radix);
    let a: Vec<_> = (0..width)
        .map(|i| b.input(&format!("a{i}"), digit_domain))
        .collect();
    let x: Vec<_> = (0..width)
        .map(|i| b.input(&format!("b{i}"), digit_domain))
        .collect();
    let mut carry = b.input("cin", carry_domain);

    let fa = family.full_adder();
    let mut sums = Vec::with_capacity(width);
    for k in 0..width {
        let outs = b.instantiate(&format!("fa{k}"), &fa, &[a[k], x[k], carry])?;
        sums.push(outs[0]);
        carry = outs[1];
    }
    for s in sums {
        b.output(s);
    }
    b.output(carry);
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{BinaryFaVariant, EquationSet};
    use crate::digit::Word;
    use crate::netlist::CostMode;

    fn eval_adder(n: &Netlist, radix: u32, width: usize, x: u128, y: u128, cin: u8) -> (u128, u8) {
        let xw = Word::from_int(x, radix, width).unwrap();
        let yw = Word::from_int(y, radix, width).unwrap();
        let mut assignment: Vec<u8> = Vec::new();
        assignment.extend(xw.values().iter().map(|&v| v as u8));
        assignment.extend(yw.values().iter().map(|&v| v as u8));
        assignment.push(cin);
        let out = n.evaluate(&assignment).unwrap();
        let sum = Word::from_values(
            &out[..width]
                .iter()
                .map(|&v| u32::from(v))
                .collect::<Vec<_>>(),
            radix,
        )
        .unwrap();
        (sum.to_u128().unwrap(), out[width])
    }

    #[test]
    fn five_trit_example() {
        let family = CellFamily::Ternary {
            eqs: EquationSet::Corrected,
        };
        let n = gen_ripple_adder(&family, 5).unwrap();
        // 121_3 + 122_3 = 16 + 17 = 33, no overflow out of five trits.
        let (sum, carry) = eval_adder(&n, 3, 5, 16, 17, 0);
        assert_eq!((sum, carry), (33, 0));
        // Wrap-around: (3^5 - 1) + 1 = 243 = carry out, sum 0.
        let (sum, carry) = eval_adder(&n, 3, 5, 242, 1, 0);
        assert_eq!((sum, carry), (0, 1));
        let (sum, carry) = eval_adder(&n, 3, 5, 242, 242, 1);
        assert_eq!((sum, carry), (242, 1));
    }

    #[test]
    fn published_word_costs() {
        let ternary = CellFamily::Ternary {
            eqs: EquationSet::Printed,
        };
        let n = gen_ripple_adder(&ternary, 41).unwrap();
        assert_eq!(n.transistor_count(CostMode::Catalog), 41 * 124);

        let binary = CellFamily::Binary {
            fa: BinaryFaVariant::Nand,
        };
        let n = gen_ripple_adder(&binary, 64).unwrap();
        assert_eq!(n.transistor_count(CostMode::Catalog), 64 * 36);
    }

    #[test]
    fn binary_adder_exhaustive_small() {
        let family = CellFamily::Binary {
            fa: BinaryFaVariant::Nand,
        };
        let width = 4;
        let n = gen_ripple_adder(&family, width).unwrap();
        for x in 0..16u128 {
            for y in 0..16u128 {
                for cin in 0..2u8 {
                    let (sum, carry) = eval_adder(&n, 2, width, x, y, cin);
                    let total = x + y + u128::from(cin);
                    assert_eq!(sum, total % 16);
                    assert_eq!(u128::from(carry), total / 16);
                }
            }
        }
    }

    #[test]
    fn zero_width_is_rejected() {
        let family = CellFamily::Binary {
            fa: BinaryFaVariant::Nand,
        };
        assert!(matches!(
            gen_ripple_adder(&family, 0),
            Err(NetlistError::BadWidth { .. })
        ));
    }

    mod properties {
        use super::*;
        use num_bigint::BigUint;
        use proptest::prelude::*;

        const POW3_41: u128 = 36472996377170786403;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            // Word-level addition against the big-integer oracle at the
            // published 41-trit width.
            #[test]
            fn ternary_41_trit_adder_matches_biguint(
                x in 0..POW3_41,
                y in 0..POW3_41,
                cin in 0..2u8,
            ) {
                let family = CellFamily::Ternary { eqs: EquationSet::Corrected };
                let n = gen_ripple_adder(&family, 41).unwrap();
                let xw = Word::from_int(x, 3, 41).unwrap();
                let yw = Word::from_int(y, 3, 41).unwrap();
                let mut assignment: Vec<u8> = Vec::new();
                assignment.extend(xw.values().iter().map(|&v| v as u8));
                assignment.extend(yw.values().iter().map(|&v| v as u8));
                assignment.push(cin);
                let out = n.evaluate(&assignment).unwrap();
                let got = out
                    .iter()
                    .rev()
                    .fold(BigUint::default(), |acc, &v| acc * 3u8 + v);
                prop_assert_eq!(got, BigUint::from(x) + y + cin);
            }
        }
    }
}
