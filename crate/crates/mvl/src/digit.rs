//! Radix-parametric digit algebra.
//!
//! [`Digit`] and [`Word`] form the arithmetic domain shared by every module.
//! The oracle functions ([`ha_oracle`], [`fa_oracle`], [`mul1_oracle`]) are
//! the golden models the generated circuits are checked against, and
//! [`decode_trit`]/[`encode_sum`] pin down the ternary-to-binary rail
//! semantics used inside the ternary cells.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigitError {
    #[error("digit value {value} out of range for radix {radix}")]
    OutOfRange { value: u32, radix: u32 },
    #[error("radix {0} is not supported (must be >= 2)")]
    BadRadix(u32),
    #[error("radix mismatch: {left} vs {right}")]
    RadixMismatch { left: u32, right: u32 },
    #[error("carry-in must be 0 or 1, got {0}")]
    CarryNotBinary(u32),
    #[error("one-digit multiplier carry is not binary-valued for radix {0} (radix must be <= 3)")]
    MulCarryOverflow(u32),
    #[error("value {value} does not fit in {width} digits of radix {radix}")]
    ValueTooWide {
        value: u128,
        radix: u32,
        width: usize,
    },
    #[error("word must contain at least one digit")]
    EmptyWord,
}

/// A single digit: an integer in `[0, radix)` tagged with its radix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Digit {
    value: u32,
    radix: u32,
}

impl Digit {
    pub fn new(value: u32, radix: u32) -> Result<Self, DigitError> {
        if radix < 2 {
            return Err(DigitError::BadRadix(radix));
        }
        if value >= radix {
            return Err(DigitError::OutOfRange { value, radix });
        }
        Ok(Self { value, radix })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn radix(self) -> u32 {
        self.radix
    }

    /// True when the digit's value is restricted to `{0, 1}` — the shape of
    /// every carry in the ternary adders and multipliers.
    pub fn is_binary_valued(self) -> bool {
        self.value <= 1
    }
}

fn same_radix(a: Digit, b: Digit) -> Result<u32, DigitError> {
    if a.radix != b.radix {
        return Err(DigitError::RadixMismatch {
            left: a.radix,
            right: b.radix,
        });
    }
    Ok(a.radix)
}

/// Half-adder oracle: `sum = (a + b) mod r`, `carry = 1` iff `a + b >= r`.
pub fn ha_oracle(a: Digit, b: Digit) -> Result<(Digit, Digit), DigitError> {
    let r = same_radix(a, b)?;
    let t = a.value + b.value;
    Ok((Digit::new(t % r, r)?, Digit::new(u32::from(t >= r), r)?))
}

/// Full-adder oracle with a binary-valued carry-in.
///
/// `cin` must be 0 or 1; the sum `a + b + cin <= 2r - 1`, so the carry out is
/// always binary-valued as well.
pub fn fa_oracle(a: Digit, b: Digit, cin: Digit) -> Result<(Digit, Digit), DigitError> {
    let r = same_radix(a, b)?;
    same_radix(a, cin)?;
    if cin.value > 1 {
        return Err(DigitError::CarryNotBinary(cin.value));
    }
    let t = a.value + b.value + cin.value;
    Ok((Digit::new(t % r, r)?, Digit::new(u32::from(t >= r), r)?))
}

/// One-digit multiplier oracle: `sum = (a * b) mod r`, `carry = (a * b) div r`.
///
/// Only radix 2 and 3 are accepted: for radix 4 and above the carry digit can
/// exceed 1 (e.g. 3*3 = 21 in base 4), so the block no longer produces a
/// binary-valued carry.
pub fn mul1_oracle(a: Digit, b: Digit) -> Result<(Digit, Digit), DigitError> {
    let r = same_radix(a, b)?;
    if r > 3 {
        return Err(DigitError::MulCarryOverflow(r));
    }
    let p = a.value * b.value;
    Ok((Digit::new(p % r, r)?, Digit::new(p / r, r)?))
}

/// A fixed-width little-endian digit vector (index 0 = least significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    values: Vec<u32>,
    radix: u32,
}

impl Word {
    pub fn new(digits: &[Digit]) -> Result<Self, DigitError> {
        let first = digits.first().ok_or(DigitError::EmptyWord)?;
        let radix = first.radix;
        for d in digits {
            same_radix(*first, *d)?;
        }
        Ok(Self {
            values: digits.iter().map(|d| d.value).collect(),
            radix,
        })
    }

    pub fn from_values(values: &[u32], radix: u32) -> Result<Self, DigitError> {
        if values.is_empty() {
            return Err(DigitError::EmptyWord);
        }
        for &v in values {
            Digit::new(v, radix)?;
        }
        Ok(Self {
            values: values.to_vec(),
            radix,
        })
    }

    /// Encodes `value` as exactly `width` digits; rejects values that need
    /// more digits than `width` provides.
    pub fn from_int(value: u128, radix: u32, width: usize) -> Result<Self, DigitError> {
        if radix < 2 {
            return Err(DigitError::BadRadix(radix));
        }
        if width == 0 {
            return Err(DigitError::EmptyWord);
        }
        let mut rest = value;
        let mut values = Vec::with_capacity(width);
        for _ in 0..width {
            values.push((rest % u128::from(radix)) as u32);
            rest /= u128::from(radix);
        }
        if rest != 0 {
            return Err(DigitError::ValueTooWide {
                value,
                radix,
                width,
            });
        }
        Ok(Self { values, radix })
    }

    pub fn radix(&self) -> u32 {
        self.radix
    }

    pub fn width(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn digit(&self, index: usize) -> Digit {
        Digit {
            value: self.values[index],
            radix: self.radix,
        }
    }

    /// The represented integer, `sum(values[i] * radix^i)`. Total for any width.
    pub fn to_biguint(&self) -> BigUint {
        let radix = BigUint::from(self.radix);
        self.values
            .iter()
            .rev()
            .fold(BigUint::default(), |acc, &v| acc * &radix + v)
    }

    /// Convenience view of `to_biguint` for words that fit in 128 bits.
    pub fn to_u128(&self) -> Option<u128> {
        let mut acc: u128 = 0;
        for &v in self.values.iter().rev() {
            acc = acc.checked_mul(u128::from(self.radix))?;
            acc = acc.checked_add(u128::from(v))?;
        }
        Some(acc)
    }
}

/// Policy for converting a bit count to a trit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WidthPolicy {
    /// Reproduce the published wire-count table for 8/16/32/64 bits (its
    /// 8-bit entry, 5 trits, undershoots: 3^5 = 243 < 256); other widths
    /// fall back to `Capacity`.
    PublishedTable,
    /// Smallest trit count whose range covers `2^bits`.
    Capacity,
}

/// Number of trits needed for `bits` binary digits under the given policy.
pub fn digits_for_bits(bits: u32, policy: WidthPolicy) -> u32 {
    assert!(bits >= 1, "bit count must be positive");
    if policy == WidthPolicy::PublishedTable {
        match bits {
            8 => return 5,
            16 => return 11,
            32 => return 21,
            64 => return 41,
            _ => {}
        }
    }
    // Smallest d with 3^d >= 2^bits, by exact integer comparison.
    let target = BigUint::from(1u8) << (bits as usize);
    let three = BigUint::from(3u8);
    let mut pow = BigUint::from(1u8);
    let mut d = 0;
    while pow < target {
        pow *= &three;
        d += 1;
    }
    d
}

/// `ln(r_hi) / ln(r_lo)` — information carried by one high-radix digit,
/// measured in low-radix digits (1.585 for trits over bits).
pub fn information_ratio(r_hi: u32, r_lo: u32) -> f64 {
    assert!(r_hi >= 2 && r_lo >= 2, "radices must be >= 2");
    f64::from(r_hi).ln() / f64::from(r_lo).ln()
}

/// The four binary rails produced by decoding one trit.
///
/// A flag is true when the physical rail sits at the high level. The decoded
/// pattern is thermometer-coded: `a0 = (t >= 1)`, `a1 = (t >= 2)`, and the
/// bar rails are complements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rails {
    pub a1_bar: bool,
    pub a1: bool,
    pub a0_bar: bool,
    pub a0: bool,
}

/// Threshold-decodes a ternary digit into its four rails.
pub fn decode_trit(t: Digit) -> Result<Rails, DigitError> {
    if t.radix != 3 {
        return Err(DigitError::RadixMismatch {
            left: t.radix,
            right: 3,
        });
    }
    let a0 = t.value >= 1;
    let a1 = t.value >= 2;
    Ok(Rails {
        a1_bar: !a1,
        a1,
        a0_bar: !a0,
        a0,
    })
}

/// Binary-to-ternary sum encoder over active-low inputs.
///
/// `sum2_bar` low wins (output 2), then `sum1_bar` low (output 1), else 0.
/// The priority makes the function total even for non-one-hot input pairs,
/// matching the pull-network behaviour of the encoder circuit.
pub fn encode_sum(sum1_bar: bool, sum2_bar: bool) -> Digit {
    let value = if !sum2_bar {
        2
    } else if !sum1_bar {
        1
    } else {
        0
    };
    Digit { value, radix: 3 }
}
