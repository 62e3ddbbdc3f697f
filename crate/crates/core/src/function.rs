//! Truth-table representation of Boolean functions.

use crate::{Error, Result};

/// Largest supported variable count (a 16M-entry table).
pub const MAX_VARS: usize = 24;

/// A Boolean function on `n` variables, stored as its full truth table.
///
/// Entry `i` of the table is `f(x)` for the point `x` whose bit `j-1`
/// (of `i`) is `x_j`; `x_1` is the least-significant bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    table: Vec<u8>,
}

/// A point of the cube, stored as a table index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Assignment {
    n: usize,
    index: usize,
}

impl Assignment {
    pub fn new(n: usize, index: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        if index >= 1 << n {
            return Err(Error::Invalid(format!(
                "assignment index {index} out of range for n = {n}"
            )));
        }
        Ok(Assignment { n, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// The point differing from `self` on exactly the variables in `block`
    /// (a bitmask with bit `i-1` for variable `i`). An involution;
    /// flipping the empty set is the identity.
    pub fn flip_set(&self, block: usize) -> Assignment {
        debug_assert!(block < 1 << self.n);
        Assignment {
            n: self.n,
            index: self.index ^ block,
        }
    }
}

impl BooleanFunction {
    pub fn from_truth_table(n: usize, bits: &[u8]) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::TableLength {
                got: bits.len(),
                expected,
            });
        }
        for (index, &value) in bits.iter().enumerate() {
            if value > 1 {
                return Err(Error::NonBitEntry { index, value });
            }
        }
        Ok(BooleanFunction {
            n,
            table: bits.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    /// f at the point with the given table index.
    #[inline]
    pub fn value(&self, index: usize) -> u8 {
        self.table[index]
    }

    pub fn value_at(&self, x: Assignment) -> u8 {
        debug_assert_eq!(x.n, self.n);
        self.table[x.index]
    }

    pub fn is_constant(&self) -> bool {
        let first = self.table[0];
        self.table.iter().all(|&b| b == first)
    }

    /// The (n-1)-variable subfunction with `x_var` fixed to `bit`.
    /// Variables above `var` shift down by one.
    pub fn restrict(&self, var: usize, bit: u8) -> Result<BooleanFunction> {
        if var == 0 || var > self.n {
            return Err(Error::VariableOutOfRange {
                index: var,
                n: self.n,
            });
        }
        debug_assert!(bit <= 1);
        let low_mask = (1usize << (var - 1)) - 1;
        let m = self.n - 1;
        let mut table = Vec::with_capacity(1 << m);
        for y in 0..1usize << m {
            let index = (y & low_mask) | ((bit as usize) << (var - 1)) | ((y & !low_mask) << 1);
            table.push(self.table[index]);
        }
        Ok(BooleanFunction { n: m, table })
    }

    /// Variables the function actually depends on, as a bitmask.
    pub fn relevant_variables(&self) -> usize {
        let mut mask = 0usize;
        for i in 1..=self.n {
            let bit = 1usize << (i - 1);
            for x in 0..self.table.len() {
                if x & bit == 0 && self.table[x] != self.table[x | bit] {
                    mask |= bit;
                    break;
                }
            }
        }
        mask
    }

    /// The function as a ±1-valued sequence on the ±1 cube: bit `b` maps
    /// to `(-1)^b` in both domain and range (0 -> +1, 1 -> -1). The index
    /// convention carries over unchanged.
    pub fn pm1_values(&self) -> Vec<f64> {
        self.table
            .iter()
            .map(|&b| if b == 0 { 1.0 } else { -1.0 })
            .collect()
    }

    /// Serialize to the truth-table file format: line 1 is `n` in decimal,
    /// line 2 the table as a hex string, most significant digit first,
    /// where table index `i` is bit `i mod 4` of the digit `i / 4` counted
    /// from the least-significant end.
    pub fn to_tt_string(&self) -> String {
        let digits = self.table.len().div_ceil(4);
        let mut hex = String::with_capacity(digits);
        for j in (0..digits).rev() {
            let mut d = 0u8;
            for k in 0..4 {
                let i = 4 * j + k;
                if i < self.table.len() && self.table[i] == 1 {
                    d |= 1 << k;
                }
            }
            hex.push(char::from_digit(d as u32, 16).unwrap());
        }
        format!("{}\n{}\n", self.n, hex)
    }

    pub fn from_tt_string(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidFile("missing variable-count line".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::InvalidFile("line 1 is not a decimal integer".into()))?;
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        let hex = lines
            .next()
            .ok_or_else(|| Error::InvalidFile("missing hex table line".into()))?
            .trim();
        let expected_digits = (1usize << n).div_ceil(4);
        if hex.len() != expected_digits {
            return Err(Error::InvalidFile(format!(
                "hex string has {} digits, expected {}",
                hex.len(),
                expected_digits
            )));
        }
        let mut table = vec![0u8; 1 << n];
        for (pos, c) in hex.chars().enumerate() {
            let d = c
                .to_digit(16)
                .ok_or_else(|| Error::InvalidFile(format!("invalid hex digit '{c}'")))?
                as usize;
            // pos counts from the most-significant end of the string
            let j = expected_digits - 1 - pos;
            for k in 0..4 {
                let i = 4 * j + k;
                if i < table.len() {
                    table[i] = ((d >> k) & 1) as u8;
                }
            }
        }
        BooleanFunction::from_truth_table(n, &table)
    }
}
