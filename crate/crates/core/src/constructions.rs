//! Named function families used as extremal witnesses.

use crate::{BooleanFunction, Error, Result, MAX_VARS};

pub fn and_f(n: usize) -> BooleanFunction {
    let full = (1usize << n) - 1;
    let table: Vec<u8> = (0..1usize << n).map(|x| (x == full) as u8).collect();
    BooleanFunction::from_truth_table(n, &table).unwrap()
}

pub fn or_f(n: usize) -> BooleanFunction {
    let table: Vec<u8> = (0..1usize << n).map(|x| (x != 0) as u8).collect();
    BooleanFunction::from_truth_table(n, &table).unwrap()
}

pub fn parity_f(n: usize) -> BooleanFunction {
    let table: Vec<u8> = (0..1usize << n)
        .map(|x: usize| (x.count_ones() % 2) as u8)
        .collect();
    BooleanFunction::from_truth_table(n, &table).unwrap()
}

/// AND of k ORs on k variables each, n = k^2. Variable (i, j) of block i
/// maps to index (i-1)*k + j.
pub fn and_of_ors(k: usize) -> Result<BooleanFunction> {
    let n = k * k;
    if k == 0 {
        return Err(Error::Invalid("and_of_ors requires k >= 1".into()));
    }
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { n, max: MAX_VARS });
    }
    let block = (1usize << k) - 1;
    let table: Vec<u8> = (0..1usize << n)
        .map(|x| (0..k).all(|i| (x >> (i * k)) & block != 0) as u8)
        .collect();
    BooleanFunction::from_truth_table(n, &table)
}

/// Rubinstein's function on n = k^2 variables (k even): value 1 iff some
/// block of k consecutive variables has weight exactly 2 with the two
/// ones forming an aligned pair (block positions 2j, 2j+1). The aligned
/// reading is what gives s = k and bs = k^2/2; k even makes the blocks
/// split into whole pairs.
pub fn rubinstein(k: usize) -> Result<BooleanFunction> {
    if k == 0 || k % 2 != 0 {
        return Err(Error::Invalid(format!(
            "rubinstein requires even k >= 2, got {k}"
        )));
    }
    let n = k * k;
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { n, max: MAX_VARS });
    }
    let block_mask = (1usize << k) - 1;
    let good_block = |b: usize| -> bool {
        if b.count_ones() != 2 {
            return false;
        }
        let j = b.trailing_zeros() as usize;
        j % 2 == 0 && b == 0b11 << j
    };
    let table: Vec<u8> = (0..1usize << n)
        .map(|x| (0..k).any(|i| good_block((x >> (i * k)) & block_mask)) as u8)
        .collect();
    BooleanFunction::from_truth_table(n, &table)
}

/// Depth-t complete ternary composition of E3 on n = 3^t variables.
/// E3(x, y, z) = 1 iff the weight of (x, y, z) is 1 or 2; the unique
/// symmetric degree-2 function with E3(0) = 0 and E3(e_i) = 1.
pub fn e3_tree(depth: usize) -> Result<BooleanFunction> {
    if depth == 0 {
        return Err(Error::Invalid("e3_tree requires depth >= 1".into()));
    }
    let n = 3usize.pow(depth as u32);
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { n, max: MAX_VARS });
    }
    fn e3(a: u8, b: u8, c: u8) -> u8 {
        matches!(a + b + c, 1 | 2) as u8
    }
    fn eval(x: usize, width: usize) -> u8 {
        if width == 1 {
            return (x & 1) as u8;
        }
        let w = width / 3;
        let mask = (1usize << w) - 1;
        e3(
            eval(x & mask, w),
            eval((x >> w) & mask, w),
            eval((x >> (2 * w)) & mask, w),
        )
    }
    let table: Vec<u8> = (0..1usize << n).map(|x| eval(x, n)).collect();
    BooleanFunction::from_truth_table(n, &table)
}
