//! Exact complexity measures: sensitivity, block sensitivity, certificate
//! complexity, decision-tree depth, degree, approximate degree, Fourier
//! coefficients and influences.

use std::collections::HashMap;

use serde::Serialize;

use crate::poly::MultilinearPoly;
use crate::{BooleanFunction, Error, Result};

pub mod lp;

/// Per-operation size caps. Each is configuration, not a constant; the
/// report records which caps applied.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Caps {
    pub bs_point: usize,
    pub bs_full: usize,
    pub cert_point: usize,
    pub depth: usize,
    pub approx: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            bs_point: 16,
            bs_full: 12,
            cert_point: 16,
            depth: 10,
            approx: 6,
        }
    }
}

/// A maximum together with the input index achieving it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaxWitness {
    pub value: usize,
    pub witness: usize,
}

/// Number of sensitive coordinates of f at the point with table index `x`.
pub fn sensitivity_at(f: &BooleanFunction, x: usize) -> usize {
    let fx = f.value(x);
    (0..f.n()).filter(|i| f.value(x ^ (1 << i)) != fx).count()
}

/// s(f): maximum point sensitivity, with a witness.
pub fn sensitivity(f: &BooleanFunction) -> MaxWitness {
    let mut best = MaxWitness {
        value: 0,
        witness: 0,
    };
    for x in 0..f.len() {
        let s = sensitivity_at(f, x);
        if s > best.value {
            best = MaxWitness {
                value: s,
                witness: x,
            };
        }
    }
    best
}

/// Minimal sensitive blocks at `x`: subsets S with f(x^S) != f(x) having
/// no proper sensitive subset. Returned as bitmasks in increasing
/// popcount order.
pub fn minimal_sensitive_blocks(f: &BooleanFunction, x: usize) -> Vec<usize> {
    let n = f.n();
    let fx = f.value(x);
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    let mut minimal: Vec<usize> = Vec::new();
    for m in masks {
        if f.value(x ^ m) != fx && !minimal.iter().any(|&b| b & m == b) {
            minimal.push(m);
        }
    }
    minimal
}

/// Maximum number of pairwise-disjoint blocks, branch and bound.
fn max_disjoint_packing(blocks: &[usize]) -> (usize, Vec<usize>) {
    fn recurse(
        blocks: &[usize],
        start: usize,
        used: usize,
        chosen: &mut Vec<usize>,
        best: &mut (usize, Vec<usize>),
    ) {
        if chosen.len() + (blocks.len() - start) <= best.0 {
            return; // cannot beat the incumbent
        }
        if chosen.len() > best.0 {
            *best = (chosen.len(), chosen.clone());
        }
        for i in start..blocks.len() {
            if blocks[i] & used == 0 {
                chosen.push(blocks[i]);
                recurse(blocks, i + 1, used | blocks[i], chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = (0usize, Vec::new());
    let mut chosen = Vec::new();
    recurse(blocks, 0, 0, &mut chosen, &mut best);
    best
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockSensitivityAt {
    pub value: usize,
    pub blocks: Vec<usize>,
}

/// Exact block sensitivity at one point.
pub fn block_sensitivity_at(
    f: &BooleanFunction,
    x: usize,
    caps: &Caps,
) -> Result<BlockSensitivityAt> {
    if f.n() > caps.bs_point {
        return Err(Error::CapExceeded {
            operation: "block_sensitivity_at",
            n: f.n(),
            cap: caps.bs_point,
        });
    }
    let minimal = minimal_sensitive_blocks(f, x);
    let (value, blocks) = max_disjoint_packing(&minimal);
    Ok(BlockSensitivityAt { value, blocks })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockSensitivity {
    pub value: usize,
    pub witness: usize,
    pub blocks: Vec<usize>,
}

/// bs(f): maximum over all points.
pub fn block_sensitivity(f: &BooleanFunction, caps: &Caps) -> Result<BlockSensitivity> {
    if f.n() > caps.bs_full {
        return Err(Error::CapExceeded {
            operation: "block_sensitivity",
            n: f.n(),
            cap: caps.bs_full,
        });
    }
    let mut best = BlockSensitivity {
        value: 0,
        witness: 0,
        blocks: Vec::new(),
    };
    for x in 0..f.len() {
        let at = block_sensitivity_at(f, x, caps)?;
        if at.value > best.value {
            best = BlockSensitivity {
                value: at.value,
                witness: x,
                blocks: at.blocks,
            };
        }
    }
    Ok(best)
}

/// Smallest number of coordinates that must be fixed to x's values to
/// force f constant on the resulting subcube.
pub fn certificate_at(f: &BooleanFunction, x: usize, caps: &Caps) -> Result<usize> {
    let n = f.n();
    if n > caps.cert_point {
        return Err(Error::CapExceeded {
            operation: "certificate_at",
            n,
            cap: caps.cert_point,
        });
    }
    let mut masks: Vec<usize> = (0..1usize << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    let fx = f.value(x);
    'outer: for s in masks {
        let free = !s & ((1usize << n) - 1);
        // every point agreeing with x on s must share f's value
        let mut t = free;
        loop {
            if f.value((x & s) | t) != fx {
                continue 'outer;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
        return Ok(s.count_ones() as usize);
    }
    unreachable!("fixing all n coordinates is always a certificate")
}

/// C(f) = max over points of the per-point certificate size.
pub fn certificate_complexity(f: &BooleanFunction, caps: &Caps) -> Result<MaxWitness> {
    let mut best = MaxWitness {
        value: 0,
        witness: 0,
    };
    for x in 0..f.len() {
        let c = certificate_at(f, x, caps)?;
        if c > best.value {
            best = MaxWitness {
                value: c,
                witness: x,
            };
        }
    }
    Ok(best)
}

/// Decision-tree depth with a memo keyed by the canonical subfunction
/// table, so equivalent restrictions collapse. The solver can be reused
/// across functions to share the cache.
#[derive(Default)]
pub struct DepthSolver {
    cache: HashMap<(u8, Vec<u64>), u8>,
}

fn pack_table(f: &BooleanFunction) -> Vec<u64> {
    let mut packed = vec![0u64; f.len().div_ceil(64)];
    for (i, &b) in f.table().iter().enumerate() {
        if b == 1 {
            packed[i / 64] |= 1 << (i % 64);
        }
    }
    packed
}

impl DepthSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn depth(&mut self, f: &BooleanFunction) -> usize {
        if f.is_constant() {
            return 0;
        }
        let key = (f.n() as u8, pack_table(f));
        if let Some(&d) = self.cache.get(&key) {
            return d as usize;
        }
        let mut best = usize::MAX;
        for i in 1..=f.n() {
            let d0 = self.depth(&f.restrict(i, 0).unwrap());
            if d0 + 1 >= best {
                continue;
            }
            let d1 = self.depth(&f.restrict(i, 1).unwrap());
            best = best.min(1 + d0.max(d1));
        }
        self.cache.insert(key, best as u8);
        best
    }
}

/// D(f): depth of the shallowest decision tree.
pub fn decision_tree_depth(f: &BooleanFunction, caps: &Caps) -> Result<usize> {
    if f.n() > caps.depth {
        return Err(Error::CapExceeded {
            operation: "decision_tree_depth",
            n: f.n(),
            cap: caps.depth,
        });
    }
    Ok(DepthSolver::new().depth(f))
}

/// deg(f): degree of the unique multilinear representation.
pub fn degree(f: &BooleanFunction) -> usize {
    MultilinearPoly::from_function(f).degree()
}

/// Outcome of the approximate-degree search. `Inconclusive` flags an LP
/// optimum within 1e-9 of the 1/3 threshold, where floating point cannot
/// decide the paper's strict inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ApproxDegree {
    Exact { degree: usize, eps: f64 },
    Inconclusive { degree: usize, eps: f64 },
}

impl ApproxDegree {
    pub fn degree(&self) -> usize {
        match *self {
            ApproxDegree::Exact { degree, .. } | ApproxDegree::Inconclusive { degree, .. } => {
                degree
            }
        }
    }
}

/// Best achievable sup-norm error when approximating f by a polynomial of
/// degree at most d, via the minimax linear program over all 2^n points.
pub fn minimax_error(f: &BooleanFunction, d: usize) -> f64 {
    let n = f.n();
    let monomials: Vec<usize> = (0..1usize << n)
        .filter(|s| s.count_ones() as usize <= d)
        .collect();
    let m = monomials.len();
    // variables: c+_S (m), c-_S (m), eps; minimize eps
    let mut objective = vec![0.0f64; 2 * m + 1];
    objective[2 * m] = 1.0;
    let mut rows = Vec::with_capacity(2 << n);
    let mut rhs = Vec::with_capacity(2 << n);
    for x in 0..1usize << n {
        let fx = f.value(x) as f64;
        let mut up = vec![0.0f64; 2 * m + 1];
        let mut down = vec![0.0f64; 2 * m + 1];
        for (j, &s) in monomials.iter().enumerate() {
            if s & x == s {
                up[j] = 1.0;
                up[m + j] = -1.0;
                down[j] = -1.0;
                down[m + j] = 1.0;
            }
        }
        up[2 * m] = -1.0; // p(x) - eps <= f(x)
        down[2 * m] = -1.0; // -p(x) - eps <= -f(x)
        rows.push(up);
        rhs.push(fx);
        rows.push(down);
        rhs.push(-fx);
    }
    let sol = lp::solve_min(&objective, &rows, &rhs)
        .expect("minimax program is always feasible and bounded");
    sol.objective.max(0.0)
}

/// Smallest d whose minimax error is strictly below 1/3 (with a 1e-9
/// floating-point guard band).
pub fn approx_degree(f: &BooleanFunction, caps: &Caps) -> Result<ApproxDegree> {
    if f.n() > caps.approx {
        return Err(Error::CapExceeded {
            operation: "approx_degree",
            n: f.n(),
            cap: caps.approx,
        });
    }
    let threshold = 1.0 / 3.0;
    for d in 0..=f.n() {
        let eps = minimax_error(f, d);
        if eps < threshold - 1e-9 {
            return Ok(ApproxDegree::Exact { degree: d, eps });
        }
        if (eps - threshold).abs() <= 1e-9 {
            return Ok(ApproxDegree::Inconclusive { degree: d, eps });
        }
    }
    unreachable!("d = n represents f exactly with eps = 0")
}

/// All 2^n Fourier coefficients of the ±1 view of f.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierTable {
    n: usize,
    coeffs: Vec<f64>,
}

impl FourierTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// f̂(S) for the subset bitmask `s`.
    pub fn coeff(&self, s: usize) -> f64 {
        self.coeffs[s]
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn parseval_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Reconstruct the ±1 value at the point with table index `x`.
    pub fn reconstruct(&self, x: usize) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(s, &c)| {
                let sign = if (s & x).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                c * sign
            })
            .sum()
    }
}

/// Walsh-Hadamard transform of the ±1 view: f̂(S) = E_x[f(x) χ_S(x)].
pub fn fourier(f: &BooleanFunction) -> FourierTable {
    let n = f.n();
    let mut values = f.pm1_values();
    let len = values.len();
    let mut bit = 1usize;
    while bit < len {
        for i in 0..len {
            if i & bit == 0 {
                let a = values[i];
                let b = values[i | bit];
                values[i] = a + b;
                values[i | bit] = a - b;
            }
        }
        bit <<= 1;
    }
    let scale = 1.0 / len as f64;
    for v in &mut values {
        *v *= scale;
    }
    FourierTable { n, coeffs: values }
}

/// Inf_i(f): probability that flipping coordinate i flips the value.
pub fn influence(f: &BooleanFunction, i: usize) -> Result<f64> {
    if i == 0 || i > f.n() {
        return Err(Error::VariableOutOfRange { index: i, n: f.n() });
    }
    let bit = 1usize << (i - 1);
    let count = (0..f.len())
        .filter(|&x| x & bit == 0 && f.value(x) != f.value(x | bit))
        .count();
    Ok(2.0 * count as f64 / f.len() as f64)
}

pub fn total_influence(f: &BooleanFunction) -> f64 {
    (1..=f.n()).map(|i| influence(f, i).unwrap()).sum()
}

/// Witness data for a [`MeasureReport`].
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Witnesses {
    pub s: Option<usize>,
    pub bs: Option<usize>,
    pub bs_blocks: Option<Vec<usize>>,
    pub c: Option<usize>,
}

/// All computed measures for one function, with provenance of the caps
/// that applied. Fields over their cap are null.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct MeasureReport {
    pub n: usize,
    pub s: Option<usize>,
    pub bs: Option<usize>,
    pub c: Option<usize>,
    pub d: Option<usize>,
    pub deg: Option<usize>,
    pub approx_deg: Option<usize>,
    pub witnesses: Witnesses,
    pub caps: Caps,
}

/// Compute every measure allowed by the caps. `selected`, when given,
/// restricts which measures are attempted (names: s, bs, c, d, deg,
/// approx_deg).
pub fn report(f: &BooleanFunction, caps: &Caps, selected: Option<&[&str]>) -> MeasureReport {
    let want = |name: &str| selected.is_none_or(|list| list.contains(&name));
    let mut out = MeasureReport {
        n: f.n(),
        s: None,
        bs: None,
        c: None,
        d: None,
        deg: None,
        approx_deg: None,
        witnesses: Witnesses {
            s: None,
            bs: None,
            bs_blocks: None,
            c: None,
        },
        caps: caps.clone(),
    };
    if want("s") {
        let s = sensitivity(f);
        out.s = Some(s.value);
        out.witnesses.s = Some(s.witness);
    }
    if want("bs") {
        if let Ok(bs) = block_sensitivity(f, caps) {
            out.bs = Some(bs.value);
            out.witnesses.bs = Some(bs.witness);
            out.witnesses.bs_blocks = Some(bs.blocks);
        }
    }
    if want("c") {
        if let Ok(c) = certificate_complexity(f, caps) {
            out.c = Some(c.value);
            out.witnesses.c = Some(c.witness);
        }
    }
    if want("d") {
        if let Ok(d) = decision_tree_depth(f, caps) {
            out.d = Some(d);
        }
    }
    if want("deg") {
        out.deg = Some(degree(f));
    }
    if want("approx_deg") {
        if let Ok(a) = approx_degree(f, caps) {
            out.approx_deg = Some(a.degree());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{and_f, or_f, parity_f, rubinstein};

    #[test]
    fn sensitivity_at_and2() {
        let and2 = and_f(2);
        assert_eq!(sensitivity_at(&and2, 0b11), 2);
        assert_eq!(sensitivity_at(&and2, 0b00), 0);
    }

    #[test]
    fn sensitivity_parity_is_n() {
        for n in 1..=4 {
            let p = parity_f(n);
            for x in 0..1 << n {
                assert_eq!(sensitivity_at(&p, x), n);
            }
        }
    }

    #[test]
    fn sensitivity_global() {
        assert_eq!(sensitivity(&and_f(3)).value, 3);
        assert_eq!(sensitivity(&and_f(3)).witness, 0b111);
        let c = BooleanFunction::from_truth_table(2, &[0, 0, 0, 0]).unwrap();
        assert_eq!(sensitivity(&c).value, 0);
    }

    #[test]
    fn bs_or4_at_zero() {
        let or4 = or_f(4);
        let at = block_sensitivity_at(&or4, 0, &Caps::default()).unwrap();
        assert_eq!(at.value, 4);
        assert_eq!(at.blocks, vec![0b0001, 0b0010, 0b0100, 0b1000]);
    }

    #[test]
    fn bs_and2_at_zero() {
        let and2 = and_f(2);
        let at = block_sensitivity_at(&and2, 0, &Caps::default()).unwrap();
        assert_eq!(at.value, 1);
        assert_eq!(at.blocks, vec![0b11]);
        // the only minimal sensitive block at (0,0) is {1,2}
        assert_eq!(minimal_sensitive_blocks(&and2, 0), vec![0b11]);
    }

    #[test]
    fn bs_parity_is_n() {
        for n in 1..=4 {
            let p = parity_f(n);
            assert_eq!(block_sensitivity(&p, &Caps::default()).unwrap().value, n);
        }
    }

    #[test]
    fn bs_rubinstein_k2() {
        let f = rubinstein(2).unwrap();
        assert_eq!(block_sensitivity(&f, &Caps::default()).unwrap().value, 2);
    }

    #[test]
    fn bs_cap_enforced() {
        let f = parity_f(4);
        let caps = Caps {
            bs_full: 3,
            ..Caps::default()
        };
        assert!(block_sensitivity(&f, &caps).is_err());
    }

    #[test]
    fn certificate_and2() {
        let and2 = and_f(2);
        let caps = Caps::default();
        assert_eq!(certificate_at(&and2, 0b11, &caps).unwrap(), 2);
        assert_eq!(certificate_at(&and2, 0b10, &caps).unwrap(), 1);
        assert_eq!(certificate_complexity(&and2, &caps).unwrap().value, 2);
    }

    #[test]
    fn certificate_constant_and_parity() {
        let caps = Caps::default();
        let c = BooleanFunction::from_truth_table(3, &[1; 8]).unwrap();
        assert_eq!(certificate_complexity(&c, &caps).unwrap().value, 0);
        let p = parity_f(3);
        for x in 0..8 {
            assert_eq!(certificate_at(&p, x, &caps).unwrap(), 3);
        }
    }

    #[test]
    fn depth_examples() {
        let caps = Caps::default();
        for n in 1..=4 {
            assert_eq!(decision_tree_depth(&and_f(n), &caps).unwrap(), n);
        }
        let c = BooleanFunction::from_truth_table(2, &[0; 4]).unwrap();
        assert_eq!(decision_tree_depth(&c, &caps).unwrap(), 0);
        let x1 = crate::parser::parse_expression("x1", 3).unwrap();
        assert_eq!(decision_tree_depth(&x1, &caps).unwrap(), 1);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&parity_f(3)), 3);
        let e3 = crate::constructions::e3_tree(2).unwrap();
        assert_eq!(degree(&e3), 4);
    }

    #[test]
    fn approx_degree_constant() {
        let c = BooleanFunction::from_truth_table(2, &[1; 4]).unwrap();
        match approx_degree(&c, &Caps::default()).unwrap() {
            ApproxDegree::Exact { degree, eps } => {
                assert_eq!(degree, 0);
                assert!(eps.abs() < 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn approx_degree_or2() {
        let or2 = or_f(2);
        match approx_degree(&or2, &Caps::default()).unwrap() {
            ApproxDegree::Exact { degree, eps } => {
                assert_eq!(degree, 1);
                assert!((eps - 0.25).abs() < 1e-6, "eps = {eps}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn approx_degree_parity2() {
        let p2 = parity_f(2);
        // every affine approximation is off by at least 1/2
        let affine = minimax_error(&p2, 1);
        assert!((affine - 0.5).abs() < 1e-6, "affine error = {affine}");
        assert_eq!(approx_degree(&p2, &Caps::default()).unwrap().degree(), 2);
    }

    #[test]
    fn fourier_parity_and_dictator() {
        let p3 = parity_f(3);
        let t = fourier(&p3);
        for s in 0..8 {
            if s == 0b111 {
                assert!((t.coeff(s).abs() - 1.0).abs() < 1e-12);
            } else {
                assert!(t.coeff(s).abs() < 1e-12);
            }
        }
        let x1 = crate::parser::parse_expression("x1", 2).unwrap();
        let t = fourier(&x1);
        assert!((t.coeff(0b01).abs() - 1.0).abs() < 1e-12);
        assert!(t.coeff(0b00).abs() < 1e-12);
    }

    #[test]
    fn fourier_and2() {
        let t = fourier(&and_f(2));
        assert!((t.coeff(0b00) - 0.5).abs() < 1e-12);
        assert!((t.coeff(0b01) - 0.5).abs() < 1e-12);
        assert!((t.coeff(0b10) - 0.5).abs() < 1e-12);
        assert!((t.coeff(0b11) + 0.5).abs() < 1e-12);
    }

    #[test]
    fn fourier_reconstruction() {
        let f = crate::parser::parse_expression("x1 & (x2 | !x3)", 3).unwrap();
        let t = fourier(&f);
        let pm = f.pm1_values();
        for x in 0..8 {
            assert!((t.reconstruct(x) - pm[x]).abs() < 1e-12);
        }
    }

    #[test]
    fn influence_examples() {
        let x1 = crate::parser::parse_expression("x1", 2).unwrap();
        assert_eq!(influence(&x1, 1).unwrap(), 1.0);
        assert_eq!(influence(&x1, 2).unwrap(), 0.0);
        for i in 1..=3 {
            assert_eq!(influence(&parity_f(3), i).unwrap(), 1.0);
        }
        assert_eq!(influence(&and_f(2), 1).unwrap(), 0.5);
        assert!(influence(&and_f(2), 3).is_err());
    }

    #[test]
    fn report_serializes_flat() {
        let r = report(&and_f(2), &Caps::default(), None);
        assert_eq!(r.s, Some(2));
        assert_eq!(r.bs, Some(2));
        assert_eq!(r.c, Some(2));
        assert_eq!(r.d, Some(2));
        assert_eq!(r.deg, Some(2));
        let json = serde_json::to_value(&r).unwrap();
        for key in ["n", "s", "bs", "c", "d", "deg", "approx_deg", "witnesses", "caps"] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
    }
}
