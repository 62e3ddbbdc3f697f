//! The unique multilinear polynomial representation and symmetrization.

use crate::BooleanFunction;

/// Multilinear polynomial over the 0/1 cube, coefficients indexed by
/// subset bitmask. Coefficients of a Boolean function's exact
/// representation are integers.
#[derive(Debug, Clone, PartialEq)]
pub struct MultilinearPoly {
    n: usize,
    coeffs: Vec<i64>,
}

impl MultilinearPoly {
    pub fn new(n: usize, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), 1 << n);
        MultilinearPoly { n, coeffs }
    }

    /// Möbius inversion over the subset lattice:
    /// `c_S = sum_{T subseteq S} (-1)^{|S|-|T|} f(1_T)`.
    pub fn from_function(f: &BooleanFunction) -> Self {
        let n = f.n();
        let mut coeffs: Vec<i64> = f.table().iter().map(|&b| b as i64).collect();
        for i in 0..n {
            let bit = 1usize << i;
            for mask in 0..coeffs.len() {
                if mask & bit != 0 {
                    coeffs[mask] -= coeffs[mask ^ bit];
                }
            }
        }
        MultilinearPoly { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, subset: usize) -> i64 {
        self.coeffs[subset]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Degree of the polynomial; the zero polynomial reports 0
    /// (distinguish it with [`MultilinearPoly::is_zero`]).
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(s, _)| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Evaluate at the 0/1 point whose support is `point` (a bitmask).
    /// `p(x) = sum_{S subseteq supp(x)} c_S`.
    pub fn eval(&self, point: usize) -> i64 {
        let mut acc = 0i64;
        // iterate over submasks of `point`
        let mut s = point;
        loop {
            acc += self.coeffs[s];
            if s == 0 {
                break;
            }
            s = (s - 1) & point;
        }
        acc
    }
}

/// Univariate polynomial in the binomial basis:
/// `p(z) = c_0 + c_1*C(z,1) + ... + c_d*C(z,d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Univariate {
    coeffs: Vec<f64>,
}

fn binom(z: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for j in 0..k {
        acc *= (z - j as f64) / (j as f64 + 1.0);
    }
    acc
}

fn binom_u(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    binom(n as f64, k)
}

impl Univariate {
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c * binom(z, k))
            .sum()
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .find(|&(_, &c)| c.abs() > 1e-9)
            .map(|(k, _)| k)
            .unwrap_or(0)
    }
}

/// The unique univariate polynomial agreeing with the symmetrization of
/// `p` on Hamming levels: `sym(k)` is the average of `p` over all 0/1
/// points of weight `k`. Computed by level averaging followed by
/// interpolation in the binomial basis. `deg(sym) <= deg(p)`.
pub fn symmetrize(p: &MultilinearPoly) -> Univariate {
    let n = p.n();
    let mut sums = vec![0.0f64; n + 1];
    for point in 0..1usize << n {
        sums[point.count_ones() as usize] += p.eval(point) as f64;
    }
    let averages: Vec<f64> = sums
        .iter()
        .enumerate()
        .map(|(k, &s)| s / binom_u(n, k))
        .collect();
    // forward substitution: avg(k) = sum_{j<=k} c_j C(k, j)
    let mut coeffs = vec![0.0f64; n + 1];
    for k in 0..=n {
        let mut c = averages[k];
        for j in 0..k {
            c -= coeffs[j] * binom_u(k, j);
        }
        coeffs[k] = c;
    }
    Univariate { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn and2_coeffs() {
        let and2 = constructions::and_f(2);
        let p = MultilinearPoly::from_function(&and2);
        assert_eq!(p.coeffs(), &[0, 0, 0, 1]); // x1*x2
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn parity2_coeffs() {
        let parity2 = constructions::parity_f(2);
        let p = MultilinearPoly::from_function(&parity2);
        // x1 + x2 - 2*x1*x2
        assert_eq!(p.coeffs(), &[0, 1, 1, -2]);
        assert_eq!(p.degree(), 2);
        for x in 0..4 {
            assert_eq!(p.eval(x), parity2.value(x) as i64);
        }
    }

    #[test]
    fn constant_one() {
        let one = BooleanFunction::from_truth_table(2, &[1, 1, 1, 1]).unwrap();
        let p = MultilinearPoly::from_function(&one);
        assert_eq!(p.coeffs(), &[1, 0, 0, 0]);
        assert_eq!(p.degree(), 0);
        assert!(!p.is_zero());
    }

    #[test]
    fn zero_polynomial_convention() {
        let zero = BooleanFunction::from_truth_table(2, &[0, 0, 0, 0]).unwrap();
        let p = MultilinearPoly::from_function(&zero);
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn reconstruction_exhaustive_n3() {
        for t in 0u32..256 {
            let bits: Vec<u8> = (0..8).map(|i| ((t >> i) & 1) as u8).collect();
            let f = BooleanFunction::from_truth_table(3, &bits).unwrap();
            let p = MultilinearPoly::from_function(&f);
            for x in 0..8 {
                assert_eq!(p.eval(x), f.value(x) as i64);
            }
        }
    }

    #[test]
    fn uniqueness_exhaustive_n3() {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for t in 0u32..256 {
            let bits: Vec<u8> = (0..8).map(|i| ((t >> i) & 1) as u8).collect();
            let f = BooleanFunction::from_truth_table(3, &bits).unwrap();
            let p = MultilinearPoly::from_function(&f);
            assert!(seen.insert(p.coeffs().to_vec()), "coefficient collision");
        }
    }

    #[test]
    fn symmetrize_x1x2() {
        let p = MultilinearPoly::new(2, vec![0, 0, 0, 1]);
        let s = symmetrize(&p);
        assert!(s.eval(0.0).abs() < 1e-12);
        assert!(s.eval(1.0).abs() < 1e-12);
        assert!((s.eval(2.0) - 1.0).abs() < 1e-12);
        assert_eq!(s.degree(), 2);
    }

    #[test]
    fn symmetrize_x1_plus_x1x2() {
        // real-polynomial symmetrization of x1 + x1*x2
        let p = MultilinearPoly::new(2, vec![0, 1, 0, 1]);
        let s = symmetrize(&p);
        assert!(s.eval(0.0).abs() < 1e-12);
        assert!((s.eval(1.0) - 0.5).abs() < 1e-12);
        assert!((s.eval(2.0) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn symmetrize_boolean_absorbed_reading() {
        // the Boolean function x1 | (x1 & x2) collapses to x1, whose
        // symmetrization is (x1 + x2)/2: levels 0, 1/2, 1
        let f = crate::parser::parse_expression("x1 | x1 & x2", 2).unwrap();
        let p = MultilinearPoly::from_function(&f);
        assert_eq!(p.coeffs(), &[0, 1, 0, 0]);
        let s = symmetrize(&p);
        assert!(s.eval(0.0).abs() < 1e-12);
        assert!((s.eval(1.0) - 0.5).abs() < 1e-12);
        assert!((s.eval(2.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetrize_constant() {
        let p = MultilinearPoly::new(2, vec![3, 0, 0, 0]);
        let s = symmetrize(&p);
        for k in 0..=2 {
            assert!((s.eval(k as f64) - 3.0).abs() < 1e-12);
        }
        assert_eq!(s.degree(), 0);
    }
}
