//! Verification campaigns: exhaustive sweeps at small n, seeded sampling
//! beyond, and extremal searches at desk scale.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::hypercube::{
    chung_partition, chung_subgraph, degree_sensitivity_link, family_rank, family_t, gl_twist,
    InducedSubgraph,
};
use crate::measures::{
    block_sensitivity, certificate_complexity, degree, fourier, sensitivity, sensitivity_at, Caps,
    DepthSolver,
};
use crate::spectral::SignedMatrix;
use crate::{BooleanFunction, Error, Result};

/// Outcome of one campaign. Violations must be empty on success;
/// wall-clock duration is kept out of the serialized form so identical
/// runs produce identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub checked: u64,
    pub violations: Vec<String>,
    pub witnesses: serde_json::Value,
    #[serde(skip)]
    pub duration_ms: u128,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: n={} checked={} violations={} [{}] ({} ms)",
            self.campaign,
            self.n,
            self.checked,
            self.violations.len(),
            if self.passed() { "PASS" } else { "FAIL" },
            self.duration_ms
        )
    }
}

fn function_from_code(n: usize, code: u64) -> BooleanFunction {
    let bits: Vec<u8> = (0..1usize << n).map(|i| (code >> i & 1) as u8).collect();
    BooleanFunction::from_truth_table(n, &bits).unwrap()
}

struct ChainStats {
    checked: u64,
    violations: Vec<String>,
    max_ratio: f64,
    ratio_witness: Option<u64>,
}

fn chain_check_range(n: usize, codes: impl Iterator<Item = u64>, caps: &Caps) -> ChainStats {
    let mut solver = DepthSolver::new();
    let mut stats = ChainStats {
        checked: 0,
        violations: Vec::new(),
        max_ratio: 0.0,
        ratio_witness: None,
    };
    for code in codes {
        let f = function_from_code(n, code);
        stats.checked += 1;
        let mut fail = |what: &str| {
            stats
                .violations
                .push(format!("f={code:#x} n={n}: {what}"));
        };
        if f.is_constant() {
            // all measures are 0 by convention; the chain is vacuous
            continue;
        }
        let s = sensitivity(&f).value as u64;
        let bs = block_sensitivity(&f, caps).unwrap().value as u64;
        let c = certificate_complexity(&f, caps).unwrap().value as u64;
        let d = solver.depth(&f) as u64;
        let dg = degree(&f) as u64;

        if !(s <= bs && bs <= c && c <= d && d <= n as u64) {
            fail(&format!("s<=bs<=C<=D<=n broken: {s},{bs},{c},{d}"));
        }
        if bs > 2 * dg * dg {
            fail(&format!("bs={bs} > 2deg^2={}", 2 * dg * dg));
        }
        if dg > s * s {
            fail(&format!("deg={dg} > s^2={}", s * s));
        }
        if (s as f64) < (dg as f64).sqrt() - 1e-12 {
            fail(&format!("s={s} < sqrt(deg={dg})"));
        }
        if !(bs <= d && d <= bs.pow(4)) {
            fail(&format!("bs<=D<=bs^4 broken: bs={bs} D={d}"));
        }
        if !(dg <= d && d <= 16 * dg.pow(8)) {
            fail(&format!("deg<=D<=16deg^8 broken: deg={dg} D={d}"));
        }
        if bs > 2 * s.pow(4) {
            fail(&format!("bs={bs} > 2s^4={}", 2 * s.pow(4)));
        }
        let ratio = bs as f64 / (s * s) as f64;
        if ratio > stats.max_ratio {
            stats.max_ratio = ratio;
            stats.ratio_witness = Some(code);
        }
    }
    stats
}

/// Checks the full inequality chain — s <= bs <= C <= D <= n,
/// bs <= 2deg^2, deg <= s^2, s >= sqrt(deg), bs <= D <= bs^4,
/// deg <= D <= 16deg^8, bs <= 2s^4 — for every function on n variables
/// (exhaustive for n <= 4, seeded sampling beyond).
pub fn verify_chain(n: usize, seed: u64, samples: u64, jobs: usize) -> Result<CampaignReport> {
    let start = Instant::now();
    let caps = Caps::default();
    let exhaustive = n <= 4;
    let total: u64 = if exhaustive {
        1u64 << (1u64 << n)
    } else {
        if n > caps.bs_full || n > caps.depth {
            return Err(Error::CapExceeded {
                operation: "verify_chain",
                n,
                cap: caps.bs_full.min(caps.depth),
            });
        }
        samples
    };
    let codes: Vec<u64> = if exhaustive {
        (0..total).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mask = if 1usize << n >= 64 {
            u64::MAX
        } else {
            (1u64 << (1u64 << n)) - 1
        };
        (0..total).map(|_| rng.gen::<u64>() & mask).collect()
    };

    let jobs = jobs.max(1).min(codes.len().max(1));
    let chunk = codes.len().div_ceil(jobs);
    let parts: Vec<ChainStats> = std::thread::scope(|scope| {
        let handles: Vec<_> = codes
            .chunks(chunk.max(1))
            .map(|slice| {
                let caps = &caps;
                scope.spawn(move || chain_check_range(n, slice.iter().copied(), caps))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    // associative merge in slice order keeps serial and parallel output identical
    let mut checked = 0u64;
    let mut violations = Vec::new();
    let mut max_ratio = 0.0f64;
    let mut witness = None;
    for part in parts {
        checked += part.checked;
        violations.extend(part.violations);
        if part.max_ratio > max_ratio {
            max_ratio = part.max_ratio;
            witness = part.ratio_witness;
        }
    }

    Ok(CampaignReport {
        campaign: "chain".into(),
        n,
        seed: (!exhaustive).then_some(seed),
        checked,
        violations,
        witnesses: json!({
            "max_bs_over_s_squared": round12(max_ratio),
            "witness_table": witness.map(|w| format!("{w:#x}")),
        }),
        duration_ms: start.elapsed().as_millis(),
    })
}

/// Descriptive search for the largest bs/s^2 ratio over non-constant
/// functions on n variables (exhaustive, n <= 4).
pub fn extremal_ratio(n: usize) -> Result<CampaignReport> {
    if n > 4 {
        return Err(Error::CapExceeded {
            operation: "extremal_ratio",
            n,
            cap: 4,
        });
    }
    let start = Instant::now();
    let caps = Caps::default();
    let mut checked = 0u64;
    let mut best = 0.0f64;
    let mut best_code = None;
    let mut best_parts = (0u64, 0u64);
    for code in 0..1u64 << (1u64 << n) {
        let f = function_from_code(n, code);
        if f.is_constant() {
            continue; // s = 0, ratio undefined
        }
        checked += 1;
        let s = sensitivity(&f).value as u64;
        let bs = block_sensitivity(&f, &caps).unwrap().value as u64;
        let ratio = bs as f64 / (s * s) as f64;
        if ratio > best {
            best = ratio;
            best_code = Some(code);
            best_parts = (bs, s);
        }
    }
    Ok(CampaignReport {
        campaign: "ratio".into(),
        n,
        seed: None,
        checked,
        violations: Vec::new(),
        witnesses: json!({
            "max_bs_over_s_squared": round12(best),
            "bs": best_parts.0,
            "s": best_parts.1,
            "witness_table": best_code.map(|w| format!("{w:#x}")),
        }),
        duration_ms: start.elapsed().as_millis(),
    })
}

/// Exact g(n, k): the least t such that every t-vertex induced subgraph
/// of Q_n has maximum degree at least k. Sweeps all 2^{2^n} vertex
/// subsets; n <= 4.
pub fn compute_g(n: usize, k: usize) -> Result<usize> {
    if n > 4 {
        return Err(Error::CapExceeded {
            operation: "compute_g",
            n,
            cap: 4,
        });
    }
    let mut largest_low_degree = 0usize;
    for pick in 0u64..1 << (1u64 << n) {
        let vertices: Vec<usize> = (0..1usize << n).filter(|&v| pick >> v & 1 == 1).collect();
        if vertices.len() <= largest_low_degree {
            continue;
        }
        let g = InducedSubgraph::from_vertices(n, &vertices).unwrap();
        if g.max_degree() < k {
            largest_low_degree = vertices.len();
        }
    }
    Ok(largest_low_degree + 1)
}

/// The g(n, k) campaign: computes the exact value and, when k = ceil(sqrt n),
/// checks it equals 2^{n-1} + 1.
pub fn verify_g(n: usize, k: usize) -> Result<CampaignReport> {
    let start = Instant::now();
    let value = compute_g(n, k)?;
    let mut violations = Vec::new();
    let sqrt_k = (n as f64).sqrt().ceil() as usize;
    if k == sqrt_k && value != (1usize << (n - 1)) + 1 {
        violations.push(format!(
            "g({n}, ceil(sqrt {n})) = {value}, expected {}",
            (1usize << (n - 1)) + 1
        ));
    }
    Ok(CampaignReport {
        campaign: "g".into(),
        n,
        seed: None,
        checked: 1u64 << (1u64 << n),
        violations,
        witnesses: json!({ "k": k, "g": value }),
        duration_ms: start.elapsed().as_millis(),
    })
}

/// Parity-twist identities for every function on n variables (n <= 4):
/// s(g, x) = n - s(f, x) exactly, g-hat(S) = f-hat([n] \ S) and
/// E(g) = f-hat([n]) within 1e-12, and for unbalanced g the existence of
/// a point with s(g, x) <= n - ceil(sqrt n).
pub fn verify_gl_equivalence(n: usize) -> Result<CampaignReport> {
    if n > 4 {
        return Err(Error::CapExceeded {
            operation: "verify_gl_equivalence",
            n,
            cap: 4,
        });
    }
    let start = Instant::now();
    let full = (1usize << n) - 1;
    let mut checked = 0u64;
    let mut violations = Vec::new();
    for code in 0..1u64 << (1u64 << n) {
        let f = function_from_code(n, code);
        let g = gl_twist(&f);
        checked += 1;
        for x in 0..1usize << n {
            if sensitivity_at(&g, x) != n - sensitivity_at(&f, x) {
                violations.push(format!("f={code:#x}: s(g,{x}) != n - s(f,{x})"));
            }
            let (deg_in_side, ns) = degree_sensitivity_link(&g, x);
            if deg_in_side != ns {
                violations.push(format!("f={code:#x}: degree/sensitivity link broken at {x}"));
            }
        }
        let fh = fourier(&f);
        let gh = fourier(&g);
        for s in 0..1usize << n {
            if (gh.coeff(s) - fh.coeff(full & !s)).abs() > 1e-12 {
                violations.push(format!("f={code:#x}: g-hat({s:#b}) != f-hat(complement)"));
            }
        }
        let mean_g: f64 = g.pm1_values().iter().sum::<f64>() / (1 << n) as f64;
        if (mean_g - fh.coeff(full)).abs() > 1e-12 {
            violations.push(format!("f={code:#x}: E(g) != f-hat([n])"));
        }
        if mean_g.abs() > 1e-12 {
            // one side of g's partition holds a majority, so some point
            // has in-side degree >= sqrt(n), i.e. low sensitivity
            let bound = n - (n as f64).sqrt().ceil() as usize;
            let exists = (0..1usize << n).any(|x| sensitivity_at(&g, x) <= bound);
            if !exists {
                violations.push(format!(
                    "f={code:#x}: unbalanced twist with no point of sensitivity <= {bound}"
                ));
            }
        }
    }
    Ok(CampaignReport {
        campaign: "gl".into(),
        n,
        seed: None,
        checked,
        violations,
        witnesses: json!(null),
        duration_ms: start.elapsed().as_millis(),
    })
}

/// Next bitmask with the same popcount (Gosper's hack).
fn next_combination(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// Degree and spectral bounds for majority-side subgraphs: exhaustive
/// over all C(2^n, 2^{n-1}+1) subsets for n <= 4, seeded random subsets
/// beyond. Checks Delta >= ceil(sqrt n), lambda1 >= sqrt(n) - 1e-6 and
/// Delta >= lambda1 - 1e-9.
pub fn verify_huang(n: usize, seed: u64, samples: u64) -> Result<CampaignReport> {
    if n < 2 || n > 6 {
        return Err(Error::CapExceeded {
            operation: "verify_huang",
            n,
            cap: 6,
        });
    }
    let start = Instant::now();
    let size = (1usize << (n - 1)) + 1;
    let vertices_of = |mask: u64| -> Vec<usize> {
        (0..1usize << n).filter(|&v| mask >> v & 1 == 1).collect()
    };
    let a = SignedMatrix::huang(n)?;
    let sqrt_n = (n as f64).sqrt();
    let need_delta = sqrt_n.ceil() as usize;
    let mut checked = 0u64;
    let mut violations = Vec::new();
    let mut check_subset = |vertices: &[usize]| {
        checked += 1;
        let h = InducedSubgraph::from_vertices(n, vertices).unwrap();
        let delta = h.max_degree();
        let b = a.principal_submatrix(vertices).unwrap();
        let lambda1 = b.lambda1().unwrap();
        if delta < need_delta {
            violations.push(format!("subset {vertices:?}: Delta = {delta} < {need_delta}"));
        }
        if lambda1 < sqrt_n - 1e-6 {
            violations.push(format!(
                "subset {vertices:?}: lambda1 = {lambda1} < sqrt({n})"
            ));
        }
        if (delta as f64) < lambda1 - 1e-9 {
            violations.push(format!("subset {vertices:?}: Delta < lambda1"));
        }
    };
    let exhaustive = n <= 4;
    if exhaustive {
        let limit = 1u64 << (1 << n); // n <= 4 here
        let mut mask = (1u64 << size) - 1;
        loop {
            check_subset(&vertices_of(mask));
            let next = next_combination(mask);
            if next >= limit {
                break;
            }
            mask = next;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            // sample a uniformly random subset of the required size
            let mut all: Vec<usize> = (0..1usize << n).collect();
            for i in 0..size {
                let j = rng.gen_range(i..all.len());
                all.swap(i, j);
            }
            let mut vertices: Vec<usize> = all[..size].to_vec();
            vertices.sort_unstable();
            check_subset(&vertices);
        }
    }
    Ok(CampaignReport {
        campaign: "huang".into(),
        n,
        seed: (!exhaustive).then_some(seed),
        checked,
        violations,
        witnesses: json!({ "subset_size": size }),
        duration_ms: start.elapsed().as_millis(),
    })
}

/// The half-cube construction from the sqrt-sized partition: cardinality
/// formula, majority-side size, and degree bounds (tight at perfect
/// squares).
pub fn verify_chung(n: usize) -> Result<CampaignReport> {
    if n < 2 || n > 16 {
        return Err(Error::CapExceeded {
            operation: "verify_chung",
            n,
            cap: 16,
        });
    }
    let start = Instant::now();
    let family = chung_partition(n);
    let k = family.members().len();
    let x = chung_subgraph(&family);
    let mut violations = Vec::new();

    let sign = if (n + k + 1) % 2 == 0 { 1i64 } else { -1 };
    let expected = (1i64 << (n - 1)) + sign;
    if x.len() as i64 != expected {
        violations.push(format!("|X(F)| = {}, expected {expected}", x.len()));
    }

    let complement = x.complement();
    let (larger, smaller) = if x.len() >= complement.len() {
        (&x, &complement)
    } else {
        (&complement, &x)
    };
    if larger.len() != (1usize << (n - 1)) + 1 {
        violations.push(format!(
            "larger side has {} vertices, expected {}",
            larger.len(),
            (1usize << (n - 1)) + 1
        ));
    }
    let delta_larger = larger.max_degree();
    let delta_smaller = smaller.max_degree();
    let sqrt_n = (n as f64).sqrt();
    let ceil_sqrt = sqrt_n.ceil() as usize;
    if delta_larger > ceil_sqrt {
        violations.push(format!(
            "Delta(larger) = {delta_larger} > ceil(sqrt {n}) = {ceil_sqrt}"
        ));
    }
    let perfect_square = ceil_sqrt * ceil_sqrt == n;
    if perfect_square && delta_larger != ceil_sqrt {
        violations.push(format!(
            "Delta(larger) = {delta_larger} != sqrt({n}) at a perfect square"
        ));
    }
    // Delta on both sides is bounded by max(r(F), t(F))
    let bound = family_rank(&family).max(family_t(&family)?);
    if delta_larger.max(delta_smaller) > bound {
        violations.push(format!(
            "Delta = {} exceeds max(r, t) = {bound}",
            delta_larger.max(delta_smaller)
        ));
    }
    Ok(CampaignReport {
        campaign: "chung".into(),
        n,
        seed: None,
        checked: 1,
        violations,
        witnesses: json!({
            "k": k,
            "x_size": x.len(),
            "larger_side_size": larger.len(),
            "delta_larger": delta_larger,
            "delta_smaller": delta_smaller,
        }),
        duration_ms: start.elapsed().as_millis(),
    })
}

fn round12(x: f64) -> f64 {
    format!("{x:.12e}").parse().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_n2_all_pass() {
        let report = verify_chain(2, 0, 0, 1).unwrap();
        assert_eq!(report.checked, 16);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn chain_n3_all_pass() {
        let report = verify_chain(3, 0, 0, 2).unwrap();
        assert_eq!(report.checked, 256);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn chain_parallel_matches_serial() {
        let serial = verify_chain(3, 0, 0, 1).unwrap();
        let parallel = verify_chain(3, 0, 0, 4).unwrap();
        assert_eq!(
            serde_json::to_string(&serial).unwrap(),
            serde_json::to_string(&parallel).unwrap()
        );
    }

    #[test]
    fn chain_sampled_n5_deterministic() {
        let a = verify_chain(5, 42, 40, 2).unwrap();
        let b = verify_chain(5, 42, 40, 2).unwrap();
        assert!(a.passed(), "{:?}", a.violations);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn ratio_n2() {
        let report = extremal_ratio(2).unwrap();
        assert_eq!(report.checked, 14); // 16 minus 2 constants
        let max = report.witnesses["max_bs_over_s_squared"].as_f64().unwrap();
        assert!(max > 0.0 && max <= 2.0);
    }

    #[test]
    fn ratio_rubinstein_value() {
        // at n = 4, Rubinstein k=2 has bs = 2, s = 2 -> ratio 0.5
        let f = crate::constructions::rubinstein(2).unwrap();
        let s = sensitivity(&f).value;
        let bs = block_sensitivity(&f, &Caps::default()).unwrap().value;
        assert_eq!((s, bs), (2, 2));
    }

    #[test]
    fn g_small_values() {
        assert_eq!(compute_g(2, 1).unwrap(), 3);
        assert_eq!(compute_g(2, 2).unwrap(), 3); // = 2^{n-1} + 1
        assert_eq!(compute_g(3, 2).unwrap(), 5);
        let report = verify_g(3, 2).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn gl_exhaustive_n3() {
        let report = verify_gl_equivalence(3).unwrap();
        assert_eq!(report.checked, 256);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn huang_exhaustive_n2_n3() {
        let r2 = verify_huang(2, 0, 0).unwrap();
        assert_eq!(r2.checked, 4); // C(4, 3)
        assert!(r2.passed(), "{:?}", r2.violations);
        let r3 = verify_huang(3, 0, 0).unwrap();
        assert_eq!(r3.checked, 56); // C(8, 5)
        assert!(r3.passed(), "{:?}", r3.violations);
    }

    #[test]
    fn chung_n4_n5_n9() {
        for n in [4usize, 5, 9] {
            let report = verify_chung(n).unwrap();
            assert!(report.passed(), "n={n}: {:?}", report.violations);
        }
    }

    #[test]
    fn gosper_enumerates_combinations() {
        let mut mask = 0b0111u64;
        let mut count = 1;
        while mask < 1 << 6 {
            let next = next_combination(mask);
            if next >= 1 << 6 {
                break;
            }
            mask = next;
            count += 1;
        }
        assert_eq!(count, 20); // C(6, 3)
    }
}
