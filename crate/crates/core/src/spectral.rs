//! Signed adjacency matrices of the cube, their algebra, eigenvalues and
//! interlacing.

use serde::Serialize;

use crate::hypercube::InducedSubgraph;
use crate::{Error, Result};

/// Largest cube dimension for the full signed matrix (2^12 x 2^12).
pub const MAX_MATRIX_DIM: usize = 12;
/// Largest matrix size accepted by the dense eigensolver.
pub const MAX_SPECTRUM_DIM: usize = 64;

/// Symmetric matrix with entries in {-1, 0, 1}, rows and columns labeled
/// by cube vertex indices. Nonzero entries only on cube edges.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedMatrix {
    dim: usize,
    entries: Vec<i8>,
    labels: Vec<usize>,
    cube_dim: Option<usize>,
}

impl SignedMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// The dimension n of the ambient cube, when known.
    pub fn cube_dim(&self) -> Option<usize> {
        self.cube_dim
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.dim + j]
    }

    /// The recursively signed cube matrix: A(1) = [0 1; 1 0] and
    /// A(n) = [A(n-1), I; I, -A(n-1)], the top bit of the vertex index
    /// distinguishing the two halves. Satisfies A^2 = nI.
    pub fn huang(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_MATRIX_DIM {
            return Err(Error::CapExceeded {
                operation: "huang_matrix",
                n,
                cap: MAX_MATRIX_DIM,
            });
        }
        let mut entries: Vec<i8> = vec![0, 1, 1, 0];
        let mut dim = 2usize;
        for _ in 1..n {
            let new_dim = dim * 2;
            let mut next = vec![0i8; new_dim * new_dim];
            for i in 0..dim {
                for j in 0..dim {
                    let e = entries[i * dim + j];
                    next[i * new_dim + j] = e;
                    next[(dim + i) * new_dim + (dim + j)] = -e;
                }
                next[i * new_dim + (dim + i)] = 1;
                next[(dim + i) * new_dim + i] = 1;
            }
            entries = next;
            dim = new_dim;
        }
        Ok(SignedMatrix {
            dim,
            entries,
            labels: (0..dim).collect(),
            cube_dim: Some(n),
        })
    }

    /// Unmodified 0/1 adjacency matrix of Q_n, for contrast with the
    /// signed construction.
    pub fn cube_adjacency(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_MATRIX_DIM {
            return Err(Error::CapExceeded {
                operation: "cube_adjacency",
                n,
                cap: MAX_MATRIX_DIM,
            });
        }
        let dim = 1usize << n;
        let mut entries = vec![0i8; dim * dim];
        for u in 0..dim {
            for i in 0..n {
                entries[u * dim + (u ^ (1 << i))] = 1;
            }
        }
        Ok(SignedMatrix {
            dim,
            entries,
            labels: (0..dim).collect(),
            cube_dim: Some(n),
        })
    }

    /// Exact integer check that A^2 = expected * I, using row sparsity.
    pub fn square_is_identity_times(&self, expected: i64) -> bool {
        let nz: Vec<Vec<usize>> = (0..self.dim)
            .map(|i| (0..self.dim).filter(|&j| self.entry(i, j) != 0).collect())
            .collect();
        let mut acc = vec![0i64; self.dim];
        for u in 0..self.dim {
            for x in &mut acc {
                *x = 0;
            }
            for &w in &nz[u] {
                let euw = self.entry(u, w) as i64;
                for &v in &nz[w] {
                    acc[v] += euw * self.entry(w, v) as i64;
                }
            }
            for v in 0..self.dim {
                let want = if v == u { expected } else { 0 };
                if acc[v] != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.entry(i, i) as i64).sum()
    }

    /// Restriction to the rows and columns labeled by `vertices`; labels
    /// are preserved.
    pub fn principal_submatrix(&self, vertices: &[usize]) -> Result<SignedMatrix> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let position: std::collections::HashMap<usize, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(pos, &lab)| (lab, pos))
            .collect();
        let mut rows = Vec::with_capacity(vertices.len());
        for &v in vertices {
            match position.get(&v) {
                Some(&pos) => rows.push(pos),
                None => {
                    return Err(Error::Invalid(format!("label {v} not present in matrix")))
                }
            }
        }
        let m = rows.len();
        let mut entries = vec![0i8; m * m];
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in rows.iter().enumerate() {
                entries[a * m + b] = self.entry(i, j);
            }
        }
        Ok(SignedMatrix {
            dim: m,
            entries,
            labels: vertices.to_vec(),
            cube_dim: self.cube_dim,
        })
    }

    /// Plain-text dense export: dimension line, then rows of
    /// space-separated integers.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.dim);
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| self.entry(i, j).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&e| e as f64).collect()
    }

    /// All eigenvalues, sorted non-increasing, by cyclic Jacobi rotations.
    /// Accepts matrices up to 64 x 64.
    pub fn full_spectrum(&self) -> Result<Vec<f64>> {
        if self.dim > MAX_SPECTRUM_DIM {
            return Err(Error::CapExceeded {
                operation: "full_spectrum",
                n: self.dim,
                cap: MAX_SPECTRUM_DIM,
            });
        }
        let mut a = self.to_f64();
        let n = self.dim;
        let off = |a: &[f64]| -> f64 {
            let mut s = 0.0;
            for i in 0..n {
                for j in i + 1..n {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
            s
        };
        for _sweep in 0..100 {
            if off(&a) < 1e-24 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a[p * n + q];
                    if apq.abs() < 1e-300 {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    let theta = (aqq - app) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[k * n + p];
                        let akq = a[k * n + q];
                        a[k * n + p] = c * akp - s * akq;
                        a[k * n + q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p * n + k];
                        let aqk = a[q * n + k];
                        a[p * n + k] = c * apk - s * aqk;
                        a[q * n + k] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
        eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
        Ok(eigs)
    }

    /// Largest eigenvalue. Small matrices use the dense solver; larger
    /// ones use shifted power iteration. The shift is sqrt(n) + 1 when
    /// the ambient cube dimension is known (every eigenvalue of a signed
    /// cube submatrix lies in [-sqrt(n), sqrt(n)]), otherwise one plus the
    /// largest absolute row sum.
    pub fn lambda1(&self) -> Result<f64> {
        if self.dim <= MAX_SPECTRUM_DIM {
            return Ok(self.full_spectrum()?[0]);
        }
        let shift = match self.cube_dim {
            Some(n) => (n as f64).sqrt() + 1.0,
            None => {
                1.0 + (0..self.dim)
                    .map(|i| (0..self.dim).map(|j| self.entry(i, j).abs() as f64).sum())
                    .fold(0.0f64, f64::max)
            }
        };
        self.power_iteration(shift)
    }

    fn power_iteration(&self, shift: f64) -> Result<f64> {
        use rand::{Rng, SeedableRng};
        let n = self.dim;
        let budget = 100_000usize;
        let mut v = vec![1.0f64 / (n as f64).sqrt(); n];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let mut rayleigh_prev = f64::INFINITY;
        let mut iterations = 0usize;
        loop {
            // w = (A + shift I) v
            let mut w = vec![0.0f64; n];
            for i in 0..n {
                let mut acc = shift * v[i];
                for j in 0..n {
                    let e = self.entry(i, j);
                    if e != 0 {
                        acc += e as f64 * v[j];
                    }
                }
                w[i] = acc;
            }
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-14 {
                // degenerate start vector: deterministic seeded restart
                for x in &mut v {
                    *x = rng.gen_range(-1.0..1.0);
                }
                let nv = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                for x in &mut v {
                    *x /= nv;
                }
                continue;
            }
            for x in &mut w {
                *x /= norm;
            }
            // Rayleigh quotient of the unshifted matrix
            let mut rayleigh = 0.0;
            for i in 0..n {
                let mut acc = 0.0;
                for j in 0..n {
                    let e = self.entry(i, j);
                    if e != 0 {
                        acc += e as f64 * w[j];
                    }
                }
                rayleigh += w[i] * acc;
            }
            v = w;
            iterations += 1;
            if (rayleigh - rayleigh_prev).abs() < 1e-10 {
                return Ok(rayleigh);
            }
            rayleigh_prev = rayleigh;
            if iterations >= budget {
                return Err(Error::IterationBudget { budget });
            }
        }
    }
}

/// Every Cauchy interlacing inequality for B a principal submatrix of A:
/// lambda_i >= mu_i >= lambda_{i + N - m}, within 1e-9.
pub fn interlacing_check(a: &SignedMatrix, b: &SignedMatrix) -> Result<bool> {
    let la = a.full_spectrum()?;
    let lb = b.full_spectrum()?;
    let (n, m) = (la.len(), lb.len());
    if m > n {
        return Err(Error::Invalid("submatrix larger than matrix".into()));
    }
    for i in 0..m {
        if la[i] < lb[i] - 1e-9 || lb[i] < la[i + n - m] - 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the degree/eigenvalue comparison for an induced subgraph.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct HuangCheck {
    pub delta: usize,
    pub lambda1: f64,
    /// Delta >= lambda1 (within 1e-9).
    pub degree_bound_ok: bool,
    /// lambda1 >= sqrt(n) (within 1e-6); only when |V| >= 2^{n-1} + 1.
    pub sqrt_bound_ok: Option<bool>,
}

/// Compares Delta(H) with the top eigenvalue of the corresponding signed
/// principal submatrix; for majority-side subgraphs additionally checks
/// lambda1 >= sqrt(n).
pub fn huang_bound_check(h: &InducedSubgraph) -> Result<HuangCheck> {
    let n = h.n();
    let a = SignedMatrix::huang(n)?;
    let vertices: Vec<usize> = h.vertices().collect();
    let b = a.principal_submatrix(&vertices)?;
    let lambda1 = b.lambda1()?;
    let delta = h.max_degree();
    let majority = h.len() >= (1usize << (n - 1)) + 1;
    Ok(HuangCheck {
        delta,
        lambda1,
        degree_bound_ok: delta as f64 >= lambda1 - 1e-9,
        sqrt_bound_ok: majority.then(|| lambda1 >= (n as f64).sqrt() - 1e-6),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case() {
        let a = SignedMatrix::huang(1).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.entry(0, 1), 1);
        assert_eq!(a.entry(1, 0), 1);
        assert_eq!(a.entry(0, 0), 0);
        assert!(a.square_is_identity_times(1));
    }

    #[test]
    fn n2_rows_match_recursion() {
        let a = SignedMatrix::huang(2).unwrap();
        let expected: [[i8; 4]; 4] = [
            [0, 1, 1, 0],
            [1, 0, 0, 1],
            [1, 0, 0, -1],
            [0, 1, -1, 0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.entry(i, j), expected[i][j], "({i},{j})");
            }
        }
    }

    #[test]
    fn entries_only_on_cube_edges_with_closed_form_sign() {
        // independent oracle: unwinding the recursion, the edge (u, v)
        // with u xor v = 1 << j carries sign (-1)^{popcount(u >> (j+1))}
        for n in 1..=5 {
            let a = SignedMatrix::huang(n).unwrap();
            for u in 0..a.dim() {
                for v in 0..a.dim() {
                    let x = u ^ v;
                    let expected = if x != 0 && x & (x - 1) == 0 {
                        let j = x.trailing_zeros() as usize;
                        if (u >> (j + 1)).count_ones() % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    } else {
                        0
                    };
                    assert_eq!(a.entry(u, v), expected, "n={n} ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn four_cycles_carry_odd_minus_count() {
        for n in 2..=5usize {
            let a = SignedMatrix::huang(n).unwrap();
            for u in 0..a.dim() {
                for i in 0..n {
                    for j in i + 1..n {
                        let (b, c, d) = (u ^ (1 << i), u ^ (1 << j), u ^ (1 << i) ^ (1 << j));
                        let negatives = [(u, b), (b, d), (d, c), (c, u)]
                            .iter()
                            .filter(|&&(x, y)| a.entry(x, y) == -1)
                            .count();
                        // sign product around every square is -1
                        assert_eq!(negatives % 2, 1, "n={n} cycle at {u} dims {i},{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn square_check_small() {
        for n in 1..=6 {
            let a = SignedMatrix::huang(n).unwrap();
            assert!(a.square_is_identity_times(n as i64));
            assert_eq!(a.trace(), 0);
        }
    }

    #[test]
    fn principal_submatrix_example() {
        let a = SignedMatrix::huang(2).unwrap();
        let b = a.principal_submatrix(&[0, 1, 2]).unwrap();
        assert_eq!(b.dim(), 3);
        let expected: [[i8; 3]; 3] = [[0, 1, 1], [1, 0, 0], [1, 0, 0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.entry(i, j), expected[i][j]);
            }
        }
        let full = a.principal_submatrix(&[0, 1, 2, 3]).unwrap();
        assert_eq!(full, a);
        let single = a.principal_submatrix(&[2]).unwrap();
        assert_eq!(single.entry(0, 0), 0);
        assert!(a.principal_submatrix(&[]).is_err());
    }

    #[test]
    fn spectrum_n2() {
        let a = SignedMatrix::huang(2).unwrap();
        let eigs = a.full_spectrum().unwrap();
        let r2 = 2.0f64.sqrt();
        let expected = [r2, r2, -r2, -r2];
        for (e, x) in eigs.iter().zip(expected) {
            assert!((e - x).abs() < 1e-10, "{eigs:?}");
        }
        assert!((a.lambda1().unwrap() - r2).abs() < 1e-9);
    }

    #[test]
    fn spectrum_n3_plus_minus_sqrt3() {
        let a = SignedMatrix::huang(3).unwrap();
        let eigs = a.full_spectrum().unwrap();
        let r3 = 3.0f64.sqrt();
        for (i, e) in eigs.iter().enumerate() {
            let want = if i < 4 { r3 } else { -r3 };
            assert!((e - want).abs() < 1e-9, "{eigs:?}");
        }
    }

    #[test]
    fn submatrix_spectrum_characteristic() {
        // {0,1,2} of A_2 has spectrum {sqrt2, 0, -sqrt2}
        let a = SignedMatrix::huang(2).unwrap();
        let b = a.principal_submatrix(&[0, 1, 2]).unwrap();
        let eigs = b.full_spectrum().unwrap();
        let r2 = 2.0f64.sqrt();
        assert!((eigs[0] - r2).abs() < 1e-10);
        assert!(eigs[1].abs() < 1e-10);
        assert!((eigs[2] + r2).abs() < 1e-10);
        assert!((b.lambda1().unwrap() - r2).abs() < 1e-9);
    }

    #[test]
    fn lambda1_power_iteration_path() {
        // A_7 is 128 x 128, past the dense-solver cap
        let a = SignedMatrix::huang(7).unwrap();
        assert!((a.lambda1().unwrap() - 7.0f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn lambda1_zero_matrix() {
        let a = SignedMatrix::huang(2).unwrap();
        let z = a.principal_submatrix(&[0]).unwrap();
        assert_eq!(z.lambda1().unwrap(), 0.0);
    }

    #[test]
    fn interlacing_self_and_small() {
        let a = SignedMatrix::huang(2).unwrap();
        assert!(interlacing_check(&a, &a).unwrap());
        for size in 1..=3usize {
            for pick in 0u32..16 {
                if pick.count_ones() as usize != size {
                    continue;
                }
                let vs: Vec<usize> = (0..4).filter(|&i| pick >> i & 1 == 1).collect();
                let b = a.principal_submatrix(&vs).unwrap();
                assert!(interlacing_check(&a, &b).unwrap(), "{vs:?}");
            }
        }
    }

    #[test]
    fn unmodified_adjacency_q3_spectrum() {
        let a = SignedMatrix::cube_adjacency(3).unwrap();
        let eigs = a.full_spectrum().unwrap();
        let expected = [3.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -3.0];
        for (e, x) in eigs.iter().zip(expected) {
            assert!((e - x).abs() < 1e-9, "{eigs:?}");
        }
    }

    #[test]
    fn huang_bound_small_cases() {
        let h = InducedSubgraph::from_vertices(2, &[0, 1, 2]).unwrap();
        let check = huang_bound_check(&h).unwrap();
        assert_eq!(check.delta, 2);
        assert!((check.lambda1 - 2.0f64.sqrt()).abs() < 1e-9);
        assert!(check.degree_bound_ok);
        assert_eq!(check.sqrt_bound_ok, Some(true));
    }

    #[test]
    fn matrix_text_export() {
        let a = SignedMatrix::huang(1).unwrap();
        assert_eq!(a.to_text(), "2\n0 1\n1 0\n");
    }

    #[test]
    fn cap_rejected() {
        assert!(SignedMatrix::huang(13).is_err());
    }
}
