//! Induced subgraphs of Q_n, degree statistics, the parity twist linking
//! subgraph degrees to sensitivity, and the low-degree half-cube
//! construction from set families.

use crate::measures::sensitivity_at;
use crate::{BooleanFunction, Error, Result, MAX_VARS};

/// A vertex subset of Q_n; adjacency is implicit (u ~ v iff u xor v is a
/// power of two).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    n: usize,
    words: Vec<u64>,
}

impl InducedSubgraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        let words = vec![0u64; (1usize << n).div_ceil(64)];
        Ok(InducedSubgraph { n, words })
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &v in vertices {
            if v >= 1 << n {
                return Err(Error::Invalid(format!(
                    "vertex {v} out of range for Q_{n}"
                )));
            }
            g.insert(v);
        }
        Ok(g)
    }

    /// Vertices of Q_n on which `f` takes the value `level`.
    pub fn from_function(f: &BooleanFunction, level: u8) -> Self {
        let mut g = Self::empty(f.n()).unwrap();
        for x in 0..f.len() {
            if f.value(x) == level {
                g.insert(x);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..1usize << self.n).filter(move |&v| self.contains(v))
    }

    pub fn complement(&self) -> InducedSubgraph {
        let mut g = Self::empty(self.n).unwrap();
        for v in 0..1usize << self.n {
            if !self.contains(v) {
                g.insert(v);
            }
        }
        g
    }

    /// Degree of `v` inside the subgraph.
    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&i| self.contains(v ^ (1 << i))).count()
    }

    /// Maximum degree; the empty subgraph reports 0 by convention.
    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn average_degree(&self) -> f64 {
        let v = self.len();
        if v == 0 {
            0.0
        } else {
            2.0 * self.edge_count() as f64 / v as f64
        }
    }

    /// Subgraph file format: line 1 is n, following lines one vertex index
    /// in decimal each.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for v in self.vertices() {
            out.push_str(&format!("{v}\n"));
        }
        out
    }

    pub fn from_file_string(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidFile("missing dimension line".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::InvalidFile("line 1 is not a decimal integer".into()))?;
        let mut g = Self::empty(n)?;
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let v: usize = line
                .parse()
                .map_err(|_| Error::InvalidFile(format!("bad vertex index '{line}'")))?;
            if v >= 1 << n {
                return Err(Error::Invalid(format!(
                    "vertex {v} out of range for Q_{n}"
                )));
            }
            g.insert(v);
        }
        Ok(g)
    }
}

/// Γ(G) for the partition of Q_n induced by f's level sets: the larger of
/// the two maximum degrees.
pub fn gamma(f: &BooleanFunction) -> usize {
    let ones = InducedSubgraph::from_function(f, 1);
    let zeros = InducedSubgraph::from_function(f, 0);
    ones.max_degree().max(zeros.max_degree())
}

/// (degree of x inside its own level set, n - s(f, x)); the two are
/// always equal.
pub fn degree_sensitivity_link(f: &BooleanFunction, x: usize) -> (usize, usize) {
    let fx = f.value(x);
    let deg = (0..f.n()).filter(|&i| f.value(x ^ (1 << i)) == fx).count();
    (deg, f.n() - sensitivity_at(f, x))
}

/// The parity twist: flip f's output bit exactly at odd-weight inputs.
/// In the ±1 view, g(x) = f(x) * (-1)^{sum x_i}, so s(g, x) = n - s(f, x)
/// at every point.
pub fn gl_twist(f: &BooleanFunction) -> BooleanFunction {
    let table: Vec<u8> = f
        .table()
        .iter()
        .enumerate()
        .map(|(x, &b)| b ^ (x.count_ones() % 2) as u8)
        .collect();
    BooleanFunction::from_truth_table(f.n(), &table).unwrap()
}

/// A collection of nonempty subsets of [n], each stored as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    members: Vec<u32>,
}

impl SetFamily {
    pub fn new(n: usize, members: Vec<u32>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        for (index, &m) in members.iter().enumerate() {
            if m == 0 {
                return Err(Error::EmptyFamilyMember { index });
            }
            if m & !full != 0 {
                return Err(Error::Invalid(format!(
                    "member {index} is not a subset of [{n}]"
                )));
            }
            if members[..index].contains(&m) {
                return Err(Error::DuplicateFamilyMember { index });
            }
        }
        Ok(SetFamily { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }
}

/// Partition of [n] into k parts with sizes in {floor(sqrt n), ceil(sqrt n)},
/// contiguous index ranges, larger parts first. Tries k = ceil(sqrt n)
/// first, then k = floor(sqrt n).
pub fn chung_partition(n: usize) -> SetFamily {
    assert!(n >= 1);
    let floor = (n as f64).sqrt().floor() as usize;
    let floor = if (floor + 1) * (floor + 1) <= n {
        floor + 1
    } else {
        floor
    };
    let ceil = if floor * floor == n { floor } else { floor + 1 };
    let pick = |k: usize| -> Option<(usize, usize)> {
        // y parts of size ceil, k - y of size floor
        let y = n.checked_sub(k * floor)?;
        if ceil == floor {
            (y == 0).then_some((k, 0))
        } else {
            (y <= k).then_some((k, y))
        }
    };
    let (k, big_parts) = pick(ceil).or_else(|| pick(floor)).expect(
        "a valid partition into floor/ceil sqrt parts always exists",
    );
    let mut members = Vec::with_capacity(k);
    let mut next = 0usize;
    for i in 0..k {
        let size = if i < big_parts { ceil } else { floor };
        let mask = (((1u64 << size) - 1) << next) as u32;
        members.push(mask);
        next += size;
    }
    debug_assert_eq!(next, n);
    SetFamily::new(n, members).unwrap()
}

/// X(F): even-weight vertices whose support contains some member of F,
/// plus odd-weight vertices whose support contains none.
pub fn chung_subgraph(family: &SetFamily) -> InducedSubgraph {
    let n = family.n();
    let mut g = InducedSubgraph::empty(n).unwrap();
    for x in 0..1usize << n {
        let covers = family
            .members()
            .iter()
            .any(|&f| (f as usize) & x == f as usize);
        let even = x.count_ones() % 2 == 0;
        if covers == even {
            g.insert(x);
        }
    }
    g
}

/// r(F): largest member size.
pub fn family_rank(family: &SetFamily) -> usize {
    family
        .members()
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// t(F): size of the largest disjointly representable subfamily — one
/// where every member owns a private element absent from all the others.
/// Exact search over subfamilies; capped at 20 members.
pub fn family_t(family: &SetFamily) -> Result<usize> {
    let members = family.members();
    if members.len() > 20 {
        return Err(Error::CapExceeded {
            operation: "family_t",
            n: members.len(),
            cap: 20,
        });
    }
    let mut best = 0usize;
    for pick in 1u32..1 << members.len() {
        let size = pick.count_ones() as usize;
        if size <= best {
            continue;
        }
        let chosen: Vec<u32> = (0..members.len())
            .filter(|&i| pick >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        let representable = chosen.iter().enumerate().all(|(i, &fi)| {
            let others = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0u32, |acc, (_, &fj)| acc | fj);
            fi & !others != 0
        });
        if representable {
            best = size;
        }
    }
    Ok(best)
}
