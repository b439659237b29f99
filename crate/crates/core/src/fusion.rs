//! Fusion rings: integer structure constants with unit and duality,
//! exhaustive axiom validation, fusion matrices and Frobenius–Perron
//! dimensions.

use serde::{Deserialize, Serialize};

use crate::error::{structural, Error, Result};
use crate::numeric::{int_mat_vec, perron_vector};

/// Dense square integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// Grothendieck ring of a fusion category.
///
/// `n[a][b][c]` is the multiplicity of simple `c` in `a ⊗ b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RingFile", into = "RingFile")]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    n: Vec<Vec<Vec<i64>>>,
}

/// On-disk layout, keys in emission order.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    rank: usize,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<i64>>>,
}

impl TryFrom<RingFile> for FusionRing {
    type Error = Error;

    fn try_from(f: RingFile) -> Result<Self> {
        if f.labels.len() != f.rank {
            return Err(structural(format!(
                "rank is {} but {} labels given",
                f.rank,
                f.labels.len()
            )));
        }
        FusionRing::new(f.labels, f.unit, f.dual, f.n)
    }
}

impl From<FusionRing> for RingFile {
    fn from(r: FusionRing) -> Self {
        RingFile {
            rank: r.rank(),
            labels: r.labels,
            unit: r.unit,
            dual: r.dual,
            n: r.n,
        }
    }
}

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

impl Violation {
    fn new(axiom: &str, indices: Vec<usize>, lhs: i64, rhs: i64) -> Self {
        Violation {
            axiom: axiom.to_string(),
            indices,
            lhs,
            rhs,
        }
    }
}

/// Outcome of [`validate_fusion_ring`]. `valid` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FusionReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl FusionReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> Self {
        FusionReport {
            valid: violations.is_empty(),
            violations,
        }
    }
}

impl FusionRing {
    /// Builds a ring after checking shapes, index ranges and signs.
    /// Ring axioms are not checked here; see [`validate_fusion_ring`].
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        n: Vec<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        let rank = labels.len();
        if rank == 0 {
            return Err(structural("fusion ring must have at least one simple"));
        }
        if unit >= rank {
            return Err(structural(format!("unit index {unit} out of range")));
        }
        if dual.len() != rank {
            return Err(structural(format!(
                "dual has length {}, expected {rank}",
                dual.len()
            )));
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= rank) {
            return Err(structural(format!("dual index {bad} out of range")));
        }
        if n.len() != rank
            || n.iter()
                .any(|m| m.len() != rank || m.iter().any(|r| r.len() != rank))
        {
            return Err(structural(format!(
                "N must be a {rank}x{rank}x{rank} array"
            )));
        }
        for (a, m) in n.iter().enumerate() {
            for (b, row) in m.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    if x < 0 {
                        return Err(structural(format!("negative entry N[{a}][{b}][{c}] = {x}")));
                    }
                }
            }
        }
        Ok(FusionRing {
            labels,
            unit,
            dual,
            n,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// Multiplicity of `c` in `a ⊗ b`.
    pub fn n(&self, a: usize, b: usize, c: usize) -> i64 {
        self.n[a][b][c]
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<i64>>] {
        &self.n
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|a| (0..r).all(|b| (0..r).all(|c| self.n[a][b][c] == self.n[b][a][c])))
    }

    /// Stable content hash used to tie instance files to a ring.
    pub fn fingerprint(&self) -> String {
        use sha2::{Digest, Sha256};
        let canonical = serde_json::to_vec(self).expect("ring serialises");
        let digest = Sha256::digest(&canonical);
        let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
        format!("sha256:{hex}")
    }
}

/// Checks unit, duality, Frobenius reciprocity and associativity
/// exhaustively, listing every failing instance.
pub fn validate_fusion_ring(ring: &FusionRing) -> FusionReport {
    let r = ring.rank();
    let u = ring.unit;
    let delta = |x: usize, y: usize| i64::from(x == y);
    let mut out = Vec::new();

    for b in 0..r {
        for c in 0..r {
            if ring.n(u, b, c) != delta(b, c) {
                out.push(Violation::new(
                    "unit-left",
                    vec![b, c],
                    ring.n(u, b, c),
                    delta(b, c),
                ));
            }
            if ring.n(b, u, c) != delta(b, c) {
                out.push(Violation::new(
                    "unit-right",
                    vec![b, c],
                    ring.n(b, u, c),
                    delta(b, c),
                ));
            }
        }
    }

    if ring.dual(u) != u {
        out.push(Violation::new(
            "dual-unit",
            vec![u],
            ring.dual(u) as i64,
            u as i64,
        ));
    }
    for a in 0..r {
        let dd = ring.dual(ring.dual(a));
        if dd != a {
            out.push(Violation::new(
                "dual-involution",
                vec![a],
                dd as i64,
                a as i64,
            ));
        }
        for b in 0..r {
            let expect = delta(b, ring.dual(a));
            if ring.n(a, b, u) != expect {
                out.push(Violation::new(
                    "dual-pairing",
                    vec![a, b],
                    ring.n(a, b, u),
                    expect,
                ));
            }
        }
    }

    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let x = ring.n(a, b, c);
                let y = ring.n(ring.dual(a), c, b);
                if x != y {
                    out.push(Violation::new("frobenius-left", vec![a, b, c], x, y));
                }
                let z = ring.n(c, ring.dual(b), a);
                if x != z {
                    out.push(Violation::new("frobenius-right", vec![a, b, c], x, z));
                }
            }
        }
    }

    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    let lhs: i64 = (0..r).map(|e| ring.n(a, b, e) * ring.n(e, c, d)).sum();
                    let rhs: i64 = (0..r).map(|f| ring.n(b, c, f) * ring.n(a, f, d)).sum();
                    if lhs != rhs {
                        out.push(Violation::new("associativity", vec![a, b, c, d], lhs, rhs));
                    }
                }
            }
        }
    }

    FusionReport::from_violations(out)
}

/// Left-multiplication matrices: `(N_a)[c][b] = N[a][b][c]`
/// (row = output simple, column = input simple).
pub fn fusion_matrices(ring: &FusionRing) -> Vec<IntMatrix> {
    let r = ring.rank();
    (0..r)
        .map(|a| {
            (0..r)
                .map(|c| (0..r).map(|b| ring.n(a, b, c)).collect())
                .collect()
        })
        .collect()
}

/// Frobenius–Perron dimensions via the Perron vector of `Σ_a N_a`.
pub fn fp_dimensions(ring: &FusionRing) -> Result<Vec<f64>> {
    let mats = fusion_matrices(ring);
    let r = ring.rank();
    let mut total = vec![vec![0i64; r]; r];
    for m in &mats {
        for (i, row) in m.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                total[i][j] += x;
            }
        }
    }
    let (_, v) = perron_vector(&total)?;
    let k = argmax(&v);
    Ok(mats.iter().map(|m| int_mat_vec(m, &v)[k] / v[k]).collect())
}

pub(crate) fn argmax(v: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in v.iter().enumerate() {
        if x > v[best] {
            best = i;
        }
    }
    best
}

pub(crate) fn int_mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}
