//! Module categories at the level of multiplicities (NIM-reps).
//!
//! Index convention: `(M_u)[j][i] = dim Hom(c_u ⊲ m_i, m_j)`, row = target
//! simple, column = source simple. With this choice composition reads
//! `M_u · M_v = Σ_w N[u][v][w] · M_w` with no transposes.

use serde::Serialize;

use crate::error::{structural, Result};
use crate::fusion::{fusion_matrices, int_mat_mul, FusionRing, IntMatrix, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NimRep {
    module_rank: usize,
    m: Vec<IntMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NimRepReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl NimRep {
    /// One `k×k` non-negative matrix per ring simple.
    pub fn new(module_rank: usize, m: Vec<IntMatrix>) -> Result<Self> {
        if module_rank == 0 {
            return Err(structural("module rank must be at least 1"));
        }
        if m.is_empty() {
            return Err(structural("no action matrices given"));
        }
        for (u, mat) in m.iter().enumerate() {
            if mat.len() != module_rank || mat.iter().any(|row| row.len() != module_rank) {
                return Err(structural(format!(
                    "action matrix {u} is not {module_rank}x{module_rank}"
                )));
            }
            for (j, row) in mat.iter().enumerate() {
                if let Some(i) = row.iter().position(|&x| x < 0) {
                    return Err(structural(format!("negative entry M[{u}][{j}][{i}]")));
                }
            }
        }
        Ok(NimRep { module_rank, m })
    }

    pub fn module_rank(&self) -> usize {
        self.module_rank
    }

    /// Number of ring simples the action is indexed by.
    pub fn ring_rank(&self) -> usize {
        self.m.len()
    }

    pub fn matrix(&self, u: usize) -> &IntMatrix {
        &self.m[u]
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.m
    }

    /// `dim Hom(c_u ⊲ m_i, m_j)`.
    pub fn mult(&self, u: usize, j: usize, i: usize) -> i64 {
        self.m[u][j][i]
    }

    /// `Σ_u M_u`.
    pub fn total(&self) -> IntMatrix {
        let k = self.module_rank;
        let mut t = vec![vec![0i64; k]; k];
        for mat in &self.m {
            for (j, row) in mat.iter().enumerate() {
                for (i, &x) in row.iter().enumerate() {
                    t[j][i] += x;
                }
            }
        }
        t
    }

    /// Restriction to a subset of module simples, in the given order.
    pub fn restrict(&self, block: &[usize]) -> Result<NimRep> {
        let m = self
            .m
            .iter()
            .map(|mat| {
                block
                    .iter()
                    .map(|&j| block.iter().map(|&i| mat[j][i]).collect())
                    .collect()
            })
            .collect();
        NimRep::new(block.len(), m)
    }
}

pub(crate) fn check_ring(ring: &FusionRing, rep: &NimRep) -> Result<()> {
    if rep.ring_rank() != ring.rank() {
        return Err(structural(format!(
            "module has {} action matrices, ring has rank {}",
            rep.ring_rank(),
            ring.rank()
        )));
    }
    Ok(())
}

/// Checks unit, composition, duality and that every simple is acted on.
pub fn validate_nimrep(ring: &FusionRing, rep: &NimRep) -> Result<NimRepReport> {
    check_ring(ring, rep)?;
    let r = ring.rank();
    let k = rep.module_rank;
    let mut out = Vec::new();

    let unit = rep.matrix(ring.unit());
    for j in 0..k {
        for i in 0..k {
            let expect = i64::from(i == j);
            if unit[j][i] != expect {
                out.push(Violation {
                    axiom: "unit".into(),
                    indices: vec![j, i],
                    lhs: unit[j][i],
                    rhs: expect,
                });
            }
        }
    }

    for u in 0..r {
        for v in 0..r {
            let lhs = int_mat_mul(rep.matrix(u), rep.matrix(v));
            for j in 0..k {
                for i in 0..k {
                    let rhs: i64 = (0..r).map(|w| ring.n(u, v, w) * rep.m[w][j][i]).sum();
                    if lhs[j][i] != rhs {
                        out.push(Violation {
                            axiom: "composition".into(),
                            indices: vec![u, v, j, i],
                            lhs: lhs[j][i],
                            rhs,
                        });
                    }
                }
            }
        }
    }

    for u in 0..r {
        let du = ring.dual(u);
        for j in 0..k {
            for i in 0..k {
                if rep.m[du][j][i] != rep.m[u][i][j] {
                    out.push(Violation {
                        axiom: "duality".into(),
                        indices: vec![u, j, i],
                        lhs: rep.m[du][j][i],
                        rhs: rep.m[u][i][j],
                    });
                }
            }
        }
    }

    let total = rep.total();
    for i in 0..k {
        let col: i64 = (0..k).map(|j| total[j][i]).sum();
        if col == 0 {
            out.push(Violation {
                axiom: "no-action".into(),
                indices: vec![i],
                lhs: 0,
                rhs: 1,
            });
        }
    }

    Ok(NimRepReport {
        valid: out.is_empty(),
        violations: out,
    })
}

/// The ring acting on itself by left multiplication.
pub fn regular_module(ring: &FusionRing) -> NimRep {
    NimRep {
        module_rank: ring.rank(),
        m: fusion_matrices(ring),
    }
}

/// Block-diagonal sum: simples of `a` first, then those of `b`.
pub fn direct_sum(a: &NimRep, b: &NimRep) -> Result<NimRep> {
    if a.ring_rank() != b.ring_rank() {
        return Err(structural("direct sum of modules over different rings"));
    }
    let (ka, kb) = (a.module_rank, b.module_rank);
    let k = ka + kb;
    let m =
        a.m.iter()
            .zip(&b.m)
            .map(|(ma, mb)| {
                let mut out = vec![vec![0i64; k]; k];
                for j in 0..ka {
                    out[j][..ka].copy_from_slice(&ma[j]);
                }
                for j in 0..kb {
                    out[ka + j][ka..].copy_from_slice(&mb[j]);
                }
                out
            })
            .collect();
    NimRep::new(k, m)
}

/// Connected components of the graph on module simples with adjacency
/// `Σ_u M_u`, each sorted, ordered by smallest member.
pub fn components(rep: &NimRep) -> Vec<Vec<usize>> {
    let k = rep.module_rank;
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let total = rep.total();
    for j in 0..k {
        for i in 0..k {
            if total[j][i] != 0 {
                let (rj, ri) = (find(&mut parent, j), find(&mut parent, i));
                if rj != ri {
                    parent[rj.max(ri)] = rj.min(ri);
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_slot = vec![usize::MAX; k];
    for x in 0..k {
        let r = find(&mut parent, x);
        if root_slot[r] == usize::MAX {
            root_slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[root_slot[r]].push(x);
    }
    blocks
}

pub fn is_indecomposable(rep: &NimRep) -> bool {
    components(rep).len() == 1
}
