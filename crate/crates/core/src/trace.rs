//! Dimension matrices and module traces.
//!
//! For a module category with simples `m_i`, the dimension matrix is
//! `Q[i][j] = Σ_u d_u (M_u)[i][j]`, the quantum dimension of the inner hom
//! `⟨m_j, m_i⟩`. It is hermitian with `Q² = dim(C) Q`. An indecomposable
//! module admits a module trace exactly when `Q` has rank one and no zero
//! entries. The trace dimensions are then the rank-one factor,
//! `Q[i][j] = d_i conj(d_j)`. Decomposable modules are handled one
//! connected component at a time.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{structural, Error, Result};
use crate::fusion::{fp_dimensions, FusionRing};
use crate::nimrep::{check_ring, components, is_indecomposable, NimRep};
use crate::numeric::{perron_vector, real, C64};
use crate::pivotal::{c_invariant, global_dimension, DimChar};

pub type ComplexMatrix = Vec<Vec<C64>>;

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionMatrix {
    pub q: ComplexMatrix,
}

impl DimensionMatrix {
    pub fn size(&self) -> usize {
        self.q.len()
    }

    pub fn trace(&self) -> C64 {
        (0..self.size()).map(|i| self.q[i][i]).sum()
    }

    /// `max(1, max |Q_ij|)`.
    pub fn scale(&self) -> f64 {
        self.q
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(1.0, f64::max)
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        self.q
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `vᵀ Q` as a vector.
    pub fn left_mul_vec(&self, v: &[C64]) -> Vec<C64> {
        let k = self.size();
        (0..k)
            .map(|i| (0..k).map(|j| v[j] * self.q[j][i]).sum())
            .collect()
    }

    pub fn square(&self) -> ComplexMatrix {
        let k = self.size();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| (0..k).map(|l| self.q[i][l] * self.q[l][j]).sum())
                    .collect()
            })
            .collect()
    }

    /// Eigenvalues of the hermitian part, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let k = self.size();
        let h = DMatrix::<C64>::from_fn(k, k, |i, j| (self.q[i][j] + self.q[j][i].conj()) * 0.5);
        let mut vals: Vec<f64> = h.symmetric_eigen().eigenvalues.iter().cloned().collect();
        vals.sort_by(f64::total_cmp);
        vals
    }
}

/// `Q = Σ_u d_u M_u`.
pub fn dimension_matrix(ring: &FusionRing, ch: &DimChar, rep: &NimRep) -> Result<DimensionMatrix> {
    check_ring(ring, rep)?;
    if ch.len() != ring.rank() {
        return Err(structural(format!(
            "character has length {}, ring has rank {}",
            ch.len(),
            ring.rank()
        )));
    }
    let k = rep.module_rank();
    let mut q = vec![vec![C64::new(0.0, 0.0); k]; k];
    for (u, mat) in rep.matrices().iter().enumerate() {
        for i in 0..k {
            for j in 0..k {
                if mat[i][j] != 0 {
                    q[i][j] += ch.d[u] * mat[i][j] as f64;
                }
            }
        }
    }
    Ok(DimensionMatrix { q })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QReport {
    /// `max |(Q² − dim(C) Q)_ij|`.
    pub idempotent_residual: f64,
    /// `max |(Q − Q†)_ij|`.
    pub hermitian_residual: f64,
    pub eigenvalues: Vec<f64>,
    pub idempotent_ok: bool,
    pub hermitian_ok: bool,
    /// Every eigenvalue lies near 0 or near `dim(C)`.
    pub eigen_dichotomy_ok: bool,
    pub passed: bool,
}

pub fn q_property_report(q: &DimensionMatrix, dim_c: f64, tol: f64) -> QReport {
    let k = q.size();
    let sq = q.square();
    let mut idem: f64 = 0.0;
    let mut herm: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            idem = idem.max((sq[i][j] - q.q[i][j] * dim_c).norm());
            herm = herm.max((q.q[i][j] - q.q[j][i].conj()).norm());
        }
    }
    let scale = q.scale();
    let eigenvalues = q.eigenvalues();
    let eig_tol = tol * scale.max(dim_c) * 10.0;
    let eigen_dichotomy_ok = eigenvalues
        .iter()
        .all(|&l| l.abs() <= eig_tol || (l - dim_c).abs() <= eig_tol);
    let idempotent_ok = idem <= tol * scale * dim_c.max(1.0) * (k as f64).max(1.0);
    let hermitian_ok = herm <= tol * scale;
    QReport {
        idempotent_residual: idem,
        hermitian_residual: herm,
        eigenvalues,
        idempotent_ok,
        hermitian_ok,
        eigen_dichotomy_ok,
        passed: idempotent_ok && hermitian_ok && eigen_dichotomy_ok,
    }
}

/// Trace dimensions `d_i = dim^Θ(m_i)` of the module simples.
///
/// Each connected component is normalised so that its `Σ |d_i|²` equals
/// `dim(C)` and its entry at the anchor (largest diagonal entry of `Q`,
/// first on ties) is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleTrace {
    pub d: Vec<C64>,
    pub anchors: Vec<usize>,
}

impl ModuleTrace {
    /// Rescaled so the entry at `index` is 1. With `index` the coset of the
    /// identity this is the usual `Θ([e]) = 1` convention for `Vect_G`.
    pub fn normalized_at(&self, index: usize) -> Vec<C64> {
        let s = self.d[index];
        self.d.iter().map(|z| z / s).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceCertificate {
    pub matched: bool,
    pub q: DimensionMatrix,
    pub trace: Option<ModuleTrace>,
    pub dim_c: f64,
    pub c: C64,
    pub spherical_by_c: bool,
    /// Connected components of the module, each sorted.
    pub blocks: Vec<Vec<usize>>,
    pub right_eigen_residual: Option<f64>,
    pub left_eigen_residual: Option<f64>,
    pub q_report: QReport,
    pub diagnostics: Vec<String>,
}

impl TraceCertificate {
    pub fn dims(&self) -> Option<&[C64]> {
        self.trace.as_ref().map(|t| t.d.as_slice())
    }
}

/// Tests a square block of `Q` for rank one with no zero entries, pushing
/// a diagnostic for each kind of failure.
fn rank_one_nowhere_zero(
    q: &DimensionMatrix,
    block: &[usize],
    tol: f64,
    diag: &mut Vec<String>,
) -> bool {
    let scale = q.scale();
    let before = diag.len();

    let zeros: Vec<(usize, usize)> = block
        .iter()
        .flat_map(|&i| block.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| q.q[i][j].norm() <= tol * scale)
        .collect();
    if let Some(&(i, j)) = zeros.first() {
        diag.push(format!(
            "zero entry in Q at ({i},{j}); {} zero entries in block",
            zeros.len()
        ));
    }

    let mut minors = 0usize;
    let mut first = None;
    for (a, &i) in block.iter().enumerate() {
        for &k in &block[a + 1..] {
            for (b, &j) in block.iter().enumerate() {
                for &l in &block[b + 1..] {
                    let m = q.q[i][j] * q.q[k][l] - q.q[i][l] * q.q[k][j];
                    if m.norm() > tol * scale * scale {
                        minors += 1;
                        first.get_or_insert((i, k, j, l, m.norm()));
                    }
                }
            }
        }
    }
    if let Some((i, k, j, l, mag)) = first {
        diag.push(format!(
            "rank of Q exceeds 1: minor rows ({i},{k}) cols ({j},{l}) has magnitude {mag:.3e}; {minors} nonzero minors"
        ));
    }
    diag.len() == before
}

/// Decides whether `rep` carries a module trace for the given dimensions and
/// extracts it when it does.
pub fn solve_module_trace(
    ring: &FusionRing,
    ch: &DimChar,
    rep: &NimRep,
    tol: f64,
) -> Result<TraceCertificate> {
    let q = dimension_matrix(ring, ch, rep)?;
    let dim_c = global_dimension(ch);
    let c = c_invariant(ch);
    let blocks = components(rep);
    let q_report = q_property_report(&q, dim_c, tol);
    let k = q.size();

    let mut diagnostics = Vec::new();
    let mut d = vec![C64::new(0.0, 0.0); k];
    let mut anchors = Vec::with_capacity(blocks.len());
    let mut matched = true;

    for block in &blocks {
        let p = *block
            .iter()
            .reduce(|best, i| {
                if q.q[*i][*i].re > q.q[*best][*best].re {
                    i
                } else {
                    best
                }
            })
            .expect("components are non-empty");
        let qpp = q.q[p][p].re;
        if qpp <= tol * q.scale() {
            diagnostics.push(format!("zero diagonal: Q[{p}][{p}] = {qpp:.3e}"));
        }
        let ok = rank_one_nowhere_zero(&q, block, tol, &mut diagnostics) && qpp > tol * q.scale();
        if ok {
            let root = qpp.sqrt();
            for &i in block {
                d[i] = q.q[i][p] / root;
            }
            anchors.push(p);
        } else {
            matched = false;
        }
    }

    let spherical_by_c = (c - real(dim_c)).norm() <= tol * dim_c.max(1.0);

    let (trace, right, left) = if matched {
        let qd = q.mul_vec(&d);
        let right = qd
            .iter()
            .zip(&d)
            .map(|(x, y)| (x - y * dim_c).norm())
            .fold(0.0, f64::max);
        let dq = q.left_mul_vec(&d);
        let left = dq
            .iter()
            .zip(&d)
            .map(|(x, y)| (x - y * c).norm())
            .fold(0.0, f64::max);
        (Some(ModuleTrace { d, anchors }), Some(right), Some(left))
    } else {
        (None, None, None)
    };

    Ok(TraceCertificate {
        matched,
        q,
        trace,
        dim_c,
        c,
        spherical_by_c,
        blocks,
        right_eigen_residual: right,
        left_eigen_residual: left,
        q_report,
        diagnostics,
    })
}

/// `Σ_i n_i d_i`, the trace dimension of `⊕_i m_i^{n_i}`.
pub fn object_dimension(trace: &ModuleTrace, multiplicities: &[i64]) -> Result<C64> {
    if multiplicities.len() != trace.d.len() {
        return Err(structural(format!(
            "multiplicity vector has length {}, module has {} simples",
            multiplicities.len(),
            trace.d.len()
        )));
    }
    Ok(multiplicities
        .iter()
        .zip(&trace.d)
        .map(|(&n, &d)| d * n as f64)
        .sum())
}

/// Positive trace dimensions for the Frobenius–Perron dimensions: the
/// Perron vector `w` of `Σ_u M_u`, which satisfies `M_uᵀ w = FPdim(u) w`,
/// scaled to `Σ w_i² = Σ_a FPdim(a)²`.
pub fn fp_module_trace(ring: &FusionRing, rep: &NimRep) -> Result<Vec<f64>> {
    check_ring(ring, rep)?;
    if !is_indecomposable(rep) {
        return Err(Error::Unsupported(
            "Frobenius-Perron trace of a decomposable module is not unique".into(),
        ));
    }
    let fp = fp_dimensions(ring)?;
    let (_, w) = perron_vector(&rep.total())?;
    let target: f64 = fp.iter().map(|x| x * x).sum();
    let norm: f64 = w.iter().map(|x| x * x).sum();
    let s = (target / norm).sqrt();
    Ok(w.into_iter().map(|x| x * s).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlexibilityReport {
    pub certificates: Vec<TraceCertificate>,
    /// Every supplied module is matched. Says nothing about modules that
    /// were not supplied.
    pub flexible: bool,
    pub note: String,
}

/// Certificates for a list of modules and whether all of them are matched.
pub fn matched_report(
    ring: &FusionRing,
    ch: &DimChar,
    reps: &[NimRep],
    tol: f64,
) -> Result<FlexibilityReport> {
    if reps.is_empty() {
        return Err(structural("flexibility needs at least one module"));
    }
    let certificates = std::thread::scope(|s| {
        let handles: Vec<_> = reps
            .iter()
            .map(|rep| s.spawn(move || solve_module_trace(ring, ch, rep, tol)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    let flexible = certificates.iter().all(|c| c.matched);
    Ok(FlexibilityReport {
        flexible,
        note: format!(
            "flexibility evaluated over the {} supplied module(s) only",
            reps.len()
        ),
        certificates,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphericalVerdict {
    Spherical,
    NonSpherical,
    InconclusiveNumeric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphericalReport {
    pub c: C64,
    pub dim_c: f64,
    pub verdict: SphericalVerdict,
    /// Index of a matched module whose trace dimensions are all real.
    pub witness: Option<usize>,
    pub witness_dims: Option<Vec<C64>>,
}

/// Sphericality read off `C = Σ d_u²` (either `dim(C)` or 0), plus a
/// real-dimension witness among the supplied modules when one exists.
pub fn spherical_certificate(
    ring: &FusionRing,
    ch: &DimChar,
    reps: &[NimRep],
    tol: f64,
) -> Result<SphericalReport> {
    let c = c_invariant(ch);
    let dim_c = global_dimension(ch);
    let t = tol * dim_c.max(1.0);
    let verdict = if (c - real(dim_c)).norm() <= t {
        SphericalVerdict::Spherical
    } else if c.norm() <= t {
        SphericalVerdict::NonSpherical
    } else {
        SphericalVerdict::InconclusiveNumeric
    };
    let mut witness = None;
    let mut witness_dims = None;
    for (idx, rep) in reps.iter().enumerate() {
        let cert = solve_module_trace(ring, ch, rep, tol)?;
        if let Some(tr) = &cert.trace {
            if tr.d.iter().all(|z| z.im.abs() <= tol * z.norm().max(1.0)) {
                witness = Some(idx);
                witness_dims = Some(tr.d.clone());
                break;
            }
        }
    }
    Ok(SphericalReport {
        c,
        dim_c,
        verdict,
        witness,
        witness_dims,
    })
}
