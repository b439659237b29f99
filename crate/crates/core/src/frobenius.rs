//! Dimension-level data of the inner-hom algebras `⟨m, m⟩`.
//!
//! When a module trace exists, `⟨m, m⟩` is a special haploid symmetric
//! Frobenius algebra of positive dimension. Only the numeric shadows of
//! that structure are computed here: multiplicities, `dim⟨m, m⟩`, the
//! specialness constants and the rescaling of dimensions under the Morita
//! equivalence `Mod(⟨m, m⟩) ≃ M`.

use serde::Serialize;

use crate::error::{structural, Error, Result};
use crate::fusion::FusionRing;
use crate::nimrep::{check_ring, is_indecomposable, NimRep};
use crate::numeric::C64;
use crate::trace::TraceCertificate;

/// Multiplicity of each ring simple `c_u` in `⟨m_j, m_i⟩`, i.e. `(M_u)[i][j]`.
pub fn inner_hom_multiplicities(rep: &NimRep, i: usize, j: usize) -> Result<Vec<i64>> {
    let k = rep.module_rank();
    if i >= k || j >= k {
        return Err(structural(format!(
            "module simple index ({i},{j}) out of range for module rank {k}"
        )));
    }
    Ok(rep.matrices().iter().map(|mat| mat[i][j]).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrobeniusReport {
    pub object: usize,
    pub multiplicities: Vec<i64>,
    pub dim_a: f64,
    pub haploid: bool,
    /// Specialness constants in the normalisation `β_A = 1`, so that
    /// `β_1 · β_A = dim A`.
    pub beta_1: f64,
    pub beta_a: f64,
    pub positivity_ok: bool,
    /// A matched certificate forces `dim⟨m, m⟩ > 0`; false flags a
    /// contradiction between the two.
    pub consistent_with_certificate: bool,
}

fn check_object(rep: &NimRep, m: usize) -> Result<()> {
    if m >= rep.module_rank() {
        return Err(structural(format!(
            "object {m} out of range for module rank {}",
            rep.module_rank()
        )));
    }
    Ok(())
}

pub fn frobenius_report(
    ring: &FusionRing,
    rep: &NimRep,
    m: usize,
    cert: &TraceCertificate,
    tol: f64,
) -> Result<FrobeniusReport> {
    check_ring(ring, rep)?;
    check_object(rep, m)?;
    if !is_indecomposable(rep) {
        return Err(Error::Unsupported(
            "Frobenius report needs an indecomposable module".into(),
        ));
    }
    if cert.q.size() != rep.module_rank() {
        return Err(structural("certificate does not belong to this module"));
    }
    let multiplicities = inner_hom_multiplicities(rep, m, m)?;
    let dim_a = cert.q.q[m][m].re;
    let haploid = multiplicities[ring.unit()] == 1;
    let positivity_ok = dim_a > tol;
    Ok(FrobeniusReport {
        object: m,
        multiplicities,
        dim_a,
        haploid,
        beta_1: dim_a,
        beta_a: 1.0,
        positivity_ok,
        consistent_with_certificate: !cert.matched || positivity_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MoritaReport {
    pub object: usize,
    /// `dim⟨m, m⟩ / dim^Θ(m)`.
    pub scale: [f64; 2],
    /// `|Q[n][m] − scale · d_n|` for each simple `n` in the component of `m`.
    pub residuals: Vec<(usize, f64)>,
    pub max_residual: f64,
    pub ok: bool,
}

/// Verifies `dim⟨m, n⟩ = (dim⟨m, m⟩ / dim^Θ(m)) · dim^Θ(n)` entrywise.
pub fn morita_rescale_check(cert: &TraceCertificate, m: usize, tol: f64) -> Result<MoritaReport> {
    let trace = cert
        .trace
        .as_ref()
        .ok_or_else(|| Error::Precondition("rescaling needs a matched certificate".into()))?;
    if m >= trace.d.len() {
        return Err(structural(format!("object {m} out of range")));
    }
    let block = cert
        .blocks
        .iter()
        .find(|b| b.contains(&m))
        .ok_or_else(|| structural("object not in any component"))?;
    let scale: C64 = cert.q.q[m][m] / trace.d[m];
    let residuals: Vec<(usize, f64)> = block
        .iter()
        .map(|&n| (n, (cert.q.q[n][m] - scale * trace.d[n]).norm()))
        .collect();
    let max_residual = residuals.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(MoritaReport {
        object: m,
        scale: [scale.re, scale.im],
        residuals,
        max_residual,
        ok: max_residual <= tol * cert.q.scale(),
    })
}
