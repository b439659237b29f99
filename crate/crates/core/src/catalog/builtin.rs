use crate::error::{Error, Result};
use crate::fusion::FusionRing;
use crate::pivotal::{enumerate_characters, DimChar};

use super::group::{cyclic, group_ring, GroupTable};

/// Names accepted by [`builtin_ring`] (`zn:<n>` for any `n ≥ 1`).
pub const BUILTIN_RINGS: &[&str] = &["fibonacci", "ising", "zn:<n>", "rep_s3"];

/// Ring from a fusion rule `a ⊗ b ↦ [(c, multiplicity)]`.
fn ring_from_rule(
    labels: &[&str],
    dual: Vec<usize>,
    rule: impl Fn(usize, usize) -> Vec<(usize, i64)>,
) -> FusionRing {
    let r = labels.len();
    let mut n = vec![vec![vec![0i64; r]; r]; r];
    for (a, plane) in n.iter_mut().enumerate() {
        for (b, row) in plane.iter_mut().enumerate() {
            for (c, m) in rule(a, b) {
                row[c] += m;
            }
        }
    }
    FusionRing::new(labels.iter().map(|s| s.to_string()).collect(), 0, dual, n)
        .expect("builtin ring is well-formed")
}

fn fibonacci() -> FusionRing {
    // 1, τ with τ ⊗ τ = 1 ⊕ τ
    ring_from_rule(&["1", "tau"], vec![0, 1], |a, b| match (a, b) {
        (0, x) | (x, 0) => vec![(x, 1)],
        _ => vec![(0, 1), (1, 1)],
    })
}

fn ising() -> FusionRing {
    // 1, ε, σ with ε ⊗ ε = 1, ε ⊗ σ = σ, σ ⊗ σ = 1 ⊕ ε
    ring_from_rule(&["1", "eps", "sigma"], vec![0, 1, 2], |a, b| match (a, b) {
        (0, x) | (x, 0) => vec![(x, 1)],
        (1, 1) => vec![(0, 1)],
        (1, 2) | (2, 1) => vec![(2, 1)],
        _ => vec![(0, 1), (1, 1)],
    })
}

fn rep_s3() -> FusionRing {
    // 1, sgn, V with sgn ⊗ sgn = 1, sgn ⊗ V = V, V ⊗ V = 1 ⊕ sgn ⊕ V
    ring_from_rule(&["1", "sgn", "V"], vec![0, 1, 2], |a, b| match (a, b) {
        (0, x) | (x, 0) => vec![(x, 1)],
        (1, 1) => vec![(0, 1)],
        (1, 2) | (2, 1) => vec![(2, 1)],
        _ => vec![(0, 1), (1, 1), (2, 1)],
    })
}

fn parse_positive(s: &str, what: &str) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(Error::Usage(format!("bad {what} order '{s}'"))),
    }
}

/// `fibonacci`, `ising`, `rep_s3` or `zn:<n>`.
pub fn builtin_ring(name: &str) -> Result<FusionRing> {
    match name {
        "fibonacci" => Ok(fibonacci()),
        "ising" => Ok(ising()),
        "rep_s3" => Ok(rep_s3()),
        _ => match name.strip_prefix("zn:") {
            Some(n) => group_ring(&cyclic(parse_positive(n, "cyclic")?)),
            None => Err(Error::Usage(format!(
                "unknown builtin ring '{name}' (expected one of {})",
                BUILTIN_RINGS.join(", ")
            ))),
        },
    }
}

/// A builtin ring together with its pivotal candidates.
pub fn builtin(name: &str) -> Result<(FusionRing, Vec<DimChar>)> {
    let ring = builtin_ring(name)?;
    let chars = enumerate_characters(&ring)?;
    Ok((ring, chars))
}

/// `S3`, `Z:<n>`, or a product of cyclic factors written `Z2xZ2`,
/// `Z2xZ6`, and so on.
pub fn builtin_group(name: &str) -> Result<GroupTable> {
    if name == "S3" {
        return Ok(GroupTable::symmetric3());
    }
    if let Some(n) = name.strip_prefix("Z:") {
        return Ok(cyclic(parse_positive(n, "cyclic")?));
    }
    let mut group: Option<GroupTable> = None;
    for factor in name.split('x') {
        let n = factor
            .strip_prefix('Z')
            .ok_or_else(|| Error::Usage(format!("unknown builtin group '{name}'")))?;
        let z = cyclic(parse_positive(n, "cyclic")?);
        group = Some(match group {
            None => z,
            Some(g) => g.direct_product(&z),
        });
    }
    group.ok_or_else(|| Error::Usage(format!("unknown builtin group '{name}'")))
}
