//! Dimension characters as stand-ins for pivotal structures.
//!
//! A [`DimChar`] assigns a non-zero complex quantum dimension to each simple
//! of a fusion ring. It must be multiplicative over fusion, send the unit to
//! 1 and satisfy `d(a*) = conj d(a)`. Whether a candidate lifts to a coherent
//! pivotal structure is not decided here.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{structural, Error, Result};
use crate::fusion::{fusion_matrices, FusionRing};
use crate::numeric::{approx_eq, real, C64};

/// Number of weight draws tried before giving up on a degenerate spectrum.
pub const CHARACTER_RETRIES: u64 = 8;

const CHARACTER_SEED: u64 = 0x6d6f_6474_7261_6365;

/// Relative gap below which two eigenvalues of the mixed matrix count as
/// colliding.
const EIGEN_GAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct DimChar {
    pub d: Vec<C64>,
}

impl DimChar {
    pub fn new(d: Vec<C64>) -> Self {
        DimChar { d }
    }

    pub fn from_real(d: &[f64]) -> Self {
        DimChar {
            d: d.iter().map(|&x| real(x)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn approx_eq(&self, other: &DimChar, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .d
                .iter()
                .zip(&other.d)
                .all(|(&a, &b)| approx_eq(a, b, tol))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharViolation {
    pub check: String,
    pub indices: Vec<usize>,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharReport {
    pub valid: bool,
    pub violations: Vec<CharViolation>,
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn check_len(ring: &FusionRing, ch: &DimChar) -> Result<()> {
    if ch.len() != ring.rank() {
        return Err(structural(format!(
            "character has length {}, ring has rank {}",
            ch.len(),
            ring.rank()
        )));
    }
    Ok(())
}

/// Checks unit, multiplicativity, no-zeros and duality.
pub fn validate_dim_char(ring: &FusionRing, ch: &DimChar, tol: f64) -> Result<CharReport> {
    check_len(ring, ch)?;
    let r = ring.rank();
    let d = &ch.d;
    let mut out = Vec::new();
    let mut push = |check: &str, indices: Vec<usize>, lhs: C64, rhs: C64| {
        out.push(CharViolation {
            check: check.to_string(),
            indices,
            lhs: pair(lhs),
            rhs: pair(rhs),
        })
    };

    if !approx_eq(d[ring.unit()], real(1.0), tol) {
        push("unit", vec![ring.unit()], d[ring.unit()], real(1.0));
    }
    for a in 0..r {
        for b in 0..r {
            let lhs = d[a] * d[b];
            let rhs: C64 = (0..r).map(|c| d[c] * ring.n(a, b, c) as f64).sum();
            if !approx_eq(lhs, rhs, tol) {
                push("multiplicativity", vec![a, b], lhs, rhs);
            }
        }
    }
    for a in 0..r {
        if d[a].norm() <= tol {
            push("nonzero", vec![a], d[a], real(0.0));
        }
    }
    for a in 0..r {
        let lhs = d[ring.dual(a)];
        let rhs = d[a].conj();
        if !approx_eq(lhs, rhs, tol) {
            push("duality", vec![a], lhs, rhs);
        }
    }
    Ok(CharReport {
        valid: out.is_empty(),
        violations: out,
    })
}

/// All characters of a commutative fusion ring that pass the no-zeros and
/// duality filters, in descending lexicographic order of their entries
/// (real part before imaginary part, rounded to 1e-9).
///
/// The characters are read off the eigenvectors of the Hermitian matrix
/// `Σ_a (z_a N_a + conj(z_a) N_a*)` for seeded random complex weights `z_a`.
/// Its eigenvalue on a character χ is `2 Re Σ_a z_a χ(a)`, so for generic
/// weights every eigenspace is one-dimensional and shared by all `N_a`.
pub fn enumerate_characters(ring: &FusionRing) -> Result<Vec<DimChar>> {
    if !ring.is_commutative() {
        return Err(Error::Unsupported(
            "character enumeration needs a commutative fusion ring".into(),
        ));
    }
    let mats = fusion_matrices(ring);
    let mut last_err = None;
    for attempt in 0..CHARACTER_RETRIES {
        match characters_with_seed(ring, &mats, CHARACTER_SEED.wrapping_add(attempt)) {
            Ok(all) => {
                let mut kept: Vec<DimChar> = all
                    .into_iter()
                    .filter(|ch| {
                        let r = ch.len();
                        (0..r).all(|a| ch.d[a].norm() > 1e-9)
                            && (0..r).all(|a| approx_eq(ch.d[ring.dual(a)], ch.d[a].conj(), 1e-9))
                    })
                    .collect();
                kept.sort_by_key(|ch| std::cmp::Reverse(sort_key(ch)));
                return Ok(kept);
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Numeric("character enumeration failed".into())))
}

fn sort_key(ch: &DimChar) -> Vec<(i64, i64)> {
    ch.d.iter()
        .map(|z| ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64))
        .collect()
}

fn snap(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

fn characters_with_seed(
    ring: &FusionRing,
    mats: &[Vec<Vec<i64>>],
    seed: u64,
) -> Result<Vec<DimChar>> {
    let r = ring.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = DMatrix::<C64>::zeros(r, r);
    for (a, m) in mats.iter().enumerate() {
        let z = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let md = &mats[ring.dual(a)];
        for i in 0..r {
            for j in 0..r {
                h[(i, j)] += z * m[i][j] as f64 + z.conj() * md[i][j] as f64;
            }
        }
    }
    let eig = h.symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
    vals.sort_by(f64::total_cmp);
    let spread = vals.iter().fold(1f64, |acc, v| acc.max(v.abs()));
    if vals.windows(2).any(|w| w[1] - w[0] < EIGEN_GAP * spread) {
        return Err(Error::Numeric(format!(
            "eigenvalue collision in character computation (seed {seed})"
        )));
    }

    let mut chars = Vec::with_capacity(r);
    for col in eig.eigenvectors.column_iter() {
        let v: Vec<C64> = col.iter().cloned().collect();
        let k = (0..r)
            .max_by(|&x, &y| v[x].norm().total_cmp(&v[y].norm()))
            .expect("rank > 0");
        let d: Vec<C64> = mats
            .iter()
            .map(|m| {
                let nv: C64 = (0..r).map(|b| v[b] * m[k][b] as f64).sum();
                let z = nv / v[k];
                C64::new(snap(z.re), snap(z.im))
            })
            .collect();
        let ch = DimChar::new(d);
        // a genuine character is multiplicative; anything else means the
        // eigenvector was not a simultaneous one
        for a in 0..r {
            for b in 0..r {
                let lhs = ch.d[a] * ch.d[b];
                let rhs: C64 = (0..r).map(|c| ch.d[c] * ring.n(a, b, c) as f64).sum();
                if !approx_eq(lhs, rhs, 1e-8) {
                    return Err(Error::Numeric(format!(
                        "extracted eigenvector is not a character (seed {seed})"
                    )));
                }
            }
        }
        chars.push(ch);
    }
    Ok(chars)
}

/// Dimensions of the conjugate pivotal structure: `d ↦ conj d`.
pub fn conjugate_char(ch: &DimChar) -> DimChar {
    DimChar::new(ch.d.iter().map(|z| z.conj()).collect())
}

pub fn is_spherical(ring: &FusionRing, ch: &DimChar, tol: f64) -> bool {
    (0..ring.rank()).all(|a| approx_eq(ch.d[a], ch.d[ring.dual(a)], tol))
}

/// `Σ_a |d_a|²`.
pub fn global_dimension(ch: &DimChar) -> f64 {
    ch.d.iter().map(|z| z.norm_sqr()).sum()
}

/// `Σ_a d_a²`; equals the global dimension for spherical structures and
/// vanishes otherwise.
pub fn c_invariant(ch: &DimChar) -> C64 {
    ch.d.iter().map(|z| z * z).sum()
}
