//! Instance pools and independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use modtrace::catalog::{
    builtin_group, builtin_ring, cyclic, group_characters, group_ring, subgroups, vect_g_module,
    GroupTable,
};
use modtrace::nimrep::{direct_sum, is_indecomposable, regular_module, validate_nimrep};
use modtrace::pivotal::enumerate_characters;
use modtrace::{DimChar, FusionRing, NimRep, C64};

pub struct Instance {
    pub name: String,
    pub ring: FusionRing,
    pub ch: DimChar,
    pub rep: NimRep,
}

pub fn phi() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Every abelian group of order at most 12, up to isomorphism.
pub fn abelian_groups_upto_12() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> =
        (1..=12).map(|n| (format!("Z{n}"), cyclic(n))).collect();
    for name in ["Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "Z2xZ6"] {
        out.push((name.to_string(), builtin_group(name).unwrap()));
    }
    out
}

/// Non-regular module categories over Rep(S3): the fibre functor and the
/// restrictions to Z2 and Z3. Simples of Rep(S3) are (1, sgn, V).
pub fn rep_s3_extra_modules() -> Vec<(String, NimRep)> {
    let id1 = vec![vec![1]];
    let id2 = vec![vec![1, 0], vec![0, 1]];
    let id3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    vec![
        (
            "fibre".into(),
            NimRep::new(1, vec![id1.clone(), id1, vec![vec![2]]]).unwrap(),
        ),
        (
            "rep_z2".into(),
            NimRep::new(
                2,
                vec![
                    id2,
                    vec![vec![0, 1], vec![1, 0]],
                    vec![vec![1, 1], vec![1, 1]],
                ],
            )
            .unwrap(),
        ),
        (
            "rep_z3".into(),
            NimRep::new(
                3,
                vec![
                    id3.clone(),
                    id3,
                    vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
                ],
            )
            .unwrap(),
        ),
    ]
}

/// Indecomposable modules generated for a named ring.
pub fn generated_modules(name: &str, ring: &FusionRing) -> Vec<(String, NimRep)> {
    let mut mods = vec![("regular".to_string(), regular_module(ring))];
    if let Some(n) = name.strip_prefix("zn:") {
        let g = cyclic(n.parse().unwrap());
        for h in subgroups(&g, 64).unwrap() {
            if h.len() > 1 {
                mods.push((format!("H{h:?}"), vect_g_module(&g, &h).unwrap()));
            }
        }
    }
    if name == "rep_s3" {
        mods.extend(rep_s3_extra_modules());
    }
    mods
}

/// Builtin rings × enumerated characters × {regular, subgroup, direct-sum}.
pub fn instance_pool() -> Vec<Instance> {
    let mut names: Vec<String> = vec!["fibonacci".into(), "ising".into(), "rep_s3".into()];
    names.extend((1..=12).map(|n| format!("zn:{n}")));
    let mut out = Vec::new();
    for name in &names {
        let ring = builtin_ring(name).unwrap();
        let chars = enumerate_characters(&ring).unwrap();
        let mods = generated_modules(name, &ring);
        let mut all = mods.clone();
        let reg = &mods[0].1;
        for (mname, m) in &mods {
            all.push((format!("regular+{mname}"), direct_sum(reg, m).unwrap()));
        }
        for (mname, rep) in &all {
            assert!(validate_nimrep(&ring, rep).unwrap().valid, "{name}/{mname}");
        }
        for (k, ch) in chars.iter().enumerate() {
            for (mname, rep) in &all {
                out.push(Instance {
                    name: format!("{name}/char{k}/{mname}"),
                    ring: ring.clone(),
                    ch: ch.clone(),
                    rep: rep.clone(),
                });
            }
        }
    }
    // non-cyclic abelian groups with closed-form characters
    for (gname, g) in abelian_groups_upto_12()
        .into_iter()
        .filter(|(n, _)| n.contains('x'))
    {
        let ring = group_ring(&g).unwrap();
        let subs = subgroups(&g, 64).unwrap();
        for h in &subs {
            assert!(
                validate_nimrep(&ring, &vect_g_module(&g, h).unwrap())
                    .unwrap()
                    .valid
            );
        }
        for (k, kappa) in group_characters(&g).unwrap().iter().enumerate() {
            for h in &subs {
                out.push(Instance {
                    name: format!("{gname}/kappa{k}/H{h:?}"),
                    ring: ring.clone(),
                    ch: kappa.to_dim_char(),
                    rep: vect_g_module(&g, h).unwrap(),
                });
            }
        }
    }
    out
}

/// Small instances (module rank ≤ 3) for randomized oracle comparisons.
pub fn small_pool() -> Vec<Instance> {
    instance_pool()
        .into_iter()
        .filter(|i| i.rep.module_rank() <= 3)
        .collect()
}

pub fn indecomposable(inst: &Instance) -> bool {
    is_indecomposable(&inst.rep)
}

/// `Q = Σ_u d_u M_u`, written out independently of the library.
pub fn q_matrix(inst: &Instance) -> Vec<Vec<C64>> {
    let k = inst.rep.module_rank();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    (0..inst.ring.rank())
                        .map(|u| inst.ch.d[u] * inst.rep.mult(u, i, j) as f64)
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Basis of the null space of `a` by Gauss–Jordan elimination with partial
/// pivoting; entries below `eps` count as zero.
pub fn null_space(a: &[Vec<C64>], eps: f64) -> Vec<Vec<C64>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<C64>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let (best, mag) = (r..rows)
            .map(|i| (i, m[i][col].norm()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if mag <= eps {
            continue;
        }
        m.swap(r, best);
        let p = m[r][col];
        for x in m[r].iter_mut() {
            *x /= p;
        }
        for i in 0..rows {
            if i != r {
                let f = m[i][col];
                if f.norm() > 0.0 {
                    for j in 0..cols {
                        let v = m[r][j];
                        m[i][j] -= f * v;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![C64::new(0.0, 0.0); cols];
            v[f] = C64::new(1.0, 0.0);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f];
            }
            v
        })
        .collect()
}

/// Searches the `dim(C)` eigenspace of `Q` for a nowhere-zero vector:
/// tries a fixed family of pseudo-random combinations of a null-space basis
/// of `Q − dim(C)·I` and checks each candidate directly.
pub fn brute_force_nowhere_zero(inst: &Instance) -> Option<Vec<C64>> {
    let q = q_matrix(inst);
    let k = q.len();
    let dim_c: f64 = inst.ch.d.iter().map(|z| z.norm_sqr()).sum();
    let scale = q.iter().flatten().map(|z| z.norm()).fold(1.0, f64::max);
    let shifted: Vec<Vec<C64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { q[i][j] - dim_c } else { q[i][j] })
                .collect()
        })
        .collect();
    let basis = null_space(&shifted, 1e-8 * scale.max(dim_c));
    if basis.is_empty() {
        return None;
    }
    // Weyl-sequence coefficients: deterministic and generic enough
    for attempt in 1..=16u32 {
        let x: Vec<C64> = (0..k)
            .map(|i| {
                basis
                    .iter()
                    .enumerate()
                    .map(|(b, v)| {
                        let t = (attempt as f64) * (b as f64 + 1.0) * std::f64::consts::SQRT_2;
                        v[i] * C64::new(t.fract() + 0.5, (t * 1.7).fract() - 0.5)
                    })
                    .sum()
            })
            .collect();
        let norm = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if norm == 0.0 {
            continue;
        }
        let nowhere_zero = x.iter().all(|z| z.norm() > 1e-6 * norm);
        let eigen = (0..k).all(|i| {
            let qx: C64 = (0..k).map(|j| q[i][j] * x[j]).sum();
            (qx - x[i] * dim_c).norm() <= 1e-7 * norm * scale.max(dim_c)
        });
        if nowhere_zero && eigen {
            return Some(x);
        }
    }
    None
}
