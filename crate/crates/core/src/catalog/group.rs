use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Error, Result};
use crate::fusion::FusionRing;
use crate::nimrep::NimRep;
use crate::numeric::C64;
use crate::pivotal::DimChar;

/// Largest group order accepted by [`subgroups`] unless overridden.
pub const DEFAULT_SUBGROUP_BOUND: usize = 64;

/// Multiplication table of a finite group, elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupFile", into = "GroupFile")]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    order: usize,
    mul: Vec<Vec<usize>>,
}

impl TryFrom<GroupFile> for GroupTable {
    type Error = Error;

    fn try_from(f: GroupFile) -> Result<Self> {
        if f.mul.len() != f.order {
            return Err(structural(format!(
                "order is {} but table has {} rows",
                f.order,
                f.mul.len()
            )));
        }
        GroupTable::new(f.mul)
    }
}

impl From<GroupTable> for GroupFile {
    fn from(g: GroupTable) -> Self {
        GroupFile {
            order: g.order(),
            mul: g.mul,
        }
    }
}

impl GroupTable {
    /// Validates a Cayley table: Latin square, identity, associativity.
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(structural("group must be non-empty"));
        }
        for row in &mul {
            if row.len() != n {
                return Err(structural("multiplication table must be square"));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(structural("table rows must be permutations"));
                }
                seen[x] = true;
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for row in &mul {
                if seen[row[col]] {
                    return Err(structural("table columns must be permutations"));
                }
                seen[row[col]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| structural("no identity element"))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(structural(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul[a][b] == identity)
                    .expect("latin square")
            })
            .collect();
        Ok(GroupTable {
            mul,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// `(a, b) ↦ a_idx · |B| + b_idx`.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let (n, m) = (self.order(), other.order());
        let mul = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        GroupTable::new(mul).expect("product of groups is a group")
    }

    /// `S_3` as permutations of `{0,1,2}`, listed in lexicographic order of
    /// their images.
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        GroupTable::new(mul).expect("S3 is a group")
    }

    fn closure(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = gens.clone();
        set.insert(self.identity);
        loop {
            let mut grown = set.clone();
            for &a in &set {
                for &b in &set {
                    grown.insert(self.mul(a, b));
                }
            }
            if grown.len() == set.len() {
                return set;
            }
            set = grown;
        }
    }
}

/// `Z_n` with element `k` standing for `g^k`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n > 0, "cyclic group of order 0");
    let mul = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    GroupTable::new(mul).expect("Z_n is a group")
}

/// `N[a][b][c] = δ(ab, c)`, dual = inverse, labels are element indices.
pub fn group_ring(table: &GroupTable) -> Result<FusionRing> {
    let n = table.order();
    let structure = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| (0..n).map(|c| i64::from(table.mul(a, b) == c)).collect())
                .collect()
        })
        .collect();
    FusionRing::new(
        (0..n).map(|a| a.to_string()).collect(),
        table.identity(),
        (0..n).map(|a| table.inverse(a)).collect(),
        structure,
    )
}

/// A linear character of an abelian group, stored exactly:
/// `κ(g) = exp(2πi · phase[g] / |G|)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupCharacter {
    pub phases: Vec<usize>,
}

impl GroupCharacter {
    pub fn order(&self) -> usize {
        self.phases.len()
    }

    pub fn value(&self, g: usize) -> C64 {
        let n = self.order() as f64;
        C64::from_polar(1.0, 2.0 * std::f64::consts::PI * self.phases[g] as f64 / n)
    }

    pub fn is_trivial_on(&self, elements: &[usize]) -> bool {
        elements.iter().all(|&h| self.phases[h] == 0)
    }

    pub fn to_dim_char(&self) -> DimChar {
        DimChar::new((0..self.order()).map(|g| self.value(g)).collect())
    }
}

/// All `|G|` linear characters of an abelian group, built by extending
/// along a greedy generating sequence; values are exact roots of unity.
pub fn group_characters(table: &GroupTable) -> Result<Vec<GroupCharacter>> {
    if !table.is_abelian() {
        return Err(Error::Unsupported(
            "linear characters are only enumerated for abelian groups".into(),
        ));
    }
    let n = table.order();
    let e = table.identity();
    // span[i] lists the subgroup built so far; partial[c][g] is set on span
    let mut span = vec![e];
    let mut in_span = vec![false; n];
    in_span[e] = true;
    let mut partial: Vec<Vec<usize>> = vec![vec![0; n]];

    while span.len() < n {
        let g = (0..n).find(|&x| !in_span[x]).expect("span is proper");
        // smallest m with g^m in span
        let mut m = 1;
        let mut gm = g;
        while !in_span[gm] {
            gm = table.mul(gm, g);
            m += 1;
        }
        let mut new_span = Vec::with_capacity(span.len() * m);
        let mut powers = vec![e];
        for _ in 1..m {
            let last = *powers.last().expect("non-empty");
            powers.push(table.mul(last, g));
        }
        for (j, &p) in powers.iter().enumerate() {
            for &s in &span {
                new_span.push((table.mul(s, p), s, j));
            }
        }
        let mut next = Vec::with_capacity(partial.len() * m);
        for kappa in &partial {
            let t = kappa[gm];
            for k in (0..n).filter(|&k| (m * k) % n == t) {
                let mut ext = kappa.clone();
                for &(x, s, j) in &new_span {
                    ext[x] = (kappa[s] + j * k) % n;
                }
                next.push(ext);
            }
        }
        partial = next;
        span = new_span.iter().map(|&(x, _, _)| x).collect();
        for &x in &span {
            in_span[x] = true;
        }
    }
    Ok(partial
        .into_iter()
        .map(|phases| GroupCharacter { phases })
        .collect())
}

/// All subgroups, as sorted element lists, ordered by size and then
/// lexicographically.
pub fn subgroups(table: &GroupTable, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = table.order();
    if n > bound {
        return Err(Error::Unsupported(format!(
            "subgroup enumeration limited to order {bound}, got {n}"
        )));
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = table.closure(&BTreeSet::new());
    let mut frontier = vec![trivial];
    found.insert(frontier[0].iter().cloned().collect());
    while let Some(h) = frontier.pop() {
        for g in 0..n {
            if h.contains(&g) {
                continue;
            }
            let mut gens = h.clone();
            gens.insert(g);
            let bigger = table.closure(&gens);
            let key: Vec<usize> = bigger.iter().cloned().collect();
            if found.insert(key) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Module category of cosets `[g] = gH` with action `x ⊲ [g] = [xg]`.
/// Cosets are represented by their smallest element and ordered by it.
pub fn vect_g_module(table: &GroupTable, subgroup: &[usize]) -> Result<NimRep> {
    let n = table.order();
    let h: BTreeSet<usize> = subgroup.iter().cloned().collect();
    if h.is_empty() || h.iter().any(|&x| x >= n) {
        return Err(structural("subgroup elements out of range"));
    }
    if !h.contains(&table.identity())
        || h.iter()
            .any(|&a| h.iter().any(|&b| !h.contains(&table.mul(a, b))))
    {
        return Err(structural("given elements do not form a subgroup"));
    }
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] == usize::MAX {
            let idx = reps.len();
            reps.push(g);
            for &x in &h {
                coset_of[table.mul(g, x)] = idx;
            }
        }
    }
    let k = reps.len();
    let m = (0..n)
        .map(|x| {
            let mut mat = vec![vec![0i64; k]; k];
            for (i, &r) in reps.iter().enumerate() {
                mat[coset_of[table.mul(x, r)]][i] = 1;
            }
            mat
        })
        .collect();
    NimRep::new(k, m)
}

/// `M(H)` over `(Vect_G, κ)` has a module trace iff `κ` is trivial on `H`.
pub fn matched_vectg_oracle(subgroup: &[usize], kappa: &GroupCharacter) -> bool {
    kappa.is_trivial_on(subgroup)
}
