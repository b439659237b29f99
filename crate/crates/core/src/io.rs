//! JSON instance files: rings, characters, modules and groups.
//!
//! Character and module files carry a `ring` tag. Emitted files use the
//! ring fingerprint (`sha256:…`); on load a fingerprint tag must match the
//! ring, any other tag is taken as a free-form label.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::GroupTable;
use crate::error::{structural, Result};
use crate::fusion::{FusionRing, IntMatrix};
use crate::nimrep::NimRep;
use crate::numeric::C64;
use crate::pivotal::DimChar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterFile {
    pub ring: String,
    pub d: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub ring: String,
    pub module_rank: usize,
    /// Indexed `[u][j][i]`.
    #[serde(rename = "M")]
    pub m: Vec<IntMatrix>,
}

impl CharacterFile {
    pub fn new(ring: &FusionRing, ch: &DimChar) -> Self {
        CharacterFile {
            ring: ring.fingerprint(),
            d: ch.d.iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn into_char(self, ring: &FusionRing) -> Result<DimChar> {
        check_tag(&self.ring, ring)?;
        if self.d.len() != ring.rank() {
            return Err(structural(format!(
                "character has {} entries, ring has rank {}",
                self.d.len(),
                ring.rank()
            )));
        }
        Ok(DimChar::new(
            self.d.iter().map(|p| C64::new(p[0], p[1])).collect(),
        ))
    }
}

impl ModuleFile {
    pub fn new(ring: &FusionRing, rep: &NimRep) -> Self {
        ModuleFile {
            ring: ring.fingerprint(),
            module_rank: rep.module_rank(),
            m: rep.matrices().to_vec(),
        }
    }

    pub fn into_rep(self, ring: &FusionRing) -> Result<NimRep> {
        check_tag(&self.ring, ring)?;
        let rep = NimRep::new(self.module_rank, self.m)?;
        if rep.ring_rank() != ring.rank() {
            return Err(structural(format!(
                "module has {} action matrices, ring has rank {}",
                rep.ring_rank(),
                ring.rank()
            )));
        }
        Ok(rep)
    }
}

fn check_tag(tag: &str, ring: &FusionRing) -> Result<()> {
    if tag.starts_with("sha256:") && tag != ring.fingerprint() {
        return Err(structural(format!(
            "file belongs to ring {tag}, loaded ring is {}",
            ring.fingerprint()
        )));
    }
    Ok(())
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| structural(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn load_ring(path: &Path) -> Result<FusionRing> {
    read_json(path)
}

pub fn save_ring(path: &Path, ring: &FusionRing) -> Result<()> {
    write_json(path, ring)
}

pub fn load_character(path: &Path, ring: &FusionRing) -> Result<DimChar> {
    read_json::<CharacterFile>(path)?.into_char(ring)
}

pub fn save_character(path: &Path, ring: &FusionRing, ch: &DimChar) -> Result<()> {
    write_json(path, &CharacterFile::new(ring, ch))
}

pub fn load_module(path: &Path, ring: &FusionRing) -> Result<NimRep> {
    read_json::<ModuleFile>(path)?.into_rep(ring)
}

pub fn save_module(path: &Path, ring: &FusionRing, rep: &NimRep) -> Result<()> {
    write_json(path, &ModuleFile::new(ring, rep))
}

pub fn load_group(path: &Path) -> Result<GroupTable> {
    read_json(path)
}

pub fn save_group(path: &Path, group: &GroupTable) -> Result<()> {
    write_json(path, group)
}
