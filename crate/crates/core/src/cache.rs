//! On-disk module cache: `<dir>/<hash>.mod` files and family manifests in `<dir>/manifests/`.
//!
//! A module file is a header of `key value` lines followed by the action matrices in the
//! gflin text format. The file name is a hash of the header fields that identify the module
//! before it is built (format, seed, field, group, label), so lookups precede construction.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gflin::text::{read_mat_tokens, write_mat};
use crate::gflin::{field_make, FieldCtx, Mat};
use crate::liecore::Manifest;
use crate::modrep::Module;
use crate::symgrp::{Group, Perm};

pub const MODULE_FORMAT: u32 = 1;

/// Cache key of a module identified by its field, group, label and seed.
pub fn module_key(field: &FieldCtx, group: &Group, label: &str, seed: u64) -> String {
    let mut h = Sha256::new();
    h.update(format!(
        "format {MODULE_FORMAT}\nseed {seed}\np {}\nd {}\ngroup {}\nlabel {label}\n",
        field.p(),
        field.d(),
        group.descriptor()
    ));
    h.finalize()[..16].iter().map(|b| format!("{b:02x}")).collect()
}

/// Hash of a module's full contents, used for witnesses in reports.
pub fn content_hash(m: &Module) -> String {
    let mut h = Sha256::new();
    h.update(m.group().descriptor());
    h.update(format!(" dim {}\n", m.dim()));
    for a in m.action() {
        h.update(write_mat(a));
    }
    h.finalize()[..16].iter().map(|b| format!("{b:02x}")).collect()
}

/// Rebuilds a group from `Group::descriptor` output.
pub fn parse_descriptor(s: &str) -> Result<Arc<Group>> {
    let bad = || Error::Parse(format!("bad group descriptor `{s}`"));
    let (name, rest) = s.rsplit_once(" deg ").ok_or_else(bad)?;
    let (deg, gens) = rest.split_once(' ').ok_or_else(bad)?;
    let n: usize = deg.parse().map_err(|_| bad())?;
    let body = gens
        .trim()
        .strip_prefix('<')
        .and_then(|g| g.strip_suffix('>'))
        .ok_or_else(bad)?;
    let gens = body
        .split(',')
        .filter(|g| !g.trim().is_empty())
        .map(|g| Perm::parse(g, n))
        .collect::<Result<Vec<_>>>()?;
    Group::generated(n, gens, name)
}

pub fn write_module(m: &Module, seed: u64) -> String {
    let f = m.field();
    let mut s = format!(
        "format {MODULE_FORMAT}\nseed {seed}\np {}\nd {}\ngroup {}\ndim {}\nlabel {}\nend\n",
        f.p(),
        f.d(),
        m.group().descriptor(),
        m.dim(),
        m.label()
    );
    for a in m.action() {
        s.push_str(&write_mat(a));
    }
    s
}

pub struct ModuleFile {
    pub seed: u64,
    pub module: Module,
}

pub fn read_module(s: &str) -> Result<ModuleFile> {
    let mut lines = s.lines();
    let mut field = |key: &str| -> Result<String> {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing `{key}` line")))?;
        line.strip_prefix(key)
            .and_then(|v| v.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| Error::Parse(format!("expected `{key}`, found `{line}`")))
    };
    let num = |v: String| v.parse::<u64>().map_err(|_| Error::Parse(format!("bad number `{v}`")));
    let format = num(field("format")?)?;
    if format != MODULE_FORMAT as u64 {
        return Err(Error::Parse(format!("unsupported module format {format}")));
    }
    let seed = num(field("seed")?)?;
    let p = num(field("p")?)? as u32;
    let d = num(field("d")?)? as u32;
    let group = parse_descriptor(&field("group")?)?;
    let dim = num(field("dim")?)? as usize;
    let label = field("label")?;
    let end = lines.next();
    if end != Some("end") {
        return Err(Error::Parse("missing `end` after header".into()));
    }
    let ctx = field_make(p, d)?;
    let body: String = lines.collect::<Vec<_>>().join("\n");
    let mut tokens = body.split_whitespace();
    let mut action = Vec::new();
    for _ in 0..group.gens().len() {
        let a = read_mat_tokens(&mut tokens)?;
        if a.rows() != dim || a.cols() != dim {
            return Err(Error::Parse(format!("action matrix is {}x{}, expected {dim}", a.rows(), a.cols())));
        }
        action.push(Mat::from_vec(&ctx, dim, dim, a.into_data())?);
    }
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing data after action matrices".into()));
    }
    let module = Module::with_dim(&group, &ctx, dim, action, label)?;
    Ok(ModuleFile { seed, module })
}

#[derive(Clone, Debug)]
pub struct CacheEntry {
    pub hash: String,
    pub label: String,
    pub dim: usize,
    pub bytes: u64,
}

pub struct ModuleCache {
    dir: PathBuf,
    seed: u64,
}

impl ModuleCache {
    pub fn open(dir: impl Into<PathBuf>, seed: u64) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(dir.join("manifests"))?;
        Ok(ModuleCache { dir, seed })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, hash: &str) -> PathBuf {
        self.dir.join(format!("{hash}.mod"))
    }

    fn write_atomic(&self, path: &Path, contents: &str) -> Result<()> {
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn key(&self, field: &FieldCtx, group: &Group, label: &str) -> String {
        module_key(field, group, label, self.seed)
    }

    pub fn store(&self, m: &Module) -> Result<String> {
        let hash = self.key(m.field(), m.group(), m.label());
        self.write_atomic(&self.path(&hash), &write_module(m, self.seed))?;
        Ok(hash)
    }

    pub fn load(&self, hash: &str) -> Result<Option<Module>> {
        let path = self.path(hash);
        if !path.exists() {
            return Ok(None);
        }
        let file = read_module(&fs::read_to_string(path)?)?;
        Ok(Some(file.module))
    }

    /// Returns the cached module with this identity, building and storing it on a miss.
    pub fn get_or_build(
        &self,
        field: &Arc<FieldCtx>,
        group: &Arc<Group>,
        label: &str,
        build: impl FnOnce() -> Result<Module>,
    ) -> Result<Module> {
        let hash = self.key(field, group, label);
        if let Some(m) = self.load(&hash)? {
            return Ok(m);
        }
        let m = build()?.with_label(label);
        self.store(&m)?;
        Ok(m)
    }

    fn manifest_path(&self, p: usize, k: usize) -> PathBuf {
        self.dir.join("manifests").join(format!("{p}-{k}.toml"))
    }

    pub fn store_manifest(&self, m: &Manifest) -> Result<PathBuf> {
        let path = self.manifest_path(m.p, m.k);
        self.write_atomic(&path, &m.to_toml()?)?;
        Ok(path)
    }

    pub fn load_manifest(&self, p: usize, k: usize) -> Result<Option<Manifest>> {
        let path = self.manifest_path(p, k);
        if !path.exists() {
            return Ok(None);
        }
        Manifest::from_toml(&fs::read_to_string(path)?).map(Some)
    }

    pub fn manifests(&self) -> Result<Vec<Manifest>> {
        let mut out = Vec::new();
        for e in fs::read_dir(self.dir.join("manifests"))? {
            let path = e?.path();
            if path.extension().is_some_and(|x| x == "toml") {
                out.push(Manifest::from_toml(&fs::read_to_string(path)?)?);
            }
        }
        out.sort_by_key(|m| (m.p, m.k));
        Ok(out)
    }

    pub fn list(&self) -> Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        for e in fs::read_dir(&self.dir)? {
            let e = e?;
            let path = e.path();
            if path.extension().is_none_or(|x| x != "mod") {
                continue;
            }
            let hash = path.file_stem().unwrap_or_default().to_string_lossy().to_string();
            let text = fs::read_to_string(&path)?;
            let header = |key: &str| {
                text.lines()
                    .find_map(|l| l.strip_prefix(key).and_then(|v| v.strip_prefix(' ')))
                    .unwrap_or("")
                    .to_string()
            };
            out.push(CacheEntry {
                hash,
                label: header("label"),
                dim: header("dim").parse().unwrap_or(0),
                bytes: e.metadata()?.len(),
            });
        }
        out.sort_by(|a, b| a.hash.cmp(&b.hash));
        Ok(out)
    }

    pub fn remove(&self, hash: &str) -> Result<bool> {
        let path = self.path(hash);
        if !path.exists() {
            return Ok(false);
        }
        fs::remove_file(path)?;
        Ok(true)
    }

    /// Deletes module files not referenced by any manifest, and leftover temporary files.
    pub fn gc(&self) -> Result<Vec<String>> {
        let live: BTreeSet<String> = self
            .manifests()?
            .into_iter()
            .flat_map(|m| m.members.into_values())
            .collect();
        let mut removed = Vec::new();
        for e in fs::read_dir(&self.dir)? {
            let path = e?.path();
            if !path.is_file() {
                continue;
            }
            let name = path.file_name().unwrap_or_default().to_string_lossy().to_string();
            let stale_tmp = path.extension().is_some_and(|x| x.to_string_lossy().starts_with("tmp"));
            let dead = name.strip_suffix(".mod").is_some_and(|h| !live.contains(h));
            if stale_tmp || dead {
                fs::remove_file(&path)?;
                removed.push(name);
            }
        }
        removed.sort();
        Ok(removed)
    }
}
