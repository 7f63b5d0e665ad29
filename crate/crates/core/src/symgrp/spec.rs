//! Named embedded subgroups of `S_pk` and a small text syntax for them.
//!
//! Syntax: `S6`, `C3`, `C3@diag(2)` (Δ_2(C_3)), `S3 x S2` (Δ_2(S_3)·S_2^[3]),
//! `wreath(2,3)` ((S_2[1] S_2[2] S_2[3])·S_3^[2]), `C2@blocks(3)` (C_2^[3]),
//! `D(3,2)` (Δ_2(S_3)·C_2^[3]) and `gens(4: (1 2)(3 4), (1 3))`.

use std::sync::Arc;

use super::group::{block_subgroup, diag_subgroup, slots_subgroup, Group};
use super::perm::Perm;
use crate::error::{Error, Result};

/// `Δ_k(S_p)·S_k^[p] ≤ S_pk`: generators of `Δ_k(S_p)` first, then those of `S_k^[p]`.
pub fn sp_times_sk(p: usize, k: usize) -> Result<Arc<Group>> {
    let sp = Group::symmetric(p)?;
    let sk = Group::symmetric(k)?;
    let mut gens = diag_subgroup(&sp, k);
    gens.extend(block_subgroup(&sk, p));
    Group::generated(p * k, gens, format!("D{k}(S{p})S{k}^[{p}]"))
}

/// `Δ_p(S_k)·S_p^[k] ≤ S_pk`: generators of `Δ_p(S_k)` first, then those of `S_p^[k]`.
pub fn sk_times_sp(k: usize, p: usize) -> Result<Arc<Group>> {
    let sk = Group::symmetric(k)?;
    let sp = Group::symmetric(p)?;
    let mut gens = diag_subgroup(&sk, p);
    gens.extend(block_subgroup(&sp, k));
    Group::generated(p * k, gens, format!("D{p}(S{k})S{p}^[{k}]"))
}

/// `S_k ≀ S_p = (∏_r S_k[r])·S_p^[k] ≤ S_pk`: slot generators (slot-major), then block generators.
pub fn wreath(k: usize, p: usize) -> Result<Arc<Group>> {
    let sk = Group::symmetric(k)?;
    let sp = Group::symmetric(p)?;
    let mut gens = slots_subgroup(&sk, p);
    gens.extend(block_subgroup(&sp, k));
    Group::generated(p * k, gens, format!("S{k}wrS{p}"))
}

/// `Δ_k(C_p) ≤ S_pk`, generated by `Δ_k((1 2 ... p))`.
pub fn cyclic_diag(p: usize, k: usize) -> Result<Arc<Group>> {
    let cp = Group::cyclic(p)?;
    Group::generated(p * k, diag_subgroup(&cp, k), format!("D{k}(C{p})"))
}

/// `C_k^[p] ≤ S_pk`.
pub fn cyclic_blocks(k: usize, p: usize) -> Result<Arc<Group>> {
    let ck = Group::cyclic(k)?;
    Group::generated(p * k, block_subgroup(&ck, p), format!("C{k}^[{p}]"))
}

/// `Δ_k(S_p) ≤ S_pk`.
pub fn sp_diag(p: usize, k: usize) -> Result<Arc<Group>> {
    let sp = Group::symmetric(p)?;
    Group::generated(p * k, diag_subgroup(&sp, k), format!("D{k}(S{p})"))
}

/// `D = Δ_k(S_p)·C_k^[p] ≤ S_pk`: generators of `Δ_k(S_p)` first, then `(1 2 ... k)^[p]`.
pub fn lambda_subgroup(p: usize, k: usize) -> Result<Arc<Group>> {
    let sp = Group::symmetric(p)?;
    let ck = Group::cyclic(k)?;
    let mut gens = diag_subgroup(&sp, k);
    gens.extend(block_subgroup(&ck, p));
    Group::generated(p * k, gens, format!("D{k}(S{p})C{k}^[{p}]"))
}

fn num(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Parse(format!("bad {what} `{s}`")))
}

fn args2(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected two arguments in `{s}`")))?;
    Ok((num(a, "argument")?, num(b, "argument")?))
}

/// Parses the subgroup mini-language.
pub fn parse_subgroup(spec: &str) -> Result<Arc<Group>> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("gens(") {
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed `gens(` in `{s}`")))?;
        let (n, list) = body
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected `gens(n: ...)`".into()))?;
        let n = num(n, "degree")?;
        let mut gens = Vec::new();
        // split on commas that sit between cycles
        let mut depth = 0;
        let mut cur = String::new();
        for ch in list.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if ch == ',' && depth == 0 {
                gens.push(Perm::parse(&cur, n)?);
                cur.clear();
            } else {
                cur.push(ch);
            }
        }
        if !cur.trim().is_empty() {
            gens.push(Perm::parse(&cur, n)?);
        }
        return Group::generated(n, gens, s.to_string());
    }
    if let Some(rest) = s.strip_prefix("wreath(") {
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed `wreath(` in `{s}`")))?;
        let (k, p) = args2(body)?;
        return wreath(k, p);
    }
    if let Some(rest) = s.strip_prefix("D(") {
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed `D(` in `{s}`")))?;
        let (p, k) = args2(body)?;
        return lambda_subgroup(p, k);
    }
    if let Some((a, b)) = s.split_once(" x ") {
        let p = num(a.trim().strip_prefix('S').unwrap_or("?"), "S_p")?;
        let k = num(b.trim().strip_prefix('S').unwrap_or("?"), "S_k")?;
        return sp_times_sk(p, k);
    }
    if let Some((head, tail)) = s.split_once('@') {
        let c = num(head.trim().strip_prefix('C').unwrap_or("?"), "cyclic order")?;
        if let Some(arg) = tail.strip_prefix("diag(").and_then(|t| t.strip_suffix(')')) {
            return cyclic_diag(c, num(arg, "copies")?);
        }
        if let Some(arg) = tail.strip_prefix("blocks(").and_then(|t| t.strip_suffix(')')) {
            return cyclic_blocks(c, num(arg, "block size")?);
        }
        return Err(Error::Parse(format!("unknown embedding `{tail}`")));
    }
    if let Some(n) = s.strip_prefix('S') {
        return Group::symmetric(num(n, "degree")?);
    }
    if let Some(n) = s.strip_prefix('C') {
        return Group::cyclic(num(n, "order")?);
    }
    Err(Error::Parse(format!("unrecognized subgroup `{s}`")))
}
