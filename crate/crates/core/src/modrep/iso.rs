//! Isomorphism testing and periods.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gflin::{Elem, Mat};
use crate::rng;

use super::decompose::{decompose, indecomposables_isomorphic, projective_free};
use super::heller::heller;
use super::hom::hom_space;
use super::module::Module;

const RANDOM_DRAWS: usize = 200;

#[derive(Clone, Debug)]
pub enum Iso {
    /// An invertible intertwiner `M -> N`.
    Yes(Mat),
    No,
    Inconclusive(String),
}

impl Iso {
    pub fn is_yes(&self) -> bool {
        matches!(self, Iso::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, Iso::No)
    }
}

/// Isomorphism test with a verified witness when positive.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<Iso> {
    if m.dim() != n.dim() {
        return Ok(Iso::No);
    }
    if **m.field() != **n.field() || *m.group() != *n.group() {
        return Err(Error::ContextMismatch("isomorphism test across contexts".into()));
    }
    if m.dim() == 0 {
        return Ok(Iso::Yes(Mat::zeros(m.field(), 0, 0)));
    }
    let mn = hom_space(m, n)?;
    if mn.dim() == 0 {
        return Ok(Iso::No);
    }
    let nm = hom_space(n, m)?;
    let mm = hom_space(m, m)?;
    if mn.dim() != mm.dim() || nm.dim() != mm.dim() {
        return Ok(Iso::No);
    }
    for phi in &mn.basis {
        if phi.is_invertible() {
            return Ok(Iso::Yes(phi.clone()));
        }
    }
    let q = m.field().q();
    let mut rng = rng::stream(&format!("iso:{}:{}:{}", m.label(), n.label(), m.dim()));
    for _ in 0..RANDOM_DRAWS {
        let c: Vec<Elem> = (0..mn.dim()).map(|_| rng.gen_range(0..q) as Elem).collect();
        let phi = mn.combine(&c);
        if phi.is_invertible() {
            return Ok(Iso::Yes(phi));
        }
    }
    match match_decompositions(m, n) {
        Ok(r) => Ok(r),
        Err(e) if e.is_budget() => Ok(Iso::Inconclusive(e.to_string())),
        Err(Error::SplitFailure(k)) => Ok(Iso::Inconclusive(format!("decomposition failed after {k} draws"))),
        Err(e) => Err(e),
    }
}

/// Compares full decompositions and assembles a witness from matched pieces.
fn match_decompositions(m: &Module, n: &Module) -> Result<Iso> {
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.pieces.len() != dn.pieces.len() {
        return Ok(Iso::No);
    }
    let mut used = vec![false; dn.pieces.len()];
    let mut blocks: Vec<(usize, usize, Mat)> = Vec::new();
    for (i, a) in dm.pieces.iter().enumerate() {
        let mut hit = None;
        for (j, b) in dn.pieces.iter().enumerate() {
            if used[j] || a.module.dim() != b.module.dim() {
                continue;
            }
            if let Some(phi) = indecomposables_isomorphic(&a.module, &b.module)? {
                hit = Some((j, phi));
                break;
            }
        }
        match hit {
            Some((j, phi)) => {
                used[j] = true;
                blocks.push((i, j, phi));
            }
            None => return Ok(Iso::No),
        }
    }
    // witness in adapted bases, then converted back: B_M⁻¹ · W · B_N
    let f = m.field();
    let offs = |pieces: &[super::decompose::Piece]| {
        let mut o = Vec::with_capacity(pieces.len());
        let mut acc = 0;
        for p in pieces {
            o.push(acc);
            acc += p.module.dim();
        }
        o
    };
    let om = offs(&dm.pieces);
    let on = offs(&dn.pieces);
    let mut w = Mat::zeros(f, m.dim(), n.dim());
    for (i, j, phi) in &blocks {
        for r in 0..phi.rows() {
            w.row_mut(om[*i] + r)[on[*j]..on[*j] + phi.cols()].copy_from_slice(phi.row(r));
        }
    }
    let bm = dm.change_of_basis();
    let bn = dn.change_of_basis();
    let witness = bm
        .inverse()
        .ok_or_else(|| Error::InvalidModule("decomposition basis is singular".into()))?
        .mul(&w)
        .mul(&bn);
    if !super::hom::is_hom(m, n, &witness) || !witness.is_invertible() {
        return Err(Error::InvalidModule("assembled isomorphism failed verification".into()));
    }
    Ok(Iso::Yes(witness))
}

/// Result of a period search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Period {
    Found(usize),
    ExceedsCap(usize),
}

/// Least `n ≥ 1` with `Ω^n(M) ≅ Ω^0(M)`.
pub fn period(m: &Module, cap: usize) -> Result<Period> {
    Ok(period_certified(m, cap)?.0)
}

/// `period` together with the isomorphism `Ω^n(M) -> Ω^0(M)` when one is found.
pub fn period_certified(m: &Module, cap: usize) -> Result<(Period, Option<Mat>)> {
    let base = projective_free(m)?;
    if base.dim() == 0 {
        return Err(Error::Projective(m.label().to_string()));
    }
    let mut x = base.clone();
    for n in 1..=cap {
        x = heller(&x)?;
        match is_isomorphic(&x, &base)? {
            Iso::Yes(w) => return Ok((Period::Found(n), Some(w))),
            Iso::No => {}
            Iso::Inconclusive(why) => {
                return Err(Error::InvalidModule(format!(
                    "isomorphism test inconclusive at n = {n}: {why}"
                )))
            }
        }
    }
    Ok((Period::ExceedsCap(cap), None))
}
