//! Radicals, tops, socles, projective covers and Heller translates.

use crate::error::{Error, Result};
use crate::gflin::{Echelon, Mat};

use super::hom::hom_space;
use super::module::Module;
use super::pims::{hom_from_pim, pims};

/// Basis of `rad M`: the common kernel of all maps to simple modules.
pub fn radical(m: &Module) -> Result<Mat> {
    let f = m.field();
    if m.dim() == 0 {
        return Ok(Mat::zeros(f, 0, 0));
    }
    let data = pims(m.group(), f)?;
    let mut maps: Option<Mat> = None;
    for pim in &data.pims {
        for phi in hom_space(m, &pim.simple)?.basis {
            maps = Some(match maps {
                None => phi,
                Some(acc) => acc.hstack(&phi),
            });
        }
    }
    Ok(match maps {
        None => Mat::identity(f, m.dim()),
        Some(all) => all.kernel_basis(),
    })
}

/// `M / rad M` with the projection.
pub fn top(m: &Module) -> Result<(Module, Mat)> {
    let rad = radical(m)?;
    Ok(m.quotient(&rad))
}

/// Basis of `soc M`, the annihilator of `rad M*`.
pub fn socle(m: &Module) -> Result<Mat> {
    let rd = radical(&m.dual())?;
    if rd.rows() == 0 {
        return Ok(Mat::identity(m.field(), m.dim()));
    }
    Ok(rd.transpose().kernel_basis())
}

/// Projective cover: `P = ⊕ P(S)^{m_S}` and a surjection `P -> M`.
pub fn projective_cover(m: &Module) -> Result<(Module, Mat)> {
    let f = m.field();
    let data = pims(m.group(), f)?;
    let (t, q) = top(m)?;
    let mut parts: Vec<Module> = Vec::new();
    let mut maps: Vec<Mat> = Vec::new();
    let mut ech = Echelon::new(f, t.dim());
    for pim in &data.pims {
        if ech.len() == t.dim() {
            break;
        }
        let s = pim.simple.dim();
        for psi in hom_from_pim(pim, m)? {
            let img = psi.mul(&q).row_space();
            let before = ech.len();
            let mut trial = ech.clone();
            for r in 0..img.rows() {
                trial.insert(img.row(r));
            }
            if trial.len() == before + s {
                ech = trial;
                parts.push(pim.projective.clone());
                maps.push(psi);
            }
        }
    }
    if ech.len() != t.dim() {
        return Err(Error::InvalidModule("projective cover does not reach the top".into()));
    }
    if parts.is_empty() {
        return Ok((Module::zero(m.group(), f), Mat::zeros(f, 0, m.dim())));
    }
    let p = Module::direct_sum_all(&parts, m.group(), f)?;
    let pi = maps.iter().skip(1).fold(maps[0].clone(), |acc, x| acc.vstack(x));
    Ok((p, pi))
}

/// `Ω(M)`: the kernel of the projective cover.
pub fn heller(m: &Module) -> Result<Module> {
    if m.dim() == 0 {
        return Ok(m.clone());
    }
    let (p, pi) = projective_cover(m)?;
    if p.dim() == 0 {
        return Ok(Module::zero(m.group(), m.field()));
    }
    let k = pi.kernel_basis();
    Ok(p.submodule(&k).with_label(format!("Omega({})", m.label())))
}

/// `Ω⁻¹(M) = Ω(M*)*`.
pub fn coheller(m: &Module) -> Result<Module> {
    Ok(heller(&m.dual())?
        .dual()
        .with_label(format!("Omega^-1({})", m.label())))
}

/// `Ω^i(M)`; `i = 0` gives the projective-free part.
pub fn omega(m: &Module, i: i32) -> Result<Module> {
    if i == 0 {
        return super::decompose::projective_free(m);
    }
    let mut x = m.clone();
    for _ in 0..i.unsigned_abs() {
        x = if i > 0 { heller(&x)? } else { coheller(&x)? };
    }
    Ok(x.with_label(format!("Omega^{}({})", i, m.label())))
}
