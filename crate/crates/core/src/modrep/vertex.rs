//! Relative projectivity (Higman's criterion), vertices and sources.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gflin::{Elem, Mat};
use crate::rng;
use crate::symgrp::Group;

use super::decompose::{decompose, is_projective};
use super::hom::hom_space;
use super::module::Module;

/// Random draws used when the exact trace computation is too expensive.
const TRACE_DRAWS: usize = 32;
/// Work bound (in field multiplications) for the exact relative-trace test.
const EXACT_TRACE_WORK: usize = 300_000_000;

/// Matrices `ρ(r)` and `ρ(r⁻¹)` for a left transversal `{r}` of `H` in `G`.
fn transversal_matrices(m: &Module, h: &Group) -> Result<Vec<(Mat, Mat)>> {
    let g = m.group();
    let reps = g.transversal(h)?;
    Ok(reps
        .iter()
        .map(|r| (m.element_matrix(r), m.element_matrix(&r.inverse())))
        .collect())
}

/// `Tr_H^G(φ) = Σ_r ρ(r) φ ρ(r⁻¹)`.
pub fn relative_trace(mats: &[(Mat, Mat)], phi: &Mat) -> Mat {
    let mut acc = Mat::zeros(phi.field(), phi.rows(), phi.cols());
    for (a, b) in mats {
        acc = acc.add(&a.mul(phi).mul(b));
    }
    acc
}

fn flatten(m: &Mat) -> Mat {
    Mat::row_vector(m.field(), m.data().to_vec())
}

/// Higman's criterion: whether `id_M` lies in `Tr_H^G(End_H(M))`.
///
/// Exact when affordable; otherwise random endomorphisms are traced and a unit certifies
/// relative projectivity, while a miss after all draws is reported as `false`.
pub fn rel_projective(m: &Module, h: &Arc<Group>) -> Result<bool> {
    if m.dim() == 0 || h.order() == m.group().order() {
        return Ok(true);
    }
    if h.order() == 1 {
        return is_projective(m);
    }
    let res = m.restrict(h)?;
    let end = hom_space(&res, &res)?;
    let mats = transversal_matrices(m, h)?;
    let d = m.dim();
    let work = end.dim() * mats.len() * 2 * d * d * d;
    if work <= EXACT_TRACE_WORK {
        let traces: Vec<Mat> = end.basis.iter().map(|phi| relative_trace(&mats, phi)).collect();
        if traces.iter().any(|t| t.is_invertible()) {
            return Ok(true);
        }
        let span = traces
            .iter()
            .skip(1)
            .fold(flatten(&traces[0]), |acc, t| acc.vstack(&flatten(t)));
        let id = flatten(&Mat::identity(m.field(), d));
        return Ok(span.solve_left(&id).is_some());
    }
    let q = m.field().q();
    let mut rng = rng::stream(&format!("higman:{}:{}:{}", m.label(), h.descriptor(), d));
    for _ in 0..TRACE_DRAWS {
        let c: Vec<Elem> = (0..end.dim()).map(|_| rng.gen_range(0..q) as Elem).collect();
        if relative_trace(&mats, &end.combine(&c)).is_invertible() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A vertex of an indecomposable module: a smallest `p`-subgroup relative to which it is projective.
pub fn vertex(m: &Module) -> Result<Arc<Group>> {
    let p = m.field().p() as usize;
    let mut classes = m.group().p_subgroup_classes(p)?;
    classes.sort_by_key(|q| q.order());
    for q in classes {
        if rel_projective(m, &q)? {
            return Ok(q);
        }
    }
    Err(Error::InvalidModule("no p-subgroup passes Higman's criterion".into()))
}

/// Witness that `M` (indecomposable) is a summand of `Ind_Q^G N`: Q-maps `a: M -> N`,
/// `b: N -> M` with `Tr_Q^G(a b)` invertible.
pub struct InducedWitness {
    pub a: Mat,
    pub b: Mat,
    pub trace: Mat,
}

/// Whether the indecomposable `m` is a direct summand of `Ind_Q^G n`.
pub fn summand_of_induced(m: &Module, n: &Module) -> Result<Option<InducedWitness>> {
    let q = n.group();
    let res = m.restrict(q)?;
    let to_n = hom_space(&res, n)?;
    let from_n = hom_space(n, &res)?;
    if to_n.dim() == 0 || from_n.dim() == 0 {
        return Ok(None);
    }
    let mats = transversal_matrices(m, q)?;
    // Tr(a b) = [ρ(r) a]_r · [b ρ(r⁻¹)]_r
    let left: Vec<Mat> = to_n
        .basis
        .iter()
        .map(|a| {
            let blocks: Vec<Mat> = mats.iter().map(|(x, _)| x.mul(a)).collect();
            blocks.iter().skip(1).fold(blocks[0].clone(), |acc, b| acc.hstack(b))
        })
        .collect();
    let right: Vec<Mat> = from_n
        .basis
        .iter()
        .map(|b| {
            let blocks: Vec<Mat> = mats.iter().map(|(_, y)| b.mul(y)).collect();
            blocks.iter().skip(1).fold(blocks[0].clone(), |acc, x| acc.vstack(x))
        })
        .collect();
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            let t = l.mul(r);
            if t.is_invertible() {
                return Ok(Some(InducedWitness {
                    a: to_n.basis[i].clone(),
                    b: from_n.basis[j].clone(),
                    trace: t,
                }));
            }
        }
    }
    Ok(None)
}

/// A source of the indecomposable `m` at the vertex `q`: an indecomposable summand `N` of
/// `Res_Q M` with `M | Ind_Q^G N`.
pub fn source(m: &Module, q: &Arc<Group>) -> Result<(Module, InducedWitness)> {
    let res = m.restrict(q)?;
    let d = decompose(&res)?;
    for s in &d.summands {
        if let Some(w) = summand_of_induced(m, &s.module)? {
            return Ok((s.module.clone().with_label(format!("source({})", m.label())), w));
        }
    }
    Err(Error::InvalidModule("no summand of the restriction induces back".into()))
}
