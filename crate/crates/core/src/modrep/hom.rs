//! Homomorphism spaces by spinning with a shrinking parameter space.

use std::sync::Arc;

use crate::error::Result;
use crate::gflin::{Echelon, Elem, FieldCtx, Mat};
use crate::rng;

use super::module::Module;

/// A basis of `Hom_FG(M, N)`; each map is a `dim M × dim N` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Mat>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_i basis_i`.
    pub fn combine(&self, coeffs: &[Elem]) -> Mat {
        let f = self.basis[0].field();
        let mut acc = Mat::zeros(f, self.source_dim, self.target_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc.add_scaled(*c, b);
        }
        acc
    }
}

/// Operators used for spinning: a small generating set of the acting group.
///
/// For `S_n` with its Coxeter generators this is `{s_1, s_1 s_2 ⋯ s_{n-1}}`.
pub fn spin_operators(m: &Module) -> Vec<Mat> {
    let g = m.group();
    let gens = g.gens();
    let n = g.degree();
    let coxeter = gens.len() == n.saturating_sub(1)
        && n >= 3
        && gens
            .iter()
            .enumerate()
            .all(|(i, s)| *s == crate::symgrp::Perm::transposition(n, i + 1, i + 2));
    if coxeter {
        let a = m.action();
        let cyc = a[1..].iter().fold(a[0].clone(), |acc, x| acc.mul(x));
        vec![a[0].clone(), cyc]
    } else {
        m.action().to_vec()
    }
}

/// Seed vectors that generate `m` as a module, chosen from a seeded random stream.
pub fn generating_seeds(m: &Module, ops: &[Mat], salt: &str) -> Vec<Vec<Elem>> {
    let f = m.field();
    let dim = m.dim();
    let mut rng = rng::stream(&format!("seeds:{salt}:{dim}"));
    let mut ech = Echelon::new(f, dim);
    let mut seeds = Vec::new();
    let mut attempts = 0;
    while ech.len() < dim {
        attempts += 1;
        let v = if attempts <= 8 + dim {
            Mat::random(f, 1, dim, &mut rng).into_data()
        } else {
            // standard vectors outside the span
            let j = (0..dim)
                .find(|&j| {
                    let mut e = vec![0; dim];
                    e[j] = 1;
                    !ech.contains(&e)
                })
                .expect("span is proper");
            let mut e = vec![0; dim];
            e[j] = 1;
            e
        };
        if ech.contains(&v) {
            continue;
        }
        seeds.push(v.clone());
        let mut queue_start = ech.len();
        ech.insert(&v);
        while queue_start < ech.len() {
            let u = ech.row(queue_start);
            for op in ops {
                ech.insert(&op.vec_mul(&u));
            }
            queue_start += 1;
        }
    }
    seeds
}

/// A seed vector of the source together with a basis of allowed images in the target.
pub struct Seed {
    pub vector: Vec<Elem>,
    pub images: Mat,
}

/// Core spin: maps from the module on which `src_ops` act to the one on which `dst_ops` act,
/// determined by the images of the seeds. The seeds must generate the source.
pub fn hom_spin(field: &Arc<FieldCtx>, src_ops: &[Mat], dst_ops: &[Mat], src_dim: usize, dst_dim: usize, seeds: &[Seed]) -> Vec<Mat> {
    let n = dst_dim;
    let mut p: usize = seeds.iter().map(|s| s.images.rows()).sum();
    if p == 0 {
        return Vec::new();
    }
    let mut ech = Echelon::new(field, src_dim);
    let mut tmats: Vec<Mat> = Vec::new();
    let mut pending: Vec<Mat> = Vec::new();

    // Inserts vector `w` whose image parameter matrix is `t`.
    fn insert(
        field: &Arc<FieldCtx>,
        ech: &mut Echelon,
        tmats: &mut Vec<Mat>,
        pending: &mut Vec<Mat>,
        mut w: Vec<Elem>,
        mut t: Mat,
    ) {
        let coords = ech.reduce_with_coords(&mut w);
        for (l, &c) in coords.iter().enumerate() {
            if c != 0 {
                t.add_scaled(field.neg(c), &tmats[l]);
            }
        }
        match w.iter().position(|&x| x != 0) {
            Some(pc) => {
                let inv = field.inv(w[pc]);
                ech.push_reduced(w);
                tmats.push(t.scaled(inv));
            }
            None => {
                if !t.is_zero() {
                    pending.push(t);
                }
            }
        }
    }

    let flush = |tmats: &mut Vec<Mat>, pending: &mut Vec<Mat>, p: &mut usize| {
        if pending.is_empty() {
            return;
        }
        let stacked = pending
            .iter()
            .skip(1)
            .fold(pending[0].clone(), |acc, m| acc.hstack(m));
        pending.clear();
        let k = stacked.kernel_basis();
        if k.rows() == *p {
            return;
        }
        *p = k.rows();
        for t in tmats.iter_mut() {
            *t = k.mul(t);
        }
    };

    let mut offset = 0;
    for s in seeds {
        let mut t = Mat::zeros(field, p, n);
        for r in 0..s.images.rows() {
            t.row_mut(offset + r).copy_from_slice(s.images.row(r));
        }
        offset += s.images.rows();
        insert(field, &mut ech, &mut tmats, &mut pending, s.vector.clone(), t);
    }
    flush(&mut tmats, &mut pending, &mut p);
    let mut next = 0;
    while next < ech.len() && p > 0 {
        let u = ech.row(next);
        for (a, b) in src_ops.iter().zip(dst_ops) {
            let w = a.vec_mul(&u);
            let t = tmats[next].mul(b);
            insert(field, &mut ech, &mut tmats, &mut pending, w, t);
            if pending.len() >= 4 || pending.len() * n >= p {
                flush(&mut tmats, &mut pending, &mut p);
            }
        }
        next += 1;
    }
    flush(&mut tmats, &mut pending, &mut p);
    if p == 0 {
        return Vec::new();
    }
    assert_eq!(ech.len(), src_dim, "seeds do not generate the source");
    let e_inv = ech.to_mat().inverse().expect("echelon basis is invertible");
    (0..p)
        .map(|s| {
            let mut phi_e = Mat::zeros(field, src_dim, n);
            for (l, t) in tmats.iter().enumerate() {
                phi_e.row_mut(l).copy_from_slice(t.row(s));
            }
            e_inv.mul(&phi_e)
        })
        .collect()
}

fn hom_direct(m: &Module, n: &Module) -> Vec<Mat> {
    let f = m.field();
    let src_ops = spin_operators(m);
    let dst_ops = spin_operators(n);
    let seeds = generating_seeds(m, &src_ops, m.label());
    let seeds: Vec<Seed> = seeds
        .into_iter()
        .map(|v| Seed {
            vector: v,
            images: Mat::identity(f, n.dim()),
        })
        .collect();
    hom_spin(f, &src_ops, &dst_ops, m.dim(), n.dim(), &seeds)
}

/// Basis of `Hom_FG(M, N)`.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    if **m.field() != **n.field() {
        return Err(crate::Error::FieldMismatch("hom between different fields".into()));
    }
    if *m.group() != *n.group() {
        return Err(crate::Error::ContextMismatch(format!(
            "{} vs {}",
            m.group().name(),
            n.group().name()
        )));
    }
    let basis = if m.dim() == 0 || n.dim() == 0 {
        Vec::new()
    } else if n.dim() <= m.dim() {
        hom_direct(m, n)
    } else {
        hom_direct(&n.dual(), &m.dual())
            .into_iter()
            .map(|b| b.transpose())
            .collect()
    };
    Ok(HomSpace {
        source_dim: m.dim(),
        target_dim: n.dim(),
        basis,
    })
}

/// Checks the intertwining property on the generators.
pub fn is_hom(m: &Module, n: &Module, phi: &Mat) -> bool {
    phi.rows() == m.dim()
        && phi.cols() == n.dim()
        && m
            .action()
            .iter()
            .zip(n.action())
            .all(|(a, b)| a.mul(phi) == phi.mul(b))
}
