//! Simple modules and projective indecomposables via peakwords.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::gflin::{Elem, FieldCtx, Mat, Poly};
use crate::rng;
use crate::symgrp::Group;

use super::algebra::GroupAlgebraElement;
use super::hom::{hom_space, hom_spin, spin_operators, Seed};
use super::meataxe::distinct_factors;
use super::module::Module;

const PEAKWORD_ATTEMPTS: usize = 400;

/// A simple module `S` with its projective cover `P(S)`.
#[derive(Clone, Debug)]
pub struct Pim {
    pub simple: Module,
    /// `dim End(S)`.
    pub end_dim: usize,
    pub projective: Module,
    /// Coordinates in `projective` of the idempotent generating it.
    pub generator: Vec<Elem>,
    /// Peakword: `P(S) = e A` with `e` the Fitting idempotent of left multiplication by it.
    pub peakword: GroupAlgebraElement,
    /// A surjection `P(S) -> S`.
    pub top: Mat,
}

/// The simple modules of `F G` and their projective covers.
#[derive(Debug)]
pub struct Pims {
    pub group: Arc<Group>,
    pub field: Arc<FieldCtx>,
    pub pims: Vec<Pim>,
}

/// Kernel and image of a high power of `a`: the Fitting decomposition.
pub fn fitting(a: &Mat) -> (Mat, Mat) {
    let mut pw = a.clone();
    let mut r = pw.rank();
    loop {
        let next = pw.mul(&pw);
        let r2 = next.rank();
        pw = next;
        if r2 == r {
            break;
        }
        r = r2;
    }
    (pw.kernel_basis(), pw.row_space())
}

/// Dimension of the generalized kernel of `a`.
pub fn stable_nullity(a: &Mat) -> usize {
    let n = a.rows();
    let mut pw = a.clone();
    let mut r = pw.rank();
    while r > 0 {
        let next = pw.mul(&pw);
        let r2 = next.rank();
        if r2 == r {
            break;
        }
        pw = next;
        r = r2;
    }
    n - r
}

fn poly_of_algebra(f: &Poly, a: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut acc = GroupAlgebraElement::zero(a.group(), a.field());
    for &c in f.coeffs().iter().rev() {
        acc = acc.mul(a);
        if c != 0 {
            acc = acc.add(&GroupAlgebraElement::one(a.group(), a.field()).scale(c));
        }
    }
    acc
}

fn find_peakword(idx: usize, simples: &[(Module, usize)], salt: &str) -> Result<GroupAlgebraElement> {
    let (s, e) = &simples[idx];
    let g = s.group();
    let f = s.field();
    let mut rng = rng::stream(&format!("peakword:{salt}:{idx}"));
    for attempt in 0..PEAKWORD_ATTEMPTS {
        let support = 2 + attempt / 40;
        let mut a = GroupAlgebraElement::random(g, f, support, &mut rng);
        if rng.gen_bool(0.5) {
            a = a.add(&GroupAlgebraElement::one(g, f).scale(rng.gen_range(0..f.q()) as Elem));
        }
        let am = a.matrix_on(s);
        let cp = Poly::charpoly(&am);
        for fac in cp.irreducible_factors(&mut rng) {
            if fac.degree().unwrap_or(0) > *e {
                continue;
            }
            if stable_nullity(&fac.eval_mat(&am)) != *e {
                continue;
            }
            let others_ok = simples.iter().enumerate().all(|(j, (t, _))| {
                j == idx || fac.eval_mat(&a.matrix_on(t)).is_invertible()
            });
            if others_ok {
                return Ok(poly_of_algebra(&fac, &a));
            }
        }
    }
    Err(Error::SplitFailure(PEAKWORD_ATTEMPTS))
}

/// Homomorphisms `P(S) -> M`, one for each basis vector of `M e`.
pub fn hom_from_pim(pim: &Pim, m: &Module) -> Result<Vec<Mat>> {
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    let w = pim.peakword.matrix_on(m);
    let (kern, _) = fitting(&w);
    if kern.rows() == 0 {
        return Ok(Vec::new());
    }
    let p = &pim.projective;
    let seeds = [Seed {
        vector: pim.generator.clone(),
        images: kern,
    }];
    Ok(hom_spin(
        p.field(),
        &spin_operators(p),
        &spin_operators(m),
        p.dim(),
        m.dim(),
        &seeds,
    ))
}

fn compute(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Result<Pims> {
    let p = field.p() as usize;
    let sylow = group.sylow(p)?;
    let coset = Module::coset_module(group, &sylow, field)?;
    let found = distinct_factors(&coset)?;
    let mut simples = Vec::new();
    for (s, _) in found {
        let e = hom_space(&s, &s)?.dim();
        simples.push((s, e));
    }
    let regular = Module::regular(group, field);
    let salt = format!("{}:{}", group.descriptor(), field.name());
    let mut pims = Vec::new();
    for idx in 0..simples.len() {
        let w = find_peakword(idx, &simples, &salt)?;
        let (kern, image) = fitting(&w.left_mult_matrix());
        let projective = regular.submodule(&kern).with_label(format!("P{}", idx));
        // split the identity along kernel + image
        let basis = kern.vstack(&image);
        let one = GroupAlgebraElement::one(group, field).to_row();
        let coords = basis
            .solve_left(&one)
            .ok_or_else(|| Error::InvalidModule("Fitting decomposition failed".into()))?;
        let generator = coords.row(0)[..kern.rows()].to_vec();
        let mut pim = Pim {
            simple: simples[idx].0.clone().with_label(format!("S{}", idx)),
            end_dim: simples[idx].1,
            projective,
            generator,
            peakword: w,
            top: Mat::zeros(field, 0, 0),
        };
        let tops = hom_from_pim(&pim, &pim.simple)?;
        pim.top = tops
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidModule("projective cover has no top".into()))?;
        pims.push(pim);
    }
    let total: usize = pims
        .iter()
        .map(|x| x.projective.dim() * x.simple.dim() / x.end_dim)
        .sum();
    if total != group.order() {
        return Err(Error::InvalidModule(format!(
            "projective covers account for {total} of {} dimensions",
            group.order()
        )));
    }
    Ok(Pims {
        group: group.clone(),
        field: field.clone(),
        pims,
    })
}

type CacheKey = (String, u32, u32, u64);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<OnceLock<Arc<Pims>>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<OnceLock<Arc<Pims>>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Simple modules and projective covers for `F G`, computed once per group, field and seed.
pub fn pims(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Result<Arc<Pims>> {
    let key = (
        group.descriptor(),
        field.p(),
        field.d(),
        rng::global_seed(),
    );
    let cell = cache()
        .lock()
        .expect("cache lock")
        .entry(key)
        .or_default()
        .clone();
    if let Some(v) = cell.get() {
        return Ok(v.clone());
    }
    let computed = Arc::new(compute(group, field)?);
    Ok(cell.get_or_init(|| computed).clone())
}

impl Pims {
    /// Index of the simple module isomorphic to `s`.
    pub fn index_of_simple(&self, s: &Module) -> Result<usize> {
        for (i, pim) in self.pims.iter().enumerate() {
            if pim.simple.dim() == s.dim() && hom_space(&pim.simple, s)?.dim() > 0 {
                return Ok(i);
            }
        }
        Err(Error::InvalidModule("not a simple module of this algebra".into()))
    }
}
