//! Krull–Schmidt decomposition by splitting endomorphism rings.

use rand::Rng;

use crate::error::{Error, Result};
use crate::gflin::{Elem, Mat, Poly};
use crate::rng;

use super::hom::{hom_space, HomSpace};
use super::module::Module;
use super::pims::{fitting, pims};

/// Default dimension budget for decomposition.
pub const DECOMPOSE_BUDGET: usize = 2000;

/// Consecutive random endomorphisms with a single characteristic-polynomial factor
/// accepted as a certificate that the endomorphism ring is local.
const LOCAL_DRAWS: usize = 40;

/// One indecomposable summand, up to isomorphism, with its multiplicity.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub multiplicity: usize,
    pub projective: bool,
}

/// One copy of an indecomposable summand inside the decomposed module.
#[derive(Clone, Debug)]
pub struct Piece {
    /// Rows spanning the copy, in the coordinates of the decomposed module.
    pub basis: Mat,
    pub module: Module,
    /// Index into `Decomposition::summands`.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub pieces: Vec<Piece>,
}

impl Decomposition {
    /// Rows of all pieces stacked: the adapted basis.
    pub fn change_of_basis(&self) -> Mat {
        let mut it = self.pieces.iter();
        let first = it.next().expect("nonzero module").basis.clone();
        it.fold(first, |acc, p| acc.vstack(&p.basis))
    }

    pub fn total_dim(&self) -> usize {
        self.summands
            .iter()
            .map(|s| s.multiplicity * s.module.dim())
            .sum()
    }

    /// Non-projective summand classes.
    pub fn nonprojective(&self) -> impl Iterator<Item = &Summand> {
        self.summands.iter().filter(|s| !s.projective)
    }
}

fn random_endomorphism<R: Rng>(end: &HomSpace, rng: &mut R) -> Mat {
    let q = end.basis[0].field().q();
    let coeffs: Vec<Elem> = (0..end.dim()).map(|_| rng.gen_range(0..q) as Elem).collect();
    end.combine(&coeffs)
}

/// Splits `m` into two nonzero complementary submodules, or certifies it indecomposable.
pub fn split_once(m: &Module) -> Result<Option<(Mat, Mat)>> {
    if m.dim() <= 1 {
        return Ok(None);
    }
    let end = hom_space(m, m)?;
    if end.dim() <= 1 {
        return Ok(None);
    }
    let mut rng = rng::stream(&format!("decompose:{}:{}", m.label(), m.dim()));
    for _ in 0..LOCAL_DRAWS {
        let theta = random_endomorphism(&end, &mut rng);
        let factors = Poly::charpoly(&theta).irreducible_factors(&mut rng);
        if factors.len() >= 2 {
            let (k, im) = fitting(&factors[0].eval_mat(&theta));
            if k.rows() == 0 || im.rows() == 0 {
                return Err(Error::SplitFailure(LOCAL_DRAWS));
            }
            return Ok(Some((k, im)));
        }
    }
    Ok(None)
}

/// Whether `m` is projective: the projective cover has the same dimension.
pub fn is_projective(m: &Module) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(true);
    }
    let data = pims(m.group(), m.field())?;
    let mut cover = 0;
    for pim in &data.pims {
        let h = hom_space(m, &pim.simple)?.dim();
        cover += h / pim.end_dim * pim.projective.dim();
        if cover > m.dim() {
            return Ok(false);
        }
    }
    Ok(cover == m.dim())
}

/// Deterministic isomorphism test for indecomposable modules: some product of hom
/// basis elements is a unit of the local ring `End(a)`.
pub fn indecomposables_isomorphic(a: &Module, b: &Module) -> Result<Option<Mat>> {
    if a.dim() != b.dim() {
        return Ok(None);
    }
    let ab = hom_space(a, b)?;
    for phi in &ab.basis {
        if phi.is_invertible() {
            return Ok(Some(phi.clone()));
        }
    }
    if ab.dim() == 0 {
        return Ok(None);
    }
    let ba = hom_space(b, a)?;
    for phi in &ab.basis {
        for psi in &ba.basis {
            if phi.mul(psi).is_invertible() {
                return Ok(Some(phi.clone()));
            }
        }
    }
    Ok(None)
}

/// Full decomposition into indecomposables, grouped by isomorphism type.
pub fn decompose(m: &Module) -> Result<Decomposition> {
    decompose_with_budget(m, DECOMPOSE_BUDGET)
}

pub fn decompose_with_budget(m: &Module, budget: usize) -> Result<Decomposition> {
    if m.dim() > budget {
        return Err(Error::Budget {
            what: "decompose",
            needed: m.dim(),
            limit: budget,
        });
    }
    if m.dim() == 0 {
        return Ok(Decomposition {
            summands: Vec::new(),
            pieces: Vec::new(),
        });
    }
    let f = m.field();
    let mut stack = vec![(Mat::identity(f, m.dim()), m.clone())];
    let mut found: Vec<(Mat, Module)> = Vec::new();
    while let Some((basis, x)) = stack.pop() {
        match split_once(&x)? {
            None => found.push((basis, x)),
            Some((k, im)) => {
                let (xk, xi) = (x.submodule(&k), x.submodule(&im));
                stack.push((im.mul(&basis), xi));
                stack.push((k.mul(&basis), xk));
            }
        }
    }
    let mut summands: Vec<Summand> = Vec::new();
    let mut pieces = Vec::new();
    for (basis, x) in found {
        let mut class = None;
        for (i, s) in summands.iter().enumerate() {
            if indecomposables_isomorphic(&s.module, &x)?.is_some() {
                class = Some(i);
                break;
            }
        }
        let class = match class {
            Some(i) => {
                summands[i].multiplicity += 1;
                i
            }
            None => {
                summands.push(Summand {
                    projective: is_projective(&x)?,
                    module: x.clone(),
                    multiplicity: 1,
                });
                summands.len() - 1
            }
        };
        pieces.push(Piece {
            basis,
            module: x,
            class,
        });
    }
    // order classes by dimension, keeping discovery order among equals
    let mut order: Vec<usize> = (0..summands.len()).collect();
    order.sort_by_key(|&i| (summands[i].module.dim(), summands[i].projective));
    let mut rank = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let summands: Vec<Summand> = order.iter().map(|&i| summands[i].clone()).collect();
    let mut pieces: Vec<Piece> = pieces
        .into_iter()
        .map(|mut p| {
            p.class = rank[p.class];
            p
        })
        .collect();
    pieces.sort_by_key(|p| p.class);
    Ok(Decomposition { summands, pieces })
}

/// Direct sum of the non-projective summands, as a submodule of `m`.
pub fn projective_free(m: &Module) -> Result<Module> {
    let d = decompose(m)?;
    let rows: Vec<&Piece> = d
        .pieces
        .iter()
        .filter(|p| !d.summands[p.class].projective)
        .collect();
    if rows.is_empty() {
        return Ok(Module::zero(m.group(), m.field()).with_label(format!("pf({})", m.label())));
    }
    let basis = rows
        .iter()
        .skip(1)
        .fold(rows[0].basis.clone(), |acc, p| acc.vstack(&p.basis));
    Ok(m.submodule(&basis).with_label(format!("pf({})", m.label())))
}
