//! Irreducibility testing and chopping into composition factors.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::gflin::{spin, Mat, Poly};
use crate::rng;

use super::hom::hom_space;
use super::module::Module;

const SPLIT_ATTEMPTS: usize = 80;

pub enum Split {
    Irreducible,
    /// A proper nonzero submodule, as a basis in row echelon form.
    Proper(Mat),
}

fn random_combination<R: Rng>(pool: &[Mat], rng: &mut R) -> Mat {
    let f = pool[0].field().clone();
    let n = pool[0].rows();
    let mut a = Mat::zeros(&f, n, n);
    let terms = rng.gen_range(1..=3.min(pool.len()));
    let chosen: Vec<&Mat> = pool.choose_multiple(rng, terms).collect();
    for m in chosen {
        let c = rng.gen_range(1..f.q()) as crate::gflin::Elem;
        a.add_scaled(c, m);
    }
    a
}

fn is_proper(basis: &Mat, dim: usize) -> bool {
    basis.rows() > 0 && basis.rows() < dim
}

/// Holt–Rees MeatAxe step: proves irreducibility or finds a proper submodule.
pub fn split(m: &Module) -> Result<Split> {
    let dim = m.dim();
    if dim <= 1 {
        return Ok(Split::Irreducible);
    }
    let f = m.field().clone();
    let ops = m.action().to_vec();
    let tops: Vec<Mat> = ops.iter().map(|a| a.transpose()).collect();
    let mut rng = rng::stream(&format!("meataxe:{}:{}", m.label(), dim));
    let mut pool = ops.clone();
    for _ in 0..SPLIT_ATTEMPTS {
        let i = rng.gen_range(0..pool.len());
        let j = rng.gen_range(0..pool.len());
        let prod = pool[i].mul(&pool[j]);
        pool.push(prod);
        let a = random_combination(&pool, &mut rng);
        let cp = Poly::charpoly(&a);
        let mut factors = cp.irreducible_factors(&mut rng);
        factors.sort_by_key(|p| p.degree());
        for fac in factors.iter().take(3) {
            let deg = fac.degree().unwrap_or(0);
            let fa = fac.eval_mat(&a);
            let kern = fa.kernel_basis();
            if kern.rows() == 0 {
                continue;
            }
            let tries = if kern.rows() == deg { 1 } else { 3 };
            for t in 0..tries {
                let v = if t == 0 {
                    kern.row_mat(0)
                } else {
                    Mat::random(&f, 1, kern.rows(), &mut rng).mul(&kern)
                };
                if v.is_zero() {
                    continue;
                }
                let sp = spin(&v, &ops)?;
                if is_proper(&sp, dim) {
                    return Ok(Split::Proper(sp));
                }
            }
            if kern.rows() == deg {
                let wk = fa.transpose().kernel_basis();
                let w = wk.row_mat(0);
                let sp = spin(&w, &tops)?;
                if is_proper(&sp, dim) {
                    let sub = sp.transpose().kernel_basis().row_space();
                    return Ok(Split::Proper(sub));
                }
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::SplitFailure(SPLIT_ATTEMPTS))
}

pub fn is_irreducible(m: &Module) -> Result<bool> {
    Ok(matches!(split(m)?, Split::Irreducible))
}

/// Composition factors, listed with repetition.
pub fn composition_factors(m: &Module) -> Result<Vec<Module>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match split(&x)? {
            Split::Irreducible => out.push(x),
            Split::Proper(sub) => {
                let (q, _) = x.quotient(&sub);
                stack.push(x.submodule(&sub));
                stack.push(q);
            }
        }
    }
    Ok(out)
}

/// Isomorphism of simple modules.
pub fn simples_isomorphic(s: &Module, t: &Module) -> Result<bool> {
    Ok(s.dim() == t.dim() && hom_space(s, t)?.dim() > 0)
}

/// Distinct composition factors with multiplicities, sorted by dimension.
pub fn distinct_factors(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut out: Vec<(Module, usize)> = Vec::new();
    for s in composition_factors(m)? {
        let mut found = false;
        for (t, mult) in out.iter_mut() {
            if simples_isomorphic(&s, t)? {
                *mult += 1;
                found = true;
                break;
            }
        }
        if !found {
            out.push((s, 1));
        }
    }
    out.sort_by_key(|(s, _)| s.dim());
    Ok(out)
}
