//! Independent oracles: exhaustive submodule search, Frobenius reciprocity, Heller
//! inverses and Mackey dimension counts, plus elementary algebra checks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::gflin::{field_make, spin, Elem, FieldCtx, Mat, Poly};
use crate::liecore::{exterior_power, lambda_base, standard_module};
use crate::modrep::{coheller, heller, hom_space, is_isomorphic, projective_free, split, Iso, Module, Split};
use crate::rng;
use crate::symgrp::spec::{lambda_subgroup, sp_diag};
use crate::symgrp::{Group, Perm};

use super::context::Ctx;
use super::report::{Verdict, Witness};

const FROBENIUS_INSTANCES: u64 = 50;
const OMEGA_INSTANCES: u64 = 20;
const MEATAXE_MAX_DIM: usize = 6;

/// Exhaustive search for a proper nonzero submodule: spins every nonzero vector with leading
/// coefficient 1. `None` means the module is irreducible.
pub fn exhaustive_submodules(m: &Module) -> Option<Mat> {
    let d = m.dim();
    let f = m.field();
    let q = f.q() as u64;
    let total = q.pow(d as u32);
    for code in 1..total {
        let mut v = vec![0 as Elem; d];
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % q) as Elem;
            c /= q;
        }
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let basis = spin(&Mat::row_vector(f, v), m.action()).expect("spin of a row vector");
        if basis.rows() < d {
            return Some(basis);
        }
    }
    None
}

fn symmetric_pool(n: usize, f: &Arc<FieldCtx>) -> Result<Vec<Module>> {
    let g = Group::symmetric(n)?;
    let std = standard_module(n, f)?;
    let mut pool = vec![
        Module::trivial(&g, f),
        Module::sign(&g, f),
        Module::natural_perm(&g, f),
        std.clone(),
        std.dual().with_label("std*"),
        exterior_power(&std, 2)?,
    ];
    if n <= 3 {
        pool.push(Module::regular(&g, f));
    }
    if n >= 3 {
        let pts: Vec<usize> = (1..=n).collect();
        let cyc = g.subgroup(vec![Perm::cycle(n, &pts)?], format!("C{n}"))?;
        pool.push(Module::coset_module(&g, &cyc, f)?);
    }
    Ok(pool)
}

fn random_basis_change<R: Rng>(m: &Module, rng: &mut R) -> Module {
    loop {
        let b = Mat::random(m.field(), m.dim(), m.dim(), rng);
        if b.is_invertible() {
            return m.change_basis(&b);
        }
    }
}

/// Meataxe verdicts compared with exhaustive search on every module of dimension at most 6
/// in a fixed pool, each in a random basis.
pub fn meataxe_agreement() -> Result<(usize, Vec<String>)> {
    let mut rng = rng::stream("oracle:meataxe");
    let mut checked = 0;
    let mut bad = Vec::new();
    for (n, p, d) in [(3, 2, 1), (3, 3, 1), (4, 2, 1), (4, 3, 1), (5, 5, 1), (3, 2, 2), (5, 2, 1)] {
        let f = field_make(p, d)?;
        for m in symmetric_pool(n, &f)? {
            if m.dim() > MEATAXE_MAX_DIM || m.dim() == 0 {
                continue;
            }
            let m = random_basis_change(&m, &mut rng);
            let truth = exhaustive_submodules(&m);
            let ok = match split(&m)? {
                Split::Irreducible => truth.is_none(),
                Split::Proper(b) => truth.is_some() && b.rows() > 0 && b.rows() < m.dim() && m.is_invariant(&b),
            };
            checked += 1;
            if !ok {
                bad.push(format!("S{n} over {}: {}", f.name(), m.label()));
            }
        }
    }
    Ok((checked, bad))
}

fn subgroup_pool(g: &Arc<Group>) -> Result<Vec<Arc<Group>>> {
    let n = g.degree();
    let pts: Vec<usize> = (1..=n).collect();
    let mut out = vec![
        g.subgroup(vec![Perm::cycle(n, &pts)?], format!("C{n}"))?,
        g.subgroup(g.gens()[..n - 2].to_vec(), format!("S{}", n - 1))?,
        g.subgroup(vec![Perm::transposition(n, 1, 2)], "S2")?,
    ];
    if n >= 4 {
        out.push(g.subgroup(
            vec![Perm::transposition(n, 1, 2), Perm::transposition(n, 3, 4)],
            "S2xS2",
        )?);
    }
    Ok(out)
}

/// One seeded Frobenius-reciprocity instance: returns a description and the two hom dimensions
/// `dim Hom_G(Ind N, M)` and `dim Hom_H(N, Res M)`.
pub fn frobenius_instance(i: u64) -> Result<(String, usize, usize)> {
    let mut rng = rng::stream(&format!("oracle:frobenius:{i}"));
    let (n, p) = *[(3, 2), (3, 3), (4, 2), (4, 3)].choose(&mut rng).expect("nonempty");
    let f = field_make(p, 1)?;
    let g = Group::symmetric(n)?;
    let h = subgroup_pool(&g)?.choose(&mut rng).expect("nonempty").clone();
    let pool = symmetric_pool(n, &f)?;
    let m = pool.choose(&mut rng).expect("nonempty").clone();
    let from = pool.choose(&mut rng).expect("nonempty").restrict(&h)?;
    let nmod = if rng.gen_bool(0.3) {
        Module::regular(&h, &f)
    } else {
        from
    };
    let lhs = hom_space(&nmod.induce(&g)?, &m)?.dim();
    let rhs = hom_space(&nmod, &m.restrict(&h)?)?.dim();
    Ok((
        format!("S{n}/GF({p}): H = {}, N = {}, M = {}", h.name(), nmod.label(), m.label()),
        lhs,
        rhs,
    ))
}

/// One seeded instance of `Ω(Ω⁻¹(M)) ≅ Ω⁰(M) ≅ Ω⁻¹(Ω(M))`; returns a description and the two
/// verdicts.
pub fn omega_inverse_instance(i: u64) -> Result<(String, Iso, Iso)> {
    let mut rng = rng::stream(&format!("oracle:omega:{i}"));
    let (n, p) = *[(3, 2), (3, 3), (4, 2), (4, 3), (5, 5)].choose(&mut rng).expect("nonempty");
    let f = field_make(p, 1)?;
    let pool: Vec<Module> = symmetric_pool(n, &f)?
        .into_iter()
        .filter(|m| m.dim() <= 12)
        .collect();
    let m = pool.choose(&mut rng).expect("nonempty").clone();
    let base = projective_free(&m)?;
    let a = heller(&coheller(&m)?)?;
    let b = coheller(&heller(&m)?)?;
    Ok((
        format!("S{n}/GF({p}): {}", m.label()),
        is_isomorphic(&a, &base)?,
        is_isomorphic(&b, &base)?,
    ))
}

/// `dim Res_Δ Ind_D^{S_pk} (F ⊠ F_δ)` and the Mackey sum `Σ_x [Δ : Δ ∩ xDx⁻¹]`, computed from
/// an independent double-coset enumeration.
pub fn mackey_dimensions(p: usize, k: usize) -> Result<(usize, usize)> {
    let g = Group::symmetric(p * k)?;
    let delta = sp_diag(p, k)?;
    let d = lambda_subgroup(p, k)?;
    let mut sum = 0;
    for x in g.double_cosets(&delta, &d)? {
        let inter = delta
            .elements()
            .iter()
            .filter(|a| d.contains(&a.conjugate_by(&x.inverse())))
            .count();
        sum += delta.order() / inter;
    }
    let dim = g.order() / d.order();
    Ok((dim, sum))
}

/// `Res_Δ Ind_D^G V ≅ ⊕_x Ind_{Δ ∩ xDx⁻¹}^Δ (x ⊗ Res V)` for `V = F ⊠ F_δ`.
pub fn mackey_isomorphism(p: usize, k: usize, f: &Arc<FieldCtx>, zeta: Elem) -> Result<Iso> {
    let g = Group::symmetric(p * k)?;
    let delta = sp_diag(p, k)?;
    let base = lambda_base(p, k, f, zeta)?;
    let d = base.group().clone();
    let lhs = base.induce(&g)?.restrict(&delta)?;
    let mut parts = Vec::new();
    for x in g.double_cosets(&delta, &d)? {
        let inter = crate::symgrp::classify::conjugate_intersection(&delta, &d, &x)?;
        let back = Group::conjugate(&inter, &x.inverse())?;
        let piece = base.restrict(&back)?.conjugate(&x, &inter)?;
        parts.push(piece.induce(&delta)?);
    }
    let rhs = Module::direct_sum_all(&parts, &delta, f)?;
    is_isomorphic(&lhs, &rhs)
}

pub fn oracle_suite(ctx: &mut Ctx) -> Result<()> {
    ctx.phase("meataxe vs exhaustive search");
    let (n, bad) = meataxe_agreement()?;
    let w = vec![Witness::value("modules checked", n), Witness::value("disagreements", bad.join("; "))];
    ctx.record(format!("meataxe agrees with exhaustive submodule search (dim ≤ {MEATAXE_MAX_DIM})"), bad.is_empty(), w);

    ctx.phase("Frobenius reciprocity");
    let mut bad = Vec::new();
    for i in 0..FROBENIUS_INSTANCES {
        let (what, a, b) = frobenius_instance(i)?;
        if a != b {
            bad.push(format!("#{i} {what}: {a} vs {b}"));
        }
    }
    let w = vec![Witness::value("instances", FROBENIUS_INSTANCES), Witness::value("mismatches", bad.join("; "))];
    ctx.record("dim Hom_G(Ind N, M) = dim Hom_H(N, Res M)", bad.is_empty(), w);

    ctx.phase("Heller inverse");
    let mut bad = Vec::new();
    let mut unsure = Vec::new();
    for i in 0..OMEGA_INSTANCES {
        let (what, a, b) = omega_inverse_instance(i)?;
        for (name, iso) in [("ΩΩ⁻¹", a), ("Ω⁻¹Ω", b)] {
            match iso {
                Iso::Yes(_) => {}
                Iso::No => bad.push(format!("#{i} {what}: {name}")),
                Iso::Inconclusive(why) => unsure.push(format!("#{i} {what}: {name}: {why}")),
            }
        }
    }
    let verdict = if !bad.is_empty() {
        Verdict::Fail
    } else if !unsure.is_empty() {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    ctx.push(
        "Ω(Ω⁻¹(M)) ≅ Ω⁰(M) ≅ Ω⁻¹(Ω(M))",
        verdict,
        vec![Witness::value("instances", OMEGA_INSTANCES), Witness::value("failures", bad.join("; "))],
        (!unsure.is_empty()).then(|| unsure.join("; ")),
    );

    ctx.phase("Mackey");
    for (p, k) in [(2, 1), (3, 1), (3, 2), (2, 3), (5, 1)] {
        let (dim, sum) = mackey_dimensions(p, k)?;
        ctx.record(
            format!("Mackey dimension identity for Λ at (p, k) = ({p}, {k})"),
            dim == sum,
            vec![Witness::value("dim", dim), Witness::value("Σ [Δ : Δ ∩ xDx⁻¹]", sum)],
        );
    }
    for (p, k, d) in [(3, 2, 1), (2, 3, 2)] {
        let f = field_make(p as u32, d)?;
        let zeta = f.root_of_unity(k as u64).expect("root of unity");
        let iso = mackey_isomorphism(p, k, &f, zeta)?;
        ctx.record_iso(
            format!("Mackey decomposition of Res Λ at (p, k) = ({p}, {k})"),
            iso,
            vec![Witness::value("field", f.name())],
        );
    }
    Ok(())
}

pub fn algebra_smoke(ctx: &mut Ctx) -> Result<()> {
    let mut rng = rng::stream("oracle:smoke");
    ctx.phase("fields");
    for (p, d) in [(2, 1), (2, 2), (3, 2), (5, 2), (2, 4), (7, 1)] {
        let f = field_make(p, d)?;
        let q = f.q();
        let mut ok = true;
        for _ in 0..200 {
            let (a, b, c) = (
                rng.gen_range(0..q) as Elem,
                rng.gen_range(0..q) as Elem,
                rng.gen_range(0..q) as Elem,
            );
            ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
            ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
            ok &= a == 0 || f.mul(a, f.inv(a)) == 1;
            ok &= f.pow(a, q as u64) == a;
        }
        ctx.record(format!("{} field axioms on random triples", f.name()), ok, vec![Witness::value("samples", 200)]);
    }
    ctx.phase("matrices");
    for (p, d, n) in [(2, 1, 40), (3, 1, 20), (2, 2, 12)] {
        let f = field_make(p, d)?;
        let a = Mat::random(&f, n, n, &mut rng);
        let b = Mat::random(&f, n, n, &mut rng);
        let inverse_ok = a.inverse().is_none_or(|ai| a.mul(&ai) == Mat::identity(&f, n));
        let rank_ok = a.mul(&b).rank() <= a.rank().min(b.rank());
        let ker = a.kernel_basis();
        let ker_ok = ker.rows() + a.rank() == n && (ker.rows() == 0 || ker.mul(&a) == Mat::zeros(&f, ker.rows(), n));
        let ch = Poly::charpoly(&a);
        let ch_ok = ch.eval_mat(&a) == Mat::zeros(&f, n, n);
        ctx.record(
            format!("{n}x{n} over {}: inverse, rank, kernel, Cayley-Hamilton", f.name()),
            inverse_ok && rank_ok && ker_ok && ch_ok,
            vec![Witness::matrix("A", &a), Witness::value("rank", a.rank())],
        );
    }
    ctx.phase("groups");
    let mut fact = 1;
    for n in 1..=6 {
        fact *= n;
        let g = Group::symmetric(n)?;
        ctx.record(format!("|S{n}| = {fact}"), g.order() == fact, vec![Witness::value("order", g.order())]);
    }
    let g = Group::symmetric(5)?;
    for h in subgroup_pool(&g)? {
        let t = g.transversal(&h)?.len();
        let reps = g.double_cosets(&h, &h)?;
        let covered: usize = reps.iter().map(|x| Group::double_coset_size(&h, x, &h)).sum();
        ctx.record(
            format!("S5 cosets of {}: transversal size and double coset partition", h.name()),
            t * h.order() == g.order() && covered == g.order() && reps[0].is_identity(),
            vec![Witness::value("index", t), Witness::value("double cosets", reps.len())],
        );
    }
    Ok(())
}
