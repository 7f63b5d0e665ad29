//! The mathematical checks.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gflin::field::mult_order_mod;
use crate::gflin::FieldCtx;
use crate::liecore::{
    dual_hook_specht, hook_specht, induced_sk_sp, induced_sp_sk, lambda_module, lie_klyachko_over,
    lie_module, symmetrize,
};
use crate::modrep::{
    decompose, heller, period_certified, projective_free, source, vertex, Module, Period,
};
use crate::symgrp::spec::{cyclic_diag, sk_times_sp, sp_times_sk};
use crate::symgrp::{CosetKind, DoubleCosetData, Group, Perm};

use super::context::Ctx;
use super::report::{Verdict, Witness};

/// `2p − 2` for odd `p`, `1` for `p = 2`.
fn expected_period(p: usize) -> usize {
    if p == 2 {
        1
    } else {
        2 * p - 2
    }
}

fn trivial(n: usize, f: &Arc<FieldCtx>) -> Result<Module> {
    Ok(Module::trivial(&Group::symmetric(n)?, f).with_label("F"))
}

/// `C_p = ⟨(1 2 ⋯ p)⟩ ≤ S_p`.
fn cyclic_in_symmetric(p: usize) -> Result<(Arc<Group>, Arc<Group>)> {
    let sp = Group::symmetric(p)?;
    let pts: Vec<usize> = (1..=p).collect();
    let cp = sp.subgroup(vec![Perm::cycle(p, &pts)?], format!("C{p}"))?;
    Ok((sp, cp))
}

/// `Ω^i(F)` of the trivial `F S_p`-module as the hook Specht module or its dual:
/// `S^{(p−i,1^i)}` for `i ≤ p−1`, `S_{(i−p+2,1^{2p−2−i})}` for `p−1 ≤ i ≤ 2p−2`.
fn trivial_translate_model(p: usize, i: usize, f: &Arc<FieldCtx>) -> Result<Module> {
    if i < p {
        hook_specht(p, i, f)
    } else {
        dual_hook_specht(p, 2 * p - 2 - i, f)
    }
}

/// `Ω^0(M), Ω^1(M), …, Ω^n(M)` starting from the projective-free part.
fn translates(m: &Module, n: usize, name: &str) -> Result<Vec<Module>> {
    let mut out = vec![projective_free(m)?.with_label(format!("Ω^0({name})"))];
    for i in 1..=n {
        let next = heller(&out[i - 1])?.with_label(format!("Ω^{i}({name})"));
        out.push(next);
    }
    Ok(out)
}

fn record_period(ctx: &mut Ctx, name: &str, m: &Module, expected: usize) -> Result<()> {
    let (per, w) = period_certified(m, expected + 2)?;
    let mut wit = vec![Witness::module(name, m), Witness::value("period", format!("{per:?}"))];
    if let Some(w) = &w {
        wit.push(Witness::matrix(format!("Ω^n({name}) -> Ω^0({name})"), w));
    }
    ctx.record(format!("period of {name} is {expected}"), per == Period::Found(expected), wit);
    Ok(())
}

pub fn trivial_omega_table(ctx: &mut Ctx) -> Result<()> {
    let p = ctx.p();
    let f = ctx.field()?;
    ctx.note_field(&f);
    let top = 2 * p - 2;
    ctx.phase("heller translates");
    let triv = trivial(p, &f)?;
    let omegas = translates(&triv, top, "F")?;
    ctx.phase("hook table");
    for (i, om) in omegas.iter().enumerate() {
        let model = trivial_translate_model(p, i, &f)?;
        ctx.assert_iso(format!("Ω^{i}(F) ≅ {}", model.label()), om, &model)?;
    }
    for (i, om) in omegas.iter().enumerate().take(expected_period(p)).skip(1) {
        ctx.assert_not_iso(format!("Ω^{i}(F) ≇ F"), om, &triv)?;
    }
    ctx.phase("period");
    record_period(ctx, "F", &triv, expected_period(p))
}

pub fn induced_cyclic_decomposition(ctx: &mut Ctx) -> Result<()> {
    let p = ctx.p();
    if p == 2 {
        return Err(Error::BadParams("the decomposition of Ind_{C_p}^{S_p} F needs p odd".into()));
    }
    let f = ctx.field()?;
    ctx.note_field(&f);
    ctx.phase("induce and decompose");
    let (sp, cp) = cyclic_in_symmetric(p)?;
    let ind = Module::trivial(&cp, &f)
        .induce(&sp)?
        .with_label(format!("Ind_C{p}^S{p}(F)"));
    let dec = decompose(&ind)?;
    ctx.phase("match translates");
    let omegas = translates(&trivial(p, &f)?, 2 * p - 4, "F")?;
    let nonproj: Vec<usize> = (0..dec.summands.len()).filter(|&c| !dec.summands[c].projective).collect();
    let mut used = vec![false; dec.summands.len()];
    for i in (0..=2 * p - 4).step_by(2) {
        let om = &omegas[i];
        let mut found = false;
        for &c in &nonproj {
            let s = &dec.summands[c];
            let w = vec![Witness::module(om.label(), om), Witness::module(format!("summand {c}"), &s.module)];
            if s.module.dim() != om.dim() || used[c] {
                continue;
            }
            if let crate::modrep::Iso::Yes(m) = crate::modrep::is_isomorphic(&s.module, om)? {
                used[c] = true;
                found = true;
                let mut w = w;
                w.push(Witness::matrix("isomorphism", &m));
                w.push(Witness::value("multiplicity", s.multiplicity));
                ctx.record(format!("Ω^{i}(F) is a summand of multiplicity 1"), s.multiplicity == 1, w);
                break;
            }
        }
        if !found {
            ctx.record(format!("Ω^{i}(F) is a summand of multiplicity 1"), false, vec![Witness::module(om.label(), om)]);
        }
    }
    let extra: Vec<usize> = nonproj.iter().copied().filter(|&c| !used[c]).collect();
    let proj_dim: usize = dec
        .summands
        .iter()
        .filter(|s| s.projective)
        .map(|s| s.multiplicity * s.module.dim())
        .sum();
    ctx.record(
        "no other non-projective summands",
        extra.is_empty(),
        vec![
            Witness::module(ind.label(), &ind),
            Witness::value("non-projective classes", nonproj.len()),
            Witness::value("projective part dimension", proj_dim),
        ],
    );
    Ok(())
}

pub fn lie_klyachko_model(ctx: &mut Ctx) -> Result<()> {
    let (p, k) = (ctx.p(), ctx.k());
    if k % p == 0 {
        return Err(Error::BadParams(format!("need p ∤ k, got p = {p}, k = {k}")));
    }
    let base = ctx.field()?;
    let ext = ctx.field_containing(mult_order_mod(p as u32, k as u32))?;
    ctx.note_field(&ext);
    ctx.phase("build");
    let lie = lie_module(k, &base)?;
    let model = lie_klyachko_over(k, &ext)?;
    let zeta = ext.root_of_unity(k as u64).unwrap_or(1);
    ctx.record(
        format!("the character of C{k} is faithful"),
        ext.order(zeta) == k as u64,
        vec![Witness::value("root of unity", zeta), Witness::value("order", ext.order(zeta))],
    );
    ctx.phase("isomorphism");
    let lifted = lie.scalar_extend(&ext)?.with_label(format!("Lie({k}) over {}", ext.name()));
    ctx.assert_iso(format!("Lie({k}) ≅ {}", model.label()), &lifted, &model)?;
    Ok(())
}

/// Lie(k), Lie(pk) over the check's field.
fn lie_pair(ctx: &mut Ctx) -> Result<(Arc<FieldCtx>, Module, Module)> {
    let (p, k) = (ctx.p(), ctx.k());
    if k % p == 0 {
        return Err(Error::BadParams(format!("need p ∤ k, got p = {p}, k = {k}")));
    }
    let f = ctx.field()?;
    ctx.note_field(&f);
    let lie_k = lie_module(k, &f)?.with_label(format!("Lie({k})"));
    let lie_pk = lie_module(p * k, &f)?.with_label(format!("Lie({})", p * k));
    ctx.guard(&lie_pk)?;
    Ok((f, lie_k, lie_pk))
}

pub fn lie_heller_shift(ctx: &mut Ctx) -> Result<()> {
    let (p, k) = (ctx.p(), ctx.k());
    ctx.phase("build");
    let (f, lie_k, lie_pk) = lie_pair(ctx)?;
    let ind = induced_sp_sk(&trivial(p, &f)?, &lie_k)?;
    ctx.guard(&ind)?;
    ctx.phase("projective-free part");
    let lhs = projective_free(&lie_pk)?.with_label(format!("Ω^0(Lie({}))", p * k));
    ctx.record(
        format!("Lie({}) is not projective", p * k),
        lhs.dim() > 0,
        vec![Witness::module(lhs.label(), &lhs)],
    );
    ctx.phase("heller");
    let rhs = heller(&ind)?.with_label(format!("Ω^1({})", ind.label()));
    ctx.phase("isomorphism");
    ctx.assert_iso(format!("{} ≅ {}", lhs.label(), rhs.label()), &lhs, &rhs)?;
    Ok(())
}

pub fn symmetrization_stable(ctx: &mut Ctx) -> Result<()> {
    let (p, k) = (ctx.p(), ctx.k());
    ctx.phase("build");
    let (f, lie_k, lie_pk) = lie_pair(ctx)?;
    let sym = symmetrize(&lie_k, p)?;
    ctx.guard(&sym)?;
    let ind = induced_sk_sp(&lie_k, &trivial(p, &f)?)?;
    ctx.guard(&ind)?;
    let g = Group::symmetric(p * k)?;
    let a = sp_times_sk(p, k)?;
    let b = sk_times_sp(k, p)?;
    let z = g.conjugator(&a, &b);
    ctx.record(
        format!("{} and {} are conjugate in S{}", a.name(), b.name(), p * k),
        z.is_some(),
        z.iter().map(|z| Witness::value("conjugator z", z)).collect(),
    );
    ctx.phase("heller of the symmetrization");
    let lhs = projective_free(&lie_pk)?.with_label(format!("Ω^0(Lie({}))", p * k));
    let om = heller(&sym)?.with_label(format!("Ω({})", sym.label()));
    ctx.assert_iso(format!("{} ≅ {}", lhs.label(), om.label()), &lhs, &om)?;
    ctx.phase("projective-free parts");
    let s0 = projective_free(&sym)?.with_label(format!("Ω^0({})", sym.label()));
    let i0 = projective_free(&ind)?.with_label(format!("Ω^0({})", ind.label()));
    ctx.assert_iso(format!("{} ≅ {}", s0.label(), i0.label()), &s0, &i0)?;
    Ok(())
}

pub fn lie_period(ctx: &mut Ctx) -> Result<()> {
    let p = ctx.p();
    ctx.phase("build");
    let (_, _, lie_pk) = lie_pair(ctx)?;
    ctx.phase("period");
    let name = lie_pk.label().to_string();
    record_period(ctx, &name, &lie_pk, expected_period(p))
}

/// Summand `P_s` of `Lie(k)`.
fn lie_pieces(lie_k: &Module) -> Result<Vec<Module>> {
    Ok(decompose(lie_k)?
        .pieces
        .into_iter()
        .enumerate()
        .map(|(s, piece)| piece.module.with_label(format!("P{}", s + 1)))
        .collect())
}

fn record_indecomposable(ctx: &mut Ctx, m: &Module) -> Result<()> {
    let dec = decompose(m)?;
    ctx.record(
        format!("{} is indecomposable and non-zero", m.label()),
        m.dim() > 0 && dec.pieces.len() == 1,
        vec![
            Witness::module(m.label(), m),
            Witness::value("indecomposable summands", dec.pieces.len()),
        ],
    );
    Ok(())
}

pub fn hook_induced_indecomposable(ctx: &mut Ctx) -> Result<()> {
    let (p, k) = (ctx.p(), ctx.k());
    ctx.phase("build");
    let (f, lie_k, lie_pk) = lie_pair(ctx)?;
    let pieces = lie_pieces(&lie_k)?;
    let g = Group::symmetric(p * k)?;
    ctx.phase("hook-induced modules");
    // blocks[j] = ⊕_s Ω^0(Ind(X_j ⊠ P_s)) modelling Ω^j(Lie(pk))
    let mut blocks = Vec::new();
    let shifts = expected_period(p);
    for j in 0..shifts {
        let x = if p == 2 {
            trivial(p, &f)?
        } else if j + 1 < p {
            hook_specht(p, j + 1, &f)?
        } else {
            dual_hook_specht(p, 2 * p - j - 3, &f)?
        };
        let mut parts = Vec::new();
        for ps in &pieces {
            let ind = induced_sp_sk(&x, ps)?;
            ctx.guard(&ind)?;
            let m = projective_free(&ind)?.with_label(format!("Ω^0(Ind({} [x] {}))", x.label(), ps.label()));
            record_indecomposable(ctx, &m)?;
            parts.push(m);
        }
        blocks.push(Module::direct_sum_all(&parts, &g, &f)?.with_label(format!("model of Ω^{j}(Lie({}))", p * k)));
    }
    ctx.phase("Heller translates of Lie(pk)");
    let name = format!("Lie({})", p * k);
    let omegas = translates(&lie_pk, shifts.max(2) - 1, &name)?;
    for (i, om) in omegas.iter().enumerate() {
        let model = &blocks[i % shifts];
        ctx.assert_iso(format!("{} ≅ {}", om.label(), model.label()), om, model)?;
    }
    Ok(())
}

pub fn lambda_restriction(ctx: &mut Ctx) -> Result<()> {
    let (p, k) = (ctx.p(), ctx.k());
    if k % p == 0 {
        return Err(Error::BadParams(format!("need p ∤ k, got p = {p}, k = {k}")));
    }
    let f = ctx.field_containing(mult_order_mod(p as u32, k as u32))?;
    ctx.note_field(&f);
    ctx.phase("double cosets");
    let data = DoubleCosetData::new(p, k)?;
    let (g1, g2) = (data.count(CosetKind::Full), data.count(CosetKind::Cyclic));
    if p == 2 {
        ctx.note("for p = 2, Δ_k(C_p) = Δ, so every coset with even intersection order is counted in Γ1");
    }
    let identity_first = data.classes.first().is_some_and(|c| c.rep.is_identity() && c.kind == CosetKind::Full);
    ctx.record(
        "|Γ1| ≥ 1 with the identity coset in Γ1",
        g1 >= 1 && identity_first,
        vec![
            Witness::value("|Γ1|", g1),
            Witness::value("|Γ2|", g2),
            Witness::value("coprime cosets", data.count(CosetKind::Coprime)),
            Witness::value("other cosets", data.count(CosetKind::Other)),
        ],
    );
    ctx.phase("restrict");
    let lambda = lambda_module(p, k, &f)?;
    ctx.guard(&lambda)?;
    let res = lambda.restrict(&data.delta)?;
    let mackey: usize = data.classes.iter().map(|c| data.delta.order() / c.intersection.order()).sum();
    ctx.record(
        "dim Res Λ_k = Σ_x [Δ : xDx⁻¹ ∩ Δ]",
        res.dim() == mackey,
        vec![Witness::value("dim", res.dim()), Witness::value("Mackey sum", mackey)],
    );
    // Δ_k(S_p) has the diagonal images of the Coxeter generators of S_p, in order
    let (sp, cp) = cyclic_in_symmetric(p)?;
    let res = Module::from_parts(&sp, &f, res.action().to_vec(), format!("Res_Δ({})", lambda.label()))?;
    ctx.phase("decompose");
    let dec = decompose(&res)?;
    let classes: Vec<String> = dec
        .summands
        .iter()
        .map(|s| format!("{}x{}{}", s.multiplicity, s.module.dim(), if s.projective { "p" } else { "" }))
        .collect();
    ctx.record(
        "restriction decomposes",
        dec.total_dim() == res.dim(),
        vec![Witness::module(res.label(), &res), Witness::value("summands", classes.join(" "))],
    );
    ctx.phase("compare");
    let triv = Module::trivial(&sp, &f);
    let ind = Module::trivial(&cp, &f).induce(&sp)?;
    let mut parts = vec![triv; g1];
    parts.extend(std::iter::repeat_n(ind, g2));
    let expected = Module::direct_sum_all(&parts, &sp, &f)?.with_label(format!("F^{g1} + Ind_C{p}(F)^{g2}"));
    let lhs = projective_free(&res)?.with_label(format!("Ω^0({})", res.label()));
    let rhs = projective_free(&expected)?.with_label(format!("Ω^0({})", expected.label()));
    ctx.assert_iso(
        format!("{} ≅ {} up to projective summands", res.label(), expected.label()),
        &lhs,
        &rhs,
    )?;
    Ok(())
}

pub fn double_coset_choice(ctx: &mut Ctx) -> Result<()> {
    let (p, k) = (ctx.p(), ctx.k());
    ctx.phase("enumerate");
    let data = DoubleCosetData::new(p, k)?;
    ctx.record(
        format!("double cosets cover S{}", p * k),
        data.covered() == data.g.order(),
        vec![
            Witness::value("representatives", data.classes.len()),
            Witness::value("Σ |ΔxD|", data.covered()),
        ],
    );
    ctx.record(
        "centralizer of Δ_k(C_p) is (∏ C_p[r])·S_k^[p]",
        {
            let c = data.g.centralizer(&data.delta_cyclic)?;
            c.order() == data.centralizer_product.order()
                && c.elements().iter().all(|x| data.centralizer_product.contains(x))
        },
        vec![Witness::value("order", data.centralizer_product.order())],
    );
    ctx.phase("classify");
    for class in &data.classes {
        if class.intersection.order() % p != 0 {
            continue;
        }
        let claim = format!("coset of {}: representative in the centralizer product", class.rep);
        match data.centralizing_rep(&class.rep) {
            None => {
                ctx.record(claim, false, vec![Witness::value("x", &class.rep)]);
            }
            Some(w) => {
                let ok = data.check_choice(&w)?;
                let kind = if data.delta_cyclic.contains(&w.y) { "Δ" } else { "Δ_k(C_p)" };
                ctx.record(
                    claim,
                    ok,
                    vec![
                        Witness::value("x", &class.rep),
                        Witness::value("x0", &w.x0),
                        Witness::value("y", &w.y),
                        Witness::value("z", &w.z),
                        Witness::value("x0 D x0⁻¹ ∩ Δ", kind),
                    ],
                );
            }
        }
    }
    Ok(())
}

pub fn lie_vertex_source(ctx: &mut Ctx) -> Result<()> {
    let (p, k) = (ctx.p(), ctx.k());
    ctx.phase("build");
    let (f, _, lie_pk) = lie_pair(ctx)?;
    let g = Group::symmetric(p * k)?;
    let q = cyclic_diag(p, k)?;
    let fq = Module::trivial(&q, &f).with_label("F");
    let omega_fq = heller(&fq)?.with_label("Ω(F)");
    let name = format!("Lie({})", p * k);
    let omegas = translates(&lie_pk, 1, &name)?;
    for (i, om) in omegas.iter().enumerate() {
        ctx.phase(&format!("summands of Ω^{i}"));
        let dec = decompose(om)?;
        for (c, s) in dec.summands.iter().enumerate() {
            if s.projective {
                continue;
            }
            let m = s.module.clone().with_label(format!("summand {c} of {}", om.label()));
            ctx.phase(&format!("vertex of Ω^{i} summand {c}"));
            let v = vertex(&m)?;
            let conj = g.conjugator(&v, &q);
            ctx.record(
                format!("{} has vertex conjugate to {}", m.label(), q.name()),
                conj.is_some(),
                vec![
                    Witness::module(m.label(), &m),
                    Witness::value("vertex", v.descriptor()),
                    Witness::value("conjugator", conj.map(|c| c.to_string()).unwrap_or_default()),
                ],
            );
            ctx.phase(&format!("source of Ω^{i} summand {c}"));
            let (src, wit) = source(&m, &q)?;
            let expected = if i % 2 == 1 { &fq } else { &omega_fq };
            let mut w = vec![Witness::matrix("Tr(ab)", &wit.trace)];
            w.push(Witness::module("source", &src));
            let iso = crate::modrep::is_isomorphic(&src, expected)?;
            let claim = format!("source of {} over {} is {}", m.label(), q.name(), expected.label());
            if !ctx.record_iso(claim, iso, w) {
                ctx.note(format!("source found has dimension {}", src.dim()));
            }
        }
    }
    if ctx_has_no_summands(&omegas) {
        ctx.push(
            format!("Lie({}) has non-projective summands", p * k),
            Verdict::Fail,
            vec![Witness::module(&name, &lie_pk)],
            None,
        );
    }
    Ok(())
}

fn ctx_has_no_summands(omegas: &[Module]) -> bool {
    omegas.iter().all(|m| m.dim() == 0)
}
