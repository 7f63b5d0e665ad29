use std::collections::HashMap;
use std::sync::Arc;

use super::*;
use crate::gflin::{field_make, Elem, FieldCtx, Mat};
use crate::modrep::{heller, is_isomorphic, Module};
use crate::symgrp::perm::descending_cycle;
use crate::symgrp::{Group, Perm};

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    // (a ∘ b)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

/// `w_n` over the integers, as a map from permutation images to coefficients.
fn dsw_integral(n: usize) -> HashMap<Vec<u8>, i64> {
    let id: Vec<u8> = (0..n as u8).collect();
    let mut w = HashMap::from([(id.clone(), 1i64)]);
    for i in 2..=n {
        // d_i = (i, i-1, ..., 1): j ↦ j-1 for 2 ≤ j ≤ i, 1 ↦ i
        let mut d = id.clone();
        for j in 1..i {
            d[j] = (j - 1) as u8;
        }
        d[0] = (i - 1) as u8;
        let mut next = HashMap::new();
        for (g, c) in &w {
            *next.entry(g.clone()).or_insert(0) += c;
            *next.entry(compose(g, &d)).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        w = next;
    }
    w
}

fn reduce(c: i64, p: u32) -> Elem {
    c.rem_euclid(p as i64) as Elem
}

#[test]
fn dsw_matches_integral_oracle() {
    for (n, p) in [(3, 2), (3, 3), (4, 3), (4, 5)] {
        let g = Group::symmetric(n).unwrap();
        let f = field_make(p, 1).unwrap();
        let w = dsw(&g, &f).unwrap();
        let oracle = dsw_integral(n);
        for x in g.elements() {
            let want = oracle.get(x.images0()).copied().unwrap_or(0);
            assert_eq!(w.coeff(x), reduce(want, p), "n = {n}, p = {p}, g = {x}");
        }
    }
}

#[test]
fn dsw_is_quasi_idempotent() {
    // w_n² = n w_n
    for n in 2..=4 {
        let g = Group::symmetric(n).unwrap();
        let f = field_make(7, 1).unwrap();
        let w = dsw(&g, &f).unwrap();
        assert_eq!(w.mul(&w).coeffs(), w.scale(n as Elem).coeffs());
    }
    let oracle = dsw_integral(3);
    // w_3 = 1 − d_2 − d_3 + d_2 d_3 has four distinct terms
    assert_eq!(oracle.len(), 4);
    assert_eq!(descending_cycle(3, 3).unwrap(), Perm::parse("(1 3 2)", 3).unwrap());
}

#[test]
fn lie_dimensions() {
    for p in [2, 3] {
        let f = field_make(p, 1).unwrap();
        let mut fact = 1;
        for n in 1..=5 {
            if n > 1 {
                fact *= n - 1;
            }
            assert_eq!(lie_module(n, &f).unwrap().dim(), fact, "Lie({n}) over GF({p})");
        }
    }
    let f = field_make(3, 1).unwrap();
    assert!(lie_module(LIE_MAX_DEGREE + 1, &f).unwrap_err().is_budget());
}

#[test]
fn lie_two_is_sign() {
    let f3 = field_make(3, 1).unwrap();
    let s2 = Group::symmetric(2).unwrap();
    let lie = lie_module(2, &f3).unwrap();
    assert!(is_isomorphic(&lie, &Module::sign(&s2, &f3)).unwrap().is_yes());
    assert!(is_isomorphic(&lie, &Module::trivial(&s2, &f3)).unwrap().is_no());
    let f2 = field_make(2, 1).unwrap();
    let lie = lie_module(2, &f2).unwrap();
    assert!(is_isomorphic(&lie, &Module::trivial(&s2, &f2)).unwrap().is_yes());
}

#[test]
fn klyachko_model_small() {
    let m = lie_klyachko(3, 2).unwrap();
    assert_eq!(m.field().q(), 4);
    let lie = lie_module(3, &field_make(2, 1).unwrap())
        .unwrap()
        .scalar_extend(m.field())
        .unwrap();
    assert!(is_isomorphic(&lie, &m).unwrap().is_yes());
    assert_eq!(lie_klyachko(2, 3).unwrap().field().q(), 3);
    assert!(lie_klyachko(3, 3).is_err());
}

fn tuples(n: usize, j: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..j {
        out = out
            .into_iter()
            .flat_map(|t: Vec<u8>| {
                (0..n as u8)
                    .filter(|x| !t.contains(x))
                    .map(|x| {
                        let mut u = t.clone();
                        u.push(x);
                        u
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn permutations(items: &[u8]) -> Vec<(Vec<u8>, bool)> {
    if items.is_empty() {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for (mut tail, even) in permutations(&rest) {
            tail.insert(0, x);
            out.push((tail, even == (i % 2 == 0)));
        }
    }
    out
}

/// `S^{(n−j,1^j)}` spanned by polytabloids inside the permutation module on tabloids.
fn polytabloid_specht(n: usize, j: usize, f: &Arc<FieldCtx>) -> Module {
    let g = Group::symmetric(n).unwrap();
    // a tabloid of shape (n−j,1^j) is the ordered tuple of its singleton rows
    let tabs = tuples(n, j);
    let index: HashMap<Vec<u8>, usize> = tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let action: Vec<Mat> = g
        .gens()
        .iter()
        .map(|s| {
            let inv = s.inverse();
            let img: Vec<usize> = tabs
                .iter()
                .map(|t| index[&t.iter().map(|&x| inv.images0()[x as usize]).collect::<Vec<u8>>()])
                .collect();
            Mat::permutation(f, &img)
        })
        .collect();
    let m = Module::new(&g, f, action, "M").unwrap();
    let mut rows = Vec::new();
    for col in tuples(n, j + 1) {
        let mut v = vec![0 as Elem; tabs.len()];
        for (sigma, even) in permutations(&col) {
            let c = if even { 1 } else { f.neg(1) };
            let t = index[&sigma[1..].to_vec()];
            v[t] = f.add(v[t], c);
        }
        rows.extend(v);
    }
    let span = Mat::from_vec(f, tuples(n, j + 1).len(), tabs.len(), rows)
        .unwrap()
        .row_space();
    m.submodule(&span)
}

#[test]
fn hook_spechts_match_polytabloids() {
    for p in [3, 5] {
        let f = field_make(p, 1).unwrap();
        for j in 0..p as usize {
            let hook = hook_specht(p as usize, j, &f).unwrap();
            let poly = polytabloid_specht(p as usize, j, &f);
            assert_eq!(hook.dim(), poly.dim());
            assert!(is_isomorphic(&hook, &poly).unwrap().is_yes(), "p = {p}, j = {j}");
        }
    }
}

#[test]
fn heller_walks_down_the_hooks() {
    for p in [3usize, 5] {
        let f = field_make(p as u32, 1).unwrap();
        for j in 0..p - 1 {
            let h = heller(&hook_specht(p, j, &f).unwrap()).unwrap();
            let next = hook_specht(p, j + 1, &f).unwrap();
            assert!(is_isomorphic(&h, &next).unwrap().is_yes(), "p = {p}, j = {j}");
        }
    }
}

#[test]
fn heller_walks_up_the_dual_hooks() {
    for p in [3usize, 5] {
        let f = field_make(p as u32, 1).unwrap();
        let sign = hook_specht(p, p - 1, &f).unwrap();
        let h = heller(&sign).unwrap();
        assert!(is_isomorphic(&h, &dual_hook_specht(p, p - 2, &f).unwrap()).unwrap().is_yes());
        for j in (1..p - 1).rev() {
            let h = heller(&dual_hook_specht(p, j, &f).unwrap()).unwrap();
            let next = dual_hook_specht(p, j - 1, &f).unwrap();
            assert!(is_isomorphic(&h, &next).unwrap().is_yes(), "p = {p}, j = {j}");
        }
    }
}

#[test]
fn extreme_hooks_are_trivial_or_sign() {
    for p in [2usize, 3, 5] {
        let f = field_make(p as u32, 1).unwrap();
        let g = Group::symmetric(p).unwrap();
        let triv = Module::trivial(&g, &f);
        assert!(is_isomorphic(&hook_specht(p, 0, &f).unwrap(), &triv).unwrap().is_yes());
        assert!(is_isomorphic(&dual_hook_specht(p, 0, &f).unwrap(), &triv).unwrap().is_yes());
        let sign = hook_specht(p, p - 1, &f).unwrap();
        assert!(is_isomorphic(&sign, &dual_hook_specht(p, p - 1, &f).unwrap()).unwrap().is_yes());
    }
}

#[test]
fn lie_is_projective_in_coprime_degree() {
    for (n, p) in [(2u32, 3u32), (3, 2), (4, 3), (5, 2), (5, 3)] {
        let f = field_make(p, 1).unwrap();
        let lie = lie_module(n as usize, &f).unwrap();
        assert!(crate::modrep::is_projective(&lie).unwrap(), "n = {n}, p = {p}");
    }
    let f = field_make(3, 1).unwrap();
    assert!(!crate::modrep::is_projective(&lie_module(3, &f).unwrap()).unwrap());
}

#[test]
fn symmetrized_and_lambda_dimensions() {
    let f3 = field_make(3, 1).unwrap();
    assert_eq!(symmetrize(&lie_module(2, &f3).unwrap(), 3).unwrap().dim(), 15);
    let f2 = field_make(2, 1).unwrap();
    assert_eq!(symmetrize(&lie_module(3, &f2).unwrap(), 2).unwrap().dim(), 40);
    assert_eq!(lambda_module(3, 2, &f3).unwrap().dim(), 60);
    let f4 = field_make(2, 2).unwrap();
    assert_eq!(lambda_module(2, 3, &f4).unwrap().dim(), 120);
    assert!(lambda_module(2, 3, &f2).is_err());
}

#[test]
fn outer_tensor_is_a_module() {
    let f = field_make(3, 1).unwrap();
    let x = hook_specht(3, 1, &f).unwrap();
    let y = lie_module(2, &f).unwrap();
    let m = outer_sp_sk(&x, &y).unwrap();
    assert_eq!(m.dim(), 2);
    assert!(Module::new(m.group(), m.field(), m.action().to_vec(), "check").is_ok());
    let ind = induced_sp_sk(&x, &y).unwrap();
    assert_eq!(ind.dim(), 2 * 720 / 12);
}

#[test]
fn small_family_and_manifest() {
    let fam = LieFamily::build(3, 1).unwrap();
    assert_eq!(fam.m_k(), 1);
    assert_eq!(fam.lie_pk.dim(), 2);
    assert_eq!(fam.hooks.len(), 3);
    let man = fam.manifest(|m| format!("{}", m.dim()));
    let back = Manifest::from_toml(&man.to_toml().unwrap()).unwrap();
    assert_eq!(man, back);
    assert!(check_pair(3, 3).is_err());
    assert!(check_pair(4, 1).is_err());
    assert!(check_pair(7, 1).unwrap_err().is_budget());
}

#[test]
fn coheller_of_lie_has_trivial_sources() {
    use crate::modrep::{coheller, decompose, source, vertex};
    for (p, k) in [(3usize, 2usize), (2, 3)] {
        let f = field_make(p as u32, 1).unwrap();
        let m = coheller(&lie_module(p * k, &f).unwrap()).unwrap();
        let dec = decompose(&m).unwrap();
        let mut seen = 0;
        for s in dec.summands.iter().filter(|s| !s.projective) {
            let q = vertex(&s.module).unwrap();
            let (src, _) = source(&s.module, &q).unwrap();
            let triv = Module::trivial(&q, &f);
            assert!(is_isomorphic(&src, &triv).unwrap().is_yes(), "p = {p}, k = {k}, vertex {}", q.descriptor());
            seen += 1;
        }
        assert!(seen > 0, "p = {p}, k = {k}");
    }
}

#[test]
fn family_at_two_three() {
    let fam = LieFamily::build(2, 3).unwrap();
    assert_eq!(fam.m_k(), 1);
    assert_eq!(fam.pieces[0].dim(), 2);
    assert_eq!(fam.lambda.dim(), 120);
    assert_eq!(fam.lie_pk.dim(), 120);
}
