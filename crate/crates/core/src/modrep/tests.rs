use std::sync::Arc;

use crate::gflin::field_make;
use crate::symgrp::Group;

use super::*;

#[test]
fn natural_perm_hom_dims() {
    let f = field_make(3, 1).unwrap();
    let g = Group::symmetric(4).unwrap();
    let m = Module::natural_perm(&g, &f);
    let t = Module::trivial(&g, &f);
    assert_eq!(hom_space(&m, &m).unwrap().dim(), 2);
    assert_eq!(hom_space(&m, &t).unwrap().dim(), 1);
    assert_eq!(hom_space(&t, &m).unwrap().dim(), 1);
    let s = Module::sign(&g, &f);
    assert_eq!(hom_space(&s, &m).unwrap().dim(), 0);
    for phi in &hom_space(&m, &m).unwrap().basis {
        assert!(is_hom(&m, &m, phi));
    }
}

#[test]
fn regular_endomorphisms() {
    let f = field_make(2, 1).unwrap();
    let g = Group::symmetric(4).unwrap();
    let r = Module::regular(&g, &f);
    let h = hom_space(&r, &r).unwrap();
    assert_eq!(h.dim(), 24);
    let t = Module::trivial(&g, &f);
    assert_eq!(hom_space(&r, &t).unwrap().dim(), 1);
    assert_eq!(hom_space(&t, &r).unwrap().dim(), 1);
}

#[test]
fn induced_and_coset_agree() {
    let f = field_make(3, 1).unwrap();
    let g = Group::symmetric(3).unwrap();
    let c3 = Group::cyclic(3).unwrap();
    let c3: Arc<Group> = g.subgroup(c3.gens().to_vec(), "C3").unwrap();
    let ind = Module::trivial(&c3, &f).induce(&g).unwrap();
    let coset = Module::coset_module(&g, &c3, &f).unwrap();
    assert_eq!(ind.dim(), 2);
    assert_eq!(hom_space(&ind, &coset).unwrap().dim(), hom_space(&coset, &coset).unwrap().dim());
}

fn pim_dims(n: usize, p: u32) -> Vec<(usize, usize)> {
    let f = field_make(p, 1).unwrap();
    let g = Group::symmetric(n).unwrap();
    let data = pims(&g, &f).unwrap();
    let mut v: Vec<(usize, usize)> = data
        .pims
        .iter()
        .map(|x| (x.simple.dim(), x.projective.dim()))
        .collect();
    v.sort();
    v
}

#[test]
fn projective_covers_small_symmetric() {
    assert_eq!(pim_dims(3, 3), vec![(1, 3), (1, 3)]);
    assert_eq!(pim_dims(3, 2), vec![(1, 2), (2, 2)]);
    assert_eq!(pim_dims(4, 2), vec![(1, 8), (2, 8)]);
    assert_eq!(pim_dims(5, 5), vec![(1, 5), (1, 5), (3, 10), (3, 10), (5, 5), (5, 5)]);
}

#[test]
fn pim_tops_are_homs() {
    let f = field_make(2, 1).unwrap();
    let g = Group::symmetric(4).unwrap();
    let data = pims(&g, &f).unwrap();
    for pim in &data.pims {
        assert!(is_hom(&pim.projective, &pim.simple, &pim.top));
        let homs = hom_from_pim(pim, &Module::regular(&g, &f)).unwrap();
        assert_eq!(homs.len(), pim.projective.dim());
    }
}

fn sym(n: usize) -> Arc<Group> {
    Group::symmetric(n).unwrap()
}

#[test]
fn radical_of_regular_s2() {
    let f = field_make(2, 1).unwrap();
    let g = sym(2);
    let r = Module::regular(&g, &f);
    let rad = radical(&r).unwrap();
    assert_eq!(rad.rows(), 1);
    assert_eq!(rad.row(0), &[1, 1]);
    assert_eq!(socle(&r).unwrap().rows(), 1);
}

#[test]
fn heller_of_trivial_s3_is_hook() {
    let f = field_make(3, 1).unwrap();
    let g = sym(3);
    let t = Module::trivial(&g, &f);
    let om = heller(&t).unwrap();
    assert_eq!(om.dim(), 2);
    assert!(!is_irreducible(&om).unwrap());
    assert_eq!(decompose(&om).unwrap().pieces.len(), 1);
    let om2 = heller(&om).unwrap();
    assert_eq!(om2.dim(), 1);
    assert!(is_isomorphic(&om2, &Module::sign(&g, &f)).unwrap().is_yes());
    assert_eq!(period(&t, 10).unwrap(), Period::Found(4));
}

#[test]
fn period_trivial_s2() {
    let f = field_make(2, 1).unwrap();
    let t = Module::trivial(&sym(2), &f);
    assert_eq!(period(&t, 4).unwrap(), Period::Found(1));
}

#[test]
fn decompose_regular_s3_gf3() {
    let f = field_make(3, 1).unwrap();
    let g = sym(3);
    let d = decompose(&Module::regular(&g, &f)).unwrap();
    assert_eq!(d.total_dim(), 6);
    let mut shape: Vec<(usize, usize, bool)> = d
        .summands
        .iter()
        .map(|s| (s.module.dim(), s.multiplicity, s.projective))
        .collect();
    shape.sort();
    assert_eq!(shape, vec![(3, 1, true), (3, 1, true)]);
    assert_eq!(projective_free(&Module::regular(&g, &f)).unwrap().dim(), 0);
}

#[test]
fn decompose_regular_s2_gf3_semisimple() {
    let f = field_make(3, 1).unwrap();
    let g = sym(2);
    let d = decompose(&Module::regular(&g, &f)).unwrap();
    assert_eq!(d.summands.len(), 2);
    assert!(d.summands.iter().all(|s| s.module.dim() == 1 && s.projective));
}

#[test]
fn induced_from_c3_gf3() {
    let f = field_make(3, 1).unwrap();
    let g = sym(3);
    let c3 = g.sylow(3).unwrap();
    let ind = Module::trivial(&c3, &f).induce(&g).unwrap();
    let d = decompose(&ind).unwrap();
    assert_eq!(d.summands.len(), 2);
    let t = Module::trivial(&g, &f);
    let s = Module::sign(&g, &f);
    assert!(d.summands.iter().any(|x| is_isomorphic(&x.module, &t).unwrap().is_yes()));
    assert!(d.summands.iter().any(|x| is_isomorphic(&x.module, &s).unwrap().is_yes()));
}

#[test]
fn iso_witness_and_dual() {
    let f = field_make(3, 1).unwrap();
    let g = sym(3);
    let r = Module::regular(&g, &f);
    match is_isomorphic(&r, &r.dual().dual()).unwrap() {
        Iso::Yes(w) => assert!(is_hom(&r, &r.dual().dual(), &w) && w.is_invertible()),
        other => panic!("{other:?}"),
    }
    let sign = Module::sign(&sym(2), &f);
    assert!(is_isomorphic(&Module::trivial(&sym(2), &f), &sign).unwrap().is_no());
    // regular and its dual are isomorphic (group algebras are symmetric)
    assert!(is_isomorphic(&r, &r.dual()).unwrap().is_yes());
}

#[test]
fn projective_cover_and_coheller() {
    let f = field_make(2, 1).unwrap();
    let g = sym(4);
    let t = Module::trivial(&g, &f);
    let (p, pi) = projective_cover(&t).unwrap();
    assert_eq!(p.dim(), 8);
    assert!(is_hom(&p, &t, &pi));
    let back = coheller(&heller(&t).unwrap()).unwrap();
    assert!(is_isomorphic(&back, &t).unwrap().is_yes());
    assert!(is_projective(&p).unwrap());
    assert!(!is_projective(&t).unwrap());
}

#[test]
fn period_trivial_s5_gf5() {
    let f = field_make(5, 1).unwrap();
    let t = Module::trivial(&sym(5), &f);
    assert_eq!(period(&t, 10).unwrap(), Period::Found(8));
}

#[test]
fn higman_and_vertices_s3() {
    let f = field_make(3, 1).unwrap();
    let g = sym(3);
    let one = g.subgroup(Vec::new(), "1").unwrap();
    let syl = g.sylow(3).unwrap();
    let t = Module::trivial(&g, &f);
    assert!(!rel_projective(&t, &one).unwrap());
    assert!(rel_projective(&t, &syl).unwrap());
    assert!(rel_projective(&Module::regular(&g, &f), &one).unwrap());
    assert_eq!(vertex(&t).unwrap().order(), 3);
    let om = heller(&t).unwrap();
    let v = vertex(&om).unwrap();
    assert_eq!(v.order(), 3);
    let (src, w) = source(&om, &v).unwrap();
    assert_eq!(src.dim(), 2);
    assert!(w.trace.is_invertible());
}

#[test]
fn frobenius_reciprocity() {
    let f = field_make(2, 1).unwrap();
    let g = sym(4);
    let h = g.subgroup(vec![crate::symgrp::Perm::parse("(1 2 3)", 4).unwrap()], "C3").unwrap();
    let n = Module::trivial(&h, &f);
    let m = Module::natural_perm(&g, &f);
    let ind = n.induce(&g).unwrap();
    assert_eq!(
        hom_space(&ind, &m).unwrap().dim(),
        hom_space(&n, &m.restrict(&h).unwrap()).unwrap().dim()
    );
}
