use std::collections::HashSet;

use proptest::prelude::*;

use super::spec::*;
use super::*;

fn p(s: &str, n: usize) -> Perm {
    Perm::parse(s, n).unwrap()
}

fn random_perm(n: usize, seed: u64) -> Perm {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<u8> = (0..n as u8).collect();
    v.shuffle(&mut rng);
    Perm::from_zero_based(v)
}

#[test]
fn coxeter_relations_and_words() {
    for n in 2..=6 {
        let g = Group::symmetric(n).unwrap();
        let s = g.gens();
        for i in 0..s.len() {
            assert!(s[i].then_after(&s[i]).is_identity());
            if i + 1 < s.len() {
                let a = s[i].then_after(&s[i + 1]);
                assert!(a.then_after(&a).then_after(&a).is_identity());
            }
            for j in i + 2..s.len() {
                assert_eq!(s[i].then_after(&s[j]), s[j].then_after(&s[i]));
            }
        }
        for e in g.elements() {
            let w = e.coxeter_word();
            assert_eq!(&g.eval_word(&w), e);
            assert_eq!(&g.eval_word(&g.word(e).unwrap()), e);
        }
    }
}

#[test]
fn group_orders() {
    assert_eq!(Group::symmetric(1).unwrap().order(), 1);
    assert_eq!(Group::symmetric(6).unwrap().order(), 720);
    assert!(Group::symmetric(6).unwrap().element(0).is_identity());
    assert_eq!(sp_times_sk(3, 2).unwrap().order(), 12);
    assert_eq!(sk_times_sp(2, 3).unwrap().order(), 12);
    assert_eq!(wreath(2, 3).unwrap().order(), 48);
    assert_eq!(wreath(3, 2).unwrap().order(), 72);
    assert_eq!(lambda_subgroup(3, 2).unwrap().order(), 12);
    assert_eq!(cyclic_diag(3, 2).unwrap().order(), 3);
}

#[test]
fn transversal_examples() {
    let s3 = Group::symmetric(3).unwrap();
    assert_eq!(s3.transversal(&s3).unwrap(), vec![Perm::identity(3)]);
    let c3 = s3.subgroup(vec![p("(1 2 3)", 3)], "C3").unwrap();
    assert_eq!(c3.order(), 3);
    let t = s3.transversal(&c3).unwrap();
    assert_eq!(t.len(), 2);
    assert!(t[0].is_identity());
    let s6 = Group::symmetric(6).unwrap();
    let h = lambda_subgroup(3, 2).unwrap();
    assert_eq!(s6.transversal(&h).unwrap().len(), 60);
    assert!(s6.transversal(&Group::symmetric(5).unwrap()).is_err());
}

#[test]
fn double_coset_examples() {
    let s4 = Group::symmetric(4).unwrap();
    assert_eq!(s4.double_cosets(&s4, &s4).unwrap(), vec![Perm::identity(4)]);
    let triv = Group::generated(4, vec![], "1").unwrap();
    assert_eq!(s4.double_cosets(&triv, &triv).unwrap().len(), 24);
}

/// Brute-force double cosets as orbit sets, independent of the library's enumeration.
fn brute_double_cosets(g: &Group, a: &Group, b: &Group) -> Vec<HashSet<Perm>> {
    let mut out: Vec<HashSet<Perm>> = Vec::new();
    for x in g.elements() {
        if out.iter().any(|c| c.contains(x)) {
            continue;
        }
        let mut c = HashSet::new();
        for u in a.elements() {
            for v in b.elements() {
                c.insert(u.then_after(x).then_after(v));
            }
        }
        out.push(c);
    }
    out
}

#[test]
fn lambda_double_cosets_match_oracle() {
    let s6 = Group::symmetric(6).unwrap();
    let delta = sp_diag(3, 2).unwrap();
    let d = lambda_subgroup(3, 2).unwrap();
    let reps = s6.double_cosets(&delta, &d).unwrap();
    let oracle = brute_double_cosets(&s6, &delta, &d);
    assert_eq!(reps.len(), oracle.len());
    assert_eq!(oracle.iter().map(|c| c.len()).sum::<usize>(), 720);
    for (r, c) in reps.iter().zip(&oracle) {
        // each representative is the least element of its coset
        assert_eq!(c.iter().min().unwrap(), r);
    }
    let inter = |x: &Perm| {
        d.elements()
            .iter()
            .filter(|g| delta.contains(&g.conjugate_by(x)))
            .count()
    };
    let gamma1 = reps.iter().filter(|x| inter(x) == 6).count();
    let gamma2 = reps.iter().filter(|x| inter(x) == 3).count();
    assert!(gamma1 >= 1);
    assert!(inter(&reps[0]) == 6);
    // the other double cosets meet Δ in a p'-group
    for x in &reps {
        let i = inter(x);
        assert!(i == 6 || i == 3 || i % 3 != 0, "{x}: {i}");
    }
    assert!(gamma2 >= 1);
}

#[test]
fn normalizer_centralizer_examples() {
    let s3 = Group::symmetric(3).unwrap();
    let c3 = s3.subgroup(vec![p("(1 2 3)", 3)], "C3").unwrap();
    assert_eq!(s3.normalizer(&c3).unwrap().order(), 6);
    for n in 3..=5 {
        let g = Group::symmetric(n).unwrap();
        assert_eq!(g.centralizer(&g).unwrap().order(), 1);
    }
    let s6 = Group::symmetric(6).unwrap();
    let dc = cyclic_diag(3, 2).unwrap();
    let c = s6.centralizer(&dc).unwrap();
    assert_eq!(c.order(), 18);
    let mut gens = super::group::slots_subgroup(&Group::cyclic(3).unwrap(), 2);
    gens.extend(super::group::block_subgroup(&Group::symmetric(2).unwrap(), 3));
    let expected = Group::generated(6, gens, "").unwrap();
    assert_eq!(expected.order(), 18);
    assert!(c.elements().iter().all(|x| expected.contains(x)));
    for q in [2usize, 3, 5] {
        let sq = Group::symmetric(q).unwrap();
        let cq = Group::cyclic(q).unwrap();
        assert_eq!(sq.normalizer(&cq).unwrap().order(), q * (q - 1));
    }
}

#[test]
fn embeddings_commute() {
    for (a, b) in [(2, 3), (3, 2), (2, 4), (4, 2)] {
        let sa = Group::symmetric(a).unwrap();
        let sb = Group::symmetric(b).unwrap();
        for s in sb.elements() {
            let ds = diag_embed(s, a);
            let prod = (1..=a).fold(Perm::identity(a * b), |acc, r| {
                acc.then_after(&slot_embed(s, r, a).unwrap())
            });
            assert_eq!(prod, ds);
            for t in sa.elements() {
                let bt = block_embed(t, b);
                assert_eq!(ds.then_after(&bt), bt.then_after(&ds));
            }
        }
    }
}

#[test]
fn sylow_and_p_subgroups() {
    let s6 = Group::symmetric(6).unwrap();
    assert_eq!(s6.sylow(2).unwrap().order(), 16);
    assert_eq!(s6.sylow(3).unwrap().order(), 9);
    assert_eq!(Group::symmetric(5).unwrap().sylow(5).unwrap().order(), 5);
    let classes = s6.p_subgroup_classes(3).unwrap();
    // 1, two classes of C3 ((123) and (123)(456)), C3xC3
    assert_eq!(classes.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![1, 3, 3, 9]);
}

#[test]
fn subgroup_language() {
    assert_eq!(parse_subgroup("C3@diag(2)").unwrap().order(), 3);
    assert_eq!(parse_subgroup("S3 x S2").unwrap().order(), 12);
    assert_eq!(parse_subgroup("wreath(2,3)").unwrap().order(), 48);
    assert_eq!(parse_subgroup("C2@blocks(3)").unwrap().order(), 2);
    assert_eq!(parse_subgroup("S5").unwrap().order(), 120);
    assert_eq!(parse_subgroup("gens(4: (1 2)(3 4), (1 3))").unwrap().order(), 8);
    assert!(parse_subgroup("T7").is_err());
    assert!(parse_subgroup("C3@twist(2)").is_err());
}

proptest! {
    #[test]
    fn embeddings_are_homomorphisms(s1 in any::<u64>(), s2 in any::<u64>(), a in 1usize..4, b in 1usize..4) {
        let (x, y) = (random_perm(a, s1), random_perm(a, s2));
        prop_assert_eq!(block_embed(&x.then_after(&y), b), block_embed(&x, b).then_after(&block_embed(&y, b)));
        let (u, v) = (random_perm(b, s1), random_perm(b, s2));
        prop_assert_eq!(diag_embed(&u.then_after(&v), a), diag_embed(&u, a).then_after(&diag_embed(&v, a)));
    }

    #[test]
    fn inverse_and_parse_roundtrip(seed in any::<u64>(), n in 1usize..9) {
        let g = random_perm(n, seed);
        prop_assert!(g.then_after(&g.inverse()).is_identity());
        prop_assert_eq!(Perm::parse(&g.to_string(), n).unwrap(), g);
    }

    #[test]
    fn double_cosets_partition(seed in any::<u64>()) {
        let s5 = Group::symmetric(5).unwrap();
        let a = s5.subgroup(vec![random_perm(5, seed)], "A").unwrap();
        let b = s5.subgroup(vec![random_perm(5, seed ^ 1), random_perm(5, seed ^ 2)], "B").unwrap();
        let reps = s5.double_cosets(&a, &b).unwrap();
        let total: usize = reps.iter().map(|x| Group::double_coset_size(&a, x, &b)).sum();
        prop_assert_eq!(total, 120);
    }
}

#[test]
fn double_coset_classifier_covers_s6() {
    use super::classify::{CosetKind, DoubleCosetData};
    for (p, k) in [(3, 2), (2, 3)] {
        let data = DoubleCosetData::new(p, k).unwrap();
        assert_eq!(data.covered(), 720);
        assert_eq!(data.count(CosetKind::Other), 0);
        assert!(data.count(CosetKind::Full) >= 1);
        assert_eq!(data.classes[0].kind, CosetKind::Full);
        let cent = data.g.centralizer(&data.delta_cyclic).unwrap();
        assert_eq!(cent.order(), data.centralizer_product.order());
        assert!(cent.elements().iter().all(|x| data.centralizer_product.contains(x)));
        for class in &data.classes {
            if class.intersection.order() % p == 0 {
                let w = data.centralizing_rep(&class.rep).expect("rep in the centralizer product");
                assert!(data.check_choice(&w).unwrap());
            }
        }
    }
    let data = DoubleCosetData::new(3, 2).unwrap();
    assert_eq!(data.centralizer_product.order(), 18);
}
