use proptest::prelude::*;

use super::*;

fn gf(p: u32, d: u32) -> Arc<FieldCtx> {
    field_make(p, d).unwrap()
}

#[test]
fn rref_examples() {
    let f3 = gf(3, 1);
    let r = Mat::identity(&f3, 3).rref();
    assert_eq!((r.rank, r.pivots.clone()), (3, vec![0, 1, 2]));
    let r = Mat::zeros(&f3, 2, 5).rref();
    assert_eq!((r.rank, r.pivots.len()), (0, 0));
    let f2 = gf(2, 1);
    let r = Mat::from_rows(&f2, &[vec![1, 1], vec![1, 1]]).rref();
    assert_eq!((r.rank, r.pivots.clone()), (1, vec![0]));
    assert_eq!(r.r, Mat::from_rows(&f2, &[vec![1, 1], vec![0, 0]]));
}

#[test]
fn kernel_examples() {
    let f3 = gf(3, 1);
    assert_eq!(Mat::identity(&f3, 4).kernel_basis().rows(), 0);
    assert_eq!(Mat::zeros(&f3, 3, 3).kernel_basis(), Mat::identity(&f3, 3));
    let a = Mat::from_rows(&f3, &[vec![1, 1], vec![2, 2]]);
    let k = a.kernel_basis();
    // direct multiplication: (1,1) * A = (1+2, 1+2) = 0
    assert_eq!(k, Mat::from_rows(&f3, &[vec![1, 1]]));
    assert!(k.mul(&a).is_zero());
}

#[test]
fn spin_examples() {
    let f3 = gf(3, 1);
    let e1 = Mat::from_rows(&f3, &[vec![1, 0, 0]]);
    assert_eq!(spin(&e1, &[Mat::identity(&f3, 3)]).unwrap(), e1);
    let shift = Mat::permutation(&f3, &[1, 2, 0]);
    assert_eq!(spin(&e1, &[shift]).unwrap(), Mat::identity(&f3, 3));
    let f2 = gf(2, 1);
    let ones = Mat::from_rows(&f2, &[vec![1, 1, 1, 1]]);
    let perms = [
        Mat::permutation(&f2, &[1, 0, 2, 3]),
        Mat::permutation(&f2, &[1, 2, 3, 0]),
    ];
    assert_eq!(spin(&ones, &perms).unwrap(), ones);
    assert!(spin(&ones, &[Mat::identity(&f2, 3)]).is_err());
}

#[test]
fn scalar_extend_examples() {
    let f2 = gf(2, 1);
    let f4 = gf(2, 2);
    assert_eq!(
        Mat::identity(&f2, 3).scalar_extend(&f4).unwrap(),
        Mat::identity(&f4, 3)
    );
    let f3 = gf(3, 1);
    let f9 = gf(3, 2);
    let m = Mat::from_rows(&f3, &[vec![2]]).scalar_extend(&f9).unwrap();
    assert_eq!(m.get(0, 0), 2);
    assert!(Mat::identity(&f4, 2).scalar_extend(&f4).is_err());
    assert!(Mat::identity(&f3, 2).scalar_extend(&f4).is_err());
}

#[test]
fn inverse_and_solve() {
    let f5 = gf(5, 1);
    let a = Mat::from_rows(&f5, &[vec![1, 2], vec![3, 4]]);
    let inv = a.inverse().unwrap();
    assert!(a.mul(&inv).is_identity());
    let b = Mat::from_rows(&f5, &[vec![4, 1]]);
    let x = a.solve_left(&b).unwrap();
    assert_eq!(x.mul(&a), b);
    let sing = Mat::from_rows(&f5, &[vec![1, 2], vec![2, 4]]);
    assert!(sing.inverse().is_none());
    assert!(sing.solve_left(&Mat::from_rows(&f5, &[vec![0, 1]])).is_none());
    assert_eq!(a.det(), 3);
}

#[test]
fn gf2_bitpacked_paths_agree_with_generic() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let f2 = gf(2, 1);
    let a = Mat::random(&f2, 70, 90, &mut rng);
    let b = Mat::random(&f2, 90, 65, &mut rng);
    let c = a.mul(&b);
    for i in 0..5 {
        for j in 0..5 {
            let s: u32 = (0..90).map(|k| (a.get(i, k) * b.get(k, j)) as u32).sum();
            assert_eq!(c.get(i, j) as u32, s % 2);
        }
    }
    let r = a.rref();
    assert_eq!(r.r.rref().r, r.r);
    assert!(a.kernel_basis().mul(&a).is_zero());
}

/// Rank as the largest size of a nonzero minor.
fn rank_by_minors(m: &Mat) -> usize {
    let top = m.rows().min(m.cols());
    for k in (1..=top).rev() {
        for rs in mat::sorted_subsets(m.rows(), k) {
            for cs in mat::sorted_subsets(m.cols(), k) {
                if m.select_rows(&rs).select_cols(&cs).det() != 0 {
                    return k;
                }
            }
        }
    }
    0
}

fn small_mat(max: usize) -> impl Strategy<Value = Mat> {
    (
        prop_oneof![Just((2u32, 1u32)), Just((3, 1)), Just((2, 2)), Just((3, 2)), Just((5, 1))],
        1..=max,
        1..=max,
        any::<u64>(),
    )
        .prop_map(|((p, d), r, c, seed)| {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = field_make(p, d).unwrap();
            Mat::random(&f, r, c, &mut rng)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rref_is_idempotent(m in small_mat(8)) {
        let r = m.rref();
        prop_assert_eq!(r.r.rref().r, r.r.clone());
        prop_assert!(r.pivots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rank_matches_minor_oracle(m in small_mat(4)) {
        let r = m.rank();
        prop_assert_eq!(r, m.transpose().rank());
        prop_assert_eq!(r, rank_by_minors(&m));
    }

    #[test]
    fn kernel_is_annihilated(m in small_mat(8)) {
        let k = m.kernel_basis();
        prop_assert!(k.rows() == 0 || k.mul(&m).is_zero());
        prop_assert_eq!(k.rows() + m.rank(), m.rows());
    }

    #[test]
    fn spin_is_closed(m in small_mat(6), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = m.cols();
        let ops = [Mat::random(m.field(), n, n, &mut rng), Mat::random(m.field(), n, n, &mut rng)];
        let s = spin(&m, &ops).unwrap();
        prop_assert!(m.rows_in_span(&s));
        for op in &ops {
            prop_assert!(s.rows() == 0 || s.mul(op).rows_in_span(&s));
        }
    }

    #[test]
    fn extension_preserves_rank(m in small_mat(6)) {
        if m.field().is_prime_field() {
            let big = field_make(m.field().p(), 3).unwrap();
            prop_assert_eq!(m.scalar_extend(&big).unwrap().rank(), m.rank());
        }
    }
}
