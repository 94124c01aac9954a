use comrade::oracle::{dense_det, dense_invert};
use comrade::{
    determinant, factorize, invert, random_comrade, reconstruct_lu, ComradeMatrix, DenseMatrix, Error, ExactRational,
    Polynomial, RationalFunction,
};
use proptest::prelude::*;

fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (
        small_poly(3),
        small_poly(2).prop_filter("nonzero denominator", |p| !p.is_zero()),
    )
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn int_matrix(n: usize) -> impl Strategy<Value = DenseMatrix<ExactRational>> {
    prop::collection::vec(-9i64..=9, n * n)
        .prop_map(move |v| DenseMatrix::new(n, v.into_iter().map(ExactRational::from_integer).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn arithmetic_stays_canonical(a in rational_function(), b in rational_function()) {
        prop_assert!(a.add(&b).is_canonical());
        prop_assert!(a.sub(&b).is_canonical());
        prop_assert!(a.mul(&b).is_canonical());
        if !b.is_zero() {
            prop_assert!(a.div(&b).unwrap().is_canonical());
        }
    }

    #[test]
    fn gcd_divides_both(p in small_poly(4), q in small_poly(4)) {
        prop_assume!(!(p.is_zero() && q.is_zero()));
        let g = comrade::poly_gcd(&p, &q).unwrap();
        prop_assert_eq!(g.leading(), Some(&ExactRational::one()));
        prop_assert!(p.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(q.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn gcd_recovers_common_factor(p in small_poly(2), q in small_poly(2), r in small_poly(2)) {
        prop_assume!(!r.is_zero() && !(p.is_zero() && q.is_zero()));
        let g = comrade::poly_gcd(&p.mul(&r), &q.mul(&r)).unwrap();
        // the common factor r divides the gcd
        prop_assert!(g.div_rem(&r).unwrap().1.is_zero());
    }

    #[test]
    fn evaluation_at_zero_is_a_homomorphism(a in rational_function(), b in rational_function()) {
        if let (Ok(x), Ok(y)) = (a.eval_at_zero(), b.eval_at_zero()) {
            if let Ok(s) = a.add(&b).eval_at_zero() {
                prop_assert_eq!(s, &x + &y);
            }
            if let Ok(p) = a.mul(&b).eval_at_zero() {
                prop_assert_eq!(p, &x * &y);
            }
        }
    }

    #[test]
    fn comrade_round_trips_through_dense(n in 3usize..9, seed in any::<u64>(), bias in 0.0f64..=1.0) {
        let c = random_comrade(n, seed, bias).unwrap();
        prop_assert_eq!(ComradeMatrix::from_dense(&c.to_dense()).unwrap(), c);
    }

    #[test]
    fn band_leaves_n_minus_2_squared_zeros(n in 4usize..12) {
        let ones = vec![ExactRational::one(); n];
        let c = ComradeMatrix::new(n, ones.clone(), ones[..n - 1].to_vec(), ones[..n - 1].to_vec(), ones[..n - 2].to_vec()).unwrap();
        let d = c.to_dense();
        let zeros = (0..n - 1).flat_map(|i| d.row(i).iter()).filter(|v| v.is_zero()).count();
        prop_assert_eq!(zeros, (n - 2) * (n - 2));
    }

    #[test]
    fn determinant_matches_oracle(n in 3usize..9, seed in any::<u64>(), biased in any::<bool>()) {
        let c = random_comrade(n, seed, if biased { 1.0 } else { 0.0 }).unwrap();
        let det = determinant::<RationalFunction>(&c).unwrap();
        prop_assert_eq!(&det.value, &dense_det(&c.to_dense()));
        if let Ok(exact) = determinant::<ExactRational>(&c) {
            prop_assert_eq!(exact.value, det.value);
        }
    }

    #[test]
    fn exact_lu_reproduces_matrix(n in 3usize..9, seed in any::<u64>()) {
        let c = random_comrade(n, seed, 0.0).unwrap();
        if let Ok(f) = factorize::<ExactRational>(&c) {
            let (l, u) = reconstruct_lu(&f, &c).unwrap();
            prop_assert_eq!(l.matmul(&u), c.to_dense());
        }
    }

    #[test]
    fn symbolic_lu_evaluates_back_to_matrix(n in 3usize..9, seed in any::<u64>()) {
        let c = random_comrade(n, seed, 1.0).unwrap();
        let f = factorize::<RationalFunction>(&c).unwrap();
        prop_assert!(f.mu().iter().all(|m| !m.is_zero()));
        let (l, u) = reconstruct_lu(&f, &c).unwrap();
        let back = l.matmul(&u).try_map(RationalFunction::eval_at_zero).unwrap();
        prop_assert_eq!(back, c.to_dense());
    }

    #[test]
    fn inverse_is_two_sided_and_matches_oracle(n in 3usize..9, seed in any::<u64>(), bias in prop::sample::select(vec![0.0, 0.5, 1.0])) {
        let c = random_comrade(n, seed, bias).unwrap();
        let dense = c.to_dense();
        match invert::<RationalFunction>(&c) {
            Ok(r) => {
                prop_assert!(c.mul_right(&r.inverse).is_identity());
                prop_assert!(c.mul_left(&r.inverse).is_identity());
                prop_assert_eq!(r.inverse, dense_invert(&dense).unwrap());
            }
            Err(Error::Singular) => prop_assert!(dense_det(&dense).is_zero()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn columns_satisfy_their_defining_relation(n in 3usize..9, seed in any::<u64>()) {
        let c = random_comrade(n, seed, 0.5).unwrap();
        let Ok(r) = invert::<RationalFunction>(&c) else { return Ok(()); };
        let col = |j: usize| r.inverse.column(j - 1);
        // column j of S·C for j <= n-2: α(j-1)·S(j-1) + β(j)·S(j) + γ(j+1)·S(j+1) + a(n-j+1)·S(n)
        for j in 1..=n - 2 {
            for i in 0..n {
                let mut lhs = &(c.beta(j) * &col(j)[i]) + &(c.gamma(j + 1) * &col(j + 1)[i]);
                if j > 1 {
                    lhs = &lhs + &(c.alpha(j - 1) * &col(j - 1)[i]);
                }
                lhs = &lhs + &(c.a(n - j + 1) * &col(n)[i]);
                let e = if i + 1 == j { ExactRational::one() } else { ExactRational::zero() };
                prop_assert_eq!(lhs, e);
            }
        }
    }

    #[test]
    fn tridiagonal_case_matches_oracle(n in 3usize..9, seed in any::<u64>()) {
        let c = random_comrade(n, seed, 0.5).unwrap();
        let c = ComradeMatrix::new(n, c.betas().to_vec(), c.alphas().to_vec(), c.gammas().to_vec(), vec![ExactRational::zero(); n - 2]).unwrap();
        let dense = c.to_dense();
        match invert::<RationalFunction>(&c) {
            Ok(r) => prop_assert_eq!(r.inverse, dense_invert(&dense).unwrap()),
            Err(Error::Singular) => prop_assert!(dense_det(&dense).is_zero()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn duplicated_row_gives_zero_determinant(n in 4usize..8, seed in any::<u64>()) {
        // row n-1 is (0, …, γ(n-1), β(n-1), α(n-1)); copy it into the last row
        let c = random_comrade(n, seed, 0.0).unwrap();
        let mut a = vec![ExactRational::zero(); n - 2];
        a[0] = c.gamma(n - 1).clone();
        let twin = ComradeMatrix::new(
            n,
            [&c.betas()[..n - 1], &[c.alpha(n - 1).clone()]].concat(),
            c.alphas().to_vec(),
            [&c.gammas()[..n - 2], &[c.beta(n - 1).clone()]].concat(),
            a,
        ).unwrap();
        let d = twin.to_dense();
        prop_assert_eq!(d.row(n - 1), d.row(n - 2));
        prop_assert!(determinant::<RationalFunction>(&twin).unwrap().value.is_zero());
        if let Ok(exact) = determinant::<ExactRational>(&twin) {
            prop_assert!(exact.value.is_zero());
        }
        prop_assert!(matches!(invert::<RationalFunction>(&twin), Err(Error::Singular)));
    }

    #[test]
    fn oracle_inverse_is_two_sided(m in (1usize..7).prop_flat_map(int_matrix)) {
        let det = dense_det(&m);
        match dense_invert(&m) {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                prop_assert!(inv.matmul(&m).is_identity());
                prop_assert!(m.matmul(&inv).is_identity());
                prop_assert_eq!(&det * &dense_det(&inv), ExactRational::one());
            }
            Err(_) => prop_assert!(det.is_zero()),
        }
    }

    #[test]
    fn oracle_det_ignores_row_addition(m in (2usize..7).prop_flat_map(int_matrix), src in 0usize..7, dst in 0usize..7, k in -5i64..=5) {
        let n = m.n();
        let (src, dst) = (src % n, dst % n);
        prop_assume!(src != dst);
        let k = ExactRational::from_integer(k);
        let mut shifted = m.clone();
        for j in 0..n {
            *shifted.get_mut(dst, j) = m.get(dst, j) + &(&k * m.get(src, j));
        }
        prop_assert_eq!(dense_det(&shifted), dense_det(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn field_laws(a in rational_function(), b in rational_function(), c in rational_function()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.sub(&a), RationalFunction::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.recip().unwrap()), RationalFunction::one());
        }
    }
}
