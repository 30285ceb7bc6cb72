use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nichols::approx::{cover_dims, nichols_dims};
use nichols::braid::{braid_rep_apply, braiding_from_rack, quantum_symmetrizer, BraidWord, Options};
use nichols::cocycle::{coboundary, twist_rack_cocycle, validate_group_cocycle};
use nichols::fixtures::{fixture, random_coboundary, random_mu, random_rack_cocycle, s3_transposition_rack};
use nichols::linalg::{nullspace_basis, rank, SparseMatrix};
use nichols::rack::{cyclic_group, symmetric_group, GroupTable};
use nichols::tensor::shuffle_product;
use nichols::twist::intertwiner_matrix;
use nichols::{ExactScalar, SparseVector};

fn scalar(rng: &mut ChaCha8Rng, m: u32) -> ExactScalar {
    let a = ExactScalar::from_integer(m, rng.gen_range(-4..=4));
    let b = ExactScalar::zeta_pow(m, rng.gen_range(0..m as i64));
    &a + &(&b * &ExactScalar::from_integer(m, rng.gen_range(-2..=2)))
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize, m: u32) -> SparseVector {
    let vals: Vec<ExactScalar> = (0..dim).map(|_| ExactScalar::from_integer(m, rng.gen_range(-2..=2))).collect();
    SparseVector::from_dense(m, &vals)
}

fn groups() -> Vec<Arc<GroupTable>> {
    vec![Arc::new(cyclic_group(4).unwrap()), Arc::new(cyclic_group(6).unwrap()), Arc::new(symmetric_group(3).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(seed in any::<u64>(), m in prop::sample::select(vec![1u32, 3, 4, 5, 8, 12])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (scalar(&mut rng, m), scalar(&mut rng, m), scalar(&mut rng, m));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
        prop_assert!(ExactScalar::zeta(m).pow(m as i64).unwrap().is_one());
    }

    #[test]
    fn rank_plus_nullity(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = 3;
        let dense: Vec<Vec<ExactScalar>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.gen_bool(0.5) { ExactScalar::zero(m) } else { scalar(&mut rng, m) }).collect())
            .collect();
        let a = SparseMatrix::from_dense(m, &dense);
        let kernel = nullspace_basis(&a);
        prop_assert_eq!(rank(&a) + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(a.mul_vec(v).is_zero());
        }
        // row permutation and row scaling keep the rank
        let mut permuted = dense.clone();
        permuted.reverse();
        permuted[0] = permuted[0].iter().map(|x| x * &ExactScalar::zeta(m)).collect();
        prop_assert_eq!(rank(&SparseMatrix::from_dense(m, &permuted)), rank(&a));
    }

    #[test]
    fn coboundaries_compose(seed in any::<u64>(), gi in 0usize..3) {
        let g = &groups()[gi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mu, nu) = (random_mu(&mut rng, g, 12), random_mu(&mut rng, g, 12));
        let product: Vec<ExactScalar> = mu.iter().zip(&nu).map(|(a, b)| a * b).collect();
        let (a, b) = (coboundary(g, &mu).unwrap(), coboundary(g, &nu).unwrap());
        let ab = a.pointwise_mul(&b).unwrap();
        prop_assert_eq!(&ab, &coboundary(g, &product).unwrap());
        prop_assert!(validate_group_cocycle(g, ab.table()).is_ok());
        prop_assert!(validate_group_cocycle(g, a.inverse().table()).is_ok());
    }

    #[test]
    fn twists_are_cocycles_and_invert(seed in any::<u64>()) {
        let (g, rack) = s3_transposition_rack();
        let q = random_rack_cocycle(seed);
        // the S_3 rack carries an embedding; other racks from the catalogue may not
        let q = if q.rack().embedding().is_some() { q } else { nichols::RackCocycle::constant(rack, ExactScalar::from_integer(1, -1)).unwrap() };
        let group = q.rack().embedding().unwrap().group.clone();
        let sigma = random_coboundary(seed ^ 0x5eed, &group);
        let t = twist_rack_cocycle(&q, &sigma).unwrap();
        prop_assert!(t.violation.is_none());
        prop_assert!(t.cocycle.validate().is_ok());
        let back = twist_rack_cocycle(&t.cocycle, &sigma.inverse()).unwrap().cocycle;
        prop_assert_eq!(back, q);
        prop_assert!(g.order() == 6);
    }

    #[test]
    fn twisted_representation_is_conjugate(seed in any::<u64>(), n in 2usize..5) {
        let f = fixture("s3-transpositions-minus1").unwrap();
        let q = f.cocycle.unwrap();
        let group = q.rack().embedding().unwrap().group.clone();
        let sigma = random_coboundary(seed, &group);
        let qp = twist_rack_cocycle(&q, &sigma).unwrap().cocycle;
        let m = 12;
        let c = braiding_from_rack(&q.embed(m).unwrap()).unwrap();
        let cp = braiding_from_rack(&qp.embed(m).unwrap()).unwrap();
        let fi = intertwiner_matrix(&q, &sigma, n, &Default::default()).unwrap();
        let finv = fi.inverse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters: Vec<i32> = (0..rng.gen_range(1..6)).map(|_| {
            let l = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.3) { -l } else { l }
        }).collect();
        let w = BraidWord::new(n, letters).unwrap();
        let v = random_vector(&mut rng, 3usize.pow(n as u32), m);
        // ρ'(w) = f⁻¹ ρ(w) f
        let lhs = braid_rep_apply(&cp, n, &w, &v).unwrap();
        let rhs = finv.apply(&braid_rep_apply(&c, n, &w, &fi.apply(&v)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shuffle_is_associative(seed in any::<u64>(), p in 1usize..3, q in 1usize..3, r in 1usize..3) {
        let budget = Default::default();
        for name in ["flip-dim2", "s3-transpositions-minus1", "diagonal-zeta3-dim2"] {
            let c = fixture(name).unwrap().braiding;
            let (dim, m) = (c.dim(), c.modulus());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_vector(&mut rng, dim.pow(p as u32), m);
            let v = random_vector(&mut rng, dim.pow(q as u32), m);
            let w = random_vector(&mut rng, dim.pow(r as u32), m);
            let left = shuffle_product(&c, p + q, &shuffle_product(&c, p, &u, q, &v, &budget).unwrap(), r, &w, &budget).unwrap();
            let right = shuffle_product(&c, p, &u, q + r, &shuffle_product(&c, q, &v, r, &w, &budget).unwrap(), &budget).unwrap();
            prop_assert_eq!(left, right, "{}", name);
        }
    }

    #[test]
    fn symmetrizer_factors_through_shuffles(seed in any::<u64>(), p in 1usize..3, q in 1usize..3) {
        let opts = Options::default();
        let c = braiding_from_rack(&random_rack_cocycle(seed)).unwrap();
        let (dim, m) = (c.dim(), c.modulus());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_vector(&mut rng, dim.pow(p as u32), m);
        let v = random_vector(&mut rng, dim.pow(q as u32), m);
        let qs = |n| quantum_symmetrizer(&c, n, &opts).unwrap();
        let lhs = qs(p + q).mul_vec(&u.tensor(&v));
        let rhs = shuffle_product(&c, p, &qs(p).mul_vec(&u), q, &qs(q).mul_vec(&v), &opts.budget).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn covers_decrease_to_the_nichols_algebra(seed in any::<u64>()) {
        let opts = Options::default();
        let q = random_rack_cocycle(seed);
        prop_assume!(q.rack().size() <= 3);
        let c = braiding_from_rack(&q).unwrap();
        let n_max = 4;
        let nichols = nichols_dims(&c, n_max, &opts).unwrap().dims().unwrap();
        let covers: Vec<Vec<usize>> = (1..=3).map(|d| cover_dims(&c, d, n_max, &opts).unwrap().dims().unwrap()).collect();
        for (k, cover) in covers.iter().enumerate() {
            let d = k + 1;
            for n in 0..=n_max {
                prop_assert!(cover[n] >= nichols[n]);
                if n <= d {
                    prop_assert_eq!(cover[n], nichols[n]);
                }
                if k > 0 {
                    prop_assert!(cover[n] <= covers[k - 1][n]);
                }
            }
        }
    }

    #[test]
    fn parallel_and_serial_symmetrizers_agree(seed in any::<u64>(), n in 2usize..5) {
        let c = braiding_from_rack(&random_rack_cocycle(seed)).unwrap();
        let par = quantum_symmetrizer(&c, n, &Options { parallel: true, ..Default::default() }).unwrap();
        let ser = quantum_symmetrizer(&c, n, &Options { parallel: false, ..Default::default() }).unwrap();
        prop_assert_eq!(serde_json::to_string(&par.to_json()).unwrap(), serde_json::to_string(&ser.to_json()).unwrap());
        let blocked = nichols_dims(&c, n, &Options { blocked: true, ..Default::default() }).unwrap();
        prop_assert_eq!(blocked, nichols_dims(&c, n, &Options::default()).unwrap());
    }
}
