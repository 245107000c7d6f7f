use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bpcentre::adamsk::{AdamsFamily, FamilyKind};
use bpcentre::arith::{int, is_p_local_unit, p_pow, rat, Prime, Rational};
use bpcentre::fgl::BPContext;
use bpcentre::hopf::HopfAlgebroid;
use bpcentre::lattice::{solve, CongruenceSystem};
use bpcentre::GradedPoly;

fn pr(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn local(p: Prime, rng: &mut ChaCha8Rng, range: i64) -> Rational {
    let num = rng.gen_range(-range..=range);
    let mut den = rng.gen_range(1..=7i64);
    while den % p.get() as i64 == 0 {
        den += 1;
    }
    rat(num, den)
}

/// Rows with entries of valuation at least `-max_neg`.
fn random_system(p: Prime, n: usize, rows: usize, max_neg: i64, rng: &mut ChaCha8Rng) -> CongruenceSystem {
    let rows = (0..rows)
        .map(|_| (0..=n).map(|_| local(p, rng, 8) * p_pow(p, -rng.gen_range(0..=max_neg))).collect())
        .collect();
    CongruenceSystem::new(p, n, rows).unwrap()
}

fn box_points(p: u64, e: u32, dim: usize) -> Vec<Vec<Rational>> {
    let m = p.pow(e) as i64;
    let mut pts = vec![vec![]];
    for _ in 0..dim {
        pts = pts
            .into_iter()
            .flat_map(|v: Vec<Rational>| (0..m).map(move |k| [v.clone(), vec![int(k)]].concat()))
            .collect();
    }
    pts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lattice_exhaustive_completeness(seed in any::<u64>(), n in 0usize..=2, rows in 0usize..=3) {
        let p = pr(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sys = random_system(p, n, rows, 1, &mut rng);
        let l = solve(&sys);
        for b in l.columns() {
            prop_assert!(sys.is_satisfied_by(b));
        }
        let e = l.pivots().iter().max().unwrap() + 1;
        for mu in box_points(3, e, n + 1) {
            prop_assert_eq!(sys.is_satisfied_by(&mu), l.contains(&mu), "mu = {:?}", mu);
        }
    }

    #[test]
    fn lattice_sampled_completeness(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 5]), n in 0usize..=4) {
        let p = pr(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sys = random_system(p, n, 3, 2, &mut rng);
        let l = solve(&sys);
        let m = p.get().pow(l.pivots().iter().max().unwrap() + 1) as i64;
        for _ in 0..300 {
            let mu: Vec<Rational> = (0..=n).map(|_| int(rng.gen_range(0..m))).collect();
            prop_assert_eq!(sys.is_satisfied_by(&mu), l.contains(&mu));
        }
    }

    #[test]
    fn pivots_invariant_under_shuffles_and_units(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5]), n in 0usize..=5) {
        let p = pr(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sys = random_system(p, n, 4, 3, &mut rng);
        let l = solve(&sys);
        let mut rows = sys.rows().to_vec();
        rows.shuffle(&mut rng);
        for r in rows.iter_mut() {
            let u = loop {
                let u = local(p, &mut rng, 12);
                if is_p_local_unit(p, &u) { break u; }
            };
            for x in r.iter_mut() { *x *= &u; }
        }
        let l2 = solve(&CongruenceSystem::new(p, n, rows).unwrap());
        prop_assert_eq!(l.pivots(), l2.pivots());
        prop_assert_eq!(&l, &l2);
    }

    #[test]
    fn normalized_rows_when_they_exist(seed in any::<u64>(), n in 0usize..=4) {
        let p = pr(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = solve(&random_system(p, n, 3, 2, &mut rng));
        if let Ok(rows) = l.normalized_rows() {
            let again = solve(&CongruenceSystem::from_ragged(p, n, rows.iter().map(|c| c.entries.clone())));
            prop_assert_eq!(again, l);
        }
    }

    #[test]
    fn expansion_round_trip(seed in any::<u64>(), big_n in 0usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (kind, p) in [(FamilyKind::PhiKu, 3u64), (FamilyKind::PhihatG, 5), (FamilyKind::PhiKU, 3), (FamilyKind::ZetaKu2, 2)] {
            let f = AdamsFamily::new(kind, pr(p), None).unwrap();
            let a: Vec<Rational> = (0..=big_n).map(|_| local(pr(p), &mut rng, 50)).collect();
            let e = f.expand(&f.evaluate(&a));
            prop_assert_eq!(&e.coefficients, &a);
            prop_assert!(e.integral);
        }
    }

    #[test]
    fn product_lemma(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3])) {
        let h = HopfAlgebroid::new(BPContext::new(pr(p), None, 5).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wx = rng.gen_range(0..=5);
        let x = random_element(&h, wx, &mut rng);
        let y = random_element(&h, 5 - wx, &mut rng);
        prop_assert_eq!(h.v_mu(&(&x * &y)).unwrap(), h.v_mu(&x).unwrap().convolve(&h.v_mu(&y).unwrap()));
    }

    #[test]
    fn eta_r_basis_round_trip(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3])) {
        let h = HopfAlgebroid::new(BPContext::new(pr(p), None, 6).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&h, 6, &mut rng);
        prop_assert_eq!(h.from_eta_r_basis(&h.rewrite_in_eta_r_basis(&x).unwrap()).unwrap(), x);
    }
}

fn random_element(h: &HopfAlgebroid, max_w: u32, rng: &mut ChaCha8Rng) -> GradedPoly {
    let monos = h.lt_table().monomials_up_to(max_w);
    let mut x = GradedPoly::zero(h.lt_table(), h.bound());
    for _ in 0..rng.gen_range(1..=4) {
        x.add_term(monos.choose(rng).unwrap().clone(), &local(h.p(), rng, 9));
    }
    x
}
