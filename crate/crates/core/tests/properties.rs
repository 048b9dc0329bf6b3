mod common;

use proptest::prelude::*;
use suslin_core::clifford::{self, CliffordElem};
use suslin_core::epin::{self, EpinKind};
use suslin_core::forms;
use suslin_core::spin::{self, SpinPair};
use suslin_core::suslin::{self, SuslinMatrix};
use suslin_core::{Elem, Mat, Ring, SuslinPair};

fn zm(m: u64, vals: &[u64]) -> Vec<Elem> {
    let r = Ring::Modular(m);
    vals.iter().map(|&v| r.int(v as i64)).collect()
}

fn mat_from(ring: &Ring, size: usize, vals: &[u64]) -> Mat {
    Mat::from_fn(ring, size, |i, j| ring.int(vals[i * size + j] as i64))
}

fn small_poly(ring: &Ring, coeffs: &[i64]) -> Elem {
    // c0 + c1 x + c2 y + c3 x y + c4 x^2
    let x = ring.var("x").unwrap();
    let y = ring.var("y").unwrap();
    let mons = [ring.one(), x.clone(), y.clone(), &x * &y, &x * &x];
    mons.iter()
        .zip(coeffs)
        .fold(ring.zero(), |acc, (m, &c)| &acc + &m.scale_int(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modular_ring_axioms(m in 2u64..60, a in 0u64..1000, b in 0u64..1000, c in 0u64..1000) {
        let e = zm(m, &[a, b, c]);
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert!((a + &-a).is_zero());
    }

    #[test]
    fn integer_ring_axioms(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let z = Ring::Integer;
        let (a, b, c) = (z.int(a), z.int(b), z.int(c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &b, -&(&b - &a));
    }

    #[test]
    fn poly_ring_axioms(
        ca in prop::collection::vec(-9i64..9, 5),
        cb in prop::collection::vec(-9i64..9, 5),
        cc in prop::collection::vec(-9i64..9, 5),
    ) {
        let r = Ring::poly(["x", "y"]).unwrap();
        let (a, b, c) = (small_poly(&r, &ca), small_poly(&r, &cb), small_poly(&r, &cc));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let zero = &a + &-&a;
        match &zero {
            Elem::Poly(p) => prop_assert_eq!(p.len(), 0),
            _ => prop_assert!(false),
        }
        prop_assert_eq!(r.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn det_multiplicative_mod6(x in prop::collection::vec(0u64..6, 16), y in prop::collection::vec(0u64..6, 16)) {
        let r = Ring::Modular(6);
        let (a, b) = (mat_from(&r, 4, &x), mat_from(&r, 4, &y));
        prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
    }

    #[test]
    fn inverse_when_det_is_unit(m in 2u64..30, x in prop::collection::vec(0u64..1000, 9)) {
        let r = Ring::Modular(m);
        let a = mat_from(&r, 3, &x);
        if a.det().is_unit() {
            let inv = a.inverse().unwrap();
            prop_assert!((&inv * &a).is_identity());
            prop_assert!((&a * &inv).is_identity());
        } else {
            prop_assert!(a.inverse().is_err());
        }
    }

    #[test]
    fn suslin_bar_and_length(m in 1usize..=5, modulus in 2u64..40, seed in any::<u64>()) {
        let r = Ring::Modular(modulus);
        let p = common::rand_pair(&mut common::rng(seed), &r, m);
        let s = SuslinMatrix::new(p.clone());
        let q = Mat::scalar(&p.q(), s.size());
        prop_assert_eq!(s.mat() * s.bar().mat(), q.clone());
        prop_assert_eq!(s.bar().mat() * s.mat(), q);
        prop_assert_eq!(s.bar().length(), s.length());
        if m >= 2 {
            prop_assert_eq!(suslin::extract(s.mat()), Some(p));
        }
    }

    #[test]
    fn suslin_is_linear(m in 1usize..=4, seed in any::<u64>(), r in 0u64..11) {
        let ring = Ring::Modular(11);
        let mut g = common::rng(seed);
        let (p, p2) = (common::rand_pair(&mut g, &ring, m), common::rand_pair(&mut g, &ring, m));
        let r = ring.int(r as i64);
        prop_assert_eq!(suslin::sus(&p.try_add(&p2).unwrap()), &suslin::sus(&p) + &suslin::sus(&p2));
        prop_assert_eq!(suslin::sus(&p.scale(&r)), suslin::sus(&p).scale(&r));
    }

    #[test]
    fn xyx_identities(m in 2usize..=4, modulus in 2u64..20, seed in any::<u64>()) {
        let r = Ring::Modular(modulus);
        let mut g = common::rng(seed);
        let x = SuslinMatrix::new(common::rand_pair(&mut g, &r, m));
        let y = SuslinMatrix::new(common::rand_pair(&mut g, &r, m));
        let xyx = suslin::xyx(&x, &y).unwrap();
        prop_assert_eq!(xyx.bar().into_mat(), &(x.bar().mat() * y.bar().mat()) * x.bar().mat());
        prop_assert_eq!(xyx.length(), &(&x.length() * &x.length()) * &y.length());
    }

    #[test]
    fn star_is_anti_automorphism(n in 0usize..=3, seed in any::<u64>()) {
        let r = Ring::Modular(7);
        let mut g = common::rng(seed);
        let size = 1 << n;
        let (a, b) = (common::rand_mat(&mut g, &r, size), common::rand_mat(&mut g, &r, size));
        let st = |m: &Mat| forms::star(m, n).unwrap();
        prop_assert_eq!(st(&(&a * &b)), &st(&b) * &st(&a));
        prop_assert_eq!(st(&st(&a)), a.clone());
        prop_assert_eq!(st(&a), forms::star_blockwise(&a, n).unwrap());
    }

    #[test]
    fn phi_is_linear(n in 1usize..=4, seed in any::<u64>(), c in 0u64..13) {
        let r = Ring::Modular(13);
        let mut g = common::rng(seed);
        let (x, y) = (common::rand_pair(&mut g, &r, n), common::rand_pair(&mut g, &r, n));
        let c = r.int(c as i64);
        prop_assert_eq!(clifford::phi(&x.try_add(&y).unwrap()), clifford::phi(&x).add(&clifford::phi(&y)));
        prop_assert_eq!(clifford::phi(&x.scale(&c)), clifford::phi(&x).scale(&c));
        let px = clifford::phi(&x);
        prop_assert_eq!(px.mul(&px), CliffordElem::scalar(&x.q(), n));
    }

    #[test]
    fn grade_parity(n in 1usize..=3, seed in any::<u64>()) {
        let r = Ring::Modular(5);
        let mut g = common::rng(seed);
        let h = 1 << (n - 1);
        let blocks: Vec<Mat> = (0..4).map(|_| common::rand_mat(&mut g, &r, h)).collect();
        let odd = CliffordElem::new(n, Mat::block_antidiag(&blocks[0], &blocks[1])).unwrap();
        let odd2 = CliffordElem::new(n, Mat::block_antidiag(&blocks[2], &blocks[3])).unwrap();
        let even = CliffordElem::new(n, Mat::block_diag(&blocks[2], &blocks[3])).unwrap();
        let oo = odd.mul(&odd2);
        let oe = odd.mul(&even);
        prop_assert!(clifford::grade_split(&oo).1.mat().is_zero());
        prop_assert!(clifford::grade_split(&oe).0.mat().is_zero());
        let x = oo.add(&oe);
        let (e, o) = clifford::grade_split(&x);
        prop_assert_eq!(e.add(&o), x);
    }

    #[test]
    fn pair_star_pattern(n in 1usize..=4, seed in any::<u64>()) {
        let r = Ring::Modular(7);
        let mut g = common::rng(seed);
        let h = 1 << (n - 1);
        let x = SpinPair::new(n, common::rand_mat(&mut g, &r, h), common::rand_mat(&mut g, &r, h)).unwrap();
        let s1 = forms::star(x.g1(), n - 1).unwrap();
        let s2 = forms::star(x.g2(), n - 1).unwrap();
        let expected = if n % 2 == 1 { (s2, s1) } else { (s1, s2) };
        let xs = x.star();
        prop_assert_eq!((xs.g1().clone(), xs.g2().clone()), expected);
        prop_assert_eq!(xs.to_mat(), forms::star(&x.to_mat(), n).unwrap());
    }

    #[test]
    fn unit_norm_forces_second_block(seed in any::<u64>(), len in 1usize..5) {
        let r = Ring::Modular(7);
        let mut g = common::rng(seed);
        let x = common::rand_epin_product(&mut g, &r, 3, len);
        prop_assert!(spin::in_u0(&x));
        let g1s = forms::star(x.g1(), 2).unwrap();
        prop_assert_eq!(x.g2().clone(), g1s.inverse().unwrap());
    }

    #[test]
    fn norm_is_multiplicative(modulus in prop::sample::select(vec![6u64, 7]), n in prop::sample::select(vec![3usize, 5]), seed in any::<u64>()) {
        let r = Ring::Modular(modulus);
        let mut g = common::rng(seed);
        let u = common::rand_unit(&mut g, &r);
        let a = common::rand_eg_product(&mut g, &r, n, 3).scale(&u);
        let b = common::rand_eg_product(&mut g, &r, n, 3);
        let d = |m: &Mat| spin::norm_d(m, n).unwrap();
        prop_assert_eq!(d(&(&a * &b)), &d(&a) * &d(&b));
    }

    #[test]
    fn action_scales_length(modulus in prop::sample::select(vec![6u64, 7, 9]), seed in any::<u64>()) {
        let r = Ring::Modular(modulus);
        let mut g = common::rng(seed);
        let u = common::rand_unit(&mut g, &r);
        let a = common::rand_eg_product(&mut g, &r, 3, 4).scale(&u);
        let s = SuslinMatrix::new(common::rand_pair(&mut g, &r, 3));
        let gs = spin::spin_action(&a, &s, 3).unwrap();
        prop_assert_eq!(gs.length(), &spin::norm_d(&a, 3).unwrap() * &s.length());
    }

    #[test]
    fn bar_of_action_unit_norm(seed in any::<u64>()) {
        // d(g) = 1: bar(g • S) = (g*)⁻¹ • bar(S)
        let r = Ring::Modular(7);
        let mut g = common::rng(seed);
        let a = common::rand_eg_product(&mut g, &r, 3, 4);
        let s = SuslinMatrix::new(common::rand_pair(&mut g, &r, 3));
        let ginv_star = forms::star(&a, 2).unwrap().inverse().unwrap();
        let lhs = spin::spin_action(&a, &s, 3).unwrap().bar();
        let rhs = spin::spin_action(&ginv_star, &s.bar(), 3).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn spin4_transitive_on_unit_length(seed in any::<u64>()) {
        let r = Ring::Modular(5);
        let s = common::rand_sl2(&mut common::rng(seed), &r);
        let x = SpinPair::new(2, s.clone(), Mat::identity(&r, 2)).unwrap();
        prop_assert!(spin::in_spin(&x));
        let moved = &(x.g1() * &Mat::identity(&r, 2)) * &x.g2().inverse().unwrap();
        prop_assert_eq!(moved, s);
    }

    #[test]
    fn pi_of_epin_generator(n in 2usize..=5, kind in prop::sample::select(vec![EpinKind::EE, EpinKind::FF]), seed in any::<u64>()) {
        let r = Ring::Modular(7);
        let mut g = common::rng(seed);
        let x = common::rand_epin_product(&mut g, &r, n, 1);
        let p = epin::pi(&x).unwrap();
        prop_assert!(p.preserves_q());
        prop_assert!(p.mat().det().is_one());
        let a = common::rand_elem(&mut g, &r);
        let y = SpinPair::from_clifford(&epin::epin_gen(kind, 1, n, &a, n).unwrap()).unwrap();
        prop_assert!(spin::in_spin(&y));
        prop_assert!(epin::pi(&y).unwrap().preserves_q());
    }

    #[test]
    fn oe_preserves_q_mod(n in 1usize..=4, seed in any::<u64>()) {
        use rand::Rng as _;
        let r = Ring::Modular(6);
        let mut g = common::rng(seed);
        let i = g.gen_range(1..=2 * n);
        let j = (i + g.gen_range(1..2 * n) - 1) % (2 * n) + 1;
        let a = common::rand_elem(&mut g, &r);
        prop_assert!(epin::oe(i, j, &a, n).unwrap().preserves_q());
    }

    #[test]
    fn swap_stays_in_spin(seed in any::<u64>()) {
        let r = Ring::Modular(7);
        let x = common::rand_epin_product(&mut common::rng(seed), &r, 3, 3);
        prop_assert!(spin::in_spin(&x.swap()));
    }
}

#[test]
fn extract_roundtrip_symbolic() {
    for m in 2..=4 {
        let r = common::ab_ring(m);
        let p = SuslinPair::symbolic(&r, "a", "b", m).unwrap();
        assert_eq!(suslin::extract(&suslin::sus(&p)), Some(p));
    }
}
