#![allow(dead_code)]

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use suslin_core::clifford::Generator;
use suslin_core::epin::{self, EpinKind};
use suslin_core::spin::SpinPair;
use suslin_core::{Elem, Mat, Ring, SuslinPair};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Z[a1, b1, ..., am, bm]`.
pub fn ab_ring(m: usize) -> Ring {
    let names: Vec<_> = (1..=m).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    Ring::poly(names).unwrap()
}

/// A matrix of distinct indeterminates `{prefix}{k}`.
pub fn generic(ring: &Ring, size: usize, prefix: &str) -> Mat {
    Mat::from_fn(ring, size, |i, j| {
        ring.var(&format!("{prefix}{}", i * size + j)).unwrap()
    })
}

pub fn generic_names(size: usize, prefix: &str) -> Vec<String> {
    (0..size * size).map(|k| format!("{prefix}{k}")).collect()
}

pub fn modulus(ring: &Ring) -> u64 {
    match ring {
        Ring::Modular(m) => *m,
        _ => panic!("modular ring expected"),
    }
}

pub fn rand_elem(rng: &mut ChaCha8Rng, ring: &Ring) -> Elem {
    ring.int(rng.gen_range(0..modulus(ring)) as i64)
}

pub fn rand_unit(rng: &mut ChaCha8Rng, ring: &Ring) -> Elem {
    loop {
        let e = rand_elem(rng, ring);
        if e.is_unit() {
            return e;
        }
    }
}

pub fn rand_mat(rng: &mut ChaCha8Rng, ring: &Ring, size: usize) -> Mat {
    Mat::from_fn(ring, size, |_, _| rand_elem(rng, ring))
}

pub fn rand_pair(rng: &mut ChaCha8Rng, ring: &Ring, m: usize) -> SuslinPair {
    let v = (0..m).map(|_| rand_elem(rng, ring)).collect();
    let w = (0..m).map(|_| rand_elem(rng, ring)).collect();
    SuslinPair::new(v, w).unwrap()
}

pub fn rand_sl2(rng: &mut ChaCha8Rng, ring: &Ring) -> Mat {
    loop {
        let g = rand_mat(rng, ring, 2);
        if g.det().is_one() {
            return g;
        }
    }
}

fn rand_distinct(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let i = rng.gen_range(1..=n);
    let mut j = rng.gen_range(1..n);
    if j >= i {
        j += 1;
    }
    (i, j)
}

/// A product of `len` generators `1 + aE_iE_j`, `1 + aF_iF_j` of `EG_{n-1}`.
pub fn rand_eg_product(rng: &mut ChaCha8Rng, ring: &Ring, n: usize, len: usize) -> Mat {
    let mut g = Mat::identity(ring, 1 << (n - 1));
    for _ in 0..len {
        let (i, j) = rand_distinct(rng, n);
        let letters = if rng.gen_bool(0.5) {
            [Generator::e(i), Generator::e(j)]
        } else {
            [Generator::f(i), Generator::f(j)]
        };
        let a = rand_elem(rng, ring);
        g = &g * &epin::eg_element(&a, &letters, n).unwrap();
    }
    g
}

/// A product of `len` generators `1 + a e_ie_j`, `1 + a f_if_j` of `Epin_{2n}`.
pub fn rand_epin_product(rng: &mut ChaCha8Rng, ring: &Ring, n: usize, len: usize) -> SpinPair {
    let mut x = SpinPair::identity(ring, n).unwrap();
    for _ in 0..len {
        let (i, j) = rand_distinct(rng, n);
        let kind = if rng.gen_bool(0.5) { EpinKind::EE } else { EpinKind::FF };
        let a = rand_elem(rng, ring);
        let g = epin::epin_gen(kind, i, j, &a, n).unwrap();
        x = x.mul(&SpinPair::from_clifford(&g).unwrap());
    }
    x
}
