//! `U⁰`, `Spin` and the odd-dimensional group `SG`.
//!
//! An even Clifford element is a pair `(g1, g2)` standing for the block
//! diagonal matrix. For odd `n` the projection `χ : (g, (g*)⁻¹) ↦ g`
//! identifies `Spin_{2n}` with `SG_{n-1} = { g ∈ G | l(gg*) = 1 }`, where
//! `G` collects the invertible `g` with `g S g*` Suslin for every Suslin `S`.

use crate::clifford::{self, CliffordElem, Generator};
use crate::forms;
use crate::mat::Mat;
use crate::ring::{Elem, Ring};
use crate::suslin::{self, SuslinMatrix, SuslinPair};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpinPair {
    n: usize,
    g1: Mat,
    g2: Mat,
}

impl SpinPair {
    pub fn new(n: usize, g1: Mat, g2: Mat) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension {
                n,
                reason: "pairs need n >= 1",
            });
        }
        let expected = 1usize << (n - 1);
        for g in [&g1, &g2] {
            if g.size() != expected {
                return Err(Error::SizeMismatch {
                    expected,
                    found: g.size(),
                });
            }
        }
        if g1.ring() != g2.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(SpinPair { n, g1, g2 })
    }

    pub fn identity(ring: &Ring, n: usize) -> Result<Self> {
        let half = 1usize << n.saturating_sub(1);
        SpinPair::new(n, Mat::identity(ring, half), Mat::identity(ring, half))
    }

    /// The even part of a Clifford element, if it has no odd part.
    pub fn from_clifford(x: &CliffordElem) -> Option<Self> {
        if !x.is_even() {
            return None;
        }
        let [a, _, _, d] = x.mat().quadrants();
        Some(SpinPair { n: x.n(), g1: a, g2: d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g1(&self) -> &Mat {
        &self.g1
    }

    pub fn g2(&self) -> &Mat {
        &self.g2
    }

    pub fn ring(&self) -> &Ring {
        self.g1.ring()
    }

    pub fn to_mat(&self) -> Mat {
        Mat::block_diag(&self.g1, &self.g2)
    }

    pub fn to_clifford(&self) -> CliffordElem {
        CliffordElem::new(self.n, self.to_mat()).expect("sizes checked")
    }

    pub fn mul(&self, other: &SpinPair) -> SpinPair {
        assert_eq!(self.n, other.n);
        SpinPair {
            n: self.n,
            g1: &self.g1 * &other.g1,
            g2: &self.g2 * &other.g2,
        }
    }

    pub fn inverse(&self) -> Result<SpinPair> {
        Ok(SpinPair {
            n: self.n,
            g1: self.g1.inverse()?,
            g2: self.g2.inverse()?,
        })
    }

    /// `(g1, g2)* = (g2*, g1*)` for odd `n` and `(g1*, g2*)` for even `n`,
    /// the inner star taken at level `n - 1`.
    pub fn star(&self) -> SpinPair {
        let s1 = star_half(&self.g1, self.n);
        let s2 = star_half(&self.g2, self.n);
        let (g1, g2) = if self.n % 2 == 1 { (s2, s1) } else { (s1, s2) };
        SpinPair { n: self.n, g1, g2 }
    }

    /// `u·x·u` with `u = antidiag(I, I)`.
    pub fn swap(&self) -> SpinPair {
        SpinPair {
            n: self.n,
            g1: self.g2.clone(),
            g2: self.g1.clone(),
        }
    }

    /// The pair `y` with `φ(y) = x φ(z) x*`, when `x* = x⁻¹`.
    pub fn conjugate_pair(&self, z: &SuslinPair) -> Option<SuslinPair> {
        let xs = self.star();
        let s = SuslinMatrix::new(z.clone());
        let top = &(&self.g1 * s.mat()) * &xs.g2;
        let bottom = &(&self.g2 * s.bar().mat()) * &xs.g1;
        clifford::phi_preimage(&Mat::block_antidiag(&top, &bottom), self.n)
    }
}

fn star_half(g: &Mat, n: usize) -> Mat {
    forms::star(g, n - 1).expect("pair blocks have size 2^(n-1)")
}

/// `x x* = 1`.
pub fn in_u0(x: &SpinPair) -> bool {
    let p = x.mul(&x.star());
    p.g1.is_identity() && p.g2.is_identity()
}

/// `x ∈ U⁰` and `x φ(z) x⁻¹` lies in the image of `φ` for every basis
/// generator `z`.
pub fn in_spin(x: &SpinPair) -> bool {
    if !in_u0(x) {
        return false;
    }
    Generator::all(x.n).all(|g| {
        let z = g.pair(x.ring(), x.n).expect("index in range");
        x.conjugate_pair(&z).is_some()
    })
}

fn require_odd(n: usize) -> Result<()> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "defined for odd n >= 3",
        });
    }
    Ok(())
}

fn check_half(g: &Mat, n: usize) -> Result<()> {
    let expected = 1usize << (n - 1);
    if g.size() != expected {
        return Err(Error::SizeMismatch {
            expected,
            found: g.size(),
        });
    }
    Ok(())
}

/// `g S g*` without checking the result.
fn act_raw(g: &Mat, s: &Mat, n: usize) -> Mat {
    &(g * s) * &star_half(g, n)
}

/// `g • S = g S g*` for odd `n`.
pub fn spin_action(g: &Mat, s: &SuslinMatrix, n: usize) -> Result<SuslinMatrix> {
    require_odd(n)?;
    check_half(g, n)?;
    if s.m() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: s.m(),
        });
    }
    SuslinMatrix::from_mat(&act_raw(g, s.mat(), n)).ok_or(Error::NotInGroup("g not in G"))
}

/// `g` invertible with `g S g*` Suslin for the basis matrices `E_i`, `F_i`.
pub fn in_g(g: &Mat, n: usize) -> Result<bool> {
    require_odd(n)?;
    check_half(g, n)?;
    if !g.det().is_unit() {
        return Ok(false);
    }
    let ring = g.ring();
    for i in 1..=n {
        for s in [suslin::gen_e(ring, i, n)?, suslin::gen_f(ring, i, n)?] {
            if suslin::extract(&act_raw(g, s.mat(), n)).is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `d(g) = l(g g*)`.
pub fn norm_d(g: &Mat, n: usize) -> Result<Elem> {
    require_odd(n)?;
    check_half(g, n)?;
    let gg = g * &star_half(g, n);
    suslin::extract(&gg)
        .map(|p| p.q())
        .ok_or(Error::NotInGroup("g g* is not a Suslin matrix"))
}

pub fn in_sg(g: &Mat, n: usize) -> Result<bool> {
    Ok(in_g(g, n)? && norm_d(g, n)?.is_one())
}

/// `χ⁻¹(g) = (g, (g*)⁻¹)`.
pub fn chi_inverse(g: &Mat, n: usize) -> Result<SpinPair> {
    if !in_sg(g, n)? {
        return Err(Error::NotInGroup("g not in SG"));
    }
    let g2 = star_half(g, n).inverse()?;
    SpinPair::new(n, g.clone(), g2)
}

/// `(g1, g2) ∈ SL₂ × SL₂`, which is `Spin₄`.
pub fn spin4_check(g1: &Mat, g2: &Mat) -> Result<bool> {
    for g in [g1, g2] {
        if g.size() != 2 {
            return Err(Error::SizeMismatch {
                expected: 2,
                found: g.size(),
            });
        }
    }
    Ok(g1.det().is_one() && g2.det().is_one())
}

/// `χ⁻¹(M)` for `M ∈ SL₄`, which is `Spin₆`.
pub fn spin6_from_sl4(m: &Mat) -> Result<SpinPair> {
    if m.size() != 4 {
        return Err(Error::SizeMismatch {
            expected: 4,
            found: m.size(),
        });
    }
    if !m.det().is_one() {
        return Err(Error::NotInGroup("det M is not 1"));
    }
    chi_inverse(m, 3)
}

/// `AA*DD* + BB*CC* - AC*DB* - BD*CA*` read off the 2×2 blocks of a 4×4
/// matrix; equals `l(MM*)`.
pub fn mm_star_length_blocks(m: &Mat) -> Result<Elem> {
    if m.size() != 4 {
        return Err(Error::SizeMismatch {
            expected: 4,
            found: m.size(),
        });
    }
    let [a, b, c, d] = m.quadrants();
    let st = |x: &Mat| forms::star(x, 1).expect("2x2");
    let (as_, bs, cs, ds) = (st(&a), st(&b), st(&c), st(&d));
    let prod = |xs: [&Mat; 4]| &(&(xs[0] * xs[1]) * xs[2]) * xs[3];
    let total = &(&(&prod([&a, &as_, &d, &ds]) + &prod([&b, &bs, &c, &cs])) - &prod([&a, &cs, &d, &bs]))
        - &prod([&b, &ds, &c, &as_]);
    total
        .as_scalar()
        .ok_or(Error::Invariant("block expression is not scalar"))
}

/// Whether `M = M*` for a 4×4 matrix. Requires 2 to be regular, where this
/// is equivalent to `M` being a Suslin matrix; disagreement is an error.
pub fn jordan_check(m: &Mat) -> Result<bool> {
    if m.size() != 4 {
        return Err(Error::SizeMismatch {
            expected: 4,
            found: m.size(),
        });
    }
    if !m.ring().two_is_regular() {
        return Err(Error::Invalid(alloc::format!("2 is a zero divisor in {}", m.ring())));
    }
    let self_adjoint = forms::star(m, 2)? == *m;
    if self_adjoint != suslin::extract(m).is_some() {
        return Err(Error::Invariant("self-adjointness and Suslin shape disagree"));
    }
    Ok(self_adjoint)
}
