//! The Suslin construction.
//!
//! A pair `(v, w)` of length-`m` vectors gives a `2^{m-1} × 2^{m-1}` matrix
//!
//! ```text
//! S(v, w) = [[ a0·I,             S(v1, w1) ],
//!            [ -S(w1, v1)ᵀ,      b0·I      ]]      v = (a0, v1), w = (b0, w1)
//! ```
//!
//! with `S((a0), (b0)) = (a0)`. Its conjugate `S̄ = S(w, v)ᵀ` satisfies
//! `S·S̄ = S̄·S = (v·wᵀ)·I`.

use alloc::vec::Vec;

use crate::mat::Mat;
use crate::ring::{dot, Elem, Ring};
use crate::{Error, Result};

/// A point `(v, w)` of the hyperbolic space `H(R^m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuslinPair {
    v: Vec<Elem>,
    w: Vec<Elem>,
}

impl SuslinPair {
    pub fn new(v: Vec<Elem>, w: Vec<Elem>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::Invalid("Suslin vectors must be nonempty".into()));
        }
        if v.len() != w.len() {
            return Err(Error::SizeMismatch {
                expected: v.len(),
                found: w.len(),
            });
        }
        let ring = v[0].ring();
        if !v.iter().chain(&w).all(|e| e.in_ring(&ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(SuslinPair { v, w })
    }

    pub fn zero(ring: &Ring, m: usize) -> Self {
        SuslinPair {
            v: alloc::vec![ring.zero(); m],
            w: alloc::vec![ring.zero(); m],
        }
    }

    /// `(e_i, 0)`, `1 <= i <= m`.
    pub fn basis_e(ring: &Ring, i: usize, m: usize) -> Result<Self> {
        check_index(i, m)?;
        let mut p = SuslinPair::zero(ring, m);
        p.v[i - 1] = ring.one();
        Ok(p)
    }

    /// `(0, f_i)`, `1 <= i <= m`.
    pub fn basis_f(ring: &Ring, i: usize, m: usize) -> Result<Self> {
        check_index(i, m)?;
        let mut p = SuslinPair::zero(ring, m);
        p.w[i - 1] = ring.one();
        Ok(p)
    }

    /// Pair from a coordinate vector `(v, w)` of length `2m`.
    pub fn from_coords(coords: &[Elem]) -> Result<Self> {
        if !coords.len().is_multiple_of(2) {
            return Err(Error::Invalid("coordinate vector has odd length".into()));
        }
        let m = coords.len() / 2;
        SuslinPair::new(coords[..m].to_vec(), coords[m..].to_vec())
    }

    /// Symbolic pair `v = (a1..am)`, `w = (b1..bm)` in `ring`, which must
    /// contain those variables.
    pub fn symbolic(ring: &Ring, a: &str, b: &str, m: usize) -> Result<Self> {
        let v = (1..=m)
            .map(|i| ring.var(&alloc::format!("{a}{i}")))
            .collect::<Result<_>>()?;
        let w = (1..=m)
            .map(|i| ring.var(&alloc::format!("{b}{i}")))
            .collect::<Result<_>>()?;
        SuslinPair::new(v, w)
    }

    pub fn m(&self) -> usize {
        self.v.len()
    }

    pub fn v(&self) -> &[Elem] {
        &self.v
    }

    pub fn w(&self) -> &[Elem] {
        &self.w
    }

    pub fn ring(&self) -> Ring {
        self.v[0].ring()
    }

    /// `(v, w)` concatenated.
    pub fn coords(&self) -> Vec<Elem> {
        self.v.iter().chain(&self.w).cloned().collect()
    }

    /// `q(v, w) = v·wᵀ`.
    pub fn q(&self) -> Elem {
        dot(&self.v, &self.w)
    }

    /// Coordinates of the conjugate: `((b0, -v1), (a0, -w1))`.
    pub fn conjugate(&self) -> SuslinPair {
        let mut v = Vec::with_capacity(self.m());
        let mut w = Vec::with_capacity(self.m());
        v.push(self.w[0].clone());
        w.push(self.v[0].clone());
        v.extend(self.v[1..].iter().map(|e| -e));
        w.extend(self.w[1..].iter().map(|e| -e));
        SuslinPair { v, w }
    }

    pub fn swap(&self) -> SuslinPair {
        SuslinPair {
            v: self.w.clone(),
            w: self.v.clone(),
        }
    }

    pub fn try_add(&self, other: &SuslinPair) -> Result<SuslinPair> {
        if self.m() != other.m() {
            return Err(Error::SizeMismatch {
                expected: self.m(),
                found: other.m(),
            });
        }
        let add = |a: &[Elem], b: &[Elem]| a.iter().zip(b).map(|(x, y)| x.try_add(y)).collect::<Result<Vec<_>>>();
        Ok(SuslinPair {
            v: add(&self.v, &other.v)?,
            w: add(&self.w, &other.w)?,
        })
    }

    pub fn scale(&self, r: &Elem) -> SuslinPair {
        SuslinPair {
            v: self.v.iter().map(|e| e * r).collect(),
            w: self.w.iter().map(|e| e * r).collect(),
        }
    }

    pub fn neg(&self) -> SuslinPair {
        SuslinPair {
            v: self.v.iter().map(|e| -e).collect(),
            w: self.w.iter().map(|e| -e).collect(),
        }
    }
}

fn check_index(i: usize, m: usize) -> Result<()> {
    if i == 0 || i > m {
        Err(Error::IndexOutOfRange { index: i, bound: m })
    } else {
        Ok(())
    }
}

fn build(v: &[Elem], w: &[Elem]) -> Mat {
    let ring = v[0].ring();
    if v.len() == 1 {
        return Mat::scalar(&v[0], 1);
    }
    let top_right = build(&v[1..], &w[1..]);
    let bottom_left = -&build(&w[1..], &v[1..]).transpose();
    let h = top_right.size();
    debug_assert!(top_right.ring() == &ring);
    Mat::from_quadrants(&Mat::scalar(&v[0], h), &top_right, &bottom_left, &Mat::scalar(&w[0], h))
}

/// A Suslin matrix together with the pair it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuslinMatrix {
    pair: SuslinPair,
    mat: Mat,
}

impl SuslinMatrix {
    pub fn new(pair: SuslinPair) -> Self {
        let mat = build(&pair.v, &pair.w);
        SuslinMatrix { pair, mat }
    }

    /// Recognises `mat` as a Suslin matrix; `None` if it is not one.
    pub fn from_mat(mat: &Mat) -> Option<Self> {
        extract(mat).map(|pair| SuslinMatrix { pair, mat: mat.clone() })
    }

    pub fn pair(&self) -> &SuslinPair {
        &self.pair
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn into_mat(self) -> Mat {
        self.mat
    }

    pub fn m(&self) -> usize {
        self.pair.m()
    }

    pub fn size(&self) -> usize {
        self.mat.size()
    }

    /// `S̄`, built from the conjugate coordinates.
    pub fn bar(&self) -> SuslinMatrix {
        SuslinMatrix::new(self.pair.conjugate())
    }

    /// `l(S) = v·wᵀ`.
    pub fn length(&self) -> Elem {
        self.pair.q()
    }

    /// [`length`](Self::length), after checking `S·S̄ = l(S)·I`.
    pub fn checked_length(&self) -> Result<Elem> {
        let q = self.length();
        if &self.mat * self.bar().mat() != Mat::scalar(&q, self.size()) {
            return Err(Error::Invariant("S·S̄ = l(S)·I"));
        }
        Ok(q)
    }
}

/// `S(v, w)` as a bare matrix.
pub fn sus(pair: &SuslinPair) -> Mat {
    build(&pair.v, &pair.w)
}

/// Recursive recognition of the Suslin shape.
///
/// The size must be `2^{m-1}` with `m >= 2`; a `1×1` matrix does not
/// determine its pair and is rejected.
pub fn extract(mat: &Mat) -> Option<SuslinPair> {
    let k = mat.size();
    if k < 2 || !k.is_power_of_two() {
        return None;
    }
    if k == 2 {
        let v = alloc::vec![mat.get(0, 0).clone(), mat.get(0, 1).clone()];
        let w = alloc::vec![mat.get(1, 1).clone(), -mat.get(1, 0)];
        return Some(SuslinPair { v, w });
    }
    let [a, b, c, d] = mat.quadrants();
    let a0 = a.as_scalar()?;
    let b0 = d.as_scalar()?;
    let inner = extract(&b)?;
    if c != -&build(&inner.w, &inner.v).transpose() {
        return None;
    }
    let mut v = alloc::vec![a0];
    let mut w = alloc::vec![b0];
    v.extend(inner.v);
    w.extend(inner.w);
    Some(SuslinPair { v, w })
}

/// `E_i = S(e_i, 0)`.
pub fn gen_e(ring: &Ring, i: usize, m: usize) -> Result<SuslinMatrix> {
    Ok(SuslinMatrix::new(SuslinPair::basis_e(ring, i, m)?))
}

/// `F_i = S(0, f_i)`.
pub fn gen_f(ring: &Ring, i: usize, m: usize) -> Result<SuslinMatrix> {
    Ok(SuslinMatrix::new(SuslinPair::basis_f(ring, i, m)?))
}

/// `XYX`, which is again a Suslin matrix with `(XYX)‾ = X̄ Ȳ X̄`.
///
/// Both facts are checked; a failure is reported as an invariant violation.
pub fn xyx(x: &SuslinMatrix, y: &SuslinMatrix) -> Result<SuslinMatrix> {
    if x.size() != y.size() {
        return Err(Error::SizeMismatch {
            expected: x.size(),
            found: y.size(),
        });
    }
    if x.m() < 2 {
        return Err(Error::UnsupportedDimension {
            n: x.m(),
            reason: "a 1×1 matrix does not determine its Suslin pair",
        });
    }
    let prod = &(x.mat() * y.mat()) * x.mat();
    let s = SuslinMatrix::from_mat(&prod).ok_or(Error::Invariant("XYX is a Suslin matrix"))?;
    let (xb, yb) = (x.bar(), y.bar());
    if *s.bar().mat() != &(xb.mat() * yb.mat()) * xb.mat() {
        return Err(Error::Invariant("(XYX)‾ = X̄ Ȳ X̄"));
    }
    Ok(s)
}
