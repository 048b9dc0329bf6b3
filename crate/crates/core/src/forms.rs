//! The forms `J_n`, the standard involution `M* = J Mᵀ Jᵀ` and the basic
//! automorphism `M ↦ λMλ`.

use crate::mat::Mat;
use crate::ring::Ring;
use crate::{Error, Result};

/// `J_n ∈ M_{2^n}(R)`:
/// `J_0 = (1)`, `J_n = diag(J_{n-1}, -J_{n-1})` for even `n` and
/// `[[0, J_{n-1}], [-J_{n-1}, 0]]` for odd `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormJ {
    level: usize,
    mat: Mat,
}

impl FormJ {
    pub fn new(ring: &Ring, level: usize) -> FormJ {
        let mut mat = Mat::identity(ring, 1);
        for k in 1..=level {
            let neg = -&mat;
            mat = if k % 2 == 0 {
                Mat::block_diag(&mat, &neg)
            } else {
                Mat::block_antidiag(&mat, &neg)
            };
        }
        FormJ { level, mat }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    /// `(-1)^{n(n+1)/2}`: `Jᵀ = J⁻¹ = sign·J`.
    pub fn transpose_sign(&self) -> i64 {
        let n = self.level;
        if (n * (n + 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn form_j(ring: &Ring, n: usize) -> Mat {
    FormJ::new(ring, n).mat
}

/// `n` such that `size = 2^n`.
pub fn level_of(size: usize) -> Option<usize> {
    size.is_power_of_two().then(|| size.trailing_zeros() as usize)
}

fn check_level(m: &Mat, n: usize) -> Result<()> {
    let expected = 1usize << n;
    if m.size() != expected {
        return Err(Error::SizeMismatch {
            expected,
            found: m.size(),
        });
    }
    Ok(())
}

/// `M* = J_n Mᵀ J_nᵀ` for `M` of size `2^n`.
pub fn star(m: &Mat, n: usize) -> Result<Mat> {
    check_level(m, n)?;
    let j = form_j(m.ring(), n);
    Ok(&(&j * &m.transpose()) * &j.transpose())
}

/// The involution evaluated blockwise:
/// `[[A, B], [C, D]]* = [[D*, -B*], [-C*, A*]]` for odd `n` and
/// `[[A*, -C*], [-B*, D*]]` for even `n`, identity at `n = 0`.
pub fn star_blockwise(m: &Mat, n: usize) -> Result<Mat> {
    check_level(m, n)?;
    Ok(star_rec(m, n))
}

fn star_rec(m: &Mat, n: usize) -> Mat {
    if n == 0 {
        return m.clone();
    }
    let [a, b, c, d] = m.quadrants();
    let (a, b, c, d) = (
        star_rec(&a, n - 1),
        star_rec(&b, n - 1),
        star_rec(&c, n - 1),
        star_rec(&d, n - 1),
    );
    if n % 2 == 1 {
        Mat::from_quadrants(&d, &-&b, &-&c, &a)
    } else {
        Mat::from_quadrants(&a, &-&c, &-&b, &d)
    }
}

/// `λ = diag(I, -I)` of size `2^n`, `n >= 1`.
pub fn lambda_mat(ring: &Ring, n: usize) -> Result<Mat> {
    if n == 0 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "λ needs a 2×2 block structure",
        });
    }
    let h = 1usize << (n - 1);
    let i = Mat::identity(ring, h);
    Ok(Mat::block_diag(&i, &-&i))
}

/// `λMλ`: fixes the even (block-diagonal) part and negates the odd part.
pub fn basic_automorphism(m: &Mat, n: usize) -> Result<Mat> {
    check_level(m, n)?;
    let l = lambda_mat(m.ring(), n)?;
    Ok(&(&l * m) * &l)
}
