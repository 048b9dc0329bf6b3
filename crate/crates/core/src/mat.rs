//! Dense square matrices over a [`Ring`].
//!
//! Determinants use Berkowitz's division-free algorithm, so they are exact
//! over rings with zero divisors. Inverses come from Cayley-Hamilton and are
//! available exactly when the determinant is a unit.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::ring::{Elem, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    ring: Ring,
    size: usize,
    entries: Vec<Elem>,
}

impl Mat {
    pub fn zeros(ring: &Ring, size: usize) -> Mat {
        Mat {
            ring: ring.clone(),
            size,
            entries: alloc::vec![ring.zero(); size * size],
        }
    }

    pub fn identity(ring: &Ring, size: usize) -> Mat {
        Mat::scalar(&ring.one(), size)
    }

    pub fn scalar(c: &Elem, size: usize) -> Mat {
        let ring = c.ring();
        let mut m = Mat::zeros(&ring, size);
        for i in 0..size {
            m.entries[i * size + i] = c.clone();
        }
        m
    }

    pub fn from_fn(ring: &Ring, size: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Mat {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let e = f(i, j);
                debug_assert!(e.in_ring(ring));
                entries.push(e);
            }
        }
        Mat {
            ring: ring.clone(),
            size,
            entries,
        }
    }

    /// Builds a matrix from rows, checking shape and that every entry lives
    /// in `ring`.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Mat> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Invalid("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::SizeMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            for e in row {
                if !e.in_ring(ring) {
                    return Err(Error::RingMismatch);
                }
                entries.push(e);
            }
        }
        Ok(Mat {
            ring: ring.clone(),
            size,
            entries,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints<const N: usize>(ring: &Ring, rows: [[i64; N]; N]) -> Mat {
        Mat::from_fn(ring, N, |i, j| ring.int(rows[i][j]))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Elem) {
        assert!(e.in_ring(&self.ring), "ring mismatch");
        self.entries[i * self.size + j] = e;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.entries.chunks(self.size)
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Elem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(&self.ring, self.size)
    }

    /// `Some(c)` if the matrix is `c·I`.
    pub fn as_scalar(&self) -> Option<Elem> {
        let c = self.get(0, 0);
        for i in 0..self.size {
            for j in 0..self.size {
                let e = self.get(i, j);
                let ok = if i == j { e == c } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c.clone())
    }

    fn conform(&self, other: &Mat) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                expected: self.size,
                found: other.size,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.conform(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.conform(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.conform(other)?;
        let n = self.size;
        let mut out = Mat::zeros(&self.ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Elem) -> Mat {
        assert!(c.in_ring(&self.ring), "ring mismatch");
        Mat {
            ring: self.ring.clone(),
            size: self.size,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.ring, self.size, |i, j| self.get(j, i).clone())
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(&self.ring, self.size);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The `k×k` block whose top-left corner is `(row, col)`.
    pub fn block(&self, row: usize, col: usize, k: usize) -> Mat {
        assert!(row + k <= self.size && col + k <= self.size);
        Mat::from_fn(&self.ring, k, |i, j| self.get(row + i, col + j).clone())
    }

    /// Splits an even-sized matrix into its four half-size blocks
    /// `[a, b, c, d]` for `[[a, b], [c, d]]`.
    pub fn quadrants(&self) -> [Mat; 4] {
        assert!(self.size.is_multiple_of(2), "odd size has no quadrants");
        let h = self.size / 2;
        [
            self.block(0, 0, h),
            self.block(0, h, h),
            self.block(h, 0, h),
            self.block(h, h, h),
        ]
    }

    /// `[[a, b], [c, d]]` from four equally sized blocks.
    pub fn from_quadrants(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
        let h = a.size;
        assert!(b.size == h && c.size == h && d.size == h);
        assert!(
            a.ring == b.ring && a.ring == c.ring && a.ring == d.ring,
            "ring mismatch"
        );
        Mat::from_fn(&a.ring, 2 * h, |i, j| {
            let src = match (i < h, j < h) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            src.get(i % h, j % h).clone()
        })
    }

    pub fn block_diag(a: &Mat, d: &Mat) -> Mat {
        let z = Mat::zeros(&a.ring, a.size);
        Mat::from_quadrants(a, &z, &z, d)
    }

    pub fn block_antidiag(b: &Mat, c: &Mat) -> Mat {
        let z = Mat::zeros(&b.ring, b.size);
        Mat::from_quadrants(&z, b, c, &z)
    }

    /// Maps every entry into `target` (see [`Elem::lift`]).
    pub fn lift(&self, target: &Ring) -> Result<Mat> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.lift(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat {
            ring: target.clone(),
            size: self.size,
            entries,
        })
    }

    /// Coefficients of `det(λI - M)`, leading coefficient first.
    ///
    /// Berkowitz: with `M_k` the leading `k×k` principal block, row `r`,
    /// column `c` and corner `a` bordering it, the coefficient vector of
    /// `M_{k+1}` is `T·p_k` where `T` is lower-triangular Toeplitz with first
    /// column `(1, -a, -r c, -r M_k c, ..., -r M_k^{k-1} c)`.
    pub fn charpoly(&self) -> Vec<Elem> {
        let ring = &self.ring;
        let mut coeffs = alloc::vec![ring.one()];
        for k in 0..self.size {
            let a = self.get(k, k);
            // toeplitz column: 1, -a, -r c, -r M c, ...
            let mut col = Vec::with_capacity(k + 2);
            col.push(ring.one());
            col.push(-a);
            let mut v: Vec<Elem> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for step in 0..k {
                let mut rc = ring.zero();
                for (j, vj) in v.iter().enumerate() {
                    rc.add_mul_assign(self.get(k, j), vj);
                }
                col.push(-rc);
                if step + 1 < k {
                    v = (0..k)
                        .map(|i| {
                            let mut s = ring.zero();
                            for (j, vj) in v.iter().enumerate() {
                                s.add_mul_assign(self.get(i, j), vj);
                            }
                            s
                        })
                        .collect();
                }
            }
            let next: Vec<Elem> = (0..k + 2)
                .map(|i| {
                    let mut s = ring.zero();
                    for (j, c) in coeffs.iter().enumerate().take(i + 1) {
                        s.add_mul_assign(&col[i - j], c);
                    }
                    s
                })
                .collect();
            coeffs = next;
        }
        coeffs
    }

    pub fn det(&self) -> Elem {
        let c = self.charpoly();
        let last = c[self.size].clone();
        if self.size.is_multiple_of(2) {
            last
        } else {
            -last
        }
    }

    /// Adjugate via Cayley-Hamilton:
    /// `adj(M) = (-1)^{n-1} (M^{n-1} + c_1 M^{n-2} + ... + c_{n-1} I)`.
    pub fn adjugate(&self) -> Mat {
        let n = self.size;
        let c = self.charpoly();
        let mut acc = Mat::identity(&self.ring, n);
        for ck in c.iter().take(n).skip(1) {
            acc = &(&acc * self) + &Mat::scalar(ck, n);
        }
        if n.is_multiple_of(2) {
            -&acc
        } else {
            acc
        }
    }

    pub fn inverse(&self) -> Result<Mat> {
        let det_inv = self.det().invert().map_err(|_| Error::NotInvertible)?;
        Ok(self.adjugate().scale(&det_inv))
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

macro_rules! mat_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Mat> for &Mat {
            type Output = Mat;

            fn $method(self, rhs: &Mat) -> Mat {
                match self.$try(rhs) {
                    Ok(m) => m,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

mat_binop!(Add, add, try_add);
mat_binop!(Sub, sub, try_sub);
mat_binop!(Mul, mul, try_mul);

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        Mat {
            ring: self.ring.clone(),
            size: self.size,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Leibniz expansion over all permutations; independent of Berkowitz.
    fn leibniz(m: &Mat) -> Elem {
        fn rec(m: &Mat, row: usize, used: &mut Vec<bool>, sign: bool, acc: Elem, out: &mut Elem) {
            let n = m.size();
            if row == n {
                if sign {
                    *out -= &acc;
                } else {
                    *out += &acc;
                }
                return;
            }
            for col in 0..n {
                if used[col] {
                    continue;
                }
                // inversions contributed by placing `col` at `row`
                let inv = (col + 1..n).filter(|&c| used[c]).count();
                used[col] = true;
                rec(m, row + 1, used, sign ^ (inv % 2 == 1), &acc * m.get(row, col), out);
                used[col] = false;
            }
        }
        let mut out = m.ring().zero();
        rec(m, 0, &mut vec![false; m.size()], false, m.ring().one(), &mut out);
        out
    }

    fn generic(size: usize) -> Mat {
        let names: Vec<_> = (0..size * size)
            .map(|k| alloc::format!("m{}_{}", k / size, k % size))
            .collect();
        let ring = Ring::poly(&names).unwrap();
        Mat::from_fn(&ring, size, |i, j| ring.var(&names[i * size + j]).unwrap())
    }

    #[test]
    fn berkowitz_matches_leibniz_symbolically() {
        for size in 1..=5 {
            let m = generic(size);
            assert_eq!(m.det(), leibniz(&m), "size {size}");
        }
    }

    #[test]
    fn det_identity_and_small_cases() {
        for k in 1..6 {
            assert!(Mat::identity(&Ring::Integer, k).det().is_one());
        }
        let z6 = Ring::modular(6).unwrap();
        let m = Mat::from_ints(&z6, [[2, 3], [3, 2]]);
        // 4 - 9 = -5 = 1 mod 6
        assert!(m.det().is_one());
    }

    #[test]
    fn adjugate_is_exact_symbolically() {
        let m = generic(4);
        let det = m.det();
        assert_eq!(&m * &m.adjugate(), Mat::scalar(&det, 4));
        assert_eq!(&m.adjugate() * &m, Mat::scalar(&det, 4));
    }

    #[test]
    fn scalar_inverse_mod_8() {
        let z8 = Ring::modular(8).unwrap();
        let m = Mat::scalar(&z8.int(3), 3);
        assert_eq!(m.inverse().unwrap(), Mat::scalar(&z8.int(3), 3));
    }

    #[test]
    fn non_unit_det_is_not_invertible() {
        let m = Mat::from_ints(&Ring::Integer, [[2, 0], [0, 1]]);
        assert_eq!(m.inverse(), Err(Error::NotInvertible));
        let z6 = Ring::modular(6).unwrap();
        let m = Mat::from_ints(&z6, [[3, 0], [0, 1]]);
        assert_eq!(m.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn identity_is_neutral() {
        let m = Mat::from_ints(&Ring::Integer, [[1, 2], [3, 4]]);
        let i = Mat::identity(&Ring::Integer, 2);
        assert_eq!(&i * &m, m);
        assert_eq!(&m * &i, m);
    }

    #[test]
    fn conformance_errors() {
        let a = Mat::identity(&Ring::Integer, 2);
        let b = Mat::identity(&Ring::Integer, 3);
        assert!(matches!(a.try_mul(&b), Err(Error::SizeMismatch { .. })));
        let c = Mat::identity(&Ring::Modular(5), 2);
        assert_eq!(a.try_add(&c), Err(Error::RingMismatch));
        assert!(Mat::from_rows(&Ring::Integer, vec![vec![Ring::Integer.one()], vec![]]).is_err());
    }

    #[test]
    fn quadrant_roundtrip() {
        let m = generic(4);
        let [a, b, c, d] = m.quadrants();
        assert_eq!(Mat::from_quadrants(&a, &b, &c, &d), m);
    }
}
