//! The matrix model `Cl(H(R^n)) ≅ M_{2^n}(R)`.
//!
//! The generating space enters through
//!
//! ```text
//! φ(v, w) = [[ 0,          S(v, w) ],
//!            [ S(v, w)‾,   0       ]]
//! ```
//!
//! where `S` has size `2^{n-1}`; `φ(x)² = q(x)·I`. Even elements are the
//! block-diagonal matrices, odd elements the block-anti-diagonal ones.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::forms;
use crate::mat::Mat;
use crate::ring::{Elem, Ring};
use crate::suslin::{self, SuslinMatrix, SuslinPair};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliffordElem {
    n: usize,
    mat: Mat,
}

impl CliffordElem {
    pub fn new(n: usize, mat: Mat) -> Result<Self> {
        let expected = 1usize << n;
        if mat.size() != expected {
            return Err(Error::SizeMismatch {
                expected,
                found: mat.size(),
            });
        }
        Ok(CliffordElem { n, mat })
    }

    pub fn scalar(c: &Elem, n: usize) -> Self {
        CliffordElem {
            n,
            mat: Mat::scalar(c, 1 << n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn into_mat(self) -> Mat {
        self.mat
    }

    pub fn ring(&self) -> &Ring {
        self.mat.ring()
    }

    pub fn mul(&self, other: &CliffordElem) -> CliffordElem {
        assert_eq!(self.n, other.n);
        CliffordElem {
            n: self.n,
            mat: &self.mat * &other.mat,
        }
    }

    pub fn add(&self, other: &CliffordElem) -> CliffordElem {
        assert_eq!(self.n, other.n);
        CliffordElem {
            n: self.n,
            mat: &self.mat + &other.mat,
        }
    }

    pub fn scale(&self, c: &Elem) -> CliffordElem {
        CliffordElem {
            n: self.n,
            mat: self.mat.scale(c),
        }
    }

    /// The standard involution.
    pub fn star(&self) -> CliffordElem {
        CliffordElem {
            n: self.n,
            mat: forms::star(&self.mat, self.n).expect("size is 2^n"),
        }
    }

    pub fn is_even(&self) -> bool {
        self.n > 0 && {
            let [_, b, c, _] = self.mat.quadrants();
            b.is_zero() && c.is_zero()
        }
    }

    pub fn is_odd(&self) -> bool {
        self.n > 0 && {
            let [a, _, _, d] = self.mat.quadrants();
            a.is_zero() && d.is_zero()
        }
    }
}

/// `φ(v, w)` with `n = m`.
pub fn phi(pair: &SuslinPair) -> CliffordElem {
    let s = SuslinMatrix::new(pair.clone());
    let mat = Mat::block_antidiag(s.mat(), s.bar().mat());
    CliffordElem { n: pair.m(), mat }
}

/// The pair `x` with `φ(x) = mat`, if `mat` lies in the image of `φ`.
pub fn phi_preimage(mat: &Mat, n: usize) -> Option<SuslinPair> {
    if n == 0 || mat.size() != 1 << n {
        return None;
    }
    let [a, b, c, d] = mat.quadrants();
    if !a.is_zero() || !d.is_zero() {
        return None;
    }
    if n == 1 {
        return SuslinPair::new(alloc::vec![b.get(0, 0).clone()], alloc::vec![c.get(0, 0).clone()]).ok();
    }
    let pair = suslin::extract(&b)?;
    (suslin::sus(&pair.conjugate()) == c).then_some(pair)
}

/// `B(z1, z2) = q(z1 + z2) - q(z1) - q(z2)`.
pub fn polarization(z1: &SuslinPair, z2: &SuslinPair) -> Result<Elem> {
    let sum = z1.try_add(z2)?;
    Ok(&(&sum.q() - &z1.q()) - &z2.q())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    E,
    F,
}

/// `e_i` or `f_i`, `1 <= index <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn e(index: usize) -> Self {
        Generator {
            kind: GenKind::E,
            index,
        }
    }

    pub fn f(index: usize) -> Self {
        Generator {
            kind: GenKind::F,
            index,
        }
    }

    pub fn pair(self, ring: &Ring, n: usize) -> Result<SuslinPair> {
        match self.kind {
            GenKind::E => SuslinPair::basis_e(ring, self.index, n),
            GenKind::F => SuslinPair::basis_f(ring, self.index, n),
        }
    }

    /// The canonical order `e1 < f1 < e2 < f2 < ...`.
    pub fn all(n: usize) -> impl Iterator<Item = Generator> {
        (1..=n).flat_map(|i| [Generator::e(i), Generator::f(i)])
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GenKind::E => 'e',
            GenKind::F => 'f',
        };
        write!(f, "{k}{}", self.index)
    }
}

pub fn generator(ring: &Ring, g: Generator, n: usize) -> Result<CliffordElem> {
    Ok(phi(&g.pair(ring, n)?))
}

pub fn gen_e(ring: &Ring, i: usize, n: usize) -> Result<CliffordElem> {
    generator(ring, Generator::e(i), n)
}

pub fn gen_f(ring: &Ring, i: usize, n: usize) -> Result<CliffordElem> {
    generator(ring, Generator::f(i), n)
}

/// `coeff · z_1 z_2 ... z_k` for generators `z_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWord {
    pub coeff: Elem,
    pub letters: Vec<Generator>,
}

impl GeneratorWord {
    pub fn new(coeff: Elem, letters: Vec<Generator>) -> Self {
        GeneratorWord { coeff, letters }
    }

    /// Parses whitespace-separated letters such as `e1 f2 e3`.
    pub fn parse(letters: &str, coeff: Elem) -> Result<Self> {
        let mut out = Vec::new();
        let mut offset = 0;
        for tok in letters.split_whitespace() {
            let pos = letters[offset..].find(tok).unwrap() + offset;
            offset = pos + tok.len();
            let kind = match tok.as_bytes()[0] {
                b'e' => GenKind::E,
                b'f' => GenKind::F,
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: String::from("expected a generator e<i> or f<i>"),
                    })
                }
            };
            let index = tok[1..].parse::<usize>().map_err(|_| Error::Parse {
                pos: pos + 1,
                msg: String::from("expected a generator index"),
            })?;
            out.push(Generator { kind, index });
        }
        Ok(GeneratorWord { coeff, letters: out })
    }

    pub fn eval(&self, n: usize) -> Result<CliffordElem> {
        let ring = self.coeff.ring();
        let mut acc = CliffordElem::scalar(&self.coeff, n);
        for &g in &self.letters {
            acc = acc.mul(&generator(&ring, g, n)?);
        }
        Ok(acc)
    }
}

pub fn eval_word(word: &GeneratorWord, n: usize) -> Result<CliffordElem> {
    word.eval(n)
}

/// `(even, odd)` with `x = even + odd`.
pub fn grade_split(x: &CliffordElem) -> (CliffordElem, CliffordElem) {
    if x.n == 0 {
        let zero = Mat::zeros(x.ring(), 1);
        return (x.clone(), CliffordElem { n: 0, mat: zero });
    }
    let [a, b, c, d] = x.mat.quadrants();
    (
        CliffordElem {
            n: x.n,
            mat: Mat::block_diag(&a, &d),
        },
        CliffordElem {
            n: x.n,
            mat: Mat::block_antidiag(&b, &c),
        },
    )
}

/// Rank over `Z/p` of the `4^n` ordered products of distinct generators,
/// each flattened to a vector of length `4^n`. Full rank means `φ` is onto.
pub fn span_check(n: usize, p: u64) -> Result<usize> {
    if n == 0 || n > 3 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "span check is defined for 1 <= n <= 3",
        });
    }
    if !is_prime(p) {
        return Err(Error::Invalid(alloc::format!("{p} is not prime")));
    }
    let rows: Vec<Vec<u64>> = subset_products(&Ring::Modular(p), n)?
        .into_iter()
        .map(|m| {
            m.entries()
                .iter()
                .map(|e| match e {
                    Elem::Mod(z) => z.value(),
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();
    Ok(rank_mod_p(rows, p))
}

/// Products `z_{i1} ... z_{ik}` over all subsets of the generators, each
/// taken in the canonical order `e1 < f1 < e2 < ...`.
pub fn subset_products(ring: &Ring, n: usize) -> Result<Vec<Mat>> {
    let gens: Vec<Mat> = Generator::all(n)
        .map(|g| generator(ring, g, n).map(CliffordElem::into_mat))
        .collect::<Result<_>>()?;
    let size = 1usize << n;
    let mut out = Vec::with_capacity(1 << gens.len());
    for mask in 0u32..(1 << gens.len()) {
        let mut acc = Mat::identity(ring, size);
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                acc = &acc * g;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        // Fermat
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pinv = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = mulmod(*x, pinv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = (*x + p - mulmod(factor, y)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}
