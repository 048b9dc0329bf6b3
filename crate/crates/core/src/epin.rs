//! Elementary orthogonal matrices, the generators of `Epin_{2n}`, the
//! identities among `E_i = S(e_i, 0)` and `F_i = S(0, f_i)`, the map
//! `π : Spin_{2n} → O_{2n}` and the comparison `Epin_6 = E_4`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::check::{Check, Report};
use crate::clifford::{self, CliffordElem, GenKind, Generator};
use crate::mat::Mat;
use crate::ring::{Elem, Ring, Vars};
use crate::spin::{self, SpinPair};
use crate::suslin::{self, SuslinMatrix};
use crate::{Error, Result};

/// A `2n × 2n` matrix acting on coordinates `(v, w)` of `H(R^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthoMat {
    n: usize,
    mat: Mat,
}

impl OrthoMat {
    pub fn new(n: usize, mat: Mat) -> Result<Self> {
        if mat.size() != 2 * n {
            return Err(Error::SizeMismatch {
                expected: 2 * n,
                found: mat.size(),
            });
        }
        Ok(OrthoMat { n, mat })
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

    /// `q(Mz) = q(z)` compared coefficient by coefficient: with `Q` the
    /// upper-right identity block, `P = MᵀQM` must satisfy `P_kk = Q_kk`
    /// and `P_kl + P_lk = Q_kl + Q_lk`.
    pub fn preserves_q(&self) -> bool {
        let ring = self.mat.ring();
        let n = self.n;
        let q = Mat::from_fn(ring, 2 * n, |i, j| if j == i + n { ring.one() } else { ring.zero() });
        let p = &(&self.mat.transpose() * &q) * &self.mat;
        (0..2 * n).all(|k| {
            p.get(k, k) == q.get(k, k)
                && (k + 1..2 * n).all(|l| (p.get(k, l) + p.get(l, k)) == (q.get(k, l) + q.get(l, k)))
        })
    }

    /// `q(Mz) = q(z)` as a polynomial identity in fresh indeterminates
    /// `z1..z2n`. Needs an integer or polynomial base ring.
    pub fn preserves_q_symbolic(&self) -> Result<bool> {
        let n = self.n;
        let fresh: Vec<String> = (1..=2 * n).map(|k| format!("_z{k}")).collect();
        let vars = match self.mat.ring() {
            Ring::Integer => Vars::new(&fresh)?,
            Ring::Poly(v) => v.extended(&fresh)?,
            Ring::Modular(_) => {
                return Err(Error::Invalid(String::from(
                    "symbolic q check needs an integer or polynomial ring",
                )))
            }
        };
        let ring = Ring::Poly(vars);
        let m = self.mat.lift(&ring)?;
        let z: Vec<Elem> = fresh.iter().map(|s| ring.var(s)).collect::<Result<_>>()?;
        let image: Vec<Elem> = (0..2 * n)
            .map(|i| {
                let mut acc = ring.zero();
                for (j, zj) in z.iter().enumerate() {
                    acc.add_mul_assign(m.get(i, j), zj);
                }
                acc
            })
            .collect();
        let q = |c: &[Elem]| crate::ring::dot(&c[..n], &c[n..]);
        Ok(q(&image) == q(&z))
    }
}

/// `∂(k) = k ± n`, 1-indexed.
fn partial(k: usize, n: usize) -> usize {
    if k <= n {
        k + n
    } else {
        k - n
    }
}

/// `oe_ij(a) = I + a e_ij - a e_{∂(j)∂(i)}`, 1-indexed, `i ≠ j`.
pub fn oe(i: usize, j: usize, a: &Elem, n: usize) -> Result<OrthoMat> {
    for k in [i, j] {
        if k == 0 || k > 2 * n {
            return Err(Error::IndexOutOfRange { index: k, bound: 2 * n });
        }
    }
    if i == j {
        return Err(Error::Invalid(format!("oe needs i != j, got {i}")));
    }
    let ring = a.ring();
    let mut m = Mat::identity(&ring, 2 * n);
    let (pi, pj) = (partial(j, n) - 1, partial(i, n) - 1);
    let x = m.get(i - 1, j - 1) + a;
    m.set(i - 1, j - 1, x);
    let y = m.get(pi, pj) - a;
    m.set(pi, pj, y);
    OrthoMat::new(n, m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EpinKind {
    EE,
    FF,
}

impl EpinKind {
    fn gen_kind(self) -> GenKind {
        match self {
            EpinKind::EE => GenKind::E,
            EpinKind::FF => GenKind::F,
        }
    }
}

fn distinct(i: usize, j: usize) -> Result<()> {
    if i == j {
        return Err(Error::Invalid(format!("generator needs i != j, got {i}")));
    }
    Ok(())
}

/// `1 + a z_i z_j` with `z = e` or `f`, in `M_{2^n}(R)`.
pub fn epin_gen(kind: EpinKind, i: usize, j: usize, a: &Elem, n: usize) -> Result<CliffordElem> {
    distinct(i, j)?;
    let ring = a.ring();
    let k = kind.gen_kind();
    let zi = clifford::generator(&ring, Generator { kind: k, index: i }, n)?;
    let zj = clifford::generator(&ring, Generator { kind: k, index: j }, n)?;
    Ok(CliffordElem::scalar(&ring.one(), n).add(&zi.mul(&zj).scale(a)))
}

/// `u = antidiag(I, I)` of size `2^n`.
pub fn u_mat(ring: &Ring, n: usize) -> Result<CliffordElem> {
    if n == 0 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "u needs a 2×2 block structure",
        });
    }
    let i = Mat::identity(ring, 1 << (n - 1));
    CliffordElem::new(n, Mat::block_antidiag(&i, &i))
}

/// `u (1 + a z_i z_j) u`.
pub fn epin_gen_primed(kind: EpinKind, i: usize, j: usize, a: &Elem, n: usize) -> Result<CliffordElem> {
    let g = epin_gen(kind, i, j, a, n)?;
    let u = u_mat(&a.ring(), n)?;
    Ok(u.mul(&g).mul(&u))
}

/// `e'_i = e_i u` or `f'_i = f_i u`.
pub fn primed_generator(ring: &Ring, g: Generator, n: usize) -> Result<CliffordElem> {
    Ok(clifford::generator(ring, g, n)?.mul(&u_mat(ring, n)?))
}

/// `E_i = S(e_i, 0)` or `F_i = S(0, f_i)`, of size `2^{n-1}`.
pub fn suslin_basis(ring: &Ring, g: Generator, n: usize) -> Result<Mat> {
    let s = match g.kind {
        GenKind::E => suslin::gen_e(ring, g.index, n)?,
        GenKind::F => suslin::gen_f(ring, g.index, n)?,
    };
    Ok(s.into_mat())
}

/// `1 + a · Z_1 Z_2 ... Z_k` for `Z` among `E_i`, `F_i`.
pub fn eg_element(a: &Elem, letters: &[Generator], n: usize) -> Result<Mat> {
    let ring = a.ring();
    let size = 1usize << (n - 1);
    let mut prod = Mat::identity(&ring, size);
    for &g in letters {
        prod = &prod * &suslin_basis(&ring, g, n)?;
    }
    Ok(&Mat::identity(&ring, size) + &prod.scale(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EgKind {
    E1Ei,
    EiE1,
    F1Fi,
    FiF1,
}

impl EgKind {
    pub const ALL: [EgKind; 4] = [EgKind::E1Ei, EgKind::EiE1, EgKind::F1Fi, EgKind::FiF1];

    fn letters(self, i: usize) -> [Generator; 2] {
        match self {
            EgKind::E1Ei => [Generator::e(1), Generator::e(i)],
            EgKind::EiE1 => [Generator::e(i), Generator::e(1)],
            EgKind::F1Fi => [Generator::f(1), Generator::f(i)],
            EgKind::FiF1 => [Generator::f(i), Generator::f(1)],
        }
    }
}

/// The generators `1 + aE_1E_i`, `1 + aE_iE_1`, `1 + aF_1F_i`, `1 + aF_iF_1`
/// of `EG_{n-1}`, odd `n`, `2 <= i <= n`.
pub fn eg_gen(kind: EgKind, i: usize, a: &Elem, n: usize) -> Result<Mat> {
    require_odd(n)?;
    if i < 2 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    eg_element(a, &kind.letters(i), n)
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

/// The generator relation table over `Z` for every `i ≠ 1`, plus `E_1E_iE_1 = 0 = E_iE_1E_i`
/// and the `F` versions.
pub fn table1_check(n: usize) -> Result<Report> {
    require_odd(n)?;
    let z = Ring::Integer;
    let e = |i| suslin_basis(&z, Generator::e(i), n);
    let f = |i| suslin_basis(&z, Generator::f(i), n);
    let bar = |m: &Mat| SuslinMatrix::from_mat(m).map(|s| s.bar().into_mat());
    let mut report = Report::new("table1");
    let (e1, f1) = (e(1)?, f(1)?);
    let zero = Mat::zeros(&z, e1.size());
    let inputs = |i: usize| [("n", format!("{n}")), ("i", format!("{i}"))];
    report.push(Check::equal("E1^2 = E1", &z, &inputs(1), &(&e1 * &e1), &e1));
    report.push(Check::equal("F1^2 = F1", &z, &inputs(1), &(&f1 * &f1), &f1));
    for i in 2..=n {
        let (ei, fi) = (e(i)?, f(i)?);
        let ins = inputs(i);
        let mut eq =
            |name: &str, l: Mat, r: Mat| report.push(Check::equal(format!("{name} (i = {i})"), &z, &ins, &l, &r));
        eq("bar(Ei) = -Ei", bar(&ei).unwrap_or_else(|| zero.clone()), -&ei);
        eq("bar(Fi) = -Fi", bar(&fi).unwrap_or_else(|| zero.clone()), -&fi);
        eq("Ei^2 = 0", &ei * &ei, zero.clone());
        eq("Fi^2 = 0", &fi * &fi, zero.clone());
        eq("Ei E1 = F1 Ei", &ei * &e1, &f1 * &ei);
        eq("Fi E1 = F1 Fi", &fi * &e1, &f1 * &fi);
        eq("E1 Ei = Ei F1", &e1 * &ei, &ei * &f1);
        eq("E1 Fi = Fi F1", &e1 * &fi, &fi * &f1);
        eq("Ei E1 + E1 Ei = Ei", &(&ei * &e1) + &(&e1 * &ei), ei.clone());
        eq("Fi E1 + E1 Fi = Fi", &(&fi * &e1) + &(&e1 * &fi), fi.clone());
        eq("E1 Ei E1 = 0", &(&e1 * &ei) * &e1, zero.clone());
        eq("Ei E1 Ei = 0", &(&ei * &e1) * &ei, zero.clone());
        eq("F1 Fi F1 = 0", &(&f1 * &fi) * &f1, zero.clone());
        eq("Fi F1 Fi = 0", &(&fi * &f1) * &fi, zero.clone());
    }
    Ok(report)
}

/// `g h g⁻¹ h⁻¹`.
pub fn commutator(g: &Mat, h: &Mat) -> Result<Mat> {
    Ok(&(&(g * h) * &g.inverse()?) * &h.inverse()?)
}

/// `1 + aE_iE_j = [1 + aE_iE_1, 1 + E_1E_j]` and the `F` version for
/// `i, j ≠ 1`, `i ≠ j`, with `a` an indeterminate.
pub fn commutator_relations_check(n: usize) -> Result<Report> {
    require_odd(n)?;
    let ring = Ring::poly(["a"])?;
    let a = ring.var("a")?;
    let one = ring.one();
    let mut report = Report::new("commutators");
    for (k, name) in [(GenKind::E, "E"), (GenKind::F, "F")] {
        let g = |index| Generator { kind: k, index };
        for i in 2..=n {
            for j in 2..=n {
                if i == j {
                    continue;
                }
                let lhs = eg_element(&a, &[g(i), g(j)], n)?;
                let rhs = commutator(&eg_element(&a, &[g(i), g(1)], n)?, &eg_element(&one, &[g(1), g(j)], n)?)?;
                let ins = [("n", format!("{n}")), ("i", format!("{i}")), ("j", format!("{j}"))];
                report.push(Check::equal(
                    format!("1 + a{name}{i}{name}{j} = [1 + a{name}{i}{name}1, 1 + {name}1{name}{j}]"),
                    &ring,
                    &ins,
                    &lhs,
                    &rhs,
                ));
            }
        }
    }
    Ok(report)
}

/// The matrix of `z ↦ x z x⁻¹` on `H(R^n)` in the basis
/// `e_1..e_n, f_1..f_n`.
pub fn pi(x: &SpinPair) -> Result<OrthoMat> {
    if !spin::in_u0(x) {
        return Err(Error::NotInGroup("x not in U0"));
    }
    let n = x.n();
    let ring = x.ring().clone();
    let mut m = Mat::zeros(&ring, 2 * n);
    let basis = (1..=n).map(Generator::e).chain((1..=n).map(Generator::f));
    for (col, g) in basis.enumerate() {
        let image = x
            .conjugate_pair(&g.pair(&ring, n)?)
            .ok_or(Error::NotInGroup("x not in Spin"))?;
        for (row, c) in image.coords().into_iter().enumerate() {
            m.set(row, col, c);
        }
    }
    OrthoMat::new(n, m)
}

/// `E_ij(x)` of size `k`, 1-indexed.
pub fn elementary(i: usize, j: usize, x: &Elem, k: usize) -> Result<Mat> {
    for idx in [i, j] {
        if idx == 0 || idx > k {
            return Err(Error::IndexOutOfRange { index: idx, bound: k });
        }
    }
    if i == j {
        return Err(Error::Invalid(format!("elementary matrix needs i != j, got {i}")));
    }
    let mut m = Mat::identity(&x.ring(), k);
    m.set(i - 1, j - 1, x.clone());
    Ok(m)
}

/// Whether `m` is `E_ij(x)` for some `i ≠ j` and `x`, or the identity.
pub fn is_elementary(m: &Mat) -> bool {
    let k = m.size();
    let mut off = 0;
    for i in 0..k {
        for j in 0..k {
            let e = m.get(i, j);
            if i == j {
                if !e.is_one() {
                    return false;
                }
            } else if !e.is_zero() {
                off += 1;
            }
        }
    }
    off <= 1
}

/// The generator identities behind `Epin_6 = E_4`, over `Z[x]`.
pub fn epin6_equals_e4_check() -> Result<Report> {
    let n = 3;
    let ring = Ring::poly(["x"])?;
    let x = ring.var("x")?;
    let one = ring.one();
    let (e, f) = (Generator::e, Generator::f);
    let el = |i, j, c: &Elem| elementary(i, j, c, 4);
    let ins = [("x", String::from("x"))];
    let mut report = Report::new("epin6");
    let mut eq = |name: &str, l: Mat, r: Mat| report.push(Check::equal(name, &ring, &ins, &l, &r));

    eq("E13(x) = 1 + xE1E2", el(1, 3, &x)?, eg_element(&x, &[e(1), e(2)], n)?);
    eq("E14(x) = 1 + xE1E3", el(1, 4, &x)?, eg_element(&x, &[e(1), e(3)], n)?);
    eq("E24(x) = 1 + xE1F2", el(2, 4, &x)?, eg_element(&x, &[e(1), f(2)], n)?);
    eq("E23(x) = 1 - xE1F3", el(2, 3, &x)?, eg_element(&-&x, &[e(1), f(3)], n)?);

    let basis = |g| suslin_basis(&ring, g, n);
    eq("E1^T = E1", basis(e(1))?.transpose(), basis(e(1))?);
    for i in 2..=3 {
        eq(&format!("E{i}^T = -F{i}"), basis(e(i))?.transpose(), -&basis(f(i))?);
    }

    eq("E32(1) = E23(1)^T", el(3, 2, &one)?, el(2, 3, &one)?.transpose());
    eq(
        "E32(1) = 1 + E3E1",
        el(3, 2, &one)?,
        eg_element(&one, &[e(3), e(1)], n)?,
    );
    eq("E31(x) = E13(x)^T", el(3, 1, &x)?, el(1, 3, &x)?.transpose());
    eq("E31(x) = 1 - xF1F2", el(3, 1, &x)?, eg_element(&-&x, &[f(1), f(2)], n)?);
    eq(
        "E12(x) = [E13(x), E32(1)]",
        el(1, 2, &x)?,
        commutator(&el(1, 3, &x)?, &el(3, 2, &one)?)?,
    );
    eq(
        "E34(x) = [E31(x), E14(1)]",
        el(3, 4, &x)?,
        commutator(&el(3, 1, &x)?, &el(1, 4, &one)?)?,
    );

    for kind in EgKind::ALL {
        for i in 2..=3 {
            let g = eg_gen(kind, i, &x, n)?;
            report.push(Check::holds(
                format!("{kind:?} (i = {i}) is elementary"),
                is_elementary(&g),
                &ring,
                || format!("{g}"),
            ));
        }
    }
    Ok(report)
}
