//! Commutative unital rings chosen at runtime.
//!
//! A [`Ring`] is a descriptor; an [`Elem`] is a canonical value that knows
//! which ring it lives in. Binary operations on elements of different rings
//! are an error ([`Error::RingMismatch`]). The operator impls on `&Elem`
//! panic in that case, the `try_*` methods report it.

mod poly;
mod text;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub use poly::{Monomial, Poly};

/// An ordered list of distinct, nonempty variable names.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if !text::is_identifier(name) {
                return Err(Error::Invalid(alloc::format!("invalid variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::Invalid(alloc::format!("duplicate variable {name:?}")));
            }
        }
        Ok(Vars(names.into()))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// This list followed by the names of `more` not already present.
    pub fn extended<S: AsRef<str>>(&self, more: impl IntoIterator<Item = S>) -> Result<Vars> {
        let mut names: Vec<String> = self.0.to_vec();
        for s in more {
            let s = s.as_ref();
            if !names.iter().any(|n| n == s) {
                names.push(s.to_string());
            }
        }
        Vars::new(names)
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl Hash for Vars {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

/// Ring descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integer,
    /// `Z/m`, `m >= 2`; composite moduli are allowed.
    Modular(u64),
    /// `Z[vars]`.
    Poly(Vars),
}

impl Ring {
    pub fn modular(m: u64) -> Result<Ring> {
        if m < 2 {
            return Err(Error::Invalid(alloc::format!("modulus must be >= 2, got {m}")));
        }
        Ok(Ring::Modular(m))
    }

    pub fn poly<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        Ok(Ring::Poly(Vars::new(names)?))
    }

    pub fn zero(&self) -> Elem {
        self.int(0)
    }

    pub fn one(&self) -> Elem {
        self.int(1)
    }

    pub fn int(&self, k: i64) -> Elem {
        self.from_bigint(BigInt::from(k))
    }

    pub fn from_bigint(&self, k: BigInt) -> Elem {
        match self {
            Ring::Integer => Elem::Int(k),
            Ring::Modular(m) => Elem::Mod(Zn::from_bigint(&k, *m)),
            Ring::Poly(vars) => Elem::Poly(Poly::constant(vars.clone(), k)),
        }
    }

    /// The indeterminate `name`; only for polynomial rings.
    pub fn var(&self, name: &str) -> Result<Elem> {
        match self {
            Ring::Poly(vars) => vars
                .index_of(name)
                .map(|i| Elem::Poly(Poly::var(vars.clone(), i)))
                .ok_or_else(|| Error::Invalid(alloc::format!("unknown variable {name:?}"))),
            _ => Err(Error::Invalid(alloc::format!(
                "variable {name:?} in a ring without indeterminates"
            ))),
        }
    }

    pub fn vars(&self) -> Option<&Vars> {
        match self {
            Ring::Poly(v) => Some(v),
            _ => None,
        }
    }

    /// Parses the text grammar: `-12`, `7 mod 12`, `2*a1*b2 - 3*x^2 + 1`.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        text::parse(self, s)
    }

    /// Whether 2 is not a zero divisor.
    pub fn two_is_regular(&self) -> bool {
        match self {
            Ring::Integer | Ring::Poly(_) => true,
            Ring::Modular(m) => m % 2 == 1,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => f.write_str("Z"),
            Ring::Modular(m) => write!(f, "Z/{m}"),
            Ring::Poly(v) => write!(f, "Z[{}]", v.names().join(",")),
        }
    }
}

/// A residue in `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zn {
    value: u64,
    modulus: u64,
}

impl Zn {
    pub fn new(value: u64, modulus: u64) -> Zn {
        Zn {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_bigint(k: &BigInt, modulus: u64) -> Zn {
        let r = k.mod_floor(&BigInt::from(modulus));
        Zn {
            value: r.to_u64().expect("residue fits in u64"),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn add(self, o: Zn) -> Zn {
        let s = (self.value as u128 + o.value as u128) % self.modulus as u128;
        Zn::new(s as u64, self.modulus)
    }

    fn neg(self) -> Zn {
        Zn::new((self.modulus - self.value) % self.modulus, self.modulus)
    }

    fn mul(self, o: Zn) -> Zn {
        let p = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Zn::new(p as u64, self.modulus)
    }

    fn inverse(self) -> Option<Zn> {
        let e = BigInt::from(self.value).extended_gcd(&BigInt::from(self.modulus));
        if !e.gcd.is_one() {
            return None;
        }
        Some(Zn::from_bigint(&e.x, self.modulus))
    }
}

/// A ring element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Mod(Zn),
    Poly(Poly),
}

impl Elem {
    pub fn ring(&self) -> Ring {
        match self {
            Elem::Int(_) => Ring::Integer,
            Elem::Mod(z) => Ring::Modular(z.modulus),
            Elem::Poly(p) => Ring::Poly(p.vars().clone()),
        }
    }

    pub fn in_ring(&self, ring: &Ring) -> bool {
        match (self, ring) {
            (Elem::Int(_), Ring::Integer) => true,
            (Elem::Mod(z), Ring::Modular(m)) => z.modulus == *m,
            (Elem::Poly(p), Ring::Poly(v)) => p.vars() == v,
            _ => false,
        }
    }

    pub fn same_ring(&self, other: &Elem) -> bool {
        match (self, other) {
            (Elem::Int(_), Elem::Int(_)) => true,
            (Elem::Mod(a), Elem::Mod(b)) => a.modulus == b.modulus,
            (Elem::Poly(a), Elem::Poly(b)) => a.vars() == b.vars(),
            _ => false,
        }
    }

    fn check(&self, other: &Elem) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Int(k) => k.is_zero(),
            Elem::Mod(z) => z.value == 0,
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Int(k) => k.is_one(),
            Elem::Mod(z) => z.value == 1,
            Elem::Poly(p) => p.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    /// Integer value, for integers, residues (least nonnegative) and
    /// constant polynomials.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Elem::Int(k) => Some(k.clone()),
            Elem::Mod(z) => Some(BigInt::from(z.value)),
            Elem::Poly(p) => p.as_constant(),
        }
    }

    pub fn try_add(&self, rhs: &Elem) -> Result<Elem> {
        self.check(rhs)?;
        let mut out = self.clone();
        out.add_assign_unchecked(rhs);
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Elem) -> Result<Elem> {
        self.check(rhs)?;
        let mut out = self.clone();
        out.sub_assign_unchecked(rhs);
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Elem) -> Result<Elem> {
        self.check(rhs)?;
        Ok(match (self, rhs) {
            (Elem::Int(a), Elem::Int(b)) => Elem::Int(a * b),
            (Elem::Mod(a), Elem::Mod(b)) => Elem::Mod(a.mul(*b)),
            (Elem::Poly(a), Elem::Poly(b)) => Elem::Poly(a.mul(b)),
            _ => unreachable!(),
        })
    }

    fn add_assign_unchecked(&mut self, rhs: &Elem) {
        match (self, rhs) {
            (Elem::Int(a), Elem::Int(b)) => *a += b,
            (Elem::Mod(a), Elem::Mod(b)) => *a = a.add(*b),
            (Elem::Poly(a), Elem::Poly(b)) => a.add_assign(b),
            _ => unreachable!(),
        }
    }

    fn sub_assign_unchecked(&mut self, rhs: &Elem) {
        match (self, rhs) {
            (Elem::Int(a), Elem::Int(b)) => *a -= b,
            (Elem::Mod(a), Elem::Mod(b)) => *a = a.add(b.neg()),
            (Elem::Poly(a), Elem::Poly(b)) => a.sub_assign(b),
            _ => unreachable!(),
        }
    }

    /// `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &Elem, b: &Elem) {
        assert!(self.same_ring(a) && self.same_ring(b), "ring mismatch");
        match (self, a, b) {
            (Elem::Int(s), Elem::Int(a), Elem::Int(b)) => *s += a * b,
            (Elem::Mod(s), Elem::Mod(a), Elem::Mod(b)) => *s = s.add(a.mul(*b)),
            (Elem::Poly(s), Elem::Poly(a), Elem::Poly(b)) => s.add_mul_assign(a, b),
            _ => unreachable!(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Elem {
        let mut base = self.clone();
        let mut acc = self.ring().one();
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

    /// Multiplication by an integer.
    pub fn scale_int(&self, k: i64) -> Elem {
        self * &self.ring().int(k)
    }

    /// Integers: `±1`. `Z/m`: `gcd(a, m) = 1`. Polynomials: constant `±1`.
    pub fn is_unit(&self) -> bool {
        match self {
            Elem::Int(k) => k.abs().is_one(),
            Elem::Mod(z) => z.inverse().is_some(),
            Elem::Poly(p) => p.as_constant().is_some_and(|c| c.abs().is_one()),
        }
    }

    pub fn invert(&self) -> Result<Elem> {
        match self {
            Elem::Int(k) if k.abs().is_one() => Ok(self.clone()),
            Elem::Mod(z) => z.inverse().map(Elem::Mod).ok_or(Error::NotAUnit),
            Elem::Poly(p) if p.as_constant().is_some_and(|c| c.abs().is_one()) => Ok(self.clone()),
            _ => Err(Error::NotAUnit),
        }
    }

    /// Maps the element into `target` along the canonical homomorphism:
    /// `Z -> Z/m`, `Z -> Z[vars]`, `Z[vars] -> Z[vars']` for `vars ⊆ vars'`.
    pub fn lift(&self, target: &Ring) -> Result<Elem> {
        if self.in_ring(target) {
            return Ok(self.clone());
        }
        match (self, target) {
            (Elem::Int(k), _) => Ok(target.from_bigint(k.clone())),
            (Elem::Poly(p), Ring::Poly(vars)) => p.lift(vars).map(Elem::Poly).ok_or(Error::RingMismatch),
            (Elem::Poly(p), _) if p.as_constant().is_some() => Ok(target.from_bigint(p.as_constant().unwrap())),
            _ => Err(Error::RingMismatch),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::fmt_elem(self, f)
    }
}

impl Neg for &Elem {
    type Output = Elem;

    fn neg(self) -> Elem {
        match self {
            Elem::Int(a) => Elem::Int(-a),
            Elem::Mod(a) => Elem::Mod(a.neg()),
            Elem::Poly(a) => Elem::Poly(a.neg()),
        }
    }
}

impl Neg for Elem {
    type Output = Elem;

    fn neg(self) -> Elem {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Elem> for &Elem {
            type Output = Elem;

            fn $method(self, rhs: &Elem) -> Elem {
                self.$try(rhs).expect("ring mismatch")
            }
        }

        impl $trait<Elem> for Elem {
            type Output = Elem;

            fn $method(self, rhs: Elem) -> Elem {
                (&self).$try(&rhs).expect("ring mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Elem> for Elem {
    fn add_assign(&mut self, rhs: &Elem) {
        assert!(self.same_ring(rhs), "ring mismatch");
        self.add_assign_unchecked(rhs);
    }
}

impl SubAssign<&Elem> for Elem {
    fn sub_assign(&mut self, rhs: &Elem) {
        assert!(self.same_ring(rhs), "ring mismatch");
        self.sub_assign_unchecked(rhs);
    }
}

/// `q(v, w) = v · wᵀ`.
pub fn dot(v: &[Elem], w: &[Elem]) -> Elem {
    assert_eq!(v.len(), w.len());
    let mut acc = v[0].ring().zero();
    for (a, b) in v.iter().zip(w) {
        acc.add_mul_assign(a, b);
    }
    acc
}
