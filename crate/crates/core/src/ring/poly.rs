//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Vars;

/// An exponent vector, stored sparsely as `(variable index, exponent)`
/// pairs sorted by index with every exponent nonzero.
///
/// Monomials are ordered graded-lexicographically with `x0 > x1 > ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    powers: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(index: usize) -> Self {
        Monomial {
            degree: 1,
            powers: alloc::vec![(index as u32, 1)],
        }
    }

    /// Builds a monomial from `(index, exponent)` pairs in any order.
    pub fn from_powers(powers: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut acc: BTreeMap<u32, u32> = BTreeMap::new();
        for (i, e) in powers {
            if e > 0 {
                *acc.entry(i as u32).or_insert(0) += e;
            }
        }
        let degree = acc.values().sum();
        Monomial {
            degree,
            powers: acc.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.powers.iter().map(|&(i, e)| (i as usize, e))
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.powers
            .iter()
            .find(|&&(i, _)| i as usize == index)
            .map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut a, mut b) = (self.powers.iter().peekable(), other.powers.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        powers.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        powers.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        powers.push((i, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    powers.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    powers.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            degree: self.degree + other.degree,
            powers,
        }
    }

    fn remap(&self, map: &[usize]) -> Monomial {
        Monomial::from_powers(self.powers().map(|(i, e)| (map[i], e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            // Lex with x0 > x1 > ...: the first index where the exponents
            // differ decides, a variable missing on one side counts as 0.
            let (mut a, mut b) = (self.powers.iter(), other.powers.iter());
            loop {
                match (a.next(), b.next()) {
                    (Some(&(i, e)), Some(&(j, f))) => {
                        if i != j {
                            return j.cmp(&i);
                        }
                        if e != f {
                            return e.cmp(&f);
                        }
                    }
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (None, None) => return Ordering::Equal,
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in the variables of its [`Vars`] list.
///
/// The term map never stores a zero coefficient, so structural equality is
/// equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(vars: Vars) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: BigInt) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(vars: Vars, index: usize) -> Self {
        let mut p = Poly::zero(vars);
        p.terms.insert(Monomial::var(index), BigInt::one());
        p
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The coefficient if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c);
        }
    }

    /// `self += a * b` without materialising the product.
    pub fn add_mul_assign(&mut self, a: &Poly, b: &Poly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.vars.clone());
        out.add_mul_assign(self, other);
        out
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Re-expresses the polynomial over `target`, whose variable list must
    /// contain every variable of `self`. Returns `None` otherwise.
    pub fn lift(&self, target: &Vars) -> Option<Poly> {
        if self.vars == *target {
            return Some(self.clone());
        }
        let map: Option<Vec<usize>> = self.vars.names().iter().map(|name| target.index_of(name)).collect();
        let map = map?;
        Some(Poly::from_terms(
            target.clone(),
            self.terms.iter().map(|(m, c)| (m.remap(&map), c.clone())),
        ))
    }
}
