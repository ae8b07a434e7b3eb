//! Places of P^1 over F_q, valuations and residue fields.

use std::cmp::Ordering;
use std::fmt;

use super::factor::{monic_irreducibles, poly_cmp};
use super::field::{Field, FiniteField};
use super::fq::{Fq, FqElem};
use super::poly::{Poly, PolyRing};
use super::ratfunc::{FunctionField, RatFunc};
use crate::error::{Error, Result};

/// A closed point of P^1: a monic irreducible polynomial or infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Infinity,
    Finite(Poly),
}

impl Place {
    pub fn deg(&self) -> u32 {
        match self {
            Place::Infinity => 1,
            Place::Finite(f) => f.deg().expect("places are non-constant") as u32,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn poly(&self) -> Option<&Poly> {
        match self {
            Place::Infinity => None,
            Place::Finite(f) => Some(f),
        }
    }

    /// The place `t`.
    pub fn zero() -> Place {
        Place::Finite(Poly::monomial(FqElem::ONE, 1))
    }

    /// `q_v = q^deg`, if it fits in 64 bits.
    pub fn residue_order(&self, q: u64) -> Option<u64> {
        super::numth::checked_pow(q, self.deg())
    }

    pub fn label(&self, fq: &Fq, var: char) -> String {
        match self {
            Place::Infinity => "inf".to_string(),
            Place::Finite(f) => super::notation::poly_to_string(fq, f, var),
        }
    }

    pub fn display<'a>(&'a self, fq: &'a Fq) -> PlaceDisplay<'a> {
        PlaceDisplay { place: self, fq }
    }
}

pub struct PlaceDisplay<'a> {
    place: &'a Place,
    fq: &'a Fq,
}

impl fmt::Display for PlaceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.place.label(self.fq, 't'))
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Infinity, _) => Ordering::Less,
            (_, Place::Infinity) => Ordering::Greater,
            (Place::Finite(a), Place::Finite(b)) => poly_cmp(a, b),
        }
    }
}

/// Infinity followed by every monic irreducible of degree at most `d`.
pub fn places_up_to(field: &Fq, d: u32) -> Vec<Place> {
    let ring = PolyRing::new(field.clone());
    let mut out = vec![Place::Infinity];
    for n in 1..=d {
        out.extend(monic_irreducibles(&ring, n).into_iter().map(Place::Finite));
    }
    out
}

/// Valuation of `r` at `v`; `None` stands for `+∞` (r = 0).
pub fn valuation(k: &FunctionField, r: &RatFunc, v: &Place) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    Some(match v {
        Place::Infinity => r.den().deg().unwrap() as i64 - r.num().deg().unwrap() as i64,
        Place::Finite(f) => {
            let ring = k.ring();
            let (a, _) = ring.valuation(r.num(), f);
            let (b, _) = ring.valuation(r.den(), f);
            a as i64 - b as i64
        }
    })
}

/// Valuation of a nonzero polynomial at a finite place.
pub fn poly_valuation(ring: &PolyRing, a: &Poly, f: &Poly) -> u32 {
    ring.valuation(a, f).0
}

/// The residue field F_q[t]/(f) of a finite place, elements kept reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    ring: PolyRing,
    modulus: Poly,
    order: u64,
}

impl ResidueField {
    pub fn new(fq: &Fq, modulus: Poly) -> Result<ResidueField> {
        let n = modulus.deg().filter(|&d| d > 0).ok_or(Error::Parameter("residue modulus must be non-constant".into()))?;
        let order = super::numth::checked_pow(fq.q() as u64, n as u32).ok_or(Error::FieldTooLarge {
            q: u128::MAX,
            cap: u64::MAX,
        })?;
        Ok(ResidueField { ring: PolyRing::new(fq.clone()), modulus, order })
    }

    /// κ_v for a place; at infinity this is F_q (as F_q[s]/(s)).
    pub fn at(fq: &Fq, v: &Place) -> Result<ResidueField> {
        match v {
            Place::Infinity => ResidueField::new(fq, Poly::monomial(FqElem::ONE, 1)),
            Place::Finite(f) => ResidueField::new(fq, f.clone()),
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn base(&self) -> &Fq {
        self.ring.field()
    }

    pub fn degree(&self) -> u32 {
        self.modulus.deg().unwrap() as u32
    }

    pub fn from_poly(&self, a: &Poly) -> Poly {
        self.ring.rem(a, &self.modulus)
    }

    pub fn from_base(&self, c: FqElem) -> Poly {
        Poly::constant(c)
    }

    /// Image of `r` in F_q[t]/(f); fails if `f` divides the denominator.
    pub fn reduce(&self, r: &RatFunc) -> Option<Poly> {
        let n = self.from_poly(r.num());
        let d = self.ring.inv_mod(r.den(), &self.modulus)?;
        Some(self.ring.mul_mod(&n, &d, &self.modulus))
    }

    /// The constant polynomial as a base-field element, if it is one.
    pub fn as_base(&self, a: &Poly) -> Option<FqElem> {
        a.is_constant().then(|| a.coeff(0))
    }
}

impl Field for ResidueField {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        self.ring.one()
    }
    fn from_i64(&self, n: i64) -> Poly {
        Poly::constant(self.base().from_i64(n))
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.add(a, b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        self.ring.neg(a)
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.sub(a, b)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.mul_mod(a, b, &self.modulus)
    }
    fn inv(&self, a: &Poly) -> Option<Poly> {
        if a.is_zero() {
            return None;
        }
        self.ring.inv_mod(a, &self.modulus)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u32 {
        self.base().p()
    }
}

impl FiniteField for ResidueField {
    fn order(&self) -> u64 {
        self.order
    }

    fn element(&self, index: u64) -> Poly {
        let q = self.base().q() as u64;
        let mut m = index;
        let mut c = Vec::with_capacity(self.degree() as usize);
        for _ in 0..self.degree() {
            c.push(FqElem((m % q) as u32));
            m /= q;
        }
        Poly::from_coeffs(c)
    }

    fn is_square(&self, a: &Poly) -> bool {
        if self.characteristic() == 2 || a.is_zero() {
            return true;
        }
        let e = self.ring.pow_mod(a, (self.order - 1) / 2, &self.modulus);
        self.ring.is_one(&e)
    }

    fn sqrt(&self, a: &Poly) -> Option<Poly> {
        if a.is_zero() {
            return Some(Poly::zero());
        }
        if self.characteristic() == 2 {
            return Some(self.pth_root(a));
        }
        tonelli_shanks(self, a)
    }

    fn trace_f2(&self, a: &Poly) -> u32 {
        let k = self.base().degree() * self.degree();
        let mut acc = a.clone();
        let mut cur = a.clone();
        for _ in 1..k {
            cur = self.mul(&cur, &cur);
            acc = self.add(&acc, &cur);
        }
        debug_assert!(acc.is_constant());
        acc.coeff(0).0
    }

    fn pth_root(&self, a: &Poly) -> Poly {
        let p = self.characteristic() as u64;
        self.ring.pow_mod(a, self.order / p, &self.modulus)
    }
}

/// Square root in an odd-order finite field.
pub fn tonelli_shanks<F: FiniteField>(f: &F, a: &F::Elem) -> Option<F::Elem> {
    if f.is_zero(a) {
        return Some(f.zero());
    }
    if !f.is_square(a) {
        return None;
    }
    let q = f.order();
    let mut s = 0;
    let mut m = q - 1;
    while m % 2 == 0 {
        m /= 2;
        s += 1;
    }
    let z = (1..q).map(|i| f.element(i)).find(|z| !f.is_square(z)).unwrap();
    let mut c = f.pow(&z, m);
    let mut x = f.pow(a, m.div_ceil(2));
    let mut t = f.pow(a, m);
    let mut r = s;
    while t != f.one() {
        let mut i = 0;
        let mut tt = t.clone();
        while tt != f.one() {
            tt = f.square(&tt);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(r - i - 1) {
            b = f.square(&b);
        }
        x = f.mul(&x, &b);
        c = f.square(&b);
        t = f.mul(&t, &c);
        r = i;
    }
    Some(x)
}

/// Image of `r` in the residue field of `v`, with `s = 1/t` at infinity.
pub fn reduce_at(k: &FunctionField, r: &RatFunc, v: &Place) -> Result<Poly> {
    let val = valuation(k, r, v);
    if val.is_some_and(|x| x < 0) {
        return Err(Error::Pole { what: "function".into(), place: v.label(k.fq(), k.var()) });
    }
    match v {
        Place::Infinity => {
            if val.is_none_or(|x| x > 0) {
                return Ok(Poly::zero());
            }
            let c = k.fq().div(r.num().lead(), r.den().lead()).unwrap();
            Ok(Poly::constant(c))
        }
        Place::Finite(f) => {
            let kv = ResidueField::new(k.fq(), f.clone())?;
            Ok(kv.reduce(r).expect("non-negative valuation"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn places_over_f2() {
        let f = Fq::new(2, 1).unwrap();
        let ps = places_up_to(&f, 3);
        let labels: Vec<String> = ps.iter().map(|p| p.label(&f, 't')).collect();
        assert_eq!(labels, ["inf", "t", "t+1", "t^2+t+1", "t^3+t+1", "t^3+t^2+1"]);
    }

    #[test]
    fn valuations() {
        let f = Fq::new(3, 1).unwrap();
        let k = FunctionField::new(f.clone());
        let t = k.t();
        assert_eq!(valuation(&k, &t, &Place::Infinity), Some(-1));
        let r = k.from_ints(&[1, 0, 2, 0, 1]);
        let v = Place::Finite(k.ring().from_ints(&[1, 0, 1]));
        assert_eq!(valuation(&k, &r, &v), Some(2));
        assert_eq!(valuation(&k, &k.zero(), &v), None);
    }

    #[test]
    fn reductions() {
        let f5 = Fq::new(5, 1).unwrap();
        let k = FunctionField::new(f5.clone());
        let v = Place::Finite(k.ring().from_ints(&[-1, 1]));
        assert_eq!(reduce_at(&k, &k.t(), &v).unwrap(), Poly::constant(FqElem(1)));
        let r = k.inv(&k.from_ints(&[1, 1])).unwrap();
        assert!(reduce_at(&k, &r, &Place::Infinity).unwrap().is_zero());
        assert!(reduce_at(&k, &k.t(), &Place::Infinity).is_err());

        let f2 = Fq::new(2, 1).unwrap();
        let k2 = FunctionField::new(f2);
        let v2 = Place::Finite(k2.ring().from_ints(&[1, 1, 1]));
        let r2 = k2.from_ints(&[0, 1, 1]);
        assert_eq!(reduce_at(&k2, &r2, &v2).unwrap(), Poly::constant(FqElem(1)));
    }

    #[test]
    fn residue_sqrt() {
        let f = Fq::new(3, 1).unwrap();
        let kv = ResidueField::new(&f, PolyRing::new(f.clone()).from_ints(&[2, 2, 0, 1])).unwrap();
        assert_eq!(kv.order(), 27);
        for i in 0..27 {
            let a = kv.element(i);
            let sq = kv.square(&a);
            let r = kv.sqrt(&sq).unwrap();
            assert_eq!(kv.square(&r), sq);
        }
    }
}
