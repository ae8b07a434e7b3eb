//! A minimal field interface so that curve arithmetic can run over F_q,
//! residue fields F_q[t]/(f) and F_q(t) alike.

use std::fmt::Debug;
use std::hash::Hash;

pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> u32;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut r = self.one();
        let mut b = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(&r, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.square(&b);
            }
        }
        r
    }

    fn scale_int(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        self.mul(a, &self.from_i64(n))
    }
}

/// A field with finitely many elements that can be enumerated.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    /// The element with the given index, for `index < order()`.
    fn element(&self, index: u64) -> Self::Elem;
    /// Square test (odd characteristic).
    fn is_square(&self, a: &Self::Elem) -> bool;
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Absolute trace to F_2 (characteristic 2).
    fn trace_f2(&self, a: &Self::Elem) -> u32;
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem;
}

impl Field for super::fq::Fq {
    type Elem = super::fq::FqElem;

    fn zero(&self) -> Self::Elem {
        super::fq::FqElem::ZERO
    }
    fn one(&self) -> Self::Elem {
        super::fq::FqElem::ONE
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        super::fq::Fq::from_i64(self, n)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        super::fq::Fq::add(self, *a, *b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        super::fq::Fq::neg(self, *a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        super::fq::Fq::sub(self, *a, *b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        super::fq::Fq::mul(self, *a, *b)
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        super::fq::Fq::inv(self, *a)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u32 {
        self.p()
    }
    fn pow(&self, a: &Self::Elem, k: u64) -> Self::Elem {
        super::fq::Fq::pow(self, *a, k)
    }
}

impl FiniteField for super::fq::Fq {
    fn order(&self) -> u64 {
        self.q() as u64
    }
    fn element(&self, index: u64) -> Self::Elem {
        super::fq::Fq::element(self, index as u32)
    }
    fn is_square(&self, a: &Self::Elem) -> bool {
        super::fq::Fq::is_square(self, *a)
    }
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem> {
        super::fq::Fq::sqrt(self, *a)
    }
    fn trace_f2(&self, a: &Self::Elem) -> u32 {
        self.trace_bit(*a)
    }
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        super::fq::Fq::pth_root(self, *a)
    }
}
