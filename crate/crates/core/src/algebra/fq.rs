//! Finite fields F_{p^e} and their extensions, as discrete-log tables.
//!
//! An element is stored as an index: the base-p digits of its coordinate
//! vector, little-endian. A field built as an extension of another field
//! uses the nested encoding `c_0 + c_1 Q + c_2 Q^2 + ...` where `Q` is the
//! order of the subfield, so the subfield's elements keep their indices.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::numth::{checked_pow, is_prime, prime_divisors};
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

/// Largest field the user may ask for directly.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;
/// Largest table field built internally for point counting.
pub const MAX_TABLE_ORDER: u64 = 1 << 22;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FqElem(pub u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }
}

struct Inner {
    p: u32,
    q: u32,
    degree: u32,
    tower: Vec<u32>,
    base: Option<Fq>,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    trace_mask: u32,
    half: u32,
    primitive: u32,
    as_roots: OnceLock<Vec<u32>>,
}

/// A finite field. Cloning is cheap; equal signatures mean equal fields.
#[derive(Clone)]
pub struct Fq(Arc<Inner>);

type Key = (u32, Vec<u32>);

fn cache() -> &'static Mutex<HashMap<Key, Fq>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Fq>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.tower == other.0.tower)
    }
}
impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl Fq {
    /// F_{p^e} with the deterministic modulus; `p^e` must not exceed 2^16.
    pub fn new(p: u64, e: u32) -> Result<Fq> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::Parameter("extension degree must be positive".into()));
        }
        match checked_pow(p, e) {
            Some(q) if q <= MAX_FIELD_ORDER => {}
            q => {
                return Err(Error::FieldTooLarge {
                    q: q.map(|x| x as u128).unwrap_or(u128::MAX),
                    cap: MAX_FIELD_ORDER,
                })
            }
        }
        let prime = Self::prime(p as u32);
        if e == 1 {
            return Ok(prime);
        }
        let key = (p as u32, vec![e]);
        if let Some(f) = cache().lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let built = Fq::build_extension(&prime, e, vec![e])?;
        Ok(cache().lock().unwrap().entry(key).or_insert(built).clone())
    }

    fn prime(p: u32) -> Fq {
        let key = (p, vec![1]);
        if let Some(f) = cache().lock().unwrap().get(&key) {
            return f.clone();
        }
        let built = Fq::build_prime(p);
        cache().lock().unwrap().entry(key).or_insert(built).clone()
    }

    /// The extension of degree `n` of this field, with order capped at 2^22.
    ///
    /// The extension's modulus is the least monic irreducible of degree `n`
    /// over this field in the same ordering used for `Fq::new`.
    pub fn extension(&self, n: u32) -> Result<Fq> {
        if n == 0 {
            return Err(Error::Parameter("extension degree must be positive".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        match checked_pow(self.q() as u64, n) {
            Some(q) if q <= MAX_TABLE_ORDER => {}
            q => {
                return Err(Error::FieldTooLarge {
                    q: q.map(|x| x as u128).unwrap_or(u128::MAX),
                    cap: MAX_TABLE_ORDER,
                })
            }
        }
        let mut tower = self.0.tower.clone();
        if tower == [1] {
            tower = vec![n];
        } else {
            tower.push(n);
        }
        let key = (self.0.p, tower.clone());
        if let Some(f) = cache().lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let built = Fq::build_extension(self, n, tower)?;
        Ok(cache().lock().unwrap().entry(key).or_insert(built).clone())
    }

    fn build_prime(p: u32) -> Fq {
        let q = p;
        let order = q - 1;
        let primitive = if p == 2 {
            1
        } else {
            let ps = prime_divisors(order as u64);
            (2..p)
                .find(|&g| {
                    ps.iter()
                        .all(|&r| super::numth::pow_mod(g as u64, order as u64 / r, p as u64) != 1)
                })
                .expect("prime fields are cyclic")
        };
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![NONE; q as usize];
        let mut cur = 1u64;
        for i in 0..order as usize {
            exp[i] = cur as u32;
            log[cur as usize] = i as u32;
            cur = cur * primitive as u64 % p as u64;
        }
        for i in 0..order as usize {
            exp[i + order as usize] = exp[i];
        }
        let mut inner = Inner {
            p,
            q,
            degree: 1,
            tower: vec![1],
            base: None,
            modulus: vec![0, 1],
            exp,
            log,
            zech: Vec::new(),
            trace_mask: 1,
            half: order / 2,
            primitive,
            as_roots: OnceLock::new(),
        };
        inner.zech = zech_table(&inner);
        Fq(Arc::new(inner))
    }

    fn build_extension(base: &Fq, n: u32, tower: Vec<u32>) -> Result<Fq> {
        let qb = base.q() as u64;
        let q = qb.pow(n);
        let ring = PolyRing::new(base.clone());
        let mut modulus = None;
        for k in 0..qb.pow(n) {
            let mut c = Vec::with_capacity(n as usize + 1);
            let mut m = k;
            for _ in 0..n {
                c.push(FqElem((m % qb) as u32));
                m /= qb;
            }
            c.push(FqElem::ONE);
            let f = Poly::from_coeffs(c);
            if super::factor::is_irreducible(&ring, &f) {
                modulus = Some(f);
                break;
            }
        }
        let h = modulus.expect("irreducible polynomials exist in every degree");
        let order = q - 1;
        let ps = prime_divisors(order);
        let is_primitive = |g: &Poly| {
            ps.iter()
                .all(|&r| !ring.is_one(&ring.pow_mod(g, order / r, &h)))
        };
        let x = ring.x();
        let gamma = if is_primitive(&x) {
            x
        } else {
            (qb..q)
                .map(|idx| index_to_poly(idx, qb, n))
                .find(|g| is_primitive(g))
                .expect("multiplicative groups of finite fields are cyclic")
        };
        let shift = gamma == ring.x();
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![NONE; q as usize];
        let mut cur: Vec<u32> = vec![0; n as usize];
        cur[0] = 1;
        let hc: Vec<u32> = h.coeffs().iter().map(|e| e.0).collect();
        for i in 0..order as usize {
            let idx = encode(&cur, qb);
            debug_assert_eq!(log[idx as usize], NONE);
            exp[i] = idx;
            log[idx as usize] = i as u32;
            if shift {
                let top = cur[n as usize - 1];
                for j in (1..n as usize).rev() {
                    cur[j] = cur[j - 1];
                }
                cur[0] = 0;
                if top != 0 {
                    let t = FqElem(top);
                    for j in 0..n as usize {
                        let prod = base.mul(t, FqElem(hc[j]));
                        cur[j] = base.sub(FqElem(cur[j]), prod).0;
                    }
                }
            } else {
                let a = Poly::from_coeffs(cur.iter().map(|&v| FqElem(v)).collect());
                let prod = ring.rem(&ring.mul(&a, &gamma), &h);
                let mut next = vec![0u32; n as usize];
                for (j, c) in prod.coeffs().iter().enumerate() {
                    next[j] = c.0;
                }
                cur = next;
            }
        }
        for i in 0..order as usize {
            exp[i + order as usize] = exp[i];
        }
        let p = base.p();
        let mut inner = Inner {
            p,
            q: q as u32,
            degree: base.degree() * n,
            tower,
            base: Some(base.clone()),
            modulus: hc,
            exp,
            log,
            zech: Vec::new(),
            trace_mask: 0,
            half: (order / 2) as u32,
            primitive: gamma.coeffs().iter().rev().fold(0u64, |acc, c| acc * qb + c.0 as u64) as u32,
            as_roots: OnceLock::new(),
        };
        inner.zech = zech_table(&inner);
        let field = Fq(Arc::new(inner));
        if p == 2 {
            let mut mask = 0u32;
            for j in 0..field.degree() {
                if field.abs_trace(FqElem(1 << j)) == FqElem::ONE {
                    mask |= 1 << j;
                }
            }
            let mut inner = Arc::try_unwrap(field.0).ok().expect("fresh field has one owner");
            inner.trace_mask = mask;
            return Ok(Fq(Arc::new(inner)));
        }
        Ok(field)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Absolute degree over the prime field.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// The subfield this field was built over, if any.
    pub fn subfield(&self) -> Option<&Fq> {
        self.0.base.as_ref()
    }

    /// Coefficients of the defining polynomial over the immediate subfield
    /// (over F_p for fields from `Fq::new`), little-endian and monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Degree over the immediate subfield.
    pub fn relative_degree(&self) -> u32 {
        self.0.modulus.len() as u32 - 1
    }

    /// Order of the immediate subfield, or `p` for a prime field.
    pub fn subfield_order(&self) -> u32 {
        self.0.base.as_ref().map(|b| b.q()).unwrap_or(self.0.p)
    }

    /// The class of the variable modulo the defining polynomial.
    pub fn generator(&self) -> FqElem {
        if self.relative_degree() == 1 {
            // the modulus is the variable itself, so its class is zero
            self.from_i64(-(self.0.modulus[0] as i64))
        } else {
            FqElem(self.subfield_order())
        }
    }

    /// The primitive element used for the log tables.
    pub fn primitive(&self) -> FqElem {
        FqElem(self.0.primitive)
    }

    #[inline]
    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }

    #[inline]
    pub fn one(&self) -> FqElem {
        FqElem::ONE
    }

    pub fn from_i64(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn element(&self, index: u32) -> FqElem {
        assert!(index < self.0.q, "index out of range");
        FqElem(index)
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.0.q).map(FqElem)
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let i = &*self.0;
        if i.p == 2 {
            return FqElem(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let la = i.log[a.0 as usize];
        let lb = i.log[b.0 as usize];
        let order = i.q - 1;
        let d = if lb >= la { lb - la } else { lb + order - la };
        let z = i.zech[d as usize];
        if z == NONE {
            FqElem::ZERO
        } else {
            FqElem(i.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        let i = &*self.0;
        if i.p == 2 || a.0 == 0 {
            return a;
        }
        FqElem(i.exp[(i.log[a.0 as usize] + i.half) as usize])
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem::ZERO;
        }
        let i = &*self.0;
        FqElem(i.exp[(i.log[a.0 as usize] + i.log[b.0 as usize]) as usize])
    }

    #[inline]
    pub fn square(&self, a: FqElem) -> FqElem {
        self.mul(a, a)
    }

    #[inline]
    pub fn inv(&self, a: FqElem) -> Option<FqElem> {
        if a.0 == 0 {
            return None;
        }
        let i = &*self.0;
        let l = i.log[a.0 as usize];
        Some(FqElem(i.exp[((i.q - 1 - l) % (i.q - 1)) as usize]))
    }

    #[inline]
    pub fn div(&self, a: FqElem, b: FqElem) -> Option<FqElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FqElem, k: u64) -> FqElem {
        if k == 0 {
            return FqElem::ONE;
        }
        if a.0 == 0 {
            return FqElem::ZERO;
        }
        let i = &*self.0;
        let order = (i.q - 1) as u64;
        let l = i.log[a.0 as usize] as u64;
        FqElem(i.exp[((l * (k % order)) % order) as usize])
    }

    /// Integer power allowing negative exponents on units.
    pub fn pow_signed(&self, a: FqElem, k: i64) -> Option<FqElem> {
        if k >= 0 {
            Some(self.pow(a, k as u64))
        } else {
            self.inv(a).map(|ai| self.pow(ai, k.unsigned_abs()))
        }
    }

    /// Discrete log to the table's primitive element.
    #[inline]
    pub fn log(&self, a: FqElem) -> Option<u32> {
        if a.0 == 0 {
            None
        } else {
            Some(self.0.log[a.0 as usize])
        }
    }

    #[inline]
    pub fn exp(&self, k: u64) -> FqElem {
        let order = (self.0.q - 1) as u64;
        FqElem(self.0.exp[(k % order) as usize])
    }

    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, self.0.p as u64)
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: FqElem) -> FqElem {
        self.pow(a, (self.0.q / self.0.p) as u64)
    }

    /// Whether `a` is a square (always true in characteristic 2).
    #[inline]
    pub fn is_square(&self, a: FqElem) -> bool {
        self.0.p == 2 || a.0 == 0 || self.0.log[a.0 as usize] % 2 == 0
    }

    pub fn sqrt(&self, a: FqElem) -> Option<FqElem> {
        if a.0 == 0 {
            return Some(a);
        }
        if self.0.p == 2 {
            return Some(self.pth_root(a));
        }
        let l = self.0.log[a.0 as usize];
        if l % 2 == 1 {
            None
        } else {
            Some(FqElem(self.0.exp[(l / 2) as usize]))
        }
    }

    /// Quadratic character: 0, 1 or -1 (odd characteristic only).
    #[inline]
    pub fn legendre(&self, a: FqElem) -> i32 {
        if a.0 == 0 {
            0
        } else if self.0.log[a.0 as usize] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Absolute trace to F_p, computed by summing Frobenius conjugates.
    pub fn abs_trace(&self, a: FqElem) -> FqElem {
        let mut s = FqElem::ZERO;
        let mut c = a;
        for _ in 0..self.degree() {
            s = self.add(s, c);
            c = self.frobenius(c);
        }
        s
    }

    /// Absolute trace to F_2 as a bit (characteristic 2 only).
    #[inline]
    pub fn trace_bit(&self, a: FqElem) -> u32 {
        debug_assert_eq!(self.0.p, 2);
        (a.0 & self.0.trace_mask).count_ones() & 1
    }

    /// A root of `z^2 + z = c` in characteristic 2, if one exists.
    pub fn artin_schreier_root(&self, c: FqElem) -> Option<FqElem> {
        debug_assert_eq!(self.0.p, 2);
        let table = self.0.as_roots.get_or_init(|| {
            let mut t = vec![NONE; self.0.q as usize];
            for z in 0..self.0.q {
                let z = FqElem(z);
                let v = self.add(self.square(z), z);
                if t[v.0 as usize] == NONE {
                    t[v.0 as usize] = z.0;
                }
            }
            t
        });
        let r = table[c.0 as usize];
        (r != NONE).then_some(FqElem(r))
    }

    /// Coordinates over the immediate subfield, little-endian.
    pub fn to_subfield_coeffs(&self, a: FqElem) -> Vec<FqElem> {
        let qb = self.subfield_order();
        let mut m = a.0;
        let mut out = Vec::with_capacity(self.relative_degree() as usize);
        for _ in 0..self.relative_degree() {
            out.push(FqElem(m % qb));
            m /= qb;
        }
        out
    }

    /// Inverse of `to_subfield_coeffs`; `None` if a coefficient is out of range
    /// or there are too many coefficients.
    pub fn from_subfield_coeffs(&self, c: &[u32]) -> Option<FqElem> {
        let qb = self.subfield_order();
        if c.len() > self.relative_degree() as usize || c.iter().any(|&x| x >= qb) {
            return None;
        }
        Some(FqElem(c.iter().rev().fold(0u32, |acc, &x| acc * qb + x)))
    }

    /// Whether the element lies in the subfield of order `qs` (which must be
    /// a power of p whose exponent divides the degree).
    pub fn in_subfield(&self, a: FqElem, qs: u64) -> bool {
        self.pow(a, qs) == a
    }
}

fn encode(v: &[u32], qb: u64) -> u32 {
    v.iter().rev().fold(0u64, |acc, &c| acc * qb + c as u64) as u32
}

fn index_to_poly(idx: u64, qb: u64, n: u32) -> Poly {
    let mut c = Vec::with_capacity(n as usize);
    let mut m = idx;
    for _ in 0..n {
        c.push(FqElem((m % qb) as u32));
        m /= qb;
    }
    Poly::from_coeffs(c)
}

fn zech_table(inner: &Inner) -> Vec<u32> {
    if inner.p == 2 {
        return Vec::new();
    }
    let order = inner.q - 1;
    let p = inner.p;
    let mut z = vec![NONE; order as usize];
    for k in 0..order {
        let x = inner.exp[k as usize];
        let y = if x % p == p - 1 { x - (p - 1) } else { x + 1 };
        if y != 0 {
            z[k as usize] = inner.log[y as usize];
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_t() {
        let f = Fq::new(5, 1).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.generator(), FqElem::ZERO);
    }

    #[test]
    fn nine_has_no_root() {
        let f = Fq::new(3, 2).unwrap();
        let m = f.modulus().to_vec();
        assert_eq!(m.len(), 3);
        for x in 0..3u32 {
            let v = (m[0] + m[1] * x + m[2] * x * x) % 3;
            assert_ne!(v, 0);
        }
        // x^2 + 1 is the least irreducible quadratic over F_3
        assert_eq!(m, vec![1, 0, 1]);
    }

    #[test]
    fn sixteen_frobenius_fixed() {
        let f = Fq::new(2, 4).unwrap();
        for a in f.elements() {
            assert_eq!(f.pow(a, 16), a);
        }
        // x^4 + x + 1
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Fq::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(Fq::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(Fq::new(2, 16).is_ok());
    }

    #[test]
    fn field_axioms_small() {
        for (p, e) in [(2, 1), (2, 3), (3, 2), (5, 1), (7, 2), (2, 8)] {
            let f = Fq::new(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), FqElem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FqElem::ONE);
                }
                let fa = f.frobenius(a);
                let mut it = a;
                for _ in 0..e {
                    it = f.frobenius(it);
                }
                assert_eq!(it, a);
                for b in f.elements().step_by(7) {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(fa, f.frobenius(b)));
                    assert_eq!(f.frobenius(f.mul(a, b)), f.mul(fa, f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn nested_extension_embeds_subfield() {
        let f9 = Fq::new(3, 2).unwrap();
        let f81 = f9.extension(2).unwrap();
        assert_eq!(f81.q(), 81);
        for a in f9.elements() {
            for b in f9.elements() {
                assert_eq!(f81.mul(a, b), f9.mul(a, b));
                assert_eq!(f81.add(a, b), f9.add(a, b));
            }
        }
        for a in f81.elements() {
            assert_eq!(f81.in_subfield(a, 9), a.0 < 9);
        }
    }

    #[test]
    fn trace_bits_agree() {
        let f = Fq::new(2, 5).unwrap();
        for a in f.elements() {
            assert_eq!(FqElem(f.trace_bit(a)), f.abs_trace(a));
        }
        let g = f.extension(3).unwrap();
        for a in g.elements() {
            assert_eq!(FqElem(g.trace_bit(a)), g.abs_trace(a));
        }
    }

    #[test]
    fn cache_returns_same_field() {
        let a = Fq::new(7, 2).unwrap();
        let b = Fq::new(7, 2).unwrap();
        assert!(Arc::ptr_eq(&a.0, &b.0));
        assert_eq!(a.extension(2).unwrap(), b.extension(2).unwrap());
    }
}
