//! Dense univariate polynomials over a table field.

use super::fq::{Fq, FqElem};

/// Coefficients little-endian with no trailing zeros; the zero polynomial
/// has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    c: Vec<FqElem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn from_coeffs(mut c: Vec<FqElem>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn constant(a: FqElem) -> Poly {
        Poly::from_coeffs(vec![a])
    }

    pub fn monomial(a: FqElem, k: usize) -> Poly {
        let mut c = vec![FqElem::ZERO; k + 1];
        c[k] = a;
        Poly::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<FqElem> {
        self.c
    }

    /// `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.c.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn lead(&self) -> FqElem {
        self.c.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FqElem::ONE
    }

    /// Substitute `t -> t^d`.
    pub fn inflate(&self, d: usize) -> Poly {
        if self.is_zero() || d == 1 {
            return self.clone();
        }
        let mut c = vec![FqElem::ZERO; (self.c.len() - 1) * d + 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[i * d] = a;
        }
        Poly { c }
    }

    /// Reverse the coefficient list against degree `n` (`t^n f(1/t)`).
    pub fn reverse(&self, n: usize) -> Poly {
        let mut c = vec![FqElem::ZERO; n + 1];
        for (i, &a) in self.c.iter().enumerate() {
            assert!(i <= n, "reverse below the degree");
            c[n - i] = a;
        }
        Poly::from_coeffs(c)
    }

    /// Multiplicity of `t` as a factor.
    pub fn low_order(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }
}

/// Arithmetic context: a polynomial ring F_q[t].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    f: Fq,
}

impl PolyRing {
    pub fn new(f: Fq) -> PolyRing {
        PolyRing { f }
    }

    pub fn field(&self) -> &Fq {
        &self.f
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn one(&self) -> Poly {
        Poly::constant(FqElem::ONE)
    }

    pub fn x(&self) -> Poly {
        Poly::monomial(FqElem::ONE, 1)
    }

    pub fn from_ints(&self, c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&v| self.f.from_i64(v)).collect())
    }

    pub fn is_one(&self, a: &Poly) -> bool {
        a.c.len() == 1 && a.c[0] == FqElem::ONE
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let (long, short) = if a.c.len() >= b.c.len() { (a, b) } else { (b, a) };
        let mut c = long.c.clone();
        for (i, &x) in short.c.iter().enumerate() {
            c[i] = self.f.add(c[i], x);
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly { c: a.c.iter().map(|&x| self.f.neg(x)).collect() }
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.c.len().max(b.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.f.sub(a.coeff(i), b.coeff(i)));
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, a: &Poly, s: FqElem) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { c: a.c.iter().map(|&x| self.f.mul(x, s)).collect() }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, a: &Poly, k: usize) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![FqElem::ZERO; k];
        c.extend_from_slice(&a.c);
        Poly { c }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        if a.c.len() >= 48 && b.c.len() >= 48 {
            return self.karatsuba(a, b);
        }
        self.schoolbook(&a.c, &b.c)
    }

    fn schoolbook(&self, a: &[FqElem], b: &[FqElem]) -> Poly {
        let f = &self.f;
        let mut c = vec![FqElem::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] = f.add(c[i + j], f.mul(x, y));
                }
            }
        }
        Poly::from_coeffs(c)
    }

    fn karatsuba(&self, a: &Poly, b: &Poly) -> Poly {
        let m = a.c.len().max(b.c.len()) / 2;
        let split = |p: &Poly| {
            if p.c.len() <= m {
                (p.clone(), Poly::zero())
            } else {
                (Poly::from_coeffs(p.c[..m].to_vec()), Poly::from_coeffs(p.c[m..].to_vec()))
            }
        };
        let (a0, a1) = split(a);
        let (b0, b1) = split(b);
        let z0 = self.mul(&a0, &b0);
        let z2 = self.mul(&a1, &b1);
        let z1 = self.sub(&self.sub(&self.mul(&self.add(&a0, &a1), &self.add(&b0, &b1)), &z0), &z2);
        self.add(&self.add(&z0, &self.shift(&z1, m)), &self.shift(&z2, 2 * m))
    }

    pub fn square(&self, a: &Poly) -> Poly {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &Poly, mut k: u64) -> Poly {
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

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, a: &Poly, b: &Poly) -> Option<(Poly, Poly)> {
        let db = b.deg()?;
        if a.c.len() < b.c.len() {
            return Some((Poly::zero(), a.clone()));
        }
        let f = &self.f;
        let inv = f.inv(b.lead()).expect("nonzero leading coefficient");
        let mut r = a.c.clone();
        let mut q = vec![FqElem::ZERO; a.c.len() - db];
        for i in (0..q.len()).rev() {
            let top = r[i + db];
            if top.is_zero() {
                continue;
            }
            let coef = f.mul(top, inv);
            q[i] = coef;
            for (j, &bj) in b.c.iter().enumerate() {
                if !bj.is_zero() {
                    r[i + j] = f.sub(r[i + j], f.mul(coef, bj));
                }
            }
        }
        r.truncate(db);
        Some((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Poly {
        self.divrem(a, b).expect("division by zero polynomial").1
    }

    /// Exact quotient, `None` if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(a, b)?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let inv = self.f.inv(a.lead()).unwrap();
        self.scale(a, inv)
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `s a + t b = g` and `g` monic.
    pub fn xgcd(&self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1).unwrap();
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = self.f.inv(r0.lead()).unwrap();
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    /// Inverse of `a` modulo `m`, if they are coprime.
    pub fn inv_mod(&self, a: &Poly, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.xgcd(&self.rem(a, m), m);
        self.is_one(&g).then(|| self.rem(&s, m))
    }

    pub fn mul_mod(&self, a: &Poly, b: &Poly, m: &Poly) -> Poly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly, mut k: u64, m: &Poly) -> Poly {
        let mut r = self.rem(&self.one(), m);
        let mut b = self.rem(a, m);
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul_mod(&r, &b, m);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul_mod(&b, &b, m);
            }
        }
        r
    }

    /// `a^(q^k) mod m` by repeated `q`-th powering.
    pub fn frobenius_pow_mod(&self, a: &Poly, k: u32, m: &Poly) -> Poly {
        let mut r = self.rem(a, m);
        for _ in 0..k {
            r = self.pow_mod(&r, self.f.q() as u64, m);
        }
        r
    }

    pub fn eval(&self, a: &Poly, x: FqElem) -> FqElem {
        let f = &self.f;
        a.c.iter().rev().fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self, a: &Poly) -> Poly {
        if a.c.len() <= 1 {
            return Poly::zero();
        }
        let c = a.c[1..]
            .iter()
            .enumerate()
            .map(|(i, &x)| self.f.mul(x, self.f.from_i64(i as i64 + 1)))
            .collect();
        Poly::from_coeffs(c)
    }

    /// `b` with `b^p = a`, when `a` is a polynomial in `t^p`.
    pub fn pth_root(&self, a: &Poly) -> Option<Poly> {
        let p = self.f.p() as usize;
        if a.c.iter().enumerate().any(|(i, x)| i % p != 0 && !x.is_zero()) {
            return None;
        }
        let c = a.c.iter().step_by(p).map(|&x| self.f.pth_root(x)).collect();
        Some(Poly::from_coeffs(c))
    }

    /// Apply the coefficient Frobenius `c -> c^p` (not a ring map on t).
    pub fn map_coeffs(&self, a: &Poly, g: impl Fn(FqElem) -> FqElem) -> Poly {
        Poly::from_coeffs(a.c.iter().map(|&x| g(x)).collect())
    }

    /// Composition `a(b(t))`.
    pub fn compose(&self, a: &Poly, b: &Poly) -> Poly {
        a.c.iter().rev().fold(Poly::zero(), |acc, &c| {
            self.add(&self.mul(&acc, b), &Poly::constant(c))
        })
    }

    /// Largest `k` with `f^k | a`, and the cofactor; `a` must be nonzero and
    /// `f` non-constant.
    pub fn valuation(&self, a: &Poly, f: &Poly) -> (u32, Poly) {
        assert!(!a.is_zero() && !f.is_constant());
        let mut k = 0;
        let mut cur = a.clone();
        while let Some(q) = self.div_exact(&cur, f) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, e: u32) -> PolyRing {
        PolyRing::new(Fq::new(p, e).unwrap())
    }

    #[test]
    fn divrem_identity() {
        let r = ring(5, 1);
        let a = r.from_ints(&[1, 2, 3, 4, 1, 3]);
        let b = r.from_ints(&[2, 0, 1]);
        let (q, rem) = r.divrem(&a, &b).unwrap();
        assert_eq!(r.add(&r.mul(&q, &b), &rem), a);
        assert!(rem.deg().unwrap() < 2);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let r = ring(3, 2);
        let f = r.field().clone();
        let a = Poly::from_coeffs((0..130u32).map(|i| FqElem((i * 7 + 3) % f.q())).collect());
        let b = Poly::from_coeffs((0..97u32).map(|i| FqElem((i * i + 1) % f.q())).collect());
        assert_eq!(r.mul(&a, &b), r.schoolbook(a.coeffs(), b.coeffs()));
    }

    #[test]
    fn gcd_and_xgcd() {
        let r = ring(3, 1);
        let a = r.mul(&r.from_ints(&[1, 0, 1]), &r.from_ints(&[1, 1]));
        let b = r.mul(&r.from_ints(&[1, 0, 1]), &r.from_ints(&[2, 1]));
        assert_eq!(r.gcd(&a, &b), r.from_ints(&[1, 0, 1]));
        let (g, s, t) = r.xgcd(&a, &b);
        assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g);
    }

    #[test]
    fn square_over_f3() {
        let r = ring(3, 1);
        let f = r.from_ints(&[1, 0, 2, 0, 1]);
        let g = r.from_ints(&[1, 0, 1]);
        assert_eq!(r.valuation(&f, &g), (2, r.one()));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::zero().deg(), None);
        assert_eq!(Poly::constant(FqElem::ONE).deg(), Some(0));
    }
}
