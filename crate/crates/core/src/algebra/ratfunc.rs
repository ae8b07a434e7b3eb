//! The rational function field F_q(t).

use super::field::Field;
use super::fq::{Fq, FqElem};
use super::poly::{Poly, PolyRing};

/// `num/den` with `gcd = 1` and `den` monic; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, if the function is constant.
    pub fn constant_value(&self) -> Option<FqElem> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    /// `deg num − deg den`, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.deg()? as i64 - self.den.deg().unwrap() as i64)
    }

    /// `max(deg num, deg den)`.
    pub fn height(&self) -> usize {
        self.num.deg().unwrap_or(0).max(self.den.deg().unwrap_or(0))
    }
}

/// F_q(t) as an arithmetic context. `var` only affects printing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionField {
    ring: PolyRing,
    var: char,
}

impl FunctionField {
    pub fn new(f: Fq) -> FunctionField {
        FunctionField { ring: PolyRing::new(f), var: 't' }
    }

    pub fn with_var(mut self, var: char) -> FunctionField {
        self.var = var;
        self
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn fq(&self) -> &Fq {
        self.ring.field()
    }

    pub fn from_poly(&self, p: Poly) -> RatFunc {
        RatFunc { num: p, den: self.ring.one() }
    }

    pub fn constant(&self, c: FqElem) -> RatFunc {
        self.from_poly(Poly::constant(c))
    }

    pub fn t(&self) -> RatFunc {
        self.from_poly(self.ring.x())
    }

    pub fn t_pow(&self, k: i64) -> RatFunc {
        let m = Poly::monomial(FqElem::ONE, k.unsigned_abs() as usize);
        if k >= 0 {
            self.from_poly(m)
        } else {
            RatFunc { num: self.ring.one(), den: m }
        }
    }

    pub fn from_ints(&self, c: &[i64]) -> RatFunc {
        self.from_poly(self.ring.from_ints(c))
    }

    /// Build a reduced fraction; `None` if `den` is zero.
    pub fn fraction(&self, num: Poly, den: Poly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc { num, den: self.ring.one() });
        }
        let g = self.ring.gcd(&num, &den);
        let (mut n, mut d) = if self.ring.is_one(&g) {
            (num, den)
        } else {
            (self.ring.div_exact(&num, &g).unwrap(), self.ring.div_exact(&den, &g).unwrap())
        };
        let lc = d.lead();
        if lc != FqElem::ONE {
            let inv = self.fq().inv(lc).unwrap();
            n = self.ring.scale(&n, inv);
            d = self.ring.scale(&d, inv);
        }
        Some(RatFunc { num: n, den: d })
    }

    /// Substitute `t -> t^d`.
    pub fn inflate(&self, a: &RatFunc, d: usize) -> RatFunc {
        RatFunc { num: a.num.inflate(d), den: a.den.inflate(d) }
    }

    /// Substitute `t -> 1/t`.
    pub fn invert_variable(&self, a: &RatFunc) -> RatFunc {
        if a.is_zero() {
            return a.clone();
        }
        let dn = a.num.deg().unwrap();
        let dd = a.den.deg().unwrap();
        let n = dn.max(dd);
        let num = a.num.reverse(n);
        let den = a.den.reverse(n);
        self.fraction(num, den).unwrap()
    }

    /// Apply a map on coefficients (a field automorphism or embedding into
    /// `target`), keeping the result reduced.
    pub fn map_coeffs(&self, a: &RatFunc, target: &FunctionField, g: impl Fn(FqElem) -> FqElem) -> RatFunc {
        let num = Poly::from_coeffs(a.num.coeffs().iter().map(|&x| g(x)).collect());
        let den = Poly::from_coeffs(a.den.coeffs().iter().map(|&x| g(x)).collect());
        target.fraction(num, den).unwrap()
    }

    /// Substitute `t -> c t` for a constant `c`.
    pub fn scale_variable(&self, a: &RatFunc, c: FqElem) -> RatFunc {
        let f = self.fq();
        let sc = |p: &Poly| {
            let mut pw = FqElem::ONE;
            let mut out = Vec::with_capacity(p.coeffs().len());
            for &x in p.coeffs() {
                out.push(f.mul(x, pw));
                pw = f.mul(pw, c);
            }
            Poly::from_coeffs(out)
        };
        self.fraction(sc(&a.num), sc(&a.den)).unwrap()
    }

    pub fn pow_signed(&self, a: &RatFunc, k: i64) -> Option<RatFunc> {
        if k >= 0 {
            Some(self.pow(a, k as u64))
        } else {
            self.inv(a).map(|b| self.pow(&b, k.unsigned_abs()))
        }
    }

    /// Coefficient-wise Frobenius `c -> c^p` composed with `t -> t^p`,
    /// i.e. `a -> a^p`.
    pub fn frobenius(&self, a: &RatFunc) -> RatFunc {
        let p = self.fq().p() as u64;
        self.pow(a, p)
    }

    /// `b` with `b^p = a`, when one exists.
    pub fn pth_root(&self, a: &RatFunc) -> Option<RatFunc> {
        let n = self.ring.pth_root(&a.num)?;
        let d = self.ring.pth_root(&a.den)?;
        self.fraction(n, d)
    }

    pub fn eval(&self, a: &RatFunc, x: FqElem) -> Option<FqElem> {
        let d = self.ring.eval(&a.den, x);
        let n = self.ring.eval(&a.num, x);
        self.fq().div(n, d)
    }
}

impl Field for FunctionField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc { num: Poly::zero(), den: self.ring.one() }
    }

    fn one(&self) -> RatFunc {
        self.from_poly(self.ring.one())
    }

    fn from_i64(&self, n: i64) -> RatFunc {
        self.constant(self.fq().from_i64(n))
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = &self.ring;
        if a.den == b.den {
            return self.fraction(r.add(&a.num, &b.num), a.den.clone()).unwrap();
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.fraction(num, r.mul(&a.den, &b.den)).unwrap()
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc { num: self.ring.neg(&a.num), den: a.den.clone() }
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = &self.ring;
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        if a.is_polynomial() && b.is_polynomial() {
            let n = r.mul(&a.num, &b.num);
            return RatFunc { num: n, den: r.one() };
        }
        // cross-cancel before multiplying to keep sizes small
        let g1 = r.gcd(&a.num, &b.den);
        let g2 = r.gcd(&b.num, &a.den);
        let an = r.div_exact(&a.num, &g1).unwrap();
        let bd = r.div_exact(&b.den, &g1).unwrap();
        let bn = r.div_exact(&b.num, &g2).unwrap();
        let ad = r.div_exact(&a.den, &g2).unwrap();
        self.fraction(r.mul(&an, &bn), r.mul(&ad, &bd)).unwrap()
    }

    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.is_zero() {
            return None;
        }
        self.fraction(a.den.clone(), a.num.clone())
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u32 {
        self.fq().p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_is_kept() {
        let k = FunctionField::new(Fq::new(5, 1).unwrap());
        let t = k.t();
        let one = k.one();
        let a = k.div(&k.mul(&t, &t), &k.add(&t, &one)).unwrap();
        let b = k.div(&k.add(&t, &one), &t).unwrap();
        let c = k.mul(&a, &b);
        assert_eq!(c, t);
        let d = k.add(&a, &k.neg(&a));
        assert!(d.is_zero());
        assert!(d.den().coeffs() == [FqElem::ONE]);
    }

    #[test]
    fn invert_variable_round_trip() {
        let k = FunctionField::new(Fq::new(3, 2).unwrap());
        let a = k.fraction(k.ring().from_ints(&[1, 2, 0, 1]), k.ring().from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(k.invert_variable(&k.invert_variable(&a)), a);
    }
}
