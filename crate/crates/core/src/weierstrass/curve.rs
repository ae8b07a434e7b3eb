//! Curves over F_q(t): twists, Hasse invariant, base change, p-torsion.

use super::model::{Transform, Weierstrass};
use crate::algebra::factor::factor;
use crate::algebra::numth::gcd;
use crate::algebra::{Field, FunctionField, Poly, RatFunc};
use crate::error::{Error, Result};

/// An elliptic curve over F_q(t).
pub type Curve = Weierstrass<FunctionField>;

impl Curve {
    /// Build a curve, rejecting singular models.
    pub fn checked(k: FunctionField, a: [RatFunc; 5]) -> Result<Curve> {
        let e = Weierstrass::new(k, a);
        if !e.is_smooth() {
            return Err(Error::Singular);
        }
        Ok(e)
    }

    /// Build from integer coefficient lists (little-endian in t).
    pub fn from_coeff_lists(k: &FunctionField, a: [&[i64]; 5]) -> Curve {
        Weierstrass::new(k.clone(), a.map(|c| k.from_ints(c)))
    }

    pub fn p(&self) -> u32 {
        self.field.fq().p()
    }

    pub fn q(&self) -> u32 {
        self.field.fq().q()
    }

    pub fn j_invariant(&self) -> Option<RatFunc> {
        self.invariants().j
    }

    pub fn is_isotrivial(&self) -> bool {
        self.j_invariant().is_some_and(|j| j.is_constant())
    }

    pub fn is_polynomial(&self) -> bool {
        self.a.iter().all(|c| c.is_polynomial())
    }

    /// Scale by the lcm of the denominators so all coefficients become
    /// polynomials; returns the transform used.
    pub fn integral_model(&self) -> (Curve, Transform<RatFunc>) {
        let k = &self.field;
        let ring = k.ring();
        let mut l = ring.one();
        for c in &self.a {
            let g = ring.gcd(&l, c.den());
            l = ring.div_exact(&ring.mul(&l, c.den()), &g).unwrap();
        }
        let tau = Transform::scaling(k, k.inv(&k.from_poly(l)).unwrap());
        (self.apply(&tau).unwrap(), tau)
    }
}

/// `a_i -> a_i^p`.
pub fn frobenius_twist(e: &Curve) -> Curve {
    let k = &e.field;
    e.map(k.clone(), |c| k.frobenius(c))
}

/// Substitute `t = u^d`; the new variable prints as `u`.
pub fn base_change_pow(e: &Curve, d: u32) -> Result<Curve> {
    if d == 0 || d % e.p() == 0 {
        return Err(Error::Parameter(format!("d = {d} must be positive and prime to p")));
    }
    let k = e.field.clone().with_var('u');
    let src = &e.field;
    Ok(e.map(k, |c| src.inflate(c, d as usize)))
}

/// Re-embed coefficients in F_{q^m}.
pub fn extend_constants(e: &Curve, m: u32) -> Result<Curve> {
    let big = e.field.fq().extension(m)?;
    let k = FunctionField::new(big).with_var(e.field.var());
    let src = &e.field;
    Ok(e.map(k.clone(), |c| src.map_coeffs(c, &k, |x| x)))
}

/// `A(E, ω)`: `a1` in characteristic 2, otherwise the `x^{p-1}` coefficient
/// of `f(x)^{(p-1)/2}` for the model `y^2 = f(x)` obtained by completing
/// the square.
pub fn hasse_invariant(e: &Curve) -> RatFunc {
    let k = &e.field;
    let p = e.p();
    if p == 2 {
        return e.a1().clone();
    }
    let [b2, b4, b6, _] = e.b_invariants();
    let inv2 = k.inv(&k.from_i64(2)).unwrap();
    let inv4 = k.square(&inv2);
    // f(x) = x^3 + (b2/4) x^2 + (b4/2) x + b6/4
    let f = vec![k.mul(&b6, &inv4), k.mul(&b4, &inv2), k.mul(&b2, &inv4), k.one()];
    let mut acc = vec![k.one()];
    for _ in 0..(p - 1) / 2 {
        let mut next = vec![k.zero(); acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                next[i + j] = k.add(&next[i + j], &k.mul(a, b));
            }
        }
        acc = next;
    }
    acc.get(p as usize - 1).cloned().unwrap_or_else(|| k.zero())
}

/// Whether `r` is a `(p-1)`st power in F_q(t)^×.
pub fn is_pm1_power(k: &FunctionField, r: &RatFunc) -> bool {
    if r.is_zero() {
        return false;
    }
    let p = k.fq().p() as u64;
    let q = k.fq().q() as u64;
    let n = p - 1;
    let ring = k.ring();
    let exps_ok = |x: &Poly| factor(ring, x).1.iter().all(|(_, e)| *e as u64 % n == 0);
    if !exps_ok(r.num()) || (!r.den().is_constant() && !exps_ok(r.den())) {
        return false;
    }
    let kappa = k.fq().div(r.num().lead(), r.den().lead()).unwrap();
    k.fq().pow(kappa, (q - 1) / gcd(q - 1, n)) == k.fq().one()
}

/// The p-torsion criterion: `j ∈ K^p` and `A` a `(p-1)`st power.
pub fn has_p_torsion(e: &Curve) -> Result<bool> {
    let k = &e.field;
    let j = e.j_invariant().ok_or(Error::Singular)?;
    if j.is_constant() {
        return Err(Error::Isotrivial);
    }
    let a = hasse_invariant(e);
    if a.is_zero() {
        return Err(Error::Isotrivial);
    }
    Ok(k.pth_root(&j).is_some() && is_pm1_power(k, &a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;

    fn k(p: u64) -> FunctionField {
        FunctionField::new(Fq::new(p, 1).unwrap())
    }

    #[test]
    fn hasse_examples() {
        let k2 = k(2);
        let e7 = Curve::from_coeff_lists(&k2, [&[1], &[], &[0, 1], &[], &[]]);
        assert_eq!(hasse_invariant(&e7), k2.one());

        let k3 = k(3);
        // y^2 = x(x+1)(x+t) = x^3 + (1+t) x^2 + t x
        let leg = Curve::from_coeff_lists(&k3, [&[], &[1, 1], &[], &[0, 1], &[]]);
        assert_eq!(hasse_invariant(&leg), k3.from_ints(&[1, 1]));
        let e3 = Curve::from_coeff_lists(&k3, [&[], &[], &[], &[], &[0, 1]]);
        assert!(hasse_invariant(&e3).is_zero());
    }

    #[test]
    fn hasse_weight() {
        let k5 = k(5);
        let e = Curve::from_coeff_lists(&k5, [&[1], &[0, 1], &[2], &[1, 1], &[0, 0, 1]]);
        let lam = k5.from_i64(3);
        let e2 = e.apply(&Transform::scaling(&k5, k5.inv(&lam).unwrap())).unwrap();
        // scaling u = 1/λ multiplies a_i by λ^i and A by λ^{p-1}
        assert_eq!(hasse_invariant(&e2), k5.mul(&hasse_invariant(&e), &k5.pow(&lam, 4)));
    }

    #[test]
    fn twist_and_base_change() {
        let k5 = k(5);
        let e3 = Curve::from_coeff_lists(&k5, [&[], &[], &[], &[], &[0, 1]]);
        let tw = frobenius_twist(&e3);
        assert_eq!(tw.a6(), &k5.t_pow(5));
        let e4 = Curve::from_coeff_lists(&k5, [&[], &[], &[], &[1], &[0, 1]]);
        let j = e4.j_invariant().unwrap();
        assert_eq!(frobenius_twist(&e4).j_invariant().unwrap(), k5.pow(&j, 5));

        let k2 = k(2);
        let e7 = Curve::from_coeff_lists(&k2, [&[1], &[], &[0, 1], &[], &[]]);
        let b = base_change_pow(&e7, 2);
        assert!(b.is_err());
        let k5 = k(5);
        let e7 = Curve::from_coeff_lists(&k5, [&[1], &[], &[0, 1], &[], &[]]);
        let b = base_change_pow(&e7, 2).unwrap();
        assert_eq!(b.a3(), &b.field.from_ints(&[0, 0, 1]));
        assert_eq!(b.field.var(), 'u');
        assert_eq!(base_change_pow(&e7, 1).unwrap().a, e7.a);
    }

    #[test]
    fn p_torsion() {
        let k2 = k(2);
        let e7 = Curve::from_coeff_lists(&k2, [&[1], &[], &[0, 1], &[], &[]]);
        assert_eq!(has_p_torsion(&e7), Ok(false));

        let k3 = k(3);
        // a curve with a1 = a3 = 0 whose Hasse invariant is a square, twisted
        // so that j becomes a cube
        let e = Curve::from_coeff_lists(&k3, [&[], &[1], &[], &[], &[0, 1]]);
        assert_eq!(hasse_invariant(&e), k3.one());
        let tw = frobenius_twist(&e);
        assert_eq!(has_p_torsion(&tw), Ok(true));
        assert_eq!(has_p_torsion(&e), Ok(false));

        let iso = Curve::from_coeff_lists(&k3, [&[], &[], &[], &[1], &[0, 1]]);
        assert_eq!(has_p_torsion(&iso), Err(Error::Isotrivial));
    }
}
