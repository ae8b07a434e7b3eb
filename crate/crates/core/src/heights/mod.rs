//! Naive and canonical heights, the height pairing, and the explicit
//! points on the Legendre-type family.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::factor::factor;
use crate::algebra::qmat::QMatrix;
use crate::algebra::{Field, Fq, FqElem, FunctionField, Poly, PolyRing, RatFunc};
use crate::error::{Error, Result};
use crate::local::global::torsion_bound_from;
use crate::local::global_data;
use crate::weierstrass::{Curve, CurvePoint};

pub type Point = CurvePoint<RatFunc>;

/// Largest x-coordinate degree the doubling loop will build.
pub const DEGREE_BUDGET: usize = 1 << 18;

/// `max(deg num, deg den)` of `x(P)`.
pub fn naive_height(p: &Point) -> Result<u64> {
    match p {
        CurvePoint::Infinity => Err(Error::Parameter("the point at infinity has no naive height".into())),
        CurvePoint::Affine(x, _) => Ok(x.height() as u64),
    }
}

/// `h(2^n P) / 4^n` with the last bracket as an error estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeightValue {
    pub value: BigRational,
    pub error: BigRational,
    pub iterations: u32,
    /// The limit, when the doubling defects `h(2Q) - 4h(Q)` have settled to
    /// a constant `δ`: then the limit is `h(2^n P)/4^n + δ / (3·4^n)`.
    pub exact: Option<BigRational>,
}

impl HeightValue {
    fn zero(iterations: u32) -> HeightValue {
        HeightValue { value: BigRational::zero(), error: BigRational::zero(), iterations, exact: Some(BigRational::zero()) }
    }

    /// The exact limit when known, else the approximation.
    pub fn best(&self) -> &BigRational {
        self.exact.as_ref().unwrap_or(&self.value)
    }

    pub fn to_f64(&self) -> f64 {
        self.best().to_f64().unwrap_or(f64::NAN)
    }
}

/// x-only doubling on a polynomial model, cancelling common factors only
/// at the primes of bad reduction (the only possible ones).
struct Doubler {
    ring: PolyRing,
    b: [Poly; 4],
    bad: Vec<Poly>,
}

impl Doubler {
    fn new(e: &Curve) -> Result<Doubler> {
        if !e.is_polynomial() {
            return Err(Error::Parameter("heights need a model with polynomial coefficients".into()));
        }
        let ring = e.field.ring().clone();
        let b = e.b_invariants().map(|c| c.num().clone());
        let delta = e.discriminant();
        let bad = factor(&ring, delta.num()).1.into_iter().map(|(f, _)| f).collect();
        Ok(Doubler { ring, b, bad })
    }

    /// `x(2Q)` from `x(Q) = n/d`; `None` when `2Q = O`.
    fn double(&self, n: &Poly, d: &Poly) -> Option<(Poly, Poly)> {
        let r = &self.ring;
        let f = r.field();
        let [b2, b4, b6, b8] = &self.b;
        let n2 = r.square(n);
        let d2 = r.square(d);
        let nd = r.mul(n, d);
        let d3 = r.mul(&d2, d);
        let c = |k: i64, p: &Poly| r.scale(p, f.from_i64(k));
        let num = r.sub(
            &r.sub(&r.sub(&r.square(&n2), &r.mul(b4, &r.mul(&n2, &d2))), &c(2, &r.mul(b6, &r.mul(&nd, &d2)))),
            &r.mul(b8, &r.square(&d2)),
        );
        let inner = r.add(
            &r.add(&c(4, &r.mul(&n2, n)), &r.mul(b2, &r.mul(&n2, d))),
            &r.add(&c(2, &r.mul(b4, &r.mul(n, &d2))), &r.mul(b6, &d3)),
        );
        let den = r.mul(d, &inner);
        if den.is_zero() {
            return None;
        }
        let (mut num, mut den) = (num, den);
        for pi in &self.bad {
            loop {
                let (q1, r1) = r.divrem(&num, pi).unwrap();
                let (q2, r2) = r.divrem(&den, pi).unwrap();
                if !r1.is_zero() || !r2.is_zero() {
                    break;
                }
                num = q1;
                den = q2;
            }
        }
        let inv = f.inv(den.lead()).unwrap();
        Some((r.scale(&num, inv), r.scale(&den, inv)))
    }
}

fn height_of(n: &Poly, d: &Poly) -> i64 {
    n.deg().unwrap_or(0).max(d.deg().unwrap_or(0)) as i64
}

/// The doubling limit `lim h(2^n P) / 4^n`, run for `n_iter` doublings.
pub fn canonical_height(e: &Curve, p: &Point, n_iter: u32) -> Result<HeightValue> {
    let x = match p {
        CurvePoint::Infinity => return Ok(HeightValue::zero(0)),
        CurvePoint::Affine(x, _) => x.clone(),
    };
    let dbl = Doubler::new(e)?;
    let (mut n, mut d) = (x.num().clone(), x.den().clone());
    let mut heights = vec![height_of(&n, &d)];
    for k in 1..=n_iter {
        match dbl.double(&n, &d) {
            None => return Ok(HeightValue::zero(k)),
            Some((n2, d2)) => {
                n = n2;
                d = d2;
            }
        }
        let h = height_of(&n, &d);
        if h as usize > DEGREE_BUDGET {
            return Err(Error::DegreeBudget(h as usize));
        }
        heights.push(h);
    }
    let four = |k: u32| BigRational::from_integer(BigInt::from(4).pow(k));
    let at = |k: u32| BigRational::from_integer(BigInt::from(heights[k as usize])) / four(k);
    let value = at(n_iter);
    let error = if n_iter == 0 { BigRational::zero() } else { (at(n_iter) - at(n_iter - 1)).abs() };
    let defects: Vec<i64> = heights.windows(2).map(|w| w[1] - 4 * w[0]).collect();
    let exact = match defects.as_slice() {
        [.., a, b] if a == b => Some(&value + BigRational::from_integer(BigInt::from(*b)) / (four(n_iter) * BigInt::from(3))),
        _ => None,
    };
    Ok(HeightValue { value, error, iterations: n_iter, exact })
}

fn combine(parts: &[(&HeightValue, i64)], den: i64) -> HeightValue {
    let d = BigRational::from_integer(BigInt::from(den));
    let mut value = BigRational::zero();
    let mut error = BigRational::zero();
    let mut exact = Some(BigRational::zero());
    for (h, c) in parts {
        let c = BigRational::from_integer(BigInt::from(*c));
        value += &h.value * &c;
        error += &h.error * c.abs();
        exact = match (exact, &h.exact) {
            (Some(acc), Some(x)) => Some(acc + x * &c),
            _ => None,
        };
    }
    let iterations = parts.iter().map(|(h, _)| h.iterations).min().unwrap_or(0);
    HeightValue { value: value / &d, error: error / &d, iterations, exact: exact.map(|x| x / d) }
}

/// `⟨P, Q⟩ = (ĥ(P+Q) - ĥ(P) - ĥ(Q)) / 2`.
pub fn height_pairing(e: &Curve, p: &Point, q: &Point, n_iter: u32) -> Result<HeightValue> {
    let s = e.add_points(p, q);
    let hs = canonical_height(e, &s, n_iter)?;
    let hp = canonical_height(e, p, n_iter)?;
    let hq = canonical_height(e, q, n_iter)?;
    Ok(combine(&[(&hs, 1), (&hp, -1), (&hq, -1)], 2))
}

/// The unique fraction with denominator at most `bound` within `tol` of `x`.
pub fn snap(x: &BigRational, bound: u64, tol: f64) -> Option<BigRational> {
    let xf = x.to_f64()?;
    let mut found: Option<BigRational> = None;
    for b in 1..=bound {
        let a = (xf * b as f64).round();
        if (a / b as f64 - xf).abs() <= tol {
            let r = BigRational::new(BigInt::from(a as i64), BigInt::from(b));
            match &found {
                None => found = Some(r),
                Some(f) if *f == r => {}
                Some(_) => return None,
            }
        }
    }
    found
}

#[derive(Clone, Debug, Serialize)]
pub struct Gram {
    pub matrix: Vec<Vec<BigRational>>,
    pub rank: usize,
    pub kernel: Vec<Vec<BigRational>>,
}

/// Gram matrix of the height pairing, snapped to fractions with
/// denominator at most `4 n^2` for `n` points, and its exact rank.
pub fn gram_rank(e: &Curve, points: &[Point], n_iter: u32, tol: f64) -> Result<Gram> {
    let n = points.len();
    let bound = 4 * (n as u64).pow(2);
    let hs: Vec<HeightValue> = points.iter().map(|p| canonical_height(e, p, n_iter)).collect::<Result<_>>()?;
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = if i == j {
                hs[i].clone()
            } else {
                let s = e.add_points(&points[i], &points[j]);
                let h = canonical_height(e, &s, n_iter)?;
                combine(&[(&h, 1), (&hs[i], -1), (&hs[j], -1)], 2)
            };
            let r = snap(v.best(), bound, tol).ok_or(Error::Reconstruction(i, j))?;
            m.set(i, j, r.clone());
            m.set(j, i, r);
        }
    }
    let rank = m.rank();
    let kernel = m.kernel();
    let matrix = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    Ok(Gram { matrix, rank, kernel })
}

/// Torsion test: `2^k P = O` during doubling, or a height below `tol`
/// confirmed by `m P = O` for the torsion bound `m`.
pub fn is_torsion(e: &Curve, p: &Point, n_iter: u32, tol: f64) -> Result<bool> {
    if p.is_infinity() {
        return Ok(true);
    }
    let h = canonical_height(e, p, n_iter)?;
    if h.exact.as_ref().is_some_and(|x| x.is_zero()) && h.value.is_zero() {
        return Ok(true);
    }
    if h.to_f64() >= tol {
        return Ok(false);
    }
    let m = torsion_bound_from(&global_data(e)?)?;
    if e.mul_point(p, m as i64).is_infinity() {
        Ok(true)
    } else {
        Err(Error::TorsionInconclusive(m))
    }
}

/// `y^2 + xy + u^d y = x^3 + u^d x^2` over F_{q^2}(u), `d = q + 1`, with the
/// points `P(ζ^i u)`.
#[derive(Clone, Debug)]
pub struct PointFamily {
    pub curve: Curve,
    pub d: u32,
    pub zeta: FqElem,
    pub points: Vec<Point>,
}

/// The family for `q = p^f`, `p` odd.
pub fn legendre_family(p: u64, f: u32) -> Result<PointFamily> {
    if p == 2 {
        return Err(Error::Characteristic(2));
    }
    let fq = Fq::new(p, 2 * f)?;
    let q = p.pow(f);
    let d = (q + 1) as u32;
    let k = FunctionField::new(fq.clone()).with_var('u');
    let ring = k.ring();
    let ud = k.from_poly(Poly::monomial(FqElem::ONE, d as usize));
    let curve = Curve::checked(k.clone(), [k.one(), ud.clone(), ud, k.zero(), k.zero()])?;
    let u = k.t();
    let uq = k.pow(&u, q);
    let one4u = k.from_poly(ring.from_ints(&[1, 4]));
    let two = k.from_i64(2);
    let x = k.div(&k.mul(&uq, &k.sub(&uq, &u)), &k.pow(&one4u, q)).unwrap();
    let u2q = k.pow(&uq, 2);
    let lin = k.add(&k.from_poly(ring.from_ints(&[1, 2])), &k.mul(&two, &uq));
    let y1 = k.div(&k.mul(&u2q, &lin), &k.mul(&two, &k.pow(&one4u, (3 * q - 1) / 2))).unwrap();
    let y2 = k.div(&u2q, &k.mul(&two, &k.pow(&one4u, q - 1))).unwrap();
    let y = k.sub(&y1, &y2);
    let zeta = fq.exp(((fq.q() - 1) / d) as u64);
    let mut points = Vec::with_capacity(d as usize);
    let mut z = FqElem::ONE;
    for _ in 0..d {
        let pt = CurvePoint::Affine(k.scale_variable(&x, z), k.scale_variable(&y, z));
        if !curve.on_curve(&pt) {
            return Err(Error::Parameter("family point is not on the curve".into()));
        }
        points.push(pt);
        z = fq.mul(z, zeta);
    }
    Ok(PointFamily { curve, d, zeta, points })
}

impl PointFamily {
    /// `Σ c_i P_i`.
    pub fn combination(&self, coeffs: &[i64]) -> Point {
        let e = &self.curve;
        coeffs.iter().zip(&self.points).fold(CurvePoint::Infinity, |acc, (&c, p)| e.add_points(&acc, &e.mul_point(p, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_heights() {
        let fam = legendre_family(3, 1).unwrap();
        assert_eq!(fam.d, 4);
        // u^3(u^3-u)/(1+u)^3 = u^4(u-1)/(u+1)^2 over F_3
        assert_eq!(naive_height(&fam.points[0]).unwrap(), 5);
        assert!(naive_height(&CurvePoint::Infinity).is_err());
        let k = &fam.curve.field;
        let c = CurvePoint::Affine(k.one(), k.one());
        assert_eq!(naive_height(&c).unwrap(), 0);
    }

    #[test]
    fn snapping() {
        let x = BigRational::new(BigInt::from(1_000_001), BigInt::from(3_000_000));
        assert_eq!(snap(&x, 64, 1e-5), Some(BigRational::new(BigInt::from(1), BigInt::from(3))));
        assert_eq!(snap(&x, 64, 0.5), None);
    }

    #[test]
    fn negation_preserves_height() {
        let fam = legendre_family(3, 1).unwrap();
        let e = &fam.curve;
        let p = &fam.points[1];
        let a = canonical_height(e, p, 3).unwrap();
        let b = canonical_height(e, &e.neg_point(p), 3).unwrap();
        assert_eq!(a, b);
    }
}
