//! L-functions of elliptic curves over F_q(t) as integer polynomials.

pub mod engine;
pub mod zpoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::Place;
use crate::error::{Error, Result};
use crate::local::{global_data, tate_type, GlobalData, LocalData};
use crate::weierstrass::Curve;
pub use engine::{frobenius_trace, series_from_traces, trace_sums};
use zpoly::ZPoly;

/// Extra coefficients computed past the expected degree to confirm it.
pub const SLACK: usize = 4;

/// `L(E, T)`: integer coefficients, constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LPoly {
    pub q: u64,
    pub coeffs: Vec<BigInt>,
}

impl LPoly {
    pub fn new(q: u64, coeffs: Vec<BigInt>) -> LPoly {
        LPoly { q, coeffs: zpoly::trim(coeffs) }
    }

    /// `(1 - qT)^n`.
    pub fn trivial_power(q: u64, n: usize) -> LPoly {
        let f = zpoly::binomial_factor(&BigInt::from(q), 1);
        let mut c = vec![BigInt::one()];
        for _ in 0..n {
            c = zpoly::mul(&c, &f);
        }
        LPoly::new(q, c)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }
}

/// Local factor `1 - a_v T^d (+ q_v T^{2d})` as an integer polynomial in `T`.
pub fn euler_factor_of(ld: &LocalData, q: u64) -> ZPoly {
    let d = ld.deg() as usize;
    let mut f = vec![BigInt::zero(); if ld.is_good() { 2 * d + 1 } else { d + 1 }];
    f[0] = BigInt::one();
    f[d] = BigInt::from(-ld.a_v);
    if ld.is_good() {
        f[2 * d] = BigInt::from(q).pow(d as u32);
    }
    zpoly::trim(f)
}

pub fn euler_factor(e: &Curve, v: &Place) -> Result<ZPoly> {
    let ld = tate_type(e, v)?;
    Ok(euler_factor_of(&ld, e.field.fq().q() as u64))
}

/// `Π_v (local factor)^{-1}` through `T^m`.
pub fn euler_series(g: &GlobalData, m: u32) -> Result<Vec<BigInt>> {
    Ok(series_from_traces(&trace_sums(g, m)?))
}

pub fn l_polynomial(e: &Curve) -> Result<LPoly> {
    l_polynomial_from(&global_data(e)?)
}

/// The L-polynomial of a non-constant curve, confirmed by `SLACK` extra
/// vanishing coefficients of the Euler product.
pub fn l_polynomial_from(g: &GlobalData) -> Result<LPoly> {
    let n = expected_degree(g)?;
    l_polynomial_to(g, n + SLACK)
}

/// `deg n - 4` for a non-constant curve.
pub fn expected_degree(g: &GlobalData) -> Result<usize> {
    if g.is_constant() {
        return Err(Error::ConstantCurve);
    }
    let deg_n = g.conductor().deg;
    if deg_n < 4 {
        return Err(Error::ConductorTooSmall(deg_n));
    }
    Ok((deg_n - 4) as usize)
}

/// As `l_polynomial_from`, with the Euler product taken over places of
/// degree at most `max_deg` (at least the expected degree).
pub fn l_polynomial_to(g: &GlobalData, max_deg: usize) -> Result<LPoly> {
    let n = expected_degree(g)?;
    if max_deg < n {
        return Err(Error::Parameter(format!("places of degree up to {n} are needed, {max_deg} requested")));
    }
    let series = euler_series(g, max_deg as u32)?;
    for (i, c) in series.iter().enumerate().skip(n + 1) {
        if !c.is_zero() {
            return Err(Error::DegreeMismatch { n, index: i, value: c.to_string() });
        }
    }
    if series[n].is_zero() {
        return Err(Error::DegreeMismatch { n, index: n, value: "0".into() });
    }
    let q = g.minimal.field.fq().q() as u64;
    Ok(LPoly::new(q, series[..=n].to_vec()))
}

/// Closed form for a constant curve `E_0 × P^1` with `#E_0(F_q) = q + 1 - a`:
/// `L(T) = 1 / ((1 - aT + qT^2)(1 - aqT + q^3T^2))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstantL {
    pub q: u64,
    pub a: i64,
    /// The denominator, degree 4.
    pub den: Vec<BigInt>,
}

impl ConstantL {
    pub fn series(&self, len: usize) -> Vec<BigInt> {
        zpoly::inv_series(&self.den, len)
    }
}

pub fn constant_l(a: i64, q: u64) -> Result<ConstantL> {
    if (a as i128).pow(2) > 4 * q as i128 {
        return Err(Error::HasseBound { a, q });
    }
    let qb = BigInt::from(q);
    let ab = BigInt::from(a);
    let f1 = vec![BigInt::one(), -&ab, qb.clone()];
    let f2 = vec![BigInt::one(), -(&ab * &qb), qb.pow(3)];
    Ok(ConstantL { q, a, den: zpoly::mul(&f1, &f2) })
}

/// The trace of the fixed curve behind a constant curve.
pub fn constant_trace(g: &GlobalData) -> Result<i64> {
    if !g.is_constant() {
        return Err(Error::Parameter("curve is not constant".into()));
    }
    Ok(g.infinity.a_v)
}

/// The sign `ε` with `a_{N-i} = ε q^{N-2i} a_i`, checked for every `i`.
pub fn check_functional_equation(l: &LPoly) -> Result<i32> {
    let n = l.degree();
    let q = BigInt::from(l.q);
    let qn = q.pow(n as u32);
    let lead = &l.coeffs[n];
    let eps = if *lead == qn {
        1
    } else if *lead == -&qn {
        -1
    } else {
        return Err(Error::FunctionalEquation(n));
    };
    for i in 0..=n {
        let lhs = &l.coeffs[n - i] * q.pow(2 * i as u32);
        let rhs = &l.coeffs[i] * &qn * eps;
        if lhs != rhs {
            return Err(Error::FunctionalEquation(i));
        }
    }
    Ok(eps)
}

/// Inverse roots of `L` divided by `q`, one per distinct root.
pub fn normalized_roots(l: &LPoly) -> Vec<num_complex::Complex64> {
    let sf = zpoly::squarefree_part(&l.coeffs);
    let q = l.q as f64;
    let c: Vec<f64> = sf.iter().enumerate().map(|(i, a)| zpoly::to_f64(a) / q.powi(i as i32)).collect();
    zpoly::complex_roots(&c)
}

/// Whether every inverse root has absolute value `q` up to relative `tol`.
pub fn check_rh(l: &LPoly, tol: f64) -> bool {
    normalized_roots(l).iter().all(|z| (z.norm() - 1.0).abs() < tol)
}

/// Multiplicity of the factor `1 - qT`.
pub fn analytic_rank(l: &LPoly) -> usize {
    zpoly::root_multiplicity(&l.coeffs, &BigInt::from(l.q))
}

/// `c_k = -Σ α_i^k` for `L = Π (1 - α_i T)`, `k = 1..=n` (index 0 unused).
pub fn log_coefficients(coeffs: &[BigInt], n: usize) -> Vec<BigInt> {
    let l = |i: usize| coeffs.get(i).cloned().unwrap_or_default();
    let mut c = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        let mut s = l(k) * BigInt::from(k);
        for i in 1..k {
            s -= &c[i] * l(k - i);
        }
        c[k] = s;
    }
    c
}

/// `L` over the constant field extension of degree `m`: inverse roots `α^m`.
pub fn constant_extension(l: &LPoly, m: u32) -> LPoly {
    let n = l.degree();
    let c = log_coefficients(&l.coeffs, n * m as usize);
    let cm: Vec<BigInt> = (0..=n).map(|k| c[k * m as usize].clone()).collect();
    let mut cm = cm;
    cm[0] = BigInt::zero();
    LPoly::new(l.q.pow(m), series_from_traces(&cm))
}

/// `Z(𝓔, T)` of the elliptic surface as numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceZeta {
    pub q: u64,
    pub num: Vec<BigInt>,
    pub den: Vec<BigInt>,
}

impl SurfaceZeta {
    /// `-ord_{s=1} ζ(𝓔, s)`: the pole order at `T = 1/q`.
    pub fn pole_order_at_inv_q(&self) -> i64 {
        let q = BigInt::from(self.q);
        zpoly::root_multiplicity(&self.den, &q) as i64 - zpoly::root_multiplicity(&self.num, &q) as i64
    }
}

fn inflate(f: &[BigInt], d: usize) -> ZPoly {
    let mut out = vec![BigInt::zero(); (f.len() - 1) * d + 1];
    for (i, c) in f.iter().enumerate() {
        out[i * d] = c.clone();
    }
    out
}

/// `Z(P^1,T) Z(P^1,qT) / L(T)` times, at each bad place with `U = T^{deg v}`,
/// the fiber zeta `Z_v(U)` divided by the generic good-fiber denominator and
/// by the bad Euler factor: `Z_v(U) (1-U)(1-q_vU) / (1-a_vU)`.
pub fn surface_zeta(g: &GlobalData, l: &LPoly) -> SurfaceZeta {
    let q = l.q;
    let qb = BigInt::from(q);
    let lin = |c: &BigInt| zpoly::binomial_factor(c, 1);
    let mut num = vec![BigInt::one()];
    let mut den = zpoly::mul(&zpoly::mul(&lin(&BigInt::one()), &lin(&qb)), &zpoly::mul(&lin(&qb), &lin(&qb.pow(2))));
    den = zpoly::mul(&den, &l.coeffs);
    for ld in &g.bad {
        let d = ld.deg() as usize;
        let qv = qb.pow(d as u32);
        let (fnum, fden) = ld.fiber.rational(qv.clone().try_into().unwrap_or(u64::MAX));
        num = zpoly::mul(&num, &inflate(&fnum, d));
        num = zpoly::mul(&num, &zpoly::binomial_factor(&BigInt::one(), d));
        num = zpoly::mul(&num, &zpoly::binomial_factor(&qv, d));
        den = zpoly::mul(&den, &inflate(&fden, d));
        den = zpoly::mul(&den, &zpoly::binomial_factor(&BigInt::from(ld.a_v), d));
    }
    SurfaceZeta { q, num: zpoly::trim(num), den: zpoly::trim(den) }
}

/// `ord_{T=1/q} L` predicted from the surface zeta: pole order minus 2 minus
/// `Σ (f_v - 1)`.
pub fn rank_from_surface(g: &GlobalData, z: &SurfaceZeta) -> i64 {
    let corr: i64 = g.bad.iter().map(|ld| ld.f_v() as i64 - 1).sum();
    z.pole_order_at_inv_q() - 2 - corr
}

/// Exact division of polynomials over the integers, `None` if not exact.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let a = zpoly::trim(a.to_vec());
    let b = zpoly::trim(b.to_vec());
    if b.len() > a.len() {
        return a.iter().all(|c| c.is_zero()).then(|| vec![BigInt::zero()]);
    }
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    for i in (0..quo.len()).rev() {
        let (qc, rem) = r[i + b.len() - 1].div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &qc * bj;
        }
        quo[i] = qc;
    }
    r.iter().all(|c| c.is_zero()).then_some(quo)
}

/// Whether `L = (1 - qT)^N`.
pub fn is_trivial_power(l: &LPoly) -> bool {
    analytic_rank(l) == l.degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fq, FunctionField};

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn factors() {
        let c = constant_l(0, 5).unwrap();
        assert_eq!(c.den, z(&[1, 0, 130, 0, 625]));
        assert!(constant_l(6, 5).is_err());
    }

    #[test]
    fn fe_and_rank() {
        let l = LPoly::new(7, z(&[1, -7]));
        assert_eq!(check_functional_equation(&l).unwrap(), -1);
        let l2 = LPoly::trivial_power(9, 2);
        assert_eq!(check_functional_equation(&l2).unwrap(), 1);
        assert_eq!(analytic_rank(&l2), 2);
        assert!(check_rh(&l2, 1e-9));
        assert_eq!(analytic_rank(&LPoly::new(5, z(&[1]))), 0);
        assert!(check_functional_equation(&LPoly::new(5, z(&[1, 1]))).is_err());
    }

    #[test]
    fn extension_of_trivial() {
        // (1-2T)(1+2T) over F_2 becomes (1-4T)^2 over F_4
        let l = LPoly::new(2, z(&[1, 0, -4]));
        assert_eq!(constant_extension(&l, 2), LPoly::trivial_power(4, 2));
        assert_eq!(analytic_rank(&l), 1);
    }

    #[test]
    fn first_example_is_trivial() {
        let k = FunctionField::new(Fq::new(5, 1).unwrap());
        let e = Curve::from_coeff_lists(&k, [&[1], &[0, 1], &[0, 1], &[], &[]]);
        let g = global_data(&e).unwrap();
        let l = l_polynomial_from(&g).unwrap();
        assert_eq!(l.coeffs, z(&[1]));
        let zeta = surface_zeta(&g, &l);
        assert_eq!(rank_from_surface(&g, &zeta), 0);
    }
}
