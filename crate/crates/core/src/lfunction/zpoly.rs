//! Integer and rational polynomials in T (little-endian) and a complex
//! root finder.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn trim(mut a: ZPoly) -> ZPoly {
    while a.len() > 1 && a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Product truncated to `len` coefficients.
pub fn mul_trunc(a: &[BigInt], b: &[BigInt], len: usize) -> ZPoly {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Power-series inverse of a series with constant term ±1, to `len` terms.
pub fn inv_series(a: &[BigInt], len: usize) -> ZPoly {
    let a0 = &a[0];
    assert!(a0.abs().is_one(), "series must start with a unit");
    let mut out = vec![BigInt::zero(); len];
    if len == 0 {
        return out;
    }
    out[0] = a0.clone();
    for k in 1..len {
        let mut s = BigInt::zero();
        for i in 1..=k.min(a.len() - 1) {
            s += &a[i] * &out[k - i];
        }
        out[k] = -(s * a0);
    }
    out
}

/// `1 - c T^d`.
pub fn binomial_factor(c: &BigInt, d: usize) -> ZPoly {
    let mut f = vec![BigInt::zero(); d + 1];
    f[0] = BigInt::one();
    f[d] -= c;
    f
}

/// Divide by `1 - c T` exactly; `None` if there is a remainder.
pub fn div_linear(f: &[BigInt], c: &BigInt) -> Option<ZPoly> {
    if f.len() <= 1 {
        return if f.iter().all(|x| x.is_zero()) { Some(vec![BigInt::zero()]) } else { None };
    }
    let n = f.len() - 1;
    let mut g = vec![BigInt::zero(); n];
    let mut prev = BigInt::zero();
    for i in 0..n {
        let gi = &f[i] + c * &prev;
        g[i] = gi.clone();
        prev = gi;
    }
    let rem = &f[n] + c * &prev;
    rem.is_zero().then_some(g)
}

/// Multiplicity of `1/c` as a root.
pub fn root_multiplicity(f: &[BigInt], c: &BigInt) -> usize {
    if f.iter().all(|x| x.is_zero()) {
        return usize::MAX;
    }
    let mut cur = trim(f.to_vec());
    let mut r = 0;
    while cur.len() > 1 {
        match div_linear(&cur, c) {
            Some(g) => {
                cur = trim(g);
                r += 1;
            }
            None => break,
        }
    }
    r
}

type QPoly = Vec<BigRational>;

fn q_trim(mut a: QPoly) -> QPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn q_rem(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut r = q_trim(a.to_vec());
    let db = b.len() - 1;
    while r.len() > db {
        let c = r.last().unwrap() / b.last().unwrap();
        let off = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[off + i] = &r[off + i] - &c * bi;
        }
        r = q_trim(r);
    }
    r
}

fn q_div(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut r = q_trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return vec![];
    }
    let mut quo = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let c = r.last().unwrap() / b.last().unwrap();
        let off = r.len() - 1 - db;
        quo[off] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            r[off + i] = &r[off + i] - &c * bi;
        }
        r = q_trim(r);
    }
    quo
}

fn q_gcd(a: QPoly, b: QPoly) -> QPoly {
    let (mut a, mut b) = (q_trim(a), q_trim(b));
    while !b.is_empty() {
        let r = q_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn to_primitive(a: &[BigRational]) -> ZPoly {
    let lcm = a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let z: ZPoly = a.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = z.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return z;
    }
    z.into_iter().map(|c| c / &g).collect()
}

/// The distinct-root part `f / gcd(f, f')`, as a primitive integer polynomial.
pub fn squarefree_part(f: &[BigInt]) -> ZPoly {
    let fq: QPoly = q_trim(f.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    if fq.len() <= 1 {
        return to_primitive(&fq);
    }
    let df: QPoly = fq.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect();
    let g = q_gcd(fq.clone(), df);
    to_primitive(&q_div(&fq, &g))
}

/// All complex roots by Aberth–Ehrlich iteration, polished by Newton steps.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.len() > 1 && *c.last().unwrap() == 0.0 {
        c.pop();
    }
    let n = c.len() - 1;
    if n == 0 {
        return vec![];
    }
    let lead = c[n];
    let a: Vec<Complex64> = c.iter().map(|&x| Complex64::new(x / lead, 0.0)).collect();
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for coef in a.iter().rev() {
            dp = dp * z + p;
            p = p * z + coef;
        }
        (p, dp)
    };
    let radius = 1.0 + a[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    for _ in 0..1000 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[i] -= w;
            max_step = max_step.max(w.norm() / z[i].norm().max(1e-300));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(*zi);
            if dp.norm() == 0.0 {
                break;
            }
            *zi -= p / dp;
        }
    }
    z
}

pub fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn exact_division_and_multiplicity() {
        let f = mul(&z(&[1, -9]), &z(&[1, -9]));
        assert_eq!(root_multiplicity(&f, &BigInt::from(9)), 2);
        assert_eq!(root_multiplicity(&z(&[1, 0, 9]), &BigInt::from(3)), 0);
        assert_eq!(div_linear(&z(&[1, -5]), &BigInt::from(5)), Some(z(&[1])));
    }

    #[test]
    fn series_inverse() {
        let f = z(&[1, -3, 2]);
        let inv = inv_series(&f, 8);
        let prod = mul_trunc(&f, &inv, 8);
        assert_eq!(prod, z(&[1, 0, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn squarefree() {
        let f = mul(&mul(&z(&[1, -3]), &z(&[1, -3])), &z(&[1, 1, 9]));
        let s = squarefree_part(&f);
        assert_eq!(mul(&s, &z(&[1, -3])).len(), f.len());
        assert_eq!(root_multiplicity(&s, &BigInt::from(3)), 1);
    }

    #[test]
    fn roots_on_circle() {
        // 1 + 2T^2/... : X^4 + 1
        let r = complex_roots(&[1.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(r.len(), 4);
        for x in r {
            assert!((x.norm() - 1.0).abs() < 1e-13);
        }
    }
}
