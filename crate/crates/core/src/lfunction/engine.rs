//! Power sums of Frobenius over all places of bounded degree.
//!
//! A place of degree `d` of F_q(t) corresponds to a Frobenius orbit of
//! elements of F_{q^d} of exact degree `d`; reducing the minimal model at
//! the orbit's least element gives the reduction at that place.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::numth::{checked_pow, isqrt, prime_divisors};
use crate::algebra::{Fq, FqElem, Poly};
use crate::error::{Error, Result};
use crate::local::{count_affine, GlobalData};
use crate::weierstrass::{CurvePoint, Weierstrass};

/// Fields up to this size are enumerated rather than searched with BSGS.
const ENUM_LIMIT: u64 = 4096;
const MAX_RANDOM_POINTS: usize = 20;

fn eval(f: &Fq, p: &Poly, x: FqElem) -> FqElem {
    p.coeffs().iter().rev().fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Orbit representatives of exact degree `d`, i.e. one per place of degree `d`.
fn representatives(f: &Fq, q: u64, d: u32) -> impl ParallelIterator<Item = FqElem> + '_ {
    (0..f.q()).into_par_iter().filter_map(move |i| {
        let theta = FqElem(i);
        let mut x = theta;
        for _ in 1..d {
            x = f.pow(x, q);
            if x.0 <= i {
                return None;
            }
        }
        Some(theta)
    })
}

fn random_point(e: &Weierstrass<Fq>, rng: &mut ChaCha8Rng) -> CurvePoint<FqElem> {
    let f = &e.field;
    let [a1, a2, a3, a4, a6] = e.a;
    loop {
        let x = FqElem(rng.gen_range(0..f.q()));
        let b = f.add(f.mul(a1, x), a3);
        let c = f.add(f.mul(x, f.add(f.mul(x, f.add(x, a2)), a4)), a6);
        let y = if f.p() == 2 {
            if b.is_zero() {
                Some(f.pth_root(c))
            } else {
                f.artin_schreier_root(f.div(c, f.square(b)).unwrap()).map(|z| f.mul(z, b))
            }
        } else {
            let disc = f.add(f.square(b), f.mul(f.from_i64(4), c));
            f.sqrt(disc).map(|s| f.div(f.sub(s, b), f.from_i64(2)).unwrap())
        };
        if let Some(y) = y {
            let p = CurvePoint::Affine(x, y);
            if rng.gen_bool(0.5) {
                return e.neg_point(&p);
            }
            return p;
        }
    }
}

/// Some `n != 0` with `n P = O` and `|n - (Q+1)| <= 2 sqrt(Q) + 1`.
fn annihilator(e: &Weierstrass<Fq>, p: &CurvePoint<FqElem>, qv: u64) -> u64 {
    let w = 2 * isqrt(qv) + 2;
    let lo = qv + 1 - w;
    let width = 2 * w;
    let m = isqrt(width) + 1;
    let mut baby: HashMap<FqElem, (u64, FqElem)> = HashMap::new();
    let mut cur = CurvePoint::Infinity;
    for j in 0..=m {
        match &cur {
            CurvePoint::Infinity => {}
            CurvePoint::Affine(x, y) => {
                baby.entry(*x).or_insert((j, *y));
            }
        }
        cur = e.add_points(&cur, p);
    }
    let step = e.mul_point(p, 2 * m as i64 + 1);
    let mut giant = e.mul_point(p, (lo + m) as i64);
    let mut base = lo + m;
    loop {
        match &giant {
            CurvePoint::Infinity => return base,
            CurvePoint::Affine(x, y) => {
                if let Some(&(j, yj)) = baby.get(x) {
                    // giant = ±jP
                    return if yj == *y { base - j } else { base + j };
                }
            }
        }
        giant = e.add_points(&giant, &step);
        base += 2 * m + 1;
        assert!(base <= lo + width + 2 * m + 2, "no annihilator in the Hasse interval");
    }
}

fn order_of(e: &Weierstrass<Fq>, p: &CurvePoint<FqElem>, n: u64) -> u64 {
    let mut n = n;
    for r in prime_divisors(n) {
        while n % r == 0 && e.mul_point(p, (n / r) as i64).is_infinity() {
            n /= r;
        }
    }
    n
}

/// `Q + 1 - #E(F_Q)` for a smooth model over a table field.
pub fn frobenius_trace(e: &Weierstrass<Fq>, seed: u64) -> i64 {
    let f = &e.field;
    let qv = f.q() as u64;
    if qv <= ENUM_LIMIT {
        return qv as i64 - count_affine(e) as i64;
    }
    let w = 2 * isqrt(qv) + 1;
    let (lo, hi) = (qv + 1 - w, qv + 1 + w);
    let hasse = |n: u64| (n as i64 - (qv as i64 + 1)).pow(2) <= 4 * qv as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut l: u64 = 1;
    for _ in 0..MAX_RANDOM_POINTS {
        let p = random_point(e, &mut rng);
        let n = annihilator(e, &p, qv);
        let o = order_of(e, &p, n);
        l = num_integer::lcm(l, o);
        let first = lo.div_ceil(l) * l;
        let cands: Vec<u64> = (first..=hi).step_by(l as usize).filter(|&n| hasse(n)).collect();
        if cands.len() == 1 {
            return qv as i64 + 1 - cands[0] as i64;
        }
    }
    qv as i64 - count_affine(e) as i64
}

/// Power sums `s_k` of the roots of `1 - aT + QT^2`, for `k = 1..=kmax`.
pub(crate) fn good_power_sums(a: i64, qv: &BigInt, kmax: usize) -> Vec<BigInt> {
    let a = BigInt::from(a);
    let mut s = vec![BigInt::from(2), a.clone()];
    for k in 2..=kmax {
        let next = &a * &s[k - 1] - qv * &s[k - 2];
        s.push(next);
    }
    s
}

fn key_seed(key: &[FqElem; 5], d: u32) -> u64 {
    key.iter().fold(d as u64 ^ 0x9e37_79b9_7f4a_7c15, |h, c| (h ^ c.0 as u64).wrapping_mul(0x1000_0000_01b3))
}

/// `c_m = Σ_{deg v | m} deg(v) · s_{m / deg v}(v)` for `m = 1..=m_max`, so
/// that `L(T) = exp(Σ c_m T^m / m)`. Index 0 is unused.
pub fn trace_sums(g: &GlobalData, m_max: u32) -> Result<Vec<BigInt>> {
    let fq = g.minimal.field.fq();
    let q = fq.q() as u64;
    let mut c = vec![BigInt::zero(); m_max as usize + 1];
    let add_bad = |c: &mut Vec<BigInt>, d: u32, a: i64| {
        let mut ak = BigInt::one();
        for k in 1..=(m_max / d) {
            ak *= a;
            c[(d * k) as usize] += &ak * d;
        }
    };
    let add_good = |c: &mut Vec<BigInt>, d: u32, a: i64, mult: u64| {
        let qv = BigInt::from(q).pow(d);
        let s = good_power_sums(a, &qv, (m_max / d) as usize);
        for k in 1..=(m_max / d) {
            c[(d * k) as usize] += &s[k as usize] * (d as u64 * mult);
        }
    };
    if g.infinity.is_good() {
        add_good(&mut c, 1, g.infinity.a_v, 1);
    } else {
        add_bad(&mut c, 1, g.infinity.a_v);
    }
    let coeffs: Vec<Poly> = g.minimal.a.iter().map(|r| r.num().clone()).collect();
    for d in 1..=m_max {
        for ld in g.bad.iter().filter(|ld| !ld.place.is_infinity() && ld.deg() == d) {
            add_bad(&mut c, d, ld.a_v);
        }
        let qd = checked_pow(q, d).unwrap_or(u64::MAX);
        let f = fq.extension(d).map_err(|_| Error::CapExceeded {
            place: format!("degree {d}"),
            qv: qd as u128,
            cap: crate::algebra::fq::MAX_TABLE_ORDER,
        })?;
        let (keys, bad) = representatives(&f, q, d)
            .fold(
                || (HashMap::<[FqElem; 5], u64>::new(), 0u64),
                |(mut m, mut bad), theta| {
                    if eval(&f, &g.delta, theta).is_zero() {
                        bad += 1;
                    } else {
                        let key: [FqElem; 5] = std::array::from_fn(|i| eval(&f, &coeffs[i], theta));
                        *m.entry(key).or_insert(0) += 1;
                    }
                    (m, bad)
                },
            )
            .reduce(
                || (HashMap::new(), 0),
                |(mut a, ba), (b, bb)| {
                    for (k, v) in b {
                        *a.entry(k).or_insert(0) += v;
                    }
                    (a, ba + bb)
                },
            );
        let expected = g.bad.iter().filter(|ld| !ld.place.is_infinity() && ld.deg() == d).count() as u64;
        assert_eq!(bad, expected, "bad places of degree {d} disagree with the factorization of the discriminant");
        let traces: Vec<(i64, u64)> = keys
            .into_par_iter()
            .map(|(key, mult)| {
                let e = Weierstrass::new(f.clone(), key);
                (frobenius_trace(&e, key_seed(&key, d)), mult)
            })
            .collect();
        for (a, mult) in traces {
            add_good(&mut c, d, a, mult);
        }
    }
    Ok(c)
}

/// Newton's identities: the series `exp(Σ c_m T^m / m)` to `T^{m_max}`.
pub fn series_from_traces(c: &[BigInt]) -> Vec<BigInt> {
    let n = c.len() - 1;
    let mut l = vec![BigInt::one()];
    for k in 1..=n {
        let s: BigInt = (1..=k).map(|i| &c[i] * &l[k - i]).sum();
        let (quo, rem) = num_integer::Integer::div_rem(&s, &BigInt::from(k));
        assert!(rem.is_zero(), "power sums are not integral at T^{k}");
        l.push(quo);
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bsgs_matches_enumeration() {
        for (p, e) in [(2u64, 13u32), (3, 8), (5, 6), (7, 5)] {
            let f = Fq::new(p, 1).unwrap().extension(e).unwrap();
            for seed in 0..6u32 {
                let a: [FqElem; 5] = std::array::from_fn(|i| FqElem((seed * 7919 + i as u32 * 104_729 + 11) % f.q()));
                let c = Weierstrass::new(f.clone(), a);
                if !c.is_smooth() {
                    continue;
                }
                let q = f.q() as i64;
                let direct = q - count_affine(&c) as i64;
                assert_eq!(frobenius_trace(&c, seed as u64), direct, "p={p} e={e}");
            }
        }
    }

    #[test]
    fn representatives_count_places() {
        let f2 = Fq::new(2, 1).unwrap();
        for d in 1..=8 {
            let f = f2.extension(d).unwrap();
            let n = representatives(&f, 2, d).count() as u64;
            assert_eq!(n, crate::algebra::numth::necklace(2, d));
        }
        let f9 = Fq::new(3, 2).unwrap();
        let f = f9.extension(3).unwrap();
        assert_eq!(representatives(&f, 9, 3).count() as u64, crate::algebra::numth::necklace(9, 3));
    }

    #[test]
    fn power_sums() {
        // roots ±i√5: s_2 = -10, s_4 = 50
        let s = good_power_sums(0, &BigInt::from(5), 4);
        assert_eq!(s[2], BigInt::from(-10));
        assert_eq!(s[4], BigInt::from(50));
        let l = series_from_traces(&[BigInt::zero(), BigInt::from(3), BigInt::from(5)]);
        assert_eq!(l, vec![BigInt::one(), BigInt::from(3), BigInt::from(7)]);
    }
}
