//! Point and root counting over finite fields.

use crate::algebra::FiniteField;
use crate::weierstrass::Weierstrass;

/// Number of solutions of `y^2 + b y = c` in `y`.
pub fn fiber_size<F: FiniteField>(f: &F, b: &F::Elem, c: &F::Elem) -> u64 {
    if f.characteristic() == 2 {
        if f.is_zero(b) {
            return 1;
        }
        let z = f.div(c, &f.square(b)).unwrap();
        if f.trace_f2(&z) == 0 {
            2
        } else {
            0
        }
    } else {
        let d = f.add(&f.square(b), &f.scale_int(c, 4));
        if f.is_zero(&d) {
            1
        } else if f.is_square(&d) {
            2
        } else {
            0
        }
    }
}

/// Affine points of a smooth model, by enumerating `x`.
pub fn count_affine<F: FiniteField>(e: &Weierstrass<F>) -> u64 {
    let f = &e.field;
    let [a1, a2, a3, a4, a6] = &e.a;
    let mut n = 0;
    for i in 0..f.order() {
        let x = f.element(i);
        let b = f.add(&f.mul(a1, &x), a3);
        let c = f.add(&f.mul(&x, &f.add(&f.mul(&x, &f.add(&x, a2)), a4)), a6);
        n += fiber_size(f, &b, &c);
    }
    n
}

/// `q + 1 - #E(F_q)`.
pub fn trace_of_frobenius<F: FiniteField>(e: &Weierstrass<F>) -> i64 {
    let q = e.field.order() as i64;
    q + 1 - (count_affine(e) as i64 + 1)
}

type P<E> = Vec<E>;

fn trim<F: FiniteField>(f: &F, mut a: P<F::Elem>) -> P<F::Elem> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

fn rem<F: FiniteField>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> P<F::Elem> {
    let mut r = trim(f, a.to_vec());
    let dm = m.len() - 1;
    let li = f.inv(&m[dm]).unwrap();
    while r.len() > dm {
        let c = f.mul(r.last().unwrap(), &li);
        let off = r.len() - 1 - dm;
        for (i, mi) in m.iter().enumerate() {
            r[off + i] = f.sub(&r[off + i], &f.mul(&c, mi));
        }
        r = trim(f, r);
    }
    r
}

fn mulmod<F: FiniteField>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> P<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    rem(f, &out, m)
}

fn gcd<F: FiniteField>(f: &F, a: P<F::Elem>, b: P<F::Elem>) -> P<F::Elem> {
    let (mut a, mut b) = (trim(f, a), trim(f, b));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Number of distinct roots in the field of a polynomial (little-endian
/// coefficients). The zero polynomial counts every element.
pub fn count_roots<F: FiniteField>(f: &F, coeffs: &[F::Elem]) -> u64 {
    let g = trim(f, coeffs.to_vec());
    match g.len() {
        0 => return f.order(),
        1 => return 0,
        2 => return 1,
        _ => {}
    }
    // x^Q mod g
    let mut acc = vec![f.one()];
    let mut base = rem(f, &[f.zero(), f.one()], &g);
    let mut k = f.order();
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod(f, &acc, &base, &g);
        }
        k >>= 1;
        if k > 0 {
            base = mulmod(f, &base, &base, &g);
        }
    }
    let mut h = acc;
    h.resize(h.len().max(2), f.zero());
    h[1] = f.sub(&h[1], &f.one());
    let d = gcd(f, g, h);
    (d.len() - 1) as u64
}

pub fn has_root<F: FiniteField>(f: &F, coeffs: &[F::Elem]) -> bool {
    count_roots(f, coeffs) > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;

    #[test]
    fn roots_match_brute_force() {
        for (p, e) in [(2u64, 1u32), (2, 3), (3, 2), (5, 1), (7, 1)] {
            let f = Fq::new(p, e).unwrap();
            let q = f.q() as u64;
            for seed in 0..60u64 {
                let c: Vec<_> = (0..4).map(|i| f.element(((seed * 7 + i * 13 + seed * seed * i) % q) as u32)).collect();
                let brute = f
                    .elements()
                    .filter(|&x| {
                        let v = c.iter().rev().fold(f.zero(), |acc, &ci| f.add(f.mul(acc, x), ci));
                        v.is_zero()
                    })
                    .count() as u64;
                let expect = if c.iter().all(|x| x.is_zero()) { q } else { brute };
                assert_eq!(count_roots(&f, &c), expect, "p={p} e={e} c={c:?}");
            }
        }
    }

    #[test]
    fn curve_counts() {
        // y^2 = x^3 + 1 over F_5 is supersingular: 6 points
        let f = Fq::new(5, 1).unwrap();
        let e = Weierstrass::from_ints(f.clone(), [0, 0, 0, 0, 1]);
        assert_eq!(trace_of_frobenius(&e), 0);
        // y^2 + xy = x^3 + 1 over F_2: points (0,1), (1,0), (1,1), O
        let f2 = Fq::new(2, 1).unwrap();
        let e2 = Weierstrass::from_ints(f2, [1, 0, 0, 0, 1]);
        assert_eq!(count_affine(&e2), 3);
    }
}
