//! Irreducibility testing and factorization over F_q.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fq::FqElem;
use super::numth::prime_divisors;
use super::poly::{Poly, PolyRing};

/// Canonical order: by degree, then coefficients compared from the top.
pub fn poly_cmp(a: &Poly, b: &Poly) -> Ordering {
    a.coeffs()
        .len()
        .cmp(&b.coeffs().len())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Rabin's test.
pub fn is_irreducible(ring: &PolyRing, f: &Poly) -> bool {
    let n = match f.deg() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n as u32,
    };
    let f = ring.monic(f);
    let x = ring.x();
    if ring.frobenius_pow_mod(&x, n, &f) != ring.rem(&x, &f) {
        return false;
    }
    for r in prime_divisors(n as u64) {
        let h = ring.frobenius_pow_mod(&x, n / r as u32, &f);
        let g = ring.gcd(&ring.sub(&h, &x), &f);
        if !ring.is_one(&g) {
            return false;
        }
    }
    true
}

/// Monic irreducibles of degree `n` in canonical order, by exhaustive test.
pub fn monic_irreducibles(ring: &PolyRing, n: u32) -> Vec<Poly> {
    let q = ring.field().q() as u64;
    let total = q.pow(n);
    let mut out = Vec::new();
    for k in 0..total {
        let mut c = Vec::with_capacity(n as usize + 1);
        let mut m = k;
        for _ in 0..n {
            c.push(FqElem((m % q) as u32));
            m /= q;
        }
        c.push(FqElem::ONE);
        let f = Poly::from_coeffs(c);
        if is_irreducible(ring, &f) {
            out.push(f);
        }
    }
    out
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, k)` with the
/// `g` squarefree, pairwise coprime and `f = prod g^k`.
pub fn squarefree(ring: &PolyRing, f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let p = ring.field().p();
    let d = ring.derivative(f);
    let mut c = ring.gcd(f, &d);
    let mut w = ring.div_exact(f, &c).unwrap();
    let mut i = 1;
    while !ring.is_one(&w) {
        let y = ring.gcd(&w, &c);
        let z = ring.div_exact(&w, &y).unwrap();
        if !ring.is_one(&z) {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = ring.div_exact(&c, &w).unwrap();
    }
    if !ring.is_one(&c) {
        let root = ring.pth_root(&c).expect("derivative-free part is a p-th power");
        for (g, k) in squarefree(ring, &root) {
            out.push((g, k * p));
        }
    }
    out
}

/// Distinct-degree split of a monic squarefree polynomial.
fn distinct_degree(ring: &PolyRing, f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    let x = ring.x();
    let mut rest = f.clone();
    let mut h = ring.rem(&x, &rest);
    let mut i = 1u32;
    while rest.deg().unwrap_or(0) >= 2 * i as usize {
        h = ring.pow_mod(&h, ring.field().q() as u64, &rest);
        let g = ring.gcd(&ring.sub(&h, &x), &rest);
        if !ring.is_one(&g) {
            rest = ring.div_exact(&rest, &g).unwrap();
            h = ring.rem(&h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = rest.deg() {
        if d > 0 {
            out.push((rest, d as u32));
        }
    }
    out
}

fn equal_degree(ring: &PolyRing, f: &Poly, d: u32, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = f.deg().unwrap() as u32;
    if n == d {
        out.push(f.clone());
        return;
    }
    let fld = ring.field();
    let q = fld.q() as u64;
    loop {
        let a = Poly::from_coeffs((0..n).map(|_| FqElem(rng.gen_range(0..fld.q()))).collect());
        if a.is_constant() {
            continue;
        }
        let b = if fld.p() == 2 {
            // absolute trace map to F_2 of the residue algebra component
            let k = fld.degree() * d;
            let mut acc = ring.rem(&a, f);
            let mut cur = acc.clone();
            for _ in 1..k {
                cur = ring.mul_mod(&cur, &cur, f);
                acc = ring.add(&acc, &cur);
            }
            acc
        } else {
            let mut norm = ring.rem(&a, f);
            let mut conj = norm.clone();
            for _ in 1..d {
                conj = ring.pow_mod(&conj, q, f);
                norm = ring.mul_mod(&norm, &conj, f);
            }
            let e = ring.pow_mod(&norm, (q - 1) / 2, f);
            ring.sub(&e, &ring.one())
        };
        let g = ring.gcd(&b, f);
        let dg = g.deg().unwrap_or(0);
        if dg > 0 && (dg as u32) < n {
            let h = ring.div_exact(f, &g).unwrap();
            equal_degree(ring, &g, d, rng, out);
            equal_degree(ring, &h, d, rng, out);
            return;
        }
    }
}

/// Factorization into monic irreducibles with multiplicities, in canonical
/// order, together with the leading coefficient.
pub fn factor(ring: &PolyRing, f: &Poly) -> (FqElem, Vec<(Poly, u32)>) {
    assert!(!f.is_zero(), "cannot factor zero");
    let lead = f.lead();
    let m = ring.monic(f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for (g, k) in squarefree(ring, &m) {
        for (h, d) in distinct_degree(ring, &g) {
            let mut parts = Vec::new();
            equal_degree(ring, &h, d, &mut rng, &mut parts);
            out.extend(parts.into_iter().map(|x| (x, k)));
        }
    }
    out.sort_by(|a, b| poly_cmp(&a.0, &b.0));
    (lead, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fq::Fq;
    use crate::algebra::numth::necklace;

    #[test]
    fn irreducible_counts_match_necklace() {
        for (p, e, dmax) in [(2u64, 1u32, 8u32), (3, 1, 5), (2, 2, 4), (5, 1, 3), (3, 2, 2), (7, 1, 3)] {
            let ring = PolyRing::new(Fq::new(p, e).unwrap());
            for n in 1..=dmax {
                let q = p.pow(e);
                assert_eq!(monic_irreducibles(&ring, n).len() as u64, necklace(q, n), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn factor_round_trip() {
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 3), (5, 1), (3, 2)] {
            let ring = PolyRing::new(Fq::new(p, e).unwrap());
            let f = ring.from_ints(&[3, 1, 0, 2, 1, 1, 4, 0, 1, 1, 2, 1]);
            let g = ring.mul(&ring.pow(&f, 3), &ring.pow(&ring.from_ints(&[1, 1]), p as u64 + 1));
            let (lead, fs) = factor(&ring, &g);
            let mut prod = Poly::constant(lead);
            for (h, k) in &fs {
                assert!(is_irreducible(&ring, h));
                assert!(h.is_monic());
                prod = ring.mul(&prod, &ring.pow(h, *k as u64));
            }
            assert_eq!(prod, g);
        }
    }
}
