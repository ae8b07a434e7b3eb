//! Chord-tangent group law on a Weierstrass model.

use super::model::Weierstrass;
use crate::algebra::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint<E> {
    Infinity,
    Affine(E, E),
}

impl<E> CurvePoint<E> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&E> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine(x, _) => Some(x),
        }
    }
}

impl<F: Field> Weierstrass<F> {
    pub fn on_curve(&self, p: &CurvePoint<F::Elem>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => self.contains(x, y),
        }
    }

    pub fn neg_point(&self, p: &CurvePoint<F::Elem>) -> CurvePoint<F::Elem> {
        let k = &self.field;
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let ny = k.sub(&k.neg(y), &k.add(&k.mul(self.a1(), x), self.a3()));
                CurvePoint::Affine(x.clone(), ny)
            }
        }
    }

    pub fn add_points(&self, p: &CurvePoint<F::Elem>, q: &CurvePoint<F::Elem>) -> CurvePoint<F::Elem> {
        let k = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        let (lambda, nu) = if x1 == x2 {
            // y1 + y2 + a1 x2 + a3 = 0 means q = -p
            let s = k.add(&k.add(&k.add(y1, y2), &k.mul(a1, x2)), a3);
            if k.is_zero(&s) {
                return CurvePoint::Infinity;
            }
            let den = k.add(&k.add(&k.scale_int(y1, 2), &k.mul(a1, x1)), a3);
            let x1sq = k.square(x1);
            let num = k.sub(
                &k.add(&k.add(&k.scale_int(&x1sq, 3), &k.scale_int(&k.mul(a2, x1), 2)), a4),
                &k.mul(a1, y1),
            );
            let lambda = k.div(&num, &den).expect("doubling denominator is nonzero");
            let nnum = k.sub(
                &k.add(&k.add(&k.neg(&k.mul(&x1sq, x1)), &k.mul(a4, x1)), &k.scale_int(a6, 2)),
                &k.mul(a3, y1),
            );
            (lambda, k.div(&nnum, &den).unwrap())
        } else {
            let dx = k.sub(x2, x1);
            let lambda = k.div(&k.sub(y2, y1), &dx).unwrap();
            let nu = k.div(&k.sub(&k.mul(y1, x2), &k.mul(y2, x1)), &dx).unwrap();
            (lambda, nu)
        };
        let x3 = k.sub(&k.sub(&k.sub(&k.add(&k.square(&lambda), &k.mul(a1, &lambda)), a2), x1), x2);
        let y3 = k.sub(&k.sub(&k.neg(&k.mul(&k.add(&lambda, a1), &x3)), &nu), a3);
        CurvePoint::Affine(x3, y3)
    }

    pub fn double_point(&self, p: &CurvePoint<F::Elem>) -> CurvePoint<F::Elem> {
        self.add_points(p, p)
    }

    /// `n P` by double-and-add; negative `n` negates.
    pub fn mul_point(&self, p: &CurvePoint<F::Elem>, n: i64) -> CurvePoint<F::Elem> {
        let mut base = if n < 0 { self.neg_point(p) } else { p.clone() };
        let mut m = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add_points(&acc, &base);
            }
            m >>= 1;
            if m > 0 {
                base = self.double_point(&base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteField, Fq, FqElem};

    fn points(e: &Weierstrass<Fq>) -> Vec<CurvePoint<FqElem>> {
        let f = &e.field;
        let mut out = vec![CurvePoint::Infinity];
        for x in f.elements() {
            for y in f.elements() {
                if e.contains(&x, &y) {
                    out.push(CurvePoint::Affine(x, y));
                }
            }
        }
        out
    }

    #[test]
    fn group_axioms_exhaustive() {
        for (p, e, a) in [
            (5u64, 1u32, [0i64, 0, 0, 0, 1]),
            (2, 2, [1, 0, 1, 0, 1]),
            (3, 2, [0, 1, 0, 1, 2]),
            (7, 1, [1, 2, 3, 4, 5]),
        ] {
            let f = Fq::new(p, e).unwrap();
            let curve = Weierstrass::from_ints(f.clone(), a);
            assert!(curve.is_smooth());
            let pts = points(&curve);
            assert!(pts.len() as u64 <= f.order() + 1 + 2 * (f.order() as f64).sqrt() as u64);
            for a in &pts {
                assert!(curve.add_points(a, &curve.neg_point(a)).is_infinity());
                for b in &pts {
                    let ab = curve.add_points(a, b);
                    assert!(curve.on_curve(&ab));
                    assert_eq!(ab, curve.add_points(b, a));
                    for c in pts.iter().step_by(3) {
                        assert_eq!(curve.add_points(&ab, c), curve.add_points(a, &curve.add_points(b, c)));
                    }
                }
                let mut acc = CurvePoint::Infinity;
                for n in 0..=20i64 {
                    assert_eq!(curve.mul_point(a, n), acc);
                    acc = curve.add_points(&acc, a);
                }
            }
        }
    }
}
