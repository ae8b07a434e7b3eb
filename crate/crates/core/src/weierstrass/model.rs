//! Weierstrass models over an arbitrary field, their invariants and
//! coordinate changes.

use crate::algebra::Field;
use crate::error::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weierstrass<F: Field> {
    pub field: F,
    /// `[a1, a2, a3, a4, a6]`
    pub a: [F::Elem; 5],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants<E> {
    pub b2: E,
    pub b4: E,
    pub b6: E,
    pub b8: E,
    pub c4: E,
    pub c6: E,
    pub delta: E,
    /// `None` when the model is singular.
    pub j: Option<E>,
}

/// `x = u^2 x' + r`, `y = u^3 y' + s u^2 x' + w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform<E> {
    pub u: E,
    pub r: E,
    pub s: E,
    pub w: E,
}

impl<F: Field> Weierstrass<F> {
    pub fn new(field: F, a: [F::Elem; 5]) -> Self {
        Weierstrass { field, a }
    }

    pub fn from_ints(field: F, a: [i64; 5]) -> Self {
        let a = a.map(|x| field.from_i64(x));
        Weierstrass { field, a }
    }

    pub fn a1(&self) -> &F::Elem {
        &self.a[0]
    }
    pub fn a2(&self) -> &F::Elem {
        &self.a[1]
    }
    pub fn a3(&self) -> &F::Elem {
        &self.a[2]
    }
    pub fn a4(&self) -> &F::Elem {
        &self.a[3]
    }
    pub fn a6(&self) -> &F::Elem {
        &self.a[4]
    }

    pub fn b_invariants(&self) -> [F::Elem; 4] {
        let k = &self.field;
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = k.add(&k.square(a1), &k.scale_int(a2, 4));
        let b4 = k.add(&k.scale_int(a4, 2), &k.mul(a1, a3));
        let b6 = k.add(&k.square(a3), &k.scale_int(a6, 4));
        // a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
        let b8 = k.sub(
            &k.add(
                &k.add(&k.mul(&k.square(a1), a6), &k.scale_int(&k.mul(a2, a6), 4)),
                &k.mul(a2, &k.square(a3)),
            ),
            &k.add(&k.mul(&k.mul(a1, a3), a4), &k.square(a4)),
        );
        [b2, b4, b6, b8]
    }

    pub fn invariants(&self) -> Invariants<F::Elem> {
        let k = &self.field;
        let [b2, b4, b6, b8] = self.b_invariants();
        let c4 = k.sub(&k.square(&b2), &k.scale_int(&b4, 24));
        let c6 = k.sub(
            &k.scale_int(&k.mul(&b2, &b4), 36),
            &k.add(&k.mul(&k.square(&b2), &b2), &k.scale_int(&b6, 216)),
        );
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        let delta = k.sub(
            &k.scale_int(&k.mul(&k.mul(&b2, &b4), &b6), 9),
            &k.add(
                &k.add(&k.mul(&k.square(&b2), &b8), &k.scale_int(&k.mul(&k.square(&b4), &b4), 8)),
                &k.scale_int(&k.square(&b6), 27),
            ),
        );
        let j = k.div(&k.mul(&k.square(&c4), &c4), &delta);
        Invariants { b2, b4, b6, b8, c4, c6, delta, j }
    }

    pub fn discriminant(&self) -> F::Elem {
        self.invariants().delta
    }

    pub fn is_smooth(&self) -> bool {
        !self.field.is_zero(&self.discriminant())
    }

    /// The model in primed coordinates.
    pub fn apply(&self, t: &Transform<F::Elem>) -> Result<Self> {
        let k = &self.field;
        let ui = k.inv(&t.u).ok_or(Error::DivisionByZero)?;
        let [a1, a2, a3, a4, a6] = &self.a;
        let (r, s, w) = (&t.r, &t.s, &t.w);
        let two = |x: &F::Elem| k.scale_int(x, 2);
        let three = |x: &F::Elem| k.scale_int(x, 3);
        let n1 = k.add(a1, &two(s));
        let n2 = k.sub(&k.add(&k.sub(a2, &k.mul(s, a1)), &three(r)), &k.square(s));
        let n3 = k.add(&k.add(a3, &k.mul(r, a1)), &two(w));
        let n4 = {
            let mut v = k.sub(a4, &k.mul(s, a3));
            v = k.add(&v, &two(&k.mul(r, a2)));
            v = k.sub(&v, &k.mul(&k.add(w, &k.mul(r, s)), a1));
            v = k.add(&v, &three(&k.square(r)));
            k.sub(&v, &two(&k.mul(s, w)))
        };
        let n6 = {
            let r2 = k.square(r);
            let mut v = k.add(a6, &k.mul(r, a4));
            v = k.add(&v, &k.mul(&r2, a2));
            v = k.add(&v, &k.mul(&r2, r));
            v = k.sub(&v, &k.mul(w, a3));
            v = k.sub(&v, &k.square(w));
            k.sub(&v, &k.mul(&k.mul(r, w), a1))
        };
        let u2 = k.square(&ui);
        let u3 = k.mul(&u2, &ui);
        let u4 = k.square(&u2);
        let u6 = k.square(&u3);
        Ok(Weierstrass {
            field: k.clone(),
            a: [k.mul(&n1, &ui), k.mul(&n2, &u2), k.mul(&n3, &u3), k.mul(&n4, &u4), k.mul(&n6, &u6)],
        })
    }

    /// Whether the affine point lies on the curve.
    pub fn contains(&self, x: &F::Elem, y: &F::Elem) -> bool {
        let k = &self.field;
        k.is_zero(&self.equation(x, y))
    }

    /// `y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6`.
    pub fn equation(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let k = &self.field;
        let [a1, a2, a3, a4, a6] = &self.a;
        let lhs = k.mul(y, &k.add(&k.add(y, &k.mul(a1, x)), a3));
        let rhs = k.add(&k.mul(x, &k.add(&k.mul(x, &k.add(x, a2)), a4)), a6);
        k.sub(&lhs, &rhs)
    }

    /// Map the coefficients through a field homomorphism.
    pub fn map<G: Field>(&self, target: G, f: impl Fn(&F::Elem) -> G::Elem) -> Weierstrass<G> {
        Weierstrass { a: [f(&self.a[0]), f(&self.a[1]), f(&self.a[2]), f(&self.a[3]), f(&self.a[4])], field: target }
    }
}

impl<E: Clone> Transform<E> {
    pub fn identity<F: Field<Elem = E>>(k: &F) -> Self {
        Transform { u: k.one(), r: k.zero(), s: k.zero(), w: k.zero() }
    }

    pub fn scaling<F: Field<Elem = E>>(k: &F, u: E) -> Self {
        Transform { u, r: k.zero(), s: k.zero(), w: k.zero() }
    }

    /// The transform equal to applying `self` and then `next`.
    pub fn then<F: Field<Elem = E>>(&self, k: &F, next: &Transform<E>) -> Self {
        let (u1, r1, s1, w1) = (&self.u, &self.r, &self.s, &self.w);
        let (u2, r2, s2, w2) = (&next.u, &next.r, &next.s, &next.w);
        let u1sq = k.square(u1);
        Transform {
            u: k.mul(u1, u2),
            r: k.add(r1, &k.mul(&u1sq, r2)),
            s: k.add(s1, &k.mul(u1, s2)),
            w: k.add(
                &k.add(w1, &k.mul(&k.mul(&u1sq, s1), r2)),
                &k.mul(&k.mul(&u1sq, u1), w2),
            ),
        }
    }

    pub fn inverse<F: Field<Elem = E>>(&self, k: &F) -> Option<Self> {
        let ui = k.inv(&self.u)?;
        let ui2 = k.square(&ui);
        let ui3 = k.mul(&ui2, &ui);
        // x' = (x - r)/u^2, y' = (y - s(x - r) - w)/u^3
        Some(Transform {
            u: ui.clone(),
            r: k.neg(&k.mul(&self.r, &ui2)),
            s: k.neg(&k.mul(&self.s, &ui)),
            w: k.mul(&k.sub(&k.mul(&self.s, &self.r), &self.w), &ui3),
        })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&E) -> G::Elem) -> Transform<G::Elem> {
        Transform { u: f(&self.u), r: f(&self.r), s: f(&self.s), w: f(&self.w) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fq, FunctionField};

    fn k(p: u64) -> FunctionField {
        FunctionField::new(Fq::new(p, 1).unwrap())
    }

    #[test]
    fn e7_discriminant() {
        let k = k(5);
        let t = k.t();
        let e = Weierstrass::new(k.clone(), [k.one(), k.zero(), t.clone(), k.zero(), k.zero()]);
        let inv = e.invariants();
        // t^3 (1 - 27 t) = t^3 - 27 t^4
        assert_eq!(inv.delta, k.from_ints(&[0, 0, 0, 1, -27]));
        assert_eq!(inv.c4, k.from_ints(&[1, -24]));
    }

    #[test]
    fn b8_and_c_identities() {
        for p in [2, 3, 5, 7] {
            let k = k(p);
            let a = [k.from_ints(&[1, 2]), k.from_ints(&[0, 3, 1]), k.from_ints(&[2, 0, 1]), k.from_ints(&[1, 1]), k.from_ints(&[3, 0, 0, 1])];
            let e = Weierstrass::new(k.clone(), a);
            let inv = e.invariants();
            let lhs = k.scale_int(&inv.b8, 4);
            let rhs = k.sub(&k.mul(&inv.b2, &inv.b6), &k.square(&inv.b4));
            assert_eq!(lhs, rhs);
            let c = k.sub(&k.mul(&k.square(&inv.c4), &inv.c4), &k.square(&inv.c6));
            assert_eq!(c, k.scale_int(&inv.delta, 1728));
        }
    }

    #[test]
    fn transform_scaling_law() {
        let k = k(7);
        let e = Weierstrass::new(k.clone(), [k.from_ints(&[1]), k.from_ints(&[0, 1]), k.from_ints(&[0, 0, 1]), k.from_ints(&[2]), k.from_ints(&[1, 1])]);
        let tau = Transform { u: k.from_ints(&[1, 1]), r: k.from_ints(&[0, 2]), s: k.from_ints(&[3]), w: k.from_ints(&[1, 0, 1]) };
        let e2 = e.apply(&tau).unwrap();
        let i1 = e.invariants();
        let i2 = e2.invariants();
        let u12 = k.pow(&tau.u, 12);
        assert_eq!(k.mul(&i2.delta, &u12), i1.delta);
        assert_eq!(k.mul(&i2.c4, &k.pow(&tau.u, 4)), i1.c4);
        assert_eq!(i1.j, i2.j);
        let back = e2.apply(&tau.inverse(&k).unwrap()).unwrap();
        assert_eq!(back, e);
        let sigma = Transform { u: k.from_ints(&[2]), r: k.from_ints(&[1]), s: k.from_ints(&[0, 1]), w: k.from_ints(&[5]) };
        assert_eq!(e2.apply(&sigma).unwrap(), e.apply(&tau.then(&k, &sigma)).unwrap());
    }
}
