//! Tate's algorithm over the completion of F_q(t) at a place.

use serde::Serialize;

use super::count::{count_affine, count_roots};
use super::kodaira::{FiberZeta, Kodaira};
use crate::algebra::{Field, FiniteField, FunctionField, Place, Poly, RatFunc, ResidueField};
use crate::error::{Error, Result};
use crate::weierstrass::{Curve, Transform, Weierstrass};

/// Residue fields larger than this are never enumerated.
pub const COUNT_CAP: u64 = 1 << 16;

/// Reduction data at one place.
#[derive(Clone, Debug, Serialize)]
pub struct LocalData {
    #[serde(skip)]
    pub place: Place,
    pub kind: Kodaira,
    /// Conductor exponent.
    pub n_v: u32,
    /// `None` for types without a split/non-split distinction.
    pub split: Option<bool>,
    pub a_v: i64,
    pub vdelta_min: u32,
    pub tamagawa: u32,
    pub fiber: FiberZeta,
    /// Model minimal at the place, in the local variable (`s = 1/t` at infinity).
    #[serde(skip)]
    pub model: Curve,
    /// From the input model (after `t -> 1/s` at infinity) to `model`.
    #[serde(skip)]
    pub transform: Transform<RatFunc>,
}

impl LocalData {
    /// Frobenius orbits on the fiber components.
    pub fn f_v(&self) -> u32 {
        self.fiber.f()
    }

    /// Geometric component count.
    pub fn m_v(&self) -> u32 {
        self.kind.components()
    }

    pub fn deg(&self) -> u32 {
        self.place.deg()
    }

    pub fn is_good(&self) -> bool {
        self.kind.is_good()
    }
}

struct Local<'a> {
    k: &'a FunctionField,
    pi: RatFunc,
    pi_inv: RatFunc,
    f: Poly,
    kv: ResidueField,
}

impl<'a> Local<'a> {
    fn new(k: &'a FunctionField, f: &Poly) -> Result<Local<'a>> {
        let pi = k.from_poly(f.clone());
        let pi_inv = k.inv(&pi).ok_or(Error::DivisionByZero)?;
        Ok(Local { k, pi, pi_inv, f: f.clone(), kv: ResidueField::new(k.fq(), f.clone())? })
    }

    fn val(&self, x: &RatFunc) -> i64 {
        if x.is_zero() {
            return i64::MAX;
        }
        let ring = self.k.ring();
        ring.valuation(x.num(), &self.f).0 as i64 - ring.valuation(x.den(), &self.f).0 as i64
    }

    fn pdiv(&self, x: &RatFunc) -> bool {
        self.val(x) > 0
    }

    fn red(&self, x: &RatFunc) -> Poly {
        self.kv.reduce(x).expect("integral at the place")
    }

    fn lift(&self, a: Poly) -> RatFunc {
        self.k.from_poly(a)
    }

    fn preduce(&self, x: &RatFunc) -> RatFunc {
        self.lift(self.red(x))
    }

    fn pinv(&self, x: &RatFunc) -> RatFunc {
        self.lift(self.kv.inv(&self.red(x)).expect("unit at the place"))
    }

    fn proot(&self, x: &RatFunc) -> RatFunc {
        self.lift(self.kv.pth_root(&self.red(x)))
    }

    fn nroots(&self, c: &[RatFunc]) -> u64 {
        let r: Vec<Poly> = c.iter().map(|x| self.red(x)).collect();
        count_roots(&self.kv, &r)
    }

    fn hasroot(&self, c: &[RatFunc]) -> bool {
        self.nroots(c) > 0
    }

    fn pi_pow(&self, e: i64) -> RatFunc {
        let b = if e >= 0 { &self.pi } else { &self.pi_inv };
        self.k.pow(b, e.unsigned_abs())
    }

    fn div_pi(&self, x: &RatFunc, e: u32) -> RatFunc {
        self.k.mul(x, &self.pi_pow(-(e as i64)))
    }
}

/// Tate's algorithm at the finite place `f` of `e.field`.
fn tate_finite(e: &Curve, f: &Poly, place: Place) -> Result<LocalData> {
    let k = &e.field;
    let lc = Local::new(k, f)?;
    let p = k.fq().p();
    let mut c = e.clone();
    let mut total = Transform::identity(k);
    let mut step = |c: &mut Curve, tr: Transform<RatFunc>| {
        *c = c.apply(&tr).expect("unit u");
        total = total.then(k, &tr);
    };
    let rst = |r: RatFunc, s: RatFunc, w: RatFunc| Transform { u: k.one(), r, s, w };
    let zero = k.zero();
    let half = k.inv(&k.from_i64(2));

    let weights = [1i64, 2, 3, 4, 6];
    let shift = (0..5)
        .map(|i| {
            let v = lc.val(&c.a[i]);
            if v == i64::MAX || v >= 0 {
                0
            } else {
                (-v + weights[i] - 1) / weights[i]
            }
        })
        .max()
        .unwrap();
    if shift > 0 {
        step(&mut c, Transform::scaling(k, lc.pi_pow(-shift)));
    }

    let (kind, split, fiber, n_v, tamagawa, vd) = loop {
        let inv = c.invariants();
        let vd = lc.val(&inv.delta);
        debug_assert!(vd != i64::MAX);
        let vd = vd as u32;
        if vd == 0 {
            break (Kodaira::I0, None, FiberZeta::for_type(Kodaira::I0, None), 0, 1, 0);
        }
        let [a1, a2, a3, a4, a6] = c.a.clone();
        let (b2, b4, b6) = (inv.b2.clone(), inv.b4.clone(), inv.b6.clone());
        let (r, t) = if p == 2 {
            if lc.pdiv(&b2) {
                let r = lc.proot(&a4);
                let t = lc.proot(&k.add(&k.mul(&k.add(&k.mul(&k.add(&r, &a2), &r), &a4), &r), &a6));
                (r, t)
            } else {
                let temp = lc.pinv(&a1);
                let r = k.mul(&temp, &a3);
                let t = k.mul(&temp, &k.add(&a4, &k.square(&r)));
                (r, t)
            }
        } else if p == 3 {
            let r = if lc.pdiv(&b2) { lc.proot(&k.neg(&b6)) } else { k.neg(&k.mul(&lc.pinv(&b2), &b4)) };
            let t = k.add(&k.mul(&a1, &r), &a3);
            (r, t)
        } else {
            let c4 = &inv.c4;
            let r = if lc.pdiv(c4) {
                k.neg(&k.mul(&lc.pinv(&k.from_i64(12)), &b2))
            } else {
                let den = lc.pinv(&k.scale_int(c4, 12));
                k.neg(&k.mul(&den, &k.add(&inv.c6, &k.mul(&b2, c4))))
            };
            let t = k.neg(&k.mul(half.as_ref().unwrap(), &k.add(&k.mul(&a1, &r), &a3)));
            (r, t)
        };
        let (r, t) = (lc.preduce(&r), lc.preduce(&t));
        step(&mut c, rst(r, zero.clone(), t));
        let [a1, a2, a3, _a4, a6] = c.a.clone();
        let [b2, _, b6, b8] = c.b_invariants();

        if !lc.pdiv(&b2) {
            let split = lc.hasroot(&[k.neg(&a2), a1.clone(), k.one()]);
            let kind = Kodaira::In(vd);
            let cp = if split { vd } else if vd % 2 == 0 { 2 } else { 1 };
            break (kind, Some(split), FiberZeta::for_type(kind, Some(split)), 1, cp, vd);
        }
        if lc.val(&a6) < 2 {
            break (Kodaira::II, None, FiberZeta::for_type(Kodaira::II, None), vd, 1, vd);
        }
        if lc.val(&b8) < 3 {
            break (Kodaira::III, None, FiberZeta::for_type(Kodaira::III, None), vd - 1, 2, vd);
        }
        if lc.val(&b6) < 3 {
            let split = lc.hasroot(&[k.neg(&lc.div_pi(&a6, 2)), lc.div_pi(&a3, 1), k.one()]);
            let kind = Kodaira::IV;
            break (kind, Some(split), FiberZeta::for_type(kind, Some(split)), vd - 2, if split { 3 } else { 1 }, vd);
        }

        let (s, t) = if p == 2 {
            (lc.proot(&a2), k.mul(&lc.pi, &lc.proot(&lc.div_pi(&a6, 2))))
        } else if p == 3 {
            (a1.clone(), a3.clone())
        } else {
            let h = half.as_ref().unwrap();
            (k.neg(&k.mul(&a1, h)), k.neg(&k.mul(&a3, h)))
        };
        step(&mut c, rst(zero.clone(), s, t));
        let [_, a2, _, a4, a6] = c.a.clone();

        // T^3 + b T^2 + c T + d
        let b = lc.div_pi(&a2, 1);
        let cc = lc.div_pi(&a4, 2);
        let d = lc.div_pi(&a6, 3);
        let bb = k.square(&b);
        let c2 = k.square(&cc);
        let bc = k.mul(&b, &cc);
        let w = {
            let mut w = k.scale_int(&k.square(&d), 27);
            w = k.sub(&w, &k.mul(&bb, &c2));
            w = k.add(&w, &k.scale_int(&k.mul(&k.mul(&b, &bb), &d), 4));
            w = k.sub(&w, &k.scale_int(&k.mul(&bc, &d), 18));
            k.add(&w, &k.scale_int(&k.mul(&cc, &c2), 4))
        };
        let x = k.sub(&k.scale_int(&cc, 3), &bb);
        let sw = if lc.pdiv(&w) {
            if lc.pdiv(&x) {
                3
            } else {
                2
            }
        } else {
            1
        };

        if sw == 1 {
            let roots = lc.nroots(&[d, cc, b, k.one()]);
            let (split, fiber) = match roots {
                3 => (true, FiberZeta::for_type(Kodaira::I0Star, Some(true))),
                1 => (false, FiberZeta::for_type(Kodaira::I0Star, Some(false))),
                _ => (false, FiberZeta::i0_star_cyclic()),
            };
            break (Kodaira::I0Star, Some(split), fiber, vd - 4, 1 + roots as u32, vd);
        }

        if sw == 2 {
            let r = if p == 2 {
                lc.proot(&cc)
            } else if p == 3 {
                k.mul(&cc, &lc.pinv(&b))
            } else {
                k.mul(&k.sub(&bc, &k.scale_int(&d, 9)), &lc.pinv(&k.scale_int(&x, 2)))
            };
            let r = k.mul(&lc.pi, &lc.preduce(&r));
            step(&mut c, rst(r, zero.clone(), zero.clone()));
            let (mut ix, mut iy) = (3u32, 3u32);
            let split = loop {
                let [_, _, a3, _, a6] = c.a.clone();
                let a3t = lc.div_pi(&a3, iy - 1);
                let a6t = lc.div_pi(&a6, ix + iy - 2);
                if lc.pdiv(&k.add(&k.square(&a3t), &k.scale_int(&a6t, 4))) {
                    let t = if p == 2 {
                        lc.proot(&a6t)
                    } else {
                        lc.preduce(&k.neg(&k.mul(&a3t, half.as_ref().unwrap())))
                    };
                    let t = k.mul(&lc.pi_pow(iy as i64 - 1), &t);
                    step(&mut c, rst(zero.clone(), zero.clone(), t));
                    iy += 1;
                    let [_, a2, _, a4, a6] = c.a.clone();
                    let a2t = lc.div_pi(&a2, 1);
                    let a4t = lc.div_pi(&a4, ix);
                    let a6t = lc.div_pi(&a6, ix + iy - 2);
                    if lc.pdiv(&k.sub(&k.square(&a4t), &k.scale_int(&k.mul(&a6t, &a2t), 4))) {
                        let r = if p == 2 {
                            lc.proot(&k.mul(&a6t, &lc.pinv(&a2t)))
                        } else {
                            lc.preduce(&k.neg(&k.mul(&a4t, &lc.pinv(&k.scale_int(&a2t, 2)))))
                        };
                        let r = k.mul(&lc.pi_pow(ix as i64 - 1), &r);
                        step(&mut c, rst(r, zero.clone(), zero.clone()));
                        ix += 1;
                    } else {
                        break lc.hasroot(&[a6t, a4t, a2t]);
                    }
                } else {
                    break lc.hasroot(&[k.neg(&a6t), a3t, k.one()]);
                }
            };
            let m = ix + iy - 5;
            let kind = Kodaira::InStar(m);
            break (kind, Some(split), FiberZeta::for_type(kind, Some(split)), vd - m - 4, if split { 4 } else { 2 }, vd);
        }

        let r = if p == 2 {
            b.clone()
        } else if p == 3 {
            lc.proot(&k.neg(&d))
        } else {
            k.neg(&k.mul(&b, &lc.pinv(&k.from_i64(3))))
        };
        let r = k.mul(&lc.pi, &lc.preduce(&r));
        step(&mut c, rst(r, zero.clone(), zero.clone()));
        let [_, _, a3, _, a6] = c.a.clone();
        let x3t = lc.div_pi(&a3, 2);
        let x6t = lc.div_pi(&a6, 4);
        if !lc.pdiv(&k.add(&k.square(&x3t), &k.scale_int(&x6t, 4))) {
            let split = lc.hasroot(&[k.neg(&x6t), x3t, k.one()]);
            let kind = Kodaira::IVStar;
            break (kind, Some(split), FiberZeta::for_type(kind, Some(split)), vd - 6, if split { 3 } else { 1 }, vd);
        }
        let t = if p == 2 {
            lc.proot(&x6t)
        } else {
            lc.preduce(&k.neg(&k.mul(&x3t, half.as_ref().unwrap())))
        };
        step(&mut c, rst(zero.clone(), zero.clone(), k.mul(&lc.pi_pow(2), &t)));
        let [_, _, _, a4, a6] = c.a.clone();
        if lc.val(&a4) < 4 {
            break (Kodaira::IIIStar, None, FiberZeta::for_type(Kodaira::IIIStar, None), vd - 7, 2, vd);
        }
        if lc.val(&a6) < 6 {
            break (Kodaira::IIStar, None, FiberZeta::for_type(Kodaira::IIStar, None), vd - 8, 1, vd);
        }
        step(&mut c, Transform::scaling(k, lc.pi.clone()));
    };

    let a_v = match kind {
        Kodaira::I0 => {
            let qv = lc.kv.order();
            if qv > COUNT_CAP {
                return Err(Error::CapExceeded { place: place.label(k.fq(), 't'), qv: qv as u128, cap: COUNT_CAP });
            }
            let red: Weierstrass<ResidueField> = c.map(lc.kv.clone(), |x| lc.red(x));
            qv as i64 + 1 - (count_affine(&red) as i64 + 1)
        }
        Kodaira::In(_) => {
            if split == Some(true) {
                1
            } else {
                -1
            }
        }
        _ => 0,
    };
    Ok(LocalData { place, kind, n_v, split, a_v, vdelta_min: vd, tamagawa, fiber, model: c, transform: total })
}

/// The model in the variable `s = 1/t`.
pub fn model_at_infinity(e: &Curve) -> Curve {
    let k = &e.field;
    let ks = k.clone().with_var('s');
    e.map(ks, |c| k.invert_variable(c))
}

/// Local data at `v` (Tate's algorithm plus the trace `a_v`).
pub fn tate_type(e: &Curve, v: &Place) -> Result<LocalData> {
    match v {
        Place::Finite(f) => tate_finite(e, f, v.clone()),
        Place::Infinity => {
            let es = model_at_infinity(e);
            let s = Poly::monomial(crate::algebra::FqElem::ONE, 1);
            tate_finite(&es, &s, Place::Infinity)
        }
    }
}

/// A model minimal at `v` and the transform reaching it; at infinity the
/// model is in the variable `s = 1/t`.
pub fn minimal_model_at(e: &Curve, v: &Place) -> Result<(Curve, Transform<RatFunc>)> {
    let ld = tate_type(e, v)?;
    Ok((ld.model, ld.transform))
}

/// `a_v = q_v + 1 - #E_v(κ_v)` at a place of good reduction.
pub fn count_points_good(e: &Curve, v: &Place) -> Result<i64> {
    let k = &e.field;
    let qv = v.residue_order(k.fq().q() as u64).map_or(u128::MAX, |q| q as u128);
    if qv > COUNT_CAP as u128 {
        return Err(Error::CapExceeded { place: v.label(k.fq(), k.var()), qv, cap: COUNT_CAP });
    }
    let ld = tate_type(e, v)?;
    if !ld.is_good() {
        return Err(Error::BadReduction { place: v.label(k.fq(), k.var()) });
    }
    Ok(ld.a_v)
}
