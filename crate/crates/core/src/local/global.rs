//! Global minimal models, conductors and torsion bounds.

use serde::Serialize;

use super::tate::{tate_type, LocalData, COUNT_CAP};
use crate::algebra::factor::factor;
use crate::algebra::numth::gcd;
use crate::algebra::{places_up_to, Place, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::weierstrass::{Curve, Transform};

/// Reduction data of a curve at every bad place.
#[derive(Clone, Debug)]
pub struct GlobalData {
    pub curve: Curve,
    /// Polynomial model, minimal at every finite place.
    pub minimal: Curve,
    pub to_minimal: Transform<RatFunc>,
    /// Discriminant of `minimal`.
    pub delta: Poly,
    /// Bad places in canonical order (infinity first when bad).
    pub bad: Vec<LocalData>,
    /// Data at infinity, good or bad.
    pub infinity: LocalData,
    /// Height of the model: the least `h` with `deg a_i <= h i` for some model.
    pub height: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conductor {
    #[serde(skip)]
    pub entries: Vec<(Place, u32)>,
    pub deg: u64,
}

impl GlobalData {
    pub fn conductor(&self) -> Conductor {
        let entries: Vec<(Place, u32)> = self.bad.iter().map(|ld| (ld.place.clone(), ld.n_v)).collect();
        let deg = entries.iter().map(|(v, n)| *n as u64 * v.deg() as u64).sum();
        Conductor { entries, deg }
    }

    /// `deg n` minus the tame parts at `t = 0` and `t = ∞`.
    pub fn nprime_deg(&self) -> i64 {
        let zero = Place::zero();
        let tame = |v: &Place| {
            self.bad.iter().find(|ld| &ld.place == v).map_or(0, |ld| ld.kind.tame_part() as i64)
        };
        self.conductor().deg as i64 - tame(&zero) - tame(&Place::Infinity)
    }

    pub fn local_at(&self, v: &Place) -> Option<&LocalData> {
        self.bad.iter().find(|ld| &ld.place == v)
    }

    pub fn is_bad(&self, v: &Place) -> bool {
        self.local_at(v).is_some()
    }

    /// Constant curves are exactly those of height 0.
    pub fn is_constant(&self) -> bool {
        self.height == 0
    }
}

/// Minimalize at every finite place and run Tate's algorithm at each bad place.
pub fn global_data(e: &Curve) -> Result<GlobalData> {
    if !e.is_smooth() {
        return Err(Error::Singular);
    }
    let k = &e.field;
    let ring = k.ring();
    let (mut cur, mut total) = e.integral_model();
    let delta = cur.discriminant();
    let (_, factors) = factor(ring, delta.num());
    for (pi, mult) in &factors {
        if *mult < 12 {
            continue;
        }
        let ld = tate_type(&cur, &Place::Finite(pi.clone()))?;
        if ld.vdelta_min < *mult {
            total = total.then(k, &ld.transform);
            cur = ld.model;
        }
    }
    let delta = cur.discriminant();
    debug_assert!(delta.is_polynomial());
    let mut bad = Vec::new();
    for (pi, _) in factor(ring, delta.num()).1 {
        bad.push(tate_type(&cur, &Place::Finite(pi))?);
    }
    let infinity = tate_type(&cur, &Place::Infinity)?;
    let deg = delta.num().deg().unwrap() as u32;
    let height_num = deg + infinity.vdelta_min;
    debug_assert_eq!(height_num % 12, 0);
    if !infinity.is_good() {
        bad.push(infinity.clone());
    }
    bad.sort_by(|a, b| a.place.cmp(&b.place));
    Ok(GlobalData {
        curve: e.clone(),
        minimal: cur,
        to_minimal: total,
        delta: delta.num().clone(),
        bad,
        infinity,
        height: height_num / 12,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub isotrivial: bool,
    pub height: u32,
    pub constant: bool,
}

pub fn classify(e: &Curve) -> Result<Classification> {
    let g = global_data(e)?;
    Ok(Classification { isotrivial: e.is_isotrivial(), height: g.height, constant: g.is_constant() })
}

pub fn conductor(e: &Curve) -> Result<Conductor> {
    Ok(global_data(e)?.conductor())
}

pub fn nprime_deg(e: &Curve) -> Result<i64> {
    Ok(global_data(e)?.nprime_deg())
}

/// The prime-to-p part of `gcd(#E_v(κ_v))` over the first two good places.
pub fn torsion_bound(e: &Curve) -> Result<u64> {
    let g = global_data(e)?;
    torsion_bound_from(&g)
}

pub fn torsion_bound_from(g: &GlobalData) -> Result<u64> {
    let fq = g.minimal.field.fq();
    let q = fq.q() as u64;
    let p = fq.p() as u64;
    let mut orders = Vec::new();
    let mut d = 1;
    while orders.len() < 2 {
        let qv = crate::algebra::numth::checked_pow(q, d).filter(|&x| x <= COUNT_CAP).ok_or(Error::NoGoodPlace)?;
        for v in places_up_to(fq, d).into_iter().filter(|v| v.deg() == d) {
            if g.is_bad(&v) {
                continue;
            }
            let a = if v.is_infinity() { g.infinity.a_v } else { tate_type(&g.minimal, &v)?.a_v };
            orders.push((qv as i64 + 1 - a) as u64);
            if orders.len() == 2 {
                break;
            }
        }
        d += 1;
    }
    let mut b = gcd(orders[0], orders[1]);
    while b % p == 0 {
        b /= p;
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fq, FunctionField};
    use crate::local::Kodaira;

    fn k(p: u64) -> FunctionField {
        FunctionField::new(Fq::new(p, 1).unwrap())
    }

    #[test]
    fn legendre_d3() {
        let k = k(5);
        let e = Curve::from_coeff_lists(&k, [&[], &[1, 0, 0, 1], &[], &[0, 0, 0, 1], &[]]);
        let g = global_data(&e).unwrap();
        assert_eq!(g.height, 2);
        let kinds: Vec<String> = g.bad.iter().map(|ld| format!("{}@{}", ld.kind, ld.place.label(k.fq(), 't'))).collect();
        assert_eq!(kinds, ["I6*@inf", "I6@t", "I2@t+4", "I2@t^2+t+1"]);
        let t0 = g.local_at(&Place::zero()).unwrap();
        assert_eq!((t0.n_v, t0.f_v(), t0.split, t0.a_v), (1, 6, Some(true), 1));
        assert_eq!(g.infinity.n_v, 2);
        for ld in &g.bad {
            assert_eq!(ld.vdelta_min, ld.n_v + ld.m_v() - 1);
        }
    }

    #[test]
    fn first_example() {
        let k = k(5);
        let e = Curve::from_coeff_lists(&k, [&[1], &[0, 1], &[0, 1], &[], &[]]);
        let g = global_data(&e).unwrap();
        let kinds: Vec<Kodaira> = g.bad.iter().map(|ld| ld.kind).collect();
        assert_eq!(kinds, [Kodaira::InStar(1), Kodaira::In(4), Kodaira::In(1)]);
        assert_eq!(g.infinity.vdelta_min, 7);
        assert_eq!(g.conductor().deg, 4);
        assert_eq!(g.nprime_deg(), 1);
    }

    #[test]
    fn second_example_and_berger() {
        let k5 = k(5);
        let e = Curve::from_coeff_lists(&k5, [&[0, 2], &[], &[], &[0, 0, -1], &[]]);
        let g = global_data(&e).unwrap();
        let v = Place::Finite(k5.ring().from_ints(&[4, 0, 1]));
        assert!(g.local_at(&v).is_none(), "t^2+4 splits over F_5");
        for ld in &g.bad {
            if let Some(f) = ld.place.poly() {
                if k5.ring().rem(&k5.ring().from_ints(&[4, 0, 1]), f).is_zero() {
                    assert_eq!(ld.kind, Kodaira::In(1));
                }
            }
        }
        let k7 = k(7);
        let a = 3i64;
        let e = Curve::from_coeff_lists(&k7, [&[-a, a], &[0, 2 * a + 1], &[0, -a, a], &[0, 0, a * (a + 2)], &[0, 0, 0, a * a]]);
        let g = global_data(&e).unwrap();
        assert_eq!(g.nprime_deg(), 3);
    }

    #[test]
    fn minimal_scaling_and_torsion() {
        let k5 = k(5);
        // y^2 = x^3 + t^12 + t^13 is not minimal at t
        let e = Curve::from_coeff_lists(&k5, [&[], &[], &[], &[], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1]]);
        let g = global_data(&e).unwrap();
        assert!(g.local_at(&Place::zero()).is_none());
        assert_eq!(g.delta.deg(), Some(2));
        let e0 = Curve::from_coeff_lists(&k5, [&[], &[], &[], &[], &[1]]);
        let g0 = global_data(&e0).unwrap();
        assert!(g0.is_constant());
        assert_eq!(torsion_bound_from(&g0).unwrap(), 6);
    }
}
