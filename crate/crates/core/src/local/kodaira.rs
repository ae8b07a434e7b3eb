//! Kodaira symbols and the zeta functions of singular fibers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Kodaira {
    I0,
    In(u32),
    II,
    III,
    IV,
    I0Star,
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    /// Geometric number of fiber components.
    pub fn components(self) -> u32 {
        match self {
            Kodaira::I0 | Kodaira::II => 1,
            Kodaira::In(n) => n,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::I0Star => 5,
            Kodaira::InStar(n) => 5 + n,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }

    pub fn is_good(self) -> bool {
        self == Kodaira::I0
    }

    pub fn is_multiplicative(self) -> bool {
        matches!(self, Kodaira::In(_))
    }

    pub fn is_additive(self) -> bool {
        !self.is_good() && !self.is_multiplicative()
    }

    /// 0, 1 or 2 for good, multiplicative or additive reduction.
    pub fn tame_part(self) -> u32 {
        if self.is_good() {
            0
        } else if self.is_multiplicative() {
            1
        } else {
            2
        }
    }

    pub fn parse(s: &str) -> Option<Kodaira> {
        Some(match s {
            "I0" => Kodaira::I0,
            "II" => Kodaira::II,
            "III" => Kodaira::III,
            "IV" => Kodaira::IV,
            "I0*" => Kodaira::I0Star,
            "IV*" => Kodaira::IVStar,
            "III*" => Kodaira::IIIStar,
            "II*" => Kodaira::IIStar,
            _ => {
                let body = s.strip_prefix('I')?;
                if let Some(n) = body.strip_suffix('*') {
                    let n: u32 = n.parse().ok().filter(|&n| n > 0)?;
                    Kodaira::InStar(n)
                } else {
                    let n: u32 = body.parse().ok().filter(|&n| n > 0)?;
                    Kodaira::In(n)
                }
            }
        })
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I0 => write!(f, "I0"),
            Kodaira::In(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::I0Star => write!(f, "I0*"),
            Kodaira::InStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

/// Zeta function of a fiber:
/// `Z(T) = (1-T)^a (1+T)^b / prod_o (1 - (q T)^{|o|})` over the Frobenius
/// orbits `o` on the geometric components.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiberZeta {
    pub a: i32,
    pub b: i32,
    pub orbits: Vec<u32>,
}

impl FiberZeta {
    /// Number of Frobenius orbits on components (the table's `f`).
    pub fn f(&self) -> u32 {
        self.orbits.len() as u32
    }

    /// Number of orbits of length 2 (the table's `g`).
    pub fn g(&self) -> u32 {
        self.orbits.iter().filter(|&&l| l == 2).count() as u32
    }

    /// Whether the zeta function fits the `(a, b, f, g)` shape of the table.
    pub fn is_tabular(&self) -> bool {
        self.orbits.iter().all(|&l| l <= 2)
    }

    /// Points over the degree-`m` extension of a residue field of size `q`.
    pub fn count(&self, q: u64, m: u32) -> BigInt {
        let qm = BigInt::from(q).pow(m);
        let mut n = BigInt::zero();
        for &l in &self.orbits {
            if m % l == 0 {
                n += &qm * l;
            }
        }
        n -= self.a;
        if m % 2 == 0 {
            n -= self.b;
        } else {
            n += self.b;
        }
        n
    }

    /// The fiber zeta determined by type and splitness; `cubic_orbits`
    /// overrides the I0* case when the cubic has no root.
    pub fn for_type(kind: Kodaira, split: Option<bool>) -> FiberZeta {
        let ones = |n: u32| vec![1u32; n as usize];
        let split = split.unwrap_or(true);
        match kind {
            Kodaira::I0 => FiberZeta { a: 1, b: 0, orbits: vec![] },
            Kodaira::In(n) => {
                if split {
                    FiberZeta { a: 0, b: 0, orbits: ones(n) }
                } else {
                    let fixed = if n % 2 == 1 { 1 } else { 2 };
                    let mut orbits = ones(fixed);
                    orbits.extend(vec![2; ((n - fixed) / 2) as usize]);
                    FiberZeta { a: -1, b: 1, orbits }
                }
            }
            Kodaira::InStar(_) | Kodaira::I0Star | Kodaira::IV | Kodaira::IVStar => {
                let m = kind.components();
                if split {
                    return FiberZeta { a: -1, b: 0, orbits: ones(m) };
                }
                let pairs = match kind {
                    Kodaira::IVStar => 2,
                    _ => 1,
                };
                let mut orbits = ones(m - 2 * pairs);
                orbits.extend(vec![2; pairs as usize]);
                FiberZeta { a: -1, b: 0, orbits }
            }
            _ => FiberZeta { a: -1, b: 0, orbits: ones(kind.components()) },
        }
    }

    /// I0* whose three non-identity ends form one Frobenius orbit.
    pub fn i0_star_cyclic() -> FiberZeta {
        FiberZeta { a: -1, b: 0, orbits: vec![1, 1, 3] }
    }

    /// The rational function `Z(T)` as numerator and denominator integer
    /// polynomials in `T` (little-endian).
    pub fn rational(&self, q: u64) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut num = vec![BigInt::one()];
        let mut den = vec![BigInt::one()];
        let one_minus = vec![BigInt::one(), -BigInt::one()];
        let one_plus = vec![BigInt::one(), BigInt::one()];
        let push = |acc: &mut Vec<BigInt>, f: &[BigInt], e: i32| {
            for _ in 0..e {
                *acc = poly_mul(acc, f);
            }
        };
        let (an, ad) = if self.a >= 0 { (self.a, 0) } else { (0, -self.a) };
        let (bn, bd) = if self.b >= 0 { (self.b, 0) } else { (0, -self.b) };
        push(&mut num, &one_minus, an);
        push(&mut den, &one_minus, ad);
        push(&mut num, &one_plus, bn);
        push(&mut den, &one_plus, bd);
        for &l in &self.orbits {
            let mut f = vec![BigInt::zero(); l as usize + 1];
            f[0] = BigInt::one();
            f[l as usize] = -BigInt::from(q).pow(l);
            den = poly_mul(&den, &f);
        }
        (num, den)
    }
}

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `N_m` for a row of the fiber table.
pub fn fiber_counts(kind: Kodaira, split: Option<bool>, qv: u64, m: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::Parameter("m must be positive".into()));
    }
    let has_split_variants = matches!(kind, Kodaira::In(_) | Kodaira::InStar(_) | Kodaira::I0Star | Kodaira::IV | Kodaira::IVStar);
    if has_split_variants && split.is_none() {
        return Err(Error::Parameter(format!("type {kind} needs a split flag")));
    }
    if !has_split_variants && split == Some(false) {
        return Err(Error::Parameter(format!("type {kind} has no non-split row")));
    }
    if kind == Kodaira::I0 {
        return Err(Error::Parameter("I0 is not a singular fiber".into()));
    }
    Ok(FiberZeta::for_type(kind, split).count(qv, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let row = |k, s| {
            let z = FiberZeta::for_type(k, s);
            (z.a, z.b, z.f(), z.g())
        };
        assert_eq!(row(Kodaira::In(3), Some(true)), (0, 0, 3, 0));
        assert_eq!(row(Kodaira::In(5), Some(false)), (-1, 1, 3, 2));
        assert_eq!(row(Kodaira::In(6), Some(false)), (-1, 1, 4, 2));
        assert_eq!(row(Kodaira::In(2), Some(false)), (-1, 1, 2, 0));
        assert_eq!(row(Kodaira::InStar(2), Some(true)), (-1, 0, 7, 0));
        assert_eq!(row(Kodaira::InStar(2), Some(false)), (-1, 0, 6, 1));
        assert_eq!(row(Kodaira::II, None), (-1, 0, 1, 0));
        assert_eq!(row(Kodaira::IIStar, None), (-1, 0, 9, 0));
        assert_eq!(row(Kodaira::III, None), (-1, 0, 2, 0));
        assert_eq!(row(Kodaira::IIIStar, None), (-1, 0, 8, 0));
        assert_eq!(row(Kodaira::IV, Some(true)), (-1, 0, 3, 0));
        assert_eq!(row(Kodaira::IV, Some(false)), (-1, 0, 2, 1));
        assert_eq!(row(Kodaira::IVStar, Some(true)), (-1, 0, 7, 0));
        assert_eq!(row(Kodaira::IVStar, Some(false)), (-1, 0, 5, 2));
    }

    #[test]
    fn counts() {
        assert_eq!(fiber_counts(Kodaira::In(3), Some(true), 7, 1).unwrap(), BigInt::from(21));
        assert_eq!(fiber_counts(Kodaira::In(2), Some(false), 7, 1).unwrap(), BigInt::from(16));
        assert_eq!(fiber_counts(Kodaira::II, None, 7, 1).unwrap(), BigInt::from(8));
        assert!(fiber_counts(Kodaira::IV, None, 7, 1).is_err());
        assert!(fiber_counts(Kodaira::II, Some(false), 7, 1).is_err());
    }

    #[test]
    fn symbols_round_trip() {
        for s in ["I0", "I1", "I12", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*"] {
            assert_eq!(Kodaira::parse(s).unwrap().to_string(), s);
        }
        assert!(Kodaira::parse("I-1").is_none());
        assert!(Kodaira::parse("V").is_none());
    }
}
