//! Berger's construction: divisor data for `f(x) = t g(y)`, the genus
//! formula, the constants `c1` and `c2`, and a catalog of worked curves.

use serde::Serialize;

use crate::algebra::numth::gcd;
use crate::algebra::{Fq, FunctionField, Place, Poly};
use crate::error::{Error, Result};
use crate::local::GlobalData;
use crate::weierstrass::Curve;

/// A point of P^1 with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mult {
    pub label: String,
    pub mult: u64,
}

/// Zeros and poles of a rational function on P^1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divisor {
    pub zeros: Vec<Mult>,
    pub poles: Vec<Mult>,
}

impl Divisor {
    pub fn degree(&self) -> u64 {
        self.zeros.iter().map(|m| m.mult).sum()
    }

    fn pole_degree(&self) -> u64 {
        self.poles.iter().map(|m| m.mult).sum()
    }

    fn all(&self) -> impl Iterator<Item = &Mult> {
        self.zeros.iter().chain(&self.poles)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BergerData {
    pub f: Divisor,
    pub g: Divisor,
}

impl BergerData {
    /// `m = Σ a_i`.
    pub fn m(&self) -> u64 {
        self.f.degree()
    }

    /// `n = Σ b_j`.
    pub fn n(&self) -> u64 {
        self.g.degree()
    }

    /// `(k, k', ℓ, ℓ')`.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (self.f.zeros.len(), self.f.poles.len(), self.g.zeros.len(), self.g.poles.len())
    }

    /// The standing hypotheses, checked in characteristic `p`.
    pub fn check(&self, p: u64) -> Result<()> {
        for (name, d) in [("f", &self.f), ("g", &self.g)] {
            if d.zeros.is_empty() || d.poles.is_empty() {
                return Err(Error::BergerHypothesis(format!("{name} needs at least one zero and one pole")));
            }
            if d.degree() != d.pole_degree() {
                return Err(Error::BergerHypothesis(format!(
                    "{name} has {} zeros but {} poles with multiplicity",
                    d.degree(),
                    d.pole_degree()
                )));
            }
            let mut labels: Vec<&str> = d.all().map(|m| m.label.as_str()).collect();
            labels.sort_unstable();
            if labels.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BergerHypothesis(format!("{name} repeats a point")));
            }
            if let Some(m) = d.all().find(|m| m.mult == 0 || m.mult % p == 0) {
                return Err(Error::BergerHypothesis(format!("{name} has multiplicity {} at {}", m.mult, m.label)));
            }
            if d.all().fold(0, |acc, m| gcd(acc, m.mult)) != 1 {
                return Err(Error::BergerHypothesis(format!("the multiplicities of {name} have a common factor")));
            }
        }
        Ok(())
    }
}

/// `(ab - a - b + gcd(a, b)) / 2`.
pub fn delta(a: u64, b: u64) -> u64 {
    assert!(a >= 1 && b >= 1);
    (a * b + gcd(a, b) - a - b) / 2
}

/// Genus of the smooth proper model of `f(x) = t g(y)`.
pub fn genus(data: &BergerData, p: u64) -> Result<i64> {
    data.check(p)?;
    let pairs = |u: &[Mult], v: &[Mult]| -> i64 {
        u.iter().flat_map(|a| v.iter().map(move |b| delta(a.mult, b.mult) as i64)).sum()
    };
    Ok((data.m() as i64 - 1) * (data.n() as i64 - 1)
        - pairs(&data.f.zeros, &data.g.zeros)
        - pairs(&data.f.poles, &data.g.poles))
}

/// `(k - 1)(ℓ - 1) + (k' - 1)(ℓ' - 1)`.
pub fn c2(data: &BergerData) -> i64 {
    let (k, kp, l, lp) = data.counts();
    (k as i64 - 1) * (l as i64 - 1) + (kp as i64 - 1) * (lp as i64 - 1)
}

/// `Σ deg(v) (m_v - 1)` over bad places other than `t = 0` and `t = ∞`.
pub fn c1(g: &GlobalData) -> u64 {
    away_from_zero_infinity(g).map(|ld| ld.deg() as u64 * (ld.m_v() as u64 - 1)).sum()
}

/// Number of geometric points other than `0, ∞` with multiplicative reduction.
pub fn multiplicative_count(g: &GlobalData) -> u64 {
    away_from_zero_infinity(g).filter(|ld| ld.kind.is_multiplicative()).map(|ld| ld.deg() as u64).sum()
}

fn away_from_zero_infinity(g: &GlobalData) -> impl Iterator<Item = &crate::local::LocalData> {
    let zero = Place::zero();
    g.bad.iter().filter(move |ld| !ld.place.is_infinity() && ld.place != zero)
}

fn parse_mults(s: &str) -> std::result::Result<Vec<Mult>, String> {
    s.split_whitespace()
        .map(|tok| {
            let (m, label) = tok.split_once('@').ok_or_else(|| format!("expected mult@point, found {tok:?}"))?;
            let mult = m.parse::<u64>().map_err(|_| format!("bad multiplicity {m:?}"))?;
            if label.is_empty() {
                return Err(format!("empty point label in {tok:?}"));
            }
            Ok(Mult { label: label.to_string(), mult })
        })
        .collect()
}

/// Parse `f: a1@P1 ... / a'1@P'1 ...` and `g: ...` lines. Blank lines and
/// `#` comments are skipped.
pub fn parse_berger(text: &str) -> Result<BergerData> {
    let mut f = None;
    let mut g = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let err = |col: usize, msg: String| Error::Parse { line: i + 1, col, msg };
        let (name, rest) = line.split_once(':').ok_or_else(|| err(1, "expected `f:` or `g:`".into()))?;
        let col = name.len() + 2;
        let (zs, ps) = rest.split_once('/').ok_or_else(|| err(col, "expected `zeros / poles`".into()))?;
        let div = Divisor {
            zeros: parse_mults(zs).map_err(|m| err(col, m))?,
            poles: parse_mults(ps).map_err(|m| err(col + zs.len() + 1, m))?,
        };
        let slot = match name.trim() {
            "f" => &mut f,
            "g" => &mut g,
            other => return Err(err(1, format!("unknown function {other:?}"))),
        };
        if slot.replace(div).is_some() {
            return Err(err(1, format!("{} given twice", name.trim())));
        }
    }
    let missing = |w: &str| Error::Parse { line: text.lines().count().max(1), col: 1, msg: format!("missing `{w}:` line") };
    Ok(BergerData { f: f.ok_or_else(|| missing("f"))?, g: g.ok_or_else(|| missing("g"))? })
}

fn mults(pairs: &[(u64, &str)]) -> Vec<Mult> {
    pairs.iter().map(|&(mult, l)| Mult { label: l.to_string(), mult }).collect()
}

/// Catalog parameters. `a` is read modulo `p`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CatalogParams {
    pub p: u64,
    pub f: u32,
    pub a: Option<i64>,
    pub d: Option<u32>,
}

pub const CATALOG: [&str; 4] = ["berger-L4", "first-example", "second-example", "legendre"];

/// A named curve together with its Berger data when it is known.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub curve: Curve,
    pub data: Option<BergerData>,
}

/// `f = g = x(x - a)/(x - 1)`.
pub fn l4_data() -> BergerData {
    let d = Divisor { zeros: mults(&[(1, "0"), (1, "a")]), poles: mults(&[(1, "1"), (1, "inf")]) };
    BergerData { f: d.clone(), g: d }
}

/// `f = x(x - 1)`, `g = y^2/(1 - y)`.
pub fn first_example_data() -> BergerData {
    BergerData {
        f: Divisor { zeros: mults(&[(1, "0"), (1, "1")]), poles: mults(&[(2, "inf")]) },
        g: Divisor { zeros: mults(&[(2, "0")]), poles: mults(&[(1, "1"), (1, "inf")]) },
    }
}

/// `f = x/(x^2 - 1)`, `g = y(y - 1)`.
pub fn second_example_data() -> BergerData {
    BergerData {
        f: Divisor { zeros: mults(&[(1, "0"), (1, "inf")]), poles: mults(&[(1, "1"), (1, "-1")]) },
        g: Divisor { zeros: mults(&[(1, "0"), (1, "1")]), poles: mults(&[(2, "inf")]) },
    }
}

/// `a^2 (a-1)^4 t^4 (t-1)^2 (a^2 t^2 - (2a^2 - 16a + 16) t + a^2)` over F_p.
pub fn l4_discriminant(k: &FunctionField, a: i64) -> Poly {
    let r = k.ring();
    let c = |v: i64| r.from_ints(&[v]);
    let mut out = r.mul(&c(a * a), &r.pow(&c(a - 1), 4));
    out = r.mul(&out, &r.pow(&r.x(), 4));
    out = r.mul(&out, &r.pow(&r.from_ints(&[-1, 1]), 2));
    r.mul(&out, &r.from_ints(&[a * a, -(2 * a * a - 16 * a + 16), a * a]))
}

/// The named curve over `F_{p^f}(t)`.
pub fn berger_catalog(name: &str, params: &CatalogParams) -> Result<CatalogEntry> {
    let f = params.f.max(1);
    let p = params.p;
    let fq = |p: u64, f: u32| Fq::new(p, f).map(FunctionField::new);
    let (curve, data) = match name {
        "berger-L4" => {
            let a = params.a.ok_or_else(|| Error::Parameter("berger-L4 needs a".into()))?;
            let am = a.rem_euclid(p as i64);
            if am == 0 || am == 1 || am == 2 % p as i64 {
                return Err(Error::Parameter(format!("a = {a} must differ from 0, 1, 2 mod {p}")));
            }
            let k = fq(p, f)?;
            let e = Curve::from_coeff_lists(
                &k,
                [&[-a, a], &[0, 2 * a + 1], &[0, -a, a], &[0, 0, a * (a + 2)], &[0, 0, 0, a * a]],
            );
            (e, Some(l4_data()))
        }
        "first-example" => {
            let k = fq(p, f)?;
            (Curve::from_coeff_lists(&k, [&[1], &[0, 1], &[0, 1], &[], &[]]), Some(first_example_data()))
        }
        "second-example" => {
            if p == 2 {
                return Err(Error::Characteristic(2));
            }
            let k = fq(p, f)?;
            (Curve::from_coeff_lists(&k, [&[0, 2], &[], &[], &[0, 0, -1], &[]]), Some(second_example_data()))
        }
        "legendre" => {
            let d = params.d.unwrap_or(1) as usize;
            if d == 0 {
                return Err(Error::Parameter("d must be positive".into()));
            }
            let k = fq(p, f)?;
            let mut td = vec![0; d + 1];
            td[d] = 1;
            (Curve::from_coeff_lists(&k, [&[1], &td, &td, &[], &[]]), Some(first_example_data()))
        }
        other => return Err(Error::UnknownCatalog(other.to_string())),
    };
    if !curve.is_smooth() {
        return Err(Error::Singular);
    }
    Ok(CatalogEntry { name: name.to_string(), curve, data })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::global_data;

    #[test]
    fn delta_values() {
        assert_eq!(delta(1, 1), 0);
        assert_eq!(delta(1, 2), 0);
        assert_eq!(delta(2, 3), 1);
        assert_eq!(delta(2, 2), 1);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&first_example_data(), 5), Ok(1));
        assert_eq!(genus(&l4_data(), 5), Ok(1));
        assert_eq!(genus(&second_example_data(), 5), Ok(1));
        let lin = BergerData {
            f: Divisor { zeros: mults(&[(1, "0")]), poles: mults(&[(1, "inf")]) },
            g: Divisor { zeros: mults(&[(1, "0")]), poles: mults(&[(1, "inf")]) },
        };
        assert_eq!(genus(&lin, 3), Ok(0));
        let swapped = BergerData { f: first_example_data().g, g: first_example_data().f };
        assert_eq!(genus(&swapped, 5), Ok(1));
        assert!(genus(&first_example_data(), 2).is_err());
    }

    #[test]
    fn c2_counts() {
        assert_eq!(c2(&first_example_data()), 0);
        assert_eq!(c2(&second_example_data()), 1);
        assert_eq!(c2(&l4_data()), 2);
    }

    #[test]
    fn parse_round_trip() {
        let d = parse_berger("# first example\nf: 1@0 1@1 / 2@inf\ng: 2@0 / 1@1 1@inf\n").unwrap();
        assert_eq!(d, first_example_data());
        assert!(matches!(parse_berger("f: 1@0 / 1@inf\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_berger("f: 1@0 1@inf\ng: 1@0 / 1@1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_berger("f: x@0 / 1@1\ng: 1@0 / 1@1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn l4_discriminant_matches() {
        let e = berger_catalog("berger-L4", &CatalogParams { p: 7, f: 1, a: Some(3), d: None }).unwrap();
        let g = global_data(&e.curve).unwrap();
        let delta = e.curve.discriminant();
        assert!(delta.is_polynomial());
        assert_eq!(delta.num(), &l4_discriminant(&e.curve.field, 3));
        assert_eq!(g.nprime_deg(), 3);
        assert!(berger_catalog("berger-L4", &CatalogParams { p: 7, f: 1, a: Some(9), d: None }).is_err());
        assert!(berger_catalog("nope", &CatalogParams::default()).is_err());
    }
}
