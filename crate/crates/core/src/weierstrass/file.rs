//! The `key = value` curve file format.

use super::curve::Curve;
use crate::algebra::notation::{parse_ratfunc, ratfunc_to_string};
use crate::algebra::{Fq, FunctionField, RatFunc};
use crate::error::{Error, Result};

const COEFF_KEYS: [&str; 5] = ["a1", "a2", "a3", "a4", "a6"];

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

/// Parse a curve file. Blank lines and lines starting with `#` are ignored;
/// `p` and `e` must precede the coefficients. Missing coefficients are zero.
pub fn parse_curve(text: &str) -> Result<Curve> {
    let mut p: Option<u64> = None;
    let mut e: Option<u32> = None;
    let mut field: Option<FunctionField> = None;
    let mut coeffs: [Option<RatFunc>; 5] = Default::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let eq = raw.find('=').ok_or_else(|| perr(line, 1, "expected `key = value`"))?;
        let key = raw[..eq].trim();
        let value = &raw[eq + 1..];
        let vcol = eq + 2;
        match key {
            "p" | "e" => {
                if field.is_some() {
                    return Err(perr(line, 1, "p and e must precede the coefficients"));
                }
                let n: u64 = value.trim().parse().map_err(|_| perr(line, vcol, "expected a positive integer"))?;
                if key == "p" {
                    if p.replace(n).is_some() {
                        return Err(perr(line, 1, "duplicate key p"));
                    }
                } else if e.replace(n as u32).is_some() {
                    return Err(perr(line, 1, "duplicate key e"));
                }
            }
            k if COEFF_KEYS.contains(&k) => {
                let idx = COEFF_KEYS.iter().position(|&c| c == k).unwrap();
                if field.is_none() {
                    let pp = p.ok_or_else(|| perr(line, 1, "p must be given before coefficients"))?;
                    let fq = Fq::new(pp, e.unwrap_or(1)).map_err(|err| perr(line, 1, err.to_string()))?;
                    field = Some(FunctionField::new(fq));
                }
                let kk = field.as_ref().unwrap();
                let r = parse_ratfunc(kk, value).map_err(|err| match err {
                    Error::Parse { col, msg, .. } => Error::Parse { line, col: col + eq + 1, msg },
                    other => other,
                })?;
                if coeffs[idx].replace(r).is_some() {
                    return Err(perr(line, 1, format!("duplicate key {k}")));
                }
            }
            other => return Err(perr(line, 1, format!("unknown key `{other}`"))),
        }
    }
    let field = match field {
        Some(f) => f,
        None => {
            let pp = p.ok_or_else(|| perr(1, 1, "missing key p"))?;
            FunctionField::new(Fq::new(pp, e.unwrap_or(1))?)
        }
    };
    let a = coeffs.map(|c| c.unwrap_or_else(|| field.from_ints(&[])));
    Curve::checked(field, a)
}

/// Canonical text form; `parse_curve` inverts it exactly.
pub fn print_curve(e: &Curve) -> String {
    let fq = e.field.fq();
    let mut out = format!("p = {}\ne = {}\n", fq.p(), fq.degree());
    for (key, c) in COEFF_KEYS.iter().zip(e.a.iter()) {
        out.push_str(&format!("{key} = {}\n", ratfunc_to_string(&e.field, c)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "p = 5\ne = 1\na1 = 1\na2 = 0\na3 = t\na4 = 0\na6 = 0\n";
        let e = parse_curve(text).unwrap();
        assert_eq!(print_curve(&e), text);
        let text9 = "p = 3\ne = 2\na1 = 0\na2 = [0,1]*t\na3 = 0\na4 = 1/(t+[1,1])\na6 = t^3+2\n";
        let e9 = parse_curve(text9).unwrap();
        assert_eq!(print_curve(&e9), text9);
    }

    #[test]
    fn errors_carry_positions() {
        let bad = "p = 5\na1 = t +* 2\n";
        match parse_curve(bad) {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 9);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_curve("p = 5\na6 = 0\n"), Err(Error::Singular)));
        assert!(parse_curve("q = 5\n").is_err());
        assert!(parse_curve("p = 6\na1 = 1\n").is_err());
    }
}
