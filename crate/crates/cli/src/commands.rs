use anyhow::{bail, Result};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use ffec_core::algebra::notation::{poly_to_string, ratfunc_to_string};
use ffec_core::berger::{self, CatalogParams};
use ffec_core::heights::{self, HeightValue};
use ffec_core::lfunction::{self, LPoly, SLACK};
use ffec_core::local::{global_data, GlobalData};
use ffec_core::towers::{orbit_decomposition, rank_growth_scan, tower_l};
use ffec_core::weierstrass::{parse_curve, print_curve, Curve, CurvePoint};

use crate::report::{ints, rat, rat_rows, Report};

fn curve_record(r: &mut Report, e: &Curve, g: &GlobalData) {
    let k = &e.field;
    let inv = e.invariants();
    let s = |x: &ffec_core::algebra::RatFunc| ratfunc_to_string(k, x);
    r.push(
        "curve",
        json!({
            "p": e.p(),
            "q": e.q(),
            "a": e.a.iter().map(s).collect::<Vec<_>>(),
            "c4": s(&inv.c4),
            "c6": s(&inv.c6),
            "delta": s(&inv.delta),
            "j": inv.j.as_ref().map(s),
            "isotrivial": e.is_isotrivial(),
            "constant": g.is_constant(),
            "height": g.height,
        }),
    );
}

fn localdata_records(r: &mut Report, g: &GlobalData) {
    let fq = g.minimal.field.fq();
    let var = g.minimal.field.var();
    for ld in &g.bad {
        let ogg = ld.vdelta_min == ld.n_v + ld.m_v() - 1;
        let label = ld.place.label(fq, var);
        r.check(&format!("ogg at {label}"), ogg);
        r.push(
            "localdata",
            json!({
                "place": label,
                "deg": ld.deg(),
                "type": ld.kind.to_string(),
                "n_v": ld.n_v,
                "f_v": ld.f_v(),
                "m_v": ld.m_v(),
                "split": ld.split,
                "a_v": ld.a_v,
                "vdelta_min": ld.vdelta_min,
                "tamagawa": ld.tamagawa,
                "ogg": ogg,
            }),
        );
    }
    let c = g.conductor();
    r.push("conductor", json!({ "deg": c.deg, "nprime_deg": g.nprime_deg(), "bad_places": g.bad.len() }));
}

fn lreport(r: &mut Report, l: &LPoly, tol: f64) -> (i32, usize) {
    let eps = lfunction::check_functional_equation(l);
    r.check("functional equation", eps.is_ok());
    let rh = lfunction::check_rh(l, tol);
    r.check("riemann hypothesis", rh);
    let rank = lfunction::analytic_rank(l);
    let eps = eps.unwrap_or(0);
    r.push(
        "lreport",
        json!({
            "q": l.q,
            "N": l.degree(),
            "coeffs": ints(&l.coeffs),
            "epsilon": eps,
            "analytic_rank": rank,
            "rh": rh,
        }),
    );
    (eps, rank)
}

pub fn analyze(argv: &[String], text: &str, max_place_deg: Option<usize>, tol: f64) -> Result<Report> {
    let e = parse_curve(text)?;
    let g = global_data(&e)?;
    let mut r = Report::new("analyze", argv, text.as_bytes());
    curve_record(&mut r, &e, &g);
    localdata_records(&mut r, &g);
    if g.is_constant() {
        let a = lfunction::constant_trace(&g)?;
        let c = lfunction::constant_l(a, e.q() as u64)?;
        r.push("lreport", json!({ "q": c.q, "constant": true, "a": a, "denominator": ints(&c.den) }));
        eprintln!("constant curve over F_{}: a = {a}", c.q);
        return Ok(r);
    }
    let n = lfunction::expected_degree(&g)?;
    let l = lfunction::l_polynomial_to(&g, max_place_deg.unwrap_or(n + SLACK))?;
    r.check("N = deg n - 4", l.degree() == n);
    let (eps, rank) = lreport(&mut r, &l, tol);
    let surface = lfunction::rank_from_surface(&g, &lfunction::surface_zeta(&g, &l));
    let ineq = rank <= l.degree();
    r.check("analytic rank <= N", ineq);
    r.check("surface zeta rank", surface == rank as i64);
    r.push("ranks", json!({ "analytic_rank": rank, "surface_rank": surface, "rank_le_N": ineq }));
    eprintln!(
        "F_{}: deg n = {}, N = {}, epsilon = {eps}, analytic rank {rank}",
        l.q,
        g.conductor().deg,
        l.degree()
    );
    Ok(r)
}

pub fn tower(argv: &[String], text: &str, d: Option<u32>, scan: Option<u32>, mu: bool) -> Result<Report> {
    let e = parse_curve(text)?;
    let mut r = Report::new("tower", argv, text.as_bytes());
    if let Some(n_max) = scan {
        let s = rank_growth_scan(&e, n_max)?;
        for pair in s.rows.chunks(2) {
            r.check(&format!("rank over K_{} >= rank over F_{}", pair[0].d, pair[0].d), pair[1].rank >= pair[0].rank);
        }
        if let Some(w) = &s.warning {
            eprintln!("warning: {w}");
        }
        for row in &s.rows {
            eprintln!("d = {:>4} {}: N = {}, rank {}", row.d, row.field, row.big_n, row.rank);
        }
        eprintln!("c_obs = {}", s.c_obs);
        r.push("towerscan", &s);
        return Ok(r);
    }
    let d = d.expect("clap requires --d or --scan");
    let q = e.q() as u64;
    let orbits = orbit_decomposition(d as u64, q)?;
    let l = tower_l(&e, d, mu)?;
    let field = if mu { "K_d" } else { "F_d" };
    let (eps, rank) = lreport(&mut r, &l, 1e-9);
    r.push("tower", json!({ "d": d, "field": field, "orbit_sizes": orbits.sizes(), "N": l.degree(), "rank": rank }));
    eprintln!("d = {d} {field}: N = {}, epsilon = {eps}, rank {rank}", l.degree());
    Ok(r)
}

fn height_json(h: &HeightValue) -> serde_json::Value {
    json!({
        "value": rat(&h.value),
        "error": rat(&h.error),
        "exact": h.exact.as_ref().map(rat),
        "approx": h.to_f64(),
    })
}

pub fn points(argv: &[String], p: u64, f: u32, iters: u32, tol: f64) -> Result<Report> {
    let input = format!("legendre p={p} f={f} iters={iters}");
    let mut r = Report::new("points", argv, input.as_bytes());
    let fam = heights::legendre_family(p, f)?;
    let e = &fam.curve;
    let k = &e.field;
    let hs: Vec<HeightValue> =
        fam.points.par_iter().map(|pt| heights::canonical_height(e, pt, iters)).collect::<ffec_core::Result<_>>()?;
    let mut pts = Vec::new();
    for (i, (pt, h)) in fam.points.iter().zip(&hs).enumerate() {
        let CurvePoint::Affine(x, y) = pt else { bail!("family point {i} is the identity") };
        r.check(&format!("P{i} on curve"), e.on_curve(pt));
        pts.push(json!({
            "index": i,
            "x": ratfunc_to_string(k, x),
            "y": ratfunc_to_string(k, y),
            "naive_height": heights::naive_height(pt)?,
            "canonical_height": height_json(h),
        }));
    }
    let gram = heights::gram_rank(e, &fam.points, iters, tol)?;
    let d = fam.d as usize;
    r.check("gram rank = d - 2", gram.rank + 2 == d);
    let ones = vec![1i64; d];
    let alt: Vec<i64> = (0..d).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let mut relations = Vec::new();
    for (name, v) in [("sum", &ones), ("alternating", &alt)] {
        let pairs_zero = gram
            .matrix
            .iter()
            .all(|row| row.iter().zip(v.iter()).map(|(g, &c)| g * BigRational::from_integer(c.into())).sum::<BigRational>().is_zero());
        let torsion = heights::is_torsion(e, &fam.combination(v), iters, 1e-6)?;
        r.check(&format!("{name} relation pairs to zero"), pairs_zero);
        r.check(&format!("{name} relation is torsion"), torsion);
        relations.push(json!({ "name": name, "coeffs": v, "pairs_to_zero": pairs_zero, "torsion": torsion }));
    }
    eprintln!("legendre family q = {}: d = {d}, gram rank {}", p.pow(f), gram.rank);
    r.push(
        "points",
        json!({
            "curve": print_curve(e),
            "d": d,
            "iters": iters,
            "points": pts,
            "gram": rat_rows(&gram.matrix),
            "rank": gram.rank,
            "kernel": rat_rows(&gram.kernel),
            "relations": relations,
        }),
    );
    Ok(r)
}

pub fn berger(
    argv: &[String],
    catalog: Option<&str>,
    data_text: Option<&str>,
    p: u64,
    f: u32,
    a: Option<i64>,
    d: Option<u32>,
) -> Result<Report> {
    let data_json = |dt: &berger::BergerData| -> Result<serde_json::Value> {
        let (k, kp, l, lp) = dt.counts();
        Ok(json!({
            "f": dt.f,
            "g": dt.g,
            "m": dt.m(),
            "n": dt.n(),
            "k": k, "k_prime": kp, "l": l, "l_prime": lp,
            "genus": berger::genus(dt, p)?,
            "c2": berger::c2(dt),
        }))
    };
    if let Some(text) = data_text {
        let dt = berger::parse_berger(text)?;
        let mut r = Report::new("berger", argv, text.as_bytes());
        let body = data_json(&dt)?;
        eprintln!("genus {}, c2 {}", body["genus"], body["c2"]);
        r.push("berger", json!({ "data": body }));
        return Ok(r);
    }
    let name = catalog.expect("clap requires --catalog or --data");
    let params = CatalogParams { p, f, a, d };
    let input = format!("{name} p={p} f={f} a={a:?} d={d:?}");
    let mut r = Report::new("berger", argv, input.as_bytes());
    let entry = berger::berger_catalog(name, &params)?;
    let e = &entry.curve;
    let g = global_data(e)?;
    let delta = e.discriminant();
    let mut body = json!({
        "name": name,
        "params": params,
        "curve": print_curve(e),
        "discriminant": ratfunc_to_string(&e.field, &delta),
        "nprime_deg": g.nprime_deg(),
        "multiplicative_count": berger::multiplicative_count(&g),
        "c1": berger::c1(&g),
    });
    if name == "berger-L4" {
        let formula = berger::l4_discriminant(&e.field, a.unwrap_or_default());
        let ok = delta.is_polynomial() && delta.num() == &formula;
        r.check("discriminant matches the product formula", ok);
        body["discriminant_formula"] = json!(poly_to_string(e.field.fq(), &formula, 't'));
        body["discriminant_matches"] = json!(ok);
    }
    if let Some(dt) = &entry.data {
        let dj = data_json(dt)?;
        r.check("genus 1", dj["genus"] == json!(1));
        body["data"] = dj;
    }
    eprintln!("{name}: nprime_deg {}, c1 {}, c2 {}", body["nprime_deg"], body["c1"], body["data"]["c2"]);
    r.push("berger", body);
    Ok(r)
}
