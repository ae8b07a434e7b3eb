use num_bigint::BigInt;

use ffec_core::algebra::{Fq, FunctionField};
use ffec_core::lfunction::{
    analytic_rank, check_functional_equation, check_rh, constant_extension, l_polynomial, rank_from_surface, surface_zeta,
};
use ffec_core::local::global_data;
use ffec_core::towers::{tower_l, tower_l_direct};
use ffec_core::weierstrass::Curve;

fn curve(p: u64, a: [&[i64]; 5]) -> Curve {
    Curve::from_coeff_lists(&FunctionField::new(Fq::new(p, 1).unwrap()), a)
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn cubic_twist_over_f5() {
    let e = curve(5, [&[], &[1, 0, 0, 1], &[], &[0, 0, 0, 1], &[]]);
    let l = l_polynomial(&e).unwrap();
    assert_eq!(l.coeffs, big(&[1, 0, -25]));
    assert_eq!(check_functional_equation(&l), Ok(-1));
    assert!(check_rh(&l, 1e-9));
    assert_eq!(analytic_rank(&l), 1);
    let g = global_data(&e).unwrap();
    assert_eq!(rank_from_surface(&g, &surface_zeta(&g, &l)), 1);
}

#[test]
fn tower_at_one_is_the_base() {
    let e = curve(5, [&[], &[1, 0, 0, 1], &[], &[0, 0, 0, 1], &[]]);
    assert_eq!(tower_l(&e, 1, false).unwrap(), l_polynomial(&e).unwrap());
    assert_eq!(tower_l(&e, 1, true).unwrap(), l_polynomial(&e).unwrap());
}

#[test]
fn mu_d_extension_matches_direct_computation() {
    let e7 = curve(2, [&[1], &[], &[0, 1], &[], &[]]);
    assert_eq!(tower_l(&e7, 3, true).unwrap(), tower_l_direct(&e7, 3).unwrap());
    let e8 = curve(3, [&[1], &[], &[], &[0, 1], &[]]);
    assert_eq!(tower_l(&e8, 2, true).unwrap(), tower_l_direct(&e8, 2).unwrap());
    let e9 = curve(2, [&[1], &[], &[], &[], &[0, 1]]);
    assert_eq!(tower_l(&e9, 3, true).unwrap(), tower_l_direct(&e9, 3).unwrap());
}

#[test]
fn constant_extension_raises_inverse_roots() {
    let e7 = curve(2, [&[1], &[], &[0, 1], &[], &[]]);
    let l = tower_l(&e7, 5, false).unwrap();
    assert_eq!(l.coeffs, big(&[1, 0, 0, 0, -16]));
    let l4 = constant_extension(&l, 4);
    assert_eq!(l4.q, 16);
    assert_eq!(l4.coeffs, big(&[1, -64, 1536, -16384, 65536]));
    assert_eq!(analytic_rank(&l4), 4);
}

#[test]
fn constant_curves_are_routed() {
    let e = curve(5, [&[], &[], &[], &[], &[1]]);
    assert_eq!(l_polynomial(&e), Err(ffec_core::Error::ConstantCurve));
}
