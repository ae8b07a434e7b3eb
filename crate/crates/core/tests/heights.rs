use num_rational::BigRational;
use num_traits::Zero;

use ffec_core::heights::{canonical_height, is_torsion, legendre_family, naive_height};

#[test]
fn doubling_scales_height_by_four() {
    let fam = legendre_family(3, 1).unwrap();
    let e = &fam.curve;
    for p in &fam.points {
        let h = canonical_height(e, p, 5).unwrap();
        let h2 = canonical_height(e, &e.double_point(p), 5).unwrap();
        assert_eq!(h2.best(), &(h.best() * BigRational::from_integer(4.into())));
        assert!(h.best() > &BigRational::zero());
        assert!(!is_torsion(e, p, 5, 1e-6).unwrap());
    }
}

#[test]
fn parallelogram_law_is_exact_in_the_limit() {
    let fam = legendre_family(3, 1).unwrap();
    let e = &fam.curve;
    let (p, q) = (&fam.points[0], &fam.points[1]);
    let h = |x| canonical_height(e, x, 5).unwrap().best().clone();
    let (sum, diff) = (e.add_points(p, q), e.add_points(p, &e.neg_point(q)));
    let lhs = h(&sum) + h(&diff);
    let rhs = (h(p) + h(q)) * BigRational::from_integer(2.into());
    assert_eq!(lhs, rhs);
}

#[test]
fn family_for_p5_lies_on_the_curve() {
    let fam = legendre_family(5, 1).unwrap();
    assert_eq!(fam.d, 6);
    assert_eq!(fam.points.len(), 6);
    assert!(fam.points.iter().all(|p| fam.curve.on_curve(p)));
    assert!(naive_height(&fam.points[0]).unwrap() > 0);
}

#[test]
fn points_are_rotations_of_the_first() {
    let fam = legendre_family(3, 1).unwrap();
    let k = &fam.curve.field;
    let mut z = ffec_core::algebra::FqElem::ONE;
    for p in &fam.points {
        let (ffec_core::weierstrass::CurvePoint::Affine(x, _), ffec_core::weierstrass::CurvePoint::Affine(x0, _)) =
            (p, &fam.points[0])
        else {
            panic!("identity in family")
        };
        assert_eq!(x, &k.scale_variable(x0, z));
        z = k.fq().mul(z, fam.zeta);
    }
}
