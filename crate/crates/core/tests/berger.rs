use ffec_core::berger::{
    berger_catalog, c1, c2, genus, multiplicative_count, parse_berger, second_example_data, CatalogParams,
};
use ffec_core::local::global_data;

#[test]
fn l4_family_has_three_multiplicative_points() {
    for (p, a) in [(5u64, 3i64), (7, 3), (7, 4), (11, 4), (13, 5)] {
        let e = berger_catalog("berger-L4", &CatalogParams { p, f: 1, a: Some(a), d: None }).unwrap();
        let g = global_data(&e.curve).unwrap();
        assert_eq!(multiplicative_count(&g), 3, "p={p} a={a}");
        assert_eq!(g.nprime_deg(), 3, "p={p} a={a}");
    }
}

#[test]
fn worked_examples_have_c1_zero() {
    for p in [3u64, 5, 7, 11] {
        let e = berger_catalog("first-example", &CatalogParams { p, f: 1, ..Default::default() }).unwrap();
        assert_eq!(c1(&global_data(&e.curve).unwrap()), 0);
        let e = berger_catalog("second-example", &CatalogParams { p, f: 1, ..Default::default() }).unwrap();
        assert_eq!(c1(&global_data(&e.curve).unwrap()), 0);
    }
    assert_eq!(c2(&second_example_data()), 1);
}

#[test]
fn quadratic_data_file_has_genus_one() {
    let d = parse_berger("f: 1@0 1@a / 1@1 1@inf\ng: 1@0 1@a / 1@1 1@inf\n").unwrap();
    assert_eq!(genus(&d, 7), Ok(1));
    assert_eq!(c2(&d), 2);
}

#[test]
fn catalog_rejects_bad_parameters() {
    assert!(berger_catalog("berger-L4", &CatalogParams { p: 5, f: 1, a: Some(2), d: None }).is_err());
    assert!(berger_catalog("berger-L4", &CatalogParams { p: 5, f: 1, a: None, d: None }).is_err());
    assert!(berger_catalog("second-example", &CatalogParams { p: 2, f: 1, ..Default::default() }).is_err());
}
