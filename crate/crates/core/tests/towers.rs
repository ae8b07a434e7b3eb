use ffec_core::towers::{lemma_la_verify, orbit_decomposition, random_block_system, seeded_rng, LaHypothesis};
use proptest::prelude::*;

proptest! {
    #[test]
    fn orbits_partition_residues(d in 1u64..200, qi in 0usize..5) {
        let q = [2u64, 3, 4, 5, 7][qi];
        prop_assume!(num_integer::gcd(d, q) == 1);
        let o = orbit_decomposition(d, q).unwrap();
        let mut all: Vec<u64> = o.orbits.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..d).collect::<Vec<_>>());
        let ord = ffec_core::algebra::mult_order(q, d).unwrap() as usize;
        for orbit in &o.orbits {
            prop_assert_eq!(ord % orbit.len(), 0);
        }
    }
}

#[test]
fn odd_block_count_is_a_hypothesis_failure() {
    let mut rng = seeded_rng(3);
    let mut b = random_block_system(4, 1, &mut rng);
    b.a = 3;
    b.dims = vec![1, 1, 2];
    assert!(lemma_la_verify(&b).is_err());
    let b = random_block_system(4, 4, &mut rng);
    assert_eq!(lemma_la_verify(&b), Err(LaHypothesis::EvenDimension));
}
