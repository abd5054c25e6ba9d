//! Property tests over randomized inputs.

use chainring::code::{Code, DualForm};
use chainring::ext::Tower;
use chainring::fixtures;
use chainring::io;
use chainring::linalg::{self, Mat};
use chainring::ring::{Element, Ring};
use chainring::rng::Rng;
use proptest::prelude::*;

fn fixture_strategy() -> impl Strategy<Value = Ring> {
    prop_oneof![
        Just(fixtures::ring("z4").unwrap()),
        Just(fixtures::ring("z8").unwrap()),
        Just(fixtures::ring("z9").unwrap()),
        Just(fixtures::ring("gr42").unwrap()),
        Just(fixtures::ring("f2u2").unwrap()),
        Just(fixtures::ring("f8u2").unwrap()),
    ]
}

fn rand_element(ring: &Ring, seed: u64) -> Element {
    ring.random(&mut Rng::new(seed))
}

fn rand_matrix(ring: &Ring, seed: u64, k: usize, cols: usize) -> Mat {
    let mut rng = Rng::new(seed);
    let rows = (0..k)
        .map(|_| (0..cols).map(|_| ring.random(&mut rng)).collect())
        .collect();
    Mat::from_rows(ring, rows).unwrap()
}

proptest! {
    #[test]
    fn element_text_and_json_roundtrip(ring in fixture_strategy(), seed in any::<u64>()) {
        let e = rand_element(&ring, seed);
        prop_assert_eq!(ring.parse_element(&e.to_string()).unwrap(), e.clone());
        let dto = io::element_to_dto(&e);
        let json = serde_json::to_string(&dto).unwrap();
        let back: io::ElementDto = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(io::element_from_dto(&ring, &back).unwrap(), e);
    }

    #[test]
    fn theta_adic_roundtrip(ring in fixture_strategy(), seed in any::<u64>()) {
        let e = rand_element(&ring, seed);
        let digits = ring.theta_adic(&e);
        prop_assert!(digits.iter().all(|d| ring.is_teichmuller(d)));
        prop_assert_eq!(ring.from_theta_adic(&digits).unwrap(), e);
    }

    #[test]
    fn ring_arithmetic_laws(ring in fixture_strategy(), s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (rand_element(&ring, s1), rand_element(&ring, s2), rand_element(&ring, s3));
        prop_assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&a, &ring.mul(&b, &c)), ring.mul(&ring.mul(&a, &b), &c));
        prop_assert_eq!(
            ring.mul(&a, &ring.add(&b, &c)),
            ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
        );
    }

    #[test]
    fn rsf_is_canonical_under_row_transforms(
        seed in any::<u64>(),
        k in 1usize..4,
        cols in 1usize..5,
    ) {
        let ring = fixtures::ring("z9").unwrap();
        let m = rand_matrix(&ring, seed, k, cols);
        let rsf = linalg::row_standard_form(&m).rsf;
        prop_assert!(linalg::is_rsf(&rsf));
        let p = linalg::random_invertible(&ring, k, &mut Rng::new(seed ^ 0xabc));
        let pm = p.mul(&m).unwrap();
        prop_assert_eq!(linalg::row_standard_form(&pm).rsf, rsf);
    }

    #[test]
    fn dual_involution_and_cardinality(seed in any::<u64>(), k in 1usize..4, cols in 1usize..5) {
        let ring = fixtures::ring("gr42").unwrap();
        let tower = Tower::extend(&ring, 1).unwrap();
        let b = Code::from_matrix(&tower, &rand_matrix(&ring, seed, k, cols));
        let d = b.dual(DualForm::Euclidean).unwrap();
        prop_assert_eq!(d.dual(DualForm::Euclidean).unwrap(), b.clone());
        prop_assert_eq!(
            b.cardinality() * d.cardinality(),
            ring.size().pow(b.length() as u32)
        );
    }

    #[test]
    fn restriction_inside_trace(seed in any::<u64>(), k in 1usize..3, cols in 1usize..4) {
        let tower = fixtures::tower("gr42").unwrap();
        let b = Code::from_matrix(&tower, &rand_matrix(tower.top(), seed, k, cols));
        let res = b.restriction();
        let tr = b.trace_code();
        for i in 0..res.rsf().nrows() {
            prop_assert!(tr.contains(res.rsf().row(i)));
        }
    }

    #[test]
    fn delsarte_identity_random(seed in any::<u64>(), k in 1usize..3, cols in 1usize..4) {
        let tower = fixtures::tower("gr43").unwrap();
        let b = Code::from_matrix(&tower, &rand_matrix(tower.top(), seed, k, cols));
        prop_assert!(b.delsarte_check().unwrap().equal);
    }
}
