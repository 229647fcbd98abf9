//! Reference values computed independently of the Gröbner machinery, and
//! the library's results compared against them.

use grpf_core::checks::{check_curve_family, CheckConfig, CURVE_DEGREE};
use grpf_core::poly::GbOptions;
use grpf_core::sampler::{sample_y, SampleBudget, YStrategy};
use grpf_core::varieties::{random_instance, schubert_ideal, grassmannian_ideal, y_point_data};
use grpf_core::{PrimeField, Subspace};
use num_rational::Ratio;

/// Monotone lattice paths in the 2×5 box, row lengths `(a, b)` with
/// `a ≥ b`, from `start` to the full box: the number of standard fillings
/// of the skew diagram, i.e. `deg(σ_start · σ_1^k)` on `G(2,7)` by Pieri.
fn pieri_paths(start: (u32, u32)) -> u64 {
    fn go(a: u32, b: u32) -> u64 {
        if (a, b) == (5, 5) {
            return 1;
        }
        let mut n = 0;
        if a < 5 {
            n += go(a + 1, b);
        }
        if b < a {
            n += go(a, b + 1);
        }
        n
    }
    go(start.0, start.1)
}

#[test]
fn pieri_oracle() {
    // σ_1^10: degree of G(2,7) in its Plücker embedding
    assert_eq!(pieri_paths((0, 0)), 42);
    // σ_3 σ_1^7: planes meeting a fixed 3-space, cut by 7 hyperplanes
    assert_eq!(pieri_paths((3, 0)), 14);
    assert_eq!(CURVE_DEGREE, pieri_paths((3, 0)) as i64);
    // hook length formula for the 2×5 rectangle, independent of the recursion
    let hooks: u64 = [6u64, 5, 4, 3, 2, 5, 4, 3, 2, 1].iter().product();
    assert_eq!((1..=10u64).product::<u64>() / hooks, 42);
}

#[test]
fn grassmannian_degree_matches_oracle() {
    let f = PrimeField::new(31).unwrap();
    let (_, hp) = grassmannian_ideal(f).hilbert(&GbOptions::default()).unwrap();
    assert_eq!((hp.proj_dim, hp.degree), (10, pieri_paths((0, 0)) as i64));
}

/// Hilbert polynomial of a transverse section by `c` hyperplanes of a
/// Cohen-Macaulay variety with h-vector `h` and dimension `d`:
/// `Σ_k h_k · C(t − k + d − c, d − c)`.
fn section_hilbert_polynomial(h: &[i64], d: i64, c: i64, t: i64) -> i64 {
    let e = d - c;
    h.iter()
        .enumerate()
        .map(|(k, &hk)| {
            let top = t - k as i64 + e;
            let mut b = Ratio::from_integer(1i64);
            for i in 0..e {
                b = b * Ratio::from_integer(top - i) / Ratio::from_integer(i + 1);
            }
            hk * b.to_integer()
        })
        .sum()
}

#[test]
fn schubert_cycle_and_curve_hilbert_polynomial() {
    let f = PrimeField::new(31).unwrap();
    let k = Subspace::from_spanning(f, 7, &[
        vec![0, 0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 0, 1],
    ]);
    let (_, hp) = schubert_ideal(&k).unwrap().hilbert(&GbOptions::default()).unwrap();
    assert_eq!((hp.proj_dim, hp.degree), (7, 14));
    assert_eq!(hp.h_vector, vec![1, 7, 6]);
    assert_eq!(hp.h_vector.iter().sum::<i64>(), pieri_paths((3, 0)) as i64);

    // cutting the 7-fold by seven hyperplanes: 14t − 5
    let oracle: Vec<i64> = (0..6).map(|t| section_hilbert_polynomial(&hp.h_vector, 7, 6, t)).collect();
    assert_eq!(oracle, (0..6).map(|t| 14 * t - 5).collect::<Vec<_>>());

    let inst = random_instance(2, 31).unwrap();
    let ys = sample_y(&inst, &SampleBudget::new(3_000_000, 3, 5), YStrategy::ScanThenSlice { max_slices: 500 }).unwrap().points;
    for y in &ys {
        assert_eq!(y_point_data(&inst, y).unwrap().0, 4);
    }
    let rep = check_curve_family(&inst, &ys, &CheckConfig::default()).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.counter("degree"), Some(14));
    assert_eq!(rep.counter("constant_term"), Some(-5));
}
