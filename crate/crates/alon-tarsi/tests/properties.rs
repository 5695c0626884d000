//! Randomized cross-checks between independent implementations: expansion
//! against iterated multiplication, finite differences against expanded
//! coefficients, Ryser against the permutation sum, cyclotomic ring laws,
//! the orientation-sign form of the weighted sum, and the monotonicity laws
//! of the solver.

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::subsequence;
use rand::Rng;

use alon_tarsi::algebra::{
    expand_linear_product, ryser_permanent, scheim_coefficient, CyclotomicInt, LinearForm,
    LinearProduct, RingMatrix, SparsePolynomial,
};
use alon_tarsi::apps::hypergraph_polynomial;
use alon_tarsi::budget::Budget;
use alon_tarsi::certify::{graph_polynomial, weighted_subgraph_sum, WeightScheme};
use alon_tarsi::corpus::{corpus_rng, random_f, random_multigraph, random_weight_scheme};
use alon_tarsi::graph::{orientation_from_mask, Hypergraph};
use alon_tarsi::scalar::ExactScalar;
use alon_tarsi::solver::{at_number, is_f_at};

/// Up to `max` linear forms with coefficients and constants in [-3, 3].
fn forms_strategy(
    nvars: usize,
    max: usize,
) -> impl Strategy<Value = Vec<LinearForm<ExactScalar>>> {
    vec((vec(-3i64..=3, nvars), -3i64..=3), 1..=max).prop_map(|raw| {
        raw.into_iter()
            .map(|(coeffs, constant)| {
                LinearForm::new(
                    coeffs.into_iter().map(ExactScalar::from_i64).collect(),
                    ExactScalar::from_i64(constant),
                )
            })
            .collect()
    })
}

/// Permanent by direct row expansion, the slow reference.
fn naive_permanent(m: &RingMatrix<ExactScalar>) -> ExactScalar {
    fn expand(m: &RingMatrix<ExactScalar>, row: usize, used: &mut [bool]) -> ExactScalar {
        if row == m.rows() {
            return ExactScalar::one();
        }
        let mut acc = ExactScalar::zero();
        for col in 0..m.cols() {
            if used[col] || m.get(row, col).is_zero() {
                continue;
            }
            used[col] = true;
            acc = &acc + &(m.get(row, col) * &expand(m, row + 1, used));
            used[col] = false;
        }
        acc
    }
    expand(m, 0, &mut vec![false; m.cols()])
}

/// Cyclotomic integer with the given power-basis coordinates.
fn cyc(k: u32, coords: &[i64]) -> CyclotomicInt {
    let mut acc = CyclotomicInt::zero(k).unwrap();
    for (j, &c) in coords.iter().enumerate() {
        let term = CyclotomicInt::omega_pow(k, j as u32)
            .unwrap()
            .scale_int(&BigInt::from(c));
        acc = acc.add(&term).unwrap();
    }
    acc
}

/// prod_i s_i! for small exponent vectors.
fn factorial_product(s: &[u32]) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for &si in s {
        for j in 2..=i64::from(si) {
            acc = &acc * &ExactScalar::from_i64(j);
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn expansion_matches_iterated_multiplication(
        (nvars, forms) in (1usize..=4).prop_flat_map(|nv| (Just(nv), forms_strategy(nv, 6)))
    ) {
        let budget = Budget::default();
        let expanded = expand_linear_product(&forms, nvars, &ExactScalar::one(), &budget).unwrap();
        let mut iterated = SparsePolynomial::constant_one(nvars, &ExactScalar::one());
        for form in &forms {
            iterated = iterated.mul_linear(form).unwrap();
        }
        prop_assert_eq!(expanded, iterated);
    }

    #[test]
    fn scheim_matches_expanded_coefficient(
        (nvars, forms, mut s) in (2usize..=4).prop_flat_map(|nv| {
            (Just(nv), forms_strategy(nv, 5), vec(0u32..=3, nv))
        })
    ) {
        let budget = Budget::default();
        let deg = forms.len() as u32;
        let total: u32 = s.iter().sum();
        if total < deg {
            s[0] += deg - total;
        }
        let poly = expand_linear_product(&forms, nvars, &ExactScalar::one(), &budget).unwrap();
        let direct = poly.coefficient_or(&s, ExactScalar::zero()).unwrap();
        let product = LinearProduct::new(nvars, forms);
        prop_assert_eq!(scheim_coefficient(&product, &s, &budget).unwrap(), direct);
    }

    #[test]
    fn ryser_matches_permutation_sum(
        rows in (1usize..=5).prop_flat_map(|n| vec(vec(-3i64..=3, n), n))
    ) {
        let budget = Budget::default();
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(ExactScalar::from_i64).collect())
            .collect();
        let matrix = RingMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(
            ryser_permanent(&matrix, &budget).unwrap(),
            naive_permanent(&matrix)
        );
    }

    #[test]
    fn cyclotomic_ring_laws(
        (k, a, b, c) in prop_oneof![Just(2u32), Just(3), Just(5), Just(7)].prop_flat_map(|k| {
            let len = (k - 1) as usize;
            (Just(k), vec(-4i64..=4, len), vec(-4i64..=4, len), vec(-4i64..=4, len))
        })
    ) {
        let (a, b, c) = (cyc(k, &a), cyc(k, &b), cyc(k, &c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        let mut geometric = CyclotomicInt::zero(k).unwrap();
        for j in 0..k {
            geometric = geometric
                .add(&CyclotomicInt::omega_pow(k, j).unwrap())
                .unwrap();
        }
        prop_assert!(geometric.is_zero());
        prop_assert!(geometric.mul(&a).unwrap().is_zero());
    }

    #[test]
    fn hypergraph_polynomial_matches_direct_product(
        (n, edges, point) in (3u32..=5).prop_flat_map(|n| {
            let verts: Vec<u32> = (1..=n).collect();
            (
                Just(n),
                vec(subsequence(verts, 3), 1..=3),
                vec(-2i64..=2, n as usize),
            )
        })
    ) {
        let budget = Budget::default();
        let h = Hypergraph::new(n, edges).unwrap();
        let poly = hypergraph_polynomial(&h, 3, &budget).unwrap();
        let mut direct = CyclotomicInt::one(3).unwrap();
        for edge in h.edges() {
            let mut factor = CyclotomicInt::zero(3).unwrap();
            for (j, &v) in edge.iter().enumerate() {
                let term = CyclotomicInt::omega_pow(3, j as u32)
                    .unwrap()
                    .scale_int(&BigInt::from(point[(v - 1) as usize]));
                factor = factor.add(&term).unwrap();
            }
            direct = direct.mul(&factor).unwrap();
        }
        prop_assert_eq!(poly.eval_i64(&point), direct);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn weighted_sum_carries_the_orientation_sign(seed in any::<u64>()) {
        let budget = Budget::default();
        let mut rng = corpus_rng(seed);
        let g = random_multigraph(&mut rng, 5, 6);
        let mask = rng.random_range(0..(1u64 << g.m()));
        let d = orientation_from_mask(&g, mask);
        let scheme = WeightScheme::new(random_weight_scheme(&mut rng, &d));
        let degs = d.out_degrees();
        let poly = graph_polynomial(&g, &budget).unwrap();
        let coeff = poly.coefficient_or(&degs, ExactScalar::zero()).unwrap();
        let mut expected = &coeff * &factorial_product(&degs);
        if (g.m() + d.r()) % 2 == 1 {
            expected = -&expected;
        }
        prop_assert_eq!(weighted_subgraph_sum(&d, &scheme, &budget).unwrap(), expected);
    }

    #[test]
    fn subgraph_at_monotonicity(seed in any::<u64>()) {
        let budget = Budget::default();
        let mut rng = corpus_rng(seed);
        let g = random_multigraph(&mut rng, 6, 9);
        let keep: Vec<usize> = (0..g.m()).filter(|_| rng.random_range(0..2) == 1).collect();
        let h = g.edge_subgraph(&keep);
        prop_assert!(at_number(&h, &budget).unwrap().0 <= at_number(&g, &budget).unwrap().0);
    }

    #[test]
    fn f_at_monotonicity(seed in any::<u64>()) {
        let budget = Budget::default();
        let mut rng = corpus_rng(seed);
        let g = random_multigraph(&mut rng, 5, 8);
        let f = random_f(&mut rng, &g);
        let mut wider = f.clone();
        for slot in wider.iter_mut() {
            *slot += rng.random_range(0..=1);
        }
        if is_f_at(&g, &f, &budget).unwrap().is_some() {
            prop_assert!(is_f_at(&g, &wider, &budget).unwrap().is_some());
        }
    }
}
