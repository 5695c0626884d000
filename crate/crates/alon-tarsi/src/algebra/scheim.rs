//! Coefficient extraction by finite differences.
//!
//! For deg(p) <= s_1 + ... + s_n, the mixed partial
//! d^s1...d^sn p equals the signed binomial-weighted sum of p over the box
//! {0..s_1} x ... x {0..s_n}; dividing by prod s_i! yields the coefficient
//! of prod x_i^{s_i}. The route needs only point evaluations, so it
//! cross-checks expansion-based coefficient lookups without sharing code.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::PolyEval;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exec;
use crate::scalar::ExactScalar;

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Decode a box index into the point it addresses (mixed-radix, first
/// coordinate most significant so shards split on leading coordinates).
fn decode_point(mut idx: u64, dims: &[u64], out: &mut [i64]) {
    for pos in (0..dims.len()).rev() {
        out[pos] = (idx % dims[pos]) as i64;
        idx /= dims[pos];
    }
}

/// Coefficient of prod x_i^{s_i} in p, provided deg(p) <= sum s_i.
///
/// Returns the exact rational (sum / prod s_i!); for integer-coefficient p
/// the division lands on an integer.
pub fn scheim_coefficient(p: &dyn PolyEval, s: &[u32], budget: &Budget) -> Result<ExactScalar> {
    if s.len() != p.nvars() {
        return Err(Error::Dimension {
            expected: p.nvars(),
            got: s.len(),
        });
    }
    let deg_cap: u64 = s.iter().map(|&v| u64::from(v)).sum();
    if p.degree_bound() > deg_cap {
        return Err(Error::DegreeMismatch {
            expected: deg_cap,
            got: p.degree_bound(),
        });
    }
    let dims: Vec<u64> = s.iter().map(|&v| u64::from(v) + 1).collect();
    let mut volume: u64 = 1;
    for &d in &dims {
        volume = volume.saturating_mul(d);
    }
    budget.charge(volume)?;

    // binomial tables per coordinate
    let tables: Vec<Vec<BigInt>> = s
        .iter()
        .map(|&si| (0..=si).map(|x| binomial(si, x)).collect())
        .collect();
    let s_sum: u32 = s.iter().sum();

    let shards = exec::shard_count(volume);
    let partials = exec::run_shards(shards, |idx| {
        let range = exec::shard_range(volume, shards, idx);
        let mut point = vec![0i64; dims.len()];
        let mut acc = ExactScalar::zero();
        for flat in range {
            decode_point(flat, &dims, &mut point);
            let v = p.eval(&point);
            if v.is_zero() {
                continue;
            }
            let mut w = BigInt::one();
            for (pos, &x) in point.iter().enumerate() {
                w *= &tables[pos][x as usize];
            }
            let x_sum: i64 = point.iter().sum();
            let negative = (i64::from(s_sum) + x_sum) % 2 == 1;
            let term = &v * &ExactScalar::from(w);
            acc = if negative { &acc - &term } else { &acc + &term };
        }
        acc
    });
    let mut total = ExactScalar::zero();
    for part in partials {
        total = &total + &part;
    }
    let mut denom = BigInt::one();
    for &si in s {
        denom *= factorial(si);
    }
    Ok(total.div_exact(&ExactScalar::from(denom)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{expand_linear_product, LinearForm, LinearProduct};

    #[test]
    fn product_monomial() {
        // p = x1 * x2 as a product of forms x1, x2
        let forms = vec![
            LinearForm::new(
                vec![ExactScalar::one(), ExactScalar::zero()],
                ExactScalar::zero(),
            ),
            LinearForm::new(
                vec![ExactScalar::zero(), ExactScalar::one()],
                ExactScalar::zero(),
            ),
        ];
        let p = LinearProduct::new(2, forms);
        assert_eq!(
            scheim_coefficient(&p, &[1, 1], &Budget::default()).unwrap(),
            ExactScalar::one()
        );
    }

    #[test]
    fn k3_coefficients() {
        let forms = vec![
            LinearForm::difference(3, 0, 1),
            LinearForm::difference(3, 0, 2),
            LinearForm::difference(3, 1, 2),
        ];
        let p = LinearProduct::new(3, forms);
        let b = Budget::default();
        assert_eq!(
            scheim_coefficient(&p, &[1, 1, 1], &b).unwrap(),
            ExactScalar::zero()
        );
        assert_eq!(
            scheim_coefficient(&p, &[2, 1, 0], &b).unwrap(),
            ExactScalar::one()
        );
    }

    #[test]
    fn degree_cap_enforced() {
        let forms = vec![
            LinearForm::difference(2, 0, 1),
            LinearForm::difference(2, 0, 1),
        ];
        let p = LinearProduct::new(2, forms);
        assert!(matches!(
            scheim_coefficient(&p, &[1, 0], &Budget::default()),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn matches_expansion_on_seeded_products() {
        // products of <= 5 forms in <= 4 variables, coefficients in [-2, 2]
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move |mod_: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % mod_
        };
        let budget = Budget::default();
        for case in 0..40 {
            let nvars = (next(3) + 2) as usize; // 2..4
            let nforms = (next(4) + 2) as usize; // 2..5
            let forms: Vec<LinearForm<ExactScalar>> = (0..nforms)
                .map(|_| {
                    let coeffs = (0..nvars)
                        .map(|_| ExactScalar::from_i64(next(5) as i64 - 2))
                        .collect();
                    LinearForm::new(coeffs, ExactScalar::from_i64(next(5) as i64 - 2))
                })
                .collect();
            let expanded =
                expand_linear_product(&forms, nvars, &ExactScalar::one(), &budget).unwrap();
            if expanded.is_zero() {
                continue;
            }
            // exercise several targets; pad low-degree term exponents on the
            // first coordinate so the degree precondition holds
            let targets: Vec<Vec<u32>> = expanded
                .terms()
                .take(3)
                .map(|(expo, _)| {
                    let deficit = nforms as u32 - expo.iter().sum::<u32>();
                    let mut s = expo.clone();
                    s[0] += deficit;
                    s
                })
                .collect();
            for s in targets {
                let got =
                    scheim_coefficient(&LinearProduct::new(nvars, forms.clone()), &s, &budget)
                        .unwrap();
                let want = expanded.coefficient_or(&s, ExactScalar::zero()).unwrap();
                assert_eq!(got, want, "case {case} expo {s:?}");
            }
            let top: Vec<u32> = vec![nforms as u32; nvars];
            let got = scheim_coefficient(&LinearProduct::new(nvars, forms.clone()), &top, &budget)
                .unwrap();
            let want = expanded.coefficient(&top).unwrap();
            assert_eq!(got, want, "case {case} top");
        }
    }
}
