//! Sparse multivariate polynomials over an exact ring.
//!
//! Exponent vectors are dense (length = nvars) and terms live in a BTreeMap,
//! so iteration order, and hence every derived report, is deterministic.

use std::collections::BTreeMap;

use super::Ring;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// c_1 x_1 + ... + c_n x_n + constant.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm<R: Ring> {
    pub coeffs: Vec<R>,
    pub constant: R,
}

impl<R: Ring> LinearForm<R> {
    pub fn new(coeffs: Vec<R>, constant: R) -> Self {
        LinearForm { coeffs, constant }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval_i64(&self, point: &[i64]) -> R {
        debug_assert_eq!(point.len(), self.coeffs.len());
        let mut acc = self.constant.clone();
        for (c, &x) in self.coeffs.iter().zip(point) {
            if !c.is_zero() && x != 0 {
                acc = acc.add_ref(&c.mul_ref(&c.from_i64_like(x)));
            }
        }
        acc
    }
}

impl LinearForm<ExactScalar> {
    /// x_i - x_j (0-based variable indices).
    pub fn difference(nvars: usize, i: usize, j: usize) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); nvars];
        coeffs[i] = ExactScalar::one();
        coeffs[j] = ExactScalar::from_i64(-1);
        LinearForm::new(coeffs, ExactScalar::zero())
    }

    /// x_i - x_j - t.
    pub fn difference_shift(nvars: usize, i: usize, j: usize, t: i64) -> Self {
        let mut f = Self::difference(nvars, i, j);
        f.constant = ExactScalar::from_i64(-t);
        f
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SparsePolynomial<R: Ring> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> SparsePolynomial<R> {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `one`, built from an exemplar of the ring.
    pub fn constant_one(nvars: usize, exemplar: &R) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], exemplar.one_like());
        SparsePolynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    /// Max over terms of the exponent sum; zero polynomial has degree 0.
    pub fn degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| u64::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn coefficient(&self, t: &[u32]) -> Result<R> {
        if t.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: t.len(),
            });
        }
        Ok(self.terms.get(t).cloned().unwrap_or_else(|| {
            let exemplar = self
                .terms
                .values()
                .next()
                .expect("coefficient lookup on the zero polynomial needs an exemplar");
            exemplar.zero_like()
        }))
    }

    /// Like `coefficient`, with an explicit zero for the empty polynomial.
    pub fn coefficient_or(&self, t: &[u32], zero: R) -> Result<R> {
        if t.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: t.len(),
            });
        }
        Ok(self.terms.get(t).cloned().unwrap_or(zero))
    }

    fn insert_add(&mut self, expo: Vec<u32>, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    /// Multiply by a linear form, dropping cancelled terms.
    pub fn mul_linear(&self, form: &LinearForm<R>) -> Result<Self> {
        if form.nvars() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: form.nvars(),
            });
        }
        let mut out = SparsePolynomial::zero(self.nvars);
        for (expo, c) in &self.terms {
            if !form.constant.is_zero() {
                out.insert_add(expo.clone(), c.mul_ref(&form.constant));
            }
            for (v, fc) in form.coeffs.iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                let mut e2 = expo.clone();
                e2[v] += 1;
                out.insert_add(e2, c.mul_ref(fc));
            }
        }
        Ok(out)
    }

    pub fn mul_poly(&self, other: &Self) -> Result<Self> {
        if other.nvars != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        let mut out = SparsePolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(expo, ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn eval_i64(&self, point: &[i64]) -> R {
        debug_assert_eq!(point.len(), self.nvars);
        let exemplar = match self.terms.values().next() {
            Some(c) => c,
            None => panic!("eval on the zero polynomial needs an exemplar; use eval_i64_or"),
        };
        self.eval_i64_or(point, exemplar.zero_like())
    }

    pub fn eval_i64_or(&self, point: &[i64], zero: R) -> R {
        let mut acc = zero;
        for (expo, c) in &self.terms {
            let mut term = c.clone();
            let mut vanished = false;
            for (v, &e) in expo.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if point[v] == 0 {
                    vanished = true;
                    break;
                }
                let base = c.from_i64_like(point[v]);
                for _ in 0..e {
                    term = term.mul_ref(&base);
                }
            }
            if !vanished {
                acc = acc.add_ref(&term);
            }
        }
        acc
    }
}

/// Expand a product of linear forms. The empty product is the constant 1.
///
/// The budget is charged as the running sum of intermediate term counts,
/// which bounds the total work of the fold.
pub fn expand_linear_product<R: Ring>(
    forms: &[LinearForm<R>],
    nvars: usize,
    exemplar: &R,
    budget: &Budget,
) -> Result<SparsePolynomial<R>> {
    let mut acc = SparsePolynomial::constant_one(nvars, exemplar);
    let mut steps: u64 = 1;
    for form in forms {
        acc = acc.mul_linear(form)?;
        steps = steps.saturating_add(acc.term_count() as u64);
        budget.charge(steps)?;
    }
    Ok(acc)
}

/// Exact evaluation oracle over integer points. Implemented both by expanded
/// polynomials and by lazy products of linear forms, so coefficient routes
/// can cross-check without sharing code.
pub trait PolyEval: Sync {
    fn nvars(&self) -> usize;
    fn degree_bound(&self) -> u64;
    fn eval(&self, point: &[i64]) -> ExactScalar;
}

impl PolyEval for SparsePolynomial<ExactScalar> {
    fn nvars(&self) -> usize {
        self.nvars
    }
    fn degree_bound(&self) -> u64 {
        self.degree()
    }
    fn eval(&self, point: &[i64]) -> ExactScalar {
        self.eval_i64_or(point, ExactScalar::zero())
    }
}

/// Lazy product of linear forms; evaluates factor by factor with a zero
/// short-circuit and never expands.
pub struct LinearProduct {
    nvars: usize,
    forms: Vec<LinearForm<ExactScalar>>,
}

impl LinearProduct {
    pub fn new(nvars: usize, forms: Vec<LinearForm<ExactScalar>>) -> Self {
        LinearProduct { nvars, forms }
    }

    pub fn forms(&self) -> &[LinearForm<ExactScalar>] {
        &self.forms
    }
}

impl PolyEval for LinearProduct {
    fn nvars(&self) -> usize {
        self.nvars
    }
    fn degree_bound(&self) -> u64 {
        self.forms.len() as u64
    }
    fn eval(&self, point: &[i64]) -> ExactScalar {
        let mut acc = ExactScalar::one();
        for f in &self.forms {
            let v = f.eval_i64(point);
            if v.is_zero() {
                return ExactScalar::zero();
            }
            acc = &acc * &v;
        }
        acc
    }
}
