//! f-AT certificates for hypergraphs.
//!
//! A hypergraph H with m edges is f-AT (Σf = m + n) whenever some degree-m
//! polynomial Q that vanishes on every improper coloring has a nonzero
//! signed binomial box sum. Q can be a hand-picked product of integer
//! linear forms (QSpec) or the cyclotomic edge polynomial of a k-uniform
//! hypergraph for prime k. The vanishing hypothesis is never trusted: the
//! box scan checks it pointwise and rejects violations.

use crate::algebra::scheim::binomial;
use crate::algebra::{
    expand_linear_product, is_prime, CyclotomicInt, LinearForm, LinearProduct, SparsePolynomial,
};
use crate::budget::Budget;
use crate::certify::{nz_points, nz_signed_sum, ColoringBox};
use crate::error::{Error, Result};
use crate::graph::Hypergraph;
use crate::scalar::ExactScalar;

/// A product of integer linear forms serving as the certificate polynomial.
/// The degree is the factor count. Contract: a nonzero value at a box point
/// must imply the point is a proper coloring; `hypergraph_f_at` verifies
/// this exhaustively rather than assuming it.
#[derive(Debug, Clone, PartialEq)]
pub struct QSpec {
    nvars: usize,
    factors: Vec<LinearForm<ExactScalar>>,
}

impl QSpec {
    pub fn new(nvars: usize, factors: Vec<LinearForm<ExactScalar>>) -> Result<Self> {
        for f in &factors {
            if f.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    got: f.nvars(),
                });
            }
        }
        Ok(QSpec { nvars, factors })
    }

    /// One factor per line, "c_1 ... c_n | const"; '#' starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut nvars: Option<usize> = None;
        let mut factors = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let (lhs, rhs) = line.split_once('|').ok_or_else(|| Error::Parse {
                line: lineno,
                msg: "factor needs the form \"c_1 ... c_n | const\"".into(),
            })?;
            let parse_int = |tok: &str| -> Result<ExactScalar> {
                tok.parse::<i64>().map(ExactScalar::from_i64).map_err(|_| {
                    Error::Parse {
                        line: lineno,
                        msg: format!("bad integer {tok:?}"),
                    }
                })
            };
            let coeffs: Vec<ExactScalar> = lhs
                .split_whitespace()
                .map(parse_int)
                .collect::<Result<_>>()?;
            let rhs_toks: Vec<&str> = rhs.split_whitespace().collect();
            if rhs_toks.len() != 1 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "exactly one constant after '|'".into(),
                });
            }
            let constant = parse_int(rhs_toks[0])?;
            match nvars {
                None => nvars = Some(coeffs.len()),
                Some(n) if n != coeffs.len() => {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("expected {n} coefficients, got {}", coeffs.len()),
                    });
                }
                Some(_) => {}
            }
            factors.push(LinearForm::new(coeffs, constant));
        }
        let nvars = nvars.ok_or(Error::Parse {
            line: 0,
            msg: "no factors found".into(),
        })?;
        Ok(QSpec { nvars, factors })
    }

    /// The bundled certificate for the Fano plane (7 points, 7 lines).
    pub fn fano() -> Self {
        Self::parse(include_str!("../../data/fano_qspec.txt")).expect("bundled data is well formed")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn factors(&self) -> &[LinearForm<ExactScalar>] {
        &self.factors
    }

    pub fn degree(&self) -> u64 {
        self.factors.len() as u64
    }

    fn product(&self) -> LinearProduct {
        LinearProduct::new(self.nvars, self.factors.clone())
    }
}

fn validate_hyper_f(h: &Hypergraph, f: &[u32]) -> Result<()> {
    let n = h.n() as usize;
    if f.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: f.len(),
        });
    }
    for (i, &fi) in f.iter().enumerate() {
        if fi == 0 {
            return Err(Error::ZeroListSize(i + 1));
        }
    }
    let expected = h.m() as u64 + h.n() as u64;
    let got: u64 = f.iter().map(|&x| u64::from(x)).sum();
    if got != expected {
        return Err(Error::FSumMismatch { expected, got });
    }
    Ok(())
}

/// The edge polynomial of a k-uniform hypergraph, k prime: each edge
/// contributes the form x_{i_0} + w x_{i_1} + ... + w^{k-1} x_{i_{k-1}}
/// over its vertices in increasing order, where w is a primitive k-th root
/// of unity. The product vanishes at every coloring with a monochromatic
/// edge because 1 + w + ... + w^{k-1} = 0.
pub fn hypergraph_polynomial(
    h: &Hypergraph,
    k: u32,
    budget: &Budget,
) -> Result<SparsePolynomial<CyclotomicInt>> {
    if !is_prime(k) {
        return Err(Error::NotPrime(k));
    }
    let n = h.n() as usize;
    let zero = CyclotomicInt::zero(k)?;
    let mut forms = Vec::with_capacity(h.m());
    for (index, edge) in h.edges().iter().enumerate() {
        if edge.len() != k as usize {
            return Err(Error::NonUniformEdge {
                index,
                size: edge.len(),
                expected: k as usize,
            });
        }
        let mut coeffs = vec![zero.clone(); n];
        for (j, &v) in edge.iter().enumerate() {
            coeffs[v as usize - 1] = CyclotomicInt::omega_pow(k, j as u32)?;
        }
        forms.push(LinearForm::new(coeffs, zero.clone()));
    }
    expand_linear_product(&forms, n, &zero, budget)
}

/// Certificate report for the integer product route.
#[derive(Debug, Clone)]
pub struct HyperFatReport {
    pub f_at: bool,
    pub sum: ExactScalar,
    /// Box points with nonzero Q value, lexicographic, with the values.
    pub nz: Vec<(Vec<u32>, ExactScalar)>,
}

/// Decides f-AT of a hypergraph from a QSpec certificate polynomial.
/// Requires deg Q = m and Σf = m + n; scans the whole box, rejecting any
/// improper point where Q is nonzero, and reports the signed sum.
pub fn hypergraph_f_at(
    h: &Hypergraph,
    q: &QSpec,
    f: &[u32],
    budget: &Budget,
) -> Result<HyperFatReport> {
    validate_hyper_f(h, f)?;
    if q.nvars() != h.n() as usize {
        return Err(Error::Dimension {
            expected: h.n() as usize,
            got: q.nvars(),
        });
    }
    let m = h.m() as u64;
    if q.degree() != m {
        return Err(Error::DegreeMismatch {
            expected: m,
            got: q.degree(),
        });
    }
    let product = q.product();
    let nz = nz_points(&product, f, budget)?;
    for (point, _) in &nz {
        if !h.is_proper(point) {
            return Err(Error::ImproperNonzero {
                point: point.clone(),
            });
        }
    }
    let sum = nz_signed_sum(&product, f, budget)?;
    Ok(HyperFatReport {
        f_at: !sum.is_zero(),
        sum,
        nz,
    })
}

/// Certificate report for the cyclotomic route.
#[derive(Debug, Clone)]
pub struct CycloFatReport {
    pub f_at: bool,
    pub sum: CyclotomicInt,
    pub nz: Vec<(Vec<u32>, CyclotomicInt)>,
}

/// Decides f-AT from a cyclotomic polynomial of order k, typically the
/// output of `hypergraph_polynomial`. The sum lives in Z[w] and is tested
/// against zero in the reduced power basis, which is a free Z-module, so a
/// zero test there is exact.
pub fn hypergraph_f_at_cyclotomic(
    h: &Hypergraph,
    k: u32,
    p: &SparsePolynomial<CyclotomicInt>,
    f: &[u32],
    budget: &Budget,
) -> Result<CycloFatReport> {
    validate_hyper_f(h, f)?;
    if !is_prime(k) {
        return Err(Error::NotPrime(k));
    }
    if p.nvars() != h.n() as usize {
        return Err(Error::Dimension {
            expected: h.n() as usize,
            got: p.nvars(),
        });
    }
    for (_, c) in p.terms() {
        if c.order() != k {
            return Err(Error::MixedOrder(k, c.order()));
        }
    }
    let m = h.m() as u64;
    if p.degree() != m {
        return Err(Error::DegreeMismatch {
            expected: m,
            got: p.degree(),
        });
    }

    let boxed = ColoringBox::from_list_sizes(f)?;
    let volume = boxed.volume();
    budget.charge(volume)?;
    let zero = CyclotomicInt::zero(k)?;
    let n = f.len();
    let binom_tables: Vec<Vec<num_bigint::BigInt>> = f
        .iter()
        .map(|&fi| (0..fi).map(|c| binomial(fi - 1, c)).collect())
        .collect();

    let mut sum = zero.clone();
    let mut nz = Vec::new();
    let mut point = vec![0i64; n];
    for idx in 0..volume {
        boxed.decode(idx, &mut point);
        let value = p.eval_i64_or(&point, zero.clone());
        if value.is_zero() {
            continue;
        }
        let point_u32: Vec<u32> = point.iter().map(|&z| z as u32).collect();
        if !h.is_proper(&point_u32) {
            return Err(Error::ImproperNonzero { point: point_u32 });
        }
        let mut weight = num_bigint::BigInt::from(1);
        let mut parity = 0u32;
        for (i, &z) in point_u32.iter().enumerate() {
            weight *= &binom_tables[i][z as usize];
            parity ^= z & 1;
        }
        let mut term = value.scale_int(&weight);
        if parity == 1 {
            term = term.neg();
        }
        sum = sum.add(&term)?;
        nz.push((point_u32, value));
    }

    Ok(CycloFatReport {
        f_at: !sum.is_zero(),
        sum,
        nz,
    })
}
