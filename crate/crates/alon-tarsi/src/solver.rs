//! f-AT decisions and AT numbers with re-checkable certificates.
//!
//! The expansion route answers every k at once: AT(G) is one plus the least
//! max-exponent over the nonzero monomials of P_G. The orientation route
//! searches all orientations with capped out-degrees for one whose eulerian
//! subdigraph counts differ by parity.

use num_traits::ToPrimitive;

use crate::budget::Budget;
use crate::certify::euler::{euler_diff, EulerCount};
use crate::certify::polynomial::{graph_polynomial, graph_polynomial_lazy};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::coloring::chromatic_number;
use crate::graph::orientation::orientation_from_mask;
use crate::graph::structure::{coloring_number_col, max_density, structural_at_le_2};
use crate::graph::MultiGraph;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq)]
pub enum ATCertificate {
    /// A nonzero monomial of P_G with exponents within the list-size box.
    Monomial {
        exponents: Vec<u32>,
        coefficient: ExactScalar,
    },
    /// An orientation with capped out-degrees and unequal eulerian counts.
    Orientation {
        reversal_mask: u64,
        arcs: Vec<(u32, u32)>,
        out_degrees: Vec<u32>,
        euler: EulerCount,
    },
    /// A degree-peeling core that is empty, one vertex, or an even cycle.
    Structural { at_most: u32, description: String },
}

impl ATCertificate {
    /// Re-check against the graph and the claimed per-vertex bound f.
    /// Monomial coefficients are re-derived by finite differences, not by
    /// re-running the expansion that produced them.
    pub fn verify(&self, g: &MultiGraph, f: &[u32], budget: &Budget) -> Result<bool> {
        match self {
            ATCertificate::Monomial {
                exponents,
                coefficient,
            } => {
                if coefficient.is_zero()
                    || exponents.len() != f.len()
                    || exponents.iter().zip(f).any(|(&t, &fi)| t + 1 > fi)
                {
                    return Ok(false);
                }
                let recomputed = crate::algebra::scheim_coefficient(
                    &graph_polynomial_lazy(g),
                    exponents,
                    budget,
                )?;
                Ok(recomputed == *coefficient)
            }
            ATCertificate::Orientation {
                reversal_mask,
                out_degrees,
                euler,
                ..
            } => {
                if g.m() > 63 {
                    return Ok(false);
                }
                let d = orientation_from_mask(g, *reversal_mask);
                if d.out_degrees() != *out_degrees
                    || out_degrees.len() != f.len()
                    || out_degrees.iter().zip(f).any(|(&o, &fi)| o + 1 > fi)
                {
                    return Ok(false);
                }
                let recount = euler_diff(&d, budget)?;
                Ok(recount == *euler && recount.diff() != 0)
            }
            ATCertificate::Structural { at_most, .. } => {
                Ok(*at_most == 2 && structural_at_le_2(g)?)
            }
        }
    }
}

fn check_f(g: &MultiGraph, f: &[u32]) -> Result<()> {
    if f.len() != g.n() as usize {
        return Err(Error::Dimension {
            expected: g.n() as usize,
            got: f.len(),
        });
    }
    if let Some(v) = f.iter().position(|&fi| fi == 0) {
        return Err(Error::ZeroListSize(v + 1));
    }
    Ok(())
}

/// First monomial of P_G, in lexicographic exponent order, that fits the box
/// exponents <= f - 1. None when no monomial fits.
pub fn is_f_at(g: &MultiGraph, f: &[u32], budget: &Budget) -> Result<Option<ATCertificate>> {
    check_f(g, f)?;
    let p = graph_polynomial(g, budget)?;
    for (exponents, coefficient) in p.terms() {
        if exponents.iter().zip(f).all(|(&t, &fi)| t < fi) {
            return Ok(Some(ATCertificate::Monomial {
                exponents: exponents.clone(),
                coefficient: coefficient.clone(),
            }));
        }
    }
    Ok(None)
}

/// AT(G) = 1 + min over nonzero monomials of the max exponent, with the
/// lexicographically first minimizing monomial as certificate.
pub fn at_number(g: &MultiGraph, budget: &Budget) -> Result<(u32, ATCertificate)> {
    let p = graph_polynomial(g, budget)?;
    let mut best: Option<(u32, Vec<u32>, ExactScalar)> = None;
    for (exponents, coefficient) in p.terms() {
        let peak = exponents.iter().copied().max().unwrap_or(0);
        if best.as_ref().is_none_or(|(b, _, _)| peak < *b) {
            best = Some((peak, exponents.clone(), coefficient.clone()));
        }
    }
    let (peak, exponents, coefficient) = best.expect("P_G is a nonzero polynomial");
    Ok((
        peak + 1,
        ATCertificate::Monomial {
            exponents,
            coefficient,
        },
    ))
}

/// Search all orientations with out-degrees <= k-1, in reversal-mask order,
/// for one with unequal eulerian counts; the lowest-mask witness wins.
pub fn at_via_orientation_search(
    g: &MultiGraph,
    k: u32,
    budget: &Budget,
) -> Result<Option<ATCertificate>> {
    if k == 0 {
        return Err(Error::ZeroListSize(1));
    }
    let m = g.m();
    if m >= 31 {
        return Err(Error::Budget {
            needed: u64::MAX,
            limit: budget.limit(),
        });
    }
    // 2^m orientations, each scanning 2^m arc subsets
    budget.charge_pow2(2 * m as u32)?;
    let total = 1u64 << m;
    let shards = exec::shard_count(total);
    let inner = Budget::unlimited();
    let partials = exec::run_shards(shards, |idx| {
        let range = exec::shard_range(total, shards, idx);
        for mask in range {
            let d = orientation_from_mask(g, mask);
            let out_degrees = d.out_degrees();
            if out_degrees.iter().any(|&o| o + 1 > k) {
                continue;
            }
            let euler = euler_diff(&d, &inner).expect("inner budget is unlimited");
            if euler.diff() != 0 {
                return Some(ATCertificate::Orientation {
                    reversal_mask: mask,
                    arcs: d.arcs().to_vec(),
                    out_degrees,
                    euler,
                });
            }
        }
        None
    });
    Ok(partials.into_iter().flatten().next())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBounds {
    /// Vertex labels of the component in the original graph.
    pub vertices: Vec<u32>,
    pub n: u32,
    pub m: usize,
    pub chromatic: u32,
    pub density_lower: u32,
    pub lower: u32,
    pub upper: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub components: Vec<ComponentBounds>,
    pub lower: u32,
    pub upper: u32,
}

/// Cheap bracket: max(chi, 1 + ceil(max density)) <= AT <= col + 1, reported
/// per connected component; the graph's bounds are the componentwise maxima.
pub fn bounds_report(g: &MultiGraph, budget: &Budget) -> Result<BoundsReport> {
    let mut components = Vec::new();
    for verts in g.components() {
        let sub = g.induced(&verts);
        let chromatic = chromatic_number(&sub, budget)?;
        let density = max_density(&sub, budget)?;
        let density_lower = 1 + density
            .ceil()
            .to_integer()
            .to_u32()
            .expect("component density ceiling fits in u32");
        let upper = coloring_number_col(&sub) + 1;
        components.push(ComponentBounds {
            vertices: verts,
            n: sub.n(),
            m: sub.m(),
            chromatic,
            density_lower,
            lower: chromatic.max(density_lower),
            upper,
        });
    }
    let lower = components.iter().map(|c| c.lower).max().unwrap_or(1);
    let upper = components.iter().map(|c| c.upper).max().unwrap_or(1);
    Ok(BoundsReport {
        components,
        lower,
        upper,
    })
}
