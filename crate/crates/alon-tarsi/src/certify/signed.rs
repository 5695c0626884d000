//! Signed proper-coloring sums: the binomial-weighted sum over the box
//! 0..f(i)-1 whose nonvanishing is equivalent to f-choosability of the
//! polynomial certificate, and the plain sign sum over d-colorings for line
//! graphs of d-regular d-edge-colorable multigraphs.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::scheim::binomial;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::multigraph::line_graph;
use crate::graph::MultiGraph;
use crate::scalar::ExactScalar;

/// Earlier-neighbor lists with edge multiplicity, the only data the
/// backtracking enumerations need per vertex.
fn earlier_neighbor_multiplicities(g: &MultiGraph) -> Vec<Vec<(usize, u32)>> {
    let n = g.n() as usize;
    let mut prev: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for &(i, j) in g.edges() {
        let (lo, hi) = ((i - 1) as usize, (j - 1) as usize);
        if let Some(entry) = prev[hi].iter_mut().find(|(u, _)| *u == lo) {
            entry.1 += 1;
        } else {
            prev[hi].push((lo, 1));
        }
    }
    prev
}

/// Sum over proper colorings c in the box 0 <= c(i) <= f(i)-1 of
/// (-1)^{sum c} * prod binom(f(i)-1, c(i)) * P_G(c). Nonzero iff G is f-AT.
pub fn signed_coloring_sum(g: &MultiGraph, f: &[u32], budget: &Budget) -> Result<ExactScalar> {
    super::validate_list_sizes(g, f)?;
    budget.charge_product(f.iter().map(|&fi| u64::from(fi)))?;
    let n = g.n() as usize;
    let prev = earlier_neighbor_multiplicities(g);
    let binom_tables: Vec<Vec<BigInt>> = f
        .iter()
        .map(|&fi| (0..fi).map(|c| binomial(fi - 1, c)).collect())
        .collect();

    struct Ctx<'a> {
        f: &'a [u32],
        prev: &'a [Vec<(usize, u32)>],
        binom_tables: &'a [Vec<BigInt>],
        colors: Vec<u32>,
        // prod of P_G factors among colored vertices, one entry per depth
        partial: Vec<BigInt>,
        acc: BigInt,
    }

    fn descend(ctx: &mut Ctx) {
        let v = ctx.colors.len();
        if v == ctx.f.len() {
            let mut term = ctx.partial.last().expect("root entry").clone();
            let mut parity = 0u32;
            for (i, &c) in ctx.colors.iter().enumerate() {
                term *= &ctx.binom_tables[i][c as usize];
                parity ^= c & 1;
            }
            if parity == 1 {
                ctx.acc -= term;
            } else {
                ctx.acc += term;
            }
            return;
        }
        'colors: for c in 0..ctx.f[v] {
            let mut step = BigInt::one();
            for &(u, mult) in &ctx.prev[v] {
                let d = i64::from(ctx.colors[u]) - i64::from(c);
                if d == 0 {
                    continue 'colors;
                }
                step *= BigInt::from(d).pow(mult);
            }
            let next = ctx.partial.last().expect("root entry") * &step;
            ctx.partial.push(next);
            ctx.colors.push(c);
            descend(ctx);
            ctx.colors.pop();
            ctx.partial.pop();
        }
    }

    let mut ctx = Ctx {
        f,
        prev: &prev,
        binom_tables: &binom_tables,
        colors: Vec::with_capacity(n),
        partial: vec![BigInt::one()],
        acc: BigInt::zero(),
    };
    descend(&mut ctx);
    Ok(ExactScalar::from(ctx.acc))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSignSum {
    pub sum: ExactScalar,
    pub colorings: u64,
}

/// Sum of sign(P_G(c)) over proper colorings c: V -> {0..d-1}. A nonzero sum
/// certifies AT(G) <= d when G is the line graph of a d-regular
/// d-edge-colorable multigraph. When a pre-image is supplied its regularity,
/// its line graph, and its d-edge-colorability are all verified.
pub fn signed_sum_regular(
    g: &MultiGraph,
    d: u32,
    preimage: Option<&MultiGraph>,
    budget: &Budget,
) -> Result<RegularSignSum> {
    if let Some(h) = preimage {
        for v in 1..=h.n() {
            let degree = h.degree(v);
            if degree != d {
                return Err(Error::PreimageNotRegular {
                    d,
                    vertex: v as usize,
                    degree,
                });
            }
        }
        let lg = line_graph(h)?;
        let mut got = lg.edges().to_vec();
        let mut want = g.edges().to_vec();
        got.sort_unstable();
        want.sort_unstable();
        if lg.n() != g.n() || got != want {
            return Err(Error::PreimageMismatch);
        }
    }
    let n = g.n() as usize;
    budget.charge_product((0..n).map(|_| u64::from(d)))?;
    let prev = earlier_neighbor_multiplicities(g);

    struct Ctx<'a> {
        d: u32,
        prev: &'a [Vec<(usize, u32)>],
        colors: Vec<u32>,
        neg_parity: Vec<bool>,
        sum: i64,
        colorings: u64,
    }

    fn descend(ctx: &mut Ctx, n: usize) {
        let v = ctx.colors.len();
        if v == n {
            ctx.colorings += 1;
            ctx.sum += if *ctx.neg_parity.last().expect("root entry") {
                -1
            } else {
                1
            };
            return;
        }
        'colors: for c in 0..ctx.d {
            let mut parity = *ctx.neg_parity.last().expect("root entry");
            for &(u, mult) in &ctx.prev[v] {
                // factor (c_u - c_v)^mult: flips the sign when negative an
                // odd number of times
                if ctx.colors[u] == c {
                    continue 'colors;
                }
                if ctx.colors[u] < c && mult % 2 == 1 {
                    parity = !parity;
                }
            }
            ctx.colors.push(c);
            ctx.neg_parity.push(parity);
            descend(ctx, n);
            ctx.neg_parity.pop();
            ctx.colors.pop();
        }
    }

    let mut ctx = Ctx {
        d,
        prev: &prev,
        colors: Vec::with_capacity(n),
        neg_parity: vec![false],
        sum: 0,
        colorings: 0,
    };
    descend(&mut ctx, n);
    if preimage.is_some() && ctx.colorings == 0 {
        return Err(Error::PreimageNotEdgeColorable { d });
    }
    Ok(RegularSignSum {
        sum: ExactScalar::from_i64(ctx.sum),
        colorings: ctx.colorings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{generate_family, Family};

    fn graph(f: Family) -> MultiGraph {
        generate_family(&f).unwrap().as_graph().unwrap().clone()
    }

    #[test]
    fn hand_evaluated_sums() {
        let budget = Budget::default();
        let edge = graph(Family::Complete(2));
        assert_eq!(
            signed_coloring_sum(&edge, &[2, 1], &budget).unwrap(),
            ExactScalar::from_i64(-1)
        );
        let k3 = graph(Family::Complete(3));
        assert_eq!(
            signed_coloring_sum(&k3, &[3, 2, 1], &budget).unwrap(),
            ExactScalar::from_i64(-2)
        );
        assert_eq!(
            signed_coloring_sum(&k3, &[2, 2, 2], &budget).unwrap(),
            ExactScalar::zero()
        );
    }

    #[test]
    fn preconditions_enforced() {
        let budget = Budget::default();
        let k3 = graph(Family::Complete(3));
        assert!(matches!(
            signed_coloring_sum(&k3, &[3, 2, 2], &budget),
            Err(Error::FSumMismatch {
                expected: 6,
                got: 7
            })
        ));
        assert!(matches!(
            signed_coloring_sum(&k3, &[5, 1, 0], &budget),
            Err(Error::ZeroListSize(3))
        ));
    }

    #[test]
    fn regular_sign_sum_on_c4() {
        let budget = Budget::default();
        let c4 = graph(Family::Cycle(4));
        let out = signed_sum_regular(&c4, 2, Some(&c4), &budget).unwrap();
        assert_eq!(out.colorings, 2);
        assert_eq!(out.sum, ExactScalar::from_i64(-2));
    }

    #[test]
    fn regular_sign_sum_on_line_graph_of_k4() {
        let budget = Budget::default();
        let k4 = graph(Family::Complete(4));
        let g = line_graph(&k4).unwrap();
        let out = signed_sum_regular(&g, 3, Some(&k4), &budget).unwrap();
        assert_eq!(out.colorings, 6);
        assert_eq!(out.sum, ExactScalar::from_i64(6));
    }

    #[test]
    fn k3_is_not_two_edge_colorable() {
        let budget = Budget::default();
        let k3 = graph(Family::Complete(3));
        assert!(matches!(
            signed_sum_regular(&k3, 2, Some(&k3), &budget),
            Err(Error::PreimageNotEdgeColorable { d: 2 })
        ));
        // without an asserted pre-image the sum is simply 0
        let out = signed_sum_regular(&k3, 2, None, &budget).unwrap();
        assert_eq!(out.sum, ExactScalar::zero());
        assert_eq!(out.colorings, 0);
    }

    #[test]
    fn preimage_mismatch_detected() {
        let budget = Budget::default();
        let c4 = graph(Family::Cycle(4));
        let p4 = graph(Family::Path(4));
        assert!(matches!(
            signed_sum_regular(&c4, 2, Some(&p4), &budget),
            Err(Error::PreimageNotRegular { .. })
        ));
        let c5 = graph(Family::Cycle(5));
        assert!(matches!(
            signed_sum_regular(&c4, 2, Some(&c5), &budget),
            Err(Error::PreimageMismatch)
        ));
    }
}
