//! Certificates built on uniquely k-colorable graphs.
//!
//! Two routes conclude AT(G) = k from a verified unique coloring: an exact
//! edge-count identity, and a parity bound that augments the graph until a
//! sign-preserving list assignment appears. Both certificates re-verify
//! every claim they rely on instead of trusting the theorem hypotheses.

use crate::budget::Budget;
use crate::certify::signed_coloring_sum;
use crate::error::{Error, Result};
use crate::graph::{canonical_partitions, count_list_colorings, MultiGraph};
use crate::scalar::ExactScalar;

/// The color-class partition of a uniquely k-colorable graph.
///
/// Classes are ordered by their minimum vertex label, which is exactly the
/// first-occurrence order of the canonical coloring enumeration, so the
/// representation is reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquePartition {
    k: u32,
    classes: Vec<Vec<u32>>,
}

impl UniquePartition {
    /// Builds the partition from a canonical color vector (vertex order,
    /// colors 0-based with first occurrences in increasing vertex order).
    fn from_colors(colors: &[u32]) -> Self {
        let k = colors.iter().copied().max().map_or(0, |c| c + 1);
        let mut classes = vec![Vec::new(); k as usize];
        for (v, &c) in colors.iter().enumerate() {
            classes[c as usize].push(v as u32 + 1);
        }
        UniquePartition { k, classes }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Classes as ascending 1-based vertex lists, ordered by minimum label.
    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Symmetric matrix of edge counts between classes; the diagonal is zero
    /// because the class coloring is proper.
    #[allow(clippy::needless_range_loop)] // paired symmetric writes counts[i][j], counts[j][i]
    pub fn cross_edges(&self, g: &MultiGraph) -> Vec<Vec<usize>> {
        let k = self.k as usize;
        let mut counts = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in i + 1..k {
                let e = g.edges_between(&self.classes[i], &self.classes[j]);
                counts[i][j] = e;
                counts[j][i] = e;
            }
        }
        counts
    }
}

/// Outcome of the uniqueness test for proper colorings with at most k
/// classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniqueColoring {
    /// Exactly one class partition exists and it uses exactly k classes.
    Unique(UniquePartition),
    /// Either several partitions exist, or the single one has fewer than k
    /// classes (the graph is not k-chromatic, so no certificate applies).
    NotUnique { reason: String },
    /// No proper coloring with at most k classes exists.
    None,
}

/// Decides unique k-colorability by enumerating color-class partitions in
/// canonical form. A graph qualifies only when exactly one partition exists
/// and it has exactly k nonempty classes; a lone partition with fewer
/// classes would admit a smaller chromatic number and the AT = k
/// certificates below would overreach.
pub fn unique_coloring(g: &MultiGraph, k: u32, budget: &Budget) -> Result<UniqueColoring> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if k == 0 {
        return Ok(UniqueColoring::None);
    }
    let mut partitions = canonical_partitions(g, k, Some(2), budget)?;
    match partitions.len() {
        0 => Ok(UniqueColoring::None),
        1 => {
            let colors = partitions.pop().expect("length checked");
            let used = colors.iter().copied().max().map_or(0, |c| c + 1);
            if used == k {
                Ok(UniqueColoring::Unique(UniquePartition::from_colors(&colors)))
            } else {
                Ok(UniqueColoring::NotUnique {
                    reason: format!("the only class partition uses {used} of {k} classes"),
                })
            }
        }
        _ => Ok(UniqueColoring::NotUnique {
            reason: "at least two class partitions admit proper colorings".into(),
        }),
    }
}

fn require_unique(g: &MultiGraph, k: u32, budget: &Budget) -> Result<UniquePartition> {
    match unique_coloring(g, k, budget)? {
        UniqueColoring::Unique(p) => Ok(p),
        UniqueColoring::NotUnique { reason } => {
            Err(Error::UniquenessNotEstablished { k, reason })
        }
        UniqueColoring::None => Err(Error::UniquenessNotEstablished {
            k,
            reason: "no proper coloring with that many classes exists".into(),
        }),
    }
}

fn choose_2(r: i64) -> i64 {
    r * (r - 1) / 2
}

/// Certificate from the minimum edge count of a uniquely k-colorable graph.
#[derive(Debug, Clone)]
pub struct MinEdgeReport {
    pub k: u32,
    pub n: u32,
    pub m: u64,
    /// (k-1)n - C(k,2), the exact edge count the route requires.
    pub required_m: i64,
    pub applicable: bool,
    pub partition: UniquePartition,
    /// Per-vertex lists of the reconstructed assignment, present when
    /// applicable. Every list is a prefix {0..size-1}.
    pub lists: Option<Vec<Vec<u32>>>,
    pub list_colorings: Option<u64>,
    pub at: Option<u32>,
}

/// Uniquely k-colorable graphs satisfy m >= (k-1)n - C(k,2); at equality
/// AT(G) = k. The certificate rebuilds the witnessing list assignment (the
/// least vertex of class i receives {0..i}, everyone else {0..k-1}),
/// verifies that exactly one list coloring survives, and only then records
/// the conclusion. The lower bound AT >= k is already implied by
/// uniqueness: a lone partition with k classes forces the chromatic number
/// up to k.
pub fn min_edge_unique_certificate(
    g: &MultiGraph,
    k: u32,
    budget: &Budget,
) -> Result<MinEdgeReport> {
    let partition = require_unique(g, k, budget)?;
    let n = g.n();
    let m = g.m() as u64;
    let required_m = i64::from(k - 1) * i64::from(n) - choose_2(i64::from(k));
    if m as i64 != required_m {
        return Ok(MinEdgeReport {
            k,
            n,
            m,
            required_m,
            applicable: false,
            partition,
            lists: None,
            list_colorings: None,
            at: None,
        });
    }

    let mut lists: Vec<Vec<u32>> = vec![(0..k).collect(); n as usize];
    for (i, class) in partition.classes().iter().enumerate() {
        let chosen = class[0] as usize - 1;
        lists[chosen] = (0..=i as u32).collect();
    }
    let total: u64 = lists.iter().map(|l| l.len() as u64).sum();
    debug_assert_eq!(total, m + u64::from(n));

    let colorings = count_list_colorings(g, &lists, budget)?;
    let at = (colorings == 1).then_some(k);
    Ok(MinEdgeReport {
        k,
        n,
        m,
        required_m,
        applicable: true,
        partition,
        lists: Some(lists),
        list_colorings: Some(colorings),
        at,
    })
}

/// Which size parity plays the role of the distinguished classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityBranch {
    Odd,
    Even,
}

/// The materialized augmentation of the parity certificate.
#[derive(Debug, Clone)]
pub struct ParityAugmentation {
    pub branch: ParityBranch,
    /// Class indices of the partition, distinguished-parity classes first;
    /// within each group the minimum-label order is kept.
    pub class_order: Vec<usize>,
    /// Cross edges added so every undistinguished pair has even count.
    pub patch_edges: Vec<(u32, u32)>,
    pub g_prime: MultiGraph,
    /// Parallel slack edges between the first two reordered classes.
    pub slack_edges: u64,
    pub g_second: MultiGraph,
    /// Per-vertex lists; every list is a prefix {0..size-1}.
    pub lists: Vec<Vec<u32>>,
    pub colorings: u64,
    pub signed_sum: ExactScalar,
    /// Every proper list coloring of g_second carries the same sign, so the
    /// signed sum cannot cancel.
    pub sign_preserving: bool,
}

/// Certificate from the parity bound on cross-class edge counts.
#[derive(Debug, Clone)]
pub struct ParityReport {
    pub k: u32,
    pub n: u32,
    pub m: u64,
    pub r_odd: u32,
    pub r_even: u32,
    pub p_odd: u32,
    pub p_even: u32,
    pub bound_odd: i64,
    pub bound_even: i64,
    pub holds_odd: bool,
    pub holds_even: bool,
    pub applicable: bool,
    pub branch: Option<ParityBranch>,
    pub partition: UniquePartition,
    pub augmented: Option<ParityAugmentation>,
    pub at: Option<u32>,
}

/// Uniquely k-colorable graphs with
/// m <= max{(n-r_o)(k-1) + C(r_o,2) - p_e, (n-r_e)(k-1) + C(r_e,2) - p_o}
/// satisfy AT(G) = k. Here r_o and r_e count classes of odd and even size,
/// and p_o (p_e) counts class pairs of odd (even) sizes joined by an odd
/// number of edges. The proof route adds cross edges until all
/// undistinguished pairs have even counts, assigns prefix lists whose sizes
/// absorb the remaining slack as parallel edges, and wins because every
/// surviving list coloring has the same sign. All of that is rebuilt and
/// checked here by direct enumeration.
pub fn parity_unique_certificate(
    g: &MultiGraph,
    k: u32,
    budget: &Budget,
) -> Result<ParityReport> {
    let partition = require_unique(g, k, budget)?;
    let n = g.n();
    let m = g.m() as u64;
    let sizes = partition.sizes();
    let cross = partition.cross_edges(g);

    let r_odd = sizes.iter().filter(|&&s| s % 2 == 1).count() as u32;
    let r_even = k - r_odd;
    let mut p_odd = 0u32;
    let mut p_even = 0u32;
    for i in 0..k as usize {
        for j in i + 1..k as usize {
            if cross[i][j] % 2 == 1 {
                if sizes[i] % 2 == 1 && sizes[j] % 2 == 1 {
                    p_odd += 1;
                } else if sizes[i] % 2 == 0 && sizes[j] % 2 == 0 {
                    p_even += 1;
                }
            }
        }
    }

    let bound = |r: u32, p: u32| {
        i64::from(n - r) * i64::from(k - 1) + choose_2(i64::from(r)) - i64::from(p)
    };
    // The distinguished classes pair with the opposite parity's p count:
    // patching happens among the undistinguished pairs.
    let bound_odd = bound(r_odd, p_even);
    let bound_even = bound(r_even, p_odd);
    let holds_odd = m as i64 <= bound_odd;
    let holds_even = m as i64 <= bound_even;
    let applicable = holds_odd || holds_even;

    let mut report = ParityReport {
        k,
        n,
        m,
        r_odd,
        r_even,
        p_odd,
        p_even,
        bound_odd,
        bound_even,
        holds_odd,
        holds_even,
        applicable,
        branch: None,
        partition,
        augmented: None,
        at: None,
    };
    if !applicable {
        return Ok(report);
    }

    // The larger bound always holds when either does; ties go to Odd.
    let branch = if bound_odd >= bound_even {
        ParityBranch::Odd
    } else {
        ParityBranch::Even
    };
    let augmented = build_augmentation(g, &report, branch, budget)?;
    report.at = augmented.sign_preserving.then_some(k);
    report.branch = Some(branch);
    report.augmented = Some(augmented);
    Ok(report)
}

fn build_augmentation(
    g: &MultiGraph,
    report: &ParityReport,
    branch: ParityBranch,
    budget: &Budget,
) -> Result<ParityAugmentation> {
    let k = report.k as usize;
    let n = report.n;
    let classes = report.partition.classes();
    let sizes = report.partition.sizes();
    let cross = report.partition.cross_edges(g);
    let want_odd = matches!(branch, ParityBranch::Odd);

    let mut class_order: Vec<usize> = Vec::with_capacity(k);
    class_order.extend((0..k).filter(|&i| (sizes[i] % 2 == 1) == want_odd));
    let r = class_order.len();
    class_order.extend((0..k).filter(|&i| (sizes[i] % 2 == 1) != want_odd));

    // Patch every undistinguished pair with odd cross count; the new edge
    // joins the least vertex of each class.
    let mut patch_edges: Vec<(u32, u32)> = Vec::new();
    for a in r..k {
        for b in a + 1..k {
            let (i, j) = (class_order[a], class_order[b]);
            if cross[i][j] % 2 == 1 {
                let (u, v) = (classes[i][0], classes[j][0]);
                patch_edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let g_prime = g.with_extra_edges(&patch_edges)?;

    // Prefix lists: the least vertex of the t-th distinguished class gets
    // {0..t}, everyone else the full palette.
    let mut lists: Vec<Vec<u32>> = vec![(0..report.k).collect(); n as usize];
    for (t, &i) in class_order[..r].iter().enumerate() {
        lists[classes[i][0] as usize - 1] = (0..=t as u32).collect();
    }
    let total: u64 = lists.iter().map(|l| l.len() as u64).sum();
    let m_prime = g_prime.m() as u64 + u64::from(n);
    debug_assert!(total >= m_prime, "parity bound guarantees enough list mass");
    let slack_edges = total - m_prime;

    let mut extra = patch_edges.clone();
    if slack_edges > 0 {
        debug_assert!(k >= 2, "slack requires a second class");
        let (u, v) = (classes[class_order[0]][0], classes[class_order[1]][0]);
        extra.extend(std::iter::repeat_n((u.min(v), u.max(v)), slack_edges as usize));
    }
    let g_second = g.with_extra_edges(&extra)?;
    debug_assert_eq!(total, g_second.m() as u64 + u64::from(n));

    // A list coloring c contributes the term (-1)^{sum c} binom-weights
    // P(c) to the signed coloring sum; the weights are positive, so the sum
    // cannot cancel exactly when every term sign (-1)^{sum c} sign(P(c))
    // agrees. That is what the route's evenness arrangement buys, and it is
    // re-checked here coloring by coloring.
    budget.charge_product(lists.iter().map(|l| l.len() as u64))?;
    let mut colorings = 0u64;
    let mut seen: Option<bool> = None;
    let mut uniform = true;
    crate::graph::visit_list_colorings(&g_second, &lists, &mut |c: &[u32]| {
        colorings += 1;
        let mut negative = c.iter().map(|&z| z & 1).sum::<u32>() % 2 == 1;
        for &(u, v) in g_second.edges() {
            // u < v by normalization; the factor c_u - c_v is negative
            // exactly when the smaller endpoint has the smaller color.
            if c[u as usize - 1] < c[v as usize - 1] {
                negative = !negative;
            }
        }
        match seen {
            None => seen = Some(negative),
            Some(first) if first != negative => uniform = false,
            Some(_) => {}
        }
        true
    });
    let sign_preserving = colorings > 0 && uniform;

    // Lists are prefixes, so the signed coloring sum for the size function
    // f ranges over these exact lists; sign preservation makes it nonzero.
    let f: Vec<u32> = lists.iter().map(|l| l.len() as u32).collect();
    let signed_sum = signed_coloring_sum(&g_second, &f, budget)?;
    debug_assert!(!sign_preserving || !signed_sum.is_zero());

    Ok(ParityAugmentation {
        branch,
        class_order,
        patch_edges,
        g_prime,
        slack_edges,
        g_second,
        lists,
        colorings,
        signed_sum,
        sign_preserving,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, Family};

    fn family_graph(spec: &str) -> MultiGraph {
        generate_family(&Family::parse(spec).unwrap())
            .unwrap()
            .as_graph()
            .unwrap()
            .clone()
    }

    #[test]
    fn unique_partitions_of_known_graphs() {
        let b = Budget::unlimited();
        let g = family_graph("balanced_multipartite_2:3");
        match unique_coloring(&g, 3, &b).unwrap() {
            UniqueColoring::Unique(p) => {
                assert_eq!(p.classes(), &[vec![1, 2], vec![3, 4], vec![5, 6]]);
            }
            other => panic!("expected unique, got {other:?}"),
        }

        let g = family_graph("cycle_power:6:2");
        match unique_coloring(&g, 3, &b).unwrap() {
            UniqueColoring::Unique(p) => {
                assert_eq!(p.classes(), &[vec![1, 4], vec![2, 5], vec![3, 6]]);
            }
            other => panic!("expected unique, got {other:?}"),
        }

        let c4 = family_graph("cycle:4");
        assert!(matches!(
            unique_coloring(&c4, 3, &b).unwrap(),
            UniqueColoring::NotUnique { .. }
        ));
        let k4 = family_graph("complete:4");
        assert!(matches!(
            unique_coloring(&k4, 3, &b).unwrap(),
            UniqueColoring::None
        ));
    }

    #[test]
    fn lone_partition_with_too_few_classes_is_rejected() {
        let b = Budget::unlimited();
        // K_2 with k = 3 meets the min-edge count m = 2n - 3 = 1, so a
        // naive uniqueness test would certify AT = 3; the class count
        // requirement blocks it.
        let k2 = family_graph("complete:2");
        assert!(matches!(
            unique_coloring(&k2, 3, &b).unwrap(),
            UniqueColoring::NotUnique { .. }
        ));
        assert!(matches!(
            min_edge_unique_certificate(&k2, 3, &b),
            Err(Error::UniquenessNotEstablished { k: 3, .. })
        ));
    }

    #[test]
    fn min_edge_certificates() {
        let b = Budget::unlimited();
        for k in 2..=5u32 {
            let g = family_graph(&format!("complete:{k}"));
            let r = min_edge_unique_certificate(&g, k, &b).unwrap();
            assert!(r.applicable);
            assert_eq!(r.list_colorings, Some(1));
            assert_eq!(r.at, Some(k));
        }

        let p4 = family_graph("path:4");
        let r = min_edge_unique_certificate(&p4, 2, &b).unwrap();
        assert!(r.applicable);
        assert_eq!(r.at, Some(2));
        assert_eq!(r.lists.as_ref().unwrap()[0], vec![0]);

        let c6 = family_graph("cycle:6");
        let r = min_edge_unique_certificate(&c6, 2, &b).unwrap();
        assert!(!r.applicable);
        assert_eq!(r.required_m, 5);
        assert_eq!(r.at, None);
    }

    #[test]
    fn parity_certificate_on_multipartite() {
        let b = Budget::unlimited();
        let g = family_graph("balanced_multipartite_2:3");
        let r = parity_unique_certificate(&g, 3, &b).unwrap();
        assert_eq!((r.r_odd, r.r_even, r.p_odd, r.p_even), (0, 3, 0, 0));
        assert_eq!((r.bound_odd, r.bound_even), (12, 9));
        assert!(r.holds_odd && !r.holds_even);
        assert_eq!(r.branch, Some(ParityBranch::Odd));
        let aug = r.augmented.as_ref().unwrap();
        assert!(aug.patch_edges.is_empty());
        assert_eq!(aug.slack_edges, 0);
        assert_eq!(aug.colorings, 6);
        assert!(aug.sign_preserving);
        assert_eq!(r.at, Some(3));
    }

    #[test]
    fn parity_certificate_on_squared_cycle() {
        let b = Budget::unlimited();
        let g = family_graph("cycle_power:6:2");
        let r = parity_unique_certificate(&g, 3, &b).unwrap();
        assert_eq!(r.bound_odd, 12);
        assert!(r.holds_odd);
        assert_eq!(r.at, Some(3));
        assert!(r.augmented.unwrap().sign_preserving);
    }

    #[test]
    fn parity_certificate_on_even_cycle() {
        let b = Budget::unlimited();
        let g = family_graph("cycle:6");
        let r = parity_unique_certificate(&g, 2, &b).unwrap();
        assert_eq!((r.r_odd, r.r_even), (2, 0));
        assert_eq!((r.bound_odd, r.bound_even), (5, 6));
        assert!(!r.holds_odd && r.holds_even);
        assert_eq!(r.branch, Some(ParityBranch::Even));
        let aug = r.augmented.as_ref().unwrap();
        assert_eq!(aug.colorings, 2);
        assert_eq!(aug.signed_sum.abs(), ExactScalar::from_i64(2));
        assert_eq!(r.at, Some(2));
    }
}
