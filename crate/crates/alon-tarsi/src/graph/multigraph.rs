//! Vertex-labelled multigraphs.
//!
//! Vertices are 1..n. Edges are stored as (i, j) with i < j in a stable
//! order: the edge index is part of the graph's identity (it fixes matrix
//! row order and orientation bit layout), so everything downstream is
//! bit-reproducible. Loops are rejected, parallel edges are allowed.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl MultiGraph {
    pub fn new(n: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (idx, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("loop at vertex {a}"),
                });
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("endpoint out of range in edge ({a}, {b})"),
                });
            }
            normalized.push((a.min(b), a.max(b)));
        }
        Ok(MultiGraph {
            n,
            edges: normalized,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Degree counting parallel edges.
    pub fn degree(&self, v: u32) -> u32 {
        self.edges
            .iter()
            .map(|&(a, b)| u32::from(a == v) + u32::from(b == v))
            .sum()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(*e))
    }

    /// Neighbor sets (ignoring multiplicity), indexed by vertex label.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n as usize + 1];
        for &(a, b) in &self.edges {
            if !adj[a as usize].contains(&b) {
                adj[a as usize].push(b);
            }
            if !adj[b as usize].contains(&a) {
                adj[b as usize].push(a);
            }
        }
        adj
    }

    /// Vertex sets of connected components, each sorted, in order of their
    /// smallest vertex. Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n as usize + 1];
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen[start as usize] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start as usize] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Restriction to a vertex subset, relabelled 1..|verts| in the order
    /// given. Keeps every edge with both endpoints inside, in edge order.
    pub fn induced(&self, verts: &[u32]) -> MultiGraph {
        let mut label = vec![0u32; self.n as usize + 1];
        for (new, &v) in verts.iter().enumerate() {
            label[v as usize] = new as u32 + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                let (la, lb) = (label[a as usize], label[b as usize]);
                (la != 0 && lb != 0).then_some((la.min(lb), la.max(lb)))
            })
            .collect();
        MultiGraph {
            n: verts.len() as u32,
            edges,
        }
    }

    /// Same vertex set, edge subset by index (order preserved).
    pub fn edge_subgraph(&self, keep: &[usize]) -> MultiGraph {
        MultiGraph {
            n: self.n,
            edges: keep.iter().map(|&i| self.edges[i]).collect(),
        }
    }

    /// Same vertex set with extra edges appended.
    pub fn with_extra_edges(&self, extra: &[(u32, u32)]) -> Result<MultiGraph> {
        let mut edges = self.edges.clone();
        for &(a, b) in extra {
            edges.push((a, b));
        }
        MultiGraph::new(self.n, edges)
    }

    /// Number of edges with one endpoint in each set (counting multiplicity).
    pub fn edges_between(&self, a: &[u32], b: &[u32]) -> usize {
        let aset: std::collections::BTreeSet<u32> = a.iter().copied().collect();
        let bset: std::collections::BTreeSet<u32> = b.iter().copied().collect();
        self.edges
            .iter()
            .filter(|&&(x, y)| {
                (aset.contains(&x) && bset.contains(&y)) || (aset.contains(&y) && bset.contains(&x))
            })
            .count()
    }
}

/// Parse the text format: '#' comment lines, header "n m", then m lines
/// "i j" with 1-based endpoints.
pub fn parse_multigraph(text: &str) -> Result<MultiGraph> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = data_lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let mut parts = header.split_whitespace();
    let parse_u32 = |s: Option<&str>, line: usize, what: &str| -> Result<u32> {
        s.ok_or(Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            msg: format!("bad {what}"),
        })
    };
    let n = parse_u32(parts.next(), header_no, "vertex count")?;
    let m = parse_u32(parts.next(), header_no, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line: header_no,
            msg: "trailing tokens in header".into(),
        });
    }

    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let (no, line) = data_lines.next().ok_or(Error::Parse {
            line: header_no,
            msg: format!("expected {m} edges, found {}", edges.len()),
        })?;
        let mut p = line.split_whitespace();
        let a = parse_u32(p.next(), no, "endpoint")?;
        let b = parse_u32(p.next(), no, "endpoint")?;
        if p.next().is_some() {
            return Err(Error::Parse {
                line: no,
                msg: "trailing tokens in edge line".into(),
            });
        }
        if a == b {
            return Err(Error::Parse {
                line: no,
                msg: format!("loop at vertex {a}"),
            });
        }
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::Parse {
                line: no,
                msg: format!("endpoint out of range in edge ({a}, {b})"),
            });
        }
        edges.push((a.min(b), a.max(b)));
    }
    if let Some((no, _)) = data_lines.next() {
        return Err(Error::Parse {
            line: no,
            msg: "more edge lines than declared".into(),
        });
    }
    MultiGraph::new(n, edges)
}

/// Line graph: vertices are edge indices of `h`, adjacent iff the edges
/// share an endpoint. Requires a simple base graph (with parallel edges the
/// construction is ambiguous).
pub fn line_graph(h: &MultiGraph) -> Result<MultiGraph> {
    let mut seen = std::collections::BTreeSet::new();
    for (idx, e) in h.edges().iter().enumerate() {
        if !seen.insert(*e) {
            return Err(Error::ParallelEdges(idx));
        }
    }
    let m = h.m();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a1, b1) = h.edges()[i];
            let (a2, b2) = h.edges()[j];
            if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
        }
    }
    MultiGraph::new(m as u32, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k3() {
        let g = parse_multigraph("3 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn normalizes_and_keeps_parallels() {
        let g = parse_multigraph("2 2\n1 2\n2 1").unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 2)]);
        assert!(!g.is_simple());
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(matches!(
            parse_multigraph("2 1\n1 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_multigraph("2 1\n1 3").is_err());
        assert!(parse_multigraph("2 2\n1 2").is_err());
        assert!(parse_multigraph("2 1\n1 2\n1 2").is_err());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_multigraph("# triangle\n\n3 3\n1 2\n# middle\n1 3\n2 3\n").unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn components_and_induced() {
        let g = MultiGraph::new(5, vec![(1, 2), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![1, 2, 3], vec![4, 5]]);
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), &[(1, 2), (2, 3)]);
        assert!(!g.is_connected());
        assert!(h.is_connected());
    }

    #[test]
    fn line_graph_of_triangle_is_triangle() {
        let k3 = MultiGraph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        let lg = line_graph(&k3).unwrap();
        assert_eq!(lg.n(), 3);
        assert_eq!(lg.m(), 3);
    }

    #[test]
    fn line_graph_of_path3_is_edge() {
        let p3 = MultiGraph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let lg = line_graph(&p3).unwrap();
        assert_eq!(lg.n(), 2);
        assert_eq!(lg.edges(), &[(1, 2)]);
    }

    #[test]
    fn line_graph_rejects_parallel() {
        let g = MultiGraph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert!(matches!(line_graph(&g), Err(Error::ParallelEdges(1))));
    }

    #[test]
    fn edges_between_counts_multiplicity() {
        let g = MultiGraph::new(4, vec![(1, 3), (1, 3), (2, 4), (1, 2)]).unwrap();
        assert_eq!(g.edges_between(&[1], &[3]), 2);
        assert_eq!(g.edges_between(&[1, 2], &[3, 4]), 3);
    }
}
