//! Named graph families, parsed from "name:p1:p2" strings.

use super::hypergraph::Hypergraph;
use super::multigraph::MultiGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(u32),
    CompleteBipartite(u32, u32),
    /// K_{2*t}: t parts of size 2, part i = {2i-1, 2i}.
    BalancedMultipartite2(u32),
    Cycle(u32),
    /// C_n^p: edges at circular distance 1..=p, requires 2p < n.
    CyclePower(u32, u32),
    Path(u32),
    Fano,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyGraph {
    Graph(MultiGraph),
    Hypergraph(Hypergraph),
}

impl FamilyGraph {
    pub fn as_graph(&self) -> Option<&MultiGraph> {
        match self {
            FamilyGraph::Graph(g) => Some(g),
            FamilyGraph::Hypergraph(_) => None,
        }
    }

    pub fn as_hypergraph(&self) -> Option<&Hypergraph> {
        match self {
            FamilyGraph::Graph(_) => None,
            FamilyGraph::Hypergraph(h) => Some(h),
        }
    }
}

impl Family {
    /// Accepts e.g. "complete:4", "cycle_power:6:2", "fano".
    pub fn parse(spec: &str) -> Result<Family> {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or("");
        let params: Vec<u32> = parts
            .map(|p| {
                p.parse()
                    .map_err(|_| Error::BadFamilyParams(format!("bad integer {p:?}")))
            })
            .collect::<Result<_>>()?;
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::BadFamilyParams(format!(
                    "{name} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let fam = match name {
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "balanced_multipartite_2" => {
                arity(1)?;
                Family::BalancedMultipartite2(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "cycle_power" => {
                arity(2)?;
                Family::CyclePower(params[0], params[1])
            }
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "fano" => {
                arity(0)?;
                Family::Fano
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(fam)
    }
}

pub fn generate_family(family: &Family) -> Result<FamilyGraph> {
    let graph = |g: Result<MultiGraph>| g.map(FamilyGraph::Graph);
    match *family {
        Family::Complete(n) => {
            if n == 0 {
                return Err(Error::BadFamilyParams("complete needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    edges.push((i, j));
                }
            }
            graph(MultiGraph::new(n, edges))
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(Error::BadFamilyParams(
                    "complete_bipartite needs a, b >= 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for i in 1..=a {
                for j in 1..=b {
                    edges.push((i, a + j));
                }
            }
            graph(MultiGraph::new(a + b, edges))
        }
        Family::BalancedMultipartite2(t) => {
            if t == 0 {
                return Err(Error::BadFamilyParams(
                    "balanced_multipartite_2 needs t >= 1".into(),
                ));
            }
            let n = 2 * t;
            let mut edges = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    // skip the non-edge inside each part {2i-1, 2i}
                    if j == i + 1 && i % 2 == 1 {
                        continue;
                    }
                    edges.push((i, j));
                }
            }
            graph(MultiGraph::new(n, edges))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::BadFamilyParams("cycle needs n >= 3".into()));
            }
            let mut edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
            edges.push((1, n));
            graph(MultiGraph::new(n, edges))
        }
        Family::CyclePower(n, p) => {
            if n < 3 || p == 0 || 2 * p >= n {
                return Err(Error::BadFamilyParams(
                    "cycle_power needs n >= 3 and 1 <= p < n/2".into(),
                ));
            }
            let mut edges = Vec::new();
            for d in 1..=p {
                for i in 1..=n {
                    let j = (i - 1 + d) % n + 1;
                    edges.push((i, j));
                }
            }
            graph(MultiGraph::new(n, edges))
        }
        Family::Path(n) => {
            if n == 0 {
                return Err(Error::BadFamilyParams("path needs n >= 1".into()));
            }
            let edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
            graph(MultiGraph::new(n, edges))
        }
        Family::Fano => {
            let edges = vec![
                vec![1, 2, 4],
                vec![1, 3, 6],
                vec![1, 5, 7],
                vec![2, 3, 5],
                vec![3, 4, 7],
                vec![2, 6, 7],
                vec![4, 5, 6],
            ];
            Hypergraph::new(7, edges).map(FamilyGraph::Hypergraph)
        }
    }
}
