//! Hypergraphs: edge lists of sorted vertex subsets of size >= 2.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    edges: Vec<Vec<u32>>,
}

impl Hypergraph {
    pub fn new(n: u32, edges: Vec<Vec<u32>>) -> Result<Self> {
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for (idx, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            if e.len() < 2 {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "hyperedge needs at least 2 vertices".into(),
                });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "repeated vertex in hyperedge".into(),
                });
            }
            if e.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "vertex out of range in hyperedge".into(),
                });
            }
            sorted_edges.push(e);
        }
        Ok(Hypergraph {
            n,
            edges: sorted_edges,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// A coloring is proper iff no edge is monochromatic.
    pub fn is_proper(&self, colors: &[u32]) -> bool {
        self.edges.iter().all(|e| {
            let first = colors[(e[0] - 1) as usize];
            e.iter().any(|&v| colors[(v - 1) as usize] != first)
        })
    }
}

/// Format: '#' comments, header "n m", then m lines "k v1 ... vk".
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = data_lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(Error::Parse {
            line: header_no,
            msg: "header must be \"n m\"".into(),
        });
    }
    let n: u32 = nums[0].parse().map_err(|_| Error::Parse {
        line: header_no,
        msg: "bad vertex count".into(),
    })?;
    let m: usize = nums[1].parse().map_err(|_| Error::Parse {
        line: header_no,
        msg: "bad edge count".into(),
    })?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = data_lines.next().ok_or(Error::Parse {
            line: header_no,
            msg: format!("expected {m} hyperedges, found {}", edges.len()),
        })?;
        let mut toks = line.split_whitespace();
        let k: usize = toks
            .next()
            .ok_or(Error::Parse {
                line: no,
                msg: "missing edge size".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: no,
                msg: "bad edge size".into(),
            })?;
        let verts: Vec<u32> = toks
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: no,
                    msg: "bad vertex".into(),
                })
            })
            .collect::<Result<_>>()?;
        if verts.len() != k {
            return Err(Error::Parse {
                line: no,
                msg: format!("edge declares {k} vertices, lists {}", verts.len()),
            });
        }
        edges.push(verts);
    }
    if let Some((no, _)) = data_lines.next() {
        return Err(Error::Parse {
            line: no,
            msg: "more edge lines than declared".into(),
        });
    }
    Hypergraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_sorts() {
        let h = parse_hypergraph("4 2\n3 3 1 2\n2 4 2").unwrap();
        assert_eq!(h.edges(), &[vec![1, 2, 3], vec![2, 4]]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(parse_hypergraph("3 1\n1 2").is_err()); // size 1
        assert!(parse_hypergraph("3 1\n2 2 2").is_err()); // repeated vertex
        assert!(parse_hypergraph("3 1\n2 1 4").is_err()); // out of range
        assert!(parse_hypergraph("3 1\n3 1 2").is_err()); // count mismatch
    }

    #[test]
    fn propriety() {
        let h = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert!(h.is_proper(&[0, 0, 1]));
        assert!(!h.is_proper(&[2, 2, 2]));
    }
}
