use std::fmt;

use crate::error::{Error, Result};

/// A directed side of an edge. Edge `k` owns darts `2k` and `2k + 1`, so
/// the twin involution is `d ↦ d ^ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(u32);

impl Dart {
    pub fn new(index: usize) -> Self {
        Dart(u32::try_from(index).expect("dart index fits in u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn edge(self) -> usize {
        (self.0 >> 1) as usize
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

/// Multigraph stored as darts. Loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DartGraph {
    tail: Vec<u32>,
    out_darts: Vec<Vec<Dart>>,
}

impl DartGraph {
    /// Builds the graph with edge `k` of `edges` owning darts `2k` (leaving
    /// the first endpoint) and `2k + 1` (leaving the second).
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut tail = Vec::with_capacity(2 * edges.len());
        let mut out_darts = vec![Vec::new(); vertex_count];
        for (k, &(u, w)) in edges.iter().enumerate() {
            if u >= vertex_count || w >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {k} = ({u}, {w}) references a vertex outside 0..{vertex_count}"
                )));
            }
            out_darts[u].push(Dart::new(2 * k));
            out_darts[w].push(Dart::new(2 * k + 1));
            tail.push(u as u32);
            tail.push(w as u32);
        }
        Ok(DartGraph { tail, out_darts })
    }

    pub fn vertex_count(&self) -> usize {
        self.out_darts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tail.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }

    pub fn tail(&self, d: Dart) -> usize {
        self.tail[d.index()] as usize
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(d.twin())
    }

    pub fn twin(&self, d: Dart) -> Dart {
        d.twin()
    }

    /// Outgoing darts of `v` in construction order.
    pub fn out_darts(&self, v: usize) -> &[Dart] {
        &self.out_darts[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_darts[v].len()
    }

    pub fn edge(&self, k: usize) -> (usize, usize) {
        (self.tail[2 * k] as usize, self.tail[2 * k + 1] as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.edge_count()).map(|k| self.edge(k))
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.dart_count()).map(Dart::new)
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &d in &self.out_darts[v] {
                    let w = self.head(d);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Reads the interchange format: one `v <count>` line followed by
    /// `e <u> <w>` lines. Blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut vertex_count: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: &str| {
                Error::InvalidGraph(format!("line {}: {reason}: {raw:?}", lineno + 1))
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad("expected an integer"));
            match fields.as_slice() {
                ["v", n] => {
                    if vertex_count.is_some() {
                        return Err(bad("duplicate vertex count"));
                    }
                    vertex_count = Some(num(n)?);
                }
                ["e", u, w] => {
                    if vertex_count.is_none() {
                        return Err(bad("edge before vertex count"));
                    }
                    edges.push((num(u)?, num(w)?));
                }
                _ => return Err(bad("unrecognized line")),
            }
        }
        let n = vertex_count.ok_or_else(|| Error::InvalidGraph("missing `v <count>` line".into()))?;
        Self::from_edges(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("v {}\n", self.vertex_count());
        for (u, w) in self.edges() {
            out.push_str(&format!("e {u} {w}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn darts_follow_edge_order() {
        let g = DartGraph::from_edges(3, &[(0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(g.dart_count(), 6);
        assert_eq!(g.out_darts(2), &[Dart::new(3), Dart::new(4), Dart::new(5)]);
        assert_eq!(g.degree(2), 3);
        for d in g.darts() {
            assert_eq!(d.twin().twin(), d);
            assert_ne!(d.twin(), d);
            assert!(g.out_darts(g.tail(d)).contains(&d));
        }
        let total: usize = (0..3).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn out_of_range_edge_rejected() {
        assert!(matches!(
            DartGraph::from_edges(2, &[(0, 2)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# figure eight\nv 1\ne 0 0\ne 0 0\n";
        let g = DartGraph::parse_text(text).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(DartGraph::parse_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn text_format_errors() {
        assert!(DartGraph::parse_text("e 0 1\n").is_err());
        assert!(DartGraph::parse_text("v 2\nv 3\n").is_err());
        assert!(DartGraph::parse_text("v 2\nx 0 1\n").is_err());
        assert!(DartGraph::parse_text("").is_err());
        assert!(DartGraph::parse_text("v 2\ne 0 5\n").is_err());
    }

    #[test]
    fn components() {
        let g = DartGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert!(!g.is_connected());
        let single = DartGraph::from_edges(1, &[]).unwrap();
        assert!(single.is_connected());
    }
}
