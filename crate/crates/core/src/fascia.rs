//! Linear families of fasciagraphs and their rotagraph closures.
//!
//! A family is given by a start graph `G0` with an ordered boundary `S0`,
//! a repeated constituent `H` with boundary `S` (matched to `S0` by
//! position), and glue edges joining the previous boundary to the new copy
//! of `H`. `G_n` is `G_{n−1}` plus one copy of `H` plus the glue edges.
//! Vertices and edges are numbered so that `G_{n−1}` is a prefix of `G_n`:
//! same vertex ids, same dart ids.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rotation::DartGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub g0: DartGraph,
    pub s0: Vec<usize>,
    pub h: DartGraph,
    pub s: Vec<usize>,
    /// `(position in the previous boundary, vertex of the new H copy)`.
    pub glue: Vec<(usize, usize)>,
    /// Display letter for each boundary position.
    pub labels: Vec<String>,
}

/// The doubly hexagonal chain: `G0 = H = a–b–c–d`, and the new `b` reaches
/// the old `a` directly, the old `d` through the new `a`, and the old `c`
/// through the new `c` and `d`.
pub fn doubly_hex_spec() -> FamilySpec {
    let path = DartGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).expect("static path");
    FamilySpec {
        name: "doubly-hexagonal".into(),
        g0: path.clone(),
        s0: vec![0, 1, 2, 3],
        h: path,
        s: vec![0, 1, 2, 3],
        glue: vec![(0, 1), (3, 0), (2, 3)],
        labels: ["a", "b", "c", "d"].map(String::from).to_vec(),
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        if self.s0.len() != self.s.len() {
            return bad(format!("|S0| = {} but |S| = {}", self.s0.len(), self.s.len()));
        }
        if self.labels.len() != self.s.len() {
            return bad(format!("{} labels for {} boundary vertices", self.labels.len(), self.s.len()));
        }
        for (set, graph, what) in [(&self.s0, &self.g0, "S0"), (&self.s, &self.h, "S")] {
            let mut seen = HashSet::new();
            for &v in set.iter() {
                if v >= graph.vertex_count() {
                    return bad(format!("{what} vertex {v} is out of range"));
                }
                if !seen.insert(v) {
                    return bad(format!("{what} lists vertex {v} twice"));
                }
            }
        }
        let mut pairs = HashSet::new();
        for &(pos, v) in &self.glue {
            if pos >= self.s0.len() || v >= self.h.vertex_count() {
                return bad(format!("glue pair ({pos}, {v}) is out of range"));
            }
            if !pairs.insert((pos, v)) {
                return bad(format!("glue pair ({pos}, {v}) repeated"));
            }
        }
        if self.glue.is_empty() && self.h.vertex_count() > 0 {
            return bad("no glue edges: copies would be disconnected".into());
        }
        Ok(())
    }

    pub fn boundary_size(&self) -> usize {
        self.s.len()
    }

    /// Writes the text stanza understood by [`FamilySpec::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name {}", self.name);
        let _ = writeln!(out, "g0 {}", self.g0.vertex_count());
        for (u, w) in self.g0.edges() {
            let _ = writeln!(out, "g0-edge {u} {w}");
        }
        let _ = writeln!(out, "h {}", self.h.vertex_count());
        for (u, w) in self.h.edges() {
            let _ = writeln!(out, "h-edge {u} {w}");
        }
        let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "s0 {}", join(&self.s0));
        let _ = writeln!(out, "s {}", join(&self.s));
        for (pos, v) in &self.glue {
            let _ = writeln!(out, "glue {pos} {v}");
        }
        let _ = writeln!(out, "labels {}", self.labels.join(" "));
        out
    }

    /// Parses a family stanza:
    ///
    /// ```text
    /// name doubly-hexagonal
    /// g0 4
    /// g0-edge 0 1
    /// h 4
    /// h-edge 0 1
    /// s0 0 1 2 3
    /// s 0 1 2 3
    /// glue 0 1        # previous-boundary position, vertex of the new copy
    /// labels a b c d  # optional, defaults to a, b, c, ...
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = String::from("family");
        let mut g0_n = None;
        let mut h_n = None;
        let (mut g0_edges, mut h_edges, mut glue) = (Vec::new(), Vec::new(), Vec::new());
        let (mut s0, mut s, mut labels) = (None, None, None);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: &str| Error::FamilyParse { line: i + 1, reason: reason.into() };
            let mut fields = line.split_whitespace();
            let key = fields.next().unwrap_or_default();
            let rest: Vec<&str> = fields.collect();
            let nums = || -> Result<Vec<usize>> {
                rest.iter()
                    .map(|x| x.parse::<usize>().map_err(|_| err("expected integers")))
                    .collect()
            };
            let pair = || -> Result<(usize, usize)> {
                match nums()?.as_slice() {
                    &[a, b] => Ok((a, b)),
                    _ => Err(err("expected two integers")),
                }
            };
            let single = || -> Result<usize> {
                match nums()?.as_slice() {
                    &[a] => Ok(a),
                    _ => Err(err("expected one integer")),
                }
            };
            match key {
                "name" => name = rest.join(" "),
                "g0" => g0_n = Some(single()?),
                "h" => h_n = Some(single()?),
                "g0-edge" => g0_edges.push(pair()?),
                "h-edge" => h_edges.push(pair()?),
                "s0" => s0 = Some(nums()?),
                "s" => s = Some(nums()?),
                "glue" => glue.push(pair()?),
                "labels" => labels = Some(rest.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                _ => return Err(err(&format!("unknown key {key:?}"))),
            }
        }
        let missing = |what: &str| Error::InvalidFamily(format!("stanza has no `{what}` line"));
        let g0 = DartGraph::from_edges(g0_n.ok_or_else(|| missing("g0"))?, &g0_edges)?;
        let h = DartGraph::from_edges(h_n.ok_or_else(|| missing("h"))?, &h_edges)?;
        let s0 = s0.ok_or_else(|| missing("s0"))?;
        let s = s.ok_or_else(|| missing("s"))?;
        let labels = labels.unwrap_or_else(|| default_labels(s.len()));
        let spec = FamilySpec { name, g0, s0, h, s, glue, labels };
        spec.validate()?;
        Ok(spec)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match u8::try_from(i) {
            Ok(k) if k < 26 => char::from(b'a' + k).to_string(),
            _ => format!("s{i}"),
        })
        .collect()
}

/// `G_n` together with its bookkeeping.
#[derive(Clone, Debug)]
pub struct FasciaGraph {
    pub graph: DartGraph,
    /// `S_n` in boundary-position order.
    pub boundary: Vec<usize>,
    pub n: usize,
    /// Copy index of every vertex (0 for `G0`).
    pub copy_of: Vec<usize>,
    /// Boundary position of every vertex within its own copy, if any.
    pub role_of: Vec<Option<usize>>,
    /// `(vertex count, edge count)` of `G_k` for `k = 0..=n`.
    pub levels: Vec<(usize, usize)>,
}

impl FasciaGraph {
    /// Boundary position of `v` if `v` lies in `S_n`.
    pub fn boundary_position(&self, v: usize) -> Option<usize> {
        if self.copy_of[v] == self.n {
            self.role_of[v]
        } else {
            None
        }
    }

    pub fn degree_count(&self, degree: usize) -> usize {
        (0..self.graph.vertex_count())
            .filter(|&v| self.graph.degree(v) == degree)
            .count()
    }
}

struct Layout {
    edges: Vec<(usize, usize)>,
    /// Which edges are the internal edges of the last H copy.
    last_copy_edges: std::ops::Range<usize>,
    boundary: Vec<usize>,
    copy_of: Vec<usize>,
    role_of: Vec<Option<usize>>,
    levels: Vec<(usize, usize)>,
}

fn layout(spec: &FamilySpec, n: usize) -> Result<Layout> {
    spec.validate()?;
    let v0 = spec.g0.vertex_count();
    let vh = spec.h.vertex_count();
    let mut edges: Vec<(usize, usize)> = spec.g0.edges().collect();
    let mut copy_of = vec![0; v0];
    let mut role_of = vec![None; v0];
    for (pos, &v) in spec.s0.iter().enumerate() {
        role_of[v] = Some(pos);
    }
    let mut boundary = spec.s0.clone();
    let mut levels = vec![(v0, edges.len())];
    let mut last_copy_edges = 0..0;
    for copy in 1..=n {
        let offset = v0 + (copy - 1) * vh;
        copy_of.extend(std::iter::repeat_n(copy, vh));
        let mut roles = vec![None; vh];
        for (pos, &v) in spec.s.iter().enumerate() {
            roles[v] = Some(pos);
        }
        role_of.extend(roles);
        let start = edges.len();
        edges.extend(spec.h.edges().map(|(u, w)| (u + offset, w + offset)));
        last_copy_edges = start..edges.len();
        edges.extend(spec.glue.iter().map(|&(pos, v)| (boundary[pos], v + offset)));
        boundary = spec.s.iter().map(|&v| v + offset).collect();
        levels.push((offset + vh, edges.len()));
    }
    Ok(Layout { edges, last_copy_edges, boundary, copy_of, role_of, levels })
}

pub fn build_fasciagraph(spec: &FamilySpec, n: usize) -> Result<FasciaGraph> {
    let Layout { edges, boundary, copy_of, role_of, levels, .. } = layout(spec, n)?;
    let graph = DartGraph::from_edges(copy_of.len(), &edges)?;
    debug_assert_eq!(
        graph.edge_count(),
        spec.g0.edge_count() + n * (spec.h.edge_count() + spec.glue.len())
    );
    Ok(FasciaGraph { graph, boundary, n, copy_of, role_of, levels })
}

/// Closes `G_n` into a ring by identifying its last copy of `H` with the
/// first copy (`G0`, which must equal `H` with `S0 = S`). The internal
/// edges of the last copy are dropped and the closing glue edges are
/// redirected onto copy 0; multi-edges are kept if any arise.
pub fn build_rotagraph(spec: &FamilySpec, n: usize) -> Result<DartGraph> {
    if n < 2 {
        return Err(Error::RotagraphTooShort(n));
    }
    if spec.g0 != spec.h || spec.s0 != spec.s {
        return Err(Error::InvalidFamily(
            "rotagraph closure needs G0 = H and S0 = S".into(),
        ));
    }
    let lay = layout(spec, n)?;
    let first_of_last = lay.levels[n - 1].0;
    let fold = |v: usize| if v >= first_of_last { v - first_of_last } else { v };
    let edges: Vec<(usize, usize)> = lay
        .edges
        .iter()
        .enumerate()
        .filter(|(k, _)| !lay.last_copy_edges.contains(k))
        .map(|(_, &(u, w))| (fold(u), fold(w)))
        .collect();
    DartGraph::from_edges(first_of_last, &edges)
}

/// Branch lengths of a theta graph: two vertices of degree 3 joined by
/// three internally disjoint paths, all other vertices of degree 2.
/// Returns `None` for any other graph.
pub fn theta_branch_lengths(g: &DartGraph) -> Option<Vec<usize>> {
    let hubs: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 3).collect();
    let others_ok = (0..g.vertex_count()).all(|v| matches!(g.degree(v), 2 | 3));
    if hubs.len() != 2 || !others_ok || !g.is_connected() {
        return None;
    }
    let mut lengths = Vec::new();
    for &start in g.out_darts(hubs[0]) {
        let mut d = start;
        let mut len = 1;
        while g.head(d) != hubs[1] {
            let v = g.head(d);
            if v == hubs[0] || len > g.edge_count() {
                return None;
            }
            d = *g.out_darts(v).iter().find(|&&x| x != d.twin())?;
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Some(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::count_embeddings;
    use num_bigint::BigUint;

    fn degrees(g: &DartGraph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn d0_is_the_path() {
        let d0 = build_fasciagraph(&doubly_hex_spec(), 0).unwrap();
        assert_eq!(d0.graph.vertex_count(), 4);
        assert_eq!(d0.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(d0.boundary, vec![0, 1, 2, 3]);
    }

    #[test]
    fn d1_is_a_333_theta_graph() {
        let d1 = build_fasciagraph(&doubly_hex_spec(), 1).unwrap();
        let g = &d1.graph;
        assert_eq!(degrees(g), vec![2, 2, 2, 2, 2, 2, 3, 3]);
        assert_eq!(theta_branch_lengths(g), Some(vec![3, 3, 3]));
        let d2 = build_fasciagraph(&doubly_hex_spec(), 2).unwrap();
        assert_eq!(theta_branch_lengths(&d2.graph), None);
        let last: Vec<usize> = d1.boundary.iter().map(|&v| g.degree(v)).collect();
        assert_eq!(last, vec![2, 3, 2, 2]);
    }

    #[test]
    fn chain_counts() {
        let spec = doubly_hex_spec();
        for n in 1..=9 {
            let dn = build_fasciagraph(&spec, n).unwrap();
            assert_eq!(dn.graph.vertex_count(), 4 * (n + 1));
            assert_eq!(dn.graph.edge_count(), 6 * n + 3);
            assert_eq!(dn.degree_count(3), 4 * n - 2);
            assert_eq!(dn.degree_count(2), 6);
            assert!(dn.graph.is_connected());
            assert_eq!(count_embeddings(&dn.graph), BigUint::from(1u8) << (4 * n - 2));
            assert!(dn.boundary.iter().all(|&v| dn.copy_of[v] == n));
        }
        let d7 = build_fasciagraph(&spec, 7).unwrap();
        assert_eq!((d7.graph.vertex_count(), d7.graph.edge_count()), (32, 45));
    }

    #[test]
    fn shorter_chain_is_a_prefix() {
        let spec = doubly_hex_spec();
        for n in 1..=5 {
            let long = build_fasciagraph(&spec, n).unwrap();
            let short = build_fasciagraph(&spec, n - 1).unwrap();
            let prefix: Vec<_> = long.graph.edges().take(short.graph.edge_count()).collect();
            assert_eq!(prefix, short.graph.edges().collect::<Vec<_>>());
            assert_eq!(long.levels[n - 1], (short.graph.vertex_count(), short.graph.edge_count()));
        }
    }

    #[test]
    fn rotagraph_counts() {
        let spec = doubly_hex_spec();
        for n in 2..=8 {
            let r = build_rotagraph(&spec, n).unwrap();
            assert_eq!(r.vertex_count(), 4 * n);
            assert_eq!(r.edge_count(), 6 * n);
            assert!((0..r.vertex_count()).all(|v| r.degree(v) == 3));
            assert!(r.is_connected());
        }
        let r3 = build_rotagraph(&spec, 3).unwrap();
        assert_eq!(count_embeddings(&r3), BigUint::from(1u32 << 12));
        assert_eq!(build_rotagraph(&spec, 1).unwrap_err(), Error::RotagraphTooShort(1));
    }

    #[test]
    fn rotagraph_rotation_is_an_automorphism() {
        let spec = doubly_hex_spec();
        for n in 2..=6 {
            let r = build_rotagraph(&spec, n).unwrap();
            let shift = |v: usize| (v + 4) % (4 * n);
            let canon = |e: (usize, usize)| (e.0.min(e.1), e.0.max(e.1));
            let mut original: Vec<_> = r.edges().map(canon).collect();
            let mut shifted: Vec<_> = r.edges().map(|(u, w)| canon((shift(u), shift(w)))).collect();
            original.sort_unstable();
            shifted.sort_unstable();
            assert_eq!(original, shifted, "n = {n}");
        }
    }

    #[test]
    fn stanza_round_trip() {
        let spec = doubly_hex_spec();
        let text = spec.to_text();
        assert_eq!(FamilySpec::parse(&text).unwrap(), spec);
    }

    #[test]
    fn stanza_errors() {
        assert!(matches!(
            FamilySpec::parse("g0 2\nbogus 1\n"),
            Err(Error::FamilyParse { line: 2, .. })
        ));
        assert!(matches!(FamilySpec::parse("g0 2\n"), Err(Error::InvalidFamily(_))));
        let mismatched = "g0 2\ng0-edge 0 1\nh 2\nh-edge 0 1\ns0 0 1\ns 0\nglue 0 0\n";
        assert!(matches!(FamilySpec::parse(mismatched), Err(Error::InvalidFamily(_))));
        let repeated = "g0 2\ng0-edge 0 1\nh 2\nh-edge 0 1\ns0 0 1\ns 0 1\nglue 0 0\nglue 0 0\n";
        assert!(matches!(FamilySpec::parse(repeated), Err(Error::InvalidFamily(_))));
    }

    #[test]
    fn ladder_family_from_stanza() {
        // Ladder: each step adds a rung joined to the previous rung.
        let ladder = "name ladder\ng0 2\ng0-edge 0 1\nh 2\nh-edge 0 1\ns0 0 1\ns 0 1\nglue 0 0\nglue 1 1\n";
        let spec = FamilySpec::parse(ladder).unwrap();
        assert_eq!(spec.labels, vec!["a", "b"]);
        let l3 = build_fasciagraph(&spec, 3).unwrap();
        assert_eq!(l3.graph.vertex_count(), 8);
        assert_eq!(l3.graph.edge_count(), 10);
    }
}
