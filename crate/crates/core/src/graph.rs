//! The graph family `A(mK_n, K_r)`, its apex join, and a plain adjacency
//! matrix graph used by the exhaustive oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A vertex id. Shared vertices (local index above `n - r`) are always
/// normalized to copy 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    Local { copy: usize, local: usize },
    Apex,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Local { copy, local } => write!(f, "v({copy},{local})"),
            Vertex::Apex => write!(f, "apex"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AmalgamGraph {
    m: usize,
    n: usize,
    r: usize,
    has_apex: bool,
}

impl AmalgamGraph {
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn has_apex(&self) -> bool {
        self.has_apex
    }

    /// Vertices private to one copy.
    pub fn private_per_copy(&self) -> usize {
        self.n - self.r
    }

    /// Order without the apex.
    pub fn base_order(&self) -> usize {
        self.m * (self.n - self.r) + self.r
    }

    pub fn p(&self) -> usize {
        self.base_order() + usize::from(self.has_apex)
    }

    pub fn q(&self) -> usize {
        let base = self.m * choose2(self.n) - (self.m - 1) * choose2(self.r);
        if self.has_apex {
            base + self.base_order()
        } else {
            base
        }
    }

    /// `p + q`, the size of the label range of a total labeling.
    pub fn total_elements(&self) -> usize {
        self.p() + self.q()
    }

    /// Clique number, which is also the chromatic number for this family.
    pub fn clique_number(&self) -> usize {
        self.n + usize::from(self.has_apex)
    }

    /// Canonical id for `(copy, local)`, both 1-based.
    pub fn vertex(&self, copy: usize, local: usize) -> Result<Vertex, GraphError> {
        if copy == 0 || copy > self.m || local == 0 || local > self.n {
            return Err(GraphError::UnknownVertex(format!("({copy},{local})")));
        }
        let copy = if local > self.n - self.r { 1 } else { copy };
        Ok(Vertex::Local { copy, local })
    }

    /// Matrix row of a vertex: private vertices copy by copy, then the
    /// shared ones, then the apex.
    pub fn index_of(&self, v: Vertex) -> Result<usize, GraphError> {
        let k = self.n - self.r;
        match v {
            Vertex::Apex if self.has_apex => Ok(self.base_order()),
            Vertex::Apex => Err(GraphError::UnknownVertex("apex".into())),
            Vertex::Local { copy, local } => {
                let v = self.vertex(copy, local)?;
                let Vertex::Local { copy, local } = v else { unreachable!() };
                if local > k {
                    Ok(self.m * k + (local - k - 1))
                } else {
                    Ok((copy - 1) * k + (local - 1))
                }
            }
        }
    }

    /// Row index of `(copy, local)` without the error plumbing. Panics on
    /// out-of-range input; builders only call it with valid indices.
    pub(crate) fn idx(&self, copy: usize, local: usize) -> usize {
        let k = self.n - self.r;
        if local > k {
            self.m * k + (local - k - 1)
        } else {
            (copy - 1) * k + (local - 1)
        }
    }

    pub fn vertex_at(&self, index: usize) -> Result<Vertex, GraphError> {
        let k = self.n - self.r;
        if index < self.m * k {
            Ok(Vertex::Local { copy: index / k + 1, local: index % k + 1 })
        } else if index < self.base_order() {
            Ok(Vertex::Local { copy: 1, local: k + 1 + (index - self.m * k) })
        } else if self.has_apex && index == self.base_order() {
            Ok(Vertex::Apex)
        } else {
            Err(GraphError::UnknownVertex(format!("#{index}")))
        }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.p()).map(|i| self.vertex_at(i).expect("in range")).collect()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let a = self.index_of(u)?;
        let b = self.index_of(v)?;
        Ok(self.adjacent_idx(a, b))
    }

    /// Adjacency on matrix indices. Out-of-range indices are non-adjacent.
    pub fn adjacent_idx(&self, a: usize, b: usize) -> bool {
        if a == b || a >= self.p() || b >= self.p() {
            return false;
        }
        let base = self.base_order();
        if a == base || b == base {
            return true;
        }
        let k = self.n - self.r;
        let copy_of = |x: usize| if x < self.m * k { Some(x / k) } else { None };
        match (copy_of(a), copy_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }
    }

    pub fn degree(&self, a: usize) -> usize {
        (0..self.p()).filter(|&b| self.adjacent_idx(a, b)).count()
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let p = self.p();
        let mut out = Vec::with_capacity(self.q());
        for a in 0..p {
            for b in a + 1..p {
                if self.adjacent_idx(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.p(), &self.edges()).expect("valid edges")
    }

    pub fn descriptor(&self) -> String {
        let apex = if self.has_apex { "+apex" } else { "" };
        format!("amalgam:{},{},{}{}", self.m, self.n, self.r, apex)
    }
}

impl fmt::Display for AmalgamGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 0 {
            write!(f, "{}K{}", self.m, self.n)?;
        } else {
            write!(f, "A({}K{},K{})", self.m, self.n, self.r)?;
        }
        if self.has_apex {
            write!(f, "+K1")?;
        }
        Ok(())
    }
}

/// Parses `amalgam:m,n,r` with an optional `+apex` suffix.
impl FromStr for AmalgamGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::Malformed(s.to_string());
        let body = s.trim().strip_prefix("amalgam:").ok_or_else(bad)?;
        let (body, apex) = match body.strip_suffix("+apex") {
            Some(b) => (b, true),
            None => (body, false),
        };
        let nums: Vec<usize> =
            body.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_, _>>()?;
        let [m, n, r] = nums[..] else { return Err(bad()) };
        let g = build_amalgam(m, n, r)?;
        if apex {
            apex_join(g)
        } else {
            Ok(g)
        }
    }
}

pub fn build_amalgam(m: usize, n: usize, r: usize) -> Result<AmalgamGraph, GraphError> {
    if m < 1 || n < 2 || r >= n {
        return Err(GraphError::InvalidParameters { m, n, r });
    }
    Ok(AmalgamGraph { m, n, r, has_apex: false })
}

pub fn apex_join(g: AmalgamGraph) -> Result<AmalgamGraph, GraphError> {
    if g.has_apex {
        return Err(GraphError::AlreadyJoined);
    }
    Ok(AmalgamGraph { has_apex: true, ..g })
}

pub(crate) fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Simple undirected graph on `0..n`, adjacency matrix backed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![false; n * n];
        let mut list = Vec::new();
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(GraphError::Malformed(format!("edge ({a},{b}) on {n} vertices")));
            }
            let (a, b) = (a.min(b), a.max(b));
            if !adj[a * n + b] {
                adj[a * n + b] = true;
                adj[b * n + a] = true;
                list.push((a, b));
            }
        }
        list.sort_unstable();
        Ok(SimpleGraph { n, adj, edges: list })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::from_edges(n, &edges).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|b| (b - 1, b)).collect();
        Self::from_edges(n, &edges).expect("valid")
    }

    /// Reads one line per vertex, `v: w1 w2 ...`. Blank lines and `#`
    /// comments are skipped; vertices are numbered from 0.
    pub fn from_adjacency_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut n = 0;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or_else(|| GraphError::Malformed(line.to_string()))?;
            let v: usize = head.trim().parse().map_err(|_| GraphError::Malformed(line.to_string()))?;
            n = n.max(v + 1);
            for w in tail.split_whitespace() {
                let w: usize = w.parse().map_err(|_| GraphError::Malformed(line.to_string()))?;
                n = n.max(w + 1);
                edges.push((v, w));
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }
    pub fn size(&self) -> usize {
        self.edges.len()
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a * self.n + b]
    }
    pub fn degree(&self, a: usize) -> usize {
        (0..self.n).filter(|&b| self.adjacent(a, b)).count()
    }

    /// Largest clique, by brute force over subsets. Intended for oracle-sized graphs.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &SimpleGraph, cand: &[usize], size: usize, best: &mut usize) {
            *best = (*best).max(size);
            for (i, &v) in cand.iter().enumerate() {
                if size + cand.len() - i <= *best {
                    return;
                }
                let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.adjacent(v, w)).collect();
                grow(g, &next, size + 1, best);
            }
        }
        let all: Vec<usize> = (0..self.n).collect();
        let mut best = 0;
        grow(self, &all, 0, &mut best);
        best
    }
}

/// The minimal view of a graph the verifier and the oracle need: vertices
/// are `0..order`, edges are pairs `(a, b)` with `a < b`.
pub trait Graph {
    fn order(&self) -> usize;
    fn edge_list(&self) -> Vec<(usize, usize)>;
    fn is_adjacent(&self, a: usize, b: usize) -> bool;
    /// Human-readable name of vertex `a`.
    fn vertex_name(&self, a: usize) -> String {
        format!("#{a}")
    }
}

impl Graph for AmalgamGraph {
    fn order(&self) -> usize {
        self.p()
    }
    fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges()
    }
    fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacent_idx(a, b)
    }
    fn vertex_name(&self, a: usize) -> String {
        self.vertex_at(a).map_or_else(|_| format!("#{a}"), |v| v.to_string())
    }
}

impl Graph for SimpleGraph {
    fn order(&self) -> usize {
        self.n
    }
    fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges.clone()
    }
    fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacent(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_from_examples() {
        let g = build_amalgam(3, 6, 0).unwrap();
        assert_eq!((g.p(), g.q()), (18, 45));
        let g = build_amalgam(2, 7, 3).unwrap();
        assert_eq!((g.p(), g.q()), (11, 39));
        assert_eq!(g.total_elements(), 50);
        let g = build_amalgam(2, 3, 1).unwrap();
        assert_eq!((g.p(), g.q()), (5, 6));
    }

    #[test]
    fn friendship_hub_has_degree_four() {
        let g = build_amalgam(2, 3, 1).unwrap();
        let hub = g.index_of(g.vertex(2, 3).unwrap()).unwrap();
        assert_eq!(hub, 4);
        assert_eq!(g.degree(hub), 4);
    }

    #[test]
    fn join_counts() {
        let g = apex_join(build_amalgam(3, 6, 0).unwrap()).unwrap();
        assert_eq!((g.p(), g.q()), (19, 63));
        let j = apex_join(build_amalgam(3, 6, 1).unwrap()).unwrap();
        let h = build_amalgam(3, 7, 2).unwrap();
        assert_eq!((j.p(), j.q()), (h.p(), h.q()));
        assert_eq!((j.p(), j.q()), (17, 61));
        let k3 = apex_join(build_amalgam(1, 2, 0).unwrap()).unwrap();
        assert_eq!((k3.p(), k3.q()), (3, 3));
        assert_eq!(apex_join(k3), Err(GraphError::AlreadyJoined));
    }

    #[test]
    fn adjacency_rules() {
        let g = build_amalgam(2, 7, 3).unwrap();
        let v11 = g.vertex(1, 1).unwrap();
        let v21 = g.vertex(2, 1).unwrap();
        let u5 = g.vertex(2, 5).unwrap();
        assert!(!g.adjacent(v11, v21).unwrap());
        assert!(g.adjacent(v11, u5).unwrap());
        assert!(!g.adjacent(v11, v11).unwrap());
        assert!(g.adjacent(v11, Vertex::Apex).is_err());
        assert_eq!(u5, Vertex::Local { copy: 1, local: 5 });
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(build_amalgam(0, 3, 0).is_err());
        assert!(build_amalgam(2, 1, 0).is_err());
        assert!(build_amalgam(2, 3, 3).is_err());
        assert!(build_amalgam(1, 4, 0).is_ok());
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["amalgam:2,7,3", "amalgam:3,6,0+apex"] {
            let g: AmalgamGraph = s.parse().unwrap();
            assert_eq!(g.descriptor(), s);
        }
        assert!("amalgam:2,7".parse::<AmalgamGraph>().is_err());
        assert!("graph:2,7,3".parse::<AmalgamGraph>().is_err());
    }

    #[test]
    fn adjacency_list_loader() {
        let g = SimpleGraph::from_adjacency_list("# path\n0: 1\n1: 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g, SimpleGraph::path(3));
    }

    #[test]
    fn clique_numbers() {
        for (m, n, r) in [(2, 3, 1), (3, 5, 2), (2, 4, 0)] {
            let g = build_amalgam(m, n, r).unwrap();
            assert_eq!(g.to_simple().clique_number(), n);
            assert_eq!(apex_join(g).unwrap().to_simple().clique_number(), n + 1);
        }
    }

    #[test]
    fn edge_count_matches_enumeration() {
        for m in 1..=4 {
            for n in 2..=8 {
                for r in 0..n {
                    let g = build_amalgam(m, n, r).unwrap();
                    // enumerate the identified structure directly: all pairs
                    // inside a copy, with shared pairs counted once
                    let mut pairs = std::collections::BTreeSet::new();
                    for i in 1..=m {
                        for j in 1..=n {
                            for k in j + 1..=n {
                                let a = g.vertex(i, j).unwrap();
                                let b = g.vertex(i, k).unwrap();
                                pairs.insert((a, b));
                            }
                        }
                    }
                    assert_eq!(pairs.len(), g.q(), "({m},{n},{r})");
                    assert_eq!(g.edges().len(), g.q());
                    assert_eq!(g.p() + g.q(), m * n * (n + 1) / 2 - (m - 1) * r * (r + 1) / 2);
                    let j = apex_join(g).unwrap();
                    let h = build_amalgam(m, n + 1, r + 1).unwrap();
                    assert_eq!((j.p(), j.q()), (h.p(), h.q()));
                }
            }
        }
    }
}
