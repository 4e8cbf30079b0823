//! Simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is one [`VertexSet`], so neighborhood, domination and
//! connectivity queries reduce to word operations. A [`Graph`] is immutable
//! once built; every construction returns a new value.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Unordered edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicates.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and
    /// loop-free; this is checked.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let all = VertexSet::full(n);
        for (i, row) in rows.iter().enumerate() {
            if let Some(v) = row.difference(all).first() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if row.contains(i) {
                return Err(Error::Loop(i));
            }
            for j in row.iter() {
                if !rows[j].contains(i) {
                    return Err(Error::EdgeList(format!(
                        "asymmetric adjacency at {{{i}, {j}}}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    // Named families. These panic on sizes outside 1..=64.

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, &[]).expect("vertex count in 1..=64")
    }

    pub fn complete(n: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&n), "vertex count in 1..=64");
        let all = VertexSet::full(n);
        let adj = (0..n)
            .map(|i| all.difference(VertexSet::singleton(i)))
            .collect();
        Graph { n, adj }
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("vertex count in 1..=64")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Self::from_edges(n, &edges).expect("vertex count in 1..=64")
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<Edge> = (1..=k).map(|i| (0, i)).collect();
        Self::from_edges(k + 1, &edges).expect("vertex count in 1..=64")
    }

    /// Complete multipartite graph; parts are consecutive vertex ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut edges = Vec::new();
        let mut start = 0;
        let mut owner = vec![0usize; n];
        for (p, &size) in parts.iter().enumerate() {
            owner[start..start + size].fill(p);
            start += size;
        }
        for i in 0..n {
            for j in i + 1..n {
                if owner[i] != owner[j] {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(n, &edges).expect("vertex count in 1..=64")
    }

    pub fn complete_bipartite(l: usize, m: usize) -> Self {
        Self::complete_multipartite(&[l, m])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.adj[i].contains(j)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges in lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in self.adj[i].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    #[inline]
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertices()) == self.vertices()
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the induced subgraph on `within`, ordered by smallest
    /// member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach_within(v, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// `c(G[S])`, with `c(G[∅]) = 0`.
    pub fn component_count_within(&self, within: VertexSet) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.first() {
            rest = rest.difference(self.reach_within(v, within));
            count += 1;
        }
        count
    }

    pub fn component_count(&self) -> usize {
        self.component_count_within(self.vertices())
    }

    /// Proper 2-coloring if one exists. In every component the smallest
    /// vertex lands in the first part, so vertex 0 is always in the first
    /// part.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = [VertexSet::EMPTY; 2];
        for comp in self.components() {
            let root = comp.first().expect("components are nonempty");
            let mut colored = [VertexSet::singleton(root), VertexSet::EMPTY];
            let mut frontier = colored[0];
            let mut parity = 0;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.adj[v]);
                }
                if !next.intersection(colored[parity]).is_empty() {
                    return None;
                }
                parity ^= 1;
                frontier = next.difference(colored[parity]);
                colored[parity] = colored[parity].union(frontier);
            }
            side[0] = side[0].union(colored[0]);
            side[1] = side[1].union(colored[1]);
        }
        Some((side[0], side[1]))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// `G[S]`, relabeled `0..|S|` in ascending original order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let index: Vec<usize> = s.iter().collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (k, &v) in index.iter().enumerate() {
            pos[v] = k;
        }
        let adj = index
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| pos[w]).collect())
            .collect();
        Ok(Graph {
            n: index.len(),
            adj,
        })
    }

    /// `G / E'`: contract every edge of `edges` and simplify. Output vertices
    /// are the classes of `(V, edges)` ordered by smallest member.
    pub fn contract_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(i, j) in edges {
            if !self.has_edge(i, j) {
                return Err(Error::EdgeNotInGraph(i, j));
            }
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut root_label = vec![usize::MAX; self.n];
        let mut classes = 0;
        for (v, slot) in label.iter_mut().enumerate() {
            let r = find(&mut parent, v);
            if root_label[r] == usize::MAX {
                root_label[r] = classes;
                classes += 1;
            }
            *slot = root_label[r];
        }
        let mut adj = vec![VertexSet::EMPTY; classes];
        for (i, j) in self.edges() {
            let (a, b) = (label[i], label[j]);
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        Ok(Graph { n: classes, adj })
    }

    /// `G - e`, same vertex set.
    pub fn delete_edge(&self, i: usize, j: usize) -> Result<Graph> {
        if !self.has_edge(i, j) {
            return Err(Error::EdgeNotInGraph(i, j));
        }
        let mut adj = self.adj.clone();
        adj[i].remove(j);
        adj[j].remove(i);
        Ok(Graph { n: self.n, adj })
    }

    /// `G - v = G[V \ {v}]`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n < 2 {
            return Err(Error::SingleVertex);
        }
        self.induced(self.vertices().difference(VertexSet::singleton(v)))
    }

    /// `G - N[v] = G[V \ N[v]]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let rest = self.vertices().difference(self.closed_neighborhood(v));
        if rest.is_empty() {
            return Err(Error::NeighborhoodCoversGraph(v));
        }
        self.induced(rest)
    }

    /// `G / v`: remove `v` and make `N(v)` a clique.
    pub fn contract_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n < 2 {
            return Err(Error::SingleVertex);
        }
        let nb = self.adj[v];
        let mut adj = self.adj.clone();
        for u in nb {
            adj[u] = adj[u].union(nb).difference(VertexSet::singleton(u));
        }
        Graph { n: self.n, adj }.delete_vertex(v)
    }

    /// Adds vertex `n` adjacent to every existing vertex.
    pub fn suspension(&self) -> Result<Graph> {
        let m = self.n + 1;
        if m > MAX_VERTICES {
            return Err(Error::TooLarge(m, MAX_VERTICES));
        }
        let mut adj = self.adj.clone();
        for row in adj.iter_mut() {
            row.insert(self.n);
        }
        adj.push(self.vertices());
        Ok(Graph { n: m, adj })
    }

    /// Disjoint union; `other` is relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let m = self.n + other.n;
        if m > MAX_VERTICES {
            return Err(Error::TooLarge(m, MAX_VERTICES));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| VertexSet(r.bits() << shift)));
        Ok(Graph { n: m, adj })
    }

    /// `G1 + G2`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertices();
        let right = g.vertices().difference(left);
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = row.union(if v < self.n { right } else { left });
        }
        Ok(g)
    }

    /// Glues `v1` of `self` to `v2` of `other`. `self` keeps its labels, the
    /// remaining vertices of `other` follow in ascending order.
    pub fn one_sum(&self, v1: usize, other: &Graph, v2: usize) -> Result<Graph> {
        self.check_vertex(v1)?;
        other.check_vertex(v2)?;
        let m = self.n + other.n - 1;
        if m > MAX_VERTICES {
            return Err(Error::TooLarge(m, MAX_VERTICES));
        }
        let map = |u: usize| match u.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => self.n + u,
            std::cmp::Ordering::Greater => self.n + u - 1,
        };
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (map(a), map(b))));
        Graph::from_edges(m, &edges)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|i| {
                all.difference(self.adj[i])
                    .difference(VertexSet::singleton(i))
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph { n: self.n, adj }
    }

    /// True iff every vertex lies in `s` or has a neighbor in `s`.
    pub fn is_dominating_set(&self, s: VertexSet) -> bool {
        let mut covered = s;
        for v in s {
            covered = covered.union(self.adj[v]);
        }
        self.vertices().is_subset(covered)
    }

    /// Vertices adjacent to every other vertex.
    pub fn apexes(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    /// Vertex sets of the blocks (maximal 2-connected pieces, bridges and
    /// isolated vertices), sorted.
    pub fn blocks(&self) -> Vec<VertexSet> {
        struct Dfs<'a> {
            g: &'a Graph,
            time: usize,
            disc: Vec<usize>,
            low: Vec<usize>,
            stack: Vec<Edge>,
            out: Vec<VertexSet>,
        }
        impl Dfs<'_> {
            fn visit(&mut self, u: usize, parent: Option<usize>) {
                self.time += 1;
                self.disc[u] = self.time;
                self.low[u] = self.time;
                for w in self.g.adj[u] {
                    if self.disc[w] == 0 {
                        self.stack.push((u, w));
                        self.visit(w, Some(u));
                        self.low[u] = self.low[u].min(self.low[w]);
                        if self.low[w] >= self.disc[u] {
                            let mut block = VertexSet::EMPTY;
                            while let Some((a, b)) = self.stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (u, w) {
                                    break;
                                }
                            }
                            self.out.push(block);
                        }
                    } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                        self.stack.push((u, w));
                        self.low[u] = self.low[u].min(self.disc[w]);
                    }
                }
            }
        }
        let mut dfs = Dfs {
            g: self,
            time: 0,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..self.n {
            if dfs.disc[v] == 0 {
                if self.adj[v].is_empty() {
                    dfs.disc[v] = usize::MAX;
                    dfs.out.push(VertexSet::singleton(v));
                } else {
                    dfs.visit(v, None);
                }
            }
        }
        let mut out = dfs.out;
        out.sort();
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
