//! Simple graphs, 1-skeleta and exact vertex connectivity.

use std::collections::VecDeque;

use crate::complex::{Face, SimplicialComplex};

/// A simple undirected graph on vertices `0..n`, stored as adjacency masks,
/// with an external label per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<u32>,
    adj: Vec<Face>,
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled `1..=n`.
    pub fn new(n: usize) -> Self {
        Self::with_labels((1..=n as u32).collect())
    }

    pub fn with_labels(labels: Vec<u32>) -> Self {
        assert!(labels.len() <= crate::HARD_VERTEX_CAP, "too many vertices");
        let n = labels.len();
        Graph {
            labels,
            adj: vec![Face::EMPTY; n],
        }
    }

    /// Graph on `0..n` from internal index pairs.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// # Panics
    /// Panics on loops and out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.adj.len() && v < self.adj.len(), "vertex out of range");
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn neighbors(&self, v: usize) -> Face {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.adj.len())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().all(|a| a.len() == n - 1)
    }

    /// True iff every pair of vertices in `w` is adjacent.
    pub fn is_clique(&self, w: Face) -> bool {
        w.iter().all(|v| w.without(v).is_subset(self.adj[v]))
    }

    /// Whether the subgraph induced on `w` is connected. The empty set counts
    /// as connected.
    pub fn is_connected_within(&self, w: Face) -> bool {
        let Some(start) = w.first() else {
            return true;
        };
        let mut seen = Face::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = Face::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(w).difference(seen);
            seen = seen.union(frontier);
        }
        seen == w
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(Face::full(self.num_vertices()))
    }

    /// Vertex connectivity. `K_n` gives `n - 1` and a disconnected graph 0;
    /// otherwise the minimum over non-adjacent pairs of the number of
    /// internally disjoint paths between them.
    pub fn vertex_connectivity(&self) -> usize {
        self.minimum_separator().map_or(self.num_vertices().saturating_sub(1), |s| s.len())
    }

    /// A smallest vertex set whose removal disconnects the graph, or `None`
    /// for complete graphs, which cannot be disconnected. The first
    /// non-adjacent pair achieving the minimum is used, so the answer is
    /// deterministic.
    pub fn minimum_separator(&self) -> Option<Face> {
        let n = self.num_vertices();
        let mut best: Option<Face> = None;
        for s in 0..n {
            for t in s + 1..n {
                if self.has_edge(s, t) {
                    continue;
                }
                let bound = best.map_or(n, |b| b.len());
                let (flow, cut) = self.disjoint_paths(s, t, bound);
                if flow < bound {
                    best = cut;
                    if flow == 0 {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// True iff the graph has at least `k` vertices and connectivity `>= k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        self.num_vertices() >= k && self.vertex_connectivity() >= k
    }

    /// Maximum number of internally vertex-disjoint `s`-`t` paths for a
    /// non-adjacent pair, by unit-capacity max-flow on the split digraph.
    /// Stops early once `limit` paths are found. When the flow stays below
    /// `limit` the matching minimum separator is returned too.
    fn disjoint_paths(&self, s: usize, t: usize, limit: usize) -> (usize, Option<Face>) {
        let n = self.num_vertices();
        // node 2v is v_in, 2v+1 is v_out; v_in -> v_out has capacity 1
        // except at s and t, and each edge uv becomes u_out -> v_in.
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            let cap = if v == s || v == t { n } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, cap);
        }
        for (u, v) in self.edges() {
            net.add_arc(2 * u + 1, 2 * v, n);
            net.add_arc(2 * v + 1, 2 * u, n);
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit && net.augment(source, sink) {
            flow += 1;
        }
        if flow >= limit {
            return (flow, None);
        }
        let reach = net.reachable(source);
        let cut = Face::from_indices((0..n).filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1]));
        debug_assert_eq!(cut.len(), flow);
        (flow, Some(cut))
    }
}

struct Arc {
    to: usize,
    cap: usize,
}

/// Residual network for Edmonds-Karp; arcs come in forward/backward pairs.
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: usize) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Pushes one unit along a shortest augmenting path.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via: Vec<Option<usize>> = vec![None; self.out.len()];
        let mut queue = VecDeque::from([source]);
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &a in &self.out[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    via[to] = Some(a);
                    queue.push_back(to);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut v = sink;
        while let Some(a) = via[v] {
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            v = self.arcs[a ^ 1].to;
        }
        true
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

impl SimplicialComplex {
    /// The 1-skeleton: vertices and edges of the complex, keeping labels.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::with_labels(self.labels().to_vec());
        for f in self.facets() {
            for u in f.iter() {
                g.adj[u] = g.adj[u].union(f.without(u));
            }
        }
        g
    }

    /// The clique complex of `g`: every clique is a face. Facets are the
    /// maximal cliques, found by Bron-Kerbosch with pivoting.
    ///
    /// # Panics
    /// Panics on the empty graph.
    pub fn clique_complex(g: &Graph) -> SimplicialComplex {
        assert!(g.num_vertices() > 0, "clique complex of the empty graph");
        let mut cliques = Vec::new();
        bron_kerbosch(g, Face::EMPTY, Face::full(g.num_vertices()), Face::EMPTY, &mut cliques);
        SimplicialComplex::from_parts(g.labels.clone(), cliques)
    }
}

fn bron_kerbosch(g: &Graph, r: Face, mut p: Face, mut x: Face, out: &mut Vec<Face>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.adj[u].intersection(p).len())
        .expect("p is nonempty");
    for v in p.difference(g.adj[pivot]).iter() {
        bron_kerbosch(g, r.with(v), p.intersection(g.adj[v]), x.intersection(g.adj[v]), out);
        p = p.without(v);
        x = x.with(v);
    }
}
