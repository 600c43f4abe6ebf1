//! Undirected simple graphs on up to 62 labeled vertices.
//!
//! Vertices are the labels `0..n-1` and adjacency is stored as one `u64`
//! neighbor bitset per vertex. The 62-vertex cap keeps every graph
//! representable by a single-size-byte graph6 line and every vertex subset
//! representable by one machine word. Graphs are immutable once built, so
//! they can be shared freely across worker threads.

use crate::error::Error;
use crate::Result;

/// Largest supported order; chosen so one graph6 size byte always suffices.
pub const MAX_VERTICES: usize = 62;

/// A subset of the vertex labels `0..n-1`, bit `i` standing for vertex `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_vertices(vs: &[usize]) -> Self {
        let mut mask = 0u64;
        for &v in vs {
            debug_assert!(v < 64);
            mask |= 1 << v;
        }
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    /// Iterates members in increasing label order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

/// Connected components of a graph after deleting a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Number of components, `c(G-S)`.
    pub count: usize,
    /// Vertex lists of the components, each sorted, ordered by smallest member.
    pub parts: Vec<Vec<usize>>,
}

/// An undirected simple graph on labels `0..n-1`.
///
/// Invariants: adjacency is symmetric, loop-free, and every bitset only uses
/// the low `n` bits. All constructors preserve these.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Size(format!(
            "order must be in 1..={MAX_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

impl Graph {
    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = Self::mask_for(n);
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are merged;
    /// self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Size(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Size(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    fn mask_for(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask with the low `n` bits set (the full vertex set).
    pub fn full_mask(&self) -> u64 {
        Self::mask_for(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        VertexSet::from_mask(self.adj[v]).iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree over all vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Nondecreasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Disjoint union; the second graph's labels are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::Size(format!(
                "union order {n} exceeds {MAX_VERTICES}"
            )));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|a| a << self.n));
        Ok(Graph { n, adj })
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = Self::mask_for(self.n);
        let right = g.full_mask() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Vertices reachable from `start` while staying inside `allowed`.
    /// `start` must be a member of `allowed`.
    fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let all = self.full_mask();
        self.reach(0, all) == all
    }

    /// Number of components of the subgraph induced by `allowed` (a bitmask
    /// of kept vertices). Returns 0 for the empty mask. This is the hot path
    /// of the toughness enumerator.
    #[inline]
    pub fn component_count_within(&self, allowed: u64) -> usize {
        let mut rest = allowed;
        let mut count = 0;
        while rest != 0 {
            count += 1;
            let start = rest.trailing_zeros() as usize;
            rest &= !self.reach(start, rest);
        }
        count
    }

    /// Components of `G - S`. Fails if `S` is not a proper subset of the
    /// vertex set (the remainder must be nonempty).
    pub fn components_after_deletion(&self, s: VertexSet) -> Result<Components> {
        let all = self.full_mask();
        if s.mask() & !all != 0 {
            return Err(Error::Size(format!(
                "vertex set {:#x} not within 0..{}",
                s.mask(),
                self.n
            )));
        }
        let keep = all & !s.mask();
        if keep == 0 {
            return Err(Error::Undefined(
                "deleting every vertex leaves no components".into(),
            ));
        }
        let mut rest = keep;
        let mut parts = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = self.reach(start, rest);
            rest &= !comp;
            parts.push(VertexSet::from_mask(comp).iter().collect());
        }
        Ok(Components {
            count: parts.len(),
            parts,
        })
    }

    /// Copy with one edge removed. No-op if the edge is absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        g
    }

    /// Copy with one edge added (`u != v`).
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v && u < self.n && v < self.n);
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }
}

/// K_n constructor matching the operation-level name.
pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

/// `k` disjoint copies of K_m.
pub fn copies_of_complete(k: usize, m: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Size("need at least one copy".into()));
    }
    let mut g = Graph::complete(m)?;
    for _ in 1..k {
        g = g.disjoint_union(&Graph::complete(m)?)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        // K_1 join empty graph on `leaves` vertices
        Graph::complete(1)
            .unwrap()
            .join(&Graph::empty(leaves).unwrap())
            .unwrap()
    }

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(3).unwrap().edge_count(), 3);
        assert_eq!(complete_graph(7).unwrap().edge_count(), 21);
    }

    #[test]
    fn complete_graph_rejects_bad_order() {
        assert!(matches!(complete_graph(0), Err(Error::Size(_))));
        assert!(matches!(complete_graph(63), Err(Error::Size(_))));
    }

    #[test]
    fn disjoint_union_counts() {
        let k1 = complete_graph(1).unwrap();
        let u = k1.disjoint_union(&k1).unwrap();
        assert_eq!((u.n(), u.edge_count()), (2, 0));

        let k3 = complete_graph(3).unwrap();
        let k2 = complete_graph(2).unwrap();
        let u = k3.disjoint_union(&k2).unwrap();
        assert_eq!((u.n(), u.edge_count()), (5, 4));

        // (delta+1) K_1 for delta = 2
        let iso3 = copies_of_complete(3, 1).unwrap();
        assert_eq!((iso3.n(), iso3.edge_count()), (3, 0));
    }

    #[test]
    fn union_overflow_is_size_error() {
        let g = Graph::empty(40).unwrap();
        assert!(matches!(g.disjoint_union(&g), Err(Error::Size(_))));
    }

    #[test]
    fn join_edge_counts() {
        let k1 = complete_graph(1).unwrap();
        let j = k1.join(&k1).unwrap();
        assert_eq!((j.n(), j.edge_count()), (2, 1));

        // K_2 v (K_7 u 3K_1): 1 + 21 + 0 + 2*10 = 42 edges
        let k2 = complete_graph(2).unwrap();
        let inner = complete_graph(7)
            .unwrap()
            .disjoint_union(&copies_of_complete(3, 1).unwrap())
            .unwrap();
        let j = k2.join(&inner).unwrap();
        assert_eq!((j.n(), j.edge_count()), (12, 42));

        // K_1 v 3K_1 = K_{1,3}
        let s = star(3);
        assert_eq!((s.n(), s.edge_count()), (4, 3));
    }

    #[test]
    fn components_after_deletion_examples() {
        let s = star(3); // center is vertex 0
        let comps = s
            .components_after_deletion(VertexSet::from_vertices(&[0]))
            .unwrap();
        assert_eq!(comps.count, 3);

        let k5 = complete_graph(5).unwrap();
        let comps = k5.components_after_deletion(VertexSet::EMPTY).unwrap();
        assert_eq!(comps.count, 1);

        // G* = K_2 v (K_7 u 3K_1); deleting the join core leaves 4 components
        let k2 = complete_graph(2).unwrap();
        let inner = complete_graph(7)
            .unwrap()
            .disjoint_union(&copies_of_complete(3, 1).unwrap())
            .unwrap();
        let g = k2.join(&inner).unwrap();
        let core = VertexSet::from_vertices(&[0, 1]);
        assert_eq!(g.components_after_deletion(core).unwrap().count, 4);
    }

    #[test]
    fn deleting_everything_is_an_error() {
        let g = complete_graph(3).unwrap();
        let all = VertexSet::from_mask(g.full_mask());
        assert!(matches!(
            g.components_after_deletion(all),
            Err(Error::Undefined(_))
        ));
    }

    #[test]
    fn connectivity_basics() {
        assert!(complete_graph(1).unwrap().is_connected());
        let two = complete_graph(1)
            .unwrap()
            .disjoint_union(&complete_graph(1).unwrap())
            .unwrap();
        assert!(!two.is_connected());
        // any join of nonempty graphs is connected
        let j = Graph::empty(4).unwrap().join(&Graph::empty(5).unwrap()).unwrap();
        assert!(j.is_connected());
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(complete_graph(5).unwrap().min_degree(), 4);
        assert_eq!(star(3).min_degree(), 1);
        let k2 = complete_graph(2).unwrap();
        let inner = complete_graph(7)
            .unwrap()
            .disjoint_union(&copies_of_complete(3, 1).unwrap())
            .unwrap();
        assert_eq!(k2.join(&inner).unwrap().min_degree(), 2);
    }

    #[test]
    fn components_agree_with_connectivity() {
        for g in [
            complete_graph(5).unwrap(),
            star(4),
            copies_of_complete(2, 3).unwrap(),
        ] {
            let c = g.components_after_deletion(VertexSet::EMPTY).unwrap();
            assert_eq!(c.count == 1, g.is_connected());
        }
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]);
        assert_eq!(h.edge_count(), 3);
        assert!(h.has_edge(3, 2) && h.has_edge(2, 1) && h.has_edge(1, 0));
    }
}
