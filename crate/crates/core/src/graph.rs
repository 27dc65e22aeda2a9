//! Simple graphs over bitset adjacency rows, and the non-solvable graph.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::group::ElemId;
use crate::solvability::SolvabilizerTable;

/// Undirected simple graph on `0..n` with bitset rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: alloc::vec![BitSet::new(n); n],
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Sorted list of distinct vertex degrees.
    pub fn degree_set(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for (v, row) in self.adj.iter().enumerate() {
            let mut r = row.clone();
            r.invert();
            r.remove(v);
            adj.push(r);
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph on the given vertices; `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// BFS levels from `start`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.n];
        let mut frontier = BitSet::new(self.n);
        let mut seen = BitSet::new(self.n);
        frontier.insert(start);
        seen.insert(start);
        let mut level = 0usize;
        while !frontier.is_empty() {
            let mut next = BitSet::new(self.n);
            for v in frontier.iter() {
                dist[v] = level;
                next.union_with(&self.adj[v]);
            }
            next.subtract(&seen);
            seen.union_with(&next);
            frontier = next;
            level += 1;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Largest pairwise distance; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0usize;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                if d == usize::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = alloc::vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut stack = alloc::vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if color[w] == 2 {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff non-adjacency is an equivalence relation whose classes are
    /// pairwise completely joined. Classes are recovered as groups of equal
    /// neighborhoods; each class's common neighborhood must then be exactly
    /// the rest of the graph.
    pub fn is_complete_multipartite(&self) -> bool {
        let mut class_of = alloc::vec![usize::MAX; self.n];
        let mut classes: Vec<usize> = Vec::new(); // representative vertex
        for v in 0..self.n {
            let mut found = false;
            for (c, &rep) in classes.iter().enumerate() {
                if self.adj[v] == self.adj[rep] {
                    class_of[v] = c;
                    found = true;
                    break;
                }
            }
            if !found {
                class_of[v] = classes.len();
                classes.push(v);
            }
        }
        for (c, &rep) in classes.iter().enumerate() {
            let mut expected = BitSet::full(self.n);
            for v in 0..self.n {
                if class_of[v] == c {
                    expected.remove(v);
                }
            }
            if self.adj[rep] != expected {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphBuildError {
    /// The group is solvable, so the vertex set would be empty.
    SolvableGroup,
    /// Same-block vertices must be non-adjacent with equal neighborhoods.
    BlockStructure(String),
}

impl fmt::Display for GraphBuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphBuildError::SolvableGroup => {
                write!(f, "group is solvable; the non-solvable graph is empty")
            }
            GraphBuildError::BlockStructure(s) => write!(f, "invalid block structure: {s}"),
        }
    }
}

impl core::error::Error for GraphBuildError {}

/// The non-solvable graph of a group, with its coset-block structure.
///
/// Vertices are the elements outside the solvable radical in ascending id
/// order; vertices in one block form a radical coset and are pairwise
/// non-adjacent with identical neighborhoods. Synthetic graphs (blow-ups,
/// controls) carry no element labels.
#[derive(Clone, Debug)]
pub struct NsGraph {
    pub name: String,
    graph: Graph,
    elements: Option<Vec<ElemId>>,
    sol_size: usize,
    blocks: Vec<Vec<u32>>,
    block_of: Vec<u32>,
}

impl NsGraph {
    /// Builds the graph from a solvabilizer table.
    pub fn build(st: &SolvabilizerTable<'_>) -> Result<NsGraph, GraphBuildError> {
        if st.is_group_solvable() {
            return Err(GraphBuildError::SolvableGroup);
        }
        let elems = st.vertex_elements();
        let n = elems.len();
        let mut graph = Graph::new(n);
        for (i, &x) in elems.iter().enumerate() {
            let row = st.solvabilizer(x);
            for (j, &y) in elems.iter().enumerate().skip(i + 1) {
                if !row.contains(y as usize) {
                    graph.add_edge(i, j);
                }
            }
        }

        let parts = st.cosets();
        let mut block_index: Vec<u32> = alloc::vec![u32::MAX; parts.coset_count()];
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        let mut block_of = alloc::vec![0u32; n];
        for (i, &x) in elems.iter().enumerate() {
            let c = parts.coset_of[x as usize] as usize;
            if block_index[c] == u32::MAX {
                block_index[c] = blocks.len() as u32;
                blocks.push(Vec::new());
            }
            let b = block_index[c];
            blocks[b as usize].push(i as u32);
            block_of[i] = b;
        }

        let g = NsGraph {
            name: st.group().name().into(),
            graph,
            elements: Some(elems),
            sol_size: st.radical_size(),
            blocks,
            block_of,
        };
        g.check_blocks()?;
        Ok(g)
    }

    /// Wraps a plain graph (controls, synthetic inputs): trivial blocks,
    /// no element labels.
    pub fn from_graph(name: impl Into<String>, graph: Graph) -> NsGraph {
        let n = graph.vertex_count();
        NsGraph {
            name: name.into(),
            graph,
            elements: None,
            sol_size: 1,
            blocks: (0..n as u32).map(|i| alloc::vec![i]).collect(),
            block_of: (0..n as u32).collect(),
        }
    }

    fn check_blocks(&self) -> Result<(), GraphBuildError> {
        for block in &self.blocks {
            let first = block[0] as usize;
            for &v in &block[1..] {
                let v = v as usize;
                if self.graph.has_edge(first, v) {
                    return Err(GraphBuildError::BlockStructure(format!(
                        "vertices {first} and {v} share a block but are adjacent"
                    )));
                }
                if self.graph.adj[first] != self.graph.adj[v] {
                    return Err(GraphBuildError::BlockStructure(format!(
                        "vertices {first} and {v} share a block but differ in neighborhoods"
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn sol_size(&self) -> usize {
        self.sol_size
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_of(&self, v: u32) -> u32 {
        self.block_of[v as usize]
    }

    /// Element ids behind the vertices, if this graph came from a group.
    pub fn elements(&self) -> Option<&[ElemId]> {
        self.elements.as_deref()
    }

    /// Vertex index of a group element, if labeled.
    pub fn vertex_of(&self, elem: ElemId) -> Option<u32> {
        let elems = self.elements.as_ref()?;
        elems.binary_search(&elem).ok().map(|i| i as u32)
    }

    /// One vertex per block; blocks adjacent iff their members are.
    ///
    /// Vertex `b` keeps the element label of the block's first vertex.
    pub fn quotient(&self) -> NsGraph {
        let k = self.blocks.len();
        let mut graph = Graph::new(k);
        for a in 0..k {
            let va = self.blocks[a][0] as usize;
            for b in (a + 1)..k {
                let vb = self.blocks[b][0] as usize;
                if self.graph.has_edge(va, vb) {
                    graph.add_edge(a, b);
                }
            }
        }
        let elements = self
            .elements
            .as_ref()
            .map(|e| self.blocks.iter().map(|b| e[b[0] as usize]).collect());
        NsGraph {
            name: format!("{}/blocks", self.name),
            graph,
            elements,
            sol_size: 1,
            blocks: (0..k as u32).map(|i| alloc::vec![i]).collect(),
            block_of: (0..k as u32).collect(),
        }
    }

    /// Replaces every vertex by `m` independent copies; copies are adjacent
    /// iff the originals were.
    pub fn blowup(&self, m: usize) -> NsGraph {
        assert!(m >= 1, "blow-up factor must be positive");
        let n = self.vertex_count();
        let mut graph = Graph::new(n * m);
        for u in 0..n {
            for v in self.graph.adj[u].iter() {
                if v <= u {
                    continue;
                }
                for a in 0..m {
                    for b in 0..m {
                        graph.add_edge(u * m + a, v * m + b);
                    }
                }
            }
        }
        let blocks: Vec<Vec<u32>> = (0..n)
            .map(|u| (0..m).map(|a| (u * m + a) as u32).collect())
            .collect();
        let mut block_of = alloc::vec![0u32; n * m];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                block_of[v as usize] = b as u32;
            }
        }
        NsGraph {
            name: format!("{}*{}", self.name, m),
            graph,
            elements: None,
            sol_size: self.sol_size * m,
            blocks,
            block_of,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        let mut g = Graph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g
    }

    #[test]
    fn basic_graph_ops() {
        let g = triangle();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree_set(), alloc::vec![2]);
        assert_eq!(g.diameter(), Some(1));
        assert!(g.is_connected());
        assert!(!g.is_bipartite());
        let c = g.complement();
        assert_eq!(c.edge_count(), 0);
        assert!(!c.is_connected());
        assert_eq!(c.diameter(), None);
    }

    #[test]
    fn bipartite_detection() {
        let mut g = Graph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        assert!(g.is_bipartite());
        g.add_edge(0, 2);
        assert!(!g.is_bipartite());
    }

    #[test]
    fn complete_multipartite_checker() {
        // Octahedron = blow-up of a triangle by 2.
        let t = NsGraph::from_graph("triangle", triangle());
        let oct = t.blowup(2);
        assert_eq!(oct.vertex_count(), 6);
        assert_eq!(oct.edge_count(), 12);
        assert!(oct.graph().is_complete_multipartite());

        // A path on three vertices is the star K_{1,2}.
        let mut p3 = Graph::new(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        assert!(p3.is_complete_multipartite());

        // A path on four vertices is not complete multipartite.
        let mut p4 = Graph::new(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        assert!(!p4.is_complete_multipartite());

        assert!(triangle().is_complete_multipartite());
        assert!(Graph::new(3).is_complete_multipartite());
    }

    #[test]
    fn blowup_by_one_is_identity_on_edges() {
        let t = NsGraph::from_graph("triangle", triangle());
        let same = t.blowup(1);
        assert_eq!(same.vertex_count(), 3);
        assert_eq!(same.edge_count(), 3);
    }

    #[test]
    fn quotient_of_blowup_restores_the_graph() {
        let t = NsGraph::from_graph("triangle", triangle());
        let b = t.blowup(3);
        let q = b.quotient();
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph() {
        let g = triangle();
        let h = g.induced(&[0, 2]);
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
    }
}
