//! Exact vertex connectivity via unit-capacity max-flow on the split graph.
//!
//! Every vertex `v` becomes an arc `in(v) -> out(v)` of capacity one, every
//! edge contributes arcs in both directions, and the local connectivity of a
//! non-adjacent pair `(s, t)` equals the max-flow from `out(s)` to `in(t)`
//! (the largest family of internally vertex-disjoint paths). The global
//! value is the minimum over candidate pairs; callers that know graph
//! automorphisms may pass a reduced pair list covering every orbit of
//! non-adjacent pairs.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub enum PairCandidates {
    /// All non-adjacent vertex pairs (Whitney's characterization).
    AllNonAdjacent,
    /// A reduced list; must meet every automorphism orbit of non-adjacent
    /// pairs, otherwise the minimum may be missed.
    Explicit(Vec<(u32, u32)>),
}

#[derive(Clone, Debug)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// A minimum vertex cut; `None` when the graph is complete (no cut
    /// exists and kappa is reported as `n - 1` by convention).
    pub cut: Option<Vec<u32>>,
}

struct FlowNetwork {
    n: usize,
    // arc i: to[i], cap[i]; reverse arc is i ^ 1
    to: Vec<u32>,
    cap: Vec<u32>,
    heads: Vec<Vec<u32>>, // arc ids per node
    level: Vec<u32>,
    iter: Vec<usize>,
    internal_arcs: Vec<u32>, // arc id of in(v) -> out(v)
}

const UNSET: u32 = u32::MAX;

impl FlowNetwork {
    fn build(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut net = FlowNetwork {
            n,
            to: Vec::new(),
            cap: Vec::new(),
            heads: alloc::vec![Vec::new(); 2 * n],
            level: alloc::vec![UNSET; 2 * n],
            iter: alloc::vec![0; 2 * n],
            internal_arcs: Vec::with_capacity(n),
        };
        for v in 0..n {
            let a = net.add_arc(Self::node_in(v), Self::node_out(v), 1);
            net.internal_arcs.push(a);
        }
        // Edge arcs carry effectively unlimited capacity so that every
        // min cut consists of internal (vertex) arcs only.
        let big = n as u32;
        for u in 0..n {
            for v in g.neighbors(u).iter() {
                if v > u {
                    net.add_arc(Self::node_out(u), Self::node_in(v), big);
                    net.add_arc(Self::node_out(v), Self::node_in(u), big);
                }
            }
        }
        net
    }

    #[inline]
    fn node_in(v: usize) -> u32 {
        (2 * v) as u32
    }

    #[inline]
    fn node_out(v: usize) -> u32 {
        (2 * v + 1) as u32
    }

    fn add_arc(&mut self, from: u32, to: u32, cap: u32) -> u32 {
        let id = self.to.len() as u32;
        self.to.push(to);
        self.cap.push(cap);
        self.heads[from as usize].push(id);
        self.to.push(from);
        self.cap.push(0);
        self.heads[to as usize].push(id + 1);
        id
    }

    fn reset(&mut self) {
        for v in 0..self.n {
            let a = self.internal_arcs[v] as usize;
            self.cap[a] = 1;
            self.cap[a ^ 1] = 0;
        }
        let big = self.n as u32;
        for a in (2 * self.n..self.to.len()).step_by(2) {
            self.cap[a] = big;
            self.cap[a ^ 1] = 0;
        }
    }

    /// Max-flow between `out(s)` and `in(t)`, stopping once `cutoff` is
    /// reached (the exact value then no longer matters to the caller).
    fn local_connectivity(&mut self, s: usize, t: usize, cutoff: usize) -> usize {
        self.reset();
        // endpoints are not counted as cut vertices
        let sa = self.internal_arcs[s] as usize;
        let ta = self.internal_arcs[t] as usize;
        self.cap[sa] = self.n as u32;
        self.cap[ta] = self.n as u32;

        let source = Self::node_out(s);
        let sink = Self::node_in(t);
        let mut flow = 0usize;
        while flow < cutoff {
            if !self.bfs_levels(source, sink) {
                break;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs_augment(source, sink, u32::MAX);
                if pushed == 0 {
                    break;
                }
                flow += pushed as usize;
                if flow >= cutoff {
                    break;
                }
            }
        }
        flow
    }

    fn bfs_levels(&mut self, source: u32, sink: u32) -> bool {
        self.level.iter_mut().for_each(|l| *l = UNSET);
        self.level[source as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &a in &self.heads[u as usize] {
                let v = self.to[a as usize];
                if self.cap[a as usize] > 0 && self.level[v as usize] == UNSET {
                    self.level[v as usize] = self.level[u as usize] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[sink as usize] != UNSET
    }

    fn dfs_augment(&mut self, u: u32, sink: u32, limit: u32) -> u32 {
        if u == sink {
            return limit;
        }
        while self.iter[u as usize] < self.heads[u as usize].len() {
            let a = self.heads[u as usize][self.iter[u as usize]] as usize;
            let v = self.to[a];
            if self.cap[a] > 0 && self.level[v as usize] == self.level[u as usize] + 1 {
                let pushed = self.dfs_augment(v, sink, limit.min(self.cap[a]));
                if pushed > 0 {
                    self.cap[a] -= pushed;
                    self.cap[a ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[u as usize] += 1;
        }
        0
    }

    /// Vertices whose internal arc crosses the residual source cut.
    fn extract_cut(&self, s: usize) -> Vec<u32> {
        let mut reach = BitSet::new(2 * self.n);
        let source = Self::node_out(s);
        reach.insert(source as usize);
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &a in &self.heads[u as usize] {
                let v = self.to[a as usize];
                if self.cap[a as usize] > 0 && !reach.contains(v as usize) {
                    reach.insert(v as usize);
                    queue.push_back(v);
                }
            }
        }
        (0..self.n)
            .filter(|&v| {
                reach.contains(Self::node_in(v) as usize)
                    && !reach.contains(Self::node_out(v) as usize)
            })
            .map(|v| v as u32)
            .collect()
    }
}

/// Global vertex connectivity over the supplied candidate pairs.
pub fn vertex_connectivity(g: &Graph, pairs: &PairCandidates) -> ConnectivityResult {
    let n = g.vertex_count();
    if n == 0 {
        return {
            ConnectivityResult {
                kappa: 0,
                cut: None,
            }
        };
    }

    let candidate_list: Vec<(u32, u32)> = match pairs {
        PairCandidates::Explicit(list) => list.clone(),
        PairCandidates::AllNonAdjacent => {
            let mut list = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        list.push((u as u32, v as u32));
                    }
                }
            }
            list
        }
    };

    if candidate_list.is_empty() {
        // complete graph: no cut exists
        return ConnectivityResult {
            kappa: n - 1,
            cut: None,
        };
    }

    // Cheap pairs first: flows bounded by small degrees finish fastest and
    // lower the cutoff early.
    let mut ordered = candidate_list;
    ordered.sort_by_key(|&(u, v)| {
        (
            g.degree(u as usize).min(g.degree(v as usize)),
            g.degree(u as usize) + g.degree(v as usize),
            u,
            v,
        )
    });

    let mut net = FlowNetwork::build(g);
    let mut kappa = n - 1;
    let mut cut: Option<Vec<u32>> = None;
    for &(u, v) in &ordered {
        debug_assert!(!g.has_edge(u as usize, v as usize) && u != v);
        let flow = net.local_connectivity(u as usize, v as usize, kappa);
        if flow < kappa {
            kappa = flow;
            cut = Some(net.extract_cut(u as usize));
        }
        if kappa == 0 {
            break;
        }
    }
    if let Some(c) = &cut {
        debug_assert_eq!(c.len(), kappa);
        debug_assert!(is_vertex_cut(g, c));
    }
    ConnectivityResult { kappa, cut }
}

/// True if removing `cut` leaves at least two components.
pub fn is_vertex_cut(g: &Graph, cut: &[u32]) -> bool {
    let n = g.vertex_count();
    let mut removed = BitSet::new(n);
    for &v in cut {
        removed.insert(v as usize);
    }
    let start = match (0..n).find(|&v| !removed.contains(v)) {
        Some(v) => v,
        None => return false,
    };
    let mut seen = BitSet::new(n);
    seen.insert(start);
    let mut stack = alloc::vec![start];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v).iter() {
            if !removed.contains(w) && !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen.count() + cut.len() < n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[test]
    fn cycle_has_connectivity_two() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let r = vertex_connectivity(&c5, &PairCandidates::AllNonAdjacent);
        assert_eq!(r.kappa, 2);
        let cut = r.cut.unwrap();
        assert_eq!(cut.len(), 2);
        assert!(is_vertex_cut(&c5, &cut));
    }

    #[test]
    fn complete_graph_reports_n_minus_one() {
        let mut g = Graph::new(4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                g.add_edge(u, v);
            }
        }
        let r = vertex_connectivity(&g, &PairCandidates::AllNonAdjacent);
        assert_eq!(r.kappa, 3);
        assert!(r.cut.is_none());
    }

    #[test]
    fn cut_vertex_is_found() {
        // two triangles sharing vertex 2
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let r = vertex_connectivity(&g, &PairCandidates::AllNonAdjacent);
        assert_eq!(r.kappa, 1);
        assert_eq!(r.cut.unwrap(), alloc::vec![2]);
    }

    #[test]
    fn disconnected_graph_has_zero_connectivity() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let r = vertex_connectivity(&g, &PairCandidates::AllNonAdjacent);
        assert_eq!(r.kappa, 0);
        assert_eq!(r.cut.unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn complete_bipartite_k23() {
        let g = graph(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]);
        let r = vertex_connectivity(&g, &PairCandidates::AllNonAdjacent);
        assert_eq!(r.kappa, 2);
        assert!(is_vertex_cut(&g, &r.cut.unwrap()));
    }
}
