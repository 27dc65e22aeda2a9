//! Exact maximum clique and independent set via branch and bound.
//!
//! The search is the usual pivot-free scheme over bitset candidate sets
//! with a greedy-coloring upper bound; candidates are expanded in reverse
//! color order. Ties break towards the lowest vertex index everywhere, so
//! returned witnesses are deterministic.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::graph::Graph;
use crate::search::{SearchBudget, SolveStats};

#[derive(Clone, Copy, Debug)]
pub struct CliqueOptions {
    pub budget: u64,
    /// Stop as soon as a clique of this size is found (the result is then
    /// a lower-bound witness, not the exact maximum).
    pub stop_at: Option<usize>,
}

impl CliqueOptions {
    pub fn exact(budget: u64) -> Self {
        CliqueOptions {
            budget,
            stop_at: None,
        }
    }
}

/// Maximum clique; the witness is exact unless the stats say otherwise.
pub fn max_clique(g: &Graph, opts: CliqueOptions) -> (Vec<u32>, SolveStats) {
    let n = g.vertex_count();
    let mut best = greedy_clique(g);
    let mut budget = SearchBudget::new(opts.budget);
    let mut stopped = target_reached(&best, opts.stop_at);

    if n > 0 && !stopped {
        let mut candidates = BitSet::full(n);
        let mut current: Vec<u32> = Vec::new();
        expand(
            g,
            &mut current,
            &mut candidates,
            &mut best,
            &mut budget,
            opts.stop_at,
            &mut stopped,
        );
    }

    let stats = SolveStats {
        nodes: budget.used(),
        budget_exceeded: budget.exhausted(),
        stopped_at_target: stopped,
    };
    (best, stats)
}

fn target_reached(best: &[u32], stop_at: Option<usize>) -> bool {
    stop_at.is_some_and(|t| best.len() >= t)
}

fn expand(
    g: &Graph,
    current: &mut Vec<u32>,
    candidates: &mut BitSet,
    best: &mut Vec<u32>,
    budget: &mut SearchBudget,
    stop_at: Option<usize>,
    stopped: &mut bool,
) {
    if !budget.tick() || *stopped {
        return;
    }
    let (order, color_bound) = color_sort(g, candidates);
    for i in (0..order.len()).rev() {
        let v = order[i];
        if current.len() + color_bound[i] <= best.len() {
            return;
        }
        current.push(v);
        let mut next = candidates.clone();
        next.intersect_with(g.neighbors(v as usize));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
                if target_reached(best, stop_at) {
                    *stopped = true;
                }
            }
        } else {
            expand(g, current, &mut next, best, budget, stop_at, stopped);
        }
        current.pop();
        candidates.remove(v as usize);
        if budget.exhausted() || *stopped {
            return;
        }
    }
}

/// Greedy coloring of the candidate set in index order. Returns the
/// candidates sorted by color class together with the running bound
/// (vertex i can extend a clique by at most `bound[i]`).
fn color_sort(g: &Graph, candidates: &BitSet) -> (Vec<u32>, Vec<usize>) {
    let mut classes: Vec<Vec<u32>> = Vec::new();
    let mut class_sets: Vec<BitSet> = Vec::new();
    for v in candidates.iter() {
        let mut placed = false;
        for (k, set) in class_sets.iter_mut().enumerate() {
            if !set.intersects(g.neighbors(v)) {
                set.insert(v);
                classes[k].push(v as u32);
                placed = true;
                break;
            }
        }
        if !placed {
            let mut set = BitSet::new(candidates.len());
            set.insert(v);
            class_sets.push(set);
            classes.push(alloc::vec![v as u32]);
        }
    }
    let mut order = Vec::with_capacity(candidates.count());
    let mut bound = Vec::with_capacity(candidates.count());
    for (k, class) in classes.iter().enumerate() {
        for &v in class {
            order.push(v);
            bound.push(k + 1);
        }
    }
    (order, bound)
}

/// Best clique found by greedy extension from every start vertex.
pub fn greedy_clique(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut best: Vec<u32> = Vec::new();
    for start in 0..n {
        if g.degree(start) + 1 <= best.len() {
            continue;
        }
        let mut clique = alloc::vec![start as u32];
        let mut candidates = g.neighbors(start).clone();
        loop {
            // highest candidate degree inside the candidate set, lowest index on ties
            let mut pick: Option<(usize, usize)> = None;
            for v in candidates.iter() {
                let score = candidates.intersection_count(g.neighbors(v));
                if pick.is_none() || score > pick.unwrap().1 {
                    pick = Some((v, score));
                }
            }
            match pick {
                None => break,
                Some((v, _)) => {
                    clique.push(v as u32);
                    candidates.intersect_with(g.neighbors(v));
                }
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

pub fn is_clique(g: &Graph, set: &[u32]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if u == v || !g.has_edge(u as usize, v as usize) {
                return false;
            }
        }
    }
    true
}

/// Maximum independent set, solved as a clique of the complement.
pub fn max_independent_set(g: &Graph, opts: CliqueOptions) -> (Vec<u32>, SolveStats) {
    max_clique(&g.complement(), opts)
}

pub fn is_independent_set(g: &Graph, set: &[u32]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if u == v || g.has_edge(u as usize, v as usize) {
                return false;
            }
        }
    }
    true
}

/// Extends an independent set to a maximal one (lowest indices first).
pub fn extend_to_maximal_independent(g: &Graph, set: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = set.to_vec();
    let mut blocked = BitSet::new(g.vertex_count());
    for &v in set {
        blocked.insert(v as usize);
        blocked.union_with(g.neighbors(v as usize));
    }
    for v in 0..g.vertex_count() {
        if !blocked.contains(v) {
            out.push(v as u32);
            blocked.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    out.sort_unstable();
    out
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
    fn clique_in_small_graphs() {
        // K4 plus a pendant vertex
        let g = graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
        let (w, stats) = max_clique(&g, CliqueOptions::exact(1_000));
        assert_eq!(w.len(), 4);
        assert!(is_clique(&g, &w));
        assert!(stats.exact());

        let empty = Graph::new(4);
        let (w, _) = max_clique(&empty, CliqueOptions::exact(1_000));
        assert_eq!(w.len(), 1);

        let (w, _) = max_clique(&Graph::new(0), CliqueOptions::exact(1_000));
        assert!(w.is_empty());
    }

    #[test]
    fn independent_set_of_cycle5 () {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let (w, stats) = max_independent_set(&c5, CliqueOptions::exact(1_000));
        assert_eq!(w.len(), 2);
        assert!(stats.exact());
        assert!(is_independent_set(&c5, &w));
    }

    #[test]
    fn stop_at_short_circuits() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let opts = CliqueOptions {
            budget: 1_000,
            stop_at: Some(3),
        };
        let (w, stats) = max_clique(&g, opts);
        assert!(w.len() >= 3);
        assert!(stats.stopped_at_target);
        assert!(!stats.exact());
    }

    #[test]
    fn maximal_extension() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let ext = extend_to_maximal_independent(&c5, &[2]);
        assert!(is_independent_set(&c5, &ext));
        assert_eq!(ext, alloc::vec![0, 2]);
    }
}
