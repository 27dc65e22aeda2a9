//! Exact minimum dominating set via iterative deepening.
//!
//! For each target size the search branches on an uncovered vertex with the
//! fewest possible dominators, pruning with the usual coverage bound
//! `ceil(uncovered / max closed degree)`.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::graph::Graph;
use crate::search::{SearchBudget, SolveStats};

pub fn is_dominating(g: &Graph, set: &[u32]) -> bool {
    let n = g.vertex_count();
    let mut covered = BitSet::new(n);
    for &v in set {
        covered.insert(v as usize);
        covered.union_with(g.neighbors(v as usize));
    }
    covered.count() == n
}

/// Minimum dominating set. Exact when the stats report no budget overrun;
/// otherwise the witness is the best (greedy) set found.
pub fn min_dominating_set(g: &Graph, budget_limit: u64) -> (Vec<u32>, SolveStats) {
    let n = g.vertex_count();
    let mut budget = SearchBudget::new(budget_limit);
    if n == 0 {
        return (
            Vec::new(),
            SolveStats {
                nodes: 0,
                budget_exceeded: false,
                stopped_at_target: false,
            },
        );
    }

    let closed: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut row = g.neighbors(v).clone();
            row.insert(v);
            row
        })
        .collect();
    let max_cover = closed.iter().map(|c| c.count()).max().unwrap_or(1);
    let greedy = greedy_dominating_set(g, &closed);
    let lower = n.div_ceil(max_cover);

    let mut best = greedy;
    for k in lower..best.len() {
        let mut chosen: Vec<u32> = Vec::new();
        let uncovered = BitSet::full(n);
        match search(g, &closed, max_cover, k, &mut chosen, &uncovered, &mut budget) {
            Some(found) => {
                best = found;
                break;
            }
            None => {
                if budget.exhausted() {
                    break;
                }
            }
        }
    }

    let stats = SolveStats {
        nodes: budget.used(),
        budget_exceeded: budget.exhausted(),
        stopped_at_target: false,
    };
    debug_assert!(is_dominating(g, &best));
    (best, stats)
}

fn greedy_dominating_set(g: &Graph, closed: &[BitSet]) -> Vec<u32> {
    let n = g.vertex_count();
    let mut covered = BitSet::new(n);
    let mut set = Vec::new();
    while covered.count() < n {
        let mut pick = 0usize;
        let mut pick_gain = 0usize;
        for v in 0..n {
            let mut gain = closed[v].clone();
            gain.subtract(&covered);
            let gain = gain.count();
            if gain > pick_gain {
                pick_gain = gain;
                pick = v;
            }
        }
        set.push(pick as u32);
        covered.union_with(&closed[pick]);
    }
    set.sort_unstable();
    set
}

fn search(
    g: &Graph,
    closed: &[BitSet],
    max_cover: usize,
    k: usize,
    chosen: &mut Vec<u32>,
    uncovered: &BitSet,
    budget: &mut SearchBudget,
) -> Option<Vec<u32>> {
    if !budget.tick() {
        return None;
    }
    let left = uncovered.count();
    if left == 0 {
        let mut out = chosen.clone();
        out.sort_unstable();
        return Some(out);
    }
    let remaining = k - chosen.len();
    if remaining == 0 || left.div_ceil(max_cover) > remaining {
        return None;
    }

    // Branch on the uncovered vertex with the fewest dominators.
    let mut branch = usize::MAX;
    let mut branch_ways = usize::MAX;
    for u in uncovered.iter() {
        let ways = closed[u].count();
        if ways < branch_ways {
            branch_ways = ways;
            branch = u;
        }
    }

    if remaining == 1 {
        // A single vertex must cover everything that is left.
        for w in closed[branch].iter() {
            if uncovered.is_subset_of(&closed[w]) {
                let mut out = chosen.clone();
                out.push(w as u32);
                out.sort_unstable();
                return Some(out);
            }
        }
        return None;
    }

    // Prefer candidates that cover more, lowest index on ties.
    let mut candidates: Vec<(usize, usize)> = closed[branch]
        .iter()
        .map(|w| (w, closed[w].intersection_count(uncovered)))
        .collect();
    candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));

    for (w, _) in candidates {
        chosen.push(w as u32);
        let mut next = uncovered.clone();
        next.subtract(&closed[w]);
        if let Some(found) = search(g, closed, max_cover, k, chosen, &next, budget) {
            return Some(found);
        }
        chosen.pop();
        if budget.exhausted() {
            return None;
        }
    }
    None
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
    fn star_is_dominated_by_center() {
        let g = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let (w, stats) = min_dominating_set(&g, 10_000);
        assert_eq!(w, alloc::vec![0]);
        assert!(stats.exact());
    }

    #[test]
    fn path_of_six_needs_two() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let (w, stats) = min_dominating_set(&g, 10_000);
        assert_eq!(w.len(), 2);
        assert!(is_dominating(&g, &w));
        assert!(stats.exact());
    }

    #[test]
    fn edgeless_graph_needs_everything() {
        let g = Graph::new(4);
        let (w, _) = min_dominating_set(&g, 10_000);
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn is_dominating_checks_closed_neighborhoods() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        assert!(is_dominating(&g, &[0, 2]));
        assert!(!is_dominating(&g, &[0]));
        assert!(!is_dominating(&g, &[]));
    }
}
