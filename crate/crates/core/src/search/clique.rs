//! Branch-and-bound maximum clique over dense bitset adjacency, with a
//! greedy-coloring bound. The graphs here are Cayley graphs on Z_p^3
//! (vertex transitive), so the search is anchored at vertex 0: some
//! maximum clique always contains it.

use crate::bits::Bitset;

use super::Deadline;

pub(crate) enum CliqueOutcome {
    /// A clique of at least the target size (search stopped early).
    Reached(Vec<usize>),
    /// Search space exhausted; the payload is a maximum clique.
    Exhausted(Vec<usize>),
    Aborted,
}

struct Searcher<'a> {
    adj: &'a [Bitset],
    deadline: &'a mut Deadline,
    best: Vec<usize>,
    target: Option<usize>,
    done: bool,
    aborted: bool,
}

pub(crate) fn max_clique_anchored(
    adj: &[Bitset],
    target: Option<usize>,
    deadline: &mut Deadline,
) -> CliqueOutcome {
    let mut s = Searcher {
        adj,
        deadline,
        best: Vec::new(),
        target,
        done: false,
        aborted: false,
    };
    let mut clique = vec![0usize];
    let cand = adj[0].clone();
    s.expand(&mut clique, cand);
    if s.aborted && !s.done {
        return CliqueOutcome::Aborted;
    }
    if s.done {
        CliqueOutcome::Reached(s.best)
    } else {
        CliqueOutcome::Exhausted(s.best)
    }
}

impl Searcher<'_> {
    fn record(&mut self, clique: &[usize]) {
        if clique.len() > self.best.len() {
            self.best = clique.to_vec();
            if self.target.is_some_and(|t| self.best.len() >= t) {
                self.done = true;
            }
        }
    }

    fn expand(&mut self, clique: &mut Vec<usize>, cand: Bitset) {
        if self.done || self.aborted {
            return;
        }
        if self.deadline.tick() {
            self.aborted = true;
            return;
        }
        if cand.is_empty() {
            self.record(clique);
            return;
        }
        // greedy coloring: vertices listed color by color; a vertex with
        // color c cannot extend the clique past clique.len() + c
        let (order, colors) = color_classes(&cand, self.adj);
        let mut cand = cand;
        for idx in (0..order.len()).rev() {
            if self.done || self.aborted {
                return;
            }
            if clique.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            clique.push(v);
            let next = cand.intersection(&self.adj[v]);
            if clique.len() + next.count_ones() > self.best.len() {
                self.expand(clique, next);
            } else {
                self.record(clique);
            }
            clique.pop();
            cand.clear(v);
        }
    }
}

/// Sequential greedy coloring of the candidate set; returns the vertices
/// ordered by ascending color together with their colors (1-based).
fn color_classes(cand: &Bitset, adj: &[Bitset]) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones());
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = cand.clone();
    let mut color = 0usize;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first_one() {
            order.push(v);
            colors.push(color);
            uncolored.clear(v);
            avail.clear(v);
            avail.difference_with(&adj[v]);
        }
    }
    (order, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::SearchBudget;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Bitset> {
        let mut adj = vec![Bitset::new(n); n];
        for &(u, v) in edges {
            adj[u].set(v);
            adj[v].set(u);
        }
        adj
    }

    fn run(adj: &[Bitset], target: Option<usize>) -> CliqueOutcome {
        let budget = SearchBudget::default();
        let mut deadline = Deadline::new(&budget);
        max_clique_anchored(adj, target, &mut deadline)
    }

    #[test]
    fn triangle_with_tail() {
        // 0-1-2 triangle plus pendant 3; max clique containing 0 is 3
        let adj = graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        match run(&adj, None) {
            CliqueOutcome::Exhausted(best) => {
                assert_eq!(best.len(), 3);
                assert!(best.contains(&0));
            }
            _ => panic!("expected exhaustive maximum"),
        }
    }

    #[test]
    fn target_early_exit() {
        let n = 16;
        // complete graph
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let adj = graph(n, &edges);
        match run(&adj, Some(10)) {
            CliqueOutcome::Reached(c) => assert!(c.len() >= 10),
            _ => panic!("complete graph must reach target"),
        }
    }

    #[test]
    fn empty_graph_refutes_targets() {
        let adj = graph(5, &[]);
        match run(&adj, Some(2)) {
            CliqueOutcome::Exhausted(best) => assert_eq!(best.len(), 1),
            _ => panic!("expected exhaustion at the singleton"),
        }
    }

    #[test]
    fn respects_node_budget() {
        let n = 32;
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|(u, v)| (u + v) % 3 != 0)
            .collect();
        let adj = graph(n, &edges);
        let budget = SearchBudget::new(2, std::time::Duration::from_secs(5)).unwrap();
        let mut deadline = Deadline::new(&budget);
        assert!(matches!(
            max_clique_anchored(&adj, Some(20), &mut deadline),
            CliqueOutcome::Aborted
        ));
    }
}
