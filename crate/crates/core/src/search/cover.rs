//! Exact-cover search for tiling complements: cover Z_p^3 by disjoint
//! translates A + t, branching on the uncovered point with the fewest
//! admissible translates.

use crate::bits::Bitset;
use crate::group::{GroupPoint, GroupSet};

use super::Deadline;

pub(crate) enum CoverOutcome {
    /// Translate indices t with A + t partitioning the group.
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

pub(crate) fn exact_cover_tiling(a: &GroupSet, deadline: &mut Deadline) -> CoverOutcome {
    let p = a.prime();
    let n = p.group_order();
    debug_assert!(!a.is_empty() && n.is_multiple_of(a.len()));
    // translate masks and, per point, the translates covering it
    let members: Vec<GroupPoint> = a.iter().collect();
    let mut masks = Vec::with_capacity(n);
    let mut covering: Vec<Vec<usize>> = vec![Vec::with_capacity(a.len()); n];
    for t in 0..n {
        let tp = GroupPoint::from_index(p, t);
        let mut mask = Bitset::new(n);
        for m in &members {
            mask.set(m.add(&tp, p).index(p));
        }
        for x in mask.iter_ones() {
            covering[x].push(t);
        }
        masks.push(mask);
    }
    let mut covered = Bitset::new(n);
    let mut chosen = Vec::with_capacity(n / a.len());
    match dfs(&masks, &covering, &mut covered, &mut chosen, n, deadline) {
        DfsResult::Found => CoverOutcome::Found(chosen),
        DfsResult::Exhausted => CoverOutcome::Exhausted,
        DfsResult::Aborted => CoverOutcome::Aborted,
    }
}

enum DfsResult {
    Found,
    Exhausted,
    Aborted,
}

fn dfs(
    masks: &[Bitset],
    covering: &[Vec<usize>],
    covered: &mut Bitset,
    chosen: &mut Vec<usize>,
    n: usize,
    deadline: &mut Deadline,
) -> DfsResult {
    if deadline.tick() {
        return DfsResult::Aborted;
    }
    if covered.count_ones() == n {
        return DfsResult::Found;
    }
    // most-constrained uncovered point (lowest index wins ties)
    let mut pick: Option<(usize, Vec<usize>)> = None;
    for (x, covers) in covering.iter().enumerate() {
        if covered.get(x) {
            continue;
        }
        let admissible: Vec<usize> = covers
            .iter()
            .copied()
            .filter(|&t| !masks[t].intersects(covered))
            .collect();
        if admissible.is_empty() {
            return DfsResult::Exhausted;
        }
        let better = pick
            .as_ref()
            .is_none_or(|(_, best)| admissible.len() < best.len());
        if better {
            let len = admissible.len();
            pick = Some((x, admissible));
            if len == 1 {
                break;
            }
        }
    }
    let (_, admissible) = pick.expect("some point is uncovered");
    for t in admissible {
        chosen.push(t);
        covered.union_with(&masks[t]);
        match dfs(masks, covering, covered, chosen, n, deadline) {
            DfsResult::Found => return DfsResult::Found,
            DfsResult::Aborted => return DfsResult::Aborted,
            DfsResult::Exhausted => {}
        }
        covered.difference_with(&masks[t]);
        chosen.pop();
    }
    DfsResult::Exhausted
}

/// Exact check that A + T covers every group element exactly once.
pub(crate) fn is_tiling(a: &GroupSet, t: &GroupSet) -> bool {
    if a.prime() != t.prime() {
        return false;
    }
    let p = a.prime();
    let n = p.group_order();
    if a.len() * t.len() != n {
        return false;
    }
    let mut seen = Bitset::new(n);
    for x in a.iter() {
        for y in t.iter() {
            let s = x.add(&y, p).index(p);
            if seen.get(s) {
                return false;
            }
            seen.set(s);
        }
    }
    seen.count_ones() == n
}
