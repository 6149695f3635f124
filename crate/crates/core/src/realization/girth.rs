use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Dart, MultiGraph};

pub const DEFAULT_GIRTH_CAP: usize = 20;

/// Shortest non-backtracking closed walk in the periodic lift, found by
/// breadth-first search over (vertex, translation) states from each base vertex.
pub fn periodic_girth(g: &MultiGraph, labels: &[Vec<i64>], radius_cap: usize) -> Result<usize> {
    let mut best = usize::MAX;
    let darts: Vec<Vec<Dart>> = (0..g.vertex_count()).map(|v| g.darts_at(v)).collect();
    for root in 0..g.vertex_count() {
        let d = labels.first().map_or(0, |l| l.len());
        let start = (root, vec![0i64; d]);
        let mut dist: HashMap<(usize, Vec<i64>), (usize, Option<Dart>)> = HashMap::new();
        dist.insert(start.clone(), (0, None));
        let mut queue = VecDeque::from([start]);
        while let Some(state) = queue.pop_front() {
            let (du, via) = dist[&state].clone();
            if 2 * du >= best || 2 * du > radius_cap {
                break;
            }
            for &dart in &darts[state.0] {
                if via == Some(dart.rev()) {
                    continue;
                }
                let s = dart.sign();
                let next_t: Vec<i64> = state.1.iter().zip(&labels[dart.edge]).map(|(a, b)| a + s * b).collect();
                let next = (g.terminus(dart), next_t);
                match dist.get(&next) {
                    None => {
                        dist.insert(next.clone(), (du + 1, Some(dart)));
                        queue.push_back(next);
                    }
                    Some(&(dw, wvia)) => {
                        // the tree edge into `next` itself is not a cycle
                        if wvia != Some(dart) {
                            best = best.min(du + dw + 1);
                        }
                    }
                }
            }
        }
    }
    if best <= radius_cap {
        Ok(best)
    } else {
        Err(Error::GirthExceedsCap(radius_cap))
    }
}
