use super::{Graph, Vertex};
use serde::Serialize;

/// Default number of path extensions explored before giving up.
pub const DEFAULT_CYCLE_BUDGET: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleEnumeration {
    /// Each cycle in its natural cyclic order, starting at its smallest
    /// vertex and continuing towards the smaller of that vertex's two
    /// cycle neighbours.
    pub cycles: Vec<Vec<Vertex>>,
    /// False when the budget ran out before the enumeration finished.
    pub complete: bool,
}

/// All induced cycles of length `3..=length_cap`.
pub fn chordless_cycles(g: &Graph, length_cap: usize, budget: usize) -> CycleEnumeration {
    let mut state = Enumerator { g, cap: length_cap, budget, cycles: Vec::new(), path: Vec::new() };
    let mut complete = true;
    'outer: for s in g.vertices() {
        for &v1 in g.neighbors(s).iter().filter(|&&v| v > s) {
            state.path.clear();
            state.path.extend([s, v1]);
            if !state.extend() {
                complete = false;
                break 'outer;
            }
        }
    }
    state.cycles.sort();
    CycleEnumeration { cycles: state.cycles, complete }
}

struct Enumerator<'a> {
    g: &'a Graph,
    cap: usize,
    budget: usize,
    cycles: Vec<Vec<Vertex>>,
    path: Vec<Vertex>,
}

impl Enumerator<'_> {
    /// Extend the chordless path `path` (first vertex is the cycle minimum).
    /// Returns false when out of budget.
    fn extend(&mut self) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        let s = self.path[0];
        let v1 = self.path[1];
        let last = *self.path.last().unwrap();
        let len = self.path.len();
        for &w in self.g.neighbors(last) {
            if w <= s || self.path.contains(&w) {
                continue;
            }
            // w must not see any interior path vertex other than `last`.
            if self.path[1..len - 1].iter().any(|&p| self.g.has_edge(p, w)) {
                continue;
            }
            if self.g.has_edge(s, w) {
                if w > v1 && len < self.cap {
                    let mut c = self.path.clone();
                    c.push(w);
                    self.cycles.push(c);
                }
            } else if len + 1 < self.cap {
                self.path.push(w);
                let ok = self.extend();
                self.path.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// True when `cycle` (in cyclic order) is an induced cycle of `g`.
pub fn is_chordless_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}
