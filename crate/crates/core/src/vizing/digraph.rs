//! Color-shift digraph around a vertex.
//!
//! Vertices are the colors `0..k`. There is an arc `(α, β)` when some edge
//! `uv` at the center `v` has color α and β is missing at `u`; recoloring
//! that edge to β then only creates conflicts at `v`. A color is marked when
//! an α-cherry is centered at `v`.

use std::collections::VecDeque;

use crate::coloring::EdgeColoring;
use crate::{Color, EdgeId, Vertex};

/// Upper bound on simple cycles examined when looking for a chordless one.
const CYCLE_ENUMERATION_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorShiftDigraph {
    pub center: Vertex,
    k: usize,
    /// `witness[α * k + β]`: lowest-id edge witnessing the arc `(α, β)`.
    witness: Vec<Option<EdgeId>>,
    marked: Vec<bool>,
}

impl ColorShiftDigraph {
    pub fn build(c: &EdgeColoring, v: Vertex) -> Self {
        let k = c.k();
        let mut witness = vec![None; k * k];
        for &(e, u) in c.graph().incident(v) {
            let alpha = c.color(e);
            for beta in 0..k {
                if c.is_missing(u, beta) && witness[alpha * k + beta].is_none() {
                    witness[alpha * k + beta] = Some(e);
                }
            }
        }
        let marked = (0..k).map(|a| c.centers_cherry(v, a)).collect();
        Self {
            center: v,
            k,
            witness,
            marked,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn has_arc(&self, alpha: Color, beta: Color) -> bool {
        self.witness[alpha * self.k + beta].is_some()
    }

    /// Lowest-id edge at the center colored α whose far end misses β.
    pub fn witness(&self, alpha: Color, beta: Color) -> Option<EdgeId> {
        self.witness[alpha * self.k + beta]
    }

    pub fn successors(&self, alpha: Color) -> impl Iterator<Item = Color> + '_ {
        (0..self.k).filter(move |&b| self.has_arc(alpha, b))
    }

    pub fn out_degree(&self, alpha: Color) -> usize {
        self.successors(alpha).count()
    }

    pub fn is_marked(&self, alpha: Color) -> bool {
        self.marked[alpha]
    }

    pub fn marked_colors(&self) -> Vec<Color> {
        (0..self.k).filter(|&a| self.marked[a]).collect()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(Color, Color)> {
        (0..self.k)
            .flat_map(|a| self.successors(a).map(move |b| (a, b)))
            .collect()
    }

    /// Whether `cycle` (listed without repeating its first color) is a
    /// directed cycle of this digraph.
    pub fn is_cycle(&self, cycle: &[Color]) -> bool {
        cycle.len() >= 2
            && (0..cycle.len()).all(|i| self.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]))
            && {
                let mut seen = vec![false; self.k];
                cycle.iter().all(|&c| !std::mem::replace(&mut seen[c], true))
            }
    }

    /// Arcs between colors of `cycle` other than the cycle's own arcs.
    pub fn chords(&self, cycle: &[Color]) -> Vec<(Color, Color)> {
        let m = cycle.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if j != i && j != (i + 1) % m && self.has_arc(cycle[i], cycle[j]) {
                    out.push((cycle[i], cycle[j]));
                }
            }
        }
        out
    }

    /// Shortest path from any marked color to a color of out-degree 0, found
    /// by multi-source BFS; its interior colors are unmarked.
    pub fn marked_to_sink_path(&self) -> Option<Vec<Color>> {
        let mut parent = vec![usize::MAX; self.k];
        let mut seen = vec![false; self.k];
        let mut queue = VecDeque::new();
        for a in self.marked_colors() {
            seen[a] = true;
            queue.push_back(a);
        }
        while let Some(a) = queue.pop_front() {
            if self.out_degree(a) == 0 {
                let mut path = vec![a];
                let mut cur = a;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for b in self.successors(a) {
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        None
    }

    /// Shortest directed cycle through `start`, listed from `start`.
    pub fn shortest_cycle_through(&self, start: Color) -> Option<Vec<Color>> {
        let mut parent = vec![usize::MAX; self.k];
        let mut seen = vec![false; self.k];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(a) = queue.pop_front() {
            for b in self.successors(a) {
                if b == start {
                    let mut cycle = vec![a];
                    let mut cur = a;
                    while cur != start {
                        cur = parent[cur];
                        cycle.push(cur);
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        None
    }

    /// Does some directed cycle contain a marked color?
    pub fn has_marked_cycle(&self) -> bool {
        self.marked_colors()
            .into_iter()
            .any(|b| self.shortest_cycle_through(b).is_some())
    }

    /// A chordless cycle containing at least one marked color, rotated to
    /// start at its lowest marked color.
    ///
    /// Shortest cycles through each marked color are tried first, shortcut
    /// along chords while a marked color survives; failing that, simple
    /// cycles are enumerated (capped) by increasing start color.
    pub fn chordless_marked_cycle(&self) -> Option<Vec<Color>> {
        for b in self.marked_colors() {
            if let Some(cycle) = self.shortest_cycle_through(b) {
                if let Some(found) = self.shortcut_keeping_mark(cycle) {
                    return Some(self.rotate_to_mark(found));
                }
            }
        }
        let mut best: Option<Vec<Color>> = None;
        self.for_each_simple_cycle(|cycle| {
            if cycle.iter().any(|&c| self.marked[c]) && self.chords(cycle).is_empty() {
                let better = best.as_ref().is_none_or(|b| cycle.len() < b.len());
                if better {
                    best = Some(cycle.to_vec());
                }
            }
        });
        best.map(|c| self.rotate_to_mark(c))
    }

    /// A cycle (chords allowed) with exactly one marked color, rotated to
    /// start at it.
    pub fn single_mark_cycle(&self) -> Option<Vec<Color>> {
        for b in self.marked_colors() {
            if let Some(cycle) = self.shortest_cycle_through(b) {
                if self.marks_on(&cycle) == 1 {
                    return Some(cycle);
                }
            }
        }
        let mut best: Option<Vec<Color>> = None;
        self.for_each_simple_cycle(|cycle| {
            if best.is_none() && self.marks_on(cycle) == 1 {
                best = Some(cycle.to_vec());
            }
        });
        best.map(|c| self.rotate_to_mark(c))
    }

    pub fn marks_on(&self, cycle: &[Color]) -> usize {
        cycle.iter().filter(|&&c| self.marked[c]).count()
    }

    fn rotate_to_mark(&self, mut cycle: Vec<Color>) -> Vec<Color> {
        let pos = (0..cycle.len())
            .filter(|&i| self.marked[cycle[i]])
            .min_by_key(|&i| cycle[i])
            .unwrap_or(0);
        cycle.rotate_left(pos);
        cycle
    }

    /// Repeatedly replaces the cycle by the shorter cycle a chord closes,
    /// as long as that shorter cycle still holds a marked color.
    fn shortcut_keeping_mark(&self, mut cycle: Vec<Color>) -> Option<Vec<Color>> {
        loop {
            let m = cycle.len();
            let mut next = None;
            'search: for i in 0..m {
                for j in 0..m {
                    if j == i || j == (i + 1) % m || !self.has_arc(cycle[i], cycle[j]) {
                        continue;
                    }
                    // chord c_i -> c_j closes c_j, c_{j+1}, ..., c_i
                    let mut shorter = Vec::new();
                    let mut t = j;
                    loop {
                        shorter.push(cycle[t]);
                        if t == i {
                            break;
                        }
                        t = (t + 1) % m;
                    }
                    if shorter.iter().any(|&c| self.marked[c]) {
                        next = Some(shorter);
                        break 'search;
                    }
                }
            }
            match next {
                Some(shorter) => cycle = shorter,
                None => {
                    return if self.chords(&cycle).is_empty() {
                        Some(cycle)
                    } else {
                        None
                    }
                }
            }
        }
    }

    /// Calls `f` on simple cycles, each listed once from its smallest color.
    fn for_each_simple_cycle(&self, mut f: impl FnMut(&[Color])) {
        let mut budget = CYCLE_ENUMERATION_CAP;
        let mut path = Vec::new();
        let mut on_path = vec![false; self.k];
        for start in 0..self.k {
            if self.out_degree(start) == 0 {
                continue;
            }
            path.push(start);
            on_path[start] = true;
            self.cycles_from(start, &mut path, &mut on_path, &mut budget, &mut f);
            on_path[start] = false;
            path.pop();
            if budget == 0 {
                return;
            }
        }
    }

    fn cycles_from(
        &self,
        start: Color,
        path: &mut Vec<Color>,
        on_path: &mut [bool],
        budget: &mut usize,
        f: &mut impl FnMut(&[Color]),
    ) {
        let last = *path.last().expect("path is non-empty");
        for b in self.successors(last) {
            if *budget == 0 {
                return;
            }
            if b == start && path.len() >= 2 {
                *budget -= 1;
                f(path);
            } else if b > start && !on_path[b] {
                path.push(b);
                on_path[b] = true;
                self.cycles_from(start, path, on_path, budget, f);
                on_path[b] = false;
                path.pop();
            }
        }
    }
}
