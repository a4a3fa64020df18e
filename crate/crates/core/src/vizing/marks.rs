//! Moving cherry marks through the color-shift digraph of a vertex.

use super::{ColorShiftDigraph, Lemma, Session, VizingError};
use crate::{Color, EdgeId, Vertex};

/// Whether a non-finishing operation already lowered ψ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flow {
    Dropped,
    Continue,
}

impl Session<'_> {
    /// Follows `path` from a marked color to a color missing at `v`, moving
    /// the mark one arc at a time. The last move lowers ψ.
    pub fn resolve_outdegree0(&mut self, v: Vertex, path: &[Color]) -> Result<(), VizingError> {
        let entry = self.coloring.potential();
        let d = ColorShiftDigraph::build(self.coloring, v);
        let l = path.len();
        if l < 2 {
            return Err(VizingError::Precondition("path needs at least one arc".into()));
        }
        if !d.is_marked(path[0]) {
            return Err(VizingError::Precondition(format!("color {} is not marked", path[0])));
        }
        if d.out_degree(path[l - 1]) != 0 {
            return Err(VizingError::Precondition(format!("color {} is not a sink", path[l - 1])));
        }
        if let Some(&m) = path[1..].iter().find(|&&m| d.is_marked(m)) {
            return Err(VizingError::Precondition(format!("color {m} on the path is marked")));
        }
        if let Some(w) = path.windows(2).find(|w| !d.has_arc(w[0], w[1])) {
            return Err(VizingError::Precondition(format!("no arc {} -> {}", w[0], w[1])));
        }
        for i in 0..l - 1 {
            let d = ColorShiftDigraph::build(self.coloring, v);
            let (from, to) = (path[i], path[i + 1]);
            if !d.is_marked(from) || (i + 1 < l - 1 && d.is_marked(to)) {
                return Err(VizingError::ClaimFailed(format!("mark did not move to {from}")));
            }
            let e = d
                .witness(from, to)
                .ok_or_else(|| VizingError::ClaimFailed(format!("arc {from} -> {to} disappeared")))?;
            self.move_cherry_edge_as(e, to, Lemma::Outdegree0)?;
            if self.settled(entry)? {
                return Ok(());
            }
        }
        Err(VizingError::ClaimFailed("reaching the sink did not lower ψ".into()))
    }

    /// When no marked color reaches a sink and no cycle holds a mark, moves
    /// the mark of β along the walk `β → …` (lowest successor each time)
    /// until a marked color lies on a directed cycle.
    pub fn create_marked_cycle(&mut self, v: Vertex, beta: Color) -> Result<Flow, VizingError> {
        let entry = self.coloring.potential();
        let d = ColorShiftDigraph::build(self.coloring, v);
        if !d.is_marked(beta) {
            return Err(VizingError::Precondition(format!("color {beta} is not marked at {v}")));
        }
        if d.marked_to_sink_path().is_some() {
            return Err(VizingError::Precondition("a marked color reaches a sink".into()));
        }
        if d.has_marked_cycle() {
            return Err(VizingError::Precondition("a marked color already lies on a cycle".into()));
        }
        // walk until a color repeats: seq[..=i] leads to alpha = seq[i],
        // which starts the cycle seq[i..]
        let mut seq = vec![beta];
        let alpha_idx = loop {
            let cur = *seq.last().unwrap();
            let next = d
                .successors(cur)
                .next()
                .ok_or_else(|| VizingError::ClaimFailed(format!("color {cur} is a sink")))?;
            if let Some(i) = seq.iter().position(|&c| c == next) {
                break i;
            }
            seq.push(next);
        };
        let cycle = seq[alpha_idx..].to_vec();
        let last_mark = (0..=alpha_idx)
            .rev()
            .find(|&i| d.is_marked(seq[i]))
            .expect("beta is marked");
        for i in last_mark..alpha_idx {
            let d = ColorShiftDigraph::build(self.coloring, v);
            let (from, to) = (seq[i], seq[i + 1]);
            let e = d
                .witness(from, to)
                .ok_or_else(|| VizingError::ClaimFailed(format!("arc {from} -> {to} disappeared")))?;
            self.move_cherry_edge_as(e, to, Lemma::CreateCycle)?;
            if self.settled(entry)? {
                return Ok(Flow::Dropped);
            }
        }
        let d = ColorShiftDigraph::build(self.coloring, v);
        if !d.is_marked(seq[alpha_idx]) || !d.is_cycle(&cycle) {
            return Err(VizingError::ClaimFailed("mark did not land on the cycle".into()));
        }
        Ok(Flow::Continue)
    }

    /// Given a chordless cycle `cycle` of the digraph at `v` through the
    /// marked color β, removes every other mark on it by recoloring the arm
    /// that does not witness the outgoing cycle arc.
    pub fn isolate_mark_on_cycle(&mut self, v: Vertex, cycle: &[Color], beta: Color) -> Result<Flow, VizingError> {
        let entry = self.coloring.potential();
        let d = ColorShiftDigraph::build(self.coloring, v);
        if !d.is_cycle(cycle) {
            return Err(VizingError::Precondition("not a cycle of the digraph".into()));
        }
        if !cycle.contains(&beta) || !d.is_marked(beta) {
            return Err(VizingError::Precondition(format!("color {beta} is not a mark on the cycle")));
        }
        if !d.chords(cycle).is_empty() {
            return Err(VizingError::Precondition("cycle has a chord".into()));
        }
        let m = cycle.len();
        for _ in 0..=m {
            let d = ColorShiftDigraph::build(self.coloring, v);
            if !d.is_cycle(cycle) {
                return Err(VizingError::ClaimFailed("cycle arcs disappeared".into()));
            }
            let Some(i) = (0..m).find(|&i| cycle[i] != beta && d.is_marked(cycle[i])) else {
                return Ok(Flow::Continue);
            };
            let (alpha, gamma) = (cycle[i], cycle[(i + 1) % m]);
            let ch = self
                .coloring
                .cherry_at(v, alpha)
                .ok_or_else(|| VizingError::ClaimFailed(format!("no {alpha}-cherry at {v}")))?;
            let keep = [ch.arms.0, ch.arms.1]
                .into_iter()
                .find(|&e| self.coloring.is_missing(ch.end_of(e), gamma))
                .ok_or_else(|| VizingError::ClaimFailed(format!("no arm witnesses {alpha} -> {gamma}")))?;
            let drop = ch.other_arm(keep);
            self.exchange_cherry_avoiding(drop, v, gamma, cycle, Lemma::IsolateMark)?;
            if self.settled(entry)? {
                return Ok(Flow::Dropped);
            }
        }
        Err(VizingError::ClaimFailed("marks kept reappearing on the cycle".into()))
    }

    /// With β the only mark on `cycle`, rotates the colors of the cherry arm
    /// and the cycle's witness edges one position around the cycle, then
    /// finishes through a two-colored component with a color missing at `v`.
    pub fn rotate_cycle_and_eliminate(&mut self, v: Vertex, cycle: &[Color], beta: Color) -> Result<(), VizingError> {
        self.require_enough_colors()?;
        self.require_cherry_coloring()?;
        let entry = self.coloring.potential();
        let d = ColorShiftDigraph::build(self.coloring, v);
        if !d.is_cycle(cycle) {
            return Err(VizingError::Precondition("not a cycle of the digraph".into()));
        }
        if d.marks_on(cycle) != 1 || !d.is_marked(beta) || !cycle.contains(&beta) {
            return Err(VizingError::Precondition(format!("{beta} must be the only mark on the cycle")));
        }
        let c = self.coloring.cherry_at(v, beta).expect("beta is marked");
        let missing = self.coloring.missing_colors(v);

        // a component with a degree-1 vertex finishes directly
        for &alpha in &missing {
            let h = self.coloring.bichromatic_component(v, beta, alpha);
            if h.degrees.contains(&1) {
                return self.eliminate_cherry_via_degree1(&c, alpha);
            }
        }

        let m = cycle.len();
        let start = cycle.iter().position(|&x| x == beta).unwrap();
        let order: Vec<Color> = (0..m).map(|i| cycle[(start + i) % m]).collect();
        let w_arm = [c.arms.0, c.arms.1]
            .into_iter()
            .find(|&e| self.coloring.is_missing(c.end_of(e), order[1]))
            .ok_or_else(|| VizingError::ClaimFailed("no cherry arm witnesses the first arc".into()))?;
        let w = c.end_of(w_arm);
        let mut edges: Vec<EdgeId> = vec![w_arm];
        for &col in &order[1..] {
            let (e, _) = self
                .coloring
                .edges_with_color(v, col)
                .next()
                .ok_or_else(|| VizingError::ClaimFailed(format!("color {col} absent at {v}")))?;
            edges.push(e);
        }
        for (i, &e) in edges.iter().enumerate() {
            let to = order[(i + 1) % m];
            self.move_cherry_edge_as(e, to, Lemma::RotateCycle)?;
            if self.settled(entry)? {
                return Ok(());
            }
        }

        let c2 = self
            .coloring
            .cherry_at(v, beta)
            .ok_or_else(|| VizingError::ClaimFailed(format!("rotation left no {beta}-cherry at {v}")))?;
        for alpha in self.coloring.missing_colors(v) {
            let h = self.coloring.bichromatic_component(v, beta, alpha);
            if h.degrees.contains(&1) {
                return self.eliminate_cherry_via_degree1(&c2, alpha);
            }
        }
        for alpha in self.coloring.missing_colors(v) {
            let h = self.coloring.bichromatic_component(v, beta, alpha);
            let partner = std::iter::once(w)
                .chain(h.vertices.iter().copied())
                .filter(|&y| y != v && h.degree(y) == 2)
                .find_map(|y| {
                    [alpha, beta]
                        .into_iter()
                        .find_map(|col| self.coloring.cherry_at(y, col))
                });
            if let Some(c3) = partner {
                return self.eliminate_two_cherries(&c2, &c3, alpha);
            }
        }
        Err(VizingError::ClaimFailed(format!(
            "after rotation at {v} no component finishes the round"
        )))
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coloring::EdgeColoring;
    use crate::graph::Graph;

    /// Hub 0 with leaves; `spokes[i] = (hub color, colors present at the
    /// leaf besides the hub edge)`, realized by pendant edges.
    fn hub(k: usize, spokes: &[(usize, &[usize])]) -> EdgeColoring {
        let mut edges = Vec::new();
        let mut colors = Vec::new();
        let mut next = spokes.len() + 1;
        for (i, &(col, present)) in spokes.iter().enumerate() {
            edges.push((0, i + 1));
            colors.push(col);
            for &p in present {
                edges.push((i + 1, next));
                colors.push(p);
                next += 1;
            }
        }
        let g = Arc::new(Graph::new(next, edges).unwrap());
        EdgeColoring::new(g, k, colors).unwrap()
    }

    #[test]
    fn outdegree0_path_lowers_potential() {
        // 0-cherry at the hub; leaf 1 misses 1, hub edge of color 1 goes to
        // leaf 3 which misses 2; color 2 is missing at the hub.
        let mut c = hub(3, &[(0, &[2]), (0, &[1, 2]), (1, &[])]);
        let d = ColorShiftDigraph::build(&c, 0);
        assert!(d.is_marked(0));
        assert_eq!(d.out_degree(2), 0);
        let path = d.marked_to_sink_path().unwrap();
        assert_eq!(path[0], 0);
        assert_eq!(*path.last().unwrap(), 2);
        let before = c.potential();
        let mut s = Session::new(&mut c);
        s.resolve_outdegree0(0, &path).unwrap();
        assert!(s.steps().iter().all(|st| st.delta <= 0));
        assert!(c.potential() < before);
    }

    #[test]
    fn outdegree0_rejects_bad_paths() {
        let mut c = hub(3, &[(0, &[2]), (0, &[1, 2]), (1, &[])]);
        let mut s = Session::new(&mut c);
        assert!(s.resolve_outdegree0(0, &[0]).is_err());
        assert!(s.resolve_outdegree0(0, &[1, 2]).is_err());
        assert!(s.steps().is_empty());
    }
}
