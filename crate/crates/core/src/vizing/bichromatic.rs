//! Operations inside a two-colored component: sliding a cherry along a path
//! of degree-2 vertices, and removing a cherry through a degree-1 vertex or
//! a second cherry.

use std::collections::VecDeque;

use super::{Lemma, Session, VizingError};
use crate::coloring::Cherry;
use crate::{Color, Vertex};

/// Result of sliding a cherry along a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftOutcome {
    /// ψ dropped on the way.
    PotentialDropped,
    /// The cherry now sits at the path's second vertex.
    CherryAt(Cherry),
}

/// BFS over edges colored `a` or `b` from `start`: `(dist, parent)` with
/// `usize::MAX` for unreached vertices.
fn bfs_two_colored(s: &Session<'_>, start: Vertex, a: Color, b: Color) -> (Vec<usize>, Vec<Vertex>) {
    let c = &*s.coloring;
    let n = c.graph().vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &(e, y) in c.graph().incident(x) {
            let col = c.color(e);
            if (col == a || col == b) && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    (dist, parent)
}

impl Session<'_> {
    fn two_colored_degree(&self, x: Vertex, a: Color, b: Color) -> usize {
        self.coloring.color_degree(x, a) + self.coloring.color_degree(x, b)
    }

    fn edge_on(&self, x: Vertex, y: Vertex) -> Result<usize, VizingError> {
        self.coloring
            .graph()
            .edge_between(x, y)
            .ok_or_else(|| VizingError::ClaimFailed(format!("{x} and {y} are not adjacent")))
    }

    /// Slides `cherry` (color γ1, centered at `path[ℓ-1]`) towards `path[0]`
    /// in the component `H` of colors γ1 and γ2, where γ2 is missing at the
    /// center and `path[1..]` all have degree 2 in `H`. Each step recolors
    /// one arm and keeps the edge set of `H` unchanged.
    pub fn shift_cherry_along_path(
        &mut self,
        cherry: &Cherry,
        path: &[Vertex],
        gamma2: Color,
    ) -> Result<ShiftOutcome, VizingError> {
        let entry = self.coloring.potential();
        let l = path.len();
        let gamma1 = cherry.color;
        if l < 2 || path[l - 1] != cherry.center {
            return Err(VizingError::Precondition("path must end at the cherry center".into()));
        }
        if self.coloring.cherry_at(cherry.center, gamma1).as_ref() != Some(cherry) {
            return Err(VizingError::Precondition("not a current cherry".into()));
        }
        if !self.coloring.is_missing(cherry.center, gamma2) || gamma2 == gamma1 {
            return Err(VizingError::Precondition(format!("color {gamma2} is not missing at the center")));
        }
        for w in path.windows(2) {
            let e = self.edge_on(w[0], w[1]).map_err(|e| VizingError::Precondition(e.to_string()))?;
            let col = self.coloring.color(e);
            if col != gamma1 && col != gamma2 {
                return Err(VizingError::Precondition(format!("path edge {e} leaves the component")));
            }
        }
        if let Some(&x) = path[1..].iter().find(|&&x| self.two_colored_degree(x, gamma1, gamma2) != 2) {
            return Err(VizingError::Precondition(format!("vertex {x} on the path does not have degree 2")));
        }
        if self.settled(entry)? {
            return Ok(ShiftOutcome::PotentialDropped);
        }

        let (mut g1, mut g2) = (gamma1, gamma2);
        let mut current = *cherry;
        for end in (2..l).rev() {
            let v = path[end];
            let u = path[end - 1];
            let arm = self.edge_on(u, v)?;
            let back = self.edge_on(path[end - 2], u)?;
            if self.coloring.color(back) != g2 || current.center != v {
                return Err(VizingError::ClaimFailed(format!("colors along the path do not alternate at {u}")));
            }
            self.move_cherry_edge_as(arm, g2, Lemma::PathShift)?;
            if self.settled(entry)? {
                return Ok(ShiftOutcome::PotentialDropped);
            }
            current = self
                .coloring
                .cherry_at(u, g2)
                .ok_or_else(|| VizingError::ClaimFailed(format!("no {g2}-cherry appeared at {u}")))?;
            std::mem::swap(&mut g1, &mut g2);
        }
        Ok(ShiftOutcome::CherryAt(current))
    }

    /// Removes `cherry` when its component `H` with a color γ2 missing at the
    /// center has a vertex of degree 1. ψ strictly decreases.
    pub fn eliminate_cherry_via_degree1(&mut self, cherry: &Cherry, gamma2: Color) -> Result<(), VizingError> {
        self.require_enough_colors()?;
        self.require_cherry_coloring()?;
        let entry = self.coloring.potential();
        let v = cherry.center;
        let gamma1 = cherry.color;
        if self.coloring.cherry_at(v, gamma1).as_ref() != Some(cherry) {
            return Err(VizingError::Precondition("not a current cherry".into()));
        }
        if !self.coloring.is_missing(v, gamma2) {
            return Err(VizingError::Precondition(format!("color {gamma2} is not missing at {v}")));
        }
        let (dist, parent) = bfs_two_colored(self, v, gamma1, gamma2);
        let n = dist.len();
        let Some(w) = (0..n)
            .filter(|&x| dist[x] != usize::MAX && self.two_colored_degree(x, gamma1, gamma2) == 1)
            .min_by_key(|&x| (dist[x], x))
        else {
            return Err(VizingError::Precondition("the component has no vertex of degree 1".into()));
        };
        let mut path = vec![w];
        while *path.last().unwrap() != v {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse(); // v .. w

        // strip cherries hanging off interior path vertices
        loop {
            let mut target = None;
            'scan: for &y in &path[1..path.len() - 1] {
                for col in [gamma1, gamma2] {
                    if let Some(ch) = self.coloring.cherry_at(y, col) {
                        for (arm, end) in [(ch.arms.0, ch.ends.0), (ch.arms.1, ch.ends.1)] {
                            if !path.contains(&end) {
                                target = Some((arm, y));
                                break 'scan;
                            }
                        }
                    }
                }
            }
            let Some((arm, y)) = target else { break };
            self.recolor_arm_outside(arm, y, &[gamma1, gamma2], Lemma::DegreeOne)?;
            if self.settled(entry)? {
                return Ok(());
            }
        }

        // cut at the vertex of degree 3 nearest to v
        let cut = (1..path.len()).find(|&j| self.two_colored_degree(path[j], gamma1, gamma2) >= 3);
        let shift_path: Vec<Vertex> = match cut {
            Some(j) => {
                let y = path[j];
                let x = path[j - 1];
                if j < 2 {
                    return Err(VizingError::ClaimFailed(format!("degree-3 vertex {y} is adjacent to the center")));
                }
                let xy = self.edge_on(x, y)?;
                self.recolor_arm_outside(xy, y, &[gamma1, gamma2], Lemma::DegreeOne)?;
                if self.settled(entry)? {
                    return Ok(());
                }
                path[..j].iter().rev().copied().collect()
            }
            None => path.iter().rev().copied().collect(),
        };

        let current = self
            .coloring
            .cherry_at(v, gamma1)
            .ok_or_else(|| VizingError::ClaimFailed("the cherry vanished".into()))?;
        let moved = match self.shift_cherry_along_path(&current, &shift_path, gamma2) {
            Ok(ShiftOutcome::PotentialDropped) => return Ok(()),
            Ok(ShiftOutcome::CherryAt(ch)) => ch,
            Err(VizingError::Precondition(m)) => return Err(VizingError::ClaimFailed(m)),
            Err(e) => return Err(e),
        };
        let (x1, x2) = (shift_path[0], shift_path[1]);
        let e = self.edge_on(x1, x2)?;
        let gi = self.coloring.color(e);
        let gj = if gi == gamma1 { gamma2 } else { gamma1 };
        if moved.center != x2 || !self.coloring.is_missing(x1, gj) || !self.coloring.is_missing(x2, gj) {
            return Err(VizingError::ClaimFailed(format!("end of path {x1} cannot take color {gj}")));
        }
        self.apply(e, gj, Lemma::DegreeOne)?;
        if self.coloring.potential() >= entry {
            return Err(VizingError::ClaimFailed("final recoloring did not lower ψ".into()));
        }
        Ok(())
    }

    /// Removes one of two cherries `c` and `c2` whose centers both have degree
    /// 2 in the component `H` of colors `c.color` and `other`, where `other`
    /// is missing at the center of `c`. ψ strictly decreases.
    pub fn eliminate_two_cherries(&mut self, c: &Cherry, c2: &Cherry, other: Color) -> Result<(), VizingError> {
        self.require_enough_colors()?;
        self.require_cherry_coloring()?;
        let entry = self.coloring.potential();
        let gamma1 = c.color;
        let v = c.center;
        if self.coloring.cherry_at(v, gamma1).as_ref() != Some(c)
            || self.coloring.cherry_at(c2.center, c2.color).as_ref() != Some(c2)
        {
            return Err(VizingError::Precondition("not current cherries".into()));
        }
        if c2.color != gamma1 && c2.color != other {
            return Err(VizingError::Precondition("second cherry is not in the component".into()));
        }
        if !self.coloring.is_missing(v, other) {
            return Err(VizingError::Precondition(format!("color {other} is not missing at {v}")));
        }
        let y = c2.center;
        if y == v || self.two_colored_degree(y, gamma1, other) != 2 {
            return Err(VizingError::Precondition(format!("center {y} does not have degree 2")));
        }
        let (dist, _) = bfs_two_colored(self, v, gamma1, other);
        if dist[y] == usize::MAX {
            return Err(VizingError::Precondition("cherries lie in different components".into()));
        }
        // keep the arm nearer to v, recolor the far arm yz out of H
        let (a, b) = c2.ends;
        let z = if (dist[b], b) >= (dist[a], a) { b } else { a };
        let yz = self.edge_on(y, z)?;
        self.recolor_arm_outside(yz, y, &[gamma1, other], Lemma::TwoCherries)?;
        if self.settled(entry)? {
            return Ok(());
        }
        let current = self
            .coloring
            .cherry_at(v, gamma1)
            .ok_or_else(|| VizingError::ClaimFailed("the first cherry vanished".into()))?;
        match self.eliminate_cherry_via_degree1(&current, other) {
            Err(VizingError::Precondition(m)) => Err(VizingError::ClaimFailed(m)),
            r => r,
        }
    }
}
