//! Plain-text edge lists: first line `n`, then one `u v` pair per line.
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use super::{Graph, GraphError};

pub fn read_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |msg: &str| GraphError::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(parse_err("expected vertex count"));
                }
                n = Some(
                    fields[0]
                        .parse::<usize>()
                        .map_err(|_| parse_err("vertex count is not a non-negative integer"))?,
                );
            }
            Some(n) => {
                if fields.len() != 2 {
                    return Err(parse_err("expected `u v`"));
                }
                let u: usize = fields[0]
                    .parse()
                    .map_err(|_| parse_err("endpoint is not a non-negative integer"))?;
                let v: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err("endpoint is not a non-negative integer"))?;
                if u >= n || v >= n {
                    return Err(parse_err(&format!("vertex out of range in edge ({u}, {v}), n = {n}")));
                }
                if u == v {
                    return Err(parse_err(&format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    Graph::new(n, edges)
}

/// Writes edges in edge-id order with `u < v` on each line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
