//! Discretized-graph Dijkstra oracle for the metric.
//!
//! Builds a graph directly from the model definition: planar grid nodes
//! connected by straight visibility edges inside each (convex) half-plane,
//! string chains sampled at the grid step, and the two gates stitching them
//! together. Query points snap to the nearest node, so graph distances agree
//! with exact distances to within twice the grid step. The routing itself is
//! found by Dijkstra, independent of the closed-form case analysis.

use crate::config::{MdConfig, TOL};
use crate::point::PointRef;
use std::collections::BinaryHeap;

#[derive(Debug, Clone, Copy)]
struct NodePos {
    /// 0 = delta1, 1 = delta2, 2.. unused
    region: u8,
    xy: [f64; 2],
}

/// The oracle graph over a bounded window of the model.
pub struct OracleGrid {
    nodes: Vec<NodePos>,
    adj: Vec<Vec<(usize, f64)>>,
    /// node index of each string sample: `string_nodes[id-1][k]` at param `k * step`.
    string_nodes: [Vec<usize>; 3],
    step: f64,
    p_node: usize,
    q_node: usize,
    cfg: MdConfig,
    window: Window,
    planar_spacing: f64,
}

/// Rectangular sampling window `x in [x_min, x_max], y in [y_min, y_max]`
/// (delta1 nodes take x <= 0, delta2 nodes x > g).
#[derive(Debug, Clone, Copy)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl OracleGrid {
    /// Builds the oracle. `step` controls string discretization and snapping
    /// granularity. Planar nodes are spaced more coarsely (their in-region
    /// metric is exact by convexity; they only exercise the routing).
    pub fn build(cfg: &MdConfig, window: Window, step: f64) -> OracleGrid {
        let mut g = OracleGrid {
            nodes: Vec::new(),
            adj: Vec::new(),
            string_nodes: [Vec::new(), Vec::new(), Vec::new()],
            step,
            p_node: 0,
            q_node: 0,
            cfg: cfg.clone(),
            window,
            planar_spacing: (step * 20.0).max(0.5),
        };
        let gap = cfg.gap_width;

        g.p_node = g.push(NodePos { region: 0, xy: [0.0, 0.0] });
        g.q_node = g.push(NodePos { region: 1, xy: [gap, 0.0] });

        // Planar grids.
        let spacing = g.planar_spacing;
        let mut d1 = vec![g.p_node];
        let mut d2 = vec![g.q_node];
        let ny = ((window.y_max - window.y_min) / spacing).round() as i64;
        let nx1 = ((0.0 - window.x_min) / spacing).round() as i64;
        for ix in 0..=nx1 {
            for iy in 0..=ny {
                let x = window.x_min + ix as f64 * spacing;
                let y = window.y_min + iy as f64 * spacing;
                if x <= TOL {
                    d1.push(g.push(NodePos { region: 0, xy: [x.min(0.0), y] }));
                }
            }
        }
        let nx2 = ((window.x_max - gap) / spacing).round() as i64;
        for ix in 0..=nx2 {
            for iy in 0..=ny {
                let x = gap + ix as f64 * spacing;
                let y = window.y_min + iy as f64 * spacing;
                if x > gap + TOL {
                    d2.push(g.push(NodePos { region: 1, xy: [x, y] }));
                }
            }
        }
        // Visibility edges (complete within each convex region).
        for set in [&d1, &d2] {
            for i in 0..set.len() {
                for j in (i + 1)..set.len() {
                    let (a, b) = (set[i], set[j]);
                    let w = crate::path::dist2(&g.nodes[a].xy, &g.nodes[b].xy);
                    if w > TOL {
                        g.adj[a].push((b, w));
                        g.adj[b].push((a, w));
                    }
                }
            }
        }
        // String chains.
        for id in 1..=3u8 {
            let len = cfg.string_len(id);
            let n = (len / step).ceil() as usize;
            let mut chain = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let t = (k as f64 * step).min(len);
                let node = if t <= TOL {
                    g.p_node
                } else if t >= len - TOL {
                    g.q_node
                } else {
                    g.push(NodePos { region: 10 + id, xy: [t, 0.0] })
                };
                chain.push(node);
            }
            for w in chain.windows(2) {
                let (a, b) = (w[0], w[1]);
                let ta = g.param_of(id, a);
                let tb = g.param_of(id, b);
                let wlen = (tb - ta).abs();
                if wlen > TOL {
                    g.adj[a].push((b, wlen));
                    g.adj[b].push((a, wlen));
                }
            }
            g.string_nodes[(id - 1) as usize] = chain;
        }
        g
    }

    fn param_of(&self, id: u8, node: usize) -> f64 {
        let n = &self.nodes[node];
        if node == self.p_node {
            0.0
        } else if node == self.q_node {
            self.cfg.string_len(id)
        } else {
            n.xy[0]
        }
    }

    fn push(&mut self, n: NodePos) -> usize {
        self.nodes.push(n);
        self.adj.push(Vec::new());
        self.nodes.len() - 1
    }

    /// Snaps a point to its nearest oracle node; planar points become
    /// temporary nodes wired by visibility, string points snap to the chain.
    fn node_for(&self, p: &PointRef, extra: &mut Vec<(usize, Vec<(usize, f64)>)>) -> Option<usize> {
        match p {
            PointRef::GateP => Some(self.p_node),
            PointRef::GateQ => Some(self.q_node),
            PointRef::OnString { id, t } => {
                let chain = &self.string_nodes[(id - 1) as usize];
                let k = (t / self.step).round() as usize;
                Some(chain[k.min(chain.len() - 1)])
            }
            PointRef::Planar1 { x, y } | PointRef::Planar2 { x, y } => {
                let region = if matches!(p, PointRef::Planar1 { .. }) { 0 } else { 1 };
                let idx = self.nodes.len() + extra.len();
                let mut edges = Vec::new();
                for (i, n) in self.nodes.iter().enumerate() {
                    if n.region == region {
                        let w = crate::path::dist2(&n.xy, &[*x, *y]);
                        edges.push((i, w));
                    }
                }
                extra.push((idx, edges));
                Some(idx)
            }
            PointRef::Isolated(_) => None,
        }
    }

    /// Graph distance between two points; `None` for isolated endpoints
    /// (distinct from each other) or points outside the window.
    pub fn graph_distance(&self, a: &PointRef, b: &PointRef) -> Option<f64> {
        if a.approx_eq(b) {
            return Some(0.0);
        }
        if a.is_isolated() || b.is_isolated() {
            return None;
        }
        let mut extra = Vec::new();
        let sa = self.node_for(a, &mut extra)?;
        let sb = self.node_for(b, &mut extra)?;
        let total = self.nodes.len() + extra.len();

        let edges_of = |u: usize| -> Vec<(usize, f64)> {
            if u < self.nodes.len() {
                let mut e = self.adj[u].clone();
                // Edges to temporary nodes are symmetric.
                for (idx, list) in &extra {
                    for (v, w) in list {
                        if *v == u {
                            e.push((*idx, *w));
                        }
                    }
                }
                e
            } else {
                extra
                    .iter()
                    .find(|(idx, _)| *idx == u)
                    .map(|(_, list)| list.clone())
                    .unwrap_or_default()
            }
        };

        #[derive(PartialEq)]
        struct St(f64, usize);
        impl Eq for St {}
        impl Ord for St {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                other.0.partial_cmp(&self.0).unwrap_or(std::cmp::Ordering::Equal)
            }
        }
        impl PartialOrd for St {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }

        let mut dist = vec![f64::INFINITY; total];
        let mut heap = BinaryHeap::new();
        dist[sa] = 0.0;
        heap.push(St(0.0, sa));
        while let Some(St(d, u)) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            if u == sb {
                return Some(d);
            }
            for (v, w) in edges_of(u) {
                let nd = d + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    heap.push(St(nd, v));
                }
            }
        }
        None
    }

    pub fn window(&self) -> Window {
        self.window
    }
}
