//! Small undirected graphs: BFS distances, girth, diameter, bipartiteness.

use std::collections::VecDeque;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertices: usize) -> Self {
        Self {
            adj: vec![Vec::new(); vertices],
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        if !self.adj[a].contains(&b) {
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|n| n.len() == k).then_some(k)
    }

    /// Hop distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.adj.len()).map(|v| self.distances_from(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.adj.len() {
            let far = *self.distances_from(v).iter().max()?;
            if far == usize::MAX {
                return None;
            }
            best = best.max(far);
        }
        Some(best)
    }

    /// Length of a shortest cycle through `root`, if one has length at most `limit`.
    pub(crate) fn shortest_cycle_from(&self, root: usize, limit: usize) -> Option<usize> {
        let n = self.adj.len();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::from([root]);
        dist[root] = 0;
        let mut best: Option<usize> = None;
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 > best.unwrap_or(limit) {
                break;
            }
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if len <= limit && best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        best
    }

    /// Length of the shortest cycle; `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        self.girth_at_most(usize::MAX / 4)
    }

    /// Shortest cycle length, looking only for cycles no longer than `limit`.
    pub fn girth_at_most(&self, limit: usize) -> Option<usize> {
        (0..self.adj.len())
            .filter_map(|v| self.shortest_cycle_from(v, limit))
            .min()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.adj.len()];
        for start in 0..self.adj.len() {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && i < index[w] {
                    g.add_edge(i, index[w]);
                }
            }
        }
        g
    }

    /// Graphviz rendering with per-vertex labels and optional fill colours.
    pub fn to_dot(&self, name: &str, labels: &[String], colours: Option<&[&str]>) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for (v, label) in labels.iter().enumerate() {
            match colours {
                Some(c) => writeln!(
                    out,
                    "  {v} [label=\"{label}\", style=filled, fillcolor={}];",
                    c[v]
                ),
                None => writeln!(out, "  {v} [label=\"{label}\"];"),
            }
            .unwrap();
        }
        for (a, ns) in self.adj.iter().enumerate() {
            let mut ns = ns.clone();
            ns.sort_unstable();
            for b in ns.into_iter().filter(|&b| a < b) {
                writeln!(out, "  {a} -- {b};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}
