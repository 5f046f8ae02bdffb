//! The plane graph of a segment family and 3-connectivity.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{Pt, SegmentFamily};

/// Vertices are the segment endpoints, which include every point where an
/// endpoint of one segment lies on another. Edges are the pieces of the
/// segments between consecutive vertices. Extra points are not vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometricGraph {
    pub vertices: Vec<Pt>,
    pub edges: Vec<(usize, usize)>,
}

pub fn build_geometric_graph(f: &SegmentFamily) -> GeometricGraph {
    let vertices = f.endpoints();
    let mut edges = BTreeSet::new();
    for s in &f.segments {
        let mut on: Vec<(crate::quad::Rat, usize)> =
            vertices.iter().enumerate().filter(|(_, v)| s.contains(v)).map(|(i, v)| (s.param(v), i)).collect();
        on.sort_by(|a, b| crate::quad::rat_cmp(&a.0, &b.0));
        for w in on.windows(2) {
            let (a, b) = (w[0].1, w[1].1);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    GeometricGraph { vertices, edges: edges.into_iter().collect() }
}

impl GeometricGraph {
    pub fn is_3_connected(&self) -> bool {
        is_3_connected_edges(self.vertices.len(), &self.edges)
    }

    pub fn canonical_form(&self) -> Vec<(usize, usize)> {
        canonical_form(self.vertices.len(), &self.edges)
    }
}

pub fn is_3_connected(g: &GeometricGraph) -> bool {
    g.is_3_connected()
}

fn connected_without(n: usize, edges: &[(usize, usize)], removed: &[usize]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let alive = |v: usize| !removed.contains(&v);
    let Some(start) = (0..n).find(|&v| alive(v)) else { return true };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if alive(w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).all(|v| !alive(v) || seen[v])
}

/// At least four vertices and connected after deleting any one or two.
pub fn is_3_connected_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 4 || !connected_without(n, edges, &[]) {
        return false;
    }
    (0..n).all(|a| connected_without(n, edges, &[a]) && (a + 1..n).all(|b| connected_without(n, edges, &[a, b])))
}

/// Lexicographically least sorted edge list over all relabelings that list
/// vertices by nondecreasing degree. Equal forms mean isomorphic graphs.
pub fn canonical_form(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_deg: Vec<usize> = (0..n).collect();
    by_deg.sort_by_key(|&v| deg[v]);
    for v in by_deg {
        match classes.last_mut() {
            Some(c) if deg[c[0]] == deg[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut order = Vec::with_capacity(n);
    search(&classes, 0, &mut order, edges, &mut best);
    best.unwrap_or_default()
}

fn search(
    classes: &[Vec<usize>],
    c: usize,
    order: &mut Vec<usize>,
    edges: &[(usize, usize)],
    best: &mut Option<Vec<(usize, usize)>>,
) {
    if c == classes.len() {
        let mut label = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let mut form: Vec<(usize, usize)> =
            edges.iter().map(|&(a, b)| (label[a].min(label[b]), label[a].max(label[b]))).collect();
        form.sort();
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    }
    permute(&classes[c], &mut Vec::new(), &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        search(classes, c + 1, order, edges, best);
        order.truncate(len);
    });
}

fn permute(items: &[usize], prefix: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if prefix.len() == items.len() {
        visit(prefix);
        return;
    }
    for &x in items {
        if !prefix.contains(&x) {
            prefix.push(x);
            permute(items, prefix, visit);
            prefix.pop();
        }
    }
}
