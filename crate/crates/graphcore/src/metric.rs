//! Exact shortest-path metrics. Distances are integers throughout; no
//! floating point enters any metric computation.

use crate::graph::{GraphError, PolyhedralGraph};

/// Symmetric nonnegative integer distance matrix with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn from_rows(n: usize, d: Vec<u16>) -> DistanceMatrix {
        assert_eq!(d.len(), n * n);
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn max(&self) -> u16 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Pairs at distance 1; these are exactly the graph edges.
    pub fn unit_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.get(u, v) == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Exhaustive triangle-inequality check, used by the invariant suite.
    pub fn check_metric(&self) -> bool {
        for u in 0..self.n {
            if self.get(u, u) != 0 {
                return false;
            }
            for v in 0..self.n {
                if self.get(u, v) != self.get(v, u) {
                    return false;
                }
                for w in 0..self.n {
                    if self.get(u, w) > self.get(u, v) + self.get(v, w) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn bfs_row(g: &PolyhedralGraph, src: usize, out: &mut [u16]) {
    out.fill(u16::MAX);
    out[src] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(src);
    while let Some(v) = queue.pop_front() {
        let dv = out[v];
        for &w in g.neighbors(v) {
            if out[w] == u16::MAX {
                out[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
}

/// BFS from every vertex. Errors with a separated pair on disconnected input.
pub fn all_pairs_distances(g: &PolyhedralGraph) -> Result<DistanceMatrix, GraphError> {
    let n = g.n();
    let mut d = vec![0u16; n * n];
    for v in 0..n {
        bfs_row(g, v, &mut d[v * n..(v + 1) * n]);
    }
    if let Some(far) = d.iter().position(|&x| x == u16::MAX) {
        return Err(GraphError::Disconnected(far / n, far % n));
    }
    Ok(DistanceMatrix { n, d })
}

pub fn diameter(g: &PolyhedralGraph) -> Result<u16, GraphError> {
    Ok(all_pairs_distances(g)?.max())
}

/// 2-colorability; on failure returns an odd closed walk witness (a cycle).
pub fn is_bipartite(g: &PolyhedralGraph) -> (bool, Option<Vec<usize>>) {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    // walk both endpoints up to the root and splice the paths
                    let path_to_root = |mut x: usize| {
                        let mut p = vec![x];
                        while parent[x] != usize::MAX {
                            x = parent[x];
                            p.push(x);
                        }
                        p
                    };
                    let pv = path_to_root(v);
                    let pw = path_to_root(w);
                    // drop the common tail; pv[i] is then the deepest common
                    // ancestor and pw[0..j] the disjoint part of w's path
                    let mut i = pv.len();
                    let mut j = pw.len();
                    while i > 0 && j > 0 && pv[i - 1] == pw[j - 1] {
                        i -= 1;
                        j -= 1;
                    }
                    let lca_idx = i.min(pv.len() - 1);
                    let mut cycle: Vec<usize> = pv[..=lca_idx].to_vec();
                    let mut back: Vec<usize> = pw[..j].to_vec();
                    back.reverse();
                    cycle.extend(back);
                    return (false, Some(cycle));
                }
            }
        }
    }
    (true, None)
}

/// Bipartition colors when bipartite.
pub fn bipartition(g: &PolyhedralGraph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(0usize);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if color[w] == u8::MAX {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if color[w] == color[v] {
                return None;
            }
        }
    }
    Some(color)
}

/// Induced subgraph on the ball of radius `r` around `v`; the root is marked
/// with label "root". Returns the graph and the old-vertex map.
pub fn rooted_ball(g: &PolyhedralGraph, v: usize, r: u16) -> (PolyhedralGraph, Vec<usize>) {
    let n = g.n();
    let mut dist = vec![u16::MAX; n];
    bfs_row(g, v, &mut dist);
    let keep: Vec<usize> = (0..n).filter(|&w| dist[w] <= r).collect();
    let (mut ball, old) = g.induced(&keep);
    let mut labels = vec![String::new(); old.len()];
    for (i, &w) in old.iter().enumerate() {
        if w == v {
            labels[i] = "root".to_string();
        }
    }
    ball.labels = Some(labels);
    (ball, old)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> PolyhedralGraph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        PolyhedralGraph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> PolyhedralGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        PolyhedralGraph::new(n, &e).unwrap()
    }

    fn cube() -> PolyhedralGraph {
        let mut e = Vec::new();
        for u in 0..8usize {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    e.push((u, v));
                }
            }
        }
        PolyhedralGraph::new(8, &e).unwrap()
    }

    #[test]
    fn path_end_to_end() {
        let d = all_pairs_distances(&path(3)).unwrap();
        assert_eq!(d.get(0, 2), 2);
    }

    #[test]
    fn cube_diameter_three() {
        assert_eq!(diameter(&cube()).unwrap(), 3);
    }

    #[test]
    fn single_vertex_diameter_zero() {
        let g = PolyhedralGraph::new(1, &[]).unwrap();
        assert_eq!(diameter(&g).unwrap(), 0);
    }

    #[test]
    fn disconnected_names_pair() {
        let g = PolyhedralGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        match all_pairs_distances(&g) {
            Err(GraphError::Disconnected(u, v)) => {
                // the named pair really is separated
                assert!((u < 2) != (v < 2));
            }
            other => panic!("expected disconnected error, got {other:?}"),
        }
    }

    #[test]
    fn bipartite_cube_and_odd_cycle_witness() {
        assert!(is_bipartite(&cube()).0);
        let (ok, witness) = is_bipartite(&cycle(5));
        assert!(!ok);
        let w = witness.unwrap();
        assert_eq!(w.len() % 2, 1);
        // witness is a closed odd walk along edges
        let g = cycle(5);
        for i in 0..w.len() {
            assert!(g.has_edge(w[i], w[(i + 1) % w.len()]));
        }
    }

    #[test]
    fn tetrahedron_not_bipartite() {
        let g = PolyhedralGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (ok, witness) = is_bipartite(&g);
        assert!(!ok);
        assert_eq!(witness.unwrap().len(), 3);
    }

    #[test]
    fn grid_center_ball_is_star() {
        // 3x3 grid patch, center = vertex 4
        let mut e = Vec::new();
        for y in 0..3usize {
            for x in 0..3usize {
                let v = y * 3 + x;
                if x + 1 < 3 {
                    e.push((v, v + 1));
                }
                if y + 1 < 3 {
                    e.push((v, v + 3));
                }
            }
        }
        let g = PolyhedralGraph::new(9, &e).unwrap();
        let (ball, _) = rooted_ball(&g, 4, 1);
        assert_eq!(ball.n(), 5);
        let mut deg = ball.degree_sequence();
        deg.sort_unstable();
        assert_eq!(deg, vec![1, 1, 1, 1, 4]); // K_{1,4}
    }

    #[test]
    fn metric_axioms_small() {
        for g in [path(6), cycle(7), cube()] {
            let d = all_pairs_distances(&g).unwrap();
            assert!(d.check_metric());
            // d(u,v)=1 iff edge
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                }
            }
        }
    }
}
