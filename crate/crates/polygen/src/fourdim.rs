//! Exact vertex sets of the 600-cell, snub 24-cell and Grand Antiprism, and
//! their min-distance skeletons. All coordinates live in Q(sqrt 5); edges are
//! pairs at the minimum squared distance, computed exactly.

use crate::quadratic::QuadraticNumber as Q;
use graphcore::{GraphError, PolyhedralGraph};

pub type Point4 = [Q; 4];

#[derive(Clone, Debug)]
pub struct VertexSet4D {
    pub points: Vec<Point4>,
    /// squared edge length (minimum over distinct pairs)
    pub edge_sq: Q,
}

fn dist_sq(p: &Point4, q: &Point4) -> Q {
    let mut s = Q::zero();
    for k in 0..4 {
        let d = p[k] - q[k];
        s = s + d * d;
    }
    s
}

fn dot(p: &Point4, q: &Point4) -> Q {
    let mut s = Q::zero();
    for k in 0..4 {
        s = s + p[k] * q[k];
    }
    s
}

/// Even permutations of S4 as index arrays.
const EVEN_PERMS: [[usize; 4]; 12] = [
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 2, 1, 0],
];

fn canonical(points: Vec<Point4>) -> Vec<Point4> {
    let mut pts = points;
    pts.sort();
    pts.dedup();
    pts
}

/// The 96 vertices obtained as even permutations of (±φ, ±1, ±1/φ, 0)/2.
fn even_perm_orbit() -> Vec<Point4> {
    let phi2 = Q::new(1, 1, 4); // φ/2
    let one2 = Q::new(2, 0, 4); // 1/2
    let inv2 = Q::new(-1, 1, 4); // 1/(2φ) = (φ-1)/2
    let zero = Q::zero();
    let mut out = Vec::new();
    for perm in EVEN_PERMS {
        for s in 0..8u32 {
            let mut base = [phi2, one2, inv2, zero];
            for (bit, val) in base.iter_mut().take(3).enumerate() {
                if s >> bit & 1 == 1 {
                    *val = -*val;
                }
            }
            let mut p = [zero; 4];
            for k in 0..4 {
                p[perm[k]] = base[k];
            }
            out.push(p);
        }
    }
    canonical(out)
}

/// 600-cell: 120 vertices at circumradius 1.
pub fn cell600() -> VertexSet4D {
    let half = Q::new(2, 0, 4);
    let one = Q::int(1);
    let zero = Q::zero();
    let mut pts = Vec::new();
    // 16 half-integer points
    for s in 0..16u32 {
        let mut p = [half; 4];
        for (k, val) in p.iter_mut().enumerate() {
            if s >> k & 1 == 1 {
                *val = -*val;
            }
        }
        pts.push(p);
    }
    // 8 unit points
    for k in 0..4 {
        for sign in [1i64, -1] {
            let mut p = [zero; 4];
            p[k] = if sign == 1 { one } else { -one };
            pts.push(p);
        }
    }
    pts.extend(even_perm_orbit());
    let pts = canonical(pts);
    assert_eq!(pts.len(), 120, "600-cell vertex count");
    with_min_edge(pts)
}

/// Snub 24-cell: the even-permutation orbit alone (600-cell minus a 24-cell).
pub fn snub24cell() -> VertexSet4D {
    let pts = even_perm_orbit();
    assert_eq!(pts.len(), 96, "snub 24-cell vertex count");
    with_min_edge(pts)
}

fn with_min_edge(points: Vec<Point4>) -> VertexSet4D {
    let mut min: Option<Q> = None;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = dist_sq(&points[i], &points[j]);
            assert!(d.sign() > 0, "coincident points");
            min = Some(match min {
                None => d,
                Some(m) => {
                    if d < m {
                        d
                    } else {
                        m
                    }
                }
            });
        }
    }
    VertexSet4D {
        points,
        edge_sq: min.expect("at least two points"),
    }
}

/// Min-distance graph; every 3-clique is recorded as a triangular face.
pub fn skeleton(vs: &VertexSet4D) -> Result<PolyhedralGraph, GraphError> {
    let n = vs.points.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if dist_sq(&vs.points[i], &vs.points[j]) == vs.edge_sq {
                edges.push((i, j));
            }
        }
    }
    let mut g = PolyhedralGraph::new(n, &edges)?;
    if let Some((u, v)) = g.component_witness() {
        return Err(GraphError::Disconnected(u, v));
    }
    let mut faces = Vec::new();
    for &(i, j) in g.edges() {
        for &k in g.neighbors(j) {
            if k > j && g.has_edge(i, k) && i < j {
                faces.push(vec![i, j, k]);
            }
        }
    }
    g.faces = Some(faces);
    Ok(g)
}

/// Grand Antiprism: the 600-cell minus two orthogonal great decagons, found
/// programmatically. Continuing a geodesic from edge (u,v) means taking
/// w = φ·v − u, the exact 36-degree rotation in the great-circle plane.
pub fn grand_antiprism() -> VertexSet4D {
    let c600 = cell600();
    let pts = &c600.points;
    let n = pts.len();
    let phi = Q::phi();
    let find = |p: &Point4| pts.iter().position(|q| q == p);

    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && dist_sq(&pts[i], &pts[j]) == c600.edge_sq)
                .collect()
        })
        .collect();

    // first ring: start from the lexicographically least vertex and its least
    // neighbor, then rotate by 36 degrees nine times
    let v0 = 0usize;
    let v1 = adjacency[v0][0];
    let mut ring_a = vec![v0, v1];
    loop {
        let k = ring_a.len();
        let (prev, cur) = (ring_a[k - 2], ring_a[k - 1]);
        let mut w = [Q::zero(); 4];
        for t in 0..4 {
            w[t] = phi * pts[cur][t] - pts[prev][t];
        }
        let wi = find(&w).expect("geodesic continuation is a vertex");
        if wi == ring_a[0] {
            break;
        }
        ring_a.push(wi);
    }
    assert_eq!(ring_a.len(), 10, "great decagon length");

    // orthogonal ring: all vertices orthogonal to the whole first ring
    let ring_b: Vec<usize> = (0..n)
        .filter(|&i| ring_a.iter().all(|&a| dot(&pts[i], &pts[a]).is_zero()))
        .collect();
    assert_eq!(ring_b.len(), 10, "orthogonal decagon length");

    let removed: std::collections::BTreeSet<usize> =
        ring_a.iter().chain(ring_b.iter()).copied().collect();
    assert_eq!(removed.len(), 20);
    let points: Vec<Point4> = (0..n)
        .filter(|i| !removed.contains(i))
        .map(|i| pts[i])
        .collect();
    assert_eq!(points.len(), 100, "grand antiprism vertex count");
    with_min_edge(points)
}

impl PartialEq for VertexSet4D {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.edge_sq == other.edge_sq
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::{all_pairs_distances, diameter};

    #[test]
    fn cell600_is_12_regular_with_720_edges() {
        let g = skeleton(&cell600()).unwrap();
        assert_eq!(g.n(), 120);
        assert_eq!(g.edge_count(), 720);
        assert!(g.degree_sequence().iter().all(|&d| d == 12));
    }

    #[test]
    fn cell600_diameter_and_connectivity() {
        let g = skeleton(&cell600()).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        assert!(d.max() <= 10);
        // recorded by this oracle run: antipodal pairs sit at graph distance 5
        assert_eq!(d.max(), 5);
    }

    #[test]
    fn snub24_is_9_regular() {
        let g = skeleton(&snub24cell()).unwrap();
        assert_eq!(g.n(), 96);
        assert_eq!(g.edge_count(), 432);
        assert!(g.degree_sequence().iter().all(|&d| d == 9));
    }

    #[test]
    fn grand_antiprism_counts() {
        let ga = grand_antiprism();
        let g = skeleton(&ga).unwrap();
        assert_eq!(g.n(), 100);
        assert_eq!(g.edge_count(), 500);
        assert!(diameter(&g).is_ok());
    }

    #[test]
    fn edge_lengths_match_between_families() {
        // snub 24-cell and grand antiprism inherit the 600-cell edge length
        let e = cell600().edge_sq;
        assert_eq!(snub24cell().edge_sq, e);
        assert_eq!(grand_antiprism().edge_sq, e);
        // edge^2 = 2 - φ at circumradius 1
        assert_eq!(e, Q::int(2) - Q::phi());
    }
}
