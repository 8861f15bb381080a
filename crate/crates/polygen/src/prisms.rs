//! Parametric prism and antiprism skeletons and the Cartesian graph product.

use graphcore::{GraphError, PolyhedralGraph};

/// n-gonal prism: 2n vertices, top ring 0..n, bottom ring n..2n.
pub fn prism(n: usize) -> Result<PolyhedralGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::Empty);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    let mut faces = vec![
        (0..n).collect::<Vec<_>>(),
        (0..n).map(|i| n + i).collect::<Vec<_>>(),
    ];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + j, n + i]);
    }
    PolyhedralGraph::with_faces(2 * n, &edges, faces)
}

/// n-gonal antiprism; antiprism(3) is the octahedron.
pub fn antiprism(n: usize) -> Result<PolyhedralGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::Empty);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
        edges.push((i, n + (i + n - 1) % n));
    }
    let mut faces = vec![
        (0..n).collect::<Vec<_>>(),
        (0..n).map(|i| n + i).collect::<Vec<_>>(),
    ];
    for i in 0..n {
        faces.push(vec![i, (i + 1) % n, n + i]);
        faces.push(vec![i, n + i, n + (i + n - 1) % n]);
    }
    PolyhedralGraph::with_faces(2 * n, &edges, faces)
}

/// Cartesian product: vertices are pairs, edges change one coordinate along
/// an edge of that factor; distances add.
pub fn product(g1: &PolyhedralGraph, g2: &PolyhedralGraph) -> PolyhedralGraph {
    let (n1, n2) = (g1.n(), g2.n());
    let id = |a: usize, b: usize| a * n2 + b;
    let mut edges = Vec::new();
    for a in 0..n1 {
        for &(b, c) in g2.edges() {
            edges.push((id(a, b), id(a, c)));
        }
    }
    for b in 0..n2 {
        for &(a, c) in g1.edges() {
            edges.push((id(a, b), id(c, b)));
        }
    }
    PolyhedralGraph::new(n1 * n2, &edges).expect("product of simple graphs is simple")
}

pub fn k2() -> PolyhedralGraph {
    PolyhedralGraph::new(2, &[(0, 1)]).unwrap()
}

pub fn cycle(n: usize) -> PolyhedralGraph {
    PolyhedralGraph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::{all_pairs_distances, diameter, isomorphic};

    #[test]
    fn prism_shapes() {
        let p3 = prism(3).unwrap();
        assert_eq!((p3.n(), p3.edge_count()), (6, 9));
        assert_eq!(diameter(&p3).unwrap(), 2);
        assert_eq!(diameter(&prism(6).unwrap()).unwrap(), 4);
        assert!(prism(2).is_err());
    }

    #[test]
    fn antiprism_shapes() {
        let a4 = antiprism(4).unwrap();
        assert_eq!((a4.n(), a4.edge_count()), (8, 16));
        // antiprism(3) = octahedron: 4-regular on 6 vertices
        let a3 = antiprism(3).unwrap();
        assert!(a3.degree_sequence().iter().all(|&d| d == 4));
    }

    #[test]
    fn k2_times_c4_is_cube() {
        let g = product(&k2(), &cycle(4));
        let cube = crate::ops::cube();
        assert!(isomorphic(&g, &cube).unwrap().is_some());
    }

    #[test]
    fn c6_times_k2_is_prism6() {
        let g = product(&cycle(6), &k2());
        assert!(isomorphic(&g, &prism(6).unwrap()).unwrap().is_some());
    }

    #[test]
    fn product_metric_law_exhaustive() {
        // d_{G x H} = d_G + d_H for a mix of factors, all pairs
        let cases = [
            (cycle(5), prism(3).unwrap()),
            (cycle(4), cycle(6)),
            (k2(), crate::ops::tetrahedron()),
        ];
        for (g1, g2) in cases {
            let p = product(&g1, &g2);
            assert!(p.n() <= 400);
            let d1 = all_pairs_distances(&g1).unwrap();
            let d2 = all_pairs_distances(&g2).unwrap();
            let dp = all_pairs_distances(&p).unwrap();
            let n2 = g2.n();
            for a in 0..g1.n() {
                for b in 0..n2 {
                    for c in 0..g1.n() {
                        for e in 0..n2 {
                            assert_eq!(
                                dp.get(a * n2 + b, c * n2 + e),
                                d1.get(a, c) + d2.get(b, e)
                            );
                        }
                    }
                }
            }
        }
    }
}
