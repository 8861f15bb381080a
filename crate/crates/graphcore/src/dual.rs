//! Combinatorial dual of a polyhedral graph: vertices become faces and vice
//! versa. Requires a closed 2-complex (every edge on exactly two faces).

use crate::graph::{GraphError, PolyhedralGraph};
use std::collections::BTreeMap;

/// Dual graph with dual faces (the vertex stars of the input). The double
/// dual is isomorphic to the input for every catalog polyhedron.
pub fn dual_polyhedron(g: &PolyhedralGraph) -> Result<PolyhedralGraph, GraphError> {
    let faces = g
        .faces
        .as_ref()
        .ok_or(GraphError::OpenComplex(Vec::new()))?;
    g.check_faces()?;
    let boundary = g.boundary_edges();
    if !boundary.is_empty() {
        return Err(GraphError::OpenComplex(boundary));
    }

    // each edge -> the two faces through it
    let mut through: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (fi, face) in faces.iter().enumerate() {
        for k in 0..face.len() {
            let u = face[k];
            let v = face[(k + 1) % face.len()];
            through.entry((u.min(v), u.max(v))).or_default().push(fi);
        }
    }

    let mut dual_edges = Vec::new();
    for fs in through.values() {
        debug_assert_eq!(fs.len(), 2);
        dual_edges.push((fs[0], fs[1]));
    }

    // dual faces = vertex stars: walk the faces around each vertex, hopping
    // across incident edges
    let mut dual_faces = Vec::new();
    for v in 0..g.n() {
        let incident: Vec<usize> = (0..faces.len())
            .filter(|&fi| faces[fi].contains(&v))
            .collect();
        if incident.is_empty() {
            continue;
        }
        // within face fi, vertex v has two incident face-boundary edges
        let edges_at = |fi: usize| -> [(usize, usize); 2] {
            let face = &faces[fi];
            let i = face.iter().position(|&x| x == v).unwrap();
            let prev = face[(i + face.len() - 1) % face.len()];
            let next = face[(i + 1) % face.len()];
            [
                (v.min(prev), v.max(prev)),
                (v.min(next), v.max(next)),
            ]
        };
        let mut cycle = vec![incident[0]];
        let mut enter = edges_at(incident[0])[0];
        loop {
            let cur = *cycle.last().unwrap();
            let [e1, e2] = edges_at(cur);
            let exit = if e1 == enter { e2 } else { e1 };
            let fs = &through[&exit];
            let next = if fs[0] == cur { fs[1] } else { fs[0] };
            if next == cycle[0] {
                break;
            }
            cycle.push(next);
            enter = exit;
            if cycle.len() > incident.len() {
                return Err(GraphError::FaceNotCycle(v));
            }
        }
        if cycle.len() != incident.len() {
            // star does not close into a single cycle
            return Err(GraphError::FaceNotCycle(v));
        }
        dual_faces.push(cycle);
    }

    PolyhedralGraph::with_faces(faces.len(), &dual_edges, dual_faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::isomorphic;

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
        let faces = vec![
            vec![0, 1, 3, 2],
            vec![4, 5, 7, 6],
            vec![0, 1, 5, 4],
            vec![2, 3, 7, 6],
            vec![0, 2, 6, 4],
            vec![1, 3, 7, 5],
        ];
        PolyhedralGraph::with_faces(8, &e, faces).unwrap()
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let d = dual_polyhedron(&cube()).unwrap();
        assert_eq!(d.n(), 6);
        assert!(d.degree_sequence().iter().all(|&k| k == 4));
        assert_eq!(d.faces.as_ref().unwrap().len(), 8);
        d.check_euler().unwrap();
    }

    #[test]
    fn dual_is_involution_on_cube() {
        let d = dual_polyhedron(&cube()).unwrap();
        let dd = dual_polyhedron(&d).unwrap();
        assert!(isomorphic(&cube(), &dd).unwrap().is_some());
    }

    #[test]
    fn open_complex_lists_boundary() {
        let mut g = cube();
        g.faces.as_mut().unwrap().pop();
        match dual_polyhedron(&g) {
            Err(GraphError::OpenComplex(edges)) => assert_eq!(edges.len(), 4),
            other => panic!("expected open complex, got {other:?}"),
        }
    }
}
