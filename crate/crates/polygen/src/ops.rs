//! Combinatorial operators on face-carrying polyhedral graphs: rectification,
//! truncation and alternation. Composed, these reach every Archimedean solid
//! from the three Platonic seeds, which is how the shipped data files are
//! produced and cross-checked.

use graphcore::{dual_polyhedron, GraphError, PolyhedralGraph};
use std::collections::BTreeMap;

type Edge = (usize, usize);

fn key(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Faces through each edge; requires a closed complex.
fn faces_through(g: &PolyhedralGraph) -> Result<BTreeMap<Edge, Vec<usize>>, GraphError> {
    let faces = g.faces.as_ref().ok_or(GraphError::OpenComplex(vec![]))?;
    let mut through: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (fi, face) in faces.iter().enumerate() {
        for i in 0..face.len() {
            through
                .entry(key(face[i], face[(i + 1) % face.len()]))
                .or_default()
                .push(fi);
        }
    }
    let boundary: Vec<Edge> = through
        .iter()
        .filter(|(_, fs)| fs.len() != 2)
        .map(|(&e, _)| e)
        .collect();
    if !boundary.is_empty() {
        return Err(GraphError::OpenComplex(boundary));
    }
    Ok(through)
}

/// Cyclic order of (edge, face) incidences around each vertex.
fn vertex_stars(g: &PolyhedralGraph) -> Result<Vec<Vec<(Edge, usize)>>, GraphError> {
    let faces = g.faces.as_ref().unwrap();
    let through = faces_through(g)?;
    let mut stars = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let incident: Vec<usize> = (0..faces.len())
            .filter(|&fi| faces[fi].contains(&v))
            .collect();
        let edges_at = |fi: usize| -> [Edge; 2] {
            let face = &faces[fi];
            let i = face.iter().position(|&x| x == v).unwrap();
            let prev = face[(i + faces[fi].len() - 1) % face.len()];
            let next = face[(i + 1) % face.len()];
            [key(v, prev), key(v, next)]
        };
        let mut cycle: Vec<(Edge, usize)> = Vec::new();
        let first_face = incident[0];
        let mut enter = edges_at(first_face)[0];
        let mut cur = first_face;
        loop {
            cycle.push((enter, cur));
            let [e1, e2] = edges_at(cur);
            let exit = if e1 == enter { e2 } else { e1 };
            let fs = &through[&exit];
            let next = if fs[0] == cur { fs[1] } else { fs[0] };
            enter = exit;
            cur = next;
            if cur == first_face && enter == edges_at(first_face)[0] {
                break;
            }
            if cycle.len() > incident.len() {
                return Err(GraphError::FaceNotCycle(v));
            }
        }
        if cycle.len() != incident.len() {
            return Err(GraphError::FaceNotCycle(v));
        }
        stars.push(cycle);
    }
    Ok(stars)
}

/// Rectification: vertices become the original edges, joined when consecutive
/// around a face corner. Faces are the shrunken originals plus vertex figures.
pub fn ambo(g: &PolyhedralGraph) -> Result<PolyhedralGraph, GraphError> {
    let faces = g.faces.as_ref().ok_or(GraphError::OpenComplex(vec![]))?;
    let through = faces_through(g)?;
    let ids: BTreeMap<Edge, usize> = through.keys().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut new_faces = Vec::new();
    for face in faces {
        let cyc: Vec<usize> = (0..face.len())
            .map(|i| ids[&key(face[i], face[(i + 1) % face.len()])])
            .collect();
        new_faces.push(cyc);
    }
    for star in vertex_stars(g)? {
        new_faces.push(star.iter().map(|(e, _)| ids[e]).collect());
    }
    let mut edges = Vec::new();
    for face in &new_faces {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    PolyhedralGraph::with_faces(ids.len(), &edges, new_faces)
}

/// Truncation: one vertex per (vertex, incident edge) pair.
pub fn truncate(g: &PolyhedralGraph) -> Result<PolyhedralGraph, GraphError> {
    let faces = g.faces.as_ref().ok_or(GraphError::OpenComplex(vec![]))?;
    let stars = vertex_stars(g)?;
    let mut ids: BTreeMap<(usize, Edge), usize> = BTreeMap::new();
    for (v, star) in stars.iter().enumerate() {
        for (e, _) in star {
            let next = ids.len();
            ids.entry((v, *e)).or_insert(next);
        }
    }
    let mut new_faces = Vec::new();
    // shrunken original faces: corner (v, prev-edge), (v, next-edge) per vertex
    for face in faces {
        let mut cyc = Vec::new();
        for i in 0..face.len() {
            let prev = face[(i + face.len() - 1) % face.len()];
            let v = face[i];
            let next = face[(i + 1) % face.len()];
            cyc.push(ids[&(v, key(v, prev))]);
            cyc.push(ids[&(v, key(v, next))]);
        }
        new_faces.push(cyc);
    }
    // vertex-figure faces in star order
    for (v, star) in stars.iter().enumerate() {
        new_faces.push(star.iter().map(|(e, _)| ids[&(v, *e)]).collect());
    }
    let mut edges = Vec::new();
    for face in &new_faces {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    PolyhedralGraph::with_faces(ids.len(), &edges, new_faces)
}

/// Expansion (cantellation) as double rectification.
pub fn expand(g: &PolyhedralGraph) -> Result<PolyhedralGraph, GraphError> {
    ambo(&ambo(g)?)
}

/// Omnitruncation.
pub fn bevel(g: &PolyhedralGraph) -> Result<PolyhedralGraph, GraphError> {
    truncate(&ambo(g)?)
}

/// Alternation of a bipartite face-carrying graph: keep the color class of
/// vertex 0, join vertices two apart on each face, add a triangle for every
/// removed vertex (all removed vertices must have degree 3).
pub fn alternate(g: &PolyhedralGraph) -> Result<PolyhedralGraph, GraphError> {
    let faces = g.faces.as_ref().ok_or(GraphError::OpenComplex(vec![]))?;
    let color = graphcore::metric::bipartition(g).ok_or(GraphError::FaceNotCycle(0))?;
    let keep: Vec<usize> = (0..g.n()).filter(|&v| color[v] == 0).collect();
    let index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut new_faces = Vec::new();
    for face in faces {
        let kept: Vec<usize> = face
            .iter()
            .filter(|v| color[**v] == 0)
            .map(|v| index[v])
            .collect();
        if kept.len() >= 3 {
            new_faces.push(kept);
        }
    }
    for v in 0..g.n() {
        if color[v] == 1 {
            if g.degree(v) != 3 {
                return Err(GraphError::FaceNotCycle(v));
            }
            new_faces.push(g.neighbors(v).iter().map(|w| index[w]).collect());
        }
    }
    let mut edges = Vec::new();
    for face in faces {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 2) % face.len()]);
            if color[a] == 0 && color[b] == 0 && a != b {
                let (x, y) = (index[&a].min(index[&b]), index[&a].max(index[&b]));
                edges.push((x, y));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    PolyhedralGraph::with_faces(keep.len(), &edges, new_faces)
}

/// Snub as alternated omnitruncation.
pub fn snub(g: &PolyhedralGraph) -> Result<PolyhedralGraph, GraphError> {
    alternate(&bevel(g)?)
}

pub fn tetrahedron() -> PolyhedralGraph {
    PolyhedralGraph::with_faces(
        4,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
    .unwrap()
}

pub fn cube() -> PolyhedralGraph {
    let mut e = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                e.push((u, v));
            }
        }
    }
    PolyhedralGraph::with_faces(
        8,
        &e,
        vec![
            vec![0, 1, 3, 2],
            vec![4, 5, 7, 6],
            vec![0, 1, 5, 4],
            vec![2, 3, 7, 6],
            vec![0, 2, 6, 4],
            vec![1, 3, 7, 5],
        ],
    )
    .unwrap()
}

pub fn dodecahedron() -> PolyhedralGraph {
    // standard 20-vertex construction: outer 5-ring, two zigzag 5-rings, inner 5-ring
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer ring 0..4
        edges.push((i, 5 + i)); // spokes
        edges.push((5 + i, 10 + i));
        edges.push((5 + i, 10 + (i + 4) % 5));
        edges.push((10 + i, 15 + i));
        edges.push((15 + i, 15 + (i + 1) % 5)); // inner ring
    }
    let mut faces = vec![vec![0, 1, 2, 3, 4], vec![15, 16, 17, 18, 19]];
    for i in 0..5 {
        // faces around the outer ring
        faces.push(vec![
            i,
            (i + 1) % 5,
            5 + (i + 1) % 5,
            10 + i,
            5 + i,
        ]);
        // faces around the inner ring
        faces.push(vec![
            15 + i,
            15 + (i + 4) % 5,
            10 + (i + 4) % 5,
            5 + i,
            10 + i,
        ]);
    }
    PolyhedralGraph::with_faces(20, &edges, faces).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::{all_pairs_distances, diameter};

    fn face_vec(g: &PolyhedralGraph) -> Vec<usize> {
        g.face_vector().unwrap()
    }

    #[test]
    fn seeds_are_valid() {
        for g in [tetrahedron(), cube(), dodecahedron()] {
            g.check_faces().unwrap();
            g.check_euler().unwrap();
            assert!(g.boundary_edges().is_empty());
        }
        assert_eq!(diameter(&dodecahedron()).unwrap(), 5);
    }

    #[test]
    fn ambo_cube_is_cuboctahedron() {
        let cbt = ambo(&cube()).unwrap();
        assert_eq!(cbt.n(), 12);
        assert_eq!(cbt.edge_count(), 24);
        let fv = face_vec(&cbt);
        assert_eq!(fv.iter().filter(|&&s| s == 3).count(), 8);
        assert_eq!(fv.iter().filter(|&&s| s == 4).count(), 6);
        assert_eq!(diameter(&cbt).unwrap(), 3);
    }

    #[test]
    fn truncate_octahedron_properties() {
        let oct = dual_polyhedron(&cube()).unwrap();
        let troct = truncate(&oct).unwrap();
        assert_eq!(troct.n(), 24);
        assert_eq!(troct.edge_count(), 36);
        let fv = face_vec(&troct);
        assert_eq!(fv.iter().filter(|&&s| s == 4).count(), 6);
        assert_eq!(fv.iter().filter(|&&s| s == 6).count(), 8);
        assert_eq!(diameter(&troct).unwrap(), 6);
        assert!(graphcore::is_bipartite(&troct).0);
    }

    #[test]
    fn expand_cube_is_rhombicuboctahedron() {
        let rcbt = expand(&cube()).unwrap();
        assert_eq!(rcbt.n(), 24);
        assert_eq!(rcbt.edge_count(), 48);
        let fv = face_vec(&rcbt);
        assert_eq!(fv.iter().filter(|&&s| s == 3).count(), 8);
        assert_eq!(fv.iter().filter(|&&s| s == 4).count(), 18);
        assert_eq!(diameter(&rcbt).unwrap(), 5);
    }

    #[test]
    fn bevel_cube_is_truncated_cuboctahedron() {
        let t = bevel(&cube()).unwrap();
        assert_eq!(t.n(), 48);
        assert_eq!(t.edge_count(), 72);
        let fv = face_vec(&t);
        assert_eq!(fv.iter().filter(|&&s| s == 4).count(), 12);
        assert_eq!(fv.iter().filter(|&&s| s == 6).count(), 8);
        assert_eq!(fv.iter().filter(|&&s| s == 8).count(), 6);
        assert_eq!(diameter(&t).unwrap(), 9);
    }

    #[test]
    fn snub_cube_shape() {
        let s = snub(&cube()).unwrap();
        assert_eq!(s.n(), 24);
        assert_eq!(s.edge_count(), 60);
        let fv = face_vec(&s);
        assert_eq!(fv.iter().filter(|&&s| s == 3).count(), 32);
        assert_eq!(fv.iter().filter(|&&s| s == 4).count(), 6);
        assert_eq!(diameter(&s).unwrap(), 4);
        // vertex configuration 3.3.3.3.4 -> 5-regular
        assert!(s.degree_sequence().iter().all(|&d| d == 5));
        s.check_euler().unwrap();
    }

    #[test]
    fn snub_dodecahedron_shape() {
        let s = snub(&dodecahedron()).unwrap();
        assert_eq!(s.n(), 60);
        assert_eq!(s.edge_count(), 150);
        assert_eq!(diameter(&s).unwrap(), 7);
    }

    #[test]
    fn truncated_icosahedron_shape() {
        let icosa = dual_polyhedron(&dodecahedron()).unwrap();
        let t = truncate(&icosa).unwrap();
        assert_eq!(t.n(), 60);
        let fv = face_vec(&t);
        assert_eq!(fv.iter().filter(|&&s| s == 5).count(), 12);
        assert_eq!(fv.iter().filter(|&&s| s == 6).count(), 20);
        assert_eq!(diameter(&t).unwrap(), 9);
        let d = all_pairs_distances(&t).unwrap();
        assert!(d.check_metric());
    }
}
