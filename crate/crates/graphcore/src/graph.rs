//! The universal finite-graph object consumed by every decider: a simple
//! connected graph with optional 2-face lists, exact coordinates and
//! per-vertex labels.

use crate::rat::Rat;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Loop(usize),
    DuplicateEdge(usize, usize),
    VertexOutOfRange(usize, usize),
    Disconnected(usize, usize),
    EdgeNotOnFace(usize, usize),
    FaceNotCycle(usize),
    EdgeOnWrongFaceCount { u: usize, v: usize, count: usize },
    OpenComplex(Vec<(usize, usize)>),
    EulerMismatch { v: usize, e: usize, f: usize },
    Empty,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Loop(v) => write!(f, "loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u},{v})"),
            GraphError::VertexOutOfRange(v, n) => write!(f, "vertex {v} out of range (n={n})"),
            GraphError::Disconnected(u, v) => {
                write!(f, "graph is disconnected: no path between {u} and {v}")
            }
            GraphError::EdgeNotOnFace(u, v) => write!(f, "edge ({u},{v}) lies on no face"),
            GraphError::FaceNotCycle(i) => write!(f, "face {i} is not a simple cycle"),
            GraphError::EdgeOnWrongFaceCount { u, v, count } => {
                write!(f, "edge ({u},{v}) lies on {count} faces, expected 2")
            }
            GraphError::OpenComplex(edges) => write!(f, "open complex, boundary edges {edges:?}"),
            GraphError::EulerMismatch { v, e, f: fc } => {
                write!(f, "Euler check failed: V={v} E={e} F={fc}")
            }
            GraphError::Empty => write!(f, "empty graph"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Finite simple graph over vertices `0..n`, optionally carrying 2-faces as
/// cyclic vertex sequences, exact rational coordinates and vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    pub faces: Option<Vec<Vec<usize>>>,
    pub coords: Option<Vec<Vec<Rat>>>,
    pub labels: Option<Vec<String>>,
}

impl PolyhedralGraph {
    /// Builds and validates a simple graph; edges are deduplicated order-free.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<PolyhedralGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for &(u, v) in edge_list {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push(key);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        edges.sort_unstable();
        Ok(PolyhedralGraph {
            n,
            adj,
            edges,
            faces: None,
            coords: None,
            labels: None,
        })
    }

    pub fn with_faces(
        n: usize,
        edge_list: &[(usize, usize)],
        faces: Vec<Vec<usize>>,
    ) -> Result<PolyhedralGraph, GraphError> {
        let mut g = PolyhedralGraph::new(n, edge_list)?;
        g.faces = Some(faces);
        g.check_faces()?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Face vector sorted by face size, e.g. cube -> [4,4,4,4,4,4].
    pub fn face_vector(&self) -> Option<Vec<usize>> {
        self.faces.as_ref().map(|fs| {
            let mut v: Vec<usize> = fs.iter().map(|f| f.len()).collect();
            v.sort_unstable();
            v
        })
    }

    pub fn is_connected(&self) -> bool {
        self.component_witness().is_none()
    }

    /// Returns a pair of vertices in different components, if any.
    pub fn component_witness(&self) -> Option<(usize, usize)> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|s| !s).map(|v| (0, v))
    }

    /// Validates the face data: every face a simple cycle consistent with
    /// adjacency, every edge on at least one face.
    pub fn check_faces(&self) -> Result<(), GraphError> {
        let faces = match &self.faces {
            Some(f) => f,
            None => return Ok(()),
        };
        let mut on_face = BTreeSet::new();
        for (i, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(GraphError::FaceNotCycle(i));
            }
            let distinct: BTreeSet<_> = face.iter().collect();
            if distinct.len() != face.len() {
                return Err(GraphError::FaceNotCycle(i));
            }
            for k in 0..face.len() {
                let u = face[k];
                let v = face[(k + 1) % face.len()];
                if u >= self.n || v >= self.n {
                    return Err(GraphError::VertexOutOfRange(u.max(v), self.n));
                }
                if !self.has_edge(u, v) {
                    return Err(GraphError::FaceNotCycle(i));
                }
                on_face.insert((u.min(v), u.max(v)));
            }
        }
        for &(u, v) in &self.edges {
            if !on_face.contains(&(u, v)) {
                return Err(GraphError::EdgeNotOnFace(u, v));
            }
        }
        Ok(())
    }

    /// `V - E + F = 2` for face-carrying polyhedral graphs.
    pub fn check_euler(&self) -> Result<(), GraphError> {
        if let Some(faces) = &self.faces {
            let (v, e, f) = (self.n, self.edges.len(), faces.len());
            if v + f != e + 2 {
                return Err(GraphError::EulerMismatch { v, e, f });
            }
        }
        Ok(())
    }

    /// Number of times each edge occurs on a face; dual construction requires
    /// exactly 2 everywhere (a closed 2-complex).
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        let mut count = std::collections::BTreeMap::new();
        if let Some(faces) = &self.faces {
            for face in faces {
                for k in 0..face.len() {
                    let u = face[k];
                    let v = face[(k + 1) % face.len()];
                    *count.entry((u.min(v), u.max(v))).or_insert(0usize) += 1;
                }
            }
        }
        self.edges
            .iter()
            .filter(|e| count.get(e).copied().unwrap_or(0) != 2)
            .copied()
            .collect()
    }

    /// Induced subgraph on `keep` (old indices, deduplicated order kept);
    /// returns the graph and the old-index list.
    pub fn induced(&self, keep: &[usize]) -> (PolyhedralGraph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        let mut old = Vec::new();
        for &v in keep {
            if index[v] == usize::MAX {
                index[v] = old.len();
                old.push(v);
            }
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        let mut g = PolyhedralGraph::new(old.len(), &edges).expect("induced subgraph is valid");
        if let Some(labels) = &self.labels {
            g.labels = Some(old.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, old)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn cube() -> PolyhedralGraph {
        // vertices = bits of 0..8, edges between Hamming-1 pairs
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
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            PolyhedralGraph::new(2, &[(0, 0)]),
            Err(GraphError::Loop(0))
        ));
        assert!(matches!(
            PolyhedralGraph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn cube_faces_and_euler() {
        let g = cube();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 12);
        g.check_faces().unwrap();
        g.check_euler().unwrap();
        assert!(g.boundary_edges().is_empty());
    }

    #[test]
    fn detects_open_complex() {
        let mut g = cube();
        let faces = g.faces.as_mut().unwrap();
        faces.pop();
        assert_eq!(g.boundary_edges().len(), 4);
    }
}
