//! Constructive graph layer.
//!
//! A triangulation is stored as a rotation system: for every vertex, the
//! cyclic list of its neighbours in counter-clockwise order. Faces are never
//! stored; they are traced from the rotations on demand. The submodules
//! provide construction from an index-vector ([`build`]), the nonsingular
//! 4-colouring and Kempe machinery, edge-class decomposition and
//! index-vector measurement, and canonical forms for isomorphism testing.

mod build;
mod canon;
mod classes;
mod coloring;

pub use build::build;
pub use canon::{canonical_form, canonical_form_hex, is_isomorphic, is_isomorphic_oriented};
pub use classes::{
    billiard_crossings, branch_index, classify_edges, factor_structure, index_vectors_from_graph,
    measure_class_indices, measure_offset, ClassFactor, ClassMeasure, DirectedClassPath,
    EdgeClassification,
};
pub use coloring::{
    is_akempic_bruteforce, is_nonsingular, is_proper_coloring, kempe_closure, nonsingular_coloring,
    nonsingular_coloring_seeded, Coloring,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A plane triangulation with all vertices of degree 3 or 6, as a rotation
/// system. Vertex ids are dense integers `0..V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTriangulation {
    rotation: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n_vertices: usize,
    rotation: Vec<Vec<usize>>,
}

impl PlaneTriangulation {
    /// Wrap a rotation system after checking every structural invariant:
    /// symmetric simple adjacency, degrees in {3, 6} with exactly four
    /// vertices of degree 3, connectivity, and a face traversal that yields
    /// only triangles with the right Euler count.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let g = PlaneTriangulation { rotation };
        g.validate()?;
        Ok(g)
    }

    /// Wrap a rotation system without validation. Intended for callers that
    /// construct candidates and validate separately.
    pub fn from_rotation_unchecked(rotation: Vec<Vec<usize>>) -> Self {
        PlaneTriangulation { rotation }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Neighbours of `v` in counter-clockwise order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Vertices of degree 3, ascending. A valid triangulation has four.
    pub fn degree3_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 3)
            .collect()
    }

    /// Undirected edges as `(min, max)` pairs in sorted order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.rotation.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    fn pos_of(&self, v: usize, u: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == u)
    }

    /// Neighbour immediately after `u` in the counter-clockwise rotation at `v`.
    pub(crate) fn rot_succ(&self, v: usize, u: usize) -> usize {
        let pos = self.pos_of(v, u).expect("u must be a neighbour of v");
        let deg = self.degree(v);
        self.rotation[v][(pos + 1) % deg]
    }

    /// Neighbour immediately before `u` in the counter-clockwise rotation at `v`.
    pub(crate) fn rot_pred(&self, v: usize, u: usize) -> usize {
        let pos = self.pos_of(v, u).expect("u must be a neighbour of v");
        let deg = self.degree(v);
        self.rotation[v][(pos + deg - 1) % deg]
    }

    /// Trace all faces. With counter-clockwise rotations the directed edge
    /// `(u, v)` continues as `(v, w)` where `w` precedes `u` in the rotation
    /// at `v`; every orbit must close after exactly three steps.
    pub fn faces(&self) -> Result<Vec<[usize; 3]>> {
        Ok(self.face_data()?.faces)
    }

    /// Faces plus, for every directed edge, the face it bounds and the third
    /// vertex of that face.
    pub(crate) fn face_data(&self) -> Result<FaceData> {
        let offsets = self.dir_offsets();
        let total: usize = 2 * self.edge_count();
        let mut face_of = vec![usize::MAX; total];
        let mut apex = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for u in 0..self.vertex_count() {
            for pos in 0..self.degree(u) {
                if face_of[offsets[u] + pos] != usize::MAX {
                    continue;
                }
                let v = self.rotation[u][pos];
                let w = self.rot_pred(v, u);
                if w == u || self.rot_pred(w, v) != u || self.rot_pred(u, w) != v {
                    return Err(Error::domain(format!(
                        "face through ({u}, {v}) is not a triangle"
                    )));
                }
                let tri = [u, v, w];
                let id = faces.len();
                for i in 0..3 {
                    let (a, b, c) = (tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]);
                    let pos_b = self.pos_of(a, b).expect("edge of traced face");
                    face_of[offsets[a] + pos_b] = id;
                    apex[offsets[a] + pos_b] = c;
                }
                faces.push(tri);
            }
        }
        Ok(FaceData {
            offsets,
            face_of,
            apex,
            faces,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let v_count = self.vertex_count();
        if v_count < 4 {
            return Err(Error::domain("a triangulation needs at least 4 vertices"));
        }
        let mut degree3 = 0;
        for (u, nbrs) in self.rotation.iter().enumerate() {
            match nbrs.len() {
                3 => degree3 += 1,
                6 => {}
                d => {
                    return Err(Error::domain(format!(
                        "vertex {u} has degree {d}, not 3 or 6"
                    )))
                }
            }
            let mut seen = nbrs.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != nbrs.len() {
                return Err(Error::domain(format!(
                    "vertex {u} has a repeated neighbour"
                )));
            }
            for &v in nbrs {
                if v >= v_count {
                    return Err(Error::domain(format!(
                        "vertex {u} lists out-of-range neighbour {v}"
                    )));
                }
                if v == u {
                    return Err(Error::domain(format!(
                        "vertex {u} lists itself as a neighbour"
                    )));
                }
                if !self.rotation[v].contains(&u) {
                    return Err(Error::domain(format!("edge ({u}, {v}) is not symmetric")));
                }
            }
        }
        if degree3 != 4 {
            return Err(Error::domain(format!(
                "expected four degree-3 vertices, found {degree3}"
            )));
        }
        // connectivity
        let mut seen = vec![false; v_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.rotation[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        if reached != v_count {
            return Err(Error::domain("graph is not connected"));
        }
        // face structure and Euler count
        let faces = self.faces()?;
        let e_count = self.edge_count();
        if v_count + faces.len() != e_count + 2 {
            return Err(Error::domain(format!(
                "Euler check failed: V={v_count}, E={e_count}, F={}",
                faces.len()
            )));
        }
        Ok(())
    }

    /// The mirror reflection: every rotation reversed.
    pub fn mirror(&self) -> PlaneTriangulation {
        let rotation = self
            .rotation
            .iter()
            .map(|nbrs| nbrs.iter().rev().copied().collect())
            .collect();
        PlaneTriangulation { rotation }
    }

    /// Serialize as `{"n_vertices": V, "rotation": [[...], ...]}`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GraphJson {
            n_vertices: self.vertex_count(),
            rotation: self.rotation.clone(),
        })
        .expect("graph serialization cannot fail")
    }

    /// Parse and validate the JSON graph format.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let parsed: GraphJson = serde_json::from_str(text)
            .map_err(|e| Error::domain(format!("bad graph JSON: {e}")))?;
        if parsed.n_vertices != parsed.rotation.len() {
            return Err(Error::domain(format!(
                "n_vertices={} but rotation has {} entries",
                parsed.n_vertices,
                parsed.rotation.len()
            )));
        }
        PlaneTriangulation::from_rotation(parsed.rotation)
    }

    fn dir_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.vertex_count());
        let mut acc = 0;
        for nbrs in &self.rotation {
            offsets.push(acc);
            acc += nbrs.len();
        }
        offsets
    }
}

/// Face bookkeeping: per directed edge (indexed by vertex offset plus
/// rotation position) the face id and the third vertex of that face.
pub(crate) struct FaceData {
    offsets: Vec<usize>,
    face_of: Vec<usize>,
    apex: Vec<usize>,
    pub faces: Vec<[usize; 3]>,
}

impl FaceData {
    pub fn apex_of(&self, g: &PlaneTriangulation, u: usize, v: usize) -> usize {
        let pos = g.pos_of(u, v).expect("edge required");
        self.apex[self.offsets[u] + pos]
    }

    pub fn face_of(&self, g: &PlaneTriangulation, u: usize, v: usize) -> usize {
        let pos = g.pos_of(u, v).expect("edge required");
        self.face_of[self.offsets[u] + pos]
    }
}

/// The complete graph on four vertices, the unique smallest member of the
/// family.
pub fn k4() -> PlaneTriangulation {
    PlaneTriangulation::from_rotation_unchecked(vec![
        vec![2, 3, 1],
        vec![3, 2, 0],
        vec![3, 0, 1],
        vec![2, 1, 0],
    ])
}
