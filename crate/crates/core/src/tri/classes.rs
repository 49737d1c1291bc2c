//! Edge classes, class paths, branch indices, and index-vectors measured
//! directly from the embedding.
//!
//! The nonsingular colouring splits the edges into three classes: an edge
//! whose endpoint colours are `{3, q}` or the complementary pair inside
//! `{0, 1, 2}` belongs to class `q`. Colours are renamed so that the three
//! edges of a chosen degree-3 anchor carry classes 0, 1, 2 in
//! counter-clockwise order; then at *every* vertex, counter-clockwise
//! successive edges carry successive classes. Each class decomposes into two
//! maximal paths of equal length `M` (ends of degree 3) plus `K - 1` cycles
//! of length `2M`, which gives the components `(K, M)` of the class's
//! index-vector; the offset `S⁺` is read off from where the next class's
//! path first touches a directed class path.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ivec::{IndexVector, Orbit};
use crate::tri::coloring::{is_nonsingular, Coloring};
use crate::tri::PlaneTriangulation;

/// Assignment of a class in `{0, 1, 2}` to every edge, anchored at a
/// degree-3 vertex whose counter-clockwise edges realize classes 0, 1, 2.
#[derive(Debug, Clone)]
pub struct EdgeClassification {
    anchor: usize,
    class: BTreeMap<(usize, usize), u8>,
}

impl EdgeClassification {
    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn class_of(&self, u: usize, v: usize) -> Option<u8> {
        let key = (u.min(v), u.max(v));
        self.class.get(&key).copied()
    }

    /// Edges of one class, sorted.
    pub fn edges_of_class(&self, q: u8) -> Vec<(usize, usize)> {
        self.class
            .iter()
            .filter(|&(_, &c)| c == q)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Neighbours of `v` along edges of class `q` (0, 1 or 2 of them).
    fn class_neighbors(&self, g: &PlaneTriangulation, v: usize, q: u8) -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.class_of(v, u) == Some(q))
            .collect()
    }
}

/// Classify every edge by the colour pair of its endpoints, after renaming
/// colours so the anchor is coloured 3 and its counter-clockwise edges get
/// classes 0, 1, 2 in order.
///
/// Class `q` collects the edges with colours `{3, q}` together with those
/// whose colours are the two elements of `{0, 1, 2} \ {q}`.
pub fn classify_edges(
    g: &PlaneTriangulation,
    coloring: &Coloring,
    anchor: usize,
) -> Result<EdgeClassification> {
    if g.degree(anchor) != 3 {
        return Err(Error::domain(format!("anchor {anchor} must have degree 3")));
    }
    if !is_nonsingular(g, coloring)? {
        return Err(Error::domain(
            "classification requires a nonsingular colouring",
        ));
    }
    // Rename colours: anchor -> 3, its q-th CCW neighbour's colour -> q.
    let mut rename = [u8::MAX; 4];
    rename[coloring.color(anchor) as usize] = 3;
    for (q, &u) in g.neighbors(anchor).iter().enumerate() {
        rename[coloring.color(u) as usize] = q as u8;
    }
    if rename.contains(&u8::MAX) {
        return Err(Error::consistency(
            "anchor neighbourhood does not display all four colours",
        ));
    }
    let class_of_pair = |a: u8, b: u8| -> u8 {
        if a == 3 {
            b
        } else if b == 3 {
            a
        } else {
            3 - a - b
        }
    };
    let mut class = BTreeMap::new();
    for (u, v) in g.edge_list() {
        let (a, b) = (
            rename[coloring.color(u) as usize],
            rename[coloring.color(v) as usize],
        );
        class.insert((u, v), class_of_pair(a, b));
    }
    let ec = EdgeClassification { anchor, class };
    // Local rule: counter-clockwise successive edges carry successive classes.
    for v in 0..g.vertex_count() {
        let nbrs = g.neighbors(v);
        for i in 0..nbrs.len() {
            let here = ec.class_of(v, nbrs[i]).unwrap();
            let next = ec.class_of(v, nbrs[(i + 1) % nbrs.len()]).unwrap();
            if next != (here + 1) % 3 {
                return Err(Error::consistency(format!(
                    "classes around vertex {v} do not advance cyclically"
                )));
            }
        }
    }
    Ok(ec)
}

/// A directed maximal path of one edge class, both ends of degree 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedClassPath {
    vertices: Vec<usize>,
    class: u8,
}

impl DirectedClassPath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn class(&self) -> u8 {
        self.class
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn reversed(&self) -> DirectedClassPath {
        DirectedClassPath {
            vertices: self.vertices.iter().rev().copied().collect(),
            class: self.class,
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// The decomposition of one edge class: two maximal paths of equal length
/// `M` and `K - 1` cycles of length `2M`.
#[derive(Debug, Clone)]
pub struct ClassFactor {
    /// The two maximal paths, each directed from its smaller end, sorted by
    /// starting vertex.
    pub paths: [DirectedClassPath; 2],
    pub cycles: Vec<Vec<usize>>,
    /// K: number of cycles plus one.
    pub layer_count: u64,
    /// M: common length of the two paths.
    pub path_length: u64,
}

/// Walk the maximal class-`q` path starting at degree-3 vertex `start`.
fn maximal_path_from(
    g: &PlaneTriangulation,
    ec: &EdgeClassification,
    q: u8,
    start: usize,
) -> Result<DirectedClassPath> {
    if g.degree(start) != 3 {
        return Err(Error::domain(format!(
            "path origin {start} must have degree 3"
        )));
    }
    let first = ec.class_neighbors(g, start, q);
    if first.len() != 1 {
        return Err(Error::consistency(format!(
            "degree-3 vertex {start} has {} class-{q} edges",
            first.len()
        )));
    }
    let mut vertices = vec![start, first[0]];
    loop {
        let cur = *vertices.last().unwrap();
        if g.degree(cur) == 3 {
            break;
        }
        let prev = vertices[vertices.len() - 2];
        let nexts: Vec<usize> = ec
            .class_neighbors(g, cur, q)
            .into_iter()
            .filter(|&u| u != prev)
            .collect();
        if nexts.len() != 1 {
            return Err(Error::consistency(format!(
                "class-{q} walk stuck at vertex {cur}"
            )));
        }
        vertices.push(nexts[0]);
    }
    Ok(DirectedClassPath { vertices, class: q })
}

/// Decompose class `q` into its two maximal paths and its cycles, checking
/// the shape: equal path lengths `M`, cycles of length `2M`, and
/// `2KM + 2` vertices in total.
pub fn factor_structure(
    g: &PlaneTriangulation,
    ec: &EdgeClassification,
    q: u8,
) -> Result<ClassFactor> {
    let mut paths = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for start in g.degree3_vertices() {
        if on_path[start] {
            continue;
        }
        let path = maximal_path_from(g, ec, q, start)?;
        for &v in path.vertices() {
            on_path[v] = true;
        }
        paths.push(path);
    }
    if paths.len() != 2 {
        return Err(Error::consistency(format!(
            "class {q} has {} maximal paths, expected 2",
            paths.len()
        )));
    }
    let m = paths[0].len();
    if paths[1].len() != m {
        return Err(Error::consistency(format!(
            "class-{q} paths have lengths {m} and {}",
            paths[1].len()
        )));
    }
    paths.sort_by_key(|p| p.start());
    // Remaining class-q edges form the cycles.
    let mut cycles = Vec::new();
    let mut in_cycle = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if on_path[v] || in_cycle[v] {
            continue;
        }
        let nbrs = ec.class_neighbors(g, v, q);
        if nbrs.len() != 2 {
            return Err(Error::consistency(format!(
                "cycle vertex {v} has {} class-{q} edges",
                nbrs.len()
            )));
        }
        let mut cycle = vec![v, nbrs[0]];
        in_cycle[v] = true;
        in_cycle[nbrs[0]] = true;
        loop {
            let cur = *cycle.last().unwrap();
            let prev = cycle[cycle.len() - 2];
            let nexts: Vec<usize> = ec
                .class_neighbors(g, cur, q)
                .into_iter()
                .filter(|&u| u != prev)
                .collect();
            if nexts.len() != 1 {
                return Err(Error::consistency(format!("cycle walk stuck at {cur}")));
            }
            if nexts[0] == v {
                break;
            }
            in_cycle[nexts[0]] = true;
            cycle.push(nexts[0]);
        }
        if cycle.len() != 2 * m {
            return Err(Error::consistency(format!(
                "class-{q} cycle has length {}, expected {}",
                cycle.len(),
                2 * m
            )));
        }
        cycles.push(cycle);
    }
    let k = cycles.len() as u64 + 1;
    if 2 * k * m as u64 + 2 != g.vertex_count() as u64 {
        return Err(Error::consistency(format!(
            "class {q} gives 2KM + 2 = {}, graph has {} vertices",
            2 * k * m as u64 + 2,
            g.vertex_count()
        )));
    }
    let mut it = paths.into_iter();
    Ok(ClassFactor {
        paths: [it.next().unwrap(), it.next().unwrap()],
        cycles,
        layer_count: k,
        path_length: m as u64,
    })
}

/// Locate the unique endpoint of `e` on the path and decide its side.
///
/// `e` is a *left* branch at `v_i` when it immediately follows the outgoing
/// path edge `v_i -> v_{i+1}` in the counter-clockwise rotation at `v_i`, or
/// when the returning path edge `v_i -> v_{i-1}` immediately follows `e`.
/// Otherwise it is a right branch.
fn branch_side(
    g: &PlaneTriangulation,
    path: &DirectedClassPath,
    e: (usize, usize),
) -> Result<(usize, bool)> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::domain(format!("({}, {}) is not an edge", e.0, e.1)));
    }
    let (p0, p1) = (path.position_of(e.0), path.position_of(e.1));
    let (i, off) = match (p0, p1) {
        (Some(_), Some(_)) => {
            return Err(Error::domain(format!(
                "edge ({}, {}) has both endpoints on the path",
                e.0, e.1
            )))
        }
        (Some(i), None) => (i, e.1),
        (None, Some(i)) => (i, e.0),
        (None, None) => {
            return Err(Error::domain(format!(
                "edge ({}, {}) is not adjacent to the path",
                e.0, e.1
            )))
        }
    };
    let on = path.vertices()[i];
    let m = path.len();
    let left = (i < m && g.rot_succ(on, path.vertices()[i + 1]) == off)
        || (i > 0 && g.rot_succ(on, off) == path.vertices()[i - 1]);
    Ok((i, left))
}

/// Branch index of `e` with respect to the directed path: `i` for a left
/// branch at `v_i`, `2M - i` for a right branch, reduced into `[0, 2M)`.
pub fn branch_index(
    g: &PlaneTriangulation,
    path: &DirectedClassPath,
    e: (usize, usize),
) -> Result<u64> {
    let (i, left) = branch_side(g, path, e)?;
    let m = path.len() as u64;
    Ok(if left {
        i as u64
    } else {
        (2 * m - i as u64) % (2 * m)
    })
}

/// First edge of the class-`crossing_class` path starting at `c_end` that
/// touches `a_path`, converted to an offset: `i` if it is a left branch at
/// `v_i`, `M - i` if a right branch.
///
/// With `crossing_class` one step after the path's class this measures `S⁺`;
/// one step before, `S⁻`.
pub fn measure_offset(
    g: &PlaneTriangulation,
    ec: &EdgeClassification,
    a_path: &DirectedClassPath,
    c_end: usize,
    crossing_class: u8,
) -> Result<u64> {
    let crossing = maximal_path_from(g, ec, crossing_class, c_end)?;
    let mut on_a = vec![false; g.vertex_count()];
    for &v in a_path.vertices() {
        on_a[v] = true;
    }
    for (x, y) in crossing.edges() {
        if on_a[x] || on_a[y] {
            let (i, left) = branch_side(g, a_path, (x, y))?;
            let m = a_path.len() as u64;
            return Ok(if left { i as u64 } else { m - i as u64 });
        }
    }
    Err(Error::consistency(format!(
        "class-{crossing_class} path from {c_end} never touches the reference path"
    )))
}

/// Measured index data of one edge class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassMeasure {
    pub layer_count: u64,
    pub path_length: u64,
    pub s_plus: u64,
    pub s_minus: u64,
}

impl ClassMeasure {
    pub fn index_vector(&self) -> IndexVector {
        IndexVector::new(self.layer_count, self.path_length, self.s_plus)
            .expect("measured offsets lie in range")
    }
}

/// Measure `(K, M, S⁺, S⁻)` for each of the three edge classes, anchored at
/// the least-id degree-3 vertex.
///
/// For class `q` the reference path is the one starting at the smaller
/// degree-3 end; `S⁺` comes from the first crossing of the class-`(q+1)`
/// path launched from the other path's smaller end, `S⁻` from the
/// class-`(q-1)` path launched there. The relation
/// `S⁻ - S⁺ ≡ K (mod M)` is checked before returning.
pub fn measure_class_indices(g: &PlaneTriangulation) -> Result<[ClassMeasure; 3]> {
    g.validate()?;
    let coloring = crate::tri::coloring::nonsingular_coloring(g)?;
    let anchor = g.degree3_vertices()[0];
    let ec = classify_edges(g, &coloring, anchor)?;
    let mut measures = Vec::with_capacity(3);
    for q in 0..3u8 {
        let factor = factor_structure(g, &ec, q)?;
        let a_path = &factor.paths[0];
        let c_end = factor.paths[1].start();
        let m = factor.path_length;
        let s_plus = measure_offset(g, &ec, a_path, c_end, (q + 1) % 3)?;
        let s_minus = measure_offset(g, &ec, a_path, c_end, (q + 2) % 3)?;
        if s_plus >= m {
            return Err(Error::consistency(format!(
                "measured S⁺ = {s_plus} for M = {m}"
            )));
        }
        if s_minus == 0 || s_minus > m {
            return Err(Error::consistency(format!(
                "measured S⁻ = {s_minus} for M = {m}"
            )));
        }
        let k = factor.layer_count;
        if (s_minus + m - s_plus) % m != k % m {
            return Err(Error::consistency(format!(
                "S⁻ - S⁺ ≡ K (mod M) fails for class {q}: S⁺={s_plus}, S⁻={s_minus}, K={k}, M={m}"
            )));
        }
        measures.push(ClassMeasure {
            layer_count: k,
            path_length: m,
            s_plus,
            s_minus,
        });
    }
    Ok([measures[0], measures[1], measures[2]])
}

/// The three measured index-vectors in class order, as an orbit.
pub fn index_vectors_from_graph(g: &PlaneTriangulation) -> Result<Orbit> {
    let measures = measure_class_indices(g)?;
    Ok(Orbit::from_cycle(
        measures.iter().map(ClassMeasure::index_vector).collect(),
    ))
}

/// Branch indices on the directed class-`q` path `[A, q]` of the consecutive
/// edges of `[A, q+1]` (launched from the same end `A`) that touch it.
///
/// When `S⁺(q) > 0` this sequence is exactly the scaled billiard sequence of
/// `S⁺(q)/M(q)` and has length `M / gcd(S⁺, M)`.
pub fn billiard_crossings(
    g: &PlaneTriangulation,
    ec: &EdgeClassification,
    q: u8,
) -> Result<Vec<u64>> {
    let factor = factor_structure(g, ec, q)?;
    let a_path = &factor.paths[0];
    let a = a_path.start();
    let companion = maximal_path_from(g, ec, (q + 1) % 3, a)?;
    let mut on_a = vec![false; g.vertex_count()];
    for &v in a_path.vertices() {
        on_a[v] = true;
    }
    let mut indices = Vec::new();
    for (x, y) in companion.edges() {
        if on_a[x] || on_a[y] {
            indices.push(branch_index(g, a_path, (x, y))?);
        }
    }
    Ok(indices)
}
