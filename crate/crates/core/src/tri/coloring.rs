//! The nonsingular 4-colouring and Kempe-chain machinery.
//!
//! A proper 4-colouring is *nonsingular* when the two vertices opposite an
//! edge (the apexes of its two incident triangles) always receive different
//! colours. On a triangulation whose degrees are all divisible by three the
//! colouring exists and is unique up to renaming colours, so it can be found
//! by forced propagation: once one triangle is coloured, the apex across
//! each of its edges must take the single remaining colour.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::tri::PlaneTriangulation;

/// A vertex colouring with colours in `{0, 1, 2, 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(colors: Vec<u8>) -> Result<Self> {
        if colors.iter().any(|&c| c > 3) {
            return Err(Error::domain("colours must lie in {0, 1, 2, 3}"));
        }
        Ok(Coloring { colors })
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Rename colours by first occurrence in vertex order, so that two
    /// colourings differing only by a global permutation become equal.
    pub fn canonical(&self) -> Coloring {
        let mut map = [u8::MAX; 4];
        let mut next = 0u8;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == u8::MAX {
                    map[c as usize] = next;
                    next += 1;
                }
                map[c as usize]
            })
            .collect();
        Coloring { colors }
    }
}

/// Whether adjacent vertices always differ.
pub fn is_proper_coloring(g: &PlaneTriangulation, c: &Coloring) -> bool {
    g.edge_list().iter().all(|&(u, v)| c.color(u) != c.color(v))
}

/// Whether the colouring is proper and the apexes of the two triangles at
/// every edge differ.
pub fn is_nonsingular(g: &PlaneTriangulation, c: &Coloring) -> Result<bool> {
    if !is_proper_coloring(g, c) {
        return Ok(false);
    }
    let fd = g.face_data()?;
    for (u, v) in g.edge_list() {
        if c.color(fd.apex_of(g, u, v)) == c.color(fd.apex_of(g, v, u)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The nonsingular colouring obtained by propagating from the first face.
pub fn nonsingular_coloring(g: &PlaneTriangulation) -> Result<Coloring> {
    nonsingular_coloring_seeded(g, 0)
}

/// Propagate the forced colouring outward from the given seed face, whose
/// corners receive colours 0, 1, 2. Fails if two forced values collide,
/// which cannot happen on a valid member of the family.
pub fn nonsingular_coloring_seeded(g: &PlaneTriangulation, seed_face: usize) -> Result<Coloring> {
    let fd = g.face_data()?;
    if seed_face >= fd.faces.len() {
        return Err(Error::domain(format!("seed face {seed_face} out of range")));
    }
    const UNSET: u8 = u8::MAX;
    let mut colors = vec![UNSET; g.vertex_count()];
    let seed = fd.faces[seed_face];
    for (i, &v) in seed.iter().enumerate() {
        colors[v] = i as u8;
    }
    let mut visited = vec![false; fd.faces.len()];
    visited[seed_face] = true;
    let mut queue = VecDeque::from([seed_face]);
    while let Some(f) = queue.pop_front() {
        let tri = fd.faces[f];
        for i in 0..3 {
            let (x, y, apex_here) = (tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]);
            // The face on the other side of edge (x, y) is traced from (y, x).
            let twin = fd.face_of(g, y, x);
            let opposite = fd.apex_of(g, y, x);
            let forced = 6 - colors[x] - colors[y] - colors[apex_here];
            if colors[opposite] == UNSET {
                colors[opposite] = forced;
            } else if colors[opposite] != forced {
                return Err(Error::consistency(format!(
                    "no nonsingular colouring: vertex {opposite} forced to both {} and {forced}",
                    colors[opposite]
                )));
            }
            if !visited[twin] {
                visited[twin] = true;
                queue.push_back(twin);
            }
        }
    }
    if colors.contains(&UNSET) {
        return Err(Error::consistency(
            "colour propagation did not reach every vertex",
        ));
    }
    let coloring = Coloring { colors };
    if !is_nonsingular(g, &coloring)? {
        return Err(Error::consistency(
            "propagated colouring is not nonsingular",
        ));
    }
    Ok(coloring)
}

/// All colourings reachable from `c` by Kempe changes, up to global colour
/// permutation, in sorted order.
///
/// A Kempe change swaps the two colours on one connected component of the
/// subgraph induced by a colour pair. States are canonicalized by renaming
/// colours in order of first occurrence, so a change that amounts to a
/// global renaming does not count as a new colouring.
pub fn kempe_closure(g: &PlaneTriangulation, c: &Coloring) -> Result<Vec<Coloring>> {
    if c.colors().len() != g.vertex_count() {
        return Err(Error::domain("colouring size does not match graph"));
    }
    if !is_proper_coloring(g, c) {
        return Err(Error::domain("kempe_closure requires a proper colouring"));
    }
    let start = c.canonical();
    let mut seen: HashSet<Coloring> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..4u8 {
            for j in i + 1..4 {
                for component in two_color_components(g, &cur, i, j) {
                    let mut flipped = cur.clone();
                    for v in component {
                        flipped.colors[v] = i + j - flipped.colors[v];
                    }
                    let canon = flipped.canonical();
                    if seen.insert(canon.clone()) {
                        queue.push_back(canon);
                    }
                }
            }
        }
    }
    let mut closure: Vec<Coloring> = seen.into_iter().collect();
    closure.sort_unstable();
    Ok(closure)
}

/// Connected components of the subgraph induced on vertices coloured `i` or `j`.
fn two_color_components(g: &PlaneTriangulation, c: &Coloring, i: u8, j: u8) -> Vec<Vec<usize>> {
    let mut components = Vec::new();
    let mut seen = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if seen[v] || (c.color(v) != i && c.color(v) != j) {
            continue;
        }
        let mut component = Vec::new();
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(u) = stack.pop() {
            component.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] && (c.color(w) == i || c.color(w) == j) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        components.push(component);
    }
    components
}

/// Whether the Kempe class of the nonsingular colouring is a singleton.
pub fn is_akempic_bruteforce(g: &PlaneTriangulation) -> Result<bool> {
    let c = nonsingular_coloring(g)?;
    Ok(kempe_closure(g, &c)?.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tri::k4;

    #[test]
    fn k4_coloring_is_a_rainbow() {
        let g = k4();
        let c = nonsingular_coloring(&g).unwrap();
        let mut colors = c.colors().to_vec();
        colors.sort_unstable();
        assert_eq!(colors, vec![0, 1, 2, 3]);
        assert!(is_proper_coloring(&g, &c));
        assert!(is_nonsingular(&g, &c).unwrap());
    }

    #[test]
    fn seeding_does_not_change_the_coloring() {
        let g = k4();
        let baseline = nonsingular_coloring(&g).unwrap().canonical();
        for f in 0..g.faces().unwrap().len() {
            let c = nonsingular_coloring_seeded(&g, f).unwrap();
            assert_eq!(c.canonical(), baseline, "seed face {f}");
        }
    }

    #[test]
    fn k4_kempe_closure_is_singleton() {
        let g = k4();
        let c = nonsingular_coloring(&g).unwrap();
        assert_eq!(kempe_closure(&g, &c).unwrap().len(), 1);
        assert!(is_akempic_bruteforce(&g).unwrap());
    }

    #[test]
    fn kempe_closure_rejects_improper_colorings() {
        let g = k4();
        let c = Coloring::new(vec![0, 0, 1, 2]).unwrap();
        assert!(kempe_closure(&g, &c).is_err());
    }

    #[test]
    fn canonicalization_quotients_color_permutations() {
        let a = Coloring::new(vec![2, 0, 3, 1]).unwrap();
        let b = Coloring::new(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(a.canonical(), b.canonical());
    }
}
