//! Canonical forms of embedded graphs.
//!
//! Starting from a directed edge, a breadth-first relabelling that walks
//! each rotation from the entry edge produces a code that depends only on
//! the embedding and the starting edge; the lexicographic minimum over all
//! starting edges is a complete invariant of the oriented embedding. Two
//! triangulations are orientation-preservingly isomorphic exactly when their
//! minima agree, and isomorphic when either orientation of one matches the
//! other.

use crate::tri::PlaneTriangulation;

/// Code of the labelling grown from the directed edge `(u, v)`: for each
/// vertex in discovery order, its degree followed by the labels of its
/// rotation read from the entry edge (reversed rotation when `reflect`).
fn code_from(g: &PlaneTriangulation, u: usize, v: usize, reflect: bool) -> Vec<u16> {
    const UNSET: u16 = u16::MAX;
    let n = g.vertex_count();
    let mut label = vec![UNSET; n];
    let mut entry = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[u] = 0;
    entry[u] = v;
    order.push(u);
    label[v] = 1;
    entry[v] = u;
    order.push(v);
    let mut i = 0;
    while i < order.len() {
        let w = order[i];
        i += 1;
        let rot = oriented_rotation(g, w, reflect);
        let start = rot.iter().position(|&x| x == entry[w]).expect("entry edge");
        for t in 0..rot.len() {
            let x = rot[(start + t) % rot.len()];
            if label[x] == UNSET {
                label[x] = order.len() as u16;
                entry[x] = w;
                order.push(x);
            }
        }
    }
    let mut code = Vec::with_capacity(2 * g.edge_count() + n);
    for &w in &order {
        let rot = oriented_rotation(g, w, reflect);
        let start = rot.iter().position(|&x| x == entry[w]).expect("entry edge");
        code.push(rot.len() as u16);
        for t in 0..rot.len() {
            code.push(label[rot[(start + t) % rot.len()]]);
        }
    }
    code
}

fn oriented_rotation(g: &PlaneTriangulation, v: usize, reflect: bool) -> Vec<usize> {
    if reflect {
        g.neighbors(v).iter().rev().copied().collect()
    } else {
        g.neighbors(v).to_vec()
    }
}

/// Minimum code over all starting directed edges, as bytes.
pub fn canonical_form(g: &PlaneTriangulation, reflect: bool) -> Vec<u8> {
    let mut best: Option<Vec<u16>> = None;
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            let code = code_from(g, u, v, reflect);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.expect("graph has at least one edge")
        .into_iter()
        .flat_map(u16::to_be_bytes)
        .collect()
}

/// Canonical form rendered as lowercase hex.
pub fn canonical_form_hex(g: &PlaneTriangulation, reflect: bool) -> String {
    canonical_form(g, reflect)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Orientation-preserving isomorphism.
pub fn is_isomorphic_oriented(a: &PlaneTriangulation, b: &PlaneTriangulation) -> bool {
    canonical_form(a, false) == canonical_form(b, false)
}

/// Isomorphism allowing reflection.
pub fn is_isomorphic(a: &PlaneTriangulation, b: &PlaneTriangulation) -> bool {
    let code_a = canonical_form(a, false);
    code_a == canonical_form(b, false) || code_a == canonical_form(b, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tri::k4;

    #[test]
    fn canonical_form_ignores_vertex_numbering() {
        let g = k4();
        // relabel vertices by the permutation 0->2, 1->3, 2->1, 3->0
        let perm = [2usize, 3, 1, 0];
        let mut rotation = vec![Vec::new(); 4];
        for (v, nbrs) in g.rotation().iter().enumerate() {
            rotation[perm[v]] = nbrs.iter().map(|&u| perm[u]).collect();
        }
        let h = PlaneTriangulation::from_rotation(rotation).unwrap();
        assert_eq!(canonical_form(&g, false), canonical_form(&h, false));
        assert!(is_isomorphic_oriented(&g, &h));
    }

    #[test]
    fn k4_is_self_mirror() {
        let g = k4();
        assert!(is_isomorphic_oriented(&g, &g.mirror()));
        assert_eq!(canonical_form(&g, true), canonical_form(&g.mirror(), false));
    }

    #[test]
    fn hex_export_is_lowercase_hex() {
        let g = k4();
        let hex = canonical_form_hex(&g, false);
        assert!(hex
            .chars()
            .all(|c| c.is_ascii_hexdigit() && !c.is_ascii_uppercase()));
        assert_eq!(hex.len(), 2 * canonical_form(&g, false).len());
    }
}
