//! Construction of a triangulation from its index-vector.
//!
//! The candidate shape is a triangulated cylinder: rings `r = 0..=k`, each
//! with `2m` positions, ring edges `(r, j)-(r, j+1)`, and diagonals
//! `(r, j)-(r+1, j)`, `(r, j)-(r+1, j+1)`. Ring 0 is folded onto itself by
//! `j ~ -j`, collapsing it into the inner path `I_0..I_m`; ring `k` is
//! folded by `j ~ 2c - j` into the exterior path, where the offset
//! `c in [0, 2m)` slides the exterior path around the cylinder. Folding both
//! ends closes the cylinder into a sphere, so the quotient is a plane
//! triangulation with `2km + 2` vertices.
//!
//! The offset realizing a requested `s` is found by search: every candidate
//! (and its mirror) is validated and measured, and the one whose orbit
//! contains the requested vector is returned. A proper vector is always
//! realizable, so exhausting the candidates indicates a bug.

use crate::error::{Error, Result};
use crate::ivec::{self, IndexVector};
use crate::tri::classes::index_vectors_from_graph;
use crate::tri::PlaneTriangulation;

/// Build the triangulation whose orbit contains the proper vector `v`.
/// Deterministic: candidates are tried in a fixed order.
pub fn build(v: IndexVector) -> Result<PlaneTriangulation> {
    let n = v.product();
    if !ivec::is_proper(v, n)? {
        let form = ivec::improper_form(v).unwrap_or("unknown");
        return Err(Error::domain(format!("improper vector {v}: form {form}")));
    }
    let (k, m) = (v.k as usize, v.m as usize);
    for c in 0..2 * m {
        let candidate = PlaneTriangulation::from_rotation_unchecked(ring_rotation(k, m, c));
        if candidate.validate().is_err() {
            continue;
        }
        for g in [candidate.mirror(), candidate] {
            let orbit = index_vectors_from_graph(&g)?;
            if orbit.contains(&v) {
                return Ok(g);
            }
        }
    }
    Err(Error::consistency(format!(
        "no cylinder candidate realizes proper vector {v}"
    )))
}

/// Rotation system of the folded cylinder with `k` layers, path length `m`,
/// and exterior fold centre `c`.
///
/// Vertex ids: inner path `I_i = i` for `0 <= i <= m`, middle rings
/// `R_{r,j} = m + 1 + (r-1)·2m + j` for `1 <= r <= k-1`, exterior path
/// `E_t = m + 1 + (k-1)·2m + t` for `0 <= t <= m`.
fn ring_rotation(k: usize, m: usize, c: usize) -> Vec<Vec<usize>> {
    let period = 2 * m;
    let e_base = m + 1 + (k - 1) * period;
    // Position (r, j) of the unfolded cylinder mapped to a vertex id.
    let vmap = |r: usize, j: usize| -> usize {
        let j = j % period;
        if r == 0 {
            j.min(period - j)
        } else if r == k {
            let t = (j + period - c) % period;
            e_base + t.min(period - t)
        } else {
            m + 1 + (r - 1) * period + j
        }
    };
    let mut rotation = vec![Vec::new(); 2 * k * m + 2];
    // Inner path. Ends keep only one fan of diagonals; interior vertices
    // splice the fans of the two identified positions i and -i.
    rotation[0] = vec![vmap(1, 0), vmap(1, 1), 1];
    rotation[m] = vec![vmap(1, m), vmap(1, m + 1), m - 1];
    #[allow(clippy::needless_range_loop)]
    for i in 1..m {
        rotation[i] = vec![
            vmap(1, i),
            vmap(1, i + 1),
            i + 1,
            vmap(1, period - i),
            vmap(1, period - i + 1),
            i - 1,
        ];
    }
    // Middle rings.
    for r in 1..k {
        for j in 0..period {
            rotation[vmap(r, j)] = vec![
                vmap(r + 1, j),
                vmap(r + 1, j + 1),
                vmap(r, j + 1),
                vmap(r - 1, j),
                vmap(r - 1, j + period - 1),
                vmap(r, j + period - 1),
            ];
        }
    }
    // Exterior path, attached downward to ring k - 1.
    rotation[e_base] = vec![e_base + 1, vmap(k - 1, c), vmap(k - 1, c + period - 1)];
    rotation[e_base + m] = vec![e_base + m - 1, vmap(k - 1, c + m), vmap(k - 1, c + m - 1)];
    for t in 1..m {
        rotation[e_base + t] = vec![
            e_base + t + 1,
            vmap(k - 1, c + t),
            vmap(k - 1, c + t - 1),
            e_base + t - 1,
            vmap(k - 1, c + period - t),
            vmap(k - 1, c + period - t - 1),
        ];
    }
    rotation
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tri::{is_isomorphic, k4};

    fn iv(k: u64, m: u64, s: u64) -> IndexVector {
        IndexVector::new(k, m, s).unwrap()
    }

    #[test]
    fn build_k4() {
        let g = build(iv(1, 1, 0)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.degree3_vertices().len() == 4);
        assert!(is_isomorphic(&g, &k4()));
    }

    #[test]
    fn build_rejects_improper() {
        assert!(build(iv(4, 1, 0)).is_err());
        assert!(build(iv(1, 6, 0)).is_err());
        assert!(build(iv(1, 6, 5)).is_err());
    }

    #[test]
    fn build_sizes_follow_the_vertex_law() {
        for (k, m, s) in [
            (1, 3, 1),
            (1, 6, 3),
            (2, 3, 1),
            (3, 2, 0),
            (2, 2, 0),
            (1, 7, 2),
        ] {
            let v = iv(k, m, s);
            let g = build(v).unwrap();
            assert_eq!(g.vertex_count() as u64, 2 * k * m + 2, "vector {v}");
            g.validate().unwrap();
        }
    }

    #[test]
    fn built_graph_orbit_contains_vector() {
        for (k, m, s) in [(1, 3, 1), (1, 6, 3), (2, 3, 1), (2, 2, 1), (1, 7, 4)] {
            let v = iv(k, m, s);
            let g = build(v).unwrap();
            let orbit = index_vectors_from_graph(&g).unwrap();
            assert!(
                orbit.contains(&v),
                "orbit of build({v}) misses it: {:?}",
                orbit.vectors()
            );
        }
    }
}
