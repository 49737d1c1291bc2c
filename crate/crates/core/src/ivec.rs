//! Index-vector algebra.
//!
//! An [`IndexVector`] `(k, m, s)` describes one of the three drawings of a
//! triangulation with `2km + 2` vertices: `k` nested layers of an edge
//! class (inner path, `k - 1` cycles, exterior path), paths of length `m`,
//! and exterior-path offset `s`. The [`successor`] map produces the vector
//! of the next edge class; iterating it three times returns to the start,
//! so vectors fall into [`Orbit`]s of size 1 or 3. An orbit united with the
//! orbit of the mirror-reflected drawing is a [`Code`], the full isomorphism
//! invariant.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numthy::{self, gcd, ConvergentPair};

/// Index-vector `(k, m, s)` of a drawing: `k` layers, path length `m`,
/// exterior-path offset `0 <= s < m`. The triangulation it describes has
/// `2km + 2` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u64; 3]", try_from = "[u64; 3]")]
pub struct IndexVector {
    pub k: u64,
    pub m: u64,
    pub s: u64,
}

impl IndexVector {
    pub fn new(k: u64, m: u64, s: u64) -> Result<Self> {
        if k == 0 || m == 0 {
            return Err(Error::domain(format!(
                "index-vector components must be positive: ({k}, {m}, {s})"
            )));
        }
        if s >= m {
            return Err(Error::domain(format!(
                "index-vector needs s < m: ({k}, {m}, {s})"
            )));
        }
        Ok(IndexVector { k, m, s })
    }

    /// The product `k·m`, i.e. half the vertex count minus one.
    pub fn product(&self) -> u64 {
        self.k * self.m
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.k, self.m, self.s)
    }
}

impl From<IndexVector> for [u64; 3] {
    fn from(v: IndexVector) -> Self {
        [v.k, v.m, v.s]
    }
}

impl TryFrom<[u64; 3]> for IndexVector {
    type Error = Error;

    fn try_from(a: [u64; 3]) -> Result<Self> {
        IndexVector::new(a[0], a[1], a[2])
    }
}

/// Whether `v` is realized by a simple triangulation with `2n + 2` vertices.
///
/// For `n > 1` exactly three vectors of the universe are excluded,
/// `(n, 1, 0)`, `(1, n, n-1)` and `(1, n, 0)`; together they form the code
/// of the unique non-simple triangulation of that order. For `n = 1` the
/// single vector `(1, 1, 0)` (the complete graph on four vertices) counts as
/// proper.
pub fn is_proper(v: IndexVector, n: u64) -> Result<bool> {
    if v.product() != n {
        return Err(Error::domain(format!(
            "vector {v} does not belong to universe n={n}"
        )));
    }
    if n == 1 {
        return Ok(true);
    }
    let improper = [
        IndexVector { k: n, m: 1, s: 0 },
        IndexVector {
            k: 1,
            m: n,
            s: n - 1,
        },
        IndexVector { k: 1, m: n, s: 0 },
    ];
    Ok(!improper.contains(&v))
}

/// Which excluded form an improper vector takes, for error messages.
pub fn improper_form(v: IndexVector) -> Option<&'static str> {
    let n = v.product();
    if n == 1 {
        return None;
    }
    if v == (IndexVector { k: n, m: 1, s: 0 }) {
        Some("(n,1,0)")
    } else if v
        == (IndexVector {
            k: 1,
            m: n,
            s: n - 1,
        })
    {
        Some("(1,n,n-1)")
    } else if v == (IndexVector { k: 1, m: n, s: 0 }) {
        Some("(1,n,0)")
    } else {
        None
    }
}

/// The companion offset `S⁻`, the unique value in `(0, m]` congruent to
/// `s + k (mod m)`.
pub fn s_minus(v: IndexVector) -> u64 {
    (v.s + v.k - 1) % v.m + 1
}

/// Index-vector of the next edge class.
///
/// `k' = gcd(s, m)` (with `gcd(0, m) = m`), `m' = km / k'`, and the new
/// offset comes from the next-to-last convergent `a/b` of `s/m`:
/// `s' ≡ bk - k' (mod m')` when `d > 0`, `s' ≡ -bk - k' (mod m')` when
/// `d < 0`. Applied three times this returns to `v`.
pub fn successor(v: IndexVector) -> IndexVector {
    let k_next = gcd(v.s, v.m);
    let m_next = v.k * v.m / k_next;
    let ConvergentPair { b, d, .. } =
        numthy::convergent_pair(v.s, v.m).expect("0 <= s < m holds for any IndexVector");
    let bk = b as i128 * v.k as i128;
    let raw = if d > 0 {
        bk - k_next as i128
    } else {
        -bk - k_next as i128
    };
    let s_next = raw.rem_euclid(m_next as i128) as u64;
    IndexVector {
        k: k_next,
        m: m_next,
        s: s_next,
    }
}

/// Index-vector of the mirror-reflected drawing: `(k, m, m - S⁻)`.
pub fn mirror(v: IndexVector) -> IndexVector {
    IndexVector {
        k: v.k,
        m: v.m,
        s: v.m - s_minus(v),
    }
}

/// The cyclic successor orbit of an index-vector: 1 or 3 vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Orbit {
    vectors: Vec<IndexVector>,
}

impl Orbit {
    /// Wrap an already-computed successor cycle, rotating it to start at the
    /// lexicographically least vector. Collapses a constant cycle to length 1.
    pub fn from_cycle(cycle: Vec<IndexVector>) -> Orbit {
        assert!(!cycle.is_empty());
        if cycle.iter().all(|v| *v == cycle[0]) {
            return Orbit {
                vectors: vec![cycle[0]],
            };
        }
        let least = (0..cycle.len())
            .min_by_key(|&i| cycle[i])
            .expect("nonempty cycle");
        let vectors = (0..cycle.len())
            .map(|i| cycle[(least + i) % cycle.len()])
            .collect();
        Orbit { vectors }
    }

    pub fn vectors(&self) -> &[IndexVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &IndexVector) -> bool {
        self.vectors.contains(v)
    }

    /// The vectors as a sorted set, for order-insensitive comparison.
    pub fn as_sorted(&self) -> Vec<IndexVector> {
        let mut sorted = self.vectors.clone();
        sorted.sort_unstable();
        sorted
    }
}

/// A code: the union of an orbit and its mirror orbit, stored sorted.
/// Cardinality is 1, 2, 3 or 6.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Code {
    vectors: Vec<IndexVector>,
}

impl Code {
    pub(crate) fn from_set(mut vectors: Vec<IndexVector>) -> Code {
        vectors.sort_unstable();
        vectors.dedup();
        Code { vectors }
    }

    pub fn vectors(&self) -> &[IndexVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &IndexVector) -> bool {
        self.vectors.binary_search(v).is_ok()
    }
}

/// Iterate the successor map until it returns to `v`.
///
/// The period must be 1 or 3; anything else is a bug in the arithmetic and
/// reported as a consistency failure.
pub fn orbit(v: IndexVector) -> Result<Orbit> {
    let mut cycle = vec![v];
    let mut cur = successor(v);
    while cur != v {
        cycle.push(cur);
        if cycle.len() > 3 {
            return Err(Error::consistency(format!(
                "successor orbit of {v} did not close within 3 steps"
            )));
        }
        cur = successor(cur);
    }
    if cycle.len() == 2 {
        return Err(Error::consistency(format!(
            "successor orbit of {v} has period 2"
        )));
    }
    Ok(Orbit::from_cycle(cycle))
}

/// The code of `v`: its orbit united with the orbit of its mirror.
pub fn code(v: IndexVector) -> Result<Code> {
    let own = orbit(v)?;
    let mirrored = orbit(mirror(v))?;
    let mut vectors = own.vectors().to_vec();
    vectors.extend_from_slice(mirrored.vectors());
    let code = Code::from_set(vectors);
    if ![1, 2, 3, 6].contains(&code.len()) {
        return Err(Error::consistency(format!(
            "code of {v} has order {}",
            code.len()
        )));
    }
    Ok(code)
}

/// Whether `v` is symmetric: its orbit equals its mirror orbit, i.e. its
/// code has order 1 or 3.
pub fn is_symmetric(v: IndexVector) -> Result<bool> {
    Ok(matches!(code(v)?.len(), 1 | 3))
}

/// Arithmetic akempic test.
///
/// With `k = 1` and `m = n` this is `gcd(s, n) = gcd(s + 1, n) = 1`; in
/// general it asks that every vector of the orbit has first component 1
/// (equivalently, no edge class contains a cycle).
pub fn is_akempic_arith(v: IndexVector) -> Result<bool> {
    if v.k == 1 {
        let n = v.m;
        return Ok(gcd(v.s, n) == 1 && gcd(v.s + 1, n) == 1);
    }
    Ok(orbit(v)?.vectors().iter().all(|w| w.k == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(k: u64, m: u64, s: u64) -> IndexVector {
        IndexVector::new(k, m, s).unwrap()
    }

    /// All proper vectors with k·m = n, in lexicographic order.
    fn proper_for(n: u64) -> Vec<IndexVector> {
        let mut out = Vec::new();
        for m in 1..=n {
            if n % m == 0 {
                for s in 0..m {
                    let v = iv(n / m, m, s);
                    if is_proper(v, n).unwrap() {
                        out.push(v);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn construction_rejects_bad_components() {
        assert!(IndexVector::new(0, 3, 0).is_err());
        assert!(IndexVector::new(1, 0, 0).is_err());
        assert!(IndexVector::new(1, 3, 3).is_err());
    }

    #[test]
    fn proper_small() {
        assert!(is_proper(iv(1, 1, 0), 1).unwrap());
        assert!(!is_proper(iv(4, 1, 0), 4).unwrap());
        assert!(is_proper(iv(1, 6, 3), 6).unwrap());
        assert!(!is_proper(iv(1, 6, 5), 6).unwrap());
        assert!(!is_proper(iv(1, 6, 0), 6).unwrap());
        assert!(is_proper(iv(2, 3, 0), 6).unwrap());
        assert!(is_proper(iv(3, 2, 0), 6).unwrap());
        assert!(!is_proper(iv(6, 1, 0), 6).unwrap());
        assert!(is_proper(iv(2, 2, 1), 5).is_err());
        assert_eq!(improper_form(iv(6, 1, 0)), Some("(n,1,0)"));
        assert_eq!(improper_form(iv(1, 6, 5)), Some("(1,n,n-1)"));
        assert_eq!(improper_form(iv(1, 6, 0)), Some("(1,n,0)"));
        assert_eq!(improper_form(iv(1, 6, 3)), None);
        assert_eq!(improper_form(iv(1, 1, 0)), None);
    }

    #[test]
    fn s_minus_small() {
        assert_eq!(s_minus(iv(1, 6, 3)), 4);
        assert_eq!(s_minus(iv(3, 2, 0)), 1);
        assert_eq!(s_minus(iv(2, 3, 1)), 3);
        // s + k a multiple of m lands on m itself, not 0
        assert_eq!(s_minus(iv(2, 2, 0)), 2);
    }

    #[test]
    fn successor_golden_cycle() {
        assert_eq!(successor(iv(1, 6, 3)), iv(3, 2, 0));
        assert_eq!(successor(iv(3, 2, 0)), iv(2, 3, 1));
        assert_eq!(successor(iv(2, 3, 1)), iv(1, 6, 3));
        assert_eq!(successor(iv(1, 3, 1)), iv(1, 3, 1));
        assert_eq!(successor(iv(1, 1, 0)), iv(1, 1, 0));
    }

    #[test]
    fn mirror_small() {
        assert_eq!(mirror(iv(1, 6, 3)), iv(1, 6, 2));
        assert_eq!(mirror(iv(2, 2, 0)), iv(2, 2, 0));
        assert_eq!(mirror(iv(1, 7, 2)), iv(1, 7, 4));
    }

    #[test]
    fn orbit_golden() {
        let o = orbit(iv(1, 6, 3)).unwrap();
        assert_eq!(o.vectors(), &[iv(1, 6, 3), iv(3, 2, 0), iv(2, 3, 1)]);
        assert_eq!(orbit(iv(1, 3, 1)).unwrap().vectors(), &[iv(1, 3, 1)]);
        assert_eq!(orbit(iv(2, 2, 0)).unwrap().vectors(), &[iv(2, 2, 0)]);
    }

    #[test]
    fn orbit_starts_at_least_vector() {
        let o = orbit(iv(2, 3, 1)).unwrap();
        assert_eq!(o.vectors()[0], iv(1, 6, 3));
        assert_eq!(o.vectors(), &[iv(1, 6, 3), iv(3, 2, 0), iv(2, 3, 1)]);
    }

    #[test]
    fn code_golden() {
        assert_eq!(code(iv(2, 2, 0)).unwrap().vectors(), &[iv(2, 2, 0)]);
        assert_eq!(
            code(iv(1, 7, 2)).unwrap().vectors(),
            &[iv(1, 7, 2), iv(1, 7, 4)]
        );
        assert_eq!(
            code(iv(1, 4, 1)).unwrap().vectors(),
            &[iv(1, 4, 1), iv(1, 4, 2), iv(2, 2, 1)]
        );
    }

    #[test]
    fn akempic_small() {
        assert!(!is_akempic_arith(iv(1, 6, 3)).unwrap());
        assert!(is_akempic_arith(iv(1, 7, 2)).unwrap());
        assert!(is_akempic_arith(iv(1, 1, 0)).unwrap());
    }

    #[test]
    fn successor_period_and_product_up_to_200() {
        for n in 1..=200u64 {
            for v in proper_for(n) {
                let v1 = successor(v);
                let v2 = successor(v1);
                let v3 = successor(v2);
                assert_eq!(v1.product(), n, "product broken at {v}");
                assert_eq!(v2.product(), n);
                assert_eq!(v3, v, "period of {v} not 1 or 3");
                let o = orbit(v).unwrap();
                assert!(o.len() == 1 || o.len() == 3);
            }
        }
    }

    #[test]
    fn mirror_involution_up_to_200() {
        for n in 1..=200u64 {
            for v in proper_for(n) {
                assert_eq!(mirror(mirror(v)), v, "mirror not involutive at {v}");
                let s_min = s_minus(v);
                assert!(s_min >= 1 && s_min <= v.m);
                assert_eq!((s_min + v.m - v.s) % v.m, v.k % v.m);
            }
        }
    }

    #[test]
    fn code_closed_under_successor_and_mirror() {
        for n in 1..=200u64 {
            for v in proper_for(n) {
                let c = code(v).unwrap();
                for w in c.vectors() {
                    assert!(
                        c.contains(&successor(*w)),
                        "code of {v} not successor-closed"
                    );
                    assert!(c.contains(&mirror(*w)), "code of {v} not mirror-closed");
                }
                assert!([1, 2, 3, 6].contains(&c.len()));
            }
        }
    }

    #[test]
    fn akempic_gcd_test_matches_orbit_test() {
        for n in 1..=200u64 {
            for v in proper_for(n) {
                if v.k == 1 {
                    let by_gcd = gcd(v.s, n) == 1 && gcd(v.s + 1, n) == 1;
                    let by_orbit = orbit(v).unwrap().vectors().iter().all(|w| w.k == 1);
                    assert_eq!(by_gcd, by_orbit, "akempic tests disagree at {v}");
                }
            }
        }
    }

    #[test]
    fn order1_orbits_match_diophantine_triples() {
        for n in 1..=200u64 {
            let fixed: Vec<IndexVector> = numthy::orbit1_vectors(n)
                .unwrap()
                .into_iter()
                .map(|(k, m, s)| iv(k, m, s))
                .collect();
            for v in proper_for(n) {
                let is_fixed = orbit(v).unwrap().len() == 1;
                assert_eq!(is_fixed, fixed.contains(&v), "order-1 mismatch at {v}");
            }
            // Mirror pairing of fixed orbits: (k, kz, kx) <-> (k, kz, k(z-x-1))
            for &(k, km, kx) in &numthy::orbit1_vectors(n).unwrap() {
                let z = km / k;
                let x = kx / k;
                let mirrored = mirror(iv(k, km, kx));
                assert_eq!(mirrored, iv(k, km, k * (z - x - 1)));
            }
        }
    }

    #[test]
    fn order1_codes_are_kk0_or_k3kk() {
        for n in 1..=200u64 {
            for v in proper_for(n) {
                let c = code(v).unwrap();
                let expected_form = (v.k == v.m && v.s == 0) || (v.m == 3 * v.k && v.s == v.k);
                if c.len() == 1 {
                    assert!(expected_form, "unexpected order-1 code at {v}");
                } else if c.contains(&v) && expected_form {
                    panic!("vector {v} of special form should have code order 1");
                }
            }
        }
    }

    #[test]
    fn index_vector_serializes_as_array() {
        let v = iv(1, 6, 3);
        assert_eq!(serde_json::to_string(&v).unwrap(), "[1,6,3]");
        let back: IndexVector = serde_json::from_str("[1,6,3]").unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<IndexVector>("[1,6,7]").is_err());
        let o = orbit(v).unwrap();
        assert_eq!(
            serde_json::to_string(&o).unwrap(),
            "[[1,6,3],[3,2,0],[2,3,1]]"
        );
    }

    proptest! {
        #[test]
        fn successor_conserves_product_randomized(k in 1..400u64, m in 1..400u64, s_seed in 0..400u64) {
            let s = s_seed % m;
            let v = IndexVector { k, m, s };
            let w = successor(v);
            prop_assert_eq!(w.product(), v.product());
            prop_assert!(w.s < w.m);
        }

        #[test]
        fn successor_period_three_randomized(k in 1..400u64, m in 1..400u64, s_seed in 0..400u64) {
            let s = s_seed % m;
            let v = IndexVector { k, m, s };
            prop_assume!(is_proper(v, v.product()).unwrap());
            prop_assert_eq!(successor(successor(successor(v))), v);
            prop_assert_eq!(mirror(mirror(v)), v);
        }

        #[test]
        fn json_roundtrip_randomized(k in 1..1000u64, m in 1..1000u64, s_seed in 0..1000u64) {
            let v = IndexVector { k, m, s: s_seed % m };
            let text = serde_json::to_string(&v).unwrap();
            let back: IndexVector = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, v);
        }
    }
}
