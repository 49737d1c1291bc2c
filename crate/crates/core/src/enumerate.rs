//! Enumeration of triangulations by counting codes of index-vectors.
//!
//! For each `n` the universe `X_n` holds the `sigma(n)` triples `(k, m, s)`
//! with `km = n` and `0 <= s < m`; its proper part (everything except the
//! three vectors of the non-simple code, for `n > 1`) partitions into codes,
//! one per isomorphism class of triangulation. Every count here comes in two
//! independent modes: a closed formula and the explicit code partition. The
//! partition is the oracle of record; the formulas are the artifact under
//! test, and any disagreement is reported loudly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ivec::{self, Code, IndexVector, Orbit};
use crate::numthy::{self, KCountMode, TCountMode};

/// Evaluation strategy for the counting operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Closed-form expression in divisor statistics.
    Formula,
    /// Count codes in the explicit partition of the vector universe.
    Partition,
}

/// The proper part of the vector universe for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorUniverse {
    pub n: u64,
    /// Proper vectors in lexicographic order; sigma(n) - 3 of them for n > 1.
    pub proper: Vec<IndexVector>,
}

/// The partition of the proper universe into codes, ordered by least vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodePartition {
    pub n: u64,
    pub codes: Vec<Code>,
}

/// All proper vectors with `k·m = n`, sorted lexicographically.
pub fn proper_vectors(n: u64) -> Result<VectorUniverse> {
    if n == 0 {
        return Err(Error::domain("proper_vectors requires n >= 1"));
    }
    let mut proper = Vec::new();
    for m in numthy::divisor_stats(n)?.divisors {
        let k = n / m;
        for s in 0..m {
            let v = IndexVector::new(k, m, s)?;
            if ivec::is_proper(v, n)? {
                proper.push(v);
            }
        }
    }
    proper.sort_unstable();
    Ok(VectorUniverse { n, proper })
}

/// Partition the proper universe into codes by repeatedly taking the code of
/// the least unassigned vector.
pub fn codes_partition(n: u64) -> Result<CodePartition> {
    let universe = proper_vectors(n)?;
    let mut codes: Vec<Code> = Vec::new();
    for v in &universe.proper {
        if codes.iter().any(|c| c.contains(v)) {
            continue;
        }
        let code = ivec::code(*v)?;
        for w in code.vectors() {
            if !ivec::is_proper(*w, n)? {
                return Err(Error::consistency(format!(
                    "code of proper {v} contains improper {w}"
                )));
            }
        }
        codes.push(code);
    }
    // Disjointness and coverage: the codes must tile the universe exactly.
    let total: usize = codes.iter().map(Code::len).sum();
    if total != universe.proper.len() {
        return Err(Error::consistency(format!(
            "codes of n={n} cover {total} vectors, universe has {}",
            universe.proper.len()
        )));
    }
    Ok(CodePartition { n, codes })
}

/// Number of triangulations with `2n + 2` vertices.
///
/// Formula mode: `d(1) = 1` and, for `n > 1` with `l` the exponent of 2,
/// `(sigma(n) + 3·theta(n) + 2·theta*(n))/6 - 1` when `l = 0`, and
/// `(sigma(n) + 3(2l-1)·theta(n/2^l) + 2·theta*(n))/6 - 1` when `l > 0`.
pub fn d_count(n: u64, mode: CountMode) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("d_count requires n >= 1"));
    }
    match mode {
        CountMode::Partition => Ok(codes_partition(n)?.codes.len() as u64),
        CountMode::Formula => {
            if n == 1 {
                return Ok(1);
            }
            let l = n.trailing_zeros() as u64;
            let sigma = numthy::sigma(n)?;
            let theta_term = if l == 0 {
                3 * numthy::theta(n)?
            } else {
                3 * (2 * l - 1) * numthy::theta(n >> l)?
            };
            let numer = sigma + theta_term + 2 * numthy::theta_star(n)?;
            if numer % 6 != 0 {
                return Err(Error::consistency(format!(
                    "d({n}) numerator {numer} not divisible by 6"
                )));
            }
            Ok(numer / 6 - 1)
        }
    }
}

/// Number of akempic triangulations with `2n + 2` vertices, odd `n` only.
///
/// Formula mode: `(k(n) + 2t(n) + 3) / 6`. Partition mode counts the codes
/// all of whose vectors pass the arithmetic akempic test.
pub fn a_count(n: u64, mode: CountMode) -> Result<u64> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::domain(format!(
            "a_count requires odd n >= 1, got {n}"
        )));
    }
    match mode {
        CountMode::Formula => {
            let k = numthy::k_count(n, KCountMode::Paper)?;
            let t = numthy::t_count(n, TCountMode::Formula)?;
            let numer = k + 2 * t + 3;
            if numer % 6 != 0 {
                return Err(Error::consistency(format!(
                    "a({n}) numerator {numer} not divisible by 6"
                )));
            }
            Ok(numer / 6)
        }
        CountMode::Partition => {
            let mut count = 0;
            for c in codes_partition(n)?.codes {
                let mut akempic = true;
                for v in c.vectors() {
                    if !ivec::is_akempic_arith(*v)? {
                        akempic = false;
                        break;
                    }
                }
                if akempic {
                    count += 1;
                }
            }
            Ok(count)
        }
    }
}

/// Number of symmetric triangulations with `2n + 2` vertices.
///
/// Formula mode (`n >= 2`): `theta(n) - 1` for odd `n`, and
/// `(2l - 1)·theta(n/2^l) - 1` for `n = 2^l·odd`. Partition mode counts
/// codes of order 1 or 3, which is exactly the symmetric ones.
pub fn symmetric_count(n: u64, mode: CountMode) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("symmetric_count requires n >= 1"));
    }
    match mode {
        CountMode::Formula => {
            if n < 2 {
                return Err(Error::domain("symmetric_count formula requires n >= 2"));
            }
            let l = n.trailing_zeros() as u64;
            if l == 0 {
                Ok(numthy::theta(n)? - 1)
            } else {
                Ok((2 * l - 1) * numthy::theta(n >> l)? - 1)
            }
        }
        CountMode::Partition => {
            let partition = codes_partition(n)?;
            Ok(partition
                .codes
                .iter()
                .filter(|c| matches!(c.len(), 1 | 3))
                .count() as u64)
        }
    }
}

/// Counts of codes by order (1, 2, 3 or 6) for one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderHistogram {
    #[serde(rename = "1")]
    pub order1: u64,
    #[serde(rename = "2")]
    pub order2: u64,
    #[serde(rename = "3")]
    pub order3: u64,
    #[serde(rename = "6")]
    pub order6: u64,
}

/// Histogram of code orders in the partition of the universe for `n`.
pub fn order_histogram(n: u64) -> Result<OrderHistogram> {
    let partition = codes_partition(n)?;
    let mut histogram = OrderHistogram {
        order1: 0,
        order2: 0,
        order3: 0,
        order6: 0,
    };
    for c in &partition.codes {
        match c.len() {
            1 => histogram.order1 += 1,
            2 => histogram.order2 += 1,
            3 => histogram.order3 += 1,
            6 => histogram.order6 += 1,
            other => {
                return Err(Error::consistency(format!(
                    "code of order {other} for n={n}"
                )))
            }
        }
    }
    Ok(histogram)
}

/// The code `{(n,1,0), (1,n,n-1), (1,n,0)}` of the unique non-simple
/// triangulation with `2n + 2` vertices. A marker only; no graph is built
/// for it.
pub fn nonsimple_code(n: u64) -> Result<Code> {
    if n < 2 {
        return Err(Error::domain("nonsimple_code requires n >= 2"));
    }
    Ok(Code::from_set(vec![
        IndexVector::new(n, 1, 0)?,
        IndexVector::new(1, n, n - 1)?,
        IndexVector::new(1, n, 0)?,
    ]))
}

/// The orbit `{(1, n, (n-1)/2), (1, n, 1), (1, n, n-2)}` of the unique
/// akempic symmetric triangulation for odd `n > 1`. For `n = 3` the three
/// entries coincide and the orbit degenerates to `{(1, 3, 1)}`.
pub fn akempic_symmetric_orbit(n: u64) -> Result<Orbit> {
    if n < 2 || n % 2 == 0 {
        return Err(Error::domain(format!(
            "akempic_symmetric_orbit requires odd n > 1, got {n}"
        )));
    }
    let seed = IndexVector::new(1, n, (n - 1) / 2)?;
    let orbit = ivec::orbit(seed)?;
    let expected: Vec<IndexVector> = if n == 3 {
        vec![seed]
    } else {
        vec![
            seed,
            IndexVector::new(1, n, 1)?,
            IndexVector::new(1, n, n - 2)?,
        ]
    };
    let mut expected_sorted = expected;
    expected_sorted.sort_unstable();
    if orbit.as_sorted() != expected_sorted {
        return Err(Error::consistency(format!(
            "akempic symmetric orbit of n={n} is {:?}, expected closed form",
            orbit.vectors()
        )));
    }
    Ok(orbit)
}

/// Whether `n` is a perfect square or three times one; exactly these `n`
/// admit a code of order 1.
pub fn has_order1_code(n: u64) -> bool {
    fn is_square(x: u64) -> bool {
        let r = x.isqrt();
        r * r == x
    }
    is_square(n) || (n % 3 == 0 && is_square(n / 3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(k: u64, m: u64, s: u64) -> IndexVector {
        IndexVector::new(k, m, s).unwrap()
    }

    #[test]
    fn proper_vectors_small() {
        assert_eq!(proper_vectors(2).unwrap().proper, vec![]);
        assert_eq!(proper_vectors(3).unwrap().proper, vec![iv(1, 3, 1)]);
        assert_eq!(proper_vectors(1).unwrap().proper, vec![iv(1, 1, 0)]);
        assert!(proper_vectors(0).is_err());
    }

    #[test]
    fn proper_universe_size_is_sigma_minus_three() {
        for n in 2..=120 {
            let universe = proper_vectors(n).unwrap();
            assert_eq!(
                universe.proper.len() as u64,
                numthy::sigma(n).unwrap() - 3,
                "n={n}"
            );
        }
    }

    #[test]
    fn codes_partition_small() {
        let p3 = codes_partition(3).unwrap();
        assert_eq!(p3.codes.len(), 1);
        assert_eq!(p3.codes[0].vectors(), &[iv(1, 3, 1)]);

        let p4 = codes_partition(4).unwrap();
        assert_eq!(p4.codes.len(), 2);
        assert_eq!(
            p4.codes[0].vectors(),
            &[iv(1, 4, 1), iv(1, 4, 2), iv(2, 2, 1)]
        );
        assert_eq!(p4.codes[1].vectors(), &[iv(2, 2, 0)]);

        // n = 7: the symmetric akempic code and one order-2 code.
        let p7 = codes_partition(7).unwrap();
        assert_eq!(p7.codes.len(), 2);
        assert_eq!(
            p7.codes[0].vectors(),
            &[iv(1, 7, 1), iv(1, 7, 3), iv(1, 7, 5)]
        );
        assert_eq!(p7.codes[1].vectors(), &[iv(1, 7, 2), iv(1, 7, 4)]);
    }

    #[test]
    fn d_count_small() {
        assert_eq!(d_count(1, CountMode::Formula).unwrap(), 1);
        assert_eq!(d_count(1, CountMode::Partition).unwrap(), 1);
        assert_eq!(d_count(2, CountMode::Formula).unwrap(), 0);
        assert_eq!(d_count(4, CountMode::Formula).unwrap(), 2);
        assert_eq!(d_count(4, CountMode::Partition).unwrap(), 2);
    }

    #[test]
    fn d_count_modes_agree_up_to_60() {
        for n in 1..=60 {
            assert_eq!(
                d_count(n, CountMode::Formula).unwrap(),
                d_count(n, CountMode::Partition).unwrap(),
                "d mismatch at n={n}"
            );
        }
    }

    #[test]
    fn a_count_small() {
        assert_eq!(a_count(1, CountMode::Formula).unwrap(), 1);
        assert_eq!(a_count(5, CountMode::Formula).unwrap(), 1);
        assert_eq!(a_count(7, CountMode::Formula).unwrap(), 2);
        assert_eq!(a_count(7, CountMode::Partition).unwrap(), 2);
        assert!(a_count(6, CountMode::Formula).is_err());
        assert!(a_count(6, CountMode::Partition).is_err());
    }

    #[test]
    fn a_count_modes_agree_up_to_59() {
        for n in (1..=59).step_by(2) {
            assert_eq!(
                a_count(n, CountMode::Formula).unwrap(),
                a_count(n, CountMode::Partition).unwrap(),
                "a mismatch at n={n}"
            );
        }
    }

    #[test]
    fn symmetric_count_small() {
        assert_eq!(symmetric_count(3, CountMode::Formula).unwrap(), 1);
        assert_eq!(symmetric_count(4, CountMode::Formula).unwrap(), 2);
        assert_eq!(symmetric_count(4, CountMode::Partition).unwrap(), 2);
        assert_eq!(symmetric_count(9, CountMode::Partition).unwrap(), 2);
        assert!(symmetric_count(1, CountMode::Formula).is_err());
        assert_eq!(symmetric_count(1, CountMode::Partition).unwrap(), 1);
    }

    #[test]
    fn symmetric_count_modes_agree_up_to_60() {
        for n in 2..=60 {
            assert_eq!(
                symmetric_count(n, CountMode::Formula).unwrap(),
                symmetric_count(n, CountMode::Partition).unwrap(),
                "symmetric mismatch at n={n}"
            );
        }
    }

    #[test]
    fn order_histogram_small() {
        let h4 = order_histogram(4).unwrap();
        assert_eq!((h4.order1, h4.order2, h4.order3, h4.order6), (1, 0, 1, 0));
        let h2 = order_histogram(2).unwrap();
        assert_eq!((h2.order1, h2.order2, h2.order3, h2.order6), (0, 0, 0, 0));
        let h7 = order_histogram(7).unwrap();
        assert_eq!((h7.order1, h7.order2, h7.order3, h7.order6), (0, 1, 1, 0));
    }

    #[test]
    fn order_histogram_matches_closed_forms_up_to_60() {
        for n in 1..=60 {
            let h = order_histogram(n).unwrap();
            let theta_star = numthy::theta_star(n).unwrap();
            if has_order1_code(n) {
                assert_eq!(h.order1, 1, "order-1 bucket at n={n}");
                assert_eq!(h.order2, (theta_star - 1) / 2, "order-2 bucket at n={n}");
            } else {
                assert_eq!(h.order1, 0, "order-1 bucket at n={n}");
                assert_eq!(h.order2, theta_star / 2, "order-2 bucket at n={n}");
            }
        }
    }

    #[test]
    fn partition_covers_universe_up_to_60() {
        for n in 2..=60 {
            let partition = codes_partition(n).unwrap();
            let covered: usize = partition.codes.iter().map(Code::len).sum();
            assert_eq!(covered as u64, numthy::sigma(n).unwrap() - 3, "n={n}");
        }
    }

    #[test]
    fn nonsimple_code_small() {
        assert_eq!(
            nonsimple_code(2).unwrap().vectors(),
            &[iv(1, 2, 0), iv(1, 2, 1), iv(2, 1, 0)]
        );
        assert_eq!(
            nonsimple_code(3).unwrap().vectors(),
            &[iv(1, 3, 0), iv(1, 3, 2), iv(3, 1, 0)]
        );
        assert_eq!(
            nonsimple_code(5).unwrap().vectors(),
            &[iv(1, 5, 0), iv(1, 5, 4), iv(5, 1, 0)]
        );
        assert!(nonsimple_code(1).is_err());
    }

    #[test]
    fn nonsimple_code_is_closed() {
        for n in 2..=60u64 {
            let code = nonsimple_code(n).unwrap();
            for v in code.vectors() {
                assert!(code.contains(&ivec::successor(*v)), "n={n}");
                assert!(code.contains(&ivec::mirror(*v)), "n={n}");
            }
        }
    }

    #[test]
    fn akempic_symmetric_orbit_small() {
        assert_eq!(
            akempic_symmetric_orbit(7).unwrap().as_sorted(),
            vec![iv(1, 7, 1), iv(1, 7, 3), iv(1, 7, 5)]
        );
        assert_eq!(
            akempic_symmetric_orbit(5).unwrap().as_sorted(),
            vec![iv(1, 5, 1), iv(1, 5, 2), iv(1, 5, 3)]
        );
        assert_eq!(
            akempic_symmetric_orbit(3).unwrap().vectors(),
            &[iv(1, 3, 1)]
        );
        assert!(akempic_symmetric_orbit(4).is_err());
        assert!(akempic_symmetric_orbit(1).is_err());
    }

    #[test]
    fn exactly_one_symmetric_akempic_code_for_odd_n() {
        for n in (3..=59u64).step_by(2) {
            let partition = codes_partition(n).unwrap();
            let mut found = Vec::new();
            for c in &partition.codes {
                let symmetric = matches!(c.len(), 1 | 3);
                let mut akempic = true;
                for v in c.vectors() {
                    akempic &= ivec::is_akempic_arith(*v).unwrap();
                }
                if symmetric && akempic {
                    found.push(c.clone());
                }
            }
            assert_eq!(found.len(), 1, "n={n}");
            // That code is the mirror closure of the closed-form orbit.
            let orbit = akempic_symmetric_orbit(n).unwrap();
            let expected = ivec::code(orbit.vectors()[0]).unwrap();
            assert_eq!(found[0], expected, "n={n}");
        }
    }
}
