//! Exact integer number theory used by the index-vector machinery.
//!
//! Everything here is plain `u64` arithmetic with trial-division
//! factorization; the inputs are desk scale (n up to about 10^6).
//!
//! The less standard pieces:
//!
//! - [`theta_star`]: a divisor count restricted to the primes ≡ 1 (mod 3),
//!   gated on the parity of the exponents of 2 and of the primes ≡ 2 (mod 3).
//! - [`t_count`]: solutions of `t² + t + 1 ≡ 0 (mod n)`, by brute scan or by
//!   the closed form 2^j over the distinct primes ≡ 1 (mod 3).
//! - [`convergent_pair`]: the next-to-last continued-fraction convergent of
//!   `s/m`, which drives the index-vector successor map.
//! - [`billiard_sequence`]: rebound positions of a 45° billiard in a
//!   rectangle of perimeter `2m`, stored exactly as integers.

use crate::error::{Error, Result};

/// Greatest common divisor; `gcd(0, m) = m`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order. `factorize(1)` is empty.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    factors
}

/// Sorted divisors of `n` together with their sum and count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorStats {
    pub divisors: Vec<u64>,
    /// Sum of all divisors, sigma(n).
    pub sigma: u64,
    /// Number of divisors, theta(n).
    pub theta: u64,
}

/// Divisor list, sigma(n) and theta(n) of a positive integer.
pub fn divisor_stats(n: u64) -> Result<DivisorStats> {
    if n == 0 {
        return Err(Error::domain("divisor_stats requires n >= 1"));
    }
    let mut divisors = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divisors.push(d);
            if d != n / d {
                divisors.push(n / d);
            }
        }
        d += 1;
    }
    divisors.sort_unstable();
    let sigma = divisors.iter().sum();
    let theta = divisors.len() as u64;
    Ok(DivisorStats {
        divisors,
        sigma,
        theta,
    })
}

/// Number of divisors of `n` (theta(n)).
pub fn theta(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("theta requires n >= 1"));
    }
    Ok(factorize(n).iter().map(|&(_, e)| e as u64 + 1).product())
}

/// Sum of divisors of `n` (sigma(n)).
pub fn sigma(n: u64) -> Result<u64> {
    Ok(divisor_stats(n)?.sigma)
}

/// Restricted divisor count theta*(n).
///
/// Write `n = 2^l · 3^a · p1^a1 … pu^au · q1^b1 … qw^bw` with `pi ≡ 1 (mod 3)`
/// and `qi ≡ 2 (mod 3)`. If `l` and every `bi` are even the value is the
/// divisor count of the p-part, `(a1+1)…(au+1)` (1 for an empty p-part);
/// otherwise it is 0.
pub fn theta_star(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("theta_star requires n >= 1"));
    }
    let mut p_part_theta = 1u64;
    for (p, e) in factorize(n) {
        match p % 3 {
            0 => {} // powers of 3 are ignored
            1 => p_part_theta *= e as u64 + 1,
            _ => {
                // p = 2 or p ≡ 2 (mod 3): an odd exponent kills the count
                if e % 2 == 1 {
                    return Ok(0);
                }
            }
        }
    }
    Ok(p_part_theta)
}

/// Evaluation strategy for [`t_count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TCountMode {
    /// Scan all residues t in [0, n).
    Brute,
    /// Closed form: 2^j if n = 3^a · p1^a1…pj^aj with a in {0, 1} and every
    /// pi ≡ 1 (mod 3); 0 in any other case.
    Formula,
}

/// Number of solutions of `t² + t + 1 ≡ 0 (mod n)`; `t_count(1, _) = 1`.
pub fn t_count(n: u64, mode: TCountMode) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("t_count requires n >= 1"));
    }
    match mode {
        TCountMode::Brute => Ok((0..n).filter(|&t| (t * t + t + 1) % n == 0).count() as u64),
        TCountMode::Formula => {
            let mut j = 0u32;
            for (p, e) in factorize(n) {
                match p % 3 {
                    0 => {
                        if e >= 2 {
                            return Ok(0);
                        }
                    }
                    1 => j += 1,
                    _ => return Ok(0),
                }
            }
            Ok(1u64 << j)
        }
    }
}

/// Evaluation strategy for [`k_count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KCountMode {
    /// Count k in [0, n) with gcd(2k, n) = gcd(2k - 1, n) = 1.
    Paper,
    /// Count k in [0, n) with gcd(k, n) = gcd(k + 1, n) = 1.
    Shifted,
}

/// Number of residues k in [0, n) whose pair of consecutive values is
/// coprime to odd `n`, in either of two equivalent formulations.
pub fn k_count(n: u64, mode: KCountMode) -> Result<u64> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::domain(format!(
            "k_count requires odd n >= 1, got {n}"
        )));
    }
    let count = match mode {
        KCountMode::Paper => (0..n)
            .filter(|&k| gcd(2 * k, n) == 1 && gcd(2 * k + n - 1, n) == 1)
            .count(),
        KCountMode::Shifted => (0..n)
            .filter(|&k| gcd(k, n) == 1 && gcd(k + 1, n) == 1)
            .count(),
    };
    Ok(count as u64)
}

/// All triples `(k, kz, kx)` with `k²z = n`, `0 <= x < z` and `z | x² + x + 1`,
/// sorted lexicographically. These are exactly the index-vectors whose orbit
/// under the successor map is a fixed point.
pub fn orbit1_vectors(n: u64) -> Result<Vec<(u64, u64, u64)>> {
    if n == 0 {
        return Err(Error::domain("orbit1_vectors requires n >= 1"));
    }
    let mut triples = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % (k * k) == 0 {
            let z = n / (k * k);
            for x in 0..z {
                if (x * x + x + 1) % z == 0 {
                    triples.push((k, k * z, k * x));
                }
            }
        }
        k += 1;
    }
    triples.sort_unstable();
    Ok(triples)
}

/// A solution of `a·m - b·s = d` with `|d| = gcd(s, m)` and `1 <= b <= m/|d|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvergentPair {
    pub a: u64,
    pub b: u64,
    pub d: i64,
}

/// Next-to-last continued-fraction convergent `a/b` of `s/m`, together with
/// `d = a·m - b·s`.
///
/// The expansion is the plain Euclidean one computed on the reduced fraction,
/// with two special cases. For `s = 0` the degenerate pair `(1, 1, m)` is
/// returned (the unique solution with `b <= m/|d| = 1`). When `s/m` reduces
/// to `1/2` its two Farey neighbours `0/1` and `1/1` tie on denominator and
/// the pair `(1, 1)` with `d > 0` is used. No sign normalization is applied
/// to `d`; callers branch on it.
pub fn convergent_pair(s: u64, m: u64) -> Result<ConvergentPair> {
    if m == 0 {
        return Err(Error::domain("convergent_pair requires m >= 1"));
    }
    if s >= m {
        return Err(Error::domain(format!(
            "convergent_pair requires s < m, got s={s}, m={m}"
        )));
    }
    if s == 0 {
        return Ok(ConvergentPair {
            a: 1,
            b: 1,
            d: m as i64,
        });
    }
    let g = gcd(s, m);
    let (sr, mr) = (s / g, m / g);
    if mr == 2 {
        return Ok(ConvergentPair {
            a: 1,
            b: 1,
            d: (m - s) as i64,
        });
    }
    // Convergents p_i/q_i of [0; a_1, a_2, ...] via the Euclidean algorithm
    // on (mr, sr); the loop ends with p/q = sr/mr and (pp, qp) next-to-last.
    let (mut pp, mut qp) = (1u64, 0u64);
    let (mut p, mut q) = (0u64, 1u64);
    let (mut num, mut den) = (sr, mr);
    while num != 0 {
        let quot = den / num;
        let rem = den % num;
        let (np, nq) = (quot * p + pp, quot * q + qp);
        (pp, qp) = (p, q);
        (p, q) = (np, nq);
        (den, num) = (num, rem);
    }
    debug_assert_eq!((p, q), (sr, mr));
    let d = (pp as i128 * m as i128 - qp as i128 * s as i128) as i64;
    Ok(ConvergentPair { a: pp, b: qp, d })
}

/// Rebound positions of a 45° billiard in a rectangle of perimeter `2m` whose
/// corners sit at `0, s, m, s + m`, scaled to exact integers.
///
/// The sequence `G(j)` has length `m / gcd(s, m)`, starts at `G(1) = 0`, and
/// satisfies `G(j) + G(j+1) ≡ 2s (mod 2m)` for odd `j` and `≡ 0 (mod 2m)`
/// for even `j`, with every entry in `[0, 2m)`.
pub fn billiard_sequence(s: u64, m: u64) -> Result<Vec<u64>> {
    if m == 0 || s == 0 || s >= m {
        return Err(Error::domain(format!(
            "billiard_sequence requires 0 < s < m, got s={s}, m={m}"
        )));
    }
    let len = (m / gcd(s, m)) as usize;
    let period = 2 * m;
    let mut seq = Vec::with_capacity(len);
    let mut cur = 0u64;
    seq.push(cur);
    for j in 1..len {
        cur = if j % 2 == 1 {
            (2 * s + period - cur) % period
        } else {
            (period - cur) % period
        };
        seq.push(cur);
    }
    Ok(seq)
}
