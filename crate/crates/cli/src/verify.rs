//! The `verify` subcommand: run the invariant suites and report one line
//! per invariant, with the first counterexample on failure.

use serde_json::{json, Value};

use akempic::enumerate::{self, CountMode};
use akempic::ivec::{self, IndexVector};
use akempic::numthy::{self, KCountMode, TCountMode};
use akempic::tri;
use akempic::Error;

use crate::Suite;

struct CheckResult {
    suite: &'static str,
    invariant: &'static str,
    checked: u64,
    counterexample: Option<String>,
}

struct Runner {
    results: Vec<CheckResult>,
}

impl Runner {
    fn run(
        &mut self,
        suite: &'static str,
        invariant: &'static str,
        body: impl FnOnce() -> (u64, Option<String>),
    ) {
        let (checked, counterexample) = body();
        let status = if counterexample.is_some() {
            "FAIL"
        } else {
            "ok"
        };
        eprintln!("[{suite}] {invariant}: {status} ({checked} cases)");
        self.results.push(CheckResult {
            suite,
            invariant,
            checked,
            counterexample,
        });
    }
}

pub fn cmd_verify(max_n: u64, suites: &[Suite]) -> Result<(), Error> {
    if max_n == 0 {
        return Err(Error::domain("verify requires --max-n >= 1"));
    }
    let mut runner = Runner {
        results: Vec::new(),
    };
    if suites.contains(&Suite::Arith) {
        run_arith(&mut runner, max_n);
    }
    if suites.contains(&Suite::Graph) {
        run_graph(&mut runner, max_n);
    }
    if suites.contains(&Suite::Kempe) {
        run_kempe(&mut runner, max_n.min(7));
    }
    let failures = runner
        .results
        .iter()
        .filter(|r| r.counterexample.is_some())
        .count();
    let results: Vec<Value> = runner
        .results
        .iter()
        .map(|r| {
            let mut row = json!({
                "suite": r.suite,
                "invariant": r.invariant,
                "pass": r.counterexample.is_none(),
                "checked": r.checked,
            });
            if let Some(ce) = &r.counterexample {
                row["counterexample"] = json!(ce);
            }
            row
        })
        .collect();
    println!(
        "{}",
        json!({ "max_n": max_n, "ok": failures == 0, "results": results })
    );
    if failures > 0 {
        return Err(Error::consistency(format!(
            "{failures} invariant(s) failed"
        )));
    }
    Ok(())
}

fn proper_for(n: u64) -> Vec<IndexVector> {
    enumerate::proper_vectors(n)
        .map(|u| u.proper)
        .unwrap_or_default()
}

/// Scan a fallible predicate over a sequence of cases; stop at the first
/// counterexample or error.
fn scan<I: IntoIterator<Item = T>, T: std::fmt::Display + Copy>(
    cases: I,
    mut check: impl FnMut(T) -> Result<bool, Error>,
) -> (u64, Option<String>) {
    let mut count = 0;
    for case in cases {
        match check(case) {
            Ok(true) => count += 1,
            Ok(false) => return (count, Some(format!("{case}"))),
            Err(e) => return (count, Some(format!("{case}: {e}"))),
        }
    }
    (count, None)
}

fn run_arith(runner: &mut Runner, max_n: u64) {
    let small = max_n.min(100);
    let vector_cap = max_n.min(300);

    runner.run("arith", "d formula = partition", || {
        scan(1..=max_n, |n| {
            Ok(enumerate::d_count(n, CountMode::Formula)?
                == enumerate::d_count(n, CountMode::Partition)?)
        })
    });
    runner.run("arith", "a formula = partition (odd n)", || {
        scan((1..=max_n).filter(|n| n % 2 == 1), |n| {
            Ok(enumerate::a_count(n, CountMode::Formula)?
                == enumerate::a_count(n, CountMode::Partition)?)
        })
    });
    runner.run("arith", "symmetric formula = partition", || {
        scan(2..=max_n, |n| {
            Ok(enumerate::symmetric_count(n, CountMode::Formula)?
                == enumerate::symmetric_count(n, CountMode::Partition)?)
        })
    });
    runner.run("arith", "order histogram case split", || {
        scan(1..=max_n, |n| {
            let h = enumerate::order_histogram(n)?;
            let theta_star = numthy::theta_star(n)?;
            Ok(if enumerate::has_order1_code(n) {
                h.order1 == 1 && h.order2 == (theta_star - 1) / 2
            } else {
                h.order1 == 0 && h.order2 == theta_star / 2
            })
        })
    });
    runner.run("arith", "codes tile the universe", || {
        scan(2..=max_n, |n| {
            let covered: usize = enumerate::codes_partition(n)?
                .codes
                .iter()
                .map(|c| c.len())
                .sum();
            Ok(covered as u64 == numthy::sigma(n)? - 3)
        })
    });
    runner.run("arith", "t brute = formula", || {
        scan(1..=max_n, |n| {
            Ok(numthy::t_count(n, TCountMode::Brute)? == numthy::t_count(n, TCountMode::Formula)?)
        })
    });
    runner.run("arith", "k paper = shifted (odd n)", || {
        scan((1..=max_n).filter(|n| n % 2 == 1), |n| {
            Ok(numthy::k_count(n, KCountMode::Paper)? == numthy::k_count(n, KCountMode::Shifted)?)
        })
    });
    runner.run("arith", "billiard sequence laws", || {
        let cases = (2..=small).flat_map(|m| (1..m).map(move |s| Pair(s, m)));
        scan(cases, |Pair(s, m)| {
            let d = numthy::gcd(s, m);
            let seq = numthy::billiard_sequence(s, m)?;
            let mut sorted = seq.clone();
            sorted.sort_unstable();
            let set_ok = sorted == (0..m / d).map(|i| 2 * d * i).collect::<Vec<_>>();
            let last = if (s / d) % 2 == 0 {
                s
            } else if (m / d) % 2 == 0 {
                m
            } else {
                s + m
            };
            Ok(set_ok && *seq.last().unwrap() == last % (2 * m))
        })
    });
    runner.run("arith", "convergent pair invariants", || {
        let cases = (1..=small).flat_map(|m| (0..m).map(move |s| Pair(s, m)));
        scan(cases, |Pair(s, m)| {
            let p = numthy::convergent_pair(s, m)?;
            let g = if s == 0 { m } else { numthy::gcd(s, m) };
            Ok(p.a as i64 * m as i64 - p.b as i64 * s as i64 == p.d
                && p.d.unsigned_abs() == g
                && p.b >= 1
                && p.b <= m / g)
        })
    });
    runner.run(
        "arith",
        "successor period 3 and product conservation",
        || {
            let cases = (1..=vector_cap).flat_map(proper_for);
            scan(cases, |v| {
                let w = ivec::successor(v);
                Ok(w.product() == v.product() && ivec::successor(ivec::successor(w)) == v)
            })
        },
    );
    runner.run("arith", "mirror involution", || {
        let cases = (1..=vector_cap).flat_map(proper_for);
        scan(cases, |v| Ok(ivec::mirror(ivec::mirror(v)) == v))
    });
    runner.run(
        "arith",
        "order-1 orbits are the diophantine triples",
        || {
            scan(1..=vector_cap, |n| {
                let fixed: Vec<IndexVector> = numthy::orbit1_vectors(n)?
                    .into_iter()
                    .map(|(k, m, s)| IndexVector::new(k, m, s))
                    .collect::<Result<_, _>>()?;
                for v in proper_for(n) {
                    if (ivec::orbit(v)?.len() == 1) != fixed.contains(&v) {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        },
    );
    runner.run("arith", "akempic gcd test = orbit test", || {
        let cases = (1..=vector_cap).flat_map(proper_for).filter(|v| v.k == 1);
        scan(cases, |v| {
            let by_gcd = ivec::is_akempic_arith(v)?;
            let by_orbit = ivec::orbit(v)?.vectors().iter().all(|w| w.k == 1);
            Ok(by_gcd == by_orbit)
        })
    });
}

fn run_graph(runner: &mut Runner, max_n: u64) {
    let iso_cap = max_n.min(12);

    runner.run("graph", "builder round-trip, size law, invariants", || {
        let cases = (1..=max_n).flat_map(proper_for);
        scan(cases, |v| {
            let g = tri::build(v)?;
            if g.vertex_count() as u64 != 2 * v.product() + 2 {
                return Ok(false);
            }
            g.validate()?;
            let measured = tri::index_vectors_from_graph(&g)?;
            Ok(measured.contains(&v) && measured.as_sorted() == ivec::orbit(v)?.as_sorted())
        })
    });
    runner.run("graph", "offset relation S- - S+ ≡ K (mod M)", || {
        let cases = (1..=max_n).flat_map(proper_for);
        scan(cases, |v| {
            let g = tri::build(v)?;
            for m in tri::measure_class_indices(&g)? {
                let (k, len) = (m.layer_count, m.path_length);
                if (m.s_minus + len - m.s_plus) % len != k % len {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    });
    runner.run(
        "graph",
        "crossing indices realize the billiard sequence",
        || {
            let cases = (1..=max_n).flat_map(proper_for);
            scan(cases, |v| {
                let g = tri::build(v)?;
                let coloring = tri::nonsingular_coloring(&g)?;
                let ec = tri::classify_edges(&g, &coloring, g.degree3_vertices()[0])?;
                let measures = tri::measure_class_indices(&g)?;
                for q in 0..3u8 {
                    let (m, s_plus) = (
                        measures[q as usize].path_length,
                        measures[q as usize].s_plus,
                    );
                    let crossings = tri::billiard_crossings(&g, &ec, q)?;
                    let ok = if s_plus == 0 {
                        crossings == vec![0]
                    } else {
                        crossings == numthy::billiard_sequence(s_plus, m)?
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        },
    );
    runner.run("graph", "offsets independent of path-end choices", || {
        let cases = (1..=iso_cap).flat_map(proper_for);
        scan(cases, |v| {
            let g = tri::build(v)?;
            let coloring = tri::nonsingular_coloring(&g)?;
            let ec = tri::classify_edges(&g, &coloring, g.degree3_vertices()[0])?;
            for q in 0..3u8 {
                let factor = tri::factor_structure(&g, &ec, q)?;
                for offset_class in [1u8, 2] {
                    let mut values = Vec::new();
                    for (ai, ci) in [(0usize, 1usize), (1, 0)] {
                        for reverse in [false, true] {
                            let a_path = if reverse {
                                factor.paths[ai].reversed()
                            } else {
                                factor.paths[ai].clone()
                            };
                            for c_end in [factor.paths[ci].start(), factor.paths[ci].end()] {
                                values.push(tri::measure_offset(
                                    &g,
                                    &ec,
                                    &a_path,
                                    c_end,
                                    (q + offset_class) % 3,
                                )?);
                            }
                        }
                    }
                    values.dedup();
                    if values.len() != 1 {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })
    });
    runner.run("graph", "isomorphism = code equality", || {
        let mut checked = 0;
        for n in 1..=iso_cap {
            let vectors = proper_for(n);
            let mut graphs = Vec::new();
            for &v in &vectors {
                match tri::build(v) {
                    Ok(g) => graphs.push(g),
                    Err(e) => return (checked, Some(format!("{v}: {e}"))),
                }
            }
            let forms: Vec<_> = graphs
                .iter()
                .map(|g| tri::canonical_form(g, false))
                .collect();
            let mirrored: Vec<_> = graphs
                .iter()
                .map(|g| tri::canonical_form(g, true))
                .collect();
            for i in 0..vectors.len() {
                for j in i..vectors.len() {
                    let isomorphic = forms[i] == forms[j] || forms[i] == mirrored[j];
                    let same_code = match (ivec::code(vectors[i]), ivec::code(vectors[j])) {
                        (Ok(a), Ok(b)) => a == b,
                        _ => return (checked, Some(format!("{} vs {}", vectors[i], vectors[j]))),
                    };
                    if isomorphic != same_code {
                        return (checked, Some(format!("{} vs {}", vectors[i], vectors[j])));
                    }
                    checked += 1;
                }
            }
        }
        (checked, None)
    });
}

fn run_kempe(runner: &mut Runner, max_n: u64) {
    runner.run("kempe", "Kempe closure singleton = gcd test", || {
        let cases = (1..=max_n).flat_map(proper_for);
        scan(cases, |v| {
            let g = tri::build(v)?;
            Ok(tri::is_akempic_bruteforce(&g)? == ivec::is_akempic_arith(v)?)
        })
    });
}

/// A `(s, m)` case with a display form for counterexamples.
#[derive(Clone, Copy)]
struct Pair(u64, u64);

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(s={}, m={})", self.0, self.1)
    }
}
