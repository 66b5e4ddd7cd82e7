//! Corpus-wide comparison of every closed form against the oracles.
//!
//! The corpus is every even-length sequence of order `2..=max_n`, followed
//! by `samples` random sequences from a seeded generator. Results come back
//! in corpus order whatever the number of worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graphbuild::{build_direct, build_recursive, degrees, CGraph};
use crate::graphparams::{
    algebraic_connectivity, classify, clique_number, family_corollary_checks, inequality_suite,
};
use crate::oracle::{self, DenseSymmetricMatrix, OracleParams};
use crate::seqcore::{enumerate, random_even_sequence, CreationSequence, FamilyTag};
use crate::spectra::{
    eigenvector_identities, four_eig_characterization, full_spectrum, main_eigenvalue_check,
    quotient_matrix, CharacteristicMatrix,
};

/// Deliberate corruption of the production build, for exercising the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Flip adjacency between two 0-based vertices (when both exist).
    FlipEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub sample_max_k: usize,
    pub sample_max_n: usize,
    /// Sampled graphs above this order skip the clique oracle.
    pub clique_max_n: usize,
    /// Graphs above this order skip the connectivity oracles.
    pub connectivity_max_n: usize,
    pub p4_max_n: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: 12,
            samples: 500,
            seed: 7,
            sample_max_k: 10,
            sample_max_n: 64,
            clique_max_n: 40,
            connectivity_max_n: 12,
            p4_max_n: oracle::DEFAULT_P4_CAP,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Exhaustive,
    Sampled,
}

pub fn corpus(config: &VerifyConfig) -> Result<Vec<(CreationSequence, Origin)>> {
    let mut out = Vec::new();
    for n in 2..=config.max_n {
        out.extend(enumerate(n, true)?.map(|s| (s, Origin::Exhaustive)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.samples {
        let s = random_even_sequence(&mut rng, config.sample_max_k, config.sample_max_n);
        out.push((s, Origin::Sampled));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub invariant: &'static str,
    pub pass: bool,
    pub detail: String,
}

struct Recorder(Vec<Outcome>);

impl Recorder {
    fn check(&mut self, invariant: &'static str, pass: bool, detail: impl FnOnce() -> String) {
        let detail = if pass { String::new() } else { detail() };
        self.0.push(Outcome {
            invariant,
            pass,
            detail,
        });
    }

    fn result<T>(&mut self, invariant: &'static str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(invariant, false, || e.to_string());
                None
            }
        }
    }
}

pub const INVARIANTS: &[&str] = &[
    "build_equivalence",
    "part_degrees",
    "connected",
    "laplacian_identities",
    "quotient_intertwining",
    "spectrum_oracle",
    "single_zero_eigenvalue",
    "trace_identity",
    "quotient_structure",
    "eigvec_identities",
    "main_eigenvalue",
    "distinct_bounds",
    "clique_oracle",
    "connectivity_chain",
    "p4_free",
    "algebraic_connectivity",
];

fn production_build(s: &CreationSequence, fault: Option<Fault>) -> Result<CGraph> {
    let mut g = build_direct(s)?;
    if let Some(Fault::FlipEdge(u, v)) = fault {
        if u < g.n() && v < g.n() && u != v {
            g.corrupt_edge(u, v);
        }
    }
    Ok(g)
}

/// Runs every applicable invariant on one sequence.
pub fn check_sequence(s: &CreationSequence, origin: Origin, config: &VerifyConfig) -> Vec<Outcome> {
    let mut rec = Recorder(Vec::new());
    let n = s.n();
    let k = s.k();

    let Some(g) = rec.result("build_equivalence", production_build(s, config.fault)) else {
        return rec.0;
    };
    let reference = build_recursive(s);
    rec.check("build_equivalence", g.graph() == reference.graph(), || {
        format!(
            "direct and recursive builds differ ({} vs {} edges)",
            g.edge_count(),
            reference.edge_count()
        )
    });

    let Some(d) = rec.result("part_degrees", degrees(s)) else {
        return rec.0;
    };
    let uniform = (0..n).all(|v| g.graph().degree(v) == d[g.part_of(v) - 1]);
    rec.check("part_degrees", uniform, || {
        format!("vertex degrees disagree with {d:?}")
    });
    rec.check("connected", g.graph().is_connected(), || {
        "graph is disconnected".into()
    });

    let l = g.laplacian();
    let weighted: i64 = s
        .parts()
        .iter()
        .zip(&d)
        .map(|(&a, &d)| (a * d) as i64)
        .sum();
    rec.check(
        "laplacian_identities",
        l.is_symmetric() && l.row_sums_zero() && l.trace() == weighted,
        || format!("trace {} vs Σαd {weighted}", l.trace()),
    );

    let Some(q) = rec.result("quotient_intertwining", quotient_matrix(s)) else {
        return rec.0;
    };
    let p = CharacteristicMatrix::new(s);
    rec.check("quotient_intertwining", p.intertwines(&l, &q), || {
        "LP ≠ PQ".into()
    });

    let Some(spectrum) = rec.result("quotient_structure", full_spectrum(s)) else {
        return rec.0;
    };

    match oracle::eig_symmetric(&DenseSymmetricMatrix::from(&l), oracle::DEFAULT_TOL) {
        Ok(eigs) => {
            let max_dev = eigs
                .iter()
                .zip(&spectrum.multiset)
                .map(|(x, &y)| (x - y as f64).abs())
                .fold(0.0f64, f64::max);
            let rounded = oracle::round_to_integers(&eigs, oracle::INTEGRALITY_TOL);
            rec.check(
                "spectrum_oracle",
                max_dev < oracle::INTEGRALITY_TOL
                    && rounded.as_deref() == Some(&spectrum.multiset[..]),
                || format!("max deviation {max_dev:e}; oracle {rounded:?}"),
            );
            let zeros = eigs
                .iter()
                .filter(|x| x.abs() < oracle::INTEGRALITY_TOL)
                .count();
            rec.check("single_zero_eigenvalue", zeros == 1, || {
                format!("{zeros} zero eigenvalues")
            });
            if let Ok(a) = algebraic_connectivity(s) {
                let second = eigs.get(1).copied().unwrap_or(f64::NAN);
                rec.check(
                    "algebraic_connectivity",
                    (second - a as f64).abs() < oracle::INTEGRALITY_TOL
                        && spectrum.algebraic_connectivity() == a as i64,
                    || format!("closed form {a}, oracle {second}"),
                );
            }
        }
        Err(e) => rec.check("spectrum_oracle", false, || e.to_string()),
    }

    rec.check("trace_identity", spectrum.sum() == weighted, || {
        format!("Σλ = {} vs Σαd = {weighted}", spectrum.sum())
    });

    let lam = &spectrum.quotient_eigs;
    let top_simple = k == 2 && s.part(1) > 1 || spectrum.merged()[&(n as i64)] == 1;
    rec.check(
        "quotient_structure",
        lam[0] == 0
            && lam[k - 1] == n as i64
            && lam.windows(2).all(|w| w[0] < w[1])
            && lam[k / 2] == d[0] as i64 + 1
            && top_simple,
        || format!("quotient eigenvalues {lam:?}"),
    );

    let identities = eigenvector_identities(s, &l);
    rec.check("eigvec_identities", identities == Ok(true), || {
        format!("{identities:?}")
    });

    let main = main_eigenvalue_check(s);
    rec.check("main_eigenvalue", main == Ok(true), || format!("{main:?}"));

    let m = spectrum.distinct_count();
    let constant = s
        .recognize_families()
        .iter()
        .any(|t| matches!(t, FamilyTag::ConstantSequence(p) if *p >= 2));
    let bounds = k <= m && m < 2 * k;
    let constant_ok = !constant || m == k + 1;
    let four_ok = k != 4 || (m == 4) == four_eig_characterization(s);
    rec.check("distinct_bounds", bounds && constant_ok && four_ok, || {
        format!(
            "m = {m}, k = {k}, constant = {constant}, five-form match = {}",
            four_eig_characterization(s)
        )
    });

    let Some(omega) = rec.result("clique_oracle", clique_number(s)) else {
        return rec.0;
    };
    let run_clique = origin == Origin::Exhaustive || n <= config.clique_max_n;
    if run_clique {
        let brute = oracle::max_clique(g.graph());
        rec.check("clique_oracle", brute == omega, || {
            format!("formula {omega}, oracle {brute}")
        });
    }

    if n <= config.connectivity_max_n {
        let params = oracle::vertex_connectivity(g.graph()).and_then(|kappa| {
            Ok(OracleParams {
                kappa,
                kappa_prime: oracle::edge_connectivity(g.graph())?,
                omega,
                eigs: Vec::new(),
            })
        });
        match params.and_then(|o| inequality_suite(s, &o)) {
            Ok(checks) => {
                let failed: Vec<String> = checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| format!("{}: {}", c.name, c.detail))
                    .collect();
                rec.check("connectivity_chain", failed.is_empty(), || {
                    failed.join("; ")
                });
            }
            Err(e) => rec.check("connectivity_chain", false, || e.to_string()),
        }
    }

    if n <= config.p4_max_n {
        match oracle::induced_p4_scan(g.graph(), config.p4_max_n) {
            Ok(found) => rec.check("p4_free", !found, || "induced P₄ found".into()),
            Err(e) => rec.check("p4_free", false, || e.to_string()),
        }
    }

    rec.0
}

/// Sequences for which the α_k-based class differs from the sign of ω − a(G),
/// and corollary-family comparisons that do not hold. Reported, not failures.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exceptions {
    pub class_splits: Vec<CreationSequence>,
    pub corollary_exceptions: Vec<(CreationSequence, String)>,
}

fn exceptions(items: &[(CreationSequence, Origin)]) -> Exceptions {
    let mut out = Exceptions::default();
    for (s, _) in items {
        if classify(s).is_ok_and(|c| !c.consistent()) {
            out.class_splits.push(s.clone());
        }
        if let Ok(checks) = family_corollary_checks(s) {
            for c in checks.into_iter().filter(|c| !c.pass) {
                out.corollary_exceptions.push((s.clone(), c.name));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub invariant: String,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub sequence: CreationSequence,
    pub origin: Origin,
    pub invariant: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub exhaustive: usize,
    pub sampled: usize,
    pub exceptions: Exceptions,
    pub tallies: Vec<Tally>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies the whole corpus on the current rayon pool.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let items = corpus(config)?;
    let results: Vec<Vec<Outcome>> = items
        .par_iter()
        .map(|(s, origin)| check_sequence(s, *origin, config))
        .collect();

    let mut tallies: Vec<Tally> = INVARIANTS
        .iter()
        .map(|name| Tally {
            invariant: name.to_string(),
            checked: 0,
            failed: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for ((s, origin), outcomes) in items.iter().zip(results) {
        for o in outcomes {
            let t = tallies
                .iter_mut()
                .find(|t| t.invariant == o.invariant)
                .expect("invariant is registered");
            t.checked += 1;
            if !o.pass {
                t.failed += 1;
                failures.push(Failure {
                    sequence: s.clone(),
                    origin: *origin,
                    invariant: o.invariant.to_string(),
                    detail: o.detail,
                });
            }
        }
    }
    let exceptions = exceptions(&items);

    Ok(VerifyReport {
        max_n: config.max_n,
        samples: config.samples,
        seed: config.seed,
        exhaustive: items
            .iter()
            .filter(|(_, o)| *o == Origin::Exhaustive)
            .count(),
        sampled: items.iter().filter(|(_, o)| *o == Origin::Sampled).count(),
        exceptions,
        tallies,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(samples: usize) -> VerifyConfig {
        VerifyConfig {
            max_n: 7,
            samples,
            sample_max_n: 20,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = corpus(&small(20)).unwrap();
        let b = corpus(&small(20)).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.iter().filter(|(_, o)| *o == Origin::Exhaustive).count(),
            (2..=7).map(|n| 1usize << (n - 2)).sum::<usize>()
        );
    }

    #[test]
    fn clean_run_passes() {
        let report = run(&small(20)).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(
            report.tallies.iter().all(|t| t.checked > 0),
            "{:?}",
            report.tallies
        );
    }

    #[test]
    fn flipped_edge_is_caught() {
        let config = VerifyConfig {
            fault: Some(Fault::FlipEdge(0, 1)),
            ..small(0)
        };
        let report = run(&config).unwrap();
        assert!(!report.passed());
        let names: std::collections::BTreeSet<_> = report
            .failures
            .iter()
            .map(|f| f.invariant.as_str())
            .collect();
        assert!(names.contains("build_equivalence"));
        assert!(names.contains("spectrum_oracle"));
    }
}
