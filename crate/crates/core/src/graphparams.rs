//! Connectivity parameters, clique number and the clique-vs-connectivity
//! classification.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphbuild::{build_direct, degrees, edge_count};
use crate::oracle::{self, OracleParams};
use crate::seqcore::{enumerate, CreationSequence, FamilyTag};
use crate::spectra::distinct_count;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Position of ω relative to the last part α_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CliqueClass {
    Minus,
    Zero,
    Plus,
}

impl CliqueClass {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => CliqueClass::Minus,
            Ordering::Equal => CliqueClass::Zero,
            Ordering::Greater => CliqueClass::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CliqueClass::Minus => "<",
            CliqueClass::Zero => "=",
            CliqueClass::Plus => ">",
        }
    }
}

impl fmt::Display for CliqueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Smallest positive Laplacian eigenvalue.
///
/// The candidates are the second quotient eigenvalue (`α_k` for k ≥ 4, `n`
/// for k = 2) and, when `α_k ≥ 2`, the bulk eigenvalue `d_k = n − α_k`.
/// Every other eigenvalue is at least `α_k`.
pub fn algebraic_connectivity(s: &CreationSequence) -> Result<usize> {
    s.require_even()?;
    let n = s.n();
    let quotient = if s.k() == 2 { n } else { s.last() };
    Ok(if s.last() >= 2 {
        quotient.min(n - s.last())
    } else {
        quotient
    })
}

/// The part size α₁ (k = 2) or α_k (k ≥ 4).
///
/// Equals [`algebraic_connectivity`] except for complete graphs and for
/// sequences whose last part holds more than half of the vertices.
pub fn part_connectivity(s: &CreationSequence) -> Result<usize> {
    s.require_even()?;
    Ok(if s.k() == 2 { s.part(1) } else { s.last() })
}

/// `max_i { α_{2i−1} + (k/2 − i + 1) }`.
pub fn clique_number(s: &CreationSequence) -> Result<usize> {
    s.require_even()?;
    let half = s.k() / 2;
    Ok((1..=half)
        .map(|i| s.part(2 * i - 1) + half - i + 1)
        .max()
        .expect("k ≥ 2"))
}

pub fn min_degree(s: &CreationSequence) -> Result<usize> {
    Ok(*degrees(s)?.iter().min().expect("k ≥ 2"))
}

/// Whether `s` encodes `K_n`, i.e. `s = (n−1, 1)`.
pub fn is_complete(s: &CreationSequence) -> bool {
    s.k() == 2 && s.part(2) == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: CliqueClass,
    pub omega: usize,
    pub alpha_k: usize,
    pub a: usize,
    /// Sign of ω − a(G).
    pub verdict: CliqueClass,
}

impl Classification {
    /// Class and verdict coincide; guaranteed only for k ≥ 4.
    pub fn consistent(&self) -> bool {
        self.class == self.verdict
    }
}

pub fn classify(s: &CreationSequence) -> Result<Classification> {
    let omega = clique_number(s)?;
    let a = algebraic_connectivity(s)?;
    let alpha_k = s.last();
    Ok(Classification {
        class: CliqueClass::from_ordering(omega.cmp(&alpha_k)),
        omega,
        alpha_k,
        a,
        verdict: CliqueClass::from_ordering(omega.cmp(&a)),
    })
}

/// Inequalities tying a(G), κ, κ′, δ, n and m together, checked against
/// oracle connectivities. Failures are reported, not raised.
pub fn inequality_suite(s: &CreationSequence, oracle: &OracleParams) -> Result<Vec<Check>> {
    let a = algebraic_connectivity(s)?;
    let delta = min_degree(s)?;
    let m = edge_count(s)?;
    let n = s.n();
    let (kappa, kappa_p) = (oracle.kappa, oracle.kappa_prime);
    let mut checks = Vec::new();

    checks.push(Check::new(
        "whitney",
        kappa <= kappa_p && kappa_p <= delta,
        format!("κ={kappa} ≤ κ′={kappa_p} ≤ δ={delta}"),
    ));
    checks.push(Check::new("integral_positive", a >= 1, format!("a={a}")));
    let harary_upper = 2 * m / n;
    checks.push(Check::new(
        "harary_upper",
        kappa <= harary_upper,
        format!("κ={kappa} ≤ ⌊2m/n⌋={harary_upper}"),
    ));
    let pairs = (n - 1) * n.saturating_sub(2) / 2;
    let harary_lower = m.saturating_sub(pairs);
    checks.push(Check::new(
        "harary_lower",
        kappa >= harary_lower,
        format!("κ={kappa} ≥ max(0, m − C(n−1,2))={harary_lower}"),
    ));

    if is_complete(s) {
        checks.push(Check::new(
            "complete_kappa",
            kappa == n - 1,
            format!("complete graph: κ={kappa}, n−1={}", n - 1),
        ));
    } else {
        checks.push(Check::new(
            "fiedler",
            a <= kappa,
            format!("a={a} ≤ κ={kappa}"),
        ));
        checks.push(Check::new(
            "fiedler_order",
            a + 2 <= n,
            format!("a={a} ≤ n−2={}", n - 2),
        ));
        checks.push(Check::new(
            "cograph_equality",
            a == kappa,
            format!("a={a} = κ={kappa}"),
        ));
    }
    Ok(checks)
}

/// Comparison of ω and a(G) for the families with a known outcome.
pub fn family_corollary_checks(s: &CreationSequence) -> Result<Vec<Check>> {
    let c = classify(s)?;
    let k = s.k();
    let p = s.parts();
    let detail = format!("ω={} a={}", c.omega, c.a);
    let mut out = Vec::new();
    let mut expect = |name: &str, want: CliqueClass| {
        out.push(Check::new(
            name,
            c.verdict == want,
            format!("{detail}, expected ω {} a", want.symbol()),
        ));
    };

    // K_n has ω = a = n and belongs to none of the families below.
    if is_complete(s) {
        return Ok(out);
    }
    if k == 2 {
        expect("complete_split_omega_gt_a", CliqueClass::Plus);
    }
    if s.recognize_families()
        .iter()
        .any(|t| matches!(t, FamilyTag::ConstantSequence(_)))
    {
        expect("constant_omega_gt_a", CliqueClass::Plus);
    }
    let odd_parts: Vec<usize> = p.iter().step_by(2).copied().collect();
    if k >= 4 && s.last() == p[0] && odd_parts.windows(2).all(|w| w[0] > w[1]) {
        expect("decreasing_odd_omega_gt_a", CliqueClass::Plus);
    }
    if k >= 4 && p.iter().enumerate().all(|(i, &x)| x == p[0] + i) {
        expect("ramp_omega_eq_a", CliqueClass::Zero);
    }
    if k >= 4 && odd_parts.iter().all(|&x| x == p[0]) && s.last() == p[0] + k / 2 + 1 {
        expect("balanced_omega_lt_a", CliqueClass::Minus);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphParams {
    pub sequence: CreationSequence,
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub kappa: Option<usize>,
    pub kappa_prime: Option<usize>,
    pub delta: usize,
    pub omega: usize,
    pub m_distinct: usize,
    pub edges: usize,
    /// ω against α_k.
    pub class: CliqueClass,
    /// ω against a.
    pub verdict: CliqueClass,
    /// Oracle-backed inequality checks.
    pub checks: Vec<Check>,
    /// Family comparisons of ω and a; informational.
    pub corollaries: Vec<Check>,
}

impl GraphParams {
    /// Closed-form parameters; connectivities and the inequality suite are
    /// filled in only when `oracle` is given.
    pub fn compute(s: &CreationSequence, oracle: Option<&OracleParams>) -> Result<Self> {
        let c = classify(s)?;
        let mut checks = Vec::new();
        if let Some(o) = oracle {
            checks.extend(inequality_suite(s, o)?);
            checks.push(Check::new(
                "clique_oracle",
                o.omega == c.omega,
                format!("formula ω={} oracle ω={}", c.omega, o.omega),
            ));
        }
        Ok(Self {
            sequence: s.clone(),
            n: s.n(),
            k: s.k(),
            a: c.a,
            kappa: oracle.map(|o| o.kappa),
            kappa_prime: oracle.map(|o| o.kappa_prime),
            delta: min_degree(s)?,
            omega: c.omega,
            m_distinct: distinct_count(s)?,
            edges: edge_count(s)?,
            class: c.class,
            verdict: c.verdict,
            checks,
            corollaries: family_corollary_checks(s)?,
        })
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Extremal connectivity claims over all even-length C-graphs of order `n`.
pub fn extremal_checks(n: usize) -> Result<Vec<Check>> {
    if n < 4 {
        return Err(Error::OrderTooSmall(n));
    }
    struct Row {
        s: CreationSequence,
        a: usize,
        kappa: usize,
    }
    let rows = enumerate(n, true)?
        .map(|s| {
            let g = build_direct(&s)?;
            let kappa = oracle::vertex_connectivity(g.graph())?;
            Ok(Row {
                a: algebraic_connectivity(&s)?,
                kappa,
                s,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let target = CreationSequence::from_parts(vec![n - 2, 2])?;
    let mut checks = Vec::new();

    let non_complete: Vec<&Row> = rows.iter().filter(|r| !is_complete(&r.s)).collect();
    let max_a = non_complete.iter().map(|r| r.a).max().unwrap_or(0);
    let max_kappa = non_complete.iter().map(|r| r.kappa).max().unwrap_or(0);
    let target_row = non_complete.iter().find(|r| r.s == target);
    checks.push(Check::new(
        "max_connectivity_non_complete",
        max_a == n - 2
            && max_kappa == n - 2
            && target_row.is_some_and(|r| r.a == max_a && r.kappa == max_kappa),
        format!("max a={max_a}, max κ={max_kappa}, witness ({target})"),
    ));

    let long: Vec<&Row> = rows.iter().filter(|r| r.s.k() >= 4).collect();
    let min_long = long.iter().map(|r| r.a.min(r.kappa)).min().unwrap_or(0);
    let pendant_ok = long
        .iter()
        .filter(|r| r.s.last() == 1)
        .all(|r| r.a == 1 && r.kappa == 1);
    checks.push(Check::new(
        "min_connectivity_last_part_one",
        pendant_ok && min_long == 1,
        format!("min over k≥4 = {min_long}; every α_k = 1 graph has a = κ = 1: {pendant_ok}"),
    ));

    let split: Vec<&Row> = rows
        .iter()
        .filter(|r| r.s.k() == 2 && r.s.part(1) >= 2 && r.s.part(1) <= n - 2)
        .collect();
    let min_split = split.iter().min_by_key(|r| (r.a, r.s.clone()));
    let max_split = split.iter().max_by_key(|r| r.a);
    checks.push(Check::new(
        "complete_split_extremes",
        min_split.is_some_and(|r| r.a == 2 && r.s.part(1) == 2)
            && max_split.is_some_and(|r| r.a == n - 2 && r.s == target),
        format!(
            "min a={} at ({}), max a={} at ({})",
            min_split.map_or(0, |r| r.a),
            min_split.map_or(String::new(), |r| r.s.to_string()),
            max_split.map_or(0, |r| r.a),
            max_split.map_or(String::new(), |r| r.s.to_string()),
        ),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphbuild::build_direct;

    fn seq(p: &[i64]) -> CreationSequence {
        CreationSequence::validate(p).unwrap()
    }

    #[test]
    fn algebraic_connectivity_examples() {
        assert_eq!(algebraic_connectivity(&seq(&[24, 33])).unwrap(), 24);
        assert_eq!(
            algebraic_connectivity(&seq(&[5, 1, 1, 1, 1, 5])).unwrap(),
            5
        );
        assert_eq!(
            algebraic_connectivity(&seq(&[35, 20, 31, 40, 45, 50])).unwrap(),
            50
        );
        assert_eq!(
            algebraic_connectivity(&seq(&[1, 2, 3])),
            Err(Error::OddLengthUnsupported(3))
        );
    }

    #[test]
    fn large_last_part_lowers_connectivity() {
        // K_{3,4} plus an edge: the bulk eigenvalue n − α_k = 3 undercuts α_k.
        assert_eq!(algebraic_connectivity(&seq(&[1, 1, 1, 4])).unwrap(), 3);
        assert_eq!(part_connectivity(&seq(&[1, 1, 1, 4])).unwrap(), 4);
        assert_eq!(algebraic_connectivity(&seq(&[8, 3, 2, 15])).unwrap(), 13);
        assert_eq!(algebraic_connectivity(&seq(&[4, 1])).unwrap(), 5);
        assert_eq!(algebraic_connectivity(&seq(&[1, 1])).unwrap(), 2);
        for p in [
            &[1, 1, 1, 4][..],
            &[8, 3, 2, 15],
            &[4, 1],
            &[2, 2],
            &[3, 1, 2, 5, 1, 9],
        ] {
            let s = seq(p);
            let eigs = oracle::laplacian_eigs(build_direct(&s).unwrap().graph()).unwrap();
            assert!(
                (eigs[1] - algebraic_connectivity(&s).unwrap() as f64).abs() < 1e-8,
                "{s}"
            );
        }
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&seq(&[41, 29, 45, 35, 21, 20])).unwrap(), 47);
        assert_eq!(clique_number(&seq(&[1, 1, 1, 1])).unwrap(), 3);
        assert_eq!(clique_number(&seq(&[32, 59, 26, 19, 66, 29])).unwrap(), 67);
        assert_eq!(clique_number(&seq(&[4, 2, 3, 1])).unwrap(), 6);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(
            min_degree(&seq(&[8, 3, 4, 2, 1, 5, 6, 3, 7, 9])).unwrap(),
            15
        );
        assert_eq!(min_degree(&seq(&[4, 1])).unwrap(), 4);
        assert_eq!(min_degree(&seq(&[21, 3])).unwrap(), 21);
    }

    fn suite(p: &[i64]) -> (Vec<Check>, OracleParams) {
        let s = seq(p);
        let g = build_direct(&s).unwrap();
        let o = oracle::oracle_params(g.graph()).unwrap();
        (inequality_suite(&s, &o).unwrap(), o)
    }

    #[test]
    fn inequality_examples() {
        let (checks, o) = suite(&[2, 10]);
        assert_eq!((o.kappa, o.kappa_prime), (2, 2));
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");

        let (checks, o) = suite(&[4, 2, 3, 1]);
        assert_eq!(o.kappa, 1);
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");

        let (checks, o) = suite(&[4, 1]);
        assert_eq!(o.kappa, 4);
        assert!(checks.iter().any(|c| c.name == "complete_kappa" && c.pass));
        assert!(!checks.iter().any(|c| c.name == "fiedler"));
    }

    #[test]
    fn inequality_failures_are_reported() {
        let s = seq(&[2, 10]);
        let bogus = OracleParams {
            kappa: 5,
            kappa_prime: 1,
            omega: 3,
            eigs: vec![],
        };
        let checks = inequality_suite(&s, &bogus).unwrap();
        let failed: Vec<_> = checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        assert!(failed.contains(&"whitney") && failed.contains(&"cograph_equality"));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&seq(&[8, 3, 2, 15])).unwrap();
        assert_eq!((c.class, c.omega, c.alpha_k), (CliqueClass::Minus, 10, 15));
        assert_eq!((c.a, c.verdict), (13, CliqueClass::Minus));
        let c = classify(&seq(&[14, 9, 4, 16])).unwrap();
        assert_eq!((c.class, c.omega, c.a), (CliqueClass::Zero, 16, 16));
        let c = classify(&seq(&[20, 11, 15, 19, 29, 31])).unwrap();
        assert_eq!((c.class, c.omega, c.a), (CliqueClass::Minus, 30, 31));
        // α_k above n/2: ω = a although ω < α_k.
        let c = classify(&seq(&[1, 1, 1, 4])).unwrap();
        assert_eq!(
            (c.class, c.verdict, c.a),
            (CliqueClass::Minus, CliqueClass::Zero, 3)
        );
        // k = 2: the class against α_k and the verdict against a(G) split.
        let c = classify(&seq(&[2, 10])).unwrap();
        assert_eq!(
            (c.class, c.verdict),
            (CliqueClass::Minus, CliqueClass::Plus)
        );
        assert!(!c.consistent());
    }

    #[test]
    fn extremal_order_six() {
        let checks = extremal_checks(6).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        assert!(checks[0].detail.contains("max a=4"));
        assert!(checks[2].detail.contains("min a=2 at (2,4)"));
        assert!(checks[2].detail.contains("max a=4 at (4,2)"));
        assert_eq!(extremal_checks(3), Err(Error::OrderTooSmall(3)));
    }

    #[test]
    fn corollary_examples() {
        let names = |p: &[i64]| -> Vec<(String, bool)> {
            family_corollary_checks(&seq(p))
                .unwrap()
                .into_iter()
                .map(|c| (c.name, c.pass))
                .collect()
        };
        assert_eq!(names(&[2, 3, 4, 5]), vec![("ramp_omega_eq_a".into(), true)]);
        assert_eq!(
            names(&[6, 6, 6, 6]),
            vec![("constant_omega_gt_a".into(), true)]
        );
        assert_eq!(
            names(&[3, 7, 3, 6]),
            vec![("balanced_omega_lt_a".into(), true)]
        );
        assert_eq!(
            names(&[5, 2, 3, 5]),
            vec![("decreasing_odd_omega_gt_a".into(), true)]
        );
        assert!(names(&[3, 2, 2, 4]).is_empty());
        assert!(names(&[4, 1]).is_empty());
        // Balanced pattern with α = 1, k = 4: ω = a = 3, reported as a failure.
        assert_eq!(
            names(&[1, 1, 1, 4]),
            vec![("balanced_omega_lt_a".into(), false)]
        );
    }

    #[test]
    fn params_record() {
        let p = GraphParams::compute(&seq(&[24, 33]), None).unwrap();
        assert_eq!((p.omega, p.a, p.class), (25, 24, CliqueClass::Minus));
        assert_eq!(p.verdict, CliqueClass::Plus);
        assert!(p.checks.is_empty());
        assert_eq!(p.corollaries.len(), 1);
        assert!(p.all_pass());
        assert_eq!(p.kappa, None);
        let s = seq(&[4, 2, 3, 1]);
        let o = oracle::oracle_params(build_direct(&s).unwrap().graph()).unwrap();
        let p = GraphParams::compute(&s, Some(&o)).unwrap();
        assert_eq!(p.kappa, Some(1));
        assert!(p.all_pass(), "{:?}", p.checks);
    }
}
