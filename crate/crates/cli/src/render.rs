//! TSV and human-readable output. JSON goes straight through serde.

use std::collections::BTreeSet;
use std::io::{self, Write};

use cgraph::graphparams::{Classification, CliqueClass, GraphParams};
use cgraph::report::{SpectrumPath, SpectrumReport};
use cgraph::stats::{EnumerationStats, Witness};
use cgraph::tables::{CliqueRowResult, DistinctRowResult, Status};
use cgraph::verify::VerifyReport;
use cgraph::{CreationSequence, FamilyTag};
use serde::Serialize;

pub trait Render: Serialize {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()>;
    fn pretty(&self, out: &mut dyn Write) -> io::Result<()>;
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn bulk_text(bulk: &[[i64; 2]]) -> String {
    bulk.iter()
        .map(|[v, m]| format!("{v}^{m}"))
        .collect::<Vec<_>>()
        .join(",")
}

impl Render for SpectrumReport {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "sequence\tn\tk\tpath\tm\tdistinct\ta\tspectral_radius\tquotient_eigs\tbulk_eigs"
        )?;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.sequence,
            self.n,
            self.k,
            path_label(self.path),
            self.m,
            join(&self.distinct),
            opt(self.algebraic_connectivity),
            self.spectral_radius,
            self.quotient_eigs.as_deref().map_or("-".into(), join),
            self.bulk_eigs.as_deref().map_or("-".into(), bulk_text),
        )
    }

    fn pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "C({})  n={} k={}  [{}]",
            self.sequence,
            self.n,
            self.k,
            path_label(self.path)
        )?;
        if let Some(q) = &self.quotient_eigs {
            writeln!(out, "quotient eigenvalues: {}", join(q))?;
        }
        if let Some(b) = &self.bulk_eigs {
            writeln!(out, "bulk eigenvalues:     {}", bulk_text(b))?;
        }
        writeln!(
            out,
            "distinct (m={}):      {}",
            self.m,
            join(&self.distinct)
        )?;
        writeln!(
            out,
            "algebraic connectivity: {}",
            opt(self.algebraic_connectivity)
        )?;
        writeln!(out, "spectral radius:        {}", self.spectral_radius)?;
        if let Some(agrees) = self.oracle_agrees {
            writeln!(
                out,
                "oracle: {}",
                if agrees { "agrees" } else { "DISAGREES" }
            )?;
        }
        Ok(())
    }
}

fn path_label(p: SpectrumPath) -> &'static str {
    match p {
        SpectrumPath::ClosedForm => "closed-form",
        SpectrumPath::Oracle => "oracle-path",
    }
}

impl Render for GraphParams {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "sequence\tn\tk\ta\tkappa\tkappa_prime\tdelta\tomega\tm\tclass"
        )?;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.sequence,
            self.n,
            self.k,
            self.a,
            opt(self.kappa),
            opt(self.kappa_prime),
            self.delta,
            self.omega,
            self.m_distinct,
            self.class
        )
    }

    fn pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "C({})  n={} k={} edges={}",
            self.sequence, self.n, self.k, self.edges
        )?;
        writeln!(
            out,
            "a={} kappa={} kappa'={} delta={}",
            self.a,
            opt(self.kappa),
            opt(self.kappa_prime),
            self.delta
        )?;
        writeln!(
            out,
            "omega={} m={} class={}",
            self.omega, self.m_distinct, self.class
        )?;
        for c in &self.checks {
            writeln!(
                out,
                "  [{}] {} {}",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub sequence: CreationSequence,
    pub omega: usize,
    pub alpha_k: usize,
    pub a: usize,
    /// ω against α_k.
    pub class: CliqueClass,
    /// ω against a.
    pub verdict: CliqueClass,
    pub consistent: bool,
    pub families: BTreeSet<FamilyTag>,
}

impl ClassifyReport {
    pub fn new(s: &CreationSequence, c: Classification) -> Self {
        Self {
            sequence: s.clone(),
            omega: c.omega,
            alpha_k: c.alpha_k,
            a: c.a,
            class: c.class,
            verdict: c.verdict,
            consistent: c.consistent(),
            families: s.recognize_families(),
        }
    }

    fn family_text(&self) -> String {
        self.families
            .iter()
            .map(|f| format!("{f:?}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Render for ClassifyReport {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "sequence\tomega\talpha_k\ta\tclass\tverdict\tfamilies")?;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.sequence,
            self.omega,
            self.alpha_k,
            self.a,
            self.class,
            self.verdict,
            self.family_text()
        )
    }

    fn pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "C({})", self.sequence)?;
        writeln!(
            out,
            "omega={} alpha_k={} -> {} ({})",
            self.omega,
            self.alpha_k,
            self.class,
            self.class.symbol()
        )?;
        writeln!(
            out,
            "omega={} a={} -> {} ({})",
            self.omega,
            self.a,
            self.verdict,
            self.verdict.symbol()
        )?;
        writeln!(out, "families: {}", self.family_text())
    }
}

impl Render for Vec<DistinctRowResult> {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "row\tsequence\tprinted_m\tcomputed_m\tm_status\tprinted_distinct\tcomputed_distinct\tdistinct_status\tnote"
        )?;
        for r in self {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.row,
                r.sequence,
                r.printed_m,
                r.computed_m,
                r.m_status.label(),
                join(&r.printed_distinct),
                join(&r.computed_distinct),
                r.distinct_status.label(),
                r.note
            )?;
        }
        Ok(())
    }

    fn pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        for r in self {
            writeln!(
                out,
                "{:>2}  {:<24} m {:>2}/{:<2} {:<5}  distinct {}",
                r.row,
                r.sequence.to_string(),
                r.printed_m,
                r.computed_m,
                r.m_status.label(),
                r.distinct_status.label()
            )?;
            if r.distinct_status == Status::Flag {
                writeln!(out, "      printed  {}", join(&r.printed_distinct))?;
                writeln!(out, "      computed {}", join(&r.computed_distinct))?;
            }
            if !r.note.is_empty() {
                writeln!(out, "      {}", r.note)?;
            }
        }
        Ok(())
    }
}

impl Render for Vec<CliqueRowResult> {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "row\tsequence\tn\tk\tshape_status\tprinted_omega\tcomputed_omega\toracle_omega\tomega_status\tprinted_a\tcomputed_a\ta_status\tprinted_comparison\tcomputed_comparison\tcomparison_status\tnote"
        )?;
        for r in self {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.row,
                r.sequence,
                r.sequence.n(),
                r.sequence.k(),
                r.shape_status.label(),
                r.printed_omega,
                r.computed_omega,
                r.oracle_omega,
                r.omega_status.label(),
                r.printed_a,
                r.computed_a,
                r.a_status.label(),
                r.printed_comparison.symbol(),
                r.computed_comparison.symbol(),
                r.comparison_status.label(),
                r.note
            )?;
        }
        Ok(())
    }

    fn pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        for r in self {
            writeln!(
                out,
                "{:>2}  {:<22} ω {:>2}/{:<2} {:<5}  a {:>2}/{:<2} {:<5}  {} {}",
                r.row,
                r.sequence.to_string(),
                r.printed_omega,
                r.computed_omega,
                r.omega_status.label(),
                r.printed_a,
                r.computed_a,
                r.a_status.label(),
                r.computed_comparison.symbol(),
                r.comparison_status.label()
            )?;
            if !r.note.is_empty() {
                writeln!(out, "      {}", r.note)?;
            }
        }
        Ok(())
    }
}

fn witness(w: &Option<Witness>) -> String {
    w.as_ref().map_or_else(
        || "-".into(),
        |w| format!("{} at ({})", w.value, w.sequence),
    )
}

impl Render for EnumerationStats {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "key\tvalue")?;
        writeln!(out, "n\t{}", self.n)?;
        writeln!(out, "count\t{}", self.count)?;
        writeln!(out, "distinct_graphs\t{}", self.distinct_graphs)?;
        for (m, c) in &self.m_distribution {
            writeln!(out, "m={m}\t{c}")?;
        }
        writeln!(out, "class_minus\t{}", self.classes.minus)?;
        writeln!(out, "class_zero\t{}", self.classes.zero)?;
        writeln!(out, "class_plus\t{}", self.classes.plus)?;
        for (name, w) in self.witnesses() {
            writeln!(out, "{name}\t{}", witness(w))?;
        }
        Ok(())
    }

    fn pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "n={}  count={}  distinct graphs={}",
            self.n, self.count, self.distinct_graphs
        )?;
        let dist: Vec<String> = self
            .m_distribution
            .iter()
            .map(|(m, c)| format!("{m}:{c}"))
            .collect();
        writeln!(out, "m distribution: {}", dist.join(" "))?;
        writeln!(
            out,
            "classes: Minus {}  Zero {}  Plus {}",
            self.classes.minus, self.classes.zero, self.classes.plus
        )?;
        for (name, w) in self.witnesses() {
            if w.is_some() {
                writeln!(out, "{name}: {}", witness(w))?;
            }
        }
        Ok(())
    }
}

trait Witnesses {
    fn witnesses(&self) -> [(&'static str, &Option<Witness>); 6];
}

impl Witnesses for EnumerationStats {
    fn witnesses(&self) -> [(&'static str, &Option<Witness>); 6] {
        [
            ("min_a", &self.min_a),
            ("max_a", &self.max_a),
            ("min_omega", &self.min_omega),
            ("max_omega", &self.max_omega),
            ("min_kappa", &self.min_kappa),
            ("max_kappa", &self.max_kappa),
        ]
    }
}

impl Render for VerifyReport {
    fn tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "invariant\tchecked\tfailed")?;
        for t in &self.tallies {
            writeln!(out, "{}\t{}\t{}", t.invariant, t.checked, t.failed)?;
        }
        for f in &self.failures {
            writeln!(out, "FAIL\t{}\t{}\t{}", f.invariant, f.sequence, f.detail)?;
        }
        Ok(())
    }

    fn pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "verify: max_n={} samples={} seed={}  ({} exhaustive + {} sampled)",
            self.max_n, self.samples, self.seed, self.exhaustive, self.sampled
        )?;
        for t in &self.tallies {
            writeln!(
                out,
                "  {:<24} {:>6} checked  {:>4} failed",
                t.invariant, t.checked, t.failed
            )?;
        }
        writeln!(
            out,
            "reported: {} class splits, {} corollary exceptions",
            self.exceptions.class_splits.len(),
            self.exceptions.corollary_exceptions.len()
        )?;
        for f in &self.failures {
            writeln!(
                out,
                "FAIL {} on ({}): {}",
                f.invariant, f.sequence, f.detail
            )?;
        }
        writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}
