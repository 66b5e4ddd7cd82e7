//! Statistics over every sequence of a given order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphbuild::build_direct;
use crate::graphparams::{algebraic_connectivity, classify, clique_number, CliqueClass};
use crate::oracle;
use crate::seqcore::{count_compositions, enumerate_with_first, CreationSequence, PartCount};
use crate::spectra::{bulk_eigs, quotient_eigs};

pub const DEFAULT_ENUMERATE_CAP: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub value: usize,
    pub sequence: CreationSequence,
}

impl Witness {
    // Earlier sequences win ties, so merging blocks in order is deterministic.
    fn keep_min(slot: &mut Option<Witness>, other: Option<Witness>) {
        if let Some(o) = other {
            if slot.as_ref().is_none_or(|w| o.value < w.value) {
                *slot = Some(o);
            }
        }
    }

    fn keep_max(slot: &mut Option<Witness>, other: Option<Witness>) {
        if let Some(o) = other {
            if slot.as_ref().is_none_or(|w| o.value > w.value) {
                *slot = Some(o);
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub minus: u64,
    pub zero: u64,
    pub plus: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub n: usize,
    pub count: u64,
    /// Count predicted by the composition recurrence.
    pub expected_count: u64,
    /// Non-isomorphic graphs: sequences whose twin, if any, comes later.
    pub distinct_graphs: u64,
    /// m(G) → number of sequences.
    pub m_distribution: BTreeMap<usize, u64>,
    pub classes: ClassCounts,
    pub min_a: Option<Witness>,
    pub max_a: Option<Witness>,
    pub min_omega: Option<Witness>,
    pub max_omega: Option<Witness>,
    /// Oracle vertex connectivity; only filled when requested.
    pub min_kappa: Option<Witness>,
    pub max_kappa: Option<Witness>,
}

impl EnumerationStats {
    fn merge(mut self, other: EnumerationStats) -> EnumerationStats {
        self.count += other.count;
        self.distinct_graphs += other.distinct_graphs;
        for (m, c) in other.m_distribution {
            *self.m_distribution.entry(m).or_default() += c;
        }
        self.classes.minus += other.classes.minus;
        self.classes.zero += other.classes.zero;
        self.classes.plus += other.classes.plus;
        Witness::keep_min(&mut self.min_a, other.min_a);
        Witness::keep_max(&mut self.max_a, other.max_a);
        Witness::keep_min(&mut self.min_omega, other.min_omega);
        Witness::keep_max(&mut self.max_omega, other.max_omega);
        Witness::keep_min(&mut self.min_kappa, other.min_kappa);
        Witness::keep_max(&mut self.max_kappa, other.max_kappa);
        self
    }

    fn add(&mut self, s: &CreationSequence, with_kappa: bool) -> Result<()> {
        self.count += 1;
        if s.twin().is_none_or(|t| s.parts() < t.parts()) {
            self.distinct_graphs += 1;
        }
        let mut values = quotient_eigs(s)?;
        values.extend(bulk_eigs(s)?.iter().map(|b| b.value));
        values.sort_unstable();
        values.dedup();
        *self.m_distribution.entry(values.len()).or_default() += 1;

        match classify(s)?.class {
            CliqueClass::Minus => self.classes.minus += 1,
            CliqueClass::Zero => self.classes.zero += 1,
            CliqueClass::Plus => self.classes.plus += 1,
        }
        let w = |value| {
            Some(Witness {
                value,
                sequence: s.clone(),
            })
        };
        let a = algebraic_connectivity(s)?;
        Witness::keep_min(&mut self.min_a, w(a));
        Witness::keep_max(&mut self.max_a, w(a));
        let omega = clique_number(s)?;
        Witness::keep_min(&mut self.min_omega, w(omega));
        Witness::keep_max(&mut self.max_omega, w(omega));
        if with_kappa {
            let kappa = oracle::vertex_connectivity(build_direct(s)?.graph())?;
            Witness::keep_min(&mut self.min_kappa, w(kappa));
            Witness::keep_max(&mut self.max_kappa, w(kappa));
        }
        Ok(())
    }
}

/// Enumerates every even-length sequence of order `n` (blocks by first part,
/// in parallel) and aggregates. `with_kappa` runs the vertex-connectivity
/// oracle on each graph.
pub fn enumeration_stats(n: usize, cap: usize, with_kappa: bool) -> Result<EnumerationStats> {
    if n < 2 || n > cap {
        return Err(if n > cap {
            Error::TooLarge { n, cap }
        } else {
            Error::OrderTooSmall(n)
        });
    }
    let blocks: Vec<EnumerationStats> = (1..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = EnumerationStats::default();
            for s in enumerate_with_first(n, first, true) {
                acc.add(&s, with_kappa)?;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut total = blocks
        .into_iter()
        .fold(EnumerationStats::default(), EnumerationStats::merge);
    total.n = n;
    total.expected_count = count_compositions(n, PartCount::Even).expect("small n") as u64;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four() {
        let st = enumeration_stats(4, DEFAULT_ENUMERATE_CAP, true).unwrap();
        assert_eq!((st.count, st.expected_count), (4, 4));
        let max_omega = st.max_omega.unwrap();
        assert_eq!(max_omega.value, 4);
        assert_eq!(max_omega.sequence.parts(), &[3, 1]);
        assert_eq!(st.m_distribution.values().sum::<u64>(), 4);
        // κ = a for every non-complete graph, and K₄ has κ = a = 3.
        assert_eq!(st.min_kappa.unwrap().value, st.min_a.unwrap().value);
    }

    #[test]
    fn counts_and_ranges() {
        for n in 2..=12 {
            let st = enumeration_stats(n, DEFAULT_ENUMERATE_CAP, false).unwrap();
            assert_eq!(st.count, 1 << (n - 2));
            assert_eq!(st.count, st.expected_count);
            let c = &st.classes;
            assert_eq!(c.minus + c.zero + c.plus, st.count);
            assert_eq!(st.max_a.as_ref().unwrap().value, n);
        }
        assert_eq!(enumeration_stats(6, 26, false).unwrap().distinct_graphs, 15);
        assert_eq!(
            enumeration_stats(12, 26, false).unwrap().distinct_graphs,
            939
        );
        assert!(matches!(
            enumeration_stats(1, 26, false),
            Err(Error::OrderTooSmall(1))
        ));
        assert!(matches!(
            enumeration_stats(27, 26, false),
            Err(Error::TooLarge { n: 27, cap: 26 })
        ));
    }
}
