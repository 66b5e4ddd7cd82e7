//! Serializable per-sequence reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphbuild::{build_direct, build_recursive};
use crate::oracle;
use crate::seqcore::CreationSequence;
use crate::spectra::full_spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectrumPath {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "oracle-path")]
    Oracle,
}

/// Spectrum report. Odd-length sequences go through the eigensolver and
/// carry no quotient or bulk breakdown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub sequence: CreationSequence,
    pub n: usize,
    pub k: usize,
    pub path: SpectrumPath,
    pub quotient_eigs: Option<Vec<i64>>,
    /// `[value, multiplicity]` per part, in part order.
    pub bulk_eigs: Option<Vec<[i64; 2]>>,
    pub distinct: Vec<i64>,
    pub m: usize,
    pub algebraic_connectivity: Option<i64>,
    pub spectral_radius: i64,
    /// Whether the eigensolver agrees with the closed form (only when requested).
    pub oracle_agrees: Option<bool>,
}

fn distinct_sorted(values: &[i64]) -> Vec<i64> {
    let mut d = values.to_vec();
    d.sort_unstable();
    d.dedup();
    d
}

fn oracle_spectrum(s: &CreationSequence, even: bool) -> Result<Vec<i64>> {
    let g = if even {
        build_direct(s)?
    } else {
        build_recursive(s)
    };
    let eigs = oracle::laplacian_eigs(g.graph())?;
    oracle::round_to_integers(&eigs, oracle::INTEGRALITY_TOL).ok_or_else(|| {
        Error::ConsistencyFailure(format!("non-integral Laplacian eigenvalue for {s}"))
    })
}

pub fn spectrum_report(s: &CreationSequence, with_oracle: bool) -> Result<SpectrumReport> {
    if !s.is_even() {
        let multiset = oracle_spectrum(s, false)?;
        let distinct = distinct_sorted(&multiset);
        return Ok(SpectrumReport {
            sequence: s.clone(),
            n: s.n(),
            k: s.k(),
            path: SpectrumPath::Oracle,
            quotient_eigs: None,
            bulk_eigs: None,
            m: distinct.len(),
            distinct,
            algebraic_connectivity: multiset.get(1).copied(),
            spectral_radius: *multiset.last().expect("n ≥ 1"),
            oracle_agrees: None,
        });
    }
    let sp = full_spectrum(s)?;
    let oracle_agrees = if with_oracle {
        Some(oracle_spectrum(s, true)? == sp.multiset)
    } else {
        None
    };
    Ok(SpectrumReport {
        sequence: s.clone(),
        n: s.n(),
        k: s.k(),
        path: SpectrumPath::ClosedForm,
        quotient_eigs: Some(sp.quotient_eigs.clone()),
        bulk_eigs: Some(
            sp.bulk_eigs
                .iter()
                .map(|b| [b.value, b.multiplicity as i64])
                .collect(),
        ),
        distinct: sp.distinct(),
        m: sp.distinct_count(),
        algebraic_connectivity: Some(sp.algebraic_connectivity()),
        spectral_radius: sp.spectral_radius(),
        oracle_agrees,
    })
}
