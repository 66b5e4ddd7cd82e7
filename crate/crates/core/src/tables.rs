//! The two published tables, embedded with their printed values and
//! recomputed cell by cell.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graphbuild::build_direct;
use crate::graphparams::{algebraic_connectivity, clique_number, part_connectivity, CliqueClass};
use crate::oracle;
use crate::seqcore::CreationSequence;
use crate::spectra::full_spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "FLAG")]
    Flag,
}

impl Status {
    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Match
        } else {
            Status::Flag
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Flag => "FLAG",
        }
    }
}

pub struct DistinctRow {
    pub k: usize,
    pub sequence: &'static [usize],
    pub m: usize,
    pub distinct: &'static [i64],
}

/// Distinct Laplacian eigenvalues of C-graphs on 24 vertices, as printed.
pub const DISTINCT_TABLE: [DistinctRow; 10] = [
    DistinctRow {
        k: 2,
        sequence: &[21, 3],
        m: 3,
        distinct: &[0, 21, 24],
    },
    DistinctRow {
        k: 4,
        sequence: &[5, 1, 6, 12],
        m: 4,
        distinct: &[0, 12, 18, 24],
    },
    DistinctRow {
        k: 4,
        sequence: &[6, 6, 6, 6],
        m: 5,
        distinct: &[0, 6, 12, 18, 24],
    },
    DistinctRow {
        k: 4,
        sequence: &[10, 1, 10, 3],
        m: 6,
        distinct: &[0, 3, 13, 14, 21, 24],
    },
    DistinctRow {
        k: 6,
        sequence: &[4, 4, 4, 4, 4, 4],
        m: 7,
        distinct: &[0, 4, 8, 12, 16, 20, 24],
    },
    DistinctRow {
        k: 4,
        sequence: &[4, 7, 5, 8],
        m: 7,
        distinct: &[0, 8, 12, 13, 16, 19, 24],
    },
    DistinctRow {
        k: 8,
        sequence: &[17, 1, 1, 1, 1, 1, 1, 1],
        m: 8,
        distinct: &[0, 1, 2, 3, 16, 21, 22, 23, 24],
    },
    DistinctRow {
        k: 8,
        sequence: &[3, 3, 3, 3, 3, 3, 3, 3],
        m: 9,
        distinct: &[0, 3, 6, 9, 12, 15, 18, 21, 24],
    },
    DistinctRow {
        k: 6,
        sequence: &[2, 3, 4, 4, 5, 6],
        m: 10,
        distinct: &[0, 6, 10, 11, 12, 14, 15, 18, 19, 24],
    },
    DistinctRow {
        k: 6,
        sequence: &[5, 2, 3, 4, 2, 8],
        m: 11,
        distinct: &[0, 8, 10, 12, 15, 16, 17, 18, 19, 22, 24],
    },
];

pub struct CliqueRow {
    pub n: usize,
    pub k: usize,
    pub sequence: &'static [usize],
    pub omega: usize,
    pub a: usize,
    pub comparison: CliqueClass,
}

/// Clique number against algebraic connectivity, as printed.
pub const CLIQUE_TABLE: [CliqueRow; 10] = [
    CliqueRow {
        n: 57,
        k: 2,
        sequence: &[24, 33],
        omega: 25,
        a: 24,
        comparison: CliqueClass::Plus,
    },
    CliqueRow {
        n: 4,
        k: 4,
        sequence: &[1, 1, 1, 1],
        omega: 3,
        a: 1,
        comparison: CliqueClass::Plus,
    },
    CliqueRow {
        n: 14,
        k: 6,
        sequence: &[5, 1, 1, 1, 1, 5],
        omega: 8,
        a: 5,
        comparison: CliqueClass::Plus,
    },
    CliqueRow {
        n: 231,
        k: 6,
        sequence: &[32, 59, 26, 19, 66, 29],
        omega: 65,
        a: 29,
        comparison: CliqueClass::Plus,
    },
    CliqueRow {
        n: 35,
        k: 4,
        sequence: &[6, 13, 8, 8],
        omega: 9,
        a: 8,
        comparison: CliqueClass::Plus,
    },
    CliqueRow {
        n: 28,
        k: 4,
        sequence: &[8, 3, 2, 15],
        omega: 10,
        a: 15,
        comparison: CliqueClass::Minus,
    },
    CliqueRow {
        n: 43,
        k: 4,
        sequence: &[14, 9, 4, 16],
        omega: 16,
        a: 16,
        comparison: CliqueClass::Zero,
    },
    CliqueRow {
        n: 125,
        k: 6,
        sequence: &[20, 11, 15, 19, 29, 31],
        omega: 30,
        a: 31,
        comparison: CliqueClass::Minus,
    },
    CliqueRow {
        n: 191,
        k: 6,
        sequence: &[41, 29, 45, 35, 21, 20],
        omega: 47,
        a: 20,
        comparison: CliqueClass::Plus,
    },
    CliqueRow {
        n: 221,
        k: 6,
        sequence: &[35, 20, 31, 40, 45, 50],
        omega: 46,
        a: 50,
        comparison: CliqueClass::Minus,
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctRowResult {
    pub row: usize,
    pub sequence: CreationSequence,
    pub printed_m: usize,
    pub computed_m: usize,
    pub m_status: Status,
    pub printed_distinct: Vec<i64>,
    pub computed_distinct: Vec<i64>,
    pub distinct_status: Status,
    /// Distinct values of the rounded eigensolver spectrum.
    pub oracle_distinct: Vec<i64>,
    pub note: String,
}

impl DistinctRowResult {
    pub fn status(&self) -> Status {
        Status::of(self.m_status == Status::Match && self.distinct_status == Status::Match)
    }
}

pub fn recompute_distinct_table() -> Result<Vec<DistinctRowResult>> {
    DISTINCT_TABLE
        .iter()
        .enumerate()
        .map(|(idx, row)| {
            let s = CreationSequence::from_parts(row.sequence.to_vec())?;
            let sp = full_spectrum(&s)?;
            let computed = sp.distinct();
            let eigs = oracle::laplacian_eigs(build_direct(&s)?.graph())?;
            let mut oracle_distinct =
                oracle::round_to_integers(&eigs, oracle::INTEGRALITY_TOL).unwrap_or_default();
            oracle_distinct.dedup();

            let mut notes = Vec::new();
            if row.m != row.distinct.len() {
                notes.push(format!(
                    "printed m={} but the printed list has {} values",
                    row.m,
                    row.distinct.len()
                ));
            }
            let extra: Vec<i64> = row
                .distinct
                .iter()
                .filter(|v| !computed.contains(v))
                .copied()
                .collect();
            let missing: Vec<i64> = computed
                .iter()
                .filter(|v| !row.distinct.contains(v))
                .copied()
                .collect();
            if !extra.is_empty() {
                notes.push(format!("printed values not in the spectrum: {extra:?}"));
            }
            if !missing.is_empty() {
                notes.push(format!("spectrum values missing from print: {missing:?}"));
            }
            if !notes.is_empty() {
                notes.push(format!("eigensolver confirms m={}", oracle_distinct.len()));
            }
            Ok(DistinctRowResult {
                row: idx + 1,
                printed_m: row.m,
                computed_m: computed.len(),
                m_status: Status::of(row.m == computed.len()),
                printed_distinct: row.distinct.to_vec(),
                distinct_status: Status::of(row.distinct == computed.as_slice()),
                computed_distinct: computed,
                oracle_distinct,
                note: notes.join("; "),
                sequence: s,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueRowResult {
    pub row: usize,
    pub sequence: CreationSequence,
    pub shape_status: Status,
    pub printed_omega: usize,
    pub computed_omega: usize,
    /// Branch-and-bound clique number on the built graph.
    pub oracle_omega: usize,
    pub omega_status: Status,
    pub printed_a: usize,
    pub computed_a: usize,
    /// The part size α₁ / α_k.
    pub part_a: usize,
    pub a_status: Status,
    pub printed_comparison: CliqueClass,
    pub computed_comparison: CliqueClass,
    pub comparison_status: Status,
    pub note: String,
}

impl CliqueRowResult {
    pub fn status(&self) -> Status {
        Status::of(
            [
                self.shape_status,
                self.omega_status,
                self.a_status,
                self.comparison_status,
            ]
            .iter()
            .all(|&s| s == Status::Match),
        )
    }
}

pub fn recompute_clique_table() -> Result<Vec<CliqueRowResult>> {
    CLIQUE_TABLE
        .iter()
        .enumerate()
        .map(|(idx, row)| {
            let s = CreationSequence::from_parts(row.sequence.to_vec())?;
            let omega = clique_number(&s)?;
            let oracle_omega = oracle::max_clique(build_direct(&s)?.graph());
            let a = algebraic_connectivity(&s)?;
            let part_a = part_connectivity(&s)?;
            let comparison = CliqueClass::from_ordering(omega.cmp(&a));

            let mut notes = Vec::new();
            if omega != oracle_omega {
                notes.push(format!(
                    "formula ω={omega} disagrees with oracle ω={oracle_omega}"
                ));
            }
            if row.omega != omega {
                notes.push(format!(
                    "printed ω={} but formula and branch-and-bound give {omega}",
                    row.omega
                ));
            }
            if row.a != a {
                notes.push(format!(
                    "printed a={} equals the part size {part_a}; the spectrum gives a={a}",
                    row.a
                ));
            }
            Ok(CliqueRowResult {
                row: idx + 1,
                shape_status: Status::of(row.n == s.n() && row.k == s.k()),
                printed_omega: row.omega,
                computed_omega: omega,
                oracle_omega,
                omega_status: Status::of(row.omega == omega && omega == oracle_omega),
                printed_a: row.a,
                computed_a: a,
                part_a,
                a_status: Status::of(row.a == a),
                printed_comparison: row.comparison,
                computed_comparison: comparison,
                comparison_status: Status::of(row.comparison == comparison),
                note: notes.join("; "),
                sequence: s,
            })
        })
        .collect()
}
