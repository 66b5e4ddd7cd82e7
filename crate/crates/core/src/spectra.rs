//! Exact Laplacian spectra of C-graphs with an even number of parts.
//!
//! The partition into parts is equitable, so the k eigenvalues of the
//! quotient matrix are Laplacian eigenvalues; the remaining `n − k` come from
//! vectors supported on a single part with zero entry sum.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphbuild::{degrees, LaplacianMatrix};
use crate::seqcore::CreationSequence;

/// Parts `i ≠ j` (1-based) are completely joined iff the larger index is even.
#[inline]
pub fn parts_joined(i: usize, j: usize) -> bool {
    i.max(j).is_multiple_of(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    k: usize,
    data: Vec<i64>,
}

impl QuotientMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[(i - 1) * self.k + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.k).map(<[i64]>::to_vec).collect()
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.data
            .chunks(self.k)
            .map(|row| {
                row.iter()
                    .zip(x)
                    .map(|(&a, b)| b * BigInt::from(a))
                    .fold(BigRational::zero(), |acc, t| acc + t)
            })
            .collect()
    }
}

pub fn quotient_matrix(s: &CreationSequence) -> Result<QuotientMatrix> {
    let d = degrees(s)?;
    let k = s.k();
    let mut data = vec![0i64; k * k];
    for i in 1..=k {
        for j in 1..=k {
            data[(i - 1) * k + (j - 1)] = if i == j {
                let di = d[i - 1] as i64;
                if i % 2 == 1 {
                    di - (s.part(i) as i64 - 1)
                } else {
                    di
                }
            } else if parts_joined(i, j) {
                -(s.part(j) as i64)
            } else {
                0
            };
        }
    }
    Ok(QuotientMatrix { k, data })
}

/// The n×k part-membership matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicMatrix {
    part_of: Vec<usize>,
    k: usize,
}

impl CharacteristicMatrix {
    pub fn new(s: &CreationSequence) -> Self {
        let part_of = s
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a))
            .collect();
        Self { part_of, k: s.k() }
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry `p_{vj}` with 0-based row and 1-based column.
    pub fn get(&self, v: usize, j: usize) -> u8 {
        (self.part_of[v] + 1 == j) as u8
    }

    /// `P · x`: each vertex takes its part's coordinate.
    pub fn lift<T: Clone>(&self, x: &[T]) -> Vec<T> {
        self.part_of.iter().map(|&j| x[j].clone()).collect()
    }

    /// Checks `L P = P Q_L` entry by entry.
    pub fn intertwines(&self, l: &LaplacianMatrix, q: &QuotientMatrix) -> bool {
        let n = self.n();
        if l.n() != n || q.k() != self.k {
            return false;
        }
        (0..n).all(|v| {
            (1..=self.k).all(|j| {
                let lp: i64 = (0..n).map(|u| l.get(v, u) * self.get(u, j) as i64).sum();
                let pq = q.get(self.part_of[v] + 1, j);
                lp == pq
            })
        })
    }
}

/// Quotient eigenvalues `λ₁ < … < λ_k` from the two-sided recurrence.
pub fn quotient_eigs(s: &CreationSequence) -> Result<Vec<i64>> {
    s.require_even()?;
    let k = s.k();
    let a = |i: usize| s.part(i) as i64;
    // 1-based storage
    let mut lam = vec![0i64; k + 1];
    lam[1] = 0;
    for i in 2..=k / 2 {
        lam[i] = lam[i - 1] + a(k - 2 * (i - 2));
    }
    lam[k] = s.n() as i64;
    for i in (k / 2 + 1..k).rev() {
        lam[i] = lam[i + 1] - a(2 * i + 1 - k);
    }
    let lam = lam.split_off(1);
    if lam.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ConsistencyFailure(format!(
            "quotient eigenvalues not strictly increasing for {s}: {lam:?}"
        )));
    }
    Ok(lam)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientEigenpair {
    pub value: i64,
    pub vector: Vec<BigRational>,
}

impl QuotientEigenpair {
    /// Exact check of `Q X = λ X`.
    pub fn satisfies(&self, q: &QuotientMatrix) -> bool {
        let lam = BigRational::from_integer(BigInt::from(self.value));
        q.mul_vec(&self.vector)
            .iter()
            .zip(&self.vector)
            .all(|(qx, x)| *qx == x * &lam)
    }
}

/// `(1, …, 1, −(α₁+…+α_r)/α_{r+1}, 0, …, 0)` with `r` leading ones.
fn step_vector(s: &CreationSequence, ones: usize) -> Vec<BigRational> {
    let k = s.k();
    let head: usize = s.parts()[..ones].iter().sum();
    let mut v = vec![BigRational::zero(); k];
    for x in v.iter_mut().take(ones) {
        *x = BigRational::one();
    }
    v[ones] = -BigRational::new(BigInt::from(head), BigInt::from(s.part(ones + 1)));
    v
}

/// One eigenvector per quotient eigenvalue, in increasing eigenvalue order.
pub fn quotient_eigvecs(s: &CreationSequence) -> Result<Vec<QuotientEigenpair>> {
    let lam = quotient_eigs(s)?;
    let k = s.k();
    let mut out = Vec::with_capacity(k);
    out.push(QuotientEigenpair {
        value: lam[0],
        vector: vec![BigRational::one(); k],
    });
    for i in 2..=k / 2 {
        out.push(QuotientEigenpair {
            value: lam[i - 1],
            vector: step_vector(s, k - 2 * (i - 1)),
        });
    }
    for i in 1..=k / 2 {
        out.push(QuotientEigenpair {
            value: lam[k / 2 + i - 1],
            vector: step_vector(s, 2 * i - 1),
        });
    }
    Ok(out)
}

/// One eigenvalue family supported on a single part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BulkEig {
    /// 1-based part index.
    pub part: usize,
    pub value: i64,
    pub multiplicity: usize,
}

/// `(d_i, α_i − 1)` for even parts and `(d_i + 1, α_i − 1)` for odd parts, in
/// part order, with zero-multiplicity entries dropped.
pub fn bulk_eigs(s: &CreationSequence) -> Result<Vec<BulkEig>> {
    let d = degrees(s)?;
    Ok(s.parts()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a >= 2)
        .map(|(idx, &a)| {
            let part = idx + 1;
            let value = d[idx] as i64 + (part % 2) as i64;
            BulkEig {
                part,
                value,
                multiplicity: a - 1,
            }
        })
        .collect())
}

/// `e₁ + … + e_j − j·e_{j+1}` in ℝ^len.
pub fn difference_vector(len: usize, j: usize) -> Vec<i64> {
    assert!(j >= 1 && j < len);
    let mut v = vec![0i64; len];
    for x in v.iter_mut().take(j) {
        *x = 1;
    }
    v[j] = -(j as i64);
    v
}

/// A bulk eigenvector: [`difference_vector`] placed on one part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BulkEigvec {
    pub part: usize,
    pub j: usize,
    pub value: i64,
    offset: usize,
    len: usize,
}

impl BulkEigvec {
    pub fn local(&self) -> Vec<i64> {
        difference_vector(self.len, self.j)
    }

    pub fn embed(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[self.offset..self.offset + self.len].copy_from_slice(&self.local());
        v
    }
}

pub fn bulk_eigvecs(s: &CreationSequence) -> Result<Vec<BulkEigvec>> {
    let bulk = bulk_eigs(s)?;
    let mut offsets = Vec::with_capacity(s.k());
    let mut acc = 0;
    for &a in s.parts() {
        offsets.push(acc);
        acc += a;
    }
    Ok(bulk
        .iter()
        .flat_map(|b| {
            let len = s.part(b.part);
            let offset = offsets[b.part - 1];
            (1..len).map(move |j| BulkEigvec {
                part: b.part,
                j,
                value: b.value,
                offset,
                len,
            })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianSpectrum {
    sequence: CreationSequence,
    pub quotient_eigs: Vec<i64>,
    pub bulk_eigs: Vec<BulkEig>,
    /// All `n` eigenvalues, ascending.
    pub multiset: Vec<i64>,
}

impl LaplacianSpectrum {
    pub fn sequence(&self) -> &CreationSequence {
        &self.sequence
    }

    pub fn distinct(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.multiset.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct().len()
    }

    /// Value → multiplicity over the whole spectrum.
    pub fn merged(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for &x in &self.multiset {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    /// Bulk families merged by value.
    pub fn merged_bulk(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for b in &self.bulk_eigs {
            *m.entry(b.value).or_insert(0) += b.multiplicity;
        }
        m
    }

    pub fn algebraic_connectivity(&self) -> i64 {
        self.multiset[1]
    }

    pub fn spectral_radius(&self) -> i64 {
        *self.multiset.last().expect("nonempty")
    }

    pub fn sum(&self) -> i64 {
        self.multiset.iter().sum()
    }

    pub fn quotient_eigvecs(&self) -> Vec<QuotientEigenpair> {
        quotient_eigvecs(&self.sequence).expect("sequence validated at construction")
    }

    pub fn bulk_eigvecs(&self) -> Vec<BulkEigvec> {
        bulk_eigvecs(&self.sequence).expect("sequence validated at construction")
    }
}

pub fn full_spectrum(s: &CreationSequence) -> Result<LaplacianSpectrum> {
    let quotient = quotient_eigs(s)?;
    let bulk = bulk_eigs(s)?;
    let mut multiset = quotient.clone();
    for b in &bulk {
        multiset.extend(std::iter::repeat_n(b.value, b.multiplicity));
    }
    multiset.sort_unstable();
    if multiset.len() != s.n() {
        return Err(Error::ConsistencyFailure(format!(
            "spectrum of {s} has {} values, expected {}",
            multiset.len(),
            s.n()
        )));
    }
    Ok(LaplacianSpectrum {
        sequence: s.clone(),
        quotient_eigs: quotient,
        bulk_eigs: bulk,
        multiset,
    })
}

/// Number of distinct Laplacian eigenvalues, `m(G)`.
pub fn distinct_count(s: &CreationSequence) -> Result<usize> {
    Ok(full_spectrum(s)?.distinct_count())
}

fn lifted_identity(l: &LaplacianMatrix, x: &[BigRational], value: i64) -> bool {
    let lam = BigInt::from(value);
    (0..l.n()).all(|i| {
        let lx = l
            .row(i)
            .iter()
            .zip(x)
            .filter(|(&a, _)| a != 0)
            .fold(BigRational::zero(), |acc, (&a, b)| {
                acc + b * BigInt::from(a)
            });
        lx == &x[i] * &lam
    })
}

/// Whether `Q_L X = λX` and `L(PX) = λPX` hold for every quotient pair and
/// `L E = μE` for every bulk vector, in exact arithmetic.
pub fn eigenvector_identities(s: &CreationSequence, l: &LaplacianMatrix) -> Result<bool> {
    let q = quotient_matrix(s)?;
    let p = CharacteristicMatrix::new(s);
    let quotient_ok = quotient_eigvecs(s)?
        .iter()
        .all(|pair| pair.satisfies(&q) && lifted_identity(l, &p.lift(&pair.vector), pair.value));
    let bulk_ok = bulk_eigvecs(s)?.iter().all(|v| {
        let x = v.embed(s.n());
        l.mul_vec(&x).iter().zip(&x).all(|(a, b)| *a == v.value * b)
    });
    Ok(quotient_ok && bulk_ok)
}

/// Whether every constructed eigenvector of a nonzero eigenvalue has zero
/// entry sum once lifted to the vertices.
pub fn main_eigenvalue_check(s: &CreationSequence) -> Result<bool> {
    let quotient_ok = quotient_eigvecs(s)?
        .iter()
        .filter(|p| p.value != 0)
        .all(|p| {
            // Σ_v (P X)_v = Σ_j α_j X_j
            let total = p
                .vector
                .iter()
                .zip(s.parts())
                .map(|(x, &a)| x * BigInt::from(a))
                .fold(BigRational::zero(), |acc, t| acc + t);
            total.is_zero()
        });
    let bulk_ok = bulk_eigvecs(s)?
        .iter()
        .all(|v| v.value == 0 || v.local().iter().sum::<i64>() == 0);
    Ok(quotient_ok && bulk_ok)
}

/// Membership in one of the five k = 4 forms with exactly four distinct
/// eigenvalues: C(α,1,1,1), C(α,1,1+α,1), C(α,1,1,2+α), C(α,1,1+α,1+α),
/// C(α,1,1+α,2+2α).
pub fn four_eig_characterization(s: &CreationSequence) -> bool {
    let &[a, b, c, d] = s.parts() else {
        return false;
    };
    b == 1
        && ((c == 1 && d == 1)
            || (c == 1 + a && d == 1)
            || (c == 1 && d == 2 + a)
            || (c == 1 + a && d == 1 + a)
            || (c == 1 + a && d == 2 + 2 * a))
}
