//! Parameterized families whose distinct-eigenvalue count sits at either end
//! of `k ≤ m ≤ 2k − 1`, with their predicted spectra where known.

use crate::error::Result;
use crate::seqcore::CreationSequence;

/// Eigenvalue with multiplicity.
pub type Listed = Vec<(i64, usize)>;

fn seq(parts: Vec<usize>) -> CreationSequence {
    CreationSequence::from_parts(parts).expect("family parameters are positive")
}

/// `C(α₁, 1, …, 1)` with `k` parts.
pub fn leading_block(alpha1: usize, k: usize) -> CreationSequence {
    assert!(alpha1 >= 1 && k >= 2 && k.is_multiple_of(2));
    let mut parts = vec![1; k];
    parts[0] = alpha1;
    seq(parts)
}

/// All ones except `α_{k−1} = p`; defined for `2 ≤ p ≤ k/2 − 2`.
pub fn raised_penultimate(k: usize, p: usize) -> Option<CreationSequence> {
    if !k.is_multiple_of(2) || p < 2 || p + 2 > k / 2 {
        return None;
    }
    let mut parts = vec![1; k];
    parts[k - 2] = p;
    Some(seq(parts))
}

/// The five `k = 4` shapes with exactly four distinct eigenvalues.
pub fn four_forms(alpha: usize) -> [CreationSequence; 5] {
    let a = alpha;
    [
        seq(vec![a, 1, 1, 1]),
        seq(vec![a, 1, 1 + a, 1]),
        seq(vec![a, 1, 1, 2 + a]),
        seq(vec![a, 1, 1 + a, 1 + a]),
        seq(vec![a, 1, 1 + a, 2 + 2 * a]),
    ]
}

/// Complete split graph `C(α₁, α₂)`: `{(α₁+α₂)^{α₁}, α₁^{α₂−1}, 0}`.
pub fn complete_split(a1: usize, a2: usize) -> (CreationSequence, Listed) {
    let (x, y) = (a1 as i64, a2 as i64);
    (seq(vec![a1, a2]), vec![(x + y, a1), (x, a2 - 1), (0, 1)])
}

/// `C(p, q, p+1, q+1)`.
pub fn shifted_pair(p: usize, q: usize) -> (CreationSequence, Listed) {
    let (pi, qi) = (p as i64, q as i64);
    let listed = vec![
        (2 * pi + 2 * qi + 2, 1),
        (pi + 2 * qi + 1, p),
        (qi + 1, 1),
        (0, 1),
        (pi + qi + 1, q - 1),
        (2 * pi + qi + 1, q),
        (pi + qi + 2, p),
    ];
    (seq(vec![p, q, p + 1, q + 1]), listed)
}

/// `C(i, j, r, i+1, j+1, r+1)`.
pub fn shifted_triple(i: usize, j: usize, r: usize) -> (CreationSequence, Listed) {
    let (a, b, c) = (i as i64, j as i64, r as i64);
    let listed = vec![
        (2 * a + 2 * b + 2 * c + 3, 1),
        (2 * a + b + 2 * c + 2, 1),
        (c + a + 2, 1),
        (c + 1, 1),
        (0, 1),
        (2 * a + c + 2, j - 1),
        (a + b + 2 * c + 1, i),
        (2 * a + 2 * b + c + 2, r),
        (2 * a + b + c + 2, i),
        (2 * c + a + 2, r - 1),
        (b + c + 2, j),
    ];
    (seq(vec![i, j, r, i + 1, j + 1, r + 1]), listed)
}

/// Sorted multiset, dropping zero multiplicities.
pub fn expand(listed: &[(i64, usize)]) -> Vec<i64> {
    let mut out: Vec<i64> = listed
        .iter()
        .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
        .collect();
    out.sort_unstable();
    out
}

/// Whether every listed value occurs and no two coincide, so that the
/// spectrum has exactly `listed.len()` distinct values.
pub fn listed_is_distinct(listed: &[(i64, usize)]) -> bool {
    if listed.iter().any(|(_, m)| *m == 0) {
        return false;
    }
    let mut values: Vec<i64> = listed.iter().map(|(v, _)| *v).collect();
    let len = values.len();
    values.sort_unstable();
    values.dedup();
    values.len() == len
}

/// A named family with the `m(G)` it attains.
#[derive(Debug, Clone)]
pub struct Family {
    pub name: &'static str,
    pub extreme: Extreme,
    pub instances: Vec<CreationSequence>,
    /// Predicted spectrum per instance, when the family has one.
    pub listed: Vec<Option<Listed>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    /// `m = k`
    Lower,
    /// `m = 2k − 1`
    Upper,
}

impl Extreme {
    pub fn target(self, k: usize) -> usize {
        match self {
            Extreme::Lower => k,
            Extreme::Upper => 2 * k - 1,
        }
    }
}

fn family(
    name: &'static str,
    extreme: Extreme,
    items: Vec<(CreationSequence, Option<Listed>)>,
) -> Family {
    let (instances, listed) = items.into_iter().unzip();
    Family {
        name,
        extreme,
        instances,
        listed,
    }
}

/// The three families with `m = k`.
pub fn lower_families() -> Vec<Family> {
    let leading = (1..=4)
        .flat_map(|a| [2, 4, 6].map(|k| (leading_block(a, k), None)))
        .collect();
    let raised = (8..=14)
        .step_by(2)
        .flat_map(|k| (2..=k / 2 - 2).filter_map(move |p| raised_penultimate(k, p)))
        .map(|s| (s, None))
        .collect();
    let forms = (1..=3).flat_map(four_forms).map(|s| (s, None)).collect();
    vec![
        family("leading_block", Extreme::Lower, leading),
        family("raised_penultimate", Extreme::Lower, raised),
        family("four_forms", Extreme::Lower, forms),
    ]
}

/// The three families with `m = 2k − 1`, restricted to parameters whose
/// predicted values are pairwise distinct.
pub fn upper_families() -> Vec<Family> {
    let split = [(1, 2), (3, 3), (5, 7), (10, 2), (21, 3), (2, 9)]
        .into_iter()
        .map(|(a, b)| complete_split(a, b))
        .filter(|(_, l)| listed_is_distinct(l))
        .map(|(s, l)| (s, Some(l)))
        .collect();
    let pairs = (1..=5)
        .flat_map(|p| (2..=5).map(move |q| (p, q)))
        .filter(|(p, q)| p != q)
        .map(|(p, q)| shifted_pair(p, q))
        .filter(|(_, l)| listed_is_distinct(l))
        .map(|(s, l)| (s, Some(l)))
        .collect();
    let triples = (1..=5)
        .flat_map(|i| (2..=5).flat_map(move |j| (1..=5).map(move |r| (i, j, r))))
        .filter(|&(i, j, r)| i != r && r + i != j)
        .map(|(i, j, r)| shifted_triple(i, j, r))
        .filter(|(_, l)| listed_is_distinct(l))
        .map(|(s, l)| (s, Some(l)))
        .collect();
    vec![
        family("complete_split", Extreme::Upper, split),
        family("shifted_pair", Extreme::Upper, pairs),
        family("shifted_triple", Extreme::Upper, triples),
    ]
}

/// `C(p, …, p)` with `k` parts.
pub fn constant(p: usize, k: usize) -> Result<CreationSequence> {
    CreationSequence::from_parts(vec![p; k])
}
