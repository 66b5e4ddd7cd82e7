//! Creation sequences: validation, family recognition and enumeration.
//!
//! A creation sequence `(α₁, …, α_k)` of positive integers describes the
//! cograph obtained by starting from the edgeless graph on `α₁` vertices and
//! repeatedly taking the complement of the disjoint union with `K_{αᵢ}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<i64>")]
pub struct CreationSequence {
    parts: Vec<usize>,
    n: usize,
}

impl CreationSequence {
    pub fn validate(parts: &[i64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut out = Vec::with_capacity(parts.len());
        let mut n = 0usize;
        for (i, &p) in parts.iter().enumerate() {
            if p < 1 {
                return Err(Error::NonPositivePart(i + 1));
            }
            let p = usize::try_from(p).map_err(|_| Error::OrderOverflow)?;
            n = n.checked_add(p).ok_or(Error::OrderOverflow)?;
            out.push(p);
        }
        Ok(Self { parts: out, n })
    }

    /// Builds a sequence from parts already known to be positive.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart(i + 1));
        }
        let n = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or(Error::OrderOverflow)?;
        Ok(Self { parts, n })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `αᵢ` with a 1-based index.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether the closed-form spectral path applies (even number of parts).
    pub fn is_even(&self) -> bool {
        self.parts.len().is_multiple_of(2)
    }

    pub(crate) fn require_even(&self) -> Result<()> {
        if self.is_even() {
            Ok(())
        } else {
            Err(Error::OddLengthUnsupported(self.k()))
        }
    }

    pub fn last(&self) -> usize {
        *self.parts.last().expect("sequence is nonempty")
    }

    /// The other sequence building the same graph, if any.
    ///
    /// With `α₂ = 1` the first two steps give `K_{α₁+1}`, and the third
    /// gives `K_{α₁+1, α₃}`, whose two sides can be read in either order:
    /// `(α₁, 1, α₃, …)` and `(α₃−1, 1, α₁+1, …)` are isomorphic.
    pub fn twin(&self) -> Option<CreationSequence> {
        let p = &self.parts;
        if p.len() < 4 || p[1] != 1 || p[2] < 2 || p[2] == p[0] + 1 {
            return None;
        }
        let mut q = p.clone();
        q[0] = p[2] - 1;
        q[2] = p[0] + 1;
        Some(CreationSequence {
            parts: q,
            n: self.n,
        })
    }

    pub fn recognize_families(&self) -> BTreeSet<FamilyTag> {
        recognize_families(self)
    }
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `"8, 3,4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::EmptySequence);
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::validate(&parts)
    }
}

impl From<CreationSequence> for Vec<usize> {
    fn from(s: CreationSequence) -> Self {
        s.parts
    }
}

impl TryFrom<Vec<i64>> for CreationSequence {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::validate(&v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    CompleteSplit,
    Antiregular,
    QuasiThreshold,
    Complete,
    CompleteBipartite,
    ConstantSequence(usize),
    General,
}

pub fn recognize_families(s: &CreationSequence) -> BTreeSet<FamilyTag> {
    let p = s.parts();
    let k = s.k();
    let mut tags = BTreeSet::new();

    if k == 2 {
        tags.insert(FamilyTag::CompleteSplit);
        if p[1] == 1 {
            tags.insert(FamilyTag::Complete);
        }
    }
    let all_ones_after_second = p.iter().skip(2).all(|&a| a == 1);
    if p[0] == 1 && all_ones_after_second && (k == 1 || p[1] == 1 || p[1] == 2) {
        tags.insert(FamilyTag::Antiregular);
    }
    if s.is_even() && p.iter().skip(1).step_by(2).filter(|&&a| a > 1).count() <= 1 {
        tags.insert(FamilyTag::QuasiThreshold);
    }
    if k == 3 && p[1] == 1 {
        tags.insert(FamilyTag::CompleteBipartite);
    }
    if p.iter().all(|&a| a == p[0]) {
        tags.insert(FamilyTag::ConstantSequence(p[0]));
    }
    if tags.is_empty() {
        tags.insert(FamilyTag::General);
    }
    tags
}

/// Restriction on the number of parts of enumerated compositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartCount {
    Any,
    Even,
    Odd,
}

impl PartCount {
    fn admits(self, k: usize) -> bool {
        match self {
            PartCount::Any => true,
            PartCount::Even => k.is_multiple_of(2),
            PartCount::Odd => k % 2 == 1,
        }
    }
}

/// Lexicographic iterator over the compositions of `n`.
///
/// The empty composition is produced for `n = 0` (it has an even part count).
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
    filter: PartCount,
}

impl Compositions {
    pub fn new(n: usize, filter: PartCount) -> Self {
        Self {
            current: Some(vec![1; n]),
            filter,
        }
    }

    fn advance(parts: &mut Vec<usize>) -> bool {
        if parts.len() < 2 {
            return false;
        }
        let y = parts.pop().unwrap();
        *parts.last_mut().unwrap() += 1;
        parts.extend(std::iter::repeat_n(1, y - 1));
        true
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            let cur = self.current.as_mut()?;
            let out = cur.clone();
            if !Self::advance(cur) {
                self.current = None;
            }
            if self.filter.admits(out.len()) {
                return Some(out);
            }
        }
    }
}

/// Every creation sequence of order `n`, in lexicographic order.
pub fn enumerate(n: usize, even_only: bool) -> Result<impl Iterator<Item = CreationSequence>> {
    if n < 2 && (even_only || n == 0) {
        return Err(Error::OrderTooSmall(n));
    }
    let filter = if even_only {
        PartCount::Even
    } else {
        PartCount::Any
    };
    Ok(Compositions::new(n, filter)
        .map(|p| CreationSequence::from_parts(p).expect("compositions have positive parts")))
}

/// Sequences of order `n` whose first part equals `first`; the blocks for
/// `first = 1..=n` partition [`enumerate`] and appear in the same order.
pub fn enumerate_with_first(
    n: usize,
    first: usize,
    even_only: bool,
) -> impl Iterator<Item = CreationSequence> {
    let filter = if even_only {
        PartCount::Odd
    } else {
        PartCount::Any
    };
    let rest = n.saturating_sub(first);
    let valid = first >= 1 && first <= n;
    Compositions::new(rest, filter)
        .filter(move |_| valid)
        .map(move |tail| {
            let mut parts = Vec::with_capacity(tail.len() + 1);
            parts.push(first);
            parts.extend(tail);
            CreationSequence::from_parts(parts).expect("positive parts")
        })
}

/// Number of compositions of `n` satisfying `filter`, by the counting recurrence.
///
/// Returns `None` if the count overflows `u128`.
pub fn count_compositions(n: usize, filter: PartCount) -> Option<u128> {
    // even[m], odd[m]: compositions of m with an even / odd number of parts.
    let mut even = vec![0u128; n + 1];
    let mut odd = vec![0u128; n + 1];
    even[0] = 1;
    let (mut even_prefix, mut odd_prefix) = (1u128, 0u128);
    for m in 1..=n {
        // Appending a part a ≥ 1 flips parity: sum over m - a in 0..m.
        even[m] = odd_prefix;
        odd[m] = even_prefix;
        even_prefix = even_prefix.checked_add(even[m])?;
        odd_prefix = odd_prefix.checked_add(odd[m])?;
    }
    match filter {
        PartCount::Any => even[n].checked_add(odd[n]),
        PartCount::Even => Some(even[n]),
        PartCount::Odd => Some(odd[n]),
    }
}

/// Draws a random sequence: `k` uniform among the even numbers in
/// `2..=max_k`, `n` uniform in `k..=max_n`, then a uniform composition of `n`
/// into `k` parts.
pub fn random_even_sequence<R: Rng + ?Sized>(
    rng: &mut R,
    max_k: usize,
    max_n: usize,
) -> CreationSequence {
    assert!(max_k >= 2 && max_n >= max_k);
    let k = 2 * rng.gen_range(1..=max_k / 2);
    let n = rng.gen_range(k..=max_n);
    random_composition(rng, n, k)
}

/// Uniform composition of `n` into exactly `k` positive parts.
pub fn random_composition<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> CreationSequence {
    assert!(k >= 1 && n >= k);
    let mut cuts: Vec<usize> = index::sample(rng, n - 1, k - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(k);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        parts.push(c - prev);
        prev = c;
    }
    CreationSequence::from_parts(parts).expect("positive parts")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twins() {
        let s = seq(&[1, 1, 3, 1]);
        let t = s.twin().unwrap();
        assert_eq!(t.parts(), &[2, 1, 2, 1]);
        assert_eq!(t.twin().unwrap(), s);
        assert_eq!(seq(&[2, 1, 3, 1]).twin(), None);
        assert_eq!(seq(&[2, 2, 3, 1]).twin(), None);
        assert_eq!(seq(&[2, 1, 1, 1]).twin(), None);
        assert_eq!(seq(&[2, 1]).twin(), None);
    }
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn seq(p: &[i64]) -> CreationSequence {
        CreationSequence::validate(p).unwrap()
    }

    #[test]
    fn validate_examples() {
        let s = seq(&[4, 2, 3, 1]);
        assert_eq!((s.k(), s.n(), s.is_even()), (4, 10, true));
        assert_eq!(CreationSequence::validate(&[]), Err(Error::EmptySequence));
        assert_eq!(
            CreationSequence::validate(&[5, 0, 1]),
            Err(Error::NonPositivePart(2))
        );
        assert_eq!(
            CreationSequence::validate(&[5, 1, -3]),
            Err(Error::NonPositivePart(3))
        );
        let s = seq(&[4, 2, 3]);
        assert_eq!((s.k(), s.n(), s.is_even()), (3, 9, false));
    }

    #[test]
    fn parse_text_format() {
        let s: CreationSequence = " 8,3, 4 ,2,1,5,6,3,7,9 ".parse().unwrap();
        assert_eq!(s.n(), 48);
        assert_eq!(s.to_string(), "8,3,4,2,1,5,6,3,7,9");
        assert!(matches!(
            "1,,2".parse::<CreationSequence>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "a".parse::<CreationSequence>(),
            Err(Error::Parse(_))
        ));
        assert_eq!("  ".parse::<CreationSequence>(), Err(Error::EmptySequence));
        assert_eq!(
            "3,0".parse::<CreationSequence>(),
            Err(Error::NonPositivePart(2))
        );
    }

    #[test]
    fn serde_as_plain_list() {
        let s = seq(&[21, 3]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[21,3]");
        let back: CreationSequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<CreationSequence>("[1,0]").is_err());
    }

    #[test]
    fn family_examples() {
        use FamilyTag::*;
        let set = |t: &[FamilyTag]| t.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(
            seq(&[21, 3]).recognize_families(),
            set(&[CompleteSplit, QuasiThreshold])
        );
        assert_eq!(
            seq(&[3, 3]).recognize_families(),
            set(&[CompleteSplit, QuasiThreshold, ConstantSequence(3)])
        );
        assert_eq!(
            seq(&[1, 1, 1, 1]).recognize_families(),
            set(&[Antiregular, QuasiThreshold, ConstantSequence(1)])
        );
        assert_eq!(
            seq(&[6, 6, 6, 6]).recognize_families(),
            set(&[ConstantSequence(6)])
        );
        assert_eq!(
            seq(&[3, 1, 2]).recognize_families(),
            set(&[CompleteBipartite])
        );
        assert_eq!(
            seq(&[4, 1]).recognize_families(),
            set(&[CompleteSplit, QuasiThreshold, Complete])
        );
        assert!(seq(&[1, 2, 1, 1])
            .recognize_families()
            .contains(&Antiregular));
        assert!(seq(&[3, 1, 2, 1, 5, 7])
            .recognize_families()
            .contains(&QuasiThreshold));
        assert_eq!(seq(&[3, 2, 2, 4]).recognize_families(), set(&[General]));
    }

    #[test]
    fn enumerate_order_four() {
        let got: Vec<Vec<usize>> = enumerate(4, true)
            .unwrap()
            .map(|s| s.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![1, 1, 1, 1], vec![1, 3], vec![2, 2], vec![3, 1]]
        );
        assert_eq!(enumerate(1, true).err(), Some(Error::OrderTooSmall(1)));
        assert_eq!(enumerate(1, false).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        for n in 1..=10 {
            let all: Vec<CreationSequence> = enumerate(n, false).unwrap().collect();
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.windows(2).all(|w| w[0].parts() < w[1].parts()));
            assert!(all.iter().all(|s| s.n() == n));
        }
    }

    #[test]
    fn even_counts_match_brute_force_and_recurrence() {
        for n in 2..=16 {
            // Brute force: every subset of the n-1 gaps is a set of cut points.
            let brute = (0u32..1 << (n - 1))
                .filter(|mask| (mask.count_ones() + 1) % 2 == 0)
                .count() as u128;
            let seen: HashSet<Vec<usize>> = enumerate(n, true)
                .unwrap()
                .map(|s| s.parts().to_vec())
                .collect();
            assert_eq!(seen.len() as u128, brute);
            assert_eq!(brute, 1u128 << (n - 2));
            assert_eq!(count_compositions(n, PartCount::Even), Some(brute));
        }
        assert_eq!(count_compositions(25, PartCount::Even), Some(8_388_608));
        assert_eq!(count_compositions(0, PartCount::Even), Some(1));
    }

    #[test]
    fn prefix_blocks_partition_enumeration() {
        for n in 2..=9 {
            let whole: Vec<_> = enumerate(n, true).unwrap().collect();
            let blocks: Vec<_> = (1..=n)
                .flat_map(|a| enumerate_with_first(n, a, true))
                .collect();
            assert_eq!(whole, blocks);
        }
        assert_eq!(enumerate_with_first(5, 0, true).count(), 0);
    }

    #[test]
    fn random_sequences_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let s = random_even_sequence(&mut rng, 10, 64);
            assert!(s.is_even() && s.k() <= 10 && s.n() <= 64 && s.n() >= s.k());
        }
    }
}
