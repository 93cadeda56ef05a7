//! Perfect matchings (fixed-point-free involutions) and the stream that
//! visits all of them.
//!
//! The stream follows the canonical recursion: the smallest unmatched letter
//! is paired with each larger unmatched letter in increasing order. It keeps
//! a bitmask of free letters per depth, so stepping to the next matching
//! touches only the levels that change and never allocates.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest letter count the stream supports (one bit per letter).
pub const MAX_LETTERS: usize = 64;

/// A perfect matching on `{0..2E}` stored as its involution images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<u32>,
}

impl Matching {
    /// Builds a matching on `n` letters from 0-based pairs.
    pub fn from_pairs(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        if !n.is_multiple_of(2) || pairs.len() * 2 != n {
            return Err(Error::InvalidPermutation(format!(
                "{} pairs cannot cover {} letters",
                pairs.len(),
                n
            )));
        }
        let mut partner = vec![u32::MAX; n];
        for &(a, b) in pairs {
            if a == b || a as usize >= n || b as usize >= n {
                return Err(Error::InvalidPermutation(format!(
                    "bad pair ({}, {})",
                    a + 1,
                    b + 1
                )));
            }
            if partner[a as usize] != u32::MAX || partner[b as usize] != u32::MAX {
                return Err(Error::InvalidPermutation(format!(
                    "letter repeated in pair ({}, {})",
                    a + 1,
                    b + 1
                )));
            }
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        Ok(Matching { partner })
    }

    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        if !p.is_fixed_point_free_involution() {
            return Err(Error::InvalidPermutation(format!(
                "{p} is not a fixed-point-free involution"
            )));
        }
        Ok(Matching {
            partner: p.images().to_vec(),
        })
    }

    /// Wraps raw involution images as produced by [`MatchingStream`].
    pub fn from_images(images: &[u32]) -> Result<Self> {
        Self::from_permutation(&Permutation::from_images(images.to_vec())?)
    }

    pub fn size(&self) -> usize {
        self.partner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    #[inline]
    pub fn partner(&self, x: u32) -> u32 {
        self.partner[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.partner
    }

    /// Pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(a, &b)| (a as u32) < b)
            .map(|(a, &b)| (a as u32, b))
            .collect()
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_images(self.partner.clone()).expect("matching is a bijection")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_permutation().fmt(f)
    }
}

/// `(n - 1)!!` for even `n`, or `None` on overflow.
pub fn matching_count(n: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    let mut k = n as u64;
    while k > 1 {
        acc = acc.checked_mul(k - 1)?;
        k -= 2;
    }
    Some(acc)
}

fn check_letter_count(n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) || n > MAX_LETTERS {
        return Err(Error::UnsupportedLetterCount(n));
    }
    Ok(())
}

#[inline]
fn bits_above(p: u32) -> u64 {
    if p >= 63 {
        0
    } else {
        !0u64 << (p + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Lending stream over every perfect matching on `n` letters, optionally
/// restricted to those extending a fixed canonical prefix.
///
/// ```
/// use mapenum_core::MatchingStream;
/// let mut stream = MatchingStream::new(4).unwrap();
/// let mut seen = Vec::new();
/// while let Some(images) = stream.advance() {
///     seen.push(images.to_vec());
/// }
/// assert_eq!(seen, vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]);
/// ```
#[derive(Debug, Clone)]
pub struct MatchingStream {
    pairs: usize,
    fixed: usize,
    free: Vec<u64>,
    first: Vec<u32>,
    second: Vec<u32>,
    images: Vec<u32>,
    state: State,
}

impl MatchingStream {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_prefix(n, &[])
    }

    /// Sub-stream of matchings whose first pairs are `prefix` (0-based).
    /// The prefix must be canonical: each pair starts at the smallest letter
    /// left unmatched by the pairs before it.
    pub fn with_prefix(n: usize, prefix: &[(u32, u32)]) -> Result<Self> {
        check_letter_count(n)?;
        let pairs = n / 2;
        if prefix.len() > pairs {
            return Err(Error::InvalidPrefix(format!(
                "{} pairs given for {} letters",
                prefix.len(),
                n
            )));
        }
        let mut free = vec![0u64; pairs + 1];
        let mut first = vec![0u32; pairs];
        let mut second = vec![0u32; pairs];
        let mut images = vec![0u32; n];
        free[0] = if n == 64 { !0 } else { (1u64 << n) - 1 };
        for (d, &(a, b)) in prefix.iter().enumerate() {
            let f = free[d];
            if a != f.trailing_zeros() {
                return Err(Error::InvalidPrefix(format!(
                    "pair {} must start at letter {}",
                    d + 1,
                    f.trailing_zeros() + 1
                )));
            }
            if b as usize >= n || b == a || f & (1u64 << b) == 0 {
                return Err(Error::InvalidPrefix(format!(
                    "letter {} is not available at pair {}",
                    b + 1,
                    d + 1
                )));
            }
            first[d] = a;
            second[d] = b;
            images[a as usize] = b;
            images[b as usize] = a;
            free[d + 1] = f & !(1u64 << a) & !(1u64 << b);
        }
        Ok(MatchingStream {
            pairs,
            fixed: prefix.len(),
            free,
            first,
            second,
            images,
            state: State::Fresh,
        })
    }

    pub fn letter_count(&self) -> usize {
        self.images.len()
    }

    /// Completes levels `from..` with the smallest available partner.
    #[inline]
    fn descend(&mut self, from: usize) {
        for d in from..self.pairs {
            let f = self.free[d];
            let a = f.trailing_zeros();
            let rest = f & !(1u64 << a);
            let b = rest.trailing_zeros();
            self.first[d] = a;
            self.second[d] = b;
            self.images[a as usize] = b;
            self.images[b as usize] = a;
            self.free[d + 1] = rest & !(1u64 << b);
        }
    }

    /// Moves to the next matching and returns its involution images
    /// (0-based). The slice is overwritten by the following call.
    #[inline]
    pub fn advance(&mut self) -> Option<&[u32]> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.descend(self.fixed);
                self.state = State::Running;
                return Some(&self.images);
            }
            State::Running => {}
        }
        let mut d = self.pairs;
        while d > self.fixed {
            d -= 1;
            let a = self.first[d];
            let candidates = self.free[d] & bits_above(self.second[d]);
            if candidates != 0 {
                let b = candidates.trailing_zeros();
                self.second[d] = b;
                self.images[a as usize] = b;
                self.images[b as usize] = a;
                self.free[d + 1] = self.free[d] & !(1u64 << a) & !(1u64 << b);
                self.descend(d + 1);
                return Some(&self.images);
            }
        }
        self.state = State::Done;
        None
    }

    /// Owned, allocating iterator over the same sequence.
    pub fn into_matchings(self) -> Matchings {
        Matchings { stream: self }
    }
}

/// Allocating adaptor returned by [`matchings`].
#[derive(Debug, Clone)]
pub struct Matchings {
    stream: MatchingStream,
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.stream.advance().map(|images| Matching {
            partner: images.to_vec(),
        })
    }
}

/// Every perfect matching on `n` letters, in canonical order.
pub fn matchings(n: usize) -> Result<Matchings> {
    Ok(MatchingStream::new(n)?.into_matchings())
}

/// All canonical prefixes with `depth` pairs, in stream order. Each prefix
/// identifies a disjoint shard of the full stream.
pub fn shard_prefixes(n: usize, depth: usize) -> Result<Vec<Vec<(u32, u32)>>> {
    check_letter_count(n)?;
    if depth > n / 2 {
        return Err(Error::InvalidPrefix(format!(
            "depth {depth} exceeds {} pairs",
            n / 2
        )));
    }
    fn rec(free: u64, depth: usize, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        let a = free.trailing_zeros();
        let mut rest = free & !(1u64 << a);
        while rest != 0 {
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            cur.push((a, b));
            rec(free & !(1u64 << a) & !(1u64 << b), depth, cur, out);
            cur.pop();
        }
    }
    let free = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    rec(free, depth, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Picks a prefix depth so that there are at least `min_shards` shards and
/// no shard holds more than `max_shard` matchings (when possible).
pub fn shard_depth(n: usize, min_shards: u64, max_shard: u64) -> usize {
    let pairs = n / 2;
    let mut depth = 0;
    let mut shards: u64 = 1;
    let mut remaining = n as u64;
    loop {
        let per_shard = matching_count(remaining as usize).unwrap_or(u64::MAX);
        if depth >= pairs || (shards >= min_shards && per_shard <= max_shard) {
            return depth;
        }
        shards = shards.saturating_mul(remaining - 1);
        remaining -= 2;
        depth += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn listed(n: usize) -> Vec<String> {
        matchings(n).unwrap().map(|m| m.to_string()).collect()
    }

    #[test]
    fn four_letters_in_canonical_order() {
        assert_eq!(listed(4), vec!["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]);
    }

    #[test]
    fn counts_are_double_factorials() {
        assert_eq!(matchings(6).unwrap().count(), 15);
        assert_eq!(matchings(10).unwrap().count(), 945);
        assert_eq!(matching_count(10), Some(945));
        assert_eq!(matching_count(2), Some(1));
        assert_eq!(matching_count(0), Some(1));
    }

    #[test]
    fn rejects_odd_and_out_of_range() {
        assert!(MatchingStream::new(5).is_err());
        assert!(MatchingStream::new(0).is_err());
        assert!(MatchingStream::new(66).is_err());
    }

    #[test]
    fn stream_is_lexicographic_over_pair_lists() {
        let all: Vec<Vec<(u32, u32)>> = matchings(8).unwrap().map(|m| m.pairs()).collect();
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn shards_partition_the_stream() {
        let n = 10;
        let whole: Vec<Matching> = matchings(n).unwrap().collect();
        for depth in 0..=5 {
            let mut joined = Vec::new();
            for prefix in shard_prefixes(n, depth).unwrap() {
                let s = MatchingStream::with_prefix(n, &prefix).unwrap();
                joined.extend(s.into_matchings());
            }
            assert_eq!(joined, whole, "depth {depth}");
        }
    }

    #[test]
    fn full_prefix_yields_once() {
        let s = MatchingStream::with_prefix(4, &[(0, 2), (1, 3)]).unwrap();
        let all: Vec<_> = s.into_matchings().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), "(1 3)(2 4)");
    }

    #[test]
    fn rejects_non_canonical_prefix() {
        assert!(MatchingStream::with_prefix(6, &[(1, 2)]).is_err());
        assert!(MatchingStream::with_prefix(6, &[(0, 0)]).is_err());
        assert!(MatchingStream::with_prefix(6, &[(0, 2), (1, 2)]).is_err());
        assert!(MatchingStream::with_prefix(6, &[(0, 6)]).is_err());
    }

    #[test]
    fn shard_depth_respects_bounds() {
        assert_eq!(shard_depth(10, 1, u64::MAX), 0);
        let d = shard_depth(20, 8, 1 << 22);
        let shards = shard_prefixes(20, d).unwrap().len() as u64;
        assert!(shards >= 8);
        assert!(matching_count(20 - 2 * d).unwrap() <= 1 << 22);
    }

    #[test]
    fn matching_round_trips_through_permutation() {
        let m = Matching::from_pairs(6, &[(0, 3), (1, 5), (2, 4)]).unwrap();
        assert_eq!(Matching::from_permutation(&m.to_permutation()).unwrap(), m);
        assert_eq!(m.pairs(), vec![(0, 3), (1, 5), (2, 4)]);
        assert!(Matching::from_pairs(4, &[(0, 1), (1, 2)]).is_err());
        assert!(Matching::from_pairs(4, &[(0, 1)]).is_err());
    }
}
