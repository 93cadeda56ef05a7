//! Permutations on letters `{1..n}`.
//!
//! Letters are stored 0-based; everything that is printed or parsed uses the
//! 1-based cycle notation, e.g. `(1 3 5 9 7 4)(2)(6 8)(10)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection on `{0..n}`; `images[i]` is the image of letter `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} of letter {} is outside 1..{}",
                    x + 1,
                    i + 1,
                    n
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "letter {} is hit twice",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation on `n` letters from 1-based cycles. Letters not
    /// mentioned are fixed.
    pub fn from_cycles<C: AsRef<[u32]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (k, &letter) in cycle.iter().enumerate() {
                if letter == 0 || letter as usize > n {
                    return Err(Error::InvalidPermutation(format!(
                        "letter {letter} outside 1..{n}"
                    )));
                }
                let x = (letter - 1) as usize;
                if used[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "letter {letter} appears in more than one place"
                    )));
                }
                used[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation on exactly `n` letters.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        if max > n {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: format!("letter {max} exceeds size {n}"),
            });
        }
        Self::from_cycles(n, &cycles)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based letter.
    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &Permutation) -> Result<Self> {
        check_sizes(self, inner)?;
        Ok(Permutation {
            images: inner
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        })
    }

    /// `r ∘ self ∘ r⁻¹`, i.e. `self` with its letters renamed by `r`.
    pub fn conjugate(&self, r: &Permutation) -> Result<Self> {
        check_sizes(self, r)?;
        let mut images = vec![0u32; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[r.images[x] as usize] = r.images[y as usize];
        }
        Ok(Permutation { images })
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        // scanning letters in increasing order yields cycles already rotated
        // to their smallest letter and sorted by it
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        count_cycles(&self.images)
    }

    /// Sorted multiset of cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().cycles.iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize != i && self.images[x as usize] as usize == i)
    }
}

fn check_sizes(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    Ok(())
}

/// Cycle count of a permutation given as raw 0-based images.
pub fn count_cycles(images: &[u32]) -> usize {
    let mut seen = vec![false; images.len()];
    let mut count = 0;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize;
        }
    }
    count
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycles().fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// The size is the largest letter mentioned, which makes the printed
    /// form (fixed points included) round-trip.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let n = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        Self::from_cycles(n, &cycles)
    }
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<u32>>> {
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| err("letters must be positive integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        if cycle.is_empty() {
            return Err(err("empty cycle"));
        }
        if cycle.contains(&0) {
            return Err(err("letters are 1-based"));
        }
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Disjoint cycles in canonical form: each cycle starts at its smallest
/// letter and cycles are sorted by that letter. Letters are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<u32>>,
}

impl CycleDecomposition {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// The cycles with 1-based letters.
    pub fn one_based(&self) -> Vec<Vec<u32>> {
        self.cycles
            .iter()
            .map(|c| c.iter().map(|&x| x + 1).collect())
            .collect()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn compose_reproduces_worked_example_products() {
        let sigma = p("(1 2 3)(4 5 6)(7 8 9 10)", 10);
        let tau = p("(1 2)(3 4)(5 8)(6 7)(9 10)", 10);
        let st = sigma.compose(&tau).unwrap();
        assert_eq!(st.to_string(), "(1 3 5 9 7 4)(2)(6 8)(10)");
        assert_eq!(st.cycle_count(), 4);

        let tau = p("(1 2)(3 4)(5 7)(6 9)(8 10)", 10);
        let st = sigma.compose(&tau).unwrap();
        assert_eq!(st.to_string(), "(1 3 5 8 7 6 10 9 4)(2)");
        assert_eq!(st.cycle_count(), 2);
    }

    #[test]
    fn compose_with_identity() {
        let a = p("(1 4 2)(3 5)", 6);
        assert_eq!(a.compose(&Permutation::identity(6)).unwrap(), a);
        assert_eq!(Permutation::identity(6).compose(&a).unwrap(), a);
    }

    #[test]
    fn compose_size_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn identity_has_one_cycle_per_letter() {
        assert_eq!(Permutation::identity(4).cycle_count(), 4);
        assert_eq!(Permutation::identity(4).to_string(), "(1)(2)(3)(4)");
    }

    #[test]
    fn canonical_cycle_order() {
        let a = p("(5 3)(4 1 2)", 6);
        assert_eq!(
            a.cycles().one_based(),
            vec![vec![1, 2, 4], vec![3, 5], vec![6]]
        );
    }

    #[test]
    fn conjugate_examples() {
        let a = p("(1 2)", 3);
        assert_eq!(a.conjugate(&Permutation::identity(3)).unwrap(), a);
        let r = p("(1 3)", 3);
        assert_eq!(a.conjugate(&r).unwrap(), p("(2 3)", 3));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let a = p("(1 5 2 7)(3 6)", 8);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::from_cycles(2, &[vec![1, 3]]).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!("(1 2".parse::<Permutation>().is_err());
        assert!("1 2)".parse::<Permutation>().is_err());
        assert!("(0 1)".parse::<Permutation>().is_err());
        assert!("()".parse::<Permutation>().is_err());
        assert!("(a b)".parse::<Permutation>().is_err());
        assert!(Permutation::parse_cycles("(1 5)", 4).is_err());
    }

    #[test]
    fn involution_check() {
        assert!(p("(1 2)(3 4)", 4).is_fixed_point_free_involution());
        assert!(!p("(1 2)", 4).is_fixed_point_free_involution());
        assert!(!p("(1 2 3 4)", 4).is_fixed_point_free_involution());
    }
}
