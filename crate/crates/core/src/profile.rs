use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex degree multiset: degree `d` -> number of vertices `j_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeProfile {
    entries: BTreeMap<u32, u32>,
}

impl DegreeProfile {
    pub fn new(entries: BTreeMap<u32, u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidProfile("no vertices".into()));
        }
        for (&d, &j) in &entries {
            if d == 0 {
                return Err(Error::InvalidProfile("degree must be at least 1".into()));
            }
            if j == 0 {
                return Err(Error::InvalidProfile(format!(
                    "degree {d} has zero vertices"
                )));
            }
        }
        Ok(DegreeProfile { entries })
    }

    /// Profile from a list of vertex degrees with repetition.
    pub fn from_degrees(degrees: &[u32]) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for &d in degrees {
            *entries.entry(d).or_insert(0u32) += 1;
        }
        Self::new(entries)
    }

    /// A single vertex of degree `degree`.
    pub fn one_vertex(degree: u32) -> Result<Self> {
        Self::from_degrees(&[degree])
    }

    pub fn entries(&self) -> &BTreeMap<u32, u32> {
        &self.entries
    }

    pub fn vertex_count(&self) -> u64 {
        self.entries.values().map(|&j| j as u64).sum()
    }

    pub fn total_darts(&self) -> u64 {
        self.entries
            .iter()
            .map(|(&d, &j)| d as u64 * j as u64)
            .sum()
    }

    /// Number of edges; fails when the total degree is odd.
    pub fn edge_count(&self) -> Result<u64> {
        let darts = self.total_darts();
        if !darts.is_multiple_of(2) {
            return Err(Error::OddDartCount(darts));
        }
        Ok(darts / 2)
    }

    /// Every profile whose total degree is even and at most `max_darts`,
    /// ordered by total degree and then by degree list.
    pub fn all_up_to(max_darts: u32) -> Vec<DegreeProfile> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<DegreeProfile>) {
            if rest == 0 {
                out.push(DegreeProfile::from_degrees(cur).expect("nonempty degrees"));
                return;
            }
            for d in 1..=max.min(rest) {
                cur.push(d);
                rec(rest - d, d, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        for total in (2..=max_darts).step_by(2) {
            rec(total, total, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Degrees of the individual vertices, ascending.
    pub fn vertex_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries
            .iter()
            .flat_map(|(&d, &j)| std::iter::repeat_n(d, j as usize))
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, j)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}:{j}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeProfile {
    type Err = Error;

    /// Accepts `3,3,4`, `3:2,4:1`, or a mix of the two forms.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::InvalidProfile(format!("cannot read {t:?} in {s:?}"));
        let mut entries = BTreeMap::new();
        for token in s.split(',').map(str::trim) {
            if token.is_empty() {
                return Err(bad(token));
            }
            let (d, j) = match token.split_once(':') {
                Some((d, j)) => (d.trim(), j.trim()),
                None => (token, "1"),
            };
            let d: u32 = d.parse().map_err(|_| bad(token))?;
            let j: u32 = j.parse().map_err(|_| bad(token))?;
            let slot = entries.entry(d).or_insert(0u32);
            *slot = slot.checked_add(j).ok_or_else(|| bad(token))?;
        }
        Self::new(entries)
    }
}
