use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Integer bin -> count, with overflow-checked accumulation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountHistogram {
    bins: BTreeMap<i64, u64>,
}

impl CountHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, bin: i64, count: u64) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let slot = self.bins.entry(bin).or_insert(0);
        *slot = slot
            .checked_add(count)
            .ok_or_else(|| Error::Overflow(format!("bin {bin}")))?;
        Ok(())
    }

    pub fn merge(&mut self, other: &CountHistogram) -> Result<()> {
        for (&bin, &count) in &other.bins {
            self.add(bin, count)?;
        }
        Ok(())
    }

    pub fn get(&self, bin: i64) -> u64 {
        self.bins.get(&bin).copied().unwrap_or(0)
    }

    pub fn bins(&self) -> &BTreeMap<i64, u64> {
        &self.bins
    }

    pub fn total(&self) -> Result<u64> {
        self.bins.values().try_fold(0u64, |acc, &c| {
            acc.checked_add(c)
                .ok_or_else(|| Error::Overflow("histogram total".into()))
        })
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// `(bin, count)` pairs in ascending bin order.
    pub fn to_vec(&self) -> Vec<(i64, u64)> {
        self.bins.iter().map(|(&b, &c)| (b, c)).collect()
    }
}

impl FromIterator<(i64, u64)> for CountHistogram {
    /// Panics on overflow; meant for literals and fixtures.
    fn from_iter<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        let mut h = CountHistogram::new();
        for (b, c) in iter {
            h.add(b, c).expect("fixture histogram overflow");
        }
        h
    }
}

/// Connected oriented maps binned by genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusHistogram {
    pub bins: CountHistogram,
    pub total_connected: u64,
    pub total_matchings: u64,
}

/// Connected unoriented maps binned by Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiHistogram {
    pub bins: CountHistogram,
    pub total_connected: u64,
    pub total_signed_matchings: u64,
}

/// All gluings, connected or not, binned by face count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceHistogram {
    pub bins: CountHistogram,
    pub edges: u64,
    pub total: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_and_merge() {
        let mut a: CountHistogram = [(0, 2), (1, 1)].into_iter().collect();
        let b: CountHistogram = [(1, 4), (3, 1)].into_iter().collect();
        a.merge(&b).unwrap();
        assert_eq!(a.to_vec(), vec![(0, 2), (1, 5), (3, 1)]);
        assert_eq!(a.total().unwrap(), 8);
        assert_eq!(a.get(2), 0);
    }

    #[test]
    fn overflow_is_reported() {
        let mut a = CountHistogram::new();
        a.add(0, u64::MAX).unwrap();
        assert!(matches!(a.add(0, 1), Err(Error::Overflow(_))));
        let mut b = CountHistogram::new();
        b.add(1, u64::MAX).unwrap();
        a.merge(&b).unwrap();
        assert!(a.total().is_err());
    }

    #[test]
    fn zero_counts_leave_no_bin() {
        let mut a = CountHistogram::new();
        a.add(5, 0).unwrap();
        assert!(a.is_empty());
    }
}
