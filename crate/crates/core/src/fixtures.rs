//! Published oriented map counts, used for regression checks.

use crate::profile::DegreeProfile;

/// Expected genus histogram for one degree profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub table: &'static str,
    pub profile: DegreeProfile,
    /// Counts for genus 0, 1, 2, ...
    pub genus_counts: Vec<u64>,
}

impl Fixture {
    pub fn edges(&self) -> u64 {
        self.profile.total_darts() / 2
    }

    pub fn expected_bins(&self) -> Vec<(i64, u64)> {
        self.genus_counts
            .iter()
            .enumerate()
            .map(|(g, &c)| (g as i64, c))
            .collect()
    }
}

/// One-vertex maps; row `(degree, counts by genus)`.
pub const ONE_VERTEX: &[(u32, &[u64])] = &[
    (4, &[2, 1]),
    (6, &[5, 10]),
    (8, &[14, 70, 21]),
    (10, &[42, 420, 483]),
    (12, &[132, 2310, 6468, 1485]),
    (14, &[429, 12012, 66066, 56628]),
    (16, &[1430, 60060, 570570, 1169740, 225225]),
    (18, &[4862, 291720, 4390386, 17454580, 12317877]),
    (
        20,
        &[16796, 1385670, 31039008, 211083730, 351683046, 59520825],
    ),
];

/// Two vertices of the same degree.
pub const TWO_VERTEX: &[(u32, &[u64])] = &[
    (3, &[12, 3]),
    (4, &[36, 60]),
    (5, &[180, 600, 165]),
    (6, &[600, 4800, 4770]),
    (7, &[2800, 34300, 81340, 16695]),
    (8, &[9800, 215600, 1009400, 781200]),
    (9, &[44100, 1323000, 10478160, 19158300, 3455865]),
    (10, &[158760, 7408800, 94091760, 333774000, 218402730]),
];

/// Four-valent maps by vertex count.
pub const FOUR_VALENT: &[(u32, &[u64])] = &[
    (1, &[2, 1]),
    (2, &[36, 60]),
    (3, &[1728, 6336, 1440]),
    (4, &[145152, 964224, 770688]),
    (5, &[17915904, 192098304, 348033024, 58060800]),
];

/// Mixed-degree profiles as degree lists.
pub const MIXED: &[(&[u32], &[u64])] =
    &[(&[3, 3, 4], &[432, 468]), (&[3, 4, 5], &[2160, 6480, 1440])];

fn fixture(table: &'static str, degrees: &[u32], counts: &[u64]) -> Fixture {
    Fixture {
        table,
        profile: DegreeProfile::from_degrees(degrees).expect("fixture profile"),
        genus_counts: counts.to_vec(),
    }
}

pub fn one_vertex() -> Vec<Fixture> {
    ONE_VERTEX
        .iter()
        .map(|&(d, c)| fixture("one-vertex", &[d], c))
        .collect()
}

pub fn two_vertex() -> Vec<Fixture> {
    TWO_VERTEX
        .iter()
        .map(|&(d, c)| fixture("two-vertex", &[d, d], c))
        .collect()
}

pub fn four_valent() -> Vec<Fixture> {
    FOUR_VALENT
        .iter()
        .map(|&(v, c)| fixture("four-valent", &vec![4; v as usize], c))
        .collect()
}

pub fn mixed() -> Vec<Fixture> {
    MIXED.iter().map(|&(d, c)| fixture("mixed", d, c)).collect()
}

/// Every fixture, in table order.
pub fn all() -> Vec<Fixture> {
    let mut out = one_vertex();
    out.extend(two_vertex());
    out.extend(four_valent());
    out.extend(mixed());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::matching_count;

    #[test]
    fn rows_never_exceed_the_matching_count() {
        for f in all() {
            let total: u64 = f.genus_counts.iter().sum();
            let bound = matching_count(2 * f.edges() as usize).unwrap();
            assert!(total <= bound, "{:?}", f);
            if f.profile.vertex_count() == 1 {
                assert_eq!(total, bound);
            }
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(all().len(), 9 + 8 + 5 + 2);
        assert_eq!(mixed()[1].edges(), 6);
        assert_eq!(four_valent()[4].edges(), 10);
    }
}
