//! Self-checks run by `mapenum verify`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use mapenum_core::fixtures;
use mapenum_core::{
    enumerate_oriented, enumerate_oriented_moments, enumerate_unoriented,
    enumerate_unoriented_moments, face_power_sum, goe_moment, goulden_jackson_table, gue_moment,
    harer_zagier_table, DegreeProfile, EnumOptions, MomentSpec, Result,
};

const TABLE_ORDERS: std::ops::RangeInclusive<u64> = 2..=10;
const WICK_DARTS: u64 = 8;
const WICK_DIMENSIONS: [u32; 3] = [1, 2, 3];

#[derive(Debug, Default)]
pub struct Checks {
    passed: usize,
    failed: usize,
}

impl Checks {
    /// Records and prints one comparison.
    pub fn compare<T: PartialEq + Debug>(&mut self, label: &str, expected: T, actual: T) {
        if expected == actual {
            self.passed += 1;
            println!("[ok]   {label}: {actual:?}");
        } else {
            self.failed += 1;
            println!("[FAIL] {label}: expected {expected:?}, got {actual:?}");
        }
    }

    pub fn len(&self) -> usize {
        self.passed + self.failed
    }

    pub fn failed(&self) -> usize {
        self.failed
    }
}

/// Embedded published tables, restricted to profiles with at most
/// `max_edges` edges.
pub fn published_tables(checks: &mut Checks, max_edges: u64, opts: &EnumOptions) -> Result<()> {
    for f in fixtures::all() {
        if f.edges() > max_edges {
            continue;
        }
        let hist = enumerate_oriented(&f.profile, opts)?;
        checks.compare(
            &format!("{} {{{}}}", f.table, f.profile),
            f.expected_bins(),
            hist.bins.to_vec(),
        );
    }
    Ok(())
}

/// Closed forms against the tables and against both enumerators.
pub fn oracles(checks: &mut Checks, max_edges: u64, opts: &EnumOptions) -> Result<()> {
    let table_rows: BTreeMap<u64, Vec<(i64, u64)>> = fixtures::one_vertex()
        .into_iter()
        .map(|f| (f.edges(), f.expected_bins()))
        .collect();
    for n in TABLE_ORDERS {
        let hz = harer_zagier_table(n)?;
        let from_formula = counts(&hz.coefficients);
        if let Some(row) = table_rows.get(&n) {
            checks.compare(
                &format!("G_{n} vs one-vertex table"),
                Some(row.clone()),
                from_formula,
            );
        }
        let gj = goulden_jackson_table(n)?;
        checks.compare(
            &format!("F_{n} planar term vs G_{n}"),
            hz.coefficients.get(&0).cloned(),
            gj.coefficients.get(&2).cloned(),
        );
    }
    for n in 1..=max_edges {
        let profile = DegreeProfile::one_vertex(2 * n as u32)?;
        let hz = harer_zagier_table(n)?;
        let oriented = enumerate_oriented(&profile, opts)?;
        checks.compare(
            &format!("G_{n} vs oriented enumeration"),
            counts(&hz.coefficients),
            Some(oriented.bins.to_vec()),
        );
        let gj = goulden_jackson_table(n)?;
        let unoriented = enumerate_unoriented(&profile, opts)?;
        checks.compare(
            &format!("F_{n} vs unoriented enumeration"),
            counts(&gj.coefficients),
            Some(unoriented.bins.to_vec()),
        );
    }
    Ok(())
}

/// Gaussian moments against face-count power sums of all gluings.
pub fn wick(checks: &mut Checks, max_edges: u64, opts: &EnumOptions) -> Result<()> {
    let darts = WICK_DARTS.min(2 * max_edges) as u32;
    for profile in DegreeProfile::all_up_to(darts) {
        let oriented = enumerate_oriented_moments(&profile, opts)?;
        let unoriented = enumerate_unoriented_moments(&profile, opts)?;
        for n in WICK_DIMENSIONS {
            let spec = MomentSpec::new(profile.clone(), n)?;
            checks.compare(
                &format!("GUE {{{profile}}} N={n}"),
                gue_moment(&spec)?.to_string(),
                face_power_sum(&oriented, n).to_string(),
            );
            checks.compare(
                &format!("GOE {{{profile}}} N={n}"),
                goe_moment(&spec)?.to_string(),
                face_power_sum(&unoriented, n).to_string(),
            );
        }
    }
    Ok(())
}

fn counts(coefficients: &BTreeMap<i64, num_bigint::BigInt>) -> Option<Vec<(i64, u64)>> {
    coefficients
        .iter()
        .map(|(&k, v)| u64::try_from(v).ok().map(|v| (k, v)))
        .collect()
}
