//! Gaussian trace moments by brute-force Wick contraction.
//!
//! `⟨Π_d (Tr M^d)^{j_d}⟩` is expanded over every pairing of the matrix
//! entries and every assignment of the trace indices, with the pair
//! correlators
//!
//! * GUE: `⟨M_ij M_kl⟩ = (1/N) δ_il δ_jk`
//! * GOE: `⟨M_ij M_kl⟩ = (1/N) (δ_il δ_jk + δ_ik δ_jl)`
//!
//! No permutation or matching machinery from the enumerators is used here,
//! so the moments are an independent check on their face histograms.

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};
use crate::histogram::FaceHistogram;
use crate::profile::DegreeProfile;

pub const MAX_ENTRIES: u64 = 8;
pub const MAX_DIMENSION: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ensemble {
    Gue,
    Goe,
}

/// The moment `⟨Π_d (Tr M^d)^{j_d}⟩` for `N × N` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSpec {
    pub profile: DegreeProfile,
    pub dimension: u32,
}

impl MomentSpec {
    pub fn new(profile: DegreeProfile, dimension: u32) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimension must be at least 1".into(),
            ));
        }
        Ok(MomentSpec { profile, dimension })
    }
}

pub fn gue_moment<T: Clone + Num + FromPrimitive>(spec: &MomentSpec) -> Result<T> {
    moment(spec, Ensemble::Gue)
}

pub fn goe_moment<T: Clone + Num + FromPrimitive>(spec: &MomentSpec) -> Result<T> {
    moment(spec, Ensemble::Goe)
}

pub fn moment<T: Clone + Num + FromPrimitive>(spec: &MomentSpec, ensemble: Ensemble) -> Result<T> {
    let entries = spec.profile.total_darts();
    if entries > MAX_ENTRIES || spec.dimension > MAX_DIMENSION {
        return Err(Error::LimitExceeded(format!(
            "Wick sums take at most {MAX_ENTRIES} entries and N ≤ {MAX_DIMENSION}; got {entries} and N = {}",
            spec.dimension
        )));
    }
    if entries % 2 == 1 {
        return Ok(T::zero());
    }
    let count = contraction_sum(&spec.profile, spec.dimension, ensemble);
    let n = T::from_u32(spec.dimension).expect("dimension fits");
    let scale = (0..entries / 2).fold(T::one(), |acc, _| acc * n.clone());
    Ok(T::from_u128(count).expect("sum fits the scalar") / scale)
}

/// `Σ_pairings Σ_indices Π_pairs correlator`, without the `1/N^E` factor.
fn contraction_sum(profile: &DegreeProfile, dimension: u32, ensemble: Ensemble) -> u128 {
    // entry e of the product is M[idx[e], idx[next[e]]] where `next` walks
    // around its trace
    let mut next = Vec::new();
    for d in profile.vertex_degrees() {
        let start = next.len();
        for k in 0..d as usize {
            next.push(start + (k + 1) % d as usize);
        }
    }
    let entries = next.len();
    let pairings = all_pairings(entries);
    let n = dimension as usize;
    let mut idx = vec![0usize; entries];
    let mut total: u128 = 0;
    loop {
        for pairing in &pairings {
            let mut term: u128 = 1;
            for &(x, y) in pairing {
                let (i, j) = (idx[x], idx[next[x]]);
                let (k, l) = (idx[y], idx[next[y]]);
                let mut c = (i == l && j == k) as u128;
                if ensemble == Ensemble::Goe {
                    c += (i == k && j == l) as u128;
                }
                term *= c;
                if term == 0 {
                    break;
                }
            }
            total += term;
        }
        // odometer over index tuples
        let mut pos = 0;
        while pos < entries {
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == entries {
            return total;
        }
    }
}

fn all_pairings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(rest: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, others)) = rest.split_first() else {
            out.push(cur.clone());
            return;
        };
        for (i, &partner) in others.iter().enumerate() {
            let remaining: Vec<usize> = others
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            cur.push((first, partner));
            rec(&remaining, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

/// `Σ_F bins[F] · N^{F−E}` for a face histogram.
pub fn face_power_sum<T: Clone + Num + FromPrimitive>(hist: &FaceHistogram, dimension: u32) -> T {
    let n = T::from_u32(dimension).expect("dimension fits");
    let pow = |e: u64| (0..e).fold(T::one(), |acc, _| acc * n.clone());
    let numerator = hist
        .bins
        .bins()
        .iter()
        .fold(T::zero(), |acc, (&faces, &count)| {
            acc + T::from_u64(count).expect("count fits") * pow(faces as u64)
        });
    numerator / pow(hist.edges)
}
