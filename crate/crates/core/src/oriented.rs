//! Labeled connected maps on oriented surfaces.
//!
//! A map with `E` edges is a pair `(σ, τ)` on `2E` darts: `σ` rotates the
//! darts around each vertex and `τ` is the perfect matching gluing darts into
//! edges. Faces are the cycles of `σ∘τ`. Fixing `σ` and running `τ` over all
//! matchings counts every labeled map with that vertex profile.

use crate::engine::{run_sharded, vertex_labels, CycleCounter, EnumOptions, VertexConnectivity};
use crate::error::{Error, Result};
use crate::histogram::{CountHistogram, FaceHistogram, GenusHistogram};
use crate::matching::{matching_count, Matching, MAX_LETTERS};
use crate::orbit::orbit_is_full;
use crate::perm::Permutation;
use crate::profile::DegreeProfile;

/// The canonical vertex rotation for a profile: vertices in ascending degree,
/// each taking the next block of consecutive letters as one cycle.
pub fn build_sigma(profile: &DegreeProfile) -> Result<Permutation> {
    let darts = profile.edge_count()? * 2;
    if darts as usize > MAX_LETTERS {
        return Err(Error::LimitExceeded(format!(
            "{darts} darts; at most {MAX_LETTERS} are supported"
        )));
    }
    let mut images = Vec::with_capacity(darts as usize);
    let mut start = 0u32;
    for d in profile.vertex_degrees() {
        for k in 0..d {
            images.push(start + (k + 1) % d);
        }
        start += d;
    }
    Permutation::from_images(images)
}

/// Genus of the map `(sigma, tau)`, or `None` when it is disconnected.
pub fn classify(sigma: &Permutation, tau: &Matching) -> Result<Option<u32>> {
    let n = sigma.size();
    if tau.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: tau.size(),
        });
    }
    let tau = tau.to_permutation();
    if !orbit_is_full(&[sigma, &tau], n) {
        return Ok(None);
    }
    let vertices = sigma.cycle_count() as i64;
    let edges = (n / 2) as i64;
    let faces = sigma.compose(&tau)?.cycle_count() as i64;
    Ok(Some(genus_of(vertices - edges + faces)))
}

fn genus_of(chi: i64) -> u32 {
    assert!(
        chi % 2 == 0 && chi <= 2,
        "oriented map with Euler characteristic {chi}"
    );
    ((2 - chi) / 2) as u32
}

/// Counts connected maps with the given profile, binned by genus.
pub fn enumerate_oriented(profile: &DegreeProfile, opts: &EnumOptions) -> Result<GenusHistogram> {
    enumerate_oriented_with_sigma(&build_sigma(profile)?, opts)
}

/// As [`enumerate_oriented`] but for an arbitrary vertex rotation `sigma`.
pub fn enumerate_oriented_with_sigma(
    sigma: &Permutation,
    opts: &EnumOptions,
) -> Result<GenusHistogram> {
    let tally = tally(sigma, opts, true)?;
    let vertices = tally.vertices as i64;
    let edges = (sigma.size() / 2) as i64;
    let mut bins = CountHistogram::new();
    for (faces, &count) in tally.connected.iter().enumerate() {
        if count > 0 {
            bins.add(genus_of(vertices - edges + faces as i64) as i64, count)?;
        }
    }
    let total_connected = bins.total()?;
    Ok(GenusHistogram {
        bins,
        total_connected,
        total_matchings: tally.visited,
    })
}

/// Every matching, connected or not, binned by the face count of `σ∘τ`.
pub fn enumerate_oriented_moments(
    profile: &DegreeProfile,
    opts: &EnumOptions,
) -> Result<FaceHistogram> {
    let sigma = build_sigma(profile)?;
    let tally = tally(&sigma, opts, false)?;
    let mut bins = CountHistogram::new();
    for (faces, &count) in tally.all.iter().enumerate() {
        bins.add(faces as i64, count)?;
    }
    Ok(FaceHistogram {
        bins,
        edges: (sigma.size() / 2) as u64,
        total: tally.visited,
    })
}

struct Tally {
    vertices: usize,
    visited: u64,
    connected: Vec<u64>,
    all: Vec<u64>,
}

#[derive(Clone)]
struct Shard {
    visited: u64,
    connected: Vec<u64>,
    all: Vec<u64>,
}

fn tally(sigma: &Permutation, opts: &EnumOptions, connected_only: bool) -> Result<Tally> {
    let n = sigma.size();
    if !n.is_multiple_of(2) {
        return Err(Error::OddDartCount(n as u64));
    }
    let expected = matching_count(n)
        .ok_or_else(|| Error::Overflow(format!("({} - 1)!! does not fit in 64 bits", n)))?;
    let cycles = sigma.cycles();
    let vertices = cycles.cycle_count();
    let images = sigma.images();
    let labels = vertex_labels(&cycles.cycles, n);

    let shards = run_sharded(
        n,
        opts,
        1,
        || {
            (
                Shard {
                    visited: 0,
                    connected: vec![0; n + 1],
                    all: vec![0; n + 1],
                },
                CycleCounter::new(n),
                VertexConnectivity::new(labels.clone(), vertices),
            )
        },
        |(shard, counter, conn), tau| {
            shard.visited += 1;
            let connected = conn.is_connected(tau);
            if connected_only && !connected {
                return;
            }
            let faces = counter.count_composed(images, tau) as usize;
            if connected {
                shard.connected[faces] += 1;
            }
            shard.all[faces] += 1;
        },
    )?;

    let mut out = Tally {
        vertices,
        visited: 0,
        connected: vec![0; n + 1],
        all: vec![0; n + 1],
    };
    for (shard, _, _) in shards {
        out.visited = checked(out.visited, shard.visited)?;
        for f in 0..=n {
            out.connected[f] = checked(out.connected[f], shard.connected[f])?;
            out.all[f] = checked(out.all[f], shard.all[f])?;
        }
    }
    assert_eq!(
        out.visited, expected,
        "matching stream lost or repeated items"
    );
    Ok(out)
}

fn checked(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b)
        .ok_or_else(|| Error::Overflow("merging shard counts".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse_cycles(s, 10).unwrap()
    }

    fn m(s: &str) -> Matching {
        Matching::from_permutation(&p(s)).unwrap()
    }

    fn genus_bins(profile: &str) -> Vec<(i64, u64)> {
        enumerate_oriented(&profile.parse().unwrap(), &EnumOptions::default())
            .unwrap()
            .bins
            .to_vec()
    }

    #[test]
    fn sigma_for_worked_example() {
        let s = build_sigma(&"3:2,4:1".parse().unwrap()).unwrap();
        assert_eq!(s.to_string(), "(1 2 3)(4 5 6)(7 8 9 10)");
        assert_eq!(
            build_sigma(&"4".parse().unwrap()).unwrap().to_string(),
            "(1 2 3 4)"
        );
        assert_eq!(
            build_sigma(&"2".parse().unwrap()).unwrap().to_string(),
            "(1 2)"
        );
        assert_eq!(
            build_sigma(&"3".parse().unwrap()),
            Err(Error::OddDartCount(3))
        );
    }

    #[test]
    fn worked_example_classifications() {
        let sigma = p("(1 2 3)(4 5 6)(7 8 9 10)");
        assert_eq!(
            classify(&sigma, &m("(1 2)(3 4)(5 8)(6 7)(9 10)")).unwrap(),
            Some(0)
        );
        assert_eq!(
            classify(&sigma, &m("(1 2)(3 4)(5 7)(6 9)(8 10)")).unwrap(),
            Some(1)
        );
        assert_eq!(
            classify(&sigma, &m("(1 2)(3 4)(5 6)(7 8)(9 10)")).unwrap(),
            None
        );
    }

    #[test]
    fn small_tables() {
        assert_eq!(genus_bins("4"), vec![(0, 2), (1, 1)]);
        assert_eq!(genus_bins("3,3"), vec![(0, 12), (1, 3)]);
        assert_eq!(genus_bins("3,3,4"), vec![(0, 432), (1, 468)]);
    }

    #[test]
    fn low_degree_vertices() {
        // a single loop; two degree-1 vertices joined by an edge
        assert_eq!(genus_bins("2"), vec![(0, 1)]);
        assert_eq!(genus_bins("1,1"), vec![(0, 1)]);
        // two separate loops can never be connected
        let h = enumerate_oriented(&"2,2".parse().unwrap(), &EnumOptions::default()).unwrap();
        assert_eq!(h.total_matchings, 3);
        assert_eq!(h.total_connected, 2);
    }

    #[test]
    fn moments_include_disconnected() {
        let f = enumerate_oriented_moments(&"4".parse().unwrap(), &EnumOptions::default()).unwrap();
        assert_eq!(f.bins.to_vec(), vec![(1, 1), (3, 2)]);
        let f = enumerate_oriented_moments(&"2".parse().unwrap(), &EnumOptions::default()).unwrap();
        assert_eq!(f.bins.to_vec(), vec![(2, 1)]);
        let f =
            enumerate_oriented_moments(&"3,3".parse().unwrap(), &EnumOptions::default()).unwrap();
        assert_eq!(f.bins.total().unwrap(), 15);
    }

    #[test]
    fn classify_size_mismatch() {
        let sigma = build_sigma(&"4".parse().unwrap()).unwrap();
        let tau = Matching::from_pairs(2, &[(0, 1)]).unwrap();
        assert!(classify(&sigma, &tau).is_err());
    }

    #[test]
    fn rejects_odd_profiles_and_zero_threads() {
        assert!(enumerate_oriented(&"3,4".parse().unwrap(), &EnumOptions::default()).is_err());
        assert!(enumerate_oriented(&"4".parse().unwrap(), &EnumOptions::threads(0)).is_err());
    }
}
