//! Labeled connected maps on possibly non-orientable surfaces (Möbius
//! graphs).
//!
//! Each quotient dart `q` carries two letters, one per local orientation:
//! `q⁺ = 2q` and `q⁻ = 2q + 1` (0-based; 1-based this is `2(q−1) + b + 1`).
//! `φ` swaps the two copies, `σ` rotates `+` letters like the oriented
//! rotation and `−` letters the opposite way, and `τ` lifts a signed
//! matching of quotient darts. Every such triple satisfies `φσφ = σ⁻¹`,
//! `φτφ = τ`, and no 2-cycle of `τ` is one of `φ`.
//!
//! Counts are taken for one fixed `(φ, σ)`, so a run visits
//! `(2E−1)!!·2^E` signed matchings.

use crate::engine::{run_sharded, vertex_labels, CycleCounter, EnumOptions, VertexConnectivity};
use crate::error::{Error, Result};
use crate::histogram::{ChiHistogram, CountHistogram, FaceHistogram};
use crate::matching::{matching_count, Matching};
use crate::orbit::orbit_is_full;
use crate::oriented::build_sigma;
use crate::perm::Permutation;
use crate::profile::DegreeProfile;

/// Letter carrying quotient dart `q` (0-based) with orientation `minus`.
#[inline]
pub fn letter(q: u32, minus: bool) -> u32 {
    2 * q + minus as u32
}

/// The `4E` letters over `2E` quotient darts, with the orientation flip `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledDartSpace {
    edges: usize,
    phi: Permutation,
}

impl DoubledDartSpace {
    pub fn new(edges: usize) -> Self {
        let images = (0..4 * edges as u32).map(|x| x ^ 1).collect();
        DoubledDartSpace {
            edges,
            phi: Permutation::from_images(images).expect("φ is a bijection"),
        }
    }

    pub fn edges(&self) -> usize {
        self.edges
    }

    pub fn quotient_darts(&self) -> usize {
        2 * self.edges
    }

    pub fn letters(&self) -> usize {
        4 * self.edges
    }

    pub fn phi(&self) -> &Permutation {
        &self.phi
    }
}

/// Mirrors a rotation on quotient darts: `σ₀` on `+` letters and `σ₀⁻¹` on
/// `−` letters.
pub fn double_sigma(sigma0: &Permutation) -> Permutation {
    let inv = sigma0.inverse();
    let mut images = vec![0u32; 2 * sigma0.size()];
    for q in 0..sigma0.size() as u32 {
        images[letter(q, false) as usize] = letter(sigma0.apply(q), false);
        images[letter(q, true) as usize] = letter(inv.apply(q), true);
    }
    Permutation::from_images(images).expect("doubled rotation is a bijection")
}

pub fn build_doubled(profile: &DegreeProfile) -> Result<(DoubledDartSpace, Permutation)> {
    let sigma0 = build_sigma(profile)?;
    let space = DoubledDartSpace::new(sigma0.size() / 2);
    Ok((space, double_sigma(&sigma0)))
}

/// A matching of quotient darts with one twist bit per pair; bit `i`
/// belongs to the `i`-th entry of [`Matching::pairs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMatching {
    pairing: Matching,
    twists: Vec<bool>,
}

impl SignedMatching {
    pub fn new(pairing: Matching, twists: Vec<bool>) -> Result<Self> {
        if twists.len() != pairing.edge_count() {
            return Err(Error::InvalidPermutation(format!(
                "{} twist bits for {} edges",
                twists.len(),
                pairing.edge_count()
            )));
        }
        Ok(SignedMatching { pairing, twists })
    }

    pub fn pairing(&self) -> &Matching {
        &self.pairing
    }

    pub fn twists(&self) -> &[bool] {
        &self.twists
    }
}

#[inline]
fn write_pair(tau: &mut [u32], a: u32, b: u32, twisted: bool) {
    let (a_plus, a_minus) = (letter(a, false), letter(a, true));
    let (b_plus, b_minus) = (letter(b, false), letter(b, true));
    let (b_for_plus, b_for_minus) = if twisted {
        (b_minus, b_plus)
    } else {
        (b_plus, b_minus)
    };
    tau[a_plus as usize] = b_for_plus;
    tau[b_for_plus as usize] = a_plus;
    tau[a_minus as usize] = b_for_minus;
    tau[b_for_minus as usize] = a_minus;
}

/// Lifts a signed matching: an untwisted pair `{a, b}` becomes
/// `(a⁺ b⁺)(a⁻ b⁻)`, a twisted one `(a⁺ b⁻)(a⁻ b⁺)`.
pub fn lift(space: &DoubledDartSpace, sm: &SignedMatching) -> Result<Permutation> {
    if sm.pairing.size() != space.quotient_darts() {
        return Err(Error::SizeMismatch {
            left: space.quotient_darts(),
            right: sm.pairing.size(),
        });
    }
    let mut tau = vec![0u32; space.letters()];
    for (&(a, b), &twisted) in sm.pairing.pairs().iter().zip(&sm.twists) {
        write_pair(&mut tau, a, b, twisted);
    }
    Permutation::from_images(tau)
}

/// Structural conditions on a triple: `φσφ = σ⁻¹`, `φτφ = τ`, `φ` and `τ`
/// fixed-point-free involutions sharing no 2-cycle, and the cycles of `σ`
/// pairing up as `(σ₁, σ₂)` with `φσ₁φ = σ₂⁻¹` and `σ₁ ≠ σ₂`.
/// Transitivity is left to [`classify_unoriented`].
pub fn validate_triple(phi: &Permutation, sigma: &Permutation, tau: &Permutation) -> bool {
    let n = phi.size();
    if sigma.size() != n || tau.size() != n || !n.is_multiple_of(4) {
        return false;
    }
    if !phi.is_fixed_point_free_involution() || !tau.is_fixed_point_free_involution() {
        return false;
    }
    if (0..n as u32).any(|x| tau.apply(x) == phi.apply(x)) {
        return false;
    }
    let conj = |p: &Permutation| {
        phi.compose(p)
            .and_then(|q| q.compose(phi))
            .expect("sizes checked")
    };
    if conj(sigma) != sigma.inverse() || conj(tau) != *tau {
        return false;
    }
    let cycles = sigma.cycles();
    let mut cycle_of = vec![0usize; n];
    for (i, c) in cycles.cycles.iter().enumerate() {
        for &x in c {
            cycle_of[x as usize] = i;
        }
    }
    cycles.cycles.iter().enumerate().all(|(i, c)| {
        let j = cycle_of[phi.apply(c[0]) as usize];
        j != i && cycles.cycles[j].len() == c.len()
    })
}

/// Whether the cycles of `σ∘τ` fall into pairs of equal length, each cycle
/// matched with the one it is sent to by `τφ` (the same face traced the
/// other way round).
pub fn faces_pair_up(phi: &Permutation, sigma: &Permutation, tau: &Permutation) -> bool {
    let Ok(faces) = sigma.compose(tau) else {
        return false;
    };
    let Ok(flip) = tau.compose(phi) else {
        return false;
    };
    let cycles = faces.cycles();
    let mut cycle_of = vec![0usize; faces.size()];
    for (i, c) in cycles.cycles.iter().enumerate() {
        for &x in c {
            cycle_of[x as usize] = i;
        }
    }
    let mut partner = vec![usize::MAX; cycles.cycle_count()];
    for (i, c) in cycles.cycles.iter().enumerate() {
        let j = cycle_of[flip.apply(c[0]) as usize];
        if j == i || cycles.cycles[j].len() != c.len() {
            return false;
        }
        // the image must be the whole partner cycle
        if c.iter().any(|&x| cycle_of[flip.apply(x) as usize] != j) {
            return false;
        }
        partner[i] = j;
    }
    partner.iter().enumerate().all(|(i, &j)| partner[j] == i)
}

/// Euler characteristic of the unoriented map `(φ, σ, τ)`, or `None` when
/// `⟨φ, σ, τ⟩` is not transitive.
pub fn classify_unoriented(
    space: &DoubledDartSpace,
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<Option<i64>> {
    let n = space.letters();
    for p in [sigma, tau] {
        if p.size() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: p.size(),
            });
        }
    }
    if !orbit_is_full(&[space.phi(), sigma, tau], n) {
        return Ok(None);
    }
    let vertex_cycles = sigma.cycle_count();
    let two_cycles = tau.cycles().cycles.iter().filter(|c| c.len() == 2).count();
    let face_cycles = sigma.compose(tau)?.cycle_count();
    assert!(
        vertex_cycles.is_multiple_of(2) && two_cycles % 2 == 0 && face_cycles % 2 == 0,
        "triple violates the pairing conditions"
    );
    let chi = (vertex_cycles / 2) as i64 - (two_cycles / 2) as i64 + (face_cycles / 2) as i64;
    Ok(Some(chi))
}

/// Counts connected unoriented maps with the given profile by Euler
/// characteristic.
pub fn enumerate_unoriented(profile: &DegreeProfile, opts: &EnumOptions) -> Result<ChiHistogram> {
    let tally = tally(profile, opts, true)?;
    let mut bins = CountHistogram::new();
    for (faces, &count) in tally.connected.iter().enumerate() {
        if count > 0 {
            let chi = tally.vertices as i64 - tally.edges as i64 + faces as i64;
            assert!(chi <= 2, "Euler characteristic {chi} above 2");
            bins.add(chi, count)?;
        }
    }
    let total_connected = bins.total()?;
    Ok(ChiHistogram {
        bins,
        total_connected,
        total_signed_matchings: tally.visited,
    })
}

/// Every signed matching, connected or not, binned by face count.
pub fn enumerate_unoriented_moments(
    profile: &DegreeProfile,
    opts: &EnumOptions,
) -> Result<FaceHistogram> {
    let tally = tally(profile, opts, false)?;
    let mut bins = CountHistogram::new();
    for (faces, &count) in tally.all.iter().enumerate() {
        bins.add(faces as i64, count)?;
    }
    Ok(FaceHistogram {
        bins,
        edges: tally.edges as u64,
        total: tally.visited,
    })
}

/// `(2E−1)!!·2^E`, or `None` on overflow.
pub fn signed_matching_count(edges: usize) -> Option<u64> {
    let twists = 1u64.checked_shl(edges as u32).filter(|_| edges < 64)?;
    matching_count(2 * edges)?.checked_mul(twists)
}

struct Tally {
    vertices: usize,
    edges: usize,
    visited: u64,
    connected: Vec<u64>,
    all: Vec<u64>,
}

struct Scratch {
    visited: u64,
    connected: Vec<u64>,
    all: Vec<u64>,
    tau: Vec<u32>,
    pairs: Vec<(u32, u32)>,
    twisted: Vec<bool>,
    counter: CycleCounter,
    conn: VertexConnectivity,
}

fn tally(profile: &DegreeProfile, opts: &EnumOptions, connected_only: bool) -> Result<Tally> {
    let sigma0 = build_sigma(profile)?;
    let quotient = sigma0.size();
    let edges = quotient / 2;
    let expected = signed_matching_count(edges).ok_or_else(|| {
        Error::Overflow(format!(
            "(2E−1)!!·2^E with E = {edges} does not fit in 64 bits"
        ))
    })?;
    let space = DoubledDartSpace::new(edges);
    let sigma = double_sigma(&sigma0);
    let letters = space.letters();
    let quotient_cycles = sigma0.cycles();
    let vertices = quotient_cycles.cycle_count();
    let labels = vertex_labels(&quotient_cycles.cycles, quotient);
    let sigma_images = sigma.images();
    let twist_patterns = 1u64 << edges;

    let shards = run_sharded(
        quotient,
        opts,
        twist_patterns,
        || Scratch {
            visited: 0,
            connected: vec![0; letters / 2 + 1],
            all: vec![0; letters / 2 + 1],
            tau: vec![0; letters],
            pairs: Vec::with_capacity(edges),
            twisted: vec![false; edges],
            counter: CycleCounter::new(letters),
            conn: VertexConnectivity::new(labels.clone(), vertices),
        },
        |s, pairing| {
            s.visited += twist_patterns;
            let connected = s.conn.is_connected(pairing);
            if connected_only && !connected {
                return;
            }
            s.pairs.clear();
            for (a, &b) in pairing.iter().enumerate() {
                if (a as u32) < b {
                    s.pairs.push((a as u32, b));
                }
            }
            for (&(a, b), t) in s.pairs.iter().zip(s.twisted.iter_mut()) {
                write_pair(&mut s.tau, a, b, false);
                *t = false;
            }
            // twist patterns in Gray-code order: one pair flips per step
            for step in 0..twist_patterns {
                let face_cycles = s.counter.count_composed(sigma_images, &s.tau) as usize;
                assert!(
                    face_cycles.is_multiple_of(2),
                    "face cycles of σ∘τ do not pair up"
                );
                let faces = face_cycles / 2;
                if connected {
                    s.connected[faces] += 1;
                }
                s.all[faces] += 1;
                if step + 1 < twist_patterns {
                    let i = (step + 1).trailing_zeros() as usize;
                    s.twisted[i] = !s.twisted[i];
                    let (a, b) = s.pairs[i];
                    write_pair(&mut s.tau, a, b, s.twisted[i]);
                }
            }
        },
    )?;

    let mut out = Tally {
        vertices,
        edges,
        visited: 0,
        connected: vec![0; letters / 2 + 1],
        all: vec![0; letters / 2 + 1],
    };
    let add = |a: u64, b: u64| {
        a.checked_add(b)
            .ok_or_else(|| Error::Overflow("merging shard counts".into()))
    };
    for s in shards {
        out.visited = add(out.visited, s.visited)?;
        for f in 0..out.all.len() {
            out.connected[f] = add(out.connected[f], s.connected[f])?;
            out.all[f] = add(out.all[f], s.all[f])?;
        }
    }
    assert_eq!(
        out.visited, expected,
        "signed matching stream lost or repeated items"
    );
    Ok(out)
}
