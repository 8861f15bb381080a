//! k-gonal inequality checking with verifiable violation certificates.
//!
//! For an odd k and b in {+1,-1}^k with sum(b) = 1, the k-gonal inequality
//! for a metric d says sum_{i<j} b_i b_j d(x_i,x_j) <= 0 over all k-tuples.
//! 5-gonal and 7-gonal are necessary conditions for l1-embeddability, so a
//! single violated instance certifies non-embeddability. Only b in {+-1}^k
//! is searched; general hypermetric coefficient vectors are out of scope.

use graphcore::DistanceMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HyperError {
    InvalidK(usize),
    IndexOutOfRange { index: usize, n: usize },
    BadCertificate(String),
}

impl fmt::Display for HyperError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperError::InvalidK(k) => write!(f, "k must be 5 or 7, got {k}"),
            HyperError::IndexOutOfRange { index, n } => {
                write!(f, "certificate index {index} out of range (n={n})")
            }
            HyperError::BadCertificate(msg) => write!(f, "malformed certificate: {msg}"),
        }
    }
}

impl std::error::Error for HyperError {}

/// A k-point tuple and sign vector witnessing sum b_i b_j d_ij > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationCertificate {
    pub k: usize,
    /// negatives first: (k-1)/2 entries with b = -1, then (k+1)/2 with b = +1
    pub tuple: Vec<usize>,
    pub signs: Vec<i8>,
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KgonalOutcome {
    /// no violation exists (full scan completed)
    Pass,
    /// no violation found under an incomplete search (random / fixed-vertex)
    Inconclusive,
    Violation(ViolationCertificate),
}

impl KgonalOutcome {
    pub fn certificate(&self) -> Option<&ViolationCertificate> {
        match self {
            KgonalOutcome::Violation(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// exhaustive over tuples containing vertex 0; sound for violation search
    /// on vertex-homogeneous graphs, never used for Pass claims
    ExhaustiveFixed,
    Random { seed: u64, iters: u64 },
}

fn margin_of(d: &DistanceMatrix, tuple: &[usize], signs: &[i8]) -> i64 {
    let mut m = 0i64;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            let t = (signs[i] as i64) * (signs[j] as i64) * d.get(tuple[i], tuple[j]) as i64;
            m += t;
        }
    }
    m
}

/// Recomputes the margin; true iff it matches the stored value and is > 0.
pub fn verify_certificate(d: &DistanceMatrix, cert: &ViolationCertificate) -> Result<bool, HyperError> {
    if cert.tuple.len() != cert.k || cert.signs.len() != cert.k {
        return Err(HyperError::BadCertificate(format!(
            "tuple/sign length mismatch for k={}",
            cert.k
        )));
    }
    for &v in &cert.tuple {
        if v >= d.n() {
            return Err(HyperError::IndexOutOfRange { index: v, n: d.n() });
        }
    }
    let pos: i64 = cert.signs.iter().map(|&s| s as i64).sum();
    if pos != 1 || cert.signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(HyperError::BadCertificate("signs must be +-1 summing to 1".into()));
    }
    let mut sorted = cert.tuple.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cert.k {
        return Err(HyperError::BadCertificate("tuple entries must be distinct".into()));
    }
    let m = margin_of(d, &cert.tuple, &cert.signs);
    Ok(m == cert.margin && m > 0)
}

fn make_cert(k: usize, negs: &[usize], poss: &[usize], margin: i64) -> ViolationCertificate {
    let mut tuple = negs.to_vec();
    tuple.extend_from_slice(poss);
    let mut signs = vec![-1i8; negs.len()];
    signs.extend(std::iter::repeat(1i8).take(poss.len()));
    ViolationCertificate {
        k,
        tuple,
        signs,
        margin,
    }
}

/// 5-gonal scan for one negative pair (x,y); first violating positive triple
/// in lexicographic order, skipping x and y.
fn scan5_pair(d: &DistanceMatrix, x: usize, y: usize) -> Option<ViolationCertificate> {
    let n = d.n();
    let dxy = d.get(x, y) as i64;
    let diam = d.max() as i64;
    // s[p] = d(x,p) + d(y,p)
    let s: Vec<i64> = (0..n)
        .map(|p| d.get(x, p) as i64 + d.get(y, p) as i64)
        .collect();
    // quick bound: margin <= dxy + 3*diam - (three smallest s values)
    let mut smin = [i64::MAX; 3];
    for p in 0..n {
        if p == x || p == y {
            continue;
        }
        if s[p] < smin[2] {
            smin[2] = s[p];
            smin.sort_unstable();
        }
    }
    if dxy + 3 * diam - (smin[0] + smin[1] + smin[2]) <= 0 {
        return None;
    }
    for a in 0..n {
        if a == x || a == y {
            continue;
        }
        // margin = dxy + d_ab + d_ac + d_bc - s_a - s_b - s_c
        let base_a = dxy - s[a];
        // bound over b,c: (d_ab - s_b) + (d_ac - s_c) + d_bc <= 2*best + diam
        let mut best = i64::MIN;
        for p in 0..n {
            if p == x || p == y || p == a {
                let _ = p;
                continue;
            }
            best = best.max(d.get(a, p) as i64 - s[p]);
        }
        if base_a + 2 * best + diam <= 0 {
            continue;
        }
        for b in a + 1..n {
            if b == x || b == y {
                continue;
            }
            let base_ab = base_a + d.get(a, b) as i64 - s[b];
            if base_ab + best + diam <= 0 {
                continue;
            }
            for c in b + 1..n {
                if c == x || c == y {
                    continue;
                }
                let m = base_ab + d.get(a, c) as i64 + d.get(b, c) as i64 - s[c];
                if m > 0 {
                    return Some(make_cert(5, &[x, y], &[a, b, c], m));
                }
            }
        }
    }
    None
}

/// 7-gonal scan for one negative triple; first violating positive quadruple.
fn scan7_negs(d: &DistanceMatrix, negs: [usize; 3]) -> Option<ViolationCertificate> {
    let n = d.n();
    let [x, y, z] = negs;
    let dneg = d.get(x, y) as i64 + d.get(x, z) as i64 + d.get(y, z) as i64;
    let s: Vec<i64> = (0..n)
        .map(|p| d.get(x, p) as i64 + d.get(y, p) as i64 + d.get(z, p) as i64)
        .collect();
    let used = |p: usize| p == x || p == y || p == z;
    for a in 0..n {
        if used(a) {
            continue;
        }
        for b in a + 1..n {
            if used(b) {
                continue;
            }
            let dab = d.get(a, b) as i64;
            for c in b + 1..n {
                if used(c) {
                    continue;
                }
                let dac = d.get(a, c) as i64 + d.get(b, c) as i64;
                for e in c + 1..n {
                    if used(e) {
                        continue;
                    }
                    let dpos = dab
                        + dac
                        + d.get(a, e) as i64
                        + d.get(b, e) as i64
                        + d.get(c, e) as i64;
                    let m = dneg + dpos - s[a] - s[b] - s[c] - s[e];
                    if m > 0 {
                        return Some(make_cert(7, &[x, y, z], &[a, b, c, e], m));
                    }
                }
            }
        }
    }
    None
}

fn exhaustive5(d: &DistanceMatrix, fix_first: bool) -> Option<ViolationCertificate> {
    let n = d.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| ((x + 1)..n).map(move |y| (x, y)))
        .filter(|&(x, _)| !fix_first || x == 0)
        .collect();
    // first violation in deterministic pair order
    pairs
        .par_iter()
        .map(|&(x, y)| scan5_pair(d, x, y))
        .find_first(|r| r.is_some())
        .flatten()
}

fn exhaustive7(d: &DistanceMatrix, fix_first: bool) -> Option<ViolationCertificate> {
    let n = d.n();
    let mut triples = Vec::new();
    for x in 0..n {
        if fix_first && x != 0 {
            break;
        }
        for y in x + 1..n {
            for z in y + 1..n {
                triples.push([x, y, z]);
            }
        }
    }
    triples
        .par_iter()
        .map(|&t| scan7_negs(d, t))
        .find_first(|r| r.is_some())
        .flatten()
}

fn random_scan(
    d: &DistanceMatrix,
    k: usize,
    seed: u64,
    iters: u64,
) -> Option<ViolationCertificate> {
    let n = d.n();
    let negs = (k - 1) / 2;
    const CHUNK: u64 = 1 << 14;
    let chunks: Vec<u64> = (0..iters.div_ceil(CHUNK)).collect();
    chunks
        .par_iter()
        .map(|&chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(
                seed ^ (chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15)).rotate_left(17),
            );
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(iters);
            let mut tuple = vec![0usize; k];
            for _ in lo..hi {
                // sample k distinct vertices
                let mut m = 0;
                while m < k {
                    let v = rng.gen_range(0..n);
                    if !tuple[..m].contains(&v) {
                        tuple[m] = v;
                        m += 1;
                    }
                }
                let mut signs = vec![1i8; k];
                for s in signs.iter_mut().take(negs) {
                    *s = -1;
                }
                let margin = margin_of(d, &tuple, &signs);
                if margin > 0 {
                    let (neg_part, pos_part) = tuple.split_at(negs);
                    return Some(make_cert(k, neg_part, pos_part, margin));
                }
            }
            None
        })
        .find_first(|r| r.is_some())
        .flatten()
}

/// Scans for a violated k-gonal inequality; k in {5,7}. Tuples with fewer
/// than k points are vacuous, so n < k passes.
pub fn kgonal_check(d: &DistanceMatrix, k: usize, mode: Mode) -> Result<KgonalOutcome, HyperError> {
    if k != 5 && k != 7 {
        return Err(HyperError::InvalidK(k));
    }
    if d.n() < k {
        return Ok(KgonalOutcome::Pass);
    }
    let found = match mode {
        Mode::Exhaustive => {
            if k == 5 {
                exhaustive5(d, false)
            } else {
                exhaustive7(d, false)
            }
        }
        Mode::ExhaustiveFixed => {
            if k == 5 {
                exhaustive5(d, true)
            } else {
                exhaustive7(d, true)
            }
        }
        Mode::Random { seed, iters } => random_scan(d, k, seed, iters),
    };
    Ok(match found {
        Some(cert) => {
            debug_assert!(verify_certificate(d, &cert).unwrap_or(false));
            KgonalOutcome::Violation(cert)
        }
        None => match mode {
            Mode::Exhaustive => KgonalOutcome::Pass,
            _ => KgonalOutcome::Inconclusive,
        },
    })
}
