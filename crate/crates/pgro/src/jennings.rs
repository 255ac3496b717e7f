//! The Jennings (dimension subgroup) series, Jennings pc-generators and the
//! layer polynomial.
//!
//! The series is computed by the recursion F_1 = G,
//! F_r = [F_{r-1}, G] * (F_{ceil(r/p)})^p; its defining property, that F_r
//! collects exactly the elements g with g - 1 in the r-th radical power of
//! the group algebra, is cross-checked against the basis engine in the
//! integration tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{subgroup_closure, PGroup, Subgroup};

/// The descending chain F_1 >= F_2 >= ... >= F_L = 1.
#[derive(Clone, Debug)]
pub struct JenningsSeries {
    terms: Vec<Subgroup>,
}

impl JenningsSeries {
    /// The first index L with F_L trivial.
    pub fn depth(&self) -> usize {
        self.terms.len()
    }

    /// F_r for r >= 1; indices beyond the stored chain read as trivial.
    pub fn term(&self, r: usize) -> &Subgroup {
        assert!(r >= 1, "series terms are 1-indexed");
        let idx = (r - 1).min(self.terms.len() - 1);
        &self.terms[idx]
    }

    /// d_r = number of Jennings generators of dimension r, for
    /// r = 1 .. depth-1, computed from the layer orders |F_r / F_{r+1}|.
    pub fn layer_counts(&self, p: u32) -> Vec<usize> {
        let mut counts = Vec::new();
        for r in 1..self.depth() {
            let quotient = self.term(r).order() / self.term(r + 1).order();
            let mut d = 0;
            let mut q = quotient;
            while q > 1 {
                q /= p as usize;
                d += 1;
            }
            counts.push(d);
        }
        counts
    }
}

/// Computes the Jennings series of a nontrivial p-group.
pub fn jennings_series(group: &PGroup) -> JenningsSeries {
    let p = group.prime() as usize;
    let mut terms = vec![Subgroup::whole(group)];
    while !terms.last().unwrap().is_trivial() {
        let r = terms.len() + 1;
        let prev = &terms[r - 2];
        let ceil = &terms[r.div_ceil(p) - 1];
        let mut seeds = Vec::new();
        for x in prev.elements() {
            for y in 0..group.order() {
                let c = group.commutator(x, y);
                if c != 0 {
                    seeds.push(c);
                }
            }
        }
        for x in ceil.elements() {
            let xp = group.power(x, p);
            if xp != 0 {
                seeds.push(xp);
            }
        }
        terms.push(subgroup_closure(group, &seeds));
        assert!(
            terms.len() <= 2 * group.order() + 2,
            "dimension subgroup chain failed to terminate"
        );
    }
    JenningsSeries { terms }
}

/// Jennings pc-generators: element indices listed layer by layer, their
/// dimensions, and the count per layer.
#[derive(Clone, Debug)]
pub struct JenningsGenerators {
    pub elements: Vec<usize>,
    pub dims: Vec<u32>,
    pub layer_counts: Vec<usize>,
}

/// Picks Jennings pc-generators, seeded.
///
/// For each layer r with F_r != F_{r+1}, elements of F_r outside the
/// running subgroup H (initially F_{r+1}) are picked uniformly at random
/// and H is extended, until H = F_r; the picks map to a minimal generating
/// set of the elementary abelian quotient F_r / F_{r+1}.
pub fn jennings_pc_generators(group: &PGroup, seed: u64) -> JenningsGenerators {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    jennings_pc_generators_rng(group, &mut rng)
}

/// [`jennings_pc_generators`] drawing from a caller-supplied RNG.
pub fn jennings_pc_generators_rng(group: &PGroup, rng: &mut impl Rng) -> JenningsGenerators {
    let series = jennings_series(group);
    let mut elements = Vec::new();
    let mut dims = Vec::new();
    let mut layer_counts = Vec::new();
    for r in 1..series.depth() {
        let target = series.term(r);
        let mut h = series.term(r + 1).clone();
        let mut count = 0;
        while h.order() < target.order() {
            let outside: Vec<usize> = target
                .elements()
                .into_iter()
                .filter(|&x| !h.contains(x))
                .collect();
            let pick = outside[rng.gen_range(0..outside.len())];
            elements.push(pick);
            dims.push(r as u32);
            count += 1;
            let mut seeds = h.elements();
            seeds.push(pick);
            h = subgroup_closure(group, &seeds);
        }
        layer_counts.push(count);
    }
    JenningsGenerators {
        elements,
        dims,
        layer_counts,
    }
}

/// Coefficients of the layer polynomial
/// `prod_r (1 + t^r + t^{2r} + ... + t^{(p-1)r})^{d_r}`.
///
/// The coefficient of t^k is the dimension of the k-th radical layer of the
/// group algebra, and the coefficients sum to the group order.
pub fn layer_polynomial(layer_counts: &[usize], p: u32) -> Vec<u64> {
    let mut acc = vec![1u64];
    for (idx, &count) in layer_counts.iter().enumerate() {
        let r = idx + 1;
        let mut factor = vec![0u64; (p as usize - 1) * r + 1];
        for e in 0..p as usize {
            factor[e * r] = 1;
        }
        for _ in 0..count {
            acc = poly_mul(&acc, &factor);
        }
    }
    acc
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}
