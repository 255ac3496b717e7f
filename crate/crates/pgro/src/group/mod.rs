//! Finite p-groups as permutation groups: element enumeration, subgroup
//! closure, the Frattini subgroup and minimal generator selection.

mod file;
mod perm;

pub use file::{
    parse_group_file, regular_action, render_perm_file, render_table_file, GroupFile, MulTable,
};
pub use perm::Permutation;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Ceiling on the group order accepted by [`close_group`].
pub const DEFAULT_ORDER_CEILING: usize = 1 << 20;

/// A finite p-group with a fixed element enumeration.
///
/// Element 0 is the identity; the rest are indexed in breadth-first closure
/// order from the identity, multiplying by the generators in the order they
/// were given. The enumeration is therefore deterministic: the same
/// generator list always produces the same indexing.
#[derive(Clone, Debug)]
pub struct PGroup {
    p: u32,
    n: u32,
    elements: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
    generators: Vec<usize>,
}

impl PGroup {
    /// The prime p with |G| = p^n.
    pub fn prime(&self) -> u32 {
        self.p
    }

    /// The exponent n with |G| = p^n.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Indices of the defining generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, perm: &Permutation) -> Option<usize> {
        self.index.get(perm.images()).copied()
    }

    /// Element-index product `a * b`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].then(&self.elements[b]);
        *self
            .index
            .get(prod.images())
            .expect("group elements are closed under multiplication")
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        let inv = self.elements[a].inverse();
        *self
            .index
            .get(inv.images())
            .expect("group elements are closed under inversion")
    }

    /// `x^k` by repeated multiplication.
    pub fn power(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.multiply(acc, x);
        }
        acc
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let ix = self.inverse_of(x);
        let iy = self.inverse_of(y);
        self.multiply(self.multiply(ix, iy), self.multiply(x, y))
    }
}

/// Closes a generator list into a [`PGroup`] with the default order ceiling.
pub fn close_group(generators: &[Permutation]) -> Result<PGroup> {
    close_group_with_ceiling(generators, DEFAULT_ORDER_CEILING)
}

/// Closes a generator list into a [`PGroup`].
///
/// Enumeration is breadth-first from the identity, multiplying on the right
/// by the generators in order, indexing elements first-seen. The generated
/// order must be a prime power p^n with n >= 1; the trivial group is
/// rejected because it determines no prime.
pub fn close_group_with_ceiling(generators: &[Permutation], ceiling: usize) -> Result<PGroup> {
    if generators.is_empty() {
        return Err(Error::InvalidInput("no generators given".into()));
    }
    let degree = generators[0].degree();
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidInput(
            "generators act on different numbers of points".into(),
        ));
    }

    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity.images().to_vec(), 0usize);
    let mut cursor = 0;
    while cursor < elements.len() {
        for gen in generators {
            let next = elements[cursor].then(gen);
            if !index.contains_key(next.images()) {
                if elements.len() >= ceiling {
                    return Err(Error::TooLarge { ceiling });
                }
                index.insert(next.images().to_vec(), elements.len());
                elements.push(next);
            }
        }
        cursor += 1;
    }

    let order = elements.len();
    let (p, n) = prime_power(order).ok_or(Error::NotAPGroup { order })?;
    let gen_indices = generators.iter().map(|g| index[g.images()]).collect();
    Ok(PGroup {
        p,
        n,
        elements,
        index,
        generators: gen_indices,
    })
}

fn prime_power(order: usize) -> Option<(u32, u32)> {
    if order < 2 {
        return None;
    }
    let mut p = 2usize;
    while p * p <= order {
        if order.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    let p = if order.is_multiple_of(p) { p } else { order };
    let mut rest = order;
    let mut n = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    if rest == 1 {
        Some((p as u32, n))
    } else {
        None
    }
}

/// A subgroup of a [`PGroup`], stored as a membership flag per element index
/// of the parent group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    members: Vec<bool>,
    order: usize,
}

impl Subgroup {
    pub fn trivial(group: &PGroup) -> Self {
        let mut members = vec![false; group.order()];
        members[0] = true;
        Subgroup { members, order: 1 }
    }

    pub fn whole(group: &PGroup) -> Self {
        Subgroup {
            members: vec![true; group.order()],
            order: group.order(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members[element]
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Member element indices, ascending.
    pub fn elements(&self) -> Vec<usize> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Smallest subgroup containing the seed elements.
pub fn subgroup_closure(group: &PGroup, seeds: &[usize]) -> Subgroup {
    let mut members = vec![false; group.order()];
    members[0] = true;
    let mut queue = vec![0usize];
    let mut order = 1;
    while let Some(x) = queue.pop() {
        for &s in seeds {
            let y = group.multiply(x, s);
            if !members[y] {
                members[y] = true;
                order += 1;
                queue.push(y);
            }
        }
    }
    Subgroup { members, order }
}

/// Order of the element at index `x`: the least k >= 1 with x^k = 1.
pub fn element_order(group: &PGroup, x: usize) -> usize {
    let mut acc = x;
    let mut k = 1;
    while acc != 0 {
        acc = group.multiply(acc, x);
        k += 1;
    }
    k
}

/// The Frattini subgroup of a p-group, computed as the subgroup generated by
/// all p-th powers together with the commutators of every element with the
/// defining generators.
///
/// The commutators `[x, g_i]` over all x make the result closed under
/// conjugation, and killing them makes every generator image central, so the
/// quotient is abelian; together with the p-th powers this pins down exactly
/// G^p [G,G], which is the Frattini subgroup of a p-group.
pub fn frattini(group: &PGroup) -> Subgroup {
    let p = group.prime() as usize;
    let mut seeds = Vec::new();
    let mut seen = vec![false; group.order()];
    let push = |seeds: &mut Vec<usize>, seen: &mut Vec<bool>, e: usize| {
        if e != 0 && !seen[e] {
            seen[e] = true;
            seeds.push(e);
        }
    };
    for x in 0..group.order() {
        push(&mut seeds, &mut seen, group.power(x, p));
        for &g in group.generator_indices() {
            push(&mut seeds, &mut seen, group.commutator(x, g));
        }
    }
    subgroup_closure(group, &seeds)
}

/// How to pick the next generator in [`minimal_generators`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SelectionMethod {
    /// Uniformly at random among all elements outside the current subgroup.
    Arbitrary,
    /// Uniformly at random among the outside elements of smallest order.
    SmallestExponent,
}

impl SelectionMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            SelectionMethod::Arbitrary => "arbitrary",
            SelectionMethod::SmallestExponent => "smallest",
        }
    }
}

/// Selects a minimal generating set, seeded.
///
/// Starts from H = Frattini(G) and repeatedly picks an element g outside H
/// (by the chosen method), appending it and replacing H by <g, H> until
/// H = G. The result always has size log_p |G / Frattini(G)|.
pub fn minimal_generators(
    group: &PGroup,
    method: SelectionMethod,
    seed: u64,
) -> Result<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    minimal_generators_rng(group, method, &mut rng)
}

/// [`minimal_generators`] drawing from a caller-supplied RNG.
pub fn minimal_generators_rng(
    group: &PGroup,
    method: SelectionMethod,
    rng: &mut impl Rng,
) -> Result<Vec<usize>> {
    if group.order() <= 1 {
        return Err(Error::EmptyGroup);
    }
    let mut h = frattini(group);
    let mut gens = Vec::new();
    while h.order() < group.order() {
        let outside: Vec<usize> = (0..group.order()).filter(|&x| !h.contains(x)).collect();
        let pick = match method {
            SelectionMethod::Arbitrary => outside[rng.gen_range(0..outside.len())],
            SelectionMethod::SmallestExponent => {
                let smallest = outside
                    .iter()
                    .map(|&x| element_order(group, x))
                    .min()
                    .expect("outside set is nonempty");
                let pool: Vec<usize> = outside
                    .into_iter()
                    .filter(|&x| element_order(group, x) == smallest)
                    .collect();
                pool[rng.gen_range(0..pool.len())]
            }
        };
        gens.push(pick);
        let mut seeds = h.elements();
        seeds.push(pick);
        h = subgroup_closure(group, &seeds);
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c4() -> PGroup {
        close_group(&[Permutation::from_one_based(vec![2, 3, 4, 1]).unwrap()]).unwrap()
    }

    pub(crate) fn klein_four() -> PGroup {
        close_group(&[
            Permutation::from_one_based(vec![2, 1, 4, 3]).unwrap(),
            Permutation::from_one_based(vec![3, 4, 1, 2]).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn close_cyclic_four() {
        let g = c4();
        assert_eq!(g.prime(), 2);
        assert_eq!(g.n(), 2);
        assert_eq!(g.order(), 4);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn close_klein_four() {
        let g = klein_four();
        assert_eq!((g.prime(), g.n(), g.order()), (2, 2, 4));
    }

    #[test]
    fn rejects_non_p_groups() {
        // A 3-cycle and a disjoint 2-cycle generate a group of order 6.
        let a = Permutation::from_one_based(vec![2, 3, 1, 4, 5]).unwrap();
        let b = Permutation::from_one_based(vec![1, 2, 3, 5, 4]).unwrap();
        assert!(matches!(
            close_group(&[a, b]),
            Err(Error::NotAPGroup { order: 6 })
        ));
    }

    #[test]
    fn rejects_trivial_and_oversized_groups() {
        let id = Permutation::identity(3);
        assert!(matches!(
            close_group(&[id]),
            Err(Error::NotAPGroup { order: 1 })
        ));
        let g = Permutation::from_one_based(vec![2, 3, 4, 1]).unwrap();
        assert!(matches!(
            close_group_with_ceiling(&[g], 3),
            Err(Error::TooLarge { ceiling: 3 })
        ));
    }

    #[test]
    fn closure_enumeration_is_deterministic() {
        let a = Permutation::from_one_based(vec![2, 1, 4, 3]).unwrap();
        let b = Permutation::from_one_based(vec![3, 4, 1, 2]).unwrap();
        let g1 = close_group(&[a.clone(), b.clone()]).unwrap();
        let g2 = close_group(&[a, b]).unwrap();
        for i in 0..g1.order() {
            assert_eq!(g1.element(i), g2.element(i));
        }
    }

    #[test]
    fn element_orders() {
        let g = c4();
        assert_eq!(element_order(&g, 0), 1);
        let gen = g.generator_indices()[0];
        assert_eq!(element_order(&g, gen), 4);
        assert_eq!(element_order(&g, g.multiply(gen, gen)), 2);
        // Orders in a p-group are powers of p.
        for x in 0..g.order() {
            let k = element_order(&g, x);
            assert!(k == 1 || k.is_multiple_of(g.prime() as usize));
        }
    }

    #[test]
    fn subgroup_closures() {
        let g = c4();
        assert_eq!(subgroup_closure(&g, &[]).order(), 1);
        let gen = g.generator_indices()[0];
        assert_eq!(subgroup_closure(&g, &[gen]).order(), 4);
        let sq = g.multiply(gen, gen);
        assert_eq!(subgroup_closure(&g, &[sq]).order(), 2);
    }

    #[test]
    fn frattini_of_small_groups() {
        let k4 = klein_four();
        assert!(frattini(&k4).is_trivial());
        let g = c4();
        let phi = frattini(&g);
        assert_eq!(phi.order(), 2);
        let gen = g.generator_indices()[0];
        assert!(phi.contains(g.multiply(gen, gen)));
    }

    #[test]
    fn minimal_generators_of_small_groups() {
        let g = c4();
        for seed in 0..5 {
            let gens = minimal_generators(&g, SelectionMethod::Arbitrary, seed).unwrap();
            assert_eq!(gens.len(), 1);
            assert_eq!(element_order(&g, gens[0]), 4);
            let gens = minimal_generators(&g, SelectionMethod::SmallestExponent, seed).unwrap();
            assert_eq!(gens.len(), 1);
        }
        let k4 = klein_four();
        for seed in 0..5 {
            let gens = minimal_generators(&k4, SelectionMethod::Arbitrary, seed).unwrap();
            assert_eq!(gens.len(), 2);
            assert_eq!(subgroup_closure(&k4, &gens).order(), 4);
        }
    }

    #[test]
    fn minimal_generators_deterministic_per_seed() {
        let k4 = klein_four();
        let a = minimal_generators(&k4, SelectionMethod::Arbitrary, 9).unwrap();
        let b = minimal_generators(&k4, SelectionMethod::Arbitrary, 9).unwrap();
        assert_eq!(a, b);
    }
}
