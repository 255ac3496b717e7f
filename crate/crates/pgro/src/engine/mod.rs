//! The basis engine: generator action matrices, the radical filtration,
//! nontip enumeration for each ordering, and the fully reduced basis of the
//! relations ideal.

mod grobner;
mod nontips;
mod tree;

pub use grobner::{
    grobner_basis, minimal_tips, nontip_action_matrices, reduce, GrobnerBasis, GrobnerElement,
    NontipMatrices,
};
pub use nontips::{
    nontips_jennings, nontips_jennings_with, nontips_ll, nontips_rll, oracle_nontips,
};
pub use tree::{NontipTree, PathNode};

use crate::error::{Error, Result};
use crate::fp::{EchelonState, FpMatrix, FpVector};
use crate::group::{subgroup_closure, PGroup};
use crate::words::Word;

/// Everything needed to evaluate words in the group algebra: one right
/// multiplication matrix per chosen algebra generator a_i = g_i - 1, written
/// in the group-element basis, plus the radical filtration data.
#[derive(Clone, Debug)]
pub struct AlgebraContext {
    p: u32,
    order: usize,
    group_n: u32,
    generators: Vec<usize>,
    matrices: Vec<FpMatrix>,
    nilpotency: usize,
    radical_ranks: Vec<usize>,
}

/// Builds the context for a chosen generating set (element indices).
///
/// Row x of matrix i is e_{x * g_i} - e_x, so applying matrix i to a row
/// vector multiplies its algebra element by a_i on the right. The
/// nilpotency degree N (first power with J^N = 0) is found by pumping a
/// spanning set of J through the matrices until the span collapses.
pub fn build_context(group: &PGroup, generators: &[usize]) -> Result<AlgebraContext> {
    if generators.is_empty() {
        return Err(Error::InvalidInput("no algebra generators chosen".into()));
    }
    if generators.iter().any(|&g| g >= group.order()) {
        return Err(Error::InvalidInput("generator index out of range".into()));
    }
    if subgroup_closure(group, generators).order() != group.order() {
        return Err(Error::NotGenerating);
    }

    let p = group.prime();
    let order = group.order();
    let mut matrices = Vec::with_capacity(generators.len());
    for &g in generators {
        let mut m = FpMatrix::zeros(p, order, order);
        for x in 0..order {
            m.add_at(x, group.multiply(x, g), 1);
            m.add_at(x, x, p - 1);
        }
        matrices.push(m);
    }

    // dim J^r for r = 0, 1, ..: stops at the first zero.
    let mut radical_ranks = vec![order];
    let mut state = radical_start(p, order, &matrices);
    while state.rank() > 0 {
        radical_ranks.push(state.rank());
        state = radical_next(&state, &matrices);
    }
    radical_ranks.push(0);
    let nilpotency = radical_ranks.len() - 1;

    Ok(AlgebraContext {
        p,
        order,
        group_n: group.n(),
        generators: generators.to_vec(),
        matrices,
        nilpotency,
        radical_ranks,
    })
}

/// Echelonizes the rows of all action matrices; they span the radical J.
pub(crate) fn radical_start(p: u32, order: usize, matrices: &[FpMatrix]) -> EchelonState {
    let mut state = EchelonState::new(p, order);
    for m in matrices {
        for x in 0..order {
            state
                .insert(&m.row_vector(x))
                .expect("matrix rows live in the ambient space");
        }
    }
    state
}

/// Given a basis of J^r, spans J^{r+1} = sum_i J^r * a_i.
pub(crate) fn radical_next(prev: &EchelonState, matrices: &[FpMatrix]) -> EchelonState {
    let mut next = EchelonState::new(prev.modulus(), prev.dimension());
    for row in prev.reduced_rows() {
        for m in matrices {
            let image = m.apply(row).expect("filtration rows match the matrices");
            next.insert(&image).expect("dimensions preserved");
        }
    }
    next
}

impl AlgebraContext {
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The exponent n with |G| = p^n.
    pub fn group_n(&self) -> u32 {
        self.group_n
    }

    pub fn alphabet_size(&self) -> usize {
        self.matrices.len()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn matrices(&self) -> &[FpMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, letter: usize) -> &FpMatrix {
        &self.matrices[letter]
    }

    /// The smallest N with J^N = 0.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// The basis vector of the identity element, the image of the empty
    /// word.
    pub fn identity_vector(&self) -> FpVector {
        FpVector::unit(self.p, self.order, 0)
    }

    /// Image of a word in the group-element basis: starts at e_identity and
    /// applies the letters' matrices left to right.
    pub fn evaluate_word(&self, word: &Word) -> FpVector {
        let mut v = self.identity_vector();
        for &letter in word.letters() {
            v = self.matrices[letter]
                .apply(&v)
                .expect("letter matrices act on the group-element space");
        }
        v
    }

    /// Dimensions of the radical layers J^r / J^{r+1} for r = 0 .. N-1.
    pub fn radical_layers(&self) -> Vec<usize> {
        self.radical_ranks.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// Echelonized bases of J^1, J^2, .., J^N (the last one empty).
    pub fn radical_filtration(&self) -> Vec<EchelonState> {
        let mut chain = Vec::with_capacity(self.nilpotency);
        let mut state = radical_start(self.p, self.order, &self.matrices);
        for _ in 1..self.nilpotency {
            let next = radical_next(&state, &self.matrices);
            chain.push(state);
            state = next;
        }
        chain.push(state);
        chain
    }
}
