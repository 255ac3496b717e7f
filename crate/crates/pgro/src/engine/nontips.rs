//! Nontip enumeration, one strategy per ordering, plus a brute-force
//! reference enumeration for small inputs.
//!
//! In every strategy a word is a nontip exactly when its image is linearly
//! independent of the images of its predecessors; the strategies differ in
//! how few candidates they can afford to look at. Tips form a monoid ideal
//! (any word containing a tip is a tip), so the optimized enumerations only
//! ever extend already-accepted nontips by one letter.

use crate::engine::tree::NontipTree;
use crate::engine::{radical_next, radical_start, AlgebraContext};
use crate::error::{Error, Result};
use crate::fp::{EchelonState, InsertOutcome};
use crate::jennings::JenningsGenerators;
use crate::words::{OrderingSpec, Word};

/// Nontips for the length-lexicographical ordering.
///
/// Candidates w.a over the accepted nontips w are visited in ascending LL
/// order and offered to one growing echelon state; an independent image
/// makes a nontip, a dependent one a tip. Stops once |G| nontips are found.
/// The array order equals the discovery order.
pub fn nontips_ll(ctx: &AlgebraContext) -> Result<NontipTree> {
    let spec = OrderingSpec::ll(ctx.alphabet_size());
    let order = ctx.order();
    let mut state = EchelonState::new(ctx.prime(), order);
    let mut words = vec![Word::empty()];
    let mut vectors = vec![ctx.identity_vector()];
    state.insert(&vectors[0])?;

    let mut prev_layer = vec![0usize];
    'outer: while words.len() < order {
        let mut layer = Vec::new();
        for &wi in &prev_layer {
            for a in 0..ctx.alphabet_size() {
                let image = ctx.matrix(a).apply(&vectors[wi])?;
                if let InsertOutcome::Independent = state.insert(&image)? {
                    layer.push(words.len());
                    words.push(words[wi].extended(a));
                    vectors.push(image);
                    if words.len() == order {
                        break 'outer;
                    }
                }
            }
        }
        if layer.is_empty() {
            return Err(Error::Internal(
                "candidate supply dried up before reaching the group order".into(),
            ));
        }
        prev_layer = layer;
    }
    NontipTree::from_ordered_words(spec, words)
}

/// Nontips for the reverse length-lexicographical ordering.
///
/// Works radical layer by radical layer: a length-r word is a tip exactly
/// when it lies in the span of its length-r RLL-predecessors together with
/// J^{r+1}, so each layer seeds an echelon state with a basis of J^{r+1}
/// and offers the candidates in ascending RLL order (descending
/// lexicographic). The number of length-r nontips is known in advance as
/// dim J^r - dim J^{r+1}, and the array is filled in descending RLL order,
/// i.e. ascending lexicographic inside each layer.
pub fn nontips_rll(ctx: &AlgebraContext) -> Result<NontipTree> {
    let spec = OrderingSpec::rll(ctx.alphabet_size());
    let order = ctx.order();
    let mut words = vec![Word::empty()];
    let mut prev_layer = vec![(Word::empty(), ctx.identity_vector())];

    let mut j_r = radical_start(ctx.prime(), order, ctx.matrices());
    while words.len() < order {
        let j_next = radical_next(&j_r, ctx.matrices());
        let layer_dim = j_r.rank() - j_next.rank();
        if layer_dim == 0 {
            return Err(Error::Internal(
                "radical layer is empty before the nontips are complete".into(),
            ));
        }

        let mut candidates = Vec::with_capacity(prev_layer.len() * ctx.alphabet_size());
        for (w, v) in &prev_layer {
            for a in 0..ctx.alphabet_size() {
                candidates.push((w.extended(a), ctx.matrix(a).apply(v)?));
            }
        }
        // Ascending RLL within one length = descending lexicographic.
        candidates.sort_by(|x, y| y.0.letters().cmp(x.0.letters()));

        let mut state = j_next.clone();
        let mut accepted = Vec::with_capacity(layer_dim);
        for (w, v) in candidates {
            if accepted.len() == layer_dim {
                break;
            }
            if let InsertOutcome::Independent = state.insert(&v)? {
                accepted.push((w, v));
            }
        }
        if accepted.len() != layer_dim {
            return Err(Error::Internal(format!(
                "found {} nontips in a radical layer of dimension {}",
                accepted.len(),
                layer_dim
            )));
        }
        accepted.reverse();
        words.extend(accepted.iter().map(|(w, _)| w.clone()));
        prev_layer = accepted;
        j_r = j_next;
    }
    if j_r.rank() != 0 {
        return Err(Error::Internal(
            "nontips complete but the radical has not vanished".into(),
        ));
    }
    NontipTree::from_ordered_words(spec, words)
}

/// Nontips for the Jennings ordering, with the defensive independence check
/// enabled.
pub fn nontips_jennings(
    ctx: &AlgebraContext,
    generators: &JenningsGenerators,
) -> Result<NontipTree> {
    nontips_jennings_with(ctx, generators, true)
}

/// Nontips for the Jennings ordering.
///
/// For Jennings generators the nontips are known in closed form: the words
/// a_n^{e_n} a_{n-1}^{e_{n-1}} .. a_1^{e_1} with 0 <= e_i <= p-1. They are
/// written down as exponent tuples, sorted into Jennings order (the array
/// runs descending), and linked into a tree. With `verify` set, each claimed
/// nontip is checked to be independent of its predecessors in the algebra;
/// a failure means the generators were not Jennings pc-generators.
pub fn nontips_jennings_with(
    ctx: &AlgebraContext,
    generators: &JenningsGenerators,
    verify: bool,
) -> Result<NontipTree> {
    let n = generators.elements.len();
    if n != ctx.alphabet_size() {
        return Err(Error::InvalidInput(
            "context alphabet does not match the Jennings generator list".into(),
        ));
    }
    let spec = OrderingSpec::jennings(generators.dims.clone())?;
    let p = ctx.prime() as u64;
    let total = p
        .checked_pow(n as u32)
        .and_then(|t| usize::try_from(t).ok());
    if total != Some(ctx.order()) {
        return Err(Error::Internal(format!(
            "expected p^n = {} candidate words, group order is {}",
            p.pow(n as u32),
            ctx.order()
        )));
    }

    let mut words = Vec::with_capacity(ctx.order());
    let mut exponents = vec![0u32; n];
    loop {
        let mut letters = Vec::new();
        for i in (0..n).rev() {
            for _ in 0..exponents[i] {
                letters.push(i);
            }
        }
        words.push(Word::from_letters(letters));
        // Odometer over [0, p)^n.
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            exponents[i] += 1;
            if exponents[i] < ctx.prime() {
                break;
            }
            exponents[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    words.sort_by(|a, b| spec.cmp_words(b, a));

    if verify {
        // Each generator image must sit in the radical layer its dimension
        // claims, and the claimed nontips must be independent of their
        // predecessors; either failure means the generators were not
        // Jennings pc-generators.
        let chain = ctx.radical_filtration();
        for (i, &dim) in generators.dims.iter().enumerate() {
            let d = dim as usize;
            let image = ctx.evaluate_word(&Word::single(i));
            if d == 0 || d > chain.len() || !chain[d - 1].contains(&image)? {
                return Err(Error::Internal(format!(
                    "generator a{} is not in radical power {d}",
                    i + 1
                )));
            }
            if d < chain.len() && chain[d].contains(&image)? {
                return Err(Error::Internal(format!(
                    "generator a{} lies deeper than its claimed dimension {d}",
                    i + 1
                )));
            }
        }
        let mut state = EchelonState::new(ctx.prime(), ctx.order());
        for w in words.iter().rev() {
            match state.insert(&ctx.evaluate_word(w))? {
                InsertOutcome::Independent => {}
                InsertOutcome::Dependent(_) => {
                    return Err(Error::Internal(format!(
                        "claimed nontip {w} depends on its predecessors; \
                         the chosen generators are not Jennings pc-generators"
                    )));
                }
            }
        }
    }
    NontipTree::from_ordered_words(spec, words)
}

const ORACLE_MAX_ORDER: usize = 16;
const ORACLE_MAX_ALPHABET: usize = 3;

/// Brute-force nontip enumeration for small contexts.
///
/// Enumerates every word of length < N in the given ordering, with no
/// pruning and no layer bookkeeping, and offers each image to a fresh echelon
/// state; the first |G| independent ones are the nontips, returned in
/// ascending order. Words of length >= N vanish in the algebra, so cutting
/// the enumeration there loses nothing.
pub fn oracle_nontips(ctx: &AlgebraContext, spec: &OrderingSpec) -> Result<Vec<Word>> {
    let order = ctx.order();
    let alphabet = ctx.alphabet_size();
    if order > ORACLE_MAX_ORDER || alphabet > ORACLE_MAX_ALPHABET {
        return Err(Error::TooLargeForOracle {
            order,
            alphabet,
            max_order: ORACLE_MAX_ORDER,
            max_alphabet: ORACLE_MAX_ALPHABET,
        });
    }
    if spec.alphabet_size() != alphabet {
        return Err(Error::InvalidInput(
            "ordering alphabet does not match the context".into(),
        ));
    }

    let mut all_words = Vec::new();
    for len in 0..ctx.nilpotency() {
        let mut letters = vec![0usize; len];
        loop {
            all_words.push(Word::from_letters(letters.clone()));
            let mut i = 0;
            while i < len {
                letters[i] += 1;
                if letters[i] < alphabet {
                    break;
                }
                letters[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
    }
    all_words.sort_by(|a, b| spec.cmp_words(a, b));

    let mut state = EchelonState::new(ctx.prime(), order);
    let mut nontips = Vec::with_capacity(order);
    for w in all_words {
        if nontips.len() == order {
            break;
        }
        if let InsertOutcome::Independent = state.insert(&ctx.evaluate_word(&w))? {
            nontips.push(w);
        }
    }
    if nontips.len() != order {
        return Err(Error::Internal(format!(
            "brute force found {} nontips, expected {}",
            nontips.len(),
            order
        )));
    }
    Ok(nontips)
}

/// Shared check used by tests: the tree's word set versus the brute force.
#[cfg(test)]
fn words_match(tree: &NontipTree, oracle: &[Word]) -> bool {
    use std::collections::HashSet;
    let a: HashSet<&Word> = tree.words().collect();
    let b: HashSet<&Word> = oracle.iter().collect();
    a == b
}
