//! Minimal tips, nontip-basis action matrices, and the fully reduced basis
//! of the relations ideal.

use std::collections::BTreeMap;

use crate::engine::tree::NontipTree;
use crate::engine::AlgebraContext;
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpVector};
use crate::words::{OrderingKind, OrderingSpec, Word};

/// The minimal tips read off a complete nontip tree, ascending in the
/// tree's ordering.
///
/// Every missing child link (w, a) marks a tip w.a. Such a tip is minimal
/// exactly when the suffix obtained by deleting its first letter is a
/// nontip: every proper contiguous subword of w.a is a subword either of
/// the prefix w or of that suffix, subwords of nontips are nontips, and
/// the suffix itself is the only proper subword not covered by w, so
/// checking it alone decides minimality.
pub fn minimal_tips(tree: &NontipTree) -> Vec<Word> {
    let mut tips = Vec::new();
    for node in tree.nodes() {
        for (a, child) in node.children.iter().enumerate() {
            if child.is_some() {
                continue;
            }
            let tip = node.word.extended(a);
            let suffix = tip.tail().expect("tips have length at least one");
            if tree.index_of(&suffix).is_some() {
                tips.push(tip);
            }
        }
    }
    tips.sort_by(|x, y| tree.ordering().cmp_words(x, y));
    tips
}

/// The right-multiplication action rewritten in the nontip basis, along
/// with the change-of-basis matrices.
#[derive(Clone, Debug)]
pub struct NontipMatrices {
    /// Per generator: row w expresses w * a_i as nontip coordinates.
    matrices: Vec<FpMatrix>,
    /// Row j is the group-element image of nontip j.
    basis: FpMatrix,
    basis_inverse: FpMatrix,
}

impl NontipMatrices {
    pub fn matrix(&self, letter: usize) -> &FpMatrix {
        &self.matrices[letter]
    }

    pub fn matrices(&self) -> &[FpMatrix] {
        &self.matrices
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    /// Group-element coordinates -> nontip coordinates.
    pub fn to_nontip_coordinates(&self, v: &FpVector) -> Result<FpVector> {
        self.basis_inverse.apply(v)
    }
}

/// Change of basis: conjugates each generator action matrix into the
/// nontip basis, so that nu(w) for any tip w = u.a can be read off row u of
/// matrix a.
pub fn nontip_action_matrices(ctx: &AlgebraContext, tree: &NontipTree) -> Result<NontipMatrices> {
    let order = ctx.order();
    if tree.len() != order {
        return Err(Error::Internal(format!(
            "tree has {} nontips for a group of order {}",
            tree.len(),
            order
        )));
    }
    // Parents precede children in the array under all three orderings, so
    // the images fill in by one matrix application each.
    let mut images: Vec<FpVector> = Vec::with_capacity(order);
    for node in tree.nodes() {
        let image = match (node.parent, node.which_child) {
            (None, _) => ctx.identity_vector(),
            (Some(p), Some(a)) => ctx.matrix(a).apply(&images[p])?,
            _ => unreachable!("non-root nodes carry their child letter"),
        };
        images.push(image);
    }
    let basis = FpMatrix::from_rows(&images);
    let basis_inverse = basis
        .invert()
        .ok_or_else(|| Error::Internal("nontip image matrix is singular".into()))?;
    let matrices = (0..ctx.alphabet_size())
        .map(|a| basis.multiply(ctx.matrix(a)).multiply(&basis_inverse))
        .collect();
    Ok(NontipMatrices {
        matrices,
        basis,
        basis_inverse,
    })
}

/// One element of the reduced basis: a minimal tip w and the expansion
/// nu(w) of its image over the nontips, as (nontip index, coefficient)
/// pairs in descending word order. The ideal element is w - nu(w).
#[derive(Clone, Debug)]
pub struct GrobnerElement {
    pub tip: Word,
    pub expansion: Vec<(usize, u32)>,
}

/// The fully reduced basis of the relations ideal for one ordering.
#[derive(Clone, Debug)]
pub struct GrobnerBasis {
    pub ordering: OrderingSpec,
    pub elements: Vec<GrobnerElement>,
    pub prime: u32,
    pub group_n: u32,
    pub nilpotency: usize,
    /// RLL only: the basis generates the ideal together with all words of
    /// length >= N, not on its own.
    pub modulo_max_length: bool,
}

impl GrobnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Assembles the basis: for each minimal tip w = u.a, nu(w) is row u of the
/// nontip-basis matrix of a.
pub fn grobner_basis(
    ctx: &AlgebraContext,
    tree: &NontipTree,
    actions: &NontipMatrices,
) -> Result<GrobnerBasis> {
    let spec = tree.ordering().clone();
    let mut elements = Vec::new();
    for tip in minimal_tips(tree) {
        let (prefix, a) = tip.split_last().expect("tips are nonempty");
        let u = tree
            .index_of(&prefix)
            .ok_or_else(|| Error::Internal(format!("minimal tip {tip} lost its nontip prefix")))?;
        let row = actions.matrix(a).row(u);
        let mut expansion: Vec<(usize, u32)> = row
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c))
            .collect();
        expansion.sort_by(|x, y| spec.cmp_words(&tree.node(y.0).word, &tree.node(x.0).word));
        elements.push(GrobnerElement { tip, expansion });
    }
    Ok(GrobnerBasis {
        ordering: spec.clone(),
        elements,
        prime: ctx.prime(),
        group_n: ctx.group_n(),
        nilpotency: ctx.nilpotency(),
        modulo_max_length: spec.kind() == OrderingKind::Rll,
    })
}

/// Normal form of a formal sum of words, as nontip coordinates keyed by
/// array index. Computed through the group-element image and the change of
/// basis, never by rewriting.
pub fn reduce(
    ctx: &AlgebraContext,
    tree: &NontipTree,
    actions: &NontipMatrices,
    element: &[(Word, u32)],
) -> Result<BTreeMap<usize, u32>> {
    let _ = tree;
    let mut image = FpVector::zeros(ctx.prime(), ctx.order());
    for (word, coeff) in element {
        image.add_scaled_assign(&ctx.evaluate_word(word), *coeff);
    }
    let coords = actions.to_nontip_coordinates(&image)?;
    Ok(coords
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect())
}
