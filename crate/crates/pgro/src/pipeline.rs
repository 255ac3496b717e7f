//! One-shot pipeline: pick generators for the requested ordering, build the
//! context, enumerate nontips and assemble the basis.

use rand::Rng;

use crate::engine::{
    build_context, grobner_basis, nontip_action_matrices, nontips_jennings, nontips_ll,
    nontips_rll, AlgebraContext, GrobnerBasis, NontipMatrices, NontipTree,
};
use crate::error::{Error, Result};
use crate::group::{minimal_generators_rng, subgroup_closure, PGroup, SelectionMethod};
use crate::jennings::{jennings_pc_generators_rng, jennings_series, JenningsGenerators};
use crate::words::OrderingKind;

/// The default generator selection per ordering: smallest exponent for LL,
/// arbitrary otherwise.
pub fn default_selection(kind: OrderingKind) -> SelectionMethod {
    match kind {
        OrderingKind::Ll => SelectionMethod::SmallestExponent,
        OrderingKind::Rll | OrderingKind::Jennings => SelectionMethod::Arbitrary,
    }
}

/// Everything one pipeline pass produces.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub generators: Vec<usize>,
    pub jennings: Option<JenningsGenerators>,
    pub context: AlgebraContext,
    pub tree: NontipTree,
    pub actions: NontipMatrices,
    pub basis: GrobnerBasis,
}

/// Runs the full pipeline once.
///
/// With `use_given` the defining group generators are used as-is (for the
/// Jennings ordering they must form a valid pc-generator family), which
/// removes the random component; otherwise generators are drawn from `rng`.
pub fn run_pipeline(
    group: &PGroup,
    kind: OrderingKind,
    selection: SelectionMethod,
    rng: &mut impl Rng,
    use_given: bool,
) -> Result<PipelineRun> {
    let (generators, jennings) = match kind {
        OrderingKind::Jennings => {
            let jg = if use_given {
                validate_given_jennings(group)?
            } else {
                jennings_pc_generators_rng(group, rng)
            };
            (jg.elements.clone(), Some(jg))
        }
        OrderingKind::Ll | OrderingKind::Rll => {
            let gens = if use_given {
                group.generator_indices().to_vec()
            } else {
                minimal_generators_rng(group, selection, rng)?
            };
            (gens, None)
        }
    };

    let context = build_context(group, &generators)?;
    let tree = match (kind, &jennings) {
        (OrderingKind::Ll, _) => nontips_ll(&context)?,
        (OrderingKind::Rll, _) => nontips_rll(&context)?,
        (OrderingKind::Jennings, Some(jg)) => nontips_jennings(&context, jg)?,
        (OrderingKind::Jennings, None) => unreachable!(),
    };
    let actions = nontip_action_matrices(&context, &tree)?;
    let basis = grobner_basis(&context, &tree, &actions)?;
    Ok(PipelineRun {
        generators,
        jennings,
        context,
        tree,
        actions,
        basis,
    })
}

/// Checks that the defining group generators form a Jennings pc-generator
/// family and assigns their dimensions.
fn validate_given_jennings(group: &PGroup) -> Result<JenningsGenerators> {
    let series = jennings_series(group);
    let gens = group.generator_indices();
    let n = group.n() as usize;
    if gens.len() != n {
        return Err(Error::InvalidInput(format!(
            "jennings pc-generators need exactly n = {n} generators, the file defines {}",
            gens.len()
        )));
    }
    let mut dims = Vec::with_capacity(n);
    for &g in gens {
        if g == 0 {
            return Err(Error::InvalidInput(
                "the identity cannot be a pc-generator".into(),
            ));
        }
        let mut dim = 0;
        for r in 1..series.depth() {
            if series.term(r).contains(g) {
                dim = r;
            }
        }
        dims.push(dim as u32);
    }
    if dims.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(
            "defining generators are not listed layer by layer".into(),
        ));
    }
    let expected = series.layer_counts(group.prime());
    let mut counts = vec![0usize; expected.len()];
    for &d in &dims {
        counts[d as usize - 1] += 1;
    }
    if counts != expected {
        return Err(Error::InvalidInput(format!(
            "defining generators have layer counts {counts:?}, the dimension \
             subgroup chain requires {expected:?}"
        )));
    }
    // Each layer block must generate F_r together with F_{r+1}.
    let mut offset = 0;
    for (idx, &count) in expected.iter().enumerate() {
        let r = idx + 1;
        let mut seeds = series.term(r + 1).elements();
        seeds.extend_from_slice(&gens[offset..offset + count]);
        if subgroup_closure(group, &seeds) != *series.term(r) {
            return Err(Error::InvalidInput(format!(
                "layer {r} generators do not generate the layer quotient"
            )));
        }
        offset += count;
    }
    Ok(JenningsGenerators {
        elements: gens.to_vec(),
        dims,
        layer_counts: expected,
    })
}
