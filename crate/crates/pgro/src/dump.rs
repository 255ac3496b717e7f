//! Text renderings of the nontips and basis files.
//!
//! Nontips file: a header `nontips <p> <n> <alphabet-size> <N> <ordering>`
//! followed by one line per nontip in array order:
//! `<index> <length> <word> <parent-index> <which-child>`, with `-` for the
//! root's missing links and the child letter printed 1-based.
//!
//! Basis file: one line per element, `<tip> = <c>*<nontip> + ...` with the
//! terms in descending word order, `0` for an empty expansion. Lines follow
//! the nontip array direction (ascending for LL, descending for RLL and
//! Jennings). RLL files open with a `modulo words of length >= N` header
//! because there the basis generates the ideal only together with all words
//! of that length.

use crate::engine::{GrobnerBasis, NontipTree};
use crate::words::OrderingKind;

/// Renders the nontips file.
pub fn nontips_file(tree: &NontipTree, p: u32, group_n: u32, nilpotency: usize) -> String {
    let mut out = format!(
        "nontips {} {} {} {} {}\n",
        p,
        group_n,
        tree.alphabet_size(),
        nilpotency,
        tree.ordering().kind().tag()
    );
    for (i, node) in tree.nodes().enumerate() {
        let parent = node
            .parent
            .map_or_else(|| "-".to_string(), |x| x.to_string());
        let child = node
            .which_child
            .map_or_else(|| "-".to_string(), |a| (a + 1).to_string());
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            i,
            node.length(),
            node.word,
            parent,
            child
        ));
    }
    out
}

/// Renders the basis file.
pub fn basis_file(basis: &GrobnerBasis, tree: &NontipTree) -> String {
    let mut out = String::new();
    if basis.modulo_max_length {
        out.push_str(&format!("modulo words of length >= {}\n", basis.nilpotency));
    }
    let lines: Vec<String> = basis
        .elements
        .iter()
        .map(|e| {
            let rhs = if e.expansion.is_empty() {
                "0".to_string()
            } else {
                e.expansion
                    .iter()
                    .map(|(j, c)| format!("{}*{}", c, tree.node(*j).word))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            format!("{} = {}\n", e.tip, rhs)
        })
        .collect();
    match basis.ordering.kind() {
        OrderingKind::Ll => {
            for line in lines {
                out.push_str(&line);
            }
        }
        OrderingKind::Rll | OrderingKind::Jennings => {
            for line in lines.iter().rev() {
                out.push_str(line);
            }
        }
    }
    out
}
