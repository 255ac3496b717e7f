//! The nontips path tree.
//!
//! Nontips are subword-closed, so they form a tree in which the children of
//! a word w are the nontips w.a; at the same time they are an ordered basis,
//! so the nodes also live in an array: ascending word order for LL,
//! descending for RLL and Jennings. Under all three conventions the root
//! (the empty word) sits at array position 0 and parents precede children,
//! which lets the tree be built while the nontips are being discovered.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::{OrderingSpec, Word};

/// One nontip: its word, tree links and position bookkeeping.
#[derive(Clone, Debug)]
pub struct PathNode {
    pub word: Word,
    /// Array index of the parent (the word minus its last letter).
    pub parent: Option<usize>,
    /// Which letter extends the parent into this node.
    pub which_child: Option<usize>,
    /// Child array indices per letter; `None` means the extension is a tip.
    pub children: Vec<Option<usize>>,
}

impl PathNode {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// The array-plus-tree structure over the |G| nontips.
#[derive(Clone, Debug)]
pub struct NontipTree {
    spec: OrderingSpec,
    nodes: Vec<PathNode>,
}

impl NontipTree {
    /// Builds the tree from the nontip words already in array order.
    pub(crate) fn from_ordered_words(spec: OrderingSpec, words: Vec<Word>) -> Result<Self> {
        if words.first().map(Word::is_empty) != Some(true) {
            return Err(Error::Internal(
                "nontip array must start with the empty word".into(),
            ));
        }
        let mut index: HashMap<&Word, usize> = HashMap::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if index.insert(w, i).is_some() {
                return Err(Error::Internal(format!("duplicate nontip {w}")));
            }
        }
        let alphabet = spec.alphabet_size();
        let mut nodes = Vec::with_capacity(words.len());
        for w in &words {
            let (parent, which_child) = match w.split_last() {
                None => (None, None),
                Some((prefix, last)) => {
                    let p = *index.get(&prefix).ok_or_else(|| {
                        Error::Internal(format!("nontip {w} lacks its prefix {prefix}"))
                    })?;
                    (Some(p), Some(last))
                }
            };
            let children = (0..alphabet)
                .map(|a| index.get(&w.extended(a)).copied())
                .collect();
            nodes.push(PathNode {
                word: w.clone(),
                parent,
                which_child,
                children,
            });
        }
        Ok(NontipTree { spec, nodes })
    }

    pub fn ordering(&self) -> &OrderingSpec {
        &self.spec
    }

    pub fn alphabet_size(&self) -> usize {
        self.spec.alphabet_size()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &PathNode {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> impl Iterator<Item = &PathNode> {
        self.nodes.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.nodes.iter().map(|n| &n.word)
    }

    /// Array index of a word, by walking child links from the root.
    pub fn index_of(&self, word: &Word) -> Option<usize> {
        let mut cur = 0usize;
        for &letter in word.letters() {
            if letter >= self.alphabet_size() {
                return None;
            }
            cur = self.nodes[cur].children[letter]?;
        }
        Some(cur)
    }

    /// Number of nontips of each length, index = length.
    pub fn length_profile(&self) -> Vec<usize> {
        let max = self.nodes.iter().map(PathNode::length).max().unwrap_or(0);
        let mut profile = vec![0usize; max + 1];
        for n in &self.nodes {
            profile[n.length()] += 1;
        }
        profile
    }
}
