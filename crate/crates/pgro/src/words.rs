//! Words over the algebra-generator alphabet and the three admissible word
//! orderings.
//!
//! Generators are indexed 0-based internally and render 1-based: generator
//! `i` prints as `a<i+1>`, concatenation prints with `*`, and the empty word
//! prints as `1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A word in the free monoid on the generator alphabet.
///
/// The derived `Ord` is structural (length, then letters) and is only for
/// use as a set/map key; semantic comparisons go through [`OrderingSpec`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn single(letter: usize) -> Self {
        Word {
            letters: vec![letter],
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn last(&self) -> Option<usize> {
        self.letters.last().copied()
    }

    /// The word with `letter` appended.
    pub fn extended(&self, letter: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word { letters }
    }

    /// The word minus its last letter, with that letter.
    pub fn split_last(&self) -> Option<(Word, usize)> {
        let (&last, rest) = self.letters.split_last()?;
        Some((Word::from_letters(rest.to_vec()), last))
    }

    /// The word minus its first letter.
    pub fn tail(&self) -> Option<Word> {
        let (_, rest) = self.letters.split_first()?;
        Some(Word::from_letters(rest.to_vec()))
    }

    /// All contiguous proper subwords, including the empty word,
    /// deduplicated.
    pub fn subwords_proper(&self) -> Vec<Word> {
        let mut set = BTreeSet::new();
        set.insert(Word::empty());
        let n = self.letters.len();
        for i in 0..n {
            for j in i + 1..=n {
                if j - i < n {
                    set.insert(Word::from_letters(self.letters[i..j].to_vec()));
                }
            }
        }
        set.into_iter().collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&a| format!("a{}", a + 1))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Total dimension of a word: the sum of its letters' dimensions
/// (0 for the empty word).
pub fn word_dimension(word: &Word, dims: &[u32]) -> u64 {
    word.letters().iter().map(|&a| dims[a] as u64).sum()
}

/// Which of the three word orderings is in force.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderingKind {
    /// Length-lexicographical: shorter first, ties broken left-to-right
    /// lexicographically with a1 < a2 < ...
    Ll,
    /// Reverse length-lexicographical: the exact opposite of LL.
    Rll,
    /// Higher total dimension first (i.e. smaller), then shorter, then
    /// lexicographically larger.
    Jennings,
}

impl OrderingKind {
    pub fn tag(&self) -> &'static str {
        match self {
            OrderingKind::Ll => "ll",
            OrderingKind::Rll => "rll",
            OrderingKind::Jennings => "jennings",
        }
    }
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A word ordering over a fixed alphabet. Jennings orderings carry the
/// per-generator dimensions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderingSpec {
    kind: OrderingKind,
    alphabet: usize,
    dims: Option<Vec<u32>>,
}

impl OrderingSpec {
    pub fn ll(alphabet: usize) -> Self {
        OrderingSpec {
            kind: OrderingKind::Ll,
            alphabet,
            dims: None,
        }
    }

    pub fn rll(alphabet: usize) -> Self {
        OrderingSpec {
            kind: OrderingKind::Rll,
            alphabet,
            dims: None,
        }
    }

    /// A Jennings ordering for generators of the given dimensions, which
    /// must be >= 1 and non-decreasing (generators are listed layer by
    /// layer).
    pub fn jennings(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidInput("no generator dimensions".into()));
        }
        if dims[0] < 1 || dims.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(
                "generator dimensions must be >= 1 and non-decreasing".into(),
            ));
        }
        Ok(OrderingSpec {
            kind: OrderingKind::Jennings,
            alphabet: dims.len(),
            dims: Some(dims),
        })
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn dims(&self) -> Option<&[u32]> {
        self.dims.as_deref()
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        for &letter in w.letters() {
            if letter >= self.alphabet {
                return Err(Error::LetterOutOfRange {
                    letter,
                    alphabet: self.alphabet,
                });
            }
        }
        Ok(())
    }

    /// Compares two words, rejecting letters outside the alphabet.
    pub fn compare(&self, w1: &Word, w2: &Word) -> Result<Ordering> {
        self.check_word(w1)?;
        self.check_word(w2)?;
        Ok(self.cmp_words(w1, w2))
    }

    /// Comparison without the alphabet check; both words must be over this
    /// spec's alphabet.
    pub fn cmp_words(&self, w1: &Word, w2: &Word) -> Ordering {
        match self.kind {
            OrderingKind::Ll => cmp_ll(w1, w2),
            OrderingKind::Rll => cmp_ll(w1, w2).reverse(),
            OrderingKind::Jennings => {
                let dims = self.dims.as_deref().expect("jennings spec carries dims");
                let (d1, d2) = (word_dimension(w1, dims), word_dimension(w2, dims));
                // Higher dimension means smaller; equal dimension resolves by
                // length, then by *descending* lexicographic order.
                d2.cmp(&d1)
                    .then_with(|| w1.len().cmp(&w2.len()))
                    .then_with(|| w2.letters().cmp(w1.letters()))
            }
        }
    }
}

fn cmp_ll(w1: &Word, w2: &Word) -> Ordering {
    w1.len()
        .cmp(&w2.len())
        .then_with(|| w1.letters().cmp(w2.letters()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(letters: &[usize]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(w(&[0]).to_string(), "a1");
        assert_eq!(w(&[1, 0]).to_string(), "a2*a1");
    }

    #[test]
    fn ll_and_rll_examples() {
        let ll = OrderingSpec::ll(2);
        let rll = OrderingSpec::rll(2);
        assert_eq!(
            ll.compare(&w(&[0, 1]), &w(&[1, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            rll.compare(&w(&[0, 1]), &w(&[1, 0])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(ll.compare(&w(&[0]), &w(&[0, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn jennings_nontips_of_c4_ascend_as_stated() {
        // dims (1, 2): a2*a1 < a2 < a1 < 1.
        let spec = OrderingSpec::jennings(vec![1, 2]).unwrap();
        let chain = [w(&[1, 0]), w(&[1]), w(&[0]), Word::empty()];
        for pair in chain.windows(2) {
            assert_eq!(spec.compare(&pair[0], &pair[1]).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn word_dimensions() {
        assert_eq!(word_dimension(&Word::empty(), &[1, 2]), 0);
        assert_eq!(word_dimension(&w(&[1, 0]), &[1, 2]), 3);
        assert_eq!(word_dimension(&w(&[0, 0]), &[1, 2]), 2);
    }

    #[test]
    fn subwords_of_short_words() {
        assert_eq!(w(&[0]).subwords_proper(), vec![Word::empty()]);
        assert_eq!(
            w(&[0, 1]).subwords_proper(),
            vec![Word::empty(), w(&[0]), w(&[1])]
        );
        assert_eq!(w(&[0, 0]).subwords_proper(), vec![Word::empty(), w(&[0])]);
    }

    #[test]
    fn out_of_alphabet_letters_are_rejected() {
        let spec = OrderingSpec::ll(2);
        assert!(matches!(
            spec.compare(&w(&[2]), &w(&[0])),
            Err(Error::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn jennings_dims_validated() {
        assert!(OrderingSpec::jennings(vec![]).is_err());
        assert!(OrderingSpec::jennings(vec![0, 1]).is_err());
        assert!(OrderingSpec::jennings(vec![2, 1]).is_err());
        assert!(OrderingSpec::jennings(vec![1, 1, 2, 3]).is_ok());
    }

    fn random_word(rng: &mut ChaCha8Rng, alphabet: usize, max_len: usize) -> Word {
        let len = rng.gen_range(0..=max_len);
        Word::from_letters((0..len).map(|_| rng.gen_range(0..alphabet)).collect())
    }

    fn sample_specs(rng: &mut ChaCha8Rng) -> Vec<OrderingSpec> {
        let alphabet = rng.gen_range(1..=4);
        let mut dims = Vec::with_capacity(alphabet);
        let mut d = 1u32;
        for _ in 0..alphabet {
            d += rng.gen_range(0..2);
            dims.push(d);
        }
        vec![
            OrderingSpec::ll(alphabet),
            OrderingSpec::rll(alphabet),
            OrderingSpec::jennings(dims).unwrap(),
        ]
    }

    #[test]
    fn comparators_are_strict_total_orders() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            for spec in sample_specs(&mut rng) {
                let words: Vec<Word> = (0..12)
                    .map(|_| random_word(&mut rng, spec.alphabet_size(), 6))
                    .collect();
                for a in &words {
                    assert_eq!(spec.cmp_words(a, a), Ordering::Equal);
                    for b in &words {
                        let ab = spec.cmp_words(a, b);
                        assert_eq!(ab, spec.cmp_words(b, a).reverse());
                        assert_eq!(ab == Ordering::Equal, a == b);
                        for c in &words {
                            if ab == Ordering::Less && spec.cmp_words(b, c) == Ordering::Less {
                                assert_eq!(spec.cmp_words(a, c), Ordering::Less);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orderings_are_admissible() {
        // v1 <= v2 implies u v1 w <= u v2 w.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..40 {
            for spec in sample_specs(&mut rng) {
                let k = spec.alphabet_size();
                let u = random_word(&mut rng, k, 4);
                let v1 = random_word(&mut rng, k, 4);
                let v2 = random_word(&mut rng, k, 4);
                let tail = random_word(&mut rng, k, 4);
                if spec.cmp_words(&v1, &v2) != Ordering::Less {
                    continue;
                }
                let mut lhs = u.letters().to_vec();
                lhs.extend_from_slice(v1.letters());
                lhs.extend_from_slice(tail.letters());
                let mut rhs = u.letters().to_vec();
                rhs.extend_from_slice(v2.letters());
                rhs.extend_from_slice(tail.letters());
                let cmp = spec.cmp_words(&Word::from_letters(lhs), &Word::from_letters(rhs));
                assert_ne!(cmp, Ordering::Greater);
            }
        }
    }

    #[test]
    fn rll_is_the_reverse_of_ll() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ll = OrderingSpec::ll(3);
        let rll = OrderingSpec::rll(3);
        for _ in 0..200 {
            let a = random_word(&mut rng, 3, 6);
            let b = random_word(&mut rng, 3, 6);
            assert_eq!(ll.cmp_words(&a, &b), rll.cmp_words(&a, &b).reverse());
        }
    }

    #[test]
    fn jennings_dimension_dominates_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let dims = vec![1, 1, 2, 3];
        for _ in 0..200 {
            let word = random_word(&mut rng, dims.len(), 6);
            assert!(word_dimension(&word, &dims) >= word.len() as u64);
        }
    }
}
