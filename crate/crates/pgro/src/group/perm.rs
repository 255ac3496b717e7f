//! Permutations of `{0, .., degree-1}`.

use crate::error::{Error, Result};

/// A permutation stored as its image list: point `i` maps to `images[i]`.
///
/// Points are 0-based internally; external file formats use 1-based images.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &im in &images {
            if im >= degree {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    im + 1,
                    degree
                )));
            }
            if seen[im] {
                return Err(Error::InvalidPermutation(format!(
                    "image {} repeated",
                    im + 1
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images (the file format convention).
    pub fn from_one_based(images: Vec<usize>) -> Result<Self> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&im| {
                im.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("images are 1-based, got 0".into()))
            })
            .collect::<Result<_>>()?;
        Permutation::from_images(shifted)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&im| im + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Composition `self * other`: apply `self` first, then `other`.
    ///
    /// This matches the right action used for the group product, so
    /// `x.then(g)` is the permutation of `x * g`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&im| other.images[im]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }
}
