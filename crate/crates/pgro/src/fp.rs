//! Dense vectors and matrices over a prime field F_p, plus incremental
//! Gaussian elimination.
//!
//! Every tip/nontip decision in the basis engine reduces to one question:
//! does this vector lie in the span of the vectors seen so far?
//! [`EchelonState`] answers it incrementally, and keeps enough bookkeeping
//! to express a dependent vector as a combination of the *original*
//! inserted vectors rather than of the reduced rows.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Multiplicative inverse of `a` modulo the prime `p`, by extended Euclid.
///
/// `a` must be nonzero mod `p`.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    let a = a % p;
    assert!(a != 0, "zero has no inverse");
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert!(r0 == 1, "{a} is not a unit mod {p}");
    t0.rem_euclid(p as i64) as u32
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

/// A fixed-length vector of residues mod a prime `p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpVector {
    p: u32,
    entries: Vec<u32>,
}

impl FpVector {
    pub fn zeros(p: u32, len: usize) -> Self {
        FpVector {
            p,
            entries: vec![0; len],
        }
    }

    /// Builds a vector from arbitrary integers, reducing each mod `p`.
    pub fn from_entries(p: u32, entries: Vec<u32>) -> Self {
        let entries = entries.into_iter().map(|e| e % p).collect();
        FpVector { p, entries }
    }

    /// The standard basis vector with a 1 in position `index`.
    pub fn unit(p: u32, len: usize, index: usize) -> Self {
        let mut v = FpVector::zeros(p, len);
        v.set(index, 1);
        v
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: u32) {
        self.entries[i] = value % self.p;
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.entries.iter().position(|&e| e != 0)
    }

    /// `self += c * other`. Lengths and moduli must agree.
    pub fn add_scaled_assign(&mut self, other: &FpVector, c: u32) {
        assert_eq!(self.p, other.p, "modulus mismatch");
        assert_eq!(self.entries.len(), other.entries.len(), "length mismatch");
        let p = self.p;
        let c = c % p;
        if c == 0 {
            return;
        }
        for (a, &b) in self.entries.iter_mut().zip(&other.entries) {
            *a = add_mod(*a, mul_mod(c, b, p), p);
        }
    }

    /// `self *= c`.
    pub fn scale_assign(&mut self, c: u32) {
        let p = self.p;
        let c = c % p;
        for a in self.entries.iter_mut() {
            *a = mul_mod(*a, c, p);
        }
    }
}

/// A dense row-major matrix of residues mod a prime `p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from its rows.
    pub fn from_rows(rows: &[FpVector]) -> Self {
        assert!(!rows.is_empty(), "cannot infer shape from no rows");
        let p = rows[0].modulus();
        let cols = rows[0].len();
        let mut m = FpMatrix::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.modulus(), p);
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r.entries());
        }
        m
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        self.data[r * self.cols + c] = value % self.p;
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: u32) {
        let cur = self.get(r, c);
        self.data[r * self.cols + c] = add_mod(cur, value % self.p, self.p);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> FpVector {
        FpVector {
            p: self.p,
            entries: self.row(r).to_vec(),
        }
    }

    /// Right multiplication of a row vector: returns `v * self`.
    pub fn apply(&self, v: &FpVector) -> Result<FpVector> {
        if v.modulus() != self.p {
            return Err(Error::ModulusMismatch {
                expected: self.p,
                got: v.modulus(),
            });
        }
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = FpVector::zeros(self.p, self.cols);
        for (i, &vi) in v.entries().iter().enumerate() {
            if vi == 0 {
                continue;
            }
            out.add_scaled_assign(&self.row_vector(i), vi);
        }
        Ok(out)
    }

    /// Matrix product `self * rhs`.
    pub fn multiply(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let p = self.p as u64;
        let mut out = FpMatrix::zeros(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let rhs_row = rhs.row(k);
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o = ((*o as u64 + a * b as u64) % p) as u32;
                }
            }
        }
        out
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn invert(&self) -> Option<FpMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let p = self.p;
        let mut a = self.clone();
        let mut inv = FpMatrix::identity(p, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            if pivot != col {
                for c in 0..n {
                    let (x, y) = (a.get(col, c), a.get(pivot, c));
                    a.set(col, c, y);
                    a.set(pivot, c, x);
                    let (x, y) = (inv.get(col, c), inv.get(pivot, c));
                    inv.set(col, c, y);
                    inv.set(pivot, c, x);
                }
            }
            let scale = inv_mod(a.get(col, col), p);
            for c in 0..n {
                a.set(col, c, mul_mod(a.get(col, c), scale, p));
                inv.set(col, c, mul_mod(inv.get(col, c), scale, p));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for c in 0..n {
                    a.set(
                        r,
                        c,
                        add_mod(a.get(r, c), mul_mod(neg, a.get(col, c), p), p),
                    );
                    inv.set(
                        r,
                        c,
                        add_mod(inv.get(r, c), mul_mod(neg, inv.get(col, c), p), p),
                    );
                }
            }
        }
        Some(inv)
    }
}

/// Outcome of offering a vector to an [`EchelonState`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InsertOutcome {
    /// The vector was outside the span so far; it has been recorded and the
    /// rank grew by one.
    Independent,
    /// The vector already lies in the span. The map expresses it as a
    /// combination of the previously inserted vectors, keyed by insertion
    /// index.
    Dependent(BTreeMap<usize, u32>),
}

#[derive(Clone, Debug)]
struct StoredRow {
    vec: FpVector,
    pivot: usize,
    /// Coefficients expressing `vec` in terms of the original inserted
    /// vectors. Trailing entries may be missing and count as zero.
    combo: Vec<u32>,
}

/// Incremental reduced-row-echelon elimination over F_p.
///
/// Rows are kept fully reduced: each pivot is 1 and is the only nonzero
/// entry in its column, and pivot columns strictly increase. Alongside each
/// reduced row the state carries the combination of original insertions it
/// came from, so dependent offers can be answered in terms of the inserted
/// vectors.
#[derive(Clone, Debug)]
pub struct EchelonState {
    p: u32,
    dim: usize,
    rows: Vec<StoredRow>,
    originals: Vec<FpVector>,
}

impl EchelonState {
    pub fn new(p: u32, dim: usize) -> Self {
        EchelonState {
            p,
            dim,
            rows: Vec::new(),
            originals: Vec::new(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors accepted so far (equals the rank).
    pub fn inserted_count(&self) -> usize {
        self.originals.len()
    }

    /// The `i`-th accepted original vector.
    pub fn inserted(&self, i: usize) -> &FpVector {
        &self.originals[i]
    }

    /// The reduced rows, pivot columns ascending.
    pub fn reduced_rows(&self) -> impl Iterator<Item = &FpVector> {
        self.rows.iter().map(|r| &r.vec)
    }

    fn check(&self, v: &FpVector) -> Result<()> {
        if v.modulus() != self.p {
            return Err(Error::ModulusMismatch {
                expected: self.p,
                got: v.modulus(),
            });
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against the stored rows. Returns the remainder `r` and
    /// coefficients `c` over the originals with `r = v - sum c[j] * orig[j]`.
    fn reduce(&self, v: &FpVector) -> (FpVector, Vec<u32>) {
        let p = self.p;
        let mut r = v.clone();
        let mut coeffs = vec![0u32; self.originals.len()];
        for row in &self.rows {
            let kappa = r.get(row.pivot);
            if kappa == 0 {
                continue;
            }
            r.add_scaled_assign(&row.vec, p - kappa);
            for (j, &c) in row.combo.iter().enumerate() {
                coeffs[j] = add_mod(coeffs[j], mul_mod(kappa, c, p), p);
            }
        }
        (r, coeffs)
    }

    /// Expresses `v` in terms of the inserted vectors without modifying the
    /// state. `None` if `v` is outside the current span.
    pub fn coordinates_of(&self, v: &FpVector) -> Result<Option<BTreeMap<usize, u32>>> {
        self.check(v)?;
        let (r, coeffs) = self.reduce(v);
        if r.is_zero() {
            Ok(Some(sparse_map(&coeffs)))
        } else {
            Ok(None)
        }
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &FpVector) -> Result<bool> {
        Ok(self.coordinates_of(v)?.is_some())
    }

    /// Offers `v` to the state. Independent vectors are recorded; dependent
    /// ones leave the state unchanged and come back with their coordinates.
    pub fn insert(&mut self, v: &FpVector) -> Result<InsertOutcome> {
        self.check(v)?;
        let p = self.p;
        let (mut r, coeffs) = self.reduce(v);
        let Some(pivot) = r.first_nonzero() else {
            return Ok(InsertOutcome::Dependent(sparse_map(&coeffs)));
        };

        let scale = inv_mod(r.get(pivot), p);
        r.scale_assign(scale);
        let new_index = self.originals.len();
        let mut combo = vec![0u32; new_index + 1];
        for (j, &c) in coeffs.iter().enumerate() {
            combo[j] = mul_mod(p - 1, mul_mod(scale, c, p), p);
        }
        combo[new_index] = scale;

        // Clear the new pivot column from the existing rows.
        for row in self.rows.iter_mut() {
            let mu = row.vec.get(pivot);
            if mu == 0 {
                continue;
            }
            row.vec.add_scaled_assign(&r, p - mu);
            if row.combo.len() < combo.len() {
                row.combo.resize(combo.len(), 0);
            }
            for (a, &b) in row.combo.iter_mut().zip(&combo) {
                *a = add_mod(*a, mul_mod(p - mu, b, p), p);
            }
        }

        let pos = self
            .rows
            .binary_search_by(|row| row.pivot.cmp(&pivot))
            .unwrap_err();
        self.rows.insert(
            pos,
            StoredRow {
                vec: r,
                pivot,
                combo,
            },
        );
        self.originals.push(v.clone());
        Ok(InsertOutcome::Independent)
    }
}

fn sparse_map(coeffs: &[u32]) -> BTreeMap<usize, u32> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect()
}

/// Rank of a set of vectors, by folding them through an [`EchelonState`].
pub fn span_dimension(vectors: &[FpVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let mut state = EchelonState::new(first.modulus(), first.len());
    for v in vectors {
        state.insert(v)?;
    }
    Ok(state.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vec2(p: u32, entries: &[u32]) -> FpVector {
        FpVector::from_entries(p, entries.to_vec())
    }

    #[test]
    fn inverse_mod_small_primes() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
    }

    #[test]
    fn insert_basis_vector_into_empty_state() {
        let mut state = EchelonState::new(2, 3);
        let out = state.insert(&vec2(2, &[1, 0, 0])).unwrap();
        assert_eq!(out, InsertOutcome::Independent);
        assert_eq!(state.rank(), 1);
    }

    #[test]
    fn repeated_vector_is_dependent() {
        let mut state = EchelonState::new(2, 3);
        state.insert(&vec2(2, &[1, 0, 0])).unwrap();
        let out = state.insert(&vec2(2, &[1, 0, 0])).unwrap();
        let expected: BTreeMap<usize, u32> = [(0, 1)].into_iter().collect();
        assert_eq!(out, InsertOutcome::Dependent(expected));
        assert_eq!(state.rank(), 1);
    }

    #[test]
    fn dependent_coefficients_refer_to_original_vectors() {
        // (1,0,0) = v0 + v1 with v0 = (1,1,0), v1 = (0,1,0).
        let mut state = EchelonState::new(2, 3);
        state.insert(&vec2(2, &[1, 1, 0])).unwrap();
        state.insert(&vec2(2, &[0, 1, 0])).unwrap();
        let out = state.insert(&vec2(2, &[1, 0, 0])).unwrap();
        let expected: BTreeMap<usize, u32> = [(0, 1), (1, 1)].into_iter().collect();
        assert_eq!(out, InsertOutcome::Dependent(expected));
    }

    #[test]
    fn mismatched_input_is_rejected() {
        let mut state = EchelonState::new(2, 3);
        assert!(matches!(
            state.insert(&vec2(2, &[1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            state.insert(&vec2(3, &[1, 0, 0])),
            Err(Error::ModulusMismatch { .. })
        ));
        let m = FpMatrix::identity(2, 3);
        assert!(m.apply(&vec2(2, &[1, 0])).is_err());
    }

    #[test]
    fn apply_identity_and_zero() {
        let v = vec2(3, &[1, 2, 0, 1]);
        let id = FpMatrix::identity(3, 4);
        assert_eq!(id.apply(&v).unwrap(), v);
        let zero = FpMatrix::zeros(3, 4, 4);
        assert!(zero.apply(&v).unwrap().is_zero());
    }

    #[test]
    fn apply_small_hand_example() {
        // (1,1) * ((0,1),(1,1)) = (1,0) over F_2.
        let mut m = FpMatrix::zeros(2, 2, 2);
        m.set(0, 1, 1);
        m.set(1, 0, 1);
        m.set(1, 1, 1);
        assert_eq!(m.apply(&vec2(2, &[1, 1])).unwrap(), vec2(2, &[1, 0]));
    }

    #[test]
    fn span_dimension_examples() {
        assert_eq!(span_dimension(&[]).unwrap(), 0);
        let vs = [vec2(2, &[1, 0]), vec2(2, &[0, 1]), vec2(2, &[1, 1])];
        assert_eq!(span_dimension(&vs).unwrap(), 2);
        // e_1 .. e_{p-1} in F_p^n for p = 5, n = 6.
        let units: Vec<_> = (0..4).map(|i| FpVector::unit(5, 6, i)).collect();
        assert_eq!(span_dimension(&units).unwrap(), 4);
    }

    #[test]
    fn span_dimension_is_permutation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2u32, 3] {
            for _ in 0..20 {
                let dim = rng.gen_range(1..8);
                let count = rng.gen_range(0..10);
                let mut vs: Vec<FpVector> = (0..count)
                    .map(|_| {
                        FpVector::from_entries(p, (0..dim).map(|_| rng.gen_range(0..p)).collect())
                    })
                    .collect();
                let d1 = span_dimension(&vs).unwrap();
                // Fisher-Yates shuffle.
                for i in (1..vs.len()).rev() {
                    let j = rng.gen_range(0..=i);
                    vs.swap(i, j);
                }
                assert_eq!(span_dimension(&vs).unwrap(), d1);
            }
        }
    }

    #[test]
    fn reinsertion_coefficients_reproduce_the_vector() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for p in [2u32, 3] {
            for _ in 0..10 {
                let dim = rng.gen_range(1..=64);
                let mut state = EchelonState::new(p, dim);
                let mut inserted = Vec::new();
                for _ in 0..rng.gen_range(1..=dim + 4) {
                    let v =
                        FpVector::from_entries(p, (0..dim).map(|_| rng.gen_range(0..p)).collect());
                    if matches!(state.insert(&v).unwrap(), InsertOutcome::Independent) {
                        inserted.push(v);
                    }
                }
                for v in &inserted {
                    let InsertOutcome::Dependent(coeffs) = state.insert(v).unwrap() else {
                        panic!("previously inserted vector reported independent");
                    };
                    let mut rebuilt = FpVector::zeros(p, dim);
                    for (&j, &c) in &coeffs {
                        rebuilt.add_scaled_assign(state.inserted(j), c);
                    }
                    assert_eq!(&rebuilt, v);
                }
            }
        }
    }

    #[test]
    fn apply_distributes_over_addition() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [2u32, 3, 5] {
            for _ in 0..10 {
                let n = rng.gen_range(1..8);
                let mut m = FpMatrix::zeros(p, n, n);
                for r in 0..n {
                    for c in 0..n {
                        m.set(r, c, rng.gen_range(0..p));
                    }
                }
                let a = FpVector::from_entries(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
                let b = FpVector::from_entries(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
                let mut sum = a.clone();
                sum.add_scaled_assign(&b, 1);
                let lhs = m.apply(&sum).unwrap();
                let mut rhs = m.apply(&a).unwrap();
                rhs.add_scaled_assign(&m.apply(&b).unwrap(), 1);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn invert_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2u32, 3, 5] {
            let mut found = 0;
            while found < 5 {
                let n = rng.gen_range(1..7);
                let mut m = FpMatrix::zeros(p, n, n);
                for r in 0..n {
                    for c in 0..n {
                        m.set(r, c, rng.gen_range(0..p));
                    }
                }
                if let Some(inv) = m.invert() {
                    assert_eq!(m.multiply(&inv), FpMatrix::identity(p, n));
                    assert_eq!(inv.multiply(&m), FpMatrix::identity(p, n));
                    found += 1;
                }
            }
        }
        let singular = FpMatrix::zeros(3, 2, 2);
        assert!(singular.invert().is_none());
    }
}
