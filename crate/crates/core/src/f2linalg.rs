//! Dense linear algebra over the two-element field.
//!
//! Rows are bit-packed into `u64` words. Elimination is leftmost-pivot-first
//! and kernel vectors come out in increasing free-column order, so every
//! basis produced downstream is deterministic.

use std::fmt;

const WORD: usize = 64;

/// A vector over F2, bit-packed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// `self += other` over F2.
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit at or after `from`.
    pub fn first_one_from(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut w = from / WORD;
        let mut word = self.words[w] & (!0u64 << (from % WORD));
        loop {
            if word != 0 {
                let i = w * WORD + word.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
            w += 1;
            if w >= self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut next = self.first_one_from(0);
        std::iter::from_fn(move || {
            let cur = next?;
            next = self.first_one_from(cur + 1);
            Some(cur)
        })
    }

    /// Inner product over F2.
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A `rows × cols` matrix over F2.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: (0..rows).map(|_| BitVec::zeros(cols)).collect(),
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 rows. All rows must share one length.
    ///
    /// # Panics
    /// On ragged input or entries other than 0 and 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for (j, &x) in r.iter().enumerate() {
                assert!(x <= 1, "F2 entries must be 0 or 1");
                m.set(i, j, x == 1);
            }
        }
        m
    }

    /// Builds a matrix whose rows are the given bit vectors.
    pub fn from_bitvecs(rows: Vec<BitVec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        Self { rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows(), "dimension mismatch in product");
        let mut out = F2Matrix::zeros(self.rows(), other.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for k in row.ones() {
                out.rows[i].xor_assign(&other.rows[k]);
            }
        }
        out
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!((self.rows(), self.cols), (other.rows(), other.cols));
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.xor_assign(b);
        }
        out
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols);
        let mut out = BitVec::zeros(self.rows());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &F2Matrix) -> F2Matrix {
        let (r1, c1) = (self.rows(), self.cols);
        let mut out = F2Matrix::zeros(r1 + other.rows(), c1 + other.cols);
        for i in 0..r1 {
            for j in self.rows[i].ones() {
                out.set(i, j, true);
            }
        }
        for i in 0..other.rows() {
            for j in other.rows[i].ones() {
                out.set(r1 + i, c1 + j, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    /// Reduced row echelon form with leftmost pivots. Returns the reduced
    /// matrix and the pivot column of each nonzero row, in order.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        (
            F2Matrix {
                rows,
                cols: self.cols,
            },
            pivots,
        )
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Rank over F2.
pub fn rank(m: &F2Matrix) -> usize {
    // Forward elimination only; no need for the full reduced form.
    let mut rows: Vec<BitVec> = m.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut rank = 0;
    let mut c = 0;
    while rank < rows.len() && c < m.cols {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(c)) {
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail.iter_mut() {
                if row.get(c) {
                    row.xor_assign(pivot);
                }
            }
            rank += 1;
        }
        c += 1;
    }
    rank
}

/// A basis of `{v : m·v = 0}`, one vector per free column, in increasing
/// free-column order.
pub fn kernel_basis(m: &F2Matrix) -> Vec<BitVec> {
    let (red, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVec::zeros(m.cols);
            v.set(free, true);
            for (row, &p) in pivots.iter().enumerate() {
                if red.get(row, free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// Incremental row-echelon accumulator. Used to pick, in insertion order,
/// the vectors that extend a span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    // (pivot column, reduced row); pivot = lowest set bit of the row.
    rows: Vec<(usize, BitVec)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        for (p, row) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v`; returns whether the span grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        assert_eq!(v.len(), self.len);
        let v = self.reduce(v);
        let Some(p) = v.first_one_from(0) else {
            return false;
        };
        for (_, row) in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        self.rows.push((p, v));
        true
    }

    /// Pivot columns of the accumulated span, sorted.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        p.sort_unstable();
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&F2Matrix::zeros(0, 0)), 0);
        assert_eq!(rank(&F2Matrix::identity(3)), 3);
        assert_eq!(rank(&F2Matrix::from_rows(&[[1, 1], [1, 1]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&F2Matrix::identity(2)).is_empty());
        assert_eq!(kernel_basis(&F2Matrix::zeros(2, 3)).len(), 3);
        let k = kernel_basis(&F2Matrix::from_rows(&[[1, 1]]));
        assert_eq!(k, vec![BitVec::from_bits(&[true, true])]);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let n = 150;
        let mut m = F2Matrix::zeros(2, n);
        m.set(0, 3, true);
        m.set(0, 140, true);
        m.set(1, 140, true);
        assert_eq!(rank(&m), 2);
        assert_eq!(kernel_basis(&m).len(), n - 2);
        assert_eq!(m.row(0).ones().collect::<Vec<_>>(), vec![3, 140]);
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(BitVec::from_bits(&[true, true, false])));
        assert!(e.insert(BitVec::from_bits(&[false, true, true])));
        assert!(!e.insert(BitVec::from_bits(&[true, false, true])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&BitVec::from_bits(&[true, false, true])));
        assert!(!e.contains(&BitVec::from_bits(&[true, false, false])));
    }

    fn arb_matrix() -> impl Strategy<Value = F2Matrix> {
        (0usize..9, 0usize..9).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, c), r).prop_map(
                move |rows| {
                    let mut m = F2Matrix::zeros(r, c);
                    for (i, row) in rows.iter().enumerate() {
                        for (j, &x) in row.iter().enumerate() {
                            m.set(i, j, x == 1);
                        }
                    }
                    m
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.len(), m.cols());
            prop_assert!(rank(&m) <= m.rows().min(m.cols()));
            for v in &k {
                prop_assert!(m.mul_vec(v).is_zero());
            }
        }

        #[test]
        fn rank_of_transpose(m in arb_matrix()) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn rank_invariant_under_permutations(m in arb_matrix(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut rp: Vec<usize> = (0..m.rows()).collect();
            let mut cp: Vec<usize> = (0..m.cols()).collect();
            rp.shuffle(&mut rng);
            cp.shuffle(&mut rng);
            let mut p = F2Matrix::zeros(m.rows(), m.cols());
            for (i, &r) in rp.iter().enumerate() {
                for (j, &c) in cp.iter().enumerate() {
                    p.set(i, j, m.get(r, c));
                }
            }
            prop_assert_eq!(rank(&m), rank(&p));
        }
    }
}
