//! Dense linear algebra over GF(2): rank, right kernel and affine solving with
//! an inconsistency certificate.

/// Packed bit vector of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
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

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Row-major bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// Outcome of [`BitMatrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// `x` with `A x = b`.
    Consistent(BitVec),
    /// Row subset whose left-hand sides cancel while the right-hand sides sum to 1.
    Inconsistent(BitVec),
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        Self { cols, rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
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

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols);
        let mut out = BitVec::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let parity: u32 = row
                .words
                .iter()
                .zip(&v.words)
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            out.set(i, parity % 2 == 1);
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns. `track`
    /// receives the same row operations.
    fn reduce(&mut self, mut track: Option<&mut Vec<BitVec>>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| self.rows[i].get(c)) else {
                continue;
            };
            self.rows.swap(r, p);
            if let Some(t) = track.as_deref_mut() {
                t.swap(r, p);
            }
            for i in 0..self.rows.len() {
                if i != r && self.rows[i].get(c) {
                    let pivot_row = self.rows[r].clone();
                    self.rows[i].xor_assign(&pivot_row);
                    if let Some(t) = track.as_deref_mut() {
                        let pivot_track = t[r].clone();
                        t[i].xor_assign(&pivot_track);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce(None).len()
    }

    /// Basis of `{ v : A v = 0 }`, one vector per free column in increasing order.
    pub fn kernel(&self) -> Vec<BitVec> {
        let mut m = self.clone();
        let pivots = m.reduce(None);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::zeros(self.cols);
                v.set(free, true);
                for (row, &p) in pivots.iter().enumerate() {
                    if m.rows[row].get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Solves `A x = rhs`, setting free variables to zero.
    pub fn solve(&self, rhs: &BitVec) -> Solution {
        assert_eq!(rhs.len(), self.rows.len());
        let n = self.rows.len();
        // augmented column sits at index `cols`
        let mut aug = BitMatrix::zeros(n, self.cols + 1);
        for i in 0..n {
            for c in self.rows[i].ones() {
                aug.set(i, c, true);
            }
            aug.set(i, self.cols, rhs.get(i));
        }
        let mut track: Vec<BitVec> = (0..n)
            .map(|i| {
                let mut t = BitVec::zeros(n);
                t.set(i, true);
                t
            })
            .collect();
        let pivots = aug.reduce(Some(&mut track));
        if let Some(row) = pivots.iter().position(|&p| p == self.cols) {
            return Solution::Inconsistent(track[row].clone());
        }
        let mut x = BitVec::zeros(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            if aug.get(row, self.cols) {
                x.set(p, true);
            }
        }
        Solution::Consistent(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&str]) -> BitMatrix {
        let cols = rows[0].len();
        BitMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| {
                    let mut v = BitVec::zeros(cols);
                    for (i, ch) in r.chars().enumerate() {
                        v.set(i, ch == '1');
                    }
                    v
                })
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel_small() {
        let m = matrix(&["110", "011", "101"]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).is_zero());
        assert_eq!(k[0].count_ones(), 3);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let m = BitMatrix::zeros(2, 70);
        assert_eq!(m.kernel().len(), 70);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn solve_consistent() {
        let m = matrix(&["110", "011"]);
        let mut b = BitVec::zeros(2);
        b.set(0, true);
        match m.solve(&b) {
            Solution::Consistent(x) => assert_eq!(m.mul_vec(&x), b),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solve_inconsistent_gives_certificate() {
        let m = matrix(&["110", "011", "101"]);
        let mut b = BitVec::zeros(3);
        b.set(2, true);
        match m.solve(&b) {
            Solution::Inconsistent(cert) => {
                let mut lhs = BitVec::zeros(3);
                let mut rhs = false;
                for r in cert.ones() {
                    lhs.xor_assign(m.row(r));
                    rhs ^= b.get(r);
                }
                assert!(lhs.is_zero());
                assert!(rhs);
            }
            other => panic!("{other:?}"),
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rank_nullity(bits in proptest::collection::vec(any::<bool>(), 8 * 12)) {
                let mut m = BitMatrix::zeros(8, 12);
                for (i, b) in bits.iter().enumerate() {
                    m.set(i / 12, i % 12, *b);
                }
                let kernel = m.kernel();
                prop_assert_eq!(m.rank() + kernel.len(), 12);
                for v in &kernel {
                    prop_assert!(m.mul_vec(v).is_zero());
                }
            }

            #[test]
            fn solve_is_sound(bits in proptest::collection::vec(any::<bool>(), 6 * 5), rhs in proptest::collection::vec(any::<bool>(), 6)) {
                let mut m = BitMatrix::zeros(6, 5);
                for (i, b) in bits.iter().enumerate() {
                    m.set(i / 5, i % 5, *b);
                }
                let mut b = BitVec::zeros(6);
                for (i, v) in rhs.iter().enumerate() {
                    b.set(i, *v);
                }
                match m.solve(&b) {
                    Solution::Consistent(x) => prop_assert_eq!(m.mul_vec(&x), b),
                    Solution::Inconsistent(cert) => {
                        let mut lhs = BitVec::zeros(5);
                        let mut parity = false;
                        for r in cert.ones() {
                            lhs.xor_assign(m.row(r));
                            parity ^= b.get(r);
                        }
                        prop_assert!(lhs.is_zero() && parity);
                    }
                }
            }
        }
    }
}
