use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Dense matrix over exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows
                .iter()
                .flatten()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        }
    }

    /// Entries drawn uniformly from `-bound..=bound`.
    pub fn random<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Self {
        QMatrix {
            rows,
            cols,
            data: (0..rows * cols)
                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                .collect(),
        }
    }

    /// Random invertible matrix, by rejection.
    pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Self {
        loop {
            let m = Self::random(rng, n, n, bound);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shapes differ");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// `[self | rhs]`.
    pub fn hconcat(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, rhs.rows, "row counts differ");
        let cols = self.cols + rhs.cols;
        let mut out = QMatrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    /// Copy `block` into position `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &QMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    /// Row echelon form by Gaussian elimination; returns the rank.
    fn eliminate(&mut self, augment: Option<&mut QMatrix>) -> usize {
        let mut aug = augment;
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(rank, p);
            if let Some(a) = aug.as_deref_mut() {
                a.swap_rows(rank, p);
            }
            let inv = self.get(rank, col).recip();
            self.scale_row(rank, &inv);
            if let Some(a) = aug.as_deref_mut() {
                a.scale_row(rank, &inv);
            }
            for r in 0..self.rows {
                if r != rank && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    self.sub_row(r, rank, &f);
                    if let Some(a) = aug.as_deref_mut() {
                        a.sub_row(r, rank, &f);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &BigRational) {
        for j in 0..self.cols {
            let v = self.get(r, j) * c;
            self.set(r, j, v);
        }
    }

    /// `row[r] -= f * row[src]`.
    fn sub_row(&mut self, r: usize, src: usize, f: &BigRational) {
        for j in 0..self.cols {
            let v = self.get(r, j) - f * self.get(src, j);
            self.set(r, j, v);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(None)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let mut m = self.clone();
        let mut inv = QMatrix::identity(self.rows);
        (m.eliminate(Some(&mut inv)) == self.rows).then_some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn rank_and_inverse() {
        let a = QMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(a.rank(), 1);
        assert!(a.inverse().is_none());
        let b = QMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(b.mul(&b.inverse().unwrap()), QMatrix::identity(2));
        assert_eq!(QMatrix::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn random_inverses() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 1..5 {
            let g = QMatrix::random_invertible(&mut rng, n, 3);
            let gi = g.inverse().unwrap();
            assert_eq!(gi.mul(&g), QMatrix::identity(n));
        }
    }

    #[test]
    fn trace_of_product_is_symmetric() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let a = QMatrix::random(&mut rng, 3, 2, 4);
        let b = QMatrix::random(&mut rng, 2, 3, 4);
        assert_eq!(a.mul(&b).trace(), b.mul(&a).trace());
    }

    #[test]
    fn concatenation_rank() {
        let b2 = QMatrix::from_rows(&[vec![1], vec![0]]);
        let iota = QMatrix::from_rows(&[vec![0], vec![1]]);
        assert_eq!(iota.hconcat(&b2).rank(), 2);
        assert_eq!(b2.hconcat(&b2).rank(), 1);
    }
}
