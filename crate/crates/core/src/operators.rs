//! Constant-coefficient band matrices and their finite sections.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectrumError};
use crate::scalar::ComplexScalar;
use crate::sequences::TruncatedSequence;

/// Infinite Toeplitz band matrix: `entry(n, k)` is the coefficient stored at
/// offset `k − n`, or zero.
///
/// Offset `0` is the main diagonal, `−1` the subdiagonal and `+1` the
/// superdiagonal. Exact zero coefficients are never stored, so two operators
/// compare equal iff they have the same entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandedOperator {
    diagonals: BTreeMap<i64, ComplexScalar>,
}

impl BandedOperator {
    /// Fails on an operator with no nonzero coefficient.
    pub fn new(diagonals: impl IntoIterator<Item = (i64, ComplexScalar)>) -> Result<Self> {
        let op = Self::from_map(diagonals.into_iter().collect());
        if op.diagonals.is_empty() {
            return Err(SpectrumError::InvalidArgument(
                "banded operator needs at least one nonzero coefficient".into(),
            ));
        }
        Ok(op)
    }

    pub fn identity() -> Self {
        Self::from_map(BTreeMap::from([(0, ComplexScalar::ONE)]))
    }

    fn from_map(mut diagonals: BTreeMap<i64, ComplexScalar>) -> Self {
        diagonals.retain(|_, c| !c.is_zero());
        Self { diagonals }
    }

    pub fn coefficient(&self, offset: i64) -> ComplexScalar {
        self.diagonals.get(&offset).copied().unwrap_or(ComplexScalar::ZERO)
    }

    pub fn entry(&self, row: usize, col: usize) -> ComplexScalar {
        self.coefficient(col as i64 - row as i64)
    }

    /// Stored offsets with their coefficients, in increasing offset order.
    pub fn diagonals(&self) -> impl Iterator<Item = (i64, ComplexScalar)> + '_ {
        self.diagonals.iter().map(|(&o, &c)| (o, c))
    }

    pub fn is_zero(&self) -> bool {
        self.diagonals.is_empty()
    }

    /// `self − αI`. Shifting a pure multiple of the identity by its own diagonal
    /// yields the zero operator.
    pub fn shifted(&self, alpha: ComplexScalar) -> Self {
        let mut diagonals = self.diagonals.clone();
        let main = self.coefficient(0) - alpha;
        diagonals.insert(0, main);
        Self::from_map(diagonals)
    }

    pub fn transpose(&self) -> Self {
        Self { diagonals: self.diagonals.iter().map(|(&o, &c)| (-o, c)).collect() }
    }

    /// `y_n = Σ_o c_o·x_{n+o}` with indices outside the prefix reading as zero.
    /// The output keeps the input length.
    pub fn apply(&self, x: &TruncatedSequence) -> TruncatedSequence {
        let xs = x.as_slice();
        let n = xs.len() as i64;
        let ys = (0..n)
            .map(|row| {
                self.diagonals
                    .iter()
                    .filter_map(|(&o, c)| {
                        let col = row + o;
                        (0..n).contains(&col).then(|| c.value() * xs[col as usize])
                    })
                    .sum::<Complex64>()
            })
            .collect();
        TruncatedSequence::new(ys).expect("product of finite values overflowed")
    }

    /// Leading `n × n` principal block.
    pub fn truncate_dense(&self, n: usize) -> Result<DenseMatrix> {
        if n == 0 {
            return Err(SpectrumError::EmptyInput("finite section of size 0"));
        }
        let mut m = DenseMatrix::zeros(n);
        for row in 0..n {
            for (&o, c) in &self.diagonals {
                let col = row as i64 + o;
                if (0..n as i64).contains(&col) {
                    m[(row, col as usize)] = c.value();
                }
            }
        }
        Ok(m)
    }
}

/// The forward difference `(Δx)_k = x_k − x_{k+1}`: `1` on the diagonal, `−1` above.
pub fn forward_difference() -> BandedOperator {
    BandedOperator::from_map(BTreeMap::from([(0, ComplexScalar::ONE), (1, -ComplexScalar::ONE)]))
}

/// `x_n − x_{n−1}`: `1` on the diagonal, `−1` below. This is the matrix the
/// spectral results are stated for.
pub fn backward_difference() -> BandedOperator {
    forward_difference().transpose()
}

/// Square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SpectrumError::InvalidArgument("rows must form a square matrix".into()));
        }
        Ok(Self { n, data: rows.concat() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        (0..self.n).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// Entrywise modulus, used for componentwise error scales `|A|·|B|`.
    pub fn abs(&self) -> Self {
        Self { n: self.n, data: self.data.iter().map(|z| Complex64::new(z.norm(), 0.0)).collect() }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}
