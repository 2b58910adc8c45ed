use std::fmt;
use std::ops::{Index, IndexMut, Mul, Sub};

use num_traits::{One, Zero};

use super::{fmt_rational, rat, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rat(rows[i][j]))
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows));
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Submatrix picking the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: &Rational) -> Self {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] -= lambda;
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn column_sums(&self) -> Vec<Rational> {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(Rational::zero(), |acc, i| acc + &self[(i, j)]))
            .collect()
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Determinant by elimination; `None` for non-square input.
    pub fn determinant(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Some(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] / &pivot;
                for c in col..n {
                    let delta = &f * &m[(col, c)];
                    m[(r, c)] -= delta;
                }
            }
        }
        Some(det)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;

    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(fmt_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form.
///
/// Columns are scanned left to right; the pivot for a column is the first
/// remaining row (smallest index) with a non-zero entry. Pivot columns are
/// therefore a deterministic function of the input.
pub fn rref(m: &RatMatrix) -> Rref {
    let mut r = m.clone();
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..r.cols {
        if next_row == r.rows {
            break;
        }
        let Some(p) = (next_row..r.rows).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        r.swap_rows(p, next_row);
        let inv = r[(next_row, col)].recip();
        for c in col..r.cols {
            if !r[(next_row, c)].is_zero() {
                r[(next_row, c)] *= &inv;
            }
        }
        for i in 0..r.rows {
            if i == next_row || r[(i, col)].is_zero() {
                continue;
            }
            let f = r[(i, col)].clone();
            for c in col..r.cols {
                if r[(next_row, c)].is_zero() {
                    continue;
                }
                let delta = &f * &r[(next_row, c)];
                r[(i, c)] -= delta;
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    let rank = pivots.len();
    Rref {
        matrix: r,
        pivot_columns: pivots,
        rank,
    }
}

/// Exact inverse by Gauss-Jordan elimination on `[M | I]`.
pub fn invert(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::InvalidInput(format!(
            "cannot invert a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let reduced = rref(&aug);
    if reduced.pivot_columns.iter().take_while(|&&c| c < n).count() < n {
        return Err(Error::Singular);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(reduced.matrix.select(&rows, &cols))
}

/// Basis of the right null space `{v : M v = 0}`, one vector per free column
/// of the reduced row echelon form.
pub fn nullspace_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let Rref {
        matrix: r,
        pivot_columns,
        ..
    } = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivot_columns {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivot_columns.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::frac;
    use proptest::prelude::*;

    fn c_bar_g() -> RatMatrix {
        // adjacency of {g1..g5}
        RatMatrix::from_i64_rows(&[
            &[0, 1, 0, 0, 0],
            &[1, 0, 1, 0, 0],
            &[0, 1, 0, 1, 1],
            &[0, 0, 1, 0, 1],
            &[0, 0, 1, 1, 0],
        ])
    }

    #[test]
    fn rref_trivial_cases() {
        let id = RatMatrix::identity(2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivot_columns, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = RatMatrix::zeros(3, 3);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert!(r.pivot_columns.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_of_known_body() {
        let body = RatMatrix::from_i64_rows(&[&[1, -1], &[0, 0], &[0, 1], &[1, 0], &[0, 0]]);
        assert_eq!(rref(&body).rank, 2);
    }

    #[test]
    fn invert_known_inverse() {
        let h = frac(1, 2);
        let mh = frac(-1, 2);
        let one = rat(1);
        let zero = rat(0);
        let expected = [
            [&mh, &one, &h, &mh, &mh],
            [&one, &zero, &zero, &zero, &zero],
            [&h, &zero, &mh, &h, &h],
            [&mh, &zero, &h, &mh, &h],
            [&mh, &zero, &h, &h, &mh],
        ];
        let inv = invert(&c_bar_g()).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(&inv[(i, j)], expected[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn invert_identity_and_singular() {
        assert_eq!(invert(&RatMatrix::identity(4)).unwrap(), RatMatrix::identity(4));
        assert_eq!(invert(&RatMatrix::zeros(1, 1)), Err(Error::Singular));
        assert_eq!(invert(&RatMatrix::zeros(0, 0)).unwrap(), RatMatrix::zeros(0, 0));
    }

    #[test]
    fn nullspace_trivial_cases() {
        assert!(nullspace_basis(&RatMatrix::identity(3)).is_empty());
        let basis = nullspace_basis(&RatMatrix::zeros(2, 2));
        assert_eq!(basis, vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]);
    }

    #[test]
    fn determinant_matches_singularity() {
        assert_eq!(c_bar_g().determinant().unwrap(), rat(-2));
        let sing = RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.determinant().unwrap(), rat(0));
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = RatMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                RatMatrix::from_fn(r, c, |i, j| rat(v[i * c + j]))
            })
        })
    }

    fn square_matrix(max_dim: usize) -> impl Strategy<Value = RatMatrix> {
        (1..=max_dim).prop_flat_map(|n| {
            prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| RatMatrix::from_fn(n, n, |i, j| rat(v[i * n + j])))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(6)) {
            let basis = nullspace_basis(&m);
            prop_assert_eq!(m.rank() + basis.len(), m.cols());
            for v in &basis {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            let cols = RatMatrix::from_columns(m.cols(), &basis);
            prop_assert_eq!(cols.rank(), basis.len());
        }

        #[test]
        fn rref_idempotent(m in small_matrix(6)) {
            let once = rref(&m);
            let twice = rref(&once.matrix);
            prop_assert_eq!(&once.matrix, &twice.matrix);
            prop_assert_eq!(once.pivot_columns, twice.pivot_columns);
        }

        #[test]
        fn inverse_is_two_sided(m in square_matrix(5)) {
            match invert(&m) {
                Ok(inv) => {
                    prop_assert_eq!(&inv * &m, RatMatrix::identity(m.rows()));
                    prop_assert_eq!(&m * &inv, RatMatrix::identity(m.rows()));
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::Singular);
                    prop_assert!(m.determinant().unwrap().is_zero());
                }
            }
        }
    }
}
