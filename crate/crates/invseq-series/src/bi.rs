use num::{BigInt, BigRational, One, Zero};

use crate::uni::TruncatedSeries1;
use crate::{rat, SeriesError};

/// Bivariate power series truncated to the rectangle of coefficients of
/// `x^i y^j` with `i <= nx` and `j <= ny`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries2 {
    grid: Vec<Vec<BigRational>>,
}

fn row_is_zero(row: &[BigRational]) -> bool {
    row.iter().all(|c| c.is_zero())
}

/// Product in the ring of y-polynomials truncated to the length of `a`.
fn ymul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let w = a.len();
    let mut out = vec![BigRational::zero(); w];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().take(w - i).enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Inverse in the truncated y-polynomial ring; `b[0]` must be nonzero.
fn yinv(b: &[BigRational]) -> Vec<BigRational> {
    let w = b.len();
    let mut inv = vec![BigRational::zero(); w];
    inv[0] = &BigRational::one() / &b[0];
    for i in 1..w {
        let mut acc = BigRational::zero();
        for (j, ij) in inv.iter().enumerate().take(i) {
            if !ij.is_zero() && !b[i - j].is_zero() {
                acc += ij * &b[i - j];
            }
        }
        inv[i] = -(acc / &b[0]);
    }
    inv
}

impl TruncatedSeries2 {
    pub fn from_rational_grid(grid: Vec<Vec<BigRational>>) -> Self {
        assert!(!grid.is_empty() && !grid[0].is_empty(), "the grid holds at least one cell");
        let width = grid[0].len();
        assert!(grid.iter().all(|row| row.len() == width), "the grid must be rectangular");
        Self { grid }
    }

    pub fn zero(nx: usize, ny: usize) -> Self {
        Self { grid: vec![vec![BigRational::zero(); ny + 1]; nx + 1] }
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        s.grid[0][0] = BigRational::one();
        s
    }

    /// The polynomial with the given `(x power, y power, coefficient)` terms.
    pub fn from_int_poly2(terms: &[(usize, usize, i64)], nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        for &(i, j, c) in terms {
            assert!(i <= nx && j <= ny, "polynomial exceeds the truncation orders");
            s.grid[i][j] += rat(c);
        }
        s
    }

    pub fn nx(&self) -> usize {
        self.grid.len() - 1
    }

    pub fn ny(&self) -> usize {
        self.grid[0].len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.grid[i][j]
    }

    pub fn truncate(&self, nx: usize, ny: usize) -> Self {
        assert!(nx <= self.nx() && ny <= self.ny(), "truncation cannot extend a series");
        let grid = self.grid[..=nx]
            .iter()
            .map(|row| row[..=ny].to_vec())
            .collect();
        Self { grid }
    }

    fn assert_same_shape(&self, rhs: &Self) {
        assert_eq!(self.nx(), rhs.nx(), "series x-orders must match");
        assert_eq!(self.ny(), rhs.ny(), "series y-orders must match");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_shape(rhs);
        let grid = self
            .grid
            .iter()
            .zip(&rhs.grid)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        Self { grid }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_shape(rhs);
        let grid = self
            .grid
            .iter()
            .zip(&rhs.grid)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a - b).collect())
            .collect();
        Self { grid }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let grid = self
            .grid
            .iter()
            .map(|row| row.iter().map(|a| a * c).collect())
            .collect();
        Self { grid }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_shape(rhs);
        let (nx, ny) = (self.nx(), self.ny());
        let mut grid = vec![vec![BigRational::zero(); ny + 1]; nx + 1];
        for (i, lrow) in self.grid.iter().enumerate() {
            if row_is_zero(lrow) {
                continue;
            }
            for (k, rrow) in rhs.grid.iter().take(nx + 1 - i).enumerate() {
                if row_is_zero(rrow) {
                    continue;
                }
                let out = &mut grid[i + k];
                for (j, a) in lrow.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (l, b) in rrow.iter().take(ny + 1 - j).enumerate() {
                        if !b.is_zero() {
                            out[j + l] += a * b;
                        }
                    }
                }
            }
        }
        Self { grid }
    }

    /// Division solved row by row in x; the divisor's order-zero row must be
    /// a unit, that is have a nonzero constant term.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.assert_same_shape(rhs);
        if rhs.grid[0][0].is_zero() {
            return Err(SeriesError::NonUnitDivisor);
        }
        let inv0 = yinv(&rhs.grid[0]);
        let nx = self.nx();
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(nx + 1);
        for i in 0..=nx {
            let mut acc = self.grid[i].clone();
            for (k, qk) in rows.iter().enumerate() {
                if row_is_zero(qk) || row_is_zero(&rhs.grid[i - k]) {
                    continue;
                }
                for (a, p) in acc.iter_mut().zip(ymul(qk, &rhs.grid[i - k])) {
                    *a -= p;
                }
            }
            rows.push(ymul(&acc, &inv0));
        }
        Ok(Self { grid: rows })
    }

    /// Square root expanded in x over the truncated y-polynomial ring.
    /// `root0` must square to the order-zero row and have a nonzero constant
    /// term; it fixes the branch.
    pub fn sqrt_in_x(&self, root0: &[BigRational]) -> Result<Self, SeriesError> {
        let (nx, ny) = (self.nx(), self.ny());
        assert_eq!(root0.len(), ny + 1, "the root must span the full y window");
        if root0[0].is_zero() {
            return Err(SeriesError::NonUnitDivisor);
        }
        if ymul(root0, root0) != self.grid[0] {
            return Err(SeriesError::SqrtRootMismatch);
        }
        let doubled: Vec<BigRational> = root0.iter().map(|c| c + c).collect();
        let inv = yinv(&doubled);
        let mut rows: Vec<Vec<BigRational>> = vec![root0.to_vec()];
        for i in 1..=nx {
            let mut acc = self.grid[i].clone();
            for k in 1..i {
                let prod = ymul(&rows[k], &rows[i - k]);
                for (a, p) in acc.iter_mut().zip(prod) {
                    *a -= p;
                }
            }
            rows.push(ymul(&acc, &inv));
        }
        Ok(Self { grid: rows })
    }

    /// The operator x d/dx, exact on the whole grid.
    pub fn x_deriv_x(&self) -> Self {
        let grid = self
            .grid
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|c| c * rat(i as i64)).collect())
            .collect();
        Self { grid }
    }

    /// The operator y d/dy, exact on the whole grid.
    pub fn y_deriv_y(&self) -> Self {
        let grid = self
            .grid
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, c)| c * rat(j as i64))
                    .collect()
            })
            .collect();
        Self { grid }
    }

    /// The derivative in y; the result loses one y-order.
    pub fn deriv_y(&self) -> Self {
        assert!(self.ny() >= 1, "derivative would retain no coefficients");
        let grid = self
            .grid
            .iter()
            .map(|row| {
                (1..row.len())
                    .map(|j| &row[j] * rat(j as i64))
                    .collect()
            })
            .collect();
        Self { grid }
    }

    /// Row sums: the substitution y = 1. Exact only when every retained
    /// x-order has its full y-support inside the grid.
    pub fn eval_y_one(&self) -> TruncatedSeries1 {
        let coeffs = self
            .grid
            .iter()
            .map(|row| row.iter().fold(BigRational::zero(), |acc, c| acc + c))
            .collect();
        TruncatedSeries1::from_rationals(coeffs)
    }

    /// The substitution y = g(x), by a Horner pass over y-columns. Exact
    /// under the same full-y-support condition as `eval_y_one`.
    pub fn subst_y(&self, g: &TruncatedSeries1) -> TruncatedSeries1 {
        assert_eq!(g.order(), self.nx(), "the substituted series must match the x-order");
        let col = |j: usize| {
            TruncatedSeries1::from_rationals(
                self.grid.iter().map(|row| row[j].clone()).collect(),
            )
        };
        let mut acc = col(self.ny());
        for j in (0..self.ny()).rev() {
            acc = acc.mul(g).add(&col(j));
        }
        acc
    }

    /// A univariate series in x viewed on a grid, with y-degree zero.
    pub fn embed_x(u: &TruncatedSeries1, ny: usize) -> Self {
        let mut s = Self::zero(u.order(), ny);
        for (i, c) in u.coeffs().iter().enumerate() {
            s.grid[i][0] = c.clone();
        }
        s
    }

    /// The substitution x = xy applied to a univariate series: coefficients
    /// move to the diagonal.
    pub fn embed_diag(u: &TruncatedSeries1, nx: usize, ny: usize) -> Self {
        let diag = nx.min(ny);
        assert!(u.order() >= diag, "the series must cover the whole diagonal");
        let mut s = Self::zero(nx, ny);
        for n in 0..=diag {
            s.grid[n][n] = u.coeff(n).clone();
        }
        s
    }

    /// Exact division by `x^k`; the result loses `k` x-orders.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.nx(), "quotient would retain no coefficients");
        if self.grid[..k].iter().any(|row| !row_is_zero(row)) {
            return Err(SeriesError::NotDivisible { factor: format!("x^{k}") });
        }
        Ok(Self { grid: self.grid[k..].to_vec() })
    }

    /// Exact division by `y^k`; the result loses `k` y-orders.
    pub fn div_y_pow(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.ny(), "quotient would retain no coefficients");
        if self.grid.iter().any(|row| row[..k].iter().any(|c| !c.is_zero())) {
            return Err(SeriesError::NotDivisible { factor: format!("y^{k}") });
        }
        let grid = self.grid.iter().map(|row| row[k..].to_vec()).collect();
        Ok(Self { grid })
    }

    /// All coefficients as integers, or None if any is fractional.
    pub fn integer_grid(&self) -> Option<Vec<Vec<BigInt>>> {
        self.grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.is_integer().then(|| c.to_integer()))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> i64 {
        if k > n {
            return 0;
        }
        let mut res = 1i64;
        for i in 0..k.min(n - k) {
            res = res * (n - i) as i64 / (i + 1) as i64;
        }
        res
    }

    #[test]
    fn geometric_in_two_variables_has_binomial_coefficients() {
        let d = TruncatedSeries2::from_int_poly2(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)], 6, 6);
        let g = TruncatedSeries2::one(6, 6).div(&d).unwrap();
        for i in 0..=6 {
            for j in 0..=6 {
                assert_eq!(*g.coeff(i, j), rat(binom(i + j, i)));
            }
        }
    }

    #[test]
    fn division_undoes_multiplication() {
        let s = TruncatedSeries2::from_int_poly2(&[(0, 0, 1), (1, 1, 2), (0, 2, -1)], 5, 5);
        let t = TruncatedSeries2::from_int_poly2(&[(0, 0, 3), (1, 0, 1), (2, 1, 5)], 5, 5);
        assert_eq!(s.mul(&t).div(&t).unwrap(), s);
    }

    #[test]
    fn division_by_a_nonunit_fails() {
        let y = TruncatedSeries2::from_int_poly2(&[(0, 1, 1)], 3, 3);
        assert_eq!(
            TruncatedSeries2::one(3, 3).div(&y),
            Err(SeriesError::NonUnitDivisor)
        );
    }

    #[test]
    fn sqrt_in_x_splits_a_product_radicand() {
        // (1-y)^2 (1-4x) has the x-free root 1-y times sqrt(1-4x).
        let radicand = TruncatedSeries2::from_int_poly2(
            &[(0, 0, 1), (0, 1, -2), (0, 2, 1), (1, 0, -4), (1, 1, 8), (1, 2, -4)],
            5,
            5,
        );
        let mut root0 = vec![BigRational::zero(); 6];
        root0[0] = rat(1);
        root0[1] = rat(-1);
        let s = radicand.sqrt_in_x(&root0).unwrap();
        let uni_root = TruncatedSeries1::from_int_poly(&[1, -4], 5).sqrt().unwrap();
        let expected = TruncatedSeries2::embed_x(&uni_root, 5)
            .mul(&TruncatedSeries2::from_int_poly2(&[(0, 0, 1), (0, 1, -1)], 5, 5));
        assert_eq!(s, expected);
        assert_eq!(s.mul(&s), radicand);
    }

    #[test]
    fn sqrt_in_x_rejects_a_wrong_root() {
        let radicand =
            TruncatedSeries2::from_int_poly2(&[(0, 0, 1), (0, 1, -2), (0, 2, 1)], 2, 2);
        let root0 = vec![rat(1), rat(1), rat(0)];
        assert_eq!(
            radicand.sqrt_in_x(&root0),
            Err(SeriesError::SqrtRootMismatch)
        );
    }

    #[test]
    fn monomial_divisions_check_support() {
        let s = TruncatedSeries2::from_int_poly2(&[(1, 1, 2), (2, 1, 3)], 3, 3);
        let t = s.div_x_pow(1).unwrap().div_y_pow(1).unwrap();
        assert_eq!(*t.coeff(0, 0), rat(2));
        assert_eq!(*t.coeff(1, 0), rat(3));
        assert_eq!(
            s.div_x_pow(2),
            Err(SeriesError::NotDivisible { factor: "x^2".into() })
        );
        assert_eq!(
            s.div_y_pow(2),
            Err(SeriesError::NotDivisible { factor: "y^2".into() })
        );
    }

    #[test]
    fn derivative_operators_match_by_hand_values() {
        // s = x^2 y + 3 x y^3
        let s = TruncatedSeries2::from_int_poly2(&[(2, 1, 1), (1, 3, 3)], 3, 3);
        assert_eq!(
            s.x_deriv_x(),
            TruncatedSeries2::from_int_poly2(&[(2, 1, 2), (1, 3, 3)], 3, 3)
        );
        assert_eq!(
            s.y_deriv_y(),
            TruncatedSeries2::from_int_poly2(&[(2, 1, 1), (1, 3, 9)], 3, 3)
        );
        assert_eq!(
            s.deriv_y(),
            TruncatedSeries2::from_int_poly2(&[(2, 0, 1), (1, 2, 9)], 3, 2)
        );
    }

    #[test]
    fn substitutions_agree_with_direct_evaluation() {
        // s = 1 + x y^2
        let s = TruncatedSeries2::from_int_poly2(&[(0, 0, 1), (1, 2, 1)], 4, 4);
        assert_eq!(s.eval_y_one(), TruncatedSeries1::from_int_poly(&[1, 1], 4));
        let g = TruncatedSeries1::one(4)
            .div(&TruncatedSeries1::from_int_poly(&[1, -1], 4))
            .unwrap();
        // s(x, 1/(1-x)) = 1 + x/(1-x)^2
        let expected = TruncatedSeries1::one(4)
            .add(&g.mul(&g).mul(&TruncatedSeries1::from_int_poly(&[0, 1], 4)));
        assert_eq!(s.subst_y(&g), expected);
    }

    #[test]
    fn diagonal_embedding_places_coefficients() {
        let cat = TruncatedSeries1::from_int_poly(&[1, 1, 2, 5], 3);
        let d = TruncatedSeries2::embed_diag(&cat, 3, 5);
        assert_eq!(*d.coeff(2, 2), rat(2));
        assert_eq!(*d.coeff(3, 3), rat(5));
        assert_eq!(*d.coeff(2, 3), rat(0));
    }
}
