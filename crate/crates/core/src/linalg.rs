//! Dense exact matrices and fraction-free elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use sepdeform_scalar::{Domain, Field, FractionField, Ring};
use serde::Serialize;

use crate::error::{CoreError, Result};

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(CoreError::InvalidInput("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// The matrix sending basis vector `j` to basis vector `images[j]`.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in images.iter().enumerate() {
            m[(i, j)] = R::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(CoreError::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)].add_assign_ref(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; the left factor indexes the most significant digit.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a.mul(&other[(k, l)]);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl FnMut(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, E>>()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &R)> {
        self.data.iter().enumerate().map(|(k, x)| ((k / self.cols, k % self.cols), x))
    }
}

impl<F: Field> Matrix<F> {
    /// Gauss-Jordan inverse over a field.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pinv = a[(col, col)].inv()?;
            for j in 0..n {
                a[(col, j)] = a[(col, j)].mul(&pinv);
                inv[(col, j)] = inv[(col, j)].mul(&pinv);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let (x, y) = (a[(col, j)].mul(&f), inv[(col, j)].mul(&f));
                    a[(r, j)].sub_assign_ref(&x);
                    inv[(r, j)].sub_assign_ref(&y);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A fraction-free row echelon form: the entries of pivot row `k` are
/// `k+1`-minors of the input, so every division performed is exact.
#[derive(Debug, Clone)]
pub struct Echelon<D> {
    pub rows: Vec<Vec<D>>,
    /// `(row, column)` of each pivot, columns strictly increasing.
    pub pivots: Vec<(usize, usize)>,
}

/// Bareiss elimination with leftmost pivots.  Among candidate pivot rows
/// the one with the smallest entry (by `size_hint`) is chosen.
pub fn bareiss_echelon<D: Domain>(mut rows: Vec<Vec<D>>, cols: usize) -> Echelon<D> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut prev = D::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| (rows[i][col].size_hint(), i));
        let Some(best) = best else { continue };
        rows.swap(r, best);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let p = pivot_row[col].clone();
        let neg_prev = prev.neg();
        for row in tail.iter_mut() {
            let factor = std::mem::replace(&mut row[col], D::zero());
            if factor.is_zero() {
                if p == prev {
                    continue;
                }
                if p == neg_prev {
                    for x in row[col + 1..].iter_mut() {
                        *x = x.neg();
                    }
                    continue;
                }
            }
            for j in col + 1..cols {
                let a = &row[j];
                let b = &pivot_row[j];
                let mut v = if a.is_zero() { D::zero() } else { p.mul(a) };
                if !factor.is_zero() && !b.is_zero() {
                    v.sub_assign_ref(&factor.mul(b));
                }
                row[j] = if v.is_zero() || prev.is_one() {
                    v
                } else {
                    v.exact_div(&prev).expect("Bareiss division is exact")
                };
            }
        }
        let tail = rows.split_off(r + 1);
        rows.extend(tail.into_iter().filter(|row| row.iter().any(|x| !x.is_zero())));
        pivots.push((r, col));
        prev = p;
        r += 1;
    }
    Echelon { rows, pivots }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution<F> {
    /// The particular solution with every free unknown set to zero.
    Consistent { values: Vec<F>, free: Vec<usize> },
    Inconsistent,
}

fn to_domain_rows<F: FractionField>(rows: &[Vec<F>]) -> Vec<Vec<F::Domain>> {
    rows.iter()
        .map(|row| {
            let den = F::common_denominator(row);
            row.iter()
                .map(|x| {
                    if x.is_zero() {
                        F::Domain::zero()
                    } else {
                        let scale = den.exact_div(&x.denominator()).expect("common denominator");
                        x.numerator().mul(&scale)
                    }
                })
                .collect()
        })
        .collect()
}

fn back_substitute<F: FractionField>(ech: &Echelon<F::Domain>, n: usize, fixed: &[(usize, F)], rhs: Option<usize>) -> Vec<F> {
    let mut x = vec![F::zero(); n];
    for (c, v) in fixed {
        x[*c] = v.clone();
    }
    for &(r, c) in ech.pivots.iter().rev() {
        let row = &ech.rows[r];
        let mut acc = match rhs {
            Some(k) => F::from_domain(&row[k]),
            None => F::zero(),
        };
        for j in c + 1..n {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc.sub_assign_ref(&F::from_domain(&row[j]).mul(&x[j]));
            }
        }
        x[c] = acc.div(&F::from_domain(&row[c])).expect("nonzero pivot");
    }
    x
}

/// Solve `a x = b` exactly over a fraction field by fraction-free
/// elimination of the cleared-denominator augmented system.
pub fn solve<F: FractionField>(a: &[Vec<F>], b: &[F]) -> LinearSolution<F> {
    let n = a.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect())
        .collect();
    let ech = bareiss_echelon(to_domain_rows(&augmented), n + 1);
    if ech.pivots.iter().any(|&(_, c)| c == n) {
        return LinearSolution::Inconsistent;
    }
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    LinearSolution::Consistent {
        values: back_substitute(&ech, n, &[], Some(n)),
        free,
    }
}

/// A basis of `{x : a x = 0}`, one vector per free column.
pub fn nullspace<F: FractionField>(a: &[Vec<F>], n: usize) -> Vec<Vec<F>> {
    let ech = bareiss_echelon(to_domain_rows(a), n);
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|f| back_substitute::<F>(&ech, n, &[(f, F::one())], None))
        .collect()
}

pub fn rank<F: FractionField>(a: &[Vec<F>], n: usize) -> usize {
    bareiss_echelon(to_domain_rows(a), n).pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use sepdeform_scalar::{parse_ratfunc, Integer, Laurent, Rat};

    fn rat(s: &str) -> Rat {
        parse_ratfunc(s).unwrap()
    }

    fn rows(m: &[&[&str]]) -> Vec<Vec<Rat>> {
        m.iter().map(|r| r.iter().map(|s| rat(s)).collect()).collect()
    }

    #[test]
    fn integer_determinant_minor() {
        let m: Vec<Vec<Laurent<Integer>>> = [[2, 1, 1], [1, 3, 2], [1, 0, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| Laurent::constant(Integer::from(x))).collect())
            .collect();
        let e = bareiss_echelon(m, 3);
        // the last pivot of a nonsingular square system is its determinant up to sign
        let (r, c) = *e.pivots.last().unwrap();
        let d = e.rows[r][c].as_constant().unwrap();
        assert_eq!(d.abs(), Integer::from(1));
    }

    #[test]
    fn symbolic_solve() {
        let a = rows(&[&["1", "q"], &["q", "1"]]);
        let b = vec![rat("1"), rat("0")];
        let LinearSolution::Consistent { values, free } = solve(&a, &b) else { panic!() };
        assert!(free.is_empty());
        assert_eq!(values[0], rat("1/(1 - q^2)"));
        assert_eq!(values[1], rat("-q/(1 - q^2)"));
    }

    #[test]
    fn underdetermined_sets_free_to_zero() {
        let a = rows(&[&["1", "1", "1"], &["2", "2", "3"]]);
        let LinearSolution::Consistent { values, free } = solve(&a, &[rat("1"), rat("2")]) else { panic!() };
        assert_eq!(free, vec![1]);
        assert_eq!(values, vec![rat("1"), rat("0"), rat("0")]);
    }

    #[test]
    fn inconsistent_detected() {
        let a = rows(&[&["1", "t"], &["2", "2*t"]]);
        assert_eq!(solve(&a, &[rat("1"), rat("1")]), LinearSolution::Inconsistent);
    }

    #[test]
    fn nullspace_and_inverse() {
        let a = rows(&[&["1", "q", "q^2"], &["q", "q^2", "q^3"]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let s = row.iter().zip(v).fold(Rat::zero(), |acc, (x, y)| acc.add(&x.mul(y)));
                assert!(s.is_zero());
            }
        }
        let m = Matrix::from_rows(rows(&[&["1", "q"], &["q", "-1"]])).unwrap();
        assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
        assert_eq!(rank(&a, 3), 1);
    }
}
