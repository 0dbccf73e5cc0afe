//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Everything downstream (Hom bases, factorization ideals, annihilators)
//! reduces to ranks, kernels and subspace arithmetic computed here. There is
//! no floating point anywhere in the crate; elimination is fraction-free on
//! primitive integer rows, with gcd normalization to keep numerators small.

use crate::error::{CatError, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(CatError::LinAlg(format!(
                "entry count {} does not match {}x{}",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        if rows.iter().any(|v| v.len() != c) {
            return Err(CatError::LinAlg("ragged rows".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(data).expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    /// Rank over the rationals, exact.
    pub fn rank(&self) -> usize {
        let mut acc = SubspaceBasis::new(self.cols);
        for r in 0..self.rows {
            acc.insert(self.row(r));
        }
        acc.dim()
    }

    /// Basis of the right null space; always `cols - rank` vectors.
    ///
    /// Vectors are normalized to primitive integer entries, so the output is
    /// deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        // Reduced row echelon form, then back-substitution on free columns.
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut row = 0usize;
        for col in 0..cols {
            let pivot = (row..rows).find(|&r| !m[r * cols + col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_chunks(p, row, cols);
            let inv = m[row * cols + col].recip();
            for c in col..cols {
                let v = m[row * cols + c].clone() * &inv;
                m[row * cols + c] = v;
            }
            for r in 0..rows {
                if r != row && !m[r * cols + col].is_zero() {
                    let f = m[r * cols + col].clone();
                    for c in col..cols {
                        let v = m[r * cols + c].clone() - &f * &m[row * cols + c];
                        m[r * cols + c] = v;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); cols];
            v[free] = Rat::one();
            for (prow, &pcol) in pivot_cols.iter().enumerate() {
                v[pcol] = -m[prow * cols + free].clone();
            }
            normalize_primitive(&mut v);
            basis.push(v);
        }
        basis
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<Rat> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for c in 0..width {
            self.swap(a * width + c, b * width + c);
        }
    }
}

/// Scale a rational vector to primitive integer entries with positive leading
/// coefficient.
fn normalize_primitive(v: &mut [Rat]) {
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = num::integer::lcm(lcm, x.denom().clone());
    }
    let mut gcd = BigInt::zero();
    for x in v.iter() {
        let scaled = x.numer() * &lcm / x.denom();
        gcd = num::integer::gcd(gcd, scaled);
    }
    if gcd.is_zero() {
        return;
    }
    let lead = v.iter().find(|x| !x.is_zero()).cloned();
    let sign = match lead {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    let scale = Rat::new(lcm * sign, gcd);
    for x in v.iter_mut() {
        let nx = x.clone() * &scale;
        *x = nx;
    }
}

/// Incremental Gaussian accumulator: a row basis kept in echelon form with
/// primitive integer rows. This is the workhorse behind ranks, image spans,
/// factorization ideals and quotient-basis selection.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn new(ambient: usize) -> Self {
        SubspaceBasis { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The accumulated echelon rows spanning the subspace.
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduce `v` against the current basis; the remainder comes back primitive.
    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w: Vec<Rat> = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !w[p].is_zero() {
                // w := w - (w[p]/row[p]) * row, fraction-free in effect since
                // rows are primitive integers and w gets renormalized below.
                let f = w[p].clone() / &row[p];
                for c in 0..self.ambient {
                    let nv = w[c].clone() - &f * &row[c];
                    w[c] = nv;
                }
            }
        }
        normalize_primitive(&mut w);
        w
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let w = self.reduce(v);
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let idx = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
                self.rows.insert(idx, w);
                self.pivots.insert(idx, p);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

fn check_uniform_ambient(generators: &[Vec<Rat>]) -> Result<usize> {
    let mut dims = generators.iter().map(|v| v.len());
    let Some(first) = dims.next() else {
        return Ok(0);
    };
    if dims.any(|d| d != first) {
        return Err(CatError::LinAlg("mixed ambient dimensions".into()));
    }
    Ok(first)
}

/// Dimension of the span of the given vectors.
pub fn subspace_dim(generators: &[Vec<Rat>]) -> Result<usize> {
    let ambient = check_uniform_ambient(generators)?;
    let mut acc = SubspaceBasis::new(ambient);
    for g in generators {
        acc.insert(g);
    }
    Ok(acc.dim())
}

/// dim(U + V).
pub fn subspace_sum_dim(u: &[Vec<Rat>], v: &[Vec<Rat>]) -> Result<usize> {
    let all: Vec<Vec<Rat>> = u.iter().chain(v.iter()).cloned().collect();
    subspace_dim(&all)
}

/// dim(U ∩ V) via dim U + dim V − dim(U + V).
pub fn subspace_intersection_dim(u: &[Vec<Rat>], v: &[Vec<Rat>]) -> Result<usize> {
    let du = subspace_dim(u)?;
    let dv = subspace_dim(v)?;
    let ds = subspace_sum_dim(u, v)?;
    Ok(du + dv - ds)
}

/// Solve `A x = b` exactly; `None` when inconsistent.
pub fn solve(a: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len());
    let rows = a.rows();
    let cols = a.cols();
    // Augmented Gauss-Jordan.
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(p, row);
        let inv = m[row][col].recip();
        for c in col..=cols {
            let v = m[row][c].clone() * &inv;
            m[row][c] = v;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let v = m[r][c].clone() - &f * &m[row][c];
                    m[r][c] = v;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == rows {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero rhs.
    for r in m.iter() {
        if r[..cols].iter().all(|x| x.is_zero()) && !r[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(pr) = p {
            x[col] = m[*pr][cols].clone();
        }
    }
    Some(x)
}

/// Express `v` in the span of `basis` (columns); `None` when outside.
pub fn coordinates_in(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) { Some(Vec::new()) } else { None };
    }
    let ambient = basis[0].len();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(ambient);
    for r in 0..ambient {
        cols.push(basis.iter().map(|b| b[r].clone()).collect());
    }
    let m = RatMatrix::from_rows(cols).ok()?;
    solve(&m, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_identity_is_full() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(RatMatrix::zero(2, 2).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        assert_eq!(RatMatrix::zero(2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_single_row() {
        let m = RatMatrix::from_int_rows(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(k[0][0].clone() + k[0][1].clone(), Rat::zero());
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn subspace_dims() {
        let e1 = vec![rat(1), rat(0)];
        let e2 = vec![rat(0), rat(1)];
        assert_eq!(subspace_dim(&[e1.clone(), e2.clone()]).unwrap(), 2);
        let v = vec![rat(1), rat(1)];
        let w = vec![rat(2), rat(2)];
        assert_eq!(subspace_dim(&[v, w]).unwrap(), 1);
        assert_eq!(subspace_intersection_dim(&[e1], &[e2]).unwrap(), 0);
    }

    #[test]
    fn mixed_ambient_rejected() {
        let v = vec![rat(1)];
        let w = vec![rat(1), rat(2)];
        assert!(subspace_dim(&[v, w]).is_err());
    }

    #[test]
    fn solve_simple() {
        let m = RatMatrix::from_int_rows(&[&[2, 0], &[0, 3]]);
        let x = solve(&m, &[rat(4), rat(9)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(3)]);
        let singular = RatMatrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(solve(&singular, &[rat(1), rat(2)]).is_none());
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(rows in 1usize..5, cols in 1usize..5,
                                         seed in proptest::collection::vec(-4i64..5, 0..25)) {
            let entries: Vec<Rat> = (0..rows * cols)
                .map(|i| rat(*seed.get(i % seed.len().max(1)).unwrap_or(&0)))
                .collect();
            let m = RatMatrix::new(rows, cols, entries).unwrap();
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(rows in 1usize..5, cols in 1usize..5,
                        seed in proptest::collection::vec(-4i64..5, 0..25)) {
            let entries: Vec<Rat> = (0..rows * cols)
                .map(|i| rat(*seed.get(i % seed.len().max(1)).unwrap_or(&0)))
                .collect();
            let m = RatMatrix::new(rows, cols, entries).unwrap();
            prop_assert_eq!(m.cols(), m.rank() + m.kernel_basis().len());
        }
    }
}
