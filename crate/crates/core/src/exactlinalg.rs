//! Dense exact linear algebra over prime fields `F_p`.
//!
//! Vectors are plain `Vec<u64>` of reduced residues and matrices are row-major.
//! Everything in the crate uses the row-vector convention: a linear map
//! `V -> W` is a `dim V x dim W` matrix acting on the right of row vectors.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Largest supported modulus; products of two residues fit in a `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not a prime modulus below 2^31")]
    BadModulus(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_modulus(p: u64) -> Result<u64, LinalgError> {
    if p <= MAX_MODULUS && is_prime(p) {
        Ok(p)
    } else {
        Err(LinalgError::BadModulus(p))
    }
}

/// Reduces a signed integer into `0..p`.
pub fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverting zero mod {p}");
    pow_mod(a, p - 2, p)
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// An element of `F_p` that carries its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u64,
    modulus: u64,
}

impl Scalar {
    pub fn new(value: i64, modulus: u64) -> Result<Self, LinalgError> {
        let modulus = check_modulus(modulus)?;
        Ok(Scalar {
            value: reduce(value, modulus),
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Option<Scalar> {
        (!self.is_zero()).then(|| Scalar {
            value: inv_mod(self.value, self.modulus),
            modulus: self.modulus,
        })
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.modulus, rhs.modulus);
        Scalar {
            value: add_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.modulus, rhs.modulus);
        Scalar {
            value: sub_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.modulus, rhs.modulus);
        Scalar {
            value: self.value * rhs.value % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: sub_mod(0, self.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// ---------------------------------------------------------------------------
// vector helpers

pub fn vec_add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| add_mod(x, y, p)).collect()
}

pub fn vec_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| sub_mod(x, y, p)).collect()
}

pub fn vec_scale(p: u64, c: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|&x| x * c % p).collect()
}

/// `y += c * x`
pub fn axpy(p: u64, y: &mut [u64], c: u64, x: &[u64]) {
    if c == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = (*yi + c * xi) % p;
    }
}

pub fn is_zero_vec(v: &[u64]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn unit_vec(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Scales `v` so that its first nonzero entry is 1.
pub fn normalize(p: u64, v: &mut [u64]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        if lead != 1 {
            let inv = inv_mod(lead, p);
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
        }
    }
}

/// Odometer over all vectors in `F_p^n`, starting at zero.
#[derive(Clone, Debug)]
pub struct VectorOdometer {
    p: u64,
    current: Option<Vec<u64>>,
}

impl VectorOdometer {
    pub fn new(p: u64, n: usize) -> Self {
        VectorOdometer {
            p,
            current: Some(vec![0; n]),
        }
    }
}

impl Iterator for VectorOdometer {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut carry = true;
        for x in next.iter_mut() {
            *x += 1;
            if *x == self.p {
                *x = 0;
            } else {
                carry = false;
                break;
            }
        }
        self.current = if carry { None } else { Some(next) };
        Some(out)
    }
}

/// Nonzero vectors of `F_p^n` whose last nonzero entry is 1
/// (one representative per line).
pub fn projective_points(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    VectorOdometer::new(p, n).filter(|v| v.iter().rev().find(|&&x| x != 0) == Some(&1))
}

// ---------------------------------------------------------------------------
// matrices

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from signed rows, reducing mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::ShapeMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| reduce(x, p)))
            .collect();
        Ok(Matrix {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from already reduced row vectors of a known width.
    pub fn from_vecs(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row width");
            data.extend(r.iter().map(|&x| x % p));
        }
        Matrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_flat(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            p,
            rows,
            cols,
            data,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&x| x as i64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    fn check_same(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let mut out = vec![0u64; self.rows * other.cols];
        let mut acc = vec![0u128; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot += (a * b) as u128;
                }
            }
            for (c, a) in acc.iter().enumerate() {
                out[r * other.cols + c] = (*a % p as u128) as u64;
            }
        }
        Ok(Matrix {
            p,
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::ShapeMismatch("addition".into()));
        }
        Ok(Matrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data: vec_add(self.p, &self.data, &other.data),
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::ShapeMismatch("subtraction".into()));
        }
        Ok(Matrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(self.p, &self.data, &other.data),
        })
    }

    pub fn scale(&self, c: u64) -> Matrix {
        Matrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data: vec_scale(self.p, c % self.p, &self.data),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: u64, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(self.p, &mut self.data, c % self.p, &other.data);
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut acc = vec![0u128; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in acc.iter_mut().zip(self.row(k)) {
                *slot += (a * b) as u128;
            }
        }
        acc.into_iter()
            .map(|a| (a % self.p as u128) as u64)
            .collect()
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack widths");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack heights");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix {
            p: self.p,
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(p: u64, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.data[(r0 + r) * cols + c0 + c] = b.get(r, c);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows: Vec<Vec<u64>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Matrix::from_vecs(self.p, self.cols, &rows)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.pow(self.rows as u64).is_zero()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    /// In-place RREF, returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for k in 0..cols {
                    self.data.swap(piv * cols + k, r * cols + k);
                }
            }
            let inv = inv_mod(self.data[r * cols + c], p);
            if inv != 1 {
                for k in c..cols {
                    self.data[r * cols + k] = self.data[r * cols + k] * inv % p;
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                for k in c..cols {
                    let src = self.data[r * cols + k];
                    if src != 0 {
                        let dst = &mut self.data[i * cols + k];
                        *dst = (*dst + nf * src) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (as rows) of `{x : self * x^T = 0}`, i.e. the right nullspace.
    pub fn kernel(&self) -> Matrix {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.p, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.data[k * self.cols + f] = 1 % self.p;
            for (j, &pc) in pivots.iter().enumerate() {
                let v = matrix.get(j, f);
                if v != 0 {
                    out.data[k * self.cols + pc] = self.p - v;
                }
            }
        }
        out
    }

    /// Basis (as rows) of `{v : v * self = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.p, n));
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.matrix.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Result of a solvable system `a * x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Matrix,
    /// Rows form a basis of `ker a` (column vectors written as rows).
    pub nullspace: Matrix,
}

/// Solves `a * x = b`. `Ok(None)` means the system is inconsistent.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Solution>, LinalgError> {
    a.check_same(b)?;
    if a.rows != b.rows {
        return Err(LinalgError::ShapeMismatch(format!(
            "solve: {} equations vs {} right-hand rows",
            a.rows, b.rows
        )));
    }
    let n = a.cols;
    let aug = a.hstack(b).rref();
    if aug.pivots.iter().any(|&c| c >= n) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.p, n, b.cols);
    for (j, &pc) in aug.pivots.iter().enumerate() {
        for k in 0..b.cols {
            x.data[pc * b.cols + k] = aug.matrix.get(j, n + k);
        }
    }
    Ok(Some(Solution {
        particular: x,
        nullspace: a.kernel(),
    }))
}

/// Solves `x * a = b` for row vectors stacked in `b`.
pub fn solve_left(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
    Ok(solve(&a.transpose(), &b.transpose())?.map(|s| s.particular.transpose()))
}

// ---------------------------------------------------------------------------
// subspaces

/// A subspace of `F_p^n` stored by its RREF basis, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F_{}^{}: {:?})",
            self.dim(),
            self.basis.p,
            self.ambient,
            self.basis.row_vecs()
        )
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim(), self.basis.data()).cmp(&(
            other.ambient,
            other.dim(),
            other.basis.data(),
        ))
    }
}

impl Subspace {
    pub fn zero(p: u64, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(p, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u64, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(p, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let Rref {
            matrix,
            rank,
            pivots,
        } = m.rref();
        let basis = matrix.select_rows(&(0..rank).collect::<Vec<_>>());
        Subspace {
            ambient: m.cols,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(p: u64, ambient: usize, vectors: &[Vec<u64>]) -> Self {
        Subspace::from_matrix(&Matrix::from_vecs(p, ambient, vectors))
    }

    pub fn modulus(&self) -> u64 {
        self.basis.p
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<u64>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Columns that are not pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Normal form of `v` modulo the subspace (zero at every pivot column).
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.modulus();
        let mut w = v.to_vec();
        for (j, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c != 0 {
                axpy(p, &mut w, p - c, self.basis.row(j));
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Coordinates of the class of `v` in the quotient, w.r.t. the unit
    /// vectors at [`Subspace::free_columns`].
    pub fn quotient_coordinates(&self, v: &[u64]) -> Vec<u64> {
        let w = self.reduce(v);
        self.free_columns().into_iter().map(|c| w[c]).collect()
    }

    /// Matrix of the quotient map `F_p^n -> F_p^n / self`.
    pub fn quotient_map(&self) -> Matrix {
        let free = self.free_columns();
        let mut m = Matrix::zeros(self.modulus(), self.ambient, free.len());
        for i in 0..self.ambient {
            let q = self.quotient_coordinates(&unit_vec(self.ambient, i));
            for (j, x) in q.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.modulus() != other.modulus() {
            return Err(LinalgError::ModulusMismatch(
                self.modulus(),
                other.modulus(),
            ));
        }
        if self.ambient != other.ambient {
            return Err(LinalgError::ShapeMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn try_sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.try_sum(other).expect("subspace sum")
    }

    pub fn try_intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.modulus(), self.ambient));
        }
        // x = (a, b) with a*U + b*V = 0 gives a*U in the intersection
        let stacked = self.basis.vstack(&other.basis);
        let ker = stacked.left_kernel();
        let k = self.dim();
        let coeffs = ker.select_cols(&(0..k).collect::<Vec<_>>());
        Ok(Subspace::from_matrix(&(&coeffs * &self.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.try_intersection(other).expect("subspace intersection")
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn with_vector(&self, v: &[u64]) -> Subspace {
        Subspace::from_matrix(&self.basis.vstack(&Matrix::from_vecs(
            self.modulus(),
            self.ambient,
            &[v.to_vec()],
        )))
    }

    /// Image of the subspace under a linear map (row convention).
    pub fn image(&self, map: &Matrix) -> Subspace {
        if self.is_zero() {
            return Subspace::zero(self.modulus(), map.cols());
        }
        Subspace::from_matrix(&(&self.basis * map))
    }

    /// Preimage of the subspace under a linear map (row convention).
    pub fn preimage(&self, map: &Matrix) -> Subspace {
        let q = self.quotient_map();
        Subspace::from_matrix(&(map * &q).left_kernel())
    }

    /// All vectors of the subspace, in odometer order of coordinates.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        VectorOdometer::new(self.modulus(), self.dim()).map(move |c| self.combine(&c))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &[u64]) -> Vec<u64> {
        if self.dim() == 0 {
            return vec![0; self.ambient];
        }
        self.basis.apply(coeffs)
    }

    /// Enumerates all subspaces of `F_p^n` (only sensible for tiny `n`).
    pub fn all_subspaces(p: u64, n: usize) -> Vec<Subspace> {
        let mut found = std::collections::BTreeSet::new();
        let mut frontier = vec![Subspace::zero(p, n)];
        found.insert(Subspace::zero(p, n));
        while let Some(u) = frontier.pop() {
            for v in projective_points(p, n) {
                if !u.contains(&v) {
                    let w = u.with_vector(&v);
                    if found.insert(w.clone()) {
                        frontier.push(w);
                    }
                }
            }
        }
        found.into_iter().collect()
    }
}
