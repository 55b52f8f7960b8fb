//! Finite-dimensional unital associative algebras over `F_p`, given by
//! structure constants `b_i * b_j = sum_k c[i][j][k] b_k`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlinalg::{
    axpy, check_modulus, is_zero_vec, projective_points, unit_vec, vec_add, vec_scale, vec_sub,
    LinalgError, Matrix, Subspace, VectorOdometer,
};
use crate::modrep::{self, Bimodule};

/// Default cap on `p^dim` for exhaustive element scans.
pub const DEFAULT_EXHAUSTIVE_BOUND: u64 = 1 << 20;

/// Default cap on the number of two-sided ideals visited by the lattice scan.
pub const DEFAULT_LATTICE_BOUND: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("associativity fails at (b{i} b{j}) b{k} vs b{i} (b{j} b{k}), coordinate {m}")]
    AssociativityViolation {
        i: usize,
        j: usize,
        k: usize,
        m: usize,
    },
    #[error("unit vector is not a two-sided identity")]
    UnitViolation,
    #[error("malformed structure constants: {0}")]
    BadTable(String),
    #[error("path algebra exceeds path length bound {bound}")]
    InfiniteDimensional { bound: usize },
    #[error("malformed quiver: {0}")]
    BadQuiver(String),
    #[error("relation {0} mixes path lengths; only homogeneous relations are supported")]
    NonHomogeneousRelation(usize),
    #[error("bimodule actions incompatible: {0}")]
    ActionIncompatible(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("ideal is not two-sided")]
    NotTwoSided,
    #[error("{what}: search space {size} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u64,
        bound: u64,
    },
    #[error("idempotent lifting did not converge")]
    LiftingFailed,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
}

/// A one- or two-sided ideal, stored as a canonical subspace of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    span: Subspace,
    sidedness: Sidedness,
    idempotent: bool,
}

impl Ideal {
    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn is_idempotent(&self) -> bool {
        self.idempotent
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis_vecs(&self) -> Vec<Vec<u64>> {
        self.span.basis_vecs()
    }
}

#[derive(Clone, Debug, Default)]
struct Cache {
    generators: OnceLock<Vec<Vec<u64>>>,
    radical: OnceLock<Subspace>,
    primitive: OnceLock<Result<PrimitiveDecomposition, AlgebraError>>,
}

/// A complete set of primitive orthogonal idempotents summing to 1, grouped
/// by isomorphism type of the indecomposable projective `eA`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub idempotents: Vec<Vec<u64>>,
    /// `types[i]` indexes `representatives`.
    pub types: Vec<usize>,
    /// For each isomorphism type, the index of its first idempotent.
    pub representatives: Vec<usize>,
}

impl PrimitiveDecomposition {
    pub fn type_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn representative(&self, t: usize) -> &[u64] {
        &self.idempotents[self.representatives[t]]
    }
}

#[derive(Clone)]
pub struct Algebra {
    p: u64,
    dim: usize,
    table: Vec<u64>,
    unit: Vec<u64>,
    labels: Vec<String>,
    cache: Cache,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(F_{}, dim {}, basis {:?})", self.p, self.dim, self.labels)
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.dim == other.dim
            && self.table == other.table
            && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Validates structure constants and unit. `table[i][j]` is the
    /// coefficient vector of `b_i * b_j`.
    pub fn from_table(
        p: u64,
        table: &[Vec<Vec<i64>>],
        unit: &[i64],
        labels: Option<Vec<String>>,
    ) -> Result<Algebra, AlgebraError> {
        let p = check_modulus(p)?;
        let dim = table.len();
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for (i, row) in table.iter().enumerate() {
            if row.len() != dim {
                return Err(AlgebraError::BadTable(format!("row {i} has {} entries", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(AlgebraError::BadTable(format!(
                        "product b{i} b{j} has {} coordinates",
                        v.len()
                    )));
                }
                flat.extend(v.iter().map(|&x| x.rem_euclid(p as i64) as u64));
            }
        }
        if unit.len() != dim {
            return Err(AlgebraError::BadTable("unit length".into()));
        }
        let unit = unit.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        Algebra::from_flat(p, dim, flat, unit, labels)
    }

    /// Same as [`Algebra::from_table`] with a flat `dim^3` table of residues.
    pub fn from_flat(
        p: u64,
        dim: usize,
        table: Vec<u64>,
        unit: Vec<u64>,
        labels: Option<Vec<String>>,
    ) -> Result<Algebra, AlgebraError> {
        if table.len() != dim * dim * dim || unit.len() != dim {
            return Err(AlgebraError::BadTable("table size".into()));
        }
        let labels = match labels {
            Some(l) if l.len() == dim => l,
            Some(l) => {
                return Err(AlgebraError::BadTable(format!(
                    "{} labels for dimension {dim}",
                    l.len()
                )))
            }
            None => (0..dim).map(|i| format!("b{i}")).collect(),
        };
        let alg = Algebra {
            p,
            dim,
            table,
            unit,
            labels,
            cache: Cache::default(),
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        let p = self.p;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    // (b_i b_j) b_k
                    let mut lhs = vec![0u64; n];
                    for (l, &c) in ij.iter().enumerate() {
                        axpy(p, &mut lhs, c, self.basis_product(l, k));
                    }
                    // b_i (b_j b_k)
                    let mut rhs = vec![0u64; n];
                    for (l, &c) in self.basis_product(j, k).iter().enumerate() {
                        axpy(p, &mut rhs, c, self.basis_product(i, l));
                    }
                    if let Some(m) = (0..n).find(|&m| lhs[m] != rhs[m]) {
                        return Err(AlgebraError::AssociativityViolation { i, j, k, m });
                    }
                }
            }
        }
        for i in 0..n {
            let b = unit_vec(n, i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(AlgebraError::UnitViolation);
            }
        }
        Ok(())
    }

    /// The zero algebra (dimension 0, where 1 = 0).
    pub fn zero(p: u64) -> Algebra {
        Algebra {
            p,
            dim: 0,
            table: Vec::new(),
            unit: Vec::new(),
            labels: Vec::new(),
            cache: Cache::default(),
        }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn field(p: u64) -> Result<Algebra, AlgebraError> {
        Algebra::from_flat(p, 1, vec![1], vec![1], Some(vec!["1".into()]))
    }

    /// Full matrix algebra `M_n(F_p)` on matrix units `e_ij` (row-major).
    pub fn full_matrix(p: u64, n: usize) -> Result<Algebra, AlgebraError> {
        let d = n * n;
        let mut table = vec![0u64; d * d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // e_ij e_jl = e_il
                    let a = i * n + j;
                    let b = j * n + l;
                    table[(a * d + b) * d + i * n + l] = 1;
                }
            }
        }
        let mut unit = vec![0u64; d];
        for i in 0..n {
            unit[i * n + i] = 1;
        }
        let labels = (0..d)
            .map(|a| format!("e{}{}", a / n + 1, a % n + 1))
            .collect();
        Algebra::from_flat(p, d, table, unit, Some(labels))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Algebra {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn zero_element(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<u64> {
        unit_vec(self.dim, i)
    }

    /// Coefficients of `b_i * b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let n = self.dim;
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Structure constants as nested signed vectors (for serialization).
    pub fn table_rows(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.basis_product(i, j).iter().map(|&x| x as i64).collect())
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.dim;
        let p = self.p;
        let mut acc = vec![0u128; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = (x * y % p) as u128;
                for (slot, &c) in acc.iter_mut().zip(self.basis_product(i, j)) {
                    *slot += xy * c as u128;
                }
            }
        }
        acc.into_iter().map(|v| (v % p as u128) as u64).collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        vec_add(self.p, a, b)
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        vec_sub(self.p, a, b)
    }

    pub fn scale(&self, c: u64, a: &[u64]) -> Vec<u64> {
        vec_scale(self.p, c % self.p, a)
    }

    pub fn one_minus(&self, a: &[u64]) -> Vec<u64> {
        self.sub(&self.unit, a)
    }

    pub fn is_idempotent(&self, e: &[u64]) -> bool {
        self.mul(e, e) == e
    }

    pub fn commutes(&self, a: &[u64], b: &[u64]) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, a: &[u64]) -> bool {
        (0..self.dim).all(|j| self.commutes(a, &self.basis_element(j)))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_nilpotent_element(&self, a: &[u64]) -> bool {
        self.right_mult(a).is_nilpotent()
    }

    /// Matrix of `v -> v * x` in the row convention (row `i` is `b_i x`).
    pub fn right_mult(&self, x: &[u64]) -> Matrix {
        let rows: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| self.mul(&self.basis_element(i), x))
            .collect();
        Matrix::from_vecs(self.p, self.dim, &rows)
    }

    /// Matrix of `v -> x * v` in the row convention (row `i` is `x b_i`).
    pub fn left_mult(&self, x: &[u64]) -> Matrix {
        let rows: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| self.mul(x, &self.basis_element(i)))
            .collect();
        Matrix::from_vecs(self.p, self.dim, &rows)
    }

    /// Right multiplication by every basis element: the regular representation.
    pub fn right_regular_actions(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|j| self.right_mult(&self.basis_element(j)))
            .collect()
    }

    /// Left multiplication by every basis element.
    pub fn left_regular_actions(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|j| self.left_mult(&self.basis_element(j)))
            .collect()
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.p, self.dim)
    }

    pub fn full_subspace(&self) -> Subspace {
        Subspace::full(self.p, self.dim)
    }

    /// `span{u v : u in U, v in V}`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for a in u.basis_vecs() {
            for b in v.basis_vecs() {
                rows.push(self.mul(&a, &b));
            }
        }
        Subspace::from_vectors(self.p, self.dim, &rows)
    }

    /// `e A`, `A e` or `e A f` style subspaces.
    pub fn left_multiple(&self, e: &[u64]) -> Subspace {
        self.left_mult(e).row_space()
    }

    pub fn right_multiple(&self, e: &[u64]) -> Subspace {
        self.right_mult(e).row_space()
    }

    pub fn sandwich(&self, e: &[u64], f: &[u64]) -> Subspace {
        let rows: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| self.mul(&self.mul(e, &self.basis_element(i)), f))
            .collect();
        Subspace::from_vectors(self.p, self.dim, &rows)
    }

    // -----------------------------------------------------------------------
    // constructors

    /// Algebra structure on a subspace closed under multiplication that
    /// contains `unit` (which need not be the unit of `self`).
    pub fn subalgebra(&self, basis: &Subspace, unit: &[u64]) -> Result<Embedded, AlgebraError> {
        let m = basis.dim();
        let rows = basis.basis_vecs();
        let mut table = Vec::with_capacity(m * m * m);
        for a in &rows {
            for b in &rows {
                let prod = self.mul(a, b);
                let coords = basis.coordinates(&prod).ok_or_else(|| {
                    AlgebraError::BadTable("subspace not closed under multiplication".into())
                })?;
                table.extend(coords);
            }
        }
        let unit_coords = basis
            .coordinates(unit)
            .ok_or(AlgebraError::UnitViolation)?;
        let algebra = if m == 0 {
            Algebra::zero(self.p)
        } else {
            Algebra::from_flat(self.p, m, table, unit_coords, None)?
        };
        Ok(Embedded {
            algebra,
            embedding: basis.basis().clone(),
            span: basis.clone(),
        })
    }

    /// The corner `eAe`, with unit `e`.
    pub fn corner(&self, e: &[u64]) -> Result<Embedded, AlgebraError> {
        if !self.is_idempotent(e) {
            return Err(AlgebraError::NotIdempotent);
        }
        let span = self.sandwich(e, e);
        self.subalgebra(&span, e)
    }

    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return self.zero_subspace();
        }
        let n = self.dim;
        // row i: concat_j (b_i b_j - b_j b_i)
        let mut m = Matrix::zeros(self.p, n, n * n);
        for i in 0..n {
            for j in 0..n {
                let d = vec_sub(self.p, self.basis_product(i, j), self.basis_product(j, i));
                for (k, x) in d.into_iter().enumerate() {
                    m.set(i, j * n + k, x);
                }
            }
        }
        m.left_kernel().row_space()
    }

    pub fn center_algebra(&self) -> Result<Embedded, AlgebraError> {
        let z = self.center();
        self.subalgebra(&z, &self.unit)
    }

    /// `A / I` for a two-sided ideal `I`; basis = unit vectors at the free
    /// columns of `I`'s echelon form.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientAlgebra, AlgebraError> {
        if !self.is_two_sided(ideal) {
            return Err(AlgebraError::NotTwoSided);
        }
        let free = ideal.free_columns();
        let q = free.len();
        let mut table = Vec::with_capacity(q * q * q);
        for &a in &free {
            for &b in &free {
                table.extend(ideal.quotient_coordinates(self.basis_product(a, b)));
            }
        }
        let unit = ideal.quotient_coordinates(&self.unit);
        let labels: Vec<String> = free.iter().map(|&c| self.labels[c].clone()).collect();
        let algebra = if q == 0 {
            Algebra::zero(self.p)
        } else {
            Algebra::from_flat(self.p, q, table, unit, Some(labels))?
        };
        let mut section = Matrix::zeros(self.p, q, self.dim);
        for (r, &c) in free.iter().enumerate() {
            section.set(r, c, 1);
        }
        Ok(QuotientAlgebra {
            algebra,
            projection: ideal.quotient_map(),
            section,
            kernel: ideal.clone(),
        })
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut table = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                table[(i * n + j) * n..(i * n + j + 1) * n]
                    .copy_from_slice(self.basis_product(j, i));
            }
        }
        Algebra {
            p: self.p,
            dim: n,
            table,
            unit: self.unit.clone(),
            labels: self.labels.clone(),
            cache: Cache::default(),
        }
    }

    /// Tensor product over `F_p`, basis `a_i (x) b_j` at index `i * dim B + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra, AlgebraError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch(self.p, other.p).into());
        }
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let mut table = vec![0u64; n * n * n];
        for i in 0..na {
            for j in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        let a = self.basis_product(i, i2);
                        let b = other.basis_product(j, j2);
                        let row = ((i * nb + j) * n + i2 * nb + j2) * n;
                        for (k, &x) in a.iter().enumerate() {
                            if x == 0 {
                                continue;
                            }
                            for (l, &y) in b.iter().enumerate() {
                                table[row + k * nb + l] = x * y % self.p;
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u64; n];
        for (i, &x) in self.unit.iter().enumerate() {
            for (j, &y) in other.unit.iter().enumerate() {
                unit[i * nb + j] = x * y % self.p;
            }
        }
        let labels = (0..n)
            .map(|ix| format!("{}(x){}", self.labels[ix / nb], other.labels[ix % nb]))
            .collect();
        if n == 0 {
            return Ok(Algebra::zero(self.p));
        }
        Algebra::from_flat(self.p, n, table, unit, Some(labels))
    }

    /// The lower triangular algebra `[[C, 0], [M, B]]` for a `(B, C)`-bimodule
    /// `M`. Basis order: `C`, then `M`, then `B`.
    pub fn triangular(c: &Algebra, b: &Algebra, m: &Bimodule) -> Result<Triangular, AlgebraError> {
        let p = c.p;
        if b.p != p || m.modulus() != p {
            return Err(AlgebraError::ActionIncompatible("field mismatch".into()));
        }
        m.validate(b, c)
            .map_err(|e| AlgebraError::ActionIncompatible(e.to_string()))?;
        let (dc, dm, db) = (c.dim, m.dim(), b.dim);
        let n = dc + dm + db;
        let mut table = vec![0u64; n * n * n];
        let mut put = |x: usize, y: usize, coeffs: &[u64], offset: usize| {
            let row = (x * n + y) * n + offset;
            table[row..row + coeffs.len()].copy_from_slice(coeffs);
        };
        for i in 0..dc {
            for j in 0..dc {
                put(i, j, c.basis_product(i, j), 0);
            }
        }
        for i in 0..db {
            for j in 0..db {
                put(dc + dm + i, dc + dm + j, b.basis_product(i, j), dc + dm);
            }
        }
        for i in 0..dm {
            // m_i * c_j
            for j in 0..dc {
                put(dc + i, j, m.right_action(j).row(i), dc);
            }
            // b_j * m_i
            for j in 0..db {
                put(dc + dm + j, dc + i, m.left_action(j).row(i), dc);
            }
        }
        let mut unit = vec![0u64; n];
        unit[..dc].copy_from_slice(&c.unit);
        unit[dc + dm..].copy_from_slice(&b.unit);
        let mut labels: Vec<String> = c.labels.iter().map(|l| format!("C:{l}")).collect();
        labels.extend((0..dm).map(|i| format!("M:{i}")));
        labels.extend(b.labels.iter().map(|l| format!("B:{l}")));
        let algebra = if n == 0 {
            Algebra::zero(p)
        } else {
            Algebra::from_flat(p, n, table, unit, Some(labels))?
        };
        let mut e_c = vec![0u64; n];
        e_c[..dc].copy_from_slice(&c.unit);
        let mut e_b = vec![0u64; n];
        e_b[dc + dm..].copy_from_slice(&b.unit);
        Ok(Triangular {
            algebra,
            e_c,
            e_b,
            dims: (dc, dm, db),
        })
    }

    /// Direct product `A x B` (a triangular algebra with zero bimodule).
    pub fn product(&self, other: &Algebra) -> Result<Algebra, AlgebraError> {
        let zero = Bimodule::zero(other, self);
        Ok(Algebra::triangular(self, other, &zero)?.algebra)
    }

    // -----------------------------------------------------------------------
    // generation and ideals

    /// Subalgebra (with 1) generated by a set of elements.
    pub fn generated_subalgebra(&self, gens: &[Vec<u64>]) -> Subspace {
        let mut span = Subspace::from_vectors(self.p, self.dim, std::slice::from_ref(&self.unit));
        let mut frontier = span.basis_vecs();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for g in gens {
                    let w = self.mul(v, g);
                    if !span.contains(&w) {
                        span = span.with_vector(&w);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        span
    }

    /// A small algebra generating set, chosen greedily from the basis.
    pub fn generators(&self) -> &[Vec<u64>] {
        self.cache.generators.get_or_init(|| {
            let mut gens: Vec<Vec<u64>> = Vec::new();
            let mut span = self.generated_subalgebra(&gens);
            for j in 0..self.dim {
                let b = self.basis_element(j);
                if !span.contains(&b) {
                    gens.push(b);
                    span = self.generated_subalgebra(&gens);
                }
            }
            gens
        })
    }

    /// Smallest ideal of the given sidedness containing `gens`.
    pub fn ideal_generated(&self, gens: &[Vec<u64>], sidedness: Sidedness) -> Ideal {
        let start = Subspace::from_vectors(self.p, self.dim, gens);
        self.ideal_closure(&start, sidedness)
    }

    fn ideal_closure(&self, start: &Subspace, sidedness: Sidedness) -> Ideal {
        let mut span = start.clone();
        let mut frontier = span.basis_vecs();
        let left = matches!(sidedness, Sidedness::Left | Sidedness::TwoSided);
        let right = matches!(sidedness, Sidedness::Right | Sidedness::TwoSided);
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for j in 0..self.dim {
                    let b = self.basis_element(j);
                    let mut cands = Vec::with_capacity(2);
                    if right {
                        cands.push(self.mul(v, &b));
                    }
                    if left {
                        cands.push(self.mul(&b, v));
                    }
                    for w in cands {
                        if !span.contains(&w) {
                            span = span.with_vector(&w);
                            next.push(w);
                        }
                    }
                }
            }
            frontier = next;
        }
        let idempotent = self.product_space(&span, &span) == span;
        Ideal {
            span,
            sidedness,
            idempotent,
        }
    }

    /// Wraps a subspace as an ideal after checking closure.
    pub fn ideal_from_span(&self, span: Subspace, sidedness: Sidedness) -> Result<Ideal, AlgebraError> {
        let closed = self.ideal_closure(&span, sidedness);
        if closed.span != span {
            return Err(AlgebraError::NotTwoSided);
        }
        Ok(closed)
    }

    pub fn is_two_sided(&self, span: &Subspace) -> bool {
        span.basis_vecs().iter().all(|v| {
            (0..self.dim).all(|j| {
                let b = self.basis_element(j);
                span.contains(&self.mul(v, &b)) && span.contains(&self.mul(&b, v))
            })
        })
    }

    /// `A e A`.
    pub fn trace_ideal(&self, e: &[u64]) -> Ideal {
        self.ideal_generated(&[e.to_vec()], Sidedness::TwoSided)
    }

    /// `(lann_A(I), rann_A(I))`.
    pub fn annihilators(&self, ideal: &Subspace) -> (Ideal, Ideal) {
        let n = self.dim;
        let basis = ideal.basis_vecs();
        if basis.is_empty() || n == 0 {
            let full = self.full_subspace();
            let mk = |s: Sidedness| Ideal {
                idempotent: true,
                span: full.clone(),
                sidedness: s,
            };
            return (mk(Sidedness::TwoSided), mk(Sidedness::TwoSided));
        }
        let mut lhs = Matrix::zeros(self.p, n, 0);
        let mut rhs = Matrix::zeros(self.p, n, 0);
        for x in &basis {
            lhs = lhs.hstack(&self.right_mult(x));
            rhs = rhs.hstack(&self.left_mult(x));
        }
        let wrap = |span: Subspace| {
            let sidedness = if self.is_two_sided(&span) {
                Sidedness::TwoSided
            } else {
                Sidedness::Left
            };
            let idempotent = self.product_space(&span, &span) == span;
            Ideal {
                span,
                sidedness,
                idempotent,
            }
        };
        (
            wrap(lhs.left_kernel().row_space()),
            wrap(rhs.left_kernel().row_space()),
        )
    }

    // -----------------------------------------------------------------------
    // radical and idempotents

    /// The Jacobson radical: the intersection of the annihilators of the
    /// composition factors of `A_A`.
    pub fn radical(&self) -> &Subspace {
        self.cache.radical.get_or_init(|| {
            if self.dim == 0 {
                return self.zero_subspace();
            }
            let factors = modrep::composition_factors(self.p, &self.right_regular_actions());
            let n = self.dim;
            let mut m = Matrix::zeros(self.p, n, 0);
            for s in &factors {
                let mut block = Matrix::zeros(self.p, n, s[0].rows() * s[0].cols());
                for (j, act) in s.iter().enumerate() {
                    block.row_mut(j).copy_from_slice(act.data());
                }
                m = m.hstack(&block);
            }
            m.left_kernel().row_space()
        })
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    /// Right hereditary: the radical is projective as a right module.
    pub fn is_hereditary(&self) -> Result<bool, AlgebraError> {
        let rad = self.radical().clone();
        if rad.is_zero() {
            return Ok(true);
        }
        let regular = modrep::RightModule::regular(self);
        let sub = regular.submodule(&rad)?;
        modrep::is_projective(self, &sub.module)
    }

    /// Newton iteration `x -> 3x^2 - 2x^3`, valid when `x^2 - x` is nilpotent.
    pub fn lift_idempotent(&self, x: &[u64]) -> Result<Vec<u64>, AlgebraError> {
        let mut x = x.to_vec();
        for _ in 0..64 {
            let x2 = self.mul(&x, &x);
            if x2 == x {
                return Ok(x);
            }
            let x3 = self.mul(&x2, &x);
            x = self.sub(&self.scale(3, &x2), &self.scale(2, &x3));
        }
        Err(AlgebraError::LiftingFailed)
    }

    /// A primitive idempotent, lifted from a minimal right ideal of `A/rad A`.
    pub fn some_primitive_idempotent(&self) -> Result<Vec<u64>, AlgebraError> {
        if self.dim == 0 {
            return Ok(Vec::new());
        }
        let rad = self.radical().clone();
        let quot = self.quotient(&rad)?;
        let sbar = &quot.algebra;
        let actions = sbar.right_regular_actions();
        let minimal = modrep::find_simple_submodule(sbar.p, &actions, &sbar.full_subspace());
        let retraction = modrep::find_retraction_actions(&actions, &minimal)
            .ok_or_else(|| AlgebraError::BadTable("semisimple quotient failed to split".into()))?;
        // e = pi(1), as a vector of A/rad
        let coords = retraction.apply(sbar.unit());
        let ebar = minimal.combine(&coords);
        let lift = quot.section.apply(&ebar);
        self.lift_idempotent(&lift)
    }

    /// A complete set of primitive orthogonal idempotents, found by
    /// repeatedly splitting a primitive idempotent off the complementary corner.
    pub fn primitive_decomposition(&self) -> Result<&PrimitiveDecomposition, AlgebraError> {
        self.cache
            .primitive
            .get_or_init(|| self.compute_primitive_decomposition())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_primitive_decomposition(&self) -> Result<PrimitiveDecomposition, AlgebraError> {
        let mut idempotents = Vec::new();
        let mut rest = self.unit.clone();
        while !is_zero_vec(&rest) {
            let corner = self.corner(&rest)?;
            let local = corner.algebra.some_primitive_idempotent()?;
            let e = corner.embed(&local);
            debug_assert!(self.is_idempotent(&e));
            rest = self.sub(&rest, &e);
            idempotents.push(e);
        }
        let rad = self.radical().clone();
        let mut types = Vec::with_capacity(idempotents.len());
        let mut representatives: Vec<usize> = Vec::new();
        for (i, e) in idempotents.iter().enumerate() {
            let found = representatives.iter().position(|&r| {
                // e_r A e ⊄ rad  iff  eA ≅ e_r A
                let piece = self.sandwich(&idempotents[r], e);
                !piece.is_subspace_of(&rad)
            });
            match found {
                Some(t) => types.push(t),
                None => {
                    types.push(representatives.len());
                    representatives.push(i);
                }
            }
        }
        Ok(PrimitiveDecomposition {
            idempotents,
            types,
            representatives,
        })
    }

    /// Enumerates idempotents: all of them when `p^dim <= bound`, otherwise
    /// the subset sums of a complete set of primitive orthogonal idempotents
    /// (one per conjugacy class of decompositions, enough to realize every
    /// ideal of the form `AeA`, `eA` or `Ae`).
    pub fn enumerate_idempotents(&self, bound: u64) -> Result<IdempotentEnumeration, AlgebraError> {
        if let Some(size) = self.element_count().filter(|&s| s <= bound) {
            let _ = size;
            let elements = VectorOdometer::new(self.p, self.dim)
                .filter(|x| self.is_idempotent(x))
                .collect();
            return Ok(IdempotentEnumeration {
                elements,
                exhaustive: true,
            });
        }
        let decomp = self.primitive_decomposition()?;
        let m = decomp.idempotents.len();
        if m >= 24 || (1u64 << m) > bound.max(1 << 16) {
            return Err(AlgebraError::BoundExceeded {
                what: "idempotent subset sums",
                size: 1u64 << m.min(63),
                bound,
            });
        }
        let mut elements = Vec::with_capacity(1 << m);
        for mask in 0u64..(1 << m) {
            let mut e = self.zero_element();
            for (i, f) in decomp.idempotents.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    e = self.add(&e, f);
                }
            }
            elements.push(e);
        }
        Ok(IdempotentEnumeration {
            elements,
            exhaustive: false,
        })
    }

    /// `p^dim`, if it fits in a `u64`.
    pub fn element_count(&self) -> Option<u64> {
        (self.p as u128)
            .checked_pow(self.dim as u32)
            .and_then(|x| u64::try_from(x).ok())
    }

    /// All central idempotents: subset sums of the primitive idempotents of
    /// the center.
    pub fn central_idempotents(&self) -> Result<Vec<Vec<u64>>, AlgebraError> {
        if self.dim == 0 {
            return Ok(vec![Vec::new()]);
        }
        let z = self.center_algebra()?;
        let decomp = z.algebra.primitive_decomposition()?;
        let m = decomp.idempotents.len();
        let mut out = Vec::with_capacity(1 << m);
        for mask in 0u64..(1 << m) {
            let mut e = self.zero_element();
            for (i, f) in decomp.idempotents.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    e = self.add(&e, &z.embed(f));
                }
            }
            out.push(e);
        }
        out.sort();
        Ok(out)
    }

    /// Idempotent two-sided ideals `AeA`, deduplicated and sorted by
    /// (dimension, echelon basis). When `p^dim` is small enough, the full
    /// two-sided ideal lattice is scanned to confirm nothing is missing.
    pub fn idempotent_ideals(&self, bound: u64, lattice_bound: usize) -> Result<IdealScan, AlgebraError> {
        let idems = self.enumerate_idempotents(bound)?;
        let mut set = BTreeSet::new();
        for e in &idems.elements {
            let ideal = self.trace_ideal(e);
            debug_assert!(ideal.idempotent);
            set.insert(ideal);
        }
        let ideals: Vec<Ideal> = set.into_iter().collect();
        let lattice_checked = match self.two_sided_ideal_lattice(lattice_bound) {
            Ok(all) => {
                let from_lattice: Vec<Ideal> = all.into_iter().filter(|i| i.idempotent).collect();
                Some(from_lattice == ideals)
            }
            Err(_) => None,
        };
        Ok(IdealScan {
            ideals,
            idempotents_exhaustive: idems.exhaustive,
            lattice_checked,
        })
    }

    /// Every two-sided ideal, by closure from the zero ideal.
    pub fn two_sided_ideal_lattice(&self, bound: usize) -> Result<Vec<Ideal>, AlgebraError> {
        let zero = self.ideal_closure(&self.zero_subspace(), Sidedness::TwoSided);
        let mut seen: BTreeSet<Subspace> = BTreeSet::new();
        seen.insert(zero.span.clone());
        let mut out = vec![zero];
        let mut frontier = vec![self.zero_subspace()];
        while let Some(u) = frontier.pop() {
            let free = u.free_columns();
            for c in projective_points(self.p, free.len()) {
                let mut v = vec![0u64; self.dim];
                for (&col, &x) in free.iter().zip(&c) {
                    v[col] = x;
                }
                let ideal = self.ideal_closure(&u.with_vector(&v), Sidedness::TwoSided);
                if seen.insert(ideal.span.clone()) {
                    if seen.len() > bound {
                        return Err(AlgebraError::BoundExceeded {
                            what: "two-sided ideal lattice",
                            size: seen.len() as u64,
                            bound: bound as u64,
                        });
                    }
                    frontier.push(ideal.span.clone());
                    out.push(ideal);
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

/// A subalgebra (corner, center, ...) together with its embedding.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub algebra: Algebra,
    /// Rows are the images of the subalgebra basis in the ambient algebra.
    pub embedding: Matrix,
    pub span: Subspace,
}

impl Embedded {
    pub fn embed(&self, x: &[u64]) -> Vec<u64> {
        if x.is_empty() {
            return vec![0; self.span.ambient_dim()];
        }
        self.embedding.apply(x)
    }

    /// Coordinates of an ambient element lying in the subalgebra.
    pub fn restrict(&self, x: &[u64]) -> Option<Vec<u64>> {
        self.span.coordinates(x)
    }

    /// Embedded images of the subalgebra basis.
    pub fn embedded_basis(&self) -> Vec<Vec<u64>> {
        self.embedding.row_vecs()
    }
}

#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: Algebra,
    /// `dim A x dim A/I`.
    pub projection: Matrix,
    /// `dim A/I x dim A`, a linear (not multiplicative) section.
    pub section: Matrix,
    pub kernel: Subspace,
}

impl QuotientAlgebra {
    pub fn project(&self, x: &[u64]) -> Vec<u64> {
        self.projection.apply(x)
    }

    pub fn lift(&self, x: &[u64]) -> Vec<u64> {
        self.section.apply(x)
    }
}

#[derive(Clone, Debug)]
pub struct Triangular {
    pub algebra: Algebra,
    pub e_c: Vec<u64>,
    pub e_b: Vec<u64>,
    /// `(dim C, dim M, dim B)`.
    pub dims: (usize, usize, usize),
}

#[derive(Clone, Debug)]
pub struct IdempotentEnumeration {
    pub elements: Vec<Vec<u64>>,
    pub exhaustive: bool,
}

#[derive(Clone, Debug)]
pub struct IdealScan {
    pub ideals: Vec<Ideal>,
    pub idempotents_exhaustive: bool,
    /// `Some(true)` when the exhaustive lattice scan agrees, `None` when it
    /// was skipped for size.
    pub lattice_checked: Option<bool>,
}

// ---------------------------------------------------------------------------
// quivers

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// One term `coeff * path` of a relation; paths are arrow labels in
/// composition order (left to right).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// `coeff * path`, arrows by index.
type Term = (u64, Vec<usize>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<RelationTerm>>,
}

impl Quiver {
    pub fn new(vertices: usize) -> Self {
        Quiver {
            vertices,
            ..Default::default()
        }
    }

    pub fn arrow(mut self, source: usize, target: usize, label: &str) -> Self {
        self.arrows.push(Arrow {
            source,
            target,
            label: label.into(),
        });
        self
    }

    pub fn relation(mut self, terms: &[(i64, &[&str])]) -> Self {
        self.relations.push(
            terms
                .iter()
                .map(|(c, path)| RelationTerm {
                    coeff: *c,
                    path: path.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
        );
        self
    }

    fn arrow_index(&self, label: &str) -> Result<usize, AlgebraError> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| AlgebraError::BadQuiver(format!("unknown arrow {label}")))
    }

    fn path_ends(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows[*path.first()?].source;
        let mut at = first;
        for &a in path {
            if self.arrows[a].source != at {
                return None;
            }
            at = self.arrows[a].target;
        }
        Some((first, at))
    }

    /// Composable arrow sequences of the given length, in lexicographic order.
    fn paths_of_length(&self, len: usize) -> Vec<Vec<usize>> {
        let mut paths: Vec<Vec<usize>> = vec![Vec::new()];
        for step in 0..len {
            let mut next = Vec::new();
            for path in &paths {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if step == 0 || self.arrows[*path.last().unwrap()].target == a.source {
                        let mut q = path.clone();
                        q.push(ai);
                        next.push(q);
                    }
                }
            }
            paths = next;
        }
        paths
    }

    /// The path algebra modulo the (homogeneous) relations. Paths compose
    /// left to right: `a * b` is nonzero iff `target(a) = source(b)`.
    pub fn path_algebra(&self, p: u64, length_bound: usize) -> Result<Algebra, AlgebraError> {
        let p = check_modulus(p)?;
        if self.vertices == 0 {
            return Err(AlgebraError::BadQuiver("no vertices".into()));
        }
        for a in &self.arrows {
            if a.source >= self.vertices || a.target >= self.vertices {
                return Err(AlgebraError::BadQuiver(format!("arrow {} out of range", a.label)));
            }
        }
        let mut labels_seen = BTreeSet::new();
        if !self.arrows.iter().all(|a| labels_seen.insert(a.label.clone())) {
            return Err(AlgebraError::BadQuiver("duplicate arrow label".into()));
        }
        // relations as (degree, terms)
        let mut rels: Vec<(usize, Vec<Term>)> = Vec::new();
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut terms = Vec::new();
            let mut shape = None;
            for t in rel {
                let path: Vec<usize> = t
                    .path
                    .iter()
                    .map(|l| self.arrow_index(l))
                    .collect::<Result<_, _>>()?;
                let ends = self.path_ends(&path).ok_or_else(|| {
                    AlgebraError::BadQuiver(format!("relation {ri} has a non-composable path"))
                })?;
                match shape {
                    None => shape = Some((path.len(), ends)),
                    Some((len, e)) => {
                        if len != path.len() {
                            return Err(AlgebraError::NonHomogeneousRelation(ri));
                        }
                        if e != ends {
                            return Err(AlgebraError::BadQuiver(format!(
                                "relation {ri} mixes endpoints"
                            )));
                        }
                    }
                }
                terms.push((t.coeff.rem_euclid(p as i64) as u64, path));
            }
            if let Some((len, _)) = shape {
                rels.push((len, terms));
            }
        }

        // degree-wise quotient bases
        struct Degree {
            paths: Vec<Vec<usize>>,
            relations: Subspace,
            basis_offset: usize,
        }
        let mut degrees: Vec<Degree> = Vec::new();
        let mut dim = self.vertices;
        let mut d = 1;
        loop {
            if d > length_bound {
                return Err(AlgebraError::InfiniteDimensional {
                    bound: length_bound,
                });
            }
            let paths = self.paths_of_length(d);
            if paths.is_empty() {
                break;
            }
            let index = |q: &[usize]| paths.iter().position(|x| x == q);
            let mut rows = Vec::new();
            for (len, terms) in &rels {
                if *len > d {
                    continue;
                }
                let pad = d - len;
                for left_len in 0..=pad {
                    let lefts = if left_len == 0 { vec![Vec::new()] } else { self.paths_of_length(left_len) };
                    let right_len = pad - left_len;
                    let rights = if right_len == 0 { vec![Vec::new()] } else { self.paths_of_length(right_len) };
                    for u in &lefts {
                        for v in &rights {
                            let mut row = vec![0u64; paths.len()];
                            let mut any = false;
                            for (c, t) in terms {
                                let full: Vec<usize> =
                                    u.iter().chain(t.iter()).chain(v.iter()).copied().collect();
                                if let Some(ix) = index(&full) {
                                    row[ix] = (row[ix] + c) % p;
                                    any = true;
                                }
                            }
                            if any {
                                rows.push(row);
                            }
                        }
                    }
                }
            }
            let relations = Subspace::from_vectors(p, paths.len(), &rows);
            if relations.is_full() {
                break;
            }
            let count = relations.codim();
            degrees.push(Degree {
                paths,
                relations,
                basis_offset: dim,
            });
            dim += count;
            d += 1;
        }

        // labels and the reduction of a path into basis coordinates
        let mut labels: Vec<String> = (0..self.vertices).map(|v| format!("e{}", v + 1)).collect();
        for deg in &degrees {
            for c in deg.relations.free_columns() {
                labels.push(
                    deg.paths[c]
                        .iter()
                        .map(|&a| self.arrows[a].label.as_str())
                        .collect::<Vec<_>>()
                        .join("*"),
                );
            }
        }
        let reduce_path = |path: &[usize]| -> Vec<u64> {
            let mut out = vec![0u64; dim];
            let deg_ix = path.len() - 1;
            if let Some(deg) = degrees.get(deg_ix) {
                let ix = deg.paths.iter().position(|x| x == path).expect("path listed");
                let coords = deg.relations.quotient_coordinates(&unit_vec(deg.paths.len(), ix));
                for (k, c) in coords.into_iter().enumerate() {
                    out[deg.basis_offset + k] = c;
                }
            }
            out
        };
        // basis element descriptions: vertex or a representative path
        enum Basis {
            Vertex(usize),
            Path(Vec<usize>),
        }
        let mut basis: Vec<Basis> = (0..self.vertices).map(Basis::Vertex).collect();
        for deg in &degrees {
            for c in deg.relations.free_columns() {
                basis.push(Basis::Path(deg.paths[c].clone()));
            }
        }
        let ends = |b: &Basis| match b {
            Basis::Vertex(v) => (*v, *v),
            Basis::Path(q) => self.path_ends(q).expect("composable"),
        };
        let mut table = vec![0u64; dim * dim * dim];
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                if ends(bi).1 != ends(bj).0 {
                    continue;
                }
                let prod = match (bi, bj) {
                    (Basis::Vertex(_), _) => unit_vec(dim, j),
                    (_, Basis::Vertex(_)) => unit_vec(dim, i),
                    (Basis::Path(a), Basis::Path(b)) => {
                        let full: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                        reduce_path(&full)
                    }
                };
                table[(i * dim + j) * dim..(i * dim + j + 1) * dim].copy_from_slice(&prod);
            }
        }
        let mut unit = vec![0u64; dim];
        unit[..self.vertices].iter_mut().for_each(|x| *x = 1);
        Algebra::from_flat(p, dim, table, unit, Some(labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn lt2() -> Algebra {
        corpus::lt2(2)
    }

    #[test]
    fn field_is_valid() {
        let f = Algebra::field(2).unwrap();
        assert_eq!(f.dim(), 1);
        assert!(f.is_semisimple());
    }

    #[test]
    fn associativity_violation_detected() {
        // b0 = 1, b1*b1 = b1 + b0 ... break associativity via b1*b2
        let mut table = Algebra::full_matrix(2, 2).unwrap().table_rows();
        table[1][2][0] = 0; // e12 e21 should be e11
        let unit = vec![1, 0, 0, 1];
        let err = Algebra::from_table(2, &table, &unit, None).unwrap_err();
        assert!(matches!(err, AlgebraError::AssociativityViolation { .. }), "{err}");
    }

    #[test]
    fn unit_violation_detected() {
        let m2 = Algebra::full_matrix(2, 2).unwrap();
        let err = Algebra::from_table(2, &m2.table_rows(), &[1, 0, 0, 0], None).unwrap_err();
        assert_eq!(err, AlgebraError::UnitViolation);
    }

    #[test]
    fn matrix_units_form_m2() {
        let m2 = Algebra::full_matrix(2, 2).unwrap();
        assert_eq!(m2.dim(), 4);
        assert!(m2.is_semisimple());
        assert_eq!(m2.central_idempotents().unwrap().len(), 2);
    }

    #[test]
    fn path_algebra_examples() {
        let point = Quiver::new(1).path_algebra(2, 8).unwrap();
        assert_eq!(point.dim(), 1);
        let kron = Quiver::new(2).arrow(0, 1, "a").arrow(0, 1, "b").path_algebra(2, 8).unwrap();
        assert_eq!(kron.dim(), 4);
        let loop_q = Quiver::new(1).arrow(0, 0, "x");
        assert_eq!(
            loop_q.path_algebra(2, 6).unwrap_err(),
            AlgebraError::InfiniteDimensional { bound: 6 }
        );
        let dual_numbers = loop_q.relation(&[(1, &["x", "x"])]).path_algebra(3, 6).unwrap();
        assert_eq!(dual_numbers.dim(), 2);
    }

    #[test]
    fn commutative_square_relation() {
        // 0 -a-> 1 -b-> 3, 0 -c-> 2 -d-> 3 with ab = cd
        let q = Quiver::new(4)
            .arrow(0, 1, "a")
            .arrow(1, 3, "b")
            .arrow(0, 2, "c")
            .arrow(2, 3, "d")
            .relation(&[(1, &["a", "b"]), (-1, &["c", "d"])]);
        let alg = q.path_algebra(3, 5).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        assert!(q.clone().relation(&[(1, &["a"]), (1, &["a", "b"])]).path_algebra(3, 5).is_err());
    }

    #[test]
    fn lt2_idempotents() {
        let a = lt2();
        let idems = a.enumerate_idempotents(DEFAULT_EXHAUSTIVE_BOUND).unwrap();
        assert!(idems.exhaustive);
        assert_eq!(idems.elements.len(), 6);
        assert_eq!(a.central_idempotents().unwrap().len(), 2);
    }

    #[test]
    fn ss2_idempotents() {
        let ss2 = corpus::ss2(2);
        let idems = ss2.enumerate_idempotents(DEFAULT_EXHAUSTIVE_BOUND).unwrap();
        assert_eq!(idems.elements.len(), 4);
        assert_eq!(ss2.central_idempotents().unwrap().len(), 4);
        let scan = ss2.idempotent_ideals(DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(scan.ideals.len(), 4);
    }

    #[test]
    fn structural_idempotents_realize_same_ideals() {
        for alg in [lt2(), corpus::ss2(2), corpus::kronecker(2), Algebra::full_matrix(2, 2).unwrap()] {
            let all = alg.idempotent_ideals(DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_LATTICE_BOUND).unwrap();
            let structural = alg.idempotent_ideals(1, DEFAULT_LATTICE_BOUND).unwrap();
            assert!(!structural.idempotents_exhaustive);
            assert_eq!(all.ideals, structural.ideals);
            assert_eq!(all.lattice_checked, Some(true));
        }
    }

    #[test]
    fn lt2_ideals_and_annihilators() {
        let a = lt2();
        // basis e11, e21, e22
        let e22 = vec![0, 0, 1];
        let bottom = a.ideal_generated(&[e22], Sidedness::TwoSided);
        assert_eq!(bottom.dim(), 2);
        assert_eq!(bottom.span(), &a.left_multiple(&[0, 0, 1]));
        let scan = a.idempotent_ideals(DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_LATTICE_BOUND).unwrap();
        assert_eq!(scan.ideals.len(), 4);
        assert_eq!(scan.lattice_checked, Some(true));

        let first_col = a.right_multiple(&[1, 0, 0]);
        let (lann, _) = a.annihilators(bottom.span());
        assert_eq!(lann.span(), &first_col);
        let (lann2, _) = a.annihilators(&first_col);
        assert!(lann2.span().is_zero());
        let (lann_full, _) = a.annihilators(&a.full_subspace());
        assert!(lann_full.span().is_zero());
        assert!(a.ideal_generated(&[], Sidedness::TwoSided).span().is_zero());
        assert!(a.ideal_generated(&[a.unit().to_vec()], Sidedness::TwoSided).span().is_full());
    }

    #[test]
    fn radical_examples() {
        assert!(Algebra::full_matrix(2, 2).unwrap().radical().is_zero());
        let r = lt2().radical().clone();
        assert_eq!(r, Subspace::from_vectors(2, 3, &[vec![0, 1, 0]]));
        let kron = corpus::kronecker(2);
        // arrow ideal: the two arrows
        assert_eq!(kron.radical().dim(), 2);
        assert!(Algebra::zero(2).is_semisimple());
        assert!(!lt2().is_semisimple());
    }

    #[test]
    fn hereditary_examples() {
        assert!(corpus::ss2(3).is_hereditary().unwrap());
        assert!(corpus::kronecker(2).is_hereditary().unwrap());
        assert!(!corpus::dual_numbers(2).is_hereditary().unwrap());
        assert!(lt2().is_hereditary().unwrap());
    }

    #[test]
    fn corner_quotient_opposite() {
        let a = lt2();
        let c = a.corner(a.unit()).unwrap();
        assert_eq!(c.algebra, a);
        let e11 = a.corner(&[1, 0, 0]).unwrap();
        assert_eq!(e11.algebra.dim(), 1);
        assert_eq!(a.corner(&[1, 1, 1]).unwrap_err(), AlgebraError::NotIdempotent);

        let bottom = a.left_multiple(&[0, 0, 1]);
        let q = a.quotient(&bottom).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.algebra.table_rows(), vec![vec![vec![1]]]);
        assert_eq!(a.quotient(&a.zero_subspace()).unwrap().algebra, a);
        assert_eq!(a.quotient(&a.full_subspace()).unwrap().algebra.dim(), 0);
        let left_only = a.left_multiple(&[1, 0, 0]); // e11 A = span{e11} is not two-sided
        assert_eq!(a.quotient(&left_only).unwrap_err(), AlgebraError::NotTwoSided);

        let op = a.opposite();
        assert_eq!(op.opposite(), a);
        assert_ne!(op, a);
        // op multiplication is the transposed table
        assert_eq!(op.basis_product(1, 0), a.basis_product(0, 1));
        let comm = corpus::ss2(2);
        assert_eq!(comm.opposite(), comm);
    }

    #[test]
    fn primitive_decomposition_is_complete() {
        for alg in [lt2(), corpus::kronecker(3), Algebra::full_matrix(2, 2).unwrap(), corpus::dual_numbers(2)] {
            let d = alg.primitive_decomposition().unwrap();
            let mut sum = alg.zero_element();
            for (i, e) in d.idempotents.iter().enumerate() {
                assert!(alg.is_idempotent(e));
                for f in &d.idempotents[i + 1..] {
                    assert!(is_zero_vec(&alg.mul(e, f)));
                    assert!(is_zero_vec(&alg.mul(f, e)));
                }
                // eAe is local: its radical has codimension equal to dim of a field
                let corner = alg.corner(e).unwrap();
                let crad = corner.algebra.radical();
                let q = corner.algebra.quotient(crad).unwrap();
                assert!(q.algebra.is_commutative());
                sum = alg.add(&sum, e);
            }
            assert_eq!(sum, alg.unit());
        }
        let m2 = Algebra::full_matrix(2, 2).unwrap();
        assert_eq!(m2.primitive_decomposition().unwrap().type_count(), 1);
    }

    /// Independent radical oracle: x is in rad A iff a*x is nilpotent for all a.
    fn brute_radical(a: &Algebra) -> Subspace {
        let members: Vec<Vec<u64>> = VectorOdometer::new(a.modulus(), a.dim())
            .filter(|x| VectorOdometer::new(a.modulus(), a.dim()).all(|y| a.is_nilpotent_element(&a.mul(&y, x))))
            .collect();
        Subspace::from_vectors(a.modulus(), a.dim(), &members)
    }

    #[test]
    fn radical_matches_nilpotency_oracle() {
        for alg in [
            lt2(),
            corpus::kronecker(2),
            corpus::dual_numbers(3),
            Algebra::full_matrix(2, 2).unwrap(),
            corpus::ss2(3),
        ] {
            let rad = alg.radical().clone();
            assert_eq!(rad, brute_radical(&alg), "{alg:?}");
            // nilpotent ideal with semisimple quotient
            let mut power = rad.clone();
            for _ in 0..alg.dim() {
                power = alg.product_space(&power, &rad);
            }
            assert!(power.is_zero());
            assert!(alg.quotient(&rad).unwrap().algebra.is_semisimple());
        }
    }
}
