//! Right modules as explicit representations: one `d x d` matrix per algebra
//! basis element, acting on row vectors (`v . b = v * rho(b)`).

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Embedded};
use crate::exactlinalg::{
    is_zero_vec, projective_points, solve, unit_vec, LinalgError, Matrix, Subspace,
    VectorOdometer,
};

/// Default cap on the number of submodules visited by lattice scans.
pub const DEFAULT_SUBMODULE_BOUND: usize = 50_000;

/// Hom spaces up to this many elements are scanned exhaustively when looking
/// for isomorphisms; larger ones are sampled.
const ISO_EXHAUSTIVE_LIMIT: u64 = 1 << 14;
const ISO_SAMPLES: usize = 96;
const ISO_SEED: u64 = 0x7f4a_7c15;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("action data malformed: {0}")]
    BadAction(String),
    #[error("module law fails: rho(b{0}) rho(b{1}) != rho(b{0} b{1})")]
    LawViolation(usize, usize),
    #[error("rho(1) is not the identity")]
    UnitViolation,
    #[error("{what}: exceeded bound {bound}")]
    BoundExceeded { what: &'static str, bound: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl From<ModuleError> for AlgebraError {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::Algebra(a) => a,
            ModuleError::Linalg(l) => AlgebraError::Linalg(l),
            other => AlgebraError::BadTable(other.to_string()),
        }
    }
}

// ---------------------------------------------------------------------------
// action-level helpers, shared with the algebra layer

/// Smallest subspace containing `seeds` and invariant under every action.
pub fn spin(p: u64, dim: usize, actions: &[Matrix], seeds: &[Vec<u64>]) -> Subspace {
    let mut span = Subspace::from_vectors(p, dim, seeds);
    let mut frontier = span.basis_vecs();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for a in actions {
                let w = a.apply(v);
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

/// A simple submodule of the invariant subspace `within`: shrink to a
/// strictly smaller cyclic submodule while one exists; the final candidate
/// is certified by trying every line in it.
pub fn find_simple_submodule(p: u64, actions: &[Matrix], within: &Subspace) -> Subspace {
    let dim = within.ambient_dim();
    let mut u = within.clone();
    'shrink: loop {
        if u.dim() <= 1 {
            return u;
        }
        for v in u.basis_vecs() {
            let w = spin(p, dim, actions, &[v]);
            if w.dim() < u.dim() {
                u = w;
                continue 'shrink;
            }
        }
        for c in projective_points(p, u.dim()) {
            let w = spin(p, dim, actions, &[u.combine(&c)]);
            if w.dim() < u.dim() {
                u = w;
                continue 'shrink;
            }
        }
        return u;
    }
}

pub fn restrict_actions(actions: &[Matrix], sub: &Subspace) -> Vec<Matrix> {
    let pivots = sub.pivots().to_vec();
    actions
        .iter()
        .map(|a| (sub.basis() * a).select_cols(&pivots))
        .collect()
}

pub fn quotient_actions(actions: &[Matrix], sub: &Subspace) -> Vec<Matrix> {
    let proj = sub.quotient_map();
    let sec = section_matrix(sub);
    actions.iter().map(|a| &(&sec * a) * &proj).collect()
}

/// Unit vectors at the free columns of `sub`: a linear section of the quotient map.
fn section_matrix(sub: &Subspace) -> Matrix {
    let free = sub.free_columns();
    let mut m = Matrix::zeros(sub.modulus(), free.len(), sub.ambient_dim());
    for (r, &c) in free.iter().enumerate() {
        m.set(r, c, 1);
    }
    m
}

/// Coefficient matrix of the system `rho_M(g) F = F rho_N(g)` in the
/// unknowns `F[k][l]` (index `k * dN + l`).
fn intertwiner_system(p: u64, dm: usize, dn: usize, src: &[Matrix], tgt: &[Matrix]) -> Matrix {
    let unknowns = dm * dn;
    let mut rows = Vec::with_capacity(src.len() * unknowns);
    for (a, b) in src.iter().zip(tgt) {
        for i in 0..dm {
            for l in 0..dn {
                let mut row = vec![0u64; unknowns];
                for k in 0..dm {
                    let c = a.get(i, k);
                    if c != 0 {
                        row[k * dn + l] = (row[k * dn + l] + c) % p;
                    }
                }
                for k in 0..dn {
                    let c = b.get(k, l);
                    if c != 0 {
                        row[i * dn + k] = (row[i * dn + k] + p - c) % p;
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_vecs(p, unknowns, &rows)
}

/// Basis of the space of intertwiners for the given paired action lists.
pub fn hom_basis(p: u64, dm: usize, dn: usize, src: &[Matrix], tgt: &[Matrix]) -> Vec<Matrix> {
    if dm == 0 || dn == 0 {
        return Vec::new();
    }
    let sys = intertwiner_system(p, dm, dn, src, tgt);
    let ker = if sys.rows() == 0 {
        Matrix::identity(p, dm * dn)
    } else {
        sys.kernel()
    };
    ker.row_vecs()
        .into_iter()
        .map(|v| Matrix::from_flat(p, dm, dn, v))
        .collect()
}

/// An intertwiner `F: M -> U` with `F` restricted to `U` the identity.
pub fn find_retraction_actions(actions: &[Matrix], sub: &Subspace) -> Option<Matrix> {
    let p = sub.modulus();
    let d = sub.ambient_dim();
    let r = sub.dim();
    if r == 0 {
        return Some(Matrix::zeros(p, d, 0));
    }
    let restricted = restrict_actions(actions, sub);
    let sys = intertwiner_system(p, d, r, actions, &restricted);
    let mut rows = sys.row_vecs();
    let mut rhs = vec![0u64; rows.len()];
    for (s, basis_row) in sub.basis_vecs().iter().enumerate() {
        for l in 0..r {
            let mut row = vec![0u64; d * r];
            for (k, &c) in basis_row.iter().enumerate() {
                row[k * r + l] = c;
            }
            rows.push(row);
            rhs.push(u64::from(s == l));
        }
    }
    let a = Matrix::from_vecs(p, d * r, &rows);
    let b = Matrix::from_vecs(p, 1, &rhs.into_iter().map(|x| vec![x]).collect::<Vec<_>>());
    let sol = solve(&a, &b).expect("shapes agree")?;
    Some(Matrix::from_flat(p, d, r, sol.particular.data().to_vec()))
}

/// Composition factors of a representation, one per isomorphism class.
pub fn composition_factors(p: u64, actions: &[Matrix]) -> Vec<Vec<Matrix>> {
    let mut current: Vec<Matrix> = actions.to_vec();
    let mut dim = actions.first().map_or(0, |a| a.rows());
    let mut factors: Vec<Vec<Matrix>> = Vec::new();
    while dim > 0 {
        let simple = find_simple_submodule(p, &current, &Subspace::full(p, dim));
        let s = restrict_actions(&current, &simple);
        let ds = simple.dim();
        let known = factors.iter().any(|f| {
            f[0].rows() == ds && !hom_basis(p, ds, ds, &s, f).is_empty()
        });
        if !known {
            factors.push(s);
        }
        current = quotient_actions(&current, &simple);
        dim -= ds;
    }
    factors
}

// ---------------------------------------------------------------------------
// modules

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightModule {
    p: u64,
    dim: usize,
    action: Vec<Matrix>,
}

impl RightModule {
    /// Validates `rho(1) = I` and `rho(b_i) rho(b_j) = rho(b_i b_j)`.
    pub fn new(alg: &Algebra, action: Vec<Matrix>) -> Result<Self, ModuleError> {
        let m = Self::from_actions(alg.modulus(), action, alg.dim())?;
        m.validate(alg)?;
        Ok(m)
    }

    fn from_actions(p: u64, action: Vec<Matrix>, n: usize) -> Result<Self, ModuleError> {
        if action.len() != n {
            return Err(ModuleError::BadAction(format!(
                "{} action matrices for an algebra of dimension {n}",
                action.len()
            )));
        }
        let dim = action.first().map_or(0, |a| a.rows());
        if action
            .iter()
            .any(|a| a.rows() != dim || a.cols() != dim || a.modulus() != p)
        {
            return Err(ModuleError::BadAction("action matrices must be square of equal size".into()));
        }
        Ok(RightModule { p, dim, action })
    }

    pub fn validate(&self, alg: &Algebra) -> Result<(), ModuleError> {
        if self.action.len() != alg.dim() {
            return Err(ModuleError::BadAction("action count".into()));
        }
        if self.rho(alg.unit()) != Matrix::identity(self.p, self.dim) {
            return Err(ModuleError::UnitViolation);
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = &self.action[i] * &self.action[j];
                if lhs != self.rho(alg.basis_product(i, j)) {
                    return Err(ModuleError::LawViolation(i, j));
                }
            }
        }
        Ok(())
    }

    /// Trusted constructor for actions produced by exact operations.
    pub(crate) fn from_trusted(p: u64, dim: usize, action: Vec<Matrix>) -> Self {
        debug_assert!(action.iter().all(|a| a.rows() == dim && a.cols() == dim));
        RightModule { p, dim, action }
    }

    pub fn zero(alg: &Algebra) -> Self {
        let p = alg.modulus();
        RightModule {
            p,
            dim: 0,
            action: vec![Matrix::zeros(p, 0, 0); alg.dim()],
        }
    }

    /// `A_A`.
    pub fn regular(alg: &Algebra) -> Self {
        RightModule {
            p: alg.modulus(),
            dim: alg.dim(),
            action: alg.right_regular_actions(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn action(&self, j: usize) -> &Matrix {
        &self.action[j]
    }

    /// `rho(x)` for an algebra element in coordinates.
    pub fn rho(&self, x: &[u64]) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.dim, self.dim);
        for (j, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &self.action[j]);
            }
        }
        m
    }

    pub fn act(&self, v: &[u64], x: &[u64]) -> Vec<u64> {
        self.rho(x).apply(v)
    }

    /// Actions of the algebra's chosen generators (enough for Hom systems).
    pub fn generator_actions(&self, alg: &Algebra) -> Vec<Matrix> {
        alg.generators().iter().map(|g| self.rho(g)).collect()
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.p, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.p, self.dim)
    }

    pub fn is_invariant(&self, span: &Subspace) -> bool {
        span.basis_vecs()
            .iter()
            .all(|v| self.action.iter().all(|a| span.contains(&a.apply(v))))
    }

    pub fn submodule_generated(&self, vectors: &[Vec<u64>]) -> Submodule {
        let span = spin(self.p, self.dim, &self.action, vectors);
        self.submodule_unchecked(&span)
    }

    pub fn submodule(&self, span: &Subspace) -> Result<Submodule, ModuleError> {
        if span.ambient_dim() != self.dim {
            return Err(ModuleError::BadAction("ambient mismatch".into()));
        }
        if !self.is_invariant(span) {
            return Err(ModuleError::NotInvariant);
        }
        Ok(self.submodule_unchecked(span))
    }

    fn submodule_unchecked(&self, span: &Subspace) -> Submodule {
        Submodule {
            module: RightModule {
                p: self.p,
                dim: span.dim(),
                action: restrict_actions(&self.action, span),
            },
            span: span.clone(),
        }
    }

    pub fn quotient(&self, span: &Subspace) -> Result<QuotientModule, ModuleError> {
        if !self.is_invariant(span) {
            return Err(ModuleError::NotInvariant);
        }
        Ok(QuotientModule {
            module: RightModule {
                p: self.p,
                dim: span.codim(),
                action: quotient_actions(&self.action, span),
            },
            projection: span.quotient_map(),
            section: section_matrix(span),
            kernel: span.clone(),
        })
    }

    pub fn direct_sum(parts: &[&RightModule]) -> RightModule {
        assert!(!parts.is_empty(), "direct sum of an empty family needs an algebra");
        let p = parts[0].p;
        let n = parts[0].action.len();
        let action = (0..n)
            .map(|j| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.action[j]).collect();
                Matrix::block_diag(p, &blocks)
            })
            .collect();
        RightModule {
            p,
            dim: parts.iter().map(|m| m.dim).sum(),
            action,
        }
    }

    pub fn power(&self, n: usize) -> RightModule {
        if n == 0 {
            return RightModule {
                p: self.p,
                dim: 0,
                action: vec![Matrix::zeros(self.p, 0, 0); self.action.len()],
            };
        }
        RightModule::direct_sum(&vec![self; n])
    }

    /// `D(M) = Hom_k(M, k)`, a right module over the opposite algebra.
    pub fn dual(&self) -> RightModule {
        RightModule {
            p: self.p,
            dim: self.dim,
            action: self.action.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Restriction of scalars along an algebra map `phi: B -> A` whose rows
    /// are the images of the basis of `B`.
    pub fn pullback(&self, phi: &Matrix) -> RightModule {
        let action = phi.row_vecs().iter().map(|x| self.rho(x)).collect();
        RightModule {
            p: self.p,
            dim: self.dim,
            action,
        }
    }

    /// `N e` as a module over the corner `eAe`.
    pub fn restrict_to_corner(&self, corner: &Embedded) -> RightModule {
        let e_img = corner.embed(corner.algebra.unit());
        let span = self.rho(&e_img).row_space();
        let action = corner
            .embedded_basis()
            .iter()
            .map(|x| {
                let a = self.rho(x);
                (span.basis() * &a).select_cols(span.pivots())
            })
            .collect();
        RightModule {
            p: self.p,
            dim: span.dim(),
            action,
        }
    }

    /// `M . S` for a subspace `S` of the algebra.
    pub fn times_subspace(&self, s: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        let elems = s.basis_vecs();
        let mats: Vec<Matrix> = elems.iter().map(|x| self.rho(x)).collect();
        for i in 0..self.dim {
            let v = unit_vec(self.dim, i);
            for m in &mats {
                rows.push(m.apply(&v));
            }
        }
        Subspace::from_vectors(self.p, self.dim, &rows)
    }

    /// `{v : v . S = 0}`.
    pub fn annihilated_by(&self, s: &Subspace) -> Subspace {
        let mut stacked = Matrix::zeros(self.p, self.dim, 0);
        for x in s.basis_vecs() {
            stacked = stacked.hstack(&self.rho(&x));
        }
        if stacked.cols() == 0 {
            return self.full_space();
        }
        stacked.left_kernel().row_space()
    }

    /// Annihilator in the algebra: `{x : M x = 0}`.
    pub fn annihilator(&self, alg: &Algebra) -> Subspace {
        let n = alg.dim();
        let mut m = Matrix::zeros(self.p, n, self.dim * self.dim);
        for j in 0..n {
            m.row_mut(j).copy_from_slice(self.action[j].data());
        }
        if self.dim == 0 {
            return alg.full_subspace();
        }
        m.left_kernel().row_space()
    }

    pub fn is_faithful(&self, alg: &Algebra) -> bool {
        self.annihilator(alg).is_zero()
    }

    /// `M . rad A`.
    pub fn radical_submodule(&self, alg: &Algebra) -> Subspace {
        self.times_subspace(alg.radical())
    }

    pub fn socle(&self, alg: &Algebra) -> Subspace {
        self.annihilated_by(alg.radical())
    }
}

#[derive(Clone, Debug)]
pub struct Submodule {
    pub module: RightModule,
    /// Rows of `span.basis()` give the inclusion map.
    pub span: Subspace,
}

impl Submodule {
    pub fn inclusion(&self) -> &Matrix {
        self.span.basis()
    }
}

#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub module: RightModule,
    pub projection: Matrix,
    pub section: Matrix,
    pub kernel: Subspace,
}

/// A module homomorphism `F` with `rho_src(a) F = F rho_tgt(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn is_homomorphism(&self, src: &RightModule, tgt: &RightModule) -> bool {
        self.matrix.rows() == src.dim
            && self.matrix.cols() == tgt.dim
            && src
                .action
                .iter()
                .zip(&tgt.action)
                .all(|(a, b)| (a * &self.matrix) == (&self.matrix * b))
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.left_kernel().row_space()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.row_space()
    }
}

// ---------------------------------------------------------------------------
// bimodules

/// A `(B, C)`-bimodule: left `B` action as right `B^op` matrices, right `C`
/// action as right `C` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    p: u64,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(b: &Algebra, c: &Algebra, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self, ModuleError> {
        let dim = left
            .first()
            .or(right.first())
            .map_or(0, |m| m.rows());
        let bm = Bimodule {
            p: b.modulus(),
            dim,
            left,
            right,
        };
        bm.validate(b, c)?;
        Ok(bm)
    }

    pub fn zero(b: &Algebra, c: &Algebra) -> Self {
        let p = b.modulus();
        Bimodule {
            p,
            dim: 0,
            left: vec![Matrix::zeros(p, 0, 0); b.dim()],
            right: vec![Matrix::zeros(p, 0, 0); c.dim()],
        }
    }

    /// A left `B`-module (right `B^op`-module) with `C = F_p` acting by scalars.
    pub fn from_left_module(b: &Algebra, c: &Algebra, m: &RightModule) -> Result<Self, ModuleError> {
        if c.dim() != 1 {
            return Err(ModuleError::BadAction("scalar right action needs C = F_p".into()));
        }
        let right = vec![Matrix::identity(m.p, m.dim).scale(c.unit()[0])];
        Bimodule::new(b, c, m.action.clone(), right)
    }

    /// From a right module over `B^op (x) C` (basis index `i * dim C + j`).
    pub fn from_tensor_module(b: &Algebra, c: &Algebra, m: &RightModule) -> Result<Self, ModuleError> {
        let (nb, nc) = (b.dim(), c.dim());
        let left = (0..nb)
            .map(|i| {
                let mut x = vec![0u64; nb * nc];
                for (j, &u) in c.unit().iter().enumerate() {
                    x[i * nc + j] = u;
                }
                m.rho(&x)
            })
            .collect();
        let right = (0..nc)
            .map(|j| {
                let mut x = vec![0u64; nb * nc];
                for (i, &u) in b.unit().iter().enumerate() {
                    x[i * nc + j] = u;
                }
                m.rho(&x)
            })
            .collect();
        Bimodule::new(b, c, left, right)
    }

    pub fn validate(&self, b: &Algebra, c: &Algebra) -> Result<(), ModuleError> {
        if self.left.len() != b.dim() || self.right.len() != c.dim() {
            return Err(ModuleError::BadAction("action counts".into()));
        }
        self.left_module().validate(&b.opposite())?;
        self.right_module().validate(c)?;
        for l in &self.left {
            for r in &self.right {
                if (l * r) != (r * l) {
                    return Err(ModuleError::BadAction("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self, j: usize) -> &Matrix {
        &self.left[j]
    }

    pub fn right_action(&self, j: usize) -> &Matrix {
        &self.right[j]
    }

    /// `_B M` as a right `B^op`-module.
    pub fn left_module(&self) -> RightModule {
        RightModule::from_trusted(self.p, self.dim, self.left.clone())
    }

    /// `M_C`.
    pub fn right_module(&self) -> RightModule {
        RightModule::from_trusted(self.p, self.dim, self.right.clone())
    }
}

// ---------------------------------------------------------------------------
// Hom, simples, covers, Ext

pub fn hom_space(alg: &Algebra, m: &RightModule, n: &RightModule) -> Vec<ModuleMap> {
    hom_matrices(alg, m, n)
        .into_iter()
        .map(|matrix| ModuleMap { matrix })
        .collect()
}

pub fn hom_matrices(alg: &Algebra, m: &RightModule, n: &RightModule) -> Vec<Matrix> {
    hom_basis(
        m.p,
        m.dim,
        n.dim,
        &m.generator_actions(alg),
        &n.generator_actions(alg),
    )
}

pub fn hom_dim(alg: &Algebra, m: &RightModule, n: &RightModule) -> usize {
    if m.dim == 0 || n.dim == 0 {
        return 0;
    }
    let sys = intertwiner_system(m.p, m.dim, n.dim, &m.generator_actions(alg), &n.generator_actions(alg));
    m.dim * n.dim - sys.rank()
}

/// A retraction `M -> U` onto a submodule, if `U` is a direct summand.
pub fn find_retraction(alg: &Algebra, m: &RightModule, sub: &Subspace) -> Option<Matrix> {
    find_retraction_actions(&m.generator_actions(alg), sub)
}

pub fn is_direct_summand(alg: &Algebra, m: &RightModule, sub: &Subspace) -> bool {
    find_retraction(alg, m, sub).is_some()
}

/// `e A` as a right module, with its span inside `A`.
pub fn principal_projective(alg: &Algebra, e: &[u64]) -> Submodule {
    RightModule::regular(alg).submodule_unchecked(&alg.left_multiple(e))
}

/// Simple right modules, one per isomorphism type, in the order of the
/// primitive decomposition: `S_t = e_t A / e_t rad A`.
pub fn simple_modules(alg: &Algebra) -> Result<Vec<RightModule>, ModuleError> {
    if alg.dim() == 0 {
        return Ok(Vec::new());
    }
    let decomp = alg.primitive_decomposition()?;
    let mut out = Vec::new();
    for t in 0..decomp.type_count() {
        let p = principal_projective(alg, decomp.representative(t));
        let top = p.module.radical_submodule(alg);
        out.push(p.module.quotient(&top)?.module);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: RightModule,
    /// `dim P x dim M` surjection.
    pub map: Matrix,
    /// `(type, generator in M e_t)` per indecomposable summand.
    pub summands: Vec<(usize, Vec<u64>)>,
}

impl ProjectiveCover {
    pub fn kernel(&self) -> Subspace {
        self.map.left_kernel().row_space()
    }
}

pub fn projective_cover(alg: &Algebra, m: &RightModule) -> Result<ProjectiveCover, ModuleError> {
    let p = m.p;
    if m.dim == 0 {
        return Ok(ProjectiveCover {
            module: m.clone(),
            map: Matrix::zeros(p, 0, 0),
            summands: Vec::new(),
        });
    }
    let decomp = alg.primitive_decomposition()?;
    let mut covered = m.radical_submodule(alg);
    let mut summands = Vec::new();
    for t in 0..decomp.type_count() {
        let e = decomp.representative(t);
        let piece = m.rho(e).row_space();
        for v in piece.basis_vecs() {
            if !covered.contains(&v) {
                covered = covered.sum(&spin(p, m.dim, &m.action, std::slice::from_ref(&v)));
                summands.push((t, v));
            }
        }
    }
    debug_assert!(covered.is_full());
    let mut parts = Vec::new();
    let mut map = Matrix::zeros(p, 0, m.dim);
    for (t, v) in &summands {
        let proj = principal_projective(alg, decomp.representative(*t));
        let rows: Vec<Vec<u64>> = proj
            .span
            .basis_vecs()
            .iter()
            .map(|x| m.act(v, x))
            .collect();
        map = map.vstack(&Matrix::from_vecs(p, m.dim, &rows));
        parts.push(proj.module);
    }
    let refs: Vec<&RightModule> = parts.iter().collect();
    Ok(ProjectiveCover {
        module: RightModule::direct_sum(&refs),
        map,
        summands,
    })
}

/// `Omega M = ker(P -> M)` together with the cover.
pub fn syzygy(alg: &Algebra, m: &RightModule) -> Result<(Submodule, ProjectiveCover), ModuleError> {
    let cover = projective_cover(alg, m)?;
    let sub = cover.module.submodule_unchecked(&cover.kernel());
    Ok((sub, cover))
}

#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    /// Maps `Omega M -> N` whose classes form a basis of `Ext^1(M, N)`.
    pub cocycles: Vec<Matrix>,
}

pub fn ext1(alg: &Algebra, m: &RightModule, n: &RightModule) -> Result<Ext1, ModuleError> {
    let (omega, cover) = syzygy(alg, m)?;
    Ok(ext1_from_presentation(alg, &omega, &cover, n))
}

fn ext1_from_presentation(alg: &Algebra, omega: &Submodule, cover: &ProjectiveCover, n: &RightModule) -> Ext1 {
    let p = n.p;
    if omega.module.dim == 0 || n.dim == 0 {
        return Ext1 {
            dim: 0,
            cocycles: Vec::new(),
        };
    }
    let cocycle_space = hom_matrices(alg, &omega.module, n);
    let flat = |m: &Matrix| m.data().to_vec();
    let width = omega.module.dim * n.dim;
    let restricted: Vec<Vec<u64>> = hom_matrices(alg, &cover.module, n)
        .iter()
        .map(|f| flat(&(omega.inclusion() * f)))
        .collect();
    let mut span = Subspace::from_vectors(p, width, &restricted);
    let mut cocycles = Vec::new();
    for c in cocycle_space {
        let v = flat(&c);
        if !span.contains(&v) {
            span = span.with_vector(&v);
            cocycles.push(c);
        }
    }
    Ext1 {
        dim: cocycles.len(),
        cocycles,
    }
}

pub fn ext1_dim(alg: &Algebra, m: &RightModule, n: &RightModule) -> Result<usize, ModuleError> {
    Ok(ext1(alg, m, n)?.dim)
}

/// Projective iff the cover admits a section (found by a linear solve).
pub fn is_projective(alg: &Algebra, m: &RightModule) -> Result<bool, AlgebraError> {
    let cover = projective_cover(alg, m)?;
    if m.dim == 0 {
        return Ok(true);
    }
    // section s: M -> P with s * cover = id
    let gm = m.generator_actions(alg);
    let gp = cover.module.generator_actions(alg);
    let (dm, dp) = (m.dim, cover.module.dim);
    let sys = intertwiner_system(m.p, dm, dp, &gm, &gp);
    let mut rows = sys.row_vecs();
    let mut rhs = vec![0u64; rows.len()];
    for i in 0..dm {
        for l in 0..dm {
            // (s * cover)[i][l] = sum_k s[i][k] cover[k][l]
            let mut row = vec![0u64; dm * dp];
            for k in 0..dp {
                row[i * dp + k] = cover.map.get(k, l);
            }
            rows.push(row);
            rhs.push(u64::from(i == l));
        }
    }
    let a = Matrix::from_vecs(m.p, dm * dp, &rows);
    let b = Matrix::from_vecs(m.p, 1, &rhs.into_iter().map(|x| vec![x]).collect::<Vec<_>>());
    let split = solve(&a, &b)?.is_some();
    debug_assert_eq!(split, dp == dm);
    Ok(split)
}

/// Precomputed presentations of the simple modules, for repeated
/// injectivity tests `Ext^1(S, -) = 0`.
pub struct InjectivityTester<'a> {
    alg: &'a Algebra,
    simples: Vec<(Submodule, ProjectiveCover)>,
}

impl<'a> InjectivityTester<'a> {
    pub fn new(alg: &'a Algebra) -> Result<Self, ModuleError> {
        let simples = simple_modules(alg)?
            .iter()
            .map(|s| syzygy(alg, s))
            .collect::<Result<_, _>>()?;
        Ok(InjectivityTester { alg, simples })
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    pub fn is_injective(&self, m: &RightModule) -> bool {
        self.simples
            .iter()
            .all(|(omega, cover)| ext1_from_presentation(self.alg, omega, cover, m).dim == 0)
    }
}

pub fn is_injective(alg: &Algebra, m: &RightModule) -> Result<bool, ModuleError> {
    Ok(InjectivityTester::new(alg)?.is_injective(m))
}

// ---------------------------------------------------------------------------
// submodule lattices and the hereditary injectivity tests

/// Distinct cyclic submodules `vA`, one per line `v`.
pub fn cyclic_submodules(m: &RightModule) -> Vec<Subspace> {
    let set: BTreeSet<Subspace> = projective_points(m.p, m.dim)
        .map(|v| spin(m.p, m.dim, &m.action, &[v]))
        .collect();
    set.into_iter().collect()
}

/// Every submodule, as sums of cyclic submodules, sorted.
pub fn submodule_lattice(m: &RightModule, bound: usize) -> Result<Vec<Subspace>, ModuleError> {
    let cyclic = cyclic_submodules(m);
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    seen.insert(m.zero_space());
    let mut frontier = vec![m.zero_space()];
    while let Some(u) = frontier.pop() {
        for c in &cyclic {
            if c.is_subspace_of(&u) {
                continue;
            }
            let w = u.sum(c);
            if seen.insert(w.clone()) {
                if seen.len() > bound {
                    return Err(ModuleError::BoundExceeded {
                        what: "submodule lattice",
                        bound,
                    });
                }
                frontier.push(w);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every quotient `M/K` is injective ("hereditary injective"); a single copy
/// suffices for the Sigma version over artinian algebras.
pub fn is_hereditary_injective(alg: &Algebra, m: &RightModule, bound: usize) -> Result<bool, ModuleError> {
    let tester = InjectivityTester::new(alg)?;
    hereditary_injective_with(&tester, m, bound)
}

pub fn hereditary_injective_with(tester: &InjectivityTester<'_>, m: &RightModule, bound: usize) -> Result<bool, ModuleError> {
    if m.dim == 0 {
        return Ok(true);
    }
    for k in submodule_lattice(m, bound)? {
        if k.is_full() {
            continue;
        }
        let q = m.quotient(&k)?.module;
        if !tester.is_injective(&q) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Independent route: walks the quotients of `M^(k)`, `k <= n_max`, by
/// successively factoring out simple submodules of the socle (every quotient
/// arises this way), deduplicating up to isomorphism.
pub fn sigma_crosscheck(alg: &Algebra, m: &RightModule, n_max: usize, bound: usize) -> Result<bool, ModuleError> {
    let tester = InjectivityTester::new(alg)?;
    let start = m.power(n_max.max(1));
    let mut classes: Vec<RightModule> = vec![start.clone()];
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        if !tester.is_injective(&x) {
            return Ok(false);
        }
        if x.dim == 0 {
            continue;
        }
        let soc = x.socle(alg);
        let mut simples: BTreeSet<Subspace> = BTreeSet::new();
        for c in projective_points(x.p, soc.dim()) {
            let line = spin(x.p, x.dim, &x.action, &[soc.combine(&c)]);
            if find_simple_submodule(x.p, &x.action, &line) == line {
                simples.insert(line);
            }
        }
        for s in simples {
            let q = x.quotient(&s)?.module;
            if !classes.iter().any(|y| is_isomorphic(alg, y, &q)) {
                if classes.len() >= bound {
                    return Err(ModuleError::BoundExceeded {
                        what: "quotient classes",
                        bound,
                    });
                }
                classes.push(q.clone());
                frontier.push(q);
            }
        }
    }
    Ok(true)
}

/// Isomorphism test: equal Hom dimensions, then an invertible map is looked
/// for exhaustively in small Hom spaces and by seeded sampling otherwise
/// (a negative answer from sampling may be a false negative).
pub fn is_isomorphic(alg: &Algebra, m: &RightModule, n: &RightModule) -> bool {
    if m.dim != n.dim {
        return false;
    }
    if m.dim == 0 {
        return true;
    }
    let hom = hom_matrices(alg, m, n);
    if hom.is_empty() {
        return false;
    }
    if hom.len() != hom_dim(alg, m, m) || hom_dim(alg, n, n) != hom.len() {
        return false;
    }
    let p = m.p;
    let combine = |c: &[u64]| {
        let mut f = Matrix::zeros(p, m.dim, n.dim);
        for (x, h) in c.iter().zip(&hom) {
            if *x != 0 {
                f.add_scaled(*x, h);
            }
        }
        f
    };
    let total = (p as u128).checked_pow(hom.len() as u32).unwrap_or(u128::MAX);
    if total <= ISO_EXHAUSTIVE_LIMIT as u128 {
        return VectorOdometer::new(p, hom.len()).any(|c| combine(&c).rank() == m.dim);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    (0..ISO_SAMPLES).any(|_| {
        let c: Vec<u64> = (0..hom.len()).map(|_| rng.gen_range(0..p)).collect();
        combine(&c).rank() == m.dim
    })
}

// ---------------------------------------------------------------------------
// duality, transpose, AR translate

/// `Hom_A(P, A)` for a projective `P`, as a right `A^op`-module.
fn dual_of_projective(alg: &Algebra, proj: &RightModule) -> (Vec<Matrix>, Subspace, RightModule) {
    let p = alg.modulus();
    let regular = RightModule::regular(alg);
    let basis = hom_matrices(alg, proj, &regular);
    let width = proj.dim * alg.dim();
    let span = Subspace::from_vectors(p, width, &basis.iter().map(|f| f.data().to_vec()).collect::<Vec<_>>());
    // express in RREF coordinates of `span`
    let basis: Vec<Matrix> = span
        .basis_vecs()
        .into_iter()
        .map(|v| Matrix::from_flat(p, proj.dim, alg.dim(), v))
        .collect();
    let k = basis.len();
    let action = (0..alg.dim())
        .map(|j| {
            let lm = alg.left_mult(&alg.basis_element(j));
            let rows: Vec<Vec<u64>> = basis
                .iter()
                .map(|f| {
                    span.coordinates((f * &lm).data())
                        .expect("Hom(P, A) is a left A-module")
                })
                .collect();
            Matrix::from_vecs(p, k, &rows)
        })
        .collect();
    let module = RightModule::from_trusted(p, k, action);
    (basis, span, module)
}

/// `Tr M`, computed from a minimal projective presentation `P1 -> P0 -> M`;
/// a right module over `A^op`.
pub fn transpose(alg: &Algebra, m: &RightModule) -> Result<RightModule, ModuleError> {
    let (omega, cover0) = syzygy(alg, m)?;
    let cover1 = projective_cover(alg, &omega.module)?;
    // f: P1 -> P0
    let f = &cover1.map * omega.inclusion();
    let (basis0, _, _) = dual_of_projective(alg, &cover0.module);
    let (_, span1, hom1) = dual_of_projective(alg, &cover1.module);
    let image: Vec<Vec<u64>> = basis0
        .iter()
        .map(|phi| {
            let composed = &f * phi;
            span1
                .coordinates(composed.data())
                .expect("composition lands in Hom(P1, A)")
        })
        .collect();
    let img = Subspace::from_vectors(alg.modulus(), hom1.dim, &image);
    Ok(hom1.quotient(&img)?.module)
}

/// `tau M = D Tr M`, again a right `A`-module.
pub fn ar_translate(alg: &Algebra, m: &RightModule) -> Result<RightModule, ModuleError> {
    Ok(transpose(alg, m)?.dual())
}

/// `tau^- M = Tr D M`, computed over the opposite algebra.
pub fn ar_translate_inverse(alg: &Algebra, m: &RightModule) -> Result<RightModule, ModuleError> {
    transpose(&alg.opposite(), &m.dual())
}

// ---------------------------------------------------------------------------
// module enumeration

/// Normal forms for modules: a dimension vector over a complete set of
/// primitive orthogonal idempotents, block-diagonal idempotent actions, and
/// free blocks for generators lying in `e_s A e_t`. Every module is
/// isomorphic to at least one normal form.
#[derive(Clone, Debug)]
pub struct EnumerationPlan {
    p: u64,
    n: usize,
    idempotents: usize,
    /// `(s, t)` for each non-idempotent generator.
    gens: Vec<(usize, usize)>,
    /// Words in the generator list `[e_1..e_m, g_1..g_r]`, prefix closed:
    /// `(prefix index or None, last letter)`.
    words: Vec<(Option<usize>, usize)>,
    /// `b_j = sum_k coeff[j][k] w_k`.
    coeff: Matrix,
}

impl EnumerationPlan {
    pub fn new(alg: &Algebra) -> Result<Self, ModuleError> {
        let p = alg.modulus();
        let n = alg.dim();
        let decomp = alg.primitive_decomposition()?;
        let es = decomp.idempotents.clone();
        let m = es.len();
        let mut letters: Vec<Vec<u64>> = es.clone();
        let mut gens = Vec::new();
        let mut pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|s| (0..m).map(move |t| (s, t)))
            .collect();
        pairs.sort_by_key(|&(s, t)| (s == t, s, t));
        let mut span = alg.generated_subalgebra(&letters);
        for (s, t) in pairs {
            if span.is_full() {
                break;
            }
            for x in alg.sandwich(&es[s], &es[t]).basis_vecs() {
                if !span.contains(&x) {
                    letters.push(x);
                    gens.push((s, t));
                    span = alg.generated_subalgebra(&letters);
                }
            }
        }
        // words spanning A
        let mut words: Vec<(Option<usize>, usize)> = Vec::new();
        let mut elems: Vec<Vec<u64>> = Vec::new();
        let mut wspan = Subspace::zero(p, n);
        for (i, e) in es.iter().enumerate() {
            words.push((None, i));
            elems.push(e.clone());
            wspan = wspan.with_vector(e);
        }
        let mut frontier: Vec<usize> = (0..m).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &w in &frontier {
                for (k, letter) in letters.iter().enumerate() {
                    let x = alg.mul(&elems[w], letter);
                    if !wspan.contains(&x) {
                        wspan = wspan.with_vector(&x);
                        words.push((Some(w), k));
                        elems.push(x);
                        next.push(elems.len() - 1);
                    }
                }
            }
            frontier = next;
        }
        let wmat = Matrix::from_vecs(p, n, &elems);
        let coeff = wmat
            .inverse()
            .ok_or_else(|| ModuleError::BadAction("words do not span the algebra".into()))?;
        Ok(EnumerationPlan {
            p,
            n,
            idempotents: m,
            gens,
            words,
            coeff,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.idempotents
    }

    pub fn entry_count(&self, dims: &[usize]) -> usize {
        self.gens.iter().map(|&(s, t)| dims[s] * dims[t]).sum()
    }

    /// Number of normal forms with the given total dimension.
    pub fn count(&self, d: usize) -> u128 {
        dimension_vectors(d, self.idempotents)
            .iter()
            .map(|dv| (self.p as u128).saturating_pow(self.entry_count(dv) as u32))
            .fold(0u128, |a, b| a.saturating_add(b))
    }

    /// Normal forms of dimension `1..=d_max`, summed.
    pub fn count_up_to(&self, d_max: usize) -> u128 {
        (1..=d_max).map(|d| self.count(d)).fold(0, u128::saturating_add)
    }

    /// Builds the candidate with the given block entries; `None` if the
    /// relations of the algebra fail.
    pub fn build(&self, alg: &Algebra, dims: &[usize], entries: &[u64]) -> Option<RightModule> {
        let p = self.p;
        let d: usize = dims.iter().sum();
        let offsets: Vec<usize> = dims
            .iter()
            .scan(0, |acc, &x| {
                let o = *acc;
                *acc += x;
                Some(o)
            })
            .collect();
        let mut letters: Vec<Matrix> = Vec::with_capacity(self.idempotents + self.gens.len());
        for s in 0..self.idempotents {
            let mut e = Matrix::zeros(p, d, d);
            for i in 0..dims[s] {
                e.set(offsets[s] + i, offsets[s] + i, 1);
            }
            letters.push(e);
        }
        let mut it = entries.iter();
        for &(s, t) in &self.gens {
            let mut g = Matrix::zeros(p, d, d);
            for i in 0..dims[s] {
                for j in 0..dims[t] {
                    g.set(offsets[s] + i, offsets[t] + j, *it.next().expect("entry count"));
                }
            }
            letters.push(g);
        }
        let mut wmats: Vec<Matrix> = Vec::with_capacity(self.words.len());
        for &(prefix, last) in &self.words {
            let m = match prefix {
                None => letters[last].clone(),
                Some(w) => &wmats[w] * &letters[last],
            };
            wmats.push(m);
        }
        let action: Vec<Matrix> = (0..self.n)
            .map(|j| {
                let mut a = Matrix::zeros(p, d, d);
                for (k, w) in wmats.iter().enumerate() {
                    let c = self.coeff.get(j, k);
                    if c != 0 {
                        a.add_scaled(c, w);
                    }
                }
                a
            })
            .collect();
        let module = RightModule::from_trusted(p, d, action);
        module.validate(alg).ok().map(|_| module)
    }

    /// Deterministic stream of all normal forms of dimension `1..=d_max`.
    pub fn iter<'a>(&'a self, alg: &'a Algebra, d_max: usize) -> impl Iterator<Item = RightModule> + 'a {
        (1..=d_max)
            .flat_map(move |d| dimension_vectors(d, self.idempotents))
            .flat_map(move |dims| {
                let f = self.entry_count(&dims);
                VectorOdometer::new(self.p, f).filter_map(move |entries| self.build(alg, &dims, &entries))
            })
    }

    /// Seeded random normal forms (valid ones only), at most `attempts` tries.
    pub fn sample(&self, alg: &Algebra, d_max: usize, wanted: usize, attempts: usize, seed: u64) -> Vec<RightModule> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        let vectors: Vec<Vec<usize>> = (1..=d_max)
            .flat_map(|d| dimension_vectors(d, self.idempotents))
            .collect();
        if vectors.is_empty() {
            return out;
        }
        for _ in 0..attempts {
            if out.len() >= wanted {
                break;
            }
            let dims = &vectors[rng.gen_range(0..vectors.len())];
            let f = self.entry_count(dims);
            let entries: Vec<u64> = (0..f).map(|_| rng.gen_range(0..self.p)).collect();
            if let Some(m) = self.build(alg, dims, &entries) {
                out.push(m);
            }
        }
        out
    }
}

/// Compositions of `d` into `parts` nonnegative summands, lexicographic.
pub fn dimension_vectors(d: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if parts == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in dimension_vectors(d - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct ModuleStream {
    pub modules: Vec<RightModule>,
    /// False when the normal-form count exceeded the bound and a seeded
    /// sample was taken instead.
    pub exhaustive: bool,
}

/// All normal forms of dimension `<= d_max` when at most `bound` of them
/// exist, otherwise a seeded sample of `bound` valid modules.
pub fn enumerate_modules(alg: &Algebra, d_max: usize, bound: usize, seed: u64) -> Result<ModuleStream, ModuleError> {
    if alg.dim() == 0 {
        return Ok(ModuleStream {
            modules: Vec::new(),
            exhaustive: true,
        });
    }
    let plan = EnumerationPlan::new(alg)?;
    if plan.count_up_to(d_max) <= bound as u128 {
        return Ok(ModuleStream {
            modules: plan.iter(alg, d_max).collect(),
            exhaustive: true,
        });
    }
    Ok(ModuleStream {
        modules: plan.sample(alg, d_max, bound, bound * 8, seed),
        exhaustive: false,
    })
}

/// Keeps one representative per isomorphism class, in input order.
pub fn dedup_isomorphic(alg: &Algebra, modules: Vec<RightModule>) -> Vec<RightModule> {
    let mut out: Vec<RightModule> = Vec::new();
    for m in modules {
        if !out.iter().any(|x| is_isomorphic(alg, x, &m)) {
            out.push(m);
        }
    }
    out
}

/// Indecomposable projectives `e_t A` and injectives `D(A e_t)`, one per type.
pub fn indecomposable_projectives_injectives(alg: &Algebra) -> Result<(Vec<RightModule>, Vec<RightModule>), ModuleError> {
    if alg.dim() == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let decomp = alg.primitive_decomposition()?;
    let op = alg.opposite();
    let mut proj = Vec::new();
    let mut inj = Vec::new();
    for t in 0..decomp.type_count() {
        let e = decomp.representative(t);
        proj.push(principal_projective(alg, e).module);
        inj.push(principal_projective(&op, e).module.dual());
    }
    Ok((proj, inj))
}

/// Structured small modules where split failures tend to live: the
/// indecomposable projectives and injectives and their pairwise sums,
/// quotients of the projective sums and submodules of the injective sums of
/// dimension at most `d_max`. When a full submodule lattice exceeds `bound`,
/// quotients are restricted to submodules of the socle and submodules to
/// cyclic ones. Exact duplicates are removed; order is deterministic.
pub fn guided_family(alg: &Algebra, d_max: usize, bound: usize) -> Result<Vec<RightModule>, ModuleError> {
    let (proj, inj) = indecomposable_projectives_injectives(alg)?;
    let sums = |parts: &[RightModule]| {
        let mut out: Vec<RightModule> = parts.to_vec();
        for i in 0..parts.len() {
            for j in i..parts.len() {
                out.push(RightModule::direct_sum(&[&parts[i], &parts[j]]));
            }
        }
        out
    };
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |m: RightModule, out: &mut Vec<RightModule>| {
        if m.dim == 0 {
            return;
        }
        let key: Vec<Vec<u64>> = m.action.iter().map(|a| a.data().to_vec()).collect();
        if seen.insert(key) {
            out.push(m);
        }
    };
    for p in sums(&proj) {
        let kernels = match submodule_lattice(&p, bound) {
            Ok(all) => all,
            Err(_) => {
                let soc = p.socle(alg);
                let sub = p.submodule(&soc)?;
                match submodule_lattice(&sub.module, bound) {
                    Ok(inner) => inner.iter().map(|k| k.image(sub.inclusion())).collect(),
                    Err(_) => Vec::new(),
                }
            }
        };
        for k in kernels {
            if p.dim - k.dim() <= d_max {
                push(p.quotient(&k)?.module, &mut out);
            }
        }
        push(p, &mut out);
    }
    for e in sums(&inj) {
        let subs = submodule_lattice(&e, bound).unwrap_or_else(|_| cyclic_submodules(&e));
        for s in subs {
            if s.dim() <= d_max && !s.is_full() {
                push(e.submodule(&s)?.module, &mut out);
            }
        }
        push(e, &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn lt2() -> Algebra {
        corpus::lt2(2)
    }

    #[test]
    fn regular_modules() {
        let f2 = Algebra::field(2).unwrap();
        assert_eq!(RightModule::regular(&f2).dim(), 1);
        let a = lt2();
        let reg = RightModule::regular(&a);
        assert_eq!(reg.dim(), 3);
        assert!(reg.action(1).is_nilpotent());
        reg.validate(&a).unwrap();
        assert_eq!(RightModule::regular(&Algebra::zero(2)).dim(), 0);
    }

    #[test]
    fn submodules_and_quotients() {
        let a = lt2();
        let reg = RightModule::regular(&a);
        assert!(reg.submodule_generated(&[a.unit().to_vec()]).span.is_full());
        assert_eq!(reg.submodule_generated(&[vec![0, 0, 1]]).module.dim(), 2);
        assert_eq!(reg.quotient(&reg.full_space()).unwrap().module.dim(), 0);
        let bad = Subspace::from_vectors(2, 3, &[vec![0, 0, 1]]);
        assert_eq!(reg.submodule(&bad).unwrap_err(), ModuleError::NotInvariant);
    }

    #[test]
    fn law_violation_detected() {
        let a = lt2();
        let mut act = a.right_regular_actions();
        act[1] = Matrix::identity(2, 3);
        assert!(RightModule::new(&a, act).is_err());
    }

    #[test]
    fn simples_and_homs() {
        let f2 = Algebra::field(2).unwrap();
        assert_eq!(simple_modules(&f2).unwrap().len(), 1);
        let a = lt2();
        let simples = simple_modules(&a).unwrap();
        assert_eq!(simples.len(), 2);
        assert!(simples.iter().all(|s| s.dim() == 1));
        assert_eq!(hom_dim(&a, &simples[0], &simples[1]), 0);
        for s in &simples {
            assert_eq!(
                find_simple_submodule(2, s.actions(), &s.full_space()).dim(),
                s.dim()
            );
        }
        let m2 = Algebra::full_matrix(2, 2).unwrap();
        let s = simple_modules(&m2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].dim(), 2);

        // P2 = e22 A and its top
        let p2 = principal_projective(&a, &[0, 0, 1]).module;
        let s2 = p2.quotient(&p2.radical_submodule(&a)).unwrap().module;
        assert_eq!(hom_dim(&a, &p2, &s2), 1);
        let m = RightModule::regular(&a);
        let ends: Vec<Vec<u64>> = hom_matrices(&a, &m, &m).iter().map(|f| f.data().to_vec()).collect();
        let span = Subspace::from_vectors(2, 9, &ends);
        assert!(span.contains(Matrix::identity(2, 3).data()));
    }

    #[test]
    fn hom_is_additive() {
        let a = lt2();
        let simples = simple_modules(&a).unwrap();
        let reg = RightModule::regular(&a);
        let sum = RightModule::direct_sum(&[&reg, &simples[0]]);
        for x in simples.iter().chain([&reg]) {
            assert_eq!(
                hom_dim(&a, &sum, x),
                hom_dim(&a, &reg, x) + hom_dim(&a, &simples[0], x)
            );
            assert_eq!(
                hom_dim(&a, x, &sum),
                hom_dim(&a, x, &reg) + hom_dim(&a, x, &simples[0])
            );
        }
    }

    /// LT2 simples labelled by where they live: `S1 = e11 A / ..` is the
    /// socle of `e22 A` (simple projective), `S2` its top.
    fn lt2_simples(a: &Algebra) -> (RightModule, RightModule) {
        let p1 = principal_projective(a, &[1, 0, 0]).module;
        let p2 = principal_projective(a, &[0, 0, 1]).module;
        let s2 = p2.quotient(&p2.radical_submodule(a)).unwrap().module;
        (p1, s2)
    }

    #[test]
    fn ext_and_projectivity() {
        let a = lt2();
        let (s1, s2) = lt2_simples(&a);
        assert_eq!(ext1_dim(&a, &s2, &s1).unwrap(), 1);
        assert_eq!(ext1_dim(&a, &s1, &s2).unwrap(), 0);
        assert_eq!(ext1_dim(&a, &s2, &RightModule::zero(&a)).unwrap(), 0);
        let reg = RightModule::regular(&a);
        assert!(is_projective(&a, &reg).unwrap());
        assert!(is_projective(&a, &s1).unwrap());
        assert!(!is_projective(&a, &s2).unwrap());
        assert!(is_projective(&a, &RightModule::zero(&a)).unwrap());
        for n in [&s1, &s2, &reg] {
            assert_eq!(ext1_dim(&a, &reg, n).unwrap(), 0);
        }
        let cover = projective_cover(&a, &s2).unwrap();
        assert_eq!(cover.module.dim(), 2);
        assert_eq!(projective_cover(&a, &reg).unwrap().module.dim(), 3);
    }

    #[test]
    fn injectivity_over_lt2() {
        let a = lt2();
        let (s1, s2) = lt2_simples(&a);
        let p2 = principal_projective(&a, &[0, 0, 1]).module;
        assert!(is_injective(&a, &p2).unwrap());
        // S2 (top of e22 A) sits at the source vertex and is injective;
        // the simple projective S1 is not.
        assert!(is_injective(&a, &s2).unwrap());
        assert!(!is_injective(&a, &s1).unwrap());
        let ss = corpus::ss2(2);
        for m in enumerate_modules(&ss, 2, 1000, 1).unwrap().modules {
            assert!(is_injective(&ss, &m).unwrap());
        }
    }

    #[test]
    fn hereditary_injective_and_sigma() {
        let k = Algebra::field(2).unwrap();
        let one = RightModule::regular(&k);
        assert!(is_hereditary_injective(&k, &one, 100).unwrap());
        assert!(is_hereditary_injective(&k, &RightModule::zero(&k), 100).unwrap());
        assert!(sigma_crosscheck(&k, &one, 3, 1000).unwrap());
        let a = lt2();
        let p2 = principal_projective(&a, &[0, 0, 1]).module;
        let h = is_hereditary_injective(&a, &p2, 1000).unwrap();
        assert!(h);
        assert_eq!(sigma_crosscheck(&a, &p2, 2, 1000).unwrap(), h);
        let reg = RightModule::regular(&a);
        let h = is_hereditary_injective(&a, &reg, 1000).unwrap();
        assert!(!h);
        assert_eq!(sigma_crosscheck(&a, &reg, 1, 1000).unwrap(), h);
    }

    #[test]
    fn duality_and_translate() {
        let a = lt2();
        let op = a.opposite();
        for m in enumerate_modules(&a, 3, 10_000, 0).unwrap().modules {
            let d = m.dual();
            d.validate(&op).unwrap();
            assert_eq!(d.dual(), m);
            let tau = ar_translate(&a, &m).unwrap();
            tau.validate(&a).unwrap();
            assert_eq!(tau.is_zero(), is_projective(&a, &m).unwrap());
        }
        assert_eq!(RightModule::zero(&a).dual().dim(), 0);
        let (_, s2) = lt2_simples(&a);
        let ds = s2.dual();
        assert_eq!(find_simple_submodule(2, ds.actions(), &ds.full_space()).dim(), 1);
        // the AR sequence 0 -> S1 -> P2 -> S2 -> 0
        let (s1, _) = lt2_simples(&a);
        assert!(is_isomorphic(&a, &ar_translate(&a, &s2).unwrap(), &s1));
    }

    #[test]
    fn corner_restriction() {
        let a = lt2();
        let reg = RightModule::regular(&a);
        let whole = a.corner(a.unit()).unwrap();
        assert_eq!(reg.restrict_to_corner(&whole).dim(), 3);
        let c = a.corner(&[1, 0, 0]).unwrap();
        let r = reg.restrict_to_corner(&c);
        assert_eq!(r.dim(), 2);
        r.validate(&c.algebra).unwrap();
        let (_, s2) = lt2_simples(&a);
        assert_eq!(s2.restrict_to_corner(&c).dim(), 0);
    }

    #[test]
    fn enumeration_counts() {
        let f2 = Algebra::field(2).unwrap();
        assert_eq!(enumerate_modules(&f2, 1, 100, 0).unwrap().modules.len(), 1);
        let a = lt2();
        assert_eq!(enumerate_modules(&a, 1, 100, 0).unwrap().modules.len(), 2);
    }

    /// Every action tuple on `F_p^d`, filtered by the module law: an oracle
    /// that knows nothing about idempotents or normal forms.
    fn naive_modules(alg: &Algebra, d: usize) -> Vec<RightModule> {
        let n = alg.dim();
        let p = alg.modulus();
        VectorOdometer::new(p, n * d * d)
            .filter_map(|flat| {
                let action = (0..n)
                    .map(|j| Matrix::from_flat(p, d, d, flat[j * d * d..(j + 1) * d * d].to_vec()))
                    .collect();
                RightModule::new(alg, action).ok()
            })
            .collect()
    }

    #[test]
    fn normal_forms_match_naive_enumeration_up_to_iso() {
        let a = lt2();
        let naive = dedup_isomorphic(&a, naive_modules(&a, 2));
        let plan = EnumerationPlan::new(&a).unwrap();
        let forms: Vec<RightModule> = plan.iter(&a, 2).filter(|m| m.dim() == 2).collect();
        let forms = dedup_isomorphic(&a, forms);
        assert_eq!(naive.len(), forms.len());
        for m in &naive {
            assert!(forms.iter().any(|f| is_isomorphic(&a, f, m)));
        }
        let dn = corpus::dual_numbers(2);
        let naive = dedup_isomorphic(&dn, naive_modules(&dn, 2));
        let plan = EnumerationPlan::new(&dn).unwrap();
        let forms = dedup_isomorphic(&dn, plan.iter(&dn, 2).filter(|m| m.dim() == 2).collect());
        assert_eq!(naive.len(), forms.len());
    }

    #[test]
    fn dimension_vectors_are_compositions() {
        assert_eq!(dimension_vectors(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(dimension_vectors(3, 1), vec![vec![3]]);
        assert_eq!(dimension_vectors(0, 3), vec![vec![0, 0, 0]]);
    }
}
