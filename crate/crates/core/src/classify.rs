//! Split classification of the TTF-triples of an algebra: structural
//! criteria, a brute-force oracle over small modules, and the report that
//! reconciles the two.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, AlgebraError, Embedded, DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_LATTICE_BOUND};
use crate::exactlinalg::{Matrix, Subspace};
use crate::modrep::{self, find_retraction, InjectivityTester, ModuleError, RightModule};
use crate::torsion::{self, split_check_on_module, SearchConfig, Side, TorsionError, TtfTriple};

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyConfig {
    pub d_max: usize,
    pub n_max: usize,
    pub seed: u64,
    #[serde(skip)]
    pub idempotent_bound: u64,
    #[serde(skip)]
    pub lattice_bound: usize,
    /// Exhaustive module enumeration runs up to this many normal forms;
    /// beyond it a seeded sample of this size is used.
    #[serde(skip)]
    pub module_bound: usize,
    #[serde(skip)]
    pub family_bound: usize,
    #[serde(skip)]
    pub submodule_bound: usize,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            d_max: 3,
            n_max: 2,
            seed: 0,
            idempotent_bound: DEFAULT_EXHAUSTIVE_BOUND,
            lattice_bound: DEFAULT_LATTICE_BOUND,
            module_bound: 20_000,
            family_bound: 2_000,
            submodule_bound: modrep::DEFAULT_SUBMODULE_BOUND,
        }
    }
}

impl ClassifyConfig {
    pub fn search(&self) -> SearchConfig {
        SearchConfig {
            seed: self.seed ^ 0x5eed,
            d_max: self.d_max,
            family_bound: self.family_bound,
            ..SearchConfig::default()
        }
    }
}

/// An idempotent `e` with `U = eA`, from a retraction of `A_A` onto `U`.
fn right_generator(alg: &Algebra, u: &Subspace) -> Option<Vec<u64>> {
    let pi = find_retraction(alg, &RightModule::regular(alg), u)?;
    let e = u.combine(&pi.apply(alg.unit()));
    debug_assert!(alg.is_idempotent(&e) && alg.left_multiple(&e) == *u);
    Some(e)
}

// ---------------------------------------------------------------------------
// central

#[derive(Clone, Debug, Serialize)]
pub struct CentralVerdict {
    pub holds: bool,
    pub idempotent: Option<Vec<u64>>,
}

pub fn classify_centrally_split(triple: &TtfTriple<'_>) -> Result<CentralVerdict, AlgebraError> {
    let alg = triple.algebra();
    let found = alg
        .central_idempotents()?
        .into_iter()
        .find(|e| alg.left_multiple(e) == *triple.ideal());
    Ok(CentralVerdict {
        holds: found.is_some(),
        idempotent: found,
    })
}

// ---------------------------------------------------------------------------
// left

#[derive(Clone, Debug, Serialize)]
pub struct LeftVerdict {
    pub holds: bool,
    /// `e` with `I = eA`.
    pub idempotent: Option<Vec<u64>>,
    /// `dim (1-e)A(1-e)` and `dim eA(1-e)`.
    pub corner_dim: Option<usize>,
    pub bimodule_dim: Option<usize>,
    pub hereditary_injective: Option<bool>,
    pub trace: Vec<String>,
}

/// `eA(1-e)` as a right module over the corner `(1-e)A(1-e)`.
pub fn corner_bimodule(alg: &Algebra, e: &[u64]) -> Result<(Embedded, RightModule), ModuleError> {
    let f = alg.one_minus(e);
    let corner = alg.corner(&f)?;
    let span = alg.sandwich(e, &f);
    let mats: Vec<Matrix> = corner.embedded_basis().iter().map(|b| alg.right_mult(b)).collect();
    let actions = modrep::restrict_actions(&mats, &span);
    let m = RightModule::new(&corner.algebra, actions)?;
    Ok((corner, m))
}

pub fn classify_left_split(triple: &TtfTriple<'_>, submodule_bound: usize) -> Result<LeftVerdict, ModuleError> {
    let alg = triple.algebra();
    let mut trace = Vec::new();
    let Some(e) = right_generator(alg, triple.ideal()) else {
        trace.push("I is not a direct summand of A_A, so no idempotent e has I = eA".into());
        return Ok(LeftVerdict {
            holds: false,
            idempotent: None,
            corner_dim: None,
            bimodule_dim: None,
            hereditary_injective: None,
            trace,
        });
    };
    let f = alg.one_minus(&e);
    debug_assert!(alg.sandwich(&f, &e).is_zero());
    trace.push(format!("I = eA with e = {e:?}; (1-e)Ae = 0"));
    let (corner, m) = corner_bimodule(alg, &e)?;
    let tester = InjectivityTester::new(&corner.algebra)?;
    let hi = modrep::hereditary_injective_with(&tester, &m, submodule_bound)?;
    trace.push(format!(
        "eA(1-e) (dim {}) over (1-e)A(1-e) (dim {}): hereditary injective = {hi}",
        m.dim(),
        corner.algebra.dim()
    ));
    Ok(LeftVerdict {
        holds: hi,
        idempotent: Some(e),
        corner_dim: Some(corner.algebra.dim()),
        bimodule_dim: Some(m.dim()),
        hereditary_injective: Some(hi),
        trace,
    })
}

// ---------------------------------------------------------------------------
// right

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsilonReduction {
    /// `lann(I) = (1-ε)A`.
    Corner { epsilon: Vec<u64> },
    /// `t(A_A)` is not a direct summand of `A_A`.
    NotRightSplit,
}

pub fn epsilon_reduction(triple: &TtfTriple<'_>) -> EpsilonReduction {
    let alg = triple.algebra();
    match right_generator(alg, triple.lann()) {
        Some(f) => EpsilonReduction::Corner {
            epsilon: alg.one_minus(&f),
        },
        None => EpsilonReduction::NotRightSplit,
    }
}

/// Data of the corner `A' = εAε` and the idempotent `e ∈ A'` with
/// `I' = A'e`, in corner coordinates.
#[derive(Clone, Debug)]
pub struct RightCorner {
    pub epsilon: Vec<u64>,
    pub corner: Embedded,
    /// `I' = εIε` in corner coordinates.
    pub ideal: Subspace,
    pub e: Option<Vec<u64>>,
}

fn right_corner(triple: &TtfTriple<'_>, epsilon: Vec<u64>) -> Result<RightCorner, AlgebraError> {
    let alg = triple.algebra();
    let corner = alg.corner(&epsilon)?;
    let inside = triple.ideal().intersection(&corner.span);
    let coords: Vec<Vec<u64>> = inside
        .basis_vecs()
        .iter()
        .map(|x| corner.restrict(x).expect("inside the corner"))
        .collect();
    let ideal = Subspace::from_vectors(alg.modulus(), corner.algebra.dim(), &coords);
    let e = torsion::is_left_pure(&corner.algebra, &ideal).idempotent;
    Ok(RightCorner {
        epsilon,
        corner,
        ideal,
        e,
    })
}

/// `B = (1-e)A'(1-e)` and `M = (1-e)A'e` with `_B M` as a right
/// `B^op`-module; `ann_B(M)` in `B` coordinates.
struct LeftData {
    b: Embedded,
    m_span: Subspace,
    ann: Subspace,
}

fn left_data(a1: &Algebra, e: &[u64]) -> Result<LeftData, AlgebraError> {
    let f = a1.one_minus(e);
    let b = a1.corner(&f)?;
    let m_span = a1.sandwich(&f, e);
    let ms = m_span.basis_vecs();
    let n = b.algebra.dim();
    let ann = if ms.is_empty() {
        Subspace::full(a1.modulus(), n)
    } else {
        let rows: Vec<Vec<u64>> = b
            .embedded_basis()
            .iter()
            .map(|y| ms.iter().flat_map(|m| a1.mul(y, m)).collect())
            .collect();
        Matrix::from_vecs(a1.modulus(), ms.len() * a1.dim(), &rows)
            .left_kernel()
            .row_space()
    };
    Ok(LeftData { b, m_span, ann })
}

/// `_H M` for a subalgebra `H` (given by lifts of its basis into `A'`) as a
/// right module over `H^op`.
fn left_module(a1: &Algebra, h_op: &Algebra, lifts: &[Vec<u64>], m_span: &Subspace) -> Result<RightModule, ModuleError> {
    let ms = m_span.basis_vecs();
    let actions = lifts
        .iter()
        .map(|y| {
            let rows: Vec<Vec<u64>> = ms
                .iter()
                .map(|m| m_span.coordinates(&a1.mul(y, m)).expect("M is a left module"))
                .collect();
            Matrix::from_vecs(a1.modulus(), ms.len(), &rows)
        })
        .collect();
    RightModule::new(h_op, actions)
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneralPath {
    pub right_splitting: bool,
    pub left_pure: bool,
    pub lann_zero: bool,
    /// `(n, holds, exhaustive)` per checked `n`.
    pub saturated: Vec<(usize, bool, bool)>,
    pub form_one: Option<bool>,
    pub quotient_hereditary: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RightVerdict {
    pub holds: bool,
    pub epsilon: Option<Vec<u64>>,
    /// `e` in the corner `εAε` with `I' = A'e`, embedded in `A`.
    pub idempotent: Option<Vec<u64>>,
    pub b_dim: Option<usize>,
    pub m_dim: Option<usize>,
    /// The idempotent of `B` generating `ann_B(M)`, embedded in `A`.
    pub ann_idempotent: Option<Vec<u64>>,
    pub quotient_hereditary: Option<bool>,
    pub m_injective: Option<bool>,
    pub general_path: Option<GeneralPath>,
    pub paths_agree: bool,
    pub trace: Vec<String>,
}

impl RightVerdict {
    fn rejected(epsilon: Option<Vec<u64>>, trace: Vec<String>) -> Self {
        RightVerdict {
            holds: false,
            epsilon,
            idempotent: None,
            b_dim: None,
            m_dim: None,
            ann_idempotent: None,
            quotient_hereditary: None,
            m_injective: None,
            general_path: None,
            paths_agree: true,
            trace,
        }
    }
}

pub fn classify_right_split(triple: &TtfTriple<'_>, n_max: usize, search: &SearchConfig) -> Result<RightVerdict, TorsionError> {
    let mut trace = Vec::new();
    let epsilon = match epsilon_reduction(triple) {
        EpsilonReduction::NotRightSplit => {
            trace.push("t(A_A) = lann(I) is not a direct summand of A_A".into());
            return Ok(RightVerdict::rejected(None, trace));
        }
        EpsilonReduction::Corner { epsilon } => epsilon,
    };
    trace.push(format!("lann(I) = (1-ε)A with ε = {epsilon:?}"));
    let rc = right_corner(triple, epsilon.clone())?;
    let a1 = &rc.corner.algebra;
    let Some(e) = rc.e.clone() else {
        trace.push("εIε is not left pure in εAε".into());
        let mut v = RightVerdict::rejected(Some(epsilon), trace);
        let general = general_path(a1, &rc.ideal, n_max, search)?;
        v.paths_agree = !general.holds;
        v.general_path = Some(general);
        return Ok(v);
    };
    let e_amb = rc.corner.embed(&e);
    trace.push(format!("εIε = A'e in A' = εAε with e = {e_amb:?}"));
    let data = left_data(a1, &e)?;
    let b = &data.b.algebra;
    let (m_dim, b_dim) = (data.m_span.dim(), b.dim());
    let mut v = RightVerdict {
        holds: false,
        epsilon: Some(epsilon),
        idempotent: Some(e_amb),
        b_dim: Some(b_dim),
        m_dim: Some(m_dim),
        ann_idempotent: None,
        quotient_hereditary: None,
        m_injective: None,
        general_path: None,
        paths_agree: true,
        trace,
    };
    match right_generator(b, &data.ann) {
        None => v.trace.push("ann_B(M) is not generated by an idempotent".into()),
        Some(e2) => {
            v.ann_idempotent = Some(rc.corner.embed(&data.b.embed(&e2)));
            let bbar = b.quotient(&data.ann)?;
            let hered = bbar.algebra.is_hereditary()?;
            v.quotient_hereditary = Some(hered);
            let bbar_op = bbar.algebra.opposite();
            let lifts: Vec<Vec<u64>> = bbar
                .section
                .row_vecs()
                .iter()
                .map(|y| data.b.embed(y))
                .collect();
            let m = left_module(a1, &bbar_op, &lifts, &data.m_span)?;
            let inj = modrep::is_injective(&bbar_op, &m)?;
            v.m_injective = Some(inj);
            v.holds = hered && inj;
            v.trace.push(format!(
                "B = (1-e)A'(1-e) (dim {b_dim}), M = (1-e)A'e (dim {m_dim}): ann_B(M) = e'B, B/ann hereditary = {hered}, M injective over B/ann = {inj}"
            ));
        }
    }
    let general = general_path(a1, &rc.ideal, n_max, search)?;
    v.paths_agree = general.holds == v.holds;
    v.trace.push(format!(
        "general path: right splitting ideal = {}, A'/I' hereditary = {}",
        general.right_splitting, general.quotient_hereditary
    ));
    v.general_path = Some(general);
    Ok(v)
}

fn general_path(a1: &Algebra, ideal: &Subspace, n_max: usize, search: &SearchConfig) -> Result<GeneralPath, TorsionError> {
    let rs = torsion::is_right_splitting_ideal(a1, ideal, n_max, search)?;
    let quotient_hereditary = a1.quotient(ideal)?.algebra.is_hereditary()?;
    Ok(GeneralPath {
        right_splitting: rs.holds,
        left_pure: rs.left_pure,
        lann_zero: rs.lann_zero,
        saturated: rs.saturated.iter().map(|s| (s.n, s.holds, s.exhaustive)).collect(),
        form_one: rs.saturated.first().and_then(|s| s.form_one),
        quotient_hereditary,
        holds: rs.holds && quotient_hereditary,
    })
}

/// Peirce blocks of `A' = εAε` for a right-split triple, with
/// `A' ≅ [[C,0,0],[M,H,0],[0,N,B']]`.
#[derive(Clone, Debug, Serialize)]
pub struct RightSplitDecomposition {
    pub c_dim: usize,
    pub h_dim: usize,
    pub b_prime_dim: usize,
    pub m_dim: usize,
    pub n_dim: usize,
    /// The remaining off-diagonal blocks vanish.
    pub triangular: bool,
    pub h_hereditary: bool,
    pub m_faithful: bool,
    pub m_injective: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum DecompositionError {
    #[error("the triple is not right split")]
    NotRightSplit,
    #[error(transparent)]
    Torsion(#[from] TorsionError),
}

impl From<AlgebraError> for DecompositionError {
    fn from(e: AlgebraError) -> Self {
        DecompositionError::Torsion(e.into())
    }
}

impl From<ModuleError> for DecompositionError {
    fn from(e: ModuleError) -> Self {
        DecompositionError::Torsion(e.into())
    }
}

pub fn right_split_decomposition(triple: &TtfTriple<'_>, verdict: &RightVerdict) -> Result<RightSplitDecomposition, DecompositionError> {
    if !verdict.holds {
        return Err(DecompositionError::NotRightSplit);
    }
    let epsilon = verdict.epsilon.clone().ok_or(DecompositionError::NotRightSplit)?;
    let rc = right_corner(triple, epsilon)?;
    let a1 = &rc.corner.algebra;
    let e = rc.e.clone().ok_or(DecompositionError::NotRightSplit)?;
    let data = left_data(a1, &e)?;
    let e2_b = right_generator(&data.b.algebra, &data.ann).ok_or(DecompositionError::NotRightSplit)?;
    let e2 = data.b.embed(&e2_b);
    let f = a1.one_minus(&e);
    let h = crate::exactlinalg::vec_sub(a1.modulus(), &f, &e2);
    let block = |x: &[u64], y: &[u64]| a1.sandwich(x, y).dim();
    let triangular = [(&e, &h), (&e, &e2), (&h, &e2), (&e2, &e)]
        .iter()
        .all(|(x, y)| block(x, y) == 0);
    let hc = a1.corner(&h)?;
    let h_op = hc.algebra.opposite();
    let m_span = a1.sandwich(&h, &e);
    let m = left_module(a1, &h_op, &hc.embedded_basis(), &m_span)?;
    Ok(RightSplitDecomposition {
        c_dim: block(&e, &e),
        h_dim: hc.algebra.dim(),
        b_prime_dim: block(&e2, &e2),
        m_dim: m_span.dim(),
        n_dim: block(&e2, &h),
        triangular,
        h_hereditary: hc.algebra.is_hereditary()?,
        m_faithful: m.is_faithful(&h_op),
        m_injective: modrep::is_injective(&h_op, &m)?,
    })
}

// ---------------------------------------------------------------------------
// oracle

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub dim: usize,
    /// `enumerated`, `guided` or `regular`.
    pub source: &'static str,
    pub index: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub d_max: usize,
    pub tested: usize,
    /// Every module of dimension `<= d_max` was covered up to isomorphism.
    pub exhaustive: bool,
    pub left_counterexample: Option<Counterexample>,
    pub right_counterexample: Option<Counterexample>,
    /// Tested modules in `C` with nonzero `t(N)`.
    pub c_not_in_f: usize,
}

/// The modules the oracle runs on, tagged with their source.
pub struct OracleModules {
    pub modules: Vec<(&'static str, RightModule)>,
    pub exhaustive: bool,
}

pub fn oracle_modules(alg: &Algebra, cfg: &ClassifyConfig) -> Result<OracleModules, ModuleError> {
    let stream = modrep::enumerate_modules(alg, cfg.d_max, cfg.module_bound, cfg.seed)?;
    let mut modules: Vec<(&'static str, RightModule)> = stream.modules.into_iter().map(|m| ("enumerated", m)).collect();
    if alg.dim() > 0 {
        modules.extend(
            modrep::guided_family(alg, cfg.d_max, cfg.family_bound)?
                .into_iter()
                .filter(|m| m.dim() <= cfg.d_max)
                .map(|m| ("guided", m)),
        );
        modules.push(("regular", RightModule::regular(alg)));
    }
    Ok(OracleModules {
        modules,
        exhaustive: stream.exhaustive,
    })
}

fn counterexample(source: &'static str, index: usize, m: &RightModule) -> Counterexample {
    Counterexample {
        dim: m.dim(),
        source,
        index,
        action: m.actions().iter().map(Matrix::to_signed_rows).collect(),
    }
}

/// Runs both split checks on every module; for each side the reported
/// counterexample is the smallest one, ties broken by list position.
pub fn oracle_split_survey(triple: &TtfTriple<'_>, family: &OracleModules, d_max: usize) -> OracleSummary {
    let flags: Vec<(bool, bool, bool)> = family
        .modules
        .par_iter()
        .map(|(_, m)| {
            let left = split_check_on_module(triple, m, Side::Left).is_split();
            let right = split_check_on_module(triple, m, Side::Right).is_split();
            let mem = triple.membership(m);
            (left, right, mem.in_c && !mem.in_f)
        })
        .collect();
    let smallest = |pick: fn(&(bool, bool, bool)) -> bool| {
        flags
            .iter()
            .enumerate()
            .filter(|(_, f)| !pick(f))
            .min_by_key(|(i, _)| (family.modules[*i].1.dim(), *i))
            .map(|(i, _)| counterexample(family.modules[i].0, i, &family.modules[i].1))
    };
    OracleSummary {
        d_max,
        tested: family.modules.len(),
        exhaustive: family.exhaustive,
        left_counterexample: smallest(|f| f.0),
        right_counterexample: smallest(|f| f.1),
        c_not_in_f: flags.iter().filter(|f| f.2).count(),
    }
}

// ---------------------------------------------------------------------------
// report

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub name: Option<String>,
    pub field: u64,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealSummary {
    pub count: usize,
    pub idempotents_exhaustive: bool,
    pub lattice_checked: Option<bool>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Verdicts {
    pub central: bool,
    pub left: bool,
    pub right: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleReport {
    pub index: usize,
    pub ideal_basis: Vec<Vec<u64>>,
    pub ideal_dim: usize,
    pub lann_basis: Vec<Vec<u64>>,
    pub left_pure: bool,
    pub hereditary_torsion: bool,
    pub verdicts: Verdicts,
    pub criterion_trace: Vec<String>,
    pub central: CentralVerdict,
    pub left: LeftVerdict,
    pub right: RightVerdict,
    pub decomposition: Option<RightSplitDecomposition>,
    pub oracle: OracleSummary,
    /// No verdict is contradicted by the oracle and the internal
    /// consistency checks hold.
    pub agreement: bool,
    /// Every false verdict is backed by an oracle counterexample.
    pub confirmed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleOutcome {
    pub index: usize,
    pub ideal_basis: Vec<Vec<u64>>,
    #[serde(flatten)]
    pub report: Option<TripleReport>,
    pub error: Option<String>,
    #[serde(skip)]
    pub bound_exceeded: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub algebra: AlgebraSummary,
    pub config: ClassifyConfig,
    pub ideals: IdealSummary,
    pub triples: Vec<TripleOutcome>,
    pub agreement: bool,
    /// Some per-ideal computation hit a resource bound.
    pub partial: bool,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn reports(&self) -> impl Iterator<Item = &TripleReport> {
        self.triples.iter().filter_map(|t| t.report.as_ref())
    }
}

pub fn classify_triple(triple: &TtfTriple<'_>, index: usize, family: &OracleModules, cfg: &ClassifyConfig) -> Result<TripleReport, TorsionError> {
    let central = classify_centrally_split(triple)?;
    let left = classify_left_split(triple, cfg.submodule_bound)?;
    let right = classify_right_split(triple, cfg.n_max, &cfg.search())?;
    let decomposition = if right.holds {
        right_split_decomposition(triple, &right).ok()
    } else {
        None
    };
    let oracle = oracle_split_survey(triple, family, cfg.d_max);
    let purity = torsion::is_left_pure(triple.algebra(), triple.ideal()).pure;
    let verdicts = Verdicts {
        central: central.holds,
        left: left.holds,
        right: right.holds,
    };
    let mut trace = Vec::new();
    trace.push(match &central.idempotent {
        Some(e) => format!("central: I = eA for the central idempotent {e:?}"),
        None => "central: no central idempotent generates I".into(),
    });
    trace.extend(left.trace.iter().map(|s| format!("left: {s}")));
    trace.extend(right.trace.iter().map(|s| format!("right: {s}")));
    let consistent = central.holds == (left.holds && right.holds)
        && right.paths_agree
        && decomposition.as_ref().is_none_or(|d| d.triangular && d.m_faithful && d.m_injective)
        && (!right.holds || oracle.c_not_in_f == 0);
    let agreement = consistent
        && !(left.holds && oracle.left_counterexample.is_some())
        && !(right.holds && oracle.right_counterexample.is_some());
    let confirmed = (left.holds || oracle.left_counterexample.is_some())
        && (right.holds || oracle.right_counterexample.is_some());
    Ok(TripleReport {
        index,
        ideal_basis: triple.ideal().basis_vecs(),
        ideal_dim: triple.ideal().dim(),
        lann_basis: triple.lann().basis_vecs(),
        left_pure: purity,
        hereditary_torsion: purity,
        verdicts,
        criterion_trace: trace,
        central,
        left,
        right,
        decomposition,
        oracle,
        agreement,
        confirmed,
    })
}

fn is_bound_error(e: &TorsionError) -> bool {
    matches!(
        e,
        TorsionError::Module(ModuleError::BoundExceeded { .. }) | TorsionError::Algebra(AlgebraError::BoundExceeded { .. })
    )
}

pub fn full_report(alg: &Algebra, name: Option<&str>, cfg: &ClassifyConfig) -> Result<ClassificationReport, TorsionError> {
    let scan = alg.idempotent_ideals(cfg.idempotent_bound, cfg.lattice_bound)?;
    let family = oracle_modules(alg, cfg)?;
    let triples: Vec<TripleOutcome> = scan
        .ideals
        .par_iter()
        .enumerate()
        .map(|(index, ideal)| {
            let outcome = torsion::ttf_from_ideal(alg, ideal.span())
                .and_then(|t| classify_triple(&t, index, &family, cfg));
            match outcome {
                Ok(r) => TripleOutcome {
                    index,
                    ideal_basis: ideal.basis_vecs(),
                    report: Some(r),
                    error: None,
                    bound_exceeded: false,
                },
                Err(e) => TripleOutcome {
                    index,
                    ideal_basis: ideal.basis_vecs(),
                    report: None,
                    bound_exceeded: is_bound_error(&e),
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    let agreement = triples.iter().all(|t| t.report.as_ref().is_none_or(|r| r.agreement));
    let partial = triples.iter().any(|t| t.bound_exceeded) || !scan.idempotents_exhaustive && scan.lattice_checked.is_none();
    Ok(ClassificationReport {
        algebra: AlgebraSummary {
            name: name.map(str::to_string),
            field: alg.modulus(),
            dim: alg.dim(),
            basis: alg.labels().to_vec(),
        },
        config: cfg.clone(),
        ideals: IdealSummary {
            count: scan.ideals.len(),
            idempotents_exhaustive: scan.idempotents_exhaustive,
            lattice_checked: scan.lattice_checked,
        },
        triples,
        agreement,
        partial,
    })
}
