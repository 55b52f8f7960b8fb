//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use ttflab::algebra::{DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_LATTICE_BOUND};
use ttflab::corpus::{self, Corpus};
use ttflab::exactlinalg::{Matrix, Subspace};
use ttflab::modrep::{self, EnumerationPlan, RightModule};
use ttflab::torsion;

const PRIMES: [u64; 3] = [2, 3, 5];

fn matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(0..p, rows * cols).prop_map(move |d| Matrix::from_flat(p, rows, cols, d))
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (0..3usize, 1..6usize, 1..6usize).prop_flat_map(|(i, r, c)| matrix(PRIMES[i], r, c))
}

fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
    (0..3usize, 1..6usize, 0..5usize, 0..5usize).prop_flat_map(|(i, n, a, b)| {
        let p = PRIMES[i];
        (matrix(p, a, n), matrix(p, b, n)).prop_map(|(x, y)| (Subspace::from_matrix(&x), Subspace::from_matrix(&y)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
        if k.rows() > 0 {
            prop_assert!(m.try_mul(&k.transpose()).unwrap().is_zero());
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_is_two_sided(m in (0..3usize, 1..5usize).prop_flat_map(|(i, n)| matrix(PRIMES[i], n, n))) {
        let id = Matrix::identity(m.modulus(), m.rows());
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.try_mul(&inv).unwrap(), id.clone());
                prop_assert_eq!(inv.try_mul(&m).unwrap(), id);
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn subspace_dimension_formula((u, v) in subspace_pair()) {
        let sum = u.sum(&v);
        let meet = u.intersection(&v);
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&sum) && v.is_subspace_of(&sum));
        let q = u.quotient_map();
        prop_assert_eq!(q.cols(), u.codim());
        prop_assert_eq!(Subspace::from_matrix(&q.left_kernel()), u);
    }

    #[test]
    fn opposite_is_an_involution(seed in 0u64..200, odd in any::<bool>()) {
        let p = if odd { 3 } else { 2 };
        let g = corpus::random_triangular(p, seed, 6);
        let a = &g.triangular.algebra;
        prop_assert_eq!(&a.opposite().opposite(), a);
        let reg = RightModule::regular(a);
        prop_assert_eq!(reg.dual().dual(), reg.clone());
        prop_assert!(reg.dual().validate(&a.opposite()).is_ok());
    }

    #[test]
    fn radical_laws_on_sampled_modules(entry in 0usize..9, seed in any::<u64>()) {
        let corpus = Corpus::load().unwrap();
        let name = corpus.names()[entry].to_string();
        let alg = corpus.algebra(&name).unwrap();
        let plan = EnumerationPlan::new(&alg).unwrap();
        let modules = plan.sample(&alg, 3, 3, 300, seed);
        let scan = alg.idempotent_ideals(DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_LATTICE_BOUND).unwrap();
        for ideal in &scan.ideals {
            let t = torsion::ttf_from_ideal(&alg, ideal.span()).unwrap();
            for m in &modules {
                prop_assert!(ttflab::cli::radical_laws(&t, m).unwrap());
                let c = t.c(m);
                let tm = t.t(m);
                // c(N) is the smallest submodule with quotient in T and
                // t(N) the largest submodule in T.
                prop_assert!(m.quotient(&c).unwrap().module.times_subspace(ideal.span()).is_zero());
                prop_assert!(m.times_subspace(ideal.span()).is_subspace_of(&c));
                prop_assert!(m.annihilated_by(ideal.span()) == tm);
            }
        }
    }

    #[test]
    fn translate_kills_projectives(seed in 0u64..100) {
        let g = corpus::random_triangular(2, seed, 5);
        let a = &g.triangular.algebra;
        let (proj, _) = modrep::indecomposable_projectives_injectives(a).unwrap();
        for p in &proj {
            prop_assert!(modrep::is_projective(a, p).unwrap());
            prop_assert_eq!(modrep::ar_translate(a, p).unwrap().dim(), 0);
        }
    }
}
