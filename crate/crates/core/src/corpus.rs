//! Built-in example algebras. The JSON files under `corpus/` are the
//! canonical copies; the builders here regenerate them and double as
//! constructors for other primes.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Quiver, Triangular};
use crate::format::{parse_algebra, InputError};
use crate::modrep::{self, dimension_vectors, Bimodule, EnumerationPlan, RightModule};

pub const CORPUS_ENV: &str = "TTFLAB_CORPUS_DIR";

const MANIFEST: &str = include_str!("../corpus/manifest.json");
const EMBEDDED: &[(&str, &str)] = &[
    ("f2.json", include_str!("../corpus/f2.json")),
    ("lt2.json", include_str!("../corpus/lt2.json")),
    ("ss2.json", include_str!("../corpus/ss2.json")),
    ("m2f2.json", include_str!("../corpus/m2f2.json")),
    ("kron.json", include_str!("../corpus/kron.json")),
    ("kronext.json", include_str!("../corpus/kronext.json")),
    ("dualnum.json", include_str!("../corpus/dualnum.json")),
    ("tri_a.json", include_str!("../corpus/tri_a.json")),
    ("tri_b.json", include_str!("../corpus/tri_b.json")),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub d_max: usize,
    pub n_max: usize,
    /// Largest dimension at which a counterexample is expected for a false
    /// split verdict.
    pub witness_dim: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub idempotents: BTreeMap<String, Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

/// The corpus, read from `TTFLAB_CORPUS_DIR` when set and from the copies
/// compiled into the binary otherwise.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub manifest: Manifest,
    dir: Option<PathBuf>,
}

impl Corpus {
    pub fn load() -> Result<Corpus, InputError> {
        match std::env::var_os(CORPUS_ENV) {
            Some(dir) => Corpus::from_dir(Path::new(&dir)),
            None => Corpus::embedded(),
        }
    }

    pub fn embedded() -> Result<Corpus, InputError> {
        Ok(Corpus {
            manifest: parse_manifest(MANIFEST)?,
            dir: None,
        })
    }

    pub fn from_dir(dir: &Path) -> Result<Corpus, InputError> {
        let path = dir.join("manifest.json");
        let text = std::fs::read_to_string(&path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ok(Corpus {
            manifest: parse_manifest(&text)?,
            dir: Some(dir.to_path_buf()),
        })
    }

    pub fn names(&self) -> Vec<&str> {
        self.manifest.entries.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn entry(&self, name: &str) -> Result<&ManifestEntry, InputError> {
        self.manifest
            .entries
            .iter()
            .find(|e| e.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| InputError::UnknownEntry(name.to_string()))
    }

    pub fn text(&self, entry: &ManifestEntry) -> Result<String, InputError> {
        match &self.dir {
            Some(dir) => {
                let path = dir.join(&entry.file);
                std::fs::read_to_string(&path).map_err(|source| InputError::Io {
                    path: path.display().to_string(),
                    source,
                })
            }
            None => EMBEDDED
                .iter()
                .find(|(f, _)| *f == entry.file)
                .map(|(_, t)| t.to_string())
                .ok_or_else(|| InputError::UnknownEntry(entry.file.clone())),
        }
    }

    pub fn algebra(&self, name: &str) -> Result<Algebra, InputError> {
        let entry = self.entry(name)?;
        parse_algebra(&self.text(entry)?)
    }

    pub fn idempotent(&self, name: &str, key: &str) -> Result<Vec<u64>, InputError> {
        let entry = self.entry(name)?;
        let alg = self.algebra(name)?;
        let p = alg.modulus() as i64;
        entry
            .idempotents
            .get(key)
            .map(|v| v.iter().map(|&x| x.rem_euclid(p) as u64).collect())
            .ok_or_else(|| InputError::UnknownEntry(format!("{name}:{key}")))
    }

    /// Every entry with its algebra, in manifest order.
    pub fn all(&self) -> Result<Vec<(ManifestEntry, Algebra)>, InputError> {
        self.manifest
            .entries
            .iter()
            .map(|e| Ok((e.clone(), parse_algebra(&self.text(e)?)?)))
            .collect()
    }
}

fn parse_manifest(text: &str) -> Result<Manifest, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Schema {
        what: "corpus manifest",
        message: e.to_string(),
    })
}

// ---------------------------------------------------------------------------
// builders

/// Lower triangular 2x2 matrices, basis `e11, e21, e22`.
pub fn lt2(p: u64) -> Algebra {
    let k = Algebra::field(p).expect("prime");
    let m = Bimodule::from_left_module(&k, &k, &RightModule::regular(&k)).expect("k is a bimodule");
    Algebra::triangular(&k, &k, &m)
        .expect("valid")
        .algebra
        .with_labels(vec!["e11".into(), "e21".into(), "e22".into()])
}

/// `F_p x F_p`.
pub fn ss2(p: u64) -> Algebra {
    let k = Algebra::field(p).expect("prime");
    k.product(&k)
        .expect("valid")
        .with_labels(vec!["e1".into(), "e2".into()])
}

pub fn m2(p: u64) -> Algebra {
    Algebra::full_matrix(p, 2).expect("valid")
}

/// Path algebra of two vertices with arrows `a, b: 1 -> 2`.
pub fn kronecker(p: u64) -> Algebra {
    Quiver::new(2)
        .arrow(0, 1, "a")
        .arrow(0, 1, "b")
        .path_algebra(p, 4)
        .expect("finite")
}

/// `F_p[x]/(x^2)`.
pub fn dual_numbers(p: u64) -> Algebra {
    Quiver::new(1)
        .arrow(0, 0, "x")
        .relation(&[(1, &["x", "x"])])
        .path_algebra(p, 4)
        .expect("finite")
        .with_labels(vec!["1".into(), "x".into()])
}

/// The Kronecker extension `[[k, 0], [M, H]]` with `_H M = tau_H(S)` for the
/// simple injective left `H`-module `S`.
#[derive(Clone, Debug)]
pub struct KroneckerExtension {
    pub triangular: Triangular,
    pub h: Algebra,
    /// `S` and `tau_H(S)` as right `H^op`-modules.
    pub simple: RightModule,
    pub tau: RightModule,
}

pub fn kronecker_extension(p: u64) -> KroneckerExtension {
    let h = kronecker(p);
    let hop = h.opposite();
    let simple = modrep::simple_modules(&hop)
        .expect("simples")
        .into_iter()
        .find(|s| modrep::is_injective(&hop, s).expect("injectivity"))
        .expect("the Kronecker algebra has a simple injective");
    let tau = modrep::ar_translate(&hop, &simple).expect("translate");
    let k = Algebra::field(p).expect("prime");
    let m = Bimodule::from_left_module(&h, &k, &tau).expect("bimodule");
    let triangular = Algebra::triangular(&k, &h, &m).expect("valid");
    KroneckerExtension {
        triangular,
        h,
        simple,
        tau,
    }
}

/// Small algebras the random triangular generator draws `C` and `B` from.
pub fn small_library(p: u64) -> Vec<(&'static str, Algebra)> {
    vec![
        ("k", Algebra::field(p).expect("prime")),
        ("k x k", ss2(p)),
        ("k[x]/x^2", dual_numbers(p)),
        ("LT2", lt2(p)),
    ]
}

#[derive(Clone, Debug)]
pub struct GeneratedTriangular {
    pub c_name: &'static str,
    pub b_name: &'static str,
    pub c: Algebra,
    pub b: Algebra,
    pub bimodule: Bimodule,
    pub triangular: Triangular,
}

/// A random `(B, C)`-bimodule of the given dimension, as a random module
/// over `B^op (x) C`; `None` if no valid sample was found.
pub fn random_bimodule(b: &Algebra, c: &Algebra, dim: usize, rng: &mut ChaCha8Rng) -> Option<Bimodule> {
    let t = b.opposite().tensor(c).ok()?;
    let plan = EnumerationPlan::new(&t).ok()?;
    let vectors = dimension_vectors(dim, plan.vertex_count());
    for _ in 0..400 {
        let dims = &vectors[rng.gen_range(0..vectors.len())];
        let entries: Vec<u64> = (0..plan.entry_count(dims))
            .map(|_| rng.gen_range(0..t.modulus()))
            .collect();
        if let Some(m) = plan.build(&t, dims, &entries) {
            return Bimodule::from_tensor_module(b, c, &m).ok();
        }
    }
    None
}

/// Pinned-seed random triangular algebra with total dimension at most
/// `max_total` and a nonzero bimodule.
pub fn random_triangular(p: u64, seed: u64, max_total: usize) -> GeneratedTriangular {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lib = small_library(p);
    loop {
        let (c_name, c) = lib[rng.gen_range(0..lib.len())].clone();
        let (b_name, b) = lib[rng.gen_range(0..lib.len())].clone();
        let used = c.dim() + b.dim();
        if used >= max_total {
            continue;
        }
        let dim = rng.gen_range(1..=max_total - used);
        let Some(bimodule) = random_bimodule(&b, &c, dim, &mut rng) else {
            continue;
        };
        let triangular = Algebra::triangular(&c, &b, &bimodule).expect("validated bimodule");
        return GeneratedTriangular {
            c_name,
            b_name,
            c,
            b,
            bimodule,
            triangular,
        };
    }
}

/// Hereditary algebras for the `[[C, 0], [M, H]]` family.
pub fn hereditary_library(p: u64) -> Vec<(&'static str, Algebra)> {
    vec![
        ("k", Algebra::field(p).expect("prime")),
        ("k x k", ss2(p)),
        ("LT2", lt2(p)),
        ("Kronecker", kronecker(p)),
    ]
}

/// An instance `[[k, 0], [M, H]]` with `H` hereditary and `_H M` faithful.
#[derive(Clone, Debug)]
pub struct FaithfulInstance {
    pub h_name: &'static str,
    pub h: Algebra,
    /// `_H M` as a right `H^op`-module.
    pub module: RightModule,
    pub triangular: Triangular,
}

/// Every faithful left `H`-module of dimension at most `max_dim` up to
/// isomorphism, for each non-semisimple `H` in the hereditary library, and
/// `M = k` over `H = k`.
pub fn faithful_family(p: u64, max_dim: usize) -> Vec<FaithfulInstance> {
    let k = Algebra::field(p).expect("prime");
    let mut out = Vec::new();
    for (h_name, h) in hereditary_library(p) {
        let hop = h.opposite();
        let modules: Vec<RightModule> = if h.dim() == 1 {
            vec![RightModule::regular(&hop)]
        } else if h.is_semisimple() {
            continue;
        } else {
            let stream = modrep::enumerate_modules(&hop, max_dim, 1 << 16, 0).expect("enumeration");
            assert!(stream.exhaustive, "faithful family bound");
            let faithful: Vec<RightModule> = stream.modules.into_iter().filter(|m| m.is_faithful(&hop)).collect();
            modrep::dedup_isomorphic(&hop, faithful)
        };
        for module in modules {
            let m = Bimodule::from_left_module(&h, &k, &module).expect("bimodule");
            let triangular = Algebra::triangular(&k, &h, &m).expect("valid");
            out.push(FaithfulInstance {
                h_name,
                h: h.clone(),
                module,
                triangular,
            });
        }
    }
    out
}

/// The `M_2` table with `e12 e21 = e11` removed: not associative.
pub fn corrupted_m2_table(p: u64) -> (Vec<Vec<Vec<i64>>>, Vec<i64>) {
    let mut table = m2(p).table_rows();
    table[1][2][0] = 0;
    (table, vec![1, 0, 0, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::algebra_to_json;

    fn builders() -> Vec<(&'static str, String)> {
        let tri_a = random_triangular(2, 0xA11CE, 6);
        let tri_b = random_triangular(3, 0xB0B, 6);
        vec![
            ("f2.json", algebra_to_json(&Algebra::field(2).unwrap(), Some("F2"))),
            ("lt2.json", algebra_to_json(&lt2(2), Some("LT2"))),
            ("ss2.json", algebra_to_json(&ss2(2), Some("SS2"))),
            ("m2f2.json", algebra_to_json(&m2(2), Some("M2F2"))),
            ("kron.json", algebra_to_json(&kronecker(2), Some("KRON"))),
            ("kronext.json", algebra_to_json(&kronecker_extension(2).triangular.algebra, Some("KRONEXT"))),
            ("dualnum.json", algebra_to_json(&dual_numbers(2), Some("F2[x]/(x^2)"))),
            ("tri_a.json", algebra_to_json(&tri_a.triangular.algebra, Some("TRI_A"))),
            ("tri_b.json", algebra_to_json(&tri_b.triangular.algebra, Some("TRI_B"))),
        ]
    }

    /// Set `TTFLAB_REGEN=1` to rewrite the corpus files from the builders.
    #[test]
    fn corpus_files_match_builders() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
        let regen = std::env::var_os("TTFLAB_REGEN").is_some();
        for (file, text) in builders() {
            if regen {
                std::fs::write(dir.join(file), &text).unwrap();
            }
            let on_disk = std::fs::read_to_string(dir.join(file)).unwrap();
            assert_eq!(on_disk, text, "{file} is stale");
        }
    }

    #[test]
    fn manifest_entries_load() {
        let corpus = Corpus::embedded().unwrap();
        for (entry, alg) in corpus.all().unwrap() {
            for (key, e) in &entry.idempotents {
                let e: Vec<u64> = e.iter().map(|&x| x as u64).collect();
                assert!(alg.is_idempotent(&e), "{}:{key}", entry.name);
            }
        }
        assert!(corpus.algebra("lt2").is_ok());
        assert!(corpus.algebra("nope").is_err());
    }

    #[test]
    fn kronecker_extension_shape() {
        let ext = kronecker_extension(2);
        let hop = ext.h.opposite();
        assert!(ext.tau.is_faithful(&hop));
        assert_eq!(ext.triangular.dims, (1, ext.tau.dim(), 4));
        assert!(!modrep::is_injective(&hop, &ext.tau).unwrap());
    }

    #[test]
    fn random_triangular_is_pinned() {
        let a = random_triangular(2, 7, 6);
        let b = random_triangular(2, 7, 6);
        assert_eq!(a.triangular.algebra, b.triangular.algebra);
        assert!(a.triangular.algebra.dim() <= 6);
        assert!(a.bimodule.dim() >= 1);
    }
}
