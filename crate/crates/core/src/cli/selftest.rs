//! The invariant suite behind `leibniz selftest`.
//!
//! Fixture files are checked against the built-in registry (parse, Leibniz
//! identity, entrywise equality, canonical round trip); then the main
//! constructions are re-verified on the algebras and tensors that were
//! loaded from those files.

use std::collections::HashMap;
use std::path::Path;

use crate::algebra::{hemisemidirect_product, LeibnizAlgebra, LieAlgebra, Space, TaggedLinearMap};
use crate::bialgebra::{
    check_r_conditions, classify, double_canonical_r, t_skew, theta_isomorphism, LeibnizBialgebra,
};
use crate::catalog;
use crate::cli::formats::{AlgebraFile, TensorFile};
use crate::error::{Error, Result};
use crate::linear::{int, Matrix, TwoTensor, Vector};
use crate::random::tensor_batch;
use crate::report::{Check, Report, Violation};
use crate::rota_baxter::{
    check_mirror_diagram, check_rb, factorizable_from_quadratic_rb, phase_space_quadratic_rb,
    quadratic_rb_from_factorizable, rb_to_double_factorizable,
};
use crate::yang_baxter::{
    check_invariance_forms, check_operator_characterization, check_sigma_equivariance, clybe_check,
    invariance_check,
};

pub const EMBEDDED: &[(&str, &str)] = &[
    ("e4.alg", include_str!("../../fixtures/e4.alg")),
    ("g2.alg", include_str!("../../fixtures/g2.alg")),
    ("h4.alg", include_str!("../../fixtures/h4.alg")),
    ("abelian3.alg", include_str!("../../fixtures/abelian3.alg")),
    ("nilpotent3.alg", include_str!("../../fixtures/nilpotent3.alg")),
    ("heisenberg3.alg", include_str!("../../fixtures/heisenberg3.alg")),
    ("r4.t2", include_str!("../../fixtures/r4.t2")),
    ("r4_skew.t2", include_str!("../../fixtures/r4_skew.t2")),
    ("r_h4.t2", include_str!("../../fixtures/r_h4.t2")),
    ("zero.t2", include_str!("../../fixtures/zero.t2")),
    ("e1e2.t2", include_str!("../../fixtures/e1e2.t2")),
    ("id.mat", include_str!("../../fixtures/id.mat")),
    ("id4.mat", include_str!("../../fixtures/id4.mat")),
    ("e1.vec", include_str!("../../fixtures/e1.vec")),
];

pub fn embedded_files() -> Vec<(String, String)> {
    EMBEDDED
        .iter()
        .map(|(n, t)| (n.to_string(), t.to_string()))
        .collect()
}

/// Reads every fixture file name known to the registry from `dir`.
pub fn files_from_dir(dir: &Path) -> Result<Vec<(String, String)>> {
    EMBEDDED
        .iter()
        .map(|(name, _)| {
            let path = dir.join(name);
            std::fs::read_to_string(&path)
                .map(|t| (name.to_string(), t))
                .map_err(|source| Error::Io {
                    path: path.display().to_string(),
                    source,
                })
        })
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

impl Report for SelftestReport {
    fn checks(&self) -> Vec<&Check> {
        self.checks.iter().collect()
    }
}

fn flag(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    let mut c = Check::new(name);
    if !ok {
        c.push(Violation {
            identity: detail.into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        });
    }
    c
}

fn renamed(mut c: Check, name: String) -> Check {
    c.name = name;
    c
}

fn expected_tensor(file: &str) -> Option<TwoTensor> {
    Some(match file {
        "r4.t2" => catalog::r4(),
        "r4_skew.t2" => catalog::r4().skew_part(),
        "r_h4.t2" => catalog::r_h4(),
        "zero.t2" => TwoTensor::zeros(4),
        "e1e2.t2" => TwoTensor::from_terms(4, &[(0, 1, int(1))]).expect("in range"),
        _ => return None,
    })
}

fn expected_matrix(file: &str) -> Option<Matrix> {
    match file {
        "id.mat" => Some(Matrix::identity(2)),
        "id4.mat" => Some(Matrix::identity(4)),
        _ => None,
    }
}

#[derive(Default)]
struct Loaded {
    algebras: HashMap<String, LeibnizAlgebra>,
    tensors: HashMap<String, TwoTensor>,
    matrices: HashMap<String, Matrix>,
}

fn check_fixture_files(files: &[(String, String)], out: &mut Vec<Check>) -> Loaded {
    let mut loaded = Loaded::default();
    for (file, text) in files {
        if let Some(stem) = file.strip_suffix(".alg") {
            let parsed = AlgebraFile::parse(text).and_then(|f| Ok((f.to_algebra_unchecked()?, f)));
            let (alg, parsed_file) = match parsed {
                Ok(p) => p,
                Err(e) => {
                    out.push(flag(format!("fixture {file}: parses"), false, e.to_string()));
                    continue;
                }
            };
            out.push(flag(
                format!("fixture {file}: canonical round trip"),
                parsed_file.to_text() == *text,
                "re-serialized text differs from the file",
            ));
            out.push(renamed(alg.check_leibniz(), format!("fixture {file}: Leibniz identity")));
            let expected = catalog::lookup(stem);
            let mut m = Check::new(format!("fixture {file}: matches registry entry {stem}"));
            match &expected {
                Some(e) if e.dim() == alg.dim() => {
                    m.compare(
                        "structure constants",
                        &[],
                        alg.structure_constants().as_flat().to_vec(),
                        e.structure_constants().as_flat().to_vec(),
                    );
                    m.compare("basis names", &[], vec![], if e.names() == alg.names() { vec![] } else { vec![int(1)] });
                }
                _ => {
                    m.compare("registry entry with the same dimension", &[], vec![], vec![int(1)]);
                }
            }
            out.push(m);
            loaded.algebras.insert(stem.to_string(), alg);
            continue;
        }
        let parsed = TensorFile::parse(text);
        let file_obj = match parsed {
            Ok(f) => f,
            Err(e) => {
                out.push(flag(format!("fixture {file}: parses"), false, e.to_string()));
                continue;
            }
        };
        out.push(flag(
            format!("fixture {file}: canonical round trip"),
            file_obj.to_text() == *text,
            "re-serialized text differs from the file",
        ));
        let mut m = Check::new(format!("fixture {file}: matches registry"));
        if let Some(expected) = expected_tensor(file) {
            match file_obj.to_tensor() {
                Ok(t) if t.dim() == expected.dim() => {
                    m.compare("coefficients", &[], t.as_flat().to_vec(), expected.as_flat().to_vec());
                    loaded.tensors.insert(file.clone(), t);
                }
                Ok(_) => {
                    m.compare("dimension", &[], vec![int(file_obj.dim as i64)], vec![int(expected.dim() as i64)]);
                }
                Err(e) => m.push(Violation { identity: e.to_string(), indices: vec![], lhs: vec![], rhs: vec![] }),
            }
        } else if let Some(expected) = expected_matrix(file) {
            match file_obj.to_matrix() {
                Ok(t) if t.rows() == expected.rows() => {
                    m.compare("entries", &[], t.entries().to_vec(), expected.entries().to_vec());
                    loaded.matrices.insert(file.clone(), t);
                }
                Ok(_) => {
                    m.compare("dimension", &[], vec![int(file_obj.dim as i64)], vec![int(expected.rows() as i64)]);
                }
                Err(e) => m.push(Violation { identity: e.to_string(), indices: vec![], lhs: vec![], rhs: vec![] }),
            }
        } else {
            match file_obj.to_vector() {
                Ok(v) => {
                    let expected: Vector = crate::linear::basis_vector(4, 0);
                    m.compare("coordinates", &[], v, expected);
                }
                Err(e) => m.push(Violation { identity: e.to_string(), indices: vec![], lhs: vec![], rhs: vec![] }),
            }
        }
        out.push(m);
    }
    loaded
}

fn missing(what: &str) -> Check {
    flag(format!("{what}: inputs available"), false, format!("{what} needs fixtures that failed to load"))
}

fn suite(loaded: &Loaded, seed: u64, samples: usize, out: &mut Vec<Check>) -> Result<()> {
    let alg = |n: &str| loaded.algebras.get(n);
    let ten = |n: &str| loaded.tensors.get(n);

    match (alg("e4"), ten("r4.t2")) {
        (Some(e4), Some(r4)) => {
            out.push(renamed(clybe_check(e4, r4)?, "e4, r4: [[r,r]] = 0".into()));
            out.push(renamed(invariance_check(e4, &r4.skew_part())?, "e4, r4: r - σ(r) invariant".into()));
            let b = LeibnizBialgebra::from_r(e4.clone(), r4.clone());
            out.push(flag("e4, r4: Leibniz bialgebra", b.is_ok(), format!("{:?}", b.as_ref().err())));
            let c = classify(e4, r4)?;
            out.push(flag(
                "e4, r4: quasi-triangular, factorizable, not triangular",
                c.quasi_triangular && c.factorizable && !c.triangular,
                c.to_string(),
            ));
            let t = t_skew(r4);
            let n = 4;
            let expected = Matrix::from_columns(
                n,
                &[
                    vec![int(0), int(0), int(-1), int(0)],
                    vec![int(0), int(0), int(0), int(-1)],
                    vec![int(1), int(0), int(0), int(0)],
                    vec![int(0), int(1), int(0), int(0)],
                ],
            )?;
            let mut tc = Check::new("e4, r4: T_{r-σ(r)} on the dual basis");
            for a in 0..n {
                tc.compare("T_{r-σ(r)}(e*_a)", &[a], t.matrix().column(a), expected.column(a));
            }
            out.push(tc);
            match bialgebra_double(e4, r4) {
                Ok(checks) => out.extend(checks),
                Err(e) => out.push(flag("e4, r4: double", false, e.to_string())),
            }
            for lambda in [-1, 1, -2] {
                out.extend(round_trip(e4, r4, lambda, "e4, r4"));
            }
            if let (Some(h4), Some(rh)) = (alg("h4"), ten("r_h4.t2")) {
                let mut cols = Vec::new();
                for i in 0..4 {
                    cols.push(crate::linear::basis_vector(4, i));
                }
                let phi = TaggedLinearMap::new(Matrix::from_columns(4, &cols)?, Space::A(4), Space::A(4))?;
                let ok = crate::algebra::check_isomorphism(h4, e4, &phi)?;
                out.push(flag("h4 -> e4, e1* -> e3, e2* -> e4: isomorphism", ok, "not a homomorphism"));
                out.push(flag("h4 -> e4 carries r_h4 to r4", rh == r4, "tensors differ"));
            } else {
                out.push(missing("h4 isomorphism"));
            }
        }
        _ => out.push(missing("e4 with r4")),
    }

    match (alg("g2"), alg("h4"), ten("r_h4.t2"), loaded.matrices.get("id.mat")) {
        (Some(g2), Some(h4), Some(rh), Some(id)) => {
            match LieAlgebra::new(g2.clone()).and_then(|l| hemisemidirect_product(&l)) {
                Ok(hs) => {
                    let mut c = Check::new("hemisemidirect product of g2 = h4");
                    c.compare(
                        "structure constants",
                        &[],
                        hs.structure_constants().as_flat().to_vec(),
                        h4.structure_constants().as_flat().to_vec(),
                    );
                    out.push(c);
                }
                Err(e) => out.push(flag("hemisemidirect product of g2 = h4", false, e.to_string())),
            }
            match rb_to_double_factorizable(g2, id, &int(-1)) {
                Ok(b) => {
                    let r = b.r.expect("built from r");
                    let mut c = Check::new("g2, id, weight -1: r = e1*⊗e1 + e2*⊗e2");
                    c.compare("coefficients", &[], r.as_flat().to_vec(), rh.as_flat().to_vec());
                    out.push(c);
                    for lambda in [-1, 1, -2] {
                        out.extend(round_trip(&b.algebra, &r, lambda, "g2 phase space"));
                    }
                }
                Err(e) => out.push(flag("g2, id, weight -1: factorizable double", false, e.to_string())),
            }
        }
        _ => out.push(missing("g2 phase space")),
    }

    let mut names: Vec<&String> = loaded.algebras.keys().collect();
    names.sort();
    for name in names {
        let a = &loaded.algebras[name];
        if !a.is_leibniz() {
            continue;
        }
        let n = a.dim();
        out.push(flag(
            format!("{name}: id is Rota-Baxter of weight -1"),
            check_rb(a, &Matrix::identity(n), &int(-1))?,
            "identity fails",
        ));
        let ps = phase_space_quadratic_rb(a, &Matrix::identity(n), &int(-1));
        out.push(flag(
            format!("{name}: phase space of id at weight -1"),
            ps.is_ok(),
            format!("{:?}", ps.err()),
        ));
        out.push(random_equivalences(name, a, seed, samples)?);
    }
    Ok(())
}

fn bialgebra_double(e4: &LeibnizAlgebra, r4: &TwoTensor) -> Result<Vec<Check>> {
    let b = LeibnizBialgebra::from_r(e4.clone(), r4.clone())?;
    let (d, r) = double_canonical_r(&b)?;
    let c = classify(&d, &r)?;
    let (_, theta) = theta_isomorphism(e4, r4)?;
    Ok(vec![
        flag("double of (e4, r4): canonical r factorizable", c.factorizable, c.to_string()),
        renamed(theta, "double of (e4, r4): θ onto e4 ⊕ e4".into()),
    ])
}

fn round_trip(alg: &LeibnizAlgebra, r: &TwoTensor, lambda: i64, label: &str) -> Vec<Check> {
    let l = int(lambda);
    let name = format!("{label}, λ = {lambda}: round trip and mirror square");
    let run = || -> Result<Vec<Check>> {
        let data = quadratic_rb_from_factorizable(alg, r, &l)?;
        let back = factorizable_from_quadratic_rb(&data)?.r.expect("built from r");
        let again = quadratic_rb_from_factorizable(alg, &back, &l)?;
        let mut c = Check::new(name.clone());
        c.compare("r", &[], back.as_flat().to_vec(), r.as_flat().to_vec());
        c.compare("ω", &[], again.omega().entries().to_vec(), data.omega().entries().to_vec());
        c.compare("β", &[], again.beta().entries().to_vec(), data.beta().entries().to_vec());
        let mut checks = vec![c];
        checks.extend(check_mirror_diagram(alg, r, &l)?.checks().into_iter().cloned());
        Ok(checks)
    };
    run().unwrap_or_else(|e| vec![flag(name, false, e.to_string())])
}

fn random_equivalences(name: &str, a: &LeibnizAlgebra, seed: u64, samples: usize) -> Result<Check> {
    let mut c = Check::new(format!("{name}: {samples} random tensors, r-level conditions agree with direct checks"));
    for (idx, r) in tensor_batch(seed, a.dim(), samples).iter().enumerate() {
        let ok = check_sigma_equivariance(a, r)?
            && check_r_conditions(a, r)?.equivalences_hold()
            && check_operator_characterization(a, r)?.equivalences_hold()
            && check_invariance_forms(a, r)?.equivalences_hold();
        if !ok {
            c.push(Violation {
                identity: "equivalence".into(),
                indices: vec![idx],
                lhs: r.as_flat().to_vec(),
                rhs: vec![],
            });
        }
    }
    Ok(c)
}

pub fn run_selftest(files: &[(String, String)], seed: u64, samples: usize) -> Result<SelftestReport> {
    let mut checks = Vec::new();
    let loaded = check_fixture_files(files, &mut checks);
    suite(&loaded, seed, samples, &mut checks)?;
    Ok(SelftestReport { checks })
}
