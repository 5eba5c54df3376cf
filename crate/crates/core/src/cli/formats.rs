//! JSON file formats.
//!
//! Algebra files (`.alg`):
//!
//! ```json
//! {
//!   "name": "g2",
//!   "dim": 2,
//!   "basis": ["e1", "e2"],
//!   "brackets": [
//!     {"left": "e1", "right": "e2", "terms": [["1", "e1"]]},
//!     {"left": "e2", "right": "e1", "terms": [["-1", "e1"]]}
//!   ]
//! }
//! ```
//!
//! Only nonzero products are listed. Coefficients are `"p/q"` or `"p"`
//! strings. `basis` defaults to `e1..en`.
//!
//! Tensor files (`.t2`, `.mat`, `.form`, `.vec`) list nonzero entries with
//! one-based indices: `[i, j, "c"]` for `tensor2`, `matrix` and `form`, and
//! `[i, "c"]` for `vector`. A `tensor2` term is `c e_i ⊗ e_j`; a `matrix`
//! term is the entry in row `i`, column `j`, so column `j` is the image of
//! `e_j`; a `form` term is `ω(e_i, e_j) = c`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{default_names, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linear::{format_rational, parse_rational, Matrix, Rational, ThreeTensor, TwoTensor, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorKind {
    Tensor2,
    Matrix,
    Form,
    Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Entry(usize, usize, String),
    Coordinate(usize, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub kind: TensorKind,
    pub dim: usize,
    /// The algebra file the tensor belongs to, informational only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default)]
    pub terms: Vec<Term>,
}

fn coefficient(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Parse(format!("invalid rational coefficient {s:?}")))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn basis_names(&self) -> Vec<String> {
        self.basis.clone().unwrap_or_else(|| default_names("e", self.dim))
    }

    /// Structure constants, without checking the Leibniz identity.
    pub fn to_algebra_unchecked(&self) -> Result<LeibnizAlgebra> {
        let names = self.basis_names();
        if names.len() != self.dim {
            return Err(Error::Parse(format!(
                "{} basis names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        let mut index = HashMap::new();
        for (i, s) in names.iter().enumerate() {
            if index.insert(s.as_str(), i).is_some() {
                return Err(Error::Parse(format!("duplicate basis name {s:?}")));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Parse(format!("unknown basis element {s:?}")))
        };
        let n = self.dim;
        let mut sc = ThreeTensor::zeros(n);
        let mut seen = vec![false; n * n];
        for entry in &self.brackets {
            let (i, j) = (lookup(&entry.left)?, lookup(&entry.right)?);
            if std::mem::replace(&mut seen[i * n + j], true) {
                return Err(Error::Parse(format!(
                    "product [{}, {}] listed twice",
                    entry.left, entry.right
                )));
            }
            for (c, b) in &entry.terms {
                let k = lookup(b)?;
                let c = coefficient(c)?;
                *sc.entry_mut(i, j, k) += c;
            }
        }
        LeibnizAlgebra::new_unchecked(names, sc)
    }

    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        let alg = self.to_algebra_unchecked()?;
        if let Some(v) = alg.check_leibniz().first_witness() {
            let [i, j, k] = [v.indices[0], v.indices[1], v.indices[2]];
            return Err(Error::NotLeibniz { triple: (i, j, k) });
        }
        Ok(alg)
    }

    pub fn from_algebra(alg: &LeibnizAlgebra, name: Option<&str>) -> Self {
        let names = alg.names();
        let brackets = alg
            .nonzero_products()
            .into_iter()
            .map(|(i, j, v)| BracketEntry {
                left: names[i].clone(),
                right: names[j].clone(),
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (format_rational(c), names[k].clone()))
                    .collect(),
            })
            .collect();
        Self {
            name: name.map(str::to_string),
            dim: alg.dim(),
            basis: Some(names.to_vec()),
            brackets,
        }
    }

    /// Canonical text form: one bracket entry per line.
    pub fn to_text(&self) -> String {
        let mut out = String::from("{\n");
        if let Some(name) = &self.name {
            let _ = writeln!(out, "  \"name\": {},", quote(name));
        }
        let _ = write!(out, "  \"dim\": {}", self.dim);
        if let Some(basis) = &self.basis {
            let names: Vec<String> = basis.iter().map(|s| quote(s)).collect();
            let _ = write!(out, ",\n  \"basis\": [{}]", names.join(", "));
        }
        let lines = self.brackets.iter().map(|e| {
            let terms: Vec<String> = e
                .terms
                .iter()
                .map(|(c, b)| format!("[{}, {}]", quote(c), quote(b)))
                .collect();
            format!(
                "{{\"left\": {}, \"right\": {}, \"terms\": [{}]}}",
                quote(&e.left),
                quote(&e.right),
                terms.join(", ")
            )
        });
        push_list(&mut out, "brackets", lines);
        out
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn push_list(out: &mut String, key: &str, lines: impl Iterator<Item = String>) {
    let lines: Vec<String> = lines.map(|l| format!("    {l}")).collect();
    if lines.is_empty() {
        let _ = write!(out, ",\n  \"{key}\": []\n}}\n");
    } else {
        let _ = write!(out, ",\n  \"{key}\": [\n{}\n  ]\n}}\n", lines.join(",\n"));
    }
}

impl TensorFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Validated entries as zero-based `(i, j, c)`; `j` is `0` for vectors.
    fn entries(&self) -> Result<Vec<(usize, usize, Rational)>> {
        let n = self.dim;
        let mut seen = BTreeMap::new();
        for t in &self.terms {
            let (i, j, c) = match (self.kind, t) {
                (TensorKind::Vector, Term::Coordinate(i, c)) => (*i, 1, c),
                (TensorKind::Vector, Term::Entry(..)) => {
                    return Err(Error::Parse("vector terms are [i, \"c\"]".into()))
                }
                (_, Term::Entry(i, j, c)) => (*i, *j, c),
                (_, Term::Coordinate(..)) => {
                    return Err(Error::Parse("entries are [i, j, \"c\"]".into()))
                }
            };
            let jmax = if self.kind == TensorKind::Vector { 1 } else { n };
            if i == 0 || j == 0 || i > n || j > jmax {
                return Err(Error::Parse(format!(
                    "index ({i}, {j}) out of range for dimension {n} (indices are 1-based)"
                )));
            }
            if seen.insert((i - 1, j - 1), coefficient(c)?).is_some() {
                return Err(Error::Parse(format!("entry ({i}, {j}) listed twice")));
            }
        }
        Ok(seen.into_iter().map(|((i, j), c)| (i, j, c)).collect())
    }

    fn expect(&self, kind: TensorKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::Parse(format!(
                "expected a {kind:?} file, found {:?}",
                self.kind
            )));
        }
        Ok(())
    }

    pub fn to_tensor(&self) -> Result<TwoTensor> {
        self.expect(TensorKind::Tensor2)?;
        TwoTensor::from_terms(self.dim, &self.entries()?)
    }

    /// Matrices and forms both load as a square matrix.
    pub fn to_matrix(&self) -> Result<Matrix> {
        if !matches!(self.kind, TensorKind::Matrix | TensorKind::Form) {
            return Err(Error::Parse(format!("expected a matrix or form file, found {:?}", self.kind)));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, j, c) in self.entries()? {
            m[(i, j)] = c;
        }
        Ok(m)
    }

    pub fn to_vector(&self) -> Result<Vector> {
        self.expect(TensorKind::Vector)?;
        let mut v = crate::linear::zero_vector(self.dim);
        for (i, _, c) in self.entries()? {
            v[i] = c;
        }
        Ok(v)
    }

    pub fn from_tensor(t: &TwoTensor) -> Self {
        Self {
            kind: TensorKind::Tensor2,
            dim: t.dim(),
            algebra: None,
            terms: t
                .nonzero_terms()
                .map(|(i, j, c)| Term::Entry(i + 1, j + 1, format_rational(c)))
                .collect(),
        }
    }

    pub fn from_matrix(m: &Matrix, kind: TensorKind) -> Self {
        let mut terms = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m[(i, j)].is_zero() {
                    terms.push(Term::Entry(i + 1, j + 1, format_rational(&m[(i, j)])));
                }
            }
        }
        Self {
            kind,
            dim: m.rows(),
            algebra: None,
            terms,
        }
    }

    /// Canonical text form: one term per line.
    pub fn to_text(&self) -> String {
        let kind = match self.kind {
            TensorKind::Tensor2 => "tensor2",
            TensorKind::Matrix => "matrix",
            TensorKind::Form => "form",
            TensorKind::Vector => "vector",
        };
        let mut out = format!("{{\n  \"kind\": {},\n  \"dim\": {}", quote(kind), self.dim);
        if let Some(a) = &self.algebra {
            let _ = write!(out, ",\n  \"algebra\": {}", quote(a));
        }
        let lines = self.terms.iter().map(|t| match t {
            Term::Entry(i, j, c) => format!("[{i}, {j}, {}]", quote(c)),
            Term::Coordinate(i, c) => format!("[{i}, {}]", quote(c)),
        });
        push_list(&mut out, "terms", lines);
        out
    }
}

pub fn parse_algebra(path: &Path) -> Result<LeibnizAlgebra> {
    AlgebraFile::parse(&read(path)?)?.to_algebra()
}

pub fn parse_algebra_unchecked(path: &Path) -> Result<LeibnizAlgebra> {
    AlgebraFile::parse(&read(path)?)?.to_algebra_unchecked()
}

pub fn read_tensor_file(path: &Path) -> Result<TensorFile> {
    TensorFile::parse(&read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebra_round_trip() {
        for f in catalog::FIXTURES {
            let alg = (f.algebra)();
            let file = AlgebraFile::from_algebra(&alg, Some(f.name));
            let text = file.to_text();
            let back = AlgebraFile::parse(&text).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_text(), text);
            assert_eq!(back.to_algebra().unwrap(), alg);
        }
    }

    #[test]
    fn empty_bracket_list_is_abelian() {
        let alg = AlgebraFile::parse(r#"{"dim": 3}"#).unwrap().to_algebra().unwrap();
        assert_eq!(alg, catalog::abelian(3));
    }

    #[test]
    fn broken_identity_names_triple() {
        let text = r#"{"dim": 1, "brackets": [{"left": "e1", "right": "e1", "terms": [["1", "e1"]]}]}"#;
        let err = AlgebraFile::parse(text).unwrap().to_algebra().unwrap_err();
        assert!(matches!(err, Error::NotLeibniz { triple: (0, 0, 0) }));
        assert!(err.to_string().contains("(1, 1, 1)"), "{err}");
    }

    #[test]
    fn rejects_bad_input() {
        let unknown = r#"{"dim": 2, "brackets": [{"left": "e1", "right": "x", "terms": []}]}"#;
        assert!(AlgebraFile::parse(unknown).unwrap().to_algebra().is_err());
        let float = r#"{"kind": "tensor2", "dim": 2, "terms": [[1, 1, 0.5]]}"#;
        assert!(TensorFile::parse(float).is_err());
        let range = r#"{"kind": "tensor2", "dim": 2, "terms": [[3, 1, "1"]]}"#;
        assert!(TensorFile::parse(range).unwrap().to_tensor().is_err());
        let zero_based = r#"{"kind": "matrix", "dim": 2, "terms": [[0, 1, "1"]]}"#;
        assert!(TensorFile::parse(zero_based).unwrap().to_matrix().is_err());
    }

    #[test]
    fn tensor_round_trip() {
        let file = TensorFile::from_tensor(&catalog::r4());
        let text = file.to_text();
        assert_eq!(TensorFile::parse(&text).unwrap().to_tensor().unwrap(), catalog::r4());
        assert_eq!(TensorFile::parse(&text).unwrap().to_text(), text);
    }
}
