//! Leibniz algebras by structure constants, their representations and
//! A-Leibniz algebras, and the product constructions built from them.
//!
//! The bracket is `[e_i, e_j] = Σ_k c[i][j][k] e_k`. Left multiplication
//! `L(x)` has column `j` equal to `[x, e_j]`; right multiplication `R(y)`
//! has column `i` equal to `[e_i, y]`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linear::{axpy, basis_vector, zero_vector, Matrix, Rational, ThreeTensor, Vector};
use crate::report::{Check, Report};

/// The dual of a representation map: `⟨f*(x)u*, v⟩ = -⟨u*, f(x)v⟩`, i.e. the
/// negated transpose in dual bases.
pub fn dual_action(m: &Matrix) -> Matrix {
    m.transpose().neg()
}

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    names: Vec<String>,
    sc: ThreeTensor,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl LeibnizAlgebra {
    /// Validating constructor; fails with the first triple that breaks the
    /// Leibniz identity.
    pub fn new(names: Vec<String>, sc: ThreeTensor) -> Result<Self> {
        let alg = Self::new_unchecked(names, sc)?;
        if let Some(v) = alg.check_leibniz().first_witness() {
            return Err(Error::NotLeibniz {
                triple: (v.indices[0], v.indices[1], v.indices[2]),
            });
        }
        Ok(alg)
    }

    /// Builds the table without checking the Leibniz identity. Only the
    /// shape is validated.
    pub fn new_unchecked(names: Vec<String>, sc: ThreeTensor) -> Result<Self> {
        let n = sc.dim();
        if names.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} basis names for dimension {n}",
                names.len()
            )));
        }
        let left = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k, j| sc.get(i, j, k).clone()))
            .collect();
        let right = (0..n)
            .map(|j| Matrix::from_fn(n, n, |k, i| sc.get(i, j, k).clone()))
            .collect();
        Ok(Self { names, sc, left, right })
    }

    /// Builds from a sparse list of nonzero products `[e_i, e_j] = v`.
    pub fn from_products(names: Vec<String>, products: &[(usize, usize, Vector)]) -> Result<Self> {
        Self::new(names.clone(), Self::table(names.len(), products)?)
    }

    pub fn from_products_unchecked(
        names: Vec<String>,
        products: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        Self::new_unchecked(names.clone(), Self::table(names.len(), products)?)
    }

    fn table(n: usize, products: &[(usize, usize, Vector)]) -> Result<ThreeTensor> {
        let mut sc = ThreeTensor::zeros(n);
        for (i, j, v) in products {
            if *i >= n || *j >= n || v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "product ({}, {}) does not fit dimension {n}",
                    i + 1,
                    j + 1
                )));
            }
            for (k, c) in v.iter().enumerate() {
                *sc.entry_mut(*i, *j, k) += c;
            }
        }
        Ok(sc)
    }

    pub fn abelian(n: usize) -> Self {
        Self::new_unchecked(default_names("e", n), ThreeTensor::zeros(n)).expect("shape")
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constants(&self) -> &ThreeTensor {
        &self.sc
    }

    pub fn with_names(&self, names: Vec<String>) -> Result<Self> {
        Self::new_unchecked(names, self.sc.clone())
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.left[i].column(j)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let image = self.left[i].mul_vec(y);
            axpy(&mut out, xi, &image);
        }
        out
    }

    /// `L(e_i)`.
    pub fn left_basis(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// `R(e_j)`.
    pub fn right_basis(&self, j: usize) -> &Matrix {
        &self.right[j]
    }

    /// `L(x)` with `L(x)y = [x, y]`.
    pub fn left_mult(&self, x: &[Rational]) -> Result<Matrix> {
        self.combine(&self.left, x)
    }

    /// `R(y)` with `R(y)x = [x, y]`.
    pub fn right_mult(&self, y: &[Rational]) -> Result<Matrix> {
        self.combine(&self.right, y)
    }

    fn combine(&self, mats: &[Matrix], x: &[Rational]) -> Result<Matrix> {
        let n = self.dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in dimension {n}",
                x.len()
            )));
        }
        Ok(linear_combination(n, n, mats, x))
    }

    /// `[e_i, [e_j, e_k]] = [[e_i, e_j], e_k] + [e_j, [e_i, e_k]]` on every
    /// basis triple.
    pub fn check_leibniz(&self) -> Check {
        let n = self.dim();
        let mut check = Check::new("Leibniz identity");
        for i in 0..n {
            for j in 0..n {
                let ij = self.bracket_basis(i, j);
                for k in 0..n {
                    let lhs = self.left[i].mul_vec(&self.left[j].column(k));
                    let mut rhs = self.right[k].mul_vec(&ij);
                    let tail = self.left[j].mul_vec(&self.left[i].column(k));
                    axpy(&mut rhs, &Rational::from_integer(1.into()), &tail);
                    check.compare("[x,[y,z]] = [[x,y],z] + [y,[x,z]]", &[i, j, k], lhs, rhs);
                }
            }
        }
        check
    }

    pub fn is_leibniz(&self) -> bool {
        self.check_leibniz().passed()
    }

    /// Nonzero products `(i, j, [e_i, e_j])` in lexicographic order.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }
}

pub(crate) fn linear_combination(rows: usize, cols: usize, mats: &[Matrix], x: &[Rational]) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// A Leibniz algebra whose bracket is antisymmetric (hence satisfies Jacobi).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    inner: LeibnizAlgebra,
}

impl LieAlgebra {
    pub fn new(alg: LeibnizAlgebra) -> Result<Self> {
        let n = alg.dim();
        for i in 0..n {
            for j in i..n {
                let a = alg.bracket_basis(i, j);
                let b = alg.bracket_basis(j, i);
                if a.iter().zip(&b).any(|(x, y)| !(x + y).is_zero()) {
                    return Err(Error::NotLie(format!(
                        "[e{}, e{}] + [e{}, e{}] != 0",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        if let Some(v) = alg.check_leibniz().first_witness() {
            return Err(Error::NotLie(format!("Jacobi identity fails: {v}")));
        }
        Ok(Self { inner: alg })
    }

    pub fn as_leibniz(&self) -> &LeibnizAlgebra {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }
}

/// `(l, r, V)`: one `m × m` matrix per basis element of the algebra for each
/// of the two actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    module_dim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

/// The three representation axioms, each over all basis pairs.
#[derive(Clone, Debug)]
pub struct RepresentationReport {
    pub left_hom: Check,
    pub right_hom: Check,
    pub right_left: Check,
}

impl Report for RepresentationReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.left_hom, &self.right_hom, &self.right_left]
    }
}

impl Representation {
    pub fn new(alg: &LeibnizAlgebra, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let rep = Self::new_unchecked(alg, l, r)?;
        let report = rep.check(alg)?;
        for c in report.checks() {
            if let Some(v) = c.first_witness() {
                return Err(Error::InvalidRepresentation(v.to_string()));
            }
        }
        Ok(rep)
    }

    pub fn new_unchecked(alg: &LeibnizAlgebra, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let n = alg.dim();
        if l.len() != n || r.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} left and {} right matrices for an algebra of dimension {n}",
                l.len(),
                r.len()
            )));
        }
        let m = l.first().or(r.first()).map_or(0, Matrix::rows);
        if l.iter().chain(&r).any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::ShapeMismatch("action matrices are not all m x m".into()));
        }
        Ok(Self { module_dim: m, l, r })
    }

    /// `(L_A, R_A, A)`.
    pub fn regular(alg: &LeibnizAlgebra) -> Self {
        let n = alg.dim();
        Self {
            module_dim: n,
            l: (0..n).map(|i| alg.left_basis(i).clone()).collect(),
            r: (0..n).map(|i| alg.right_basis(i).clone()).collect(),
        }
    }

    pub fn zero(alg: &LeibnizAlgebra, module_dim: usize) -> Self {
        let n = alg.dim();
        Self {
            module_dim,
            l: vec![Matrix::zeros(module_dim, module_dim); n],
            r: vec![Matrix::zeros(module_dim, module_dim); n],
        }
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn l_basis(&self, i: usize) -> &Matrix {
        &self.l[i]
    }

    pub fn r_basis(&self, i: usize) -> &Matrix {
        &self.r[i]
    }

    pub fn l_of(&self, x: &[Rational]) -> Matrix {
        linear_combination(self.module_dim, self.module_dim, &self.l, x)
    }

    pub fn r_of(&self, x: &[Rational]) -> Matrix {
        linear_combination(self.module_dim, self.module_dim, &self.r, x)
    }

    pub fn check(&self, alg: &LeibnizAlgebra) -> Result<RepresentationReport> {
        let n = alg.dim();
        if self.l.len() != n {
            return Err(Error::ShapeMismatch("representation is for another algebra".into()));
        }
        let mut left_hom = Check::new("l([x,y]) = l(x)l(y) - l(y)l(x)");
        let mut right_hom = Check::new("r([x,y]) = l(x)r(y) - r(y)l(x)");
        let mut right_left = Check::new("r(y)l(x) = -r(y)r(x)");
        for i in 0..n {
            for j in 0..n {
                let xy = alg.bracket_basis(i, j);
                let (lx, ly, rx, ry) = (&self.l[i], &self.l[j], &self.r[i], &self.r[j]);
                left_hom.compare(
                    &left_hom.name.clone(),
                    &[i, j],
                    self.l_of(&xy).entries().to_vec(),
                    lx.mul(ly).sub(&ly.mul(lx)).entries().to_vec(),
                );
                right_hom.compare(
                    &right_hom.name.clone(),
                    &[i, j],
                    self.r_of(&xy).entries().to_vec(),
                    lx.mul(ry).sub(&ry.mul(lx)).entries().to_vec(),
                );
                right_left.compare(
                    &right_left.name.clone(),
                    &[i, j],
                    ry.mul(lx).entries().to_vec(),
                    ry.mul(rx).neg().entries().to_vec(),
                );
            }
        }
        Ok(RepresentationReport {
            left_hom,
            right_hom,
            right_left,
        })
    }

    /// `(l*, -l* - r*, V*)`.
    pub fn dual(&self) -> Self {
        Self {
            module_dim: self.module_dim,
            l: self.l.iter().map(dual_action).collect(),
            r: self
                .l
                .iter()
                .zip(&self.r)
                .map(|(l, r)| dual_action(l).add(&dual_action(r)).neg())
                .collect(),
        }
    }
}

/// `A ⋉_{l,r} V` with `[x+u, y+v] = [x,y] + l(x)v + r(y)u`. The basis is
/// that of `A` followed by that of `V`.
pub fn semidirect_product(
    alg: &LeibnizAlgebra,
    rep: &Representation,
    module_names: Vec<String>,
) -> Result<LeibnizAlgebra> {
    let report = rep.check(alg)?;
    if let Some(v) = report.checks().iter().find_map(|c| c.first_witness()) {
        return Err(Error::InvalidRepresentation(v.to_string()));
    }
    if module_names.len() != rep.module_dim() {
        return Err(Error::ShapeMismatch("module basis names".into()));
    }
    let (n, m) = (alg.dim(), rep.module_dim());
    let mut sc = ThreeTensor::zeros(n + m);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.bracket_basis(i, j).into_iter().enumerate() {
                *sc.entry_mut(i, j, k) = c;
            }
        }
        for b in 0..m {
            for (k, c) in rep.l_basis(i).column(b).into_iter().enumerate() {
                *sc.entry_mut(i, n + b, n + k) = c;
            }
            for (k, c) in rep.r_basis(i).column(b).into_iter().enumerate() {
                *sc.entry_mut(n + b, i, n + k) = c;
            }
        }
    }
    let mut names = alg.names().to_vec();
    names.extend(module_names);
    LeibnizAlgebra::new(names, sc)
}

pub fn dual_names(names: &[String]) -> Vec<String> {
    names.iter().map(|s| format!("{s}*")).collect()
}

/// `A ⋉_{L*, -L*-R*} A*`, the phase space carrier.
pub fn semidirect_with_coregular(alg: &LeibnizAlgebra) -> Result<LeibnizAlgebra> {
    semidirect_product(alg, &Representation::regular(alg).dual(), dual_names(alg.names()))
}

/// `g ⊕ g*` with `[x+a*, y+b*] = {x,y} + ad*(x)b*`.
pub fn hemisemidirect_product(lie: &LieAlgebra) -> Result<LeibnizAlgebra> {
    let g = lie.as_leibniz();
    let n = g.dim();
    let coadjoint = Representation {
        module_dim: n,
        l: (0..n).map(|i| dual_action(g.left_basis(i))).collect(),
        r: vec![Matrix::zeros(n, n); n],
    };
    semidirect_product(g, &coadjoint, dual_names(g.names()))
}

/// `A ⊕ B` with componentwise bracket and vanishing cross terms.
pub fn direct_sum(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> LeibnizAlgebra {
    let (n, m) = (a.dim(), b.dim());
    let mut sc = ThreeTensor::zeros(n + m);
    for ((i, j, k), c) in a.structure_constants().nonzero_terms() {
        *sc.entry_mut(i, j, k) = c.clone();
    }
    for ((i, j, k), c) in b.structure_constants().nonzero_terms() {
        *sc.entry_mut(n + i, n + j, n + k) = c.clone();
    }
    let mut names = a.names().to_vec();
    for s in b.names() {
        let mut s = s.clone();
        while names.contains(&s) {
            s.push('\'');
        }
        names.push(s);
    }
    LeibnizAlgebra::new_unchecked(names, sc).expect("shape")
}

/// A representation `(l, r, V)` that also carries a Leibniz bracket on `V`.
#[derive(Clone, Debug)]
pub struct ALeibnizModule {
    pub rep: Representation,
    /// The bracket on `V`, stored as an (unchecked) algebra on `V`.
    pub bracket: LeibnizAlgebra,
}

impl ALeibnizModule {
    pub fn new(rep: Representation, bracket: LeibnizAlgebra) -> Result<Self> {
        if bracket.dim() != rep.module_dim() {
            return Err(Error::ShapeMismatch("V-bracket dimension differs from the module".into()));
        }
        Ok(Self { rep, bracket })
    }

    pub fn module_dim(&self) -> usize {
        self.rep.module_dim()
    }
}

#[derive(Clone, Debug)]
pub struct ALeibnizReport {
    pub representation: RepresentationReport,
    pub derivation: Check,
    pub mixed: Check,
    pub right: Check,
    pub module_leibniz: Check,
}

impl Report for ALeibnizReport {
    fn checks(&self) -> Vec<&Check> {
        let mut v = self.representation.checks();
        v.extend([&self.derivation, &self.mixed, &self.right, &self.module_leibniz]);
        v
    }
}

/// Checks the representation axioms, the three compatibility identities
/// between the actions and the `V`-bracket, and the Leibniz identity on `V`.
pub fn check_a_leibniz(alg: &LeibnizAlgebra, module: &ALeibnizModule) -> Result<ALeibnizReport> {
    let representation = module.rep.check(alg)?;
    let (n, m) = (alg.dim(), module.module_dim());
    let v = &module.bracket;
    let mut derivation = Check::new("l(x)[u,v] = [l(x)u,v] + [u,l(x)v]");
    let mut mixed = Check::new("[u,l(x)v] = [r(x)u,v] + l(x)[u,v]");
    let mut right = Check::new("[u,r(x)v] = r(x)[u,v] + [v,r(x)u]");
    for x in 0..n {
        let (l, r) = (module.rep.l_basis(x), module.rep.r_basis(x));
        for a in 0..m {
            let u = basis_vector(m, a);
            for b in 0..m {
                let w = basis_vector(m, b);
                let uw = v.bracket_basis(a, b);
                let name = derivation.name.clone();
                derivation.compare(
                    &name,
                    &[x, a, b],
                    l.mul_vec(&uw),
                    add(&v.bracket(&l.mul_vec(&u), &w), &v.bracket(&u, &l.mul_vec(&w))),
                );
                let name = mixed.name.clone();
                mixed.compare(
                    &name,
                    &[x, a, b],
                    v.bracket(&u, &l.mul_vec(&w)),
                    add(&v.bracket(&r.mul_vec(&u), &w), &l.mul_vec(&uw)),
                );
                let name = right.name.clone();
                right.compare(
                    &name,
                    &[x, a, b],
                    v.bracket(&u, &r.mul_vec(&w)),
                    add(&r.mul_vec(&uw), &v.bracket(&w, &r.mul_vec(&u))),
                );
            }
        }
    }
    let mut module_leibniz = v.check_leibniz();
    module_leibniz.name = "Leibniz identity on V".into();
    Ok(ALeibnizReport {
        representation,
        derivation,
        mixed,
        right,
        module_leibniz,
    })
}

fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// The spaces a tagged map can live between. The number is the dimension of
/// the underlying algebra `A` (or of the module for `Module`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    A(usize),
    Dual(usize),
    /// `A ⊕ A*`, basis `(e_1..e_n, e*_1..e*_n)`.
    Double(usize),
    DoubleDual(usize),
    /// `A ⊕ A` (two copies of `A`).
    Sum(usize),
    SumDual(usize),
    Module(usize),
    ModuleDual(usize),
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::A(n) | Space::Dual(n) | Space::Module(n) | Space::ModuleDual(n) => n,
            Space::Double(n) | Space::DoubleDual(n) | Space::Sum(n) | Space::SumDual(n) => 2 * n,
        }
    }

    pub fn dual(self) -> Self {
        match self {
            Space::A(n) => Space::Dual(n),
            Space::Dual(n) => Space::A(n),
            Space::Double(n) => Space::DoubleDual(n),
            Space::DoubleDual(n) => Space::Double(n),
            Space::Sum(n) => Space::SumDual(n),
            Space::SumDual(n) => Space::Sum(n),
            Space::Module(n) => Space::ModuleDual(n),
            Space::ModuleDual(n) => Space::Module(n),
        }
    }
}

/// A matrix together with the spaces it maps between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedLinearMap {
    matrix: Matrix,
    domain: Space,
    codomain: Space,
}

impl TaggedLinearMap {
    pub fn new(matrix: Matrix, domain: Space, codomain: Space) -> Result<Self> {
        if matrix.cols() != domain.dim() || matrix.rows() != codomain.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map {:?} -> {:?}",
                matrix.rows(),
                matrix.cols(),
                domain,
                codomain
            )));
        }
        Ok(Self { matrix, domain, codomain })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn domain(&self) -> Space {
        self.domain
    }

    pub fn codomain(&self) -> Space {
        self.codomain
    }

    pub fn apply(&self, x: &[Rational]) -> Vector {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ first`; the codomain of `first` must be the domain of `self`.
    pub fn compose(&self, first: &TaggedLinearMap) -> Result<Self> {
        if first.codomain != self.domain {
            return Err(Error::TagMismatch(format!(
                "cannot compose {:?} -> {:?} after {:?} -> {:?}",
                self.domain, self.codomain, first.domain, first.codomain
            )));
        }
        Self::new(self.matrix.mul(&first.matrix), first.domain, self.codomain)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::TagMismatch("adding maps between different spaces".into()));
        }
        Self::new(self.matrix.add(&other.matrix), self.domain, self.codomain)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&Self::new(other.matrix.neg(), other.domain, other.codomain)?)
    }

    /// The adjoint `f*: W* -> V*` with `⟨f* w*, v⟩ = ⟨w*, f v⟩`.
    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.matrix.inverse()?, self.codomain, self.domain)
    }
}

/// True iff `phi` is invertible and `phi([x,y]_a) = [phi x, phi y]_b` on all
/// basis pairs.
pub fn check_isomorphism(a: &LeibnizAlgebra, b: &LeibnizAlgebra, phi: &TaggedLinearMap) -> Result<bool> {
    Ok(isomorphism_report(a, b, phi)?.passed())
}

/// The homomorphism identity as a check, plus invertibility.
pub fn isomorphism_report(a: &LeibnizAlgebra, b: &LeibnizAlgebra, phi: &TaggedLinearMap) -> Result<Check> {
    let m = phi.matrix();
    let n = a.dim();
    if !m.is_square() || m.cols() != n || b.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} map between algebras of dimensions {n} and {}",
            m.rows(),
            m.cols(),
            b.dim()
        )));
    }
    let mut check = Check::new("phi([x,y]) = [phi(x), phi(y)]");
    if !m.is_invertible() {
        check.push(crate::report::Violation {
            identity: "phi invertible".into(),
            indices: vec![],
            lhs: vec![m.determinant()?],
            rhs: vec![],
        });
    }
    let images: Vec<Vector> = (0..n).map(|i| m.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = m.mul_vec(&a.bracket_basis(i, j));
            let rhs = b.bracket(&images[i], &images[j]);
            check.compare("phi([e_i,e_j]) = [phi(e_i), phi(e_j)]", &[i, j], lhs, rhs);
        }
    }
    Ok(check)
}
