//! Skew-symmetric quadratic forms, Rota-Baxter operators of weight `λ`, and
//! the passage between quadratic Rota-Baxter Leibniz algebras and
//! triangular or factorizable Leibniz bialgebras.
//!
//! A form `ω` is stored as its Gram matrix `Ω[i][j] = ω(e_i, e_j)`. The map
//! `ω♯: A -> A*` is `⟨ω♯(x), y⟩ = ω(x, y)`, whose matrix is `Ωᵀ`.

use num_traits::Zero;

use crate::algebra::{
    dual_names, semidirect_with_coregular, ALeibnizModule, LeibnizAlgebra, Representation, Space,
    TaggedLinearMap,
};
use crate::bialgebra::{classify, LeibnizBialgebra};
use crate::error::{Error, Result};
use crate::linear::{add_vectors, basis_vector, scale_vector, sub_vectors, Matrix, Rational, ThreeTensor, TwoTensor, Vector};
use crate::report::{Check, Report, Violation};
use crate::yang_baxter::{clybe_defect, is_invariant, skew_part_invariant, t_of, DualOps};

fn ensure_square(alg: &LeibnizAlgebra, m: &Matrix, what: &str) -> Result<()> {
    let n = alg.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "{what} is {}x{}, algebra has dimension {n}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn flat(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

#[derive(Clone, Debug)]
pub struct QuadraticReport {
    pub skew: Check,
    pub nondegenerate: Check,
    pub invariant: Check,
}

impl QuadraticReport {
    pub fn is_skew(&self) -> bool {
        self.skew.passed()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate.passed()
    }

    pub fn is_invariant(&self) -> bool {
        self.invariant.passed()
    }
}

impl Report for QuadraticReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.skew, &self.nondegenerate, &self.invariant]
    }
}

/// `ω(x, y) = -ω(y, x)`, `ω` nondegenerate, and
/// `ω(x, [y,z]) = ω([x,z] + [z,x], y)` on all basis triples.
pub fn check_quadratic(alg: &LeibnizAlgebra, omega: &Matrix) -> Result<QuadraticReport> {
    ensure_square(alg, omega, "omega")?;
    let n = alg.dim();
    let mut skew = Check::new("ω skew-symmetric");
    for i in 0..n {
        for j in i..n {
            skew.compare(
                "ω(x,y) = -ω(y,x)",
                &[i, j],
                vec![omega[(i, j)].clone()],
                vec![-&omega[(j, i)]],
            );
        }
    }
    let mut nondegenerate = Check::new("ω nondegenerate");
    if let Some(v) = omega.transpose().kernel().into_iter().next() {
        nondegenerate.push(Violation {
            identity: "ω(v, -) = 0 for v".into(),
            indices: vec![],
            lhs: v.clone(),
            rhs: omega.transpose().mul_vec(&v),
        });
    }
    let form = |x: &[Rational], y: &[Rational]| -> Rational {
        let oy = omega.mul_vec(y);
        x.iter().zip(&oy).map(|(a, b)| a * b).sum()
    };
    let mut invariant = Check::new("ω(x,[y,z]) = ω([x,z]+[z,x], y)");
    for x in 0..n {
        let ex = basis_vector(n, x);
        for y in 0..n {
            let ey = basis_vector(n, y);
            for z in 0..n {
                let sym = add_vectors(&alg.bracket_basis(x, z), &alg.bracket_basis(z, x));
                invariant.compare(
                    "ω(x,[y,z]) = ω([x,z]+[z,x], y)",
                    &[x, y, z],
                    vec![form(&ex, &alg.bracket_basis(y, z))],
                    vec![form(&sym, &ey)],
                );
            }
        }
    }
    Ok(QuadraticReport {
        skew,
        nondegenerate,
        invariant,
    })
}

/// `ω♯: A -> A*` and the tensor `φ_ω` with `T_{φ_ω} = (ω♯)⁻¹`.
pub fn omega_sharp_and_phi(omega: &Matrix) -> Result<(TaggedLinearMap, TwoTensor)> {
    if !omega.is_square() {
        return Err(Error::ShapeMismatch("omega must be square".into()));
    }
    let n = omega.rows();
    let sharp = TaggedLinearMap::new(omega.transpose(), Space::A(n), Space::Dual(n))?;
    let phi = TwoTensor::from_matrix(&omega.inverse()?)?;
    Ok((sharp, phi))
}

/// `(ω skew and invariant, φ_ω skew and invariant)` for an invertible `ω`;
/// the two always agree.
pub fn phi_correspondence(alg: &LeibnizAlgebra, omega: &Matrix) -> Result<(bool, bool)> {
    let report = check_quadratic(alg, omega)?;
    let (_, phi) = omega_sharp_and_phi(omega)?;
    Ok((
        report.is_skew() && report.is_invariant(),
        phi.is_skew() && is_invariant(alg, &phi)?,
    ))
}

/// `[βx,βy] = β([x,βy] + [βx,y] + λ[x,y])` on all basis pairs.
pub fn rb_report(alg: &LeibnizAlgebra, beta: &Matrix, lambda: &Rational) -> Result<Check> {
    ensure_square(alg, beta, "beta")?;
    let n = alg.dim();
    let mut check = Check::new(format!("Rota-Baxter identity of weight {}", crate::linear::format_rational(lambda)));
    let images: Vec<Vector> = (0..n).map(|i| beta.column(i)).collect();
    for x in 0..n {
        let ex = basis_vector(n, x);
        for y in 0..n {
            let ey = basis_vector(n, y);
            let inner = add_vectors(
                &add_vectors(&alg.bracket(&ex, &images[y]), &alg.bracket(&images[x], &ey)),
                &scale_vector(lambda, &alg.bracket_basis(x, y)),
            );
            check.compare(
                "[βx,βy] = β([x,βy] + [βx,y] + λ[x,y])",
                &[x, y],
                alg.bracket(&images[x], &images[y]),
                beta.mul_vec(&inner),
            );
        }
    }
    Ok(check)
}

pub fn check_rb(alg: &LeibnizAlgebra, beta: &Matrix, lambda: &Rational) -> Result<bool> {
    Ok(rb_report(alg, beta, lambda)?.passed())
}

/// `[Tu,Tv] = T(l(Tu)v + r(Tv)u + λ[u,v]_V)` on all basis pairs of `V`.
pub fn relative_rb_report(
    alg: &LeibnizAlgebra,
    module: &ALeibnizModule,
    t: &TaggedLinearMap,
    lambda: &Rational,
) -> Result<Check> {
    let (n, m) = (alg.dim(), module.module_dim());
    if t.matrix().rows() != n || t.matrix().cols() != m || t.codomain() != Space::A(n) {
        return Err(Error::ShapeMismatch(format!(
            "T must map the {m}-dimensional module into A ({n}-dimensional)"
        )));
    }
    let rep = &module.rep;
    let images: Vec<Vector> = (0..m).map(|u| t.matrix().column(u)).collect();
    let mut check = Check::new("relative Rota-Baxter identity");
    for u in 0..m {
        let eu = basis_vector(m, u);
        for v in 0..m {
            let ev = basis_vector(m, v);
            let inner = add_vectors(
                &add_vectors(&rep.l_of(&images[u]).mul_vec(&ev), &rep.r_of(&images[v]).mul_vec(&eu)),
                &scale_vector(lambda, &module.bracket.bracket_basis(u, v)),
            );
            check.compare(
                "[Tu,Tv] = T(l(Tu)v + r(Tv)u + λ[u,v])",
                &[u, v],
                alg.bracket(&images[u], &images[v]),
                t.apply(&inner),
            );
        }
    }
    Ok(check)
}

pub fn check_relative_rb(
    alg: &LeibnizAlgebra,
    module: &ALeibnizModule,
    t: &TaggedLinearMap,
    lambda: &Rational,
) -> Result<bool> {
    Ok(relative_rb_report(alg, module, t, lambda)?.passed())
}

/// `a* ∘ b* = L*(T_s a*) b*` on `A*`, for skew-symmetric invariant `s`.
pub fn circ_bracket(alg: &LeibnizAlgebra, s: &TwoTensor) -> Result<LeibnizAlgebra> {
    if s.dim() != alg.dim() {
        return Err(Error::DimensionMismatch("tensor and algebra dimensions differ".into()));
    }
    if !s.is_skew() {
        return Err(Error::NotSkew);
    }
    if !is_invariant(alg, s)? {
        return Err(Error::NotInvariant);
    }
    Ok(circ_bracket_unchecked(alg, s))
}

fn circ_bracket_unchecked(alg: &LeibnizAlgebra, s: &TwoTensor) -> LeibnizAlgebra {
    let n = alg.dim();
    let ops = DualOps::new(alg);
    let ts = t_of(s);
    let mut sc = ThreeTensor::zeros(n);
    for a in 0..n {
        let image = ts.apply(&basis_vector(n, a));
        for b in 0..n {
            let v = ops.l(&image, &basis_vector(n, b));
            for (k, c) in v.into_iter().enumerate() {
                *sc.entry_mut(a, b, k) = c;
            }
        }
    }
    LeibnizAlgebra::new_unchecked(dual_names(alg.names()), sc).expect("names match")
}

/// `(L*, -L*-R*, A*, ∘_s)`.
pub fn circ_module(alg: &LeibnizAlgebra, s: &TwoTensor) -> Result<ALeibnizModule> {
    let bracket = circ_bracket(alg, s)?;
    ALeibnizModule::new(Representation::regular(alg).dual(), bracket)
}

#[derive(Clone, Debug)]
pub struct RelativeRbReport {
    pub defect_zero: bool,
    pub relative_rb: Check,
    pub operator_form: Check,
}

impl RelativeRbReport {
    pub fn equivalences_hold(&self) -> bool {
        self.defect_zero == self.relative_rb.passed() && self.defect_zero == self.operator_form.passed()
    }
}

impl Report for RelativeRbReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.relative_rb, &self.operator_form]
    }
}

/// For `r` with invariant skew part: `[[r,r]] = 0` against `T_r` being a
/// relative Rota-Baxter operator of weight `-1` on `(L*, -L*-R*, A*, ∘_{r-σ(r)})`,
/// and against the expanded operator identity.
pub fn check_thm_rrb(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<RelativeRbReport> {
    if !skew_part_invariant(alg, r)? {
        return Err(Error::SkewPartNotInvariant);
    }
    let n = alg.dim();
    let s = r.skew_part();
    let module = circ_module(alg, &s)?;
    let tr = t_of(r);
    let relative_rb = relative_rb_report(alg, &module, &tr, &-crate::linear::one())?;

    let ops = DualOps::new(alg);
    let ts = t_of(&s);
    let mut operator_form = Check::new("[T_r a*, T_r b*] = T_r(L*(T_r a*)b* - (L*+R*)(T_r b*)a* - a*∘b*)");
    for a in 0..n {
        let ea = basis_vector(n, a);
        let ta = tr.apply(&ea);
        for b in 0..n {
            let eb = basis_vector(n, b);
            let tb = tr.apply(&eb);
            let inner = sub_vectors(
                &sub_vectors(&ops.l(&ta, &eb), &ops.lr(&tb, &ea)),
                &ops.l(&ts.apply(&ea), &eb),
            );
            operator_form.compare(
                "[T_r a*, T_r b*] = T_r(L*(T_r a*)b* - (L*+R*)(T_r b*)a* - L*(T_{r-σ(r)} a*)b*)",
                &[a, b],
                alg.bracket(&ta, &tb),
                tr.apply(&inner),
            );
        }
    }
    Ok(RelativeRbReport {
        defect_zero: clybe_defect(alg, r)?.is_zero(),
        relative_rb,
        operator_form,
    })
}

/// `β = T_r ∘ ω♯`.
pub fn beta_from_r(alg: &LeibnizAlgebra, omega: &Matrix, r: &TwoTensor) -> Result<Matrix> {
    ensure_square(alg, omega, "omega")?;
    if r.dim() != alg.dim() {
        return Err(Error::DimensionMismatch("tensor and algebra dimensions differ".into()));
    }
    let (sharp, _) = omega_sharp_and_phi(omega)?;
    Ok(t_of(r).compose(&sharp)?.matrix().clone())
}

#[derive(Clone, Debug)]
pub struct RbTypeReport {
    pub defect_zero: bool,
    pub operator_identity: Check,
}

impl RbTypeReport {
    pub fn equivalence_holds(&self) -> bool {
        self.defect_zero == self.operator_identity.passed()
    }
}

/// For a skew quadratic `ω` and `r` with invariant skew part, `β = T_r ω♯`:
/// `[[r,r]] = 0` against `[βx,βy] = β([βx,y] + [x,βy] - [x, T_{r-σ(r)} ω♯ y])`.
pub fn check_rb_type(alg: &LeibnizAlgebra, omega: &Matrix, r: &TwoTensor) -> Result<RbTypeReport> {
    let q = check_quadratic(alg, omega)?;
    if let Some(v) = q.checks().iter().find_map(|c| c.first_witness()) {
        return Err(Error::Invalid(format!("omega is not skew quadratic: {v}")));
    }
    if !skew_part_invariant(alg, r)? {
        return Err(Error::SkewPartNotInvariant);
    }
    let n = alg.dim();
    let beta = beta_from_r(alg, omega, r)?;
    let (sharp, _) = omega_sharp_and_phi(omega)?;
    let ts_sharp = t_of(&r.skew_part()).compose(&sharp)?;
    let mut check = Check::new("[βx,βy] = β([βx,y] + [x,βy] - [x, T_{r-σ(r)} ω♯ y])");
    for x in 0..n {
        let ex = basis_vector(n, x);
        let bx = beta.column(x);
        for y in 0..n {
            let ey = basis_vector(n, y);
            let by = beta.column(y);
            let inner = sub_vectors(
                &add_vectors(&alg.bracket(&bx, &ey), &alg.bracket(&ex, &by)),
                &alg.bracket(&ex, &ts_sharp.apply(&ey)),
            );
            check.compare(
                "[βx,βy] = β([βx,y] + [x,βy] - [x, T_{r-σ(r)} ω♯ y])",
                &[x, y],
                alg.bracket(&bx, &by),
                beta.mul_vec(&inner),
            );
        }
    }
    Ok(RbTypeReport {
        defect_zero: clybe_defect(alg, r)?.is_zero(),
        operator_identity: check,
    })
}

/// `βᵀΩ + Ωβ + λΩ`, the Gram matrix of `ω(βx,y) + ω(x,βy) + λω(x,y)`.
fn compatibility_defect(omega: &Matrix, beta: &Matrix, lambda: &Rational) -> Matrix {
    beta.transpose()
        .mul(omega)
        .add(&omega.mul(beta))
        .add(&omega.scale(lambda))
}

fn compatibility_check(omega: &Matrix, beta: &Matrix, lambda: &Rational) -> Check {
    let d = compatibility_defect(omega, beta, lambda);
    let mut check = Check::new("ω(βx,y) + ω(x,βy) + λω(x,y) = 0");
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            check.expect_zero("ω(βx,y) + ω(x,βy) + λω(x,y) = 0", &[i, j], vec![d[(i, j)].clone()]);
        }
    }
    check
}

#[derive(Clone, Debug)]
pub struct QuadraticRbReport {
    pub quadratic: QuadraticReport,
    pub rb: Check,
    pub compat: Check,
}

impl QuadraticRbReport {
    pub fn quadratic_ok(&self) -> bool {
        self.quadratic.passed()
    }

    pub fn rb_ok(&self) -> bool {
        self.rb.passed()
    }

    pub fn compat_ok(&self) -> bool {
        self.compat.passed()
    }
}

impl Report for QuadraticRbReport {
    fn checks(&self) -> Vec<&Check> {
        let mut v = self.quadratic.checks();
        v.extend([&self.rb, &self.compat]);
        v
    }
}

pub fn check_quadratic_rb(
    alg: &LeibnizAlgebra,
    omega: &Matrix,
    beta: &Matrix,
    lambda: &Rational,
) -> Result<QuadraticRbReport> {
    let quadratic = check_quadratic(alg, omega)?;
    let rb = rb_report(alg, beta, lambda)?;
    Ok(QuadraticRbReport {
        quadratic,
        rb,
        compat: compatibility_check(omega, beta, lambda),
    })
}

/// A skew-symmetric quadratic Rota-Baxter Leibniz algebra `(A, ω, β)` of
/// weight `λ`. Always valid once constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRBData {
    algebra: LeibnizAlgebra,
    omega: Matrix,
    beta: Matrix,
    weight: Rational,
}

impl QuadraticRBData {
    pub fn new(algebra: LeibnizAlgebra, omega: Matrix, beta: Matrix, weight: Rational) -> Result<Self> {
        let report = check_quadratic_rb(&algebra, &omega, &beta, &weight)?;
        if let Some(v) = report.checks().iter().find_map(|c| c.first_witness()) {
            return Err(Error::Invalid(v.to_string()));
        }
        Ok(Self {
            algebra,
            omega,
            beta,
            weight,
        })
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    /// `(A, -ω, -(λ id + β))` at the same weight.
    pub fn mirror(&self) -> Result<Self> {
        let n = self.algebra.dim();
        let beta = Matrix::identity(n).scale(&self.weight).add(&self.beta).neg();
        Self::new(self.algebra.clone(), self.omega.neg(), beta, self.weight.clone())
    }

    /// `r` with `T_r = β (ω♯)⁻¹`.
    pub fn r_tensor(&self) -> TwoTensor {
        let w_inv = self.omega.transpose().inverse().expect("nondegenerate");
        TwoTensor::from_matrix(&self.beta.mul(&w_inv).transpose()).expect("square")
    }
}

pub fn mirror(data: &QuadraticRBData) -> Result<QuadraticRBData> {
    data.mirror()
}

/// The Gram matrix of `ω_p(x+a*, y+b*) = ⟨x,b*⟩ - ⟨a*,y⟩`.
pub fn phase_space_form(n: usize) -> Matrix {
    let id = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    Matrix::block2(&z, &id, &id.neg(), &z).expect("square blocks")
}

/// `(A ⋉_{L*,-L*-R*} A*, ω_p, β - (β+λ id)*)` for a Rota-Baxter `β` of weight `λ`.
pub fn phase_space_quadratic_rb(alg: &LeibnizAlgebra, beta: &Matrix, lambda: &Rational) -> Result<QuadraticRBData> {
    let report = rb_report(alg, beta, lambda)?;
    if let Some(v) = report.first_witness() {
        return Err(Error::NotRotaBaxter(v.to_string()));
    }
    let n = alg.dim();
    let shifted = beta.add(&Matrix::identity(n).scale(lambda));
    let big = Matrix::block2(beta, &Matrix::zeros(n, n), &Matrix::zeros(n, n), &shifted.transpose().neg())?;
    QuadraticRBData::new(semidirect_with_coregular(alg)?, phase_space_form(n), big, lambda.clone())
}

/// Weight `0`: `T_r = β (ω♯)⁻¹` gives a triangular Leibniz bialgebra.
pub fn triangular_from_weight0(data: &QuadraticRBData) -> Result<LeibnizBialgebra> {
    if !data.weight.is_zero() {
        return Err(Error::WrongWeight("expected weight 0".into()));
    }
    let r = data.r_tensor();
    let c = classify(&data.algebra, &r)?;
    if !c.triangular {
        return Err(Error::Invalid(format!("resulting r is not triangular ({c})")));
    }
    LeibnizBialgebra::from_r(data.algebra.clone(), r)
}

/// Weight `λ ≠ 0`: `T_r = β (ω♯)⁻¹` gives a factorizable Leibniz bialgebra.
pub fn factorizable_from_quadratic_rb(data: &QuadraticRBData) -> Result<LeibnizBialgebra> {
    if data.weight.is_zero() {
        return Err(Error::WrongWeight("expected a nonzero weight".into()));
    }
    let r = data.r_tensor();
    let c = classify(&data.algebra, &r)?;
    if !c.factorizable {
        return Err(Error::Invalid(format!("resulting r is not factorizable ({c})")));
    }
    LeibnizBialgebra::from_r(data.algebra.clone(), r)
}

/// `r = Σ_i (β+λ)e_i ⊗ e*_i + e*_i ⊗ β(e_i)` on `A ⋉ A*`.
pub fn rb_double_r(beta: &Matrix, lambda: &Rational) -> TwoTensor {
    let n = beta.rows();
    let shifted = beta.add(&Matrix::identity(n).scale(lambda));
    let mut r = TwoTensor::zeros(2 * n);
    for i in 0..n {
        for k in 0..n {
            r.set(k, n + i, shifted[(k, i)].clone());
            r.set(n + i, k, beta[(k, i)].clone());
        }
    }
    r
}

pub fn rb_to_double_factorizable(alg: &LeibnizAlgebra, beta: &Matrix, lambda: &Rational) -> Result<LeibnizBialgebra> {
    let report = rb_report(alg, beta, lambda)?;
    if let Some(v) = report.first_witness() {
        return Err(Error::NotRotaBaxter(v.to_string()));
    }
    if lambda.is_zero() {
        return Err(Error::WrongWeight("expected a nonzero weight".into()));
    }
    let algebra = semidirect_with_coregular(alg)?;
    let r = rb_double_r(beta, lambda);
    let c = classify(&algebra, &r)?;
    if !c.factorizable {
        return Err(Error::Invalid(format!("resulting r is not factorizable ({c})")));
    }
    LeibnizBialgebra::from_r(algebra, r)
}

/// `ω(x,y) = -λ⟨T⁻¹_{r-σ(r)} x, y⟩`, `β = T_r ω♯`.
pub fn quadratic_rb_from_factorizable(alg: &LeibnizAlgebra, r: &TwoTensor, lambda: &Rational) -> Result<QuadraticRBData> {
    if lambda.is_zero() {
        return Err(Error::WrongWeight("expected a nonzero weight".into()));
    }
    let c = classify(alg, r)?;
    if !c.factorizable {
        return Err(Error::NotFactorizable(c.to_string()));
    }
    let s = r.skew_part().to_matrix().transpose();
    let sharp = s.inverse()?.scale(&-lambda);
    let beta = r.to_matrix().transpose().mul(&sharp);
    QuadraticRBData::new(alg.clone(), sharp.transpose(), beta, lambda.clone())
}

/// `r - σ(r) = -λ φ_ω` against the compatibility of `ω` and `β = T_r ω♯`.
pub fn skew_part_vs_compatibility(omega: &Matrix, r: &TwoTensor, lambda: &Rational) -> Result<(bool, bool)> {
    let (sharp, phi) = omega_sharp_and_phi(omega)?;
    let beta = t_of(r).compose(&sharp)?;
    Ok((
        r.skew_part() == phi.scale(&-lambda),
        compatibility_defect(omega, beta.matrix(), lambda).is_zero(),
    ))
}

#[derive(Clone, Debug)]
pub struct MirrorReport {
    /// Quadratic data from `σ(r)` against the mirror of that from `r`.
    pub mirror_matches: Check,
    /// Each data set maps back to the tensor it came from.
    pub round_trips: Check,
}

impl Report for MirrorReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.mirror_matches, &self.round_trips]
    }
}

pub fn check_mirror_diagram(alg: &LeibnizAlgebra, r: &TwoTensor, lambda: &Rational) -> Result<MirrorReport> {
    let data = quadratic_rb_from_factorizable(alg, r, lambda)?;
    let flipped = quadratic_rb_from_factorizable(alg, &r.swap(), lambda)?;
    let mirrored = data.mirror()?;
    let mut mirror_matches = Check::new("quadratic data of σ(r) = mirror of quadratic data of r");
    mirror_matches.compare("ω", &[], flat(&flipped.omega), flat(&mirrored.omega));
    mirror_matches.compare("β", &[], flat(&flipped.beta), flat(&mirrored.beta));
    let mut round_trips = Check::new("T_r = β(ω♯)⁻¹ recovers the tensor");
    let back = factorizable_from_quadratic_rb(&data)?.r.expect("built from r");
    round_trips.compare("r", &[], back.as_flat().to_vec(), r.as_flat().to_vec());
    let back = factorizable_from_quadratic_rb(&mirrored)?.r.expect("built from r");
    round_trips.compare("σ(r)", &[], back.as_flat().to_vec(), r.swap().as_flat().to_vec());
    Ok(MirrorReport {
        mirror_matches,
        round_trips,
    })
}

/// A basis of the `β` with `ω(βx,y) + ω(x,βy) = 0`.
pub fn weight0_compatible_operators(omega: &Matrix) -> Vec<Matrix> {
    let n = omega.rows();
    let system = Matrix::from_fn(n * n, n * n, |eq, unknown| {
        let (i, j) = (eq / n, eq % n);
        let (a, b) = (unknown / n, unknown % n);
        let mut c = Rational::zero();
        if b == i {
            c += &omega[(a, j)];
        }
        if b == j {
            c += &omega[(i, a)];
        }
        c
    });
    system
        .kernel()
        .into_iter()
        .map(|v| Matrix::from_vec(n, n, v).expect("n*n entries"))
        .collect()
}

/// The first kernel vector of the weight-0 compatibility system that is also
/// a Rota-Baxter operator of weight 0.
pub fn first_weight0_rb(alg: &LeibnizAlgebra, omega: &Matrix) -> Result<Option<Matrix>> {
    ensure_square(alg, omega, "omega")?;
    for beta in weight0_compatible_operators(omega) {
        if check_rb(alg, &beta, &Rational::zero())? {
            return Ok(Some(beta));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linear::{int, one};

    fn symplectic2() -> Matrix {
        Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(-1), int(0)]]).unwrap()
    }

    #[test]
    fn identity_is_rb_of_weight_minus_one() {
        for f in catalog::FIXTURES {
            let a = (f.algebra)();
            assert!(check_rb(&a, &Matrix::identity(a.dim()), &int(-1)).unwrap(), "{}", f.name);
            assert!(check_rb(&a, &Matrix::identity(a.dim()).scale(&int(-3)), &int(3)).unwrap());
        }
        // [x,y] against 2[x,y] at (e1, e2)
        let g2 = catalog::g2();
        let w = rb_report(&g2, &Matrix::identity(2), &int(0)).unwrap();
        let v = w.first_witness().unwrap();
        assert_eq!(v.indices, vec![0, 1]);
        assert_eq!(v.lhs, vec![int(1), int(0)]);
        assert_eq!(v.rhs, vec![int(2), int(0)]);
    }

    #[test]
    fn quadratic_report_flags() {
        let a = catalog::abelian(2);
        let zero = check_quadratic(&a, &Matrix::zeros(2, 2)).unwrap();
        assert!(zero.is_skew() && zero.is_invariant() && !zero.is_nondegenerate());
        let sym = check_quadratic(&a, &Matrix::identity(2)).unwrap();
        assert!(!sym.is_skew());
        assert!(check_quadratic(&a, &symplectic2()).unwrap().passed());
    }

    #[test]
    fn phi_is_inverse_grid() {
        let (sharp, phi) = omega_sharp_and_phi(&symplectic2()).unwrap();
        assert_eq!(sharp.matrix(), &symplectic2().transpose());
        assert_eq!(phi.to_matrix(), symplectic2().inverse().unwrap());
    }

    #[test]
    fn weight0_solver_on_abelian2() {
        let a = catalog::abelian(2);
        let beta = first_weight0_rb(&a, &symplectic2()).unwrap().unwrap();
        let mut expected = Matrix::zeros(2, 2);
        expected[(0, 1)] = one();
        assert_eq!(beta, expected);
        let data = QuadraticRBData::new(a, symplectic2(), beta, int(0)).unwrap();
        let b = triangular_from_weight0(&data).unwrap();
        assert!(b.delta.is_zero());
        assert!(b.r.unwrap().is_symmetric());
    }

    #[test]
    fn mirror_is_involutive() {
        let data = phase_space_quadratic_rb(&catalog::g2(), &Matrix::identity(2), &int(-1)).unwrap();
        assert_eq!(data.mirror().unwrap().mirror().unwrap(), data);
    }

    #[test]
    fn e4_round_trip() {
        let e4 = catalog::e4();
        let data = quadratic_rb_from_factorizable(&e4, &catalog::r4(), &int(-1)).unwrap();
        let back = factorizable_from_quadratic_rb(&data).unwrap();
        assert_eq!(back.r.unwrap(), catalog::r4());
        assert!(check_mirror_diagram(&e4, &catalog::r4(), &int(-1)).unwrap().passed());
    }
}
