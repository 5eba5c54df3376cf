//! 2-tensors on a Leibniz algebra: the CLYBE defect `[[r,r]]`, the invariance
//! operator `F`, the operator form `T_r: A* -> A`, and the operator-level
//! characterizations of solutions.
//!
//! Conventions: `r = Σ r[i][j] e_i ⊗ e_j` and `T_r(e*_i) = Σ_j r[i][j] e_j`, so
//! the matrix of `T_r` is `rᵀ`. Dual actions use `f*(x) = -f(x)ᵀ`.

use num_traits::Zero;

use crate::algebra::{dual_action, LeibnizAlgebra, Space, TaggedLinearMap};
use crate::error::{Error, Result};
use crate::linear::{add_vectors, basis_vector, Matrix, Perm3, Rational, ThreeTensor, TwoTensor, Vector};
use crate::report::{Check, Report};

pub(crate) fn ensure_dim(alg: &LeibnizAlgebra, t: &TwoTensor) -> Result<()> {
    if alg.dim() != t.dim() {
        return Err(Error::DimensionMismatch(format!(
            "tensor of dimension {} on an algebra of dimension {}",
            t.dim(),
            alg.dim()
        )));
    }
    Ok(())
}

/// `[[r,r]] = [r12,r13] - ([r12,r23] + [r23,r12]) + [r23,r13]`.
pub fn clybe_defect(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<ThreeTensor> {
    ensure_dim(alg, r)?;
    let n = alg.dim();
    let terms: Vec<(usize, usize, Rational)> = r.nonzero_terms().map(|(i, j, c)| (i, j, c.clone())).collect();
    let mut out = ThreeTensor::zeros(n);
    for (p, q, rpq) in &terms {
        for (s, t, rst) in &terms {
            let w = rpq * rst;
            // [a_i, a_j] ⊗ b_i ⊗ b_j
            for (k, c) in alg.bracket_basis(*p, *s).iter().enumerate() {
                if !c.is_zero() {
                    *out.entry_mut(k, *q, *t) += &w * c;
                }
            }
            // -a_i ⊗ ([b_i, a_j] + [a_j, b_i]) ⊗ b_j
            let sym = add_vectors(&alg.bracket_basis(*q, *s), &alg.bracket_basis(*s, *q));
            for (k, c) in sym.iter().enumerate() {
                if !c.is_zero() {
                    *out.entry_mut(*p, k, *t) -= &w * c;
                }
            }
            // a_i ⊗ a_j ⊗ [b_j, b_i]
            for (k, c) in alg.bracket_basis(*t, *q).iter().enumerate() {
                if !c.is_zero() {
                    *out.entry_mut(*p, *s, k) += &w * c;
                }
            }
        }
    }
    Ok(out)
}

pub fn is_clybe_solution(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<bool> {
    Ok(clybe_defect(alg, r)?.is_zero())
}

/// The defect as a check; every nonzero coefficient is a witness.
pub fn clybe_check(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<Check> {
    let defect = clybe_defect(alg, r)?;
    let mut check = Check::new("[[r,r]] = 0");
    for ((i, j, k), c) in defect.nonzero_terms() {
        check.expect_zero("coefficient of e_i ⊗ e_j ⊗ e_k in [[r,r]]", &[i, j, k], vec![c.clone()]);
    }
    Ok(check)
}

/// `[[σ(r), σ(r)]] = σ13 [[r, r]]`.
pub fn check_sigma_equivariance(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<bool> {
    let lhs = clybe_defect(alg, &r.swap())?;
    Ok(lhs == clybe_defect(alg, r)?.permute(Perm3::SIGMA13))
}

/// `(L + R)(x)` as a matrix.
pub fn symmetrized_mult(alg: &LeibnizAlgebra, x: &[Rational]) -> Result<Matrix> {
    Ok(alg.left_mult(x)?.add(&alg.right_mult(x)?))
}

/// `F(x) = (L+R)(x) ⊗ id - id ⊗ R(x)` on the flattened `n²` coefficients.
pub fn f_operator(alg: &LeibnizAlgebra, x: &[Rational]) -> Result<Matrix> {
    let n = alg.dim();
    let id = Matrix::identity(n);
    let lr = symmetrized_mult(alg, x)?;
    Ok(lr.kron(&id).sub(&id.kron(&alg.right_mult(x)?)))
}

/// `F(e_i) t`.
pub fn apply_f_basis(alg: &LeibnizAlgebra, i: usize, t: &TwoTensor) -> TwoTensor {
    let lr = alg.left_basis(i).add(alg.right_basis(i));
    let a = t.apply(Some(&lr), None);
    a.sub(&t.apply(None, Some(alg.right_basis(i))))
}

/// `F(x) t` for an arbitrary vector `x`.
pub fn apply_f(alg: &LeibnizAlgebra, x: &[Rational], t: &TwoTensor) -> Result<TwoTensor> {
    ensure_dim(alg, t)?;
    let mut out = TwoTensor::zeros(alg.dim());
    for (i, c) in x.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&apply_f_basis(alg, i, t).scale(c));
        }
    }
    Ok(out)
}

pub fn invariance_check(alg: &LeibnizAlgebra, t: &TwoTensor) -> Result<Check> {
    ensure_dim(alg, t)?;
    let mut check = Check::new("F(x) t = 0");
    for i in 0..alg.dim() {
        check.expect_zero("F(e_i) t = 0", &[i], apply_f_basis(alg, i, t).as_flat().to_vec());
    }
    Ok(check)
}

pub fn is_invariant(alg: &LeibnizAlgebra, t: &TwoTensor) -> Result<bool> {
    Ok(invariance_check(alg, t)?.passed())
}

/// `F(x)(r - σ(r)) = 0` for all `x`.
pub fn skew_part_invariant(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<bool> {
    is_invariant(alg, &r.skew_part())
}

/// `T_r: A* -> A`.
pub fn t_of(r: &TwoTensor) -> TaggedLinearMap {
    let n = r.dim();
    TaggedLinearMap::new(r.to_matrix().transpose(), Space::Dual(n), Space::A(n)).expect("square")
}

/// All `F(e_i)` stacked into one `n³ × n²` matrix.
pub fn stacked_f(alg: &LeibnizAlgebra) -> Matrix {
    let n = alg.dim();
    let blocks: Vec<Matrix> = (0..n)
        .map(|i| f_operator(alg, &basis_vector(n, i)).expect("basis vector"))
        .collect();
    Matrix::vstack(&blocks).expect("equal widths")
}

/// A basis of the invariant 2-tensors.
pub fn invariant_tensors(alg: &LeibnizAlgebra) -> Vec<TwoTensor> {
    let n = alg.dim();
    stacked_f(alg)
        .kernel()
        .into_iter()
        .map(|v| TwoTensor::from_flat(n, v).expect("n² entries"))
        .collect()
}

/// The skew tensors `e_p ⊗ e_q - e_q ⊗ e_p` for `p < q`.
pub fn skew_basis(n: usize) -> Vec<TwoTensor> {
    let one = Rational::from_integer(1.into());
    let mut out = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            out.push(
                TwoTensor::from_terms(n, &[(p, q, one.clone()), (q, p, -one.clone())]).expect("in range"),
            );
        }
    }
    out
}

/// A basis of `{ t skew : F(e_i) t = 0 for all i }`.
pub fn invariant_skew_tensors(alg: &LeibnizAlgebra) -> Vec<TwoTensor> {
    let n = alg.dim();
    let basis = skew_basis(n);
    if basis.is_empty() {
        return Vec::new();
    }
    let f = stacked_f(alg);
    let columns: Vec<Vector> = basis.iter().map(|s| f.mul_vec(s.as_flat())).collect();
    let system = Matrix::from_columns(f.rows(), &columns).expect("equal lengths");
    system
        .kernel()
        .into_iter()
        .map(|coeffs| {
            let mut t = TwoTensor::zeros(n);
            for (c, s) in coeffs.iter().zip(&basis) {
                if !c.is_zero() {
                    t = t.add(&s.scale(c));
                }
            }
            t
        })
        .collect()
}

/// Dual-side operators used by the operator forms.
pub(crate) struct DualOps {
    /// `L*(e_i)` on `A*`.
    pub l_star: Vec<Matrix>,
    /// `(L* + R*)(e_i)` on `A*`.
    pub lr_star: Vec<Matrix>,
}

impl DualOps {
    pub fn new(alg: &LeibnizAlgebra) -> Self {
        let n = alg.dim();
        Self {
            l_star: (0..n).map(|i| dual_action(alg.left_basis(i))).collect(),
            lr_star: (0..n)
                .map(|i| dual_action(&alg.left_basis(i).add(alg.right_basis(i))))
                .collect(),
        }
    }

    fn combine(mats: &[Matrix], x: &[Rational], v: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); v.len()];
        for (m, c) in mats.iter().zip(x) {
            if !c.is_zero() {
                crate::linear::axpy(&mut out, c, &m.mul_vec(v));
            }
        }
        out
    }

    /// `L*(x) v`.
    pub fn l(&self, x: &[Rational], v: &[Rational]) -> Vector {
        Self::combine(&self.l_star, x, v)
    }

    /// `(L* + R*)(x) v`.
    pub fn lr(&self, x: &[Rational], v: &[Rational]) -> Vector {
        Self::combine(&self.lr_star, x, v)
    }
}

/// The CLYBE against its two operator forms, evaluated over all dual-basis
/// pairs `(e*_a, e*_b)`.
#[derive(Clone, Debug)]
pub struct OperatorReport {
    pub defect: Check,
    pub skew_part_invariant: bool,
    /// `[T_σ a*, T_σ b*] = T_σ(L*(T_r a*) b* - (L*+R*)(T_σ b*) a*)`.
    pub homo2: Check,
    /// `[T_r a*, T_r b*] = T_r(L*(T_r a*) b* - (L*+R*)(T_σ b*) a*)`.
    pub homo1: Check,
}

impl OperatorReport {
    pub fn defect_zero(&self) -> bool {
        self.defect.passed()
    }

    pub fn eq_homo2_holds(&self) -> bool {
        self.homo2.passed()
    }

    pub fn eq_homo1_holds(&self) -> bool {
        self.homo1.passed()
    }

    /// The defect vanishes iff the `T_σ` form holds, and (when the skew part
    /// is invariant) iff the `T_r` form holds.
    pub fn equivalences_hold(&self) -> bool {
        self.defect_zero() == self.eq_homo2_holds()
            && (!self.skew_part_invariant || self.defect_zero() == self.eq_homo1_holds())
    }
}

impl Report for OperatorReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.defect, &self.homo2, &self.homo1]
    }
}

pub fn check_operator_characterization(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<OperatorReport> {
    let defect = clybe_check(alg, r)?;
    let skew_part_invariant = skew_part_invariant(alg, r)?;
    let n = alg.dim();
    let ops = DualOps::new(alg);
    let tr = t_of(r);
    let ts = t_of(&r.swap());
    let mut homo2 = Check::new("T_σ(r) form of the CLYBE");
    let mut homo1 = Check::new("T_r form of the CLYBE");
    for a in 0..n {
        let ea = basis_vector(n, a);
        let (tra, tsa) = (tr.apply(&ea), ts.apply(&ea));
        for b in 0..n {
            let eb = basis_vector(n, b);
            let tsb = ts.apply(&eb);
            let inner = crate::linear::sub_vectors(&ops.l(&tra, &eb), &ops.lr(&tsb, &ea));
            homo2.compare(
                "[T_σ a*, T_σ b*] = T_σ(L*(T_r a*)b* - (L*+R*)(T_σ b*)a*)",
                &[a, b],
                alg.bracket(&tsa, &tsb),
                ts.apply(&inner),
            );
            homo1.compare(
                "[T_r a*, T_r b*] = T_r(L*(T_r a*)b* - (L*+R*)(T_σ b*)a*)",
                &[a, b],
                alg.bracket(&tra, &tr.apply(&eb)),
                tr.apply(&inner),
            );
        }
    }
    Ok(OperatorReport {
        defect,
        skew_part_invariant,
        homo2,
        homo1,
    })
}

/// Invariance against its two operator forms.
#[derive(Clone, Debug)]
pub struct InvarianceFormsReport {
    pub invariance: Check,
    pub skew: bool,
    /// `[T_r a*, x] + T_r((L*+R*)(x) a*) = 0` over basis `x`, dual-basis `a*`.
    pub lem1: Check,
    /// `L*(T_r a*) b* + (L*+R*)(T_r b*) a* = 0` over dual-basis pairs.
    pub lem2: Check,
}

impl InvarianceFormsReport {
    pub fn inv(&self) -> bool {
        self.invariance.passed()
    }

    pub fn lem1_holds(&self) -> bool {
        self.lem1.passed()
    }

    pub fn lem2_holds(&self) -> bool {
        self.lem2.passed()
    }

    pub fn equivalences_hold(&self) -> bool {
        self.inv() == self.lem1_holds() && (!self.skew || self.inv() == self.lem2_holds())
    }
}

impl Report for InvarianceFormsReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.invariance, &self.lem1, &self.lem2]
    }
}

pub fn check_invariance_forms(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<InvarianceFormsReport> {
    let invariance = invariance_check(alg, r)?;
    let n = alg.dim();
    let ops = DualOps::new(alg);
    let tr = t_of(r);
    let mut lem1 = Check::new("[T_r a*, x] + T_r((L*+R*)(x)a*) = 0");
    let mut lem2 = Check::new("L*(T_r a*)b* + (L*+R*)(T_r b*)a* = 0");
    for a in 0..n {
        let ea = basis_vector(n, a);
        let tra = tr.apply(&ea);
        for x in 0..n {
            let ex = basis_vector(n, x);
            let value = add_vectors(&alg.bracket(&tra, &ex), &tr.apply(&ops.lr(&ex, &ea)));
            lem1.expect_zero("[T_r a*, x] + T_r((L*+R*)(x)a*)", &[a, x], value);
        }
        for b in 0..n {
            let eb = basis_vector(n, b);
            let value = add_vectors(&ops.l(&tra, &eb), &ops.lr(&tr.apply(&eb), &ea));
            lem2.expect_zero("L*(T_r a*)b* + (L*+R*)(T_r b*)a*", &[a, b], value);
        }
    }
    Ok(InvarianceFormsReport {
        invariance,
        skew: r.is_skew(),
        lem1,
        lem2,
    })
}

/// Identities that follow for skew-symmetric invariant `r`:
/// `(L(x) ⊗ id + id ⊗ L(x)) r = 0` and `[x, T_r a*] = T_r(L*(x) a*)`.
pub fn skew_invariant_consequences(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<(Check, Check)> {
    ensure_dim(alg, r)?;
    let n = alg.dim();
    let ops = DualOps::new(alg);
    let tr = t_of(r);
    let mut lem4 = Check::new("(L(x) ⊗ id + id ⊗ L(x)) r = 0");
    let mut lem5 = Check::new("[x, T_r a*] = T_r(L*(x) a*)");
    for x in 0..n {
        let l = alg.left_basis(x);
        let value = r.apply(Some(l), None).add(&r.apply(None, Some(l)));
        lem4.expect_zero("(L(e_x) ⊗ id + id ⊗ L(e_x)) r", &[x], value.as_flat().to_vec());
        let ex = basis_vector(n, x);
        for a in 0..n {
            let ea = basis_vector(n, a);
            lem5.compare(
                "[x, T_r a*] = T_r(L*(x) a*)",
                &[x, a],
                alg.bracket(&ex, &tr.apply(&ea)),
                tr.apply(&ops.l(&ex, &ea)),
            );
        }
    }
    Ok((lem4, lem5))
}
