//! Comultiplications, Leibniz coalgebras and bialgebras, the coboundary
//! `Δ_r(x) = F(x) r`, classification of `(A, r)`, factorization, the double
//! `A ⊕ A*` and its canonical factorizable structure.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{
    direct_sum, dual_action, dual_names, isomorphism_report, LeibnizAlgebra, Space, TaggedLinearMap,
};
use crate::error::{Error, Result};
use crate::linear::{axpy, basis_vector, one, sub_vectors, Matrix, Perm3, Rational, ThreeTensor, TwoTensor, Vector};
use crate::report::{Check, Report};
use crate::yang_baxter::{
    apply_f_basis, clybe_defect, ensure_dim, is_invariant, skew_part_invariant, t_of, DualOps,
};

/// `Δ(e_i) = Σ d[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    d: ThreeTensor,
}

impl Comultiplication {
    pub fn new(d: ThreeTensor) -> Self {
        Self { d }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(ThreeTensor::zeros(n))
    }

    pub fn dim(&self) -> usize {
        self.d.dim()
    }

    pub fn cube(&self) -> &ThreeTensor {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero()
    }

    /// `Δ(e_i)`.
    pub fn apply_basis(&self, i: usize) -> TwoTensor {
        let n = self.dim();
        TwoTensor::from_fn(n, |j, k| self.d.get(i, j, k).clone())
    }

    pub fn apply(&self, x: &[Rational]) -> TwoTensor {
        let n = self.dim();
        let mut out = TwoTensor::zeros(n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.apply_basis(i).scale(c));
            }
        }
        out
    }

    /// `(Δ ⊗ id) t`.
    pub fn on_first_leg(&self, t: &TwoTensor) -> ThreeTensor {
        let mut out = ThreeTensor::zeros(self.dim());
        for (j, k, c) in t.nonzero_terms() {
            let e_k = basis_vector(self.dim(), k);
            out.add_assign(&self.apply_basis(j).tensor_right(&e_k).scale(c));
        }
        out
    }

    /// `(id ⊗ Δ) t`.
    pub fn on_second_leg(&self, t: &TwoTensor) -> ThreeTensor {
        let mut out = ThreeTensor::zeros(self.dim());
        for (j, k, c) in t.nonzero_terms() {
            let e_j = basis_vector(self.dim(), j);
            let image = self.apply_basis(k);
            // e_j ⊗ Δ(e_k): move the new leg to the front.
            out.add_assign(&image.tensor_right(&e_j).permute(Perm3::XI.inverse()).scale(c));
        }
        out
    }

    /// The algebra on `A*` dual to `Δ`: `⟨x, [a*, b*]⟩ = ⟨Δ(x), a* ⊗ b*⟩`.
    /// Unchecked; it is Leibniz exactly when `Δ` is a Leibniz coalgebra.
    pub fn dual_algebra(&self, names: Vec<String>) -> Result<LeibnizAlgebra> {
        let n = self.dim();
        let sc = ThreeTensor::from_fn(n, |a, b, i| self.d.get(i, a, b).clone());
        LeibnizAlgebra::new_unchecked(names, sc)
    }
}

/// `Δ_r(e_i) = F(e_i) r`.
pub fn delta_from_r(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<Comultiplication> {
    ensure_dim(alg, r)?;
    let n = alg.dim();
    let mut d = ThreeTensor::zeros(n);
    for i in 0..n {
        for (j, k, c) in apply_f_basis(alg, i, r).nonzero_terms() {
            *d.entry_mut(i, j, k) = c.clone();
        }
    }
    Ok(Comultiplication::new(d))
}

/// `(Δ⊗id)Δ(x) + (σ⊗id)(id⊗Δ)Δ(x) - (id⊗Δ)Δ(x) = 0` for every basis `x`.
pub fn check_coalgebra(delta: &Comultiplication) -> Check {
    let mut check = Check::new("Leibniz coalgebra identity");
    for i in 0..delta.dim() {
        let dx = delta.apply_basis(i);
        let second = delta.on_second_leg(&dx);
        let value = delta
            .on_first_leg(&dx)
            .add(&second.permute(Perm3::SIGMA12))
            .sub(&second);
        check.expect_zero(
            "(Δ⊗id)Δ(x) + (σ⊗id)(id⊗Δ)Δ(x) - (id⊗Δ)Δ(x)",
            &[i],
            value.as_flat().to_vec(),
        );
    }
    check
}

#[derive(Clone, Debug)]
pub struct BialgebraReport {
    pub coalgebra: Check,
    pub bialg1: Check,
    pub bialg2: Check,
}

impl BialgebraReport {
    pub fn coalgebra_ok(&self) -> bool {
        self.coalgebra.passed()
    }

    pub fn bialg1_ok(&self) -> bool {
        self.bialg1.passed()
    }

    pub fn bialg2_ok(&self) -> bool {
        self.bialg2.passed()
    }
}

impl Report for BialgebraReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.coalgebra, &self.bialg1, &self.bialg2]
    }
}

fn ensure_delta(alg: &LeibnizAlgebra, delta: &Comultiplication) -> Result<()> {
    if alg.dim() != delta.dim() {
        return Err(Error::ShapeMismatch(format!(
            "comultiplication of dimension {} on an algebra of dimension {}",
            delta.dim(),
            alg.dim()
        )));
    }
    Ok(())
}

/// The coalgebra identity and both compatibility conditions on all basis
/// pairs `(x, y)`.
pub fn check_bialgebra(alg: &LeibnizAlgebra, delta: &Comultiplication) -> Result<BialgebraReport> {
    ensure_delta(alg, delta)?;
    let n = alg.dim();
    let coalgebra = check_coalgebra(delta);
    let mut bialg1 = Check::new("σ(R(y)⊗id)Δ(x) = (R(x)⊗id)Δ(y)");
    let mut bialg2 = Check::new("Δ([x,y]) compatibility");
    let id = Matrix::identity(n);
    for x in 0..n {
        let dx = delta.apply_basis(x);
        let sym_dx = dx.add(&dx.swap());
        let lx = alg.left_basis(x);
        for y in 0..n {
            let dy = delta.apply_basis(y);
            let ry = alg.right_basis(y);
            let lhs = dx.apply(Some(ry), None).swap();
            let rhs = dy.apply(Some(alg.right_basis(x)), None);
            bialg1.compare(
                "σ(R(y)⊗id)Δ(x) = (R(x)⊗id)Δ(y)",
                &[x, y],
                lhs.as_flat().to_vec(),
                rhs.as_flat().to_vec(),
            );

            let lry = alg.left_basis(y).add(ry);
            let lhs = delta.apply(&alg.bracket_basis(x, y));
            let rhs = sym_dx
                .apply(None, Some(ry))
                .sub(&sym_dx.apply(Some(&lry), Some(&id)))
                .add(&dy.apply(None, Some(lx)))
                .add(&dy.apply(Some(lx), None));
            bialg2.compare(
                "Δ([x,y]) = (id⊗R(y) - (L+R)(y)⊗id)(id+σ)Δ(x) + (id⊗L(x) + L(x)⊗id)Δ(y)",
                &[x, y],
                lhs.as_flat().to_vec(),
                rhs.as_flat().to_vec(),
            );
        }
    }
    Ok(BialgebraReport {
        coalgebra,
        bialg1,
        bialg2,
    })
}

/// The r-level conditions, side by side with the direct checks on `Δ_r`.
#[derive(Clone, Debug)]
pub struct RConditionsReport {
    pub coalg_cond: Check,
    pub mp1: Check,
    pub mp2: Check,
    pub direct: BialgebraReport,
}

impl RConditionsReport {
    pub fn coalg_cond(&self) -> bool {
        self.coalg_cond.passed()
    }

    pub fn mp1(&self) -> bool {
        self.mp1.passed()
    }

    pub fn mp2(&self) -> bool {
        self.mp2.passed()
    }

    /// Each r-level condition agrees with the corresponding direct check.
    pub fn equivalences_hold(&self) -> bool {
        self.coalg_cond() == self.direct.coalgebra_ok()
            && self.mp1() == self.direct.bialg1_ok()
            && self.mp2() == self.direct.bialg2_ok()
    }
}

impl Report for RConditionsReport {
    fn checks(&self) -> Vec<&Check> {
        vec![&self.coalg_cond, &self.mp1, &self.mp2]
    }
}

/// `Σ_{p,q} r[p][q] (f(p) ⊗ e_q)` for a family `f` of 2-tensors indexed by
/// the first leg of `r`.
fn weighted_right(r: &TwoTensor, mut f: impl FnMut(usize) -> TwoTensor) -> ThreeTensor {
    let n = r.dim();
    let mut out = ThreeTensor::zeros(n);
    let mut cache: Vec<Option<TwoTensor>> = vec![None; n];
    for (p, q, c) in r.nonzero_terms() {
        let t = cache[p].get_or_insert_with(|| f(p));
        out.add_assign(&t.tensor_right(&basis_vector(n, q)).scale(c));
    }
    out
}

/// Evaluates the coalgebra condition on `Δ_r` and the two compatibility
/// conditions, each expressed through `r` directly, term by term.
pub fn check_r_conditions(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<RConditionsReport> {
    ensure_dim(alg, r)?;
    let n = alg.dim();
    let s = r.skew_part();
    let defect = clybe_defect(alg, r)?;
    let lr: Vec<Matrix> = (0..n).map(|i| alg.left_basis(i).add(alg.right_basis(i))).collect();
    let fs: Vec<TwoTensor> = (0..n).map(|i| apply_f_basis(alg, i, &s)).collect();

    // (σ⊗id)[[r,r]] - Σ_j F(a_j)(r - σ(r)) ⊗ b_j
    let p = defect
        .permute(Perm3::SIGMA12)
        .sub(&weighted_right(r, |i| fs[i].clone()));
    let mut coalg_cond = Check::new("coalgebra condition in terms of r");
    for x in 0..n {
        let term1 = p.apply_leg(2, alg.right_basis(x)).sub(&p.apply_leg(1, &lr[x]));
        let term2 = defect.apply_leg(0, &lr[x]);
        let sigma_fx = fs[x].swap();
        let term3 = weighted_right(r, |i| sigma_fx.apply(Some(&lr[i]), None));
        let value = term1.add(&term2).add(&term3);
        coalg_cond.expect_zero("coalgebra condition at x", &[x], value.as_flat().to_vec());
    }

    let mut mp1 = Check::new("(R(y)⊗id)F(x)(r - σ(r)) = 0");
    let mut mp2 = Check::new("second compatibility condition in terms of r");
    for x in 0..n {
        for y in 0..n {
            let ry = alg.right_basis(y);
            let v = fs[x].apply(Some(ry), None);
            mp1.expect_zero("(R(y)⊗id)F(x)(r - σ(r))", &[x, y], v.as_flat().to_vec());

            let value = fs[x]
                .swap()
                .apply(Some(alg.left_basis(y)), None)
                .add(&fs[x].swap().sub(&fs[x]).apply(Some(ry), None))
                .sub(&fs[x].apply(Some(ry), None).swap())
                .sub(&fs[y].apply(Some(alg.right_basis(x)), None).swap());
            mp2.expect_zero("second compatibility condition at (x, y)", &[x, y], value.as_flat().to_vec());
        }
    }
    let direct = check_bialgebra(alg, &delta_from_r(alg, r)?)?;
    Ok(RConditionsReport {
        coalg_cond,
        mp1,
        mp2,
        direct,
    })
}

/// `[a*, b*]_r = L*(T_r a*) b* - (L*+R*)(T_σ(r) b*) a*` on `A*` (unchecked).
pub fn dual_bracket(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<LeibnizAlgebra> {
    ensure_dim(alg, r)?;
    let n = alg.dim();
    let ops = DualOps::new(alg);
    let (tr, ts) = (t_of(r), t_of(&r.swap()));
    let mut sc = ThreeTensor::zeros(n);
    for a in 0..n {
        let ea = basis_vector(n, a);
        let tra = tr.apply(&ea);
        for b in 0..n {
            let eb = basis_vector(n, b);
            let v = sub_vectors(&ops.l(&tra, &eb), &ops.lr(&ts.apply(&eb), &ea));
            for (k, c) in v.into_iter().enumerate() {
                *sc.entry_mut(a, b, k) = c;
            }
        }
    }
    LeibnizAlgebra::new_unchecked(dual_names(alg.names()), sc)
}

/// `⟨Δ_r(e_i), e*_j ⊗ e*_k⟩ = ⟨e_i, [e*_j, e*_k]_r⟩` on all index triples.
pub fn check_dual_pairing(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<Check> {
    let delta = delta_from_r(alg, r)?;
    let dual = dual_bracket(alg, r)?;
    let n = alg.dim();
    let mut check = Check::new("⟨Δ_r(x), a*⊗b*⟩ = ⟨x, [a*,b*]_r⟩");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                check.compare(
                    "⟨Δ_r(e_i), e*_j⊗e*_k⟩ = ⟨e_i, [e*_j,e*_k]_r⟩",
                    &[i, j, k],
                    vec![delta.cube().get(i, j, k).clone()],
                    vec![dual.bracket_basis(j, k)[i].clone()],
                );
            }
        }
    }
    Ok(check)
}

/// `T_r` and `T_σ(r)` as homomorphisms from `(A*, [-,-]_r)` to `A`.
pub fn check_t_homomorphisms(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<(Check, Check)> {
    let dual = dual_bracket(alg, r)?;
    let n = alg.dim();
    let mut out = Vec::new();
    for (name, t) in [("T_r", t_of(r)), ("T_σ(r)", t_of(&r.swap()))] {
        let mut check = Check::new(format!("{name}([a*,b*]_r) = [{name} a*, {name} b*]"));
        for a in 0..n {
            for b in 0..n {
                check.compare(
                    "T([a*,b*]_r) = [T a*, T b*]",
                    &[a, b],
                    t.apply(&dual.bracket_basis(a, b)),
                    alg.bracket(&t.apply(&basis_vector(n, a)), &t.apply(&basis_vector(n, b))),
                );
            }
        }
        out.push(check);
    }
    let second = out.pop().expect("two checks");
    Ok((out.pop().expect("two checks"), second))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_bialgebra: bool,
    pub quasi_triangular: bool,
    pub triangular: bool,
    pub factorizable: bool,
}

impl Classification {
    /// Triangular and factorizable both imply quasi-triangular, and they
    /// exclude each other in positive dimension.
    pub fn consistent(&self, dim: usize) -> bool {
        (!self.triangular || self.quasi_triangular)
            && (!self.factorizable || self.quasi_triangular)
            && (!self.quasi_triangular || self.is_bialgebra)
            && (dim == 0 || !(self.triangular && self.factorizable))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "quasi-triangular: {}; triangular: {}; factorizable: {}",
            yes_no(self.quasi_triangular),
            yes_no(self.triangular),
            yes_no(self.factorizable)
        )
    }
}

/// `T_{r-σ(r)} = T_r - T_σ(r)`.
pub fn t_skew(r: &TwoTensor) -> TaggedLinearMap {
    t_of(&r.skew_part())
}

pub fn classify(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<Classification> {
    let defect_zero = clybe_defect(alg, r)?.is_zero();
    let si = skew_part_invariant(alg, r)?;
    let is_bialgebra = check_bialgebra(alg, &delta_from_r(alg, r)?)?.passed();
    let quasi_triangular = defect_zero && si;
    Ok(Classification {
        is_bialgebra,
        quasi_triangular,
        triangular: quasi_triangular && r.is_symmetric(),
        factorizable: quasi_triangular && t_skew(r).matrix().is_invertible(),
    })
}

fn require_factorizable(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<()> {
    let c = classify(alg, r)?;
    if !c.quasi_triangular {
        return Err(Error::NotFactorizable("r is not quasi-triangular".into()));
    }
    if !c.factorizable {
        return Err(Error::NotFactorizable("T_{r-σ(r)} is singular".into()));
    }
    Ok(())
}

/// The unique `x = x1 - x2` with `(x1, x2)` in the image of `T_r ⊕ T_σ(r)`.
pub fn factorize(alg: &LeibnizAlgebra, r: &TwoTensor, x: &[Rational]) -> Result<(Vector, Vector)> {
    if x.len() != alg.dim() {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    require_factorizable(alg, r)?;
    let pre = t_skew(r).inverse()?.apply(x);
    Ok((t_of(r).apply(&pre), t_of(&r.swap()).apply(&pre)))
}

/// `(A, [-,-], Δ)`, optionally remembering the `r` it came from.
#[derive(Clone, Debug)]
pub struct LeibnizBialgebra {
    pub algebra: LeibnizAlgebra,
    pub delta: Comultiplication,
    pub r: Option<TwoTensor>,
}

impl LeibnizBialgebra {
    pub fn new(algebra: LeibnizAlgebra, delta: Comultiplication) -> Result<Self> {
        let report = check_bialgebra(&algebra, &delta)?;
        if let Some(v) = report.checks().iter().find_map(|c| c.first_witness()) {
            return Err(Error::InvalidBialgebra(v.to_string()));
        }
        Ok(Self {
            algebra,
            delta,
            r: None,
        })
    }

    /// `(A, Δ_r)`; fails unless the result is a Leibniz bialgebra.
    pub fn from_r(algebra: LeibnizAlgebra, r: TwoTensor) -> Result<Self> {
        let delta = delta_from_r(&algebra, &r)?;
        let mut b = Self::new(algebra, delta)?;
        b.r = Some(r);
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The Leibniz algebra on `A*` dual to `Δ`.
    pub fn dual_algebra(&self) -> LeibnizAlgebra {
        self.delta
            .dual_algebra(dual_names(self.algebra.names()))
            .expect("names match")
    }
}

/// The bracket on `D = A ⊕ A*`:
/// `[x+a*, y+b*] = [x,y] + L*_{A*}(a*)y - (L*_{A*}+R*_{A*})(b*)x
///               + [a*,b*] + L*_A(x)b* - (L*_A+R*_A)(y)a*`.
pub fn double_algebra(bialg: &LeibnizBialgebra) -> Result<LeibnizAlgebra> {
    let a = &bialg.algebra;
    let b = bialg.dual_algebra();
    let n = a.dim();
    let mut sc = ThreeTensor::zeros(2 * n);
    let mut put = |i: usize, j: usize, low: Vector, high: Vector| {
        for (k, c) in low.into_iter().chain(high).enumerate() {
            *sc.entry_mut(i, j, k) = c;
        }
    };
    let zero = vec![Rational::zero(); n];
    let l_dual_a: Vec<Matrix> = (0..n).map(|i| dual_action(a.left_basis(i))).collect();
    let lr_dual_a: Vec<Matrix> = (0..n)
        .map(|i| dual_action(&a.left_basis(i).add(a.right_basis(i))))
        .collect();
    let l_dual_b: Vec<Matrix> = (0..n).map(|i| dual_action(b.left_basis(i))).collect();
    let lr_dual_b: Vec<Matrix> = (0..n)
        .map(|i| dual_action(&b.left_basis(i).add(b.right_basis(i))))
        .collect();
    for i in 0..n {
        for j in 0..n {
            put(i, j, a.bracket_basis(i, j), zero.clone());
            put(n + i, n + j, zero.clone(), b.bracket_basis(i, j));
            // [e_i, e*_j]
            put(
                i,
                n + j,
                lr_dual_b[j].column(i).iter().map(|c| -c).collect(),
                l_dual_a[i].column(j),
            );
            // [e*_i, e_j]
            put(
                n + i,
                j,
                l_dual_b[i].column(j),
                lr_dual_a[j].column(i).iter().map(|c| -c).collect(),
            );
        }
    }
    let mut names = a.names().to_vec();
    names.extend(dual_names(a.names()));
    LeibnizAlgebra::new(names, sc).map_err(|e| Error::InvalidBialgebra(format!("double is not Leibniz: {e}")))
}

/// `r = Σ e_i ⊗ e*_i` on the double, together with the double itself.
pub fn double_canonical_r(bialg: &LeibnizBialgebra) -> Result<(LeibnizAlgebra, TwoTensor)> {
    let d = double_algebra(bialg)?;
    let n = bialg.dim();
    let terms: Vec<(usize, usize, Rational)> = (0..n).map(|i| (i, n + i, one())).collect();
    Ok((d, TwoTensor::from_terms(2 * n, &terms)?))
}

/// `θ(x) = (x, x)`, `θ(a*) = (T_r a*, T_σ(r) a*)` from the double of
/// `(A, Δ_r)` to `A ⊕ A`, with the homomorphism check.
pub fn theta_isomorphism(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<(TaggedLinearMap, Check)> {
    require_factorizable(alg, r)?;
    let n = alg.dim();
    let (tr, ts) = (t_of(r), t_of(&r.swap()));
    let mut columns = Vec::with_capacity(2 * n);
    for i in 0..n {
        let e = basis_vector(n, i);
        columns.push(e.iter().chain(&e).cloned().collect::<Vector>());
    }
    for a in 0..n {
        let e = basis_vector(n, a);
        columns.push(tr.apply(&e).into_iter().chain(ts.apply(&e)).collect::<Vector>());
    }
    let theta = TaggedLinearMap::new(Matrix::from_columns(2 * n, &columns)?, Space::Double(n), Space::Sum(n))?;
    let bialg = LeibnizBialgebra::from_r(alg.clone(), r.clone())?;
    let double = double_algebra(&bialg)?;
    let report = isomorphism_report(&double, &direct_sum(alg, alg), &theta)?;
    Ok((theta, report))
}

/// Whether `t` is invariant and `Δ_t` vanishes, as a pair.
pub fn invariant_gives_zero_delta(alg: &LeibnizAlgebra, t: &TwoTensor) -> Result<(bool, bool)> {
    Ok((is_invariant(alg, t)?, delta_from_r(alg, t)?.is_zero()))
}

/// `x1 - x2`, for re-verifying a factorization.
pub fn recombine(x1: &[Rational], x2: &[Rational]) -> Vector {
    let mut out = x1.to_vec();
    axpy(&mut out, &-one(), x2);
    out
}
