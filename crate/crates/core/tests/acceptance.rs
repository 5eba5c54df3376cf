//! Acceptance criteria, one line of output per criterion. Every equality is
//! exact.
#![allow(clippy::needless_range_loop)]

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{q, Sc};
use leibniz::algebra::{check_isomorphism, hemisemidirect_product, direct_sum, LeibnizAlgebra, LieAlgebra, Space, TaggedLinearMap};
use leibniz::bialgebra::{
    check_bialgebra, check_coalgebra, check_r_conditions, classify, delta_from_r, double_canonical_r, t_skew,
    theta_isomorphism, LeibnizBialgebra,
};
use leibniz::catalog;
use leibniz::cli::formats::AlgebraFile;
use leibniz::cli::selftest::{embedded_files, run_selftest};
use leibniz::linear::{Matrix, Rational, TwoTensor};
use leibniz::report::Report;
use leibniz::rota_baxter::{
    check_mirror_diagram, check_quadratic, factorizable_from_quadratic_rb, phase_space_quadratic_rb,
    quadratic_rb_from_factorizable, rb_report, rb_to_double_factorizable, skew_part_vs_compatibility, QuadraticRBData,
};
use leibniz::yang_baxter::{
    check_invariance_forms, check_operator_characterization, check_sigma_equivariance, clybe_check,
    invariance_check, invariant_skew_tensors, invariant_tensors,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn basis(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = q(1);
    v
}

fn tensor(n: usize, terms: &[(usize, usize, i64)]) -> TwoTensor {
    let terms: Vec<(usize, usize, Rational)> = terms.iter().map(|&(i, j, c)| (i, j, q(c))).collect();
    TwoTensor::from_terms(n, &terms).unwrap()
}

/// Oracle check of a Leibniz bialgebra `(A, Δ_r)` from raw constants.
fn oracle_bialgebra(alg: &LeibnizAlgebra, r: &TwoTensor) -> bool {
    let sc = Sc::of(alg);
    let d = common::delta(&sc, &common::grid(r));
    common::coalgebra(&d) && common::bialg1(&sc, &d) && common::bialg2(&sc, &d)
}

fn oracle_leibniz(alg: &LeibnizAlgebra) -> bool {
    let sc = Sc::of(alg);
    let n = sc.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for m in 0..n {
                    // [x,[y,z]] = [[x,y],z] + [y,[x,z]], coefficient of e_m
                    let mut v = Rational::zero();
                    for k in 0..n {
                        v += sc.c(y, z, k) * sc.c(x, k, m);
                        v -= sc.c(x, y, k) * sc.c(k, z, m);
                        v -= sc.c(x, z, k) * sc.c(y, k, m);
                    }
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn criterion_1() -> Outcome {
    let e4 = catalog::e4();
    let r4 = tensor(4, &[(2, 0, 1), (3, 1, 1)]);
    let sc = Sc::of(&e4);
    let g = common::grid(&r4);
    ensure!(common::is_zero3(&common::defect(&sc, &g)), "oracle defect of r4 nonzero");
    ensure!(clybe_check(&e4, &r4).unwrap().passed(), "library defect of r4 nonzero");
    let s = common::skew(&g);
    for x in 0..4 {
        ensure!(
            common::f_apply(&sc, x, &s).iter().flatten().all(Zero::is_zero),
            "F(e{})(r4 - σ(r4)) != 0",
            x + 1
        );
    }
    ensure!(invariance_check(&e4, &r4.skew_part()).unwrap().passed(), "library invariance fails");
    let report = check_bialgebra(&e4, &delta_from_r(&e4, &r4).unwrap()).unwrap();
    ensure!(report.passed(), "check_bialgebra(Δ_r4) fails");
    ensure!(oracle_bialgebra(&e4, &r4), "oracle bialgebra check of Δ_r4 fails");
    let c = classify(&e4, &r4).unwrap();
    ensure!(c.quasi_triangular, "not quasi-triangular: {c}");
    Ok("E4, r4: defect 0, skew part invariant, bialgebra, quasi-triangular".into())
}

fn criterion_2() -> Outcome {
    let e4 = catalog::e4();
    let r4 = tensor(4, &[(2, 0, 1), (3, 1, 1)]);
    let t = t_skew(&r4);
    let expected: [(usize, usize, i64); 4] = [(0, 2, -1), (1, 3, -1), (2, 0, 1), (3, 1, 1)];
    for (a, k, c) in expected {
        let mut v = vec![Rational::zero(); 4];
        v[k] = q(c);
        ensure!(t.apply(&basis(4, a)) == v, "T(e*_{}) wrong: {:?}", a + 1, t.apply(&basis(4, a)));
    }
    let oracle = common::t_matrix(&common::skew(&common::grid(&r4)));
    ensure!(&oracle == t.matrix(), "library T_(r-σ(r)) differs from the oracle matrix");
    let det = common::determinant(&oracle);
    ensure!(!det.is_zero(), "T_(r-σ(r)) singular");
    let c = classify(&e4, &r4).unwrap();
    ensure!(c.factorizable, "not factorizable: {c}");
    Ok(format!("T maps e*1,e*2,e*3,e*4 to -e3,-e4,e1,e2; det = {det}; factorizable"))
}

fn criterion_3() -> Outcome {
    let g2 = catalog::g2();
    let hs = hemisemidirect_product(&LieAlgebra::new(g2.clone()).unwrap()).unwrap();
    let printed = {
        let names = vec!["e1".into(), "e2".into(), "e1*".into(), "e2*".into()];
        let v = |k: usize, c: i64| {
            let mut x = vec![Rational::zero(); 4];
            x[k] = q(c);
            x
        };
        let products = vec![(0, 1, v(0, 1)), (1, 0, v(0, -1)), (0, 2, v(3, -1)), (1, 2, v(2, 1))];
        LeibnizAlgebra::from_products(names, &products).unwrap()
    };
    ensure!(hs == printed, "hemisemidirect product differs from the printed table");
    let b = rb_to_double_factorizable(&g2, &Matrix::identity(2), &q(-1)).map_err(|e| e.to_string())?;
    let r = b.r.clone().unwrap();
    let expected = tensor(4, &[(2, 0, 1), (3, 1, 1)]);
    ensure!(r == expected, "r = {:?}", r.as_flat());
    ensure!(b.algebra.structure_constants() == printed.structure_constants(), "A ⋉ A* is not the hemisemidirect product");
    let phi = TaggedLinearMap::new(Matrix::identity(4), Space::A(4), Space::A(4)).unwrap();
    let e4 = catalog::e4();
    ensure!(check_isomorphism(&printed, &e4, &phi).unwrap(), "e1* -> e3, e2* -> e4 is not an isomorphism");
    let pushed = r.apply(Some(phi.matrix()), Some(phi.matrix()));
    ensure!(pushed == tensor(4, &[(2, 0, 1), (3, 1, 1)]), "r does not map to r4");
    Ok("hemisemidirect(G2) = H4; r = e*1⊗e1 + e*2⊗e2; H4 ≅ E4 carrying r to r4".into())
}

fn criterion_4() -> Outcome {
    let e4 = catalog::e4();
    let r4 = tensor(4, &[(2, 0, 1), (3, 1, 1)]);
    let b = LeibnizBialgebra::from_r(e4.clone(), r4.clone()).map_err(|e| e.to_string())?;
    let (d, r) = double_canonical_r(&b).map_err(|e| e.to_string())?;
    ensure!(d.dim() == 8, "double has dimension {}", d.dim());
    ensure!(oracle_leibniz(&d), "double fails the Leibniz identity (oracle)");
    let sc = Sc::of(&d);
    let g = common::grid(&r);
    ensure!(common::is_zero3(&common::defect(&sc, &g)), "canonical r: oracle defect nonzero");
    ensure!(common::invariant(&sc, &common::skew(&g)), "canonical r: skew part not invariant (oracle)");
    let det = common::determinant(&common::t_matrix(&common::skew(&g)));
    ensure!(!det.is_zero(), "T_(r-σ(r)) singular on the double");
    let c = classify(&d, &r).unwrap();
    ensure!(c.factorizable, "classify on the double: {c}");
    let (theta, report) = theta_isomorphism(&e4, &r4).map_err(|e| e.to_string())?;
    ensure!(report.passed(), "θ report: {report}");
    let sum = direct_sum(&e4, &e4);
    ensure!(!common::determinant(theta.matrix()).is_zero(), "θ singular (oracle)");
    let (ds, ss) = (Sc::of(&d), Sc::of(&sum));
    let m = theta.matrix();
    for u in 0..8 {
        for v in 0..8 {
            for k in 0..8 {
                // θ([u,v]) against [θu, θv], coefficient of e_k
                let mut lhs = Rational::zero();
                for w in 0..8 {
                    lhs += &m[(k, w)] * ds.c(u, v, w);
                }
                let mut rhs = Rational::zero();
                for a in 0..8 {
                    for bb in 0..8 {
                        rhs += &m[(a, u)] * &m[(bb, v)] * ss.c(a, bb, k);
                    }
                }
                ensure!(lhs == rhs, "θ not a homomorphism at ({}, {}, {})", u + 1, v + 1, k + 1);
            }
        }
    }
    Ok(format!("8-dim double: canonical r factorizable (det T = {det}); θ onto E4 ⊕ E4 verified"))
}

/// Index-sum validation of quadratic Rota-Baxter data.
fn oracle_quadratic_rb(data: &QuadraticRBData) -> bool {
    let sc = Sc::of(data.algebra());
    let n = sc.n;
    let (om, be, l) = (data.omega(), data.beta(), data.weight());
    for i in 0..n {
        for j in 0..n {
            if om[(i, j)] != -&om[(j, i)] {
                return false;
            }
            let mut v = l * &om[(i, j)];
            for k in 0..n {
                v += &be[(k, i)] * &om[(k, j)] + &om[(i, k)] * &be[(k, j)];
            }
            if !v.is_zero() {
                return false;
            }
            for z in 0..n {
                let mut lhs = Rational::zero();
                let mut rhs = Rational::zero();
                for k in 0..n {
                    lhs += &om[(i, k)] * sc.c(j, z, k);
                    rhs += (sc.c(i, z, k) + sc.c(z, i, k)) * &om[(k, j)];
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    !common::determinant(om).is_zero()
}

fn criterion_5() -> Outcome {
    let e4 = catalog::e4();
    let r4 = tensor(4, &[(2, 0, 1), (3, 1, 1)]);
    let b = LeibnizBialgebra::from_r(e4.clone(), r4.clone()).unwrap();
    let (d, rd) = double_canonical_r(&b).unwrap();
    let ps = phase_space_quadratic_rb(&catalog::g2(), &Matrix::identity(2), &q(-1)).map_err(|e| e.to_string())?;
    let ps_r = factorizable_from_quadratic_rb(&ps).map_err(|e| e.to_string())?.r.unwrap();
    let back = quadratic_rb_from_factorizable(ps.algebra(), &ps_r, &q(-1)).map_err(|e| e.to_string())?;
    ensure!(back == ps, "phase-space data not recovered from its r");
    let fixtures: [(&str, &LeibnizAlgebra, &TwoTensor); 3] =
        [("E4/r4", &e4, &r4), ("double", &d, &rd), ("phase space", ps.algebra(), &ps_r)];
    let mut count = 0;
    for (name, alg, r) in fixtures {
        for lambda in [-1, 1, -2] {
            let l = q(lambda);
            let data = quadratic_rb_from_factorizable(alg, r, &l).map_err(|e| format!("{name}, λ={lambda}: {e}"))?;
            ensure!(oracle_quadratic_rb(&data), "{name}, λ={lambda}: oracle rejects quadratic data");
            let r_back = factorizable_from_quadratic_rb(&data).map_err(|e| e.to_string())?.r.unwrap();
            ensure!(&r_back == r, "{name}, λ={lambda}: r not recovered");
            let again = quadratic_rb_from_factorizable(alg, &r_back, &l).unwrap();
            ensure!(again == data, "{name}, λ={lambda}: (ω, β) not recovered");
            let mirror = check_mirror_diagram(alg, r, &l).map_err(|e| e.to_string())?;
            ensure!(mirror.passed(), "{name}, λ={lambda}: mirror square: {:?}", mirror.checks());
            let flipped = quadratic_rb_from_factorizable(alg, &r.swap(), &l).unwrap();
            let m = data.mirror().unwrap();
            ensure!(flipped.omega() == m.omega() && flipped.beta() == m.beta(), "{name}, λ={lambda}: mirror entries differ");
            count += 1;
        }
    }
    Ok(format!("{count} round trips exact in both directions; mirror squares commute"))
}

fn random_tensor(rng: &mut ChaCha8Rng, n: usize, sparse: bool) -> TwoTensor {
    TwoTensor::from_fn(n, |_, _| {
        if sparse && rng.gen_bool(0.7) {
            q(0)
        } else {
            q(rng.gen_range(-3..=3))
        }
    })
}

fn combination(rng: &mut ChaCha8Rng, n: usize, basis: &[TwoTensor]) -> TwoTensor {
    let mut t = TwoTensor::zeros(n);
    for b in basis {
        t = t.add(&b.scale(&q(rng.gen_range(-3..=3))));
    }
    t
}

fn symmetric(t: &TwoTensor) -> TwoTensor {
    t.add(&t.swap())
}

const SAMPLES: usize = 100;

fn criterion_6() -> Outcome {
    let mut tallies = Vec::new();
    for (seed, (name, alg)) in catalog::random_test_algebras().into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + seed as u64);
        let n = alg.dim();
        let sc = Sc::of(&alg);
        let inv_skew = invariant_skew_tensors(&alg);
        let inv = invariant_tensors(&alg);
        let (mut sol, mut bialg, mut inv_hits, mut l418) = (0, 0, 0, 0);
        for i in 0..SAMPLES {
            let r = random_tensor(&mut rng, n, i % 2 == 1);
            let g = common::grid(&r);
            let dr = common::defect(&sc, &g);

            // (a)
            let ds = common::defect(&sc, &common::grid(&r.swap()));
            let flipped = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| ds[x][y][z] == dr[z][y][x])));
            ensure!(flipped, "{name} #{i}: [[σr,σr]] != σ13[[r,r]] (oracle)");
            ensure!(check_sigma_equivariance(&alg, &r).unwrap(), "{name} #{i}: library σ-equivariance");

            // (b), (c)
            let d = common::delta(&sc, &g);
            let rc = check_r_conditions(&alg, &r).unwrap();
            let co = common::coalgebra(&d);
            ensure!(co == rc.coalg_cond(), "{name} #{i}: coalgebra {co} vs r-condition {}", rc.coalg_cond());
            ensure!(co == check_coalgebra(&delta_from_r(&alg, &r).unwrap()).passed(), "{name} #{i}: direct check");
            let (b1, b2) = (common::bialg1(&sc, &d), common::bialg2(&sc, &d));
            ensure!(b1 == rc.mp1(), "{name} #{i}: bialg1 {b1} vs mp1 {}", rc.mp1());
            ensure!(b2 == rc.mp2(), "{name} #{i}: bialg2 {b2} vs mp2 {}", rc.mp2());
            bialg += (co && b1 && b2) as usize;

            // (d)
            let zero = common::is_zero3(&dr);
            let op = check_operator_characterization(&alg, &r).unwrap();
            ensure!(zero == op.eq_homo2_holds(), "{name} #{i}: defect zero {zero} vs T_σ form");
            let r_si = symmetric(&random_tensor(&mut rng, n, true)).add(&combination(&mut rng, n, &inv_skew));
            let g_si = common::grid(&r_si);
            ensure!(common::invariant(&sc, &common::skew(&g_si)), "{name} #{i}: generator left the subspace");
            let zero_si = common::is_zero3(&common::defect(&sc, &g_si));
            let op = check_operator_characterization(&alg, &r_si).unwrap();
            ensure!(
                zero_si == op.eq_homo2_holds() && zero_si == op.eq_homo1_holds(),
                "{name} #{i}: invariant skew part, defect zero {zero_si} vs operator forms"
            );
            sol += zero as usize + zero_si as usize;

            // (e)
            let r_any = if i % 2 == 0 { r.clone() } else { combination(&mut rng, n, &inv) };
            let is_inv = common::invariant(&sc, &common::grid(&r_any));
            let forms = check_invariance_forms(&alg, &r_any).unwrap();
            ensure!(is_inv == forms.lem1_holds(), "{name} #{i}: invariance {is_inv} vs first operator form");
            let r_skew = if i % 2 == 0 { r.skew_part() } else { combination(&mut rng, n, &inv_skew) };
            let is_inv_skew = common::invariant(&sc, &common::grid(&r_skew));
            let forms = check_invariance_forms(&alg, &r_skew).unwrap();
            ensure!(
                is_inv_skew == forms.lem2_holds(),
                "{name} #{i}: skew invariance {is_inv_skew} vs second operator form"
            );
            inv_hits += is_inv as usize + is_inv_skew as usize;

            // (f)
            if n % 2 == 0 {
                let omega = loop {
                    let m = Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-3..=3)));
                    let s = m.sub(&m.transpose());
                    if !common::determinant(&s).is_zero() {
                        break s;
                    }
                };
                let lambda = q(rng.gen_range(-3..=3));
                let r_f = if i % 2 == 0 {
                    let phi = TwoTensor::from_matrix(&omega.inverse().unwrap()).unwrap();
                    symmetric(&random_tensor(&mut rng, n, false)).add(&phi.scale(&(-&lambda / q(2))))
                } else {
                    random_tensor(&mut rng, n, false)
                };
                let gf = common::grid(&r_f);
                let s = common::skew(&gf);
                let cond_rw = (0..n).all(|x| {
                    (0..n).all(|b| {
                        let mut v = Rational::zero();
                        for y in 0..n {
                            v += &omega[(x, y)] * &s[y][b];
                        }
                        v == if x == b { -&lambda } else { q(0) }
                    })
                });
                let beta = Matrix::from_fn(n, n, |qq, ii| {
                    let mut v = Rational::zero();
                    for j in 0..n {
                        v += &omega[(ii, j)] * &gf[j][qq];
                    }
                    v
                });
                let compat = (0..n).all(|a| {
                    (0..n).all(|b| {
                        let mut v = &lambda * &omega[(a, b)];
                        for k in 0..n {
                            v += &beta[(k, a)] * &omega[(k, b)] + &omega[(a, k)] * &beta[(k, b)];
                        }
                        v.is_zero()
                    })
                });
                ensure!(cond_rw == compat, "{name} #{i}: r-σ(r) = -λφ is {cond_rw}, compatibility is {compat}");
                let lib = skew_part_vs_compatibility(&omega, &r_f, &lambda).unwrap();
                ensure!(lib == (cond_rw, compat), "{name} #{i}: library {lib:?} vs oracle ({cond_rw}, {compat})");
                l418 += cond_rw as usize;
            }
        }
        tallies.push(format!("{name}: {sol} solutions, {bialg} bialgebras, {inv_hits} invariant, {l418} compatible"));
    }
    Ok(format!("{SAMPLES} tensors per algebra; {}", tallies.join("; ")))
}

fn criterion_7() -> Outcome {
    // broken Leibniz identity
    let mut file = AlgebraFile::from_algebra(&catalog::e4(), Some("e4"));
    file.brackets[0].terms[0].0 = "2".into();
    let broken = file.to_algebra_unchecked().unwrap();
    let c = broken.check_leibniz();
    let w = c.first_witness().ok_or("perturbed E4 passes the Leibniz identity")?;
    ensure!(w.lhs != w.rhs && w.indices.len() == 3, "Leibniz witness malformed: {w}");
    ensure!(!oracle_leibniz(&broken), "oracle accepts perturbed E4");

    // non-solution r
    let e4 = catalog::e4();
    let r = tensor(4, &[(2, 0, 1), (3, 1, 1), (1, 2, 1)]);
    let c = clybe_check(&e4, &r).unwrap();
    let w = c.first_witness().ok_or("perturbed r4 solves the CLYBE")?;
    ensure!(w.lhs != w.rhs, "CLYBE witness malformed: {w}");
    ensure!(!common::is_zero3(&common::defect(&Sc::of(&e4), &common::grid(&r))), "oracle defect vanishes");

    // non-invariant skew part
    let r = tensor(4, &[(0, 1, 1), (1, 0, -1)]);
    let c = invariance_check(&e4, &r.skew_part()).unwrap();
    let w = c.first_witness().ok_or("e1∧e2 is invariant")?;
    ensure!(w.lhs != w.rhs, "invariance witness malformed: {w}");
    ensure!(!classify(&e4, &r).unwrap().quasi_triangular, "e1∧e2 classified quasi-triangular");

    // degenerate ω
    let mut omega = Matrix::zeros(4, 4);
    omega[(0, 1)] = q(1);
    omega[(1, 0)] = q(-1);
    let rep = check_quadratic(&catalog::abelian(4), &omega).unwrap();
    let w = rep.nondegenerate.first_witness().ok_or("degenerate ω reported nondegenerate")?;
    ensure!(w.lhs.iter().any(|c| !c.is_zero()) && w.rhs.iter().all(Zero::is_zero), "kernel witness malformed: {w}");

    // wrong-weight β
    let c = rb_report(&catalog::g2(), &Matrix::identity(2), &q(0)).unwrap();
    let w = c.first_witness().ok_or("id accepted at weight 0")?;
    ensure!(w.indices == vec![0, 1] && w.lhs == vec![q(1), q(0)] && w.rhs == vec![q(2), q(0)], "RB witness: {w}");

    // selftest under every single-constant mutation of every fixture algebra
    let files = embedded_files();
    ensure!(run_selftest(&files, 1, 2).unwrap().passed(), "selftest fails on pristine fixtures");
    let mut mutations = 0;
    for (idx, (fname, text)) in files.iter().enumerate() {
        if !fname.ends_with(".alg") {
            continue;
        }
        let parsed = AlgebraFile::parse(text).unwrap();
        let alg = parsed.to_algebra().unwrap();
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut sc = alg.structure_constants().as_flat().to_vec();
                    sc[(i * n + j) * n + k] += q(1);
                    let cube = leibniz::linear::ThreeTensor::from_flat(n, sc).unwrap();
                    let mutated = LeibnizAlgebra::new_unchecked(alg.names().to_vec(), cube).unwrap();
                    let mut mfiles = files.clone();
                    mfiles[idx].1 = AlgebraFile::from_algebra(&mutated, parsed.name.as_deref()).to_text();
                    let report = run_selftest(&mfiles, 1, 0).unwrap();
                    ensure!(!report.passed(), "selftest passes with {fname} mutated at ({}, {}, {})", i + 1, j + 1, k + 1);
                    mutations += 1;
                }
            }
        }
    }

    // and through the binary
    let dir = tempfile::tempdir().unwrap();
    for (fname, text) in &files {
        std::fs::write(dir.path().join(fname), text).unwrap();
    }
    let bin = env!("CARGO_BIN_EXE_leibniz");
    let status = |dir: &std::path::Path| {
        std::process::Command::new(bin)
            .args(["selftest", "--samples", "0", "--fixtures"])
            .arg(dir)
            .output()
            .unwrap()
            .status
            .code()
    };
    ensure!(status(dir.path()) == Some(0), "selftest on copied fixtures does not exit 0");
    let path = dir.path().join("e4.alg");
    let text = std::fs::read_to_string(&path).unwrap().replacen("[[\"1\", \"e1\"]]", "[[\"3/2\", \"e1\"]]", 1);
    std::fs::write(&path, text).unwrap();
    ensure!(status(dir.path()) == Some(1), "selftest with a mutated e4.alg does not exit 1");
    Ok(format!("5 perturbed inputs each reported with a witness; selftest fails on all {mutations} single-constant mutations and exits 1 from the binary"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("E4 with r4 is quasi-triangular", criterion_1),
        ("T_(r4-σ(r4)) images and factorizability", criterion_2),
        ("hemisemidirect product, phase-space r and H4 ≅ E4", criterion_3),
        ("double of (E4, r4) and θ", criterion_4),
        ("round trips and mirror squares", criterion_5),
        ("randomized equivalence suite", criterion_6),
        ("negative controls and selftest mutations", criterion_7),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.2}s): {detail}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
