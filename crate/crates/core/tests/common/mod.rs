//! Independent oracles: every quantity is recomputed from raw structure
//! constants by explicit index sums, without the library's tensor helpers.

#![allow(dead_code, clippy::needless_range_loop)]

use leibniz::algebra::LeibnizAlgebra;
use leibniz::linear::{Matrix, Rational, TwoTensor};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub struct Sc {
    pub n: usize,
    c: Vec<Rational>,
}

impl Sc {
    pub fn of(alg: &LeibnizAlgebra) -> Self {
        Self {
            n: alg.dim(),
            c: alg.structure_constants().as_flat().to_vec(),
        }
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.n + j) * self.n + k]
    }
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn grid(t: &TwoTensor) -> Vec<Vec<Rational>> {
    let n = t.dim();
    (0..n).map(|i| (0..n).map(|j| t.get(i, j).clone()).collect()).collect()
}

pub fn cube_zero(n: usize) -> Vec<Vec<Vec<Rational>>> {
    vec![vec![vec![Rational::zero(); n]; n]; n]
}

pub fn is_zero3(t: &[Vec<Vec<Rational>>]) -> bool {
    t.iter().flatten().flatten().all(Zero::is_zero)
}

/// `[[r,r]]` coefficient by coefficient:
/// `Σ r_py r_sz c_psx - Σ r_xq r_sz (c_qsy + c_sqy) + Σ r_xq r_yt c_tqz`.
pub fn defect(sc: &Sc, r: &[Vec<Rational>]) -> Vec<Vec<Vec<Rational>>> {
    let n = sc.n;
    let mut out = cube_zero(n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut v = Rational::zero();
                for a in 0..n {
                    for b in 0..n {
                        v += &r[a][y] * &r[b][z] * sc.c(a, b, x);
                        v -= &r[x][a] * &r[b][z] * (sc.c(a, b, y) + sc.c(b, a, y));
                        v += &r[x][a] * &r[y][b] * sc.c(b, a, z);
                    }
                }
                out[x][y][z] = v;
            }
        }
    }
    out
}

/// `(F(e_x) t)[a][b] = Σ_p (c_xpa + c_pxa) t_pb - Σ_q t_aq c_qxb`.
pub fn f_apply(sc: &Sc, x: usize, t: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = sc.n;
    let mut out = vec![vec![Rational::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut v = Rational::zero();
            for p in 0..n {
                v += (sc.c(x, p, a) + sc.c(p, x, a)) * &t[p][b];
                v -= &t[a][p] * sc.c(p, x, b);
            }
            out[a][b] = v;
        }
    }
    out
}

pub fn invariant(sc: &Sc, t: &[Vec<Rational>]) -> bool {
    (0..sc.n).all(|x| f_apply(sc, x, t).iter().flatten().all(Zero::is_zero))
}

pub fn skew(t: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = t.len();
    (0..n).map(|i| (0..n).map(|j| &t[i][j] - &t[j][i]).collect()).collect()
}

/// `d[x][a][b]`, the coefficient of `e_a ⊗ e_b` in `Δ_r(e_x)`.
pub fn delta(sc: &Sc, r: &[Vec<Rational>]) -> Vec<Vec<Vec<Rational>>> {
    (0..sc.n).map(|x| f_apply(sc, x, r)).collect()
}

/// `(Δ⊗id)Δ + (σ⊗id)(id⊗Δ)Δ - (id⊗Δ)Δ = 0` from the cube alone.
pub fn coalgebra(d: &[Vec<Vec<Rational>>]) -> bool {
    let n = d.len();
    for x in 0..n {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut v = Rational::zero();
                    for j in 0..n {
                        v += &d[x][j][c] * &d[j][a][b];
                        v += &d[x][b][j] * &d[j][a][c];
                        v -= &d[x][a][j] * &d[j][b][c];
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

/// `σ(R(y)⊗id)Δ(x) = (R(x)⊗id)Δ(y)`.
pub fn bialg1(sc: &Sc, d: &[Vec<Vec<Rational>>]) -> bool {
    let n = sc.n;
    for x in 0..n {
        for y in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let mut v = Rational::zero();
                    for j in 0..n {
                        v += sc.c(j, y, b) * &d[x][j][a];
                        v -= sc.c(j, x, a) * &d[y][j][b];
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

/// `Δ([x,y]) = (id⊗R(y) - (L+R)(y)⊗id)(id+σ)Δ(x) + (id⊗L(x) + L(x)⊗id)Δ(y)`.
pub fn bialg2(sc: &Sc, d: &[Vec<Vec<Rational>>]) -> bool {
    let n = sc.n;
    for x in 0..n {
        for y in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let mut v = Rational::zero();
                    for k in 0..n {
                        v += sc.c(x, y, k) * &d[k][a][b];
                        let s_ak = &d[x][a][k] + &d[x][k][a];
                        let s_kb = &d[x][k][b] + &d[x][b][k];
                        v -= s_ak * sc.c(k, y, b);
                        v += (sc.c(y, k, a) + sc.c(k, y, a)) * s_kb;
                        v -= &d[y][a][k] * sc.c(x, k, b);
                        v -= sc.c(x, k, a) * &d[y][k][b];
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

/// Determinant by fraction-free Bareiss elimination over the integers,
/// after clearing denominators row by row.
pub fn determinant(m: &Matrix) -> Rational {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut scale = Rational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let l = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
        scale *= Rational::from_integer(l.clone());
        a.push(m.row(i).iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return Rational::one();
    }
    Rational::from_integer(sign * &a[n - 1][n - 1]) / scale
}

/// Matrix of `T_t` read off `⟨a*, T_t b*⟩ = t[b][a]`.
pub fn t_matrix(t: &[Vec<Rational>]) -> Matrix {
    let n = t.len();
    Matrix::from_fn(n, n, |a, b| t[b][a].clone())
}
