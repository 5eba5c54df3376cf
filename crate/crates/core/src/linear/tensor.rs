use num_traits::Zero;

use super::{axpy, Matrix, Rational, Vector};
use crate::error::{Error, Result};

/// An element `Σ t[i][j] e_i ⊗ e_j` of `V ⊗ V`.
///
/// Coefficients are stored first-leg-major: `t[i][j]` lives at `i * dim + j`.
/// The same flattening is used when a 2-tensor is fed to an `n² × n²`
/// operator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTensor {
    dim: usize,
    coeff: Vec<Rational>,
}

impl TwoTensor {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            coeff: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn from_flat(dim: usize, coeff: Vec<Rational>) -> Result<Self> {
        if coeff.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for a 2-tensor of dimension {dim}",
                coeff.len()
            )));
        }
        Ok(Self { dim, coeff })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut coeff = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                coeff.push(f(i, j));
            }
        }
        Self { dim, coeff }
    }

    /// Sum of `c · e_i ⊗ e_j` over the given (0-based) terms.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut t = Self::zeros(dim);
        for (i, j, c) in terms {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "term index ({i}, {j}) outside dimension {dim}"
                )));
            }
            t.coeff[i * dim + j] += c;
        }
        Ok(t)
    }

    /// `a ⊗ b` for coordinate vectors `a`, `b`.
    pub fn outer(a: &[Rational], b: &[Rational]) -> Self {
        assert_eq!(a.len(), b.len(), "outer product of unequal lengths");
        Self::from_fn(a.len(), |i, j| &a[i] * &b[j])
    }

    /// Reads the coefficient grid off a square matrix, `t[i][j] = m[(i, j)]`.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch("2-tensor from a non-square matrix".into()));
        }
        Self::from_flat(m.rows(), m.entries().to_vec())
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_vec(self.dim, self.dim, self.coeff.clone()).expect("square by construction")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.coeff[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.coeff[i * self.dim + j] = value;
    }

    pub fn as_flat(&self) -> &[Rational] {
        &self.coeff
    }

    /// Row `i`: the vector `b` with `t = Σ_i e_i ⊗ b_i`.
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.coeff[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(Zero::is_zero)
    }

    /// The flip `σ(x ⊗ y) = y ⊗ x`.
    pub fn swap(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap()
    }

    pub fn is_skew(&self) -> bool {
        self.add(&self.swap()).is_zero()
    }

    /// `r - σ(r)`, twice the skew-symmetric part.
    pub fn skew_part(&self) -> Self {
        self.sub(&self.swap())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "2-tensor dimension");
        Self {
            dim: self.dim,
            coeff: self.coeff.iter().zip(&other.coeff).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "2-tensor dimension");
        Self {
            dim: self.dim,
            coeff: self.coeff.iter().zip(&other.coeff).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            dim: self.dim,
            coeff: self.coeff.iter().map(|a| s * a).collect(),
        }
    }

    /// `(f ⊗ g)(t)`; `None` stands for the identity on that leg.
    pub fn apply(&self, f: Option<&Matrix>, g: Option<&Matrix>) -> Self {
        let t = self.to_matrix();
        let left = match f {
            Some(f) => f.mul(&t),
            None => t,
        };
        let out = match g {
            Some(g) => left.mul(&g.transpose()),
            None => left,
        };
        Self::from_matrix(&out).expect("square")
    }

    /// `t ⊗ v`, the 3-tensor with the vector as third leg.
    pub fn tensor_right(&self, v: &[Rational]) -> ThreeTensor {
        let n = self.dim;
        assert_eq!(v.len(), n);
        let mut out = ThreeTensor::zeros(n);
        for (ij, c) in self.coeff.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            axpy(&mut out.coeff[ij * n..(ij + 1) * n], c, v);
        }
        out
    }

    /// Entries with nonzero coefficient as `(i, j, coefficient)`.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let n = self.dim;
        self.coeff
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / n, idx % n, c))
    }
}

/// An element `Σ t[i][j][k] e_i ⊗ e_j ⊗ e_k` of `V ⊗ V ⊗ V`, stored at
/// `(i * dim + j) * dim + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreeTensor {
    dim: usize,
    coeff: Vec<Rational>,
}

impl ThreeTensor {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            coeff: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn from_flat(dim: usize, coeff: Vec<Rational>) -> Result<Self> {
        if coeff.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for a 3-tensor of dimension {dim}",
                coeff.len()
            )));
        }
        Ok(Self { dim, coeff })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut coeff = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    coeff.push(f(i, j, k));
                }
            }
        }
        Self { dim, coeff }
    }

    /// `a ⊗ b ⊗ c` for coordinate vectors.
    pub fn outer(a: &[Rational], b: &[Rational], c: &[Rational]) -> Self {
        Self::from_fn(a.len(), |i, j, k| &a[i] * &b[j] * &c[k])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.coeff[(i * self.dim + j) * self.dim + k]
    }

    pub fn as_flat(&self) -> &[Rational] {
        &self.coeff
    }

    pub(crate) fn entry_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Rational {
        &mut self.coeff[(i * self.dim + j) * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "3-tensor dimension");
        Self {
            dim: self.dim,
            coeff: self.coeff.iter().zip(&other.coeff).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "3-tensor dimension");
        Self {
            dim: self.dim,
            coeff: self.coeff.iter().zip(&other.coeff).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            dim: self.dim,
            coeff: self.coeff.iter().map(|a| s * a).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "3-tensor dimension");
        for (a, b) in self.coeff.iter_mut().zip(&other.coeff) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    /// Moves leg `k` to position `p[k]`.
    pub fn permute(&self, p: Perm3) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let src = [i, j, k];
                    let mut dst = [0; 3];
                    for leg in 0..3 {
                        dst[p.0[leg]] = src[leg];
                    }
                    *out.entry_mut(dst[0], dst[1], dst[2]) = c.clone();
                }
            }
        }
        out
    }

    /// Applies `m` to one leg (0, 1 or 2) and the identity to the others.
    pub fn apply_leg(&self, leg: usize, m: &Matrix) -> Self {
        let n = self.dim;
        assert!(leg < 3);
        assert_eq!((m.rows(), m.cols()), (n, n), "leg operator shape");
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let src = [i, j, k];
                    for a in 0..n {
                        let f = &m[(a, src[leg])];
                        if f.is_zero() {
                            continue;
                        }
                        let mut dst = src;
                        dst[leg] = a;
                        *out.entry_mut(dst[0], dst[1], dst[2]) += f * c;
                    }
                }
            }
        }
        out
    }

    /// Applies a 2-leg operator on legs `(0, 1)`: `(M ⊗ id)` with `M` acting on
    /// the flattened first two legs.
    pub fn apply_first_two(&self, m: &Matrix) -> Self {
        let n = self.dim;
        assert_eq!((m.rows(), m.cols()), (n * n, n * n));
        let mut out = Self::zeros(n);
        for k in 0..n {
            let slice: Vector = (0..n * n).map(|ij| self.coeff[ij * n + k].clone()).collect();
            let image = m.mul_vec(&slice);
            for (ij, c) in image.into_iter().enumerate() {
                out.coeff[ij * n + k] = c;
            }
        }
        out
    }

    /// Applies a 2-leg operator on legs `(1, 2)`: `(id ⊗ M)`.
    pub fn apply_last_two(&self, m: &Matrix) -> Self {
        let n = self.dim;
        assert_eq!((m.rows(), m.cols()), (n * n, n * n));
        let mut out = Self::zeros(n);
        for i in 0..n {
            let lo = i * n * n;
            let image = m.mul_vec(&self.coeff[lo..lo + n * n]);
            out.coeff[lo..lo + n * n].clone_from_slice(&image);
        }
        out
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> {
        let n = self.dim;
        self.coeff
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| ((idx / (n * n), (idx / n) % n, idx % n), c))
    }
}

/// A permutation of the three legs of a 3-tensor: leg `k` moves to
/// position `self.0[k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm3(pub [usize; 3]);

impl Perm3 {
    pub const IDENTITY: Self = Self([0, 1, 2]);
    /// `x ⊗ y ⊗ z ↦ z ⊗ y ⊗ x`.
    pub const SIGMA13: Self = Self([2, 1, 0]);
    /// `σ ⊗ id`: `x ⊗ y ⊗ z ↦ y ⊗ x ⊗ z`.
    pub const SIGMA12: Self = Self([1, 0, 2]);
    /// `id ⊗ σ`: `x ⊗ y ⊗ z ↦ x ⊗ z ⊗ y`.
    pub const SIGMA23: Self = Self([0, 2, 1]);
    /// The cyclic shift `x ⊗ y ⊗ z ↦ y ⊗ z ⊗ x`.
    pub const XI: Self = Self([2, 0, 1]);

    pub fn new(p: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &d in &p {
            if d >= 3 || seen[d] {
                return Err(Error::ShapeMismatch(format!("{p:?} is not a permutation of three legs")));
            }
            seen[d] = true;
        }
        Ok(Self(p))
    }

    pub fn all() -> [Self; 6] {
        [
            Self([0, 1, 2]),
            Self([0, 2, 1]),
            Self([1, 0, 2]),
            Self([1, 2, 0]),
            Self([2, 0, 1]),
            Self([2, 1, 0]),
        ]
    }

    pub fn inverse(self) -> Self {
        let mut inv = [0; 3];
        for (k, &d) in self.0.iter().enumerate() {
            inv[d] = k;
        }
        Self(inv)
    }

    /// `self ∘ first`: permute by `first`, then by `self`.
    pub fn after(self, first: Self) -> Self {
        Self([self.0[first.0[0]], self.0[first.0[1]], self.0[first.0[2]]])
    }
}
