//! Built-in algebras and tensors.

use crate::algebra::{default_names, LeibnizAlgebra};
use crate::linear::{int, zero_vector, TwoTensor, Vector};

fn vec_of(n: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = zero_vector(n);
    for &(k, c) in terms {
        v[k] = int(c);
    }
    v
}

type Product<'a> = (usize, usize, &'a [(usize, i64)]);

fn build(names: Vec<String>, products: &[Product]) -> LeibnizAlgebra {
    let n = names.len();
    let products: Vec<(usize, usize, Vector)> =
        products.iter().map(|&(i, j, t)| (i, j, vec_of(n, t))).collect();
    LeibnizAlgebra::from_products(names, &products).expect("catalog entries are Leibniz")
}

/// Four-dimensional: `[e1,e2] = e1, [e2,e1] = -e1, [e1,e3] = -e4, [e2,e3] = e3`.
pub fn e4() -> LeibnizAlgebra {
    build(
        default_names("e", 4),
        &[(0, 1, &[(0, 1)]), (1, 0, &[(0, -1)]), (0, 2, &[(3, -1)]), (1, 2, &[(2, 1)])],
    )
}

/// The non-abelian two-dimensional Lie algebra, `{e1, e2} = e1`.
pub fn g2() -> LeibnizAlgebra {
    build(default_names("e", 2), &[(0, 1, &[(0, 1)]), (1, 0, &[(0, -1)])])
}

/// The hemisemidirect product of `g2` with its coadjoint representation.
pub fn h4() -> LeibnizAlgebra {
    let names = vec!["e1".into(), "e2".into(), "e1*".into(), "e2*".into()];
    build(
        names,
        &[(0, 1, &[(0, 1)]), (1, 0, &[(0, -1)]), (0, 2, &[(3, -1)]), (1, 2, &[(2, 1)])],
    )
}

pub fn abelian(n: usize) -> LeibnizAlgebra {
    LeibnizAlgebra::abelian(n)
}

/// Three-dimensional, single product `[e1, e1] = e2`. Not a Lie algebra.
pub fn nilpotent3() -> LeibnizAlgebra {
    build(default_names("e", 3), &[(0, 0, &[(1, 1)])])
}

/// The three-dimensional Heisenberg Lie algebra, `{e1, e2} = e3`.
pub fn heisenberg3() -> LeibnizAlgebra {
    build(default_names("e", 3), &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])])
}

/// `r4 = e3 ⊗ e1 + e4 ⊗ e2` on `e4()`.
pub fn r4() -> TwoTensor {
    TwoTensor::from_terms(4, &[(2, 0, int(1)), (3, 1, int(1))]).expect("in range")
}

/// `r = e1* ⊗ e1 + e2* ⊗ e2` on `h4()`.
pub fn r_h4() -> TwoTensor {
    TwoTensor::from_terms(4, &[(2, 0, int(1)), (3, 1, int(1))]).expect("in range")
}

/// A named catalog algebra.
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: fn() -> LeibnizAlgebra,
}

fn abelian3() -> LeibnizAlgebra {
    abelian(3)
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "e4",
        description: "4-dim Leibniz algebra carrying the quasi-triangular r4 = e3⊗e1 + e4⊗e2",
        algebra: e4,
    },
    Fixture {
        name: "g2",
        description: "2-dim non-abelian Lie algebra {e1,e2} = e1",
        algebra: g2,
    },
    Fixture {
        name: "h4",
        description: "hemisemidirect product of g2 with its coadjoint representation",
        algebra: h4,
    },
    Fixture {
        name: "abelian3",
        description: "3-dim abelian algebra",
        algebra: abelian3,
    },
    Fixture {
        name: "nilpotent3",
        description: "3-dim nilpotent Leibniz algebra [e1,e1] = e2",
        algebra: nilpotent3,
    },
    Fixture {
        name: "heisenberg3",
        description: "3-dim Heisenberg Lie algebra {e1,e2} = e3",
        algebra: heisenberg3,
    },
];

/// Looks up a fixture by name; `abelianN` works for any `N`.
pub fn lookup(name: &str) -> Option<LeibnizAlgebra> {
    if let Some(f) = FIXTURES.iter().find(|f| f.name == name) {
        return Some((f.algebra)());
    }
    let n: usize = name.strip_prefix("abelian")?.parse().ok()?;
    Some(abelian(n))
}

/// The algebras the randomized suites run over.
pub fn random_test_algebras() -> Vec<(&'static str, LeibnizAlgebra)> {
    vec![
        ("e4", e4()),
        ("g2", g2()),
        ("h4", h4()),
        ("abelian3", abelian(3)),
        ("nilpotent3", nilpotent3()),
    ]
}
