//! The cyclic object `C_n(A) = A^{⊗(n+1)}` of an algebra.

use super::{DuplicialTower, SimplicialTower};
use crate::algebra::AlgebraData;
use crate::linalg::space::{decode, encode};
use crate::linalg::{LinMap, Space};

/// `d_i` multiplies slots `i, i+1` (and `d_n(a₀⊗⋯⊗aₙ) = aₙa₀⊗a₁⊗⋯`), `s_j` inserts `1` after
/// slot `j`, and `t(a₀⊗⋯⊗aₙ) = aₙ⊗a₀⊗⋯⊗aₙ₋₁`.
pub fn classical_cyclic_object(a: &AlgebraData, n_max: usize) -> DuplicialTower {
    let f = a.field();
    let d = a.dim();
    let spaces: Vec<Space> = (0..=n_max).map(|n| a.space.power(n + 1)).collect();
    let shape = |n: usize| vec![d; n + 1];
    let face = |n: usize, i: usize| {
        LinMap::from_columns(f, spaces[n].clone(), spaces[n - 1].clone(), |j| {
            let mut x = decode(j, &shape(n));
            if i == n {
                let last = x.pop().unwrap();
                x.insert(0, last);
            }
            let k = if i == n { 0 } else { i };
            a.mul_basis(x[k], x[k + 1])
                .iter()
                .map(|(r, c)| {
                    let mut y = x.clone();
                    y.splice(k..k + 2, [*r]);
                    (encode(&y, &shape(n - 1)), c.clone())
                })
                .collect()
        })
    };
    let degeneracy = |n: usize, j: usize| {
        LinMap::from_columns(f, spaces[n].clone(), spaces[n + 1].clone(), |col| {
            let x = decode(col, &shape(n));
            a.unit_vector()
                .iter()
                .map(|(u, c)| {
                    let mut y = x.clone();
                    y.insert(j + 1, *u);
                    (encode(&y, &shape(n + 1)), c.clone())
                })
                .collect()
        })
    };
    let t = |n: usize| {
        LinMap::from_columns(f, spaces[n].clone(), spaces[n].clone(), |j| {
            let mut x = decode(j, &shape(n));
            let last = x.pop().unwrap();
            x.insert(0, last);
            vec![(encode(&x, &shape(n)), f.one())]
        })
    };
    let faces = (0..=n_max).map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| face(n, i)).collect() }).collect();
    let degeneracies = (0..=n_max).map(|n| if n < n_max { (0..=n).map(|j| degeneracy(n, j)).collect() } else { Vec::new() }).collect();
    let ts = (0..=n_max).map(t).collect();
    DuplicialTower {
        simplicial: SimplicialTower { name: "C(A)".into(), spaces, faces, degeneracies, augmentation: None },
        t: ts,
    }
}
