//! Simplicial and duplicial towers: bar and opbar resolutions, the towers `CC_T(N,M)` and
//! `CC_S^op(N,M)` with their cyclic operators, the comparison maps `R` and `L`, and the classical
//! cyclic object of an algebra.

pub mod classical;
pub mod cyc;
pub mod oracle;
pub mod towers;
pub mod words;

pub use classical::classical_cyclic_object;
pub use cyc::{build_r_l, check_cyclicity, check_prop_cyc, ComparisonMaps};
pub use oracle::{explicit_l_oracle, explicit_r_oracle, explicit_t_oracle};
pub use towers::{bar_resolution, cc_towers, opbar_resolution, TowerConfig, DEFAULT_DIM_CAP};
pub use words::{Calculus, Letter, Outer, Path, Word};

use crate::algebra::AlgebraError;
use crate::linalg::{LinMap, LinalgError, Space};
use crate::report::CheckReport;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DuplicialError {
    #[error("degree {degree} would have dimension {dim}, above the cap of {cap}")]
    DimensionCap { degree: usize, dim: usize, cap: usize },
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<LinalgError> for DuplicialError {
    fn from(e: LinalgError) -> Self {
        DuplicialError::Algebra(e.into())
    }
}

/// Degrees `0..=n_max` of a simplicial object. `faces[n][i] : C_n → C_{n−1}` (empty for
/// `n = 0`) and `degeneracies[n][j] : C_n → C_{n+1}` for `n < n_max`.
#[derive(Clone, Debug)]
pub struct SimplicialTower {
    pub name: String,
    pub spaces: Vec<Space>,
    pub faces: Vec<Vec<LinMap>>,
    pub degeneracies: Vec<Vec<LinMap>>,
    /// `C_0 → C_{−1}` for resolutions.
    pub augmentation: Option<LinMap>,
}

#[derive(Clone, Debug)]
pub struct DuplicialTower {
    pub simplicial: SimplicialTower,
    pub t: Vec<LinMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerSummary {
    pub name: String,
    pub dims: Vec<usize>,
}

impl SimplicialTower {
    pub fn n_max(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Space::dim).collect()
    }

    pub fn face(&self, n: usize, i: usize) -> &LinMap {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &LinMap {
        &self.degeneracies[n][j]
    }

    pub fn summary(&self) -> TowerSummary {
        TowerSummary { name: self.name.clone(), dims: self.dims() }
    }

    /// The simplicial identities through the top degree.
    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let top = self.n_max();
        let id = |n: usize| LinMap::identity(self.faces_field(), self.spaces[n].clone());
        for n in 2..=top {
            for j in 0..=n {
                for i in 0..j {
                    r.push_eq_result(
                        format!("d_{i} d_{j} = d_{} d_{i} (degree {n})", j - 1),
                        self.face(n - 1, i).compose(self.face(n, j)),
                        self.face(n - 1, j - 1).compose(self.face(n, i)),
                    );
                }
            }
        }
        for n in 0..top {
            let m = n + 1;
            for j in 0..=n {
                let s = self.degeneracy(n, j);
                for i in 0..=m {
                    let name = format!("d_{i} s_{j} (degree {n})");
                    let lhs = self.face(m, i).compose(s);
                    let rhs = if i < j {
                        self.degeneracy(n - 1, j - 1).compose(self.face(n, i))
                    } else if i == j || i == j + 1 {
                        Ok(id(n))
                    } else {
                        self.degeneracy(n - 1, j).compose(self.face(n, i - 1))
                    };
                    r.push_eq_result(name, lhs, rhs);
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    r.push_eq_result(
                        format!("s_{i} s_{j} = s_{} s_{i} (degree {n})", j + 1),
                        self.degeneracy(n + 1, i).compose(self.degeneracy(n, j)),
                        self.degeneracy(n + 1, j + 1).compose(self.degeneracy(n, i)),
                    );
                }
            }
        }
        if let Some(eps) = &self.augmentation {
            if top >= 1 {
                r.push_eq_result(
                    "augmentation d_0 = augmentation d_1",
                    eps.compose(self.face(1, 0)),
                    eps.compose(self.face(1, 1)),
                );
            }
        }
        r
    }

    fn faces_field(&self) -> crate::linalg::Field {
        self.faces
            .iter()
            .flatten()
            .chain(self.degeneracies.iter().flatten())
            .map(LinMap::field)
            .next()
            .unwrap_or(crate::linalg::Field::Rational)
    }
}

impl DuplicialTower {
    pub fn n_max(&self) -> usize {
        self.simplicial.n_max()
    }

    pub fn name(&self) -> &str {
        &self.simplicial.name
    }

    pub fn dims(&self) -> Vec<usize> {
        self.simplicial.dims()
    }

    pub fn face(&self, n: usize, i: usize) -> &LinMap {
        self.simplicial.face(n, i)
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &LinMap {
        self.simplicial.degeneracy(n, j)
    }

    /// `s_{−1} = t s_n : C_n → C_{n+1}`.
    pub fn extra_degeneracy(&self, n: usize) -> LinMap {
        self.t[n + 1].then_after(self.degeneracy(n, n))
    }

    /// `T = t^{n+1}` in degree `n`.
    pub fn big_t(&self, n: usize) -> LinMap {
        power(&self.t[n], n + 1)
    }

    /// Simplicial identities plus `d₀t = d_n`, `d_i t = t d_{i−1}`, `s₀t = t²s_n`,
    /// `s_j t = t s_{j−1}`.
    pub fn check(&self) -> CheckReport {
        let mut r = self.simplicial.check();
        let top = self.n_max();
        for n in 1..=top {
            let t = &self.t[n];
            r.push_eq_result(format!("d_0 t = d_{n} (degree {n})"), self.face(n, 0).compose(t), Ok(self.face(n, n).clone()));
            for i in 1..=n {
                r.push_eq_result(
                    format!("d_{i} t = t d_{} (degree {n})", i - 1),
                    self.face(n, i).compose(t),
                    self.t[n - 1].compose(self.face(n, i - 1)),
                );
            }
        }
        for n in 0..top {
            let t = &self.t[n];
            let t1 = &self.t[n + 1];
            r.push_eq_result(
                format!("s_0 t = t^2 s_{n} (degree {n})"),
                self.degeneracy(n, 0).compose(t),
                t1.compose(t1).and_then(|tt| tt.compose(self.degeneracy(n, n))),
            );
            for j in 1..=n {
                r.push_eq_result(
                    format!("s_{j} t = t s_{} (degree {n})", j - 1),
                    self.degeneracy(n, j).compose(t),
                    t1.compose(self.degeneracy(n, j - 1)),
                );
            }
        }
        r
    }
}

pub(crate) fn power(f: &LinMap, k: usize) -> LinMap {
    let mut acc = LinMap::identity(f.field(), f.domain().clone());
    for _ in 0..k {
        acc = f.then_after(&acc);
    }
    acc
}
