//! Normalized chains and the operators `b`, `s`, `B`, `T` of a duplicial tower.

use super::HomologyError;
use crate::duplicial::{DuplicialTower, SimplicialTower};
use crate::linalg::{self, Field, LinMap, Scalar, Space};
use crate::report::CheckReport;
use num_integer::binomial;
use rayon::prelude::*;

/// Chains modulo degenerate chains, degree by degree.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub spaces: Vec<Space>,
    /// `C_n → N_n`, killing the span of the degeneracy images.
    pub projection: Vec<LinMap>,
    /// `N_n → C_n` with `projection ∘ section = id`.
    pub section: Vec<LinMap>,
}

impl Normalized {
    /// The map `N_from → N_to` induced by `f : C_from → C_to`.
    pub fn induced(&self, from: usize, to: usize, f: &LinMap) -> LinMap {
        self.projection[to].then_after(f).then_after(&self.section[from])
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Space::dim).collect()
    }
}

fn dense_columns(f: &LinMap) -> Vec<Vec<Scalar>> {
    let n = f.codomain().dim();
    f.columns()
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(|c| {
            let mut v = vec![f.field().zero(); n];
            for (i, x) in c {
                v[i] = x;
            }
            v
        })
        .collect()
}

pub fn normalize(tower: &SimplicialTower) -> Normalized {
    let field = field_of(tower);
    let parts: Vec<(LinMap, LinMap)> = (0..=tower.n_max())
        .into_par_iter()
        .map(|n| {
            let spanning = if n == 0 {
                Vec::new()
            } else {
                (0..n).flat_map(|j| dense_columns(tower.degeneracy(n - 1, j))).collect()
            };
            linalg::quotient(field, &tower.spaces[n], spanning)
        })
        .collect();
    let (projection, section): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
    let spaces = projection.iter().map(|q| q.codomain().clone()).collect();
    Normalized { spaces, projection, section }
}

fn field_of(tower: &SimplicialTower) -> Field {
    tower
        .faces
        .iter()
        .flatten()
        .chain(tower.degeneracies.iter().flatten())
        .chain(tower.augmentation.iter())
        .map(LinMap::field)
        .next()
        .unwrap_or(Field::Rational)
}

/// `b = Σ (−1)^i d_i : C_n → C_{n−1}`; in degree 0 the zero map to the zero space.
pub fn hochschild_b(tower: &SimplicialTower, n: usize) -> LinMap {
    let f = field_of(tower);
    if n == 0 {
        return LinMap::zero(f, tower.spaces[0].clone(), Space::zero());
    }
    let mut acc = LinMap::zero(f, tower.spaces[n].clone(), tower.spaces[n - 1].clone());
    for i in 0..=n {
        let sign = if i % 2 == 0 { f.one() } else { -&f.one() };
        acc = acc.linear_combination(&f.one(), tower.face(n, i), &sign).expect("faces share their spaces");
    }
    acc
}

/// Coefficients of `f_n(x) = Σ_k C(n+1, k+1) (−x)^k`, lowest degree first.
pub fn f_coefficients(n: usize) -> Vec<i128> {
    (0..=n)
        .map(|k| {
            let c = binomial(n as i128 + 1, k as i128 + 1);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// `1 − x f_n(x) = (1 − x)^{n+1}` as an identity of integer polynomials.
pub fn check_f_identity(n: usize) -> bool {
    let mut lhs = vec![0i128; n + 2];
    lhs[0] = 1;
    for (k, c) in f_coefficients(n).into_iter().enumerate() {
        lhs[k + 1] -= c;
    }
    let mut rhs = vec![1i128];
    for _ in 0..=n {
        let mut next = vec![0i128; rhs.len() + 1];
        for (k, c) in rhs.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= c;
        }
        rhs = next;
    }
    lhs == rhs
}

/// `p(x)` for an endomorphism `x` by Horner's rule.
fn eval_poly(coeffs: &[i128], x: &LinMap) -> LinMap {
    let f = x.field();
    let id = LinMap::identity(f, x.domain().clone());
    let scalar = |c: i128| f.from_int(i64::try_from(c).expect("binomial coefficient fits in i64"));
    let mut acc = LinMap::zero(f, x.domain().clone(), x.domain().clone());
    for c in coeffs.iter().rev() {
        acc = x.then_after(&acc).linear_combination(&f.one(), &id, &scalar(*c)).expect("square maps");
    }
    acc
}

/// The normalized mixed complex of a duplicial tower. `s` is the extra degeneracy
/// `s_{−1} = t s_n`, which preserves degenerate chains; `B = s f_n(bs)`.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    pub name: String,
    pub spaces: Vec<Space>,
    /// `b[n] : N_n → N_{n−1}`; `b[0]` lands in the zero space.
    pub b: Vec<LinMap>,
    /// `s[n] : N_n → N_{n+1}` for `n` below the top degree.
    pub s: Vec<LinMap>,
    /// `big_b[n] : N_n → N_{n+1}` for `n` below the top degree.
    pub big_b: Vec<LinMap>,
    /// `T = t^{n+1}` on `N_n`.
    pub big_t: Vec<LinMap>,
}

impl MixedComplex {
    pub fn n_max(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Space::dim).collect()
    }

    pub fn is_cyclic(&self) -> bool {
        self.big_t.iter().all(LinMap::is_identity)
    }

    /// `b² = 0`, `B² = 0` and `bB + Bb = id − T`, per degree.
    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let top = self.n_max();
        for n in 2..=top {
            let bb = self.b[n - 1].then_after(&self.b[n]);
            r.push(format!("b^2 = 0 (degree {n})"), bb.is_zero(), None);
        }
        for n in 0..top.saturating_sub(1) {
            let bb = self.big_b[n + 1].then_after(&self.big_b[n]);
            r.push(format!("B^2 = 0 (degree {n})"), bb.is_zero(), None);
        }
        for n in 0..top {
            let f = self.b[n].field();
            let id = LinMap::identity(f, self.spaces[n].clone());
            let mut lhs = self.b[n + 1].then_after(&self.big_b[n]);
            if n > 0 {
                lhs = lhs.add(&self.big_b[n - 1].then_after(&self.b[n])).expect("endomorphisms of N_n");
            }
            let rhs = id.sub(&self.big_t[n]).expect("endomorphisms of N_n");
            r.push_eq(format!("bB + Bb = id - T (degree {n})"), &lhs, &rhs);
        }
        r
    }
}

/// Builds `b`, `s`, `B`, `T` on normalized chains and verifies the mixed-complex identities.
pub fn boundaries(tower: &DuplicialTower) -> Result<MixedComplex, HomologyError> {
    let mc = mixed_complex(tower, &normalize(&tower.simplicial));
    let rep = mc.check();
    if let Some(e) = rep.failures().next() {
        return Err(HomologyError::Inconsistent(format!("{}: {}", mc.name, e.name)));
    }
    Ok(mc)
}

/// Same as [`boundaries`] without the verification.
pub fn mixed_complex(tower: &DuplicialTower, norm: &Normalized) -> MixedComplex {
    let top = tower.n_max();
    let b: Vec<LinMap> = (0..=top)
        .into_par_iter()
        .map(|n| {
            let raw = hochschild_b(&tower.simplicial, n);
            if n == 0 {
                raw.then_after(&norm.section[0])
            } else {
                norm.induced(n, n - 1, &raw)
            }
        })
        .collect();
    let s: Vec<LinMap> = (0..top).into_par_iter().map(|n| norm.induced(n, n + 1, &tower.extra_degeneracy(n))).collect();
    let big_t: Vec<LinMap> = (0..=top).into_par_iter().map(|n| norm.induced(n, n, &tower.big_t(n))).collect();
    let big_b = (0..top)
        .into_par_iter()
        .map(|n| {
            let bs = b[n + 1].then_after(&s[n]);
            s[n].then_after(&eval_poly(&f_coefficients(n), &bs))
        })
        .collect();
    MixedComplex { name: tower.name().to_string(), spaces: norm.spaces.clone(), b, s, big_b, big_t }
}
