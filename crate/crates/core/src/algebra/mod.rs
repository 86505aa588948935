//! Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras given by structure
//! constants.

pub mod json;
pub mod presets;

pub use presets::{make_preset, PresetId};

use crate::linalg::{self, Field, LinMap, LinalgError, Scalar, Space};
use crate::report::CheckReport;
use std::ops::Deref;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("structure check failed: {0}")]
    Structural(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Sparse vector: `(basis index, coefficient)` pairs.
pub type Vector = Vec<(usize, Scalar)>;

/// How much structure to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl std::str::FromStr for Strength {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "algebra" => Ok(Strength::Algebra),
            "coalgebra" => Ok(Strength::Coalgebra),
            "bialgebra" => Ok(Strength::Bialgebra),
            "hopf" => Ok(Strength::Hopf),
            _ => Err(AlgebraError::Input(format!("unknown strength `{s}`"))),
        }
    }
}

fn swap_map(field: Field, a: &Space, b: &Space) -> LinMap {
    LinMap::permute_factors(&a.tensor(b), &[1, 0], field).expect("two factors")
}

#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub space: Space,
    pub mult: LinMap,
    pub unit: LinMap,
    mult_cols: Vec<Vector>,
    unit_vec: Vector,
}

impl AlgebraData {
    pub fn new(space: Space, mult: LinMap, unit: LinMap) -> Result<Self, AlgebraError> {
        let n = space.dim();
        if mult.domain().dim() != n * n || mult.codomain().dim() != n {
            return Err(AlgebraError::Input(format!("multiplication must be {n}x{}", n * n)));
        }
        if unit.domain().dim() != 1 || unit.codomain().dim() != n {
            return Err(AlgebraError::Input(format!("unit must be {n}x1")));
        }
        if mult.field() != unit.field() {
            return Err(LinalgError::FieldMismatch.into());
        }
        let hh = space.tensor(&space);
        let mult = mult.relabel(hh, space.clone());
        let unit = unit.relabel(Space::ground(), space.clone());
        let mult_cols = mult.columns();
        let unit_vec = unit.column(0);
        Ok(AlgebraData { space, mult, unit, mult_cols, unit_vec })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.field(), self.space.clone())
    }

    /// `e_i · e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult_cols[i * self.dim() + j]
    }

    pub fn unit_vector(&self) -> &[(usize, Scalar)] {
        &self.unit_vec
    }

    pub fn mul_vec(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Vector {
        let mut acc = vec![self.field().zero(); self.dim()];
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in self.mul_basis(*i, *j) {
                    acc[*k] = &acc[*k] + &(&xy * c);
                }
            }
        }
        sparsify(acc)
    }

    /// Left multiplication `H⊗H → H` as a map; `lmul(a)` is `x ↦ a·x`.
    pub fn left_mult_by(&self, a: &[(usize, Scalar)]) -> LinMap {
        let f = self.field();
        LinMap::from_columns(f, self.space.clone(), self.space.clone(), |j| {
            self.mul_vec(a, &[(j, f.one())])
        })
    }

    pub fn right_mult_by(&self, a: &[(usize, Scalar)]) -> LinMap {
        let f = self.field();
        LinMap::from_columns(f, self.space.clone(), self.space.clone(), |j| {
            self.mul_vec(&[(j, f.one())], a)
        })
    }

    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let id = self.id();
        let lhs = self.mult.compose(&self.mult.kron(&id).unwrap());
        let rhs = self.mult.compose(&id.kron(&self.mult).unwrap());
        r.push_eq_result("associativity", lhs, rhs);
        let ground = Space::ground();
        let l = self.mult.then_after(&self.unit.kron(&id).unwrap());
        r.push_eq("left unit", &l.relabel(self.space.clone(), self.space.clone()), &id);
        let rr = self.mult.then_after(&id.kron(&self.unit).unwrap());
        r.push_eq("right unit", &rr.relabel(self.space.clone(), self.space.clone()), &id);
        let _ = ground;
        r
    }
}

pub(crate) fn sparsify(v: Vec<Scalar>) -> Vector {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

#[derive(Clone, Debug)]
pub struct CoalgebraData {
    pub space: Space,
    pub comult: LinMap,
    pub counit: LinMap,
    comult_cols: Vec<Vec<(usize, usize, Scalar)>>,
    counit_vals: Vec<Scalar>,
}

impl CoalgebraData {
    pub fn new(space: Space, comult: LinMap, counit: LinMap) -> Result<Self, AlgebraError> {
        let n = space.dim();
        if comult.domain().dim() != n || comult.codomain().dim() != n * n {
            return Err(AlgebraError::Input(format!("comultiplication must be {}x{n}", n * n)));
        }
        if counit.domain().dim() != n || counit.codomain().dim() != 1 {
            return Err(AlgebraError::Input(format!("counit must be 1x{n}")));
        }
        if comult.field() != counit.field() {
            return Err(LinalgError::FieldMismatch.into());
        }
        let comult = comult.relabel(space.clone(), space.tensor(&space));
        let counit = counit.relabel(space.clone(), Space::ground());
        let comult_cols = comult
            .columns()
            .into_iter()
            .map(|c| c.into_iter().map(|(r, v)| (r / n, r % n, v)).collect())
            .collect();
        let counit_vals = (0..n).map(|j| counit.entry(0, j)).collect();
        Ok(CoalgebraData { space, comult, counit, comult_cols, counit_vals })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `Δ(e_i)` as `(j, k, c)` triples meaning `c·e_j⊗e_k`.
    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult_cols[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit_vals[i]
    }

    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let id = LinMap::identity(self.field(), self.space.clone());
        let lhs = self.comult.kron(&id).unwrap().compose(&self.comult);
        let rhs = id.kron(&self.comult).unwrap().compose(&self.comult);
        r.push_eq_result("coassociativity", lhs, rhs);
        let l = self.counit.kron(&id).unwrap().then_after(&self.comult);
        r.push_eq("left counit", &l.relabel(self.space.clone(), self.space.clone()), &id);
        let rr = id.kron(&self.counit).unwrap().then_after(&self.comult);
        r.push_eq("right counit", &rr.relabel(self.space.clone(), self.space.clone()), &id);
        r
    }
}

#[derive(Clone, Debug)]
pub struct Bialgebra {
    pub name: String,
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
}

impl Bialgebra {
    pub fn new(name: impl Into<String>, algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<Self, AlgebraError> {
        if algebra.dim() != coalgebra.dim() {
            return Err(AlgebraError::Input("algebra and coalgebra dimensions differ".into()));
        }
        if algebra.field() != coalgebra.field() {
            return Err(LinalgError::FieldMismatch.into());
        }
        Ok(Bialgebra { name: name.into(), algebra, coalgebra })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn space(&self) -> &Space {
        &self.algebra.space
    }

    pub fn id(&self) -> LinMap {
        self.algebra.id()
    }

    pub fn mult(&self) -> &LinMap {
        &self.algebra.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.algebra.unit
    }

    pub fn comult(&self) -> &LinMap {
        &self.coalgebra.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.coalgebra.counit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.algebra.mul_basis(i, j)
    }

    pub fn mul_vec(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Vector {
        self.algebra.mul_vec(a, b)
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        self.coalgebra.comult_basis(i)
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        self.coalgebra.counit_basis(i)
    }

    pub fn unit_vector(&self) -> &[(usize, Scalar)] {
        self.algebra.unit_vector()
    }

    /// Compatibility of Δ, ε with the algebra structure.
    pub fn check_compatibility(&self) -> CheckReport {
        let f = self.field();
        let h = self.space();
        let id = self.id();
        let mut r = CheckReport::new();
        let mid = LinMap::kron_all([&id, &swap_map(f, h, h), &id]).unwrap();
        let lhs = self.comult().then_after(self.mult());
        let rhs = self
            .mult()
            .kron(self.mult())
            .unwrap()
            .then_after(&mid)
            .then_after(&self.comult().kron(self.comult()).unwrap());
        r.push_eq("comultiplication multiplicative", &lhs, &rhs);
        let du = self.comult().then_after(self.unit());
        let uu = self.unit().kron(self.unit()).unwrap();
        r.push_eq("comultiplication unital", &du, &uu.relabel(Space::ground(), h.tensor(h)));
        let em = self.counit().then_after(self.mult());
        let ee = self.counit().kron(self.counit()).unwrap();
        r.push_eq("counit multiplicative", &em, &ee.relabel(h.tensor(h), Space::ground()));
        let eu = self.counit().then_after(self.unit());
        r.push_eq("counit unital", &eu, &LinMap::identity(f, Space::ground()));
        r
    }

    /// Galois map `β(g⊗h) = g₍₁₎ ⊗ g₍₂₎h`.
    pub fn galois_beta(&self) -> GaloisBeta {
        let id = self.id();
        let beta = id.kron(self.mult()).unwrap().then_after(&self.comult().kron(&id).unwrap());
        let invertible = linalg::rank(&beta) == self.dim() * self.dim();
        let inverse = if invertible { linalg::inverse(&beta).ok() } else { None };
        GaloisBeta { beta, invertible, inverse }
    }

    /// Solves the linear antipode equations `m(S⊗id)Δ = ηε = m(id⊗S)Δ` for `S`.
    pub fn solve_antipode(&self) -> Option<LinMap> {
        let n = self.dim();
        let f = self.field();
        // unknown S[a][b] = coefficient of e_a in S(e_b), index a*n + b
        let nv = n * n;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..n {
            let eps = self.counit_basis(i).clone();
            for side in 0..2 {
                let mut eq = vec![vec![f.zero(); nv + 1]; n];
                for (j, k, c) in self.comult_basis(i) {
                    // side 0: S(e_j) e_k ; side 1: e_j S(e_k)
                    let (s_arg, other) = if side == 0 { (*j, *k) } else { (*k, *j) };
                    for a in 0..n {
                        let prod = if side == 0 { self.mul_basis(a, other) } else { self.mul_basis(other, a) };
                        for (rr, v) in prod {
                            let var = a * n + s_arg;
                            eq[*rr][var] = &eq[*rr][var] + &(c * v);
                        }
                    }
                }
                for (rr, u) in self.unit_vector() {
                    eq[*rr][nv] = &eq[*rr][nv] + &(&eps * u);
                }
                rows.extend(eq);
            }
        }
        let (rref, pivots) = linalg::elim::rref(f, rows, nv + 1);
        if pivots.last() == Some(&nv) {
            return None;
        }
        let mut sol = vec![f.zero(); nv];
        for (row, p) in rref.iter().zip(&pivots) {
            sol[*p] = row[nv].clone();
        }
        let triples = (0..nv).filter(|v| !sol[*v].is_zero()).map(|v| (v / n, v % n, sol[v].clone()));
        Some(LinMap::from_triples(f, self.space().clone(), self.space().clone(), triples))
    }

    pub fn check(&self, strength: Strength) -> CheckReport {
        let mut r = CheckReport::new();
        if strength != Strength::Coalgebra {
            r.extend_prefixed("algebra: ", self.algebra.check());
        }
        if strength != Strength::Algebra {
            r.extend_prefixed("coalgebra: ", self.coalgebra.check());
        }
        if strength >= Strength::Bialgebra {
            r.extend_prefixed("bialgebra: ", self.check_compatibility());
        }
        if strength == Strength::Hopf {
            match self.solve_antipode() {
                Some(_) => r.push("hopf: antipode exists", true, None),
                None => r.push(
                    "hopf: antipode exists",
                    false,
                    Some("antipode equations have no solution".into()),
                ),
            }
        }
        r
    }
}

pub struct GaloisBeta {
    pub beta: LinMap,
    pub invertible: bool,
    pub inverse: Option<LinMap>,
}

/// A Hopf algebra: a bialgebra with a (checked) antipode. `S⁻¹` is cached.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub bialgebra: Bialgebra,
    pub antipode: LinMap,
    antipode_inv: LinMap,
    antipode_cols: Vec<Vector>,
    antipode_inv_cols: Vec<Vector>,
}

impl Deref for HopfData {
    type Target = Bialgebra;
    fn deref(&self) -> &Bialgebra {
        &self.bialgebra
    }
}

impl HopfData {
    /// Validates all Hopf axioms eagerly.
    pub fn new(bialgebra: Bialgebra, antipode: LinMap) -> Result<Self, AlgebraError> {
        let h = HopfData::unchecked(bialgebra, antipode)?;
        let rep = h.check();
        if let Some(e) = rep.failures().next() {
            return Err(AlgebraError::Structural(format!(
                "{} fails{}",
                e.name,
                e.witness.as_ref().map(|w| format!(" {w}")).unwrap_or_default()
            )));
        }
        Ok(h)
    }

    /// Builds without running the axiom checks; the antipode must still be invertible.
    pub fn unchecked(bialgebra: Bialgebra, antipode: LinMap) -> Result<Self, AlgebraError> {
        let n = bialgebra.dim();
        if antipode.domain().dim() != n || antipode.codomain().dim() != n {
            return Err(AlgebraError::Input(format!("antipode must be {n}x{n}")));
        }
        let sp = bialgebra.space().clone();
        let antipode = antipode.relabel(sp.clone(), sp.clone());
        let antipode_inv = linalg::inverse(&antipode)
            .map_err(|_| AlgebraError::Structural("antipode is not invertible".into()))?
            .relabel(sp.clone(), sp);
        let antipode_cols = antipode.columns();
        let antipode_inv_cols = antipode_inv.columns();
        Ok(HopfData { bialgebra, antipode, antipode_inv, antipode_cols, antipode_inv_cols })
    }

    pub fn antipode_inv(&self) -> &LinMap {
        &self.antipode_inv
    }

    pub fn antipode_basis(&self, i: usize) -> &[(usize, Scalar)] {
        &self.antipode_cols[i]
    }

    pub fn antipode_inv_basis(&self, i: usize) -> &[(usize, Scalar)] {
        &self.antipode_inv_cols[i]
    }

    pub fn antipode_vec(&self, a: &[(usize, Scalar)]) -> Vector {
        apply_basis_map(self.field(), self.dim(), a, |i| self.antipode_basis(i))
    }

    /// `h ↦ h₊ ⊗ h₋ = h₍₁₎ ⊗ S(h₍₂₎)`.
    pub fn translation_map(&self) -> LinMap {
        self.id().kron(&self.antipode).unwrap().then_after(self.comult())
    }

    /// `h₊ ⊗ h₋` for a basis element, as `(p, q, c)` triples.
    pub fn translation_basis(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (j, k, c) in self.comult_basis(i) {
            for (q, s) in self.antipode_basis(*k) {
                out.push((*j, *q, c * s));
            }
        }
        out
    }

    pub fn check(&self) -> CheckReport {
        let mut r = self.bialgebra.check(Strength::Bialgebra);
        let f = self.field();
        let id = self.id();
        let eta_eps = self.unit().then_after(self.counit());
        let left = self.mult().then_after(&self.antipode.kron(&id).unwrap()).then_after(self.comult());
        let right = self.mult().then_after(&id.kron(&self.antipode).unwrap()).then_after(self.comult());
        r.push_eq("hopf: m(S⊗id)Δ = ηε", &left, &eta_eps);
        r.push_eq("hopf: m(id⊗S)Δ = ηε", &right, &eta_eps);
        // S(h) = ε(h₊)h₋
        let tr = self.translation_map();
        let s_again = self.counit().kron(&id).unwrap().then_after(&tr).relabel(self.space().clone(), self.space().clone());
        r.push_eq("hopf: S(h) = ε(h₊)h₋", &s_again, &self.antipode);
        // h₊h₋ = ε(h)1
        r.push_eq("hopf: h₊h₋ = ε(h)1", &self.mult().then_after(&tr), &eta_eps);
        // β(h₊ ⊗ h₋) = h ⊗ 1
        let beta = self.galois_beta().beta;
        let ins = id.kron(self.unit()).unwrap().relabel(self.space().clone(), self.space().tensor(self.space()));
        r.push_eq("hopf: β∘translation = (−⊗1)", &beta.then_after(&tr), &ins);
        let _ = f;
        r
    }
}

pub(crate) fn apply_basis_map<'a, F>(field: Field, dim: usize, a: &[(usize, Scalar)], col: F) -> Vector
where
    F: Fn(usize) -> &'a [(usize, Scalar)],
{
    let mut acc = vec![field.zero(); dim];
    for (i, x) in a {
        for (k, c) in col(*i) {
            acc[*k] = &acc[*k] + &(x * c);
        }
    }
    sparsify(acc)
}

/// Any of the structures a preset or input file may declare.
#[derive(Clone, Debug)]
pub enum Structure {
    Algebra(AlgebraData),
    Bialgebra(Bialgebra),
    Hopf(HopfData),
}

impl Structure {
    pub fn strength(&self) -> Strength {
        match self {
            Structure::Algebra(_) => Strength::Algebra,
            Structure::Bialgebra(_) => Strength::Bialgebra,
            Structure::Hopf(_) => Strength::Hopf,
        }
    }

    pub fn algebra(&self) -> &AlgebraData {
        match self {
            Structure::Algebra(a) => a,
            Structure::Bialgebra(b) => &b.algebra,
            Structure::Hopf(h) => &h.algebra,
        }
    }

    pub fn bialgebra(&self) -> Option<&Bialgebra> {
        match self {
            Structure::Algebra(_) => None,
            Structure::Bialgebra(b) => Some(b),
            Structure::Hopf(h) => Some(&h.bialgebra),
        }
    }

    pub fn hopf(&self) -> Result<&HopfData, AlgebraError> {
        match self {
            Structure::Hopf(h) => Ok(h),
            _ => Err(AlgebraError::Structural("a Hopf algebra is required".into())),
        }
    }

    pub fn into_hopf(self) -> Result<HopfData, AlgebraError> {
        match self {
            Structure::Hopf(h) => Ok(h),
            _ => Err(AlgebraError::Structural("a Hopf algebra is required".into())),
        }
    }
}

/// Verifies the axioms of the requested strength.
pub fn check_structure(s: &Structure, strength: Strength) -> CheckReport {
    match (s, strength) {
        (Structure::Hopf(h), Strength::Hopf) => h.check(),
        (Structure::Hopf(h), st) => h.bialgebra.check(st),
        (Structure::Bialgebra(b), st) => b.check(st),
        (Structure::Algebra(a), Strength::Algebra) => {
            let mut r = CheckReport::new();
            r.extend_prefixed("algebra: ", a.check());
            r
        }
        (Structure::Algebra(a), _) => {
            let mut r = CheckReport::new();
            r.extend_prefixed("algebra: ", a.check());
            r.push("coalgebra: structure present", false, Some("no comultiplication given".into()));
            r
        }
    }
}

pub fn translation_map(h: &HopfData) -> LinMap {
    h.translation_map()
}

pub fn galois_beta(b: &Bialgebra) -> GaloisBeta {
    b.galois_beta()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn z2_passes_everything() {
        let s = make_preset(&"group_algebra:Z2".parse().unwrap(), q()).unwrap();
        let h = s.hopf().unwrap();
        assert!(h.check().all_passed());
        assert!(h.antipode.is_identity());
    }

    #[test]
    fn idempotent_monoid_is_not_hopf() {
        let s = make_preset(&PresetId::IdempotentMonoid, q()).unwrap();
        let b = s.bialgebra().unwrap();
        assert!(b.check(Strength::Bialgebra).all_passed());
        let r = b.check(Strength::Hopf);
        assert!(!r.all_passed());
        assert!(!r.get("hopf: antipode exists").unwrap().passed);
        let beta = b.galois_beta();
        assert!(!beta.invertible);
        // β(e⊗1) = e⊗e = β(e⊗e)
        let m = &beta.beta;
        assert_eq!(m.column(2), m.column(3));
        assert_eq!(linalg::rank(m), 3);
    }

    #[test]
    fn zero_comultiplication_fails_counit() {
        let sp = Space::new(["1"]);
        let counit = LinMap::from_ints(q(), sp.clone(), Space::ground(), &[vec![1]]);
        let c = CoalgebraData::new(sp.clone(), LinMap::zero(q(), sp.clone(), sp.tensor(&sp)), counit).unwrap();
        let r = c.check();
        assert!(!r.get("left counit").unwrap().passed);
        assert!(r.get("left counit").unwrap().witness.as_deref().unwrap().contains('1'));
    }

    #[test]
    fn translation_map_on_group_likes() {
        let s = make_preset(&"group_algebra:Z3".parse().unwrap(), q()).unwrap();
        let h = s.hopf().unwrap();
        // g -> g ⊗ g^2
        assert_eq!(h.translation_basis(1), vec![(1, 2, q().one())]);
        assert_eq!(h.translation_basis(0), vec![(0, 0, q().one())]);
    }

    #[test]
    fn translation_map_on_sweedler_x() {
        let s = make_preset(&PresetId::SweedlerH4, q()).unwrap();
        let h = s.hopf().unwrap();
        // x -> x⊗1 − g⊗gx
        let mut t = h.translation_basis(2);
        t.sort_by_key(|(a, b, _)| (*a, *b));
        assert_eq!(t, vec![(1, 3, q().from_int(-1)), (2, 0, q().one())]);
    }

    #[test]
    fn beta_on_z2() {
        let s = make_preset(&"group_algebra:Z2".parse().unwrap(), q()).unwrap();
        let b = s.bialgebra().unwrap().galois_beta();
        assert!(b.invertible);
        // β(g⊗g) = g⊗1 : column 3 -> row 2
        assert_eq!(b.beta.column(3), vec![(2, q().one())]);
        // β(1⊗h) = 1⊗h
        assert_eq!(b.beta.column(1), vec![(1, q().one())]);
    }

    #[test]
    fn solved_antipode_matches_presets() {
        for name in ["group_algebra:Z3", "sweedler_h4", "group_algebra:S3", "dual_group_algebra:Z3"] {
            let s = make_preset(&name.parse().unwrap(), q()).unwrap();
            let h = s.hopf().unwrap();
            assert_eq!(h.solve_antipode().unwrap(), h.antipode, "{name}");
        }
    }
}
