//! Monads of the form `X ↦ X⊗E` or `X ↦ E⊗X`, comonads `X ↦ W⊗X` or `X ↦ X⊗W`, their lifts to
//! module categories, and the distributive laws and 1-cells built from them.
//!
//! Everything is represented on underlying vector spaces: a natural transformation between
//! such functors is determined by a kernel on the carrier slots, and checks are run on a few
//! probe objects.

pub mod arise;
pub mod checks;
pub mod onecell;
pub mod yd;

pub use arise::{arise, chi_mate, theta_mate, VGalois, galois_gamma, galois_gamma_inverse, gamma_t_v, v_galois_check, Arisen};
pub use checks::{flip_one_sign, check_distlaw, check_lift, LawKind};
pub use onecell::{MixedLaw, antipode_one_cell, inverse_antipode_one_cell, check_yang_baxter, OneCell};
pub use yd::{canonical_lift, codiagonal_lift, trivial_law, yd_braiding, yd_lift, banal_lift, yd_context, codiagonal_context};

use crate::algebra::{AlgebraData, AlgebraError, Bialgebra};
use crate::linalg::{Field, LinMap, LinalgError, Space};
use crate::report::CheckReport;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A module over the monad of an [`Adjunction`]: a space with its action map `BY → Y`.
#[derive(Clone, Debug)]
pub struct Module {
    pub space: Space,
    pub action: LinMap,
}

/// The free/forgetful adjunction for left or right modules over an algebra `E`, so that
/// `B = UF` is `X ↦ E⊗X` or `X ↦ X⊗E`.
#[derive(Clone, Debug)]
pub struct Adjunction {
    pub algebra: AlgebraData,
    pub side: Side,
    /// Augmentation `E → k`, used for the trivial probe module.
    pub augmentation: Option<LinMap>,
}

impl Adjunction {
    pub fn new(algebra: AlgebraData, side: Side) -> Adjunction {
        Adjunction { algebra, side, augmentation: None }
    }

    pub fn of_bialgebra(b: &Bialgebra, side: Side) -> Adjunction {
        Adjunction { algebra: b.algebra.clone(), side, augmentation: Some(b.counit().clone()) }
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn e(&self) -> &Space {
        &self.algebra.space
    }

    pub fn b_space(&self, x: &Space) -> Space {
        match self.side {
            Side::Right => x.tensor(self.e()),
            Side::Left => self.e().tensor(x),
        }
    }

    pub fn b_map(&self, f: &LinMap) -> LinMap {
        let id = self.algebra.id();
        match self.side {
            Side::Right => f.kron(&id),
            Side::Left => id.kron(f),
        }
        .unwrap()
    }

    /// `η_X : X → BX`, inserting the unit.
    pub fn eta(&self, x: &Space) -> LinMap {
        let idx = LinMap::identity(self.field(), x.clone());
        let u = &self.algebra.unit;
        match self.side {
            Side::Right => idx.kron(u),
            Side::Left => u.kron(&idx),
        }
        .unwrap()
        .relabel(x.clone(), self.b_space(x))
    }

    /// `μ_X : BBX → BX`.
    pub fn mu(&self, x: &Space) -> LinMap {
        let idx = LinMap::identity(self.field(), x.clone());
        let m = &self.algebra.mult;
        let bb = self.b_space(&self.b_space(x));
        match self.side {
            // (x⊗e)⊗e' ↦ x⊗ee'
            Side::Right => idx.kron(m),
            // e⊗(e'⊗x) ↦ ee'⊗x
            Side::Left => m.kron(&idx),
        }
        .unwrap()
        .relabel(bb, self.b_space(x))
    }

    pub fn free(&self, x: &Space) -> Module {
        Module { space: self.b_space(x), action: self.mu(x) }
    }

    pub fn trivial(&self) -> Option<Module> {
        self.augmentation.as_ref().map(|eps| Module {
            space: Space::ground(),
            action: eps.clone().relabel(self.b_space(&Space::ground()), Space::ground()),
        })
    }

    pub fn check_module(&self, y: &Module) -> CheckReport {
        let mut r = CheckReport::new();
        let x = &y.space;
        let assoc_l = y.action.then_after(&self.b_map(&y.action));
        let assoc_r = y.action.then_after(&self.mu(x));
        r.push_eq("module: associative", &assoc_l, &assoc_r);
        r.push_eq("module: unital", &y.action.then_after(&self.eta(x)), &LinMap::identity(self.field(), x.clone()));
        r
    }

    /// Probe spaces of dimensions `1`, `|E|`, `|E|²`.
    pub fn probe_spaces(&self) -> Vec<Space> {
        let n = self.e().dim();
        vec![Space::ground(), Space::numbered("x", n), Space::numbered("x", n * n)]
    }

    /// Probe modules: the trivial module when an augmentation is known, `F(k)` and `F(E)`.
    pub fn probe_modules(&self) -> Vec<Module> {
        let mut out: Vec<Module> = self.trivial().into_iter().collect();
        out.push(self.free(&Space::ground()));
        out.push(self.free(self.e()));
        out
    }
}

/// A comonad-like functor `X ↦ W⊗X` or `X ↦ X⊗W` on vector spaces. The comonad structure is
/// optional; without it only the monad-side checks apply.
#[derive(Clone, Debug)]
pub struct Extension {
    pub carrier: Space,
    pub side: Side,
    /// `(Δ_W, ε_W)`.
    pub comonad: Option<(LinMap, LinMap)>,
}

impl Extension {
    pub fn field(&self) -> Option<Field> {
        self.comonad.as_ref().map(|c| c.0.field())
    }

    pub fn c_space(&self, x: &Space) -> Space {
        match self.side {
            Side::Left => self.carrier.tensor(x),
            Side::Right => x.tensor(&self.carrier),
        }
    }

    pub fn c_map(&self, f: &LinMap) -> LinMap {
        let id = LinMap::identity(f.field(), self.carrier.clone());
        match self.side {
            Side::Left => id.kron(f),
            Side::Right => f.kron(&id),
        }
        .unwrap()
    }

    /// Applies a kernel `W → W'` on the carrier slot, for `W' ⊗ X` etc.
    pub fn on_carrier(&self, k: &LinMap, x: &Space) -> LinMap {
        let idx = LinMap::identity(k.field(), x.clone());
        match self.side {
            Side::Left => k.kron(&idx),
            Side::Right => idx.kron(k),
        }
        .unwrap()
    }

    pub fn c_eps(&self, x: &Space) -> Option<LinMap> {
        let (_, e) = self.comonad.as_ref()?;
        Some(self.on_carrier(e, x).relabel(self.c_space(x), x.clone()))
    }

    pub fn c_delta(&self, x: &Space) -> Option<LinMap> {
        let (d, _) = self.comonad.as_ref()?;
        Some(self.on_carrier(d, x).relabel(self.c_space(x), self.c_space(&self.c_space(x))))
    }
}

/// A lift of an [`Extension`] to modules: `S` with `US = CU` up to `Ω`. The action of `SY` is
/// `κ` on the `(W, E)` slots followed by the action of `Y`.
#[derive(Clone, Debug)]
pub struct Lift {
    pub name: String,
    pub ext: Extension,
    /// `κ : W⊗E → W⊗E`.
    pub kappa: LinMap,
    /// `ω : W → W`, giving `Ω = CU → US`.
    pub omega: LinMap,
    pub omega_inv: LinMap,
}

/// Block order of the tensor factors of `BCX` and `CBX`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Blk {
    W,
    E,
    X,
}

pub(crate) fn bc_layout(s: Side, c: Side) -> [Blk; 3] {
    use Blk::*;
    match (s, c) {
        (Side::Right, Side::Left) => [W, X, E],
        (Side::Right, Side::Right) => [X, W, E],
        (Side::Left, Side::Left) => [E, W, X],
        (Side::Left, Side::Right) => [E, X, W],
    }
}

pub(crate) fn cb_layout(s: Side, c: Side) -> [Blk; 3] {
    use Blk::*;
    match (s, c) {
        (Side::Right, Side::Left) => [W, X, E],
        (Side::Left, Side::Left) => [W, E, X],
        (Side::Right, Side::Right) => [X, E, W],
        (Side::Left, Side::Right) => [E, X, W],
    }
}

fn pos(layout: &[Blk; 3], b: Blk) -> usize {
    layout.iter().position(|&x| x == b).unwrap()
}

impl Lift {
    pub fn identity_omega(name: impl Into<String>, ext: Extension, kappa: LinMap) -> Lift {
        let id = LinMap::identity(kappa.field(), ext.carrier.clone());
        Lift { name: name.into(), ext, kappa, omega: id.clone(), omega_inv: id }
    }

    pub fn omega_at(&self, x: &Space) -> LinMap {
        self.ext.on_carrier(&self.omega, x).relabel(self.ext.c_space(x), self.ext.c_space(x))
    }

    pub fn omega_inv_at(&self, x: &Space) -> LinMap {
        self.ext.on_carrier(&self.omega_inv, x).relabel(self.ext.c_space(x), self.ext.c_space(x))
    }

    /// The module `SY`.
    pub fn apply(&self, adj: &Adjunction, y: &Module) -> Result<Module, LinalgError> {
        let (w, e) = (&self.ext.carrier, adj.e());
        let yy = &y.space;
        let (s, c) = (adj.side, self.ext.side);
        // layout of B(CY) is the BC layout with X = Y; the action slot pairs Y with E
        let lay = bc_layout(s, c);
        let blocks: Vec<&Space> = lay
            .iter()
            .map(|b| match b {
                Blk::W => w,
                Blk::E => e,
                Blk::X => yy,
            })
            .collect();
        let iw = pos(&lay, Blk::W);
        let ie = pos(&lay, Blk::E);
        let iy = pos(&lay, Blk::X);
        let k = LinMap::embed_blocks(&self.kappa, &blocks, &[iw, ie], &blocks, &[iw, ie])?;
        let act_sel: Vec<usize> = match s {
            Side::Right => vec![iy, ie],
            Side::Left => vec![ie, iy],
        };
        let out_blocks: Vec<&Space> = match c {
            Side::Left => vec![w, yy],
            Side::Right => vec![yy, w],
        };
        let out_y = match c {
            Side::Left => 1,
            Side::Right => 0,
        };
        let a = LinMap::embed_blocks(&y.action, &blocks, &act_sel, &out_blocks, &[out_y])?;
        let action = a.compose(&k)?.relabel(adj.b_space(&self.ext.c_space(yy)), self.ext.c_space(yy));
        Ok(Module { space: self.ext.c_space(yy), action })
    }

    /// `U ε^S_Y = ε^C_{UY} ∘ Ω⁻¹_Y`.
    pub fn s_eps(&self, y: &Space) -> Option<LinMap> {
        Some(self.ext.c_eps(y)?.then_after(&self.omega_inv_at(y)))
    }

    /// `U Δ^S_Y = Ω_{SY} ∘ C Ω_Y ∘ Δ^C_{UY} ∘ Ω⁻¹_Y`.
    pub fn s_delta(&self, y: &Space) -> Option<LinMap> {
        let d = self.ext.c_delta(y)?;
        let sy = self.ext.c_space(y);
        Some(
            self.omega_at(&sy)
                .then_after(&self.ext.c_map(&self.omega_at(y)))
                .then_after(&d)
                .then_after(&self.omega_inv_at(y)),
        )
    }
}

/// A natural transformation `BC → CB` (equivalently `TS → ST` on modules) given by a kernel
/// `W⊗E → W⊗E`.
#[derive(Clone, Debug)]
pub struct SlotLaw {
    pub kernel: LinMap,
    pub e_side: Side,
    pub c_side: Side,
    pub w: Space,
    pub e: Space,
}

impl SlotLaw {
    pub fn new(kernel: LinMap, e_side: Side, c_side: Side, w: Space, e: Space) -> SlotLaw {
        let we = w.tensor(&e);
        SlotLaw { kernel: kernel.relabel(we.clone(), we), e_side, c_side, w, e }
    }

    fn spaces<'a>(&'a self, lay: &[Blk; 3], x: &'a Space) -> Vec<&'a Space> {
        lay.iter()
            .map(|b| match b {
                Blk::W => &self.w,
                Blk::E => &self.e,
                Blk::X => x,
            })
            .collect()
    }

    pub fn at(&self, x: &Space) -> LinMap {
        let bc = bc_layout(self.e_side, self.c_side);
        let cb = cb_layout(self.e_side, self.c_side);
        LinMap::embed_blocks(
            &self.kernel,
            &self.spaces(&bc, x),
            &[pos(&bc, Blk::W), pos(&bc, Blk::E)],
            &self.spaces(&cb, x),
            &[pos(&cb, Blk::W), pos(&cb, Blk::E)],
        )
        .expect("law kernel fits its layout")
    }

    /// Recovers the kernel from the component at the ground field.
    pub fn from_component_at_ground(
        comp: &LinMap,
        e_side: Side,
        c_side: Side,
        w: &Space,
        e: &Space,
    ) -> Result<SlotLaw, LinalgError> {
        let bc = bc_layout(e_side, c_side);
        let cb = cb_layout(e_side, c_side);
        let order = |lay: &[Blk; 3]| -> Vec<usize> {
            lay.iter()
                .filter_map(|b| match b {
                    Blk::W => Some(0),
                    Blk::E => Some(1),
                    Blk::X => None,
                })
                .collect()
        };
        let k = LinMap::embed_blocks(comp, &[w, e], &order(&bc), &[w, e], &order(&cb))?;
        Ok(SlotLaw::new(k, e_side, c_side, w.clone(), e.clone()))
    }
}

/// A monad, a lifted comonad and a law between them: the data needed to talk about right
/// χ-coalgebras.
#[derive(Clone, Debug)]
pub struct LawContext {
    pub adj: Adjunction,
    pub lift: Lift,
    pub law: SlotLaw,
}

impl LawContext {
    pub fn field(&self) -> Field {
        self.adj.field()
    }

    pub fn t_space(&self, y: &Space) -> Space {
        self.adj.b_space(y)
    }

    pub fn s_space(&self, y: &Space) -> Space {
        self.lift.ext.c_space(y)
    }

    pub fn chi(&self, y: &Space) -> LinMap {
        self.law.at(y)
    }

    /// `Δ^T_Y = F η_{UY}`.
    pub fn t_delta(&self, y: &Space) -> LinMap {
        self.adj.b_map(&self.adj.eta(y))
    }

    pub fn s_module(&self, y: &Module) -> Result<Module, AlgebraError> {
        Ok(self.lift.apply(&self.adj, y)?)
    }

    pub fn t_module(&self, y: &Module) -> Module {
        self.adj.free(&y.space)
    }
}

/// A right χ-coalgebra `ρ : TM → SM`.
#[derive(Clone, Debug)]
pub struct ChiCoalgebra {
    pub module: Module,
    pub rho: LinMap,
}

impl ChiCoalgebra {
    /// Module map, counit and comultiplication diagrams.
    pub fn check(&self, ctx: &LawContext) -> CheckReport {
        let mut r = CheckReport::new();
        let m = &self.module.space;
        r.extend_prefixed("", ctx.adj.check_module(&self.module));
        let sm = match ctx.s_module(&self.module) {
            Ok(s) => s,
            Err(e) => {
                r.push("coefficient: S-module", false, Some(e.to_string()));
                return r;
            }
        };
        let tm = ctx.t_module(&self.module);
        // ρ ∘ act_{TM} = act_{SM} ∘ Bρ
        r.push_eq_result(
            "rho is a module map",
            self.rho.compose(&tm.action),
            sm.action.compose(&ctx.adj.b_map(&self.rho)),
        );
        if let (Some(eps), Some(delta)) = (ctx.lift.s_eps(m), ctx.lift.s_delta(m)) {
            r.push_eq_result("rho counit", eps.compose(&self.rho), Ok(self.module.action.clone()));
            let lhs = delta.compose(&self.rho);
            let rhs = ctx
                .lift
                .ext
                .c_map(&self.rho)
                .compose(&ctx.chi(m))
                .and_then(|x| x.compose(&ctx.adj.b_map(&self.rho)))
                .and_then(|x| x.compose(&ctx.t_delta(m)));
            r.push_eq_result("rho coassociative", lhs, rhs);
        }
        r
    }
}
