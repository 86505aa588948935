//! Laws arising from lifts, computed as mates, and the Galois maps comparing two lifts.

use super::{codiagonal_lift, Adjunction, Lift, Module, SlotLaw};
use crate::algebra::{AlgebraError, Bialgebra};
use crate::linalg::{self, LinMap, LinalgError, Space};
use crate::report::CheckReport;

/// The mixed law `θ : BC → CB` and the comonad law `χ : TS → ST` obtained from a lift, with
/// the adjunction and lift they came from.
#[derive(Clone, Debug)]
pub struct Arisen {
    pub adj: Adjunction,
    pub lift: Lift,
    pub theta: SlotLaw,
    pub chi: SlotLaw,
}

/// `Λ_X = ε_{SFX} ∘ F(Ω_{FX} ∘ Cη_X) : BCX → USFX`.
fn lambda(adj: &Adjunction, lift: &Lift, x: &Space) -> Result<LinMap, LinalgError> {
    let fx = adj.free(x);
    let sfx = lift.apply(adj, &fx)?;
    let g = lift.omega_at(&fx.space).compose(&lift.ext.c_map(&adj.eta(x)))?;
    sfx.action.compose(&adj.b_map(&g))
}

/// `θ_X = Ω⁻¹_{FX} ∘ Λ_X`, computed from the adjunction rather than from a kernel.
pub fn theta_mate(adj: &Adjunction, lift: &Lift, x: &Space) -> Result<LinMap, LinalgError> {
    lift.omega_inv_at(&adj.b_space(x)).compose(&lambda(adj, lift, x)?)
}

/// `χ_Y = Λ_{UY} ∘ FΩ⁻¹_Y`; it depends on `Y` only through `UY`.
pub fn chi_mate(adj: &Adjunction, lift: &Lift, y: &Space) -> Result<LinMap, LinalgError> {
    lambda(adj, lift, y)?.compose(&adj.b_map(&lift.omega_inv_at(y)))
}

pub fn arise(adj: &Adjunction, lift: &Lift) -> Result<Arisen, AlgebraError> {
    let (w, e) = (&lift.ext.carrier, adj.e());
    let k = Space::ground();
    let (s, c) = (adj.side, lift.ext.side);
    let theta = SlotLaw::from_component_at_ground(&theta_mate(adj, lift, &k)?, s, c, w, e)?;
    let chi = SlotLaw::from_component_at_ground(&chi_mate(adj, lift, &k)?, s, c, w, e)?;
    Ok(Arisen { adj: adj.clone(), lift: lift.clone(), theta, chi })
}

impl Arisen {
    /// Naturality (mate agrees with the kernel on every probe), the two uniqueness diagrams,
    /// and the lax-morphism axioms for `θ` and `χ`.
    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let (adj, lift) = (&self.adj, &self.lift);
        for x in adj.probe_spaces() {
            let d = x.dim();
            r.push_eq_result(format!("theta natural (probe dim {d})"), theta_mate(adj, lift, &x), Ok(self.theta.at(&x)));
            r.push_eq_result(format!("chi natural (probe dim {d})"), chi_mate(adj, lift, &x), Ok(self.chi.at(&x)));
            let th = self.theta.at(&x);
            let cx = lift.ext.c_space(&x);
            r.push_eq_result(
                format!("theta unit (probe dim {d})"),
                th.compose(&adj.eta(&cx)),
                Ok(lift.ext.c_map(&adj.eta(&x))),
            );
            let bx = adj.b_space(&x);
            let rhs = lift
                .ext
                .c_map(&adj.mu(&x))
                .compose(&self.theta.at(&bx))
                .and_then(|m| m.compose(&adj.b_map(&th)));
            r.push_eq_result(format!("theta multiplication (probe dim {d})"), th.compose(&adj.mu(&cx)), rhs);
        }
        for y in adj.probe_modules() {
            let d = y.space.dim();
            if let Err(e) = self.module_checks(&y, &mut r) {
                r.push(format!("uniqueness (probe dim {d})"), false, Some(e.to_string()));
            }
        }
        r
    }

    fn module_checks(&self, y: &Module, r: &mut CheckReport) -> Result<(), LinalgError> {
        let (adj, lift) = (&self.adj, &self.lift);
        let d = y.space.dim();
        let uy = &y.space;
        let sy = lift.apply(adj, y)?;
        // CUε ∘ θU = Ω⁻¹ ∘ UεS ∘ UFΩ
        let lhs = lift.ext.c_map(&y.action).compose(&self.theta.at(uy))?;
        let rhs = lift.omega_inv_at(uy).compose(&sy.action)?.compose(&adj.b_map(&lift.omega_at(uy)))?;
        r.push_eq(format!("uniqueness: epsilon diagram (probe dim {d})"), &lhs, &rhs);
        // ΩFU ∘ CηU ∘ Ω⁻¹ = Uχ ∘ ηUS
        let fuy = adj.b_space(uy);
        let lhs = lift.omega_at(&fuy).compose(&lift.ext.c_map(&adj.eta(uy)))?.compose(&lift.omega_inv_at(uy))?;
        let rhs = self.chi.at(uy).compose(&adj.eta(&sy.space))?;
        r.push_eq(format!("uniqueness: eta diagram (probe dim {d})"), &lhs, &rhs);
        // χ is a morphism of lax endomorphisms of the comonad T
        let chi = self.chi.at(uy);
        let lhs = lift.ext.c_map(&y.action).compose(&chi)?;
        r.push_eq(format!("chi counit of T (probe dim {d})"), &lhs, &sy.action);
        let dt = |z: &Space| adj.b_map(&adj.eta(z));
        let lhs = lift.ext.c_map(&dt(uy)).compose(&chi)?;
        let rhs = self.chi.at(&fuy).compose(&adj.b_map(&chi))?.compose(&dt(&sy.space))?;
        r.push_eq(format!("chi comultiplication of T (probe dim {d})"), &lhs, &rhs);
        Ok(())
    }
}

/// `Γ^{S,V}(f) = ε_{VY} ∘ F(Φ_Y ∘ Ω⁻¹_Y) ∘ FUf ∘ Fη_X` for a module map `f : FX → SY`.
pub fn galois_gamma(
    adj: &Adjunction,
    s: &Lift,
    v: &Lift,
    f: &LinMap,
    x: &Space,
    y: &Module,
) -> Result<LinMap, LinalgError> {
    if s.ext.carrier != v.ext.carrier || s.ext.side != v.ext.side {
        return Err(LinalgError::Dimension("lifts of different functors".into()));
    }
    let vy = v.apply(adj, y)?;
    let inner = v.omega_at(&y.space).compose(&s.omega_inv_at(&y.space))?.compose(f)?.compose(&adj.eta(x))?;
    vy.action.compose(&adj.b_map(&inner))
}

/// `Γ^{V,S}`, the inverse of [`galois_gamma`].
pub fn galois_gamma_inverse(
    adj: &Adjunction,
    s: &Lift,
    v: &Lift,
    g: &LinMap,
    x: &Space,
    y: &Module,
) -> Result<LinMap, LinalgError> {
    galois_gamma(adj, v, s, g, x, y)
}

/// `Γ^{T,V}_Y = ε_{VY} ∘ FΦ_Y ∘ Fη_{UY} : TY → VY`, for a lift `V` of the monad's own functor.
pub fn gamma_t_v(adj: &Adjunction, v: &Lift, y: &Module) -> Result<LinMap, LinalgError> {
    let uy = &y.space;
    if v.ext.c_space(uy) != adj.b_space(uy) {
        return Err(LinalgError::Dimension("the lift is not a lift of the monad".into()));
    }
    let vy = v.apply(adj, y)?;
    vy.action.compose(&adj.b_map(&v.omega_at(uy).compose(&adj.eta(uy))?))
}

#[derive(Clone, Debug)]
pub struct VGalois {
    pub invertible: bool,
    pub report: CheckReport,
}

/// For left modules over a bialgebra with the codiagonal lift `V`: whether `Γ^{T,V}` is
/// invertible, and whether `Bμ ∘ θB ∘ BηB` recovers `β(g⊗h) = g₍₁₎⊗g₍₂₎h`.
pub fn v_galois_check(b: &Bialgebra) -> Result<VGalois, AlgebraError> {
    let adj = Adjunction::of_bialgebra(b, super::Side::Left);
    let v = codiagonal_lift(b);
    let ar = arise(&adj, &v)?;
    let mut r = CheckReport::new();
    let mut invertible = true;
    for y in adj.probe_modules() {
        let g = gamma_t_v(&adj, &v, &y)?;
        let n = g.domain().dim();
        let ok = linalg::rank(&g) == n && g.codomain().dim() == n;
        invertible &= ok;
        r.push(format!("Gamma^(T,V) invertible (probe dim {})", y.space.dim()), ok, None);
    }
    let k = Space::ground();
    let bk = adj.b_space(&k);
    let bbk = adj.b_space(&bk);
    // Bμ ∘ θB ∘ BηB at X = k
    let composite = adj
        .b_map(&adj.mu(&k))
        .compose(&ar.theta.at(&bk))?
        .compose(&adj.b_map(&adj.eta(&bk)))?;
    let beta = b.galois_beta();
    r.push_eq("composite equals beta", &composite, &beta.beta.clone().relabel(bbk.clone(), bbk));
    r.push("Gamma invertible iff beta invertible", invertible == beta.invertible, None);
    Ok(VGalois { invertible, report: r })
}
