//! Concrete lifts and laws built from a bialgebra or Hopf algebra.

use super::{arise, Adjunction, Extension, LawContext, Lift, Side, SlotLaw};
use crate::algebra::{AlgebraData, AlgebraError, Bialgebra, HopfData};
use crate::linalg::{LinMap, Scalar, Space};

fn two_slot<F>(w: &Space, e: &Space, field: crate::linalg::Field, mut f: F) -> LinMap
where
    F: FnMut(usize, usize) -> Vec<(usize, usize, Scalar)>,
{
    let ne = e.dim();
    let we = w.tensor(e);
    LinMap::from_columns(field, we.clone(), we, |j| {
        f(j / ne, j % ne).into_iter().map(|(a, b, c)| (a * ne + b, c)).collect()
    })
}

/// `c⊗b ↦ S(b₍₂₎)c ⊗ b₍₁₎`, the braiding of Yetter–Drinfeld type between `−⊗H` on right
/// modules and `H⊗−`.
pub fn yd_kernel(h: &HopfData) -> LinMap {
    let sp = h.space();
    two_slot(sp, sp, h.field(), |c, b| {
        let mut out = Vec::new();
        for (b1, b2, x) in h.comult_basis(b) {
            for (s, y) in h.antipode_basis(*b2) {
                for (r, z) in h.mul_basis(*s, c) {
                    out.push((*r, *b1, &(x * y) * z));
                }
            }
        }
        out
    })
}

pub fn yd_braiding(h: &HopfData) -> SlotLaw {
    SlotLaw::new(yd_kernel(h), Side::Right, Side::Left, h.space().clone(), h.space().clone())
}

fn h_comonad(b: &Bialgebra) -> Option<(LinMap, LinMap)> {
    Some((b.comult().clone(), b.counit().clone()))
}

/// `H⊗−` lifted to right `H`-modules by `(c⊗y)·b = S(b₍₂₎)c ⊗ y·b₍₁₎`.
pub fn yd_lift(h: &HopfData) -> Lift {
    let ext = Extension { carrier: h.space().clone(), side: Side::Left, comonad: h_comonad(h) };
    Lift::identity_omega("yetter-drinfeld", ext, yd_kernel(h))
}

/// `w⊗g ↦ g₍₁₎w ⊗ g₍₂₎`: `H⊗−` lifted to left modules with the diagonal action.
pub fn codiagonal_lift(b: &Bialgebra) -> Lift {
    let sp = b.space();
    let k = two_slot(sp, sp, b.field(), |w, g| {
        let mut out = Vec::new();
        for (g1, g2, x) in b.comult_basis(g) {
            for (r, y) in b.mul_basis(*g1, w) {
                out.push((*r, *g2, x * y));
            }
        }
        out
    });
    let ext = Extension { carrier: sp.clone(), side: Side::Left, comonad: h_comonad(b) };
    Lift::identity_omega("codiagonal", ext, k)
}

/// `w⊗g ↦ gw ⊗ 1`: the free left module functor itself, viewed as a lift of `H⊗−`.
pub fn canonical_lift(b: &Bialgebra) -> Lift {
    let sp = b.space();
    let one = b.unit_vector().to_vec();
    let k = two_slot(sp, sp, b.field(), |w, g| {
        let mut out = Vec::new();
        for (r, x) in b.mul_basis(g, w) {
            for (u, y) in &one {
                out.push((*r, *u, x * y));
            }
        }
        out
    });
    let ext = Extension { carrier: sp.clone(), side: Side::Left, comonad: None };
    Lift::identity_omega("canonical", ext, k)
}

/// `w⊗e ↦ we ⊗ 1` for `−⊗E` on right `E`-modules: the free module functor as a lift of itself.
pub fn banal_lift(e: &AlgebraData) -> Lift {
    let sp = &e.space;
    let one = e.unit_vector().to_vec();
    let k = two_slot(sp, sp, e.field(), |w, g| {
        let mut out = Vec::new();
        for (r, x) in e.mul_basis(w, g) {
            for (u, y) in &one {
                out.push((*r, *u, x * y));
            }
        }
        out
    });
    let ext = Extension { carrier: sp.clone(), side: Side::Right, comonad: None };
    Lift::identity_omega("banal", ext, k)
}

/// The law arising from the banal lift.
pub fn trivial_law(e: &AlgebraData) -> Result<SlotLaw, AlgebraError> {
    let adj = Adjunction::new(e.clone(), Side::Right);
    Ok(arise(&adj, &banal_lift(e))?.chi)
}

/// Right `H`-modules, the Yetter–Drinfeld lift of `H⊗−`, and its braiding.
pub fn yd_context(h: &HopfData) -> LawContext {
    LawContext { adj: Adjunction::of_bialgebra(h, Side::Right), lift: yd_lift(h), law: yd_braiding(h) }
}

/// Left `H`-modules, the codiagonal lift of `H⊗−`, and the law arising from it.
pub fn codiagonal_context(b: &Bialgebra) -> Result<LawContext, AlgebraError> {
    let adj = Adjunction::of_bialgebra(b, Side::Left);
    let lift = codiagonal_lift(b);
    let law = arise(&adj, &lift)?.chi;
    Ok(LawContext { adj, lift, law })
}
