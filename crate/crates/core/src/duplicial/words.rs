//! Words in `T` and `S` applied to a right coefficient `M`, and maps between them after applying
//! the outer functor `N = −⊗_H N`.
//!
//! A word is stored outermost letter first, so `[T, S]` is `TSM`. Its underlying space is built
//! inside out: `T` appends an `H` factor on the right, `S` prepends one on the left. After `N`,
//! a word `X·W` is presented on `U(WM)⊗N`:
//!
//! - `N(TY) ≅ Y⊗N` by `y⊗h⊗n ↦ y⊗hn`;
//! - `N(SY) ≅ Y⊗N` by `h⊗y⊗n ↦ y·h₍₂₎ ⊗ S⁻¹(h₍₁₎)n`.
//!
//! Both have the section that inserts `1`, and `N(f) = q ∘ (f⊗id) ∘ s` for module maps `f`.

use super::DuplicialError;
use crate::algebra::HopfData;
use crate::coefficients::{tensor_over_monad, LeftCoefficient};
use crate::distlaw::{yd_context, ChiCoalgebra, LawContext, Module};
use crate::linalg::{LinMap, Space};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    T,
    S,
}

pub type Word = Vec<Letter>;

/// What is applied outside the word: nothing, or `−⊗_H N`.
#[derive(Clone, Debug)]
pub enum Outer {
    Forget,
    Coeff(LeftCoefficient),
}

#[derive(Clone, Debug)]
pub struct Calculus {
    pub h: HopfData,
    pub ctx: LawContext,
    pub m: ChiCoalgebra,
    pub outer: Outer,
}

impl Calculus {
    pub fn new(h: &HopfData, m: ChiCoalgebra, outer: Outer) -> Result<Calculus, DuplicialError> {
        let nh = h.dim();
        let dm = m.module.space.dim();
        let fits = |f: &LinMap, d: usize, c: usize| f.domain().dim() == d && f.codomain().dim() == c;
        if !fits(&m.module.action, dm * nh, dm) || !fits(&m.rho, dm * nh, nh * dm) {
            return Err(DuplicialError::Usage("right coefficient does not match the Hopf algebra".into()));
        }
        if let Outer::Coeff(n) = &outer {
            let dn = n.space.dim();
            if !fits(&n.action, nh * dn, dn) || !fits(&n.ell, dn, nh * dn) {
                return Err(DuplicialError::Usage("left coefficient does not match the Hopf algebra".into()));
            }
            if n.action.field() != h.field() {
                return Err(DuplicialError::Usage("coefficients live over a different field".into()));
            }
        }
        if m.rho.field() != h.field() {
            return Err(DuplicialError::Usage("coefficients live over a different field".into()));
        }
        Ok(Calculus { h: h.clone(), ctx: yd_context(h), m, outer })
    }

    fn left(&self) -> Result<&LeftCoefficient, DuplicialError> {
        match &self.outer {
            Outer::Coeff(n) => Ok(n),
            Outer::Forget => Err(DuplicialError::Usage("this map needs a left coefficient".into())),
        }
    }

    /// The module `WM`.
    pub fn module(&self, w: &[Letter]) -> Result<Module, DuplicialError> {
        let Some((x, rest)) = w.split_first() else {
            return Ok(self.m.module.clone());
        };
        let inner = self.module(rest)?;
        Ok(match x {
            Letter::T => self.ctx.t_module(&inner),
            Letter::S => self.ctx.s_module(&inner)?,
        })
    }

    /// `U(WM)`.
    pub fn u_space(&self, w: &[Letter]) -> Space {
        let mut s = self.m.module.space.clone();
        for x in w.iter().rev() {
            s = match x {
                Letter::T => self.ctx.t_space(&s),
                Letter::S => self.ctx.s_space(&s),
            };
        }
        s
    }

    pub fn coord_dim(&self, w: &[Letter]) -> usize {
        let base = self.m.module.space.dim() * self.h.dim().pow(w.len().saturating_sub(1) as u32);
        match &self.outer {
            Outer::Forget => base * self.h.dim().pow(w.len().min(1) as u32),
            Outer::Coeff(n) => base * n.space.dim(),
        }
    }

    /// Coordinates of `N(WM)`.
    pub fn coords(&self, w: &[Letter]) -> Result<Space, DuplicialError> {
        match &self.outer {
            Outer::Forget => Ok(self.u_space(w)),
            Outer::Coeff(n) if w.is_empty() => Ok(self.empty_presentation(n)?.space),
            Outer::Coeff(n) => Ok(self.u_space(&w[1..]).tensor(&n.space)),
        }
    }

    fn empty_presentation(&self, n: &LeftCoefficient) -> Result<crate::coefficients::TensorOverMonad, DuplicialError> {
        let nm = Module { space: n.space.clone(), action: n.action.clone() };
        Ok(tensor_over_monad(self.h.space(), &nm, &self.m.module)?)
    }

    /// `q : U(WM)⊗N → N(WM)`.
    pub fn projection(&self, w: &[Letter]) -> Result<LinMap, DuplicialError> {
        let n = self.left()?;
        let f = self.h.field();
        let Some((x, rest)) = w.split_first() else {
            return Ok(self.empty_presentation(n)?.projection);
        };
        let y = self.u_space(rest);
        let cod = y.tensor(&n.space);
        let dom = self.u_space(w).tensor(&n.space);
        Ok(match x {
            Letter::T => LinMap::identity(f, y).kron(&n.action)?.relabel(dom, cod),
            Letter::S => {
                let act_y = self.module(rest)?.action.columns();
                let act_n = n.action.columns();
                let (nh, dy, dn) = (self.h.dim(), y.dim(), n.space.dim());
                LinMap::from_columns(f, dom, cod, |j| {
                    let (hh, yy, nn) = (j / (dy * dn), (j / dn) % dy, j % dn);
                    let mut out = Vec::new();
                    for (h1, h2, c) in self.h.comult_basis(hh) {
                        for (s, a) in self.h.antipode_inv_basis(*h1) {
                            let ca = c * a;
                            for (ry, b) in &act_y[yy * nh + h2] {
                                for (rn, d) in &act_n[s * dn + nn] {
                                    out.push((ry * dn + rn, &(&ca * b) * d));
                                }
                            }
                        }
                    }
                    out
                })
            }
        })
    }

    /// The section of [`projection`](Self::projection) inserting `1`.
    pub fn section(&self, w: &[Letter]) -> Result<LinMap, DuplicialError> {
        let n = self.left()?;
        let f = self.h.field();
        let Some((x, rest)) = w.split_first() else {
            return Ok(self.empty_presentation(n)?.section);
        };
        let y = self.u_space(rest);
        let idy = LinMap::identity(f, y.clone());
        let idn = LinMap::identity(f, n.space.clone());
        let unit = self.h.unit();
        let s = match x {
            Letter::T => LinMap::kron_all([&idy, unit, &idn])?,
            Letter::S => LinMap::kron_all([unit, &idy, &idn])?,
        };
        Ok(s.relabel(y.tensor(&n.space), self.u_space(w).tensor(&n.space)))
    }

    /// `N(f)` in coordinates, for a module map `f : U(from) → U(to)`.
    pub fn n_map(&self, from: &[Letter], to: &[Letter], f: &LinMap) -> Result<LinMap, DuplicialError> {
        match &self.outer {
            Outer::Forget => Ok(f.clone().relabel(self.u_space(from), self.u_space(to))),
            Outer::Coeff(n) => {
                let lifted = f.kron(&LinMap::identity(f.field(), n.space.clone()))?;
                let m = self.projection(to)?.compose(&lifted)?.compose(&self.section(from)?)?;
                Ok(m.relabel(self.coords(from)?, self.coords(to)?))
            }
        }
    }

    /// Applies the letters of `prefix` (outermost first) to a map between inner words.
    pub fn whisker(&self, prefix: &[Letter], f: LinMap) -> LinMap {
        prefix.iter().rev().fold(f, |g, x| match x {
            Letter::T => self.ctx.adj.b_map(&g),
            Letter::S => self.ctx.lift.ext.c_map(&g),
        })
    }

    pub fn identity(&self, w: &[Letter]) -> Result<LinMap, DuplicialError> {
        Ok(LinMap::identity(self.h.field(), self.coords(w)?))
    }

    pub fn path(&self, w: &[Letter]) -> Result<Path<'_>, DuplicialError> {
        Ok(Path { calc: self, word: w.to_vec(), map: self.identity(w)? })
    }
}

/// A composite of structure maps, built left to right from a starting word.
pub struct Path<'c> {
    calc: &'c Calculus,
    pub word: Word,
    pub map: LinMap,
}

impl<'c> Path<'c> {
    fn then_n(mut self, new: Word, g: LinMap) -> Result<Self, DuplicialError> {
        self.map = g.compose(&self.map)?;
        self.word = new;
        Ok(self)
    }

    /// Applies a module map between underlying spaces of `self.word` and `new`.
    fn then_u(self, new: Word, f: LinMap) -> Result<Self, DuplicialError> {
        let g = self.calc.n_map(&self.word, &new, &f)?;
        self.then_n(new, g)
    }

    fn at(&self, i: usize) -> Result<Letter, DuplicialError> {
        self.word.get(i).copied().ok_or_else(|| DuplicialError::Usage(format!("no letter at position {i}")))
    }

    /// Counit of the letter at position `i`.
    pub fn eps(self, i: usize) -> Result<Self, DuplicialError> {
        let x = self.at(i)?;
        let c = self.calc;
        let inner = &self.word[i + 1..];
        let ui = c.u_space(inner);
        let k = match x {
            Letter::T => c.module(inner)?.action,
            Letter::S => c.ctx.lift.s_eps(&ui).expect("S is a comonad"),
        };
        let f = c.whisker(&self.word[..i], k);
        let mut new = self.word.clone();
        new.remove(i);
        self.then_u(new, f)
    }

    /// Comultiplication of the letter at position `i`.
    pub fn delta(self, i: usize) -> Result<Self, DuplicialError> {
        let x = self.at(i)?;
        let c = self.calc;
        let ui = c.u_space(&self.word[i + 1..]);
        let k = match x {
            Letter::T => c.ctx.t_delta(&ui),
            Letter::S => c.ctx.lift.s_delta(&ui).expect("S is a comonad"),
        };
        let f = c.whisker(&self.word[..i], k);
        let mut new = self.word.clone();
        new.insert(i, x);
        self.then_u(new, f)
    }

    /// `χ : TS → ST` on positions `i, i+1`.
    pub fn swap(self, i: usize) -> Result<Self, DuplicialError> {
        if self.at(i)? != Letter::T || self.at(i + 1)? != Letter::S {
            return Err(DuplicialError::Usage(format!("no TS at position {i}")));
        }
        let c = self.calc;
        let k = c.ctx.chi(&c.u_space(&self.word[i + 2..]));
        let f = c.whisker(&self.word[..i], k);
        let mut new = self.word.clone();
        new.swap(i, i + 1);
        self.then_u(new, f)
    }

    /// Moves the `S` at position `j` out to position `i < j` past a run of `T`s.
    pub fn move_s_out(mut self, j: usize, i: usize) -> Result<Self, DuplicialError> {
        for p in (i..j).rev() {
            self = self.swap(p)?;
        }
        Ok(self)
    }

    /// Moves the `T` at position `i` in to position `j > i` past a run of `S`s.
    pub fn move_t_in(mut self, i: usize, j: usize) -> Result<Self, DuplicialError> {
        for p in i..j {
            self = self.swap(p)?;
        }
        Ok(self)
    }

    /// `ρ` on the innermost letter, which must be `T`.
    pub fn rho(self) -> Result<Self, DuplicialError> {
        let last = self.word.len().checked_sub(1).ok_or_else(|| DuplicialError::Usage("empty word".into()))?;
        if self.at(last)? != Letter::T {
            return Err(DuplicialError::Usage("rho needs an innermost T".into()));
        }
        let c = self.calc;
        let f = c.whisker(&self.word[..last], c.m.rho.clone());
        let mut new = self.word.clone();
        new[last] = Letter::S;
        self.then_u(new, f)
    }

    /// A module map `∇ : M → SM`, appended innermost.
    pub fn nabla_m(self, nabla: &LinMap) -> Result<Self, DuplicialError> {
        let c = self.calc;
        let f = c.whisker(&self.word, nabla.clone());
        let mut new = self.word.clone();
        new.push(Letter::S);
        self.then_u(new, f)
    }

    /// `λ : NS → NT` on the outermost letter: `y⊗n ↦ y·a ⊗ n'` for `ℓ(n) = a⊗n'`.
    pub fn lambda(self) -> Result<Self, DuplicialError> {
        if self.at(0)? != Letter::S {
            return Err(DuplicialError::Usage("lambda needs an outermost S".into()));
        }
        let c = self.calc;
        let n = c.left()?;
        let g = c.act_after(&self.word[1..], &n.ell)?;
        let mut new = self.word.clone();
        new[0] = Letter::T;
        self.then_n(new, g)
    }

    /// `∇ : N → NT` for a left-linear `δ : N → H⊗N`, prepended outermost.
    pub fn nabla_n(self, delta: &LinMap) -> Result<Self, DuplicialError> {
        let c = self.calc;
        let g = c.act_after(&self.word, delta)?.compose(&c.section(&self.word)?)?;
        let mut new = self.word.clone();
        new.insert(0, Letter::T);
        let g = g.relabel(c.coords(&self.word)?, c.coords(&new)?);
        self.then_n(new, g)
    }

    pub fn finish(self) -> LinMap {
        self.map
    }
}

impl Calculus {
    /// `(act_Y ⊗ id_N) ∘ (id_Y ⊗ k)` on `U(Y)⊗N` for `k : N → H⊗N`.
    fn act_after(&self, y: &[Letter], k: &LinMap) -> Result<LinMap, DuplicialError> {
        let n = self.left()?;
        let f = self.h.field();
        let uy = self.u_space(y);
        let idy = LinMap::identity(f, uy.clone());
        let idn = LinMap::identity(f, n.space.clone());
        let act = self.module(y)?.action.kron(&idn)?;
        let g = act.compose(&idy.kron(k)?)?;
        let s = uy.tensor(&n.space);
        Ok(g.relabel(s.clone(), s))
    }
}
