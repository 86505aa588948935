//! Closed formulas for `t^T_n`, `L_n` and `R_n` in Sweedler notation, evaluated term by term on
//! structure constants. They share nothing with the word calculus except the presentation of
//! `N(SY)` used to reduce the raw output of `R_n`.

use super::words::{Calculus, Letter, Outer};
use super::DuplicialError;
use crate::algebra::HopfData;
use crate::coefficients::{LeftCoefficient, RightCoefficient};
use crate::linalg::space::{decode, encode};
use crate::linalg::{LinMap, Scalar, Space};

type Terms = Vec<(Vec<usize>, Scalar)>;

fn expand(ts: Terms, f: impl Fn(&[usize]) -> Vec<(Vec<usize>, Scalar)>) -> Terms {
    let mut out = Vec::new();
    for (t, c) in ts {
        for (u, d) in f(&t) {
            out.push((u, &c * &d));
        }
    }
    // merge equal tensors so the term count stays bounded by the basis size
    out.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Terms = Vec::with_capacity(out.len());
    for (t, c) in out {
        match merged.last_mut() {
            Some((u, d)) if *u == t => *d = &*d + &c,
            _ => merged.push((t, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    merged
}

fn splice(t: &[usize], i: usize, drop: usize, with: &[usize]) -> Vec<usize> {
    let mut v = t[..i].to_vec();
    v.extend_from_slice(with);
    v.extend_from_slice(&t[i + drop..]);
    v
}

struct Ops<'a> {
    h: &'a HopfData,
    m_act: Vec<Vec<(usize, Scalar)>>,
    m_coact: Vec<Vec<(usize, Scalar)>>,
    n_act: Vec<Vec<(usize, Scalar)>>,
    n_coact: Option<Vec<Vec<(usize, Scalar)>>>,
    dm: usize,
    dn: usize,
}

impl<'a> Ops<'a> {
    fn new(h: &'a HopfData, m: &RightCoefficient, n: &LeftCoefficient) -> Ops<'a> {
        Ops {
            h,
            m_act: m.action.columns(),
            m_coact: m.coaction.columns(),
            n_act: n.action.columns(),
            n_coact: n.coaction.as_ref().map(LinMap::columns),
            dm: m.space.dim(),
            dn: n.space.dim(),
        }
    }

    fn n_coact(&self) -> Result<&Vec<Vec<(usize, Scalar)>>, DuplicialError> {
        self.n_coact.as_ref().ok_or_else(|| DuplicialError::Usage("the closed formulas need a coaction on N".into()))
    }

    /// `x ↦ x₍₁₎ ⊗ x₍₂₎` at slot `i`.
    fn split(&self, ts: Terms, i: usize) -> Terms {
        expand(ts, |t| self.h.comult_basis(t[i]).iter().map(|(a, b, c)| (splice(t, i, 1, &[*a, *b]), c.clone())).collect())
    }

    /// `x ↦ x₊ ⊗ x₋` at slot `i`.
    fn trans(&self, ts: Terms, i: usize) -> Terms {
        expand(ts, |t| self.h.translation_basis(t[i]).into_iter().map(|(p, q, c)| (splice(t, i, 1, &[p, q]), c)).collect())
    }

    /// Product of slots `i` and `i+1`.
    fn mul(&self, ts: Terms, i: usize) -> Terms {
        expand(ts, |t| self.h.mul_basis(t[i], t[i + 1]).iter().map(|(r, c)| (splice(t, i, 2, &[*r]), c.clone())).collect())
    }

    fn unit(&self, ts: Terms, i: usize) -> Terms {
        expand(ts, |t| self.h.unit_vector().iter().map(|(u, c)| (splice(t, i, 0, &[*u]), c.clone())).collect())
    }

    /// `m ↦ m₍₋₁₎ ⊗ m₍₀₎` at slot `i`.
    fn coact_m(&self, ts: Terms, i: usize) -> Terms {
        let d = self.dm;
        expand(ts, |t| self.m_coact[t[i]].iter().map(|(x, c)| (splice(t, i, 1, &[x / d, x % d]), c.clone())).collect())
    }

    fn coact_n(&self, ts: Terms, i: usize) -> Result<Terms, DuplicialError> {
        let d = self.dn;
        let co = self.n_coact()?;
        Ok(expand(ts, |t| co[t[i]].iter().map(|(x, c)| (splice(t, i, 1, &[x / d, x % d]), c.clone())).collect()))
    }

    /// `m·h` on slots `i, i+1`.
    fn act_m(&self, ts: Terms, i: usize) -> Terms {
        let nh = self.h.dim();
        expand(ts, |t| self.m_act[t[i] * nh + t[i + 1]].iter().map(|(r, c)| (splice(t, i, 2, &[*r]), c.clone())).collect())
    }

    /// `h·n` on slots `i, i+1`.
    fn act_n(&self, ts: Terms, i: usize) -> Terms {
        let d = self.dn;
        expand(ts, |t| self.n_act[t[i] * d + t[i + 1]].iter().map(|(r, c)| (splice(t, i, 2, &[*r]), c.clone())).collect())
    }

    fn reorder(&self, ts: Terms, order: &[usize]) -> Terms {
        ts.into_iter().map(|(t, c)| (order.iter().map(|&k| t[k]).collect(), c)).collect()
    }
}

fn coords_space(h: &HopfData, m: &Space, k: usize, n: &Space) -> Space {
    Space::tensor_all([m, &h.space().power(k), n])
}

fn shape(dm: usize, nh: usize, k: usize, dn: usize) -> Vec<usize> {
    let mut s = vec![dm];
    s.extend(std::iter::repeat_n(nh, k));
    s.push(dn);
    s
}

/// `m⊗h¹⊗⋯⊗hᵏ⊗n ↦ m₍₀₎h¹₊ ⊗ h²₊ ⊗ ⋯ ⊗ hᵏ₊ ⊗ P₊ ⊗ P₋n₍₀₎` with
/// `P = n₍₋₁₎hᵏ₋⋯h¹₋m₍₋₁₎`, on the coordinates `M⊗Hᵏ⊗N` of `NT^{k+1}M`.
pub fn explicit_t_oracle(h: &HopfData, m: &RightCoefficient, n: &LeftCoefficient, k: usize) -> Result<LinMap, DuplicialError> {
    let ops = Ops::new(h, m, n);
    ops.n_coact()?;
    let nh = h.dim();
    let sh = shape(ops.dm, nh, k, ops.dn);
    let sp = coords_space(h, &m.space, k, &n.space);
    Ok(LinMap::from_columns(h.field(), sp.clone(), sp, |j| {
        let mut ts: Terms = vec![(decode(j, &sh), h.field().one())];
        ts = ops.coact_m(ts, 0);
        ts = ops.coact_n(ts, k + 2).expect("coaction present");
        for i in (1..=k).rev() {
            ts = ops.trans(ts, 1 + i);
        }
        // [a, m0, p1, q1, …, pk, qk, b, n0] → [m0, p1…pk, b, qk…q1, a, n0]
        let mut order = vec![1];
        order.extend((1..=k).map(|i| 2 * i));
        order.push(2 * k + 2);
        order.extend((1..=k).rev().map(|i| 2 * i + 1));
        order.extend([0, 2 * k + 3]);
        ts = ops.reorder(ts, &order);
        for _ in 0..=k {
            ts = ops.mul(ts, k + 1);
        }
        ts = ops.trans(ts, k + 1);
        ts = ops.act_n(ts, k + 2);
        ts = ops.act_m(ts, 0);
        ts.into_iter().map(|(t, c)| (encode(&t, &sh), c)).collect()
    }))
}

/// `(h¹⊗⋯⊗h^{k+1}⊗m)⊗n ↦ (m n₍₋₁₎₊h¹₊ ⊗ h¹₋h²₊ ⊗ ⋯ ⊗ h^{k+1}₋n₍₋₁₎₋) ⊗ n₍₀₎`, from the
/// coordinates `Hᵏ⊗M⊗N` of `NS^{k+1}M` (where `h¹ = 1`) to those of `NT^{k+1}M`.
pub fn explicit_l_oracle(h: &HopfData, m: &RightCoefficient, n: &LeftCoefficient, k: usize) -> Result<LinMap, DuplicialError> {
    let ops = Ops::new(h, m, n);
    ops.n_coact()?;
    let nh = h.dim();
    let mut in_shape = vec![nh; k];
    in_shape.extend([ops.dm, ops.dn]);
    let out_shape = shape(ops.dm, nh, k, ops.dn);
    let dom = Space::tensor_all([&h.space().power(k), &m.space, &n.space]);
    let cod = coords_space(h, &m.space, k, &n.space);
    Ok(LinMap::from_columns(h.field(), dom, cod, |j| {
        let mut ts: Terms = vec![(decode(j, &in_shape), h.field().one())];
        ts = ops.unit(ts, 0);
        ts = ops.coact_n(ts, k + 2).expect("coaction present");
        ts = ops.trans(ts, k + 2);
        for i in (1..=k + 1).rev() {
            ts = ops.trans(ts, i - 1);
        }
        // [p1, q1, …, p_{k+1}, q_{k+1}, m, b₊, b₋, n0] → [m, b₊, p1, q1, …, q_{k+1}, b₋, n0]
        let mut order = vec![2 * k + 2, 2 * k + 3];
        order.extend(0..2 * k + 2);
        order.extend([2 * k + 4, 2 * k + 5]);
        ts = ops.reorder(ts, &order);
        ts = ops.mul(ts, 1);
        ts = ops.act_m(ts, 0);
        for j in 1..=k {
            ts = ops.mul(ts, j);
        }
        ts = ops.mul(ts, k + 1);
        ts = ops.act_n(ts, k + 1);
        ts.into_iter().map(|(t, c)| (encode(&t, &out_shape), c)).collect()
    }))
}

/// `(m⊗h¹⊗⋯⊗hᵏ⊗1)⊗n ↦ (m₍₋ₖ₋₁₎ ⊗ m₍₋ₖ₎h¹₍₁₎ ⊗ ⋯ ⊗ m₍₋₁₎h¹₍ₖ₎⋯hᵏ₍₁₎ ⊗ m₍₀₎) ⊗
/// h¹₍ₖ₊₁₎⋯hᵏ₍₂₎n`, reduced to the coordinates of `NS^{k+1}M`.
pub fn explicit_r_oracle(h: &HopfData, m: &RightCoefficient, n: &LeftCoefficient, k: usize) -> Result<LinMap, DuplicialError> {
    let ops = Ops::new(h, m, n);
    let nh = h.dim();
    let in_shape = shape(ops.dm, nh, k, ops.dn);
    let mut raw_shape = vec![nh; k + 1];
    raw_shape.extend([ops.dm, ops.dn]);
    let dom = coords_space(h, &m.space, k, &n.space);
    let raw_space = Space::tensor_all([&h.space().power(k + 1), &m.space, &n.space]);
    let raw = LinMap::from_columns(h.field(), dom, raw_space, |j| {
        let mut ts: Terms = vec![(decode(j, &in_shape), h.field().one())];
        ts = ops.coact_m(ts, 0);
        for i in 0..k {
            ts = ops.split(ts, i);
        }
        // c0…ck at 0..=k, m0 at k+1, h^j at k+1+j
        for jj in (1..=k).rev() {
            for r in 0..(k + 1 - jj) {
                ts = ops.split(ts, k + 1 + jj + r);
            }
        }
        let mut offset = vec![0usize; k + 2];
        let mut o = k + 2;
        for jj in 1..=k {
            offset[jj] = o;
            o += k + 2 - jj;
        }
        let piece = |jj: usize, r: usize| offset[jj] + r - 1;
        let nn = o;
        let mut order = vec![0];
        for slot in 1..=k {
            order.push(slot);
            order.extend((1..=slot).map(|jj| piece(jj, slot + 1 - jj)));
        }
        order.push(k + 1);
        order.extend((1..=k).map(|jj| piece(jj, k + 2 - jj)));
        order.push(nn);
        ts = ops.reorder(ts, &order);
        let start_n = 1 + (1..=k).map(|s| s + 1).sum::<usize>() + 1;
        for _ in 1..k {
            ts = ops.mul(ts, start_n);
        }
        if k >= 1 {
            ts = ops.act_n(ts, start_n);
        }
        for slot in (1..=k).rev() {
            let s = 1 + (1..slot).map(|i| i + 1).sum::<usize>();
            for _ in 0..slot {
                ts = ops.mul(ts, s);
            }
        }
        ts.into_iter().map(|(t, c)| (encode(&t, &raw_shape), c)).collect()
    });
    let calc = Calculus::new(h, m.chi_coalgebra(), Outer::Coeff(n.clone()))?;
    let q = calc.projection(&vec![Letter::S; k + 1])?;
    Ok(q.compose(&raw)?)
}
