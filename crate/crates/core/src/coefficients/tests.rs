use super::json::parse_coefficients;
use super::*;
use crate::algebra::presets::hopf_preset;
use crate::distlaw::{arise, galois_gamma, galois_gamma_inverse, LawContext, Lift};
use crate::linalg::Field;

const Q: Field = Field::Rational;

fn hopf(name: &str) -> HopfData {
    hopf_preset(name, Q).unwrap()
}

fn ints(dom: &Space, cod: &Space, rows: &[Vec<i64>]) -> LinMap {
    LinMap::from_ints(Q, dom.clone(), cod.clone(), rows)
}

/// `M = H` with the right regular action and the given coaction on basis elements.
fn regular_right(h: &HopfData, coaction: impl Fn(usize) -> Vec<(usize, usize)>) -> Result<RightCoefficient, CoeffError> {
    let sp = h.space().clone();
    let n = h.dim();
    let co = LinMap::from_columns(Q, sp.clone(), sp.tensor(&sp), |m| {
        coaction(m).into_iter().map(|(a, b)| (a * n + b, Q.one())).collect()
    });
    make_right_coeff(h, sp.clone(), h.mult().clone(), co)
}

#[test]
fn trivial_rho_is_antipode_on_group_likes() {
    let h = hopf("group_algebra:Z3");
    let m = RightCoefficient::trivial(&h);
    // ρ(1⊗h) = h⁻¹⊗1; basis 1, g, g2
    let expect = ints(m.rho.domain(), m.rho.codomain(), &[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
    assert_eq!(m.rho, expect);
}

#[test]
fn rho_at_unit_is_the_coaction() {
    for name in ["group_algebra:Z3", "group_algebra:S3", "sweedler_h4", "dual_group_algebra:S3"] {
        let h = hopf(name);
        for m in [RightCoefficient::trivial(&h), regular_right(&h, |i| vec![(i, i)]).unwrap_or_else(|_| RightCoefficient::trivial(&h))] {
            let idm = LinMap::identity(Q, m.space.clone());
            let with_unit = idm.kron(h.unit()).unwrap().relabel(m.space.clone(), m.space.tensor(h.space()));
            assert_eq!(m.rho.then_after(&with_unit), m.coaction, "{name}");
        }
    }
}

#[test]
fn regular_module_with_comultiplication_on_z2() {
    let h = hopf("group_algebra:Z2");
    let m = regular_right(&h, |i| vec![(i, i)]).unwrap();
    // ρ(m⊗h) = h⁻¹m ⊗ mh, basis order (m, h) and (a, b)
    let expect = ints(
        m.rho.domain(),
        m.rho.codomain(),
        &[vec![1, 0, 0, 1], vec![0, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 1, 1, 0]],
    );
    assert_eq!(m.rho, expect);
}

#[test]
fn every_plus_one_mutation_of_rho_is_detected() {
    let h = hopf("group_algebra:Z2");
    let m = regular_right(&h, |i| vec![(i, i)]).unwrap();
    let dense = m.rho.to_dense();
    for i in 0..4 {
        for j in 0..4 {
            let mut d = dense.clone();
            d[i][j] = &d[i][j] + &Q.one();
            let rho = LinMap::from_dense(Q, m.rho.domain().clone(), m.rho.codomain().clone(), &d).unwrap();
            let bad = RightCoefficient { rho, ..m.clone() };
            assert!(!bad.check(&h).all_passed(), "mutation at ({i},{j}) undetected");
        }
    }
}

#[test]
fn conjugation_yd_module_on_z3() {
    let h = hopf("group_algebra:Z3");
    let sp = h.space().clone();
    let hn = sp.tensor(&sp);
    // h·n = h n h⁻¹ = n, δ(n) = n⊗n
    let action = LinMap::from_columns(Q, hn.clone(), sp.clone(), |j| vec![(j % 3, Q.one())]);
    let coaction = LinMap::from_columns(Q, sp.clone(), hn.clone(), |j| vec![(j * 3 + j, Q.one())]);
    let (n, rep) = make_left_coeff(&h, sp.clone(), action, coaction.clone(), false).unwrap();
    assert!(rep.all_passed());
    // ℓ(n) = n ⊗ n⁻¹·n = n⊗n
    assert_eq!(n.ell, coaction);
    assert!(n.check_counit().all_passed());
}

#[test]
fn regular_module_is_not_yd_and_force_keeps_going() {
    let h = hopf("group_algebra:Z3");
    let sp = h.space().clone();
    let coaction = LinMap::from_columns(Q, sp.clone(), sp.tensor(&sp), |j| vec![(j * 3 + j, Q.one())]);
    let e = make_left_coeff(&h, sp.clone(), h.mult().clone(), coaction.clone(), false).unwrap_err();
    let msg = e.to_string();
    assert!(msg.contains("Yetter-Drinfeld") && msg.contains("(h, n) = ("), "{msg}");
    let (_, rep) = make_left_coeff(&h, sp, h.mult().clone(), coaction, true).unwrap();
    assert!(!rep.get("Yetter-Drinfeld condition").unwrap().passed);
}

#[test]
fn trivial_left_coefficient() {
    for name in ["group_algebra:S3", "sweedler_h4"] {
        let h = hopf(name);
        let n = LeftCoefficient::trivial(&h);
        // ℓ(n) = 1⊗n
        assert_eq!(n.ell, h.unit().clone().relabel(n.space.clone(), h.space().tensor(&n.space)));
    }
}

#[test]
fn sayd_detection() {
    for name in ["group_algebra:Z2", "group_algebra:S3", "sweedler_h4", "dual_group_algebra:S3"] {
        let h = hopf(name);
        assert!(check_sayd(&h, &RightCoefficient::trivial(&h), &LeftCoefficient::trivial(&h)), "{name}");
        assert!(check_sayd(&h, &RightCoefficient::zero(&h), &LeftCoefficient::zero(&h)));
    }
    let h = hopf("group_algebra:Z3");
    let n = LeftCoefficient::trivial(&h);
    // one-dimensional M with m ↦ g⊗m is still stable anti-Yetter-Drinfeld
    let k = Space::new(["m"]);
    let co = LinMap::from_columns(Q, k.clone(), h.space().clone(), |_| vec![(1, Q.one())]);
    let m1 = make_right_coeff(&h, k, h.counit().clone(), co).unwrap();
    assert!(check_sayd(&h, &m1, &n));
    // on the regular module the same coaction is not
    let m3 = regular_right(&h, |i| vec![(1, i)]).unwrap();
    assert!(!check_sayd(&h, &m3, &n));
}

#[test]
fn hopf_module_coefficient_is_entwined() {
    for name in ["group_algebra:Z2", "group_algebra:S3", "sweedler_h4"] {
        let h = hopf(name);
        let sp = h.space().clone();
        let n = h.dim();
        // ∇(m) = S(m₍₂₎) ⊗ m₍₁₎
        let nabla = LinMap::from_columns(Q, sp.clone(), sp.tensor(&sp), |m| {
            let mut out = Vec::new();
            for (m1, m2, c) in h.comult_basis(m) {
                for (s, x) in h.antipode_basis(*m2) {
                    out.push((s * n + m1, c * x));
                }
            }
            out
        });
        let w = EntwinedWitness { space: sp.clone(), action: h.mult().clone(), nabla };
        let (m, rep) = entwined_right(&h, &w).unwrap();
        assert!(rep.all_passed(), "{name}");
        assert!(rep.get("entwined algebra condition").unwrap().passed);
        if name == "group_algebra:Z2" {
            let reg = regular_right(&h, |i| vec![(i, i)]).unwrap();
            assert_eq!(m.rho, reg.rho);
        }
    }
    // Δ on kℤ/3 is not a module map into the lifted functor
    let h = hopf("group_algebra:Z3");
    let sp = h.space().clone();
    let delta = h.comult().clone();
    let e = entwined_right(&h, &EntwinedWitness { space: sp, action: h.mult().clone(), nabla: delta }).unwrap_err();
    assert!(e.to_string().contains("module map") || e.to_string().contains("entwined"), "{e}");
}

#[test]
fn zero_witness_gives_zero_coefficient() {
    let h = hopf("group_algebra:Z2");
    let z = Space::zero();
    let w = EntwinedWitness {
        space: z.clone(),
        action: LinMap::zero(Q, z.tensor(h.space()), z.clone()),
        nabla: LinMap::zero(Q, z.clone(), h.space().tensor(&z)),
    };
    let (m, _) = entwined_right(&h, &w).unwrap();
    assert_eq!(m.space.dim(), 0);
    let w = EntwinedWitness { action: LinMap::zero(Q, h.space().tensor(&z), z.clone()), ..w };
    let (n, _) = entwined_left(&h, &w).unwrap();
    assert_eq!(n.ell.domain().dim(), 0);
}

#[test]
fn free_left_module_is_entwined() {
    let h = hopf("group_algebra:S3");
    let sp = h.space().clone();
    let n = h.dim();
    let unit = h.unit_vector()[0].0;
    let delta = LinMap::from_columns(Q, sp.clone(), sp.tensor(&sp), |j| vec![(j * n + unit, Q.one())]);
    let (c, rep) = entwined_left(&h, &EntwinedWitness { space: sp.clone(), action: h.mult().clone(), nabla: delta }).unwrap();
    assert!(rep.all_passed());
    assert!(c.check_counit().all_passed());
}

#[test]
fn tensor_over_monad_dimensions() {
    let h = hopf("group_algebra:Z2");
    let reg_right = Module { space: h.space().clone(), action: h.mult().clone() };
    let reg_left = Module { space: h.space().clone(), action: h.mult().clone() };
    let t = tensor_over_monad(h.space(), &reg_left, &reg_right).unwrap();
    assert_eq!(t.space.dim(), 2);
    let k = Space::new(["n"]);
    let triv = Module { space: k.clone(), action: h.counit().clone().relabel(h.space().tensor(&k), k.clone()) };
    assert_eq!(tensor_over_monad(h.space(), &triv, &reg_right).unwrap().space.dim(), 1);
    let z = Space::zero();
    let zero = Module { space: z.clone(), action: LinMap::zero(Q, z.tensor(h.space()), z.clone()) };
    assert_eq!(tensor_over_monad(h.space(), &triv, &zero).unwrap().space.dim(), 0);
}

#[test]
fn tensor_over_monad_is_functorial() {
    let h = hopf("group_algebra:S3");
    let x = Module { space: h.space().clone(), action: h.mult().clone() };
    let k = Space::new(["n"]);
    let triv = Module { space: k.clone(), action: h.counit().clone().relabel(h.space().tensor(&k), k.clone()) };
    let t = tensor_over_monad(h.space(), &triv, &x).unwrap();
    // left multiplications are right module maps of the regular module
    let f = h.algebra.left_mult_by(&[(1, Q.one())]);
    let g = h.algebra.left_mult_by(&[(3, Q.one()), (4, Q.from_int(2))]);
    let tf = t.induced(&t, &f, &triv).unwrap();
    let tg = t.induced(&t, &g, &triv).unwrap();
    let tgf = t.induced(&t, &g.then_after(&f), &triv).unwrap();
    assert_eq!(tgf, tg.then_after(&tf));
    let id = t.induced(&t, &h.id(), &triv).unwrap();
    assert!(id.is_identity());
    // q ∘ (f⊗id) = N(f) ∘ q
    let lhs = t.projection.then_after(&f.kron(&LinMap::identity(Q, k)).unwrap());
    assert_eq!(lhs, tf.then_after(&t.projection));
}

fn conjugated(lift: &Lift, omega: &LinMap, omega_inv: &LinMap) -> Lift {
    let e = lift.kappa.domain().factor(1);
    let idw_e = LinMap::identity(Q, e.clone());
    let k = omega.kron(&idw_e).unwrap().then_after(&lift.kappa).then_after(&omega_inv.kron(&idw_e).unwrap());
    Lift { name: "conjugated".into(), ext: lift.ext.clone(), kappa: k, omega: omega.clone(), omega_inv: omega_inv.clone() }
}

#[test]
fn galois_transport_of_rho_round_trips() {
    for name in ["group_algebra:S3", "sweedler_h4"] {
        let h = hopf(name);
        let ctx = yd_context(&h);
        let s_lift = ctx.lift.clone();
        let v_lift = conjugated(&s_lift, &h.antipode, h.antipode_inv());
        let v_ctx = LawContext { adj: ctx.adj.clone(), lift: v_lift.clone(), law: arise(&ctx.adj, &v_lift).unwrap().chi };
        for m in [RightCoefficient::trivial(&h), regular_right(&h, |i| vec![(i, i)]).unwrap_or_else(|_| RightCoefficient::trivial(&h))] {
            let module = m.module();
            let rho_v = galois_gamma(&ctx.adj, &s_lift, &v_lift, &m.rho, &m.space, &module).unwrap();
            let chi_v = ChiCoalgebra { module: module.clone(), rho: rho_v.clone() };
            let rep = chi_v.check(&v_ctx);
            assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
            let back = galois_gamma_inverse(&ctx.adj, &s_lift, &v_lift, &rho_v, &m.space, &module).unwrap();
            assert_eq!(back, m.rho);
        }
    }
}

#[test]
fn coefficient_json() {
    let h = hopf("group_algebra:Z2");
    let text = r#"{"right": {"dim": 2, "labels": ["a", "b"],
        "action": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
        "coaction": [[[0, 0, 1]], [[1, 1, 1]]]}}"#;
    let (m, n, rep) = parse_coefficients(&h, text, false).unwrap();
    assert_eq!(m.rho, regular_right(&h, |i| vec![(i, i)]).unwrap().rho);
    assert_eq!(n.space.dim(), 1);
    assert!(rep.all_passed());
    let bad = r#"{"right": {"dim": 2, "action": [[[1, 0], [0, 1]], [[0, 1], [1, "x"]]], "coaction": []}}"#;
    let e = parse_coefficients(&h, bad, false).unwrap_err().to_string();
    assert!(e.contains("right.action[1][1]"), "{e}");
    let left = r#"{"left": {"dim": 2, "action": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "coaction": [[[0, 0, 1]], [[1, 1, 1]]]}}"#;
    assert!(parse_coefficients(&h, left, false).is_err());
    assert!(parse_coefficients(&h, left, true).is_ok());
}

#[test]
fn antipode_twist_gives_a_valid_coefficient() {
    use crate::distlaw::antipode_one_cell;
    use crate::duplicial::{cc_towers, TowerConfig};
    for (name, top) in [("group_algebra:Z3", 3), ("group_algebra:S3", 2), ("sweedler_h4", 2)] {
        let h = hopf(name);
        let cell = antipode_one_cell(&h).unwrap();
        let m = twist_coefficient(&h, &cell, &regular_source(&h)).unwrap();
        assert!(m.check(&h).all_passed(), "{name}");
        let (ct, cs) = cc_towers(&h, &LeftCoefficient::trivial(&h), &m, &TowerConfig::new(top)).unwrap();
        assert!(ct.check().all_passed() && cs.check().all_passed(), "{name}");
    }
    // on a group algebra: m·g = g⁻¹m and m ↦ m⊗m
    let h = hopf("group_algebra:Z3");
    let m = twist_coefficient(&h, &antipode_one_cell(&h).unwrap(), &regular_source(&h)).unwrap();
    for x in 0..3 {
        for g in 0..3 {
            let ginv = h.antipode_basis(g)[0].0;
            assert_eq!(m.action.column(x * 3 + g), vec![(h.mul_basis(ginv, x)[0].0, Q.one())]);
        }
        assert_eq!(m.coaction.column(x), vec![(x * 3 + x, Q.one())]);
    }
}

#[test]
fn twisting_through_a_broken_cell_is_rejected() {
    use crate::distlaw::antipode_one_cell;
    let h = hopf("group_algebra:S3");
    let mut cell = antipode_one_cell(&h).unwrap();
    cell.sigma = h.id();
    assert!(twist_coefficient(&h, &cell, &regular_source(&h)).is_err());
}
