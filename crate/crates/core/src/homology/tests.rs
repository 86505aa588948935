use super::*;
use crate::algebra::presets::{hopf_preset, make_preset};
use crate::algebra::{AlgebraData, HopfData};
use crate::coefficients::{entwined_left, entwined_right, EntwinedWitness, LeftCoefficient, RightCoefficient};
use crate::duplicial::{bar_resolution, cc_towers, classical_cyclic_object, Calculus, Outer, TowerConfig};
use crate::linalg::space::{decode, encode};
use crate::linalg::{Field, LinMap, Space};
use crate::linalg::elim::rank_by_rref;

const Q: Field = Field::Rational;

fn hopf(name: &str) -> HopfData {
    hopf_preset(name, Q).unwrap()
}

fn algebra(name: &str) -> AlgebraData {
    match name {
        "k" => hopf("group_algebra:trivial").algebra.clone(),
        "dual_numbers" => make_preset(&name.parse().unwrap(), Q).unwrap().algebra().clone(),
        other => hopf(other).algebra.clone(),
    }
}

/// Hochschild complex of `A` written out directly from the structure constants.
fn naive_hh(a: &AlgebraData, top: usize) -> Vec<usize> {
    let d = a.dim();
    let sp = |n: usize| Space::numbered("c", d.pow(n as u32 + 1));
    let b = |n: usize| {
        let shape = vec![d; n + 1];
        let small = vec![d; n];
        LinMap::from_columns(Q, sp(n), sp(n - 1), |j| {
            let x = decode(j, &shape);
            let mut out = Vec::new();
            for i in 0..n {
                for (p, c) in a.mul_basis(x[i], x[i + 1]) {
                    let mut y: Vec<usize> = x[..i].to_vec();
                    y.push(*p);
                    y.extend_from_slice(&x[i + 2..]);
                    let c = if i % 2 == 0 { c.clone() } else { -c };
                    out.push((encode(&y, &small), c));
                }
            }
            for (p, c) in a.mul_basis(x[n], x[0]) {
                let mut y = vec![*p];
                y.extend_from_slice(&x[1..n]);
                let c = if n.is_multiple_of(2) { c.clone() } else { -c };
                out.push((encode(&y, &small), c));
            }
            out
        })
    };
    let ranks: Vec<usize> = (1..=top + 1).map(|n| rank_by_rref(&b(n))).collect();
    (0..=top)
        .map(|n| {
            let out = if n == 0 { 0 } else { ranks[n - 1] };
            d.pow(n as u32 + 1) - out - ranks[n]
        })
        .collect()
}

#[test]
fn f_polynomials() {
    assert_eq!(f_coefficients(0), vec![1]);
    assert_eq!(f_coefficients(1), vec![2, -1]);
    assert_eq!(f_coefficients(2), vec![3, -3, 1]);
    for n in 0..=6 {
        assert!(check_f_identity(n), "n = {n}");
    }
}

#[test]
fn mixed_complex_identities_on_classical_objects() {
    for name in ["k", "group_algebra:Z2", "dual_numbers", "sweedler_h4"] {
        let top = if name == "sweedler_h4" { 3 } else { 4 };
        let c = classical_cyclic_object(&algebra(name), top);
        let mc = boundaries(&c).unwrap();
        assert!(mc.is_cyclic());
        for n in 0..top {
            assert!(mc.b[n + 1].then_after(&mc.big_b[n]).add(&if n > 0 {
                mc.big_b[n - 1].then_after(&mc.b[n])
            } else {
                LinMap::zero(Q, mc.spaces[0].clone(), mc.spaces[0].clone())
            })
            .unwrap()
            .is_zero());
        }
    }
}

#[test]
fn mixed_complex_identities_on_coefficient_towers() {
    let h = hopf("group_algebra:Z2");
    let (ct, cs) = cc_towers(&h, &LeftCoefficient::trivial(&h), &RightCoefficient::trivial(&h), &TowerConfig::new(3)).unwrap();
    for tw in [&ct, &cs] {
        let mc = boundaries(tw).unwrap();
        assert!(mc.is_cyclic());
    }
    // not cyclic: id − T is nonzero and the identity still holds
    let h = hopf("group_algebra:Z3");
    let sp = h.space().clone();
    let co = LinMap::from_columns(Q, sp.clone(), sp.tensor(&sp), |i| vec![(3 + i, Q.one())]);
    let m = crate::coefficients::make_right_coeff(&h, sp, h.mult().clone(), co).unwrap();
    let (ct, cs) = cc_towers(&h, &LeftCoefficient::trivial(&h), &m, &TowerConfig::new(3)).unwrap();
    for tw in [&ct, &cs] {
        let mc = boundaries(tw).unwrap();
        assert!(!mc.is_cyclic());
    }
    let h = hopf("sweedler_h4");
    let (ct, _) = cc_towers(&h, &LeftCoefficient::trivial(&h), &RightCoefficient::trivial(&h), &TowerConfig::new(2)).unwrap();
    assert!(!boundaries(&ct).unwrap().is_cyclic());
}

#[test]
fn normalization() {
    let c = classical_cyclic_object(&algebra("k"), 3);
    assert_eq!(normalize(&c.simplicial).dims(), vec![1, 0, 0, 0]);
    let h = hopf("group_algebra:Z2");
    let bar = bar_resolution(&h, &RightCoefficient::trivial(&h), &TowerConfig::new(2)).unwrap();
    assert_eq!(bar.dims(), vec![2, 4, 8]);
    assert_eq!(normalize(&bar).dims(), vec![2, 2, 2]);
    let c = classical_cyclic_object(&algebra("group_algebra:Z2"), 0);
    let norm = normalize(&c.simplicial);
    assert!(norm.projection[0].is_identity());
}

#[test]
fn hochschild_homology_matches_naive_complex() {
    for (name, expect) in [
        ("k", vec![1, 0, 0, 0, 0]),
        ("group_algebra:Z2", vec![2, 0, 0, 0, 0]),
        ("dual_numbers", vec![2, 1, 1, 1, 1]),
    ] {
        let a = algebra(name);
        let c = classical_cyclic_object(&a, 5);
        let hh = hh_dims(&c.simplicial, 4).unwrap();
        assert_eq!(hh, naive_hh(&a, 4), "{name}");
        assert_eq!(hh, expect, "{name}");
        assert_eq!(hh_dims_unnormalized(&c.simplicial, 4).unwrap(), hh, "{name}");
    }
}

#[test]
fn cyclic_homology() {
    let c = classical_cyclic_object(&algebra("k"), 5);
    assert_eq!(hc_dims(&c, 4).unwrap(), vec![1, 0, 1, 0, 1]);
    let c = classical_cyclic_object(&algebra("group_algebra:Z2"), 4);
    assert_eq!(hc_dims(&c, 3).unwrap(), vec![2, 0, 2, 0]);
    let r = homology_report(&c);
    assert_eq!(r.hh[..4], [2, 0, 0, 0]);
    assert_eq!(r.hc.as_ref().unwrap()[..4], [2, 0, 2, 0]);
    assert_eq!(r.truncation_flagged, vec![4]);
    assert!(r.checks.all_passed());
    let exact = homology_report_to(&c, 3).unwrap();
    assert_eq!((exact.hh, exact.hc.unwrap()), (vec![2, 0, 0, 0], vec![2, 0, 2, 0]));
    assert!(exact.truncation_flagged.is_empty());
    assert!(homology_report_to(&c, 5).is_err());
    let json = serde_json::to_value(&r).unwrap();
    for key in ["hh", "hc", "truncation_flagged", "checks"] {
        assert!(json.get(key).is_some());
    }
}

#[test]
fn cyclic_homology_needs_a_cyclic_tower() {
    let h = hopf("sweedler_h4");
    let (ct, _) = cc_towers(&h, &LeftCoefficient::trivial(&h), &RightCoefficient::trivial(&h), &TowerConfig::new(2)).unwrap();
    let e = hc_dims(&ct, 1).unwrap_err();
    assert!(matches!(e, HomologyError::Usage(_)) && e.to_string().contains("id - T"), "{e}");
    assert!(homology_report(&ct).hc.is_none());
    assert!(matches!(hh_dims(&ct.simplicial, 2), Err(HomologyError::Usage(_))));
}

#[test]
fn zero_tower_has_zero_homology() {
    let h = hopf("group_algebra:Z3");
    let (ct, _) = cc_towers(&h, &LeftCoefficient::trivial(&h), &RightCoefficient::zero(&h), &TowerConfig::new(3)).unwrap();
    assert_eq!(hh_dims(&ct.simplicial, 2).unwrap(), vec![0, 0, 0]);
    assert_eq!(hc_dims(&ct, 2).unwrap(), vec![0, 0, 0]);
}

fn hopf_module(h: &HopfData) -> EntwinedWitness {
    let sp = h.space().clone();
    let n = h.dim();
    let nabla = LinMap::from_columns(Q, sp.clone(), sp.tensor(&sp), |m| {
        let mut out = Vec::new();
        for (m1, m2, c) in h.comult_basis(m) {
            for (s, x) in h.antipode_basis(*m2) {
                out.push((s * n + m1, c * x));
            }
        }
        out
    });
    EntwinedWitness { space: sp, action: h.mult().clone(), nabla }
}

fn free_left(h: &HopfData) -> EntwinedWitness {
    let sp = h.space().clone();
    let n = h.dim();
    let unit = h.unit_vector()[0].0;
    let delta = LinMap::from_columns(Q, sp.clone(), sp.tensor(&sp), |j| vec![(j * n + unit, Q.one())]);
    EntwinedWitness { space: sp, action: h.mult().clone(), nabla: delta }
}

#[test]
fn entwined_right_coefficient_contracts_both_towers() {
    let h = hopf("group_algebra:Z2");
    let w = hopf_module(&h);
    let (m, _) = entwined_right(&h, &w).unwrap();
    let n = LeftCoefficient::trivial(&h);
    let calc = Calculus::new(&h, m.chi_coalgebra(), Outer::Coeff(n.clone())).unwrap();
    let rep = check_contractible(&calc, EntwinedSide::Right, &w, 4).unwrap();
    assert_eq!(rep.entries.len(), 6);
    assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    let (ct, cs) = cc_towers(&h, &n, &m, &TowerConfig::new(4)).unwrap();
    for tw in [&ct, &cs] {
        assert_eq!(hh_dims(&tw.simplicial, 3).unwrap()[1..], [0, 0, 0]);
    }
}

#[test]
fn entwined_left_coefficient_contracts_both_towers() {
    for name in ["group_algebra:Z3", "sweedler_h4"] {
        let h = hopf(name);
        let w = free_left(&h);
        let (n, _) = entwined_left(&h, &w).unwrap();
        let m = RightCoefficient::trivial(&h);
        let calc = Calculus::new(&h, m.chi_coalgebra(), Outer::Coeff(n)).unwrap();
        let top = if name == "sweedler_h4" { 3 } else { 4 };
        let rep = check_contractible(&calc, EntwinedSide::Left, &w, top).unwrap();
        assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
    }
}

#[test]
fn a_non_entwined_witness_is_reported() {
    let h = hopf("group_algebra:Z2");
    let (m, n) = (RightCoefficient::trivial(&h), LeftCoefficient::trivial(&h));
    let calc = Calculus::new(&h, m.chi_coalgebra(), Outer::Coeff(n)).unwrap();
    let w = free_left(&h);
    // shapes of the witness do not match the trivial N
    assert!(check_contractible(&calc, EntwinedSide::Left, &w, 2).is_err());
    let k = Space::new(["n"]);
    let w = EntwinedWitness {
        space: k.clone(),
        action: h.counit().clone(),
        nabla: LinMap::from_columns(Q, k.clone(), h.space().tensor(&k), |_| vec![(1, Q.one())]),
    };
    let rep = check_contractible(&calc, EntwinedSide::Left, &w, 2).unwrap();
    assert!(!rep.all_passed());
}
