use super::entwined::{displayed_condition, entwining_sides};
use super::*;
use proptest::prelude::*;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

fn l(xs: &[usize]) -> Term {
    Term::atoms(xs)
}

fn ll(rows: &[&[usize]]) -> Term {
    Term::list(rows.iter().map(|r| l(r)).collect())
}

#[test]
fn list_maps() {
    assert_eq!(mult(&ll(&[&[A], &[B, C]])).unwrap(), l(&[A, B, C]));
    assert_eq!(comult(&l(&[A, B])).unwrap(), ll(&[&[A, B], &[B]]));
    assert_eq!(counit(&l(&[B, A])).unwrap(), Term::Atom(B));
    assert_eq!(unit(&Term::Atom(A)), l(&[A]));
    assert_eq!(l(&[A, B, C]).to_string(), "[a,b,c]");
}

#[test]
fn empty_lists_are_domain_errors() {
    let empty = Term::list(vec![]);
    assert_eq!(mult(&empty), Err(SetError::Empty("mult")));
    assert_eq!(comult(&empty), Err(SetError::Empty("comult")));
    assert_eq!(counit(&empty), Err(SetError::Empty("counit")));
    assert_eq!(theta(&Term::list(vec![l(&[A]), empty])), Err(SetError::Empty("theta")));
    assert!(matches!(mult(&Term::Atom(A)), Err(SetError::NotAList(_))));
    assert!(FinList::new(vec![]).is_err());
}

#[test]
fn theta_examples() {
    assert_eq!(theta(&ll(&[&[A]])).unwrap(), ll(&[&[A]]));
    assert_eq!(theta(&ll(&[&[A], &[B]])).unwrap(), ll(&[&[A, B], &[B]]));
    let t = theta(&ll(&[&[A, B], &[C]])).unwrap();
    assert_eq!(t, ll(&[&[A, C], &[B, C], &[C]]));
    assert_eq!(t.size(), 5);
    assert_eq!(theta_count(&[2, 1]), 5);
}

#[test]
fn compatibility_square_by_hand() {
    let t = ll(&[&[A], &[B]]);
    let lhs = comult(&mult(&t).unwrap()).unwrap();
    let rhs = map(&theta(&map(&t, comult).unwrap()).unwrap(), mult).unwrap();
    assert_eq!(lhs, ll(&[&[A, B], &[B]]));
    assert_eq!(rhs, lhs);
}

#[test]
fn term_enumeration_counts() {
    // lists over two letters of length ≤ 3
    assert_eq!(enumerate_terms(2, 1, 3).len(), 2 + 4 + 8);
    // lists of lists of size s over one letter: 2^(s−1) compositions
    assert_eq!(enumerate_terms(1, 2, 4).len(), 1 + 2 + 4 + 8);
    let ts = enumerate_terms(2, 2, 4);
    assert!(ts.windows(2).all(|w| w[0].size() <= w[1].size()));
}

#[test]
fn bimonad_laws_hold_exhaustively() {
    for (x, bound) in [(1, 4), (2, 5), (3, 5)] {
        let r = check_bimonad(x, bound, &BimonadOps::default());
        assert_eq!(r.entries.len(), 14);
        assert!(r.all_passed(), "|X| = {x}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

fn reversed_theta(t: &Term) -> Result<Term, SetError> {
    let Term::List(mut v) = theta(t)? else { unreachable!() };
    v.reverse();
    Ok(Term::List(v))
}

#[test]
fn reversed_theta_fails_with_a_minimal_witness() {
    let ops = BimonadOps { theta: reversed_theta, ..BimonadOps::default() };
    let r = check_bimonad(2, 4, &ops);
    assert!(!r.all_passed());
    let e = r.get("εL⁺∘θ = L⁺ε").unwrap();
    assert!(!e.passed);
    // the first input where the order matters has two singleton rows
    assert_eq!(e.witness.as_deref(), Some("at [[a],[a]]: [a] ≠ [a,a]"));
    let sq = r.get("compatibility: Δ∘μ = L⁺μ∘θL⁺∘L⁺Δ").unwrap();
    assert_eq!(sq.witness.as_deref(), Some("at [[a],[a]]: [[a,a],[a]] ≠ [[a],[a,a]]"));
    // the monad and comonad parts do not involve θ
    assert!(r.get("monad associativity: μ∘μL⁺ = μ∘L⁺μ").unwrap().passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn theta_output_size(rows in prop::collection::vec(prop::collection::vec(0usize..4, 1..=4), 1..=4)
        .prop_filter("total size ≤ 8", |r| r.iter().map(Vec::len).sum::<usize>() <= 8)) {
        let t = Term::list(rows.iter().map(|r| Term::atoms(r)).collect());
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let out = theta(&t).unwrap();
        prop_assert_eq!(out.size(), theta_count(&lens));
        prop_assert_eq!(out.items("len").unwrap().len(), lens.iter().sum::<usize>());
    }
}

#[test]
fn non_associative_table_is_rejected() {
    // 0·0 = 1 and everything else 0: (0·0)·1 = 1·1 = 0 but 0·(0·1) = 0·0 = 1
    let e = SemigroupTable::new(vec![vec![1, 0], vec![0, 0]]).unwrap_err();
    let SetError::NotAssociative { a, b, c } = e else { panic!("{e}") };
    let op = [[1, 0], [0, 0]];
    assert_ne!(op[op[a][b]][c], op[a][op[b][c]]);
    assert!(SemigroupTable::new(vec![vec![0, 2], vec![0, 0]]).is_err());
    assert!(SemigroupTable::new(vec![vec![0], vec![0]]).is_err());
}

fn brute_count(n: usize) -> usize {
    let cells = n * n;
    (0..n.pow(cells as u32))
        .filter(|&code| {
            let op: Vec<usize> = (0..cells).map(|i| code / n.pow(i as u32) % n).collect();
            let m = |a: usize, b: usize| op[a * n + b];
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
        })
        .count()
}

#[test]
fn labeled_semigroup_counts() {
    assert_eq!(count_semigroups(0), 1);
    for (n, expect) in [(1, 1), (2, 8), (3, 113)] {
        assert_eq!(count_semigroups(n), expect);
        assert_eq!(brute_count(n), expect);
    }
}

#[test]
fn fold_and_lift() {
    let z3 = SemigroupTable::cyclic_group(3);
    assert_eq!(em_fold(&z3, &[1, 2, 2]).unwrap(), 2);
    assert!(em_fold(&z3, &[]).is_err());
    // a noncommutative semigroup, left zero: a·b = a
    let left = SemigroupTable::new(vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
    assert_eq!(em_fold(&left, &[B, A, C]).unwrap(), B);
    let x = FinList::new(vec![A, B]).unwrap();
    let y = FinList::new(vec![C, A]).unwrap();
    // [x₁,x₂][y₁,y₂] = [x₁y₁, x₂y₁, y₁, y₂]
    assert_eq!(lift_v(&left, &x, &y).as_slice(), &[A, B, C, A]);
    assert_eq!(lift_v(&z3, &x, &y).as_slice(), &[2, 0, 2, 0]);
    let single = SemigroupTable::new(vec![vec![0]]).unwrap();
    let a = FinList::new(vec![0]).unwrap();
    assert_eq!(lift_v(&single, &a, &a).as_slice(), &[0, 0]);
}

#[test]
fn lifted_product_and_folds_on_all_small_semigroups() {
    for n in 1..=3 {
        for t in all_semigroups(n) {
            let r = check_lift_v(&t, 6);
            assert!(r.all_passed(), "{:?}: {:?}", t.table(), r.failures().collect::<Vec<_>>());
            assert!(check_em_algebra(&t, 4).all_passed());
        }
    }
}

#[test]
fn left_machine_expansion() {
    let z2 = SemigroupTable::cyclic_group(2);
    let g = 1;
    assert_eq!(rho_left_machine(&z2, &FinList::new(vec![g, g]).unwrap()).as_slice(), &[0, g]);
    let z3 = SemigroupTable::cyclic_group(3);
    assert_eq!(rho_left_machine(&z3, &FinList::new(vec![1, 2]).unwrap()).as_slice(), &[0, 2]);
    assert_eq!(rho_left_machine(&z3, &FinList::new(vec![2]).unwrap()).as_slice(), &[2]);
    for n in 1..=3 {
        for t in all_semigroups(n) {
            let r = check_rho(&t, 5);
            assert_eq!(r.entries.len(), 3);
            assert!(r.all_passed(), "{:?}: {:?}", t.table(), r.failures().collect::<Vec<_>>());
        }
    }
}

/// Every map `X → L⁺X` with lists no longer than `|X| + 1` whose lists start at their argument.
fn candidate_coalgebras(n: usize) -> Vec<Vec<Vec<usize>>> {
    let per_x: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|x| {
            enumerate_terms(n, 1, n + 1)
                .into_iter()
                .map(|t| t.as_atoms().unwrap())
                .filter(|v| v[0] == x)
                .collect()
        })
        .collect();
    per_x.iter().fold(vec![Vec::new()], |acc, options| {
        acc.into_iter()
            .flat_map(|prefix| options.iter().map(move |o| [prefix.clone(), vec![o.clone()]].concat()))
            .collect()
    })
}

#[test]
fn coalgebras_are_exactly_forests() {
    for n in 0..=3 {
        let forests = enumerate_forests(n);
        // rooted forests on n labeled vertices: (n+1)^(n−1)
        assert_eq!(forests.len(), (n + 1).pow(n.saturating_sub(1) as u32).max(1));
        let from_forests: Vec<Vec<Vec<usize>>> =
            forests.iter().map(|f| (0..n).map(|x| f.beta(x)).collect()).collect();
        assert!(from_forests.iter().all(|b| is_coalgebra(b)));
        let mut lawful: Vec<_> = candidate_coalgebras(n).into_iter().filter(|b| is_coalgebra(b)).collect();
        let mut expected = from_forests.clone();
        lawful.sort();
        expected.sort();
        assert_eq!(lawful, expected, "n = {n}");
    }
    assert!(Forest::new(vec![Some(1), Some(0)]).is_err());
    assert!(Forest::new(vec![Some(0)]).is_err());
}

#[test]
fn entwining_condition_on_one_element() {
    let t = SemigroupTable::new(vec![vec![0]]).unwrap();
    let f = Forest::new(vec![None]).unwrap();
    let (beta_xx, required) = entwining_sides(&t, &f, 0, 0);
    assert_eq!(beta_xx, vec![0]);
    assert_eq!(required, vec![0, 0]);
    assert_eq!(displayed_condition(&t, &f, 0, 0), vec![0, 0]);
}

#[test]
fn entwining_is_the_lifted_product() {
    // β(xy) is required to equal β(x)·β(y) in the lift
    for n in 1..=2 {
        for t in all_semigroups(n) {
            for f in enumerate_forests(n) {
                for (x, y) in (0..n).flat_map(|x| (0..n).map(move |y| (x, y))) {
                    let bx = FinList::new(f.beta(x)).unwrap();
                    let by = FinList::new(f.beta(y)).unwrap();
                    assert_eq!(entwining_sides(&t, &f, x, y).1, lift_v(&t, &bx, &by).as_slice());
                }
            }
        }
    }
}

#[test]
fn only_the_empty_semigroup_is_entwined() {
    let r = search_entwined(0, 3);
    assert_eq!((r.semigroups, r.entwined, r.entwined_displayed), (1, 1, 1));
    assert!(r.witnesses.is_empty());
    for (n, semigroups) in [(1, 1), (2, 8), (3, 113)] {
        let r = search_entwined(n, 2);
        assert_eq!(r.semigroups, semigroups);
        assert_eq!(r.forests_checked, semigroups * enumerate_forests(n).len());
        assert_eq!(r.entwined, 0, "n = {n}");
        assert_eq!(r.entwined_displayed, 0, "n = {n}");
        assert_eq!(r.witnesses.len(), 2.min(r.forests_checked));
        assert!(r.failing_at_root_square > 0);
    }
    let r = search_entwined(1, 5);
    let w = &r.witnesses[0];
    assert!(w.root_square);
    assert_eq!((w.beta_xy.len(), w.required.len()), (1, 2));
    let json = serde_json::to_value(&r).unwrap();
    for key in ["n", "semigroups", "entwined", "witnesses"] {
        assert!(json.get(key).is_some());
    }
}
