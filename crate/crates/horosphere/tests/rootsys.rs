use horosphere::horo::{Side, Variety};
use horosphere::rootsys::{CosetPoset, LieType, RootSystem, Weight, WeylElement};
use proptest::prelude::*;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn all_groups() -> Vec<RootSystem> {
    vec![
        RootSystem::new(LieType::B, 3).unwrap(),
        RootSystem::new(LieType::B, 4).unwrap(),
        RootSystem::new(LieType::C, 2).unwrap(),
        RootSystem::new(LieType::C, 3).unwrap(),
        RootSystem::new(LieType::C, 4).unwrap(),
        RootSystem::new(LieType::F4, 4).unwrap(),
        RootSystem::new(LieType::G2, 2).unwrap(),
    ]
}

#[test]
fn cartan_invariants() {
    for rs in all_groups() {
        for i in 0..rs.rank {
            assert_eq!(rs.cartan[i][i], 2);
            for j in 0..rs.rank {
                if i != j {
                    assert!(rs.cartan[i][j] <= 0);
                }
            }
        }
        assert_eq!(rs.positive_roots.len(), rs.longest_element_length());
        assert_eq!(rs.rho, w(&vec![1; rs.rank]));
    }
}

#[test]
fn unsupported_rank_is_rejected() {
    assert!(RootSystem::new(LieType::B, 2).is_err());
    assert!(RootSystem::new(LieType::C, 1).is_err());
    assert!(RootSystem::new(LieType::G2, 3).is_err());
    assert!(RootSystem::new(LieType::F4, 5).is_err());
}

#[test]
fn g2_roots_and_weights() {
    let rs = RootSystem::new(LieType::G2, 2).unwrap();
    let alpha = rs.simple_root(0);
    let beta = rs.simple_root(1);
    assert_eq!(alpha, w(&[2, -1]));
    // omega_beta - 2 omega_alpha = -alpha
    assert_eq!(&w(&[0, 1]) - &w(&[2, 0]), -&alpha);
    assert_eq!(rs.positive_roots.len(), 6);
    // beta is long: <beta, alpha^vee> = -3
    assert_eq!(beta.0[0], -3);
    let a = rs.positive_root_index(&alpha).unwrap();
    assert_eq!(rs.pair(&beta, a), -3);
}

#[test]
fn root_counts() {
    let counts = [(LieType::B, 3, 9), (LieType::B, 5, 25), (LieType::C, 3, 9), (LieType::C, 6, 36), (LieType::F4, 4, 24)];
    for (t, r, k) in counts {
        assert_eq!(RootSystem::new(t, r).unwrap().positive_roots.len(), k, "{t}{r}");
    }
}

#[test]
fn dot_action_examples() {
    let rs = RootSystem::new(LieType::G2, 2).unwrap();
    let e = WeylElement::identity();
    let sa = WeylElement { word: vec![0] };
    let alpha = rs.simple_root(0);
    assert_eq!(rs.dot_action(&e, &w(&[3, -7])), w(&[3, -7]));
    assert_eq!(rs.dot_action(&sa, &w(&[0, 0])), -&alpha);
    assert_eq!(rs.dot_action(&sa, &-&alpha), w(&[0, 0]));
}

#[test]
fn coset_poset_examples() {
    let g2 = RootSystem::new(LieType::G2, 2).unwrap();
    let q5 = CosetPoset::new(&g2, &[0]).unwrap();
    assert_eq!(q5.length_profile(), vec![1; 6]);

    let c3 = RootSystem::new(LieType::C, 3).unwrap();
    let ig26 = CosetPoset::new(&c3, &[1]).unwrap();
    assert_eq!(ig26.len(), 12);
    assert_eq!(ig26.length_profile(), vec![1, 1, 2, 2, 2, 2, 1, 1]);

    let b3 = RootSystem::new(LieType::B, 3).unwrap();
    let q6 = CosetPoset::new(&b3, &[2]).unwrap();
    assert_eq!(q6.len(), 8);
    assert_eq!(q6.length_profile(), vec![1, 1, 1, 2, 1, 1, 1]);
}

#[test]
fn poset_structure() {
    for rs in all_groups() {
        for p in 0..rs.rank {
            let poset = CosetPoset::new(&rs, &[p]).unwrap();
            let prof = poset.length_profile();
            assert_eq!(prof[0], 1);
            assert_eq!(*prof.last().unwrap(), 1);
            let rev: Vec<usize> = prof.iter().rev().copied().collect();
            assert_eq!(prof, rev, "{} P{p} palindromic", rs.name());
            for c in &poset.covers {
                assert_eq!(poset.nodes[c.to].length, poset.nodes[c.from].length + 1);
            }
            // every non-minimal node is covered, every non-maximal node covers something
            for k in 0..poset.len() {
                let up = poset.covers_from(k).count();
                let down = poset.covers.iter().filter(|c| c.to == k).count();
                assert_eq!(up == 0, k == poset.top(), "{} P{p} node {k}", rs.name());
                assert_eq!(down == 0, k == 0);
                let d = poset.dual(k);
                assert_eq!(poset.dual(d), k);
                assert_eq!(poset.nodes[k].length + poset.nodes[d].length, poset.max_length);
            }
            assert_eq!(poset.dual(0), poset.top());
            for k in 0..poset.len() {
                let keys: Vec<usize> = poset.chevalley_coeffs(&rs, k).iter().map(|c| c.0).collect();
                let covers: Vec<usize> = poset.covers_from(k).map(|c| c.to).collect();
                assert_eq!(keys, covers);
                assert!(poset.chevalley_coeffs(&rs, k).iter().all(|c| c.1 >= 1));
            }
            assert!(poset.chevalley_coeffs(&rs, poset.top()).is_empty());
        }
    }
}

#[test]
fn chevalley_coeff_examples() {
    let x5 = Variety::from_number(5, None, None).unwrap();
    let u1 = x5.node_by_name(Side::Y, "u_1").unwrap();
    let u2 = x5.node_by_name(Side::Y, "u_2").unwrap();
    assert_eq!(x5.poset_y.chevalley_coeffs(&x5.rs, u1), vec![(u2, 3)]);

    let x2 = Variety::from_number(2, None, None).unwrap();
    let u2 = x2.node_by_name(Side::Y, "u_2").unwrap();
    let u3 = x2.node_by_name(Side::Y, "u_3").unwrap();
    assert_eq!(x2.poset_y.chevalley_coeffs(&x2.rs, u2), vec![(u3, 2)]);
}

#[test]
fn poincare_dual_pairs_primed_nodes() {
    let x = Variety::from_number(1, Some(3), None).unwrap();
    let a = x.node_by_name(Side::Y, "u'_2").unwrap();
    let b = x.node_by_name(Side::Y, "u'_5").unwrap();
    assert_eq!(x.poset_y.dual(a), b);
}

#[test]
fn hat_image_examples() {
    let x5 = Variety::from_number(5, None, None).unwrap();
    let (v, drop) = x5.hat_image(x5.node_by_name(Side::Y, "u_2").unwrap());
    assert_eq!((x5.node_name(Side::Z, v), drop), ("v_1", 0));

    let x1 = Variety::from_number(1, Some(3), None).unwrap();
    let (v, drop) = x1.hat_image(x1.node_by_name(Side::Y, "u'_2").unwrap());
    assert_eq!((x1.node_name(Side::Z, v), drop), ("v_0", 0));
    // the image is too large for the expected codimension, so no tau-term
    let (_, drop) = x1.hat_image(x1.node_by_name(Side::Y, "u_2").unwrap());
    assert!(drop < 0);

    let x2 = Variety::from_number(2, None, None).unwrap();
    let (v, drop) = x2.hat_image(x2.node_by_name(Side::Y, "u_2").unwrap());
    assert_eq!((x2.node_name(Side::Z, v), drop), ("v_0", 0));
}

#[test]
fn tilde_lift_preserves_length() {
    for (c, n, m) in [(1, Some(3), None), (1, Some(5), None), (2, None, None), (3, Some(4), Some(3)), (4, None, None), (5, None, None)] {
        let x = Variety::from_number(c, n, m).unwrap();
        for side in [Side::Y, Side::Z] {
            let p = x.poset(side);
            assert_eq!(x.tilde_lift(side, 0), 0);
            for k in 0..p.len() {
                let t = x.tilde_lift(side, k);
                assert_eq!(x.poset_e.nodes[t].length, p.nodes[k].length);
            }
        }
    }
}

#[test]
fn longest_element_reverses_dominance() {
    for rs in all_groups() {
        let w0 = rs.longest_element();
        assert_eq!(w0.length(), rs.longest_element_length());
        assert!(rs.is_reduced(&w0));
        let img = rs.act(&w0, &rs.rho);
        assert!(img.0.iter().all(|&c| c < 0));
    }
}

fn g2_word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..2, 0..8)
}

fn b3_word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..3, 0..10)
}

proptest! {
    #[test]
    fn dot_action_is_a_group_action_g2(a in g2_word(), b in g2_word(), x in -8i64..8, y in -8i64..8) {
        let rs = RootSystem::new(LieType::G2, 2).unwrap();
        let wa = WeylElement { word: a };
        let wb = WeylElement { word: b };
        let l = w(&[x, y]);
        prop_assert_eq!(rs.dot_action(&wa, &rs.dot_action(&wb, &l)), rs.dot_action(&wa.compose(&wb), &l));
    }

    #[test]
    fn dot_action_is_a_group_action_b3(a in b3_word(), b in b3_word(), l in prop::collection::vec(-5i64..5, 3)) {
        let rs = RootSystem::new(LieType::B, 3).unwrap();
        let wa = WeylElement { word: a };
        let wb = WeylElement { word: b };
        let l = Weight(l);
        prop_assert_eq!(rs.dot_action(&wa, &rs.dot_action(&wb, &l)), rs.dot_action(&wa.compose(&wb), &l));
    }

    #[test]
    fn normal_form_is_canonical(a in b3_word()) {
        let rs = RootSystem::new(LieType::B, 3).unwrap();
        let wa = WeylElement { word: a };
        let nf = rs.normal_form(&wa);
        prop_assert!(rs.is_reduced(&nf));
        prop_assert!(rs.same_element(&nf, &wa));
        prop_assert_eq!(nf.length(), rs.element_length(&wa));
        prop_assert!(rs.same_element(&wa.compose(&wa.inverse()), &WeylElement::identity()));
    }
}
