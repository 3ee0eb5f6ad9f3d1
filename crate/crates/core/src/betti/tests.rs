use super::*;
use crate::field::Fp;
use crate::graph::Graph;
use crate::groebner::initial_ideal;
use crate::poly::{edge_ideal, Ideal, Monomial, MonomialIdeal, Ring, Var};

fn fp() -> Fp {
    Fp::default()
}

fn mono(ring: &Ring, vars: &[Var]) -> Monomial {
    vars.iter()
        .fold(Monomial::one(ring.nvars()), |m, &v| m.mul(&ring.var_monomial(v)))
}

fn entries(t: &BettiTable) -> Vec<(usize, usize, u64)> {
    t.entries().collect()
}

#[test]
fn reduced_homology_examples() {
    // hollow triangle on {0,1,2}
    let hollow = [0b011, 0b101, 0b110];
    assert_eq!(reduced_homology_ranks(&hollow, fp()), vec![0, 0, 1]);
    assert_eq!(reduced_homology_ranks(&[0b111], fp()), vec![0, 0, 0, 0]);
    assert_eq!(reduced_homology_ranks(&[0b01, 0b10], fp()), vec![0, 1]);
    // the complex {∅}
    assert_eq!(reduced_homology_ranks(&[0], fp()), vec![1]);
    assert!(reduced_homology_ranks(&[], fp()).is_empty());
    // boundary of a tetrahedron
    let sphere = [0b0111, 0b1011, 0b1101, 0b1110];
    assert_eq!(reduced_homology_ranks(&sphere, fp()), vec![0, 0, 0, 1]);
}

#[test]
fn hochster_examples() {
    let r2 = Ring::new(2);
    let principal = MonomialIdeal::new(4, vec![mono(&r2, &[Var::X(1), Var::Y(2)])]);
    let t = betti_squarefree_hochster(&principal, fp()).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 1)]);

    let t = betti_squarefree_hochster(&initial_ideal(&Graph::path(3)), fp()).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);

    let t = betti_squarefree_hochster(&initial_ideal(&Graph::complete(3)), fp()).unwrap();
    assert_eq!(t.projective_dimension().unwrap(), 2);
    assert_eq!(t.depth().unwrap(), 4);

    let square = MonomialIdeal::new(4, vec![mono(&r2, &[Var::X(1), Var::X(1)])]);
    assert!(matches!(
        betti_squarefree_hochster(&square, fp()),
        Err(BettiError::NotSquarefree(_))
    ));
}

#[test]
fn restricted_hochster_matches_unrestricted_sum() {
    for g in [
        Graph::path(4),
        Graph::star(4),
        Graph::cycle(4),
        Graph::complete(4),
        Graph::new(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap(),
        Graph::new(4, &[(1, 3), (2, 4)]).unwrap(),
    ] {
        let ini = initial_ideal(&g);
        assert_eq!(
            betti_squarefree_hochster(&ini, fp()).unwrap(),
            betti_squarefree_hochster_unrestricted(&ini, fp()).unwrap(),
            "{g:?}"
        );
    }
}

#[test]
fn standard_monomial_counts() {
    let k2 = initial_ideal(&Graph::path(2));
    let std2 = standard_monomials(&k2, 2);
    assert_eq!(std2.len(), 9);
    let r2 = Ring::new(2);
    assert!(!std2.contains(&mono(&r2, &[Var::X(1), Var::Y(2)])));

    let zero = MonomialIdeal::zero(6);
    assert_eq!(standard_monomials(&zero, 1).len(), 6);
    assert_eq!(standard_monomials(&initial_ideal(&Graph::path(3)), 2).len(), 19);
}

#[test]
fn koszul_examples() {
    let t = betti_koszul(&edge_ideal(&Graph::path(2), fp()), 6).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 1)]);
    assert_eq!(
        (t.regularity().unwrap(), t.projective_dimension().unwrap(), t.depth().unwrap()),
        (1, 1, 3)
    );

    let t = betti_koszul(&edge_ideal(&Graph::path(3), fp()), 8).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
    assert_eq!((t.regularity().unwrap(), t.depth().unwrap()), (2, 4));

    let t = betti_koszul(&edge_ideal(&Graph::complete(3), fp()), 8).unwrap();
    assert_eq!(t.regularity().unwrap(), 1);
    // J_{K3} is the ideal of 2-minors of a generic 2x3 matrix (Eagon–Northcott).
    assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
}

#[test]
fn zero_ideal_table() {
    let zero = Ideal::zero(Ring::new(3), fp());
    let t = betti_koszul(&zero, 8).unwrap();
    assert_eq!(entries(&t), vec![(0, 0, 1)]);
    assert_eq!(
        (t.regularity().unwrap(), t.projective_dimension().unwrap(), t.depth().unwrap()),
        (0, 0, 6)
    );
    let t = betti_squarefree_hochster(&MonomialIdeal::zero(6), fp()).unwrap();
    assert_eq!(t.depth().unwrap(), 6);
}

#[test]
fn incomplete_tables_are_rejected() {
    let t = BettiTable::new(4, 101);
    assert_eq!(t.regularity(), Err(BettiError::Incomplete));
    assert_eq!(depth_of(&t), Err(BettiError::Incomplete));
}

#[test]
fn degree_cap_is_enforced() {
    let err = betti_koszul(&edge_ideal(&Graph::path(3), fp()), 3).unwrap_err();
    assert_eq!(err, BettiError::DegreeCapExceeded { needed: 4, cap: 3 });
}

#[test]
fn non_homogeneous_ideals_are_rejected() {
    let r = Ring::new(1);
    let fld = fp();
    let x = r.var_monomial(Var::X(1));
    let f = crate::poly::Polynomial::from_terms(
        fld,
        2,
        vec![(1, x.mul(&x)), (fld.neg(1), r.var_monomial(Var::Y(1)))],
    );
    let ideal = Ideal::new(r, fld, vec![f]).unwrap();
    assert_eq!(betti_koszul(&ideal, 8), Err(BettiError::NotHomogeneous));
}

#[test]
fn koszul_and_hochster_agree_on_initial_ideals() {
    for g in [
        Graph::path(4),
        Graph::star(4),
        Graph::cycle(4),
        Graph::cycle(5),
        Graph::complete(4),
    ] {
        let ini = initial_ideal(&g);
        let ring = Ring::new(g.n());
        let h = betti_squarefree_hochster(&ini, fp()).unwrap();
        let k = betti_koszul(&ini.to_ideal(ring, fp()), 2 * g.n() as u32 + 2).unwrap();
        assert_eq!(h, k, "{g:?}");
    }
}

#[test]
fn grading_choice_does_not_change_the_table() {
    for g in [Graph::path(4), Graph::cycle(4), Graph::star(4), Graph::complete(3)] {
        let basis = crate::groebner::buchberger(&edge_ideal(&g, fp())).unwrap();
        let standard = Grading::standard(2 * g.n());
        assert_eq!(
            betti_koszul_from_basis(&basis, 20).unwrap(),
            betti_koszul_graded(&basis, &standard, 20).unwrap(),
            "{g:?}"
        );
    }
}

#[test]
fn betti_numbers_of_j_are_bounded_by_the_initial_ideal() {
    for g in [Graph::path(4), Graph::cycle(4), Graph::star(4)] {
        let j = betti_koszul(&edge_ideal(&g, fp()), 20).unwrap();
        let ini = betti_squarefree_hochster(&initial_ideal(&g), fp()).unwrap();
        for (i, d, b) in j.entries() {
            assert!(b <= ini.get(i, d), "{g:?} {i} {d}");
        }
    }
}

#[test]
fn pruning_by_the_initial_ideal_is_exact() {
    for g in [
        Graph::path(4),
        Graph::cycle(4),
        Graph::star(4),
        Graph::complete(4),
        Graph::new(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap(),
    ] {
        let basis = crate::groebner::buchberger(&edge_ideal(&g, fp())).unwrap();
        for grading in [Grading::vertex(&basis.ring), Grading::standard(2 * g.n())] {
            assert_eq!(
                betti_koszul_graded(&basis, &grading, 20).unwrap(),
                koszul::betti_koszul_unpruned(&basis, &grading),
                "{g:?}"
            );
        }
    }
}

#[test]
fn json_shape() {
    let t = betti_squarefree_hochster(&initial_ideal(&Graph::path(3)), fp()).unwrap();
    assert_eq!(
        serde_json::to_string(&t).unwrap(),
        r#"{"p":32003,"entries":[[0,0,1],[1,2,2],[2,4,1]]}"#
    );
}
