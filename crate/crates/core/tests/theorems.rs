use leibniz_core::algebra::check_fundamental_identity;
use leibniz_core::cartan::{check_lift_normalizer, check_thm31, is_cartan, regular_search};
use leibniz_core::catalog::{
    lift_leibniz, make_cartan_example, make_diagonal, make_e27_base, make_lpq,
};
use leibniz_core::exactlin::{int, Subspace};
use leibniz_core::structure::{ideal_i, ideal_j, quotient};

#[test]
fn family_members_satisfy_the_identity() {
    let algebras = [
        make_lpq(3, 4, 3, 2).unwrap(),
        make_lpq(4, 3, 2, 4).unwrap(),
        make_diagonal(3, 3, &[int(2), int(-2), int(5)]).unwrap(),
        make_cartan_example(4, 3).unwrap(),
        make_e27_base(4, 4).unwrap(),
        make_e27_base(6, 6).unwrap(),
    ];
    for l in &algebras {
        let r = check_fundamental_identity(l).unwrap();
        assert!(r.passed, "{}: {r}", l.name());
        assert_eq!(ideal_i(l), ideal_j(l), "{}", l.name());
    }
}

#[test]
fn lifts_of_binary_algebras_satisfy_the_identity() {
    for m in 4..=5 {
        let base = make_e27_base(m, m).unwrap();
        for n in 3..=4 {
            let lift = lift_leibniz(&base, n).unwrap();
            let r = check_fundamental_identity(&lift).unwrap();
            assert!(r.passed, "m={m} n={n}: {r}");
        }
    }
}

#[test]
fn normalizer_of_base_cartan_is_everything_in_the_lift() {
    let base = make_e27_base(5, 5).unwrap();
    let h = Subspace::coordinate(5, &[2]).unwrap();
    assert!(is_cartan(&base, &h).unwrap().is_cartan());
    for n in [3, 4, 5] {
        let report = check_lift_normalizer(&base, &h, n).unwrap();
        assert!(report.passed(), "n={n}\n{report}");
    }
    // a non-Cartan input is refused
    let e = Subspace::coordinate(5, &[0]).unwrap();
    assert!(check_lift_normalizer(&base, &e, 3).is_err());
}

#[test]
fn regular_null_components_are_nilpotent_subalgebras() {
    for l in [
        make_cartan_example(3, 4).unwrap(),
        make_cartan_example(4, 3).unwrap(),
        make_lpq(3, 4, 2, 3).unwrap(),
    ] {
        let r = regular_search(&l, 30, 11, 2).unwrap();
        let report = check_thm31(&l, &r).unwrap();
        assert!(report.passed(), "{}\n{report}", l.name());
    }
}

#[test]
fn quotients_of_families_are_antisymmetric() {
    for l in [
        make_lpq(3, 5, 3, 2).unwrap(),
        make_cartan_example(3, 4).unwrap(),
    ] {
        let p = quotient(&l, &ideal_i(&l)).unwrap();
        assert!(leibniz_core::algebra::skew_check(&p.quotient).all_hold());
        assert!(check_fundamental_identity(&p.quotient).unwrap().passed);
    }
}
