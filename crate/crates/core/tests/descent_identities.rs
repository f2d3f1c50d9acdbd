use descent_lie::classfn::{solomon_hom, young_character};
use descent_lie::descent::{descent_basis, dynkin_omega, structure_constants, DescentAlgebra};
use descent_lie::{Composition, DescentElement, GroupAlgebraElement, Scalar, F2, F3};

#[test]
fn descent_compositions_annihilate_omega() {
    for n in 1..=6 {
        let omega = dynkin_omega::<i64>(n);
        for mu in Composition::all(n).into_iter().skip(1) {
            assert!((&descent_basis::<i64>(&mu) * &omega).is_zero(), "X^{mu} ω_{n} ≠ 0");
        }
    }
}

#[test]
fn omega_squares_to_n_omega() {
    for n in 1..=6 {
        let omega = dynkin_omega::<i64>(n);
        assert_eq!(&omega * &omega, omega.scale(&(n as i64)), "n = {n}");
    }
}

#[test]
fn omega_is_nilpotent_when_p_divides_n() {
    let w = dynkin_omega::<F3>(6);
    assert!((&w * &w).is_zero());
    let w = dynkin_omega::<F2>(4);
    assert!((&w * &w).is_zero());
}

#[test]
fn omega_lies_in_the_descent_algebra() {
    for n in 1..=6 {
        let omega = dynkin_omega::<i64>(n);
        let d = DescentElement::from_group_algebra(&omega).unwrap();
        assert_eq!(d.to_group_algebra(), omega);
    }
}

#[test]
fn young_rule_matches_descent_rule() {
    for n in 1..=5 {
        let comps = Composition::all(n);
        for lambda in &comps {
            for mu in &comps {
                let c = structure_constants(lambda, mu).unwrap();
                let lhs = young_character(lambda).mul(&young_character(mu));
                let rhs = c
                    .iter()
                    .fold(descent_lie::ClassFunction::zero(n), |acc, (nu, k)| acc.add(&young_character(nu).scale(k)));
                assert_eq!(lhs, rhs, "λ = {lambda}, μ = {mu}");
            }
        }
    }
}

fn check_multiplicative<T: Scalar>(n: usize) {
    let alg = DescentAlgebra::new(n).unwrap();
    let comps = Composition::all(n);
    for lambda in &comps {
        for mu in &comps {
            let a = DescentElement::<T>::basis(lambda);
            let b = DescentElement::<T>::basis(mu);
            let lhs = solomon_hom(&alg.mul(&a, &b));
            let rhs = solomon_hom(&a).mul(&solomon_hom(&b));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn solomon_hom_is_multiplicative() {
    for n in 1..=5 {
        check_multiplicative::<i64>(n);
        check_multiplicative::<F2>(n);
        check_multiplicative::<F3>(n);
    }
}

#[test]
fn table_product_matches_group_algebra_product() {
    let n = 4;
    let alg = DescentAlgebra::new(n).unwrap();
    for lambda in Composition::all(n) {
        for mu in Composition::all(n) {
            let via_table = alg.mul(&DescentElement::<i64>::basis(&lambda), &DescentElement::basis(&mu));
            let via_group: GroupAlgebraElement<i64> = &descent_basis(&lambda) * &descent_basis(&mu);
            assert_eq!(via_table.to_group_algebra(), via_group);
        }
    }
}
