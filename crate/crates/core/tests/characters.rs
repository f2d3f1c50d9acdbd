use std::collections::BTreeMap;

use descent_lie::abacus::{
    abacus_of_partition, partition_of_abacus, partition_of_label, principal_block_test, GapLabel,
};
use descent_lie::algebra::GroupAlgebraElement;
use descent_lie::character::{character_table, decompose, ideal_character, mn_character, CharacterVector};
use descent_lie::descent::dynkin_omega;
use descent_lie::idempotent::lift_idempotents;
use descent_lie::linear::right_ideal;
use descent_lie::partition::factorial;
use descent_lie::summand::{
    partitions_of_labels, spl2_principal_labels, spl2_principal_partitions, symmetrized_lie_character,
    twop_claim_labels, twop_claim_partitions, verify_2p, verify_spl2,
};
use descent_lie::{Partition, Permutation, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn column_orthogonality() {
    for n in 1..=6 {
        let table = character_table(n);
        let classes = Partition::all(n);
        for (a, mu) in classes.iter().enumerate() {
            for (b, nu) in classes.iter().enumerate() {
                let sum: BigInt = table.iter().map(|chi| &chi.values()[a] * &chi.values()[b]).sum();
                let expected = if mu == nu { BigInt::from(mu.centralizer_order()) } else { BigInt::zero() };
                assert_eq!(sum, expected, "n = {n}, classes ({mu}) and ({nu})");
            }
        }
    }
}

#[test]
fn degrees_square_sum_to_order() {
    for n in 1..=7 {
        let id = Partition::new(vec![1; n]).unwrap();
        let sum: i64 = Partition::all(n).iter().map(|l| mn_character(l, &id).pow(2)).sum();
        assert_eq!(sum as u64, factorial(n));
    }
}

/// Removes rim hooks of length `p` from the Young diagram until none is left.
fn p_core(lambda: &Partition, p: usize) -> Partition {
    let mut rows: Vec<usize> = lambda.parts().to_vec();
    'outer: loop {
        let cols: Vec<usize> =
            (0..rows.first().copied().unwrap_or(0)).map(|c| rows.iter().filter(|&&r| r > c).count()).collect();
        for r in 0..rows.len() {
            for c in 0..rows[r] {
                let arm = rows[r] - c - 1;
                let leg = cols[c] - r - 1;
                if arm + leg + 1 == p {
                    let mut next = rows.clone();
                    for i in r..r + leg {
                        next[i] = rows[i + 1] - 1;
                    }
                    next[r + leg] = c;
                    rows = next.into_iter().filter(|&x| x > 0).collect();
                    continue 'outer;
                }
            }
        }
        return Partition::from_unsorted(rows);
    }
}

#[test]
fn abacus_round_trip_and_core_oracle() {
    for p in [3, 5] {
        let mut labels = Vec::new();
        for lambda in Partition::all(2 * p) {
            let display = abacus_of_partition(&lambda, p).unwrap();
            assert_eq!(partition_of_abacus(&display), lambda);
            let principal = principal_block_test(&lambda, p).unwrap();
            assert_eq!(principal, p_core(&lambda, p).is_empty(), "p = {p}, λ = ({lambda})");
            assert_eq!(display.gap_label().is_some(), principal);
            if let Some(l) = display.gap_label() {
                assert_eq!(partition_of_label(l, p).unwrap(), lambda);
                labels.push(l);
            }
        }
        labels.sort();
        assert_eq!(labels, {
            let mut all = GapLabel::all(p);
            all.sort();
            all
        });
    }
}

#[test]
fn displayed_abacus_at_five() {
    let display = abacus_of_partition(&part("3,2,2,2,1"), 5).unwrap();
    let grid: Vec<Vec<bool>> =
        ["●●●●●", "·●·●●", "●·●··"].iter().map(|r| r.chars().map(|c| c == '●').collect()).collect();
    assert_eq!(display.grid(), grid);
    assert_eq!(display.gap_label(), Some(GapLabel::Pair(1, 3)));
}

#[test]
fn character_of_symmetrized_lie_module() {
    let chi = symmetrized_lie_character(2, 3).unwrap();
    let expected: BTreeMap<Partition, u64> =
        [("3,3", 1), ("2,2,1,1", 1), ("1,1,1,1,1,1", 1)].iter().map(|(s, m)| (part(s), *m)).collect();
    assert_eq!(decompose(&chi).unwrap(), expected);
    assert_eq!(*chi.dimension(), BigInt::from(15));
}

#[test]
fn principal_part_at_three() {
    let r = verify_spl2(3).unwrap();
    assert!(r.pass, "{:?}", r.checks);
    assert_eq!(r.principal.keys().cloned().collect::<Vec<_>>(), vec![part("1,1,1,1,1,1"), part("3,3")]);
    assert_eq!(r.non_principal.keys().cloned().collect::<Vec<_>>(), vec![part("2,2,1,1")]);
}

#[test]
fn lie_summand_at_three() {
    let r = verify_2p(3).unwrap();
    assert!(r.pass, "{:?}", r.checks);
    let classes: Vec<Partition> = r.singular.iter().map(|c| c.class.clone()).collect();
    assert_eq!(classes, vec![part("6"), part("3,3"), part("3,2,1"), part("3,1,1,1")]);
    assert_eq!(r.claim_dimension, BigInt::from(21));
    assert_eq!(r.identity_difference, BigInt::from(99));
}

/// Trace of right multiplication by `pi` on `g Q S_n`, through an explicit basis.
fn direct_trace(g: &GroupAlgebraElement<Rational>, pi: &Permutation) -> Rational {
    let space = right_ideal(g).unwrap();
    let n = g.degree();
    space
        .basis()
        .iter()
        .zip(space.pivots())
        .map(|(row, &pivot)| {
            let moved = GroupAlgebraElement::from_dense(n, row).right_translate(pi).to_dense();
            // reduced echelon rows: the coordinate on a basis row is the pivot entry
            moved[pivot].clone()
        })
        .fold(Rational::zero(), |a, b| a + b)
}

#[test]
fn trace_formula_matches_direct_trace() {
    for n in 2..=5 {
        let omega = dynkin_omega::<Rational>(n);
        let chi = ideal_character(&omega).unwrap();
        for mu in [Partition::new(vec![n]).unwrap(), Partition::new(vec![1; n]).unwrap()] {
            assert_eq!(chi.value(&mu), direct_trace(&omega, &Permutation::of_cycle_type(&mu)), "n = {n}, ({mu})");
        }
    }
}

#[test]
fn idempotent_ideals_have_genuine_characters() {
    for n in 1..=4 {
        let system = lift_idempotents::<Rational>(n).unwrap();
        for (mu, e) in system.idempotents() {
            let chi = CharacterVector::from_rational(&ideal_character(&e.to_group_algebra()).unwrap()).unwrap();
            let m = decompose(&chi).unwrap();
            assert!(!m.is_empty(), "n = {n}, ({mu})");
        }
    }
}

#[test]
fn formulas_match_abacus_labels_for_larger_primes() {
    for p in [3, 5, 7] {
        assert_eq!(
            spl2_principal_partitions(p),
            partitions_of_labels(&spl2_principal_labels(p), p).unwrap(),
            "p = {p}"
        );
        assert_eq!(twop_claim_partitions(p), partitions_of_labels(&twop_claim_labels(p), p).unwrap(), "p = {p}");
    }
}
