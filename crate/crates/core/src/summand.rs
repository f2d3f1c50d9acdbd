//! Character-level checks on `S^p(L_2)` and `L_{2p}`: the principal block
//! component of the former and the non-projective summand of the latter,
//! both read off through abacus labels and compared with explicit formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;

use crate::abacus::{partition_of_label, principal_block_test, GapLabel};
use crate::character::{decompose, ideal_character, CharacterVector};
use crate::descent::dynkin_omega;
use crate::error::{check_capacity, Error, Result};
use crate::lie::Check;
use crate::partition::{factorial, Partition};
use crate::scalar::is_prime_u32;
use crate::wreath::WreathContext;
use crate::Rational;

/// Character of `L_n = ω_n Q S_n` (here `ω_n² = n ω_n`).
pub fn lie_character(n: usize) -> Result<CharacterVector> {
    CharacterVector::from_rational(&ideal_character(&dynkin_omega::<Rational>(n))?)
}

/// Character of `S^p(L_k) = s_p^{[k]} ω^κ Q S_{kp}`.
pub fn symmetrized_lie_character(k: usize, p: usize) -> Result<CharacterVector> {
    check_capacity(k * p)?;
    let g = WreathContext::<Rational>::new(k, p).symmetrized_lie_generator();
    CharacterVector::from_rational(&ideal_character(&g)?)
}

/// Partitions of `n` in which every part occurs an even number of times.
pub fn even_multiplicity_partitions(n: usize) -> Vec<Partition> {
    Partition::all(n).into_iter().filter(|mu| mu.multiplicities().values().all(|m| m % 2 == 0)).collect()
}

fn parts(groups: &[(usize, usize)]) -> Vec<usize> {
    groups.iter().flat_map(|&(part, copies)| std::iter::repeat(part).take(copies)).collect()
}

fn partition(groups: &[(usize, usize)]) -> Partition {
    Partition::from_unsorted(parts(groups).into_iter().filter(|&x| x > 0).collect())
}

/// `(1^{2p})` and `((2i+1)^2, 2^{p−2i−1})` for `1 ≤ i ≤ (p−1)/2`.
pub fn spl2_principal_partitions(p: usize) -> Vec<Partition> {
    let mut out = vec![partition(&[(1, 2 * p)])];
    out.extend((1..=(p - 1) / 2).map(|i| partition(&[(2 * i + 1, 2), (2, p - 2 * i - 1)])));
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Weights of `((2i+1)^2, 2^{p−2i+1})`, the other reading of the exponent.
pub fn spl2_printed_weights(p: usize) -> Vec<usize> {
    (1..=(p - 1) / 2).map(|i| parts(&[(2 * i + 1, 2), (2, p - 2 * i + 1)]).iter().sum()).collect()
}

/// `⟨1,1⟩ + Σ_{i=1}^{(p−1)/2} ⟨2i, 2i+1⟩`.
pub fn spl2_principal_labels(p: usize) -> Vec<GapLabel> {
    let mut out = vec![GapLabel::pair(1, 1)];
    out.extend((1..=(p - 1) / 2).map(|i| GapLabel::pair(2 * i, 2 * i + 1)));
    out
}

/// `(2,1^{2p−2})`, `(3,2^{p−2},1)` and, for `2 ≤ i ≤ (p−1)/2`,
/// `(2i+1, 2i, 2^{p−2i−1}, 1)`, `((2i−1)^2, 2^{p−2i+1})`, `(2i, 2i−1, 2^{p−2i}, 1)`.
pub fn twop_claim_partitions(p: usize) -> Vec<Partition> {
    let mut out = vec![partition(&[(2, 1), (1, 2 * p - 2)]), partition(&[(3, 1), (2, p - 2), (1, 1)])];
    for i in 2..=(p - 1) / 2 {
        out.push(partition(&[(2 * i + 1, 1), (2 * i, 1), (2, p - 2 * i - 1), (1, 1)]));
        out.push(partition(&[(2 * i - 1, 2), (2, p - 2 * i + 1)]));
        out.push(partition(&[(2 * i, 1), (2 * i - 1, 1), (2, p - 2 * i), (1, 1)]));
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `⟨2,2⟩ + ⟨3,1⟩ + Σ_{i=2}^{(p−1)/2} (⟨2i+1,2i−1⟩ + ⟨2i−1,2i−2⟩ + ⟨2i,2i−2⟩)`.
pub fn twop_claim_labels(p: usize) -> Vec<GapLabel> {
    let mut out = vec![GapLabel::pair(2, 2), GapLabel::pair(3, 1)];
    for i in 2..=(p - 1) / 2 {
        out.push(GapLabel::pair(2 * i + 1, 2 * i - 1));
        out.push(GapLabel::pair(2 * i - 1, 2 * i - 2));
        out.push(GapLabel::pair(2 * i, 2 * i - 2));
    }
    out
}

/// Partitions named by labels, sorted canonically.
pub fn partitions_of_labels(labels: &[GapLabel], p: usize) -> Result<Vec<Partition>> {
    let mut out = labels.iter().map(|&l| partition_of_label(l, p)).collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn check_odd_prime(p: usize) -> Result<()> {
    if p < 3 || !is_prime_u32(p as u32) {
        return Err(Error::InvalidArgument(format!("p = {p} must be an odd prime")));
    }
    check_capacity(2 * p)
}

fn multiplicity_one(parts: &[Partition]) -> BTreeMap<Partition, u64> {
    parts.iter().map(|mu| (mu.clone(), 1)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spl2Report {
    pub p: usize,
    pub character: CharacterVector,
    pub decomposition: BTreeMap<Partition, u64>,
    pub principal: BTreeMap<Partition, u64>,
    pub non_principal: BTreeMap<Partition, u64>,
    /// From the weight-consistent exponent `p − 2i − 1`.
    pub expected_principal: Vec<Partition>,
    /// From the labels `⟨1,1⟩ + Σ ⟨2i,2i+1⟩`.
    pub label_principal: Vec<Partition>,
    /// Weights under the exponent `p − 2i + 1`; they differ from `2p`.
    pub printed_exponent_weights: Vec<usize>,
    pub dimension: BigInt,
    pub expected_dimension: u64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Splits the character of `S^p(L_2)` by p-blocks and compares the principal part.
pub fn verify_spl2(p: usize) -> Result<Spl2Report> {
    check_odd_prime(p)?;
    let n = 2 * p;
    let character = symmetrized_lie_character(2, p)?;
    let decomposition = decompose(&character)?;
    let mut principal = BTreeMap::new();
    let mut non_principal = BTreeMap::new();
    for (mu, &m) in &decomposition {
        if principal_block_test(mu, p)? {
            principal.insert(mu.clone(), m);
        } else {
            non_principal.insert(mu.clone(), m);
        }
    }
    let expected_principal = spl2_principal_partitions(p);
    let label_principal = partitions_of_labels(&spl2_principal_labels(p), p)?;
    let expected_dimension = Partition::new(vec![2; p])?.class_size();
    let dimension = character.dimension().clone();
    let checks = vec![
        Check {
            key: "constituents".into(),
            name: "constituents are the χ^μ with every multiplicity of μ even".into(),
            pass: decomposition == multiplicity_one(&even_multiplicity_partitions(n)),
        },
        Check {
            key: "dim-symmetrized".into(),
            name: "dim S^p(L_2) = |C_(2^p)|".into(),
            pass: dimension == BigInt::from(expected_dimension),
        },
        Check {
            key: "principal-formula".into(),
            name: "principal part = χ^(1^2p) + Σ χ^((2i+1)^2,2^(p-2i-1))".into(),
            pass: principal == multiplicity_one(&expected_principal),
        },
        Check {
            key: "principal-labels".into(),
            name: "principal part = <1,1> + Σ <2i,2i+1>".into(),
            pass: principal == multiplicity_one(&label_principal),
        },
    ];
    let pass = checks.iter().all(|c| c.pass);
    Ok(Spl2Report {
        p,
        character,
        decomposition,
        principal,
        non_principal,
        expected_principal,
        label_principal,
        printed_exponent_weights: spl2_printed_weights(p),
        dimension,
        expected_dimension,
        checks,
        pass,
    })
}

/// Values of `χ_{L_{2p}}` and of the claimed summand character on one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComparison {
    pub class: Partition,
    pub lie: BigInt,
    pub claim: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPReport {
    pub p: usize,
    pub lie_character: CharacterVector,
    pub claim: Vec<Partition>,
    pub label_claim: Vec<Partition>,
    pub claim_dimension: BigInt,
    pub singular: Vec<ClassComparison>,
    /// `None` when the difference is not a genuine character.
    pub difference: Option<BTreeMap<Partition, u64>>,
    pub identity_difference: BigInt,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Compares `χ_{L_{2p}}` with the claimed non-projective summand character on
/// the p-singular classes, where projective characters vanish.
pub fn verify_2p(p: usize) -> Result<TwoPReport> {
    check_odd_prime(p)?;
    let n = 2 * p;
    let lie_character = lie_character(n)?;
    let claim = twop_claim_partitions(p);
    let label_claim = partitions_of_labels(&twop_claim_labels(p), p)?;
    let claim_character = CharacterVector::combination(n, &multiplicity_one(&claim));
    let singular: Vec<ClassComparison> = Partition::all(n)
        .into_iter()
        .filter(|mu| mu.is_singular(p as u64))
        .map(|mu| ClassComparison {
            lie: lie_character.value(&mu).clone(),
            claim: claim_character.value(&mu).clone(),
            class: mu,
        })
        .collect();
    let rest = lie_character.sub(&claim_character);
    let difference = decompose(&rest).ok();
    let identity_difference = rest.dimension().clone();
    let checks = vec![
        Check {
            key: "claim-labels".into(),
            name: "claimed partitions agree with their abacus labels".into(),
            pass: claim == label_claim,
        },
        Check {
            key: "dim-lie".into(),
            name: format!("dim L_{n} = ({n}-1)!"),
            pass: *lie_character.dimension() == BigInt::from(factorial(n - 1)),
        },
        Check {
            key: "singular-agreement".into(),
            name: "χ_L = χ_claim on every p-singular class".into(),
            pass: singular.iter().all(|c| c.lie == c.claim),
        },
        Check {
            key: "difference-genuine".into(),
            name: "χ_L − χ_claim has nonnegative integer multiplicities".into(),
            pass: difference.is_some(),
        },
        Check {
            key: "difference-divisible".into(),
            name: "p divides (χ_L − χ_claim)(1)".into(),
            pass: identity_difference.mod_floor(&BigInt::from(p)).is_zero(),
        },
    ];
    let pass = checks.iter().all(|c| c.pass);
    Ok(TwoPReport {
        p,
        claim_dimension: claim_character.dimension().clone(),
        lie_character,
        claim,
        label_claim,
        singular,
        difference,
        identity_difference,
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn formulas_at_three() {
        assert_eq!(spl2_principal_partitions(3), vec![part("3,3"), part("1,1,1,1,1,1")]);
        assert_eq!(twop_claim_partitions(3), vec![part("3,2,1"), part("2,1,1,1,1")]);
        assert_eq!(spl2_printed_weights(3), vec![10]);
    }

    #[test]
    fn formulas_have_weight_2p() {
        for p in [3, 5, 7, 11] {
            for mu in spl2_principal_partitions(p).iter().chain(&twop_claim_partitions(p)) {
                assert_eq!(mu.weight(), 2 * p, "p = {p}, μ = ({mu})");
            }
        }
    }

    #[test]
    fn even_multiplicities_of_six() {
        assert_eq!(even_multiplicity_partitions(6), vec![part("3,3"), part("2,2,1,1"), part("1,1,1,1,1,1")]);
    }

    #[test]
    fn ceiling_and_parity() {
        assert!(matches!(verify_spl2(5), Err(Error::Capacity { .. })));
        assert!(matches!(verify_2p(2), Err(Error::InvalidArgument(_))));
    }
}
