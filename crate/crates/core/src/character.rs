//! Ordinary characters of `S_n`: the Murnaghan–Nakayama rule, characters of
//! right ideals `g Q S_n` with `g² = c g`, and decomposition into irreducibles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::GroupAlgebraElement;
use crate::classfn::ClassFunction;
use crate::error::{check_capacity, Error, Result};
use crate::partition::{factorial, Partition};
use crate::Rational;

/// An integer-valued class function, in the canonical order of [`Partition::all`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    n: usize,
    values: Vec<BigInt>,
}

impl CharacterVector {
    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> BigInt) -> Self {
        CharacterVector { n, values: Partition::all(n).iter().map(f).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| BigInt::zero())
    }

    /// Fails unless every value is an integer.
    pub fn from_rational(f: &ClassFunction<Rational>) -> Result<Self> {
        let values = f
            .iter()
            .map(|(lambda, v)| {
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::NotACharacter(format!("value {v} on class ({lambda}) is not an integer")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterVector { n: f.degree(), values })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, lambda: &Partition) -> &BigInt {
        let idx = Partition::all(self.n).iter().position(|l| l == lambda).expect("partition of the wrong weight");
        &self.values[idx]
    }

    /// The value at the identity class, i.e. the module dimension.
    pub fn dimension(&self) -> &BigInt {
        self.values.last().expect("S_n has at least one class")
    }

    pub fn iter(&self) -> impl Iterator<Item = (Partition, &BigInt)> {
        Partition::all(self.n).into_iter().zip(&self.values)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        CharacterVector { n: self.n, values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        CharacterVector { n: self.n, values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CharacterVector { n: self.n, values: self.values.iter().map(|a| a * c).collect() }
    }

    /// `Σ m_λ χ^λ`.
    pub fn combination(n: usize, multiplicities: &BTreeMap<Partition, u64>) -> Self {
        multiplicities
            .iter()
            .fold(Self::zero(n), |acc, (lambda, &m)| acc.add(&irreducible(lambda).scale(&BigInt::from(m))))
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lambda, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({lambda}):{v}")?;
        }
        Ok(())
    }
}

/// `χ^λ(μ)` by rim-hook removal on beta-numbers.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.weight(), mu.weight(), "weights differ");
    let mut memo = HashMap::new();
    mn_rec(lambda.parts().to_vec(), mu.parts(), &mut memo)
}

type Memo = HashMap<(Vec<usize>, usize), i64>;

fn mn_rec(lambda: Vec<usize>, hooks: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (lambda, hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let lambda = &key.0;
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &x)| x + (l - 1 - i)).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| b - r < c && c < b).count();
        let mut moved = beta.clone();
        moved[i] = b - r;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = moved.iter().enumerate().map(|(j, &c)| c - (l - 1 - j)).filter(|&x| x > 0).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The irreducible character `χ^λ`.
pub fn irreducible(lambda: &Partition) -> CharacterVector {
    let table = character_table(lambda.weight());
    let idx = Partition::all(lambda.weight()).iter().position(|l| l == lambda).expect("partition of its own weight");
    table[idx].clone()
}

/// All irreducible characters of `S_n`, rows indexed like [`Partition::all`].
pub fn character_table(n: usize) -> Arc<Vec<CharacterVector>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<CharacterVector>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("character table cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let table: Vec<CharacterVector> = Partition::all(n)
        .iter()
        .map(|lambda| CharacterVector::from_fn(n, |mu| BigInt::from(mn_character(lambda, mu))))
        .collect();
    let table = Arc::new(table);
    cache.lock().expect("character table cache poisoned").entry(n).or_insert_with(|| Arc::clone(&table));
    table
}

/// The scalar `c ≠ 0` with `g² = c g`.
pub fn quasi_idempotent_constant(g: &GroupAlgebraElement<Rational>) -> Result<Rational> {
    let (sigma, x) = g.terms().iter().next().ok_or(Error::NotQuasiIdempotent)?;
    let square = g.multiply(g)?;
    let c = square.coeff(sigma) / x.clone();
    if c.is_zero() || square != g.scale(&c) {
        return Err(Error::NotQuasiIdempotent);
    }
    Ok(c)
}

/// Character of the right ideal `g Q S_n`, for `g² = c g` with `c ≠ 0`:
/// the trace of right multiplication by `π` on it is
/// `|C_{S_n}(π)| · Σ_{τ ∈ class(π^{-1})} coeff_τ(g / c)`.
pub fn ideal_character(g: &GroupAlgebraElement<Rational>) -> Result<ClassFunction<Rational>> {
    let n = g.degree();
    check_capacity(n)?;
    let c = quasi_idempotent_constant(g)?;
    let mut by_class: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (tau, x) in g.terms() {
        // τ lies in the class of π^{-1} exactly when τ^{-1} has the cycle type of π
        let entry = by_class.entry(tau.inverse().cycle_type()).or_insert_with(Rational::zero);
        *entry = entry.clone() + x.clone();
    }
    Ok(ClassFunction::from_fn(n, |mu| {
        let sum = by_class.get(mu).cloned().unwrap_or_else(Rational::zero);
        sum / c.clone() * Rational::from_integer(BigInt::from(mu.centralizer_order()))
    }))
}

/// The same trace at a single class.
pub fn ideal_character_value(g: &GroupAlgebraElement<Rational>, mu: &Partition) -> Result<Rational> {
    Ok(ideal_character(g)?.value(mu))
}

/// `⟨χ, ψ⟩ = (1/n!) Σ_μ |C_μ| χ(μ) ψ(μ)`; characters of `S_n` are real.
pub fn inner_product(chi: &CharacterVector, psi: &CharacterVector) -> Rational {
    assert_eq!(chi.n, psi.n, "degree mismatch");
    let sum: BigInt = chi.iter().zip(psi.values()).map(|((mu, a), b)| a * b * BigInt::from(mu.class_size())).sum();
    Rational::new(sum, BigInt::from(factorial(chi.n)))
}

/// Multiplicities of the irreducible constituents (nonzero entries only).
/// Fails unless every multiplicity is a nonnegative integer.
pub fn decompose(chi: &CharacterVector) -> Result<BTreeMap<Partition, u64>> {
    let n = chi.n;
    let order = BigInt::from(factorial(n));
    let mut out = BTreeMap::new();
    for (lambda, irr) in Partition::all(n).into_iter().zip(character_table(n).iter()) {
        let sum: BigInt = chi.iter().zip(irr.values()).map(|((mu, a), b)| a * b * BigInt::from(mu.class_size())).sum();
        let (m, rem) = sum.div_rem(&order);
        if !rem.is_zero() {
            return Err(Error::NotACharacter(format!(
                "multiplicity of ({lambda}) is {}",
                Rational::new(sum, order.clone())
            )));
        }
        if m.is_negative() {
            return Err(Error::NotACharacter(format!("multiplicity of ({lambda}) is {m}")));
        }
        if !m.is_zero() {
            let m = m.to_u64().ok_or_else(|| Error::NotACharacter(format!("multiplicity of ({lambda}) overflows")))?;
            out.insert(lambda, m);
        }
    }
    if CharacterVector::combination(n, &out) != *chi {
        return Err(Error::InvariantViolated("constituents do not reconstruct the character".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=6 {
            let trivial = Partition::new(vec![n]).unwrap();
            let sign = Partition::new(vec![1; n]).unwrap();
            for mu in Partition::all(n) {
                assert_eq!(mn_character(&trivial, &mu), 1);
                assert_eq!(mn_character(&sign, &mu), mu.sign());
            }
        }
    }

    #[test]
    fn hook_length_degree() {
        // hook lengths of (3,2,1): 5 3 1 / 3 1 / 1
        let by_hooks = factorial(6) / (5 * 3 * 3);
        assert_eq!(mn_character(&part("3,2,1"), &part("1,1,1,1,1,1")) as u64, by_hooks);
        assert_eq!(by_hooks, 16);
    }

    #[test]
    fn regular_character_decomposes_by_degrees() {
        let regular = CharacterVector::from_fn(4, |mu| if mu.len() == 4 { BigInt::from(24) } else { BigInt::zero() });
        let m = decompose(&regular).unwrap();
        for lambda in Partition::all(4) {
            assert_eq!(m[&lambda] as i64, mn_character(&lambda, &part("1,1,1,1")));
        }
    }

    #[test]
    fn irreducible_decomposes_to_itself() {
        let m = decompose(&irreducible(&part("5"))).unwrap();
        assert_eq!(m, BTreeMap::from([(part("5"), 1)]));
    }

    #[test]
    fn non_characters_are_rejected() {
        let half = CharacterVector::from_fn(2, |mu| if mu.len() == 2 { BigInt::from(1) } else { BigInt::zero() });
        assert!(matches!(decompose(&half), Err(Error::NotACharacter(_))));
        let neg = irreducible(&part("2")).scale(&BigInt::from(-1));
        assert!(matches!(decompose(&neg), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn unit_and_trivial_ideals() {
        let n = 4;
        let regular = ideal_character(&GroupAlgebraElement::identity(n)).unwrap();
        for (mu, v) in regular.iter() {
            let expected = if mu.len() == n { 24 } else { 0 };
            assert_eq!(*v, Rational::from_integer(BigInt::from(expected)));
        }
        let trivial = ideal_character(&GroupAlgebraElement::sum_all(n)).unwrap();
        assert!(trivial.values().iter().all(|v| *v == Rational::from_integer(BigInt::from(1))));
    }

    #[test]
    fn non_proportional_square_is_rejected() {
        let h = GroupAlgebraElement::<Rational>::from_perm("2,3,1".parse().unwrap());
        assert_eq!(quasi_idempotent_constant(&h), Err(Error::NotQuasiIdempotent));
    }
}
