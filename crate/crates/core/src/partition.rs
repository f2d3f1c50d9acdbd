//! Compositions and partitions of an integer.
//!
//! Enumeration order is lexicographically descending throughout, so `(n)`
//! always comes first and `(1,...,1)` last.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{t}` in `{s}`"))))
        .collect()
}

fn write_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// An ordered sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition { parts })
    }

    /// The one-part composition `(n)`.
    pub fn single(n: usize) -> Self {
        Composition { parts: vec![n] }
    }

    /// `(k,...,k)` with `copies` parts.
    pub fn uniform(k: usize, copies: usize) -> Self {
        Composition { parts: vec![k; copies] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All compositions of `n`, lexicographically descending.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for first in (1..=rest).rev() {
                prefix.push(first);
                rec(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::with_capacity(1 << n.saturating_sub(1));
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Bit `s - 1` is set for every proper partial sum `s = μ_1 + ... + μ_i < n`.
    pub fn descent_mask(&self) -> u64 {
        let mut mask = 0;
        let mut acc = 0;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Inverse of [`Composition::descent_mask`].
    pub fn from_descent_mask(n: usize, mask: u64) -> Self {
        let mut parts = Vec::new();
        let mut last = 0;
        for s in 1..n {
            if mask & (1 << (s - 1)) != 0 {
                parts.push(s - last);
                last = s;
            }
        }
        parts.push(n - last);
        Composition { parts }
    }

    /// `self ≤ coarser`: `self` is a concatenation of compositions of the parts of `coarser`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.weight() != coarser.weight() {
            return false;
        }
        let fine = self.descent_mask();
        let coarse = coarser.descent_mask();
        coarse & !fine == 0
    }

    /// `n! / (μ_1! ⋯ μ_l!)`.
    pub fn multinomial(&self) -> u64 {
        // incremental binomials keep the intermediate values small
        let mut acc: u64 = 1;
        let mut total = 0u64;
        for &p in &self.parts {
            for i in 1..=p as u64 {
                total += 1;
                acc = acc * total / i;
            }
        }
        acc
    }

    /// Block index (0-based) of each point `1..=n`.
    pub fn block_of_points(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (b, &p) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat(b).take(p));
        }
        out
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidComposition(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All partitions of `n`, lexicographically descending.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for first in (1..=rest.min(max)).rev() {
                prefix.push(first);
                rec(rest - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Multiplicity of each part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation of this cycle type: `∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities().into_iter().map(|(i, m)| (i as u64).pow(m as u32) * factorial(m)).product()
    }

    /// Size of the conjugacy class of this cycle type in `S_n`.
    pub fn class_size(&self) -> u64 {
        factorial(self.weight()) / self.centralizer_order()
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.weight() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// No part occurs `p` or more times. Every partition is 0-regular.
    pub fn is_regular(&self, p: u64) -> bool {
        p == 0 || self.multiplicities().values().all(|&m| (m as u64) < p)
    }

    /// Some part is divisible by `p`.
    pub fn is_singular(&self, p: u64) -> bool {
        self.parts.iter().any(|&x| x as u64 % p == 0)
    }

    /// Cycle type of the p-regular part of a permutation of this cycle type:
    /// every part `k p^m` with `p ∤ k` becomes `p^m` parts equal to `k`.
    /// `p = 0` leaves the partition unchanged.
    pub fn regularize(&self, p: u64) -> Partition {
        if p == 0 {
            return self.clone();
        }
        let p = p as usize;
        let mut out = Vec::with_capacity(self.weight());
        for &part in &self.parts {
            let (mut k, mut copies) = (part, 1);
            while k % p == 0 {
                k /= p;
                copies *= p;
            }
            out.extend(std::iter::repeat(k).take(copies));
        }
        Partition::from_unsorted(out)
    }

    pub fn conjugate(&self) -> Partition {
        let len = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=len).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect();
        Partition { parts }
    }

    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.parts, f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// The partitions of `n` that are p-equivalent to a given p-regular partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PEquivClass {
    pub prime: u64,
    pub representative: Partition,
    /// In canonical (descending) order.
    pub members: Vec<Partition>,
}

impl PEquivClass {
    /// `|C_{μ,F}|`: the number of permutations whose cycle type lies in the class.
    pub fn permutation_count(&self) -> u64 {
        self.members.iter().map(Partition::class_size).sum()
    }
}

/// Groups the partitions of `n` into p-equivalence classes (equal
/// regularization). Each class has exactly one p-regular member, which is
/// its representative; classes are listed in the canonical order of their
/// representatives.
pub fn p_equiv_classes(n: usize, p: u64) -> Vec<PEquivClass> {
    let mut by_key: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lambda in Partition::all(n) {
        by_key.entry(lambda.regularize(p)).or_default().push(lambda);
    }
    let mut classes: Vec<PEquivClass> = by_key
        .into_values()
        .map(|members| {
            let mut regular = members.iter().filter(|m| m.is_regular(p));
            let representative = regular.next().expect("every p-equivalence class has a p-regular member").clone();
            debug_assert!(regular.next().is_none());
            PEquivClass { prime: p, representative, members }
        })
        .collect();
    classes.sort_by(|a, b| b.representative.cmp(&a.representative));
    classes
}

/// The p-regular partitions of `n` in canonical order.
pub fn regular_partitions(n: usize, p: u64) -> Vec<Partition> {
    Partition::all(n).into_iter().filter(|l| l.is_regular(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (1..=7).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15]);
        for n in 1..=7 {
            assert_eq!(Composition::all(n).len(), 1 << (n - 1));
        }
        let p4: Vec<String> = Partition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(Composition::all(3)[0], comp("3"));
        assert_eq!(*Composition::all(3).last().unwrap(), comp("1,1,1"));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(part("1,1,1,1,1,1").class_size(), 1);
        assert_eq!(part("6").class_size(), 120);
        assert_eq!(part("2,2,2").class_size(), 15);
        assert_eq!(part("3,3").class_size(), 40);
    }

    #[test]
    fn regularize_examples() {
        assert_eq!(part("6,3,2").regularize(2), part("3,3,3,1,1"));
        assert_eq!(part("6").regularize(3), part("2,2,2"));
        assert_eq!(part("5,4,1").regularize(3), part("5,4,1"));
    }

    #[test]
    fn p_equivalence_examples() {
        let classes = p_equiv_classes(6, 3);
        let six = classes.iter().find(|c| c.members.contains(&part("6"))).unwrap();
        assert_eq!(six.members, vec![part("6"), part("2,2,2")]);
        assert_eq!(six.representative, part("6"));
        assert_eq!(six.permutation_count(), 135);

        let classes = p_equiv_classes(6, 2);
        let six = classes.iter().find(|c| c.members.contains(&part("6"))).unwrap();
        assert_eq!(six.members, vec![part("6"), part("3,3")]);
        assert_eq!(six.permutation_count(), 160);

        assert!(p_equiv_classes(5, 7).iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn refinement_examples() {
        assert!(comp("1,2,3,2,1,2").refines(&comp("3,3,5")));
        assert!(comp("3,3").refines(&comp("3,3")));
        assert!(!comp("2,2,2").refines(&comp("3,3")));
        assert!(comp("2,2,2").refines(&comp("4,2")));
        assert!(!comp("2,2,2").refines(&comp("3,1,2")));
    }

    #[test]
    fn masks_round_trip() {
        for n in 1..=7 {
            for c in Composition::all(n) {
                assert_eq!(Composition::from_descent_mask(n, c.descent_mask()), c);
            }
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(comp("2,1").multinomial(), 3);
        assert_eq!(comp("1,1,1,1,1,1").multinomial(), 720);
        assert_eq!(comp("2,2,2").multinomial(), 90);
        assert_eq!(comp("7").multinomial(), 1);
    }

    #[test]
    fn conjugates() {
        assert_eq!(part("3,2,1").conjugate(), part("3,2,1"));
        assert_eq!(part("4,1").conjugate(), part("2,1,1,1"));
    }

    #[test]
    fn rejects_malformed() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Composition>().is_err());
        assert!("a".parse::<Composition>().is_err());
    }
}
