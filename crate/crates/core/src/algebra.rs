//! Sparse elements of the group algebra `R S_n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::partition::factorial;
use crate::perm::Permutation;
use crate::scalar::Scalar;

/// Degrees up to this bound multiply through a dense accumulator indexed by rank.
const DENSE_LIMIT: usize = 8;

/// A finite formal combination of permutations of a fixed degree. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement<T: Scalar> {
    n: usize,
    terms: BTreeMap<Permutation, T>,
}

impl<T: Scalar> GroupAlgebraElement<T> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n))
    }

    pub fn from_perm(p: Permutation) -> Self {
        let n = p.degree();
        GroupAlgebraElement { n, terms: BTreeMap::from([(p, T::one())]) }
    }

    /// Sums repeated permutations and drops zero coefficients.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, T)>) -> Self {
        let mut out = Self::zero(n);
        for (p, c) in terms {
            assert_eq!(p.degree(), n, "permutation of the wrong degree");
            out.add_term(p, c);
        }
        out
    }

    /// Sum of the given permutations, each with coefficient one.
    pub fn sum_of(n: usize, perms: impl IntoIterator<Item = Permutation>) -> Self {
        Self::from_terms(n, perms.into_iter().map(|p| (p, T::one())))
    }

    /// `s_n`, the sum of all permutations of `S_n`.
    pub fn sum_all(n: usize) -> Self {
        Self::sum_of(n, Permutation::all(n))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, T> {
        &self.terms
    }

    pub fn coeff(&self, p: &Permutation) -> T {
        self.terms.get(p).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Permutation, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(p, x)| (p.clone(), x.clone() * c.clone())))
    }

    /// Applies a ring map to every coefficient, e.g. reduction modulo p.
    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> GroupAlgebraElement<U> {
        GroupAlgebraElement::from_terms(self.n, self.terms.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    /// Convolution product; fails on mismatched degrees.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        if self.n <= DENSE_LIMIT {
            let size = factorial(self.n) as usize;
            let mut acc: Vec<T> = vec![T::zero(); size];
            let mut touched = vec![false; size];
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    let r = a.then(b).rank();
                    acc[r] = std::mem::replace(&mut acc[r], T::zero()) + x.clone() * y.clone();
                    touched[r] = true;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(r, c)| touched[*r] && !c.is_zero())
                .map(|(r, c)| (Permutation::unrank(self.n, r), c))
                .collect();
            Ok(GroupAlgebraElement { n: self.n, terms })
        } else {
            let mut out = Self::zero(self.n);
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    out.add_term(a.then(b), x.clone() * y.clone());
                }
            }
            Ok(out)
        }
    }

    /// `self · π`.
    pub fn right_translate(&self, pi: &Permutation) -> Self {
        GroupAlgebraElement { n: self.n, terms: self.terms.iter().map(|(p, c)| (p.then(pi), c.clone())).collect() }
    }

    /// `π · self`.
    pub fn left_translate(&self, pi: &Permutation) -> Self {
        GroupAlgebraElement { n: self.n, terms: self.terms.iter().map(|(p, c)| (pi.then(p), c.clone())).collect() }
    }

    /// Coefficient vector indexed by permutation rank.
    pub fn to_dense(&self) -> Vec<T> {
        let mut v = vec![T::zero(); factorial(self.n) as usize];
        for (p, c) in &self.terms {
            v[p.rank()] = c.clone();
        }
        v
    }

    pub fn from_dense(n: usize, v: &[T]) -> Self {
        assert_eq!(v.len() as u64, factorial(n), "dense vector has the wrong length");
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (Permutation::unrank(n, r), c.clone()))
            .collect();
        GroupAlgebraElement { n, terms }
    }

    /// Line-oriented text: a header `n=<n> field=<tag>` followed by one
    /// `images<TAB>coefficient` line per term, in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={} field={}\n", self.n, T::tag());
        for (p, c) in &self.terms {
            let _ = writeln!(s, "{p}\t{c}");
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let (n, tag) = parse_header(header)?;
        if tag != T::tag() {
            return Err(Error::Parse(format!("field `{tag}` does not match `{}`", T::tag())));
        }
        let mut out = Self::zero(n);
        for line in lines.filter(|l| !l.is_empty()) {
            let (perm, coeff) =
                line.split_once('\t').ok_or_else(|| Error::Parse(format!("missing tab in `{line}`")))?;
            let p: Permutation = perm.parse()?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch(n, p.degree()));
            }
            let c = T::parse_coeff(coeff).ok_or_else(|| Error::Parse(format!("bad coefficient `{coeff}`")))?;
            if c.is_zero() || out.terms.contains_key(&p) {
                return Err(Error::Parse(format!("zero or repeated term `{line}`")));
            }
            out.terms.insert(p, c);
        }
        Ok(out)
    }
}

pub(crate) fn parse_header(header: &str) -> Result<(usize, String)> {
    let mut n = None;
    let mut field = None;
    for tok in header.split_whitespace() {
        match tok.split_once('=') {
            Some(("n", v)) => n = v.parse::<usize>().ok(),
            Some(("field", v)) => field = Some(v.to_string()),
            _ => return Err(Error::Parse(format!("unexpected header token `{tok}`"))),
        }
    }
    match (n, field) {
        (Some(n), Some(f)) => Ok((n, f)),
        _ => Err(Error::Parse(format!("malformed header `{header}`"))),
    }
}

impl<T: Scalar> Add for &GroupAlgebraElement<T> {
    type Output = GroupAlgebraElement<T>;
    fn add(self, rhs: Self) -> GroupAlgebraElement<T> {
        assert_eq!(self.n, rhs.n, "degree mismatch");
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &GroupAlgebraElement<T> {
    type Output = GroupAlgebraElement<T>;
    fn sub(self, rhs: Self) -> GroupAlgebraElement<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &GroupAlgebraElement<T> {
    type Output = GroupAlgebraElement<T>;
    fn neg(self) -> GroupAlgebraElement<T> {
        GroupAlgebraElement { n: self.n, terms: self.terms.iter().map(|(p, c)| (p.clone(), -c.clone())).collect() }
    }
}

impl<T: Scalar> Mul for &GroupAlgebraElement<T> {
    type Output = GroupAlgebraElement<T>;
    /// Panics on mismatched degrees; use [`GroupAlgebraElement::multiply`] to get an error instead.
    fn mul(self, rhs: Self) -> GroupAlgebraElement<T> {
        self.multiply(rhs).expect("degree mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use num_rational::BigRational;

    type Q = BigRational;

    fn tau() -> Permutation {
        "2,1".parse().unwrap()
    }

    #[test]
    fn unit_law() {
        let b =
            GroupAlgebraElement::<i64>::from_terms(3, [("2,3,1".parse().unwrap(), 4), ("1,3,2".parse().unwrap(), -1)]);
        assert_eq!(&GroupAlgebraElement::identity(3) * &b, b);
        assert_eq!(&b * &GroupAlgebraElement::identity(3), b);
    }

    #[test]
    fn omega_two_squared() {
        let w = &GroupAlgebraElement::<i64>::identity(2) - &GroupAlgebraElement::from_perm(tau());
        assert_eq!(&w * &w, w.scale(&2));
    }

    #[test]
    fn sign_and_trivial_idempotents_annihilate() {
        let one = GroupAlgebraElement::<Q>::identity(2);
        let t = GroupAlgebraElement::from_perm(tau());
        assert!((&(&one + &t) * &(&one - &t)).is_zero());
    }

    #[test]
    fn mismatched_degrees() {
        let a = GroupAlgebraElement::<i64>::identity(2);
        let b = GroupAlgebraElement::<i64>::identity(3);
        assert_eq!(a.multiply(&b), Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn text_round_trip() {
        let a = GroupAlgebraElement::<Q>::from_terms(
            3,
            [
                ("3,1,2".parse().unwrap(), Q::new(3.into(), 4.into())),
                ("1,2,3".parse().unwrap(), Q::from_integer((-2).into())),
            ],
        );
        let text = a.to_text();
        assert_eq!(text, "n=3 field=Q\n1,2,3\t-2\n3,1,2\t3/4\n");
        assert_eq!(GroupAlgebraElement::<Q>::from_text(&text).unwrap(), a);
        assert!(GroupAlgebraElement::<Fp<3>>::from_text(&text).is_err());
    }

    #[test]
    fn zero_coefficients_vanish() {
        let x = GroupAlgebraElement::<Fp<3>>::from_terms(2, [(tau(), Fp::new(1)), (tau(), Fp::new(2))]);
        assert!(x.is_zero());
    }
}
