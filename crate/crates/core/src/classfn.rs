//! Class functions, Young characters and the Solomon homomorphism.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::descent::DescentElement;
use crate::partition::{Composition, Partition};
use crate::perm::{min_coset_reps, Permutation};
use crate::scalar::Scalar;

/// A function on the conjugacy classes of `S_n`, stored in the canonical
/// order of [`Partition::all`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction<T: Scalar> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> ClassFunction<T> {
    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> T) -> Self {
        ClassFunction { n, values: Partition::all(n).iter().map(f).collect() }
    }

    pub fn constant(n: usize, c: T) -> Self {
        Self::from_fn(n, |_| c.clone())
    }

    pub fn zero(n: usize) -> Self {
        Self::constant(n, T::zero())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn value(&self, lambda: &Partition) -> T {
        let idx = Partition::all(self.n).iter().position(|l| l == lambda).expect("partition of the wrong weight");
        self.values[idx].clone()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Partition, &T)> {
        Partition::all(self.n).into_iter().zip(&self.values)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        ClassFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        ClassFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.clone() * b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        ClassFunction { n: self.n, values: self.values.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ClassFunction<U> {
        ClassFunction { n: self.n, values: self.values.iter().map(f).collect() }
    }
}

impl<T: Scalar> fmt::Display for ClassFunction<T> {
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

/// The Young character `φ^μ`: the number of right cosets of `S_μ` fixed by
/// right multiplication, i.e. of representatives `σ` with `σ π σ^{-1} ∈ S_μ`.
pub fn young_character(mu: &Composition) -> ClassFunction<i64> {
    let n = mu.weight();
    let reps = min_coset_reps(mu);
    let blocks = mu.block_of_points();
    ClassFunction::from_fn(n, |lambda| {
        let pi = Permutation::of_cycle_type(lambda);
        reps.iter().filter(|sigma| sigma.then(&pi).then(&sigma.inverse()).preserves_blocks(&blocks)).count() as i64
    })
}

/// All Young characters of degree `n`, indexed like [`Composition::all`].
pub fn young_table(n: usize) -> Arc<Vec<ClassFunction<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<ClassFunction<i64>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("young table cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let table = Arc::new(Composition::all(n).iter().map(young_character).collect::<Vec<_>>());
    cache.lock().expect("young table cache poisoned").entry(n).or_insert_with(|| Arc::clone(&table));
    table
}

/// `c_n`: `X^μ ↦ φ^μ`, extended linearly.
pub fn solomon_hom<T: Scalar>(d: &DescentElement<T>) -> ClassFunction<T> {
    let table = young_table(d.degree());
    let mut out = ClassFunction::<T>::zero(d.degree());
    for (x, phi) in d.coords().iter().zip(table.iter()) {
        if x.is_zero() {
            continue;
        }
        for (v, p) in out.values.iter_mut().zip(phi.values()) {
            *v = v.clone() + x.clone() * T::from_i64(*p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;

    #[test]
    fn trivial_young_character() {
        for n in 1..=5 {
            assert_eq!(young_character(&Composition::single(n)), ClassFunction::constant(n, 1));
        }
    }

    #[test]
    fn long_cycles_fix_no_coset() {
        let n = 5;
        let cycle = Partition::new(vec![n]).unwrap();
        for mu in Composition::all(n).into_iter().skip(1) {
            assert_eq!(young_character(&mu).value(&cycle), 0);
        }
    }

    #[test]
    fn regular_young_character() {
        let phi = young_character(&Composition::uniform(1, 4));
        for (lambda, v) in phi.iter() {
            let expected = if lambda.len() == 4 { factorial(4) as i64 } else { 0 };
            assert_eq!(*v, expected);
        }
    }

    #[test]
    fn identity_maps_to_one() {
        assert_eq!(solomon_hom(&DescentElement::<i64>::one(4)), ClassFunction::constant(4, 1));
    }
}
