//! The descent algebra: the span of the sums `X^μ` of minimal right coset
//! representatives of Young subgroups, its structure constants, and the
//! Dynkin operator.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::linear::Algebra;
use crate::partition::Composition;
use crate::perm::{min_coset_reps, Permutation};
use crate::scalar::{Field, Scalar};

/// `X^μ`: the sum of the minimal-length representatives of the right cosets of `S_μ`.
pub fn descent_basis<T: Scalar>(mu: &Composition) -> GroupAlgebraElement<T> {
    GroupAlgebraElement::sum_of(mu.weight(), min_coset_reps(mu))
}

/// The longest element among the representatives in `X^μ`: blocks take the
/// largest remaining values first, increasing within each block. Its descent
/// set is exactly the set of proper partial sums of `μ`.
pub fn leading_permutation(mu: &Composition) -> Permutation {
    let n = mu.weight();
    let mut images = Vec::with_capacity(n);
    let mut hi = n;
    for &part in mu.parts() {
        images.extend(hi + 1 - part..=hi);
        hi -= part;
    }
    Permutation::new(&images).expect("block word is a permutation")
}

/// The Dynkin operator `ω_n = (1 − ζ_n)(1 − ζ_{n−1}) ⋯ (1 − ζ_2)`, with `ζ_k`
/// the descending k-cycle. `ω_1` is the identity.
pub fn dynkin_omega<T: Scalar>(n: usize) -> GroupAlgebraElement<T> {
    let one = GroupAlgebraElement::<T>::identity(n);
    (2..=n).rev().fold(one.clone(), |acc, k| {
        let factor = &one - &GroupAlgebraElement::from_perm(Permutation::descending_cycle(n, k));
        &acc * &factor
    })
}

/// Position of `μ` in [`Composition::all`] (lexicographically descending).
pub fn composition_position(mu: &Composition) -> usize {
    let count = |rest: usize| if rest == 0 { 1 } else { 1usize << (rest - 1) };
    let mut rest = mu.weight();
    let mut pos = 0;
    for &part in mu.parts() {
        // compositions sharing the prefix but with a larger part here come first
        for larger in part + 1..=rest {
            pos += count(rest - larger);
        }
        rest -= part;
    }
    pos
}

/// An element of the descent algebra in coordinates with respect to the
/// `X^μ`, ordered as in [`Composition::all`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentElement<T: Scalar> {
    n: usize,
    coords: Vec<T>,
}

impl<T: Scalar> DescentElement<T> {
    pub fn zero(n: usize) -> Self {
        DescentElement { n, coords: vec![T::zero(); 1 << (n - 1)] }
    }

    /// `X^μ` as a descent element.
    pub fn basis(mu: &Composition) -> Self {
        let mut d = Self::zero(mu.weight());
        d.coords[composition_position(mu)] = T::one();
        d
    }

    /// `X^{(n)}`, the identity.
    pub fn one(n: usize) -> Self {
        Self::basis(&Composition::single(n))
    }

    pub fn from_coords(n: usize, coords: Vec<T>) -> Result<Self> {
        if coords.len() != 1 << (n - 1) {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates for a descent algebra of dimension {}",
                coords.len(),
                1usize << (n - 1)
            )));
        }
        Ok(DescentElement { n, coords })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn coeff(&self, mu: &Composition) -> T {
        self.coords[composition_position(mu)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Nonzero coordinates keyed by composition.
    pub fn support(&self) -> BTreeMap<Composition, T> {
        Composition::all(self.n)
            .into_iter()
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| (mu, c.clone()))
            .collect()
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> DescentElement<U> {
        DescentElement { n: self.n, coords: self.coords.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect();
        DescentElement { n: self.n, coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect();
        DescentElement { n: self.n, coords }
    }

    pub fn scale(&self, c: &T) -> Self {
        DescentElement { n: self.n, coords: self.coords.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    /// `Σ_μ x_μ X^μ` in the group algebra.
    pub fn to_group_algebra(&self) -> GroupAlgebraElement<T> {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (mu, c) in Composition::all(self.n).iter().zip(&self.coords) {
            if c.is_zero() {
                continue;
            }
            for p in min_coset_reps(mu) {
                out.add_term(p, c.clone());
            }
        }
        out
    }

    /// Solves for X-coordinates. The coefficient of a permutation in
    /// `Σ x_ν X^ν` is `Σ_{S(ν) ⊇ Des(w)} x_ν`, so reading the coefficients
    /// of the leading permutations and inverting over the subset lattice
    /// recovers `x`. Fails if `g` is not in the span.
    pub fn from_group_algebra(g: &GroupAlgebraElement<T>) -> Result<Self> {
        let n = g.degree();
        if n == 0 {
            return Err(Error::InvalidArgument("degree zero".into()));
        }
        let size = 1usize << (n - 1);
        // f[D] = coefficient of the permutation with descent set exactly D
        let mut f = vec![T::zero(); size];
        for (mask, slot) in f.iter_mut().enumerate() {
            *slot = g.coeff(&leading_permutation(&Composition::from_descent_mask(n, mask as u64)));
        }
        for (p, c) in g.terms() {
            if *c != f[p.descent_mask() as usize] {
                return Err(Error::NotInDescentAlgebra(format!(
                    "coefficient of {p} differs from that of its descent class"
                )));
            }
        }
        // permutations absent from g must belong to descent classes with f = 0
        let mut class_sizes = vec![0usize; size];
        for p in g.terms().keys() {
            class_sizes[p.descent_mask() as usize] += 1;
        }
        for mask in 0..size {
            if !f[mask].is_zero() && class_sizes[mask] as u64 != descent_class_size(n, mask as u64) {
                return Err(Error::NotInDescentAlgebra(format!(
                    "descent class {} only partially present",
                    Composition::from_descent_mask(n, mask as u64)
                )));
            }
        }
        // Möbius inversion over supersets: x[S] = Σ_{D ⊇ S} (−1)^{|D∖S|} f[D]
        let mut x = f;
        for bit in 0..n - 1 {
            for mask in 0..size {
                if mask & (1 << bit) == 0 {
                    let upper = x[mask | (1 << bit)].clone();
                    x[mask] = x[mask].clone() - upper;
                }
            }
        }
        let comps = Composition::all(n);
        let mut coords = vec![T::zero(); size];
        for mu in &comps {
            coords[composition_position(mu)] = x[mu.descent_mask() as usize].clone();
        }
        Ok(DescentElement { n, coords })
    }
}

/// Number of permutations of `S_n` with descent set exactly `mask`.
pub fn descent_class_size(n: usize, mask: u64) -> u64 {
    // inclusion–exclusion over subsets of the descent set
    let mut total: i64 = 0;
    let mut sub = mask;
    loop {
        let count = Composition::from_descent_mask(n, sub).multinomial() as i64;
        let sign = if (mask ^ sub).count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * count;
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    total as u64
}

/// `X^λ X^μ = Σ_ν c_{λμν} X^ν`, computed in `Z S_n` and solved in the X-basis.
pub fn structure_constants(lambda: &Composition, mu: &Composition) -> Result<BTreeMap<Composition, i64>> {
    if lambda.weight() != mu.weight() {
        return Err(Error::DegreeMismatch(lambda.weight(), mu.weight()));
    }
    let product = descent_basis::<i64>(lambda).multiply(&descent_basis(mu))?;
    Ok(DescentElement::from_group_algebra(&product)?.support())
}

/// All structure constants of the descent algebra of degree `n`, over the integers.
#[derive(Debug)]
pub struct StructureTable {
    n: usize,
    compositions: Vec<Composition>,
    /// Sparse `(ν, c_{λμν})` lists, indexed by `λ * dim + μ`.
    entries: Vec<Vec<(usize, i64)>>,
}

impl StructureTable {
    pub fn compute(n: usize) -> Result<Self> {
        crate::error::check_capacity(n)?;
        let compositions = Composition::all(n);
        let bases: Vec<GroupAlgebraElement<i64>> = compositions.iter().map(descent_basis).collect();
        let mut entries = Vec::with_capacity(compositions.len() * compositions.len());
        for a in &bases {
            for b in &bases {
                let prod = DescentElement::from_group_algebra(&a.multiply(b)?)?;
                entries.push(prod.coords.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, &c)| (i, c)).collect());
            }
        }
        Ok(StructureTable { n, compositions, entries })
    }

    /// Shared table for degree `n`, computed on first use.
    pub fn cached(n: usize) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<StructureTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("structure table cache poisoned").get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(Self::compute(n)?);
        cache.lock().expect("structure table cache poisoned").entry(n).or_insert_with(|| Arc::clone(&table));
        Ok(table)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.compositions
    }

    pub fn dim(&self) -> usize {
        self.compositions.len()
    }

    /// `c_{λμν}` by positions.
    pub fn constant(&self, lambda: usize, mu: usize, nu: usize) -> i64 {
        self.entries[lambda * self.dim() + mu].iter().find(|(i, _)| *i == nu).map_or(0, |&(_, c)| c)
    }

    pub fn product_terms(&self, lambda: usize, mu: usize) -> &[(usize, i64)] {
        &self.entries[lambda * self.dim() + mu]
    }
}

/// The descent algebra over a coefficient ring, multiplying in X-coordinates.
#[derive(Clone, Debug)]
pub struct DescentAlgebra {
    table: Arc<StructureTable>,
}

impl DescentAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        Ok(DescentAlgebra { table: StructureTable::cached(n)? })
    }

    pub fn degree(&self) -> usize {
        self.table.n
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn mul_coords<T: Scalar>(&self, a: &[T], b: &[T]) -> Vec<T> {
        let d = self.dim();
        let mut out = vec![T::zero(); d];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x.clone() * y.clone();
                for &(k, c) in self.table.product_terms(i, j) {
                    out[k] = out[k].clone() + xy.clone() * T::from_i64(c);
                }
            }
        }
        out
    }

    pub fn mul<T: Scalar>(&self, a: &DescentElement<T>, b: &DescentElement<T>) -> DescentElement<T> {
        assert_eq!(a.n, self.degree(), "degree mismatch");
        assert_eq!(b.n, self.degree(), "degree mismatch");
        DescentElement { n: a.n, coords: self.mul_coords(&a.coords, &b.coords) }
    }
}

impl<F: Field> Algebra<F> for DescentAlgebra {
    fn dimension(&self) -> usize {
        self.dim()
    }

    fn multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.mul_coords(a, b)
    }
}
