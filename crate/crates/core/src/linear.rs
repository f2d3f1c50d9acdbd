//! Dense exact linear algebra: subspaces of `F^N` in reduced echelon form.

use std::collections::BTreeMap;

use crate::algebra::GroupAlgebraElement;
use crate::error::{check_capacity, Error, Result};
use crate::partition::factorial;
use crate::perm::Permutation;
use crate::scalar::Field;

/// A finite-dimensional algebra with a fixed basis, multiplying coordinate vectors.
pub trait Algebra<F: Field> {
    fn dimension(&self) -> usize;
    fn multiply(&self, a: &[F], b: &[F]) -> Vec<F>;
}

/// Incremental row echelon form. Rows are normalized so that the pivot is one
/// and every entry left of the pivot is zero.
#[derive(Clone, Debug)]
pub struct EchelonBuilder<F: Field> {
    ambient: usize,
    rows: BTreeMap<usize, Vec<F>>,
}

impl<F: Field> EchelonBuilder<F> {
    pub fn new(ambient: usize) -> Self {
        EchelonBuilder { ambient, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows in place.
    pub fn reduce(&self, v: &mut [F]) {
        assert_eq!(v.len(), self.ambient, "vector length does not match the ambient dimension");
        for (&c, row) in &self.rows {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for j in c..self.ambient {
                if !row[j].is_zero() {
                    v[j] = v[j].clone() - f.clone() * row[j].clone();
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[c].inv().expect("nonzero pivot");
        for x in v[c..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.insert(c, v);
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|x| x.is_zero())
    }

    /// Back-substitutes to the reduced echelon form.
    pub fn finish(self) -> Subspace<F> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut rows: Vec<Vec<F>> = self.rows.into_values().collect();
        for i in (0..rows.len()).rev() {
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            let c = pivots[i];
            for row in above.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for j in c..pivot_row.len() {
                    if !pivot_row[j].is_zero() {
                        row[j] = row[j].clone() - f.clone() * pivot_row[j].clone();
                    }
                }
            }
        }
        Subspace { ambient: self.ambient, pivots, rows }
    }
}

/// A subspace of `F^N` stored as its reduced row echelon basis. The basis is
/// canonical: equal subspaces have identical rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, pivots: Vec::new(), rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut b = EchelonBuilder::new(ambient);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match the ambient dimension");
        let mut v = v.to_vec();
        for (&c, row) in self.pivots.iter().zip(&self.rows) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for j in c..self.ambient {
                if !row[j].is_zero() {
                    v[j] = v[j].clone() - f.clone() * row[j].clone();
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_compatible(other)?;
        Ok(Self::span(self.ambient, self.rows.iter().chain(&other.rows).cloned()))
    }

    /// Image under a linear map given on vectors.
    pub fn image(&self, target_dim: usize, f: impl Fn(&[F]) -> Vec<F>) -> Subspace<F> {
        Subspace::span(target_dim, self.rows.iter().map(|r| f(r)))
    }

    /// Dimension of the kernel of `f` restricted to this subspace.
    pub fn kernel_dim(&self, target_dim: usize, f: impl Fn(&[F]) -> Vec<F>) -> usize {
        self.dim() - self.image(target_dim, f).dim()
    }

    /// Span of all products `s t` with `s` in `self` and `t` in `other`.
    pub fn product(&self, other: &Subspace<F>, alg: &impl Algebra<F>) -> Result<Subspace<F>> {
        self.check_compatible(other)?;
        if alg.dimension() != self.ambient {
            return Err(Error::InvalidArgument(format!(
                "algebra of dimension {} acting on vectors of length {}",
                alg.dimension(),
                self.ambient
            )));
        }
        let mut b = EchelonBuilder::new(self.ambient);
        for s in &self.rows {
            for t in &other.rows {
                b.insert(alg.multiply(s, t));
                if b.rank() == self.ambient {
                    return Ok(b.finish());
                }
            }
        }
        Ok(b.finish())
    }

    /// The `m`-fold product `S S ⋯ S`; `m = 0` gives the whole algebra.
    pub fn power(&self, m: usize, alg: &impl Algebra<F>) -> Result<Subspace<F>> {
        if m == 0 {
            return Ok(Subspace::full(self.ambient));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            if acc.is_zero() {
                break;
            }
            acc = acc.product(self, alg)?;
        }
        Ok(acc)
    }

    fn check_compatible(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::InvalidArgument(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

pub fn unit_vector<F: Field>(len: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    v[i] = F::one();
    v
}

/// Basis of `{x : Σ_j x_j images[j] = 0}` where `images[j]` is the image of
/// the j-th unit vector.
pub fn kernel<F: Field>(images: &[Vec<F>], target_dim: usize) -> Subspace<F> {
    let source = images.len();
    // eliminate on [image | unit] and keep the rows whose image part vanished
    let mut b = EchelonBuilder::new(target_dim + source);
    for (j, img) in images.iter().enumerate() {
        assert_eq!(img.len(), target_dim, "image of the wrong length");
        let mut v = img.clone();
        v.extend(unit_vector::<F>(source, j));
        b.insert(v);
    }
    let full = b.finish();
    let kernel_rows =
        full.rows.iter().zip(&full.pivots).filter(|(_, &c)| c >= target_dim).map(|(r, _)| r[target_dim..].to_vec());
    Subspace::span(source, kernel_rows)
}

/// One particular solution of `Σ_j x_j columns[j] = rhs`, with free variables
/// set to zero. Pivots are chosen in column order.
pub fn solve<F: Field>(columns: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let m = rhs.len();
    let k = columns.len();
    // rows of the augmented system
    let mut a: Vec<Vec<F>> =
        (0..m).map(|i| columns.iter().map(|c| c[i].clone()).chain(std::iter::once(rhs[i].clone())).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=k {
                    a[i][j] = a[i][j].clone() - f.clone() * a[r][j].clone();
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); k];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][k].clone();
    }
    Some(x)
}

/// The group algebra `F S_n` on the basis of permutations in rank order.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    n: usize,
    perms: Vec<Permutation>,
}

impl GroupAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(GroupAlgebra { n, perms: Permutation::all(n).collect() })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }
}

impl<F: Field> Algebra<F> for GroupAlgebra {
    fn dimension(&self) -> usize {
        self.perms.len()
    }

    fn multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.perms.len()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let r = self.perms[i].then(&self.perms[j]).rank();
                out[r] = out[r].clone() + x.clone() * y.clone();
            }
        }
        out
    }
}

/// The right ideal `g F S_n`, spanned by `g π` for every `π` in `S_n`.
pub fn right_ideal<F: Field>(g: &GroupAlgebraElement<F>) -> Result<Subspace<F>> {
    let n = g.degree();
    check_capacity(n)?;
    let size = factorial(n) as usize;
    let terms: Vec<(&Permutation, &F)> = g.terms().iter().collect();
    let mut b = EchelonBuilder::new(size);
    // every generator is processed: the rank may still grow late in the sweep
    for pi in Permutation::all(n) {
        let mut v = vec![F::zero(); size];
        for (s, c) in &terms {
            v[s.then(&pi).rank()] = (*c).clone();
        }
        b.insert(v);
        if b.rank() == size {
            break;
        }
    }
    Ok(b.finish())
}

/// Left multiplication by `a` on dense coefficient vectors of `F S_n`.
pub fn left_multiply_dense<F: Field>(a: &GroupAlgebraElement<F>, v: &[F]) -> Vec<F> {
    let n = a.degree();
    let mut out = vec![F::zero(); v.len()];
    let terms: Vec<(&Permutation, &F)> = a.terms().iter().collect();
    for (r, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
        let sigma = Permutation::unrank(n, r);
        for (p, x) in &terms {
            let t = p.then(&sigma).rank();
            out[t] = out[t].clone() + (*x).clone() * y.clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use num_rational::BigRational;

    type F3 = Fp<3>;

    fn v3(xs: &[u64]) -> Vec<F3> {
        xs.iter().map(|&x| F3::new(x)).collect()
    }

    #[test]
    fn canonical_echelon_form() {
        let a = Subspace::span(3, [v3(&[1, 2, 0]), v3(&[0, 1, 1])]);
        let b = Subspace::span(3, [v3(&[1, 0, 1]), v3(&[1, 1, 2]), v3(&[2, 1, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v3(&[1, 0, 1])));
        assert!(!a.contains(&v3(&[0, 0, 1])));
    }

    #[test]
    fn zero_space_products() {
        let alg = GroupAlgebra::new(2).unwrap();
        let z = Subspace::<F3>::zero(2);
        let full = Subspace::<F3>::full(2);
        assert_eq!(z.dim(), 0);
        assert!(full.product(&z, &alg).unwrap().is_zero());
        assert_eq!(full.power(3, &alg).unwrap().dim(), 2);
    }

    #[test]
    fn kernel_and_solve() {
        // x ↦ (x0 + x1, x1 + x2) over F_3
        let images = vec![v3(&[1, 0]), v3(&[1, 1]), v3(&[0, 1])];
        let k = kernel(&images, 2);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], v3(&[1, 2, 1]));
        let x = solve(&images, &v3(&[1, 2])).unwrap();
        assert_eq!(x, v3(&[2, 2, 0]));
        let inconsistent = vec![v3(&[1, 1]), v3(&[2, 2])];
        assert!(solve(&inconsistent, &v3(&[1, 0])).is_none());
    }

    #[test]
    fn ideals_of_small_elements() {
        assert_eq!(right_ideal(&GroupAlgebraElement::<F3>::identity(3)).unwrap().dim(), 6);
        assert_eq!(right_ideal(&GroupAlgebraElement::<BigRational>::sum_all(3)).unwrap().dim(), 1);
        assert!(right_ideal(&GroupAlgebraElement::<F3>::zero(3)).unwrap().is_zero());
        assert!(matches!(right_ideal(&GroupAlgebraElement::<F3>::identity(8)), Err(Error::Capacity { n: 8, max: 7 })));
    }
}
