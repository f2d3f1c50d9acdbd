//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Permutations act on the right: `i π` is `images[i - 1]`, and the product
//! `π σ` means "first π, then σ", so `i (π σ) = (i π) σ`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::partition::{factorial, Composition, Partition};

type Images = SmallVec<[u8; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    /// Builds a permutation from 1-based images.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &i in images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..{n}")));
            }
        }
        Ok(Permutation { images: images.iter().map(|&i| i as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u8).collect() }
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut images: Vec<usize> = (1..=n).collect();
            for (idx, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n {
                    return Err(Error::InvalidPermutation(format!("point {point} outside 1..{n}")));
                }
                images[point - 1] = cycle[(idx + 1) % cycle.len()];
            }
            acc = &acc * &Permutation::new(&images)?;
        }
        Ok(acc)
    }

    /// The descending cycle `(k k-1 ... 1)` in `S_n`: `i ↦ i - 1` for `2 ≤ i ≤ k`, `1 ↦ k`.
    pub fn descending_cycle(n: usize, k: usize) -> Self {
        assert!(1 <= k && k <= n, "cycle length {k} outside 1..={n}");
        let images = (1..=n)
            .map(|i| match i {
                1 => k as u8,
                i if i <= k => (i - 1) as u8,
                i => i as u8,
            })
            .collect();
        Permutation { images }
    }

    /// Standard representative of a conjugacy class: cycles on consecutive points.
    pub fn of_cycle_type(lambda: &Partition) -> Self {
        let mut images = Images::new();
        let mut start = 1;
        for &len in lambda.parts() {
            for j in 0..len {
                images.push((start + (j + 1) % len) as u8);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `i π` for a 1-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images: Images = smallvec::smallvec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { images }
    }

    /// `σ^{-1} self σ`, i.e. `i ↦ ((i σ^{-1}) self) σ`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Permutation {
        sigma.inverse().then(self).then(sigma)
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize - 1;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Bit `i - 1` is set when `i π > (i + 1) π`.
    pub fn descent_mask(&self) -> u64 {
        let mut mask = 0;
        for i in 0..self.degree().saturating_sub(1) {
            if self.images[i] > self.images[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Maps every block of `μ` (as a set of points) onto itself.
    pub fn preserves_blocks(&self, blocks: &[usize]) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| blocks[i] == blocks[x as usize - 1])
    }

    /// Position in the lexicographic order of one-line words (the Lehmer code rank).
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        let mut used: u32 = 0;
        for (i, &x) in self.images.iter().enumerate() {
            let smaller_unused = (x as u32 - 1) - (used & ((1u32 << (x - 1)) - 1)).count_ones();
            rank += smaller_unused as usize * factorial(n - 1 - i) as usize;
            used |= 1 << (x - 1);
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let mut images = Images::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial(i) as usize;
            images.push(pool.remove(rank / f));
            rank %= f;
        }
        Permutation { images }
    }

    /// All of `S_n` in rank order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..factorial(n) as usize).map(move |r| Permutation::unrank(n, r))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(&images)
    }
}

/// Minimal-length representatives of the right cosets of the Young subgroup
/// `S_μ`: the permutations whose one-line word increases on every block of
/// positions of `μ`. Returned in rank order.
pub fn min_coset_reps(mu: &Composition) -> Vec<Permutation> {
    let n = mu.weight();
    let allowed = mu.descent_mask();
    let mut out = Vec::with_capacity(mu.multinomial() as usize);
    // distribute values 1..=n into blocks; within a block the values are increasing
    let mut block_start = vec![0usize; mu.len()];
    for b in 1..mu.len() {
        block_start[b] = block_start[b - 1] + mu.parts()[b - 1];
    }
    let mut fill = vec![0usize; mu.len()];
    let mut images: Images = smallvec::smallvec![0; n];
    fn rec(
        value: usize,
        n: usize,
        mu: &[usize],
        block_start: &[usize],
        fill: &mut [usize],
        images: &mut Images,
        out: &mut Vec<Permutation>,
    ) {
        if value > n {
            out.push(Permutation { images: images.clone() });
            return;
        }
        for b in 0..mu.len() {
            if fill[b] < mu[b] {
                images[block_start[b] + fill[b]] = value as u8;
                fill[b] += 1;
                rec(value + 1, n, mu, block_start, fill, images, out);
                fill[b] -= 1;
            }
        }
    }
    rec(1, n, mu.parts(), &block_start, &mut fill, &mut images, &mut out);
    debug_assert!(out.iter().all(|w| w.descent_mask() & !allowed == 0));
    out.sort_by_key(Permutation::rank);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn left_to_right_composition() {
        // (1 2) then (2 3): 1 -> 2 -> 3
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        let ab = &a * &b;
        assert_eq!(ab.apply(1), 3);
        for i in 1..=3 {
            assert_eq!(ab.apply(i), b.apply(a.apply(i)));
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type().to_string(), "1,1,1");
        assert_eq!(Permutation::descending_cycle(6, 6).cycle_type().to_string(), "6");
        let p = Permutation::from_cycles(5, &[&[1, 2], &[3, 4, 5]]).unwrap();
        assert_eq!(p.cycle_type().to_string(), "3,2");
    }

    #[test]
    fn descending_cycle_images() {
        assert_eq!(Permutation::descending_cycle(4, 3), perm("3,1,2,4"));
        assert_eq!(Permutation::descending_cycle(2, 2), perm("2,1"));
    }

    #[test]
    fn rank_round_trip() {
        for n in 0..=5 {
            for (r, p) in Permutation::all(n).enumerate() {
                assert_eq!(p.rank(), r);
            }
        }
        assert_eq!(perm("1,2,3").rank(), 0);
        assert_eq!(perm("3,2,1").rank(), 5);
    }

    #[test]
    fn coset_reps() {
        let reps = min_coset_reps(&"3".parse().unwrap());
        assert_eq!(reps, vec![Permutation::identity(3)]);
        assert_eq!(min_coset_reps(&"1,1,1".parse().unwrap()).len(), 6);
        let reps = min_coset_reps(&"2,1".parse().unwrap());
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().all(|w| w.apply(1) < w.apply(2)));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(&[1, 1]).is_err());
        assert!(Permutation::new(&[0, 1]).is_err());
        assert!("1,3".parse::<Permutation>().is_err());
    }
}
