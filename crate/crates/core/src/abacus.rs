//! Abacus displays of partitions of `2p` on `p` runners with `2p` beads.
//!
//! Positions are numbered `0, 1, 2, …` row by row, so position `x` sits in
//! row `x / p` on runner `x % p + 1`. A partition `λ` (padded with zeros to
//! `2p` parts) places its beads at `λ_i + 2p − i`. A bead sees a gap for each
//! empty position above it on its runner; the total is the p-weight, and
//! `λ` lies in the principal block exactly when it is two.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::is_prime_u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusDisplay {
    p: usize,
    beads: BTreeSet<usize>,
}

/// Where the two gaps of a principal-block display lie.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GapLabel {
    /// `⟨i,j⟩`, `i ≤ j`: two beads each see one gap, on runners `i` and `j`.
    Pair(usize, usize),
    /// `⟨i⟩`: a single bead on runner `i` sees a gap of size two.
    Single(usize),
}

impl GapLabel {
    /// `⟨i,j⟩` in either order.
    pub fn pair(i: usize, j: usize) -> Self {
        GapLabel::Pair(i.min(j), i.max(j))
    }

    /// Every label for `p` runners.
    pub fn all(p: usize) -> Vec<GapLabel> {
        let pairs = (1..=p).flat_map(|i| (i..=p).map(move |j| GapLabel::Pair(i, j)));
        pairs.chain((1..=p).map(GapLabel::Single)).collect()
    }
}

impl fmt::Display for GapLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapLabel::Pair(i, j) => write!(f, "<{i},{j}>"),
            GapLabel::Single(i) => write!(f, "<{i}>"),
        }
    }
}

fn check_prime(p: usize) -> Result<()> {
    if p < 2 || !is_prime_u32(p as u32) {
        return Err(Error::NotPrime(p as u64));
    }
    Ok(())
}

impl AbacusDisplay {
    /// Exactly `2p` distinct bead positions.
    pub fn new(p: usize, beads: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_prime(p)?;
        let beads: BTreeSet<usize> = beads.into_iter().collect();
        if beads.len() != 2 * p {
            return Err(Error::InvalidArgument(format!("an abacus on {p} runners carries {} distinct beads", 2 * p)));
        }
        Ok(AbacusDisplay { p, beads })
    }

    pub fn runners(&self) -> usize {
        self.p
    }

    pub fn beads(&self) -> &BTreeSet<usize> {
        &self.beads
    }

    pub fn runner_of(&self, position: usize) -> usize {
        position % self.p + 1
    }

    pub fn row_of(&self, position: usize) -> usize {
        position / self.p
    }

    /// Rows down to the one holding the last bead; `true` marks a bead.
    pub fn grid(&self) -> Vec<Vec<bool>> {
        let last = *self.beads.last().expect("an abacus has beads");
        (0..=self.row_of(last))
            .map(|row| (0..self.p).map(|col| self.beads.contains(&(row * self.p + col))).collect())
            .collect()
    }

    /// For each bead, the empty positions above it on its runner.
    pub fn gaps_above(&self, bead: usize) -> usize {
        (0..self.row_of(bead)).filter(|row| !self.beads.contains(&(row * self.p + bead % self.p))).count()
    }

    /// Total number of gaps over all beads (the p-weight).
    pub fn gap_count(&self) -> usize {
        self.beads.iter().map(|&b| self.gaps_above(b)).sum()
    }

    /// The label of a two-gap display, `None` otherwise.
    pub fn gap_label(&self) -> Option<GapLabel> {
        if self.gap_count() != 2 {
            return None;
        }
        let seeing: Vec<(usize, usize)> =
            self.beads.iter().map(|&b| (self.runner_of(b), self.gaps_above(b))).filter(|&(_, g)| g > 0).collect();
        match seeing.as_slice() {
            [(i, 2)] => Some(GapLabel::Single(*i)),
            [(i, 1), (j, 1)] => Some(GapLabel::pair(*i, *j)),
            _ => None,
        }
    }

    /// Parts are the numbers of empty positions before each bead.
    pub fn partition(&self) -> Partition {
        let parts = self.beads.iter().enumerate().map(|(rank, &b)| b - rank).filter(|&x| x > 0).collect();
        Partition::from_unsorted(parts)
    }

    /// The display of a label: start from the beads filling rows 0 and 1 and
    /// slide beads down their runners.
    pub fn from_label(label: GapLabel, p: usize) -> Result<Self> {
        check_prime(p)?;
        let in_range = |i: usize| (1..=p).contains(&i);
        let mut beads: BTreeSet<usize> = (0..2 * p).collect();
        let mut slide = |runner: usize, from_row: usize, to_row: usize| {
            beads.remove(&(from_row * p + runner - 1));
            beads.insert(to_row * p + runner - 1);
        };
        match label {
            GapLabel::Single(i) if in_range(i) => slide(i, 1, 3),
            GapLabel::Pair(i, j) if in_range(i) && in_range(j) && i == j => {
                slide(i, 1, 2);
                slide(i, 0, 1);
            }
            GapLabel::Pair(i, j) if in_range(i) && in_range(j) => {
                slide(i, 1, 2);
                slide(j, 1, 2);
            }
            _ => return Err(Error::InvalidArgument(format!("label {label} needs runners in 1..={p}"))),
        }
        AbacusDisplay::new(p, beads)
    }
}

impl fmt::Display for AbacusDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.grid().iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<&str> = row.iter().map(|&b| if b { "●" } else { "·" }).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// The display of a partition of `2p`.
pub fn abacus_of_partition(lambda: &Partition, p: usize) -> Result<AbacusDisplay> {
    check_prime(p)?;
    let beads = 2 * p;
    if lambda.weight() != beads {
        return Err(Error::Weight { expected: beads, got: lambda.weight() });
    }
    let parts = lambda.parts();
    AbacusDisplay::new(p, (1..=beads).map(|i| parts.get(i - 1).copied().unwrap_or(0) + beads - i))
}

pub fn partition_of_abacus(display: &AbacusDisplay) -> Partition {
    display.partition()
}

/// The partition with a given label.
pub fn partition_of_label(label: GapLabel, p: usize) -> Result<Partition> {
    Ok(AbacusDisplay::from_label(label, p)?.partition())
}

/// Whether `λ ⊢ 2p` lies in the principal p-block: two gaps on its display.
pub fn principal_block_test(lambda: &Partition, p: usize) -> Result<bool> {
    Ok(abacus_of_partition(lambda, p)?.gap_count() == 2)
}

pub fn gap_label(display: &AbacusDisplay) -> Option<GapLabel> {
    display.gap_label()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn displayed_example_at_five() {
        let a = abacus_of_partition(&part("3,2,2,2,1"), 5).unwrap();
        assert_eq!(a.to_string(), "● ● ● ● ●\n· ● · ● ●\n● · ● · ·");
        assert_eq!(a.gap_label(), Some(GapLabel::Pair(1, 3)));
        assert_eq!(AbacusDisplay::from_label(GapLabel::pair(3, 1), 5).unwrap(), a);
    }

    #[test]
    fn sign_and_trivial_labels() {
        assert_eq!(partition_of_label(GapLabel::Pair(1, 1), 3).unwrap(), part("1,1,1,1,1,1"));
        assert_eq!(partition_of_label(GapLabel::Single(3), 3).unwrap(), part("6"));
        assert_eq!(partition_of_label(GapLabel::Pair(2, 3), 3).unwrap(), part("3,3"));
    }

    #[test]
    fn non_principal_example() {
        assert!(!principal_block_test(&part("2,2,1,1"), 3).unwrap());
        assert!(principal_block_test(&part("6"), 3).unwrap());
    }

    #[test]
    fn wrong_weight_and_runner() {
        assert_eq!(abacus_of_partition(&part("3,2"), 3), Err(Error::Weight { expected: 6, got: 5 }));
        assert!(AbacusDisplay::from_label(GapLabel::Single(4), 3).is_err());
        assert_eq!(abacus_of_partition(&part("2,2"), 4), Err(Error::NotPrime(4)));
    }
}
