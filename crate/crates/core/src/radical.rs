//! The radical of the descent algebra as the kernel of the Solomon homomorphism.

use crate::classfn::young_table;
use crate::descent::DescentAlgebra;
use crate::error::{Error, Result};
use crate::linear::{kernel, Subspace};
use crate::partition::Partition;
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub struct RadicalReport<F: Field> {
    pub n: usize,
    pub characteristic: u64,
    pub algebra_dim: usize,
    /// `ker c_{n,F}` in X-coordinates.
    pub kernel: Subspace<F>,
    /// Least `m` with `kernel^m = 0`.
    pub nilpotency_index: usize,
}

impl<F: Field> RadicalReport<F> {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }
}

/// Kernel of the Solomon homomorphism in X-coordinates.
pub fn solomon_kernel<F: Field>(n: usize) -> Subspace<F> {
    let classes = Partition::all(n).len();
    let images: Vec<Vec<F>> =
        young_table(n).iter().map(|phi| phi.values().iter().map(|&v| F::from_i64(v)).collect()).collect();
    kernel(&images, classes)
}

/// Computes `ker c_{n,F}` and the least power of it that vanishes.
pub fn radical_report<F: Field>(n: usize) -> Result<RadicalReport<F>> {
    let alg = DescentAlgebra::new(n)?;
    let kernel = solomon_kernel::<F>(n);
    let dim = alg.dim();
    let mut power = kernel.clone();
    let mut index = 1;
    while !power.is_zero() {
        if index >= dim {
            return Err(Error::NotNilpotent(dim));
        }
        power = power.product(&kernel, &alg)?;
        index += 1;
    }
    Ok(RadicalReport { n, characteristic: F::characteristic(), algebra_dim: dim, kernel, nilpotency_index: index })
}
