//! Lie modules `L_n = ω_n F S_n`, the symmetrizations `S^p(U)` and the
//! short exact sequences `0 → L_n → e_n F S_n → S^p(L_k) → 0` for `n = kp`.

use crate::algebra::GroupAlgebraElement;
use crate::descent::{descent_basis, dynkin_omega};
use crate::error::{check_capacity, Error, Result};
use crate::idempotent::{lift_idempotents, IdempotentSystem};
use crate::linear::{left_multiply_dense, right_ideal, Subspace};
use crate::partition::{factorial, p_equiv_classes, Composition, Partition};
use crate::scalar::{Field, Scalar};
use crate::wreath::{concat_power, WreathContext};

/// `L_n = ω_n F S_n`.
pub fn lie_module<F: Field>(n: usize) -> Result<Subspace<F>> {
    check_capacity(n)?;
    right_ideal(&dynkin_omega::<F>(n))
}

/// `S^p(U) = s_p^{[k]} e^{#p} F S_{kp}` for `U = e F S_k`; `e` must be idempotent.
pub fn symmetrized_module<F: Field>(e: &GroupAlgebraElement<F>, p: usize) -> Result<Subspace<F>> {
    let k = e.degree();
    check_capacity(k * p)?;
    if e.multiply(e)? != *e {
        return Err(Error::NotIdempotent);
    }
    let ctx = WreathContext::<F>::new(k, p);
    right_ideal(&(ctx.s_block() * &concat_power(e, p)))
}

/// `S^p(L_k) = s_p^{[k]} ω^κ F S_{kp}`, which needs no division by `k`.
pub fn symmetrized_lie_module<F: Field>(k: usize, p: usize) -> Result<Subspace<F>> {
    check_capacity(k * p)?;
    right_ideal(&WreathContext::<F>::new(k, p).symmetrized_lie_generator())
}

/// One named identity and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// Short ASCII identifier, stable across runs.
    pub key: String,
    /// The identity in mathematical notation.
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(key: impl Into<String>, name: impl Into<String>, pass: bool) -> Self {
        Check { key: key.into(), name: name.into(), pass }
    }
}

/// `X^μ ω_n = 0` for every `μ ≠ (n)` and `ω_n² = n ω_n`, over any coefficient ring.
pub fn dynkin_identities<T: Scalar>(n: usize) -> Result<Vec<Check>> {
    check_capacity(n)?;
    let omega = dynkin_omega::<T>(n);
    let top = Composition::single(n);
    let mut annihilated = true;
    for mu in Composition::all(n).into_iter().filter(|mu| *mu != top) {
        annihilated &= descent_basis::<T>(&mu).multiply(&omega)?.is_zero();
    }
    let square = omega.multiply(&omega)? == omega.scale(&T::from_i64(n as i64));
    Ok(vec![
        Check::new("dynkin-annihilation", format!("X^μ ω_{n} = 0 for μ ≠ ({n})"), annihilated),
        Check::new("dynkin-square", format!("ω_{n}² = {n} ω_{n}"), square),
    ])
}

/// The characteristic-free wreath identities for `κ = (k, …, k)` with `p` parts:
/// `X^κ ω_n = 0`, `X^μ ω^κ = 0` unless `κ ≤ μ`, and `X^κ ω^κ = s_p^{[k]} ω^κ`.
pub fn wreath_identities<T: Scalar>(k: usize, p: usize) -> Result<Vec<Check>> {
    let n = k * p;
    check_capacity(n)?;
    let ctx = WreathContext::<T>::new(k, p);
    let kappa = ctx.kappa().clone();
    let mut checks = Vec::new();
    if p > 1 {
        let omega_n = dynkin_omega::<T>(n);
        checks.push(Check::new("x-kappa-omega", "X^κ ω_n = 0", ctx.x_kappa().multiply(&omega_n)?.is_zero()));
    }
    let coarser: Vec<Composition> = Composition::all(n).into_iter().filter(|mu| !kappa.refines(mu)).collect();
    let mut vanish = true;
    for mu in &coarser {
        vanish &= descent_basis::<T>(mu).multiply(ctx.omega_kappa())?.is_zero();
    }
    checks.push(Check::new("refinement-vanishing", "X^μ ω^κ = 0 unless κ ≤ μ", vanish));
    let lhs = ctx.x_kappa().multiply(ctx.omega_kappa())?;
    checks.push(Check::new("x-kappa-omega-kappa", "X^κ ω^κ = s_p^[k] ω^κ", lhs == ctx.symmetrized_lie_generator()));
    Ok(checks)
}

/// Dimensions of the three terms `(dim L_n, dim e_n F S_n, dim S^p(L_k))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceDims {
    pub lie: usize,
    pub middle: usize,
    pub symmetrized: usize,
}

/// The outcome of checking `0 → L_n → e_n F S_n → S^p(L_k) → 0` over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport {
    pub n: usize,
    pub p: usize,
    pub k: usize,
    pub dims: SequenceDims,
    pub expected: SequenceDims,
    /// Dimension of the kernel of left multiplication by `X^κ` on `e_n F S_n`.
    pub kernel_dim: usize,
    /// Rank of left multiplication by `X^κ` on `e_n F S_n`.
    pub image_dim: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl SequenceReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Verifies the sequence for `n = kp` over `F = F_p`, lifting the idempotent system first.
pub fn verify_kp_sequence<F: Field>(k: usize, p: usize) -> Result<SequenceReport> {
    check_sequence_args::<F>(k, p)?;
    let system = lift_idempotents::<F>(k * p)?;
    verify_kp_sequence_with(k, p, &system)
}

/// As [`verify_kp_sequence`], with a given idempotent system of degree `kp`.
pub fn verify_kp_sequence_with<F: Field>(k: usize, p: usize, system: &IdempotentSystem<F>) -> Result<SequenceReport> {
    check_sequence_args::<F>(k, p)?;
    let n = k * p;
    if system.degree() != n {
        return Err(Error::DegreeMismatch(system.degree(), n));
    }
    let ctx = WreathContext::<F>::new(k, p);
    let omega_n = dynkin_omega::<F>(n);
    let e_n = system.top().to_group_algebra();
    let mut checks = Vec::new();

    checks.push(Check::new("top-idempotent-fixes-omega", "e_n ω_n = ω_n", e_n.multiply(&omega_n)? == omega_n));
    checks.push(Check::new("omega-square-zero", "ω_n² = 0", omega_n.multiply(&omega_n)?.is_zero()));
    checks.extend(wreath_identities::<F>(k, p)?);
    let lhs = ctx.x_kappa().multiply(&e_n)?.multiply(ctx.omega_kappa())?;
    checks.push(Check::new(
        "x-kappa-e-omega-kappa",
        "X^κ e_n ω^κ = s_p^[k] ω^κ",
        lhs == ctx.symmetrized_lie_generator(),
    ));

    let lie = right_ideal(&omega_n)?;
    let middle = right_ideal(&e_n)?;
    let symmetrized = right_ideal(&ctx.symmetrized_lie_generator())?;
    let size = factorial(n) as usize;
    let x_kappa = ctx.x_kappa();
    let image = middle.image(size, |v| left_multiply_dense(x_kappa, v));
    let dims = SequenceDims { lie: lie.dim(), middle: middle.dim(), symmetrized: symmetrized.dim() };
    let expected = expected_dims(k, p);
    let kernel_dim = middle.dim() - image.dim();

    checks.push(Check::new("lie-inside-middle", "L_n ⊆ e_n F S_n", middle.contains_subspace(&lie)));
    checks.push(Check::new(
        "x-kappa-kills-lie",
        "X^κ L_n = 0",
        lie.image(size, |v| left_multiply_dense(x_kappa, v)).is_zero(),
    ));
    checks.push(Check::new(
        "image-is-symmetrized",
        "X^κ e_n F S_n = S^p(L_k)",
        image.dim() == symmetrized.dim() && symmetrized.contains_subspace(&image),
    ));
    checks.push(Check::new("kernel-is-lie", "ker(X^κ on e_n F S_n) = L_n", kernel_dim == lie.dim()));
    checks.push(Check::new("dim-lie", "dim L_n = (n-1)!", dims.lie == expected.lie));
    checks.push(Check::new("dim-middle", "dim e_n F S_n = |C_(n),F|", dims.middle == expected.middle));
    checks.push(Check::new("dim-symmetrized", "dim S^p(L_k) = |C_κ|", dims.symmetrized == expected.symmetrized));
    checks.push(Check::new(
        "dims-additive",
        "dim L_n + dim S^p(L_k) = dim e_n F S_n",
        dims.lie + dims.symmetrized == dims.middle,
    ));

    let pass = checks.iter().all(|c| c.pass);
    Ok(SequenceReport { n, p, k, dims, expected, kernel_dim, image_dim: image.dim(), checks, pass })
}

/// `((n−1)!, |C_{(n),F}|, |C_κ|)` from class sizes alone.
pub fn expected_dims(k: usize, p: usize) -> SequenceDims {
    let n = k * p;
    let top = Partition::new(vec![n]).expect("single part");
    let middle = p_equiv_classes(n, p as u64)
        .into_iter()
        .find(|c| c.members.contains(&top))
        .map(|c| c.permutation_count())
        .expect("every partition lies in a class");
    let kappa = Partition::new(vec![k; p]).expect("equal parts");
    SequenceDims { lie: factorial(n - 1) as usize, middle: middle as usize, symmetrized: kappa.class_size() as usize }
}

fn check_sequence_args<F: Field>(k: usize, p: usize) -> Result<()> {
    if !crate::scalar::is_prime_u32(p as u32) {
        return Err(Error::NotPrime(p as u64));
    }
    if F::characteristic() != p as u64 {
        return Err(Error::InvalidArgument(format!(
            "the sequence for p = {p} needs a field of characteristic {p}, not {}",
            F::characteristic()
        )));
    }
    if k == 0 || k % p == 0 {
        return Err(Error::InvalidArgument(format!("k = {k} must be positive and prime to p = {p}")));
    }
    check_capacity(k * p)
}
