//! The wreath-product embeddings `#` and `·^{[k]}` and the distinguished
//! elements of `F S_{kp}` built from them.

use crate::algebra::GroupAlgebraElement;
use crate::descent::{descent_basis, dynkin_omega};
use crate::partition::Composition;
use crate::perm::Permutation;
use crate::scalar::Scalar;

/// `α # β ∈ S_{a+b}`: `i ↦ iα` for `i ≤ a`, `a + i ↦ a + iβ` otherwise.
pub fn concat_embed(alpha: &Permutation, beta: &Permutation) -> Permutation {
    let a = alpha.degree();
    let images: Vec<usize> = alpha.images().chain(beta.images().map(|x| x + a)).collect();
    Permutation::new(&images).expect("block-diagonal word is a permutation")
}

/// `α_1 # α_2 # ⋯ # α_m`.
pub fn concat_all<'a>(factors: impl IntoIterator<Item = &'a Permutation>) -> Permutation {
    let images: Vec<usize> = factors
        .into_iter()
        .scan(0, |offset, f| {
            let shifted: Vec<usize> = f.images().map(|x| x + *offset).collect();
            *offset += f.degree();
            Some(shifted)
        })
        .flatten()
        .collect();
    Permutation::new(&images).expect("block-diagonal word is a permutation")
}

/// Bilinear extension of `#` to group algebra elements.
pub fn concat_elements<T: Scalar>(a: &GroupAlgebraElement<T>, b: &GroupAlgebraElement<T>) -> GroupAlgebraElement<T> {
    let n = a.degree() + b.degree();
    let mut out = GroupAlgebraElement::zero(n);
    for (alpha, x) in a.terms() {
        for (beta, y) in b.terms() {
            out.add_term(concat_embed(alpha, beta), x.clone() * y.clone());
        }
    }
    out
}

/// `a # a # ⋯ # a` with `p` factors.
pub fn concat_power<T: Scalar>(a: &GroupAlgebraElement<T>, p: usize) -> GroupAlgebraElement<T> {
    assert!(p >= 1, "empty concatenation power");
    (1..p).fold(a.clone(), |acc, _| concat_elements(&acc, a))
}

/// `π^{[k]} ∈ S_{kp}` for `π ∈ S_p`: `(ik − j) π^{[k]} = (iπ)k − j`, moving
/// the k-blocks of points as `π` moves `1..p`.
pub fn block_embed(pi: &Permutation, k: usize) -> Permutation {
    let images: Vec<usize> = pi.images().flat_map(|ip| (1..=k).map(move |r| (ip - 1) * k + r)).collect();
    Permutation::new(&images).expect("block permutation is a permutation")
}

/// Linear extension of the block embedding.
pub fn block_embed_element<T: Scalar>(a: &GroupAlgebraElement<T>, k: usize) -> GroupAlgebraElement<T> {
    GroupAlgebraElement::from_terms(a.degree() * k, a.terms().iter().map(|(p, c)| (block_embed(p, k), c.clone())))
}

/// The elements of `F S_{kp}` attached to `κ = (k, …, k)` with `p` parts.
#[derive(Clone, Debug)]
pub struct WreathContext<T: Scalar> {
    k: usize,
    p: usize,
    kappa: Composition,
    omega_kappa: GroupAlgebraElement<T>,
    s_block: GroupAlgebraElement<T>,
    x_kappa: GroupAlgebraElement<T>,
}

impl<T: Scalar> WreathContext<T> {
    pub fn new(k: usize, p: usize) -> Self {
        assert!(k >= 1 && p >= 1, "k and p must be positive");
        WreathContext {
            k,
            p,
            kappa: Composition::uniform(k, p),
            omega_kappa: concat_power(&dynkin_omega(k), p),
            s_block: block_embed_element(&GroupAlgebraElement::sum_all(p), k),
            x_kappa: descent_basis(&Composition::uniform(k, p)),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k * self.p
    }

    pub fn kappa(&self) -> &Composition {
        &self.kappa
    }

    /// `ω^κ = ω_k # ⋯ # ω_k`.
    pub fn omega_kappa(&self) -> &GroupAlgebraElement<T> {
        &self.omega_kappa
    }

    /// `s_p^{[k]}`, the block embedding of the sum of all of `S_p`.
    pub fn s_block(&self) -> &GroupAlgebraElement<T> {
        &self.s_block
    }

    pub fn x_kappa(&self) -> &GroupAlgebraElement<T> {
        &self.x_kappa
    }

    /// `s_p^{[k]} ω^κ`, the generator of `S^p(L_k)`.
    pub fn symmetrized_lie_generator(&self) -> GroupAlgebraElement<T> {
        &self.s_block * &self.omega_kappa
    }
}
