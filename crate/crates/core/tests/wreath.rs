use descent_lie::algebra::GroupAlgebraElement;
use descent_lie::wreath::{block_embed, concat_all, concat_elements};
use descent_lie::Permutation;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// `(α_1 # ⋯ # α_p)(β_1 # ⋯ # β_p) = (α_1β_1) # ⋯ # (α_pβ_p)`.
fn concat_is_multiplicative(alphas: &[Permutation], betas: &[Permutation]) -> bool {
    let products: Vec<Permutation> = alphas.iter().zip(betas).map(|(a, b)| a.then(b)).collect();
    concat_all(alphas).then(&concat_all(betas)) == concat_all(&products)
}

/// `π^{[k]}(α_1 # ⋯ # α_p) = (α_{1π} # ⋯ # α_{pπ}) π^{[k]}`.
fn block_commutes(pi: &Permutation, alphas: &[Permutation]) -> bool {
    let k = alphas[0].degree();
    let permuted: Vec<Permutation> = (1..=alphas.len()).map(|i| alphas[pi.apply(i) - 1].clone()).collect();
    block_embed(pi, k).then(&concat_all(alphas)) == concat_all(&permuted).then(&block_embed(pi, k))
}

fn tuples(k: usize, p: usize) -> Vec<Vec<Permutation>> {
    let group: Vec<Permutation> = Permutation::all(k).collect();
    (0..p).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                group.iter().map(move |g| {
                    let mut t = t.clone();
                    t.push(g.clone());
                    t
                })
            })
            .collect()
    })
}

#[test]
fn exhaustive_small_wreath_identities() {
    for k in 1..=2 {
        for p in 1..=3 {
            let all = tuples(k, p);
            for a in &all {
                for b in &all {
                    assert!(concat_is_multiplicative(a, b));
                }
                for pi in Permutation::all(p) {
                    assert!(block_commutes(&pi, a), "k = {k}, π = {pi}, α = {a:?}");
                }
            }
        }
    }
}

#[test]
fn random_wreath_identities_k3_p2() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let group: Vec<Permutation> = Permutation::all(3).collect();
    let pick = |rng: &mut StdRng| -> Vec<Permutation> { (0..2).map(|_| group.choose(rng).unwrap().clone()).collect() };
    for _ in 0..2000 {
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        let pi = Permutation::unrank(2, rand::Rng::gen_range(&mut rng, 0..2));
        assert!(concat_is_multiplicative(&a, &b));
        assert!(block_commutes(&pi, &a));
    }
}

#[test]
fn block_embedding_is_multiplicative() {
    for p in 1..=4 {
        let group: Vec<Permutation> = Permutation::all(p).collect();
        for k in 1..=2 {
            for pi in &group {
                for sigma in &group {
                    assert_eq!(block_embed(&pi.then(sigma), k), block_embed(pi, k).then(&block_embed(sigma, k)));
                }
            }
        }
    }
}

#[test]
fn concatenation_is_associative_on_elements() {
    let a = GroupAlgebraElement::<i64>::from_terms(2, [("2,1".parse().unwrap(), -1), (Permutation::identity(2), 1)]);
    let b = GroupAlgebraElement::<i64>::sum_all(3);
    let c = GroupAlgebraElement::<i64>::from_perm("2,1".parse().unwrap());
    assert_eq!(concat_elements(&concat_elements(&a, &b), &c), concat_elements(&a, &concat_elements(&b, &c)));
}
