use descent_lie::lie::{
    dynkin_identities, lie_module, symmetrized_lie_module, verify_kp_sequence, wreath_identities, SequenceDims,
};
use descent_lie::partition::factorial;
use descent_lie::{Field, Rational, F2, F3, F5};

fn assert_all(checks: &[descent_lie::lie::Check]) {
    for c in checks {
        assert!(c.pass, "{} failed", c.name);
    }
}

#[test]
fn integral_dynkin_identities() {
    for n in 1..=6 {
        assert_all(&dynkin_identities::<i64>(n).unwrap());
    }
}

#[test]
fn integral_wreath_identities() {
    for (k, p) in [(2, 2), (1, 3), (2, 3), (3, 2), (1, 5), (1, 2), (2, 1)] {
        assert_all(&wreath_identities::<i64>(k, p).unwrap());
    }
}

fn lie_dims<F: Field>(max: usize) {
    for n in 1..=max {
        assert_eq!(lie_module::<F>(n).unwrap().dim() as u64, factorial(n - 1), "n = {n}, p = {}", F::characteristic());
    }
}

#[test]
fn lie_module_dimensions() {
    lie_dims::<F2>(6);
    lie_dims::<F3>(6);
    lie_dims::<F5>(6);
    lie_dims::<Rational>(6);
}

#[test]
fn symmetrized_lie_dimensions() {
    assert_eq!(symmetrized_lie_module::<F3>(2, 3).unwrap().dim(), 15);
    assert_eq!(symmetrized_lie_module::<F2>(3, 2).unwrap().dim(), 40);
    assert_eq!(symmetrized_lie_module::<F2>(1, 2).unwrap().dim(), 1);
}

fn sequence<F: Field>(k: usize, p: usize, dims: (usize, usize, usize)) {
    let r = verify_kp_sequence::<F>(k, p).unwrap();
    let failed: Vec<_> = r.failed_checks().map(|c| c.name.clone()).collect();
    assert!(r.pass, "(k, p) = ({k}, {p}): {failed:?}");
    assert_eq!(r.dims, SequenceDims { lie: dims.0, middle: dims.1, symmetrized: dims.2 });
    assert_eq!(r.kernel_dim, dims.0);
    assert_eq!(r.image_dim, dims.2);
}

#[test]
fn exact_sequences() {
    sequence::<F2>(1, 2, (1, 2, 1));
    sequence::<F3>(1, 3, (2, 3, 1));
    sequence::<F5>(1, 5, (24, 25, 1));
    sequence::<F3>(2, 3, (120, 135, 15));
    sequence::<F2>(3, 2, (120, 160, 40));
}
