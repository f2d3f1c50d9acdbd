//! Primitive idempotents of the descent algebra lifted from the class
//! indicators of the Young-character ring.
//!
//! For each p-regular partition μ (in canonical order, `(n)` first) a
//! preimage of `ch_{μ,F}` under the Solomon homomorphism is lifted by the
//! iteration `x ↦ 3x² − 2x³`. Since
//! `g(x) − g(x)² = (x − x²)² (3 + 4x − 4x²)` and `x − x²` lies in the
//! nilpotent kernel, the defect's radical degree doubles at every step in any
//! characteristic. Later idempotents are first compressed into the corner
//! `(1 − s) D (1 − s)`, where `s` is the sum of those already accepted.

use std::fmt::Write as _;

use crate::algebra::parse_header;
use crate::classfn::{solomon_hom, young_table, ClassFunction};
use crate::descent::{DescentAlgebra, DescentElement};
use crate::error::{Error, Result};
use crate::linear::{right_ideal, solve};
use crate::partition::{regular_partitions, Composition, Partition};
use crate::scalar::{Field, Scalar};

/// Whether `lambda` and `mu` are p-equivalent; characteristic zero compares for equality.
pub fn p_equivalent(lambda: &Partition, mu: &Partition, p: u64) -> bool {
    lambda.regularize(p) == mu.regularize(p)
}

/// `ch_{μ,F}`: one on the classes p-equivalent to `μ`, zero elsewhere, with
/// `p` the characteristic of `T`.
pub fn class_indicator<T: Scalar>(mu: &Partition) -> Result<ClassFunction<T>> {
    let p = T::characteristic();
    if !mu.is_regular(p) {
        return Err(Error::NotRegular(mu.to_string(), p));
    }
    Ok(ClassFunction::from_fn(mu.weight(), |lambda| if p_equivalent(lambda, mu, p) { T::one() } else { T::zero() }))
}

/// A complete set of orthogonal primitive idempotents of `D_{n,F}`, one per
/// p-regular partition, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSystem<F: Field> {
    n: usize,
    idempotents: Vec<(Partition, DescentElement<F>)>,
}

impl<F: Field> IdempotentSystem<F> {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn characteristic(&self) -> u64 {
        F::characteristic()
    }

    pub fn idempotents(&self) -> &[(Partition, DescentElement<F>)] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn get(&self, mu: &Partition) -> Option<&DescentElement<F>> {
        self.idempotents.iter().find(|(m, _)| m == mu).map(|(_, e)| e)
    }

    /// `e_n = e_{(n),F}`.
    pub fn top(&self) -> &DescentElement<F> {
        &self.idempotents[0].1
    }

    /// Checks every defining property; the error names the first violated one.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n;
        let alg = DescentAlgebra::new(n)?;
        let p = F::characteristic();
        let expected = regular_partitions(n, p);
        let labels: Vec<Partition> = self.idempotents.iter().map(|(m, _)| m.clone()).collect();
        if labels != expected {
            return Err(Error::InvariantViolated("idempotents are not indexed by the p-regular partitions".into()));
        }
        for (mu, e) in &self.idempotents {
            if alg.mul(e, e) != *e {
                return Err(Error::InvariantViolated(format!("e² = e fails for ({mu})")));
            }
        }
        let mut total = DescentElement::<F>::zero(n);
        for (i, (mu, e)) in self.idempotents.iter().enumerate() {
            for (lambda, f) in &self.idempotents[i + 1..] {
                if !alg.mul(e, f).is_zero() || !alg.mul(f, e).is_zero() {
                    return Err(Error::InvariantViolated(format!("e_({mu}) and e_({lambda}) are not orthogonal")));
                }
            }
            if solomon_hom(e) != class_indicator(mu)? {
                return Err(Error::InvariantViolated(format!("image of e_({mu}) is not ch_({mu})")));
            }
            total = total.add(e);
        }
        if total != DescentElement::one(n) {
            return Err(Error::InvariantViolated("idempotents do not sum to the identity".into()));
        }
        if self.top().coeff(&Composition::single(n)) != F::one() {
            return Err(Error::InvariantViolated("X^(n)-coefficient of e_n is not one".into()));
        }
        Ok(())
    }

    /// Header `n=<n> field=<tag>`, then for each idempotent a line
    /// `idempotent <partition>` followed by `composition<TAB>coefficient`
    /// lines for its nonzero X-coordinates.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={} field={}\n", self.n, F::tag());
        for (mu, e) in &self.idempotents {
            let _ = writeln!(s, "idempotent {mu}");
            for (comp, c) in e.support() {
                let _ = writeln!(s, "{comp}\t{c}");
            }
        }
        s
    }

    /// Parses [`IdempotentSystem::to_text`] output and revalidates every invariant.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let (n, tag) = parse_header(lines.next().ok_or_else(|| Error::Parse("empty input".into()))?)?;
        if tag != F::tag() {
            return Err(Error::Parse(format!("field `{tag}` does not match `{}`", F::tag())));
        }
        if n == 0 || n > crate::error::MAX_DEGREE {
            return Err(Error::Capacity { n, max: crate::error::MAX_DEGREE });
        }
        let mut idempotents: Vec<(Partition, DescentElement<F>)> = Vec::new();
        let mut coords: Option<(Partition, Vec<F>)> = None;
        let flush = |cur: Option<(Partition, Vec<F>)>, out: &mut Vec<(Partition, DescentElement<F>)>| -> Result<()> {
            if let Some((mu, c)) = cur {
                out.push((mu, DescentElement::from_coords(n, c)?));
            }
            Ok(())
        };
        for line in lines.filter(|l| !l.is_empty()) {
            if let Some(label) = line.strip_prefix("idempotent ") {
                flush(coords.take(), &mut idempotents)?;
                let mu: Partition = label.parse()?;
                if mu.weight() != n {
                    return Err(Error::Weight { expected: n, got: mu.weight() });
                }
                coords = Some((mu, vec![F::zero(); 1 << (n - 1)]));
            } else {
                let (comp, coeff) =
                    line.split_once('\t').ok_or_else(|| Error::Parse(format!("missing tab in `{line}`")))?;
                let comp: Composition = comp.parse()?;
                if comp.weight() != n {
                    return Err(Error::Weight { expected: n, got: comp.weight() });
                }
                let c = F::parse_coeff(coeff).ok_or_else(|| Error::Parse(format!("bad coefficient `{coeff}`")))?;
                let (_, v) = coords.as_mut().ok_or_else(|| Error::Parse("coordinate before any idempotent".into()))?;
                v[crate::descent::composition_position(&comp)] = c;
            }
        }
        flush(coords.take(), &mut idempotents)?;
        let system = IdempotentSystem { n, idempotents };
        system.check_invariants()?;
        Ok(system)
    }
}

/// Some `x` with `c_{n,F}(x) = target`: the solution of the linear system in
/// X-coordinates with free variables zero, pivots taken in canonical
/// composition order.
pub fn solomon_preimage<F: Field>(target: &ClassFunction<F>) -> Result<DescentElement<F>> {
    let n = target.degree();
    let columns: Vec<Vec<F>> =
        young_table(n).iter().map(|phi| phi.values().iter().map(|&v| F::from_i64(v)).collect()).collect();
    let x = solve(&columns, target.values())
        .ok_or_else(|| Error::InvalidArgument("class function is not in the span of the Young characters".into()))?;
    DescentElement::from_coords(n, x)
}

/// Iterates `x ↦ 3x² − 2x³` until `x² = x`.
pub fn lift_idempotent<F: Field>(x: &DescentElement<F>, alg: &DescentAlgebra) -> Result<DescentElement<F>> {
    let three = F::from_i64(3);
    let two = F::from_i64(2);
    let mut x = x.clone();
    for _ in 0..=alg.dim() {
        let sq = alg.mul(&x, &x);
        if sq == x {
            return Ok(x);
        }
        let cube = alg.mul(&sq, &x);
        x = sq.scale(&three).sub(&cube.scale(&two));
    }
    Err(Error::LiftDiverged(alg.dim()))
}

pub fn lift_idempotents<F: Field>(n: usize) -> Result<IdempotentSystem<F>> {
    let alg = DescentAlgebra::new(n)?;
    let p = F::characteristic();
    let labels = regular_partitions(n, p);
    let one = DescentElement::<F>::one(n);
    let mut accepted = DescentElement::<F>::zero(n);
    let mut idempotents = Vec::with_capacity(labels.len());
    for mu in labels {
        let mut x = solomon_preimage(&class_indicator::<F>(&mu)?)?;
        if !accepted.is_zero() {
            let complement = one.sub(&accepted);
            x = alg.mul(&alg.mul(&complement, &x), &complement);
        }
        let e = lift_idempotent(&x, &alg)?;
        accepted = accepted.add(&e);
        idempotents.push((mu, e));
    }
    Ok(IdempotentSystem { n, idempotents })
}

/// `dim e F S_n` for an idempotent `e` of the descent algebra.
pub fn ideal_dimension<F: Field>(e: &DescentElement<F>) -> Result<usize> {
    let alg = DescentAlgebra::new(e.degree())?;
    if alg.mul(e, e) != *e {
        return Err(Error::NotIdempotent);
    }
    Ok(right_ideal(&e.to_group_algebra())?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    type F3 = Fp<3>;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn indicators() {
        let ch = class_indicator::<F3>(&part("6")).unwrap();
        let ones: Vec<Partition> = ch.iter().filter(|(_, v)| **v == F3::new(1)).map(|(l, _)| l).collect();
        assert_eq!(ones, vec![part("6"), part("2,2,2")]);
        assert!(matches!(class_indicator::<F3>(&part("1,1,1")), Err(Error::NotRegular(..))));
        let total = regular_partitions(6, 3)
            .iter()
            .fold(ClassFunction::zero(6), |acc, mu| acc.add(&class_indicator::<F3>(mu).unwrap()));
        assert_eq!(total, ClassFunction::constant(6, F3::new(1)));
    }

    #[test]
    fn degree_two_mod_three() {
        let sys = lift_idempotents::<F3>(2).unwrap();
        sys.check_invariants().unwrap();
        let two = F3::new(2);
        let e11 = DescentElement::from_coords(2, vec![F3::new(0), two]).unwrap();
        let e2 = DescentElement::from_coords(2, vec![F3::new(1), F3::new(1)]).unwrap();
        assert_eq!(sys.get(&part("1,1")), Some(&e11));
        assert_eq!(sys.get(&part("2")), Some(&e2));
    }

    #[test]
    fn dimension_of_top_ideal_for_p_three() {
        let sys = lift_idempotents::<F3>(3).unwrap();
        assert_eq!(ideal_dimension(sys.top()).unwrap(), 3);
        let not_idem = DescentElement::<F3>::basis(&"1,1,1".parse().unwrap());
        assert_eq!(ideal_dimension(&not_idem), Err(Error::NotIdempotent));
    }

    #[test]
    fn text_round_trip_and_corruption() {
        let sys = lift_idempotents::<F3>(4).unwrap();
        let text = sys.to_text();
        assert_eq!(IdempotentSystem::<F3>::from_text(&text).unwrap(), sys);
        // flip the first coefficient of the first idempotent
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        let (comp, c) = lines[2].split_once('\t').unwrap();
        let bumped = (c.parse::<u32>().unwrap() + 1) % 3;
        lines[2] = format!("{comp}\t{bumped}");
        let corrupted = lines.join("\n");
        assert!(matches!(IdempotentSystem::<F3>::from_text(&corrupted), Err(Error::InvariantViolated(_))));
    }
}
