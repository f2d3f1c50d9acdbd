//! The verification jobs behind `run`, each producing a list of claims.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use descent_lie::abacus::{abacus_of_partition, partition_of_abacus, AbacusDisplay, GapLabel};
use descent_lie::classfn::solomon_hom;
use descent_lie::descent::leading_permutation;
use descent_lie::idempotent::ideal_dimension;
use descent_lie::lie::{dynkin_identities, verify_kp_sequence_with, Check};
use descent_lie::partition::p_equiv_classes;
use descent_lie::radical::radical_report;
use descent_lie::summand::{verify_2p, verify_spl2};
use descent_lie::{Composition, DescentAlgebra, DescentElement, Field, FieldKind, Partition, Scalar};
use serde_json::{json, Value};

use crate::cache::{self, Lookup};
use crate::error::CliError;
use crate::field::with_field;
use crate::report::{Claim, Provenance};

pub struct Settings {
    pub cache_dir: Option<PathBuf>,
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Job {
    Descent { n: usize, field: FieldKindKey },
    Idempotents { n: usize, field: FieldKindKey },
    Sequence { k: usize, p: u64 },
    Characters { p: u64 },
}

/// [`FieldKind`] with an ordering, so jobs can be sorted and deduplicated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldKindKey {
    Integers,
    Rationals,
    Prime(u32),
}

impl From<FieldKind> for FieldKindKey {
    fn from(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Integers => FieldKindKey::Integers,
            FieldKind::Rationals => FieldKindKey::Rationals,
            FieldKind::Prime(p) => FieldKindKey::Prime(p),
        }
    }
}

impl From<FieldKindKey> for FieldKind {
    fn from(key: FieldKindKey) -> Self {
        match key {
            FieldKindKey::Integers => FieldKind::Integers,
            FieldKindKey::Rationals => FieldKind::Rationals,
            FieldKindKey::Prime(p) => FieldKind::Prime(p),
        }
    }
}

impl Job {
    /// The id prefix shared by the claims of this job.
    pub fn prefix(&self) -> String {
        match *self {
            Job::Descent { n, field } => format!("descent/n={n},field={}", FieldKind::from(field)),
            Job::Idempotents { n, field } => format!("idempotents/n={n},field={}", FieldKind::from(field)),
            Job::Sequence { k, p } => format!("sequence/k={k},p={p}"),
            Job::Characters { p } => format!("characters/p={p}"),
        }
    }

    pub fn run(&self, settings: &Settings) -> Vec<Claim> {
        let mut rec = Recorder::new(self.prefix(), settings.timings);
        let outcome = match *self {
            Job::Descent { n, field } => descent(&mut rec, n, field.into()),
            Job::Idempotents { n, field } => {
                with_field!(FieldKind::from(field), F => idempotents::<F>(&mut rec, settings, n))
            }
            Job::Sequence { k, p } => {
                with_field!(FieldKind::Prime(p as u32), F => sequence::<F>(&mut rec, settings, k))
            }
            Job::Characters { p } => characters(&mut rec, p as usize),
        };
        if let Err(e) = outcome {
            rec.push("error", "plumbing", json!(e.to_string()), json!("no error"), Provenance::Structural, false, None);
        }
        rec.claims
    }
}

struct Recorder {
    prefix: String,
    timings: bool,
    last: Instant,
    claims: Vec<Claim>,
}

impl Recorder {
    fn new(prefix: String, timings: bool) -> Self {
        Recorder { prefix, timings, last: Instant::now(), claims: Vec::new() }
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        key: &str,
        anchor: &str,
        computed: Value,
        expected: Value,
        provenance: Provenance,
        pass: bool,
        note: Option<String>,
    ) {
        let now = Instant::now();
        let elapsed_ms = self.timings.then(|| now.duration_since(self.last).as_millis() as u64);
        self.last = now;
        self.claims.push(Claim {
            id: format!("{}/{key}", self.prefix),
            anchor: anchor.into(),
            computed,
            expected,
            provenance,
            pass,
            note,
            elapsed_ms,
        });
    }

    fn equal(&mut self, key: &str, anchor: &str, computed: Value, expected: Value, provenance: Provenance) {
        let pass = computed == expected;
        self.push(key, anchor, computed, expected, provenance, pass, None);
    }

    fn check(&mut self, prefix: &str, c: &Check, provenance: Provenance) {
        self.equal(&format!("{prefix}{}", c.key), &c.name, json!(c.pass), json!(true), provenance);
    }
}

fn multiplicities(m: &BTreeMap<Partition, u64>) -> Value {
    let map: serde_json::Map<String, Value> = m.iter().map(|(mu, c)| (format!("({mu})"), json!(c))).collect();
    Value::Object(map)
}

fn partition_list(ps: &[Partition]) -> Value {
    json!(ps.iter().map(|mu| format!("({mu})")).collect::<Vec<_>>())
}

fn descent(rec: &mut Recorder, n: usize, field: FieldKind) -> Result<(), CliError> {
    let alg = DescentAlgebra::new(n)?;
    let table = alg.table();
    let comps = table.compositions();
    let leads: std::collections::BTreeSet<_> = comps.iter().map(leading_permutation).collect();
    rec.equal(
        "basis-size",
        "the X^μ, μ a composition of n, are linearly independent",
        json!(leads.len()),
        json!(1u64 << (n - 1)),
        Provenance::Structural,
    );
    let mut negative = 0usize;
    let mut unrefined = 0usize;
    for l in 0..table.dim() {
        for m in 0..table.dim() {
            for &(nu, c) in table.product_terms(l, m) {
                negative += usize::from(c < 0);
                unrefined += usize::from(c != 0 && !comps[nu].refines(&comps[l]));
            }
        }
    }
    rec.equal(
        "structure-constants-nonnegative",
        "X^λ X^μ = Σ c_λμν X^ν with c_λμν ≥ 0",
        json!(negative),
        json!(0),
        Provenance::Stated,
    );
    rec.equal(
        "structure-constants-refine",
        "c_λμν = 0 unless ν refines λ",
        json!(unrefined),
        json!(0),
        Provenance::Stated,
    );
    for c in dynkin_identities::<i64>(n)? {
        rec.check("", &c, Provenance::Stated);
    }
    match field {
        FieldKind::Integers => {
            solomon::<i64>(rec, &alg);
            Ok(())
        }
        kind => with_field!(kind, F => {
            solomon::<F>(rec, &alg);
            radical::<F>(rec, n)
        }),
    }
}

/// Counts the pairs on which the Solomon map fails to be multiplicative.
fn solomon<T: Scalar>(rec: &mut Recorder, alg: &DescentAlgebra) {
    let n = alg.degree();
    let basis: Vec<(DescentElement<T>, _)> = Composition::all(n)
        .iter()
        .map(|mu| {
            let x = DescentElement::<T>::basis(mu);
            let image = solomon_hom(&x);
            (x, image)
        })
        .collect();
    let mut failures = 0usize;
    for (x, cx) in &basis {
        for (y, cy) in &basis {
            if solomon_hom(&alg.mul(x, y)) != cx.mul(cy) {
                failures += 1;
            }
        }
    }
    let pairs = basis.len() * basis.len();
    rec.push(
        "solomon-multiplicative",
        "c(X^λ X^μ) = c(X^λ) c(X^μ)",
        json!(failures),
        json!(0),
        Provenance::Stated,
        failures == 0,
        Some(format!("{pairs} basis pairs over {}", T::tag())),
    );
}

fn radical<F: Field>(rec: &mut Recorder, n: usize) -> Result<(), CliError> {
    let r = radical_report::<F>(n)?;
    rec.equal(
        "radical-dim",
        "Rad D_n = ker c_n has dimension 2^(n-1) minus the number of p-regular partitions",
        json!(r.kernel_dim()),
        json!(r.algebra_dim - p_equiv_classes(n, r.characteristic).len()),
        Provenance::Computed,
    );
    rec.push(
        "radical-nilpotent",
        "ker c_n is a nilpotent ideal",
        json!(r.nilpotency_index),
        json!(r.algebra_dim),
        Provenance::Structural,
        r.nilpotency_index <= r.algebra_dim,
        Some("computed is the least m with (ker c_n)^m = 0; expected is the bound dim D_n".into()),
    );
    Ok(())
}

fn idempotents<F: Field>(rec: &mut Recorder, settings: &Settings, n: usize) -> Result<(), CliError> {
    let system = match cache::system::<F>(settings.cache_dir.as_deref(), n)? {
        Lookup::Ready(system) => system,
        Lookup::Corrupt(c) => {
            rec.push(
                "cache",
                "plumbing",
                json!(c.error.to_string()),
                json!("valid entry"),
                Provenance::Structural,
                false,
                Some(c.path.display().to_string()),
            );
            return Ok(());
        }
    };
    let invariants = match system.check_invariants() {
        Ok(()) => "ok".to_string(),
        Err(e) => e.to_string(),
    };
    rec.equal(
        "invariants",
        "orthogonal idempotents e_μ summing to 1 with c(e_μ) the indicator of the p-equivalence class of μ",
        json!(invariants),
        json!("ok"),
        Provenance::Stated,
    );
    let classes = p_equiv_classes(n, F::characteristic());
    rec.equal(
        "count",
        "one idempotent per p-regular partition",
        json!(system.len()),
        json!(classes.len()),
        Provenance::Computed,
    );
    rec.equal(
        "top-coefficient",
        "the X^(n)-coefficient of e_n is 1",
        json!(system.top().coeff(&Composition::single(n)).to_string()),
        json!("1"),
        Provenance::Stated,
    );
    for class in &classes {
        let mu = &class.representative;
        let e =
            system.get(mu).ok_or_else(|| descent_lie::Error::InvariantViolated(format!("no idempotent for ({mu})")))?;
        rec.equal(
            &format!("dim/({mu})"),
            "dim e_μ F S_n is the number of permutations with cycle type p-equivalent to μ",
            json!(ideal_dimension(e)?),
            json!(class.permutation_count()),
            Provenance::Stated,
        );
    }
    Ok(())
}

fn sequence<F: Field>(rec: &mut Recorder, settings: &Settings, k: usize) -> Result<(), CliError> {
    let p = F::characteristic() as usize;
    let system = match cache::system::<F>(settings.cache_dir.as_deref(), k * p)? {
        Lookup::Ready(system) => system,
        Lookup::Corrupt(c) => {
            return Err(descent_lie::Error::InvariantViolated(format!("{}: {}", c.path.display(), c.error)).into())
        }
    };
    let report = verify_kp_sequence_with(k, p, &system)?;
    for c in &report.checks {
        rec.check("", c, Provenance::Stated);
    }
    rec.equal(
        "dims",
        "(dim L_n, dim e_n F S_n, dim S^p(L_k))",
        json!([report.dims.lie, report.dims.middle, report.dims.symmetrized]),
        json!([report.expected.lie, report.expected.middle, report.expected.symmetrized]),
        Provenance::Computed,
    );
    Ok(())
}

fn characters(rec: &mut Recorder, p: usize) -> Result<(), CliError> {
    let spl2 = verify_spl2(p)?;
    rec.equal(
        "spl2/decomposition",
        "S^p(L_2) decomposes into the χ^μ with every multiplicity of μ even, each once",
        multiplicities(&spl2.decomposition),
        multiplicities(&spl2.decomposition.keys().map(|mu| (mu.clone(), 1)).collect()),
        Provenance::Stated,
    );
    let expected: BTreeMap<Partition, u64> = spl2.expected_principal.iter().map(|mu| (mu.clone(), 1)).collect();
    rec.push(
        "spl2/principal",
        "principal-block part of S^p(L_2)",
        multiplicities(&spl2.principal),
        multiplicities(&expected),
        Provenance::Stated,
        spl2.principal == expected,
        Some(format!(
            "expected uses the exponent p-2i-1 on 2; the printed exponent gives weights {:?}",
            spl2.printed_exponent_weights
        )),
    );
    rec.equal(
        "spl2/dimension",
        "dim S^p(L_2) = |C_(2^p)|",
        json!(spl2.dimension.to_string()),
        json!(spl2.expected_dimension.to_string()),
        Provenance::Stated,
    );
    for c in &spl2.checks {
        rec.check("spl2/", c, Provenance::Stated);
    }

    let twop = verify_2p(p)?;
    rec.equal(
        "2p/claim",
        "claimed non-projective summand, from the partition formula and from the labels",
        partition_list(&twop.claim),
        partition_list(&twop.label_claim),
        Provenance::Computed,
    );
    for c in &twop.singular {
        rec.equal(
            &format!("2p/singular/({})", c.class),
            "χ_L and the claimed character agree on p-singular classes",
            json!(c.lie.to_string()),
            json!(c.claim.to_string()),
            Provenance::Stated,
        );
    }
    rec.push(
        "2p/difference",
        "χ_L minus the claimed character is a genuine character",
        twop.difference.as_ref().map_or(json!("not a character"), multiplicities),
        json!("nonnegative integer multiplicities"),
        Provenance::Structural,
        twop.difference.is_some(),
        Some(format!("difference at the identity is {}", twop.identity_difference)),
    );
    for c in &twop.checks {
        rec.check("2p/", c, Provenance::Stated);
    }

    abacus(rec, p)
}

fn abacus(rec: &mut Recorder, p: usize) -> Result<(), CliError> {
    let example: Partition = "3,2,2,2,1".parse()?;
    let display = abacus_of_partition(&example, 5)?;
    rec.equal(
        "abacus/example",
        "the display of (3,2,2,2,1) on 5 runners",
        json!(display.to_string().lines().collect::<Vec<_>>()),
        json!(["● ● ● ● ●", "· ● · ● ●", "● · ● · ·"]),
        Provenance::Stated,
    );
    rec.equal(
        "abacus/example-label",
        "(3,2,2,2,1) has label <1,3>",
        json!(display.gap_label().map(|l| l.to_string())),
        json!("<1,3>"),
        Provenance::Stated,
    );
    let partitions = Partition::all(2 * p);
    let mut round_trip_failures = 0usize;
    let mut principal = 0usize;
    for lambda in &partitions {
        let display = abacus_of_partition(lambda, p)?;
        round_trip_failures += usize::from(partition_of_abacus(&display) != *lambda);
        if let Some(label) = display.gap_label() {
            principal += 1;
            round_trip_failures += usize::from(AbacusDisplay::from_label(label, p)? != display);
        }
    }
    rec.equal(
        "abacus/round-trip",
        "partition to display to partition, and label to display, are inverse",
        json!(round_trip_failures),
        json!(0),
        Provenance::Structural,
    );
    rec.equal(
        "abacus/principal-count",
        "principal-block partitions of 2p correspond to the labels",
        json!(principal),
        json!(GapLabel::all(p).len()),
        Provenance::Stated,
    );
    Ok(())
}
