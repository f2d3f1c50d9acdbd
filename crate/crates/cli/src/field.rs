//! Runtime choice of coefficient field, dispatched onto the const-generic
//! prime fields of the core.

use crate::error::CliError;

/// Primes with a compiled field instance.
pub const SUPPORTED_PRIMES: [u32; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

pub fn unsupported(p: u64) -> CliError {
    let list: Vec<String> = SUPPORTED_PRIMES.iter().map(u32::to_string).collect();
    CliError::UnsupportedPrime(p, list.join(", "))
}

pub fn check_supported(p: u64) -> Result<(), CliError> {
    if SUPPORTED_PRIMES.iter().any(|&q| q as u64 == p) {
        Ok(())
    } else {
        Err(unsupported(p))
    }
}

/// Runs `$body` with `$F` bound to the field type for `$kind`; the integers
/// are refused.
macro_rules! with_field {
    ($kind:expr, $F:ident => $body:expr) => {{
        use descent_lie::{FieldKind, Fp, Rational};
        match $kind {
            FieldKind::Rationals => {
                type $F = Rational;
                $body
            }
            FieldKind::Prime(2) => {
                type $F = Fp<2>;
                $body
            }
            FieldKind::Prime(3) => {
                type $F = Fp<3>;
                $body
            }
            FieldKind::Prime(5) => {
                type $F = Fp<5>;
                $body
            }
            FieldKind::Prime(7) => {
                type $F = Fp<7>;
                $body
            }
            FieldKind::Prime(11) => {
                type $F = Fp<11>;
                $body
            }
            FieldKind::Prime(13) => {
                type $F = Fp<13>;
                $body
            }
            FieldKind::Prime(17) => {
                type $F = Fp<17>;
                $body
            }
            FieldKind::Prime(19) => {
                type $F = Fp<19>;
                $body
            }
            FieldKind::Prime(23) => {
                type $F = Fp<23>;
                $body
            }
            FieldKind::Prime(29) => {
                type $F = Fp<29>;
                $body
            }
            FieldKind::Prime(31) => {
                type $F = Fp<31>;
                $body
            }
            FieldKind::Prime(p) => Err($crate::field::unsupported(p as u64).into()),
            FieldKind::Integers => {
                Err($crate::error::CliError::Usage("this computation needs a field, not Z".into()).into())
            }
        }
    }};
}

pub(crate) use with_field;
