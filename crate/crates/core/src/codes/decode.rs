//! Syndrome decoding by exhaustive search over low-weight error patterns.

use crate::error::{Error, Result};

use super::distance::remainder_columns;
use super::CyclicCode;

/// Longest code accepted by the decoder.
pub const DECODE_MAX_LEN: usize = 40;

/// Finds the codeword within Hamming distance `t` of `received`, trying error
/// patterns in increasing weight. Returns `(codeword, error)` with
/// `received = codeword + error`.
pub fn bounded_distance_decode(
    code: &CyclicCode,
    received: &[u64],
    t: usize,
) -> Result<(Vec<u64>, Vec<u64>)> {
    let n = code.n();
    if received.len() != n {
        return Err(Error::LengthMismatch);
    }
    if n > DECODE_MAX_LEN {
        return Err(Error::TooLarge(format!(
            "decoding is limited to length {DECODE_MAX_LEN}, got {n}"
        )));
    }
    let field = code.field();
    let cols = remainder_columns(code);
    let r = n - code.k();
    let mut syndrome = vec![0u64; r];
    for (j, &c) in received.iter().enumerate() {
        if c != 0 {
            for (s, &h) in syndrome.iter_mut().zip(&cols[j]) {
                *s = field.add(*s, field.mul(c, h));
            }
        }
    }

    let nonzero: Vec<u64> = field.elements_lex().filter(|&a| a != 0).collect();
    let mut error = vec![0u64; n];
    for w in 0..=t.min(n) {
        let mut acc = vec![0u64; r];
        if search(
            &cols,
            &nonzero,
            field,
            &syndrome,
            0,
            w,
            &mut acc,
            &mut error,
        ) {
            let codeword = received
                .iter()
                .zip(&error)
                .map(|(&y, &e)| field.sub(y, e))
                .collect();
            return Ok((codeword, error));
        }
    }
    Err(Error::NoCodewordInBall(t))
}

#[allow(clippy::too_many_arguments)]
fn search(
    cols: &[Vec<u64>],
    values: &[u64],
    field: &crate::field::Field,
    target: &[u64],
    start: usize,
    left: usize,
    acc: &mut Vec<u64>,
    error: &mut [u64],
) -> bool {
    if left == 0 {
        return acc == target;
    }
    for j in start..cols.len() {
        for &v in values {
            let saved = acc.clone();
            for (a, &h) in acc.iter_mut().zip(&cols[j]) {
                *a = field.add(*a, field.mul(v, h));
            }
            error[j] = v;
            if search(cols, values, field, target, j + 1, left - 1, acc, error) {
                return true;
            }
            error[j] = 0;
            *acc = saved;
        }
    }
    false
}
