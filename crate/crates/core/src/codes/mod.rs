//! Cyclic codes over GF(q): construction from generator polynomials,
//! duals, containment, augmentation, minimum distance and decoding.

mod decode;
mod distance;
pub mod matrix;
mod sextic;

pub use decode::bounded_distance_decode;
pub use distance::{
    min_distance, min_distance_by_enumeration, min_distance_by_supports, Distance,
    DistanceMethod, DistanceOptions, ENUMERATION_LIMIT,
};
pub use sextic::{
    build_minimal_polys, build_sextic_generators, MinimalPolySet, SexticGenerators,
    SexticSetup, SplittingField,
};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use matrix::Matrix;

/// Matrices are only materialized up to this length.
pub const MATRIX_MAX_LEN: usize = 64;

/// The ideal `<g>` of `GF(q)[x]/(x^n - 1)` for a monic divisor `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    generator: Poly,
    check: Poly,
}

impl CyclicCode {
    pub fn from_generator(n: usize, field: &Field, generator: Poly) -> Result<CyclicCode> {
        if generator.field() != field {
            return Err(Error::FieldMismatch);
        }
        if n == 0 {
            return Err(Error::InvalidArgument("code length must be positive".into()));
        }
        let check = Poly::x_n_minus_one(field, n)
            .exact_div(&generator)
            .ok_or(Error::NotADivisor(n))?;
        if !generator.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(CyclicCode {
            n,
            generator,
            check,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn q(&self) -> u64 {
        self.field().order()
    }

    /// Dimension `n - deg g`.
    pub fn k(&self) -> usize {
        self.n - self.generator.degree().expect("nonzero generator")
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// `h = (x^n - 1) / g`.
    pub fn check_poly(&self) -> &Poly {
        &self.check
    }

    fn ensure_matrix_size(&self) -> Result<()> {
        if self.n > MATRIX_MAX_LEN {
            return Err(Error::TooLarge(format!(
                "matrices are limited to length {MATRIX_MAX_LEN}, got {}",
                self.n
            )));
        }
        Ok(())
    }

    /// `k x n` matrix whose rows are the shifts `x^i g(x)`.
    pub fn generator_matrix(&self) -> Result<Matrix> {
        self.ensure_matrix_size()?;
        let rows: Vec<Vec<u64>> = (0..self.k())
            .map(|i| {
                let mut row = vec![0u64; self.n];
                row[i..i + self.generator.coeffs().len()].copy_from_slice(self.generator.coeffs());
                row
            })
            .collect();
        Ok(Matrix::from_rows(self.field(), self.n, &rows))
    }

    /// `(n - k) x n` matrix built from the reciprocal of the check polynomial.
    pub fn parity_check_matrix(&self) -> Result<Matrix> {
        self.dual().generator_matrix()
    }

    /// The dual code, generated by the reciprocal of `h`.
    pub fn dual(&self) -> CyclicCode {
        let g = self
            .check
            .reciprocal()
            .expect("divisors of x^n - 1 have nonzero constant term");
        CyclicCode::from_generator(self.n, self.field(), g).expect("reciprocal of h divides x^n - 1")
    }

    pub fn is_dual_containing(&self) -> bool {
        self.generator.divides(self.dual().generator())
    }

    /// Codeword `m(x) g(x)` for a message of degree below `k`.
    pub fn encode(&self, message: &Poly) -> Result<Vec<u64>> {
        if let Some(d) = message.degree() {
            if d >= self.k() {
                return Err(Error::DegreeTooHigh {
                    degree: d,
                    k2: self.k(),
                });
            }
        }
        Ok((message * &self.generator).to_word(self.n))
    }

    pub fn contains_word(&self, word: &[u64]) -> bool {
        word.len() == self.n
            && Poly::from_word(self.field(), word)
                .rem(&self.generator)
                .map(|r| r.is_zero())
                .unwrap_or(false)
    }

    /// Supercode obtained by removing the minimal polynomials `M_s` for every
    /// `s` in `drop` from the generator.
    pub fn augment(&self, minimal: &MinimalPolySet, drop: &[u64]) -> Result<CyclicCode> {
        let mut reps: Vec<u64> = drop.to_vec();
        reps.sort_unstable();
        reps.dedup();
        let mut g = self.generator.clone();
        for s in reps.iter().copied() {
            let m = minimal.get(s).ok_or(Error::NotAFactor(s))?;
            g = g.exact_div(m).ok_or(Error::NotAFactor(s))?;
        }
        if !reps.is_empty() && g.degree() == Some(0) {
            return Err(Error::EmptyGenerator);
        }
        CyclicCode::from_generator(self.n, self.field(), g)
    }
}

/// True iff `a` is a subcode of `b`, i.e. `generator(b) | generator(a)`.
pub fn is_subcode(a: &CyclicCode, b: &CyclicCode) -> Result<bool> {
    if a.n != b.n || a.field() != b.field() {
        return Err(Error::LengthMismatch);
    }
    Ok(b.generator.divides(&a.generator))
}

/// Null space of the generator matrix by elimination; an independent route
/// to the dual code.
pub fn dual_oracle(code: &CyclicCode) -> Result<Matrix> {
    Ok(code.generator_matrix()?.null_space())
}
