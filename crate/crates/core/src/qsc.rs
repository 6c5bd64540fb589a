//! Quantum synchronizable code chains `C2^perp <= C2 < C1`, the two
//! augmentation families, and a classical simulation of frame-shift
//! recovery.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{matrix, min_distance, CyclicCode, Distance, DistanceOptions, SexticSetup};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A validated pair `C2 < C1` with `C2` dual-containing.
#[derive(Clone, Debug)]
pub struct QscChain {
    outer: CyclicCode,
    inner: CyclicCode,
    d_outer: Distance,
    d_inner: Distance,
    f: Poly,
    order_f: usize,
}

pub fn make_chain(outer: CyclicCode, inner: CyclicCode, opts: &DistanceOptions) -> Result<QscChain> {
    let n = outer.n();
    if inner.n() != n || inner.field() != outer.field() {
        return Err(Error::LengthMismatch);
    }
    let (k1, k2) = (outer.k(), inner.k());
    if k1 <= k2 {
        return Err(Error::DimensionOrder { k1, k2, n });
    }
    let f = inner
        .generator()
        .exact_div(outer.generator())
        .ok_or(Error::NotNested)?;
    if 2 * k2 <= n {
        return Err(Error::DimensionOrder { k1, k2, n });
    }
    if !inner.is_dual_containing() {
        return Err(Error::NotDualContaining);
    }
    let order_f = f.order(n)?;
    let d_outer = min_distance(&outer, opts)?;
    let d_inner = min_distance(&inner, opts)?;
    Ok(QscChain {
        outer,
        inner,
        d_outer,
        d_inner,
        f,
        order_f,
    })
}

impl QscChain {
    pub fn n(&self) -> usize {
        self.outer.n()
    }

    pub fn q(&self) -> u64 {
        self.outer.q()
    }

    pub fn outer(&self) -> &CyclicCode {
        &self.outer
    }

    pub fn inner(&self) -> &CyclicCode {
        &self.inner
    }

    pub fn outer_distance(&self) -> Distance {
        self.d_outer
    }

    pub fn inner_distance(&self) -> Distance {
        self.d_inner
    }

    /// `f = g2 / g1`.
    pub fn quotient(&self) -> &Poly {
        &self.f
    }

    pub fn order_f(&self) -> usize {
        self.order_f
    }

    /// `2 k2 - n`.
    pub fn logical_dimension(&self) -> usize {
        2 * self.inner.k() - self.n()
    }

    /// `floor((d1 - 1) / 2)`; a lower bound when `d1` is.
    pub fn bit_error_bound(&self) -> usize {
        self.d_outer.correctable()
    }

    pub fn phase_error_bound(&self) -> usize {
        self.d_inner.correctable()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QscParams {
    pub cl: usize,
    pub cr: usize,
    /// `n + c_l + c_r`.
    pub length: usize,
    pub logical_dimension: usize,
    pub bit_errors: usize,
    pub phase_errors: usize,
    /// False when either error bound comes from a distance bound.
    pub bounds_exact: bool,
    /// `ord(f) - 1`, the largest admissible `c_l + c_r`.
    pub max_tolerance: usize,
}

pub fn qsc_params(chain: &QscChain, cl: usize, cr: usize) -> Result<QscParams> {
    check_tolerance(chain, cl, cr)?;
    Ok(QscParams {
        cl,
        cr,
        length: chain.n() + cl + cr,
        logical_dimension: chain.logical_dimension(),
        bit_errors: chain.bit_error_bound(),
        phase_errors: chain.phase_error_bound(),
        bounds_exact: chain.d_outer.is_exact() && chain.d_inner.is_exact(),
        max_tolerance: chain.order_f - 1,
    })
}

fn check_tolerance(chain: &QscChain, cl: usize, cr: usize) -> Result<()> {
    if cl + cr >= chain.order_f {
        return Err(Error::ToleranceExceeded {
            sum: cl + cr,
            order: chain.order_f,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Augmentations of a single-class code `<g_i>`.
    C,
    /// Augmentations of the three-class code `<g_i g_{i+1} g_{i+2}>`.
    D,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::C => "C",
            Family::D => "D",
        }
    }

    /// Closed-form logical dimension for augmentation depth `z`.
    pub fn logical_dimension(&self, n: usize, ell: usize, z: usize) -> usize {
        match self {
            Family::C => 2 * z * ell + (2 * n + 1) / 3,
            Family::D => 2 * z * ell + 1,
        }
    }

    /// Class indices whose generators form the base code.
    pub fn base_classes(&self, i: usize) -> Vec<usize> {
        match self {
            Family::C => vec![i % 6],
            Family::D => (0..3).map(|j| (i + j) % 6).collect(),
        }
    }
}

/// Family parameters together with the chain that realizes them.
#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    pub q: u64,
    pub ell: usize,
    pub t: usize,
    pub z: usize,
    pub base_classes: Vec<usize>,
    /// Formula value of the logical dimension.
    pub logical_dimension: usize,
    /// Minimal polynomials removed from the base generator for `C2` and `C1`.
    pub inner_drop: Vec<u64>,
    pub outer_drop: Vec<u64>,
    pub chain: QscChain,
}

/// Builds the depth-`z` member of a family from base class `i`. The inner
/// code drops the `z` smallest coset representatives of the base generator,
/// the outer code drops `z + 1`.
pub fn family_params(
    setup: &SexticSetup,
    family: Family,
    z: usize,
    i: usize,
    opts: &DistanceOptions,
) -> Result<FamilyParams> {
    let decomposition = setup.minimal.decomposition();
    let (ell, t) = (decomposition.ell, decomposition.t);
    if t < 3 {
        return Err(Error::FamilyPreconditionFailed(format!(
            "t = {t} cosets per class, at least 3 needed"
        )));
    }
    if z > t - 2 {
        return Err(Error::FamilyPreconditionFailed(format!(
            "z = {z} exceeds t - 2 = {}",
            t - 2
        )));
    }
    let base_classes = family.base_classes(i);
    let base = setup.generators.code(&base_classes)?;
    let mut factors: Vec<u64> = base_classes
        .iter()
        .flat_map(|&c| setup.minimal.class_factors(c).iter().copied())
        .collect();
    factors.sort_unstable();
    let inner_drop = factors[..z].to_vec();
    let outer_drop = factors[..z + 1].to_vec();
    let inner = base.augment(&setup.minimal, &inner_drop)?;
    let outer = base.augment(&setup.minimal, &outer_drop)?;
    let chain = make_chain(outer, inner, opts)?;
    Ok(FamilyParams {
        family,
        n: setup.n(),
        q: setup.field.order(),
        ell,
        t,
        z,
        logical_dimension: family.logical_dimension(setup.n(), ell, z),
        base_classes,
        inner_drop,
        outer_drop,
        chain,
    })
}

pub fn family_c_params(
    setup: &SexticSetup,
    z: usize,
    i: usize,
    opts: &DistanceOptions,
) -> Result<FamilyParams> {
    family_params(setup, Family::C, z, i, opts)
}

pub fn family_d_params(
    setup: &SexticSetup,
    z: usize,
    i: usize,
    opts: &DistanceOptions,
) -> Result<FamilyParams> {
    family_params(setup, Family::D, z, i, opts)
}

/// Classical shadow `u = v f g1 + g1` of an encoded block.
pub fn encode_shadow(chain: &QscChain, v: &Poly) -> Result<Vec<u64>> {
    let k2 = chain.inner.k();
    if let Some(d) = v.degree() {
        if d >= k2 {
            return Err(Error::DegreeTooHigh { degree: d, k2 });
        }
    }
    let u = &(v * chain.inner.generator()) + chain.outer.generator();
    Ok(u.to_word(chain.n()))
}

/// Coefficients of `x^delta u(x) mod (x^n - 1)`: a right rotation by `delta`.
pub fn apply_shift(word: &[u64], delta: i64) -> Vec<u64> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let s = delta.rem_euclid(n as i64) as usize;
    let mut out = vec![0u64; n];
    for (j, &c) in word.iter().enumerate() {
        out[(j + s) % n] = c;
    }
    out
}

/// Lookup from `x^j mod f` to `j` over the window `-c_l < j < c_r`.
#[derive(Clone, Debug)]
pub struct ShiftDecoder<'a> {
    chain: &'a QscChain,
    cl: usize,
    cr: usize,
    table: HashMap<Vec<u64>, i64>,
}

impl<'a> ShiftDecoder<'a> {
    pub fn new(chain: &'a QscChain, cl: usize, cr: usize) -> Result<ShiftDecoder<'a>> {
        check_tolerance(chain, cl, cr)?;
        let n = chain.n() as i64;
        let field = chain.f.field();
        let mut table = HashMap::new();
        for j in (1 - cl as i64)..(cr as i64) {
            let e = j.rem_euclid(n) as u64;
            let r = Poly::x(field).pow_mod(e, &chain.f)?;
            table.insert(r.coeffs().to_vec(), j);
        }
        Ok(ShiftDecoder {
            chain,
            cl,
            cr,
            table,
        })
    }

    pub fn recover(&self, received: &[u64]) -> Result<i64> {
        let chain = self.chain;
        if received.len() != chain.n() {
            return Err(Error::LengthMismatch);
        }
        let field = chain.f.field();
        let (quotient, rem) = Poly::from_word(field, received).divmod(chain.outer.generator())?;
        if !rem.is_zero() {
            return Err(Error::NotInOuterCode);
        }
        let r = quotient.rem(&chain.f)?;
        self.table
            .get(r.coeffs())
            .copied()
            .ok_or(Error::NoMatchingShift {
                cl: self.cl,
                cr: self.cr,
            })
    }
}

/// The shift `j` in `(-c_l, c_r)` with `x^j = (received / g1) mod f`.
pub fn recover_shift(chain: &QscChain, received: &[u64], cl: usize, cr: usize) -> Result<i64> {
    ShiftDecoder::new(chain, cl, cr)?.recover(received)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncTrial {
    pub message: Vec<u64>,
    pub delta: i64,
    pub transmitted: Vec<u64>,
    pub recovered: std::result::Result<i64, Error>,
}

impl SyncTrial {
    pub fn succeeded(&self) -> bool {
        self.recovered == Ok(self.delta)
    }
}

/// Uniform message of degree below `k2`.
pub fn random_message(chain: &QscChain, rng: &mut impl Rng) -> Poly {
    let field = chain.inner.field();
    let coeffs = (0..chain.inner.k())
        .map(|_| rng.gen_range(0..field.order()))
        .collect();
    Poly::new(field, coeffs)
}

/// Encodes `trials` seeded random messages, shifts each by `delta` and
/// attempts recovery.
pub fn run_sync_trials(
    chain: &QscChain,
    delta: i64,
    cl: usize,
    cr: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<SyncTrial>> {
    let decoder = ShiftDecoder::new(chain, cl, cr)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let v = random_message(chain, &mut rng);
        let word = encode_shadow(chain, &v)?;
        let transmitted = apply_shift(&word, delta);
        let recovered = decoder.recover(&transmitted);
        out.push(SyncTrial {
            message: v.to_word(chain.inner.k()),
            delta,
            transmitted,
            recovered,
        });
    }
    Ok(out)
}

/// Message-space limit `q^(2 k2 - n)` for coset enumeration.
pub const COSET_COUNT_LIMIT: u128 = 1 << 16;
/// Limit on `q^(n - k2)`, the size of `C2^perp`.
pub const COSET_DUAL_LIMIT: u128 = 1 << 20;

/// One lexicographically minimal word per coset of `C2^perp` in `C2`, sorted.
pub fn coset_representatives(chain: &QscChain) -> Result<Vec<Vec<u64>>> {
    coset_representatives_of(&chain.inner)
}

pub fn coset_representatives_of(code: &CyclicCode) -> Result<Vec<Vec<u64>>> {
    let (n, k, q) = (code.n(), code.k(), code.q() as u128);
    if 2 * k < n {
        return Err(Error::NotDualContaining);
    }
    let count = q.checked_pow((2 * k - n) as u32).unwrap_or(u128::MAX);
    let dual_size = q.checked_pow((n - k) as u32).unwrap_or(u128::MAX);
    if count > COSET_COUNT_LIMIT || dual_size > COSET_DUAL_LIMIT {
        return Err(Error::TooLarge(format!(
            "{count} cosets of a dual with {dual_size} words"
        )));
    }
    if !code.is_dual_containing() {
        return Err(Error::NotDualContaining);
    }
    let field = code.field();
    let dual = code.dual().generator_matrix()?;
    let (dual_rref, dual_pivots) = dual.rref();

    // Complete a basis of C2^perp to one of C2 with generator-matrix rows.
    let mut complement: Vec<Vec<u64>> = Vec::new();
    let mut span = dual_rref.clone();
    for row in code.generator_matrix()?.to_rows() {
        let candidate = span.stack(&matrix::Matrix::from_rows(field, n, std::slice::from_ref(&row)));
        if candidate.rank() > span.rows() {
            complement.push(row);
            span = candidate.rref().0;
        }
    }
    debug_assert_eq!(complement.len(), 2 * k - n);

    let mut reps = Vec::with_capacity(count as usize);
    let mut digits = vec![0u64; complement.len()];
    let elements: Vec<u64> = field.elements_lex().collect();
    loop {
        let mut word = vec![0u64; n];
        for (d, row) in digits.iter().zip(&complement) {
            let a = elements[*d as usize];
            if a != 0 {
                for (x, &r) in word.iter_mut().zip(row) {
                    *x = field.add(*x, field.mul(a, r));
                }
            }
        }
        reps.push(matrix::reduce(&dual_rref, &dual_pivots, &word));
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                reps.sort();
                return Ok(reps);
            }
            digits[pos] += 1;
            if (digits[pos] as u128) < q {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}
