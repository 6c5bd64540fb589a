//! Minimum distance by message enumeration or by support enumeration
//! against a parity-check matrix.
//!
//! The parity-check columns used here are the remainders `x^j mod g(x)`:
//! a word `c` is a codeword iff `sum_j c_j (x^j mod g) = 0`. A codeword of
//! weight `w` exists iff some `w` columns are linearly dependent, given that
//! no smaller dependent set exists.

use rustc_hash::FxHashMap;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::Field;

use super::CyclicCode;

/// Largest message space walked by full enumeration.
pub const ENUMERATION_LIMIT: u128 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// Every weight below the value was ruled out.
    AtLeast(usize),
}

impl Distance {
    pub fn value(&self) -> usize {
        match *self {
            Distance::Exact(d) | Distance::AtLeast(d) => d,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Distance::Exact(_))
    }

    /// `floor((d - 1) / 2)`, a guaranteed value when the distance is a bound.
    pub fn correctable(&self) -> usize {
        self.value().saturating_sub(1) / 2
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMethod {
    /// Support search, switching to enumeration once that is cheaper.
    Auto,
    Enumerate,
    Supports,
}

#[derive(Clone, Copy, Debug)]
pub struct DistanceOptions {
    /// Stop the support search after this weight and report `>= cap + 1`.
    pub weight_cap: Option<usize>,
    /// Budget in subsets visited (support search).
    pub max_work: u64,
    pub method: DistanceMethod,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            weight_cap: None,
            max_work: 100_000_000,
            method: DistanceMethod::Auto,
        }
    }
}

impl DistanceOptions {
    /// Options that skip the search and report the trivial bound.
    pub fn none() -> Self {
        DistanceOptions {
            weight_cap: Some(0),
            max_work: 0,
            method: DistanceMethod::Supports,
        }
    }
}

pub fn min_distance(code: &CyclicCode, opts: &DistanceOptions) -> Result<Distance> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    match opts.method {
        DistanceMethod::Enumerate => Ok(Distance::Exact(min_distance_by_enumeration(code)?)),
        DistanceMethod::Supports => min_distance_by_supports(code, opts.weight_cap, opts.max_work),
        DistanceMethod::Auto => {
            let space = message_space(code);
            let searcher = SupportSearch::new(code);
            let mut work: u128 = 0;
            for w in 1..=code.n() - code.k() + 1 {
                if let Some(cap) = opts.weight_cap {
                    if w > cap {
                        return Ok(Distance::AtLeast(cap + 1));
                    }
                }
                let cost = searcher.cost(w);
                if space <= ENUMERATION_LIMIT && work + cost > space {
                    return Ok(Distance::Exact(min_distance_by_enumeration(code)?));
                }
                if work + cost > opts.max_work as u128 {
                    return Ok(Distance::AtLeast(w));
                }
                if searcher.has_dependency(w) {
                    return Ok(Distance::Exact(w));
                }
                work += cost;
            }
            unreachable!("Singleton bound: n - k + 1 columns are always dependent")
        }
    }
}

fn message_space(code: &CyclicCode) -> u128 {
    (code.q() as u128).checked_pow(code.k() as u32).unwrap_or(u128::MAX)
}

/// Support enumeration in increasing weight.
pub fn min_distance_by_supports(
    code: &CyclicCode,
    weight_cap: Option<usize>,
    max_work: u64,
) -> Result<Distance> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let searcher = SupportSearch::new(code);
    let mut work: u128 = 0;
    for w in 1..=code.n() - code.k() + 1 {
        if let Some(cap) = weight_cap {
            if w > cap {
                return Ok(Distance::AtLeast(cap + 1));
            }
        }
        let cost = searcher.cost(w);
        if work + cost > max_work as u128 {
            return Ok(Distance::AtLeast(w));
        }
        if searcher.has_dependency(w) {
            return Ok(Distance::Exact(w));
        }
        work += cost;
    }
    unreachable!("Singleton bound: n - k + 1 columns are always dependent")
}

/// Minimum nonzero weight over all `q^k` codewords.
pub fn min_distance_by_enumeration(code: &CyclicCode) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let space = message_space(code);
    if space > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "{}^{} messages exceed the enumeration limit",
            code.q(),
            code.k()
        )));
    }
    let field = code.field();
    let n = code.n();
    let g = code.generator().coeffs();
    if field.order() == 2 && n <= 128 {
        let g_bits = g
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i));
        let rows: Vec<u128> = (0..code.k()).map(|i| g_bits << i).collect();
        let mut word = 0u128;
        let mut best = n;
        for step in 1u64..(1u64 << code.k()) {
            word ^= rows[step.trailing_zeros() as usize];
            best = best.min(word.count_ones() as usize);
        }
        return Ok(best);
    }
    // Enumerate GF(p)-combinations of a^j x^i g(x); each basis vector added
    // p times returns the word to its previous value, so an odometer works.
    let p = field.characteristic();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for i in 0..code.k() {
        for j in 0..field.degree() {
            let scalar = p.pow(j as u32);
            let mut row = vec![0u64; n];
            for (d, &c) in g.iter().enumerate() {
                row[i + d] = field.mul(c, scalar);
            }
            basis.push(row);
        }
    }
    let mut digits = vec![0u64; basis.len()];
    let mut word = vec![0u64; n];
    let mut best = n;
    loop {
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return Ok(best);
            }
            for (x, &b) in word.iter_mut().zip(&basis[pos]) {
                *x = field.add(*x, b);
            }
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        let weight = word.iter().filter(|&&x| x != 0).count();
        if weight > 0 {
            best = best.min(weight);
        }
    }
}

/// Parity-check columns `x^j mod g`, for `0 <= j < n`.
pub(crate) fn remainder_columns(code: &CyclicCode) -> Vec<Vec<u64>> {
    let field = code.field();
    let g = code.generator().coeffs();
    let r = g.len() - 1;
    let mut out = Vec::with_capacity(code.n());
    if r == 0 {
        return vec![Vec::new(); code.n()];
    }
    let mut col = vec![0u64; r];
    col[0] = 1;
    for _ in 0..code.n() {
        out.push(col.clone());
        // multiply by x and reduce by the monic g
        let top = col[r - 1];
        for i in (1..r).rev() {
            col[i] = col[i - 1];
        }
        col[0] = 0;
        if top != 0 {
            for (i, c) in col.iter_mut().enumerate() {
                *c = field.sub(*c, field.mul(top, g[i]));
            }
        }
    }
    out
}

enum Columns {
    Binary(Vec<u128>),
    General(Field, Vec<Vec<u64>>),
}

struct SupportSearch {
    n: usize,
    columns: Columns,
}

impl SupportSearch {
    fn new(code: &CyclicCode) -> SupportSearch {
        let cols = remainder_columns(code);
        let r = code.n() - code.k();
        let columns = if code.q() == 2 && r <= 128 {
            Columns::Binary(
                cols.iter()
                    .map(|c| {
                        c.iter()
                            .enumerate()
                            .fold(0u128, |acc, (i, &b)| acc | ((b as u128) << i))
                    })
                    .collect(),
            )
        } else {
            Columns::General(code.field().clone(), cols)
        };
        SupportSearch {
            n: code.n(),
            columns,
        }
    }

    /// Subsets visited when testing weight `w`.
    fn cost(&self, w: usize) -> u128 {
        match self.columns {
            Columns::Binary(_) if w >= 2 => arith::binomial(self.n - 1, w - 2),
            Columns::Binary(_) => 1,
            Columns::General(..) => arith::binomial(self.n - 1, w - 1),
        }
    }

    /// Whether some `w` columns are dependent, assuming no smaller set is.
    fn has_dependency(&self, w: usize) -> bool {
        match &self.columns {
            Columns::Binary(cols) => binary_dependency(cols, w),
            Columns::General(field, cols) => {
                let mut basis = Vec::with_capacity(w);
                general_dependency(field, cols, w, 0, &mut basis)
            }
        }
    }
}

/// Over GF(2) a minimal dependency sums to zero. Cyclic shifts of a
/// dependency are dependencies, so only supports containing column 0 are
/// walked: fix it, walk (w-2)-subsets of later columns and look the running
/// sum up among the columns after them.
fn binary_dependency(cols: &[u128], w: usize) -> bool {
    if w == 1 {
        return cols.contains(&0);
    }
    // last index holding each column value
    let mut last: FxHashMap<u128, usize> = FxHashMap::default();
    for (j, &c) in cols.iter().enumerate() {
        last.insert(c, j);
    }
    fn walk(cols: &[u128], last: &FxHashMap<u128, usize>, start: usize, left: usize, acc: u128) -> bool {
        if left == 0 {
            return last.get(&acc).is_some_and(|&j| j >= start);
        }
        for i in start..cols.len().saturating_sub(left) {
            if walk(cols, last, i + 1, left - 1, acc ^ cols[i]) {
                return true;
            }
        }
        false
    }
    walk(cols, &last, 1, w - 2, cols[0])
}

/// Depth-first search over `w`-subsets keeping the chosen columns in
/// echelon form; a column that reduces to zero closes a dependency.
fn general_dependency(
    field: &Field,
    cols: &[Vec<u64>],
    left: usize,
    start: usize,
    basis: &mut Vec<(usize, Vec<u64>)>,
) -> bool {
    // as in the binary case, column 0 is always in the support
    let end = if basis.is_empty() { 1 } else { cols.len() };
    for i in start..end {
        let mut v = cols[i].clone();
        for (piv, b) in basis.iter() {
            let c = v[*piv];
            if c != 0 {
                for (x, &bv) in v.iter_mut().zip(b) {
                    *x = field.sub(*x, field.mul(c, bv));
                }
            }
        }
        let pivot = v.iter().position(|&x| x != 0);
        if left == 1 {
            if pivot.is_none() {
                return true;
            }
            continue;
        }
        let Some(piv) = pivot else {
            // dependent before reaching weight w; a smaller weight exists
            return true;
        };
        let inv = field.inv(v[piv]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = field.mul(*x, inv);
        }
        basis.push((piv, v));
        if general_dependency(field, cols, left - 1, i + 1, basis) {
            return true;
        }
        basis.pop();
    }
    false
}
