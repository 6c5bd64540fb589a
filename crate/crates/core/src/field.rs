//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! Elements are packed into a `u64` "code": the coefficient vector
//! `(c_0, .., c_{m-1})` of the element in the polynomial basis
//! `1, a, .., a^{m-1}` is stored as `c_0 + c_1 p + .. + c_{m-1} p^{m-1}`.
//! For prime fields the code is simply the residue. Codes are canonical, so
//! two elements are equal iff their codes are equal.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported extension degree (p >= 2 and q < 2^48).
pub const MAX_DEGREE: usize = 48;
/// Exclusive bound on the characteristic.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;
/// Exclusive bound on the field size.
pub const MAX_ORDER: u64 = 1 << 48;

#[derive(Debug)]
pub struct FieldCtx {
    p: u64,
    m: usize,
    q: u64,
    /// Monic modulus, ascending coefficients, present iff `m > 1`.
    modulus: Option<Vec<u64>>,
    /// Modulus as a bit mask, characteristic two only.
    modulus_bits: u128,
    primitive: OnceLock<u64>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// Shared handle to a finite field context.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldCtx>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.m)
        }
    }
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if p >= MAX_CHARACTERISTIC {
            return Err(Error::FieldTooLarge(format!("characteristic {p} >= 2^31")));
        }
        Ok(Field(Arc::new(FieldCtx {
            p,
            m: 1,
            q: p,
            modulus: None,
            modulus_bits: 0,
            primitive: OnceLock::new(),
        })))
    }

    /// GF(p^m) with the lexicographically first monic irreducible modulus.
    ///
    /// Candidates are ordered by their coefficient vector `(c_0, .., c_{m-1})`
    /// compared lexicographically, constant term first.
    pub fn extension(p: u64, m: usize) -> Result<Field> {
        let base = Field::prime(p)?;
        if m == 0 {
            return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
        }
        if m == 1 {
            return Ok(base);
        }
        let q = checked_power(p, m).filter(|&q| q < MAX_ORDER).ok_or_else(|| {
            Error::FieldTooLarge(format!("{p}^{m} exceeds 2^48"))
        })?;
        let mut modulus = None;
        // Indices below q / p have c_0 = 0 and are divisible by x.
        for idx in q / p..q {
            let mut coeffs = big_endian_digits(idx, p, m);
            coeffs.push(1);
            let f = Poly::new(&base, coeffs.clone());
            if f.is_irreducible() {
                modulus = Some(coeffs);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial of every degree exists");
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i))
        } else {
            0
        };
        Ok(Field(Arc::new(FieldCtx {
            p,
            m,
            q,
            modulus: Some(modulus),
            modulus_bits,
            primitive: OnceLock::new(),
        })))
    }

    /// The field with `q` elements; `q` must be a prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::extension(p, e as usize)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.0.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.0.p as i64) as u64
    }

    /// Packs a coefficient vector (constant term first); missing entries are zero.
    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        assert!(digits.len() <= self.0.m, "too many digits for {self}");
        digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.0.p + d % self.0.p)
    }

    /// Coefficient vector of length m, constant term first.
    pub fn digits(&self, a: u64) -> Vec<u64> {
        let mut buf = [0u64; MAX_DEGREE];
        self.unpack(a, &mut buf);
        buf[..self.0.m].to_vec()
    }

    fn unpack(&self, mut a: u64, out: &mut [u64; MAX_DEGREE]) {
        let p = self.0.p;
        for slot in out.iter_mut().take(self.0.m) {
            *slot = a % p;
            a /= p;
        }
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        let p = self.0.p;
        digits[..self.0.m].iter().rev().fold(0u64, |acc, &d| acc * p + d)
    }

    /// The wrapper type carrying this field's identity.
    pub fn element(&self, code: u64) -> FieldElement {
        assert!(self.contains(code), "code {code} outside {self}");
        FieldElement {
            field: self.clone(),
            code,
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut da, mut db) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.unpack(a, &mut da);
        self.unpack(b, &mut db);
        for i in 0..self.0.m {
            let s = da[i] + db[i];
            da[i] = if s >= p { s - p } else { s };
        }
        self.pack(&da)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.m == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut da = [0u64; MAX_DEGREE];
        self.unpack(a, &mut da);
        for d in da.iter_mut().take(self.0.m) {
            if *d != 0 {
                *d = p - *d;
            }
        }
        self.pack(&da)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        let m = self.0.m;
        if m == 1 {
            return a * b % p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        if p == 2 {
            let mut prod: u128 = 0;
            let (a, mut b) = (a as u128, b as u128);
            let mut shift = 0;
            while b != 0 {
                if b & 1 == 1 {
                    prod ^= a << shift;
                }
                b >>= 1;
                shift += 1;
            }
            for d in (m..2 * m - 1).rev() {
                if (prod >> d) & 1 == 1 {
                    prod ^= self.0.modulus_bits << (d - m);
                }
            }
            return prod as u64;
        }
        let (mut da, mut db) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.unpack(a, &mut da);
        self.unpack(b, &mut db);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        let modulus = self.0.modulus.as_ref().expect("extension modulus");
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            let neg_c = p - c;
            for i in 0..m {
                prod[d - m + i] = (prod[d - m + i] + neg_c * modulus[i]) % p;
            }
            prod[d] = 0;
        }
        self.pack(&prod)
    }

    /// `a^e` for a nonnegative exponent.
    pub fn pow_u(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_u(a, self.0.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer exponent; negative exponents go through the inverse.
    pub fn pow(&self, a: u64, e: i64) -> Result<u64> {
        if e >= 0 {
            Ok(self.pow_u(a, e as u64))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow_u(inv, e.unsigned_abs()))
        }
    }

    /// Element codes ordered lexicographically by coefficient vector,
    /// constant term first, starting at zero.
    pub fn elements_lex(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.0.q).map(move |idx| {
            let digits = big_endian_digits(idx, self.0.p, self.0.m);
            self.pack(&digits)
        })
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let group = self.0.q - 1;
        let mut order = group;
        for r in arith::prime_divisors(group) {
            while order.is_multiple_of(r) && self.pow_u(a, order / r) == 1 {
                order /= r;
            }
        }
        Ok(order)
    }

    /// First element in lexicographic order that generates the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        *self.0.primitive.get_or_init(|| {
            let group = self.0.q - 1;
            let primes = arith::prime_divisors(group);
            self.elements_lex()
                .skip(1)
                .find(|&g| primes.iter().all(|&r| self.pow_u(g, group / r) != 1))
                .expect("multiplicative group of a finite field is cyclic")
        })
    }

    /// `g^((q-1)/n)` for the canonical primitive element `g`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<u64> {
        let group = self.0.q - 1;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::NoSuchRoot { n, q: self.0.q });
        }
        Ok(self.pow_u(self.primitive_element(), group / n))
    }

    /// Renders an element: a decimal residue for prime fields, otherwise the
    /// coefficient vector `(c_0,..,c_{m-1})`.
    pub fn format_element(&self, a: u64) -> String {
        if self.0.m == 1 {
            a.to_string()
        } else {
            let digits: Vec<String> = self.digits(a).iter().map(u64::to_string).collect();
            format!("({})", digits.join(","))
        }
    }
}

fn checked_power(p: u64, m: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..m {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Digits of `idx` in base `p`, most significant first, as a length-`m`
/// vector. Counting `idx` upwards walks coefficient vectors in
/// lexicographic order with the first entry most significant.
fn big_endian_digits(mut idx: u64, p: u64, m: usize) -> Vec<u64> {
    let mut out = vec![0u64; m];
    for slot in out.iter_mut().rev() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

/// An element together with the identity of its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: u64,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, code: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            code,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.code, other.code)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.code, other.code)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.code, other.code)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.div(self.code, other.code)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.code))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.code)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        Ok(self.wrap(self.field.pow(self.code, e)?))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(self.code))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        assert_eq!(Field::prime(7).unwrap().order(), 7);
        assert_eq!(Field::prime(2).unwrap().order(), 2);
        assert_eq!(Field::prime(4).unwrap_err(), Error::NonPrime(4));
        assert_eq!(Field::prime(1).unwrap_err(), Error::NonPrime(1));
        assert!(matches!(
            Field::prime(2_147_483_659),
            Err(Error::FieldTooLarge(_))
        ));
    }

    #[test]
    fn extension_construction() {
        let f = Field::extension(2, 5).unwrap();
        assert_eq!(f.order(), 32);
        let f = Field::extension(2, 1).unwrap();
        assert_eq!(f, Field::prime(2).unwrap());
        assert!(f.modulus().is_none());
        assert_eq!(Field::extension(6, 2).unwrap_err(), Error::NonPrime(6));
        assert!(matches!(Field::extension(2, 48), Err(Error::FieldTooLarge(_))));
        assert_eq!(Field::with_order(8).unwrap().degree(), 3);
        assert_eq!(Field::with_order(12).unwrap_err(), Error::NotPrimePower(12));
    }

    /// Exhaustive oracle: a cubic over GF(7) is irreducible iff it has no root.
    #[test]
    fn gf343_modulus_is_first_rootless_cubic() {
        let f = Field::extension(7, 3).unwrap();
        assert_eq!(f.order(), 343);
        let has_root = |c: &[u64]| {
            (0..7u64).any(|x| (c[0] + c[1] * x + c[2] * x * x + x * x * x).is_multiple_of(7))
        };
        let mut expected = None;
        'outer: for c0 in 0..7 {
            for c1 in 0..7 {
                for c2 in 0..7 {
                    if !has_root(&[c0, c1, c2]) {
                        expected = Some(vec![c0, c1, c2, 1]);
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(f.modulus().unwrap(), expected.unwrap().as_slice());
        assert_eq!(f.modulus().unwrap(), &[1, 0, 1, 1]);
    }

    #[test]
    fn gf32_modulus_and_reduction() {
        let f = Field::extension(2, 5).unwrap();
        // (1,0,0,0,0) < .. ; x^5+1 and x^5+x^4+1 are reducible, x^5+x^3+1 is not
        assert_eq!(f.modulus().unwrap(), &[1, 0, 0, 1, 0, 1]);
        let x = f.from_digits(&[0, 1]);
        let x4 = f.from_digits(&[0, 0, 0, 0, 1]);
        // x^5 = x^3 + 1 under this modulus
        assert_eq!(f.mul(x, x4), f.from_digits(&[1, 0, 0, 1, 0]));
    }

    #[test]
    fn small_prime_arithmetic() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3).unwrap(), 5);
        assert_eq!(f.inv(0).unwrap_err(), Error::DivisionByZero);
        assert_eq!(f.pow(3, -1).unwrap(), 5);
        assert_eq!(f.pow(3, -2).unwrap(), 4);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.sub(2, 5), 4);
    }

    #[test]
    fn element_wrapper_checks_field() {
        let f7 = Field::prime(7).unwrap();
        let f5 = Field::prime(5).unwrap();
        let a = f7.element(3);
        let b = f7.element(5);
        assert_eq!(a.mul(&b).unwrap().code(), 1);
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(a.add(&f5.element(1)).unwrap_err(), Error::FieldMismatch);
        assert_eq!(f7.element(0).inv().unwrap_err(), Error::DivisionByZero);
        let f9 = Field::with_order(9).unwrap();
        assert_eq!(f9.element(f9.from_digits(&[2, 1])).to_string(), "(2,1)");
    }

    #[test]
    fn fermat_and_inverse_hold_everywhere() {
        for (p, m) in [(2, 1), (2, 3), (2, 5), (3, 2), (5, 2), (7, 1), (7, 3), (2, 8)] {
            let f = Field::extension(p, m).unwrap();
            let q = f.order();
            for a in 1..q {
                assert_eq!(f.pow_u(a, q - 1), 1, "{f} a={a}");
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{f} a={a}");
            }
        }
    }

    #[test]
    fn distributivity_in_gf81() {
        let f = Field::extension(3, 4).unwrap();
        for a in (0..81).step_by(7) {
            for b in (0..81).step_by(5) {
                for c in (0..81).step_by(11) {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let f7 = Field::prime(7).unwrap();
        let g = f7.nth_root_of_unity(6).unwrap();
        assert_eq!(g, 3);
        assert_eq!(f7.mult_order(g).unwrap(), 6);
        assert_eq!(
            f7.nth_root_of_unity(4).unwrap_err(),
            Error::NoSuchRoot { n: 4, q: 7 }
        );

        let f8 = Field::with_order(8).unwrap();
        let eta = f8.nth_root_of_unity(7).unwrap();
        assert_ne!(eta, 1);
        assert_eq!(f8.mult_order(eta).unwrap(), 7);

        let f128 = Field::extension(2, 7).unwrap();
        let eta = f128.nth_root_of_unity(127).unwrap();
        assert_eq!(f128.pow_u(eta, 127), 1);
        for k in 1..127 {
            assert_ne!(f128.pow_u(eta, k), 1);
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = Field::extension(3, 5).unwrap();
        let b = Field::extension(3, 5).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a, b);
        assert_eq!(
            a.nth_root_of_unity(11).unwrap(),
            b.nth_root_of_unity(11).unwrap()
        );
    }

    #[test]
    fn lexicographic_element_order() {
        let f = Field::with_order(9).unwrap();
        let order: Vec<Vec<u64>> = f.elements_lex().take(4).map(|a| f.digits(a)).collect();
        assert_eq!(order, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0]]);
    }
}
