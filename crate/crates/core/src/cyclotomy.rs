//! Residue combinatorics modulo a prime `n = 12m + 7`: primitive roots,
//! the six sextic cyclotomic classes, and q-ary cyclotomic cosets.

use std::collections::BTreeSet;

use crate::arith;
use crate::error::{Error, Result};

/// Least `g >= 2` of multiplicative order `n - 1` modulo the prime `n`.
pub fn smallest_primitive_root(n: u64) -> Result<u64> {
    if !arith::is_prime(n) {
        return Err(Error::NonPrime(n));
    }
    if n == 2 {
        return Ok(1);
    }
    Ok((2..n)
        .find(|&g| is_primitive_root(g, n))
        .expect("a prime modulus has a primitive root"))
}

pub fn is_primitive_root(g: u64, n: u64) -> bool {
    !g.is_multiple_of(n) && arith::mult_order(g, n) == Some(n - 1)
}

/// True iff `n` is a prime congruent to 7 modulo 12.
pub fn is_valid_modulus(n: u64) -> bool {
    n % 12 == 7 && arith::is_prime(n)
}

/// The partition of `{1, .., n-1}` into six classes `gamma^{6j+i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticClasses {
    n: u64,
    gamma: u64,
    classes: [Vec<u64>; 6],
}

impl SexticClasses {
    /// Builds the classes for `gamma`, defaulting to the smallest primitive root.
    pub fn new(n: u64, gamma: Option<u64>) -> Result<SexticClasses> {
        if !is_valid_modulus(n) {
            return Err(Error::BadModulus(n));
        }
        let gamma = match gamma {
            Some(g) if is_primitive_root(g, n) => g % n,
            Some(g) => return Err(Error::NotPrimitive { gamma: g, n }),
            None => smallest_primitive_root(n)?,
        };
        let size = (n - 1) / 6;
        let classes = std::array::from_fn(|i| {
            let mut class: Vec<u64> = (0..size)
                .map(|j| arith::pow_mod(gamma, 6 * j + i as u64, n))
                .collect();
            class.sort_unstable();
            class
        });
        Ok(SexticClasses { n, gamma, classes })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    /// Sorted members of class `i` (taken mod 6).
    pub fn class(&self, i: usize) -> &[u64] {
        &self.classes[i % 6]
    }

    pub fn classes(&self) -> &[Vec<u64>; 6] {
        &self.classes
    }

    /// Common size `(n - 1) / 6` of every class.
    pub fn class_size(&self) -> usize {
        ((self.n - 1) / 6) as usize
    }

    /// Index of the class holding the nonzero residue `r`.
    pub fn index_of(&self, r: u64) -> Option<usize> {
        let r = r % self.n;
        self.classes
            .iter()
            .position(|c| c.binary_search(&r).is_ok())
    }

    pub fn contains_sextic_residue(&self, q: u64) -> bool {
        self.classes[0].binary_search(&(q % self.n)).is_ok()
    }
}

/// Checks `-C_0 = C_3`, `-C_1 = C_4` and `-C_2 = C_5` as sets.
pub fn negation_map_check(classes: &SexticClasses) -> bool {
    let n = classes.n();
    (0..3).all(|i| {
        let negated: BTreeSet<u64> = classes.class(i).iter().map(|&a| n - a).collect();
        let target: BTreeSet<u64> = classes.class(i + 3).iter().copied().collect();
        negated == target
    })
}

/// Orbit of `s` under multiplication by `q` modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    representative: u64,
    n: u64,
    q: u64,
    elements: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn new(s: u64, n: u64, q: u64) -> Result<CyclotomicCoset> {
        if n == 0 || arith::gcd(q, n) != 1 {
            return Err(Error::NotCoprime { q, n });
        }
        let start = s % n;
        let mut elements = vec![start];
        let mut cur = arith::mul_mod(start, q, n);
        while cur != start {
            elements.push(cur);
            cur = arith::mul_mod(cur, q, n);
        }
        let representative = *elements.iter().min().expect("nonempty orbit");
        Ok(CyclotomicCoset {
            representative,
            n,
            q,
            elements,
        })
    }

    /// Minimal element of the orbit.
    pub fn representative(&self) -> u64 {
        self.representative
    }

    /// Members in generation order `s, sq, sq^2, ..`.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// How each sextic class splits into q-cyclotomic cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDecomposition {
    pub q: u64,
    /// `ord_n(q)`, the common coset size.
    pub ell: usize,
    /// Cosets per class, `(n - 1) / (6 ell)`.
    pub t: usize,
    /// Sorted minimal representatives of the cosets making up each class.
    pub representatives: [Vec<u64>; 6],
}

pub fn class_coset_decomposition(
    classes: &SexticClasses,
    q: u64,
) -> Result<ClassDecomposition> {
    let n = classes.n();
    if !classes.contains_sextic_residue(q) {
        return Err(Error::QNotSexticResidue { q, n });
    }
    let ell = arith::mult_order(q, n).expect("q is a unit mod n") as usize;
    let representatives = std::array::from_fn(|i| {
        let mut seen = BTreeSet::new();
        let mut reps = Vec::new();
        for &a in classes.class(i) {
            if seen.contains(&a) {
                continue;
            }
            let coset = CyclotomicCoset::new(a, n, q).expect("q coprime to n");
            seen.extend(coset.elements().iter().copied());
            reps.push(coset.representative());
        }
        reps.sort_unstable();
        reps
    });
    Ok(ClassDecomposition {
        q,
        ell,
        t: classes.class_size() / ell,
        representatives,
    })
}

/// A modulus/field-size pair for which the sextic construction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ValidPair {
    pub n: u64,
    pub q: u64,
    pub ell: u64,
    pub t: u64,
}

impl ValidPair {
    /// Whether the augmentation families (which need `t >= 3`) exist.
    pub fn family_eligible(&self) -> bool {
        self.t >= 3
    }
}

/// All prime `n = 12m + 7 <= n_max` and prime powers `q <= q_max` with
/// `q mod n` a sextic residue, ordered by `(n, q)`.
pub fn enumerate_valid_pairs(n_max: u64, q_max: u64) -> Vec<ValidPair> {
    let prime_powers: Vec<u64> = (2..=q_max)
        .filter(|&q| arith::prime_power(q).is_some())
        .collect();
    let mut out = Vec::new();
    for n in (7..=n_max).filter(|&n| is_valid_modulus(n)) {
        let classes = SexticClasses::new(n, None).expect("valid modulus");
        for &q in &prime_powers {
            if q % n == 0 || !classes.contains_sextic_residue(q) {
                continue;
            }
            let ell = arith::mult_order(q, n).expect("unit");
            out.push(ValidPair {
                n,
                q,
                ell,
                t: (n - 1) / (6 * ell),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_roots() {
        assert_eq!(smallest_primitive_root(19).unwrap(), 2);
        assert_eq!(smallest_primitive_root(7).unwrap(), 3);
        assert_eq!(smallest_primitive_root(127).unwrap(), 3);
        assert_eq!(smallest_primitive_root(21).unwrap_err(), Error::NonPrime(21));
        // independent check: 2^(18/r) != 1 mod 19 for r in {2, 3}
        assert_ne!(arith::pow_mod(2, 9, 19), 1);
        assert_ne!(arith::pow_mod(2, 6, 19), 1);
    }

    #[test]
    fn classes_for_small_moduli() {
        let s = SexticClasses::new(7, Some(3)).unwrap();
        for i in 0..6 {
            assert_eq!(s.class(i), &[arith::pow_mod(3, i as u64, 7)]);
        }
        let s = SexticClasses::new(19, Some(2)).unwrap();
        assert_eq!(s.class(0), &[1, 7, 11]);
        assert_eq!(SexticClasses::new(11, None).unwrap_err(), Error::BadModulus(11));
        assert_eq!(SexticClasses::new(55, None).unwrap_err(), Error::BadModulus(55));
        assert_eq!(
            SexticClasses::new(19, Some(7)).unwrap_err(),
            Error::NotPrimitive { gamma: 7, n: 19 }
        );
    }

    #[test]
    fn class_zero_for_127_gamma_39() {
        let s = SexticClasses::new(127, Some(39)).unwrap();
        assert_eq!(
            s.class(0),
            &[1, 2, 4, 8, 16, 19, 25, 32, 38, 47, 50, 61, 64, 73, 76, 87, 94, 100, 107, 117, 122]
        );
    }

    #[test]
    fn negation_map() {
        for n in [7, 19, 31, 43, 127] {
            assert!(negation_map_check(&SexticClasses::new(n, None).unwrap()));
        }
        let s = SexticClasses::new(127, Some(39)).unwrap();
        assert!(negation_map_check(&s));
        assert!(!s.class(0).contains(&126));
        assert!(s.class(3).contains(&126));
    }

    #[test]
    fn cosets() {
        let c = CyclotomicCoset::new(1, 127, 2).unwrap();
        assert_eq!(c.sorted(), vec![1, 2, 4, 8, 16, 32, 64]);
        let c = CyclotomicCoset::new(19, 127, 2).unwrap();
        assert_eq!(c.elements(), &[19, 38, 76, 25, 50, 100, 73]);
        assert_eq!(c.representative(), 19);
        let c = CyclotomicCoset::new(0, 127, 2).unwrap();
        assert_eq!(c.elements(), &[0]);
        assert_eq!(
            CyclotomicCoset::new(1, 127, 254).unwrap_err(),
            Error::NotCoprime { q: 254, n: 127 }
        );
    }

    #[test]
    fn decompositions() {
        let s = SexticClasses::new(127, Some(39)).unwrap();
        let d = class_coset_decomposition(&s, 2).unwrap();
        assert_eq!((d.ell, d.t), (7, 3));
        assert_eq!(d.representatives[0], vec![1, 19, 47]);

        let s = SexticClasses::new(19, None).unwrap();
        let d = class_coset_decomposition(&s, 7).unwrap();
        assert_eq!((d.ell, d.t), (3, 1));
        assert_eq!(d.representatives[0], vec![1]);
        assert_eq!(
            class_coset_decomposition(&s, 3).unwrap_err(),
            Error::QNotSexticResidue { q: 3, n: 19 }
        );
        // q is reduced mod n before the membership test
        let d83 = class_coset_decomposition(&s, 83).unwrap();
        assert_eq!(d83.representatives, d.representatives);
    }

    #[test]
    fn valid_pairs() {
        let pairs = enumerate_valid_pairs(130, 8);
        let has = |n, q, ell, t| pairs.contains(&ValidPair { n, q, ell, t });
        assert!(has(127, 2, 7, 3));
        assert!(has(19, 7, 3, 1));
        assert!(has(31, 2, 5, 1));
        assert!(has(7, 8, 1, 1));
        assert!(enumerate_valid_pairs(6, 100).is_empty());
        assert!(pairs.windows(2).all(|w| (w[0].n, w[0].q) < (w[1].n, w[1].q)));
    }
}
