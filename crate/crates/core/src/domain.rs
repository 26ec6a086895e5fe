//! Coefficient domains: a prime field with Montgomery arithmetic and
//! exact rationals.
//!
//! All linear algebra in this crate is generic over [`Domain`]. The two
//! production domains are [`PrimeField`] (fast, default) and [`Rationals`]
//! (exact over Q, intended for small slices). A rank computed over F_p is
//! a lower bound for the rank over Q, so graded dimensions of quotients
//! can only grow when reduced mod p; in particular a singular input never
//! looks smooth mod p.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A commutative coefficient domain with exact arithmetic.
///
/// Elements are plain data; every operation goes through the domain value
/// so that a prime field can carry its modulus. `inv` returns `None` for
/// zero and for non-units, which lets non-field domains participate in
/// polynomial arithmetic while being rejected by elimination.
pub trait Domain: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` when `a` is zero or not a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of the exact rational `num/den`. Errors when `den` maps to a
    /// non-unit (e.g. a denominator divisible by the prime).
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    /// Canonical text form of an element. Prime-field elements print as
    /// the symmetric representative in (-p/2, p/2].
    fn display(&self, a: &Self::Elem) -> String;
    /// Short label identifying the domain, e.g. `fp(12289)` or `rationals`.
    fn label(&self) -> String;
}

/// Deterministic Miller-Rabin over u64.
///
/// The base set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is a proven
/// witness set for all 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        base %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// F_p with p an odd prime below 2^63, elements in Montgomery form.
///
/// Montgomery representation keeps multiplication free of 128-bit
/// remainders in the elimination inner loops. Elements are opaque u64
/// values; use [`PrimeField::lift`] or [`Domain::display`] to read them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
    /// -p^{-1} mod 2^64.
    neg_inv: u64,
    /// 2^128 mod p, used to enter Montgomery form.
    r2: u64,
    /// 2^64 mod p, the Montgomery image of 1.
    r1: u64,
}

/// Default modulus: 2^62 - 57, the largest prime below 2^62 - 32.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;

/// Primes used for cross-prime agreement checks. All three are 62-bit.
pub const AGREEMENT_PRIMES: [u64; 3] = [
    DEFAULT_PRIME,
    4_611_686_018_427_387_817,
    4_611_686_018_427_387_787,
];

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || p >= (1 << 63) || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        // Newton iteration doubles the number of correct low bits.
        let mut inv = p;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        debug_assert_eq!(p.wrapping_mul(inv), 1);
        let r1 = (((1u128 << 64) % p as u128) & u64::MAX as u128) as u64;
        let r2 = ((r1 as u128 * r1 as u128) % p as u128) as u64;
        Ok(PrimeField {
            p,
            neg_inv: inv.wrapping_neg(),
            r2,
            r1,
        })
    }

    pub fn default_field() -> Self {
        PrimeField::new(DEFAULT_PRIME).expect("default modulus is prime")
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Montgomery reduction of t < p * 2^64.
    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let reduced = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if reduced >= self.p {
            reduced - self.p
        } else {
            reduced
        }
    }

    #[inline]
    fn to_mont(&self, a: u64) -> u64 {
        self.redc(a as u128 * self.r2 as u128)
    }

    /// Canonical representative in [0, p).
    #[inline]
    pub fn lift(&self, a: &u64) -> u64 {
        self.redc(*a as u128)
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn lift_symmetric(&self, a: &u64) -> i128 {
        let v = self.lift(a) as i128;
        let p = self.p as i128;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }

    /// Montgomery image of n mod p for any u64 n.
    pub fn elem_from_u64(&self, n: u64) -> u64 {
        self.to_mont(n % self.p)
    }

    fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.r1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.redc(acc as u128 * base as u128);
            }
            base = self.redc(base as u128 * base as u128);
            e >>= 1;
        }
        acc
    }

    fn bigint_rem(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        r.to_u64().expect("residue fits in u64")
    }
}

impl Domain for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        self.r1
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.redc(*a as u128 * *b as u128)
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }

    fn from_i64(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64) as u64;
        self.to_mont(r)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let n = self.to_mont(self.bigint_rem(num));
        let d = self.to_mont(self.bigint_rem(den));
        let d_inv = self.inv(&d).ok_or_else(|| Error::BadDenominator {
            den: den.to_string(),
            prime: self.p,
        })?;
        Ok(self.mul(&n, &d_inv))
    }

    fn display(&self, a: &u64) -> String {
        self.lift_symmetric(a).to_string()
    }

    fn label(&self) -> String {
        format!("fp({})", self.p)
    }
}

/// The rational numbers with arbitrary-precision exact arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Domain for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn display(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn label(&self) -> String {
        "rationals".into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_agrees_with_small_sieve() {
        let primes: Vec<u64> = (2..200).filter(|&n| (2..n).all(|d| n % d != 0)).collect();
        for n in 2..200 {
            assert_eq!(is_prime_u64(n), primes.contains(&n), "n = {n}");
        }
    }

    #[test]
    fn default_and_agreement_moduli_are_prime() {
        for p in AGREEMENT_PRIMES {
            assert!(is_prime_u64(p), "{p}");
        }
        assert_eq!(DEFAULT_PRIME, (1u64 << 62) - 57);
    }

    #[test]
    fn rejects_non_prime_modulus() {
        assert_eq!(PrimeField::new(10), Err(Error::NotPrime(10)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        // 2^63 + 29 would overflow the Montgomery bound even if prime.
        assert!(PrimeField::new((1 << 63) + 29).is_err());
    }

    #[test]
    fn field_arithmetic_round_trips() {
        let f = PrimeField::new(12289).unwrap();
        for a in [0i64, 1, 2, -1, 6144, 12288, 100_000] {
            let ea = f.from_i64(a);
            assert_eq!(f.lift(&ea), a.rem_euclid(12289) as u64);
        }
        let a = f.from_i64(colliding(35));
        let b = f.from_i64(colliding(77));
        let prod = f.mul(&a, &b);
        assert_eq!(f.lift(&prod), ((colliding(35) * colliding(77)) % 12289) as u64);
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        assert!(f.inv(&f.zero()).is_none());
    }

    fn colliding(n: i64) -> i64 {
        // Values above the modulus exercise the reduction path.
        n * 1000 + 7
    }

    #[test]
    fn symmetric_lift_splits_at_half() {
        let f = PrimeField::new(12289).unwrap();
        assert_eq!(f.lift_symmetric(&f.from_i64(1)), 1);
        assert_eq!(f.lift_symmetric(&f.from_i64(-1)), -1);
        assert_eq!(f.lift_symmetric(&f.from_i64(6144)), 6144);
        assert_eq!(f.lift_symmetric(&f.from_i64(6145)), -6144);
        assert_eq!(f.display(&f.from_i64(-2)), "-2");
    }

    #[test]
    fn ratio_with_bad_denominator_is_rejected() {
        let f = PrimeField::new(5).unwrap();
        let err = f.from_ratio(&BigInt::from(1), &BigInt::from(10));
        assert!(matches!(err, Err(Error::BadDenominator { .. })));
        let ok = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        // 1/2 = 3 mod 5.
        assert_eq!(f.lift(&ok), 3);
    }

    #[test]
    fn rational_display_omits_unit_denominator() {
        let q = Rationals;
        let half = q.from_ratio(&BigInt::from(-1), &BigInt::from(2)).unwrap();
        assert_eq!(q.display(&half), "-1/2");
        assert_eq!(q.display(&q.from_i64(7)), "7");
    }

    #[test]
    fn big_prime_arithmetic_matches_u128_reference() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let a = 4_611_686_018_427_387_846u64;
        let b = 2_305_843_009_213_693_951u64;
        let ea = f.elem_from_u64(a);
        let eb = f.elem_from_u64(b);
        let expect = ((a as u128 * b as u128) % DEFAULT_PRIME as u128) as u64;
        assert_eq!(f.lift(&f.mul(&ea, &eb)), expect);
    }
}
