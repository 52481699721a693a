//! Exact coefficient arithmetic over the supported commutative rings.
//!
//! Three rings are available: arbitrary-precision integers, arbitrary-precision
//! rationals (always stored reduced with positive denominator) and integers
//! modulo `n` with residues kept in `[0, n)`. A [`Weight`] wraps the fixed ring
//! element that scales merged terms in the shuffle products.

use std::fmt;

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Identifies one of the supported coefficient rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// Arbitrary-precision integers.
    Int,
    /// Arbitrary-precision rationals.
    Rat,
    /// Integers modulo `n`, with `n >= 2`.
    Mod(u64),
}

impl RingDescriptor {
    /// Builds the ring of integers modulo `n`, rejecting `n < 2`.
    pub fn modular(n: u64) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(RingDescriptor::Mod(n))
    }

    /// Parses a ring selector: `int`, `rat` or `mod:<n>`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "int" => Ok(RingDescriptor::Int),
            "rat" => Ok(RingDescriptor::Rat),
            _ => {
                if let Some(num) = s.strip_prefix("mod:") {
                    let n: u64 = num
                        .parse()
                        .map_err(|_| Error::UnknownRing(s.to_string()))?;
                    RingDescriptor::modular(n)
                } else {
                    Err(Error::UnknownRing(s.to_string()))
                }
            }
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Int => write!(f, "int"),
            RingDescriptor::Rat => write!(f, "rat"),
            RingDescriptor::Mod(n) => write!(f, "mod:{n}"),
        }
    }
}

/// An exact element of one of the supported rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Mod { modulus: u64, value: u64 },
}

fn mod_reduce_bigint(v: &BigInt, n: u64) -> u64 {
    let m = BigInt::from(n);
    let mut r = v % &m;
    if r.sign() == Sign::Minus {
        r += &m;
    }
    r.to_u64().expect("residue fits u64")
}

impl Coeff {
    /// The ring this element belongs to.
    pub fn ring(&self) -> RingDescriptor {
        match self {
            Coeff::Int(_) => RingDescriptor::Int,
            Coeff::Rat(_) => RingDescriptor::Rat,
            Coeff::Mod { modulus, .. } => RingDescriptor::Mod(*modulus),
        }
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        Coeff::from_i64(ring, 0)
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Coeff::from_i64(ring, 1)
    }

    pub fn from_i64(ring: &RingDescriptor, v: i64) -> Self {
        Coeff::from_bigint(ring, &BigInt::from(v))
    }

    /// Embeds an integer into the ring.
    pub fn from_bigint(ring: &RingDescriptor, v: &BigInt) -> Self {
        match ring {
            RingDescriptor::Int => Coeff::Int(v.clone()),
            RingDescriptor::Rat => Coeff::Rat(BigRational::from_integer(v.clone())),
            RingDescriptor::Mod(n) => Coeff::Mod {
                modulus: *n,
                value: mod_reduce_bigint(v, *n),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Int(v) => v.is_zero(),
            Coeff::Rat(v) => v.is_zero(),
            Coeff::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Int(v) => v.is_one(),
            Coeff::Rat(v) => v.is_one(),
            Coeff::Mod { value, .. } => *value == 1,
        }
    }

    fn require_same_ring(&self, other: &Coeff) -> Result<(), Error> {
        let (l, r) = (self.ring(), other.ring());
        if l == r {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: l, right: r })
        }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff, Error> {
        self.require_same_ring(other)?;
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Coeff) -> Result<Coeff, Error> {
        self.require_same_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff, Error> {
        self.require_same_ring(other)?;
        Ok(self.mul(other))
    }

    /// Ring addition. Panics on a ring mismatch; use [`Coeff::checked_add`]
    /// at API boundaries.
    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a + b),
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (
                Coeff::Mod { modulus: m, value: a },
                Coeff::Mod { modulus: n, value: b },
            ) if m == n => Coeff::Mod {
                modulus: *m,
                value: ((*a as u128 + *b as u128) % *m as u128) as u64,
            },
            _ => panic!("ring mismatch in Coeff::add"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Int(a), Coeff::Int(b)) => Coeff::Int(a * b),
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (
                Coeff::Mod { modulus: m, value: a },
                Coeff::Mod { modulus: n, value: b },
            ) if m == n => Coeff::Mod {
                modulus: *m,
                value: ((*a as u128 * *b as u128) % *m as u128) as u64,
            },
            _ => panic!("ring mismatch in Coeff::mul"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Int(a) => Coeff::Int(-a),
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod { modulus, value } => Coeff::Mod {
                modulus: *modulus,
                value: if *value == 0 { 0 } else { modulus - value },
            },
        }
    }

    pub fn pow(&self, k: u32) -> Coeff {
        let mut acc = Coeff::one(&self.ring());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Parses a literal in the given ring. Integers are accepted everywhere;
    /// `p/q` only in the rational ring. Negative literals reduce canonically
    /// in modular rings.
    pub fn parse_in(ring: &RingDescriptor, s: &str) -> Result<Coeff, Error> {
        let bad = || Error::BadLiteral {
            ring: ring.clone(),
            literal: s.to_string(),
        };
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            if *ring != RingDescriptor::Rat {
                return Err(bad());
            }
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Coeff::Rat(BigRational::new(p, q)));
        }
        let v: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Coeff::from_bigint(ring, &v))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(v) => write!(f, "{v}"),
            Coeff::Rat(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Coeff::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

/// The fixed ring element scaling each merged slot in shuffle products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub lambda: Coeff,
}

impl Weight {
    pub fn new(lambda: Coeff) -> Self {
        Weight { lambda }
    }

    pub fn of_i64(ring: &RingDescriptor, v: i64) -> Self {
        Weight::new(Coeff::from_i64(ring, v))
    }

    pub fn ring(&self) -> RingDescriptor {
        self.lambda.ring()
    }

    /// `lambda^0, ..., lambda^max` as a lookup table.
    pub fn powers(&self, max: usize) -> Vec<Coeff> {
        let mut out = Vec::with_capacity(max + 1);
        out.push(Coeff::one(&self.ring()));
        for k in 1..=max {
            let next = out[k - 1].mul(&self.lambda);
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)
    }
}

/// `n choose k` as an arbitrary-precision integer, zero when `k > n`.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient with signed arguments; zero outside `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial_int(n as u64, k as u64)
    }
}

/// `n choose k` embedded into the given ring, zero when `k > n`.
pub fn binomial(ring: &RingDescriptor, n: u64, k: u64) -> Coeff {
    Coeff::from_bigint(ring, &binomial_int(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Coeff {
        Coeff::Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    #[test]
    fn rational_addition_reduces() {
        let sum = rat(1, 2).add(&rat(1, 3));
        assert_eq!(sum, rat(5, 6));
    }

    #[test]
    fn modular_multiplication_wraps() {
        let ring = RingDescriptor::modular(5).unwrap();
        let a = Coeff::from_i64(&ring, 3);
        let b = Coeff::from_i64(&ring, 4);
        assert_eq!(a.mul(&b), Coeff::from_i64(&ring, 2));
    }

    #[test]
    fn additive_identity() {
        let a = Coeff::from_i64(&RingDescriptor::Int, 41);
        assert_eq!(a.add(&Coeff::zero(&RingDescriptor::Int)), a);
    }

    #[test]
    fn mixed_ring_operands_error() {
        let a = Coeff::from_i64(&RingDescriptor::Int, 1);
        let b = Coeff::from_i64(&RingDescriptor::Rat, 1);
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::RingMismatch { .. })
        ));
        let c = Coeff::from_i64(&RingDescriptor::modular(5).unwrap(), 1);
        let d = Coeff::from_i64(&RingDescriptor::modular(7).unwrap(), 1);
        assert!(c.checked_mul(&d).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_int(4, 2), BigInt::from(6));
        assert_eq!(binomial_int(3, 5), BigInt::zero());
        for n in 0..=20 {
            assert_eq!(binomial_int(n, 0), BigInt::one());
        }
        // Large enough to overflow a machine word.
        assert_eq!(
            binomial_int(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn pascal_identity() {
        for n in 1..=30u64 {
            for k in 1..=n {
                assert_eq!(
                    binomial_int(n, k),
                    binomial_int(n - 1, k) + binomial_int(n - 1, k - 1)
                );
            }
        }
    }

    #[test]
    fn negative_literal_in_modular_ring() {
        let ring = RingDescriptor::modular(7).unwrap();
        assert_eq!(
            Coeff::parse_in(&ring, "-1").unwrap(),
            Coeff::from_i64(&ring, 6)
        );
    }

    #[test]
    fn rational_literal_only_in_rat() {
        assert!(Coeff::parse_in(&RingDescriptor::Int, "2/3").is_err());
        assert_eq!(
            Coeff::parse_in(&RingDescriptor::Rat, "2/3").unwrap(),
            rat(2, 3)
        );
        assert_eq!(
            Coeff::parse_in(&RingDescriptor::Rat, "4/-2").unwrap(),
            rat(-2, 1)
        );
    }

    #[test]
    fn ring_selector_parsing() {
        assert_eq!(RingDescriptor::parse("int").unwrap(), RingDescriptor::Int);
        assert_eq!(RingDescriptor::parse("rat").unwrap(), RingDescriptor::Rat);
        assert_eq!(
            RingDescriptor::parse("mod:11").unwrap(),
            RingDescriptor::Mod(11)
        );
        assert!(RingDescriptor::parse("mod:1").is_err());
        assert!(RingDescriptor::parse("float").is_err());
    }
}
