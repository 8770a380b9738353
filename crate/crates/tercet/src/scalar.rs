//! Exact field scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Every scalar carries its field context explicitly. Rationals are kept
//! reduced with a positive denominator (the `num` crate maintains this
//! canonical form); residues are kept in `[0, p)` for a prime `p <= 2^31`
//! fixed per context. There is no floating point anywhere and no global
//! state; mixing contexts is rejected at the public construction points.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A field context: the rationals, or F_p for a fixed prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Fp(u32),
}

impl Field {
    pub fn describe(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Fp(p) => format!("F_{p}"),
        }
    }

    /// Checks that `p` is prime and small enough for a context.
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Field::Fp(p))
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            Field::Rational => s.serialize_str("rational"),
            Field::Fp(p) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("prime", p)?;
                m.end()
            }
        }
    }
}

/// Deterministic trial-division primality check, adequate for p <= 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element in one of the two supported contexts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { value: u64, prime: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { prime, .. } => Field::Fp(*prime),
        }
    }

    pub fn zero(field: Field) -> Scalar {
        Scalar::from_bigint(BigInt::zero(), field)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_bigint(BigInt::one(), field)
    }

    pub fn from_int(n: i64, field: Field) -> Scalar {
        Scalar::from_bigint(BigInt::from(n), field)
    }

    pub fn from_bigint(n: BigInt, field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rat(BigRational::from_integer(n)),
            Field::Fp(p) => Scalar::Fp {
                value: bigint_mod(&n, p),
                prime: p,
            },
        }
    }

    pub fn from_rational(num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rat(BigRational::new(num, den)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "field context mismatch: {} vs {}",
            self.field().describe(),
            other.field().describe()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { value: a, prime }, Scalar::Fp { value: b, .. }) => {
                let p = *prime as u64;
                Scalar::Fp {
                    value: (a + b) % p,
                    prime: *prime,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { value: a, prime }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                value: mul_mod(*a, *b, *prime as u64),
                prime: *prime,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { value, prime } => Scalar::Fp {
                value: if *value == 0 {
                    0
                } else {
                    *prime as u64 - *value
                },
                prime: *prime,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { value, prime } => Scalar::Fp {
                value: inv_mod(*value, *prime as u64)
                    .ok_or_else(|| Error::NonInvertible(value.to_string(), *prime))?,
                prime: *prime,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.assert_same_field(other);
        Ok(self.mul(&other.inv()?))
    }

    /// Reduces a rational scalar modulo `q`; `None` when the denominator
    /// vanishes mod `q`. Prime-field scalars reduce only in their own field.
    pub fn reduce_mod(&self, q: u64) -> Option<u64> {
        match self {
            Scalar::Rat(r) => {
                let num = bigint_mod_u64(r.numer(), q);
                let den = bigint_mod_u64(r.denom(), q);
                let inv = inv_mod(den, q)?;
                Some(mul_mod(num, inv, q))
            }
            Scalar::Fp { value, prime } => {
                if *prime as u64 == q {
                    Some(*value)
                } else {
                    None
                }
            }
        }
    }

    /// Parses the serialization format: `"n"` or `"n/d"` in decimal, with an
    /// optional sign. In a prime-field context the value is reduced mod p.
    pub fn parse(text: &str, field: Field) -> Result<Scalar> {
        let text = text.trim();
        let bad = |msg: &str| Error::ScalarParse(text.to_string(), msg.to_string());
        let (num_str, den_str) = match text.split_once('/') {
            None => (text, None),
            Some((n, d)) => (n, Some(d)),
        };
        let num: BigInt = num_str
            .trim()
            .parse()
            .map_err(|_| bad("invalid integer numerator"))?;
        let den: Option<BigInt> = match den_str {
            None => None,
            Some(d) => Some(
                d.trim()
                    .parse()
                    .map_err(|_| bad("invalid integer denominator"))?,
            ),
        };
        match field {
            Field::Rational => match den {
                None => Ok(Scalar::from_bigint(num, field)),
                Some(d) => Scalar::from_rational(num, d),
            },
            Field::Fp(_) => {
                let n = Scalar::from_bigint(num, field);
                match den {
                    None => Ok(n),
                    Some(d) => n.div(&Scalar::from_bigint(d, field)),
                }
            }
        }
    }

    /// Total order used for canonical sorting. Within one context this is the
    /// numeric order (residues compare by representative); across contexts it
    /// orders by context first, which only matters for heterogeneous sorts.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Fp { value: a, prime: p }, Scalar::Fp { value: b, prime: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
            (Scalar::Rat(_), Scalar::Fp { .. }) => Ordering::Less,
            (Scalar::Fp { .. }, Scalar::Rat(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.canonical_cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

pub(crate) fn bigint_mod(n: &BigInt, p: u32) -> u64 {
    bigint_mod_u64(n, p as u64)
}

fn bigint_mod_u64(n: &BigInt, q: u64) -> u64 {
    let m = n.magnitude() % q;
    let m = m.to_u64_digits().first().copied().unwrap_or(0);
    if n.sign() == Sign::Minus && m != 0 {
        q - m
    } else {
        m
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse by the extended Euclidean algorithm; `None` when gcd(a, p) > 1.
pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, Field::Rational).unwrap()
    }

    #[test]
    fn rationals_stay_reduced_with_positive_denominator() {
        let x = Scalar::from_rational(BigInt::from(4), BigInt::from(-6)).unwrap();
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("-0/7").to_string(), "0");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "1", "-1", "7/3", "-22/7", "100000000000000000001"] {
            assert_eq!(q(s).to_string(), s);
        }
        let f = Field::prime(7).unwrap();
        assert_eq!(Scalar::parse("-1", f).unwrap().to_string(), "6");
        assert_eq!(Scalar::parse("10", f).unwrap().to_string(), "3");
        // 1/2 = 4 mod 7
        assert_eq!(Scalar::parse("1/2", f).unwrap().to_string(), "4");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Scalar::parse("", Field::Rational).is_err());
        assert!(Scalar::parse("1/0", Field::Rational).is_err());
        assert!(Scalar::parse("a/b", Field::Rational).is_err());
        assert!(Scalar::parse("1.5", Field::Rational).is_err());
        assert!(Scalar::parse("3/7", Field::Fp(7)).is_err());
    }

    #[test]
    fn field_arithmetic_mod_p() {
        let f = Field::prime(11).unwrap();
        let a = Scalar::from_int(8, f);
        let b = Scalar::from_int(5, f);
        assert_eq!(a.add(&b).to_string(), "2");
        assert_eq!(a.mul(&b).to_string(), "7");
        assert_eq!(a.sub(&b).to_string(), "3");
        assert_eq!(a.inv().unwrap().mul(&a).to_string(), "1");
        assert!(Scalar::zero(f).inv().is_err());
    }

    #[test]
    #[should_panic(expected = "field context mismatch")]
    fn mixing_contexts_panics() {
        let a = Scalar::from_int(1, Field::Rational);
        let b = Scalar::from_int(1, Field::Fp(7));
        let _ = a.add(&b);
    }

    #[test]
    fn prime_check() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(3).is_ok());
        assert!(Field::prime(2147483647).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(2147483646).is_err());
    }

    #[test]
    fn inv_mod_extended_euclid() {
        for p in [3u64, 7, 31, 2147483647] {
            for a in 1..20u64 {
                if a % p == 0 {
                    continue;
                }
                let i = inv_mod(a, p).unwrap();
                assert_eq!(mul_mod(a % p, i, p), 1);
            }
        }
        assert_eq!(inv_mod(6, 9), None);
    }

    #[test]
    fn reduce_mod_handles_denominators() {
        let x = q("3/4");
        // 3 * inv(4) mod 7 = 3 * 2 = 6
        assert_eq!(x.reduce_mod(7), Some(6));
        let y = q("1/7");
        assert_eq!(y.reduce_mod(7), None);
        let z = q("-1");
        assert_eq!(z.reduce_mod(7), Some(6));
    }
}
