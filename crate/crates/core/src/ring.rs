//! Entire rings (commutative, unital, no zero divisors) and their fraction
//! fields.
//!
//! Three concrete rings are provided: [`Integers`], [`Rationals`] and
//! [`PrimeField`]. Every algorithm in this crate is generic over [`Ring`], so
//! the same code path runs in characteristic zero and in characteristic `p`.
//! The only bridge from the integers is [`Ring::from_int`], the canonical
//! homomorphism `Z -> k`; binomial coefficients and other integer constants
//! always travel through it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted prime modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// Exact arithmetic in an entire ring.
///
/// Implementations must keep elements in a canonical form so that `==` on
/// `Elem` coincides with equality in the ring.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of an integer under the canonical homomorphism `Z -> k`.
    fn from_int(&self, z: &BigInt) -> Self::Elem;

    fn from_i64(&self, z: i64) -> Self::Elem {
        self.from_int(&BigInt::from(z))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_field(&self) -> bool;

    /// Multiplicative inverse; only defined in fields.
    fn inverse(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// `a / b` when `b` divides `a` in the ring itself.
    fn divide_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// Canonical representative of the fraction `num / den`.
    fn normalize_fraction(
        &self,
        num: &Self::Elem,
        den: &Self::Elem,
    ) -> Result<(Self::Elem, Self::Elem)>;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn pow(&self, base: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut sq = base.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// Sum of pairwise products `Σ a_i b_i`.
    fn dot<'a, I>(&self, pairs: I) -> Self::Elem
    where
        I: IntoIterator<Item = (&'a Self::Elem, &'a Self::Elem)>,
        Self::Elem: 'a,
    {
        pairs
            .into_iter()
            .fold(self.zero(), |acc, (a, b)| self.add(&acc, &self.mul(a, b)))
    }
}

/// The ring of integers `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

/// The field of rationals `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

/// The prime field `F_p`, `p < 2^31`. Residues are stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl Ring for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, z: &BigInt) -> BigInt {
        z.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_field(&self) -> bool {
        false
    }
    fn inverse(&self, a: &BigInt) -> Result<BigInt> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Err(Error::NotAField)
        }
    }
    fn divide_exact(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible {
                dividend: a.to_string(),
                divisor: b.to_string(),
            })
        }
    }
    fn normalize_fraction(&self, num: &BigInt, den: &BigInt) -> Result<(BigInt, BigInt)> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = gcd(num, den);
        let (mut n, mut d) = (num / &g, den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Ok((n, d))
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        s.trim().parse().map_err(|_| parse_error(s, self))
    }
    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, z: &BigInt) -> BigRational {
        BigRational::from_integer(z.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.denom() == b.denom() {
            return reduced(a.numer() + b.numer(), a.denom().clone());
        }
        reduced(
            a.numer() * b.denom() + b.numer() * a.denom(),
            a.denom() * b.denom(),
        )
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.add(a, &-b)
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        reduced(a.numer() * b.numer(), a.denom() * b.denom())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inverse(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn divide_exact(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        Ok(a * self.inverse(b)?)
    }
    fn normalize_fraction(
        &self,
        num: &BigRational,
        den: &BigRational,
    ) -> Result<(BigRational, BigRational)> {
        Ok((self.divide_exact(num, den)?, self.one()))
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let err = || parse_error(s, self);
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
        }
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl PrimeField {
    /// Builds `F_p`, rejecting composite moduli and moduli `>= 2^31`.
    pub fn new(p: &BigInt) -> Result<Self> {
        let invalid = || Error::InvalidModulus(p.to_string());
        let p = p.to_u64().ok_or_else(invalid)?;
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(invalid());
        }
        Ok(PrimeField { p })
    }

    pub fn with_modulus(p: u64) -> Result<Self> {
        Self::new(&BigInt::from(p))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, z: &BigInt) -> u64 {
        z.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Ring for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PrimeField(BigInt::from(self.p))
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, z: &BigInt) -> u64 {
        self.reduce(z)
    }
    fn from_i64(&self, z: i64) -> u64 {
        z.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_field(&self) -> bool {
        true
    }
    fn inverse(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2)
        Ok(self.pow(a, self.p - 2))
    }
    fn divide_exact(&self, a: &u64, b: &u64) -> Result<u64> {
        Ok(self.mul(a, &self.inverse(b)?))
    }
    fn normalize_fraction(&self, num: &u64, den: &u64) -> Result<(u64, u64)> {
        Ok((self.divide_exact(num, den)?, 1))
    }
    fn parse_elem(&self, s: &str) -> Result<u64> {
        let err = || parse_error(s, self);
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                self.divide_exact(&self.reduce(&n), &self.reduce(&d))
                    .map_err(|_| err())
            }
            None => Ok(self.reduce(&s.parse().map_err(|_| err())?)),
        }
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// `gcd(a, b) >= 0`. One Euclidean step first brings both operands down to
/// the smaller size; the binary gcd alone is quadratic when a huge operand
/// meets a tiny one, which is the common case for denominators.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (big, small) = if a.bits() >= b.bits() { (a, b) } else { (b, a) };
    if small.is_zero() {
        return big.abs();
    }
    small.gcd(&(big % small))
}

/// `num / den` in lowest terms with a positive denominator; `den != 0`.
fn reduced(num: BigInt, den: BigInt) -> BigRational {
    if den.is_one() {
        return BigRational::from_integer(num);
    }
    let g = gcd(&num, &den);
    let (mut n, mut d) = if g.is_one() {
        (num, den)
    } else {
        (num / &g, den / &g)
    };
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    BigRational::new_raw(n, d)
}

fn parse_error<R: Ring>(input: &str, ring: &R) -> Error {
    Error::Parse {
        input: input.to_string(),
        ring: ring.descriptor().to_string(),
    }
}

/// An element of the fraction field of an entire ring, kept normalized by
/// [`Ring::normalize_fraction`].
///
/// Over `Z` numerator and denominator are coprime with a positive
/// denominator; over a field the denominator is always one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction<R: Ring> {
    num: R::Elem,
    den: R::Elem,
}

impl<R: Ring> Fraction<R> {
    pub fn new(ring: &R, num: &R::Elem, den: &R::Elem) -> Result<Self> {
        let (num, den) = ring.normalize_fraction(num, den)?;
        Ok(Fraction { num, den })
    }

    pub fn from_elem(ring: &R, a: R::Elem) -> Self {
        Fraction {
            num: a,
            den: ring.one(),
        }
    }

    pub fn numerator(&self) -> &R::Elem {
        &self.num
    }

    pub fn denominator(&self) -> &R::Elem {
        &self.den
    }

    pub fn is_integral(&self, ring: &R) -> bool {
        ring.is_one(&self.den)
    }

    /// `c · self`, which must land back in the ring.
    pub fn scale_to_ring(&self, ring: &R, c: &R::Elem) -> Result<R::Elem> {
        ring.divide_exact(&ring.mul(c, &self.num), &self.den)
    }

    pub fn format(&self, ring: &R) -> String {
        if ring.is_one(&self.den) {
            ring.format_elem(&self.num)
        } else {
            format!(
                "{}/{}",
                ring.format_elem(&self.num),
                ring.format_elem(&self.den)
            )
        }
    }
}

/// Serializable name of a base ring: `"int"`, `"rat"` or `{"mod": p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    PrimeField(BigInt),
}

impl RingDescriptor {
    /// Checks the descriptor names a valid entire ring.
    pub fn validate(&self) -> Result<()> {
        if let RingDescriptor::PrimeField(p) = self {
            PrimeField::new(p)?;
        }
        Ok(())
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => f.write_str("int"),
            RingDescriptor::Rationals => f.write_str("rat"),
            RingDescriptor::PrimeField(p) => write!(f, "mod:{p}"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    /// Accepts `int`, `rat` and `mod:P`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let desc = match s {
            "int" | "Z" => RingDescriptor::Integers,
            "rat" | "Q" => RingDescriptor::Rationals,
            _ => {
                let p = s
                    .strip_prefix("mod:")
                    .ok_or_else(|| Error::UnknownRing(s.to_string()))?;
                let p = p
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::InvalidModulus(p.to_string()))?;
                RingDescriptor::PrimeField(p)
            }
        };
        desc.validate()?;
        Ok(desc)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DescriptorRepr {
    Name(String),
    Mod {
        #[serde(rename = "mod")]
        modulus: ModulusRepr,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ModulusRepr {
    Num(u64),
    Str(String),
}

impl Serialize for RingDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            RingDescriptor::Integers => DescriptorRepr::Name("int".into()),
            RingDescriptor::Rationals => DescriptorRepr::Name("rat".into()),
            RingDescriptor::PrimeField(p) => DescriptorRepr::Mod {
                modulus: match p.to_u64() {
                    Some(p) => ModulusRepr::Num(p),
                    None => ModulusRepr::Str(p.to_string()),
                },
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let desc = match DescriptorRepr::deserialize(deserializer)? {
            DescriptorRepr::Name(name) => name.parse().map_err(D::Error::custom)?,
            DescriptorRepr::Mod { modulus } => RingDescriptor::PrimeField(match modulus {
                ModulusRepr::Num(p) => BigInt::from(p),
                ModulusRepr::Str(s) => s.parse().map_err(D::Error::custom)?,
            }),
        };
        desc.validate().map_err(D::Error::custom)?;
        Ok(desc)
    }
}
