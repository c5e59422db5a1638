use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The exact scalar field everything is computed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// An exact field element. Prime-field elements carry their modulus so the
/// arithmetic operators can be used without threading a field handle around.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `GF(p)`; rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidField(format!("gf{p}")));
        }
        Ok(Field::Prime(p))
    }

    /// Accepts `q`, `Q`, `rationals`, `gfP`, `gf(P)`, `GF(P)`.
    pub fn parse(spec: &str) -> Result<Field> {
        let s = spec.trim().to_ascii_lowercase();
        if s == "q" || s == "rationals" || s == "qq" {
            return Ok(Field::Rationals);
        }
        let digits = s
            .strip_prefix("gf")
            .map(|rest| rest.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| Error::InvalidField(spec.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(spec.to_string()))?;
        Field::prime(p)
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "q".to_string(),
            Field::Prime(p) => format!("gf{p}"),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let m = *p as i64;
                Scalar::Mod {
                    value: v.rem_euclid(m) as u64,
                    modulus: *p,
                }
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::InvalidScalar(format!("{num}/{den}")))?;
        Ok(self.from_i64(num) * inv)
    }

    /// Parses the wire format: `p/q` or an integer for the rationals, a
    /// decimal residue (any integer, reduced) for prime fields.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::InvalidScalar(text.to_string());
        match self {
            Field::Rationals => {
                let (n, d) = match t.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (t, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(p) => {
                if let Some((n, d)) = t.split_once('/') {
                    let n: i64 = n.trim().parse().map_err(|_| bad())?;
                    let d: i64 = d.trim().parse().map_err(|_| bad())?;
                    return self.from_ratio(n, d).map_err(|_| bad());
                }
                let v: i128 = t.parse().map_err(|_| bad())?;
                let m = *p as i128;
                Ok(Scalar::Mod {
                    value: v.rem_euclid(m) as u64,
                    modulus: *p,
                })
            }
        }
    }

    /// All field elements in the order `0, 1, …, p-1`; `None` over ℚ.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(
                (0..*p)
                    .map(|value| Scalar::Mod { value, modulus: *p })
                    .collect(),
            ),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Mod { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Field::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Mod { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u128;
                let mut base = *value as u128;
                let mut exp = p - 2;
                let mut acc: u128 = 1;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Some(Scalar::Mod {
                    value: acc as u64,
                    modulus: *modulus,
                })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {:?} vs {:?}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                Scalar::Mod {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                Scalar::Mod {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// A small rational `num/den` (den clamped to ≥ 1), or `num mod p`.
pub(crate) fn small_rational(field: Field, num: i64, den: i64) -> Scalar {
    match field {
        Field::Rationals => Scalar::Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den.max(1)),
        )),
        Field::Prime(_) => field.from_i64(num),
    }
}
