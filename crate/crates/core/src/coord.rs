//! Exact scalars of the form `q0 + q1*σ1 + ... + qk*σk` with rational `qi` and
//! formal symbols `σi`, plus their classes modulo ℤ.
//!
//! Symbols are treated as independent of 1 and of each other, so a scalar is an
//! integer exactly when it has no symbol part and an integral rational part.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational coefficient type.
///
/// Floating point types cannot implement this: every test in this crate
/// depends on exact integrality checks.
pub trait ExactRational:
    Clone + Ord + Hash + fmt::Debug + fmt::Display + FromStr + Signed + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;
    fn from_frac(p: i64, q: i64) -> Self;
    fn floor_int(&self) -> Self;
    fn is_int(&self) -> bool;
    /// The value as an `i64`, if it is an integer that fits.
    fn exact_i64(&self) -> Option<i64>;
}

impl<T> ExactRational for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + fmt::Debug
        + fmt::Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("i64 fits the integer type"))
    }

    fn from_frac(p: i64, q: i64) -> Self {
        Ratio::new(
            T::from_i64(p).expect("i64 fits the integer type"),
            T::from_i64(q).expect("i64 fits the integer type"),
        )
    }

    fn floor_int(&self) -> Self {
        self.floor()
    }

    fn is_int(&self) -> bool {
        self.is_integer()
    }

    fn exact_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// An element of ℚ ⊕ ⨁ ℚσ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Scalar<Q: ExactRational> {
    rational: Q,
    irrational: BTreeMap<String, Q>,
}

impl<Q: ExactRational> Scalar<Q> {
    pub fn zero() -> Self {
        Self::rational(Q::zero())
    }

    pub fn rational(q: Q) -> Self {
        Scalar {
            rational: q,
            irrational: BTreeMap::new(),
        }
    }

    pub fn int(v: i64) -> Self {
        Self::rational(Q::from_int(v))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::rational(Q::from_frac(p, q))
    }

    /// The bare symbol `0 + name*1`.
    pub fn symbol(name: &str) -> Self {
        Self::zero().plus_symbol(name, Q::one())
    }

    /// Adds `coeff*name` to `self`.
    pub fn plus_symbol(mut self, name: &str, coeff: Q) -> Self {
        let entry = self
            .irrational
            .entry(name.to_string())
            .or_insert_with(Q::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.irrational.remove(name);
        }
        self
    }

    pub fn rational_part(&self) -> &Q {
        &self.rational
    }

    pub fn irrational_part(&self) -> &BTreeMap<String, Q> {
        &self.irrational
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.irrational.keys().map(|s| s.as_str())
    }

    pub fn is_zero(&self) -> bool {
        self.irrational.is_empty() && self.rational.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irrational.is_empty()
    }

    pub fn is_integer(&self) -> bool {
        self.irrational.is_empty() && self.rational.is_int()
    }

    pub fn to_integer(&self) -> Option<i64> {
        if self.irrational.is_empty() {
            self.rational.exact_i64()
        } else {
            None
        }
    }

    /// `self - other` as an `i64`, when the difference is an integer.
    pub fn integer_difference(&self, other: &Self) -> Option<i64> {
        (self - other).to_integer()
    }

    pub fn add_int(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.rational = out.rational + Q::from_int(k);
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Scalar {
            rational: self.rational.clone() * c.clone(),
            irrational: self
                .irrational
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Representative of `self + ℤ` with rational part in `[0, 1)`.
    pub fn coset_rep(&self) -> Self {
        let r = self.rational.clone();
        Scalar {
            rational: r.clone() - r.floor_int(),
            irrational: self.irrational.clone(),
        }
    }

    pub fn coset_class(&self) -> CosetClass<Q> {
        let rep = self.coset_rep();
        if rep.irrational.is_empty() {
            if rep.rational.is_zero() {
                return CosetClass::Int;
            }
            if rep.rational == Q::from_frac(1, 2) {
                return CosetClass::Half;
            }
        }
        CosetClass::Irr(rep)
    }

    /// True when `self` and `other` lie in the same class of ℂ/ℤ.
    pub fn same_coset(&self, other: &Self) -> bool {
        (self - other).is_integer()
    }
}

/// Classes of scalars modulo ℤ. `Irr` stores the representative whose
/// rational part lies in `[0, 1)`; this covers rationals outside ½ℤ too.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CosetClass<Q: ExactRational> {
    Int,
    Half,
    Irr(Scalar<Q>),
}

impl<Q: ExactRational> CosetClass<Q> {
    /// The class of `-c` for `c` in `self`.
    pub fn paired(&self) -> Self {
        match self {
            CosetClass::Irr(rep) => (-rep).coset_class(),
            other => other.clone(),
        }
    }

    pub fn is_self_paired(&self) -> bool {
        !matches!(self, CosetClass::Irr(_))
    }

    /// Whether this is the preferred member of `{c, -c}`.
    ///
    /// With a symbol part the member whose first symbol coefficient is
    /// positive wins; for rational classes the one with representative
    /// below ½ wins. `Int` and `Half` are always preferred.
    pub fn is_canonical(&self) -> bool {
        match self {
            CosetClass::Irr(rep) => match rep.irrational.values().next() {
                Some(c) => c.is_positive(),
                None => rep.rational < Q::from_frac(1, 2),
            },
            _ => true,
        }
    }

    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            self.clone()
        } else {
            self.paired()
        }
    }

    /// A scalar in the class: 0, ½, or the stored representative.
    pub fn representative(&self) -> Scalar<Q> {
        match self {
            CosetClass::Int => Scalar::zero(),
            CosetClass::Half => Scalar::frac(1, 2),
            CosetClass::Irr(rep) => rep.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CosetClass::Int => "INT",
            CosetClass::Half => "HALF",
            CosetClass::Irr(_) => "IRR",
        }
    }
}

impl<Q: ExactRational> fmt::Display for CosetClass<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetClass::Irr(rep) => write!(f, "IRR({rep})"),
            other => f.write_str(other.kind()),
        }
    }
}

impl<Q: ExactRational> Add for &Scalar<Q> {
    type Output = Scalar<Q>;
    fn add(self, rhs: &Scalar<Q>) -> Scalar<Q> {
        let mut out = self.clone();
        out.rational = out.rational + rhs.rational.clone();
        for (name, c) in &rhs.irrational {
            out = out.plus_symbol(name, c.clone());
        }
        out
    }
}

impl<Q: ExactRational> Sub for &Scalar<Q> {
    type Output = Scalar<Q>;
    fn sub(self, rhs: &Scalar<Q>) -> Scalar<Q> {
        self + &(-rhs)
    }
}

impl<Q: ExactRational> Neg for &Scalar<Q> {
    type Output = Scalar<Q>;
    fn neg(self) -> Scalar<Q> {
        Scalar {
            rational: -self.rational.clone(),
            irrational: self
                .irrational
                .iter()
                .map(|(k, v)| (k.clone(), -v.clone()))
                .collect(),
        }
    }
}

impl<Q: ExactRational> Add for Scalar<Q> {
    type Output = Scalar<Q>;
    fn add(self, rhs: Scalar<Q>) -> Scalar<Q> {
        &self + &rhs
    }
}

impl<Q: ExactRational> Sub for Scalar<Q> {
    type Output = Scalar<Q>;
    fn sub(self, rhs: Scalar<Q>) -> Scalar<Q> {
        &self - &rhs
    }
}

impl<Q: ExactRational> Neg for Scalar<Q> {
    type Output = Scalar<Q>;
    fn neg(self) -> Scalar<Q> {
        -&self
    }
}

impl<Q: ExactRational> fmt::Display for Scalar<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        for (name, c) in &self.irrational {
            write!(f, "+{name}*{c}")?;
        }
        Ok(())
    }
}

fn valid_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<Q: ExactRational> FromStr for Scalar<Q> {
    type Err = Error;

    /// Parses `p/q` optionally followed by terms `+sym*r/s`.
    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut pieces = text.trim().split('+');
        let head = pieces.next().unwrap_or("").trim();
        if head.is_empty() {
            return Err(err("missing rational part"));
        }
        let rational = Q::from_str(head).map_err(|_| err("bad rational part"))?;
        let mut out = Scalar::rational(rational);
        for piece in pieces {
            let (name, coeff) = piece
                .split_once('*')
                .ok_or_else(|| err("symbol term must look like name*coeff"))?;
            let name = name.trim();
            if !valid_symbol(name) {
                return Err(err("bad symbol name"));
            }
            let coeff = Q::from_str(coeff.trim()).map_err(|_| err("bad symbol coefficient"))?;
            out = out.plus_symbol(name, coeff);
        }
        Ok(out)
    }
}

impl<Q: ExactRational> Serialize for Scalar<Q> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de, Q: ExactRational> Deserialize<'de> for Scalar<Q> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
