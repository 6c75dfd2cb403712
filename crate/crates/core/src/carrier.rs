//! Carriers of the total structures and their element arithmetic.
//!
//! Every carrier supports the ring operations plus a totalized inverse and
//! division (`0⁻¹ = 0`, `x ÷ 0 = 0`). Prime fields and finite probe sets are
//! enumerable, which is what quantifier evaluation and exhaustive axiom checks
//! require. Mixing elements of different carriers is an error, never a coercion.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::ArithError;
use crate::rational::Rational;

/// An element of `Z/pZ`, stored as its least non-negative residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// A carrier element: a tagged exact number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Rational(Rational),
    Residue(Residue),
}

impl Element {
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Rational(r) => r.is_zero(),
            Element::Residue(r) => r.value == 0,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Element::Rational(r) => Some(r),
            Element::Residue(_) => None,
        }
    }
}

impl From<Rational> for Element {
    fn from(r: Rational) -> Self {
        Element::Rational(r)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Rational(r) => r.fmt(f),
            Element::Residue(r) => write!(f, "{}", r.value),
        }
    }
}

impl serde::Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CarrierKind {
    Rationals,
    PrimeField(u64),
    /// A finite list of rationals used as a quantifier domain. Arithmetic is
    /// rational arithmetic; results may leave the set.
    FiniteProbeSet(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    kind: CarrierKind,
}

impl Carrier {
    pub fn rationals() -> Self {
        Carrier {
            kind: CarrierKind::Rationals,
        }
    }

    pub fn prime_field(p: u64) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Carrier {
            kind: CarrierKind::PrimeField(p),
        })
    }

    pub fn probe_set(values: Vec<Rational>) -> Result<Self, ArithError> {
        let distinct: BTreeSet<&Rational> = values.iter().collect();
        if values.is_empty() || distinct.len() != values.len() {
            return Err(ArithError::BadProbeSet);
        }
        Ok(Carrier {
            kind: CarrierKind::FiniteProbeSet(values),
        })
    }

    pub fn kind(&self) -> &CarrierKind {
        &self.kind
    }

    pub fn is_enumerable(&self) -> bool {
        !matches!(self.kind, CarrierKind::Rationals)
    }

    pub fn is_ordered(&self) -> bool {
        !matches!(self.kind, CarrierKind::PrimeField(_))
    }

    /// All elements, in a fixed order; `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Element>> {
        match &self.kind {
            CarrierKind::Rationals => None,
            CarrierKind::PrimeField(p) => Some(
                (0..*p)
                    .map(|value| Element::Residue(Residue { value, modulus: *p }))
                    .collect(),
            ),
            CarrierKind::FiniteProbeSet(values) => {
                Some(values.iter().cloned().map(Element::Rational).collect())
            }
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (&self.kind, e) {
            (CarrierKind::Rationals | CarrierKind::FiniteProbeSet(_), Element::Rational(_)) => true,
            (CarrierKind::PrimeField(p), Element::Residue(r)) => r.modulus == *p && r.value < *p,
            _ => false,
        }
    }

    fn check(&self, e: &Element) -> Result<(), ArithError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(ArithError::CarrierMismatch {
                element: e.to_string(),
                carrier: self.to_string(),
            })
        }
    }

    pub fn zero(&self) -> Element {
        self.from_integer(&BigInt::zero())
    }

    pub fn one(&self) -> Element {
        self.from_integer(&BigInt::from(1))
    }

    /// The image of an integer numeral.
    pub fn from_integer(&self, n: &BigInt) -> Element {
        match self.kind {
            CarrierKind::PrimeField(p) => Element::Residue(Residue {
                value: n
                    .mod_floor(&BigInt::from(p))
                    .to_u64()
                    .expect("residue below p"),
                modulus: p,
            }),
            _ => Element::Rational(Rational::from_integer(n.clone())),
        }
    }

    /// Maps a rational `n/d` into the carrier; in `Z/pZ` this is `n · d⁻¹`
    /// and fails when `p` divides `d`.
    pub fn lift(&self, r: &Rational) -> Result<Element, ArithError> {
        match self.kind {
            CarrierKind::PrimeField(_) => {
                let den = self.from_integer(r.denom());
                if den.is_zero() {
                    return Err(ArithError::ZeroDenominator);
                }
                let num = self.from_integer(r.numer());
                self.mul(&num, &self.inv_total(&den)?)
            }
            _ => Ok(Element::Rational(r.clone())),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element, ArithError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Element::Rational(x), Element::Rational(y)) => Element::Rational(x + y),
            (Element::Residue(x), Element::Residue(y)) => {
                let p = x.modulus as u128;
                residue((x.value as u128 + y.value as u128) % p, x.modulus)
            }
            _ => unreachable!("checked membership"),
        })
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, ArithError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Element::Rational(x), Element::Rational(y)) => Element::Rational(x * y),
            (Element::Residue(x), Element::Residue(y)) => {
                residue(mul_mod(x.value, y.value, x.modulus) as u128, x.modulus)
            }
            _ => unreachable!("checked membership"),
        })
    }

    pub fn neg(&self, a: &Element) -> Result<Element, ArithError> {
        self.check(a)?;
        Ok(match a {
            Element::Rational(x) => Element::Rational(-x),
            Element::Residue(x) => {
                let v = if x.value == 0 { 0 } else { x.modulus - x.value };
                residue(v as u128, x.modulus)
            }
        })
    }

    /// Multiplicative inverse with `0⁻¹ = 0`. Never fails on members.
    pub fn inv_total(&self, a: &Element) -> Result<Element, ArithError> {
        self.check(a)?;
        Ok(match a {
            Element::Rational(x) => Element::Rational(x.inv_total()),
            Element::Residue(x) if x.value == 0 => a.clone(),
            // Fermat: a^(p-2) = a⁻¹ for a ≠ 0
            Element::Residue(x) => residue(
                pow_mod(x.value, x.modulus - 2, x.modulus) as u128,
                x.modulus,
            ),
        })
    }

    /// `a · b⁻¹` with the totalized inverse, so `a ÷ 0 = 0`.
    pub fn div_total(&self, a: &Element, b: &Element) -> Result<Element, ArithError> {
        let inv = self.inv_total(b)?;
        self.mul(a, &inv)
    }
}

fn residue(value: u128, modulus: u64) -> Element {
    Element::Residue(Residue {
        value: value as u64,
        modulus,
    })
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CarrierKind::Rationals => write!(f, "rationals"),
            CarrierKind::PrimeField(p) => write!(f, "gf{p}"),
            CarrierKind::FiniteProbeSet(values) => {
                write!(f, "probe:")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Carrier {
    type Err = ArithError;

    /// `rationals`, `gf<p>` or `probe:<r>,<r>,...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "rationals" || s == "q" {
            return Ok(Carrier::rationals());
        }
        if let Some(p) = s.strip_prefix("gf") {
            let p: u64 = p
                .parse()
                .map_err(|_| ArithError::UnknownCarrier(s.to_string()))?;
            return Carrier::prime_field(p);
        }
        if let Some(list) = s.strip_prefix("probe:") {
            let values = list
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<Rational>, _>>()?;
            return Carrier::probe_set(values);
        }
        Err(ArithError::UnknownCarrier(s.to_string()))
    }
}
