//! Exact measure values.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A non-negative exact rational value produced by an inconsistency measure.
///
/// Displayed canonically as `num/den` with a reduced fraction and a positive
/// denominator (`3/1`, `1/3`, `0/1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MeasureValue(Rational64);

impl MeasureValue {
    pub const ZERO: MeasureValue = MeasureValue(Rational64::new_raw(0, 1));
    pub const ONE: MeasureValue = MeasureValue(Rational64::new_raw(1, 1));

    /// Builds `num/den`. Panics on a zero denominator or a negative result.
    pub fn new(num: i64, den: i64) -> Self {
        Self::try_from_ratio(Rational64::new(num, den)).expect("measure values are non-negative")
    }

    pub fn integer(n: i64) -> Self {
        Self::new(n, 1)
    }

    pub fn from_count(n: usize) -> Self {
        Self::integer(n as i64)
    }

    pub fn try_from_ratio(r: Rational64) -> Option<Self> {
        (r >= Rational64::zero()).then_some(MeasureValue(r))
    }

    pub fn ratio(&self) -> Rational64 {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn approx(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `1/self`; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| MeasureValue(self.0.recip()))
    }

    /// Signed difference `self - other`.
    pub fn delta(&self, other: &MeasureValue) -> Rational64 {
        self.0 - other.0
    }
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for MeasureValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: i64 = n.parse().map_err(|_| format!("bad numerator in `{s}`"))?;
        let d: i64 = d.parse().map_err(|_| format!("bad denominator in `{s}`"))?;
        if d == 0 {
            return Err(format!("zero denominator in `{s}`"));
        }
        MeasureValue::try_from_ratio(Rational64::new(n, d)).ok_or_else(|| format!("negative value `{s}`"))
    }
}

impl From<usize> for MeasureValue {
    fn from(n: usize) -> Self {
        MeasureValue::from_count(n)
    }
}

impl Add for MeasureValue {
    type Output = MeasureValue;
    fn add(self, rhs: Self) -> Self {
        MeasureValue(self.0 + rhs.0)
    }
}

impl Mul for MeasureValue {
    type Output = MeasureValue;
    fn mul(self, rhs: Self) -> Self {
        MeasureValue(self.0 * rhs.0)
    }
}

impl Div for MeasureValue {
    type Output = MeasureValue;
    fn div(self, rhs: Self) -> Self {
        MeasureValue(self.0 / rhs.0)
    }
}

/// Saturates at zero; use [`MeasureValue::delta`] for signed differences.
impl Sub for MeasureValue {
    type Output = MeasureValue;
    fn sub(self, rhs: Self) -> Self {
        MeasureValue((self.0 - rhs.0).max(Rational64::zero()))
    }
}

impl Sum for MeasureValue {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(MeasureValue::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a MeasureValue> for MeasureValue {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.copied().sum()
    }
}

/// Wire form `{"num": int, "den": int, "approx": float}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WireFraction {
    pub num: i64,
    pub den: i64,
    pub approx: f64,
}

impl WireFraction {
    pub fn from_ratio(r: Rational64) -> Self {
        WireFraction {
            num: *r.numer(),
            den: *r.denom(),
            approx: r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl From<MeasureValue> for WireFraction {
    fn from(v: MeasureValue) -> Self {
        WireFraction::from_ratio(v.0)
    }
}

impl Serialize for MeasureValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WireFraction::from(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MeasureValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = WireFraction::deserialize(d)?;
        if w.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        MeasureValue::try_from_ratio(Rational64::new(w.num, w.den))
            .ok_or_else(|| serde::de::Error::custom("negative measure value"))
    }
}

/// Canonical `num/den` rendering for a signed rational.
pub fn fraction_string(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(MeasureValue::integer(3).to_string(), "3/1");
        assert_eq!(MeasureValue::new(2, 6).to_string(), "1/3");
        assert_eq!(MeasureValue::ZERO.to_string(), "0/1");
        assert_eq!(MeasureValue::new(-2, -4).to_string(), "1/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0/1", "7/4", "5/1"] {
            assert_eq!(s.parse::<MeasureValue>().unwrap().to_string(), s);
        }
        assert_eq!("4".parse::<MeasureValue>().unwrap(), MeasureValue::integer(4));
        assert!("1/0".parse::<MeasureValue>().is_err());
        assert!("-1/2".parse::<MeasureValue>().is_err());
    }

    #[test]
    fn exact_harmonic_sum() {
        let h: MeasureValue = (1..=4).map(|k| MeasureValue::new(1, k)).sum();
        assert_eq!(h, MeasureValue::new(25, 12));
    }

    #[test]
    fn wire_form() {
        let json = serde_json_like(MeasureValue::new(7, 4));
        assert_eq!(json, (7, 4, 1.75));
    }

    fn serde_json_like(v: MeasureValue) -> (i64, i64, f64) {
        let w = WireFraction::from(v);
        (w.num, w.den, w.approx)
    }
}
