//! Exact rational scalars and the scalar abstraction shared by the two
//! arithmetic regimes (exact `BigRational` for certification, `f64` for scans).

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Exact conversion of a finite `f64` (all doubles are dyadic rationals).
pub fn rat_from_f64(v: f64) -> Result<Rat> {
    Rat::from_float(v).ok_or_else(|| Error::InvalidInput(format!("non-finite value {v}")))
}

pub fn rat_to_f64(v: &Rat) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Parses an exact rational from `"p/q"`, an integer literal, or a decimal
/// literal with optional exponent (`"0.25"`, `"-3"`, `"1e-3"`, `"4/5"`).
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse rational from {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(num, den));
    }
    // Decimal literal: mantissa[.fraction][e exp]
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(bad());
    }
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rat::from_integer(num * ten.pow(scale as u32))
    } else {
        Rat::new(num, ten.pow((-scale) as u32))
    };
    Ok(value)
}

/// Renders a rational as `"p/q"` (or `"p"` for integers); inverse of
/// [`parse_rational`] on its own output.
pub fn format_rational(v: &Rat) -> String {
    v.to_string()
}

/// The simplest rational (smallest denominator, then smallest numerator) in
/// the closed interval `[lo, hi]`, by Stern-Brocot descent.
pub fn simplest_in_interval(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi, "empty interval");
    if lo <= &Rat::zero() && &Rat::zero() <= hi {
        return Rat::zero();
    }
    if hi < &Rat::zero() {
        return -simplest_positive(&-hi.clone(), &-lo.clone());
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rat, hi: &Rat) -> Rat {
    // Continued-fraction walk; terminates because each step strictly reduces
    // the denominator bound of the interval.
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let mut terms: Vec<BigInt> = Vec::new();
    loop {
        let fl = lo.floor().to_integer();
        let candidate = &fl + BigInt::one();
        let int_in = if lo.is_integer() {
            Some(fl.clone())
        } else if Rat::from_integer(candidate.clone()) <= hi {
            Some(candidate)
        } else {
            None
        };
        if let Some(v) = int_in {
            terms.push(v);
            break;
        }
        terms.push(fl.clone());
        let flr = Rat::from_integer(fl);
        let new_lo = (hi - &flr).recip();
        let new_hi = (lo - &flr).recip();
        lo = new_lo;
        hi = new_hi;
    }
    let mut acc = Rat::from_integer(terms.pop().expect("at least one term"));
    while let Some(t) = terms.pop() {
        acc = Rat::from_integer(t) + acc.recip();
    }
    acc
}

/// Simplest rational within `±width` of `center`, clamped to `[min, max]`.
pub fn simplest_near(center: f64, width: f64, min: f64, max: f64) -> Result<Rat> {
    let lo = rat_from_f64((center - width).max(min))?;
    let hi = rat_from_f64((center + width).min(max))?;
    Ok(simplest_in_interval(&lo, &hi))
}

/// Serializable rendering of a scalar: exact rationals keep their `"p/q"`
/// form, floats stay numeric.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarRepr {
    Exact(String),
    Approx(f64),
}

impl Serialize for ScalarRepr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ScalarRepr::Exact(s) => serializer.serialize_str(s),
            ScalarRepr::Approx(v) => serializer.serialize_f64(*v),
        }
    }
}

/// Scalar kinds the polynomial and condition machinery is generic over.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + Signed + std::fmt::Debug + std::fmt::Display + 'static
{
    /// True when arithmetic in this scalar is exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn to_f64_scalar(&self) -> f64;
    fn is_finite_scalar(&self) -> bool;
    /// `self >= other`, allowing the float-mode boundary tolerance 1e-12.
    fn ge_boundary(&self, other: &Self) -> bool;
    fn repr(&self) -> ScalarRepr;
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        rat_int(v)
    }

    fn to_f64_scalar(&self) -> f64 {
        rat_to_f64(self)
    }

    fn is_finite_scalar(&self) -> bool {
        true
    }

    fn ge_boundary(&self, other: &Self) -> bool {
        self >= other
    }

    fn repr(&self) -> ScalarRepr {
        ScalarRepr::Exact(format_rational(self))
    }
}

/// Equality-boundary slack for float-mode condition checks.
pub const FLOAT_BOUNDARY_TOL: f64 = 1e-12;

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64_scalar(&self) -> f64 {
        *self
    }

    fn is_finite_scalar(&self) -> bool {
        self.is_finite()
    }

    fn ge_boundary(&self, other: &Self) -> bool {
        *self >= other - FLOAT_BOUNDARY_TOL
    }

    fn repr(&self) -> ScalarRepr {
        ScalarRepr::Approx(*self)
    }
}

/// Serde adapter for scalar fields: `#[serde(serialize_with = "ser_scalar")]`.
pub fn ser_scalar<T: Scalar, S: Serializer>(
    v: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    v.repr().serialize(serializer)
}

pub fn ser_scalar_vec<T: Scalar, S: Serializer>(
    v: &[T],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(v.iter().map(|x| x.repr()))
}

pub fn ser_scalar_opt<T: Scalar, S: Serializer>(
    v: &Option<T>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => x.repr().serialize(serializer),
        None => serializer.serialize_none(),
    }
}

/// Sign of a big-rational as -1/0/1, used by the Sturm machinery.
pub fn sign_of(v: &Rat) -> i32 {
    match v.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("3/-4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("41").unwrap(), rat_int(41));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("2.5e-3").unwrap(), rat(1, 400));
        assert_eq!(parse_rational("1e2").unwrap(), rat_int(100));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("1e").is_err());
    }

    #[test]
    fn format_round_trips() {
        for v in [rat(3, 4), rat(-7, 3), rat_int(5), Rat::zero()] {
            assert_eq!(parse_rational(&format_rational(&v)).unwrap(), v);
        }
    }

    #[test]
    fn simplest_rational_picks_smallest_denominator() {
        // sqrt(2) ~ 1.41421: the simplest rational within 0.01 is 17/12.
        let c = simplest_near(std::f64::consts::SQRT_2, 0.01, -2.0, 2.0).unwrap();
        assert_eq!(c, rat(17, 12));
        // Wide interval around 0.33 picks 1/3.
        assert_eq!(simplest_in_interval(&rat(3, 10), &rat(7, 20)), rat(1, 3));
        // Interval containing zero picks zero; negative intervals mirror.
        assert_eq!(simplest_in_interval(&rat(-1, 2), &rat(1, 5)), Rat::zero());
        assert_eq!(simplest_in_interval(&rat(-7, 20), &rat(-3, 10)), rat(-1, 3));
        // Integer endpoints.
        assert_eq!(simplest_in_interval(&rat(2, 1), &rat(5, 2)), rat_int(2));
        // Degenerate interval returns its only point.
        assert_eq!(simplest_in_interval(&rat(4, 3), &rat(4, 3)), rat(4, 3));
    }

    #[test]
    fn simplest_rational_is_inside_interval() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let a: f64 = rng.gen_range(-3.0..3.0);
            let w: f64 = rng.gen_range(1e-9..0.5);
            let lo = rat_from_f64(a).unwrap();
            let hi = rat_from_f64(a + w).unwrap();
            let s = simplest_in_interval(&lo, &hi);
            assert!(lo <= s && s <= hi, "{s} outside [{lo}, {hi}]");
        }
    }
}
