//! The max-plus semifield `𝕋 = ℝ ∪ {-∞}` with exact rational entries.
//!
//! Addition is `max`, multiplication is ordinary `+`, the semiring zero is
//! `-∞` and the unit is `0`. All magnitudes are exact rationals; there is no
//! floating-point path anywhere in this crate.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational magnitude used throughout the crate.
pub type Rat = BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Build a rational `p/q`.
pub fn ratq(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

/// An element of the max-plus semifield: an exact rational or `-∞`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropNum {
    /// `-∞`, the tropical zero.
    NegInf,
    /// A finite rational value.
    Fin(Rat),
}

impl TropNum {
    /// The tropical zero `-∞`.
    pub const ZERO: TropNum = TropNum::NegInf;

    /// The tropical unit `0`.
    pub fn one() -> TropNum {
        TropNum::Fin(Rat::zero())
    }

    pub fn fin(r: Rat) -> TropNum {
        TropNum::Fin(r)
    }

    pub fn from_int(n: i64) -> TropNum {
        TropNum::Fin(rat(n))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropNum::NegInf)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            TropNum::NegInf => None,
            TropNum::Fin(r) => Some(r),
        }
    }

    /// Tropical sum, i.e. the maximum.
    pub fn tadd(&self, other: &TropNum) -> TropNum {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product, i.e. ordinary addition with `-∞` absorbing.
    pub fn tmul(&self, other: &TropNum) -> TropNum {
        match (self, other) {
            (TropNum::Fin(a), TropNum::Fin(b)) => TropNum::Fin(a + b),
            _ => TropNum::NegInf,
        }
    }

    /// Tropical power `k ⊙ self`, exact for integer `k`.
    pub fn tpow(&self, k: u32) -> TropNum {
        match self {
            TropNum::NegInf => {
                if k == 0 {
                    TropNum::one()
                } else {
                    TropNum::NegInf
                }
            }
            TropNum::Fin(r) => TropNum::Fin(r * rat(k as i64)),
        }
    }

    /// Multiplicative inverse; `None` for `-∞`.
    pub fn recip(&self) -> Option<TropNum> {
        self.as_finite().map(|r| TropNum::Fin(-r))
    }

    /// Halve the value, the tropical square root.
    pub fn half(&self) -> TropNum {
        match self {
            TropNum::NegInf => TropNum::NegInf,
            TropNum::Fin(r) => TropNum::Fin(r / rat(2)),
        }
    }
}

impl From<i64> for TropNum {
    fn from(n: i64) -> Self {
        TropNum::from_int(n)
    }
}

impl From<Rat> for TropNum {
    fn from(r: Rat) -> Self {
        TropNum::Fin(r)
    }
}

impl Add for &TropNum {
    type Output = TropNum;
    fn add(self, rhs: &TropNum) -> TropNum {
        self.tadd(rhs)
    }
}

impl Add for TropNum {
    type Output = TropNum;
    fn add(self, rhs: TropNum) -> TropNum {
        self.tadd(&rhs)
    }
}

impl Mul for &TropNum {
    type Output = TropNum;
    fn mul(self, rhs: &TropNum) -> TropNum {
        self.tmul(rhs)
    }
}

impl Mul for TropNum {
    type Output = TropNum;
    fn mul(self, rhs: TropNum) -> TropNum {
        self.tmul(&rhs)
    }
}

impl<'a> Sum<&'a TropNum> for TropNum {
    fn sum<I: Iterator<Item = &'a TropNum>>(iter: I) -> TropNum {
        iter.fold(TropNum::NegInf, |acc, x| acc.tadd(x))
    }
}

impl fmt::Display for TropNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropNum::NegInf => write!(f, "-inf"),
            TropNum::Fin(r) => write!(f, "{}", format_rat(r)),
        }
    }
}

/// Render a rational as a plain decimal when the denominator allows it,
/// falling back to `p/q`.
pub fn format_rat(r: &Rat) -> String {
    let denom = r.denom();
    if denom.is_one() {
        return r.numer().to_string();
    }
    // a finite decimal exists iff the denominator is of the form 2^a 5^b
    let mut d = denom.clone();
    let mut pow2 = 0u32;
    let mut pow5 = 0u32;
    let two = num_bigint::BigInt::from(2);
    let five = num_bigint::BigInt::from(5);
    while (&d % &two).is_zero() {
        d /= &two;
        pow2 += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        pow5 += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let digits = pow2.max(pow5);
    let scale = num_bigint::BigInt::from(10).pow(digits);
    let scaled = r.numer() * &scale / denom;
    let neg = scaled.is_negative();
    let abs = scaled.magnitude().to_string();
    let abs = if abs.len() <= digits as usize {
        format!("{}{}", "0".repeat(digits as usize + 1 - abs.len()), abs)
    } else {
        abs
    };
    let (int_part, frac_part) = abs.split_at(abs.len() - digits as usize);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
}

/// Parse a rational from an integer, decimal, or `p/q` string.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: num_bigint::BigInt = p.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        let q: num_bigint::BigInt =
            q.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
        if q.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let int = int.trim_start_matches(['-', '+']);
        let int: num_bigint::BigInt = if int.is_empty() {
            0.into()
        } else {
            int.parse().map_err(|e| format!("bad integer part: {e}"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal: {s:?}"));
        }
        let frac_num: num_bigint::BigInt =
            frac.parse().map_err(|e| format!("bad fractional part: {e}"))?;
        let scale = num_bigint::BigInt::from(10).pow(frac.len() as u32);
        let abs = Rat::from_integer(int) + Rat::new(frac_num, scale);
        return Ok(if neg { -abs } else { abs });
    }
    let n: num_bigint::BigInt = s.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
    Ok(Rat::from_integer(n))
}

/// Parse a tropical number: `-inf` or a rational string.
pub fn parse_trop(s: &str) -> Result<TropNum, String> {
    let t = s.trim();
    if t == "-inf" || t == "-∞" {
        Ok(TropNum::NegInf)
    } else {
        parse_rat(t).map(TropNum::Fin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64) -> TropNum {
        TropNum::from_int(n)
    }

    #[test]
    fn add_is_max_and_idempotent() {
        assert_eq!(&t(2) + &t(5), t(5));
        assert_eq!(&t(3) + &t(3), t(3));
        assert_eq!(&TropNum::NegInf + &t(-7), t(-7));
    }

    #[test]
    fn mul_is_plus_with_absorbing_zero() {
        assert_eq!(&t(2) * &t(3), t(5));
        assert_eq!(&TropNum::NegInf * &t(100), TropNum::NegInf);
        assert_eq!(&t(4) * &TropNum::one(), t(4));
    }

    #[test]
    fn order_puts_neg_inf_at_bottom() {
        assert!(TropNum::NegInf < t(-1000));
        assert!(t(1) < t(2));
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-2", "0.25", "-1.5", "7/3", "-11/4", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&ratq(1, 2)), "0.5");
        assert_eq!(format_rat(&ratq(-13, 4)), "-3.25");
        assert_eq!(format_rat(&ratq(1, 3)), "1/3");
        assert_eq!(parse_trop("-inf").unwrap(), TropNum::NegInf);
    }
}
