//! JSON encodings.
//!
//! Scalars of `𝕊` encode as `{"s": "+"|"-"|"o"|"z"|"top"|"bot", "m": "…"}`
//! with the magnitude `m` absent for zero, top and bottom; tropical
//! numbers encode as a decimal (or `p/q`) string, with `"-inf"` for `𝟘`.
//! Vectors are arrays and matrices arrays of arrays of these encodings.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{SignedMat, SignedVec, TropMat, TropVec};
use crate::polar::SignedPair;
use crate::signed::SignedTrop;
use crate::trop::{format_rat, parse_rat, parse_trop, TropNum};

impl Serialize for TropNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TropNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_trop(&s).map_err(DeError::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarDto {
    s: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<String>,
}

impl Serialize for SignedTrop {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (s, m) = match self {
            SignedTrop::Zero => ("z", None),
            SignedTrop::Pos(m) => ("+", Some(format_rat(m))),
            SignedTrop::Neg(m) => ("-", Some(format_rat(m))),
            SignedTrop::Bal(m) => ("o", Some(format_rat(m))),
            SignedTrop::Top => ("top", None),
            SignedTrop::Bot => ("bot", None),
        };
        ScalarDto { s: s.to_string(), m }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedTrop {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = ScalarDto::deserialize(deserializer)?;
        let mag = |m: &Option<String>| -> Result<_, D::Error> {
            let m = m
                .as_ref()
                .ok_or_else(|| DeError::custom(format!("sign {:?} requires a magnitude", dto.s)))?;
            parse_rat(m).map_err(DeError::custom)
        };
        match dto.s.as_str() {
            "z" => Ok(SignedTrop::Zero),
            "top" => Ok(SignedTrop::Top),
            "bot" => Ok(SignedTrop::Bot),
            "+" => Ok(SignedTrop::Pos(mag(&dto.m)?)),
            "-" => Ok(SignedTrop::Neg(mag(&dto.m)?)),
            "o" => Ok(SignedTrop::Bal(mag(&dto.m)?)),
            other => Err(DeError::custom(format!(
                "unknown sign {other:?}; expected +, -, o, z, top or bot"
            ))),
        }
    }
}

impl Serialize for TropVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<TropNum>::deserialize(deserializer)?;
        if entries.is_empty() {
            return Err(DeError::custom("vector must be nonempty"));
        }
        Ok(TropVec::new(entries))
    }
}

impl Serialize for SignedVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<SignedTrop>::deserialize(deserializer)?;
        SignedVec::new(entries).map_err(DeError::custom)
    }
}

impl Serialize for TropMat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<&TropNum>> =
            (0..self.rows()).map(|i| (0..self.cols()).map(|j| self.at(i, j)).collect()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropMat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<TropNum>>::deserialize(deserializer)?;
        TropMat::from_rows(rows).map_err(DeError::custom)
    }
}

impl Serialize for SignedMat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<&SignedTrop>> =
            (0..self.rows()).map(|i| (0..self.cols()).map(|j| self.at(i, j)).collect()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedMat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<SignedTrop>>::deserialize(deserializer)?;
        SignedMat::from_rows(rows).map_err(DeError::custom)
    }
}

impl Serialize for SignedPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct PairDto<'a> {
            plus: &'a TropVec,
            minus: &'a TropVec,
        }
        PairDto { plus: &self.plus, minus: &self.minus }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct PairDto {
            plus: TropVec,
            minus: TropVec,
        }
        let dto = PairDto::deserialize(deserializer)?;
        SignedPair::new(dto.plus, dto.minus).map_err(DeError::custom)
    }
}
