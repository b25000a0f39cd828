//! Named 15-parameter points of `𝒱_1` and `𝒱_2`.
//!
//! Coordinates are stored in word order, so position `m` of a point is the
//! argument of the `m`-th `Y` factor.
//!
//! | pos | `𝒱_1` letter | `x`      | `𝒱_2` letter | `y`      |
//! |-----|--------------|----------|--------------|----------|
//! | 1   | 6            | `x6_3`   | 5            | `y5_3`   |
//! | 2   | 4            | `x4_4`   | 4            | `y4_4`   |
//! | 3   | 3            | `x3_3`   | 3            | `y3_3`   |
//! | 4   | 2            | `x2_2`   | 2            | `y2_2`   |
//! | 5   | 5            | `x5_2`   | 6            | `y6_2`   |
//! | 6   | 4            | `x4_3`   | 4            | `y4_3`   |
//! | 7   | 3            | `x3_2`   | 3            | `y3_2`   |
//! | 8   | 6            | `x6_2`   | 5            | `y5_2`   |
//! | 9   | 4            | `x4_2`   | 4            | `y4_2`   |
//! | 10  | 5            | `x5_1`   | 6            | `y6_1`   |
//! | 11  | 1            | `x1_1`   | 0            | `y0_1`   |
//! | 12  | 2            | `x2_1`   | 2            | `y2_1`   |
//! | 13  | 3            | `x3_1`   | 3            | `y3_1`   |
//! | 14  | 4            | `x4_1`   | 4            | `y4_1`   |
//! | 15  | 6            | `x6_1`   | 5            | `y5_1`   |
//!
//! JSON form: `{"x": {"6_3": "1", "4_4": "3/2", …}}` (or `"y"`), keys `m_l`
//! for `x_m^(l)`. The shorthand `{"all": "r"}` sets every coordinate to `r`.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

pub const POINT_LEN: usize = 15;

/// Word of `V_1`: `s_6 s_4 s_3 s_2 s_5 s_4 s_3 s_6 s_4 s_5 s_1 s_2 s_3 s_4 s_6`.
pub const WORD_V1: [usize; POINT_LEN] = [6, 4, 3, 2, 5, 4, 3, 6, 4, 5, 1, 2, 3, 4, 6];
/// Word of `V_2`: `s_5 s_4 s_3 s_2 s_6 s_4 s_3 s_5 s_4 s_6 s_0 s_2 s_3 s_4 s_5`.
pub const WORD_V2: [usize; POINT_LEN] = [5, 4, 3, 2, 6, 4, 3, 5, 4, 6, 0, 2, 3, 4, 5];

/// Index set of `𝔤_0` (acting on `𝒱_1` through the word).
pub const NODES_V1: [usize; 6] = [1, 2, 3, 4, 5, 6];
/// Index set of `𝔤_1` (acting on `𝒱_2`).
pub const NODES_V2: [usize; 6] = [0, 2, 3, 4, 5, 6];

macro_rules! point_type {
    (
        $(#[$meta:meta])*
        $name:ident, $letter:literal,
        $( $pos:literal : $field:ident / $konst:ident = $key:literal ),+ $(,)?
    ) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            values: [Rational; POINT_LEN],
        }

        impl $name {
            $( pub const $konst: usize = $pos; )+

            /// JSON keys in word order.
            pub const KEYS: [&'static str; POINT_LEN] = [$($key),+];

            /// Top-level JSON field holding the coordinates.
            pub const LETTER: &'static str = $letter;

            $(
                pub fn $field(&self) -> &Rational {
                    &self.values[$pos]
                }
            )+

            /// Point from coordinates in word order; every coordinate must be nonzero.
            pub fn new(values: [Rational; POINT_LEN]) -> Result<Self> {
                if let Some(i) = values.iter().position(Rational::is_zero) {
                    return Err(Error::domain(format!(
                        "coordinate {}_{} is zero", $letter, Self::KEYS[i]
                    )));
                }
                Ok($name { values })
            }

            pub fn from_params(params: &[Rational]) -> Result<Self> {
                let values: [Rational; POINT_LEN] = params
                    .to_vec()
                    .try_into()
                    .map_err(|_| Error::domain("a point has exactly 15 coordinates"))?;
                Self::new(values)
            }

            pub fn to_params(&self) -> Vec<Rational> {
                self.values.to_vec()
            }

            pub fn values(&self) -> &[Rational; POINT_LEN] {
                &self.values
            }

            /// Every coordinate equal to `r`.
            pub fn constant(r: Rational) -> Result<Self> {
                Self::new(std::array::from_fn(|_| r.clone()))
            }

            pub fn ones() -> Self {
                Self::constant(Rational::one()).expect("nonzero")
            }

            pub fn is_positive(&self) -> bool {
                self.values.iter().all(Rational::is_positive)
            }

            /// Multiplies the coordinate at `pos` by `factor` in place.
            pub(crate) fn scale_at(&mut self, pos: usize, factor: &Rational) {
                self.values[pos] *= factor;
            }

            pub(crate) fn revalidate(self) -> Result<Self> {
                Self::new(self.values)
            }

            /// Parses the JSON point form (including the `{"all": r}` shorthand).
            pub fn from_json(value: &Value) -> Result<Self> {
                parse_point_json(value, $letter, &Self::KEYS)
                    .and_then(|v| Self::new(v))
            }

            pub fn to_json(&self) -> Value {
                Value::Object(self.coords_json())
            }

            /// The inner `{"m_l": "r", …}` object, in word order.
            pub fn coords_json(&self) -> Map<String, Value> {
                let mut inner = Map::new();
                for (key, v) in Self::KEYS.iter().zip(&self.values) {
                    inner.insert((*key).to_string(), Value::String(v.to_string()));
                }
                let mut outer = Map::new();
                outer.insert($letter.to_string(), Value::Object(inner));
                outer
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut m = f.debug_map();
                for (key, v) in Self::KEYS.iter().zip(&self.values) {
                    m.entry(&format_args!("{}{}", $letter, key), v);
                }
                m.finish()
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                struct Coords<'a>(&'a $name);
                impl Serialize for Coords<'_> {
                    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                        let mut map = serializer.serialize_map(Some(POINT_LEN))?;
                        for (key, v) in $name::KEYS.iter().zip(&self.0.values) {
                            map.serialize_entry(key, v)?;
                        }
                        map.end()
                    }
                }
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry($letter, &Coords(self))?;
                map.end()
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
                let value = Value::deserialize(deserializer)?;
                Self::from_json(&value).map_err(serde::de::Error::custom)
            }
        }
    };
}

fn parse_point_json(value: &Value, letter: &str, keys: &[&str; POINT_LEN]) -> Result<[Rational; POINT_LEN]> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::parse("point must be a JSON object"))?;
    let parse_r = |v: &Value, what: &str| -> Result<Rational> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap())),
            _ => Err(Error::parse(format!("{what}: expected a rational string"))),
        }
    };
    if let Some(all) = obj.get("all") {
        if obj.len() != 1 {
            return Err(Error::parse("`all` shorthand cannot be combined with other fields"));
        }
        let r = parse_r(all, "all")?;
        return Ok(std::array::from_fn(|_| r.clone()));
    }
    let coords = obj
        .get(letter)
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse(format!("point must have an object field `{letter}`")))?;
    if let Some(extra) = coords.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(Error::parse(format!("unknown coordinate `{letter}{extra}`")));
    }
    let mut out = Vec::with_capacity(POINT_LEN);
    for key in keys {
        let v = coords
            .get(*key)
            .ok_or_else(|| Error::parse(format!("missing coordinate `{letter}{key}`")))?;
        out.push(parse_r(v, key)?);
    }
    Ok(out.try_into().expect("15 keys"))
}

point_type! {
    /// Point `x` of `𝒱_1`, parametrizing `V_1(x)`.
    PointV1, "x",
    0: x6_3 / X6_3 = "6_3",
    1: x4_4 / X4_4 = "4_4",
    2: x3_3 / X3_3 = "3_3",
    3: x2_2 / X2_2 = "2_2",
    4: x5_2 / X5_2 = "5_2",
    5: x4_3 / X4_3 = "4_3",
    6: x3_2 / X3_2 = "3_2",
    7: x6_2 / X6_2 = "6_2",
    8: x4_2 / X4_2 = "4_2",
    9: x5_1 / X5_1 = "5_1",
    10: x1_1 / X1_1 = "1_1",
    11: x2_1 / X2_1 = "2_1",
    12: x3_1 / X3_1 = "3_1",
    13: x4_1 / X4_1 = "4_1",
    14: x6_1 / X6_1 = "6_1",
}

point_type! {
    /// Point `y` of `𝒱_2`, parametrizing `V_2(y)`.
    PointV2, "y",
    0: y5_3 / Y5_3 = "5_3",
    1: y4_4 / Y4_4 = "4_4",
    2: y3_3 / Y3_3 = "3_3",
    3: y2_2 / Y2_2 = "2_2",
    4: y6_2 / Y6_2 = "6_2",
    5: y4_3 / Y4_3 = "4_3",
    6: y3_2 / Y3_2 = "3_2",
    7: y5_2 / Y5_2 = "5_2",
    8: y4_2 / Y4_2 = "4_2",
    9: y6_1 / Y6_1 = "6_1",
    10: y0_1 / Y0_1 = "0_1",
    11: y2_1 / Y2_1 = "2_1",
    12: y3_1 / Y3_1 = "3_1",
    13: y4_1 / Y4_1 = "4_1",
    14: y5_1 / Y5_1 = "5_1",
}
