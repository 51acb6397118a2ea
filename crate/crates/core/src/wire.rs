//! Serde helpers: complex numbers travel as `[re, im]` pairs, never as
//! modulus/angle, so serialized data carries no branch ambiguity.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn complex_to_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn pair_to_complex(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

/// `#[serde(with = "wire::complex")]` for a single `Complex64` field.
pub mod complex {
    use super::*;

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        complex_to_pair(*z).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let p = <[f64; 2]>::deserialize(d)?;
        Ok(pair_to_complex(p))
    }
}

/// `#[serde(with = "wire::complex_vec")]` for `Vec<Complex64>` fields.
pub mod complex_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|z| complex_to_pair(*z)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs = Vec::<Vec<f64>>::deserialize(d)?;
        pairs
            .into_iter()
            .map(|p| {
                if p.len() != 2 {
                    Err(D::Error::custom("complex number must be a [re, im] pair"))
                } else {
                    Ok(Complex64::new(p[0], p[1]))
                }
            })
            .collect()
    }
}
