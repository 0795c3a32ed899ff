//! The JSON problem file:
//!
//! ```json
//! {"ring": "int", "char_poly": ["-1","-1","1"], "roots": [["1", 2]],
//!  "init": ["0","1"], "seq": ["0","1","1","2"]}
//! ```
//!
//! Ring elements are strings (plain JSON integers are accepted too) and
//! polynomials list coefficients lowest degree first.

use std::fmt;

use hasserec::{Poly, PrefixSeq, RecurrenceSpec, Ring, RingDescriptor, RootData};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

/// A JSON scalar holding a ring element, kept as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ElemText(pub String);

impl<'de> Deserialize<'de> for ElemText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ElemVisitor;

        impl Visitor<'_> for ElemVisitor {
            type Value = ElemText;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a ring element as a string or integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ElemText, E> {
                Ok(ElemText(v.to_string()))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ElemText, E> {
                Ok(ElemText(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ElemText, E> {
                Ok(ElemText(v.to_string()))
            }
        }

        deserializer.deserialize_any(ElemVisitor)
    }
}

impl From<String> for ElemText {
    fn from(s: String) -> Self {
        ElemText(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ring: RingDescriptor,
    pub char_poly: Vec<ElemText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<(ElemText, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub init: Option<Vec<ElemText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seq: Option<Vec<ElemText>>,
}

/// A problem file parsed into a concrete ring.
pub struct Problem<R: Ring> {
    pub ring: R,
    pub spec: RecurrenceSpec<R>,
    pub roots: Option<RootData<R>>,
    pub init: Option<PrefixSeq<R>>,
    pub seq: Option<PrefixSeq<R>>,
}

fn texts(v: &[ElemText]) -> Vec<&str> {
    v.iter().map(|t| t.0.as_str()).collect()
}

pub fn to_texts(v: Vec<String>) -> Vec<ElemText> {
    v.into_iter().map(ElemText).collect()
}

impl<R: Ring> Problem<R> {
    pub fn parse(ring: R, file: &ProblemFile) -> hasserec::Result<Self> {
        let spec = RecurrenceSpec::new(Poly::parse(ring.clone(), &texts(&file.char_poly))?)?;
        let roots = match &file.roots {
            Some(entries) => {
                let entries = entries
                    .iter()
                    .map(|(a, mu)| Ok((ring.parse_elem(&a.0)?, *mu)))
                    .collect::<hasserec::Result<Vec<_>>>()?;
                Some(RootData::new(&ring, entries)?)
            }
            None => None,
        };
        let init = match &file.init {
            Some(v) => {
                let init = PrefixSeq::parse(ring.clone(), &texts(v))?;
                if init.len() != spec.order() {
                    return Err(hasserec::Error::BadInitLength {
                        expected: spec.order(),
                        got: init.len(),
                    });
                }
                Some(init)
            }
            None => None,
        };
        let seq = match &file.seq {
            Some(v) => Some(PrefixSeq::parse(ring.clone(), &texts(v))?),
            None => None,
        };
        Ok(Problem {
            ring,
            spec,
            roots,
            init,
            seq,
        })
    }
}
