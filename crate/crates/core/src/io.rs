//! JSON file formats.

use serde::{Deserialize, Serialize};

use crate::coord::{ExactRational, Scalar};
use crate::error::{Error, Result};
use crate::weight::Weight;

/// `{"n": 3, "symbols": ["pi"], "coords": ["1/5", "-1+pi*1", "0"]}`.
///
/// When `symbols` is present every symbol used by a coordinate must be
/// declared there.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbols: Option<Vec<String>>,
    pub coords: Vec<String>,
}

impl WeightFile {
    pub fn from_weight<Q: ExactRational>(w: &Weight<Q>) -> Self {
        let symbols = w.symbols();
        WeightFile {
            n: w.n(),
            symbols: if symbols.is_empty() { None } else { Some(symbols) },
            coords: w.to_texts(),
        }
    }

    pub fn to_weight<Q: ExactRational>(&self) -> Result<Weight<Q>> {
        if self.coords.len() != self.n {
            return Err(Error::Parse {
                text: format!("{:?}", self.coords),
                reason: format!("expected {} coordinates, found {}", self.n, self.coords.len()),
            });
        }
        let texts: Vec<&str> = self.coords.iter().map(String::as_str).collect();
        let w = Weight::parse(&texts)?;
        if let Some(declared) = &self.symbols {
            check_symbols(&w.symbols(), declared)?;
        }
        Ok(w)
    }

    pub fn parse<Q: ExactRational>(json: &str) -> Result<Weight<Q>> {
        let file: WeightFile = serde_json::from_str(json).map_err(|e| Error::Parse {
            text: json.chars().take(80).collect(),
            reason: e.to_string(),
        })?;
        file.to_weight()
    }
}

fn check_symbols(used: &[String], declared: &[String]) -> Result<()> {
    for s in used {
        if !declared.contains(s) {
            return Err(Error::Parse {
                text: s.clone(),
                reason: format!("symbol not declared (declared: {})", declared.join(", ")),
            });
        }
    }
    Ok(())
}

/// Parses a scalar given on the command line, optionally restricted to
/// declared symbols.
pub fn parse_scalar<Q: ExactRational>(text: &str, declared: Option<&[String]>) -> Result<Scalar<Q>> {
    let s: Scalar<Q> = text.parse()?;
    if let Some(d) = declared {
        check_symbols(&s.symbols().map(str::to_string).collect::<Vec<_>>(), d)?;
    }
    Ok(s)
}
