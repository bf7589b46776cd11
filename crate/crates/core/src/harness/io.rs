//! JSON configuration files.
//!
//! ```json
//! {"dim": 2, "points": [["0", "1/2"], ["3", "-4"]]}
//! {"dim": 2, "vectors": [["1", "0"], ["0", "1"]]}
//! ```
//!
//! Coordinates are exact rationals written as `"p/q"` or `"p"`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::{SphericalConfiguration, VertexConfiguration};
use crate::error::{Error, Result};
use crate::linalg::{Point, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vectors: Option<Vec<Vec<String>>>,
}

/// Contents of a configuration file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigFile {
    Points(VertexConfiguration),
    Vectors(SphericalConfiguration),
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed.chars().any(char::is_whitespace) {
        return Err(Error::Parse(format!("invalid rational {s:?}")));
    }
    Rational::from_str(trimmed).map_err(|e| Error::Parse(format!("invalid rational {s:?}: {e}")))
}

fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<Point>> {
    rows.iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>().map(Point::new))
        .collect()
}

fn format_rows(points: &[Point]) -> Vec<Vec<String>> {
    points.iter().map(|p| p.coords().iter().map(ToString::to_string).collect()).collect()
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<ConfigFile> {
        let raw: RawConfig = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match (raw.points, raw.vectors) {
            (Some(points), None) => Ok(ConfigFile::Points(VertexConfiguration::new(raw.dim, parse_rows(&points)?)?)),
            (None, Some(vectors)) => {
                Ok(ConfigFile::Vectors(SphericalConfiguration::new(raw.dim, parse_rows(&vectors)?)?))
            }
            _ => Err(Error::Parse("expected exactly one of \"points\" or \"vectors\"".into())),
        }
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.raw()).expect("plain data serialises")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.raw()).expect("plain data serialises")
    }

    fn raw(&self) -> RawConfig {
        match self {
            ConfigFile::Points(c) => RawConfig { dim: c.dim(), points: Some(format_rows(c.points())), vectors: None },
            ConfigFile::Vectors(s) => RawConfig { dim: s.dim(), points: None, vectors: Some(format_rows(s.vectors())) },
        }
    }
}

pub fn configuration_to_value(cfg: &VertexConfiguration) -> serde_json::Value {
    ConfigFile::Points(cfg.clone()).to_value()
}
