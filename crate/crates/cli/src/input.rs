//! Input documents: a single JSON or TOML table describing the semigroup and the request.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_GUARD: u32 = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Local,
    Global,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    #[default]
    Arithmetic,
    Geometric,
    Both,
    Difference,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    #[serde(alias = "d")]
    pub lattice_rank: usize,
    /// Integer vectors; in rank one a bare integer stands for a vector of length one.
    #[serde(alias = "gens", deserialize_with = "generators")]
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub normal: bool,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub series: SeriesKind,
    #[serde(default)]
    pub expand: Option<u32>,
    #[serde(default = "default_guard")]
    pub smax_guard: u32,
}

fn default_guard() -> u32 {
    DEFAULT_GUARD
}

fn generators<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Vec<i64>>, D::Error> {
    struct Entry(Vec<i64>);

    impl<'de> Deserialize<'de> for Entry {
        fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
            struct V;
            impl<'de> Visitor<'de> for V {
                type Value = Entry;

                fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                    f.write_str("an integer or an array of integers")
                }

                fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                    Ok(Entry(vec![v]))
                }

                fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                    i64::try_from(v).map(|v| Entry(vec![v])).map_err(|_| E::custom("integer out of range"))
                }

                fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Entry, A::Error> {
                    let mut out = Vec::new();
                    while let Some(x) = seq.next_element::<i64>()? {
                        out.push(x);
                    }
                    Ok(Entry(out))
                }
            }
            de.deserialize_any(V)
        }
    }

    let entries = Vec::<Entry>::deserialize(de)?;
    Ok(entries.into_iter().map(|e| e.0).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Toml,
}

impl Format {
    /// `.toml` files are TOML; anything else is sniffed from its first character.
    pub fn guess(path: &str, text: &str) -> Format {
        if path.ends_with(".toml") {
            return Format::Toml;
        }
        if path.ends_with(".json") {
            return Format::Json;
        }
        match text.trim_start().chars().next() {
            Some('{') => Format::Json,
            _ => Format::Toml,
        }
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, column)
}

impl InputSpec {
    pub fn parse(text: &str, format: Format, source: &str) -> Result<InputSpec, CliError> {
        match format {
            Format::Json => serde_json::from_str(text).map_err(|e| CliError::Parse {
                origin: source.to_string(),
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            }),
            Format::Toml => toml::from_str(text).map_err(|e| {
                let (line, column) = e.span().map_or((0, 0), |r| line_column(text, r.start));
                CliError::Parse { origin: source.to_string(), line, column, message: e.message().to_string() }
            }),
        }
    }
}

impl FromStr for InputSpec {
    type Err = CliError;

    fn from_str(text: &str) -> Result<InputSpec, CliError> {
        InputSpec::parse(text, Format::guess("", text), "<input>")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_keys_and_scalars() {
        let spec: InputSpec = r#"{"d": 1, "gens": [2, 3], "series": "arithmetic", "expand": 10}"#.parse().unwrap();
        assert_eq!(spec.lattice_rank, 1);
        assert_eq!(spec.generators, vec![vec![2], vec![3]]);
        assert_eq!(spec.expand, Some(10));
        assert_eq!(spec.smax_guard, DEFAULT_GUARD);
        assert_eq!(spec.mode, Mode::Local);
    }

    #[test]
    fn toml_document() {
        let text = "lattice_rank = 2\ngenerators = [[1, 0], [1, 1], [1, 2]]\nnormal = true\nmode = \"global\"\n";
        let spec: InputSpec = text.parse().unwrap();
        assert!(spec.normal);
        assert_eq!(spec.mode, Mode::Global);
        assert_eq!(spec.generators.len(), 3);
    }

    #[test]
    fn json_error_position() {
        let text = "{\n  \"d\": 2,\n  \"gens\": [[1, 0], [0, \"x\"]]\n}";
        match text.parse::<InputSpec>() {
            Err(CliError::Parse { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 20, "column {column}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn toml_error_position() {
        let text = "lattice_rank = 2\ngenerators = [[1, 0], [0, 1.5]]\n";
        match InputSpec::parse(text, Format::Toml, "x.toml") {
            Err(CliError::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert!(column > 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_field_rejected() {
        assert!(r#"{"d": 1, "gens": [1], "colour": 3}"#.parse::<InputSpec>().is_err());
    }

    #[test]
    fn echo_round_trips() {
        let spec: InputSpec = r#"{"d": 1, "gens": [2, 3]}"#.parse().unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json.parse::<InputSpec>().unwrap(), spec);
    }
}
