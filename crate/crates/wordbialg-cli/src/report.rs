//! Command results and their rendering.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

/// Output format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?}; expected json, csv or text")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Whether a command found what it was asked to confirm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Success,
    PropertyFailure,
}

/// A finished command: JSON payload, text and optional CSV renderings.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub outcome: Outcome,
}

impl Report {
    pub fn new(json: Value, text: String) -> Self {
        Report { json, text, csv: None, outcome: Outcome::Success }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn failing_if(mut self, failed: bool) -> Self {
        if failed {
            self.outcome = Outcome::PropertyFailure;
        }
        self
    }

    /// Renders in `format`; CSV falls back to JSON for commands without rows.
    /// JSON keys are sorted, so the output is byte-stable.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Csv if self.csv.is_some() => self.csv.clone().unwrap(),
            _ => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.outcome {
            Outcome::Success => 0,
            Outcome::PropertyFailure => crate::EXIT_PROPERTY,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rendering() {
        let r = Report::new(json!({"b": 1, "a": [2]}), "hi\n".into());
        assert_eq!(r.render(Format::Text), "hi\n");
        assert_eq!(r.render(Format::Csv), r.render(Format::Json));
        assert!(r.render(Format::Json).find("\"a\"").unwrap() < r.render(Format::Json).find("\"b\"").unwrap());
        assert_eq!(r.clone().failing_if(true).exit_code(), 2);
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
    }
}
