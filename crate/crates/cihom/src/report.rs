//! Deterministic, byte-stable reports. Every command produces a `Report`:
//! an ordered list of key/value items plus optional named sequences.
//! Text rendering and JSON serialization both preserve insertion order, so
//! identical computations yield identical bytes.

use serde::Serialize;

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub items: Vec<Item>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Item {
    pub key: String,
    pub value: String,
}

impl Report {
    pub fn new(command: impl Into<String>, subject: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            subject: subject.into(),
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.items.push(Item {
            key: key.into(),
            value: value.to_string(),
        });
    }

    /// A sequence named per index: key[i] = v_i on one line.
    pub fn push_seq<T: ToString>(&mut self, key: &str, values: impl IntoIterator<Item = T>) {
        let joined = values
            .into_iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        self.push(key, joined);
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {} {} ==\n", self.command, self.subject));
        let width = self.items.iter().map(|i| i.key.len()).max().unwrap_or(0);
        for item in &self.items {
            out.push_str(&format!("{:width$}  {}\n", item.key, item.value));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_text(),
            OutputFormat::Json => self.render_json(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<OutputFormat, String> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected table or json)")),
        }
    }
}

/// Render an optional length: finite values print as integers, the rest as
/// the word `infinite`.
pub fn show_length(l: &Option<num_bigint::BigInt>) -> String {
    match l {
        Some(v) => v.to_string(),
        None => "infinite".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_are_stable() {
        let mut r = Report::new("fit", "pair P");
        r.push("c", 1);
        r.push("d", 1);
        r.push_seq("lengths", [1, 0, 1, 0]);
        let t1 = r.render_text();
        let t2 = r.render_text();
        assert_eq!(t1, t2);
        assert!(t1.contains("lengths  1 0 1 0"));
        let j = r.render_json();
        assert!(j.contains("\"command\": \"fit\""));
        assert_eq!(j, r.render_json());
    }
}
