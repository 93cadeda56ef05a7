use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Oriented,
    Unoriented,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Oriented,
    Unoriented,
    Moments,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One enumeration run, as written by `mapenum enumerate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub mode: Mode,
    /// Surface type the moments were taken over; only set in moments mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Orientation>,
    pub profile: BTreeMap<u32, u32>,
    /// Name of the bin key: `g`, `chi`, or `faces`.
    pub bin: String,
    pub bins: BTreeMap<i64, u64>,
    pub totals: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
    pub threads: usize,
    pub version: String,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("bin,count\n");
        for (b, c) in &self.bins {
            let _ = writeln!(out, "{b},{c}");
        }
        out
    }

    pub fn to_table(&self) -> String {
        let profile = self
            .profile
            .iter()
            .map(|(d, j)| format!("{d}:{j}"))
            .collect::<Vec<_>>()
            .join(",");
        let what = match (self.mode, self.orientation) {
            (Mode::Oriented, _) => "oriented maps".to_string(),
            (Mode::Unoriented, _) => "unoriented maps".to_string(),
            (Mode::Moments, Some(o)) => format!("{} gluings by face count", orientation_name(o)),
            (Mode::Moments, None) => "gluings by face count".to_string(),
        };
        let mut out = format!(
            "# {what}, profile {profile}, {} thread(s), {} ms\n",
            self.threads, self.elapsed_ms
        );
        let labels: Vec<String> = self
            .bins
            .keys()
            .map(|b| format!("{}={b}", self.bin))
            .collect();
        let width = labels.iter().map(String::len).max().unwrap_or(0);
        let rows: Vec<(String, u64)> = labels
            .into_iter()
            .zip(self.bins.values().copied())
            .collect();
        // genus ascending, χ descending (sphere first)
        let ordered: Box<dyn Iterator<Item = &(String, u64)>> = if self.bin == "chi" {
            Box::new(rows.iter().rev())
        } else {
            Box::new(rows.iter())
        };
        for (label, count) in ordered {
            let _ = writeln!(out, "{label:>width$}: {count}");
        }
        let totals = self
            .totals
            .iter()
            .map(|(k, v)| format!("{k} {v}"))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "# {totals}");
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Json => self.to_json() + "\n",
            Format::Csv => self.to_csv(),
        }
    }
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Oriented => "oriented",
        Orientation::Unoriented => "unoriented",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        RunReport {
            schema: SCHEMA_VERSION,
            mode: Mode::Unoriented,
            orientation: None,
            profile: [(4, 1)].into_iter().collect(),
            bin: "chi".into(),
            bins: [(0, 5), (1, 5), (2, 2), (-1, 7)].into_iter().collect(),
            totals: [
                ("connected".to_string(), 19),
                ("signed_matchings".to_string(), 19),
            ]
            .into_iter()
            .collect(),
            elapsed_ms: 3,
            threads: 2,
            version: "0.1.0".into(),
        }
    }

    #[test]
    fn json_round_trips() {
        let r = sample();
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
        let mut m = sample();
        m.mode = Mode::Moments;
        m.orientation = Some(Orientation::Oriented);
        m.bin = "faces".into();
        assert_eq!(RunReport::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn json_layout() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["mode"], "unoriented");
        assert_eq!(v["profile"]["4"], 1);
        assert_eq!(v["bins"]["-1"], 7);
        assert_eq!(v["totals"]["connected"], 19);
        assert!(v.get("orientation").is_none());
    }

    #[test]
    fn table_and_csv() {
        let r = sample();
        let table = r.to_table();
        let lines: Vec<&str> = table.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(
            lines,
            vec![" chi=2: 2", " chi=1: 5", " chi=0: 5", "chi=-1: 7"]
        );
        assert_eq!(r.to_csv(), "bin,count\n-1,7\n0,5\n1,5\n2,2\n");
    }
}
