//! Report types and their text, JSON and CSV renderings. Big integers and
//! rationals are carried as decimal strings.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A natural logarithm that may be `±∞`; infinities are written as the
/// strings `"inf"` and `"-inf"`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LnValue(pub f64);

impl Serialize for LnValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            f64::INFINITY => s.serialize_str("inf"),
            f64::NEG_INFINITY => s.serialize_str("-inf"),
            x => s.serialize_f64(x),
        }
    }
}

impl<'de> Deserialize<'de> for LnValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(LnValue(x)),
            Raw::Str(s) if s == "inf" => Ok(LnValue(f64::INFINITY)),
            Raw::Str(s) if s == "-inf" => Ok(LnValue(f64::NEG_INFINITY)),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("invalid log value {s:?}"))),
        }
    }
}

impl std::fmt::Display for LnValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            f64::INFINITY => f.write_str("inf"),
            f64::NEG_INFINITY => f.write_str("-inf"),
            x => write!(f, "{x:.6}"),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub group: String,
    pub degree: String,
    pub group_order: String,
    pub kind: String,
    pub m_from: usize,
    pub m_to: usize,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certification: Option<Certification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Row {
    pub m: usize,
    pub carrier_size: String,
    pub orbit_count: String,
    /// `⟨Stab⟩ − 1` as an exact fraction.
    pub delta: String,
    pub delta_float: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleRow>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub name: String,
    /// What the bound is compared with.
    pub quantity: String,
    pub ln_bound: LnValue,
    pub ln_exact: LnValue,
    /// `ln_bound − ln_exact`, `inf` when the exact value is zero.
    pub slack: LnValue,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct OracleRow {
    pub agrees: bool,
    pub orbit_count: String,
    pub regular_orbits: String,
    pub rigid_points: String,
    /// Present when `δ < 1`: regular-orbit fraction `≥ (1−δ)/(1+δ)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular_orbit_bound_holds: Option<bool>,
    /// Present when `δ < 1`: rigid-point fraction `≥ 1−δ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rigid_point_bound_holds: Option<bool>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Certification {
    pub oracle_agrees: bool,
    pub regular_fraction_bounds_hold: bool,
    /// `ν_m = ν_{n−m}` wherever both sizes are in range (subsets only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<bool>,
    /// Nondecreasing up to `n/2` over the range (subsets only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unimodal: Option<bool>,
}

impl Certification {
    pub fn passed(&self) -> bool {
        self.oracle_agrees
            && self.regular_fraction_bounds_hold
            && self.symmetric != Some(false)
            && self.unimodal != Some(false)
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Bound names in order of first appearance.
    fn bound_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for b in self.rows.iter().flat_map(|r| &r.bounds) {
            if !names.contains(&b.name) {
                names.push(b.name.clone());
            }
        }
        names
    }

    pub fn to_csv(&self) -> String {
        let names = self.bound_names();
        let with_oracle = self.rows.iter().any(|r| r.oracle.is_some());
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = ["m", "carrier_size", "orbit_count", "delta", "delta_float"]
            .map(String::from)
            .to_vec();
        for n in &names {
            header.push(format!("ln_bound_{n}"));
            header.push(format!("slack_{n}"));
        }
        if with_oracle {
            header.extend(["oracle_agrees", "regular_orbits", "rigid_points"].map(String::from));
        }
        header.push("note".into());
        w.write_record(&header).expect("in-memory write");
        for r in &self.rows {
            let mut rec = vec![
                r.m.to_string(),
                r.carrier_size.clone(),
                r.orbit_count.clone(),
                r.delta.clone(),
                r.delta_float.to_string(),
            ];
            for n in &names {
                match r.bounds.iter().find(|b| &b.name == n) {
                    Some(b) => {
                        rec.push(b.ln_bound.0.to_string());
                        rec.push(b.slack.0.to_string());
                    }
                    None => rec.extend([String::new(), String::new()]),
                }
            }
            if with_oracle {
                match &r.oracle {
                    Some(o) => rec.extend([o.agrees.to_string(), o.regular_orbits.clone(), o.rigid_points.clone()]),
                    None => rec.extend([String::new(), String::new(), String::new()]),
                }
            }
            rec.push(r.note.clone().unwrap_or_default());
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {}  degree {}  |G| = {}  {} m = {}..{}",
            self.command, self.group, self.degree, self.group_order, self.kind, self.m_from, self.m_to
        );
        let names = self.bound_names();
        let with_oracle = self.rows.iter().any(|r| r.oracle.is_some());
        let mut header: Vec<String> = ["m", "orbits", "carrier", "delta", "delta~"].map(String::from).to_vec();
        header.extend(names.iter().map(|n| format!("{n} ln (slack)")));
        if with_oracle {
            header.push("oracle".into());
        }
        header.push("note".into());
        let mut table = vec![header];
        for r in &self.rows {
            let mut line = vec![
                r.m.to_string(),
                r.orbit_count.clone(),
                r.carrier_size.clone(),
                r.delta.clone(),
                format!("{:.6e}", r.delta_float),
            ];
            for n in &names {
                line.push(match r.bounds.iter().find(|b| &b.name == n) {
                    Some(b) => format!("{} ({})", b.ln_bound, b.slack),
                    None => "-".into(),
                });
            }
            if with_oracle {
                line.push(match &r.oracle {
                    Some(o) if o.agrees => format!("ok, {} regular", o.regular_orbits),
                    Some(o) => format!("MISMATCH {}", o.orbit_count),
                    None => "-".into(),
                });
            }
            line.push(r.note.clone().unwrap_or_default());
            table.push(line);
        }
        let widths: Vec<usize> = (0..table[0].len())
            .map(|c| table.iter().map(|l| l[c].chars().count()).max().unwrap_or(0))
            .collect();
        for line in &table {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        if let Some(c) = &self.certification {
            let flag = |v: Option<bool>| v.map_or("n/a", |b| if b { "yes" } else { "NO" });
            let _ = writeln!(
                out,
                "oracle agrees: {}  regular-orbit bounds hold: {}  symmetric: {}  unimodal: {}",
                flag(Some(c.oracle_agrees)),
                flag(Some(c.regular_fraction_bounds_hold)),
                flag(c.symmetric),
                flag(c.unimodal)
            );
        }
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(out, "wall time: {ms} ms");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        RunReport {
            command: "bounds".into(),
            group: "C:4".into(),
            degree: "4".into(),
            group_order: "4".into(),
            kind: "subsets".into(),
            m_from: 2,
            m_to: 2,
            rows: vec![Row {
                m: 2,
                carrier_size: "6".into(),
                orbit_count: "2".into(),
                delta: "1/3".into(),
                delta_float: 1.0 / 3.0,
                bounds: vec![BoundRow {
                    name: "4.1".into(),
                    quantity: "delta".into(),
                    ln_bound: LnValue(1.25),
                    ln_exact: LnValue(f64::NEG_INFINITY),
                    slack: LnValue(f64::INFINITY),
                }],
                note: None,
                oracle: None,
            }],
            certification: None,
            wall_time_ms: None,
        }
    }

    #[test]
    fn json_round_trip_with_infinities() {
        let r = sample();
        let json = r.to_json();
        assert!(json.contains("\"-inf\""));
        assert_eq!(RunReport::from_json(&json).unwrap(), r);
    }

    #[test]
    fn csv_has_one_row_per_m() {
        let csv = sample().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("m,carrier_size,orbit_count,delta,delta_float,ln_bound_4.1,slack_4.1"));
        assert!(lines[1].starts_with("2,6,2,1/3,"));
    }

    #[test]
    fn text_table_lists_rows() {
        let text = sample().to_text();
        assert!(text.lines().count() == 3);
        assert!(text.contains("1/3"));
    }
}
