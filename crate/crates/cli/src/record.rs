//! The serialized shape shared by every subcommand and its three renderings.

use std::fmt::Write as _;

use orbit_hilbert::verify::{TypeVerdicts, Verdict};
use orbit_hilbert::{BigInt, Rational};
use serde::{Deserialize, Serialize};

/// One output row. Every key is always present in JSON; fields a command
/// does not produce are `null`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub alpha: Option<Rational>,
    pub beta: Option<Rational>,
    pub gamma: Option<Rational>,
    pub t: Option<Rational>,
    pub a1: Option<Rational>,
    pub a2: Option<Rational>,
    pub a3: Option<Rational>,
    pub a4: Option<Rational>,
    pub b1: Option<Rational>,
    pub b2: Option<Rational>,
    pub b3: Option<Rational>,
    #[serde(rename = "dim_X")]
    pub dim_x: Option<u64>,
    #[serde(rename = "deg_X", with = "opt_bigint")]
    pub deg_x: Option<BigInt>,
    pub coefficients: Option<Vec<Rational>>,
    pub numerator: Option<Vec<Rational>>,
    pub verdicts: Option<Vec<Verdict>>,
}

mod opt_bigint {
    use orbit_hilbert::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match n {
            Some(n) => s.collect_str(n),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?.map(|s| s.parse().map_err(serde::de::Error::custom)).transpose()
    }
}

impl From<&TypeVerdicts> for OutputRecord {
    fn from(v: &TypeVerdicts) -> Self {
        OutputRecord { lie_type: v.lie_type.to_string(), verdicts: Some(v.verdicts.clone()), ..Default::default() }
    }
}

/// Which columns a command fills, used for CSV and plain layouts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    Params,
    Table,
    Coefficients,
    Polynomial,
    Degree,
    Verify,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn joined(v: &Option<Vec<Rational>>) -> String {
    v.iter().flatten().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl Layout {
    fn header(self) -> &'static [&'static str] {
        match self {
            Layout::Params => {
                &["type", "alpha", "beta", "gamma", "t", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "dim_X", "deg_X"]
            }
            Layout::Table => &["type", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "dim_X", "deg_X"],
            Layout::Coefficients => &["type", "k", "coefficient"],
            Layout::Polynomial => &["type", "power", "coefficient"],
            Layout::Degree => &["type", "dim_X", "deg_X", "numerator"],
            Layout::Verify => &["type", "check", "passed", "k", "detail"],
        }
    }

    fn rows(self, r: &OutputRecord) -> Vec<Vec<String>> {
        let ty = r.lie_type.clone();
        match self {
            Layout::Params => vec![vec![
                ty,
                opt(&r.alpha),
                opt(&r.beta),
                opt(&r.gamma),
                opt(&r.t),
                opt(&r.a1),
                opt(&r.a2),
                opt(&r.a3),
                opt(&r.a4),
                opt(&r.b1),
                opt(&r.b2),
                opt(&r.b3),
                opt(&r.dim_x),
                opt(&r.deg_x),
            ]],
            Layout::Table => vec![vec![
                ty,
                opt(&r.a1),
                opt(&r.a2),
                opt(&r.a3),
                opt(&r.a4),
                opt(&r.b1),
                opt(&r.b2),
                opt(&r.b3),
                opt(&r.dim_x),
                opt(&r.deg_x),
            ]],
            Layout::Coefficients | Layout::Polynomial => r
                .coefficients
                .iter()
                .flatten()
                .enumerate()
                .map(|(k, c)| vec![ty.clone(), k.to_string(), c.to_string()])
                .collect(),
            Layout::Degree => vec![vec![ty, opt(&r.dim_x), opt(&r.deg_x), joined(&r.numerator)]],
            Layout::Verify => r
                .verdicts
                .iter()
                .flatten()
                .map(|v| {
                    vec![
                        ty.clone(),
                        v.check.to_string(),
                        v.passed.to_string(),
                        opt(&v.k),
                        v.detail.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        }
    }
}

pub fn to_json(records: &[OutputRecord], single: bool) -> serde_json::Result<String> {
    let mut s = if single && records.len() == 1 {
        serde_json::to_string_pretty(&records[0])?
    } else {
        serde_json::to_string_pretty(records)?
    };
    s.push('\n');
    Ok(s)
}

pub fn to_csv(records: &[OutputRecord], layout: Layout) -> Result<String, Box<dyn std::error::Error>> {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(layout.header())?;
    for r in records {
        for row in layout.rows(r) {
            w.write_record(&row)?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Whitespace-aligned table with a header line.
pub fn to_plain(records: &[OutputRecord], layout: Layout) -> String {
    let header: Vec<String> = layout.header().iter().map(|h| h.to_string()).collect();
    let mut rows = vec![header];
    for r in records {
        rows.extend(layout.rows(r));
    }
    let widths: Vec<usize> =
        (0..rows[0].len()).map(|i| rows.iter().map(|row| row[i].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &rows {
        let last = row.len() - 1;
        for (i, cell) in row.iter().enumerate() {
            if i == last {
                out.push_str(cell);
            } else {
                let _ = write!(out, "{cell:<w$}  ", w = widths[i]);
            }
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        out.push('\n');
    }
    out
}
