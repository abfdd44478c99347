//! Serialized forms. Rationals are `num/den` strings (integers as `n`);
//! complex numbers are `[re, im]` pairs of such strings.

use std::io::Write;

use orbline_core::{GapReport, GaussRat, ScanTable, StabilityParam};
use serde::Serialize;

pub fn gauss_pair(z: &GaussRat) -> [String; 2] {
    [z.re.to_string(), z.im.to_string()]
}

#[derive(Serialize)]
pub struct WindowJson {
    #[serde(rename = "L")]
    pub l: u32,
    #[serde(rename = "N")]
    pub n: u32,
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub a: String,
    pub b: String,
    pub ext: bool,
}

#[derive(Serialize)]
pub struct GapJson {
    pub exact_flag: String,
    pub value: String,
    pub float_value: f64,
    pub offset: i64,
    pub ratio: [String; 2],
    pub witness: WitnessJson,
}

impl From<&GapReport> for GapJson {
    fn from(r: &GapReport) -> Self {
        GapJson {
            exact_flag: r.exactness.to_string(),
            value: r.value.exact_string(),
            float_value: r.float_value,
            offset: r.value.offset(),
            ratio: gauss_pair(&r.ratio),
            witness: WitnessJson {
                a: r.witness.a.to_string(),
                b: r.witness.b.to_string(),
                ext: r.witness.ext,
            },
        }
    }
}

#[derive(Serialize)]
pub struct GldimJson {
    #[serde(flatten)]
    pub gap: GapJson,
    pub weights: String,
    pub tau: [String; 2],
    pub window: WindowJson,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub weights: String,
    #[serde(rename = "type")]
    pub weight_type: String,
    pub chi: String,
    pub tau: [String; 2],
    pub window: WindowJson,
    pub theorem1: String,
    pub gepner: bool,
    pub gldim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<f64>,
    pub max_gap: GapJson,
    pub passed: bool,
    pub failures: Vec<String>,
}

pub const CSV_HEADER: [&str; 7] = [
    "tau_re",
    "tau_im",
    "lower_bound_float",
    "exact_flag",
    "witness_a",
    "witness_b",
    "witness_ext",
];

fn csv_record(tau: [String; 2], r: &GapReport) -> [String; 7] {
    let [re, im] = tau;
    [
        re,
        im,
        r.float_value.to_string(),
        r.exactness.to_string(),
        r.witness.a.to_string(),
        r.witness.b.to_string(),
        r.witness.ext.to_string(),
    ]
}

/// One row per grid point in grid order, then a `grid_inf` row repeating the
/// smallest value and its witness.
pub fn write_scan_csv<W: Write>(table: &ScanTable, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in &table.rows {
        w.write_record(csv_record(tau_pair(&row.sigma), &row.report))?;
    }
    let inf = table.infimum_row();
    w.write_record(csv_record(["grid_inf".into(), String::new()], &inf.report))?;
    w.flush()?;
    Ok(())
}

pub fn tau_pair(sigma: &StabilityParam) -> [String; 2] {
    gauss_pair(sigma.tau())
}
