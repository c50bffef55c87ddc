//! JSON plumbing shared by the reports.

use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Rounds to 12 significant digits so reports do not leak platform noise in
/// the last few bits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn round_opt(x: Option<f64>) -> Option<f64> {
    x.map(round_sig)
}

/// Adds the schema tag in front of a report.
#[derive(Serialize)]
pub struct Versioned<'a, T: Serialize> {
    pub schema: u32,
    pub command: &'a str,
    #[serde(flatten)]
    pub body: &'a T,
}

pub fn to_json<T: Serialize>(command: &str, body: &T) -> String {
    let doc = Versioned {
        schema: SCHEMA,
        command,
        body,
    };
    serde_json::to_string_pretty(&doc).expect("reports serialize")
}
