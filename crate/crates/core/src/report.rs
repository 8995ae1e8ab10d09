//! Verification records shared by every check, and the fixed-precision
//! JSON writer used for reports and design files.

use std::io;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Default tolerance for checks on constructed objects (SICs, MUBs, tables).
pub const OBJECT_TOLERANCE: f64 = 1e-10;
/// Default tolerance for algebraic identities.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Error reported when a check fails for a structural reason (wrong counts,
/// missing clusters) rather than a numerical deviation.
pub const STRUCTURAL_FAILURE: f64 = f64::MAX;

/// Outcome of one named check. `passed` is always `max_abs_error <= tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub dimension: usize,
    pub passed: bool,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub details: Map<String, Value>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, dimension: usize, max_abs_error: f64, tolerance: f64) -> Self {
        Self {
            check: check.into(),
            dimension,
            passed: max_abs_error <= tolerance,
            max_abs_error,
            tolerance,
            details: Map::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl Serialize) -> Self {
        let value = serde_json::to_value(value).unwrap_or(Value::Null);
        self.details.insert(key.to_owned(), value);
        self
    }

    /// Marks the check failed regardless of the numerical error.
    pub fn structural_failure(mut self, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        let entry = self
            .details
            .entry("structural_failures")
            .or_insert_with(|| Value::Array(Vec::new()));
        if let Value::Array(list) = entry {
            list.push(Value::String(reason));
        }
        self.max_abs_error = STRUCTURAL_FAILURE;
        self.passed = false;
        self
    }

    /// Same check with the error and tolerance replaced.
    pub fn rescored(mut self, max_abs_error: f64, tolerance: f64) -> Self {
        if self.max_abs_error != STRUCTURAL_FAILURE {
            self.max_abs_error = max_abs_error;
        }
        self.tolerance = tolerance;
        self.passed = self.max_abs_error <= tolerance;
        self
    }
}

/// Writes floats with 17 significant digits (`d.dddddddddddddddde±x`).
#[derive(Clone, Copy, Debug, Default)]
pub struct SignificantDigits;

impl serde_json::ser::Formatter for SignificantDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Compact JSON with every float printed at 17 significant digits.
pub fn to_json_string<T: Serialize + ?Sized>(value: &T) -> serde_json::Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SignificantDigits);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}
