//! Tabulated comparison of `sin_{p,q}(x)/x` against its bounds, with a
//! plain-decimal CSV codec.
//!
//! A scan samples an inclusive uniform grid `x_i = from + i·(to−from)/(n−1)`
//! and records, per point, the sine ratio, the proven lower bound
//! `(π_{p,q}²−x²)/(π_{p,q}²+x²)`, the q-power variant, the `q = 2` upper
//! bound `(6p−x²)/(6p+x²)` when it applies, and the lower-bound margin
//! `sin_ratio − lower`.  CSV output renders every number with 17
//! significant digits in plain decimal (no exponent notation), which is
//! enough for `f64` values to survive a parse/render round trip
//! byte-for-byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::redheffer::{lower_bound, qpower_bound, sin_ratio, upper_bound_sin_p2};
use crate::special::Accuracy;
use crate::trig::pi_pq;

/// Column header of the CSV format.
pub const CSV_HEADER: &str = "x,sin_ratio,lower,qpower,upper,margin";

/// Digits used for CSV round-trip fidelity.
const CSV_DIGITS: usize = 17;

/// One row of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRecord {
    /// Sample abscissa.
    pub x: f64,
    /// `sin_{p,q}(x)/x` (series-filled at the removable singularity).
    pub sin_ratio: f64,
    /// `(π_{p,q}² − x²)/(π_{p,q}² + x²)`.
    pub lower: f64,
    /// `(π_{p,q}^q − |x|^q)/(π_{p,q}^q + |x|^q)`.
    pub qpower: f64,
    /// `(6p − x²)/(6p + x²)`, present exactly when `q = 2`.
    pub upper: Option<f64>,
    /// `sin_ratio − lower`.
    pub margin: f64,
}

/// Samples `n ≥ 2` points of the inclusive grid
/// `x_i = from + i·(to−from)/(n−1)`, `i = 0..n`, recording the ratio, the
/// bounds and the lower-bound margin at each.
pub fn scan(pr: Params, from: f64, to: f64, n: usize, acc: &Accuracy) -> Result<Vec<ScanRecord>> {
    if !from.is_finite() || !to.is_finite() || !(from < to) {
        return Err(Error::Domain(format!(
            "scan needs finite from < to (got {from}, {to})"
        )));
    }
    if n < 2 {
        return Err(Error::Domain(format!("scan needs n >= 2 points (got {n})")));
    }
    let a = pi_pq(pr);
    let span = to - from;
    let denom = (n - 1) as f64;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let x = if i == n - 1 { to } else { from + span * i as f64 / denom };
        let ratio = sin_ratio(x, pr, acc)?;
        let lower = lower_bound(x, a);
        rows.push(ScanRecord {
            x,
            sin_ratio: ratio,
            lower,
            qpower: qpower_bound(x, pr),
            upper: (pr.q() == 2.0).then(|| upper_bound_sin_p2(x, pr.p())),
            margin: ratio - lower,
        });
    }
    Ok(rows)
}

/// Renders rows as CSV: header line, one line per record, `\n` endings,
/// all numbers in 17-significant-digit plain decimal, and an empty `upper`
/// field when the bound does not apply.
pub fn render_csv(rows: &[ScanRecord]) -> String {
    let mut out = String::with_capacity(32 + rows.len() * 120);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let upper = match r.upper {
            Some(u) => format_significant(u, CSV_DIGITS),
            None => String::new(),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            format_significant(r.x, CSV_DIGITS),
            format_significant(r.sin_ratio, CSV_DIGITS),
            format_significant(r.lower, CSV_DIGITS),
            format_significant(r.qpower, CSV_DIGITS),
            upper,
            format_significant(r.margin, CSV_DIGITS),
        );
    }
    out
}

/// Parses CSV produced by [`render_csv`] (or hand-written in the same
/// shape) back into records.  Malformed input yields `Error::Parse`.
pub fn parse_csv(text: &str) -> Result<Vec<ScanRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header '{CSV_HEADER}', got {other:?}"
            )))
        }
    }
    let field = |s: &str, line: usize| -> Result<f64> {
        s.parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad number '{s}' on line {line}")))
    };
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 2;
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 6 {
            return Err(Error::Parse(format!(
                "expected 6 fields on line {lineno}, got {}",
                cols.len()
            )));
        }
        let upper = if cols[4].is_empty() { None } else { Some(field(cols[4], lineno)?) };
        rows.push(ScanRecord {
            x: field(cols[0], lineno)?,
            sin_ratio: field(cols[1], lineno)?,
            lower: field(cols[2], lineno)?,
            qpower: field(cols[3], lineno)?,
            upper,
            margin: field(cols[5], lineno)?,
        });
    }
    Ok(rows)
}

/// Formats `v` with `digits` significant digits in plain decimal notation
/// (never exponent form): `0.0000123`, `123000`, `-0.50000000000000000`.
pub fn format_significant(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mant, exp) = sci.split_once('e').expect("{:e} always emits an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let neg = mant.starts_with('-');
    let mut digit_run = String::with_capacity(digits);
    digit_run.extend(mant.chars().filter(char::is_ascii_digit));
    let point = exp + 1;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digit_run);
    } else if point as usize >= digit_run.len() {
        out.push_str(&digit_run);
        for _ in 0..(point as usize - digit_run.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digit_run[..point as usize]);
        out.push('.');
        out.push_str(&digit_run[point as usize..]);
    }
    out
}

/// [`format_significant`] with trailing fractional zeros (and a bare
/// trailing point) trimmed: `1.5000 → 1.5`, `1.0000 → 1`.
pub fn format_significant_trimmed(v: f64, digits: usize) -> String {
    let s = format_significant(v, digits);
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        t.to_string()
    } else {
        s
    }
}
