//! Report serialization: JSON and CSV with 12-significant-digit numbers,
//! plus the one-line text summary.

use crate::scalar::Scalar;
use crate::verifier::BoundReport;

/// Significant digits used for every number in serialized reports.
pub const REPORT_SIG_DIGITS: usize = 12;

/// Formats `x` with the given number of significant digits, choosing plain
/// decimal or exponent notation the way `%g` does, trailing zeros stripped.
pub fn format_sig(x: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return "null".to_string();
    }
    let formatted = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = formatted
        .split_once('e')
        .expect("exponent notation always contains 'e'");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
    if exp >= sig as i32 || exp < -4 {
        return format!("{mantissa}e{exp}");
    }
    // expand into plain decimal
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1; // digits before the decimal point
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digits);
    } else if (point as usize) >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    out
}

fn num<T: Scalar>(x: T) -> String {
    format_sig(x.as_f64(), REPORT_SIG_DIGITS)
}

fn opt_num<T: Scalar>(x: Option<T>) -> String {
    match x {
        Some(v) if v.as_f64().is_finite() => num(v),
        _ => "null".to_string(),
    }
}

/// One report as a JSON object.
pub fn report_json<T: Scalar>(r: &BoundReport<T>) -> String {
    let z2 = r.argmax.zeta2();
    let z3 = r.argmax.zeta3();
    format!(
        concat!(
            "{{\"class\": \"{}\", \"theoretical_bound\": {}, \"observed_max\": {}, ",
            "\"argmax\": {{\"zeta1\": {}, \"zeta2\": [{}, {}], \"zeta3\": [{}, {}]}}, ",
            "\"extremal_value\": {}, \"consistency_residual\": {}, ",
            "\"envelope_violation\": {}, \"eta\": {}, \"status\": \"{}\", ",
            "\"wall_time_s\": {}}}"
        ),
        r.tag,
        opt_num(Some(r.theoretical_bound)),
        opt_num(Some(r.observed_max)),
        num(r.argmax.zeta1()),
        num(z2.re),
        num(z2.im),
        num(z3.re),
        num(z3.im),
        opt_num(r.extremal_value),
        opt_num(r.consistency_residual),
        opt_num(r.envelope_violation),
        opt_num(r.eta),
        r.status,
        format_sig(r.wall_time_s, REPORT_SIG_DIGITS),
    )
}

/// A set of reports as a JSON array.
pub fn reports_json<T: Scalar>(reports: &[BoundReport<T>]) -> String {
    let body: Vec<String> = reports
        .iter()
        .map(|r| format!("  {}", report_json(r)))
        .collect();
    format!("[\n{}\n]\n", body.join(",\n"))
}

pub const CSV_HEADER: &str = "class,theoretical_bound,observed_max,argmax_zeta1,\
argmax_zeta2_re,argmax_zeta2_im,argmax_zeta3_re,argmax_zeta3_im,extremal_value,\
consistency_residual,envelope_violation,eta,status,wall_time_s";

/// Reports as CSV with the same columns as the JSON objects.
pub fn reports_csv<T: Scalar>(reports: &[BoundReport<T>]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let z2 = r.argmax.zeta2();
        let z3 = r.argmax.zeta3();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.tag,
            opt_num(Some(r.theoretical_bound)),
            opt_num(Some(r.observed_max)),
            num(r.argmax.zeta1()),
            num(z2.re),
            num(z2.im),
            num(z3.re),
            num(z3.im),
            opt_num(r.extremal_value),
            opt_num(r.consistency_residual),
            opt_num(r.envelope_violation),
            opt_num(r.eta),
            r.status,
            format_sig(r.wall_time_s, REPORT_SIG_DIGITS),
        ));
    }
    out
}

/// The one-line human-readable summary.
pub fn summary_line<T: Scalar>(r: &BoundReport<T>) -> String {
    format!(
        "{}: bound {} observed {}  {}",
        r.tag,
        num(r.theoretical_bound),
        num(r.observed_max),
        r.status
    )
}
