//! Number formatting and CSV/JSON emission.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// `num/den`, also for integers.
pub fn rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// 17 significant digits.
pub fn float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// A JSON number carrying exactly the digits of [`float`]; `null` if not finite.
pub fn json_float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    serde_json::from_str(&float(x)).expect("valid JSON number")
}

pub fn json_bigint(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

/// A JSON object with `schema_version` and `command` first.
pub fn envelope(command: &str, fields: Value) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
    out.insert("command".into(), Value::from(command));
    if let Value::Object(m) = fields {
        out.extend(m);
    }
    Value::Object(out)
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// RFC 4180 CSV with `\n` line endings.
pub fn csv_text(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(rational(&BigRational::from_integer(3.into())), "3/1");
        assert_eq!(rational(&BigRational::new((-2).into(), 6.into())), "-1/3");
        assert_eq!(float(0.1), "1.0000000000000001e-1");
        assert_eq!(float(0.1).parse::<f64>().unwrap(), 0.1);
        assert_eq!(json_float(f64::NAN), Value::Null);
        assert_eq!(serde_json::to_string(&json_float(-2.5)).unwrap(), "-2.5000000000000000e+0");
        assert_eq!(json_bigint(&BigInt::from(7)), Value::from(7));
        assert_eq!(json_bigint(&(BigInt::from(u64::MAX) * 4)), Value::from("73786976294838206460"));
    }

    #[test]
    fn csv_quotes_when_needed() {
        let t = csv_text(&["a".into(), "b".into()], &[vec!["1".into(), "x,y".into()]]);
        assert_eq!(t, "a,b\n1,\"x,y\"\n");
    }

    #[test]
    fn envelope_leads_with_schema() {
        let v = envelope("sum", serde_json::json!({"value": 1}));
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.starts_with("{\"schema_version\":1,\"command\":\"sum\""), "{s}");
    }

    proptest::proptest! {
        #[test]
        fn floats_round_trip(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            proptest::prop_assert_eq!(float(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
            let v = json_float(x);
            proptest::prop_assert_eq!(v.to_string().parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }
}
