//! Stable number formatting shared by every report.

use serde_json::Value;

/// Shortest decimal that round-trips the value rounded to 12 significant
/// digits; scientific notation outside `[1e-4, 1e15)`.
pub fn sig(v: f64) -> String {
    if !v.is_finite() || v == 0.0 {
        return format!("{v}");
    }
    let rounded: f64 = format!("{v:.11e}").parse().expect("scientific notation parses");
    if (1e-4..1e15).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

/// Rounds every float in a JSON tree to 12 significant digits.
pub fn round_json(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = num.as_f64().expect("f64 number");
            let rounded: f64 = format!("{x:.11e}").parse().expect("scientific notation parses");
            if let Some(r) = serde_json::Number::from_f64(rounded) {
                *num = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("reports serialize");
    round_json(&mut v);
    serde_json::to_string(&v).expect("json values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(sig(7.372281323269014), "7.37228132327");
        assert_eq!(sig(6.0), "6");
        assert_eq!(sig(1.7763568394002505e-15), "1.7763568394e-15");
        assert_eq!(sig(-0.25), "-0.25");
        assert_eq!(sig(0.0), "0");
        let mut v = serde_json::json!({"q": 7.372281323269014, "n": 5, "xs": [0.1234567890123456]});
        round_json(&mut v);
        assert_eq!(v.to_string(), r#"{"n":5,"q":7.37228132327,"xs":[0.123456789012]}"#);
    }
}
