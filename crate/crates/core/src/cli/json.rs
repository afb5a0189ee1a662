//! Deterministic JSON output.

use serde_json::{Number, Value};

/// Significant digits kept for every float.
pub const SIG_DIGITS: usize = 12;

/// Rounds `x` to [`SIG_DIGITS`] significant digits; −0 becomes 0.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", SIG_DIGITS - 1, x);
    let y: f64 = s.parse().expect("formatted float parses");
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

/// Applies [`round_sig`] to every float in the tree.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64"));
            *v = Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null);
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn render(mut v: Value) -> String {
    round_floats(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("json renders");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn twelve_digits() {
        assert_eq!(round_sig(std::f64::consts::TAU), 6.28318530718);
        assert_eq!(round_sig(-0.0), 0.0);
        assert_eq!(round_sig(0.6000000000000001), 0.6);
        assert_eq!(round_sig(1e-17), 1e-17);
    }

    #[test]
    fn nested_values() {
        let out = render(json!({"a": [0.30000000000000004, 1], "b": {"c": 2.0}}));
        assert!(out.contains("0.3"));
        assert!(!out.contains("0.30000000000000004"));
        assert!(out.contains("\"c\": 2.0"));
    }
}
