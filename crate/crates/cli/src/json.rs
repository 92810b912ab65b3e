//! JSON emission conventions: every exact quantity is a string ("p/q" in
//! lowest terms, or a plain decimal integer), never a JSON number, so
//! output is byte-identical across platforms. `serde_json`'s default map
//! is ordered, which keeps keys sorted.

use num_rational::BigRational;
use sapgrid_core::grid::Grid;
use sapgrid_core::rat::render;
use serde_json::{Map, Value};

pub fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

pub fn q(r: &BigRational) -> Value {
    Value::String(render(r))
}

pub fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

pub fn grid_value(grid: &Grid) -> Value {
    obj(vec![
        ("k", s(grid.len)),
        ("x_start", q(&grid.x_start)),
        ("x_step", q(&grid.x_step)),
        ("y_start", q(&grid.y_start)),
        ("y_step", q(&grid.y_step)),
    ])
}

pub fn print(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("valid JSON"));
}

#[cfg(test)]
mod tests {
    use super::*;
    use sapgrid_core::rat::rat;

    #[test]
    fn keys_come_out_sorted() {
        let v = obj(vec![("zeta", s(1)), ("alpha", s(2))]);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, r#"{"alpha":"2","zeta":"1"}"#);
    }

    #[test]
    fn rationals_render_reduced() {
        assert_eq!(q(&rat(2, 4)), Value::String("1/2".into()));
        assert_eq!(q(&rat(-6, 3)), Value::String("-2".into()));
    }
}
