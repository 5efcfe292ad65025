//! Browser bindings: every export takes plain strings/numbers and returns a
//! JSON document as a `String`, so the page needs no generated TypeScript
//! and the crate compiles (and its tests run) on the host as ordinary Rust.
//!
//! Errors come back as `{"error": "...", "position": n?}` rather than
//! thrown exceptions; the page decides how to surface them.

use serde_json::json;
use wasm_bindgen::prelude::*;

use gopmap::{
    all_gops, count_gop, discretize, gop_of, rank, threshold, Denominator, Error, FunctionTable,
    GridSpec, MapSpec, OrbitStructure, Rounding,
};

fn error_doc(e: &Error) -> String {
    let doc = match e {
        Error::Parse { at, msg } => json!({"error": msg, "position": at}),
        other => json!({"error": other.to_string()}),
    };
    doc.to_string()
}

/// Orbit decomposition of a function literal: components with cycles and
/// basins, the gop, and the rank (exact decimal string).
#[wasm_bindgen]
pub fn analyze_function(literal: &str) -> String {
    let f: FunctionTable = match literal.parse() {
        Ok(f) => f,
        Err(e) => return error_doc(&e),
    };
    let s = OrbitStructure::analyze(&f);
    let g = gop_of(&f);
    let components: Vec<_> = s
        .components()
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative,
                "period": c.period,
                "attractive": c.attractive,
                "cycle": c.cycle,
                "basin": c.basin,
            })
        })
        .collect();
    json!({
        "function": f.to_string(),
        "n": f.n(),
        "images": f.images(),
        "gop": g.to_string(),
        "rank": rank(&f).value().to_string(),
        "components": components,
    })
    .to_string()
}

/// Discretized map on an `n`-point grid: the image table plus the orbit
/// decomposition, ready to draw.
#[wasm_bindgen]
pub fn discretize_map(map: &str, ell: f64, n: usize, denominator: &str, rounding: &str) -> String {
    let map_spec = match map {
        "logistic" => MapSpec::logistic(),
        "tent" => match MapSpec::tent_pow(ell) {
            Ok(m) => m,
            Err(e) => return error_doc(&e),
        },
        other => {
            return error_doc(&Error::Parse {
                at: 0,
                msg: format!("unknown map {other:?}; expected logistic or tent"),
            })
        }
    };
    let den = match denominator {
        "n" => Denominator::N,
        "n-1" => Denominator::NMinusOne,
        other => {
            return error_doc(&Error::Parse {
                at: 0,
                msg: format!("unknown denominator {other:?}; expected n or n-1"),
            })
        }
    };
    let rnd = match rounding {
        "floor" => Rounding::Floor,
        "half-up" => Rounding::HalfUp,
        "half-down" => Rounding::HalfDown,
        other => {
            return error_doc(&Error::Parse {
                at: 0,
                msg: format!("unknown rounding {other:?}; expected floor, half-up, or half-down"),
            })
        }
    };
    let grid = match GridSpec::new(n, den, rnd) {
        Ok(g) => g,
        Err(e) => return error_doc(&e),
    };
    let f = discretize(&map_spec, &grid);
    let s = OrbitStructure::analyze(&f);
    let cycles: Vec<_> = s
        .components()
        .iter()
        .map(|c| {
            json!({
                "period": c.period,
                "cycle": c.cycle,
                "basin": c.basin,
                "attractive": c.attractive,
            })
        })
        .collect();
    json!({
        "map": map,
        "n": n,
        "divisor": grid.divisor(),
        "denominator": denominator,
        "rounding": rounding,
        "images": f.images(),
        "cycles": cycles,
    })
    .to_string()
}

/// Guard for the order table: 2^n − 1 rows.
const ORDER_TABLE_MAX_N: usize = 16;

/// Every pattern on `n` points in pseudo-decimal order, with modulus,
/// modulus − ω₁, exact class size, and the threshold function's literal.
#[wasm_bindgen]
pub fn order_table(n: usize) -> String {
    if n > ORDER_TABLE_MAX_N {
        return error_doc(&Error::InvalidParameter(format!(
            "order table capped at n = {ORDER_TABLE_MAX_N} (2^n - 1 rows); got {n}"
        )));
    }
    let gops = match all_gops(n) {
        Ok(g) => g,
        Err(e) => return error_doc(&e),
    };
    let rows: Vec<_> = gops
        .iter()
        .map(|g| {
            json!({
                "gop": g.to_string(),
                "modulus": g.modulus(),
                "modulus_minus_first": g.modulus() - g.orders()[0],
                "count": count_gop(g).to_string(),
                "threshold": threshold(g).to_string(),
            })
        })
        .collect();
    json!({"n": n, "count": gops.len(), "gops": rows}).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).expect("valid json")
    }

    #[test]
    fn analyze_returns_the_reference_decomposition() {
        let doc = parse(analyze_function("11:6,3,2,5,8,10,9,4,7,6,5"));
        assert_eq!(doc["gop"], "[2,2,1,3]@11");
        assert_eq!(doc["components"].as_array().unwrap().len(), 4);
        assert_eq!(doc["components"][0]["cycle"], json!([6, 9]));
        assert_eq!(doc["components"][0]["basin"], json!([0, 6, 9]));
    }

    #[test]
    fn analyze_reports_parse_errors_with_position() {
        let doc = parse(analyze_function("3:0,9,1"));
        assert!(doc["error"].is_string());
        let doc = parse(analyze_function("3:0,x,1"));
        assert_eq!(doc["position"], 4);
    }

    #[test]
    fn discretize_matches_the_reference_grid() {
        let doc = parse(discretize_map("logistic", 0.0, 9, "n-1", "floor"));
        assert_eq!(doc["images"], json!([0, 3, 6, 7, 8, 7, 6, 3, 0]));
        assert_eq!(doc["divisor"], 8);
        assert_eq!(doc["cycles"].as_array().unwrap().len(), 3);
        let doc = parse(discretize_map("tent", 1.0, 7, "n-1", "floor"));
        assert_eq!(doc["images"], json!([0, 2, 4, 6, 4, 2, 0]));
    }

    #[test]
    fn discretize_rejects_bad_arguments() {
        assert!(parse(discretize_map("cubic", 0.0, 9, "n-1", "floor"))["error"].is_string());
        assert!(parse(discretize_map("tent", 3.0, 9, "n-1", "floor"))["error"].is_string());
        assert!(parse(discretize_map("logistic", 0.0, 9, "half", "floor"))["error"].is_string());
        assert!(parse(discretize_map("logistic", 0.0, 1, "n", "floor"))["error"].is_string());
    }

    #[test]
    fn order_table_lists_all_patterns_with_counts() {
        let doc = parse(order_table(5));
        assert_eq!(doc["count"], 31);
        let rows = doc["gops"].as_array().unwrap();
        assert_eq!(rows[0]["gop"], "[1]@5");
        assert_eq!(rows[0]["count"], "625");
        let total: u64 =
            rows.iter().map(|r| r["count"].as_str().unwrap().parse::<u64>().unwrap()).sum();
        assert_eq!(total, 3125);
        assert!(parse(order_table(40))["error"].is_string());
    }
}
