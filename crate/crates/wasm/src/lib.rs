//! Browser bindings for the demo page in `www/`. Every export returns a JSON
//! string; the work happens in plain functions so it can be tested natively.

use num_bigint::BigInt;
use pathinv::hankel::{det_fraction_free, hankel_matrix, shifted_hankel_closed, HankelSpec};
use pathinv::motzkin::{banded_motzkin_gf, inverse_motzkin_matrix, motzkin_matrix, motzkin_series};
use pathinv::schroder::{banded_w_gf, inverse_schroder_matrix, schroder_matrix_compressed, w_series};
use pathinv::{OmegaPoly, TSeries};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_TERMS: u32 = 200;
const MAX_DIM: u32 = 24;
const MAX_BAND: u32 = 40;

fn parse_omega(s: &str) -> Result<Option<BigInt>, String> {
    match s.trim() {
        "" | "symbolic" | "w" => Ok(None),
        v => v.parse().map(Some).map_err(|_| format!("omega must be an integer or \"symbolic\", got {v:?}")),
    }
}

fn show(c: &OmegaPoly, omega: &Option<BigInt>) -> String {
    match omega {
        None => c.to_string(),
        Some(x) => c.eval(x).to_string(),
    }
}

fn show_series(s: &TSeries, omega: &Option<BigInt>) -> Vec<String> {
    s.coeffs().iter().map(|c| show(c, omega)).collect()
}

/// Banded and unbounded counts side by side; `family` is `motzkin` or `schroder`
/// (compressed, so coefficient `n` counts paths of length `2n`).
pub fn banded_series_json(family: &str, k: u32, omega: &str, terms: u32) -> Result<String, String> {
    let omega = parse_omega(omega)?;
    if !(1..=MAX_BAND).contains(&k) {
        return Err(format!("band height k must be between 1 and {MAX_BAND}"));
    }
    if !(1..=MAX_TERMS).contains(&terms) {
        return Err(format!("terms must be between 1 and {MAX_TERMS}"));
    }
    let (k, order) = (k as usize, terms as usize - 1);
    let (banded, unbounded) = match family {
        "motzkin" => {
            (banded_motzkin_gf(k).map_err(|e| e.to_string())?.gf.expand(order), motzkin_series(order))
        }
        "schroder" => {
            let gf = banded_w_gf(k, 2).map_err(|e| e.to_string())?.compress().expect("even step");
            let full = w_series(2, 2 * order).map_err(|e| e.to_string())?;
            let compressed = TSeries::new(full.coeffs().iter().step_by(2).cloned().collect(), order);
            (gf.expand(order), compressed)
        }
        other => return Err(format!("unknown family {other:?}; expected motzkin or schroder")),
    };
    Ok(json!({
        "family": family,
        "k": k,
        "banded": show_series(&banded, &omega),
        "unbounded": show_series(&unbounded, &omega),
    })
    .to_string())
}

/// Rows of a triangular matrix; `kind` is one of `motzkin`, `motzkin-inverse`,
/// `schroder`, `schroder-inverse`.
pub fn triangle_json(kind: &str, n: u32, omega: &str) -> Result<String, String> {
    let omega = parse_omega(omega)?;
    if !(1..=MAX_DIM).contains(&n) {
        return Err(format!("n must be between 1 and {MAX_DIM}"));
    }
    let n = n as usize;
    let m = match kind {
        "motzkin" => motzkin_matrix(n),
        "motzkin-inverse" => inverse_motzkin_matrix(n),
        "schroder" => schroder_matrix_compressed(n),
        "schroder-inverse" => inverse_schroder_matrix(n),
        other => return Err(format!("unknown matrix {other:?}")),
    };
    let rows: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|c| show(c, &omega)).collect()).collect();
    Ok(json!({ "kind": kind, "rows": rows }).to_string())
}

/// `det(alpha M_{i+j} + beta M_{i+j+1})` for dimensions `1..=n`, by elimination
/// and by the closed form.
pub fn hankel_json(alpha: i32, beta: i32, omega: &str, n: u32) -> Result<String, String> {
    let omega = parse_omega(omega)?;
    if !(1..=MAX_DIM).contains(&n) {
        return Err(format!("n must be between 1 and {MAX_DIM}"));
    }
    let (a, b) = (OmegaPoly::constant(alpha), OmegaPoly::constant(beta));
    let mut rows = Vec::new();
    for dim in 1..=n as usize {
        let m = hankel_matrix(&HankelSpec::combination(a.clone(), b.clone(), dim)).map_err(|e| e.to_string())?;
        let m = match &omega {
            None => m,
            Some(x) => m.specialize(x),
        };
        let det = det_fraction_free(&m).map_err(|e| e.to_string())?;
        let closed = shifted_hankel_closed(dim, &a, &b);
        let closed = match &omega {
            None => closed,
            Some(x) => closed.specialize(x),
        };
        rows.push(json!({ "n": dim, "determinant": det.to_string(), "closed_form": closed.to_string(), "agree": det == closed }));
    }
    Ok(json!({ "alpha": alpha, "beta": beta, "rows": rows }).to_string())
}

#[wasm_bindgen]
pub fn banded_series(family: &str, k: u32, omega: &str, terms: u32) -> Result<String, JsError> {
    banded_series_json(family, k, omega, terms).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn triangle(kind: &str, n: u32, omega: &str) -> Result<String, JsError> {
    triangle_json(kind, n, omega).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hankel(alpha: i32, beta: i32, omega: &str, n: u32) -> Result<String, JsError> {
    hankel_json(alpha, beta, omega, n).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use serde_json::Value;

    use super::*;

    fn parse(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn banded_motzkin() {
        let v = parse(banded_series_json("motzkin", 4, "1", 10));
        assert_eq!(v["banded"], json!(["1", "1", "2", "4", "9", "21", "51", "127", "322", "826"]));
        assert_eq!(v["unbounded"][9], "835");
        let v = parse(banded_series_json("motzkin", 2, "symbolic", 3));
        assert_eq!(v["banded"], json!(["1", "w", "1 + w^2"]));
    }

    #[test]
    fn banded_schroder() {
        let v = parse(banded_series_json("schroder", 4, "1", 7));
        assert_eq!(v["banded"], json!(["1", "2", "6", "22", "89", "377", "1630"]));
        assert_eq!(v["unbounded"], json!(["1", "2", "6", "22", "90", "394", "1806"]));
    }

    #[test]
    fn triangles() {
        let v = parse(triangle_json("motzkin-inverse", 3, "1"));
        assert_eq!(v["rows"], json!([["1"], ["-1", "1"], ["0", "-2", "1"]]));
        let v = parse(triangle_json("schroder", 2, "w"));
        assert_eq!(v["rows"], json!([["1"], ["1 + w", "1"]]));
    }

    #[test]
    fn hankel_rows() {
        let v = parse(hankel_json(1, 1, "1", 6));
        let dets: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["determinant"].as_str().unwrap()).collect();
        assert_eq!(dets, ["2", "3", "4", "5", "6", "7"]);
        assert!(v["rows"].as_array().unwrap().iter().all(|r| r["agree"] == true));
    }

    #[test]
    fn bad_input() {
        assert!(banded_series_json("dyck", 2, "1", 5).is_err());
        assert!(banded_series_json("motzkin", 0, "1", 5).is_err());
        assert!(banded_series_json("motzkin", 2, "x", 5).is_err());
        assert!(triangle_json("grand", 3, "1").is_err());
        assert!(hankel_json(0, 0, "1", 3).is_err());
        assert!(hankel_json(1, 0, "1", 0).is_err());
    }
}
