//! Browser bindings for the interactive demo page: tableau enumeration,
//! the determinantal basis of a component, and Hilbert polynomials, all
//! returned as JSON strings for a plain JavaScript front-end.

use quasinv::combinatorics::{standard_hook_tableaux, HookShape, HookTableau};
use quasinv::hilbert::{hilbert_from_counting, hilbert_full, hilbert_gamma};
use quasinv::polyring::set_term_cap;
use quasinv::quasi::basis_for_component;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

// Keep single-page interactions snappy and memory-bounded.
const N_CAP: usize = 7;
const M_CAP: u32 = 2;
const TERM_CAP: usize = 200_000;

fn err(message: impl Into<String>) -> String {
    json!({ "error": message.into() }).to_string()
}

fn checked_shape(n: usize, k: usize) -> Result<HookShape, String> {
    if n > N_CAP {
        return Err(format!("n is capped at {N_CAP} in the demo"));
    }
    HookShape::new(n, k).map_err(|e| e.to_string())
}

fn parse_column(shape: HookShape, column_csv: &str) -> Result<HookTableau, String> {
    let column: Vec<u32> = if column_csv.trim().is_empty() {
        (1..=shape.k() as u32).collect()
    } else {
        column_csv
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?
    };
    if column.len() != shape.k() {
        return Err(format!("column needs exactly k = {} entries", shape.k()));
    }
    HookTableau::standard(shape.n(), column).map_err(|e| e.to_string())
}

/// All standard tableaux of the hook with `n` boxes and column length `k`.
#[wasm_bindgen]
pub fn tableaux_json(n: usize, k: usize) -> String {
    let shape = match checked_shape(n, k) {
        Ok(shape) => shape,
        Err(e) => return err(e),
    };
    let tableaux = standard_hook_tableaux(shape);
    let items: Vec<_> = tableaux
        .iter()
        .map(|t| {
            json!({
                "column": t.column_entries(),
                "row": t.row_entries(),
                "notation": t.to_string(),
            })
        })
        .collect();
    json!({ "count": items.len(), "tableaux": items }).to_string()
}

/// The determinantal basis of the component of `T(1, s_2, ..., s_k)` (the
/// column entries come as a comma list; empty means `1..k`), with degrees
/// and rendered polynomials.
#[wasm_bindgen]
pub fn basis_json(n: usize, k: usize, m: u32, column_csv: &str) -> String {
    if m > M_CAP {
        return err(format!("m is capped at {M_CAP} in the demo"));
    }
    let shape = match checked_shape(n, k) {
        Ok(shape) => shape,
        Err(e) => return err(e),
    };
    let tableau = match parse_column(shape, column_csv) {
        Ok(t) => t,
        Err(e) => return err(e),
    };
    set_term_cap(Some(TERM_CAP));
    let outcome = std::panic::catch_unwind(|| basis_for_component(&tableau, m));
    set_term_cap(None);
    let basis = match outcome {
        Ok(Ok(basis)) => basis,
        Ok(Err(e)) => return err(e.to_string()),
        Err(_) => return err("computation exceeded the demo term cap"),
    };
    let members: Vec<_> = basis
        .iter()
        .map(|b| {
            json!({
                "mu": b.mu.parts(),
                "degree": b.degree(),
                "terms": b.poly.num_terms(),
                "text": b.poly.to_string(),
            })
        })
        .collect();
    json!({
        "tableau": tableau.to_string(),
        "m": m,
        "count": members.len(),
        "members": members,
    })
    .to_string()
}

/// The component Hilbert polynomial in closed and counting form plus the
/// full-ring series, ready for a coefficient bar chart.
#[wasm_bindgen]
pub fn hilbert_json(n: usize, k: usize, m: u32) -> String {
    if m > M_CAP {
        return err(format!("m is capped at {M_CAP} in the demo"));
    }
    let shape = match checked_shape(n, k) {
        Ok(shape) => shape,
        Err(e) => return err(e),
    };
    let closed = hilbert_gamma(shape.n(), shape.k(), m as usize);
    let counting = hilbert_from_counting(shape.n(), shape.k(), m as usize);
    let full = hilbert_full(shape.n(), m as usize);
    json!({
        "closed": { "offset": closed.min_degree().unwrap_or(0), "coeffs": closed.dense_coeffs() },
        "counting": { "offset": counting.min_degree().unwrap_or(0), "coeffs": counting.dense_coeffs() },
        "forms_equal": closed == counting,
        "full": { "offset": full.min_degree().unwrap_or(0), "coeffs": full.dense_coeffs() },
        "full_total": full.total(),
        "display": closed.to_string(),
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableaux_payload() {
        let value: serde_json::Value = serde_json::from_str(&tableaux_json(6, 3)).unwrap();
        assert_eq!(value["count"], 10);
        assert_eq!(value["tableaux"][1]["notation"], "D(1,2,4;1,3,5,6)");
    }

    #[test]
    fn basis_payload() {
        let value: serde_json::Value = serde_json::from_str(&basis_json(4, 3, 1, "")).unwrap();
        assert_eq!(value["count"], 3);
        assert_eq!(value["members"][0]["degree"], 11);
        assert!(value["members"][0]["text"].as_str().unwrap().contains("x1"));
    }

    #[test]
    fn hilbert_payload() {
        let value: serde_json::Value = serde_json::from_str(&hilbert_json(4, 3, 1)).unwrap();
        assert_eq!(value["closed"]["offset"], 11);
        assert_eq!(value["forms_equal"], true);
        assert_eq!(value["full_total"], 24);
    }

    #[test]
    fn caps_are_reported() {
        let value: serde_json::Value = serde_json::from_str(&tableaux_json(9, 2)).unwrap();
        assert!(value["error"].as_str().unwrap().contains("capped"));
        let value: serde_json::Value = serde_json::from_str(&basis_json(4, 2, 3, "")).unwrap();
        assert!(value["error"].as_str().unwrap().contains("capped"));
    }

    #[test]
    fn bad_column_is_an_error() {
        let value: serde_json::Value = serde_json::from_str(&basis_json(4, 3, 0, "1,2")).unwrap();
        assert!(value["error"].as_str().unwrap().contains("entries"));
    }
}
