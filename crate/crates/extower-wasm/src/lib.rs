//! WebAssembly bindings for the extower demo page: root systems, bracket lookup and verification suites.
//!
//! Every export returns a JSON string. Errors surface as JavaScript exceptions.

use serde_json::json;
use wasm_bindgen::prelude::*;

use extower::algebras::Algebra;
use extower::roots::is_positive;
use extower::verify::{dynkin_of, root_system, run, Options, Suite};

fn algebra(name: &str) -> Result<Algebra, String> {
    name.parse().map_err(|e: extower::Error| e.to_string())
}

fn texts(v: &[extower::exact::GaussRat]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Root system summary: type, diagram, Cartan matrix, simple and positive roots.
pub fn roots_json(name: &str) -> Result<String, String> {
    let alg = algebra(name)?;
    let rs = root_system(alg)?;
    let (cartan, diagram) = dynkin_of(alg)?;
    let simple = rs.simple_roots().map_err(|e| e.to_string())?;
    let positive: Vec<Vec<String>> = rs
        .roots
        .iter()
        .filter(|r| is_positive(&r.values))
        .map(|r| texts(&r.values))
        .collect();
    Ok(json!({
        "algebra": alg.name(),
        "dim": rs.dim,
        "rank": rs.rank,
        "root_count": rs.roots.len(),
        "type": diagram.label,
        "diagram": diagram.ascii,
        "cartan_matrix": cartan,
        "simple_roots": simple.iter().map(|s| texts(s)).collect::<Vec<_>>(),
        "positive_roots": positive,
    })
    .to_string())
}

/// Basis names and the bracket `[e_i, e_j]` written in them.
pub fn bracket_json(name: &str, i: usize, j: usize) -> Result<String, String> {
    let d = algebra(name)?.data();
    let n = d.dim();
    if i >= n || j >= n {
        return Err(format!("basis index out of range 0..{n}"));
    }
    Ok(json!({
        "basis": d.basis,
        "left": d.basis[i],
        "right": d.basis[j],
        "bracket": d.expansion(&d.basis_bracket(i, j)),
    })
    .to_string())
}

/// Verification report for one suite.
pub fn verify_json(suite: &str) -> Result<String, String> {
    let suite: Suite = suite.parse().map_err(|e: extower::Error| e.to_string())?;
    serde_json::to_string(&run(suite, &Options::default())).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn roots(algebra: &str) -> Result<String, JsError> {
    roots_json(algebra).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bracket(algebra: &str, i: usize, j: usize) -> Result<String, JsError> {
    bracket_json(algebra, i, j).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(suite: &str) -> Result<String, JsError> {
    verify_json(suite).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_roots_summary() {
        let v: serde_json::Value = serde_json::from_str(&roots_json("e6r").unwrap()).unwrap();
        assert_eq!(v["type"], "A2");
        assert_eq!(v["root_count"], 6);
        assert_eq!(v["positive_roots"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn f4_bracket_lookup() {
        let v: serde_json::Value =
            serde_json::from_str(&bracket_json("f4r", 0, 1).unwrap()).unwrap();
        assert_eq!(v["bracket"], "-1/2 A3");
        assert!(bracket_json("f4r", 0, 3).is_err());
        assert!(bracket_json("g2", 0, 0).is_err());
    }

    #[test]
    fn f4_suite_passes() {
        let v: serde_json::Value = serde_json::from_str(&verify_json("f4").unwrap()).unwrap();
        assert_eq!(v["totals"]["failed"], 0);
    }
}
