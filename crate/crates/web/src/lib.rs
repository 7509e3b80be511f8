//! Browser bindings. Every export takes and returns JSON strings so the page
//! needs no generated type glue beyond wasm-bindgen's string passing.

use betti_core::bounds;
use betti_core::decompose::greedy_decompose;
use betti_core::diagram::{pi_all, pure_diagram, sum_pi, DegreeSequence};
use betti_core::formats::{DecompositionFile, DiagramFile};
use betti_core::verify::total_bound_target;
use betti_core::Rat;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct PureView {
    pi: Vec<Rat>,
    reg: i64,
    sum: Rat,
    /// `2^n + 2^(n-1)`, the total bound for this length.
    target: Rat,
    rows: String,
}

fn parse_degrees(text: &str) -> Result<DegreeSequence, String> {
    let degrees = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .enumerate()
        .map(|(k, s)| s.parse::<i64>().map_err(|_| format!("degree at index {k} ({s:?}) is not an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    DegreeSequence::new(degrees).map_err(|e| e.to_string())
}

/// Herzog-Kuhl numbers and the normalized pure diagram of `degrees`.
#[wasm_bindgen]
pub fn pure(degrees: &str) -> Result<String, String> {
    let d = parse_degrees(degrees)?;
    let diagram = pure_diagram(&d, &Rat::one()).map_err(|e| e.to_string())?;
    let view = PureView {
        pi: pi_all(&d),
        reg: d.regularity(),
        sum: sum_pi(&d),
        target: total_bound_target(d.n()),
        rows: diagram.to_betti_diagram().render_rows(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct DecomposeView {
    ok: bool,
    error: Option<String>,
    decomposition: DecompositionFile,
    rows: String,
}

/// Greedy decomposition of a diagram file. On failure the partial
/// decomposition is returned with `ok: false`.
#[wasm_bindgen]
pub fn decompose(diagram_json: &str) -> Result<String, String> {
    let file = DiagramFile::from_json(diagram_json).map_err(|e| e.to_string())?;
    let b = file.to_diagram().map_err(|e| e.to_string())?;
    let rows = b.render_rows();
    let view = match greedy_decompose(&b) {
        Ok(dec) => DecomposeView {
            ok: true,
            error: None,
            decomposition: DecompositionFile::from_decomposition(&dec),
            rows,
        },
        Err(err) => DecomposeView {
            ok: false,
            error: Some(err.to_string()),
            decomposition: DecompositionFile {
                beta0: err.partial.lambda_sum(),
                summands: DecompositionFile::from_decomposition(&err.partial).summands,
            },
            rows,
        },
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SweepPoint {
    n: i64,
    value: Rat,
    approx: f64,
}

/// `F(a,b,e,n,i)` for `n` in `n_lo..=n_hi`.
#[wasm_bindgen]
pub fn f_sweep(a: i64, b: i64, e: i64, i: i64, n_lo: i64, n_hi: i64) -> Result<String, String> {
    if n_hi < n_lo || n_hi - n_lo > 500 {
        return Err(format!("n range {n_lo}..{n_hi} must be nonempty and at most 500 long"));
    }
    let points = (n_lo..=n_hi)
        .map(|n| {
            let value = bounds::f(a, b, e, n, i).map_err(|e| e.to_string())?;
            Ok(SweepPoint { n, approx: value.to_f64(), value })
        })
        .collect::<Result<Vec<_>, String>>()?;
    serde_json::to_string(&points).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn pure_view() {
        let v: Value = serde_json::from_str(&pure("0, 2, 4, 5").unwrap()).unwrap();
        assert_eq!(v["pi"], serde_json::json!(["1", "10/3", "5", "8/3"]));
        assert_eq!(v["sum"], "12");
        assert_eq!(v["target"], "12");
        assert!(pure("0,2,2").unwrap_err().contains("entry 2"));
        assert!(pure("0,q").unwrap_err().contains("index 1"));
    }

    #[test]
    fn decompose_view() {
        let m = r#"{"entries":[{"i":0,"j":0,"value":"1"},{"i":1,"j":2,"value":"4"},
            {"i":2,"j":3,"value":"2"},{"i":2,"j":4,"value":"3"},{"i":3,"j":5,"value":"2"}]}"#;
        let v: Value = serde_json::from_str(&decompose(m).unwrap()).unwrap();
        assert_eq!(v["ok"], true);
        assert_eq!(v["decomposition"]["summands"][0]["lambda"], "2/5");
        let bad = r#"{"entries":[{"i":0,"j":0,"value":"1"},{"i":1,"j":1,"value":"1"},{"i":2,"j":1,"value":"1"}]}"#;
        let v: Value = serde_json::from_str(&decompose(bad).unwrap()).unwrap();
        assert_eq!(v["ok"], false);
        assert!(decompose("{").is_err());
    }

    #[test]
    fn sweep() {
        let v: Value = serde_json::from_str(&f_sweep(2, 0, 1, 2, 7, 9).unwrap()).unwrap();
        assert_eq!(v[0]["value"], "2");
        assert_eq!(v.as_array().unwrap().len(), 3);
        assert!(f_sweep(2, 0, 1, 2, 9, 7).is_err());
        assert!(f_sweep(1, 0, 1, 2, 7, 9).is_err());
    }
}
