//! WebAssembly bindings for the browser demo. Each export takes plain
//! strings and numbers and returns a JSON document; errors come back as
//! `{"error": ...}` so the page has a single code path.

use eta_forge::eta::eta_in;
use eta_forge::partition::parse_typed;
use eta_forge::tableaux::enumerate_bitableaux;
use eta_forge::weyl::{grassmannian_element, minimal_rank, word_to_tableau};
use eta_forge::TypedPartition;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Inputs larger than this are refused so the page stays responsive.
const MAX_SIZE: u32 = 12;

fn parse(lambda: &str) -> Result<TypedPartition, String> {
    let lam = parse_typed(lambda, None).map_err(|e| e.to_string())?;
    if lam.size() > MAX_SIZE {
        return Err(format!("|λ| = {} is above the demo limit of {MAX_SIZE}", lam.size()));
    }
    Ok(lam)
}

fn finish(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// `H_λ(x_1..x_m; y_1..y_ky)`; `ky` defaults to `k`.
pub fn eta_json(lambda: &str, m: usize, ky: Option<usize>) -> String {
    finish((|| {
        let lam = parse(lambda)?;
        if !(1..=6).contains(&m) {
            return Err("m must be between 1 and 6".into());
        }
        let ky = ky.unwrap_or(lam.k() as usize);
        let h = eta_in(&lam, m, ky).map_err(|e| e.to_string())?;
        Ok(json!({
            "label": format!("H[{lam}]"),
            "text": h.to_string(),
            "polynomial": h.to_json(),
        }))
    })())
}

/// Typed k'-bitableaux of shape `λ` with entries up to `m` and marked
/// entries up to `ky'`.
pub fn bitableaux_json(lambda: &str, m: usize, ky: Option<usize>) -> String {
    finish((|| {
        let lam = parse(lambda)?;
        if !(1..=4).contains(&m) {
            return Err("m must be between 1 and 4".into());
        }
        let ky = ky.unwrap_or(lam.k() as usize);
        let all = enumerate_bitableaux(&lam, m, ky).map_err(|e| e.to_string())?;
        let items: Vec<Value> = all
            .iter()
            .map(|u| json!({ "text": u.to_string(), "n": u.n(), "weight": 1u64 << u.n() }))
            .collect();
        Ok(json!({ "label": lam.to_string(), "count": items.len(), "bitableaux": items }))
    })())
}

/// `w_λ` together with each of its reduced words and the standard tableau
/// the word corresponds to.
pub fn grassmannian_json(lambda: &str) -> String {
    finish((|| {
        let lam = parse(lambda)?;
        let n = minimal_rank(&lam);
        let w = grassmannian_element(&lam, n).map_err(|e| e.to_string())?;
        let empty = TypedPartition::empty(lam.k());
        let words = w.reduced_words();
        if words.len() > 2000 {
            return Err(format!("{} reduced words is too many to list", words.len()));
        }
        let rows = words
            .iter()
            .map(|a| {
                let t = word_to_tableau(a, &lam, &empty).map_err(|e| e.to_string())?;
                let word: String = a.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
                Ok(json!({ "word": word, "tableau": t.to_string() }))
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(json!({
            "label": lam.to_string(),
            "n": n,
            "w": w.to_string(),
            "length": w.length(),
            "words": rows,
        }))
    })())
}

#[wasm_bindgen]
pub fn eta(lambda: &str, m: usize, ky: Option<usize>) -> String {
    eta_json(lambda, m, ky)
}

#[wasm_bindgen]
pub fn bitableaux(lambda: &str, m: usize, ky: Option<usize>) -> String {
    bitableaux_json(lambda, m, ky)
}

#[wasm_bindgen]
pub fn grassmannian(lambda: &str) -> String {
    grassmannian_json(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_out(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn eta_example() {
        let v = parse_out(eta_json("3,1:k=1:type=2", 2, Some(1)));
        assert_eq!(v["text"], "x1^3*x2 + 2*x1^2*x2^2 + x1^2*x2*y1 + x1*x2^3 + x1*x2^2*y1");
    }

    #[test]
    fn bitableau_counts() {
        assert_eq!(parse_out(bitableaux_json("3,1:k=1:type=1", 2, Some(1)))["count"], 13);
        assert_eq!(parse_out(bitableaux_json("3,1:k=1:type=2", 2, Some(1)))["count"], 6);
    }

    #[test]
    fn nine_words() {
        let v = parse_out(grassmannian_json("4,2,1:k=1:type=1"));
        assert_eq!(v["w"], "3,-4,-2,1");
        assert_eq!(v["words"].as_array().unwrap().len(), 9);
        assert_eq!(v["words"][0]["word"], "1 2 0 3 2 0 1");
    }

    #[test]
    fn errors_are_json() {
        assert!(parse_out(eta_json("3,3:k=1", 2, None))["error"].is_string());
        assert!(parse_out(eta_json("3,1:k=1:type=1", 0, None))["error"].is_string());
        assert!(parse_out(grassmannian_json("13:k=1"))["error"].is_string());
    }
}
