use apolar_wasm_demo::{complex_json, hilbert_json, perazzo_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn hilbert_in_both_conventions() {
    let dual = parse(hilbert_json("x1^2 + x1*x2 + x2^2", 2, "dual").unwrap());
    let diff = parse(hilbert_json("x1^2 + x1*x2 + x2^2", 2, "diff").unwrap());
    assert_eq!(dual["hilbert"], serde_json::json!([1, 1, 1]));
    assert_eq!(diff["hilbert"], serde_json::json!([1, 2, 1]));
    assert!(hilbert_json("x1", 1, "other").is_err());
    assert!(hilbert_json("x3", 2, "dual").is_err());
}

#[test]
fn face_poset_of_a_square() {
    let v = parse(complex_json("x1*x2", 2).unwrap());
    assert_eq!(v["cells"]["0"], serde_json::json!(["x2", "x1"]));
    assert_eq!(v["cells"]["1"], serde_json::json!(["x1*x2"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn perazzo_explorer() {
    let v = parse(perazzo_json(2, 3).unwrap());
    assert_eq!(v["hilbert"], serde_json::json!([1, 5, 5, 1]));
    assert_eq!(v["h2"], 5);
    assert_eq!(v["polynomial"], "x1*u2^2 + x2*u1*u2 + x3*u1^2");
    assert!(perazzo_json(4, 6).is_err());
}
