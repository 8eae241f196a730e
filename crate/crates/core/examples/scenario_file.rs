//! Declarative scenarios: constructions plus expected values, checked exactly.

use gradedinv::report::render_scenario;
use gradedinv::scenario::{run_scenario, Scenario};

const SCENARIO: &str = r#"{
  "name": "weighted-line",
  "window": [-10, 10],
  "construction": {
    "R": {"kind": "ring", "divisor": {"ambient_dim": 1, "terms": [
      {"name": "P", "degree": 1, "coeff": "1/2"},
      {"name": "Q", "degree": 1, "coeff": "1/2"},
      {"name": "S", "degree": 1, "coeff": "1/2"}]}},
    "C": {"kind": "cover", "divisor": {"ambient_dim": 1, "terms": [
      {"name": "P", "degree": 1, "coeff": "1/2"},
      {"name": "Q", "degree": 1, "coeff": "1/2"},
      {"name": "S", "degree": 1, "coeff": "1/2"}]}}
  },
  "expectations": [
    {"quantity": "R.hilbert@2", "expected": 4, "provenance": "derived"},
    {"quantity": "R.a_invariant", "expected": {"op": "lt", "value": 0}, "provenance": "trivial"},
    {"quantity": "C.quasi_gorenstein", "expected": true, "provenance": "derived"}
  ]
}"#;

fn main() -> gradedinv::Result<()> {
    let report = run_scenario(&Scenario::parse(SCENARIO)?);
    print!("{}", render_scenario(&report));
    Ok(())
}
