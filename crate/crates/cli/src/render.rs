//! Text rendering, derived from the canonical JSON values.

use serde_json::Value;

fn as_str(v: &Value) -> &str {
    v.as_str().unwrap_or("?")
}

pub fn lazard_table(value: &Value) {
    let trunc = &value["trunc"];
    println!("truncated universal coefficient ring, degrees 0..-{trunc}");
    println!("{:>7}  {:>4}  {:<8}  basis", "degree", "rank", "torsion");
    for degree in value["degrees"].as_array().into_iter().flatten() {
        let torsion = degree["torsion"].as_array().map(Vec::len).unwrap_or(0);
        let torsion = if torsion == 0 {
            "-".to_string()
        } else {
            degree["torsion"].to_string()
        };
        let basis: Vec<&str> = degree["basis"]
            .as_array()
            .into_iter()
            .flatten()
            .map(as_str)
            .collect();
        println!(
            "{:>7}  {:>4}  {:<8}  {}",
            degree["degree"].to_string(),
            degree["rank"].to_string(),
            torsion,
            basis.join(", ")
        );
    }
}

pub fn decomposition_table(parts: &Value) {
    for part in parts.as_array().into_iter().flatten() {
        let subset: Vec<String> = part["subset"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|v| v.to_string())
            .collect();
        println!("G_{{{}}} = {}", subset.join(","), as_str(&part["display"]));
    }
}

pub fn divisor_report(value: &Value) {
    let dims = &value["config"]["dims"];
    println!("ambient dims {dims}");
    for comp in value["config"]["components"].as_array().into_iter().flatten() {
        println!(
            "  component: multidegree {} multiplicity {}",
            comp["multidegree"], comp["multiplicity"]
        );
    }
    for contribution in value["contributions"].as_array().into_iter().flatten() {
        let subset: Vec<String> = contribution["subset"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|v| v.to_string())
            .collect();
        println!(
            "I = {{{}}}: {}",
            subset.join(","),
            as_str(&contribution["display"])
        );
    }
    println!("total    = {}", as_str(&value["total_display"]));
    println!("expected = {}", as_str(&value["expected_display"]));
    println!("divisor class verified: {}", value["verified"]);
    if let Some(rec) = value.get("recursion") {
        println!("recursion verified: {}", rec["verified"]);
    }
}

pub fn triangle_report(value: &Value) {
    println!(
        "X: complete intersection of multidegrees {} in dims {}",
        value["degrees"], value["ambient"]["dims"]
    );
    println!("dim X = {}", value["dim"]);
    println!(
        "[X]_CK = (level {}, {})",
        value["ck"]["level"],
        as_str(&value["ck"]["display"])
    );
    for check in value["checks"].as_array().into_iter().flatten() {
        let verdict = if check["pass"].as_bool() == Some(true) {
            "ok"
        } else {
            "FAIL"
        };
        println!(
            "{}: {}  vs  {}  [{}]",
            as_str(&check["identity"]),
            as_str(&check["lhs"]),
            as_str(&check["rhs"]),
            verdict
        );
    }
    println!("triangle verified: {}", value["verified"]);
}
