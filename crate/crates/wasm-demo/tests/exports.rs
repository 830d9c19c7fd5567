use serde_json::Value;
use zeeman_wasm::{cm_report, resolution_report, zeeman_page};

const TRIANGLE: &str = "simplicial\nvertices 3\nfacet 1 2\nfacet 1 3\nfacet 2 3\n";
const BOWTIE: &str = "simplicial\nvertices 5\nfacet 1 2 3\nfacet 3 4 5\n";

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn cm_report_gives_verdict_and_table() {
    let v = parse(cm_report(TRIANGLE, "q"));
    assert_eq!(v["cohen_macaulay"], true);
    assert_eq!(v["local_cohomology"].as_array().unwrap().len(), 7);
    let v = parse(cm_report(BOWTIE, "p:2"));
    assert_eq!(v["cohen_macaulay"], false);
    assert_eq!(v["witness"]["label"], "{3}");
}

#[test]
fn pages_and_degrees() {
    let v = parse(zeeman_page(TRIANGLE, "q", "1", "0"));
    assert_eq!(v["concentration"]["concentrated"], true);
    let v = parse(zeeman_page(TRIANGLE, "q", "inf", "1,1,0"));
    assert!(v["concentration"].is_null());
    assert_eq!(v["euler"], 1);
    let v = parse(zeeman_page(TRIANGLE, "q", "5", "0"));
    assert!(v["error"].as_str().unwrap().contains("unsupported page"));
}

#[test]
fn resolutions_and_refusals() {
    let v = parse(resolution_report(TRIANGLE, "p:3"));
    assert_eq!(v["exact"], true);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["betti"]["linear"], true);
    let v = parse(resolution_report(BOWTIE, "q"));
    assert_eq!(v["refused"]["degree"], 2);
    assert_eq!(v["betti"]["linear"], false);
}

#[test]
fn errors_are_json() {
    let v = parse(cm_report("simplicial\nvertices 2\nfacet 3\n", "q"));
    assert_eq!(v["error"], "line 3: vertex 3 outside 1..=2");
    let v = parse(cm_report(TRIANGLE, "p:6"));
    assert!(v["error"].is_string());
}
