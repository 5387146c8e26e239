mod common;

use std::fs;

use sqfree::document;
use sqfree::verification::check_well_formed;

#[test]
fn transcripts_match() {
    let cases = common::cases();
    assert_eq!(cases.len(), 20);
    let failures: Vec<String> = cases.iter().filter_map(|c| common::check(c).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_exit_class_is_covered() {
    let codes: Vec<i32> = common::cases()
        .iter()
        .map(|c| common::exit_code(&fs::read_to_string(&c.expected).unwrap()))
        .collect();
    for code in 0..=3 {
        assert!(codes.contains(&code), "no golden case exits with {code}");
    }
}

#[test]
fn emitted_documents_round_trip_and_verify() {
    for case in common::cases() {
        let text = fs::read_to_string(&case.expected).unwrap();
        if common::exit_code(&text) != 0 || !matches!(case.args[0].as_str(), "factor" | "convert") {
            continue;
        }
        let json = text
            .strip_prefix("exit: 0\nstdout:\n")
            .and_then(|t| t.strip_suffix("stderr:\n"))
            .expect("document transcript");
        let f = document::from_json(json).unwrap();
        assert_eq!(document::to_json(&f), json, "{}", case.name);
        assert!(check_well_formed(&f).well_formed, "{}", case.name);
    }
}
