//! The eight reproduction criteria, one test each. Every test prints a
//! single PASS/FAIL line.

use quintic_core::verify::{self, Check};

fn report(c: Check) {
    println!("{}", c.line());
    assert!(c.pass, "{}", c.detail);
}

#[test]
fn ac1_wahl_calculus() {
    report(verify::wahl_calculus());
}

#[test]
fn ac2_discrepancies() {
    report(verify::discrepancy_check());
}

#[test]
fn ac3_picard_numbers() {
    report(verify::picard_numbers());
}

#[test]
fn ac4_weight_tables() {
    report(verify::weight_tables());
}

#[test]
fn ac5_minuscule_table() {
    report(verify::minuscule_weights());
}

#[test]
fn ac6_flop_reduction() {
    report(verify::flop_reduction());
}

#[test]
fn ac7_local_intersections() {
    report(verify::local_intersections());
}

#[test]
fn ac8_dimension_counts() {
    report(verify::dimension_counts());
}
