//! Computed fixture documents and comparison against their versioned copies.
//!
//! Four fixtures are kept under `fixtures/` (also embedded in the binary):
//! the E6 involution table, the A-type candidate lists, the four-variety
//! classification, and the full deficient catalog up to rank 8. `classify`
//! recomputes each document and diffs it line by line.

use std::fmt::Write as _;

use severi_core::roots::{
    self, build, classify_all, deficient_catalog, lambda_string, nonsimple_solve, TypeLabel,
};

pub const E6_TABLE: &str = include_str!("../fixtures/e6_table.txt");
pub const AN_CANDIDATES: &str = include_str!("../fixtures/an_candidates.txt");
pub const FOUR_VARIETIES: &str = include_str!("../fixtures/four_varieties.txt");
pub const DEFICIENT_CATALOG: &str = include_str!("../fixtures/deficient_catalog.txt");

pub const FIXTURE_NAMES: [&str; 4] = [
    "e6-table",
    "an-candidates",
    "four-varieties",
    "deficient-catalog",
];

/// The E6 rows `omega_i - w0(omega_i)` in Bourbaki coordinates.
///
/// Rows 3 and 5 coincide: nodes 3 and 5 are swapped by the diagram
/// involution. (The table is often labelled with a plus sign; the values
/// listed are those of `omega_i - w0(omega_i)`, which is the combination
/// the witness equation uses.)
pub fn e6_table_text() -> String {
    let rs = build(TypeLabel::E, 6).expect("E6 exists");
    let mut out = String::new();
    out.push_str("# E6: omega_i - w0(omega_i) in Bourbaki coordinates of R^8\n");
    for i in 0..6 {
        let mut coeffs = vec![0u32; 6];
        coeffs[i] = 1;
        let lam = rs.weight(&coeffs);
        let delta = rs.delta(&lam);
        let cells: Vec<String> = delta.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "{} -> ({})", i + 1, cells.join(", "));
    }
    out
}

/// Candidate highest weights for the A-type systems, ranks 2 through 8.
pub fn an_candidates_text() -> String {
    let mut out = String::new();
    out.push_str("# A_n dominant weights with lambda - w0(lambda) a sum of two positive roots\n");
    for n in 2..=8usize {
        let rs = build(TypeLabel::A, n).expect("A_n exists");
        let mut names: Vec<String> = rs
            .candidate_weights()
            .into_iter()
            .map(|r| lambda_string(&r.coeffs))
            .collect();
        names.sort();
        let _ = writeln!(out, "A{}: {}", n, names.join(", "));
    }
    out
}

/// The final four-variety list.
pub fn four_varieties_text() -> String {
    let mut out = String::new();
    out.push_str("# the four Severi varieties: m = 3n/2 + 2 with degenerate secant\n");
    for e in classify_all(8) {
        let _ = writeln!(
            out,
            "n={} m={} system={} lambda={} :: {}",
            e.n, e.m, e.system, e.lambda, e.name
        );
    }
    out
}

/// Every deficient-secant candidate up to rank 8, with its verdict.
pub fn deficient_catalog_text() -> String {
    let mut out = String::new();
    out.push_str("# homogeneous orbits with dim Sec(X) < 2 dim X + 1, simple types up to rank 8\n");
    for r in deficient_catalog(8) {
        let _ = writeln!(
            out,
            "{} | lambda {} | n={} dimV={} m={} | {} | {}",
            r.system(),
            r.lambda_string(),
            r.orbit_dim,
            r.weyl_dim,
            r.m,
            r.identification,
            r.verdict,
        );
    }
    out.push_str("# reducible groups (positivity excludes three or more factors):\n");
    for r in nonsimple_solve() {
        let _ = writeln!(
            out,
            "n1={} d1={} n2={} d2={} | {} | {} | {}",
            r.n1,
            r.delta1,
            r.n2,
            r.delta2,
            r.name,
            if r.accepted { "accepted" } else { "rejected" },
            r.reason,
        );
    }
    out
}

pub fn computed_fixture(name: &str) -> Option<String> {
    match name {
        "e6-table" => Some(e6_table_text()),
        "an-candidates" => Some(an_candidates_text()),
        "four-varieties" => Some(four_varieties_text()),
        "deficient-catalog" => Some(deficient_catalog_text()),
        _ => None,
    }
}

pub fn embedded_fixture(name: &str) -> Option<&'static str> {
    match name {
        "e6-table" => Some(E6_TABLE),
        "an-candidates" => Some(AN_CANDIDATES),
        "four-varieties" => Some(FOUR_VARIETIES),
        "deficient-catalog" => Some(DEFICIENT_CATALOG),
        _ => None,
    }
}

/// Line diff; `None` means the documents match.
pub fn diff(expected: &str, got: &str) -> Option<String> {
    if expected == got {
        return None;
    }
    let mut out = String::new();
    let e: Vec<&str> = expected.lines().collect();
    let g: Vec<&str> = got.lines().collect();
    for i in 0..e.len().max(g.len()) {
        let le = e.get(i).copied().unwrap_or("<missing>");
        let lg = g.get(i).copied().unwrap_or("<missing>");
        if le != lg {
            let _ = writeln!(out, "  line {}:", i + 1);
            let _ = writeln!(out, "    expected: {le}");
            let _ = writeln!(out, "    computed: {lg}");
        }
    }
    Some(out)
}

/// The per-type candidate set restricted to chosen labels (for `--types`).
pub fn catalog_for_types(max_rank: usize, labels: &[TypeLabel]) -> Vec<roots::CandidateReport> {
    roots::all_systems(max_rank)
        .into_iter()
        .filter(|(l, _)| labels.contains(l))
        .flat_map(|(l, r)| build(l, r).expect("valid system").candidate_weights())
        .collect()
}

pub fn parse_types(selector: &str) -> Result<Vec<TypeLabel>, String> {
    if selector == "all" {
        return Ok(vec![
            TypeLabel::A,
            TypeLabel::B,
            TypeLabel::C,
            TypeLabel::D,
            TypeLabel::E,
            TypeLabel::F,
            TypeLabel::G,
        ]);
    }
    selector
        .split(',')
        .map(|s| match s.trim() {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            "E" | "e" => Ok(TypeLabel::E),
            "F" | "f" => Ok(TypeLabel::F),
            "G" | "g" => Ok(TypeLabel::G),
            other => Err(format!("unknown type '{other}'")),
        })
        .collect()
}
