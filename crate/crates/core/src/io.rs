//! JSON interchange and DOT export for lattices.
//!
//! The interchange document is `{"elements": [...], "covers": [[lo, hi],
//! ...]}` over display labels. Strict mode rejects unknown keys and
//! redundant covers; lenient mode ignores unknown keys and drops redundant
//! covers with a warning.

use crate::error::{Error, Result};
use crate::lattice::{BuildOptions, FiniteLattice};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StrictDoc {
    elements: Vec<String>,
    covers: Vec<[String; 2]>,
}

#[derive(Deserialize)]
struct LenientDoc {
    elements: Vec<String>,
    covers: Vec<[String; 2]>,
}

pub fn to_json(l: &FiniteLattice) -> String {
    let doc = StrictDoc {
        elements: l.labels().to_vec(),
        covers: l
            .covers()
            .iter()
            .map(|&(a, b)| [l.label(a).to_string(), l.label(b).to_string()])
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("document serializes")
}

/// Parses the interchange document and builds the lattice; the returned
/// strings are warnings (lenient mode only).
pub fn from_json(src: &str, opts: BuildOptions) -> Result<(FiniteLattice, Vec<String>)> {
    let (elements, covers) = if opts.strict {
        let doc: StrictDoc =
            serde_json::from_str(src).map_err(|e| Error::Format(e.to_string()))?;
        (doc.elements, doc.covers)
    } else {
        let doc: LenientDoc =
            serde_json::from_str(src).map_err(|e| Error::Format(e.to_string()))?;
        (doc.elements, doc.covers)
    };
    let covers: Vec<(String, String)> =
        covers.into_iter().map(|[a, b]| (a, b)).collect();
    FiniteLattice::build_with_options(&elements, &covers, opts)
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram in DOT: one node per element, one edge per cover pair,
/// drawn bottom-up.
pub fn to_dot(l: &FiniteLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..l.size() {
        out.push_str(&format!("  n{x} [label={}];\n", dot_quote(l.label(x))));
    }
    for &(a, b) in l.covers() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, n5};

    #[test]
    fn json_round_trip_preserves_the_lattice() {
        for l in [boolean(3), n5()] {
            let json = to_json(&l);
            let (back, warnings) = from_json(&json, BuildOptions::default()).unwrap();
            assert!(warnings.is_empty());
            assert!(back.same_labeled(&l));
        }
    }

    #[test]
    fn strict_mode_rejects_unknown_keys() {
        let src = r#"{"elements": ["a"], "covers": [], "color": "red"}"#;
        assert!(matches!(
            from_json(src, BuildOptions::default()),
            Err(Error::Format(_))
        ));
        let (l, _) =
            from_json(src, BuildOptions { strict: false, ..BuildOptions::default() })
                .unwrap();
        assert_eq!(l.size(), 1);
    }

    #[test]
    fn lenient_mode_warns_about_redundant_covers() {
        let src = r#"{"elements": ["0", "a", "1"],
                      "covers": [["0","a"], ["a","1"], ["0","1"]]}"#;
        assert!(from_json(src, BuildOptions::default()).is_err());
        let (l, warnings) =
            from_json(src, BuildOptions { strict: false, ..BuildOptions::default() })
                .unwrap();
        assert_eq!(l.size(), 3);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn dot_output_has_a_node_and_edge_per_item() {
        let l = n5();
        let dot = to_dot(&l);
        assert!(dot.contains("rankdir=BT"));
        assert_eq!(dot.matches("label=").count(), l.size());
        assert_eq!(dot.matches(" -> ").count(), l.covers().len());
    }
}
