//! Interchange documents and DOT export.
//!
//! Coefficients are serialized as decimal strings so documents stay
//! exact at any magnitude; names are the canonical display strings and
//! parse back losslessly. Deserialization re-validates everything and
//! rejects broken documents with a located diagnostic.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cell::{Sign, SteinerCell};
use crate::chain::Chain;
use crate::computad::Computad;
use crate::error::{Error, Result};
use crate::name::GenName;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LevelDoc {
    pub minus: BTreeMap<String, String>,
    pub plus: BTreeMap<String, String>,
}

pub type CellDoc = Vec<LevelDoc>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeneratorDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus: Option<CellDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plus: Option<CellDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComputadDocument {
    pub format_version: u32,
    /// Per dimension, in insertion order.
    pub generators: Vec<Vec<GeneratorDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

fn chain_doc(c: &Chain) -> BTreeMap<String, String> {
    c.iter().map(|(g, k)| (g.to_string(), k.to_string())).collect()
}

fn cell_doc(cell: &SteinerCell) -> CellDoc {
    cell.levels()
        .iter()
        .map(|(m, p)| LevelDoc {
            minus: chain_doc(m),
            plus: chain_doc(p),
        })
        .collect()
}

pub fn to_document(
    x: &Computad,
    basepoint: Option<&GenName>,
    provenance: Option<&str>,
) -> ComputadDocument {
    let mut generators = Vec::new();
    for d in 0..=x.max_dim() {
        let mut level = Vec::new();
        for g in x.generators(d) {
            let (minus, plus) = if d == 0 {
                (None, None)
            } else {
                (
                    Some(cell_doc(x.border(g, Sign::Minus).unwrap())),
                    Some(cell_doc(x.border(g, Sign::Plus).unwrap())),
                )
            };
            level.push(GeneratorDoc {
                name: g.to_string(),
                minus,
                plus,
            });
        }
        generators.push(level);
    }
    if x.is_empty() {
        generators.clear();
    }
    ComputadDocument {
        format_version: FORMAT_VERSION,
        generators,
        basepoint: basepoint.map(|b| b.to_string()),
        provenance: provenance.map(|p| p.to_string()),
    }
}

fn parse_chain(dim: usize, doc: &BTreeMap<String, String>) -> Result<Chain> {
    let mut c = Chain::zero(dim);
    for (name, coeff) in doc {
        let g: GenName = name.parse()?;
        let k: BigInt = coeff
            .parse()
            .map_err(|_| Error::InvalidDocument(format!("bad coefficient `{coeff}` for `{name}`")))?;
        c.add_term(g, k);
    }
    Ok(c)
}

fn parse_cell(expect_dim: usize, doc: &CellDoc) -> Result<SteinerCell> {
    if doc.len() != expect_dim + 1 {
        return Err(Error::InvalidDocument(format!(
            "cell has {} levels, expected {}",
            doc.len(),
            expect_dim + 1
        )));
    }
    let levels = doc
        .iter()
        .enumerate()
        .map(|(k, l)| Ok((parse_chain(k, &l.minus)?, parse_chain(k, &l.plus)?)))
        .collect::<Result<Vec<_>>>()?;
    SteinerCell::from_levels(levels)
}

pub fn from_document(doc: &ComputadDocument) -> Result<(Computad, Option<GenName>)> {
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::InvalidDocument(format!(
            "unsupported format_version {}",
            doc.format_version
        )));
    }
    let mut x = Computad::new();
    for (d, level) in doc.generators.iter().enumerate() {
        for gen in level {
            let name: GenName = gen.name.parse()?;
            if d == 0 {
                if gen.minus.is_some() || gen.plus.is_some() {
                    return Err(Error::InvalidDocument(format!(
                        "0-generator `{}` carries border cells",
                        gen.name
                    )));
                }
                x.add_point(name)?;
                continue;
            }
            let (Some(minus), Some(plus)) = (&gen.minus, &gen.plus) else {
                return Err(Error::InvalidDocument(format!(
                    "generator `{}` of dimension {d} is missing a border cell",
                    gen.name
                )));
            };
            x.add_generator(name, parse_cell(d - 1, minus)?, parse_cell(d - 1, plus)?)?;
        }
    }
    let report = x.validate();
    if !report.is_ok() {
        return Err(Error::InvalidDocument(report.to_string()));
    }
    let basepoint = match &doc.basepoint {
        Some(b) => {
            let name: GenName = b.parse()?;
            if x.dim_of(&name)? != 0 {
                return Err(Error::InvalidDocument(format!(
                    "basepoint `{b}` is not a 0-generator"
                )));
            }
            Some(name)
        }
        None => None,
    };
    Ok((x, basepoint))
}

pub fn to_json(x: &Computad, basepoint: Option<&GenName>, provenance: Option<&str>) -> String {
    serde_json::to_string_pretty(&to_document(x, basepoint, provenance)).expect("serializable")
}

pub fn from_json(s: &str) -> Result<(Computad, Option<GenName>)> {
    let doc: ComputadDocument =
        serde_json::from_str(s).map_err(|e| Error::InvalidDocument(e.to_string()))?;
    from_document(&doc)
}

/// Generator incidence as a DOT digraph: one node per generator up to
/// `max_dim`, an edge from each generator to every name in its border
/// chains, labeled with the signed multiplicity.
pub fn export_dot(x: &Computad, max_dim: usize) -> String {
    let mut out = String::from("digraph computad {\n");
    for d in 0..=max_dim.min(x.max_dim()) {
        for g in x.generators(d) {
            let _ = writeln!(out, "  \"{g}\" [dim={d}];");
        }
    }
    for d in 1..=max_dim.min(x.max_dim()) {
        for g in x.generators(d) {
            for sign in [Sign::Minus, Sign::Plus] {
                let chain = x.border_chain(g, sign).unwrap();
                for (h, k) in chain.iter() {
                    let _ = writeln!(
                        out,
                        "  \"{g}\" -> \"{h}\" [label=\"{}{k}\"];",
                        sign.symbol()
                    );
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;
    use crate::constructions::oriental;

    #[test]
    fn json_round_trip_preserves_everything() {
        for name in ["interval", "r_matrix", "monoid", "frobenius_special", "cube3"] {
            let entry = build(name).unwrap();
            let json = to_json(&entry.computad, entry.basepoint.as_ref(), None);
            let (back, basepoint) = from_json(&json).unwrap();
            assert_eq!(
                to_document(&back, basepoint.as_ref(), None),
                to_document(&entry.computad, entry.basepoint.as_ref(), None),
                "round trip of {name}"
            );
            assert_eq!(basepoint, entry.basepoint, "basepoint of {name}");
            assert_eq!(
                to_json(&back, basepoint.as_ref(), None),
                json,
                "re-serialization of {name}"
            );
        }
    }

    #[test]
    fn broken_documents_are_rejected_with_a_diagnostic() {
        let entry = build("interval").unwrap();
        let json = to_json(&entry.computad, None, None);
        let swapped = json.replace("\"0\": \"1\"", "\"0\": \"2\"");
        assert_ne!(swapped, json);
        let err = from_json(&swapped).unwrap_err();
        assert!(
            matches!(err, Error::InvalidDocument(_) | Error::InvalidCell(_)),
            "got {err}"
        );
        assert!(err.to_string().contains("augmentation"), "got {err}");

        let bad_version = json.replace("\"format_version\": 1", "\"format_version\": 99");
        assert!(from_json(&bad_version).is_err());
    }

    #[test]
    fn dot_export_lists_one_node_per_generator() {
        let o2 = oriental(2).unwrap();
        let dot = export_dot(&o2, 10);
        let nodes = dot.lines().filter(|l| l.contains("[dim=")).count();
        assert_eq!(nodes, 7);
        assert!(dot.starts_with("digraph"));
        let truncated = export_dot(&o2, 1);
        assert_eq!(truncated.lines().filter(|l| l.contains("[dim=")).count(), 6);
    }
}
