//! Structural report for a single poset.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poset::PatternWitness;
use crate::tangle::{altitude, aut_order_of, decompose, view, Part};

use super::format::NamedPoset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViewEntry {
    pub vertex: String,
    pub down: Vec<String>,
    pub codown: Vec<String>,
    pub altitude: i64,
    pub level: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartEntry {
    CloneSet { letter: String, vertices: Vec<String> },
    Tangle { letter: String, top: Vec<String>, bottom: Vec<String> },
}

/// `chain[0] < chain[1] < chain[2]`, `isolated` incomparable to each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub chain: Vec<String>,
    pub isolated: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub is_31_free: bool,
    pub is_22_free: bool,
    pub witness: Option<Witness>,
    pub levels: Vec<Vec<String>>,
    /// Per vertex; views, altitudes and levels do not need (3+1)-freeness.
    pub views: Vec<ViewEntry>,
    /// Compatible listing; empty when the poset is not (3+1)-free.
    pub parts: Vec<PartEntry>,
    pub skeleton: Option<String>,
    /// Decimal, exact.
    pub aut_order: Option<String>,
}

pub fn analyze(np: &NamedPoset) -> AnalysisReport {
    let p = &np.poset;
    let names = |vs: &[usize]| vs.iter().map(|&v| np.names[v].clone()).collect::<Vec<_>>();
    let level_of = p.level_map();
    let views = (0..p.len())
        .map(|a| {
            let v = view(p, a).expect("vertex in range");
            ViewEntry {
                vertex: np.names[a].clone(),
                down: names(&v.down.to_vec()),
                codown: names(&v.codown.to_vec()),
                altitude: altitude(p, a).expect("vertex in range"),
                level: level_of[a],
            }
        })
        .collect();
    let levels = p.levels().into_iter().map(|l| names(&l.to_vec())).collect();
    let mut report = AnalysisReport {
        n: p.len(),
        is_31_free: true,
        is_22_free: p.is_22_free(),
        witness: None,
        levels,
        views,
        parts: Vec::new(),
        skeleton: None,
        aut_order: None,
    };
    if let Some(PatternWitness::ThreePlusOne { chain, isolated }) = p.find_3plus1() {
        report.is_31_free = false;
        report.witness = Some(Witness { chain: names(&chain), isolated: np.names[isolated].clone() });
        return report;
    }
    let d = decompose(p).expect("(3+1)-free");
    report.parts = d
        .parts
        .iter()
        .map(|part| match part {
            Part::CloneSet { vertices, .. } => {
                PartEntry::CloneSet { letter: part.letter().to_string(), vertices: names(vertices) }
            }
            Part::Tangle { top, bottom, .. } => PartEntry::Tangle {
                letter: part.letter().to_string(),
                top: names(top),
                bottom: names(bottom),
            },
        })
        .collect();
    report.skeleton = Some(d.skeleton().to_string());
    report.aut_order = Some(aut_order_of(p, &d).to_string());
    report
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices\t{}", self.n)?;
        writeln!(f, "(3+1)-free\t{}", self.is_31_free)?;
        writeln!(f, "(2+2)-free\t{}", self.is_22_free)?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness\t{} with {} incomparable", w.chain.join(" < "), w.isolated)?;
        }
        for (i, level) in self.levels.iter().enumerate() {
            writeln!(f, "level {}\t{}", i + 1, level.join(" "))?;
        }
        for v in &self.views {
            writeln!(
                f,
                "view {}\t({}, {})\taltitude {}",
                v.vertex,
                v.down.join(""),
                v.codown.join(""),
                v.altitude
            )?;
        }
        for part in &self.parts {
            match part {
                PartEntry::CloneSet { letter, vertices } => {
                    writeln!(f, "part {letter}\t{}", vertices.join(" "))?
                }
                PartEntry::Tangle { letter, top, bottom } => {
                    writeln!(f, "part {letter}\ttop {} / bottom {}", top.join(" "), bottom.join(" "))?
                }
            }
        }
        if let Some(s) = &self.skeleton {
            writeln!(f, "skeleton\t{s}")?;
        }
        if let Some(a) = &self.aut_order {
            writeln!(f, "aut_order\t{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::format::parse_poset;

    #[test]
    fn three_plus_one_is_reported() {
        let np = parse_poset("poset 4\na < b < c\nd\n").unwrap();
        let r = analyze(&np);
        assert!(!r.is_31_free);
        let w = r.witness.unwrap();
        assert_eq!(w.chain, vec!["a", "b", "c"]);
        assert_eq!(w.isolated, "d");
        assert!(r.parts.is_empty() && r.skeleton.is_none());
    }

    #[test]
    fn empty_poset() {
        let r = analyze(&parse_poset("poset 0").unwrap());
        assert_eq!(r.n, 0);
        assert_eq!(r.skeleton.as_deref(), Some(""));
        assert_eq!(r.aut_order.as_deref(), Some("1"));
    }

    #[test]
    fn json_round_trip() {
        let r = analyze(&parse_poset("poset 4\na < b\nc < d\n").unwrap());
        assert_eq!(r.skeleton.as_deref(), Some("t12"));
        let back: AnalysisReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
