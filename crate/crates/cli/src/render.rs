//! Human-readable tables and machine-readable documents.

use std::fmt::Write;

use fusion2s_core::forms::FormDoc;
use fusion2s_core::modcats::SchurClass;
use fusion2s_core::smatrix::CharacterTable;
use fusion2s_core::{
    Error, Flavor, GroupElement, LabeledUnityMatrix, MugerClassification, Result, TheoremReport,
    UnityScalar,
};
use serde::{Deserialize, Serialize};

pub const LEGEND: &str = "entries are exponents p/q of e^(2πi·p/q); 1, -1, i, -i shown in brackets";

fn cell(u: &UnityScalar) -> String {
    match u.symbol() {
        Some(sym) => format!("{u}[{sym}]"),
        None => u.to_string(),
    }
}

/// Aligned text grid with labels in the first row and column.
pub fn matrix_table(m: &LabeledUnityMatrix) -> String {
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(m.nrows() + 1);
    let mut header = vec![String::new()];
    header.extend(m.col_labels().iter().map(|l| l.to_string()));
    grid.push(header);
    for (label, row) in m.row_labels().iter().zip(m.entries()) {
        let mut line = vec![label.to_string()];
        line.extend(row.iter().map(cell));
        grid.push(line);
    }
    let ncols = grid[0].len();
    let widths: Vec<usize> = (0..ncols)
        .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:<w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignEntry {
    pub element: GroupElement,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MugerDoc {
    pub group: Vec<u32>,
    pub radical: Vec<GroupElement>,
    pub order: usize,
    pub flavor: Flavor,
    pub sign_character: Vec<SignEntry>,
}

impl MugerDoc {
    pub fn new(group: &[u32], c: &MugerClassification) -> Self {
        MugerDoc {
            group: group.to_vec(),
            radical: c.radical.members().to_vec(),
            order: c.radical.order(),
            flavor: c.flavor,
            sign_character: c
                .sign_character
                .iter()
                .map(|(element, &sign)| SignEntry {
                    element: element.clone(),
                    sign,
                })
                .collect(),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "Müger center: order {} ({})", self.order, self.flavor).unwrap();
        for e in &self.sign_character {
            writeln!(out, "  {}  q = {:+}", e.element, e.sign).unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    /// Values on the Müger-center members, in element order.
    pub restricted_character: Vec<UnityScalar>,
    /// Least character index of `G` in the class.
    pub representative: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub radical: Vec<GroupElement>,
    pub flavor: Flavor,
    pub count: usize,
    pub classes: Vec<ClassDoc>,
}

impl ClassifyDoc {
    pub fn new(c: &MugerClassification, classes: &[SchurClass<'_>]) -> Self {
        ClassifyDoc {
            radical: c.radical.members().to_vec(),
            flavor: c.flavor,
            count: classes.len(),
            classes: classes
                .iter()
                .map(|s| ClassDoc {
                    restricted_character: s.restricted_character.values.clone(),
                    representative: s.restricted_character.lift.clone(),
                })
                .collect(),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let members: Vec<String> = self.radical.iter().map(|g| g.to_string()).collect();
        writeln!(
            out,
            "{} Schur classes of braided module categories ({}); Müger center {{{}}}",
            self.count,
            self.flavor,
            members.join(", ")
        )
        .unwrap();
        for (i, c) in self.classes.iter().enumerate() {
            let values: Vec<String> = c.restricted_character.iter().map(cell).collect();
            writeln!(out, "  class {i}: χ{} restricts to [{}]", c.representative, values.join(", ")).unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTableDoc {
    pub group: Vec<u32>,
    pub generators: Vec<GroupElement>,
    pub table: LabeledUnityMatrix,
}

impl CharTableDoc {
    pub fn new(t: &CharacterTable) -> Self {
        CharTableDoc {
            group: t.group.parent().orders().to_vec(),
            generators: t.generators.clone(),
            table: t.table.clone(),
        }
    }
}

pub fn report_table(r: &TheoremReport) -> String {
    let mut out = String::new();
    writeln!(out, "{}", r.form).unwrap();
    writeln!(out, "Müger center order {} ({})", r.radical.len(), r.flavor).unwrap();
    writeln!(out, "\nS̃ (direct, via module braidings):").unwrap();
    out.push_str(&matrix_table(&r.st_direct));
    if let Some(o) = &r.st_oracle {
        writeln!(out, "\nS̃ (via Drinfeld center):").unwrap();
        out.push_str(&matrix_table(o));
    }
    writeln!(out, "\ncharacter table of the Müger center:").unwrap();
    out.push_str(&matrix_table(&r.char_table));
    writeln!(out, "\n{LEGEND}").unwrap();
    let matched = |w: bool| if w { "equal up to permutation" } else { "NOT equal up to permutation" };
    writeln!(out, "S̃ vs character table: {}", matched(r.direct_witness.is_some())).unwrap();
    if r.st_oracle.is_some() {
        writeln!(out, "direct vs center route: {}", matched(r.oracle_witness.is_some())).unwrap();
    }
    writeln!(out, "verdict: {}", r.verdict).unwrap();
    out
}

/// Machine-readable rendering of a report.
pub fn render_report(r: &TheoremReport) -> String {
    serde_json::to_string_pretty(r).expect("reports serialize")
}

pub fn parse_report(text: &str) -> Result<TheoremReport> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed report: {e}")))
}

/// One line of `scan` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanLine {
    pub spec: FormDoc,
    pub radical_order: usize,
    pub flavor: Flavor,
    pub schur_classes: usize,
    pub oracle: bool,
    pub verdict: fusion2s_core::Verdict,
}
