use std::fmt::Write;

use serde::Serialize;

/// Everything one invocation prints, in a fixed field order.
#[derive(Serialize, Debug)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub cover: CoverSummary,
    pub irreducibles: Vec<String>,
    pub warnings: Vec<String>,
    pub sections: Vec<Section>,
}

#[derive(Serialize, Debug)]
pub struct CoverSummary {
    pub group_order: u64,
    pub genus_quotient: u64,
    pub genus: u64,
    pub branch_points: usize,
    pub canonical_map: String,
}

/// The output of one command.
#[derive(Serialize, Debug)]
pub struct Section {
    pub command: String,
    pub quantity: String,
    pub rows: Vec<Row>,
}

#[derive(Serialize, Debug)]
pub struct Row {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub multiplicities: Vec<Entry>,
    pub dimension: i64,
}

#[derive(Serialize, Debug)]
pub struct Entry {
    pub irreducible: String,
    pub multiplicity: i64,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let c = &self.cover;
        writeln!(out, "input: {}", self.input).unwrap();
        writeln!(
            out,
            "|G| = {}, g_Y = {}, g_X = {}, {} branch points",
            c.group_order, c.genus_quotient, c.genus, c.branch_points
        )
        .unwrap();
        writeln!(out, "canonical map: {}", c.canonical_map).unwrap();
        for section in &self.sections {
            out.push('\n');
            writeln!(out, "[{}] {}", section.command, section.quantity).unwrap();
            if section.rows.is_empty() {
                writeln!(out, "(nothing to report)").unwrap();
                continue;
            }
            out.push_str(&self.grid(section));
        }
        out
    }

    fn grid(&self, section: &Section) -> String {
        let mut header = vec![String::new()];
        header.extend(self.irreducibles.iter().cloned());
        header.push("dim".into());
        let mut lines = vec![header];
        for row in &section.rows {
            let mut line = vec![row.label.clone()];
            line.extend(
                row.multiplicities
                    .iter()
                    .map(|e| e.multiplicity.to_string()),
            );
            line.push(row.dimension.to_string());
            lines.push(line);
        }
        let widths: Vec<usize> = (0..lines[0].len())
            .map(|k| {
                lines
                    .iter()
                    .map(|l| l[k].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for line in lines {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(k, (cell, &w))| {
                    if k == 0 {
                        format!("{cell:<w$}")
                    } else {
                        format!("{cell:>w$}")
                    }
                })
                .collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        out
    }
}
