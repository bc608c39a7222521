use equikoszul::chevalley_weil::canonical_multiplicities;
use equikoszul::cover::CanonicalEmbedding;
use equikoszul::euler::{euler_characteristic, omega_power_descriptor};
use equikoszul::koszul::KoszulContext;
use equikoszul::schur::SchurContext;
use equikoszul::{Cover, Error, Result, VirtualRep};

use crate::args::{Command, IndexRange};
use crate::report::{CoverSummary, Entry, Report, Row, Section};

pub struct Job<'a> {
    pub command: Command,
    pub input: String,
    pub cover: &'a Cover,
    pub p: Option<IndexRange>,
    pub m: u64,
}

pub fn run(job: &Job<'_>) -> Result<Report> {
    let cover = job.cover;
    let table = cover.table();
    let mut warnings = Vec::new();
    let mut sections = Vec::new();
    let command = job.command;
    let wants = |c: Command| command == c || command == Command::All;
    if wants(Command::Validate) {
        sections.push(section(
            Command::Validate,
            "cover data is valid",
            Vec::new(),
        ));
    }
    if wants(Command::ChevalleyWeil) {
        let m = canonical_multiplicities(cover)?;
        let rows = vec![row(cover, "H0(Omega)".into(), None, None, &m)];
        sections.push(section(Command::ChevalleyWeil, "[H0(X, Omega_X)]", rows));
    }
    if wants(Command::Euler) {
        let chi = euler_characteristic(cover, &omega_power_descriptor(cover, job.m))?;
        let rows = vec![row(
            cover,
            format!("m = {}", job.m),
            None,
            Some(job.m),
            &chi,
        )];
        sections.push(section(Command::Euler, "chi_G(Omega^m)", rows));
    }
    if wants(Command::Koszul) {
        let g = cover.genus();
        let range = match (job.p, command) {
            (Some(range), _) => Some(range),
            (None, Command::All) if g >= 4 => Some(IndexRange {
                start: 1,
                end: g - 3,
            }),
            (None, Command::All) => None,
            (None, _) => unreachable!("koszul without --p is rejected before running"),
        };
        warnings.push(embedding_warning(cover));
        let mut rows = Vec::new();
        if let Some(range) = range {
            let ctx = KoszulContext::new(cover)?;
            for p in range.iter() {
                let diff = ctx.koszul_difference(p)?;
                rows.push(row(cover, format!("p = {p}"), Some(p), None, &diff));
            }
        }
        sections.push(section(Command::Koszul, "[K_{p,1}] - [K_{p-1,2}]", rows));
    }
    if wants(Command::Schur) {
        let g = cover.genus();
        let range = job.p.unwrap_or(IndexRange { start: 0, end: g });
        if range.end > g {
            return Err(Error::Domain {
                name: "p",
                value: range.end as i64,
                range: format!("0..={g}"),
            });
        }
        let series = SchurContext::new(cover)?.verified_schur_series()?;
        let rows = range
            .iter()
            .map(|p| {
                row(
                    cover,
                    format!("p = {p}"),
                    Some(p),
                    None,
                    &series.coeff(p as usize),
                )
            })
            .collect();
        sections.push(section(
            Command::Schur,
            "coefficient of t^p in Sch_V(t)",
            rows,
        ));
    }
    Ok(Report {
        command: command.name().into(),
        input: job.input.clone(),
        cover: CoverSummary {
            group_order: table.group_order(),
            genus_quotient: cover.genus_quotient(),
            genus: cover.genus(),
            branch_points: cover.branch().len(),
            canonical_map: canonical_map(cover),
        },
        irreducibles: table
            .irreducibles()
            .iter()
            .map(|i| i.name.clone())
            .collect(),
        warnings,
        sections,
    })
}

fn section(command: Command, quantity: &str, rows: Vec<Row>) -> Section {
    Section {
        command: command.name().into(),
        quantity: quantity.into(),
        rows,
    }
}

fn row(cover: &Cover, label: String, p: Option<u64>, m: Option<u64>, v: &VirtualRep) -> Row {
    let table = cover.table();
    Row {
        label,
        p,
        m,
        multiplicities: table
            .irreducibles()
            .iter()
            .zip(&v.mult)
            .map(|(irr, &multiplicity)| Entry {
                irreducible: irr.name.clone(),
                multiplicity,
            })
            .collect(),
        dimension: v.dim(table.dims()),
    }
}

fn canonical_map(cover: &Cover) -> String {
    match cover.canonical_embedding() {
        CanonicalEmbedding::Hyperelliptic { class: Some(h) } => format!(
            "not an embedding: hyperelliptic, involution in class {}",
            cover.table().class(h).name
        ),
        CanonicalEmbedding::Hyperelliptic { class: None } => {
            "not an embedding: every genus 2 curve is hyperelliptic".into()
        }
        CanonicalEmbedding::Unverified => {
            "no hyperelliptic involution in G; very ampleness not verified".into()
        }
    }
}

fn embedding_warning(cover: &Cover) -> String {
    match cover.canonical_embedding() {
        CanonicalEmbedding::Hyperelliptic { .. } => format!(
            "X is hyperelliptic ({}); Koszul differences refer to the canonical map, which is 2:1 onto its image",
            canonical_map(cover)
        ),
        CanonicalEmbedding::Unverified => {
            "Koszul differences assume the canonical map is an embedding, which is not verified for this cover".into()
        }
    }
}
