//! Branch data of a Galois cover `X → Y = X/G` and the local multiplicities
//! `n_{d,Q,I}`.
//!
//! Over each branch point `Q` the stabilizer `G_P` of a point `P` above it is
//! cyclic of order `e`. It is described either by a generator `g_P` (a class
//! index) and a rotation `a` with `χ_P(g_P) = ζ_e^a`, where `χ_P` is the
//! character of `G_P` on the tangent line `T_P X`, or directly by the table of
//! multiplicities `n_{d,Q,I}` of `χ_P^d` in the restriction of each
//! irreducible `I`.
//!
//! For a cyclic cover `y^n = Π (x − a_i)^{r_i}` with `σ(y) = ζ_n y`, the point
//! over `a_i` has `e = n / gcd(n, r_i)`, generator `σ^{gcd(n, r_i)}` and
//! rotation `−(r_i / gcd(n, r_i))^{-1} mod e`, when `σ` acts on differentials
//! by pullback `ω ↦ σ*ω`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::reptheory::CharacterTable;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalData {
    /// A generator class of the stabilizer and its rotation number.
    Generator { class: usize, rotation: i64 },
    /// Explicit multiplicities, indexed `[irreducible][d]`.
    Tabulated(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPoint {
    pub name: String,
    /// Ramification index, the order of the stabilizer.
    pub e: usize,
    pub local: LocalData,
}

impl BranchPoint {
    pub fn generator(name: impl Into<String>, e: usize, class: usize, rotation: i64) -> Self {
        BranchPoint {
            name: name.into(),
            e,
            local: LocalData::Generator { class, rotation },
        }
    }

    pub fn tabulated(name: impl Into<String>, e: usize, table: Vec<Vec<i64>>) -> Self {
        BranchPoint {
            name: name.into(),
            e,
            local: LocalData::Tabulated(table),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    RamificationIndex {
        point: String,
        e: usize,
    },
    IndexDoesNotDivideOrder {
        point: String,
        e: usize,
        group_order: u64,
    },
    ClassOutOfRange {
        point: String,
        class: usize,
    },
    GeneratorOrder {
        point: String,
        class: String,
        order: usize,
        e: usize,
    },
    RotationNotCoprime {
        point: String,
        rotation: i64,
        e: usize,
    },
    TableShape {
        point: String,
        detail: String,
    },
    FiberDimension {
        point: String,
        irreducible: String,
        sum: i64,
        dim: i64,
    },
    NegativeMultiplicity {
        point: String,
        irreducible: String,
    },
    NonIntegralMultiplicity {
        point: String,
        detail: String,
    },
    RiemannHurwitzParity {
        twice_genus_minus_two: i64,
    },
    NegativeGenus {
        genus: i64,
    },
    GenusTooSmall {
        genus: u64,
    },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoverViolation::*;
        match self {
            RamificationIndex { point, e } => {
                write!(f, "{point}: ramification index {e} must be at least 2")
            }
            IndexDoesNotDivideOrder {
                point,
                e,
                group_order,
            } => write!(
                f,
                "{point}: ramification index {e} does not divide the group order {group_order}"
            ),
            ClassOutOfRange { point, class } => {
                write!(f, "{point}: generator class index {class} is out of range")
            }
            GeneratorOrder {
                point,
                class,
                order,
                e,
            } => write!(
                f,
                "{point}: generator class {class} has element order {order}, expected {e}"
            ),
            RotationNotCoprime { point, rotation, e } => {
                write!(f, "{point}: rotation {rotation} is not a unit modulo {e}")
            }
            TableShape { point, detail } => write!(f, "{point}: {detail}"),
            FiberDimension {
                point,
                irreducible,
                sum,
                dim,
            } => write!(
                f,
                "{point}: multiplicities of {irreducible} sum to {sum}, its degree is {dim}"
            ),
            NegativeMultiplicity { point, irreducible } => {
                write!(f, "{point}: negative multiplicity for {irreducible}")
            }
            NonIntegralMultiplicity { point, detail } => write!(f, "{point}: {detail}"),
            RiemannHurwitzParity {
                twice_genus_minus_two,
            } => write!(
                f,
                "Riemann-Hurwitz gives 2g-2 = {twice_genus_minus_two}, which is odd"
            ),
            NegativeGenus { genus } => write!(f, "Riemann-Hurwitz gives genus {genus}"),
            GenusTooSmall { genus } => write!(f, "genus {genus} of the cover is below 2"),
        }
    }
}

/// Outcome of [`validate_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub violations: Vec<CoverViolation>,
    /// Genus of `X`, when Riemann-Hurwitz could be evaluated.
    pub genus: Option<u64>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `2g_X − 2` from Riemann-Hurwitz, or `None` if some `e` does not divide `|G|`.
fn twice_genus_minus_two(group_order: u64, genus_quotient: u64, indices: &[usize]) -> Option<i64> {
    let order = group_order as i64;
    let mut total = order * (2 * genus_quotient as i64 - 2);
    for &e in indices {
        let e = e as i64;
        if e == 0 || order % e != 0 {
            return None;
        }
        total += order / e * (e - 1);
    }
    Some(total)
}

/// Genus of `X` from `2g_X − 2 = |G|(2g_Y − 2) + Σ_Q (|G|/e_Q)(e_Q − 1)`.
pub fn riemann_hurwitz(group_order: u64, genus_quotient: u64, indices: &[usize]) -> Result<u64> {
    let t = twice_genus_minus_two(group_order, genus_quotient, indices).ok_or_else(|| {
        Error::InconsistentCover("a ramification index does not divide the group order".into())
    })?;
    if t % 2 != 0 {
        return Err(Error::InconsistentCover(format!(
            "2g-2 = {t} is odd, so the genus is not an integer"
        )));
    }
    let g = t / 2 + 1;
    if g < 0 {
        return Err(Error::InconsistentCover(format!("negative genus {g}")));
    }
    Ok(g as u64)
}

/// Local multiplicity tables `[irreducible][d]` of a branch point, or the
/// violations preventing their computation.
fn local_table<Q: Scalar>(
    table: &CharacterTable<Q>,
    point: &BranchPoint,
) -> std::result::Result<Vec<Vec<i64>>, Vec<CoverViolation>> {
    let name = || point.name.clone();
    let e = point.e;
    let mut violations = Vec::new();
    let rows = match &point.local {
        LocalData::Generator { class, rotation } => {
            if *class >= table.num_classes() {
                return Err(vec![CoverViolation::ClassOutOfRange {
                    point: name(),
                    class: *class,
                }]);
            }
            let c = table.class(*class);
            if c.element_order != e {
                violations.push(CoverViolation::GeneratorOrder {
                    point: name(),
                    class: c.name.clone(),
                    order: c.element_order,
                    e,
                });
            }
            if rotation.gcd(&(e as i64)) != 1 {
                violations.push(CoverViolation::RotationNotCoprime {
                    point: name(),
                    rotation: *rotation,
                    e,
                });
            }
            if !violations.is_empty() {
                return Err(violations);
            }
            let mut rows = Vec::with_capacity(table.num_irreducibles());
            for i in 0..table.num_irreducibles() {
                match table.restrict_cyclic(table.character(i), *class, *rotation) {
                    Ok(r) => rows.push(r),
                    Err(err) => {
                        return Err(vec![CoverViolation::NonIntegralMultiplicity {
                            point: name(),
                            detail: err.to_string(),
                        }])
                    }
                }
            }
            rows
        }
        LocalData::Tabulated(rows) => {
            if rows.len() != table.num_irreducibles() || rows.iter().any(|r| r.len() != e) {
                return Err(vec![CoverViolation::TableShape {
                    point: name(),
                    detail: format!(
                        "expected {} rows of {e} multiplicities",
                        table.num_irreducibles()
                    ),
                }]);
            }
            rows.clone()
        }
    };
    for (i, row) in rows.iter().enumerate() {
        let irreducible = table.irreducibles()[i].name.clone();
        if row.iter().any(|&n| n < 0) {
            violations.push(CoverViolation::NegativeMultiplicity {
                point: name(),
                irreducible: irreducible.clone(),
            });
        }
        let sum: i64 = row.iter().sum();
        if sum != table.dim(i) {
            violations.push(CoverViolation::FiberDimension {
                point: name(),
                irreducible,
                sum,
                dim: table.dim(i),
            });
        }
    }
    if violations.is_empty() {
        Ok(rows)
    } else {
        Err(violations)
    }
}

fn check_cover<Q: Scalar>(
    table: &CharacterTable<Q>,
    genus_quotient: u64,
    branch: &[BranchPoint],
) -> (CoverReport, Vec<Vec<Vec<i64>>>) {
    let mut violations = Vec::new();
    let mut tables = Vec::with_capacity(branch.len());
    let mut indices_ok = true;
    for point in branch {
        if point.e < 2 {
            violations.push(CoverViolation::RamificationIndex {
                point: point.name.clone(),
                e: point.e,
            });
            indices_ok = false;
            continue;
        }
        if !table.group_order().is_multiple_of(point.e as u64) {
            violations.push(CoverViolation::IndexDoesNotDivideOrder {
                point: point.name.clone(),
                e: point.e,
                group_order: table.group_order(),
            });
            indices_ok = false;
        }
        match local_table(table, point) {
            Ok(t) => tables.push(t),
            Err(v) => violations.extend(v),
        }
    }
    let mut genus = None;
    if indices_ok {
        let indices: Vec<usize> = branch.iter().map(|p| p.e).collect();
        let t = twice_genus_minus_two(table.group_order(), genus_quotient, &indices)
            .expect("indices checked");
        if t % 2 != 0 {
            violations.push(CoverViolation::RiemannHurwitzParity {
                twice_genus_minus_two: t,
            });
        } else if t / 2 + 1 < 0 {
            violations.push(CoverViolation::NegativeGenus { genus: t / 2 + 1 });
        } else {
            let g = (t / 2 + 1) as u64;
            genus = Some(g);
            if g < 2 {
                violations.push(CoverViolation::GenusTooSmall { genus: g });
            }
        }
    }
    (CoverReport { violations, genus }, tables)
}

/// Checks branch data against a (valid) character table: index and rotation
/// constraints, Riemann-Hurwitz integrality, genus at least 2, and integral
/// non-negative local multiplicities with the right fiber dimensions.
pub fn validate_cover<Q: Scalar>(
    table: &CharacterTable<Q>,
    genus_quotient: u64,
    branch: &[BranchPoint],
) -> CoverReport {
    check_cover(table, genus_quotient, branch).0
}

/// Whether the canonical map of `X` is known to fail to be an embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalEmbedding {
    /// `X` is hyperelliptic; `class` is an involution in `G` with `2g + 2`
    /// fixed points, or `None` when `g = 2`.
    Hyperelliptic { class: Option<usize> },
    /// No hyperelliptic involution lies in `G`; `X` may still be hyperelliptic.
    Unverified,
}

/// A validated cover: character table, quotient genus and branch points, with
/// the local multiplicities and the genus of `X` precomputed.
#[derive(Clone, Debug)]
pub struct CoverData<Q> {
    table: CharacterTable<Q>,
    genus_quotient: u64,
    branch: Vec<BranchPoint>,
    local: Vec<Vec<Vec<i64>>>,
    genus: u64,
    trivial: usize,
    duals: Vec<usize>,
}

impl<Q: Scalar> CoverData<Q> {
    pub fn new(
        table: CharacterTable<Q>,
        genus_quotient: u64,
        branch: Vec<BranchPoint>,
    ) -> Result<Self> {
        let table_violations = table.validate();
        if !table_violations.is_empty() {
            return Err(Error::InvalidTable(table_violations));
        }
        let trivial = table.trivial()?;
        let duals = table.dual_permutation()?;
        let (report, local) = check_cover(&table, genus_quotient, &branch);
        if !report.is_valid() {
            return Err(Error::InvalidCover(report.violations));
        }
        let genus = report.genus.expect("valid covers have a genus");
        Ok(CoverData {
            table,
            genus_quotient,
            branch,
            local,
            genus,
            trivial,
            duals,
        })
    }

    pub fn table(&self) -> &CharacterTable<Q> {
        &self.table
    }

    /// Genus of the quotient curve `Y`.
    pub fn genus_quotient(&self) -> u64 {
        self.genus_quotient
    }

    /// Genus of `X`.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn branch(&self) -> &[BranchPoint] {
        &self.branch
    }

    pub fn num_irreducibles(&self) -> usize {
        self.table.num_irreducibles()
    }

    pub fn trivial(&self) -> usize {
        self.trivial
    }

    /// Index of `I^∨`.
    pub fn dual(&self, i: usize) -> usize {
        self.duals[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.duals
    }

    /// `(n_{0,Q,I}, …, n_{e−1,Q,I})` for branch point `q`.
    pub fn local_multiplicities(&self, q: usize, i: usize) -> &[i64] {
        &self.local[q][i]
    }

    /// All local tables of point `q`, indexed `[irreducible][d]`.
    pub fn local_table(&self, q: usize) -> &[Vec<i64>] {
        &self.local[q]
    }

    /// Restriction of a virtual representation to `G_P` at point `q`, in the
    /// basis `χ_P^d`.
    pub fn restrict(&self, q: usize, mult: &[i64]) -> Vec<i64> {
        let e = self.branch[q].e;
        let mut out = vec![0; e];
        for (i, &m) in mult.iter().enumerate() {
            if m != 0 {
                for (slot, n) in out.iter_mut().zip(&self.local[q][i]) {
                    *slot += m * n;
                }
            }
        }
        out
    }

    /// Number of fixed points on `X` of an element of class `h`, or `None` if
    /// some branch point is given by a bare multiplicity table.
    pub fn fixed_points(&self, h: usize) -> Option<u64> {
        let class = self.table.class(h);
        if class.element_order == 1 {
            return None;
        }
        let centralizer = self.table.group_order() / class.size;
        let mut total = 0;
        for point in &self.branch {
            let LocalData::Generator { class: g, .. } = point.local else {
                return None;
            };
            let gc = self.table.class(g);
            let hits = (0..point.e as i64).filter(|&j| gc.power(j) == h).count() as u64;
            total += centralizer * hits / point.e as u64;
        }
        Some(total)
    }

    pub fn canonical_embedding(&self) -> CanonicalEmbedding {
        if self.genus == 2 {
            return CanonicalEmbedding::Hyperelliptic { class: None };
        }
        let target = 2 * self.genus + 2;
        (0..self.table.num_classes())
            .find(|&h| {
                self.table.class(h).element_order == 2 && self.fixed_points(h) == Some(target)
            })
            .map_or(CanonicalEmbedding::Unverified, |h| {
                CanonicalEmbedding::Hyperelliptic { class: Some(h) }
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic, cyclic_cover, generator, hyperelliptic, identity_cover, s3};

    #[test]
    fn riemann_hurwitz_examples() {
        assert_eq!(riemann_hurwitz(2, 0, &[2; 10]).unwrap(), 4);
        assert_eq!(riemann_hurwitz(1, 5, &[]).unwrap(), 5);
        assert_eq!(riemann_hurwitz(3, 0, &[3; 5]).unwrap(), 3);
        assert!(matches!(
            riemann_hurwitz(2, 0, &[2; 9]),
            Err(Error::InconsistentCover(_))
        ));
        assert!(riemann_hurwitz(3, 0, &[3; 1]).is_err());
    }

    #[test]
    fn cover_genus_matches_riemann_hurwitz() {
        assert_eq!(hyperelliptic(4).genus(), 4);
        assert_eq!(identity_cover(5).genus(), 5);
        assert_eq!(cyclic_cover(3, &[1, 1, 1, 1, 2]).genus(), 3);
    }

    #[test]
    fn local_multiplicity_examples() {
        let h = hyperelliptic(4);
        for q in 0..10 {
            assert_eq!(h.local_multiplicities(q, 0), &[1, 0]);
            assert_eq!(h.local_multiplicities(q, 1), &[0, 1]);
        }
        let branch = vec![
            generator("A", 1, 1, 2),
            generator("B", 1, 1, 2),
            generator("C", 2, 1, 3),
            generator("D", 2, 1, 3),
        ];
        let c = CoverData::new(s3(), 0, branch).unwrap();
        assert_eq!(c.genus(), 2);
        assert_eq!(c.local_multiplicities(2, 2), &[0, 1, 1]);
        assert_eq!(c.local_multiplicities(2, 0), &[1, 0, 0]);
        assert_eq!(c.local_multiplicities(0, 1), &[0, 1]);
    }

    #[test]
    fn validation_examples() {
        let ok = validate_cover(&cyclic(2), 0, &vec![generator("P", 1, 1, 2); 10]);
        assert!(ok.is_valid());
        assert_eq!(ok.genus, Some(4));

        let bad_rot = validate_cover(&cyclic(4), 0, &[generator("P", 1, 2, 4)]);
        assert!(bad_rot
            .violations
            .iter()
            .any(|v| matches!(v, CoverViolation::RotationNotCoprime { .. })));

        let odd = validate_cover(&cyclic(2), 0, &vec![generator("P", 1, 1, 2); 9]);
        assert!(odd
            .violations
            .contains(&CoverViolation::RiemannHurwitzParity {
                twice_genus_minus_two: 5
            }));

        let unramified = validate_cover(&cyclic(2), 2, &[generator("P", 0, 1, 1)]);
        assert!(unramified
            .violations
            .iter()
            .any(|v| matches!(v, CoverViolation::RamificationIndex { .. })));

        let wrong_order = validate_cover(&cyclic(4), 0, &[generator("P", 2, 1, 4)]);
        assert!(wrong_order
            .violations
            .iter()
            .any(|v| matches!(v, CoverViolation::GeneratorOrder { .. })));

        let err = CoverData::new(cyclic(2), 0, vec![generator("P", 1, 1, 2); 9]).unwrap_err();
        assert!(matches!(err, Error::InvalidCover(_)));
    }

    #[test]
    fn tabulated_points_are_cross_checked() {
        let good = vec![BranchPoint::tabulated("T", 2, vec![vec![1, 0], vec![0, 1]]); 10];
        let c = CoverData::new(cyclic(2), 0, good).unwrap();
        assert_eq!(c.genus(), 4);
        assert_eq!(c.fixed_points(1), None);
        let bad = validate_cover(
            &cyclic(2),
            0,
            &vec![BranchPoint::tabulated("T", 2, vec![vec![1, 0], vec![1, 1]]); 10],
        );
        assert!(bad
            .violations
            .iter()
            .any(|v| matches!(v, CoverViolation::FiberDimension { .. })));
    }

    #[test]
    fn hyperelliptic_involution_is_detected() {
        let h = hyperelliptic(5);
        assert_eq!(h.fixed_points(1), Some(12));
        assert_eq!(
            h.canonical_embedding(),
            CanonicalEmbedding::Hyperelliptic { class: Some(1) }
        );
        assert_eq!(
            identity_cover(5).canonical_embedding(),
            CanonicalEmbedding::Unverified
        );
        let c = cyclic_cover(3, &[1, 1, 1, 1, 1, 1]);
        assert_eq!(c.fixed_points(1), Some(6));
        assert_eq!(c.canonical_embedding(), CanonicalEmbedding::Unverified);
    }
}
