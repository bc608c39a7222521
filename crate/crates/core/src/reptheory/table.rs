use std::fmt;

use num_integer::Integer;

use super::{ClassFunction, VirtualRep};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::util::lcm;

/// A conjugacy class together with its power map.
///
/// `power_map[j]` is the class of `g^j` for a representative `g`, for
/// `j = 0 ..= element_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u64,
    pub element_order: usize,
    pub power_map: Vec<usize>,
}

impl ConjugacyClass {
    /// Class of `g^j` for any integer `j`.
    pub fn power(&self, j: i64) -> usize {
        self.power_map[j.rem_euclid(self.element_order as i64) as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducible<Q> {
    pub name: String,
    pub character: ClassFunction<Q>,
}

/// A failed invariant of a character table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableViolation {
    ClassCount {
        classes: usize,
        irreducibles: usize,
    },
    ClassSizes {
        sum: u64,
        group_order: u64,
    },
    PowerMapFirst {
        class: String,
    },
    PowerMapIdentity {
        class: String,
    },
    PowerMapOrder {
        class: String,
        exponent: usize,
        image: String,
    },
    Dimension {
        irreducible: String,
        value: String,
    },
    SumOfSquares {
        sum: String,
        group_order: u64,
    },
    Orthogonality {
        left: String,
        right: String,
        value: String,
    },
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableViolation::ClassCount {
                classes,
                irreducibles,
            } => write!(f, "{irreducibles} irreducibles but {classes} classes"),
            TableViolation::ClassSizes { sum, group_order } => {
                write!(f, "class sizes sum to {sum}, group order is {group_order}")
            }
            TableViolation::PowerMapFirst { class } => {
                write!(f, "power map of class {class} does not send g^1 to itself")
            }
            TableViolation::PowerMapIdentity { class } => write!(
                f,
                "power map of class {class} does not send g^0 and g^order to the identity"
            ),
            TableViolation::PowerMapOrder {
                class,
                exponent,
                image,
            } => write!(
                f,
                "power map of class {class}: g^{exponent} lies in class {image} of the wrong element order"
            ),
            TableViolation::Dimension { irreducible, value } => write!(
                f,
                "degree of {irreducible} is {value}, not a positive integer"
            ),
            TableViolation::SumOfSquares { sum, group_order } => write!(
                f,
                "squared degrees sum to {sum}, group order is {group_order}"
            ),
            TableViolation::Orthogonality { left, right, value } => {
                write!(f, "<{left}, {right}> = {value}")
            }
        }
    }
}

/// Character table of a finite group, with power maps.
///
/// All character values are stored in the cyclotomic field whose order is
/// the group exponent. Operations assume a table that passed
/// [`CharacterTable::validate`]; [`CharacterTable::new`] enforces that.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable<Q> {
    group_order: u64,
    classes: Vec<ConjugacyClass>,
    irreducibles: Vec<Irreducible<Q>>,
    exponent: usize,
    identity: usize,
    inverse: Vec<usize>,
    dims: Vec<i64>,
    duals: Vec<Option<usize>>,
    trivial: Option<usize>,
}

impl<Q: Scalar> CharacterTable<Q> {
    /// Builds and fully validates a table.
    pub fn new(
        group_order: u64,
        classes: Vec<ConjugacyClass>,
        irreducibles: Vec<(String, Vec<Cyclotomic<Q>>)>,
    ) -> Result<Self> {
        let table = Self::new_unvalidated(group_order, classes, irreducibles)?;
        let violations = table.validate();
        if violations.is_empty() {
            Ok(table)
        } else {
            Err(Error::InvalidTable(violations))
        }
    }

    /// Builds a table after structural checks only (shapes, index ranges,
    /// a unique identity class, value fields dividing the exponent).
    pub fn new_unvalidated(
        group_order: u64,
        classes: Vec<ConjugacyClass>,
        irreducibles: Vec<(String, Vec<Cyclotomic<Q>>)>,
    ) -> Result<Self> {
        let malformed = |msg: String| Err(Error::MalformedTable(msg));
        if group_order == 0 {
            return malformed("group order must be positive".into());
        }
        if classes.is_empty() {
            return malformed("no conjugacy classes".into());
        }
        for c in &classes {
            if c.element_order == 0 {
                return malformed(format!("class {} has element order 0", c.name));
            }
            if c.size == 0 {
                return malformed(format!("class {} has size 0", c.name));
            }
            if c.power_map.len() != c.element_order + 1 {
                return malformed(format!(
                    "power map of class {} has {} entries, expected {}",
                    c.name,
                    c.power_map.len(),
                    c.element_order + 1
                ));
            }
            if let Some(&bad) = c.power_map.iter().find(|&&k| k >= classes.len()) {
                return malformed(format!(
                    "power map of class {} refers to class index {bad}",
                    c.name
                ));
            }
        }
        let identities: Vec<usize> = (0..classes.len())
            .filter(|&i| classes[i].element_order == 1)
            .collect();
        let identity = match identities.as_slice() {
            [i] => *i,
            [] => return malformed("no class of element order 1".into()),
            _ => return malformed("more than one class of element order 1".into()),
        };
        let exponent = classes.iter().fold(1, |acc, c| lcm(acc, c.element_order));

        let mut irr = Vec::with_capacity(irreducibles.len());
        for (name, values) in irreducibles {
            if values.len() != classes.len() {
                return malformed(format!(
                    "irreducible {name} has {} values for {} classes",
                    values.len(),
                    classes.len()
                ));
            }
            let values = values
                .into_iter()
                .map(|v| {
                    v.embed(exponent).map_err(|_| {
                        Error::MalformedTable(format!(
                            "a value of {name} lies outside the field of order {exponent}"
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            irr.push(Irreducible {
                name,
                character: ClassFunction::new(values),
            });
        }
        if irr.is_empty() {
            return malformed("no irreducible characters".into());
        }

        let inverse = classes
            .iter()
            .map(|c| c.power(c.element_order as i64 - 1))
            .collect();
        let dims = irr
            .iter()
            .map(|i| i.character.value(identity).as_integer().unwrap_or(0))
            .collect();
        let mut table = CharacterTable {
            group_order,
            classes,
            irreducibles: irr,
            exponent,
            identity,
            inverse,
            dims,
            duals: Vec::new(),
            trivial: None,
        };
        table.duals = (0..table.irreducibles.len())
            .map(|i| {
                let conj = table.dual_function(table.character(i));
                (0..table.irreducibles.len()).find(|&j| *table.character(j) == conj)
            })
            .collect();
        let one = ClassFunction::constant(table.classes.len(), exponent, 1);
        table.trivial = (0..table.irreducibles.len()).find(|&j| *table.character(j) == one);
        Ok(table)
    }

    /// Lists every violated table invariant; empty means valid.
    pub fn validate(&self) -> Vec<TableViolation> {
        let mut out = Vec::new();
        if self.classes.len() != self.irreducibles.len() {
            out.push(TableViolation::ClassCount {
                classes: self.classes.len(),
                irreducibles: self.irreducibles.len(),
            });
        }
        let size_sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if size_sum != self.group_order {
            out.push(TableViolation::ClassSizes {
                sum: size_sum,
                group_order: self.group_order,
            });
        }
        for (i, c) in self.classes.iter().enumerate() {
            if c.power_map[1] != i {
                out.push(TableViolation::PowerMapFirst {
                    class: c.name.clone(),
                });
            }
            if c.power_map[0] != self.identity || c.power_map[c.element_order] != self.identity {
                out.push(TableViolation::PowerMapIdentity {
                    class: c.name.clone(),
                });
            }
            for j in 0..c.element_order {
                let image = &self.classes[c.power_map[j]];
                if image.element_order != c.element_order / j.gcd(&c.element_order) {
                    out.push(TableViolation::PowerMapOrder {
                        class: c.name.clone(),
                        exponent: j,
                        image: image.name.clone(),
                    });
                    break;
                }
            }
        }
        let mut square_sum = Q::zero();
        for irr in &self.irreducibles {
            let d = irr.character.value(self.identity);
            match d.as_integer() {
                Ok(n) if n > 0 => {}
                _ => out.push(TableViolation::Dimension {
                    irreducible: irr.name.clone(),
                    value: d.to_string(),
                }),
            }
            if let Ok(q) = d.as_rational() {
                square_sum = square_sum + q.clone() * q;
            }
        }
        if square_sum != Q::from_i64(self.group_order as i64) {
            out.push(TableViolation::SumOfSquares {
                sum: square_sum.to_string(),
                group_order: self.group_order,
            });
        }
        for i in 0..self.irreducibles.len() {
            for j in i..self.irreducibles.len() {
                let ip = self.pairing(self.character(i), self.character(j));
                let expected = Cyclotomic::from_integer(self.exponent, i64::from(i == j));
                if ip != expected {
                    out.push(TableViolation::Orthogonality {
                        left: self.irreducibles[i].name.clone(),
                        right: self.irreducibles[j].name.clone(),
                        value: ip.to_string(),
                    });
                }
            }
        }
        out
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &ConjugacyClass {
        &self.classes[c]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn irreducibles(&self) -> &[Irreducible<Q>] {
        &self.irreducibles
    }

    pub fn num_irreducibles(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn character(&self, i: usize) -> &ClassFunction<Q> {
        &self.irreducibles[i].character
    }

    /// Order of the cyclotomic field holding all values (the group exponent).
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn identity_class(&self) -> usize {
        self.identity
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse[c]
    }

    /// Degrees of the irreducibles, in table order.
    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> i64 {
        self.dims[i]
    }

    pub fn trivial(&self) -> Result<usize> {
        self.trivial
            .ok_or_else(|| Error::InconsistentTable("no trivial character".into()))
    }

    /// Index of the dual irreducible `I^∨`, whose character is `g ↦ χ_I(g⁻¹)`.
    pub fn dual(&self, i: usize) -> Result<usize> {
        self.duals[i].ok_or_else(|| {
            Error::InconsistentTable(format!(
                "the dual of {} is not among the irreducibles",
                self.irreducibles[i].name
            ))
        })
    }

    /// The permutation `I ↦ I^∨` of irreducible indices.
    pub fn dual_permutation(&self) -> Result<Vec<usize>> {
        (0..self.irreducibles.len()).map(|i| self.dual(i)).collect()
    }

    pub fn check(&self, f: &ClassFunction<Q>) -> Result<()> {
        if f.len() != self.classes.len() || f.field_order() != self.exponent {
            return Err(Error::TableMismatch(format!(
                "{} values in the field of order {}, table has {} classes and exponent {}",
                f.len(),
                f.field_order(),
                self.classes.len(),
                self.exponent
            )));
        }
        Ok(())
    }

    fn check_rep(&self, v: &VirtualRep) -> Result<()> {
        if v.len() != self.irreducibles.len() {
            return Err(Error::TableMismatch(format!(
                "virtual representation with {} entries, table has {} irreducibles",
                v.len(),
                self.irreducibles.len()
            )));
        }
        Ok(())
    }

    fn pairing(&self, f: &ClassFunction<Q>, h: &ClassFunction<Q>) -> Cyclotomic<Q> {
        let mut acc = Cyclotomic::zero(self.exponent);
        for (c, class) in self.classes.iter().enumerate() {
            let term = f.value(c) * h.value(self.inverse[c]);
            acc += &term.scale(&Q::from_i64(class.size as i64));
        }
        acc.scale(&(Q::one() / Q::from_i64(self.group_order as i64)))
    }

    /// `(1/|G|) Σ_c |c| f(c) h(c⁻¹)`.
    pub fn inner_product(
        &self,
        f: &ClassFunction<Q>,
        h: &ClassFunction<Q>,
    ) -> Result<Cyclotomic<Q>> {
        self.check(f)?;
        self.check(h)?;
        Ok(self.pairing(f, h))
    }

    /// `g ↦ f(g⁻¹)`.
    pub fn dual_function(&self, f: &ClassFunction<Q>) -> ClassFunction<Q> {
        ClassFunction::new(self.inverse.iter().map(|&c| f.value(c).clone()).collect())
    }

    /// Adams operation `ψ^k`, `(ψ^k f)(g) = f(g^k)`.
    pub fn adams(&self, f: &ClassFunction<Q>, k: u64) -> Result<ClassFunction<Q>> {
        self.check(f)?;
        Ok(ClassFunction::new(
            self.classes
                .iter()
                .map(|c| f.value(c.power(k as i64)).clone())
                .collect(),
        ))
    }

    /// Exterior powers `λ^0 f, …, λ^max f`, by Newton's identities
    /// `p·λ^p = Σ_{k=1}^{p} (−1)^{k−1} ψ^k(f)·λ^{p−k}` evaluated class by class.
    ///
    /// When the power sums `f(g^{jk})` at a class `g^j` are the images of
    /// `f(g^k)` under `ζ ↦ ζ^J` for every `k ≤ max`, the values at `g^j` are
    /// obtained from those at `g` by the same automorphism.
    pub fn exterior_powers(
        &self,
        f: &ClassFunction<Q>,
        max: usize,
    ) -> Result<Vec<ClassFunction<Q>>> {
        self.check(f)?;
        let mut per_class: Vec<Option<Vec<Cyclotomic<Q>>>> = vec![None; self.classes.len()];
        for c in 0..self.classes.len() {
            if per_class[c].is_some() {
                continue;
            }
            let e = self.newton_at(f, c, max);
            let class = &self.classes[c];
            let order = class.element_order;
            for j in 2..order {
                let target = class.power(j as i64);
                if target == c || per_class[target].is_some() || j.gcd(&order) != 1 {
                    continue;
                }
                let unit = self.lift_unit(j, order);
                let conjugate = (1..=max).all(|k| {
                    let image = f.value(class.power(k as i64)).galois(unit).expect("unit");
                    &image == f.value(class.power((j * k) as i64))
                });
                if conjugate {
                    per_class[target] =
                        Some(e.iter().map(|x| x.galois(unit).expect("unit")).collect());
                }
            }
            per_class[c] = Some(e);
        }
        let per_class: Vec<Vec<Cyclotomic<Q>>> = per_class
            .into_iter()
            .map(|e| e.expect("every class"))
            .collect();
        Ok((0..=max)
            .map(|p| ClassFunction::new(per_class.iter().map(|e| e[p].clone()).collect()))
            .collect())
    }

    fn newton_at(&self, f: &ClassFunction<Q>, c: usize, max: usize) -> Vec<Cyclotomic<Q>> {
        let class = &self.classes[c];
        let signed: Vec<Cyclotomic<Q>> = (1..=max)
            .map(|k| {
                let v = f.value(class.power(k as i64));
                if k % 2 == 1 {
                    v.clone()
                } else {
                    -v
                }
            })
            .collect();
        let mut e = Vec::with_capacity(max + 1);
        e.push(Cyclotomic::one(self.exponent));
        for p in 1..=max {
            let sum = Cyclotomic::sum_of_products(
                self.exponent,
                (1..=p).map(|k| (&signed[k - 1], &e[p - k])),
            );
            e.push(sum.scale(&(Q::one() / Q::from_i64(p as i64))));
        }
        e
    }

    /// An integer `J ≡ j (mod order)` that is a unit modulo the exponent.
    fn lift_unit(&self, j: usize, order: usize) -> i64 {
        (0..)
            .map(|t| j + t * order)
            .find(|candidate| candidate.gcd(&self.exponent) == 1)
            .expect("a unit lift exists") as i64
    }

    pub fn exterior_power(&self, f: &ClassFunction<Q>, p: usize) -> Result<ClassFunction<Q>> {
        Ok(self.exterior_powers(f, p)?.pop().expect("nonempty"))
    }

    /// `Σ_I mult_I χ_I`.
    pub fn assemble(&self, v: &VirtualRep) -> Result<ClassFunction<Q>> {
        self.check_rep(v)?;
        let mut values = vec![Cyclotomic::zero(self.exponent); self.classes.len()];
        for (i, &m) in v.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let factor = Q::from_i64(m);
            for (slot, x) in values.iter_mut().zip(self.character(i).values()) {
                *slot += &x.scale(&factor);
            }
        }
        Ok(ClassFunction::new(values))
    }

    /// Multiplicities `⟨f, χ_I⟩`, required to be rational integers that
    /// reassemble to `f`.
    pub fn decompose(&self, f: &ClassFunction<Q>) -> Result<VirtualRep> {
        self.check(f)?;
        let mut mult = Vec::with_capacity(self.irreducibles.len());
        for (i, irr) in self.irreducibles.iter().enumerate() {
            let ip = self.pairing(f, self.character(i));
            let m = ip
                .as_rational()
                .ok()
                .and_then(|q| q.to_i64_exact())
                .ok_or_else(|| {
                    Error::NotAVirtualCharacter(format!("multiplicity of {} is {ip}", irr.name))
                })?;
            mult.push(m);
        }
        let v = VirtualRep::new(mult);
        if self.assemble(&v)? != *f {
            return Err(Error::NotAVirtualCharacter(
                "not in the span of the irreducible characters".into(),
            ));
        }
        Ok(v)
    }

    pub fn tensor(&self, a: &VirtualRep, b: &VirtualRep) -> Result<VirtualRep> {
        self.decompose(&(&self.assemble(a)? * &self.assemble(b)?))
    }

    /// `[W] ↦ [W^∨]`.
    pub fn dual_rep(&self, v: &VirtualRep) -> Result<VirtualRep> {
        self.check_rep(v)?;
        Ok(v.permuted(&self.dual_permutation()?))
    }

    /// Integer coefficients `c_k` with `f|_⟨g⟩ = Σ_k c_k ψ_k`, where `g`
    /// represents class `c`, `n` is its order and `ψ_k(g) = ζ_n^k`.
    fn cyclic_fourier(
        &self,
        f: &ClassFunction<Q>,
        c: usize,
    ) -> std::result::Result<Vec<i64>, String> {
        let class = &self.classes[c];
        let n = class.element_order;
        let step = (self.exponent / n) as i64;
        let scale = Q::one() / Q::from_i64(n as i64);
        (0..n)
            .map(|k| {
                let mut acc = Cyclotomic::zero(self.exponent);
                for j in 0..n {
                    let root = Cyclotomic::root_of_unity(self.exponent, -((k * j) as i64) * step)
                        .expect("positive order");
                    acc += &(f.value(class.power(j as i64)) * &root);
                }
                let value = acc.scale(&scale);
                value
                    .as_rational()
                    .ok()
                    .and_then(|q| q.to_i64_exact())
                    .ok_or_else(|| {
                        format!(
                            "multiplicity of the eigenvalue exp(2πi·{k}/{n}) at class {} is {value}",
                            class.name
                        )
                    })
            })
            .collect()
    }

    /// Eigenvalue multiset of a genuine character at class `c`: entry `k`
    /// is the multiplicity of `ζ_n^k`, `n` the element order of the class.
    pub fn eigenvalues_of(&self, f: &ClassFunction<Q>, c: usize) -> Result<Vec<i64>> {
        self.check(f)?;
        let mult = self
            .cyclic_fourier(f, c)
            .map_err(Error::InconsistentTable)?;
        if let Some(k) = mult.iter().position(|&m| m < 0) {
            return Err(Error::InconsistentTable(format!(
                "eigenvalue exp(2πi·{k}/{}) has negative multiplicity {} at class {}",
                mult.len(),
                mult[k],
                self.classes[c].name
            )));
        }
        Ok(mult)
    }

    pub fn eigenvalue_multiset(&self, irreducible: usize, c: usize) -> Result<Vec<i64>> {
        self.eigenvalues_of(self.character(irreducible), c)
    }

    /// Restriction of a virtual character to the cyclic group generated by
    /// an element `g` of class `c`, in the basis `χ^d`, `d = 0..e`, of powers
    /// of the character `χ(g) = ζ_e^rotation`.
    ///
    /// Entry `d` is `(1/e) Σ_j f(g^j) ζ_e^{−rotation·d·j}`.
    pub fn restrict_cyclic(
        &self,
        f: &ClassFunction<Q>,
        c: usize,
        rotation: i64,
    ) -> Result<Vec<i64>> {
        self.check(f)?;
        let e = self.classes[c].element_order as i64;
        if rotation.gcd(&e) != 1 {
            return Err(Error::domain(
                "rotation",
                rotation,
                format!("units modulo {e}"),
            ));
        }
        let fourier = self.cyclic_fourier(f, c).map_err(Error::InconsistentData)?;
        Ok((0..e)
            .map(|d| fourier[(rotation * d).rem_euclid(e) as usize])
            .collect())
    }
}
