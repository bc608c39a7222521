//! JSON input format for a group action on a curve.
//!
//! ```json
//! {
//!   "group": {
//!     "order": 2,
//!     "classes": [
//!       {"name": "1a", "size": 1, "element_order": 1, "power_map": [0, 0]},
//!       {"name": "2a", "size": 1, "element_order": 2, "power_map": [0, 1, 0]}
//!     ],
//!     "irreducibles": [
//!       {"name": "triv", "values": [1, 1]},
//!       {"name": "sgn", "values": ["1", "-1"]}
//!     ]
//!   },
//!   "cover": {
//!     "genus_quotient": 0,
//!     "branch": [{"e": 2, "generator_class": 1, "rotation": 1, "count": 10}]
//!   }
//! }
//! ```
//!
//! Character values are integers or strings holding sums of terms
//! `c*z(N,k)` (the root of unity `exp(2πik/N)` with a rational coefficient
//! `c`) and rationals `c`, e.g. `"-1/2 + z(12,3) - 3*z(12,5)"`.
//!
//! A branch entry gives either `generator_class` (an index or a class name)
//! with an optional `rotation` (default 1), or `local_multiplicities`, one
//! row of `e` integers per irreducible. `count` repeats an entry.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cover::{BranchPoint, CoverData};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::reptheory::{CharacterTable, ConjugacyClass};
use crate::scalar::Scalar;
use crate::util::lcm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    pub group: GroupSpec,
    pub cover: CoverSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: u64,
    pub classes: Vec<ClassSpec>,
    pub irreducibles: Vec<IrreducibleSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSpec {
    pub name: String,
    pub size: u64,
    pub element_order: usize,
    pub power_map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrreducibleSpec {
    pub name: String,
    pub values: Vec<Literal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Integer(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    pub genus_quotient: u64,
    #[serde(default)]
    pub branch: Vec<BranchSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_class: Option<ClassRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_multiplicities: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassRef {
    Index(usize),
    Name(String),
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// Coefficient `num/den` and an optional root of unity `z(N, k)`.
type Term = (i64, i64, Option<(usize, i64)>);

struct LiteralParser<'s> {
    chars: Vec<char>,
    pos: usize,
    source: &'s str,
}

impl<'s> LiteralParser<'s> {
    fn new(source: &'s str) -> Self {
        LiteralParser {
            chars: source.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            source,
        }
    }

    fn fail<T>(&self, message: &str) -> std::result::Result<T, String> {
        Err(format!("{message} in {:?}", self.source))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), String> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("expected '{c}'"))
        }
    }

    fn integer(&mut self) -> std::result::Result<i64, String> {
        let negative = self.eat('-');
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected digits");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let value: i64 = digits
            .parse()
            .map_err(|_| format!("integer {digits} is too large in {:?}", self.source))?;
        Ok(if negative { -value } else { value })
    }

    /// `(numerator, denominator)` of an unsigned rational.
    fn rational(&mut self) -> std::result::Result<(i64, i64), String> {
        let num = self.integer()?;
        if self.eat('/') {
            let den = self.integer()?;
            if den == 0 {
                return self.fail("zero denominator");
            }
            Ok((num, den))
        } else {
            Ok((num, 1))
        }
    }

    fn root(&mut self) -> std::result::Result<(usize, i64), String> {
        self.expect('z')?;
        self.expect('(')?;
        let n = self.integer()?;
        self.expect(',')?;
        let k = self.integer()?;
        self.expect(')')?;
        if n <= 0 {
            return self.fail("root of unity order must be positive");
        }
        Ok((n as usize, k))
    }

    /// Terms `(num, den, root)` of the whole literal.
    fn terms(&mut self) -> std::result::Result<Vec<Term>, String> {
        let mut terms = Vec::new();
        if self.chars.is_empty() {
            return self.fail("empty literal");
        }
        loop {
            let mut sign = 1;
            if terms.is_empty() {
                if self.eat('-') {
                    sign = -1;
                } else {
                    self.eat('+');
                }
            } else if self.eat('-') {
                sign = -1;
            } else if !self.eat('+') {
                return self.fail("expected '+' or '-'");
            }
            let (num, den, root) = if self.peek() == Some('z') {
                (1, 1, Some(self.root()?))
            } else {
                let (num, den) = self.rational()?;
                let root = if self.eat('*') {
                    Some(self.root()?)
                } else {
                    None
                };
                (num, den, root)
            };
            terms.push((sign * num, den, root));
            if self.peek().is_none() {
                return Ok(terms);
            }
        }
    }
}

/// Parses a cyclotomic literal such as `"1/2 - 3*z(12,5) + z(4,1)"` into the
/// field whose order is the lcm of the root orders that occur.
pub fn parse_cyclotomic<Q: Scalar>(text: &str) -> Result<Cyclotomic<Q>> {
    parse_cyclotomic_at(text, "literal")
}

fn parse_cyclotomic_at<Q: Scalar>(text: &str, location: &str) -> Result<Cyclotomic<Q>> {
    let terms = LiteralParser::new(text)
        .terms()
        .map_err(|m| parse_error(location, m))?;
    let order = terms
        .iter()
        .filter_map(|t| t.2.map(|(n, _)| n))
        .fold(1, lcm);
    let mut coeffs = vec![Q::zero(); order];
    for (num, den, root) in terms {
        let index = match root {
            None => 0,
            Some((n, k)) => (k.rem_euclid(n as i64) as usize) * (order / n),
        };
        coeffs[index] = coeffs[index].clone() + Q::from_frac(num, den);
    }
    Cyclotomic::from_power_basis(order, coeffs)
}

impl InputFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            parse_error(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("input files serialize")
    }

    /// Builds and validates the character table.
    pub fn table<Q: Scalar>(&self) -> Result<CharacterTable<Q>> {
        let classes = self
            .group
            .classes
            .iter()
            .map(|c| ConjugacyClass {
                name: c.name.clone(),
                size: c.size,
                element_order: c.element_order,
                power_map: c.power_map.clone(),
            })
            .collect();
        let mut irreducibles = Vec::with_capacity(self.group.irreducibles.len());
        for (i, irr) in self.group.irreducibles.iter().enumerate() {
            let values = irr
                .values
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let location = format!("group.irreducibles[{i}].values[{j}]");
                    match v {
                        Literal::Integer(n) => Ok(Cyclotomic::from_integer(1, *n)),
                        Literal::Text(s) => parse_cyclotomic_at(s, &location),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            irreducibles.push((irr.name.clone(), values));
        }
        CharacterTable::new(self.group.order, classes, irreducibles)
    }

    /// Builds and validates the table and the cover.
    pub fn cover<Q: Scalar>(&self) -> Result<CoverData<Q>> {
        let table = self.table::<Q>()?;
        let mut branch = Vec::new();
        for (b, spec) in self.cover.branch.iter().enumerate() {
            let location = format!("cover.branch[{b}]");
            let count = spec.count.unwrap_or(1);
            for copy in 0..count {
                let name = match (&spec.name, count) {
                    (Some(n), 1) => n.clone(),
                    (Some(n), _) => format!("{n}.{}", copy + 1),
                    (None, _) => format!("P{}", branch.len() + 1),
                };
                let point = match (&spec.generator_class, &spec.local_multiplicities) {
                    (Some(class), None) => {
                        let index = match class {
                            ClassRef::Index(i) => *i,
                            ClassRef::Name(n) => table
                                .classes()
                                .iter()
                                .position(|c| &c.name == n)
                                .ok_or_else(|| {
                                    parse_error(
                                        format!("{location}.generator_class"),
                                        format!("no class named {n:?}"),
                                    )
                                })?,
                        };
                        BranchPoint::generator(name, spec.e, index, spec.rotation.unwrap_or(1))
                    }
                    (None, Some(rows)) => {
                        if spec.rotation.is_some() {
                            return Err(parse_error(location, "rotation needs a generator_class"));
                        }
                        BranchPoint::tabulated(name, spec.e, rows.clone())
                    }
                    (Some(_), Some(_)) => {
                        return Err(parse_error(
                            location,
                            "give either generator_class or local_multiplicities, not both",
                        ))
                    }
                    (None, None) => {
                        return Err(parse_error(
                            location,
                            "missing generator_class or local_multiplicities",
                        ))
                    }
                };
                branch.push(point);
            }
        }
        CoverData::new(table, self.cover.genus_quotient, branch)
    }
}

/// Parses and validates an input document.
pub fn parse_input_str<Q: Scalar>(text: &str) -> Result<CoverData<Q>> {
    InputFile::from_json(text)?.cover()
}

/// Reads an input file and validates its contents.
pub fn parse_input<Q: Scalar>(path: impl AsRef<Path>) -> Result<CoverData<Q>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_error(path.display().to_string(), e.to_string()))?;
    parse_input_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{z, C};
    use num_rational::BigRational;

    #[test]
    fn literals() {
        let x: C = parse_cyclotomic("-1/2 + z(12,3) - 3*z(12,5)").unwrap();
        let expected = &(&z(12, 3) - &z(12, 5).scale(&BigRational::from_integer(3.into())))
            + &C::from_rational(12, BigRational::new((-1).into(), 2.into()));
        assert_eq!(x, expected);
        let y: C = parse_cyclotomic(" z(3, 1) + z(3,2) ").unwrap();
        assert_eq!(y, C::from_integer(3, -1));
        let w: C = parse_cyclotomic("7").unwrap();
        assert_eq!(w.as_integer().unwrap(), 7);
        let m: C = parse_cyclotomic("z(4,1) + z(6,1)").unwrap();
        assert_eq!(m.order(), 12);
    }

    #[test]
    fn bad_literals_name_their_location() {
        for bad in ["", "1 +", "z(0,1)", "2**z(3,1)", "1/0", "z(3,1", "abc"] {
            assert!(
                matches!(
                    parse_cyclotomic::<BigRational>(bad),
                    Err(Error::Parse { .. })
                ),
                "{bad}"
            );
        }
        let doc = r#"{"group": {"order": 1,
            "classes": [{"name": "1a", "size": 1, "element_order": 1, "power_map": [0, 0]}],
            "irreducibles": [{"name": "triv", "values": ["1 +"]}]},
            "cover": {"genus_quotient": 3}}"#;
        match parse_input_str::<BigRational>(doc) {
            Err(Error::Parse { location, .. }) => {
                assert_eq!(location, "group.irreducibles[0].values[0]")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_errors_carry_line_numbers() {
        match parse_input_str::<BigRational>("{\n\"group\": 3\n}") {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn identity_cover_document() {
        let doc = r#"{"group": {"order": 1,
            "classes": [{"name": "1a", "size": 1, "element_order": 1, "power_map": [0, 0]}],
            "irreducibles": [{"name": "triv", "values": [1]}]},
            "cover": {"genus_quotient": 5, "branch": []}}"#;
        let c = parse_input_str::<BigRational>(doc).unwrap();
        assert_eq!(c.genus(), 5);
    }

    #[test]
    fn repeated_and_named_points() {
        let doc = r#"{"group": {"order": 2,
            "classes": [{"name": "1a", "size": 1, "element_order": 1, "power_map": [0, 0]},
                        {"name": "2a", "size": 1, "element_order": 2, "power_map": [0, 1, 0]}],
            "irreducibles": [{"name": "triv", "values": [1, 1]}, {"name": "sgn", "values": [1, -1]}]},
            "cover": {"genus_quotient": 0, "branch": [
                {"name": "W", "e": 2, "generator_class": "2a", "count": 8},
                {"e": 2, "local_multiplicities": [[1, 0], [0, 1]], "count": 2}]}}"#;
        let c = parse_input_str::<BigRational>(doc).unwrap();
        assert_eq!(c.genus(), 4);
        assert_eq!(c.branch()[0].name, "W.1");
        assert_eq!(c.branch()[9].name, "P10");
        let file = InputFile::from_json(doc).unwrap();
        assert_eq!(InputFile::from_json(&file.to_json()).unwrap(), file);
    }
}
