//! Small hand-written tables and covers shared by the unit tests.

use num_rational::BigRational;

use crate::cover::{BranchPoint, CoverData};
use crate::cyclotomic::Cyclotomic;
use crate::reptheory::{CharacterTable, ConjugacyClass};

pub type C = Cyclotomic<BigRational>;

pub fn z(n: usize, k: i64) -> C {
    C::root_of_unity(n, k).unwrap()
}

pub fn int(n: i64) -> C {
    C::from_integer(1, n)
}

/// `Z/n` with classes `s^k` and characters `χ_j(s^k) = ζ_n^{jk}`.
pub fn cyclic(n: usize) -> CharacterTable<BigRational> {
    let classes = (0..n)
        .map(|k| {
            let order = n / num_integer::gcd(n, k);
            ConjugacyClass {
                name: format!("s{k}"),
                size: 1,
                element_order: order,
                power_map: (0..=order).map(|j| j * k % n).collect(),
            }
        })
        .collect();
    let irr = (0..n)
        .map(|j| {
            (
                format!("chi{j}"),
                (0..n).map(|k| z(n, (j * k) as i64)).collect(),
            )
        })
        .collect();
    CharacterTable::new(n as u64, classes, irr).unwrap()
}

/// `S_3` with classes (e, transpositions, 3-cycles) and irreducibles
/// (trivial, sign, standard).
pub fn s3() -> CharacterTable<BigRational> {
    let classes = vec![
        ConjugacyClass {
            name: "1a".into(),
            size: 1,
            element_order: 1,
            power_map: vec![0, 0],
        },
        ConjugacyClass {
            name: "2a".into(),
            size: 3,
            element_order: 2,
            power_map: vec![0, 1, 0],
        },
        ConjugacyClass {
            name: "3a".into(),
            size: 2,
            element_order: 3,
            power_map: vec![0, 2, 2, 0],
        },
    ];
    let irr = vec![
        ("triv".into(), vec![int(1), int(1), int(1)]),
        ("sgn".into(), vec![int(1), int(-1), int(1)]),
        ("std".into(), vec![int(2), int(0), int(-1)]),
    ];
    CharacterTable::new(6, classes, irr).unwrap()
}

pub fn trivial_group() -> CharacterTable<BigRational> {
    cyclic(1)
}

pub fn generator(name: &str, class: usize, rotation: i64, e: usize) -> BranchPoint {
    BranchPoint::generator(name, e, class, rotation)
}

/// Hyperelliptic curve of genus `g` with its involution.
pub fn hyperelliptic(g: usize) -> CoverData<BigRational> {
    let branch = (0..2 * g + 2)
        .map(|i| generator(&format!("P{i}"), 1, 1, 2))
        .collect();
    CoverData::new(cyclic(2), 0, branch).unwrap()
}

pub fn identity_cover(g: u64) -> CoverData<BigRational> {
    CoverData::new(trivial_group(), g, Vec::new()).unwrap()
}

/// `Z/n` over the projective line with the given generator classes, all of
/// rotation 1.
pub fn cyclic_cover(n: usize, gens: &[usize]) -> CoverData<BigRational> {
    let branch = gens
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let e = n / num_integer::gcd(n, k);
            generator(&format!("P{i}"), k, 1, e)
        })
        .collect();
    CoverData::new(cyclic(n), 0, branch).unwrap()
}
