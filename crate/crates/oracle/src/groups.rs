use std::collections::{BTreeSet, HashMap, VecDeque};

use equikoszul::{CharacterTable, ConjugacyClass, CycNum, Cyclotomic, Scalar, Table};

/// A finite group given by its multiplication table, with conjugacy classes
/// matched to a character table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub class_of: Vec<usize>,
    pub table: Table,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn element_order(&self, x: usize) -> usize {
        element_order(&self.mult, self.identity, x)
    }

    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mult[acc][x])
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.product(&[a, b, self.inverse[a], self.inverse[b]])
    }

    /// Order of the subgroup generated by `xs`.
    pub fn generated_order(&self, xs: &[usize]) -> usize {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut count = 1;
        while let Some(y) = queue.pop_front() {
            for &x in xs {
                let z = self.mult[y][x];
                if !seen[z] {
                    seen[z] = true;
                    count += 1;
                    queue.push_back(z);
                }
            }
        }
        count
    }
}

type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // apply `a` first, then `b`
    a.iter().map(|&i| b[i]).collect()
}

/// Builds the group generated by permutations and attaches character values
/// listed per class, with classes sorted by element order, then size, then
/// smallest element.
fn from_permutations(name: &str, gens: &[Perm], characters: &[(&str, Vec<CycNum>)]) -> FiniteGroup {
    let degree = gens[0].len();
    let id: Perm = (0..degree).collect();
    let mut elements = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if elements.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let elements: Vec<Perm> = elements.into_iter().collect();
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mult: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    let identity = index[&id];
    from_cayley(name, mult, identity, characters)
}

fn from_cayley(
    name: &str,
    mult: Vec<Vec<usize>>,
    identity: usize,
    characters: &[(&str, Vec<CycNum>)],
) -> FiniteGroup {
    let n = mult.len();
    let inverse: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| mult[x][y] == identity).expect("group"))
        .collect();
    let mut raw_classes: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; n];
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|g| mult[mult[inverse[g]][x]][g]).collect();
        for &y in &class {
            assigned[y] = true;
        }
        raw_classes.push(class.into_iter().collect());
    }
    let order_of = |x: usize| element_order(&mult, identity, x);
    raw_classes.sort_by_key(|c| (order_of(c[0]), c.len(), c[0]));
    let mut class_of = vec![0; n];
    for (k, class) in raw_classes.iter().enumerate() {
        for &x in class {
            class_of[x] = k;
        }
    }
    let mut letters: HashMap<usize, u8> = HashMap::new();
    let classes = raw_classes
        .iter()
        .map(|class| {
            let x = class[0];
            let order = order_of(x);
            let letter = letters.entry(order).or_insert(b'a');
            let name = format!("{order}{}", *letter as char);
            *letter += 1;
            let mut power_map = Vec::with_capacity(order + 1);
            let mut y = identity;
            for _ in 0..=order {
                power_map.push(class_of[y]);
                y = mult[y][x];
            }
            ConjugacyClass {
                name,
                size: class.len() as u64,
                element_order: order,
                power_map,
            }
        })
        .collect();
    let irreducibles = characters
        .iter()
        .map(|(name, values)| (name.to_string(), values.clone()))
        .collect();
    let table = CharacterTable::new(n as u64, classes, irreducibles)
        .unwrap_or_else(|e| panic!("character table of {name}: {e}"));
    FiniteGroup {
        name: name.to_string(),
        mult,
        identity,
        inverse,
        class_of,
        table,
    }
}

fn element_order(mult: &[Vec<usize>], identity: usize, x: usize) -> usize {
    let mut y = x;
    let mut n = 1;
    while y != identity {
        y = mult[y][x];
        n += 1;
    }
    n
}

fn ints(values: &[i64]) -> Vec<CycNum> {
    values.iter().map(|&v| CycNum::from_integer(1, v)).collect()
}

fn root(n: usize, k: i64) -> CycNum {
    CycNum::root_of_unity(n, k).expect("positive order")
}

/// Character table of `Z/n` over any scalar: class `k` holds `s^k` and
/// `χ_j(s^k) = ζ_n^{jk}`.
pub fn cyclic_table<Q: Scalar>(n: usize) -> CharacterTable<Q> {
    let classes = (0..n)
        .map(|k| {
            let order = n / num_integer::gcd(n, k);
            ConjugacyClass {
                name: format!("s^{k}"),
                size: 1,
                element_order: order,
                power_map: (0..=order).map(|j| j * k % n).collect(),
            }
        })
        .collect();
    let irreducibles = (0..n)
        .map(|j| {
            let values = (0..n)
                .map(|k| Cyclotomic::root_of_unity(n, (j * k) as i64).expect("positive order"))
                .collect();
            (format!("chi{j}"), values)
        })
        .collect();
    CharacterTable::new(n as u64, classes, irreducibles).expect("cyclic table")
}

/// `Z/n` with element `k` in class `k` and `χ_j(k) = ζ_n^{jk}`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let mult = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect::<Vec<Vec<_>>>();
    let inverse = (0..n).map(|a| (n - a) % n).collect();
    FiniteGroup {
        name: format!("Z{n}"),
        mult,
        identity: 0,
        inverse,
        class_of: (0..n).collect(),
        table: cyclic_table(n),
    }
}

pub fn symmetric3() -> FiniteGroup {
    from_permutations(
        "S3",
        &[vec![1, 2, 0], vec![1, 0, 2]],
        &[
            ("triv", ints(&[1, 1, 1])),
            ("sgn", ints(&[1, -1, 1])),
            ("std", ints(&[2, 0, -1])),
        ],
    )
}

/// Symmetries of a square acting on its vertices.
pub fn dihedral8() -> FiniteGroup {
    from_permutations(
        "D4",
        &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]],
        &[
            ("triv", ints(&[1, 1, 1, 1, 1])),
            ("rot", ints(&[1, 1, -1, -1, 1])),
            ("a", ints(&[1, 1, 1, -1, -1])),
            ("b", ints(&[1, 1, -1, 1, -1])),
            ("std", ints(&[2, -2, 0, 0, 0])),
        ],
    )
}

/// Unit quaternions `±1, ±i, ±j, ±k` in their regular representation.
pub fn quaternion8() -> FiniteGroup {
    // units 1, i, j, k as 0..4; (unit product, sign flip)
    let unit = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mult = (0..8)
        .map(|a: usize| {
            (0..8)
                .map(|b: usize| {
                    let (u, flip) = unit(a % 4, b % 4);
                    let negative = (a >= 4) ^ (b >= 4) ^ flip;
                    u + if negative { 4 } else { 0 }
                })
                .collect()
        })
        .collect();
    from_cayley(
        "Q8",
        mult,
        0,
        &[
            ("triv", ints(&[1, 1, 1, 1, 1])),
            ("i", ints(&[1, 1, 1, -1, -1])),
            ("j", ints(&[1, 1, -1, 1, -1])),
            ("k", ints(&[1, 1, -1, -1, 1])),
            ("std", ints(&[2, -2, 0, 0, 0])),
        ],
    )
}

pub fn alternating4() -> FiniteGroup {
    let one = CycNum::one(3);
    let w = root(3, 1);
    let w2 = root(3, 2);
    from_permutations(
        "A4",
        &[vec![1, 0, 3, 2], vec![1, 2, 0, 3]],
        &[
            ("triv", ints(&[1, 1, 1, 1])),
            ("w", vec![one.clone(), one.clone(), w.clone(), w2.clone()]),
            ("w2", vec![one.clone(), one, w2, w]),
            ("std", ints(&[3, -1, 0, 0])),
        ],
    )
}

/// The groups the corpus is drawn from.
pub fn small_groups() -> Vec<FiniteGroup> {
    let mut groups: Vec<FiniteGroup> = (2..=12).map(cyclic).collect();
    groups.extend([symmetric3(), dihedral8(), quaternion8(), alternating4()]);
    groups
}
