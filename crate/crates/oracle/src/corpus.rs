use std::collections::BTreeSet;

use equikoszul::{BranchPoint, Cover, CoverData};

use crate::groups::{small_groups, FiniteGroup};

/// A cover in the test corpus together with a readable label.
#[derive(Clone, Debug)]
pub struct CorpusCover {
    pub label: String,
    pub cover: Cover,
}

/// Largest genus of the curves in the corpus.
pub const MAX_GENUS: u64 = 8;

/// `2g_X − 2 = |G|(2g_Y − 2) + Σ |G|(1 − 1/e)`.
fn twice_genus_minus_two(order: usize, genus_quotient: u64, indices: &[usize]) -> i64 {
    let n = order as i64;
    let mut total = n * (2 * genus_quotient as i64 - 2);
    for &e in indices {
        total += n - n / e as i64;
    }
    total
}

fn genus_of(order: usize, genus_quotient: u64, indices: &[usize]) -> Option<u64> {
    let t = twice_genus_minus_two(order, genus_quotient, indices);
    (t >= -2 && t % 2 == 0).then(|| ((t + 2) / 2) as u64)
}

fn build(group: &FiniteGroup, genus_quotient: u64, elements: &[usize]) -> CorpusCover {
    let branch: Vec<BranchPoint> = elements
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            BranchPoint::generator(
                format!("P{i}"),
                group.element_order(x),
                group.class_of[x],
                1,
            )
        })
        .collect();
    let classes: Vec<String> = elements
        .iter()
        .map(|&x| group.table.class(group.class_of[x]).name.clone())
        .collect();
    let label = format!(
        "{} gY={} [{}]",
        group.name,
        genus_quotient,
        classes.join(",")
    );
    let cover = CoverData::new(group.table.clone(), genus_quotient, branch)
        .unwrap_or_else(|e| panic!("{label}: {e}"));
    CorpusCover { label, cover }
}

/// Tuples of non-identity elements with non-decreasing classes, genus at
/// most `MAX_GENUS` and accepted by `accept`, one per multiset of classes.
/// Braid moves reorder the classes of a branch tuple freely, so sorted
/// tuples reach every realizable multiset.
fn branch_tuples(
    group: &FiniteGroup,
    genus_quotient: u64,
    accept: &dyn Fn(&[usize]) -> bool,
) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn extend(
        group: &FiniteGroup,
        genus_quotient: u64,
        stack: &mut Vec<usize>,
        accept: &dyn Fn(&[usize]) -> bool,
        found: &mut BTreeSet<Vec<usize>>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = group.order();
        let indices: Vec<usize> = stack.iter().map(|&x| group.element_order(x)).collect();
        if twice_genus_minus_two(n, genus_quotient, &indices) > 2 * MAX_GENUS as i64 - 2 {
            return;
        }
        if accept(stack) {
            let mut classes: Vec<usize> = stack.iter().map(|&x| group.class_of[x]).collect();
            classes.sort_unstable();
            if found.insert(classes) {
                out.push(stack.clone());
            }
        }
        let floor = stack.last().map_or(0, |&x| group.class_of[x]);
        for x in 0..n {
            if x == group.identity || group.class_of[x] < floor {
                continue;
            }
            stack.push(x);
            extend(group, genus_quotient, stack, accept, found, out);
            stack.pop();
        }
    }
    extend(
        group,
        genus_quotient,
        &mut stack,
        accept,
        &mut found,
        &mut out,
    );
    out
}

/// Covers of `P¹` and of an elliptic curve by the groups of
/// [`small_groups`] with `2 ≤ g_X ≤ MAX_GENUS`.
pub fn corpus() -> Vec<CorpusCover> {
    let mut out = Vec::new();
    for group in small_groups() {
        let order = group.order();
        let rational = |xs: &[usize]| {
            xs.len() >= 3
                && group.product(xs) == group.identity
                && group.generated_order(xs) == order
                && genus_of(order, 0, &indices(&group, xs)).is_some_and(|g| g >= 2)
        };
        for xs in branch_tuples(&group, 0, &rational) {
            out.push(build(&group, 0, &xs));
        }
        let commutators: BTreeSet<usize> = (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .map(|(a, b)| group.commutator(a, b))
            .collect();
        let elliptic = |xs: &[usize]| {
            !xs.is_empty()
                && commutators.contains(&group.inverse[group.product(xs)])
                && genus_of(order, 1, &indices(&group, xs)).is_some_and(|g| g >= 2)
        };
        for xs in branch_tuples(&group, 1, &elliptic) {
            out.push(build(&group, 1, &xs));
        }
    }
    out
}

fn indices(group: &FiniteGroup, xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|&x| group.element_order(x)).collect()
}
