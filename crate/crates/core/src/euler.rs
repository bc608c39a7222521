//! Equivariant Euler characteristics `χ_G(E) = [H⁰(X, E)] − [H¹(X, E)]` of
//! `G`-bundles described by degree, rank and local fiber data.
//!
//! The multiplicity of an irreducible `I` is
//!
//! ```text
//! (deg E / |G| + (1 − g_Y)·rk E)·dim I − Σ_Q Σ_{d=1}^{e_Q} (1 − d/e_Q)·n_{d,Q,I}(E)
//! ```
//!
//! where `n_{d,Q,I}(E)` is the multiplicity of `χ_P^d` in `E_P ⊗ I|G_P`. The
//! index `d` is read modulo `e_Q`, so `d = e_Q` is the `d = 0` entry and has
//! weight zero.

use crate::cover::CoverData;
use crate::error::{Error, Result};
use crate::reptheory::VirtualRep;
use crate::scalar::Scalar;

/// Degree, rank and local multiplicities `[point][irreducible][d]` of a
/// `G`-equivariant vector bundle on `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleDescriptor {
    pub degree: i64,
    pub rank: u64,
    pub local: Vec<Vec<Vec<i64>>>,
}

impl BundleDescriptor {
    /// Checks the shape of `local` against the cover and the fiber dimension
    /// count `Σ_d n_{d,Q,I}(E) = rk E · dim I`.
    pub fn new<Q: Scalar>(
        cover: &CoverData<Q>,
        degree: i64,
        rank: u64,
        local: Vec<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InconsistentDescriptor(msg));
        if rank == 0 {
            return bad("rank must be positive".into());
        }
        if local.len() != cover.branch().len() {
            return bad(format!(
                "{} local tables for {} branch points",
                local.len(),
                cover.branch().len()
            ));
        }
        let table = cover.table();
        for (q, point) in cover.branch().iter().enumerate() {
            if local[q].len() != table.num_irreducibles() {
                return bad(format!("{}: wrong number of irreducibles", point.name));
            }
            for (i, row) in local[q].iter().enumerate() {
                if row.len() != point.e {
                    return bad(format!(
                        "{}: expected {} multiplicities",
                        point.name, point.e
                    ));
                }
                if row.iter().any(|&n| n < 0) {
                    return bad(format!("{}: negative multiplicity", point.name));
                }
                let sum: i64 = row.iter().sum();
                if sum != rank as i64 * table.dim(i) {
                    return bad(format!(
                        "{}: multiplicities of {} sum to {sum}, expected {}",
                        point.name,
                        table.irreducibles()[i].name,
                        rank as i64 * table.dim(i)
                    ));
                }
            }
        }
        Ok(BundleDescriptor {
            degree,
            rank,
            local,
        })
    }

    /// Descriptor of `E ⊕ F`.
    pub fn direct_sum(&self, other: &BundleDescriptor) -> BundleDescriptor {
        assert_eq!(self.local.len(), other.local.len());
        let local = self
            .local
            .iter()
            .zip(&other.local)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
                    .collect()
            })
            .collect();
        BundleDescriptor {
            degree: self.degree + other.degree,
            rank: self.rank + other.rank,
            local,
        }
    }
}

/// Descriptor of `Ω_X^{⊗m}`: degree `m(2g_X − 2)`, rank 1, and
/// `n_{d,Q,I}(Ω^m) = n_{(m−d) mod e_Q, Q, I^∨}`.
pub fn omega_power_descriptor<Q: Scalar>(cover: &CoverData<Q>, m: u64) -> BundleDescriptor {
    let local = cover
        .branch()
        .iter()
        .enumerate()
        .map(|(q, point)| {
            let e = point.e as i64;
            (0..cover.num_irreducibles())
                .map(|i| {
                    let dual = cover.local_multiplicities(q, cover.dual(i));
                    (0..e)
                        .map(|d| dual[(m as i64 - d).rem_euclid(e) as usize])
                        .collect()
                })
                .collect()
        })
        .collect();
    BundleDescriptor {
        degree: m as i64 * (2 * cover.genus() as i64 - 2),
        rank: 1,
        local,
    }
}

/// The structure sheaf `O_X`.
pub fn structure_sheaf<Q: Scalar>(cover: &CoverData<Q>) -> BundleDescriptor {
    omega_power_descriptor(cover, 0)
}

/// `χ_G(E)` as a virtual representation.
pub fn euler_characteristic<Q: Scalar>(
    cover: &CoverData<Q>,
    bundle: &BundleDescriptor,
) -> Result<VirtualRep> {
    let table = cover.table();
    let lead = Q::from_frac(bundle.degree, table.group_order() as i64)
        + Q::from_i64((1 - cover.genus_quotient() as i64) * bundle.rank as i64);
    let mut mult = Vec::with_capacity(table.num_irreducibles());
    for i in 0..table.num_irreducibles() {
        let mut value = lead.clone() * Q::from_i64(table.dim(i));
        for (q, point) in cover.branch().iter().enumerate() {
            let e = point.e as i64;
            for (d, &n) in bundle.local[q][i].iter().enumerate().skip(1) {
                if n != 0 {
                    value = value - Q::from_frac((e - d as i64) * n, e);
                }
            }
        }
        match value.to_i64_exact() {
            Some(v) => mult.push(v),
            None => {
                let name = &table.irreducibles()[i].name;
                return Err(Error::InconsistentDescriptor(format!(
                    "multiplicity of {name} is {value}, the fractional ramification terms do not cancel"
                )));
            }
        }
    }
    Ok(VirtualRep::new(mult))
}

/// Local data of `W ⊗ E` for a representation `W`:
/// `n_{d,Q,I}(W⊗E) = Σ_k ⟨χ_P^{d−k}, W^∨⟩·n_{k,Q,I}(E)`.
pub fn tensor_descriptor<Q: Scalar>(
    cover: &CoverData<Q>,
    w: &VirtualRep,
    bundle: &BundleDescriptor,
) -> Result<BundleDescriptor> {
    if !w.is_genuine() {
        return Err(Error::NotARepresentation(format!(
            "{w} has a negative multiplicity"
        )));
    }
    let table = cover.table();
    let dim_w = w.dim(table.dims());
    if dim_w == 0 {
        return Err(Error::NotARepresentation("the zero representation".into()));
    }
    let local = cover
        .branch()
        .iter()
        .enumerate()
        .map(|(q, point)| {
            let e = point.e;
            let res_w = cover.restrict(q, &w.mult);
            bundle.local[q]
                .iter()
                .map(|row| {
                    (0..e)
                        .map(|d| (0..e).map(|k| res_w[(k + e - d) % e] * row[k]).sum())
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(BundleDescriptor {
        degree: bundle.degree * dim_w,
        rank: bundle.rank * dim_w as u64,
        local,
    })
}

/// `χ_G(W ⊗ E)` for a representation `W` with trivial bundle structure.
pub fn euler_tensor_trivial<Q: Scalar>(
    cover: &CoverData<Q>,
    w: &VirtualRep,
    bundle: &BundleDescriptor,
) -> Result<VirtualRep> {
    euler_characteristic(cover, &tensor_descriptor(cover, w, bundle)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley_weil::canonical_multiplicities;
    use crate::fixtures::{cyclic_cover, hyperelliptic, identity_cover};

    #[test]
    fn omega_descriptor_examples() {
        let h = hyperelliptic(4);
        assert_eq!(structure_sheaf(&h).local[0], vec![vec![1, 0], vec![0, 1]]);
        let om = omega_power_descriptor(&h, 1);
        assert_eq!(om.local[3][0], vec![0, 1]);
        assert_eq!(om.degree, 6);
        let om2 = omega_power_descriptor(&h, 2);
        assert_eq!(om2.local[3][1], vec![0, 1]);
        let c = cyclic_cover(3, &[1, 1, 1, 1, 2]);
        let o = structure_sheaf(&c);
        for q in 0..5 {
            for i in 0..3 {
                assert_eq!(o.local[q][i], c.local_multiplicities(q, i));
            }
        }
    }

    #[test]
    fn riemann_roch_for_omega() {
        let c = identity_cover(4);
        let chi = euler_characteristic(&c, &omega_power_descriptor(&c, 1)).unwrap();
        assert_eq!(chi.mult, vec![3]);
    }

    #[test]
    fn hyperelliptic_euler_characteristics() {
        let h = hyperelliptic(4);
        let chi = euler_characteristic(&h, &omega_power_descriptor(&h, 1)).unwrap();
        assert_eq!(chi.mult, vec![-1, 4]);
        let o = euler_characteristic(&h, &structure_sheaf(&h)).unwrap();
        assert_eq!(o.mult, vec![1, -4]);
        assert_eq!(o.dim(h.table().dims()), -3);
    }

    #[test]
    fn euler_matches_chevalley_weil() {
        for c in [
            cyclic_cover(3, &[1, 1, 1, 1, 2]),
            cyclic_cover(3, &[1, 1, 1, 1, 1, 1]),
            cyclic_cover(5, &[1, 1, 1, 2]),
        ] {
            let chi = euler_characteristic(&c, &omega_power_descriptor(&c, 1)).unwrap();
            let mut m = canonical_multiplicities(&c).unwrap();
            m.mult[c.trivial()] -= 1;
            assert_eq!(chi, m);
        }
    }

    #[test]
    fn tensoring_with_representations() {
        let h = hyperelliptic(4);
        let om = omega_power_descriptor(&h, 1);
        let triv = VirtualRep::irreducible(2, 0);
        assert_eq!(
            euler_tensor_trivial(&h, &triv, &om).unwrap(),
            euler_characteristic(&h, &om).unwrap()
        );
        let sgn = VirtualRep::irreducible(2, 1);
        let chi = euler_tensor_trivial(&h, &sgn, &om).unwrap();
        assert_eq!(chi.mult, vec![4, -1]);
        let neg = VirtualRep::new(vec![1, -1]);
        assert!(matches!(
            euler_tensor_trivial(&h, &neg, &om),
            Err(Error::NotARepresentation(_))
        ));
    }

    #[test]
    fn descriptor_checks_fiber_dimensions() {
        let h = hyperelliptic(4);
        let mut local = structure_sheaf(&h).local;
        assert!(BundleDescriptor::new(&h, 0, 1, local.clone()).is_ok());
        local[0][1] = vec![1, 1];
        assert!(matches!(
            BundleDescriptor::new(&h, 0, 1, local),
            Err(Error::InconsistentDescriptor(_))
        ));
    }
}
