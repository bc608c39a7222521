//! The `G`-module structure of `V = H⁰(X, Ω_X)`.
//!
//! The multiplicity of an irreducible `I` is
//!
//! ```text
//! m_I = (g_Y − 1)·dim I + Σ_Q Σ_{d=0}^{e_Q−1} (d / e_Q)·n_{d,Q,I} + δ_{I,triv}
//! ```
//!
//! with `n_{d,Q,I}` the multiplicity of `χ_P^d` in `I|G_P` and `χ_P` the
//! tangent character. With the cotangent character instead, the weight
//! becomes the fractional part `{−d/e_Q}`; the two agree for involutions.

use crate::cover::CoverData;
use crate::error::{Error, Result};
use crate::reptheory::{ClassFunction, VirtualRep};
use crate::scalar::Scalar;

/// Multiplicities `m_I` of the irreducibles in `H⁰(X, Ω_X)`.
pub fn canonical_multiplicities<Q: Scalar>(cover: &CoverData<Q>) -> Result<VirtualRep> {
    let table = cover.table();
    let gy = cover.genus_quotient() as i64;
    let mut mult = Vec::with_capacity(table.num_irreducibles());
    for i in 0..table.num_irreducibles() {
        let mut m = Q::from_i64((gy - 1) * table.dim(i) + i64::from(i == cover.trivial()));
        for (q, point) in cover.branch().iter().enumerate() {
            let e = point.e as i64;
            for (d, &n) in cover.local_multiplicities(q, i).iter().enumerate() {
                if n != 0 {
                    m = m + Q::from_frac(d as i64 * n, e);
                }
            }
        }
        let name = &table.irreducibles()[i].name;
        match m.to_i64_exact() {
            Some(v) if v >= 0 => mult.push(v),
            _ => {
                return Err(Error::InconsistentCover(format!(
                    "multiplicity of {name} in H0(Omega) is {m}, not a non-negative integer"
                )))
            }
        }
    }
    let v = VirtualRep::new(mult);
    let dim = v.dim(table.dims());
    if dim != cover.genus() as i64 {
        return Err(Error::InternalConsistency(format!(
            "H0(Omega) has dimension {dim}, Riemann-Hurwitz gives genus {}",
            cover.genus()
        )));
    }
    Ok(v)
}

/// Character of `H⁰(X, Ω_X)`; its value at the identity is `g_X`.
pub fn h0_omega_character<Q: Scalar>(cover: &CoverData<Q>) -> Result<ClassFunction<Q>> {
    cover.table().assemble(&canonical_multiplicities(cover)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::BranchPoint;
    use crate::fixtures::{cyclic, cyclic_cover, hyperelliptic, identity_cover, s3};

    #[test]
    fn identity_cover_has_g_invariant_forms() {
        assert_eq!(
            canonical_multiplicities(&identity_cover(5)).unwrap().mult,
            vec![5]
        );
        let chi = h0_omega_character(&identity_cover(4)).unwrap();
        assert_eq!(chi.value(0).as_integer().unwrap(), 4);
    }

    #[test]
    fn hyperelliptic_forms_are_odd() {
        let h = hyperelliptic(4);
        assert_eq!(canonical_multiplicities(&h).unwrap().mult, vec![0, 4]);
        let chi = h0_omega_character(&h).unwrap();
        assert_eq!(chi.value(0).as_integer().unwrap(), 4);
        assert_eq!(chi.value(1).as_integer().unwrap(), -4);
    }

    #[test]
    fn order_three_example() {
        let c = cyclic_cover(3, &[1, 1, 1, 1, 2]);
        let m = canonical_multiplicities(&c).unwrap();
        assert_eq!(m.mult, vec![0, 1, 2]);
        assert_eq!(m.dim(c.table().dims()), 3);
    }

    #[test]
    fn elliptic_quotient_example() {
        let c = CoverData::new(
            cyclic(2),
            1,
            vec![
                BranchPoint::generator("A", 2, 1, 1),
                BranchPoint::generator("B", 2, 1, 1),
            ],
        )
        .unwrap();
        assert_eq!(c.genus(), 2);
        let chi = h0_omega_character(&c).unwrap();
        assert_eq!(chi.value(0).as_integer().unwrap(), 2);
        assert_eq!(canonical_multiplicities(&c).unwrap().mult, vec![1, 1]);
    }

    #[test]
    fn nonabelian_example() {
        let branch = vec![
            BranchPoint::generator("A", 2, 1, 1),
            BranchPoint::generator("B", 2, 1, 1),
            BranchPoint::generator("C", 3, 2, 1),
            BranchPoint::generator("D", 3, 2, 1),
        ];
        let c = CoverData::new(s3(), 0, branch).unwrap();
        let m = canonical_multiplicities(&c).unwrap();
        assert_eq!(m.dim(c.table().dims()), c.genus() as i64);
    }
}
