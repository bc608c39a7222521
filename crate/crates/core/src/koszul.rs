//! Kernel-bundle terms and Koszul differences of the canonical embedding.
//!
//! `M_Ω` is the kernel of the evaluation map `V ⊗ O_X → Ω_X`, where
//! `V = H⁰(X, Ω_X)`. For `0 ≤ p ≤ g_X − 2` the bundle `⋀ᵖM_Ω ⊗ Ω²` has no
//! higher cohomology, so its equivariant Euler characteristic is the class of
//! `H⁰(⋀ᵖM_Ω ⊗ Ω²)`. Its fiber at a branch point is read off from the
//! Koszul resolution `⋀ᵖM_Ω = Σ_i (−1)^i ⋀^{p−i}V ⊗ Ω^i` in the Grothendieck
//! group, with `V` entering the fibers through its dual.
//!
//! The Koszul difference `[K_{p,1}] − [K_{p−1,2}]` then equals
//! `[⋀ᵖV ⊗ V] − [⋀^{p+1}V] − [H⁰(⋀^{p−1}M_Ω ⊗ Ω²)]` for `1 ≤ p ≤ g_X − 3`.
//! It carries that meaning only when the canonical map is an embedding,
//! i.e. for non-hyperelliptic `X`; see [`CoverData::canonical_embedding`].

use crate::chevalley_weil::canonical_multiplicities;
use crate::cover::CoverData;
use crate::error::{Error, Result};
use crate::euler::{euler_characteristic, BundleDescriptor};
use crate::reptheory::{ClassFunction, VirtualRep};
use crate::scalar::Scalar;
use crate::schur::SchurContext;
use crate::util::binomial;

/// `(rk, deg)` of `⋀ᵖM_Ω ⊗ Ω²` on a curve of genus `g`:
/// `rk = C(g−1, p)` and `deg = 2(2g − 2 − p)·C(g−1, p)`.
pub fn rk_deg_kernel_wedge(g: u64, p: u64) -> Result<(u64, i64)> {
    let g = g as i64;
    let p_i = p as i64;
    if g < 1 || p_i > g - 1 {
        return Err(Error::domain("p", p_i, format!("0..={}", g - 1)));
    }
    let rk = binomial(g - 1, p_i);
    Ok((rk as u64, 2 * (2 * g - 2 - p_i) * rk))
}

/// Partner index `k′ = (i + 2 − k) mod e`; the map `k ↦ k′` is an involution
/// of `{0, …, e−1}`.
pub fn index_partner(e: usize, i: usize, k: usize) -> usize {
    ((i + 2) as i64 - k as i64).rem_euclid(e as i64) as usize
}

/// Exterior powers of a representation of `Z/e` given by multiplicities
/// `a_j` of `χ^j`: entry `[r][d]` is
/// `Σ_{Σk_j = r, Σ j·k_j ≡ d} Π_j C(a_j, k_j)`.
pub fn cyclic_wedge_table(a: &[i64], max_r: usize) -> Vec<Vec<i64>> {
    let e = a.len();
    let mut acc = vec![vec![0i64; e]; max_r + 1];
    acc[0][0] = 1;
    for (j, &aj) in a.iter().enumerate() {
        if aj == 0 {
            continue;
        }
        let mut next = vec![vec![0i64; e]; max_r + 1];
        for r in 0..=max_r {
            for d in 0..e {
                let c = acc[r][d];
                if c == 0 {
                    continue;
                }
                for k in 0..=(aj as usize).min(max_r - r) {
                    next[r + k][(d + j * k) % e] += c * binomial(aj, k as i64);
                }
            }
        }
        acc = next;
    }
    acc
}

/// Precomputed data for the Koszul computations on one cover.
#[derive(Clone, Debug)]
pub struct KoszulContext<'a, Q> {
    cover: &'a CoverData<Q>,
    canonical: VirtualRep,
    canonical_char: ClassFunction<Q>,
    wedge_reps: Vec<VirtualRep>,
    /// `[q][r][d]`: multiplicity of `χ_P^d` in `⋀^r V` restricted to `G_P`.
    local_wedge: Vec<Vec<Vec<i64>>>,
}

impl<'a, Q: Scalar> KoszulContext<'a, Q> {
    /// Builds the context, computing the local exterior powers both by the
    /// multinomial formula and by restricting Newton-identity characters,
    /// and failing if the two disagree.
    pub fn new(cover: &'a CoverData<Q>) -> Result<Self> {
        let table = cover.table();
        let g = cover.genus() as usize;
        let canonical = canonical_multiplicities(cover)?;
        let canonical_char = table.assemble(&canonical)?;
        let wedge_reps = table
            .exterior_powers(&canonical_char, g)?
            .iter()
            .map(|f| table.decompose(f))
            .collect::<Result<Vec<_>>>()?;
        let mut local_wedge = Vec::with_capacity(cover.branch().len());
        for (q, point) in cover.branch().iter().enumerate() {
            let multinomial = cyclic_wedge_table(&cover.restrict(q, &canonical.mult), g);
            for (r, rep) in wedge_reps.iter().enumerate() {
                let newton = cover.restrict(q, &rep.mult);
                if newton != multinomial[r] {
                    return Err(Error::InternalConsistency(format!(
                        "{}: exterior power {r} restricts to {:?} by Newton's identities but {:?} by the multinomial formula",
                        point.name, newton, multinomial[r]
                    )));
                }
            }
            local_wedge.push(multinomial);
        }
        Ok(KoszulContext {
            cover,
            canonical,
            canonical_char,
            wedge_reps,
            local_wedge,
        })
    }

    pub fn cover(&self) -> &CoverData<Q> {
        self.cover
    }

    pub fn genus(&self) -> u64 {
        self.cover.genus()
    }

    /// `[V]`, the class of `H⁰(Ω_X)`.
    pub fn canonical(&self) -> &VirtualRep {
        &self.canonical
    }

    pub fn canonical_character(&self) -> &ClassFunction<Q> {
        &self.canonical_char
    }

    /// `[⋀^r V]`, zero for `r > g_X`.
    pub fn wedge(&self, r: usize) -> VirtualRep {
        self.wedge_reps
            .get(r)
            .cloned()
            .unwrap_or_else(|| VirtualRep::zero(self.cover.num_irreducibles()))
    }

    fn check_point(&self, q: usize, d: usize) -> Result<usize> {
        let point = self.cover.branch().get(q).ok_or_else(|| {
            Error::domain(
                "branch point",
                q as i64,
                format!("0..{}", self.cover.branch().len()),
            )
        })?;
        if d >= point.e {
            return Err(Error::domain("d", d as i64, format!("0..{}", point.e)));
        }
        Ok(point.e)
    }

    fn local_wedge_at(&self, q: usize, r: usize, d: usize) -> i64 {
        self.local_wedge[q].get(r).map_or(0, |row| row[d])
    }

    /// `⟨χ_P^d, ⋀^r V⟩` at branch point `q`.
    pub fn local_wedge_mult(&self, q: usize, d: usize, r: usize) -> Result<i64> {
        self.check_point(q, d)?;
        Ok(self.local_wedge_at(q, r, d))
    }

    fn check_p(&self, p: u64) -> Result<()> {
        let g = self.genus();
        if p + 1 > g {
            return Err(Error::domain(
                "p",
                p as i64,
                format!("0..={}", g as i64 - 1),
            ));
        }
        Ok(())
    }

    /// `n_{d,Q,I}(⋀ᵖM_Ω ⊗ Ω²) =
    /// Σ_{i=0}^{p} (−1)^i Σ_k ⟨χ_P^{d−k}, ⋀^{p−i}V^∨⟩·n_{(i+2−k) mod e, Q, I^∨}`.
    pub fn kernel_local_mult(&self, q: usize, d: usize, i: usize, p: u64) -> Result<i64> {
        let e = self.check_point(q, d)?;
        self.check_p(p)?;
        if i >= self.cover.num_irreducibles() {
            return Err(Error::domain(
                "irreducible",
                i as i64,
                format!("0..{}", self.cover.num_irreducibles()),
            ));
        }
        let value = self.kernel_local_raw(q, e, d, i, p as usize);
        if value < 0 {
            return Err(Error::InconsistentData(format!(
                "{}: fiber multiplicity {value} of {} at d = {d} for p = {p}",
                self.cover.branch()[q].name,
                self.cover.table().irreducibles()[i].name
            )));
        }
        Ok(value)
    }

    fn kernel_local_raw(&self, q: usize, e: usize, d: usize, i: usize, p: usize) -> i64 {
        let dual = self.cover.local_multiplicities(q, self.cover.dual(i));
        let mut total = 0;
        for s in 0..=p {
            let mut term = 0;
            for k in 0..e {
                let w = self.local_wedge_at(q, p - s, (k + e - d) % e);
                if w != 0 {
                    term += w * dual[index_partner(e, s, k)];
                }
            }
            total += if s % 2 == 0 { term } else { -term };
        }
        total
    }

    /// Descriptor of `⋀ᵖM_Ω ⊗ Ω²`.
    pub fn kernel_descriptor(&self, p: u64) -> Result<BundleDescriptor> {
        let (rank, degree) = rk_deg_kernel_wedge(self.genus(), p)?;
        let mut local = Vec::with_capacity(self.cover.branch().len());
        for (q, point) in self.cover.branch().iter().enumerate() {
            let mut rows = Vec::with_capacity(self.cover.num_irreducibles());
            for i in 0..self.cover.num_irreducibles() {
                rows.push(
                    (0..point.e)
                        .map(|d| self.kernel_local_mult(q, d, i, p))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            local.push(rows);
        }
        BundleDescriptor::new(self.cover, degree, rank, local)
    }

    fn check_h0_range(&self, p: u64) -> Result<()> {
        let g = self.genus();
        if p + 1 == g {
            return Err(Error::UnsupportedRange {
                name: "p",
                value: p as i64,
                reason: "H1 of the top kernel bundle term is one-dimensional with an unspecified group action",
            });
        }
        if p + 1 > g {
            return Err(Error::domain(
                "p",
                p as i64,
                format!("0..={}", g as i64 - 2),
            ));
        }
        Ok(())
    }

    /// `[H⁰(⋀ᵖM_Ω ⊗ Ω²)]` through the equivariant Euler characteristic of the
    /// kernel descriptor.
    pub fn h0_kernel_wedge_via_euler(&self, p: u64) -> Result<VirtualRep> {
        self.check_h0_range(p)?;
        euler_characteristic(self.cover, &self.kernel_descriptor(p)?)
    }

    /// `[H⁰(⋀ᵖM_Ω ⊗ Ω²)]` by the closed formula
    ///
    /// ```text
    /// C(g−1, p)·(2(g−1−p)/|G| + g_Y − 1)·dim I
    ///   + Σ_Q Σ_{i=0}^{p} (−1)^i Σ_d ⟨χ_P^d, ⋀^{p−i}V^∨⟩ Σ_k {(d+i+1−k)/e_Q}·n_{k,Q,I^∨}
    /// ```
    pub fn h0_kernel_wedge_closed_form(&self, p: u64) -> Result<VirtualRep> {
        self.check_h0_range(p)?;
        let table = self.cover.table();
        let g = self.genus() as i64;
        let pi = p as i64;
        let lead = Q::from_i64(binomial(g - 1, pi))
            * (Q::from_frac(2 * (g - 1 - pi), table.group_order() as i64)
                + Q::from_i64(self.cover.genus_quotient() as i64 - 1));
        let p = p as usize;
        let mut mult = Vec::with_capacity(table.num_irreducibles());
        for irr in 0..table.num_irreducibles() {
            let mut value = lead.clone() * Q::from_i64(table.dim(irr));
            for (q, point) in self.cover.branch().iter().enumerate() {
                let e = point.e;
                let dual = self.cover.local_multiplicities(q, self.cover.dual(irr));
                let mut acc: i64 = 0;
                for s in 0..=p {
                    let mut term = 0;
                    for d in 0..e {
                        let w = self.local_wedge_at(q, p - s, (e - d) % e);
                        if w == 0 {
                            continue;
                        }
                        for (k, &n) in dual.iter().enumerate() {
                            term += w * n * ((d + s + 1 + e - k) % e) as i64;
                        }
                    }
                    acc += if s % 2 == 0 { term } else { -term };
                }
                value = value + Q::from_frac(acc, e as i64);
            }
            match value.to_i64_exact() {
                Some(v) => mult.push(v),
                None => {
                    return Err(Error::InconsistentData(format!(
                        "multiplicity of {} is {value}, the fractional ramification terms do not cancel",
                        table.irreducibles()[irr].name
                    )))
                }
            }
        }
        Ok(VirtualRep::new(mult))
    }

    /// `[H⁰(⋀ᵖM_Ω ⊗ Ω²)]` for `0 ≤ p ≤ g_X − 2`, computed by both the closed
    /// formula and the Euler characteristic route, which must agree.
    pub fn h0_kernel_wedge(&self, p: u64) -> Result<VirtualRep> {
        let closed = self.h0_kernel_wedge_closed_form(p)?;
        let via_euler = self.h0_kernel_wedge_via_euler(p)?;
        if closed != via_euler {
            return Err(Error::InternalConsistency(format!(
                "kernel term for p = {p}: closed formula gives {closed}, Euler characteristic gives {via_euler}"
            )));
        }
        if !closed.is_genuine() {
            return Err(Error::InconsistentData(format!(
                "kernel term for p = {p} has negative multiplicities {closed}"
            )));
        }
        let g = self.genus() as i64;
        let expected = binomial(g - 1, p as i64) * (3 * g - 3 - 2 * p as i64);
        let dim = closed.dim(self.cover.table().dims());
        if dim != expected {
            return Err(Error::InternalConsistency(format!(
                "kernel term for p = {p} has dimension {dim}, expected {expected}"
            )));
        }
        Ok(closed)
    }

    /// `[⋀ᵖV ⊗ V] − [⋀^{p+1}V]`.
    pub fn hook_term(&self, p: usize) -> Result<VirtualRep> {
        let table = self.cover.table();
        Ok(&table.tensor(&self.wedge(p), &self.canonical)? - &self.wedge(p + 1))
    }

    fn check_difference_range(&self, p: u64) -> Result<()> {
        let g = self.genus() as i64;
        if g < 4 {
            return Err(Error::domain("genus", g, "4 and above"));
        }
        if p < 1 || p as i64 > g - 3 {
            return Err(Error::domain("p", p as i64, format!("1..={}", g - 3)));
        }
        Ok(())
    }

    /// `[K_{p,1}] − [K_{p−1,2}] = [⋀ᵖV⊗V] − [⋀^{p+1}V] − [H⁰(⋀^{p−1}M_Ω⊗Ω²)]`
    /// for `1 ≤ p ≤ g_X − 3`.
    pub fn koszul_difference(&self, p: u64) -> Result<VirtualRep> {
        self.check_difference_range(p)?;
        let kernel = self.h0_kernel_wedge(p - 1)?;
        Ok(&self.hook_term(p as usize)? - &kernel)
    }

    /// [`Self::koszul_difference`], additionally checking the hook term against
    /// the Schur-functor series coefficient of `t^p`.
    pub fn koszul_difference_checked(
        &self,
        p: u64,
        schur: &SchurContext<'_, Q>,
    ) -> Result<VirtualRep> {
        self.check_difference_range(p)?;
        let hook = self.hook_term(p as usize)?;
        let series = schur.schur_series()?;
        if series.coeffs[p as usize] != hook {
            return Err(Error::InternalConsistency(format!(
                "hook term {hook} differs from the Schur series coefficient {}",
                series.coeffs[p as usize]
            )));
        }
        Ok(&hook - &self.h0_kernel_wedge(p - 1)?)
    }
}

/// `⟨χ_P^d, ⋀^r H⁰(Ω_X)⟩` at branch point `q`.
pub fn local_wedge_mult<Q: Scalar>(
    cover: &CoverData<Q>,
    q: usize,
    d: usize,
    r: usize,
) -> Result<i64> {
    KoszulContext::new(cover)?.local_wedge_mult(q, d, r)
}

/// `n_{d,Q,I}(⋀ᵖM_Ω ⊗ Ω²)` at branch point `q` for irreducible `i`.
pub fn kernel_local_mult<Q: Scalar>(
    cover: &CoverData<Q>,
    q: usize,
    d: usize,
    i: usize,
    p: u64,
) -> Result<i64> {
    KoszulContext::new(cover)?.kernel_local_mult(q, d, i, p)
}

/// `[H⁰(⋀ᵖM_Ω ⊗ Ω²)]` for `0 ≤ p ≤ g_X − 2`.
pub fn h0_kernel_wedge<Q: Scalar>(cover: &CoverData<Q>, p: u64) -> Result<VirtualRep> {
    KoszulContext::new(cover)?.h0_kernel_wedge(p)
}

/// `[K_{p,1}] − [K_{p−1,2}]` for `1 ≤ p ≤ g_X − 3`, cross-checked against the
/// Schur-functor series.
pub fn koszul_difference<Q: Scalar>(cover: &CoverData<Q>, p: u64) -> Result<VirtualRep> {
    let ctx = KoszulContext::new(cover)?;
    let schur = SchurContext::new(cover)?;
    ctx.koszul_difference_checked(p, &schur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::omega_power_descriptor;
    use crate::fixtures::{cyclic_cover, hyperelliptic, identity_cover};

    #[test]
    fn rank_and_degree() {
        assert_eq!(rk_deg_kernel_wedge(4, 1).unwrap(), (3, 30));
        assert_eq!(rk_deg_kernel_wedge(6, 0).unwrap(), (1, 20));
        assert_eq!(rk_deg_kernel_wedge(5, 2).unwrap(), (6, 72));
        assert!(matches!(
            rk_deg_kernel_wedge(4, 4),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn local_wedge_examples() {
        let h = hyperelliptic(4);
        let ctx = KoszulContext::new(&h).unwrap();
        assert_eq!(ctx.local_wedge_mult(0, 0, 0).unwrap(), 1);
        assert_eq!(ctx.local_wedge_mult(0, 1, 0).unwrap(), 0);
        assert_eq!(ctx.local_wedge_mult(0, 0, 2).unwrap(), 6);
        assert_eq!(ctx.local_wedge_mult(0, 1, 2).unwrap(), 0);
        for r in 0..=4 {
            let total: i64 = (0..2).map(|d| ctx.local_wedge_mult(3, d, r).unwrap()).sum();
            assert_eq!(total, binomial(4, r as i64));
        }
        assert!(ctx.local_wedge_mult(0, 2, 1).is_err());
    }

    #[test]
    fn kernel_local_examples() {
        let c = cyclic_cover(3, &[1, 1, 1, 1, 1, 1]);
        let ctx = KoszulContext::new(&c).unwrap();
        let om2 = omega_power_descriptor(&c, 2);
        for q in 0..6 {
            for i in 0..3 {
                for d in 0..3 {
                    assert_eq!(
                        ctx.kernel_local_mult(q, d, i, 0).unwrap(),
                        om2.local[q][i][d]
                    );
                }
                for p in 0..4 {
                    let total: i64 = (0..3)
                        .map(|d| ctx.kernel_local_mult(q, d, i, p).unwrap())
                        .sum();
                    assert_eq!(total, binomial(3, p as i64));
                }
            }
        }
    }

    #[test]
    fn hyperelliptic_kernel_fibers() {
        // V_P(M) = V − V_P(Ω) with V = 4·sgn restricting to 4χ and V_P(Ω) = χ,
        // so M_P ⊗ Ω_P² = 3χ·χ² = 3χ and the trivial irreducible sees d = 1.
        let h = hyperelliptic(4);
        let ctx = KoszulContext::new(&h).unwrap();
        assert_eq!(ctx.kernel_local_mult(0, 0, 0, 1).unwrap(), 0);
        assert_eq!(ctx.kernel_local_mult(0, 1, 0, 1).unwrap(), 3);
        assert_eq!(ctx.kernel_local_mult(0, 0, 1, 1).unwrap(), 3);
    }

    #[test]
    fn trivial_group_kernel_terms() {
        assert_eq!(
            h0_kernel_wedge(&identity_cover(4), 1).unwrap().mult,
            vec![21]
        );
        for g in 3..8 {
            assert_eq!(
                h0_kernel_wedge(&identity_cover(g), 0).unwrap().mult,
                vec![3 * g as i64 - 3]
            );
        }
        let err = h0_kernel_wedge(&identity_cover(4), 3).unwrap_err();
        assert!(matches!(err, Error::UnsupportedRange { .. }));
        assert!(matches!(
            h0_kernel_wedge(&identity_cover(4), 4),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn hyperelliptic_kernel_term() {
        let h = hyperelliptic(4);
        let k = h0_kernel_wedge(&h, 1).unwrap();
        assert_eq!(k.dim(h.table().dims()), 21);
        assert!(k.is_genuine());
    }

    #[test]
    fn quadrics_through_canonical_curves() {
        assert_eq!(
            koszul_difference(&identity_cover(4), 1).unwrap().mult,
            vec![1]
        );
        assert_eq!(
            koszul_difference(&identity_cover(5), 1).unwrap().mult,
            vec![3]
        );
        let h = hyperelliptic(4);
        let d = koszul_difference(&h, 1).unwrap();
        assert_eq!(d.dim(h.table().dims()), 1);
        assert!(matches!(
            koszul_difference(&identity_cover(4), 2),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            koszul_difference(&identity_cover(3), 1),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn index_partner_is_an_involution() {
        for e in 1..=12 {
            for i in 0..=8 {
                for k in 0..e {
                    assert_eq!(index_partner(e, i, index_partner(e, i, k)), k);
                }
            }
        }
    }

    #[test]
    fn wedge_table_examples() {
        assert_eq!(cyclic_wedge_table(&[0, 4], 2)[2], vec![6, 0]);
        assert_eq!(cyclic_wedge_table(&[0, 1, 1], 2)[2], vec![1, 0, 0]);
        assert_eq!(cyclic_wedge_table(&[5, 0, 0], 3)[3], vec![10, 0, 0]);
    }
}
