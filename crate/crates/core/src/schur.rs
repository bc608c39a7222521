//! Generating functions for the hook Schur functors of `V = H⁰(X, Ω_X)`.
//!
//! `S_p(V)` is the kernel of `⋀ᵖV ⊗ V → ⋀^{p+1}V` (with `S_0 = 0`), so
//! `σ_V(t) = Σ [S_p V] tᵖ = (1/t)[(t[V] − 1)·λ_V(t) + 1]` where
//! `λ_V(t) = Σ [⋀ᵖV] tᵖ`. Per group element the same identity reads
//! `Sch_V(t, g) = (1/t)[(χ_V(g)t − 1)·Wd_V(t, g) + 1]` with
//! `Wd_V(t, g) = Π (1 + t ξ)` over the eigenvalues `ξ` of `g` on `V`.
//!
//! Two routes to `σ_V` are provided: the representation-ring route through
//! the Molien-type sum for `λ_V`, and the character route that decomposes
//! the per-class polynomials `Sch_V(t, g)` by orthogonality.

use rayon::prelude::*;

use crate::chevalley_weil::canonical_multiplicities;
use crate::cover::CoverData;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::reptheory::{ClassFunction, VirtualRep};
use crate::scalar::Scalar;
use crate::util::binomial;

/// A polynomial in `t` attached to one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolynomial<Q> {
    pub class: usize,
    pub coeffs: Vec<Cyclotomic<Q>>,
}

/// A polynomial in `t` with coefficients in the representation ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRepSeries {
    pub coeffs: Vec<VirtualRep>,
}

impl GradedRepSeries {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `tᵖ`, zero beyond the stored range.
    pub fn coeff(&self, p: usize) -> VirtualRep {
        self.coeffs
            .get(p)
            .cloned()
            .unwrap_or_else(|| VirtualRep::zero(self.coeffs.first().map_or(0, VirtualRep::len)))
    }
}

/// Per-class polynomials `Wd_V(t, g)` of one cover.
#[derive(Clone, Debug)]
pub struct SchurContext<'a, Q> {
    cover: &'a CoverData<Q>,
    canonical: VirtualRep,
    canonical_char: ClassFunction<Q>,
    wedge_polys: Vec<CharPolynomial<Q>>,
}

impl<'a, Q: Scalar> SchurContext<'a, Q> {
    pub fn new(cover: &'a CoverData<Q>) -> Result<Self> {
        let table = cover.table();
        let canonical = canonical_multiplicities(cover)?;
        let canonical_char = table.assemble(&canonical)?;
        let wedge_polys = (0..table.num_classes())
            .into_par_iter()
            .map(|c| wedge_poly_at(cover, &canonical, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(SchurContext {
            cover,
            canonical,
            canonical_char,
            wedge_polys,
        })
    }

    fn dim(&self) -> usize {
        self.cover.genus() as usize
    }

    /// `Wd_V(t, g) = Π_I Π_j (1 + t ξ_{I,j}(g))^{m_I}` for `g` in class `class`.
    pub fn wedge_poly(&self, class: usize) -> &CharPolynomial<Q> {
        &self.wedge_polys[class]
    }

    /// `Sch_V(t, g) = (1/t)[(χ_V(g)t − 1)·Wd_V(t, g) + 1]`.
    pub fn schur_char_poly(&self, class: usize) -> Result<CharPolynomial<Q>> {
        let wd = &self.wedge_polys[class].coeffs;
        let n = self.dim();
        let order = self.cover.table().exponent();
        let trace = self.canonical_char.value(class);
        let constant = &Cyclotomic::one(order) - &wd[0];
        if !constant.is_zero() {
            return Err(Error::InternalConsistency(format!(
                "bracket has constant term {constant}"
            )));
        }
        let zero = Cyclotomic::zero(order);
        let coeffs = (0..=n)
            .map(|p| &(trace * &wd[p]) - wd.get(p + 1).unwrap_or(&zero))
            .collect();
        Ok(CharPolynomial { class, coeffs })
    }

    fn decompose_series(&self, polys: &[CharPolynomial<Q>], what: &str) -> Result<GradedRepSeries> {
        let table = self.cover.table();
        let coeffs = (0..polys[0].coeffs.len())
            .map(|p| {
                let f =
                    ClassFunction::new(polys.iter().map(|poly| poly.coeffs[p].clone()).collect());
                let v = table.decompose(&f)?;
                if !v.is_genuine() {
                    return Err(Error::InconsistentData(format!(
                        "{what} coefficient of t^{p} is {v}, not a representation"
                    )));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedRepSeries { coeffs })
    }

    /// `λ_V(t)`, with `[⋀ᵖV]_I = (1/|G|) Σ_g Wd_V(t, g)_p·χ_I(g⁻¹)`.
    pub fn lambda_series(&self) -> Result<GradedRepSeries> {
        self.decompose_series(&self.wedge_polys, "exterior power")
    }

    /// `σ_V(t) = (1/t)[(t[V] − 1)·λ_V(t) + 1]` in the representation ring.
    pub fn schur_series(&self) -> Result<GradedRepSeries> {
        let table = self.cover.table();
        let lambda = self.lambda_series()?;
        let n = self.dim();
        let g = n as i64;
        let mut coeffs = Vec::with_capacity(n + 1);
        for p in 0..=n {
            let mut c = table.tensor(&self.canonical, &lambda.coeff(p))?;
            c -= &lambda.coeff(p + 1);
            if !c.is_genuine() {
                return Err(Error::InconsistentData(format!(
                    "Schur series coefficient of t^{p} is {c}, not a representation"
                )));
            }
            let expected = g * binomial(g, p as i64) - binomial(g, p as i64 + 1);
            let dim = c.dim(table.dims());
            if dim != expected {
                return Err(Error::InternalConsistency(format!(
                    "Schur series coefficient of t^{p} has dimension {dim}, expected {expected}"
                )));
            }
            coeffs.push(c);
        }
        Ok(GradedRepSeries { coeffs })
    }

    /// `σ_V(t)` as `(1/|G|) Σ_I Σ_g Sch_V(t, g)·χ_I(g⁻¹)·[I]`.
    pub fn assemble_series_from_polys(&self) -> Result<GradedRepSeries> {
        let polys = (0..self.cover.table().num_classes())
            .map(|c| self.schur_char_poly(c))
            .collect::<Result<Vec<_>>>()?;
        self.decompose_series(&polys, "Schur series")
    }

    /// `σ_V(t)` by both routes, failing if they differ.
    pub fn verified_schur_series(&self) -> Result<GradedRepSeries> {
        let molien = self.schur_series()?;
        let characters = self.assemble_series_from_polys()?;
        if molien != characters {
            return Err(Error::InternalConsistency(
                "the two Schur series computations disagree".into(),
            ));
        }
        Ok(molien)
    }
}

fn wedge_poly_at<Q: Scalar>(
    cover: &CoverData<Q>,
    canonical: &VirtualRep,
    class: usize,
) -> Result<CharPolynomial<Q>> {
    let table = cover.table();
    let order = table.exponent();
    let n = table.class(class).element_order;
    let mut eigen = vec![0i64; n];
    for (i, &m) in canonical.mult.iter().enumerate() {
        if m == 0 {
            continue;
        }
        for (k, c) in table.eigenvalue_multiset(i, class)?.into_iter().enumerate() {
            eigen[k] += m * c;
        }
    }
    let dim = cover.genus() as usize;
    let mut coeffs = vec![Cyclotomic::zero(order); dim + 1];
    coeffs[0] = Cyclotomic::one(order);
    let mut degree = 0;
    for (k, &count) in eigen.iter().enumerate() {
        let root = Cyclotomic::root_of_unity(order, (k * (order / n)) as i64)?;
        for _ in 0..count {
            degree += 1;
            for j in (1..=degree).rev() {
                let shifted = &root * &coeffs[j - 1];
                coeffs[j] += &shifted;
            }
        }
    }
    if degree != dim {
        return Err(Error::InternalConsistency(format!(
            "{degree} eigenvalues for a space of dimension {dim}"
        )));
    }
    Ok(CharPolynomial { class, coeffs })
}

pub fn wedge_poly<Q: Scalar>(cover: &CoverData<Q>, class: usize) -> Result<CharPolynomial<Q>> {
    wedge_poly_at(cover, &canonical_multiplicities(cover)?, class)
}

pub fn schur_char_poly<Q: Scalar>(cover: &CoverData<Q>, class: usize) -> Result<CharPolynomial<Q>> {
    SchurContext::new(cover)?.schur_char_poly(class)
}

pub fn lambda_series<Q: Scalar>(cover: &CoverData<Q>) -> Result<GradedRepSeries> {
    SchurContext::new(cover)?.lambda_series()
}

pub fn schur_series<Q: Scalar>(cover: &CoverData<Q>) -> Result<GradedRepSeries> {
    SchurContext::new(cover)?.schur_series()
}

pub fn assemble_series_from_polys<Q: Scalar>(cover: &CoverData<Q>) -> Result<GradedRepSeries> {
    SchurContext::new(cover)?.assemble_series_from_polys()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{hyperelliptic, identity_cover};

    fn ints(p: &CharPolynomial<num_rational::BigRational>) -> Vec<i64> {
        p.coeffs.iter().map(|c| c.as_integer().unwrap()).collect()
    }

    #[test]
    fn wedge_poly_examples() {
        let h = hyperelliptic(4);
        let ctx = SchurContext::new(&h).unwrap();
        assert_eq!(ints(ctx.wedge_poly(0)), vec![1, 4, 6, 4, 1]);
        assert_eq!(ints(ctx.wedge_poly(1)), vec![1, -4, 6, -4, 1]);
    }

    #[test]
    fn schur_poly_examples() {
        let c = identity_cover(2);
        let ctx = SchurContext::new(&c).unwrap();
        assert_eq!(ints(&ctx.schur_char_poly(0).unwrap()), vec![0, 3, 2]);
        let h = hyperelliptic(4);
        let ctx = SchurContext::new(&h).unwrap();
        let sch = ctx.schur_char_poly(1).unwrap();
        assert_eq!(sch.coeffs[1].as_integer().unwrap(), 10);
        let sch0 = ctx.schur_char_poly(0).unwrap();
        for p in 0..=4i64 {
            assert_eq!(
                sch0.coeffs[p as usize].as_integer().unwrap(),
                4 * binomial(4, p) - binomial(4, p + 1)
            );
        }
    }

    #[test]
    fn schur_series_examples() {
        let c = identity_cover(4);
        let s = schur_series(&c).unwrap();
        assert_eq!(s.coeffs[1].mult, vec![10]);
        assert_eq!(s.coeffs[0].mult, vec![0]);
        let h = hyperelliptic(4);
        let ctx = SchurContext::new(&h).unwrap();
        let s = ctx.schur_series().unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.coeffs[1].mult, vec![10, 0]);
        assert_eq!(s, ctx.assemble_series_from_polys().unwrap());
        assert_eq!(ctx.verified_schur_series().unwrap(), s);
    }
}
