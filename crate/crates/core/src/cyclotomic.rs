//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(ζ_N)` is stored as its coefficient vector in the power
//! basis `ζ^0 .. ζ^{φ(N)-1}`, obtained by reducing modulo `x^N - 1` and then
//! modulo the N-th cyclotomic polynomial `Φ_N`. The reduced vector is unique,
//! so equality is coefficient equality.
//!
//! Binary operations require both operands to live in the same field; use
//! [`Cyclotomic::embed`] to move a value into a larger field first.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element of the cyclotomic field `Q(ζ_N)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<Q> {
    order: usize,
    coeffs: Vec<Q>,
}

type PolyCache = RwLock<HashMap<usize, Arc<Vec<i64>>>>;

fn poly_cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, lowest degree first.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    cyclotomic_polynomial_shared(n).as_ref().clone()
}

fn cyclotomic_polynomial_shared(n: usize) -> Arc<Vec<i64>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 = prod_{d | n} Φ_d
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let divisor = cyclotomic_polynomial_shared(d);
        poly = divide_monic(&poly, &divisor);
    }
    let poly = Arc::new(poly);
    poly_cache().write().unwrap().insert(n, poly.clone());
    poly
}

/// Exact quotient of `num` by the monic polynomial `den`.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    quot
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

impl<Q: Scalar> Cyclotomic<Q> {
    fn check_order(order: usize) -> Result<()> {
        if order == 0 {
            Err(Error::InvalidOrder(order))
        } else {
            Ok(())
        }
    }

    /// Builds the canonical form of `Σ raw[j] ζ_order^j`; `raw` may be of any length.
    pub fn from_power_basis(order: usize, raw: Vec<Q>) -> Result<Self> {
        Self::check_order(order)?;
        Ok(Self::reduce(order, raw))
    }

    fn reduce(order: usize, mut raw: Vec<Q>) -> Self {
        if raw.len() > order {
            let tail = raw.split_off(order);
            for (i, c) in tail.iter().enumerate() {
                if !c.is_zero() {
                    raw[i % order].add_ref(c);
                }
            }
        }
        let phi = cyclotomic_polynomial_shared(order);
        let deg = phi.len() - 1;
        for i in (deg..raw.len()).rev() {
            if raw[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut raw[i], Q::zero());
            for (j, &pj) in phi[..deg].iter().enumerate() {
                let slot = &mut raw[i - deg + j];
                match pj {
                    0 => {}
                    1 => slot.sub_ref(&c),
                    -1 => slot.add_ref(&c),
                    _ => slot.add_product(&c, &Q::from_i64(-pj)),
                }
            }
        }
        raw.resize(deg, Q::zero());
        Cyclotomic { order, coeffs: raw }
    }

    fn degree(order: usize) -> usize {
        cyclotomic_polynomial_shared(order).len() - 1
    }

    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "cyclotomic field of order 0");
        Cyclotomic {
            order,
            coeffs: vec![Q::zero(); Self::degree(order)],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_rational(order, Q::one())
    }

    pub fn from_rational(order: usize, value: Q) -> Self {
        let mut x = Self::zero(order);
        x.coeffs[0] = value;
        x
    }

    pub fn from_integer(order: usize, value: i64) -> Self {
        Self::from_rational(order, Q::from_i64(value))
    }

    /// `ζ_order^k`, with `k` taken modulo `order`.
    pub fn root_of_unity(order: usize, k: i64) -> Result<Self> {
        Self::check_order(order)?;
        let k = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Q::zero(); k + 1];
        raw[k] = Q::one();
        Ok(Self::reduce(order, raw))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical coefficients of `ζ^0, …, ζ^{φ(order)−1}`.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Q::is_zero)
    }

    pub fn as_rational(&self) -> Result<Q> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// The value as an `i64`, if it is a rational integer.
    pub fn as_integer(&self) -> Result<i64> {
        let q = self.as_rational()?;
        q.to_i64_exact()
            .ok_or_else(|| Error::NotRational(format!("{q} is not an integer")))
    }

    /// The same element expressed in `Q(ζ_m)`; requires `order | m`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        Self::check_order(m)?;
        if !m.is_multiple_of(self.order) {
            return Err(Error::IncompatibleOrder {
                from: self.order,
                to: m,
            });
        }
        if m == self.order {
            return Ok(self.clone());
        }
        let step = m / self.order;
        let mut raw = vec![Q::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        Ok(Self::reduce(m, raw))
    }

    /// Image under the automorphism `ζ ↦ ζ^k`; `k` must be a unit mod the order.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.order as i64;
        let k = k.rem_euclid(n);
        if k.gcd(&n) != 1 {
            return Err(Error::Domain {
                name: "galois exponent",
                value: k,
                range: format!("units modulo {n}"),
            });
        }
        let mut raw = vec![Q::zero(); self.order];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(j as i64 * k % n) as usize] = c.clone();
            }
        }
        Ok(Self::reduce(self.order, raw))
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// Multiplicative inverse, `None` for zero.
    ///
    /// Computed as the product of the nontrivial Galois conjugates divided by
    /// the (rational) field norm.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.order as i64;
        let mut others = Self::one(self.order);
        for k in (2..n).filter(|k| k.gcd(&n) == 1) {
            others = &others * &self.galois(k).expect("unit exponent");
        }
        let norm = (self * &others)
            .as_rational()
            .expect("the field norm is rational");
        Some(others.scale(&(Q::one() / norm)))
    }

    /// `Σ a_i·b_i` over pairs in `Q(ζ_order)`, reduced once at the end.
    pub fn sum_of_products<'b>(
        order: usize,
        pairs: impl IntoIterator<Item = (&'b Self, &'b Self)>,
    ) -> Self
    where
        Q: 'b,
    {
        let deg = Self::degree(order);
        let mut raw = vec![Q::zero(); 2 * deg - 1];
        for (x, y) in pairs {
            assert!(
                x.order == order && y.order == order,
                "cyclotomic operands live in different fields; embed them first"
            );
            for (i, a) in x.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in y.coeffs.iter().enumerate() {
                    if !b.is_zero() {
                        raw[i + j].add_product(a, b);
                    }
                }
            }
        }
        Self::reduce(order, raw)
    }

    pub fn scale(&self, factor: &Q) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic operands live in different fields; embed them first"
        );
    }
}

impl<'a, Q: Scalar> Add<&'a Cyclotomic<Q>> for &'a Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn add(self, rhs: &'a Cyclotomic<Q>) -> Cyclotomic<Q> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, Q: Scalar> Sub<&'a Cyclotomic<Q>> for &'a Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn sub(self, rhs: &'a Cyclotomic<Q>) -> Cyclotomic<Q> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, Q: Scalar> Mul<&'a Cyclotomic<Q>> for &'a Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn mul(self, rhs: &'a Cyclotomic<Q>) -> Cyclotomic<Q> {
        self.assert_same_field(rhs);
        Cyclotomic::sum_of_products(self.order, [(self, rhs)])
    }
}

impl<Q: Scalar> AddAssign<&Cyclotomic<Q>> for Cyclotomic<Q> {
    fn add_assign(&mut self, rhs: &Cyclotomic<Q>) {
        self.assert_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                a.add_ref(b);
            }
        }
    }
}

impl<Q: Scalar> SubAssign<&Cyclotomic<Q>> for Cyclotomic<Q> {
    fn sub_assign(&mut self, rhs: &Cyclotomic<Q>) {
        self.assert_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                a.sub_ref(b);
            }
        }
    }
}

impl<Q: Scalar> MulAssign<&Cyclotomic<Q>> for Cyclotomic<Q> {
    fn mul_assign(&mut self, rhs: &Cyclotomic<Q>) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<Q: Scalar> $tr<Cyclotomic<Q>> for Cyclotomic<Q> {
            type Output = Cyclotomic<Q>;
            fn $method(self, rhs: Cyclotomic<Q>) -> Cyclotomic<Q> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<Q: Scalar> Neg for Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn neg(mut self) -> Cyclotomic<Q> {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl<Q: Scalar> Neg for &Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn neg(self) -> Cyclotomic<Q> {
        -self.clone()
    }
}

/// Prints in the literal syntax accepted by [`crate::input::parse_cyclotomic`],
/// e.g. `1/2 - z(12,1) + 3*z(12,2)`.
impl<Q: Scalar> fmt::Display for Cyclotomic<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "z({},{})", self.order, j)?;
            } else {
                write!(f, "{magnitude}*z({},{})", self.order, j)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type C = Cyclotomic<BigRational>;

    fn z(n: usize, k: i64) -> C {
        C::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(z(4, 2), C::from_integer(4, -1));
        assert_eq!(&z(3, 1) + &z(3, 2), C::from_integer(3, -1));
        let full = (0..5).fold(C::zero(5), |acc, k| &acc + &z(5, k));
        assert!(full.is_zero());
        assert_eq!(z(7, -1), z(7, 6));
        assert_eq!(C::root_of_unity(0, 1), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn as_rational_examples() {
        assert_eq!(
            (&z(6, 1) + &z(6, 5)).as_rational().unwrap(),
            BigRational::from_i64(1)
        );
        assert_eq!(C::from_integer(9, 7).as_integer().unwrap(), 7);
        assert!(matches!(z(8, 1).as_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(z(2, 1).embed(4).unwrap(), z(4, 2));
        assert_eq!(C::one(1).embed(12).unwrap(), C::one(12));
        assert_eq!(
            (&z(3, 1) + &z(3, 2)).embed(6).unwrap(),
            C::from_integer(6, -1)
        );
        assert_eq!(
            z(4, 1).embed(6),
            Err(Error::IncompatibleOrder { from: 4, to: 6 })
        );
    }

    #[test]
    fn inverse_and_galois() {
        let x = &z(12, 1) + &C::from_integer(12, 2);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, C::one(12));
        assert!(C::zero(5).inv().is_none());
        assert_eq!(z(5, 2).conj(), z(5, 3));
        assert!(z(6, 1).galois(2).is_err());
    }

    #[test]
    fn display_round_trips_through_the_literal_parser() {
        let x = &(&z(12, 1).scale(&BigRational::from_frac(-3, 2)) + &z(12, 2))
            + &C::from_integer(12, 4);
        let text = x.to_string();
        assert_eq!(
            crate::input::parse_cyclotomic(&text)
                .unwrap()
                .embed(12)
                .unwrap(),
            x
        );
        assert_eq!(C::zero(3).to_string(), "0");
    }

    #[test]
    fn sum_of_products_matches_pairwise_products() {
        let a = &z(12, 1) + &C::from_integer(12, 3);
        let b = z(12, 7);
        let c = &z(12, 5) - &z(12, 2);
        let expected = &(&a * &b) + &(&c * &c);
        assert_eq!(C::sum_of_products(12, [(&a, &b), (&c, &c)]), expected);
        assert!(C::sum_of_products(5, []).is_zero());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let x = &z(9, 2) - &C::from_integer(9, 1);
        let mut acc = C::one(9);
        for e in 0..7u32 {
            assert_eq!(x.pow(e), acc);
            acc = &acc * &x;
        }
    }
}
