use equikoszul::{CharacterTable, ClassFunction, Cyclotomic, Scalar};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `⋀^r(Σ_j a_j χ^j)` over `Z/e`, by enumerating every `(k_0, …, k_{e−1})`
/// with `Σ k_j = r` and `0 ≤ k_j ≤ a_j`.
pub fn wedge_by_multinomial(a: &[u64], r: usize) -> Vec<u64> {
    wedge_table_by_multinomial(a)
        .into_iter()
        .nth(r)
        .unwrap_or_else(|| vec![0; a.len()])
}

/// All exterior powers at once: entry `[r][d]` for `0 ≤ r ≤ Σ a_j`, from a
/// single enumeration of the vectors `0 ≤ k_j ≤ a_j`.
pub fn wedge_table_by_multinomial(a: &[u64]) -> Vec<Vec<u64>> {
    let e = a.len();
    let total: u64 = a.iter().sum();
    let mut out = vec![vec![0u64; e]; total as usize + 1];
    if e == 0 {
        return out;
    }
    fn visit(a: &[u64], j: usize, r: usize, d: usize, weight: u64, out: &mut [Vec<u64>]) {
        let e = a.len();
        if j == e {
            out[r][d] += weight;
            return;
        }
        for m in 0..=a[j] {
            let w = weight * binomial(a[j], m);
            visit(a, j + 1, r + m as usize, (d + j * m as usize) % e, w, out);
        }
    }
    visit(a, 0, 0, 0, 1, &mut out);
    out
}

/// Coefficients in the group ring `Z[x]/(x^n − 1)` of the elementary
/// symmetric polynomial `e_r(x^{k_1}, …, x^{k_m})`, by expanding
/// `Π (1 + t x^{k_i})`.
pub fn elementary_symmetric_group_ring(n: usize, exponents: &[usize], r: usize) -> Vec<i64> {
    let mut poly = vec![vec![0i64; n]; exponents.len() + 1];
    poly[0][0] = 1;
    for (done, &k) in exponents.iter().enumerate() {
        for deg in (1..=done + 1).rev() {
            let (lower, upper) = poly.split_at_mut(deg);
            for (s, &c) in lower[deg - 1].iter().enumerate() {
                upper[0][(s + k) % n] += c;
            }
        }
    }
    poly.get(r).cloned().unwrap_or_else(|| vec![0; n])
}

/// `e_0, …, e_max` of `{x^{k_i}}` in `Z[x]/(x^n − 1)`.
pub fn elementary_symmetric_all(n: usize, exponents: &[usize], max: usize) -> Vec<Vec<i64>> {
    let mut poly = vec![vec![0i64; n]; max + 1];
    poly[0][0] = 1;
    for (done, &k) in exponents.iter().enumerate() {
        for deg in (1..=(done + 1).min(max)).rev() {
            let (lower, upper) = poly.split_at_mut(deg);
            for (s, &c) in lower[deg - 1].iter().enumerate() {
                upper[0][(s + k) % n] += c;
            }
        }
    }
    poly
}

/// `Φ_n`, lowest degree first, by dividing `x^n − 1` by `Φ_d` for every
/// proper divisor `d` of `n`.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let divisor = cyclotomic_poly(d);
        let deg = divisor.len() - 1;
        let mut quotient = vec![0i64; poly.len() - deg];
        for i in (0..quotient.len()).rev() {
            let c = poly[i + deg];
            quotient[i] = c;
            for (j, &dj) in divisor.iter().enumerate() {
                poly[i + j] -= c * dj;
            }
        }
        assert!(poly.iter().all(|&c| c == 0), "Φ_{d} divides x^{n} − 1");
        poly = quotient;
    }
    poly
}

/// Reduction from `Z[x]/(x^n − 1)` to `Z[ζ_n]`.
#[derive(Clone, Debug)]
pub struct GroupRing {
    n: usize,
    phi: Vec<i64>,
}

impl GroupRing {
    pub fn new(n: usize) -> Self {
        GroupRing {
            n,
            phi: cyclotomic_poly(n),
        }
    }

    /// Canonical coefficients of `Σ c_j ζ_n^j` in the basis
    /// `ζ^0, …, ζ^{φ(n)−1}`, by integer long division by `Φ_n`.
    pub fn reduce(&self, coeffs: &[i64]) -> Vec<i64> {
        let deg = self.phi.len() - 1;
        let mut raw = vec![0i64; self.n.max(deg)];
        for (j, &c) in coeffs.iter().enumerate() {
            raw[j % self.n] += c;
        }
        for i in (deg..raw.len()).rev() {
            let c = raw[i];
            if c != 0 {
                for (j, &pj) in self.phi.iter().enumerate() {
                    raw[i - deg + j] -= c * pj;
                }
            }
        }
        raw.truncate(deg);
        raw
    }
}

/// `e_r` of the multiset `{ζ_n^{k_i}}`.
pub fn wedge_by_eigenvalues<Q: Scalar>(n: usize, exponents: &[usize], r: usize) -> Cyclotomic<Q> {
    let coeffs = elementary_symmetric_group_ring(n, exponents, r)
        .into_iter()
        .map(Q::from_i64)
        .collect();
    Cyclotomic::from_power_basis(n, coeffs).expect("positive order")
}

/// Eigenvalues of an element `g` of class `class` on the representation with
/// character `f`, as exponents of `ζ_o` for `o` the order of `g`: the
/// multiplicity of `ζ_o^k` is `(1/o) Σ_j f(g^j) ζ_o^{−jk}`.
pub fn eigenvalue_exponents<Q: Scalar>(
    table: &CharacterTable<Q>,
    f: &ClassFunction<Q>,
    class: usize,
) -> Vec<usize> {
    let c = table.class(class);
    let o = c.element_order;
    let field = f.field_order();
    let mut out = Vec::new();
    for k in 0..o {
        let mut sum = Cyclotomic::zero(field);
        for j in 0..o {
            let twist = Cyclotomic::root_of_unity(o, -((j * k) as i64))
                .and_then(|z| z.embed(field))
                .expect("element orders divide the field order");
            sum += &(f.value(c.power(j as i64)) * &twist);
        }
        let count = sum
            .scale(&Q::from_frac(1, o as i64))
            .as_integer()
            .expect("eigenvalue multiplicities are integers");
        let count = usize::try_from(count).expect("f is a character");
        out.extend(std::iter::repeat_n(k, count));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use equikoszul::CycNum;

    #[test]
    fn multinomial_examples() {
        assert_eq!(wedge_by_multinomial(&[5, 0, 0], 2), vec![10, 0, 0]);
        assert_eq!(wedge_by_multinomial(&[0, 4], 2), vec![6, 0]);
        assert_eq!(wedge_by_multinomial(&[0, 1, 1], 2), vec![1, 0, 0]);
        assert_eq!(wedge_by_multinomial(&[2, 1, 3, 0], 7), vec![0; 4]);
        let total: u64 = wedge_by_multinomial(&[2, 1, 3, 2], 3).iter().sum();
        assert_eq!(total, binomial(8, 3));
    }

    #[test]
    fn table_matches_single_powers() {
        let a = [2, 0, 1, 3, 1];
        let table = wedge_table_by_multinomial(&a);
        assert_eq!(table.len(), 8);
        for (r, row) in table.iter().enumerate() {
            assert_eq!(row, &wedge_by_multinomial(&a, r));
        }
    }

    #[test]
    fn group_ring_reduction() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(GroupRing::new(3).reduce(&[0, 1, 1]), vec![-1, 0]);
        assert_eq!(GroupRing::new(4).reduce(&[0, 0, 1]), vec![-1, 0]);
        assert_eq!(GroupRing::new(5).reduce(&[1, 1, 1, 1, 1]), vec![0; 4]);
        let all = elementary_symmetric_all(3, &[1, 2, 0], 3);
        assert_eq!(all[3], vec![1, 0, 0]);
        assert_eq!(all[1], vec![1, 1, 1]);
    }

    #[test]
    fn eigenvalue_examples() {
        let one: CycNum = wedge_by_eigenvalues(3, &[1, 2], 0);
        assert_eq!(one, CycNum::one(3));
        let six: CycNum = wedge_by_eigenvalues(2, &[1, 1, 1, 1], 2);
        assert_eq!(six.as_integer().unwrap(), 6);
        let det: CycNum = wedge_by_eigenvalues(3, &[1, 2], 2);
        assert_eq!(det.as_integer().unwrap(), 1);
        let none: CycNum = wedge_by_eigenvalues(3, &[1, 2], 3);
        assert!(none.is_zero());
    }
}
