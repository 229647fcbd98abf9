//! Hilbert series of monomial ideals and the invariants read off them.
//!
//! The numerator `N(t)` of `HS = N(t) / (1-t)^n` is computed by the pivot
//! recursion `N(I) = N(I + (x)) + t · N(I : x)`, with generators coprime to
//! all others split off as factors `(1 - t^d)`.

use num_rational::Ratio;
use serde::Serialize;

use super::Monomial;

/// Hilbert series `numerator(t) / (1-t)^nvars` of `S / I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// Coefficient of `t^k` at index `k`.
    pub numerator: Vec<i64>,
}

/// Invariants of a Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    /// `krull_dim - 1`; `-1` when the projective variety is empty.
    pub proj_dim: i64,
    /// `h(1)` for the reduced numerator `h`.
    pub degree: i64,
    /// Coefficients of the Hilbert polynomial in `t`, ascending.
    pub coefficients: Vec<Ratio<i128>>,
    /// `dim_k S/I` when the quotient is finite-dimensional.
    pub quotient_dim: Option<i64>,
    /// Reduced numerator `h`, with `HS = h(t) / (1-t)^(proj_dim + 1)`.
    pub h_vector: Vec<i64>,
}

impl HilbertPolynomial {
    /// Coefficients rendered as `"a"` or `"a/b"` strings.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(|c| if *c.denom() == 1 { c.numer().to_string() } else { c.to_string() }).collect()
    }

    pub fn eval(&self, t: i128) -> Ratio<i128> {
        self.coefficients.iter().rev().fold(Ratio::from_integer(0), |acc, c| acc * Ratio::from_integer(t) + c)
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1;
    v
}

/// Drops generators divisible by another generator; sorted by degree.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    // split off generators coprime to every other one
    let mut factor = vec![1i64];
    let mut rest = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        if gens.iter().enumerate().all(|(j, h)| i == j || g.coprime(h)) {
            factor = poly_mul(&factor, &one_minus_t_pow(g.degree()));
        } else {
            rest.push(*g);
        }
    }
    if rest.is_empty() {
        return factor;
    }
    // pivot: the variable occurring in the most generators
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let count = rest.iter().filter(|m| m.exp(v) > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let x = best.0;
    debug_assert!(best.1 >= 2);

    let mut plus: Vec<Monomial> = rest.iter().filter(|m| m.exp(x) == 0).copied().collect();
    plus.push(Monomial::var(x));
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|m| if m.exp(x) > 0 { m.with_exp(x, m.exp(x) - 1) } else { *m })
        .collect();

    let a = numerator(minimalize(&plus), nvars);
    let b = numerator(minimalize(&colon), nvars);
    let tb: Vec<i64> = std::iter::once(0).chain(b).collect();
    poly_mul(&factor, &poly_add(&a, &tb))
}

/// Hilbert series of `k[x_0..x_{n-1}] / (leading_ideal)`.
pub fn hilbert_series(leading_ideal: &[Monomial], nvars: usize) -> HilbertData {
    let gens = minimalize(leading_ideal);
    HilbertData { nvars, numerator: numerator(gens, nvars) }
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc = 1i128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl HilbertData {
    /// Reduced numerator and the number of `(1-t)` factors cancelled.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut h = self.numerator.clone();
        let mut cancelled = 0;
        while cancelled < self.nvars && h.iter().sum::<i64>() == 0 && h.iter().any(|&c| c != 0) {
            // synthetic division by (1 - t): q_k = Σ_{i ≤ k} h_i
            let mut q = Vec::with_capacity(h.len() - 1);
            let mut run = 0i64;
            for &c in &h[..h.len() - 1] {
                run += c;
                q.push(run);
            }
            h = trim(q);
            cancelled += 1;
        }
        (h, cancelled)
    }

    pub fn krull_dim(&self) -> usize {
        self.nvars - self.reduced().1
    }

    /// Dimension of the degree-`d` part of the quotient.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        let n = self.nvars as i128;
        let mut acc = 0i128;
        for (k, &c) in self.numerator.iter().enumerate() {
            let k = k as i128;
            if (d as i128) < k {
                break;
            }
            acc += c as i128 * binomial(d as i128 - k + n - 1, n - 1);
        }
        acc as i64
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        let (h, cancelled) = self.reduced();
        let krull = self.nvars - cancelled;
        let degree: i64 = h.iter().sum();
        if krull == 0 {
            return HilbertPolynomial {
                proj_dim: -1,
                degree,
                coefficients: Vec::new(),
                quotient_dim: Some(degree),
                h_vector: h,
            };
        }
        let d = krull - 1;
        let mut factorial = 1i128;
        for j in 1..=d as i128 {
            factorial *= j;
        }
        // HP(t) = Σ_k h_k (t-k+1)(t-k+2)…(t-k+d) / d!
        let mut coeffs = vec![Ratio::from_integer(0i128); d + 1];
        for (k, &hk) in h.iter().enumerate() {
            if hk == 0 {
                continue;
            }
            let mut poly = vec![1i128];
            for j in 1..=d as i128 {
                let shift = j - k as i128;
                let mut next = vec![0i128; poly.len() + 1];
                for (i, &c) in poly.iter().enumerate() {
                    next[i] += c * shift;
                    next[i + 1] += c;
                }
                poly = next;
            }
            for (i, c) in poly.into_iter().enumerate() {
                coeffs[i] += Ratio::new(c * hk as i128, factorial);
            }
        }
        HilbertPolynomial { proj_dim: d as i64, degree, coefficients: coeffs, quotient_dim: None, h_vector: h }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn empty_ideal() {
        let h = hilbert_series(&[], 3);
        assert_eq!(h.numerator, vec![1]);
        let hp = h.hilbert_polynomial();
        assert_eq!(hp.proj_dim, 2);
        assert_eq!(hp.degree, 1);
    }

    #[test]
    fn principal_square() {
        let h = hilbert_series(&[mono(&[2, 0])], 2);
        assert_eq!(h.numerator, vec![1, 0, -1]);
    }

    #[test]
    fn two_generator_example_matches_enumeration() {
        let gens = [mono(&[2, 0]), mono(&[1, 1])];
        let h = hilbert_series(&gens, 2);
        // standard monomials: 1 | x, y | y^2 | y^3 ...
        assert_eq!(h.numerator, vec![1, 0, -2, 1]);
        let counts: Vec<i64> = (0..=5).map(|d| h.hilbert_function(d)).collect();
        assert_eq!(counts, vec![1, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn hyperplane_point() {
        let hp = hilbert_series(&[mono(&[1, 0])], 2).hilbert_polynomial();
        assert_eq!((hp.proj_dim, hp.degree), (0, 1));
        assert_eq!(hp.coefficient_strings(), vec!["1"]);
    }

    #[test]
    fn projective_space() {
        let hp = hilbert_series(&[], 14).hilbert_polynomial();
        assert_eq!((hp.proj_dim, hp.degree), (13, 1));
        // HP(t) = C(t+13, 13)
        assert_eq!(hp.eval(2), Ratio::from_integer(105));
    }

    #[test]
    fn artinian_quotient() {
        let gens = [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 3])];
        let hp = hilbert_series(&gens, 2).hilbert_polynomial();
        assert_eq!(hp.proj_dim, -1);
        // 1, x, y, y^2
        assert_eq!(hp.quotient_dim, Some(4));
    }
}
