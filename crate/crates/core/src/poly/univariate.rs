//! Dense univariate polynomials over `F_p` (coefficient of `x^k` at index
//! `k`), characteristic polynomials, and rational root finding.

use crate::field::PrimeField;
use crate::matrix::FieldMatrix;

/// Below this modulus roots are found by evaluating at every element.
const TRIAL_LIMIT: u32 = 4096;

pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, with the zero polynomial reported as `None`.
pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn eval(f: PrimeField, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

pub fn mul(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn sub(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] = x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] = f.sub(out[i], y);
    }
    trim(out)
}

/// Quotient and remainder; panics on division by zero.
pub fn div_rem(f: PrimeField, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    let inv = f.inv(b[db]);
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u32; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], inv);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bc) in b[..=db].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, bc));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(f: PrimeField, a: &[u32]) -> Vec<u32> {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&lc) => {
            let inv = f.inv(lc);
            a.iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd(f: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// `base^e mod m`.
pub fn pow_mod(f: PrimeField, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut result = div_rem(f, &[1], m).1;
    let mut b = div_rem(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            result = div_rem(f, &mul(f, &result, &b), m).1;
        }
        b = div_rem(f, &mul(f, &b, &b), m).1;
        e >>= 1;
    }
    result
}

/// Characteristic polynomial `det(x I - M)` via reduction to upper
/// Hessenberg form.
pub fn charpoly(m: &FieldMatrix) -> Vec<u32> {
    let f = m.field();
    let n = m.rows();
    assert_eq!(n, m.cols(), "characteristic polynomial of a non-square matrix");
    let mut h: Vec<Vec<u32>> = m.row_vecs();

    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]);
        for k in j + 2..n {
            let u = f.mul(h[k][j], inv);
            if u == 0 {
                continue;
            }
            // row_k -= u row_{j+1}; col_{j+1} += u col_k
            for c in 0..n {
                let v = f.mul(u, h[j + 1][c]);
                h[k][c] = f.sub(h[k][c], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[k]);
                row[j + 1] = f.add(row[j + 1], v);
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{i<k≤m} h_{k,k-1}) p_{i-1}
    let mut p: Vec<Vec<u32>> = vec![vec![1]];
    for mi in 0..n {
        let mut next = mul(f, &[f.neg(h[mi][mi]), 1], &p[mi]);
        let mut t = 1u32;
        for i in (0..mi).rev() {
            t = f.mul(t, h[i + 1][i]);
            if t == 0 {
                break;
            }
            let c = f.mul(t, h[i][mi]);
            if c != 0 {
                let scaled: Vec<u32> = p[i].iter().map(|&a| f.mul(a, c)).collect();
                next = sub(f, &next, &scaled);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Distinct roots in `F_p`, ascending.
pub fn roots(f: PrimeField, a: &[u32]) -> Vec<u32> {
    let a = monic(f, a);
    let Some(d) = degree(&a) else { return Vec::new() };
    if d == 0 {
        return Vec::new();
    }
    let p = f.modulus();
    let mut out = if p <= TRIAL_LIMIT {
        (0..p).filter(|&x| eval(f, &a, x) == 0).collect()
    } else {
        // split off the product of the linear factors: gcd(a, x^p - x)
        let xp = pow_mod(f, &[0, 1], p as u64, &a);
        let g = gcd(f, &a, &sub(f, &xp, &[0, 1]));
        let mut acc = Vec::new();
        split_linear(f, g, &mut acc);
        acc
    };
    out.sort_unstable();
    out
}

/// Equal-degree splitting of a squarefree product of linear factors.
fn split_linear(f: PrimeField, g: Vec<u32>, out: &mut Vec<u32>) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(f.mul(g[0], f.inv(g[1])))),
        Some(d) => {
            let e = (f.modulus() as u64 - 1) / 2;
            for a in 0..f.modulus() {
                let s = pow_mod(f, &[a, 1], e, &g);
                let h = gcd(f, &g, &sub(f, &s, &[1]));
                let dh = degree(&h).unwrap_or(0);
                if dh > 0 && dh < d {
                    let (q, _) = div_rem(f, &g, &h);
                    split_linear(f, h, out);
                    split_linear(f, monic(f, &q), out);
                    return;
                }
            }
            unreachable!("a squarefree split polynomial always separates");
        }
    }
}
