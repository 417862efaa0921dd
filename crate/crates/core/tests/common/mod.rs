//! Independent oracles for the integration suites.
//!
//! These deliberately avoid the library's operator engine and elimination
//! code: the Dirac/raising actions are recomputed by raw exponent
//! manipulation, and ranks come from a plain division-based row reduction.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use sympdirac::{Monomial, SPoly, Scalar};

pub fn p(src: &str, n: usize) -> SPoly {
    sympdirac::textio::parse(src, n).unwrap()
}

fn shift(exps: &[u32], idx: usize, delta: i64) -> Vec<u32> {
    let mut out = exps.to_vec();
    out[idx] = (out[idx] as i64 + delta) as u32;
    out
}

/// `D_s` recomputed term by term:
/// `x^a q^b -> sum_j a_{2j-1} x^(a - u_{2j-1}) q^(b + v_j)
///           + a_{2j} b_j x^(a - u_{2j}) q^(b - v_j)`.
pub fn ds_oracle(poly: &SPoly) -> SPoly {
    let n = poly.n();
    let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (m, c) in poly.terms() {
        for j in 0..n {
            let a_odd = m.xexp()[2 * j];
            if a_odd > 0 {
                let mono = Monomial::from_exps(
                    shift(m.xexp(), 2 * j, -1),
                    shift(m.qexp(), j, 1),
                );
                let coeff = c * &Scalar::from_int(i64::from(a_odd));
                *acc.entry(mono).or_insert_with(Scalar::zero) += &coeff;
            }
            let a_even = m.xexp()[2 * j + 1];
            let b = m.qexp()[j];
            if a_even > 0 && b > 0 {
                let mono = Monomial::from_exps(
                    shift(m.xexp(), 2 * j + 1, -1),
                    shift(m.qexp(), j, -1),
                );
                let coeff = c * &Scalar::from_int(i64::from(a_even) * i64::from(b));
                *acc.entry(mono).or_insert_with(Scalar::zero) += &coeff;
            }
        }
    }
    SPoly::from_terms(n, acc)
}

/// `X_s` recomputed term by term:
/// `x^a q^b -> sum_j (-b_j) x^(a + u_{2j-1}) q^(b - v_j)
///           + x^(a + u_{2j}) q^(b + v_j)`.
pub fn xs_oracle(poly: &SPoly) -> SPoly {
    let n = poly.n();
    let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (m, c) in poly.terms() {
        for j in 0..n {
            let b = m.qexp()[j];
            if b > 0 {
                let mono = Monomial::from_exps(
                    shift(m.xexp(), 2 * j, 1),
                    shift(m.qexp(), j, -1),
                );
                let coeff = c * &Scalar::from_int(-i64::from(b));
                *acc.entry(mono).or_insert_with(Scalar::zero) += &coeff;
            }
            let mono = Monomial::from_exps(
                shift(m.xexp(), 2 * j + 1, 1),
                shift(m.qexp(), j, 1),
            );
            *acc.entry(mono).or_insert_with(Scalar::zero) += c;
        }
    }
    SPoly::from_terms(n, acc)
}

/// Plain division-based row reduction; returns the rank.
pub fn naive_rank(mut mat: Vec<Vec<Scalar>>) -> usize {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].inv();
        for x in mat[rank].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for r in 0..rows {
            if r == rank || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for ccol in 0..cols {
                let delta = &factor * &mat[rank][ccol];
                let newv = &mat[r][ccol] - &delta;
                mat[r][ccol] = newv;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Kernel dimension of `D_s` on the span of the given monomials, computed
/// entirely from `ds_oracle` and `naive_rank`.
pub fn brute_force_kernel_dim(n: usize, domain: &[Monomial]) -> usize {
    let mut row_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(domain.len());
    for mono in domain {
        let image = ds_oracle(&SPoly::from_monomial(n, mono.clone(), Scalar::one()));
        let mut col = Vec::new();
        for (m, c) in image.terms() {
            let next = row_index.len();
            let idx = *row_index.entry(m.clone()).or_insert(next);
            col.push((idx, c.clone()));
        }
        columns.push(col);
    }
    let nrows = row_index.len();
    let mut dense = vec![vec![Scalar::zero(); domain.len()]; nrows];
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col {
            dense[*r][c] = v.clone();
        }
    }
    domain.len() - naive_rank(dense)
}
