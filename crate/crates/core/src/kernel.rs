//! Exact enumeration of truncated symplectic monogenics: bases of
//! `ker D_s` restricted to base degree `k` and spinor degree `<= dmax`.
//!
//! Truncation restricts the search space, never the equation: the domain is
//! capped at spinor degree `dmax` while the codomain allows `dmax + 1`, so
//! every reported kernel vector is annihilated by the full operator, not
//! just by a truncated matrix.

use crate::error::{Error, Result};
use crate::linalg;
use crate::ops::{apply_ds, apply_xs};
use crate::poly::{Monomial, Parity, SPoly};
use crate::scalar::Scalar;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// All exponent vectors of the given length with total exactly `total`,
/// unordered (callers sort monomials canonically).
fn compositions(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(len - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A finite window into the space of spinor-valued polynomials: base degree
/// exactly `k`, spinor degree at most `dmax`, optionally restricted to one
/// spinor parity.
#[derive(Debug, Clone)]
pub struct TruncatedSlice {
    n: usize,
    k: usize,
    dmax: usize,
    basis: Vec<Monomial>,
}

impl TruncatedSlice {
    pub fn new(n: usize, k: usize, dmax: usize) -> Self {
        Self::build(n, k, dmax, None)
    }

    pub fn with_parity(n: usize, k: usize, dmax: usize, parity: Option<Parity>) -> Self {
        Self::build(n, k, dmax, parity)
    }

    fn build(n: usize, k: usize, dmax: usize, parity: Option<Parity>) -> Self {
        assert!(n >= 1, "slice needs n >= 1");
        let mut basis = Vec::new();
        for xexp in compositions(2 * n, k as u32) {
            for d in 0..=dmax {
                if let Some(p) = parity {
                    if Parity::of(d as u32) != p {
                        continue;
                    }
                }
                for qexp in compositions(n, d as u32) {
                    basis.push(Monomial::from_exps(xexp.clone(), qexp));
                }
            }
        }
        basis.sort();
        TruncatedSlice { n, k, dmax, basis }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dmax(&self) -> usize {
        self.dmax
    }

    /// Domain monomials in canonical order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn binomial(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for t in 0..b.min(a - b) {
        acc = acc * BigUint::from(a - t) / BigUint::from(t + 1);
    }
    acc
}

/// Closed-form dimension of the unrestricted slice:
/// `C(k+2n-1, 2n-1) * sum_{d<=dmax} C(d+n-1, n-1)`. Used for size guards
/// before any enumeration happens.
pub fn slice_dimension(n: usize, k: usize, dmax: usize) -> BigUint {
    let base = binomial(k + 2 * n - 1, 2 * n - 1);
    let mut spinor = BigUint::zero();
    for d in 0..=dmax {
        spinor += binomial(d + n - 1, n - 1);
    }
    base * spinor
}

fn guard_size(n: usize, k: usize, dmax: usize, cap: usize) -> Result<()> {
    let dim = slice_dimension(n, k, dmax);
    if dim > BigUint::from(cap) {
        return Err(Error::SizeCap {
            k,
            d: dmax,
            dim: dim.to_usize().unwrap_or(usize::MAX),
            cap,
        });
    }
    Ok(())
}

/// A sparse exact matrix of an operator on a truncated slice: columns are
/// indexed by the slice basis, rows by the codomain monomial list.
#[derive(Debug, Clone)]
pub struct AssembledMatrix {
    domain: Vec<Monomial>,
    codomain: Vec<Monomial>,
    entries: Vec<(usize, usize, Scalar)>,
}

impl AssembledMatrix {
    pub fn domain(&self) -> &[Monomial] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Monomial] {
        &self.codomain
    }

    pub fn entries(&self) -> &[(usize, usize, Scalar)] {
        &self.entries
    }

    pub fn nrows(&self) -> usize {
        self.codomain.len()
    }

    pub fn ncols(&self) -> usize {
        self.domain.len()
    }

    /// Matrix-vector product against a coefficient vector over the domain.
    pub fn apply(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.ncols());
        let mut out = vec![Scalar::zero(); self.nrows()];
        for (r, c, v) in &self.entries {
            if !coeffs[*c].is_zero() {
                out[*r] += &(v * &coeffs[*c]);
            }
        }
        out
    }

    /// Reads a codomain coefficient vector back as a polynomial.
    pub fn codomain_poly(&self, n: usize, coeffs: &[Scalar]) -> SPoly {
        SPoly::from_terms(
            n,
            self.codomain
                .iter()
                .cloned()
                .zip(coeffs.iter().cloned())
                .filter(|(_, c)| !c.is_zero()),
        )
    }

    fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut dense = vec![vec![Scalar::zero(); self.ncols()]; self.nrows()];
        for (r, c, v) in &self.entries {
            dense[*r][*c] = v.clone();
        }
        dense
    }

    /// Exact rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        linalg::rank(self.to_dense())
    }
}

fn assemble<F>(slice: &TruncatedSlice, op: F, out_degree: Option<usize>) -> AssembledMatrix
where
    F: Fn(&SPoly) -> SPoly,
{
    let n = slice.n();
    // The operator flips spinor parity and moves base degree by one, so the
    // codomain window is the matching slice one spinor degree wider.
    let domain_parity = slice.basis().iter().map(|m| m.spinor_parity()).fold(
        (false, false),
        |(even, odd), p| match p {
            Parity::Even => (true, odd),
            Parity::Odd => (even, true),
        },
    );
    let codomain_parity = match domain_parity {
        (true, false) => Some(Parity::Odd),
        (false, true) => Some(Parity::Even),
        _ => None,
    };
    let codomain_slice = match out_degree {
        Some(k) => TruncatedSlice::with_parity(n, k, slice.dmax() + 1, codomain_parity),
        None => TruncatedSlice {
            n,
            k: 0,
            dmax: 0,
            basis: vec![],
        },
    };
    let codomain = codomain_slice.basis.clone();
    let row_of: std::collections::BTreeMap<&Monomial, usize> =
        codomain.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut entries = Vec::new();
    for (col, m) in slice.basis().iter().enumerate() {
        let image = op(&SPoly::from_monomial(n, m.clone(), Scalar::one()));
        for (mono, c) in image.terms() {
            let row = *row_of
                .get(mono)
                .expect("operator image escaped the codomain window");
            entries.push((row, col, c.clone()));
        }
    }
    AssembledMatrix {
        domain: slice.basis().to_vec(),
        codomain,
        entries,
    }
}

/// The matrix of `D_s` on a slice. For `k = 0` the codomain is empty and the
/// matrix has no rows.
pub fn assemble_ds_matrix(slice: &TruncatedSlice) -> AssembledMatrix {
    let out_degree = slice.k().checked_sub(1);
    assemble(slice, apply_ds, out_degree)
}

/// The matrix of `X_s` on a slice (codomain one base degree up).
pub fn assemble_xs_matrix(slice: &TruncatedSlice) -> AssembledMatrix {
    assemble(slice, apply_xs, Some(slice.k() + 1))
}

/// An exact basis of `ker D_s` on a truncated slice.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    pub slice: TruncatedSlice,
    pub vectors: Vec<SPoly>,
    pub parity: Option<Parity>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Enumerates monogenics of base degree `k` with spinor degree `<= dmax`,
/// optionally restricted to one parity. Deterministic: vectors come out in
/// canonical free-column order with leading coefficient 1.
pub fn monogenic_basis(n: usize, k: usize, dmax: usize, parity: Option<Parity>) -> KernelBasis {
    let slice = TruncatedSlice::with_parity(n, k, dmax, parity);
    let matrix = assemble_ds_matrix(&slice);
    let vectors = linalg::nullspace(matrix.to_dense(), matrix.ncols())
        .into_iter()
        .map(|coeffs| {
            SPoly::from_terms(
                n,
                slice
                    .basis()
                    .iter()
                    .cloned()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect();
    KernelBasis {
        slice,
        vectors,
        parity,
    }
}

/// One row of a kernel dimension table. `parity = None` counts the whole
/// kernel; the parity rows partition it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimRow {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub parity: Option<Parity>,
    pub dim: usize,
}

/// Kernel dimensions for every `k <= kmax`, `d <= dmax`, split by parity.
/// Fails fast with a size error naming the offending `(k, d)` when a slice
/// would exceed `size_cap`.
pub fn dimension_table(
    n: usize,
    kmax: usize,
    dmax: usize,
    size_cap: usize,
) -> Result<Vec<DimRow>> {
    let mut rows = Vec::new();
    for k in 0..=kmax {
        for d in 0..=dmax {
            guard_size(n, k, d, size_cap)?;
            let even = monogenic_basis(n, k, d, Some(Parity::Even)).dimension();
            let odd = monogenic_basis(n, k, d, Some(Parity::Odd)).dimension();
            rows.push(DimRow {
                n,
                k,
                d,
                parity: None,
                dim: even + odd,
            });
            rows.push(DimRow {
                n,
                k,
                d,
                parity: Some(Parity::Even),
                dim: even,
            });
            rows.push(DimRow {
                n,
                k,
                d,
                parity: Some(Parity::Odd),
                dim: odd,
            });
        }
    }
    Ok(rows)
}

/// CSV rendering of a dimension table.
pub fn dimension_table_csv(rows: &[DimRow]) -> String {
    let mut out = String::from("n,k,dmax,parity,dim\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.n,
            row.k,
            row.d,
            row.parity.map_or("all", Parity::as_str),
            row.dim
        ));
    }
    out
}

/// Result of the injectivity check for `X_s` on a truncated slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityCheck {
    pub cols: usize,
    pub rank: usize,
}

impl InjectivityCheck {
    pub fn injective(&self) -> bool {
        self.rank == self.cols
    }
}

/// Verifies that the matrix of `X_s` on the slice has full column rank.
pub fn xs_injectivity_check(
    n: usize,
    k: usize,
    dmax: usize,
    size_cap: usize,
) -> Result<InjectivityCheck> {
    guard_size(n, k, dmax, size_cap)?;
    let slice = TruncatedSlice::new(n, k, dmax);
    let matrix = assemble_xs_matrix(&slice);
    let rank = linalg::rank(matrix.to_dense());
    Ok(InjectivityCheck {
        cols: matrix.ncols(),
        rank,
    })
}
