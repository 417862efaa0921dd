//! Monogenic decomposition of homogeneous spinor-valued polynomials.
//!
//! A degree-`k` homogeneous polynomial splits uniquely as
//! `p = sum_{l=0}^{k} X_s^{k-l} m_l` with each `m_l` of base degree `l` and
//! `D_s m_l = 0`. Two independent projector families compute the summands:
//! explicit coefficient sums `pi^k_i = sum_j a^{i,k}_j X_s^{i+j} D_s^{i+j}`
//! (indexed by the number of `X_s` factors `i`) and Casimir spectral
//! products `P^k_l` (indexed by the monogenic degree `l = k - i`). Both are
//! exact; the test suites require them to agree term for term.

use crate::error::{Error, Result};
use crate::ops::{apply_ds, apply_xs};
use crate::poly::SPoly;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_traits::One;

/// `c_{j,k,l}` with `D_s^j (X_s^k m) = c_{j,k,l} X_s^{k-j} m` for monogenic
/// `m` of degree `l`; zero when `j > k`.
pub fn coeff_c(j: usize, k: usize, l: usize, n: usize) -> Scalar {
    assert!(n >= 1, "coeff_c needs n >= 1");
    if j > k {
        return Scalar::zero();
    }
    // (1/2^j) * k!/(k-j)! * (2n+2l+k-1)! / (2n+2l+k-j-1)!
    let mut num = BigInt::one();
    for t in 0..j {
        num *= BigInt::from((k - t) as u64);
        num *= BigInt::from((2 * n + 2 * l + k - 1 - t) as u64);
    }
    let den = BigInt::from(2u64).pow(j as u32);
    Scalar::from_big_ratio(num, den)
}

fn check_a_args(i: usize, k: usize, j: usize) -> Result<()> {
    if i > k || j > k - i {
        return Err(Error::ArgOutOfRange(format!(
            "projector coefficient needs 0 <= i <= k and 0 <= j <= k - i, got i = {}, k = {}, j = {}",
            i, k, j
        )));
    }
    Ok(())
}

/// Projector coefficient `a^{i,k}_j`, built from the recursion
/// `a^{i,k}_0 = 1 / c_{i,i,k-i}` and
/// `a^{i,k}_j = (-2)^j / j! * (1 / prod_{t<j} (2n+2k-2i-2-t)) * a^{i,k}_0`.
pub fn coeff_a(i: usize, k: usize, j: usize, n: usize) -> Result<Scalar> {
    assert!(n >= 1, "coeff_a needs n >= 1");
    check_a_args(i, k, j)?;
    let c = coeff_c(i, i, k - i, n);
    assert!(!c.is_zero(), "c_{{i,i,k-i}} vanished");
    let a0 = c.inv();
    let alpha = 2 * n + 2 * k - 2 * i - 2;
    let mut den = BigInt::one();
    for t in 0..j {
        den *= BigInt::from((t + 1) as u64); // j!
        den *= BigInt::from((alpha - t) as u64);
    }
    let mut num = BigInt::from(2u64).pow(j as u32);
    if j % 2 == 1 {
        num = -num;
    }
    Ok(a0 * Scalar::from_big_ratio(num, den))
}

/// The closed form for `a^{i,k}_j` evaluated exactly as displayed, with a
/// bare `(2n+2k-i-1)` in the final denominator. It disagrees with the
/// recursion value whenever `(2n+2k-i-1)! != (2n+2k-i-1)`; `coeffs` output
/// shows both so the discrepancy stays visible.
pub fn coeff_a_display(i: usize, k: usize, j: usize, n: usize) -> Result<Scalar> {
    assert!(n >= 1, "coeff_a_display needs n >= 1");
    check_a_args(i, k, j)?;
    let factorial = |m: usize| -> BigInt {
        let mut acc = BigInt::one();
        for t in 2..=m {
            acc *= BigInt::from(t as u64);
        }
        acc
    };
    let mut num = BigInt::from((2 * n + 2 * k - 2 * i - 1) as u64);
    num *= BigInt::from(2u64).pow((i + j) as u32);
    num *= factorial(2 * n + 2 * k - 2 * i - j - 2);
    if j % 2 == 1 {
        num = -num;
    }
    let mut den = factorial(i) * factorial(j);
    den *= BigInt::from((2 * n + 2 * k - i - 1) as u64);
    Ok(Scalar::from_big_ratio(num, den))
}

fn require_homogeneous(p: &SPoly, k: usize) -> Result<()> {
    match p.homogeneous_base_degree() {
        Some(d) if p.is_zero() || d as usize == k => Ok(()),
        Some(d) => Err(Error::ArgOutOfRange(format!(
            "polynomial is homogeneous of base degree {}, not {}",
            d, k
        ))),
        None => Err(Error::NonHomogeneous {
            degrees: p.base_degrees(),
        }),
    }
}

fn xs_power(p: &SPoly, times: usize) -> SPoly {
    let mut acc = p.clone();
    for _ in 0..times {
        acc = apply_xs(&acc);
    }
    acc
}

fn ds_power(p: &SPoly, times: usize) -> SPoly {
    let mut acc = p.clone();
    for _ in 0..times {
        acc = apply_ds(&acc);
    }
    acc
}

/// The component of a degree-`k` homogeneous `p` lying in `X_s^i M_{k-i}`
/// (`i` counts `X_s` factors; the monogenic degree is `k - i`).
pub fn project_explicit(p: &SPoly, k: usize, i: usize) -> Result<SPoly> {
    require_homogeneous(p, k)?;
    if i > k {
        return Err(Error::ArgOutOfRange(format!(
            "projector index i = {} exceeds degree k = {}",
            i, k
        )));
    }
    let n = p.n();
    // Shared D_s powers: pi^k_i needs D_s^{i+j} p for j = 0..k-i.
    let mut ds_images = Vec::with_capacity(k + 1);
    ds_images.push(p.clone());
    for t in 1..=k {
        let next = apply_ds(&ds_images[t - 1]);
        ds_images.push(next);
    }
    let mut out = SPoly::zero(n);
    for j in 0..=(k - i) {
        let a = coeff_a(i, k, j, n)?;
        if a.is_zero() {
            continue;
        }
        out = out + xs_power(&ds_images[i + j], i + j).scale(&a);
    }
    Ok(out)
}

/// The component of a degree-`k` homogeneous `p` lying in `X_s^{k-l} M_l`,
/// computed through the Casimir spectral product
/// `prod_{j != l} (2 G + j(2n-1+j)) / (j(2n-1+j) - l(2n-1+l))`.
/// Note the index here is the monogenic degree `l`, opposite to
/// `project_explicit`.
pub fn project_casimir(p: &SPoly, k: usize, ell: usize) -> Result<SPoly> {
    require_homogeneous(p, k)?;
    if ell > k {
        return Err(Error::ArgOutOfRange(format!(
            "monogenic degree ell = {} exceeds degree k = {}",
            ell, k
        )));
    }
    let n = p.n() as i64;
    let eig = |l: i64| l * (2 * n - 1 + l);
    let mut acc = p.clone();
    for j in 0..=(k as i64) {
        if j == ell as i64 {
            continue;
        }
        let den = eig(j) - eig(ell as i64);
        debug_assert!(den != 0, "Casimir eigenvalues collided");
        let num = crate::ops::apply_gamma(&acc).scale(&Scalar::from_int(2))
            + acc.scale(&Scalar::from_int(eig(j)));
        acc = num.scale(&Scalar::from_ratio(1, den));
    }
    Ok(acc)
}

/// One summand of a decomposition: a monogenic `m` of base degree `ell`,
/// entering the original polynomial as `X_s^{k-ell} m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenicComponent {
    pub ell: usize,
    pub m: SPoly,
}

/// The full decomposition of a degree-`k` homogeneous polynomial; exactly
/// `k + 1` slots, zero summands allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    pub k: usize,
    pub components: Vec<MonogenicComponent>,
}

impl DecompositionResult {
    /// `sum_l X_s^{k-l} m_l`; must reproduce the decomposed input exactly.
    pub fn reconstruct(&self, n: usize) -> SPoly {
        let mut out = SPoly::zero(n);
        for comp in &self.components {
            out = out + xs_power(&comp.m, self.k - comp.ell);
        }
        out
    }
}

/// Splits a homogeneous polynomial into its monogenic components
/// `m_l = D_s^{k-l} (pi-component) / c_{k-l,k-l,l}`. Non-homogeneous input
/// is rejected; callers split graded parts first. The zero polynomial
/// decomposes as a single zero slot at `k = 0`.
pub fn decompose(p: &SPoly) -> Result<DecompositionResult> {
    let k = match p.homogeneous_base_degree() {
        Some(d) => d as usize,
        None => {
            return Err(Error::NonHomogeneous {
                degrees: p.base_degrees(),
            })
        }
    };
    let n = p.n();
    let mut components = Vec::with_capacity(k + 1);
    for i in (0..=k).rev() {
        let ell = k - i;
        let part = project_explicit(p, k, i)?;
        let c = coeff_c(i, i, ell, n);
        assert!(!c.is_zero(), "projector normalization vanished");
        let m = ds_power(&part, i).scale(&c.inv());
        components.push(MonogenicComponent { ell, m });
    }
    Ok(DecompositionResult { k, components })
}

/// Outcome of an exact identity check; both sides are returned so failures
/// are inspectable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: SPoly,
    pub rhs: SPoly,
}

/// Checks `D_s (X_s^k m) = (1/2) k (2n + 2 ell + k - 1) X_s^{k-1} m` for a
/// monogenic `m` of degree `ell`.
pub fn lowering_identity_check(m: &SPoly, ell: usize, k: usize) -> Result<IdentityCheck> {
    require_homogeneous(m, ell)?;
    if !apply_ds(m).is_zero() {
        return Err(Error::NotMonogenic);
    }
    let n = m.n();
    let lhs = apply_ds(&xs_power(m, k));
    let rhs = if k == 0 {
        SPoly::zero(n)
    } else {
        let factor = Scalar::from_ratio((k * (2 * n + 2 * ell + k - 1)) as i64, 2);
        xs_power(m, k - 1).scale(&factor)
    };
    Ok(IdentityCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}
