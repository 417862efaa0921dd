//! Weight-vector arithmetic for the sp(2n) labels attached to the
//! decomposition summands.
//!
//! Weights live in the orthogonal `L_j` basis with exact rational
//! coordinates; fundamental weights convert through
//! `omega_i = L_1 + ... + L_i`, the convention under which
//! `delta = (n, n-1, ..., 1)`.

use crate::error::{Error, Result};
use crate::scalar::Rational;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    coords: Vec<Rational>,
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

impl Weight {
    pub fn from_orthogonal(coords: Vec<Rational>) -> Self {
        Weight { coords }
    }

    /// Converts fundamental-weight coefficients `(c_1, ..., c_n)` to
    /// `L`-basis coordinates: `coord_j = c_j + c_{j+1} + ... + c_n`.
    pub fn from_fundamental(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut coords = vec![Rational::zero(); n];
        let mut suffix = Rational::zero();
        for j in (0..n).rev() {
            suffix += &coeffs[j];
            coords[j] = suffix.clone();
        }
        Weight { coords }
    }

    /// Half the sum of positive roots: `(n, n-1, ..., 1)`.
    pub fn delta(n: usize) -> Self {
        Weight {
            coords: (0..n).map(|j| rat((n - j) as i64, 1)).collect(),
        }
    }

    /// `mu_a = a omega_1 - (1/2) omega_n`, the label of the even summand of
    /// degree `a`.
    pub fn mu(n: usize, a: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[0] += rat(a as i64, 1);
        coeffs[n - 1] += rat(-1, 2);
        Weight::from_fundamental(&coeffs)
    }

    /// `nu_b = b omega_1 + omega_{n-1} - (3/2) omega_n`, the label of the
    /// odd summand of degree `b`. Needs rank at least 2: `omega_{n-1}` does
    /// not exist in the rank-1 lattice.
    pub fn nu(n: usize, b: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::ArgOutOfRange(
                "nu weights need n >= 2 (omega_{n-1} is undefined at rank 1)".into(),
            ));
        }
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[0] += rat(b as i64, 1);
        coeffs[n - 2] += rat(1, 1);
        coeffs[n - 1] += rat(-3, 2);
        Ok(Weight::from_fundamental(&coeffs))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank(), "weight rank mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact squared norm in the orthogonal basis.
    pub fn norm2(&self) -> Rational {
        self.coords.iter().map(|c| c * c).sum()
    }
}

/// Outcome of the infinitesimal-character sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterCheck {
    pub ok: bool,
    pub pairs_checked: usize,
    /// First `(a, b)` with `a != b` but equal shifted norms, if any.
    pub counterexample: Option<(usize, usize)>,
}

/// Sweeps `0 <= a <= amax`, `0 <= b <= bmax` and verifies that
/// `|mu_a + delta|^2 = |nu_b + delta|^2` holds exactly when `a = b`.
/// At rank 1 the `nu` family is empty and the sweep is vacuous.
pub fn infinitesimal_character_check(n: usize, amax: usize, bmax: usize) -> CharacterCheck {
    assert!(n >= 1);
    if n < 2 {
        return CharacterCheck {
            ok: true,
            pairs_checked: 0,
            counterexample: None,
        };
    }
    let delta = Weight::delta(n);
    let mu_norms: Vec<Rational> = (0..=amax)
        .map(|a| Weight::mu(n, a).add(&delta).norm2())
        .collect();
    let nu_norms: Vec<Rational> = (0..=bmax)
        .map(|b| Weight::nu(n, b).unwrap().add(&delta).norm2())
        .collect();
    let mut pairs = 0;
    for (a, ma) in mu_norms.iter().enumerate() {
        for (b, nb) in nu_norms.iter().enumerate() {
            pairs += 1;
            let equal = ma == nb;
            if equal != (a == b) {
                return CharacterCheck {
                    ok: false,
                    pairs_checked: pairs,
                    counterexample: Some((a, b)),
                };
            }
        }
    }
    CharacterCheck {
        ok: true,
        pairs_checked: pairs,
        counterexample: None,
    }
}

/// The Casimir eigenvalue on degree-`ell` monogenics:
/// `-(1/2) ell (2n - 1 + ell)`. Strictly decreasing in `ell`, so the
/// spectral projector denominators never vanish.
pub fn casimir_eigenvalue(ell: usize, n: usize) -> Rational {
    assert!(n >= 1);
    let ell = ell as i64;
    let n = n as i64;
    rat(-ell * (2 * n - 1 + ell), 2)
}
