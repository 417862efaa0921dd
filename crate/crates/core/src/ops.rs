//! The symplectic Clifford action and the operators built from it.
//!
//! The default realization acts on spinor variables by
//! `e_j = (q_j *)` and `f_j = -d/dq_j`, which satisfies the commutation
//! relations `e_i e_j = e_j e_i`, `f_i f_j = f_j f_i`,
//! `e_i f_j - f_j e_i = delta_ij` exactly over the rationals. On top of it
//! sit the Dirac operator `D_s`, its raising partner `X_s`, the base Euler
//! operator `E`, and the Casimir `G = X_s D_s - E(2n-1+E)/2`, which satisfy
//! the sl2 relations
//!
//! ```text
//! [E + n, D_s] = -D_s,   [E + n, X_s] = X_s,   [D_s, X_s] = E + n.
//! ```
//!
//! The quadratic elements of the Clifford algebra map to sp(2n) matrices
//! (`rho_star`) and to operators on the spinor bank (`l_star`).

use crate::error::{Error, Result};
use crate::poly::{SPoly, VarBank};
use crate::scalar::{Scalar, ScalarMode};

/// One of the two Clifford generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliffordGen {
    E,
    F,
}

/// Applies `e_j` or `f_j` (1-based `j`) to a polynomial.
pub fn clifford_apply(gen: CliffordGen, j: usize, p: &SPoly) -> Result<SPoly> {
    match gen {
        CliffordGen::E => p.mul_var(VarBank::Spinor, j),
        CliffordGen::F => Ok(-&p.diff(VarBank::Spinor, j)?),
    }
}

/// The symplectic Dirac operator `D_s = sum_j (d/dx_{2j-1} e_j - d/dx_{2j} f_j)`.
///
/// Lowers base degree by one and flips spinor parity.
pub fn apply_ds(p: &SPoly) -> SPoly {
    let n = p.n();
    let mut out = SPoly::zero(n);
    for j in 1..=n {
        let t1 = p
            .diff(VarBank::Base, 2 * j - 1)
            .unwrap()
            .mul_var(VarBank::Spinor, j)
            .unwrap();
        let t2 = p
            .diff(VarBank::Base, 2 * j)
            .unwrap()
            .diff(VarBank::Spinor, j)
            .unwrap();
        out = out + t1 + t2;
    }
    out
}

/// The raising operator `X_s = sum_j (x_{2j-1} f_j + x_{2j} e_j)`.
///
/// Raises base degree by one and flips spinor parity.
pub fn apply_xs(p: &SPoly) -> SPoly {
    let n = p.n();
    let mut out = SPoly::zero(n);
    for j in 1..=n {
        let t1 = p
            .diff(VarBank::Spinor, j)
            .unwrap()
            .mul_var(VarBank::Base, 2 * j - 1)
            .unwrap();
        let t2 = p
            .mul_var(VarBank::Spinor, j)
            .unwrap()
            .mul_var(VarBank::Base, 2 * j)
            .unwrap();
        out = out - t1 + t2;
    }
    out
}

/// The base Euler operator `E = sum_j x_j d/dx_j`; multiplies each
/// base-degree-`k` part by `k`. Spinor variables do not contribute.
pub fn apply_euler(p: &SPoly) -> SPoly {
    SPoly::from_terms(
        p.n(),
        p.terms().map(|(m, c)| {
            (
                m.clone(),
                c * &Scalar::from_int(i64::from(m.base_degree())),
            )
        }),
    )
}

/// The sl2 Casimir `G = X_s D_s - E(2n-1+E)/2`.
pub fn apply_gamma(p: &SPoly) -> SPoly {
    let n = p.n() as i64;
    let euler_part = SPoly::from_terms(
        p.n(),
        p.terms().map(|(m, c)| {
            let k = i64::from(m.base_degree());
            (m.clone(), c * &Scalar::from_ratio(k * (2 * n - 1 + k), 2))
        }),
    );
    apply_xs(&apply_ds(p)) - euler_part
}

/// The three families of first-order sp(2n) vector fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpKind {
    X,
    Y,
    Z,
}

fn check_sp_indices(n: usize, i: usize, j: usize) -> Result<()> {
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange {
                what: "sp generator",
                index: idx,
                max: n,
            });
        }
    }
    Ok(())
}

/// Applies the vector field `X_ij = x_j d_i - x_{n+i} d_{n+j}`,
/// `Y_ij = x_{n+j} d_i + x_{n+i} d_j` or `Z_ij = x_j d_{n+i} + x_i d_{n+j}`
/// (block coordinate convention, 1-based `i, j <= n`).
pub fn sp_vectorfield(kind: SpKind, i: usize, j: usize, p: &SPoly) -> Result<SPoly> {
    let n = p.n();
    check_sp_indices(n, i, j)?;
    let d = |a: usize| p.diff(VarBank::Base, a).unwrap();
    let mx = |q: SPoly, b: usize| q.mul_var(VarBank::Base, b).unwrap();
    Ok(match kind {
        SpKind::X => mx(d(i), j) - mx(d(n + j), n + i),
        SpKind::Y => mx(d(i), n + j) + mx(d(j), n + i),
        SpKind::Z => mx(d(n + i), j) + mx(d(n + j), i),
    })
}

/// Atomic generator inside an operator word (all indices 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    /// Multiplication by `x_i`, `1 <= i <= 2n`.
    MulX(usize),
    /// `d/dx_i`.
    Dx(usize),
    /// Clifford `e_j`, `1 <= j <= n`.
    E(usize),
    /// Clifford `f_j`.
    F(usize),
    /// Multiplication by `q_j`.
    MulQ(usize),
    /// `d/dq_j`.
    Dq(usize),
}

impl Atom {
    fn validate(self, n: usize) -> Result<()> {
        let (index, max, what) = match self {
            Atom::MulX(i) | Atom::Dx(i) => (i, 2 * n, "base variable"),
            Atom::E(j) | Atom::F(j) | Atom::MulQ(j) | Atom::Dq(j) => (j, n, "spinor variable"),
        };
        if index == 0 || index > max {
            Err(Error::IndexOutOfRange { what, index, max })
        } else {
            Ok(())
        }
    }

    fn apply(self, p: &SPoly) -> SPoly {
        match self {
            Atom::MulX(i) => p.mul_var(VarBank::Base, i).unwrap(),
            Atom::Dx(i) => p.diff(VarBank::Base, i).unwrap(),
            Atom::E(j) | Atom::MulQ(j) => p.mul_var(VarBank::Spinor, j).unwrap(),
            Atom::F(j) => -&p.diff(VarBank::Spinor, j).unwrap(),
            Atom::Dq(j) => p.diff(VarBank::Spinor, j).unwrap(),
        }
    }
}

/// A formal linear combination of generator words. Words apply right to
/// left, matching operator composition.
#[derive(Debug, Clone)]
pub struct OperatorExpr {
    n: usize,
    terms: Vec<(Scalar, Vec<Atom>)>,
}

impl OperatorExpr {
    pub fn zero(n: usize) -> Self {
        OperatorExpr { n, terms: vec![] }
    }

    pub fn identity(n: usize) -> Self {
        OperatorExpr::scalar_op(n, Scalar::one())
    }

    /// Multiplication by a constant.
    pub fn scalar_op(n: usize, c: Scalar) -> Self {
        OperatorExpr {
            n,
            terms: vec![(c, vec![])],
        }
    }

    /// A single validated word with coefficient.
    pub fn from_term(n: usize, coeff: Scalar, word: Vec<Atom>) -> Result<Self> {
        for atom in &word {
            atom.validate(n)?;
        }
        Ok(OperatorExpr {
            n,
            terms: vec![(coeff, word)],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Scalar, Vec<Atom>)] {
        &self.terms
    }

    /// `D_s` as a word expression.
    pub fn ds(n: usize) -> Self {
        let mut terms = Vec::new();
        for j in 1..=n {
            terms.push((Scalar::one(), vec![Atom::Dx(2 * j - 1), Atom::E(j)]));
            terms.push((Scalar::from_int(-1), vec![Atom::Dx(2 * j), Atom::F(j)]));
        }
        OperatorExpr { n, terms }
    }

    /// `X_s` as a word expression.
    pub fn xs(n: usize) -> Self {
        let mut terms = Vec::new();
        for j in 1..=n {
            terms.push((Scalar::one(), vec![Atom::MulX(2 * j - 1), Atom::F(j)]));
            terms.push((Scalar::one(), vec![Atom::MulX(2 * j), Atom::E(j)]));
        }
        OperatorExpr { n, terms }
    }

    /// The base Euler operator as a word expression.
    pub fn euler(n: usize) -> Self {
        let terms = (1..=2 * n)
            .map(|a| (Scalar::one(), vec![Atom::MulX(a), Atom::Dx(a)]))
            .collect();
        OperatorExpr { n, terms }
    }

    /// `E + n`, the sl2 Cartan element of this realization.
    pub fn euler_plus_n(n: usize) -> Self {
        OperatorExpr::euler(n).add(&OperatorExpr::scalar_op(n, Scalar::from_int(n as i64)))
    }

    /// The Casimir `X_s D_s - E(2n-1+E)/2` as a word expression.
    pub fn gamma(n: usize) -> Self {
        let e = OperatorExpr::euler(n);
        OperatorExpr::xs(n)
            .compose(&OperatorExpr::ds(n))
            .add(&e.scale(&Scalar::from_ratio(-(2 * n as i64 - 1), 2)))
            .add(&e.compose(&e).scale(&Scalar::from_ratio(-1, 2)))
    }

    /// Vector field `X_ij`/`Y_ij`/`Z_ij` as a word expression.
    pub fn sp_vectorfield(n: usize, kind: SpKind, i: usize, j: usize) -> Result<Self> {
        check_sp_indices(n, i, j)?;
        let term = |c: i64, b: usize, a: usize| (Scalar::from_int(c), vec![Atom::MulX(b), Atom::Dx(a)]);
        let terms = match kind {
            SpKind::X => vec![term(1, j, i), term(-1, n + i, n + j)],
            SpKind::Y => vec![term(1, n + j, i), term(1, n + i, j)],
            SpKind::Z => vec![term(1, j, n + i), term(1, i, n + j)],
        };
        Ok(OperatorExpr { n, terms })
    }

    pub fn add(&self, other: &OperatorExpr) -> OperatorExpr {
        assert_eq!(self.n, other.n, "operator dimension mismatch");
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        OperatorExpr { n: self.n, terms }
    }

    pub fn sub(&self, other: &OperatorExpr) -> OperatorExpr {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> OperatorExpr {
        OperatorExpr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(v, w)| (v * c, w.clone()))
                .collect(),
        }
    }

    /// Operator composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &OperatorExpr) -> OperatorExpr {
        assert_eq!(self.n, other.n, "operator dimension mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, wa) in &self.terms {
            for (cb, wb) in &other.terms {
                let mut word = wa.clone();
                word.extend(wb.iter().copied());
                terms.push((ca * cb, word));
            }
        }
        OperatorExpr { n: self.n, terms }
    }

    /// Rewrites Clifford atoms into the realization: `e_j -> (q_j *)`,
    /// `f_j -> -d/dq_j`.
    pub fn expand_clifford(&self) -> OperatorExpr {
        let terms = self
            .terms
            .iter()
            .map(|(c, word)| {
                let mut coeff = c.clone();
                let word = word
                    .iter()
                    .map(|atom| match atom {
                        Atom::E(j) => Atom::MulQ(*j),
                        Atom::F(j) => {
                            coeff = -&coeff;
                            Atom::Dq(*j)
                        }
                        other => *other,
                    })
                    .collect();
                (coeff, word)
            })
            .collect();
        OperatorExpr { n: self.n, terms }
    }

    /// Applies the expression; words act right to left.
    pub fn apply(&self, p: &SPoly) -> Result<SPoly> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        let mut out = SPoly::zero(self.n);
        for (c, word) in &self.terms {
            let mut acc = p.clone();
            for atom in word.iter().rev() {
                acc = atom.apply(&acc);
                if acc.is_zero() {
                    break;
                }
            }
            out = out + acc.scale(c);
        }
        Ok(out)
    }
}

/// `A(B(p)) - B(A(p))`.
pub fn commutator(a: &OperatorExpr, b: &OperatorExpr, p: &SPoly) -> Result<SPoly> {
    Ok(a.apply(&b.apply(p)?)? - b.apply(&a.apply(p)?)?)
}

/// A `2n x 2n` exact matrix, expected to lie in sp(2n) with respect to the
/// block symplectic form pairing the e-block with the f-block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpMatrix {
    n: usize,
    entries: Vec<Vec<Scalar>>,
}

impl SpMatrix {
    pub fn zeros(n: usize) -> Self {
        SpMatrix {
            n,
            entries: vec![vec![Scalar::zero(); 2 * n]; 2 * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row][col]
    }

    fn add_elementary(&mut self, row: usize, col: usize, c: Scalar) {
        let cur = &self.entries[row][col] + &c;
        self.entries[row][col] = cur;
    }

    /// `X_ij = E_{i,j} - E_{n+j,n+i}` (1-based `i, j <= n`).
    pub fn sp_x(n: usize, i: usize, j: usize) -> Result<Self> {
        check_sp_indices(n, i, j)?;
        let mut m = SpMatrix::zeros(n);
        m.add_elementary(i - 1, j - 1, Scalar::one());
        m.add_elementary(n + j - 1, n + i - 1, Scalar::from_int(-1));
        Ok(m)
    }

    /// `Y_ij = E_{i,n+j} + E_{j,n+i}`.
    pub fn sp_y(n: usize, i: usize, j: usize) -> Result<Self> {
        check_sp_indices(n, i, j)?;
        let mut m = SpMatrix::zeros(n);
        m.add_elementary(i - 1, n + j - 1, Scalar::one());
        m.add_elementary(j - 1, n + i - 1, Scalar::one());
        Ok(m)
    }

    /// `Z_ij = E_{n+i,j} + E_{n+j,i}`.
    pub fn sp_z(n: usize, i: usize, j: usize) -> Result<Self> {
        check_sp_indices(n, i, j)?;
        let mut m = SpMatrix::zeros(n);
        m.add_elementary(n + i - 1, j - 1, Scalar::one());
        m.add_elementary(n + j - 1, i - 1, Scalar::one());
        Ok(m)
    }

    pub fn add(&self, other: &SpMatrix) -> SpMatrix {
        assert_eq!(self.n, other.n);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| a + b).collect())
            .collect();
        SpMatrix { n: self.n, entries }
    }

    pub fn sub(&self, other: &SpMatrix) -> SpMatrix {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> SpMatrix {
        SpMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|v| v * c).collect())
                .collect(),
        }
    }

    pub fn matmul(&self, other: &SpMatrix) -> SpMatrix {
        assert_eq!(self.n, other.n);
        let d = 2 * self.n;
        let mut out = SpMatrix::zeros(self.n);
        for r in 0..d {
            for c in 0..d {
                let mut acc = Scalar::zero();
                for t in 0..d {
                    if self.entries[r][t].is_zero() || other.entries[t][c].is_zero() {
                        continue;
                    }
                    acc += &(&self.entries[r][t] * &other.entries[t][c]);
                }
                out.entries[r][c] = acc;
            }
        }
        out
    }

    pub fn commutator(&self, other: &SpMatrix) -> SpMatrix {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Scalar::is_zero)
    }

    /// Membership test `M^T J + J M = 0` for the block form
    /// `J = [[0, I], [-I, 0]]`.
    pub fn is_symplectic(&self) -> bool {
        let n = self.n;
        let d = 2 * n;
        // (M^T J + J M)[r][c] with J e_i = -f_i, J f_i = e_i columns:
        // (M^T J)[r][c] = sum_t M[t][r] J[t][c]; (J M)[r][c] = sum_t J[r][t] M[t][c].
        let j_entry = |r: usize, c: usize| -> i64 {
            if r < n && c == r + n {
                1
            } else if r >= n && c + n == r {
                -1
            } else {
                0
            }
        };
        for r in 0..d {
            for c in 0..d {
                let mut acc = Scalar::zero();
                for t in 0..d {
                    let jt = j_entry(t, c);
                    if jt != 0 {
                        let v = &self.entries[t][r] * &Scalar::from_int(jt);
                        acc += &v;
                    }
                    let jr = j_entry(r, t);
                    if jr != 0 {
                        let v = &Scalar::from_int(jr) * &self.entries[t][c];
                        acc += &v;
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Applies the matrix as the first-order vector field
    /// `sum_{a,b} M[a][b] x_b d/dx_a`.
    pub fn vectorfield_apply(&self, p: &SPoly) -> Result<SPoly> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        let mut out = SPoly::zero(self.n);
        for a in 0..2 * self.n {
            let da = p.diff(VarBank::Base, a + 1).unwrap();
            if da.is_zero() {
                continue;
            }
            for b in 0..2 * self.n {
                let c = &self.entries[a][b];
                if c.is_zero() {
                    continue;
                }
                out = out + da.mul_var(VarBank::Base, b + 1).unwrap().scale(c);
            }
        }
        Ok(out)
    }

    /// Writes a matrix in sp(2n) as a combination of quadratic Clifford
    /// images: reads the A/B/C blocks off against `rho_star` of the basis.
    pub fn quadratic_decomposition(&self) -> Result<Vec<(Scalar, QuadraticClifford)>> {
        let n = self.n;
        if !self.is_symplectic() {
            return Err(Error::ArgOutOfRange(
                "matrix is not in sp(2n); no quadratic preimage".into(),
            ));
        }
        let mut parts = Vec::new();
        let half = Scalar::from_ratio(1, 2);
        for i in 0..n {
            for j in 0..n {
                let a = &self.entries[i][j];
                if !a.is_zero() {
                    parts.push((a * &half, QuadraticClifford::ef_sym(i + 1, j + 1)));
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let b = &self.entries[i][n + j];
                if !b.is_zero() {
                    let c = if i == j { -&(b * &half) } else { -b };
                    parts.push((c, QuadraticClifford::ee(i + 1, j + 1)));
                }
                let z = &self.entries[n + i][j];
                if !z.is_zero() {
                    let c = if i == j { z * &half } else { z.clone() };
                    parts.push((c, QuadraticClifford::ff(i + 1, j + 1)));
                }
            }
        }
        Ok(parts)
    }
}

/// A quadratic element of the symplectic Clifford algebra, in one of the
/// three shapes carried by the metaplectic correspondence. `Ee`/`Ff` are
/// commutative and stored with `i <= j`; `EfSym(i, j)` is
/// `e_i f_j + f_j e_i`, which is not symmetric in `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum QuadraticClifford {
    Ee(usize, usize),
    Ff(usize, usize),
    EfSym(usize, usize),
}

impl QuadraticClifford {
    pub fn ee(i: usize, j: usize) -> Self {
        QuadraticClifford::Ee(i.min(j), i.max(j))
    }

    pub fn ff(i: usize, j: usize) -> Self {
        QuadraticClifford::Ff(i.min(j), i.max(j))
    }

    pub fn ef_sym(i: usize, j: usize) -> Self {
        QuadraticClifford::EfSym(i, j)
    }

    fn indices(self) -> (usize, usize) {
        match self {
            QuadraticClifford::Ee(i, j)
            | QuadraticClifford::Ff(i, j)
            | QuadraticClifford::EfSym(i, j) => (i, j),
        }
    }
}

impl std::fmt::Display for QuadraticClifford {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuadraticClifford::Ee(i, j) => write!(f, "e{} e{}", i, j),
            QuadraticClifford::Ff(i, j) => write!(f, "f{} f{}", i, j),
            QuadraticClifford::EfSym(i, j) => write!(f, "e{} f{} + f{} e{}", i, j, j, i),
        }
    }
}

/// All quadratic basis elements for a given `n`: `n(2n+1)` of them, matching
/// the dimension of sp(2n).
pub fn quadratic_basis(n: usize) -> Vec<QuadraticClifford> {
    let mut basis = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            basis.push(QuadraticClifford::ee(i, j));
            basis.push(QuadraticClifford::ff(i, j));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            basis.push(QuadraticClifford::ef_sym(i, j));
        }
    }
    basis
}

/// The sp(2n) image of a quadratic Clifford element:
/// `e_i e_j -> -Y_ij`, `f_i f_j -> Z_ij`, `e_i f_j + f_j e_i -> 2 X_ij`.
pub fn rho_star(n: usize, word: QuadraticClifford) -> Result<SpMatrix> {
    let (i, j) = word.indices();
    match word {
        QuadraticClifford::Ee(..) => Ok(SpMatrix::sp_y(n, i, j)?.scale(&Scalar::from_int(-1))),
        QuadraticClifford::Ff(..) => SpMatrix::sp_z(n, i, j),
        QuadraticClifford::EfSym(..) => Ok(SpMatrix::sp_x(n, i, j)?.scale(&Scalar::from_int(2))),
    }
}

/// The metaplectic image of a quadratic Clifford element as an operator on
/// the spinor bank, exactly as displayed:
/// `e_i e_j -> i q_i q_j`, `f_i f_j -> -i d_i d_j`,
/// `e_i f_j + f_j e_i -> q_i d_j + q_j d_i`.
///
/// Requires gaussian scalar mode.
pub fn l_star(n: usize, word: QuadraticClifford, mode: ScalarMode) -> Result<OperatorExpr> {
    if mode == ScalarMode::Rational {
        return Err(Error::GaussianModeRequired);
    }
    let (i, j) = word.indices();
    check_sp_indices(n, i, j)?;
    Ok(match word {
        QuadraticClifford::Ee(..) => OperatorExpr {
            n,
            terms: vec![(Scalar::i(), vec![Atom::MulQ(i), Atom::MulQ(j)])],
        },
        QuadraticClifford::Ff(..) => OperatorExpr {
            n,
            terms: vec![(-&Scalar::i(), vec![Atom::Dq(i), Atom::Dq(j)])],
        },
        QuadraticClifford::EfSym(..) => OperatorExpr {
            n,
            terms: vec![
                (Scalar::one(), vec![Atom::MulQ(i), Atom::Dq(j)]),
                (Scalar::one(), vec![Atom::MulQ(j), Atom::Dq(i)]),
            ],
        },
    })
}

/// Variant of `l_star` whose mixed image is the normal-ordered
/// `q_i d_j + d_j q_i` (it differs from the as-displayed image by the
/// antisymmetric part and, on the diagonal, by the ordering constant).
/// With this choice the bracket correspondence with `rho_star` holds for
/// every generator pair; `verify` compares both variants.
pub fn l_star_normal_ordered(
    n: usize,
    word: QuadraticClifford,
    mode: ScalarMode,
) -> Result<OperatorExpr> {
    match word {
        QuadraticClifford::EfSym(i, j) => {
            if mode == ScalarMode::Rational {
                return Err(Error::GaussianModeRequired);
            }
            check_sp_indices(n, i, j)?;
            Ok(OperatorExpr {
                n,
                terms: vec![
                    (Scalar::one(), vec![Atom::MulQ(i), Atom::Dq(j)]),
                    (Scalar::one(), vec![Atom::Dq(j), Atom::MulQ(i)]),
                ],
            })
        }
        other => l_star(n, other, mode),
    }
}
