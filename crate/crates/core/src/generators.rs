//! Concrete algebras.
//!
//! Basis conventions (the source material fixes none of them):
//!
//! * fermionic systems: `a₋₁, …, a₋_N, a₊₁, …, a₊_N`;
//! * octonions: `e₀, …, e₇` with `e₀` the unit;
//! * exceptional Jordan algebra: `a₁, a₂, a₃` (diagonal), then the eight
//!   octonion coordinates of `x` (entry (1,2)), `y` (entry (1,3)) and `z`
//!   (entry (2,3)), 27 coordinates in all;
//! * `p × q` matrices: `E_ab` at index `a·q + b`;
//! * `Hom(V,W) ⊕ Hom(W,V)`: the `q × p` block first (row-major), then the
//!   `p × q` block.
//!
//! [`quaternion_cross_3lie`], [`sl2`], [`affine2`], [`heisenberg`] and
//! [`dual_numbers`] are small standard inputs for the constructions, not
//! examples in their own right.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, HomAlgebra};
use crate::constructions::{ConstructionError, Constructor, TraceFunctional};
use crate::identities::{Witness, WitnessArgs};
use crate::linalg::{frac, int, LinalgError, LinearMap, MultilinearMap, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypothesis `{hypothesis}` violated: {witness}")]
    Hypothesis {
        hypothesis: String,
        witness: Box<Witness>,
    },
    #[error("direct table and twist construction disagree at {0:?}")]
    TableMismatch(Vec<usize>),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Result<T> = std::result::Result<T, GeneratorError>;

fn table(dim: usize, arity: usize, f: impl Fn(&[usize]) -> Vector + Sync) -> MultilinearMap {
    MultilinearMap::from_fn(dim, arity, f).expect("generator dimensions are valid")
}

fn first_difference(a: &MultilinearMap, b: &MultilinearMap) -> Option<Vec<usize>> {
    let mut keys: Vec<Vec<usize>> = a
        .entries()
        .into_iter()
        .chain(b.entries())
        .map(|(k, _)| k)
        .collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().find(|k| a.get(k).ok() != b.get(k).ok())
}

// ---------------------------------------------------------------------------
// bilinear forms and fermionic systems

/// Symmetric bilinear form `⟨x,y⟩ = xᵗMy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: LinearMap,
}

impl BilinearForm {
    pub fn new(matrix: LinearMap) -> Result<Self> {
        if matrix.transpose() != matrix {
            return Err(GeneratorError::InvalidParameter(
                "bilinear form matrix is not symmetric".into(),
            ));
        }
        Ok(Self { matrix })
    }

    /// `⟨a_{∓j}, a_{±k}⟩ = δ_jk`, `⟨a_{±j}, a_{±k}⟩ = 0` on `2N` generators.
    pub fn fermionic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(GeneratorError::InvalidParameter("N must be positive".into()));
        }
        let mut m = LinearMap::zero(2 * n);
        for j in 0..n {
            m.set_entry(j, n + j, Scalar::one());
            m.set_entry(n + j, j, Scalar::one());
        }
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &LinearMap {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.entry(i, j)
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.matrix.apply_unchecked(y))
    }
}

/// `[xyz] = λ(⟨y,z⟩x − ⟨z,x⟩y)`, twists identity.
pub fn bilinear_lts(form: &BilinearForm, lambda: &Scalar) -> HomAlgebra {
    let dim = form.dim();
    HomAlgebra::untwisted(table(dim, 3, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut v = Vector::zero(dim);
        v.add_scaled(&(lambda * form.entry(j, k)), &Vector::basis(dim, i));
        v.add_scaled(&-(lambda * form.entry(k, i)), &Vector::basis(dim, j));
        v
    }))
}

/// `{xyz} = λ(⟨x,y⟩z + ⟨y,z⟩x − ⟨z,x⟩y)`, twists identity.
pub fn bilinear_jts(form: &BilinearForm, lambda: &Scalar) -> HomAlgebra {
    let dim = form.dim();
    HomAlgebra::untwisted(table(dim, 3, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut v = Vector::zero(dim);
        v.add_scaled(&(lambda * form.entry(i, j)), &Vector::basis(dim, k));
        v.add_scaled(&(lambda * form.entry(j, k)), &Vector::basis(dim, i));
        v.add_scaled(&-(lambda * form.entry(k, i)), &Vector::basis(dim, j));
        v
    }))
}

/// Index of `a_{+j}` (`plus`) or `a_{−j}` for 1-based `j`.
pub fn fermion_index(n: usize, plus: bool, j: usize) -> usize {
    assert!((1..=n).contains(&j), "fermion label out of range");
    if plus {
        n + j - 1
    } else {
        j - 1
    }
}

/// `α(a_{±j}) = η_j^{±1} a_{±j}`.
pub fn fermionic_alpha(eta: &[Scalar]) -> Result<LinearMap> {
    if let Some(j) = eta.iter().position(|e| e.is_zero()) {
        return Err(GeneratorError::InvalidParameter(format!("η_{} is zero", j + 1)));
    }
    let mut diag: Vec<Scalar> = eta.iter().map(|e| e.recip()).collect();
    diag.extend(eta.iter().cloned());
    Ok(LinearMap::diagonal(diag))
}

/// The product table of the twisted fermionic system written out case by
/// case, independent of the twist construction.
pub fn fermionic_direct_table(n: usize, lambda: &Scalar, eta: &[Scalar]) -> Result<MultilinearMap> {
    if eta.len() != n {
        return Err(GeneratorError::InvalidParameter(format!(
            "expected {n} values of η, got {}",
            eta.len()
        )));
    }
    if let Some(j) = eta.iter().position(|e| e.is_zero()) {
        return Err(GeneratorError::InvalidParameter(format!("η_{} is zero", j + 1)));
    }
    let dim = 2 * n;
    // (sign, 1-based label) of a basis index
    let label = |idx: usize| (idx >= n, idx % n + 1);
    let eta_pow = |plus: bool, j: usize| {
        if plus {
            eta[j - 1].clone()
        } else {
            eta[j - 1].recip()
        }
    };
    let delta = |a: usize, b: usize| if a == b { Scalar::one() } else { Scalar::zero() };
    Ok(table(dim, 3, |t| {
        let (s, i) = label(t[0]);
        let (u, j) = label(t[1]);
        let (w, k) = label(t[2]);
        let mut v = Vector::zero(dim);
        if s == u && w != s {
            // [a±i, a±j, a∓k]
            v.add_scaled(&(lambda * delta(j, k) * eta_pow(s, i)), &Vector::basis(dim, t[0]));
            v.add_scaled(&-(lambda * delta(k, i) * eta_pow(u, j)), &Vector::basis(dim, t[1]));
        } else if s == w && u != s {
            // [a±i, a∓j, a±k]
            v.add_scaled(&(lambda * delta(j, k) * eta_pow(s, i)), &Vector::basis(dim, t[0]));
        } else if u == w && s != u {
            // [a∓i, a±j, a±k]
            v.add_scaled(&-(lambda * delta(k, i) * eta_pow(u, j)), &Vector::basis(dim, t[1]));
        }
        v
    }))
}

/// The twisted fermionic triple system `V_α = twist(bilinear_lts, α)` and `α`.
///
/// The twist output is compared with [`fermionic_direct_table`]; a mismatch
/// is reported as [`GeneratorError::TableMismatch`].
pub fn fermionic_system(n: usize, lambda: &Scalar, eta: &[Scalar]) -> Result<(HomAlgebra, LinearMap)> {
    if n < 2 {
        return Err(GeneratorError::InvalidParameter("N must be at least 2".into()));
    }
    if eta.len() != n {
        return Err(GeneratorError::InvalidParameter(format!(
            "expected {n} values of η, got {}",
            eta.len()
        )));
    }
    let alpha = fermionic_alpha(eta)?;
    let base = bilinear_lts(&BilinearForm::fermionic(n)?, lambda);
    let twisted = Constructor::default().twist(&base, &alpha)?;
    let direct = fermionic_direct_table(n, lambda, eta)?;
    if let Some(t) = first_difference(&direct, twisted.bracket()) {
        return Err(GeneratorError::TableMismatch(t));
    }
    Ok((twisted, alpha))
}

// ---------------------------------------------------------------------------
// octonions

/// `OCTONION_TABLE[i][j] = (sign, k)` means `eᵢ eⱼ = sign · e_k`.
pub const OCTONION_TABLE: [[(i8, usize); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)],
    [(1, 2), (-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(1, 3), (-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)],
    [(1, 4), (1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)],
    [(1, 5), (-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)],
    [(1, 6), (1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)],
    [(1, 7), (1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)],
];

pub fn octonions() -> HomAlgebra {
    HomAlgebra::untwisted(table(8, 2, |t| {
        let (sign, k) = OCTONION_TABLE[t[0]][t[1]];
        Vector::basis(8, k).scale(&int(sign as i64))
    }))
}

fn permutation_map(images: &[usize]) -> LinearMap {
    let dim = images.len();
    let cols: Vec<Vector> = images.iter().map(|&k| Vector::basis(dim, k)).collect();
    LinearMap::from_columns(&cols).expect("square permutation")
}

/// The automorphism sending the basic triple `(e₁,e₂,e₃)` to `(e₅,e₆,e₇)`.
pub fn octonion_basic_triple_automorphism() -> LinearMap {
    permutation_map(&[0, 5, 6, 7, 1, 2, 3, 4])
}

/// `x̄ = b₀e₀ − Σ bᵢeᵢ`.
pub fn octonion_conjugate() -> LinearMap {
    let mut diag = vec![-Scalar::one(); 8];
    diag[0] = Scalar::one();
    LinearMap::diagonal(diag)
}

fn oct_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); 8];
    for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            let (sign, k) = OCTONION_TABLE[i][j];
            let p = xi * yj;
            if sign > 0 {
                out[k] += p;
            } else {
                out[k] -= p;
            }
        }
    }
    out
}

fn oct_conj(x: &[Scalar]) -> Vec<Scalar> {
    x.iter()
        .enumerate()
        .map(|(i, s)| if i == 0 { s.clone() } else { -s.clone() })
        .collect()
}

// ---------------------------------------------------------------------------
// exceptional Jordan algebra

/// Off-diagonal positions of `x`, `y`, `z` (0-based matrix entries).
const OFF_DIAGONAL: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

type OctMatrix = Vec<Vec<Vec<Scalar>>>;

fn hermitian_from_coords(v: &Vector) -> OctMatrix {
    let mut m = vec![vec![vec![Scalar::zero(); 8]; 3]; 3];
    for r in 0..3 {
        m[r][r][0] = v.get(r).clone();
    }
    for (block, &(r, c)) in OFF_DIAGONAL.iter().enumerate() {
        let o: Vec<Scalar> = (0..8).map(|k| v.get(3 + 8 * block + k).clone()).collect();
        m[c][r] = oct_conj(&o);
        m[r][c] = o;
    }
    m
}

fn coords_from_hermitian(m: &OctMatrix) -> Vector {
    let mut v = Vector::zero(27);
    for r in 0..3 {
        debug_assert!(m[r][r][1..].iter().all(|s| s.is_zero()));
        v.set(r, m[r][r][0].clone());
    }
    for (block, &(r, c)) in OFF_DIAGONAL.iter().enumerate() {
        for k in 0..8 {
            v.set(3 + 8 * block + k, m[r][c][k].clone());
        }
    }
    v
}

fn oct_matmul(a: &OctMatrix, b: &OctMatrix) -> OctMatrix {
    let mut out = vec![vec![vec![Scalar::zero(); 8]; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            for k in 0..3 {
                let p = oct_mul(&a[r][k], &b[k][c]);
                for (o, s) in out[r][c].iter_mut().zip(p) {
                    *o += s;
                }
            }
        }
    }
    out
}

/// The 27-dimensional algebra of Hermitian `3 × 3` octonionic matrices with
/// `X ∗ Y = ½(XY + YX)`.
pub fn exceptional_jordan() -> HomAlgebra {
    let half = frac(1, 2);
    let mats: Vec<OctMatrix> = (0..27).map(|i| hermitian_from_coords(&Vector::basis(27, i))).collect();
    HomAlgebra::untwisted(table(27, 2, |t| {
        let (x, y) = (&mats[t[0]], &mats[t[1]]);
        let mut s = oct_matmul(x, y);
        let yx = oct_matmul(y, x);
        for r in 0..3 {
            for c in 0..3 {
                for k in 0..8 {
                    s[r][c][k] = (&s[r][c][k] + &yx[r][c][k]) * &half;
                }
            }
        }
        coords_from_hermitian(&s)
    }))
}

/// Entry-wise extension of an octonion map to the exceptional Jordan algebra.
///
/// Refuses unless `α(e₀) = e₀` and `α(x̄) = ᾱ(x)` on every basis octonion.
pub fn lift_octonion_map(alpha: &LinearMap) -> Result<LinearMap> {
    if alpha.dim() != 8 {
        return Err(LinalgError::DimensionMismatch {
            context: "octonion map".into(),
            expected: 8,
            found: alpha.dim(),
        }
        .into());
    }
    let e0 = Vector::basis(8, 0);
    let image = alpha.apply_unchecked(&e0);
    if image != e0 {
        return Err(GeneratorError::Hypothesis {
            hypothesis: "unit-preserving".into(),
            witness: Box::new(Witness {
                identity_name: "α(e0) = e0".into(),
                args: WitnessArgs::Basis(vec![0]),
                lhs: image,
                rhs: e0,
            }),
        });
    }
    let conj = octonion_conjugate();
    for j in 0..8 {
        let e = Vector::basis(8, j);
        let lhs = alpha.apply_unchecked(&conj.apply_unchecked(&e));
        let rhs = conj.apply_unchecked(&alpha.apply_unchecked(&e));
        if lhs != rhs {
            return Err(GeneratorError::Hypothesis {
                hypothesis: "conjugate-preserving".into(),
                witness: Box::new(Witness {
                    identity_name: "α(x̄) = conj(α(x))".into(),
                    args: WitnessArgs::Basis(vec![j]),
                    lhs,
                    rhs,
                }),
            });
        }
    }
    let mut m = LinearMap::identity(27);
    for block in 0..3 {
        let off = 3 + 8 * block;
        for i in 0..8 {
            for j in 0..8 {
                m.set_entry(off + i, off + j, alpha.entry(i, j).clone());
            }
        }
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// matrix algebras and triple systems

/// Full `n × n` matrix algebra, `E_ab E_cd = δ_bc E_ad`.
pub fn matrix_algebra(n: usize) -> Result<HomAlgebra> {
    if n == 0 {
        return Err(GeneratorError::InvalidParameter("matrix size must be positive".into()));
    }
    let dim = n * n;
    Ok(HomAlgebra::untwisted(table(dim, 2, |t| {
        let (a, b) = (t[0] / n, t[0] % n);
        let (c, d) = (t[1] / n, t[1] % n);
        if b == c {
            Vector::basis(dim, a * n + d)
        } else {
            Vector::zero(dim)
        }
    })))
}

/// Transpose on `n × n` matrices.
pub fn matrix_transpose(n: usize) -> LinearMap {
    let images: Vec<usize> = (0..n * n).map(|i| (i % n) * n + i / n).collect();
    permutation_map(&images)
}

/// `X ↦ D X D⁻¹` for the invertible diagonal `D = diag(d)`.
pub fn diagonal_conjugation(d: &[Scalar]) -> Result<LinearMap> {
    if d.is_empty() || d.iter().any(|s| s.is_zero()) {
        return Err(GeneratorError::InvalidParameter(
            "diagonal entries must be nonzero".into(),
        ));
    }
    let n = d.len();
    let diag = (0..n * n).map(|i| &d[i / n] / &d[i % n]).collect();
    Ok(LinearMap::diagonal(diag))
}

/// `{xyz} = xyᵗz + zyᵗx` on `p × q` matrices.
pub fn matrix_jts(p: usize, q: usize) -> Result<HomAlgebra> {
    if p == 0 || q == 0 {
        return Err(GeneratorError::InvalidParameter("p and q must be positive".into()));
    }
    let dim = p * q;
    let split = |i: usize| (i / q, i % q);
    // E_ab E_dc E_ef = δ_bd δ_ce E_af
    let term = |x: usize, y: usize, z: usize| {
        let ((a, b), (c, d), (e, f)) = (split(x), split(y), split(z));
        (b == d && c == e).then(|| a * q + f)
    };
    Ok(HomAlgebra::untwisted(table(dim, 3, |t| {
        let mut v = Vector::zero(dim);
        for idx in [term(t[0], t[1], t[2]), term(t[2], t[1], t[0])].into_iter().flatten() {
            let s = v.get(idx) + Scalar::one();
            v.set(idx, s);
        }
        v
    })))
}

/// `{xyz} = xθ(y)z + zθ(y)x` for an associative algebra `a` with an
/// involutive anti-morphism `θ`; both properties of `θ` are checked on basis
/// elements.
pub fn involution_jts(a: &HomAlgebra, theta: &LinearMap) -> Result<HomAlgebra> {
    if a.arity() != 2 {
        return Err(GeneratorError::InvalidParameter("involution_jts needs a binary algebra".into()));
    }
    let dim = a.dim();
    if theta.dim() != dim {
        return Err(LinalgError::DimensionMismatch {
            context: "involution".into(),
            expected: dim,
            found: theta.dim(),
        }
        .into());
    }
    let e: Vec<Vector> = (0..dim).map(|i| Vector::basis(dim, i)).collect();
    for (i, x) in e.iter().enumerate() {
        let back = theta.apply_unchecked(&theta.apply_unchecked(x));
        if &back != x {
            return Err(GeneratorError::Hypothesis {
                hypothesis: "θ² = Id".into(),
                witness: Box::new(Witness {
                    identity_name: "involutive".into(),
                    args: WitnessArgs::Basis(vec![i]),
                    lhs: back,
                    rhs: x.clone(),
                }),
            });
        }
    }
    for (i, x) in e.iter().enumerate() {
        for (j, y) in e.iter().enumerate() {
            let lhs = theta.apply_unchecked(&a.br(&[x, y]));
            let rhs = a.br(&[&theta.apply_unchecked(y), &theta.apply_unchecked(x)]);
            if lhs != rhs {
                return Err(GeneratorError::Hypothesis {
                    hypothesis: "θ(ab) = θ(b)θ(a)".into(),
                    witness: Box::new(Witness {
                        identity_name: "anti-morphism".into(),
                        args: WitnessArgs::Basis(vec![i, j]),
                        lhs,
                        rhs,
                    }),
                });
            }
        }
    }
    let images: Vec<Vector> = e.iter().map(|v| theta.apply_unchecked(v)).collect();
    Ok(HomAlgebra::untwisted(table(dim, 3, |t| {
        let ty = &images[t[1]];
        let mut v = a.br(&[&a.br(&[&e[t[0]], ty]), &e[t[2]]]);
        v.add_assign_vec(&a.br(&[&a.br(&[&e[t[2]], ty]), &e[t[0]]]));
        v
    })))
}

type Dense = Vec<Vec<Scalar>>;

fn dense_zero(r: usize, c: usize) -> Dense {
    vec![vec![Scalar::zero(); c]; r]
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = dense_zero(r, c);
    for i in 0..r {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..c {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// Ternary ring `(f₁⊕g₁, f₂⊕g₂, f₃⊕g₃) = f₃g₂f₁ ⊕ g₃f₂g₁` on
/// `Hom(V,W) ⊕ Hom(W,V)` with `dim V = p`, `dim W = q`, together with the
/// automorphism `α(f⊕g) = γ⁻¹fβ ⊕ β⁻¹gγ` for invertible `β` on `V` and `γ`
/// on `W`.
pub fn hom_pair_ternary_ring(
    p: usize,
    q: usize,
    beta: &LinearMap,
    gamma: &LinearMap,
) -> Result<(HomAlgebra, LinearMap)> {
    if p == 0 || q == 0 {
        return Err(GeneratorError::InvalidParameter("p and q must be positive".into()));
    }
    if beta.dim() != p || gamma.dim() != q {
        return Err(GeneratorError::InvalidParameter(format!(
            "β must be {p}×{p} and γ must be {q}×{q}"
        )));
    }
    let beta_inv = beta.inverse()?;
    let gamma_inv = gamma.inverse()?;
    let dim = 2 * p * q;
    let fsize = p * q;
    // basis element i as (f: q×p, g: p×q)
    let unpack = |v: &Vector| {
        let mut f = dense_zero(q, p);
        let mut g = dense_zero(p, q);
        for (i, s) in v.support() {
            if i < fsize {
                f[i / p][i % p] = s.clone();
            } else {
                let k = i - fsize;
                g[k / q][k % q] = s.clone();
            }
        }
        (f, g)
    };
    let pack = |f: &Dense, g: &Dense| {
        let mut v = Vector::zero(dim);
        for r in 0..q {
            for c in 0..p {
                v.set(r * p + c, f[r][c].clone());
            }
        }
        for r in 0..p {
            for c in 0..q {
                v.set(fsize + r * q + c, g[r][c].clone());
            }
        }
        v
    };
    let parts: Vec<(Dense, Dense)> = (0..dim).map(|i| unpack(&Vector::basis(dim, i))).collect();
    let bracket = table(dim, 3, |t| {
        let (f1, g1) = &parts[t[0]];
        let (f2, g2) = &parts[t[1]];
        let (f3, g3) = &parts[t[2]];
        let f = dense_mul(&dense_mul(f3, g2), f1);
        let g = dense_mul(&dense_mul(g3, f2), g1);
        pack(&f, &g)
    });
    let b: Dense = beta.rows().to_vec();
    let bi: Dense = beta_inv.rows().to_vec();
    let c: Dense = gamma.rows().to_vec();
    let ci: Dense = gamma_inv.rows().to_vec();
    let cols: Vec<Vector> = parts
        .iter()
        .map(|(f, g)| pack(&dense_mul(&dense_mul(&ci, f), &b), &dense_mul(&dense_mul(&bi, g), &c)))
        .collect();
    let alpha = LinearMap::from_columns(&cols)?;
    Ok((HomAlgebra::untwisted(bracket), alpha))
}

// ---------------------------------------------------------------------------
// small standard inputs

fn permutation_sign(p: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// 4-dimensional 3-Lie algebra `[eᵢ,eⱼ,e_k] = sign(i,j,k,l)·e_l`.
pub fn quaternion_cross_3lie() -> HomAlgebra {
    HomAlgebra::untwisted(table(4, 3, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        if i == j || j == k || i == k {
            return Vector::zero(4);
        }
        let l = 6 - i - j - k;
        Vector::basis(4, l).scale(&int(permutation_sign(&[i, j, k, l])))
    }))
}

fn binary_from_relations(dim: usize, relations: &[(usize, usize, Vector)]) -> HomAlgebra {
    let mut m = MultilinearMap::zero(dim, 2).expect("valid");
    for (i, j, v) in relations {
        m.set(&[*i, *j], v.clone()).expect("in range");
        m.set(&[*j, *i], -v).expect("in range");
    }
    HomAlgebra::untwisted(m)
}

/// `sl(2)` on `(h, e, f)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> HomAlgebra {
    binary_from_relations(
        3,
        &[
            (0, 1, Vector::from_ints(&[0, 2, 0])),
            (0, 2, Vector::from_ints(&[0, 0, -2])),
            (1, 2, Vector::from_ints(&[1, 0, 0])),
        ],
    )
}

/// `h ↦ h`, `e ↦ t·e`, `f ↦ t⁻¹·f`, an automorphism of `sl(2)` for `t ≠ 0`.
pub fn sl2_scaling(t: &Scalar) -> Result<LinearMap> {
    if t.is_zero() {
        return Err(GeneratorError::InvalidParameter("t must be nonzero".into()));
    }
    Ok(LinearMap::diagonal(vec![Scalar::one(), t.clone(), t.recip()]))
}

/// The 2-dimensional non-abelian Lie algebra `[e₁,e₂] = e₂`.
pub fn affine2() -> HomAlgebra {
    binary_from_relations(2, &[(0, 1, Vector::from_ints(&[0, 1]))])
}

/// `τ = (1, 0)` on [`affine2`].
pub fn affine2_trace() -> TraceFunctional {
    TraceFunctional::from_ints(&[1, 0])
}

/// Heisenberg algebra `[e₁,e₂] = e₃`.
pub fn heisenberg() -> HomAlgebra {
    binary_from_relations(3, &[(0, 1, Vector::from_ints(&[0, 0, 1]))])
}

/// Dual numbers `k[ε]/(ε²)` on `(1, ε)`.
pub fn dual_numbers() -> HomAlgebra {
    let mut m = MultilinearMap::zero(2, 2).expect("valid");
    m.set(&[0, 0], Vector::from_ints(&[1, 0])).expect("in range");
    m.set(&[0, 1], Vector::from_ints(&[0, 1])).expect("in range");
    m.set(&[1, 0], Vector::from_ints(&[0, 1])).expect("in range");
    HomAlgebra::untwisted(m)
}

/// `1 ↦ 1`, `ε ↦ t·ε`, an automorphism of [`dual_numbers`].
pub fn dual_numbers_scaling(t: &Scalar) -> LinearMap {
    LinearMap::diagonal(vec![Scalar::one(), t.clone()])
}
