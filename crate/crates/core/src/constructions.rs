//! Algebra-to-algebra constructions.
//!
//! Every construction is conditional on hypotheses about its input (a weak
//! morphism, multiplicativity, a Hom-associative or Hom-Lie input, a fixed
//! point of the first twisting map, ...). A [`Constructor`] checks them
//! before building anything and refuses with a [`Witness`] when one fails.
//! [`Constructor::unchecked`] skips the checks.
//!
//! Outputs are materialized eagerly as structure constants, so two routes to
//! the same algebra can be compared table against table.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, HomAlgebra};
use crate::identities::driver::{self, Condition};
use crate::identities::{
    check_antisymmetry, check_hom_associative, check_hom_lie, check_hom_nambu,
    check_jordan_algebra, check_maltsev, CheckConfig, CheckError, CheckMode, CheckReport, Witness,
    WitnessArgs,
};
use crate::linalg::{frac, int, tuple_count, LinalgError, LinearMap, MultilinearMap, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{construction}: hypothesis `{hypothesis}` violated: {witness}")]
    Hypothesis {
        construction: &'static str,
        hypothesis: String,
        witness: Box<Witness>,
    },
    #[error("{construction}: could not check hypothesis `{hypothesis}`: {source}")]
    Check {
        construction: &'static str,
        hypothesis: String,
        source: CheckError,
    },
    #[error("{construction} requires arity {expected}, algebra has arity {found}")]
    Arity {
        construction: &'static str,
        expected: String,
        found: usize,
    },
    #[error("{construction}: output table needs {entries} basis tuples, budget is {budget}")]
    TableBudget {
        construction: &'static str,
        entries: u128,
        budget: u128,
    },
    #[error("{construction}: {detail}")]
    InvalidParameter {
        construction: &'static str,
        detail: String,
    },
    #[error("{construction}: the two construction routes disagree at {tuple:?}")]
    PathMismatch {
        construction: &'static str,
        tuple: Vec<usize>,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

/// A linear form `τ(x) = Σ cᵢ xᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFunctional {
    coefficients: Vec<Scalar>,
}

impl TraceFunctional {
    pub fn new(coefficients: Vec<Scalar>) -> Self {
        Self { coefficients }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn eval(&self, v: &Vector) -> Scalar {
        Vector::from_entries(self.coefficients.clone()).dot(v)
    }
}

/// Default largest output table (number of basis tuples) a construction may
/// materialize.
pub const DEFAULT_TABLE_BUDGET: u128 = 10_000_000;

/// Runs constructions, checking their hypotheses first unless built with
/// [`Constructor::unchecked`].
#[derive(Clone, Copy, Debug)]
pub struct Constructor {
    pub cfg: CheckConfig,
    pub verify: bool,
    pub table_budget: u128,
}

impl Default for Constructor {
    fn default() -> Self {
        Self {
            cfg: CheckConfig::default(),
            verify: true,
            table_budget: DEFAULT_TABLE_BUDGET,
        }
    }
}

fn basis(dim: usize) -> Vec<Vector> {
    (0..dim).map(|i| Vector::basis(dim, i)).collect()
}

fn scalar_vec(s: Scalar) -> Vector {
    Vector::from_entries(vec![s])
}

fn require_arity(l: &HomAlgebra, construction: &'static str, expected: usize) -> Result<()> {
    if l.arity() != expected {
        return Err(ConstructionError::Arity {
            construction,
            expected: expected.to_string(),
            found: l.arity(),
        });
    }
    Ok(())
}

fn first_table_difference(a: &MultilinearMap, b: &MultilinearMap) -> Option<Vec<usize>> {
    if a == b {
        return None;
    }
    let ea = a.entries();
    let eb = b.entries();
    let mut keys: Vec<Vec<usize>> = ea
        .iter()
        .map(|(k, _)| k.clone())
        .chain(eb.iter().map(|(k, _)| k.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .find(|k| a.get(k).ok() != b.get(k).ok())
        .or(Some(Vec::new()))
}

impl Constructor {
    pub fn new(cfg: CheckConfig) -> Self {
        Self {
            cfg,
            ..Self::default()
        }
    }

    /// Skip every hypothesis check.
    pub fn unchecked() -> Self {
        Self {
            verify: false,
            ..Self::default()
        }
    }

    fn require(
        &self,
        construction: &'static str,
        hypothesis: &str,
        check: impl FnOnce() -> std::result::Result<CheckReport, CheckError>,
    ) -> Result<()> {
        if !self.verify {
            return Ok(());
        }
        let report = check().map_err(|source| ConstructionError::Check {
            construction,
            hypothesis: hypothesis.to_string(),
            source,
        })?;
        if let Some(witness) = report.witness {
            return Err(ConstructionError::Hypothesis {
                construction,
                hypothesis: hypothesis.to_string(),
                witness: Box::new(witness),
            });
        }
        Ok(())
    }

    fn materialize<F>(&self, construction: &'static str, dim: usize, arity: usize, f: F) -> Result<MultilinearMap>
    where
        F: Fn(&[usize]) -> Vector + Sync,
    {
        let entries = tuple_count(dim, arity);
        if entries > self.table_budget {
            return Err(ConstructionError::TableBudget {
                construction,
                entries,
                budget: self.table_budget,
            });
        }
        Ok(MultilinearMap::from_fn(dim, arity, f)?)
    }

    fn equal_twists<'a>(&self, l: &'a HomAlgebra, construction: &'static str) -> Result<&'a LinearMap> {
        if let Some(alpha) = l.common_twist() {
            return Ok(alpha);
        }
        let report = l.is_multiplicative();
        let witness = report
            .witness
            .filter(|w| w.identity_name.starts_with("twists-equal"))
            .expect("unequal twists produce a twists-equal witness");
        Err(ConstructionError::Hypothesis {
            construction,
            hypothesis: "equal twisting maps".into(),
            witness: Box::new(witness),
        })
    }

    fn path_check(&self, construction: &'static str, direct: &MultilinearMap, composed: &MultilinearMap) -> Result<()> {
        if let Some(tuple) = first_table_difference(direct, composed) {
            return Err(ConstructionError::PathMismatch { construction, tuple });
        }
        Ok(())
    }

    /// `V_β = (V, β ∘ [·], (βα₁, …, βα_{n−1}))` for a weak self-morphism `β`.
    pub fn twist(&self, v: &HomAlgebra, beta: &LinearMap) -> Result<HomAlgebra> {
        const NAME: &str = "twist";
        if beta.dim() != v.dim() {
            return Err(LinalgError::DimensionMismatch {
                context: "twisting map".into(),
                expected: v.dim(),
                found: beta.dim(),
            }
            .into());
        }
        self.require(NAME, "β is a weak self-morphism", || {
            Ok(HomAlgebra::is_weak_morphism(beta, v, v)?)
        })?;
        let bracket = v.bracket().twist_product(beta)?;
        let twists = v
            .twists()
            .iter()
            .map(|a| beta.compose(a))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(HomAlgebra::new(bracket, twists)?)
    }

    /// `V_k = (V, α^{2^k−1} ∘ [·], α^{2^k})` for multiplicative `V`.
    pub fn derived(&self, v: &HomAlgebra, k: u32) -> Result<HomAlgebra> {
        const NAME: &str = "derived";
        if k > 62 {
            return Err(ConstructionError::InvalidParameter {
                construction: NAME,
                detail: format!("iteration count {k} is too large"),
            });
        }
        self.require(NAME, "multiplicative", || Ok(v.is_multiplicative()))?;
        let alpha = v.twist(0);
        let exp = 1u64 << k;
        let bracket = v.bracket().twist_product(&alpha.power(exp - 1))?;
        Ok(HomAlgebra::with_common_twist(bracket, alpha.power(exp))?)
    }

    /// The ternary twist `(V, β ∘ (,,), (βα₁, βα₂))`.
    pub fn ternary_twist(&self, v: &HomAlgebra, beta: &LinearMap) -> Result<HomAlgebra> {
        require_arity(v, "ternary_twist", 3)?;
        self.twist(v, beta)
    }

    /// `{xyz} = (xyz) + (zyx)`. Ternary Hom-associativity of the input is not
    /// re-verified.
    pub fn jts_from_ternary_assoc(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "jts_from_ternary_assoc";
        require_arity(a, NAME, 3)?;
        let alpha = self.equal_twists(a, NAME)?.clone();
        let m = a.bracket();
        let bracket = self.materialize(NAME, a.dim(), 3, |i| {
            let mut v = m.get(i).expect("in range");
            v.add_assign_vec(&m.get(&[i[2], i[1], i[0]]).expect("in range"));
            v
        })?;
        Ok(HomAlgebra::with_common_twist(bracket, alpha)?)
    }

    /// Meyberg: `[xyz] = {xyz} − {yxz}`.
    pub fn lts_from_jts(&self, j: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "lts_from_jts";
        require_arity(j, NAME, 3)?;
        let alpha = self.equal_twists(j, NAME)?.clone();
        let m = j.bracket();
        let bracket = self.materialize(NAME, j.dim(), 3, |i| {
            let mut v = m.get(i).expect("in range");
            v.sub_assign_vec(&m.get(&[i[1], i[0], i[2]]).expect("in range"));
            v
        })?;
        Ok(HomAlgebra::with_common_twist(bracket, alpha)?)
    }

    /// `[xyz] = (xyz) − (yxz) − (zxy) + (zyx)`; when verifying, also compared
    /// against `lts_from_jts ∘ jts_from_ternary_assoc`.
    pub fn lts_from_ternary_assoc(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "lts_from_ternary_assoc";
        require_arity(a, NAME, 3)?;
        let alpha = self.equal_twists(a, NAME)?.clone();
        let m = a.bracket();
        let g = |x: usize, y: usize, z: usize| m.get(&[x, y, z]).expect("in range");
        let bracket = self.materialize(NAME, a.dim(), 3, |i| {
            let (x, y, z) = (i[0], i[1], i[2]);
            let mut v = g(x, y, z);
            v.sub_assign_vec(&g(y, x, z));
            v.sub_assign_vec(&g(z, x, y));
            v.add_assign_vec(&g(z, y, x));
            v
        })?;
        if self.verify {
            let composed = self.lts_from_jts(&self.jts_from_ternary_assoc(a)?)?;
            self.path_check(NAME, &bracket, composed.bracket())?;
        }
        Ok(HomAlgebra::with_common_twist(bracket, alpha)?)
    }

    /// `A_T = (A, μ ∘ (μ ⊗ α), α²)` for Hom-associative `A`.
    pub fn ternary_assoc_from_hom_assoc(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "ternary_assoc_from_hom_assoc";
        require_arity(a, NAME, 2)?;
        self.require(NAME, "Hom-associative", || check_hom_associative(a, &self.cfg))?;
        let e = basis(a.dim());
        let alpha = a.twist(0);
        let twisted: Vec<Vector> = e.iter().map(|v| alpha.apply_unchecked(v)).collect();
        let bracket = self.materialize(NAME, a.dim(), 3, |i| {
            let xy = a.br(&[&e[i[0]], &e[i[1]]]);
            a.br(&[&xy, &twisted[i[2]]])
        })?;
        Ok(HomAlgebra::with_common_twist(bracket, alpha.power(2))?)
    }

    /// `L_T = (L, [,] ∘ ([,] ⊗ α), α²)` for multiplicative Hom-Lie `L`.
    pub fn lts_from_hom_lie(&self, l: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "lts_from_hom_lie";
        require_arity(l, NAME, 2)?;
        self.require(NAME, "Hom-Lie", || check_hom_lie(l, &self.cfg))?;
        self.require(NAME, "multiplicative", || Ok(l.is_multiplicative()))?;
        let e = basis(l.dim());
        let alpha = l.twist(0);
        let twisted: Vec<Vector> = e.iter().map(|v| alpha.apply_unchecked(v)).collect();
        let bracket = self.materialize(NAME, l.dim(), 3, |i| {
            let xy = l.br(&[&e[i[0]], &e[i[1]]]);
            l.br(&[&xy, &twisted[i[2]]])
        })?;
        Ok(HomAlgebra::with_common_twist(bracket, alpha.power(2))?)
    }

    /// `A_L = (A, [,,], α²)` with
    /// `[xyz] = (xy)α(z) − (yx)α(z) − (zx)α(y) + (zy)α(x)`; when verifying,
    /// also compared against `lts_from_ternary_assoc ∘ ternary_assoc_from_hom_assoc`.
    pub fn lts_from_hom_assoc(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "lts_from_hom_assoc";
        require_arity(a, NAME, 2)?;
        self.require(NAME, "Hom-associative", || check_hom_associative(a, &self.cfg))?;
        let e = basis(a.dim());
        let alpha = a.twist(0);
        let twisted: Vec<Vector> = e.iter().map(|v| alpha.apply_unchecked(v)).collect();
        let term = |p: usize, q: usize, r: usize| {
            let pq = a.br(&[&e[p], &e[q]]);
            a.br(&[&pq, &twisted[r]])
        };
        let bracket = self.materialize(NAME, a.dim(), 3, |i| {
            let (x, y, z) = (i[0], i[1], i[2]);
            let mut v = term(x, y, z);
            v.sub_assign_vec(&term(y, x, z));
            v.sub_assign_vec(&term(z, x, y));
            v.add_assign_vec(&term(z, y, x));
            v
        })?;
        if self.verify {
            let inner = Constructor { verify: false, ..*self };
            let composed = inner.lts_from_ternary_assoc(&inner.ternary_assoc_from_hom_assoc(a)?)?;
            self.path_check(NAME, &bracket, composed.bracket())?;
        }
        Ok(HomAlgebra::with_common_twist(bracket, alpha.power(2))?)
    }

    /// Anti-commutator algebra `x ∗ y = (xy + yx)/2`, same twisting map.
    pub fn plus_algebra(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "plus_algebra";
        require_arity(a, NAME, 2)?;
        let m = a.bracket();
        let half = frac(1, 2);
        let bracket = self.materialize(NAME, a.dim(), 2, |i| {
            let mut v = m.get(i).expect("in range");
            v.add_assign_vec(&m.get(&[i[1], i[0]]).expect("in range"));
            v.scale(&half)
        })?;
        Ok(HomAlgebra::new(bracket, a.twists().to_vec())?)
    }

    /// Commutator algebra `[x,y] = xy − yx`, same twisting map.
    pub fn minus_algebra(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "minus_algebra";
        require_arity(a, NAME, 2)?;
        let m = a.bracket();
        let bracket = self.materialize(NAME, a.dim(), 2, |i| {
            let mut v = m.get(i).expect("in range");
            v.sub_assign_vec(&m.get(&[i[1], i[0]]).expect("in range"));
            v
        })?;
        Ok(HomAlgebra::new(bracket, a.twists().to_vec())?)
    }

    /// Jordan triple product `{xyz} = x(yz) + (xy)z − y(xz)` of a Jordan algebra.
    pub fn jts_from_jordan(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "jts_from_jordan";
        require_arity(a, NAME, 2)?;
        self.require(NAME, "Jordan algebra", || check_jordan_algebra(a, &self.cfg))?;
        let e = basis(a.dim());
        let bracket = self.materialize(NAME, a.dim(), 3, |i| {
            let (x, y, z) = (&e[i[0]], &e[i[1]], &e[i[2]]);
            let mut v = a.br(&[x, &a.br(&[y, z])]);
            v.add_assign_vec(&a.br(&[&a.br(&[x, y]), z]));
            v.sub_assign_vec(&a.br(&[y, &a.br(&[x, z])]));
            v
        })?;
        Ok(HomAlgebra::untwisted(bracket))
    }

    /// Loos triple product `[xyz] = 2(xy)z − (zx)y − (yz)x` of a Maltsev algebra.
    pub fn lts_from_maltsev(&self, a: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "lts_from_maltsev";
        require_arity(a, NAME, 2)?;
        self.require(NAME, "Maltsev algebra", || check_maltsev(a, &self.cfg))?;
        let e = basis(a.dim());
        let two = int(2);
        let bracket = self.materialize(NAME, a.dim(), 3, |i| {
            let (x, y, z) = (&e[i[0]], &e[i[1]], &e[i[2]]);
            let mut v = a.br(&[&a.br(&[x, y]), z]).scale(&two);
            v.sub_assign_vec(&a.br(&[&a.br(&[z, x]), y]));
            v.sub_assign_vec(&a.br(&[&a.br(&[y, z]), x]));
            v
        })?;
        Ok(HomAlgebra::untwisted(bracket))
    }

    /// `[x₁, …, x_{2n−1}]' = [[x₁…xₙ], α(x_{n+1}), …, α(x_{2n−1})]` with
    /// twist `α²`, for multiplicative Hom-Nambu `L`.
    pub fn raise_arity(&self, l: &HomAlgebra) -> Result<HomAlgebra> {
        const NAME: &str = "raise_arity";
        let n = l.arity();
        let out_arity = 2 * n - 1;
        let entries = tuple_count(l.dim(), out_arity);
        if entries > self.table_budget {
            return Err(ConstructionError::TableBudget {
                construction: NAME,
                entries,
                budget: self.table_budget,
            });
        }
        self.require(NAME, "multiplicative", || Ok(l.is_multiplicative()))?;
        self.require(NAME, "Hom-Nambu", || check_hom_nambu(l, &self.cfg))?;
        let e = basis(l.dim());
        let alpha = l.twist(0);
        let twisted: Vec<Vector> = e.iter().map(|v| alpha.apply_unchecked(v)).collect();
        let bracket = self.materialize(NAME, l.dim(), out_arity, |i| {
            let inner_args: Vec<&Vector> = i[..n].iter().map(|&k| &e[k]).collect();
            let inner = l.br(&inner_args);
            if inner.is_zero() {
                return inner;
            }
            let mut outer: Vec<&Vector> = vec![&inner];
            outer.extend(i[n..].iter().map(|&k| &twisted[k]));
            l.br(&outer)
        })?;
        Ok(HomAlgebra::with_common_twist(bracket, alpha.power(2))?)
    }

    /// `k`-fold [`raise_arity`](Self::raise_arity): arity `2^k(n−1) + 1`,
    /// twist `α^{2^k}`.
    pub fn iterate_raise(&self, l: &HomAlgebra, k: u32) -> Result<HomAlgebra> {
        let mut current = l.clone();
        for _ in 0..k {
            current = self.raise_arity(&current)?;
        }
        Ok(current)
    }

    /// `[x₁, …, x_{n−1}]' = [a, x₁, …, x_{n−1}]` with twists `(α₂, …, α_{n−1})`.
    pub fn lower_arity(&self, l: &HomAlgebra, a: &Vector) -> Result<HomAlgebra> {
        self.lower_arity_with_notes(l, a).map(|(alg, _)| alg)
    }

    /// [`lower_arity`](Self::lower_arity), also returning notes about skipped
    /// hypothesis checks.
    pub fn lower_arity_with_notes(&self, l: &HomAlgebra, a: &Vector) -> Result<(HomAlgebra, Vec<String>)> {
        const NAME: &str = "lower_arity";
        let n = l.arity();
        if n < 3 {
            return Err(ConstructionError::Arity {
                construction: NAME,
                expected: "at least 3".into(),
                found: n,
            });
        }
        if a.dim() != l.dim() {
            return Err(LinalgError::DimensionMismatch {
                context: "fixed element".into(),
                expected: l.dim(),
                found: a.dim(),
            }
            .into());
        }
        let mut notes = Vec::new();
        if self.verify {
            let image = l.twist(0).apply_unchecked(a);
            if &image != a {
                return Err(ConstructionError::Hypothesis {
                    construction: NAME,
                    hypothesis: "α₁(a) = a".into(),
                    witness: Box::new(Witness {
                        identity_name: "fixed-point".into(),
                        args: WitnessArgs::Vectors(vec![a.clone()]),
                        lhs: image,
                        rhs: a.clone(),
                    }),
                });
            }
            let antisymmetric = check_antisymmetry(l, &self.cfg)
                .map(|r| r.passed && r.mode == CheckMode::Exhaustive)
                .unwrap_or(false);
            if antisymmetric {
                notes.push("bracket is anti-symmetric; [a, x, …, a] = 0 holds automatically".into());
            } else {
                let zero = Vector::zero(l.dim());
                self.require(NAME, "[a, x₂, …, x_{n−1}, a] = 0", || {
                    let cond = Condition::new("fixed-element-vanishing", n - 2, |xs| {
                        let mut args: Vec<&Vector> = vec![a];
                        args.extend_from_slice(xs);
                        args.push(a);
                        (l.br(&args), zero.clone())
                    });
                    driver::run("fixed_element_vanishing", l.dim(), &[cond], &self.cfg)
                })?;
            }
        }
        let e = basis(l.dim());
        let bracket = self.materialize(NAME, l.dim(), n - 1, |i| {
            let mut args: Vec<&Vector> = vec![a];
            args.extend(i.iter().map(|&k| &e[k]));
            l.br(&args)
        })?;
        Ok((HomAlgebra::new(bracket, l.twists()[1..].to_vec())?, notes))
    }

    /// Lower the arity once per element of `elements`, checking the
    /// hypotheses stage by stage.
    pub fn lower_arity_k(&self, l: &HomAlgebra, elements: &[Vector]) -> Result<HomAlgebra> {
        const NAME: &str = "lower_arity_k";
        if elements.is_empty() || elements.len() + 2 > l.arity() {
            return Err(ConstructionError::InvalidParameter {
                construction: NAME,
                detail: format!(
                    "need between 1 and {} fixed elements for arity {}, got {}",
                    l.arity().saturating_sub(2),
                    l.arity(),
                    elements.len()
                ),
            });
        }
        let mut current = l.clone();
        for a in elements {
            current = self.lower_arity(&current, a)?;
        }
        Ok(current)
    }

    fn trace_hypotheses(
        &self,
        construction: &'static str,
        l: &HomAlgebra,
        tau: &TraceFunctional,
        beta: &LinearMap,
    ) -> Result<()> {
        require_arity(l, construction, 2)?;
        if tau.dim() != l.dim() || beta.dim() != l.dim() {
            return Err(ConstructionError::InvalidParameter {
                construction,
                detail: format!(
                    "τ has dimension {} and β dimension {}, algebra has dimension {}",
                    tau.dim(),
                    beta.dim(),
                    l.dim()
                ),
            });
        }
        self.require(construction, "Hom-Lie", || check_hom_lie(l, &self.cfg))?;
        let alpha = l.twist(0);
        let zero_scalar = scalar_vec(Scalar::zero());
        let t = |v: &Vector| tau.eval(v);
        let conds = [
            Condition::new("trace-function: τ([x,y]) = 0", 2, |args| {
                (scalar_vec(t(&l.br(args))), zero_scalar.clone())
            }),
            Condition::new("τ(α(x))τ(y) = τ(x)τ(α(y))", 2, |args| {
                let (x, y) = (args[0], args[1]);
                (
                    scalar_vec(t(&alpha.apply_unchecked(x)) * t(y)),
                    scalar_vec(t(x) * t(&alpha.apply_unchecked(y))),
                )
            }),
            Condition::new("τ(β(x))τ(y) = τ(x)τ(β(y))", 2, |args| {
                let (x, y) = (args[0], args[1]);
                (
                    scalar_vec(t(&beta.apply_unchecked(x)) * t(y)),
                    scalar_vec(t(x) * t(&beta.apply_unchecked(y))),
                )
            }),
            Condition::new("τ(α(x))β(y) = τ(β(x))α(y)", 2, |args| {
                let (x, y) = (args[0], args[1]);
                (
                    beta.apply_unchecked(y).scale(&t(&alpha.apply_unchecked(x))),
                    alpha.apply_unchecked(y).scale(&t(&beta.apply_unchecked(x))),
                )
            }),
        ];
        // one condition at a time so each violated hypothesis is named
        for cond in conds {
            let label = cond.label.clone();
            self.require(construction, &label, || {
                driver::run("trace_compatibility", l.dim(), std::slice::from_ref(&cond), &self.cfg)
            })?;
        }
        Ok(())
    }

    /// `[xyz]_τ = τ(x)[y,z] + τ(y)[z,x] + τ(z)[x,y]` with twists `(α, β)`.
    pub fn ternary_from_trace(
        &self,
        l: &HomAlgebra,
        tau: &TraceFunctional,
        beta: &LinearMap,
    ) -> Result<HomAlgebra> {
        const NAME: &str = "ternary_from_trace";
        self.trace_hypotheses(NAME, l, tau, beta)?;
        let e = basis(l.dim());
        let taus: Vec<Scalar> = e.iter().map(|v| tau.eval(v)).collect();
        let bracket = self.materialize(NAME, l.dim(), 3, |i| {
            let (x, y, z) = (i[0], i[1], i[2]);
            let mut v = Vector::zero(l.dim());
            v.add_scaled(&taus[x], &l.br(&[&e[y], &e[z]]));
            v.add_scaled(&taus[y], &l.br(&[&e[z], &e[x]]));
            v.add_scaled(&taus[z], &l.br(&[&e[x], &e[y]]));
            v
        })?;
        Ok(HomAlgebra::new(bracket, vec![l.twist(0).clone(), beta.clone()])?)
    }

    /// `[x,y]' = τ(a)[x,y] + [a, τ(y)x − τ(x)y]` with twist `β`; when
    /// verifying, also compared against lowering `ternary_from_trace` at `a`.
    pub fn reduce_trace_bracket(
        &self,
        l: &HomAlgebra,
        tau: &TraceFunctional,
        beta: &LinearMap,
        a: &Vector,
    ) -> Result<HomAlgebra> {
        const NAME: &str = "reduce_trace_bracket";
        self.trace_hypotheses(NAME, l, tau, beta)?;
        if a.dim() != l.dim() {
            return Err(LinalgError::DimensionMismatch {
                context: "fixed element".into(),
                expected: l.dim(),
                found: a.dim(),
            }
            .into());
        }
        if self.verify {
            let image = l.twist(0).apply_unchecked(a);
            if &image != a {
                return Err(ConstructionError::Hypothesis {
                    construction: NAME,
                    hypothesis: "α(a) = a".into(),
                    witness: Box::new(Witness {
                        identity_name: "fixed-point".into(),
                        args: WitnessArgs::Vectors(vec![a.clone()]),
                        lhs: image,
                        rhs: a.clone(),
                    }),
                });
            }
        }
        let e = basis(l.dim());
        let tau_a = tau.eval(a);
        let bracket = self.materialize(NAME, l.dim(), 2, |i| {
            let (x, y) = (&e[i[0]], &e[i[1]]);
            let mut v = l.br(&[x, y]).scale(&tau_a);
            let mut combo = x.scale(&tau.eval(y));
            combo.add_scaled(&-tau.eval(x), y);
            v.add_assign_vec(&l.br(&[a, &combo]));
            v
        })?;
        if self.verify {
            let inner = Constructor { verify: false, ..*self };
            let composed = inner.lower_arity(&inner.ternary_from_trace(l, tau, beta)?, a)?;
            self.path_check(NAME, &bracket, composed.bracket())?;
        }
        Ok(HomAlgebra::with_common_twist(bracket, beta.clone())?)
    }
}

/// A named construction together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Twist { beta: LinearMap },
    Derived { k: u32 },
    TernaryTwist { beta: LinearMap },
    JtsFromTernaryAssoc,
    LtsFromJts,
    LtsFromTernaryAssoc,
    TernaryAssocFromHomAssoc,
    LtsFromHomLie,
    LtsFromHomAssoc,
    PlusAlgebra,
    MinusAlgebra,
    JtsFromJordan,
    LtsFromMaltsev,
    RaiseArity,
    IterateRaise { k: u32 },
    LowerArity { a: Vector },
    LowerArityK { elements: Vec<Vector> },
    TernaryFromTrace { tau: TraceFunctional, beta: LinearMap },
    ReduceTraceBracket { tau: TraceFunctional, beta: LinearMap, a: Vector },
    /// Keep the bracket, set every twisting map to the identity.
    IdentityTwists,
}

impl Recipe {
    pub const NAMES: [&'static str; 20] = [
        "twist",
        "derived",
        "ternary_twist",
        "jts_from_ternary_assoc",
        "lts_from_jts",
        "lts_from_ternary_assoc",
        "ternary_assoc_from_hom_assoc",
        "lts_from_hom_lie",
        "lts_from_hom_assoc",
        "plus_algebra",
        "minus_algebra",
        "jts_from_jordan",
        "lts_from_maltsev",
        "raise_arity",
        "iterate_raise",
        "lower_arity",
        "lower_arity_k",
        "ternary_from_trace",
        "reduce_trace_bracket",
        "identity_twists",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Recipe::Twist { .. } => "twist",
            Recipe::Derived { .. } => "derived",
            Recipe::TernaryTwist { .. } => "ternary_twist",
            Recipe::JtsFromTernaryAssoc => "jts_from_ternary_assoc",
            Recipe::LtsFromJts => "lts_from_jts",
            Recipe::LtsFromTernaryAssoc => "lts_from_ternary_assoc",
            Recipe::TernaryAssocFromHomAssoc => "ternary_assoc_from_hom_assoc",
            Recipe::LtsFromHomLie => "lts_from_hom_lie",
            Recipe::LtsFromHomAssoc => "lts_from_hom_assoc",
            Recipe::PlusAlgebra => "plus_algebra",
            Recipe::MinusAlgebra => "minus_algebra",
            Recipe::JtsFromJordan => "jts_from_jordan",
            Recipe::LtsFromMaltsev => "lts_from_maltsev",
            Recipe::RaiseArity => "raise_arity",
            Recipe::IterateRaise { .. } => "iterate_raise",
            Recipe::LowerArity { .. } => "lower_arity",
            Recipe::LowerArityK { .. } => "lower_arity_k",
            Recipe::TernaryFromTrace { .. } => "ternary_from_trace",
            Recipe::ReduceTraceBracket { .. } => "reduce_trace_bracket",
            Recipe::IdentityTwists => "identity_twists",
        }
    }

    /// Apply the recipe; the notes list any hypothesis checks that were skipped.
    pub fn apply(&self, c: &Constructor, l: &HomAlgebra) -> Result<(HomAlgebra, Vec<String>)> {
        let out = match self {
            Recipe::Twist { beta } => c.twist(l, beta)?,
            Recipe::Derived { k } => c.derived(l, *k)?,
            Recipe::TernaryTwist { beta } => c.ternary_twist(l, beta)?,
            Recipe::JtsFromTernaryAssoc => c.jts_from_ternary_assoc(l)?,
            Recipe::LtsFromJts => c.lts_from_jts(l)?,
            Recipe::LtsFromTernaryAssoc => c.lts_from_ternary_assoc(l)?,
            Recipe::TernaryAssocFromHomAssoc => c.ternary_assoc_from_hom_assoc(l)?,
            Recipe::LtsFromHomLie => c.lts_from_hom_lie(l)?,
            Recipe::LtsFromHomAssoc => c.lts_from_hom_assoc(l)?,
            Recipe::PlusAlgebra => c.plus_algebra(l)?,
            Recipe::MinusAlgebra => c.minus_algebra(l)?,
            Recipe::JtsFromJordan => c.jts_from_jordan(l)?,
            Recipe::LtsFromMaltsev => c.lts_from_maltsev(l)?,
            Recipe::RaiseArity => c.raise_arity(l)?,
            Recipe::IterateRaise { k } => c.iterate_raise(l, *k)?,
            Recipe::LowerArity { a } => return c.lower_arity_with_notes(l, a),
            Recipe::LowerArityK { elements } => c.lower_arity_k(l, elements)?,
            Recipe::TernaryFromTrace { tau, beta } => c.ternary_from_trace(l, tau, beta)?,
            Recipe::ReduceTraceBracket { tau, beta, a } => c.reduce_trace_bracket(l, tau, beta, a)?,
            Recipe::IdentityTwists => l.forget_twists(),
        };
        Ok((out, Vec::new()))
    }
}

/// `α^{2^k}` shorthand used by tests and reports.
pub fn twist_power(alpha: &LinearMap, k: u32) -> LinearMap {
    alpha.power(1u64 << k)
}

impl TraceFunctional {
    /// The zero functional on a space of dimension `dim`.
    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Scalar::zero(); dim])
    }

    /// `τ = e_i^*`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut c = vec![Scalar::zero(); dim];
        c[i] = Scalar::one();
        Self::new(c)
    }
}
