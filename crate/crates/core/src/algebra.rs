//! n-ary Hom-algebras and their basic derived quantities.

use std::borrow::Cow;

use thiserror::Error;

use crate::identities::driver::{self, Condition};
use crate::identities::{CheckMode, CheckReport, Witness, WitnessArgs};
use crate::linalg::{LinalgError, LinearMap, MultilinearMap, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("expected {expected} twisting maps for arity {arity}, found {found}")]
    TwistCount {
        arity: usize,
        expected: usize,
        found: usize,
    },
    #[error("twisting map {index} has dimension {found}, algebra has dimension {expected}")]
    TwistDimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("{operation} requires arity {expected}, algebra has arity {found}")]
    Arity {
        operation: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{operation}: expected {expected} arguments, found {found}")]
    ArgumentCount {
        operation: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("shape mismatch between algebras: {0}")]
    Shape(String),
}

/// `(V, [·], (α₁, …, α_{n−1}))`: a bracket of arity `n` on a
/// finite-dimensional space plus `n − 1` twisting maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    bracket: MultilinearMap,
    twists: Vec<LinearMap>,
    identity_twist: Vec<bool>,
}

impl HomAlgebra {
    pub fn new(bracket: MultilinearMap, twists: Vec<LinearMap>) -> Result<Self, AlgebraError> {
        let arity = bracket.arity();
        if twists.len() != arity - 1 {
            return Err(AlgebraError::TwistCount {
                arity,
                expected: arity - 1,
                found: twists.len(),
            });
        }
        for (i, t) in twists.iter().enumerate() {
            if t.dim() != bracket.dim() {
                return Err(AlgebraError::TwistDimension {
                    index: i + 1,
                    expected: bracket.dim(),
                    found: t.dim(),
                });
            }
        }
        let identity_twist = twists.iter().map(LinearMap::is_identity).collect();
        Ok(Self {
            bracket,
            twists,
            identity_twist,
        })
    }

    /// All twisting maps equal to the identity: an ordinary n-ary algebra.
    pub fn untwisted(bracket: MultilinearMap) -> Self {
        let twists = vec![LinearMap::identity(bracket.dim()); bracket.arity() - 1];
        Self::new(bracket, twists).expect("identity twists have the right shape")
    }

    /// All twisting maps equal to `alpha`.
    pub fn with_common_twist(
        bracket: MultilinearMap,
        alpha: LinearMap,
    ) -> Result<Self, AlgebraError> {
        let twists = vec![alpha; bracket.arity() - 1];
        Self::new(bracket, twists)
    }

    pub fn zero(dim: usize, arity: usize) -> Result<Self, AlgebraError> {
        Ok(Self::untwisted(MultilinearMap::zero(dim, arity)?))
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn arity(&self) -> usize {
        self.bracket.arity()
    }

    pub fn bracket(&self) -> &MultilinearMap {
        &self.bracket
    }

    pub fn twists(&self) -> &[LinearMap] {
        &self.twists
    }

    /// `α_{i+1}` (0-based `i`).
    pub fn twist(&self, i: usize) -> &LinearMap {
        &self.twists[i]
    }

    /// The common twisting map when all of them agree.
    pub fn common_twist(&self) -> Option<&LinearMap> {
        let first = &self.twists[0];
        self.twists.iter().all(|t| t == first).then_some(first)
    }

    pub fn has_identity_twists(&self) -> bool {
        self.identity_twist.iter().all(|&b| b)
    }

    /// Same bracket, new twisting maps.
    pub fn with_twists(&self, twists: Vec<LinearMap>) -> Result<Self, AlgebraError> {
        Self::new(self.bracket.clone(), twists)
    }

    /// Same bracket, all twisting maps replaced by the identity.
    pub fn forget_twists(&self) -> Self {
        Self::untwisted(self.bracket.clone())
    }

    pub fn eval(&self, args: &[Vector]) -> Result<Vector, AlgebraError> {
        Ok(self.bracket.eval(args)?)
    }

    pub(crate) fn br(&self, args: &[&Vector]) -> Vector {
        self.bracket.eval_unchecked(args)
    }

    /// `α_{i+1}(v)`, skipping the work when the map is the identity.
    pub(crate) fn tw<'v>(&self, i: usize, v: &'v Vector) -> Cow<'v, Vector> {
        if self.identity_twist[i] {
            Cow::Borrowed(v)
        } else {
            Cow::Owned(self.twists[i].apply_unchecked(v))
        }
    }

    fn check_args(&self, operation: &'static str, args: &[Vector], expected: usize) -> Result<(), AlgebraError> {
        if args.len() != expected {
            return Err(AlgebraError::ArgumentCount {
                operation,
                expected,
                found: args.len(),
            });
        }
        for (slot, a) in args.iter().enumerate() {
            if a.dim() != self.dim() {
                return Err(LinalgError::DimensionMismatch {
                    context: format!("{operation} argument {}", slot + 1),
                    expected: self.dim(),
                    found: a.dim(),
                }
                .into());
            }
        }
        Ok(())
    }

    /// The n-ary Hom-Jacobian `J(x_1..x_{n−1}; y_1..y_n)`:
    ///
    /// `[α₁x₁, …, α_{n−1}x_{n−1}, [y₁…yₙ]]
    ///   − Σᵢ [α₁y₁, …, α_{i−1}y_{i−1}, [x₁…x_{n−1}, yᵢ], αᵢy_{i+1}, …, α_{n−1}yₙ]`
    pub fn hom_jacobian(&self, xs: &[Vector], ys: &[Vector]) -> Result<Vector, AlgebraError> {
        let n = self.arity();
        self.check_args("Hom-Jacobian x", xs, n - 1)?;
        self.check_args("Hom-Jacobian y", ys, n)?;
        let xs: Vec<&Vector> = xs.iter().collect();
        let ys: Vec<&Vector> = ys.iter().collect();
        Ok(self.hom_jacobian_refs(&xs, &ys))
    }

    pub(crate) fn hom_jacobian_refs(&self, xs: &[&Vector], ys: &[&Vector]) -> Vector {
        let n = self.arity();
        let inner = self.br(ys);
        let twisted_x: Vec<Cow<'_, Vector>> = xs.iter().enumerate().map(|(i, x)| self.tw(i, x)).collect();
        let mut outer: Vec<&Vector> = twisted_x.iter().map(|c| c.as_ref()).collect();
        outer.push(&inner);
        let mut total = self.br(&outer);

        let mut with_y: Vec<&Vector> = xs.to_vec();
        with_y.push(ys[0]);
        for i in 0..n {
            with_y[n - 1] = ys[i];
            let nested = self.br(&with_y);
            if nested.is_zero() {
                continue;
            }
            let twisted: Vec<Cow<'_, Vector>> = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let twist = if j < i { j } else { j - 1 };
                    self.tw(twist, ys[j])
                })
                .collect();
            let mut args: Vec<&Vector> = Vec::with_capacity(n);
            let mut rest = twisted.iter();
            for j in 0..n {
                if j == i {
                    args.push(&nested);
                } else {
                    args.push(rest.next().expect("n - 1 twisted arguments").as_ref());
                }
            }
            total.sub_assign_vec(&self.br(&args));
        }
        total
    }

    /// Hom-associator `(xy)α(z) − α(x)(yz)` of a binary Hom-algebra.
    pub fn hom_associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, AlgebraError> {
        self.require_arity("Hom-associator", 2)?;
        self.check_args("Hom-associator", &[x.clone(), y.clone(), z.clone()], 3)?;
        Ok(self.hom_associator_refs(x, y, z))
    }

    pub(crate) fn hom_associator_refs(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let xy = self.br(&[x, y]);
        let yz = self.br(&[y, z]);
        let az = self.tw(0, z);
        let ax = self.tw(0, x);
        let left = self.br(&[&xy, &az]);
        let right = self.br(&[&ax, &yz]);
        &left - &right
    }

    pub(crate) fn require_arity(&self, operation: &'static str, expected: usize) -> Result<(), AlgebraError> {
        if self.arity() != expected {
            return Err(AlgebraError::Arity {
                operation,
                expected,
                found: self.arity(),
            });
        }
        Ok(())
    }

    /// All twists equal to some `α` and `α ∘ [·] = [·] ∘ α^{⊗n}`, checked on
    /// every basis tuple. A failure on the first condition carries the label
    /// `twists-equal(α1,αk)`; on the second, `bracket-compatibility`.
    pub fn is_multiplicative(&self) -> CheckReport {
        const NAME: &str = "multiplicative";
        let dim = self.dim();
        let first = &self.twists[0];
        for (k, other) in self.twists.iter().enumerate().skip(1) {
            if let Some(witness) = first_differing_column(first, other) {
                let (j, lhs, rhs) = witness;
                return CheckReport::fail(
                    NAME,
                    CheckMode::Exhaustive,
                    (j + 1) as u128,
                    Witness {
                        identity_name: format!("twists-equal(α1,α{})", k + 1),
                        args: WitnessArgs::Basis(vec![j]),
                        lhs,
                        rhs,
                    },
                );
            }
        }
        let alpha = first;
        let images: Vec<Vector> = (0..dim).map(|j| alpha.column(j)).collect();
        let cond = Condition::new("bracket-compatibility", self.arity(), move |args| {
            let lhs = alpha.apply_unchecked(&self.br(args));
            let mapped: Vec<&Vector> = args.iter().map(|a| &images[basis_index(a)]).collect();
            (lhs, self.br(&mapped))
        });
        driver::run_in_mode(NAME, dim, &[cond], CheckMode::Exhaustive, 0)
    }

    fn same_shape(&self, f: &LinearMap, dst: &HomAlgebra) -> Result<(), AlgebraError> {
        if f.dim() != self.dim() || dst.dim() != self.dim() || dst.arity() != self.arity() {
            return Err(AlgebraError::Shape(format!(
                "map of dimension {} between a {}-ary algebra of dimension {} and a {}-ary algebra of dimension {}",
                f.dim(),
                self.arity(),
                self.dim(),
                dst.arity(),
                dst.dim()
            )));
        }
        Ok(())
    }

    /// `f ∘ [·]_src = [·]_dst ∘ f^{⊗n}` on all basis tuples.
    pub fn is_weak_morphism(
        f: &LinearMap,
        src: &HomAlgebra,
        dst: &HomAlgebra,
    ) -> Result<CheckReport, AlgebraError> {
        src.same_shape(f, dst)?;
        Ok(weak_morphism_report("weak-morphism", f, src, dst))
    }

    /// Weak morphism that also intertwines every pair of twisting maps.
    pub fn is_morphism(
        f: &LinearMap,
        src: &HomAlgebra,
        dst: &HomAlgebra,
    ) -> Result<CheckReport, AlgebraError> {
        src.same_shape(f, dst)?;
        const NAME: &str = "morphism";
        let weak = weak_morphism_report(NAME, f, src, dst);
        if !weak.passed {
            return Ok(weak);
        }
        let mut checked = weak.tuples_checked;
        for (i, (a_src, a_dst)) in src.twists.iter().zip(&dst.twists).enumerate() {
            let left = f.compose(a_src)?;
            let right = a_dst.compose(f)?;
            if let Some((j, lhs, rhs)) = first_differing_column(&left, &right) {
                return Ok(CheckReport::fail(
                    NAME,
                    CheckMode::Exhaustive,
                    checked + j as u128 + 1,
                    Witness {
                        identity_name: format!("twist-intertwining(α{})", i + 1),
                        args: WitnessArgs::Basis(vec![j]),
                        lhs,
                        rhs,
                    },
                ));
            }
            checked += src.dim() as u128;
        }
        Ok(CheckReport::pass(NAME, CheckMode::Exhaustive, checked))
    }
}

fn weak_morphism_report(name: &str, f: &LinearMap, src: &HomAlgebra, dst: &HomAlgebra) -> CheckReport {
    let dim = src.dim();
    let images: Vec<Vector> = (0..dim).map(|j| f.column(j)).collect();
    let cond = Condition::new("bracket-intertwining", src.arity(), move |args| {
        let lhs = f.apply_unchecked(&src.br(args));
        let mapped: Vec<&Vector> = args.iter().map(|a| &images[basis_index(a)]).collect();
        (lhs, dst.br(&mapped))
    });
    driver::run_in_mode(name, dim, &[cond], CheckMode::Exhaustive, 0)
}

/// Index of a basis vector handed out by the exhaustive driver.
fn basis_index(v: &Vector) -> usize {
    let support = v.support();
    debug_assert_eq!(support.len(), 1);
    support[0].0
}

fn first_differing_column(a: &LinearMap, b: &LinearMap) -> Option<(usize, Vector, Vector)> {
    (0..a.dim()).find_map(|j| {
        let (ca, cb) = (a.column(j), b.column(j));
        (ca != cb).then_some((j, ca, cb))
    })
}
