//! Test-only oracle: dense structure constants and naive evaluation by the
//! full multilinear sum, sharing no evaluation code with the library.

#![allow(dead_code)]

pub mod corpus;

use homnambu::linalg::{frac, int, LinearMap, MultilinearMap, Scalar, Vector};
use homnambu::HomAlgebra;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Dense = Vec<Scalar>;

pub struct Oracle {
    pub dim: usize,
    pub arity: usize,
    /// `table[rank][k]`: coordinate `k` of the bracket on the basis tuple of
    /// lexicographic rank `rank`.
    table: Vec<Dense>,
    twists: Vec<Vec<Dense>>,
}

fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

pub fn dense(v: &Vector) -> Dense {
    v.entries().to_vec()
}

pub fn vector(d: &Dense) -> Vector {
    Vector::from_entries(d.clone())
}

fn sub(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &Dense) -> Dense {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &Dense) -> bool {
    a.iter().all(Zero::is_zero)
}

impl Oracle {
    pub fn new(a: &HomAlgebra) -> Self {
        let (dim, arity) = (a.dim(), a.arity());
        let table = tuples(dim, arity)
            .iter()
            .map(|t| dense(&a.bracket().get(t).unwrap()))
            .collect();
        let twists = a
            .twists()
            .iter()
            .map(|m| (0..dim).map(|r| (0..dim).map(|c| m.entry(r, c).clone()).collect()).collect())
            .collect();
        Self { dim, arity, table, twists }
    }

    /// Sum over every basis tuple, zero coordinates included.
    pub fn br(&self, args: &[Dense]) -> Dense {
        assert_eq!(args.len(), self.arity);
        let mut out = vec![Scalar::zero(); self.dim];
        for (rank, t) in tuples(self.dim, self.arity).iter().enumerate() {
            let mut c = Scalar::one();
            for (slot, &i) in t.iter().enumerate() {
                c *= &args[slot][i];
            }
            for k in 0..self.dim {
                out[k] += &c * &self.table[rank][k];
            }
        }
        out
    }

    pub fn tw(&self, i: usize, v: &Dense) -> Dense {
        let m = &self.twists[i];
        (0..self.dim)
            .map(|r| (0..self.dim).fold(Scalar::zero(), |acc, c| acc + &m[r][c] * &v[c]))
            .collect()
    }

    /// `[α₁x₁…α_{n−1}x_{n−1}, [y]] − Σᵢ [α₁y₁ … [x, yᵢ] … α_{n−1}yₙ]`, with
    /// the twist index of `y_j` counted among the unbracketed slots.
    pub fn jacobian(&self, xs: &[Dense], ys: &[Dense]) -> Dense {
        let n = self.arity;
        let mut outer: Vec<Dense> = xs.iter().enumerate().map(|(i, x)| self.tw(i, x)).collect();
        outer.push(self.br(ys));
        let mut total = self.br(&outer);
        for i in 0..n {
            let mut inner: Vec<Dense> = xs.to_vec();
            inner.push(ys[i].clone());
            let nested = self.br(&inner);
            let mut args = Vec::with_capacity(n);
            let mut twist = 0;
            for (j, y) in ys.iter().enumerate() {
                if j == i {
                    args.push(nested.clone());
                } else {
                    args.push(self.tw(twist, y));
                    twist += 1;
                }
            }
            total = sub(&total, &self.br(&args));
        }
        total
    }

    fn binary(&self, x: &Dense, y: &Dense) -> Dense {
        self.br(&[x.clone(), y.clone()])
    }

    fn ternary(&self, x: &Dense, y: &Dense, z: &Dense) -> Dense {
        self.br(&[x.clone(), y.clone(), z.clone()])
    }

    /// `lhs − rhs` of a named checker condition, if the oracle knows it.
    pub fn residual(&self, label: &str, a: &[Dense]) -> Option<Dense> {
        let r = match label {
            "hom-nambu" => {
                let n = self.arity;
                self.jacobian(&a[..n - 1], &a[n - 1..])
            }
            "antisymmetry" => add(&self.binary(&a[0], &a[1]), &self.binary(&a[1], &a[0])),
            l if l.starts_with("antisymmetry(slots ") => {
                let i: usize = l["antisymmetry(slots ".len()..].split(',').next()?.parse().ok()?;
                let mut swapped = a.to_vec();
                swapped.swap(i - 1, i);
                add(&self.br(a), &self.br(&swapped))
            }
            "hom-associativity" => sub(
                &self.binary(&self.binary(&a[0], &a[1]), &self.tw(0, &a[2])),
                &self.binary(&self.tw(0, &a[0]), &self.binary(&a[1], &a[2])),
            ),
            "hom-jacobi" => {
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                let s1 = self.binary(&self.binary(x, y), &self.tw(0, z));
                let s2 = self.binary(&self.binary(z, x), &self.tw(0, y));
                let s3 = self.binary(&self.binary(y, z), &self.tw(0, x));
                add(&add(&s1, &s2), &s3)
            }
            "outer-symmetry" => sub(&self.ternary(&a[0], &a[1], &a[2]), &self.ternary(&a[2], &a[1], &a[0])),
            "left-antisymmetry" => add(&self.ternary(&a[0], &a[1], &a[2]), &self.ternary(&a[1], &a[0], &a[2])),
            "ternary-jacobi" => {
                let (u, v, w) = (&a[0], &a[1], &a[2]);
                add(&add(&self.ternary(u, v, w), &self.ternary(w, u, v)), &self.ternary(v, w, u))
            }
            "commutativity" => sub(&self.binary(&a[0], &a[1]), &self.binary(&a[1], &a[0])),
            "hom-jordan-triple-identity" => {
                let (x, y, u, v, w) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                let l1 = self.ternary(&self.tw(0, x), &self.tw(1, y), &self.ternary(u, v, w));
                let l2 = self.ternary(&self.tw(0, u), &self.tw(1, v), &self.ternary(x, y, w));
                let r1 = self.ternary(&self.ternary(x, y, u), &self.tw(0, v), &self.tw(1, w));
                let r2 = self.ternary(&self.tw(0, u), &self.ternary(y, x, v), &self.tw(1, w));
                sub(&sub(&l1, &l2), &sub(&r1, &r2))
            }
            l if l.starts_with("ternary-hom-associativity") => {
                let (u, v, w, x, y) = (&a[0], &a[1], &a[2], &a[3], &a[4]);
                let first = self.ternary(&self.ternary(u, v, w), &self.tw(0, x), &self.tw(1, y));
                let second = self.ternary(&self.tw(0, u), &self.ternary(v, w, x), &self.tw(1, y));
                let third = self.ternary(&self.tw(0, u), &self.tw(1, v), &self.ternary(w, x, y));
                if l.ends_with("(first=second)") {
                    sub(&first, &second)
                } else {
                    sub(&second, &third)
                }
            }
            "maltsev-identity" => {
                let j = |x: &Dense, y: &Dense, z: &Dense| {
                    let s = add(&self.binary(&self.binary(x, y), z), &self.binary(&self.binary(z, x), y));
                    add(&s, &self.binary(&self.binary(y, z), x))
                };
                let (x1, x2, y, z) = (&a[0], &a[1], &a[2], &a[3]);
                let lhs = add(&j(x1, y, &self.binary(x2, z)), &j(x2, y, &self.binary(x1, z)));
                let rhs = add(&self.binary(&j(x1, y, z), x2), &self.binary(&j(x2, y, z), x1));
                sub(&lhs, &rhs)
            }
            l if l.starts_with("associator-antisymmetry") => {
                let assoc = |x: &Dense, y: &Dense, z: &Dense| {
                    sub(&self.binary(&self.binary(x, y), z), &self.binary(x, &self.binary(y, z)))
                };
                let (x, y, z) = (&a[0], &a[1], &a[2]);
                if l.ends_with("(slots 1,2)") {
                    add(&assoc(x, y, z), &assoc(y, x, z))
                } else {
                    add(&assoc(x, y, z), &assoc(x, z, y))
                }
            }
            "jordan-identity" => {
                // polarization of (x²y)x − x²(yx), summed over orderings
                let y = &a[3];
                let mut total = vec![Scalar::zero(); self.dim];
                for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                    let (p, q, r) = (&a[p[0]], &a[p[1]], &a[p[2]]);
                    let pq = self.binary(p, q);
                    total = add(&total, &self.binary(&self.binary(&pq, y), r));
                    total = sub(&total, &self.binary(&pq, &self.binary(y, r)));
                }
                total
            }
            _ => return None,
        };
        Some(r)
    }
}

/// Seeded random algebra with integer constants in `[-2, 2]` on about
/// `density` of the basis tuples, and random integer diagonal twists when
/// `twisted`.
pub fn random_algebra(seed: u64, dim: usize, arity: usize, density: f64, twisted: bool) -> HomAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = MultilinearMap::zero(dim, arity).unwrap();
    for t in tuples(dim, arity) {
        if rng.gen_bool(density) {
            let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
            m.set(&t, Vector::from_ints(&v)).unwrap();
        }
    }
    let twists = (0..arity - 1)
        .map(|_| {
            if twisted {
                LinearMap::diagonal((0..dim).map(|_| int(rng.gen_range(-2..=2))).collect())
            } else {
                LinearMap::identity(dim)
            }
        })
        .collect();
    HomAlgebra::new(m, twists).unwrap()
}

/// Seeded invertible integer matrix: unit upper triangular times a random
/// signed permutation, so the inverse is exact and small.
pub fn random_invertible(seed: u64, dim: usize) -> LinearMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut upper = LinearMap::identity(dim);
    for r in 0..dim {
        for c in r + 1..dim {
            upper.set_entry(r, c, int(rng.gen_range(-2..=2)));
        }
    }
    let mut perm: Vec<usize> = (0..dim).collect();
    for i in (1..dim).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let cols: Vec<Vector> = perm
        .iter()
        .map(|&p| Vector::basis(dim, p).scale(&if rng.gen_bool(0.5) { int(1) } else { int(-1) }))
        .collect();
    upper.compose(&LinearMap::from_columns(&cols).unwrap()).unwrap()
}

/// Transport of structure along `p`: `[x…]' = p[p⁻¹x…]`, `α' = pαp⁻¹`.
/// Preserves every identity the checkers test.
pub fn transport(a: &HomAlgebra, p: &LinearMap) -> HomAlgebra {
    let inv = p.inverse().unwrap();
    let dim = a.dim();
    let pre: Vec<Vector> = (0..dim).map(|i| inv.column(i)).collect();
    let m = MultilinearMap::from_fn(dim, a.arity(), |t| {
        let args: Vec<Vector> = t.iter().map(|&i| pre[i].clone()).collect();
        p.apply(&a.eval(&args).unwrap()).unwrap()
    })
    .unwrap();
    let twists = a
        .twists()
        .iter()
        .map(|t| p.compose(&t.compose(&inv).unwrap()).unwrap())
        .collect();
    HomAlgebra::new(m, twists).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    Vector::from_entries((0..dim).map(|_| frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
