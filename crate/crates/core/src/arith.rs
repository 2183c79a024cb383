//! Exact rational vectors and linear solving.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

/// Converts to `i64` if the value is an integer in range.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn to_int_vec(v: &[Rational]) -> Option<Vec<i64>> {
    v.iter().map(to_i64).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// `v^T M w` for a square matrix `m`.
pub fn bilinear(v: &[Rational], m: &[Vec<Rational>], w: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, wj) in w.iter().enumerate() {
            if !wj.is_zero() {
                acc += vi * &m[i][j] * wj;
            }
        }
    }
    acc
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// `v^T M` as a vector.
pub fn vec_mat(v: &[Rational], m: &[Vec<Rational>]) -> Vec<Rational> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(Rational::zero(), |acc, (x, row)| acc + x * &row[j])
        })
        .collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * s).collect()
}

/// Inverse of a square rational matrix, `None` when singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `sum_j x_j * cols[j] = target` for a fixed family of linearly
/// independent columns. The elimination is done once; each query is a
/// matrix-vector product.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    dim: usize,
    ncols: usize,
    // row-operation matrix E with E * A = [I_k; 0]
    ops: Vec<Vec<Rational>>,
}

impl SpanSolver {
    /// Returns `None` if the columns are linearly dependent.
    pub fn new(cols: &[Vec<Rational>], dim: usize) -> Option<Self> {
        let k = cols.len();
        let mut a: Vec<Vec<Rational>> = (0..dim).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let mut e: Vec<Vec<Rational>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        for col in 0..k {
            let pivot = (col..dim).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            e.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            for x in e[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..dim {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..k {
                        let delta = &f * &a[col][c];
                        a[r][c] -= delta;
                    }
                    for c in 0..dim {
                        let delta = &f * &e[col][c];
                        e[r][c] -= delta;
                    }
                }
            }
        }
        Some(Self { dim, ncols: k, ops: e })
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Coefficients of `target` in the span, or `None` if it lies outside.
    pub fn solve(&self, target: &[Rational]) -> Option<Vec<Rational>> {
        debug_assert_eq!(target.len(), self.dim);
        let y = mat_vec(&self.ops, target);
        if y[self.ncols..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(y[..self.ncols].to_vec())
    }

    pub fn contains(&self, target: &[Rational]) -> bool {
        self.solve(target).is_some()
    }
}

/// A [`SpanSolver`] with denominators cleared, for integer targets.
#[derive(Clone, Debug)]
pub struct IntSpanSolver {
    ncols: usize,
    denom: i64,
    ops: Vec<Vec<i64>>,
}

impl IntSpanSolver {
    pub fn new(cols: &[Vec<i64>], dim: usize) -> Option<Self> {
        let qcols: Vec<Vec<Rational>> = cols.iter().map(|c| qvec(c)).collect();
        let solver = SpanSolver::new(&qcols, dim)?;
        let denom = solver.ops.iter().flatten().fold(1i64, |acc, x| {
            num_integer::lcm(acc, x.denom().to_i64().expect("small denominator"))
        });
        let d = q(denom);
        let ops = solver
            .ops
            .iter()
            .map(|row| row.iter().map(|x| to_i64(&(x * &d)).expect("cleared")).collect())
            .collect();
        Some(Self {
            ncols: solver.ncols,
            denom,
            ops,
        })
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Scaled coefficients `denom * x` when `target` is in the rational span.
    fn scaled(&self, target: &[i64]) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.ncols);
        for (r, row) in self.ops.iter().enumerate() {
            let y: i64 = row.iter().zip(target).map(|(a, b)| a * b).sum();
            if r >= self.ncols {
                if y != 0 {
                    return None;
                }
            } else {
                out.push(y);
            }
        }
        Some(out)
    }

    pub fn in_span(&self, target: &[i64]) -> bool {
        self.scaled(target).is_some()
    }

    pub fn solve(&self, target: &[i64]) -> Option<Vec<Rational>> {
        self.scaled(target)
            .map(|v| v.into_iter().map(|y| frac(y, self.denom)).collect())
    }

    /// Integer coefficients when `target` lies in the integer span.
    pub fn solve_integral(&self, target: &[i64]) -> Option<Vec<i64>> {
        let v = self.scaled(target)?;
        v.iter()
            .all(|y| y % self.denom == 0)
            .then(|| v.into_iter().map(|y| y / self.denom).collect())
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Integer square root (floor) of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    if n.is_negative() || n.is_zero() {
        return BigInt::zero();
    }
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let m = vec![qvec(&[2, -1]), qvec(&[-1, 2])];
        let inv = inverse(&m).unwrap();
        assert_eq!(inv[0], vec![frac(2, 3), frac(1, 3)]);
        assert_eq!(inv[1], vec![frac(1, 3), frac(2, 3)]);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = vec![qvec(&[1, 2]), qvec(&[2, 4])];
        assert!(inverse(&m).is_none());
    }

    #[test]
    fn span_solver_membership() {
        let cols = vec![qvec(&[1, 0, 1]), qvec(&[0, 1, 1])];
        let s = SpanSolver::new(&cols, 3).unwrap();
        assert_eq!(s.solve(&qvec(&[2, 3, 5])), Some(qvec(&[2, 3])));
        assert_eq!(s.solve(&qvec(&[1, 1, 1])), None);
        assert!(SpanSolver::new(&[qvec(&[1, 1]), qvec(&[2, 2])], 2).is_none());
    }

    #[test]
    fn integer_span_solver_agrees() {
        let cols = vec![vec![2, 0, 2], vec![0, 3, 3]];
        let s = IntSpanSolver::new(&cols, 3).unwrap();
        assert_eq!(s.solve_integral(&[2, 3, 5]), Some(vec![1, 1]));
        assert_eq!(s.solve_integral(&[1, 3, 4]), None);
        assert_eq!(s.solve(&[1, 3, 4]), Some(vec![frac(1, 2), q(1)]));
        assert!(!s.in_span(&[1, 0, 0]));
    }
}
