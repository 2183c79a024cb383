//! Smith normal form over the integers and sublattice membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `left * a * right = diag` with `left`, `right` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
    pub rows: usize,
    pub cols: usize,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn row_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for c in 0..m[dst].len() {
        let delta = f * &m[src][c];
        m[dst][c] += delta;
    }
}

fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let delta = f * &row[src];
        row[dst] += delta;
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

pub fn smith(a: &[Vec<BigInt>]) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut left = identity(rows);
    let mut right = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            m.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut m, t, pj);
            swap_cols(&mut right, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let f = -(m[i][t].div_floor(&m[t][t]));
                row_axpy(&mut m, i, t, &f);
                row_axpy(&mut left, i, t, &f);
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let f = -(m[t][j].div_floor(&m[t][t]));
                col_axpy(&mut m, j, t, &f);
                col_axpy(&mut right, j, t, &f);
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_multiple_of(&m[t][t]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    row_axpy(&mut m, t, i, &one);
                    row_axpy(&mut left, t, i, &one);
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -x.clone();
            }
            for x in left[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    let diag = (0..rows.min(cols)).map(|i| m[i][i].clone()).collect();
    Smith {
        diag,
        left,
        right,
        rows,
        cols,
    }
}

/// The sublattice of `Z^n` spanned by a set of integer column vectors.
#[derive(Clone, Debug)]
pub struct IntLattice {
    smith: Smith,
}

impl IntLattice {
    pub fn from_columns(cols: &[Vec<i64>], dim: usize) -> Self {
        let a: Vec<Vec<BigInt>> = (0..dim)
            .map(|i| cols.iter().map(|c| BigInt::from(c[i])).collect())
            .collect();
        let a = if cols.is_empty() { vec![Vec::new(); dim] } else { a };
        Self { smith: smith(&a) }
    }

    pub fn rank(&self) -> usize {
        self.smith.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors of `Z^n / L` that exceed one (the torsion part).
    pub fn torsion_invariants(&self) -> Vec<BigInt> {
        self.smith
            .diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion_invariants()
            .into_iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let s = &self.smith;
        debug_assert_eq!(v.len(), s.rows);
        for (i, row) in s.left.iter().enumerate() {
            let y: BigInt = row.iter().zip(v).map(|(a, b)| a * b).sum();
            let d = s.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                if !y.is_zero() {
                    return false;
                }
            } else if !y.is_multiple_of(&d) {
                return false;
            }
        }
        true
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains(&v)
    }
}
