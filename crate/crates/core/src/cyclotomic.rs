//! Sums of roots of unity, stored as exponent multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by every Phi_e with e | n, e < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for e in 1..n {
        if n.is_multiple_of(e) {
            num = exact_div(&num, &cyclotomic_polynomial(e));
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    assert!(lead == 1 || lead == -1);
    let mut quot = vec![0i64; rem.len().saturating_sub(dd)];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] / lead;
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    quot
}

/// Reduces a polynomial modulo a monic polynomial.
fn reduce_mod(poly: &[i64], modulus: &[i64]) -> Vec<i64> {
    let mut r = poly.to_vec();
    let dm = modulus.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &m) in modulus.iter().enumerate() {
                r[shift + i] -= c * m;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

/// `sum_i xi^{a_i}` for `xi` a primitive `order`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "TraceRepr", from = "TraceRepr")]
pub struct CyclotomicTrace {
    order: u32,
    exponent_counts: BTreeMap<u32, u64>,
}

/// Serialized form; integer map keys do not survive JSON inside tagged enums.
#[derive(Serialize, Deserialize)]
struct TraceRepr {
    order: u32,
    exponents: Vec<(u32, u64)>,
}

impl From<CyclotomicTrace> for TraceRepr {
    fn from(t: CyclotomicTrace) -> Self {
        TraceRepr {
            order: t.order,
            exponents: t.exponent_counts.into_iter().collect(),
        }
    }
}

impl From<TraceRepr> for CyclotomicTrace {
    fn from(r: TraceRepr) -> Self {
        let mut t = CyclotomicTrace::new(r.order.max(1));
        for (a, k) in r.exponents {
            *t.exponent_counts.entry(a % t.order).or_insert(0) += k;
        }
        t
    }
}

impl CyclotomicTrace {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "root of unity order must be positive");
        Self {
            order,
            exponent_counts: BTreeMap::new(),
        }
    }

    pub fn from_exponents(order: u32, exponents: impl IntoIterator<Item = i64>) -> Self {
        let mut t = Self::new(order);
        for a in exponents {
            t.push(a);
        }
        t
    }

    pub fn push(&mut self, exponent: i64) {
        let r = exponent.rem_euclid(self.order as i64) as u32;
        *self.exponent_counts.entry(r).or_insert(0) += 1;
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent_counts(&self) -> &BTreeMap<u32, u64> {
        &self.exponent_counts
    }

    /// Number of summands, i.e. the dimension of the representation.
    pub fn dimension(&self) -> u64 {
        self.exponent_counts.values().sum()
    }

    /// The value as a polynomial in `xi` reduced modulo the cyclotomic polynomial.
    pub fn reduced(&self) -> Vec<i64> {
        let mut poly = vec![0i64; self.order as usize];
        for (&e, &c) in &self.exponent_counts {
            poly[e as usize] += c as i64;
        }
        reduce_mod(&poly, &cyclotomic_polynomial(self.order))
    }

    /// The exact value when it is a rational integer.
    pub fn to_integer(&self) -> Option<i64> {
        let r = self.reduced();
        (r.len() == 1).then(|| r[0])
    }

    /// Invariance of the exponent multiset under `a -> -a`.
    pub fn is_real_symmetric(&self) -> bool {
        self.exponent_counts.iter().all(|(&e, &c)| {
            let neg = (self.order - e) % self.order;
            self.exponent_counts.get(&neg).copied().unwrap_or(0) == c
        })
    }

    /// Product of two traces taken at the same root of unity.
    pub fn tensor(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "traces at different roots of unity");
        let mut t = Self::new(self.order);
        for (&a, &ca) in &self.exponent_counts {
            for (&b, &cb) in &other.exponent_counts {
                *t.exponent_counts.entry((a + b) % self.order).or_insert(0) += ca * cb;
            }
        }
        t
    }
}

impl fmt::Display for CyclotomicTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.to_integer() {
            return write!(f, "{v}");
        }
        let terms: Vec<String> = self
            .exponent_counts
            .iter()
            .map(|(e, c)| if *c == 1 { format!("z^{e}") } else { format!("{c}z^{e}") })
            .collect();
        write!(f, "{} (z = e^(2 pi i/{}))", terms.join(" + "), self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cube_root_pair_sums_to_minus_one() {
        let t = CyclotomicTrace::from_exponents(3, [-1, 1]);
        assert_eq!(t.to_integer(), Some(-1));
        assert!(t.is_real_symmetric());
        assert_eq!(t.dimension(), 2);
    }

    #[test]
    fn full_orbit_of_roots_vanishes() {
        for d in 2..=12u32 {
            let t = CyclotomicTrace::from_exponents(d, 0..d as i64);
            assert_eq!(t.to_integer(), Some(0), "d = {d}");
        }
    }

    #[test]
    fn irrational_values_stay_symbolic() {
        let t = CyclotomicTrace::from_exponents(3, [1]);
        assert_eq!(t.to_integer(), None);
        assert!(!t.is_real_symmetric());
        assert!(t.to_string().contains("z^1"));
        let i = CyclotomicTrace::from_exponents(4, [1]);
        assert_eq!(i.reduced(), vec![0, 1]);
    }

    #[test]
    fn tensor_adds_exponents() {
        let a = CyclotomicTrace::from_exponents(5, [2]);
        let b = CyclotomicTrace::from_exponents(5, [3]);
        assert_eq!(a.tensor(&b).to_integer(), Some(1));
    }
}
