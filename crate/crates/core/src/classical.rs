//! Partition-indexed constructions for the classical types: component
//! group bases, the `chi_s` lifts, the extra spin representations, and
//! type A.
//!
//! Weights are built in the orthonormal `e_k` coordinates of the torus
//! that acts on `v_{i,j}` with `lambda_j + 1 - 2i > 0`, ordered by
//! decreasing exponent, and only then converted to fundamental weights.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};
use crate::balacarter::{lookup_name, Atlas, OrbitRecord};
use crate::lifting::{self, LeviWeight};
use crate::rootdata::{CartanType, Family, RootSystem, Weight};
use crate::{Error, Result};

/// Which of the two diagrams of a very even orbit in type D is meant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VeryEven {
    /// nonzero label on node `n`
    #[default]
    I,
    /// nonzero label on node `n-1`
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionOrbit {
    pub epsilon: u8,
    pub n_total: usize,
    pub parts: Vec<usize>,
    #[serde(default)]
    pub variant: VeryEven,
}

impl PartitionOrbit {
    /// Sorts the parts and checks the sum; parity is checked by [`validate`].
    pub fn new(epsilon: u8, parts: &[usize]) -> Result<Self> {
        if epsilon > 1 {
            return Err(Error::InvalidPartition(format!(
                "epsilon must be 0 or 1, got {epsilon}"
            )));
        }
        let mut parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n_total = parts.iter().sum();
        if n_total == 0 {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        Ok(Self {
            epsilon,
            n_total,
            parts,
            variant: VeryEven::I,
        })
    }

    pub fn with_variant(mut self, variant: VeryEven) -> Self {
        self.variant = variant;
        self
    }

    pub fn family(&self) -> Family {
        match (self.epsilon, self.n_total % 2) {
            (1, _) => Family::C,
            (_, 1) => Family::B,
            _ => Family::D,
        }
    }

    /// `n = floor(N/2)`.
    pub fn rank(&self) -> usize {
        self.n_total / 2
    }

    pub fn cartan_type(&self) -> Result<CartanType> {
        CartanType::new(self.family(), self.rank())
    }

    fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn is_very_even(&self) -> bool {
        self.family() == Family::D
            && self
                .parts
                .iter()
                .all(|&p| p % 2 == 0 && self.multiplicity(p).is_multiple_of(2))
    }

    /// `lambda_j` with 1-based `j`; zero past the end.
    pub fn part(&self, j: usize) -> usize {
        self.parts.get(j.wrapping_sub(1)).copied().unwrap_or(0)
    }

    fn checked(&self) -> Result<()> {
        if self.epsilon == 1 && self.n_total % 2 == 1 {
            return Err(Error::InvalidPartition(format!("{self}: type C needs N even")));
        }
        if !validate(self) {
            return Err(Error::InvalidPartition(format!("{self}: parity condition fails")));
        }
        self.cartan_type()?;
        Ok(())
    }
}

impl fmt::Display for PartitionOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", p.join(","))
    }
}

/// Parts of parity `epsilon` occur with even multiplicity.
pub fn validate(po: &PartitionOrbit) -> bool {
    po.parts
        .iter()
        .all(|&p| p % 2 != po.epsilon as usize || po.multiplicity(p).is_multiple_of(2))
}

/// All valid partitions of `N` for the given `epsilon`.
pub fn valid_partitions(epsilon: u8, n_total: usize) -> Vec<PartitionOrbit> {
    partitions(n_total)
        .into_iter()
        .filter_map(|p| PartitionOrbit::new(epsilon, &p).ok())
        .filter(validate)
        .collect()
}

/// Partitions of `n` in reverse lexicographic order, parts nonincreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBasis {
    /// 1-based indices
    pub b: Vec<usize>,
    pub k_max: Option<usize>,
    pub b_tilde: Vec<usize>,
    pub m: usize,
}

impl ComponentBasis {
    /// `|A(e)|` for `SO(N)` or `Sp(N)`.
    pub fn order(&self) -> u64 {
        1 << self.b_tilde.len()
    }

    /// The element of `B` following `k`.
    pub fn next(&self, k: usize) -> Option<usize> {
        self.b.iter().copied().find(|&x| x > k)
    }
}

pub fn component_basis(po: &PartitionOrbit) -> Result<ComponentBasis> {
    po.checked()?;
    let len = po.parts.len() + usize::from(po.epsilon == 1);
    let b: Vec<usize> = (1..=len)
        .filter(|&j| {
            let lj = po.part(j);
            (lj > po.part(j + 1) || (po.epsilon == 1 && j == len)) && lj % 2 != po.epsilon as usize
        })
        .collect();
    let k_max = b.last().copied();
    let b_tilde: Vec<usize> = b.iter().copied().filter(|&j| Some(j) != k_max).collect();
    let m = b_tilde.len() + 1;
    Ok(ComponentBasis { b, k_max, b_tilde, m })
}

/// `sigma(s) = dim F_s`.
pub fn sigma(po: &PartitionOrbit, s: usize) -> usize {
    po.parts.iter().filter(|&&l| l >= s).map(|&l| (l - s) / 2 + 1).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiWeight {
    pub s: usize,
    pub sigma: usize,
    /// `d_s = sigma(s) - sigma(s+1)`
    pub d: usize,
    /// whether `w_sigma(s)` is itself a character of the torus
    pub in_xi: bool,
    /// fundamental-weight coordinates
    pub weight: Vec<i64>,
}

/// `E` and `O` as one descending list.
pub fn even_odd_values(po: &PartitionOrbit) -> Vec<usize> {
    let mut out = BTreeSet::new();
    if let Some(&p) = po.parts.iter().find(|&&x| x % 2 == 0) {
        out.extend((2..=p).step_by(2));
    }
    if let Some(&q) = po.parts.iter().find(|&&x| x % 2 == 1) {
        out.extend((3..=q).step_by(2));
    }
    out.into_iter().rev().collect()
}

/// `e_{a+1} + ... + e_b` in `e`-coordinates of length `n`.
fn block(n: usize, a: usize, b: usize) -> Vec<Rational> {
    (1..=n).map(|k| arith::q(i64::from(k > a && k <= b))).collect()
}

/// Converts `e`-coordinates to fundamental-weight coordinates.
pub fn eps_to_fundamental(family: Family, x: &[Rational]) -> Result<Vec<i64>> {
    let n = x.len();
    let mut m: Vec<Rational> = (0..n.saturating_sub(1)).map(|i| &x[i] - &x[i + 1]).collect();
    match family {
        Family::B => m.push(&x[n - 1] * arith::q(2)),
        Family::C => m.push(x[n - 1].clone()),
        Family::D => {
            m[n - 2] = &x[n - 2] - &x[n - 1];
            m.push(&x[n - 2] + &x[n - 1]);
        }
        Family::A => {
            // x has l entries; fundamental coordinates are the l-1 differences
        }
        _ => return Err(Error::Invariant("not a classical family".into())),
    }
    arith::to_int_vec(&m).ok_or_else(|| Error::Invariant("non-integral weight".into()))
}

fn swap_terminal(po: &PartitionOrbit, m: &mut [i64]) {
    if po.is_very_even() && po.variant == VeryEven::II {
        let n = m.len();
        m.swap(n - 2, n - 1);
    }
}

/// `chi_s` as the weight of the `e`-block for exponent `s - 1`.
pub fn chi_weight(po: &PartitionOrbit, s: usize) -> Result<ChiWeight> {
    let n = po.rank();
    let hi = sigma(po, s);
    let lo = sigma(po, s + 1);
    let mut weight = eps_to_fundamental(po.family(), &block(n, lo, hi))?;
    swap_terminal(po, &mut weight);
    let in_xi = match po.family() {
        Family::B => hi != n,
        Family::D => hi + 1 < n,
        _ => true,
    };
    Ok(ChiWeight {
        s,
        sigma: hi,
        d: hi - lo,
        in_xi,
        weight,
    })
}

pub fn chi_weights(po: &PartitionOrbit) -> Result<Vec<ChiWeight>> {
    po.checked()?;
    even_odd_values(po).into_iter().map(|s| chi_weight(po, s)).collect()
}

/// `chi_S = sum_{j in S} chi_{lambda_j}` for `S` inside `B_tilde`.
pub fn lift_character(po: &PartitionOrbit, subset: &[usize]) -> Result<Vec<i64>> {
    let basis = component_basis(po)?;
    if let Some(j) = subset.iter().find(|j| !basis.b_tilde.contains(j)) {
        return Err(Error::NotInBasis(format!("index {j} of {po}")));
    }
    let mut out = vec![0i64; po.rank()];
    for &j in subset {
        let c = chi_weight(po, po.part(j))?;
        for (o, w) in out.iter_mut().zip(&c.weight) {
            *o += w;
        }
    }
    Ok(out)
}

/// `chi_s(b_k)`: the sign of `b_k` on the `v_{i,k}` with `lambda_k + 2 - 2i = s`.
pub fn evaluate_generator(po: &PartitionOrbit, s: usize, k: usize) -> Result<i8> {
    let basis = component_basis(po)?;
    if s < 2 || !even_odd_values(po).contains(&s) {
        return Err(Error::InvalidGenerator(format!("s = {s} is not in E or O for {po}")));
    }
    if !basis.b.contains(&k) {
        return Err(Error::InvalidGenerator(format!("k = {k} is not in B for {po}")));
    }
    let lk = po.part(k);
    let hits = (1..=lk).filter(|&i| lk + 2 == s + 2 * i).count();
    Ok(if hits % 2 == 1 { -1 } else { 1 })
}

/// `chi_s(b~_k)` with `b~_k = b_k b_k'` and `b_kmax = 1` in type C.
pub fn evaluate_basis_element(po: &PartitionOrbit, s: usize, k: usize) -> Result<i8> {
    let basis = component_basis(po)?;
    if !basis.b_tilde.contains(&k) {
        return Err(Error::InvalidGenerator(format!("k = {k} is not in B~ for {po}")));
    }
    let kp = basis.next(k).expect("k is below k_max");
    let first = evaluate_generator(po, s, k)?;
    let second = if po.epsilon == 1 && Some(kp) == basis.k_max {
        1
    } else {
        evaluate_generator(po, s, kp)?
    };
    Ok(first * second)
}

/// `chi_bar_S(b~_k)` computed from the generators.
pub fn restriction(po: &PartitionOrbit, subset: &[usize], k: usize) -> Result<i8> {
    let mut v = 1i8;
    for &j in subset {
        v *= evaluate_basis_element(po, po.part(j), k)?;
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinRep {
    pub weight: Vec<i64>,
    /// after subtracting the largest admissible nonzero node
    pub minimal: Vec<i64>,
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinReport {
    pub reps: Vec<SpinRep>,
    pub reason: Option<String>,
}

/// The extra representations of the spin cover.
pub fn spin_representations(po: &PartitionOrbit) -> Result<SpinReport> {
    let basis = component_basis(po)?;
    let family = po.family();
    if po.epsilon != 0 {
        return Ok(SpinReport {
            reps: vec![],
            reason: Some("type C has no spin cover".into()),
        });
    }
    if let Some(&p) = po.parts.iter().find(|&&p| p % 2 == 1 && po.multiplicity(p) > 1) {
        return Ok(SpinReport {
            reps: vec![],
            reason: Some(format!(
                "odd part {p} repeats; the kernel of the cover is trivial in A(e)"
            )),
        });
    }
    let n = po.rank();
    let diagram = partition_to_dynkin(po)?.diagram;
    let m = basis.m as u32;
    let fundamental = |i: usize| {
        let mut v = vec![0i64; n];
        v[i - 1] = 1;
        v
    };
    let (weights, dimension, limit) = match family {
        Family::B => (vec![fundamental(n)], 1u64 << ((m - 1) / 2), n - 1),
        _ if po.is_very_even() => {
            let i = if diagram[n - 1] != 0 { n } else { n - 1 };
            (vec![fundamental(i)], 1, n - 2)
        }
        _ => (vec![fundamental(n - 1), fundamental(n)], 1u64 << (m / 2 - 1), n - 2),
    };
    let sub = (1..=limit).rev().find(|&i| diagram[i - 1] != 0);
    let reps = weights
        .into_iter()
        .map(|weight| {
            let mut minimal = weight.clone();
            if let Some(i) = sub {
                minimal[i - 1] -= 1;
            }
            SpinRep {
                weight,
                minimal,
                dimension,
            }
        })
        .collect();
    Ok(SpinReport { reps, reason: None })
}

/// Positive `gamma`-exponents `lambda_j + 1 - 2i`, padded with zeros to `n`.
fn dominant_exponents(parts: &[usize], n: usize) -> Vec<i64> {
    let mut ex: Vec<i64> = parts
        .iter()
        .flat_map(|&l| (1..=l).map(move |i| l as i64 + 1 - 2 * i as i64))
        .filter(|&e| e > 0)
        .collect();
    ex.sort_unstable_by(|a, b| b.cmp(a));
    ex.resize(n, 0);
    ex
}

/// Weighted Dynkin diagram of the orbit, in Bourbaki order.
pub fn partition_to_dynkin(po: &PartitionOrbit) -> Result<OrbitRecord> {
    po.checked()?;
    let n = po.rank();
    let y = dominant_exponents(&po.parts, n);
    let mut labels: Vec<i64> = (0..n - 1).map(|i| y[i] - y[i + 1]).collect();
    match po.family() {
        Family::B => labels.push(y[n - 1]),
        Family::C => labels.push(2 * y[n - 1]),
        _ => {
            labels[n - 2] = y[n - 2] - y[n - 1];
            labels.push(y[n - 2] + y[n - 1]);
        }
    }
    swap_terminal(po, &mut labels);
    let t = po.cartan_type()?;
    let rs = RootSystem::new(t);
    let name = lookup_name(t, &labels).unwrap_or_else(|| po.to_string());
    Ok(OrbitRecord::from_diagram(&rs, labels, name))
}

/// Type A orbit of `SL_l` for a partition of `l`.
pub fn type_a_dynkin(parts: &[usize]) -> Result<OrbitRecord> {
    let l: usize = parts.iter().sum();
    let t = CartanType::new(Family::A, l.saturating_sub(1))?;
    let mut ex: Vec<i64> = parts
        .iter()
        .flat_map(|&p| (1..=p).map(move |i| p as i64 + 1 - 2 * i as i64))
        .collect();
    ex.sort_unstable_by(|a, b| b.cmp(a));
    let labels = ex.windows(2).map(|w| w[0] - w[1]).collect();
    let rs = RootSystem::new(t);
    let name = {
        let mut p = parts.to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        format!("{p:?}").replace(' ', "")
    };
    Ok(OrbitRecord::from_diagram(&rs, labels, name))
}

/// `gcd` of the parts and the weights `w_{jq}`, `0 <= j < d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeALifts {
    pub l: usize,
    pub d: usize,
    pub q: usize,
    pub weights: Vec<Vec<i64>>,
}

pub fn type_a_lifts(parts: &[usize]) -> Result<TypeALifts> {
    let l: usize = parts.iter().sum();
    if l < 2 || parts.contains(&0) {
        return Err(Error::InvalidPartition(format!(
            "{parts:?}: need positive parts summing to at least 2"
        )));
    }
    let d = parts.iter().fold(0usize, |g, &p| num_integer::gcd(g, p));
    let q = l / d;
    let weights = (0..d)
        .map(|j| {
            let mut v = vec![0i64; l - 1];
            if j > 0 {
                v[j * q - 1] = 1;
            }
            v
        })
        .collect();
    Ok(TypeALifts { l, d, q, weights })
}

/// Trace of `V_{w_k}` of `SL_l` on the image of the central element
/// `exp(2 pi i t / l)`, as an exponent of a primitive `d`-th root of unity.
/// The image of the centre is all of `A(e)` here.
pub fn central_exponent(lifts: &TypeALifts, k: usize, t: usize) -> Result<u32> {
    if !k.is_multiple_of(lifts.q) {
        return Err(Error::InvalidGenerator(format!(
            "w{k} is not trivial on the identity component for d = {}",
            lifts.d
        )));
    }
    Ok(((k / lifts.q * t) % lifts.d) as u32)
}

/// `sum_i i m_i mod l`: the class of a weight of `SL_l` modulo the root lattice.
pub fn type_a_class(weight: &[i64]) -> usize {
    let l = weight.len() as i64 + 1;
    let c: i64 = weight.iter().enumerate().map(|(i, m)| (i as i64 + 1) * m).sum();
    c.rem_euclid(l) as usize
}

/// For each `j < d`, a shortest Levi weight in the class of `w_{jq}` that
/// descends on the Bala-Carter pair. This is `w_{jq}` itself unless that
/// weight splits a Levi block whose vectors come from Jordan blocks of
/// different sizes, as for `w4` and `[9,3]`.
pub fn type_a_descending_lifts(parts: &[usize]) -> Result<TypeALifts> {
    let lifts = type_a_lifts(parts)?;
    let atlas = Atlas::get(CartanType::new(Family::A, lifts.l - 1)?);
    let rs = atlas.root_system();
    let diagram = type_a_dynkin(parts)?.diagram;
    let orbit = atlas
        .orbit_by_diagram(&diagram)
        .ok_or_else(|| Error::UnknownOrbit(format!("{diagram:?}")))?;
    let pair = atlas.bala_carter_pair(orbit);
    let descends = |w: &[i64]| lifting::descends(rs, &LeviWeight::new(rs, orbit, w.to_vec())?, pair);
    // a minuscule weight is the shortest element of its coset, so w_{jq}
    // stands whenever it descends
    let mut found: Vec<Option<Vec<i64>>> = lifts
        .weights
        .iter()
        .map(|w| Ok(descends(w)?.then(|| w.clone())))
        .collect::<Result<_>>()?;
    let missing: Vec<usize> = (0..lifts.d).filter(|&j| found[j].is_none()).collect();
    if let Some(&j) = missing.first() {
        let mut bound = rs.norm(&Weight::fundamental_ints(&lifts.weights[j]))?;
        let cap = &bound * arith::q(16) + arith::q(2);
        loop {
            for (_, m) in lifting::levi_minuscule_weights(rs, orbit, &bound) {
                let class = type_a_class(&m);
                if !class.is_multiple_of(lifts.q) || found[class / lifts.q].is_some() {
                    continue;
                }
                if descends(&m)? {
                    found[class / lifts.q] = Some(m);
                }
            }
            if found.iter().all(Option::is_some) {
                break;
            }
            if bound >= cap {
                return Err(Error::SearchExhausted(cap.to_string()));
            }
            bound = &bound * arith::q(2);
        }
    }
    let weights = found.into_iter().map(|w| w.expect("all found")).collect();
    Ok(TypeALifts { weights, ..lifts })
}
