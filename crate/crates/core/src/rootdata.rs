//! Root systems in Bourbaki numbering, weights, coweights and Weyl words.
//!
//! Roots and weights are stored in simple-root coordinates, coweights in
//! simple-coroot coordinates. The Cartan matrix is indexed so that
//! `cartan[i][j] = <alpha_i, alpha_j^vee>`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, q, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    SimpleRoot,
    FundamentalWeight,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<Rational>,
    pub basis: Basis,
}

impl Weight {
    pub fn simple_root(coords: Vec<Rational>) -> Self {
        Self {
            coords,
            basis: Basis::SimpleRoot,
        }
    }

    pub fn fundamental(coords: Vec<Rational>) -> Self {
        Self {
            coords,
            basis: Basis::FundamentalWeight,
        }
    }

    pub fn fundamental_ints(coords: &[i64]) -> Self {
        Self::fundamental(arith::qvec(coords))
    }

    pub fn root_ints(coords: &[i64]) -> Self {
        Self::simple_root(arith::qvec(coords))
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// An element of the Cartan subalgebra in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coweight {
    pub coords: Vec<Rational>,
}

impl Coweight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(arith::qvec(coords))
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rational::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

/// A product of simple reflections. The leftmost letter is applied last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Letters are 0-based node indices.
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    /// Letters given in the usual 1-based Bourbaki labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::new(labels.iter().map(|&l| l - 1).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.letters.iter().rev().copied().collect())
    }

    /// `self * other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(letters)
    }

    pub fn apply<T: WeylAction + Clone>(&self, rs: &RootSystem, v: &T) -> Result<T> {
        if v.rank() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: v.rank(),
            });
        }
        if let Some(&bad) = self.letters.iter().find(|&&l| l >= rs.rank()) {
            return Err(Error::LetterOutOfRange {
                index: bad + 1,
                rank: rs.rank(),
            });
        }
        let mut out = v.clone();
        for &i in self.letters.iter().rev() {
            out.reflect(rs, i);
        }
        Ok(out)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("s{}", l + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub trait WeylAction {
    fn rank(&self) -> usize;
    fn reflect(&mut self, rs: &RootSystem, i: usize);
}

impl WeylAction for Weight {
    fn rank(&self) -> usize {
        self.coords.len()
    }

    fn reflect(&mut self, rs: &RootSystem, i: usize) {
        match self.basis {
            Basis::SimpleRoot => {
                let p = rs.root_coords_pair_coroot(&self.coords, i);
                if !p.is_zero() {
                    self.coords[i] -= p;
                }
            }
            Basis::FundamentalWeight => {
                let p = self.coords[i].clone();
                if !p.is_zero() {
                    for j in 0..self.coords.len() {
                        let c = rs.cartan[i][j];
                        if c != 0 {
                            self.coords[j] -= &p * q(c);
                        }
                    }
                }
            }
        }
    }
}

impl WeylAction for Coweight {
    fn rank(&self) -> usize {
        self.coords.len()
    }

    fn reflect(&mut self, rs: &RootSystem, i: usize) {
        let p = rs.node_value(&self.coords, i);
        if !p.is_zero() {
            self.coords[i] -= p;
        }
    }
}

/// Immutable root datum of a simple Lie algebra.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    /// squared lengths of simple roots, long roots having length 2
    lengths: Vec<Rational>,
    form: Vec<Vec<Rational>>,
    cartan_inverse: Vec<Vec<Rational>>,
    positive_roots: Vec<Vec<i64>>,
    root_set: HashSet<Vec<i64>>,
    highest_root: Vec<i64>,
    marks: Vec<i64>,
}

fn dynkin_edges(t: CartanType) -> Vec<(usize, usize)> {
    let n = t.rank();
    let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            e
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            e
        }
    }
}

fn simple_root_lengths(t: CartanType) -> Vec<Rational> {
    let n = t.rank();
    let two = q(2);
    match t.family() {
        Family::A | Family::D | Family::E => vec![two; n],
        Family::B => (0..n).map(|i| if i + 1 == n { q(1) } else { q(2) }).collect(),
        Family::C => (0..n).map(|i| if i + 1 == n { q(2) } else { q(1) }).collect(),
        Family::F => vec![q(2), q(2), q(1), q(1)],
        Family::G => vec![arith::frac(2, 3), q(2)],
    }
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let lengths = simple_root_lengths(cartan_type);
        let mut form = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            form[i][i] = lengths[i].clone();
        }
        for (i, j) in dynkin_edges(cartan_type) {
            let v = if lengths[i] == lengths[j] {
                -(&lengths[i] / q(2))
            } else {
                -Rational::one()
            };
            form[i][j] = v.clone();
            form[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = q(2) * &form[i][j] / &lengths[j];
                        arith::to_i64(&c).expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Rational>> = cartan.iter().map(|r| arith::qvec(r)).collect();
        let cartan_inverse = arith::inverse(&cartan_q).expect("Cartan matrix is invertible");

        let mut rs = RootSystem {
            cartan_type,
            cartan,
            lengths,
            form,
            cartan_inverse,
            positive_roots: Vec::new(),
            root_set: HashSet::new(),
            highest_root: Vec::new(),
            marks: Vec::new(),
        };
        rs.close_roots();
        rs
    }

    /// Generates the roots as the closure of the simple roots under simple reflections.
    fn close_roots(&mut self) {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let p: i64 = (0..n).map(|k| beta[k] * self.cartan[k][i]).sum();
                if p == 0 {
                    continue;
                }
                let mut r = beta.clone();
                r[i] -= p;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let highest = positive.last().cloned().expect("nonempty root system");
        let mut marks = highest.clone();
        marks.push(1);
        self.positive_roots = positive;
        self.root_set = seen;
        self.highest_root = highest;
        self.marks = marks;
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }

    /// Symmetrized Cartan matrix in the simple-root basis.
    pub fn invariant_form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    pub fn simple_root_lengths(&self) -> &[Rational] {
        &self.lengths
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// All roots, positive ones first, then their negatives in the same order.
    pub fn roots(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(|r| r.iter().map(|x| -x).collect()))
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_set.contains(v)
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// Marks `c_alpha` of the extended diagram; index `rank()` is the affine node.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Coordinates of extended node `i` (the affine node is `-theta`).
    pub fn extended_node_vector(&self, i: usize) -> Vec<i64> {
        let n = self.rank();
        if i == n {
            self.highest_root.iter().map(|x| -x).collect()
        } else {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        }
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::simple_root(self.cartan_inverse[i].clone())
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        (0..self.rank()).map(|i| self.fundamental_weight(i)).collect()
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        let mut c = vec![Rational::zero(); self.rank()];
        c[i] = Rational::one();
        Weight::simple_root(c)
    }

    pub fn simple_coroot(&self, i: usize) -> Coweight {
        let mut c = vec![Rational::zero(); self.rank()];
        c[i] = Rational::one();
        Coweight::new(c)
    }

    /// Squared length of an integer vector in simple-root coordinates.
    pub fn root_norm(&self, beta: &[i64]) -> Rational {
        let b = arith::qvec(beta);
        arith::bilinear(&b, &self.form, &b)
    }

    /// `beta^vee` in simple-coroot coordinates.
    pub fn coroot(&self, beta: &[i64]) -> Coweight {
        self.coroot_of(&arith::qvec(beta))
    }

    pub fn coroot_of(&self, beta: &[Rational]) -> Coweight {
        let norm = arith::bilinear(beta, &self.form, beta);
        Coweight::new(beta.iter().zip(&self.lengths).map(|(b, l)| b * l / &norm).collect())
    }

    /// `<mu, alpha_i^vee>` for `mu` in simple-root coordinates.
    pub(crate) fn root_coords_pair_coroot(&self, mu: &[Rational], i: usize) -> Rational {
        mu.iter()
            .enumerate()
            .filter(|(k, _)| self.cartan[*k][i] != 0)
            .fold(Rational::zero(), |acc, (k, c)| acc + c * q(self.cartan[k][i]))
    }

    /// `alpha_i(h)` for `h` in simple-coroot coordinates.
    pub(crate) fn node_value(&self, h: &[Rational], i: usize) -> Rational {
        h.iter()
            .enumerate()
            .filter(|(j, _)| self.cartan[i][*j] != 0)
            .fold(Rational::zero(), |acc, (j, x)| acc + x * q(self.cartan[i][j]))
    }

    /// The values `alpha_i(h)` for all simple roots.
    pub fn node_values(&self, h: &Coweight) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.node_value(&h.coords, i)).collect()
    }

    /// The coweight whose node values are the given labels.
    pub fn coweight_from_labels(&self, labels: &[i64]) -> Coweight {
        let l = arith::qvec(labels);
        Coweight::new(arith::mat_vec(&self.cartan_inverse, &l))
    }

    /// Value of an integer root on a coweight.
    pub fn root_value(&self, beta: &[i64], h: &Coweight) -> Rational {
        beta.iter()
            .enumerate()
            .filter(|(_, b)| **b != 0)
            .fold(Rational::zero(), |acc, (i, b)| {
                acc + q(*b) * self.node_value(&h.coords, i)
            })
    }

    pub fn to_root_basis(&self, w: &Weight) -> Weight {
        match w.basis {
            Basis::SimpleRoot => w.clone(),
            Basis::FundamentalWeight => Weight::simple_root(arith::vec_mat(&w.coords, &self.cartan_inverse)),
        }
    }

    pub fn to_fundamental_basis(&self, w: &Weight) -> Weight {
        match w.basis {
            Basis::FundamentalWeight => w.clone(),
            Basis::SimpleRoot => Weight::fundamental(
                (0..self.rank())
                    .map(|j| self.root_coords_pair_coroot(&w.coords, j))
                    .collect(),
            ),
        }
    }

    fn check_rank(&self, got: usize) -> Result<()> {
        if got == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got,
            })
        }
    }

    /// The natural pairing of a weight with a coweight.
    pub fn pair(&self, mu: &Weight, h: &Coweight) -> Result<Rational> {
        self.check_rank(mu.rank())?;
        self.check_rank(h.rank())?;
        let f = self.to_fundamental_basis(mu);
        // fundamental coordinates are the values on simple coroots
        Ok(arith::dot(&f.coords, &h.coords))
    }

    /// Invariant form on weights.
    pub fn form(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        self.check_rank(a.rank())?;
        self.check_rank(b.rank())?;
        let a = self.to_root_basis(a);
        let b = self.to_root_basis(b);
        Ok(arith::bilinear(&a.coords, &self.form, &b.coords))
    }

    pub fn norm(&self, a: &Weight) -> Result<Rational> {
        self.form(a, a)
    }

    pub fn is_dominant(&self, h: &Coweight) -> bool {
        (0..self.rank()).all(|i| !self.node_value(&h.coords, i).is_negative())
    }

    /// Conjugates `h` into the dominant chamber with the greedy
    /// smallest-index rule. Returns `(h_dom, w)` with `w(h) = h_dom`.
    pub fn dominate(&self, h: &Coweight) -> (Coweight, WeylWord) {
        let n = self.rank();
        let mut coords = h.coords.clone();
        let mut values: Vec<Rational> = (0..n).map(|i| self.node_value(&coords, i)).collect();
        let mut applied: Vec<usize> = Vec::new();
        while let Some(i) = (0..n).find(|&i| values[i].is_negative()) {
            let p = values[i].clone();
            coords[i] -= &p;
            for (j, v) in values.iter_mut().enumerate() {
                let c = self.cartan[j][i];
                if c != 0 {
                    *v -= &p * q(c);
                }
            }
            applied.push(i);
        }
        applied.reverse();
        (Coweight::new(coords), WeylWord::new(applied))
    }

    /// Simple reflection on integer simple-root coordinates.
    pub fn reflect_root_coords(&self, c: &mut [i64], i: usize) {
        let p: i64 = (0..c.len()).map(|k| c[k] * self.cartan[k][i]).sum();
        c[i] -= p;
    }

    /// Word action on integer simple-root coordinates, rightmost letter first.
    pub fn apply_word_root_coords(&self, w: &WeylWord, c: &mut [i64]) {
        for &i in w.letters().iter().rev() {
            self.reflect_root_coords(c, i);
        }
    }

    /// Simple reflection on integer fundamental-weight coordinates.
    pub fn reflect_fundamental_coords(&self, m: &mut [i64], i: usize) {
        let p = m[i];
        if p != 0 {
            for (j, x) in m.iter_mut().enumerate() {
                *x -= p * self.cartan[i][j];
            }
        }
    }

    /// Greedy dominance on integer node values `alpha_i(h)`; returns `w`
    /// with `w(h)` dominant and updates the values in place.
    pub fn dominate_values(&self, values: &mut [i64]) -> WeylWord {
        let mut applied = Vec::new();
        while let Some(i) = values.iter().position(|&v| v < 0) {
            let p = values[i];
            for j in 0..values.len() {
                let c = self.cartan[j][i];
                if c != 0 {
                    values[j] -= p * c;
                }
            }
            applied.push(i);
        }
        applied.reverse();
        WeylWord::new(applied)
    }

    /// Integer simple-root coordinates of a weight, if it lies in the root lattice.
    pub fn root_lattice_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        arith::to_int_vec(&self.to_root_basis(w).coords)
    }

    /// Whether a weight lies in the root lattice.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.to_root_basis(w).coords.iter().all(arith::is_integral)
    }

    /// Order of the class of an integral weight modulo the root lattice.
    pub fn order_mod_root_lattice(&self, w: &Weight) -> i64 {
        let r = self.to_root_basis(w);
        r.coords.iter().fold(1i64, |acc, c| {
            let d: i64 = num_traits::ToPrimitive::to_i64(c.denom()).expect("small denominator");
            num_integer::lcm(acc, d)
        })
    }

    /// Coxeter number, used only as an independent cross-check on root counts.
    pub fn coxeter_number(&self) -> usize {
        let n = self.rank();
        match self.cartan_type.family() {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }
}

/// Parses labels like `2,0,0,1` or `2 0 0 1`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>().map_err(|_| Error::Parse {
                what: "integer list",
                input: s.to_string(),
            })
        })
        .collect()
}

/// Parses fundamental-weight expressions such as `w4`, `w2-w7`, `3w1`, `0`
/// into integer fundamental-weight coordinates.
pub fn parse_weight(s: &str, rank: usize) -> Result<Vec<i64>> {
    let err = || Error::Parse {
        what: "weight",
        input: s.to_string(),
    };
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coords = vec![0i64; rank];
    if t == "0" {
        return Ok(coords);
    }
    if t.contains(',') {
        let v = parse_int_list(&t)?;
        if v.len() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: v.len(),
            });
        }
        return Ok(v);
    }
    let bytes: Vec<char> = t.chars().collect();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1i64;
        if bytes[pos] == '+' || bytes[pos] == '-' {
            if bytes[pos] == '-' {
                sign = -1;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(err());
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let mult: i64 = if pos > start {
            bytes[start..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| err())?
        } else {
            1
        };
        if pos >= bytes.len() || !matches!(bytes[pos], 'w' | 'W') {
            return Err(err());
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let idx: usize = bytes[start..pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| err())?;
        if idx == 0 || idx > rank {
            return Err(err());
        }
        coords[idx - 1] += sign * mult;
    }
    Ok(coords)
}

/// Renders integer fundamental-weight coordinates as `w2-w7`, `3w1`, `0`.
pub fn format_weight(coords: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("w{}", i + 1));
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Formats node labels in the row layout used for exceptional diagrams:
/// `a1 a3 a4 ... an / a2` for type E, plain order otherwise.
pub fn format_diagram(t: CartanType, labels: &[i64]) -> String {
    if t.family() == Family::E {
        let mut top: Vec<String> = vec![labels[0].to_string()];
        top.extend(labels[2..].iter().map(|l| l.to_string()));
        format!("{} / {}", top.join(" "), labels[1])
    } else {
        labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}

pub fn format_rational_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::F, 3).is_err());
        assert!("X3".parse::<CartanType>().is_err());
        assert!("E".parse::<CartanType>().is_err());
        assert_eq!("e6".parse::<CartanType>().unwrap().to_string(), "E6");
    }

    #[test]
    fn positive_root_counts_match_coxeter_numbers() {
        for t in [
            "A1", "A4", "B2", "B5", "C3", "C6", "D4", "D7", "E6", "E7", "E8", "F4", "G2",
        ] {
            let r = rs(t);
            assert_eq!(r.positive_roots().len(), r.rank() * r.coxeter_number() / 2, "{t}");
        }
        assert_eq!(rs("E8").positive_roots().len(), 120);
    }

    #[test]
    fn g2_highest_root_and_marks() {
        let r = rs("G2");
        assert_eq!(r.positive_roots().len(), 6);
        assert_eq!(r.highest_root(), &[3, 2]);
        assert_eq!(r.marks(), &[3, 2, 1]);
        assert_eq!(r.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn a1_is_trivial() {
        let r = rs("A1");
        assert_eq!(r.positive_roots(), &[vec![1]]);
        assert_eq!(r.marks(), &[1, 1]);
    }

    #[test]
    fn e6_highest_root() {
        assert_eq!(rs("E6").highest_root(), &[1, 2, 2, 3, 2, 1]);
        assert_eq!(rs("E8").highest_root(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs("F4").highest_root(), &[2, 3, 4, 2]);
    }

    #[test]
    fn cartan_matrix_shape() {
        for t in ["B4", "C4", "D5", "E7", "F4", "G2"] {
            let r = rs(t);
            for (i, row) in r.cartan_matrix().iter().enumerate() {
                for (j, &c) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(c, 2);
                    } else {
                        assert!(c <= 0);
                    }
                }
            }
        }
        // B2: alpha_2 short
        assert_eq!(rs("B2").cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for t in ["A3", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let r = rs(t);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    let v = r.pair(&r.fundamental_weight(i), &r.simple_coroot(j)).unwrap();
                    assert_eq!(v, if i == j { q(1) } else { q(0) });
                }
            }
        }
    }

    #[test]
    fn simple_root_pairings_give_cartan_entries() {
        let r = rs("F4");
        for i in 0..4 {
            for j in 0..4 {
                let v = r.pair(&r.simple_root(i), &r.simple_coroot(j)).unwrap();
                assert_eq!(v, q(r.cartan_matrix()[i][j]));
            }
        }
    }

    #[test]
    fn e6_fundamental_weight_two() {
        let r = rs("E6");
        let w2 = r.fundamental_weight(1);
        assert_eq!(w2.coords, arith::qvec(&[1, 2, 2, 3, 2, 1]));
        let v = r
            .pair(&Weight::root_ints(&[1, 2, 2, 3, 2, 1]), &r.simple_coroot(1))
            .unwrap();
        assert_eq!(v, q(1));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let r = rs("A2");
        assert!(matches!(
            r.pair(&Weight::root_ints(&[1, 0, 0]), &Coweight::from_ints(&[1, 0])),
            Err(Error::RankMismatch { .. })
        ));
        assert!(matches!(
            WeylWord::from_labels(&[3]).apply(&r, &Coweight::from_ints(&[1, 0])),
            Err(Error::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn empty_word_is_identity() {
        let r = rs("E7");
        let h = Coweight::from_ints(&[1, -2, 3, 0, 0, 1, 5]);
        assert_eq!(WeylWord::identity().apply(&r, &h).unwrap(), h);
    }

    #[test]
    fn theta_plus_simple_is_not_a_root() {
        for t in ["A5", "B4", "C4", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            assert!(r.highest_root().iter().all(|&c| c >= 1));
            for i in 0..r.rank() {
                let mut v = r.highest_root().to_vec();
                v[i] += 1;
                assert!(!r.is_root(&v));
            }
        }
    }

    #[test]
    fn invariant_form_is_positive_definite() {
        // leading principal minors via exact elimination
        for t in ["A6", "B5", "C5", "D6", "E8", "F4", "G2"] {
            let r = rs(t);
            let mut m: Vec<Vec<Rational>> = r.invariant_form().to_vec();
            let n = m.len();
            for k in 0..n {
                assert!(m[k][k].is_positive(), "{t}");
                for i in k + 1..n {
                    let f = &m[i][k] / &m[k][k];
                    for j in k..n {
                        let d = &f * &m[k][j];
                        m[i][j] -= d;
                    }
                }
            }
        }
    }

    #[test]
    fn simple_reflections_permute_other_positive_roots() {
        for t in ["A7", "B6", "C6", "D8", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            let n = r.rank();
            for i in 0..n {
                let mut images: Vec<Vec<i64>> = Vec::new();
                for beta in r.positive_roots() {
                    if beta.iter().enumerate().all(|(k, &c)| c == if k == i { 1 } else { 0 }) {
                        continue;
                    }
                    let p: i64 = (0..n).map(|k| beta[k] * r.cartan_matrix()[k][i]).sum();
                    let mut img = beta.clone();
                    img[i] -= p;
                    assert!(img.iter().all(|&c| c >= 0) && r.is_root(&img), "{t}");
                    images.push(img);
                }
                images.sort();
                images.dedup();
                assert_eq!(images.len(), r.positive_roots().len() - 1);
            }
        }
    }

    #[test]
    fn dominate_dominant_is_noop() {
        let r = rs("E6");
        let h = r.coweight_from_labels(&[0, 0, 0, 2, 0, 0]);
        let (d, w) = r.dominate(&h);
        assert_eq!(d, h);
        assert!(w.is_empty());
    }

    #[test]
    fn weight_parser_round_trip() {
        assert_eq!(parse_weight("w4", 4).unwrap(), vec![0, 0, 0, 1]);
        assert_eq!(parse_weight("w2-w7", 7).unwrap(), vec![0, 1, 0, 0, 0, 0, -1]);
        assert_eq!(parse_weight("3w1", 2).unwrap(), vec![3, 0]);
        assert_eq!(parse_weight("0", 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(parse_weight("1,0,-1", 3).unwrap(), vec![1, 0, -1]);
        assert!(parse_weight("w9", 8).is_err());
        assert!(parse_weight("x", 8).is_err());
        assert_eq!(format_weight(&[0, 1, 0, 0, 0, 0, -1]), "w2-w7");
        assert_eq!(format_weight(&[3, 0]), "3w1");
        assert_eq!(format_weight(&[0, 0]), "0");
    }

    #[test]
    fn e_diagrams_print_in_row_layout() {
        let t: CartanType = "E6".parse().unwrap();
        assert_eq!(format_diagram(t, &[0, 0, 0, 2, 0, 0]), "0 0 2 0 0 / 0");
    }
}
