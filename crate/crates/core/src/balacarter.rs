//! Pseudo-Levi subsystems of the extended diagram, distinguished labelings,
//! nilpotent orbit catalogs and torsion data of lattice quotients.
//!
//! Extended node indices run over `0..=rank`; index `rank` is the affine
//! node, realized as `-theta`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{self, IntSpanSolver, Rational};
use crate::error::{Error, Result};
use crate::rootdata::{CartanType, Coweight, Family, RootSystem, Weight, WeylWord};
use crate::snf::IntLattice;

const NAME_TABLE: &str = include_str!("../data/orbit_names.tsv");

/// A proper subset of the extended simple roots, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtendedSubset {
    rank: usize,
    mask: u32,
}

impl ExtendedSubset {
    pub fn new(rank: usize, nodes: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in nodes {
            if i > rank {
                return Err(Error::LetterOutOfRange { index: i + 1, rank });
            }
            mask |= 1 << i;
        }
        Self::from_mask(rank, mask)
    }

    pub fn from_mask(rank: usize, mask: u32) -> Result<Self> {
        let full = (1u32 << (rank + 1)) - 1;
        if mask & !full != 0 || mask == full {
            return Err(Error::Invariant(format!(
                "subset {mask:#b} is not a proper subset of the extended diagram"
            )));
        }
        Ok(Self { rank, mask })
    }

    /// The set of all simple roots, `Pi`.
    pub fn simple(rank: usize) -> Self {
        Self {
            rank,
            mask: (1u32 << rank) - 1,
        }
    }

    /// `Pi~` minus the listed nodes.
    pub fn complement_of(rank: usize, removed: &[usize]) -> Result<Self> {
        let full = (1u32 << (rank + 1)) - 1;
        let mut mask = full;
        for &i in removed {
            mask &= !(1 << i);
        }
        Self::from_mask(rank, mask)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, node: usize) -> bool {
        self.mask & (1 << node) != 0
    }

    pub fn nodes(&self) -> Vec<usize> {
        (0..=self.rank).filter(|&i| self.contains(i)).collect()
    }

    pub fn missing(&self) -> Vec<usize> {
        (0..=self.rank).filter(|&i| !self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn includes_affine(&self) -> bool {
        self.contains(self.rank)
    }
}

impl fmt::Display for ExtendedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nodes()
            .into_iter()
            .map(|i| {
                if i == self.rank {
                    "-theta".to_string()
                } else {
                    format!("a{}", i + 1)
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A connected component of a subsystem's diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// positions into the subsystem's node list
    pub members: Vec<usize>,
    pub family: Family,
    pub rank: usize,
    /// type A made of short roots in a non-simply-laced ambient
    pub short: bool,
}

impl Component {
    pub fn type_name(&self) -> String {
        format!(
            "{}{}{}",
            if self.short { "~" } else { "" },
            self.family.letter(),
            self.rank
        )
    }
}

fn family_order(f: Family) -> usize {
    match f {
        Family::E => 0,
        Family::F => 1,
        Family::D => 2,
        Family::C => 3,
        Family::B => 4,
        Family::G => 5,
        Family::A => 6,
    }
}

/// `Phi_J` for a proper subset `J` of the extended diagram.
#[derive(Clone, Debug)]
pub struct Subsystem {
    subset: ExtendedSubset,
    nodes: Vec<usize>,
    vectors: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    /// positive roots of `Phi_J` in `J`-coordinates
    positive_j: Vec<Vec<i64>>,
    /// the same roots in ambient simple-root coordinates
    positive_ambient: Vec<Vec<i64>>,
    components: Vec<Component>,
    span: IntSpanSolver,
    lattice: IntLattice,
}

impl Subsystem {
    pub fn new(rs: &RootSystem, subset: ExtendedSubset) -> Self {
        let n = rs.rank();
        assert_eq!(subset.rank(), n, "subset rank differs from root system rank");
        let nodes = subset.nodes();
        let vectors: Vec<Vec<i64>> = nodes.iter().map(|&i| rs.extended_node_vector(i)).collect();
        let span =
            IntSpanSolver::new(&vectors, n).expect("a proper subset of the extended diagram is linearly independent");
        let norms: Vec<Rational> = vectors.iter().map(|v| rs.root_norm(v)).collect();
        let form = rs.invariant_form();
        let cartan: Vec<Vec<i64>> = (0..vectors.len())
            .map(|a| {
                (0..vectors.len())
                    .map(|b| {
                        let ip = arith::bilinear(&arith::qvec(&vectors[a]), form, &arith::qvec(&vectors[b]));
                        arith::to_i64(&(arith::q(2) * ip / &norms[b])).expect("integral")
                    })
                    .collect()
            })
            .collect();

        let mut positive_j = Vec::new();
        let mut positive_ambient = Vec::new();
        for beta in rs.positive_roots() {
            if let Some(c) = span.solve_integral(beta) {
                let nonneg = c.iter().all(|&x| x >= 0);
                let nonpos = c.iter().all(|&x| x <= 0);
                assert!(nonneg || nonpos, "J is not a base of Phi_J");
                if nonneg {
                    positive_j.push(c);
                    positive_ambient.push(beta.clone());
                } else {
                    positive_j.push(c.iter().map(|x| -x).collect());
                    positive_ambient.push(beta.iter().map(|x| -x).collect());
                }
            }
        }
        let components = identify_components(rs, &cartan, &norms);
        let lattice = IntLattice::from_columns(&vectors, n);
        Self {
            subset,
            nodes,
            vectors,
            cartan,
            positive_j,
            positive_ambient,
            components,
            span,
            lattice,
        }
    }

    pub fn subset(&self) -> ExtendedSubset {
        self.subset
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_ambient
    }

    pub fn positive_roots_j(&self) -> &[Vec<i64>] {
        &self.positive_j
    }

    /// All of `Phi_J`, positive roots first.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive_ambient.clone();
        out.extend(
            self.positive_ambient
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        out
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Semisimple type, e.g. `A3+2A1`.
    pub fn type_name(&self) -> String {
        let mut comps: Vec<&Component> = self.components.iter().collect();
        comps.sort_by_key(|c| (family_order(c.family), std::cmp::Reverse(c.rank), c.short));
        collapse(comps.iter().map(|c| c.type_name()).collect())
    }

    /// Rational closure test: is `v` in the rational span of `J`?
    pub fn in_rational_span(&self, v: &[i64]) -> bool {
        self.span.in_span(v)
    }

    pub fn rational_coords(&self, v: &[i64]) -> Option<Vec<Rational>> {
        self.span.solve(v)
    }

    /// Membership in `L_J`, decided with the Smith form of the `J`-matrix.
    pub fn lattice_contains(&self, v: &[i64]) -> bool {
        self.lattice.contains_i64(v)
    }

    pub fn lattice(&self) -> &IntLattice {
        &self.lattice
    }

    /// Values `beta(h1)` on positive roots for a labeling of `J`.
    fn positive_values(&self, labels: &[i64]) -> Vec<i64> {
        self.positive_j
            .iter()
            .map(|c| c.iter().zip(labels).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn component_of_root(&self, c: &[i64]) -> usize {
        let pos = c.iter().position(|&x| x != 0).expect("nonzero root");
        self.components
            .iter()
            .position(|comp| comp.members.contains(&pos))
            .expect("node belongs to a component")
    }
}

fn identify_components(rs: &RootSystem, cartan: &[Vec<i64>], norms: &[Rational]) -> Vec<Component> {
    let k = cartan.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    let long = arith::q(2);
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut idx = 0;
        while idx < members.len() {
            let a = members[idx];
            for b in 0..k {
                if !seen[b] && cartan[a][b] != 0 {
                    seen[b] = true;
                    members.push(b);
                }
            }
            idx += 1;
        }
        members.sort_unstable();
        let r = members.len();
        let mut max_bond = 0;
        let mut degree = vec![0usize; r];
        let mut adj = vec![Vec::new(); r];
        for (x, &a) in members.iter().enumerate() {
            for (y, &b) in members.iter().enumerate() {
                if a != b && cartan[a][b] != 0 {
                    max_bond = max_bond.max(cartan[a][b] * cartan[b][a]);
                    degree[x] += 1;
                    adj[x].push(y);
                }
            }
        }
        let max_norm = members.iter().map(|&a| norms[a].clone()).max().expect("nonempty");
        let short_count = members.iter().filter(|&&a| norms[a] < max_norm).count();
        let (family, short) = match max_bond {
            3 => (Family::G, false),
            2 if r == 2 => (Family::B, false),
            2 if short_count == 1 => (Family::B, false),
            2 if short_count == r - 1 => (Family::C, false),
            2 => (Family::F, false),
            _ => {
                let branch = degree.iter().position(|&d| d >= 3);
                let short = !rs.cartan_type().is_simply_laced() && max_norm < long;
                match branch {
                    None => (Family::A, short),
                    Some(b) => {
                        let mut arms: Vec<usize> = adj[b].iter().map(|&start| arm_length(&adj, b, start)).collect();
                        arms.sort_unstable();
                        match arms.as_slice() {
                            [1, 1, _] => (Family::D, false),
                            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => (Family::E, false),
                            _ => panic!("unexpected simply-laced diagram with arms {arms:?}"),
                        }
                    }
                }
            }
        };
        out.push(Component {
            members,
            family,
            rank: r,
            short,
        });
    }
    out
}

fn arm_length(adj: &[Vec<usize>], from: usize, start: usize) -> usize {
    let mut prev = from;
    let mut cur = start;
    let mut len = 1;
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [nx] => {
                prev = cur;
                cur = *nx;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Collapses sorted repeated terms: `[A2, A2, A1]` becomes `2A2+A1`.
fn collapse(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < terms.len() {
        let mut j = i;
        while j < terms.len() && terms[j] == terms[i] {
            j += 1;
        }
        let count = j - i;
        out.push(if count == 1 {
            terms[i].clone()
        } else {
            format!("{count}{}", terms[i])
        });
        i = j;
    }
    out.join("+")
}

/// Splits a Bala-Carter style name into a multiset of simple terms, so that
/// `A1+C3(a1)` and `C3(a1)+A1` compare equal and `3A2` counts three `A2`s.
pub fn name_terms(name: &str) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    let cleaned: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let cleaned = cleaned.replace("\\tilde", "~");
    let (body, primes) = match cleaned.strip_prefix('(') {
        Some(rest) => {
            let close = rest.rfind(')').unwrap_or(rest.len());
            (
                rest[..close].to_string(),
                rest[close..].trim_start_matches(')').to_string(),
            )
        }
        None => (cleaned.clone(), String::new()),
    };
    if body == "0" || body.is_empty() {
        out.insert(format!("0{primes}"), 1);
        return out;
    }
    for term in body.split('+') {
        let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
        let count = if digits.is_empty() {
            1
        } else {
            digits.parse().unwrap_or(1)
        };
        *out.entry(term[digits.len()..].to_string()).or_insert(0) += count;
    }
    if !primes.is_empty() {
        out.insert(primes, 1);
    }
    out
}

pub fn names_match(a: &str, b: &str) -> bool {
    name_terms(a) == name_terms(b)
}

/// A distinguished orbit of a simple Lie algebra, keyed by its grading profile.
#[derive(Clone, Debug)]
struct StandaloneOrbit {
    profile: Vec<i64>,
    name: String,
}

fn profile_of(values: &mut [i64]) -> Vec<i64> {
    values.sort_unstable();
    values.to_vec()
}

type StandaloneCache = Mutex<HashMap<(Family, usize), Arc<Vec<StandaloneOrbit>>>>;

fn standalone_distinguished(family: Family, rank: usize) -> Arc<Vec<StandaloneOrbit>> {
    static CACHE: OnceLock<StandaloneCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache lock").get(&(family, rank)) {
        return Arc::clone(v);
    }
    let t = CartanType::new(family, rank).expect("valid component type");
    let rs = RootSystem::new(t);
    let npos = rs.positive_roots().len();
    // (labels, profile, dimension)
    let mut found: Vec<(Vec<i64>, Vec<i64>, usize)> = Vec::new();
    for bits in 0u32..(1 << rank) {
        let labels: Vec<i64> = (0..rank).map(|i| if bits & (1 << i) != 0 { 2 } else { 0 }).collect();
        let mut values: Vec<i64> = rs
            .positive_roots()
            .iter()
            .map(|b| b.iter().zip(&labels).map(|(x, y)| x * y).sum())
            .collect();
        let zeros = values.iter().filter(|&&v| v == 0).count();
        let twos = values.iter().filter(|&&v| v == 2).count();
        if rank + 2 * zeros == twos {
            let dim = 2 * npos - 2 * zeros;
            found.push((labels, profile_of(&mut values), dim));
        }
    }
    let regular_name = t.to_string();
    let mut orbits = Vec::new();
    let nonregular: Vec<&(Vec<i64>, Vec<i64>, usize)> = found.iter().filter(|(l, _, _)| l.contains(&0)).collect();
    for entry in &found {
        let (labels, profile, dim) = entry;
        let zeros = labels.iter().filter(|&&x| x == 0).count();
        let name = if zeros == 0 {
            regular_name.clone()
        } else if family == Family::B {
            let index = 1 + nonregular.iter().filter(|(_, _, d)| d > dim).count();
            format!("{regular_name}(a{index})")
        } else {
            let tied: Vec<usize> = nonregular
                .iter()
                .filter(|(l, _, _)| l.iter().filter(|&&x| x == 0).count() == zeros)
                .map(|(_, _, d)| *d)
                .collect();
            assert!(
                tied.len() <= 2,
                "more than two distinguished orbits share a label count"
            );
            let letter = if tied.iter().any(|d| d > dim) { 'b' } else { 'a' };
            format!("{regular_name}({letter}{zeros})")
        };
        orbits.push(StandaloneOrbit {
            profile: profile.clone(),
            name,
        });
    }
    let arc = Arc::new(orbits);
    cache
        .lock()
        .expect("cache lock")
        .insert((family, rank), Arc::clone(&arc));
    arc
}

/// A `{0,2}`-labeling of `J` that is distinguished in `g_J`, with its `h1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishedLabeling {
    pub labels: Vec<i64>,
    pub h1: Coweight,
    /// Bala-Carter style name of `(Phi_J, e1)`, e.g. `A3+2A1` or `D4(a1)`.
    pub name: String,
}

/// Solves for `h1` in the span of the coroots of `J` with prescribed values on `J`.
pub fn solve_h1(rs: &RootSystem, sub: &Subsystem, labels: &[i64]) -> Result<Coweight> {
    let k = sub.rank();
    let n = rs.rank();
    if labels.len() != k {
        return Err(Error::RankMismatch {
            expected: k,
            got: labels.len(),
        });
    }
    if k == 0 {
        return Ok(Coweight::zero(n));
    }
    let cq: Vec<Vec<Rational>> = sub.cartan.iter().map(|r| arith::qvec(r)).collect();
    let inv = arith::inverse(&cq).ok_or_else(|| Error::Invariant("singular J Cartan matrix".into()))?;
    let x = arith::mat_vec(&inv, &arith::qvec(labels));
    let mut h = vec![Rational::from_integer(BigInt::from(0)); n];
    for (xb, v) in x.iter().zip(&sub.vectors) {
        let cv = rs.coroot(v);
        for (hi, ci) in h.iter_mut().zip(&cv.coords) {
            *hi += xb * ci;
        }
    }
    Ok(Coweight::new(h))
}

fn distinguished_name(sub: &Subsystem, labels: &[i64]) -> String {
    let values = sub.positive_values(labels);
    let mut per_comp: Vec<Vec<i64>> = vec![Vec::new(); sub.components.len()];
    for (c, v) in sub.positive_j.iter().zip(&values) {
        per_comp[sub.component_of_root(c)].push(*v);
    }
    let mut terms: Vec<(usize, usize, bool, String)> = Vec::new();
    for (comp, vals) in sub.components.iter().zip(per_comp.iter_mut()) {
        let profile = profile_of(vals);
        let table = standalone_distinguished(comp.family, comp.rank);
        let name = table
            .iter()
            .find(|o| o.profile == profile)
            .map(|o| o.name.clone())
            .expect("component labeling is a distinguished orbit");
        let name = if comp.short { format!("~{name}") } else { name };
        terms.push((family_order(comp.family), comp.rank, comp.short, name));
    }
    terms.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then(b.1.cmp(&a.1))
            .then(a.2.cmp(&b.2))
            .then(a.3.len().cmp(&b.3.len()))
            .then(a.3.cmp(&b.3))
    });
    collapse(terms.into_iter().map(|t| t.3).collect())
}

fn is_distinguished(sub: &Subsystem, labels: &[i64]) -> bool {
    let values = sub.positive_values(labels);
    let mut zeros = vec![0usize; sub.components.len()];
    let mut twos = vec![0usize; sub.components.len()];
    for (c, v) in sub.positive_j.iter().zip(&values) {
        let k = sub.component_of_root(c);
        match v {
            0 => zeros[k] += 1,
            2 => twos[k] += 1,
            _ => {}
        }
    }
    sub.components
        .iter()
        .enumerate()
        .all(|(k, comp)| comp.rank + 2 * zeros[k] == twos[k])
}

/// All proper subsets of `Pi~` (or subsets of `Pi`), sorted by node set.
pub fn enumerate_subsystems(rs: &RootSystem, include_affine: bool) -> Vec<Subsystem> {
    let n = rs.rank();
    let limit: u32 = if include_affine { 1 << (n + 1) } else { 1 << n };
    let full = (1u32 << (n + 1)) - 1;
    let mut masks: Vec<u32> = (0..limit).filter(|&m| m != full).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks
        .into_iter()
        .map(|m| Subsystem::new(rs, ExtendedSubset::from_mask(n, m).expect("proper")))
        .collect()
}

/// All distinguished `{0,2}`-labelings of a subsystem.
pub fn enumerate_distinguished(rs: &RootSystem, sub: &Subsystem) -> Vec<DistinguishedLabeling> {
    let k = sub.rank();
    let mut out = Vec::new();
    for bits in 0u32..(1 << k) {
        let labels: Vec<i64> = (0..k).map(|i| if bits & (1 << i) != 0 { 2 } else { 0 }).collect();
        if !is_distinguished(sub, &labels) {
            continue;
        }
        let h1 = solve_h1(rs, sub, &labels).expect("independent J");
        out.push(DistinguishedLabeling {
            name: distinguished_name(sub, &labels),
            labels,
            h1,
        });
    }
    out
}

/// Integer node values `alpha_i(h)` of a coweight whose values are integral.
pub fn node_values(rs: &RootSystem, h: &Coweight) -> Vec<i64> {
    rs.node_values(h)
        .iter()
        .map(|v| arith::to_i64(v).expect("integral node value"))
        .collect()
}

/// `(d_J, tau_J)` for the adjoint lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionData {
    pub subset: ExtendedSubset,
    pub d: i64,
    /// `tau_J` in simple-root coordinates
    pub tau: Vec<i64>,
}

impl TorsionData {
    pub fn tau_weight(&self) -> Weight {
        Weight::root_ints(&self.tau)
    }
}

pub fn torsion_data(rs: &RootSystem, subset: ExtendedSubset) -> TorsionData {
    let marks = rs.marks();
    let missing = subset.missing();
    let d = missing.iter().fold(0i64, |g, &i| arith::gcd_i64(g, marks[i]));
    let n = rs.rank();
    let mut tau = vec![0i64; n];
    for &i in &missing {
        let v = rs.extended_node_vector(i);
        for (t, x) in tau.iter_mut().zip(v) {
            *t += marks[i] * x;
        }
    }
    for t in tau.iter_mut() {
        assert_eq!(*t % d, 0, "d_J divides every mark outside J");
        *t /= d;
    }
    TorsionData { subset, d, tau }
}

/// A nilpotent orbit, identified by its weighted Dynkin diagram.
#[derive(Clone, Debug, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub cartan_type: CartanType,
    pub diagram: Vec<i64>,
    pub name: String,
    pub dimension: usize,
    pub levi_nodes: Vec<usize>,
}

impl PartialEq for OrbitRecord {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type && self.diagram == other.diagram
    }
}

impl std::hash::Hash for OrbitRecord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cartan_type.hash(state);
        self.diagram.hash(state);
    }
}

impl OrbitRecord {
    pub fn from_diagram(rs: &RootSystem, diagram: Vec<i64>, name: String) -> Self {
        let dimension = orbit_dimension(rs, &diagram);
        let levi_nodes = diagram
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == 0)
            .map(|(i, _)| i)
            .collect();
        Self {
            cartan_type: rs.cartan_type(),
            diagram,
            name,
            dimension,
            levi_nodes,
        }
    }

    /// The dominant Dynkin element `h`.
    pub fn dynkin_element(&self, rs: &RootSystem) -> Coweight {
        rs.coweight_from_labels(&self.diagram)
    }

    pub fn is_zero(&self) -> bool {
        self.diagram.iter().all(|&l| l == 0)
    }

    pub fn nonzero_nodes(&self) -> Vec<usize> {
        (0..self.diagram.len()).filter(|&i| self.diagram[i] != 0).collect()
    }
}

pub fn orbit_dimension(rs: &RootSystem, diagram: &[i64]) -> usize {
    // dim g - dim g_0 - dim g_1, counted on roots
    let mut zero = 0;
    let mut one = 0;
    for beta in rs.positive_roots() {
        match beta.iter().zip(diagram).map(|(a, b)| a * b).sum::<i64>() {
            0 => zero += 1,
            1 => one += 1,
            _ => {}
        }
    }
    rs.num_roots() - 2 * zero - one
}

/// A class parameter: a pseudo-Levi subsystem with a distinguished
/// labeling, the word `w` with `w(h1) = h`, and its torsion data.
#[derive(Clone, Debug)]
pub struct PseudoLeviPair {
    pub subsystem: Arc<Subsystem>,
    pub labeling: DistinguishedLabeling,
    pub word: WeylWord,
    pub diagram: Vec<i64>,
    pub torsion: TorsionData,
    /// `J` lies inside `Pi`, so the pair represents the identity class
    pub trivial: bool,
    /// class name; the orbit name for trivial pairs
    pub name: String,
}

impl PseudoLeviPair {
    pub fn subset(&self) -> ExtendedSubset {
        self.subsystem.subset()
    }
}

/// Computes the dominant form of `h1` and the word that reaches it.
pub fn orbit_of(rs: &RootSystem, dl: &DistinguishedLabeling) -> (OrbitRecord, WeylWord) {
    let mut values = node_values(rs, &dl.h1);
    let w = rs.dominate_values(&mut values);
    let name = lookup_name(rs.cartan_type(), &values).unwrap_or_else(|| diagram_string(&values));
    (OrbitRecord::from_diagram(rs, values, name), w)
}

pub fn diagram_string(labels: &[i64]) -> String {
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("")
}

fn name_table() -> &'static HashMap<(CartanType, Vec<i64>), String> {
    static TABLE: OnceLock<HashMap<(CartanType, Vec<i64>), String>> = OnceLock::new();
    TABLE.get_or_init(|| parse_name_table(NAME_TABLE).expect("embedded name table parses"))
}

/// Parses `type<TAB>labels<TAB>name` records; `#` starts a comment.
pub fn parse_name_table(text: &str) -> Result<HashMap<(CartanType, Vec<i64>), String>> {
    let mut out = HashMap::new();
    for line in text.lines() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                what: "name table record",
                input: line.to_string(),
            });
        }
        let t: CartanType = fields[0].parse()?;
        let labels = crate::rootdata::parse_int_list(fields[1])?;
        if labels.len() != t.rank() {
            return Err(Error::RankMismatch {
                expected: t.rank(),
                got: labels.len(),
            });
        }
        out.insert((t, labels), fields[2].to_string());
    }
    Ok(out)
}

/// Name from the embedded table (exceptional types only).
pub fn lookup_name(t: CartanType, diagram: &[i64]) -> Option<String> {
    name_table().get(&(t, diagram.to_vec())).cloned()
}

/// Everything the lifting algorithm needs about one root system:
/// all subsystems, all distinguished pairs, and the orbit catalog.
#[derive(Debug)]
pub struct Atlas {
    rs: RootSystem,
    pairs: Vec<PseudoLeviPair>,
    orbits: Vec<OrbitRecord>,
    generated_names: HashMap<Vec<i64>, String>,
}

impl Atlas {
    /// Shared, lazily built atlas for a type.
    pub fn get(t: CartanType) -> Arc<Atlas> {
        static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<Atlas>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(a) = cache.lock().expect("atlas cache").get(&t) {
            return Arc::clone(a);
        }
        let atlas = Arc::new(Atlas::build(t));
        cache.lock().expect("atlas cache").entry(t).or_insert(atlas).clone()
    }

    pub fn build(t: CartanType) -> Atlas {
        let rs = RootSystem::new(t);
        let n = rs.rank();
        let mut pairs = Vec::new();
        for sub in enumerate_subsystems(&rs, true) {
            let sub = Arc::new(sub);
            let torsion = torsion_data(&rs, sub.subset());
            let trivial = !sub.subset().includes_affine();
            for dl in enumerate_distinguished(&rs, &sub) {
                let mut values = node_values(&rs, &dl.h1);
                let word = rs.dominate_values(&mut values);
                pairs.push(PseudoLeviPair {
                    subsystem: Arc::clone(&sub),
                    name: dl.name.clone(),
                    labeling: dl,
                    word,
                    diagram: values,
                    torsion: torsion.clone(),
                    trivial,
                });
            }
        }

        // orbits from the Levi pairs
        let mut raw: BTreeMap<Vec<i64>, String> = BTreeMap::new();
        for p in pairs.iter().filter(|p| p.trivial) {
            match raw.get(&p.diagram) {
                Some(existing) => assert!(
                    names_match(existing, &p.name),
                    "Levi pairs {existing} and {} share a diagram",
                    p.name
                ),
                None => {
                    raw.insert(p.diagram.clone(), p.name.clone());
                }
            }
        }
        let mut by_name: BTreeMap<String, Vec<(usize, Vec<i64>)>> = BTreeMap::new();
        for (diagram, name) in &raw {
            by_name
                .entry(name.clone())
                .or_default()
                .push((orbit_dimension(&rs, diagram), diagram.clone()));
        }
        let mut generated_names = HashMap::new();
        for (name, mut group) in by_name {
            group.sort();
            if group.len() == 1 {
                generated_names.insert(group[0].1.clone(), name);
            } else if group.len() == 2 && group[0].0 != group[1].0 {
                generated_names.insert(group[0].1.clone(), format!("({name})''"));
                generated_names.insert(group[1].1.clone(), format!("({name})'"));
            } else {
                // several orbits of one dimension, as for triality in D4
                for (i, (_, diagram)) in group.iter().enumerate() {
                    generated_names.insert(diagram.clone(), format!("({name}){}", "'".repeat(i + 1)));
                }
            }
        }
        let mut orbits: Vec<OrbitRecord> = raw
            .keys()
            .map(|diagram| {
                let name = if t.is_exceptional() {
                    lookup_name(t, diagram).unwrap_or_else(|| generated_names[diagram].clone())
                } else {
                    generated_names[diagram].clone()
                };
                OrbitRecord::from_diagram(&rs, diagram.clone(), name)
            })
            .collect();
        orbits.sort_by(|a, b| a.dimension.cmp(&b.dimension).then(a.diagram.cmp(&b.diagram)));

        // a pair with trivial torsion is conjugate to a Levi pair
        for p in pairs.iter_mut().filter(|p| p.trivial || p.torsion.d == 1) {
            let o = orbits.iter().find(|o| o.diagram == p.diagram).expect("orbit");
            p.name = o.name.clone();
        }
        debug_assert!(pairs.iter().all(|p| p.diagram.len() == n));
        Atlas {
            rs,
            pairs,
            orbits,
            generated_names,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    pub fn orbits(&self) -> &[OrbitRecord] {
        &self.orbits
    }

    pub fn pairs(&self) -> &[PseudoLeviPair] {
        &self.pairs
    }

    /// Name produced by the Bala-Carter naming rules, ignoring the table.
    pub fn generated_name(&self, diagram: &[i64]) -> Option<&str> {
        self.generated_names.get(diagram).map(String::as_str)
    }

    pub fn orbit_by_diagram(&self, diagram: &[i64]) -> Option<&OrbitRecord> {
        self.orbits.iter().find(|o| o.diagram == diagram)
    }

    /// Resolves an orbit by name (component order-insensitive) or by a
    /// diagram string such as `0,0,0,2,0,0`.
    pub fn orbit(&self, key: &str) -> Result<&OrbitRecord> {
        if let Some(o) = self.orbits.iter().find(|o| o.name == key) {
            return Ok(o);
        }
        let matches: Vec<&OrbitRecord> = self.orbits.iter().filter(|o| names_match(&o.name, key)).collect();
        if matches.len() == 1 {
            return Ok(matches[0]);
        }
        if let Ok(labels) = crate::rootdata::parse_int_list(key) {
            if let Some(o) = self.orbit_by_diagram(&labels) {
                return Ok(o);
            }
        }
        let compact: Vec<i64> = key.chars().filter_map(|c| c.to_digit(10).map(i64::from)).collect();
        if compact.len() == self.rs.rank() && key.chars().all(|c| c.is_ascii_digit()) {
            if let Some(o) = self.orbit_by_diagram(&compact) {
                return Ok(o);
            }
        }
        Err(Error::UnknownOrbit(key.to_string()))
    }

    /// All class parameters whose dominant Dynkin element is the orbit's.
    pub fn class_parameters(&self, orbit: &OrbitRecord) -> Vec<&PseudoLeviPair> {
        self.pairs.iter().filter(|p| p.diagram == orbit.diagram).collect()
    }

    /// The Bala-Carter pair (`J` inside `Pi`) of smallest node set.
    pub fn bala_carter_pair(&self, orbit: &OrbitRecord) -> &PseudoLeviPair {
        self.pairs
            .iter()
            .find(|p| p.trivial && p.diagram == orbit.diagram)
            .expect("every orbit has a Levi pair")
    }
}

/// The deduplicated orbit list for a type.
pub fn orbit_catalog(t: CartanType) -> Vec<OrbitRecord> {
    Atlas::get(t).orbits().to_vec()
}

/// Renders the generated name table for a type in the embedded file format.
pub fn name_table_records(t: CartanType) -> Vec<String> {
    let atlas = Atlas::get(t);
    atlas
        .orbits()
        .iter()
        .map(|o| {
            let labels: Vec<String> = o.diagram.iter().map(|l| l.to_string()).collect();
            format!(
                "{}\t{}\t{}",
                t,
                labels.join(" "),
                atlas.generated_name(&o.diagram).expect("generated")
            )
        })
        .collect()
}
