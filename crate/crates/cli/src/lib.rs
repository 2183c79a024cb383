//! Output records and command implementations for the `localsys` binary.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use localsys::arith::Rational;
use localsys::balacarter::Atlas;
use localsys::classical::{self, ComponentBasis, PartitionOrbit, SpinReport, VeryEven};
use localsys::goldens::{self, RowResult, VerifyReport};
use localsys::lifting::{self, CharacterVector, Lattice, LeviWeight, SimplyConnectedReport};
use localsys::rootdata::{format_diagram, format_weight, parse_weight, CartanType, Family, Weight};
use localsys::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub name: String,
    pub diagram: Vec<i64>,
    pub layout: String,
    pub dimension: usize,
    /// number of distinct class names among the class parameters
    pub classes: usize,
    pub class_names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitListing {
    pub group: String,
    pub orbits: Vec<OrbitRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftResult {
    pub group: String,
    pub orbit: String,
    pub diagram: Vec<i64>,
    pub layout: String,
    pub weight: Vec<i64>,
    pub weight_label: String,
    pub lattice: Lattice,
    pub in_root_lattice: bool,
    pub descends: bool,
    /// size of the Levi Weyl group orbit of the weight
    pub levi_orbit: usize,
    pub character: Option<CharacterVector>,
    pub identified: Option<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalLiftResult {
    pub group: String,
    pub orbit: String,
    pub target_weight: Vec<i64>,
    pub bound: Rational,
    pub found: Vec<i64>,
    pub found_label: String,
    pub norm: Rational,
    pub character: CharacterVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalLift {
    /// a subset of `B~`, 1-based
    pub subset: Vec<usize>,
    pub weight: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalResult {
    pub group: String,
    pub partition: PartitionOrbit,
    pub diagram: Vec<i64>,
    pub basis: ComponentBasis,
    pub chis: Vec<classical::ChiWeight>,
    pub lifts: Vec<ClassicalLift>,
    pub spin: SpinReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeAResult {
    pub group: String,
    pub parts: Vec<usize>,
    pub diagram: Vec<i64>,
    pub d: usize,
    pub q: usize,
    /// `w_{jq}` for `0 <= j < d`
    pub weights: Vec<Vec<i64>>,
    /// shortest descending weight in the class of each `w_{jq}`
    pub lifts: Vec<Vec<i64>>,
    /// exponents of a primitive d-th root of unity on the generator powers
    pub exponents: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesResult {
    pub group: String,
    pub rows: Vec<RowResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportResult {
    pub group: String,
    pub reports: Vec<SimplyConnectedReport>,
}

/// Every structured result the binary can emit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Output {
    Orbits(OrbitListing),
    Lift(LiftResult),
    MinimalLift(MinimalLiftResult),
    Classical(ClassicalResult),
    TypeA(TypeAResult),
    Verify(VerifyReport),
    Tables(TablesResult),
    Report(ReportResult),
}

pub fn parse_group(s: &str) -> Result<CartanType> {
    s.parse()
}

pub fn orbits(t: CartanType) -> OrbitListing {
    let atlas = Atlas::get(t);
    let orbits = atlas
        .orbits()
        .iter()
        .map(|o| {
            let names: BTreeSet<String> = atlas.class_parameters(o).iter().map(|p| p.name.clone()).collect();
            OrbitRow {
                name: o.name.clone(),
                diagram: o.diagram.clone(),
                layout: format_diagram(t, &o.diagram),
                dimension: o.dimension,
                classes: names.len(),
                class_names: names.into_iter().collect(),
            }
        })
        .collect();
    OrbitListing {
        group: t.to_string(),
        orbits,
    }
}

/// Name of a golden representation with the same character, if any.
fn identify(t: CartanType, cv: &CharacterVector) -> Option<String> {
    if cv.classes.iter().all(|c| c.value() == Some(1)) {
        return Some("trivial".into());
    }
    let atlas = Atlas::get(t);
    goldens::golden_rows()
        .into_iter()
        .filter(|r| r.group == t && localsys::balacarter::names_match(&r.orbit, &cv.orbit))
        .find_map(|r| {
            let orbit = atlas.orbit(&r.orbit).ok()?;
            let lw = LeviWeight::new(atlas.root_system(), orbit, r.weight.clone()).ok()?;
            let other = lifting::identify_representation(&atlas, &lw).ok()?;
            (other.matches(cv) && cv.matches(&other)).then(|| format!("{} ({} {})", r.rep_label, r.group_type, r.orbit))
        })
}

pub fn lift(t: CartanType, orbit: &str, weight: &str, lattice: Lattice) -> Result<LiftResult> {
    let atlas = Atlas::get(t);
    let rs = atlas.root_system();
    let o = atlas.orbit(orbit)?;
    let lambda = parse_weight(weight, rs.rank())?;
    let lw = LeviWeight::new(rs, o, lambda)?;
    let in_root_lattice = rs.in_root_lattice(&Weight::fundamental_ints(&lw.lambda));
    let descends = lifting::descends(rs, &lw, atlas.bala_carter_pair(o))?;
    let (character, note) = if !descends {
        (None, None)
    } else if !in_root_lattice {
        let note = match lattice {
            Lattice::Adjoint => "the weight is not a character of the adjoint group",
            Lattice::SimplyConnected => {
                "descends to the simply-connected component group; traces are computed for the adjoint group only"
            }
        };
        (None, Some(note.to_string()))
    } else {
        (Some(lifting::identify_representation(&atlas, &lw)?), None)
    };
    let identified = character.as_ref().and_then(|cv| identify(t, cv));
    Ok(LiftResult {
        group: t.to_string(),
        orbit: o.name.clone(),
        diagram: o.diagram.clone(),
        layout: format_diagram(t, &o.diagram),
        weight_label: lw.label(),
        levi_orbit: lifting::weight_orbit(rs, &lw).len(),
        weight: lw.lambda,
        lattice,
        in_root_lattice,
        descends,
        character,
        identified,
        note,
    })
}

pub fn minimal_lift(t: CartanType, orbit: &str, weight: &str, bound: Option<Rational>) -> Result<MinimalLiftResult> {
    let atlas = Atlas::get(t);
    let rs = atlas.root_system();
    let o = atlas.orbit(orbit)?;
    let lambda = parse_weight(weight, rs.rank())?;
    let lw = LeviWeight::new(rs, o, lambda)?;
    let target = lifting::identify_representation(&atlas, &lw)?;
    let bound = match bound {
        Some(b) => b,
        None => rs.norm(&Weight::fundamental_ints(&lw.lambda))?,
    };
    let found = lifting::minimal_lift_search(&atlas, o, &target, &bound)?;
    let norm = rs.norm(&Weight::fundamental_ints(&found.lambda))?;
    let character = lifting::identify_representation(&atlas, &found)?;
    Ok(MinimalLiftResult {
        group: t.to_string(),
        orbit: o.name.clone(),
        target_weight: lw.lambda,
        bound,
        found_label: found.label(),
        found: found.lambda,
        norm,
        character,
    })
}

pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                what: "partition",
                input: s.to_string(),
            })
        })
        .collect()
}

pub fn classical_orbit(epsilon: u8, parts: &[usize], variant: VeryEven) -> Result<ClassicalResult> {
    let po = PartitionOrbit::new(epsilon, parts)?.with_variant(variant);
    let basis = classical::component_basis(&po)?;
    let record = classical::partition_to_dynkin(&po)?;
    let chis = classical::chi_weights(&po)?;
    let k = basis.b_tilde.len();
    let lifts = (0..1u32 << k)
        .map(|mask| {
            let subset: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| basis.b_tilde[i])
                .collect();
            let weight = classical::lift_character(&po, &subset)?;
            Ok(ClassicalLift { subset, weight })
        })
        .collect::<Result<_>>()?;
    let spin = classical::spin_representations(&po)?;
    Ok(ClassicalResult {
        group: po.cartan_type()?.to_string(),
        diagram: record.diagram,
        partition: po,
        basis,
        chis,
        lifts,
        spin,
    })
}

pub fn type_a(parts: &[usize]) -> Result<TypeAResult> {
    let lifts = classical::type_a_lifts(parts)?;
    let descending = classical::type_a_descending_lifts(parts)?.weights;
    let record = classical::type_a_dynkin(parts)?;
    let exponents = (0..lifts.d)
        .map(|j| {
            (0..lifts.d)
                .map(|t| classical::central_exponent(&lifts, j * lifts.q, t))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(TypeAResult {
        group: CartanType::new(Family::A, lifts.l - 1)?.to_string(),
        parts: sorted,
        diagram: record.diagram,
        d: lifts.d,
        q: lifts.q,
        weights: lifts.weights,
        lifts: descending,
        exponents,
    })
}

pub fn tables(t: CartanType) -> TablesResult {
    TablesResult {
        group: t.to_string(),
        rows: goldens::tables(t),
    }
}

pub fn report(t: CartanType, orbit: Option<&str>) -> Result<ReportResult> {
    let atlas = Atlas::get(t);
    let orbits = match orbit {
        Some(key) => vec![atlas.orbit(key)?.clone()],
        None => atlas.orbits().to_vec(),
    };
    let reports = orbits
        .iter()
        .map(|o| lifting::simply_connected_report(&atlas, o))
        .collect::<Result<_>>()?;
    Ok(ReportResult {
        group: t.to_string(),
        reports,
    })
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn traces_cell(cv: &CharacterVector) -> String {
    cv.classes
        .iter()
        .map(|c| format!("{}:{}", c.class, c.trace))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Output {
    /// Header and rows for CSV output.
    pub fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        match self {
            Output::Orbits(l) => (
                vec!["group", "orbit", "diagram", "dimension", "classes"],
                l.orbits
                    .iter()
                    .map(|o| {
                        vec![
                            l.group.clone(),
                            o.name.clone(),
                            o.layout.clone(),
                            o.dimension.to_string(),
                            o.classes.to_string(),
                        ]
                    })
                    .collect(),
            ),
            Output::Lift(r) => {
                let mut rows = vec![];
                match &r.character {
                    Some(cv) => {
                        for c in &cv.classes {
                            rows.push(vec![
                                r.group.clone(),
                                r.orbit.clone(),
                                r.weight_label.clone(),
                                r.descends.to_string(),
                                c.class.clone(),
                                c.trace.to_string(),
                                c.subset.clone(),
                                c.word.clone(),
                            ]);
                        }
                    }
                    None => rows.push(vec![
                        r.group.clone(),
                        r.orbit.clone(),
                        r.weight_label.clone(),
                        r.descends.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]),
                }
                (
                    vec![
                        "group", "orbit", "weight", "descends", "class", "trace", "subset", "word",
                    ],
                    rows,
                )
            }
            Output::MinimalLift(m) => (
                vec!["group", "orbit", "target", "found", "norm", "traces"],
                vec![vec![
                    m.group.clone(),
                    m.orbit.clone(),
                    format_weight(&m.target_weight),
                    m.found_label.clone(),
                    m.norm.to_string(),
                    traces_cell(&m.character),
                ]],
            ),
            Output::Classical(c) => (
                vec!["group", "partition", "subset", "weight"],
                c.lifts
                    .iter()
                    .map(|l| {
                        vec![
                            c.group.clone(),
                            c.partition.to_string(),
                            format!("{{{}}}", join(&l.subset, ",")),
                            format_weight(&l.weight),
                        ]
                    })
                    .chain(c.spin.reps.iter().map(|s| {
                        vec![
                            c.group.clone(),
                            c.partition.to_string(),
                            format!("spin dim {}", s.dimension),
                            format_weight(&s.minimal),
                        ]
                    }))
                    .collect(),
            ),
            Output::TypeA(a) => (
                vec!["group", "partition", "weight", "lift", "exponents"],
                a.weights
                    .iter()
                    .zip(&a.lifts)
                    .zip(&a.exponents)
                    .map(|((w, l), e)| {
                        vec![
                            a.group.clone(),
                            format!("[{}]", join(&a.parts, ",")),
                            format_weight(w),
                            format_weight(l),
                            join(e, " "),
                        ]
                    })
                    .collect(),
            ),
            Output::Verify(v) => (
                vec!["group", "orbit", "type", "rep", "weight", "passed", "detail"],
                v.rows
                    .iter()
                    .map(golden_cells)
                    .chain(v.examples.iter().map(|e| {
                        vec![
                            "E6".into(),
                            "D4(a1)".into(),
                            "example".into(),
                            e.name.clone(),
                            "w2".into(),
                            e.passed.to_string(),
                            e.detail.clone(),
                        ]
                    }))
                    .collect(),
            ),
            Output::Tables(t) => (
                vec!["group", "orbit", "type", "rep", "weight", "passed", "traces"],
                t.rows
                    .iter()
                    .map(|r| {
                        let mut cells = golden_cells(r);
                        cells[6] = r.computed.as_ref().map(traces_cell).unwrap_or_default();
                        cells
                    })
                    .collect(),
            ),
            Output::Report(r) => (
                vec![
                    "group",
                    "orbit",
                    "node",
                    "descends",
                    "root_lattice",
                    "multiple",
                    "multiple_trivial",
                ],
                r.reports
                    .iter()
                    .flat_map(|rep| {
                        rep.nodes.iter().map(move |n| {
                            vec![
                                r.group.clone(),
                                rep.orbit.clone(),
                                n.node.to_string(),
                                n.descends.to_string(),
                                n.in_root_lattice.to_string(),
                                n.multiple.map(|k| k.to_string()).unwrap_or_default(),
                                n.multiple_trivial.map(|k| k.to_string()).unwrap_or_default(),
                            ]
                        })
                    })
                    .collect(),
            ),
        }
    }

    /// Human-readable rendering.
    pub fn text(&self) -> String {
        match self {
            Output::Lift(r) => {
                let mut s = format!(
                    "{} orbit {} [{}], weight {}\n",
                    r.group, r.orbit, r.layout, r.weight_label
                );
                s += &format!("descends: {}\n", if r.descends { "yes" } else { "no" });
                if let Some(cv) = &r.character {
                    s += &format!("dimension: {}\n", cv.dimension);
                    for c in &cv.classes {
                        s += &format!(
                            "  {:<16} {:>6}   J = {}  w = {}\n",
                            c.class,
                            c.trace.to_string(),
                            c.subset,
                            c.word
                        );
                    }
                }
                if let Some(id) = &r.identified {
                    s += &format!("identified: {id}\n");
                }
                if let Some(n) = &r.note {
                    s += &format!("note: {n}\n");
                }
                s
            }
            Output::Classical(c) => {
                let mut s = format!(
                    "{} partition {} diagram {}\n",
                    c.group,
                    c.partition,
                    join(&c.diagram, " ")
                );
                s += &format!(
                    "B = {{{}}}  B~ = {{{}}}  |A(e)| = {}\n",
                    join(&c.basis.b, ","),
                    join(&c.basis.b_tilde, ","),
                    c.basis.order()
                );
                for chi in &c.chis {
                    s += &format!(
                        "  chi_{} = {}  (sigma {}, d {}{})\n",
                        chi.s,
                        format_weight(&chi.weight),
                        chi.sigma,
                        chi.d,
                        if chi.in_xi { "" } else { ", outside Xi" }
                    );
                }
                for l in &c.lifts {
                    s += &format!("  S = {{{}}}: {}\n", join(&l.subset, ","), format_weight(&l.weight));
                }
                for r in &c.spin.reps {
                    s += &format!(
                        "  spin: {} (minimal {}), dimension {}\n",
                        format_weight(&r.weight),
                        format_weight(&r.minimal),
                        r.dimension
                    );
                }
                if let Some(reason) = &c.spin.reason {
                    s += &format!("  spin: none, {reason}\n");
                }
                s
            }
            Output::Verify(v) => {
                let mut s = String::new();
                for r in &v.rows {
                    s += &format!(
                        "{} {:<4} {:<12} {:<3} {:<9} {:<12} {}\n",
                        if r.passed { "ok  " } else { "FAIL" },
                        r.row.group.to_string(),
                        r.row.orbit,
                        r.row.group_type.to_string(),
                        r.row.rep_label,
                        format_weight(&r.row.weight),
                        r.detail
                    );
                }
                for e in &v.examples {
                    s += &format!("{} {}: {}\n", if e.passed { "ok  " } else { "FAIL" }, e.name, e.detail);
                }
                let passed = v.rows.iter().filter(|r| r.passed).count();
                s += &format!(
                    "{passed} of {} golden rows passed, {} failures\n",
                    v.rows.len(),
                    v.failures()
                );
                s
            }
            _ => {
                let (header, rows) = self.table();
                render_columns(&header, &rows)
            }
        }
    }
}

fn golden_cells(r: &RowResult) -> Vec<String> {
    vec![
        r.row.group.to_string(),
        r.row.orbit.clone(),
        r.row.group_type.to_string(),
        r.row.rep_label.clone(),
        format_weight(&r.row.weight),
        r.passed.to_string(),
        r.detail.clone(),
    ]
}

/// Left-aligned columns separated by two spaces.
pub fn render_columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        s += &line(r.clone());
    }
    s
}
