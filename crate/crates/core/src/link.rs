//! Drawing-level conditions for `G + K̄2` to avoid nonsplit links of each
//! homology type, and the structure of drawings meeting them.
//!
//! `G` is drawn in the projective plane and the two extra vertices sit
//! above and below it, so every link question reduces to a question about
//! the signed drawing of `G`.

use std::fmt;

use crate::canon::subgraph_monomorphism;
use crate::embedding::{
    separating_0hom_cycle, separating_0hom_cycle_in, separating_1hom_cycle, EmbCycle, Rp2Embedding,
    DEFAULT_CYCLE_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::minors::{is_outerplanar, is_planar};
use crate::named;

/// Shape of the set of negative edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// Every negative edge meets `v0`. An empty set counts, with `v0 = 0`.
    Star(usize),
    /// Exactly three negative edges forming the triangle `v0 v1 v2`.
    Triangle(usize, usize, usize),
    Neither,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Star(v) => write!(f, "star({v})"),
            Case::Triangle(a, b, c) => write!(f, "triangle({a},{b},{c})"),
            Case::Neither => write!(f, "neither"),
        }
    }
}

pub fn classify_case(emb: &Rp2Embedding) -> Case {
    let neg = emb.one_homologous_edges();
    if neg.is_empty() {
        return Case::Star(0);
    }
    let common = neg.iter().fold(emb.graph().full_mask(), |m, &(u, v)| m & (1 << u | 1 << v));
    if common != 0 {
        return Case::Star(common.trailing_zeros() as usize);
    }
    if neg.len() == 3 && disjoint_pair(&neg).is_none() {
        let mut t: Vec<usize> = neg.iter().flat_map(|&(u, v)| [u, v]).collect();
        t.sort_unstable();
        t.dedup();
        return Case::Triangle(t[0], t[1], t[2]);
    }
    Case::Neither
}

fn disjoint_pair(edges: &[Edge]) -> Option<(Edge, Edge)> {
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a != c && a != d && b != c && b != d {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

/// Two negative edges without a common vertex, if any.
pub fn disjoint_negative_pair(emb: &Rp2Embedding) -> Option<(Edge, Edge)> {
    disjoint_pair(&emb.one_homologous_edges())
}

/// No link of two 0-homologous cycles: the drawing is nonseparating. The
/// witness is a separating 0-homologous cycle.
pub fn no_link_00(emb: &Rp2Embedding) -> Result<(bool, Option<EmbCycle>)> {
    let w = separating_0hom_cycle(emb, DEFAULT_CYCLE_CAP)?;
    Ok((w.is_none(), w))
}

/// No link of a 0-homologous and a 1-homologous cycle. Only defined for
/// nonseparating drawings; the witness is a separating 1-homologous cycle.
pub fn no_link_01(emb: &Rp2Embedding) -> Result<(bool, Option<EmbCycle>)> {
    if separating_0hom_cycle(emb, DEFAULT_CYCLE_CAP)?.is_some() {
        return Err(Error::PreconditionViolated("no_link_01 needs a nonseparating drawing"));
    }
    let w = separating_1hom_cycle(emb, DEFAULT_CYCLE_CAP)?;
    Ok((w.is_none(), w))
}

/// No link of two 1-homologous cycles: every two negative edges meet.
pub fn no_link_11(emb: &Rp2Embedding) -> (bool, Option<(Edge, Edge)>) {
    let w = disjoint_negative_pair(emb);
    debug_assert_eq!(w.is_none(), classify_case(emb) != Case::Neither);
    (w.is_none(), w)
}

fn nonseparating_without(emb: &Rp2Embedding, removed: &[Edge]) -> Result<bool> {
    let mut sub = emb.graph().clone();
    for &e in removed {
        sub = sub.delete_edge(e)?;
    }
    Ok(separating_0hom_cycle_in(emb, &sub, DEFAULT_CYCLE_CAP)?.is_none())
}

/// Star case: with `V0` the positive and `V1` the negative edges at `v0`,
/// both `G − V0` and `G − V1` are drawn without a separating cycle.
pub fn case1_no_link_00(emb: &Rp2Embedding) -> Result<bool> {
    let Case::Star(v0) = classify_case(emb) else {
        return Err(Error::CaseMismatch("star"));
    };
    let (pos, neg): (Vec<Edge>, Vec<Edge>) = emb
        .graph()
        .neighbors(v0)
        .map(|w| crate::graph::edge(v0, w))
        .partition(|&(a, b)| emb.signature(a, b) > 0);
    Ok(nonseparating_without(emb, &pos)? && nonseparating_without(emb, &neg)?)
}

/// Triangle case: deleting any one of the three negative edges leaves a
/// drawing without a separating cycle.
pub fn case2_no_link_00(emb: &Rp2Embedding) -> Result<bool> {
    let Case::Triangle(a, b, c) = classify_case(emb) else {
        return Err(Error::CaseMismatch("triangle"));
    };
    for e in [(a, b), (b, c), (a, c)] {
        if !nonseparating_without(emb, &[e])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Families that make up the nonseparating planar graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanarClass {
    Outerplanar,
    Wheel,
    ElongatedTriangularPrism,
    None,
}

impl fmt::Display for PlanarClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanarClass::Outerplanar => "outerplanar",
            PlanarClass::Wheel => "wheel",
            PlanarClass::ElongatedTriangularPrism => "elongated-prism",
            PlanarClass::None => "none",
        })
    }
}

/// Some vertex whose removal leaves a single cycle through all the others.
fn wheel_hub(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 4 {
        return None;
    }
    (0..n).find(|&h| {
        let rest = g.delete_vertex(h).expect("vertex present");
        rest.is_connected() && (0..n - 1).all(|v| rest.degree(v) == 2)
    })
}

/// Subgraph of two triangles joined by three disjoint paths, using every vertex.
fn in_elongated_prism(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 6 {
        return false;
    }
    let extra = n - 6;
    for a in 0..=extra {
        for b in a..=extra - a {
            let c = extra - a - b;
            if c < b {
                continue;
            }
            if subgraph_monomorphism(g, &named::elongated_prism([a, b, c])).is_some() {
                return true;
            }
        }
    }
    false
}

/// Structural recognition of the nonseparating planar families. Wheels are
/// recognised up to missing spokes and prisms up to missing edges, both of
/// which stay nonseparating.
pub fn nonseparating_planar_class(g: &Graph) -> Result<PlanarClass> {
    if !is_planar(g) {
        return Err(Error::NotPlanar);
    }
    Ok(if is_outerplanar(g) {
        PlanarClass::Outerplanar
    } else if wheel_hub(g).is_some() {
        PlanarClass::Wheel
    } else if in_elongated_prism(g) {
        PlanarClass::ElongatedTriangularPrism
    } else {
        PlanarClass::None
    })
}

/// Everything known about one drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkReport {
    pub no_link_00: bool,
    pub no_link_01: Option<bool>,
    pub no_link_11: bool,
    pub case: Case,
    pub separating_cycle: Option<EmbCycle>,
    pub separating_1hom_cycle: Option<EmbCycle>,
    pub disjoint_edges: Option<(Edge, Edge)>,
}

pub fn link_report(emb: &Rp2Embedding) -> Result<LinkReport> {
    let (no_link_00, separating_cycle) = no_link_00(emb)?;
    let (no_link_01, separating_1hom_cycle) = if no_link_00 {
        let (ok, w) = no_link_01(emb)?;
        (Some(ok), w)
    } else {
        (None, None)
    };
    let (no_link_11, disjoint_edges) = no_link_11(emb);
    Ok(LinkReport {
        no_link_00,
        no_link_01,
        no_link_11,
        case: classify_case(emb),
        separating_cycle,
        separating_1hom_cycle,
        disjoint_edges,
    })
}

pub const TSV_HEADER: &str = "drawing\tno_link_00\tno_link_01\tno_link_11\tcase\twitness";

impl LinkReport {
    pub fn witness(&self) -> String {
        let mut parts = Vec::new();
        if let Some(c) = &self.separating_cycle {
            parts.push(format!("00:{c}"));
        }
        if let Some(c) = &self.separating_1hom_cycle {
            parts.push(format!("01:{c}"));
        }
        if let Some(((a, b), (c, d))) = self.disjoint_edges {
            parts.push(format!("11:{a}-{b}|{c}-{d}"));
        }
        if parts.is_empty() {
            "-".into()
        } else {
            parts.join(";")
        }
    }

    pub fn tsv_row(&self, drawing: &str) -> String {
        let o1 = match self.no_link_01 {
            Some(b) => b.to_string(),
            None => "n/a".into(),
        };
        format!("{drawing}\t{}\t{o1}\t{}\t{}\t{}", self.no_link_00, self.no_link_11, self.case, self.witness())
    }
}
