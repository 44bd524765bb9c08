//! Signed rotation systems modelling drawings in the projective plane.
//!
//! Each vertex carries a cyclic order of its neighbours and each edge a
//! sign. A negative edge crosses the boundary of the disk picture of the
//! projective plane an odd number of times. Faces are traced on flags
//! `(dart, state)`: crossing a negative edge flips the state, and the state
//! decides whether the walk continues with the successor or the predecessor
//! in the next rotation.

mod cycles;
mod search;
mod surgery;

use std::fmt;

pub use cycles::{
    cycle_homology, disk_sides, for_each_cycle, has_separating_1hom_cycle, is_nonseparating_embedding,
    is_separating_cycle_0, separating_0hom_cycle, separating_0hom_cycle_in, separating_1hom_cycle, sides_of_1hom_cycle, EmbCycle,
    Sides, DEFAULT_CYCLE_CAP,
};
pub use search::{
    blocks, enumerate_rp2_embeddings, is_projective_planar_by_embedding, EmbeddingSearch,
    DEFAULT_EMBEDDING_BUDGET,
};
pub use surgery::y_delta_embedding;

use crate::error::{Error, Result};
use crate::graph::{bits, edge, Edge, Graph};

/// A corner sits between positions `slot` and `slot + 1` of a rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub vertex: usize,
    pub slot: usize,
}

/// One face boundary walk: the darts in order, and the corner entered after
/// each dart with the local orientation state at that moment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(usize, usize)>,
    pub corners: Vec<(Corner, i8)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in walk order; an isolated vertex gives a one-element walk.
    pub fn vertices(&self) -> Vec<usize> {
        if self.darts.is_empty() {
            self.corners.iter().map(|(c, _)| c.vertex).collect()
        } else {
            self.darts.iter().map(|&(u, _)| u).collect()
        }
    }
}

/// Faces together with the face index of every corner.
#[derive(Clone, Debug)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    pub corner_face: Vec<Vec<usize>>,
    pub flag_orbits: usize,
}

/// A rotation system with edge signatures.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rp2Embedding {
    graph: Graph,
    rot: Vec<Vec<usize>>,
    neg: Vec<u32>,
}

fn rotate_to_min(list: &mut [usize]) {
    if let Some(i) = list.iter().enumerate().min_by_key(|&(_, &x)| x).map(|(i, _)| i) {
        list.rotate_left(i);
    }
}

pub(crate) fn trace_raw(n: usize, rot: &[Vec<usize>], neg: &[u32]) -> FaceMap {
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + rot[v].len();
    }
    let mut pos = vec![[u8::MAX; 32]; n];
    for v in 0..n {
        for (i, &w) in rot[v].iter().enumerate() {
            pos[v][w] = i as u8;
        }
    }
    let darts = offset[n];
    let mut visited = vec![false; darts * 2];
    let mut corner_face: Vec<Vec<usize>> = (0..n).map(|v| vec![usize::MAX; rot[v].len().max(1)]).collect();
    let mut faces = Vec::new();
    let mut orbits = 0;
    for u in 0..n {
        if rot[u].is_empty() {
            corner_face[u][0] = faces.len();
            faces.push(Face { darts: vec![], corners: vec![(Corner { vertex: u, slot: 0 }, 1)] });
            continue;
        }
        for i in 0..rot[u].len() {
            for s0 in [1i8, -1] {
                let flag = (offset[u] + i) * 2 + (s0 < 0) as usize;
                if visited[flag] {
                    continue;
                }
                orbits += 1;
                let mut face = Face { darts: Vec::new(), corners: Vec::new() };
                let (mut a, mut k, mut s) = (u, i, s0);
                loop {
                    let f = (offset[a] + k) * 2 + (s < 0) as usize;
                    if visited[f] {
                        break;
                    }
                    visited[f] = true;
                    let b = rot[a][k];
                    let s2 = if neg[a] >> b & 1 == 1 { -s } else { s };
                    let d = rot[b].len();
                    let j = pos[b][a] as usize;
                    let (next, slot) = if s2 > 0 { ((j + 1) % d, j) } else { ((j + d - 1) % d, (j + d - 1) % d) };
                    face.darts.push((a, b));
                    face.corners.push((Corner { vertex: b, slot }, s2));
                    a = b;
                    k = next;
                    s = s2;
                }
                let (c, _) = face.corners[0];
                if corner_face[c.vertex][c.slot] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                for (c, _) in &face.corners {
                    corner_face[c.vertex][c.slot] = id;
                }
                faces.push(face);
            }
        }
    }
    FaceMap { faces, corner_face, flag_orbits: orbits }
}

/// Euler genus summed over components, where a component with no edges
/// counts as a sphere.
pub(crate) fn euler_genus_raw(g: &Graph, fm: &FaceMap) -> i64 {
    let mut total = 0i64;
    for comp in g.component_masks() {
        let v = comp.count_ones() as i64;
        let e: i64 = bits(comp).map(|x| g.degree(x) as i64).sum::<i64>() / 2;
        let f = fm.faces.iter().filter(|f| comp >> f.corners[0].0.vertex & 1 == 1).count() as i64;
        total += 2 - v + e - f;
    }
    total
}

impl Rp2Embedding {
    /// Builds and validates an embedding: every rotation must list exactly
    /// the neighbours of its vertex, and the Euler genus must be at most one.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>, negative: &[Edge]) -> Result<Self> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(Error::MalformedRotation(format!("{} rotations for {n} vertices", rotation.len())));
        }
        for (v, r) in rotation.iter().enumerate() {
            let mut m = 0u32;
            for &w in r {
                if w >= n || m >> w & 1 == 1 {
                    return Err(Error::MalformedRotation(format!("vertex {v}: bad or repeated neighbour {w}")));
                }
                m |= 1 << w;
            }
            if m != graph.neighbor_mask(v) {
                return Err(Error::MalformedRotation(format!("vertex {v}: rotation does not match its edges")));
            }
        }
        let mut neg = vec![0u32; n];
        for &(u, v) in negative {
            if !graph.has_edge(u, v) {
                return Err(Error::EdgeNotPresent(u, v));
            }
            neg[u] |= 1 << v;
            neg[v] |= 1 << u;
        }
        let emb = Self::from_parts(graph, rotation, neg);
        let eg = emb.euler_genus();
        if eg > 1 {
            return Err(Error::MalformedRotation(format!("Euler genus {eg} exceeds the projective plane")));
        }
        Ok(emb)
    }

    pub(crate) fn from_parts(graph: Graph, mut rot: Vec<Vec<usize>>, neg: Vec<u32>) -> Self {
        for r in rot.iter_mut() {
            rotate_to_min(r);
        }
        Rp2Embedding { graph, rot, neg }
    }

    /// Every edge positive with the given rotations.
    pub fn with_positive_signature(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(graph, rotation, &[])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub(crate) fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub(crate) fn negative_masks(&self) -> &[u32] {
        &self.neg
    }

    pub fn signature(&self, u: usize, v: usize) -> i8 {
        if self.neg[u] >> v & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Edges with signature −1, in lexicographic order. Depends on the
    /// fixed representation and changes under switching.
    pub fn one_homologous_edges(&self) -> Vec<Edge> {
        self.graph.edges().into_iter().filter(|&(u, v)| self.neg[u] >> v & 1 == 1).collect()
    }

    pub fn face_map(&self) -> FaceMap {
        trace_raw(self.graph.vertex_count(), &self.rot, &self.neg)
    }

    pub fn trace_faces(&self) -> Vec<Face> {
        self.face_map().faces
    }

    pub fn face_count(&self) -> usize {
        self.face_map().faces.len()
    }

    /// `V − E + F` over the whole drawing.
    pub fn euler_characteristic(&self) -> i64 {
        self.graph.vertex_count() as i64 - self.graph.edge_count() as i64 + self.face_count() as i64
    }

    pub fn euler_genus(&self) -> i64 {
        euler_genus_raw(&self.graph, &self.face_map())
    }

    /// Euler genus zero: the rotation system is a plane drawing.
    pub fn is_planar_drawing(&self) -> bool {
        self.euler_genus() == 0
    }

    /// Reverses the rotation at `v` and negates the signs of its edges.
    pub fn switch_vertex(&self, v: usize) -> Rp2Embedding {
        let mut rot = self.rot.clone();
        let mut neg = self.neg.clone();
        rot[v].reverse();
        let nb = self.graph.neighbor_mask(v);
        neg[v] ^= nb;
        for w in bits(nb) {
            neg[w] ^= 1 << v;
        }
        Self::from_parts(self.graph.clone(), rot, neg)
    }

    /// Switches every vertex of `mask`.
    pub fn switch_set(&self, mask: u32) -> Rp2Embedding {
        bits(mask).fold(self.clone(), |e, v| e.switch_vertex(v))
    }

    /// Mirror image: every rotation reversed.
    pub fn reflect(&self) -> Rp2Embedding {
        let rot = self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect();
        Self::from_parts(self.graph.clone(), rot, self.neg.clone())
    }

    /// Drops the given edges from the graph, the rotations and the signature.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Rp2Embedding> {
        let mut g = self.graph.clone();
        let mut rot = self.rot.clone();
        let mut neg = self.neg.clone();
        for &(u, v) in edges {
            g = g.delete_edge(edge(u, v))?;
            rot[u].retain(|&x| x != v);
            rot[v].retain(|&x| x != u);
            neg[u] &= !(1 << v);
            neg[v] &= !(1 << u);
        }
        Ok(Self::from_parts(g, rot, neg))
    }

    /// Canonical member of the switching class: signs normalized to +1 on a
    /// breadth-first spanning forest rooted at each component's least
    /// vertex, then each component mirrored if that gives the smaller
    /// rotation listing.
    pub fn normalized(&self) -> Rp2Embedding {
        let g = &self.graph;
        let mut e = self.clone();
        for comp in g.component_masks() {
            let root = comp.trailing_zeros() as usize;
            let mut seen = 1u32 << root;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for w in bits(g.neighbor_mask(x) & !seen) {
                    seen |= 1 << w;
                    if e.neg[x] >> w & 1 == 1 {
                        e = e.switch_vertex(w);
                    }
                    queue.push_back(w);
                }
            }
            let mirrored = e.switch_set(comp);
            let key = |emb: &Rp2Embedding| bits(comp).map(|v| emb.rot[v].clone()).collect::<Vec<_>>();
            if key(&mirrored) < key(&e) {
                e = mirrored;
            }
        }
        e
    }

    /// True when the two drawings differ only by switching and reflection.
    pub fn is_equivalent(&self, other: &Rp2Embedding) -> bool {
        self.normalized() == other.normalized()
    }

    /// Parses the `.emb` format.
    pub fn parse_emb(text: &str) -> Result<Rp2Embedding> {
        let mut header: Option<(usize, usize)> = None;
        let mut rot: Vec<Option<Vec<usize>>> = Vec::new();
        let mut negative = Vec::new();
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let ln = i + 1;
            let num = |s: &str| s.parse::<usize>().map_err(|_| perr(ln, format!("not an integer: {s:?}")));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some((n, _)) = header else {
                match fields.as_slice() {
                    [a, b] => {
                        let n = num(a)?;
                        header = Some((n, num(b)?));
                        rot = vec![None; n];
                    }
                    _ => return Err(perr(ln, "expected header \"n m\"".into())),
                }
                continue;
            };
            match fields.as_slice() {
                ["r", v, rest @ ..] => {
                    let v = num(v.trim_end_matches(':'))?;
                    let mut list = Vec::new();
                    for f in rest {
                        let f = f.trim_start_matches(':');
                        if !f.is_empty() {
                            list.push(num(f)?);
                        }
                    }
                    if v >= n || rot[v].is_some() {
                        return Err(perr(ln, format!("bad or repeated rotation for vertex {v}")));
                    }
                    if list.iter().any(|&w| w >= n) {
                        return Err(perr(ln, format!("neighbour out of range at vertex {v}")));
                    }
                    rot[v] = Some(list);
                }
                ["s", u, v, "-"] => negative.push(edge(num(u)?, num(v)?)),
                _ => return Err(perr(ln, format!("unrecognized line {line:?}"))),
            }
        }
        let (n, m) = header.ok_or_else(|| perr(0, "missing header".into()))?;
        let rot: Vec<Vec<usize>> = rot.into_iter().map(|r| r.unwrap_or_default()).collect();
        let mut edges = Vec::new();
        for (v, r) in rot.iter().enumerate() {
            for &w in r {
                if v == w {
                    return Err(Error::MalformedRotation(format!("loop at {v}")));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::from_edges(n, edges).map_err(|e| Error::MalformedRotation(e.to_string()))?;
        if graph.edge_count() != m {
            return Err(Error::MalformedRotation(format!("header says {m} edges, rotations give {}", graph.edge_count())));
        }
        Rp2Embedding::new(graph, rot, &negative)
    }

    pub fn to_emb(&self) -> String {
        let mut s = String::new();
        if let Some(name) = self.graph.name() {
            s.push_str(&format!("# {name}\n"));
        }
        s.push_str(&format!("{} {}\n", self.graph.vertex_count(), self.graph.edge_count()));
        for (v, r) in self.rot.iter().enumerate() {
            let list: Vec<String> = r.iter().map(|w| w.to_string()).collect();
            s.push_str(&format!("r {v}: {}\n", list.join(" ")).replace(": \n", ":\n"));
        }
        for (u, v) in self.one_homologous_edges() {
            s.push_str(&format!("s {u} {v} -\n"));
        }
        s
    }
}

impl fmt::Debug for Rp2Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rp2Embedding {{ rot: {:?}, negative: {:?} }}", self.rot, self.one_homologous_edges())
    }
}
