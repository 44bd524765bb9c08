//! Cycles of a drawing: homology, the sides of a cycle, and the separating
//! predicates.

use std::ops::ControlFlow;

use super::Rp2Embedding;
use crate::error::{Error, Result};
use crate::graph::{bits, edge, Edge, Graph};

/// Default cap on the number of simple cycles examined by a separating check.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// A simple cycle given by its cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmbCycle {
    vertices: Vec<usize>,
}

impl EmbCycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::NotACycle(format!("{vertices:?} has fewer than three vertices")));
        }
        let mut seen = 0u32;
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.vertex_count() || seen >> v & 1 == 1 {
                return Err(Error::NotACycle(format!("{vertices:?} repeats or leaves the graph")));
            }
            seen |= 1 << v;
            let w = vertices[(i + 1) % k];
            if !g.has_edge(v, w) {
                return Err(Error::NotACycle(format!("{vertices:?}: {v} and {w} are not adjacent")));
            }
        }
        Ok(EmbCycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_mask(&self) -> u32 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let k = self.vertices.len();
        (0..k).map(|i| edge(self.vertices[i], self.vertices[(i + 1) % k])).collect()
    }
}

impl std::fmt::Display for EmbCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join("-"))
    }
}

fn checked(emb: &Rp2Embedding, c: &EmbCycle) -> Result<()> {
    EmbCycle::new(emb.graph(), c.vertices.clone()).map(|_| ())
}

/// 1 when the product of signs along `c` is negative, else 0.
pub fn cycle_homology(emb: &Rp2Embedding, c: &EmbCycle) -> Result<u8> {
    checked(emb, c)?;
    Ok(homology(emb, c))
}

fn homology(emb: &Rp2Embedding, c: &EmbCycle) -> u8 {
    (c.edges().iter().filter(|&&(u, v)| emb.signature(u, v) < 0).count() % 2) as u8
}

/// Vertices off a cycle split by side. `unresolved` holds vertices whose
/// component reaches both sides of a one-sided cycle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sides {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub unresolved: Vec<usize>,
}

impl Sides {
    fn ordered(mut a: Vec<usize>, mut b: Vec<usize>, unresolved: Vec<usize>) -> Self {
        a.sort_unstable();
        b.sort_unstable();
        let key = |s: &Vec<usize>| s.first().copied().unwrap_or(usize::MAX);
        if key(&b) < key(&a) {
            std::mem::swap(&mut a, &mut b);
        }
        Sides { a, b, unresolved }
    }

    /// Both sides carry a vertex.
    pub fn is_separating(&self) -> bool {
        !self.a.is_empty() && !self.b.is_empty()
    }
}

fn require_connected(emb: &Rp2Embedding) -> Result<()> {
    if emb.graph().is_connected() {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("drawing must be connected"))
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// The two regions cut off by a 0-homologous cycle, found by merging faces
/// across every edge not on the cycle.
pub fn disk_sides(emb: &Rp2Embedding, c: &EmbCycle) -> Result<Sides> {
    checked(emb, c)?;
    let h = homology(emb, c);
    if h != 0 {
        return Err(Error::HomologyMismatch { expected: 0, found: h });
    }
    require_connected(emb)?;
    Ok(disk_sides_unchecked(emb, c))
}

fn disk_sides_unchecked(emb: &Rp2Embedding, c: &EmbCycle) -> Sides {
    let fm = emb.face_map();
    let on_cycle = c.edges();
    let n = emb.graph().vertex_count();
    let mut first_face = vec![[usize::MAX; 32]; n];
    let mut parent: Vec<usize> = (0..fm.faces.len()).collect();
    for (i, f) in fm.faces.iter().enumerate() {
        for &(u, v) in &f.darts {
            let (a, b) = edge(u, v);
            if on_cycle.contains(&(a, b)) {
                continue;
            }
            let slot = &mut first_face[a][b];
            if *slot == usize::MAX {
                *slot = i;
            } else {
                let (x, y) = (find(&mut parent, *slot), find(&mut parent, i));
                parent[x] = y;
            }
        }
    }
    let mask = c.vertex_mask();
    let mut class_of = std::collections::BTreeMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if mask >> v & 1 == 1 {
            continue;
        }
        let root = find(&mut parent, fm.corner_face[v][0]);
        let next = class_of.len();
        let id = *class_of.entry(root).or_insert(next);
        if id == groups.len() {
            groups.push(Vec::new());
        }
        groups[id].push(v);
    }
    debug_assert!(groups.len() <= 2, "a two-sided cycle has two regions");
    let a = groups.first().cloned().unwrap_or_default();
    let b = groups.get(1).cloned().unwrap_or_default();
    Sides::ordered(a, b, Vec::new())
}

/// Sides of a 1-homologous cycle in the disk picture. Walking the cycle,
/// the neighbours strictly between the outgoing and incoming edge in
/// successor order lie on one side; a negative edge carries its far end to
/// the other side. Components of the graph off the cycle inherit those
/// colours, flipping across their own negative edges; a component that
/// would need both colours at one vertex is unresolved.
pub fn sides_of_1hom_cycle(emb: &Rp2Embedding, c: &EmbCycle) -> Result<Sides> {
    checked(emb, c)?;
    let h = homology(emb, c);
    if h != 1 {
        return Err(Error::HomologyMismatch { expected: 1, found: h });
    }
    require_connected(emb)?;
    Ok(sides_1hom_unchecked(emb, c))
}

fn sides_1hom_unchecked(emb: &Rp2Embedding, c: &EmbCycle) -> Sides {
    let g = emb.graph();
    let n = g.vertex_count();
    let cyc = c.vertex_mask();
    let k = c.len();
    // colour bit 0 or 1 per vertex, with a mask of both colours seen
    let mut seen = vec![0u8; n];
    let mut stack = Vec::new();
    for i in 0..k {
        let v = c.vertices[i];
        let out = c.vertices[(i + 1) % k];
        let inn = c.vertices[(i + k - 1) % k];
        let r = emb.rotation(v);
        let d = r.len();
        let p_out = r.iter().position(|&x| x == out).expect("cycle edge");
        let mut side = 0u8;
        for step in 1..d {
            let x = r[(p_out + step) % d];
            if x == inn {
                side = 1;
                continue;
            }
            if cyc >> x & 1 == 1 {
                continue;
            }
            let colour = side ^ (emb.signature(v, x) < 0) as u8;
            seen[x] |= 1 << colour;
            stack.push((x, colour));
        }
    }
    while let Some((x, colour)) = stack.pop() {
        for y in bits(g.neighbor_mask(x) & !cyc) {
            let cy = colour ^ (emb.signature(x, y) < 0) as u8;
            if seen[y] >> cy & 1 == 0 {
                seen[y] |= 1 << cy;
                stack.push((y, cy));
            }
        }
    }
    let off = g.full_mask() & !cyc;
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut unresolved = Vec::new();
    for comp in g.components_within(off) {
        if bits(comp).any(|v| seen[v] == 3) {
            unresolved.extend(bits(comp));
            continue;
        }
        for v in bits(comp) {
            match seen[v] {
                1 => a.push(v),
                2 => b.push(v),
                _ => unresolved.push(v),
            }
        }
    }
    unresolved.sort_unstable();
    Sides::ordered(a, b, unresolved)
}

/// Calls `visit` on every simple cycle of `g` (each once, starting at its
/// least vertex), failing once more than `cap` cycles have been produced.
pub fn for_each_cycle<B>(
    g: &Graph,
    cap: usize,
    mut visit: impl FnMut(EmbCycle) -> ControlFlow<B>,
) -> Result<Option<B>> {
    let n = g.vertex_count();
    let mut count = 0usize;
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let allowed = g.full_mask() & !((1u32 << s) | ((1u32 << s) - 1));
        path.clear();
        path.push(s);
        let mut st = Walk { g, s, allowed, count: &mut count, cap };
        if let Some(b) = st.extend(&mut path, 1 << s, &mut visit)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

struct Walk<'a> {
    g: &'a Graph,
    s: usize,
    allowed: u32,
    count: &'a mut usize,
    cap: usize,
}

impl Walk<'_> {
    fn extend<B>(
        &mut self,
        path: &mut Vec<usize>,
        used: u32,
        visit: &mut impl FnMut(EmbCycle) -> ControlFlow<B>,
    ) -> Result<Option<B>> {
        let last = *path.last().expect("nonempty");
        let nb = self.g.neighbor_mask(last);
        if path.len() >= 3 && nb >> self.s & 1 == 1 && path[1] < last {
            *self.count += 1;
            if *self.count > self.cap {
                return Err(Error::CycleBudgetExceeded(self.cap));
            }
            if let ControlFlow::Break(b) = visit(EmbCycle { vertices: path.clone() }) {
                return Ok(Some(b));
            }
        }
        for w in bits(nb & self.allowed & !used) {
            path.push(w);
            let r = self.extend(path, used | 1 << w, visit)?;
            path.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }
}

/// Both regions of the 0-homologous cycle `c` contain a vertex.
pub fn is_separating_cycle_0(emb: &Rp2Embedding, c: &EmbCycle) -> Result<bool> {
    Ok(disk_sides(emb, c)?.is_separating())
}

/// First separating 0-homologous cycle in enumeration order.
pub fn separating_0hom_cycle(emb: &Rp2Embedding, cap: usize) -> Result<Option<EmbCycle>> {
    require_connected(emb)?;
    for_each_cycle(emb.graph(), cap, |c| {
        if homology(emb, &c) == 0 && disk_sides_unchecked(emb, &c).is_separating() {
            ControlFlow::Break(c)
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// First separating 0-homologous cycle of the spanning subgraph `sub`, with
/// regions taken in the full drawing. This is the drawing of `sub` obtained
/// by erasing edges, with every vertex left where it was.
pub fn separating_0hom_cycle_in(emb: &Rp2Embedding, sub: &Graph, cap: usize) -> Result<Option<EmbCycle>> {
    require_connected(emb)?;
    if sub.vertex_count() != emb.graph().vertex_count()
        || sub.edges().into_iter().any(|(u, v)| !emb.graph().has_edge(u, v))
    {
        return Err(Error::PreconditionViolated("not a spanning subgraph of the drawing"));
    }
    for_each_cycle(sub, cap, |c| {
        if homology(emb, &c) == 0 && disk_sides_unchecked(emb, &c).is_separating() {
            ControlFlow::Break(c)
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// No 0-homologous cycle has vertices in both of its regions.
pub fn is_nonseparating_embedding(emb: &Rp2Embedding) -> Result<bool> {
    Ok(separating_0hom_cycle(emb, DEFAULT_CYCLE_CAP)?.is_none())
}

/// First 1-homologous cycle with vertices on both sides.
pub fn separating_1hom_cycle(emb: &Rp2Embedding, cap: usize) -> Result<Option<EmbCycle>> {
    require_connected(emb)?;
    for_each_cycle(emb.graph(), cap, |c| {
        if homology(emb, &c) == 1 && sides_1hom_unchecked(emb, &c).is_separating() {
            ControlFlow::Break(c)
        } else {
            ControlFlow::Continue(())
        }
    })
}

pub fn has_separating_1hom_cycle(emb: &Rp2Embedding) -> Result<bool> {
    Ok(separating_1hom_cycle(emb, DEFAULT_CYCLE_CAP)?.is_some())
}
