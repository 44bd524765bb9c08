//! Canonical labeling by equitable refinement plus backtracking over
//! individualized vertices, with automorphism pruning. Also subgraph
//! monomorphism and automorphism enumeration, which share the same bitmask
//! machinery.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest graph accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 16;

/// Identifies an isomorphism class: vertex count plus the upper triangle of the
/// canonically relabelled adjacency matrix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn as_bytes(&self) -> [u8; 17] {
        let mut out = [0u8; 17];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.bits.to_be_bytes());
        out
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::empty(n);
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> (127 - idx) & 1 == 1 {
                    g.insert_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }

    pub fn to_hex(&self) -> String {
        self.as_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Code of the graph under the ordering `lab[position] = vertex`.
fn code_of(g: &Graph, lab: &[usize]) -> u128 {
    let n = lab.len();
    let mut code = 0u128;
    let mut idx = 0;
    for i in 0..n {
        let row = g.neighbor_mask(lab[i]);
        for j in i + 1..n {
            if row >> lab[j] & 1 == 1 {
                code |= 1u128 << (127 - idx);
            }
            idx += 1;
        }
    }
    code
}

type Cells = Vec<Vec<usize>>;

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. The result depends only on the isomorphism type
/// of (graph, ordered partition).
fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for s in 0..cells.len() {
            let mut smask = 0u32;
            for &v in &cells[s] {
                smask |= 1 << v;
            }
            for i in 0..cells.len() {
                if cells[i].len() == 1 {
                    continue;
                }
                let count = |v: &usize| (g.neighbor_mask(*v) & smask).count_ones();
                let first = count(&cells[i][0]);
                if cells[i].iter().all(|v| count(v) == first) {
                    continue;
                }
                let mut cell = std::mem::take(&mut cells[i]);
                cell.sort_by_key(|v| (count(v), *v));
                let mut parts: Cells = Vec::new();
                let mut last = None;
                for v in cell {
                    let c = count(&v);
                    if last != Some(c) {
                        parts.push(Vec::new());
                        last = Some(c);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(i..=i, parts);
                continue 'outer;
            }
        }
        break;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
    first: Option<(u128, Vec<usize>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    /// Returns `Some(depth)` to unwind to the node at that depth.
    fn search(&mut self, mut cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(path, w, &explored) {
                continue;
            }
            explored.push(w);
            let mut child = cells.clone();
            let rest: Vec<usize> = candidates.iter().copied().filter(|&x| x != w).collect();
            child.splice(target..=target, [vec![w], rest]);
            path.push(w);
            let jump = self.search(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(self.g, &lab);
        let Some((first_code, first_lab, first_path)) = &self.first else {
            self.first = Some((code, lab.clone(), path.to_vec()));
            self.best = Some((code, lab));
            return None;
        };
        if code == *first_code {
            let gamma = automorphism_between(first_lab, &lab);
            let common = first_path.iter().zip(path).take_while(|(a, b)| a == b).count();
            self.generators.push(gamma);
            return Some(common);
        }
        let (best_code, best_lab) = self.best.as_ref().unwrap();
        if code == *best_code {
            let gamma = automorphism_between(best_lab, &lab);
            self.generators.push(gamma);
        } else if code > *best_code {
            self.best = Some((code, lab));
        }
        None
    }

    /// Whether `w` lies in the orbit of an explored sibling under the known
    /// automorphisms that fix the current path pointwise.
    fn equivalent_to_explored(&self, path: &[usize], w: usize, explored: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let next = p[x];
                p[x] = r;
                x = next;
            }
            r
        }
        let mut any = false;
        for gamma in &self.generators {
            if path.iter().all(|&v| gamma[v] == v) {
                any = true;
                for v in 0..n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&x| find(&mut parent, x) == rw)
    }
}

fn automorphism_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (a, b) in from.iter().zip(to) {
        gamma[*a] = *b;
    }
    gamma
}

/// Canonical code together with the labeling `lab[position] = vertex` that produced it.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::GraphTooLarge { vertices: n, limit: MAX_CANON_VERTICES });
    }
    if n == 0 {
        return Ok((CanonicalCode { n: 0, bits: 0 }, Vec::new()));
    }
    // initial partition by degree; refinement would find it anyway
    let mut cells: Cells = Vec::new();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut search = CanonSearch { g, best: None, first: None, generators: Vec::new() };
    search.search(cells, &mut Vec::new());
    let (bits, lab) = search.best.expect("at least one leaf");
    Ok((CanonicalCode { n: n as u8, bits }, lab))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (code, _) = canonical_labeling(g)?;
    let mut h = code.to_graph();
    if let Some(name) = g.name() {
        h = h.with_name(name);
    }
    Ok(h)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    match (canonical_form(g), canonical_form(h)) {
        (Ok(a), Ok(b)) => a == b,
        // same vertex and edge counts: an injective edge-preserving map is a bijection
        _ => subgraph_monomorphism(h, g).is_some(),
    }
}

/// Finds an injective map `pattern -> host` carrying edges to edges
/// (not necessarily induced). Pattern vertices are placed in
/// decreasing-degree order, growing through already-placed neighbours.
pub fn subgraph_monomorphism(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let pd = pattern.degree_sequence();
    let hd = host.degree_sequence();
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return None;
    }
    let order = placement_order(pattern);
    let mut image = vec![usize::MAX; k];
    if place(pattern, host, &order, 0, 0, &mut image) {
        Some(image)
    } else {
        None
    }
}

pub(crate) fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.vertex_count();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u32;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                let linked = (pattern.neighbor_mask(v) & placed).count_ones();
                (linked, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    order
}

fn place(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    used: u32,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let need = pattern.degree(p);
    let mut cand = host.full_mask() & !used;
    for q in bits(pattern.neighbor_mask(p)) {
        if image[q] != usize::MAX {
            cand &= host.neighbor_mask(image[q]);
        }
    }
    for h in bits(cand) {
        if host.degree(h) < need {
            continue;
        }
        image[p] = h;
        if place(pattern, host, order, depth + 1, used | 1 << h, image) {
            return true;
        }
    }
    image[p] = usize::MAX;
    false
}

/// All automorphisms of `g` as permutations `v -> gamma[v]`, by plain
/// backtracking. Intended for small graphs with small groups; stops after
/// `limit` automorphisms.
pub fn automorphisms(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let order = placement_order(g);
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    fn go(
        g: &Graph,
        order: &[usize],
        depth: usize,
        used: u32,
        image: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if depth == order.len() {
            out.push(image.clone());
            return;
        }
        let p = order[depth];
        for h in bits(g.full_mask() & !used) {
            if g.degree(h) != g.degree(p) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&q| g.has_edge(p, q) == g.has_edge(h, image[q]));
            if !consistent {
                continue;
            }
            image[p] = h;
            go(g, order, depth + 1, used | 1 << h, image, out, limit);
        }
        image[p] = usize::MAX;
    }
    go(g, &order, 0, 0, &mut image, &mut out, limit);
    out
}

/// Partitions `0..n` into orbits of the group generated by `perms`.
pub fn orbits(n: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if orbit_of[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        orbit_of[s] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for p in perms {
                if orbit_of[p[v]] == usize::MAX {
                    orbit_of[p[v]] = id;
                    members.push(p[v]);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
