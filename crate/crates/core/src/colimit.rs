//! Colimits of functors from finite directed multigraphs to free modules.
//!
//! The brute-force presentation takes every vertex as a generator block. The
//! terminal-set presentation keeps only the blocks of a terminal set and
//! relates the images of each vertex along different paths into it.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use bnskein_exact::{cokernel_invariants, ModuleInvariants, Ring, Scalar, SparseMatrix};

use crate::error::{structure, Error, Result};
use crate::tensor::TensorObject;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub rank: usize,
    /// The tensor object this vertex stands for, when there is one.
    pub object: Option<TensorObject>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: String,
    pub dst: String,
    /// Columns index the source module, rows the target.
    pub map: SparseMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorGraph {
    pub ring: Ring,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl FunctorGraph {
    pub fn new(ring: Ring) -> Self {
        FunctorGraph {
            ring,
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, rank: usize) -> Result<()> {
        self.push_vertex(Vertex {
            id: id.into(),
            rank,
            object: None,
        })
    }

    pub fn add_object_vertex(&mut self, id: impl Into<String>, object: TensorObject, r: usize) -> Result<()> {
        let rank = r.pow(object.k.len() as u32);
        self.push_vertex(Vertex {
            id: id.into(),
            rank,
            object: Some(object),
        })
    }

    fn push_vertex(&mut self, v: Vertex) -> Result<()> {
        if self.vertex(&v.id).is_some() {
            return Err(structure(format!("duplicate vertex {}", v.id)));
        }
        self.vertices.push(v);
        Ok(())
    }

    pub fn add_edge(&mut self, id: impl Into<String>, src: &str, dst: &str, map: SparseMatrix) -> Result<()> {
        let id = id.into();
        let (s, d) = match (self.vertex(src), self.vertex(dst)) {
            (Some(s), Some(d)) => (s.rank, d.rank),
            _ => return Err(structure(format!("edge {id} has an unknown endpoint"))),
        };
        if map.ncols() != s || map.nrows() != d {
            return Err(structure(format!(
                "edge {id}: map is {}x{}, expected {d}x{s}",
                map.nrows(),
                map.ncols()
            )));
        }
        if *map.ring() != self.ring {
            return Err(structure(format!(
                "edge {id}: map over {} in a graph over {}",
                map.ring(),
                self.ring
            )));
        }
        self.edges.push(Edge {
            id,
            src: src.to_string(),
            dst: dst.to_string(),
            map,
        });
        Ok(())
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(&v.id) {
                return Err(structure(format!("duplicate vertex {}", v.id)));
            }
        }
        for e in &self.edges {
            let (s, d) = match (self.vertex(&e.src), self.vertex(&e.dst)) {
                (Some(s), Some(d)) => (s.rank, d.rank),
                _ => return Err(structure(format!("edge {} has an unknown endpoint", e.id))),
            };
            if e.map.ncols() != s || e.map.nrows() != d || *e.map.ring() != self.ring {
                return Err(structure(format!("edge {} does not match its endpoints", e.id)));
            }
        }
        Ok(())
    }

    pub fn to_ring(&self, ring: &Ring) -> Result<FunctorGraph> {
        let mut g = self.clone();
        g.ring = ring.clone();
        for e in &mut g.edges {
            e.map = e.map.to_ring(ring)?;
        }
        Ok(g)
    }

    fn all_blocks(&self) -> Vec<Block> {
        self.vertices.iter().map(Block::of).collect()
    }
}

/// One generator block of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertex: String,
    pub rank: usize,
    pub labels: Vec<String>,
}

impl Block {
    fn of(v: &Vertex) -> Block {
        Block {
            vertex: v.id.clone(),
            rank: v.rank,
            labels: v.object.as_ref().map(|o| o.k_labels()).unwrap_or_default(),
        }
    }
}

/// Generators are the direct sum of the blocks; relations are the columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub blocks: Vec<Block>,
    pub relations: SparseMatrix,
}

impl Presentation {
    pub fn generators(&self) -> usize {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    pub fn invariants(&self) -> Result<ModuleInvariants> {
        Ok(cokernel_invariants(&self.relations, self.generators())?)
    }

    fn offsets(&self) -> BTreeMap<String, usize> {
        let mut off = 0;
        let mut out = BTreeMap::new();
        for b in &self.blocks {
            out.insert(b.vertex.clone(), off);
            off += b.rank;
        }
        out
    }
}

/// Accumulates deduplicated relation columns over a fixed block layout.
struct RelationBuilder {
    ring: Ring,
    offsets: BTreeMap<String, usize>,
    nrows: usize,
    columns: Vec<BTreeMap<usize, Scalar>>,
    seen: HashSet<BTreeMap<usize, Scalar>>,
}

impl RelationBuilder {
    fn new(ring: &Ring, blocks: &[Block]) -> Self {
        let p = Presentation {
            blocks: blocks.to_vec(),
            relations: SparseMatrix::zeros(ring.clone(), 0, 0),
        };
        RelationBuilder {
            ring: ring.clone(),
            offsets: p.offsets(),
            nrows: p.generators(),
            columns: Vec::new(),
            seen: HashSet::new(),
        }
    }

    /// Adds `left e_i ⊖ right e_i` for every basis vector `e_i` of the domain.
    fn push_difference(&mut self, left: (&str, &SparseMatrix), right: (&str, &SparseMatrix)) -> Result<()> {
        let (lo, ro) = (self.block_offset(left.0)?, self.block_offset(right.0)?);
        if left.1.ncols() != right.1.ncols() {
            return Err(structure("span legs have different domains"));
        }
        for i in 0..left.1.ncols() {
            let mut col: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (r, v) in left.1.column(i) {
                bnskein_exact::matrix::add_into(&mut col, lo + r, v)?;
            }
            for (r, v) in right.1.column(i) {
                bnskein_exact::matrix::add_into(&mut col, ro + r, &-v)?;
            }
            if !col.is_empty() && self.seen.insert(col.clone()) {
                self.columns.push(col);
            }
        }
        Ok(())
    }

    fn block_offset(&self, vertex: &str) -> Result<usize> {
        self.offsets
            .get(vertex)
            .copied()
            .ok_or_else(|| structure(format!("vertex {vertex} is not a generator block")))
    }

    fn finish(self, blocks: Vec<Block>) -> Result<Presentation> {
        let relations = SparseMatrix::from_columns(self.ring, self.nrows, self.columns)?;
        Ok(Presentation { blocks, relations })
    }
}

/// Every vertex is a generator block; one relation `v − F(a)v` per edge and
/// basis vector.
pub fn colim_bruteforce(g: &FunctorGraph) -> Result<(Presentation, ModuleInvariants)> {
    g.validate()?;
    let blocks = g.all_blocks();
    let mut rb = RelationBuilder::new(&g.ring, &blocks);
    for e in &g.edges {
        let id = SparseMatrix::identity(g.ring.clone(), e.map.ncols());
        rb.push_difference((&e.src, &id), (&e.dst, &e.map))?;
    }
    let p = rb.finish(blocks)?;
    let inv = p.invariants()?;
    Ok((p, inv))
}

/// Default path-length bound for span enumeration.
pub fn default_path_bound(g: &FunctorGraph) -> usize {
    2 * g.vertices.len()
}

/// Generators are the blocks of `terminal` only. For each vertex every path
/// into `terminal` of length at most `bound` is enumerated (identical
/// (vertex, map) pairs are merged, and enumeration stops at a fixpoint), and
/// each image is related to the image along a shortest such path.
///
/// Any bound of at least `|V|` already gives the colimit: a shortest path into
/// the terminal set has length below `|V|`, and the only relations needed are
/// between a shortest path from `c` and an edge `c → d` followed by a
/// shortest path from `d`.
pub fn colim_terminal(
    g: &FunctorGraph,
    terminal: &BTreeSet<String>,
    bound: Option<usize>,
) -> Result<(Presentation, ModuleInvariants)> {
    g.validate()?;
    let bound = bound.unwrap_or_else(|| default_path_bound(g));
    for t in terminal {
        if g.vertex(t).is_none() {
            return Err(structure(format!("terminal vertex {t} is not in the graph")));
        }
    }
    check_terminal(g, terminal)?;
    let blocks: Vec<Block> = g
        .vertices
        .iter()
        .filter(|v| terminal.contains(&v.id))
        .map(Block::of)
        .collect();
    let mut out: BTreeMap<&str, Vec<&Edge>> = BTreeMap::new();
    for e in &g.edges {
        out.entry(e.src.as_str()).or_default().push(e);
    }
    let mut rb = RelationBuilder::new(&g.ring, &blocks);
    for v in &g.vertices {
        let hits = paths_into(g, &out, &v.id, v.rank, terminal, bound);
        let Some((t0, m0)) = hits.first() else {
            return Err(Error::NotTerminal(v.id.clone()));
        };
        for (t, m) in &hits[1..] {
            rb.push_difference((t, m), (t0, m0))?;
        }
    }
    let p = rb.finish(blocks)?;
    let inv = p.invariants()?;
    Ok((p, inv))
}

fn check_terminal(g: &FunctorGraph, terminal: &BTreeSet<String>) -> Result<()> {
    let mut reach: BTreeSet<&str> = terminal.iter().map(|s| s.as_str()).collect();
    loop {
        let before = reach.len();
        for e in &g.edges {
            if reach.contains(e.dst.as_str()) {
                reach.insert(e.src.as_str());
            }
        }
        if reach.len() == before {
            break;
        }
    }
    match g.vertices.iter().find(|v| !reach.contains(v.id.as_str())) {
        Some(v) => Err(Error::NotTerminal(format!(
            "vertex {} has no path into the terminal set",
            v.id
        ))),
        None => Ok(()),
    }
}

/// Maps along paths from `start` that end in `terminal`, in order of path length.
fn paths_into(
    g: &FunctorGraph,
    out: &BTreeMap<&str, Vec<&Edge>>,
    start: &str,
    rank: usize,
    terminal: &BTreeSet<String>,
    bound: usize,
) -> Vec<(String, SparseMatrix)> {
    let mut seen: HashSet<(String, SparseMatrix)> = HashSet::new();
    let mut hits = Vec::new();
    let mut frontier: VecDeque<(String, SparseMatrix)> = VecDeque::new();
    let first = (start.to_string(), SparseMatrix::identity(g.ring.clone(), rank));
    seen.insert(first.clone());
    frontier.push_back(first);
    for len in 0..=bound {
        let mut next = VecDeque::new();
        while let Some((v, m)) = frontier.pop_front() {
            if terminal.contains(&v) {
                hits.push((v.clone(), m.clone()));
            }
            if len == bound {
                continue;
            }
            for e in out.get(v.as_str()).into_iter().flatten() {
                let composite = e.map.mul(&m).expect("edge maps were validated");
                let key = (e.dst.clone(), composite);
                if seen.insert(key.clone()) {
                    next.push_back(key);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    hits
}

/// Columns `a e_i ⊖ a' e_i`; a single block (`a e_i − a' e_i`) when both legs
/// land in the same module.
pub fn pushout_relation(a: &SparseMatrix, a2: &SparseMatrix, same_target: bool) -> Result<SparseMatrix> {
    if a.ncols() != a2.ncols() {
        return Err(structure(format!(
            "span legs have domains of rank {} and {}",
            a.ncols(),
            a2.ncols()
        )));
    }
    if same_target {
        Ok(a.sub(a2)?)
    } else {
        Ok(SparseMatrix::vstack(a.ring().clone(), a.ncols(), &[a, &a2.neg()])?)
    }
}

/// Invariants of `(V^{⊗n} ⊕ V^{⊗m}) / {f(v) ⊖ g(v)}`.
pub fn pushout_quotient_invariants(f: &SparseMatrix, g: &SparseMatrix) -> Result<ModuleInvariants> {
    let rel = pushout_relation(f, g, false)?;
    Ok(cokernel_invariants(&rel, f.nrows() + g.nrows())?)
}

/// Drops, one at a time, every edge `a: c → d` with a different surviving edge
/// `b: d → c` such that `F(b)F(a) = Id`.
pub fn delete_left_invertible(g: &FunctorGraph) -> FunctorGraph {
    let mut alive = vec![true; g.edges.len()];
    for (i, a) in g.edges.iter().enumerate() {
        let has_inverse = g.edges.iter().enumerate().any(|(j, b)| {
            j != i
                && alive[j]
                && b.src == a.dst
                && b.dst == a.src
                && b.map.mul(&a.map).map(|m| m.is_identity()).unwrap_or(false)
        });
        if has_inverse {
            alive[i] = false;
        }
    }
    let mut out = g.clone();
    out.edges = g
        .edges
        .iter()
        .zip(alive)
        .filter(|(_, keep)| *keep)
        .map(|(e, _)| e.clone())
        .collect();
    out
}

/// A span `left.0 ← center → right.0` contributing `left(v) − right(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub id: String,
    pub center: usize,
    pub left: (String, SparseMatrix),
    pub right: (String, SparseMatrix),
}

impl Span {
    /// Contributes no relations.
    pub fn is_trivial(&self) -> bool {
        self.left == self.right
    }
}

/// Claims that span `target` factors through spans `first` (s ← c → t) and
/// `second` (t ← c' → u) via `lambda: c'' → c` and `lambda2: c'' → c'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackWitness {
    pub target: usize,
    pub first: usize,
    pub second: usize,
    pub lambda: SparseMatrix,
    pub lambda2: SparseMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackOutcome {
    pub kept: Vec<Span>,
    pub removed: Vec<usize>,
    /// Witness index with the reason it was rejected.
    pub rejected: Vec<(usize, String)>,
}

/// Removes spans whose relations are generated by their factors, in witness
/// order. A factor must be a different span that is trivial or still present.
pub fn pullback_reduce(spans: &[Span], witnesses: &[PullbackWitness]) -> PullbackOutcome {
    let mut alive = vec![true; spans.len()];
    let mut removed = Vec::new();
    let mut rejected = Vec::new();
    for (wi, w) in witnesses.iter().enumerate() {
        match check_witness(spans, &alive, w) {
            Ok(()) => {
                alive[w.target] = false;
                removed.push(w.target);
            }
            Err(reason) => rejected.push((wi, reason)),
        }
    }
    PullbackOutcome {
        kept: spans
            .iter()
            .zip(&alive)
            .filter(|(_, a)| **a)
            .map(|(s, _)| s.clone())
            .collect(),
        removed,
        rejected,
    }
}

fn check_witness(spans: &[Span], alive: &[bool], w: &PullbackWitness) -> std::result::Result<(), String> {
    let get = |i: usize| spans.get(i).ok_or_else(|| format!("no span {i}"));
    let (target, f1, f2) = (get(w.target)?, get(w.first)?, get(w.second)?);
    if !alive[w.target] {
        return Err(format!("span {} was already removed", target.id));
    }
    for (i, f) in [(w.first, f1), (w.second, f2)] {
        if i == w.target {
            return Err(format!("span {} cannot witness itself", f.id));
        }
        if !alive[i] && !f.is_trivial() {
            return Err(format!("factor {} was removed", f.id));
        }
    }
    if target.left.0 != f1.left.0 || f1.right.0 != f2.left.0 || f2.right.0 != target.right.0 {
        return Err("factor spans do not chain from the target's ends".into());
    }
    let prod = |a: &SparseMatrix, b: &SparseMatrix| a.mul(b).map_err(|e| e.to_string());
    if prod(&f1.left.1, &w.lambda)? != target.left.1 {
        return Err("left leg does not factor through the first span".into());
    }
    if prod(&f2.right.1, &w.lambda2)? != target.right.1 {
        return Err("right leg does not factor through the second span".into());
    }
    if prod(&f1.right.1, &w.lambda)? != prod(&f2.left.1, &w.lambda2)? {
        return Err("middle square does not commute".into());
    }
    Ok(())
}

/// The presentation on `blocks` with the relations of `spans`.
pub fn presentation_from_spans(ring: &Ring, blocks: &[Block], spans: &[Span]) -> Result<Presentation> {
    let mut rb = RelationBuilder::new(ring, blocks);
    for s in spans {
        rb.push_difference((&s.left.0, &s.left.1), (&s.right.0, &s.right.1))?;
    }
    rb.finish(blocks.to_vec())
}

/// Blocks for every vertex of `g`, in order.
pub fn blocks_of(g: &FunctorGraph) -> Vec<Block> {
    g.all_blocks()
}

/// The spans of the brute-force presentation: one per edge, `src ← src → dst`.
pub fn edge_spans(g: &FunctorGraph) -> Vec<Span> {
    g.edges
        .iter()
        .map(|e| Span {
            id: e.id.clone(),
            center: e.map.ncols(),
            left: (e.src.clone(), SparseMatrix::identity(g.ring.clone(), e.map.ncols())),
            right: (e.dst.clone(), e.map.clone()),
        })
        .collect()
}
