//! Tunneling graphs and the modules they present.
//!
//! Vertices are surfaces (components with genus and boundary), edges are
//! tunneling invariants. Each edge compiles to a span of tensor-power maps and
//! the module is the colimit over the resulting functor graph.

use std::collections::{BTreeMap, BTreeSet};

use bnskein_exact::{cokernel_invariants, rank, ModuleInvariants, Ring, Scalar, SparseMatrix};

use crate::colimit::{colim_terminal, FunctorGraph, Presentation};
use crate::error::{Error, Result};
use crate::frobenius::{decode, encode, FrobeniusAlgebra};
use crate::tensor::{Label, LinMap, TensorObject};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceComponent {
    pub label: Label,
    pub genus: u32,
    pub boundary: Vec<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceVertex {
    pub id: String,
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceVertex {
    pub fn component(&self, label: &str) -> Option<&SurfaceComponent> {
        self.components.iter().find(|c| c.label == label)
    }

    pub fn labels(&self) -> Vec<Label> {
        let mut v: Vec<Label> = self.components.iter().map(|c| c.label.clone()).collect();
        v.sort();
        v
    }

    pub fn total_genus(&self) -> u32 {
        self.components.iter().map(|c| c.genus).sum()
    }

    pub fn tensor_object(&self, boundary: &[Label]) -> Result<TensorObject> {
        let mut phi = BTreeMap::new();
        for c in &self.components {
            for b in &c.boundary {
                phi.insert(b.clone(), c.label.clone());
            }
        }
        let obj = TensorObject {
            j: boundary.iter().cloned().collect(),
            k: self.components.iter().map(|c| c.label.clone()).collect(),
            phi,
        };
        obj.validate()?;
        Ok(obj)
    }
}

/// One block of a tunneling invariant's partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePart {
    pub src: Vec<Label>,
    pub dst: Vec<Label>,
    pub tau: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TunnelingEdge {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub parts: Vec<EdgePart>,
}

/// An isotopy loop permuting closed components of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopEdge {
    pub id: String,
    pub vertex: String,
    pub perm: BTreeMap<Label, Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TunnelingGraph {
    pub boundary: Vec<Label>,
    pub vertices: Vec<SurfaceVertex>,
    pub edges: Vec<TunnelingEdge>,
    pub loops: Vec<LoopEdge>,
}

fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

impl TunnelingGraph {
    pub fn vertex(&self, id: &str) -> Option<&SurfaceVertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn validate(&self) -> Result<()> {
        let alpha: BTreeSet<&Label> = self.boundary.iter().collect();
        if alpha.len() != self.boundary.len() {
            return Err(validation("duplicate boundary label"));
        }
        let mut ids = BTreeSet::new();
        for v in &self.vertices {
            if !ids.insert(&v.id) {
                return Err(validation(format!("duplicate vertex {}", v.id)));
            }
            let mut labels = BTreeSet::new();
            let mut covered = BTreeSet::new();
            for c in &v.components {
                if !labels.insert(&c.label) {
                    return Err(validation(format!("vertex {}: duplicate component {}", v.id, c.label)));
                }
                for b in &c.boundary {
                    if !alpha.contains(b) {
                        return Err(validation(format!("vertex {}: unknown boundary label {b}", v.id)));
                    }
                    if !covered.insert(b) {
                        return Err(validation(format!("vertex {}: boundary {b} is used twice", v.id)));
                    }
                }
            }
            if covered != alpha {
                return Err(validation(format!(
                    "vertex {}: component boundaries do not cover the boundary set",
                    v.id
                )));
            }
        }
        for e in &self.edges {
            self.validate_edge(e)?;
        }
        for l in &self.loops {
            self.validate_loop(l)?;
        }
        Ok(())
    }

    fn endpoints(&self, e: &TunnelingEdge) -> Result<(&SurfaceVertex, &SurfaceVertex)> {
        match (self.vertex(&e.src), self.vertex(&e.dst)) {
            (Some(s), Some(d)) => Ok((s, d)),
            _ => Err(validation(format!("edge {}: unknown endpoint", e.id))),
        }
    }

    pub fn validate_edge(&self, e: &TunnelingEdge) -> Result<()> {
        let (s, d) = self.endpoints(e)?;
        let mut seen_s = BTreeSet::new();
        let mut seen_d = BTreeSet::new();
        for (i, p) in e.parts.iter().enumerate() {
            let name = format!("edge {} part {i}", e.id);
            if p.src.is_empty() && p.dst.is_empty() {
                return Err(validation(format!("{name}: both sides are empty")));
            }
            let mut bs = BTreeSet::new();
            let mut bd = BTreeSet::new();
            for l in &p.src {
                let c = s
                    .component(l)
                    .ok_or_else(|| validation(format!("{name}: {} has no component {l}", s.id)))?;
                if !seen_s.insert(l) {
                    return Err(validation(format!("{name}: source component {l} appears twice")));
                }
                bs.extend(c.boundary.iter());
            }
            for l in &p.dst {
                let c = d
                    .component(l)
                    .ok_or_else(|| validation(format!("{name}: {} has no component {l}", d.id)))?;
                if !seen_d.insert(l) {
                    return Err(validation(format!("{name}: target component {l} appears twice")));
                }
                bd.extend(c.boundary.iter());
            }
            if bs != bd {
                return Err(validation(format!("{name}: boundary on the two sides differs")));
            }
        }
        if seen_s.len() != s.components.len() || seen_d.len() != d.components.len() {
            return Err(validation(format!("edge {}: parts do not cover all components", e.id)));
        }
        Ok(())
    }

    fn validate_loop(&self, l: &LoopEdge) -> Result<()> {
        let v = self
            .vertex(&l.vertex)
            .ok_or_else(|| validation(format!("loop {}: unknown vertex {}", l.id, l.vertex)))?;
        let labels: BTreeSet<Label> = v.labels().into_iter().collect();
        let dom: BTreeSet<Label> = l.perm.keys().cloned().collect();
        let img: BTreeSet<Label> = l.perm.values().cloned().collect();
        if dom != labels || img != labels {
            return Err(validation(format!(
                "loop {}: not a permutation of the components",
                l.id
            )));
        }
        for (a, b) in &l.perm {
            if a == b {
                continue;
            }
            let (ca, cb) = (v.component(a).unwrap(), v.component(b).unwrap());
            if !ca.boundary.is_empty() || !cb.boundary.is_empty() || ca.genus != cb.genus {
                return Err(validation(format!(
                    "loop {}: {a} ↦ {b} must swap closed components of equal genus",
                    l.id
                )));
            }
        }
        Ok(())
    }
}

/// The span `F(src) ← V^{⊗center} → F(dst)` of one tunneling edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledEdge {
    pub center: Vec<Label>,
    pub f_src: LinMap,
    pub f_dst: LinMap,
}

/// Per part, the side with smaller total genus gets `d ∘ 𝔨^{τ+|Δg|}`, the
/// other `d ∘ 𝔨^τ`.
pub fn compile_edge(alg: &FrobeniusAlgebra, graph: &TunnelingGraph, e: &TunnelingEdge) -> Result<CompiledEdge> {
    graph.validate_edge(e)?;
    let (s, d) = graph.endpoints(e)?;
    let r = alg.rank();
    let genus = |v: &SurfaceVertex, ls: &[Label]| -> u32 { ls.iter().map(|l| v.component(l).unwrap().genus).sum() };
    let width = e.parts.len().to_string().len();
    let mut center = Vec::new();
    let mut src_parts = Vec::new();
    let mut dst_parts = Vec::new();
    for (i, p) in e.parts.iter().enumerate() {
        let c = format!("p{i:0width$}");
        let (gs, gd) = (genus(s, &p.src), genus(d, &p.dst));
        let extra_src = gd.saturating_sub(gs);
        let extra_dst = gs.saturating_sub(gd);
        let ms = alg
            .d_n(p.src.len())
            .mul(&alg.handle_pow((p.tau + extra_src) as usize))?;
        let md = alg
            .d_n(p.dst.len())
            .mul(&alg.handle_pow((p.tau + extra_dst) as usize))?;
        src_parts.push(LinMap::from_positional(ms, r, std::slice::from_ref(&c), &p.src)?);
        dst_parts.push(LinMap::from_positional(md, r, std::slice::from_ref(&c), &p.dst)?);
        center.push(c);
    }
    Ok(CompiledEdge {
        center,
        f_src: LinMap::tensor_all(alg.ring(), r, &src_parts)?,
        f_dst: LinMap::tensor_all(alg.ring(), r, &dst_parts)?,
    })
}

/// The functor graph of a tunneling graph: surface vertices, one center vertex
/// per tunneling edge with maps to both ends, and permutation loops.
pub fn functor_graph(alg: &FrobeniusAlgebra, graph: &TunnelingGraph) -> Result<FunctorGraph> {
    graph.validate()?;
    let r = alg.rank();
    let mut g = FunctorGraph::new(alg.ring().clone());
    for v in &graph.vertices {
        g.add_object_vertex(v.id.clone(), v.tensor_object(&graph.boundary)?, r)?;
    }
    for e in &graph.edges {
        let c = compile_edge(alg, graph, e)?;
        let center = format!("{}/center", e.id);
        g.add_vertex(center.clone(), r.pow(c.center.len() as u32))?;
        g.add_edge(format!("{}/src", e.id), &center, &e.src, c.f_src.matrix().clone())?;
        g.add_edge(format!("{}/dst", e.id), &center, &e.dst, c.f_dst.matrix().clone())?;
    }
    for l in &graph.loops {
        let m = LinMap::relabeling(alg.ring(), r, &l.perm)?;
        g.add_edge(l.id.clone(), &l.vertex, &l.vertex, m.matrix().clone())?;
    }
    Ok(g)
}

/// Presents the module of `graph` over `ring` (rationals or integers).
pub fn present(
    alg: &FrobeniusAlgebra,
    graph: &TunnelingGraph,
    ring: &Ring,
) -> Result<(Presentation, ModuleInvariants)> {
    let alg = alg.to_ring(ring)?;
    let g = functor_graph(&alg, graph)?;
    let terminal: BTreeSet<String> = graph.vertices.iter().map(|v| v.id.clone()).collect();
    colim_terminal(&g, &terminal, None)
}

/// `V/𝔨^n` as a module.
pub fn handle_quotient(alg: &FrobeniusAlgebra, n: u32) -> Result<ModuleInvariants> {
    Ok(cokernel_invariants(&alg.handle_pow(n as usize), alg.rank())?)
}

/// `⊕_S V/𝔨^{ρ(S)}`, where surfaces are ordered by genus (ties keep input
/// order) and `ρ(S)` is the least tunneling number over edges to earlier
/// surfaces; a surface with no such edge contributes `V`.
pub fn local_connected_closed_form(alg: &FrobeniusAlgebra, graph: &TunnelingGraph) -> Result<ModuleInvariants> {
    graph.validate()?;
    let mut order: Vec<(u32, usize, &SurfaceVertex)> = Vec::new();
    for (i, v) in graph.vertices.iter().enumerate() {
        if v.components.len() != 1 {
            return Err(validation(format!("vertex {} is not a connected surface", v.id)));
        }
        order.push((v.total_genus(), i, v));
    }
    order.sort_by_key(|(g, i, _)| (*g, *i));
    let position: BTreeMap<&str, usize> = order
        .iter()
        .enumerate()
        .map(|(p, (_, _, v))| (v.id.as_str(), p))
        .collect();
    let mut rho: Vec<Option<u32>> = vec![None; order.len()];
    for e in &graph.edges {
        let (ps, pd) = (position[e.src.as_str()], position[e.dst.as_str()]);
        if ps == pd {
            continue;
        }
        let tau = e.parts.iter().map(|p| p.tau).min().unwrap_or(0);
        let later = ps.max(pd);
        rho[later] = Some(rho[later].map_or(tau, |t| t.min(tau)));
    }
    let mut out = ModuleInvariants::free(0);
    for r in rho {
        out = out.direct_sum(&match r {
            None => ModuleInvariants::free(alg.rank()),
            Some(t) => handle_quotient(alg, t)?,
        });
    }
    Ok(out)
}

/// `S_k` for `k ≡ parity (mod 2)`, `k ≤ max_k`: `k` parallel closed genus-`g`
/// components. Each edge `S_{k+2} → S_k` tubes two adjacent components
/// together and caps the result; loops permute components.
pub fn sigma_i_graph(g: u32, parity: u32, max_k: u32) -> TunnelingGraph {
    let name = |k: u32| format!("S{k}");
    let comp = |i: u32| format!("c{i}");
    let mut graph = TunnelingGraph::default();
    let ks: Vec<u32> = (0..=max_k).filter(|k| k % 2 == parity % 2).collect();
    for &k in &ks {
        graph.vertices.push(SurfaceVertex {
            id: name(k),
            components: (1..=k)
                .map(|i| SurfaceComponent {
                    label: comp(i),
                    genus: g,
                    boundary: Vec::new(),
                })
                .collect(),
        });
    }
    for &k in &ks {
        if k + 2 > max_k {
            continue;
        }
        for i in 1..=k + 1 {
            let mut parts = vec![EdgePart {
                src: vec![comp(i), comp(i + 1)],
                dst: Vec::new(),
                tau: 0,
            }];
            // remaining components of S_{k+2} map in order onto those of S_k
            let rest: Vec<u32> = (1..=k + 2).filter(|&j| j != i && j != i + 1).collect();
            for (t, j) in rest.into_iter().enumerate() {
                parts.push(EdgePart {
                    src: vec![comp(j)],
                    dst: vec![comp(t as u32 + 1)],
                    tau: 0,
                });
            }
            graph.edges.push(TunnelingEdge {
                id: format!("join{}_{}", k + 2, i),
                src: name(k + 2),
                dst: name(k),
                parts,
            });
        }
    }
    for &k in &ks {
        for (n, perm) in permutations(k as usize).into_iter().enumerate() {
            if perm.iter().enumerate().all(|(a, &b)| a == b) {
                continue;
            }
            graph.loops.push(LoopEdge {
                id: format!("perm{k}_{n}"),
                vertex: name(k),
                perm: perm
                    .iter()
                    .enumerate()
                    .map(|(a, &b)| (comp(a as u32 + 1), comp(b as u32 + 1)))
                    .collect(),
            });
        }
    }
    graph
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn require_field_like(alg: &FrobeniusAlgebra) -> Result<FrobeniusAlgebra> {
    match alg.ring() {
        Ring::Polynomial(_) => Err(validation(
            "graded dimensions need rational or integer structure constants",
        )),
        _ => alg.to_ring(&Ring::Rational),
    }
}

/// Per-degree dimensions `dim W_{≤d} − dim W_{≤d−2}` of the `Σ × I` module, for
/// `d ≤ max_degree` of the given parity, computed by presenting the truncated
/// tunneling graphs.
pub fn sigma_i_pipeline_dims(
    alg: &FrobeniusAlgebra,
    g: u32,
    parity: u32,
    max_degree: u32,
) -> Result<Vec<(u32, usize)>> {
    let alg = require_field_like(alg)?;
    let mut out = Vec::new();
    let mut prev = 0;
    for d in (0..=max_degree).filter(|d| d % 2 == parity % 2) {
        let (_, inv) = present(&alg, &sigma_i_graph(g, parity, d), &Ring::Rational)?;
        out.push((d, inv.dimension() - prev));
        prev = inv.dimension();
    }
    Ok(out)
}

/// Per-degree dimensions of the truncated quotient of the tensor algebra by
/// `u ⊗ Δ(e) ⊗ w − ε(𝔨^{2g} e) u ⊗ w` and the transpositions of adjacent
/// tensor factors, computed directly on words.
pub fn tensor_algebra_oracle(
    alg: &FrobeniusAlgebra,
    g: u32,
    parity: u32,
    max_degree: u32,
) -> Result<Vec<(u32, usize)>> {
    let alg = require_field_like(alg)?;
    let r = alg.rank();
    let cap = alg.eps().mul(&alg.handle_pow(2 * g as usize))?;
    let cap: Vec<Scalar> = (0..r).map(|e| cap.get(0, e)).collect();
    let comul: Vec<BTreeMap<(usize, usize), Scalar>> = (0..r)
        .map(|e| alg.comultiply(&alg.basis_element(e)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut prev = 0;
    for top in (0..=max_degree).filter(|d| d % 2 == parity % 2) {
        let degrees: Vec<u32> = (0..=top).filter(|d| d % 2 == parity % 2).collect();
        let mut offset = BTreeMap::new();
        let mut total = 0usize;
        for &d in &degrees {
            offset.insert(d, total);
            total += r.pow(d);
        }
        let mut cols: Vec<BTreeMap<usize, Scalar>> = Vec::new();
        for &d in &degrees {
            let n = d as usize;
            for word in 0..r.pow(d) {
                let letters = decode(word, r, n);
                for i in 0..n.saturating_sub(1) {
                    let mut swapped = letters.clone();
                    swapped.swap(i, i + 1);
                    if swapped != letters {
                        let mut c = BTreeMap::new();
                        c.insert(offset[&d] + word, Scalar::one(&Ring::Rational));
                        c.insert(offset[&d] + encode(&swapped, r), -Scalar::one(&Ring::Rational));
                        cols.push(c);
                    }
                }
            }
            if d < 2 {
                continue;
            }
            let short = d - 2;
            for base in 0..r.pow(short) {
                let rest = decode(base, r, short as usize);
                for i in 0..=rest.len() {
                    for e in 0..r {
                        let mut c: BTreeMap<usize, Scalar> = BTreeMap::new();
                        for ((a, b), s) in &comul[e] {
                            let mut w = rest[..i].to_vec();
                            w.push(*a);
                            w.push(*b);
                            w.extend_from_slice(&rest[i..]);
                            bnskein_exact::matrix::add_into(&mut c, offset[&d] + encode(&w, r), s)?;
                        }
                        bnskein_exact::matrix::add_into(&mut c, offset[&short] + base, &-&cap[e])?;
                        if !c.is_empty() {
                            cols.push(c);
                        }
                    }
                }
            }
        }
        let m = SparseMatrix::from_columns(Ring::Rational, total, cols)?;
        let dim = total - rank(&m)?;
        out.push((top, dim - prev));
        prev = dim;
    }
    Ok(out)
}

/// Exponent vectors of degree exactly `d` in `r` variables, in lexicographic order.
fn monomials(r: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(r: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == r - 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            go(r, d - a, prefix, out);
            prefix.pop();
        }
    }
    if r == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(r, d, &mut Vec::new(), &mut out);
    out
}

/// Generators `sym Δ(e_i) − ε(𝔨 e_i)` of the ideal defining the unorientable
/// module, as polynomials in the basis of `V`.
pub fn unorientable_generators(alg: &FrobeniusAlgebra) -> Result<Vec<BTreeMap<Vec<u32>, Scalar>>> {
    let r = alg.rank();
    let ek = alg.eps().mul(alg.handle())?;
    let mut out = Vec::new();
    for e in 0..r {
        let mut p: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for ((a, b), s) in alg.comultiply(&alg.basis_element(e))? {
            let mut m = vec![0u32; r];
            m[a] += 1;
            m[b] += 1;
            add_poly_term(&mut p, m, &s)?;
        }
        add_poly_term(&mut p, vec![0; r], &-ek.get(0, e))?;
        out.push(p);
    }
    Ok(out)
}

fn add_poly_term(p: &mut BTreeMap<Vec<u32>, Scalar>, m: Vec<u32>, s: &Scalar) -> Result<()> {
    if s.is_zero() {
        return Ok(());
    }
    let next = match p.get(&m) {
        Some(v) => v.try_add(s)?,
        None => s.clone(),
    };
    if next.is_zero() {
        p.remove(&m);
    } else {
        p.insert(m, next);
    }
    Ok(())
}

/// The truncated quotient `S_{≤D} / span{m · rel : deg m ≤ D − 2}` of the
/// symmetric algebra, as module invariants over the algebra's ring.
pub fn unorientable_truncated(alg: &FrobeniusAlgebra, max_degree: u32) -> Result<ModuleInvariants> {
    let r = alg.rank();
    let ring = alg.ring().clone();
    let mut index = BTreeMap::new();
    for d in 0..=max_degree {
        for m in monomials(r, d) {
            let n = index.len();
            index.insert(m, n);
        }
    }
    let gens = unorientable_generators(alg)?;
    let mut cols = Vec::new();
    for d in 0..=max_degree.saturating_sub(2) {
        if max_degree < 2 {
            break;
        }
        for m in monomials(r, d) {
            for rel in &gens {
                let mut c = BTreeMap::new();
                for (mono, s) in rel {
                    let prod: Vec<u32> = mono.iter().zip(&m).map(|(a, b)| a + b).collect();
                    bnskein_exact::matrix::add_into(&mut c, index[&prod], s)?;
                }
                if !c.is_empty() {
                    cols.push(c);
                }
            }
        }
    }
    let mat = SparseMatrix::from_columns(ring, index.len(), cols)?;
    Ok(cokernel_invariants(&mat, index.len())?)
}

/// Graded dimensions `dim Q_{≤d} − dim Q_{≤d−1}` of `(SV)₋ ⊗ V^{⊗n}` for
/// `d ≤ max_degree`, over the rationals.
pub fn unorientable_graded(alg: &FrobeniusAlgebra, n: u32, max_degree: u32) -> Result<Vec<(u32, usize)>> {
    let alg = require_field_like(alg)?;
    let factor = alg.rank().pow(n);
    let mut out = Vec::new();
    let mut prev = 0;
    for d in 0..=max_degree {
        let dim = unorientable_truncated(&alg, d)?.dimension();
        out.push((d, (dim - prev) * factor));
        prev = dim;
    }
    Ok(out)
}

/// `Q_{≤D} ⊗ V^{⊗n}` over the algebra's own ring (integer torsion allowed).
pub fn unorientable_module(alg: &FrobeniusAlgebra, n: u32, max_degree: u32) -> Result<ModuleInvariants> {
    let q = unorientable_truncated(alg, max_degree)?;
    Ok(q.repeat(alg.rank().pow(n)))
}

/// Genus sequence: total genus, then for each subset size from `|S| − 1` down
/// to 1 the genera of all unions of that many components, ascending.
pub fn genus_sequence(genera: &[u32]) -> Vec<u32> {
    let n = genera.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![genera.iter().sum()];
    for size in (1..n).rev() {
        let mut level: Vec<u32> = (0u64..1 << n)
            .filter(|mask| mask.count_ones() as usize == size)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| genera[i]).sum())
            .collect();
        level.sort_unstable();
        out.extend(level);
    }
    out
}

impl SurfaceVertex {
    pub fn genus_sequence(&self) -> Vec<u32> {
        genus_sequence(&self.components.iter().map(|c| c.genus).collect::<Vec<_>>())
    }
}
