//! Random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bnskein::cobordism::{ComponentSpec, DecoratedCobordism};
use bnskein::colimit::FunctorGraph;
use bnskein::frobenius::{permutation_matrix, FrobeniusAlgebra};
use bnskein::skein::{EdgePart, SurfaceComponent, SurfaceVertex, TunnelingEdge, TunnelingGraph};
use bnskein::tensor::{Label, Merge};
use bnskein_exact::SparseMatrix;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn labels(prefix: &str, n: usize) -> Vec<Label> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn random_cobordism(
    rng: &mut ChaCha8Rng,
    inputs: &[Label],
    outputs: &[Label],
    prefix: &str,
    max_comps: usize,
) -> DecoratedCobordism {
    let n = rng.gen_range(1..=max_comps);
    let mut comps: Vec<ComponentSpec> = (0..n)
        .map(|i| ComponentSpec {
            id: format!("{prefix}{i}"),
            genus: rng.gen_range(0..=3),
            inputs: vec![],
            outputs: vec![],
        })
        .collect();
    for j in inputs {
        let c = rng.gen_range(0..n);
        comps[c].inputs.push(j.clone());
    }
    for j in outputs {
        let c = rng.gen_range(0..n);
        comps[c].outputs.push(j.clone());
    }
    DecoratedCobordism::from_components(inputs, outputs, &comps).unwrap()
}

/// Whether glueing `top` onto `bottom` closes a cycle in some component.
pub fn has_cycle(top: &DecoratedCobordism, bottom: &DecoratedCobordism) -> bool {
    let merge = Merge::compute(
        &bottom.genus.keys().cloned().collect(),
        &bottom.phi2,
        &top.genus.keys().cloned().collect(),
        &top.phi1,
    )
    .unwrap();
    merge
        .classes
        .iter()
        .any(|(c, members)| merge.circles[c] + 1 > members.len())
}

/// `I^{⊗i} ⊗ x ⊗ I^{⊗j}`
fn sandwich(a: &FrobeniusAlgebra, i: usize, x: &SparseMatrix, j: usize) -> SparseMatrix {
    a.id_n(i).kron(x).unwrap().kron(&a.id_n(j)).unwrap()
}

/// A random composite of structure maps `V^{⊗from} → V^{⊗to}`.
pub fn random_structure_map(a: &FrobeniusAlgebra, rng: &mut ChaCha8Rng, from: usize, to: usize) -> SparseMatrix {
    let mut n = from;
    let mut m = a.id_n(from);
    let mut extra = rng.gen_range(0..=2);
    while n != to || extra > 0 {
        let step = if n < to {
            if rng.gen_bool(0.6) && n > 0 {
                let i = rng.gen_range(0..n);
                sandwich(a, i, a.delta(), n - i - 1)
            } else {
                let i = rng.gen_range(0..=n);
                sandwich(a, i, a.mu(), n - i)
            }
        } else if n > to {
            if n >= 2 && rng.gen_bool(0.6) {
                let i = rng.gen_range(0..n - 1);
                sandwich(a, i, a.m(), n - i - 2)
            } else {
                let i = rng.gen_range(0..n);
                sandwich(a, i, a.eps(), n - i - 1)
            }
        } else {
            extra -= 1;
            if n == 0 {
                continue;
            }
            let i = rng.gen_range(0..n);
            if n >= 2 && rng.gen_bool(0.5) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                permutation_matrix(a.ring(), a.rank(), &perm)
            } else {
                sandwich(a, i, a.handle(), n - i - 1)
            }
        };
        n = tensor_degree(&step, a.rank());
        m = step.mul(&m).unwrap();
    }
    m
}

/// `d` with `nrows = r^d`.
fn tensor_degree(m: &SparseMatrix, r: usize) -> usize {
    assert!(r >= 2, "tensor degree is ambiguous for rank 1");
    let mut size = m.nrows();
    let mut d = 0;
    while size > 1 {
        size /= r;
        d += 1;
    }
    d
}

/// Vertices carry tensor powers `V^{⊗t}` (`t ≤ max_tensor`); edges are random
/// structure maps. Some edges come with a left inverse in the opposite direction.
pub fn random_functor_graph(
    a: &FrobeniusAlgebra,
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_tensor: usize,
    max_edges: usize,
) -> (FunctorGraph, Vec<usize>) {
    let nv = rng.gen_range(1..=max_vertices);
    let powers: Vec<usize> = (0..nv).map(|_| rng.gen_range(0..=max_tensor)).collect();
    let mut g = FunctorGraph::new(a.ring().clone());
    for (i, &t) in powers.iter().enumerate() {
        g.add_vertex(format!("v{i}"), a.rank().pow(t as u32)).unwrap();
    }
    let ne = rng.gen_range(0..=max_edges);
    while g.edges.len() < ne {
        let (s, d) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
        let f = random_structure_map(a, rng, powers[s], powers[d]);
        let id = g.edges.len();
        g.add_edge(format!("e{id}"), &format!("v{s}"), &format!("v{d}"), f.clone())
            .unwrap();
        if g.edges.len() < ne && s != d && powers[d] == powers[s] + 1 && rng.gen_bool(0.5) {
            // replace f by a split, which has the left inverse ε on the new factor
            let i = rng.gen_range(0..powers[s].max(1));
            let split = if powers[s] == 0 {
                a.mu().clone()
            } else {
                sandwich(a, i, a.delta(), powers[s] - i - 1)
            };
            let back = if powers[s] == 0 {
                a.eps().clone()
            } else {
                sandwich(a, i, &a.eps().kron(&a.id()).unwrap(), powers[s] - i - 1)
            };
            let last = g.edges.len() - 1;
            g.edges[last].map = split;
            let id = g.edges.len();
            g.add_edge(format!("e{id}"), &format!("v{d}"), &format!("v{s}"), back)
                .unwrap();
        }
    }
    (g, powers)
}

/// A random terminal set: a random subset, enlarged until every vertex reaches it.
pub fn random_terminal(g: &FunctorGraph, rng: &mut ChaCha8Rng) -> BTreeSet<String> {
    let mut t: BTreeSet<String> = g
        .vertices
        .iter()
        .filter(|_| rng.gen_bool(0.3))
        .map(|v| v.id.clone())
        .collect();
    loop {
        let mut reach: BTreeSet<String> = t.clone();
        loop {
            let before = reach.len();
            for e in &g.edges {
                if reach.contains(&e.dst) {
                    reach.insert(e.src.clone());
                }
            }
            if reach.len() == before {
                break;
            }
        }
        match g.vertices.iter().find(|v| !reach.contains(&v.id)) {
            Some(v) => {
                t.insert(v.id.clone());
            }
            None => return t,
        }
    }
}

/// A connected-surface chain: vertex `i` has genus nondecreasing in `i` and one
/// edge to vertex `i − 1`, in a random direction, with tunneling number in
/// `1..=max_tau`.
pub fn random_connected_chain(rng: &mut ChaCha8Rng, max_vertices: usize, max_tau: u32) -> TunnelingGraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut genus = 0;
    let mut g = TunnelingGraph {
        boundary: vec!["a".into()],
        ..Default::default()
    };
    for i in 0..n {
        genus += rng.gen_range(0..=2);
        g.vertices.push(SurfaceVertex {
            id: format!("S{i}"),
            components: vec![SurfaceComponent {
                label: format!("s{i}"),
                genus,
                boundary: vec!["a".into()],
            }],
        });
    }
    let edge = |i: usize, j: usize, tau: u32, id: usize| TunnelingEdge {
        id: format!("t{id}"),
        src: format!("S{i}"),
        dst: format!("S{j}"),
        parts: vec![EdgePart {
            src: vec![format!("s{i}")],
            dst: vec![format!("s{j}")],
            tau,
        }],
    };
    for i in 1..n {
        let tau = rng.gen_range(1..=max_tau);
        let id = g.edges.len();
        // either orientation
        if rng.gen_bool(0.5) {
            g.edges.push(edge(i, i - 1, tau, id));
        } else {
            g.edges.push(edge(i - 1, i, tau, id));
        }
    }
    g
}

/// Two vertices of closed components, `S` with genera `src` and `T` with
/// genera `dst`, joined by one edge whose parts index into the components.
pub fn two_vertex(src: &[u32], dst: &[u32], parts: &[(&[usize], &[usize], u32)]) -> TunnelingGraph {
    let vertex = |id: &str, prefix: &str, genera: &[u32]| SurfaceVertex {
        id: id.into(),
        components: genera
            .iter()
            .enumerate()
            .map(|(i, &genus)| SurfaceComponent {
                label: format!("{prefix}{i}"),
                genus,
                boundary: Vec::new(),
            })
            .collect(),
    };
    TunnelingGraph {
        boundary: Vec::new(),
        vertices: vec![vertex("S", "s", src), vertex("T", "t", dst)],
        edges: vec![TunnelingEdge {
            id: "e".into(),
            src: "S".into(),
            dst: "T".into(),
            parts: parts
                .iter()
                .map(|(a, b, tau)| EdgePart {
                    src: a.iter().map(|i| format!("s{i}")).collect(),
                    dst: b.iter().map(|i| format!("t{i}")).collect(),
                    tau: *tau,
                })
                .collect(),
        }],
        loops: Vec::new(),
    }
}
