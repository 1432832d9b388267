//! JSON documents for algebras, cobordisms, tunneling graphs and functor
//! graphs, with conversions to and from the library types.
//!
//! Serializing a parsed document always goes through the library type, so
//! `serialize(parse(f))` is a canonical form and a fixpoint of the round trip.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use bnskein::cobordism::{ComponentSpec, DecoratedCobordism};
use bnskein::colimit::FunctorGraph;
use bnskein::frobenius::{builtin, FrobeniusAlgebra, BUILTIN_NAMES};
use bnskein::skein::{EdgePart, LoopEdge, SurfaceComponent, SurfaceVertex, TunnelingEdge, TunnelingGraph};
use bnskein::tensor::{realize, ElementaryMorphism, Label, TensorObject};
use bnskein_exact::{Ring, Scalar, SparseMatrix};
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A coefficient: an exact string, or a bare JSON integer for convenience.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn parse(&self, ring: &Ring, at: &str) -> Result<Scalar> {
        let text = match self {
            Coeff::Int(n) => n.to_string(),
            Coeff::Text(s) => s.clone(),
        };
        Scalar::parse(ring, &text).map_err(|e| CliError::schema(at, e.to_string()))
    }

    fn of(s: &Scalar) -> Coeff {
        Coeff::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vars: Vec<String>,
}

impl RingSpec {
    pub fn to_ring(&self, at: &str) -> Result<Ring> {
        match self.kind.as_str() {
            "int" => Ok(Ring::Integer),
            "rat" => Ok(Ring::Rational),
            "poly_int" => Ok(Ring::polynomial(self.vars.iter().cloned())),
            other => Err(CliError::schema(
                format!("{at}.kind"),
                format!("unknown ring kind {other:?}; expected int, rat or poly_int"),
            )),
        }
    }

    pub fn of(ring: &Ring) -> RingSpec {
        RingSpec {
            kind: ring.kind_name().to_string(),
            vars: ring.vars().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub ring: RingSpec,
    pub basis: Vec<String>,
    pub unit: Vec<Coeff>,
    pub counit: Vec<Coeff>,
    /// `mul[i][j]` is `e_i e_j` in coordinates.
    pub mul: Vec<Vec<Vec<Coeff>>>,
    /// `comul[i]` lists `[j, k, c]` with `Δ(e_i) = Σ c e_j ⊗ e_k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<Vec<(usize, usize, Coeff)>>>,
}

impl AlgebraSpec {
    /// Checks the tensor shapes first so that ragged arrays are reported by
    /// their JSON path.
    pub fn to_algebra(&self, at: &str) -> Result<FrobeniusAlgebra> {
        let ring = self.ring.to_ring(&format!("{at}.ring"))?;
        let r = self.basis.len();
        if r == 0 {
            return Err(CliError::schema(format!("{at}.basis"), "basis is empty"));
        }
        let vector = |v: &[Coeff], path: String| -> Result<Vec<Scalar>> {
            if v.len() != r {
                return Err(CliError::schema(
                    path,
                    format!("expected {r} coefficients, found {}", v.len()),
                ));
            }
            v.iter()
                .enumerate()
                .map(|(i, c)| c.parse(&ring, &format!("{path}[{i}]")))
                .collect()
        };
        let unit = vector(&self.unit, format!("{at}.unit"))?;
        let counit = vector(&self.counit, format!("{at}.counit"))?;
        if self.mul.len() != r {
            return Err(CliError::schema(
                format!("{at}.mul"),
                format!("expected {r} rows, found {}", self.mul.len()),
            ));
        }
        let mut mul = Vec::new();
        for (i, row) in self.mul.iter().enumerate() {
            if row.len() != r {
                return Err(CliError::schema(
                    format!("{at}.mul[{i}]"),
                    format!("expected {r} entries, found {}", row.len()),
                ));
            }
            let row: Vec<Vec<Scalar>> = row
                .iter()
                .enumerate()
                .map(|(j, v)| vector(v, format!("{at}.mul[{i}][{j}]")))
                .collect::<Result<_>>()?;
            mul.push(row);
        }
        let comul = match &self.comul {
            None => None,
            Some(c) => {
                if c.len() != r {
                    return Err(CliError::schema(
                        format!("{at}.comul"),
                        format!("expected {r} entries, found {}", c.len()),
                    ));
                }
                let mut out = Vec::new();
                for (i, terms) in c.iter().enumerate() {
                    let mut row = Vec::new();
                    for (t, (j, k, s)) in terms.iter().enumerate() {
                        let path = format!("{at}.comul[{i}][{t}]");
                        if *j >= r || *k >= r {
                            return Err(CliError::schema(path, "basis index out of range"));
                        }
                        row.push((*j, *k, s.parse(&ring, &format!("{path}[2]"))?));
                    }
                    out.push(row);
                }
                Some(out)
            }
        };
        Ok(FrobeniusAlgebra::new(
            ring,
            self.basis.clone(),
            unit,
            counit,
            mul,
            comul,
        )?)
    }

    pub fn of(alg: &FrobeniusAlgebra) -> AlgebraSpec {
        let coeffs = |v: &[Scalar]| v.iter().map(Coeff::of).collect::<Vec<_>>();
        AlgebraSpec {
            ring: RingSpec::of(alg.ring()),
            basis: alg.basis_names().to_vec(),
            unit: coeffs(alg.unit()),
            counit: coeffs(alg.counit()),
            mul: alg
                .mul_tensor()
                .iter()
                .map(|row| row.iter().map(|v| coeffs(v)).collect())
                .collect(),
            comul: Some(
                alg.comul_tensor()
                    .iter()
                    .map(|terms| terms.iter().map(|(j, k, c)| (*j, *k, Coeff::of(c))).collect())
                    .collect(),
            ),
        }
    }
}

/// The algebra slot of a document: a built-in name, a path to an algebra
/// file (relative to the document), or an inline specification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(Box<AlgebraSpec>),
}

impl AlgebraRef {
    pub fn resolve(&self, base: Option<&Path>, verify: bool) -> Result<FrobeniusAlgebra> {
        match self {
            AlgebraRef::Name(n) if BUILTIN_NAMES.contains(&n.as_str()) => Ok(builtin(n)?),
            AlgebraRef::Name(p) => {
                let path = match base {
                    Some(b) => b.join(p),
                    None => PathBuf::from(p),
                };
                load_algebra_file(&path, verify)
            }
            AlgebraRef::Inline(spec) => finish(spec.to_algebra("$.algebra")?, verify),
        }
    }
}

fn finish(alg: FrobeniusAlgebra, verify: bool) -> Result<FrobeniusAlgebra> {
    if verify {
        Ok(alg.into_verified()?)
    } else {
        Ok(alg)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn load_algebra_file(path: &Path, verify: bool) -> Result<FrobeniusAlgebra> {
    let spec: AlgebraSpec = read_json(path)?;
    finish(spec.to_algebra("$")?, verify)
}

/// A built-in name or a path to an algebra file.
pub fn load_algebra(arg: &str, verify: bool) -> Result<FrobeniusAlgebra> {
    AlgebraRef::Name(arg.to_string()).resolve(None, verify)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub id: String,
    pub genus: u32,
    #[serde(rename = "in", default)]
    pub inputs: Vec<Label>,
    #[serde(rename = "out", default)]
    pub outputs: Vec<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobordismDoc {
    pub inputs: Vec<Label>,
    pub outputs: Vec<Label>,
    pub components: Vec<ComponentJson>,
}

impl CobordismDoc {
    pub fn to_cobordism(&self) -> Result<DecoratedCobordism> {
        let comps: Vec<ComponentSpec> = self
            .components
            .iter()
            .map(|c| ComponentSpec {
                id: c.id.clone(),
                genus: c.genus,
                inputs: c.inputs.clone(),
                outputs: c.outputs.clone(),
            })
            .collect();
        Ok(DecoratedCobordism::from_components(
            &self.inputs,
            &self.outputs,
            &comps,
        )?)
    }

    pub fn of(c: &DecoratedCobordism) -> CobordismDoc {
        CobordismDoc {
            inputs: c.inputs.iter().cloned().collect(),
            outputs: c.outputs.iter().cloned().collect(),
            components: c
                .components()
                .into_iter()
                .map(|s| ComponentJson {
                    id: s.id,
                    genus: s.genus,
                    inputs: s.inputs,
                    outputs: s.outputs,
                })
                .collect(),
        }
    }
}

pub fn parse_cobordism(path: &Path) -> Result<DecoratedCobordism> {
    read_json::<CobordismDoc>(path)?.to_cobordism()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceComponentJson {
    pub label: Label,
    pub genus: u32,
    #[serde(default)]
    pub boundary: Vec<Label>,
    /// Reserved; carried through but given no meaning.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceVertexJson {
    pub id: String,
    pub components: Vec<SurfaceComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgePartJson {
    #[serde(default)]
    pub src: Vec<Label>,
    #[serde(default)]
    pub dst: Vec<Label>,
    pub tau: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TunnelingEdgeJson {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub parts: Vec<EdgePartJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopJson {
    pub id: String,
    pub vertex: String,
    pub perm: BTreeMap<Label, Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub algebra: AlgebraRef,
    #[serde(default)]
    pub boundary: Vec<Label>,
    pub vertices: Vec<SurfaceVertexJson>,
    #[serde(default)]
    pub edges: Vec<TunnelingEdgeJson>,
    #[serde(default)]
    pub loops: Vec<LoopJson>,
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<TunnelingGraph> {
        let g = TunnelingGraph {
            boundary: self.boundary.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| SurfaceVertex {
                    id: v.id.clone(),
                    components: v
                        .components
                        .iter()
                        .map(|c| SurfaceComponent {
                            label: c.label.clone(),
                            genus: c.genus,
                            boundary: c.boundary.clone(),
                        })
                        .collect(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| TunnelingEdge {
                    id: e.id.clone(),
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    parts: e
                        .parts
                        .iter()
                        .map(|p| EdgePart {
                            src: p.src.clone(),
                            dst: p.dst.clone(),
                            tau: p.tau,
                        })
                        .collect(),
                })
                .collect(),
            loops: self
                .loops
                .iter()
                .map(|l| LoopEdge {
                    id: l.id.clone(),
                    vertex: l.vertex.clone(),
                    perm: l.perm.clone(),
                })
                .collect(),
        };
        g.validate()?;
        Ok(g)
    }

    /// The canonical document of `g`; orientation flags are copied from
    /// `previous` by vertex and component label.
    pub fn of(algebra: AlgebraRef, g: &TunnelingGraph, previous: Option<&GraphDoc>) -> GraphDoc {
        let flag = |v: &str, c: &str| -> Option<String> {
            previous?
                .vertices
                .iter()
                .find(|x| x.id == v)?
                .components
                .iter()
                .find(|x| x.label == c)?
                .orientation
                .clone()
        };
        GraphDoc {
            algebra,
            boundary: g.boundary.clone(),
            vertices: g
                .vertices
                .iter()
                .map(|v| SurfaceVertexJson {
                    id: v.id.clone(),
                    components: v
                        .components
                        .iter()
                        .map(|c| SurfaceComponentJson {
                            label: c.label.clone(),
                            genus: c.genus,
                            boundary: c.boundary.clone(),
                            orientation: flag(&v.id, &c.label),
                        })
                        .collect(),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| TunnelingEdgeJson {
                    id: e.id.clone(),
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    parts: e
                        .parts
                        .iter()
                        .map(|p| EdgePartJson {
                            src: p.src.clone(),
                            dst: p.dst.clone(),
                            tau: p.tau,
                        })
                        .collect(),
                })
                .collect(),
            loops: g
                .loops
                .iter()
                .map(|l| LoopJson {
                    id: l.id.clone(),
                    vertex: l.vertex.clone(),
                    perm: l.perm.clone(),
                })
                .collect(),
        }
    }
}

/// A parsed tunneling-graph file.
#[derive(Clone, Debug)]
pub struct GraphFile {
    pub doc: GraphDoc,
    pub algebra: FrobeniusAlgebra,
    pub graph: TunnelingGraph,
}

pub fn parse_graph(path: &Path, verify: bool) -> Result<GraphFile> {
    let doc: GraphDoc = read_json(path)?;
    let algebra = doc.algebra.resolve(path.parent(), verify)?;
    let graph = doc.to_graph()?;
    Ok(GraphFile { doc, algebra, graph })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectJson {
    #[serde(rename = "J", default)]
    pub j: Vec<Label>,
    #[serde(rename = "K")]
    pub k: Vec<Label>,
    #[serde(default)]
    pub phi: BTreeMap<Label, Label>,
}

impl ObjectJson {
    fn to_object(&self) -> Result<TensorObject> {
        let obj = TensorObject {
            j: self.j.iter().cloned().collect(),
            k: self.k.iter().cloned().collect(),
            phi: self.phi.clone(),
        };
        obj.validate()?;
        Ok(obj)
    }

    fn of(o: &TensorObject) -> ObjectJson {
        ObjectJson {
            j: o.j_labels(),
            k: o.k_labels(),
            phi: o.phi.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorVertexJson {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<ObjectJson>,
}

/// One step of an elementary-path program.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum StepJson {
    Split {
        r: Label,
        #[serde(default)]
        moved: Vec<Label>,
        new_label: Label,
    },
    Handle {
        r: Label,
    },
    Kill {
        k: Label,
    },
    Permute {
        perm: BTreeMap<Label, Label>,
    },
}

impl StepJson {
    fn to_step(&self) -> ElementaryMorphism {
        match self.clone() {
            StepJson::Split { r, moved, new_label } => ElementaryMorphism::Split { r, moved, new_label },
            StepJson::Handle { r } => ElementaryMorphism::Handle { r },
            StepJson::Kill { k } => ElementaryMorphism::Kill { k },
            StepJson::Permute { perm } => ElementaryMorphism::Permute { perm },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapJson {
    Matrix {
        rows: usize,
        cols: usize,
        /// `[row, col, coefficient]`
        entries: Vec<(usize, usize, Coeff)>,
    },
    Program {
        program: Vec<StepJson>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorEdgeJson {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub map: MapJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorGraphDoc {
    pub algebra: AlgebraRef,
    pub vertices: Vec<FunctorVertexJson>,
    #[serde(default)]
    pub edges: Vec<FunctorEdgeJson>,
}

impl FunctorGraphDoc {
    pub fn to_graph(&self, alg: &FrobeniusAlgebra) -> Result<FunctorGraph> {
        let r = alg.rank();
        let ring = alg.ring().clone();
        let mut g = FunctorGraph::new(ring.clone());
        for (i, v) in self.vertices.iter().enumerate() {
            let at = format!("$.vertices[{i}]");
            match (&v.object, v.rank) {
                (Some(o), rank) => {
                    let obj = o.to_object()?;
                    let expected = r.pow(obj.k.len() as u32);
                    if rank.is_some_and(|n| n != expected) {
                        return Err(CliError::schema(at, format!("rank must be {expected} for this object")));
                    }
                    g.add_object_vertex(v.id.clone(), obj, r)?;
                }
                (None, Some(rank)) => g.add_vertex(v.id.clone(), rank)?,
                (None, None) => return Err(CliError::schema(at, "a vertex needs a rank or an object")),
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            let at = format!("$.edges[{i}].map");
            let matrix = match &e.map {
                MapJson::Matrix { rows, cols, entries } => {
                    let mut triplets = Vec::new();
                    for (t, (a, b, c)) in entries.iter().enumerate() {
                        triplets.push((*a, *b, c.parse(&ring, &format!("{at}.entries[{t}][2]"))?));
                    }
                    SparseMatrix::from_triplets(ring.clone(), *rows, *cols, triplets)
                        .map_err(|err| CliError::schema(&at, err.to_string()))?
                }
                MapJson::Program { program } => {
                    let object = |id: &str| -> Result<TensorObject> {
                        g.vertex(id).and_then(|v| v.object.clone()).ok_or_else(|| {
                            CliError::schema(&at, format!("program edges need an object on vertex {id}"))
                        })
                    };
                    let (start, end) = (object(&e.src)?, object(&e.dst)?);
                    let steps: Vec<ElementaryMorphism> = program.iter().map(StepJson::to_step).collect();
                    let (reached, map) = realize(alg, &start, &steps)?;
                    if reached != end {
                        return Err(CliError::schema(
                            &at,
                            format!("program does not end at the object of {}", e.dst),
                        ));
                    }
                    map.matrix().clone()
                }
            };
            g.add_edge(e.id.clone(), &e.src, &e.dst, matrix)?;
        }
        g.validate()?;
        Ok(g)
    }

    pub fn of(algebra: AlgebraRef, g: &FunctorGraph) -> FunctorGraphDoc {
        FunctorGraphDoc {
            algebra,
            vertices: g
                .vertices
                .iter()
                .map(|v| FunctorVertexJson {
                    id: v.id.clone(),
                    rank: if v.object.is_some() { None } else { Some(v.rank) },
                    object: v.object.as_ref().map(ObjectJson::of),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| FunctorEdgeJson {
                    id: e.id.clone(),
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    map: MapJson::Matrix {
                        rows: e.map.nrows(),
                        cols: e.map.ncols(),
                        entries: e.map.triplets().map(|(a, b, c)| (a, b, Coeff::of(c))).collect(),
                    },
                })
                .collect(),
        }
    }
}

pub struct FunctorGraphFile {
    pub doc: FunctorGraphDoc,
    pub algebra: FrobeniusAlgebra,
    pub graph: FunctorGraph,
}

pub fn parse_functor_graph(path: &Path, verify: bool) -> Result<FunctorGraphFile> {
    let doc: FunctorGraphDoc = read_json(path)?;
    let algebra = doc.algebra.resolve(path.parent(), verify)?;
    let graph = doc.to_graph(&algebra)?;
    Ok(FunctorGraphFile { doc, algebra, graph })
}

/// The kind of a document, guessed from its top-level keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocKind {
    Algebra,
    Cobordism,
    TunnelingGraph,
    FunctorGraph,
}

pub fn detect_kind(value: &serde_json::Value) -> Option<DocKind> {
    let obj = value.as_object()?;
    if obj.contains_key("mul") {
        Some(DocKind::Algebra)
    } else if obj.contains_key("components") {
        Some(DocKind::Cobordism)
    } else if obj.contains_key("vertices") {
        let is_surface = obj["vertices"]
            .as_array()
            .is_some_and(|vs| vs.iter().any(|v| v.get("components").is_some()));
        let is_empty = obj["vertices"].as_array().is_some_and(|vs| vs.is_empty());
        if is_surface || (is_empty && obj.contains_key("boundary")) {
            Some(DocKind::TunnelingGraph)
        } else {
            Some(DocKind::FunctorGraph)
        }
    } else {
        None
    }
}

/// Parses any document and serializes it back in canonical form.
pub fn canonicalize(path: &Path, verify: bool) -> Result<String> {
    let value: serde_json::Value = read_json(path)?;
    let kind = detect_kind(&value).ok_or_else(|| CliError::schema("$", "unrecognized document"))?;
    let json_err = |source| CliError::Json {
        path: path.display().to_string(),
        source,
    };
    Ok(match kind {
        DocKind::Algebra => {
            let spec: AlgebraSpec = serde_json::from_value(value).map_err(json_err)?;
            let alg = finish(spec.to_algebra("$")?, verify)?;
            to_pretty(&AlgebraSpec::of(&alg))
        }
        DocKind::Cobordism => {
            let doc: CobordismDoc = serde_json::from_value(value).map_err(json_err)?;
            to_pretty(&CobordismDoc::of(&doc.to_cobordism()?))
        }
        DocKind::TunnelingGraph => {
            let doc: GraphDoc = serde_json::from_value(value).map_err(json_err)?;
            doc.algebra.resolve(path.parent(), verify)?;
            let g = doc.to_graph()?;
            to_pretty(&GraphDoc::of(doc.algebra.clone(), &g, Some(&doc)))
        }
        DocKind::FunctorGraph => {
            let doc: FunctorGraphDoc = serde_json::from_value(value).map_err(json_err)?;
            let alg = doc.algebra.resolve(path.parent(), verify)?;
            let g = doc.to_graph(&alg)?;
            to_pretty(&FunctorGraphDoc::of(doc.algebra.clone(), &g))
        }
    })
}
