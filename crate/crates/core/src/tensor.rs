//! Tensor powers of a Frobenius algebra indexed by label sets.
//!
//! A [`LinMap`] is a matrix between `V^{⊗A}` and `V^{⊗B}` whose basis
//! multi-indices are keyed on the labels of `A` and `B` in sorted order, so
//! tensor products never depend on the order in which factors were listed.

use std::collections::{BTreeMap, BTreeSet};

use bnskein_exact::{Ring, Scalar, SparseMatrix};

use crate::error::{structure, Error, Result};
use crate::frobenius::{decode, encode, FrobeniusAlgebra};

pub type Label = String;

fn sorted_unique(labels: &[Label], what: &str) -> Result<Vec<Label>> {
    let set: BTreeSet<Label> = labels.iter().cloned().collect();
    if set.len() != labels.len() {
        return Err(structure(format!("duplicate label in {what}: {labels:?}")));
    }
    Ok(set.into_iter().collect())
}

/// Position of each label of `order` inside `sorted`.
fn positions(order: &[Label], sorted: &[Label]) -> Vec<usize> {
    order
        .iter()
        .map(|l| sorted.binary_search(l).expect("label present"))
        .collect()
}

/// Re-expresses a flat index in `order` as a flat index in `sorted`.
fn reindex(index: usize, r: usize, pos: &[usize]) -> usize {
    let multi = decode(index, r, pos.len());
    let mut out = vec![0; pos.len()];
    for (k, &p) in pos.iter().enumerate() {
        out[p] = multi[k];
    }
    encode(&out, r)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    r: usize,
    dom: Vec<Label>,
    cod: Vec<Label>,
    matrix: SparseMatrix,
}

impl LinMap {
    /// Wraps a matrix whose rows and columns are laid out in the given label
    /// orders (first label most significant).
    pub fn from_positional(matrix: SparseMatrix, r: usize, dom_order: &[Label], cod_order: &[Label]) -> Result<LinMap> {
        let dom = sorted_unique(dom_order, "domain")?;
        let cod = sorted_unique(cod_order, "codomain")?;
        let (nr, nc) = (r.pow(cod.len() as u32), r.pow(dom.len() as u32));
        if matrix.nrows() != nr || matrix.ncols() != nc {
            return Err(structure(format!(
                "matrix is {}x{}, labels require {nr}x{nc}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let matrix = if dom.as_slice() == dom_order && cod.as_slice() == cod_order {
            matrix
        } else {
            let dpos = positions(dom_order, &dom);
            let cpos = positions(cod_order, &cod);
            let triplets: Vec<_> = matrix
                .triplets()
                .map(|(i, j, v)| (reindex(i, r, &cpos), reindex(j, r, &dpos), v.clone()))
                .collect();
            SparseMatrix::from_triplets(matrix.ring().clone(), nr, nc, triplets)?
        };
        Ok(LinMap { r, dom, cod, matrix })
    }

    pub fn identity(ring: &Ring, r: usize, labels: &[Label]) -> LinMap {
        let labels: Vec<Label> = labels.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        LinMap {
            r,
            matrix: SparseMatrix::identity(ring.clone(), r.pow(labels.len() as u32)),
            dom: labels.clone(),
            cod: labels,
        }
    }

    pub fn scalar(r: usize, s: Scalar) -> LinMap {
        let ring = s.ring();
        LinMap {
            r,
            dom: vec![],
            cod: vec![],
            matrix: SparseMatrix::from_triplets(ring, 1, 1, [(0, 0, s)]).expect("1x1"),
        }
    }

    /// A map acting on a single factor: `dom_label ↦ cod_labels`, e.g. `Δ`.
    pub fn on_labels(a: &SparseMatrix, r: usize, dom_order: &[&str], cod_order: &[&str]) -> Result<LinMap> {
        let d: Vec<Label> = dom_order.iter().map(|s| s.to_string()).collect();
        let c: Vec<Label> = cod_order.iter().map(|s| s.to_string()).collect();
        LinMap::from_positional(a.clone(), r, &d, &c)
    }

    pub fn rank_of_algebra(&self) -> usize {
        self.r
    }

    pub fn dom(&self) -> &[Label] {
        &self.dom
    }

    pub fn cod(&self) -> &[Label] {
        &self.cod
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }

    /// The matrix laid out in arbitrary label orders.
    pub fn positional(&self, dom_order: &[Label], cod_order: &[Label]) -> Result<SparseMatrix> {
        if sorted_unique(dom_order, "domain")? != self.dom || sorted_unique(cod_order, "codomain")? != self.cod {
            return Err(structure("label orders do not match the map"));
        }
        let dpos = positions(dom_order, &self.dom);
        let cpos = positions(cod_order, &self.cod);
        // invert: sorted index -> positional index
        let n_d = self.dom.len();
        let n_c = self.cod.len();
        let to_pos = |idx: usize, pos: &[usize], n: usize| {
            let sorted = decode(idx, self.r, n);
            let out: Vec<usize> = pos.iter().map(|&p| sorted[p]).collect();
            encode(&out, self.r)
        };
        let triplets: Vec<_> = self
            .matrix
            .triplets()
            .map(|(i, j, v)| (to_pos(i, &cpos, n_c), to_pos(j, &dpos, n_d), v.clone()))
            .collect();
        Ok(SparseMatrix::from_triplets(
            self.ring().clone(),
            self.matrix.nrows(),
            self.matrix.ncols(),
            triplets,
        )?)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap> {
        if inner.cod != self.dom {
            return Err(structure(format!(
                "cannot compose: codomain {:?} does not match domain {:?}",
                inner.cod, self.dom
            )));
        }
        Ok(LinMap {
            r: self.r,
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }

    /// Tensor product of maps on disjoint label sets.
    pub fn tensor(&self, other: &LinMap) -> Result<LinMap> {
        let dom: Vec<Label> = self.dom.iter().chain(&other.dom).cloned().collect();
        let cod: Vec<Label> = self.cod.iter().chain(&other.cod).cloned().collect();
        let k = self.matrix.kron(&other.matrix)?;
        LinMap::from_positional(k, self.r, &dom, &cod)
    }

    pub fn tensor_all<'a>(ring: &Ring, r: usize, maps: impl IntoIterator<Item = &'a LinMap>) -> Result<LinMap> {
        let mut out = LinMap::scalar(r, Scalar::one(ring));
        for m in maps {
            out = out.tensor(m)?;
        }
        Ok(out)
    }

    /// Tensors with the identity on `labels`.
    pub fn extend(&self, labels: &[Label]) -> Result<LinMap> {
        self.tensor(&LinMap::identity(self.ring(), self.r, labels))
    }

    /// Renames labels; unmapped labels keep their names.
    pub fn rename(&self, dom_map: &BTreeMap<Label, Label>, cod_map: &BTreeMap<Label, Label>) -> Result<LinMap> {
        let ren = |l: &Label, m: &BTreeMap<Label, Label>| m.get(l).cloned().unwrap_or_else(|| l.clone());
        let dom: Vec<Label> = self.dom.iter().map(|l| ren(l, dom_map)).collect();
        let cod: Vec<Label> = self.cod.iter().map(|l| ren(l, cod_map)).collect();
        LinMap::from_positional(self.matrix.clone(), self.r, &dom, &cod)
    }

    /// The pure relabeling `V^{⊗A} → V^{⊗σ(A)}`, sending factor `a` to `σ(a)`.
    pub fn relabeling(ring: &Ring, r: usize, sigma: &BTreeMap<Label, Label>) -> Result<LinMap> {
        let dom: Vec<Label> = sigma.keys().cloned().collect();
        let cod: Vec<Label> = sigma.values().cloned().collect();
        let id = SparseMatrix::identity(ring.clone(), r.pow(dom.len() as u32));
        LinMap::from_positional(id, r, &dom, &cod)
    }

    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector> {
        if v.labels != self.dom {
            return Err(structure(format!(
                "vector over {:?} does not match domain {:?}",
                v.labels, self.dom
            )));
        }
        let flat = self.matrix.apply(&v.to_flat(self.r))?;
        Ok(TensorVector::from_flat(self.cod.clone(), self.r, &flat))
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(structure("maps have different label sets"));
        }
        Ok(LinMap {
            r: self.r,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.sub(&other.matrix)?,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Result<LinMap> {
        Ok(LinMap {
            r: self.r,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            matrix: self.matrix.scale(s)?,
        })
    }
}

/// A vector of `V^{⊗K}` as a sparse map from multi-indices (in sorted label order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorVector {
    pub labels: Vec<Label>,
    pub terms: BTreeMap<Vec<usize>, Scalar>,
}

impl TensorVector {
    pub fn new(labels: &[Label]) -> Self {
        TensorVector {
            labels: labels.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect(),
            terms: BTreeMap::new(),
        }
    }

    /// A pure tensor of basis elements given per label.
    pub fn basis(ring: &Ring, assignment: &BTreeMap<Label, usize>) -> Self {
        let labels: Vec<Label> = assignment.keys().cloned().collect();
        let idx: Vec<usize> = assignment.values().copied().collect();
        TensorVector {
            labels,
            terms: BTreeMap::from([(idx, Scalar::one(ring))]),
        }
    }

    /// `1 ⊗ ... ⊗ 1` on the given labels.
    pub fn unit(alg: &FrobeniusAlgebra, labels: &[Label]) -> Self {
        let mut v = TensorVector::new(labels);
        let n = v.labels.len();
        let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::from([(vec![], Scalar::one(alg.ring()))]);
        for _ in 0..n {
            let mut next = BTreeMap::new();
            for (idx, c) in &terms {
                for (i, u) in alg.unit().iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    let mut k = idx.clone();
                    k.push(i);
                    next.insert(k, c * u);
                }
            }
            terms = next;
        }
        v.terms = terms;
        v
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get(&idx) {
            Some(old) => {
                let s = old + &c;
                if s.is_zero() {
                    self.terms.remove(&idx);
                } else {
                    self.terms.insert(idx, s);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn to_flat(&self, r: usize) -> BTreeMap<usize, Scalar> {
        self.terms.iter().map(|(k, c)| (encode(k, r), c.clone())).collect()
    }

    pub fn from_flat(labels: Vec<Label>, r: usize, flat: &BTreeMap<usize, Scalar>) -> Self {
        let n = labels.len();
        TensorVector {
            labels,
            terms: flat.iter().map(|(&i, c)| (decode(i, r, n), c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `V(φ)`: the module `V^{⊗K}` over `V^{⊗J}` via `φ: J → K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorObject {
    pub j: BTreeSet<Label>,
    pub k: BTreeSet<Label>,
    pub phi: BTreeMap<Label, Label>,
}

impl TensorObject {
    pub fn new(j: &[&str], k: &[&str], phi: &[(&str, &str)]) -> Result<Self> {
        let obj = TensorObject {
            j: j.iter().map(|s| s.to_string()).collect(),
            k: k.iter().map(|s| s.to_string()).collect(),
            phi: phi.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        };
        obj.validate()?;
        Ok(obj)
    }

    pub fn validate(&self) -> Result<()> {
        let dom: BTreeSet<&Label> = self.phi.keys().collect();
        if dom != self.j.iter().collect() {
            return Err(structure("φ must be defined exactly on J"));
        }
        if let Some((j, k)) = self.phi.iter().find(|(_, k)| !self.k.contains(*k)) {
            return Err(structure(format!("φ({j}) = {k} is not a component")));
        }
        if !self.j.is_empty() && self.k.is_empty() {
            return Err(structure("K must be nonempty when J is nonempty"));
        }
        Ok(())
    }

    pub fn k_labels(&self) -> Vec<Label> {
        self.k.iter().cloned().collect()
    }

    pub fn j_labels(&self) -> Vec<Label> {
        self.j.iter().cloned().collect()
    }

    pub fn image(&self) -> BTreeSet<Label> {
        self.phi.values().cloned().collect()
    }

    pub fn preimage(&self, k: &str) -> Vec<Label> {
        self.phi
            .iter()
            .filter(|(_, v)| *v == k)
            .map(|(j, _)| j.clone())
            .collect()
    }
}

/// Multiplies every `J`-factor of `v` into the component `φ(j)` of `w`.
pub fn act(alg: &FrobeniusAlgebra, obj: &TensorObject, v: &TensorVector, w: &TensorVector) -> Result<TensorVector> {
    if v.labels != obj.j_labels() || w.labels != obj.k_labels() {
        return Err(structure("act: vectors do not match the object's label sets"));
    }
    let kpos: Vec<usize> = v
        .labels
        .iter()
        .map(|j| w.labels.binary_search(&obj.phi[j]).expect("φ lands in K"))
        .collect();
    let mut out = TensorVector::new(&w.labels);
    for (vi, vc) in &v.terms {
        let mut current: BTreeMap<Vec<usize>, Scalar> = w
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.try_mul(vc)))
            .map(|(k, c)| c.map(|c| (k, c)))
            .collect::<std::result::Result<_, _>>()?;
        for (slot, &basis) in vi.iter().enumerate() {
            let target = kpos[slot];
            let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (idx, c) in &current {
                for (l, s) in alg.mul_tensor()[basis][idx[target]].iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let mut k = idx.clone();
                    k[target] = l;
                    let e = next.entry(k).or_insert_with(|| Scalar::zero(alg.ring()));
                    *e = e.try_add(&c.try_mul(s)?)?;
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        for (k, c) in current {
            out.add_term(k, c);
        }
    }
    Ok(out)
}

/// The inclusion `V^{⊗J} → V^{⊗K}`, `v ↦ v · (1 ⊗ ... ⊗ 1)`.
pub fn inclusion(alg: &FrobeniusAlgebra, obj: &TensorObject) -> Result<LinMap> {
    let r = alg.rank();
    let js = obj.j_labels();
    let ks = obj.k_labels();
    let unit = TensorVector::unit(alg, &ks);
    let ncols = r.pow(js.len() as u32);
    let mut columns = Vec::with_capacity(ncols);
    for c in 0..ncols {
        let v = TensorVector {
            labels: js.clone(),
            terms: BTreeMap::from([(decode(c, r, js.len()), Scalar::one(alg.ring()))]),
        };
        columns.push(act(alg, obj, &v, &unit)?.to_flat(r));
    }
    let m = SparseMatrix::from_columns(alg.ring().clone(), r.pow(ks.len() as u32), columns)?;
    LinMap::from_positional(m, r, &js, &ks)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryMorphism {
    /// `Δ` on factor `r`; the boundary labels in `moved` are redirected to the new factor.
    Split {
        r: Label,
        moved: Vec<Label>,
        new_label: Label,
    },
    /// `𝔨` on factor `r`.
    Handle { r: Label },
    /// `ε` on a factor outside the image of `φ`.
    Kill { k: Label },
    /// Permutes factors outside the image of `φ`.
    Permute { perm: BTreeMap<Label, Label> },
}

pub fn apply_elementary(
    alg: &FrobeniusAlgebra,
    obj: &TensorObject,
    e: &ElementaryMorphism,
) -> Result<(TensorObject, LinMap)> {
    let r = alg.rank();
    let others = |skip: &[&Label]| -> Vec<Label> { obj.k.iter().filter(|l| !skip.contains(l)).cloned().collect() };
    match e {
        ElementaryMorphism::Split {
            r: kr,
            moved,
            new_label,
        } => {
            if !obj.k.contains(kr) {
                return Err(structure(format!("split: {kr} is not a component")));
            }
            if obj.k.contains(new_label) {
                return Err(structure(format!("split: label {new_label} already in use")));
            }
            let mut next = obj.clone();
            for j in moved {
                if obj.phi.get(j) != Some(kr) {
                    return Err(structure(format!("split: {j} is not in the preimage of {kr}")));
                }
                next.phi.insert(j.clone(), new_label.clone());
            }
            next.k.insert(new_label.clone());
            let map = LinMap::from_positional(
                alg.delta().clone(),
                r,
                std::slice::from_ref(kr),
                &[kr.clone(), new_label.clone()],
            )?
            .extend(&others(&[kr]))?;
            Ok((next, map))
        }
        ElementaryMorphism::Handle { r: kr } => {
            if !obj.k.contains(kr) {
                return Err(structure(format!("handle: {kr} is not a component")));
            }
            let map = LinMap::from_positional(
                alg.handle().clone(),
                r,
                std::slice::from_ref(kr),
                std::slice::from_ref(kr),
            )?
            .extend(&others(&[kr]))?;
            Ok((obj.clone(), map))
        }
        ElementaryMorphism::Kill { k } => {
            if !obj.k.contains(k) {
                return Err(structure(format!("kill: {k} is not a component")));
            }
            if obj.image().contains(k) {
                return Err(structure(format!("kill: {k} meets the boundary")));
            }
            let mut next = obj.clone();
            next.k.remove(k);
            let map =
                LinMap::from_positional(alg.eps().clone(), r, std::slice::from_ref(k), &[])?.extend(&others(&[k]))?;
            Ok((next, map))
        }
        ElementaryMorphism::Permute { perm } => {
            let image = obj.image();
            let keys: BTreeSet<&Label> = perm.keys().collect();
            let vals: BTreeSet<&Label> = perm.values().collect();
            if keys != vals || keys.len() != perm.len() {
                return Err(structure("permute: not a permutation"));
            }
            for (a, b) in perm {
                if !obj.k.contains(a) {
                    return Err(structure(format!("permute: {a} is not a component")));
                }
                if a != b && image.contains(a) {
                    return Err(structure(format!("permute: {a} meets the boundary")));
                }
            }
            let moved: Vec<&Label> = perm.keys().collect();
            let map = LinMap::relabeling(alg.ring(), r, perm)?.extend(&others(&moved))?;
            Ok((obj.clone(), map))
        }
    }
}

/// Composes a sequence of elementary morphisms starting from `start`.
pub fn realize(
    alg: &FrobeniusAlgebra,
    start: &TensorObject,
    path: &[ElementaryMorphism],
) -> Result<(TensorObject, LinMap)> {
    let mut obj = start.clone();
    let mut map = LinMap::identity(alg.ring(), alg.rank(), &start.k_labels());
    for (index, e) in path.iter().enumerate() {
        let (next, step) = apply_elementary(alg, &obj, e).map_err(|err| Error::InvalidStep {
            index,
            reason: err.to_string(),
        })?;
        map = step.compose(&map)?;
        obj = next;
    }
    Ok((obj, map))
}

pub const IN_TAG: &str = "in:";
pub const OUT_TAG: &str = "out:";

/// An object of `V(J1, J2)`: two boundary maps into the same component set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimoduleObject {
    pub j1: BTreeSet<Label>,
    pub j2: BTreeSet<Label>,
    pub k: BTreeSet<Label>,
    pub phi1: BTreeMap<Label, Label>,
    pub phi2: BTreeMap<Label, Label>,
}

impl BimoduleObject {
    pub fn new(k: &[&str], phi1: &[(&str, &str)], phi2: &[(&str, &str)]) -> Result<Self> {
        let own = |v: &[(&str, &str)]| -> BTreeMap<Label, Label> {
            v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
        };
        let phi1 = own(phi1);
        let phi2 = own(phi2);
        let obj = BimoduleObject {
            j1: phi1.keys().cloned().collect(),
            j2: phi2.keys().cloned().collect(),
            k: k.iter().map(|s| s.to_string()).collect(),
            phi1,
            phi2,
        };
        obj.to_tensor_object()?;
        Ok(obj)
    }

    pub fn identity(j: &BTreeSet<Label>) -> Self {
        let phi: BTreeMap<Label, Label> = j.iter().map(|l| (l.clone(), l.clone())).collect();
        BimoduleObject {
            j1: j.clone(),
            j2: j.clone(),
            k: j.clone(),
            phi1: phi.clone(),
            phi2: phi,
        }
    }

    /// The underlying `V(φ)` with boundary labels tagged `in:`/`out:`.
    pub fn to_tensor_object(&self) -> Result<TensorObject> {
        let mut phi = BTreeMap::new();
        for (j, k) in &self.phi1 {
            phi.insert(format!("{IN_TAG}{j}"), k.clone());
        }
        for (j, k) in &self.phi2 {
            phi.insert(format!("{OUT_TAG}{j}"), k.clone());
        }
        let obj = TensorObject {
            j: phi.keys().cloned().collect(),
            k: self.k.clone(),
            phi,
        };
        obj.validate()?;
        Ok(obj)
    }

    pub fn from_tensor_object(obj: &TensorObject) -> Result<Self> {
        let mut phi1 = BTreeMap::new();
        let mut phi2 = BTreeMap::new();
        for (j, k) in &obj.phi {
            if let Some(s) = j.strip_prefix(IN_TAG) {
                phi1.insert(s.to_string(), k.clone());
            } else if let Some(s) = j.strip_prefix(OUT_TAG) {
                phi2.insert(s.to_string(), k.clone());
            } else {
                return Err(structure(format!("boundary label {j} carries no side tag")));
            }
        }
        Ok(BimoduleObject {
            j1: phi1.keys().cloned().collect(),
            j2: phi2.keys().cloned().collect(),
            k: obj.k.clone(),
            phi1,
            phi2,
        })
    }

    pub fn k_labels(&self) -> Vec<Label> {
        self.k.iter().cloned().collect()
    }

    /// Applies an elementary morphism (boundary labels in tagged form).
    pub fn apply(&self, alg: &FrobeniusAlgebra, e: &ElementaryMorphism) -> Result<BimoduleMorphism> {
        let (next, map) = apply_elementary(alg, &self.to_tensor_object()?, e)?;
        Ok(BimoduleMorphism {
            dom: self.clone(),
            cod: BimoduleObject::from_tensor_object(&next)?,
            map,
        })
    }
}

/// A realized morphism of `V(J1, J2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMorphism {
    pub dom: BimoduleObject,
    pub cod: BimoduleObject,
    pub map: LinMap,
}

impl BimoduleMorphism {
    pub fn identity(alg: &FrobeniusAlgebra, obj: &BimoduleObject) -> Self {
        BimoduleMorphism {
            dom: obj.clone(),
            cod: obj.clone(),
            map: LinMap::identity(alg.ring(), alg.rank(), &obj.k_labels()),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &BimoduleMorphism) -> Result<BimoduleMorphism> {
        if inner.cod != self.dom {
            return Err(structure("morphisms are not composable"));
        }
        Ok(BimoduleMorphism {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            map: self.map.compose(&inner.map)?,
        })
    }
}

/// How the components of two glued pieces fall into classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    /// Original bottom label to its constituent name (unchanged).
    pub bottom_names: BTreeMap<Label, Label>,
    /// Original top label to its constituent name (primed on collision).
    pub top_names: BTreeMap<Label, Label>,
    /// Class name to its sorted constituents.
    pub classes: BTreeMap<Label, Vec<Label>>,
    pub class_of: BTreeMap<Label, Label>,
    /// Number of glueing circles landing in each class.
    pub circles: BTreeMap<Label, usize>,
}

impl Merge {
    /// Unions the bottom components `phi_bottom(j)` and top components
    /// `phi_top(j)` for every middle label `j`.
    pub fn compute(
        bottom_k: &BTreeSet<Label>,
        phi_bottom: &BTreeMap<Label, Label>,
        top_k: &BTreeSet<Label>,
        phi_top: &BTreeMap<Label, Label>,
    ) -> Result<Merge> {
        let mid_b: BTreeSet<&Label> = phi_bottom.keys().collect();
        let mid_t: BTreeSet<&Label> = phi_top.keys().collect();
        if mid_b != mid_t {
            return Err(structure(format!(
                "middle boundaries differ: {:?} vs {:?}",
                mid_b, mid_t
            )));
        }
        let bottom_names: BTreeMap<Label, Label> = bottom_k.iter().map(|l| (l.clone(), l.clone())).collect();
        let mut used: BTreeSet<Label> = bottom_k.clone();
        let mut top_names = BTreeMap::new();
        for l in top_k {
            let mut name = l.clone();
            while used.contains(&name) {
                name.push('\'');
            }
            used.insert(name.clone());
            top_names.insert(l.clone(), name);
        }
        let constituents: Vec<Label> = used.iter().cloned().collect();
        let index: BTreeMap<&Label, usize> = constituents.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut parent: Vec<usize> = (0..constituents.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while p[root] != root {
                root = p[root];
            }
            let mut y = x;
            while p[y] != root {
                let next = p[y];
                p[y] = root;
                y = next;
            }
            root
        }
        for (j, kb) in phi_bottom {
            let a = index[&bottom_names[kb]];
            let b = index[&top_names[&phi_top[j]]];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut groups: BTreeMap<usize, Vec<Label>> = BTreeMap::new();
        for (i, l) in constituents.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(l.clone());
        }
        let mut classes = BTreeMap::new();
        let mut class_of = BTreeMap::new();
        let mut group_list: Vec<Vec<Label>> = groups.into_values().collect();
        group_list.sort();
        let mut names: BTreeSet<Label> = BTreeSet::new();
        for members in group_list {
            let mut name = members.join("+");
            while names.contains(&name) {
                name.push('#');
            }
            names.insert(name.clone());
            for m in &members {
                class_of.insert(m.clone(), name.clone());
            }
            classes.insert(name, members);
        }
        let mut circles: BTreeMap<Label, usize> = classes.keys().map(|c| (c.clone(), 0)).collect();
        for kb in phi_bottom.values() {
            *circles.get_mut(&class_of[&bottom_names[kb]]).unwrap() += 1;
        }
        Ok(Merge {
            bottom_names,
            top_names,
            classes,
            class_of,
            circles,
        })
    }

    /// The class containing an original bottom component.
    pub fn class_of_bottom(&self, k: &str) -> &Label {
        &self.class_of[&self.bottom_names[k]]
    }

    pub fn class_of_top(&self, k: &str) -> &Label {
        &self.class_of[&self.top_names[k]]
    }

    /// `V^{⊗constituents} → V^{⊗classes}`, multiplying merged factors.
    pub fn projection(&self, alg: &FrobeniusAlgebra) -> Result<LinMap> {
        let r = alg.rank();
        let mut parts = Vec::new();
        for (class, members) in &self.classes {
            parts.push(LinMap::from_positional(
                alg.m_n(members.len()),
                r,
                members,
                std::slice::from_ref(class),
            )?);
        }
        LinMap::tensor_all(alg.ring(), r, &parts)
    }

    /// A right inverse of [`Merge::projection`]: each class vector goes to its
    /// first constituent, units everywhere else.
    pub fn section(&self, alg: &FrobeniusAlgebra) -> Result<LinMap> {
        let r = alg.rank();
        let mut parts = Vec::new();
        for (class, members) in &self.classes {
            let mut m = alg.id();
            for _ in 1..members.len() {
                m = m.kron(alg.mu())?;
            }
            parts.push(LinMap::from_positional(m, r, std::slice::from_ref(class), members)?);
        }
        LinMap::tensor_all(alg.ring(), r, &parts)
    }
}

/// Result of glueing two bimodule objects along their shared boundary.
#[derive(Clone, Debug)]
pub struct Glued {
    pub object: BimoduleObject,
    pub projection: LinMap,
    pub merge: Merge,
}

/// Glues `top ∈ V(J2, J3)` onto `bottom ∈ V(J1, J2)`.
pub fn glue_objects(alg: &FrobeniusAlgebra, top: &BimoduleObject, bottom: &BimoduleObject) -> Result<Glued> {
    let merge = Merge::compute(&bottom.k, &bottom.phi2, &top.k, &top.phi1)?;
    let phi1 = bottom
        .phi1
        .iter()
        .map(|(j, k)| (j.clone(), merge.class_of_bottom(k).clone()))
        .collect();
    let phi2 = top
        .phi2
        .iter()
        .map(|(j, k)| (j.clone(), merge.class_of_top(k).clone()))
        .collect();
    let object = BimoduleObject {
        j1: bottom.j1.clone(),
        j2: top.j2.clone(),
        k: merge.classes.keys().cloned().collect(),
        phi1,
        phi2,
    };
    Ok(Glued {
        projection: merge.projection(alg)?,
        object,
        merge,
    })
}

/// The morphism of `V(J1, J3)` through which `P∘(g⊗f)` factors.
pub fn glue_morphisms(alg: &FrobeniusAlgebra, g: &BimoduleMorphism, f: &BimoduleMorphism) -> Result<BimoduleMorphism> {
    let dom = glue_objects(alg, &g.dom, &f.dom)?;
    let cod = glue_objects(alg, &g.cod, &f.cod)?;
    let g_ren = g.map.rename(&dom.merge.top_names, &cod.merge.top_names)?;
    let gf = g_ren.tensor(&f.map)?;
    let through = cod.projection.compose(&gf)?;
    let h = through.compose(&dom.merge.section(alg)?)?;
    if h.compose(&dom.projection)? != through {
        return Err(structure("P∘(g⊗f) does not factor through the glued domain"));
    }
    Ok(BimoduleMorphism {
        dom: dom.object,
        cod: cod.object,
        map: h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::builtin;

    fn s(v: &[&str]) -> Vec<Label> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn positional_reordering() {
        let v = builtin("khovanov").unwrap();
        // Δ with outputs listed as (b, a) equals Δ listed as (a, b) by cocommutativity
        let d1 = LinMap::from_positional(v.delta().clone(), 2, &s(&["a"]), &s(&["a", "b"])).unwrap();
        let d2 = LinMap::from_positional(v.delta().clone(), 2, &s(&["a"]), &s(&["b", "a"])).unwrap();
        assert_eq!(d1, d2);
        let m = LinMap::from_positional(v.m().clone(), 2, &s(&["q", "p"]), &s(&["z"])).unwrap();
        assert_eq!(m.positional(&s(&["q", "p"]), &s(&["z"])).unwrap(), *v.m());
    }

    #[test]
    fn act_examples() {
        let v = builtin("khovanov").unwrap();
        let z = v.ring().clone();
        let obj = TensorObject::new(
            &["1", "2", "3", "4", "5"],
            &["k"],
            &[("1", "k"), ("2", "k"), ("3", "k"), ("4", "k"), ("5", "k")],
        )
        .unwrap();
        let x = TensorVector::basis(
            &z,
            &BTreeMap::from([
                ("1".into(), 1),
                ("2".into(), 0),
                ("3".into(), 0),
                ("4".into(), 0),
                ("5".into(), 0),
            ]),
        );
        let one = TensorVector::unit(&v, &s(&["k"]));
        let out = act(&v, &obj, &x, &one).unwrap();
        assert_eq!(out, TensorVector::basis(&z, &BTreeMap::from([("k".into(), 1)])));

        let obj2 = TensorObject::new(&["1", "2"], &["k"], &[("1", "k"), ("2", "k")]).unwrap();
        let xx = TensorVector::basis(&z, &BTreeMap::from([("1".into(), 1), ("2".into(), 1)]));
        assert!(act(&v, &obj2, &xx, &one).unwrap().is_zero());

        let empty = TensorObject::new(&[], &["k"], &[]).unwrap();
        let scalar = TensorVector::unit(&v, &[]);
        let w = TensorVector::basis(&z, &BTreeMap::from([("k".into(), 1)]));
        assert_eq!(act(&v, &empty, &scalar, &w).unwrap(), w);
    }

    #[test]
    fn elementary_examples() {
        let v = builtin("khovanov").unwrap();
        let obj = TensorObject::new(&[], &["1"], &[]).unwrap();
        let split = ElementaryMorphism::Split {
            r: "1".into(),
            moved: vec![],
            new_label: "2".into(),
        };
        let (o2, m) = apply_elementary(&v, &obj, &split).unwrap();
        assert_eq!(o2.k_labels(), s(&["1", "2"]));
        assert_eq!(m.matrix(), v.delta());
        let (_, h) = apply_elementary(&v, &obj, &ElementaryMorphism::Handle { r: "1".into() }).unwrap();
        assert_eq!(
            h.matrix(),
            &SparseMatrix::from_ints(Ring::Integer, &[vec![0, 0], vec![2, 0]])
        );
        let (o3, k) = apply_elementary(&v, &obj, &ElementaryMorphism::Kill { k: "1".into() }).unwrap();
        assert!(o3.k.is_empty());
        assert_eq!(k.matrix(), &SparseMatrix::from_ints(Ring::Integer, &[vec![0, 1]]));
    }

    #[test]
    fn realize_paths() {
        let v = builtin("khovanov").unwrap();
        let obj = TensorObject::new(&["a"], &["1"], &[("a", "1")]).unwrap();
        let (_, id) = realize(&v, &obj, &[]).unwrap();
        assert!(id.matrix().is_identity());
        let split = ElementaryMorphism::Split {
            r: "1".into(),
            moved: vec![],
            new_label: "2".into(),
        };
        let (_, counit) = realize(&v, &obj, &[split.clone(), ElementaryMorphism::Kill { k: "2".into() }]).unwrap();
        assert!(counit.matrix().is_identity());
        let (_, h1) = realize(&v, &obj, &[split.clone(), ElementaryMorphism::Handle { r: "1".into() }]).unwrap();
        let (_, h2) = realize(&v, &obj, &[split.clone(), ElementaryMorphism::Handle { r: "2".into() }]).unwrap();
        assert_eq!(h1, h2);
        let err = realize(&v, &obj, &[split, ElementaryMorphism::Kill { k: "1".into() }]).unwrap_err();
        assert!(matches!(err, Error::InvalidStep { index: 1, .. }));
    }

    #[test]
    fn glue_examples() {
        let v = builtin("khovanov").unwrap();
        // single merge: projection is m
        let bottom = BimoduleObject::new(&["b"], &[], &[("j", "b")]).unwrap();
        let top = BimoduleObject::new(&["a"], &[("j", "a")], &[]).unwrap();
        let g = glue_objects(&v, &top, &bottom).unwrap();
        assert_eq!(g.object.k_labels(), s(&["a+b"]));
        assert_eq!(g.projection.matrix(), v.m());

        // nothing shared: identity reindexing
        let b2 = BimoduleObject::new(&["b"], &[], &[]).unwrap();
        let t2 = BimoduleObject::new(&["a"], &[], &[]).unwrap();
        let g2 = glue_objects(&v, &t2, &b2).unwrap();
        assert_eq!(g2.object.k_labels(), s(&["a", "b"]));
        assert!(g2.projection.matrix().is_identity());

        // two middle labels from one top component into two bottom components: class of 3
        let b3 = BimoduleObject::new(&["b1", "b2"], &[], &[("j1", "b1"), ("j2", "b2")]).unwrap();
        let t3 = BimoduleObject::new(&["a"], &[("j1", "a"), ("j2", "a")], &[]).unwrap();
        let g3 = glue_objects(&v, &t3, &b3).unwrap();
        assert_eq!(g3.object.k_labels(), s(&["a+b1+b2"]));
        assert_eq!(g3.projection.matrix(), &v.m_n(3));
    }

    #[test]
    fn glued_split_becomes_handle() {
        let v = builtin("khovanov").unwrap();
        // bottom: one component carrying out-labels j1, j2; split moves j2 to a new leg
        let bottom = BimoduleObject::new(&["c"], &[], &[("j1", "c"), ("j2", "c")]).unwrap();
        let split = ElementaryMorphism::Split {
            r: "c".into(),
            moved: vec![format!("{OUT_TAG}j2")],
            new_label: "d".into(),
        };
        let f = bottom.apply(&v, &split).unwrap();
        let top = BimoduleObject::new(&["a"], &[("j1", "a"), ("j2", "a")], &[]).unwrap();
        let g = BimoduleMorphism::identity(&v, &top);
        let h = glue_morphisms(&v, &g, &f).unwrap();
        assert_eq!(h.map.matrix(), v.handle());

        let hf = bottom.apply(&v, &ElementaryMorphism::Handle { r: "c".into() }).unwrap();
        let h2 = glue_morphisms(&v, &g, &hf).unwrap();
        assert_eq!(h2.map.matrix(), v.handle());
    }
}
