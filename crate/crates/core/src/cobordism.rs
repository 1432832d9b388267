//! Decorated surface cobordisms: component structure plus a genus per
//! component, their composition, compression steps, and 2D TQFT evaluation.

use std::collections::{BTreeMap, BTreeSet};

use bnskein_exact::{inverse, SparseMatrix};

use crate::error::{structure, Error, Result};
use crate::frobenius::{tensor_power, FrobeniusAlgebra};
use crate::tensor::{
    inclusion, BimoduleObject, ElementaryMorphism, Label, LinMap, Merge, TensorObject, IN_TAG, OUT_TAG,
};

/// Incoming boundary, outgoing boundary and genus of one component.
type ComponentKey = (Vec<Label>, Vec<Label>, u32);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedCobordism {
    pub inputs: BTreeSet<Label>,
    pub outputs: BTreeSet<Label>,
    /// Component labels with their genus.
    pub genus: BTreeMap<Label, u32>,
    pub phi1: BTreeMap<Label, Label>,
    pub phi2: BTreeMap<Label, Label>,
}

/// One component in the flat description used by constructors and file formats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSpec {
    pub id: Label,
    pub genus: u32,
    pub inputs: Vec<Label>,
    pub outputs: Vec<Label>,
}

impl DecoratedCobordism {
    pub fn from_components(inputs: &[Label], outputs: &[Label], components: &[ComponentSpec]) -> Result<Self> {
        let mut c = DecoratedCobordism {
            inputs: inputs.iter().cloned().collect(),
            outputs: outputs.iter().cloned().collect(),
            genus: BTreeMap::new(),
            phi1: BTreeMap::new(),
            phi2: BTreeMap::new(),
        };
        if c.inputs.len() != inputs.len() || c.outputs.len() != outputs.len() {
            return Err(structure("duplicate boundary label"));
        }
        for comp in components {
            if c.genus.insert(comp.id.clone(), comp.genus).is_some() {
                return Err(structure(format!("duplicate component {}", comp.id)));
            }
            for j in &comp.inputs {
                if c.phi1.insert(j.clone(), comp.id.clone()).is_some() {
                    return Err(structure(format!("input {j} is attached twice")));
                }
            }
            for j in &comp.outputs {
                if c.phi2.insert(j.clone(), comp.id.clone()).is_some() {
                    return Err(structure(format!("output {j} is attached twice")));
                }
            }
        }
        c.validate()?;
        Ok(c)
    }

    /// Shorthand: `(id, genus, inputs, outputs)`.
    pub fn build(inputs: &[&str], outputs: &[&str], components: &[(&str, u32, &[&str], &[&str])]) -> Result<Self> {
        let own = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let specs: Vec<ComponentSpec> = components
            .iter()
            .map(|(id, g, i, o)| ComponentSpec {
                id: id.to_string(),
                genus: *g,
                inputs: own(i),
                outputs: own(o),
            })
            .collect();
        DecoratedCobordism::from_components(&own(inputs), &own(outputs), &specs)
    }

    pub fn validate(&self) -> Result<()> {
        let d1: BTreeSet<&Label> = self.phi1.keys().collect();
        let d2: BTreeSet<&Label> = self.phi2.keys().collect();
        if d1 != self.inputs.iter().collect() {
            return Err(structure("every input must be attached to exactly one component"));
        }
        if d2 != self.outputs.iter().collect() {
            return Err(structure("every output must be attached to exactly one component"));
        }
        for k in self.phi1.values().chain(self.phi2.values()) {
            if !self.genus.contains_key(k) {
                return Err(structure(format!("boundary attached to unknown component {k}")));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> Vec<ComponentSpec> {
        self.genus
            .iter()
            .map(|(k, g)| ComponentSpec {
                id: k.clone(),
                genus: *g,
                inputs: self.preimage1(k),
                outputs: self.preimage2(k),
            })
            .collect()
    }

    pub fn preimage1(&self, k: &str) -> Vec<Label> {
        self.phi1
            .iter()
            .filter(|(_, v)| *v == k)
            .map(|(j, _)| j.clone())
            .collect()
    }

    pub fn preimage2(&self, k: &str) -> Vec<Label> {
        self.phi2
            .iter()
            .filter(|(_, v)| *v == k)
            .map(|(j, _)| j.clone())
            .collect()
    }

    pub fn is_closed(&self, k: &str) -> bool {
        !self.phi1.values().any(|v| v == k) && !self.phi2.values().any(|v| v == k)
    }

    /// The cylinder on `J`.
    pub fn identity(j: &[Label]) -> Self {
        let phi: BTreeMap<Label, Label> = j.iter().map(|l| (l.clone(), l.clone())).collect();
        DecoratedCobordism {
            inputs: j.iter().cloned().collect(),
            outputs: j.iter().cloned().collect(),
            genus: j.iter().map(|l| (l.clone(), 0)).collect(),
            phi1: phi.clone(),
            phi2: phi,
        }
    }

    /// `top ∘ bottom`. Genera add, plus the cycle rank of the glueing graph on
    /// each merged class (glueing two pieces along several circles adds handles).
    pub fn compose(top: &DecoratedCobordism, bottom: &DecoratedCobordism) -> Result<DecoratedCobordism> {
        Ok(bottom.glue_with(top, Side::Above)?.1)
    }

    fn from_merge(top: &DecoratedCobordism, bottom: &DecoratedCobordism, merge: &Merge) -> DecoratedCobordism {
        let mut genus = BTreeMap::new();
        for (class, members) in &merge.classes {
            let mut g: i64 = 0;
            for (k, gk) in &bottom.genus {
                if merge.class_of_bottom(k) == class {
                    g += i64::from(*gk);
                }
            }
            for (k, gk) in &top.genus {
                if merge.class_of_top(k) == class {
                    g += i64::from(*gk);
                }
            }
            g += merge.circles[class] as i64 - members.len() as i64 + 1;
            genus.insert(
                class.clone(),
                u32::try_from(g).expect("connected class has nonnegative cycle rank"),
            );
        }
        DecoratedCobordism {
            inputs: bottom.inputs.clone(),
            outputs: top.outputs.clone(),
            genus,
            phi1: bottom
                .phi1
                .iter()
                .map(|(j, k)| (j.clone(), merge.class_of_bottom(k).clone()))
                .collect(),
            phi2: top
                .phi2
                .iter()
                .map(|(j, k)| (j.clone(), merge.class_of_top(k).clone()))
                .collect(),
        }
    }

    /// Relabels components `k0, k1, ...` in an order determined by their
    /// boundary and genus, so isomorphic cobordisms compare equal.
    pub fn canonical(&self) -> DecoratedCobordism {
        let mut keyed: Vec<(ComponentKey, Label)> = self
            .genus
            .iter()
            .map(|(k, g)| ((self.preimage1(k), self.preimage2(k), *g), k.clone()))
            .collect();
        keyed.sort();
        let rename: BTreeMap<Label, Label> = keyed
            .into_iter()
            .enumerate()
            .map(|(i, (_, k))| (k, format!("k{i}")))
            .collect();
        DecoratedCobordism {
            inputs: self.inputs.clone(),
            outputs: self.outputs.clone(),
            genus: self.genus.iter().map(|(k, g)| (rename[k].clone(), *g)).collect(),
            phi1: self.phi1.iter().map(|(j, k)| (j.clone(), rename[k].clone())).collect(),
            phi2: self.phi2.iter().map(|(j, k)| (j.clone(), rename[k].clone())).collect(),
        }
    }

    pub fn is_isomorphic(&self, other: &DecoratedCobordism) -> bool {
        self.canonical() == other.canonical()
    }

    /// Forgets the genus.
    pub fn to_tensor(&self) -> BimoduleObject {
        BimoduleObject {
            j1: self.inputs.clone(),
            j2: self.outputs.clone(),
            k: self.genus.keys().cloned().collect(),
            phi1: self.phi1.clone(),
            phi2: self.phi2.clone(),
        }
    }

    pub fn apply_two_step(&self, s: &TwoStep) -> Result<DecoratedCobordism> {
        let mut next = self.clone();
        match s {
            TwoStep::DeltaK {
                k,
                new_label,
                genus_kept,
                genus_new,
                moved_in,
                moved_out,
            } => {
                let g = *self
                    .genus
                    .get(k)
                    .ok_or_else(|| structure(format!("Δ: no component {k}")))?;
                if genus_kept + genus_new != g {
                    return Err(structure(format!(
                        "Δ: genus split {genus_kept}+{genus_new} differs from {g}"
                    )));
                }
                if self.genus.contains_key(new_label) {
                    return Err(structure(format!("Δ: label {new_label} already in use")));
                }
                for j in moved_in {
                    if self.phi1.get(j) != Some(k) {
                        return Err(structure(format!("Δ: input {j} is not on {k}")));
                    }
                    next.phi1.insert(j.clone(), new_label.clone());
                }
                for j in moved_out {
                    if self.phi2.get(j) != Some(k) {
                        return Err(structure(format!("Δ: output {j} is not on {k}")));
                    }
                    next.phi2.insert(j.clone(), new_label.clone());
                }
                next.genus.insert(k.clone(), *genus_kept);
                next.genus.insert(new_label.clone(), *genus_new);
            }
            TwoStep::KK { k } => match self.genus.get(k) {
                Some(&g) if g > 0 => {
                    next.genus.insert(k.clone(), g - 1);
                }
                Some(_) => return Err(structure(format!("𝔨: component {k} has genus 0"))),
                None => return Err(structure(format!("𝔨: no component {k}"))),
            },
            TwoStep::EpsK { k } => {
                if self.genus.get(k) != Some(&0) || !self.is_closed(k) {
                    return Err(structure(format!("ε: {k} is not a closed sphere")));
                }
                next.genus.remove(k);
            }
            TwoStep::Pi { k1, k2 } => {
                let (g1, g2) = (self.genus.get(k1), self.genus.get(k2));
                if g1.is_none() || g1 != g2 || !self.is_closed(k1) || !self.is_closed(k2) {
                    return Err(structure(format!(
                        "π: {k1} and {k2} must be closed components of equal genus"
                    )));
                }
            }
        }
        Ok(next)
    }

    /// Pushes a step on `self` through glueing with `other`.
    pub fn whisker(&self, s: &TwoStep, other: &DecoratedCobordism, side: Side) -> Result<TwoStep> {
        let after = self.apply_two_step(s)?;
        let (before_merge, before) = self.glue_with(other, side)?;
        let (after_merge, after_c) = after.glue_with(other, side)?;
        let class_before = |k: &str| -> Label {
            match side {
                Side::Above => before_merge.class_of_bottom(k).clone(),
                Side::Below => before_merge.class_of_top(k).clone(),
            }
        };
        let class_after = |k: &str| -> Label {
            match side {
                Side::Above => after_merge.class_of_bottom(k).clone(),
                Side::Below => after_merge.class_of_top(k).clone(),
            }
        };
        Ok(match s {
            TwoStep::KK { k } => TwoStep::KK { k: class_before(k) },
            TwoStep::EpsK { k } => TwoStep::EpsK { k: class_before(k) },
            TwoStep::Pi { k1, k2 } => TwoStep::Pi {
                k1: class_before(k1),
                k2: class_before(k2),
            },
            TwoStep::DeltaK { k, new_label, .. } => {
                let (ck, cn) = (class_after(k), class_after(new_label));
                if ck == cn {
                    TwoStep::KK { k: class_before(k) }
                } else {
                    let mut fresh = cn.clone();
                    while before.genus.contains_key(&fresh) {
                        fresh.push('#');
                    }
                    TwoStep::DeltaK {
                        k: class_before(k),
                        new_label: fresh,
                        genus_kept: after_c.genus[&ck],
                        genus_new: after_c.genus[&cn],
                        moved_in: after_c.preimage1(&cn),
                        moved_out: after_c.preimage2(&cn),
                    }
                }
            }
        })
    }

    /// Composite with `other` placed above or below `self`.
    pub fn glue_with(&self, other: &DecoratedCobordism, side: Side) -> Result<(Merge, DecoratedCobordism)> {
        let (top, bottom) = match side {
            Side::Above => (other, self),
            Side::Below => (self, other),
        };
        if top.inputs != bottom.outputs {
            return Err(structure("cannot compose: boundaries do not match"));
        }
        let merge = Merge::compute(
            &bottom.genus.keys().cloned().collect(),
            &bottom.phi2,
            &top.genus.keys().cloned().collect(),
            &top.phi1,
        )?;
        let c = DecoratedCobordism::from_merge(top, bottom, &merge);
        Ok((merge, c))
    }

    /// `⊗_k d_{b(k)} ∘ 𝔨^{ψ(k)} ∘ m_{a(k)}`.
    pub fn tqft_eval(&self, alg: &FrobeniusAlgebra) -> Result<LinMap> {
        self.evaluate(alg, true)
    }

    /// As [`tqft_eval`](Self::tqft_eval) with `𝔨` replaced by the identity.
    pub fn tqft_tilde(&self, alg: &FrobeniusAlgebra) -> Result<LinMap> {
        self.evaluate(alg, false)
    }

    fn evaluate(&self, alg: &FrobeniusAlgebra, handles: bool) -> Result<LinMap> {
        let r = alg.rank();
        let mut parts = Vec::new();
        for (k, &g) in &self.genus {
            let ins = self.preimage1(k);
            let outs = self.preimage2(k);
            let mid = if handles { alg.handle_pow(g as usize) } else { alg.id() };
            let m = alg.d_n(outs.len()).mul(&mid)?.mul(&alg.m_n(ins.len()))?;
            parts.push(LinMap::from_positional(m, r, &ins, &outs)?);
        }
        LinMap::tensor_all(alg.ring(), r, &parts)
    }

    /// The inclusions `j_1: V^{⊗J1} → V^{⊗K}` and `j_2: V^{⊗J2} → V^{⊗K}`.
    pub fn inclusions(&self, alg: &FrobeniusAlgebra) -> Result<(LinMap, LinMap)> {
        let k: BTreeSet<Label> = self.genus.keys().cloned().collect();
        let o1 = TensorObject {
            j: self.inputs.clone(),
            k: k.clone(),
            phi: self.phi1.clone(),
        };
        let o2 = TensorObject {
            j: self.outputs.clone(),
            k,
            phi: self.phi2.clone(),
        };
        Ok((inclusion(alg, &o1)?, inclusion(alg, &o2)?))
    }
}

/// Where the other cobordism sits relative to the one carrying the step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

/// Compression steps between decorated cobordisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TwoStep {
    /// Separating compression of `k` into `k` and `new_label`.
    DeltaK {
        k: Label,
        new_label: Label,
        genus_kept: u32,
        genus_new: u32,
        moved_in: Vec<Label>,
        moved_out: Vec<Label>,
    },
    /// Non-separating compression, lowering the genus of `k` by one.
    KK { k: Label },
    /// Capping a closed sphere.
    EpsK { k: Label },
    /// Swapping two closed components of equal genus.
    Pi { k1: Label, k2: Label },
}

impl TwoStep {
    /// The corresponding elementary morphism (genus data is dropped).
    pub fn to_elementary(&self) -> ElementaryMorphism {
        match self {
            TwoStep::DeltaK {
                k,
                new_label,
                moved_in,
                moved_out,
                ..
            } => ElementaryMorphism::Split {
                r: k.clone(),
                moved: moved_in
                    .iter()
                    .map(|j| format!("{IN_TAG}{j}"))
                    .chain(moved_out.iter().map(|j| format!("{OUT_TAG}{j}")))
                    .collect(),
                new_label: new_label.clone(),
            },
            TwoStep::KK { k } => ElementaryMorphism::Handle { r: k.clone() },
            TwoStep::EpsK { k } => ElementaryMorphism::Kill { k: k.clone() },
            TwoStep::Pi { k1, k2 } => ElementaryMorphism::Permute {
                perm: if k1 == k2 {
                    BTreeMap::from([(k1.clone(), k1.clone())])
                } else {
                    BTreeMap::from([(k1.clone(), k2.clone()), (k2.clone(), k1.clone())])
                },
            },
        }
    }
}

pub fn step_to_map(s: &TwoStep) -> ElementaryMorphism {
    s.to_elementary()
}

/// Realizes a sequence of steps on `start` as a map of the underlying tensor objects.
pub fn realize_steps(
    alg: &FrobeniusAlgebra,
    start: &DecoratedCobordism,
    steps: &[TwoStep],
) -> Result<(DecoratedCobordism, LinMap)> {
    let mut c = start.clone();
    let mut map = LinMap::identity(alg.ring(), alg.rank(), &start.to_tensor().k_labels());
    for (index, s) in steps.iter().enumerate() {
        let wrap = |e: Error| Error::InvalidStep {
            index,
            reason: e.to_string(),
        };
        let next = c.apply_two_step(s).map_err(wrap)?;
        let m = c.to_tensor().apply(alg, &s.to_elementary()).map_err(wrap)?;
        map = m.map.compose(&map)?;
        c = next;
    }
    Ok((c, map))
}

/// The pairing adjoint `L^* = G_dom^{-1} L^T G_cod`.
pub fn dualize(alg: &FrobeniusAlgebra, l: &LinMap) -> Result<LinMap> {
    let gram = alg.gram();
    let ginv = inverse(&gram).map_err(|_| Error::DegeneratePairing(alg.ring().to_string()))?;
    let g_cod: SparseMatrix = tensor_power(&gram, l.cod().len());
    let ginv_dom = tensor_power(&ginv, l.dom().len());
    let m = ginv_dom.mul(&l.matrix().transpose())?.mul(&g_cod)?;
    LinMap::from_positional(m, alg.rank(), l.cod(), l.dom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::builtin;
    use bnskein_exact::{Ring, Scalar};

    fn pants() -> DecoratedCobordism {
        DecoratedCobordism::build(&["a"], &["b", "c"], &[("p", 0, &["a"], &["b", "c"])]).unwrap()
    }

    fn copants() -> DecoratedCobordism {
        DecoratedCobordism::build(&["b", "c"], &["d"], &[("q", 0, &["b", "c"], &["d"])]).unwrap()
    }

    #[test]
    fn composition_genus() {
        let cyl = DecoratedCobordism::identity(&["a".into()]);
        let c2 = DecoratedCobordism::compose(&cyl, &cyl).unwrap();
        assert_eq!(c2.genus.values().copied().collect::<Vec<_>>(), [0]);

        let torus = DecoratedCobordism::compose(&copants(), &pants()).unwrap();
        assert_eq!(torus.genus.len(), 1);
        assert_eq!(torus.genus.values().copied().collect::<Vec<_>>(), [1]);

        let g1 = DecoratedCobordism::build(&["a"], &["b"], &[("x", 1, &["a"], &["b"])]).unwrap();
        let g2 = DecoratedCobordism::build(&["b"], &["c"], &[("y", 2, &["b"], &["c"])]).unwrap();
        let g3 = DecoratedCobordism::compose(&g2, &g1).unwrap();
        assert_eq!(g3.genus.values().copied().collect::<Vec<_>>(), [3]);
    }

    #[test]
    fn identity_is_a_unit() {
        let p = pants();
        let left = DecoratedCobordism::compose(&DecoratedCobordism::identity(&["b".into(), "c".into()]), &p).unwrap();
        let right = DecoratedCobordism::compose(&p, &DecoratedCobordism::identity(&["a".into()])).unwrap();
        assert!(left.is_isomorphic(&p));
        assert!(right.is_isomorphic(&p));
        assert!(DecoratedCobordism::identity(&[]).genus.is_empty());
    }

    #[test]
    fn tqft_examples() {
        let v = builtin("khovanov").unwrap();
        let sphere = DecoratedCobordism::build(&[], &[], &[("s", 0, &[], &[])]).unwrap();
        assert!(sphere.tqft_eval(&v).unwrap().matrix().is_zero());
        let torus = DecoratedCobordism::build(&[], &[], &[("t", 1, &[], &[])]).unwrap();
        assert_eq!(
            torus.tqft_eval(&v).unwrap().matrix().get(0, 0),
            Scalar::from_int(&Ring::Integer, 2)
        );
        let glued = DecoratedCobordism::compose(&copants(), &pants()).unwrap();
        assert_eq!(glued.tqft_eval(&v).unwrap().matrix(), v.handle());
        let product = copants()
            .tqft_eval(&v)
            .unwrap()
            .compose(&pants().tqft_eval(&v).unwrap())
            .unwrap();
        assert_eq!(product.matrix(), v.handle());
    }

    #[test]
    fn tilde_is_dual_inclusion_composite() {
        let v = builtin("khovanov").unwrap();
        for c in [
            DecoratedCobordism::identity(&["a".into()]),
            pants(),
            DecoratedCobordism::build(&["a"], &["b"], &[("x", 3, &["a"], &["b"])]).unwrap(),
        ] {
            let (j1, j2) = c.inclusions(&v).unwrap();
            let rhs = dualize(&v, &j2).unwrap().compose(&j1).unwrap();
            assert_eq!(c.tqft_tilde(&v).unwrap(), rhs);
        }
        assert_eq!(pants().tqft_tilde(&v).unwrap().matrix(), v.delta());
        let g3 = DecoratedCobordism::build(&["a"], &["b"], &[("x", 3, &["a"], &["b"])]).unwrap();
        assert!(g3.tqft_tilde(&v).unwrap().matrix().is_identity());
    }

    #[test]
    fn steps_on_cobordisms() {
        let c = DecoratedCobordism::build(&["a"], &["b"], &[("x", 2, &["a"], &["b"])]).unwrap();
        let split = TwoStep::DeltaK {
            k: "x".into(),
            new_label: "y".into(),
            genus_kept: 2,
            genus_new: 0,
            moved_in: vec![],
            moved_out: vec![],
        };
        let kill = TwoStep::EpsK { k: "y".into() };
        let back = c.apply_two_step(&split).unwrap().apply_two_step(&kill).unwrap();
        assert_eq!(back, c);

        // 𝔨 then Δ versus Δ then 𝔨 on either offspring
        let split11 = |kept, new| TwoStep::DeltaK {
            k: "x".into(),
            new_label: "y".into(),
            genus_kept: kept,
            genus_new: new,
            moved_in: vec![],
            moved_out: vec!["b".into()],
        };
        let a = c
            .apply_two_step(&TwoStep::KK { k: "x".into() })
            .unwrap()
            .apply_two_step(&split11(1, 0))
            .unwrap();
        let b = c
            .apply_two_step(&split11(1, 1))
            .unwrap()
            .apply_two_step(&TwoStep::KK { k: "y".into() })
            .unwrap();
        assert_eq!(a, b);

        let tori = DecoratedCobordism::build(&[], &[], &[("s", 1, &[], &[]), ("t", 1, &[], &[])]).unwrap();
        let swapped = tori
            .apply_two_step(&TwoStep::Pi {
                k1: "s".into(),
                k2: "t".into(),
            })
            .unwrap();
        assert_eq!(swapped, tori);
        assert!(c.apply_two_step(&TwoStep::EpsK { k: "x".into() }).is_err());
    }

    #[test]
    fn whisker_merging_split_becomes_handle() {
        // a pants split of a single component whose two legs get capped by one copants
        let c = DecoratedCobordism::build(&["a"], &["b", "c"], &[("p", 0, &["a"], &["b", "c"])]).unwrap();
        let c_with_genus = DecoratedCobordism::build(&["a"], &["b", "c"], &[("p", 1, &["a"], &["b", "c"])]).unwrap();
        let split = TwoStep::DeltaK {
            k: "p".into(),
            new_label: "n".into(),
            genus_kept: 1,
            genus_new: 0,
            moved_in: vec![],
            moved_out: vec!["c".into()],
        };
        let w = c_with_genus.whisker(&split, &copants(), Side::Above).unwrap();
        assert!(matches!(w, TwoStep::KK { .. }));
        let (_, composite) = c_with_genus.glue_with(&copants(), Side::Above).unwrap();
        let lhs = composite.apply_two_step(&w).unwrap();
        let rhs = DecoratedCobordism::compose(&copants(), &c_with_genus.apply_two_step(&split).unwrap()).unwrap();
        assert!(lhs.is_isomorphic(&rhs));

        // untouched component: stays a split
        let closed = DecoratedCobordism::build(
            &["a"],
            &["b", "c"],
            &[("p", 0, &["a"], &["b", "c"]), ("z", 2, &[], &[])],
        )
        .unwrap();
        let s2 = TwoStep::DeltaK {
            k: "z".into(),
            new_label: "z2".into(),
            genus_kept: 1,
            genus_new: 1,
            moved_in: vec![],
            moved_out: vec![],
        };
        let w2 = closed.whisker(&s2, &copants(), Side::Above).unwrap();
        assert!(matches!(w2, TwoStep::DeltaK { .. }));
        let _ = c;
    }
}
