use std::collections::BTreeMap;

use bnskein::frobenius::{builtin, decode, FrobeniusAlgebra};
use bnskein::tensor::{
    act, apply_elementary, glue_morphisms, realize, BimoduleMorphism, BimoduleObject, ElementaryMorphism, Label,
    TensorObject, TensorVector,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALGEBRAS: [&str; 3] = ["khovanov", "homology_s2", "universal_quadratic"];

fn random_object(rng: &mut ChaCha8Rng, prefix: &str) -> TensorObject {
    let nk = rng.gen_range(1..=3);
    let nj = rng.gen_range(0..=3);
    let ks: Vec<Label> = (0..nk).map(|i| format!("{prefix}k{i}")).collect();
    let phi: BTreeMap<Label, Label> = (0..nj)
        .map(|i| (format!("j{i}"), ks[rng.gen_range(0..nk)].clone()))
        .collect();
    TensorObject {
        j: phi.keys().cloned().collect(),
        k: ks.into_iter().collect(),
        phi,
    }
}

/// A random elementary morphism valid on `obj`, or `None` once every component has been killed.
fn random_step(rng: &mut ChaCha8Rng, obj: &TensorObject, fresh: &str) -> Option<ElementaryMorphism> {
    let ks = obj.k_labels();
    if ks.is_empty() {
        return None;
    }
    let image = obj.image();
    let closed: Vec<Label> = ks.iter().filter(|k| !image.contains(*k)).cloned().collect();
    loop {
        match rng.gen_range(0..4) {
            0 => {
                let r = ks.choose(rng).unwrap().clone();
                let moved = obj.preimage(&r).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
                return Some(ElementaryMorphism::Split {
                    r,
                    moved,
                    new_label: fresh.to_string(),
                });
            }
            1 => {
                return Some(ElementaryMorphism::Handle {
                    r: ks.choose(rng).unwrap().clone(),
                })
            }
            2 if !closed.is_empty() => {
                return Some(ElementaryMorphism::Kill {
                    k: closed.choose(rng).unwrap().clone(),
                })
            }
            3 if closed.len() >= 2 => {
                let mut shuffled = closed.clone();
                shuffled.shuffle(rng);
                return Some(ElementaryMorphism::Permute {
                    perm: closed.iter().cloned().zip(shuffled).collect(),
                });
            }
            _ => continue,
        }
    }
}

fn basis_vectors(alg: &FrobeniusAlgebra, labels: &[Label]) -> Vec<TensorVector> {
    let r = alg.rank();
    (0..r.pow(labels.len() as u32))
        .map(|i| {
            let idx = decode(i, r, labels.len());
            TensorVector::basis(alg.ring(), &labels.iter().cloned().zip(idx).collect())
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Realized paths are maps of `V^{⊗J}`-modules.
    #[test]
    fn elementary_paths_are_module_maps(seed in any::<u64>(), which in 0usize..3) {
        let alg = builtin(ALGEBRAS[which]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let start = random_object(&mut rng, "");
        let mut obj = start.clone();
        let mut path = Vec::new();
        for s in 0..rng.gen_range(1..=3) {
            let Some(step) = random_step(&mut rng, &obj, &format!("n{s}")) else { break };
            obj = apply_elementary(&alg, &obj, &step).unwrap().0;
            path.push(step);
        }
        let (end, map) = realize(&alg, &start, &path).unwrap();
        prop_assert_eq!(&end, &obj);
        for v in basis_vectors(&alg, &start.j_labels()) {
            for w in basis_vectors(&alg, &start.k_labels()) {
                let lhs = map.apply(&act(&alg, &start, &v, &w).unwrap()).unwrap();
                let rhs = act(&alg, &end, &v, &map.apply(&w).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    /// Splitting off `A` and swapping the two factors is splitting off the complement of `A`.
    #[test]
    fn split_is_symmetric(seed in any::<u64>(), which in 0usize..3) {
        let alg = builtin(ALGEBRAS[which]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let obj = random_object(&mut rng, "");
        let r = obj.k_labels().choose(&mut rng).unwrap().clone();
        let pre = obj.preimage(&r);
        let moved: Vec<Label> = pre.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let rest: Vec<Label> = pre.iter().filter(|j| !moved.contains(j)).cloned().collect();
        let split = |m: Vec<Label>| ElementaryMorphism::Split { r: r.clone(), moved: m, new_label: "new".into() };
        let (o1, m1) = apply_elementary(&alg, &obj, &split(moved)).unwrap();
        let (o2, m2) = apply_elementary(&alg, &obj, &split(rest)).unwrap();
        let swap: BTreeMap<Label, Label> = [(r.clone(), "new".to_string()), ("new".to_string(), r.clone())].into();
        prop_assert_eq!(m1.rename(&BTreeMap::new(), &swap).unwrap(), m2);
        let swapped_phi: BTreeMap<Label, Label> = o1.phi.iter().map(|(j, k)| (j.clone(), swap.get(k).cloned().unwrap_or_else(|| k.clone()))).collect();
        prop_assert_eq!(swapped_phi, o2.phi);
    }
}

fn random_bimodule(rng: &mut ChaCha8Rng, j1: &[Label], j2: &[Label], prefix: &str) -> BimoduleObject {
    let nk = rng.gen_range(1..=3);
    let ks: Vec<Label> = (0..nk).map(|i| format!("{prefix}{i}")).collect();
    let mut pick = |js: &[Label]| -> BTreeMap<Label, Label> {
        js.iter()
            .map(|j| (j.clone(), ks[rng.gen_range(0..nk)].clone()))
            .collect()
    };
    let phi1 = pick(j1);
    let phi2 = pick(j2);
    BimoduleObject {
        j1: j1.iter().cloned().collect(),
        j2: j2.iter().cloned().collect(),
        k: ks.iter().cloned().collect(),
        phi1,
        phi2,
    }
}

fn random_morphism(alg: &FrobeniusAlgebra, rng: &mut ChaCha8Rng, dom: &BimoduleObject, tag: &str) -> BimoduleMorphism {
    let mut m = BimoduleMorphism::identity(alg, dom);
    for s in 0..rng.gen_range(0..=2) {
        let obj = m.cod.to_tensor_object().unwrap();
        let Some(step) = random_step(rng, &obj, &format!("{tag}{s}")) else {
            break;
        };
        let next = m.cod.apply(alg, &step).unwrap();
        m = next.compose(&m).unwrap();
    }
    m
}

fn labels(prefix: &str, n: usize) -> Vec<Label> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Glueing respects composition: glue(g2∘g1, f2∘f1) = glue(g2, f2)∘glue(g1, f1).
    #[test]
    fn glueing_is_functorial(seed in any::<u64>(), which in 0usize..3) {
        let alg = builtin(ALGEBRAS[which]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (j1, j2, j3) = (
            labels("a", rng.gen_range(0..=2)),
            labels("b", rng.gen_range(1..=3)),
            labels("c", rng.gen_range(0..=2)),
        );
        let bottom = random_bimodule(&mut rng, &j1, &j2, "x");
        let top = random_bimodule(&mut rng, &j2, &j3, "y");
        let f1 = random_morphism(&alg, &mut rng, &bottom, "f");
        let f2 = random_morphism(&alg, &mut rng, &f1.cod, "ff");
        let g1 = random_morphism(&alg, &mut rng, &top, "g");
        let g2 = random_morphism(&alg, &mut rng, &g1.cod, "gg");
        let whole = glue_morphisms(&alg, &g2.compose(&g1).unwrap(), &f2.compose(&f1).unwrap()).unwrap();
        let h1 = glue_morphisms(&alg, &g1, &f1).unwrap();
        let h2 = glue_morphisms(&alg, &g2, &f2).unwrap();
        prop_assert_eq!(whole, h2.compose(&h1).unwrap());
    }

    /// Glueing identities gives the identity.
    #[test]
    fn glueing_identities(seed in any::<u64>()) {
        let alg = builtin("khovanov").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (j1, j2, j3) = (labels("a", 2), labels("b", 2), labels("c", 1));
        let bottom = random_bimodule(&mut rng, &j1, &j2, "x");
        let top = random_bimodule(&mut rng, &j2, &j3, "y");
        let h = glue_morphisms(&alg, &BimoduleMorphism::identity(&alg, &top), &BimoduleMorphism::identity(&alg, &bottom)).unwrap();
        prop_assert!(h.map.matrix().is_identity());
    }
}
